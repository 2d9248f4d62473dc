//! Finite directed multigraphs with positive edge labels, as decorations.
//!
//! A graph on `N` pushes forward along `f: N -> M` by relabelling edge
//! endpoints; disjoint union is the lax monoidal structure.

use std::cmp::Ordering;
use std::marker::PhantomData;

use crate::decoration::DecorationFunctor;
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSet};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    pub src: usize,
    pub tgt: usize,
    pub label: T,
}

impl<T: Scalar> Edge<T> {
    pub fn new(src: usize, tgt: usize, label: T) -> Self {
        Edge { src, tgt, label }
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        (self.src, self.tgt)
            .cmp(&(other.src, other.tgt))
            .then_with(|| self.label.partial_cmp(&other.label).unwrap_or(Ordering::Equal))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph<T> {
    vertices: FinSet,
    edges: Vec<Edge<T>>,
}

impl<T: Scalar> LabeledGraph<T> {
    pub fn new(vertices: FinSet, edges: Vec<Edge<T>>) -> Result<Self> {
        let g = LabeledGraph { vertices, edges };
        g.validate()?;
        Ok(g)
    }

    /// The edgeless graph.
    pub fn empty(vertices: FinSet) -> Self {
        LabeledGraph { vertices, edges: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let size = self.vertices.size();
        for e in &self.edges {
            for index in [e.src, e.tgt] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            if !e.label.is_positive_value() {
                return Err(Error::NonPositiveLabel(e.label.to_string()));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn vertices(&self) -> FinSet {
        self.vertices
    }

    #[inline]
    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    /// Edges sorted by `(src, tgt, label)`.
    pub fn sorted_edges(&self) -> Vec<Edge<T>> {
        let mut edges = self.edges.clone();
        edges.sort_by(Edge::cmp_key);
        edges
    }

    /// The same graph with its edge list sorted.
    pub fn canonical(&self) -> Self {
        LabeledGraph { vertices: self.vertices, edges: self.sorted_edges() }
    }

    /// Pushes the graph forward along `f`.
    pub fn map(&self, f: &FinFunction) -> Result<Self> {
        if f.dom() != self.vertices {
            return Err(Error::MismatchedBoundary {
                expected: self.vertices.size(),
                found: f.dom().size(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { src: f.apply(e.src), tgt: f.apply(e.tgt), label: e.label.clone() })
            .collect();
        Ok(LabeledGraph { vertices: f.cod(), edges })
    }

    /// Disjoint union; edges of `other` follow, shifted past `self`'s vertices.
    pub fn tensor(&self, other: &Self) -> Self {
        let shift = self.vertices.size();
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(other.edges.iter().map(|e| Edge {
                src: e.src + shift,
                tgt: e.tgt + shift,
                label: e.label.clone(),
            }))
            .collect();
        LabeledGraph { vertices: self.vertices.plus(other.vertices), edges }
    }

    pub fn unit() -> Self {
        LabeledGraph::empty(FinSet::EMPTY)
    }

    /// Equality of edge multisets on a shared vertex set.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        if self.vertices != other.vertices {
            return Err(Error::MismatchedBoundary {
                expected: self.vertices.size(),
                found: other.vertices.size(),
            });
        }
        Ok(self.edges.len() == other.edges.len() && self.sorted_edges() == other.sorted_edges())
    }
}

/// The graph decoration functor.
#[derive(Debug, Clone, Copy)]
pub struct GraphFunctor<T>(PhantomData<fn() -> T>);

impl<T> Default for GraphFunctor<T> {
    fn default() -> Self {
        GraphFunctor(PhantomData)
    }
}

impl<T> GraphFunctor<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> DecorationFunctor for GraphFunctor<T> {
    type Decoration = LabeledGraph<T>;

    fn name(&self) -> &str {
        "graph"
    }

    fn support(&self, d: &LabeledGraph<T>) -> FinSet {
        d.vertices
    }

    fn validate(&self, d: &LabeledGraph<T>) -> Result<()> {
        d.validate()
    }

    fn map_along(&self, f: &FinFunction, d: &LabeledGraph<T>) -> Result<LabeledGraph<T>> {
        d.map(f)
    }

    fn tensor(&self, a: &LabeledGraph<T>, b: &LabeledGraph<T>) -> LabeledGraph<T> {
        a.tensor(b)
    }

    fn unit(&self) -> LabeledGraph<T> {
        LabeledGraph::unit()
    }

    fn equal(&self, a: &LabeledGraph<T>, b: &LabeledGraph<T>) -> bool {
        a.equal(b).unwrap_or(false)
    }

    /// Out-degree, in-degree and self-loop count of every vertex.
    fn vertex_colors(&self, d: &LabeledGraph<T>) -> Option<Vec<u64>> {
        let mut counts = vec![(0u64, 0u64, 0u64); d.vertices.size()];
        for e in &d.edges {
            if e.src == e.tgt {
                counts[e.src].2 += 1;
            } else {
                counts[e.src].0 += 1;
                counts[e.tgt].1 += 1;
            }
        }
        Some(counts.into_iter().map(|(o, i, l)| (o << 42) | (i << 21) | l).collect())
    }

    fn empty_decoration(&self, n: FinSet) -> LabeledGraph<T> {
        LabeledGraph::empty(n)
    }
}
