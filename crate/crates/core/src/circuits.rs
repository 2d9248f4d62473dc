//! Labelled graphs read as networks of linear resistors.
//!
//! The power of a network at potential `ψ` is
//! `Q(ψ) = Σ_e (ψ(t e) − ψ(s e))² / r(e)`, and the states a network permits
//! are the pairs `(φ, ∇Q_φ)`. Since `Q` carries no factor ½, `∇Q_φ = 2Lφ`
//! for the conductance-weighted Laplacian `L`.

use std::marker::PhantomData;

use crate::dcospan::DecoratedCospan;
use crate::decoration::DecorationTransformation;
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSet, UnionFind};
use crate::graphdec::{GraphFunctor, LabeledGraph};
use crate::linrel::{restrict_along, subspace_equal, LinSubFunctor, Matrix, Subspace};
use crate::scalar::Scalar;

fn check_len<T: Scalar>(g: &LabeledGraph<T>, v: &[T]) -> Result<()> {
    if v.len() != g.vertices().size() {
        return Err(Error::DimensionMismatch { expected: g.vertices().size(), found: v.len() });
    }
    Ok(())
}

pub fn power<T: Scalar>(g: &LabeledGraph<T>, psi: &[T]) -> Result<T> {
    check_len(g, psi)?;
    Ok(g.edges().iter().fold(T::zero(), |acc, e| {
        let drop = psi[e.tgt].clone() - psi[e.src].clone();
        acc + drop.clone() * drop / e.label.clone()
    }))
}

/// `∇Q_φ`, the net current flowing out of each vertex.
pub fn grad_power<T: Scalar>(g: &LabeledGraph<T>, phi: &[T]) -> Result<Vec<T>> {
    check_len(g, phi)?;
    let two = T::from_int(2);
    let mut out = vec![T::zero(); phi.len()];
    for e in g.edges() {
        let current = two.clone() * (phi[e.tgt].clone() - phi[e.src].clone()) / e.label.clone();
        out[e.tgt] = out[e.tgt].clone() + current.clone();
        out[e.src] = out[e.src].clone() - current;
    }
    Ok(out)
}

/// Conductance-weighted Laplacian: symmetric, zero row sums.
pub fn laplacian<T: Scalar>(g: &LabeledGraph<T>) -> Matrix<T> {
    let n = g.vertices().size();
    let mut l = Matrix::<T>::zeros(n, n);
    for e in g.edges().iter().filter(|e| e.src != e.tgt) {
        let c = T::one() / e.label.clone();
        let (s, t) = (e.src, e.tgt);
        l[(s, s)] = l[(s, s)].clone() + c.clone();
        l[(t, t)] = l[(t, t)].clone() + c.clone();
        l[(s, t)] = l[(s, t)].clone() - c.clone();
        l[(t, s)] = l[(t, s)].clone() - c;
    }
    l
}

/// The states `{(φ, ∇Q_φ)}` permitted by Ohm's law: the row space of `(I | 2L)`.
pub fn res_component<T: Scalar>(g: &LabeledGraph<T>) -> Subspace<T> {
    ohmic_states(&laplacian(g))
}

/// Row space of `(I | 2L)` for a square `L`.
pub fn ohmic_states<T: Scalar>(l: &Matrix<T>) -> Subspace<T> {
    let n = l.rows();
    let two_l = l.scale(&T::from_int(2));
    let mut m = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        m[(i, i)] = T::one();
        for j in 0..n {
            m[(i, n + j)] = two_l[(i, j)].clone();
        }
    }
    Subspace::span(&m)
}

/// Resistor semantics as a transformation from graphs to state spaces.
#[derive(Debug, Clone, Copy)]
pub struct Res<T> {
    graphs: GraphFunctor<T>,
    states: LinSubFunctor<T>,
    _scalar: PhantomData<fn() -> T>,
}

impl<T> Default for Res<T> {
    fn default() -> Self {
        Res { graphs: GraphFunctor::default(), states: LinSubFunctor::default(), _scalar: PhantomData }
    }
}

impl<T> Res<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> DecorationTransformation for Res<T> {
    type Source = GraphFunctor<T>;
    type Target = LinSubFunctor<T>;

    fn source(&self) -> &GraphFunctor<T> {
        &self.graphs
    }

    fn target(&self) -> &LinSubFunctor<T> {
        &self.states
    }

    fn component(&self, n: FinSet, g: &LabeledGraph<T>) -> Result<Subspace<T>> {
        if g.vertices() != n {
            return Err(Error::CarrierViolation {
                apex: n.size(),
                reason: format!("graph has {} vertices", g.vertices()),
            });
        }
        Ok(res_component(g))
    }
}

/// Boundary behaviour of a state-space decorated cospan on `X + Y`.
pub fn state_behavior<T: Scalar>(d: &DecoratedCospan<Subspace<T>>) -> Result<Subspace<T>> {
    restrict_along(&d.cospan.boundary(), &d.decoration)
}

/// Boundary states of an open circuit: potentials and currents on `X + Y`
/// that extend to the whole network obeying Ohm's law everywhere and
/// Kirchhoff's current law at interior vertices.
pub fn behavior<T: Scalar>(d: &DecoratedCospan<LabeledGraph<T>>) -> Result<Subspace<T>> {
    restrict_along(&d.cospan.boundary(), &res_component(&d.decoration))
}

pub fn behavior_equivalent<T: Scalar>(
    a: &DecoratedCospan<LabeledGraph<T>>,
    b: &DecoratedCospan<LabeledGraph<T>>,
) -> Result<bool> {
    for (x, y) in [(a.left_foot(), b.left_foot()), (a.right_foot(), b.right_foot())] {
        if x != y {
            return Err(Error::MismatchedBoundary { expected: x.size(), found: y.size() });
        }
    }
    subspace_equal(&behavior(a)?, &behavior(b)?)
}

/// Nodal analysis of a network seen through `boundary: B -> N`, without any
/// cospan machinery.
///
/// Interior vertices connected (through interior vertices) to the boundary
/// are eliminated by a Schur complement of `2L`; interior components with no
/// path to the boundary float freely and carry no current, so they drop out.
/// Several boundary points on one vertex share its potential and split its
/// current arbitrarily.
pub fn oracle_nodal<T: Scalar>(g: &LabeledGraph<T>, boundary: &FinFunction) -> Result<Subspace<T>> {
    let n = g.vertices().size();
    if boundary.cod().size() != n {
        return Err(Error::MismatchedBoundary { expected: n, found: boundary.cod().size() });
    }
    let b = boundary.dom().size();
    let fibers = boundary.fibers();
    let terminals: Vec<usize> = (0..n).filter(|&v| !fibers[v].is_empty()).collect();
    let is_terminal: Vec<bool> = fibers.iter().map(|f| !f.is_empty()).collect();

    let mut components = UnionFind::new(n);
    for e in g.edges() {
        if !is_terminal[e.src] && !is_terminal[e.tgt] {
            components.union(e.src, e.tgt);
        }
    }
    let mut grounded = vec![false; n];
    for e in g.edges() {
        for (inner, outer) in [(e.src, e.tgt), (e.tgt, e.src)] {
            if !is_terminal[inner] && is_terminal[outer] {
                let root = components.find(inner);
                grounded[root] = true;
            }
        }
    }
    let interior: Vec<usize> = (0..n)
        .filter(|&v| !is_terminal[v])
        .filter(|&v| {
            let root = components.find(v);
            grounded[root]
        })
        .collect();

    let k = laplacian(g).scale(&T::from_int(2));
    let a = k.select(&terminals, &terminals);
    let schur = if interior.is_empty() {
        a
    } else {
        let coupling = k.select(&terminals, &interior);
        let inner = k.select(&interior, &interior);
        let inv = inner
            .inverse()
            .expect("grounded Laplacian blocks of positive conductances are nonsingular");
        let correction = coupling.mul(&inv)?.mul(&coupling.transpose())?;
        let mut s = a;
        for i in 0..terminals.len() {
            for j in 0..terminals.len() {
                s[(i, j)] = s[(i, j)].clone() - correction[(i, j)].clone();
            }
        }
        s
    };

    let mut rows = Matrix::zeros(0, 2 * b);
    for (p, &v) in terminals.iter().enumerate() {
        let mut row = vec![T::zero(); 2 * b];
        for &w in &fibers[v] {
            row[w] = T::one();
        }
        for (q, &u) in terminals.iter().enumerate() {
            row[b + fibers[u][0]] = schur[(q, p)].clone();
        }
        rows.push_row(row)?;
    }
    for &v in &terminals {
        let first = fibers[v][0];
        for &w in &fibers[v][1..] {
            let mut row = vec![T::zero(); 2 * b];
            row[b + w] = T::one();
            row[b + first] = -T::one();
            rows.push_row(row)?;
        }
    }
    Ok(Subspace::span(&rows))
}
