//! Seeded random generators for finite sets, functions, cospans and the
//! shipped decorations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cospan::Cospan;
use crate::finset::{FinFunction, FinSet};
use crate::graphdec::{Edge, LabeledGraph};
use crate::linrel::Subspace;
use crate::scalar::Scalar;

pub fn set<R: Rng>(rng: &mut R, max: usize) -> FinSet {
    FinSet::new(rng.gen_range(0..=max)).expect("generator bounds are small")
}

/// A set of size between `min` and `max`.
pub fn set_between<R: Rng>(rng: &mut R, min: usize, max: usize) -> FinSet {
    FinSet::new(rng.gen_range(min..=max.max(min))).expect("generator bounds are small")
}

/// A uniformly random function; `cod` must be nonempty unless `dom` is.
pub fn function<R: Rng>(rng: &mut R, dom: FinSet, cod: FinSet) -> FinFunction {
    assert!(dom.is_empty() || !cod.is_empty(), "no functions into the empty set");
    let table = dom.elements().map(|_| rng.gen_range(0..cod.size())).collect();
    FinFunction::new(cod.size(), table).expect("values are in range")
}

/// A random function out of `dom` with a codomain of size at most `max_cod`
/// (bumped to 1 when needed).
pub fn function_from<R: Rng>(rng: &mut R, dom: FinSet, max_cod: usize) -> FinFunction {
    let min = usize::from(!dom.is_empty());
    let cod = set_between(rng, min, max_cod);
    function(rng, dom, cod)
}

pub fn permutation<R: Rng>(rng: &mut R, n: FinSet) -> FinFunction {
    let mut table: Vec<usize> = n.elements().collect();
    table.shuffle(rng);
    FinFunction::new(n.size(), table).expect("permutation is in range")
}

/// A random cospan with the given feet and an apex of size at most `max_apex`.
pub fn cospan_between<R: Rng>(rng: &mut R, x: FinSet, y: FinSet, max_apex: usize) -> Cospan {
    let min = usize::from(x.size() + y.size() > 0);
    let apex = set_between(rng, min, max_apex);
    Cospan::new(function(rng, x, apex), function(rng, y, apex)).expect("legs share the apex")
}

/// A random cospan with feet of size at most `max_foot`.
pub fn cospan<R: Rng>(rng: &mut R, max_foot: usize, max_apex: usize) -> Cospan {
    let x = set(rng, max_foot);
    let y = set(rng, max_foot);
    cospan_between(rng, x, y, max_apex)
}

/// A positive rational with small numerator and denominator.
pub fn positive<T: Scalar, R: Rng>(rng: &mut R) -> T {
    T::from_ratio(rng.gen_range(1..=9), rng.gen_range(1..=5))
}

/// A rational in `[-3, 3]` with small denominator, zero a third of the time.
pub fn small<T: Scalar, R: Rng>(rng: &mut R) -> T {
    if rng.gen_ratio(1, 3) {
        T::zero()
    } else {
        T::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2))
    }
}

/// A random labelled multigraph on `vertices` with at most `max_edges`
/// edges; self-loops included.
pub fn graph<T: Scalar, R: Rng>(rng: &mut R, vertices: FinSet, max_edges: usize) -> LabeledGraph<T> {
    if vertices.is_empty() {
        return LabeledGraph::empty(vertices);
    }
    let count = rng.gen_range(0..=max_edges);
    let edges = (0..count)
        .map(|_| Edge {
            src: rng.gen_range(0..vertices.size()),
            tgt: rng.gen_range(0..vertices.size()),
            label: positive(rng),
        })
        .collect();
    LabeledGraph::new(vertices, edges).expect("generated edges are valid")
}

/// A random subspace of `T^ambient` spanned by at most `max_dim` vectors.
pub fn subspace<T: Scalar, R: Rng>(rng: &mut R, ambient: usize, max_dim: usize) -> Subspace<T> {
    let count = rng.gen_range(0..=max_dim.min(ambient));
    let rows = (0..count)
        .map(|_| (0..ambient).map(|_| small(rng)).collect())
        .collect();
    Subspace::span_rows(ambient, rows).expect("rows have the ambient width")
}

/// A random decoration on `N` for the subspace decoration: ambient `2N`.
pub fn linsub<T: Scalar, R: Rng>(rng: &mut R, n: FinSet, max_dim: usize) -> Subspace<T> {
    subspace(rng, 2 * n.size(), max_dim)
}

/// A random potential/current vector.
pub fn vector<T: Scalar, R: Rng>(rng: &mut R, len: usize) -> Vec<T> {
    (0..len).map(|_| small(rng)).collect()
}
