//! Small named circuits used as regression fixtures.
//!
//! All of them are graph-decorated cospans with exact rational labels.

use crate::cospan::Cospan;
use crate::dcospan::DecoratedCospan;
use crate::finset::{FinFunction, FinSet};
use crate::graphdec::{Edge, LabeledGraph};
use crate::scalar::Scalar;
use crate::Rational;

pub type Circuit = DecoratedCospan<LabeledGraph<Rational>>;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn build(apex: usize, left: &[usize], right: &[usize], edges: &[(usize, usize, Rational)]) -> Circuit {
    let cospan = Cospan::new(
        FinFunction::new(apex, left.to_vec()).expect("fixture legs are in range"),
        FinFunction::new(apex, right.to_vec()).expect("fixture legs are in range"),
    )
    .expect("fixture legs share the apex");
    let edges = edges.iter().map(|(s, t, r)| Edge::new(*s, *t, r.clone())).collect();
    let decoration = LabeledGraph::new(FinSet::new(apex).expect("small"), edges).expect("fixture edges are valid");
    DecoratedCospan { cospan, decoration }
}

/// Vertices A, B, C; one input on A, both outputs on B.
pub fn gluing_first() -> Circuit {
    build(
        3,
        &[0],
        &[1, 1],
        &[(1, 0, q(1, 5)), (0, 1, q(13, 10)), (0, 2, q(4, 5)), (2, 1, q(2, 1))],
    )
}

/// Vertices A', B', C'; inputs on A' and C', outputs on B' and C'.
pub fn gluing_second() -> Circuit {
    build(3, &[0, 2], &[1, 2], &[(0, 1, q(17, 10)), (2, 1, q(3, 10))])
}

/// One resistor of resistance `r` from the input to the output.
pub fn single_edge(r: Rational) -> Circuit {
    build(2, &[0], &[1], &[(0, 1, r)])
}

/// Two resistors in series, as a composite of two single edges.
pub fn series(r1: Rational, r2: Rational) -> (Circuit, Circuit) {
    (single_edge(r1), single_edge(r2))
}

/// Two resistors in parallel between the input and the output.
pub fn parallel(r1: Rational, r2: Rational) -> Circuit {
    build(2, &[0], &[1], &[(0, 1, r1), (0, 1, r2)])
}

/// A triangle of unit resistors seen across two of its corners.
pub fn unit_triangle() -> Circuit {
    let one = q(1, 1);
    build(3, &[0], &[1], &[(0, 1, one.clone()), (1, 2, one.clone()), (2, 0, one)])
}

/// A single vertex carrying both the input and the output.
pub fn wire() -> Circuit {
    build(1, &[0], &[0], &[])
}
