//! Decorated cospan categories over finite sets.
//!
//! The kernel is generic over an exact scalar field ([`Scalar`]); the
//! aliases below fix it to arbitrary-precision rationals, which is what the
//! CLI and the shipped fixtures use.

pub mod circuits;
pub mod cospan;
pub mod dcospan;
pub mod decoration;
mod error;
pub mod finset;
pub mod fixtures;
pub mod gen;
pub mod graphdec;
pub mod linrel;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use cospan::{iso_search, Cospan, CospanIso, Frobenius, Structure};
pub use dcospan::{DecoratedCategory, DecoratedCospan, DecoratedIso};
pub use decoration::{DecorationFunctor, DecorationTransformation};
pub use finset::{FinFunction, FinSet};
pub use graphdec::{Edge, GraphFunctor, LabeledGraph};
pub use linrel::{LinSubFunctor, Matrix, Subspace};

pub type Rational = num_rational::BigRational;
pub type RatMatrix = linrel::Matrix<Rational>;
pub type RatSubspace = linrel::Subspace<Rational>;
pub type RatGraph = graphdec::LabeledGraph<Rational>;
pub type RatEdge = graphdec::Edge<Rational>;
pub type RatRes = circuits::Res<Rational>;
pub type Graphs = graphdec::GraphFunctor<Rational>;
pub type LinSub = linrel::LinSubFunctor<Rational>;
