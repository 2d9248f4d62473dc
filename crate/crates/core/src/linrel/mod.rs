//! Exact linear algebra and the decoration functor of linear subspaces of
//! `Q^N ⊕ (Q^N)*`.
//!
//! A decoration on `N` is a [`Subspace`] of ambient dimension `2·|N|`.
//! Coordinates `0..|N|` are potentials `φ`, coordinates `|N|..2|N|` are
//! currents `ι`; every other convention in this module derives from that one.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{eliminate_and_project, subspace_equal, Subspace};

use std::marker::PhantomData;

use crate::decoration::DecorationFunctor;
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSet};
use crate::scalar::Scalar;

/// Number of vertices a state-space subspace lives on.
pub fn vertex_count<T: Scalar>(l: &Subspace<T>) -> Result<usize> {
    if !l.ambient().is_multiple_of(2) {
        return Err(Error::CarrierViolation {
            apex: l.ambient() / 2,
            reason: format!("odd ambient dimension {}", l.ambient()),
        });
    }
    Ok(l.ambient() / 2)
}

fn check_ambient<T: Scalar>(l: &Subspace<T>, n: FinSet) -> Result<()> {
    if l.ambient() != 2 * n.size() {
        return Err(Error::AmbientMismatch { expected: 2 * n.size(), found: l.ambient() });
    }
    Ok(())
}

/// Image of `l` under the relation `(f*)^op ⊕ f_*`:
/// `{(ψ, κ) : ∃ (φ, ι) ∈ l, φ = ψ ∘ f, κ(m) = Σ_{f(n) = m} ι(n)}`.
pub fn lin_sub_map<T: Scalar>(f: &FinFunction, l: &Subspace<T>) -> Result<Subspace<T>> {
    check_ambient(l, f.dom())?;
    let n = f.dom().size();
    let m = f.cod().size();
    let r = l.dim();
    let basis = l.basis();
    // variables: ψ (m), κ (m), a (r) with (φ, ι) = aᵀ·basis
    let vars = 2 * m + r;
    let mut c = Matrix::zeros(n + m, vars);
    for k in 0..n {
        for i in 0..r {
            c[(k, 2 * m + i)] = basis[(i, k)].clone();
        }
        c[(k, f.apply(k))] = -T::one();
    }
    for j in 0..m {
        c[(n + j, m + j)] = T::one();
    }
    for k in 0..n {
        let row = n + f.apply(k);
        for i in 0..r {
            c[(row, 2 * m + i)] = c[(row, 2 * m + i)].clone() - basis[(i, n + k)].clone();
        }
    }
    let keep: Vec<usize> = (0..2 * m).collect();
    Ok(eliminate_and_project(&c, &keep))
}

/// Pulls a state space on `N` back to the boundary `h: B -> N`:
/// `{(ψ, κ) : ∃ φ, ψ = φ ∘ h, (φ, h_* κ) ∈ l}`.
pub fn restrict_along<T: Scalar>(h: &FinFunction, l: &Subspace<T>) -> Result<Subspace<T>> {
    check_ambient(l, h.cod())?;
    let b = h.dom().size();
    let n = h.cod().size();
    let r = l.dim();
    let basis = l.basis();
    // variables: ψ (b), κ (b), a (r) with (φ, ι) = aᵀ·basis
    let vars = 2 * b + r;
    let mut c = Matrix::zeros(b + n, vars);
    for w in 0..b {
        c[(w, w)] = T::one();
        for i in 0..r {
            c[(w, 2 * b + i)] = -basis[(i, h.apply(w))].clone();
        }
    }
    for k in 0..n {
        for i in 0..r {
            c[(b + k, 2 * b + i)] = -basis[(i, n + k)].clone();
        }
    }
    for w in 0..b {
        c[(b + h.apply(w), b + w)] = T::one();
    }
    let keep: Vec<usize> = (0..2 * b).collect();
    Ok(eliminate_and_project(&c, &keep))
}

/// Direct sum of state spaces on `N` and `M` as a state space on `N + M`,
/// with coordinates `(φ_N, φ_M, ι_N, ι_M)`.
pub fn subspace_tensor<T: Scalar>(a: &Subspace<T>, b: &Subspace<T>) -> Result<Subspace<T>> {
    let n = vertex_count(a)?;
    let m = vertex_count(b)?;
    let total = 2 * (n + m);
    let mut rows = Matrix::zeros(0, total);
    for row in a.basis().iter_rows() {
        let mut v = vec![T::zero(); total];
        for k in 0..n {
            v[k] = row[k].clone();
            v[n + m + k] = row[n + k].clone();
        }
        rows.push_row(v)?;
    }
    for row in b.basis().iter_rows() {
        let mut v = vec![T::zero(); total];
        for k in 0..m {
            v[n + k] = row[k].clone();
            v[2 * n + m + k] = row[m + k].clone();
        }
        rows.push_row(v)?;
    }
    Ok(Subspace::span(&rows))
}

/// The only subspace of the zero-dimensional space.
pub fn subspace_unit<T: Scalar>() -> Subspace<T> {
    Subspace::zero(0)
}

/// The linear-subspace decoration functor.
#[derive(Debug, Clone, Copy)]
pub struct LinSubFunctor<T>(PhantomData<fn() -> T>);

impl<T> Default for LinSubFunctor<T> {
    fn default() -> Self {
        LinSubFunctor(PhantomData)
    }
}

impl<T> LinSubFunctor<T> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> DecorationFunctor for LinSubFunctor<T> {
    type Decoration = Subspace<T>;

    fn name(&self) -> &str {
        "linsub"
    }

    fn support(&self, d: &Subspace<T>) -> FinSet {
        FinSet::new(d.ambient() / 2).unwrap_or(FinSet::EMPTY)
    }

    fn validate(&self, d: &Subspace<T>) -> Result<()> {
        vertex_count(d).map(|_| ())
    }

    fn map_along(&self, f: &FinFunction, d: &Subspace<T>) -> Result<Subspace<T>> {
        lin_sub_map(f, d)
    }

    fn tensor(&self, a: &Subspace<T>, b: &Subspace<T>) -> Subspace<T> {
        subspace_tensor(a, b).expect("decorations have even ambient dimension")
    }

    fn unit(&self) -> Subspace<T> {
        subspace_unit()
    }

    fn equal(&self, a: &Subspace<T>, b: &Subspace<T>) -> bool {
        subspace_equal(a, b).unwrap_or(false)
    }

    /// Whether the potential and current coordinates of each vertex vanish
    /// identically on the subspace.
    fn vertex_colors(&self, d: &Subspace<T>) -> Option<Vec<u64>> {
        let n = d.ambient() / 2;
        let basis = d.basis();
        let zero_col = |c: usize| (0..basis.rows()).all(|i| basis[(i, c)].is_zero());
        Some(
            (0..n)
                .map(|k| u64::from(zero_col(k)) | (u64::from(zero_col(n + k)) << 1))
                .collect(),
        )
    }

    fn empty_decoration(&self, n: FinSet) -> Subspace<T> {
        empty_state_space(n)
    }
}

/// The empty decoration on `N`: free potentials, zero currents.
pub fn empty_state_space<T: Scalar>(n: FinSet) -> Subspace<T> {
    let k = n.size();
    let mut m = Matrix::zeros(k, 2 * k);
    for i in 0..k {
        m[(i, i)] = T::one();
    }
    Subspace::span(&m)
}
