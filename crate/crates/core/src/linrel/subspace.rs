use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::matrix::{dot, Matrix};

/// A linear subspace of `T^ambient`, stored as its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are identical.
#[derive(Clone, PartialEq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Subspace<T> {
    /// Row space of an arbitrary spanning set.
    pub fn span(spanning: &Matrix<T>) -> Self {
        Subspace { ambient: spanning.cols(), basis: spanning.row_reduce() }
    }

    pub fn span_rows(ambient: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        Ok(Subspace::span(&Matrix::from_rows(ambient, rows)?))
    }

    /// Accepts only an already canonical basis.
    pub fn from_canonical_rows(ambient: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let m = Matrix::from_rows(ambient, rows)?;
        let reduced = m.row_reduce();
        if reduced != m {
            return Err(Error::NotCanonical(
                "rows must be nonzero, in reduced row-echelon form, with increasing pivots".into(),
            ));
        }
        Ok(Subspace { ambient, basis: m })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter_rows()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero"))
            .collect()
    }

    /// Membership test by reduction against the pivots.
    pub fn contains(&self, v: &[T]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: v.len() });
        }
        let mut rest = v.to_vec();
        for (row, p) in self.basis.iter_rows().zip(self.pivots()) {
            if rest[p].is_zero() {
                continue;
            }
            let c = rest[p].clone();
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * b.clone();
            }
        }
        Ok(rest.iter().all(T::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> Result<bool> {
        for row in other.basis.iter_rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the coordinate map sending coordinate `k` to `target[k]`
    /// of a space of dimension `ambient`; `target` must be injective.
    pub fn reindex(&self, target: &[usize], ambient: usize) -> Self {
        debug_assert_eq!(target.len(), self.ambient);
        let mut m = Matrix::zeros(self.dim(), ambient);
        for (i, row) in self.basis.iter_rows().enumerate() {
            for (k, x) in row.iter().enumerate() {
                m[(i, target[k])] = x.clone();
            }
        }
        Subspace::span(&m)
    }

    /// Scales coordinates independently.
    pub fn scale_coordinates(&self, factors: &[T]) -> Result<Self> {
        if factors.len() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: factors.len() });
        }
        let mut m = self.basis.clone();
        for i in 0..m.rows() {
            for (x, c) in m.row_mut(i).iter_mut().zip(factors) {
                *x = x.clone() * c.clone();
            }
        }
        Ok(Subspace::span(&m))
    }

    /// Linear constraints cutting out this subspace: rows `a` with
    /// `a · v = 0` for every member `v`.
    pub fn annihilator(&self) -> Matrix<T> {
        self.basis.kernel()
    }

    pub fn is_orthogonal_to(&self, a: &[T]) -> bool {
        self.basis.iter_rows().all(|row| dot(row, a).is_zero())
    }
}

/// Equality of subspaces of the same ambient space.
pub fn subspace_equal<T: Scalar>(a: &Subspace<T>, b: &Subspace<T>) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch { expected: a.ambient, found: b.ambient });
    }
    Ok(a.basis == b.basis)
}

/// Solution space of homogeneous `constraints` over concatenated variables,
/// projected onto the `keep` coordinates (in the given order).
pub fn eliminate_and_project<T: Scalar>(constraints: &Matrix<T>, keep: &[usize]) -> Subspace<T> {
    let kernel = constraints.kernel();
    let rows: Vec<usize> = (0..kernel.rows()).collect();
    Subspace::span(&kernel.select(&rows, keep))
}

impl<T: Scalar> std::fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(ambient {}, basis {:?})", self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn permuted_generators_give_equal_subspaces() {
        let a = Subspace::span_rows(3, rows(&[&[1, 2, 3], &[0, 1, 1]])).unwrap();
        let b = Subspace::span_rows(3, rows(&[&[0, 1, 1], &[1, 2, 3], &[1, 3, 4]])).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
    }

    #[test]
    fn zero_and_full_differ() {
        assert!(!subspace_equal(&Subspace::<Rational>::zero(1), &Subspace::full(1)).unwrap());
        assert!(subspace_equal(&Subspace::<Rational>::zero(1), &Subspace::zero(2)).is_err());
    }

    #[test]
    fn canonical_rows_are_validated() {
        assert!(Subspace::from_canonical_rows(2, rows(&[&[1, 0], &[0, 1]])).is_ok());
        assert!(Subspace::from_canonical_rows(2, rows(&[&[0, 1], &[1, 0]])).is_err());
        assert!(Subspace::from_canonical_rows(2, rows(&[&[2, 0]])).is_err());
        assert!(Subspace::from_canonical_rows(2, rows(&[&[0, 0]])).is_err());
    }

    #[test]
    fn eliminate_without_constraints_gives_full_space() {
        let none = Matrix::<Rational>::zeros(0, 3);
        assert_eq!(eliminate_and_project(&none, &[0, 2]), Subspace::full(2));
    }

    #[test]
    fn eliminate_forcing_zero() {
        // x0 = 0, x1 = 0, y free
        let c = Matrix::from_rows(3, rows(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(eliminate_and_project(&c, &[0, 1]), Subspace::zero(2));
    }

    #[test]
    fn eliminate_projects_existential() {
        // x0 - y = 0, x1 - y = 0  =>  x0 = x1
        let c = Matrix::from_rows(3, rows(&[&[1, 0, -1], &[0, 1, -1]])).unwrap();
        let s = eliminate_and_project(&c, &[0, 1]);
        assert_eq!(s, Subspace::span_rows(2, rows(&[&[1, 1]])).unwrap());
    }

    #[test]
    fn annihilator_cuts_out_the_subspace() {
        let s = Subspace::span_rows(4, rows(&[&[1, 2, 0, 1], &[0, 0, 1, 3]])).unwrap();
        let a = s.annihilator();
        assert_eq!(a.rows(), 2);
        assert!(a.iter_rows().all(|r| s.is_orthogonal_to(r)));
    }
}
