//! Naive exact linear algebra used as an independent oracle: plain Gaussian
//! elimination on row vectors, no pivot bookkeeping shared with the crate.

#![allow(dead_code)]

use decorated_cospans::report::{CaseRng, Runner};
use decorated_cospans::{Rational, Scalar};
use num_traits::{One, Zero};

pub type Rows = Vec<Vec<Rational>>;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn rng(seed: u64, case: u64) -> CaseRng {
    Runner::rng(seed, case)
}

/// Rank by forward elimination only.
pub fn rank(rows: &Rows) -> usize {
    let mut m = rows.clone();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / m[rank][c].clone();
                for k in c..cols {
                    let v = m[rank][k].clone() * f.clone();
                    m[i][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether every row of `b` lies in the row space of `a`.
pub fn contains(a: &Rows, b: &Rows) -> bool {
    let mut both = a.clone();
    both.extend(b.iter().cloned());
    rank(a) == rank(&both)
}

pub fn same_span(a: &Rows, b: &Rows) -> bool {
    contains(a, b) && contains(b, a)
}

/// Null space `{x : m x = 0}` with `cols` unknowns, by solving for pivots
/// from a fully reduced copy.
pub fn null_space(m: &Rows, cols: usize) -> Rows {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for k in 0..cols {
            a[r][k] *= inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let v = a[r][k].clone() * f.clone();
                    a[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -a[i][free].clone();
            }
            x
        })
        .collect()
}

pub fn mat_mul(a: &Rows, b: &Rows, inner: usize, cols: usize) -> Rows {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Rows, cols: usize) -> Rows {
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}
