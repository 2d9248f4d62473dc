use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact ordered field.
///
/// Every comparison in the kernel (subspace equality, graph equality, pivot
/// selection) tests for exact zero, so only exact number types qualify.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn is_positive_value(&self) -> bool {
        *self > Self::zero()
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + From<i64> + Debug + Display + Send + Sync + 'static,
{
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(I::from(num), I::from(den))
    }
}
