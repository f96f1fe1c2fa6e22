//! Scalar traits for the exact arithmetic core.
//!
//! Every algorithm in this crate is generic over an integer scalar `T`
//! implementing [`Scalar`]; rationals are `num_rational::Ratio<T>`. The
//! crate root pins the concrete instantiation used by the rest of the
//! workspace to arbitrary-precision integers.

use std::fmt;
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Ring element usable as a dense matrix entry.
///
/// Covers both the integer scalars and `Ratio<T>` over them.
pub trait Entry:
    Clone + PartialEq + fmt::Debug + Zero + One + std::ops::Neg<Output = Self> + std::ops::Sub<Output = Self>
{
}

impl<T> Entry for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
{
}

/// Exact integer scalar: what the lattice algorithms need from ℤ.
///
/// `num_integer::Integer` supplies euclidean division and gcd; `Signed`
/// supplies `abs` and `signum`. `From<i64>` keeps literals ergonomic and
/// `ToPrimitive` lets desk-scale values (group orders, counters) drop to
/// machine integers when they fit.
pub trait Scalar:
    Entry + Integer + Roots + Signed + Hash + From<i64> + ToPrimitive + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: Entry + Integer + Roots + Signed + Hash + From<i64> + ToPrimitive + fmt::Display + 'static
{
}

/// Largest integer `s` with `s² ≤ r`; `r` must be nonnegative.
pub fn sqrt_floor<T: Scalar>(r: &Ratio<T>) -> T {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    // floor(sqrt(r)) = floor(sqrt(floor(r))): (s+1)² ≥ floor(r)+1 > r.
    r.floor().to_integer().sqrt()
}

/// `base^exp` by repeated multiplication (exponents are desk scale).
pub fn pow_usize<T: Scalar>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

/// Integer `n` as a rational.
pub fn rat<T: Scalar>(n: T) -> Ratio<T> {
    Ratio::from_integer(n)
}

/// Rational `n/d` in lowest terms.
pub fn rat_frac<T: Scalar>(n: T, d: T) -> Ratio<T> {
    Ratio::new(n, d)
}

/// Representative of `r` in `[0, 1)`, i.e. `r mod 1`.
pub fn mod_one<T: Scalar>(r: &Ratio<T>) -> Ratio<T> {
    r - r.floor()
}

/// Representative of `r` in `[0, 2)`, i.e. `r mod 2ℤ`.
pub fn mod_two<T: Scalar>(r: &Ratio<T>) -> Ratio<T> {
    let two = rat(T::from(2));
    let half = r / two.clone();
    r - half.floor() * two
}
