//! Scalar abstractions: exact integer accumulators and floating-point fits.

use std::fmt::{Debug, Display};
use std::ops::Div;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, Zero};

use crate::BigCount;

/// An exact, nonnegative-capable integer type that counts can be accumulated
/// into. Fixed-width types report overflow through the checked operations;
/// [`BigCount`] never overflows.
pub trait Count:
    Clone + Debug + Display + PartialOrd + Zero + One + CheckedAdd + CheckedMul + Div<Output = Self> + FromPrimitive
{
}

impl<T> Count for T where
    T: Clone
        + Debug
        + Display
        + PartialOrd
        + Zero
        + One
        + CheckedAdd
        + CheckedMul
        + Div<Output = T>
        + FromPrimitive
{
}

/// Binomial coefficient `C(n, k)` in `T`, or `None` when the result or the
/// running product `C(n, i) * (n - i)` does not fit.
///
/// Returns zero when `k < 0` or `k > n`.
pub fn binomial_in<T: Count>(n: u64, k: i64) -> Option<T> {
    if k < 0 || k as u64 > n {
        return Some(T::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 0..k {
        // acc = C(n, i), so acc * (n - i) is divisible by i + 1.
        acc = acc.checked_mul(&T::from_u64(n - i)?)? / T::from_u64(i + 1)?;
    }
    Some(acc)
}

/// Exact binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    binomial_in(n, k).expect("arbitrary precision cannot overflow")
}

/// Row of binomials `C(x, r)` for `x` in `0..=max`.
pub fn binomial_column<T: Count>(max: u64, r: i64) -> Option<Vec<T>> {
    (0..=max).map(|x| binomial_in(x, r)).collect()
}

/// Sums `weights[x] * column[x]` with overflow checks.
pub(crate) fn weighted_sum<T: Count>(weights: &[u64], column: &[T]) -> Option<T> {
    let mut total = T::zero();
    for (w, c) in weights.iter().zip(column) {
        if *w == 0 || c.is_zero() {
            continue;
        }
        total = total.checked_add(&c.checked_mul(&T::from_u64(*w)?)?)?;
    }
    Some(total)
}

/// Least-squares slope of `ln y` against `ln x`.
///
/// Returns `None` with fewer than two points, nonpositive coordinates or
/// degenerate abscissae.
pub fn loglog_slope<F: num_traits::Float>(points: &[(F, F)]) -> Option<F> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= F::zero() || y <= F::zero()) {
        return None;
    }
    let count = F::from(points.len())?;
    let logs: Vec<(F, F)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mean_x = logs.iter().fold(F::zero(), |a, p| a + p.0) / count;
    let mean_y = logs.iter().fold(F::zero(), |a, p| a + p.1) / count;
    let mut sxx = F::zero();
    let mut sxy = F::zero();
    for &(x, y) in &logs {
        sxx = sxx + (x - mean_x) * (x - mean_x);
        sxy = sxy + (x - mean_x) * (y - mean_y);
    }
    if sxx <= F::epsilon() {
        return None;
    }
    Some(sxy / sxx)
}
