//! Truncated formal power series over the rationals, just enough to expand
//! the exponential generating functions of the three families by division.

use num_traits::Zero;

use crate::arith::{factorial, int, Rational};

/// `(e^t - 1)/t`, `e^t + 1`, etc. are built from the exponential series.
pub fn exp_series(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|k| Rational::new(1.into(), factorial(k as i64).expect("non-negative")))
        .collect()
}

/// First `len` coefficients of `num / den`. `den[0]` must be nonzero.
pub fn divide(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    assert!(
        den.first().is_some_and(|d| !d.is_zero()),
        "series division needs an invertible constant term"
    );
    let coeff = |s: &[Rational], k: usize| s.get(k).cloned().unwrap_or_else(Rational::zero);
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = coeff(num, k);
        for (j, q) in out.iter().enumerate() {
            let d = coeff(den, k - j);
            if !d.is_zero() {
                acc -= q * d;
            }
        }
        out.push(acc / &den[0]);
    }
    out
}

/// Converts ordinary coefficients `c_n` of an exponential generating
/// function into the sequence `n! c_n`.
pub fn egf_values(coeffs: &[Rational]) -> Vec<Rational> {
    coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c * int(factorial(n as i64).expect("non-negative")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn geometric_series() {
        // 1 / (1 - t) = 1 + t + t^2 + ...
        let one = [int(1)];
        let den = [int(1), int(-1)];
        assert_eq!(divide(&one, &den, 5), vec![int(1); 5]);
    }

    #[test]
    fn exp_times_inverse() {
        // e^t / e^t = 1
        let e = exp_series(8);
        let q = divide(&e, &e, 8);
        assert_eq!(q[0], int(1));
        assert!(q[1..].iter().all(Zero::is_zero));
        assert_eq!(e[3], rat(1, 6).unwrap());
    }
}
