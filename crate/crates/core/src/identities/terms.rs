//! Scalar and polynomial building blocks for the summation formulas.
//!
//! Indices are signed: a formula that reaches a negative index, a negative
//! factorial or a zero divisor yields an error, which the verifier reports
//! as "not applicable" instead of guessing a value.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::sequences::{number_at, poly_at, Family};

pub fn bin(n: i64, k: i64) -> Result<Rational> {
    Ok(int(binomial(n, k)?))
}

pub fn fact(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::IndexOutOfRange { what: "factorial", index: n });
    }
    Ok(int(factorial(n)?))
}

/// `1 / v`, refusing a zero divisor.
pub fn recip(v: Rational, what: &'static str) -> Result<Rational> {
    if v.is_zero() {
        return Err(Error::IndexOutOfRange { what, index: 0 });
    }
    Ok(Rational::one() / v)
}

pub fn g(i: i64) -> Result<Rational> {
    number_at(Family::Genocchi, i)
}

pub fn e(i: i64) -> Result<Rational> {
    number_at(Family::Euler, i)
}

/// `G_i(1)`.
pub fn g_at_one(i: i64) -> Result<Rational> {
    Ok(gx(i)?.eval(&Rational::one()))
}

/// `i · E_{i-1}`, which equals `G_i`. For `i = 0` the product is zero
/// whatever value `E_{-1}` would take.
pub fn weighted_e(i: i64) -> Result<Rational> {
    if i == 0 {
        return Ok(Rational::zero());
    }
    Ok(int(i) * e(i - 1)?)
}

pub fn gx(i: i64) -> Result<Polynomial> {
    poly_at(Family::Genocchi, i)
}

pub fn bx(i: i64) -> Result<Polynomial> {
    poly_at(Family::Bernoulli, i)
}

pub fn ex(i: i64) -> Result<Polynomial> {
    poly_at(Family::Euler, i)
}

/// `x^k`.
pub fn xpow(k: i64) -> Result<Polynomial> {
    if k < 0 {
        return Err(Error::IndexOutOfRange { what: "power of x", index: k });
    }
    Ok(Polynomial::monomial(Rational::one(), k as usize))
}

/// `2^k` for any integer `k`.
pub fn pow2(k: i64) -> Rational {
    let p = int(1i64 << k.unsigned_abs());
    if k >= 0 {
        p
    } else {
        Rational::one() / p
    }
}

/// `0^k` with `0^0 = 1`.
pub fn zero_pow(k: i64) -> Result<Rational> {
    match k {
        0 => Ok(Rational::one()),
        k if k > 0 => Ok(Rational::zero()),
        k => Err(Error::IndexOutOfRange { what: "power of zero", index: k }),
    }
}

/// `Σ_{i=lo}^{hi} f(i)`, empty when `lo > hi`.
pub fn sum<F>(lo: i64, hi: i64, mut f: F) -> Result<Rational>
where
    F: FnMut(i64) -> Result<Rational>,
{
    let mut acc = Rational::zero();
    for i in lo..=hi {
        acc += f(i)?;
    }
    Ok(acc)
}

/// Polynomial-valued `Σ_{i=lo}^{hi} f(i)`.
pub fn poly_sum<F>(lo: i64, hi: i64, mut f: F) -> Result<Polynomial>
where
    F: FnMut(i64) -> Result<Polynomial>,
{
    let mut acc = Polynomial::zero();
    for i in lo..=hi {
        acc = acc + f(i)?;
    }
    Ok(acc)
}

/// `Σ_{k=lo}^{hi} coeff(k) · basis(k)`.
pub fn expand<C, B>(lo: i64, hi: i64, mut coeff: C, basis: B) -> Result<Polynomial>
where
    C: FnMut(i64) -> Result<Rational>,
    B: Fn(i64) -> Result<Polynomial>,
{
    poly_sum(lo, hi, |k| Ok(basis(k)?.scale(&coeff(k)?)))
}
