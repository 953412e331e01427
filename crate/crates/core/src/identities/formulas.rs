//! Both sides of every registered identity, one function per side and
//! reading. Right-hand sides transcribe the published statements term by
//! term; the alternative readings differ only where noted.

use num_traits::{One, Zero};

use super::terms::*;
use crate::arith::{harmonic, int, Rational};
use crate::error::{Error, Result};
use crate::integrals::{t_closed_with, t_oracle, t_recurrence, ClosedFormReading};
use crate::polynomial::Polynomial;
use crate::sequences::{
    bernoulli_poly, euler_number, euler_poly, genocchi_number, genocchi_poly, series_oracle, Family,
};

/// Moment grid width used by the closed-form identity.
pub const CLOSED_FORM_M_MAX: usize = 15;

/// Fixed increment for the registered addition theorem.
pub fn addition_step() -> Rational {
    Rational::new(3.into(), 7.into())
}

// ---------------------------------------------------------------------------
// Left-hand sides

/// `Σ_{l=0}^{n} G_l(x) x^{n-l}`.
pub fn lhs_product_sum(n: usize) -> Polynomial {
    let n = n as i64;
    poly_sum(0, n, |l| Ok(gx(l)? * xpow(n - l)?)).expect("indices in range")
}

/// `Σ_{l=0}^{n} G_l(x) x^{n-l} / (l! (n-l)!)`.
pub fn lhs_weighted_sum(n: usize) -> Polynomial {
    let n = n as i64;
    poly_sum(0, n, |l| {
        let w = Rational::one() / (fact(l)? * fact(n - l)?);
        Ok((gx(l)? * xpow(n - l)?).scale(&w))
    })
    .expect("indices in range")
}

/// `Σ_{k=1}^{n-1} G_k(x) x^{n-k} / (k (n-k))`, defined for `n >= 2`.
pub fn lhs_harmonic_sum(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { what: "harmonic product sum", index: n as i64 });
    }
    let n = n as i64;
    poly_sum(1, n - 1, |k| Ok((gx(k)? * xpow(n - k)?).scale(&(Rational::one() / int(k * (n - k))))))
}

pub(crate) fn lhs_product(n: usize) -> Result<Polynomial> {
    Ok(lhs_product_sum(n))
}

pub(crate) fn lhs_weighted(n: usize) -> Result<Polynomial> {
    Ok(lhs_weighted_sum(n))
}

pub(crate) fn lhs_harmonic(n: usize) -> Result<Polynomial> {
    lhs_harmonic_sum(n)
}

/// `G_n(2x) / n!`.
pub(crate) fn lhs_doubled(n: usize) -> Result<Polynomial> {
    Ok(genocchi_poly(n).dilate(&int(2)).scale(&(Rational::one() / fact(n as i64)?)))
}

// ---------------------------------------------------------------------------
// Foundation

/// `∫_0^x G_n(t) dt` from the term-wise antiderivative.
pub(crate) fn eq3_lhs(n: usize) -> Result<Polynomial> {
    Ok(genocchi_poly(n).antiderivative())
}

/// `(G_{n+1}(x) - G_{n+1}(0)) / (n+1)`.
pub(crate) fn eq3_rhs(n: usize) -> Result<Polynomial> {
    let g = genocchi_poly(n + 1);
    let at_zero = Polynomial::constant(g.coeff(0));
    Ok((g - at_zero).scale(&(Rational::one() / int(n as i64 + 1))))
}

fn appell_from_oracle(family: Family, n: usize) -> Polynomial {
    let numbers = series_oracle(family, n);
    let n = n as i64;
    poly_sum(0, n, |k| Ok(xpow(n - k)?.scale(&(bin(n, k)? * &numbers[k as usize])))).expect("in range")
}

pub(crate) fn eq4_lhs(n: usize) -> Result<Polynomial> {
    Ok(genocchi_poly(n))
}

/// `Σ_k C(n, k) G_k x^{n-k}` with numbers from the generating function.
pub(crate) fn eq4_rhs(n: usize) -> Result<Polynomial> {
    Ok(appell_from_oracle(Family::Genocchi, n))
}

pub(crate) fn eq13b_lhs(n: usize) -> Result<Polynomial> {
    Ok(bernoulli_poly(n))
}

pub(crate) fn eq13b_rhs(n: usize) -> Result<Polynomial> {
    Ok(appell_from_oracle(Family::Bernoulli, n))
}

pub(crate) fn eq13e_lhs(n: usize) -> Result<Polynomial> {
    Ok(euler_poly(n))
}

pub(crate) fn eq13e_rhs(n: usize) -> Result<Polynomial> {
    Ok(appell_from_oracle(Family::Euler, n))
}

/// `∫_0^1 G_n`.
pub(crate) fn eq5_lhs(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::constant(genocchi_poly(n).integrate(&Rational::zero(), &Rational::one())))
}

/// `-2 G_{n+1} / (n+1)`.
pub(crate) fn eq5_rhs(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::constant(int(-2) * genocchi_number(n + 1) / int(n as i64 + 1)))
}

/// `(G_{n+1}(x+1) + G_{n+1}(x)) / (n+1)`.
pub(crate) fn eq7_lhs(n: usize) -> Result<Polynomial> {
    let g = genocchi_poly(n + 1);
    Ok((g.shift(&Rational::one()) + &g).scale(&(Rational::one() / int(n as i64 + 1))))
}

/// `2 x^n`.
pub(crate) fn eq7_rhs(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::monomial(int(2), n))
}

/// `Σ_{m=1}^{15} T(m, n) x^{m-1}` by direct integration.
pub(crate) fn eq17_lhs(n: usize) -> Result<Polynomial> {
    let coeffs = (1..=CLOSED_FORM_M_MAX).map(|m| t_oracle(m, n)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

fn eq17_with(n: usize, reading: ClosedFormReading) -> Result<Polynomial> {
    let coeffs = (1..=CLOSED_FORM_M_MAX)
        .map(|m| t_closed_with(m, n, reading))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

pub(crate) fn eq17_sum_prefactor(n: usize) -> Result<Polynomial> {
    eq17_with(n, ClosedFormReading::SumPrefactor)
}

pub(crate) fn eq17_full_prefactor(n: usize) -> Result<Polynomial> {
    eq17_with(n, ClosedFormReading::FullPrefactor)
}

/// Both sides of the addition theorem at increment `y`:
/// `(Σ_k C(n, k) G_k(x) y^{n-k}, G_n(x + y))`.
pub fn addition_theorem_sides(n: usize, y: &Rational) -> (Polynomial, Polynomial) {
    let n_i = n as i64;
    let expanded = poly_sum(0, n_i, |k| {
        let mut y_pow = Rational::one();
        for _ in 0..(n_i - k) {
            y_pow *= y;
        }
        Ok(gx(k)?.scale(&(bin(n_i, k)? * y_pow)))
    })
    .expect("indices in range");
    (expanded, genocchi_poly(n).shift(y))
}

pub(crate) fn eq21_lhs(n: usize) -> Result<Polynomial> {
    Ok(addition_theorem_sides(n, &addition_step()).0)
}

pub(crate) fn eq21_rhs(n: usize) -> Result<Polynomial> {
    Ok(addition_theorem_sides(n, &addition_step()).1)
}

pub(crate) fn eq29_lhs(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::constant(genocchi_number(n + 1) / int(n as i64 + 1)))
}

pub(crate) fn eq29_rhs(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::constant(euler_number(n)))
}

// ---------------------------------------------------------------------------
// Product sum in the Bernoulli basis, Genocchi numbers

/// How the two trailing constant terms bind relative to the sums.
#[derive(Clone, Copy)]
enum Binding {
    /// Inside the outer sum, outside the inner `j`-sum.
    Outer,
    /// Inside the inner `j`-sum.
    Inner,
}

/// Inner summand `(-1)^j C(n-k+1, j) / ((n-k+1) C(k+j, k)) G_{k+j}`.
fn thm21_inner(n: i64, k: i64, j: i64) -> Result<Rational> {
    Ok(crate::arith::sign_pow(j) * bin(n - k + 1, j)? / (int(n - k + 1) * bin(k + j, k)?) * g(k + j)?)
}

/// `2 (-1)^{n-k+1} G_{n+1} / ((n+1) C(n, k)) - 2 G_{k+1} / (k+1)`.
fn thm21_tail(n: i64, k: i64) -> Result<Rational> {
    Ok(int(2) * crate::arith::sign_pow(n - k + 1) * g(n + 1)? / (int(n + 1) * bin(n, k)?)
        - int(2) * g(k + 1)? / int(k + 1))
}

fn thm21_constant(n: i64, binding: Binding) -> Result<Rational> {
    sum(1, n - 1, |k| match binding {
        Binding::Outer => Ok(sum(1, n - k, |j| thm21_inner(n, k, j))? + thm21_tail(n, k)?),
        Binding::Inner => sum(1, n - k, |j| Ok(thm21_inner(n, k, j)? + thm21_tail(n, k)?)),
    })
}

/// `C(n+2, k)/(n+2) Σ_{l=k-1}^{n-1} (2 - G_{l-k+1} - G_{n-k+1})`.
fn thm21_bernoulli_coeff(n: i64, k: i64) -> Result<Rational> {
    Ok(bin(n + 2, k)? / int(n + 2) * sum(k - 1, n - 1, |l| Ok(int(2) - g(l - k + 1)? - g(n - k + 1)?))?)
}

fn thm21(n: usize, binding: Binding) -> Result<Polynomial> {
    let n = n as i64;
    let constant = Polynomial::constant(thm21_constant(n, binding)?);
    Ok(constant + expand(1, n, |k| thm21_bernoulli_coeff(n, k), bx)?)
}

pub(crate) fn thm21_as_printed(n: usize) -> Result<Polynomial> {
    thm21(n, Binding::Outer)
}

pub(crate) fn thm21_in_j_sum(n: usize) -> Result<Polynomial> {
    thm21(n, Binding::Inner)
}

/// Constant `Σ_{k=1}^{n} T(k, n-k)`; Bernoulli coefficients
/// `(n+1)!/(k!(n-k+2)!) Σ_{l=k-1}^{n} (G_{l-k+1}(1) - 0^{n-l} G_{n-k+1})`.
pub(crate) fn thm21_proof_line(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    let constant = sum(1, n, |k| t_recurrence(k as usize, (n - k) as usize))?;
    let coeff = |k: i64| -> Result<Rational> {
        let pre = fact(n + 1)? / (fact(k)? * fact(n - k + 2)?);
        Ok(pre * sum(k - 1, n, |l| Ok(g_at_one(l - k + 1)? - zero_pow(n - l)? * g(n - k + 1)?))?)
    };
    Ok(Polynomial::constant(constant) + expand(1, n, coeff, bx)?)
}

// ---------------------------------------------------------------------------
// Product sum in the Bernoulli basis, Euler numbers

fn cor21_inner(n: i64, k: i64, j: i64) -> Result<Rational> {
    Ok(crate::arith::sign_pow(j) * int(k + j) * bin(n - k + 1, j)? / (int(n - k + 1) * bin(k + j, j)?)
        * e(k + j - 1)?)
}

/// `2 (-1)^{n-k+1} E_n / C(n, k) - 2 E_k`.
fn cor21_tail(n: i64, k: i64) -> Result<Rational> {
    Ok(int(2) * crate::arith::sign_pow(n - k + 1) * e(n)? / bin(n, k)? - int(2) * e(k)?)
}

/// `C(n+2, k)/(n+2) Σ_{l=k-1}^{n-1} (2 - (l-k+1) E_{l-k} - (n-k+1) E_{n-k})`.
fn cor21_bernoulli_coeff(n: i64, k: i64) -> Result<Rational> {
    Ok(bin(n + 2, k)? / int(n + 2)
        * sum(k - 1, n - 1, |l| Ok(int(2) - weighted_e(l - k + 1)? - weighted_e(n - k + 1)?))?)
}

fn cor21(n: usize, binding: Binding) -> Result<Polynomial> {
    let n = n as i64;
    let constant = sum(1, n - 1, |k| match binding {
        Binding::Outer => Ok(sum(1, n - k, |j| cor21_inner(n, k, j))? + cor21_tail(n, k)?),
        Binding::Inner => sum(1, n - k, |j| Ok(cor21_inner(n, k, j)? + cor21_tail(n, k)?)),
    })?;
    Ok(Polynomial::constant(constant) + expand(1, n, |k| cor21_bernoulli_coeff(n, k), bx)?)
}

pub(crate) fn cor21_as_printed(n: usize) -> Result<Polynomial> {
    cor21(n, Binding::Outer)
}

pub(crate) fn cor21_in_j_sum(n: usize) -> Result<Polynomial> {
    cor21(n, Binding::Inner)
}

// ---------------------------------------------------------------------------
// Product sum in the Euler basis

/// Whether `G_{n-k}` is subtracted once per summand or once in total.
#[derive(Clone, Copy)]
enum Tail {
    PerTerm,
    Once,
}

/// `(n+1) C(n, k) - C(n+1, k)/2 Σ_{l=k}^{n-1} (G_{l-k} - G_{n-k})`.
fn thm23_coeff(n: i64, k: i64, tail: Tail) -> Result<Rational> {
    let inner = match tail {
        Tail::PerTerm => sum(k, n - 1, |l| Ok(g(l - k)? - g(n - k)?))?,
        Tail::Once => sum(k, n - 1, |l| g(l - k))? - g(n - k)?,
    };
    Ok(int(n + 1) * bin(n, k)? - bin(n + 1, k)? / int(2) * inner)
}

pub(crate) fn thm23_as_printed(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(0, n, |k| thm23_coeff(n, k, Tail::PerTerm), ex)
}

pub(crate) fn thm23_single_tail(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(0, n, |k| thm23_coeff(n, k, Tail::Once), ex)
}

/// `(n+1)!/(2 k! (n-k+1)!) Σ_{l=k}^{n} (G_{l-k}(1) + 0^{n-l} G_{l-k})`.
pub(crate) fn thm23_proof_line(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    let coeff = |k: i64| -> Result<Rational> {
        let pre = fact(n + 1)? / (int(2) * fact(k)? * fact(n - k + 1)?);
        Ok(pre * sum(k, n, |l| Ok(g_at_one(l - k)? + zero_pow(n - l)? * g(l - k)?))?)
    };
    expand(0, n, coeff, ex)
}

/// `(n+1) C(n, k) - C(n+1, k)/2 Σ_{l=k}^{n-1} ((l-k) E_{l-k-1} - (n-k) E_{n-k-1})`.
fn cor23_coeff(n: i64, k: i64, tail: Tail) -> Result<Rational> {
    let inner = match tail {
        Tail::PerTerm => sum(k, n - 1, |l| Ok(weighted_e(l - k)? - weighted_e(n - k)?))?,
        Tail::Once => sum(k, n - 1, |l| weighted_e(l - k))? - weighted_e(n - k)?,
    };
    Ok(int(n + 1) * bin(n, k)? - bin(n + 1, k)? / int(2) * inner)
}

pub(crate) fn cor23_as_printed(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(0, n, |k| cor23_coeff(n, k, Tail::PerTerm), ex)
}

pub(crate) fn cor23_single_tail(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(0, n, |k| cor23_coeff(n, k, Tail::Once), ex)
}

// ---------------------------------------------------------------------------
// Weighted product sum in the Genocchi basis

/// Which Genocchi index appears inside the `j`-sum.
#[derive(Clone, Copy)]
enum InnerIndex {
    /// `G_{l-j+1}`
    LMinusJ,
    /// `G_{j-l+1}`
    JMinusL,
}

/// `2^{l-2}/l! Σ_{j=l-1}^{n} (2 - G_idx)/((j-l+1)! (n-j)!)
///  + 2^{l-2}/(l! (n-l+1)!) G_{n-l+1}`.
fn thm24_coeff(n: i64, l: i64, index: InnerIndex) -> Result<Rational> {
    let pre = pow2(l - 2) / fact(l)?;
    let inner = sum(l - 1, n, |j| {
        let idx = match index {
            InnerIndex::LMinusJ => l - j + 1,
            InnerIndex::JMinusL => j - l + 1,
        };
        Ok((int(2) - g(idx)?) / (fact(j - l + 1)? * fact(n - j)?))
    })?;
    Ok(&pre * inner + pre / fact(n - l + 1)? * g(n - l + 1)?)
}

pub(crate) fn thm24_as_printed(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(1, n, |l| thm24_coeff(n, l, InnerIndex::LMinusJ), gx)
}

pub(crate) fn thm24_proof_index(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    expand(1, n, |l| thm24_coeff(n, l, InnerIndex::JMinusL), gx)
}

/// `2^{l-2}/l! Σ_{j=l-1}^{n} (G_{j-l+1}(1) + 0^{n-j} G_{j-l+1}) / ((j-l+1)! (n-j)!)`.
pub(crate) fn thm24_proof_line(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    let coeff = |l: i64| -> Result<Rational> {
        let inner = sum(l - 1, n, |j| {
            Ok((g_at_one(j - l + 1)? + zero_pow(n - j)? * g(j - l + 1)?) / (fact(j - l + 1)? * fact(n - j)?))
        })?;
        Ok(pow2(l - 2) / fact(l)? * inner)
    };
    expand(1, n, coeff, gx)
}

// ---------------------------------------------------------------------------
// Weighted product sum in the Bernoulli basis

fn thm25_inner(n: i64, l: i64, j: i64) -> Result<Rational> {
    Ok(crate::arith::sign_pow(j) / (fact(l)? * fact(n - l + 1)?) * bin(n - l + 1, j)? / bin(l + j, l)?
        * g(l + j)?)
}

fn thm25_tail(n: i64, l: i64) -> Result<Rational> {
    Ok(int(2) * crate::arith::sign_pow(n - l + 1) * g(n + 1)? / (int(n + 1) * bin(n, l)?))
}

/// `2^{k-1}/k! Σ_{l=k-1}^{n} (2 - G_{l-k+1})/((l-k+1)! (n-l)!) - 2^{k-1}/(k! (n-k+1)!) G_{n-k+1}`.
fn thm25_bernoulli_coeff(n: i64, k: i64) -> Result<Rational> {
    let pre = pow2(k - 1) / fact(k)?;
    let inner = sum(k - 1, n, |l| Ok((int(2) - g(l - k + 1)?) / (fact(l - k + 1)? * fact(n - l)?)))?;
    Ok(&pre * inner - pre / fact(n - k + 1)? * g(n - k + 1)?)
}

fn thm25(n: usize, binding: Binding) -> Result<Polynomial> {
    let n = n as i64;
    let lead = int(-2) * g(n + 1)? / int(n + 1);
    let rest = sum(1, n - 1, |l| match binding {
        Binding::Outer => Ok(sum(1, n - l, |j| thm25_inner(n, l, j))? + thm25_tail(n, l)?),
        Binding::Inner => sum(1, n - l, |j| Ok(thm25_inner(n, l, j)? + thm25_tail(n, l)?)),
    })?;
    Ok(Polynomial::constant(lead + rest) + expand(1, n, |k| thm25_bernoulli_coeff(n, k), bx)?)
}

pub(crate) fn thm25_as_printed(n: usize) -> Result<Polynomial> {
    thm25(n, Binding::Outer)
}

pub(crate) fn thm25_in_j_sum(n: usize) -> Result<Polynomial> {
    thm25(n, Binding::Inner)
}

/// Constant `Σ_{l=1}^{n} T(l, n-l)/(l! (n-l)!)`; Bernoulli coefficients
/// `2^{k-1}/k! Σ_{l=k-1}^{n} (G_{l-k+1}(1) - 0^{n-l} G_{l-k+1}) / ((l-k+1)! (n-l)!)`.
pub(crate) fn thm25_proof_line(n: usize) -> Result<Polynomial> {
    let n = n as i64;
    let constant = sum(1, n, |l| Ok(t_recurrence(l as usize, (n - l) as usize)? / (fact(l)? * fact(n - l)?)))?;
    let coeff = |k: i64| -> Result<Rational> {
        let inner = sum(k - 1, n, |l| {
            Ok((g_at_one(l - k + 1)? - zero_pow(n - l)? * g(l - k + 1)?) / (fact(l - k + 1)? * fact(n - l)?))
        })?;
        Ok(pow2(k - 1) / fact(k)? * inner)
    };
    Ok(Polynomial::constant(constant) + expand(1, n, coeff, bx)?)
}

fn cor25_inner(n: i64, l: i64, j: i64) -> Result<Rational> {
    Ok(crate::arith::sign_pow(j) / (fact(l)? * fact(n - l + 1)?) * int(l + j) * bin(n - l + 1, j)?
        / bin(l + j, l)?
        * e(l + j - 1)?)
}

fn cor25_tail(n: i64, l: i64) -> Result<Rational> {
    Ok(int(2) * crate::arith::sign_pow(n - l + 1) * e(n)? / bin(n, l)?)
}

/// Summand `(2/(l-k+1) - E_{l-k}) / ((l-k)! (n-l)!)`. With `restore_lowest`
/// the `l = k-1` summand, which has no value as written, is replaced by
/// the value `2/(n-k+1)!` it takes in Genocchi form.
fn cor25_summand(n: i64, k: i64, l: i64, restore_lowest: bool) -> Result<Rational> {
    if restore_lowest && l == k - 1 {
        return Ok(int(2) / fact(n - l)?);
    }
    let r = recip(int(l - k + 1), "reciprocal of l-k+1")?;
    Ok((int(2) * r - e(l - k)?) / (fact(l - k)? * fact(n - l)?))
}

fn cor25(n: usize, binding: Binding, restore_lowest: bool) -> Result<Polynomial> {
    let n = n as i64;
    let lead = int(-2) * e(n)?;
    let rest = sum(1, n - 1, |l| match binding {
        Binding::Outer => Ok(sum(1, n - l, |j| cor25_inner(n, l, j))? + cor25_tail(n, l)?),
        Binding::Inner => sum(1, n - l, |j| Ok(cor25_inner(n, l, j)? + cor25_tail(n, l)?)),
    })?;
    let coeff = |k: i64| -> Result<Rational> {
        let pre = pow2(k - 1) / fact(k)?;
        let inner = sum(k - 1, n, |l| cor25_summand(n, k, l, restore_lowest))?;
        Ok(&pre * inner - pre / fact(n - k)? * e(n - k)?)
    };
    Ok(Polynomial::constant(lead + rest) + expand(1, n, coeff, bx)?)
}

pub(crate) fn cor25_as_printed(n: usize) -> Result<Polynomial> {
    cor25(n, Binding::Outer, false)
}

pub(crate) fn cor25_in_j_sum(n: usize) -> Result<Polynomial> {
    cor25(n, Binding::Inner, false)
}

pub(crate) fn cor25_lowest_restored(n: usize) -> Result<Polynomial> {
    cor25(n, Binding::Outer, true)
}

// ---------------------------------------------------------------------------
// Harmonic-weighted product sum in the Genocchi basis

/// `C_k = Σ_{j=1}^{k} Π_{i=1..k, i≠j} (n - i) / (n - k)` for `1 <= k <= n-1`,
/// with `C_0 = 0`.
pub fn harmonic_c(n: usize, k: usize) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::zero());
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { what: "harmonic coefficient C_k", index: k as i64 });
    }
    let (n, k) = (n as i64, k as i64);
    let total = sum(1, k, |j| {
        Ok((1..=k).filter(|&i| i != j).fold(Rational::one(), |acc, i| acc * int(n - i)))
    })?;
    Ok(total / int(n - k))
}

/// Printed closed form `C(n, k)/(n-k+1) (H_{n-1} - H_{n-k})`.
pub fn harmonic_closed_form(n: usize, k: usize) -> Result<Rational> {
    let (ni, ki) = (n as i64, k as i64);
    if ki > ni || ki < 1 {
        return Err(Error::IndexOutOfRange { what: "harmonic closed form k", index: ki });
    }
    Ok(bin(ni, ki)? / int(ni - ki + 1) * (harmonic(n as u64 - 1) - harmonic((n - k) as u64)))
}

/// `C_{k-1}/k!` from the defining sum.
pub fn harmonic_ratio(n: usize, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { what: "harmonic ratio k", index: 0 });
    }
    Ok(harmonic_c(n, k - 1)? / fact(k as i64)?)
}

/// `C(n, k)/(2n) Σ_{l=k}^{n-1} (2 - G_{l-k+1}) / ((n-l)(l-k+1))`.
fn thm26_sum_part(n: i64, k: i64) -> Result<Rational> {
    let inner = sum(k, n - 1, |l| Ok((int(2) - g(l - k + 1)?) / (int(n - l) * int(l - k + 1))))?;
    Ok(bin(n, k)? / int(2 * n) * inner)
}

pub(crate) fn thm26_as_printed(n: usize) -> Result<Polynomial> {
    let ni = n as i64;
    let coeff = |k: i64| -> Result<Rational> {
        let h = harmonic((ni - 1) as u64) - harmonic((ni - k) as u64);
        Ok(bin(ni, k)? / (int(2) * int(ni - k + 1)) * h - thm26_sum_part(ni, k)?)
    };
    expand(0, ni, coeff, gx)
}

/// The printed statement with `C_{k-1}/(2 k!)` taken from the defining sum
/// instead of its closed form. The `k = 0` summand multiplies `G_0(x) = 0`.
pub(crate) fn thm26_defining_sum(n: usize) -> Result<Polynomial> {
    let ni = n as i64;
    let coeff = |k: i64| -> Result<Rational> {
        Ok(harmonic_ratio(n, k as usize)? / int(2) - thm26_sum_part(ni, k)?)
    };
    expand(1, ni, coeff, gx)
}

/// `C_{k-1}/(2 k!) (1 + 2 δ_{1,n-k+1})
///  + (n-1)!/(2 k! (n-k)!) Σ_{l=k}^{n-1} (G_{l-k+1}(1) + 0^{n-l} G_{l-k+1}) / ((n-l)(l-k+1))`.
pub(crate) fn thm26_proof_line(n: usize) -> Result<Polynomial> {
    let ni = n as i64;
    let coeff = |k: i64| -> Result<Rational> {
        let delta = if ni - k + 1 == 1 { int(3) } else { int(1) };
        let first = harmonic_ratio(n, k as usize)? / int(2) * delta;
        let inner = sum(k, ni - 1, |l| {
            Ok((g_at_one(l - k + 1)? + zero_pow(ni - l)? * g(l - k + 1)?) / (int(ni - l) * int(l - k + 1)))
        })?;
        Ok(first + fact(ni - 1)? / (int(2) * fact(k)? * fact(ni - k)?) * inner)
    };
    expand(1, ni, coeff, gx)
}

/// `Σ_{k=1}^{n} (C(n,k)/(2(n-k+1)) (H_{n-1} - H_{n-k})
///   - C(n,k)/(2n) Σ_{l=k}^{n-1} (2/(l-k+1) - E_{l-k})/(n-l)) k E_{k-1}(x)`.
pub(crate) fn cor26_as_printed(n: usize) -> Result<Polynomial> {
    let ni = n as i64;
    let coeff = |k: i64| -> Result<Rational> {
        let h = harmonic((ni - 1) as u64) - harmonic((ni - k) as u64);
        let inner = sum(k, ni - 1, |l| {
            Ok((int(2) * recip(int(l - k + 1), "reciprocal of l-k+1")? - e(l - k)?) / int(ni - l))
        })?;
        Ok((bin(ni, k)? / (int(2) * int(ni - k + 1)) * h - bin(ni, k)? / int(2 * ni) * inner) * int(k))
    };
    expand(1, ni, coeff, |k| ex(k - 1))
}

// ---------------------------------------------------------------------------
// Harmonic coefficient identity, one coefficient per k = 1..=n

pub(crate) fn eq26_lhs(n: usize) -> Result<Polynomial> {
    let coeffs = (1..=n).map(|k| harmonic_ratio(n, k)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

pub(crate) fn eq26_as_printed(n: usize) -> Result<Polynomial> {
    let coeffs = (1..=n).map(|k| harmonic_closed_form(n, k)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

pub(crate) fn eq26_over_n(n: usize) -> Result<Polynomial> {
    Ok(eq26_as_printed(n)?.scale(&(Rational::one() / int(n as i64))))
}
