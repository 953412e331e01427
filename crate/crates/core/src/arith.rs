//! Exact scalars: big integers, normalized rationals and the combinatorial
//! helpers (binomials, factorials, harmonic numbers, Kronecker delta).
//!
//! `Rational` is `num_rational::BigRational`, which reduces after every
//! operation and keeps the denominator positive, so structural equality is
//! mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Builds the normalized fraction `num/den`.
pub fn rat(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// Integer-valued rational.
pub fn int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeArgument { what: "binomial", value: n });
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    Ok(acc)
}

pub fn factorial(n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeArgument { what: "factorial", value: n });
    }
    Ok((1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i)))
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| acc + Rational::new(Integer::one(), Integer::from(j)))
}

pub fn kronecker(n: i64, m: i64) -> Integer {
    if n == m {
        Integer::one()
    } else {
        Integer::zero()
    }
}

/// `(-1)^e` for any integer exponent.
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Machine form: always `p/q`.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: integers without the `/1`.
pub fn to_display_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        to_fraction_string(r)
    }
}

/// Parses `p`, `p/q`, accepting the Unicode minus sign as well as `-`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned = text.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(text.trim().to_string());
    let parse_int = |s: &str| -> Result<Integer> {
        let s = s.trim();
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<Integer>().map_err(|_| bad())
    };
    match cleaned.split_once('/') {
        None => Ok(int(parse_int(&cleaned)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
    }
}

/// True when the value has denominator one.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}
