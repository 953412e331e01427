//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial, int, parse_rational, to_display_string, to_fraction_string, Rational};
use crate::error::{Error, Result};

/// Ascending coefficients with trailing zeros trimmed; the zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// k-th derivative; `k = 0` is the identity.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k > self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                // i (i-1) ... (i-k+1)
                let falling = ((i - k + 1)..=i).fold(num_bigint::BigInt::one(), |acc, j| acc * j);
                c * Rational::from_integer(falling)
            })
            .collect();
        Self::new(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(i as i64 + 1));
        }
        Self::new(coeffs)
    }

    /// `∫_a^b p(x) dx`.
    pub fn integrate(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// `q(x) = p(x + c)`, by expanding each `(x + c)^i` binomially.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (x + c)^i = a Σ_j C(i, j) c^(i-j) x^j
            let mut c_pow = Rational::one();
            for j in (0..=i).rev() {
                let b = binomial(i as i64, j as i64).expect("non-negative");
                out[j] += a * Rational::from_integer(b) * &c_pow;
                c_pow *= c;
            }
        }
        Self::new(out)
    }

    /// `q(x) = p(c x)`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut c_pow = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &c_pow);
            c_pow *= c;
        }
        Self::new(coeffs)
    }

    /// Coefficients as `p/q` strings, ascending.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(to_fraction_string).collect()
    }

    /// Comma-separated ascending coefficients, integers without `/1`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(to_display_string).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let coeff = to_display_string(&mag);
            match i {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert!(p(&[0]).is_zero());
        assert_eq!(p(&[-1, 2]).degree(), 1);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 2]).eval(&q(1, 2)), q(0, 1));
        assert_eq!(Polynomial::zero().eval(&int(7)), q(0, 1));
        assert_eq!(p(&[0, -3, 3]).eval(&int(1)), q(0, 1));
    }

    #[test]
    fn ring_ops() {
        assert_eq!(p(&[-1, 2]) + p(&[1]), p(&[0, 2]));
        assert_eq!(Polynomial::x() * Polynomial::x(), p(&[0, 0, 1]));
        assert_eq!(p(&[0, -3, 3]).scale(&q(1, 3)), p(&[0, -1, 1]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), Polynomial::zero());
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, -3, 3]).derivative(1), p(&[-3, 6]));
        assert_eq!(p(&[0, -3, 3]).derivative(0), p(&[0, -3, 3]));
        assert_eq!(p(&[-1, 2]).derivative(3), Polynomial::zero());
        assert_eq!(p(&[1, 1, 1, 1]).derivative(3), p(&[6]));
    }

    #[test]
    fn integrals() {
        assert_eq!(p(&[1]).integrate(&int(0), &int(1)), int(1));
        assert_eq!(p(&[-1, 2]).integrate(&int(0), &int(1)), int(0));
        assert_eq!(p(&[0, 1]).integrate(&int(0), &int(1)), q(1, 2));
    }

    #[test]
    fn shifts_and_dilations() {
        assert_eq!(p(&[-1, 2]).shift(&int(1)), p(&[1, 2]));
        assert_eq!(p(&[3, 4, 5]).shift(&int(0)), p(&[3, 4, 5]));
        assert_eq!(p(&[0, 0, 1]).shift(&int(-1)), p(&[1, -2, 1]));
        assert_eq!(p(&[-1, 2]).dilate(&int(2)), p(&[-1, 4]));
        assert_eq!(p(&[3, 4, 5]).dilate(&int(1)), p(&[3, 4, 5]));
        assert_eq!(
            p(&[0, 0, 1]).dilate(&q(1, 2)),
            Polynomial::monomial(q(1, 4), 2)
        );
    }

    #[test]
    fn text_forms() {
        let g2: Polynomial = "\u{2212}1,2".parse().unwrap();
        assert_eq!(g2, p(&[-1, 2]));
        assert_eq!(g2.to_string(), "2x - 1");
        assert_eq!(p(&[1, 0, -6, 4]).to_string(), "4x^3 - 6x^2 + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!("1/2,-x".parse::<Polynomial>().unwrap_err(), Error::Parse("-x".into()));
        assert_eq!(p(&[-1, 2]).to_fraction_strings(), vec!["-1/1", "2/1"]);
        assert_eq!("0,1/3".parse::<Polynomial>().unwrap().to_coeff_list(), "0,1/3");
    }
}
