//! Expansions in the Bernoulli, Euler and Genocchi bases, and the
//! upper-triangular matrix whose columns are Genocchi polynomials.
//!
//! The derivative formulas are the primary route. The matrix solver is a
//! second, independent route to the Genocchi coefficients.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, int, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::sequences::{bernoulli_poly, euler_poly, genocchi_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Power,
    Bernoulli,
    Euler,
    Genocchi,
}

impl BasisKind {
    /// Index of the first basis element: 1 for Genocchi, 0 otherwise.
    pub fn start(self) -> usize {
        match self {
            BasisKind::Genocchi => 1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Power => "power",
            BasisKind::Bernoulli => "bernoulli",
            BasisKind::Euler => "euler",
            BasisKind::Genocchi => "genocchi",
        }
    }

    /// The basis polynomial with index `k`.
    pub fn element(self, k: usize) -> Polynomial {
        match self {
            BasisKind::Power => Polynomial::monomial(int(1), k),
            BasisKind::Bernoulli => bernoulli_poly(k),
            BasisKind::Euler => euler_poly(k),
            BasisKind::Genocchi => genocchi_poly(k),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients of a polynomial in one basis. `coefficients[i]` multiplies
/// basis element `start + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub kind: BasisKind,
    pub start: usize,
    pub coefficients: Vec<Rational>,
}

impl BasisExpansion {
    pub fn new(kind: BasisKind, coefficients: Vec<Rational>) -> Self {
        BasisExpansion { kind, start: kind.start(), coefficients }
    }

    /// Coefficient of basis element `k` (zero when absent).
    pub fn coefficient(&self, k: usize) -> Rational {
        k.checked_sub(self.start)
            .and_then(|i| self.coefficients.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// `(index, coefficient)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coefficients.iter().enumerate().map(move |(i, c)| (self.start + i, c))
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::new(1.into(), factorial(k as i64).expect("non-negative"))
}

fn degree(p: &Polynomial) -> Option<usize> {
    usize::try_from(p.degree()).ok()
}

/// `a_0 = ∫_0^1 p` and `a_k = (p^(k-1)(1) - p^(k-1)(0)) / k!`.
pub fn to_bernoulli_basis(p: &Polynomial) -> BasisExpansion {
    let Some(n) = degree(p) else {
        return BasisExpansion::new(BasisKind::Bernoulli, vec![Rational::zero()]);
    };
    let (zero, one) = (int(0), int(1));
    let mut coeffs = vec![p.integrate(&zero, &one)];
    for k in 1..=n {
        let d = p.derivative(k - 1);
        coeffs.push((d.eval(&one) - d.eval(&zero)) * inv_factorial(k));
    }
    BasisExpansion::new(BasisKind::Bernoulli, coeffs)
}

/// `b_k = (p^(k)(1) + p^(k)(0)) / (2 k!)`.
pub fn to_euler_basis(p: &Polynomial) -> BasisExpansion {
    let Some(n) = degree(p) else {
        return BasisExpansion::new(BasisKind::Euler, vec![Rational::zero()]);
    };
    let (zero, one) = (int(0), int(1));
    let coeffs = (0..=n)
        .map(|k| {
            let d = p.derivative(k);
            (d.eval(&one) + d.eval(&zero)) * inv_factorial(k) / int(2)
        })
        .collect();
    BasisExpansion::new(BasisKind::Euler, coeffs)
}

/// `a_k = (p^(k-1)(1) + p^(k-1)(0)) / (2 k!)` for `k = 1..=deg p + 1`.
pub fn to_genocchi_basis(p: &Polynomial) -> BasisExpansion {
    let Some(n) = degree(p) else {
        return BasisExpansion::new(BasisKind::Genocchi, vec![Rational::zero()]);
    };
    let (zero, one) = (int(0), int(1));
    let coeffs = (1..=n + 1)
        .map(|k| {
            let d = p.derivative(k - 1);
            (d.eval(&one) + d.eval(&zero)) * inv_factorial(k) / int(2)
        })
        .collect();
    BasisExpansion::new(BasisKind::Genocchi, coeffs)
}

pub fn to_basis(kind: BasisKind, p: &Polynomial) -> BasisExpansion {
    match kind {
        BasisKind::Power => {
            let coeffs = if p.is_zero() { vec![Rational::zero()] } else { p.coeffs().to_vec() };
            BasisExpansion::new(BasisKind::Power, coeffs)
        }
        BasisKind::Bernoulli => to_bernoulli_basis(p),
        BasisKind::Euler => to_euler_basis(p),
        BasisKind::Genocchi => to_genocchi_basis(p),
    }
}

/// `Σ c_k · basis_k(x)` in power-basis form.
pub fn from_basis(e: &BasisExpansion) -> Polynomial {
    e.indexed()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| e.kind.element(k).scale(c))
        .sum()
}

/// Upper-triangular `(n+1) x (n+1)` matrix; column `j` (0-based) holds the
/// power-basis coefficients of `G_{j+1}(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub n: usize,
    pub entries: Vec<Vec<Rational>>,
}

impl BasisMatrix {
    /// Entry `g_{i,j}` with the 1-based indices used for the matrix rows
    /// and columns.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    pub fn order(&self) -> usize {
        self.n + 1
    }

    /// `M · c` as a polynomial in the power basis.
    pub fn apply(&self, c: &[Rational]) -> Polynomial {
        let coeffs = self
            .entries
            .iter()
            .map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum())
            .collect();
        Polynomial::new(coeffs)
    }
}

pub fn genocchi_change_matrix(n: usize) -> BasisMatrix {
    let size = n + 1;
    let mut entries = vec![vec![Rational::zero(); size]; size];
    for j in 0..size {
        let g = genocchi_poly(j + 1);
        for (i, row) in entries.iter_mut().enumerate() {
            row[j] = g.coeff(i);
        }
    }
    BasisMatrix { n, entries }
}

/// Back-substitution for `M c = p`, returning `c_1, ..., c_{n+1}`.
pub fn solve_upper_triangular(m: &BasisMatrix, p: &Polynomial) -> Result<Vec<Rational>> {
    let size = m.order();
    if p.degree() >= size as i64 {
        return Err(Error::DegreeTooLarge { degree: p.degree() as usize, order: size });
    }
    let mut c = vec![Rational::zero(); size];
    for i in (0..size).rev() {
        let diag = &m.entries[i][i];
        if diag.is_zero() {
            return Err(Error::SingularDiagonal(i + 1));
        }
        let tail: Rational = (i + 1..size).map(|j| &m.entries[i][j] * &c[j]).sum();
        c[i] = (p.coeff(i) - tail) / diag;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn bernoulli_expansions() {
        assert_eq!(to_bernoulli_basis(&Polynomial::one()).coefficients, ints(&[1]));
        assert_eq!(to_bernoulli_basis(&Polynomial::x()).coefficients, vec![q(1, 2), int(1)]);
        let unit = to_bernoulli_basis(&bernoulli_poly(5));
        assert_eq!(unit.coefficients, ints(&[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn euler_expansions() {
        assert_eq!(to_euler_basis(&Polynomial::one()).coefficients, ints(&[1]));
        assert_eq!(to_euler_basis(&euler_poly(4)).coefficients, ints(&[0, 0, 0, 0, 1]));
        assert_eq!(to_euler_basis(&Polynomial::x()).coefficients, vec![q(1, 2), int(1)]);
    }

    #[test]
    fn genocchi_expansions() {
        let e = to_genocchi_basis(&Polynomial::one());
        assert_eq!((e.start, e.coefficients), (1, ints(&[1])));
        assert_eq!(to_genocchi_basis(&genocchi_poly(4)).coefficients, ints(&[0, 0, 0, 1]));
        let x = to_genocchi_basis(&Polynomial::x());
        assert_eq!(x.coefficients, vec![q(1, 2), q(1, 2)]);
        assert_eq!(x.coefficient(2), q(1, 2));
        assert_eq!(x.coefficient(0), int(0));
    }

    #[test]
    fn zero_polynomial_expands_to_single_zero() {
        for kind in [BasisKind::Power, BasisKind::Bernoulli, BasisKind::Euler, BasisKind::Genocchi] {
            let e = to_basis(kind, &Polynomial::zero());
            assert_eq!(e.coefficients, ints(&[0]));
            assert_eq!(from_basis(&e), Polynomial::zero());
        }
    }

    #[test]
    fn reconstruction() {
        let g = BasisExpansion::new(BasisKind::Genocchi, ints(&[1]));
        assert_eq!(from_basis(&g), Polynomial::one());
        let b = BasisExpansion::new(BasisKind::Bernoulli, ints(&[0, 1]));
        assert_eq!(from_basis(&b), Polynomial::new(vec![q(-1, 2), int(1)]));
        let e = BasisExpansion::new(BasisKind::Euler, vec![q(1, 2), int(1)]);
        assert_eq!(from_basis(&e), Polynomial::x());
    }

    #[test]
    fn matrices() {
        let m2 = genocchi_change_matrix(2);
        assert_eq!(m2.entries, vec![ints(&[1, -1, 0]), ints(&[0, 2, -3]), ints(&[0, 0, 3])]);
        assert_eq!(genocchi_change_matrix(0).entries, vec![ints(&[1])]);
        let m3 = genocchi_change_matrix(3);
        assert_eq!(
            m3.entries,
            vec![ints(&[1, -1, 0, 1]), ints(&[0, 2, -3, 0]), ints(&[0, 0, 3, -6]), ints(&[0, 0, 0, 4])]
        );
        assert_eq!(m3.get(1, 4), &int(1));
    }

    #[test]
    fn back_substitution() {
        let m2 = genocchi_change_matrix(2);
        assert_eq!(solve_upper_triangular(&m2, &genocchi_poly(2)).unwrap(), ints(&[0, 1, 0]));
        let x2 = Polynomial::monomial(int(1), 2);
        let solved = solve_upper_triangular(&m2, &x2).unwrap();
        assert_eq!(solved, to_genocchi_basis(&x2).coefficients);
        assert_eq!(m2.apply(&solved), x2);
        let five = Polynomial::constant(int(5));
        assert_eq!(solve_upper_triangular(&genocchi_change_matrix(0), &five).unwrap(), ints(&[5]));
    }

    #[test]
    fn solver_errors() {
        let m0 = genocchi_change_matrix(0);
        assert_eq!(
            solve_upper_triangular(&m0, &Polynomial::x()),
            Err(Error::DegreeTooLarge { degree: 1, order: 1 })
        );
        let singular = BasisMatrix { n: 1, entries: vec![ints(&[1, 0]), ints(&[0, 0])] };
        assert_eq!(solve_upper_triangular(&singular, &Polynomial::x()), Err(Error::SingularDiagonal(2)));
    }
}
