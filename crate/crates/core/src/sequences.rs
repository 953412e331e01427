//! Bernoulli, Euler and Genocchi numbers and polynomials.
//!
//! Numbers come from linear recurrences and are memoized in a process-wide
//! [`SequenceCache`]; [`series_oracle`] recomputes them independently by
//! dividing the generating functions as truncated power series.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, int, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::series;

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bernoulli,
    Euler,
    Genocchi,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Bernoulli, Family::Euler, Family::Genocchi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::Genocchi => "genocchi",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Default)]
struct Tables {
    numbers: [Vec<Rational>; 3],
    polys: [Vec<Option<Polynomial>>; 3],
}

/// Memoized number and polynomial tables.
///
/// Entries are write-once. Growth happens under the write lock, so a reader
/// either finds a finished entry or blocks until the writer publishes it.
#[derive(Default)]
pub struct SequenceCache {
    tables: RwLock<Tables>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The shared cache used by the free functions of this module.
    pub fn global() -> &'static SequenceCache {
        static GLOBAL: OnceLock<SequenceCache> = OnceLock::new();
        GLOBAL.get_or_init(SequenceCache::new)
    }

    pub fn number(&self, family: Family, n: usize) -> Rational {
        {
            let tables = self.tables.read().expect("sequence cache poisoned");
            if let Some(v) = tables.numbers[family.slot()].get(n) {
                return v.clone();
            }
        }
        let mut tables = self.tables.write().expect("sequence cache poisoned");
        let table = &mut tables.numbers[family.slot()];
        while table.len() <= n {
            let next = next_number(family, table);
            table.push(next);
        }
        table[n].clone()
    }

    /// Numbers `0..=n` of one family.
    pub fn numbers(&self, family: Family, n: usize) -> Vec<Rational> {
        self.number(family, n);
        let tables = self.tables.read().expect("sequence cache poisoned");
        tables.numbers[family.slot()][..=n].to_vec()
    }

    /// `P_n(x) = Σ_k C(n, k) c_k x^(n-k)` for the family's numbers `c_k`.
    pub fn poly(&self, family: Family, n: usize) -> Polynomial {
        {
            let tables = self.tables.read().expect("sequence cache poisoned");
            if let Some(Some(p)) = tables.polys[family.slot()].get(n) {
                return p.clone();
            }
        }
        let numbers = self.numbers(family, n);
        let p = appell_poly(&numbers);
        let mut tables = self.tables.write().expect("sequence cache poisoned");
        let table = &mut tables.polys[family.slot()];
        if table.len() <= n {
            table.resize(n + 1, None);
        }
        table[n].get_or_insert(p).clone()
    }
}

/// Next entry of `table` from the family's linear recurrence.
fn next_number(family: Family, table: &[Rational]) -> Rational {
    let n = table.len() as i64;
    let c = |n: i64, k: i64| int(binomial(n, k).expect("non-negative"));
    match family {
        // Σ_{k=0}^{m} C(m+1, k) B_k = δ_{1,m+1}, solved for B_m.
        Family::Bernoulli => {
            if n == 0 {
                return Rational::one();
            }
            let s: Rational = table.iter().enumerate().map(|(k, b)| c(n + 1, k as i64) * b).sum();
            -s / int(n + 1)
        }
        // 2 E_n + Σ_{k<n} C(n, k) E_k = 2 δ_{0,n}.
        Family::Euler => {
            if n == 0 {
                return Rational::one();
            }
            let s: Rational = table.iter().enumerate().map(|(k, e)| c(n, k as i64) * e).sum();
            -s / int(2)
        }
        // 2 G_n + Σ_{k<n} C(n, k) G_k = 2 δ_{1,n}, with G_0 = 0.
        Family::Genocchi => {
            if n == 0 {
                return Rational::zero();
            }
            let s: Rational = table.iter().enumerate().map(|(k, g)| c(n, k as i64) * g).sum();
            let delta = if n == 1 { int(2) } else { Rational::zero() };
            (delta - s) / int(2)
        }
    }
}

fn appell_poly(numbers: &[Rational]) -> Polynomial {
    let n = numbers.len() - 1;
    let coeffs = (0..=n)
        .map(|j| {
            // coefficient of x^j comes from k = n - j
            let k = n - j;
            int(binomial(n as i64, k as i64).expect("non-negative")) * &numbers[k]
        })
        .collect();
    Polynomial::new(coeffs)
}

pub fn bernoulli_number(n: usize) -> Rational {
    SequenceCache::global().number(Family::Bernoulli, n)
}

pub fn euler_number(n: usize) -> Rational {
    SequenceCache::global().number(Family::Euler, n)
}

pub fn genocchi_number(n: usize) -> Rational {
    SequenceCache::global().number(Family::Genocchi, n)
}

pub fn bernoulli_poly(n: usize) -> Polynomial {
    SequenceCache::global().poly(Family::Bernoulli, n)
}

pub fn euler_poly(n: usize) -> Polynomial {
    SequenceCache::global().poly(Family::Euler, n)
}

/// `G_n(x)`, of degree `n - 1` (the zero polynomial for `n = 0`).
pub fn genocchi_poly(n: usize) -> Polynomial {
    SequenceCache::global().poly(Family::Genocchi, n)
}

pub fn number(family: Family, n: usize) -> Rational {
    SequenceCache::global().number(family, n)
}

pub fn poly(family: Family, n: usize) -> Polynomial {
    SequenceCache::global().poly(family, n)
}

/// Number lookup for signed indices, as they arise inside summation
/// formulas. Negative indices are reported rather than clamped.
pub fn number_at(family: Family, index: i64) -> Result<Rational> {
    if index < 0 {
        return Err(Error::IndexOutOfRange { what: family.name(), index });
    }
    Ok(number(family, index as usize))
}

pub fn poly_at(family: Family, index: i64) -> Result<Polynomial> {
    if index < 0 {
        return Err(Error::IndexOutOfRange { what: family.name(), index });
    }
    Ok(poly(family, index as usize))
}

/// Numbers `0..=order` from the generating functions
/// `t/(e^t - 1)`, `2/(e^t + 1)` and `2t/(e^t + 1)`, by truncated series
/// division. Shares nothing with the recurrences.
pub fn series_oracle(family: Family, order: usize) -> Vec<Rational> {
    let len = order + 1;
    let exp = series::exp_series(len + 1);
    let coeffs = match family {
        Family::Bernoulli => {
            // (e^t - 1)/t = Σ t^k/(k+1)!
            let den: Vec<Rational> = exp[1..].to_vec();
            series::divide(&[Rational::one()], &den, len)
        }
        Family::Euler | Family::Genocchi => {
            let mut den = exp.clone();
            den[0] += Rational::one();
            let num = match family {
                Family::Euler => vec![int(2)],
                _ => vec![Rational::zero(), int(2)],
            };
            series::divide(&num, &den, len)
        }
    };
    series::egf_values(&coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(1), q(-1, 2));
        assert_eq!(euler_number(2), int(0));
        assert_eq!(euler_number(3), q(1, 4));
    }

    #[test]
    fn genocchi_values() {
        let listed = [1, -1, 0, 1, 0, -3, 0, 17];
        for (i, g) in listed.iter().enumerate() {
            assert_eq!(genocchi_number(i + 1), int(*g), "G_{}", i + 1);
        }
        assert_eq!(genocchi_number(0), int(0));
        assert_eq!(genocchi_number(10), int(-155));
    }

    #[test]
    fn genocchi_polys() {
        assert_eq!(genocchi_poly(0), Polynomial::zero());
        assert_eq!(genocchi_poly(1), Polynomial::from_integers(&[1]));
        assert_eq!(genocchi_poly(2), Polynomial::from_integers(&[-1, 2]));
        assert_eq!(genocchi_poly(3), Polynomial::from_integers(&[0, -3, 3]));
        // constant term is C(4,4) G_4 = +1
        assert_eq!(genocchi_poly(4), Polynomial::from_integers(&[1, 0, -6, 4]));
    }

    #[test]
    fn other_polys() {
        assert_eq!(bernoulli_poly(1), Polynomial::new(vec![q(-1, 2), int(1)]));
        assert_eq!(bernoulli_poly(2), Polynomial::new(vec![q(1, 6), int(-1), int(1)]));
        assert_eq!(euler_poly(1), Polynomial::new(vec![q(-1, 2), int(1)]));
        assert_eq!(euler_poly(2), Polynomial::new(vec![int(0), int(-1), int(1)]));
    }

    #[test]
    fn oracle_small_orders() {
        let g = series_oracle(Family::Genocchi, 8);
        let expected: Vec<Rational> = [0, 1, -1, 0, 1, 0, -3, 0, 17].iter().map(|&v| int(v)).collect();
        assert_eq!(g, expected);
        assert_eq!(series_oracle(Family::Bernoulli, 0), vec![int(1)]);
        assert_eq!(series_oracle(Family::Euler, 0), vec![int(1)]);
    }

    #[test]
    fn negative_index_is_an_error() {
        assert_eq!(
            number_at(Family::Genocchi, -1),
            Err(Error::IndexOutOfRange { what: "genocchi", index: -1 })
        );
        assert!(poly_at(Family::Euler, -3).is_err());
        assert_eq!(number_at(Family::Genocchi, 8).unwrap(), int(17));
    }

    #[test]
    fn private_cache_matches_global() {
        let cache = SequenceCache::new();
        assert_eq!(cache.poly(Family::Genocchi, 6), genocchi_poly(6));
        assert_eq!(cache.numbers(Family::Euler, 5), (0..=5).map(euler_number).collect::<Vec<_>>());
    }

    #[test]
    fn concurrent_readers_see_identical_values() {
        let cache = SequenceCache::new();
        let results: Vec<Vec<Rational>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|i| {
                    let cache = &cache;
                    s.spawn(move || (0..=30).rev().map(|n| cache.number(Family::ALL[i % 3], n)).collect())
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (i, r) in results.iter().enumerate() {
            let mut expect: Vec<Rational> = (0..=30).map(|n| number(Family::ALL[i % 3], n)).collect();
            expect.reverse();
            assert_eq!(r, &expect);
        }
    }
}
