//! Moment integrals over `[0, 1]`:
//! `T(m, n) = ∫ G_m(x) x^n`, `I(m, n) = ∫ B_m(x) x^n`, `J(m, n) = ∫ E_m(x) x^n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, int, sign_pow, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::sequences::{bernoulli_poly, euler_poly, genocchi_number, genocchi_poly};

/// Index pair of `T(m, n)`: Genocchi index `m >= 1`, power `n >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MomentKey {
    pub m: usize,
    pub n: usize,
}

impl MomentKey {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::IndexOutOfRange { what: "moment index m", index: 0 });
        }
        Ok(MomentKey { m, n })
    }
}

/// Scope of the leading `1/(n+1)` in the closed form of `T(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormReading {
    /// `1/(n+1)` multiplies the `j`-sum only; the tail term stands alone.
    SumPrefactor,
    /// `1/(n+1)` multiplies the `j`-sum and the tail term.
    FullPrefactor,
}

impl ClosedFormReading {
    pub const ALL: [ClosedFormReading; 2] =
        [ClosedFormReading::SumPrefactor, ClosedFormReading::FullPrefactor];

    pub fn id(self) -> &'static str {
        match self {
            ClosedFormReading::SumPrefactor => "sum-prefactor",
            ClosedFormReading::FullPrefactor => "full-prefactor",
        }
    }
}

impl fmt::Display for ClosedFormReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn c(n: usize, k: usize) -> Rational {
    int(binomial(n as i64, k as i64).expect("non-negative"))
}

/// Closed form of `T(m, n)` for `m, n >= 1` under the given reading:
///
/// `1/(n+1) Σ_{j=1}^{n} (-1)^j C(n+1, j)/C(m+j, m) G_{m+j}`
/// `+ 2 (-1)^{n+1} G_{n+m+1} / ((n+m+1) C(n+m, m))`.
pub fn t_closed_with(m: usize, n: usize, reading: ClosedFormReading) -> Result<Rational> {
    if m == 0 {
        return Err(Error::IndexOutOfRange { what: "closed form m", index: 0 });
    }
    if n == 0 {
        return Err(Error::IndexOutOfRange { what: "closed form n", index: 0 });
    }
    let sum: Rational = (1..=n)
        .map(|j| sign_pow(j as i64) * c(n + 1, j) / c(m + j, m) * genocchi_number(m + j))
        .sum();
    let tail = int(2) * sign_pow(n as i64 + 1) * genocchi_number(n + m + 1)
        / (int((n + m + 1) as i64) * c(n + m, m));
    let prefactor = Rational::new(1.into(), ((n + 1) as i64).into());
    Ok(match reading {
        ClosedFormReading::SumPrefactor => prefactor * sum + tail,
        ClosedFormReading::FullPrefactor => prefactor * (sum + tail),
    })
}

/// Closed form under the reading that agrees with direct integration.
pub fn t_closed(m: usize, n: usize) -> Result<Rational> {
    t_closed_with(m, n, ClosedFormReading::SumPrefactor)
}

/// Write-once memo of recurrence values.
#[derive(Default)]
pub struct MomentTable {
    values: RwLock<HashMap<MomentKey, Rational>>,
}

impl MomentTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static MomentTable {
        static GLOBAL: OnceLock<MomentTable> = OnceLock::new();
        GLOBAL.get_or_init(MomentTable::new)
    }

    /// `T(m, 0) = -2 G_{m+1}/(m+1)` and
    /// `T(m, n) = -G_{m+1}/(m+1) - n/(m+1) T(m+1, n-1)`.
    pub fn t(&self, key: MomentKey) -> Rational {
        if let Some(v) = self.values.read().expect("moment table poisoned").get(&key) {
            return v.clone();
        }
        // Unwind the chain (m, n), (m+1, n-1), ..., (m+n, 0) bottom-up.
        let mut acc: Option<Rational> = None;
        for step in (0..=key.n).rev() {
            let k = MomentKey { m: key.m + step, n: key.n - step };
            if let Some(v) = self.values.read().expect("moment table poisoned").get(&k) {
                acc = Some(v.clone());
                continue;
            }
            let m1 = int(k.m as i64 + 1);
            let g = genocchi_number(k.m + 1) / &m1;
            let value = match acc {
                None => -int(2) * g,
                Some(prev) => -g - int(k.n as i64) / &m1 * prev,
            };
            let mut values = self.values.write().expect("moment table poisoned");
            let stored = values.entry(k).or_insert(value).clone();
            acc = Some(stored);
        }
        acc.expect("chain is non-empty")
    }
}

/// `T(m, n)` by the integration-by-parts recurrence, `m >= 1`, `n >= 0`.
pub fn t_recurrence(m: usize, n: usize) -> Result<Rational> {
    Ok(MomentTable::global().t(MomentKey::new(m, n)?))
}

fn moment(p: &Polynomial, n: usize) -> Rational {
    (p * &Polynomial::monomial(int(1), n)).integrate(&Rational::zero(), &int(1))
}

/// `∫_0^1 G_m(x) x^n dx` by direct polynomial integration.
pub fn t_oracle(m: usize, n: usize) -> Result<Rational> {
    MomentKey::new(m, n)?;
    Ok(moment(&genocchi_poly(m), n))
}

pub fn i_moment(m: usize, n: usize) -> Rational {
    moment(&bernoulli_poly(m), n)
}

pub fn j_moment(m: usize, n: usize) -> Rational {
    moment(&euler_poly(m), n)
}
