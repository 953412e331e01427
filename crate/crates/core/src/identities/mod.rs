//! Registry of identities with exact verification.
//!
//! Every identity has a left-hand side and one or more readings of its
//! right-hand side. Verification builds both sides as exact polynomials
//! and reports the residual `lhs - rhs`; a reading is exact at `n` iff the
//! residual is the zero polynomial. Readings that reach an undefined term
//! (negative index, zero divisor) are reported as not applicable.

mod formulas;
mod report;
mod terms;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

pub use formulas::{
    addition_step, addition_theorem_sides, harmonic_c, harmonic_closed_form, harmonic_ratio,
    lhs_harmonic_sum, lhs_product_sum, lhs_weighted_sum, CLOSED_FORM_M_MAX,
};
pub use report::{
    summarize, FailedReading, IdentitySummary, ReportDocument, ReportMetadata, ReportRecord,
};

/// One side of an identity as a function of `n`.
pub type Side = fn(usize) -> Result<Polynomial>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Independently derivable identities that must all hold.
    Foundation,
    /// Theorem and corollary statements under audit.
    Theorems,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Foundation => "foundation",
            Suite::Theorems => "theorems",
            Suite::All => "all",
        }
    }

    fn contains(self, member: Suite) -> bool {
        self == Suite::All || self == member
    }
}

pub struct Reading {
    pub id: &'static str,
    pub description: &'static str,
    pub rhs: Side,
}

pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub suite: Suite,
    /// Smallest `n` at which every index in the formula is defined.
    pub min_n: usize,
    pub lhs: Side,
    /// Sorted by reading id.
    pub readings: Vec<Reading>,
}

impl IdentitySpec {
    pub fn in_domain(&self, n: usize) -> bool {
        n >= self.min_n
    }

    pub fn reading(&self, id: &str) -> Result<&Reading> {
        self.readings.iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownReading {
            identity: self.id.to_string(),
            reading: id.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Mismatch,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub reading: String,
    pub n: usize,
    pub lhs: Option<Polynomial>,
    pub rhs: Option<Polynomial>,
    /// `lhs - rhs`; zero when not applicable.
    pub residual: Polynomial,
    pub status: Status,
}

macro_rules! reading {
    ($id:expr, $desc:expr, $rhs:path) => {
        Reading { id: $id, description: $desc, rhs: $rhs }
    };
}

fn build_registry() -> Vec<IdentitySpec> {
    use formulas as f;
    use Suite::{Foundation, Theorems};

    let mut specs = vec![
        IdentitySpec {
            id: "eq3",
            description: "∫_0^x G_n(t) dt = (G_{n+1}(x) - G_{n+1}(0)) / (n+1)",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq3_lhs,
            readings: vec![reading!("as-printed", "antiderivative via G_{n+1}", f::eq3_rhs)],
        },
        IdentitySpec {
            id: "eq4",
            description: "G_n(x) = Σ_k C(n,k) G_k x^{n-k}, numbers from the generating function",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq4_lhs,
            readings: vec![reading!("as-printed", "series-oracle numbers", f::eq4_rhs)],
        },
        IdentitySpec {
            id: "eq5",
            description: "∫_0^1 G_n(x) dx = -2 G_{n+1} / (n+1)",
            suite: Foundation,
            min_n: 1,
            lhs: f::eq5_lhs,
            readings: vec![reading!("as-printed", "mean value", f::eq5_rhs)],
        },
        IdentitySpec {
            id: "eq7",
            description: "(G_{n+1}(x+1) + G_{n+1}(x)) / (n+1) = 2 x^n",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq7_lhs,
            readings: vec![reading!("as-printed", "2 x^n", f::eq7_rhs)],
        },
        IdentitySpec {
            id: "eq13-bernoulli",
            description: "B_n(x) = Σ_k C(n,k) B_k x^{n-k}, numbers from the generating function",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq13b_lhs,
            readings: vec![reading!("as-printed", "series-oracle numbers", f::eq13b_rhs)],
        },
        IdentitySpec {
            id: "eq13-euler",
            description: "E_n(x) = Σ_k C(n,k) E_k x^{n-k}, numbers from the generating function",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq13e_lhs,
            readings: vec![reading!("as-printed", "series-oracle numbers", f::eq13e_rhs)],
        },
        IdentitySpec {
            id: "eq17",
            description: "closed form of T(m,n) against direct integration; coefficient of x^{m-1} is T(m,n), m = 1..15",
            suite: Foundation,
            min_n: 1,
            lhs: f::eq17_lhs,
            readings: vec![
                reading!("full-prefactor", "1/(n+1) scales the j-sum and the tail term", f::eq17_full_prefactor),
                reading!("sum-prefactor", "1/(n+1) scales the j-sum only", f::eq17_sum_prefactor),
            ],
        },
        IdentitySpec {
            id: "eq21",
            description: "Σ_k C(n,k) G_k(x) y^{n-k} = G_n(x+y) at y = 3/7",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq21_lhs,
            readings: vec![reading!("as-printed", "argument shift", f::eq21_rhs)],
        },
        IdentitySpec {
            id: "eq22",
            description: "G_n(2x)/n! = Σ_k G_k(x) x^{n-k} / (k!(n-k)!)",
            suite: Foundation,
            min_n: 0,
            lhs: f::lhs_doubled,
            readings: vec![reading!("as-printed", "weighted product sum", f::lhs_weighted)],
        },
        IdentitySpec {
            id: "eq29",
            description: "G_{n+1}/(n+1) = E_n",
            suite: Foundation,
            min_n: 0,
            lhs: f::eq29_lhs,
            readings: vec![reading!("as-printed", "Euler number", f::eq29_rhs)],
        },
        IdentitySpec {
            id: "thm2.1",
            description: "Σ_{l=0}^n G_l(x) x^{n-l} in the Bernoulli basis, Genocchi numbers",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_product,
            readings: vec![
                reading!("as-printed", "trailing terms inside the k-sum, outside the j-sum", f::thm21_as_printed),
                reading!("dangling-in-j-sum", "trailing terms inside the j-sum", f::thm21_in_j_sum),
                reading!("proof-line", "constant Σ T(k,n-k); coefficients from G_{l-k+1}(1) and 0^{n-l}", f::thm21_proof_line),
            ],
        },
        IdentitySpec {
            id: "cor2.1-euler",
            description: "Σ_{l=0}^n G_l(x) x^{n-l} in the Bernoulli basis, Euler numbers",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_product,
            readings: vec![
                reading!("as-printed", "trailing terms inside the k-sum, outside the j-sum", f::cor21_as_printed),
                reading!("dangling-in-j-sum", "trailing terms inside the j-sum", f::cor21_in_j_sum),
            ],
        },
        IdentitySpec {
            id: "thm2.3",
            description: "Σ_{l=0}^n G_l(x) x^{n-l} in the Euler basis, Genocchi numbers",
            suite: Theorems,
            min_n: 1,
            lhs: f::lhs_product,
            readings: vec![
                reading!("as-printed", "G_{n-k} subtracted in every summand", f::thm23_as_printed),
                reading!("proof-line", "coefficients from G_{l-k}(1) and 0^{n-l}", f::thm23_proof_line),
                reading!("single-tail", "G_{n-k} subtracted once", f::thm23_single_tail),
            ],
        },
        IdentitySpec {
            id: "cor2.3-euler",
            description: "Σ_{l=0}^n G_l(x) x^{n-l} in the Euler basis, Euler numbers",
            suite: Theorems,
            min_n: 1,
            lhs: f::lhs_product,
            readings: vec![
                reading!("as-printed", "(n-k) E_{n-k-1} subtracted in every summand", f::cor23_as_printed),
                reading!("single-tail", "(n-k) E_{n-k-1} subtracted once", f::cor23_single_tail),
            ],
        },
        IdentitySpec {
            id: "thm2.4",
            description: "Σ_{l=0}^n G_l(x) x^{n-l}/(l!(n-l)!) in the Genocchi basis",
            suite: Theorems,
            min_n: 1,
            lhs: f::lhs_weighted,
            readings: vec![
                reading!("as-printed", "inner index G_{l-j+1}", f::thm24_as_printed),
                reading!("proof-index", "inner index G_{j-l+1}", f::thm24_proof_index),
                reading!("proof-line", "coefficients from G_{j-l+1}(1) and 0^{n-j}", f::thm24_proof_line),
            ],
        },
        IdentitySpec {
            id: "cor2.4-doubling",
            description: "G_n(2x)/n! in the Genocchi basis",
            suite: Theorems,
            min_n: 1,
            lhs: f::lhs_doubled,
            readings: vec![
                reading!("as-printed", "inner index G_{l-j+1}", f::thm24_as_printed),
                reading!("proof-index", "inner index G_{j-l+1}", f::thm24_proof_index),
            ],
        },
        IdentitySpec {
            id: "thm2.5",
            description: "Σ_{l=0}^n G_l(x) x^{n-l}/(l!(n-l)!) in the Bernoulli basis, Genocchi numbers",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_weighted,
            readings: vec![
                reading!("as-printed", "trailing term inside the l-sum, outside the j-sum", f::thm25_as_printed),
                reading!("dangling-in-j-sum", "trailing term inside the j-sum", f::thm25_in_j_sum),
                reading!("proof-line", "constant Σ T(l,n-l)/(l!(n-l)!); coefficients from G_{l-k+1}(1) and 0^{n-l}", f::thm25_proof_line),
            ],
        },
        IdentitySpec {
            id: "cor2.5-euler",
            description: "Σ_{l=0}^n G_l(x) x^{n-l}/(l!(n-l)!) in the Bernoulli basis, Euler numbers",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_weighted,
            readings: vec![
                reading!("as-printed", "trailing term inside the l-sum; l = k-1 summand as written", f::cor25_as_printed),
                reading!("dangling-in-j-sum", "trailing term inside the j-sum; l = k-1 summand as written", f::cor25_in_j_sum),
                reading!("lowest-term-restored", "l = k-1 summand taken in Genocchi form, 2/(n-k+1)!", f::cor25_lowest_restored),
            ],
        },
        IdentitySpec {
            id: "thm2.6",
            description: "Σ_{k=1}^{n-1} G_k(x) x^{n-k}/(k(n-k)) in the Genocchi basis",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_harmonic,
            readings: vec![
                reading!("as-printed", "harmonic closed form for C_{k-1}/k!", f::thm26_as_printed),
                reading!("defining-sum", "C_{k-1}/k! from its defining sum", f::thm26_defining_sum),
                reading!("proof-line", "coefficients from C_{k-1}, G_{l-k+1}(1) and 0^{n-l}", f::thm26_proof_line),
            ],
        },
        IdentitySpec {
            id: "cor2.6-euler",
            description: "Σ_{k=1}^{n-1} G_k(x) x^{n-k}/(k(n-k)) in terms of k E_{k-1}(x)",
            suite: Theorems,
            min_n: 2,
            lhs: f::lhs_harmonic,
            readings: vec![reading!("as-printed", "harmonic closed form, Euler numbers", f::cor26_as_printed)],
        },
        IdentitySpec {
            id: "eq26",
            description: "C_{k-1}/k! against C(n,k)(H_{n-1} - H_{n-k})/(n-k+1); coefficient of x^{k-1} per k = 1..n",
            suite: Theorems,
            min_n: 1,
            lhs: f::eq26_lhs,
            readings: vec![
                reading!("as-printed", "C(n,k)(H_{n-1} - H_{n-k})/(n-k+1)", f::eq26_as_printed),
                reading!("over-n", "C(n,k)(H_{n-1} - H_{n-k})/(n(n-k+1))", f::eq26_over_n),
            ],
        },
    ];
    for spec in &mut specs {
        spec.readings.sort_by_key(|r| r.id);
    }
    specs
}

/// All registered identities, foundation first.
pub fn registry() -> &'static [IdentitySpec] {
    static REGISTRY: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// The right-hand side of identity `id` under `reading` at `n`.
pub fn rhs_theorem(id: &str, reading: &str, n: usize) -> Result<Polynomial> {
    let spec = lookup(id)?;
    let reading = spec.reading(reading)?;
    if !spec.in_domain(n) {
        return Err(Error::IndexOutOfRange { what: "identity domain", index: n as i64 });
    }
    (reading.rhs)(n)
}

fn not_applicable(spec: &IdentitySpec, reading: &Reading, n: usize) -> IdentityReport {
    IdentityReport {
        identity: spec.id.to_string(),
        reading: reading.id.to_string(),
        n,
        lhs: None,
        rhs: None,
        residual: Polynomial::zero(),
        status: Status::NotApplicable,
    }
}

fn evaluate(spec: &IdentitySpec, n: usize) -> Vec<IdentityReport> {
    let lhs = if spec.in_domain(n) { (spec.lhs)(n).ok() } else { None };
    spec.readings
        .iter()
        .map(|reading| {
            let Some(lhs) = &lhs else {
                return not_applicable(spec, reading, n);
            };
            match (reading.rhs)(n) {
                Ok(rhs) => {
                    let residual = lhs - &rhs;
                    let status = if residual.is_zero() { Status::Exact } else { Status::Mismatch };
                    IdentityReport {
                        identity: spec.id.to_string(),
                        reading: reading.id.to_string(),
                        n,
                        lhs: Some(lhs.clone()),
                        rhs: Some(rhs),
                        residual,
                        status,
                    }
                }
                Err(_) => not_applicable(spec, reading, n),
            }
        })
        .collect()
}

fn run(specs: &[&IdentitySpec], ns: &[usize]) -> Vec<IdentityReport> {
    let jobs: Vec<(&IdentitySpec, usize)> =
        specs.iter().flat_map(|s| ns.iter().map(move |&n| (*s, n))).collect();
    jobs.into_par_iter().flat_map_iter(|(spec, n)| evaluate(spec, n)).collect()
}

/// Reports for each `n` and reading, ordered by `(n, reading)`.
pub fn verify(id: &str, ns: impl IntoIterator<Item = usize>) -> Result<Vec<IdentityReport>> {
    let spec = lookup(id)?;
    let mut ns: Vec<usize> = ns.into_iter().collect();
    ns.sort_unstable();
    ns.dedup();
    Ok(run(&[spec], &ns))
}

/// Every identity of `suite` for `n = 0..=n_max`, ordered by registry
/// position, then `n`, then reading.
pub fn verify_suite(suite: Suite, n_max: usize) -> Vec<IdentityReport> {
    let specs: Vec<&IdentitySpec> = registry().iter().filter(|s| suite.contains(s.suite)).collect();
    let ns: Vec<usize> = (0..=n_max).collect();
    run(&specs, &ns)
}

pub fn verify_foundation(n_max: usize) -> Vec<IdentityReport> {
    verify_suite(Suite::Foundation, n_max)
}
