//! Exact Genocchi, Bernoulli and Euler numbers and polynomials.
//!
//! Everything is computed over the rationals with no floating-point path:
//! number tables, polynomial calculus, expansions in the three polynomial
//! bases, moment integrals over `[0, 1]`, and a verifier that builds both
//! sides of each registered identity and reports the exact residual.

pub mod arith;
pub mod basis;
pub mod cli;
pub mod error;
pub mod identities;
pub mod integrals;
pub mod polynomial;
pub mod render;
pub mod sequences;
mod series;

pub use arith::{binomial, factorial, harmonic, kronecker, rat, Integer, Rational};
pub use error::{Error, Result};
pub use polynomial::Polynomial;
pub use sequences::{series_oracle, Family, SequenceCache};
