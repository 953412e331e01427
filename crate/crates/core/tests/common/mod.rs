#![allow(dead_code)]

use genocchi::arith::{int, rat, Rational};
use genocchi::Polynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=20)).unwrap()
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != int(0) {
            return r;
        }
    }
}

pub fn random_poly(rng: &mut impl Rng, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::new((0..=d).map(|_| random_rational(rng)).collect())
}

/// `p(x + c)` by Taylor expansion at `c`: `Σ_k p^(k)(c)/k! x^k`.
pub fn taylor_shift(p: &Polynomial, c: &Rational) -> Polynomial {
    let mut coeffs = Vec::new();
    let mut k_fact = int(1);
    for k in 0..p.coeffs().len() {
        if k > 0 {
            k_fact *= int(k as i64);
        }
        coeffs.push(p.derivative(k).eval(c) / &k_fact);
    }
    Polynomial::new(coeffs)
}
