mod common;

use common::*;
use genocchi::arith::{binomial, harmonic, int, rat, Rational};
use genocchi::basis::{
    from_basis, genocchi_change_matrix, solve_upper_triangular, to_basis, to_genocchi_basis, BasisKind,
};
use genocchi::identities::{
    harmonic_c, harmonic_ratio, lhs_weighted_sum, registry, rhs_theorem, verify_suite, Status, Suite,
};
use genocchi::integrals::{j_moment, t_closed, t_oracle, t_recurrence};
use genocchi::sequences::{
    euler_number, genocchi_number, genocchi_poly, number, series_oracle, Family,
};
use genocchi::Polynomial;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=25).prop_map(|(n, d)| rat(n, d).unwrap())
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero", |r| *r != int(0))
}

fn arb_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(arb_rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fundamental_theorem(p in arb_poly(12), a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(p.derivative(1).integrate(&a, &b), p.eval(&b) - p.eval(&a));
    }

    #[test]
    fn shift_and_dilate_invert(p in arb_poly(10), c in arb_nonzero_rational()) {
        prop_assert_eq!(p.shift(&c).shift(&-c.clone()), p.clone());
        prop_assert_eq!(p.dilate(&c).dilate(&(int(1) / &c)), p);
    }

    #[test]
    fn shift_agrees_with_taylor_oracle(p in arb_poly(10), c in arb_rational()) {
        prop_assert_eq!(p.shift(&c), taylor_shift(&p, &c));
    }

    #[test]
    fn shift_evaluates_at_offset(p in arb_poly(10), c in arb_rational(),
                                 xs in prop::collection::vec(arb_rational(), 20)) {
        let shifted = p.shift(&c);
        for x in &xs {
            prop_assert_eq!(shifted.eval(x), p.eval(&(x + &c)));
        }
    }

    #[test]
    fn multiplication_laws(p in arb_poly(8), q in arb_poly(8), r in arb_poly(8)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn text_round_trip(p in arb_poly(8)) {
        let parsed: Polynomial = p.to_coeff_list().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn basis_round_trips(p in arb_poly(12)) {
        for kind in [BasisKind::Bernoulli, BasisKind::Euler, BasisKind::Genocchi] {
            let e = to_basis(kind, &p);
            prop_assert_eq!(from_basis(&e), p.clone());
            prop_assert_eq!(to_basis(kind, &from_basis(&e)), e);
        }
    }

    #[test]
    fn matrix_path_matches_derivative_path(p in arb_poly(10)) {
        let m = genocchi_change_matrix(10);
        let mut solved = solve_upper_triangular(&m, &p).unwrap();
        let expected = to_genocchi_basis(&p).coefficients;
        solved.truncate(expected.len());
        prop_assert_eq!(solved, expected);
    }
}

#[test]
fn oracle_agreement_to_forty() {
    for family in Family::ALL {
        let oracle = series_oracle(family, 40);
        for (n, v) in oracle.iter().enumerate() {
            assert_eq!(&number(family, n), v, "{family} {n}");
        }
    }
}

#[test]
fn genocchi_euler_bridge() {
    for n in 0..=40usize {
        assert_eq!(genocchi_number(n + 1) / int(n as i64 + 1), euler_number(n));
    }
}

#[test]
fn genocchi_numbers_are_integers_with_odd_zeros() {
    for n in 0..=40usize {
        assert!(genocchi_number(n).is_integer());
    }
    for n in 1..=20usize {
        assert_eq!(genocchi_number(2 * n + 1), int(0));
    }
}

#[test]
fn genocchi_polynomial_laws() {
    for n in 0..=20usize {
        assert_eq!(genocchi_poly(n + 1).degree(), n as i64);
    }
    for n in 1..=20usize {
        let g = genocchi_poly(n);
        assert_eq!(g.derivative(1), genocchi_poly(n - 1).scale(&int(n as i64)));
        assert_eq!(g.integrate(&int(0), &int(1)), int(-2) * genocchi_number(n + 1) / int(n as i64 + 1));
        let delta = if n == 1 { int(2) } else { int(0) };
        assert_eq!(g.eval(&int(1)), delta - genocchi_number(n));
    }
}

#[test]
fn unit_self_expansions() {
    for kind in [BasisKind::Bernoulli, BasisKind::Euler, BasisKind::Genocchi] {
        for k in kind.start()..=12 {
            let e = to_basis(kind, &kind.element(k));
            for (j, c) in e.indexed() {
                assert_eq!(*c, if j == k { int(1) } else { int(0) }, "{kind} {k} {j}");
            }
        }
    }
}

#[test]
fn matrix_diagonal() {
    for n in 0..=20usize {
        let m = genocchi_change_matrix(n);
        for k in 1..=n + 1 {
            assert_eq!(m.get(k, k), &int(k as i64));
            for i in k + 1..=n + 1 {
                assert_eq!(m.get(i, k), &int(0));
            }
        }
    }
}

#[test]
fn three_path_moments() {
    for m in 1..=15usize {
        for n in 0..=15usize {
            let oracle = t_oracle(m, n).unwrap();
            assert_eq!(t_recurrence(m, n).unwrap(), oracle, "T({m},{n})");
            if n >= 1 {
                assert_eq!(t_closed(m, n).unwrap(), oracle, "closed T({m},{n})");
            }
        }
    }
    for m in 1..=20usize {
        assert_eq!(t_recurrence(m, 0).unwrap(), int(-2) * genocchi_number(m + 1) / int(m as i64 + 1));
    }
}

#[test]
fn euler_mean_value() {
    for m in 0..=15usize {
        assert_eq!(j_moment(m, 0), int(-2) * euler_number(m + 1) / int(m as i64 + 1));
    }
}

#[test]
fn weighted_sum_is_doubled_genocchi() {
    let mut fact = int(1);
    for n in 1..=20usize {
        fact *= int(n as i64);
        assert_eq!(lhs_weighted_sum(n).scale(&fact), genocchi_poly(n).dilate(&int(2)));
    }
}

#[test]
fn harmonic_coefficients_from_defining_sum() {
    // C_{k-1}/k! = C(n,k) (H_{n-1} - H_{n-k}) / (n (n-k+1)) for the literal definition
    for n in 1..=15usize {
        for k in 1..=n {
            let closed = int(binomial(n as i64, k as i64).unwrap())
                * (harmonic(n as u64 - 1) - harmonic((n - k) as u64))
                / int(((n - k + 1) * n) as i64);
            assert_eq!(harmonic_ratio(n, k).unwrap(), closed, "n={n} k={k}");
        }
        if n >= 2 {
            let mut f = int(1);
            for i in 1..n as i64 {
                f *= int(i);
            }
            assert_eq!(harmonic_c(n, n - 1).unwrap(), f * harmonic(n as u64 - 1));
        }
    }
}

#[test]
fn reports_are_internally_consistent() {
    let mut rng = rng(7);
    for r in verify_suite(Suite::All, 10) {
        match r.status {
            Status::NotApplicable => assert!(r.residual.is_zero()),
            status => {
                let (lhs, rhs) = (r.lhs.as_ref().unwrap(), r.rhs.as_ref().unwrap());
                assert_eq!(&(lhs - rhs), &r.residual);
                assert_eq!(status == Status::Exact, r.residual.is_zero());
                for _ in 0..10 {
                    let x = random_rational(&mut rng);
                    assert_eq!(lhs.eval(&x) - rhs.eval(&x), r.residual.eval(&x));
                }
                assert_eq!(rhs_theorem(&r.identity, &r.reading, r.n).unwrap(), *rhs);
            }
        }
    }
    assert!(registry().len() >= 21);
}
