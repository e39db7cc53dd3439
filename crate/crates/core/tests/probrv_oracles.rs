#![allow(clippy::needless_range_loop)]

use degstir::probrv::*;
use degstir::triangles::{lah, stirling1_classical, stirling2_degenerate};
use degstir::{Distribution, LambdaPoly, MomentProvider, Rational};

const N: usize = 10;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn at_zero(p: &LambdaPoly) -> Rational {
    p.eval(&Rational::zero())
}

#[test]
fn definitions_agree_for_default_providers() {
    for rv in Distribution::default_providers() {
        assert_eq!(prob_stirling2_by_alternating_sum(&rv, N), prob_stirling2(&rv, N), "{rv}");
    }
}

#[test]
fn triangle_invariants() {
    for rv in Distribution::default_providers() {
        let s2 = prob_stirling2(&rv, N);
        let s1 = prob_stirling1(&rv, N);
        let mean = LambdaPoly::constant(rv.mean());
        for n in 0..=N {
            let delta = if n == 0 { LambdaPoly::one() } else { LambdaPoly::zero() };
            assert_eq!(s2.get(n, 0), &delta);
            assert_eq!(s1.get(n, 0), &delta);
            assert_eq!(s2.get(n, n), &mean.pow(n as u32));
            assert_eq!(s1.get(n, n), &mean.pow(n as u32));
        }
    }
}

#[test]
fn closed_form_mgfs_to_order_twelve() {
    assert_eq!(
        degenerate_mgf(&Distribution::standard_normal(), 12).series,
        standard_normal_mgf_closed_form(12)
    );
    assert_eq!(degenerate_mgf(&Distribution::unit_gamma(), 12).series, unit_gamma_mgf_closed_form(12));
}

#[test]
fn normal_even_moments_at_lambda_zero() {
    let m = degenerate_moments(&Distribution::standard_normal(), 12);
    let expected = ["1", "1", "3", "15", "105", "945", "10395"];
    for (n, e) in expected.iter().enumerate() {
        assert_eq!(at_zero(&m[2 * n]), r(e), "E[Y^{}]", 2 * n);
        if n < 6 {
            assert!(at_zero(&m[2 * n + 1]).is_zero());
        }
    }
}

#[test]
fn gamma_moments_at_lambda_zero_are_factorials() {
    let mgf = degenerate_mgf(&Distribution::unit_gamma(), N);
    let mut f = Rational::one();
    for n in 0..=N {
        if n > 0 {
            f = f * Rational::from(n);
        }
        assert_eq!(at_zero(&mgf.moment(n).unwrap()), f);
    }
}

#[test]
fn lambda_zero_specializations() {
    for rv in Distribution::default_providers() {
        let kappa = degenerate_cumulants(&rv, N);
        let classical = classical_cumulants(&rv, N);
        for n in 0..=N {
            assert_eq!(at_zero(&kappa.values[n]), classical[n], "{rv} n={n}");
        }
        let s1 = prob_stirling1(&rv, N).triangle.eval_lambda(&Rational::zero());
        assert_eq!(s1.rows(), classical_prob_stirling1(&rv, N).rows(), "{rv}");
    }
    let gamma = prob_stirling1(&Distribution::unit_gamma(), N);
    assert_eq!(gamma.triangle.eval_lambda(&Rational::zero()).rows(), stirling1_classical(N).rows());
}

#[test]
fn constant_one_matches_nonprobabilistic_families() {
    let one = Distribution::constant(Rational::one());
    assert_eq!(prob_stirling2(&one, N).triangle.rows(), stirling2_degenerate(N).rows());
    let s1 = prob_stirling1(&one, N);
    let l = lah(N);
    for n in 0..=N {
        for k in 0..=n {
            assert_eq!(s1.get(n, k), &l.get(n, k).shift(n - k));
            let limit = if n == k { Rational::one() } else { Rational::zero() };
            assert_eq!(at_zero(s1.get(n, k)), limit);
        }
    }
    for x in ["0", "1/2", "-3", "7"] {
        let x = r(x);
        let b = prob_bernoulli(&one, &x, 8).unwrap();
        let e = prob_euler(&one, &x, 8);
        let bc = bernoulli_polynomial(&x, 8);
        let ec = euler_polynomial(&x, 8);
        for n in 0..=8 {
            assert_eq!(at_zero(&b[n]), bc[n]);
            assert_eq!(at_zero(&e[n]), ec[n]);
        }
    }
}

#[test]
fn sums_of_copies() {
    for rv in Distribution::default_providers() {
        let mgf = degenerate_mgf(&rv, N).series;
        let s2 = prob_stirling2(&rv, N);
        for m in 1..=4usize {
            let copies = mgf.pow(m).egf_coefficients();
            for n in 0..=N {
                let sum: LambdaPoly = (0..=n)
                    .map(|k| s2.get(n, k).scale(&degstir::exactnum::falling_factorial(&Rational::from(m), k)))
                    .sum();
                assert_eq!(copies[n], sum, "{rv} m={m} n={n}");
            }
        }
    }
    // Γ(1,1), two copies, λ = 0: E[(Y₁+Y₂)²] = 6.
    let g = degenerate_mgf(&Distribution::unit_gamma(), 2).series.pow(2);
    assert_eq!(at_zero(&g.egf_coefficient(2).unwrap()), r("6"));
}

#[test]
fn bernoulli_and_euler_numbers_are_x_zero() {
    let rv = Distribution::unit_gamma();
    let seq = prob_poly_seq(&rv, PolyFamily::Bernoulli, &[Rational::zero(), r("2")], 6).unwrap();
    assert_eq!(seq.values[0], prob_bernoulli(&rv, &Rational::zero(), 6).unwrap());
    assert!(seq.values.iter().all(|v| v[0].is_one()));
    let e = prob_poly_seq(&rv, PolyFamily::Euler, &[Rational::zero()], 6).unwrap();
    assert_eq!(e.values[0], prob_euler(&rv, &Rational::zero(), 6));
}

#[test]
fn general_parameters() {
    let rv: Distribution = "normal:1,1".parse().unwrap();
    // at λ = 0, κ₁ = μ, κ₂ = σ², higher cumulants vanish
    let k = degenerate_cumulants(&rv, 6);
    let at0: Vec<Rational> = k.values.iter().map(at_zero).collect();
    assert_eq!(at0[1], 1);
    assert_eq!(at0[2], 1);
    assert!(at0[3..].iter().all(Rational::is_zero));
    let g: Distribution = "gamma:2,3".parse().unwrap();
    assert_eq!(g.power_moments(2), vec![r("1"), r("2/3"), r("2/3")]);
    let b = prob_bernoulli(&g, &Rational::zero(), 4).unwrap();
    // the constant term is 1/E[Y]
    assert_eq!(b[0], LambdaPoly::constant(r("3/2")));
}
