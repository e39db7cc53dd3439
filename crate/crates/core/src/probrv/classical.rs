//! The λ-free counterparts, used as references for the λ = 0 specializations.

use crate::egf::{log1p_series, EgfSeries, PowerRoute};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, sign, LambdaPoly, Rational};
use crate::triangles::Triangle;

use super::MomentProvider;

/// E[e^{Yt}] = Σ E[Yⁿ] tⁿ/n!.
pub fn classical_mgf(rv: &dyn MomentProvider, order: usize) -> EgfSeries {
    EgfSeries::from_egf_coeffs(
        rv.power_moments(order)
            .into_iter()
            .map(LambdaPoly::constant)
            .collect(),
    )
}

fn log_series(mgf: &EgfSeries) -> EgfSeries {
    log1p_series(mgf.order())
        .compose(&mgf.with_constant_term(LambdaPoly::zero()))
        .expect("inner series has zero constant term")
}

/// The ordinary cumulants κₙ(Y) for n = 0..=order.
pub fn classical_cumulants(rv: &dyn MomentProvider, order: usize) -> Vec<Rational> {
    log_series(&classical_mgf(rv, order))
        .egf_coefficients()
        .iter()
        .map(LambdaPoly::constant_term)
        .collect()
}

/// S₁^Y(n,k) from (1/k!)(log E[e^{Yt}])ᵏ.
pub fn classical_prob_stirling1(rv: &dyn MomentProvider, nmax: usize) -> Triangle {
    let powers = log_series(&classical_mgf(rv, nmax)).powers_over_factorial(nmax);
    Triangle::from_fn("s1-prob-classical", nmax, |n, k| {
        powers[k]
            .egf_coefficient(n)
            .expect("n within order")
            .scale(&sign(n - k))
    })
}

/// Bₙ^Y(x) for n = 0..=nmax, from t/(E[e^{Yt}] − 1)·E[e^{Yt}]ˣ.
pub fn classical_prob_bernoulli(rv: &dyn MomentProvider, x: &Rational, nmax: usize) -> Result<Vec<Rational>> {
    let mgf = classical_mgf(rv, nmax + 1);
    let shifted = mgf.with_constant_term(LambdaPoly::zero()).div_by_t()?;
    if shifted.coeff(0).is_zero() {
        return Err(Error::ZeroMean);
    }
    let power = mgf.truncate(nmax)?.x_power(x, PowerRoute::ExpLog)?;
    Ok((&shifted.reciprocal()? * &power)
        .egf_coefficients()
        .iter()
        .map(LambdaPoly::constant_term)
        .collect())
}

/// Bₙ(x) for n = 0..=nmax, by Bₙ(x) = Σₖ C(n,k) Bₖ xⁿ⁻ᵏ with the numbers
/// from Σ_{k≤m} C(m+1,k) Bₖ = 0.
pub fn bernoulli_polynomial(x: &Rational, nmax: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=nmax {
        let s: Rational = (0..m).map(|k| binomial(m as i64 + 1, k as u32) * &b[k]).sum();
        b.push(-s / Rational::from(m + 1));
    }
    (0..=nmax)
        .map(|n| {
            (0..=n)
                .map(|k| binomial(n as i64, k as u32) * &b[k] * x.pow((n - k) as u32))
                .sum()
        })
        .collect()
}

/// Eₙ(x) for n = 0..=nmax, by Eₙ(x) + Σₖ C(n,k) Eₖ(x) = 2xⁿ.
pub fn euler_polynomial(x: &Rational, nmax: usize) -> Vec<Rational> {
    let mut e: Vec<Rational> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let s: Rational = (0..n).map(|k| binomial(n as i64, k as u32) * &e[k]).sum();
        e.push((Rational::from(2) * x.pow(n as u32) - s) / Rational::from(2));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probrv::Distribution;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn bernoulli_polynomial_values() {
        let b = bernoulli_polynomial(&Rational::zero(), 6);
        assert_eq!(b, vec![r("1"), r("-1/2"), r("1/6"), r("0"), r("-1/30"), r("0"), r("1/42")]);
        // B₂(x) = x² − x + 1/6
        let x = r("3/2");
        assert_eq!(bernoulli_polynomial(&x, 2)[2], r("3/4") + r("1/6"));
    }

    #[test]
    fn euler_polynomial_values() {
        let e = euler_polynomial(&Rational::zero(), 4);
        assert_eq!(e, vec![r("1"), r("-1/2"), r("0"), r("1/4"), r("0")]);
        let x = r("2");
        let e = euler_polynomial(&x, 2);
        assert_eq!(e[1], r("3/2"));
        // E₂(x) = x² − x
        assert_eq!(e[2], r("2"));
    }

    #[test]
    fn constant_one_reduces_to_classical_polynomials() {
        let one = Distribution::constant(Rational::one());
        for x in [r("0"), r("1/3"), r("-2")] {
            assert_eq!(classical_prob_bernoulli(&one, &x, 7).unwrap(), bernoulli_polynomial(&x, 7));
        }
    }

    #[test]
    fn classical_cumulant_examples() {
        let k = classical_cumulants(&Distribution::standard_normal(), 6);
        assert_eq!(k, vec![r("0"), r("0"), r("1"), r("0"), r("0"), r("0"), r("0")]);
        // Exponential(1): κₙ = (n−1)!
        let k = classical_cumulants(&Distribution::unit_gamma(), 5);
        assert_eq!(k, vec![r("0"), r("1"), r("1"), r("2"), r("6"), r("24")]);
    }

    #[test]
    fn classical_first_kind_examples() {
        let one = Distribution::constant(Rational::one());
        let t = classical_prob_stirling1(&one, 6);
        for n in 0..=6 {
            for k in 0..=n {
                let expected = if n == k { LambdaPoly::one() } else { LambdaPoly::zero() };
                assert_eq!(t.get(n, k), &expected);
            }
        }
        let g = classical_prob_stirling1(&Distribution::unit_gamma(), 6);
        assert_eq!(g.rows(), crate::triangles::stirling1_classical(6).rows());
    }

    #[test]
    fn zero_mean_is_rejected() {
        let z = Distribution::standard_normal();
        assert_eq!(classical_prob_bernoulli(&z, &Rational::zero(), 3), Err(Error::ZeroMean));
    }
}
