//! Degenerate moments, cumulants and the probabilistic degenerate families
//! attached to a random variable Y.
//!
//! Everything here is derived from one object, the degenerate moment
//! generating function E[e_λ^Y(t)] = Σ E[(Y)ₙ,λ] tⁿ/n!, whose coefficients are
//! synthesized from the power moments E[Yᵏ] by
//! E[(Y)ₙ,λ] = Σₖ S₁(n,k) λⁿ⁻ᵏ E[Yᵏ].

mod classical;
mod distribution;

pub use classical::{
    bernoulli_polynomial, classical_cumulants, classical_mgf, classical_prob_bernoulli,
    classical_prob_stirling1, euler_polynomial,
};
pub use distribution::{Distribution, MomentProvider};

use serde::Serialize;

use crate::egf::{degenerate_log, exp_series, EgfSeries, LambdaSign, PowerRoute};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, sign, LambdaPoly, Rational};
use crate::triangles::{stirling1_classical, Triangle};

/// E[(Y)ₙ,λ].
pub fn degenerate_moment(rv: &dyn MomentProvider, n: usize) -> LambdaPoly {
    degenerate_moments(rv, n).swap_remove(n)
}

/// E[(Y)ₙ,λ] for n = 0..=order.
pub fn degenerate_moments(rv: &dyn MomentProvider, order: usize) -> Vec<LambdaPoly> {
    let s1 = stirling1_classical(order);
    let m = rv.power_moments(order);
    (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| LambdaPoly::monomial(m[k].clone(), n - k) * s1.get(n, k))
                .sum()
        })
        .collect()
}

/// The degenerate MGF of a provider, truncated at `series.order()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateMgf {
    pub label: String,
    pub series: EgfSeries,
}

impl DegenerateMgf {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// E[(Y)ₙ,λ], the EGF coefficient n.
    pub fn moment(&self, n: usize) -> Result<LambdaPoly> {
        self.series.egf_coefficient(n)
    }
}

pub fn degenerate_mgf(rv: &dyn MomentProvider, order: usize) -> DegenerateMgf {
    DegenerateMgf {
        label: rv.label(),
        series: EgfSeries::from_egf_coeffs(degenerate_moments(rv, order)),
    }
}

/// log e_λ(t) = (1/λ)·log(1+λt) = Σ_{n≥1} (−λ)ⁿ⁻¹ tⁿ/n.
pub fn log_of_degenerate_exp(order: usize) -> EgfSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                LambdaPoly::zero()
            } else {
                LambdaPoly::monomial(sign(n - 1) * Rational::new(1, n as i64), n - 1)
            }
        })
        .collect();
    EgfSeries::from_coeffs(coeffs)
}

/// exp(½(log e_λ(t))²), the degenerate MGF of N(0,1) in closed form.
pub fn standard_normal_mgf_closed_form(order: usize) -> EgfSeries {
    let l = log_of_degenerate_exp(order);
    let half_square = (&l * &l).scale_rational(&Rational::new(1, 2));
    exp_series(order)
        .compose(&half_square)
        .expect("inner series has zero constant term")
}

/// 1/(1 − (1/λ)log(1+λt)), the degenerate MGF of Γ(1,1) in closed form.
pub fn unit_gamma_mgf_closed_form(order: usize) -> EgfSeries {
    let denom = &EgfSeries::one(order) - &log_of_degenerate_exp(order);
    denom.reciprocal().expect("constant term is 1")
}

/// A probabilistic triangle tagged with the random variable it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbTriangle {
    pub rv: String,
    pub triangle: Triangle,
}

impl ProbTriangle {
    pub fn get(&self, n: usize, k: usize) -> &LambdaPoly {
        self.triangle.get(n, k)
    }

    pub fn max_n(&self) -> usize {
        self.triangle.max_n()
    }
}

/// {n brace k}_{Y,λ} from (1/k!)(MGF − 1)ᵏ.
pub fn prob_stirling2_from_mgf(mgf: &EgfSeries) -> Triangle {
    let u = mgf.with_constant_term(LambdaPoly::zero());
    let nmax = mgf.order();
    let powers = u.powers_over_factorial(nmax);
    Triangle::from_fn("s2-prob", nmax, |n, k| {
        powers[k].egf_coefficient(n).expect("n within order")
    })
}

pub fn prob_stirling2(rv: &dyn MomentProvider, nmax: usize) -> ProbTriangle {
    ProbTriangle {
        rv: rv.label(),
        triangle: prob_stirling2_from_mgf(&degenerate_mgf(rv, nmax).series),
    }
}

/// {n brace k}_{Y,λ} by the alternating sum over sums of independent copies,
/// (1/k!) Σⱼ C(k,j)(−1)ᵏ⁻ʲ E[(Sⱼ)ₙ,λ], with E[(Sⱼ)ₙ,λ] read off MGFʲ.
pub fn prob_stirling2_by_alternating_sum(rv: &dyn MomentProvider, nmax: usize) -> ProbTriangle {
    let mgf = degenerate_mgf(rv, nmax).series;
    let mut copies = vec![EgfSeries::one(nmax)];
    for j in 1..=nmax {
        copies.push(&copies[j - 1] * &mgf);
    }
    let sums: Vec<Vec<LambdaPoly>> = copies.iter().map(EgfSeries::egf_coefficients).collect();
    let triangle = Triangle::from_fn("s2-prob", nmax, |n, k| {
        let total: LambdaPoly = (0..=k)
            .map(|j| sums[j][n].scale(&(binomial(k as i64, j as u32) * sign(k - j))))
            .sum();
        total.scale(&crate::exactnum::fact(k).recip().expect("nonzero"))
    });
    ProbTriangle {
        rv: rv.label(),
        triangle,
    }
}

/// κₙ,λ(Y) for n = 0..=order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CumulantSeq {
    pub rv: String,
    pub values: Vec<LambdaPoly>,
}

/// log₋λ(MGF) as a series: degenerate_log(−λ) composed with MGF − 1.
pub fn cumulant_series(mgf: &EgfSeries) -> EgfSeries {
    degenerate_log(LambdaSign::Minus, mgf.order())
        .compose(&mgf.with_constant_term(LambdaPoly::zero()))
        .expect("inner series has zero constant term")
}

pub fn degenerate_cumulants(rv: &dyn MomentProvider, order: usize) -> CumulantSeq {
    CumulantSeq {
        rv: rv.label(),
        values: cumulant_series(&degenerate_mgf(rv, order).series).egf_coefficients(),
    }
}

/// S₁,λ^Y(n,k): the EGF coefficient n of (1/k!)(log₋λ MGF)ᵏ is
/// (−1)ⁿ⁻ᵏ S₁,λ^Y(n,k).
pub fn prob_stirling1_from_mgf(mgf: &EgfSeries) -> Triangle {
    let kappa = cumulant_series(mgf);
    let nmax = mgf.order();
    let powers = kappa.powers_over_factorial(nmax);
    Triangle::from_fn("s1-prob", nmax, |n, k| {
        powers[k]
            .egf_coefficient(n)
            .expect("n within order")
            .scale(&sign(n - k))
    })
}

pub fn prob_stirling1(rv: &dyn MomentProvider, nmax: usize) -> ProbTriangle {
    ProbTriangle {
        rv: rv.label(),
        triangle: prob_stirling1_from_mgf(&degenerate_mgf(rv, nmax).series),
    }
}

/// t/(MGF − 1)·MGFˣ. The result is one order shorter than `mgf`, because
/// dividing MGF − 1 by t drops a coefficient.
pub fn bernoulli_series(mgf: &EgfSeries, x: &Rational) -> Result<EgfSeries> {
    let shifted = mgf.with_constant_term(LambdaPoly::zero()).div_by_t()?;
    if shifted.coeff(0).is_zero() {
        return Err(Error::ZeroMean);
    }
    let order = shifted.order();
    let power = mgf.truncate(order)?.x_power(x, PowerRoute::Binomial)?;
    Ok(&shifted.reciprocal()? * &power)
}

/// 2/(MGF + 1)·MGFˣ.
pub fn euler_series(mgf: &EgfSeries, x: &Rational) -> Result<EgfSeries> {
    let half = (mgf + &EgfSeries::one(mgf.order())).scale_rational(&Rational::new(1, 2));
    let power = mgf.x_power(x, PowerRoute::Binomial)?;
    Ok(&half.reciprocal()? * &power)
}

/// βₙ,λ^Y(x) for n = 0..=nmax. Fails with [`Error::ZeroMean`] when E[Y] = 0.
pub fn prob_bernoulli(rv: &dyn MomentProvider, x: &Rational, nmax: usize) -> Result<Vec<LambdaPoly>> {
    let mgf = degenerate_mgf(rv, nmax + 1).series;
    Ok(bernoulli_series(&mgf, x)?.egf_coefficients())
}

/// ℰₙ,λ^Y(x) for n = 0..=nmax.
pub fn prob_euler(rv: &dyn MomentProvider, x: &Rational, nmax: usize) -> Vec<LambdaPoly> {
    let mgf = degenerate_mgf(rv, nmax).series;
    euler_series(&mgf, x)
        .expect("MGF has constant term 1")
        .egf_coefficients()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolyFamily {
    Bernoulli,
    Euler,
}

/// A probabilistic degenerate polynomial family materialized at rational
/// x-points: `values[i][n]` is the degree-n member evaluated at `x_points[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbPolySeq {
    pub family: PolyFamily,
    pub rv: String,
    pub x_points: Vec<Rational>,
    pub values: Vec<Vec<LambdaPoly>>,
}

pub fn prob_poly_seq(
    rv: &dyn MomentProvider,
    family: PolyFamily,
    x_points: &[Rational],
    nmax: usize,
) -> Result<ProbPolySeq> {
    let mgf = degenerate_mgf(rv, nmax + 1).series;
    let values = x_points
        .iter()
        .map(|x| match family {
            PolyFamily::Bernoulli => Ok(bernoulli_series(&mgf, x)?.egf_coefficients()),
            PolyFamily::Euler => Ok(euler_series(&mgf.truncate(nmax)?, x)?.egf_coefficients()),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbPolySeq {
        family,
        rv: rv.label(),
        x_points: x_points.to_vec(),
        values,
    })
}
