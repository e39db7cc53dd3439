//! Truncated formal power series over Q[λ].
//!
//! A series of order N stores plain Taylor coefficients a₀..a_N of Σ aₙ tⁿ.
//! The exponential-generating-function convention (cₙ = n!·aₙ) is applied only
//! by [`EgfSeries::from_egf_coeffs`] and [`EgfSeries::egf_coefficient`], so the
//! ring operations are ordinary truncated Cauchy arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{fact, falling_factorial, LambdaPoly, Rational};

/// Selects λ or −λ in the degenerate exponential and logarithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaSign {
    Plus,
    Minus,
}

impl LambdaSign {
    /// The signed indeterminate, λ or −λ.
    pub fn lambda(self) -> LambdaPoly {
        match self {
            LambdaSign::Plus => LambdaPoly::lambda(),
            LambdaSign::Minus => -LambdaPoly::lambda(),
        }
    }
}

/// How [`EgfSeries::x_power`] computes f^x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerRoute {
    /// Σₖ (x)ₖ (f − 1)ᵏ / k!
    Binomial,
    /// e₋λ^x(log₋λ(f))
    DegenerateExpLog,
    /// exp(x · log f) with the ordinary exponential and logarithm.
    ExpLog,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EgfSeries {
    coeffs: Vec<LambdaPoly>,
}

impl EgfSeries {
    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![LambdaPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LambdaPoly::one(), order)
    }

    pub fn constant(c: LambdaPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t` (truncated to zero when `order` is 0).
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = LambdaPoly::one();
        }
        s
    }

    /// Builds a series from Taylor coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<LambdaPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        EgfSeries { coeffs }
    }

    /// Builds Σ cₙ tⁿ/n! from EGF coefficients cₙ.
    pub fn from_egf_coeffs(egf: Vec<LambdaPoly>) -> Self {
        let coeffs = egf
            .into_iter()
            .enumerate()
            .map(|(n, c)| c.scale(&fact(n).recip().expect("n! is nonzero")))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Taylor coefficient aₙ (zero beyond the order).
    pub fn coeff(&self, n: usize) -> &LambdaPoly {
        self.coeffs.get(n).unwrap_or(&crate::exactnum::ZERO_POLY)
    }

    /// cₙ = n!·aₙ, the coefficient of tⁿ/n!.
    pub fn egf_coefficient(&self, n: usize) -> Result<LambdaPoly> {
        if n > self.order() {
            return Err(Error::IndexOutOfRange {
                index: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].scale(&fact(n)))
    }

    pub fn egf_coefficients(&self) -> Vec<LambdaPoly> {
        (0..=self.order())
            .map(|n| self.coeffs[n].scale(&fact(n)))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(Self::from_coeffs(self.coeffs[..=order].to_vec()))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Truncated Cauchy product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![LambdaPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_coeffs(out))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&LambdaPoly, &LambdaPoly) -> LambdaPoly) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }

    pub fn map_coeffs(&self, f: impl Fn(&LambdaPoly) -> LambdaPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &LambdaPoly) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    /// Every coefficient evaluated at λ = `v`.
    pub fn eval_lambda(&self, v: &Rational) -> Self {
        self.map_coeffs(|a| LambdaPoly::constant(a.eval(v)))
    }

    pub fn negate_lambda(&self) -> Self {
        self.map_coeffs(LambdaPoly::negate_lambda)
    }

    /// f − a₀ + `c`: replaces the constant term.
    pub fn with_constant_term(&self, c: LambdaPoly) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = c;
        s
    }

    /// (f − a₀)/t, one order shorter. Requires a zero constant term and order ≥ 1.
    pub fn div_by_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidParameter(format!(
                "dividing by t needs a zero constant term, found {}",
                self.coeffs[0]
            )));
        }
        if self.order() == 0 {
            return Err(Error::InvalidParameter(
                "cannot divide an order-0 series by t".into(),
            ));
        }
        Ok(Self::from_coeffs(self.coeffs[1..].to_vec()))
    }

    /// outer(inner) truncated at the common order, by Horner accumulation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentInner(inner.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for a in self.coeffs[..n].iter().rev() {
            acc = acc.checked_mul(inner)?;
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// fᵏ/k!; k = 0 gives the constant series 1.
    pub fn pow_over_factorial(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for i in 1..=k {
            acc = (&acc * self).scale_rational(&Rational::new(1, i as i64));
        }
        acc
    }

    /// The table f⁰/0!, f¹/1!, …, f^kmax/kmax!.
    pub fn powers_over_factorial(&self, kmax: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(kmax + 1);
        out.push(Self::one(self.order()));
        for i in 1..=kmax {
            let next = (&out[i - 1] * self).scale_rational(&Rational::new(1, i as i64));
            out.push(next);
        }
        out
    }

    /// g with f·g = 1. The constant term must be a nonzero rational constant.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NonInvertibleConstant(self.coeffs[0].to_string()))?;
        let inv = a0.recip()?;
        let n = self.order();
        let mut g: Vec<LambdaPoly> = Vec::with_capacity(n + 1);
        g.push(LambdaPoly::constant(inv.clone()));
        for m in 1..=n {
            let s: LambdaPoly = (1..=m).map(|i| &self.coeffs[i] * &g[m - i]).sum();
            g.push(s.scale(&-inv.clone()));
        }
        Ok(Self::from_coeffs(g))
    }

    /// f^x for rational x. Requires constant term 1.
    pub fn x_power(&self, x: &Rational, route: PowerRoute) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let u = self.with_constant_term(LambdaPoly::zero());
        match route {
            PowerRoute::Binomial => {
                let mut acc = Self::zero(n);
                let mut term = Self::one(n);
                for k in 0..=n {
                    if k > 0 {
                        term = (&term * &u).scale_rational(&Rational::new(1, k as i64));
                    }
                    let c = falling_factorial(x, k);
                    if c.is_zero() {
                        break;
                    }
                    acc = &acc + &term.scale_rational(&c);
                }
                Ok(acc)
            }
            PowerRoute::DegenerateExpLog => {
                let log = degenerate_log(LambdaSign::Minus, n).compose(&u)?;
                degenerate_exp(&LambdaPoly::constant(x.clone()), LambdaSign::Minus, n).compose(&log)
            }
            PowerRoute::ExpLog => {
                let log = log1p_series(n).compose(&u)?;
                exp_series(n).compose(&log.scale_rational(x))
            }
        }
    }
}

macro_rules! series_binop {
    ($Trait:ident, $method:ident, $checked:ident) => {
        /// # Panics
        /// If the truncation orders differ; use the `checked_` form to get an error.
        impl<'a> $Trait<&'a EgfSeries> for &'a EgfSeries {
            type Output = EgfSeries;
            fn $method(self, rhs: &'a EgfSeries) -> EgfSeries {
                self.$checked(rhs).expect("series orders must match")
            }
        }
        impl $Trait<EgfSeries> for EgfSeries {
            type Output = EgfSeries;
            fn $method(self, rhs: EgfSeries) -> EgfSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

series_binop!(Add, add, checked_add);
series_binop!(Sub, sub, checked_sub);
series_binop!(Mul, mul, checked_mul);

impl Neg for &EgfSeries {
    type Output = EgfSeries;
    fn neg(self) -> EgfSeries {
        self.map_coeffs(|a| -a)
    }
}

/// e_{±λ}^x(t) = Σ (x)ₙ,±λ tⁿ/n!.
pub fn degenerate_exp(x: &LambdaPoly, sign: LambdaSign, order: usize) -> EgfSeries {
    let step = sign.lambda();
    let mut egf = Vec::with_capacity(order + 1);
    let mut acc = LambdaPoly::one();
    for n in 0..=order {
        egf.push(acc.clone());
        // (x)_{n+1,λ} = (x)_{n,λ} · (x − nλ)
        acc = &acc * &(x - &step.scale(&Rational::from(n)));
    }
    EgfSeries::from_egf_coeffs(egf)
}

/// log_{±λ}(1+u) as a series in u. The EGF coefficient of uⁿ/n! is
/// (λ−1)(λ−2)…(λ−(n−1)) for +λ, and its image under λ → −λ for −λ.
pub fn degenerate_log(sign: LambdaSign, order: usize) -> EgfSeries {
    let lam = sign.lambda();
    let mut egf = vec![LambdaPoly::zero(); order + 1];
    let mut acc = LambdaPoly::one();
    for (n, slot) in egf.iter_mut().enumerate().skip(1) {
        if n >= 2 {
            acc = &acc * &(&lam - &LambdaPoly::constant(Rational::from(n - 1)));
        }
        *slot = acc.clone();
    }
    EgfSeries::from_egf_coeffs(egf)
}

/// exp(u) = Σ uⁿ/n!.
pub fn exp_series(order: usize) -> EgfSeries {
    EgfSeries::from_egf_coeffs(vec![LambdaPoly::one(); order + 1])
}

/// log(1+u) = Σ_{n≥1} (−1)ⁿ⁻¹ uⁿ/n.
pub fn log1p_series(order: usize) -> EgfSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                LambdaPoly::zero()
            } else {
                let s = if n % 2 == 1 { 1 } else { -1 };
                LambdaPoly::constant(Rational::new(s, n as i64))
            }
        })
        .collect();
    EgfSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(order: usize, c: &[i64]) -> EgfSeries {
        let mut v: Vec<LambdaPoly> = c.iter().map(|&x| LambdaPoly::integer(x)).collect();
        v.resize(order + 1, LambdaPoly::zero());
        EgfSeries::from_coeffs(v)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&ints(4, &[1, 1]) * &ints(4, &[1, -1]), ints(4, &[1, 0, -1]));
        let t = EgfSeries::variable(1);
        assert_eq!(&t * &t, EgfSeries::zero(1));
        let f = ints(3, &[2, 0, 5]);
        assert_eq!(&f + &EgfSeries::zero(3), f);
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let err = ints(2, &[1]).checked_mul(&ints(3, &[1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
        assert!(ints(2, &[1]).compose(&ints(3, &[0, 1])).is_err());
    }

    #[test]
    fn compose_examples() {
        let n = 6;
        let t = EgfSeries::variable(n);
        assert_eq!(exp_series(n).compose(&t).unwrap(), exp_series(n));
        let u = EgfSeries::variable(4);
        assert_eq!(u.compose(&ints(4, &[0, 0, 1])).unwrap(), ints(4, &[0, 0, 1]));
        let expm1 = exp_series(n).with_constant_term(LambdaPoly::zero());
        assert_eq!(log1p_series(n).compose(&expm1).unwrap(), t);
    }

    #[test]
    fn compose_rejects_unit_inner() {
        let err = exp_series(3).compose(&ints(3, &[1, 1])).unwrap_err();
        assert!(matches!(err, Error::NonNilpotentInner(_)));
    }

    #[test]
    fn kth_power_over_factorial_examples() {
        let f = ints(5, &[3, 1, 4]);
        assert_eq!(f.pow_over_factorial(0), EgfSeries::one(5));
        let t3 = EgfSeries::variable(4).pow_over_factorial(3);
        assert_eq!(t3.coeff(3), &LambdaPoly::constant(Rational::new(1, 6)));
        assert!(t3.coeff(4).is_zero());

        // (e_λ(t) − 1)²/2!: EGF coefficient of t³/3! is {3 brace 2}_λ = 3 − 3λ.
        let e = degenerate_exp(&LambdaPoly::one(), LambdaSign::Plus, 4);
        let u = e.with_constant_term(LambdaPoly::zero());
        let c = u.pow_over_factorial(2).egf_coefficient(3).unwrap();
        assert_eq!(c, LambdaPoly::from_integers(&[3, -3]));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(ints(3, &[1, 1]).reciprocal().unwrap(), ints(3, &[1, -1, 1, -1]));
        assert_eq!(EgfSeries::one(2).reciprocal().unwrap(), EgfSeries::one(2));
        let halves = ints(2, &[2]).reciprocal().unwrap();
        assert_eq!(halves.coeff(0), &LambdaPoly::constant(Rational::new(1, 2)));
    }

    #[test]
    fn reciprocal_rejects_non_units() {
        assert!(ints(3, &[0, 1]).reciprocal().is_err());
        let lam_const = EgfSeries::constant(LambdaPoly::lambda(), 2);
        assert!(matches!(lam_const.reciprocal(), Err(Error::NonInvertibleConstant(_))));
    }

    #[test]
    fn degenerate_exp_examples() {
        let e = degenerate_exp(&LambdaPoly::one(), LambdaSign::Plus, 4);
        assert_eq!(e.egf_coefficient(2).unwrap(), LambdaPoly::from_integers(&[1, -1]));
        assert_eq!(degenerate_exp(&LambdaPoly::zero(), LambdaSign::Plus, 5), EgfSeries::one(5));
        let x = Rational::new(3, 2);
        let at_zero = degenerate_exp(&LambdaPoly::constant(x.clone()), LambdaSign::Plus, 6)
            .eval_lambda(&Rational::zero());
        for n in 0..=6u32 {
            assert_eq!(at_zero.egf_coefficient(n as usize).unwrap(), LambdaPoly::constant(x.pow(n)));
        }
        let minus = degenerate_exp(&LambdaPoly::one(), LambdaSign::Minus, 3);
        assert_eq!(minus.egf_coefficient(3).unwrap(), LambdaPoly::from_integers(&[1, 3, 2]));
    }

    #[test]
    fn degenerate_log_examples() {
        let l = degenerate_log(LambdaSign::Plus, 5);
        assert!(l.coeff(0).is_zero());
        assert_eq!(l.egf_coefficient(1).unwrap(), LambdaPoly::one());
        // λ²·(1)(1 − 1/λ)(1 − 2/λ) = (λ − 1)(λ − 2)
        assert_eq!(l.egf_coefficient(3).unwrap(), LambdaPoly::from_integers(&[2, -3, 1]));
        let lm = degenerate_log(LambdaSign::Minus, 5);
        assert_eq!(lm.egf_coefficient(3).unwrap(), LambdaPoly::from_integers(&[2, 3, 1]));
    }

    #[test]
    fn degenerate_log_inverts_degenerate_exp() {
        let n = 8;
        for sign in [LambdaSign::Plus, LambdaSign::Minus] {
            let em1 = degenerate_exp(&LambdaPoly::one(), sign, n).with_constant_term(LambdaPoly::zero());
            let log = degenerate_log(sign, n);
            assert_eq!(log.compose(&em1).unwrap(), EgfSeries::variable(n));
            let back = degenerate_exp(&LambdaPoly::one(), sign, n)
                .with_constant_term(LambdaPoly::zero())
                .compose(&log)
                .unwrap();
            assert_eq!(back, EgfSeries::variable(n));
        }
    }

    #[test]
    fn x_power_examples() {
        let f = degenerate_exp(&LambdaPoly::one(), LambdaSign::Plus, 6);
        for route in [PowerRoute::Binomial, PowerRoute::DegenerateExpLog, PowerRoute::ExpLog] {
            assert_eq!(f.x_power(&Rational::one(), route).unwrap(), f);
            assert_eq!(f.x_power(&Rational::zero(), route).unwrap(), EgfSeries::one(6));
            assert_eq!(f.x_power(&Rational::integer(3), route).unwrap(), f.pow(3));
        }
        assert!(matches!(
            ints(3, &[2, 1]).x_power(&Rational::one(), PowerRoute::Binomial),
            Err(Error::ConstantTermNotOne(_))
        ));
    }

    #[test]
    fn egf_coefficient_convention() {
        let t3 = ints(4, &[0, 0, 0, 1]);
        assert_eq!(t3.egf_coefficient(3).unwrap(), LambdaPoly::integer(6));
        assert_eq!(EgfSeries::one(0).egf_coefficient(0).unwrap(), LambdaPoly::one());
        assert_eq!(
            t3.egf_coefficient(5),
            Err(Error::IndexOutOfRange { index: 5, order: 4 })
        );
    }

    #[test]
    fn div_by_t_shifts() {
        let f = ints(3, &[0, 2, 3, 4]);
        assert_eq!(f.div_by_t().unwrap(), ints(2, &[2, 3, 4]));
        assert!(ints(3, &[1, 2]).div_by_t().is_err());
    }
}
