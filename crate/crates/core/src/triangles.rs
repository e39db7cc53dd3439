//! Stirling-type triangles with entries in Q[λ].
//!
//! Degenerate families have two independent constructions: a generating
//! function route through [`crate::egf`] and a basis-conversion route that
//! rewrites one factorial basis in another ([`FactorialBasis::reduce`]).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use crate::egf::{degenerate_exp, degenerate_log, EgfSeries, LambdaSign};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, fact, sign, LambdaPoly, Rational, ZERO_POLY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleFamily {
    /// Signed S₁(n,k).
    Stirling1,
    /// {n brace k}.
    Stirling2,
    /// S₁,λ(n,k).
    Stirling1Degenerate,
    /// {n brace k}_λ.
    Stirling2Degenerate,
    /// L(n,k).
    Lah,
    /// [n brack k]_λ.
    Stirling1DegenerateUnsigned,
}

impl TriangleFamily {
    pub const ALL: [TriangleFamily; 6] = [
        TriangleFamily::Stirling1,
        TriangleFamily::Stirling2,
        TriangleFamily::Stirling1Degenerate,
        TriangleFamily::Stirling2Degenerate,
        TriangleFamily::Lah,
        TriangleFamily::Stirling1DegenerateUnsigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleFamily::Stirling1 => "s1",
            TriangleFamily::Stirling2 => "s2",
            TriangleFamily::Stirling1Degenerate => "s1-degen",
            TriangleFamily::Stirling2Degenerate => "s2-degen",
            TriangleFamily::Lah => "lah",
            TriangleFamily::Stirling1DegenerateUnsigned => "s1-degen-unsigned",
        }
    }

    /// Builds the family's triangle for rows 0..=nmax.
    pub fn build(self, nmax: usize) -> Triangle {
        match self {
            TriangleFamily::Stirling1 => stirling1_classical(nmax),
            TriangleFamily::Stirling2 => stirling2_classical(nmax),
            TriangleFamily::Stirling1Degenerate => stirling1_degenerate(nmax),
            TriangleFamily::Stirling2Degenerate => stirling2_degenerate(nmax),
            TriangleFamily::Lah => lah(nmax),
            TriangleFamily::Stirling1DegenerateUnsigned => unsigned_stirling1_degenerate(nmax),
        }
    }
}

impl fmt::Display for TriangleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TriangleFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown triangle family `{s}`")))
    }
}

/// Lower-triangular table T(n,k), 0 ≤ k ≤ n ≤ max_n, with Q[λ] entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangle {
    label: String,
    rows: Vec<Vec<LambdaPoly>>,
}

impl Triangle {
    /// # Panics
    /// If row n does not have exactly n + 1 entries.
    pub fn from_rows(label: impl Into<String>, rows: Vec<Vec<LambdaPoly>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Triangle {
            label: label.into(),
            rows,
        }
    }

    /// Fills T(n,k) from `f` for 0 ≤ k ≤ n ≤ nmax.
    pub fn from_fn(label: impl Into<String>, nmax: usize, mut f: impl FnMut(usize, usize) -> LambdaPoly) -> Self {
        let rows = (0..=nmax).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect();
        Triangle {
            label: label.into(),
            rows,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// T(n,k), zero outside 0 ≤ k ≤ n. Rows beyond `max_n` are also reported as zero.
    pub fn get(&self, n: usize, k: usize) -> &LambdaPoly {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .unwrap_or(&ZERO_POLY)
    }

    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.rows
    }

    /// Overwrites one entry. Used for fault injection in the checker.
    pub fn set(&mut self, n: usize, k: usize, value: LambdaPoly) {
        self.rows[n][k] = value;
    }

    pub fn map(&self, label: impl Into<String>, f: impl Fn(usize, usize, &LambdaPoly) -> LambdaPoly) -> Triangle {
        Triangle::from_fn(label, self.max_n(), |n, k| f(n, k, &self.rows[n][k]))
    }

    pub fn eval_lambda(&self, v: &Rational) -> Triangle {
        self.map(format!("{}@λ={v}", self.label), |_, _, p| LambdaPoly::constant(p.eval(v)))
    }

    /// Every entry with λ replaced by −λ.
    pub fn negate_lambda(&self) -> Triangle {
        self.map(format!("{}(-λ)", self.label), |_, _, p| p.negate_lambda())
    }

    /// Keeps rows 0..=nmax.
    pub fn truncated(&self, nmax: usize) -> Triangle {
        Triangle {
            label: self.label.clone(),
            rows: self.rows[..=nmax.min(self.max_n())].to_vec(),
        }
    }
}

pub fn stirling1_classical(nmax: usize) -> Triangle {
    // S₁(n+1,k) = S₁(n,k−1) − n·S₁(n,k)
    let mut rows: Vec<Vec<LambdaPoly>> = vec![vec![LambdaPoly::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { LambdaPoly::zero() };
                let here = prev.get(k).map(|p| p.scale(&Rational::from(n))).unwrap_or_default();
                left - here
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows("s1", rows)
}

pub fn stirling2_classical(nmax: usize) -> Triangle {
    // {n+1 brace k} = {n brace k−1} + k·{n brace k}
    let mut rows: Vec<Vec<LambdaPoly>> = vec![vec![LambdaPoly::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { LambdaPoly::zero() };
                let here = prev.get(k).map(|p| p.scale(&Rational::from(k))).unwrap_or_default();
                left + here
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows("s2", rows)
}

/// T(n,k) = EGF coefficient n of gᵏ/k!.
fn triangle_from_gf(label: &str, g: &EgfSeries) -> Triangle {
    let nmax = g.order();
    let powers = g.powers_over_factorial(nmax);
    Triangle::from_fn(label, nmax, |n, k| {
        powers[k].egf_coefficient(n).expect("n is within the order")
    })
}

/// S₁,λ(n,k) from (log_λ(1+t))ᵏ/k!.
pub fn stirling1_degenerate(nmax: usize) -> Triangle {
    triangle_from_gf("s1-degen", &degenerate_log(LambdaSign::Plus, nmax))
}

/// {n brace k}_λ from (e_λ(t) − 1)ᵏ/k!.
pub fn stirling2_degenerate(nmax: usize) -> Triangle {
    let e = degenerate_exp(&LambdaPoly::one(), LambdaSign::Plus, nmax);
    triangle_from_gf("s2-degen", &e.with_constant_term(LambdaPoly::zero()))
}

/// L(n,k) = C(n−1,k−1)·n!/k!, with L(0,0) = 1.
pub fn lah(nmax: usize) -> Triangle {
    Triangle::from_fn("lah", nmax, |n, k| {
        if n == 0 && k == 0 {
            return LambdaPoly::one();
        }
        if k == 0 {
            return LambdaPoly::zero();
        }
        let v = binomial(n as i64 - 1, k as u32 - 1) * fact(n) / fact(k);
        LambdaPoly::constant(v)
    })
}

/// [n brack k]_λ = (−1)ⁿ⁻ᵏ S₁,λ(n,k).
pub fn unsigned_stirling1_degenerate(nmax: usize) -> Triangle {
    stirling1_degenerate(nmax).map("s1-degen-unsigned", |n, k, p| p.scale(&sign(n - k)))
}

pub fn stirling1_degenerate_by_basis(nmax: usize) -> Triangle {
    basis_triangle("s1-degen", nmax, FactorialKind::Falling, FactorialKind::LambdaFalling)
}

pub fn stirling2_degenerate_by_basis(nmax: usize) -> Triangle {
    basis_triangle("s2-degen", nmax, FactorialKind::LambdaFalling, FactorialKind::Falling)
}

pub fn lah_by_basis(nmax: usize) -> Triangle {
    basis_triangle("lah", nmax, FactorialKind::Rising, FactorialKind::Falling)
}

pub fn unsigned_stirling1_degenerate_by_basis(nmax: usize) -> Triangle {
    basis_triangle("s1-degen-unsigned", nmax, FactorialKind::Rising, FactorialKind::LambdaRising)
}

/// Row n holds the coordinates of the n-th `from` basis polynomial in the `to` basis.
fn basis_triangle(label: &str, nmax: usize, from: FactorialKind, to: FactorialKind) -> Triangle {
    let source = FactorialBasis::new(from, nmax);
    let target = FactorialBasis::new(to, nmax);
    let rows = (0..=nmax).map(|n| target.reduce(source.expansion(n))).collect();
    Triangle::from_rows(label, rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorialKind {
    /// (x)ₙ = x(x−1)…(x−n+1)
    Falling,
    /// ⟨x⟩ₙ = x(x+1)…(x+n−1)
    Rising,
    /// (x)ₙ,λ = x(x−λ)…(x−(n−1)λ)
    LambdaFalling,
    /// ⟨x⟩ₙ,λ = x(x+λ)…(x+(n−1)λ)
    LambdaRising,
}

impl FactorialKind {
    fn step(self) -> LambdaPoly {
        match self {
            FactorialKind::Falling => LambdaPoly::integer(1),
            FactorialKind::Rising => LambdaPoly::integer(-1),
            FactorialKind::LambdaFalling => LambdaPoly::lambda(),
            FactorialKind::LambdaRising => -LambdaPoly::lambda(),
        }
    }
}

/// The monic basis b₀, b₁, …, b_nmax of one factorial kind, each written in
/// monomials xⁱ with Q[λ] coefficients.
#[derive(Clone, Debug)]
pub struct FactorialBasis {
    kind: FactorialKind,
    rows: Vec<Vec<LambdaPoly>>,
}

impl FactorialBasis {
    pub fn new(kind: FactorialKind, nmax: usize) -> Self {
        let step = kind.step();
        let mut rows = vec![vec![LambdaPoly::one()]];
        for n in 0..nmax {
            // b_{n+1}(x) = b_n(x)·(x − n·step)
            let shift = step.scale(&Rational::from(n));
            let prev = &rows[n];
            let mut next = vec![LambdaPoly::zero(); n + 2];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= &(c * &shift);
            }
            rows.push(next);
        }
        FactorialBasis { kind, rows }
    }

    pub fn kind(&self) -> FactorialKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Monomial coefficients of bₙ, lowest power first.
    pub fn expansion(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    /// Coordinates of the polynomial Σ pᵢ xⁱ in this basis. Every bₖ is monic,
    /// so stripping leading terms needs no division.
    ///
    /// # Panics
    /// If the degree of `p` exceeds `max_n`.
    pub fn reduce(&self, p: &[LambdaPoly]) -> Vec<LambdaPoly> {
        assert!(p.len() <= self.rows.len(), "polynomial degree exceeds basis size");
        let mut work = p.to_vec();
        let mut out = vec![LambdaPoly::zero(); p.len()];
        for d in (0..p.len()).rev() {
            let c = std::mem::take(&mut work[d]);
            if c.is_zero() {
                continue;
            }
            for (i, b) in self.rows[d][..d].iter().enumerate() {
                work[i] -= &(&c * b);
            }
            out[d] = c;
        }
        out
    }
}

/// Memo table of triangles keyed by family. Construction of a missing or
/// too-short entry happens under the lock, so concurrent callers never build
/// the same family twice.
#[derive(Default)]
pub struct TriangleCache {
    inner: Mutex<HashMap<TriangleFamily, Arc<Triangle>>>,
}

impl TriangleCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, family: TriangleFamily, nmax: usize) -> Arc<Triangle> {
        let mut map = self.inner.lock().expect("triangle cache poisoned");
        if let Some(t) = map.get(&family) {
            if t.max_n() >= nmax {
                return Arc::clone(t);
            }
        }
        let t = Arc::new(family.build(nmax));
        map.insert(family, Arc::clone(&t));
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: i64) -> LambdaPoly {
        LambdaPoly::integer(c)
    }

    #[test]
    fn classical_first_kind() {
        let s1 = stirling1_classical(6);
        assert_eq!(s1.row(3), &[int(0), int(2), int(-3), int(1)]);
        assert_eq!(s1.get(4, 1), &int(-6));
        for n in 0..=6 {
            assert_eq!(s1.get(n, n), &int(1));
        }
        assert!(s1.get(2, 5).is_zero());
        assert!(s1.get(9, 1).is_zero());
    }

    #[test]
    fn classical_second_kind() {
        let s2 = stirling2_classical(8);
        assert_eq!(s2.get(3, 2), &int(3));
        for n in 1..=8 {
            assert_eq!(s2.get(n, 1), &int(1));
        }
        let s1 = stirling1_classical(8);
        for n in 0..=8 {
            for m in 0..=8 {
                let sum: LambdaPoly = (0..=8).map(|k| s1.get(n, k) * s2.get(k, m)).sum();
                assert_eq!(sum, int((n == m) as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn degenerate_examples() {
        let s1l = stirling1_degenerate(6);
        assert_eq!(s1l.get(2, 1), &LambdaPoly::from_integers(&[-1, 1]));
        let s2l = stirling2_degenerate(6);
        assert_eq!(s2l.get(2, 1), &LambdaPoly::from_integers(&[1, -1]));
        let u = unsigned_stirling1_degenerate(6);
        assert_eq!(u.get(2, 1), &LambdaPoly::from_integers(&[1, -1]));
        for n in 0..=6 {
            assert_eq!(s1l.get(n, n), &int(1));
            assert_eq!(s2l.get(n, n), &int(1));
            assert_eq!(u.get(n, n), &int(1));
        }
    }

    #[test]
    fn lah_examples() {
        let l = lah(5);
        assert_eq!(l.row(3), &[int(0), int(6), int(6), int(1)]);
        for n in 0..=5 {
            assert_eq!(l.get(n, n), &int(1));
        }
    }

    #[test]
    fn basis_reduction_recovers_coordinates() {
        let falling = FactorialBasis::new(FactorialKind::Falling, 4);
        // x³ = (x)₃ + 3(x)₂ + (x)₁
        let x3 = vec![int(0), int(0), int(0), int(1)];
        assert_eq!(falling.reduce(&x3), vec![int(0), int(1), int(3), int(1)]);
        assert_eq!(falling.expansion(3), &[int(0), int(2), int(-3), int(1)]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in TriangleFamily::ALL {
            assert_eq!(f.name().parse::<TriangleFamily>().unwrap(), f);
        }
        assert!("s3".parse::<TriangleFamily>().is_err());
    }

    #[test]
    fn cache_reuses_and_extends() {
        let cache = TriangleCache::new();
        let a = cache.get(TriangleFamily::Lah, 5);
        let b = cache.get(TriangleFamily::Lah, 3);
        assert!(Arc::ptr_eq(&a, &b));
        let c = cache.get(TriangleFamily::Lah, 8);
        assert_eq!(c.max_n(), 8);
        assert_eq!(c.truncated(5), *a);
    }
}
