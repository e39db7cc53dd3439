//! Checks of the stated identities. Left-hand sides come from the
//! generating-function definitions held in [`Context`]; right-hand sides are
//! the finite sums and recurrences as stated.

use crate::egf::{EgfSeries, PowerRoute};
use crate::exactnum::{
    binomial, fact, falling_factorial, lambda_falling_factorial, lambda_rising_factorial, sign, LambdaPoly,
    Rational,
};
use crate::probrv::{bernoulli_series, euler_polynomial, euler_series, Distribution};
use crate::triangles::TriangleFamily;

use super::context::{Context, ProviderData};
use super::recorder::{CheckResult, Recorder};

fn c(r: Rational) -> LambdaPoly {
    LambdaPoly::constant(r)
}

/// λᵉ.
fn lam(e: usize) -> LambdaPoly {
    LambdaPoly::monomial(Rational::one(), e)
}

/// (2k)!/(2ᵏk!), the 2k-th moment of N(0,1).
fn even_moment(k: usize) -> Rational {
    fact(2 * k) / (Rational::from(2).pow(k as u32) * fact(k))
}

/// The factorial bases at one rational x, for indices 0..=n.
struct XBases {
    x: Rational,
    /// (x)ₖ
    falling: Vec<Rational>,
    /// (x)ₖ,λ
    lambda_falling: Vec<LambdaPoly>,
    /// ⟨x⟩ₖ,λ
    lambda_rising: Vec<LambdaPoly>,
}

impl XBases {
    fn new(x: &Rational, n: usize) -> Self {
        let xp = c(x.clone());
        XBases {
            x: x.clone(),
            falling: (0..=n).map(|k| falling_factorial(x, k)).collect(),
            lambda_falling: (0..=n).map(|k| lambda_falling_factorial(&xp, k)).collect(),
            lambda_rising: (0..=n).map(|k| lambda_rising_factorial(&xp, k)).collect(),
        }
    }
}

fn x_bases(ctx: &Context) -> Vec<XBases> {
    ctx.grid()
        .x_points
        .iter()
        .map(|x| XBases::new(x, ctx.n_max()))
        .collect()
}

fn provider_grid(ctx: &Context, with_x: bool) -> String {
    let g = ctx.grid();
    let rvs: Vec<String> = g.providers.iter().map(ToString::to_string).collect();
    if with_x {
        format!("n<={}; rv in [{}]; {} x-points", g.n_max, rvs.join(", "), g.x_points.len())
    } else {
        format!("n<={}; rv in [{}]", g.n_max, rvs.join(", "))
    }
}

fn providers(ctx: &Context) -> Vec<std::sync::Arc<ProviderData>> {
    ctx.grid().providers.iter().map(|rv| ctx.provider(rv)).collect()
}

/// EGF coefficients of MGFˣ at order n_max, from exp(x·log MGF).
fn mgf_power(pd: &ProviderData, x: &Rational, order: usize) -> Vec<LambdaPoly> {
    pd.mgf_at(order)
        .x_power(x, PowerRoute::ExpLog)
        .expect("MGF has constant term 1")
        .egf_coefficients()
}

pub(crate) fn thm_2_1(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.1", "cumulants from the second kind", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    // (−1)ᵏ⁻¹λᵏ⁻¹⟨1⟩ₖ,₁/λ = (−1)ᵏ⁻¹(λ+1)(λ+2)…(λ+k−1)
    let weights: Vec<LambdaPoly> = (0..=n_max)
        .map(|k| {
            if k == 0 {
                return LambdaPoly::zero();
            }
            let mut w = c(sign(k - 1));
            for i in 1..k {
                w = &w * &(&lam(1) + &LambdaPoly::integer(i as i64));
            }
            w
        })
        .collect();
    for pd in providers(ctx) {
        for n in 0..=n_max {
            let rhs: LambdaPoly = (1..=n).map(|k| &weights[k] * pd.s2.get(n, k)).sum();
            r.check("kappa as a sum", || format!("rv={} n={n}", pd.rv), &pd.cumulants[n], &rhs);
        }
    }
    r.finish()
}

pub(crate) fn thm_2_2(ctx: &Context) -> CheckResult {
    let grid = format!("{}; m in {:?}", provider_grid(ctx, true), ctx.grid().m_list);
    let mut r = Recorder::new("Thm2.2", "x-th power of the MGF", grid);
    let n_max = ctx.n_max();
    let bases = x_bases(ctx);
    let m_bases: Vec<XBases> = ctx
        .grid()
        .m_list
        .iter()
        .map(|&m| XBases::new(&Rational::from(m), n_max))
        .collect();
    for pd in providers(ctx) {
        let first = |b: &XBases, n: usize| -> LambdaPoly {
            (0..=n).map(|k| pd.s2.get(n, k).scale(&b.falling[k])).sum()
        };
        let second = |b: &XBases, n: usize| -> LambdaPoly {
            (0..=n)
                .map(|k| (&b.lambda_rising[k] * pd.s1.get(n, k)).scale(&sign(n - k)))
                .sum()
        };
        for b in &bases {
            let truth = mgf_power(&pd, &b.x, n_max);
            for n in 0..=n_max {
                let point = || format!("rv={} x={} n={n}", pd.rv, b.x);
                r.check("second-kind expansion", point, &truth[n], &first(b, n));
                r.check("first-kind expansion", point, &truth[n], &second(b, n));
            }
        }
        // E[(Sₘ)ₙ,λ] read off the m-fold product of the MGF.
        let mgf = pd.mgf_at(n_max);
        for b in &m_bases {
            let m = b.x.to_i64().expect("m is an integer") as usize;
            let copies = (0..m).fold(EgfSeries::one(n_max), |acc, _| &acc * &mgf);
            let sums = copies.egf_coefficients();
            for n in 0..=n_max {
                let point = || format!("rv={} m={m} n={n}", pd.rv);
                r.check("sum of copies, second kind", point, &sums[n], &first(b, n));
                r.check("sum of copies, first kind", point, &sums[n], &second(b, n));
            }
        }
    }
    r.finish()
}

pub(crate) fn thm_2_4(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.4", "conversions through -lambda", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    let s2_neg = ctx.triangle(TriangleFamily::Stirling2Degenerate).negate_lambda();
    let s1_neg = ctx.triangle(TriangleFamily::Stirling1Degenerate).negate_lambda();
    for pd in providers(ctx) {
        for n in 0..=n_max {
            for l in 0..=n {
                let point = || format!("rv={} n={n} l={l}", pd.rv);
                let a: LambdaPoly = (l..=n)
                    .map(|k| (pd.s1.get(n, k) * s2_neg.get(k, l)).scale(&sign(n - k)))
                    .sum();
                r.check("second kind", point, pd.s2.get(n, l), &a);
                let b: LambdaPoly = (l..=n).map(|k| pd.s2.get(n, k) * s1_neg.get(k, l)).sum();
                r.check("first kind", point, &pd.s1.get(n, l).scale(&sign(n - l)), &b);
            }
        }
    }
    r.finish()
}

pub(crate) fn thm_2_5(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.5", "second kind via Lah numbers", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    let lah = ctx.triangle(TriangleFamily::Lah);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    for pd in providers(ctx) {
        for n in 0..=n_max {
            // inner[l] = Σₖ λᵏ⁻ˡ(−1)ⁿ⁻ᵏ S₁,λ^Y(n,k) L(k,l)
            let inner: Vec<LambdaPoly> = (0..=n)
                .map(|l| {
                    (l..=n)
                        .map(|k| (pd.s1.get(n, k) * lah.get(k, l)).shift(k - l).scale(&sign(n - k)))
                        .sum()
                })
                .collect();
            for j in 0..=n {
                let rhs: LambdaPoly = (j..=n).map(|l| &inner[l] * s2d.get(l, j)).sum();
                r.check("triple sum", || format!("rv={} n={n} j={j}", pd.rv), pd.s2.get(n, j), &rhs);
            }
        }
    }
    r.finish()
}

pub(crate) fn thm_2_6(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.6", "degenerate moments via Lah numbers", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    let lah = ctx.triangle(TriangleFamily::Lah);
    let one = LambdaPoly::one();
    let unit_falling: Vec<LambdaPoly> = (0..=n_max).map(|l| lambda_falling_factorial(&one, l)).collect();
    for pd in providers(ctx) {
        for n in 1..=n_max {
            let sum = |sgn: &dyn Fn(usize, usize) -> Rational| -> LambdaPoly {
                let mut acc = LambdaPoly::zero();
                for l in 1..=n {
                    for k in l..=n {
                        let term = &(pd.s1.get(n, k) * lah.get(k, l)).shift(k - l) * &unit_falling[l];
                        acc += term.scale(&sgn(k, l));
                    }
                }
                acc
            };
            let point = || format!("rv={} n={n}", pd.rv);
            let stated = sum(&|k, l| sign(k - l));
            r.check("double sum", point, &pd.moments[n], &stated);
            let variant = sum(&|k, _| sign(n - k));
            r.check_variant("double sum", "sign (-1)^(n-k) in place of (-1)^(k-l)", point, &pd.moments[n], &variant);
        }
    }
    r.finish()
}

pub(crate) fn thm_2_7(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.7", "first-kind recurrence", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    for pd in providers(ctx) {
        for n in 1..=n_max {
            for k in 1..=n {
                let sum = |sgn: &dyn Fn(usize) -> Rational| -> LambdaPoly {
                    let s: LambdaPoly = (k - 1..n)
                        .map(|j| {
                            (pd.s1.get(j, k - 1) * &pd.cumulants[n - j])
                                .scale(&(binomial(n as i64, j as u32) * sgn(j)))
                        })
                        .sum();
                    s.scale(&Rational::new(1, k as i64))
                };
                let point = || format!("rv={} n={n} k={k}", pd.rv);
                // (−1)^{n−j−1} as stated; (−1)^{j−k−1} from the derivation line.
                let stated = sum(&|j| sign(n - j - 1));
                r.check("recurrence", point, pd.s1.get(n, k), &stated);
                let variant = sum(&|j| sign(j + 1 + k));
                r.check_variant("recurrence", "sign (-1)^(j-k-1) in place of (-1)^(n-j-1)", point, pd.s1.get(n, k), &variant);
            }
        }
        for k in 1..=n_max {
            let diag = pd.cumulants[1].pow(k as u32);
            r.check("diagonal", || format!("rv={} k={k}", pd.rv), pd.s1.get(k, k), &diag);
        }
    }
    r.finish()
}

pub(crate) fn thm_2_9(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.9", "second-kind recurrence", provider_grid(ctx, false));
    let n_max = ctx.n_max();
    for pd in providers(ctx) {
        for n in 1..=n_max {
            for k in 1..=n {
                let s: LambdaPoly = (k - 1..n)
                    .map(|j| (pd.s2.get(j, k - 1) * &pd.moments[n - j]).scale(&binomial(n as i64, j as u32)))
                    .sum();
                let rhs = s.scale(&Rational::new(1, k as i64));
                r.check("recurrence", || format!("rv={} n={n} k={k}", pd.rv), pd.s2.get(n, k), &rhs);
            }
            r.check("first column", || format!("rv={} n={n}", pd.rv), pd.s2.get(n, 1), &pd.moments[n]);
        }
        for k in 0..=n_max {
            let diag = c(pd.mean.pow(k as u32));
            r.check("diagonal", || format!("rv={} k={k}", pd.rv), pd.s2.get(k, k), &diag);
        }
    }
    r.finish()
}

/// Σⱼ Σₖ C(n,j) aₙ₋ⱼ ⟨x⟩ₖ,λ (−1)ʲ⁻ᵏ S₁,λ^Y(j,k), the shared shape of the
/// Bernoulli and Euler expansions.
fn number_expansion(pd: &ProviderData, numbers: &[LambdaPoly], b: &XBases, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for j in 0..=n {
        let inner: LambdaPoly = (0..=j)
            .map(|k| (&b.lambda_rising[k] * pd.s1.get(j, k)).scale(&sign(j - k)))
            .sum();
        acc += (&numbers[n - j] * &inner).scale(&binomial(n as i64, j as u32));
    }
    acc
}

const ZERO_MEAN: &str = "E[Y]=0: the Bernoulli generating function is not a power series";

pub(crate) fn thm_2_10(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.10", "Bernoulli expansion", provider_grid(ctx, true));
    let n_max = ctx.n_max();
    let bases = x_bases(ctx);
    for pd in providers(ctx) {
        if pd.mean.is_zero() {
            r.skip(format!("rv={}", pd.rv), ZERO_MEAN);
            continue;
        }
        let mgf = pd.mgf_at(n_max + 1);
        let numbers = bernoulli_series(&mgf, &Rational::zero())
            .expect("nonzero mean")
            .egf_coefficients();
        for b in &bases {
            let truth = bernoulli_series(&mgf, &b.x).expect("nonzero mean").egf_coefficients();
            for n in 0..=n_max {
                let rhs = number_expansion(&pd, &numbers, b, n);
                r.check("expansion", || format!("rv={} x={} n={n}", pd.rv, b.x), &truth[n], &rhs);
            }
        }
    }
    r.finish()
}

pub(crate) fn thm_2_11(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.11", "Euler expansion", provider_grid(ctx, true));
    let n_max = ctx.n_max();
    let bases = x_bases(ctx);
    for pd in providers(ctx) {
        let mgf = pd.mgf_at(n_max);
        let numbers = euler_series(&mgf, &Rational::zero()).expect("unit constant").egf_coefficients();
        for b in &bases {
            let truth = euler_series(&mgf, &b.x).expect("unit constant").egf_coefficients();
            for n in 0..=n_max {
                let rhs = number_expansion(&pd, &numbers, b, n);
                r.check("expansion", || format!("rv={} x={} n={n}", pd.rv, b.x), &truth[n], &rhs);
            }
        }
    }
    r.finish()
}

/// ½(Σₗ C(n,l) ℰₗ(x) E[(Y)ₙ₋ₗ,λ] + ℰₙ(x)).
fn euler_average(euler: &[LambdaPoly], moments: &[LambdaPoly], n: usize) -> LambdaPoly {
    let s: LambdaPoly = (0..=n)
        .map(|l| (&euler[l] * &moments[n - l]).scale(&binomial(n as i64, l as u32)))
        .sum();
    (s + euler[n].clone()).scale(&Rational::new(1, 2))
}

pub(crate) fn thm_2_12(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm2.12", "three expressions for the x-th power", provider_grid(ctx, true));
    let n_max = ctx.n_max();
    let bases = x_bases(ctx);
    let s1d = ctx.triangle(TriangleFamily::Stirling1Degenerate);
    for pd in providers(ctx) {
        let mgf = pd.mgf_at(n_max);
        for b in &bases {
            let truth = mgf_power(&pd, &b.x, n_max);
            let euler = euler_series(&mgf, &b.x).expect("unit constant").egf_coefficients();
            for n in 0..=n_max {
                let point = || format!("rv={} x={} n={n}", pd.rv, b.x);
                r.check("Euler average", point, &truth[n], &euler_average(&euler, &pd.moments, n));
                let second: LambdaPoly = (0..=n)
                    .map(|k| (&b.lambda_rising[k] * pd.s1.get(n, k)).scale(&sign(n - k)))
                    .sum();
                r.check("first-kind sum", point, &truth[n], &second);
                let third = |row: &dyn Fn(usize) -> usize| -> LambdaPoly {
                    (0..=n)
                        .map(|k| {
                            let inner: LambdaPoly = (k..=n).map(|m| s1d.get(row(m), k) * pd.s2.get(n, m)).sum();
                            &b.lambda_falling[k] * &inner
                        })
                        .sum()
                };
                r.check("degenerate first-kind sum", point, &truth[n], &third(&|m| m));
                r.check_variant(
                    "degenerate first-kind sum",
                    "S1,lambda(n,k) in place of S1,lambda(m,k)",
                    point,
                    &truth[n],
                    &third(&|_| n),
                );
            }
        }
    }
    r.finish()
}

pub(crate) fn power_sum(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let grid = format!("{}; n<=4; m<={n_max}", provider_grid(ctx, false));
    let mut r = Recorder::new("PowerSum", "sums of MGF powers", grid);
    for pd in providers(ctx) {
        if pd.mean.is_zero() {
            r.skip(format!("rv={}", pd.rv), ZERO_MEAN);
            continue;
        }
        power_sum_claims(&mut r, &pd, n_max, |_nn, _m, _k| None);
    }
    r.finish()
}

/// Checks (β_{m+1}(n+1) − β_{m+1})/(m+1) against the EGF coefficient m of
/// Σₖ MGFᵏ for n ≤ 4 and m ≤ `m_max`; `closed` optionally supplies a third
/// expression for the same quantity.
fn power_sum_claims(
    r: &mut Recorder,
    pd: &ProviderData,
    m_max: usize,
    closed: impl Fn(usize, usize, &[LambdaPoly]) -> Option<LambdaPoly>,
) {
    // Bernoulli values are needed up to index m_max + 1.
    let mgf = pd.mgf_at(m_max + 2);
    let numbers = bernoulli_series(&mgf, &Rational::zero())
        .expect("nonzero mean")
        .egf_coefficients();
    let base = pd.mgf_at(m_max);
    let mut power = EgfSeries::one(m_max);
    let mut partial = EgfSeries::zero(m_max);
    for nn in 0..=4usize {
        partial = &partial + &power;
        power = &power * &base;
        let sums = partial.egf_coefficients();
        let shifted = bernoulli_series(&mgf, &Rational::from(nn + 1))
            .expect("nonzero mean")
            .egf_coefficients();
        for m in 0..=m_max {
            let lhs = (&shifted[m + 1] - &numbers[m + 1]).scale(&Rational::new(1, m as i64 + 1));
            let point = || format!("rv={} n={nn} m={m}", pd.rv);
            r.check("Bernoulli difference", point, &lhs, &sums[m]);
            if let Some(rhs) = closed(nn, m, &sums) {
                r.check("closed form", point, &lhs, &rhs);
            }
        }
    }
}

fn fixed_grid(ctx: &Context, rv: &str, with_x: bool) -> String {
    if with_x {
        format!("n<={}; rv={rv}; {} x-points", ctx.n_max(), ctx.grid().x_points.len())
    } else {
        format!("n<={}; rv={rv}", ctx.n_max())
    }
}

pub(crate) fn thm_3_1(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let top = ctx.base_n();
    let grid = format!("{}; even moments to index {top}", fixed_grid(ctx, "normal:0,1", false));
    let mut r = Recorder::new("Thm3.1", "normal degenerate moments", grid);
    let pd = ctx.provider(&Distribution::standard_normal());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s2 = ctx.triangle(TriangleFamily::Stirling2);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    let term = |m: usize, k: usize, n: usize| -> LambdaPoly {
        s2d.get(n, m).scale(&(even_moment(k) * s1.get(m, 2 * k).constant_term()))
    };
    for n in 0..=n_max {
        let first: LambdaPoly = (0..=n)
            .flat_map(|m| (0..=m / 2).map(move |k| (m, k)))
            .map(|(m, k)| term(m, k, n))
            .sum();
        let second: LambdaPoly = (0..=n / 2)
            .flat_map(|k| (2 * k..=n).map(move |m| (m, k)))
            .map(|(m, k)| term(m, k, n))
            .sum();
        let point = || format!("n={n}");
        r.check("sum over m then k", point, &pd.moments[n], &first);
        r.check("sum over k then m", point, &pd.moments[n], &second);
    }
    // E[Y²ⁿ] at λ = 0, both as a moment and through the classical triangles.
    let normal = crate::probrv::degenerate_moments(&Distribution::standard_normal(), top);
    for n in 0..=top / 2 {
        let expected = c(even_moment(n));
        let point = || format!("2n={}", 2 * n);
        r.check("even moment at lambda=0", point, &c(normal[2 * n].eval(&Rational::zero())), &expected);
        let sum: Rational = (0..=n)
            .flat_map(|k| (2 * k..=2 * n).map(move |m| (m, k)))
            .map(|(m, k)| {
                even_moment(k) * s1.get(m, 2 * k).constant_term() * s2.get(2 * n, m).constant_term()
            })
            .sum();
        r.check("even moment as a classical sum", point, &c(sum), &expected);
    }
    r.finish()
}

pub(crate) fn thm_3_2(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm3.2", "normal second kind", fixed_grid(ctx, "normal:0,1", false));
    let n_max = ctx.n_max();
    let pd = ctx.provider(&Distribution::standard_normal());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    for n in 0..=n_max {
        // inner[j] = (2j)!/(2ʲj!) Σₘ S₁(m,2j){n brace m}_λ
        let inner: Vec<LambdaPoly> = (0..=n / 2)
            .map(|j| {
                let s: LambdaPoly = (2 * j..=n)
                    .map(|m| s2d.get(n, m).scale(&s1.get(m, 2 * j).constant_term()))
                    .sum();
                s.scale(&even_moment(j))
            })
            .collect();
        for k in 0..=n {
            let mut acc = LambdaPoly::zero();
            for l in 0..=k {
                let w = binomial(k as i64, l as u32) * sign(k - l);
                let lr = Rational::from(l);
                for (j, v) in inner.iter().enumerate() {
                    acc += v.scale(&(&w * &lr.pow(j as u32)));
                }
            }
            let rhs = acc.scale(&fact(k).recip().expect("nonzero"));
            r.check("alternating sum", || format!("n={n} k={k}"), pd.s2.get(n, k), &rhs);
        }
    }
    r.finish()
}

pub(crate) fn thm_3_3(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm3.3", "normal Euler polynomials", fixed_grid(ctx, "normal:0,1", true));
    let n_max = ctx.n_max();
    let pd = ctx.provider(&Distribution::standard_normal());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    let mgf = pd.mgf_at(n_max);
    for x in &ctx.grid().x_points {
        let classical = euler_polynomial(x, n_max / 2);
        let truth = euler_series(&mgf, x).expect("unit constant").egf_coefficients();
        for n in 0..=n_max {
            let sum = |col: &dyn Fn(usize, usize) -> usize| -> LambdaPoly {
                let mut acc = LambdaPoly::zero();
                for j in 0..=n {
                    for k in 0..=j / 2 {
                        // C(2k,k)·k!/2ᵏ = (2k)!/(2ᵏk!)
                        let w = &classical[k]
                            * &(binomial(2 * k as i64, k as u32) * fact(k) / Rational::from(2).pow(k as u32))
                            * s1.get(j, 2 * k).constant_term();
                        acc += s2d.get(n, col(j, k)).scale(&w);
                    }
                }
                acc
            };
            let point = || format!("x={x} n={n}");
            r.check("expansion", point, &truth[n], &sum(&|j, _| j));
            r.check_variant("expansion", "{n brace k}_lambda in place of {n brace j}_lambda", point, &truth[n], &sum(&|_, k| k));
        }
    }
    r.finish()
}

pub(crate) fn thm_3_4(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm3.4", "normal x-th power", fixed_grid(ctx, "normal:0,1", true));
    let n_max = ctx.n_max();
    let pd = ctx.provider(&Distribution::standard_normal());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    let mgf = pd.mgf_at(n_max);
    for x in &ctx.grid().x_points {
        let euler = euler_series(&mgf, x).expect("unit constant").egf_coefficients();
        for n in 0..=n_max {
            let mut rhs = LambdaPoly::zero();
            for j in 0..=n {
                for k in 0..=j / 2 {
                    let w = even_moment(k) * s1.get(j, 2 * k).constant_term() * x.pow(k as u32);
                    rhs += s2d.get(n, j).scale(&w);
                }
            }
            r.check("polynomial in x", || format!("x={x} n={n}"), &euler_average(&euler, &pd.moments, n), &rhs);
        }
    }
    r.finish()
}

pub(crate) fn thm_3_5(ctx: &Context) -> CheckResult {
    let mut r = Recorder::new("Thm3.5", "gamma first kind", fixed_grid(ctx, "gamma:1,1", false));
    let n_max = ctx.n_max();
    let pd = ctx.provider(&Distribution::unit_gamma());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s1d = ctx.triangle(TriangleFamily::Stirling1Degenerate);
    for n in 0..=n_max {
        for k in 0..=n {
            let rhs: LambdaPoly = (k..=n)
                .map(|l| s1d.get(l, k).shift(n - l).scale(&(sign(n - l) * s1.get(n, l).constant_term())))
                .sum();
            let point = || format!("n={n} k={k}");
            r.check("sum", point, pd.s1.get(n, k), &rhs);
            r.check("lambda=0 limit", point, &c(pd.s1.get(n, k).eval(&Rational::zero())), s1.get(n, k));
        }
    }
    r.finish()
}

pub(crate) fn thm_3_6(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let grid = format!("rv=gamma:1,1; n<=4; m<={n_max}");
    let mut r = Recorder::new("Thm3.6", "gamma Bernoulli differences", grid);
    let pd = ctx.provider(&Distribution::unit_gamma());
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    power_sum_claims(&mut r, &pd, n_max, |nn, m, _| {
        let mut acc = LambdaPoly::zero();
        for k in 0..=nn {
            for l in 0..=m {
                let w = binomial(k as i64 + l as i64 - 1, l as u32) * fact(l) * s1.get(m, l).constant_term();
                acc += lam(m - l).scale(&w);
            }
        }
        Some(acc)
    });
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_moments() {
        let v: Vec<Rational> = (0..=4).map(even_moment).collect();
        let expected: Vec<Rational> = [1, 1, 3, 15, 105].into_iter().map(Rational::from).collect();
        assert_eq!(v, expected);
    }
}
