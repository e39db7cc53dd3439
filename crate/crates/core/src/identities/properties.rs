//! Structural checks: definition equivalences, closed forms, route agreement
//! and λ = 0 specializations.

use crate::egf::PowerRoute;
use crate::exactnum::{sign, LambdaPoly, Rational};
use crate::probrv::{
    bernoulli_polynomial, bernoulli_series, classical_cumulants, classical_prob_bernoulli,
    classical_prob_stirling1, degenerate_mgf, euler_polynomial, euler_series, prob_stirling2_by_alternating_sum,
    standard_normal_mgf_closed_form, unit_gamma_mgf_closed_form, Distribution, MomentProvider,
};
use crate::triangles::{
    lah_by_basis, stirling1_degenerate_by_basis, stirling2_degenerate_by_basis,
    unsigned_stirling1_degenerate_by_basis, Triangle, TriangleFamily,
};

use super::context::Context;
use super::recorder::{CheckResult, Recorder};

fn c(r: Rational) -> LambdaPoly {
    LambdaPoly::constant(r)
}

fn delta(n: usize, k: usize) -> LambdaPoly {
    if n == k {
        LambdaPoly::one()
    } else {
        LambdaPoly::zero()
    }
}

/// Compares two triangles entrywise for rows 0..=n_max.
fn same_triangle(r: &mut Recorder, claim: &str, tag: &str, lhs: &Triangle, rhs: &Triangle, n_max: usize) {
    for n in 0..=n_max {
        for k in 0..=n {
            r.check(claim, || format!("{tag}n={n} k={k}"), lhs.get(n, k), rhs.get(n, k));
        }
    }
}

pub(crate) fn second_kind_definitions(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let mut r = Recorder::new(
        "second-kind-definitions",
        "alternating sum over copies equals the GF definition",
        format!("n,k<={n_max}; {} providers", ctx.grid().providers.len()),
    );
    for rv in &ctx.grid().providers {
        let pd = ctx.provider(rv);
        let alt = prob_stirling2_by_alternating_sum(rv, n_max);
        same_triangle(&mut r, "alternating sum", &format!("rv={rv} "), &alt.triangle, &pd.s2, n_max);
    }
    r.finish()
}

pub(crate) fn inverse_pair(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let mut r = Recorder::new("inverse-pair", "first and second kind are inverse", format!("n,m<={n_max}"));
    let pairs = [
        ("degenerate", TriangleFamily::Stirling1Degenerate, TriangleFamily::Stirling2Degenerate),
        ("classical", TriangleFamily::Stirling1, TriangleFamily::Stirling2),
    ];
    for (tag, first, second) in pairs {
        let (a, b) = (ctx.triangle(first), ctx.triangle(second));
        for n in 0..=n_max {
            for m in 0..=n_max {
                let ab: LambdaPoly = (0..=n).map(|k| a.get(n, k) * b.get(k, m)).sum();
                let ba: LambdaPoly = (0..=n).map(|k| b.get(n, k) * a.get(k, m)).sum();
                let point = || format!("{tag} n={n} m={m}");
                r.check("first then second", point, &ab, &delta(n, m));
                r.check("second then first", point, &ba, &delta(n, m));
            }
        }
    }
    r.finish()
}

pub(crate) fn degenerate_routes(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let mut r = Recorder::new("degenerate-routes", "GF triangles equal basis conversions", format!("n<={n_max}"));
    let s1d = ctx.triangle(TriangleFamily::Stirling1Degenerate);
    let s2d = ctx.triangle(TriangleFamily::Stirling2Degenerate);
    let unsigned = ctx.triangle(TriangleFamily::Stirling1DegenerateUnsigned);
    let routes = [
        ("s1-degen", s1d, stirling1_degenerate_by_basis(n_max)),
        ("s2-degen", s2d, stirling2_degenerate_by_basis(n_max)),
        ("lah", ctx.triangle(TriangleFamily::Lah), lah_by_basis(n_max)),
        ("s1-degen-unsigned", unsigned, unsigned_stirling1_degenerate_by_basis(n_max)),
    ];
    for (tag, built, basis) in &routes {
        same_triangle(&mut r, "basis conversion", &format!("{tag} "), built, basis, n_max);
    }
    for n in 0..=n_max {
        for k in 0..=n {
            let point = || format!("n={n} k={k}");
            r.check("unsigned sign relation", point, unsigned.get(n, k), &s1d.get(n, k).scale(&sign(n - k)));
            for (tag, t) in [("s1-degen", s1d), ("s2-degen", s2d)] {
                let deg = t.get(n, k).degree().unwrap_or(0);
                let bound = LambdaPoly::integer(deg.min(n - k) as i64);
                r.check("lambda degree at most n-k", || format!("{tag} n={n} k={k}"), &LambdaPoly::integer(deg as i64), &bound);
            }
        }
    }
    r.finish()
}

pub(crate) fn power_routes(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let g = ctx.grid();
    let mut r = Recorder::new(
        "power-routes",
        "MGF to the x by three routes",
        format!("order {n_max}; {} providers; {} x-points", g.providers.len(), g.x_points.len()),
    );
    for rv in &g.providers {
        let mgf = ctx.provider(rv).mgf_at(n_max);
        for x in &g.x_points {
            let power = |route| mgf.x_power(x, route).expect("unit constant").egf_coefficients();
            let binomial = power(PowerRoute::Binomial);
            let degenerate = power(PowerRoute::DegenerateExpLog);
            let ordinary = power(PowerRoute::ExpLog);
            for n in 0..=n_max {
                let point = || format!("rv={rv} x={x} n={n}");
                r.check("binomial = degenerate exp-log", point, &binomial[n], &degenerate[n]);
                r.check("binomial = exp-log", point, &binomial[n], &ordinary[n]);
            }
        }
    }
    r.finish()
}

fn closed_form(ctx: &Context, id: &str, rv: &Distribution, closed: fn(usize) -> crate::egf::EgfSeries) -> CheckResult {
    let order = ctx.n_max().max(12);
    let mut r = Recorder::new(id, "moment route equals closed form", format!("order {order}; rv={rv}"));
    let moments = degenerate_mgf(rv, order).series.egf_coefficients();
    let closed = closed(order).egf_coefficients();
    for n in 0..=order {
        r.check("coefficient", || format!("n={n}"), &moments[n], &closed[n]);
    }
    r.finish()
}

pub(crate) fn normal_closed_form(ctx: &Context) -> CheckResult {
    closed_form(ctx, "normal-closed-form", &Distribution::standard_normal(), standard_normal_mgf_closed_form)
}

pub(crate) fn gamma_closed_form(ctx: &Context) -> CheckResult {
    closed_form(ctx, "gamma-closed-form", &Distribution::unit_gamma(), unit_gamma_mgf_closed_form)
}

pub(crate) fn lambda_zero_limits(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let g = ctx.grid();
    let mut r = Recorder::new(
        "lambda-zero-limits",
        "lambda = 0 gives the classical objects",
        format!("n<={n_max}; {} providers; {} x-points", g.providers.len(), g.x_points.len()),
    );
    let zero = Rational::zero();
    let s1 = ctx.triangle(TriangleFamily::Stirling1);
    let s2 = ctx.triangle(TriangleFamily::Stirling2);
    let limit = |t: &Triangle| t.eval_lambda(&zero);
    same_triangle(&mut r, "S1,lambda -> S1", "", &limit(ctx.triangle(TriangleFamily::Stirling1Degenerate)), s1, n_max);
    same_triangle(&mut r, "{.}_lambda -> {.}", "", &limit(ctx.triangle(TriangleFamily::Stirling2Degenerate)), s2, n_max);
    let gamma = ctx.provider(&Distribution::unit_gamma());
    same_triangle(&mut r, "gamma first kind -> S1", "", &limit(&gamma.s1), s1, n_max);
    let one = ctx.provider(&Distribution::constant(Rational::one()));
    let kronecker = Triangle::from_fn("delta", n_max, delta);
    same_triangle(&mut r, "Y=1 first kind -> delta", "", &limit(&one.s1), &kronecker, n_max);

    for rv in &g.providers {
        let pd = ctx.provider(rv);
        let tag = format!("rv={rv} ");
        let kappa = classical_cumulants(rv, n_max);
        let power = rv.power_moments(n_max);
        for n in 0..=n_max {
            let point = || format!("{tag}n={n}");
            r.check("cumulants", point, &c(pd.cumulants[n].eval(&zero)), &c(kappa[n].clone()));
            r.check("moments", point, &c(pd.moments[n].eval(&zero)), &c(power[n].clone()));
        }
        same_triangle(&mut r, "first kind", &tag, &limit(&pd.s1), &classical_prob_stirling1(rv, n_max), n_max);
        if pd.mean.is_zero() {
            r.skip(format!("rv={rv} Bernoulli"), "E[Y]=0");
            continue;
        }
        let mgf = pd.mgf_at(n_max + 1);
        for x in &g.x_points {
            let degenerate = bernoulli_series(&mgf, x).expect("nonzero mean").egf_coefficients();
            let classical = classical_prob_bernoulli(rv, x, n_max).expect("nonzero mean");
            for n in 0..=n_max {
                r.check("Bernoulli", || format!("{tag}x={x} n={n}"), &c(degenerate[n].eval(&zero)), &c(classical[n].clone()));
            }
        }
    }

    // Y = 1 at λ = 0 gives the ordinary Bernoulli and Euler polynomials.
    let mgf = one.mgf_at(n_max + 1);
    for x in &g.x_points {
        let b = bernoulli_series(&mgf, x).expect("nonzero mean").egf_coefficients();
        let e = euler_series(&one.mgf_at(n_max), x).expect("unit constant").egf_coefficients();
        let (bc, ec) = (bernoulli_polynomial(x, n_max), euler_polynomial(x, n_max));
        for n in 0..=n_max {
            let point = || format!("x={x} n={n}");
            r.check("Y=1 Bernoulli -> B_n(x)", point, &c(b[n].eval(&zero)), &c(bc[n].clone()));
            r.check("Y=1 Euler -> E_n(x)", point, &c(e[n].eval(&zero)), &c(ec[n].clone()));
        }
    }
    r.finish()
}

pub(crate) fn const_first_kind_lah(ctx: &Context) -> CheckResult {
    let n_max = ctx.n_max();
    let mut r = Recorder::new("const-first-kind-lah", "Y = 1 first kind from t/(1+lambda t)", format!("n,k<={n_max}"));
    let one = ctx.provider(&Distribution::constant(Rational::one()));
    let lah = ctx.triangle(TriangleFamily::Lah);
    for n in 0..=n_max {
        for k in 0..=n {
            r.check("lambda^(n-k) L(n,k)", || format!("n={n} k={k}"), one.s1.get(n, k), &lah.get(n, k).shift(n - k));
        }
    }
    r.finish()
}
