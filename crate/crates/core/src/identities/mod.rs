//! The identity checker.
//!
//! Every check compares two independently computed sides for exact equality
//! in Q[λ] over a parameter grid. The generating-function definitions are the
//! ground truth; closed sums and recurrences are the claims under test. A
//! claim may carry a variant form (a sign or index change). When the stated
//! form fails and the variant passes, the check reports
//! [`Verdict::PassesWithVariant`] and records which form held.

mod checks;
mod context;
mod properties;
mod recorder;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::probrv::Distribution;

pub use context::{Context, Mutation, MutationTarget, ProviderData};
pub use recorder::{CheckResult, Failure, Pinned, Skip, VariantRecord, Verdict};

/// The parameter ranges a suite runs over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    /// Largest n (and k, l, m, j) quantified over.
    pub n_max: usize,
    pub providers: Vec<Distribution>,
    /// Rational points at which identities polynomial in x are evaluated.
    pub x_points: Vec<Rational>,
    /// Numbers of independent copies for the sum-of-copies check.
    pub m_list: Vec<usize>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_max: 10,
            providers: Distribution::default_providers(),
            x_points: default_x_points(),
            m_list: vec![1, 2, 3, 4],
        }
    }
}

pub fn default_x_points() -> Vec<Rational> {
    ["0", "1", "-1", "1/2", "2", "3", "5", "-2", "1/3", "7", "4", "-3"]
        .iter()
        .map(|s| s.parse().expect("built-in x-point parses"))
        .collect()
}

/// One registered check.
pub struct CheckSpec {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&Context) -> CheckResult,
}

impl CheckSpec {
    pub fn run(&self, ctx: &Context) -> CheckResult {
        (self.run)(ctx)
    }
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).finish()
    }
}

macro_rules! spec {
    ($id:literal, $title:literal, $run:path) => {
        CheckSpec {
            id: $id,
            title: $title,
            run: $run,
        }
    };
}

static REGISTRY: &[CheckSpec] = &[
    spec!("Thm2.1", "degenerate cumulants as a sum over the second-kind triangle", checks::thm_2_1),
    spec!("Thm2.2", "two expansions of the x-th power of the MGF, and sums of copies", checks::thm_2_2),
    spec!("Thm2.4", "conversions through the -lambda triangles", checks::thm_2_4),
    spec!("Thm2.5", "second kind through first kind, Lah and degenerate second kind", checks::thm_2_5),
    spec!("Thm2.6", "degenerate moments through first kind and Lah numbers", checks::thm_2_6),
    spec!("Thm2.7", "first-kind recurrence in the cumulants, and its diagonal", checks::thm_2_7),
    spec!("Thm2.9", "second-kind recurrence in the moments, and its diagonal", checks::thm_2_9),
    spec!("Thm2.10", "Bernoulli polynomials from the numbers and the first kind", checks::thm_2_10),
    spec!("Thm2.11", "Euler polynomials from the numbers and the first kind", checks::thm_2_11),
    spec!("Thm2.12", "three expressions for the x-th power of the MGF", checks::thm_2_12),
    spec!("PowerSum", "sums of MGF powers as Bernoulli differences", checks::power_sum),
    spec!("Thm3.1", "normal degenerate moments and even moments", checks::thm_3_1),
    spec!("Thm3.2", "normal second-kind triangle", checks::thm_3_2),
    spec!("Thm3.3", "normal Euler polynomials through classical Euler polynomials", checks::thm_3_3),
    spec!("Thm3.4", "normal x-th power of the MGF as a polynomial in x", checks::thm_3_4),
    spec!("Thm3.5", "gamma first-kind triangle and its lambda = 0 limit", checks::thm_3_5),
    spec!("Thm3.6", "gamma Bernoulli differences", checks::thm_3_6),
    spec!("second-kind-definitions", "alternating-sum and GF definitions of the second kind", properties::second_kind_definitions),
    spec!("inverse-pair", "orthogonality of the first and second kind", properties::inverse_pair),
    spec!("degenerate-routes", "GF and basis-conversion triangles agree", properties::degenerate_routes),
    spec!("power-routes", "binomial, degenerate and ordinary exp-log powers agree", properties::power_routes),
    spec!("normal-closed-form", "moment-route and closed-form normal MGF", properties::normal_closed_form),
    spec!("gamma-closed-form", "moment-route and closed-form gamma MGF", properties::gamma_closed_form),
    spec!("lambda-zero-limits", "lambda = 0 specializations equal the classical objects", properties::lambda_zero_limits),
    spec!("const-first-kind-lah", "first kind for Y = 1 is lambda^(n-k) L(n,k)", properties::const_first_kind_lah),
];

const ALIASES: &[(&str, &str)] = &[("Cor2.3", "Thm2.2"), ("Cor2.8", "Thm2.7")];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

/// Resolves `all`, a check id, or an alias to the checks it selects.
pub fn resolve(id: &str) -> Result<Vec<&'static CheckSpec>> {
    if id == "all" {
        return Ok(REGISTRY.iter().collect());
    }
    let id = ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map_or(id, |(_, target)| target);
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .map(|c| vec![c])
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Totals {
    pub fn total(&self) -> usize {
        self.passed + self.failed + self.skipped
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub grid: Grid,
    pub totals: Totals,
    pub checks: Vec<CheckResult>,
    /// Excluded from serialization so that reports are byte-for-byte reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs the selected checks in parallel; results keep registry order.
pub fn run_checks(ctx: &Context, suite: &str, specs: &[&CheckSpec]) -> CheckReport {
    let start = Instant::now();
    let checks: Vec<CheckResult> = specs.par_iter().map(|s| s.run(ctx)).collect();
    let mut totals = Totals::default();
    for c in &checks {
        totals.passed += c.passed;
        totals.failed += c.failed;
        totals.skipped += c.skipped;
    }
    CheckReport {
        suite: suite.to_string(),
        grid: ctx.grid().clone(),
        totals,
        checks,
        wall_time: start.elapsed(),
    }
}

/// Resolves `id` and runs it over `ctx`.
pub fn run_suite(ctx: &Context, id: &str) -> Result<CheckReport> {
    let specs = resolve(id)?;
    Ok(run_checks(ctx, id, &specs))
}
