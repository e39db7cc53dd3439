use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use crate::egf::EgfSeries;
use crate::error::{Error, Result};
use crate::exactnum::{LambdaPoly, Rational};
use crate::probrv::{
    cumulant_series, degenerate_mgf, prob_stirling1_from_mgf, prob_stirling2_from_mgf, Distribution,
    MomentProvider,
};
use crate::triangles::{Triangle, TriangleFamily};

use super::Grid;

/// Which triangle a [`Mutation`] corrupts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationTarget {
    Base(TriangleFamily),
    ProbStirling1,
    ProbStirling2,
}

/// Adds 1 to a single triangle entry before any check runs. Used to confirm
/// that the checker notices a corrupted table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub target: MutationTarget,
    pub n: usize,
    pub k: usize,
}

impl Mutation {
    fn apply(&self, t: &mut Triangle) {
        if self.n <= t.max_n() {
            let bumped = t.get(self.n, self.k) + &LambdaPoly::one();
            t.set(self.n, self.k, bumped);
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.target {
            MutationTarget::Base(family) => family.name(),
            MutationTarget::ProbStirling1 => "s1-prob",
            MutationTarget::ProbStirling2 => "s2-prob",
        };
        write!(f, "{name}:{},{}", self.n, self.k)
    }
}

/// Parses `family:n,k`, for example `s2-prob:4,2`.
impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("mutation `{s}` is not `family:n,k`"));
        let (family, pos) = s.split_once(':').ok_or_else(bad)?;
        let (n, k) = pos.split_once(',').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        if k > n {
            return Err(Error::InvalidParameter(format!("mutation entry ({n},{k}) lies above the diagonal")));
        }
        let target = match family {
            "s1-prob" => MutationTarget::ProbStirling1,
            "s2-prob" => MutationTarget::ProbStirling2,
            other => MutationTarget::Base(other.parse()?),
        };
        Ok(Mutation { target, n, k })
    }
}

/// Everything the checks need about one random variable, computed once.
#[derive(Debug)]
pub struct ProviderData {
    pub rv: Distribution,
    pub mean: Rational,
    /// Degenerate MGF at order n_max + 2, enough for the Bernoulli checks.
    pub mgf: EgfSeries,
    /// E[(Y)ₙ,λ] for n = 0..=n_max + 2.
    pub moments: Vec<LambdaPoly>,
    /// κₙ,λ(Y) for n = 0..=n_max.
    pub cumulants: Vec<LambdaPoly>,
    pub s2: Triangle,
    pub s1: Triangle,
}

impl ProviderData {
    fn build(rv: &Distribution, n_max: usize, mutation: Option<&Mutation>) -> Self {
        let mgf = degenerate_mgf(rv, n_max + 2).series;
        let base = mgf.truncate(n_max).expect("n_max below order");
        let mut s2 = prob_stirling2_from_mgf(&base);
        let mut s1 = prob_stirling1_from_mgf(&base);
        if let Some(m) = mutation {
            match m.target {
                MutationTarget::ProbStirling2 => m.apply(&mut s2),
                MutationTarget::ProbStirling1 => m.apply(&mut s1),
                MutationTarget::Base(_) => {}
            }
        }
        ProviderData {
            rv: rv.clone(),
            mean: rv.mean(),
            moments: mgf.egf_coefficients(),
            cumulants: cumulant_series(&base).egf_coefficients(),
            mgf,
            s2,
            s1,
        }
    }

    /// The MGF truncated at `order`.
    pub fn mgf_at(&self, order: usize) -> EgfSeries {
        self.mgf.truncate(order).expect("order within the stored MGF")
    }
}

/// Shared, read-mostly state for one suite run: the grid, the base
/// triangles, and a memo of per-provider data.
pub struct Context {
    grid: Grid,
    mutation: Option<Mutation>,
    base_n: usize,
    base: HashMap<TriangleFamily, Arc<Triangle>>,
    providers: Mutex<HashMap<Distribution, Arc<ProviderData>>>,
}

impl Context {
    pub fn new(grid: Grid) -> Result<Self> {
        Self::with_mutation(grid, None)
    }

    pub fn with_mutation(grid: Grid, mutation: Option<Mutation>) -> Result<Self> {
        if grid.n_max < 1 {
            return Err(Error::InvalidParameter("n_max must be at least 1".into()));
        }
        if let Some(m) = &mutation {
            if m.n > grid.n_max {
                return Err(Error::InvalidParameter(format!(
                    "mutation row {} exceeds n_max {}",
                    m.n, grid.n_max
                )));
            }
        }
        // Even normal moments up to index 12 are checked regardless of n_max.
        let base_n = (grid.n_max + 2).max(12);
        let base = TriangleFamily::ALL
            .iter()
            .map(|&family| {
                let mut t = family.build(base_n);
                if let Some(m) = &mutation {
                    if m.target == MutationTarget::Base(family) {
                        m.apply(&mut t);
                    }
                }
                (family, Arc::new(t))
            })
            .collect();
        Ok(Context {
            grid,
            mutation,
            base_n,
            base,
            providers: Mutex::new(HashMap::new()),
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn n_max(&self) -> usize {
        self.grid.n_max
    }

    pub fn mutation(&self) -> Option<&Mutation> {
        self.mutation.as_ref()
    }

    /// Rows available in the base triangles.
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn triangle(&self, family: TriangleFamily) -> &Triangle {
        &self.base[&family]
    }

    /// Per-provider data, built on first use. Construction happens under the
    /// lock, so each provider is built exactly once.
    pub fn provider(&self, rv: &Distribution) -> Arc<ProviderData> {
        let mut map = self.providers.lock().expect("provider cache poisoned");
        Arc::clone(
            map.entry(rv.clone())
                .or_insert_with(|| Arc::new(ProviderData::build(rv, self.grid.n_max, self.mutation.as_ref()))),
        )
    }
}
