use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{rising_factorial, Rational};

/// A random variable known through its exact power moments E[Yʲ].
pub trait MomentProvider: Send + Sync {
    /// A short identifying tag, used in reports.
    fn label(&self) -> String;

    /// E[Yʲ] for j = 0..=n. Entry 0 is always 1.
    fn power_moments(&self, n: usize) -> Vec<Rational>;

    fn mean(&self) -> Rational {
        self.power_moments(1).swap_remove(1)
    }
}

/// The distributions with rational closed-form moments, parsed from the
/// `kind:params` mini-grammar (`const:c`, `bernoulli:p`,
/// `discrete:y1=p1,y2=p2,...`, `normal:mu,sigma2`, `gamma:alpha,beta`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Distribution {
    Constant(Rational),
    Bernoulli(Rational),
    Discrete(Vec<(Rational, Rational)>),
    Normal { mean: Rational, variance: Rational },
    Gamma { shape: Rational, rate: Rational },
}

impl Distribution {
    pub fn constant(c: Rational) -> Self {
        Distribution::Constant(c)
    }

    pub fn bernoulli(p: Rational) -> Result<Self> {
        if p.is_negative() || p > Rational::one() {
            return Err(Error::InvalidParameter(format!("bernoulli p={p} outside [0,1]")));
        }
        Ok(Distribution::Bernoulli(p))
    }

    pub fn discrete(atoms: Vec<(Rational, Rational)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidParameter("discrete distribution has no atoms".into()));
        }
        if let Some((_, p)) = atoms.iter().find(|(_, p)| p.is_negative()) {
            return Err(Error::InvalidParameter(format!("negative probability {p}")));
        }
        let total: Rational = atoms.iter().map(|(_, p)| p).sum();
        if !total.is_one() {
            return Err(Error::InvalidParameter(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Distribution::Discrete(atoms))
    }

    pub fn normal(mean: Rational, variance: Rational) -> Result<Self> {
        if variance.is_negative() {
            return Err(Error::InvalidParameter(format!("normal variance {variance} < 0")));
        }
        Ok(Distribution::Normal { mean, variance })
    }

    pub fn gamma(shape: Rational, rate: Rational) -> Result<Self> {
        if !shape.is_positive() || !rate.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "gamma parameters must be positive, got alpha={shape}, beta={rate}"
            )));
        }
        Ok(Distribution::Gamma { shape, rate })
    }

    pub fn standard_normal() -> Self {
        Distribution::Normal {
            mean: Rational::zero(),
            variance: Rational::one(),
        }
    }

    /// Γ(1,1), the unit exponential.
    pub fn unit_gamma() -> Self {
        Distribution::Gamma {
            shape: Rational::one(),
            rate: Rational::one(),
        }
    }

    /// The five providers every check runs over by default.
    pub fn default_providers() -> Vec<Distribution> {
        ["const:1", "bernoulli:1/2", "discrete:1=1/2,3=1/2", "normal:0,1", "gamma:1,1"]
            .iter()
            .map(|s| s.parse().expect("built-in spec parses"))
            .collect()
    }
}

impl MomentProvider for Distribution {
    fn label(&self) -> String {
        self.to_string()
    }

    fn power_moments(&self, n: usize) -> Vec<Rational> {
        match self {
            Distribution::Constant(c) => (0..=n as u32).map(|j| c.pow(j)).collect(),
            Distribution::Bernoulli(p) => (0..=n)
                .map(|j| if j == 0 { Rational::one() } else { p.clone() })
                .collect(),
            Distribution::Discrete(atoms) => (0..=n as u32)
                .map(|j| atoms.iter().map(|(y, p)| p * &y.pow(j)).sum())
                .collect(),
            Distribution::Normal { mean, variance } => {
                // M_{j+1} = μ·M_j + σ²·j·M_{j−1}
                let mut m = vec![Rational::one()];
                for j in 0..n {
                    let prev = if j == 0 { Rational::zero() } else { &m[j - 1] * variance * Rational::from(j) };
                    let next = mean * &m[j] + prev;
                    m.push(next);
                }
                m
            }
            Distribution::Gamma { shape, rate } => (0..=n)
                .map(|j| rising_factorial(shape, j) / rate.pow(j as u32))
                .collect(),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Constant(c) => write!(f, "const:{c}"),
            Distribution::Bernoulli(p) => write!(f, "bernoulli:{p}"),
            Distribution::Discrete(atoms) => {
                write!(f, "discrete:")?;
                for (i, (y, p)) in atoms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{y}={p}")?;
                }
                Ok(())
            }
            Distribution::Normal { mean, variance } => write!(f, "normal:{mean},{variance}"),
            Distribution::Gamma { shape, rate } => write!(f, "gamma:{shape},{rate}"),
        }
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseDistribution {
            spec: spec.to_string(),
            reason,
        };
        let (kind, params) = spec
            .trim()
            .split_once(':')
            .ok_or_else(|| fail("expected `kind:params`".into()))?;
        let rationals = |s: &str| -> Result<Vec<Rational>> {
            s.split(',')
                .map(|p| p.parse::<Rational>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| fail(e.to_string()))
        };
        let exactly = |n: usize| -> Result<Vec<Rational>> {
            let v = rationals(params)?;
            if v.len() != n {
                return Err(fail(format!("expected {n} parameter(s), got {}", v.len())));
            }
            Ok(v)
        };
        let checked = |r: Result<Distribution>| r.map_err(|e| fail(e.to_string()));
        match kind.trim() {
            "const" => Ok(Distribution::constant(exactly(1)?.remove(0))),
            "bernoulli" => checked(Distribution::bernoulli(exactly(1)?.remove(0))),
            "normal" => {
                let v = exactly(2)?;
                checked(Distribution::normal(v[0].clone(), v[1].clone()))
            }
            "gamma" => {
                let v = exactly(2)?;
                checked(Distribution::gamma(v[0].clone(), v[1].clone()))
            }
            "discrete" => {
                let atoms = params
                    .split(',')
                    .map(|atom| {
                        let (y, p) = atom
                            .split_once('=')
                            .ok_or_else(|| fail(format!("atom `{atom}` is not `value=prob`")))?;
                        let y = y.parse::<Rational>().map_err(|e| fail(e.to_string()))?;
                        let p = p.parse::<Rational>().map_err(|e| fail(e.to_string()))?;
                        Ok((y, p))
                    })
                    .collect::<Result<Vec<_>>>()?;
                checked(Distribution::discrete(atoms))
            }
            other => Err(fail(format!("unknown distribution kind `{other}`"))),
        }
    }
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Distribution {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
