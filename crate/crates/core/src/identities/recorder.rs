use serde::Serialize;

use crate::exactnum::LambdaPoly;

/// Failures kept per claim; the count is always exact.
const MAX_RECORDED: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Skipped,
    PassesWithVariant,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub claim: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub point: String,
    pub reason: String,
}

/// Which form of a claim with a variant held.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pinned {
    Statement,
    Variant,
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantRecord {
    pub claim: String,
    pub variant: String,
    pub statement_failures: usize,
    pub variant_failures: usize,
    pub pinned: Pinned,
    /// Failures of the form that was not adopted, kept as evidence.
    pub rejected: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub title: String,
    pub grid: String,
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub skips: Vec<Skip>,
    pub variants: Vec<VariantRecord>,
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, claim: &str, point: impl FnOnce() -> String, lhs: &LambdaPoly, rhs: &LambdaPoly) {
        if lhs == rhs {
            self.passed += 1;
            return;
        }
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(Failure {
                claim: claim.to_string(),
                point: point(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

struct Claim {
    name: String,
    statement: Tally,
    variant: Option<(String, Tally)>,
}

/// Accumulates comparisons for one check.
pub(crate) struct Recorder {
    id: String,
    title: String,
    grid: String,
    claims: Vec<Claim>,
    skips: Vec<Skip>,
}

impl Recorder {
    pub fn new(id: &str, title: &str, grid: impl Into<String>) -> Self {
        Recorder {
            id: id.to_string(),
            title: title.to_string(),
            grid: grid.into(),
            claims: Vec::new(),
            skips: Vec::new(),
        }
    }

    fn claim(&mut self, name: &str) -> &mut Claim {
        let i = match self.claims.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.claims.push(Claim {
                    name: name.to_string(),
                    statement: Tally::default(),
                    variant: None,
                });
                self.claims.len() - 1
            }
        };
        &mut self.claims[i]
    }

    /// Compares the stated form of `claim` at one grid point.
    pub fn check(&mut self, claim: &str, point: impl FnOnce() -> String, lhs: &LambdaPoly, rhs: &LambdaPoly) {
        self.claim(claim).statement.record(claim, point, lhs, rhs);
    }

    /// Compares the variant form `variant` of `claim` at one grid point.
    pub fn check_variant(
        &mut self,
        claim: &str,
        variant: &str,
        point: impl FnOnce() -> String,
        lhs: &LambdaPoly,
        rhs: &LambdaPoly,
    ) {
        let c = self.claim(claim);
        let (_, tally) = c.variant.get_or_insert_with(|| (variant.to_string(), Tally::default()));
        tally.record(claim, point, lhs, rhs);
    }

    pub fn skip(&mut self, point: impl Into<String>, reason: impl Into<String>) {
        self.skips.push(Skip {
            point: point.into(),
            reason: reason.into(),
        });
    }

    pub fn finish(self) -> CheckResult {
        let mut passed = 0;
        let mut failed = 0;
        let mut failures = Vec::new();
        let mut variants = Vec::new();
        let mut verdict = Verdict::Pass;
        for claim in self.claims {
            let Claim {
                name,
                statement,
                variant,
            } = claim;
            let Some((variant_text, vt)) = variant else {
                passed += statement.passed;
                failed += statement.failed;
                if statement.failed > 0 {
                    verdict = verdict.max(Verdict::Fail);
                }
                failures.extend(statement.failures);
                continue;
            };
            let pinned = match (statement.failed == 0, vt.failed == 0) {
                (true, true) => Pinned::Both,
                (true, false) => Pinned::Statement,
                (false, true) => Pinned::Variant,
                (false, false) => Pinned::Neither,
            };
            let (adopted, rejected) = match pinned {
                Pinned::Variant => (vt, statement),
                _ => (statement, vt),
            };
            passed += adopted.passed;
            failed += adopted.failed;
            verdict = verdict.max(match pinned {
                Pinned::Statement | Pinned::Both => Verdict::Pass,
                Pinned::Variant => Verdict::PassesWithVariant,
                Pinned::Neither => Verdict::Fail,
            });
            variants.push(VariantRecord {
                claim: name,
                variant: variant_text,
                statement_failures: if pinned == Pinned::Variant { rejected.failed } else { adopted.failed },
                variant_failures: if pinned == Pinned::Variant { adopted.failed } else { rejected.failed },
                pinned,
                rejected: rejected.failures,
            });
            failures.extend(adopted.failures);
        }
        let skipped = self.skips.len();
        if verdict == Verdict::Pass && passed == 0 && skipped > 0 {
            verdict = Verdict::Skipped;
        }
        CheckResult {
            id: self.id,
            title: self.title,
            grid: self.grid,
            verdict,
            passed,
            failed,
            skipped,
            failures,
            skips: self.skips,
            variants,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: i64) -> LambdaPoly {
        LambdaPoly::integer(c)
    }

    #[test]
    fn plain_claims() {
        let mut r = Recorder::new("x", "t", "g");
        r.check("a", || "n=0".into(), &p(1), &p(1));
        r.check("a", || "n=1".into(), &p(1), &p(2));
        let res = r.finish();
        assert_eq!(res.verdict, Verdict::Fail);
        assert_eq!((res.passed, res.failed), (1, 1));
        assert_eq!(res.failures[0].lhs, "1");
        assert_eq!(res.failures[0].rhs, "2");
    }

    #[test]
    fn variant_adopted_when_statement_fails() {
        let mut r = Recorder::new("x", "t", "g");
        r.check("a", || "n=0".into(), &p(1), &p(2));
        r.check_variant("a", "sign flipped", || "n=0".into(), &p(2), &p(2));
        let res = r.finish();
        assert_eq!(res.verdict, Verdict::PassesWithVariant);
        assert_eq!(res.failed, 0);
        assert!(res.failures.is_empty());
        assert_eq!(res.variants[0].pinned, Pinned::Variant);
        assert_eq!(res.variants[0].statement_failures, 1);
        assert_eq!(res.variants[0].rejected.len(), 1);
    }

    #[test]
    fn statement_pinned_over_failing_variant() {
        let mut r = Recorder::new("x", "t", "g");
        r.check("a", || "n=0".into(), &p(1), &p(1));
        r.check_variant("a", "v", || "n=0".into(), &p(1), &p(3));
        let res = r.finish();
        assert_eq!(res.verdict, Verdict::Pass);
        assert_eq!(res.variants[0].pinned, Pinned::Statement);
        assert_eq!(res.variants[0].variant_failures, 1);
    }

    #[test]
    fn all_skipped() {
        let mut r = Recorder::new("x", "t", "g");
        r.skip("rv=normal:0,1", "E[Y]=0");
        let res = r.finish();
        assert_eq!(res.verdict, Verdict::Skipped);
        assert_eq!(res.skipped, 1);
    }
}
