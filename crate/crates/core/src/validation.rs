//! The full chain of checks a marked dessin must pass to certify a table.
//!
//! Checks run in order; when one fails, the checks that depend on it are
//! reported as skipped (and count as failures) instead of being attempted.

use std::fmt;

use crate::document::DessinDocument;
use crate::fuchsian::{check_condition_star, pullback_identities};
use crate::hypermap::{Dessin, MarkLabel, MarkedDessin};
use crate::tables::{passport_of_table, RamificationTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

pub const CHECK_NAMES: [&str; 11] = [
    "permutations",
    "transitivity",
    "product identity",
    "genus 0",
    "table",
    "degree",
    "passport",
    "marks",
    "mark indices",
    "condition star",
    "pull-back identities",
];

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == Outcome::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome != Outcome::Pass)
    }

    pub fn outcome(&self, name: &str) -> Option<&Outcome> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.outcome)
    }

    fn push(&mut self, name: &'static str, outcome: Outcome) -> bool {
        let ok = outcome == Outcome::Pass;
        self.checks.push(Check { name, outcome });
        ok
    }

    fn check(&mut self, name: &'static str, ok: bool, why: impl FnOnce() -> String) -> bool {
        self.push(
            name,
            if ok {
                Outcome::Pass
            } else {
                Outcome::Fail(why())
            },
        )
    }

    fn skip_rest(&mut self) {
        for name in CHECK_NAMES {
            if self.outcome(name).is_none() {
                self.push(name, Outcome::Skipped);
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS  {}", c.name)?,
                Outcome::Fail(why) => writeln!(f, "FAIL  {}: {why}", c.name)?,
                Outcome::Skipped => writeln!(f, "SKIP  {}", c.name)?,
            }
        }
        let failed = self.failures().count();
        if failed == 0 {
            writeln!(f, "all {} checks passed", self.checks.len())
        } else {
            writeln!(f, "{failed} of {} checks did not pass", self.checks.len())
        }
    }
}

/// Runs every check on a document as read from disk.
pub fn validate_document(doc: &DessinDocument, t: &RamificationTable) -> Report {
    let mut r = Report::default();
    let (black, white) = match doc.permutations() {
        Ok(p) => p,
        Err(e) => {
            r.push("permutations", Outcome::Fail(e.to_string()));
            r.skip_rest();
            return r;
        }
    };
    r.push("permutations", Outcome::Pass);
    let d = match Dessin::new(doc.degree, black, white) {
        Ok(d) => d,
        Err(e) => {
            r.push("transitivity", Outcome::Fail(e.to_string()));
            r.skip_rest();
            return r;
        }
    };
    r.push("transitivity", Outcome::Pass);
    dessin_checks(&mut r, &d, t);
    let marked = match doc.to_marked() {
        Ok(m) => m,
        Err(e) => {
            r.push("marks", Outcome::Fail(e.to_string()));
            r.skip_rest();
            return r;
        }
    };
    r.push("marks", Outcome::Pass);
    mark_checks(&mut r, &marked, t);
    r
}

/// Runs every check on an in-memory marked dessin.
pub fn validate_marked(m: &MarkedDessin, t: &RamificationTable) -> Report {
    let mut r = Report::default();
    r.push("permutations", Outcome::Pass);
    r.push("transitivity", Outcome::Pass);
    dessin_checks(&mut r, m.dessin(), t);
    r.push("marks", Outcome::Pass);
    mark_checks(&mut r, m, t);
    r
}

fn dessin_checks(r: &mut Report, d: &Dessin, t: &RamificationTable) {
    r.check("product identity", d.product_is_identity(), || {
        "sigma_f . sigma_b . sigma_w is not the identity".into()
    });
    let genus = d.genus();
    r.check("genus 0", genus == Ok(0), || match &genus {
        Ok(g) => format!("genus is {g}"),
        Err(e) => e.to_string(),
    });
    let violations = t.violations();
    r.check("table", violations.is_empty(), || {
        violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    });
    r.check("degree", d.degree() as u64 == t.degree, || {
        format!("dessin has degree {}, table needs {}", d.degree(), t.degree)
    });
    match passport_of_table(t) {
        Ok(p) => {
            let got = d.passport();
            r.check("passport", got == p, || {
                format!("got {got}, table needs {p}")
            });
        }
        Err(_) => {
            r.push("passport", Outcome::Skipped);
        }
    }
}

fn mark_checks(r: &mut Report, m: &MarkedDessin, t: &RamificationTable) {
    let mut wrong = Vec::new();
    for label in MarkLabel::ALL {
        let f = m.mark(label);
        match t.fiber_of(label) {
            Some((fiber, index)) if f.kind == fiber.kind() && f.len() as u64 == index => {}
            Some((fiber, index)) => wrong.push(format!(
                "{label} is on a {} cycle of length {}, table needs a {} cycle of length {index}",
                f.kind,
                f.len(),
                fiber.kind()
            )),
            None => wrong.push(format!("{label} is not in the table")),
        }
    }
    r.check("mark indices", wrong.is_empty(), || wrong.join("; "));
    let star = check_condition_star(m, t);
    r.check("condition star", star == Ok(true), || match &star {
        Ok(_) => {
            "an unmarked point pulls back to a singular point, or a mark has the wrong exponent"
                .into()
        }
        Err(e) => e.to_string(),
    });
    let ids = pullback_identities(m, &t.parent);
    r.check("pull-back identities", ids.holds(), || {
        format!(
            "exponent sum {} vs {}, Hurwitz {} vs {}",
            ids.exponent_lhs, ids.exponent_rhs, ids.hurwitz_lhs, ids.hurwitz_rhs
        )
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;
    use crate::tables::{table_for_case, CaseId};

    #[test]
    fn generated_output_passes() {
        for case in CaseId::ALL {
            let m = generate(case, 3);
            let t = table_for_case(case, 3);
            let r = validate_marked(&m, &t);
            assert!(r.passed(), "{case}\n{r}");
            assert_eq!(r.checks.len(), CHECK_NAMES.len());
            let doc = DessinDocument::from_marked(&m);
            assert_eq!(validate_document(&doc, &t), r);
        }
    }

    #[test]
    fn wrong_table_is_reported() {
        let m = generate(CaseId::OctHalf, 0);
        let r = validate_marked(&m, &table_for_case(CaseId::OctThird, 0));
        assert!(!r.passed());
        assert!(matches!(r.outcome("degree"), Some(Outcome::Fail(_))));
        assert!(r.to_string().contains("FAIL  degree"));
    }

    #[test]
    fn swapped_darts_are_reported() {
        let m = generate(CaseId::OctHalf, 1);
        let t = table_for_case(CaseId::OctHalf, 1);
        let mut doc = DessinDocument::from_marked(&m);
        doc.sigma_white[0].swap(0, 1);
        let r = validate_document(&doc, &t);
        assert!(!r.passed());
        assert_eq!(r.outcome("permutations"), Some(&Outcome::Pass));
    }

    #[test]
    fn broken_permutation_skips_the_rest() {
        let m = generate(CaseId::OctHalf, 1);
        let mut doc = DessinDocument::from_marked(&m);
        doc.sigma_white[0][0] = doc.sigma_white[1][0];
        let r = validate_document(&doc, &table_for_case(CaseId::OctHalf, 1));
        assert!(matches!(r.outcome("permutations"), Some(Outcome::Fail(_))));
        assert_eq!(r.outcome("condition star"), Some(&Outcome::Skipped));
        assert_eq!(r.checks.len(), CHECK_NAMES.len());
    }
}
