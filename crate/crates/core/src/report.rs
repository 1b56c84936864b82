//! Itemized check reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// At most this many counterexample loci are kept per item; the failure
/// count is always exact.
pub const MAX_LOCI: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Item {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    /// Number of instances of the equation that were evaluated.
    pub instances: usize,
    pub failures: usize,
    pub loci: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Item {
    pub fn skipped(check: &str, anchor: &str, note: impl Into<String>) -> Item {
        Item {
            check: check.into(),
            anchor: anchor.into(),
            status: Status::Skipped,
            instances: 0,
            failures: 0,
            loci: Vec::new(),
            note: Some(note.into()),
        }
    }

    /// A single yes/no item.
    pub fn single(check: &str, anchor: &str, ok: bool, locus: impl Into<String>) -> Item {
        let mut c = Check::new(check, anchor);
        c.record(ok, || locus.into());
        c.finish()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub subject: String,
    pub items: Vec<Item>,
    pub summary: Summary,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            items: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, item: Item) {
        match item.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.items.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        for item in other.items {
            self.push(item);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn item(&self, check: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.check == check)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|i| i.status == Status::Fail)
            .map(|i| i.check.as_str())
            .collect()
    }

    pub fn first_failure(&self) -> Option<&Item> {
        self.items.iter().find(|i| i.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {}\n", self.subject);
        for item in &self.items {
            let tag = match item.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{tag} {} [{}] instances={}",
                item.check, item.anchor, item.instances
            ));
            if item.failures > 0 {
                out.push_str(&format!(" failures={}", item.failures));
            }
            out.push('\n');
            for locus in &item.loci {
                out.push_str(&format!("    at {locus}\n"));
            }
            if let Some(note) = &item.note {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        out.push_str(&format!(
            "-- {} pass, {} fail, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

/// Accumulates evaluations of one equation over many instances.
#[derive(Debug)]
pub struct Check {
    check: String,
    anchor: String,
    instances: usize,
    failures: usize,
    loci: Vec<String>,
    note: Option<String>,
}

impl Check {
    pub fn new(check: &str, anchor: &str) -> Check {
        Check {
            check: check.into(),
            anchor: anchor.into(),
            instances: 0,
            failures: 0,
            loci: Vec::new(),
            note: None,
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn record(&mut self, ok: bool, locus: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.fail(locus());
        }
    }

    fn fail(&mut self, locus: String) {
        self.failures += 1;
        if self.loci.len() < MAX_LOCI {
            self.loci.push(locus);
        }
    }

    /// Records the outcome of a fallible equation. Budget overruns propagate;
    /// any other error counts as a failed instance.
    pub fn record_result(&mut self, r: Result<bool>, locus: impl FnOnce() -> String) -> Result<()> {
        match r {
            Ok(ok) => {
                self.record(ok, locus);
                Ok(())
            }
            Err(e) if e.is_budget() => Err(e),
            Err(e) => {
                self.instances += 1;
                let l = locus();
                self.fail(format!("{l}: {e}"));
                Ok(())
            }
        }
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn finish(self) -> Item {
        Item {
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            check: self.check,
            anchor: self.anchor,
            instances: self.instances,
            failures: self.failures,
            loci: self.loci,
            note: self.note,
        }
    }
}

/// Turns a construction error into a failed item, keeping budget errors fatal.
pub fn construction_item(check: &str, anchor: &str, r: &Result<()>) -> Result<Item> {
    match r {
        Ok(()) => Ok(Item::single(check, anchor, true, "")),
        Err(e @ Error::BudgetExceeded(_)) => Err(e.clone()),
        Err(e) => Ok(Item::single(check, anchor, false, e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_counts_and_caps_loci() {
        let mut c = Check::new("x", "X");
        for n in 0..40 {
            c.record(n % 2 == 0, || format!("n={n}"));
        }
        let item = c.finish();
        assert_eq!(item.instances, 40);
        assert_eq!(item.failures, 20);
        assert_eq!(item.loci.len(), MAX_LOCI);
        assert_eq!(item.loci[0], "n=1");
        assert_eq!(item.status, Status::Fail);
    }

    #[test]
    fn non_budget_errors_become_failures() {
        let mut c = Check::new("x", "X");
        c.record_result(Err(Error::NotBijective("g".into())), || "here".into())
            .unwrap();
        assert!(c
            .record_result(Err(Error::BudgetExceeded("b".into())), || "there".into())
            .is_err());
        let item = c.finish();
        assert_eq!(item.failures, 1);
        assert!(item.loci[0].starts_with("here: not bijective"));
    }

    #[test]
    fn summary_tracks_statuses() {
        let mut r = Report::new("s");
        r.push(Item::single("a", "A", true, ""));
        r.push(Item::single("b", "B", false, "loc"));
        r.push(Item::skipped("c", "C", "why"));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1 });
        assert!(!r.passed());
        assert_eq!(r.failed_checks(), vec!["b"]);
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
