//! Suite reports: per-graph records, tallies, violations, and their JSON and
//! CSV renderings.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Result;

/// One graph, or for the substar suite one (host, star count) group.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "L")]
    pub length: Option<usize>,
    pub lpt: Option<usize>,
    pub omega: Option<usize>,
    pub tw: Option<usize>,
    pub gallai: Option<usize>,
    pub verdicts: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|&ok| ok)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A stated bound failed.
    Theorem,
    /// A supporting lemma or a structural self-check failed.
    Internal,
    /// The per-graph search budget ran out.
    Budget,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub check: String,
    /// Catalog index of the offending record.
    pub index: usize,
    pub graph6: String,
    /// Model or representation text when the graph alone does not determine
    /// the failing input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub records: usize,
    pub checks: usize,
    pub failed_checks: usize,
    pub theorem_violations: usize,
    pub internal_errors: usize,
    pub budget_errors: usize,
}

impl Counters {
    pub fn tally(records: &[Record], violations: &[Violation]) -> Self {
        let of = |k| violations.iter().filter(|v| v.kind == k).count();
        Counters {
            records: records.len(),
            checks: records.iter().map(|r| r.verdicts.len()).sum(),
            failed_checks: records.iter().map(|r| r.verdicts.values().filter(|&&ok| !ok).count()).sum(),
            theorem_violations: of(ViolationKind::Theorem),
            internal_errors: of(ViolationKind::Internal),
            budget_errors: of(ViolationKind::Budget),
        }
    }

    fn add(self, o: Counters) -> Counters {
        Counters {
            records: self.records + o.records,
            checks: self.checks + o.checks,
            failed_checks: self.failed_checks + o.failed_checks,
            theorem_violations: self.theorem_violations + o.theorem_violations,
            internal_errors: self.internal_errors + o.internal_errors,
            budget_errors: self.budget_errors + o.budget_errors,
        }
    }
}

/// The outcome of one suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub suite: String,
    /// Size cap actually used, after clamping to the suite's limits.
    pub n_max: usize,
    pub counters: Counters,
    pub notes: BTreeMap<String, Value>,
    pub violations: Vec<Violation>,
    pub records: Vec<Record>,
}

impl Section {
    pub fn new(
        suite: &str,
        n_max: usize,
        records: Vec<Record>,
        violations: Vec<Violation>,
        notes: BTreeMap<String, Value>,
    ) -> Self {
        Section {
            suite: suite.into(),
            n_max,
            counters: Counters::tally(&records, &violations),
            notes,
            violations,
            records,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n_max: usize,
    pub dedup: bool,
    pub seed: u64,
    pub budget: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    pub counters: Counters,
    pub sections: Vec<Section>,
    /// Kept out of the JSON so that reports of identical runs are identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn total(sections: &[Section]) -> Counters {
        sections.iter().fold(Counters::default(), |a, s| a.add(s.counters))
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.sections.iter().flat_map(|s| s.violations.iter())
    }

    pub fn section(&self, suite: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.suite == suite)
    }

    /// 0 clean, 1 theorem violation, 2 internal inconsistency, 3 budget
    /// exhaustion. The most severe outcome wins: 2 over 1 over 3.
    pub fn exit_code(&self) -> i32 {
        let c = self.counters;
        if c.internal_errors > 0 {
            2
        } else if c.theorem_violations > 0 {
            1
        } else if c.budget_errors > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// One row per record.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["graph6", "n", "m", "L", "lpt", "omega", "tw", "verdicts", "gallai", "suite", "index"])?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for s in &self.sections {
            for r in &s.records {
                let verdicts: Vec<String> =
                    r.verdicts.iter().map(|(k, &ok)| format!("{k}:{}", if ok { "pass" } else { "fail" })).collect();
                w.write_record([
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    opt(r.length),
                    opt(r.lpt),
                    opt(r.omega),
                    opt(r.tw),
                    verdicts.join(";"),
                    opt(r.gallai),
                    s.suite.clone(),
                    r.index.to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}
