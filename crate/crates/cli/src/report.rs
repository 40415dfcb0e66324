//! Machine-readable verification reports.
//!
//! Reports carry no wall-clock data unless timings are requested, so two
//! runs on the same inputs serialize to the same bytes. Maps are
//! `BTreeMap`s for the same reason.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use tokenpower_core::{Error as CoreError, Graph};

use crate::error::Result;
use crate::io::write_edge_list;

pub const SCHEMA: &str = "tokenpower.report/v1";

pub type Values = BTreeMap<String, Value>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    pub suite: String,
    pub inputs: Inputs,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixtures: Option<String>,
    pub params: Values,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInput {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    /// SHA-256 of the graph's edge-list serialization.
    pub sha256: String,
}

impl GraphInput {
    pub fn new(name: &str, g: &Graph) -> Self {
        GraphInput {
            name: name.to_owned(),
            vertices: g.n_vertices(),
            edges: g.n_edges(),
            sha256: graph_hash(g),
        }
    }
}

pub fn graph_hash(g: &Graph) -> String {
    format!("{:x}", Sha256::digest(write_edge_list(g).as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub values: Values,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
    pub checks_ms: Vec<f64>,
}

/// Result of one check before it is named and recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub values: Values,
}

impl Outcome {
    pub fn new(passed: bool) -> Self {
        Outcome {
            passed,
            values: Values::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_owned(), value.into());
        self
    }
}

/// How a recorder treats a check that exceeds a resource cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapPolicy {
    /// Skip the check and leave a note; used when sweeping fixture sets.
    Skip,
    /// Abort the suite with the cap error; used for a single user graph.
    Fail,
}

/// Accumulates checks into a [`Report`].
pub struct Recorder {
    report: Report,
    started: Instant,
    check_ms: Option<Vec<f64>>,
    pub policy: CapPolicy,
}

impl Recorder {
    pub fn new(suite: &str, command: Vec<String>, inputs: Inputs, timed: bool, policy: CapPolicy) -> Self {
        Recorder {
            report: Report {
                schema: SCHEMA.to_owned(),
                command,
                suite: suite.to_owned(),
                inputs,
                checks: Vec::new(),
                notes: Vec::new(),
                passed: true,
                timings: None,
            },
            started: Instant::now(),
            check_ms: timed.then(Vec::new),
            policy,
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.report.notes.push(text.into());
    }

    /// Runs `f` and records its outcome under `name`. A failed internal
    /// consistency check is recorded as a failing check; cap errors follow
    /// the recorder's policy; other errors abort.
    pub fn check<F>(&mut self, name: impl Into<String>, f: F) -> Result<()>
    where
        F: FnOnce() -> std::result::Result<Outcome, CoreError>,
    {
        let name = name.into();
        let t0 = Instant::now();
        let outcome = match f() {
            Ok(o) => o,
            Err(CoreError::CheckFailed(msg)) => Outcome::new(false).with("error", msg),
            Err(e @ CoreError::ResourceCap { .. }) if self.policy == CapPolicy::Skip => {
                self.note(format!("skipped {name}: {e}"));
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        };
        if let Some(ms) = &mut self.check_ms {
            ms.push(t0.elapsed().as_secs_f64() * 1e3);
        }
        self.report.passed &= outcome.passed;
        self.report.checks.push(Check {
            name,
            passed: outcome.passed,
            values: outcome.values,
        });
        Ok(())
    }

    pub fn finish(mut self) -> Report {
        if self.report.checks.is_empty() {
            self.report.passed = false;
            self.report.notes.push("no checks ran".into());
        }
        if let Some(checks_ms) = self.check_ms {
            self.report.timings = Some(Timings {
                total_ms: self.started.elapsed().as_secs_f64() * 1e3,
                checks_ms,
            });
        }
        self.report
    }
}

/// Verbosity of the plain-text rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Detail {
    Summary,
    Checks,
    Everything,
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn n_passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn to_text(&self, detail: Detail) -> String {
        let mut s = String::new();
        if detail != Detail::Summary {
            for c in &self.checks {
                let _ = write!(s, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                for (k, v) in &c.values {
                    let _ = write!(s, "  {k}={}", render_value(v));
                }
                s.push('\n');
            }
        }
        if detail == Detail::Everything {
            if let Some(g) = &self.inputs.graph {
                let _ = writeln!(s, "graph {} ({} vertices, {} edges, sha256 {})", g.name, g.vertices, g.edges, g.sha256);
            }
            for n in &self.notes {
                let _ = writeln!(s, "note: {n}");
            }
            if let Some(t) = &self.timings {
                let _ = writeln!(s, "total {:.1} ms", t.total_ms);
            }
        }
        let _ = writeln!(
            s,
            "{} {}: {}/{} checks passed",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.n_passed(),
            self.checks.len()
        );
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(timed: bool) -> Report {
        let mut r = Recorder::new("demo", vec!["verify".into()], Inputs::default(), timed, CapPolicy::Skip);
        r.check("one", || Ok(Outcome::new(true).with("rank", 3))).unwrap();
        r.check("two", || Err(CoreError::CheckFailed("bad".into()))).unwrap();
        r.check("big", || Err(CoreError::ResourceCap { what: "vertices", size: 10, cap: 1 }))
            .unwrap();
        r.finish()
    }

    #[test]
    fn recorder_policies() {
        let rep = sample(false);
        assert!(!rep.passed);
        assert_eq!(rep.checks.len(), 2);
        assert_eq!(rep.notes.len(), 1);
        assert!(rep.timings.is_none());
        assert_eq!(sample(false).to_json(), rep.to_json());
        assert!(sample(true).timings.is_some());

        let mut strict = Recorder::new("demo", vec![], Inputs::default(), false, CapPolicy::Fail);
        assert!(strict
            .check("big", || Err(CoreError::ResourceCap { what: "vertices", size: 10, cap: 1 }))
            .is_err());
    }

    #[test]
    fn round_trip_and_text() {
        let rep = sample(false);
        let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        let text = rep.to_text(Detail::Checks);
        assert!(text.starts_with("PASS one  rank=3\nFAIL two  error=bad\n"));
        assert!(text.ends_with("FAIL demo: 1/2 checks passed\n"));
    }

    #[test]
    fn empty_report_fails() {
        let r = Recorder::new("demo", vec![], Inputs::default(), false, CapPolicy::Skip);
        assert!(!r.finish().passed);
    }

    #[test]
    fn hash_is_stable() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(graph_hash(&g), graph_hash(&g.clone()));
        assert_eq!(graph_hash(&g).len(), 64);
    }
}
