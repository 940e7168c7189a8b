//! Reports: verdicts with witnesses and replayable queries, rendered as text
//! or JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Budget,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Budget => 3,
        }
    }
}

/// How much a verdict covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    /// Every instance in the finite search space was checked.
    Exhaustive,
    /// Decided by a closed form on symbolic data.
    Exact,
    /// A seeded sample of instances.
    Sampled,
    /// Finite-radius evidence about an infinite object.
    Evidence,
}

/// A witness subset with its role in the verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Named {
    pub role: String,
    pub set: Value,
    #[serde(skip)]
    pub shown: String,
}

/// One orthogonality fact the verdict rests on. `relation` is `model`,
/// `target:<map>` or `quotient:<map>`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub relation: String,
    pub a: Value,
    pub c: Value,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub grade: Grade,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Named>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub replay: Vec<Query>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, holds: bool, grade: Grade) -> Verdict {
        Verdict {
            name: name.into(),
            holds,
            grade,
            witness: Vec::new(),
            replay: Vec::new(),
        }
    }

    pub fn witness(
        mut self,
        role: impl Into<String>,
        set: Value,
        shown: impl Into<String>,
    ) -> Verdict {
        self.witness.push(Named {
            role: role.into(),
            set,
            shown: shown.into(),
        });
        self
    }

    pub fn fact(
        mut self,
        relation: impl Into<String>,
        a: Value,
        c: Value,
        orthogonal: bool,
    ) -> Verdict {
        self.replay.push(Query {
            relation: relation.into(),
            a,
            c,
            orthogonal,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetNote {
    pub dimension: String,
    pub requested: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub kind: String,
    pub status: Status,
    pub summary: Vec<String>,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetNote>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, kind: &str) -> Report {
        Report {
            command: command.to_string(),
            kind: kind.to_string(),
            status: Status::Pass,
            summary: Vec::new(),
            verdicts: Vec::new(),
            budget: None,
            error: None,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.summary.push(text.into());
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    /// Sets the status from the verdicts.
    pub fn finish(mut self) -> Report {
        self.status = if self.verdicts.iter().all(|v| v.holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    /// A report for a command that stopped with an error.
    pub fn failed(command: &str, kind: &str, err: &CliError) -> Report {
        let mut r = Report::new(command, kind);
        r.error = Some(err.to_string());
        r.status = Status::Error;
        if let CliError::Core(ortho_core::Error::BudgetExceeded {
            dimension,
            requested,
            limit,
        }) = err
        {
            r.status = Status::Budget;
            r.budget = Some(BudgetNote {
                dimension: dimension.to_string(),
                requested: *requested,
                limit: *limit,
            });
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.summary {
            let _ = writeln!(out, "{line}");
        }
        for v in &self.verdicts {
            let mark = if v.holds { "holds" } else { "FAILS" };
            let grade = serde_json::to_value(v.grade).expect("grades serialize");
            let _ = writeln!(
                out,
                "{}: {mark} ({})",
                v.name,
                grade.as_str().unwrap_or_default()
            );
            for w in &v.witness {
                let shown = if w.shown.is_empty() {
                    w.set.to_string()
                } else {
                    w.shown.clone()
                };
                let _ = writeln!(out, "  {} = {shown}", w.role);
            }
        }
        if let Some(b) = &self.budget {
            let _ = writeln!(
                out,
                "budget exceeded: {} needs {}, limit is {}",
                b.dimension, b.requested, b.limit
            );
        } else if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let status = serde_json::to_value(self.status).expect("statuses serialize");
        let _ = writeln!(out, "status: {}", status.as_str().unwrap_or_default());
        out
    }
}
