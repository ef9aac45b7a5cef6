//! Pass/fail reports shared by every verification routine.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Largest absolute deviation seen; exact checks report 0 or 1.
    pub residual: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    /// Records an exact yes/no check.
    pub fn exact(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            residual: if ok { 0.0 } else { 1.0 },
            passed: ok,
            detail: detail.into(),
        });
        ok
    }

    /// Records a numeric check passing when `residual < tol` (NaN fails).
    pub fn numeric(&mut self, name: impl Into<String>, residual: f64, tol: f64) -> bool {
        let ok = residual < tol;
        self.checks.push(Check {
            name: name.into(),
            residual,
            passed: ok,
            detail: format!("tol {tol:e}"),
        });
        ok
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.title, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  [{mark}] {} (residual {:.3e})", c.name, c.residual)?;
            if !c.detail.is_empty() {
                write!(f, " {}", c.detail)?;
            }
            writeln!(f)?;
        }
        let n = self.checks.len();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "  {ok}/{n} passed")
    }
}
