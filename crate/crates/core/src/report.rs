use serde::Serialize;
use std::fmt;

/// One failed law instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.law, self.witness.join(", "))
    }
}

/// Outcome of a law battery. `passed` holds exactly when `violations` is
/// empty; both are kept so the JSON output is self-describing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport {
            passed: true,
            checked: 0,
            violations: Vec::new(),
        }
    }
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one evaluated instance; a failing instance adds a violation.
    pub fn record(&mut self, ok: bool, law: &str, witness: impl FnOnce() -> Vec<String>) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                law: law.to_string(),
                witness: witness(),
            });
            self.passed = false;
        }
    }

    pub fn push(&mut self, law: &str, witness: Vec<String>) {
        self.violations.push(Violation {
            law: law.to_string(),
            witness,
        });
        self.passed = false;
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.passed &= other.passed;
        self.violations.extend(other.violations);
    }

    /// Violations whose law name is not in `skip`.
    pub fn without_laws(&self, skip: &[&str]) -> CheckReport {
        let violations: Vec<_> = self
            .violations
            .iter()
            .filter(|v| !skip.contains(&v.law.as_str()))
            .cloned()
            .collect();
        CheckReport {
            passed: violations.is_empty(),
            checked: self.checked,
            violations,
        }
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "passed ({} instances)", self.checked)
        } else {
            write!(
                f,
                "FAILED: {} of {} instances",
                self.violations.len(),
                self.checked
            )?;
            for v in self.violations.iter().take(8) {
                write!(f, "\n  {v}")?;
            }
            if self.violations.len() > 8 {
                write!(f, "\n  ...")?;
            }
            Ok(())
        }
    }
}
