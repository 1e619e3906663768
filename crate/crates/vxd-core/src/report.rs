//! Check/report plumbing shared by the library suites and the CLI.
//!
//! A failed identity is data, not an error: the report line carries the
//! normalized nonzero difference as its witness so diffs are meaningful.

use std::fmt;

/// One verification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    /// Canonical string of the nonzero difference, present on failures.
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), passed: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { id: id.into(), passed: false, witness: Some(witness.into()) }
    }

    /// PASS when the displayed difference is zero, FAIL carrying it otherwise.
    pub fn from_difference<D: ZeroWitness>(id: impl Into<String>, diff: &D) -> Self {
        if diff.is_zero_diff() {
            Check::pass(id)
        } else {
            Check::fail(id, diff.witness_string())
        }
    }
}

/// Anything that can serve as a symbolic difference in a check.
pub trait ZeroWitness {
    fn is_zero_diff(&self) -> bool;
    fn witness_string(&self) -> String;
}

impl ZeroWitness for crate::ratfunc::RatFunc {
    fn is_zero_diff(&self) -> bool {
        self.is_zero()
    }
    fn witness_string(&self) -> String {
        self.to_string()
    }
}

impl ZeroWitness for crate::forms::PForm {
    fn is_zero_diff(&self) -> bool {
        self.is_zero()
    }
    fn witness_string(&self) -> String {
        self.to_string()
    }
}

/// Deterministically ordered list of checks (lexicographic by id).
#[derive(Debug, Default, Clone)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter()
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn fail_count(&self) -> usize {
        self.checks.len() - self.pass_count()
    }

    pub fn all_passed(&self) -> bool {
        self.fail_count() == 0
    }

    /// Sort by check id; call before rendering.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "CHECK {} PASS", c.id)?;
            } else {
                writeln!(f, "CHECK {} FAIL {}", c.id, c.witness.as_deref().unwrap_or(""))?;
            }
        }
        write!(f, "SUMMARY pass={} fail={}", self.pass_count(), self.fail_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_lines_and_summary() {
        let mut r = Report::new();
        r.push(Check::fail("b/check", "x + 1"));
        r.push(Check::pass("a/check"));
        r.finalize();
        let text = r.to_string();
        assert_eq!(text, "CHECK a/check PASS\nCHECK b/check FAIL x + 1\nSUMMARY pass=1 fail=1");
        assert!(!r.all_passed());
    }
}
