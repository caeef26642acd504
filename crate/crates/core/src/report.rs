//! Named pass/fail checks collected by the verification routines.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub error: Option<Error>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: detail.into(), error: None });
    }

    pub fn fail(&mut self, name: &str, err: Error) {
        self.checks.push(Check { name: name.into(), passed: false, detail: format!("{}", err), error: Some(err) });
    }

    pub fn record(&mut self, name: &str, ok: bool, detail: impl Into<String>, err: impl FnOnce() -> Error) {
        if ok {
            self.pass(name, detail);
        } else {
            self.fail(name, err());
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// First failure, if any.
    pub fn first_error(&self) -> Option<&Error> {
        self.checks.iter().find(|c| !c.passed).and_then(|c| c.error.as_ref())
    }

    /// One `CHECK <name>: PASS|FAIL <detail>` line per check.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    format!("CHECK {}: {}", c.name, status)
                } else {
                    format!("CHECK {}: {} {}", c.name, status, c.detail)
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        let mut r = Report::new();
        r.pass("rank", "3");
        r.fail("closure", Error::GroupNotClosed("g*g".into()));
        assert!(!r.passed());
        assert_eq!(r.lines(), ["CHECK rank: PASS 3", "CHECK closure: FAIL group is not closed: g*g"]);
        assert_eq!(r.first_error(), Some(&Error::GroupNotClosed("g*g".into())));
    }
}
