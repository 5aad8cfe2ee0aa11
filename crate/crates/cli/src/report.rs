use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Present for every failure or error: a polynomial, a color `n` or a
    /// message.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Milliseconds; only filled in when timings were asked for, so that
    /// default output is byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    pub fn pass(name: &str) -> Self {
        Self { name: name.into(), status: Status::Pass, witness: None, elapsed_ms: None }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Fail, witness: Some(witness.into()), elapsed_ms: None }
    }

    pub fn error(name: &str, witness: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Error, witness: Some(witness.into()), elapsed_ms: None }
    }

    pub fn from_bool(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub command: Vec<String>,
    /// Computed values, in the order they were produced.
    pub output: Vec<Item>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            output: Vec::new(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn item(&mut self, name: &str, value: impl ToString) {
        self.output.push(Item { name: name.into(), value: value.to_string() });
    }

    pub fn push(&mut self, check: CheckResult) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Error => self.summary.error += 1,
        }
        self.checks.push(check);
    }

    /// Run `f` as a named check, turning errors into `error` results.
    pub fn check<F>(&mut self, name: &str, timings: bool, f: F)
    where
        F: FnOnce() -> qtorus_core::Result<CheckResult>,
    {
        let start = std::time::Instant::now();
        let mut r = match f() {
            Ok(r) => r,
            Err(e) => CheckResult::error(name, e.to_string()),
        };
        if timings {
            r.elapsed_ms = Some(millis(start.elapsed()));
        }
        self.push(r);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "qtorus {} {}", self.version, self.command.join(" "));
        for it in &self.output {
            let _ = writeln!(s, "{} = {}", it.name, it.value);
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            let _ = write!(s, "{tag} {}", c.name);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(s, " [{ms} ms]");
            }
            if let Some(w) = &c.witness {
                let _ = write!(s, "  witness: {w}");
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "summary: {} passed, {} failed, {} errors",
            self.summary.pass, self.summary.fail, self.summary.error
        );
        s
    }
}

fn millis(d: Duration) -> u64 {
    u64::try_from(d.as_millis()).unwrap_or(u64::MAX)
}
