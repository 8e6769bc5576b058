//! Minimal runner for the acceptance suite.
//!
//! Each criterion is a closure returning `Ok(detail)` or `Err(detail)`. The
//! runner times it, converts panics into failures, prints one line per
//! criterion and a final tally.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Criterion number.
    pub id: u32,
    /// Short title.
    pub title: &'static str,
    /// Whether every check (including the runtime limit) held.
    pub passed: bool,
    /// Measured values and the reason for failure, if any.
    pub detail: String,
    /// Wall time.
    pub elapsed: Duration,
}

impl Outcome {
    /// The printed line.
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}: {}  {} ({:.2} s) — {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Runs `f`, enforcing `limit` if given, and prints the result line.
pub fn run_criterion(
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (false, format!("panicked: {msg}"))
        }
    };
    if let Some(l) = limit {
        if elapsed > l {
            passed = false;
            detail = format!("{detail}; runtime {:.2} s exceeds {:.0} s", elapsed.as_secs_f64(), l.as_secs_f64());
        }
    }
    let o = Outcome { id, title, passed, detail, elapsed };
    println!("{}", o.line());
    o
}

/// `Ok(())` if `cond`, else `Err(msg)`.
pub fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
