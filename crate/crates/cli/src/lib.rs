//! Command-line companion to `constrec-core`: argument parsing, a
//! deterministic parallel search driver, checkpoint files, and report
//! emitters.

pub mod checkpoint;
pub mod cli;
pub mod parallel;
pub mod report;
pub mod run;

use anyhow::Context as _;
use std::fmt;
use std::io::Write as _;
use std::path::Path;

/// A request that cannot be satisfied as written (missing or contradictory
/// flags). Mapped to exit code 64.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

/// Writes rendered output to the given file, or to standard output.
pub fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .context("writing standard output")
        }
    }
}
