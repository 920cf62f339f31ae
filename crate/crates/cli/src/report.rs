use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::error::CliError;

/// A file a command writes besides its report.
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub path: PathBuf,
    pub contents: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: &'static str,
    /// Flags as given, with defaults filled in.
    pub args: Value,
    pub seed: Option<u64>,
    pub results: Value,
    pub artifacts: Vec<Artifact>,
}

impl Report {
    pub fn new(command: &'static str, args: Value, seed: Option<u64>, results: Value) -> Report {
        Report {
            command,
            args,
            seed,
            results,
            artifacts: Vec::new(),
        }
    }

    pub fn with_artifact(mut self, path: Option<&Path>, contents: impl FnOnce() -> String) -> Report {
        if let Some(path) = path {
            self.artifacts.push(Artifact {
                path: path.to_path_buf(),
                contents: contents(),
            });
        }
        self
    }

    /// Pretty JSON with sorted keys; timings only when measured.
    pub fn to_json(&self, timings_ms: Option<f64>) -> String {
        let mut doc = json!({
            "command": self.command,
            "args": self.args,
            "seed": self.seed,
            "results": self.results,
        });
        if let Some(ms) = timings_ms {
            doc["timings"] = json!({ "total_ms": ms });
        }
        let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        text.push('\n');
        text
    }
}

/// Replaces `path` in one rename so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| CliError::Other(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn timings_are_opt_in() {
        let r = Report::new(
            "verify",
            json!({"instance": "a.json"}),
            None,
            json!({"valid": true}),
        );
        assert!(!r.to_json(None).contains("timings"));
        assert!(r.to_json(Some(1.5)).contains("total_ms"));
        assert_eq!(r.to_json(None), r.to_json(None));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.json");
        write_atomic(&p, "one").unwrap();
        write_atomic(&p, "two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
