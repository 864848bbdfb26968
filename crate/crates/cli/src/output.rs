//! Deterministic data files: created directories, `%.6g`-rounded JSON and
//! plain writes with I/O errors mapped to exit code 2.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use tcva_core::format::round_sig;

use crate::error::{CliError, Result};

pub struct OutDir {
    root: PathBuf,
    written: Vec<String>,
}

impl OutDir {
    pub fn create(root: &Path) -> Result<Self> {
        std::fs::create_dir_all(root).map_err(|e| CliError::io(root, e))?;
        Ok(OutDir { root: root.to_path_buf(), written: Vec::new() })
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<PathBuf> {
        let path = self.root.join(name);
        std::fs::write(&path, bytes).map_err(|e| CliError::io(&path, e))?;
        log::info!("wrote {}", path.display());
        self.written.push(name.to_string());
        Ok(path)
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<PathBuf> {
        let text = to_json(value)?;
        self.write(name, text.as_bytes())
    }

    /// File names written so far, in order.
    pub fn written(&self) -> &[String] {
        &self.written
    }
}

/// Pretty JSON with every float rounded to six significant digits.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Domain(format!("serializing report: {e}")))?;
    let mut s = serde_json::to_string_pretty(&round_floats(v)).expect("JSON value serializes");
    s.push('\n');
    Ok(s)
}

fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64"), 6);
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// Display path for reports: relative to the output directory's parent
/// would still leak the caller's layout, so only the file name is kept.
pub fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}
