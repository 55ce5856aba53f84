use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::Config;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Violation,
    Inconclusive,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Violation => 1,
            Status::Inconclusive | Status::InputError => 2,
        }
    }

    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Violation
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    pub bounds: Value,
    pub result: Value,
    pub error: Option<String>,
    input: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, config: &Config, status: Status, result: Value) -> Self {
        Self {
            command,
            status,
            bounds: bounds(config),
            result,
            error: None,
            input: config.input.as_ref().map(|p| p.display().to_string()),
        }
    }

    pub fn input_error(command: &'static str, config: &Config, error: Value, message: String) -> Self {
        let mut r = Self::new(command, config, Status::InputError, json!({ "error": error }));
        r.error = Some(message);
        r
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "report_version": REPORT_VERSION,
            "command": self.command,
            "input": self.input,
            "status": self.status,
            "bounds": self.bounds,
            "result": self.result,
        });
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }
}

fn bounds(c: &Config) -> Value {
    json!({
        "T": c.trunc_t,
        "K": c.arity_k,
        "L": c.bar_l,
        "N": c.order_n,
        "window": c.window,
        "nmax": c.nmax,
        "weight": c.weight,
        "budget": c.budget,
        "seed": c.seed,
    })
}

/// Writes through a sibling temporary file and a rename.
pub fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "report".into());
    let tmp = dir.join(format!(".{name}.tmp"));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
