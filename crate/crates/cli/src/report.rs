//! Uniform report envelope: command echo, input digests, verdict, body.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Negative,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Negative
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Negative => 1,
        }
    }
}

pub struct Input {
    pub path: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        Input {
            path: path.to_string(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Input>,
    pub verdict: String,
    pub outcome: Outcome,
    /// Text body, one record per line.
    pub lines: Vec<String>,
    /// Machine-readable body.
    pub data: Value,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Vec<Input>) -> Self {
        Report {
            command,
            inputs,
            verdict: String::new(),
            outcome: Outcome::Pass,
            lines: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn verdict(&mut self, outcome: Outcome, verdict: impl Into<String>) {
        self.outcome = outcome;
        self.verdict = verdict.into();
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("command: {}\n", self.command.join(" "));
        for i in &self.inputs {
            s.push_str(&format!("input: {} sha256:{}\n", i.path, i.sha256));
        }
        s.push_str(&format!("verdict: {}\n", self.verdict));
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }

    pub fn render_json(&self) -> String {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|i| json!({ "path": i.path, "sha256": i.sha256 }))
            .collect();
        let v = json!({
            "command": self.command,
            "inputs": inputs,
            "verdict": self.verdict,
            "passed": self.outcome == Outcome::Pass,
            "data": self.data,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
        s.push('\n');
        s
    }
}
