//! The machine-readable report wrapper shared by every subcommand.

use serde_json::{json, Value};

pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
}

pub enum Status {
    Ok,
    Error(String),
}

impl Report {
    pub fn ok(command: &str, inputs: Value, results: Value) -> Self {
        Report { command: command.into(), inputs, results, status: Status::Ok }
    }

    pub fn error(command: &str, inputs: Value, message: String) -> Self {
        Report { command: command.into(), inputs, results: Value::Null, status: Status::Error(message) }
    }

    pub fn to_json(&self) -> Value {
        match &self.status {
            Status::Ok => json!({
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "status": "ok",
            }),
            Status::Error(msg) => json!({
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "status": "error",
                "message": msg,
            }),
        }
    }
}
