use serde_json::{json, Map, Value};

/// One result: a text rendering and a structured rendering.
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub degrees: Vec<usize>,
    pub values: Value,
    pub text: String,
    /// False when a check ran to completion and found a failure.
    pub passed: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            degrees: Vec::new(),
            values: Value::Null,
            text: String::new(),
            passed: true,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn structured(&self) -> String {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "degrees": self.degrees,
            "values": self.values,
        })
        .to_string()
    }
}
