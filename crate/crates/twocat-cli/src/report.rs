//! Command outcomes, printable as `key=value` text or as JSON.

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub command: String,
    /// Every verdict positive.
    pub ok: bool,
    pub fields: Vec<(String, Value)>,
    pub details: Vec<String>,
    /// Raw text printed instead of the fields in text mode (DOT, documents).
    pub body: Option<String>,
}

pub fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Outcome {
    pub fn new(command: &str) -> Outcome {
        Outcome { command: command.to_string(), ok: true, fields: Vec::new(), details: Vec::new(), body: None }
    }

    pub fn field(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), v.into()));
        self
    }

    /// A yes/no field that also feeds the overall verdict.
    pub fn verdict(&mut self, key: &str, b: bool) -> &mut Self {
        self.ok &= b;
        self.field(key, yn(b))
    }

    pub fn detail(&mut self, s: impl Into<String>) -> &mut Self {
        self.details.push(s.into());
        self
    }

    pub fn details_from(&mut self, text: impl std::fmt::Display) -> &mut Self {
        for l in text.to_string().lines().filter(|l| !l.trim().is_empty()) {
            self.details.push(l.to_string());
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn text(&self) -> String {
        if let Some(b) = &self.body {
            return b.clone();
        }
        let mut out = format!("command={}\nverdict={}\n", self.command, yn(self.ok));
        for (k, v) in &self.fields {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}={v}\n"));
        }
        for d in &self.details {
            out.push_str(&format!("  {d}\n"));
        }
        out
    }

    pub fn structured(&self) -> String {
        let mut fields = Map::new();
        for (k, v) in &self.fields {
            fields.insert(k.clone(), v.clone());
        }
        let mut v = json!({ "command": self.command, "verdict": self.ok, "fields": fields, "details": self.details });
        if let Some(b) = &self.body {
            v["body"] = Value::String(b.clone());
        }
        serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
    }
}
