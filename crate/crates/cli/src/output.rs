use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::OutputMode;

/// Every emitted record carries its `kind` first, then the body's fields in
/// declaration order.
#[derive(Serialize)]
struct Tagged<'a, T> {
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub struct Emitter<'w> {
    mode: OutputMode,
    out: &'w mut dyn Write,
}

impl<'w> Emitter<'w> {
    pub fn new(mode: OutputMode, out: &'w mut dyn Write) -> Self {
        Emitter { mode, out }
    }

    pub fn mode(&self) -> OutputMode {
        self.mode
    }

    /// JSON mode writes one object per line; text mode writes
    /// `kind key=value ...` with nested values in compact JSON.
    pub fn record<T: Serialize>(&mut self, kind: &str, body: &T) -> io::Result<()> {
        let tagged = Tagged { kind, body };
        match self.mode {
            OutputMode::Json => {
                serde_json::to_writer(&mut *self.out, &tagged)?;
                writeln!(self.out)
            }
            OutputMode::Text => {
                let value = serde_json::to_value(&tagged).map_err(io::Error::other)?;
                writeln!(self.out, "{}", text_line(&value))
            }
        }
    }

    /// A bare line, for text-mode graph6 output.
    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.out, "{s}")
    }
}

fn text_line(v: &Value) -> String {
    let Value::Object(map) = v else {
        return scalar(v);
    };
    let mut parts = Vec::with_capacity(map.len());
    for (k, v) in map {
        if k == "kind" {
            parts.push(scalar(v));
        } else {
            parts.push(format!("{k}={}", scalar(v)));
        }
    }
    parts.join(" ")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
