use std::fmt::Display;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

/// Output of a command, kept in both renderings.
#[derive(Debug, Default)]
pub struct Report {
    text: String,
    kv: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// `key value` in text, `key=value` in kv.
    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        let value = value.to_string();
        self.text.push_str(&format!("{key} {value}\n"));
        self.kv.push((key.to_string(), value));
        self
    }

    /// Multi-line text printed verbatim; in kv, one `key=line` per line.
    pub fn block(&mut self, key: &str, body: impl Display) -> &mut Self {
        let body = body.to_string();
        for line in body.lines() {
            self.kv.push((key.to_string(), line.to_string()));
        }
        self.text.push_str(&body);
        if !body.is_empty() && !body.ends_with('\n') {
            self.text.push('\n');
        }
        self
    }

    /// A line that only appears in text output.
    pub fn text(&mut self, line: impl Display) -> &mut Self {
        self.text.push_str(&format!("{line}\n"));
        self
    }

    /// A pair that only appears in kv output.
    pub fn kv(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.kv.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Kv => self.kv.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        }
    }
}
