use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

/// Version of the structured output.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    #[value(alias = "structured")]
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Positive,
    Refuted,
    Unknown,
    InputError,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Self::Positive => 0,
            Self::Refuted => 1,
            Self::Unknown => 2,
            Self::InputError => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Positive => "positive",
            Self::Refuted => "refuted",
            Self::Unknown => "unknown",
            Self::InputError => "input-error",
        }
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    lines: Vec<String>,
    data: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self { command, status: Status::Positive, lines: Vec::new(), data: Map::new() }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.to_owned(), serde_json::to_value(value).expect("report fields serialize"));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                out.push_str(&format!("status: {} (exit {})\n", self.status.label(), self.status.code()));
                out
            }
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("schema".into(), SCHEMA.into());
                obj.insert("command".into(), self.command.into());
                obj.insert("status".into(), self.status.label().into());
                obj.insert("exit".into(), self.status.code().into());
                obj.extend(self.data.clone());
                let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
                s.push('\n');
                s
            }
        }
    }
}
