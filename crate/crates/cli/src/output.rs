use std::fmt::Write;
use std::path::Path;

use serde_json::Value;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_NOT_STABILIZED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_PARSE: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    /// Maps a library error raised while handling `file`.
    pub fn from_library(file: &Path, e: algebroid::Error) -> Self {
        let code = match e {
            algebroid::Error::Parse(_) => EXIT_PARSE,
            _ => EXIT_VALIDATION,
        };
        Self {
            code,
            message: format!("{}: {e}", file.display()),
        }
    }
}

pub fn read(file: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(file).map_err(|e| CliError {
        code: EXIT_NO_INPUT,
        message: format!("{}: {e}", file.display()),
    })
}

/// Human-readable lines followed by one JSON document.
#[derive(Debug)]
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub code: u8,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Self {
            lines: Vec::new(),
            json,
            code: EXIT_OK,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            writeln!(out, "{l}").unwrap();
        }
        out.push('\n');
        out.push_str(&serde_json::to_string_pretty(&self.json).expect("serializable"));
        out.push('\n');
        out
    }
}

pub fn tuple(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Right-aligned columns.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = vec![fmt_row(header.to_vec())];
    out.extend(
        rows.iter()
            .map(|r| fmt_row(r.iter().map(String::as_str).collect())),
    );
    out
}
