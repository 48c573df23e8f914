use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    JsonLines,
}

/// Collects a command's output so that text and json-lines stay in step.
pub struct Report {
    format: Format,
    buf: String,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report { format, buf: String::new() }
    }

    /// One record: `text` in text mode, `json` as a single line otherwise.
    pub fn record(&mut self, text: impl AsRef<str>, json: Value) {
        match self.format {
            Format::Text => {
                self.buf.push_str(text.as_ref());
                self.buf.push('\n');
            }
            Format::JsonLines => {
                let _ = writeln!(self.buf, "{json}");
            }
        }
    }

    /// Text-only line, for table headers and decoration.
    pub fn text(&mut self, text: impl AsRef<str>) {
        if self.format == Format::Text {
            self.buf.push_str(text.as_ref());
            self.buf.push('\n');
        }
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}

/// Right-aligned columns, first column left-aligned.
pub fn table(rows: &[Vec<String>]) -> Vec<String> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0)).collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, cell)| if c == 0 { format!("{cell:<w$}", w = widths[0]) } else { format!("{cell:>w$}", w = widths[c]) })
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect()
}
