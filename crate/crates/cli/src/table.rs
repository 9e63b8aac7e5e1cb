//! Fixed-width ASCII output.

use std::fmt::Display;
use std::io::{self, Write};

use num_bigint::BigInt;

#[derive(Default)]
pub struct KeyValue {
    rows: Vec<(String, String)>,
}

impl KeyValue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            writeln!(out, "{k:<width$}  {v}")?;
        }
        Ok(())
    }
}

pub struct Columns {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Columns {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|j| {
                self.rows
                    .iter()
                    .map(|r| r[j].len())
                    .chain([self.header[j].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&self.header))?;
        writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "))?;
        for r in &self.rows {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn vector(v: &[BigInt]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn factors(f: &[BigInt]) -> String {
    format!("[{}]", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}
