//! Plain tables rendered as aligned text, CSV or JSON.

use std::io::Write;

use crate::{CliResult, Format};

/// A cell: JSON strings are quoted, numbers, booleans and `null` are not.
#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    Raw(String),
    Missing,
}

impl Cell {
    fn text(&self) -> &str {
        match self {
            Cell::Text(s) | Cell::Raw(s) => s,
            Cell::Missing => "-",
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Text(s) => serde_json::Value::String(s.clone()).to_string(),
            Cell::Raw(s) => s.clone(),
            Cell::Missing => "null".into(),
        }
    }
}

pub fn write(
    out: &mut dyn Write,
    format: Format,
    header: &[&str],
    rows: &[Vec<Cell>],
) -> CliResult<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for row in rows {
                let line: Vec<&str> = row.iter().map(Cell::text).collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        Format::Json => {
            writeln!(out, "[")?;
            for (i, row) in rows.iter().enumerate() {
                let fields: Vec<String> = header
                    .iter()
                    .zip(row)
                    .map(|(h, c)| format!("\"{h}\":{}", c.json()))
                    .collect();
                let comma = if i + 1 < rows.len() { "," } else { "" };
                writeln!(out, "  {{{}}}{comma}", fields.join(","))?;
            }
            writeln!(out, "]")?;
        }
        _ => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in rows {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.text().len());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for row in rows {
                writeln!(out, "{}", line(row.iter().map(Cell::text).collect()))?;
            }
        }
    }
    Ok(())
}
