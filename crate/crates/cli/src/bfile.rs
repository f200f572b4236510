//! OEIS b-files: optional `#` comment lines, then `index value` per line.

use std::path::Path;

use num_bigint::BigInt;

use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub terms: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| CliError::Usage(format!("b-file line {}: {what}", line_no + 1));
            let mut fields = line.split_whitespace();
            let index: i64 = fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| bad("bad index"))?;
            let value: BigInt = fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| bad("bad value"))?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            if terms.last().is_some_and(|&(prev, _)| prev >= index) {
                return Err(bad("indices must increase"));
            }
            terms.push((index, value));
        }
        Ok(BFile { terms })
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        BFile::parse(&text)
    }
}
