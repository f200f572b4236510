use std::io::Write;
use std::path::Path;

use coloured_dyck::enumeration::{
    count_catalan_coloured, count_little_schroeder, count_schroeder_coloured, master_coefficients,
};
use coloured_dyck::ColourSystem;
use num_bigint::{BigInt, BigUint};

use crate::bfile::BFile;
use crate::{CliResult, Context, Outcome};

pub const DEFAULT_N_MAX: usize = 10;

/// Terms `0..=n_max` of the sequence named by `tag`.
pub fn terms(tag: &str, n_max: usize) -> CliResult<Vec<BigUint>> {
    let formula: Option<fn(usize) -> BigUint> = match tag {
        "catalan-coloured" => Some(count_catalan_coloured),
        "little-schroeder" => Some(count_little_schroeder),
        "schroeder-coloured" => Some(count_schroeder_coloured),
        _ => None,
    };
    Ok(match formula {
        Some(f) => (0..=n_max).map(f).collect(),
        None => {
            let system = ColourSystem::parse(tag)?;
            master_coefficients(&system.weights(n_max)?, n_max)
        }
    })
}

pub fn run(tag: &str, path: &Path, ctx: &Context, out: &mut dyn Write) -> CliResult<Outcome> {
    let n_max = ctx.n_max.unwrap_or(DEFAULT_N_MAX);
    let bfile = BFile::read(path)?;
    let computed = terms(tag, n_max)?;
    let mut checked = 0;
    for (index, expected) in &bfile.terms {
        let Ok(n) = usize::try_from(*index) else {
            continue;
        };
        if n > n_max {
            break;
        }
        let value = BigInt::from(computed[n].clone());
        if &value != expected {
            writeln!(
                out,
                "mismatch at n={n}: b-file {expected}, computed {value}"
            )?;
            return Ok(Outcome::Fail);
        }
        checked += 1;
    }
    if checked == 0 {
        writeln!(out, "no terms of {} lie in 0..={n_max}", path.display())?;
        return Ok(Outcome::Fail);
    }
    writeln!(
        out,
        "{tag}: {checked} terms agree with {}: pass",
        path.display()
    )?;
    Ok(Outcome::Pass)
}
