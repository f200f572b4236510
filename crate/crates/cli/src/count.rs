use std::io::Write;

use coloured_dyck::colours::count_coloured_bruteforce;
use coloured_dyck::enumeration::{
    count_bounded, count_catalan_coloured, count_fibonacci, count_little_schroeder,
    count_schroeder_coloured, master_coefficients,
};
use coloured_dyck::ColourSystem;
use num_bigint::BigUint;

use crate::table::{self, Cell};
use crate::{CliResult, Context, Outcome};

/// Largest `n` scanned by brute force unless `--unlimited` is given.
pub const BRUTE_FORCE_MAX: usize = 12;

fn closed_form(system: &ColourSystem, n: usize) -> Option<BigUint> {
    Some(match system {
        ColourSystem::Catalan => count_catalan_coloured(n),
        ColourSystem::BoundedAscent(m) => count_bounded(n, *m),
        ColourSystem::Fibonacci(m) => count_fibonacci(n, *m),
        ColourSystem::FibonacciFree => count_little_schroeder(n),
        ColourSystem::Schroeder => count_schroeder_coloured(n),
        ColourSystem::Trivial => count_bounded(n, 1),
        ColourSystem::Custom(_) => return None,
    })
}

pub fn run(
    system: &ColourSystem,
    from: usize,
    to: usize,
    ctx: &Context,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let format = ctx.table_format()?;
    let series = master_coefficients(&system.weights(to)?, to);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for (n, series_value) in series.iter().enumerate().skip(from) {
        let brute = if n <= BRUTE_FORCE_MAX || ctx.unlimited {
            Some(count_coloured_bruteforce(n, system)?)
        } else {
            None
        };
        let closed = closed_form(system, n);
        let agree = [&brute, &closed]
            .iter()
            .all(|v| v.as_ref().is_none_or(|v| v == series_value));
        all_agree &= agree;
        let cell = |v: &Option<BigUint>| match v {
            Some(v) => Cell::Raw(v.to_string()),
            None => Cell::Missing,
        };
        rows.push(vec![
            Cell::Raw(n.to_string()),
            cell(&brute),
            Cell::Raw(series_value.to_string()),
            cell(&closed),
            Cell::Raw(agree.to_string()),
        ]);
    }
    table::write(
        out,
        format,
        &["n", "brute_force", "series", "closed_form", "agree"],
        &rows,
    )?;
    Ok(Outcome::from_bool(all_agree))
}
