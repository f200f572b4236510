use std::io::Write;

use coloured_dyck::colours::enumerate_coloured;
use coloured_dyck::paths::enumerate_family;
use coloured_dyck::Family;

use crate::table::{self, Cell};
use crate::{build_system, CliError, CliResult, Context, Format, OptionalSystemArgs, Outcome};

pub(crate) fn parse_family(name: &str, m: Option<usize>) -> CliResult<Family> {
    let needs_m = || m.ok_or_else(|| CliError::Usage(format!("--family {name} needs --m")));
    let family = match name {
        "dyck" => Family::Dyck,
        "bounded-ascent" => Family::BoundedAscent(needs_m()?),
        "fibonacci" => Family::Fibonacci(needs_m()?),
        "fibonacci-free" => Family::FibonacciFree,
        "schroeder" => Family::Schroeder,
        "little-schroeder" => Family::LittleSchroeder,
        "t-path" => Family::TPath,
        _ => return Err(CliError::Usage(format!("unknown family {name:?}"))),
    };
    Ok(family.check()?)
}

pub fn run(
    n: usize,
    family: Option<&str>,
    system: &OptionalSystemArgs,
    ctx: &Context,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let format = ctx.table_format()?;
    let items: Box<dyn Iterator<Item = String>> = match (family, &system.system) {
        (Some(f), _) => {
            Box::new(enumerate_family(n, parse_family(f, system.m)?)?.map(|p| p.to_string()))
        }
        (None, Some(s)) => {
            let s = build_system(s, system.m, system.weights.as_deref())?;
            Box::new(enumerate_coloured(n, &s)?.map(|p| p.to_string()))
        }
        (None, None) => {
            return Err(CliError::Usage("list needs --family or --system".into()));
        }
    };
    if format == Format::Text {
        for item in items {
            writeln!(out, "{item}")?;
        }
    } else {
        let rows: Vec<Vec<Cell>> = items.map(|i| vec![Cell::Text(i)]).collect();
        table::write(out, format, &["path"], &rows)?;
    }
    Ok(Outcome::Pass)
}
