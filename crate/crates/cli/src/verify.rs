use std::collections::BTreeSet;
use std::io::Write;

use coloured_dyck::bijections::*;
use coloured_dyck::colours::enumerate_coloured;
use coloured_dyck::paths::{dyck_paths, little_schroeder_paths};
use coloured_dyck::structures::{
    dissections, even_partitions, nc_partitions, nc_trees, nco_trees, t_path_oracle, OracleLimits,
};
use coloured_dyck::{ColourSystem, ColouredDyckPath, Result};

use crate::map::NAMES;
use crate::table::{self, Cell};
use crate::{CliError, CliResult, Context, Format, Outcome};

pub const DEFAULT_N_MAX: usize = 4;

/// Results of one map's suites over `n = 0..=n_max`.
struct Report {
    label: String,
    domain_sizes: Vec<usize>,
    roundtrip: bool,
    size_law: bool,
    oracle_sizes: Vec<usize>,
    surjective: bool,
}

fn joined(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Runs `inverse ∘ forward` over every domain element, checks the size
/// law on each image and compares the image set with the oracle.
fn suite<D, I>(
    label: String,
    n_max: usize,
    domain: impl Fn(usize) -> Result<Vec<D>>,
    forward: impl Fn(&D) -> Result<I>,
    inverse: impl Fn(&I) -> Result<D>,
    size_law: impl Fn(usize, &I) -> bool,
    oracle: impl Fn(usize) -> Result<Vec<I>>,
) -> CliResult<Report>
where
    D: PartialEq,
    I: Ord,
{
    let mut report = Report {
        label,
        domain_sizes: Vec::new(),
        roundtrip: true,
        size_law: true,
        oracle_sizes: Vec::new(),
        surjective: true,
    };
    for n in 0..=n_max {
        let items = domain(n)?;
        report.domain_sizes.push(items.len());
        let mut image = BTreeSet::new();
        for item in &items {
            let Ok(out) = forward(item) else {
                report.roundtrip = false;
                continue;
            };
            report.size_law &= size_law(n, &out);
            report.roundtrip &= inverse(&out).is_ok_and(|back| back == *item);
            image.insert(out);
        }
        let expected: BTreeSet<I> = oracle(n)?.into_iter().collect();
        report.oracle_sizes.push(expected.len());
        report.surjective &= image.len() == items.len() && image == expected;
    }
    Ok(report)
}

fn coloured(system: ColourSystem) -> impl Fn(usize) -> Result<Vec<ColouredDyckPath>> {
    move |n| Ok(enumerate_coloured(n, &system)?.collect())
}

/// Fails with `SizeTooLarge` before any work if an oracle would exceed
/// its guardrail at `n_max`.
fn guard(name: &str, n_max: usize, limits: &OracleLimits) -> Result<()> {
    match name {
        "theta" | "phi" => limits.check_tree(n_max + 1),
        "psi" => limits.check_partition(n_max),
        "rho" => limits.check_partition(2 * n_max),
        "sigma" => limits.check_polygon(n_max + 2),
        "schroeder-t" => limits.check_t_path(n_max),
        _ => Ok(()),
    }
}

fn reports(
    name: &str,
    n_max: usize,
    ms: &[usize],
    limits: &OracleLimits,
) -> CliResult<Vec<Report>> {
    let label = name.to_string();
    let out = match name {
        "theta" => vec![suite(
            label,
            n_max,
            |n| Ok(dyck_paths(n).collect()),
            |p| Ok(theta(p).into_tree()),
            theta_inv,
            |n, t| t.vertices() == n + 1,
            |n| {
                Ok(nco_trees(n + 1, limits)?
                    .into_iter()
                    .map(|t| t.into_tree())
                    .collect())
            },
        )?],
        "phi" => vec![suite(
            label,
            n_max,
            coloured(ColourSystem::Catalan),
            phi,
            phi_inv,
            |n, t| t.vertices() == n + 1,
            |n| nc_trees(n + 1, limits),
        )?],
        "psi" => vec![suite(
            label,
            n_max,
            |n| Ok(dyck_paths(n).collect()),
            |p| Ok(psi(p)),
            psi_inv,
            |n, p| p.points() == n,
            |n| nc_partitions(n, limits),
        )?],
        "rho" => ms
            .iter()
            .map(|&m| {
                suite(
                    format!("rho (m={m})"),
                    n_max,
                    coloured(ColourSystem::BoundedAscent(m)),
                    |p| Ok(rho(p, m)?.into_partition()),
                    |q| rho_inv(q, m),
                    |n, q| q.points() == 2 * n,
                    |n| {
                        Ok(even_partitions(n, m, limits)?
                            .into_iter()
                            .map(|e| e.into_partition())
                            .collect())
                    },
                )
            })
            .collect::<CliResult<_>>()?,
        "sigma" => ms
            .iter()
            .map(|&m| {
                suite(
                    format!("sigma (m={m})"),
                    n_max,
                    coloured(ColourSystem::Fibonacci(m)),
                    |p| sigma(p, Some(m)),
                    |d| sigma_inv(d, Some(m)),
                    |n, d| d.vertex_count() == n + 2,
                    |n| dissections(n, Some(m + 2), limits),
                )
            })
            .collect::<CliResult<_>>()?,
        "fib-ls" => vec![suite(
            label,
            n_max,
            coloured(ColourSystem::FibonacciFree),
            |p| Ok(fib_to_ls(p)?.to_string()),
            |w| ls_to_fib(&w.parse()?),
            |n, w| {
                w.parse::<coloured_dyck::LittleSchroederPath>()
                    .is_ok_and(|p| p.semilength() == n)
            },
            |n| Ok(little_schroeder_paths(n).map(|p| p.to_string()).collect()),
        )?],
        "schroeder-t" => vec![suite(
            label,
            n_max,
            coloured(ColourSystem::Schroeder),
            |p| Ok(schroeder_to_t(p)?.to_string()),
            |w| t_to_schroeder(&w.parse()?),
            |n, w| {
                w.parse::<coloured_dyck::TPath>()
                    .is_ok_and(|t| t.span() == 3 * n)
            },
            |n| {
                Ok(t_path_oracle(n, limits)?
                    .iter()
                    .map(ToString::to_string)
                    .collect())
            },
        )?],
        _ => return Err(CliError::Usage(format!("unknown map {name:?}"))),
    };
    Ok(out)
}

pub fn run(name: &str, m: Option<usize>, ctx: &Context, out: &mut dyn Write) -> CliResult<Outcome> {
    let format = ctx.table_format()?;
    let n_max = ctx.n_max.unwrap_or(DEFAULT_N_MAX);
    let names: Vec<&str> = if name == "all" {
        NAMES.to_vec()
    } else if NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(CliError::Usage(format!("unknown map {name:?}")));
    };
    let ms: Vec<usize> = match m {
        Some(0) => return Err(coloured_dyck::Error::InvalidBound(0).into()),
        Some(m) => vec![m],
        None => vec![1, 2, 3],
    };
    for n in &names {
        guard(n, n_max, &ctx.limits)?;
    }
    let mut all = Vec::new();
    for n in &names {
        all.extend(reports(n, n_max, &ms, &ctx.limits)?);
    }
    let ok = all
        .iter()
        .all(|r| r.roundtrip && r.size_law && r.surjective);
    if format == Format::Text {
        for r in &all {
            writeln!(
                out,
                "{}: roundtrip {} cases: {}",
                r.label,
                joined(&r.domain_sizes),
                verdict(r.roundtrip)
            )?;
            writeln!(out, "{}: size law: {}", r.label, verdict(r.size_law))?;
            writeln!(
                out,
                "{}: surjectivity onto {} oracle structures: {}",
                r.label,
                joined(&r.oracle_sizes),
                verdict(r.surjective)
            )?;
        }
        writeln!(out, "{}", verdict(ok))?;
    } else {
        let rows: Vec<Vec<Cell>> = all
            .iter()
            .map(|r| {
                vec![
                    Cell::Text(r.label.clone()),
                    Cell::Text(joined(&r.domain_sizes)),
                    Cell::Raw(r.roundtrip.to_string()),
                    Cell::Raw(r.size_law.to_string()),
                    Cell::Text(joined(&r.oracle_sizes)),
                    Cell::Raw(r.surjective.to_string()),
                ]
            })
            .collect();
        table::write(
            out,
            format,
            &[
                "map",
                "cases",
                "roundtrip",
                "size_law",
                "oracle",
                "surjective",
            ],
            &rows,
        )?;
    }
    Ok(Outcome::from_bool(ok))
}
