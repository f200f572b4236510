use std::io::Write;

use coloured_dyck::bijections::*;
use coloured_dyck::{
    ColouredDyckPath, Dissection, DyckPath, LittleSchroederPath, NcTree, NonCrossingPartition,
    TPath,
};

use crate::{CliError, CliResult, Outcome};

pub const NAMES: [&str; 7] = [
    "theta",
    "phi",
    "psi",
    "rho",
    "sigma",
    "fib-ls",
    "schroeder-t",
];

/// The smallest bound the colours of `path` fit under.
fn ascent_bound(path: &ColouredDyckPath) -> usize {
    path.colours()
        .iter()
        .filter_map(|c| c.to_dyck())
        .flat_map(|d| d.ascent_lengths())
        .max()
        .unwrap_or(1)
}

/// Applies the named map to `input` and returns the canonical output text.
pub fn apply(name: &str, input: &str, m: Option<usize>) -> CliResult<String> {
    let coloured = || ColouredDyckPath::parse(input);
    Ok(match name {
        "theta" => theta(&DyckPath::parse(input)?).as_tree().to_json(),
        "theta-inv" => theta_inv(&NcTree::from_json(input)?)?.to_string(),
        "phi" => phi(&coloured()?)?.to_json(),
        "phi-inv" => phi_inv(&NcTree::from_json(input)?)?.to_string(),
        "psi" => psi(&DyckPath::parse(input)?).to_json(),
        "psi-inv" => psi_inv(&NonCrossingPartition::from_json(input)?)?.to_string(),
        "rho" => {
            let path = coloured()?;
            let m = m.unwrap_or_else(|| ascent_bound(&path));
            rho(&path, m)?.partition().to_json()
        }
        "rho-inv" => {
            let partition = NonCrossingPartition::from_json(input)?;
            let largest = partition.blocks().iter().map(Vec::len).max().unwrap_or(0);
            let m = m.unwrap_or((largest / 2).max(1));
            rho_inv(&partition, m)?.to_string()
        }
        "sigma" => sigma(&coloured()?, m)?.to_json(),
        "sigma-inv" => sigma_inv(&Dissection::from_json(input)?, m)?.to_string(),
        "fib-ls" => fib_to_ls(&coloured()?)?.to_string(),
        "fib-ls-inv" => ls_to_fib(&LittleSchroederPath::parse(input)?)?.to_string(),
        "schroeder-t" => schroeder_to_t(&coloured()?)?.to_string(),
        "schroeder-t-inv" => t_to_schroeder(&TPath::parse(input)?)?.to_string(),
        _ => return Err(CliError::Usage(format!("unknown map {name:?}"))),
    })
}

pub fn run(name: &str, input: &str, m: Option<usize>, out: &mut dyn Write) -> CliResult<Outcome> {
    writeln!(out, "{}", apply(name, input, m)?)?;
    Ok(Outcome::Pass)
}
