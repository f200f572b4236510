#![allow(dead_code)]

use std::path::PathBuf;

/// `(golden file, arguments after the program name)`.
pub const GOLDEN_MAPS: &[(&str, &[&str])] = &[
    ("map-theta.out", &["map", "theta", "UUDD"]),
    (
        "map-theta-inv.out",
        &["map", "theta-inv", r#"{"n":3,"edges":[[1,2],[2,3]]}"#],
    ),
    ("map-phi.out", &["map", "phi", "UDUD;UD,UD"]),
    (
        "map-phi-inv.out",
        &["map", "phi-inv", r#"{"n":3,"edges":[[1,3],[2,3]]}"#],
    ),
    ("map-psi.out", &["map", "psi", "UUDUDD"]),
    ("map-rho.out", &["map", "rho", "UUDD;UUDD", "--m", "2"]),
    ("map-sigma.out", &["map", "sigma", "UUUDDD;UDUUDD"]),
    (
        "map-sigma-inv.out",
        &["map", "sigma-inv", r#"{"k":3,"diagonals":[[0,2]]}"#],
    ),
    ("map-fib-ls.out", &["map", "fib-ls", "UUUDDD;UDUUDD"]),
    ("map-schroeder-t.out", &["map", "schroeder-t", "UD;L"]),
    (
        "map-schroeder-t-inv.out",
        &["map", "schroeder-t-inv", "GGDD"],
    ),
];

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn golden(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Runs the command in-process: `(exit code, stdout, stderr)`.
pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cdyck").chain(args.iter().copied());
    let code = coloured_dyck_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}
