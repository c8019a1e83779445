//! Command-line front end: parses derivation and automorphism descriptions
//! from JSON files, runs the library pipeline stages, and reports in text or
//! JSON. Exit codes: 0 on success (any verdict), 2 on input or parse errors,
//! 3 when an internal consistency recheck fails.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use darboux::{
    certify_darboux_free_with, constants_basis, constants_system, dense_nullspace,
    eliminate_cofactors, find_symmetry_weights, read_automorphism_spec, read_derivation_spec,
    standard_shift, CertifyOptions, Cyc8, Derivation, DiagonalAutomorphism, EliminationRecord,
    Error, Rational, Result,
};

#[derive(Parser)]
#[command(
    name = "darboux",
    version,
    about = "Exact Darboux-polynomial machinery for monomial derivations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print w_d = det(beta - I) and whether the derivation is normal
    Wd(WdArgs),
    /// Enumerate diagonal symmetries mod m with cofactor-elimination verdicts
    Symmetry(SymmetryArgs),
    /// Conjugate the derivation by a diagonal automorphism over Q(z8)
    Conjugate(ConjugateArgs),
    /// Kernel bases of the derivation, degree by degree
    Constants(ConstantsArgs),
    /// Certify the absence of Darboux polynomials up to a degree bound
    Certify(CertifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct WdArgs {
    /// Derivation description (JSON file)
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SymmetryArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Order of the root of unity the symmetry scales by
    #[arg(long, default_value_t = 8)]
    modulus: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConjugateArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Diagonal automorphism (JSON file with one scalar per variable)
    #[arg(long, value_name = "FILE")]
    auto: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Highest kernel degree to scan
    #[arg(long = "max-degree", default_value_t = 8)]
    max_degree: u32,
    /// Recheck every small system against the dense elimination oracle
    #[arg(long = "oracle-check")]
    oracle_check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Claimed Darboux-freeness bound D; the kernel scan runs through m*D
    #[arg(long = "max-degree", default_value_t = 2)]
    max_degree: u32,
    #[arg(long, default_value_t = 8)]
    modulus: u32,
    /// Replay every small degree through the dense oracle, not just one
    #[arg(long = "oracle-check")]
    oracle_check: bool,
    /// Record per-degree wall-clock times (breaks byte-reproducibility)
    #[arg(long)]
    timings: bool,
    /// Size of the worker pool for the kernel scan (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Also write the JSON certificate to this file
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(report.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => ExitCode::SUCCESS,
                // A closed pipe (e.g. `darboux symmetry | head`) is not an error.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Wd(args) => cmd_wd(args),
        Command::Symmetry(args) => cmd_symmetry(args),
        Command::Conjugate(args) => cmd_conjugate(args),
        Command::Constants(args) => cmd_constants(args),
        Command::Certify(args) => cmd_certify(args),
    }
}

fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct WdReport {
    wd: String,
    normal: bool,
}

fn cmd_wd(args: WdArgs) -> Result<String> {
    let d: Derivation<Rational> = read_derivation_spec(&args.input)?.to_derivation()?;
    let beta = d.exponent_matrix()?;
    let report = WdReport {
        wd: beta.wd().to_string(),
        normal: beta.is_normal(),
    };
    match args.format {
        Format::Text => Ok(format!("w_d = {}, normal = {}\n", report.wd, report.normal)),
        Format::Json => to_json_line(&report),
    }
}

#[derive(Serialize)]
struct SymmetryLine {
    weights: Vec<i64>,
    shift: i64,
    trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    eliminates: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elimination: Option<Vec<EliminationRecord>>,
}

#[derive(Serialize)]
struct SymmetryReport {
    modulus: u32,
    count: usize,
    solutions: Vec<SymmetryLine>,
}

fn cmd_symmetry(args: SymmetryArgs) -> Result<String> {
    let d: Derivation<Rational> = read_derivation_spec(&args.input)?.to_derivation()?;
    let beta = d.exponent_matrix()?;
    // Elimination verdicts only exist for homogeneity degree 1, where
    // cofactors are linear forms; other degrees list the symmetries bare.
    let verdicts = standard_shift(&d)? == 1;
    let mut solutions = Vec::new();
    for sol in find_symmetry_weights(&beta, args.modulus)? {
        let (eliminates, elimination) = if verdicts {
            let report = eliminate_cofactors(&d, &sol)?;
            (
                Some(report.lambda_forced_zero),
                Some(
                    report
                        .entries
                        .into_iter()
                        .map(|e| EliminationRecord {
                            variable: e.variable,
                            residue: e.residue,
                            eliminated: e.eliminated,
                        })
                        .collect(),
                ),
            )
        } else {
            (None, None)
        };
        solutions.push(SymmetryLine {
            weights: sol.weights().weights().to_vec(),
            shift: sol.shift(),
            trivial: sol.is_trivial(),
            eliminates,
            elimination,
        });
    }
    let report = SymmetryReport {
        modulus: args.modulus,
        count: solutions.len(),
        solutions,
    };
    match args.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{} symmetries mod {}", report.count, report.modulus).unwrap();
            for line in &report.solutions {
                let weights = line
                    .weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                let mut flags = Vec::new();
                if line.trivial {
                    flags.push("trivial");
                }
                if line.eliminates == Some(true) {
                    flags.push("eliminates Λ");
                }
                let suffix = if flags.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", flags.join(", "))
                };
                writeln!(out, "({weights}; c = {}){suffix}", line.shift).unwrap();
            }
            Ok(out)
        }
        Format::Json => to_json_line(&report),
    }
}

#[derive(Serialize)]
struct ConjugateReport {
    images: Vec<String>,
    /// Set when the conjugate is eps*d for an eighth root of unity eps.
    #[serde(skip_serializing_if = "Option::is_none")]
    scales_by: Option<String>,
}

fn cmd_conjugate(args: ConjugateArgs) -> Result<String> {
    let d: Derivation<Cyc8> = read_derivation_spec(&args.input)?.to_derivation()?;
    let scalars = read_automorphism_spec(&args.auto)?.to_scalars()?;
    let sigma = DiagonalAutomorphism::new(d.context(), scalars)?;
    let conjugated = sigma.conjugate(&d);
    let scales_by = (0..8)
        .map(Cyc8::zeta_pow)
        .find(|eps| conjugated == d.scale(eps))
        .map(|eps| eps.to_string());
    let report = ConjugateReport {
        images: conjugated.images().iter().map(|p| p.to_string()).collect(),
        scales_by,
    };
    match args.format {
        Format::Text => {
            let mut out = String::new();
            let ctx = d.context();
            for (i, image) in report.images.iter().enumerate() {
                writeln!(out, "d'({}) = {}", ctx.name(i), image).unwrap();
            }
            match &report.scales_by {
                Some(eps) => writeln!(out, "conjugate = ({eps}) * d").unwrap(),
                None => writeln!(out, "conjugate is not a root-of-unity multiple of d").unwrap(),
            }
            Ok(out)
        }
        Format::Json => to_json_line(&report),
    }
}

#[derive(Serialize)]
struct ConstantsDegree {
    degree: u32,
    nullity: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct ConstantsReport {
    max_degree: u32,
    degrees: Vec<ConstantsDegree>,
}

fn cmd_constants(args: ConstantsArgs) -> Result<String> {
    let d: Derivation<Rational> = read_derivation_spec(&args.input)?.to_derivation()?;
    let mut degrees = Vec::new();
    for p in 1..=args.max_degree {
        let basis = constants_basis(&d, p)?;
        if args.oracle_check {
            let system = constants_system(&d, p)?;
            if system.matrix.ncols() <= 200 {
                let dense = dense_nullspace(&system.matrix.to_dense(), system.matrix.ncols());
                if dense.len() != basis.len() {
                    return Err(Error::Internal(format!(
                        "dense oracle found nullity {} at degree {p} but the sparse solver found {}",
                        dense.len(),
                        basis.len()
                    )));
                }
            }
        }
        degrees.push(ConstantsDegree {
            degree: p,
            nullity: basis.len(),
            basis: basis.iter().map(|b| b.to_string()).collect(),
        });
    }
    let report = ConstantsReport {
        max_degree: args.max_degree,
        degrees,
    };
    match args.format {
        Format::Text => {
            let mut out = String::new();
            for entry in &report.degrees {
                writeln!(out, "degree {}: nullity {}", entry.degree, entry.nullity).unwrap();
                for b in &entry.basis {
                    writeln!(out, "  {b}").unwrap();
                }
            }
            Ok(out)
        }
        Format::Json => to_json_line(&report),
    }
}

fn cmd_certify(args: CertifyArgs) -> Result<String> {
    if let Some(n) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::BadSpec(format!("worker pool: {e}")))?;
    }
    let d: Derivation<Rational> = read_derivation_spec(&args.input)?.to_derivation()?;
    let opts = CertifyOptions {
        collect_timings: args.timings,
        oracle_check_all: args.oracle_check,
    };
    let cert = certify_darboux_free_with(&d, args.max_degree, args.modulus, &opts)?;
    let json = cert.to_canonical_json()?;
    if let Some(path) = &args.output {
        fs::write(path, &json)?;
    }
    match args.format {
        Format::Json => Ok(json),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "verdict: {}", cert.verdict).unwrap();
            writeln!(out, "homogeneity degree: {}", cert.homogeneity_degree).unwrap();
            writeln!(out, "modulus: {}", cert.modulus).unwrap();
            match &cert.symmetry {
                Some(sym) => {
                    let weights = sym
                        .weights
                        .iter()
                        .map(|w| w.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    writeln!(out, "symmetry: ({weights}; c = {})", sym.shift).unwrap();
                }
                None => writeln!(out, "symmetry: none").unwrap(),
            }
            for e in &cert.elimination {
                let status = if e.eliminated { "eliminated" } else { "survives" };
                writeln!(out, "  {} residue {}: {status}", e.variable, e.residue).unwrap();
            }
            writeln!(out, "cofactor forced zero: {}", cert.lambda_forced_zero).unwrap();
            writeln!(
                out,
                "kernel scanned through degree: {}",
                cert.constants_max_degree
            )
            .unwrap();
            let nullities = cert
                .constants_nullities
                .iter()
                .map(|n| n.nullity.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "nullities: {nullities}").unwrap();
            writeln!(out, "degree bound: {}", cert.degree_bound).unwrap();
            if let Some(w) = &cert.witness {
                writeln!(out, "witness: {}  (cofactor {})", w.polynomial, w.cofactor).unwrap();
            }
            if let Some(reason) = &cert.reason {
                writeln!(out, "reason: {reason}").unwrap();
            }
            let rechecked = cert
                .oracle_recheck_degrees
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "oracle recheck degrees: {rechecked}").unwrap();
            Ok(out)
        }
    }
}
