//! `waring`: construct, verify and cross-validate exact power-sum
//! decompositions of monomials.
//!
//! Data goes to stdout (or `--out`); progress and errors go to stderr.
//! Exit codes: 0 success, 1 mathematical failure, 2 usage error,
//! 3 budget exhaustion.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use waring_core::apolarpoints::{enumerate_points, t_is_valid};
use waring_core::bounds::{bounds_table, BoundsRow};
use waring_core::decomposer::{
    decompose_monomial, verify_decomposition, DecomposeOptions, WaringDecomposition,
};
use waring_core::error::Error as CoreError;
use waring_core::exactpoly::ratio::{parse_ratio, ratio_string};
use waring_core::exactpoly::{buchberger_basis, MonomialOrder};
use waring_core::generators::{build_j, ExponentSeq};
use waring_core::initialideal::{
    recursive_initial_ideal, staircase_degree, validate_theorem_pipeline, MonomialIdeal,
    ValidationOptions,
};

const EXIT_OK: u8 = 0;
const EXIT_MATH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "waring", version, about = "Exact Waring decompositions of monomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the structured point set for a monomial
    Points(PointsArgs),
    /// Compute a verified decomposition of the monomial
    Decompose(DecomposeArgs),
    /// Re-check a decomposition produced by `decompose`
    Verify(VerifyArgs),
    /// Rank bounds for one exponent sequence
    Bounds(BoundsArgs),
    /// Rank-bound comparison table for several sequences
    Table(TableArgs),
    /// Compare the Groebner initial ideal with its recursive prediction
    CheckInitial(CheckInitialArgs),
    /// Run every consistency check for one (exponents, t) pair
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// A comma-separated exponent list as a single argument value.
#[derive(Clone, Debug)]
struct ExponentList(Vec<u32>);

fn parse_exponents(s: &str) -> Result<ExponentList, String> {
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<u32>, String>>()
        .map(ExponentList)
}

fn parse_param(s: &str) -> Result<BigRational, String> {
    parse_ratio(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct CommonOut {
    /// Output format (default: json; csv for bounds/table)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the data stream to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PointsArgs {
    /// Comma-separated positive exponents, e.g. 3,3,3
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents)]
    exponents: ExponentList,
    /// Rational parameter t (integer or p/q), |t| not in {0, 1}
    #[arg(short = 't', long = "param", value_parser = parse_param, default_value = "2")]
    t: BigRational,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents)]
    exponents: ExponentList,
    /// First parameter value to try
    #[arg(short = 't', long = "param", value_parser = parse_param, default_value = "2")]
    t: BigRational,
    /// Drop zero-coefficient terms from the output
    #[arg(long)]
    prune: bool,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct VerifyArgs {
    /// Decomposition file; stdin when omitted
    file: Option<PathBuf>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents)]
    exponents: ExponentList,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct TableArgs {
    /// One sequence per flag, e.g. -a 3,3,3 -a 4,3,3
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents, required = true)]
    exponents: Vec<ExponentList>,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct CheckInitialArgs {
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents)]
    exponents: ExponentList,
    #[arg(short = 't', long = "param", value_parser = parse_param, default_value = "2")]
    t: BigRational,
    /// S-pair budget for the Groebner run
    #[arg(long, default_value_t = waring_core::exactpoly::DEFAULT_SPAIR_BUDGET)]
    budget: usize,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(short = 'a', long = "exponents", value_parser = parse_exponents)]
    exponents: ExponentList,
    /// Parameter to validate; degenerate |t| = 1 is allowed and reported as
    /// a failing run
    #[arg(short = 't', long = "param", value_parser = parse_param, default_value = "2")]
    t: BigRational,
    #[arg(long, default_value_t = waring_core::exactpoly::DEFAULT_SPAIR_BUDGET)]
    budget: usize,
    #[command(flatten)]
    out: CommonOut,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    ExitCode::from(code)
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::BudgetExhausted { .. }
            | CoreError::RetriesExhausted { .. }
            | CoreError::NotStabilized { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Points(args) => points(args),
        Command::Decompose(args) => decompose(args),
        Command::Verify(args) => verify(args),
        Command::Bounds(args) => bounds(args),
        Command::Table(args) => table(args),
        Command::CheckInitial(args) => check_initial(args),
        Command::Validate(args) => validate(args),
    }
}

fn sequence(exponents: &ExponentList) -> Result<ExponentSeq, Failure> {
    if exponents.0.is_empty() {
        return Err(Failure::usage("missing -a/--exponents"));
    }
    ExponentSeq::new(exponents.0.clone()).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(out: &CommonOut, data: &str) -> Result<(), Failure> {
    let mut text = data.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn chosen_format(out: &CommonOut, default: Format) -> Format {
    out.format.unwrap_or(default)
}

fn points(args: PointsArgs) -> Result<u8, Failure> {
    let a = sequence(&args.exponents)?;
    if !t_is_valid(&args.t) {
        return Err(Failure::usage(format!(
            "t = {} is degenerate; |t| must not be 0 or 1",
            ratio_string(&args.t)
        )));
    }
    let set = enumerate_points(&a, &args.t)?;
    let rows: Vec<Vec<String>> = set.points.iter().map(|p| p.coordinate_strings()).collect();
    let data = match chosen_format(&args.out, Format::Json) {
        Format::Json => serde_json::to_string(&rows).expect("serializes"),
        Format::Csv => rows
            .iter()
            .map(|r| r.join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Text => rows
            .iter()
            .map(|r| format!("[{}]", r.join(" : ")))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(&args.out, &data)?;
    Ok(EXIT_OK)
}

fn decompose(args: DecomposeArgs) -> Result<u8, Failure> {
    let a = sequence(&args.exponents)?;
    eprintln!(
        "decomposing exponents {:?} (degree {}), starting at t = {}",
        a.exponents(),
        a.total_degree(),
        ratio_string(&args.t)
    );
    let dec = decompose_monomial(&a, Some(&args.t), &DecomposeOptions::default())?;
    eprintln!(
        "verified decomposition with {} terms at t = {}",
        dec.nonzero_terms(),
        ratio_string(&dec.t)
    );
    let dec = if args.prune { dec.pruned() } else { dec };
    let data = match chosen_format(&args.out, Format::Json) {
        Format::Json => dec.to_json(true),
        Format::Text => decomposition_text(&dec),
        Format::Csv => return Err(Failure::usage("decompose has no csv format")),
    };
    emit(&args.out, &data)?;
    Ok(EXIT_OK)
}

fn decomposition_text(dec: &WaringDecomposition) -> String {
    let mut lines = vec![format!(
        "# exponents {:?}, degree {}, t = {}, {} terms",
        dec.a.exponents(),
        dec.degree,
        ratio_string(&dec.t),
        dec.nonzero_terms()
    )];
    for (lambda, linform) in &dec.terms {
        let form = linform
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}*X{}", ratio_string(c), i))
            .collect::<Vec<_>>()
            .join(" + ");
        lines.push(format!("{} * ({})^{}", ratio_string(lambda), form, dec.degree));
    }
    lines.join("\n")
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let raw = match &args.file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let (dec, _claimed) = WaringDecomposition::from_json(&raw)?;
    let verified = verify_decomposition(&dec);
    let bound = waring_core::apolarpoints::count_formula(&dec.a);
    let within_bound = num_bigint_from(dec.nonzero_terms()) <= bound;
    let pass = verified && within_bound;
    let data = match chosen_format(&args.out, Format::Json) {
        Format::Json => serde_json::to_string(&serde_json::json!({
            "exponents": dec.a.exponents(),
            "degree": dec.degree,
            "term_count": dec.nonzero_terms(),
            "bound": bound.to_string(),
            "verified": pass,
        }))
        .expect("serializes"),
        Format::Text => format!(
            "exponents {:?} degree {} terms {} bound {} verified {}",
            dec.a.exponents(),
            dec.degree,
            dec.nonzero_terms(),
            bound,
            pass
        ),
        Format::Csv => return Err(Failure::usage("verify has no csv format")),
    };
    emit(&args.out, &data)?;
    Ok(if pass { EXIT_OK } else { EXIT_MATH })
}

fn num_bigint_from(n: usize) -> num_bigint::BigUint {
    num_bigint::BigUint::from(n)
}

fn bounds(args: BoundsArgs) -> Result<u8, Failure> {
    let a = sequence(&args.exponents)?;
    let rows = bounds_table(std::slice::from_ref(&a));
    render_rows(&rows, &args.out)
}

fn table(args: TableArgs) -> Result<u8, Failure> {
    let seqs = args
        .exponents
        .iter()
        .map(|e| sequence(e))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = bounds_table(&seqs);
    render_rows(&rows, &args.out)
}

fn render_rows(rows: &[BoundsRow], out: &CommonOut) -> Result<u8, Failure> {
    let exp_str = |row: &BoundsRow| {
        row.a
            .exponents()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let data = match chosen_format(out, Format::Csv) {
        Format::Csv => {
            let mut lines = vec!["exponents,ub_bt,ub_ckov,ub_hm".to_string()];
            for row in rows {
                lines.push(format!(
                    "\"{}\",{},{},{}",
                    exp_str(row),
                    row.ub_bt,
                    row.ub_ckov,
                    row.ub_hm
                ));
            }
            lines.join("\n")
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "exponents": row.a.exponents(),
                        "ub_bt": row.ub_bt.to_string(),
                        "ub_ckov": row.ub_ckov.to_string(),
                        "ub_hm": row.ub_hm.to_string(),
                    })
                })
                .collect();
            serde_json::to_string(&objs).expect("serializes")
        }
        Format::Text => {
            let mut lines = vec![format!(
                "{:<20} {:>12} {:>12} {:>12}",
                "exponents", "ub_bt", "ub_ckov", "ub_hm"
            )];
            for row in rows {
                lines.push(format!(
                    "{:<20} {:>12} {:>12} {:>12}",
                    exp_str(row),
                    row.ub_bt.to_string(),
                    row.ub_ckov.to_string(),
                    row.ub_hm.to_string()
                ));
            }
            lines.join("\n")
        }
    };
    emit(out, &data)?;
    Ok(EXIT_OK)
}

fn check_initial(args: CheckInitialArgs) -> Result<u8, Failure> {
    let a = sequence(&args.exponents)?;
    if !t_is_valid(&args.t) {
        return Err(Failure::usage(format!(
            "t = {} is degenerate; |t| must not be 0 or 1",
            ratio_string(&args.t)
        )));
    }
    let sorted = ExponentSeq::new(a.sorted_desc()).expect("valid");
    let j = build_j(&sorted, &args.t)?;
    eprintln!(
        "computing Groebner basis for exponents {:?} at t = {}",
        sorted.exponents(),
        ratio_string(&args.t)
    );
    let basis = buchberger_basis(&j.polynomials(), MonomialOrder::Grevlex, args.budget)?;
    let computed = MonomialIdeal::new(
        sorted.nvars(),
        basis
            .iter()
            .map(|g| g.leading_monomial().expect("reduced basis").clone())
            .collect(),
    );
    let predicted = recursive_initial_ideal(&sorted);
    let initial_match = computed == predicted;
    let degree = staircase_degree(&predicted)?;
    let count = waring_core::apolarpoints::count_formula(&sorted);
    let degree_match = num_bigint::BigUint::from(degree) == count;
    let pass = initial_match && degree_match;

    let data = match chosen_format(&args.out, Format::Json) {
        Format::Json => serde_json::to_string(&serde_json::json!({
            "exponents": sorted.exponents(),
            "t": ratio_string(&args.t),
            "groebner_initial": computed.generator_strings(),
            "predicted_initial": predicted.generator_strings(),
            "initial_match": initial_match,
            "staircase_degree": degree,
            "count_formula": count.to_string(),
            "pass": pass,
        }))
        .expect("serializes"),
        Format::Text => format!(
            "exponents {:?} t {}\n  groebner:  {}\n  predicted: {}\n  degree {} vs count {}\n  pass {}",
            sorted.exponents(),
            ratio_string(&args.t),
            computed.generator_strings().join(", "),
            predicted.generator_strings().join(", "),
            degree,
            count,
            pass
        ),
        Format::Csv => return Err(Failure::usage("check-initial has no csv format")),
    };
    emit(&args.out, &data)?;
    Ok(if pass { EXIT_OK } else { EXIT_MATH })
}

fn validate(args: ValidateArgs) -> Result<u8, Failure> {
    let a = sequence(&args.exponents)?;
    let opts = ValidationOptions {
        groebner_budget: args.budget,
        ..ValidationOptions::default()
    };
    eprintln!(
        "validating exponents {:?} at t = {}",
        a.exponents(),
        ratio_string(&args.t)
    );
    let report = validate_theorem_pipeline(&a, &args.t, &opts)?;
    let data = match chosen_format(&args.out, Format::Json) {
        Format::Json => report.to_json(),
        Format::Text => format!(
            "exponents {:?} t {}\n  points {} expected {} -> {}\n  vanishing {}\n  annihilator {}\n  initial ideal {}\n  hilbert {:?} expected {} -> {}\n  overall {}",
            report.exponents,
            report.t,
            report.point_count.enumerated,
            report.point_count.expected,
            report.point_count.pass,
            report.vanishing.pass,
            report.apolar.pass,
            report.initial_ideal.pass,
            report.hilbert.stable_value,
            report.hilbert.expected,
            report.hilbert.pass,
            report.overall
        ),
        Format::Csv => return Err(Failure::usage("validate has no csv format")),
    };
    emit(&args.out, &data)?;
    if report.overall {
        Ok(EXIT_OK)
    } else if report.budget_exhausted {
        Ok(EXIT_BUDGET)
    } else {
        Ok(EXIT_MATH)
    }
}
