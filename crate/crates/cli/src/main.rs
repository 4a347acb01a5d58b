//! Batch command-line front end: family generation, solution verification,
//! symbolic identity checking, and exhaustive searches, with machine-readable
//! output.
//!
//! Exit codes: 0 success, 1 verification/identity failure, 2 usage or domain
//! error. Records go to stdout (JSON Lines by default); diagnostics and
//! timings go to stderr so identical invocations produce identical stdout
//! (the `elapsed_ms` field inside search reports is the one documented
//! exception).

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tritet::error::Error;
use tritet::families::{self, Equation, IdentityStatus, Params, Scalar, SolutionRecord};
use tritet::search::{self, ProblemId, SearchProblem, SearchReport, SolutionItem};

#[derive(Parser)]
#[command(
    name = "tritet",
    version,
    about = "Exact solution families, identity checks, and exhaustive searches for \
             Diophantine equations over triangular and tetrahedral numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// List solution families or generate verified records
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Check one solution against a target equation
    ///
    /// Equations: t2sum (t_x^2+t_y^2=t_z^2), T2sum (T_x^2+T_y^2=z^2),
    /// tz_quartic (t_z=x^4+y^4), pow_sum (z^n=T_x+T_y; first component is n),
    /// sqprod (z^2=T_x*T_y), harmonic (1/t_x+1/t_y=2/t_z),
    /// quotient (t_z=T_y/T_x), product (t_z=T_x*T_y),
    /// two_pairs (t_p^2+t_q^2=t_r^2+t_s^2), cube_sum (z^3=T_x+T_y).
    /// Components may be rationals (p/q) where the equation admits them.
    Verify {
        equation: String,
        /// Component values; negative and rational entries are fine
        #[arg(allow_hyphen_values = true)]
        components: Vec<String>,
    },
    /// List or check the symbolic identity registry
    Identity {
        #[command(subcommand)]
        action: IdentityAction,
    },
    /// Run an exhaustive, exactly verified search
    ///
    /// Problems: SQ-SUM-TET, PAL-TRI, TZ-QUARTIC, POW-SUM-TET, SQPROD-TET.
    Search {
        problem: String,
        /// Exclusive upper bound on the searched indices
        #[arg(long)]
        bound: u64,
        /// Radix for PAL-TRI
        #[arg(long, default_value_t = 10)]
        base: u32,
        /// Exponent for POW-SUM-TET
        #[arg(long, default_value_t = 4)]
        exponent: u32,
        /// Keep only gcd(T_x, T_y) = 1 solutions (SQ-SUM-TET)
        #[arg(long)]
        coprime_only: bool,
        /// Keep only y > 2x + 2 solutions (SQPROD-TET)
        #[arg(long)]
        gap: bool,
        /// Worker threads = contiguous range partitions; results are
        /// identical for every value
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// Print every registered family descriptor
    List {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate verified solution records
    Gen {
        /// Family id, e.g. F-TET-CONSEC
        family: String,
        /// Index or inclusive index range: --n 3 or --n 1..4
        #[arg(long)]
        n: Option<String>,
        /// Named parameters: --params u=4 or --params S=2+3,U=2,V=2,m=3,n=1
        #[arg(long)]
        params: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum IdentityAction {
    /// Print the identity registry
    List {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check identities by id, or all of them
    Check {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_)
        | Error::Parse(_)
        | Error::UnknownFamily(_)
        | Error::UnknownIdentity(_)
        | Error::Resource(_)
        | Error::DenominatorZero(_) => 2,
        Error::Internal(_) => 1,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code_for(&err))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Families { action } => match action {
            FamiliesAction::List { format } => families_list(format),
            FamiliesAction::Gen { family, n, params, format } => {
                families_gen(&family, n.as_deref(), params.as_deref(), format)
            }
        },
        Command::Verify { equation, components } => verify(&equation, &components),
        Command::Identity { action } => match action {
            IdentityAction::List { format } => identity_list(format),
            IdentityAction::Check { ids, all, format } => identity_check(&ids, all, format),
        },
        Command::Search { problem, bound, base, exponent, coprime_only, gap, threads, format } => {
            run_search(&problem, bound, base, exponent, coprime_only, gap, threads, format)
        }
    }
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

fn families_list(format: Format) -> ExitCode {
    let fams = families::list_families();
    match format {
        Format::Json => {
            for d in &fams {
                println!("{}", d.to_json());
            }
        }
        Format::Csv => {
            println!("id,equation,domain,summary,notes");
            for d in &fams {
                println!(
                    "{},{},{},{},{}",
                    d.id,
                    csv_cell(&d.equation.render()),
                    csv_cell(d.domain),
                    csv_cell(d.summary),
                    csv_cell(&d.notes.join(" | "))
                );
            }
        }
        Format::Plain => {
            for d in &fams {
                println!("{:<14} {}", d.id, d.equation.render());
                println!("{:<14}   domain: {}", "", d.domain);
                println!("{:<14}   {}", "", d.summary);
                for note in d.notes {
                    println!("{:<14}   ledger: {}", "", note);
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn parse_index_spec(spec: &str) -> Result<(u64, u64), Error> {
    let parse_one = |s: &str| -> Result<u64, Error> {
        s.trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad index `{s}` in --n")))
    };
    match spec.split_once("..") {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let n = parse_one(spec)?;
            Ok((n, n))
        }
    }
}

fn parse_named_params(spec: &str) -> Result<BTreeMap<String, String>, Error> {
    let mut out = BTreeMap::new();
    for pair in spec.split(',') {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("bad parameter `{pair}` (expected key=value)")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn families_gen(
    family: &str,
    n: Option<&str>,
    named: Option<&str>,
    format: Format,
) -> ExitCode {
    let mut params = Params::default();
    if let Some(spec) = n {
        match parse_index_spec(spec) {
            Ok(range) => params.range = Some(range),
            Err(e) => return fail(e),
        }
    }
    if let Some(spec) = named {
        match parse_named_params(spec) {
            Ok(map) => params.named = map,
            Err(e) => return fail(e),
        }
    }
    let records = match families::generate(family, &params) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match format {
        Format::Json => {
            for rec in &records {
                println!("{}", rec.to_json());
            }
        }
        Format::Csv => print_records_csv(&records),
        Format::Plain => {
            for rec in &records {
                let comps: Vec<String> = rec
                    .solution
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let params: Vec<String> =
                    rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "{} [{}] {} ({}) verified={}",
                    rec.family,
                    params.join(" "),
                    comps.join(" "),
                    rec.equation.render(),
                    rec.verified
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn print_records_csv(records: &[SolutionRecord]) {
    let Some(first) = records.first() else {
        return;
    };
    let comp_names: Vec<&str> = first.solution.iter().map(|(k, _)| k.as_str()).collect();
    println!("family,params,{},equation,verified", comp_names.join(","));
    for rec in records {
        let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let comps: Vec<String> =
            rec.solution.iter().map(|(_, v)| v.to_string()).collect();
        println!(
            "{},{},{},{},{}",
            rec.family,
            csv_cell(&params.join(";")),
            comps.join(","),
            csv_cell(&rec.equation.render()),
            rec.verified
        );
    }
}

fn csv_cell(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn verify(equation_id: &str, raw_components: &[String]) -> ExitCode {
    // pow_sum consumes its exponent as the first component
    let (equation, component_args) = if equation_id == "pow_sum" {
        let Some((first, rest)) = raw_components.split_first() else {
            return fail(Error::Domain("pow_sum requires an exponent".into()));
        };
        let exponent: u32 = match first.parse() {
            Ok(e) => e,
            Err(_) => return fail(Error::Domain(format!("bad exponent `{first}`"))),
        };
        (Equation::PowSumTet(exponent), rest)
    } else {
        match Equation::from_cli_id(equation_id, None) {
            Ok(eq) => (eq, raw_components),
            Err(e) => return fail(e),
        }
    };
    let scalars: Result<Vec<Scalar>, Error> =
        component_args.iter().map(|c| Scalar::parse(c)).collect();
    let scalars = match scalars {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match equation.check_positional(&scalars) {
        Ok(verdict) if verdict.holds => {
            println!("verified");
            ExitCode::SUCCESS
        }
        Ok(verdict) => {
            match verdict.residual {
                Some(residual) => println!("FAILED: residual {residual}"),
                None => println!("FAILED"),
            }
            ExitCode::from(1)
        }
        Err(e) => fail(e),
    }
}

// ---------------------------------------------------------------------------
// identity
// ---------------------------------------------------------------------------

fn identity_list(format: Format) -> ExitCode {
    if format == Format::Csv {
        println!("id,description,expected");
    }
    for (id, description, expected) in families::identity::list_identities() {
        match format {
            Format::Json => println!(
                "{}",
                serde_json::json!({"id": id, "description": description, "expected": expected})
            ),
            Format::Csv => {
                println!("{},{},{}", id, csv_cell(&description), expected)
            }
            Format::Plain => println!("{id:<14} expected {expected:<22} {description}"),
        }
    }
    ExitCode::SUCCESS
}

fn identity_check(ids: &[String], all: bool, format: Format) -> ExitCode {
    if ids.is_empty() && !all {
        return fail(Error::Domain("pass identity ids or --all".into()));
    }
    let reports = if all {
        match families::check_all_identities() {
            Ok(r) => r,
            Err(e) => return fail(e),
        }
    } else {
        let mut acc = Vec::new();
        for id in ids {
            match families::check_identity(id) {
                Ok(r) => acc.push(r),
                Err(e) => return fail(e),
            }
        }
        acc
    };
    if format == Format::Csv {
        println!("id,status,expected,ok,cofactor_degree");
    }
    let mut all_ok = true;
    for report in &reports {
        let ok = report.matches_expected();
        all_ok &= ok;
        match format {
            Format::Json => println!("{}", report.to_json()),
            Format::Csv => {
                let degree = match &report.status {
                    IdentityStatus::DivisibilityOk { cofactor } => {
                        cofactor.total_degree().unwrap_or(0).to_string()
                    }
                    _ => String::new(),
                };
                println!(
                    "{},{},{},{},{}",
                    report.id,
                    report.status.label(),
                    report.expected.label(),
                    ok,
                    degree
                );
            }
            Format::Plain => {
                let detail = match &report.status {
                    IdentityStatus::DivisibilityOk { cofactor } => {
                        format!(" (cofactor total degree {})", cofactor.total_degree().unwrap_or(0))
                    }
                    IdentityStatus::NonzeroResidual { residual } => {
                        let mut r = residual.clone();
                        if r.len() > 72 {
                            r.truncate(72);
                            r.push_str("...");
                        }
                        format!(" (residual {r})")
                    }
                    IdentityStatus::Zero => String::new(),
                };
                println!(
                    "{:<14} {:<22} [{}]{}",
                    report.id,
                    report.status.label(),
                    if ok { "ok" } else { "UNEXPECTED" },
                    detail
                );
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn run_search(
    problem_id: &str,
    bound: u64,
    base: u32,
    exponent: u32,
    coprime_only: bool,
    gap: bool,
    threads: usize,
    format: Format,
) -> ExitCode {
    let id = match ProblemId::parse(problem_id) {
        Ok(id) => id,
        Err(e) => return fail(e),
    };
    let problem = SearchProblem {
        id,
        bound,
        base,
        exponent,
        coprime_only,
        require_gap: gap,
        partitions: threads,
    };
    let report = match search::run(&problem) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    eprintln!(
        "# {} bound {} -> {} solutions in {} ms",
        problem.id.as_str(),
        problem.bound,
        report.count,
        report.elapsed_ms
    );
    print_report(&report, format);
    ExitCode::SUCCESS
}

fn print_report(report: &SearchReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            let pal = report.problem.id == ProblemId::PalTri;
            if pal {
                println!("problem,bound,n,t");
            } else {
                println!("problem,bound,x,y,z,coprime");
            }
            for item in &report.solutions {
                match item {
                    SolutionItem::Index { n, value } => println!(
                        "{},{},{},{}",
                        report.problem.id.as_str(),
                        report.problem.bound,
                        n,
                        value
                    ),
                    SolutionItem::Pair { x, y, z, coprime } => println!(
                        "{},{},{},{},{},{}",
                        report.problem.id.as_str(),
                        report.problem.bound,
                        x,
                        y,
                        z,
                        coprime.map(|c| c.to_string()).unwrap_or_default()
                    ),
                }
            }
        }
        Format::Plain => {
            println!(
                "{} bound {}: {} solutions",
                report.problem.id.as_str(),
                report.problem.bound,
                report.count
            );
            for item in &report.solutions {
                match item {
                    SolutionItem::Index { n, value } => println!("  n = {n}, t = {value}"),
                    SolutionItem::Pair { x, y, z, coprime } => {
                        let flag = match coprime {
                            Some(true) => " [coprime]",
                            _ => "",
                        };
                        println!("  ({x}, {y}, {z}){flag}");
                    }
                }
            }
        }
    }
}
