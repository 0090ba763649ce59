use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cherbolic::{
    list_text, parse_case, polygon_document, render_svg, to_json, verify_cases, word_report, write_atomic, CaseReport,
    CliError, KindFilter, RunConfig, TOL_ALG_ENV,
};
use cherbolic_core::domains::CaseId;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cherbolic", version, about = "Complex hyperbolic triangle groups and their C-Fuchsian subgroups")]
struct Cli {
    /// Relative tolerance for matrix identities.
    #[arg(long, global = true, env = TOL_ALG_ENV)]
    tol_alg: Option<f64>,
    /// Allowed disagreement between the two vertex angle computations.
    #[arg(long, global = true)]
    tol_angle: Option<f64>,
    /// Largest order searched when measuring element orders.
    #[arg(long, global = true)]
    max_order: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Sporadic,
    Thompson,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog families, their lattice values of p and the polygon cases.
    List {
        #[arg(long, value_enum)]
        family: Option<FamilyKind>,
    },
    /// Classify a word and measure its order.
    Word {
        family: String,
        p: u32,
        word: String,
        /// Write JSON to PATH ("-" or no value: stdout).
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<PathBuf>,
    },
    /// Verify the ambient presentation, the polygon and the subgroup
    /// presentation of a case, or of every case with `all`.
    Verify {
        case: String,
        p: Option<u32>,
        /// Write the JSON report to PATH ("-" or no value: stdout). With
        /// `all` and an existing directory, one file per case.
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<PathBuf>,
    },
    /// Emit a case's polygon as a JSON document and/or an SVG figure.
    Polygon {
        case: String,
        p: u32,
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn emit(path: &Path, contents: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        print!("{contents}");
        Ok(())
    } else {
        write_atomic(path, contents)
    }
}

fn summary(r: &CaseReport) -> String {
    let tag = |b: bool| if b { "pass" } else { "FAIL" };
    let ambient = r.ambient_presentation.iter().all(|c| c.pass()) && !r.ambient_presentation.is_empty();
    let mut line = format!(
        "{:<10} {}  ambient {}  poincare {}  subgroup {}",
        r.case,
        tag(r.pass),
        tag(ambient),
        tag(r.poincare.pass),
        tag(r.subgroup_presentation.pass)
    );
    if let Some(e) = r.error.as_ref().or(r.poincare.error.as_ref()).or(r.subgroup_presentation.error.as_ref()) {
        line.push_str(&format!("  ({e})"));
    }
    line
}

fn verify(case: &str, p: Option<u32>, json: Option<PathBuf>, cfg: &RunConfig) -> Result<bool, CliError> {
    let all = case.eq_ignore_ascii_case("all");
    let cases = match (all, p) {
        (true, None) => CaseId::all(),
        (false, Some(p)) => vec![parse_case(case, p)?],
        (true, Some(_)) => return Err(CliError::InvalidConfig("`verify all` takes no p".into())),
        (false, None) => return Err(CliError::InvalidConfig(format!("missing p for {case}"))),
    };
    let reports = verify_cases(&cases, cfg);
    let pass = reports.iter().all(|r| r.pass);
    match json {
        Some(dir) if all && dir.is_dir() => {
            for r in &reports {
                write_atomic(&dir.join(format!("{}.json", r.case.replace(':', "_"))), &to_json(r)?)?;
            }
        }
        Some(path) if all => emit(&path, &to_json(&reports)?)?,
        Some(path) => emit(&path, &to_json(&reports[0])?)?,
        None => {
            for r in &reports {
                println!("{}", summary(r));
            }
        }
    }
    Ok(pass)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::new(cli.tol_alg, cli.tol_angle, cli.max_order)?;
    match cli.command {
        Command::List { family } => {
            let filter = match family {
                None => KindFilter::All,
                Some(FamilyKind::Sporadic) => KindFilter::Sporadic,
                Some(FamilyKind::Thompson) => KindFilter::Thompson,
            };
            print!("{}", list_text(filter));
            Ok(true)
        }
        Command::Word { family, p, word, json } => {
            let r = word_report(&family, p, &word, &cfg)?;
            match json {
                Some(path) => emit(&path, &to_json(&r)?)?,
                None => print!("{}", r.text()),
            }
            Ok(true)
        }
        Command::Verify { case, p, json } => verify(&case, p, json, &cfg),
        Command::Polygon { case, p, json, svg } => {
            let doc = polygon_document(parse_case(&case, p)?, &cfg)?;
            if let Some(path) = &svg {
                emit(path, &render_svg(&doc))?;
            }
            match json {
                Some(path) => emit(&path, &to_json(&doc)?)?,
                None if svg.is_none() => emit(Path::new("-"), &to_json(&doc)?)?,
                None => {}
            }
            Ok(doc.verdicts.pass)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let body = serde_json::json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            println!("{body}");
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
