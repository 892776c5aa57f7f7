use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use halg::axioms::{self, CheckOptions};
use halg::constructions::{CoefficientFamily, Construct};
use halg::search::{self, SearchSpec, Target};
use halg::structures::parse_matrix;
use halg::{parse_doc, serialize_doc, AlgebraDoc, CheckReport, Error};

const OK: u8 = 0;
const USAGE: u8 = 1;
const FAILED: u8 = 2;
const THEOREM: u8 = 3;

/// Matching Hom-algebraic structures: check, construct, search.
#[derive(Debug, Parser)]
#[command(name = "halg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a document against the identities of its kind.
    Check(CheckArgs),
    /// Run a construction and write the checked output document.
    Construct(ConstructArgs),
    /// Enumerate or sample structures over a prime field.
    Search(SearchArgs),
    /// List built-in fixtures, or print one.
    Catalog { name: Option<String> },
    /// Compare the two routes to pre-Lie products on a weight-zero Rota-Baxter document.
    Diagram { file: PathBuf },
}

#[derive(Debug, Args)]
struct CheckArgs {
    file: PathBuf,
    /// Also check derived consequences and report alternative readings.
    #[arg(long)]
    verbose: bool,
    /// Side condition on the twist map (endomorphism, multiplicative, commutes, centroid, invertible).
    #[arg(long = "condition", value_name = "TAG")]
    conditions: Vec<String>,
    #[command(flatten)]
    toggles: Toggles,
}

#[derive(Debug, Args)]
struct Toggles {
    /// Axiom reading switch, e.g. `dendriform-axiom3-twist=off`.
    #[arg(long = "axiom-toggle", value_name = "KEY=on|off")]
    axiom_toggles: Vec<String>,
}

impl Toggles {
    fn apply(&self, mut options: CheckOptions) -> Result<CheckOptions, String> {
        for t in &self.axiom_toggles {
            let (key, value) = t.split_once('=').ok_or_else(|| format!("malformed toggle {t:?}"))?;
            let on = match value {
                "on" => true,
                "off" => false,
                _ => return Err(format!("toggle value must be on or off, found {value:?}")),
            };
            match key {
                "dendriform-axiom3-twist" => options.dendriform_axiom3_twist = on,
                _ => return Err(format!("unknown toggle {key:?}")),
            }
        }
        Ok(options)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Recipe {
    YauTwist,
    Untwist,
    Derived,
    CentroidTwist,
    Commutator,
    PrelieCommutator,
    Collapse,
    DendriformTwist,
    DendriformSum,
    DendriformToPrelie,
    RbToDendriform,
    RbToTridendriform,
    RbToPrelie,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    recipe: Recipe,
    file: PathBuf,
    /// Output file; stdout when absent.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
    /// Parameters `key=value[,key=value...]`: p=<matrix JSON>, n=<int>, variant=<1|2>, coeffs=<JSON object>.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[command(flatten)]
    toggles: Toggles,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Rb,
    Endomorphism,
    CommutingTwist,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Base document; use --fixture for a built-in one.
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "rb")]
    target: TargetArg,
    #[arg(long, default_value_t = 1)]
    omega_size: usize,
    /// Comma-separated weights; a single weight applies to every label.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    weights: String,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    budget: Option<u64>,
    /// Sample instead of enumerating.
    #[arg(long, requires = "count")]
    seed: Option<u64>,
    #[arg(long, requires = "seed")]
    count: Option<usize>,
}

/// An error with its exit code; reports are printed to stdout.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
    report: Option<CheckReport>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
            report: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (code, report) = match e {
            Error::TheoremCheckFailed { report, .. } => (THEOREM, Some(report)),
            Error::PreconditionFailed { report, .. } => (FAILED, report),
            Error::SingularMap
            | Error::NonzeroWeight(_)
            | Error::KindMismatch { .. }
            | Error::DerivedOrderTooLarge { .. }
            | Error::UnsupportedVariant(_)
            | Error::BudgetExceeded { .. }
            | Error::NonFiniteField => (FAILED, None),
            _ => (USAGE, None),
        };
        Failure { code, message, report }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => check(&args),
        Command::Construct(args) => construct(&args),
        Command::Search(args) => run_search(&args),
        Command::Catalog { name } => catalog(name.as_deref()),
        Command::Diagram { file } => diagram(&file),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(report) = &f.report {
                println!("{}", report.to_json());
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_doc(path: &Path) -> Result<AlgebraDoc, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(parse_doc(&bytes)?)
}

fn report_outcome(report: &CheckReport) -> u8 {
    println!("{}", report.to_json());
    if report.passed() {
        OK
    } else {
        FAILED
    }
}

fn check(args: &CheckArgs) -> Outcome {
    let doc = read_doc(&args.file)?;
    let conditions = axioms::parse_conditions(&args.conditions)?;
    let base = if args.verbose {
        CheckOptions::verbose()
    } else {
        CheckOptions::default()
    };
    let options = args.toggles.apply(base).map_err(Failure::usage)?;
    let mut report = axioms::check_structure_with(&doc, &options);
    if !conditions.is_empty() {
        report = report.merge(axioms::check_side_conditions(&doc, &conditions));
    }
    Ok(report_outcome(&report))
}

/// Splits on commas outside brackets and braces.
fn split_params(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

#[derive(Debug, Default)]
struct Params {
    p: Option<Value>,
    n: Option<u32>,
    variant: Option<u8>,
    coeffs: Option<Value>,
}

impl Params {
    fn parse(raw: &[String]) -> Result<Self, Failure> {
        let mut params = Params::default();
        for part in raw.iter().flat_map(|r| split_params(r)) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Failure::usage(format!("parameter {part:?} is not key=value")))?;
            let json = |v: &str| {
                serde_json::from_str::<Value>(v).map_err(|e| Failure::usage(format!("parameter {key}: {e}")))
            };
            let int = |v: &str| v.trim().parse::<u32>().map_err(|e| Failure::usage(format!("parameter {key}: {e}")));
            match key.trim() {
                "p" => params.p = Some(json(value)?),
                "coeffs" => params.coeffs = Some(json(value)?),
                "n" => params.n = Some(int(value)?),
                "variant" => {
                    let v = int(value)?;
                    params.variant = Some(u8::try_from(v).map_err(|_| Failure::usage("variant out of range"))?);
                }
                other => return Err(Failure::usage(format!("unknown parameter {other:?}"))),
            }
        }
        Ok(params)
    }

    fn map(&self, doc: &AlgebraDoc) -> Result<halg::LinearMap, Failure> {
        let v = self.p.as_ref().ok_or_else(|| Failure::usage("missing parameter p"))?;
        Ok(parse_matrix(v, doc.field(), doc.dim(), "/param/p")?)
    }

    fn coefficients(&self, doc: &AlgebraDoc) -> Result<CoefficientFamily, Failure> {
        let obj = self
            .coeffs
            .as_ref()
            .ok_or_else(|| Failure::usage("missing parameter coeffs"))?
            .as_object()
            .ok_or_else(|| Failure::usage("coeffs must be a JSON object"))?;
        let mut out = Vec::with_capacity(obj.len());
        for (label, v) in obj {
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(Failure::usage(format!("coefficient for {label:?} must be an integer or string"))),
            };
            out.push((label.clone(), doc.field().parse_scalar(&text)?));
        }
        Ok(CoefficientFamily::new(out))
    }
}

fn construct(args: &ConstructArgs) -> Outcome {
    let doc = read_doc(&args.file)?;
    let params = Params::parse(&args.params)?;
    let options = args.toggles.apply(CheckOptions::default()).map_err(Failure::usage)?;
    let c = Construct {
        options,
        ..Construct::default()
    };
    let out = match args.recipe {
        Recipe::YauTwist => c.yau_twist(&doc, &params.map(&doc)?),
        Recipe::Untwist => c.untwist(&doc),
        Recipe::Derived => c.derived_algebra(&doc, params.n.unwrap_or(1), params.variant.unwrap_or(1)),
        Recipe::CentroidTwist => c.centroid_twist(&doc, &params.map(&doc)?, params.variant.unwrap_or(1)),
        Recipe::Commutator => c.commutator(&doc),
        Recipe::PrelieCommutator => c.prelie_commutator(&doc),
        Recipe::Collapse => c.collapse_family(&doc, &params.coefficients(&doc)?),
        Recipe::DendriformTwist => c.dendriform_twist(&doc, &params.map(&doc)?),
        Recipe::DendriformSum => c.dendriform_sum(&doc),
        Recipe::DendriformToPrelie => c.dendriform_to_prelie(&doc),
        Recipe::RbToDendriform => c.rb_to_dendriform(&doc),
        Recipe::RbToTridendriform => c.rb_to_tridendriform(&doc),
        Recipe::RbToPrelie => c.rb_to_prelie(&doc),
    }?;
    let text = serialize_doc(&out);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(OK)
}

fn run_search(args: &SearchArgs) -> Outcome {
    let base = match (&args.file, &args.fixture) {
        (Some(path), _) => read_doc(path)?,
        (None, Some(name)) => search::catalog_fixture(name)?,
        (None, None) => return Err(Failure::usage("search needs a base file or --fixture")),
    };
    let target = match args.target {
        TargetArg::Rb => Target::RbFamily,
        TargetArg::Endomorphism => Target::Endomorphism,
        TargetArg::CommutingTwist => Target::CommutingTwist,
    };
    let field = base.field();
    let mut weights = args
        .weights
        .split(',')
        .map(|w| field.parse_scalar(w))
        .collect::<halg::Result<Vec<_>>>()?;
    if weights.len() == 1 && args.omega_size > 1 {
        weights = vec![weights[0].clone(); args.omega_size];
    }
    if weights.len() != args.omega_size {
        return Err(Failure::usage(format!(
            "{} weights given for {} labels",
            weights.len(),
            args.omega_size
        )));
    }
    let mut spec = SearchSpec::new(base, target).with_weights(weights);
    spec.limit = args.limit;
    if let Some(b) = args.budget {
        spec.budget = b;
    }
    let docs = match (args.seed, args.count) {
        (Some(seed), Some(count)) => search::seeded_sample(&spec, seed, count)?,
        _ => {
            let res = search::enumerate(&spec)?;
            if res.truncated {
                eprintln!("note: output truncated at {} documents", res.docs.len());
            }
            res.docs
        }
    };
    for d in &docs {
        print!("{}", serialize_doc(d));
    }
    Ok(OK)
}

fn catalog(name: Option<&str>) -> Outcome {
    match name {
        Some(n) => print!("{}", serialize_doc(&search::catalog_fixture(n)?)),
        None => {
            for n in search::catalog_names() {
                println!("{n}");
            }
        }
    }
    Ok(OK)
}

fn diagram(file: &Path) -> Outcome {
    let doc = read_doc(file)?;
    let report = Construct::default().verify_diagram(&doc)?;
    Ok(report_outcome(&report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_split_outside_brackets() {
        assert_eq!(
            split_params("p=[[1,0],[0,1]],n=2,coeffs={\"a\":1,\"b\":2}"),
            vec!["p=[[1,0],[0,1]]", "n=2", "coeffs={\"a\":1,\"b\":2}"]
        );
        assert!(split_params("").is_empty());
    }

    #[test]
    fn params_reject_unknown_keys() {
        assert!(Params::parse(&["q=1".into()]).is_err());
        assert!(Params::parse(&["n".into()]).is_err());
        let p = Params::parse(&["n=0,variant=2".into()]).unwrap();
        assert_eq!((p.n, p.variant), (Some(0), Some(2)));
    }

    #[test]
    fn toggles_parse() {
        let t = Toggles {
            axiom_toggles: vec!["dendriform-axiom3-twist=off".into()],
        };
        assert!(!t.apply(CheckOptions::default()).unwrap().dendriform_axiom3_twist);
        let bad = Toggles {
            axiom_toggles: vec!["nope=on".into()],
        };
        assert!(bad.apply(CheckOptions::default()).is_err());
    }
}
