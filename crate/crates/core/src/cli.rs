//! The `symx` command line.
//!
//! Exit codes: 0 for success or a positive answer, 1 for a negative answer
//! of `validate` / `conjugate`, 2 for usage, input and type errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::enumeration::{enumerate_extendable, TSV_HEADER};
use crate::extendability::{candidate_types, check, classify_all, ExtError, ExtType, ExtendabilityVerdict};
use crate::invariants::{are_conjugate, conjugacy_invariant, same_cyclic_group, ConjugacyInvariant};
use crate::lens::{
    admits_genus3, admits_klein_bottle, admits_projective_plane, core_bounds, lens_homeomorphic,
    parity_obstruction, torsion_image, LensSpace,
};
use crate::orbifold::SymmetryDatum;

#[derive(Parser, Debug)]
#[command(
    name = "symx",
    version,
    about = "Periodic surface maps: conjugacy, extendability over S^3, enumeration"
)]
struct Cli {
    /// Append a human-readable summary after the machine-readable output.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct DatumInput {
    /// Datum JSON file.
    file: Option<PathBuf>,
    /// Inline datum JSON.
    #[arg(long)]
    datum: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TypeArg {
    Pp,
    Mm,
    Pm,
    Mp,
}

impl From<TypeArg> for ExtType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::Pp => ExtType::PP,
            TypeArg::Mm => ExtType::MM,
            TypeArg::Pm => ExtType::PM,
            TypeArg::Mp => ExtType::MP,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a datum against the validity contract.
    Validate(DatumInput),
    /// Print the conjugacy invariant and genus.
    Invariants(DatumInput),
    /// Decide whether two maps (or, with --group, their cyclic groups) are conjugate.
    Conjugate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        group: bool,
    },
    /// Extendability verdicts with witness parameters.
    Extendable {
        #[command(flatten)]
        input: DatumInput,
        #[arg(long = "type", value_enum)]
        kind: Option<TypeArg>,
    },
    /// Table of extendable classes at a genus.
    Enumerate {
        #[arg(long)]
        genus: u64,
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Lens-space queries.
    Lens {
        #[arg(long)]
        l: u64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// homeo:L,M | pp | klein | genus3 | torsion | core | parity:H
        #[arg(long)]
        query: String,
    },
}

/// A failure that maps to exit code 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

/// Parses and runs one invocation, writing results to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Fail(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_source(input: &DatumInput) -> Result<(String, String), Fail> {
    match (&input.file, &input.datum) {
        (Some(_), Some(_)) => Err(Fail("give either a datum file or --datum, not both".into())),
        (None, None) => Err(Fail("missing datum: give a JSON file or --datum".into())),
        (None, Some(json)) => Ok((json.clone(), "--datum".into())),
        (Some(path), None) => read_file(path),
    }
}

fn read_file(path: &PathBuf) -> Result<(String, String), Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))?;
    Ok((text, path.display().to_string()))
}

/// Parses a datum, naming the offending field on failure.
pub fn parse_datum(text: &str) -> Result<SymmetryDatum, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let obj = value.as_object().ok_or("datum must be a JSON object")?;
    for key in obj.keys() {
        if !["n", "orientable", "h", "handles", "boundary", "cones"].contains(&key.as_str()) {
            return Err(format!("unknown field `{key}`"));
        }
    }
    for key in ["n", "orientable", "h"] {
        if !obj.contains_key(key) {
            return Err(format!("missing field `{key}`"));
        }
    }
    if !obj["orientable"].is_boolean() {
        return Err("field `orientable`: expected true or false".into());
    }
    for key in ["n", "h"] {
        if !obj[key].is_u64() {
            return Err(format!("field `{key}`: expected a nonnegative integer"));
        }
    }
    for key in ["handles", "boundary", "cones"] {
        if let Some(v) = obj.get(key) {
            let ok = v.as_array().is_some_and(|xs| xs.iter().all(Value::is_u64));
            if !ok {
                return Err(format!(
                    "field `{key}`: expected an array of nonnegative integers"
                ));
            }
        }
    }
    serde_json::from_value(value).map_err(|e| e.to_string())
}

fn load(input: &DatumInput) -> Result<SymmetryDatum, Fail> {
    let (text, origin) = read_source(input)?;
    parse_datum(&text).map_err(|e| Fail(format!("{origin}: {e}")))
}

fn load_valid(input: &DatumInput) -> Result<SymmetryDatum, Fail> {
    let d = load(input)?;
    if let Err(violations) = d.validate() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Fail(format!("invalid datum: {}", list.join("; "))));
    }
    Ok(d)
}

#[derive(Serialize)]
struct InvariantReport {
    genus: u64,
    #[serde(flatten)]
    invariant: ConjugacyInvariant,
}

#[derive(Serialize)]
struct ExtendableReport {
    genus: u64,
    types: Vec<ExtType>,
    verdicts: Vec<ExtendabilityVerdict>,
}

fn json<T: Serialize>(v: &T) -> Result<String, Fail> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Fail> {
    let verbose = cli.verbose;
    match &cli.command {
        Command::Validate(input) => {
            let d = load(input)?;
            match d.validate() {
                Ok(()) => {
                    writeln!(out, "ok")?;
                    if verbose {
                        writeln!(out, "# {d}, genus {}", d.euler_genus()?)?;
                    }
                    Ok(0)
                }
                Err(violations) => {
                    for v in &violations {
                        writeln!(out, "{v}")?;
                    }
                    Ok(1)
                }
            }
        }
        Command::Invariants(input) => {
            let d = load_valid(input)?;
            let report = InvariantReport {
                genus: d.euler_genus()?,
                invariant: conjugacy_invariant(&d),
            };
            writeln!(out, "{}", json(&report)?)?;
            if verbose {
                writeln!(out, "# {d}")?;
            }
            Ok(0)
        }
        Command::Conjugate { a, b, group } => {
            let da = load_valid(&DatumInput {
                file: Some(a.clone()),
                datum: None,
            })?;
            let db = load_valid(&DatumInput {
                file: Some(b.clone()),
                datum: None,
            })?;
            let answer = if *group {
                same_cyclic_group(&da, &db)
            } else {
                are_conjugate(&da, &db)
            };
            writeln!(out, "{answer}")?;
            if verbose {
                let what = if *group { "cyclic groups" } else { "maps" };
                writeln!(
                    out,
                    "# {what} {} conjugate",
                    if answer { "are" } else { "are not" }
                )?;
            }
            Ok(if answer { 0 } else { 1 })
        }
        Command::Extendable { input, kind } => {
            let d = load_valid(input)?;
            let genus = d.euler_genus()?;
            let report = match kind {
                Some(kind) => {
                    let verdict = check(&d, (*kind).into()).map_err(type_error)?;
                    let types = if verdict.extendable {
                        vec![verdict.kind]
                    } else {
                        Vec::new()
                    };
                    ExtendableReport {
                        genus,
                        types,
                        verdicts: vec![verdict],
                    }
                }
                None => {
                    let types = classify_all(&d)?;
                    let verdicts = candidate_types(&d)
                        .into_iter()
                        .map(|k| check(&d, k))
                        .collect::<Result<Vec<_>, _>>()?;
                    ExtendableReport {
                        genus,
                        types,
                        verdicts,
                    }
                }
            };
            writeln!(out, "{}", json(&report)?)?;
            if verbose {
                let names: Vec<String> = report.types.iter().map(|t| t.to_string()).collect();
                writeln!(
                    out,
                    "# extendable in: {}",
                    if names.is_empty() {
                        "none".into()
                    } else {
                        names.join(", ")
                    }
                )?;
            }
            Ok(0)
        }
        Command::Enumerate {
            genus,
            kind,
            max_order,
            format,
        } => {
            let rows = enumerate_extendable(*genus, (*kind).into(), max_order.map(|n| 1..=n))?;
            match format {
                Format::Tsv => {
                    writeln!(out, "{TSV_HEADER}")?;
                    for row in &rows {
                        writeln!(out, "{}", row.tsv())?;
                    }
                }
                Format::Json => writeln!(out, "{}", json(&rows)?)?,
            }
            if verbose {
                writeln!(out, "# {} rows", rows.len())?;
            }
            Ok(0)
        }
        Command::Lens { l, m, query } => {
            let a = LensSpace::new(*l, *m)?;
            let answer = lens_query(a, query)?;
            writeln!(out, "{answer}")?;
            if verbose {
                writeln!(out, "# {a} {query}")?;
            }
            Ok(0)
        }
    }
}

fn type_error(e: ExtError) -> Fail {
    Fail(e.to_string())
}

fn lens_query(a: LensSpace, query: &str) -> Result<String, Fail> {
    let (name, arg) = match query.split_once(':') {
        Some((name, arg)) => (name, Some(arg)),
        None => (query, None),
    };
    let answer = match (name, arg) {
        ("homeo", Some(arg)) => {
            let (l2, m2) = arg
                .split_once(',')
                .ok_or_else(|| Fail(format!("query `{query}`: expected homeo:L,M")))?;
            let l2: u64 = l2
                .trim()
                .parse()
                .map_err(|_| Fail(format!("query `{query}`: bad L")))?;
            let m2: i64 = m2
                .trim()
                .parse()
                .map_err(|_| Fail(format!("query `{query}`: bad M")))?;
            lens_homeomorphic(a, LensSpace::new(l2, m2)?).to_string()
        }
        ("parity", Some(arg)) => {
            let h: u64 = arg
                .trim()
                .parse()
                .map_err(|_| Fail(format!("query `{query}`: bad genus")))?;
            parity_obstruction(a, h).to_string()
        }
        ("pp", None) => admits_projective_plane(a).to_string(),
        ("klein", None) => admits_klein_bottle(a).to_string(),
        ("genus3", None) => admits_genus3(a).to_string(),
        ("torsion", None) => torsion_image(a)?.value().to_string(),
        ("core", None) => serde_json::to_string(&core_bounds(a))?,
        _ => return Err(Fail(format!("unknown query `{query}`"))),
    };
    Ok(answer)
}
