//! Command-line driver. [`run`] parses arguments, dispatches to the library
//! and returns the exit code together with the text for stdout:
//!
//! * `0`: success, JSON (or DOT for `crystal --dot`);
//! * `1`: domain error (the input is well formed but, for example, not a
//!   Kleshchev multipartition), reported as `{"error": kind, "message": …}`;
//! * `2`: malformed input, reported the same way.

mod word;

use std::ffi::OsString;
use std::fs;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use mullineux_core::affine_weyl::w0_word;
use mullineux_core::crystal::{enumerate, EnumerateOptions, NodeOrder, DEFAULT_LAYER_CAP};
use mullineux_core::export::{crystal_dot, crystal_json};
use mullineux_core::mullineux::{mullineux, mullineux_infinity, verify_sweep};
use mullineux_core::symbols::psi_word;
use mullineux_core::{m1, Error, Modulus, Multicharge, Multipartition, Partition};

pub use word::{parse_weyl_word, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "mullineux",
    version,
    about = "Mullineux involution on Kleshchev multipartitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Uglov,
    Kleshchev,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Level-one Mullineux map of an e-regular partition.
    M1 {
        #[arg(long)]
        e: String,
        /// Partition as JSON, e.g. [4,1].
        #[arg(long)]
        partition: String,
    },
    /// Mullineux image of a Kleshchev multipartition.
    Mullineux {
        /// Finite modulus, or `inf`.
        #[arg(long)]
        e: String,
        /// Residue class as JSON (the integer charge when e = inf).
        #[arg(long, alias = "charge")]
        charge_class: String,
        /// Multipartition as JSON, e.g. [[4],[3],[1,1,1]].
        #[arg(long)]
        mp: String,
        /// Rank used for the asymptotic bounds (defaults to the rank of mp).
        #[arg(long)]
        n: Option<usize>,
        /// Print every pipeline stage.
        #[arg(long)]
        trace: bool,
    },
    /// Apply the crystal isomorphism of a Weyl word.
    Psi {
        #[arg(long)]
        e: String,
        /// Integer multicharge as JSON.
        #[arg(long)]
        charge: String,
        /// Word such as "a1^8 a2^8 w0"; the last token acts first.
        #[arg(long)]
        word: String,
        #[arg(long)]
        mp: String,
    },
    /// Enumerate a crystal with its edges, as JSON or DOT.
    Crystal {
        #[command(flatten)]
        graph_args: CrystalArgs,
        #[arg(long)]
        dot: bool,
        /// Write the output to this file instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Enumerate the vertices of a crystal, layer by layer.
    Enumerate {
        #[command(flatten)]
        graph_args: CrystalArgs,
    },
    /// Compare the pipeline with the crystal-path oracle over every class.
    Verify {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        e: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
struct CrystalArgs {
    #[arg(long, value_enum)]
    order: Order,
    /// Multicharge (Uglov) or residue class (Kleshchev) as JSON.
    #[arg(long, alias = "charge")]
    charge_class: String,
    #[arg(long)]
    e: String,
    #[arg(long)]
    nmax: usize,
    /// Maximum number of vertices per layer.
    #[arg(long, default_value_t = DEFAULT_LAYER_CAP)]
    cap: usize,
}

enum Failure {
    Usage(String),
    Malformed(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::MalformedInput(_)
            | Error::InvalidModulus(_)
            | Error::LevelMismatch { .. }
            | Error::IndexOutOfRange { .. } => Failure::Malformed(err.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl Failure {
    fn report(self) -> (i32, String) {
        let (code, kind, message) = match self {
            Failure::Usage(m) => (2, "UsageError", m),
            Failure::Malformed(m) => (2, "MalformedInput", m),
            Failure::Domain(err) => (1, err.kind(), err.to_string()),
            Failure::Io(m) => (1, "IoError", m),
        };
        (code, json!({ "error": kind, "message": message }).to_string())
    }
}

type Outcome = Result<(i32, String), Failure>;

fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|err| Failure::Malformed(format!("{what}: {err}")))
}

fn modulus(text: &str) -> Result<Modulus, Failure> {
    Ok(Modulus::from_str(text)?)
}

fn charges(text: &str, e: Modulus) -> Result<Multicharge, Failure> {
    Ok(Multicharge::new(parse_json("charge", text)?, e)?)
}

fn multipartition(text: &str) -> Result<Multipartition, Failure> {
    parse_json("multipartition", text)
}

fn stage(name: &str, charge: &[i64], mp: &Multipartition) -> Value {
    json!({ "stage": name, "charge": charge, "mp": mp })
}

fn cmd_m1(e: &str, partition: &str) -> Outcome {
    let p: Partition = parse_json("partition", partition)?;
    let image = m1(&p, modulus(e)?)?;
    Ok((0, json!(image).to_string()))
}

fn cmd_mullineux(e: &str, class: &str, mp: &str, n: Option<usize>, trace: bool) -> Outcome {
    let e = modulus(e)?;
    let s = charges(class, e)?;
    let mp = multipartition(mp)?;
    if e.is_infinite() {
        let image = mullineux_infinity(&mp, &s)?;
        if !trace {
            return Ok((0, json!(image).to_string()));
        }
        let conj = Multipartition::new(mp.components().iter().map(Partition::conjugate).collect())?;
        let neg: Vec<i64> = s.charges.iter().map(|x| -x).collect();
        let end: Vec<i64> = s.twisted().charges;
        let out = json!({
            "image": image,
            "word": w0_word(mp.level()).to_string(),
            "trace": [stage("conjugate", &neg, &conj), stage("w0", &end, &image)],
        });
        return Ok((0, out.to_string()));
    }
    let r = mullineux(&mp, &s, n)?;
    if !trace {
        return Ok((0, json!(r.image).to_string()));
    }
    let stages: Vec<Value> = r
        .trace
        .iter()
        .map(|st| stage(st.name, &st.charge.charges, &st.mp))
        .collect();
    let out = json!({
        "image": r.image,
        "source_class": r.source_class.charges,
        "target_class": r.target_class.charges,
        "exponents": r.exponents,
        "eta": r.eta,
        "trace": stages,
    });
    Ok((0, out.to_string()))
}

fn cmd_psi(e: &str, charge: &str, word: &str, mp: &str) -> Outcome {
    let s = charges(charge, modulus(e)?)?;
    let mp = multipartition(mp)?;
    let w = parse_weyl_word(word, s.level()).map_err(|err| Failure::Malformed(format!("word {err}")))?;
    let (image, end) = psi_word(&mp, &s, &w)?;
    Ok((0, json!({ "mp": image, "charge": end.charges }).to_string()))
}

fn build_order(graph_args: &CrystalArgs) -> Result<NodeOrder, Failure> {
    let s = charges(&graph_args.charge_class, modulus(&graph_args.e)?)?;
    Ok(match graph_args.order {
        Order::Uglov => NodeOrder::uglov(s),
        Order::Kleshchev => NodeOrder::kleshchev(s),
    })
}

fn cmd_crystal(graph_args: &CrystalArgs, dot: bool, out: Option<&str>) -> Outcome {
    let ord = build_order(graph_args)?;
    let g = enumerate(
        &ord,
        graph_args.nmax,
        EnumerateOptions {
            with_edges: true,
            layer_cap: graph_args.cap,
        },
    )?;
    let text = if dot {
        crystal_dot(&g)
    } else {
        crystal_json(&g).to_string()
    };
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|err| Failure::Io(format!("{path}: {err}")))?;
            Ok((0, String::new()))
        }
        None => Ok((0, text)),
    }
}

fn cmd_enumerate(graph_args: &CrystalArgs) -> Outcome {
    let ord = build_order(graph_args)?;
    let g = enumerate(
        &ord,
        graph_args.nmax,
        EnumerateOptions {
            with_edges: false,
            layer_cap: graph_args.cap,
        },
    )?;
    Ok((0, crystal_json(&g).to_string()))
}

fn cmd_verify(l: usize, e: &str, nmax: usize, as_json: bool) -> Outcome {
    let e = modulus(e)?.require_finite()?;
    let report = verify_sweep(l, e, nmax)?;
    let code = if report.is_clean() { 0 } else { 1 };
    if as_json {
        return Ok((code, serde_json::to_string(&report).expect("report serializes")));
    }
    let mut text = format!(
        "l={} e={} nmax={}: {} classes, {} multipartitions, {} mismatches, {} involution failures, \
         {} membership failures, {} stage-one failures ({} ms)",
        report.l,
        report.e,
        report.n_max,
        report.classes,
        report.cases,
        report.mismatches.len(),
        report.involution_failures.len(),
        report.membership_failures.len(),
        report.stage_one_failures.len(),
        report.elapsed_ms
    );
    for m in report.mismatches.iter().take(10) {
        text.push_str(&format!(
            "\n  class {:?} {}: pipeline {} oracle {}",
            m.class, m.mp, m.pipeline, m.oracle
        ));
    }
    Ok((code, text))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, err.to_string()),
                _ => Failure::Usage(err.to_string().trim_end().to_string()).report(),
            };
        }
    };
    let outcome = match &cli.command {
        Command::M1 { e, partition } => cmd_m1(e, partition),
        Command::Mullineux {
            e,
            charge_class,
            mp,
            n,
            trace,
        } => cmd_mullineux(e, charge_class, mp, *n, *trace),
        Command::Psi { e, charge, word, mp } => cmd_psi(e, charge, word, mp),
        Command::Crystal { graph_args, dot, out } => cmd_crystal(graph_args, *dot, out.as_deref()),
        Command::Enumerate { graph_args } => cmd_enumerate(graph_args),
        Command::Verify { l, e, nmax, json } => cmd_verify(*l, e, *nmax, *json),
    };
    outcome.unwrap_or_else(Failure::report)
}
