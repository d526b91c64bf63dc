//! Command layer for the `weak-sperner` binary.
//!
//! Every command returns an [`Outcome`] with the process exit code and the
//! text for stdout; the binary only prints and exits. Exit codes: 0 verified,
//! 1 a mathematical claim failed, 2 input error, 3 budget refusal.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::coxeter::{self, CoxeterSpec, CoxeterType, GROUP_CAP};
use crate::error::{Error, Result};
use crate::exactlinalg::{determinant_exact, nonsingular_certificate, IntMatrix, Verdict};
use crate::poset::build_weak_order;
use crate::sl2::{raising_power_block, verify_sl2, Sl2Triple};
use crate::sperner::{certify_with, Method, SpernerCertificate, ORACLE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Version of the JSON documents emitted here. Changes are additive only.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "weak-sperner", version, about = "sl2-action and Sperner certificates for weak orders")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check [H,U]=2U, [H,D]=-2D and [U,D]=H exactly on W_n.
    VerifySl2 {
        /// Size of the symmetric group S_n.
        #[arg(long)]
        n: usize,
        /// Allow n = 7.
        #[arg(long)]
        large: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the strong Sperner and Peck properties of a weak order.
    Certify {
        /// Without --type: W_n for the symmetric group S_n. With --type: the Coxeter rank.
        #[arg(long)]
        n: Option<usize>,
        /// Coxeter family letter (A, B, D); combined with --n as the rank.
        #[arg(long = "type")]
        family: Option<String>,
        /// Coxeter type string such as A3, B3, D4, I2:7, H3, F4, H4.
        #[arg(long)]
        coxeter: Option<String>,
        /// Coxeter matrix file: rank on the first line, then the upper triangle.
        #[arg(long)]
        coxeter_file: Option<PathBuf>,
        /// Cross-check every k against the brute-force oracle (posets up to 24 elements).
        #[arg(long)]
        with_oracle: bool,
        /// Allow H4 (14400 elements).
        #[arg(long)]
        h4: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify that every raising-power block U^(r-2k) is invertible.
    Invertibility {
        #[arg(long)]
        n: usize,
        /// Compute exact determinants instead of modular certificates.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Hasse diagram or an operator as DOT or triplet text.
    Export {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Hasse,
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Triplet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Budget(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Runs one command.
pub fn run(config: &RunConfig) -> Outcome {
    let result = match &config.command {
        Command::VerifySl2 { n, large, out } => cmd_verify_sl2(*n, *large, out.as_deref()),
        Command::Certify {
            n,
            family,
            coxeter,
            coxeter_file,
            with_oracle,
            h4,
            seed,
            out,
        } => resolve_target(*n, family.as_deref(), coxeter.as_deref(), coxeter_file.as_deref())
            .and_then(|t| cmd_certify_sperner(&t, *with_oracle, *h4, *seed, out.as_deref())),
        Command::Invertibility { n, exact, seed, out } => {
            cmd_invertibility(*n, *exact, *seed, out.as_deref())
        }
        Command::Export { n, which, format, out } => cmd_export(*n, *which, *format, out.as_deref()),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

fn versions() -> serde_json::Value {
    json!({ "weak-sperner": env!("CARGO_PKG_VERSION") })
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<String> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    emit_text(text, out)
}

/// Writes to `out` atomically (temporary file then rename) or returns the
/// text for stdout.
fn emit_text(text: String, out: Option<&Path>) -> Result<String> {
    match out {
        None => Ok(text),
        Some(path) => {
            let dir = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path).map_err(|e| Error::Io(e.error))?;
            Ok(String::new())
        }
    }
}

pub fn cmd_verify_sl2(n: usize, large: bool, out: Option<&Path>) -> Result<Outcome> {
    if n > 7 || (n == 7 && !large) {
        return Err(Error::Budget(format!(
            "verify-sl2 supports n <= 6, or n = 7 with --large (got n = {n})"
        )));
    }
    let order = build_weak_order(n)?;
    let triple = Sl2Triple::new(&order);
    let report = verify_sl2(&triple)?;
    let holds = report.holds();
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "command": "verify-sl2",
        "n": n,
        "dimension": report.dimension,
        "relations": report.relations,
        "holds": holds,
        "versions": versions(),
    });
    let code = if holds { EXIT_OK } else { EXIT_CLAIM_FAILED };
    Ok(Outcome::new(code, emit(&doc, out)?))
}

/// What `certify` runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// `W_n` built from permutations.
    SymmetricGroup(usize),
    Coxeter(CoxeterSpec),
}

pub fn resolve_target(
    n: Option<usize>,
    family: Option<&str>,
    coxeter: Option<&str>,
    coxeter_file: Option<&Path>,
) -> Result<Target> {
    match (n, family, coxeter, coxeter_file) {
        (Some(n), None, None, None) => Ok(Target::SymmetricGroup(n)),
        (Some(rank), Some(f), None, None) => Ok(Target::Coxeter(format!("{f}{rank}").parse()?)),
        (None, None, Some(s), None) => Ok(Target::Coxeter(s.parse()?)),
        (None, None, None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok(Target::Coxeter(CoxeterSpec::parse_matrix_text(&text)?))
        }
        _ => Err(Error::Input(
            "give exactly one of --n, --type with --n, --coxeter, --coxeter-file".into(),
        )),
    }
}

#[derive(Serialize)]
struct PerK {
    k: usize,
    a_k: Option<usize>,
    rank_sum: usize,
    equal: Option<bool>,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<usize>,
}

pub fn cmd_certify_sperner(
    target: &Target,
    with_oracle: bool,
    h4: bool,
    seed: u64,
    out: Option<&Path>,
) -> Result<Outcome> {
    let (poset, target_doc) = match target {
        Target::SymmetricGroup(n) => {
            let order = build_weak_order(*n)?;
            let doc = json!({
                "symmetric_group_n": n,
                "coxeter": if *n >= 2 { format!("A{}", n - 1) } else { "trivial".into() },
            });
            (order.poset().clone(), doc)
        }
        Target::Coxeter(spec) => {
            if spec.components().contains(&CoxeterType::H4) && !h4 {
                return Err(Error::Budget("H4 (14400 elements) needs --h4".into()));
            }
            let group = coxeter::enumerate_group(spec, GROUP_CAP)?;
            if group.len() as u128 != spec.order() {
                return Err(Error::Input(format!(
                    "enumerated {} elements, expected {}",
                    group.len(),
                    spec.order()
                )));
            }
            let doc = json!({
                "symmetric_group_n": spec.symmetric_group_n(),
                "coxeter": spec.label(),
                "coxeter_rank": spec.rank(),
                "group_order": group.len(),
            });
            (group.weak_order()?, doc)
        }
    };
    let cert: SpernerCertificate = certify_with(&poset, Method::Flow);
    let oracle = (with_oracle && poset.len() <= ORACLE_CAP).then(|| certify_with(&poset, Method::Oracle));
    let per_k: Vec<PerK> = cert
        .per_k
        .iter()
        .enumerate()
        .map(|(i, rec)| PerK {
            k: rec.k,
            a_k: rec.a_k,
            rank_sum: rec.rank_sum,
            equal: rec.equal,
            method: rec.method,
            oracle: oracle.as_ref().and_then(|o| o.per_k[i].a_k),
        })
        .collect();
    let oracle_agrees = oracle.as_ref().map(|o| o.maxima() == cert.maxima());
    let mut doc = json!({
        "schema": SCHEMA_VERSION,
        "command": "certify",
        "poset": cert.poset,
        "target": target_doc,
        "n_elements": cert.n_elements,
        "rank_sizes": cert.profile.sizes,
        "rank_symmetric": cert.profile.symmetric,
        "rank_unimodal": cert.profile.unimodal,
        "per_k": per_k,
        "strongly_sperner": cert.strongly_sperner,
        "peck": cert.peck,
        "seed": seed,
        "versions": versions(),
    });
    if let Some(agree) = oracle_agrees {
        doc["oracle_agrees"] = json!(agree);
    } else if with_oracle {
        doc["oracle_agrees"] = json!(null);
        doc["oracle_note"] = json!(format!("oracle skipped: more than {ORACLE_CAP} elements"));
    }
    if matches!(target, Target::Coxeter(s) if s.symmetric_group_n().is_none()) {
        doc["note"] = json!(
            "the sl2-action (U, D) is defined only for the symmetric group; this certificate comes from max-k-antichain computations alone"
        );
    }
    let ok = cert.strongly_sperner && cert.peck && oracle_agrees != Some(false);
    let code = if ok { EXIT_OK } else { EXIT_CLAIM_FAILED };
    Ok(Outcome::new(code, emit(&doc, out)?))
}

pub fn cmd_invertibility(n: usize, exact: bool, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    if n > 6 {
        return Err(Error::Budget(format!("invertibility supports n <= 6 (got n = {n})")));
    }
    let order = build_weak_order(n)?;
    let triple = Sl2Triple::new(&order);
    let r = triple.top_rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut all_nonsingular = true;
    for k in 0..r.div_ceil(2) {
        let block = raising_power_block(&triple, k)?;
        let row = if exact {
            let det = determinant_exact(&block)?;
            let nonsingular = det != 0.into();
            all_nonsingular &= nonsingular;
            json!({
                "k": k,
                "power": r - 2 * k,
                "dimension": block.rows(),
                "verdict": if nonsingular { Verdict::Nonsingular } else { Verdict::Singular },
                "method": "exact",
                "determinant": det.to_string(),
            })
        } else {
            let cert = nonsingular_certificate(&block, &mut rng)?;
            all_nonsingular &= cert.verdict == Verdict::Nonsingular;
            let mut v = serde_json::to_value(&cert)?;
            v["k"] = json!(k);
            v["power"] = json!(r - 2 * k);
            v
        };
        rows.push(row);
    }
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "command": "invertibility",
        "n": n,
        "top_rank": r,
        "blocks": rows,
        "all_nonsingular": all_nonsingular,
        "seed": seed,
        "versions": versions(),
    });
    let code = if all_nonsingular { EXIT_OK } else { EXIT_CLAIM_FAILED };
    Ok(Outcome::new(code, emit(&doc, out)?))
}

pub fn cmd_export(n: usize, which: Which, format: Format, out: Option<&Path>) -> Result<Outcome> {
    let limit = match format {
        Format::Dot => 6,
        Format::Triplet => 7,
    };
    if n > limit {
        return Err(Error::Budget(format!("{format:?} export supports n <= {limit} (got n = {n})")));
    }
    let order = build_weak_order(n)?;
    let text = match (which, format) {
        (Which::Hasse, Format::Dot) => order.poset().export_dot(None)?,
        (Which::U, Format::Dot) => {
            let u = crate::sl2::build_u(&order);
            let labels: BTreeMap<(usize, usize), i64> = u
                .iter()
                .map(|(row, col, v)| ((col, row), i64::try_from(v).expect("small label")))
                .collect();
            order.poset().export_dot(Some(&labels))?
        }
        (Which::D, Format::Dot) => {
            let d = crate::sl2::build_d(&order);
            let edges: Vec<(usize, usize, i64)> = d
                .iter()
                .map(|(row, col, v)| (col, row, i64::try_from(v).expect("small label")))
                .collect();
            order.poset().export_dot_edges(&edges)?
        }
        (_, Format::Triplet) => {
            let m = match which {
                Which::Hasse => hasse_matrix(&order),
                Which::U => crate::sl2::build_u(&order),
                Which::D => crate::sl2::build_d(&order),
            };
            m.to_triplet_text(&format!("basis=weak_order({n}) order=lex"))
        }
    };
    Ok(Outcome::new(EXIT_OK, emit_text(text, out)?))
}

fn hasse_matrix(order: &crate::poset::WeakOrder) -> IntMatrix {
    let size = order.len();
    let triplets = order
        .poset()
        .cover_pairs()
        .map(|(lo, hi)| (hi, lo, 1.into()))
        .collect::<Vec<_>>();
    IntMatrix::from_triplets(size, size, triplets).expect("covers are in range")
}
