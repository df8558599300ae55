//! Subcommands and exit codes.
//!
//! Exit codes: 0 success or free, 1 not free, 2 input error,
//! 3 undetermined, 4 structural precondition failure.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Parser, Subcommand};
use multiarr_core::coxeter::{classify, parse_root_system, zero_one_multiplicities, RootSystem, MAX_EXHAUSTIVE_ROOTS};
use multiarr_core::freeness::{extension_free, is_free_multi, is_free_multi_with, FreenessCertificate, FreenessOptions};
use multiarr_core::lattice::char_poly;
use multiarr_core::structure::{
    decone_extension, extend, find_positive_system, first_parity_violation, PositiveSystem,
};
use multiarr_core::{Error as CoreError, Multiarrangement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::builtins::BUILTINS;
use crate::format::{read_input, ArrangementDoc, InputError, Loaded};
use crate::report::{certificate_json, chi_json, interpolation_json};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NON_FREE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNDETERMINED: u8 = 3;
pub const EXIT_STRUCTURE: u8 = 4;

/// Environment variable holding the worker count for parallel subcommands.
pub const THREADS_VAR: &str = "MULTIARR_THREADS";

/// Upper bound on the multiplicities visited by `scan-extendable`.
const MAX_SCAN: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "multiarr", version, about = "Exact computations with hyperplane multiarrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial of the underlying arrangement.
    Chi {
        /// JSON file, builtin name, or `-` for stdin.
        input: String,
    },
    /// Freeness certificate of a central multiarrangement.
    Free {
        input: String,
        /// Comma separated multiplicities overriding those in the input.
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<u32>>,
        /// Highest degree of D(A, m) to examine (default: |m|).
        #[arg(long)]
        cutoff: Option<u32>,
        /// Bound on candidate bases tried per verdict.
        #[arg(long, default_value_t = 64)]
        max_combinations: usize,
        /// Leave the basis polynomials out of the certificate.
        #[arg(long)]
        no_basis: bool,
    },
    /// The extension of a multiarrangement, as a simple arrangement one dimension up.
    Extend {
        input: String,
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<u32>>,
        /// Emit the affine slice at the new coordinate equal to one instead.
        #[arg(long)]
        decone: bool,
        /// Search for positive-system scalings instead of using those in the input.
        #[arg(long)]
        find_positive_system: bool,
    },
    /// Shi/Catalan interpolation report for {0,1} multiplicities on a root system.
    Interp {
        /// Root system type, `A` or `D`.
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Classify this many random multiplicities instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Experiment: are free multiplicities on a root system restrictions of
    /// their free canonical extension?
    ScanExtendable {
        #[arg(long = "type", default_value = "A")]
        kind: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 1)]
        min_mult: u32,
        #[arg(long, default_value_t = 2)]
        max_mult: u32,
    },
    /// List the builtin arrangements.
    Builtins,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Structure(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Structure(_) => EXIT_STRUCTURE,
            CliError::Core(CoreError::NotLocallyA2(_) | CoreError::NotPositiveSystem(_)) => EXIT_STRUCTURE,
            _ => EXIT_INPUT,
        }
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut impl Write, err: &mut impl Write) -> Result<u8, CliError> {
    match cmd {
        Command::Chi { input } => cmd_chi(&input, out),
        Command::Free { input, mult, cutoff, max_combinations, no_basis } => {
            let opts = FreenessOptions { cutoff, max_combinations };
            cmd_free(&input, mult, &opts, !no_basis, out)
        }
        Command::Extend { input, mult, decone, find_positive_system } => {
            cmd_extend(&input, mult, decone, find_positive_system, out, err)
        }
        Command::Interp { kind, rank, k, sample, seed } => cmd_interp(&kind, rank, k, sample, seed, out),
        Command::ScanExtendable { kind, rank, min_mult, max_mult } => {
            cmd_scan_extendable(&kind, rank, min_mult, max_mult, out)
        }
        Command::Builtins => {
            for (name, about) in BUILTINS {
                writeln!(out, "{name:<26} {about}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn load(input: &str, mult: Option<Vec<u32>>) -> Result<Loaded, CliError> {
    let mut loaded = read_input(input)?.load()?;
    if let Some(m) = mult {
        if m.len() != loaded.arrangement.len() {
            return Err(CliError::Usage(format!(
                "--mult has {} entries, arrangement has {} hyperplanes",
                m.len(),
                loaded.arrangement.len()
            )));
        }
        loaded.mult = m;
    }
    Ok(loaded)
}

fn require_central(loaded: &Loaded) -> Result<(), CliError> {
    if loaded.arrangement.is_central() {
        Ok(())
    } else {
        Err(CliError::Usage("this command needs a central arrangement (all constants zero)".into()))
    }
}

fn emit(out: &mut impl Write, v: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{v}")?;
    Ok(())
}

pub fn cmd_chi(input: &str, out: &mut impl Write) -> Result<u8, CliError> {
    let loaded = load(input, None)?;
    emit(out, &chi_json(&char_poly(&loaded.arrangement)))?;
    Ok(EXIT_OK)
}

pub fn verdict_code(c: &FreenessCertificate) -> u8 {
    match c {
        FreenessCertificate::Free { .. } => EXIT_OK,
        FreenessCertificate::NonFree { .. } => EXIT_NON_FREE,
        FreenessCertificate::Undetermined { .. } => EXIT_UNDETERMINED,
    }
}

pub fn cmd_free(
    input: &str,
    mult: Option<Vec<u32>>,
    opts: &FreenessOptions,
    with_basis: bool,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let loaded = load(input, mult)?;
    require_central(&loaded)?;
    let cert = is_free_multi_with(&loaded.multiarrangement()?, opts);
    emit(out, &certificate_json(&cert, with_basis))?;
    Ok(verdict_code(&cert))
}

pub fn cmd_extend(
    input: &str,
    mult: Option<Vec<u32>>,
    decone: bool,
    search: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<u8, CliError> {
    let loaded = load(input, mult)?;
    require_central(&loaded)?;
    let a = &loaded.arrangement;
    let ps = if search {
        find_positive_system(a)?
            .ok_or_else(|| CliError::Structure("no choice of scalings gives a positive system".into()))?
    } else {
        let scalings = loaded.scalings.clone().unwrap_or_else(|| vec![multiarr_core::exact::rat(1); a.len()]);
        match PositiveSystem::new(a, scalings) {
            Ok(ps) => ps,
            Err(CoreError::NotPositiveSystem(t)) => {
                return Err(CliError::Structure(format!(
                    "the scaled forms are not a positive system: hyperplanes {t:?} satisfy no sum relation"
                )))
            }
            Err(e) => return Err(e.into()),
        }
    };
    if let Some(t) = first_parity_violation(&ps, &loaded.mult) {
        writeln!(
            err,
            "warning: parity condition fails at hyperplanes {:?} (odd multiplicity on the sum, even on both parts)",
            t.indices()
        )?;
    }
    let e = if decone { decone_extension(&ps, &loaded.mult)? } else { extend(&ps, &loaded.mult)? };
    writeln!(out, "{}", ArrangementDoc::from_arrangement(&e).to_json())?;
    Ok(EXIT_OK)
}

fn root_system_arg(kind: &str, rank: usize) -> Result<RootSystem, CliError> {
    parse_root_system(&format!("{kind}{rank}")).map_err(|e| CliError::Usage(e.to_string()))
}

/// A pool sized by `MULTIARR_THREADS`, or rayon's default when unset.
fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v.trim().parse().map_err(|_| CliError::Usage(format!("{THREADS_VAR}={v:?} is not a count")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))
}

/// `count` distinct random {0,1} vectors of length `n`, sorted.
fn sample_multiplicities(n: usize, count: usize, seed: u64) -> Vec<Vec<u32>> {
    let total = if n >= 63 { usize::MAX } else { 1usize << n };
    let count = count.min(total);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        seen.insert((0..n).map(|_| u32::from(rng.gen_bool(0.5))).collect::<Vec<u32>>());
    }
    seen.into_iter().collect()
}

pub fn cmd_interp(
    kind: &str,
    rank: usize,
    k: u32,
    sample: Option<usize>,
    seed: u64,
    out: &mut impl Write,
) -> Result<u8, CliError> {
    let r = root_system_arg(kind, rank)?;
    if k == 0 {
        return Err(CliError::Usage("--k must be positive".into()));
    }
    let ms: Vec<Vec<u32>> = match sample {
        Some(n) => sample_multiplicities(r.len(), n, seed),
        None if r.len() > MAX_EXHAUSTIVE_ROOTS => {
            return Err(CliError::Usage(format!(
                "{} has {} positive roots, so 2^{} multiplicities; pass --sample N",
                r.label(),
                r.len(),
                r.len()
            )))
        }
        None => zero_one_multiplicities(r.len()).collect(),
    };
    let records = thread_pool()?.install(|| ms.par_iter().map(|m| classify(&r, m, k)).collect::<Result<Vec<_>, _>>())?;
    for rec in &records {
        emit(out, &interpolation_json(rec))?;
    }
    let count = |f: &dyn Fn(&multiarr_core::coxeter::InterpolationRecord) -> bool| records.iter().filter(|r| f(r)).count();
    emit(
        out,
        &json!({ "summary": {
            "root_system": r.label(),
            "k": k,
            "sampled": sample.is_some(),
            "records": records.len(),
            "qualifying": count(&|r| r.qualifies()),
            "equivalence_holds": count(&|r| r.equivalence_holds()),
            "functional_equation_holds": count(&|r| r.functional_equation),
            "predicted_chi_holds": count(&|r| r.predicted_chi == Some(true)),
        }}),
    )?;
    Ok(EXIT_OK)
}

/// All vectors in `[lo, hi]^n`, lexicographic.
fn box_multiplicities(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p: Vec<u32>| (lo..=hi).map(move |v| [p.clone(), vec![v]].concat())).collect();
    }
    out
}

pub fn cmd_scan_extendable(kind: &str, rank: usize, lo: u32, hi: u32, out: &mut impl Write) -> Result<u8, CliError> {
    let r = root_system_arg(kind, rank)?;
    if lo > hi {
        return Err(CliError::Usage("--min-mult exceeds --max-mult".into()));
    }
    let size = (u64::from(hi - lo) + 1).checked_pow(r.len() as u32).unwrap_or(u64::MAX);
    if size > MAX_SCAN as u64 {
        return Err(CliError::Usage(format!("{size} multiplicities exceed the scan limit of {MAX_SCAN}")));
    }
    let ps = r.positive_system();
    let ms = box_multiplicities(r.len(), lo, hi);
    let rows = thread_pool()?.install(|| {
        ms.par_iter()
            .map(|m| -> Result<_, CoreError> {
                let base = is_free_multi(&Multiarrangement::new(r.arrangement(), m.clone())?);
                let ext = if base.is_free() { Some(extension_free(&ps, m)?) } else { None };
                Ok((m, base, ext))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let (mut free, mut extendable) = (0, 0);
    for (m, base, ext) in &rows {
        free += usize::from(base.is_free());
        extendable += usize::from(ext.as_ref().is_some_and(FreenessCertificate::is_free));
        emit(
            out,
            &json!({
                "m": m,
                "free": base.verdict_name(),
                "exponents": base.exponents(),
                "canonical_extension": ext.as_ref().map(FreenessCertificate::verdict_name),
            }),
        )?;
    }
    emit(
        out,
        &json!({ "summary": {
            "root_system": r.label(),
            "multiplicities": rows.len(),
            "free": free,
            "canonical_extension_free": extendable,
            "open": free - extendable,
        }}),
    )?;
    Ok(EXIT_OK)
}
