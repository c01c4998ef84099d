//! `nilorbit` command line. Exit codes: 0 success, 1 domain error (e.g. the
//! algebra fails validation), 2 usage error (bad arguments, unreadable or
//! malformed input).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::dsl::{emit, parse, AlgebraDocument};
use super::json::{emit_json, ClassTReport, CompareReport, InvariantsReport};
use crate::catalog;
use crate::classify::{classify_dim_le5, compare_fingerprints, fingerprint, ComparisonVerdict};
use crate::coadjoint::{self, ClassTOptions, ClassTVerdict};
use crate::error::Error;
use crate::lie::{Covector, LieAlgebra};

#[derive(Parser, Debug)]
#[command(name = "nilorbit", version, about = "Coadjoint-orbit invariants of nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// A `.lie` bracket-table file.
    file: Option<PathBuf>,
    /// A catalog key such as `n5_4`, `f_7` or `a_1 × n3`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args, Debug)]
struct ClassTArgs {
    /// Random covectors tried after the integer grid.
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl ClassTArgs {
    fn options(&self) -> ClassTOptions {
        ClassTOptions { budget: self.budget, seed: self.seed, ..ClassTOptions::default() }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check antisymmetry, Jacobi and nilpotency.
    Validate { file: PathBuf },
    /// Dimension, lower central series, center, index, real rank, class T.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        class_t: ClassTArgs,
    },
    /// Identify a nilpotent algebra of dimension at most 5.
    Classify {
        #[command(flatten)]
        source: Source,
    },
    /// Compare two algebras (files or catalog keys) invariant by invariant.
    Compare {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        class_t: ClassTArgs,
    },
    /// Class-T verdict with certificate or witness.
    Classt {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        class_t: ClassTArgs,
    },
    /// Isotropy, orbit dimension and flatness at a covector.
    Orbit {
        #[command(flatten)]
        source: Source,
        /// Comma-separated rational coordinates, e.g. "1,0,-1/2".
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Orbit-dimension frequencies over random covectors.
    Histogram {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the catalog, or print one entry in `.lie` format.
    Catalog { key: Option<String> },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Catalog(_) | Error::InvalidInput(_) | Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::InvalidAlgebra(_) | Error::NoWitness(_) | Error::OutOfScope(_) | Error::Internal(_) => {
                Failure::Domain(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_file(path: &Path) -> Result<LieAlgebra, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc = parse(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))?;
    doc.to_algebra().map_err(|e| {
        let f = Failure::from(e);
        match f {
            Failure::Domain(m) => Failure::Domain(format!("{}: {m}", path.display())),
            other => other,
        }
    })
}

fn load(source: &Source) -> Result<LieAlgebra, Failure> {
    match (&source.file, &source.catalog) {
        (Some(path), _) => load_file(path),
        (None, Some(key)) => Ok(catalog::make(key)?),
        (None, None) => Err(Failure::Usage("either FILE or --catalog KEY is required".into())),
    }
}

/// Existing files win; anything else is read as a catalog key.
fn load_either(arg: &str) -> Result<LieAlgebra, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        load_file(path)
    } else {
        Ok(catalog::make(arg)?)
    }
}

fn display_name(l: &LieAlgebra) -> String {
    l.name().unwrap_or("g").to_string()
}

fn verdict_text(v: &ClassTVerdict) -> String {
    match v {
        ClassTVerdict::Holds(c) => format!("Holds ({c:?})"),
        ClassTVerdict::Fails(w) => format!("Fails\nwitness: {w}"),
        ClassTVerdict::Unknown { samples_tried } => format!("Unknown (samples tried: {samples_tried})"),
    }
}

fn write_invariants(out: &mut dyn Write, r: &InvariantsReport) -> std::io::Result<()> {
    writeln!(out, "name: {}", r.name)?;
    writeln!(out, "dim: {}", r.dim)?;
    writeln!(out, "lcs_dims: {:?}", r.lcs_dims)?;
    writeln!(out, "center_dim: {}", r.center_dim)?;
    writeln!(out, "index: {}", r.index)?;
    writeln!(out, "real_rank: {}", r.real_rank)?;
    writeln!(out, "two_step: {}", r.two_step)?;
    write!(out, "class_t: {}", class_t_text(&r.class_t))?;
    writeln!(out)
}

fn class_t_text(c: &ClassTReport) -> String {
    match (&c.certificate, &c.witness) {
        (Some(cert), _) => format!("{} ({cert})", c.status),
        (_, Some(w)) => format!("{} (witness {})", c.status, w.join(",")),
        _ => c.status.clone(),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Validate { file } => {
            let l = load_file(&file)?;
            writeln!(out, "ok: {} (dim {})", display_name(&l), l.dim())?;
        }
        Command::Invariants { source, json, class_t } => {
            let l = load(&source)?;
            let f = fingerprint(&l, &class_t.options());
            let report = InvariantsReport::new(display_name(&l), &f);
            if json {
                writeln!(out, "{}", emit_json(&report))?;
            } else {
                write_invariants(out, &report)?;
            }
        }
        Command::Classify { source } => {
            let l = load(&source)?;
            writeln!(out, "{}", classify_dim_le5(&l)?)?;
        }
        Command::Compare { a, b, json, class_t } => {
            let (la, lb) = (load_either(&a)?, load_either(&b)?);
            let opts = class_t.options();
            let (fa, fb) = (fingerprint(&la, &opts), fingerprint(&lb, &opts));
            let report = compare_fingerprints(&fa, &fb);
            if json {
                let doc = CompareReport {
                    a: InvariantsReport::new(display_name(&la), &fa),
                    b: InvariantsReport::new(display_name(&lb), &fb),
                    report,
                };
                writeln!(out, "{}", emit_json(&doc))?;
            } else {
                writeln!(out, "{} vs {}", display_name(&la), display_name(&lb))?;
                writeln!(out, "(RR, ind): ({}, {}) vs ({}, {})", fa.real_rank, fa.index, fb.real_rank, fb.index)?;
                writeln!(out, "same_rr: {}", report.same_rr)?;
                writeln!(out, "same_index: {}", report.same_index)?;
                writeln!(out, "parity_obstruction: {}", report.parity_obstruction)?;
                writeln!(out, "separating_invariants: {}", report.separating_invariants.join(", "))?;
                let verdict = match report.verdict {
                    ComparisonVerdict::DistinguishedByInvariants => "distinguished by invariants",
                    ComparisonVerdict::NotDistinguishedHere => "not distinguished here",
                };
                writeln!(out, "verdict: {verdict}")?;
            }
        }
        Command::Classt { source, class_t } => {
            let l = load(&source)?;
            writeln!(out, "{}", verdict_text(&coadjoint::class_t(&l, &class_t.options())))?;
        }
        Command::Orbit { source, xi } => {
            let l = load(&source)?;
            let xi = Covector::parse(&xi)?;
            Error::check_dim(l.dim(), xi.len()).map_err(Failure::from)?;
            let r = coadjoint::orbit_report(&l, &xi)?;
            writeln!(out, "xi: {}", r.xi)?;
            writeln!(out, "isotropy: {} (dim {})", r.isotropy, r.isotropy.dim())?;
            writeln!(out, "orbit_dim: {}", r.orbit_dim)?;
            writeln!(out, "flat: {}", r.is_flat)?;
            if let Some(flat) = r.flat_orbit {
                writeln!(out, "orbit: {} + {}", flat.base, flat.directions)?;
            }
        }
        Command::Histogram { source, samples, seed } => {
            let l = load(&source)?;
            let hist = coadjoint::orbit_dim_histogram(&l, samples, seed)?;
            writeln!(out, "orbit_dim\tcount")?;
            for (d, c) in hist {
                writeln!(out, "{d}\t{c}")?;
            }
        }
        Command::Catalog { key: None } => {
            for e in catalog::list() {
                let dim = e.dim.map_or_else(|| "-".to_string(), |d| d.to_string());
                writeln!(out, "{}\t{}\t{}", e.key, dim, e.provenance)?;
            }
        }
        Command::Catalog { key: Some(key) } => {
            let l = catalog::make(&key)?;
            write!(out, "{}", emit(&AlgebraDocument::from_algebra(&l)))?;
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
