//! `billiards` — evaluate, classify, rasterize, and verify eigenfunctions of
//! the right-isosceles and equilateral triangle billiards.
//!
//! Exit codes: `0` success, `1` input or validation error (including unknown
//! flags), `2` verification failure — a numeric check ran and exceeded its
//! tolerance. All outputs are deterministic: re-running a command with the
//! same flags produces byte-identical files and text.

mod catalog;
mod formats;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use billiards::billiard::{BilliardKind, Point};
use billiards::classes::{class_index, lowest_in_class, tower};
use billiards::grid::GridSpec;
use billiards::nodal::{count_domains, RenderMode, SignGrid};
use billiards::state::{EigenfunctionSpec, SymmetryFamily};
use billiards::verify::{
    ladder_identity_check, perturbed_boundary_residual, run_suite, CheckRecord, SuiteConfig,
    SuiteTolerances,
};
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::formats::{fmt_sig, grid_csv, pgm_bytes, SIGNIFICANT_DIGITS};

/// Vertex displacement used by the `perturbed` verification suite.
const PERTURBATION_DELTA: f64 = 1e-3;
/// Boundary samples per state in the `perturbed` suite.
const PERTURBED_SAMPLE_COUNT: usize = 300;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] billiards::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("catalog {} is malformed: {detail}; file left unmodified", path.display())]
    MalformedCatalog { path: PathBuf, detail: String },

    #[error("--res must be at least 2 (got {0})")]
    ResolutionTooSmall(usize),
}

/// What a successfully parsed and executed command concluded.
enum Outcome {
    Success,
    /// A verification check ran to completion and failed its tolerance.
    VerificationFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BilliardArg {
    /// Right-isosceles triangle with legs of length π.
    Iso,
    /// Equilateral triangle with side π.
    Equi,
}

impl BilliardArg {
    fn kind(self) -> BilliardKind {
        match self {
            BilliardArg::Iso => BilliardKind::RightIsosceles,
            BilliardArg::Equi => BilliardKind::Equilateral,
        }
    }

    fn label(self) -> &'static str {
        match self {
            BilliardArg::Iso => "iso",
            BilliardArg::Equi => "equi",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// The single antisymmetrized family of the isosceles billiard.
    Default,
    /// Cosine family of the equilateral billiard.
    Cos,
    /// Sine family of the equilateral billiard.
    Sin,
}

impl FamilyArg {
    fn family(self) -> SymmetryFamily {
        match self {
            FamilyArg::Default => SymmetryFamily::Default,
            FamilyArg::Cos => SymmetryFamily::Cosine,
            FamilyArg::Sin => SymmetryFamily::Sine,
        }
    }

    fn label(self) -> &'static str {
        match self {
            FamilyArg::Default => "default",
            FamilyArg::Cos => "cos",
            FamilyArg::Sin => "sin",
        }
    }
}

fn family_label(family: SymmetryFamily) -> &'static str {
    match family {
        SymmetryFamily::Default => "default",
        SymmetryFamily::Cosine => "cos",
        SymmetryFamily::Sine => "sin",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Three-level sign image: negative 0, nodal/masked 128, positive 255.
    Sign,
    /// Linear amplitude image over [−max|ψ|, max|ψ|].
    Amplitude,
}

impl ModeArg {
    fn mode(self) -> RenderMode {
        match self {
            ModeArg::Sign => RenderMode::Sign,
            ModeArg::Amplitude => RenderMode::Amplitude,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Full identity sweep; passes on a sound build.
    Default,
    /// Sensitivity control: boundary check against vertices displaced by
    /// 1e-3. A sound build must FAIL this suite (exit 2) — it proves the
    /// harness can detect a wrong geometry.
    Perturbed,
}

#[derive(Parser)]
#[command(
    name = "billiards",
    version,
    about = "Closed-form eigenfunctions of triangle billiards: evaluation, \
             ladder operators, equivalence classes, nodal domains, and a \
             numerical verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an eigenfunction at one point.
    Eval {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
    /// Report a state's equivalence class and the lowest state in it.
    Classify {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Rasterize an eigenfunction to CSV (x,y,value; unmasked cells only).
    Grid {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 512)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply the raising operator p times and measure the ladder identity.
    Ladder {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, default_value_t = 201)]
        res: usize,
    },
    /// Count nodal domains; optionally write a PGM image of the pattern.
    Nodal {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 512)]
        res: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "sign")]
        mode: ModeArg,
    },
    /// Write a tower of same-class states into a JSON catalog.
    Tower {
        #[arg(long)]
        billiard: BilliardArg,
        #[arg(long, default_value = "default")]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        class: i64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Run the numerical verification suite.
    Verify {
        /// Restrict to one billiard (default: both).
        #[arg(long)]
        billiard: Option<BilliardArg>,
        /// Restrict to one symmetry family (default: every family the
        /// selected billiard has).
        #[arg(long)]
        family: Option<FamilyArg>,
        #[arg(long, default_value = "default")]
        suite: SuiteArg,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`billiards verify | head`) like other
    // line-oriented tools, instead of panicking mid-println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; everything else is an
            // input error and must exit 1, not clap's default 2.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Eval {
            billiard,
            family,
            m,
            n,
            x,
            y,
        } => {
            let spec = EigenfunctionSpec::new(billiard.kind(), family.family(), m, n)?;
            println!("{:.7}", spec.eval(Point::new(x, y)));
            Ok(Outcome::Success)
        }
        Command::Classify {
            billiard,
            family,
            m,
            n,
        } => {
            let spec = EigenfunctionSpec::new(billiard.kind(), family.family(), m, n)?;
            let class = class_index(&spec);
            let lowest = lowest_in_class(billiard.kind(), family.family(), n, class.index)?;
            println!(
                "class {} mod {}; lowest ({},{})",
                class.index,
                class.modulus(),
                lowest.m(),
                lowest.n()
            );
            Ok(Outcome::Success)
        }
        Command::Grid {
            billiard,
            family,
            m,
            n,
            res,
            out,
        } => {
            let spec = EigenfunctionSpec::new(billiard.kind(), family.family(), m, n)?;
            let field = spec.eval_grid(&grid_spec(res)?);
            let csv = grid_csv(&field);
            let rows = csv.lines().count() - 1;
            write_file(&out, csv.as_bytes())?;
            println!("wrote {rows} samples to {}", out.display());
            Ok(Outcome::Success)
        }
        Command::Ladder {
            billiard,
            family,
            m,
            n,
            p,
            res,
        } => {
            if res < 2 {
                return Err(CliError::ResolutionTooSmall(res));
            }
            let spec = EigenfunctionSpec::new(billiard.kind(), family.family(), m, n)?;
            let target = billiards::classes::step(&spec, p)?;
            let deviation = ladder_identity_check(&spec, p, res)?;
            let bound = SuiteTolerances::default().ladder_sup_norm;
            println!(
                "source ({},{}) energy {}",
                spec.m(),
                spec.n(),
                fmt_sig(spec.energy(), SIGNIFICANT_DIGITS)
            );
            println!(
                "target ({},{}) energy {}",
                target.m(),
                target.n(),
                fmt_sig(target.energy(), SIGNIFICANT_DIGITS)
            );
            println!("deviation {deviation:.3e}");
            if deviation > bound {
                println!("verification: FAIL (deviation exceeds {bound:.3e})");
                Ok(Outcome::VerificationFailed)
            } else {
                Ok(Outcome::Success)
            }
        }
        Command::Nodal {
            billiard,
            family,
            m,
            n,
            res,
            out,
            mode,
        } => {
            let spec = EigenfunctionSpec::new(billiard.kind(), family.family(), m, n)?;
            let field = spec.eval_grid(&grid_spec(res)?);
            let count = count_domains(&SignGrid::from_field(&field));
            println!("nu={}", count.domain_count);
            if count.resolution_suspect {
                eprintln!(
                    "warning: a nodal domain spans fewer than 4 cells at --res {res}; \
                     the count may be unresolved"
                );
            }
            if let Some(path) = out {
                write_file(&path, &pgm_bytes(&field, mode.mode()))?;
                println!("wrote {}", path.display());
            }
            Ok(Outcome::Success)
        }
        Command::Tower {
            billiard,
            family,
            n,
            class,
            count,
            catalog: path,
        } => {
            let states = tower(billiard.kind(), family.family(), n, class, count)?;
            let mut entries = load_catalog(&path)?;
            for state in &states {
                let c = class_index(state);
                println!(
                    "({},{}) class {} mod {} energy {}",
                    state.m(),
                    state.n(),
                    c.index,
                    c.modulus(),
                    fmt_sig(state.energy(), SIGNIFICANT_DIGITS)
                );
                catalog::upsert(
                    &mut entries,
                    CatalogEntry {
                        billiard: billiard.label().to_string(),
                        family: family.label().to_string(),
                        m: state.m(),
                        n: state.n(),
                        modulus: c.modulus(),
                        class_index: c.index,
                        energy: state.energy(),
                        nodal_count: None,
                        resolution: None,
                    },
                );
            }
            write_file(&path, catalog::to_json(&entries).as_bytes())?;
            println!("catalog {}: {} entries", path.display(), entries.len());
            Ok(Outcome::Success)
        }
        Command::Verify {
            billiard,
            family,
            suite,
        } => cmd_verify(billiard, family, suite),
    }
}

fn grid_spec(res: usize) -> Result<GridSpec, CliError> {
    if res < 2 {
        return Err(CliError::ResolutionTooSmall(res));
    }
    Ok(GridSpec::new(res, 0.0))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CliError> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    catalog::parse(&text).map_err(|err| CliError::MalformedCatalog {
        path: path.to_path_buf(),
        detail: err.to_string(),
    })
}

/// Every (billiard, family) pair the verify command should cover.
fn verify_targets(
    billiard: Option<BilliardArg>,
    family: Option<FamilyArg>,
) -> Vec<(BilliardKind, SymmetryFamily)> {
    let kinds = match billiard {
        Some(b) => vec![b.kind()],
        None => vec![BilliardKind::RightIsosceles, BilliardKind::Equilateral],
    };
    let mut targets = Vec::new();
    for kind in kinds {
        let families: Vec<SymmetryFamily> = match family {
            Some(f) => vec![f.family()],
            None => match kind {
                BilliardKind::RightIsosceles => vec![SymmetryFamily::Default],
                BilliardKind::Equilateral => {
                    vec![SymmetryFamily::Cosine, SymmetryFamily::Sine]
                }
            },
        };
        for f in families {
            targets.push((kind, f));
        }
    }
    targets
}

fn print_record(record: &CheckRecord) {
    println!(
        "  {}: worst {:.3e}, threshold {:.3e}, {} checks -> {}",
        record.name,
        record.worst,
        record.threshold,
        record.checks,
        if record.passed { "ok" } else { "FAIL" }
    );
}

fn cmd_verify(
    billiard: Option<BilliardArg>,
    family: Option<FamilyArg>,
    suite: SuiteArg,
) -> Result<Outcome, CliError> {
    let tolerances = SuiteTolerances::default();
    let mut all_passed = true;
    let mut checks_run = 0usize;

    for (kind, fam) in verify_targets(billiard, family) {
        let kind_label = match kind {
            BilliardKind::RightIsosceles => "iso",
            BilliardKind::Equilateral => "equi",
        };
        match suite {
            SuiteArg::Default => {
                println!("suite default: billiard {kind_label}, family {}", family_label(fam));
                let report = run_suite(kind, fam, &SuiteConfig::default(), &tolerances)?;
                if report.vacuous {
                    println!("  (no valid states in range; vacuous pass)");
                }
                for record in &report.records {
                    print_record(record);
                }
                checks_run += report.checks_run;
                all_passed &= report.passed();
            }
            SuiteArg::Perturbed => {
                println!(
                    "suite perturbed: billiard {kind_label}, family {} \
                     (vertices displaced by {PERTURBATION_DELTA:e})",
                    family_label(fam)
                );
                let mut worst = 0.0f64;
                let mut checks = 0usize;
                for n in 1..=2i64 {
                    for off in 1..=2i64 {
                        let spec = match EigenfunctionSpec::new(kind, fam, n + off, n) {
                            Ok(s) => s,
                            Err(billiards::Error::ZeroFunction { .. }) => continue,
                            Err(e) => return Err(e.into()),
                        };
                        let residual = perturbed_boundary_residual(
                            &spec,
                            PERTURBATION_DELTA,
                            PERTURBED_SAMPLE_COUNT,
                        );
                        worst = worst.max(residual);
                        checks += 1;
                    }
                }
                let record = CheckRecord {
                    name: "perturbed boundary residual",
                    checks,
                    worst,
                    threshold: tolerances.boundary_absolute,
                    passed: worst <= tolerances.boundary_absolute,
                };
                print_record(&record);
                checks_run += checks;
                all_passed &= record.passed;
            }
        }
    }

    if all_passed {
        println!("verification: PASS ({checks_run} checks)");
        Ok(Outcome::Success)
    } else {
        println!("verification: FAIL ({checks_run} checks)");
        Ok(Outcome::VerificationFailed)
    }
}
