//! Command-line front end. Every subcommand produces a certificate, prints a
//! short table, and optionally writes the certificate to `--out`.
//!
//! Exit status: 0 when a witness was found or a claim verified, 1 for a
//! counterexample (or a certificate that fails re-checking), 2 when a budget
//! ran out, 64 for usage errors.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColoringSpec, Domain, Point};
use crate::constructions::baire::baire_certificate;
use crate::constructions::greedy::{greedy_fs_basis, subset_sums_injective};
use crate::constructions::interval::IntervalSet;
use crate::constructions::owings::{owings_certificate, owings_fixture_from_coloring, PatternFixture};
use crate::constructions::pipeline::{pipeline_certificate, ElementColoring, PipelineOptions};
use crate::constructions::pullback::pullback_certificate;
use crate::delta::{extract_delta_system, set_text, SetFamily, Token};
use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};
use crate::search::audit::{audit_coloring_claim, audit_violations, Claim, ClaimKind};
use crate::search::numbers::{fs_number, fu_number, Repetition};
use crate::search::witness::find_mono_fs_witness;
use crate::search::{Budget, Meter, RationalGrid, VectorGrid};
use crate::semigroup::{FinSemigroup, Naturals};
use crate::verify::reverify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug, Clone)]
#[command(name = "hindman", version, about = "Exact finite-sums, pairwise-sum and Δ-system workbench")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for parallel searches. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Stop after this many search nodes.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_nodes: Option<u64>,
    /// Stop after this many milliseconds.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_ms: Option<u64>,
    /// Write the certificate here (atomically).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the certificate JSON after the table.
    #[arg(long, global = true)]
    pub json: bool,
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget { max_nodes: self.max_nodes, max_time: self.max_ms.map(Duration::from_millis) }
    }

    fn workers(&self) -> usize {
        self.workers as usize
    }
}

#[derive(Args, Debug, Clone)]
pub struct RationalGridArgs {
    #[arg(long, default_value_t = 6)]
    pub max_den: u32,
    #[arg(long, default_value_t = 8)]
    pub max_val: u32,
}

#[derive(Args, Debug, Clone)]
pub struct VectorGridArgs {
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 2)]
    pub coef_range: i64,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Evaluate a coloring at points (rationals like `-3/5` or vectors like `{0:1, 2:-1/2}`).
    ///
    /// Points may start with `-`, so give global flags before the subcommand.
    ColorEval {
        #[arg(long)]
        coloring: ColoringSpec,
        #[arg(required = true, allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Check a no-monochromatic-configuration claim exhaustively on a grid.
    Audit {
        #[arg(long)]
        claim: ClaimKind,
        #[command(flatten)]
        rational: RationalGridArgs,
        #[command(flatten)]
        vector: VectorGridArgs,
        /// Largest support size for `support-arithmetic`.
        #[arg(long, default_value_t = 64)]
        max_support: usize,
        /// Also count every violation on the grid.
        #[arg(long)]
        all_violations: bool,
    },
    /// Least k-subsequence of a grid with monochromatic finite sums.
    FsWitness {
        #[arg(long)]
        coloring: ColoringSpec,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        rational: RationalGridArgs,
        #[command(flatten)]
        vector: VectorGridArgs,
    },
    /// Least R such that every t-coloring of 1..R has k elements with monochromatic finite sums.
    FsNumber {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// `allowed` lets summands repeat; `distinct` requires k distinct elements.
        #[arg(long, default_value = "allowed")]
        repetition: Repetition,
    },
    /// Least F such that every t-coloring of nonempty subsets of F has a k-block sequence with monochromatic unions.
    FuNumber {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Extract a Δ-system of size p from a family given one set per line.
    Delta {
        /// Input file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// Greedy basis with injective subset sums.
    GreedyBasis {
        /// `naturals` or a semigroup such as `cyclic:16`, `boolean:4`, `boolean:3*left-zero:2`.
        #[arg(long, default_value = "naturals")]
        carrier: String,
        #[arg(long)]
        count: usize,
        /// First natural number in the pool.
        #[arg(long, default_value_t = 1)]
        pool_start: u64,
    },
    /// k distinct elements of a finite semigroup with monochromatic finite sums.
    Pipeline {
        /// Named semigroup (`cyclic:N`, `boolean:R`, `left-zero:N`, products `A*B`).
        #[arg(long, conflicts_with = "table")]
        group: Option<String>,
        /// Cayley table file: the order, then one row per element.
        #[arg(long)]
        table: Option<PathBuf>,
        /// `parity`, `popcount` or `mod:M`.
        #[arg(long, conflicts_with = "coloring_file")]
        coloring: Option<String>,
        /// File of whitespace-separated colors, one per element.
        #[arg(long)]
        coloring_file: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// F to use if the finite-unions number does not finish within budget.
        #[arg(long)]
        assume_f: Option<u32>,
    },
    /// Pull a vector coloring back to pairs of basis indices and find v, w with FS({v,w}) monochromatic.
    Pullback {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        coloring: ColoringSpec,
    },
    /// Vectors whose pairwise sums carry two prescribed coefficient patterns.
    OwingsConstruct {
        #[arg(long)]
        theta: usize,
        #[arg(long, required_unless_present = "from_coloring")]
        i1: Option<usize>,
        #[arg(long, required_unless_present = "from_coloring")]
        i2: Option<usize>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Block width; defaults to the count.
        #[arg(long)]
        width: Option<usize>,
        /// Derive i1, i2 and the basis from a homogeneous set for this coloring.
        #[arg(long, requires = "kappa")]
        from_coloring: Option<ColoringSpec>,
        /// Number of basis vectors to search for the homogeneous set.
        #[arg(long)]
        kappa: Option<usize>,
    },
    /// Points X with X + X inside an interval set such as `(0,1) ∖ {1/2}`.
    BaireConstruct {
        #[arg(long, allow_hyphen_values = true)]
        set: IntervalSet,
        #[arg(long)]
        n: usize,
    },
    /// Re-check a certificate file.
    Check { certificate: PathBuf },
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn inconclusive_on_budget(claim: &str, r: Result<Certificate>) -> Result<Certificate> {
    match r {
        Err(Error::BudgetExceeded(msg)) => {
            Ok(Certificate::new(claim, Verdict::Inconclusive, Payload::None).with_param("budget", msg))
        }
        other => other,
    }
}

/// Runs one subcommand and returns its certificate.
pub fn run(config: &RunConfig) -> Result<Certificate> {
    let workers = config.workers();
    let budget = config.budget();
    match &config.command {
        Command::ColorEval { coloring, points } => {
            let mut values = BTreeMap::new();
            for p in points {
                let point: Point = p.parse()?;
                values.insert(point.to_string(), coloring.evaluate(&point)?.to_string());
            }
            Ok(Certificate::new("color-eval", Verdict::Witness, Payload::Record { values, elements: vec![] })
                .with_param("coloring", coloring))
        }
        Command::Audit { claim, rational, vector, max_support, all_violations } => {
            let c = match claim {
                ClaimKind::SupportArithmetic => Claim::Support { max_support: *max_support },
                ClaimKind::InnerProductTriples | ClaimKind::SquareNormPairs => {
                    Claim::Vector(*claim, VectorGrid::new(vector.dim, vector.coef_range)?)
                }
                _ => Claim::Rational(*claim, RationalGrid::new(rational.max_den, rational.max_val)?),
            };
            let meter = Meter::new(budget);
            let mut cert = inconclusive_on_budget(claim.as_str(), audit_coloring_claim(&c, workers, &meter))?;
            if *all_violations {
                cert = cert.with_param("violations", audit_violations(&c)?.len());
            }
            Ok(cert)
        }
        Command::FsWitness { coloring, k, rational, vector } => {
            let name = coloring.to_string();
            match coloring.domain() {
                Domain::Rational => {
                    let grid = RationalGrid::new(rational.max_den, rational.max_val)?;
                    let pts: Vec<Rat> = grid.points().into_iter().filter(|r| !r.is_zero()).collect();
                    find_mono_fs_witness(&pts, |a, b| a + b, coloring, &name, *k, workers, budget).map(|c| {
                        c.with_param("max_den", grid.max_den).with_param("max_val", grid.max_val)
                    })
                }
                Domain::Vector => {
                    let grid = VectorGrid::new(vector.dim, vector.coef_range)?;
                    let pts: Vec<QVec> = grid.points().into_iter().filter(|v| !v.is_zero()).collect();
                    find_mono_fs_witness(&pts, |a, b| a + b, coloring, &name, *k, workers, budget)
                        .map(|c| c.with_param("dim", grid.dim).with_param("coef_range", grid.range))
                }
            }
        }
        Command::FsNumber { k, t, repetition } => fs_number(*k, *t, *repetition, workers, budget),
        Command::FuNumber { k, t } => fu_number(*k, *t, workers, budget),
        Command::Delta { input, p } => {
            if *p == 0 {
                return Err(Error::Precondition("--p must be positive".into()));
            }
            let family: SetFamily<Token> = SetFamily::parse(&read_input(input)?)?;
            let base = |v, payload| {
                Certificate::new("delta-system", v, payload).with_param("p", p).with_param("family_size", family.len())
            };
            Ok(match extract_delta_system(&family, *p) {
                Some(ds) => {
                    let values = BTreeMap::from([
                        ("root".to_string(), set_text(&ds.root)),
                        ("size".to_string(), ds.members.len().to_string()),
                    ]);
                    base(
                        Verdict::Witness,
                        Payload::Record { values, elements: ds.members.iter().map(set_text).collect() },
                    )
                }
                None => base(Verdict::Inconclusive, Payload::None).with_param("reason", "extraction yielded fewer members"),
            })
        }
        Command::GreedyBasis { carrier, count, pool_start } => {
            let base = Certificate::new("greedy-basis", Verdict::Witness, Payload::None)
                .with_param("carrier", carrier)
                .with_param("count", count);
            let found: Result<(Vec<String>, bool)> = if carrier == "naturals" {
                greedy_fs_basis(&Naturals, *count, *pool_start..)
                    .map(|h| (h.iter().map(u64::to_string).collect(), subset_sums_injective(&Naturals, &h)))
            } else {
                let g = FinSemigroup::builtin(carrier)?;
                greedy_fs_basis(&g, *count, 0..g.order())
                    .map(|h| (h.iter().map(usize::to_string).collect(), subset_sums_injective(&g, &h)))
            };
            let base = if carrier == "naturals" { base.with_param("pool_start", pool_start) } else { base };
            match found {
                Ok((h, injective)) => {
                    let values = BTreeMap::from([("injective".to_string(), injective.to_string())]);
                    let mut c = base;
                    c.payload = Payload::Record { values, elements: h };
                    Ok(c)
                }
                Err(Error::PoolExhausted { chosen, wanted }) => {
                    let mut c = base.with_param("reason", format!("pool exhausted after {chosen} of {wanted}"));
                    c.verdict = Verdict::Inconclusive;
                    Ok(c)
                }
                Err(e) => Err(e),
            }
        }
        Command::Pipeline { group, table, coloring, coloring_file, k, t, assume_f } => {
            let (g, group_name) = match (group, table) {
                (Some(spec), _) => (FinSemigroup::builtin(spec)?, spec.clone()),
                (None, Some(path)) => (read_input(path)?.parse::<FinSemigroup>()?, format!("table:{}", path.display())),
                (None, None) => return Err(Error::Precondition("one of --group or --table is required".into())),
            };
            let col: ElementColoring = match (coloring, coloring_file) {
                (Some(c), _) => c.parse()?,
                (None, Some(path)) => read_input(path)?.parse()?,
                (None, None) => return Err(Error::Precondition("one of --coloring or --coloring-file is required".into())),
            };
            if let ElementColoring::Table(colors) = &col {
                if colors.len() != g.order() {
                    return Err(Error::Precondition(format!(
                        "coloring file has {} colors for {} elements",
                        colors.len(),
                        g.order()
                    )));
                }
            }
            let opts = PipelineOptions { k: *k, t: *t, workers, budget, assumed_f: *assume_f };
            let coloring_name = match &col {
                ElementColoring::Table(_) => "table".to_string(),
                other => other.to_string(),
            };
            Ok(pipeline_certificate(&g, &col, &coloring_name, &opts)?.with_param("group", group_name))
        }
        Command::Pullback { kappa, coloring } => {
            if coloring.domain() != Domain::Vector {
                return Err(Error::Precondition(format!("--coloring {coloring} does not color vectors")));
            }
            pullback_certificate(*kappa, coloring, &coloring.to_string())
        }
        Command::OwingsConstruct { theta, i1, i2, count, width, from_coloring, kappa } => {
            let fixture = match (from_coloring, i1, i2) {
                (Some(spec), _, _) => {
                    if spec.domain() != Domain::Vector {
                        return Err(Error::Precondition(format!("--from-coloring {spec} does not color vectors")));
                    }
                    let kappa = kappa.expect("clap enforces --kappa");
                    let meter = Meter::new(budget);
                    let base = |v| {
                        Certificate::new("owings-fixture", v, Payload::None)
                            .with_param("theta", theta)
                            .with_param("kappa", kappa)
                            .with_param("coloring", spec)
                    };
                    match owings_fixture_from_coloring(*theta, spec, kappa, *count, &meter) {
                        Ok(Some(f)) => f,
                        Ok(None) => return Ok(base(Verdict::Inconclusive).with_param("reason", "no homogeneous set")),
                        Err(Error::BudgetExceeded(msg)) => {
                            return Ok(base(Verdict::Inconclusive).with_param("budget", msg))
                        }
                        Err(e) => return Err(e),
                    }
                }
                (None, Some(i1), Some(i2)) => PatternFixture::new(*theta, *i1, *i2, width.unwrap_or(*count))?,
                _ => return Err(Error::Precondition("--i1 and --i2 are required".into())),
            };
            owings_certificate(&fixture, *count)
        }
        Command::BaireConstruct { set, n } => baire_certificate(set, *n),
        Command::Check { certificate } => {
            let cert = Certificate::from_json(&read_input(certificate)?)?;
            reverify(&cert)?;
            Ok(cert)
        }
    }
}

pub fn exit_code(result: &Result<Certificate>) -> i32 {
    match result {
        Ok(c) => match c.verdict {
            Verdict::Witness | Verdict::Exhausted => EXIT_OK,
            Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
            Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        },
        Err(Error::Verification(_)) => EXIT_COUNTEREXAMPLE,
        Err(Error::BudgetExceeded(_)) => EXIT_INCONCLUSIVE,
        Err(_) => EXIT_USAGE,
    }
}

/// A short human-readable view of a certificate.
pub fn summarize(cert: &Certificate) -> String {
    let mut s = format!("claim      {}\nverdict    {:?}\n", cert.claim, cert.verdict);
    for (k, v) in &cert.parameters {
        s.push_str(&format!("{k:<10} {v}\n"));
    }
    match &cert.payload {
        Payload::None => {}
        Payload::Elements { elements, color } => {
            s.push_str(&format!("elements   {}\n", elements.join("  ")));
            if let Some(c) = color {
                s.push_str(&format!("color      {c}\n"));
            }
        }
        Payload::Extremal { value, coloring } => {
            s.push_str(&format!("value      {value}\n"));
            let cs: Vec<String> = coloring.iter().map(u32::to_string).collect();
            s.push_str(&format!("extremal   {}\n", cs.join("")));
        }
        Payload::Record { values, elements } => {
            for (k, v) in values {
                s.push_str(&format!("{k:<10} {v}\n"));
            }
            for e in elements {
                s.push_str(&format!("  {e}\n"));
            }
        }
    }
    s.push_str(&format!("searched   {}\n", cert.search_space));
    s
}

/// Parses arguments, runs, prints and writes the certificate. Returns the
/// exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let result = run(&config);
    match &result {
        Ok(cert) => {
            let _ = write!(stdout, "{}", summarize(cert));
            if config.json {
                let _ = write!(stdout, "{}", cert.to_json());
            }
            if let Some(path) = &config.out {
                if let Err(e) = cert.write_atomic(path) {
                    let _ = writeln!(stderr, "error: writing {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
        }
    }
    // A certificate that re-checks is a success whatever it records.
    if matches!(config.command, Command::Check { .. }) && result.is_ok() {
        let _ = writeln!(stdout, "recheck    ok");
        return EXIT_OK;
    }
    exit_code(&result)
}
