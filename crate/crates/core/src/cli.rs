//! The `shfc` command line. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{Field, Ring};
use crate::cohomology::CoherentSheaf;
use crate::constructions::{direct_sum, koszul_r, omega, q_power_pullback, sym_power, tensor, twist};
use crate::error::{Error, Result};
use crate::harness::{self, parse_module, to_module_file, AnyPresentation, VerificationReport};
use crate::invariants::{beilinson_e1, level, phi_certificate, sheaf_regularity_of};
use crate::resolution::{minimal_presentation, Presentation};
use crate::with_presentation;

#[derive(Debug, Parser)]
#[command(name = "shfc", version, about = "Sheaf cohomology, regularity and level on projective space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct ModuleArg {
    /// Module file (JSON)
    #[arg(long)]
    pub module: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of h^i(M~(d)) over a twist window
    Cohomology {
        #[command(flatten)]
        module: ModuleArg,
        /// Twist window `a:b`
        #[arg(long, allow_hyphen_values = true)]
        twists: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Betti table of the minimal free resolution
    Betti {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Castelnuovo-Mumford regularity of the sheaf and of the module
    Reg {
        #[command(flatten)]
        module: ModuleArg,
    },
    /// The level and its witnesses
    Level {
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Certified bound on the Frobenius amplitude of a locally free sheaf
    Phicert {
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Beilinson E_1 table
    Beilinson {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a module file from others
    #[command(subcommand)]
    Construct(Construct),
    /// Run a verification suite and print its report
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Characteristic (0 or a prime)
    #[arg(long = "char", default_value_t = 32003)]
    pub characteristic: u64,
    /// Dimension n of P^n
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// M(e)
    Twist {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// M ⊕ N
    Sum {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        with: PathBuf,
    },
    /// M ⊗ N
    Tensor {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        with: PathBuf,
    },
    /// Sym^r M
    Sym {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        power: usize,
    },
    /// Pullback along the q-power map
    Qpow {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long)]
        q: u32,
    },
    /// R_m = Ω^m(m)
    #[command(name = "koszulR")]
    KoszulR {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Ω^p
    Omega {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Subadditivity,
    KeyTheorem,
    Bott,
    Beilinson,
    RegularityTensor,
    Oracle,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Characteristic; the key-theorem suite runs 2, 3 and 5 when omitted
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Number of pairs or modules drawn (suite-specific default)
    #[arg(long)]
    pub count: Option<usize>,
}

/// Parse `argv` (including the program name) and run. Output goes to stdout,
/// diagnostics to stderr; the return value is the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli.command) {
        Ok(Outcome { stdout, code }) => {
            print!("{stdout}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Text to print and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: impl Into<String>) -> Self {
        let mut s = stdout.into();
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Outcome { stdout: s, code: 0 }
    }
}

fn load(path: &Path) -> Result<AnyPresentation> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_module(&bytes)
}

fn parse_window(s: Option<&str>, n: usize) -> Result<(i64, i64)> {
    let Some(s) = s else {
        return Ok(harness::default_window(n));
    };
    let bad = || Error::InvalidArgument(format!("twist window `{s}` is not of the form a:b with a <= b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn module_json<K: Field>(m: &Presentation<K>) -> String {
    to_module_file(m).to_json()
}

fn binary<K: Field>(
    m: &Presentation<K>,
    other: AnyPresentation,
    op: fn(&Presentation<K>, &Presentation<K>) -> Result<Presentation<K>>,
) -> Result<String>
where
    AnyPresentation: TryInto<Presentation<K>, Error = Error>,
{
    let n: Presentation<K> = other.try_into()?;
    Ok(module_json(&op(m, &n)?))
}

fn ring_for(characteristic: u64, dim: usize) -> Result<RingChoice> {
    Ok(match characteristic {
        0 => RingChoice::Rational(Ring::rationals(dim + 1)?),
        p => RingChoice::Prime(Ring::prime(p, dim + 1)?),
    })
}

enum RingChoice {
    Rational(Ring<crate::algebra::Rationals>),
    Prime(Ring<crate::algebra::PrimeField>),
}

macro_rules! with_ring {
    ($choice:expr, $r:ident => $body:expr) => {
        match $choice {
            RingChoice::Rational($r) => $body,
            RingChoice::Prime($r) => $body,
        }
    };
}

fn report_outcome(report: VerificationReport) -> Outcome {
    eprintln!("{}", report.summary());
    Outcome { stdout: report.to_json() + "\n", code: if report.all_pass { 0 } else { 1 } }
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Cohomology { module, twists, format } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => {
                let (a, b) = parse_window(twists.as_deref(), m.ring().dim())?;
                let table = CoherentSheaf::new(m.clone()).table(a, b);
                Ok(Outcome::ok(match format {
                    Format::Json => table.to_json(),
                    Format::Table => table.to_ascii(),
                }))
            })
        }
        Command::Betti { module, format } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => {
                let betti = CoherentSheaf::new(m.clone()).resolution().betti_table();
                Ok(Outcome::ok(match format {
                    Format::Table => betti.to_string(),
                    Format::Json => {
                        let entries: Vec<_> = betti.entries().map(|((i, j), b)| json!({"i": i, "j": j, "beta": b})).collect();
                        json!({"betti": entries, "regularity": betti.regularity()}).to_string()
                    }
                }))
            })
        }
        Command::Reg { module } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => {
                let sheaf = CoherentSheaf::new(m.clone());
                let module_reg = sheaf.resolution().betti_table().regularity();
                Ok(Outcome::ok(json!({"regularity": sheaf_regularity_of(&sheaf), "module_regularity": module_reg}).to_string()))
            })
        }
        Command::Level { module } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => Ok(Outcome::ok(serde_json::to_string(&level(m)).expect("serializes"))))
        }
        Command::Phicert { module } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => {
                let cert = phi_certificate(m)?;
                Ok(Outcome::ok(json!({"bound": cert.value, "witnesses": cert.witnesses, "certified": true}).to_string()))
            })
        }
        Command::Beilinson { module, format } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => {
                let t = beilinson_e1(m);
                Ok(Outcome::ok(match format {
                    Format::Json => serde_json::to_string(&t).expect("serializes"),
                    Format::Table => t.to_ascii(),
                }))
            })
        }
        Command::Construct(c) => construct(c).map(Outcome::ok),
        Command::Verify(v) => verify(v),
    }
}

fn construct(c: &Construct) -> Result<String> {
    match c {
        Construct::Twist { module, by } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => Ok(module_json(&twist(m, *by))))
        }
        Construct::Sum { module, with } => {
            let (a, b) = (load(&module.module)?, load(with)?);
            with_presentation!(a, m => binary(&m, b, direct_sum))
        }
        Construct::Tensor { module, with } => {
            let (a, b) = (load(&module.module)?, load(with)?);
            with_presentation!(a, m => binary(&m, b, tensor))
        }
        Construct::Sym { module, power } => {
            if *power == 0 {
                return Err(Error::InvalidArgument("symmetric power needs r >= 1".into()));
            }
            let any = load(&module.module)?;
            with_presentation!(&any, m => Ok(module_json(&minimal_presentation(&sym_power(m, *power)))))
        }
        Construct::Qpow { module, q } => {
            let any = load(&module.module)?;
            with_presentation!(&any, m => Ok(module_json(&q_power_pullback(m, *q)?)))
        }
        Construct::KoszulR { ring, m } => {
            with_ring!(ring_for(ring.characteristic, ring.dim)?, r => Ok(module_json(&koszul_r(&r, *m)?)))
        }
        Construct::Omega { ring, p } => {
            with_ring!(ring_for(ring.characteristic, ring.dim)?, r => Ok(module_json(&omega(&r, *p)?)))
        }
    }
}

fn verify(v: &VerifyArgs) -> Result<Outcome> {
    let n = v.dim;
    let allowed: &[usize] = if v.suite == Suite::KeyTheorem { &[1, 2] } else { &[1, 2, 3] };
    if !allowed.contains(&n) {
        return Err(Error::InvalidArgument(format!("--dim {n} not supported by this suite (allowed: {allowed:?})")));
    }
    if v.suite == Suite::KeyTheorem {
        let primes = match v.characteristic {
            Some(0) => return Err(Error::InvalidArgument("the key theorem needs a prime characteristic".into())),
            Some(p) => vec![p],
            None => vec![2, 3, 5],
        };
        let count = v.count.unwrap_or(30);
        let parts = primes
            .into_iter()
            .map(|p| harness::verify_key_theorem(p, n, count, v.seed))
            .collect::<Result<Vec<_>>>()?;
        return Ok(report_outcome(VerificationReport::merge("key-theorem", v.seed, parts)));
    }
    let ring = ring_for(v.characteristic.unwrap_or(32003), n)?;
    let report = with_ring!(ring, r => match v.suite {
        Suite::Subadditivity => harness::verify_subadditivity(&r, v.count.unwrap_or(100), v.seed),
        Suite::RegularityTensor => harness::verify_regularity_tensor(&r, v.count.unwrap_or(100), v.seed),
        Suite::Bott => harness::verify_bott(&r),
        Suite::Beilinson => harness::verify_beilinson(&r, v.count.unwrap_or(30), v.seed),
        Suite::Oracle => harness::verify_oracle(&r, v.count.unwrap_or(200), v.seed),
        Suite::KeyTheorem => unreachable!("handled above"),
    });
    Ok(report_outcome(report))
}
