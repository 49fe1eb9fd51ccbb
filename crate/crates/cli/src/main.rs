//! `gorenstein`: sample compressed Gorenstein algebras, compute Betti numbers
//! and denominators, and run the verification suites.
//!
//! Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gorenstein::apolarity::DualGenerator;
use gorenstein::compressed::profile;
use gorenstein::harness::{
    instance_from_generator, measure_dr, run_golod_powers_suite, run_main_theorem_suite, run_map_checks, run_socle_quotient_suite,
    sample_instance, DrRoute, Instance, MapCheck, Measurements, RunConfig, Status, VerificationReport,
};
use gorenstein::homology::{BettiDocument, GradedModule, Ring};
use gorenstein::linalg::{PrimeField, DEFAULT_PRIME};
use gorenstein::Error;

const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "gorenstein", version, about = "Compressed Gorenstein algebras: resolutions, Poincare series and their closed forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Embedding dimension.
    #[arg(long = "e")]
    e: Option<usize>,
    /// Socle degree.
    #[arg(long = "s")]
    s: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Homological truncation N.
    #[arg(long)]
    trunc: Option<usize>,
    /// Cap on the internal degrees searched by resolutions.
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Permit socle degree 3 (outside the theorem; exploration only).
    #[arg(long)]
    allow_s3: bool,
    /// Read the dual generator from a file instead of sampling one.
    #[arg(long)]
    generator: Option<PathBuf>,
    /// Include wall-clock timings in reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Q,
    P,
    R,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Via {
    T1,
    T2,
    Lemma56,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main,
    GolodPowers,
    Socle,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Nu,
    Phi,
    Rho,
    GolodCriterion,
    SocleFactorization,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a dual generator whose algebra is compressed.
    Gen(Common),
    /// Hilbert function, compressedness tests and the algebra's bases.
    Hilbert(Common),
    /// Graded Betti numbers of a module over Q, P or R.
    Betti {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "r")]
        ring: RingArg,
        /// k, r, power:i or socle-quotient.
        #[arg(long, default_value = "k")]
        module: String,
    },
    /// The denominator d_R.
    Dr {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "t1")]
        via: Via,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "main")]
        suite: Suite,
        /// Add the Tor-map checks to the main suite.
        #[arg(long)]
        with_maps: bool,
        /// Add the socle factorization check to the main suite.
        #[arg(long)]
        with_socle: bool,
    },
    /// Induced maps on Tor.
    Maps {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, required = true)]
        check: Vec<CheckArg>,
    },
}

/// Errors carried to the exit code.
enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::InvalidConfig(_) | Error::BadPrime { .. } | Error::SocleDegreeExcluded | Error::Parse { .. } => USAGE,
        Error::GenericSamplingFailed { .. } => 2,
        _ => 1,
    }
}

impl Common {
    fn config(&self) -> Result<RunConfig, Failure> {
        let (e, s) = match (self.e, self.s, &self.generator) {
            (Some(e), Some(s), _) => (e, s),
            (_, _, Some(_)) => (self.e.unwrap_or(0), self.s.unwrap_or(0)),
            _ => return Err(Failure::Usage("--e and --s are required unless --generator is given".into())),
        };
        let mut cfg = RunConfig::new(e, s).seed(self.seed);
        cfg.p = self.prime;
        cfg.trunc = self.trunc;
        cfg.max_degree = self.max_degree;
        cfg.allow_s3 = self.allow_s3;
        cfg.timings = self.timings;
        Ok(cfg)
    }

    fn instance(&self, generic_coordinates: bool) -> Result<Instance, Failure> {
        let cfg = self.config()?;
        match &self.generator {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let field = PrimeField::new(self.prime)?;
                let gen = DualGenerator::parse(field, &text)?;
                Ok(instance_from_generator(&cfg, gen)?)
            }
            None => Ok(sample_instance(&cfg, generic_coordinates)?),
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn format(&self) -> Format {
        self.format.unwrap_or(Format::Json)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

fn gen(c: &Common) -> Result<u8, Failure> {
    let inst = c.instance(false)?;
    let cfg = &inst.config;
    let text = match c.format {
        None => format!(
            "# e={} s={} p={} seed={}\n{}",
            cfg.e,
            cfg.s,
            cfg.p,
            inst.seed_used,
            inst.generator.to_text()
        ),
        Some(Format::Json) => pretty(&json!({
            "schema": 1,
            "e": cfg.e,
            "s": cfg.s,
            "p": cfg.p,
            "seed": cfg.seed,
            "seed_used": inst.seed_used,
            "retries": inst.retries,
            "generator": inst.generator.to_text(),
        })),
        Some(Format::Csv) => return Err(Failure::Usage("gen writes text or json".into())),
    };
    c.emit(&text)?;
    Ok(0)
}

fn hilbert(c: &Common) -> Result<u8, Failure> {
    let inst = c.instance(false)?;
    let rep = &inst.compressed;
    let text = match c.format() {
        Format::Json => pretty(&json!({
            "schema": 1,
            "e": inst.config.e,
            "s": inst.config.s,
            "p": inst.config.p,
            "seed_used": inst.seed_used,
            "hilbert_function": rep.hilbert_function,
            "eps": rep.eps,
            "length": rep.length,
            "lambda_max": rep.lambda_max,
            "compressed": rep,
            "profile": profile(rep.effective_e, rep.s),
            "algebra": inst.algebra.to_document(),
        })),
        Format::Csv => {
            let mut out = String::from("d,h,eps\n");
            for (d, h) in rep.hilbert_function.iter().enumerate() {
                out.push_str(&format!("{d},{h},{}\n", rep.eps[d]));
            }
            out
        }
    };
    c.emit(&text)?;
    Ok(if rep.compressed() { 0 } else { 1 })
}

fn parse_module(m: &Measurements, name: &str) -> Result<Arc<GradedModule>, Failure> {
    match name {
        "k" => Ok(m.module_k.clone()),
        "r" => Ok(m.module_r.clone()),
        "socle-quotient" => Ok(m.socle_quotient()),
        other => match other.strip_prefix("power:").map(str::parse::<usize>) {
            Some(Ok(i)) => Ok(m.power(i)),
            _ => Err(Failure::Usage(format!("unknown module {other:?}; use k, r, power:i or socle-quotient"))),
        },
    }
}

fn betti(c: &Common, ring: RingArg, module: &str) -> Result<u8, Failure> {
    let inst = c.instance(false)?;
    let n = inst.config.truncation();
    let m = Measurements::new(inst);
    let module_arc = parse_module(&m, module)?;
    let ring: &Arc<Ring> = match ring {
        RingArg::Q => &m.q,
        RingArg::P => &m.p,
        RingArg::R => &m.r,
    };
    let res = m.resolve(ring, &module_arc, n);
    let doc = BettiDocument::new(&res, module);
    let text = match c.format() {
        Format::Json => pretty(&serde_json::to_value(&doc).unwrap()),
        Format::Csv => res.betti_table().to_csv(),
    };
    c.emit(&text)?;
    // A degree cap can cut the Euler characteristic short, so an incomplete
    // resolution makes the audit inconclusive rather than failed.
    Ok(if !(doc.minimal && doc.complex) {
        1
    } else if !res.is_complete() {
        2
    } else if !doc.audit {
        1
    } else {
        0
    })
}

fn dr(c: &Common, via: Via) -> Result<u8, Failure> {
    let inst = c.instance(false)?;
    let route = match via {
        Via::T1 => DrRoute::Measured,
        Via::T2 => DrRoute::ClosedForm,
        Via::Lemma56 => DrRoute::BettiClosedForm,
    };
    let d = measure_dr(&inst, route)?;
    let text = match c.format() {
        Format::Json => pretty(&json!({
            "schema": 1,
            "via": format!("{:?}", route).to_lowercase(),
            "e": inst.config.e,
            "s": inst.config.s,
            "coefficients": d,
            "degree": d.degree(),
            "display": d.to_string(),
        })),
        Format::Csv => {
            let mut out = String::from("k,coefficient\n");
            for (k, a) in d.coeffs().iter().enumerate() {
                out.push_str(&format!("{k},{a}\n"));
            }
            out
        }
    };
    c.emit(&text)?;
    Ok(0)
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("suite,check,status,hard\n");
    for r in reports {
        for ch in &r.checks {
            let status = serde_json::to_value(ch.status).unwrap();
            out.push_str(&format!("{},{},{},{}\n", r.suite, ch.name, status.as_str().unwrap(), ch.hard));
        }
    }
    out
}

fn emit_reports(c: &Common, reports: Vec<VerificationReport>) -> Result<u8, Failure> {
    let status = Status::combine(reports.iter().map(|r| r.status));
    let text = match c.format() {
        Format::Json if reports.len() == 1 => {
            let mut s = reports[0].to_json();
            s.push('\n');
            s
        }
        Format::Json => pretty(&json!({ "schema": 1, "status": status, "reports": reports })),
        Format::Csv => reports_csv(&reports),
    };
    c.emit(&text)?;
    Ok(status.exit_code() as u8)
}

fn verify(c: &Common, suite: Suite, with_maps: bool, with_socle: bool) -> Result<u8, Failure> {
    let mut cfg = c.config()?;
    if c.generator.is_some() {
        return Err(Failure::Usage("verify samples its own instances; drop --generator".into()));
    }
    cfg.map_checks = with_maps || suite == Suite::All;
    cfg.socle_check = with_socle || suite == Suite::All;
    let reports = match suite {
        Suite::Main => vec![run_main_theorem_suite(&cfg)?],
        Suite::GolodPowers => vec![run_golod_powers_suite(&cfg)?],
        Suite::Socle => vec![run_socle_quotient_suite(&cfg)?],
        Suite::All => vec![
            run_main_theorem_suite(&cfg)?,
            run_golod_powers_suite(&cfg)?,
            run_socle_quotient_suite(&cfg)?,
        ],
    };
    emit_reports(c, reports)
}

fn maps(c: &Common, checks: &[CheckArg]) -> Result<u8, Failure> {
    let cfg = c.config()?;
    if c.generator.is_some() {
        return Err(Failure::Usage("maps samples its own instance; drop --generator".into()));
    }
    let mut selected = Vec::new();
    for ch in checks {
        let m = match ch {
            CheckArg::Nu => MapCheck::Nu,
            CheckArg::Phi => MapCheck::Phi,
            CheckArg::Rho => MapCheck::Rho,
            CheckArg::GolodCriterion => MapCheck::GolodCriterion,
            CheckArg::SocleFactorization => continue,
        };
        if !selected.contains(&m) {
            selected.push(m);
        }
    }
    let socle = checks.contains(&CheckArg::SocleFactorization);
    emit_reports(c, vec![run_map_checks(&cfg, &selected, socle)?])
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Gen(c) => gen(c),
        Command::Hilbert(c) => hilbert(c),
        Command::Betti { common, ring, module } => betti(common, *ring, module),
        Command::Dr { common, via } => dr(common, *via),
        Command::Verify {
            common,
            suite,
            with_maps,
            with_socle,
        } => verify(common, *suite, *with_maps, *with_socle),
        Command::Maps { common, check } => maps(common, check),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Run(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}
