//! Command-line front end.

pub mod atlas;
pub mod dto;
pub mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::local::{classify_plane_germ, milnor_number, Germ, DEFAULT_JET_CAP};
use crate::pencil::{analyze_germ, analyze_pencil, AnalysisOptions, PencilConfig, PlaneGermFamily};
use crate::poly::rational::{parse_rational, rat};
use crate::poly::{parse_expression, Rational};
use atlas::{parse_atlas, parse_point, parse_variables};
use dto::{to_json, ClassJson, GermJson, MuJson, PencilJson};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "polar-milnor",
    version,
    about = "Milnor numbers, polar Milnor numbers and atypical values of p/q on plane charts"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Seed for the generic parameter samples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest jet order tried before giving up as non-isolated.
    #[arg(long, global = true, default_value_t = DEFAULT_JET_CAP)]
    jet_cap: u32,
    /// Extra parameter values to analyze, e.g. `--candidates=-1,1/2`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    candidates: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the pencil analysis.
    #[arg(long, global = true, default_value_t = 1)]
    parallelism: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Milnor number of a hypersurface germ at a point.
    Mu(GermArgs),
    /// ADE label of a plane curve germ at a point.
    Classify(GermArgs),
    /// Analysis of the family p - t*q at one base point.
    Germ(FamilyArgs),
    /// Full analysis over a chart atlas file.
    Pencil(PencilArgs),
}

#[derive(Debug, Args)]
struct GermArgs {
    #[arg(long)]
    vars: String,
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Defaults to the origin.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    vars: String,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Base point, defaults to the origin.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Debug, Args)]
struct PencilArgs {
    #[arg(long)]
    atlas: PathBuf,
}

/// Validated settings shared by all subcommands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub seed: u64,
    pub jet_cap: u32,
    pub candidate_overrides: Vec<Rational>,
    pub output_format: OutputFormat,
    pub out: Option<PathBuf>,
    pub parallelism: usize,
}

impl CliConfig {
    fn from_common(c: &Common) -> Result<Self> {
        if c.jet_cap < 4 {
            return Err(Error::Invalid("--jet-cap must be at least 4".into()));
        }
        if c.parallelism < 1 {
            return Err(Error::Invalid("--parallelism must be at least 1".into()));
        }
        let candidate_overrides = match &c.candidates {
            None => Vec::new(),
            Some(s) => parse_candidates(s)?,
        };
        Ok(CliConfig {
            seed: c.seed,
            jet_cap: c.jet_cap,
            candidate_overrides,
            output_format: c.format,
            out: c.out.clone(),
            parallelism: c.parallelism,
        })
    }
}

pub fn parse_candidates(s: &str) -> Result<Vec<Rational>> {
    let mut v = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_rational(t).ok_or_else(|| Error::Invalid(format!("bad candidate `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

fn point_or_origin(text: &Option<String>, dim: usize) -> Result<Vec<Rational>> {
    match text {
        Some(t) => parse_point(t, dim),
        None => Ok(vec![rat(0); dim]),
    }
}

fn run_mu(args: &GermArgs, cfg: &CliConfig) -> Result<String> {
    let vars = parse_variables(&args.vars)?;
    let f = parse_expression(&args.poly, &vars)?;
    let pt = point_or_origin(&args.point, vars.len())?;
    let m = milnor_number(&Germ::at(&f, &pt), cfg.jet_cap)?;
    Ok(match cfg.output_format {
        OutputFormat::Json => to_json(&MuJson::new(&pt, &m, &vars)),
        OutputFormat::Text => format!("mu = {}\n", m.mu),
    })
}

fn run_classify(args: &GermArgs, cfg: &CliConfig) -> Result<String> {
    let vars = parse_variables(&args.vars)?;
    let f = parse_expression(&args.poly, &vars)?;
    let pt = point_or_origin(&args.point, vars.len())?;
    let c = classify_plane_germ(&Germ::at(&f, &pt), cfg.jet_cap)?;
    Ok(match cfg.output_format {
        OutputFormat::Json => to_json(&ClassJson {
            point: pt
                .iter()
                .map(crate::poly::rational::to_fraction_string)
                .collect(),
            class: c.label.to_string(),
            mu: c.mu,
            corank: c.corank,
        }),
        OutputFormat::Text => format!("{c}\n"),
    })
}

fn run_germ(args: &FamilyArgs, cfg: &CliConfig) -> Result<String> {
    let vars = parse_variables(&args.vars)?;
    if vars.len() != 2 {
        return Err(Error::Invalid(
            "germ analysis needs exactly 2 variables".into(),
        ));
    }
    let p = parse_expression(&args.p, &vars)?;
    let q = parse_expression(&args.q, &vars)?;
    let pt = point_or_origin(&args.point, 2)?;
    let fam = PlaneGermFamily::new(&p, &q, [pt[0].clone(), pt[1].clone()])?;
    let opts = AnalysisOptions {
        jet_cap: cfg.jet_cap,
        seed: cfg.seed,
        overrides: cfg.candidate_overrides.clone(),
        extra_candidates: Vec::new(),
    };
    let r = analyze_germ(fam, &opts)?;
    Ok(match cfg.output_format {
        OutputFormat::Json => to_json(&GermJson::from(&r)),
        OutputFormat::Text => text::germ_text(&r, ""),
    })
}

fn run_pencil(args: &PencilArgs, cfg: &CliConfig) -> Result<String> {
    let src = std::fs::read_to_string(&args.atlas)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", args.atlas.display())))?;
    let atlas = parse_atlas(&src)?;
    let config = PencilConfig {
        seed: cfg.seed,
        jet_cap: cfg.jet_cap,
        candidate_overrides: cfg.candidate_overrides.clone(),
        parallelism: cfg.parallelism,
    };
    let r = analyze_pencil(&atlas.charts, &atlas.overlaps, &config)?;
    Ok(match cfg.output_format {
        OutputFormat::Json => to_json(&PencilJson::from(&r)),
        OutputFormat::Text => text::pencil_text(&r),
    })
}

fn execute(cli: &Cli) -> Result<String> {
    let cfg = CliConfig::from_common(&cli.common)?;
    let out = match &cli.command {
        Command::Mu(a) => run_mu(a, &cfg)?,
        Command::Classify(a) => run_classify(a, &cfg)?,
        Command::Germ(a) => run_germ(a, &cfg)?,
        Command::Pencil(a) => run_pencil(a, &cfg)?,
    };
    if let Some(path) = &cfg.out {
        std::fs::write(path, &out)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(out)
}

/// Runs the tool and returns the exit code: 0 on success, 2 when the
/// mathematics refuses (non-isolated, incomplete, ...), 1 on bad input.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{shown}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{shown}");
                    1
                }
            };
        }
    };
    match execute(&cli) {
        Ok(s) => {
            let _ = write!(stdout, "{s}");
            0
        }
        Err(e) => {
            let kind = if e.is_refusal() { "refused" } else { "error" };
            let _ = writeln!(stderr, "{kind}: {e}");
            if e.is_refusal() {
                2
            } else {
                1
            }
        }
    }
}
