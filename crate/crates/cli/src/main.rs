use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zpdlab_cli::cache::{Cache, SCHEMA_VERSION};
use zpdlab_cli::exit_codes;
use zpdlab_cli::{construct, suite};
use zpdlab_core::algebra::Side;
use zpdlab_core::decision::{
    decide_two_sided_zpd, decide_zlpd, decide_zpd, Verdict,
};
use zpdlab_core::io::{AlgebraDto, CertificateDto};
use zpdlab_core::maps::{cocycle_space, multiplier_algebra, Bimodule};
use zpdlab_core::span::{square_zero_span, SamplerConfig};
use zpdlab_core::Algebra;

#[derive(Parser)]
#[command(
    name = "zpdlab",
    about = "Exact-arithmetic determinedness analysis for finite-dimensional algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a determinedness property and print the certificate.
    Analyze(AnalyzeArgs),
    /// Compute a map-space or span dimension report.
    Spaces(SpacesArgs),
    /// Run the whole regression scenario suite.
    PaperSuite(SuiteArgs),
    /// Print a constructed algebra as JSON.
    Export(ExportArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Constructor expression, e.g. `jordan:3` or `tensor:(matrix:2,matrix:2)`.
    #[arg(long, conflicts_with = "file")]
    construct: Option<String>,
    /// Path to an algebra JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn load(&self) -> Result<(Algebra, String), String> {
        match (&self.construct, &self.file) {
            (Some(spec), None) => {
                let alg = construct::build(spec).map_err(|e| e.to_string())?;
                let canonical = serde_json::to_string(&AlgebraDto::from_algebra(&alg))
                    .expect("serializable");
                Ok((alg, canonical))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let dto: AlgebraDto =
                    serde_json::from_str(&text).map_err(|e| format!("invalid algebra JSON: {e}"))?;
                let alg = dto.to_algebra().map_err(|e| e.to_string())?;
                let canonical = serde_json::to_string(&dto).expect("serializable");
                Ok((alg, canonical))
            }
            _ => Err("exactly one of --construct or --file is required".into()),
        }
    }
}

#[derive(Args)]
struct SamplerArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    saturation_rounds: usize,
    #[arg(long)]
    max_samples: Option<usize>,
    #[arg(long, default_value_t = 10)]
    height: i64,
}

impl SamplerArgs {
    fn config(&self) -> SamplerConfig {
        SamplerConfig {
            seed: self.seed,
            saturation_rounds: self.saturation_rounds,
            max_samples: self.max_samples,
            coefficient_height: self.height,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Zpd,
    Zlpd,
    #[value(alias = "two_sided_zpd")]
    TwoSidedZpd,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[command(flatten)]
    sampler: SamplerArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct SpacesArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// One of: der, inner, multipliers, multiplier_algebra, cocycle:N,
    /// square_zero, commutator.
    #[arg(long)]
    space: String,
    #[command(flatten)]
    sampler: SamplerArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only the named scenario.
    #[arg(long)]
    only: Option<String>,
    /// Trial count for the randomized sweep scenarios.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, value_enum, default_value = "table")]
    output: OutputFormat,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    construct: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Spaces(args) => cmd_spaces(args),
        Command::PaperSuite(args) => cmd_paper_suite(args),
        Command::Export(args) => cmd_export(args),
    };
    ExitCode::from(code as u8)
}

fn invalid(message: &str) -> i32 {
    eprintln!("error: {message}");
    exit_codes::INVALID_INPUT
}

fn cmd_analyze(args: AnalyzeArgs) -> i32 {
    let (alg, canonical) = match args.source.load() {
        Ok(v) => v,
        Err(e) => return invalid(&e),
    };
    let cfg = args.sampler.config();
    let property_tag = match args.property {
        PropertyArg::Zpd => "zpd",
        PropertyArg::Zlpd => "zlpd",
        PropertyArg::TwoSidedZpd => "two_sided_zpd",
    };
    let format_tag = match args.output {
        OutputFormat::Json => "json",
        OutputFormat::Table => "table",
    };
    let cache = Cache::resolve(args.cache_dir.as_deref());
    let key = Cache::key(&[
        &canonical,
        property_tag,
        &serde_json::to_string(&cfg).expect("serializable"),
        format_tag,
    ]);
    if let Some(cache) = &cache {
        if let Some((code, payload)) = cache.lookup(&key) {
            print!("{payload}");
            return code;
        }
    }

    let cert = match args.property {
        PropertyArg::Zpd => decide_zpd(&alg, &cfg),
        PropertyArg::Zlpd => decide_zlpd(&alg, &cfg),
        PropertyArg::TwoSidedZpd => decide_two_sided_zpd(&alg, &cfg),
    };
    let dto = CertificateDto::from_certificate(&cert);
    let payload = match args.output {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&dto).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Table => render_certificate_table(&alg, &dto),
    };
    let code = match cert.verdict {
        Verdict::Yes => exit_codes::OK,
        Verdict::No => exit_codes::NO,
        Verdict::NoUncertified => exit_codes::NO_UNCERTIFIED,
    };
    print!("{payload}");
    if let Some(cache) = &cache {
        cache.store(&key, code, &payload);
    }
    code
}

fn render_certificate_table(alg: &Algebra, dto: &CertificateDto) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra    {} (dim {})\n", alg.name(), alg.dim()));
    out.push_str(&format!("property   {:?}\n", dto.property));
    out.push_str(&format!("verdict    {:?}\n", dto.verdict));
    out.push_str(&format!("dims       ker {} / span {}\n", dto.dims.ker, dto.dims.span));
    out.push_str(&format!("method     {:?}\n", dto.span_report.method));
    out.push_str(&format!("field      {:?}\n", dto.field_note));
    out.push_str(&format!("seed       {}\n", dto.span_report.seed));
    if dto.witness.is_some() {
        out.push_str("witness    attached (functional + kernel tensor)\n");
    }
    out
}

#[derive(Serialize)]
struct SpaceReportDto {
    schema_version: u32,
    space: String,
    algebra: String,
    dims: BTreeMap<String, usize>,
    flags: BTreeMap<String, bool>,
    seed: u64,
}

fn cmd_spaces(args: SpacesArgs) -> i32 {
    let (alg, _) = match args.source.load() {
        Ok(v) => v,
        Err(e) => return invalid(&e),
    };
    let cfg = args.sampler.config();
    let mut dims = BTreeMap::new();
    let mut flags = BTreeMap::new();
    let spec = args.space.trim();
    let result: Result<(), String> = (|| {
        match spec {
            "der" => {
                let module = Bimodule::regular(&alg);
                dims.insert(
                    "derivations".into(),
                    zpdlab_core::maps::derivation_space(&alg, &module).dim(),
                );
            }
            "inner" => {
                let module = Bimodule::regular(&alg);
                dims.insert(
                    "inner_derivations".into(),
                    zpdlab_core::maps::inner_derivation_space(&alg, &module).dim(),
                );
            }
            "multipliers" => {
                let module = Bimodule::regular(&alg);
                dims.insert(
                    "left_multipliers".into(),
                    zpdlab_core::maps::multiplier_space(&alg, &module, Side::Left).dim(),
                );
                dims.insert(
                    "right_multipliers".into(),
                    zpdlab_core::maps::multiplier_space(&alg, &module, Side::Right).dim(),
                );
            }
            "multiplier_algebra" => {
                let m = multiplier_algebra(&alg).map_err(|e| e.to_string())?;
                dims.insert("multiplier_algebra".into(), m.algebra.dim());
                dims.insert("algebra".into(), alg.dim());
                flags.insert("embedding_bijective".into(), m.onto);
            }
            "square_zero" => {
                let report = square_zero_span(&alg, &cfg);
                dims.insert("square_zero_span".into(), report.span.dim());
            }
            "commutator" => {
                let commutators = alg.commutator_span();
                let square = square_zero_span(&alg, &cfg).span;
                dims.insert("commutator_span".into(), commutators.dim());
                dims.insert("square_zero_span".into(), square.dim());
                flags.insert(
                    "commutators_in_square_zero_span".into(),
                    commutators.is_subset(&square).unwrap_or(false),
                );
            }
            other => {
                if let Some(n) = other.strip_prefix("cocycle:") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| format!("bad cocycle degree {n:?}"))?;
                    let module = Bimodule::regular(&alg);
                    let space =
                        cocycle_space(&alg, &module, n, 10_000_000).map_err(|e| e.to_string())?;
                    dims.insert(format!("cocycles_{n}"), space.dim());
                } else {
                    return Err(format!("unknown space {other:?}"));
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = result {
        return invalid(&e);
    }
    let report = SpaceReportDto {
        schema_version: SCHEMA_VERSION,
        space: spec.to_string(),
        algebra: alg.name().to_string(),
        dims,
        flags,
        seed: cfg.seed,
    };
    match args.output {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        OutputFormat::Table => {
            println!("algebra  {} (dim {})", report.algebra, alg.dim());
            println!("space    {}", report.space);
            for (k, v) in &report.dims {
                println!("  {k:32} {v}");
            }
            for (k, v) in &report.flags {
                println!("  {k:32} {v}");
            }
        }
    }
    exit_codes::OK
}

#[derive(Serialize)]
struct ScenarioDto {
    schema_version: u32,
    scenario: String,
    paper_anchor: String,
    verdict: String,
    dims: Option<(usize, usize)>,
    seed: u64,
    elapsed_ms: u128,
}

fn cmd_paper_suite(args: SuiteArgs) -> i32 {
    if let Some(only) = &args.only {
        if !suite::scenario_names().contains(&only.as_str()) {
            return invalid(&format!(
                "unknown scenario {only:?}; known: {}",
                suite::scenario_names().join(", ")
            ));
        }
    }
    let cfg = suite::SuiteConfig {
        seed: args.seed,
        trials: args.trials,
        only: args.only.clone(),
    };
    let outcomes = suite::run_suite(&cfg);
    let mut all_pass = true;
    match args.output {
        OutputFormat::Json => {
            for o in &outcomes {
                all_pass &= o.pass;
                let dto = ScenarioDto {
                    schema_version: SCHEMA_VERSION,
                    scenario: o.name.to_string(),
                    paper_anchor: o.anchor.to_string(),
                    verdict: if o.pass { "pass" } else { "fail" }.to_string(),
                    dims: o.dims,
                    seed: o.seed,
                    elapsed_ms: o.elapsed_ms,
                };
                println!("{}", serde_json::to_string(&dto).expect("serializable"));
            }
        }
        OutputFormat::Table => {
            println!("{:>2}  {:<24} {:<6} {:>8}  detail", "#", "scenario", "result", "ms");
            for o in &outcomes {
                all_pass &= o.pass;
                println!(
                    "{:>2}  {:<24} {:<6} {:>8}  {}",
                    o.index + 1,
                    o.name,
                    if o.pass { "pass" } else { "FAIL" },
                    o.elapsed_ms,
                    o.detail
                );
            }
            let (passed, total) = (
                outcomes.iter().filter(|o| o.pass).count(),
                outcomes.len(),
            );
            println!("{passed}/{total} scenarios passed (seed {})", args.seed);
        }
    }
    if outcomes.is_empty() {
        return invalid("no scenarios selected");
    }
    if all_pass {
        exit_codes::OK
    } else {
        exit_codes::FAILURE
    }
}

fn cmd_export(args: ExportArgs) -> i32 {
    let alg = match construct::build(&args.construct) {
        Ok(a) => a,
        Err(e) => return invalid(&e.to_string()),
    };
    let dto = AlgebraDto::from_algebra(&alg);
    let mut text = serde_json::to_string_pretty(&dto).expect("serializable");
    text.push('\n');
    match args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                return invalid(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    exit_codes::OK
}
