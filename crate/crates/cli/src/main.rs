//! `sf`: exact verification, obstruction and reproduction of half-flat
//! SU(3)-structures on six-dimensional decomposable Lie algebras.
//!
//! Exit status: 0 on PASS/success verdicts, 1 on FAIL verdicts, 2 on
//! usage or data errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sf_core::catalog::{
    parse_bindings, reproduce, verify_pair_against, Catalog, ReproduceConfig, ReproduceScope,
};
use sf_core::exterior::{parse_form, KForm};
use sf_core::halfflat::{lambda_sign_analysis, obstruction_certificate};
use sf_core::lie::{parse_presentation, Presentation};
use sf_core::scalar::Rat;

#[derive(Parser)]
#[command(
    name = "sf",
    about = "Exact calculus of stable forms and half-flat structures on Lie algebras",
    version
)]
struct Cli {
    /// Catalog directory (default: $SF_CATALOG_DIR, then ./catalog)
    #[arg(long, global = true)]
    catalog_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct AlgebraSource {
    /// Catalog algebra name, e.g. `A4.1+r2` or `A5.19+R`
    #[arg(long, conflicts_with = "algebra")]
    catalog: Option<String>,

    /// Presentation file path (the `.alg` format)
    #[arg(long)]
    algebra: Option<PathBuf>,

    /// Parameter binding `name=p/q`; may be repeated
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a candidate pair against the half-flat conditions
    Verify {
        #[command(flatten)]
        source: AlgebraSource,
        /// Pair file with `omega`, `rho` and optionally the expected metric
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the one-form obstruction certificate
    Obstruct {
        #[command(flatten)]
        source: AlgebraSource,
        /// One-form, e.g. `e4` or `1*4 + 2*5`
        #[arg(long, conflicts_with = "scan_basis")]
        alpha: Option<String>,
        /// Try all six basis one-forms
        #[arg(long)]
        scan_basis: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cohomology dimensions and structural invariants
    Cohomology {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sign analysis of the quartic invariant on closed three-forms
    LambdaSign {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 20_106)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Catalog inspection
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Re-derive catalog annotations (classification, tables, examples)
    Reproduce {
        /// examples | cohomology | theorem-4d | theorem-5d | prop-3.3 |
        /// prop-4.1 | prop-4.2 | all
        #[arg(long)]
        scope: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 20_106)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog algebras and annotated subcases
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn load_catalog(dir: &Option<PathBuf>) -> anyhow::Result<Catalog> {
    let dir = dir.clone().unwrap_or_else(Catalog::default_dir);
    Ok(Catalog::load(&dir)?)
}

fn load_source(
    cat: &Catalog,
    source: &AlgebraSource,
) -> anyhow::Result<(Presentation, BTreeMap<String, Rat>)> {
    let bindings = parse_bindings(&source.params).map_err(anyhow::Error::msg)?;
    let p = match (&source.catalog, &source.algebra) {
        (Some(name), None) => cat.instantiate(name, &bindings)?.presentation,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            parse_presentation(&text, &bindings).map_err(|e| anyhow::anyhow!("{}", e))?
        }
        _ => anyhow::bail!("exactly one of --catalog or --algebra is required"),
    };
    Ok((p, bindings))
}

fn parse_alpha(spec: &str, rootd: u32) -> anyhow::Result<KForm> {
    let cleaned: String = spec.chars().filter(|c| *c != 'e' && *c != '^').collect();
    let empty = BTreeMap::new();
    parse_form(cleaned.trim(), 6, 1, rootd, &empty)
        .map_err(|e| anyhow::anyhow!("bad one-form `{}`: {}", spec, e))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            source,
            pair,
            format,
        } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            let (g, _) = load_source(&cat, &source)?;
            let text = std::fs::read_to_string(&pair)?;
            let pair = sf_core::catalog::parse_pair(&pair.to_string_lossy(), &text)?;
            let v = verify_pair_against(&g, &pair)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v)?),
                Format::Text => {
                    let r = &v.report;
                    println!("algebra:            {}", r.algebra);
                    println!("rho closed:         {}", r.rho_closed);
                    println!("omega^2 closed:     {}", r.omega2_closed);
                    println!("compatible:         {}", r.compatible);
                    println!("normalized:         {}", r.normalized);
                    println!("lambda < 0:         {}", r.lambda_negative);
                    println!("metric pos. def.:   {}", r.metric_positive_definite);
                    println!("gram matches:       {}", v.gram_matches);
                    println!("verdict:            {}", if v.verdict { "PASS" } else { "FAIL" });
                }
            }
            Ok(exit_bool(v.verdict))
        }
        Command::Obstruct {
            source,
            alpha,
            scan_basis,
            format,
        } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            let (g, _) = load_source(&cat, &source)?;
            if scan_basis {
                let mut found = false;
                let mut reports = Vec::new();
                for i in 1..=6u8 {
                    let cert = obstruction_certificate(&g, &KForm::basis(6, &[i]))?;
                    found |= cert.is_obstruction();
                    reports.push(cert);
                }
                match format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
                    Format::Text => {
                        for c in &reports {
                            println!(
                                "alpha = {:<12} {}",
                                c.alpha,
                                verdict_text(c)
                            );
                        }
                    }
                }
                return Ok(exit_bool(found));
            }
            let alpha = alpha
                .ok_or_else(|| anyhow::anyhow!("--alpha or --scan-basis is required"))?;
            let alpha = parse_alpha(&alpha, g.rootd)?;
            let cert = obstruction_certificate(&g, &alpha)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&cert)?),
                Format::Text => {
                    println!("algebra:  {}", cert.algebra);
                    println!("alpha:    {}", cert.alpha);
                    println!("dim Z^3:  {}", cert.dim_z3);
                    println!("dim Z^4:  {}", cert.dim_z4);
                    println!("verdict:  {}", verdict_text(&cert));
                }
            }
            Ok(exit_bool(cert.is_obstruction()))
        }
        Command::Cohomology { source, format } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            let (g, _) = load_source(&cat, &source)?;
            let report = g.report()?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => {
                    println!("algebra:     {}", report.algebra);
                    println!("jacobi:      {}", report.jacobi);
                    if let Some(h) = &report.h {
                        println!("h*:          {:?}", h);
                    }
                    if let Some(c) = report.center_dim {
                        println!("center:      {}", c);
                    }
                    if let Some(d) = report.derived_dim {
                        println!("derived dim: {}", d);
                    }
                    if let Some(u) = report.unimodular {
                        println!("unimodular:  {}", u);
                    }
                }
            }
            Ok(exit_bool(report.jacobi))
        }
        Command::LambdaSign {
            source,
            samples,
            seed,
            format,
        } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            let (g, _) = load_source(&cat, &source)?;
            let report = lambda_sign_analysis(&g, samples, seed)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => {
                    println!("algebra:  {}", report.algebra);
                    println!("dim Z^3:  {}", report.dim_z3);
                    match &report.status {
                        sf_core::halfflat::LambdaSignOutcome::IdenticallyZero => {
                            println!("status:   lambda = 0 identically on closed three-forms")
                        }
                        sf_core::halfflat::LambdaSignOutcome::NonNegativeSampled {
                            samples,
                        } => println!(
                            "status:   consistent with lambda >= 0 ({} samples, not a proof)",
                            samples
                        ),
                        sf_core::halfflat::LambdaSignOutcome::IndefiniteWitness {
                            sample_index,
                            rho,
                            lambda,
                        } => {
                            println!("status:   indefinite (sample {})", sample_index);
                            println!("witness:  rho = {}", rho);
                            println!("lambda:   {}", lambda);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            match action {
                CatalogAction::List { format } => {
                    match format {
                        Format::Json => {
                            let doc = serde_json::json!({
                                "algebras": cat.algebra_names().collect::<Vec<_>>(),
                                "rows4": cat.annotations.rows4,
                                "rows5": cat.annotations.rows5,
                                "pairs": cat.annotations.pairs,
                            });
                            println!("{}", serde_json::to_string_pretty(&doc)?);
                        }
                        Format::Text => {
                            println!("algebras:");
                            for name in cat.algebra_names() {
                                println!("  {}", name);
                            }
                            println!("subcases:");
                            for row in cat
                                .annotations
                                .rows4
                                .iter()
                                .chain(cat.annotations.rows5.iter())
                            {
                                println!("  {:<20} {}", row.id, row.subcase);
                            }
                            println!("example pairs:");
                            for p in &cat.annotations.pairs {
                                println!("  {:<24} {}", p.file, p.algebra);
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Reproduce {
            scope,
            samples,
            seed,
            format,
        } => {
            let cat = load_catalog(&cli.catalog_dir)?;
            let config = ReproduceConfig { samples, seed };
            let scopes: Vec<ReproduceScope> = if scope == "all" {
                ReproduceScope::all().to_vec()
            } else {
                vec![ReproduceScope::parse(&scope).ok_or_else(|| {
                    anyhow::anyhow!(
                        "unknown scope `{}` (expected examples, cohomology, theorem-4d, \
                         theorem-5d, prop-3.3, prop-4.1, prop-4.2 or all)",
                        scope
                    )
                })?]
            };
            let mut all_ok = true;
            let mut reports = Vec::new();
            for s in scopes {
                let rep = reproduce(&cat, s, config)?;
                all_ok &= rep.all_passed();
                reports.push(rep);
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
                Format::Text => {
                    for rep in &reports {
                        print!("{}", rep.render_text());
                    }
                }
            }
            Ok(exit_bool(all_ok))
        }
    }
}

fn verdict_text(cert: &sf_core::halfflat::ObstructionCertificate) -> String {
    match &cert.verdict {
        sf_core::halfflat::CertificateVerdict::IdenticallyZero => {
            "identically zero: no half-flat SU(3)-structure exists".into()
        }
        sf_core::halfflat::CertificateVerdict::Witness {
            monomial,
            coefficient,
        } => format!(
            "non-zero witness: coefficient {} on {}",
            coefficient, monomial
        ),
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
