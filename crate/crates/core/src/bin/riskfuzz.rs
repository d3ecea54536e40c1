//! `riskfuzz` command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use riskfuzz::fuzzy::{default_config, FisConfig};
use riskfuzz::mcdm::{rank, rank_fuzzy_topsis, Method, MethodParams, ScoredRanking};
use riskfuzz::pipeline::{run_pipeline_on, PipelineOptions, PipelineReport};
use riskfuzz::rank_analysis::render_heatmap_svg;
use riskfuzz::render::{render_assessment_csv, render_matrix_ascii, render_matrix_svg};
use riskfuzz::risk_model::questionnaire::rules_path_for;
use riskfuzz::risk_model::registry::{IMPACT_CRITERION, LIKELIHOOD_CRITERION};
use riskfuzz::risk_model::{
    aggregate_expert_ratings, fuzzy_ratings, generate_synthetic, DistributionSpec, Questionnaire,
};
use riskfuzz::weighting::derive_weights_topsis;
use riskfuzz::{Error, Result};

#[derive(Parser)]
#[command(name = "riskfuzz", version, about = "Climate transition risk prioritisation")]
struct Cli {
    /// Fuzzy system configuration (JSON); defaults to the built-in profile.
    #[arg(long, global = true, env = "RISKFUZZ_CONFIG")]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Criteria weights from section 1 of the questionnaire.
    Weights { questionnaire: PathBuf },
    /// Rank the risks with one method (or all of them).
    Rank {
        questionnaire: PathBuf,
        /// A method name, `fuzzy-topsis`, or `all`.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Kendall correlation between methods and their Borda consensus.
    Compare {
        questionnaire: PathBuf,
        /// Also write the correlation heatmap as SVG.
        #[arg(long)]
        heatmap: Option<PathBuf>,
    },
    /// Crisp fuzzy risk value and level per risk, highest first.
    Assess { questionnaire: PathBuf },
    /// The 5×5 risk matrix with every risk placed.
    Matrix {
        questionnaire: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Colour cells from the active fuzzy system instead of the published layout.
        #[arg(long)]
        recompute_colors: bool,
    },
    /// Draw a synthetic questionnaire from a distribution spec.
    Generate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        experts: usize,
        #[arg(long)]
        seed: u64,
        /// Output file, JSON unless it ends in `.csv` (rules then go to
        /// `<stem>.rules.csv` next to it). Stdout (JSON) when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Full pipeline report as JSON.
    Report {
        questionnaire: PathBuf,
        /// Destination, or `-` for stdout.
        #[arg(long)]
        json: PathBuf,
        #[arg(long)]
        recompute_colors: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn load_config(cli: &Cli) -> Result<FisConfig> {
    match &cli.config {
        Some(p) => FisConfig::load(p),
        None => Ok(default_config()),
    }
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::io(path, e))
}

fn emit(content: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(content.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::io("<stdout>", e))
}

fn note(cli: &Cli, msg: &str) {
    if !cli.quiet {
        eprintln!("{msg}");
    }
}

fn rankings_csv(rankings: &[ScoredRanking]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["method", "alternative", "score", "rank"]).expect("in-memory write");
    for r in rankings {
        for ((a, s), k) in r.alternatives.iter().zip(&r.scores).zip(&r.ranks) {
            w.write_record([r.method.as_str(), a, &format!("{s:.6}"), &k.to_string()])
                .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn pipeline(cli: &Cli, questionnaire: &Path, recompute_colors: bool) -> Result<PipelineReport> {
    let q = Questionnaire::load(questionnaire)?;
    let cfg = load_config(cli)?;
    let opts = PipelineOptions {
        params: MethodParams::default(),
        recompute_colors,
    };
    run_pipeline_on(&q, &cfg, &opts)
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Weights { questionnaire } => {
            let q = Questionnaire::load(questionnaire)?;
            let w = derive_weights_topsis(&q.section1())?;
            emit(&match cli.format {
                Format::Csv => w.to_csv(),
                Format::Json => w.to_json() + "\n",
            })
        }
        Command::Rank { questionnaire, method } => {
            let q = Questionnaire::load(questionnaire)?;
            let w = derive_weights_topsis(&q.section1())?;
            let agg = aggregate_expert_ratings(&q, &w)?;
            let params = MethodParams::default();
            let fuzzy = || {
                rank_fuzzy_topsis(
                    agg.matrix.alternatives(),
                    &fuzzy_ratings(&q, LIKELIHOOD_CRITERION),
                    &fuzzy_ratings(&q, IMPACT_CRITERION),
                )
            };
            let rankings = match method.to_ascii_lowercase().as_str() {
                "all" => {
                    let mut all = riskfuzz::mcdm::rank_all(&agg.matrix, &params)?;
                    all.push(fuzzy()?);
                    all
                }
                "fuzzy-topsis" | "fuzzy_topsis" => vec![fuzzy()?],
                other => vec![rank(other.parse::<Method>()?, &agg.matrix, &params)?],
            };
            emit(&match (cli.format, rankings.as_slice()) {
                (Format::Csv, [single]) => single.to_csv(),
                (Format::Csv, many) => rankings_csv(many),
                (Format::Json, [single]) => single.to_json() + "\n",
                (Format::Json, many) => serde_json::to_string_pretty(many)? + "\n",
            })
        }
        Command::Compare { questionnaire, heatmap } => {
            let report = pipeline(cli, questionnaire, false)?;
            if let Some(path) = heatmap {
                write_file(path, &render_heatmap_svg(&report.correlation))?;
                note(cli, &format!("wrote {}", path.display()));
            }
            emit(&match cli.format {
                Format::Csv => format!("{}\n{}", report.correlation.to_csv(), report.consensus.to_csv()),
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "correlation": report.correlation,
                        "consensus": report.consensus,
                    }))? + "\n"
                }
            })
        }
        Command::Assess { questionnaire } => {
            let report = pipeline(cli, questionnaire, false)?;
            let rows: Vec<_> = report.assessments.iter().map(|a| a.row()).collect();
            emit(&match cli.format {
                Format::Csv => render_assessment_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&report.assessments)? + "\n",
            })
        }
        Command::Matrix {
            questionnaire,
            svg,
            recompute_colors,
        } => {
            let report = pipeline(cli, questionnaire, *recompute_colors)?;
            if let Some(path) = svg {
                write_file(path, &render_matrix_svg(&report.matrix))?;
                note(cli, &format!("wrote {}", path.display()));
            }
            emit(&match cli.format {
                Format::Csv => render_matrix_ascii(&report.matrix),
                Format::Json => serde_json::to_string_pretty(&report.matrix)? + "\n",
            })
        }
        Command::Generate {
            spec,
            experts,
            seed,
            output,
        } => {
            let spec = DistributionSpec::load(spec)?;
            let q = generate_synthetic(&spec, *experts, *seed)?;
            let csv_out = output
                .as_deref()
                .and_then(Path::extension)
                .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
            match output {
                None if cli.format == Format::Csv => Err(Error::validation(
                    "CSV questionnaires span two files; pass --output FILE.csv",
                )),
                None => emit(&q.to_json()),
                Some(path) if csv_out => {
                    let (ratings, rules) = q.to_csv();
                    let rules_path = rules_path_for(path);
                    write_file(path, &ratings)?;
                    write_file(&rules_path, &rules)?;
                    note(cli, &format!("wrote {} and {}", path.display(), rules_path.display()));
                    Ok(())
                }
                Some(path) => {
                    write_file(path, &q.to_json())?;
                    note(cli, &format!("wrote {}", path.display()));
                    Ok(())
                }
            }
        }
        Command::Report {
            questionnaire,
            json,
            recompute_colors,
        } => {
            let report = pipeline(cli, questionnaire, *recompute_colors)?;
            if json.as_os_str() == "-" {
                emit(&report.to_json())
            } else {
                write_file(json, &report.to_json())?;
                note(
                    cli,
                    &format!(
                        "wrote {} ({} experts, consensus top risk {})",
                        json.display(),
                        report.experts,
                        report.consensus.ordered().first().copied().unwrap_or("-")
                    ),
                );
                Ok(())
            }
        }
    }
}
