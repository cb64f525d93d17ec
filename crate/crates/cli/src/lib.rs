//! Command-line front end for `tokensym`.
//!
//! [`run`] takes the argument list and two writers so the whole program can be
//! driven from tests. Exit codes: 0 on success, 1 on usage errors (bad flags,
//! unknown metric), 2 on data errors (unreadable or malformed files, metric
//! failures).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{ArgGroup, Parser, Subcommand};
use thiserror::Error;
use tokensym::baselines::CorpusStats;
use tokensym::eval::{
    align_lexicon, calibrate_epsilon, evaluate, generate_pairs_from_records, load_pairs,
    load_records, parse_lines, rank_metrics, EvalReport, TokenPair,
};
use tokensym::metric::standard_suite;
use tokensym::seqmetrics::MetricCode;

mod spec;

pub use spec::{MetricSpec, SpecError};

const EVAL_ABOUT: &str = "\
Evaluates metrics on a pairs file and prints `metric,avg_precision,n,m` rows,
best first. Pairs with equal scores keep their file order; metrics with equal
average precision are ordered by name. TF-IDF document frequencies come from
every string of the file, both sides.";

#[derive(Debug, Parser)]
#[command(
    name = "tokensym",
    version,
    about = "Token-symbolized string similarity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scores two strings; TF-IDF statistics come from the two strings alone.
    Score {
        metric: String,
        s1: String,
        s2: String,
    },
    #[command(about = "Evaluates metrics on a pairs file", long_about = EVAL_ABOUT)]
    #[command(group(ArgGroup::new("which").required(true).args(["metric", "all"])))]
    Eval {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        metric: Option<String>,
        /// The 81 hybrid configurations and the 13 baselines.
        #[arg(long)]
        all: bool,
    },
    /// Picks the token threshold with the best F1 on `t1<TAB>t2<TAB>{0|1}` lines.
    Calibrate {
        #[arg(long)]
        tokens: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=9))]
        mu1: u32,
    },
    /// Writes candidate pairs of `id<TAB>text` records sharing a token.
    Pairs {
        #[arg(long)]
        records: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes `term<TAB>label<TAB>score` for every label scoring at least the threshold.
    Align {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        metric: String,
        #[arg(long)]
        threshold: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Data {
        context: String,
        #[source]
        source: tokensym::Error,
    },
    #[error("{0}")]
    Output(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data { .. } | CliError::Output(_) => 2,
        }
    }
}

trait Context<T> {
    fn context(self, context: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T, E: Into<tokensym::Error>> Context<T> for Result<T, E> {
    fn context(self, context: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|e| CliError::Data {
            context: context(),
            source: e.into(),
        })
    }
}

fn in_file(path: &Path) -> impl FnOnce() -> String + '_ {
    move || path.display().to_string()
}

fn parse_metric(s: &str) -> Result<MetricSpec, CliError> {
    s.parse()
        .map_err(|e: SpecError| CliError::Usage(e.to_string()))
}

fn read_lines(path: &Path) -> Result<Vec<String>, CliError> {
    let file = File::open(path).context(in_file(path))?;
    parse_lines(BufReader::new(file)).context(in_file(path))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path).context(in_file(path))?))
}

fn write_report(out: &mut dyn Write, reports: &[EvalReport]) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Output(e.into());
    writer
        .write_record(["metric", "avg_precision", "n", "m"])
        .map_err(io)?;
    for r in reports {
        writer
            .write_record([
                r.metric.clone(),
                format!("{:.4}", r.avg_precision),
                r.n.to_string(),
                r.m.to_string(),
            ])
            .map_err(io)?;
    }
    writer.flush()?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Score { metric, s1, s2 } => {
            let spec = parse_metric(&metric)?;
            let stats = Arc::new(CorpusStats::from_documents([s1.as_str(), s2.as_str()]));
            let score = spec
                .build(&stats)
                .score(&s1, &s2)
                .context(|| metric.clone())?;
            writeln!(out, "{score:.4}")?;
        }
        Command::Eval {
            dataset,
            metric,
            all,
        } => {
            let spec = metric.as_deref().map(parse_metric).transpose()?;
            let data = load_pairs(&dataset).context(in_file(&dataset))?;
            let stats = CorpusStats::from_dataset(&data);
            let reports = if all {
                rank_metrics(&standard_suite(stats), &data).context(in_file(&dataset))?
            } else {
                let metric = spec.expect("clap requires --metric or --all").build(&stats);
                vec![evaluate(metric.as_ref(), &data).context(in_file(&dataset))?]
            };
            write_report(out, &reports)?;
        }
        Command::Calibrate { tokens, mu1 } => {
            let data = load_pairs(&tokens).context(in_file(&tokens))?;
            let pairs: Vec<TokenPair> = data
                .pairs
                .into_iter()
                .map(|p| TokenPair::new(p.s1, p.s2, p.correct))
                .collect();
            let code = MetricCode::new(mu1).map_err(|e| CliError::Usage(e.to_string()))?;
            let epsilon = calibrate_epsilon(&pairs, code).context(in_file(&tokens))?;
            writeln!(out, "{epsilon:.2}")?;
        }
        Command::Pairs { records, out: path } => {
            let records = load_records(&records).context(in_file(&records))?;
            let data = generate_pairs_from_records(&records);
            let mut file = create(&path)?;
            data.write_to(&mut file).context(in_file(&path))?;
            file.flush()?;
        }
        Command::Align {
            terms,
            labels,
            metric,
            threshold,
            out: path,
        } => {
            let spec = parse_metric(&metric)?;
            if !(0.0..=1.0).contains(&threshold) {
                return Err(CliError::Usage(format!(
                    "threshold must lie in [0, 1], got {threshold}"
                )));
            }
            let terms = read_lines(&terms)?;
            let labels = read_lines(&labels)?;
            let stats = Arc::new(CorpusStats::from_documents(
                terms.iter().chain(&labels).map(String::as_str),
            ));
            let alignments = align_lexicon(&terms, &labels, spec.build(&stats).as_ref(), threshold)
                .context(|| metric.clone())?;
            let mut file = create(&path)?;
            for a in alignments {
                writeln!(file, "{}\t{}\t{:.4}", a.term, a.label, a.score)?;
            }
            file.flush()?;
        }
    }
    Ok(())
}

/// Runs the program and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
