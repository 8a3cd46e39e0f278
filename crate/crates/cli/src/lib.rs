//! Command-line front end: `analyze`, `stats`, `topwords`, `domain`, `locate`.
//!
//! Exit codes: 0 ok, 1 usage, 2 I/O or invalid index, 3 lexicon failure.

mod report;

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lexiscope::{
    build_domain_vocabulary, build_vocabulary, compute_stats, extract_project, ingest_nodes,
    locate_concept, ConceptQuery, DomainError, FilterConfig, Lexicon, LexiconError, ProjectIndex,
    RelationKinds, SourceNode,
};

pub use report::{domain_report, locate_report, stats_report, topwords_report, StatsFormat};

#[derive(Debug, Parser)]
#[command(
    name = "lexiscope",
    version,
    about = "Mine the vocabulary of Java identifiers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputMode {
    /// A directory of `.java` files.
    Java,
    /// A JSON-lines file of pre-extracted nodes.
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract identifiers, build the vocabulary and write a project index.
    Analyze {
        /// Source directory, or node file with `--input jsonl`.
        src: PathBuf,
        #[arg(long, env = "LEXISCOPE_DICT")]
        dict: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
        /// Replaces the built-in stoplist.
        #[arg(long)]
        stoplist: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputMode::Java)]
        input: InputMode,
        /// Project name; defaults to the source file or directory name.
        #[arg(long)]
        name: Option<String>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Word and part-of-speech counts of one project.
    Stats {
        index: PathBuf,
        #[arg(long, value_enum, default_value_t = StatsFormat::Table)]
        format: StatsFormat,
    },
    /// Most frequent words of one project.
    Topwords {
        index: PathBuf,
        #[arg(short, default_value_t = 50)]
        k: usize,
    },
    /// Intersect the top words of several projects of one domain.
    Domain {
        #[arg(required = true)]
        indexes: Vec<PathBuf>,
        #[arg(short, default_value_t = 50)]
        k: usize,
        /// Let synonyms and direct hypernyms/hyponyms support a word.
        #[arg(long)]
        semantic: bool,
        #[arg(long, env = "LEXISCOPE_DICT")]
        dict: Option<PathBuf>,
        #[arg(long, default_value = "domain")]
        name: String,
    },
    /// Find the classes and methods that name every keyword of a phrase.
    Locate {
        index: PathBuf,
        phrase: String,
        #[arg(long, env = "LEXISCOPE_DICT")]
        dict: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        /// `all`, `none`, or a comma list of synonym, hypernym, hyponym.
        #[arg(long, default_value = "all")]
        relations: RelationKinds,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Lexicon(_) => 3,
        }
    }
}

fn io_err(context: impl std::fmt::Display) -> impl FnOnce(io::Error) -> CliError {
    move |e| CliError::Io(format!("{context}: {e}"))
}

fn load_index(path: &Path) -> Result<ProjectIndex, CliError> {
    ProjectIndex::load(path).map_err(|e| CliError::Io(e.to_string()))
}

/// Parses `args` (program name first) and runs the command. Help and version
/// requests print to `out` and succeed.
pub fn run_args<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out),
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}").map_err(io_err("stdout"))?;
            Ok(())
        }
        Err(e) => Err(CliError::Usage(e.to_string().trim_end().to_string())),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cli.command {
        Command::Analyze {
            src,
            dict,
            out: out_path,
            stoplist,
            input,
            name,
            threads,
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
            pool.install(|| analyze(&src, &dict, &out_path, stoplist.as_deref(), input, name))?
        }
        Command::Stats { index, format } => {
            let index = load_index(&index)?;
            let vocab = index.vocabulary();
            stats_report(&index.project_name, &compute_stats(&vocab), format)
        }
        Command::Topwords { index, k } => topwords_report(&load_index(&index)?.vocabulary(), k),
        Command::Domain {
            indexes,
            k,
            semantic,
            dict,
            name,
        } => {
            if indexes.len() < 2 {
                return Err(CliError::Usage(format!(
                    "domain needs at least 2 project indexes, got {}",
                    indexes.len()
                )));
            }
            let lexicon = match (semantic, dict) {
                (false, _) => None,
                (true, Some(dict)) => Some(Lexicon::load(dict)?),
                (true, None) => {
                    return Err(CliError::Usage(
                        "--semantic needs --dict or LEXISCOPE_DICT".into(),
                    ))
                }
            };
            let vocabs = indexes
                .iter()
                .map(|p| load_index(p).map(|i| i.vocabulary()))
                .collect::<Result<Vec<_>, _>>()?;
            let domain = build_domain_vocabulary(&name, &vocabs, k, lexicon.as_ref()).map_err(
                |e| match e {
                    DomainError::TooFewProjects(_) | DomainError::ZeroK => {
                        CliError::Usage(e.to_string())
                    }
                },
            )?;
            domain_report(&domain)
        }
        Command::Locate {
            index,
            phrase,
            dict,
            depth,
            relations,
            limit,
        } => {
            let query = ConceptQuery::parse(&phrase)
                .map_err(|e| CliError::Usage(e.to_string()))?
                .with_relations(relations)
                .with_depth(depth);
            if limit == 0 {
                return Err(CliError::Usage("--limit must be at least 1".into()));
            }
            let index = load_index(&index)?;
            let lexicon = Lexicon::load(dict)?;
            locate_report(&locate_concept(&index.nodes, &query, &lexicon, limit))
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err("stdout"))
}

fn analyze(
    src: &Path,
    dict: &Path,
    out_path: &Path,
    stoplist: Option<&Path>,
    input: InputMode,
    name: Option<String>,
) -> Result<String, CliError> {
    let (nodes, file_count) = match input {
        InputMode::Java => {
            let extraction = extract_project(src).map_err(|e| CliError::Io(e.to_string()))?;
            if extraction.unreadable > 0 {
                log::warn!("{} files could not be read", extraction.unreadable);
            }
            if extraction.skipped_constructs > 0 {
                log::info!(
                    "{} declarations were skipped",
                    extraction.skipped_constructs
                );
            }
            (extraction.nodes, extraction.file_count)
        }
        InputMode::Jsonl => {
            let file = File::open(src).map_err(io_err(src.display()))?;
            let nodes = ingest_nodes(BufReader::new(file)).map_err(|e| match e {
                lexiscope::ExtractError::Schema(s) => {
                    CliError::Io(format!("{}: {s}", src.display()))
                }
                other => CliError::Io(other.to_string()),
            })?;
            let files = distinct_files(&nodes);
            (nodes, files)
        }
    };
    let lexicon = Lexicon::load(dict)?;
    let filter = match stoplist {
        Some(path) => FilterConfig::with_stoplist_file(path).map_err(io_err(path.display()))?,
        None => FilterConfig::default(),
    };

    let mut vocab = build_vocabulary(&nodes, &lexicon, &filter);
    vocab.project_name = name.unwrap_or_else(|| project_name(src));
    vocab.file_count = file_count;
    let index = ProjectIndex::new(nodes, &vocab);
    index
        .save(out_path)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(format!(
        "{}: {} files, {} nodes, {} distinct words\n",
        vocab.project_name,
        index.file_count,
        index.nodes.len(),
        index.vocabulary.len()
    ))
}

fn distinct_files(nodes: &[SourceNode]) -> usize {
    nodes
        .iter()
        .map(|n| n.file.as_str())
        .collect::<BTreeSet<_>>()
        .len()
}

fn project_name(src: &Path) -> String {
    let path = src.canonicalize().unwrap_or_else(|_| src.to_path_buf());
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "project".to_string())
}
