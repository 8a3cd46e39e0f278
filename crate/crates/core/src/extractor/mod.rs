//! Declaration nodes: classes, methods, parameters and fields.
//!
//! Nodes come either from the Java scanner in [`java`] or from a
//! line-delimited JSON stream produced by some other front end.

mod java;

use std::fmt;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

pub use java::{extract_java, JavaExtraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Class,
    Method,
    Parameter,
    Field,
}

impl NodeKind {
    pub const ALL: [NodeKind; 4] = [
        NodeKind::Class,
        NodeKind::Method,
        NodeKind::Parameter,
        NodeKind::Field,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NodeKind::Class => "class",
            NodeKind::Method => "method",
            NodeKind::Parameter => "parameter",
            NodeKind::Field => "field",
        }
    }

    /// Kinds a node of this kind may hang under; `None` means "may be a root".
    fn parent_allowed(self, parent: Option<NodeKind>) -> bool {
        match (self, parent) {
            (NodeKind::Class, None | Some(NodeKind::Class)) => true,
            (NodeKind::Method | NodeKind::Field, Some(NodeKind::Class)) => true,
            (NodeKind::Parameter, Some(NodeKind::Method)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One named declaration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceNode {
    /// Dense per-project id; equals the node's position in the project's node list.
    pub id: usize,
    pub kind: NodeKind,
    pub name: String,
    /// Path relative to the project root, `/`-separated.
    pub file: String,
    /// 1-based line of the name.
    pub line: u32,
    pub parent: Option<usize>,
}

/// `[A-Za-z_$][A-Za-z0-9_$]*`
pub fn is_identifier(name: &str) -> bool {
    let mut bytes = name.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() || b == b'_' || b == b'$' => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'$')
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct SchemaError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ExtractError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

#[derive(Deserialize)]
struct NodeRecord {
    kind: String,
    name: String,
    file: String,
    line: u32,
    #[serde(default)]
    parent: Option<usize>,
}

/// Reads one JSON object per line (`kind`, `name`, `file`, `line`, optional
/// `parent` as the 0-based index of an earlier record). Blank lines are ignored.
pub fn ingest_nodes(reader: impl BufRead) -> Result<Vec<SourceNode>, ExtractError> {
    let mut nodes: Vec<SourceNode> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|source| ExtractError::Io {
            path: PathBuf::from("<node stream>"),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let err = |reason: String| SchemaError {
            line: line_no,
            reason,
        };
        let record: NodeRecord =
            serde_json::from_str(&line).map_err(|e| err(format!("invalid record: {e}")))?;
        let kind = match record.kind.as_str() {
            "class" => NodeKind::Class,
            "method" => NodeKind::Method,
            "parameter" => NodeKind::Parameter,
            "field" => NodeKind::Field,
            other => return Err(err(format!("unknown kind `{other}`")).into()),
        };
        if record.name.is_empty() {
            return Err(err("empty name".into()).into());
        }
        if !is_identifier(&record.name) {
            return Err(err(format!("`{}` is not an identifier", record.name)).into());
        }
        if record.line == 0 {
            return Err(err("line numbers are 1-based".into()).into());
        }
        let parent_kind = match record.parent {
            Some(p) if p >= nodes.len() => {
                return Err(err(format!("parent {p} does not refer to an earlier record")).into())
            }
            Some(p) => Some(nodes[p].kind),
            None => None,
        };
        if !kind.parent_allowed(parent_kind) {
            let parent = parent_kind.map_or("no parent", NodeKind::name);
            return Err(err(format!("a {kind} cannot have {parent} as parent")).into());
        }
        nodes.push(SourceNode {
            id: nodes.len(),
            kind,
            name: record.name,
            file: record.file,
            line: record.line,
            parent: record.parent,
        });
    }
    Ok(nodes)
}

/// Checks the node-list invariants: dense ids, valid names, earlier parents,
/// and the parentage rules.
pub fn validate_nodes(nodes: &[SourceNode]) -> Result<(), SchemaError> {
    for (i, node) in nodes.iter().enumerate() {
        let err = |reason: String| SchemaError {
            line: i + 1,
            reason,
        };
        if node.id != i {
            return Err(err(format!("node id {} at position {i}", node.id)));
        }
        if !is_identifier(&node.name) {
            return Err(err(format!("`{}` is not an identifier", node.name)));
        }
        let parent_kind = match node.parent {
            Some(p) if p >= i => return Err(err(format!("parent {p} is not an earlier node"))),
            Some(p) => Some(nodes[p].kind),
            None => None,
        };
        if !node.kind.parent_allowed(parent_kind) {
            return Err(err(format!(
                "{} `{}` has an invalid parent",
                node.kind, node.name
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectExtraction {
    pub nodes: Vec<SourceNode>,
    pub file_count: usize,
    /// Files (or directories) that could not be read and were skipped.
    pub unreadable: usize,
    /// Declarations the scanner could not make sense of.
    pub skipped_constructs: usize,
}

fn relative_name(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

/// Scans every `*.java` file under `root`, in sorted path order.
///
/// Files are scanned in parallel; node ids are assigned afterwards in path
/// order, so the output does not depend on the thread count.
pub fn extract_project(root: impl AsRef<Path>) -> Result<ProjectExtraction, ExtractError> {
    let root = root.as_ref();
    std::fs::read_dir(root).map_err(|source| ExtractError::Io {
        path: root.to_path_buf(),
        source,
    })?;

    let mut unreadable = 0;
    let mut paths = Vec::new();
    for entry in WalkDir::new(root).follow_links(false) {
        match entry {
            Ok(e) if e.file_type().is_file() => {
                if e.path().extension().is_some_and(|x| x == "java") {
                    paths.push(e.into_path());
                }
            }
            Ok(_) => {}
            Err(e) => {
                log::warn!("skipping unreadable entry: {e}");
                unreadable += 1;
            }
        }
    }
    paths.sort();

    let scanned: Vec<Option<(String, JavaExtraction)>> = paths
        .par_iter()
        .map(|path| {
            let name = relative_name(root, path);
            match std::fs::read(path) {
                Ok(bytes) => {
                    let text = String::from_utf8_lossy(&bytes);
                    Some((name.clone(), extract_java(&text, &name)))
                }
                Err(e) => {
                    log::warn!("skipping {}: {e}", path.display());
                    None
                }
            }
        })
        .collect();

    let mut out = ProjectExtraction {
        unreadable,
        ..ProjectExtraction::default()
    };
    for result in scanned {
        let Some((_, file)) = result else {
            out.unreadable += 1;
            continue;
        };
        out.file_count += 1;
        out.skipped_constructs += file.skipped;
        let base = out.nodes.len();
        out.nodes.extend(file.nodes.into_iter().map(|mut n| {
            n.id += base;
            n.parent = n.parent.map(|p| p + base);
            n
        }));
    }
    Ok(out)
}
