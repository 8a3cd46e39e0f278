//! Persisted project index: extracted nodes plus the vocabulary built from them.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::extractor::{validate_nodes, SourceNode};
use crate::vocabulary::{ProjectVocabulary, VocabularyEntry};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProjectIndex {
    pub format_version: u32,
    pub project_name: String,
    pub file_count: usize,
    pub nodes: Vec<SourceNode>,
    /// Sorted by word.
    pub vocabulary: Vec<VocabularyEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum IndexError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("not a project index: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported index format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("invalid project index: {0}")]
    Invalid(String),
}

impl ProjectIndex {
    pub fn new(nodes: Vec<SourceNode>, vocabulary: &ProjectVocabulary) -> Self {
        ProjectIndex {
            format_version: FORMAT_VERSION,
            project_name: vocabulary.project_name.clone(),
            file_count: vocabulary.file_count,
            nodes,
            vocabulary: vocabulary.entries.values().cloned().collect(),
        }
    }

    pub fn vocabulary(&self) -> ProjectVocabulary {
        ProjectVocabulary {
            project_name: self.project_name.clone(),
            file_count: self.file_count,
            entries: self
                .vocabulary
                .iter()
                .map(|e| (e.word.clone(), e.clone()))
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), IndexError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IndexError::Version(self.format_version));
        }
        validate_nodes(&self.nodes).map_err(|e| IndexError::Invalid(format!("node {e}")))?;
        for pair in self.vocabulary.windows(2) {
            if pair[0].word >= pair[1].word {
                return Err(IndexError::Invalid(format!(
                    "vocabulary not sorted or duplicated at `{}`",
                    pair[1].word
                )));
            }
        }
        for entry in &self.vocabulary {
            entry.check().map_err(IndexError::Invalid)?;
        }
        Ok(())
    }

    /// Pretty-printed JSON with a trailing newline; identical input gives identical bytes.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("index serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, IndexError> {
        let index: ProjectIndex = serde_json::from_str(text)?;
        index.validate()?;
        Ok(index)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), IndexError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|source| IndexError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, IndexError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| IndexError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }
}
