//! Domain vocabulary: the intersection of the top-K software vocabularies of
//! several projects from one application domain.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::lexicon::{Lexicon, Relation, RelationKinds};
use crate::vocabulary::{top_k, ProjectVocabulary};

/// How widely a word is shared among the projects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermStatus {
    /// Supported by every project.
    Domain,
    /// Supported by at least two projects, but not all.
    Potential,
    /// Supported by one project only.
    Single,
}

impl TermStatus {
    fn from_support(support: usize, projects: usize) -> TermStatus {
        if support == projects {
            TermStatus::Domain
        } else if support >= 2 {
            TermStatus::Potential
        } else {
            TermStatus::Single
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermStatus::Domain => "domain",
            TermStatus::Potential => "potential",
            TermStatus::Single => "single",
        }
    }
}

impl fmt::Display for TermStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The related word that stood in for a term in one project.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SemanticEvidence {
    pub matched_word: String,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DomainTermEntry {
    pub word: String,
    pub status: TermStatus,
    /// Count of the word in each project's top-K, aligned with
    /// [`DomainVocabulary::project_names`]; 0 where it is absent.
    pub per_project_totals: Vec<u64>,
    pub support_count: usize,
    /// Per project, set when support came through a related word.
    pub evidence: Vec<Option<SemanticEvidence>>,
}

impl DomainTermEntry {
    pub fn summed_total(&self) -> u64 {
        self.per_project_totals.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DomainVocabulary {
    pub domain_name: String,
    pub project_names: Vec<String>,
    pub k: usize,
    pub semantic: bool,
    /// Sorted by support (desc), summed totals (desc), word (asc).
    pub terms: Vec<DomainTermEntry>,
}

impl DomainVocabulary {
    pub fn term(&self, word: &str) -> Option<&DomainTermEntry> {
        self.terms.iter().find(|t| t.word == word)
    }

    pub fn with_status(&self, status: TermStatus) -> impl Iterator<Item = &DomainTermEntry> {
        self.terms.iter().filter(move |t| t.status == status)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("a domain vocabulary needs at least 2 projects, got {0}")]
    TooFewProjects(usize),
    #[error("k must be at least 1")]
    ZeroK,
}

/// Intersects the top-`k` words of each project.
///
/// A project supports a candidate word when its top-`k` contains the word or,
/// when `semantic` is given, a synonym, direct hypernym or direct hyponym of it.
pub fn build_domain_vocabulary(
    domain_name: &str,
    vocabs: &[ProjectVocabulary],
    k: usize,
    semantic: Option<&Lexicon>,
) -> Result<DomainVocabulary, DomainError> {
    if vocabs.len() < 2 {
        return Err(DomainError::TooFewProjects(vocabs.len()));
    }
    if k == 0 {
        return Err(DomainError::ZeroK);
    }
    let tops: Vec<HashMap<&str, u64>> = vocabs
        .iter()
        .map(|v| {
            top_k(v, k)
                .into_iter()
                .map(|e| (e.word.as_str(), e.total))
                .collect()
        })
        .collect();
    let candidates: BTreeSet<&str> = tops.iter().flat_map(|t| t.keys().copied()).collect();

    let mut terms = Vec::with_capacity(candidates.len());
    for word in candidates {
        let related: Vec<_> = match semantic {
            Some(lexicon) => lexicon
                .related_words(word, RelationKinds::ALL, 1)
                .into_iter()
                .filter(|r| r.relation != Relation::Identity)
                .collect(),
            None => Vec::new(),
        };
        let mut totals = Vec::with_capacity(tops.len());
        let mut evidence = Vec::with_capacity(tops.len());
        let mut support = 0;
        for top in &tops {
            if let Some(&count) = top.get(word) {
                totals.push(count);
                evidence.push(None);
                support += 1;
                continue;
            }
            totals.push(0);
            let best = related
                .iter()
                .filter_map(|r| top.get(r.word.as_str()).map(|&c| (r, c)))
                .min_by(|(a, ca), (b, cb)| {
                    a.relation
                        .cmp(&b.relation)
                        .then(cb.cmp(ca))
                        .then_with(|| a.word.cmp(&b.word))
                });
            match best {
                Some((r, _)) => {
                    support += 1;
                    evidence.push(Some(SemanticEvidence {
                        matched_word: r.word.clone(),
                        relation: r.relation,
                    }));
                }
                None => evidence.push(None),
            }
        }
        terms.push(DomainTermEntry {
            word: word.to_string(),
            status: TermStatus::from_support(support, tops.len()),
            per_project_totals: totals,
            support_count: support,
            evidence,
        });
    }
    terms.sort_by(|a, b| {
        b.support_count
            .cmp(&a.support_count)
            .then(b.summed_total().cmp(&a.summed_total()))
            .then_with(|| a.word.cmp(&b.word))
    });

    Ok(DomainVocabulary {
        domain_name: domain_name.to_string(),
        project_names: vocabs.iter().map(|v| v.project_name.clone()).collect(),
        k,
        semantic: semantic.is_some(),
        terms,
    })
}

/// Percentage of the domain-status terms that occur anywhere in `vocab`.
pub fn domain_term_percentage(vocab: &ProjectVocabulary, domain: &DomainVocabulary) -> f64 {
    let mut total = 0usize;
    let mut present = 0usize;
    for term in domain.with_status(TermStatus::Domain) {
        total += 1;
        if vocab.contains(&term.word) {
            present += 1;
        }
    }
    if total == 0 {
        0.0
    } else {
        100.0 * present as f64 / total as f64
    }
}
