//! Concept location: rank classes and methods whose identifiers cover every
//! keyword of a key-phrase, directly or through lexical relations.
//!
//! A method's scope is its own name plus its parameter names; a class's scope
//! is its name plus its field names. Keywords and scope tokens are both
//! lemmatized, so inflected forms on either side still meet.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::extractor::{NodeKind, SourceNode};
use crate::lexicon::{Lexicon, RelatedWord, Relation, RelationKinds};
use crate::tokenizer::split_identifier;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptQuery {
    pub keywords: Vec<String>,
    pub relations: RelationKinds,
    pub depth: u32,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("the key-phrase has no keywords")]
    Empty,
    #[error("keyword `{0}` is not alphabetic")]
    NotAlphabetic(String),
}

impl ConceptQuery {
    /// All relations, depth 1.
    pub fn new<S: AsRef<str>>(keywords: &[S]) -> Result<Self, QueryError> {
        let keywords: Vec<String> = keywords
            .iter()
            .map(|k| k.as_ref().trim().to_lowercase())
            .filter(|k| !k.is_empty())
            .collect();
        if keywords.is_empty() {
            return Err(QueryError::Empty);
        }
        if let Some(bad) = keywords
            .iter()
            .find(|k| !k.chars().all(|c| c.is_ascii_alphabetic()))
        {
            return Err(QueryError::NotAlphabetic(bad.clone()));
        }
        Ok(ConceptQuery {
            keywords,
            relations: RelationKinds::ALL,
            depth: 1,
        })
    }

    /// Splits a key-phrase on whitespace.
    pub fn parse(phrase: &str) -> Result<Self, QueryError> {
        let words: Vec<&str> = phrase.split_whitespace().collect();
        Self::new(&words)
    }

    pub fn with_relations(mut self, relations: RelationKinds) -> Self {
        self.relations = relations;
        self
    }

    pub fn with_depth(mut self, depth: u32) -> Self {
        self.depth = depth;
        self
    }
}

/// Score contributions per keyword. Hypernyms and hyponyms contribute
/// `related / distance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScoreWeights {
    pub exact: u64,
    pub synonym: u64,
    pub related: u64,
}

impl Default for ScoreWeights {
    fn default() -> Self {
        ScoreWeights {
            exact: 3,
            synonym: 2,
            related: 1,
        }
    }
}

impl ScoreWeights {
    pub fn weight(&self, relation: Relation, distance: u32) -> Ratio<u64> {
        match relation {
            Relation::Identity => Ratio::from_integer(self.exact),
            Relation::Synonym => Ratio::from_integer(self.synonym),
            Relation::Hypernym | Relation::Hyponym => {
                Ratio::new(self.related, u64::from(distance.max(1)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeywordEvidence {
    pub keyword: String,
    /// The scope word that satisfied the keyword.
    pub matched: String,
    pub relation: Relation,
    pub distance: u32,
}

impl fmt::Display for KeywordEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}→{} ({},{})",
            self.keyword, self.matched, self.relation, self.distance
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptMatch {
    pub node_id: usize,
    pub kind: NodeKind,
    pub name: String,
    pub file: String,
    pub line: u32,
    pub score: Ratio<u64>,
    /// One entry per query keyword, in query order.
    pub evidence: Vec<KeywordEvidence>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LocateError {
    #[error("{0} nodes have no concept scope; only classes and methods do")]
    Scope(NodeKind),
}

/// Expansion set of every keyword. Each keyword is expanded from itself and
/// from each of its lemmas.
pub fn expand_query(
    query: &ConceptQuery,
    lexicon: &Lexicon,
) -> BTreeMap<String, BTreeSet<RelatedWord>> {
    let mut out = BTreeMap::new();
    for keyword in &query.keywords {
        let mut seeds = vec![keyword.clone()];
        for cand in lexicon.lemmatize(keyword) {
            if !seeds.contains(&cand.lemma) {
                seeds.push(cand.lemma);
            }
        }
        let mut set = BTreeSet::new();
        for seed in &seeds {
            set.extend(lexicon.related_words(seed, query.relations, query.depth));
        }
        out.insert(keyword.clone(), set);
    }
    out
}

fn scope_words(
    names: impl Iterator<Item = impl AsRef<str>>,
    lexicon: &Lexicon,
) -> BTreeSet<String> {
    let mut scope = BTreeSet::new();
    for name in names {
        for token in split_identifier(name.as_ref()) {
            for cand in lexicon.lemmatize(&token) {
                scope.insert(cand.lemma);
            }
            scope.insert(token);
        }
    }
    scope
}

fn member_kind(kind: NodeKind) -> Result<NodeKind, LocateError> {
    match kind {
        NodeKind::Method => Ok(NodeKind::Parameter),
        NodeKind::Class => Ok(NodeKind::Field),
        other => Err(LocateError::Scope(other)),
    }
}

/// Words of a class (name and field names) or method (name and parameter names).
pub fn node_scope(
    node: &SourceNode,
    nodes: &[SourceNode],
    lexicon: &Lexicon,
) -> Result<BTreeSet<String>, LocateError> {
    let member = member_kind(node.kind)?;
    let names = std::iter::once(node.name.as_str()).chain(
        nodes
            .iter()
            .filter(|n| n.parent == Some(node.id) && n.kind == member)
            .map(|n| n.name.as_str()),
    );
    Ok(scope_words(names, lexicon))
}

/// Order of preference among the ways a keyword can be satisfied.
fn preference(r: &RelatedWord) -> (u8, u32, Relation, &str) {
    let rank = match r.relation {
        Relation::Identity => 0,
        Relation::Synonym => 1,
        Relation::Hypernym | Relation::Hyponym => 2,
    };
    (rank, r.distance, r.relation, r.word.as_str())
}

fn compare_matches(a: &ConceptMatch, b: &ConceptMatch) -> Ordering {
    let kind_rank = |k: NodeKind| if k == NodeKind::Method { 0 } else { 1 };
    b.score
        .cmp(&a.score)
        .then(kind_rank(a.kind).cmp(&kind_rank(b.kind)))
        .then_with(|| a.file.cmp(&b.file))
        .then(a.line.cmp(&b.line))
        .then(a.node_id.cmp(&b.node_id))
}

pub fn locate_concept(
    nodes: &[SourceNode],
    query: &ConceptQuery,
    lexicon: &Lexicon,
    limit: usize,
) -> Vec<ConceptMatch> {
    locate_concept_with(nodes, query, lexicon, limit, ScoreWeights::default())
}

/// Every class and method whose scope meets the expansion of every keyword,
/// best first: score, then methods before classes, then file and line.
pub fn locate_concept_with(
    nodes: &[SourceNode],
    query: &ConceptQuery,
    lexicon: &Lexicon,
    limit: usize,
    weights: ScoreWeights,
) -> Vec<ConceptMatch> {
    let expansion = expand_query(query, lexicon);
    let mut members: HashMap<usize, Vec<&str>> = HashMap::new();
    for n in nodes {
        if let Some(parent) = n.parent {
            let parent_kind = nodes.get(parent).map(|p| p.kind);
            if parent_kind.is_some_and(|k| member_kind(k) == Ok(n.kind)) {
                members.entry(parent).or_default().push(&n.name);
            }
        }
    }

    let mut matches: Vec<ConceptMatch> = nodes
        .par_iter()
        .filter(|n| matches!(n.kind, NodeKind::Class | NodeKind::Method))
        .filter_map(|node| {
            let names = std::iter::once(node.name.as_str())
                .chain(members.get(&node.id).into_iter().flatten().copied());
            let scope = scope_words(names, lexicon);
            let mut evidence = Vec::with_capacity(query.keywords.len());
            let mut score = Ratio::from_integer(0);
            for keyword in &query.keywords {
                let best = expansion[keyword]
                    .iter()
                    .filter(|r| scope.contains(&r.word))
                    .min_by(|a, b| preference(a).cmp(&preference(b)))?;
                score += weights.weight(best.relation, best.distance);
                evidence.push(KeywordEvidence {
                    keyword: keyword.clone(),
                    matched: best.word.clone(),
                    relation: best.relation,
                    distance: best.distance,
                });
            }
            Some(ConceptMatch {
                node_id: node.id,
                kind: node.kind,
                name: node.name.clone(),
                file: node.file.clone(),
                line: node.line,
                score,
                evidence,
            })
        })
        .collect();
    matches.sort_by(compare_matches);
    matches.truncate(limit);
    matches
}
