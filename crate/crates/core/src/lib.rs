//! Derive software and domain vocabularies from the identifiers of a code base,
//! and locate concepts in code by expanding key-phrases through a WordNet-format
//! lexicon.
//!
//! The pipeline runs in a fixed order:
//!
//! 1. [`extractor`] scans Java sources (or ingests pre-extracted JSON lines) into
//!    [`SourceNode`]s: classes, methods, parameters and fields.
//! 2. [`tokenizer`] splits each node name into lowercase words.
//! 3. [`vocabulary`] lemmatizes the words against a [`Lexicon`], assigns each
//!    recognized word one part of speech and counts occurrences by node kind.
//! 4. [`domain`] intersects the most frequent words of several projects.
//! 5. [`locator`] ranks classes and methods whose identifiers cover every
//!    keyword of a query, directly or through synonyms, hypernyms and hyponyms.
//!
//! [`index`] persists the result of steps 1–3 as a versioned JSON document.

pub mod domain;
pub mod extractor;
pub mod index;
pub mod lexicon;
pub mod locator;
pub mod tokenizer;
pub mod vocabulary;

pub use domain::{
    build_domain_vocabulary, domain_term_percentage, DomainError, DomainTermEntry,
    DomainVocabulary, SemanticEvidence, TermStatus,
};
pub use extractor::{
    extract_java, extract_project, ingest_nodes, is_identifier, validate_nodes, ExtractError,
    JavaExtraction, NodeKind, ProjectExtraction, SchemaError, SourceNode,
};
pub use index::{IndexError, ProjectIndex, FORMAT_VERSION};
pub use lexicon::{
    Classification, DictBuilder, LemmaCandidate, Lexicon, LexiconEntry, LexiconError, LexiconMeta,
    PosTag, RelatedWord, Relation, RelationKinds, Synset, SynsetHandle, SynsetId,
};
pub use locator::{
    expand_query, locate_concept, locate_concept_with, node_scope, ConceptMatch, ConceptQuery,
    KeywordEvidence, LocateError, QueryError, ScoreWeights,
};
pub use tokenizer::{split_identifier, tokenize_node, Token};
pub use vocabulary::{
    build_vocabulary, compute_stats, parse_stoplist, percent, top_k, FilterConfig, KindCounts,
    ProjectStats, ProjectVocabulary, VocabularyEntry,
};
