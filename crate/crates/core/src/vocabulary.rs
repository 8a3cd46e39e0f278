//! Software vocabulary of one project: word occurrences by node kind, with
//! recognition and part of speech from the lexicon.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::extractor::{NodeKind, SourceNode};
use crate::lexicon::{Lexicon, PosTag};
use crate::tokenizer::split_identifier;

const DEFAULT_STOPLIST: &str = include_str!("../data/stoplist.txt");

/// Nodes (and distinct tokens) per parallel work item.
const CHUNK: usize = 512;

/// Which split tokens are dropped before counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterConfig {
    pub stoplist: BTreeSet<String>,
    /// Tokens shorter than this are dropped. At least 1.
    pub min_length: usize,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            stoplist: parse_stoplist(DEFAULT_STOPLIST),
            min_length: 2,
        }
    }
}

impl FilterConfig {
    /// No stoplist, no length limit.
    pub fn none() -> Self {
        FilterConfig {
            stoplist: BTreeSet::new(),
            min_length: 1,
        }
    }

    pub fn with_stoplist_file(path: impl AsRef<Path>) -> io::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(FilterConfig {
            stoplist: parse_stoplist(&text),
            ..FilterConfig::default()
        })
    }

    pub fn keeps(&self, token: &str) -> bool {
        token.len() >= self.min_length.max(1) && !self.stoplist.contains(token)
    }
}

/// One word per line; `#` starts a comment.
pub fn parse_stoplist(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_lowercase)
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindCounts {
    pub class: u64,
    pub method: u64,
    pub parameter: u64,
    pub field: u64,
}

impl KindCounts {
    pub fn get(&self, kind: NodeKind) -> u64 {
        match kind {
            NodeKind::Class => self.class,
            NodeKind::Method => self.method,
            NodeKind::Parameter => self.parameter,
            NodeKind::Field => self.field,
        }
    }

    pub fn add(&mut self, kind: NodeKind, n: u64) {
        match kind {
            NodeKind::Class => self.class += n,
            NodeKind::Method => self.method += n,
            NodeKind::Parameter => self.parameter += n,
            NodeKind::Field => self.field += n,
        }
    }

    pub fn merge(&mut self, other: &KindCounts) {
        for kind in NodeKind::ALL {
            self.add(kind, other.get(kind));
        }
    }

    pub fn total(&self) -> u64 {
        self.class + self.method + self.parameter + self.field
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VocabularyEntry {
    /// The lemma for recognized words, the raw token otherwise.
    pub word: String,
    pub recognized: bool,
    pub pos: Option<PosTag>,
    pub total: u64,
    pub counts_by_kind: KindCounts,
}

impl VocabularyEntry {
    /// Checks `total = Σ counts`, `recognized ⟺ pos`, `total ≥ 1`.
    pub fn check(&self) -> Result<(), String> {
        if self.total != self.counts_by_kind.total() {
            return Err(format!(
                "`{}`: total does not match the per-kind counts",
                self.word
            ));
        }
        if self.recognized != self.pos.is_some() {
            return Err(format!(
                "`{}`: recognized flag disagrees with pos",
                self.word
            ));
        }
        if self.total == 0 {
            return Err(format!("`{}`: zero occurrences", self.word));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectVocabulary {
    pub project_name: String,
    pub file_count: usize,
    pub entries: BTreeMap<String, VocabularyEntry>,
}

impl ProjectVocabulary {
    pub fn get(&self, word: &str) -> Option<&VocabularyEntry> {
        self.entries.get(word)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total surviving token occurrences.
    pub fn occurrences(&self) -> u64 {
        self.entries.values().map(|e| e.total).sum()
    }
}

/// Counts every surviving token of every node name.
///
/// A recognized token is counted under the lemma picked by
/// [`Lexicon::classify`], tagged with that lemma's primary POS; an
/// unrecognized one under its own text. Counting is
/// order-free, so node order and thread count do not affect the result. The
/// returned vocabulary has an empty project name and a file count of 0.
pub fn build_vocabulary(
    nodes: &[SourceNode],
    lexicon: &Lexicon,
    filter: &FilterConfig,
) -> ProjectVocabulary {
    let token_counts: HashMap<String, KindCounts> = nodes
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut acc: HashMap<String, KindCounts> = HashMap::new();
            for node in chunk {
                for token in split_identifier(&node.name) {
                    if filter.keeps(&token) {
                        acc.entry(token).or_default().add(node.kind, 1);
                    }
                }
            }
            acc
        })
        .reduce(HashMap::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            for (token, counts) in small {
                big.entry(token).or_default().merge(&counts);
            }
            big
        });

    let tokens: Vec<(String, KindCounts)> = token_counts.into_iter().collect();
    let classified: Vec<(String, KindCounts, Option<(String, PosTag)>)> = tokens
        .into_par_iter()
        .with_min_len(CHUNK)
        .map(|(token, counts)| {
            // "list" and "listed" may classify differently; one entry, one POS.
            let class = lexicon.classify(&token).map(|c| {
                let pos = if c.lemma == token {
                    c.pos
                } else {
                    lexicon.primary_pos(&c.lemma).unwrap_or(c.pos)
                };
                (c.lemma, pos)
            });
            (token, counts, class)
        })
        .collect();

    let mut entries: BTreeMap<String, VocabularyEntry> = BTreeMap::new();
    for (token, counts, class) in classified {
        let (word, pos) = match class {
            Some((lemma, pos)) => (lemma, Some(pos)),
            None => (token, None),
        };
        let entry = entries
            .entry(word.clone())
            .or_insert_with(|| VocabularyEntry {
                word,
                recognized: pos.is_some(),
                pos,
                total: 0,
                counts_by_kind: KindCounts::default(),
            });
        entry.counts_by_kind.merge(&counts);
        entry.total = entry.counts_by_kind.total();
    }

    ProjectVocabulary {
        project_name: String::new(),
        file_count: 0,
        entries,
    }
}

/// Project-level counts of distinct words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProjectStats {
    pub file_count: usize,
    pub total_words: usize,
    pub recognized: usize,
    pub unrecognized: usize,
    pub nouns: usize,
    pub verbs: usize,
    pub adjectives: usize,
    pub adverbs: usize,
}

impl ProjectStats {
    pub fn pos_count(&self, pos: PosTag) -> usize {
        match pos {
            PosTag::Noun => self.nouns,
            PosTag::Verb => self.verbs,
            PosTag::Adjective => self.adjectives,
            PosTag::Adverb => self.adverbs,
        }
    }

    pub fn recognized_percent(&self) -> u64 {
        percent(self.recognized, self.total_words)
    }

    pub fn unrecognized_percent(&self) -> u64 {
        percent(self.unrecognized, self.total_words)
    }

    /// Share of recognized words.
    pub fn pos_percent(&self, pos: PosTag) -> u64 {
        percent(self.pos_count(pos), self.recognized)
    }
}

/// `part / whole` as a whole percentage rounded half up; 0 when `whole` is 0.
pub fn percent(part: usize, whole: usize) -> u64 {
    if whole == 0 {
        return 0;
    }
    let (part, whole) = (part as u128, whole as u128);
    ((200 * part + whole) / (2 * whole)) as u64
}

pub fn compute_stats(vocab: &ProjectVocabulary) -> ProjectStats {
    let mut stats = ProjectStats {
        file_count: vocab.file_count,
        total_words: vocab.entries.len(),
        ..ProjectStats::default()
    };
    for entry in vocab.entries.values() {
        match entry.pos {
            None => stats.unrecognized += 1,
            Some(pos) => {
                stats.recognized += 1;
                match pos {
                    PosTag::Noun => stats.nouns += 1,
                    PosTag::Verb => stats.verbs += 1,
                    PosTag::Adjective => stats.adjectives += 1,
                    PosTag::Adverb => stats.adverbs += 1,
                }
            }
        }
    }
    stats
}

/// The `k` most frequent words, ties broken alphabetically.
pub fn top_k(vocab: &ProjectVocabulary, k: usize) -> Vec<&VocabularyEntry> {
    let mut all: Vec<&VocabularyEntry> = vocab.entries.values().collect();
    all.sort_by(|a, b| b.total.cmp(&a.total).then_with(|| a.word.cmp(&b.word)));
    all.truncate(k);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::DictBuilder;

    fn node(id: usize, kind: NodeKind, name: &str, parent: Option<usize>) -> SourceNode {
        SourceNode {
            id,
            kind,
            name: name.into(),
            file: "A.java".into(),
            line: 1,
            parent,
        }
    }

    fn lexicon() -> Lexicon {
        let mut b = DictBuilder::new();
        b.synset(PosTag::Noun, &["car"]);
        b.synset(PosTag::Noun, &["value"]);
        b.synset(PosTag::Verb, &["value"]);
        b.synset(PosTag::Verb, &["set"]);
        b.synset(PosTag::Noun, &["set"]);
        b.tag_count("set", PosTag::Verb, 10);
        b.tag_count("value", PosTag::Noun, 3);
        b.build().unwrap()
    }

    #[test]
    fn single_class() {
        let vocab = build_vocabulary(
            &[node(0, NodeKind::Class, "Car", None)],
            &lexicon(),
            &FilterConfig::default(),
        );
        assert_eq!(vocab.len(), 1);
        let car = vocab.get("car").unwrap();
        assert_eq!(car.pos, Some(PosTag::Noun));
        assert_eq!(
            car.counts_by_kind,
            KindCounts {
                class: 1,
                ..KindCounts::default()
            }
        );
        assert_eq!(car.total, 1);
    }

    #[test]
    fn empty_nodes() {
        let vocab = build_vocabulary(&[], &lexicon(), &FilterConfig::default());
        assert!(vocab.is_empty());
        assert_eq!(compute_stats(&vocab), ProjectStats::default());
    }

    #[test]
    fn set_value_method() {
        let nodes = [
            node(0, NodeKind::Class, "Car", None),
            node(1, NodeKind::Method, "setValue", Some(0)),
        ];
        let vocab = build_vocabulary(&nodes, &lexicon(), &FilterConfig::default());
        for word in ["set", "value"] {
            let e = vocab.get(word).unwrap();
            assert_eq!(e.counts_by_kind.method, 1, "{word}");
            assert_eq!(e.total, 1);
        }
        assert_eq!(vocab.get("set").unwrap().pos, Some(PosTag::Verb));
    }

    #[test]
    fn inflections_merge_under_the_lemma() {
        let nodes = [
            node(0, NodeKind::Class, "Values", None),
            node(1, NodeKind::Field, "valueCount", Some(0)),
            node(2, NodeKind::Field, "xq", Some(0)),
        ];
        let vocab = build_vocabulary(&nodes, &lexicon(), &FilterConfig::default());
        let value = vocab.get("value").unwrap();
        assert_eq!(value.total, 2);
        assert_eq!(value.counts_by_kind.class, 1);
        assert_eq!(value.counts_by_kind.field, 1);
        assert!(!vocab.get("count").unwrap().recognized);
        assert!(vocab.get("xq").is_some());
    }

    #[test]
    fn inflected_forms_take_the_lemma_pos() {
        let mut b = DictBuilder::new();
        b.synset(PosTag::Noun, &["list"]);
        b.synset(PosTag::Verb, &["list"]);
        b.tag_count("list", PosTag::Noun, 5);
        let lex = b.build().unwrap();
        let listed_first = [
            node(0, NodeKind::Class, "Listed", None),
            node(1, NodeKind::Field, "list", Some(0)),
        ];
        let mut list_first = listed_first.clone();
        list_first.reverse();
        for nodes in [&listed_first[..], &list_first[..]] {
            let vocab = build_vocabulary(nodes, &lex, &FilterConfig::default());
            let list = vocab.get("list").unwrap();
            assert_eq!(list.total, 2);
            assert_eq!(list.pos, Some(PosTag::Noun));
        }
    }

    #[test]
    fn filters_drop_short_and_stoplisted_tokens() {
        let nodes = [
            node(0, NodeKind::Class, "AbstractCarImpl", None),
            node(1, NodeKind::Field, "x", Some(0)),
        ];
        let vocab = build_vocabulary(&nodes, &lexicon(), &FilterConfig::default());
        assert_eq!(vocab.entries.keys().collect::<Vec<_>>(), ["car"]);
        let vocab = build_vocabulary(&nodes, &lexicon(), &FilterConfig::none());
        assert_eq!(vocab.len(), 4);
    }

    #[test]
    fn stoplist_parsing() {
        let set = parse_stoplist("# header\nfoo\n  Bar  # trailing\n\n");
        assert_eq!(set.into_iter().collect::<Vec<_>>(), ["bar", "foo"]);
        assert!(FilterConfig::default().stoplist.contains("impl"));
    }

    #[test]
    fn stats_two_nouns_one_unknown() {
        let nodes = [node(0, NodeKind::Class, "CarValueQzx", None)];
        let stats = compute_stats(&build_vocabulary(
            &nodes,
            &lexicon(),
            &FilterConfig::default(),
        ));
        assert_eq!(stats.total_words, 3);
        assert_eq!(stats.recognized, 2);
        assert_eq!(stats.recognized_percent(), 67);
        assert_eq!(stats.nouns, 2);
        assert_eq!(stats.pos_percent(PosTag::Noun), 100);
        assert_eq!(stats.unrecognized_percent(), 33);
    }

    #[test]
    fn percent_rounds_half_up() {
        assert_eq!(percent(1, 8), 13); // 12.5
        assert_eq!(percent(1, 3), 33);
        assert_eq!(percent(2361, 4297), 55);
        assert_eq!(percent(128, 4297), 3);
        assert_eq!(percent(5, 0), 0);
    }

    #[test]
    fn top_k_order() {
        let nodes = [
            node(0, NodeKind::Class, "Car", None),
            node(1, NodeKind::Field, "setValue", Some(0)),
            node(2, NodeKind::Field, "carValue", Some(0)),
        ];
        let vocab = build_vocabulary(&nodes, &lexicon(), &FilterConfig::default());
        let top: Vec<_> = top_k(&vocab, 10)
            .into_iter()
            .map(|e| e.word.as_str())
            .collect();
        assert_eq!(top, ["car", "value", "set"]);
        assert!(top_k(&vocab, 0).is_empty());
        assert_eq!(top_k(&vocab, 1)[0].word, "car");
    }
}
