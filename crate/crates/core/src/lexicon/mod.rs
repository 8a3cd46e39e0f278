//! In-memory WordNet-format lexicon.
//!
//! A [`Lexicon`] is loaded once from the plain-text `index.<pos>` and
//! `data.<pos>` files (plus optional `<pos>.exc` exception lists) and is
//! read-only afterwards, so it can be shared freely between threads.

mod builder;
mod load;
mod morphy;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use builder::{DictBuilder, SynsetHandle};

/// Part of speech. The derived ordering (noun < verb < adjective < adverb)
/// is the tie-break order: on equal evidence the smaller tag wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosTag {
    Noun,
    Verb,
    Adjective,
    Adverb,
}

impl PosTag {
    pub const ALL: [PosTag; 4] = [
        PosTag::Noun,
        PosTag::Verb,
        PosTag::Adjective,
        PosTag::Adverb,
    ];

    /// Suffix used by the dictionary file names (`index.adj`, `data.adv`, ...).
    pub fn file_suffix(self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adj",
            PosTag::Adverb => "adv",
        }
    }

    /// Single-letter code used inside the dictionary files.
    pub fn code(self) -> char {
        match self {
            PosTag::Noun => 'n',
            PosTag::Verb => 'v',
            PosTag::Adjective => 'a',
            PosTag::Adverb => 'r',
        }
    }

    /// Parses a file code. Satellite adjectives (`s`) fold into [`PosTag::Adjective`].
    pub fn from_code(code: &str) -> Option<PosTag> {
        match code {
            "n" => Some(PosTag::Noun),
            "v" => Some(PosTag::Verb),
            "a" | "s" => Some(PosTag::Adjective),
            "r" => Some(PosTag::Adverb),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PosTag::Noun => "noun",
            PosTag::Verb => "verb",
            PosTag::Adjective => "adjective",
            PosTag::Adverb => "adverb",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A synset is identified by its byte offset within the data file of its part of speech.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetId {
    pub offset: u64,
    pub pos: PosTag,
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08}-{}", self.offset, self.pos.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synset {
    pub id: SynsetId,
    /// Lowercased member lemmas, in file order. Multi-word lemmas keep their `_`.
    pub lemmas: Vec<String>,
    pub hypernyms: Vec<SynsetId>,
    pub hyponyms: Vec<SynsetId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LexiconEntry {
    pub lemma: String,
    /// Synsets per part of speech, in sense-rank order.
    pub senses: BTreeMap<PosTag, Vec<SynsetId>>,
    /// Tagged-sense count from the index files; missing counts read as 0.
    pub tag_counts: BTreeMap<PosTag, u32>,
}

impl LexiconEntry {
    pub fn has_pos(&self, pos: PosTag) -> bool {
        self.senses.contains_key(&pos)
    }

    pub fn parts_of_speech(&self) -> impl Iterator<Item = PosTag> + '_ {
        self.senses.keys().copied()
    }

    pub fn tag_count(&self, pos: PosTag) -> u32 {
        self.tag_counts.get(&pos).copied().unwrap_or(0)
    }
}

/// Source directory and per-POS sizes of a loaded lexicon.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LexiconMeta {
    pub source: PathBuf,
    pub lemmas_per_pos: [usize; 4],
    pub synsets_per_pos: [usize; 4],
}

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("dictionary file {} is missing", .0.display())]
    MissingFile(PathBuf),
    #[error("{}:{line}: {reason}", file.display())]
    MalformedLine {
        file: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("reading {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A lemma produced by [`Lexicon::lemmatize`], guaranteed to be an index lemma for `pos`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LemmaCandidate {
    pub lemma: String,
    pub pos: PosTag,
}

/// The single lemma and part of speech a recognized token is counted under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub lemma: String,
    pub pos: PosTag,
}

/// How a related word was reached from the word being expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    #[serde(rename = "self")]
    Identity,
    Synonym,
    Hypernym,
    Hyponym,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Identity => "self",
            Relation::Synonym => "synonym",
            Relation::Hypernym => "hypernym",
            Relation::Hyponym => "hyponym",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which relations an expansion may follow. The identity relation is always implied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelationKinds {
    pub synonym: bool,
    pub hypernym: bool,
    pub hyponym: bool,
}

impl RelationKinds {
    pub const ALL: RelationKinds = RelationKinds {
        synonym: true,
        hypernym: true,
        hyponym: true,
    };
    pub const NONE: RelationKinds = RelationKinds {
        synonym: false,
        hypernym: false,
        hyponym: false,
    };

    pub fn contains(self, relation: Relation) -> bool {
        match relation {
            Relation::Identity => true,
            Relation::Synonym => self.synonym,
            Relation::Hypernym => self.hypernym,
            Relation::Hyponym => self.hyponym,
        }
    }

    /// True when every relation enabled in `self` is also enabled in `other`.
    pub fn is_subset(self, other: RelationKinds) -> bool {
        (!self.synonym || other.synonym)
            && (!self.hypernym || other.hypernym)
            && (!self.hyponym || other.hyponym)
    }
}

impl Default for RelationKinds {
    fn default() -> Self {
        RelationKinds::ALL
    }
}

impl FromStr for RelationKinds {
    type Err = String;

    /// Parses `all`, `none`, or a comma-separated list of relation names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "all" => return Ok(RelationKinds::ALL),
            "none" | "" => return Ok(RelationKinds::NONE),
            _ => {}
        }
        let mut kinds = RelationKinds::NONE;
        for part in s.split(',').map(str::trim) {
            match part {
                "synonym" | "synonyms" => kinds.synonym = true,
                "hypernym" | "hypernyms" => kinds.hypernym = true,
                "hyponym" | "hyponyms" => kinds.hyponym = true,
                other => return Err(format!("unknown relation `{other}`")),
            }
        }
        Ok(kinds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelatedWord {
    pub word: String,
    pub relation: Relation,
    pub distance: u32,
}

impl RelatedWord {
    fn identity(word: &str) -> Self {
        RelatedWord {
            word: word.to_string(),
            relation: Relation::Identity,
            distance: 0,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    entries: HashMap<String, LexiconEntry>,
    synsets: HashMap<SynsetId, Synset>,
    exceptions: [HashMap<String, Vec<String>>; 4],
    meta: LexiconMeta,
}

impl Lexicon {
    /// Loads `index.*`, `data.*` and any `*.exc` files from `dir`.
    pub fn load(dir: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
        load::load_dir(dir.as_ref())
    }

    pub fn meta(&self) -> &LexiconMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exact index-lemma lookup, no morphology.
    pub fn lookup(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.get(word)
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synsets.get(&id)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn has_lemma(&self, lemma: &str, pos: PosTag) -> bool {
        self.entries.get(lemma).is_some_and(|e| e.has_pos(pos))
    }

    fn exceptions_for(&self, pos: PosTag, surface: &str) -> &[String] {
        self.exceptions[pos.index()]
            .get(surface)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Candidate (lemma, POS) pairs for a token: exact index matches first,
    /// then exception-list and suffix-rule lemmas that exist in the index.
    pub fn lemmatize(&self, token: &str) -> Vec<LemmaCandidate> {
        let mut out = Vec::new();
        let push = |lemma: &str, pos: PosTag, out: &mut Vec<LemmaCandidate>| {
            if !out.iter().any(|c| c.pos == pos && c.lemma == lemma) {
                out.push(LemmaCandidate {
                    lemma: lemma.to_string(),
                    pos,
                });
            }
        };
        if token.is_empty() {
            return out;
        }
        if let Some(entry) = self.entries.get(token) {
            for pos in entry.parts_of_speech() {
                push(token, pos, &mut out);
            }
        }
        for pos in PosTag::ALL {
            for lemma in self.exceptions_for(pos, token) {
                if self.has_lemma(lemma, pos) {
                    push(lemma, pos, &mut out);
                }
            }
            for stem in morphy::detach(token, pos, |s| self.has_lemma(s, pos)) {
                if self.has_lemma(&stem, pos) {
                    push(&stem, pos, &mut out);
                }
            }
        }
        out
    }

    /// Picks the one lemma and part of speech a token is counted under.
    ///
    /// Each POS is represented by its candidate with the highest tag count
    /// (earliest candidate on ties); the POS whose representative has the
    /// highest count wins, ties going to the smaller [`PosTag`].
    pub fn classify(&self, token: &str) -> Option<Classification> {
        let mut best: [Option<(u32, &LemmaCandidate)>; 4] = [None; 4];
        let candidates = self.lemmatize(token);
        for cand in &candidates {
            let count = self
                .entries
                .get(&cand.lemma)
                .map_or(0, |e| e.tag_count(cand.pos));
            let slot = &mut best[cand.pos.index()];
            if slot.is_none_or(|(c, _)| count > c) {
                *slot = Some((count, cand));
            }
        }
        let mut winner: Option<(u32, &LemmaCandidate)> = None;
        for (count, cand) in best.into_iter().flatten() {
            // PosTag::ALL order, so strict `>` keeps the smaller tag on ties.
            if winner.is_none_or(|(c, _)| count > c) {
                winner = Some((count, cand));
            }
        }
        winner.map(|(_, cand)| Classification {
            lemma: cand.lemma.clone(),
            pos: cand.pos,
        })
    }

    pub fn primary_pos(&self, word: &str) -> Option<PosTag> {
        self.classify(word).map(|c| c.pos)
    }

    /// Words related to `word` through the enabled relations.
    ///
    /// The result always holds `(word, self, 0)`. Synonyms are co-members of
    /// any synset of `word` at distance 1; hypernyms and hyponyms are members
    /// of synsets reachable in at most `depth` hops, at their shortest hop
    /// count. Every part of speech of `word` seeds the expansion.
    pub fn related_words(
        &self,
        word: &str,
        relations: RelationKinds,
        depth: u32,
    ) -> BTreeSet<RelatedWord> {
        let mut out = BTreeSet::new();
        out.insert(RelatedWord::identity(word));
        let Some(entry) = self.entries.get(word) else {
            return out;
        };
        if depth == 0 {
            return out;
        }
        let seeds: Vec<SynsetId> = entry.senses.values().flatten().copied().collect();

        if relations.synonym {
            for id in &seeds {
                for lemma in &self.synsets[id].lemmas {
                    if lemma != word {
                        out.insert(RelatedWord {
                            word: lemma.clone(),
                            relation: Relation::Synonym,
                            distance: 1,
                        });
                    }
                }
            }
        }
        if relations.hypernym {
            self.traverse(word, &seeds, depth, Relation::Hypernym, &mut out);
        }
        if relations.hyponym {
            self.traverse(word, &seeds, depth, Relation::Hyponym, &mut out);
        }
        out
    }

    fn traverse(
        &self,
        word: &str,
        seeds: &[SynsetId],
        depth: u32,
        relation: Relation,
        out: &mut BTreeSet<RelatedWord>,
    ) {
        let mut visited: HashSet<SynsetId> = seeds.iter().copied().collect();
        let mut reached: HashSet<&str> = HashSet::new();
        let mut frontier = seeds.to_vec();
        for distance in 1..=depth {
            let mut next = Vec::new();
            for id in &frontier {
                let synset = &self.synsets[id];
                let links = match relation {
                    Relation::Hypernym => &synset.hypernyms,
                    _ => &synset.hyponyms,
                };
                for link in links {
                    if visited.insert(*link) {
                        next.push(*link);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            for id in &next {
                for lemma in &self.synsets[id].lemmas {
                    if lemma != word && reached.insert(lemma.as_str()) {
                        out.insert(RelatedWord {
                            word: lemma.clone(),
                            relation,
                            distance,
                        });
                    }
                }
            }
            frontier = next;
        }
    }
}
