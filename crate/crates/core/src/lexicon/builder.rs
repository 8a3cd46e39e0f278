//! Renders small dictionaries in the WordNet plain-text layout.
//!
//! Used to produce fixtures and synthetic lexicons; the output goes through
//! the same loader as a real dictionary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use super::{Lexicon, LexiconError, PosTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SynsetHandle(usize);

struct DraftSynset {
    pos: PosTag,
    lemmas: Vec<String>,
    hypernyms: Vec<usize>,
}

#[derive(Default)]
pub struct DictBuilder {
    synsets: Vec<DraftSynset>,
    tag_counts: BTreeMap<(String, PosTag), u32>,
    exceptions: BTreeMap<(PosTag, String), Vec<String>>,
}

const HEADER: &str = "  lexiscope generated dictionary\n";

impl DictBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a synset. Lemmas are lowercased; spaces become `_`.
    pub fn synset(&mut self, pos: PosTag, lemmas: &[&str]) -> SynsetHandle {
        assert!(!lemmas.is_empty(), "a synset needs at least one lemma");
        self.synsets.push(DraftSynset {
            pos,
            lemmas: lemmas
                .iter()
                .map(|l| l.trim().to_lowercase().replace(' ', "_"))
                .collect(),
            hypernyms: Vec::new(),
        });
        SynsetHandle(self.synsets.len() - 1)
    }

    /// Records `parent` as a hypernym of `child`; the hyponym link is written too.
    pub fn hypernym(&mut self, child: SynsetHandle, parent: SynsetHandle) -> &mut Self {
        let links = &mut self.synsets[child.0].hypernyms;
        if !links.contains(&parent.0) {
            links.push(parent.0);
        }
        self
    }

    pub fn tag_count(&mut self, lemma: &str, pos: PosTag, count: u32) -> &mut Self {
        self.tag_counts.insert((lemma.to_lowercase(), pos), count);
        self
    }

    pub fn exception(&mut self, pos: PosTag, surface: &str, lemma: &str) -> &mut Self {
        self.exceptions
            .entry((pos, surface.to_string()))
            .or_default()
            .push(lemma.to_string());
        self
    }

    /// File name → contents for every dictionary file.
    pub fn render(&self) -> BTreeMap<String, String> {
        let mut hyponyms: Vec<Vec<usize>> = vec![Vec::new(); self.synsets.len()];
        for (child, s) in self.synsets.iter().enumerate() {
            for &parent in &s.hypernyms {
                hyponyms[parent].push(child);
            }
        }

        // Pointer fields are fixed width, so line lengths are known before offsets.
        let mut offsets = vec![0u64; self.synsets.len()];
        for pos in PosTag::ALL {
            let mut at = HEADER.len() as u64;
            for i in (0..self.synsets.len()).filter(|&i| self.synsets[i].pos == pos) {
                offsets[i] = at;
                at += self.data_line(i, &offsets, &hyponyms[i]).len() as u64;
            }
        }

        let mut files = BTreeMap::new();
        for pos in PosTag::ALL {
            let mut data = String::from(HEADER);
            // lemma -> (synset indices in sense order, pointer symbols)
            let mut index: BTreeMap<&str, (Vec<usize>, Vec<&str>)> = BTreeMap::new();
            for (i, s) in self
                .synsets
                .iter()
                .enumerate()
                .filter(|(_, s)| s.pos == pos)
            {
                data.push_str(&self.data_line(i, &offsets, &hyponyms[i]));
                for lemma in &s.lemmas {
                    let slot = index.entry(lemma.as_str()).or_default();
                    if !slot.0.contains(&i) {
                        slot.0.push(i);
                    }
                    if !s.hypernyms.is_empty() && !slot.1.contains(&"@") {
                        slot.1.push("@");
                    }
                    if !hyponyms[i].is_empty() && !slot.1.contains(&"~") {
                        slot.1.push("~");
                    }
                }
            }
            let mut idx = String::from(HEADER);
            for (lemma, (senses, symbols)) in &index {
                let tags = self
                    .tag_counts
                    .get(&(lemma.to_string(), pos))
                    .copied()
                    .unwrap_or(0);
                let _ = write!(
                    idx,
                    "{lemma} {} {} {}",
                    pos.code(),
                    senses.len(),
                    symbols.len()
                );
                for sym in symbols {
                    let _ = write!(idx, " {sym}");
                }
                let _ = write!(idx, " {} {tags}", senses.len());
                for &i in senses {
                    let _ = write!(idx, " {:08}", offsets[i]);
                }
                idx.push_str("  \n");
            }
            files.insert(format!("data.{}", pos.file_suffix()), data);
            files.insert(format!("index.{}", pos.file_suffix()), idx);

            let exc: Vec<_> = self
                .exceptions
                .iter()
                .filter(|((p, _), _)| *p == pos)
                .map(|((_, surface), lemmas)| format!("{surface} {}\n", lemmas.join(" ")))
                .collect();
            if !exc.is_empty() {
                files.insert(format!("{}.exc", pos.file_suffix()), exc.concat());
            }
        }
        files
    }

    fn data_line(&self, i: usize, offsets: &[u64], hyponyms: &[usize]) -> String {
        let s = &self.synsets[i];
        let mut line = format!(
            "{:08} 00 {} {:02x}",
            offsets[i],
            s.pos.code(),
            s.lemmas.len()
        );
        for lemma in &s.lemmas {
            let _ = write!(line, " {lemma} 0");
        }
        let _ = write!(line, " {:03}", s.hypernyms.len() + hyponyms.len());
        for &p in &s.hypernyms {
            let target = &self.synsets[p];
            let _ = write!(line, " @ {:08} {} 0000", offsets[p], target.pos.code());
        }
        for &c in hyponyms {
            let target = &self.synsets[c];
            let _ = write!(line, " ~ {:08} {} 0000", offsets[c], target.pos.code());
        }
        line.push_str(" | \n");
        line
    }

    pub fn write_to(&self, dir: impl AsRef<Path>) -> io::Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        for (name, contents) in self.render() {
            fs::write(dir.join(name), contents)?;
        }
        Ok(())
    }

    /// Writes the files to a scratch directory and loads them back.
    pub fn build(&self) -> Result<Lexicon, LexiconError> {
        let dir = std::env::temp_dir().join(format!(
            "lexiscope-dict-{}-{}",
            std::process::id(),
            SCRATCH.fetch_add(1, std::sync::atomic::Ordering::Relaxed)
        ));
        self.write_to(&dir).map_err(|source| LexiconError::Io {
            path: dir.clone(),
            source,
        })?;
        let lexicon = Lexicon::load(&dir);
        let _ = fs::remove_dir_all(&dir);
        lexicon
    }
}

static SCRATCH: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);
