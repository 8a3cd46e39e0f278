//! Parsers for the WordNet 3.x plain-text dictionary files.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use super::{Lexicon, LexiconEntry, LexiconError, LexiconMeta, PosTag, Synset, SynsetId};

struct PendingPointer {
    from: SynsetId,
    to: SynsetId,
    hypernym: bool,
    file: PathBuf,
    line: usize,
}

fn malformed(file: &Path, line: usize, reason: impl Into<String>) -> LexiconError {
    LexiconError::MalformedLine {
        file: file.to_path_buf(),
        line,
        reason: reason.into(),
    }
}

fn read(path: &Path) -> Result<String, LexiconError> {
    let bytes = fs::read(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

/// License/header lines in the distributed files start with a space.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with(' '))
}

/// Strips the adjective position marker: `galore(ip)` -> `galore`.
fn strip_marker(word: &str) -> &str {
    match word.find('(') {
        Some(i) if word.ends_with(')') => &word[..i],
        _ => word,
    }
}

pub(super) fn load_dir(dir: &Path) -> Result<Lexicon, LexiconError> {
    for kind in ["index", "data"] {
        for pos in PosTag::ALL {
            let path = dir.join(format!("{kind}.{}", pos.file_suffix()));
            if !path.is_file() {
                return Err(LexiconError::MissingFile(path));
            }
        }
    }

    let mut synsets: HashMap<SynsetId, Synset> = HashMap::new();
    let mut pointers = Vec::new();
    let mut meta = LexiconMeta {
        source: dir.to_path_buf(),
        ..LexiconMeta::default()
    };

    for pos in PosTag::ALL {
        let path = dir.join(format!("data.{}", pos.file_suffix()));
        let text = read(&path)?;
        for (line_no, line) in content_lines(&text) {
            let synset = parse_data_line(line, pos, &path, line_no, &mut pointers)?;
            if synsets.insert(synset.id, synset).is_some() {
                return Err(malformed(&path, line_no, "duplicate synset offset"));
            }
            meta.synsets_per_pos[pos as usize] += 1;
        }
    }

    for p in &pointers {
        if !synsets.contains_key(&p.to) {
            return Err(malformed(
                &p.file,
                p.line,
                format!("pointer to unknown synset {}", p.to),
            ));
        }
    }
    for p in pointers {
        let (child, parent) = if p.hypernym {
            (p.from, p.to)
        } else {
            (p.to, p.from)
        };
        push_unique(&mut synsets.get_mut(&child).unwrap().hypernyms, parent);
        push_unique(&mut synsets.get_mut(&parent).unwrap().hyponyms, child);
    }

    let mut entries: HashMap<String, LexiconEntry> = HashMap::new();
    for pos in PosTag::ALL {
        let path = dir.join(format!("index.{}", pos.file_suffix()));
        let text = read(&path)?;
        for (line_no, line) in content_lines(&text) {
            let (lemma, offsets, tag_count) = parse_index_line(line, pos, &path, line_no)?;
            let mut ids = Vec::with_capacity(offsets.len());
            for offset in offsets {
                let id = SynsetId { offset, pos };
                if !synsets.contains_key(&id) {
                    return Err(malformed(
                        &path,
                        line_no,
                        format!("lemma `{lemma}` refers to unknown synset {id}"),
                    ));
                }
                ids.push(id);
            }
            let entry = entries
                .entry(lemma.clone())
                .or_insert_with(|| LexiconEntry {
                    lemma,
                    ..LexiconEntry::default()
                });
            if entry.senses.insert(pos, ids).is_some() {
                return Err(malformed(&path, line_no, "duplicate index lemma"));
            }
            entry.tag_counts.insert(pos, tag_count);
            meta.lemmas_per_pos[pos as usize] += 1;
        }
    }

    let mut exceptions: [HashMap<String, Vec<String>>; 4] = Default::default();
    for pos in PosTag::ALL {
        let path = dir.join(format!("{}.exc", pos.file_suffix()));
        if !path.is_file() {
            continue;
        }
        let text = read(&path)?;
        let map = &mut exceptions[pos as usize];
        for (_, line) in content_lines(&text) {
            let mut fields = line.split_whitespace();
            let Some(surface) = fields.next() else {
                continue;
            };
            let lemmas: Vec<String> = fields.map(str::to_lowercase).collect();
            if !lemmas.is_empty() {
                map.entry(surface.to_lowercase())
                    .or_default()
                    .extend(lemmas);
            }
        }
    }

    Ok(Lexicon {
        entries,
        synsets,
        exceptions,
        meta,
    })
}

fn push_unique(list: &mut Vec<SynsetId>, id: SynsetId) {
    if !list.contains(&id) {
        list.push(id);
    }
}

fn parse_data_line(
    line: &str,
    file_pos: PosTag,
    path: &Path,
    line_no: usize,
    pointers: &mut Vec<PendingPointer>,
) -> Result<Synset, LexiconError> {
    let bad = |reason: &str| malformed(path, line_no, reason);
    let body = line.split('|').next().unwrap_or("");
    let mut fields = body.split_whitespace();
    let mut next = |what: &str| fields.next().ok_or_else(|| bad(&format!("missing {what}")));

    let offset: u64 = next("synset offset")?
        .parse()
        .map_err(|_| bad("synset offset is not a number"))?;
    next("lexicographer file number")?;
    let ss_type = next("synset type")?;
    if PosTag::from_code(ss_type) != Some(file_pos) {
        return Err(bad(&format!(
            "synset type `{ss_type}` does not belong in this file"
        )));
    }
    let id = SynsetId {
        offset,
        pos: file_pos,
    };
    let word_count = u32::from_str_radix(next("word count")?, 16)
        .map_err(|_| bad("word count is not hexadecimal"))?;
    if word_count == 0 {
        return Err(bad("synset has no words"));
    }
    let mut lemmas = Vec::with_capacity(word_count as usize);
    for _ in 0..word_count {
        let word = next("word")?;
        next("lex id")?;
        lemmas.push(strip_marker(word).to_lowercase());
    }
    let pointer_count: u32 = next("pointer count")?
        .parse()
        .map_err(|_| bad("pointer count is not a number"))?;
    for _ in 0..pointer_count {
        let symbol = next("pointer symbol")?;
        let target: u64 = next("pointer offset")?
            .parse()
            .map_err(|_| bad("pointer offset is not a number"))?;
        let target_pos = PosTag::from_code(next("pointer part of speech")?)
            .ok_or_else(|| bad("unknown pointer part of speech"))?;
        next("pointer source/target")?;
        let hypernym = match symbol {
            "@" | "@i" => true,
            "~" | "~i" => false,
            _ => continue,
        };
        pointers.push(PendingPointer {
            from: id,
            to: SynsetId {
                offset: target,
                pos: target_pos,
            },
            hypernym,
            file: path.to_path_buf(),
            line: line_no,
        });
    }
    Ok(Synset {
        id,
        lemmas,
        hypernyms: Vec::new(),
        hyponyms: Vec::new(),
    })
}

fn parse_index_line(
    line: &str,
    file_pos: PosTag,
    path: &Path,
    line_no: usize,
) -> Result<(String, Vec<u64>, u32), LexiconError> {
    let bad = |reason: &str| malformed(path, line_no, reason);
    let fields: Vec<&str> = line.split_whitespace().collect();
    let num = |i: usize, what: &str| -> Result<u64, LexiconError> {
        fields
            .get(i)
            .ok_or_else(|| bad(&format!("missing {what}")))?
            .parse::<u64>()
            .map_err(|_| bad(&format!("{what} is not a number")))
    };
    let lemma = fields
        .first()
        .ok_or_else(|| bad("missing lemma"))?
        .to_lowercase();
    match fields.get(1).and_then(|c| PosTag::from_code(c)) {
        Some(pos) if pos == file_pos => {}
        _ => return Err(bad("part of speech does not match the file")),
    }
    let synset_count = num(2, "synset count")? as usize;
    let pointer_count = num(3, "pointer count")? as usize;
    let after_pointers = 4 + pointer_count;
    num(after_pointers, "sense count")?;
    let tag_count = num(after_pointers + 1, "tagged sense count")?;
    let first_offset = after_pointers + 2;
    if fields.len() != first_offset + synset_count {
        return Err(bad(&format!(
            "expected {synset_count} synset offsets, found {}",
            fields.len().saturating_sub(first_offset)
        )));
    }
    if synset_count == 0 {
        return Err(bad("lemma has no synsets"));
    }
    let offsets = (first_offset..fields.len())
        .map(|i| num(i, "synset offset"))
        .collect::<Result<Vec<_>, _>>()?;
    let tag_count = u32::try_from(tag_count).map_err(|_| bad("tagged sense count too large"))?;
    Ok((lemma, offsets, tag_count))
}
