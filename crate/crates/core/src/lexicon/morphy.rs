//! Morphy-style suffix detachment.

use super::PosTag;

const NOUN_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("ies", "y"),
];

const VERB_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ies", "y"),
    ("es", "e"),
    ("es", ""),
    ("ed", "e"),
    ("ed", ""),
    ("ing", "e"),
    ("ing", ""),
];

const ADJECTIVE_RULES: &[(&str, &str)] = &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")];

fn rules(pos: PosTag) -> &'static [(&'static str, &'static str)] {
    match pos {
        PosTag::Noun => NOUN_RULES,
        PosTag::Verb => VERB_RULES,
        PosTag::Adjective => ADJECTIVE_RULES,
        PosTag::Adverb => &[],
    }
}

fn is_consonant(c: u8) -> bool {
    c.is_ascii_alphabetic() && !b"aeiou".contains(&c)
}

/// Stems produced by the suffix rules of `pos`, in rule order. Callers still
/// have to check each stem against the index.
///
/// For the bare `-ed`/`-ing` verb rules, a stem ending in a doubled consonant
/// that `is_lemma` rejects is followed by its undoubled form (`runn` → `run`).
pub(super) fn detach(token: &str, pos: PosTag, is_lemma: impl Fn(&str) -> bool) -> Vec<String> {
    let mut out = Vec::new();
    for &(suffix, replacement) in rules(pos) {
        let Some(stem) = token.strip_suffix(suffix) else {
            continue;
        };
        if stem.is_empty() {
            continue;
        }
        let candidate = format!("{stem}{replacement}");
        let undouble =
            pos == PosTag::Verb && replacement.is_empty() && (suffix == "ed" || suffix == "ing");
        if undouble && !is_lemma(&candidate) {
            let bytes = candidate.as_bytes();
            let n = bytes.len();
            if n >= 2 && bytes[n - 1] == bytes[n - 2] && is_consonant(bytes[n - 1]) {
                out.push(candidate.clone());
                out.push(candidate[..n - 1].to_string());
                continue;
            }
        }
        out.push(candidate);
    }
    out
}
