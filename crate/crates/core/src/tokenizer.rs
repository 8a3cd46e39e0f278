//! Identifier splitting by naming convention.

use crate::extractor::SourceNode;

/// One word of a split identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub source_node: usize,
    /// Index within the identifier's token sequence.
    pub position: usize,
}

/// Splits an identifier into lowercase words.
///
/// `_`, `$` and digit runs separate words and are dropped. Inside a letter
/// run a word starts at each lower→upper transition, and an uppercase run
/// followed by a lowercase letter gives up its last capital to the next word,
/// so `XMLHttpRequest` splits as `xml`, `http`, `request`.
pub fn split_identifier(name: &str) -> Vec<String> {
    let mut out = Vec::new();
    for run in name.split(|c: char| !c.is_ascii_alphabetic()) {
        split_letter_run(run.as_bytes(), &mut out);
    }
    out
}

fn split_letter_run(run: &[u8], out: &mut Vec<String>) {
    let mut start = 0;
    for i in 1..run.len() {
        let prev = run[i - 1];
        let cur = run[i];
        let camel_hump = prev.is_ascii_lowercase() && cur.is_ascii_uppercase();
        let acronym_end = prev.is_ascii_uppercase()
            && cur.is_ascii_uppercase()
            && run.get(i + 1).is_some_and(u8::is_ascii_lowercase);
        if camel_hump || acronym_end {
            push_word(&run[start..i], out);
            start = i;
        }
    }
    push_word(&run[start..], out);
}

fn push_word(word: &[u8], out: &mut Vec<String>) {
    if !word.is_empty() {
        out.push(String::from_utf8_lossy(word).to_ascii_lowercase());
    }
}

pub fn tokenize_node(node: &SourceNode) -> Vec<Token> {
    split_identifier(&node.name)
        .into_iter()
        .enumerate()
        .map(|(position, text)| Token {
            text,
            source_node: node.id,
            position,
        })
        .collect()
}
