//! Seeded generators for synthetic lexicons, identifiers, node lists and Java
//! source trees. Same seed, same output.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use lexiscope::{DictBuilder, NodeKind, PosTag, SourceNode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const ONSETS: [&str; 14] = [
    "b", "c", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v",
];
const VOWELS: [&str; 5] = ["a", "e", "i", "o", "u"];
const SUFFIXES: [&str; 6] = ["", "", "", "s", "ing", "ed"];

/// The `i`-th synthetic word: distinct for distinct `i`, lowercase, 2+ letters.
pub fn word(i: usize) -> String {
    let mut n = i;
    let mut out = String::new();
    loop {
        out.push_str(ONSETS[n % ONSETS.len()]);
        n /= ONSETS.len();
        out.push_str(VOWELS[n % VOWELS.len()]);
        n /= VOWELS.len();
        if n == 0 {
            break;
        }
        n -= 1;
    }
    out
}

/// `words` lemmas spread over noun and verb synsets (some adjectives and
/// adverbs), with hypernym chains and random tag counts.
pub fn dictionary(seed: u64, words: usize) -> DictBuilder {
    let mut rng = rng(seed);
    let mut b = DictBuilder::new();
    let mut by_pos: [Vec<lexiscope::SynsetHandle>; 4] = Default::default();
    let mut next = 0;
    while next < words {
        let pos = match rng.gen_range(0..10) {
            0..=5 => PosTag::Noun,
            6..=7 => PosTag::Verb,
            8 => PosTag::Adjective,
            _ => PosTag::Adverb,
        };
        let size = rng.gen_range(1..=3).min(words - next);
        let mut lemmas: Vec<String> = (next..next + size).map(word).collect();
        // Some lemmas also get a second sense elsewhere.
        if next > 0 && rng.gen_bool(0.2) {
            lemmas.push(word(rng.gen_range(0..next)));
        }
        next += size;
        let refs: Vec<&str> = lemmas.iter().map(String::as_str).collect();
        let h = b.synset(pos, &refs);
        let pool = &mut by_pos[pos as usize];
        if pos <= PosTag::Verb && !pool.is_empty() && rng.gen_bool(0.7) {
            let parent = *pool.choose(&mut rng).unwrap();
            b.hypernym(h, parent);
        }
        pool.push(h);
        for l in &lemmas {
            b.tag_count(l, pos, rng.gen_range(0..20));
        }
    }
    b
}

/// A camel-case, snake-case or constant-style identifier over the first
/// `vocabulary` synthetic words, with inflections and noise.
pub fn identifier(rng: &mut impl Rng, vocabulary: usize) -> String {
    let parts: Vec<String> = (0..rng.gen_range(1..=4))
        .map(|_| {
            if rng.gen_bool(0.15) {
                // Not in any dictionary.
                let len = rng.gen_range(2..5);
                (0..len)
                    .map(|_| rng.gen_range(b'w'..=b'z') as char)
                    .collect()
            } else {
                let w = word(rng.gen_range(0..vocabulary.max(1)));
                format!("{w}{}", SUFFIXES.choose(rng).unwrap())
            }
        })
        .collect();
    let mut id = match rng.gen_range(0..10) {
        0 => parts.join("_").to_uppercase(),
        1 => parts.join("_"),
        2 => {
            // Acronym head: HTTPServer style.
            let mut s = parts[0].to_uppercase();
            for p in &parts[1..] {
                s.push_str(&capitalize(p));
            }
            s
        }
        _ => {
            let mut s = if rng.gen_bool(0.3) {
                capitalize(&parts[0])
            } else {
                parts[0].clone()
            };
            for p in &parts[1..] {
                s.push_str(&capitalize(p));
            }
            s
        }
    };
    if rng.gen_bool(0.1) {
        let _ = write!(id, "{}", rng.gen_range(0..100));
    }
    if rng.gen_bool(0.05) {
        id.insert(0, '$');
    }
    id
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_ascii_uppercase().to_string() + c.as_str(),
        None => String::new(),
    }
}

/// A well-formed node list of about `n` nodes over `files` file names.
pub fn nodes(seed: u64, n: usize, files: usize, vocabulary: usize) -> Vec<SourceNode> {
    let mut rng = rng(seed);
    let mut out: Vec<SourceNode> = Vec::with_capacity(n);
    let mut class = None;
    let mut method = None;
    while out.len() < n {
        let id = out.len();
        let kind = match (class, method, rng.gen_range(0..10)) {
            (None, _, _) | (_, _, 0) => NodeKind::Class,
            (_, Some(_), 1..=4) => NodeKind::Parameter,
            (_, _, 5..=6) => NodeKind::Field,
            _ => NodeKind::Method,
        };
        let parent = match kind {
            NodeKind::Class => None,
            NodeKind::Parameter => method,
            _ => class,
        };
        match kind {
            NodeKind::Class => {
                class = Some(id);
                method = None;
            }
            NodeKind::Method => method = Some(id),
            _ => {}
        }
        out.push(SourceNode {
            id,
            kind,
            name: identifier(&mut rng, vocabulary),
            file: format!("src/F{}.java", id % files.max(1)),
            line: id as u32 + 1,
            parent,
        });
    }
    out
}

fn java_name(rng: &mut impl Rng, vocabulary: usize, upper: bool) -> String {
    let mut parts: Vec<String> = (0..rng.gen_range(1..=3))
        .map(|_| word(rng.gen_range(0..vocabulary)))
        .collect();
    for p in parts.iter_mut().skip(usize::from(!upper)) {
        *p = capitalize(p);
    }
    parts.concat()
}

/// Writes `files` Java sources under `dir/pkgN/`, each a class with fields,
/// methods, parameters, a nested type and some comments and literals.
pub fn java_corpus(dir: &Path, files: usize, seed: u64, vocabulary: usize) -> io::Result<()> {
    let mut rng = rng(seed);
    for f in 0..files {
        let pkg = dir.join(format!("pkg{}", f % 10));
        fs::create_dir_all(&pkg)?;
        let class = format!("{}{f}", java_name(&mut rng, vocabulary, true));
        let mut src = format!("package pkg{};\n\nimport java.util.List;\n\n", f % 10);
        let _ = writeln!(src, "/** Generated type {class}. */");
        let _ = writeln!(src, "public class {class} {{");
        for _ in 0..rng.gen_range(1..5) {
            let _ = writeln!(
                src,
                "    private List<String> {} = null; // {}",
                java_name(&mut rng, vocabulary, false),
                word(rng.gen_range(0..vocabulary))
            );
        }
        for _ in 0..rng.gen_range(1..6) {
            let params: Vec<String> = (0..rng.gen_range(0..4))
                .map(|_| format!("int {}", java_name(&mut rng, vocabulary, false)))
                .collect();
            let _ = writeln!(
                src,
                "    public String {}({}) {{\n        String s = \"{{ not a class }}\";\n        return s;\n    }}",
                java_name(&mut rng, vocabulary, false),
                params.join(", ")
            );
        }
        let _ = writeln!(
            src,
            "    static class {} {{ int {}; }}\n}}",
            java_name(&mut rng, vocabulary, true),
            java_name(&mut rng, vocabulary, false)
        );
        fs::write(pkg.join(format!("{class}.java")), src)?;
    }
    Ok(())
}
