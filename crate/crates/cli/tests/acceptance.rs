//! Acceptance suite. One line per criterion: PASS, FAIL or SKIP, with the
//! measured time against its limit. Exits non-zero when any criterion fails.
//!
//! Criterion 6 needs a WordNet 3.1 `dict` directory named by
//! `LEXISCOPE_WORDNET`; without it the criterion is skipped.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use lexiscope::{
    build_domain_vocabulary, build_vocabulary, compute_stats, percent, split_identifier,
    FilterConfig, KindCounts, Lexicon, PosTag, ProjectVocabulary, Relation, TermStatus,
    VocabularyEntry,
};
use lexiscope_bench::{dictionary, identifier, java_corpus, nodes, rng};
use rand::Rng;

type Check = Result<Verdict, String>;

enum Verdict {
    Pass,
    Skip(String),
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(rel: &str) -> PathBuf {
    root().join("fixtures").join(rel)
}

fn lexiscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexiscope"))
        .args(args)
        .env_remove("LEXISCOPE_DICT")
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> Result<String, String> {
    let out = lexiscope(args);
    if !out.status.success() {
        return Err(format!(
            "`lexiscope {}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

/// 1. recognized + unrecognized = words and the four POS counts sum to recognized.
fn stats_partition() -> Check {
    // Published POS breakdowns of two real projects, rebuilt as vocabularies.
    for (counts, recognized, noun_pct) in [
        ([2361, 1259, 549, 128], 4297, 55),
        ([537, 229, 117, 20], 903, 59),
    ] {
        let mut vocab = ProjectVocabulary::default();
        for (pos, &n) in PosTag::ALL.iter().zip(&counts) {
            for i in 0..n {
                let word = format!("{pos}{i}");
                vocab.entries.insert(
                    word.clone(),
                    VocabularyEntry {
                        word,
                        recognized: true,
                        pos: Some(*pos),
                        total: 1,
                        counts_by_kind: KindCounts {
                            class: 1,
                            ..KindCounts::default()
                        },
                    },
                );
            }
        }
        let stats = compute_stats(&vocab);
        ensure(stats.recognized == recognized, || format!("{stats:?}"))?;
        ensure(stats.pos_percent(PosTag::Noun) == noun_pct, || {
            format!("{stats:?}")
        })?;
    }
    ensure(percent(2361, 4297) == 55, || "percent".into())?;

    let lexicon = dictionary(11, 600).build().map_err(|e| e.to_string())?;
    let filter = FilterConfig::default();
    let mut r = rng(12);
    for trial in 0..1000u64 {
        let n = r.gen_range(0..400);
        let corpus = nodes(trial, n, 20, 800);
        let vocab = build_vocabulary(&corpus, &lexicon, &filter);
        let s = compute_stats(&vocab);
        ensure(s.recognized + s.unrecognized == s.total_words, || {
            format!("trial {trial}: {s:?}")
        })?;
        ensure(
            s.nouns + s.verbs + s.adjectives + s.adverbs == s.recognized,
            || format!("trial {trial}: {s:?}"),
        )?;
    }
    Ok(Verdict::Pass)
}

/// 2. Splitter goldens, then reconstruction and idempotence on generated names.
fn splitter() -> Check {
    for (name, expected) in [
        ("setValue", &["set", "value"][..]),
        ("a", &["a"]),
        ("XMLHttpRequest", &["xml", "http", "request"]),
        ("MAX_VALUE2", &["max", "value"]),
    ] {
        let got = split_identifier(name);
        ensure(got == expected, || format!("{name} → {got:?}"))?;
    }
    let mut r = rng(21);
    for _ in 0..5000 {
        let name = identifier(&mut r, 300);
        let tokens = split_identifier(&name);
        let expected: String = name
            .chars()
            .filter(|c| c.is_ascii_alphabetic())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        ensure(tokens.concat() == expected, || {
            format!("reconstruction of {name}: {tokens:?}")
        })?;
        for t in &tokens {
            ensure(
                !t.is_empty() && t.bytes().all(|b| b.is_ascii_lowercase()),
                || format!("{name}: bad token {t:?}"),
            )?;
            ensure(split_identifier(t) == [t.clone()], || {
                format!("idempotence of {t} from {name}")
            })?;
        }
    }
    Ok(Verdict::Pass)
}

/// 3. The worked concept-location example, end to end through the binary.
fn worked_example(scratch: &Path) -> Check {
    let index = scratch.join("mini.json");
    let dict = fixture("dict");
    stdout_ok(&[
        "analyze",
        path(&fixture("mini-corpus")),
        "--dict",
        path(&dict),
        "--out",
        path(&index),
    ])?;
    let golden = std::fs::read(fixture("mini-corpus.index.json")).map_err(|e| e.to_string())?;
    let written = std::fs::read(&index).map_err(|e| e.to_string())?;
    ensure(golden == written, || {
        "index differs from the golden bytes".into()
    })?;

    let hits = stdout_ok(&[
        "locate",
        path(&index),
        "find word form",
        "--dict",
        path(&dict),
    ])?;
    let lines: Vec<&str> = hits.lines().collect();
    ensure(
        lines.get(..4)
            == Some(
                &[
                    "demo/WordForm.java:7 method getType 5",
                    "  find→get (hypernym,1)",
                    "  word→word (self,0)",
                    "  form→type (hyponym,1)",
                ][..],
            ),
        || format!("locate output:\n{hits}"),
    )?;

    let plain = stdout_ok(&[
        "locate",
        path(&index),
        "find word form",
        "--dict",
        path(&dict),
        "--relations",
        "none",
    ])?;
    ensure(plain == "no matches\n", || {
        format!("full-text only:\n{plain}")
    })?;
    Ok(Verdict::Pass)
}

/// Writes a node file of one class per listed name and analyzes it.
fn jsonl_index(scratch: &Path, project: &str, names: &[(&str, usize)]) -> Result<PathBuf, String> {
    let mut text = String::new();
    let mut line = 1;
    for (name, times) in names {
        for _ in 0..*times {
            text.push_str(&format!(
                "{{\"kind\":\"class\",\"name\":\"{name}\",\"file\":\"{project}.java\",\"line\":{line}}}\n"
            ));
            line += 1;
        }
    }
    let nodes = scratch.join(format!("{project}.jsonl"));
    std::fs::write(&nodes, text).map_err(|e| e.to_string())?;
    let index = scratch.join(format!("{project}.json"));
    stdout_ok(&[
        "analyze",
        path(&nodes),
        "--input",
        "jsonl",
        "--dict",
        path(&fixture("dict")),
        "--out",
        path(&index),
    ])?;
    Ok(index)
}

fn row<'a>(report: &'a str, first: &str) -> Option<Vec<&'a str>> {
    report
        .lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .find(|cells| cells.first() == Some(&first))
}

/// 4. Words in 3/3, 2/3 and 1/3 of the top-k sets: bold, italic, plain.
fn domain_statuses(scratch: &Path) -> Check {
    let a = jsonl_index(scratch, "alpha", &[("Name", 3), ("Word", 2), ("Action", 1)])?;
    let b = jsonl_index(scratch, "beta", &[("Name", 2), ("Word", 1), ("Zeta", 1)])?;
    let c = jsonl_index(scratch, "gamma", &[("Name", 1), ("Thing", 2)])?;
    let report = stdout_ok(&["domain", path(&a), path(&b), path(&c), "-k", "3"])?;
    for (cells, expected) in [
        (row(&report, "**name**"), ["**name**", "3", "2", "1"]),
        (row(&report, "*word*"), ["*word*", "2", "1", "0"]),
        (row(&report, "action"), ["action", "1", "0", "0"]),
    ] {
        ensure(cells.as_deref() == Some(&expected[..]), || {
            format!("expected row {expected:?} in\n{report}")
        })?;
    }

    let one = lexiscope(&["domain", path(&a)]);
    ensure(one.status.code() == Some(1), || {
        format!("one index exited {:?}", one.status.code())
    })?;
    Ok(Verdict::Pass)
}

/// 5. vehicle/car semantic support, and support never drops with merging on.
fn semantic_merge(scratch: &Path) -> Check {
    let a = jsonl_index(scratch, "fleet", &[("Vehicle", 2), ("Wheel", 1)])?;
    let b = jsonl_index(scratch, "garage", &[("Car", 2), ("Door", 1)])?;
    let dict = fixture("dict");
    let plain = stdout_ok(&["domain", path(&a), path(&b), "-k", "2"])?;
    let merged = stdout_ok(&[
        "domain",
        path(&a),
        path(&b),
        "-k",
        "2",
        "--semantic",
        "--dict",
        path(&dict),
    ])?;
    ensure(row(&plain, "vehicle").is_some(), || {
        format!("plain:\n{plain}")
    })?;
    let vehicle = row(&merged, "**vehicle**");
    ensure(
        vehicle.as_deref() == Some(&["**vehicle**", "2", "0", "via", "garage:car(hyponym)"][..]),
        || format!("merged:\n{merged}"),
    )?;

    let lexicon = Lexicon::load(&dict).map_err(|e| e.to_string())?;
    let load = |name: &str| -> Result<ProjectVocabulary, String> {
        let index = lexiscope::ProjectIndex::load(scratch.join(format!("{name}.json")))
            .map_err(|e| e.to_string())?;
        Ok(index.vocabulary())
    };
    let vocabs = [load("fleet")?, load("garage")?];
    let merged =
        build_domain_vocabulary("d", &vocabs, 2, Some(&lexicon)).map_err(|e| e.to_string())?;
    let v = merged.term("vehicle").ok_or("no vehicle term")?;
    ensure(
        v.support_count == 2 && v.status == TermStatus::Domain,
        || format!("{v:?}"),
    )?;
    ensure(
        v.evidence[1]
            .as_ref()
            .map(|e| (e.matched_word.as_str(), e.relation))
            == Some(("car", Relation::Hyponym)),
        || format!("{v:?}"),
    )?;

    let synthetic = dictionary(31, 300).build().map_err(|e| e.to_string())?;
    let mut r = rng(32);
    for trial in 0..200u64 {
        let projects = r.gen_range(2..5);
        let vocabs: Vec<ProjectVocabulary> = (0..projects)
            .map(|p| ProjectVocabulary {
                project_name: format!("p{p}"),
                ..build_vocabulary(
                    &nodes(trial * 10 + p, r.gen_range(0..200), 5, 350),
                    &synthetic,
                    &FilterConfig::default(),
                )
            })
            .collect();
        let k = r.gen_range(1..30);
        let plain = build_domain_vocabulary("d", &vocabs, k, None).map_err(|e| e.to_string())?;
        let merged = build_domain_vocabulary("d", &vocabs, k, Some(&synthetic))
            .map_err(|e| e.to_string())?;
        for t in &plain.terms {
            let m = merged.term(&t.word).map_or(0, |m| m.support_count);
            ensure(m >= t.support_count, || {
                format!(
                    "trial {trial}: `{}` support {} → {m}",
                    t.word, t.support_count
                )
            })?;
        }
        let plain_words: BTreeSet<&str> = plain.terms.iter().map(|t| t.word.as_str()).collect();
        let merged_words: BTreeSet<&str> = merged.terms.iter().map(|t| t.word.as_str()).collect();
        ensure(plain_words == merged_words, || {
            format!("trial {trial}: candidate sets differ")
        })?;
    }
    Ok(Verdict::Pass)
}

/// 6. A real WordNet 3.1 dictionary: "good" is a noun and an adjective.
fn real_lexicon() -> Check {
    let Some(dir) = std::env::var_os("LEXISCOPE_WORDNET") else {
        return Ok(Verdict::Skip("LEXISCOPE_WORDNET is not set".into()));
    };
    let started = Instant::now();
    let lexicon = Lexicon::load(&dir).map_err(|e| e.to_string())?;
    let load_time = started.elapsed();
    ensure(load_time < Duration::from_secs(5), || {
        format!("load took {load_time:?}")
    })?;

    let good = lexicon.lookup("good").ok_or("`good` is missing")?;
    ensure(
        good.has_pos(PosTag::Noun) && good.has_pos(PosTag::Adjective),
        || format!("good: {:?}", good.parts_of_speech().collect::<Vec<_>>()),
    )?;
    let set = lexicon.lookup("set").ok_or("`set` is missing")?;
    ensure(
        set.has_pos(PosTag::Noun) && set.has_pos(PosTag::Verb),
        || "set".into(),
    )?;
    ensure(lexicon.lookup("qqzx").is_none(), || "qqzx".into())?;

    let words: Vec<String> = lexicon
        .entries()
        .take(1000)
        .map(|e| e.lemma.clone())
        .collect();
    let started = Instant::now();
    let mut found = 0usize;
    for i in 0..100_000 {
        found += usize::from(lexicon.lookup(&words[i % words.len()]).is_some());
    }
    let lookups = started.elapsed();
    ensure(found == 100_000, || "lookups missed".into())?;
    ensure(lookups < Duration::from_secs(1), || {
        format!("10^5 lookups took {lookups:?}")
    })?;
    Ok(Verdict::Pass)
}

/// 7. Analyzing 1000 generated files gives the same bytes at any thread count.
fn determinism(scratch: &Path) -> Check {
    let src = scratch.join("corpus");
    let dict = scratch.join("synthetic-dict");
    java_corpus(&src, 1000, 71, 900).map_err(|e| e.to_string())?;
    dictionary(72, 600)
        .write_to(&dict)
        .map_err(|e| e.to_string())?;

    let mut outputs = Vec::new();
    for threads in ["1", "4", "0", "1"] {
        let out = scratch.join(format!("scale-{}.json", outputs.len()));
        stdout_ok(&[
            "analyze",
            path(&src),
            "--dict",
            path(&dict),
            "--out",
            path(&out),
            "--threads",
            threads,
            "--name",
            "scale",
        ])?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
        "index bytes differ".into()
    })?;
    let index = lexiscope::ProjectIndex::from_json(std::str::from_utf8(&outputs[0]).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(index.file_count == 1000, || {
        format!("fileCount {}", index.file_count)
    })?;
    Ok(Verdict::Pass)
}

fn main() {
    let scratch = tempfile::tempdir().expect("scratch dir");
    let dir = scratch.path();
    let criteria: Vec<(&str, Option<u64>, Box<dyn Fn() -> Check + '_>)> = vec![
        (
            "stats partition identity",
            Some(5),
            Box::new(stats_partition),
        ),
        (
            "splitter golden and properties",
            Some(2),
            Box::new(splitter),
        ),
        (
            "concept location worked example",
            Some(1),
            Box::new(|| worked_example(dir)),
        ),
        (
            "domain intersection statuses",
            None,
            Box::new(|| domain_statuses(dir)),
        ),
        (
            "semantic merge and monotonicity",
            None,
            Box::new(|| semantic_merge(dir)),
        ),
        ("real lexicon smoke test", None, Box::new(real_lexicon)),
        (
            "determinism and scale",
            Some(10),
            Box::new(|| determinism(dir)),
        ),
    ];

    let mut failed = 0;
    for (i, (title, limit, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let within = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let bound = limit.map_or(String::new(), |s| format!(" < {s}s"));
        let line = match result {
            Ok(Verdict::Pass) if within => format!("PASS  {:.2}s{bound}", elapsed.as_secs_f64()),
            Ok(Verdict::Pass) => format!("FAIL  {:.2}s exceeds{bound}", elapsed.as_secs_f64()),
            Ok(Verdict::Skip(why)) => format!("SKIP  {why}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {}  {title:<34} {line}", i + 1);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
