//! Plain-text, JSON and CSV renderings. Every report is a pure function of its
//! input, so output is byte-identical across runs.

use std::fmt::Write as _;

use clap::ValueEnum;
use lexiscope::{
    top_k, ConceptMatch, DomainVocabulary, PosTag, ProjectStats, ProjectVocabulary, TermStatus,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatsFormat {
    Table,
    Json,
    Csv,
}

/// The report rows: label, distinct-word count, percentage where one applies.
/// Shared by all three formats so their numbers cannot drift apart.
fn stats_rows(stats: &ProjectStats) -> Vec<(&'static str, usize, Option<u64>)> {
    let mut rows = vec![
        ("files", stats.file_count, None),
        ("words", stats.total_words, None),
        (
            "recognized",
            stats.recognized,
            Some(stats.recognized_percent()),
        ),
        (
            "not recognized",
            stats.unrecognized,
            Some(stats.unrecognized_percent()),
        ),
    ];
    for (label, pos) in [
        ("nouns", PosTag::Noun),
        ("verbs", PosTag::Verb),
        ("adjectives", PosTag::Adjective),
        ("adverbs", PosTag::Adverb),
    ] {
        rows.push((label, stats.pos_count(pos), Some(stats.pos_percent(pos))));
    }
    rows
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct StatsJson<'a> {
    project_name: &'a str,
    #[serde(flatten)]
    stats: &'a ProjectStats,
    recognized_percent: u64,
    unrecognized_percent: u64,
    nouns_percent: u64,
    verbs_percent: u64,
    adjectives_percent: u64,
    adverbs_percent: u64,
}

pub fn stats_report(project: &str, stats: &ProjectStats, format: StatsFormat) -> String {
    let mut out = String::new();
    match format {
        StatsFormat::Table => {
            let _ = writeln!(out, "{:<16}{project}", "project");
            for (label, count, pct) in stats_rows(stats) {
                let _ = match pct {
                    Some(p) => writeln!(out, "{label:<16}{count:>8}{:>6}", format!("{p}%")),
                    None => writeln!(out, "{label:<16}{count:>8}"),
                };
            }
        }
        StatsFormat::Csv => {
            out.push_str("metric,count,percent\n");
            for (label, count, pct) in stats_rows(stats) {
                let pct = pct.map(|p| p.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{label},{count},{pct}");
            }
        }
        StatsFormat::Json => {
            let doc = StatsJson {
                project_name: project,
                stats,
                recognized_percent: stats.recognized_percent(),
                unrecognized_percent: stats.unrecognized_percent(),
                nouns_percent: stats.pos_percent(PosTag::Noun),
                verbs_percent: stats.pos_percent(PosTag::Verb),
                adjectives_percent: stats.pos_percent(PosTag::Adjective),
                adverbs_percent: stats.pos_percent(PosTag::Adverb),
            };
            out = serde_json::to_string_pretty(&doc).expect("stats serialize");
            out.push('\n');
        }
    }
    out
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn topwords_report(vocab: &ProjectVocabulary, k: usize) -> String {
    let mut rows = vec![[
        "rank",
        "word",
        "total",
        "class",
        "method",
        "parameter",
        "field",
        "pos",
    ]
    .map(String::from)
    .to_vec()];
    for (rank, e) in top_k(vocab, k).into_iter().enumerate() {
        let c = &e.counts_by_kind;
        rows.push(vec![
            (rank + 1).to_string(),
            e.word.clone(),
            e.total.to_string(),
            c.class.to_string(),
            c.method.to_string(),
            c.parameter.to_string(),
            c.field.to_string(),
            e.pos.map_or("-".to_string(), |p| p.to_string()),
        ]);
    }
    columns(&rows)
}

/// `**domain**`, `*potential*`, plain single.
pub fn marked(word: &str, status: TermStatus) -> String {
    match status {
        TermStatus::Domain => format!("**{word}**"),
        TermStatus::Potential => format!("*{word}*"),
        TermStatus::Single => word.to_string(),
    }
}

pub fn domain_report(domain: &DomainVocabulary) -> String {
    let mut out = format!(
        "domain {}: {} projects, k={}, semantic {}\n",
        domain.domain_name,
        domain.project_names.len(),
        domain.k,
        if domain.semantic { "on" } else { "off" }
    );
    let mut header = vec!["word".to_string()];
    header.extend(domain.project_names.iter().cloned());
    let mut rows = vec![header];
    for term in &domain.terms {
        let mut row = vec![marked(&term.word, term.status)];
        row.extend(term.per_project_totals.iter().map(u64::to_string));
        let via: Vec<String> = term
            .evidence
            .iter()
            .zip(&domain.project_names)
            .filter_map(|(ev, project)| {
                ev.as_ref()
                    .map(|ev| format!("{project}:{}({})", ev.matched_word, ev.relation))
            })
            .collect();
        if !via.is_empty() {
            row.push(format!("via {}", via.join(" ")));
        }
        rows.push(row);
    }
    out.push_str(&columns(&rows));
    out
}

pub fn locate_report(matches: &[ConceptMatch]) -> String {
    if matches.is_empty() {
        return "no matches\n".to_string();
    }
    let mut out = String::new();
    for m in matches {
        let _ = writeln!(
            out,
            "{}:{} {} {} {}",
            m.file, m.line, m.kind, m.name, m.score
        );
        for ev in &m.evidence {
            let _ = writeln!(out, "  {ev}");
        }
    }
    out
}
