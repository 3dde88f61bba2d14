//! Text layouts and JSON helpers.

use chandas::{Natural, PatakaMatrix, SankhyaToken, SankhyaTrace};
use serde_json::Value;

/// Exact JSON number for an unbounded integer.
pub fn number(n: &Natural) -> Value {
    Value::Number(
        n.to_string()
            .parse()
            .expect("decimal digits are valid JSON numbers"),
    )
}

pub fn numbers(ns: &[Natural]) -> Value {
    Value::Array(ns.iter().map(number).collect())
}

pub fn joined(ns: &[Natural], sep: &str) -> String {
    ns.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn cell_width<'a>(cells: impl IntoIterator<Item = &'a Natural>) -> usize {
    cells
        .into_iter()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1)
}

/// Rows starting at the left margin, cells right-aligned to a common width.
pub fn staircase(rows: &[Vec<Natural>]) -> String {
    let w = cell_width(rows.iter().flatten());
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Rows centered under the apex on a grid of `2 * depth - 1` slots; cell `j`
/// of row `i` sits in slot `depth - 1 - i + 2j`.
pub fn pyramid(rows: &[Vec<Natural>]) -> String {
    let w = cell_width(rows.iter().flatten());
    let depth = rows.len();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let mut line = " ".repeat((depth - 1 - i) * w);
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                line.push_str(&" ".repeat(w));
            }
            line.push_str(&format!("{c:>w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Columns side by side, top-aligned, exhausted columns left blank.
pub fn pataka_table(p: &PatakaMatrix) -> String {
    let cols = p.columns();
    let w = cols
        .iter()
        .flatten()
        .map(|k| k.to_string().len())
        .max()
        .unwrap_or(1);
    let height = cols.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for i in 0..height {
        let line: Vec<String> = cols
            .iter()
            .map(|c| match c.get(i) {
                Some(k) => format!("{:<w$}", k.to_string()),
                None => " ".repeat(w),
            })
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// The reduction table followed by the replay column, bottom to top.
pub fn sankhya_trace(t: &SankhyaTrace) -> String {
    let mut out = format!("{}\n", t.input);
    for (remaining, token) in t.reductions.iter().zip(&t.tokens) {
        out.push_str(&format!("{remaining}\t{token}\n"));
    }
    out.push('\n');
    let mut prev = Natural::from(1u32);
    for (token, value) in t.tokens.iter().rev().zip(&t.replay) {
        let step = match token {
            SankhyaToken::DecrementOne => format!("{prev}*2 = {value}"),
            SankhyaToken::Halve => format!("{prev}^2 = {value}"),
        };
        out.push_str(&format!("{token}\t{step}\n"));
        prev = value.clone();
    }
    out.push('\n');
    out.push_str(&format!("{}\n", t.result));
    out
}
