//! Text formats for quandle tables and topologies.
//!
//! Quandle file:
//!
//! ```text
//! # comment
//! 3
//! a c b
//! c b a
//! b a c
//! ```
//!
//! Tokens are either all 0-based integers or all letters `a`–`h`.
//!
//! Topology file: the order, then a tag line `preorder` or `opens`. A
//! `preorder` body has `n` lines of `n` characters `0`/`1` (row `x`, column
//! `y` is `x ≤ y`). An `opens` body lists one open set per line as
//! comma-separated letters, `{}` for the empty set.

use thiserror::Error;

use crate::quandle::{QuandleError, QuandleTable};
use crate::set::{ElemSet, MAX_ORDER};
use crate::topology::{OpenSetFamily, Preorder, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Letter name of element `x` (`0 → a`).
pub fn letter(x: usize) -> char {
    if x < 26 {
        (b'a' + x as u8) as char
    } else {
        '?'
    }
}

fn letter_index(c: char) -> Option<usize> {
    c.is_ascii_lowercase()
        .then(|| (c as u8 - b'a') as usize)
        .filter(|&x| x < MAX_ORDER)
}

/// `aaa/cbb/bcc` style single-line rendering.
pub fn compact_rows(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|&x| letter(x)).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

/// Non-comment lines with their 1-based line numbers; trailing whitespace trimmed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
}

fn parse_order<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<usize, ParseError> {
    let (no, line) = lines
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::UnexpectedEof("missing order line".into()))?;
    let trimmed = line.trim();
    let col = line.len() - line.trim_start().len() + 1;
    let n: usize = trimmed
        .parse()
        .map_err(|_| syntax(no, col, format!("expected an order, found `{trimmed}`")))?;
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(syntax(no, col, format!("order {n} outside 1..={MAX_ORDER}")));
    }
    Ok(n)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TokenKind {
    Letter,
    Number,
}

/// Parses a single quandle table.
pub fn parse_quandle(text: &str) -> Result<QuandleTable, ParseError> {
    let mut lines = content_lines(text);
    let table = parse_quandle_body(&mut lines)?;
    if let Some((no, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        let col = l.len() - l.trim_start().len() + 1;
        return Err(syntax(no, col, "trailing content after table"));
    }
    Ok(table)
}

fn parse_quandle_body<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<QuandleTable, ParseError> {
    let n = parse_order(lines)?;
    let mut kind: Option<TokenKind> = None;
    let mut rows = Vec::with_capacity(n);
    while rows.len() < n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| ParseError::UnexpectedEof(format!("expected {n} rows")))?;
        if line.trim().is_empty() {
            return Err(syntax(no, 1, format!("expected row {} of {n}", rows.len() + 1)));
        }
        let mut row = Vec::with_capacity(n);
        for (start, tok) in tokens(line) {
            let col = start + 1;
            let (value, k) = if let Ok(v) = tok.parse::<usize>() {
                (v, TokenKind::Number)
            } else {
                let mut chars = tok.chars();
                match (chars.next().and_then(letter_index), chars.next()) {
                    (Some(v), None) => (v, TokenKind::Letter),
                    _ => return Err(syntax(no, col, format!("invalid token `{tok}`"))),
                }
            };
            match kind {
                None => kind = Some(k),
                Some(existing) if existing != k => {
                    return Err(syntax(no, col, "mixed letter and integer tokens"))
                }
                _ => {}
            }
            if value >= n {
                return Err(syntax(no, col, format!("token `{tok}` outside order {n}")));
            }
            if row.len() == n {
                return Err(syntax(no, col, format!("row has more than {n} entries")));
            }
            row.push(value);
        }
        if row.len() < n {
            return Err(syntax(
                no,
                line.len() + 1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    Ok(QuandleTable::new(&rows)?)
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skipped = rest.len() - rest.trim_start().len();
        rest = &rest[skipped..];
        offset += skipped;
        if rest.is_empty() {
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = (offset, &rest[..len]);
        rest = &rest[len..];
        offset += len;
        Some(tok)
    })
}

/// Parses a stream of quandle tables separated by blank lines or comments.
pub fn parse_quandle_list(text: &str) -> Result<Vec<QuandleTable>, ParseError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    loop {
        while matches!(lines.peek(), Some((_, l)) if l.trim().is_empty()) {
            lines.next();
        }
        if lines.peek().is_none() {
            return Ok(out);
        }
        out.push(parse_quandle_body(&mut lines)?);
    }
}

/// Writes a table in the file format, with letters.
pub fn write_quandle(q: &QuandleTable) -> String {
    let mut s = format!("{}\n", q.order());
    for row in q.rows() {
        let letters: Vec<String> = row.iter().map(|&x| letter(x).to_string()).collect();
        s.push_str(&letters.join(" "));
        s.push('\n');
    }
    s
}

/// Parses a topology file into its preorder.
pub fn parse_topology(text: &str) -> Result<Preorder, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_order(&mut lines)?;
    let (no, tag) = lines
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::UnexpectedEof("missing format tag".into()))?;
    match tag.trim() {
        "preorder" => {
            let mut rows = Vec::with_capacity(n);
            for (no, line) in lines.by_ref() {
                if rows.len() == n {
                    if line.trim().is_empty() {
                        continue;
                    }
                    return Err(syntax(no, 1, "trailing content after relation"));
                }
                let line = line.trim();
                if line.chars().count() != n {
                    return Err(syntax(
                        no,
                        1,
                        format!("expected {n} characters, found {}", line.chars().count()),
                    ));
                }
                let mut row = Vec::with_capacity(n);
                for (c, ch) in line.chars().enumerate() {
                    match ch {
                        '0' => row.push(false),
                        '1' => row.push(true),
                        other => {
                            return Err(syntax(no, c + 1, format!("expected 0 or 1, found `{other}`")))
                        }
                    }
                }
                rows.push(row);
            }
            if rows.len() < n {
                return Err(ParseError::UnexpectedEof(format!(
                    "expected {n} relation rows, found {}",
                    rows.len()
                )));
            }
            Ok(Preorder::new(&rows)?)
        }
        "opens" => {
            let mut opens = Vec::new();
            for (no, line) in lines {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                opens.push(parse_open_set(no, line, n)?);
            }
            let family = OpenSetFamily::new(n, opens)?;
            Ok(Preorder::from_topology(&family))
        }
        other => Err(syntax(
            no,
            1,
            format!("expected `preorder` or `opens`, found `{other}`"),
        )),
    }
}

fn parse_open_set(no: usize, line: &str, n: usize) -> Result<ElemSet, ParseError> {
    let body = line
        .strip_prefix('{')
        .and_then(|l| l.strip_suffix('}'))
        .unwrap_or(line);
    let offset = if body.len() == line.len() { 0 } else { 1 };
    let mut set = ElemSet::EMPTY;
    if body.trim().is_empty() {
        return Ok(set);
    }
    let mut pos = offset;
    for part in body.split(',') {
        let tok = part.trim();
        let col = pos + part.len() - part.trim_start().len() + 1;
        match letter_index_single(tok) {
            Some(x) if x < n => set.insert(x),
            _ => return Err(syntax(no, col, format!("invalid element `{tok}`"))),
        }
        pos += part.len() + 1;
    }
    Ok(set)
}

fn letter_index_single(tok: &str) -> Option<usize> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => letter_index(c),
        _ => None,
    }
}

/// Writes a preorder as a `preorder` topology file.
pub fn write_preorder(p: &Preorder) -> String {
    let mut s = format!("{}\npreorder\n", p.order());
    for row in p.matrix_strings() {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

/// Writes the open sets of a preorder as an `opens` topology file.
pub fn write_opens(p: &Preorder) -> String {
    let mut s = format!("{}\nopens\n", p.order());
    for open in OpenSetFamily::from_preorder(p).opens() {
        if open.is_empty() {
            s.push_str("{}\n");
        } else {
            let letters: Vec<String> = open.iter().map(|x| letter(x).to_string()).collect();
            s.push_str(&letters.join(","));
            s.push('\n');
        }
    }
    s
}
