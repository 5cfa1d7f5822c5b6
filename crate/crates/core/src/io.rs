//! Text formats for loop tables, triple systems and reports.
//!
//! Loop table:
//!
//! ```text
//! # optional comment lines
//! k
//! k lines of k whitespace-separated 1-based entries
//! ```
//!
//! Triple system: the point count `v` on the first line, then one block of
//! three 1-based points per line. Blank lines and `#` comments are skipped
//! anywhere, `\r\n` is accepted. Output is always canonical: no comments,
//! single spaces, `\n` line endings.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::sts::TripleSystem;
use crate::table::LoopTable;

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, line)| (i + 1, line.strip_suffix('\r').unwrap_or(line).trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_tokens<T: std::str::FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| syntax(line_no, format!("not an integer: {tok:?}")))
        })
        .collect()
}

fn parse_header(lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>, what: &str) -> Result<usize> {
    let (line_no, line) = lines.next().ok_or_else(|| syntax(1, format!("missing {what}")))?;
    match parse_tokens::<usize>(line_no, line.as_ref())?.as_slice() {
        [n] => Ok(*n),
        _ => Err(syntax(line_no, format!("expected a single {what}"))),
    }
}

pub fn parse_loop(text: &str) -> Result<LoopTable> {
    let mut lines = content_lines(text);
    let order = parse_header(&mut lines, "order")?;
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(order);
    let mut last_line = 1;
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(syntax(line_no, format!("unexpected content after {order} rows")));
        }
        rows.push(parse_tokens(line_no, line)?);
        last_line = line_no;
    }
    if rows.len() < order {
        return Err(syntax(
            last_line + 1,
            format!("expected {order} rows, found {}", rows.len()),
        ));
    }
    LoopTable::validate(&rows)
}

pub fn write_loop(l: &LoopTable) -> String {
    let mut out = format!("{}\n", l.order());
    for row in l.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_sts(text: &str) -> Result<TripleSystem> {
    let mut lines = content_lines(text);
    let v = parse_header(&mut lines, "point count")?;
    let blocks = lines
        .map(|(line_no, line)| parse_tokens::<usize>(line_no, line))
        .collect::<Result<Vec<_>>>()?;
    TripleSystem::validate(v, &blocks)
}

pub fn write_sts(t: &TripleSystem) -> String {
    let mut out = format!("{}\n", t.points());
    for [a, b, c] in t.blocks() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// `key = value` and `witness label: (a,b,c)` lines.
    Text,
    /// Tab-separated, one record per line.
    Machine,
}

/// An ordered key/value report with labelled witness tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportDocument {
    subject: String,
    properties: Vec<(String, String)>,
    witnesses: Vec<(String, Vec<Vec<usize>>)>,
}

impl ReportDocument {
    pub fn new(subject: impl Into<String>) -> Self {
        ReportDocument {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    /// Sets `key`, replacing any earlier value so keys stay unique.
    pub fn set(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        let value = value.to_string();
        match self.properties.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.properties.push((key.to_string(), value)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.properties.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn properties(&self) -> &[(String, String)] {
        &self.properties
    }

    pub fn witness(&mut self, label: &str, tuples: Vec<Vec<usize>>) -> &mut Self {
        self.witnesses.push((label.to_string(), tuples));
        self
    }

    pub fn witnesses(&self) -> &[(String, Vec<Vec<usize>>)] {
        &self.witnesses
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn join_tuple(t: &[usize]) -> String {
    t.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

/// Renders a report. The subject, when non-empty, comes first as the `subject` key.
pub fn write_report(r: &ReportDocument, mode: ReportMode) -> String {
    let mut out = String::new();
    let subject = (!r.subject.is_empty()).then(|| ("subject".to_string(), r.subject.clone()));
    for (k, v) in subject.iter().chain(r.properties.iter()) {
        let _ = match mode {
            ReportMode::Text => writeln!(out, "{} = {}", escape(k), escape(v)),
            ReportMode::Machine => writeln!(out, "{}\t{}", escape(k), escape(v)),
        };
    }
    for (label, tuples) in &r.witnesses {
        let _ = match mode {
            ReportMode::Text => {
                let parts: Vec<String> = tuples.iter().map(|t| format!("({})", join_tuple(t))).collect();
                writeln!(out, "witness {}: {}", escape(label), parts.join(" "))
            }
            ReportMode::Machine => {
                let parts: Vec<String> = tuples.iter().map(|t| join_tuple(t)).collect();
                writeln!(out, "witness\t{}\t{}", escape(label), parts.join("\t"))
            }
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, groups};

    #[test]
    fn parses_fixture() {
        let l = parse_loop(fixtures::STEINER10_TEXT).unwrap();
        assert_eq!(l.order(), 10);
        assert_eq!(l.mul(5, 8).unwrap(), 2);
        assert_eq!(l.mul(2, 5).unwrap(), 8);
    }

    #[test]
    fn trivial_loop() {
        assert_eq!(parse_loop("1\n1\n").unwrap(), groups::trivial());
    }

    #[test]
    fn loop_errors() {
        assert!(matches!(
            parse_loop("2\n1 2\n2 3\n"),
            Err(Error::EntryOutOfRange { value: 3, .. })
        ));
        assert!(matches!(parse_loop("2\n1 2\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(
            parse_loop("2\n1 2\n2 x\n"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_loop("2 2\n1 2\n2 1\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_loop("2\n1 2\n2 1\n1 2\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(parse_loop("# nothing\n"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_loop("2\n1 2\n2\n"),
            Err(Error::NotSquare { row: 2, .. })
        ));
    }

    #[test]
    fn tolerant_input_canonical_output() {
        let l = parse_loop("# c2\r\n\r\n 2 \r\n1   2\r\n# mid\r\n2\t1\r\n").unwrap();
        assert_eq!(write_loop(&l), "2\n1 2\n2 1\n");
    }

    #[test]
    fn sts_text() {
        let t = parse_sts("3\n1 2 3\n").unwrap();
        assert_eq!(t.blocks(), &[[1, 2, 3]]);
        assert_eq!(write_sts(&t), "3\n1 2 3\n");
        assert_eq!(fixtures::fano().blocks().len(), 7);
        assert_eq!(parse_sts("7\n1 2 3\n"), Err(Error::PairUncovered(1, 4)));
        assert!(matches!(parse_sts("3\n3 2 -1\n"), Err(Error::Syntax { line: 2, .. })));
        // canonical ordering of output
        assert_eq!(write_sts(&parse_sts("3\n3 1 2\n").unwrap()), "3\n1 2 3\n");
    }

    #[test]
    fn report_modes() {
        let mut r = ReportDocument::new("");
        r.set("is_steiner", true);
        assert_eq!(write_report(&r, ReportMode::Text), "is_steiner = true\n");
        assert_eq!(write_report(&r, ReportMode::Machine), "is_steiner\ttrue\n");

        let mut r = ReportDocument::new("bose n=7");
        r.set("mp_status", "MP").set("mp_status", "FAILS");
        r.witness("mp", vec![vec![9, 2, 3], vec![2, 3, 4]]);
        assert_eq!(
            write_report(&r, ReportMode::Text),
            "subject = bose n=7\nmp_status = FAILS\nwitness mp: (9,2,3) (2,3,4)\n"
        );
        assert_eq!(
            write_report(&r, ReportMode::Machine),
            "subject\tbose n=7\nmp_status\tFAILS\nwitness\tmp\t9,2,3\t2,3,4\n"
        );
    }

    #[test]
    fn values_are_escaped() {
        let mut r = ReportDocument::new("");
        r.set("path", "a\tb\nc\\d");
        assert_eq!(write_report(&r, ReportMode::Machine), "path\ta\\tb\\nc\\\\d\n");
    }
}
