//! Text formats.
//!
//! `.dc` files hold difference cycles:
//!
//! ```text
//! # comment
//! n=12 d=4
//! 1 1 1 1 8
//! 2 2 3 2 3
//! ```
//!
//! `.fct` files hold one facet per line as a string of vertex labels
//! (`0`-`9`, `a`, `b`, ...), e.g. `01234` or `ab012`.

use std::collections::BTreeSet;

use super::{DifferenceCycle, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Parameters declared in a `.dc` header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleHeader {
    pub n: usize,
    pub d: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<CycleHeader> {
    let mut n = None;
    let mut d = None;
    for tok in line.split_whitespace() {
        let (key, value) = tok.split_once('=').ok_or(Error::MissingHeader)?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Syntax { line: line_no, msg: format!("bad header value {value:?}") })?;
        match key {
            "n" => n = Some(value),
            "d" => d = Some(value),
            _ => return Err(Error::Syntax { line: line_no, msg: format!("unknown header key {key:?}") }),
        }
    }
    match (n, d) {
        (Some(n), Some(d)) if n > d && d >= 1 => Ok(CycleHeader { n, d }),
        (Some(_), Some(_)) => Err(Error::Syntax { line: line_no, msg: "header needs n > d >= 1".into() }),
        _ => Err(Error::MissingHeader),
    }
}

/// Parses a `.dc` document. Cycles come back canonicalized, in file order.
pub fn parse_cycles(text: &str) -> Result<(CycleHeader, Vec<DifferenceCycle>)> {
    let mut lines = content_lines(text);
    let (hline, htext) = lines.next().ok_or(Error::EmptyInput)?;
    let header = parse_header(hline, htext)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (line, body) in lines {
        let mut entries = Vec::new();
        for tok in body.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Syntax { line, msg: format!("bad entry {tok:?}") })?;
            if v <= 0 {
                return Err(Error::NonPositiveEntry { line, value: v });
            }
            entries.push(v as u32);
        }
        if entries.len() != header.d + 1 {
            return Err(Error::WrongEntryCount { line, expected: header.d + 1, found: entries.len() });
        }
        let sum: i64 = entries.iter().map(|&e| e as i64).sum();
        if sum != header.n as i64 {
            return Err(Error::SumMismatch { line, sum, n: header.n });
        }
        let cycle = DifferenceCycle::new(entries, header.n).map_err(|e| with_line(e, line))?;
        if !seen.insert(cycle.clone()) {
            return Err(Error::DuplicateCycle { line, cycle: cycle.to_line() });
        }
        out.push(cycle);
    }
    Ok((header, out))
}

fn with_line(e: Error, line: usize) -> Error {
    match e {
        Error::SumMismatch { sum, n, .. } => Error::SumMismatch { line, sum, n },
        Error::NonPositiveEntry { value, .. } => Error::NonPositiveEntry { line, value },
        other => other,
    }
}

/// Serializes cycles as a `.dc` document.
pub fn write_cycles(header: CycleHeader, cycles: &[DifferenceCycle]) -> String {
    let mut s = format!("n={} d={}\n", header.n, header.d);
    for c in cycles {
        s.push_str(&c.to_line());
        s.push('\n');
    }
    s
}

/// Parses a `.fct` document; `n` is the vertex universe size.
pub fn parse_facets(text: &str, n: usize) -> Result<Vec<Simplex>> {
    let mut out = Vec::new();
    for (line, body) in content_lines(text) {
        for tok in body.split_whitespace() {
            let s = Simplex::parse(tok).map_err(|e| match e {
                Error::Syntax { msg, .. } => Error::Syntax { line, msg },
                other => other,
            })?;
            if let Some(v) = s.max_vertex().filter(|&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(out)
}

/// Serializes the facets of a complex, one sorted label string per line.
pub fn write_facets(c: &SimplicialComplex) -> String {
    let mut s = String::new();
    for f in c.facets() {
        s.push_str(&f.label());
        s.push('\n');
    }
    s
}

/// Infers the universe size of a `.fct` document from its largest label.
pub fn facet_universe(text: &str) -> Result<usize> {
    let max = parse_facets(text, super::MAX_VERTICES)?
        .iter()
        .filter_map(|f| f.max_vertex())
        .max()
        .unwrap_or(0);
    Ok(max as usize + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_notation() {
        let (h, cs) = parse_cycles("# candidate\nn=12 d=4\n1 1 1 1 8\n2 2 3 2 3 # trailing\n").unwrap();
        assert_eq!(h, CycleHeader { n: 12, d: 4 });
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].entries(), &[1, 1, 1, 1, 8]);
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(matches!(parse_cycles("n=12 d=4\n1 1 1 1 7\n"), Err(Error::SumMismatch { line: 2, sum: 11, n: 12 })));
        assert!(matches!(parse_cycles("n=12 d=4\n1 1 1 1 8\n8 1 1 1 1\n"), Err(Error::DuplicateCycle { line: 3, .. })));
        assert!(matches!(parse_cycles("n=12 d=4\n0 1 2 1 8\n"), Err(Error::NonPositiveEntry { value: 0, .. })));
        assert!(matches!(parse_cycles("n=12 d=4\n1 1 10\n"), Err(Error::WrongEntryCount { .. })));
        assert_eq!(parse_cycles(""), Err(Error::EmptyInput));
        assert_eq!(parse_cycles("# only a comment\n"), Err(Error::EmptyInput));
        assert_eq!(parse_cycles("1 1 1 1 8\n"), Err(Error::MissingHeader));
    }

    #[test]
    fn facet_file_round_trip() {
        let fs = parse_facets("01234\nab012\n", 12).unwrap();
        let c = SimplicialComplex::from_facets(12, fs).unwrap();
        assert_eq!(write_facets(&c), "01234\n012ab\n");
        assert!(matches!(parse_facets("0123c\n", 12), Err(Error::VertexOutOfRange { vertex: 12, .. })));
        assert_eq!(facet_universe("01234\n0123b\n").unwrap(), 12);
    }
}
