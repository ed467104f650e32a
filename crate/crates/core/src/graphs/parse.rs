//! Edge-list and DIMACS `.col` input.
//!
//! The native format is a header `p <n>` followed by `e <u> <v>` lines with
//! 0-based vertices. A DIMACS header `p edge <n> <m>` switches to 1-based
//! vertices. Blank lines and `c` comment lines are ignored in both.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("missing `p` header before edges")]
    MissingHeader,
    #[error("duplicate `p` header")]
    DuplicateHeader,
    #[error("vertex {0} out of range")]
    OutOfRange(i64),
    #[error("loop at vertex {0}")]
    Loop(i64),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, bool)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let malformed = || err(lineno, ParseErrorKind::Malformed(line.to_string()));
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(lineno, ParseErrorKind::DuplicateHeader));
                }
                let (n, dimacs) = match toks.len() {
                    2 => (toks[1].parse::<usize>().map_err(|_| malformed())?, false),
                    4 => (toks[2].parse::<usize>().map_err(|_| malformed())?, true),
                    _ => return Err(malformed()),
                };
                header = Some((n, dimacs));
            }
            "e" => {
                let (n, dimacs) = header.ok_or_else(|| err(lineno, ParseErrorKind::MissingHeader))?;
                if toks.len() != 3 {
                    return Err(malformed());
                }
                let u: i64 = toks[1].parse().map_err(|_| malformed())?;
                let v: i64 = toks[2].parse().map_err(|_| malformed())?;
                let shift = i64::from(dimacs);
                for x in [u, v] {
                    if x - shift < 0 || x - shift >= n as i64 {
                        return Err(err(lineno, ParseErrorKind::OutOfRange(x)));
                    }
                }
                if u == v {
                    return Err(err(lineno, ParseErrorKind::Loop(u)));
                }
                edges.push(((u - shift) as usize, (v - shift) as usize));
            }
            _ => return Err(malformed()),
        }
    }
    let (n, _) = header.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    Ok(Graph::from_edges(n, edges).expect("validated above"))
}
