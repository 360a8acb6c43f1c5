//! Line-oriented text formats for algebras and lattices.
//!
//! ```text
//! algebra L2
//! size 2
//! elements 0 1
//! op join 2
//! 0 1
//! 1 1
//! ```
//!
//! Lattices use `lattice NAME`, `size N`, optional `elements`, and then
//! either `leq` followed by `N` rows of 0/1 entries or `covers` followed by
//! one `lower upper` pair per line. `#` starts a comment.

use std::fmt::Write as _;

use crate::algebra::{validate_algebra, FiniteAlgebra, RawAlgebra};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum Document {
    Algebra(FiniteAlgebra),
    Lattice(FiniteLattice),
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Self {
        let lines = src
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let body = line.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = body.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.lines.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|(_, t)| t[0])
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(0, |(l, _)| *l)
    }

    fn expect_row(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let last = self.last_line();
        self.next().ok_or_else(|| parse_err(last, format!("unexpected end of input in {what}")))
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{token}`")))
}

fn header<'a>(lines: &mut Lines<'a>, keyword: &str) -> Result<(String, usize, Option<Vec<String>>)> {
    let (line, tokens) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty input"))?;
    if tokens[0] != keyword || tokens.len() != 2 {
        return Err(parse_err(line, format!("expected `{keyword} NAME`")));
    }
    let name = tokens[1].to_string();
    let (line, tokens) = lines.expect_row("header")?;
    if tokens[0] != "size" || tokens.len() != 2 {
        return Err(parse_err(line, "expected `size N`"));
    }
    let size = parse_number(line, tokens[1], "a size")?;
    let mut names = None;
    if lines.peek_keyword() == Some("elements") {
        let (line, tokens) = lines.next().expect("peeked");
        if tokens.len() != size + 1 {
            return Err(parse_err(
                line,
                format!("expected {size} element names, found {}", tokens.len() - 1),
            ));
        }
        names = Some(tokens[1..].iter().map(|s| s.to_string()).collect());
    }
    Ok((name, size, names))
}

fn resolve(line: usize, token: &str, names: Option<&[String]>) -> Result<usize> {
    if let Some(names) = names {
        if let Some(i) = names.iter().position(|n| n == token) {
            return Ok(i);
        }
    }
    token
        .parse()
        .map_err(|_| parse_err(line, format!("unknown element `{token}`")))
}

/// Parses the algebra format and validates the result.
pub fn parse_algebra(src: &str) -> Result<FiniteAlgebra> {
    let mut lines = Lines::new(src);
    let (name, size, names) = header(&mut lines, "algebra")?;
    let mut raw = RawAlgebra {
        name,
        size,
        element_names: names,
        ops: Vec::new(),
    };
    while let Some((line, tokens)) = lines.next() {
        if tokens[0] != "op" || tokens.len() != 3 {
            return Err(parse_err(line, format!("expected `op NAME ARITY`, found `{}`", tokens.join(" "))));
        }
        let op = tokens[1].to_string();
        let arity = parse_number(line, tokens[2], "an arity")?;
        let (rows, width) = match arity {
            0 => (1, 1),
            k => (size.pow(k as u32 - 1), size),
        };
        let mut table = Vec::with_capacity(rows * width);
        for _ in 0..rows {
            let (line, tokens) = lines.expect_row(&format!("table of `{op}`"))?;
            if tokens.len() != width {
                return Err(parse_err(
                    line,
                    format!("table of `{op}`: expected {width} entries, found {}", tokens.len()),
                ));
            }
            for t in tokens {
                table.push(resolve(line, t, raw.element_names.as_deref())?);
            }
        }
        raw.ops.push((op, arity, table));
    }
    validate_algebra(raw)
}

/// Parses the lattice format.
pub fn parse_lattice(src: &str) -> Result<FiniteLattice> {
    let mut lines = Lines::new(src);
    let (name, size, names) = header(&mut lines, "lattice")?;
    let (line, tokens) = lines.expect_row("lattice body")?;
    match tokens[0] {
        "leq" => {
            let mut leq = Vec::with_capacity(size * size);
            for _ in 0..size {
                let (line, tokens) = lines.expect_row("order matrix")?;
                if tokens.len() != size {
                    return Err(parse_err(line, format!("expected {size} entries")));
                }
                for t in tokens {
                    leq.push(match t {
                        "0" => false,
                        "1" => true,
                        other => return Err(parse_err(line, format!("expected 0 or 1, found `{other}`"))),
                    });
                }
            }
            if let Some((line, _)) = lines.next() {
                return Err(parse_err(line, "trailing input after order matrix"));
            }
            FiniteLattice::from_leq(name, size, leq, names)
        }
        "covers" => {
            let mut covers = Vec::new();
            while let Some((line, tokens)) = lines.next() {
                if tokens.len() != 2 {
                    return Err(parse_err(line, "expected `lower upper`"));
                }
                covers.push((
                    resolve(line, tokens[0], names.as_deref())?,
                    resolve(line, tokens[1], names.as_deref())?,
                ));
            }
            FiniteLattice::from_covers(name, size, &covers, names)
        }
        other => Err(parse_err(line, format!("expected `leq` or `covers`, found `{other}`"))),
    }
}

/// Parses either format, dispatching on the first keyword.
pub fn parse_document(src: &str) -> Result<Document> {
    let lines = Lines::new(src);
    match lines.peek_keyword() {
        Some("algebra") => parse_algebra(src).map(Document::Algebra),
        Some("lattice") => parse_lattice(src).map(Document::Lattice),
        Some(other) => Err(parse_err(
            lines.lines[0].0,
            format!("expected `algebra` or `lattice`, found `{other}`"),
        )),
        None => Err(parse_err(0, "empty input")),
    }
}

/// Serializes an algebra; tables use element names when the algebra has them.
pub fn write_algebra(alg: &FiniteAlgebra) -> String {
    let n = alg.size();
    let labels = alg.labels();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", alg.name());
    let _ = writeln!(out, "size {n}");
    if let Some(names) = alg.element_names() {
        let _ = writeln!(out, "elements {}", names.join(" "));
    }
    for op in alg.ops() {
        let _ = writeln!(out, "op {} {}", op.name(), op.arity());
        let width = if op.arity() == 0 { 1 } else { n };
        for row in op.table().chunks(width) {
            let entries: Vec<&str> = row.iter().map(|&x| labels[x].as_str()).collect();
            let _ = writeln!(out, "{}", entries.join(" "));
        }
    }
    out
}

/// Serializes a lattice in the `covers` form.
pub fn write_lattice(lat: &FiniteLattice) -> String {
    let labels: Vec<String> = (0..lat.size()).map(|x| lat.label(x)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "lattice {}", lat.name());
    let _ = writeln!(out, "size {}", lat.size());
    if lat.labels().is_some() {
        let _ = writeln!(out, "elements {}", labels.join(" "));
    }
    let _ = writeln!(out, "covers");
    for (a, b) in lat.hasse_edges() {
        let _ = writeln!(out, "{} {}", labels[a], labels[b]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const L2: &str = "\
# two-element chain
algebra L2
size 2
elements bot top
op join 2
bot top
top top   # row of top
op meet 2
0 0
0 1
op zero 0
bot
";

    #[test]
    fn parses_names_and_indices() {
        let alg = parse_algebra(L2).unwrap();
        assert_eq!(alg.size(), 2);
        assert_eq!(alg.op("join").unwrap().table(), &[0, 1, 1, 1]);
        assert_eq!(alg.op("meet").unwrap().table(), &[0, 0, 0, 1]);
        assert_eq!(alg.op("zero").unwrap().constant(), 0);
    }

    #[test]
    fn round_trip() {
        let alg = parse_algebra(L2).unwrap();
        assert_eq!(parse_algebra(&write_algebra(&alg)).unwrap(), alg);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = L2.replace("top top   # row of top", "top");
        match parse_algebra(&bad).unwrap_err() {
            Error::Parse { line, message } => {
                assert_eq!(line, 7);
                assert!(message.contains("expected 2 entries"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad = L2.replace("0 1\nop zero", "0 q\nop zero");
        assert!(matches!(parse_algebra(&bad), Err(Error::Parse { line: 10, .. })));
    }

    #[test]
    fn out_of_range_entries_are_validation_errors() {
        let src = "algebra x\nsize 2\nop f 1\n0 7\n";
        assert!(matches!(
            parse_algebra(src),
            Err(Error::EntryOutOfRange { index: 1, value: 7, .. })
        ));
    }

    #[test]
    fn ternary_tables_use_row_major_order() {
        let mut src = String::from("algebra m\nsize 2\nop maj 3\n");
        for a in 0..2 {
            for b in 0..2 {
                let row: Vec<String> = (0..2)
                    .map(|c| usize::from(a + b + c >= 2).to_string())
                    .collect();
                src.push_str(&row.join(" "));
                src.push('\n');
            }
        }
        let alg = parse_algebra(&src).unwrap();
        assert_eq!(alg.op("maj").unwrap().apply(&[1, 0, 1]), 1);
        assert_eq!(alg.op("maj").unwrap().apply(&[1, 0, 0]), 0);
    }

    #[test]
    fn lattice_formats_agree() {
        let covers = "lattice sq\nsize 4\nelements 0 a b 1\ncovers\n0 a\n0 b\na 1\nb 1\n";
        let leq = "lattice sq\nsize 4\nelements 0 a b 1\nleq\n1 1 1 1\n0 1 0 1\n0 0 1 1\n0 0 0 1\n";
        let x = parse_lattice(covers).unwrap();
        let y = parse_lattice(leq).unwrap();
        assert_eq!(x, y);
        assert_eq!(parse_lattice(&write_lattice(&x)).unwrap(), x);
        assert!(matches!(parse_document(covers).unwrap(), Document::Lattice(_)));
        assert!(parse_document("group g\n").is_err());
    }
}
