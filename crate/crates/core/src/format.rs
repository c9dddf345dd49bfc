//! Line-oriented text format for complexes and maps.
//!
//! ```text
//! # a horn
//! dim 1
//! cell 0 0 faces:
//! cell 1 0 faces:
//! cell 2 0 faces:
//! cell 01 1 faces: 1 0
//! cell 12 1 faces: 2 1
//! ```
//!
//! A face token is a cell name or `s<j1>,<j2>,...@<name>` for the degenerate
//! simplex `s_{jk} ... s_{j1} name` with `j1 < j2 < ...`. Maps are written
//! as `map <source-file> <target-file>` followed by one
//! `image <cell> <token>` line per cell of the source. Blank lines and lines
//! starting with `#` are ignored. Names may not contain `@` or whitespace.

use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use crate::complex::{Builder, SimplicialSet};
use crate::error::CoreError;
use crate::map::SimplicialMap;
use crate::simplex::{CellId, Simplex};

fn err(line: usize, msg: impl Into<String>) -> CoreError {
    CoreError::Parse { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.contains('@') && !name.chars().any(char::is_whitespace)
}

pub fn simplex_token(x: &SimplicialSet, s: &Simplex) -> String {
    if s.is_nondegenerate() {
        x.name(s.base)
    } else {
        let word: Vec<String> = s.word().iter().map(usize::to_string).collect();
        format!("s{}@{}", word.join(","), x.name(s.base))
    }
}

fn parse_token(
    line: usize,
    tok: &str,
    lookup: impl Fn(&str) -> Option<CellId>,
) -> Result<Simplex, CoreError> {
    let (word, name) = match tok.split_once('@') {
        Some((w, n)) => {
            let digits = w
                .strip_prefix('s')
                .ok_or_else(|| err(line, format!("bad degenerate token `{tok}`")))?;
            let word = digits
                .split(',')
                .map(|d| d.parse::<usize>().map_err(|_| err(line, format!("bad degeneracy index in `{tok}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            (word, n)
        }
        None => (Vec::new(), tok),
    };
    let base = lookup(name).ok_or_else(|| err(line, format!("unknown cell `{name}`")))?;
    Simplex::degenerate(base, word).ok_or_else(|| err(line, format!("degeneracy word of `{tok}` is not in normal form")))
}

pub fn write_complex(x: &SimplicialSet) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", x.dim().map_or(-1, |d| d as i64)).unwrap();
    for c in x.cells() {
        write!(out, "cell {} {} faces:", x.name(c), c.dim).unwrap();
        for f in x.faces(c) {
            write!(out, " {}", simplex_token(x, f)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialSet, CoreError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing `dim` header"))?;
    let declared: i64 = header
        .strip_prefix("dim ")
        .and_then(|n| n.trim().parse().ok())
        .ok_or_else(|| err(hl, "expected `dim N`"))?;
    let mut b = Builder::new();
    let mut names: HashMap<String, CellId> = HashMap::new();
    let mut last = 0;
    for (ln, l) in lines {
        last = ln;
        let (head, faces) = l.split_once("faces:").ok_or_else(|| err(ln, "expected `cell <name> <dim> faces: ...`"))?;
        let parts: Vec<&str> = head.split_whitespace().collect();
        let [kw, name, dim] = parts[..] else {
            return Err(err(ln, "expected `cell <name> <dim> faces: ...`"));
        };
        if kw != "cell" {
            return Err(err(ln, format!("unknown record `{kw}`")));
        }
        if !valid_name(name) {
            return Err(err(ln, format!("invalid cell name `{name}`")));
        }
        let dim: usize = dim.parse().map_err(|_| err(ln, format!("bad dimension `{dim}`")))?;
        if dim as i64 > declared {
            return Err(err(ln, format!("cell of dimension {dim} exceeds the header")));
        }
        let faces = faces
            .split_whitespace()
            .map(|t| parse_token(ln, t, |n| names.get(n).copied()))
            .collect::<Result<Vec<_>, _>>()?;
        let id = b.push(dim, Some(name.to_owned()), faces).map_err(|e| err(ln, e.to_string()))?;
        names.insert(name.to_owned(), id);
    }
    let x = b.build().map_err(|e| err(last, e.to_string()))?;
    let violations = x.validate();
    if !violations.is_empty() {
        return Err(CoreError::Identities(violations));
    }
    Ok(x)
}

pub fn write_map(f: &SimplicialMap, source_file: &str, target_file: &str) -> String {
    let mut out = format!("map {source_file} {target_file}\n");
    for c in f.source().cells() {
        writeln!(out, "image {} {}", f.source().name(c), simplex_token(f.target(), f.image(c))).unwrap();
    }
    out
}

/// The file names in the `map` header.
pub fn map_header(text: &str) -> Result<(String, String), CoreError> {
    let (ln, l) = content_lines(text).next().ok_or_else(|| err(1, "missing `map` header"))?;
    let parts: Vec<&str> = l.split_whitespace().collect();
    match parts[..] {
        ["map", s, t] => Ok((s.to_owned(), t.to_owned())),
        _ => Err(err(ln, "expected `map <source-file> <target-file>`")),
    }
}

pub fn parse_map(text: &str, source: Arc<SimplicialSet>, target: Arc<SimplicialSet>) -> Result<SimplicialMap, CoreError> {
    map_header(text)?;
    let mut images: Vec<Vec<Option<Simplex>>> =
        (0..source.dim().map_or(0, |d| d + 1)).map(|d| vec![None; source.count(d)]).collect();
    for (ln, l) in content_lines(text).skip(1) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let ["image", cell, tok] = parts[..] else {
            return Err(err(ln, "expected `image <cell> <token>`"));
        };
        let c = source.cell_by_name(cell).ok_or_else(|| err(ln, format!("unknown source cell `{cell}`")))?;
        let s = parse_token(ln, tok, |n| target.cell_by_name(n))?;
        if images[c.dim][c.index].replace(s).is_some() {
            return Err(err(ln, format!("cell `{cell}` given two images")));
        }
    }
    let mut full = Vec::with_capacity(images.len());
    for level in images {
        let mut out = Vec::with_capacity(level.len());
        for (k, s) in level.into_iter().enumerate() {
            match s {
                Some(s) => out.push(s),
                None => return Err(CoreError::NotAMap(format!("no image for a cell at index {k}"))),
            }
        }
        full.push(out);
    }
    SimplicialMap::new(source, target, full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::s_prime;
    use crate::generators::{horn, j_truncation, standard_simplex};

    #[test]
    fn round_trip() {
        for x in [standard_simplex(3), horn(3, 1), j_truncation(3), s_prime(), SimplicialSet::empty()] {
            let text = write_complex(&x);
            assert_eq!(parse_complex(&text).unwrap(), x, "{text}");
        }
    }

    #[test]
    fn degenerate_faces_are_written_with_words() {
        let text = write_complex(&s_prime());
        assert!(text.contains("cell tau 2 faces: s0@x s0@x phi"), "{text}");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "dim 1\ncell a 0 faces:\n\ncell e 1 faces: a b\n";
        match parse_complex(bad) {
            Err(CoreError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let bad = "dim 1\ncell a 0 faces:\ncell e 1 faces: a s1@a\n";
        assert!(matches!(parse_complex(bad), Err(CoreError::Parse { line: 3, .. })));
        assert!(matches!(parse_complex("cell a 0 faces:"), Err(CoreError::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("dim 0\ncell a@b 0 faces:"), Err(CoreError::Parse { line: 2, .. })));
    }

    #[test]
    fn map_round_trip() {
        let x = Arc::new(standard_simplex(1));
        let y = Arc::new(standard_simplex(0));
        let f = SimplicialMap::to_point(x.clone(), y.clone()).unwrap();
        let text = write_map(&f, "a.sset", "b.sset");
        assert_eq!(map_header(&text).unwrap(), ("a.sset".into(), "b.sset".into()));
        assert!(text.contains("image 01 s0@0"));
        assert_eq!(parse_map(&text, x, y).unwrap(), f);
    }
}
