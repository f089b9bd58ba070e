//! Text form of structure constants.
//!
//! ```text
//! dim 3
//! names X1 X2 X3
//! bracket 1 2 3 1
//! ```
//!
//! Indices are 1-based with `i < j`; each `bracket i j k c` line sets
//! `[x_i, x_j] = ... + c x_k`. Blank lines and `#` comments are ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::linalg::rational::parse_rational_at;

use super::LieAlgebra;

pub fn parse_structure_constants(text: &str) -> Result<LieAlgebra> {
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "dim" => {
                if dim.is_some() {
                    return Err(Error::parse(ln, "repeated `dim` line"));
                }
                if toks.len() != 2 {
                    return Err(Error::parse(ln, "expected `dim <n>`"));
                }
                dim = Some(toks[1].parse().map_err(|_| Error::parse(ln, "invalid dimension"))?);
            }
            "names" => {
                let n = dim.ok_or_else(|| Error::parse(ln, "`names` before `dim`"))?;
                if toks.len() != n + 1 {
                    return Err(Error::parse(ln, format!("expected {n} names")));
                }
                names = Some(toks[1..].iter().map(|s| s.to_string()).collect());
            }
            "bracket" => {
                let n = dim.ok_or_else(|| Error::parse(ln, "`bracket` before `dim`"))?;
                if toks.len() != 5 {
                    return Err(Error::parse(ln, "expected `bracket <i> <j> <k> <c>`"));
                }
                let idx = |t: &str| -> Result<usize> {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::parse(ln, format!("invalid index `{t}`")))?;
                    if v == 0 || v > n {
                        return Err(Error::parse(ln, format!("index {v} outside 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let (i, j, k) = (idx(toks[1])?, idx(toks[2])?, idx(toks[3])?);
                if i >= j {
                    return Err(Error::parse(ln, "bracket indices must satisfy i < j"));
                }
                if !seen.insert((i, j, k)) {
                    return Err(Error::parse(ln, "duplicate bracket entry"));
                }
                entries.push((i, j, k, parse_rational_at(toks[4], ln)?));
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    let dim = dim.ok_or_else(|| Error::parse(1, "missing `dim` line"))?;
    let g = LieAlgebra::from_constants(dim, entries)?;
    match names {
        Some(n) => g.with_names(n),
        None => Ok(g),
    }
}

pub fn format_structure_constants(g: &LieAlgebra) -> String {
    let mut s = format!("dim {}\n", g.dim());
    if g.dim() > 0 {
        writeln!(s, "names {}", g.names().join(" ")).unwrap();
    }
    for (i, j, k, c) in g.constants() {
        writeln!(s, "bracket {} {} {} {}", i + 1, j + 1, k + 1, c).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "dim 3\nnames e f h\nbracket 1 2 3 -1/2\n";
        let g = parse_structure_constants(text).unwrap();
        assert_eq!(format_structure_constants(&g), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_structure_constants("dim 2\n\nbracket 2 1 1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_structure_constants("dim 2\nbracket 1 2 1 1\nbracket 1 2 1 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(parse_structure_constants("bracket 1 2 1 1").is_err());
    }
}
