//! The `pmap` text format.
//!
//! ```text
//! pmap 1
//! V 2
//! E 2
//! sigma 0: 0 2
//! sigma 1: 1 3
//! ```
//!
//! Lines starting with `#` and blank lines are ignored wherever they occur.
//! Endpoints are not written; they follow from which vertex lists each dart.

use std::fmt::Write as _;

use thiserror::Error;

use crate::map::{RotationError, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{0}`")]
    Expected(&'static str),
    #[error("unsupported pmap version {0}")]
    UnsupportedVersion(String),
    #[error("`{0}` is not a non-negative integer")]
    NotAnInteger(String),
    #[error("counts are inconsistent: {0}")]
    CountMismatch(String),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} is listed twice")]
    VertexRepeated(usize),
    #[error("vertex {0} is never listed")]
    VertexMissing(usize),
    #[error(transparent)]
    Rotation(#[from] RotationError),
}

fn integer(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError { line, kind: ParseErrorKind::NotAnInteger(token.to_string()) })
}

fn keyed(content: &str, key: &'static str, line: usize) -> Result<usize, ParseError> {
    let mut tokens = content.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(k), Some(value), None) if k == key => integer(value, line),
        _ => Err(ParseError {
            line,
            kind: ParseErrorKind::Expected(if key == "V" { "V <n>" } else { "E <m>" }),
        }),
    }
}

pub fn parse(text: &str) -> Result<RotationSystem, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let eof = text.lines().count() + 1;

    let (line, header) = lines
        .next()
        .ok_or(ParseError { line: eof, kind: ParseErrorKind::Expected("pmap 1") })?;
    match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["pmap", "1"] => {}
        ["pmap", v] => {
            return Err(ParseError { line, kind: ParseErrorKind::UnsupportedVersion(v.into()) })
        }
        _ => return Err(ParseError { line, kind: ParseErrorKind::Expected("pmap 1") }),
    }

    let (line, content) =
        lines.next().ok_or(ParseError { line: eof, kind: ParseErrorKind::Expected("V <n>") })?;
    let n = keyed(content, "V", line)?;
    let (line, content) =
        lines.next().ok_or(ParseError { line: eof, kind: ParseErrorKind::Expected("E <m>") })?;
    let m = keyed(content, "E", line)?;
    if n == 0 || m == 0 {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::CountMismatch("V and E must be positive".into()),
        });
    }

    let mut cycles: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut seen_dart = vec![false; 2 * m];
    let mut last_line = line;
    for (line, content) in lines {
        last_line = line;
        let rest = content
            .strip_prefix("sigma")
            .and_then(|r| r.split_once(':'))
            .ok_or(ParseError { line, kind: ParseErrorKind::Expected("sigma <v>: <darts>") })?;
        let v = integer(rest.0.trim(), line)?;
        if v >= n {
            let kind = if cycles.iter().all(Option::is_some) {
                ParseErrorKind::CountMismatch(format!("more than {n} vertex lines"))
            } else {
                ParseErrorKind::VertexOutOfRange(v)
            };
            return Err(ParseError { line, kind });
        }
        if cycles[v].is_some() {
            return Err(ParseError { line, kind: ParseErrorKind::VertexRepeated(v) });
        }
        let darts = rest
            .1
            .split_whitespace()
            .map(|t| integer(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        if darts.is_empty() {
            return Err(ParseError { line, kind: RotationError::EmptyVertex(v).into() });
        }
        for &d in &darts {
            if d >= 2 * m {
                return Err(ParseError { line, kind: RotationError::DartOutOfRange(d).into() });
            }
            if std::mem::replace(&mut seen_dart[d], true) {
                return Err(ParseError { line, kind: RotationError::DartRepeated(d).into() });
            }
        }
        cycles[v] = Some(darts);
    }

    let cycles = cycles
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or(ParseError { line: last_line, kind: ParseErrorKind::VertexMissing(v) })
        })
        .collect::<Result<Vec<_>, _>>()?;
    RotationSystem::from_cycles(m, &cycles)
        .map_err(|e| ParseError { line: last_line, kind: e.into() })
}

/// Canonical text: vertices ascending, each rotation starting at its
/// smallest dart.
pub fn serialize(map: &RotationSystem) -> String {
    let mut out = format!("pmap 1\nV {}\nE {}\n", map.n_vertices(), map.n_edges());
    for (v, cycle) in map.rotations().iter().enumerate() {
        let _ = write!(out, "sigma {v}:");
        for d in cycle {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const D2: &str = "pmap 1\nV 2\nE 2\nsigma 0: 0 2\nsigma 1: 1 3\n";

    #[test]
    fn parses_dipole() {
        let m = parse(D2).unwrap();
        assert_eq!((m.n_vertices(), m.n_edges()), (2, 2));
        assert_eq!(serialize(&m), D2);
    }

    #[test]
    fn parses_triangle() {
        let m = parse("pmap 1\nV 3\nE 3\nsigma 0: 0 5\nsigma 1: 1 2\nsigma 2: 3 4\n").unwrap();
        assert_eq!((m.n_vertices(), m.n_edges()), (3, 3));
        let text = serialize(&m);
        let order: Vec<&str> = text.lines().skip(3).map(|l| &l[..8]).collect();
        assert_eq!(order, ["sigma 0:", "sigma 1:", "sigma 2:"]);
    }

    #[test]
    fn comments_blank_lines_and_rotation_offset() {
        let text = "# a dipole\npmap 1\n\nV 2\nE 2\n# rotations\nsigma 1: 3 1\nsigma 0: 2 0\n";
        assert_eq!(serialize(&parse(text).unwrap()), D2);
    }

    #[test]
    fn repeated_dart() {
        let err = parse("pmap 1\nV 3\nE 3\nsigma 0: 0 4\nsigma 1: 1 2\nsigma 2: 3 4 5\n").unwrap_err();
        assert_eq!(err, ParseError { line: 6, kind: RotationError::DartRepeated(4).into() });
    }

    #[test]
    fn missing_dart() {
        let err = parse("pmap 1\nV 2\nE 2\nsigma 0: 0 2\nsigma 1: 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Rotation(RotationError::DartMissing(3)));
    }

    #[test]
    fn non_integer_token() {
        let err = parse("pmap 1\nV 2\nE x\n").unwrap_err();
        assert_eq!(err, ParseError { line: 3, kind: ParseErrorKind::NotAnInteger("x".into()) });
        let err = parse("pmap 1\nV 2\nE 2\nsigma 0: 0 two\nsigma 1: 1 3\n").unwrap_err();
        assert_eq!(err.line, 4);
    }

    #[test]
    fn count_errors() {
        let err = parse("pmap 1\nV 1\nE 1\nsigma 0: 0\nsigma 1: 1\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::CountMismatch(_)));
        assert_eq!(err.line, 5);
        let err = parse("pmap 1\nV 3\nE 2\nsigma 0: 0 2\nsigma 1: 1 3\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::VertexMissing(2));
        let err = parse("pmap 2\nV 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnsupportedVersion("2".into()));
        let err = parse("").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Expected("pmap 1"));
    }
}
