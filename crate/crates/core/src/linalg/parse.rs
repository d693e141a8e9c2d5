//! Plain-text matrix format: one row per line, entries are integers or
//! fractions `a/b` separated by whitespace or commas. Blank lines are skipped.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::{Rat, RatMatrix};

fn parse_entry(tok: &str, line: usize) -> Result<Rat> {
    let bad = |msg: String| Error::Parse { line, msg };
    let parse_int = |s: &str| s.parse::<BigInt>().map_err(|_| bad(format!("bad entry `{tok}`")));
    match tok.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(tok)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad(format!("zero denominator in `{tok}`")));
            }
            Ok(Rat::new(parse_int(n)?, d))
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let row: Vec<Rat> = raw
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_entry(t, line))
            .collect::<Result<_>>()?;
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Comma-separated rows, readable by [`parse_matrix`].
pub fn format_matrix<T: Clone + Display>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    for row in m.rows_iter() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_separators() {
        let m = parse_matrix("1, 2  -3\n\n4/6,0 5\n").unwrap();
        assert_eq!(m.shape(), (2, 3));
        assert_eq!(m[(1, 0)], Rat::new(2.into(), 3.into()));
        assert_eq!(m[(0, 2)], Rat::from_integer((-3).into()));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_matrix("1 2\n3 x\n"),
            Err(Error::Parse { line: 2, msg: "bad entry `x`".into() })
        );
        assert!(matches!(parse_matrix("1 2\n\n3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("1/0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip() {
        let m = parse_matrix("1 -2/3\n0 7").unwrap();
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
}
