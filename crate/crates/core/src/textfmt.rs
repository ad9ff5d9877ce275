//! Plain-text generator matrix format: a header line `n k`, then `k` lines
//! of `n` characters from `{0,1}`.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Parsed matrix before any rank check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedMatrix {
    pub n: usize,
    pub k: usize,
    pub matrix: BitMatrix,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<ParsedMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut fields = header.split_whitespace();
    let mut num = |name: &str| -> Result<usize> {
        let f = fields
            .next()
            .ok_or_else(|| parse_err(hl + 1, header.len() + 1, format!("missing {name}")))?;
        f.parse::<usize>()
            .map_err(|_| parse_err(hl + 1, header.find(f).unwrap_or(0) + 1, format!("{name} is not a number")))
    };
    let n = num("n")?;
    let k = num("k")?;
    if fields.next().is_some() {
        return Err(parse_err(hl + 1, 1, "header must be exactly `n k`"));
    }
    let mut m = BitMatrix::zeros(k, n);
    let mut row = 0;
    for (ln, line) in lines {
        let line = line.trim_end();
        if row == k {
            return Err(parse_err(ln + 1, 1, format!("more than {k} rows")));
        }
        let mut col = 0;
        for (ci, ch) in line.chars().enumerate() {
            match ch {
                '0' | '1' => {
                    if col == n {
                        return Err(parse_err(ln + 1, ci + 1, format!("row longer than {n}")));
                    }
                    m.set(row, col, ch == '1');
                    col += 1;
                }
                _ => return Err(parse_err(ln + 1, ci + 1, format!("unexpected character {ch:?}"))),
            }
        }
        if col != n {
            return Err(parse_err(ln + 1, line.len() + 1, format!("row has {col} entries, expected {n}")));
        }
        row += 1;
    }
    if row != k {
        return Err(parse_err(text.lines().count() + 1, 1, format!("found {row} rows, expected {k}")));
    }
    Ok(ParsedMatrix { n, k, matrix: m })
}

pub fn format_matrix(m: &BitMatrix) -> String {
    format!("{} {}\n{}", m.cols(), m.rows(), m)
}

pub fn format_code(code: &LinearCode) -> String {
    format_matrix(code.generator())
}
