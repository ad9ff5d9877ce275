//! Canonical keys of binary linear codes.
//!
//! Equivalent codes (coordinate permutations) get identical keys. A code is
//! keyed through the multiset of its generator columns, or through its dual
//! when `k > n - k` so the search runs in the smaller dimension.

use std::fmt;

use crate::classify::canon::{canonical_form, CanonicalForm, CANON_MAX_DIM};
use crate::codes::{dual, LinearCode};
use crate::error::{Error, Result};

/// Longest code accepted by [`canonical_key`].
pub const KEY_MAX_LENGTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s)
            .map(CanonicalKey)
            .map_err(|e| Error::InvalidParameter(format!("bad key: {e}")))
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Column multiset of a code: nonzero columns with multiplicities (input
/// order ascending) and the number of zero columns.
fn column_multiset(columns: &[u64]) -> (Vec<u64>, Vec<u32>, usize) {
    let mut sorted: Vec<u64> = columns.to_vec();
    sorted.sort_unstable();
    let zeros = sorted.iter().take_while(|&&c| c == 0).count();
    let mut pts = Vec::new();
    let mut mult = Vec::new();
    for &c in &sorted[zeros..] {
        if pts.last() == Some(&c) {
            *mult.last_mut().unwrap() += 1;
        } else {
            pts.push(c);
            mult.push(1);
        }
    }
    (pts, mult, zeros)
}

fn encode(n: usize, k: usize, zeros: usize, form: &CanonicalForm) -> CanonicalKey {
    let mut bytes = Vec::with_capacity(5 + 4 * form.image.len());
    bytes.extend_from_slice(&(n as u16).to_be_bytes());
    bytes.push(k as u8);
    bytes.extend_from_slice(&(zeros as u16).to_be_bytes());
    for &(c, m) in &form.image {
        bytes.extend_from_slice(&(c as u16).to_be_bytes());
        bytes.extend_from_slice(&(m as u16).to_be_bytes());
    }
    CanonicalKey(bytes)
}

/// Key of a spanning column multiset in `F_2^k`. The caller guarantees the
/// columns come from a `k`-dimensional code of length `columns.len()`.
pub fn key_of_columns(k: usize, columns: &[u64]) -> Result<(CanonicalKey, CanonicalForm)> {
    let n = columns.len();
    check_budget(n, k)?;
    let (pts, mult, zeros) = column_multiset(columns);
    let form = canonical_form(k, &pts, &mult)?;
    Ok((encode(n, k, zeros, &form), form))
}

fn check_budget(n: usize, k: usize) -> Result<()> {
    if n > KEY_MAX_LENGTH {
        return Err(Error::BudgetExceeded {
            what: format!("canonical key of length {n}"),
            limit: KEY_MAX_LENGTH,
        });
    }
    if k.min(n - k) > CANON_MAX_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("canonical key of dimension {k}"),
            limit: CANON_MAX_DIM,
        });
    }
    Ok(())
}

/// Canonical key of a code; keys agree exactly on equivalent codes.
pub fn canonical_key(code: &LinearCode) -> Result<CanonicalKey> {
    let (n, k) = (code.n(), code.k());
    check_budget(n, k)?;
    if k > n - k {
        let d = dual(code)?;
        let (pts, mult, zeros) = column_multiset(&d.column_masks());
        let form = canonical_form(n - k, &pts, &mult)?;
        // the header records the dimension of the keyed code itself
        Ok(encode(n, k, zeros, &form))
    } else {
        Ok(key_of_columns(k, &code.column_masks())?.0)
    }
}

/// The code written in canonical coordinates: columns of the canonical
/// image (zeros first), as a `k x n` generator.
pub fn canonical_columns(k: usize, columns: &[u64]) -> Result<(CanonicalKey, Vec<u64>)> {
    let (key, form) = key_of_columns(k, columns)?;
    let zeros = columns.iter().filter(|&&c| c == 0).count();
    let mut out = vec![0u64; zeros];
    for &(c, m) in &form.image {
        out.extend(std::iter::repeat_n(c, m as usize));
    }
    Ok((key, out))
}
