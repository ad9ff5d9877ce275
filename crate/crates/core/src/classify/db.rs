//! Line-delimited JSON store of classification records.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::engine::ClassifiedCode;
use crate::classify::key::CanonicalKey;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    /// hex-encoded canonical key
    pub key: String,
    /// `wd[i]` codewords of weight `i`
    pub wd: Vec<u128>,
    pub projective: bool,
    pub origin: String,
}

impl ClassificationRecord {
    pub fn from_class(c: &ClassifiedCode) -> Self {
        ClassificationRecord {
            n: c.n,
            k: c.k,
            delta: c.delta,
            key: c.key.to_hex(),
            wd: c.weights.counts.clone(),
            projective: c.projective,
            origin: c.origin.clone(),
        }
    }

    /// Internal consistency of the stored fields.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedRecord(format!("{m} (key {})", self.key)));
        if self.delta == 0 || self.k == 0 || self.k > self.n || self.k >= 128 {
            return bad("parameters out of range");
        }
        if self.wd.len() != self.n + 1 || self.wd[0] != 1 {
            return bad("weight distribution has the wrong shape");
        }
        if self.wd.iter().sum::<u128>() != 1u128 << self.k {
            return bad("weight distribution does not sum to 2^k");
        }
        if self.wd.iter().enumerate().any(|(i, &a)| a > 0 && i % self.delta != 0) {
            return bad("weight not divisible by delta");
        }
        let key = CanonicalKey::from_hex(&self.key).map_err(|_| Error::MalformedRecord("key is not hex".into()))?;
        let b = key.as_bytes();
        if b.len() < 5 || u16::from_be_bytes([b[0], b[1]]) as usize != self.n || b[2] as usize != self.k {
            return bad("key header disagrees with n, k");
        }
        Ok(())
    }
}

/// In-memory view; one entry per `(delta, key)`.
#[derive(Clone, Debug, Default)]
pub struct Database {
    records: BTreeMap<(usize, String), ClassificationRecord>,
}

impl Database {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Returns whether the record was new. Inserting a known key is a no-op.
    pub fn insert(&mut self, record: ClassificationRecord) -> Result<bool> {
        record.validate()?;
        let id = (record.delta, record.key.clone());
        if self.records.contains_key(&id) {
            return Ok(false);
        }
        self.records.insert(id, record);
        Ok(true)
    }

    /// Stored classes with the given parameters, sorted by key.
    pub fn query(&self, n: usize, k: usize, delta: usize) -> Vec<&ClassificationRecord> {
        self.records
            .range((delta, String::new())..)
            .take_while(|((d, _), _)| *d == delta)
            .map(|(_, r)| r)
            .filter(|r| r.n == n && r.k == k)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.records.values()
    }

    pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Self> {
        let mut db = Database::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: ClassificationRecord = serde_json::from_str(&line)
                .map_err(|e| Error::MalformedRecord(format!("line {}: {e}", i + 1)))?;
            db.insert(rec)?;
        }
        Ok(db)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_jsonl(std::io::BufReader::new(f))
    }

    /// Records ordered by `(delta, n, k, key)`, one per line.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        let mut all: Vec<&ClassificationRecord> = self.records.values().collect();
        all.sort_by(|a, b| (a.delta, a.n, a.k, &a.key).cmp(&(b.delta, b.n, b.k, &b.key)));
        for r in all {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf)?;
        std::fs::write(path, buf)?;
        Ok(())
    }
}
