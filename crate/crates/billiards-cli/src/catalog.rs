//! The persistent state catalog: a JSON array of per-state records.
//!
//! Records are keyed by `(billiard, family, m, n)`. Upserts replace the
//! matching record in place (preserving its position) or append new records
//! at the end, so re-running the same command leaves the file byte-identical.
//! Concurrent writers are last-writer-wins; there is no locking.

use serde::{Deserialize, Serialize};

/// One catalogued eigenfunction with its class data.
///
/// `nodal_count` and `resolution` are optional: they are only meaningful
/// together, and a record written from class arithmetic alone omits them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub billiard: String,
    pub family: String,
    pub m: i64,
    pub n: i64,
    pub modulus: i64,
    pub class_index: i64,
    pub energy: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodal_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<usize>,
}

impl CatalogEntry {
    fn key(&self) -> (&str, &str, i64, i64) {
        (&self.billiard, &self.family, self.m, self.n)
    }
}

/// Parse a catalog file's contents.
pub fn parse(text: &str) -> Result<Vec<CatalogEntry>, serde_json::Error> {
    serde_json::from_str(text)
}

/// Serialize a catalog deterministically: pretty-printed, trailing newline.
pub fn to_json(entries: &[CatalogEntry]) -> String {
    let mut text = serde_json::to_string_pretty(entries).expect("catalog entries serialize");
    text.push('\n');
    text
}

/// Replace the record with `entry`'s key, or append if none matches.
pub fn upsert(entries: &mut Vec<CatalogEntry>, entry: CatalogEntry) {
    match entries.iter_mut().find(|e| e.key() == entry.key()) {
        Some(existing) => *existing = entry,
        None => entries.push(entry),
    }
}
