//! Append-only result cache for minimum-rank queries.
//!
//! One JSON object per line, keyed by (canonical graph6, field order).
//! Entries written by a different engine version are ignored on lookup,
//! so stale results never surface after an upgrade. Lookups take the
//! last matching line, which keeps the file append-only.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use minrank_core::ENGINE_VERSION;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub graph6: String,
    pub p: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CachedResult {
    pub mr: usize,
    pub mrset_digest: Option<String>,
}

pub fn lookup(path: &Path, key: &CacheKey) -> std::io::Result<Option<CachedResult>> {
    if !path.exists() {
        return Ok(None);
    }
    let reader = BufReader::new(std::fs::File::open(path)?);
    let mut hit = None;
    for line in reader.lines() {
        let line = line?;
        let Ok(value) = serde_json::from_str::<serde_json::Value>(&line) else {
            continue;
        };
        if value["graph6"].as_str() == Some(key.graph6.as_str())
            && value["p"].as_u64() == Some(key.p as u64)
            && value["engine"].as_str() == Some(ENGINE_VERSION)
        {
            if let Some(mr) = value["mr"].as_u64() {
                hit = Some(CachedResult {
                    mr: mr as usize,
                    mrset_digest: value["mrset_digest"].as_str().map(str::to_owned),
                });
            }
        }
    }
    Ok(hit)
}

pub fn append(path: &Path, key: &CacheKey, result: &CachedResult) -> std::io::Result<()> {
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let entry = serde_json::json!({
        "schema": 1,
        "graph6": key.graph6,
        "p": key.p,
        "mr": result.mr,
        "mrset_digest": result.mrset_digest,
        "timestamp": timestamp,
        "engine": ENGINE_VERSION,
    });
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(file, "{entry}")?;
    Ok(())
}
