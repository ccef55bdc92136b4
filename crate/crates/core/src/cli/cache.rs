//! On-disk result cache: `{schema_version, entries: [{n, d, alpha, beta, provenance}]}`
//! with counts as decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arithmetic::Natural;
use crate::counting::{CountGrid, CountTable, Provenance};
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: u64,
    pub d: u64,
    pub alpha: String,
    pub beta: String,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheFile {
    pub schema_version: u32,
    pub entries: Vec<CacheEntry>,
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Cache(msg.into())
}

fn parse_count(field: &str, value: &str, n: u64, d: u64) -> Result<Natural> {
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(corrupt(format!(
            "{field} at n={n}, d={d} is not a decimal count: {value:?}"
        )));
    }
    value
        .parse()
        .map_err(|_| corrupt(format!("{field} at n={n}, d={d} does not parse: {value:?}")))
}

impl CacheFile {
    /// Entries for every stored cell of `grid`, ordered by `(n, d)`.
    pub fn from_grid(grid: &CountGrid) -> Self {
        let mut entries = Vec::new();
        for table in grid.tables() {
            for (&d, alpha) in &table.alpha {
                let (Some(beta), Some(provenance)) = (table.beta.get(&d), table.provenance.get(&d))
                else {
                    continue;
                };
                entries.push(CacheEntry {
                    n: table.n,
                    d,
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                    provenance: provenance.to_string(),
                });
            }
        }
        CacheFile {
            schema_version: SCHEMA_VERSION,
            entries,
        }
    }

    /// Validates every entry and rebuilds the tables.
    pub fn to_grid(&self) -> Result<CountGrid> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(corrupt(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let mut tables: BTreeMap<u64, CountTable> = BTreeMap::new();
        for e in &self.entries {
            if e.n < 2 || e.d == 0 || e.d >= e.n {
                return Err(corrupt(format!(
                    "entry n={}, d={} is outside 1 <= d < n",
                    e.n, e.d
                )));
            }
            let alpha = parse_count("alpha", &e.alpha, e.n, e.d)?;
            let beta = parse_count("beta", &e.beta, e.n, e.d)?;
            let provenance: Provenance = e
                .provenance
                .parse()
                .map_err(|err: Error| corrupt(format!("entry n={}, d={}: {err}", e.n, e.d)))?;
            let table = tables.entry(e.n).or_insert_with(|| CountTable::new(e.n));
            if table.alpha.contains_key(&e.d) {
                return Err(corrupt(format!("duplicate entry n={}, d={}", e.n, e.d)));
            }
            table.insert(e.d, alpha, beta, provenance);
        }
        for table in tables.values() {
            if let Some(v) = table.invariant_violations().first() {
                return Err(corrupt(format!("inconsistent entry: {v}")));
            }
        }
        Ok(CountGrid::from_tables(tables.into_values()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("cache serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| corrupt(format!("unreadable cache: {e}")))
    }
}

/// Reads a cache; a missing file is an empty cache, anything unreadable is an
/// error.
pub fn load(path: &Path) -> Result<CountGrid> {
    match fs::read_to_string(path) {
        Ok(text) => CacheFile::from_json(&text)
            .and_then(|c| c.to_grid())
            .map_err(|e| corrupt(format!("{}: {e}", path.display()))),
        Err(e) if e.kind() == ErrorKind::NotFound => Ok(CountGrid::default()),
        Err(e) => Err(corrupt(format!("{}: {e}", path.display()))),
    }
}

/// Writes through a sibling temporary file so a crash leaves the old cache.
pub fn save(path: &Path, grid: &CountGrid) -> Result<()> {
    let text = CacheFile::from_grid(grid).to_json();
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let io = |e: std::io::Error| corrupt(format!("{}: {e}", path.display()));
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::CountConfig;

    #[test]
    fn round_trip() {
        let grid = CountGrid::compute(9, None, &CountConfig::default());
        let file = CacheFile::from_grid(&grid);
        assert_eq!(file.entries.len(), (1..9).sum::<usize>());
        let back = CacheFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.to_grid().unwrap();
        for n in 2..=9 {
            for d in 1..n {
                assert_eq!(rebuilt.alpha(n, d), grid.alpha(n, d));
                assert_eq!(rebuilt.beta(n, d), grid.beta(n, d));
                assert_eq!(rebuilt.provenance(n, d), grid.provenance(n, d));
            }
        }
        assert_eq!(CacheFile::from_grid(&rebuilt), file);
    }

    fn entry(alpha: &str) -> CacheEntry {
        CacheEntry {
            n: 6,
            d: 3,
            alpha: alpha.into(),
            beta: "44".into(),
            provenance: "closed-small-d/dp-gcd".into(),
        }
    }

    #[test]
    fn rejects_corruption() {
        let ok = CacheFile {
            schema_version: 1,
            entries: vec![entry("44")],
        };
        assert!(ok.to_grid().is_ok());
        let bad_version = CacheFile {
            schema_version: 7,
            ..ok.clone()
        };
        assert!(bad_version.to_grid().is_err());
        for alpha in ["-44", "4.4e1", "", "0x2c", "43"] {
            let bad = CacheFile {
                schema_version: 1,
                entries: vec![entry(alpha)],
            };
            assert!(bad.to_grid().is_err(), "{alpha:?} accepted");
        }
        let dup = CacheFile {
            schema_version: 1,
            entries: vec![entry("44"), entry("44")],
        };
        assert!(dup.to_grid().is_err());
        assert!(CacheFile::from_json("{\"schema_version\": 1}").is_err());
        assert!(CacheFile::from_json("not json").is_err());
    }
}
