use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::{Outcome, OutcomeClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemoEntry {
    pub outcome: Outcome,
    pub nimber: Option<u64>,
}

/// Write-once table from canonical key to solved value.
///
/// Re-inserting a key is allowed only with an equal value, except that an
/// entry without a nimber may be upgraded to one with a nimber.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    entries: HashMap<String, MemoEntry>,
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&MemoEntry> {
        self.entries.get(key)
    }

    /// Entries in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &MemoEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn insert(&mut self, key: String, entry: MemoEntry) -> Result<()> {
        match self.entries.get_mut(&key) {
            None => {
                self.entries.insert(key, entry);
                Ok(())
            }
            Some(old) => {
                let nimbers_agree = match (old.nimber, entry.nimber) {
                    (Some(a), Some(b)) => a == b,
                    _ => true,
                };
                if old.outcome != entry.outcome || !nimbers_agree {
                    return Err(Error::MemoConflict {
                        key,
                        detail: format!("{old:?} vs {entry:?}"),
                    });
                }
                if old.nimber.is_none() {
                    old.nimber = entry.nimber;
                }
                Ok(())
            }
        }
    }

    /// Records are `<key>\t<normal>\t<misere>\t<nimber or ->`, sorted by key.
    pub fn save<W: Write>(&self, mut out: W) -> Result<()> {
        let mut keys: Vec<&String> = self.entries.keys().collect();
        keys.sort();
        for key in keys {
            if key.contains(['\t', '\n', '\r']) {
                return Err(Error::InvalidInput(format!("key {key:?} cannot be cached")));
            }
            let e = &self.entries[key];
            let nimber = e.nimber.map_or_else(|| "-".to_string(), |n| n.to_string());
            writeln!(out, "{key}\t{}\t{}\t{nimber}", e.outcome.normal, e.outcome.misere)?;
        }
        Ok(())
    }

    /// Merges records into the table, as if each had been solved here.
    pub fn load<R: BufRead>(&mut self, input: R) -> Result<usize> {
        let mut count = 0;
        for (lineno, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("cache line {}: {what}", lineno + 1));
            let fields: Vec<&str> = line.split('\t').collect();
            let [key, normal, misere, nimber] = fields[..] else {
                return Err(bad("expected 4 tab-separated fields"));
            };
            let normal: OutcomeClass = normal.parse().map_err(|_| bad("bad normal outcome"))?;
            let misere: OutcomeClass = misere.parse().map_err(|_| bad("bad misere outcome"))?;
            let nimber = match nimber {
                "-" => None,
                n => Some(n.parse::<u64>().map_err(|_| bad("bad nimber"))?),
            };
            if nimber.is_some_and(|n| (n == 0) != normal.is_p()) {
                return Err(bad("nimber and normal outcome disagree"));
            }
            self.insert(
                key.to_string(),
                MemoEntry {
                    outcome: Outcome { normal, misere },
                    nimber,
                },
            )?;
            count += 1;
        }
        Ok(count)
    }
}
