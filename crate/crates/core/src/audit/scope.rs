use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};

/// One minuscule quotient to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScopeEntry {
    pub family: Family,
    pub rank: usize,
    pub weight: usize,
}

impl fmt::Display for ScopeEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.family, self.rank, self.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditScope {
    pub entries: Vec<ScopeEntry>,
    /// Longest coset representative swept.
    pub max_length: usize,
    /// Highest degree used by the component checks.
    pub max_degree: u64,
    /// Largest `j - i` handed to the chain-sum oracle; wider pairs are
    /// skipped.
    pub chain_window: usize,
    /// Reduced words per coset; cosets with more are sampled.
    pub word_cap: usize,
    /// Upper bound on the number of elementary checks.
    pub budget: u64,
    /// Boxes `(rows, cols)` for the Grassmannian suites. `None` derives
    /// them from the type A entries.
    pub boxes: Option<Vec<(usize, usize)>>,
    /// Worker threads; `None` uses the global pool.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_WORD_CAP: usize = 100;
pub const DEFAULT_CHAIN_WINDOW: usize = 12;
pub const DEFAULT_MAX_DEGREE: u64 = 4;

fn entry(family: Family, rank: usize, weight: usize) -> ScopeEntry {
    ScopeEntry {
        family,
        rank,
        weight,
    }
}

impl AuditScope {
    pub fn new(entries: Vec<ScopeEntry>) -> Self {
        AuditScope {
            entries,
            max_length: usize::MAX,
            max_degree: DEFAULT_MAX_DEGREE,
            chain_window: DEFAULT_CHAIN_WINDOW,
            word_cap: DEFAULT_WORD_CAP,
            budget: DEFAULT_BUDGET,
            boxes: None,
            jobs: None,
        }
    }

    /// `A2`-`A4` with every minuscule weight, `D4` and `D5` with theirs.
    pub fn default_scope() -> Self {
        let mut entries = Vec::new();
        for rank in 2..=4 {
            for weight in 1..=rank {
                entries.push(entry(Family::A, rank, weight));
            }
        }
        for weight in [1, 3, 4] {
            entries.push(entry(Family::D, 4, weight));
        }
        for weight in [1, 4, 5] {
            entries.push(entry(Family::D, 5, weight));
        }
        AuditScope::new(entries)
    }

    pub fn empty() -> Self {
        AuditScope::new(Vec::new())
    }

    /// Adds the minuscule quotients of `E6` and `E7`.
    pub fn with_exceptional(mut self) -> Self {
        for e in [
            entry(Family::E, 6, 1),
            entry(Family::E, 6, 6),
            entry(Family::E, 7, 7),
        ] {
            if !self.entries.contains(&e) {
                self.entries.push(e);
            }
        }
        self
    }

    /// Parses a comma-separated list of `default`, `<type><rank>` (every
    /// minuscule weight) or `<type><rank>:<weight>`.
    pub fn parse_entries(s: &str) -> Result<Vec<ScopeEntry>> {
        let mut out: Vec<ScopeEntry> = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let found = if item.eq_ignore_ascii_case("default") {
                AuditScope::default_scope().entries
            } else {
                parse_item(item)?
            };
            for e in found {
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        Ok(out)
    }

    /// Every entry must name a minuscule weight of a valid root system.
    pub fn validate(&self) -> Result<()> {
        for e in &self.entries {
            let rs = RootSystem::build(e.family, e.rank)
                .map_err(|err| Error::InvalidScope(format!("{e}: {err}")))?;
            if e.weight == 0 || e.weight > e.rank || !rs.is_minuscule(e.weight) {
                return Err(Error::InvalidScope(format!(
                    "{e} does not name a minuscule weight"
                )));
            }
        }
        if self.word_cap == 0 {
            return Err(Error::InvalidScope("the word cap must be positive".into()));
        }
        if let Some(boxes) = &self.boxes {
            if boxes.iter().any(|&(r, c)| r == 0 || c == 0) {
                return Err(Error::InvalidScope("boxes need positive sides".into()));
            }
        }
        Ok(())
    }

    /// Boxes for the Grassmannian suites, sorted and deduplicated.
    pub fn grassmannian_boxes(&self) -> Vec<(usize, usize)> {
        let mut boxes = match &self.boxes {
            Some(b) => b.clone(),
            None => self
                .entries
                .iter()
                .filter(|e| e.family == Family::A)
                .map(|e| (e.weight, e.rank + 1 - e.weight))
                .collect(),
        };
        boxes.sort_unstable();
        boxes.dedup();
        boxes
    }
}

fn parse_item(item: &str) -> Result<Vec<ScopeEntry>> {
    let bad = || Error::InvalidScope(format!("cannot parse {item:?}"));
    let (head, weight) = match item.split_once(':') {
        Some((h, w)) => (h, Some(w.trim().parse::<usize>().map_err(|_| bad())?)),
        None => (item, None),
    };
    let mut chars = head.chars();
    let family: Family = chars
        .next()
        .ok_or_else(bad)?
        .to_string()
        .parse()
        .map_err(|_| bad())?;
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    let rs = RootSystem::build(family, rank)
        .map_err(|err| Error::InvalidScope(format!("{item}: {err}")))?;
    let weights = match weight {
        Some(w) => vec![w],
        None => rs.minuscule_weights(),
    };
    Ok(weights
        .into_iter()
        .map(|weight| ScopeEntry {
            family,
            rank,
            weight,
        })
        .collect())
}
