//! The shipped discrepancy log: printed table entries and classification
//! claims that recomputation contradicts, each with the recomputed value.
//!
//! A logged entry is checked both ways. The printed form must disagree with
//! the recomputation on some sample (otherwise the entry is stale), and the
//! recomputed form must agree on every sample.

use std::sync::OnceLock;

use serde::Deserialize;

use super::catalog::{parse_pair_id, LinearForm};
use super::system::ROW_INDEX;
use crate::connection::Distribution;
use crate::error::{Error, Result};
use crate::liealg::{Group, Polynomial};

const LOG_TOML: &str = include_str!("../../data/discrepancies.toml");

/// A logged table entry for one pair at row `(i, j)`, 1-based.
#[derive(Clone, Debug)]
pub struct TableEntry<T> {
    pub group: Group,
    pub dist: Distribution,
    pub entry: (usize, usize),
    /// Every printed variant; the first is the one in the catalog.
    pub printed: Vec<T>,
    pub recomputed: T,
    pub note: String,
}

impl<T> TableEntry<T> {
    /// Position in [`ROW_INDEX`].
    pub fn row(&self) -> usize {
        ROW_INDEX
            .iter()
            .position(|&e| e == self.entry)
            .expect("validated at load")
    }
}

/// A replacement for a printed classification case.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseCorrection {
    pub id: String,
    /// Replacement predicate and recipe when the printed region is wrong.
    pub predicate: Option<String>,
    pub recipe: Option<String>,
    pub basis: Vec<[String; 3]>,
    pub note: String,
}

#[derive(Clone, Debug, Default)]
pub struct DiscrepancyLog {
    pub ricci: Vec<TableEntry<Polynomial>>,
    pub lie: Vec<TableEntry<LinearForm>>,
    pub cases: Vec<CaseCorrection>,
}

impl DiscrepancyLog {
    pub fn ricci_entry(&self, group: Group, dist: Distribution, row: usize) -> Option<&TableEntry<Polynomial>> {
        self.ricci
            .iter()
            .find(|e| e.group == group && e.dist == dist && e.row() == row)
    }

    pub fn lie_entry(&self, group: Group, dist: Distribution, row: usize) -> Option<&TableEntry<LinearForm>> {
        self.lie
            .iter()
            .find(|e| e.group == group && e.dist == dist && e.row() == row)
    }

    pub fn case(&self, id: &str) -> Option<&CaseCorrection> {
        self.cases.iter().find(|c| c.id == id)
    }
}

pub fn discrepancy_log() -> &'static DiscrepancyLog {
    static LOG: OnceLock<DiscrepancyLog> = OnceLock::new();
    LOG.get_or_init(|| parse_log(LOG_TOML).expect("embedded discrepancy log is well formed"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LogFile {
    #[serde(default)]
    ricci: Vec<EntryFile>,
    #[serde(default)]
    lie: Vec<EntryFile>,
    #[serde(default)]
    case: Vec<CaseCorrection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    pair: String,
    entry: String,
    printed: Vec<String>,
    recomputed: String,
    note: String,
}

fn parse_entry<T>(e: EntryFile, parse: impl Fn(&str) -> Result<T>) -> Result<TableEntry<T>> {
    let (group, dist) = parse_pair_id(&e.pair)?;
    let digits: Vec<usize> = e
        .entry
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .unwrap_or_default();
    let entry = match digits[..] {
        [i, j] if ROW_INDEX.contains(&(i, j)) => (i, j),
        _ => {
            return Err(Error::Invalid(format!(
                "discrepancy log: entry {:?} of {} is not an upper-triangle index such as \"13\"",
                e.entry, e.pair
            )))
        }
    };
    if e.printed.is_empty() {
        return Err(Error::Invalid(format!("discrepancy log: {} {} lists no printed form", e.pair, e.entry)));
    }
    Ok(TableEntry {
        group,
        dist,
        entry,
        printed: e.printed.iter().map(|s| parse(s)).collect::<Result<_>>()?,
        recomputed: parse(&e.recomputed)?,
        note: e.note,
    })
}

pub fn parse_log(text: &str) -> Result<DiscrepancyLog> {
    let file: LogFile = toml::from_str(text).map_err(|e| Error::Invalid(format!("discrepancy log: {e}")))?;
    Ok(DiscrepancyLog {
        ricci: file
            .ricci
            .into_iter()
            .map(|e| parse_entry(e, Polynomial::parse))
            .collect::<Result<_>>()?,
        lie: file
            .lie
            .into_iter()
            .map(|e| parse_entry(e, LinearForm::parse))
            .collect::<Result<_>>()?,
        cases: file.case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_log_parses() {
        let log = discrepancy_log();
        assert!(!log.ricci.is_empty());
        assert!(!log.lie.is_empty());
        assert!(!log.cases.is_empty());
    }

    #[test]
    fn entry_index_is_checked() {
        let bad = r#"
[[ricci]]
pair = "G1.B1"
entry = "21"
printed = ["0"]
recomputed = "1"
note = ""
"#;
        assert!(parse_log(bad).is_err());
        assert!(parse_log(&bad.replace("\"21\"", "\"12\"")).is_ok());
    }
}
