//! Certificates: the single record of what a search or construction found.
//!
//! A certificate is serialized as one JSON document with stable field names.
//! Only `elapsed_ms` depends on timing; everything else is a pure function of
//! the inputs, whatever the worker count.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A witness was found.
    Witness,
    /// The whole space was scanned: nothing forbidden exists (for audits and
    /// witness searches) or, for number searches, the minimal value is pinned.
    Exhausted,
    /// A claim was refuted; the payload carries the violating tuple.
    Counterexample,
    /// A budget ran out before the search finished.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    None,
    /// A tuple of elements in text form, with their common color if any.
    Elements {
        elements: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        color: Option<String>,
    },
    /// A minimal number together with a coloring of everything below it that
    /// avoids the forbidden configuration.
    Extremal { value: u64, coloring: Vec<u32> },
    /// Named intermediate values plus produced elements.
    Record {
        values: BTreeMap<String, String>,
        elements: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub parameters: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub payload: Payload,
    pub search_space: u64,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(claim: impl Into<String>, verdict: Verdict, payload: Payload) -> Certificate {
        Certificate {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            verdict,
            payload,
            search_space: 0,
            elapsed_ms: 0,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Certificate {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.parameters.get(key).map(String::as_str)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The JSON text with `elapsed_ms` zeroed, for determinism comparisons.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        c.elapsed_ms = 0;
        c.to_json()
    }

    /// Writes to a sibling temp file and renames it into place.
    pub fn write_atomic(&self, path: &Path) -> Result<()> {
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let name = path
            .file_name()
            .ok_or_else(|| Error::Io(format!("not a file path: {}", path.display())))?;
        let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.to_json().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn elements(&self) -> &[String] {
        match &self.payload {
            Payload::Elements { elements, .. } | Payload::Record { elements, .. } => elements,
            _ => &[],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_canonical_form() {
        let mut c = Certificate::new(
            "fs-witness",
            Verdict::Witness,
            Payload::Elements {
                elements: vec!["1/2".into(), "{0:1}".into()],
                color: Some("3".into()),
            },
        )
        .with_param("k", 2)
        .with_param("coloring", "dyadic()");
        c.search_space = 17;
        c.elapsed_ms = 12;
        let text = c.to_json();
        assert!(text.contains("\"verdict\": \"witness\""));
        assert!(text.contains("\"kind\": \"elements\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
        let mut d = c.clone();
        d.elapsed_ms = 999;
        assert_eq!(c.canonical_json(), d.canonical_json());
    }

    #[test]
    fn atomic_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cert.json");
        let c = Certificate::new("x", Verdict::Exhausted, Payload::None);
        c.write_atomic(&path).unwrap();
        let back = Certificate::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
