//! Line-delimited machine output: a version header naming the document kind,
//! then one JSON record per line.

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub const MAGIC: &str = "sftkit-machine";
pub const VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq)]
pub enum MachineError {
    #[error("missing or malformed header line")]
    Header,
    #[error("unsupported machine format version {0}")]
    Version(String),
    #[error("record {line}: {message}")]
    Record { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MachineDoc {
    pub kind: String,
    pub records: Vec<Value>,
}

impl MachineDoc {
    pub fn new(kind: &str) -> Self {
        MachineDoc { kind: kind.to_string(), records: vec![] }
    }

    pub fn push<T: Serialize>(&mut self, record: &T) {
        self.records.push(serde_json::to_value(record).expect("records serialize"));
    }

    pub fn with<T: Serialize>(mut self, record: &T) -> Self {
        self.push(record);
        self
    }

    pub fn typed<T: DeserializeOwned>(&self) -> Result<Vec<T>, MachineError> {
        self.records
            .iter()
            .enumerate()
            .map(|(i, v)| serde_json::from_value(v.clone()).map_err(|e| MachineError::Record { line: i + 2, message: e.to_string() }))
            .collect()
    }

    pub fn emit(&self) -> String {
        let mut out = format!("{MAGIC} {VERSION} {}\n", self.kind);
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("values serialize"));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<MachineDoc, MachineError> {
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or(MachineError::Header)?.split_whitespace().collect();
        let [magic, version, kind] = header[..] else { return Err(MachineError::Header) };
        if magic != MAGIC {
            return Err(MachineError::Header);
        }
        if version != VERSION.to_string() {
            return Err(MachineError::Version(version.to_string()));
        }
        let mut records = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            records.push(serde_json::from_str(line).map_err(|e| MachineError::Record { line: i + 2, message: e.to_string() })?);
        }
        Ok(MachineDoc { kind: kind.to_string(), records })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{linearized_ranks, RankTable};

    #[test]
    fn round_trip() {
        let table = linearized_ranks(5, 12).unwrap();
        let doc = MachineDoc::new("ranks").with(&table);
        let text = doc.emit();
        assert!(text.starts_with("sftkit-machine 1 ranks\n"));
        let back = MachineDoc::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.typed::<RankTable>().unwrap(), vec![table]);
    }

    #[test]
    fn bad_headers() {
        assert_eq!(MachineDoc::parse(""), Err(MachineError::Header));
        assert_eq!(MachineDoc::parse("sftkit-machine 2 x\n"), Err(MachineError::Version("2".into())));
        assert!(matches!(MachineDoc::parse("sftkit-machine 1 x\n{"), Err(MachineError::Record { line: 2, .. })));
    }
}
