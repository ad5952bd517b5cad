//! Family documents and the compact one-line family form.
//!
//! A document is JSON:
//!
//! ```json
//! {"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]}
//! ```
//!
//! The compact form writes each bipartition as blocks joined by `|` and
//! members joined by `;`, e.g. `1,2|3,4;1,3|2,4`. Labels may be arbitrary
//! positive integers; they are renumbered to `1..n` in increasing order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bipartition::{Bipartition, FamilyOfBipartitions};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub n: usize,
    pub bipartitions: Vec<Vec<Vec<u64>>>,
}

/// A family read from external input, with the original label of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedFamily {
    pub family: FamilyOfBipartitions,
    /// `labels[i - 1]` is the external label of element `i`.
    pub labels: Vec<u64>,
}

impl ParsedFamily {
    pub fn relabeled(&self) -> bool {
        self.labels.iter().enumerate().any(|(i, &l)| l != i as u64 + 1)
    }

    /// `10->1, 20->2, ...`
    pub fn mapping(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{l}->{}", i + 1))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidBipartition(msg.into())
}

impl FamilyDocument {
    pub fn from_family(f: &FamilyOfBipartitions) -> Self {
        let bipartitions = f
            .members()
            .iter()
            .map(|p| {
                p.blocks()
                    .into_iter()
                    .map(|b| b.into_iter().map(|e| e as u64).collect())
                    .collect()
            })
            .collect();
        Self {
            n: f.n(),
            bipartitions,
        }
    }

    pub fn to_family(&self) -> Result<ParsedFamily> {
        let labels: BTreeSet<u64> = self.bipartitions.iter().flatten().flatten().copied().collect();
        let labels: Vec<u64> = if labels.is_empty() {
            (1..=self.n as u64).collect()
        } else {
            labels.into_iter().collect()
        };
        if labels.len() != self.n {
            return Err(bad(format!(
                "document declares n = {} but uses {} distinct labels",
                self.n,
                labels.len()
            )));
        }
        build(self.n, labels, &self.bipartitions)
    }
}

fn build(n: usize, labels: Vec<u64>, raw: &[Vec<Vec<u64>>]) -> Result<ParsedFamily> {
    if labels.first() == Some(&0) {
        return Err(bad("labels must be positive integers"));
    }
    let index = |label: u64| labels.binary_search(&label).map(|i| i + 1).expect("label collected");
    let mut members = Vec::with_capacity(raw.len());
    for (idx, blocks) in raw.iter().enumerate() {
        let mapped: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| b.iter().map(|&l| index(l)).collect())
            .collect();
        let p = Bipartition::from_blocks(n, &mapped)
            .map_err(|e| match e {
                Error::InvalidBipartition(msg) => bad(format!("member {}: {msg}", idx + 1)),
                other => other,
            })?;
        members.push(p);
    }
    Ok(ParsedFamily {
        family: FamilyOfBipartitions::new(n, members)?,
        labels,
    })
}

/// Parse `1,2|3,4;1,3|2,4`. The ground set is the set of labels used.
pub fn parse_compact(line: &str) -> Result<ParsedFamily> {
    let line = line.trim();
    if line.is_empty() {
        return Err(bad("empty compact family; use a document to give n"));
    }
    let mut raw = Vec::new();
    for member in line.split(';') {
        let mut blocks = Vec::new();
        for block in member.split('|') {
            let mut elements = Vec::new();
            for token in block.split(',') {
                let token = token.trim();
                let label = token
                    .parse::<u64>()
                    .map_err(|_| bad(format!("bad label {token:?}")))?;
                elements.push(label);
            }
            blocks.push(elements);
        }
        raw.push(blocks);
    }
    let labels: Vec<u64> = raw
        .iter()
        .flatten()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    build(labels.len(), labels, &raw)
}

/// Accept either a JSON document or a compact line.
pub fn parse_family_input(text: &str) -> Result<ParsedFamily> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: FamilyDocument =
            serde_json::from_str(trimmed).map_err(|e| bad(format!("malformed document: {e}")))?;
        doc.to_family()
    } else {
        parse_compact(trimmed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartition::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn document_roundtrip() {
        let q = q_family();
        let doc = FamilyDocument::from_family(&q);
        assert_eq!(doc.bipartitions[0], vec![vec![1, 2, 3], vec![4]]);
        let json = serde_json::to_string(&doc).unwrap();
        let back = parse_family_input(&json).unwrap();
        assert_eq!(back.family, q);
        assert!(!back.relabeled());
    }

    #[test]
    fn compact_roundtrip() {
        let p = p_family();
        let line = p.to_string();
        assert_eq!(line, "1,3|2,4;1,2|3,4");
        assert_eq!(parse_compact(&line).unwrap().family, p);
    }

    #[test]
    fn relabeling() {
        let parsed = parse_family_input(r#"{"n": 3, "bipartitions": [[[10], [20, 30]], [[10, 20], [30]]]}"#).unwrap();
        assert!(parsed.relabeled());
        assert_eq!(parsed.mapping(), "10->1, 20->2, 30->3");
        assert_eq!(parsed.family.to_string(), "1,2|3;1|2,3");
    }

    #[test]
    fn malformed_documents() {
        let cases = [
            r#"{"n": 3, "bipartitions": [[[1, 2], [2, 3]]]}"#,
            r#"{"n": 3, "bipartitions": [[[1], [2], [3]]]}"#,
            r#"{"n": 3, "bipartitions": [[[1, 2]]]}"#,
            r#"{"n": 3, "bipartitions": [[[1, 2, 3], []]]}"#,
            r#"{"n": 4, "bipartitions": [[[1, 2], [3]]]}"#,
            r#"{"n": 2, "bipartitions": [[[0], [1]]]}"#,
            r#"{"n": 2, "bipartitions": [[[-1], [1]]]}"#,
            r#"{"n": 2, "bipartitions": [[[1], [2]]], "extra": 1}"#,
            r#"{"n": 2"#,
            "1,2|2,3",
            "1,x|3",
            "",
        ];
        for case in cases {
            assert!(parse_family_input(case).is_err(), "{case}");
        }
    }

    #[test]
    fn empty_document_uses_n() {
        let parsed = parse_family_input(r#"{"n": 1, "bipartitions": []}"#).unwrap();
        assert!(parsed.family.is_empty());
        assert!(parsed.family.is_separating());
    }

    proptest! {
        #[test]
        fn emitted_forms_reparse(n in 2usize..=12, picks in proptest::collection::vec(any::<u64>(), 1..8)) {
            let mask = (1u64 << n) - 2;
            let members = picks.iter().map(|r| Bipartition::from_coblock(n, r & mask).unwrap());
            let f = FamilyOfBipartitions::new(n, members).unwrap();
            let json = serde_json::to_string(&FamilyDocument::from_family(&f)).unwrap();
            prop_assert_eq!(&parse_family_input(&json).unwrap().family, &f);
            prop_assert_eq!(&parse_compact(&f.to_string()).unwrap().family, &f);
        }
    }
}
