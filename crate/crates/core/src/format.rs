//! Text and JSON formats for set families.
//!
//! The text format is line oriented and diff friendly:
//!
//! ```text
//! # optional comments run to end of line
//! universe: 1 2 3
//! {}
//! 2
//! 1 2
//! ```
//!
//! The `universe:` header is optional (default: union of the sets) and only
//! valid before the first set line. `{}` or `-` denote the empty set; other
//! lines are whitespace-separated element labels. Parsing the serializer's
//! output returns the identical family, byte for byte on re-serialization.
//!
//! The JSON form is `{"universe":[1,2],"sets":[[],[1],[1,2]]}` with the same
//! optional-universe rule.

use crate::family::{SetFamily, SetMask};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Parse failure with a 1-based line number (text format only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Parsed file content before family construction: the declared universe (if
/// any) and the sets in file order, duplicates preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFile {
    pub universe: Option<SetMask>,
    pub sets: Vec<SetMask>,
}

impl FamilyFile {
    /// Builds the family; a declared universe is kept as the ground set.
    pub fn into_family(self) -> Result<SetFamily, ParseError> {
        match self.universe {
            None => Ok(SetFamily::new(self.sets)),
            Some(u) => SetFamily::over(u, self.sets).map_err(|e| ParseError {
                line: 0,
                message: e.to_string(),
            }),
        }
    }
}

fn parse_labels(body: &str, line_no: usize) -> Result<SetMask, ParseError> {
    let mut mask = SetMask::EMPTY;
    for token in body.split_whitespace() {
        let label: u64 = token.parse().map_err(|_| ParseError {
            line: line_no,
            message: format!("expected a positive integer, found {token:?}"),
        })?;
        if label == 0 || label > 64 {
            return Err(ParseError {
                line: line_no,
                message: format!("element {label} outside the supported range 1..=64"),
            });
        }
        mask = SetMask::from_labels(&[label as u32]).unwrap().union(mask);
    }
    Ok(mask)
}

/// Parses the text format into its raw parts, preserving set order.
pub fn parse_family_file(text: &str) -> Result<FamilyFile, ParseError> {
    let mut universe = None;
    let mut sets: Vec<SetMask> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("universe:") {
            if universe.is_some() {
                return Err(ParseError {
                    line: line_no,
                    message: "duplicate universe declaration".into(),
                });
            }
            if !sets.is_empty() {
                return Err(ParseError {
                    line: line_no,
                    message: "universe declaration must precede the sets".into(),
                });
            }
            universe = Some(parse_labels(rest, line_no)?);
            continue;
        }
        if line == "{}" || line == "-" {
            sets.push(SetMask::EMPTY);
            continue;
        }
        let mask = parse_labels(line, line_no)?;
        if mask.is_empty() {
            return Err(ParseError {
                line: line_no,
                message: "empty set must be written as {} or -".into(),
            });
        }
        if let Some(u) = universe {
            if !mask.is_subset_of(u) {
                return Err(ParseError {
                    line: line_no,
                    message: format!("set {mask} not contained in the declared universe"),
                });
            }
        }
        sets.push(mask);
    }
    Ok(FamilyFile { universe, sets })
}

/// Parses the text format into a family.
pub fn parse_family(text: &str) -> Result<SetFamily, ParseError> {
    parse_family_file(text)?.into_family()
}

/// Serializes a family in the text format: explicit universe line, then the
/// member sets in canonical order.
pub fn serialize_family(family: &SetFamily) -> String {
    let mut out = String::new();
    out.push_str("universe:");
    for e in family.universe().elements() {
        out.push_str(&format!(" {e}"));
    }
    out.push('\n');
    for s in family.sets() {
        if s.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let labels: Vec<String> = s.elements().map(|e| e.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    universe: Option<Vec<u32>>,
    sets: Vec<Vec<u32>>,
}

/// Parses the JSON form into its raw parts, preserving set order. The
/// universe field is optional.
pub fn family_file_from_json(text: &str) -> Result<FamilyFile, ParseError> {
    let parsed: FamilyJson = serde_json::from_str(text).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })?;
    let to_mask = |labels: &[u32]| {
        SetMask::from_labels(labels).map_err(|e| ParseError {
            line: 0,
            message: e.to_string(),
        })
    };
    let sets = parsed
        .sets
        .iter()
        .map(|s| to_mask(s))
        .collect::<Result<Vec<_>, _>>()?;
    let universe = match parsed.universe {
        None => None,
        Some(u) => {
            let universe = to_mask(&u)?;
            for s in &sets {
                if !s.is_subset_of(universe) {
                    return Err(ParseError {
                        line: 0,
                        message: format!("set {s} not contained in the declared universe"),
                    });
                }
            }
            Some(universe)
        }
    };
    Ok(FamilyFile { universe, sets })
}

/// Parses the JSON form into a family.
pub fn family_from_json(text: &str) -> Result<SetFamily, ParseError> {
    family_file_from_json(text)?.into_family()
}

/// Serializes a family in the JSON form, universe always explicit, sets in
/// canonical order.
pub fn family_to_json(family: &SetFamily) -> String {
    let value = FamilyJson {
        universe: Some(family.universe().elements().map(|e| e.label()).collect()),
        sets: family
            .sets()
            .iter()
            .map(|s| s.elements().map(|e| e.label()).collect())
            .collect(),
    };
    serde_json::to_string(&value).expect("family serialization cannot fail")
}
