use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Two strings and whether they denote the same concept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPair {
    pub s1: String,
    pub s2: String,
    pub correct: bool,
}

impl LabeledPair {
    pub fn new(s1: impl Into<String>, s2: impl Into<String>, correct: bool) -> Self {
        Self {
            s1: s1.into(),
            s2: s2.into(),
            correct,
        }
    }
}

/// An ordered list of labeled pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairDataset {
    pub pairs: Vec<LabeledPair>,
}

impl PairDataset {
    pub fn new(pairs: Vec<LabeledPair>) -> Self {
        Self { pairs }
    }

    /// Total number of pairs.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    /// Number of correct pairs.
    pub fn m(&self) -> usize {
        self.pairs.iter().filter(|p| p.correct).count()
    }

    /// Every string of the dataset, both sides, in pair order.
    pub fn strings(&self) -> impl Iterator<Item = &str> {
        self.pairs
            .iter()
            .flat_map(|p| [p.s1.as_str(), p.s2.as_str()])
    }

    /// Parses `s1<TAB>s2<TAB>label` lines with `label` in `{0, 1}`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut pairs = Vec::new();
        for (index, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = index + 1;
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [s1, s2, label] = fields[..] else {
                return Err(parse_error(
                    lineno,
                    format!("expected 3 tab-separated fields, found {}", fields.len()),
                ));
            };
            let correct = match label.trim() {
                "1" => true,
                "0" => false,
                other => {
                    return Err(parse_error(
                        lineno,
                        format!("label must be 0 or 1, found {other:?}"),
                    ))
                }
            };
            if s1.trim().is_empty() || s2.trim().is_empty() {
                return Err(parse_error(lineno, "empty string in pair".into()));
            }
            pairs.push(LabeledPair::new(s1, s2, correct));
        }
        Ok(Self { pairs })
    }

    pub fn write_to<W: Write>(&self, mut writer: W) -> Result<()> {
        for p in &self.pairs {
            writeln!(writer, "{}\t{}\t{}", p.s1, p.s2, u8::from(p.correct))?;
        }
        Ok(())
    }
}

pub fn load_pairs(path: impl AsRef<Path>) -> Result<PairDataset> {
    PairDataset::from_reader(BufReader::new(File::open(path)?))
}

/// A database record: entity id and free text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub id: String,
    pub text: String,
}

impl Record {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: text.into(),
        }
    }
}

/// Parses `id<TAB>text` lines; `#` comments and blank lines are skipped.
pub fn parse_records<R: BufRead>(reader: R) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((id, text)) = line.split_once('\t') else {
            return Err(parse_error(index + 1, "expected id<TAB>text".into()));
        };
        if id.trim().is_empty() {
            return Err(parse_error(index + 1, "empty record id".into()));
        }
        records.push(Record::new(id.trim(), text));
    }
    Ok(records)
}

pub fn load_records(path: impl AsRef<Path>) -> Result<Vec<Record>> {
    parse_records(BufReader::new(File::open(path)?))
}

/// One term per line, blank lines and `#` comments skipped.
pub fn parse_lines<R: BufRead>(reader: R) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() && !line.starts_with('#') {
            out.push(line.to_owned());
        }
    }
    Ok(out)
}

fn parse_error(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}
