//! Character-level similarity metrics over arbitrary element sequences.
//!
//! Every metric here compares two slices of [`Element`] ids and only ever
//! tests elements for equality, so the same code scores character strings
//! (elements are code points) and symbol sequences (elements are symbol ids).
//! All scores lie in `[0, 1]` and two equal non-empty sequences score `1`.
//!
//! Empty inputs follow one convention throughout: two empty sequences score
//! `1`, one empty sequence against a non-empty one scores `0`. Monge-Elkan is
//! the exception; it rejects an empty left operand.

mod edit;
mod isub;
mod jaro;
mod qgram;
mod sets;

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub use edit::{
    levenshtein_distance, levenshtein_sim, needleman_wunsch_sim, smith_waterman_sim,
    NeedlemanWunsch, SmithWaterman,
};
pub use isub::isub;
pub use jaro::{jaro, jaro_winkler, jaro_winkler_with};
pub use qgram::{qgram_sim, qgram_sim_with};
pub use sets::{jaccard2, monge_elkan_seq};

/// Opaque element id. Characters map to their code point, symbols to their id.
pub type Element = u32;

/// An owned sequence of elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ElementSequence(Vec<Element>);

impl ElementSequence {
    pub fn new(elements: Vec<Element>) -> Self {
        Self(elements)
    }

    /// Code points of `text`, in order.
    pub fn from_text(text: &str) -> Self {
        Self(text.chars().map(Element::from).collect())
    }

    pub fn into_inner(self) -> Vec<Element> {
        self.0
    }
}

impl Deref for ElementSequence {
    type Target = [Element];

    fn deref(&self) -> &[Element] {
        &self.0
    }
}

impl From<Vec<Element>> for ElementSequence {
    fn from(elements: Vec<Element>) -> Self {
        Self(elements)
    }
}

impl From<&str> for ElementSequence {
    fn from(text: &str) -> Self {
        Self::from_text(text)
    }
}

/// Anything that scores two element sequences.
pub trait SequenceMetric {
    fn similarity(&self, a: &[Element], b: &[Element]) -> Result<f64>;
}

impl<F> SequenceMetric for F
where
    F: Fn(&[Element], &[Element]) -> f64,
{
    fn similarity(&self, a: &[Element], b: &[Element]) -> Result<f64> {
        Ok(self(a, b))
    }
}

/// Numeric code of a base metric, `1..=9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetricCode(u8);

impl MetricCode {
    pub fn new(code: u32) -> Result<Self> {
        match code {
            1..=9 => Ok(Self(code as u8)),
            _ => Err(Error::UnknownMetricCode(code)),
        }
    }

    pub fn get(self) -> u32 {
        u32::from(self.0)
    }

    /// All nine codes in ascending order.
    pub fn all() -> impl Iterator<Item = MetricCode> {
        (1..=9).map(MetricCode)
    }

    pub fn metric(self) -> BaseMetric {
        BaseMetric::ALL[usize::from(self.0) - 1]
    }
}

impl TryFrom<u32> for MetricCode {
    type Error = Error;

    fn try_from(code: u32) -> Result<Self> {
        Self::new(code)
    }
}

impl fmt::Display for MetricCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The nine base metrics, each with its default parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseMetric {
    JaroWinkler,
    Levenshtein,
    NeedlemanWunsch,
    SmithWaterman,
    QGram,
    MongeElkan,
    Jaro,
    Jaccard2,
    ISub,
}

impl BaseMetric {
    /// Indexed by `code - 1`.
    pub const ALL: [BaseMetric; 9] = [
        BaseMetric::JaroWinkler,
        BaseMetric::Levenshtein,
        BaseMetric::NeedlemanWunsch,
        BaseMetric::SmithWaterman,
        BaseMetric::QGram,
        BaseMetric::MongeElkan,
        BaseMetric::Jaro,
        BaseMetric::Jaccard2,
        BaseMetric::ISub,
    ];

    pub fn code(self) -> MetricCode {
        let index = Self::ALL.iter().position(|&m| m == self).unwrap();
        MetricCode(index as u8 + 1)
    }

    /// Lowercase selector name, e.g. `jarowinkler`.
    pub fn name(self) -> &'static str {
        match self {
            BaseMetric::JaroWinkler => "jarowinkler",
            BaseMetric::Levenshtein => "levenshtein",
            BaseMetric::NeedlemanWunsch => "needlemanwunsch",
            BaseMetric::SmithWaterman => "smithwaterman",
            BaseMetric::QGram => "qgram",
            BaseMetric::MongeElkan => "mongeelkan",
            BaseMetric::Jaro => "jaro",
            BaseMetric::Jaccard2 => "jaccard2",
            BaseMetric::ISub => "isub",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }

    /// Only Monge-Elkan can fail, on an empty left operand.
    pub fn score(self, a: &[Element], b: &[Element]) -> Result<f64> {
        Ok(match self {
            BaseMetric::JaroWinkler => jaro_winkler(a, b),
            BaseMetric::Levenshtein => levenshtein_sim(a, b),
            BaseMetric::NeedlemanWunsch => needleman_wunsch_sim(a, b),
            BaseMetric::SmithWaterman => smith_waterman_sim(a, b),
            BaseMetric::QGram => qgram_sim(a, b),
            BaseMetric::MongeElkan => return monge_elkan_seq(a, b),
            BaseMetric::Jaro => jaro(a, b),
            BaseMetric::Jaccard2 => jaccard2(a, b),
            BaseMetric::ISub => isub(a, b),
        })
    }

    /// Whether `score(a, b) == score(b, a)` for all inputs.
    pub fn is_symmetric(self) -> bool {
        self != BaseMetric::MongeElkan
    }
}

impl SequenceMetric for BaseMetric {
    fn similarity(&self, a: &[Element], b: &[Element]) -> Result<f64> {
        self.score(a, b)
    }
}

impl fmt::Display for BaseMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks a base metric up by its numeric code.
pub fn metric_by_code(code: u32) -> Result<BaseMetric> {
    MetricCode::new(code).map(MetricCode::metric)
}
