//! String-level metrics behind one trait, so the evaluation harness can rank
//! hybrid metrics and baselines side by side.

use std::sync::Arc;

use crate::baselines::{self, CorpusStats, DEFAULT_SOFT_TFIDF_THETA};
use crate::error::Result;
use crate::hybrid::{enumerate_combinations, HybridConfig};
use crate::seqmetrics::{BaseMetric, ElementSequence};

/// A similarity between two strings, in `[0, 1]`.
pub trait StringMetric: Send + Sync {
    /// Selector name, e.g. `liuppa:1,1` or `tfidf`.
    fn name(&self) -> String;

    fn score(&self, s1: &str, s2: &str) -> Result<f64>;
}

impl StringMetric for HybridConfig {
    fn name(&self) -> String {
        self.to_string()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        HybridConfig::score(self, s1, s2)
    }
}

/// A base metric applied to whole lowercased strings, character by character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterMetric(pub BaseMetric);

impl StringMetric for CharacterMetric {
    fn name(&self) -> String {
        self.0.name().to_owned()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        let a = ElementSequence::from_text(&s1.to_lowercase());
        let b = ElementSequence::from_text(&s2.to_lowercase());
        self.0.score(&a, &b)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct JaccardTokens;

impl StringMetric for JaccardTokens {
    fn name(&self) -> String {
        "jaccard".into()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        Ok(baselines::jaccard_tokens(s1, s2))
    }
}

#[derive(Clone, Debug)]
pub struct Tfidf {
    pub stats: Arc<CorpusStats>,
}

impl StringMetric for Tfidf {
    fn name(&self) -> String {
        "tfidf".into()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        Ok(baselines::tfidf_cosine(&self.stats, s1, s2))
    }
}

#[derive(Clone, Debug)]
pub struct SoftTfidf {
    pub stats: Arc<CorpusStats>,
    pub theta: f64,
}

impl StringMetric for SoftTfidf {
    fn name(&self) -> String {
        if self.theta == DEFAULT_SOFT_TFIDF_THETA {
            "softtfidf".into()
        } else {
            format!("softtfidf:theta={}", self.theta)
        }
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        Ok(baselines::soft_tfidf(&self.stats, s1, s2, self.theta))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MongeElkanHybrid;

impl StringMetric for MongeElkanHybrid {
    fn name(&self) -> String {
        "mongeelkan_hybrid".into()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        baselines::monge_elkan_hybrid(s1, s2)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TagLink;

impl StringMetric for TagLink {
    fn name(&self) -> String {
        "taglink".into()
    }

    fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        Ok(baselines::taglink(s1, s2))
    }
}

/// Character metrics used as whole-string baselines (Jaccard_2 is not one).
pub const CHARACTER_BASELINES: [BaseMetric; 8] = [
    BaseMetric::JaroWinkler,
    BaseMetric::MongeElkan,
    BaseMetric::Jaro,
    BaseMetric::Levenshtein,
    BaseMetric::NeedlemanWunsch,
    BaseMetric::SmithWaterman,
    BaseMetric::QGram,
    BaseMetric::ISub,
];

/// The 13 baselines: 8 character-based, 2 token-based, 3 hybrid.
pub fn baseline_suite(stats: Arc<CorpusStats>) -> Vec<Box<dyn StringMetric>> {
    let mut suite: Vec<Box<dyn StringMetric>> = CHARACTER_BASELINES
        .into_iter()
        .map(|m| Box::new(CharacterMetric(m)) as Box<dyn StringMetric>)
        .collect();
    suite.push(Box::new(JaccardTokens));
    suite.push(Box::new(Tfidf {
        stats: stats.clone(),
    }));
    suite.push(Box::new(SoftTfidf {
        stats,
        theta: DEFAULT_SOFT_TFIDF_THETA,
    }));
    suite.push(Box::new(TagLink));
    suite.push(Box::new(MongeElkanHybrid));
    suite
}

/// The 81 hybrid configurations followed by the 13 baselines.
pub fn standard_suite(stats: Arc<CorpusStats>) -> Vec<Box<dyn StringMetric>> {
    let mut suite: Vec<Box<dyn StringMetric>> = enumerate_combinations()
        .into_iter()
        .map(|c| Box::new(c) as Box<dyn StringMetric>)
        .collect();
    suite.extend(baseline_suite(stats));
    suite
}
