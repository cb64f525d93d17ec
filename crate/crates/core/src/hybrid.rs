//! The `liuppa:i,j` hybrid metrics.
//!
//! Base metric `i` compares tokens and decides which ones share a symbol
//! (threshold `epsilon`); base metric `j` then compares the two symbol
//! sequences. Nine base metrics give 81 combinations.

use std::fmt;

use crate::error::{Error, Result};
use crate::seqmetrics::MetricCode;
use crate::symbolizer::{symbolize_pair, tokenize};

/// Default token threshold for a base metric used at the token level.
pub fn default_threshold(code: MetricCode) -> f64 {
    match code.get() {
        1 => 0.84,
        2 => 0.79,
        3 => 0.88,
        4 => 0.83,
        5 => 0.60,
        6 => 0.84,
        7 => 0.80,
        8 => 0.80,
        9 => 0.80,
        _ => unreachable!("MetricCode is always in 1..=9"),
    }
}

/// One hybrid metric: token metric, sequence metric and token threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HybridConfig {
    pub mu1: MetricCode,
    pub mu2: MetricCode,
    pub epsilon: f64,
}

impl HybridConfig {
    /// Uses the default threshold of `mu1`.
    pub fn new(mu1: MetricCode, mu2: MetricCode) -> Self {
        Self {
            mu1,
            mu2,
            epsilon: default_threshold(mu1),
        }
    }

    /// Builds from raw codes, e.g. `from_codes(1, 1)`.
    pub fn from_codes(mu1: u32, mu2: u32) -> Result<Self> {
        Ok(Self::new(MetricCode::new(mu1)?, MetricCode::new(mu2)?))
    }

    /// Overrides the token threshold; it must lie in `(0, 1]`.
    pub fn with_epsilon(self, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidThreshold(epsilon));
        }
        Ok(Self { epsilon, ..self })
    }

    pub fn has_default_epsilon(&self) -> bool {
        self.epsilon == default_threshold(self.mu1)
    }

    pub fn score(&self, s1: &str, s2: &str) -> Result<f64> {
        liuppa_score(self, s1, s2)
    }
}

/// `liuppa:i,j`, with `:eps=` appended when the threshold is not the default.
impl fmt::Display for HybridConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "liuppa:{},{}", self.mu1, self.mu2)?;
        if !self.has_default_epsilon() {
            write!(f, ":eps={}", self.epsilon)?;
        }
        Ok(())
    }
}

/// Tokenize, symbolize with `(mu1, epsilon)`, score the symbols with `mu2`.
pub fn liuppa_score(config: &HybridConfig, s1: &str, s2: &str) -> Result<f64> {
    let t1 = tokenize(s1);
    let t2 = tokenize(s2);
    match (t1.is_empty(), t2.is_empty()) {
        (true, true) => return Ok(1.0),
        (true, false) | (false, true) => return Ok(0.0),
        _ => {}
    }
    let (a, b) = symbolize_pair(&t1, &t2, &config.mu1.metric(), config.epsilon)?;
    config.mu2.metric().score(&a, &b)
}

/// All 81 combinations with default thresholds, `mu1`-major.
pub fn enumerate_combinations() -> Vec<HybridConfig> {
    MetricCode::all()
        .flat_map(|i| MetricCode::all().map(move |j| HybridConfig::new(i, j)))
        .collect()
}
