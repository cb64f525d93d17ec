use crate::error::{Error, Result};
use crate::seqmetrics::{ElementSequence, MetricCode};

/// Two tokens and whether they should be treated as the same word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenPair {
    pub t1: String,
    pub t2: String,
    pub equivalent: bool,
}

impl TokenPair {
    pub fn new(t1: impl Into<String>, t2: impl Into<String>, equivalent: bool) -> Self {
        Self {
            t1: t1.into(),
            t2: t2.into(),
            equivalent,
        }
    }
}

/// `0.50, 0.51, ..., 0.99`.
pub fn calibration_grid() -> impl Iterator<Item = f64> {
    (50..=99).map(|k| f64::from(k) / 100.0)
}

fn token_scores(pairs: &[TokenPair], mu1: MetricCode) -> Result<Vec<(f64, bool)>> {
    let metric = mu1.metric();
    pairs
        .iter()
        .map(|p| {
            let a = ElementSequence::from_text(&p.t1.to_lowercase());
            let b = ElementSequence::from_text(&p.t2.to_lowercase());
            Ok((metric.score(&a, &b)?, p.equivalent))
        })
        .collect()
}

fn f1(scores: &[(f64, bool)], epsilon: f64) -> f64 {
    let (mut tp, mut fp, mut fn_) = (0usize, 0usize, 0usize);
    for &(score, equivalent) in scores {
        match (score >= epsilon, equivalent) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, true) => fn_ += 1,
            (false, false) => {}
        }
    }
    if tp == 0 {
        return 0.0;
    }
    2.0 * tp as f64 / (2 * tp + fp + fn_) as f64
}

/// F1 of the rule "equivalent iff `mu1 >= epsilon`".
pub fn f1_at(pairs: &[TokenPair], mu1: MetricCode, epsilon: f64) -> Result<f64> {
    Ok(f1(&token_scores(pairs, mu1)?, epsilon))
}

/// The grid threshold with the best F1; the largest one wins ties.
pub fn calibrate_epsilon(pairs: &[TokenPair], mu1: MetricCode) -> Result<f64> {
    let positives = pairs.iter().filter(|p| p.equivalent).count();
    if positives == 0 || positives == pairs.len() {
        return Err(Error::CannotCalibrate(
            "need at least one equivalent and one non-equivalent pair",
        ));
    }
    let scores = token_scores(pairs, mu1)?;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for epsilon in calibration_grid() {
        let score = f1(&scores, epsilon);
        if score >= best.0 {
            best = (score, epsilon);
        }
    }
    Ok(best.1)
}
