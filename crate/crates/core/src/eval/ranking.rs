use rayon::prelude::*;

use super::dataset::PairDataset;
use crate::error::{Error, Result};
use crate::metric::StringMetric;

/// One ranked pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankedPair {
    /// Position of the pair in the dataset.
    pub index: usize,
    pub score: f64,
    pub correct: bool,
}

/// Pairs sorted by descending score; equal scores keep dataset order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScoredRanking {
    entries: Vec<RankedPair>,
}

impl ScoredRanking {
    /// `scored[i]` is the `(score, correct)` of dataset pair `i`.
    pub fn new(scored: impl IntoIterator<Item = (f64, bool)>) -> Self {
        let mut entries: Vec<RankedPair> = scored
            .into_iter()
            .enumerate()
            .map(|(index, (score, correct))| RankedPair {
                index,
                score,
                correct,
            })
            .collect();
        entries.sort_by(|a, b| b.score.total_cmp(&a.score).then(a.index.cmp(&b.index)));
        Self { entries }
    }

    /// A ranking given directly as labels from rank 1 downwards.
    pub fn from_ranked_labels(labels: &[bool]) -> Self {
        let n = labels.len();
        Self::new(labels.iter().enumerate().map(|(i, &c)| ((n - i) as f64, c)))
    }

    pub fn entries(&self) -> &[RankedPair] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Non-interpolated average precision: the precision at the rank of each
/// correct pair, summed and divided by `m`.
pub fn avg_precision(ranking: &ScoredRanking, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::UndefinedAveragePrecision);
    }
    let mut correct_so_far = 0usize;
    let mut sum = 0.0;
    for (i, entry) in ranking.entries.iter().enumerate() {
        if entry.correct {
            correct_so_far += 1;
            sum += correct_so_far as f64 / (i + 1) as f64;
        }
    }
    Ok(sum / m as f64)
}

/// Average precision of one metric on one dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    pub metric: String,
    pub avg_precision: f64,
    pub n: usize,
    pub m: usize,
}

/// Scores every pair, ranks them and computes average precision.
///
/// Pairs are scored in parallel; the ranking only depends on the collected
/// scores, so the result does not depend on the thread count.
pub fn evaluate(metric: &dyn StringMetric, dataset: &PairDataset) -> Result<EvalReport> {
    let m = dataset.m();
    if m == 0 {
        return Err(Error::UndefinedAveragePrecision);
    }
    let scored = dataset
        .pairs
        .par_iter()
        .enumerate()
        .map(|(index, pair)| {
            metric
                .score(&pair.s1, &pair.s2)
                .map(|score| (score, pair.correct))
                .map_err(|e| Error::Pair {
                    index,
                    source: Box::new(e),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let ranking = ScoredRanking::new(scored);
    Ok(EvalReport {
        metric: metric.name(),
        avg_precision: avg_precision(&ranking, m)?,
        n: dataset.n(),
        m,
    })
}

/// One report per metric, best first; equal scores are ordered by name.
pub fn rank_metrics(
    metrics: &[Box<dyn StringMetric>],
    dataset: &PairDataset,
) -> Result<Vec<EvalReport>> {
    let mut reports = metrics
        .iter()
        .map(|metric| evaluate(metric.as_ref(), dataset))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| {
        b.avg_precision
            .total_cmp(&a.avg_precision)
            .then_with(|| a.metric.cmp(&b.metric))
    });
    Ok(reports)
}
