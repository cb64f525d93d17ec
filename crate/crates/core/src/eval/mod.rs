//! Evaluation harness.
//!
//! Pairs are scored, sorted by descending score (ties keep dataset order) and
//! summarized by non-interpolated average precision. The module also builds
//! candidate pairs from records by token blocking, calibrates token
//! thresholds on labeled token pairs and aligns a lexicon against labels.

mod align;
mod blocking;
mod calibrate;
mod dataset;
mod ranking;

pub use align::{align_lexicon, Alignment};
pub use blocking::generate_pairs_from_records;
pub use calibrate::{calibrate_epsilon, calibration_grid, f1_at, TokenPair};
pub use dataset::{
    load_pairs, load_records, parse_lines, parse_records, LabeledPair, PairDataset, Record,
};
pub use ranking::{avg_precision, evaluate, rank_metrics, EvalReport, RankedPair, ScoredRanking};

use std::sync::Arc;

use crate::baselines::CorpusStats;

impl CorpusStats {
    /// Document frequencies over every string of the dataset, both sides.
    pub fn from_dataset(dataset: &PairDataset) -> Arc<CorpusStats> {
        Arc::new(CorpusStats::from_documents(dataset.strings()))
    }
}
