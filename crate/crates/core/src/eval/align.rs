use crate::error::{Error, Result};
use crate::metric::StringMetric;

/// A term matched to a label.
#[derive(Clone, Debug, PartialEq)]
pub struct Alignment {
    pub term: String,
    pub label: String,
    pub score: f64,
}

/// For each term, every label scoring at least `threshold`, best first
/// (label order on ties). Terms keep their input order.
pub fn align_lexicon(
    terms: &[String],
    labels: &[String],
    metric: &dyn StringMetric,
    threshold: f64,
) -> Result<Vec<Alignment>> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidThreshold(threshold));
    }
    let mut out = Vec::new();
    for term in terms {
        let mut matches: Vec<(usize, f64)> = Vec::new();
        for (index, label) in labels.iter().enumerate() {
            let score = metric.score(term, label)?;
            if score >= threshold {
                matches.push((index, score));
            }
        }
        matches.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        out.extend(matches.into_iter().map(|(index, score)| Alignment {
            term: term.clone(),
            label: labels[index].clone(),
            score,
        }));
    }
    Ok(out)
}
