use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::seqmetrics::jaro_winkler;
use crate::symbolizer::{tokenize, Token};

/// Token sets, `|A ∩ B| / |A ∪ B|`.
pub fn jaccard_tokens(s1: &str, s2: &str) -> f64 {
    let a: HashSet<Token> = tokenize(s1).into_iter().collect();
    let b: HashSet<Token> = tokenize(s2).into_iter().collect();
    let union = a.union(&b).count();
    if union == 0 {
        return 1.0;
    }
    a.intersection(&b).count() as f64 / union as f64
}

/// Document frequencies over a corpus of strings, one document per string.
#[derive(Clone, Debug, Default)]
pub struct CorpusStats {
    document_count: usize,
    document_frequency: HashMap<String, usize>,
}

impl CorpusStats {
    pub fn from_documents<'a, I>(documents: I) -> Self
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut stats = CorpusStats::default();
        for doc in documents {
            stats.document_count += 1;
            let distinct: HashSet<Token> = tokenize(doc).into_iter().collect();
            for token in distinct {
                *stats
                    .document_frequency
                    .entry(token.as_str().to_owned())
                    .or_default() += 1;
            }
        }
        stats
    }

    /// Never below one, so an empty corpus still yields finite weights.
    pub fn document_count(&self) -> usize {
        self.document_count.max(1)
    }

    /// Unknown tokens count as appearing in one document.
    pub fn document_frequency(&self, token: &str) -> usize {
        self.document_frequency
            .get(token)
            .copied()
            .unwrap_or(1)
            .max(1)
    }

    pub fn idf(&self, token: &str) -> f64 {
        (self.document_count() as f64 / self.document_frequency(token) as f64).ln()
    }

    /// `log(tf + 1) * log(N / df)` per distinct token of `s`.
    pub fn weights(&self, s: &str) -> BTreeMap<String, f64> {
        let mut tf: BTreeMap<String, usize> = BTreeMap::new();
        for token in tokenize(s) {
            *tf.entry(token.as_str().to_owned()).or_default() += 1;
        }
        tf.into_iter()
            .map(|(token, count)| {
                let w = ((count + 1) as f64).ln() * self.idf(&token);
                (token, w)
            })
            .collect()
    }

    fn unit_weights(&self, s: &str) -> Option<BTreeMap<String, f64>> {
        let mut weights = self.weights(s);
        let norm = weights.values().map(|w| w * w).sum::<f64>().sqrt();
        if norm == 0.0 {
            return None;
        }
        weights.values_mut().for_each(|w| *w /= norm);
        Some(weights)
    }
}

fn same_token_multiset(s1: &str, s2: &str) -> bool {
    let mut a = tokenize(s1);
    let mut b = tokenize(s2);
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Cosine of the TF-IDF vectors.
///
/// Strings with the same token multiset score 1 even when every weight is
/// zero; otherwise an all-zero vector scores 0.
pub fn tfidf_cosine(stats: &CorpusStats, s1: &str, s2: &str) -> f64 {
    if same_token_multiset(s1, s2) {
        return 1.0;
    }
    let (Some(a), Some(b)) = (stats.unit_weights(s1), stats.unit_weights(s2)) else {
        return 0.0;
    };
    let dot: f64 = a
        .iter()
        .filter_map(|(token, wa)| b.get(token).map(|wb| wa * wb))
        .sum();
    dot.clamp(0.0, 1.0)
}

/// SoftTFIDF with Jaro-Winkler between tokens.
///
/// Every token `w` of `s1` whose closest token `v` of `s2` scores at least
/// `theta` contributes `V(w, s1) * V(v, s2) * JW(w, v)`, with `V` the
/// normalized TF-IDF weights. The sum is clamped to 1 since several tokens of
/// `s1` may lean on the same token of `s2`.
pub fn soft_tfidf(stats: &CorpusStats, s1: &str, s2: &str, theta: f64) -> f64 {
    if same_token_multiset(s1, s2) {
        return 1.0;
    }
    let (Some(a), Some(b)) = (stats.unit_weights(s1), stats.unit_weights(s2)) else {
        return 0.0;
    };
    let b_elements: Vec<(Vec<u32>, f64)> = b
        .iter()
        .map(|(token, w)| (token.chars().map(u32::from).collect(), *w))
        .collect();

    let mut total = 0.0;
    for (token, wa) in &a {
        let elements: Vec<u32> = token.chars().map(u32::from).collect();
        let mut closest: Option<(f64, f64)> = None;
        for (other, wb) in &b_elements {
            let sim = jaro_winkler(&elements, other);
            if closest.is_none_or(|(best, _)| sim > best) {
                closest = Some((sim, *wb));
            }
        }
        if let Some((sim, wb)) = closest {
            if sim >= theta {
                total += wa * wb * sim;
            }
        }
    }
    total.clamp(0.0, 1.0)
}

/// Mean over the tokens of `s1` of the best Jaro-Winkler score against the
/// tokens of `s2`.
pub fn monge_elkan_hybrid(s1: &str, s2: &str) -> Result<f64> {
    let a: Vec<Vec<u32>> = tokenize(s1).iter().map(Token::elements).collect();
    let b: Vec<Vec<u32>> = tokenize(s2).iter().map(Token::elements).collect();
    if a.is_empty() {
        return Err(Error::EmptyLeftOperand);
    }
    if b.is_empty() {
        return Ok(0.0);
    }
    let sum: f64 = a
        .iter()
        .map(|x| b.iter().map(|y| jaro_winkler(x, y)).fold(0.0, f64::max))
        .sum();
    Ok(sum / a.len() as f64)
}
