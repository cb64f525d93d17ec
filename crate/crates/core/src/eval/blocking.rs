use std::collections::{BTreeSet, HashMap};

use super::dataset::{LabeledPair, PairDataset, Record};
use crate::symbolizer::tokenize;

/// Candidate pairs for record linkage: every unordered pair of records that
/// share at least one token, labeled correct when their ids agree. Pairs come
/// out ordered by `(i, j)` record indices with `i < j`.
pub fn generate_pairs_from_records(records: &[Record]) -> PairDataset {
    let mut blocks: HashMap<String, Vec<usize>> = HashMap::new();
    for (index, record) in records.iter().enumerate() {
        let mut tokens: Vec<String> = tokenize(&record.text)
            .into_iter()
            .map(|t| t.as_str().to_owned())
            .collect();
        tokens.sort_unstable();
        tokens.dedup();
        for token in tokens {
            blocks.entry(token).or_default().push(index);
        }
    }

    let mut candidates = BTreeSet::new();
    for members in blocks.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                candidates.insert((i, j));
            }
        }
    }

    let pairs = candidates
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (&records[i], &records[j]);
            LabeledPair::new(a.text.clone(), b.text.clone(), a.id == b.id)
        })
        .collect();
    PairDataset::new(pairs)
}
