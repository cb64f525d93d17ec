use std::collections::HashMap;

use super::Element;

const DEFAULT_Q: usize = 3;

/// Padded q-gram similarity with `q = 3`.
pub fn qgram_sim(a: &[Element], b: &[Element]) -> f64 {
    qgram_sim_with(a, b, DEFAULT_Q)
}

/// Each sequence is padded with `q - 1` sentinels on both sides; the score is
/// `1 - L1(grams(a), grams(b)) / (N_a + N_b)` where `N_x = |x| + q - 1`.
///
/// Panics if `q` is zero.
pub fn qgram_sim_with(a: &[Element], b: &[Element], q: usize) -> f64 {
    assert!(q > 0, "q-gram length must be positive");
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }

    // `None` is the sentinel, so it can never collide with a real element.
    let pad = |s: &[Element]| -> Vec<Option<Element>> {
        let mut padded = vec![None; q - 1];
        padded.extend(s.iter().copied().map(Some));
        padded.extend(std::iter::repeat_n(None, q - 1));
        padded
    };
    let (pa, pb) = (pad(a), pad(b));

    let mut balance: HashMap<&[Option<Element>], i64> = HashMap::new();
    for gram in pa.windows(q) {
        *balance.entry(gram).or_default() += 1;
    }
    for gram in pb.windows(q) {
        *balance.entry(gram).or_default() -= 1;
    }
    let distance: i64 = balance.values().map(|c| c.abs()).sum();
    let total = (a.len() + q - 1 + b.len() + q - 1) as f64;
    1.0 - distance as f64 / total
}
