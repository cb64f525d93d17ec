use super::Element;

/// Unit-cost edit distance (insert, delete, substitute).
pub fn levenshtein_distance(a: &[Element], b: &[Element]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut curr = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        curr[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let substitute = prev[j] + usize::from(x != y);
            curr[j + 1] = substitute.min(prev[j + 1] + 1).min(curr[j] + 1);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// `1 - d(a, b) / max(|a|, |b|)`.
pub fn levenshtein_sim(a: &[Element], b: &[Element]) -> f64 {
    let longest = a.len().max(b.len());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein_distance(a, b) as f64 / longest as f64
}

/// Global alignment cost model: matches are free.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeedlemanWunsch {
    pub gap_cost: f64,
    pub mismatch_cost: f64,
}

impl Default for NeedlemanWunsch {
    fn default() -> Self {
        Self {
            gap_cost: 2.0,
            mismatch_cost: 1.0,
        }
    }
}

impl NeedlemanWunsch {
    /// Minimal global alignment cost.
    pub fn cost(&self, a: &[Element], b: &[Element]) -> f64 {
        let mut prev: Vec<f64> = (0..=b.len()).map(|j| j as f64 * self.gap_cost).collect();
        let mut curr = vec![0.0; b.len() + 1];
        for (i, x) in a.iter().enumerate() {
            curr[0] = (i + 1) as f64 * self.gap_cost;
            for (j, y) in b.iter().enumerate() {
                let pair = if x == y { 0.0 } else { self.mismatch_cost };
                curr[j + 1] = (prev[j] + pair)
                    .min(prev[j + 1] + self.gap_cost)
                    .min(curr[j] + self.gap_cost);
            }
            std::mem::swap(&mut prev, &mut curr);
        }
        prev[b.len()]
    }

    /// Cost normalized by `max(|a|, |b|) * max(gap, mismatch)`, turned into a
    /// similarity.
    pub fn similarity(&self, a: &[Element], b: &[Element]) -> f64 {
        let longest = a.len().max(b.len());
        if longest == 0 {
            return 1.0;
        }
        let worst = longest as f64 * self.gap_cost.max(self.mismatch_cost);
        (1.0 - self.cost(a, b) / worst).clamp(0.0, 1.0)
    }
}

/// Needleman-Wunsch with gap cost 2 and mismatch cost 1.
pub fn needleman_wunsch_sim(a: &[Element], b: &[Element]) -> f64 {
    NeedlemanWunsch::default().similarity(a, b)
}

/// Local alignment scores. `mismatch` and `gap` are negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmithWaterman {
    pub match_score: f64,
    pub mismatch: f64,
    pub gap: f64,
}

impl Default for SmithWaterman {
    fn default() -> Self {
        Self {
            match_score: 1.0,
            mismatch: -2.0,
            gap: -0.5,
        }
    }
}

impl SmithWaterman {
    /// Best local alignment score, linear gaps.
    pub fn best_local(&self, a: &[Element], b: &[Element]) -> f64 {
        let mut best = 0.0f64;
        let mut prev = vec![0.0f64; b.len() + 1];
        let mut curr = vec![0.0f64; b.len() + 1];
        for x in a {
            curr[0] = 0.0;
            for (j, y) in b.iter().enumerate() {
                let pair = if x == y {
                    self.match_score
                } else {
                    self.mismatch
                };
                let cell = (prev[j] + pair)
                    .max(prev[j + 1] + self.gap)
                    .max(curr[j] + self.gap)
                    .max(0.0);
                curr[j + 1] = cell;
                best = best.max(cell);
            }
            std::mem::swap(&mut prev, &mut curr);
        }
        best
    }

    /// Best local score over the best achievable, `min(|a|, |b|) * match`.
    pub fn similarity(&self, a: &[Element], b: &[Element]) -> f64 {
        if a.is_empty() && b.is_empty() {
            return 1.0;
        }
        let shortest = a.len().min(b.len());
        if shortest == 0 {
            return 0.0;
        }
        let ceiling = shortest as f64 * self.match_score;
        (self.best_local(a, b) / ceiling).clamp(0.0, 1.0)
    }
}

/// Smith-Waterman with match +1, mismatch -2, gap -0.5.
pub fn smith_waterman_sim(a: &[Element], b: &[Element]) -> f64 {
    SmithWaterman::default().similarity(a, b)
}
