use super::assignment::{greedy_assignment, max_weight_assignment};
use crate::seqmetrics::Element;
use crate::symbolizer::{tokenize, Token};

/// Above this many tokens on either side the assignment is solved greedily.
pub const EXACT_ASSIGNMENT_LIMIT: usize = 16;

/// Character-level comparison of two tokens: the number of characters they
/// share in order (longest common subsequence) and the Dice ratio
/// `2 * matched / (|t| + |u|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TokenMatch {
    pub matched: usize,
    pub similarity: f64,
}

pub fn token_match(t: &[Element], u: &[Element]) -> TokenMatch {
    if t.is_empty() && u.is_empty() {
        return TokenMatch {
            matched: 0,
            similarity: 1.0,
        };
    }
    let matched = lcs_len(t, u);
    TokenMatch {
        matched,
        similarity: 2.0 * matched as f64 / (t.len() + u.len()) as f64,
    }
}

fn lcs_len(a: &[Element], b: &[Element]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut curr = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            curr[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(curr[j])
            };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// TagLink: tokens are paired one-to-one to maximize the total matched
/// character mass `similarity * matched`, and that total is divided by the
/// character count of the shorter string. Identical strings score 1; a short
/// string whose single token is nearly contained in a longer one scores high.
pub fn taglink(s1: &str, s2: &str) -> f64 {
    let a: Vec<Vec<Element>> = tokenize(s1).iter().map(Token::elements).collect();
    let b: Vec<Vec<Element>> = tokenize(s2).iter().map(Token::elements).collect();
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return 1.0,
        (true, false) | (false, true) => return 0.0,
        _ => {}
    }

    let weights: Vec<Vec<f64>> = a
        .iter()
        .map(|t| {
            b.iter()
                .map(|u| {
                    let m = token_match(t, u);
                    m.similarity * m.matched as f64
                })
                .collect()
        })
        .collect();

    let pairs = if a.len().max(b.len()) <= EXACT_ASSIGNMENT_LIMIT {
        max_weight_assignment(&weights)
    } else {
        greedy_assignment(&weights)
    };
    let mass: f64 = pairs.iter().map(|&(i, j)| weights[i][j]).sum();

    let chars_a: usize = a.iter().map(Vec::len).sum();
    let chars_b: usize = b.iter().map(Vec::len).sum();
    (mass / chars_a.min(chars_b) as f64).clamp(0.0, 1.0)
}
