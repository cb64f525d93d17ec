use super::Element;

const PREFIX_SCALE: f64 = 0.1;
const MAX_PREFIX: usize = 4;

/// Jaro similarity.
///
/// Elements match when equal and at most `max(|a|, |b|) / 2 - 1` positions
/// apart; each element of `b` matches at most once, first come first served.
/// With `m` matches and `t` half the number of matched elements out of order,
/// the score is `(m/|a| + m/|b| + (m - t)/m) / 3`.
pub fn jaro(a: &[Element], b: &[Element]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }

    let window = (a.len().max(b.len()) / 2).saturating_sub(1);
    let mut b_taken = vec![false; b.len()];
    let mut a_matched = Vec::with_capacity(a.len().min(b.len()));

    for (i, x) in a.iter().enumerate() {
        let lo = i.saturating_sub(window);
        let hi = (i + window + 1).min(b.len());
        for j in lo..hi {
            if !b_taken[j] && b[j] == *x {
                b_taken[j] = true;
                a_matched.push(*x);
                break;
            }
        }
    }

    let m = a_matched.len();
    if m == 0 {
        return 0.0;
    }

    let b_matched = b
        .iter()
        .zip(&b_taken)
        .filter_map(|(e, &taken)| taken.then_some(e));
    let out_of_order = a_matched
        .iter()
        .zip(b_matched)
        .filter(|(x, y)| x != y)
        .count();

    let m = m as f64;
    let t = out_of_order as f64 / 2.0;
    (m / a.len() as f64 + m / b.len() as f64 + (m - t) / m) / 3.0
}

/// Jaro-Winkler with the usual prefix scale 0.1 and prefix cap 4.
pub fn jaro_winkler(a: &[Element], b: &[Element]) -> f64 {
    jaro_winkler_with(a, b, PREFIX_SCALE, MAX_PREFIX)
}

/// `j + l * p * (1 - j)` where `j` is the Jaro score and `l` the common
/// prefix length capped at `max_prefix`. `prefix_scale * max_prefix` must not
/// exceed 1 for the result to stay in range.
pub fn jaro_winkler_with(
    a: &[Element],
    b: &[Element],
    prefix_scale: f64,
    max_prefix: usize,
) -> f64 {
    let j = jaro(a, b);
    let prefix = a
        .iter()
        .zip(b)
        .take_while(|(x, y)| x == y)
        .count()
        .min(max_prefix);
    j + prefix as f64 * prefix_scale * (1.0 - j)
}
