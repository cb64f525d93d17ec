use super::Element;

/// Hamacher product parameter of the difference term.
const HAMACHER_P: f64 = 0.6;
/// Common substrings must be longer than this to count.
const MIN_SUBSTRING: usize = 2;
const PREFIX_SCALE: f64 = 0.1;
const MAX_PREFIX: usize = 4;

/// I-Sub similarity mapped from `[-1, 1]` onto `[0, 1]`.
///
/// The raw score is `comm - diff + winkler`:
/// * `comm` is twice the mass of common substrings removed one at a time,
///   longest first, while they exceed two elements, over `|a| + |b|`;
/// * `diff` is the Hamacher product of the unmatched fractions of `a` and `b`;
/// * `winkler` is the usual prefix bonus `l * 0.1 * (1 - comm)`.
///
/// Identical sequences score 1 even when they are too short for the substring
/// rule to see them.
pub fn isub(a: &[Element], b: &[Element]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    if a == b {
        return 1.0;
    }

    let (len_a, len_b) = (a.len() as f64, b.len() as f64);
    let common = common_substring_mass(a, b) as f64;
    let commonality = 2.0 * common / (len_a + len_b);

    let unmatched_a = (len_a - common).max(0.0) / len_a;
    let unmatched_b = (len_b - common).max(0.0) / len_b;
    let sum = unmatched_a + unmatched_b;
    let product = unmatched_a * unmatched_b;
    let dissimilarity = if sum - product != 0.0 {
        product / (HAMACHER_P + (1.0 - HAMACHER_P) * (sum - product))
    } else {
        0.0
    };

    let prefix = a
        .iter()
        .zip(b)
        .take_while(|(x, y)| x == y)
        .count()
        .min(MAX_PREFIX);
    let winkler = prefix as f64 * PREFIX_SCALE * (1.0 - commonality);

    let raw = commonality - dissimilarity + winkler;
    ((raw + 1.0) / 2.0).clamp(0.0, 1.0)
}

/// Total length of the common substrings removed by the greedy loop.
fn common_substring_mass(a: &[Element], b: &[Element]) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let mut mass = 0;
    while let Some((start_a, start_b, len)) = longest_common_substring(&a, &b) {
        if len <= MIN_SUBSTRING {
            break;
        }
        mass += len;
        a.drain(start_a..start_a + len);
        b.drain(start_b..start_b + len);
    }
    mass
}

/// Leftmost (in `a`, then in `b`) longest common substring.
fn longest_common_substring(a: &[Element], b: &[Element]) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    // run[j] = length of the common suffix of a[..=i] and b[..=j]
    let mut prev = vec![0usize; b.len()];
    let mut curr = vec![0usize; b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            curr[j] = if x == y {
                if j > 0 {
                    prev[j - 1] + 1
                } else {
                    1
                }
            } else {
                0
            };
            let len = curr[j];
            if len == 0 {
                continue;
            }
            let candidate = (i + 1 - len, j + 1 - len, len);
            let better = match best {
                None => true,
                Some((sa, sb, bl)) => {
                    len > bl || (len == bl && (candidate.0, candidate.1) < (sa, sb))
                }
            };
            if better {
                best = Some(candidate);
            }
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    best
}
