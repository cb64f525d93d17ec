//! One-to-one assignment maximizing the total weight of a rectangular matrix.

/// Row/column pairs of a maximum-weight matching; every row is matched when
/// there are at least as many columns as rows, and vice versa.
pub fn max_weight_assignment(weights: &[Vec<f64>]) -> Vec<(usize, usize)> {
    let rows = weights.len();
    let cols = weights.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    if rows <= cols {
        let cost: Vec<Vec<f64>> = weights
            .iter()
            .map(|row| row.iter().map(|w| -w).collect())
            .collect();
        hungarian(&cost)
    } else {
        let cost: Vec<Vec<f64>> = (0..cols)
            .map(|c| (0..rows).map(|r| -weights[r][c]).collect())
            .collect();
        hungarian(&cost).into_iter().map(|(c, r)| (r, c)).collect()
    }
}

/// Minimum-cost assignment of every row, `rows <= cols`, using row and
/// column potentials (O(rows² · cols)).
fn hungarian(cost: &[Vec<f64>]) -> Vec<(usize, usize)> {
    let n = cost.len();
    let m = cost[0].len();
    debug_assert!(n <= m);

    // 1-based; column 0 is the virtual start column
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; m + 1];
    let mut owner = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];

    for row in 1..=n {
        owner[0] = row;
        let mut col0 = 0;
        let mut min_slack = vec![f64::INFINITY; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[col0] = true;
            let r = owner[col0];
            let mut delta = f64::INFINITY;
            let mut next = 0;
            for c in 1..=m {
                if used[c] {
                    continue;
                }
                let slack = cost[r - 1][c - 1] - u[r] - v[c];
                if slack < min_slack[c] {
                    min_slack[c] = slack;
                    way[c] = col0;
                }
                if min_slack[c] < delta {
                    delta = min_slack[c];
                    next = c;
                }
            }
            for c in 0..=m {
                if used[c] {
                    u[owner[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_slack[c] -= delta;
                }
            }
            col0 = next;
            if owner[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            owner[col0] = owner[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut pairs: Vec<(usize, usize)> = (1..=m)
        .filter(|&c| owner[c] != 0)
        .map(|c| (owner[c] - 1, c - 1))
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Repeatedly takes the heaviest remaining cell whose row and column are both
/// free; ties go to the smallest `(row, col)`.
pub fn greedy_assignment(weights: &[Vec<f64>]) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize, f64)> = weights
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &w)| (r, c, w)))
        .collect();
    cells.sort_by(|a, b| b.2.total_cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));

    let rows = weights.len();
    let cols = weights.first().map_or(0, Vec::len);
    let mut row_used = vec![false; rows];
    let mut col_used = vec![false; cols];
    let mut pairs = Vec::new();
    for (r, c, _) in cells {
        if !row_used[r] && !col_used[c] {
            row_used[r] = true;
            col_used[c] = true;
            pairs.push((r, c));
        }
    }
    pairs.sort_unstable();
    pairs
}
