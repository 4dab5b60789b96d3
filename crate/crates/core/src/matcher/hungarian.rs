//! Rectangular Hungarian method on integer weights (maximization).
//!
//! Shortest augmenting paths with row/column potentials, `O(rows² · cols)`.
//! Entries can be forbidden; a problem whose rows cannot all be matched
//! through allowed entries yields `None`.

/// Maximum-weight assignment of every row to a distinct column.
///
/// `weight(r, c)` returns `None` for forbidden entries. Requires
/// `rows <= cols`. Returns the total weight and the column of each row.
pub(crate) fn max_weight_assignment<F>(rows: usize, cols: usize, weight: F) -> Option<(i64, Vec<usize>)>
where
    F: Fn(usize, usize) -> Option<i64>,
{
    assert!(rows <= cols, "more rows than columns");
    if rows == 0 {
        return Some((0, Vec::new()));
    }
    // 1-based internally; index 0 is the virtual column holding the row
    // currently being inserted.
    let cost = |r: usize, c: usize| weight(r - 1, c - 1).map(|w| -w);
    let mut u = vec![0i64; rows + 1];
    let mut v = vec![0i64; cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];

    for row in 1..=rows {
        owner[0] = row;
        let mut j0 = 0usize;
        let mut min_slack: Vec<Option<i64>> = vec![None; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<i64> = None;
            let mut j1 = 0usize;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                if let Some(c) = cost(i0, j) {
                    let reduced = c - u[i0] - v[j];
                    if min_slack[j].is_none_or(|m| reduced < m) {
                        min_slack[j] = Some(reduced);
                        way[j] = j0;
                    }
                }
                if let Some(m) = min_slack[j] {
                    if delta.is_none_or(|d| m < d) {
                        delta = Some(m);
                        j1 = j;
                    }
                }
            }
            // No allowed edge leaves the alternating tree: this row cannot be placed.
            let delta = delta?;
            for j in 0..=cols {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else if let Some(m) = min_slack[j].as_mut() {
                    *m -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut assignment = vec![0usize; rows];
    for j in 1..=cols {
        if owner[j] != 0 {
            assignment[owner[j] - 1] = j - 1;
        }
    }
    let total = assignment
        .iter()
        .enumerate()
        .map(|(r, &c)| weight(r, c).expect("assignment uses an allowed entry"))
        .sum();
    Some((total, assignment))
}
