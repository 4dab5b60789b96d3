//! Ranked enumeration of assignments by Murty's partitioning.
//!
//! Each search node is a subspace of configurations described by a fixed
//! prefix of keyword targets plus a set of forbidden (keyword, term) pairs.
//! A node is represented by its best member under the ranking order. After a
//! node's best member is emitted, the rest of its subspace splits into
//! disjoint children, one per free keyword position.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::hungarian::max_weight_assignment;
use super::{RankedConfiguration, ScoreMatrix};
use crate::configuration::ConfigurationMap;

#[derive(Debug, Clone)]
struct Subspace {
    /// 0-based targets of keywords `0..fixed.len()`.
    fixed: Vec<usize>,
    /// Row-major `N × V` mask of excluded pairs.
    forbidden: Vec<bool>,
}

#[derive(Debug)]
struct Node {
    key: i64,
    /// 0-based best assignment inside `space`.
    best: Vec<usize>,
    space: Subspace,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    // Max-heap: larger key wins, then the smaller tuple.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .cmp(&other.key)
            .then_with(|| other.best.cmp(&self.best))
    }
}

/// Lazily yields every configuration of a score matrix in ranking order.
pub struct RankedAssignments<'a> {
    weights: &'a ScoreMatrix,
    heap: BinaryHeap<Node>,
}

impl<'a> RankedAssignments<'a> {
    pub fn new(weights: &'a ScoreMatrix) -> Self {
        let root = Subspace {
            fixed: Vec::new(),
            forbidden: vec![false; weights.n_keywords() * weights.vocab_size()],
        };
        let mut heap = BinaryHeap::new();
        if let Some(node) = solve(weights, root) {
            heap.push(node);
        }
        RankedAssignments { weights, heap }
    }
}

impl Iterator for RankedAssignments<'_> {
    type Item = RankedConfiguration;

    fn next(&mut self) -> Option<RankedConfiguration> {
        let node = self.heap.pop()?;
        let n = self.weights.n_keywords();
        let v = self.weights.vocab_size();
        for pos in node.space.fixed.len()..n {
            let mut forbidden = node.space.forbidden.clone();
            forbidden[pos * v + node.best[pos]] = true;
            let child = Subspace {
                fixed: node.best[..pos].to_vec(),
                forbidden,
            };
            if let Some(child) = solve(self.weights, child) {
                self.heap.push(child);
            }
        }
        let targets = node.best.iter().map(|&c| c + 1).collect();
        let config = ConfigurationMap::new(v, targets).expect("assignment is injective");
        Some(RankedConfiguration::new(config, self.weights))
    }
}

/// Best key achievable in `space` with `prefix` fixed, or `None` if empty.
fn optimum(weights: &ScoreMatrix, forbidden: &[bool], prefix: &[usize]) -> Option<i64> {
    let n = weights.n_keywords();
    let v = weights.vocab_size();
    let mut taken = vec![false; v];
    let mut fixed_total = 0i64;
    for (row, &col) in prefix.iter().enumerate() {
        if forbidden[row * v + col] || std::mem::replace(&mut taken[col], true) {
            return None;
        }
        fixed_total += weights.quantized(row, col);
    }
    let free_cols: Vec<usize> = (0..v).filter(|&c| !taken[c]).collect();
    let start = prefix.len();
    max_weight_assignment(n - start, free_cols.len(), |r, c| {
        let (row, col) = (start + r, free_cols[c]);
        (!forbidden[row * v + col]).then(|| weights.quantized(row, col))
    })
    .map(|(total, _)| fixed_total + total)
}

/// Finds the lexicographically smallest optimal assignment of `space` by
/// fixing one keyword at a time to the smallest term that keeps the optimum.
fn solve(weights: &ScoreMatrix, space: Subspace) -> Option<Node> {
    let n = weights.n_keywords();
    let v = weights.vocab_size();
    let key = optimum(weights, &space.forbidden, &space.fixed)?;
    let mut best = space.fixed.clone();
    for row in space.fixed.len()..n {
        let candidates: Vec<usize> = (0..v)
            .filter(|c| !best.contains(c) && !space.forbidden[row * v + c])
            .collect();
        let chosen = candidates
            .into_iter()
            .find(|&c| {
                best.push(c);
                let keeps = optimum(weights, &space.forbidden, &best) == Some(key);
                best.pop();
                keeps
            })
            .expect("some extension attains the optimum");
        best.push(chosen);
    }
    Some(Node { key, best, space })
}
