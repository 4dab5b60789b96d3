//! Scoring keywords against vocabulary terms and ranking configurations.
//!
//! Ranking is by total weight, descending, with ties broken by the
//! lexicographically smallest target tuple. Weights are compared on a fixed
//! grid of `2^-40` so the assignment solver works in exact integers; the
//! reported score is the plain floating-point sum of the chosen weights.

mod hungarian;
mod murty;

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::configuration::{extend, ConfigurationMap, KeywordQuery};
use crate::error::{Error, Result};
use crate::partition::{dominance_compare, DominanceRelation, Partition};
use crate::schema::Vocabulary;

pub use murty::RankedAssignments;

/// Fixed-point scale applied to weights before assignment.
pub const WEIGHT_SCALE: f64 = (1u64 << 40) as f64;

/// Affinity between a keyword and a database term, in `[0, 1]`.
pub trait Scorer {
    fn score(&self, keyword: &str, term: &str) -> f64;
}

/// `1 - lev(a, b) / max(|a|, |b|)` on lowercased text, counting characters.
#[derive(Debug, Clone, Copy, Default)]
pub struct EditDistanceScorer;

impl Scorer for EditDistanceScorer {
    fn score(&self, keyword: &str, term: &str) -> f64 {
        let a: Vec<char> = keyword.to_lowercase().chars().collect();
        let b: Vec<char> = term.to_lowercase().chars().collect();
        let longest = a.len().max(b.len());
        if longest == 0 {
            return 1.0;
        }
        1.0 - levenshtein(&a, &b) as f64 / longest as f64
    }
}

fn levenshtein(a: &[char], b: &[char]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitute = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitute.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `N × V` weights in `[0, 1]`, row `i` for keyword `i`, column `j` for term `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    n_keywords: usize,
    vocab_size: usize,
    weights: Vec<f64>,
}

impl ScoreMatrix {
    pub fn new(rows: Vec<Vec<f64>>, vocab_size: usize) -> Result<Self> {
        let n_keywords = rows.len();
        if vocab_size == 0 {
            return Err(Error::InvalidScores("vocabulary is empty".into()));
        }
        if n_keywords > vocab_size {
            return Err(Error::TooManyKeywords {
                n_keywords,
                vocab_size,
            });
        }
        let mut weights = Vec::with_capacity(n_keywords * vocab_size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != vocab_size {
                return Err(Error::InvalidScores(format!(
                    "row {} has {} entries, expected {vocab_size}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|w| !(0.0..=1.0).contains(*w)) {
                return Err(Error::InvalidScores(format!(
                    "row {} has weight {bad} outside [0, 1]",
                    i + 1
                )));
            }
            weights.extend(row);
        }
        Ok(ScoreMatrix {
            n_keywords,
            vocab_size,
            weights,
        })
    }

    pub fn n_keywords(&self) -> usize {
        self.n_keywords
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    /// Weight of keyword `i` for term `j`, both 1-based.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[(i - 1) * self.vocab_size + (j - 1)]
    }

    /// `Σ_i weights[i][j_i]`, summed in keyword order.
    pub fn total(&self, targets: &[usize]) -> f64 {
        targets
            .iter()
            .enumerate()
            .map(|(i, &j)| self.weight(i + 1, j))
            .sum()
    }

    /// 0-based fixed-point weight used for ranking.
    fn quantized(&self, row: usize, col: usize) -> i64 {
        (self.weights[row * self.vocab_size + col] * WEIGHT_SCALE).round() as i64
    }

    /// Sum of fixed-point weights for a 1-based target tuple. This is the
    /// exact key used for ordering configurations.
    pub fn rank_key(&self, targets: &[usize]) -> i64 {
        targets
            .iter()
            .enumerate()
            .map(|(i, &j)| self.quantized(i, j - 1))
            .sum()
    }

    /// Ranking order: higher key first, then smaller target tuple.
    pub fn rank_cmp(&self, a: &[usize], b: &[usize]) -> Ordering {
        self.rank_key(b)
            .cmp(&self.rank_key(a))
            .then_with(|| a.cmp(b))
    }
}

/// A configuration with its score and conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedConfiguration {
    pub config: ConfigurationMap,
    pub score: f64,
    pub class: Partition,
}

impl RankedConfiguration {
    pub fn new(config: ConfigurationMap, weights: &ScoreMatrix) -> Self {
        let score = weights.total(config.targets());
        let class = extend(&config).class();
        RankedConfiguration {
            config,
            score,
            class,
        }
    }

    /// `<score to 6 decimals>\t<j1,j2,...>\t<partition>`; callers prefix the rank.
    pub fn line(&self) -> String {
        format!(
            "{:.6}\t{}\t{}",
            self.score,
            self.config.target_list(),
            self.class
        )
    }
}

pub fn score_matrix(query: &KeywordQuery, vocab: &Vocabulary) -> Result<ScoreMatrix> {
    score_matrix_with(&EditDistanceScorer, query, vocab)
}

pub fn score_matrix_with(
    scorer: &impl Scorer,
    query: &KeywordQuery,
    vocab: &Vocabulary,
) -> Result<ScoreMatrix> {
    let rows = query
        .keywords()
        .iter()
        .map(|k| vocab.terms().iter().map(|t| scorer.score(k, &t.text)).collect())
        .collect();
    ScoreMatrix::new(rows, vocab.len())
}

pub fn best_configuration(weights: &ScoreMatrix) -> RankedConfiguration {
    murty::RankedAssignments::new(weights)
        .next()
        .expect("a score matrix always admits an assignment")
}

/// The `k` best configurations in ranking order; fewer if the space is smaller.
pub fn top_k_configurations(weights: &ScoreMatrix, k: usize) -> Vec<RankedConfiguration> {
    murty::RankedAssignments::new(weights).take(k).collect()
}

/// Configurations of one conjugacy class, in their incoming order.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassGroup {
    pub class: Partition,
    pub members: Vec<RankedConfiguration>,
    /// Dominance of this class over the next group's class; `None` for the last.
    pub relation_to_next: Option<DominanceRelation>,
}

/// Groups results by class, classes in descending lexicographic order.
pub fn rank_by_class(results: &[RankedConfiguration]) -> Result<Vec<ClassGroup>> {
    if let Some(first) = results.first() {
        let space = |r: &RankedConfiguration| (r.config.n_keywords(), r.config.vocab_size());
        if let Some(other) = results.iter().find(|r| space(r) != space(first)) {
            let (n0, v0) = space(first);
            let (n1, v1) = space(other);
            return Err(Error::MixedSpaces(format!("N={n0} V={v0} and N={n1} V={v1}")));
        }
    }
    let mut by_class: HashMap<&Partition, Vec<RankedConfiguration>> = HashMap::new();
    for r in results {
        by_class.entry(&r.class).or_default().push(r.clone());
    }
    let mut groups: Vec<_> = by_class.into_iter().collect();
    groups.sort_by(|a, b| b.0.cmp(a.0));
    let classes: Vec<Partition> = groups.iter().map(|(c, _)| (*c).clone()).collect();
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(i, (class, members))| ClassGroup {
            class: class.clone(),
            members,
            relation_to_next: classes
                .get(i + 1)
                .map(|next| dominance_compare(class, next).expect("same n")),
        })
        .collect())
}
