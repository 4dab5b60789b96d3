//! Integer partitions: enumeration, conjugacy-class sizes, the dominance and
//! lexicographic orders, and the cycle types reachable by configurations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// Weakly decreasing positive parts `(λ_1, ..., λ_l)` of `n = Σ λ_i`.
///
/// The derived `Ord` compares parts element-wise and agrees with
/// [`lex_compare`] on partitions of the same `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// The empty partition of zero.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` (1-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Multiplicity of each part value, ascending by value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    /// `(4,1,1,1,1)`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition `{s}` must be parenthesized")))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{tok}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Outcome of comparing two partitions of the same `n` under dominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominanceRelation {
    Dominates,
    DominatedBy,
    Equal,
    Incomparable,
}

impl fmt::Display for DominanceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominanceRelation::Dominates => "dominates",
            DominanceRelation::DominatedBy => "dominated-by",
            DominanceRelation::Equal => "equal",
            DominanceRelation::Incomparable => "incomparable",
        })
    }
}

/// Every partition of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    push_partitions(n, n, &mut current, &mut out);
    out
}

fn push_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        push_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// `k_λ = n! / Π_k (k^{m_k} m_k!)`, the number of permutations of cycle type λ.
pub fn class_size(lambda: &Partition) -> Result<u128> {
    let n = lambda.n();
    let mut denominator: u128 = 1;
    for (k, m) in lambda.multiplicities() {
        let power = (k as u128)
            .checked_pow(m as u32)
            .ok_or_else(|| Error::Overflow(format!("{k}^{m}")))?;
        denominator = denominator
            .checked_mul(power)
            .and_then(|d| d.checked_mul(factorial(m).ok()?))
            .ok_or_else(|| Error::Overflow(format!("class size of {lambda}")))?;
    }
    Ok(factorial(n)? / denominator)
}

fn check_same_n(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    Ok(())
}

/// Compares prefix sums `λ_1 + ... + λ_i` against `μ_1 + ... + μ_i` for all `i`.
pub fn dominance_compare(lambda: &Partition, mu: &Partition) -> Result<DominanceRelation> {
    check_same_n(lambda, mu)?;
    if lambda == mu {
        return Ok(DominanceRelation::Equal);
    }
    let len = lambda.len().max(mu.len());
    let (mut sum_l, mut sum_m) = (0usize, 0usize);
    let (mut some_greater, mut some_less) = (false, false);
    for i in 1..=len {
        sum_l += lambda.part(i);
        sum_m += mu.part(i);
        match sum_l.cmp(&sum_m) {
            Ordering::Greater => some_greater = true,
            Ordering::Less => some_less = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (some_greater, some_less) {
        (true, false) => DominanceRelation::Dominates,
        (false, true) => DominanceRelation::DominatedBy,
        // Distinct partitions of the same n always differ in some prefix sum.
        (false, false) => DominanceRelation::Equal,
        (true, true) => DominanceRelation::Incomparable,
    })
}

/// Total order decided by the first differing part (missing parts are zero).
pub fn lex_compare(lambda: &Partition, mu: &Partition) -> Result<Ordering> {
    check_same_n(lambda, mu)?;
    let len = lambda.len().max(mu.len());
    Ok((1..=len)
        .map(|i| lambda.part(i).cmp(&mu.part(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}

/// Whether λ can be the cycle type of a configuration of `n_keywords`
/// keywords: every part is at most `N + 1` and there are at least `V - N` parts.
pub fn is_admissible(lambda: &Partition, n_keywords: usize) -> bool {
    let v = lambda.n();
    lambda.parts.iter().all(|&p| p <= n_keywords + 1)
        && lambda.len() + n_keywords >= v
}

/// Cycle types available to configurations of `N` keywords over `V` terms,
/// in descending lexicographic order.
pub fn admissible_partitions(n_keywords: usize, vocab_size: usize) -> Result<Vec<Partition>> {
    if n_keywords > vocab_size {
        return Err(Error::TooManyKeywords {
            n_keywords,
            vocab_size,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    push_partitions(vocab_size, (n_keywords + 1).min(vocab_size), &mut current, &mut out);
    out.retain(|p| is_admissible(p, n_keywords));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation_and_format() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[4, 1, 1, 1, 1]).to_string(), "(4,1,1,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!("(3, 2,2,1)".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,2".parse::<Partition>().is_err());
        assert!("(2,3)".parse::<Partition>().is_err());
        assert!("(2,x)".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(partitions_of(5).len(), 7);
        let eight = partitions_of(8);
        assert_eq!(eight.len(), 22);
        assert_eq!(eight[0], p(&[8]));
        assert_eq!(eight[21], p(&[1; 8]));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[3, 2, 2, 1])).unwrap(), 1680);
        assert_eq!(class_size(&p(&[1; 6])).unwrap(), 1);
        assert_eq!(class_size(&p(&[7])).unwrap(), 720);
        assert_eq!(class_size(&Partition::empty()).unwrap(), 1);
        assert!(matches!(class_size(&p(&[40])), Err(Error::Overflow(_))));
    }

    #[test]
    fn dominance_examples() {
        use DominanceRelation::*;
        let a = p(&[3, 2, 1, 1, 1]);
        let b = p(&[2, 2, 2, 1, 1]);
        assert_eq!(dominance_compare(&a, &b).unwrap(), Dominates);
        assert_eq!(dominance_compare(&b, &a).unwrap(), DominatedBy);
        assert_eq!(
            dominance_compare(&p(&[3, 1, 1, 1, 1, 1]), &b).unwrap(),
            Incomparable
        );
        assert_eq!(dominance_compare(&a, &a).unwrap(), Equal);
        assert!(dominance_compare(&a, &p(&[2])).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            lex_compare(&p(&[4, 1, 1, 1, 1]), &p(&[3, 2, 1, 1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&p(&[2, 2, 1, 1, 1, 1]), &p(&[2, 1, 1, 1, 1, 1, 1])).unwrap(),
            Ordering::Greater
        );
        let a = p(&[3, 3]);
        assert_eq!(lex_compare(&a, &a).unwrap(), Ordering::Equal);
        assert!(lex_compare(&a, &p(&[1])).is_err());
    }

    #[test]
    fn admissible_examples() {
        let got = admissible_partitions(3, 8).unwrap();
        let want = [
            p(&[4, 1, 1, 1, 1]),
            p(&[3, 2, 1, 1, 1]),
            p(&[3, 1, 1, 1, 1, 1]),
            p(&[2, 2, 2, 1, 1]),
            p(&[2, 2, 1, 1, 1, 1]),
            p(&[2, 1, 1, 1, 1, 1, 1]),
            p(&[1; 8]),
        ];
        assert_eq!(got, want);
        assert_eq!(admissible_partitions(0, 4).unwrap(), vec![p(&[1, 1, 1, 1])]);
        assert_eq!(
            admissible_partitions(2, 4).unwrap(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(admissible_partitions(0, 0).unwrap(), vec![Partition::empty()]);
        assert!(admissible_partitions(5, 4).is_err());
    }
}
