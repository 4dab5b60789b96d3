//! Arithmetic of the symmetric group `S_n` on the points `1..=n`.
//!
//! Composition is right-to-left: `compose(pi, sigma)` applies `sigma` first.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection of `{1..n}`, stored as its image list `[pi(1), ..., pi(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    degree: n,
                    reason: format!("image {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation {
                    degree: n,
                    reason: format!("image {v} repeated"),
                });
            }
        }
        Ok(Permutation { images })
    }

    /// Images are known to be a bijection of `1..=len`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Permutation {
            images: (1..=n).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidPermutation {
                    degree: n,
                    reason: "empty cycle".into(),
                });
            }
            for (pos, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation {
                        degree: n,
                        reason: format!("point {p} out of range"),
                    });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidPermutation {
                        degree: n,
                        reason: format!("point {p} appears in two cycles"),
                    });
                }
                images[p - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1,3,5)(2)(4)` into a permutation of
    /// degree `n`. The empty string is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        Permutation::from_cycles(n, &parse_cycle_list(text)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based images `[pi(1), ..., pi(n)]`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `pi(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ sigma`: apply `sigma`, then `self`.
    pub fn compose(&self, sigma: &Permutation) -> Result<Permutation> {
        check_degrees(self, sigma)?;
        Ok(Permutation {
            images: sigma.images.iter().map(|&s| self.images[s - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `k ∘ self ∘ k⁻¹`.
    pub fn conjugate_by(&self, k: &Permutation) -> Result<Permutation> {
        k.compose(self)?.compose(&k.inverse())
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        // Scanning points in ascending order makes each cycle start at its minimum.
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                visited[next - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        // Stable sort keeps ascending leading elements among equal lengths.
        cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
        CycleDecomposition { degree: n, cycles }
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut multiplicities = BTreeMap::new();
        for cycle in self.cycle_decomposition().cycles {
            *multiplicities.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleType {
            degree: self.degree(),
            multiplicities,
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycle_decomposition().cycles.len()
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle_decomposition().fmt(f)
    }
}

fn check_degrees(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub fn identity(n: usize) -> Result<Permutation> {
    Permutation::identity(n)
}

/// `pi ∘ sigma`, i.e. `r(i) = pi(sigma(i))`.
pub fn compose(pi: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    pi.compose(sigma)
}

pub fn inverse(pi: &Permutation) -> Permutation {
    pi.inverse()
}

pub fn cycle_decomposition(pi: &Permutation) -> CycleDecomposition {
    pi.cycle_decomposition()
}

pub fn cycle_type(pi: &Permutation) -> CycleType {
    pi.cycle_type()
}

pub fn type_to_partition(t: &CycleType) -> Partition {
    t.to_partition()
}

/// `k ∘ pi ∘ k⁻¹`.
pub fn conjugate(pi: &Permutation, k: &Permutation) -> Result<Permutation> {
    pi.conjugate_by(k)
}

/// Two permutations are conjugate in `S_n` iff they share a cycle type.
pub fn are_conjugate(pi: &Permutation, sigma: &Permutation) -> Result<bool> {
    check_degrees(pi, sigma)?;
    Ok(pi.cycle_type() == sigma.cycle_type())
}

/// Disjoint cycles of a permutation in canonical order: each cycle starts at
/// its smallest point; cycles are sorted by length descending, then by first
/// point ascending. Fixed points are kept as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut images = vec![0; self.degree];
        for cycle in &self.cycles {
            for (pos, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Permutation::from_images_unchecked(images)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Multiplicities `m_k` of `k`-cycles; absent lengths have multiplicity zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    degree: usize,
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn new(degree: usize, multiplicities: BTreeMap<usize, usize>) -> Result<Self> {
        let multiplicities: BTreeMap<usize, usize> =
            multiplicities.into_iter().filter(|&(_, m)| m > 0).collect();
        if multiplicities.keys().any(|&k| k == 0 || k > degree) {
            return Err(Error::InvalidPartition(format!(
                "cycle length outside 1..={degree}"
            )));
        }
        let total: usize = multiplicities.iter().map(|(k, m)| k * m).sum();
        if total != degree {
            return Err(Error::InvalidPartition(format!(
                "cycle lengths sum to {total}, expected {degree}"
            )));
        }
        Ok(CycleType {
            degree,
            multiplicities,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `m_k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.multiplicities.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities keyed by cycle length, ascending.
    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    /// Lists each length `k` repeated `m_k` times, largest first.
    pub fn to_partition(&self) -> Partition {
        let parts = self
            .multiplicities
            .iter()
            .rev()
            .flat_map(|(&k, &m)| std::iter::repeat_n(k, m))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for CycleType {
    /// `(1^1,2^2,3^1)`, nonzero multiplicities only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (k, m)) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}^{m}")?;
        }
        write!(f, ")")
    }
}

/// Splits `(a,b,c)(d,e)...` into cycles. Whitespace is ignored.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in cycle notation `{text}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
        let cycle = body[..close]
            .split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{text}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
        rest = &body[close + 1..];
    }
    Ok(cycles)
}
