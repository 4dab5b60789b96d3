//! Young tableaux, tabloids, and the permutation module `M^λ`.
//!
//! A tabloid is a tableau up to reordering within rows. `S_n` permutes
//! tabloids by relabelling entries, and the matrices of that action on the
//! tabloid basis form a representation of `S_n` of degree `n!/λ!`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::arith::{check_cap, factorial};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

/// Bijective filling of the Ferrers diagram of `shape` with `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|e| Error::InvalidTableau(e.to_string()))
}

fn check_filling(rows: &[Vec<usize>]) -> Result<()> {
    let n: usize = rows.iter().map(Vec::len).sum();
    let mut seen = vec![false; n];
    for &x in rows.iter().flatten() {
        if x == 0 || x > n {
            return Err(Error::InvalidTableau(format!("entry {x} outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[x - 1], true) {
            return Err(Error::InvalidTableau(format!("entry {x} repeated")));
        }
    }
    Ok(())
}

impl Tableau {
    /// Rows top to bottom; the shape is read off the row lengths.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        check_filling(&rows)?;
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `t_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }
}

/// Row-equivalence class of a tableau; each row is stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    /// Rows are taken as sets and stored ascending.
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        check_filling(&rows)?;
        rows.iter_mut().for_each(|r| r.sort_unstable());
        Ok(Tabloid { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The representative tableau with ascending rows.
    pub fn to_tableau(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Display for Tabloid {
    /// `1,2,3/4,5`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .rows
            .iter()
            .map(|r| r.iter().join(","))
            .join("/");
        f.write_str(&text)
    }
}

impl FromStr for Tabloid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry `{tok}` in `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tabloid::new(rows)
    }
}

/// Every shape admits `n!` tableaux.
pub fn tableau_count(shape: &Partition) -> Result<u128> {
    factorial(shape.n())
}

pub fn row_equivalent(t1: &Tableau, t2: &Tableau) -> Result<bool> {
    if t1.shape != t2.shape {
        return Err(Error::ShapeMismatch {
            left: t1.shape.to_string(),
            right: t2.shape.to_string(),
        });
    }
    Ok(tabloid_of(t1) == tabloid_of(t2))
}

pub fn tabloid_of(t: &Tableau) -> Tabloid {
    let rows = t
        .rows
        .iter()
        .map(|r| r.iter().copied().sorted_unstable().collect())
        .collect();
    Tabloid {
        shape: t.shape.clone(),
        rows,
    }
}

/// `n! / (λ_1! λ_2! ... λ_l!)`.
pub fn tabloid_count(shape: &Partition) -> Result<u128> {
    let mut count = factorial(shape.n())?;
    for &part in shape.parts() {
        count /= factorial(part)?;
    }
    Ok(count)
}

/// Dimension of the permutation module `M^λ`, which equals the number of
/// λ-tabloids.
pub fn module_dimension(shape: &Partition) -> Result<u128> {
    tabloid_count(shape)
}

/// All tabloids of `shape`, ordered lexicographically by their concatenated
/// ascending rows.
pub fn enumerate_tabloids(shape: &Partition, cap: u128) -> Result<Vec<Tabloid>> {
    check_cap(tabloid_count(shape)?, cap)?;
    let mut out = Vec::new();
    let remaining: Vec<usize> = (1..=shape.n()).collect();
    let mut rows = Vec::with_capacity(shape.len());
    fill_rows(shape.parts(), &remaining, &mut rows, &mut |rows| {
        out.push(Tabloid {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    Ok(out)
}

fn fill_rows(
    parts: &[usize],
    remaining: &[usize],
    rows: &mut Vec<Vec<usize>>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    let Some((&len, rest)) = parts.split_first() else {
        emit(rows);
        return;
    };
    // itertools yields combinations of a sorted slice in lexicographic order.
    for row in remaining.iter().copied().combinations(len) {
        let left: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|x| !row.contains(x))
            .collect();
        rows.push(row);
        fill_rows(rest, &left, rows, emit);
        rows.pop();
    }
}

fn check_action_degree(pi: &Permutation, shape: &Partition) -> Result<()> {
    if pi.degree() != shape.n() {
        return Err(Error::DegreeMismatch {
            left: pi.degree(),
            right: shape.n(),
        });
    }
    Ok(())
}

/// `π t = (π(t_{i,j}))`.
pub fn act_on_tableau(pi: &Permutation, t: &Tableau) -> Result<Tableau> {
    check_action_degree(pi, &t.shape)?;
    Ok(Tableau {
        shape: t.shape.clone(),
        rows: t
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| pi.apply(x)).collect())
            .collect(),
    })
}

/// `π {t} = {π t}`.
pub fn act_on_tabloid(pi: &Permutation, tb: &Tabloid) -> Result<Tabloid> {
    check_action_degree(pi, &tb.shape)?;
    Ok(Tabloid {
        shape: tb.shape.clone(),
        rows: tb
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| pi.apply(x)).sorted_unstable().collect())
            .collect(),
    })
}

/// The tabloids of one shape in basis order, with a reverse index.
#[derive(Debug, Clone)]
pub struct TabloidBasis {
    shape: Partition,
    tabloids: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
}

impl TabloidBasis {
    pub fn new(shape: &Partition, cap: u128) -> Result<Self> {
        let tabloids = enumerate_tabloids(shape, cap)?;
        let index = tabloids
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(TabloidBasis {
            shape: shape.clone(),
            tabloids,
            index,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    pub fn len(&self) -> usize {
        self.tabloids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tabloids.is_empty()
    }

    /// 0-based basis position of `tb`.
    pub fn position(&self, tb: &Tabloid) -> Option<usize> {
        self.index.get(tb).copied()
    }

    /// Column `c` holds its 1 in row `image(c)`, where `π {t_c} = {t_image(c)}`.
    pub fn matrix(&self, pi: &Permutation) -> Result<RepresentationMatrix> {
        check_action_degree(pi, &self.shape)?;
        let d = self.len();
        let mut m = RepresentationMatrix::zeros(d);
        for (c, tb) in self.tabloids.iter().enumerate() {
            let image = act_on_tabloid(pi, tb)?;
            let r = self.index[&image];
            m.entries[r * d + c] = 1;
        }
        Ok(m)
    }
}

/// Matrix of the tabloid action of `pi` on `M^shape`, basis in
/// [`enumerate_tabloids`] order.
pub fn representation_matrix(
    pi: &Permutation,
    shape: &Partition,
    cap: u128,
) -> Result<RepresentationMatrix> {
    check_action_degree(pi, shape)?;
    TabloidBasis::new(shape, cap)?.matrix(pi)
}

/// Square integer matrix. Entry `(r, c)` is 0-based, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepresentationMatrix {
    dimension: usize,
    entries: Vec<i64>,
}

impl RepresentationMatrix {
    fn zeros(d: usize) -> Self {
        RepresentationMatrix {
            dimension: d,
            entries: vec![0; d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = RepresentationMatrix::zeros(d);
        for i in 0..d {
            m.entries[i * d + i] = 1;
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.dimension + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.dimension..(r + 1) * self.dimension]
    }

    /// Ordinary matrix product `self · rhs`.
    pub fn multiply(&self, rhs: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        if self.dimension != rhs.dimension {
            return Err(Error::DegreeMismatch {
                left: self.dimension,
                right: rhs.dimension,
            });
        }
        let d = self.dimension;
        let mut out = RepresentationMatrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.entries[r * d + k];
                if a == 0 {
                    continue;
                }
                for c in 0..d {
                    out.entries[r * d + c] += a * rhs.entries[k * d + c];
                }
            }
        }
        Ok(out)
    }

    /// Exactly one 1 in every row and column, zeros elsewhere.
    pub fn is_permutation_matrix(&self) -> bool {
        let d = self.dimension;
        if self.entries.iter().any(|&x| x != 0 && x != 1) {
            return false;
        }
        (0..d).all(|r| self.row(r).iter().sum::<i64>() == 1)
            && (0..d).all(|c| (0..d).map(|r| self.entry(r, c)).sum::<i64>() == 1)
    }
}

impl fmt::Display for RepresentationMatrix {
    /// One line per row, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dimension {
            writeln!(f, "{}", self.row(r).iter().join(" "))?;
        }
        Ok(())
    }
}
