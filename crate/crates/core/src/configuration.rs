//! Configurations of a keyword query and their extension to permutations.
//!
//! A configuration sends keyword `i` (for `1 <= i <= N`) to a distinct
//! vocabulary index `j_i` in `1..=V`. Extending it to a permutation of
//! `{1..V}` closes every chain that leaves `{1..N}` back onto its start and
//! fixes every unused index above `N`, so each cycle holds at most one value
//! greater than `N`. The extension is injective, which lets configurations be
//! grouped by the conjugacy class of their permutation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{check_cap, falling_factorial};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

/// Ordered keywords `k_1, ..., k_N`. Positions matter, text may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KeywordQuery {
    keywords: Vec<String>,
}

impl KeywordQuery {
    pub fn new(keywords: Vec<String>) -> Result<Self> {
        if keywords.iter().any(|k| k.is_empty()) {
            return Err(Error::InvalidConfiguration("empty keyword".into()));
        }
        Ok(KeywordQuery { keywords })
    }

    pub fn keywords(&self) -> &[String] {
        &self.keywords
    }

    pub fn len(&self) -> usize {
        self.keywords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keywords.is_empty()
    }
}

/// Injective map from `N` keywords to vocabulary indices `1..=V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConfigurationMap {
    vocab_size: usize,
    targets: Vec<usize>,
}

impl ConfigurationMap {
    /// `targets[i - 1]` is the vocabulary index of keyword `i`.
    pub fn new(vocab_size: usize, targets: Vec<usize>) -> Result<Self> {
        if vocab_size == 0 {
            return Err(Error::InvalidConfiguration(
                "vocabulary must contain at least one term".into(),
            ));
        }
        if targets.len() > vocab_size {
            return Err(Error::TooManyKeywords {
                n_keywords: targets.len(),
                vocab_size,
            });
        }
        let mut used = vec![false; vocab_size];
        for &j in &targets {
            if j == 0 || j > vocab_size {
                return Err(Error::InvalidConfiguration(format!(
                    "target {j} outside 1..={vocab_size}"
                )));
            }
            if std::mem::replace(&mut used[j - 1], true) {
                return Err(Error::InvalidConfiguration(format!(
                    "target {j} used by two keywords"
                )));
            }
        }
        Ok(ConfigurationMap {
            vocab_size,
            targets,
        })
    }

    pub fn n_keywords(&self) -> usize {
        self.targets.len()
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// Targets as `j1,j2,...` (empty for an empty query).
    pub fn target_list(&self) -> String {
        join_indices(&self.targets)
    }
}

impl fmt::Display for ConfigurationMap {
    /// `N=5 V=8 map=4,7,6,1,3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={} V={} map={}",
            self.n_keywords(),
            self.vocab_size,
            self.target_list()
        )
    }
}

impl FromStr for ConfigurationMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `N=<n> V=<v> map=<j1,...>`, got `{s}`"));
        let mut fields = s.split_whitespace();
        let mut field = |key: &str| -> Result<String> {
            fields
                .next()
                .and_then(|f| f.strip_prefix(key))
                .map(str::to_owned)
                .ok_or_else(bad)
        };
        let n: usize = field("N=")?.parse().map_err(|_| bad())?;
        let v: usize = field("V=")?.parse().map_err(|_| bad())?;
        let map = field("map=")?;
        if fields.next().is_some() {
            return Err(bad());
        }
        let targets = parse_index_list(&map)?;
        if targets.len() != n {
            return Err(Error::Parse(format!(
                "N={n} but map lists {} targets",
                targets.len()
            )));
        }
        ConfigurationMap::new(v, targets)
    }
}

/// Parses `4,7,6` into indices; the empty string is the empty list.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index `{tok}`")))
        })
        .collect()
}

pub(crate) fn join_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A permutation of `{1..V}` in which every cycle contains at most one value
/// greater than `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedConfiguration {
    permutation: Permutation,
    n_keywords: usize,
}

impl ExtendedConfiguration {
    pub fn new(permutation: Permutation, n_keywords: usize) -> Result<Self> {
        if n_keywords > permutation.degree() {
            return Err(Error::TooManyKeywords {
                n_keywords,
                vocab_size: permutation.degree(),
            });
        }
        if !is_valid_configuration(&permutation, n_keywords) {
            return Err(Error::InvalidConfiguration(format!(
                "{permutation} has a cycle with two values above {n_keywords}"
            )));
        }
        Ok(ExtendedConfiguration {
            permutation,
            n_keywords,
        })
    }

    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn n_keywords(&self) -> usize {
        self.n_keywords
    }

    /// The conjugacy class (cycle type) of the permutation.
    pub fn class(&self) -> Partition {
        self.permutation.cycle_type().to_partition()
    }
}

/// `V! / (V - N)!`.
pub fn count_configurations(n_keywords: usize, vocab_size: usize) -> Result<u128> {
    if n_keywords > vocab_size {
        return Err(Error::TooManyKeywords {
            n_keywords,
            vocab_size,
        });
    }
    falling_factorial(vocab_size, n_keywords)
}

pub fn extend(config: &ConfigurationMap) -> ExtendedConfiguration {
    let n = config.n_keywords();
    let v = config.vocab_size;
    let mut images = vec![0usize; v];
    let mut hit_small = vec![false; n];
    for (i, &j) in config.targets.iter().enumerate() {
        images[i] = j;
        if j <= n {
            hit_small[j - 1] = true;
        }
    }
    // Each keyword index without a keyword preimage starts a chain that stays
    // in 1..=N until it reaches a value above N; that value closes the cycle.
    for start in 1..=n {
        if hit_small[start - 1] {
            continue;
        }
        let mut x = start;
        while images[x - 1] <= n {
            x = images[x - 1];
        }
        let exit = images[x - 1];
        images[exit - 1] = start;
    }
    for (idx, image) in images.iter_mut().enumerate().skip(n) {
        if *image == 0 {
            *image = idx + 1;
        }
    }
    ExtendedConfiguration {
        permutation: Permutation::from_images_unchecked(images),
        n_keywords: n,
    }
}

pub fn restrict(ext: &ExtendedConfiguration) -> ConfigurationMap {
    ConfigurationMap {
        vocab_size: ext.permutation.degree(),
        targets: ext.permutation.images()[..ext.n_keywords].to_vec(),
    }
}

/// Whether every cycle of `pi` contains at most one value above `n_keywords`.
pub fn is_valid_configuration(pi: &Permutation, n_keywords: usize) -> bool {
    pi.cycle_decomposition()
        .cycles()
        .iter()
        .all(|c| c.iter().filter(|&&x| x > n_keywords).count() <= 1)
}

/// Every configuration of `N` keywords over `V` terms, in lexicographic order
/// of the target tuple. Fails before doing any work if the count exceeds `cap`.
pub fn enumerate_configurations(
    n_keywords: usize,
    vocab_size: usize,
    cap: u128,
) -> Result<Injections> {
    let total = count_configurations(n_keywords, vocab_size)?;
    check_cap(total, cap)?;
    if vocab_size == 0 {
        return Err(Error::InvalidConfiguration(
            "vocabulary must contain at least one term".into(),
        ));
    }
    Ok(Injections::new(n_keywords, vocab_size))
}

/// Lexicographic stream of injective tuples over `1..=V`.
#[derive(Debug, Clone)]
pub struct Injections {
    vocab_size: usize,
    current: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl Injections {
    fn new(n: usize, v: usize) -> Self {
        let mut used = vec![false; v + 1];
        for u in used.iter_mut().skip(1).take(n) {
            *u = true;
        }
        Injections {
            vocab_size: v,
            current: (1..=n).collect(),
            used,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let v = self.vocab_size;
        let n = self.current.len();
        for pos in (0..n).rev() {
            let old = self.current[pos];
            self.used[old] = false;
            if let Some(next) = (old + 1..=v).find(|&c| !self.used[c]) {
                self.current[pos] = next;
                self.used[next] = true;
                let mut candidate = 1;
                for slot in pos + 1..n {
                    while self.used[candidate] {
                        candidate += 1;
                    }
                    self.current[slot] = candidate;
                    self.used[candidate] = true;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Injections {
    type Item = ConfigurationMap;

    fn next(&mut self) -> Option<ConfigurationMap> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        Some(ConfigurationMap {
            vocab_size: self.vocab_size,
            targets: self.current.clone(),
        })
    }
}

/// Tally of configurations by the cycle type of their extension, classes in
/// descending lexicographic order.
pub fn class_census(
    n_keywords: usize,
    vocab_size: usize,
    cap: u128,
) -> Result<Vec<(Partition, u128)>> {
    let mut tally: HashMap<Partition, u128> = HashMap::new();
    for config in enumerate_configurations(n_keywords, vocab_size, cap)? {
        *tally.entry(extend(&config).class()).or_insert(0) += 1;
    }
    let mut out: Vec<_> = tally.into_iter().collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;

    fn config(v: usize, targets: &[usize]) -> ConfigurationMap {
        ConfigurationMap::new(v, targets.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_configurations(5, 8).unwrap(), 6720);
        assert_eq!(count_configurations(0, 7).unwrap(), 1);
        assert_eq!(count_configurations(3, 6).unwrap(), 120);
        assert!(count_configurations(4, 3).is_err());
        assert!(matches!(
            count_configurations(40, 60),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn map_validation() {
        assert!(ConfigurationMap::new(3, vec![1, 1]).is_err());
        assert!(ConfigurationMap::new(3, vec![4]).is_err());
        assert!(ConfigurationMap::new(2, vec![1, 2, 3]).is_err());
        assert!(ConfigurationMap::new(0, vec![]).is_err());
    }

    #[test]
    fn text_format() {
        let c = config(8, &[4, 7, 6, 1, 3]);
        assert_eq!(c.to_string(), "N=5 V=8 map=4,7,6,1,3");
        assert_eq!("N=5 V=8 map=4,7,6,1,3".parse::<ConfigurationMap>().unwrap(), c);
        assert_eq!("N=0 V=3 map=".parse::<ConfigurationMap>().unwrap(), config(3, &[]));
        assert!("N=2 V=8 map=4,7,6".parse::<ConfigurationMap>().is_err());
        assert!("V=8 N=1 map=4".parse::<ConfigurationMap>().is_err());
    }

    #[test]
    fn worked_example_extension() {
        let ext = extend(&config(8, &[4, 7, 6, 1, 3]));
        assert_eq!(ext.permutation().to_string(), "(3,6,5)(1,4)(2,7)(8)");
        assert_eq!(ext.class().to_string(), "(3,2,2,1)");
        assert_eq!(restrict(&ext).targets(), &[4, 7, 6, 1, 3]);
        assert!(is_valid_configuration(ext.permutation(), 5));
    }

    #[test]
    fn extension_edge_cases() {
        assert!(extend(&config(5, &[1, 2, 3])).permutation().is_identity());
        assert_eq!(
            extend(&config(6, &[5, 6])).permutation().to_string(),
            "(1,5)(2,6)(3)(4)"
        );
        assert!(extend(&config(4, &[])).permutation().is_identity());
        // pure keyword cycle, no index above N involved
        assert_eq!(extend(&config(3, &[2, 1])).permutation().to_string(), "(1,2)(3)");
    }

    #[test]
    fn restrict_identity() {
        let ext = ExtendedConfiguration::new(Permutation::identity(5).unwrap(), 3).unwrap();
        assert_eq!(restrict(&ext).targets(), &[1, 2, 3]);
    }

    #[test]
    fn validity_checks() {
        assert!(is_valid_configuration(&Permutation::identity(8).unwrap(), 0));
        let swap = Permutation::parse_cycles(8, "(6,7)").unwrap();
        assert!(!is_valid_configuration(&swap, 5));
        assert!(ExtendedConfiguration::new(swap, 5).is_err());
    }

    #[test]
    fn enumeration() {
        let all: Vec<_> = enumerate_configurations(1, 3, CAP)
            .unwrap()
            .map(|c| c.targets().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(enumerate_configurations(3, 6, CAP).unwrap().count(), 120);
        assert_eq!(enumerate_configurations(5, 8, CAP).unwrap().count(), 6720);
        assert_eq!(enumerate_configurations(0, 2, CAP).unwrap().count(), 1);
        assert_eq!(
            enumerate_configurations(5, 8, 6719).unwrap_err(),
            Error::CapExceeded {
                requested: 6720,
                cap: 6719
            }
        );
    }

    #[test]
    fn enumeration_is_strictly_increasing() {
        let all: Vec<_> = enumerate_configurations(3, 5, CAP).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].targets() < w[1].targets()));
    }

    #[test]
    fn census_small_cases() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(class_census(0, 4, CAP).unwrap(), vec![(p("(1,1,1,1)"), 1)]);
        assert_eq!(
            class_census(1, 2, CAP).unwrap(),
            vec![(p("(2)"), 1), (p("(1,1)"), 1)]
        );
        assert!(class_census(5, 8, 10).is_err());
    }
}
