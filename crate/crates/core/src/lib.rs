//! Keyword-query configurations modelled as elements of the symmetric group.
//!
//! A keyword query with `N` keywords over a database vocabulary of size `V`
//! has `V!/(V-N)!` configurations (injective keyword-to-term maps). Each one
//! extends to a permutation of `{1..V}` whose cycles each hold at most one
//! value above `N`, so configurations inherit the conjugacy-class structure of
//! `S_V`: cycle types, partitions, and the dominance and lexicographic orders
//! on them.
//!
//! Modules:
//! - [`permutation`]: composition, inversion, cycle decomposition, conjugacy.
//! - [`partition`]: integer partitions, class sizes, orders, admissible types.
//! - [`configuration`]: configurations, their extension, enumeration, census.
//! - [`tableau`]: tableaux, tabloids, and permutation-module representations.
//! - [`schema`]: schema and query parsing, vocabulary construction.
//! - [`matcher`]: scoring, Hungarian best assignment, top-k, class ranking.
//!
//! All indices exposed by this crate are 1-based.

pub mod configuration;
pub mod error;
pub mod partition;
pub mod permutation;
pub mod schema;
pub mod tableau;
pub mod matcher;

mod arith;

pub use configuration::{ConfigurationMap, ExtendedConfiguration, KeywordQuery};
pub use error::{Error, Result};
pub use partition::{DominanceRelation, Partition};
pub use permutation::{CycleDecomposition, CycleType, Permutation};
pub use schema::{Schema, Vocabulary};
pub use tableau::{RepresentationMatrix, Tableau, Tabloid};

/// Default upper bound on the number of objects any exhaustive enumeration
/// may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;
