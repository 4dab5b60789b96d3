//! Command-line front end for `keysym`.
//!
//! Every subcommand writes its result to `out` in a line format documented in
//! the README and diagnostics to `err`. Exit status: 0 on success, 1 for usage
//! and input errors, 2 when an enumeration cap or exact arithmetic limit is hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use keysym::configuration::{self, parse_index_list, ConfigurationMap};
use keysym::matcher::{rank_by_class, score_matrix, top_k_configurations};
use keysym::partition::{admissible_partitions, class_size, dominance_compare};
use keysym::schema::{build_vocabulary, parse_query, parse_schema, Vocabulary};
use keysym::tableau::{tabloid_count, TabloidBasis};
use keysym::{Partition, Permutation, DEFAULT_ENUMERATION_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "keysym",
    version,
    about = "Keyword-query configurations as elements of the symmetric group"
)]
pub struct Cli {
    /// Upper bound on exhaustive enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Space {
    /// Number of keywords N.
    #[arg(long = "n")]
    n: usize,
    /// Vocabulary size V.
    #[arg(long = "v")]
    v: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the vocabulary of a schema file.
    Vocab { schema: PathBuf },
    /// Extend a configuration to a permutation.
    Extend {
        #[command(flatten)]
        space: Space,
        /// Comma-separated 1-based targets j1,...,jN.
        #[arg(long, allow_hyphen_values = true)]
        map: String,
    },
    /// List the cycle types available to configurations, with class sizes.
    Classes {
        #[command(flatten)]
        space: Space,
    },
    /// Count configurations per conjugacy class by exhaustive enumeration.
    Census {
        #[command(flatten)]
        space: Space,
    },
    /// Count, list, or act on the tabloids of a shape.
    Tabloids {
        /// Shape such as (3,2).
        #[arg(long)]
        shape: String,
        /// List every tabloid in basis order.
        #[arg(long)]
        list: bool,
        /// Permutation in cycle notation, e.g. (1,3,5)(2)(4).
        #[arg(long)]
        act: Option<String>,
        /// With --act, also print the representation matrix.
        #[arg(long, requires = "act")]
        matrix: bool,
    },
    /// Rank configurations of a keyword query over a schema.
    Match {
        schema: PathBuf,
        #[arg(long)]
        query: String,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Group results by conjugacy class.
        #[arg(long)]
        by_class: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(keysym::Error),
}

impl From<keysym::Error> for Failure {
    fn from(e: keysym::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (program name first) and runs the selected subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                EXIT_LIMIT
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Vocab { schema } => {
            write!(out, "{}", load_vocabulary(schema)?)?;
        }
        Command::Extend { space, map } => extend(space, map, out)?,
        Command::Classes { space } => classes(space, out)?,
        Command::Census { space } => {
            for (class, count) in configuration::class_census(space.n, space.v, cli.cap.into())? {
                writeln!(out, "{class}\t{count}")?;
            }
        }
        Command::Tabloids {
            shape,
            list,
            act,
            matrix,
        } => tabloids(shape, *list, act.as_deref(), *matrix, cli.cap.into(), out)?,
        Command::Match {
            schema,
            query,
            k,
            by_class,
        } => matches(schema, query, *k as usize, *by_class, out)?,
    }
    Ok(())
}

fn load_vocabulary(path: &Path) -> Result<Vocabulary, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(build_vocabulary(&parse_schema(&text)?))
}

fn extend(space: &Space, map: &str, out: &mut dyn Write) -> CmdResult {
    let targets = parse_index_list(map)?;
    if targets.len() != space.n {
        return Err(Failure::Usage(format!(
            "--n {} but --map lists {} targets",
            space.n,
            targets.len()
        )));
    }
    let config = ConfigurationMap::new(space.v, targets)?;
    let ext = configuration::extend(&config);
    let class = ext.class();
    writeln!(out, "{}", ext.permutation())?;
    writeln!(out, "{class}")?;
    writeln!(out, "{}", class_size(&class)?)?;
    Ok(())
}

fn classes(space: &Space, out: &mut dyn Write) -> CmdResult {
    let classes = admissible_partitions(space.n, space.v)?;
    for (i, class) in classes.iter().enumerate() {
        write!(out, "{class}\t{}", class_size(class)?)?;
        if let Some(next) = classes.get(i + 1) {
            write!(out, "\t{}", dominance_compare(class, next)?)?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn tabloids(
    shape: &str,
    list: bool,
    act: Option<&str>,
    matrix: bool,
    cap: u128,
    out: &mut dyn Write,
) -> CmdResult {
    let shape: Partition = shape.parse()?;
    if shape.is_empty() {
        return Err(Failure::Usage("shape must be a partition of n >= 1".into()));
    }
    writeln!(out, "{}", tabloid_count(&shape)?)?;
    if !list && act.is_none() {
        return Ok(());
    }
    let basis = TabloidBasis::new(&shape, cap)?;
    match act {
        None => {
            for (i, tb) in basis.tabloids().iter().enumerate() {
                writeln!(out, "{}\t{tb}", i + 1)?;
            }
        }
        Some(cycles) => {
            let pi = Permutation::parse_cycles(shape.n(), cycles)?;
            let m = basis.matrix(&pi)?;
            for (c, tb) in basis.tabloids().iter().enumerate() {
                let r = (0..basis.len())
                    .find(|&r| m.entry(r, c) == 1)
                    .expect("permutation matrix column");
                writeln!(out, "{}\t{tb}\t{}\t{}", c + 1, r + 1, basis.tabloids()[r])?;
            }
            if matrix {
                write!(out, "{m}")?;
            }
        }
    }
    Ok(())
}

fn matches(schema: &Path, query: &str, k: usize, by_class: bool, out: &mut dyn Write) -> CmdResult {
    let vocab = load_vocabulary(schema)?;
    let weights = score_matrix(&parse_query(query), &vocab)?;
    let ranked = top_k_configurations(&weights, k);
    if !by_class {
        for (rank, r) in ranked.iter().enumerate() {
            writeln!(out, "{}\t{}", rank + 1, r.line())?;
        }
        return Ok(());
    }
    for group in rank_by_class(&ranked)? {
        write!(out, "# {}\t{}", group.class, group.members.len())?;
        if let Some(rel) = group.relation_to_next {
            write!(out, "\t{rel}")?;
        }
        writeln!(out)?;
        for member in &group.members {
            let rank = ranked
                .iter()
                .position(|r| r.config == member.config)
                .expect("member of the ranked list");
            writeln!(out, "{}\t{}", rank + 1, member.line())?;
        }
    }
    Ok(())
}
