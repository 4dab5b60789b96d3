//! Relational schemas, their vocabulary of database terms, and keyword queries.
//!
//! Schema files hold one table per line, `Name(attr1:Dom1,attr2:Dom2,...)`.
//! Lines starting with `#` are comments and blank lines are skipped.
//!
//! The vocabulary lists, for each table in file order, the relation name and
//! then every attribute followed by its domain. Domains are not shared between
//! attributes, so a schema with tables `R_i` has `2·Σ|R_i| + |D|` terms.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::configuration::KeywordQuery;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attribute {
    pub name: String,
    pub domain: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    pub name: String,
    pub attributes: Vec<Attribute>,
}

impl Table {
    pub fn arity(&self) -> usize {
        self.attributes.len()
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, a) in self.attributes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", a.name, a.domain)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Schema {
    tables: Vec<Table>,
}

impl Schema {
    /// Checks name uniqueness. Errors report 1-based table positions as lines.
    pub fn new(tables: Vec<Table>) -> Result<Self> {
        let mut schema = Schema::default();
        for (i, table) in tables.into_iter().enumerate() {
            schema.push(table, i + 1)?;
        }
        Ok(schema)
    }

    fn push(&mut self, table: Table, line: usize) -> Result<()> {
        if self.tables.iter().any(|t| t.name == table.name) {
            return Err(Error::DuplicateTable {
                line,
                name: table.name,
            });
        }
        let mut seen = HashSet::new();
        for a in &table.attributes {
            if !seen.insert(a.name.as_str()) {
                return Err(Error::DuplicateAttribute {
                    line,
                    table: table.name.clone(),
                    attribute: a.name.clone(),
                });
            }
        }
        self.tables.push(table);
        Ok(())
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    /// Sum of the arities of all tables.
    pub fn total_arity(&self) -> usize {
        self.tables.iter().map(Table::arity).sum()
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tables {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Schema {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_schema(s)
    }
}

const DELIMITERS: &[char] = &['(', ')', ',', ':', '#'];

fn identifier(raw: &str, what: &str, line: usize) -> Result<String> {
    let name = raw.trim();
    if name.is_empty() {
        return Err(Error::Syntax {
            line,
            message: format!("missing {what}"),
        });
    }
    if let Some(bad) = name
        .chars()
        .find(|c| c.is_whitespace() || DELIMITERS.contains(c))
    {
        return Err(Error::Syntax {
            line,
            message: format!("unexpected `{bad}` in {what} `{name}`"),
        });
    }
    Ok(name.to_owned())
}

fn parse_table(text: &str, line: usize) -> Result<Table> {
    let syntax = |message: &str| Error::Syntax {
        line,
        message: message.to_owned(),
    };
    let open = text.find('(').ok_or_else(|| syntax("expected `(` after table name"))?;
    let rest = text[open + 1..].trim_end();
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| syntax("expected `)` at end of line"))?;
    let name = identifier(&text[..open], "table name", line)?;
    let attributes = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',')
            .map(|item| {
                let (attr, domain) = item
                    .split_once(':')
                    .ok_or_else(|| syntax(&format!("attribute `{}` lacks `:domain`", item.trim())))?;
                Ok(Attribute {
                    name: identifier(attr, "attribute name", line)?,
                    domain: identifier(domain, "domain", line)?,
                })
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(Table { name, attributes })
}

pub fn parse_schema(text: &str) -> Result<Schema> {
    let mut schema = Schema::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let table = parse_table(line, idx + 1)?;
        schema.push(table, idx + 1)?;
    }
    Ok(schema)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    Relation,
    Attribute,
    Domain,
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermKind::Relation => "relation",
            TermKind::Attribute => "attribute",
            TermKind::Domain => "domain",
        })
    }
}

/// A database term `b_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub index: usize,
    pub text: String,
    pub kind: TermKind,
    pub table: String,
    /// Set for attribute and domain terms.
    pub attribute: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vocabulary {
    terms: Vec<Term>,
}

impl Vocabulary {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term with 1-based `index`.
    pub fn term(&self, index: usize) -> Option<&Term> {
        index.checked_sub(1).and_then(|i| self.terms.get(i))
    }
}

impl fmt::Display for Vocabulary {
    /// `<index>\t<kind>\t<text>` per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            writeln!(f, "{}\t{}\t{}", t.index, t.kind, t.text)?;
        }
        Ok(())
    }
}

pub fn build_vocabulary(schema: &Schema) -> Vocabulary {
    let mut terms = Vec::with_capacity(2 * schema.total_arity() + schema.tables.len());
    let mut push = |text: &str, kind, table: &Table, attribute: Option<&str>| {
        terms.push(Term {
            index: terms.len() + 1,
            text: text.to_owned(),
            kind,
            table: table.name.clone(),
            attribute: attribute.map(str::to_owned),
        });
    };
    for table in &schema.tables {
        push(&table.name, TermKind::Relation, table, None);
        for a in &table.attributes {
            push(&a.name, TermKind::Attribute, table, Some(&a.name));
            push(&a.domain, TermKind::Domain, table, Some(&a.name));
        }
    }
    Vocabulary { terms }
}

/// Whitespace-separated keywords, order and case preserved.
pub fn parse_query(text: &str) -> KeywordQuery {
    KeywordQuery::new(text.split_whitespace().map(str::to_owned).collect())
        .expect("whitespace tokens are never empty")
}
