//! Generator-and-relation presentations and their realization as groups.
//!
//! The text syntax is a comma-separated list of relations. A relation is a
//! chain `w1=w2=...=wk`, expanded into the consecutive equalities
//! `w1=w2`, `w2=w3`, and so on. Words juxtapose factors `x` or `x^k`
//! (`k` a possibly negative decimal); `e` is the empty word. Generators are
//! single lower-case letters other than `e`, declared by first use, or
//! explicitly with the bracketed form `<a,b | ...>`.
//!
//! Two pseudo-relations are understood: `abelian` (also written
//! `D(G)={e}`) adds the commutator relations `[gi,gj]=e` for all generator
//! pairs, and `central(w)` adds `wg=gw` for every generator `g`.

mod parse;
mod todd_coxeter;

use std::fmt;
use std::str::FromStr;

pub use parse::parse_presentation;
pub use todd_coxeter::{coset_enumerate, enumerate, Enumeration};

use crate::error::ParseError;
use crate::group::{CayleyTable, ElementId, IDENTITY};

/// Default coset budget for enumeration.
pub const DEFAULT_MAX_COSETS: usize = 4096;

/// A freely reduced word: `(generator index, nonzero exponent)` factors with
/// no two adjacent factors on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    /// Normalizes arbitrary factors: merges neighbours on the same
    /// generator and drops zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (usize, i64)>>(factors: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, k) in factors {
            if k == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, j)) if *h == g => {
                    *j += k;
                    if *j == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, k)),
            }
        }
        Word(out)
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, k)| (g, -k)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_factors(self.0.iter().chain(&other.0).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.concat(&base))
    }

    /// Highest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word with the given generator names, `e` when empty.
    pub fn render(&self, names: &[char]) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        let mut s = String::new();
        for &(g, k) in &self.0 {
            s.push(names[g]);
            if k != 1 {
                s.push('^');
                s.push_str(&k.to_string());
            }
        }
        s
    }
}

/// An equation `lhs = rhs` between words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    /// The relator `lhs·rhs⁻¹`.
    pub fn relator(&self) -> Word {
        self.lhs.concat(&self.rhs.inverse())
    }
}

/// Generators, relations, and enumeration settings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relations: Vec<Relation>,
    pub expected_order: Option<usize>,
    pub max_cosets: usize,
}

impl Presentation {
    pub fn new(generators: Vec<char>, relations: Vec<Relation>) -> Self {
        Presentation { generators, relations, expected_order: None, max_cosets: DEFAULT_MAX_COSETS }
    }

    pub fn with_expected_order(mut self, order: usize) -> Self {
        self.expected_order = Some(order);
        self
    }

    pub fn with_max_cosets(mut self, max: usize) -> Self {
        self.max_cosets = max;
        self
    }

    pub fn generator_index(&self, name: char) -> Option<usize> {
        self.generators.iter().position(|&c| c == name)
    }

    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().map(Relation::relator).collect()
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse::parse_word(text, &self.generators)
    }
}

impl FromStr for Presentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}

/// Pretty-prints in the bracketed form, which parses back to an identical
/// presentation.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(char::to_string).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| format!("{}={}", r.lhs.render(&self.generators), r.rhs.render(&self.generators)))
            .collect();
        write!(f, "<{} | {}>", gens.join(","), rels.join(", "))
    }
}

/// Folds a word into a group element under a generator assignment.
pub fn evaluate_word(g: &CayleyTable, assignment: &[ElementId], w: &Word) -> ElementId {
    w.factors()
        .iter()
        .fold(IDENTITY, |acc, &(gen, k)| g.mul(acc, g.pow(assignment[gen], k)))
}

/// Whether every relator of `p` evaluates to the identity.
pub fn satisfies_relations(g: &CayleyTable, assignment: &[ElementId], p: &Presentation) -> bool {
    p.relations
        .iter()
        .all(|r| evaluate_word(g, assignment, &r.lhs) == evaluate_word(g, assignment, &r.rhs))
}
