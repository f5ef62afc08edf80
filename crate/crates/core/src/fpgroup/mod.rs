//! Finitely presented groups: words, presentations, coset enumeration and the
//! regular permutation representation.

mod enumerate;
mod parse;
mod table;
mod word;

pub use enumerate::{coset_enumeration, CosetTable, EnumerationError, DEFAULT_MAX_COSETS};
pub use parse::{parse_presentation, parse_word, ParseError};
pub use table::{element_of_word, element_order, inverting_automorphism_exists, regular_representation, GroupTable};
pub use word::{Letter, Word, WordDisplay};

use std::fmt;

/// Generators plus relator words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Empty relators are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        debug_assert!(relators.iter().all(|r| r.is_over(generators.len())));
        Self {
            generators,
            relators: relators.into_iter().filter(|r| !r.is_empty()).collect(),
        }
    }

    /// A two-generator presentation on `R` and `S`.
    pub fn map(relators: Vec<Word>) -> Self {
        Self::new(vec!["R".into(), "S".into()], relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The same generators with `extra` appended to the relators.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Self {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Self::new(self.generators.clone(), relators)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_presentation(text)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse_word(text, &self.generators)
    }
}

impl fmt::Display for Presentation {
    /// Canonical text form, e.g. `gens R S ; rels R^3, S^3, (R*S)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens {} ; rels ", self.generators.join(" "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        Ok(())
    }
}
