//! Freely reduced words over a finite generating set.

use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column of this letter in a coset table: `2g` for `g`, `2g + 1` for `g⁻¹`.
    pub fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }

    pub fn from_column(column: usize) -> Self {
        Self::new(column / 2, column % 2 == 1)
    }
}

/// A freely reduced word. Construction always reduces, so adjacent letters are
/// never mutually inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self {
            letters: vec![Letter::new(g, false)],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter, cancelling against the last one when they are inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    /// `self^e` for any integer exponent; exponent 0 gives the empty word.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::empty();
        for _ in 0..e.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Commutator `[a,b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// Image under the substitution sending every generator to its inverse.
    pub fn invert_generators(&self) -> Self {
        Self::from_letters(self.letters.iter().map(|l| l.inv()))
    }

    /// Whether every generator id is below `n`.
    pub fn is_over(&self, n: usize) -> bool {
        self.letters.iter().all(|l| l.generator < n)
    }

    /// Renders the word with the given generator names, e.g. `(R^-1*S)^3*R^2`.
    ///
    /// Proper powers are written as `(u)^k` with `u` primitive; otherwise runs of
    /// one letter become syllables `X^k`. The empty word renders as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }

    /// Smallest period `d` such that the word is `u^(len/d)` for a prefix `u` of
    /// length `d`.
    fn root_len(&self) -> usize {
        let n = self.letters.len();
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| (d..n).all(|i| self.letters[i] == self.letters[i - d]))
            .unwrap_or(n)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

fn write_syllables(f: &mut fmt::Formatter<'_>, letters: &[Letter], names: &[String]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        let name = names
            .get(l.generator)
            .map(String::as_str)
            .unwrap_or("?");
        let exp = if l.inverse { -(run as i64) } else { run as i64 };
        if exp == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{exp}")?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.letters;
        if letters.is_empty() {
            return f.write_str("1");
        }
        let d = self.word.root_len();
        let k = letters.len() / d;
        let root = &letters[..d];
        let single_syllable = root.iter().all(|&l| l == root[0]);
        if k > 1 && !single_syllable {
            f.write_str("(")?;
            write_syllables(f, root, self.names)?;
            write!(f, ")^{k}")
        } else {
            write_syllables(f, letters, self.names)
        }
    }
}
