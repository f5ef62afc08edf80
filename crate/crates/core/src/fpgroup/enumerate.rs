//! HLT coset enumeration with coincidence processing.
//!
//! Cosets are numbered from 0 (the subgroup itself). Columns follow
//! [`Letter::column`]: `2g` for generator `g`, `2g + 1` for its inverse. After
//! completion the table is compacted and renumbered in breadth-first order
//! from coset 0, scanning columns in increasing order, so the result depends
//! only on the input.

use super::{Letter, Presentation, Word};
use std::collections::VecDeque;
use thiserror::Error;

const UNDEF: u32 = u32::MAX;

/// Default bound on the number of coset definitions.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("coset enumeration exceeded {limit} cosets (group may be infinite or the bound too small)")]
    Overflow { limit: usize },
    #[error("coset bound must be at least 1")]
    InvalidBound,
    #[error("word uses a generator outside the presentation")]
    ForeignWord,
}

/// A complete coset table for a subgroup of a finitely presented group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    columns: usize,
    entries: Vec<u32>,
    subgroup: Vec<Word>,
}

impl CosetTable {
    /// Number of cosets, i.e. the index of the subgroup.
    pub fn len(&self) -> usize {
        self.entries.len() / self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of columns (twice the number of generators).
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn subgroup(&self) -> &[Word] {
        &self.subgroup
    }

    /// The coset reached from `coset` by the letter with column `column`.
    pub fn get(&self, coset: usize, column: usize) -> usize {
        self.entries[coset * self.columns + column] as usize
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.get(coset, letter.column())
    }

    /// Traces `word` from `coset`, letter by letter.
    pub fn trace(&self, coset: usize, word: &Word) -> usize {
        word.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Every entry is defined.
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|&e| e != UNDEF)
    }

    /// `get(c, x⁻¹) = d` exactly when `get(d, x) = c`.
    pub fn is_compatible(&self) -> bool {
        (0..self.len()).all(|c| {
            (0..self.columns).all(|x| {
                let d = self.get(c, x);
                d < self.len() && self.get(d, x ^ 1) == c
            })
        })
    }

    /// Every relator, traced from every coset, returns to its start, and every
    /// subgroup generator fixes coset 0.
    pub fn satisfies(&self, presentation: &Presentation) -> bool {
        let relators_ok = presentation
            .relators()
            .iter()
            .all(|r| (0..self.len()).all(|c| self.trace(c, r) == c));
        relators_ok && self.subgroup.iter().all(|h| self.trace(0, h) == 0)
    }
}

struct Enumerator {
    columns: usize,
    table: Vec<u32>,
    /// Union-find parent for coincidences; `forward[c] == c` for live cosets.
    forward: Vec<u32>,
    limit: usize,
}

impl Enumerator {
    fn new(columns: usize, limit: usize) -> Self {
        Self {
            columns,
            table: vec![UNDEF; columns],
            forward: vec![0],
            limit,
        }
    }

    fn count(&self) -> usize {
        self.forward.len()
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.columns + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.columns + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), EnumerationError> {
        if self.count() >= self.limit {
            return Err(EnumerationError::Overflow { limit: self.limit });
        }
        let d = self.count() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.columns));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi as usize] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.columns {
                let target = self.get(dead, x);
                if target == UNDEF {
                    continue;
                }
                self.set(target, x ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x, &mut queue);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Traces `word` (as columns) from `c` in both directions, defining new
    /// cosets until the cycle closes.
    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), EnumerationError> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j && self.get(f, word[i as usize]) != UNDEF {
                f = self.get(f, word[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize] ^ 1) != UNDEF {
                b = self.get(b, word[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction
                let x = word[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<(), EnumerationError> {
        for h in subgroup {
            self.scan_and_fill(0, h)?;
        }
        let mut alpha = 0u32;
        while (alpha as usize) < self.count() {
            for r in relators {
                if !self.is_live(alpha) {
                    break;
                }
                self.scan_and_fill(alpha, r)?;
            }
            if self.is_live(alpha) {
                for x in 0..self.columns {
                    if self.get(alpha, x) == UNDEF {
                        self.define(alpha, x)?;
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    /// Compacts to live cosets renumbered breadth-first from coset 0.
    fn standardize(&self) -> Vec<u32> {
        let n = self.count();
        let mut number = vec![UNDEF; n];
        let mut order = Vec::new();
        number[0] = 0;
        order.push(0u32);
        let mut queue = VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for x in 0..self.columns {
                let d = self.get(c, x);
                if number[d as usize] == UNDEF {
                    number[d as usize] = order.len() as u32;
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        let mut entries = Vec::with_capacity(order.len() * self.columns);
        for &c in &order {
            for x in 0..self.columns {
                entries.push(number[self.get(c, x) as usize]);
            }
        }
        entries
    }
}

fn columns_of(word: &Word) -> Vec<usize> {
    word.letters().iter().map(|l| l.column()).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// defined by `presentation`.
pub fn coset_enumeration(
    presentation: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::InvalidBound);
    }
    let gens = presentation.generators().len();
    if subgroup.iter().any(|w| !w.is_over(gens)) {
        return Err(EnumerationError::ForeignWord);
    }
    let columns = 2 * gens;
    let relators: Vec<Vec<usize>> = presentation.relators().iter().map(columns_of).collect();
    let subgroup_cols: Vec<Vec<usize>> = subgroup.iter().map(columns_of).collect();

    let mut e = Enumerator::new(columns, max_cosets);
    e.run(&relators, &subgroup_cols)?;
    let entries = e.standardize();
    Ok(CosetTable {
        columns,
        entries,
        subgroup: subgroup.to_vec(),
    })
}
