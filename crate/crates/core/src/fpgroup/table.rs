//! A finite group stored as its right regular representation.
//!
//! Element `e` is the coset of the trivial subgroup reached from the identity
//! (index 0); the generator columns give right multiplication `e ↦ e·x`.
//! Because indices are in breadth-first order, every non-identity element has
//! a parent with a smaller index, which makes left multiplication by a fixed
//! element computable in one linear pass.

use super::{coset_enumeration, CosetTable, EnumerationError, Letter, Presentation, Word};

const ROOT: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    generators: usize,
    /// `perms[col][e] = e · letter(col)`.
    perms: Vec<Vec<u32>>,
    /// Breadth-first tree: `e = parent[e] · letter(parent_col[e])`.
    parent: Vec<u32>,
    parent_col: Vec<u8>,
    inverse: Vec<u32>,
}

impl GroupTable {
    /// Builds the table from a complete coset table of the trivial subgroup.
    pub fn from_coset_table(t: &CosetTable) -> Self {
        let n = t.len();
        let columns = t.columns();
        let perms: Vec<Vec<u32>> = (0..columns)
            .map(|x| (0..n).map(|c| t.get(c, x) as u32).collect())
            .collect();
        let mut parent = vec![0u32; n];
        let mut parent_col = vec![ROOT; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        for c in 0..n {
            for (x, perm) in perms.iter().enumerate() {
                let d = perm[c] as usize;
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = c as u32;
                    parent_col[d] = x as u8;
                }
            }
        }
        debug_assert!((1..n).all(|e| (parent[e] as usize) < e));
        let mut table = Self {
            generators: columns / 2,
            perms,
            parent,
            parent_col,
            inverse: Vec::new(),
        };
        table.inverse = (0..n)
            .map(|e| {
                let mut c = 0usize;
                let mut cur = e;
                while cur != 0 {
                    c = table.perms[table.parent_col[cur] as usize ^ 1][c] as usize;
                    cur = table.parent[cur] as usize;
                }
                c as u32
            })
            .collect();
        table
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// Right multiplication by generator `g` as a permutation of indices.
    pub fn gen_perm(&self, g: usize) -> &[u32] {
        &self.perms[2 * g]
    }

    /// `e · l`.
    pub fn act(&self, e: usize, l: Letter) -> usize {
        self.perms[l.column()][e] as usize
    }

    /// Element of a single generator.
    pub fn generator(&self, g: usize) -> usize {
        self.perms[2 * g][0] as usize
    }

    /// Tree word for `e`, read left to right from the identity.
    pub fn word_of(&self, e: usize) -> Word {
        let mut cols = Vec::new();
        let mut cur = e;
        while cur != 0 {
            cols.push(self.parent_col[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        Word::from_letters(cols.into_iter().rev().map(Letter::from_column))
    }

    /// Evaluates `w` from the identity.
    pub fn eval(&self, w: &Word) -> usize {
        self.trace(0, w)
    }

    /// `e · w`.
    pub fn trace(&self, e: usize, w: &Word) -> usize {
        w.letters().iter().fold(e, |c, &l| self.act(c, l))
    }

    /// Product `a · b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if b == 0 {
            return a;
        }
        let p = self.mul(a, self.parent[b] as usize);
        self.perms[self.parent_col[b] as usize][p] as usize
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.inverse[e] as usize
    }

    /// `g · x · g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// `[a,b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inverse(ba), ab)
    }

    /// `e^k` for any integer `k`.
    pub fn pow(&self, e: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(e) } else { e };
        let mut result = 0;
        let mut sq = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        result
    }

    /// Least `k ≥ 1` with `e^k = 1`.
    pub fn element_order(&self, e: usize) -> usize {
        let mut k = 1;
        let mut x = e;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    /// Left multiplication `x ↦ h·x` as a permutation of all elements.
    pub fn left_perm(&self, h: usize) -> Vec<u32> {
        let n = self.order();
        let mut out = vec![0u32; n];
        out[0] = h as u32;
        for e in 1..n {
            let p = out[self.parent[e] as usize] as usize;
            out[e] = self.perms[self.parent_col[e] as usize][p];
        }
        out
    }
}

/// Enumerates the group of `p` and returns its regular representation.
pub fn regular_representation(p: &Presentation, max_order: usize) -> Result<GroupTable, EnumerationError> {
    let t = coset_enumeration(p, &[], max_order)?;
    Ok(GroupTable::from_coset_table(&t))
}

/// Index of the product of `w`, evaluated left to right from the identity.
pub fn element_of_word(t: &GroupTable, w: &Word) -> usize {
    t.eval(w)
}

pub fn element_order(t: &GroupTable, e: usize) -> usize {
    t.element_order(e)
}

/// Whether every generator ↦ its inverse extends to an automorphism of the
/// group: every relator, with each letter inverted, must evaluate to 1.
pub fn inverting_automorphism_exists(p: &Presentation, t: &GroupTable) -> bool {
    p.relators().iter().all(|r| t.eval(&r.invert_generators()) == 0)
}
