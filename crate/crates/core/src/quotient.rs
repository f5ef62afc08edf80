//! Subgroups of the rotation group and the quotient maps they induce.

use crate::fpgroup::{Word, DEFAULT_MAX_COSETS};
use crate::mapcore::{MapError, RegularMap};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("subgroup is not normal in the automorphism group")]
    NotNormal,
    #[error("subgroup contains an edge-reversing automorphism")]
    ReversesEdge,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("quotient has order {found}, expected {expected}; the added relators generate a larger kernel")]
    KernelMismatch { expected: usize, found: usize },
}

/// A subgroup together with words in `R`, `S` for its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
    generator_words: Vec<Word>,
}

impl Subgroup {
    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_words(&self) -> &[Word] {
        &self.generator_words
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

fn closure(m: &RegularMap, gens: &[usize]) -> Vec<usize> {
    let t = m.table();
    let mut seen = vec![false; m.order()];
    seen[0] = true;
    let mut out = vec![0];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &g in gens {
            let y = t.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Smallest subgroup containing `gens`; generator words are the tree words
/// of the group table.
pub fn subgroup_closure(m: &RegularMap, gens: &[usize]) -> Subgroup {
    Subgroup {
        elements: closure(m, gens),
        generators: gens.to_vec(),
        generator_words: gens.iter().map(|&g| m.table().word_of(g)).collect(),
    }
}

/// Subgroup generated by the given words.
pub fn subgroup_from_words(m: &RegularMap, words: &[Word]) -> Subgroup {
    let gens: Vec<usize> = words.iter().map(|w| m.table().eval(w)).collect();
    Subgroup {
        elements: closure(m, &gens),
        generators: gens,
        generator_words: words.to_vec(),
    }
}

/// Closed under conjugation by `R` and `S` and, for reflexive maps, under the
/// automorphism inverting both generators.
pub fn is_normal_in_aut(m: &RegularMap, h: &Subgroup) -> bool {
    let t = m.table();
    let conjugation_closed = h
        .generators
        .iter()
        .all(|&g| [m.r(), m.s()].iter().all(|&x| h.contains(t.conjugate(x, g))));
    conjugation_closed
        && (!m.is_reflexive()
            || h.generator_words
                .iter()
                .all(|w| h.contains(t.eval(&w.invert_generators()))))
}

/// Conjugacy class of `RS`: the automorphisms reversing some edge.
fn edge_reversals(m: &RegularMap) -> Vec<bool> {
    let t = m.table();
    let mut seen = vec![false; m.order()];
    let rs = m.rs();
    seen[rs] = true;
    let mut stack = vec![rs];
    while let Some(x) = stack.pop() {
        for g in [m.r(), m.s()] {
            let y = t.conjugate(g, x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

pub fn reverses_some_edge(m: &RegularMap, h: &Subgroup) -> bool {
    let reversals = edge_reversals(m);
    h.elements.iter().any(|&e| reversals[e])
}

/// Multiset of orbit sizes of `h` on vertices, edges and faces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitStats {
    pub vertices: BTreeMap<usize, usize>,
    pub edges: BTreeMap<usize, usize>,
    pub faces: BTreeMap<usize, usize>,
}

impl OrbitStats {
    pub fn vertex_orbits(&self) -> usize {
        self.vertices.values().sum()
    }

    pub fn edge_orbits(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn face_orbits(&self) -> usize {
        self.faces.values().sum()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn orbit_sizes(count: usize, class_of: impl Fn(usize) -> usize, darts: &[Vec<u32>]) -> BTreeMap<usize, usize> {
    let mut parent: Vec<usize> = (0..count).collect();
    for perm in darts {
        for (d, &hd) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, class_of(d)), find(&mut parent, class_of(hd as usize)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut sizes = BTreeMap::<usize, usize>::new();
    for x in 0..count {
        *sizes.entry(find(&mut parent, x)).or_default() += 1;
    }
    let mut out = BTreeMap::new();
    for size in sizes.into_values() {
        *out.entry(size).or_default() += 1;
    }
    out
}

/// Orbits of `h` acting by left multiplication on the cells.
pub fn orbit_statistics(m: &RegularMap, h: &Subgroup) -> OrbitStats {
    let perms: Vec<Vec<u32>> = h.generators.iter().map(|&g| m.table().left_perm(g)).collect();
    let c = m.cells();
    OrbitStats {
        vertices: orbit_sizes(c.vertex_count(), |d| c.vertex_of(d), &perms),
        edges: orbit_sizes(c.edge_count(), |d| c.edge_of(d), &perms),
        faces: orbit_sizes(c.face_count(), |d| c.face_of(d), &perms),
    }
}

/// Map of `Aut⁺(m)/h`, obtained by adding the generator words of `h` as
/// relators and enumerating again.
pub fn quotient_map(m: &RegularMap, h: &Subgroup) -> Result<RegularMap, QuotientError> {
    quotient_map_bounded(m, h, DEFAULT_MAX_COSETS)
}

pub fn quotient_map_bounded(m: &RegularMap, h: &Subgroup, max_cosets: usize) -> Result<RegularMap, QuotientError> {
    if reverses_some_edge(m, h) {
        return Err(QuotientError::ReversesEdge);
    }
    if !is_normal_in_aut(m, h) {
        return Err(QuotientError::NotNormal);
    }
    let p = m.presentation().with_relators(h.generator_words.iter().cloned());
    let out = RegularMap::build(&p, max_cosets)?;
    if out.order() * h.order() != m.order() {
        return Err(QuotientError::KernelMismatch {
            expected: m.order() / h.order(),
            found: out.order(),
        });
    }
    Ok(out)
}
