//! Regular maps built from standard map presentations.
//!
//! Directed edges (darts) are group elements, the identity being the base
//! dart. Vertices are left cosets `g⟨S⟩`, faces `g⟨R⟩` and edges `g⟨RS⟩`;
//! automorphisms act by left multiplication. Since the cosets `g⟨x⟩` are the
//! cycles of right multiplication by `x`, all three partitions come straight
//! out of the regular representation.

use crate::fermat;
use crate::fpgroup::{
    inverting_automorphism_exists, regular_representation, EnumerationError, GroupTable, Letter, Presentation,
    DEFAULT_MAX_COSETS,
};
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("a map presentation needs exactly 2 generators, found {0}")]
    GeneratorCount(usize),
    #[error("generator {0} is trivial in the group")]
    TrivialGenerator(String),
    #[error("R*S has order {rs_order}, expected 2")]
    NotAMap { rs_order: usize },
    #[error("cell counts V={vertices} E={edges} F={faces} give no orientable genus")]
    NonOrientableOrInconsistent { vertices: usize, edges: usize, faces: usize },
}

/// The three cell partitions of the darts, each class with a dense id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStructure {
    vertex_of: Vec<u32>,
    edge_of: Vec<u32>,
    face_of: Vec<u32>,
    /// Darts of each vertex in rotation order `g, gS, gS², …`.
    vertices: Vec<Vec<u32>>,
    /// The two darts `g, g·RS` of each edge.
    edges: Vec<Vec<u32>>,
    /// Darts of each face in order `g, gR, gR², …`.
    faces: Vec<Vec<u32>>,
}

/// Cycles of a permutation, each starting at its smallest point, ordered by
/// that point.
fn cycles(perm: &[u32]) -> (Vec<u32>, Vec<Vec<u32>>) {
    let mut class = vec![u32::MAX; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if class[start] != u32::MAX {
            continue;
        }
        let id = out.len() as u32;
        let mut cycle = Vec::new();
        let mut cur = start;
        while class[cur] == u32::MAX {
            class[cur] = id;
            cycle.push(cur as u32);
            cur = perm[cur] as usize;
        }
        out.push(cycle);
    }
    (class, out)
}

impl CellStructure {
    fn new(table: &GroupTable) -> Self {
        let r_perm = table.gen_perm(0);
        let s_perm = table.gen_perm(1);
        let rs_perm: Vec<u32> = r_perm.iter().map(|&x| s_perm[x as usize]).collect();
        let (vertex_of, vertices) = cycles(s_perm);
        let (edge_of, edges) = cycles(&rs_perm);
        let (face_of, faces) = cycles(r_perm);
        Self {
            vertex_of,
            edge_of,
            face_of,
            vertices,
            edges,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart] as usize
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of[dart] as usize
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart] as usize
    }

    pub fn vertex_darts(&self, v: usize) -> &[u32] {
        &self.vertices[v]
    }

    pub fn edge_darts(&self, e: usize) -> &[u32] {
        &self.edges[e]
    }

    pub fn face_darts(&self, f: usize) -> &[u32] {
        &self.faces[f]
    }
}

/// Vertex adjacency as a multiset: one entry per dart, so loops appear twice
/// and parallel edges repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        Self { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of `v` other than `v`, without repetition.
    pub fn distinct_neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.adjacency[v].iter().copied().filter(|&w| w != v).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.adjacency.iter().enumerate().any(|(v, n)| n.contains(&v))
    }

    /// No loops and no repeated neighbor entries.
    pub fn is_simple(&self) -> bool {
        !self.has_loops()
            && self.adjacency.iter().all(|n| {
                let set: BTreeSet<_> = n.iter().collect();
                set.len() == n.len()
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    Tetrahedron,
    Fermat(u64),
    Other,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Tetrahedron => f.write_str("tetrahedron"),
            Classification::Fermat(n) => write!(f, "fermat({n})"),
            Classification::Other => f.write_str("other"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn euler_genus(c: &CellStructure) -> Result<u64, MapError> {
    let (v, e, f) = (c.vertex_count(), c.edge_count(), c.face_count());
    let twice = 2 + e as i64 - v as i64 - f as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(MapError::NonOrientableOrInconsistent {
            vertices: v,
            edges: e,
            faces: f,
        });
    }
    Ok(twice as u64 / 2)
}

/// A regular map: its rotation group together with the cells.
#[derive(Debug, Clone)]
pub struct RegularMap {
    presentation: Presentation,
    table: GroupTable,
    r: usize,
    s: usize,
    p: usize,
    q: usize,
    genus: u64,
    cells: CellStructure,
}

/// Builds the map of a standard map presentation with the default coset bound.
pub fn build_map(p: &Presentation) -> Result<RegularMap, MapError> {
    RegularMap::build(p, DEFAULT_MAX_COSETS)
}

impl RegularMap {
    /// Enumerates the group of `p` (generators `R`, `S` in that order) and
    /// builds the cells. `p` and `q` are the actual orders of `R` and `S`.
    pub fn build(presentation: &Presentation, max_cosets: usize) -> Result<Self, MapError> {
        let gens = presentation.generators();
        if gens.len() != 2 {
            return Err(MapError::GeneratorCount(gens.len()));
        }
        let table = regular_representation(presentation, max_cosets)?;
        let r = table.generator(0);
        let s = table.generator(1);
        for (g, e) in [(0, r), (1, s)] {
            if e == 0 {
                return Err(MapError::TrivialGenerator(gens[g].clone()));
            }
        }
        let rs_order = table.element_order(table.mul(r, s));
        if rs_order != 2 {
            return Err(MapError::NotAMap { rs_order });
        }
        let p = table.element_order(r);
        let q = table.element_order(s);
        let cells = CellStructure::new(&table);
        let genus = euler_genus(&cells)?;
        Ok(Self {
            presentation: presentation.clone(),
            table,
            r,
            s,
            p,
            q,
            genus,
            cells,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    /// Number of darts, i.e. the order of the rotation group.
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn rs(&self) -> usize {
        self.table.mul(self.r, self.s)
    }

    /// Face size: the order of `R`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Valency: the order of `S`.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn map_type(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn cells(&self) -> &CellStructure {
        &self.cells
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.vertex_count()
    }

    /// Smallest dart at `v`.
    pub fn vertex_dart(&self, v: usize) -> usize {
        self.cells.vertices[v][0] as usize
    }

    /// Vertex `h(v)` for an automorphism `h`.
    pub fn act_on_vertex(&self, h: usize, v: usize) -> usize {
        self.cells.vertex_of(self.table.mul(h, self.vertex_dart(v)))
    }

    /// Rotation about `v`, `g S g⁻¹` for any dart `g` at `v`.
    pub fn vertex_rotation(&self, v: usize) -> usize {
        self.table.conjugate(self.vertex_dart(v), self.s)
    }

    /// Rotation about face `f`, `g R g⁻¹` for any dart `g` on `f`.
    pub fn face_rotation(&self, f: usize) -> usize {
        self.table.conjugate(self.cells.faces[f][0] as usize, self.r)
    }

    /// Vertices of face `f` in boundary order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.cells.faces[f].iter().map(|&d| self.cells.vertex_of(d as usize)).collect()
    }

    /// `g = (2 − V + E − F) / 2`.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// The embedded graph. Neighbors of each vertex are listed in rotation
    /// order, one per dart.
    pub fn skeleton(&self) -> Graph {
        let (r, s) = (Letter::new(0, false), Letter::new(1, false));
        let adjacency = self
            .cells
            .vertices
            .iter()
            .map(|darts| {
                darts
                    .iter()
                    .map(|&g| {
                        let reversed = self.table.act(self.table.act(g as usize, r), s);
                        self.cells.vertex_of(reversed)
                    })
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adjacency)
    }

    /// Distinct neighbors of `v` other than `v` itself.
    pub fn skeleton_neighbors(&self, v: usize) -> BTreeSet<usize> {
        let (r, s) = (Letter::new(0, false), Letter::new(1, false));
        self.cells.vertices[v]
            .iter()
            .map(|&g| self.cells.vertex_of(self.table.act(self.table.act(g as usize, r), s)))
            .filter(|&w| w != v)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.skeleton().is_simple()
    }

    /// Whether `R ↦ R⁻¹, S ↦ S⁻¹` extends to an automorphism.
    pub fn is_reflexive(&self) -> bool {
        inverting_automorphism_exists(&self.presentation, &self.table)
    }

    /// Tetrahedron when the group has order 12 and satisfies the tetrahedral
    /// relators; `Fermat(n)` when `p = 3`, `q = 2n`, the order is `6n²` and
    /// the Fermat relators hold. A group satisfying those relators is a
    /// quotient of the corresponding presented group, so equal orders make it
    /// the same map.
    pub fn classify(&self) -> Classification {
        let holds = |p: &Presentation| p.relators().iter().all(|w| self.table.eval(w) == 0);
        if self.order() == 12 && holds(&fermat::tetrahedron_presentation()) {
            return Classification::Tetrahedron;
        }
        if self.p == 3 && self.q.is_multiple_of(2) {
            let n = (self.q / 2) as u64;
            if self.order() as u64 == 6 * n * n {
                if let Ok(fp) = fermat::fermat_presentation(n) {
                    if holds(&fp) {
                        return Classification::Fermat(n);
                    }
                }
            }
        }
        Classification::Other
    }
}

pub fn genus(m: &RegularMap) -> u64 {
    m.genus()
}

pub fn skeleton(m: &RegularMap) -> Graph {
    m.skeleton()
}

pub fn is_simple(m: &RegularMap) -> bool {
    m.is_simple()
}

pub fn is_reflexive(m: &RegularMap) -> bool {
    m.is_reflexive()
}

pub fn map_type(m: &RegularMap) -> (usize, usize) {
    m.map_type()
}

pub fn classify(m: &RegularMap) -> Classification {
    m.classify()
}
