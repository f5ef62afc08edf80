//! Graph invariants of regular maps and the property suite over them.

mod alignment;
mod lemmas;
mod rotations;

pub use alignment::{
    alignment_classes, alignment_data, diagonal_neighbors, even_period, primitive_period, rotation_transfer,
    Alignment, AlignmentData,
};
pub use lemmas::{lemma_suite, lemma_suite_with, LemmaCheck, LemmaOptions, LemmaReport};
pub use rotations::VertexRotations;

use crate::mapcore::{Graph, RegularMap};
use num_rational::Ratio;
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

/// Exact density value.
pub type Density = Ratio<u64>;

/// `num/den` in lowest terms, e.g. `2/3`; integers keep the `/1`.
pub fn density_string(d: &Density) -> String {
    format!("{}/{}", d.numer(), d.denom())
}

pub(crate) fn serialize_density<S: serde::Serializer>(d: &Density, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(&density_string(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("regularity violated: {0}")]
    RegularityViolation(String),
    #[error("diagonal structure needs triangular faces, but p = {p}")]
    NotTriangular { p: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub density: Density,
    pub q: usize,
    pub vertex_count: usize,
    pub per_vertex_neighbor_counts: Vec<usize>,
}

/// `|∂D₁(v)| / |V|`, computed at every vertex and required to agree.
pub fn density(m: &RegularMap) -> Result<DensityReport, AnalysisError> {
    let g = m.skeleton();
    let counts: Vec<usize> = (0..g.vertex_count()).map(|v| g.distinct_neighbors(v).len()).collect();
    if let Some(v) = counts.iter().position(|&c| c != counts[0]) {
        return Err(AnalysisError::RegularityViolation(format!(
            "vertex 0 has {} neighbors but vertex {v} has {}",
            counts[0], counts[v]
        )));
    }
    Ok(DensityReport {
        density: Ratio::new(counts[0] as u64, counts.len() as u64),
        q: m.q(),
        vertex_count: counts.len(),
        per_vertex_neighbor_counts: counts,
    })
}

/// Breadth-first distances from `v`; `None` for unreachable vertices.
pub fn distances(g: &Graph, v: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap_or(0);
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// The closed ball `D_i(v)` and the sphere `∂D_i(v)`.
pub fn neighborhood(g: &Graph, v: usize, i: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let dist = distances(g, v);
    let mut ball = BTreeSet::new();
    let mut sphere = BTreeSet::new();
    for (x, d) in dist.iter().enumerate() {
        match d {
            Some(d) if *d < i => {
                ball.insert(x);
            }
            Some(d) if *d == i => {
                ball.insert(x);
                sphere.insert(x);
            }
            _ => {}
        }
    }
    (ball, sphere)
}

/// Largest breadth-first distance between two vertices.
pub fn diameter(g: &Graph) -> Result<usize, AnalysisError> {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in distances(g, v) {
            best = best.max(d.ok_or(AnalysisError::Disconnected)?);
        }
    }
    Ok(best)
}
