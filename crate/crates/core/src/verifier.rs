//! End-to-end checks: per-map summaries and the density classification over
//! a collection of maps.

use crate::analysis::{lemma_suite_with, serialize_density, Density, LemmaOptions, LemmaReport};
use crate::fermat::{fermat_presentation, tetrahedron_presentation};
use crate::fpgroup::{Letter, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::mapcore::{Classification, MapError, RegularMap};
use num_rational::Ratio;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapSummary {
    pub id: String,
    pub order: usize,
    pub p: usize,
    pub q: usize,
    pub genus: u64,
    pub simple: bool,
    pub reflexive: bool,
    #[serde(serialize_with = "serialize_density")]
    pub density: Density,
    pub classification: Classification,
    pub lemma_failures: Vec<String>,
    #[serde(skip)]
    pub lemmas: LemmaReport,
}

impl MapSummary {
    /// Simple, reflexive and of density strictly above 1/2.
    pub fn is_high_density(&self) -> bool {
        self.simple && self.reflexive && self.density > Ratio::new(1, 2)
    }
}

pub fn analyze_map(m: &RegularMap) -> MapSummary {
    analyze_named("", m, &LemmaOptions::default())
}

pub fn analyze_named(id: &str, m: &RegularMap, opts: &LemmaOptions) -> MapSummary {
    let graph = m.skeleton();
    // Vertex 0 is representative; the suite checks that all vertices agree.
    let density = Ratio::new(graph.distinct_neighbors(0).len() as u64, graph.vertex_count() as u64);
    let lemmas = lemma_suite_with(m, opts);
    MapSummary {
        id: id.to_string(),
        order: m.order(),
        p: m.p(),
        q: m.q(),
        genus: m.genus(),
        simple: graph.is_simple(),
        reflexive: m.is_reflexive(),
        density,
        classification: m.classify(),
        lemma_failures: lemmas.failures().map(|c| c.lemma.clone()).collect(),
        lemmas,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedMap {
    pub id: String,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub id: String,
    pub lemma: String,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub total: usize,
    pub high_density_count: usize,
    pub high_density: Vec<ClassifiedMap>,
    pub classified: Vec<ClassifiedMap>,
    /// High-density maps that are neither the tetrahedron nor Fermat.
    pub violations: Vec<String>,
    pub lemma_failures: Vec<LemmaFailure>,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.lemma_failures.is_empty()
    }
}

/// Collects the classification over already analyzed maps, in input order.
pub fn theorem_report(summaries: &[MapSummary]) -> TheoremReport {
    let classified: Vec<ClassifiedMap> = summaries
        .iter()
        .map(|s| ClassifiedMap {
            id: s.id.clone(),
            classification: s.classification,
        })
        .collect();
    let high_density: Vec<ClassifiedMap> = summaries
        .iter()
        .filter(|s| s.is_high_density())
        .map(|s| ClassifiedMap {
            id: s.id.clone(),
            classification: s.classification,
        })
        .collect();
    let violations = high_density
        .iter()
        .filter(|c| c.classification == Classification::Other)
        .map(|c| c.id.clone())
        .collect();
    let lemma_failures = summaries
        .iter()
        .flat_map(|s| {
            s.lemmas.failures().map(|c| LemmaFailure {
                id: s.id.clone(),
                lemma: c.lemma.clone(),
                witness: c.witness.clone(),
            })
        })
        .collect();
    TheoremReport {
        total: summaries.len(),
        high_density_count: high_density.len(),
        high_density,
        classified,
        violations,
        lemma_failures,
    }
}

/// Analyzes each map and checks that every simple reflexive map of density
/// above 1/2 is the tetrahedron or a Fermat map.
pub fn verify_density_theorem(maps: &[(String, RegularMap)]) -> TheoremReport {
    let summaries: Vec<MapSummary> = maps
        .iter()
        .map(|(id, m)| analyze_named(id, m, &LemmaOptions::default()))
        .collect();
    theorem_report(&summaries)
}

fn letter_word(g: usize, k: i64) -> Word {
    Word::from_letters([Letter::new(g, false)]).pow(k)
}

/// `⟨R, S | R^p, S^q, (RS)², extra⟩`.
fn triangle(p: i64, q: i64, extra: &[Word]) -> Presentation {
    let (r, s) = (letter_word(0, 1), letter_word(1, 1));
    let mut relators = vec![r.pow(p), s.pow(q), r.concat(&s).pow(2)];
    relators.extend(extra.iter().cloned());
    Presentation::map(relators)
}

/// Regular maps of genus 0 and 1 built from known presentations: the
/// tetrahedron, `fer(1..3)`, the other Platonic maps, dihedra, hosohedra and
/// a few torus maps (reflexive and chiral).
pub fn builtin_presentations() -> Vec<(String, Presentation)> {
    let (r, s) = (letter_word(0, 1), letter_word(1, 1));
    let fer = |n: u64| fermat_presentation(n).expect("n >= 1");
    // {4,4} torus maps: (R S⁻¹)^b (R⁻¹ S)^c = 1, order 4(b² + c²).
    let square = |b: i64, c: i64| triangle(4, 4, &[r.concat(&s.pow(-1)).pow(b).concat(&r.pow(-1).concat(&s).pow(c))]);
    // {3,6} torus maps: (R S⁻²)^b (R⁻¹ S²)^c = 1, order 6(b² + bc + c²).
    let hex = |b: i64, c: i64| triangle(3, 6, &[r.concat(&s.pow(-2)).pow(b).concat(&r.pow(-1).concat(&s.pow(2)).pow(c))]);
    let mut out = vec![
        ("tet".to_string(), tetrahedron_presentation()),
        ("fer1".to_string(), fer(1)),
        ("fer2".to_string(), fer(2)),
        ("fer3".to_string(), fer(3)),
        ("cube".to_string(), triangle(4, 3, &[])),
        ("icosahedron".to_string(), triangle(3, 5, &[])),
        ("dodecahedron".to_string(), triangle(5, 3, &[])),
    ];
    for k in [4, 5, 6] {
        out.push((format!("dihedron{k}"), triangle(k, 2, &[])));
    }
    for k in [2, 3, 4] {
        out.push((format!("hosohedron{k}"), triangle(2, k, &[])));
    }
    out.push(("torus44_3_0".into(), square(3, 0)));
    out.push(("torus44_2_1".into(), square(2, 1)));
    out.push(("torus36_2_1".into(), hex(2, 1)));
    out.push(("torus36_2_2".into(), hex(2, 2)));
    out
}

pub fn builtin_maps() -> Result<Vec<(String, RegularMap)>, MapError> {
    builtin_presentations()
        .into_iter()
        .map(|(id, p)| Ok((id, RegularMap::build(&p, DEFAULT_MAX_COSETS)?)))
        .collect()
}
