//! The Fermat maps `fer(n)` and the tetrahedron.

use crate::analysis::{density, even_period, AnalysisError, Density};
use crate::fpgroup::{Letter, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::mapcore::{Classification, MapError, RegularMap};
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FermatError {
    #[error("Fermat maps are indexed by n >= 1")]
    ZeroIndex,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

fn rs() -> (Word, Word) {
    (
        Word::from_letters([Letter::new(0, false)]),
        Word::from_letters([Letter::new(1, false)]),
    )
}

/// `⟨R, S | R³, S^{2n}, (RS)², [R,S]³⟩`.
pub fn fermat_presentation(n: u64) -> Result<Presentation, FermatError> {
    if n == 0 {
        return Err(FermatError::ZeroIndex);
    }
    let (r, s) = rs();
    Ok(Presentation::map(vec![
        r.pow(3),
        s.pow(2 * n as i64),
        r.concat(&s).pow(2),
        Word::commutator(&r, &s).pow(3),
    ]))
}

/// `⟨R, S | R³, S³, (RS)²⟩`.
pub fn tetrahedron_presentation() -> Presentation {
    let (r, s) = rs();
    Presentation::map(vec![r.pow(3), s.pow(3), r.concat(&s).pow(2)])
}

pub fn fermat_map(n: u64) -> Result<RegularMap, FermatError> {
    Ok(RegularMap::build(&fermat_presentation(n)?, DEFAULT_MAX_COSETS)?)
}

pub fn tetrahedron_map() -> RegularMap {
    RegularMap::build(&tetrahedron_presentation(), DEFAULT_MAX_COSETS).expect("the tetrahedral group has order 12")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatReport {
    pub n: u64,
    pub group_order: usize,
    pub vertex_count: usize,
    pub genus: u64,
    #[serde(serialize_with = "crate::analysis::serialize_density")]
    pub density: Density,
    pub simple: bool,
    pub reflexive: bool,
    pub p: usize,
    pub q: usize,
    pub even_period: usize,
    pub classification: Classification,
    pub pass: bool,
}

/// Builds `fer(n)` and compares every invariant against its closed form.
pub fn verify_fermat(n: u64) -> Result<FermatReport, FermatError> {
    let m = fermat_map(n)?;
    let mut report = FermatReport {
        n,
        group_order: m.order(),
        vertex_count: m.vertex_count(),
        genus: m.genus(),
        density: density(&m)?.density,
        simple: m.is_simple(),
        reflexive: m.is_reflexive(),
        p: m.p(),
        q: m.q(),
        even_period: even_period(&m)?,
        classification: m.classify(),
        pass: false,
    };
    let nn = n as usize;
    report.pass = report.group_order == 6 * nn * nn
        && report.vertex_count == 3 * nn
        && report.p == 3
        && report.q == 2 * nn
        && report.genus == (n - 1) * n.saturating_sub(2) / 2
        && report.density == Ratio::new(2, 3)
        && report.simple
        && report.reflexive
        && report.classification == Classification::Fermat(n)
        && report.even_period == 2;
    Ok(report)
}
