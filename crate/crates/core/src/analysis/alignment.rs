use super::{AnalysisError, VertexRotations};
use crate::mapcore::RegularMap;
use num_integer::Integer;
use std::collections::BTreeSet;

/// Partition of the vertices into diagonal-alignment classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub primitive_period: usize,
    pub even_period: usize,
}

fn require_triangles(m: &RegularMap) -> Result<(), AnalysisError> {
    if m.p() == 3 {
        Ok(())
    } else {
        Err(AnalysisError::NotTriangular { p: m.p() })
    }
}

pub(crate) fn diagonal_with(rot: &VertexRotations, v: usize) -> BTreeSet<usize> {
    let m = rot.map();
    m.skeleton_neighbors(v)
        .into_iter()
        .map(|w| m.act_on_vertex(rot.power(w, 2), v))
        .collect()
}

/// `{ S_w²(v) : w adjacent to v }`.
pub fn diagonal_neighbors(m: &RegularMap, v: usize) -> Result<BTreeSet<usize>, AnalysisError> {
    require_triangles(m)?;
    Ok(diagonal_with(&VertexRotations::new(m), v))
}

pub(crate) fn classes_with(rot: &VertexRotations) -> Alignment {
    let n = rot.map().vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![start];
        class_of[start] = id;
        let mut i = 0;
        while i < class.len() {
            for x in diagonal_with(rot, class[i]) {
                if class_of[x] == usize::MAX {
                    class_of[x] = id;
                    class.push(x);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    Alignment { classes, class_of }
}

/// Classes of the transitive closure of the diagonal-neighbor relation.
/// The relation is symmetric, since `S_w²(v) = v'` gives `S_w⁻²(v') = v`
/// and `w` is adjacent to `v'` as well, so a breadth-first closure suffices.
pub fn alignment_classes(m: &RegularMap) -> Result<Alignment, AnalysisError> {
    require_triangles(m)?;
    Ok(classes_with(&VertexRotations::new(m)))
}

pub(crate) fn period_with(rot: &VertexRotations, a: &Alignment) -> Result<usize, AnalysisError> {
    let m = rot.map();
    let q = m.q();
    let mut period = None;
    for v in 0..m.vertex_count() {
        let class = &a.classes[a.class_of[v]];
        let j = (1..=q)
            .find(|&j| class.iter().all(|&x| rot.fixes(rot.power(v, j), x)))
            .unwrap_or(q);
        match period {
            None => period = Some(j),
            Some(j0) if j0 != j => {
                return Err(AnalysisError::RegularityViolation(format!(
                    "primitive period {j0} at vertex 0 but {j} at vertex {v}"
                )))
            }
            _ => {}
        }
    }
    Ok(period.unwrap_or(q))
}

/// Least `j` in `1..=q` such that `S_v^j` fixes the class of `v` pointwise,
/// checked to be the same at every vertex.
pub fn primitive_period(m: &RegularMap) -> Result<usize, AnalysisError> {
    alignment_data(m).map(|d| d.primitive_period)
}

/// `lcm(j, 2)` for the primitive period `j`.
pub fn even_period(m: &RegularMap) -> Result<usize, AnalysisError> {
    alignment_data(m).map(|d| d.even_period)
}

pub fn alignment_data(m: &RegularMap) -> Result<AlignmentData, AnalysisError> {
    require_triangles(m)?;
    let rot = VertexRotations::new(m);
    let a = classes_with(&rot);
    let j = period_with(&rot, &a)?;
    Ok(AlignmentData {
        classes: a.classes,
        class_of: a.class_of,
        primitive_period: j,
        even_period: j.lcm(&2),
    })
}

pub(crate) fn transfer_with(rot: &VertexRotations, v: usize, v2: usize, j: usize) -> Option<usize> {
    let q = rot.map().q();
    if j == 0 || j > q {
        return None;
    }
    let e = rot.power(v, j);
    if !rot.fixes(e, v2) {
        return None;
    }
    let i = rot.exponent_of(v2, e)?;
    let d = j.gcd(&q);
    let modulus = q / d;
    if i % d != 0 {
        return None;
    }
    // Solve k·(j/d) ≡ i/d (mod q/d); j/d is a unit there.
    let (jj, ii, mm) = ((j / d) as i64, (i / d) as i64, modulus as i64);
    let inv = jj.extended_gcd(&mm).x.rem_euclid(mm);
    let k = (ii * inv).rem_euclid(mm);
    Some(if k == 0 { modulus } else { k as usize })
}

/// The `k` with `S_v^j = S_{v'}^{kj}`, reduced into `1..=q/gcd(j,q)`, when
/// `S_v^j` fixes `v'`.
pub fn rotation_transfer(m: &RegularMap, v: usize, v2: usize, j: usize) -> Option<usize> {
    transfer_with(&VertexRotations::new(m), v, v2, j)
}
