//! Executable versions of the structural statements about dense regular
//! maps. Each check carries its own hypothesis; maps outside it get a
//! not-applicable record instead of being skipped.

use super::alignment::{classes_with, diagonal_with, period_with, transfer_with};
use super::{density, diameter, AnalysisError, Density, VertexRotations};
use crate::mapcore::{Classification, Graph, RegularMap};
use crate::quotient::{is_normal_in_aut, quotient_map, reverses_some_edge, subgroup_closure};
use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub lemma: String,
    pub applicable: bool,
    /// `None` when not applicable.
    pub passed: Option<bool>,
    pub witness: Option<String>,
}

impl LemmaCheck {
    fn not_applicable(lemma: &str) -> Self {
        Self {
            lemma: lemma.to_string(),
            applicable: false,
            passed: None,
            witness: None,
        }
    }

    fn outcome(lemma: &str, result: Result<(), String>) -> Self {
        Self {
            lemma: lemma.to_string(),
            applicable: true,
            passed: Some(result.is_ok()),
            witness: result.err(),
        }
    }

    pub fn failed(&self) -> bool {
        self.passed == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
    /// Set when vertex or element quantifiers were restricted to a sample.
    pub sampled: bool,
}

impl LemmaReport {
    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, lemma: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.lemma == lemma)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Quantify over at most this many vertices and group elements.
    pub sample: Option<usize>,
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

struct Ctx<'a> {
    m: &'a RegularMap,
    rot: VertexRotations<'a>,
    graph: Graph,
    q: usize,
    vertices: Vec<usize>,
    elements: Vec<usize>,
    /// `fixed[i][j]`: vertices fixed by `S_v^j` for `v = vertices[i]`,
    /// paired with the transfer exponent (0 if none was found).
    fixed: Vec<Vec<Vec<(usize, usize)>>>,
}

impl<'a> Ctx<'a> {
    fn new(m: &'a RegularMap, opts: &LemmaOptions) -> Self {
        let rot = VertexRotations::new(m);
        let q = m.q();
        let limit = |n: usize| opts.sample.map_or(n, |k| k.clamp(1, n));
        let vertices: Vec<usize> = (0..limit(m.vertex_count())).collect();
        let elements: Vec<usize> = (0..limit(m.order())).collect();
        let fixed = vertices
            .iter()
            .map(|&v| {
                (0..=q)
                    .map(|j| {
                        if j == 0 {
                            return Vec::new();
                        }
                        let e = rot.power(v, j);
                        (0..m.vertex_count())
                            .filter(|&x| rot.fixes(e, x))
                            .map(|x| (x, transfer_with(&rot, v, x, j).unwrap_or(0)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            m,
            graph: m.skeleton(),
            rot,
            q,
            vertices,
            elements,
            fixed,
        }
    }

    /// Vertex permutation induced by left multiplication with `g`.
    fn vertex_action(&self, g: usize) -> Vec<usize> {
        let lp = self.m.table().left_perm(g);
        (0..self.m.vertex_count())
            .map(|v| self.m.cells().vertex_of(lp[self.m.vertex_dart(v)] as usize))
            .collect()
    }

    fn rotation_transfer(&self) -> Outcome {
        for (i, &v) in self.vertices.iter().enumerate() {
            for j in 1..=self.q {
                let modulus = self.q / j.gcd(&self.q);
                for &(x, k) in &self.fixed[i][j] {
                    ensure(k != 0, || format!("v={v} v'={x} j={j}: S_v^j fixes v' but is no power of S_v'"))?;
                    ensure(
                        self.rot.power(v, j) == self.rot.power(x, k * j) && k.gcd(&modulus) == 1,
                        || format!("v={v} v'={x} j={j} k={k}"),
                    )?;
                }
            }
        }
        Ok(())
    }

    fn automorphism_invariance(&self) -> Outcome {
        for &g in &self.elements {
            let act = self.vertex_action(g);
            for (i, &v) in self.vertices.iter().enumerate() {
                for j in 1..self.q {
                    let e = self.rot.power(v, j);
                    for &(x, k) in &self.fixed[i][j] {
                        if k == 0 {
                            continue;
                        }
                        let (a, b) = (act[v], act[x]);
                        let w = || format!("g={g} v={v} v'={x} j={j} k={k}");
                        ensure(self.rot.power(a, j) == self.rot.power(b, k * j), w)?;
                        let fa = self.rot.fixes(e, a);
                        ensure(fa == self.rot.fixes(e, b), w)?;
                        if fa {
                            let l = self.rot.exponent_of(a, e).ok_or_else(w)?;
                            ensure(e == self.rot.power(b, k * l), w)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn rotated_translates(&self) -> Outcome {
        for (idx, &v) in self.vertices.iter().enumerate() {
            for j in 1..self.q {
                let e = self.rot.power(v, j);
                for &(x, k) in &self.fixed[idx][j] {
                    if k == 0 {
                        continue;
                    }
                    for i in 0..self.q {
                        let y = self.m.act_on_vertex(self.rot.power(v, i), x);
                        let z = self.m.act_on_vertex(self.rot.power(x, i), v);
                        ensure(
                            e == self.rot.power(y, k * j) && e == self.rot.power(z, j),
                            || format!("v={v} v'={x} j={j} k={k} i={i}"),
                        )?;
                    }
                }
            }
        }
        Ok(())
    }

    fn fixed_set_blocks(&self) -> Outcome {
        let sets: Vec<Vec<BTreeSet<usize>>> = self
            .fixed
            .iter()
            .map(|per_j| per_j.iter().map(|f| f.iter().map(|&(x, _)| x).collect()).collect())
            .collect();
        for &g in &self.elements {
            let act = self.vertex_action(g);
            for (i, &v) in self.vertices.iter().enumerate() {
                for j in 1..self.q {
                    let fix = &sets[i][j];
                    if fix.iter().any(|&x| fix.contains(&act[x])) {
                        if let Some(&x) = fix.iter().find(|&&x| !fix.contains(&act[x])) {
                            return Err(format!("g={g} v={v} j={j} moves fixed point {x} outside"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Runs every check with exhaustive quantifiers.
pub fn lemma_suite(m: &RegularMap) -> LemmaReport {
    lemma_suite_with(m, &LemmaOptions::default())
}

pub fn lemma_suite_with(m: &RegularMap, opts: &LemmaOptions) -> LemmaReport {
    let ctx = Ctx::new(m, opts);
    let sampled = ctx.vertices.len() < m.vertex_count() || ctx.elements.len() < m.order();
    let mut checks = Vec::new();
    let mut push = |lemma: &str, applicable: bool, run: &mut dyn FnMut() -> Outcome| {
        checks.push(if applicable {
            LemmaCheck::outcome(lemma, run())
        } else {
            LemmaCheck::not_applicable(lemma)
        });
    };

    let dens = density(m);
    push("regularity.uniform_density", true, &mut || {
        dens.as_ref().map(|_| ()).map_err(|e| e.to_string())
    });
    push("regularity.rotation_transfer", true, &mut || ctx.rotation_transfer());
    push("regularity.automorphism_invariance", true, &mut || ctx.automorphism_invariance());
    push("regularity.rotated_translates", true, &mut || ctx.rotated_translates());
    push("regularity.fixed_set_blocks", true, &mut || ctx.fixed_set_blocks());

    let d: Option<Density> = dens.ok().map(|r| r.density);
    let half = Ratio::new(1, 2);
    let two_thirds = Ratio::new(2, 3);
    let simple = ctx.graph.is_simple();
    let reflexive = m.is_reflexive();
    let class = m.classify();
    let q = m.q();
    let dense = d.is_some_and(|d| d > half);
    let base = simple && reflexive && dense;

    push("diameter.at_most_2", simple && d.is_some_and(|d| d >= half), &mut || match diameter(&ctx.graph) {
        Ok(diam) => ensure(diam <= 2, || format!("diameter {diam}")),
        Err(e) => Err(e.to_string()),
    });
    push("faces.triangles", base, &mut || ensure(m.p() == 3, || format!("p={}", m.p())));

    // Diagonal structure only exists for triangular faces.
    let tri = m.p() == 3;
    let alignment = if tri {
        let a = classes_with(&ctx.rot);
        let j = period_with(&ctx.rot, &a);
        Some((a, j))
    } else {
        None
    };
    push("alignment.period_uniform", tri, &mut || match &alignment {
        Some((_, Err(e))) => Err(e.to_string()),
        _ => Ok(()),
    });
    let aligned = match &alignment {
        Some((a, Ok(j))) => Some((a, *j)),
        _ => None,
    };
    push("alignment.class_structure", aligned.is_some(), &mut || {
        let (a, _) = aligned.unwrap();
        let sizes: BTreeSet<usize> = a.classes.iter().map(Vec::len).collect();
        ensure(matches!(a.classes.len(), 1 | 3) && sizes.len() == 1, || {
            format!("{} classes of sizes {:?}", a.classes.len(), sizes)
        })?;
        for f in 0..m.cells().face_count() {
            let cls: BTreeSet<usize> = m.face_vertices(f).iter().map(|&x| a.class_of[x]).collect();
            ensure(cls.len() == 1 || cls.len() == 3, || format!("face {f} meets {} classes", cls.len()))?;
        }
        Ok(())
    });

    let diag = base && aligned.is_some();
    let (classes, j) = match aligned {
        Some((a, j)) => (Some(a), j),
        None => (None, q),
    };
    let diagonals: Vec<BTreeSet<usize>> = if diag {
        ctx.vertices.iter().map(|&v| diagonal_with(&ctx.rot, v)).collect()
    } else {
        Vec::new()
    };
    let class_of = |x: usize| classes.map_or(0, |a| a.class_of[x]);
    let class_size = |x: usize| classes.map_or(0, |a| a.classes[a.class_of[x]].len());
    let n = m.vertex_count();

    push("diagonal.least_period", diag, &mut || {
        for (i, &v) in ctx.vertices.iter().enumerate() {
            for &x in &diagonals[i] {
                let least = (1..=q).find(|&jj| ctx.rot.fixes(ctx.rot.power(v, jj), x));
                ensure(least == Some(j), || format!("v={v} v'={x} least={least:?} j={j}"))?;
            }
        }
        Ok(())
    });
    push("diagonal.adjacent_iff_full", diag, &mut || {
        for (i, &v) in ctx.vertices.iter().enumerate() {
            let nbrs = m.skeleton_neighbors(v);
            for &x in &diagonals[i] {
                ensure((j == q) == nbrs.contains(&x), || format!("v={v} v'={x} j={j} q={q}"))?;
            }
        }
        Ok(())
    });
    push("diagonal.single_class_iff_full", diag, &mut || {
        for &v in &ctx.vertices {
            ensure((j == q) == (class_size(v) == n), || format!("v={v} |V_v|={}", class_size(v)))?;
        }
        Ok(())
    });
    push("diagonal.fixed_in_class", diag, &mut || {
        for (i, &v) in ctx.vertices.iter().enumerate() {
            for &(x, _) in &ctx.fixed[i][j] {
                ensure(class_of(x) == class_of(v), || format!("v={v} fixed w={x} outside V_v"))?;
            }
        }
        Ok(())
    });
    push("diagonal.even_valency", diag && j < q, &mut || {
        ensure(q.is_multiple_of(2), || format!("q={q} odd"))?;
        ensure(d.is_some_and(|d| d <= two_thirds), || format!("density {}", d.unwrap_or_default()))?;
        for &v in &ctx.vertices {
            if let Some(x) = m.skeleton_neighbors(v).into_iter().find(|&x| class_of(x) == class_of(v)) {
                return Err(format!("neighbor {x} of v={v} lies in V_v"));
            }
        }
        Ok(())
    });
    push("diagonal.full_period_odd", diag && j == q, &mut || ensure(q % 2 == 1, || format!("q={q} even")));

    let tet = class == Classification::Tetrahedron;
    push("odd_valency.tetrahedron", diag && q % 2 == 1, &mut || {
        ensure(tet && d == Some(Ratio::new(3, 4)), || format!("classification {class}"))
    });

    let nontet = diag && !tet;
    let big_j = j.lcm(&2);
    let rj = |v: usize| ctx.rot.power(v, big_j);
    let t = m.table();
    push("even_period.commutation", nontet, &mut || {
        for &v in &ctx.vertices {
            for w in 0..n {
                ensure(
                    t.commutator(rj(v), rj(w)) == 0 && t.commutator(rj(v), ctx.rot.power(w, 4)) == 0,
                    || format!("v={v} w={w} J={big_j}"),
                )?;
            }
        }
        Ok(())
    });
    push("even_period.diagonal_transfer", nontet, &mut || {
        for (i, &v) in ctx.vertices.iter().enumerate() {
            for &x in &diagonals[i] {
                ensure(rj(v) == rj(x), || format!("v={v} v'={x} J={big_j}"))?;
            }
        }
        Ok(())
    });
    push("even_period.face_relation", nontet, &mut || {
        for f in 0..m.cells().face_count() {
            let fv = m.face_vertices(f);
            let prod = fv.iter().fold(0, |acc, &x| t.mul(acc, rj(x)));
            ensure(prod == 0, || format!("face {f} vertices {fv:?} J={big_j}"))?;
        }
        Ok(())
    });
    push("even_period.full_valency", nontet && big_j == q, &mut || {
        ensure(class == Classification::Fermat(1), || format!("classification {class}"))
    });
    push("density.two_thirds", nontet, &mut || {
        ensure(d == Some(two_thirds), || format!("density {}", d.unwrap_or_default()))
    });
    push("density.quotient_step", nontet && big_j < q, &mut || quotient_step(m, &ctx.rot, big_j, d));
    push("neighborhood.two_classes", nontet, &mut || {
        for f in 0..m.cells().face_count() {
            let fv = m.face_vertices(f);
            let cls: BTreeSet<usize> = fv.iter().map(|&x| class_of(x)).collect();
            if cls.len() != 3 {
                continue;
            }
            for r in 0..3 {
                let (v, w, u) = (fv[r], fv[(r + 1) % 3], fv[(r + 2) % 3]);
                let expected: BTreeSet<usize> = (0..n).filter(|&x| class_of(x) == class_of(w) || class_of(x) == class_of(u)).collect();
                ensure(m.skeleton_neighbors(v) == expected, || format!("face {f} at v={v}"))?;
            }
        }
        Ok(())
    });
    push("even_period.two", nontet && d == Some(two_thirds), &mut || {
        ensure(big_j == 2, || format!("J={big_j}"))
    });
    push("theorem.commutator_cubed", nontet && d == Some(two_thirds) && big_j == 2, &mut || {
        let c = t.commutator(m.s(), m.r());
        ensure(t.pow(c, 3) == 0, || format!("[S,R] has order {}", t.element_order(c)))
    });
    push("theorem.classification", base, &mut || {
        ensure(class != Classification::Other, || "classification other".to_string())
    });

    LemmaReport { checks, sampled }
}

/// Quotient by `⟨S_v^J, S_w^J⟩` for an edge `vw`: order `(q/J)²`, normal,
/// no edge reversed, and the quotient keeps density and simplicity with
/// valency `J`.
fn quotient_step(m: &RegularMap, rot: &VertexRotations, big_j: usize, d: Option<Density>) -> Outcome {
    let q = m.q();
    let v = 0;
    let w = m
        .skeleton_neighbors(v)
        .into_iter()
        .next()
        .ok_or_else(|| "vertex 0 has no neighbor".to_string())?;
    let h = subgroup_closure(m, &[rot.power(v, big_j), rot.power(w, big_j)]);
    let expected = (q / big_j) * (q / big_j);
    ensure(h.order() == expected, || format!("|H|={} expected {expected}", h.order()))?;
    ensure(is_normal_in_aut(m, &h), || "H not normal".to_string())?;
    ensure(!reverses_some_edge(m, &h), || "H reverses an edge".to_string())?;
    let quotient = quotient_map(m, &h).map_err(|e| e.to_string())?;
    let qd = density(&quotient).map_err(|e: AnalysisError| e.to_string())?.density;
    ensure(Some(qd) == d, || format!("quotient density {qd}"))?;
    ensure(quotient.is_simple(), || "quotient not simple".to_string())?;
    ensure(quotient.q() == big_j, || format!("quotient q={}", quotient.q()))?;
    ensure(quotient.vertex_count() * q == m.vertex_count() * big_j, || {
        format!("quotient has {} vertices", quotient.vertex_count())
    })
}
