mod common;

use common::*;
use regmap::fermat::{fermat_map, tetrahedron_map};
use regmap::fpgroup::{Presentation, DEFAULT_MAX_COSETS};
use regmap::mapcore::{build_map, genus, Classification, MapError, RegularMap};

fn map(text: &str) -> Result<RegularMap, MapError> {
    build_map(&Presentation::parse(text).unwrap())
}

fn euler_genus(m: &RegularMap) -> u64 {
    let n = m.order() as i64;
    let chi = n / m.q() as i64 - n / 2 + n / m.p() as i64;
    ((2 - chi) / 2) as u64
}

#[test]
fn cell_counts() {
    let tet = tetrahedron_map();
    let c = tet.cells();
    assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (4, 6, 4));
    let f3 = fermat_map(3).unwrap();
    assert_eq!((f3.vertex_count(), f3.q(), f3.p()), (9, 6, 3));
    for m in [&tet, &f3] {
        let oracle = skeleton_oracle(m);
        assert_eq!(oracle.neighbors.len(), m.vertex_count());
        for g in 0..m.order() {
            // Same partition of darts into vertices, up to labels.
            let h = m.table().mul(g, m.s());
            assert_eq!(
                m.cells().vertex_of(g) == m.cells().vertex_of(h),
                oracle.vertex_of[g] == oracle.vertex_of[h]
            );
        }
    }
}

#[test]
fn rs_of_order_three_is_not_a_map() {
    assert!(matches!(
        map("gens R S ; rels R^2, S^3, (R*S)^3"),
        Err(MapError::NotAMap { rs_order: 3 })
    ));
}

#[test]
fn genus_values() {
    assert_eq!(genus(&tetrahedron_map()), 0);
    assert_eq!(fermat_map(4).unwrap().genus(), 3);
    assert_eq!(fermat_map(1).unwrap().genus(), 0);
    for n in 1..=7 {
        let m = fermat_map(n).unwrap();
        assert_eq!(m.genus(), euler_genus(&m));
    }
}

#[test]
fn skeletons() {
    let tet = tetrahedron_map();
    let g = tet.skeleton();
    for v in 0..4 {
        assert_eq!(g.distinct_neighbors(v).len(), 3);
    }
    assert_eq!(g.edge_count(), 6);

    // Octahedron: every vertex misses exactly its antipode.
    let f2 = fermat_map(2).unwrap();
    let g = f2.skeleton();
    assert_eq!(g.vertex_count(), 6);
    for v in 0..6 {
        assert_eq!(g.degree(v), 4);
        assert_eq!(g.distinct_neighbors(v).len(), 4);
    }
    assert!(g.is_simple());

    let f1 = fermat_map(1).unwrap();
    let g = f1.skeleton();
    assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    assert!(g.is_simple());
}

#[test]
fn skeleton_matches_coset_oracle() {
    for m in [tetrahedron_map(), fermat_map(3).unwrap(), map("gens R S ; rels R^4, S^3, (R*S)^2").unwrap()] {
        let oracle = skeleton_oracle(&m);
        let g = m.skeleton();
        let relabel: Vec<usize> = (0..m.vertex_count())
            .map(|v| oracle.vertex_of[m.vertex_dart(v)])
            .collect();
        for v in 0..m.vertex_count() {
            let mine: std::collections::BTreeSet<usize> = g.distinct_neighbors(v).iter().map(|&w| relabel[w]).collect();
            assert_eq!(mine, oracle.neighbors[relabel[v]]);
        }
        assert_eq!(g.is_simple(), !oracle.loops && !oracle.multi);
    }
}

#[test]
fn simplicity() {
    assert!(tetrahedron_map().is_simple());
    for n in 1..=6 {
        assert!(fermat_map(n).unwrap().is_simple(), "fer({n})");
    }
    // Hosohedron with two vertices and three parallel edges.
    let m = map("gens R S ; rels R^2, S^3, (R*S)^2").unwrap();
    assert!(!m.is_simple());
    let oracle = skeleton_oracle(&m);
    assert!(oracle.multi);
}

#[test]
fn two_vertex_dipole() {
    // ⟨R,S | R², S², (RS)²⟩: two vertices joined by two parallel edges.
    let m = map("gens R S ; rels R^2, S^2, (R*S)^2").unwrap();
    assert_eq!((m.order(), m.vertex_count(), m.genus()), (4, 2, 0));
    assert!(!m.is_simple());
    assert!(skeleton_oracle(&m).multi);
}

#[test]
fn types_and_reflexivity() {
    assert_eq!(tetrahedron_map().map_type(), (3, 3));
    assert_eq!(fermat_map(5).unwrap().map_type(), (3, 10));
    assert_eq!(fermat_map(1).unwrap().map_type(), (3, 2));
    assert!(tetrahedron_map().is_reflexive());
    let chiral = map("gens R S ; rels R^3, S^6, (R*S)^2, (R*S^-2)^2*R^-1*S^2").unwrap();
    assert_eq!((chiral.order(), chiral.vertex_count()), (42, 7));
    assert!(!chiral.is_reflexive());
    assert!(!inverting_homomorphism_exists(&chiral));
}

#[test]
fn classification() {
    assert_eq!(tetrahedron_map().classify(), Classification::Tetrahedron);
    assert_eq!(fermat_map(5).unwrap().classify(), Classification::Fermat(5));
    let cube = map("gens R S ; rels R^4, S^3, (R*S)^2").unwrap();
    assert_eq!(cube.order(), 24);
    assert_eq!(cube.classify(), Classification::Other);
    assert_eq!(Classification::Fermat(3).to_string(), "fermat(3)");
    assert_eq!(Classification::Tetrahedron.to_string(), "tetrahedron");
}

#[test]
fn respects_the_coset_bound() {
    let p = Presentation::parse("gens R S ; rels R^3, S^8, (R*S)^2, [R,S]^3").unwrap();
    assert!(RegularMap::build(&p, 20).is_err());
    assert_eq!(RegularMap::build(&p, DEFAULT_MAX_COSETS).unwrap().order(), 96);
}
