mod common;

use common::*;
use proptest::prelude::*;
use regmap::fermat::{fermat_map, fermat_presentation, tetrahedron_presentation};
use regmap::fpgroup::{
    coset_enumeration, element_order, inverting_automorphism_exists, parse_word, regular_representation, Letter,
    Presentation, Word,
};

fn names() -> Vec<String> {
    vec!["R".into(), "S".into()]
}

fn w(text: &str) -> Word {
    parse_word(text, &names()).unwrap()
}

fn letters(spec: &[(usize, bool)]) -> Word {
    Word::from_letters(spec.iter().map(|&(g, i)| Letter::new(g, i)))
}

#[test]
fn parses_map_presentations() {
    let p = Presentation::parse("gens R S ; rels R^3, S^3, (R*S)^2").unwrap();
    assert_eq!(p.generators(), ["R", "S"]);
    assert_eq!(p.relators().len(), 3);

    let p = Presentation::parse("gens R S ; rels R^1").unwrap();
    assert_eq!(p.relators(), [letters(&[(0, false)])]);

    let p = Presentation::parse("gens R S ; rels [R,S]^3").unwrap();
    let comm = letters(&[(0, true), (1, true), (0, false), (1, false)]);
    assert_eq!(p.relators(), [comm.pow(3)]);
    assert_eq!(p.relators()[0].len(), 12);
}

#[test]
fn word_expansion() {
    assert_eq!(w("(R*S)^2"), letters(&[(0, false), (1, false), (0, false), (1, false)]));
    assert_eq!(w("S^-2"), letters(&[(1, true), (1, true)]));
    assert!(w("R*R^-1").is_empty());
    assert!(parse_word("R*T", &names()).is_err());
    assert!(parse_word("(R*S", &names()).is_err());
}

#[test]
fn coset_counts() {
    let tet = tetrahedron_presentation();
    assert_eq!(coset_enumeration(&tet, &[], 1000).unwrap().len(), 12);
    assert_eq!(coset_enumeration(&tet, &[letter(1)], 1000).unwrap().len(), 4);
    let fer1 = fermat_presentation(1).unwrap();
    assert_eq!(coset_enumeration(&fer1, &[], 1000).unwrap().len(), 6);
}

#[test]
fn cosets_of_s_match_orbit_count() {
    // Orbits of right multiplication by S on the regular representation.
    let t = regular_representation(&tetrahedron_presentation(), 1000).unwrap();
    let s = t.generator(1);
    let mut seen = vec![false; t.order()];
    let mut orbits = 0;
    for g in 0..t.order() {
        if !seen[g] {
            orbits += 1;
            let mut x = g;
            while !seen[x] {
                seen[x] = true;
                x = t.mul(x, s);
            }
        }
    }
    assert_eq!(orbits, 4);
}

#[test]
fn orders_match_permutation_models() {
    let tet = tetrahedron_presentation();
    let a4 = alt4();
    assert_eq!(a4.len(), 12);
    assert!(find_generating_pair(&a4, 3, 3, tet.relators()).is_some());
    assert_eq!(regular_representation(&tet, 1000).unwrap().order(), a4.len());

    for n in 2..=4 {
        let p = fermat_presentation(n as u64).unwrap();
        let model = fermat_group(n);
        assert_eq!(model.len(), 6 * n * n);
        assert!(find_generating_pair(&model, 3, 2 * n, p.relators()).is_some(), "n = {n}");
        assert_eq!(regular_representation(&p, 10_000).unwrap().order(), model.len());
    }
    assert_eq!(regular_representation(&fermat_presentation(3).unwrap(), 1000).unwrap().order(), 54);
}

#[test]
fn killing_a_generator() {
    // With R = 1 the relator (RS)^2 forces S^2 = 1.
    let p = Presentation::parse("gens R S ; rels R, S^3, (R*S)^2").unwrap();
    assert_eq!(regular_representation(&p, 100).unwrap().order(), 1);
    let p = Presentation::parse("gens R S ; rels R, S^4, (R*S)^2").unwrap();
    assert_eq!(regular_representation(&p, 100).unwrap().order(), 2);
}

#[test]
fn evaluation_and_element_orders() {
    let t = regular_representation(&tetrahedron_presentation(), 1000).unwrap();
    assert_eq!(t.eval(&Word::empty()), 0);
    assert_eq!(t.eval(&w("(R*S)^2")), 0);
    assert_eq!(t.eval(&w("R^3")), 0);
    assert_ne!(t.eval(&w("R*S")), 0);
    assert_eq!(element_order(&t, 0), 1);
    assert_eq!(element_order(&t, t.eval(&w("S"))), 3);
    let t4 = regular_representation(&fermat_presentation(4).unwrap(), 1000).unwrap();
    assert_eq!(element_order(&t4, t4.eval(&w("S"))), 8);
}

#[test]
fn enumeration_overflow_is_reported() {
    let p = Presentation::parse("gens R S ; rels R^3, S^3, (R*S)^3").unwrap();
    assert!(regular_representation(&p, 500).is_err());
}

#[test]
fn inverting_automorphism_matches_oracle() {
    let tet = tetrahedron_presentation();
    let t = regular_representation(&tet, 1000).unwrap();
    assert!(inverting_automorphism_exists(&tet, &t));
    for n in 1..=6 {
        let m = fermat_map(n).unwrap();
        assert!(m.is_reflexive());
        assert!(inverting_homomorphism_exists(&m));
    }
    // Chiral {4,4} torus map with 5 vertices.
    let p = Presentation::parse("gens R S ; rels R^4, S^4, (R*S)^2, (R*S^-1)^2*R^-1*S").unwrap();
    let m = regmap::mapcore::RegularMap::build(&p, 1000).unwrap();
    assert_eq!(m.order(), 20);
    assert!(!inverting_homomorphism_exists(&m));
    assert!(!inverting_automorphism_exists(&p, m.table()));
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..2, any::<bool>()), 0..24).prop_map(|v| letters(&v))
}

fn arb_relator() -> impl Strategy<Value = Word> {
    arb_word().prop_filter("non-empty", |w| !w.is_empty())
}

proptest! {
    #[test]
    fn word_times_inverse_is_identity(x in arb_word()) {
        let t = regular_representation(&fermat_presentation(3).unwrap(), 1000).unwrap();
        prop_assert!(x.concat(&x.inverse()).is_empty());
        prop_assert_eq!(t.eval(&x.concat(&x.inverse())), 0);
        prop_assert_eq!(t.mul(t.eval(&x), t.eval(&x.inverse())), 0);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in arb_word(), y in arb_word()) {
        let t = regular_representation(&tetrahedron_presentation(), 1000).unwrap();
        prop_assert_eq!(t.eval(&x.concat(&y)), t.mul(t.eval(&x), t.eval(&y)));
        prop_assert_eq!(t.eval(&t.word_of(t.eval(&x))), t.eval(&x));
    }

    #[test]
    fn word_display_round_trips(x in arb_word()) {
        let text = x.display(&names()).to_string();
        if x.is_empty() {
            prop_assert!(parse_word(&text, &names()).is_err() || parse_word(&text, &names()).unwrap().is_empty());
        } else {
            prop_assert_eq!(parse_word(&text, &names()).unwrap(), x);
        }
    }

    #[test]
    fn presentation_text_round_trips(rels in prop::collection::vec(arb_relator(), 1..6)) {
        let p = Presentation::map(rels);
        let text = p.to_string();
        let back = Presentation::parse(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }
}
