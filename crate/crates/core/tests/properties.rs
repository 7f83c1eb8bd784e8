use chevalley_core::chevalley::{demazure, inverse_chevalley};
use chevalley_core::heisenberg::{h_mul, BasisClass, HeisElt, LaurentQ, ModuleClass};
use chevalley_core::parse::parse_affine;
use chevalley_core::walks::{enumerate_decorations, enumerate_quantum_walks, stationary_sets};
use chevalley_core::{AffineWeylElt, MinusculeDatum, Root, RootSystem, Weight, WeylElt};
use proptest::prelude::*;

const TYPES: [&str; 4] = ["A1", "A2", "A3", "D4"];

fn rs(k: usize) -> RootSystem {
    RootSystem::from_name(TYPES[k]).unwrap()
}

fn elt(rs: &RootSystem, word: &[usize]) -> WeylElt {
    let w: Vec<usize> = word.iter().map(|i| i % rs.rank()).collect();
    WeylElt::from_word(rs, &w).unwrap()
}

fn weight(rs: &RootSystem, v: &[i64]) -> Weight {
    Weight(v.iter().take(rs.rank()).copied().collect())
}

fn root_weight(rs: &RootSystem, v: &[i64]) -> Weight {
    rs.root_to_weight(&Root(v.iter().take(rs.rank()).copied().collect()))
}

fn laurent(terms: &[(i64, i64)]) -> LaurentQ {
    let mut out = LaurentQ::zero();
    for &(e, c) in terms {
        out.add_term(num_rational::Rational64::from_integer(e), c);
    }
    out
}

type RawTerm = (Vec<i64>, Vec<i64>, Vec<(i64, i64)>);

fn raw_terms() -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (
            prop::collection::vec(-2i64..=2, 4),
            prop::collection::vec(-2i64..=2, 4),
            prop::collection::vec((-2i64..=2, -3i64..=3), 1..3),
        ),
        1..4,
    )
}

fn heis(rs: &RootSystem, raw: &[RawTerm]) -> HeisElt {
    let mut h = HeisElt::zero();
    for (t, x, c) in raw {
        h.add_term(root_weight(rs, t), weight(rs, x), laurent(c));
    }
    h
}

fn class(rs: &RootSystem, words: &[Vec<usize>], raw: &[RawTerm]) -> BasisClass {
    let mut c = BasisClass::zero();
    for (word, (t, x, f)) in words.iter().zip(raw) {
        c.add_term(elt(rs, word), root_weight(rs, t), weight(rs, x), laurent(f));
    }
    c
}

fn words() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0usize..4, 0..8), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heisenberg_product_is_associative(k in 0usize..4, a in raw_terms(), b in raw_terms(), c in raw_terms()) {
        let r = rs(k);
        let (a, b, c) = (heis(&r, &a), heis(&r, &b), heis(&r, &c));
        prop_assert_eq!(h_mul(&r, &h_mul(&r, &a, &b), &c), h_mul(&r, &a, &h_mul(&r, &b, &c)));
    }

    #[test]
    fn right_action_is_an_action(k in 0usize..4, ws in words(), raw in raw_terms(), a in raw_terms(), b in raw_terms()) {
        let r = rs(k);
        let c = class(&r, &ws, &raw);
        let (a, b) = (heis(&r, &a), heis(&r, &b));
        let lhs = c.act(&r, &a).unwrap().act(&r, &b).unwrap();
        prop_assert_eq!(lhs, c.act(&r, &h_mul(&r, &a, &b)).unwrap());
    }

    #[test]
    fn forms_and_json_round_trip(k in 0usize..4, ws in words(), raw in raw_terms(), h in raw_terms()) {
        let r = rs(k);
        let c = class(&r, &ws, &raw);
        let m = c.to_module_form(&r).unwrap();
        prop_assert_eq!(&m.to_basis_form(&r).unwrap(), &c);
        prop_assert_eq!(&BasisClass::from_json(&r, &c.to_json(&r)).unwrap(), &c);
        prop_assert_eq!(&ModuleClass::from_json(&r, &m.to_json(&r)).unwrap(), &m);
        let h = heis(&r, &h);
        prop_assert_eq!(HeisElt::from_json(&r, &h.to_json(&r)).unwrap(), h);
    }

    #[test]
    fn demazure_is_idempotent(k in 0usize..4, i in 0usize..4, ws in words(), raw in raw_terms()) {
        let r = rs(k);
        let i = i % r.rank();
        let c = class(&r, &ws, &raw);
        let once = demazure(&r, i, &c).unwrap();
        prop_assert_eq!(demazure(&r, i, &once).unwrap(), once);
    }

    #[test]
    fn weyl_group_basics(k in 0usize..4, a in prop::collection::vec(0usize..4, 0..10), b in prop::collection::vec(0usize..4, 0..10)) {
        let r = rs(k);
        let (u, v) = (elt(&r, &a), elt(&r, &b));
        prop_assert!(u.compose(&r, &u.inverse(&r)).is_identity());
        prop_assert_eq!(u.inverse(&r).length(), u.length());
        let word = u.reduced_word(&r);
        prop_assert_eq!(word.len(), u.length());
        prop_assert_eq!(WeylElt::from_word(&r, &word).unwrap(), u.clone());
        prop_assert_eq!(u.inversion_set(&r).len(), u.length());
        let uv = u.compose(&r, &v);
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!((uv.length() + u.length() + v.length()) % 2, 0);
    }

    #[test]
    fn affine_elements_round_trip(k in 0usize..4, a in prop::collection::vec(0usize..4, 0..8), t in prop::collection::vec(-3i64..=3, 4)) {
        let r = rs(k);
        let x = AffineWeylElt::new(&r, elt(&r, &a), root_weight(&r, &t)).unwrap();
        prop_assert_eq!(parse_affine(&r, &x.display(&r)).unwrap(), x);
    }

    #[test]
    fn minuscule_operators_commute_and_invert(k in 0usize..4, i in 0usize..64, j in 0usize..64, ws in words(), raw in raw_terms()) {
        let r = rs(k);
        let ms = r.minuscule_weights();
        let (l, m) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        let c = class(&r, &ws, &raw);
        let lm = inverse_chevalley(&r, m, &inverse_chevalley(&r, l, &c).unwrap()).unwrap();
        let ml = inverse_chevalley(&r, l, &inverse_chevalley(&r, m, &c).unwrap()).unwrap();
        prop_assert_eq!(&lm, &ml);
        let neg = -l.clone();
        prop_assert_eq!(inverse_chevalley(&r, &neg, &inverse_chevalley(&r, l, &c).unwrap()).unwrap(), c);
    }

    #[test]
    fn decoration_count(k in 0usize..4, i in 0usize..64, a in prop::collection::vec(0usize..4, 0..10)) {
        let r = rs(k);
        let ms = r.minuscule_weights();
        let d = MinusculeDatum::new(&r, &ms[i % ms.len()]).unwrap();
        let w = elt(&r, &a);
        for walk in enumerate_quantum_walks(&r, &d, &w) {
            let (sm, sp) = stationary_sets(&r, &walk).unwrap();
            let decs = enumerate_decorations(&r, &walk).unwrap();
            prop_assert_eq!(decs.len(), 1usize << (sm.len() + sp.len()));
            for dec in &decs {
                prop_assert!(dec.sign == 1 || dec.sign == -1);
                prop_assert!(r.in_root_lattice(&dec.wt));
            }
        }
    }

    #[test]
    fn laurent_distributes(a in prop::collection::vec((-3i64..=3, -3i64..=3), 0..4), b in prop::collection::vec((-3i64..=3, -3i64..=3), 0..4), c in prop::collection::vec((-3i64..=3, -3i64..=3), 0..4)) {
        let (a, b, c) = (laurent(&a), laurent(&b), laurent(&c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }
}
