use chevalley_core::chevalley::inverse_chevalley;
use chevalley_core::heisenberg::BasisClass;
use chevalley_core::type_a::{apply_diagram_automorphism, closed_form_w0, epsilon_weight, q_toda_check};
use chevalley_core::{RootSystem, WeylElt};

#[test]
fn closed_form_matches_engine() {
    for n in 1..=4 {
        let rs = RootSystem::from_name(&format!("A{n}")).unwrap();
        let gen = BasisClass::generator(&rs, WeylElt::longest(&rs));
        for i in 1..=n + 1 {
            let eps = epsilon_weight(&rs, i).unwrap();
            let engine = inverse_chevalley(&rs, &eps, &gen).unwrap();
            let closed = closed_form_w0(&rs, i).unwrap();
            assert_eq!(engine, closed, "A{n} i={i}\n{}\n{}", engine.display(&rs), closed.display(&rs));
        }
    }
}

#[test]
fn q_toda_matches_symmetrization() {
    for n in 1..=3 {
        let rs = RootSystem::from_name(&format!("A{n}")).unwrap();
        let (ok, got, want) = q_toda_check(&rs).unwrap();
        assert!(ok, "A{n}: {} vs {}", got.display(&rs), want.display(&rs));
    }
}

#[test]
fn automorphism_intertwines_closed_forms() {
    for n in 1..=3 {
        let rs = RootSystem::from_name(&format!("A{n}")).unwrap();
        for i in 1..=n + 1 {
            let image = apply_diagram_automorphism(&rs, &closed_form_w0(&rs, i).unwrap()).unwrap();
            let gen = BasisClass::generator(&rs, WeylElt::longest(&rs));
            let mirror = -rs.w0_weight(&epsilon_weight(&rs, i).unwrap());
            assert_eq!(image, inverse_chevalley(&rs, &mirror, &gen).unwrap(), "A{n} i={i}");
        }
    }
}

#[test]
fn quantum_walks_from_longest_element() {
    use chevalley_core::walks::{enumerate_quantum_walks, stationary_sets, Step};
    use chevalley_core::MinusculeDatum;
    use std::collections::BTreeSet;

    for n in 1..=5 {
        let rs = RootSystem::from_name(&format!("A{n}")).unwrap();
        let w0 = WeylElt::longest(&rs);
        for l in 0..=n {
            let lambda = epsilon_weight(&rs, l + 1).unwrap();
            // x = s_l ⋯ s_1, y = s_n ⋯ s_{l+1}
            let x_word: Vec<usize> = (0..l).rev().collect();
            let y_word: Vec<usize> = (l..n).rev().collect();
            let d = MinusculeDatum::with_words(&rs, &lambda, &x_word, &y_word).unwrap();
            for (r, b) in d.beta.iter().enumerate() {
                let want = &epsilon_weight(&rs, r + 1).unwrap() - &lambda;
                assert_eq!(rs.root_to_weight(b), want);
            }
            for (s, g) in d.gamma.iter().enumerate() {
                let want = &lambda - &epsilon_weight(&rs, n + 2 - (s + 1)).unwrap();
                assert_eq!(rs.root_to_weight(g), want);
            }

            let m = n - l;
            let mut expected = BTreeSet::new();
            for mask in 0u32..(1 << l) {
                let mut p = vec![Step::Stay; n];
                (0..l).filter(|k| mask & (1 << k) != 0).for_each(|k| p[k] = Step::Cross);
                expected.insert(p);
            }
            for mask in 0u32..(1 << m) {
                let mut p = vec![Step::Stay; n];
                (0..m).filter(|k| mask & (1 << k) != 0).for_each(|k| p[l + k] = Step::Cross);
                expected.insert(p);
            }
            let walks = enumerate_quantum_walks(&rs, &d, &w0);
            let got: BTreeSet<Vec<Step>> = walks.iter().map(|w| w.steps.clone()).collect();
            assert_eq!(got, expected, "A{n} l={l}");
            assert_eq!(got.len(), (1 << l) + (1 << m) - 1);

            for walk in &walks {
                let (sm, sp) = stationary_sets(&rs, walk).unwrap();
                assert!(sm.is_empty(), "A{n} l={l}");
                let all_stay = walk.steps.iter().all(|s| *s == Step::Stay);
                let want: Vec<usize> = if all_stay && l < n { vec![n] } else { vec![] };
                assert_eq!(sp, want, "A{n} l={l} {}", walk.steps_string());
            }
        }
    }
}
