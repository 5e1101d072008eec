//! Property tests for invariants of individual modules.

use codecat::code::{format_code, parse_code, Code, Codeword, FormatStyle, Permutation};
use codecat::constructions::{
    coproduct, is_intersection_complete_by_trunks, is_intersection_complete_pairwise, product,
};
use codecat::morphism::{compose, Morphism};
use codecat::reduction::{canonical_form, is_isomorphic, minimum_neuron_number, reduce};
use codecat::ring::{indicator, morphism_to_monomial_map, RingElement};
use codecat::topology::{f2_reduced_homology, is_collapsible, simplicial_complex};
use codecat::trunks::{all_trunks, irreducible_trunks, is_trunk_set, simple_trunks};
use proptest::prelude::*;

fn arb_code(max_n: usize, max_words: usize) -> impl Strategy<Value = Code> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..1u64 << n, 0..=max_words)
            .prop_map(move |ws| Code::new(n, ws.into_iter().map(Codeword::from_bits)).unwrap())
    })
}

fn arb_permuted(max_n: usize, max_words: usize) -> impl Strategy<Value = (Code, Permutation)> {
    arb_code(max_n, max_words).prop_flat_map(|c| {
        let n = c.n();
        (Just(c), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(c, p)| (c, Permutation::from_one_based(&p).unwrap()))
    })
}

fn arb_morphism(max_n: usize, max_words: usize, max_m: usize) -> impl Strategy<Value = Morphism> {
    arb_code(max_n, max_words).prop_flat_map(move |c| {
        let trunks = all_trunks(&c);
        prop::collection::vec(0..trunks.len(), 0..=max_m).prop_map(move |idx| {
            Morphism::new(c.clone(), idx.iter().map(|&i| trunks[i].clone()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn compact_and_json_round_trip(c in arb_code(9, 12)) {
        let compact = format_code(&c, FormatStyle::Compact).unwrap();
        prop_assert_eq!(parse_code(&compact).unwrap(), c.clone());
        let json = format_code(&c, FormatStyle::Json).unwrap();
        let back = parse_code(&json).unwrap();
        prop_assert_eq!(back.words(), c.words());
        let serde = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Code>(&serde).unwrap(), c);
    }

    #[test]
    fn trunks_are_closed_under_intersection(c in arb_code(6, 10)) {
        let trunks = all_trunks(&c);
        for a in &trunks {
            prop_assert!(is_trunk_set(&c, a.members()));
            for b in &trunks {
                let m = a.members().intersection(b.members());
                prop_assert!(trunks.iter().any(|t| *t.members() == m));
            }
        }
        for (_, t) in simple_trunks(&c) {
            prop_assert!(trunks.contains(&t));
        }
    }

    #[test]
    fn minimum_neuron_number_counts_irreducible_trunks(c in arb_code(6, 10)) {
        let r = reduce(&c);
        prop_assert_eq!(r.reduced.n(), irreducible_trunks(&c).len());
        prop_assert_eq!(minimum_neuron_number(&c), r.reduced.n());
        prop_assert_eq!(r.reduced.len(), c.len());
    }

    #[test]
    fn canonical_form_is_a_permutation_invariant((c, p) in arb_permuted(7, 10)) {
        let relabeled = p.apply_code(&c);
        let a = canonical_form(&c);
        let b = canonical_form(&relabeled);
        prop_assert_eq!(&a.code, &b.code);
        // The witness maps the reduced code onto the canonical one.
        let reduced = reduce(&c).reduced;
        prop_assert_eq!(a.witness.apply_code(&reduced), a.code);
    }

    #[test]
    fn images_never_gain_words(f in arb_morphism(6, 10, 5)) {
        prop_assert!(f.image().len() <= f.domain().len());
        prop_assert_eq!(f.image().n(), f.m());
    }

    #[test]
    fn composition_is_functorial(f in arb_morphism(5, 8, 4), seed in any::<u64>()) {
        let d = f.image();
        let trunks = all_trunks(&d);
        let pick: Vec<_> = (0..3).map(|k| trunks[(seed as usize).wrapping_add(k * 7) % trunks.len()].clone()).collect();
        let g = Morphism::new(d.clone(), pick).unwrap();
        let gf = compose(&g, &f).unwrap();
        for &c in f.domain().words() {
            prop_assert_eq!(gf.apply(c).unwrap(), g.apply(f.apply(c).unwrap()).unwrap());
        }
        // Pullbacks compose in the opposite order.
        let f_star = morphism_to_monomial_map(&f, Some(&d)).unwrap();
        let g_star = morphism_to_monomial_map(&g, None).unwrap();
        prop_assert_eq!(
            f_star.after(&g_star).unwrap(),
            morphism_to_monomial_map(&gf, Some(&g.image())).unwrap()
        );
    }

    #[test]
    fn intersection_complete_routes_agree(c in arb_code(6, 10)) {
        prop_assert_eq!(is_intersection_complete_pairwise(&c), is_intersection_complete_by_trunks(&c));
    }

    #[test]
    fn products_and_coproducts_have_expected_sizes(a in arb_code(4, 5), b in arb_code(4, 5)) {
        if !a.is_empty() && !b.is_empty() {
            let p = product(&a, &b).unwrap();
            prop_assert_eq!(p.len(), a.len() * b.len());
            prop_assert_eq!(p.n(), a.n() + b.n());
        }
        let cp = coproduct(&a, &b, false).unwrap();
        prop_assert_eq!(cp.len(), a.len() + b.len());
    }

    #[test]
    fn isomorphic_codes_have_isomorphic_products((c, p) in arb_permuted(4, 5), d in arb_code(3, 4)) {
        prop_assume!(!c.is_empty() && !d.is_empty());
        let x = product(&c, &d).unwrap();
        let y = product(&p.apply_code(&c), &d).unwrap();
        prop_assert!(is_isomorphic(&x, &y));
    }

    #[test]
    fn links_and_homology(c in arb_code(5, 6)) {
        let k = simplicial_complex(&c);
        for &w in c.words() {
            prop_assert!(k.contains_face(w));
        }
        if let Some(&f) = k.facets().first() {
            prop_assert_eq!(k.link(f).unwrap().facets().to_vec(), vec![Codeword::EMPTY]);
            prop_assert_eq!(k.link(Codeword::EMPTY).unwrap(), k.clone());
        }
        if is_collapsible(&k).unwrap() {
            prop_assert!(f2_reduced_homology(&k).unwrap().is_zero());
        }
    }

    #[test]
    fn indicators_are_orthogonal_idempotents(c in arb_code(4, 6)) {
        let mut sum = RingElement::zero(&c);
        for &a in c.words() {
            let ra = indicator(&c, a);
            prop_assert_eq!(ra.mul(&ra).unwrap(), ra.clone());
            for &b in c.words() {
                if a != b {
                    prop_assert!(ra.mul(&indicator(&c, b)).unwrap().is_zero());
                }
            }
            sum = sum.add(&ra).unwrap();
        }
        prop_assert_eq!(sum, RingElement::one(&c));
    }
}
