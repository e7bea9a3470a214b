//! Randomized invariants over small transformation monoids and preorders.

mod common;

use proptest::prelude::*;

use fincat::category::{compose_functors, Cat, Functor, IdempotentNat};
use fincat::classify::{
    associated_idempotent, enumerate_hom_retractions, is_faithful, is_full, is_fully_faithful, search_hom_retraction,
    Mode,
};
use fincat::cli::{category_doc, functor_doc, parse_category, parse_functor};
use fincat::coident::coidentifier;
use fincat::completion::{complete, is_idempotent_complete, Karoubi};
use fincat::gallery::{functors_between, monoid_cat, poset_cat, product_cat, terminal, to_terminal};
use fincat::Budget;

/// The monoid of self-maps of `0..n` generated by `gens`, identity first.
fn transformation_monoid(n: usize, gens: &[Vec<usize>]) -> Cat {
    let mut elems: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut k = 0;
    while k < elems.len() {
        for g in gens {
            let next: Vec<usize> = elems[k].iter().map(|&x| g[x]).collect();
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        k += 1;
    }
    let index = |m: &Vec<usize>| elems.iter().position(|e| e == m).expect("closed");
    // row g, column f: g after f
    let table: Vec<Vec<usize>> =
        elems.iter().map(|g| elems.iter().map(|f| index(&f.iter().map(|&x| g[x]).collect())).collect()).collect();
    let names: Vec<String> = (0..elems.len()).map(|i| if i == 0 { "id".into() } else { format!("m{i}") }).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    monoid_cat(&refs, &table).expect("transformation monoid")
}

fn monoid() -> impl Strategy<Value = Cat> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0..n, n), 1..=2)
            .prop_map(move |gens| transformation_monoid(n, &gens))
    })
}

fn preorder() -> impl Strategy<Value = Cat> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=5).prop_map(move |rel| {
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            poset_cat(&refs, &rel).expect("preorder")
        })
    })
}

fn small_category() -> impl Strategy<Value = Cat> {
    prop_oneof![
        monoid(),
        preorder(),
        (monoid(), preorder()).prop_filter_map("too large", |(m, p)| {
            let c = product_cat(&p, &m).ok()?;
            (c.num_morphisms() <= 24).then_some(c)
        }),
    ]
}

/// A functor between two random categories, or into the terminal one when none is found.
fn functor() -> impl Strategy<Value = Functor> {
    (small_category(), small_category(), any::<prop::sample::Index>()).prop_map(|(c, d, pick)| {
        let fs = functors_between(&c, &d, 32, &mut Budget::new(1_000_000)).unwrap_or_default();
        if fs.is_empty() {
            to_terminal(&c, &terminal()).expect("terminal")
        } else {
            fs[pick.index(fs.len())].clone()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn opposite_is_an_involution(c in small_category()) {
        prop_assert_eq!(c.opposite().opposite().composition_table(), c.composition_table());
    }

    #[test]
    fn envelopes_are_complete(c in small_category()) {
        let k = Karoubi::new(&c).unwrap();
        prop_assert!(is_idempotent_complete(k.category()));
        prop_assert!(is_fully_faithful(k.iota()));
        prop_assert_eq!(fincat::adjoint::is_equivalence(k.iota()), is_idempotent_complete(&c));
        let idempotents: usize = c.objects().map(|x| c.idempotents(x).count()).sum();
        prop_assert_eq!(k.category().num_objects(), idempotents);
    }

    #[test]
    fn separable_and_naturally_full_split_semiseparability(f in functor()) {
        let semisep = search_hom_retraction(&f, Mode::Semisep).unwrap().is_some();
        let sep = search_hom_retraction(&f, Mode::Sep).unwrap().is_some();
        let natfull = search_hom_retraction(&f, Mode::Natfull).unwrap().is_some();
        prop_assert_eq!(sep, semisep && is_faithful(&f));
        prop_assert_eq!(natfull, semisep && is_full(&f));
    }

    #[test]
    fn search_matches_brute_force(f in functor()) {
        for mode in Mode::ALL {
            if let Some(brute) = common::brute_force(&f, mode, 100_000, 1) {
                let found = search_hom_retraction(&f, mode).unwrap().map(|p| p.values().to_vec());
                prop_assert_eq!(brute.first().cloned(), found);
            }
        }
    }

    #[test]
    fn associated_idempotent_is_unique(f in functor()) {
        let ps = enumerate_hom_retractions(&f, Mode::Semisep, 256).unwrap();
        if let Some(first) = ps.first() {
            let e = associated_idempotent(first).unwrap();
            for p in &ps {
                prop_assert_eq!(associated_idempotent(p).unwrap().components().to_vec(), e.components().to_vec());
            }
            prop_assert_eq!(e.is_identity(), search_hom_retraction(&f, Mode::Sep).unwrap().is_some());
        }
    }

    #[test]
    fn completion_preserves_the_six_classes(f in functor()) {
        let (_, _, fk) = complete(&f).unwrap();
        prop_assert_eq!(is_faithful(&f), is_faithful(&fk));
        prop_assert_eq!(is_full(&f), is_full(&fk));
        for mode in Mode::ALL {
            prop_assert_eq!(
                search_hom_retraction(&f, mode).unwrap().is_some(),
                search_hom_retraction(&fk, mode).unwrap().is_some()
            );
        }
    }

    #[test]
    fn quotient_recovers_its_idempotent(c in small_category(), pick in any::<prop::sample::Index>()) {
        let es = IdempotentNat::enumerate(&c, &mut Budget::new(1_000_000)).unwrap();
        let e = &es[pick.index(es.len())];
        let q = coidentifier(e).unwrap();
        let h = q.functor();
        prop_assert!(is_full(h));
        let p = search_hom_retraction(h, Mode::Natfull).unwrap().expect("H is naturally full");
        prop_assert_eq!(associated_idempotent(&p).unwrap().components().to_vec(), e.components().to_vec());
        if is_idempotent_complete(&c) {
            prop_assert!(is_idempotent_complete(q.quotient()));
        }
    }

    #[test]
    fn identity_functors_are_units(f in functor()) {
        let id_source = Functor::identity(f.source());
        let id_target = Functor::identity(f.target());
        prop_assert_eq!(&compose_functors(&f, &id_source).unwrap(), &f);
        prop_assert_eq!(&compose_functors(&id_target, &f).unwrap(), &f);
    }

    #[test]
    fn documents_round_trip(f in functor()) {
        let doc = category_doc(f.source());
        let back = parse_category(&doc).unwrap();
        prop_assert_eq!(back.composition_table(), f.source().composition_table());
        let text = serde_json::to_string(&doc).unwrap();
        let again: fincat::cli::CategoryDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&again).unwrap(), text);
        let g = parse_functor(&functor_doc(&f)).unwrap();
        prop_assert_eq!(g.object_map(), f.object_map());
        prop_assert_eq!(g.morphism_map(), f.morphism_map());
    }
}
