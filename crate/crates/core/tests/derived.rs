//! Worked values on the smallest examples, each recomputed by a direct count
//! before being compared with the library.

mod common;

use fincat::adjoint::{
    find_left_adjoint, is_bireflection, is_bireflection_utr, is_coreflection_utr, is_equivalence_utr,
    validate_adjunction, AdjointSearch,
};
use fincat::category::{compose_functors, hom_set, validate_category, Functor, Mor, NatTrans, Obj, RawCategory};
use fincat::classify::{
    associated_idempotent, conservative_counterexample, enumerate_hom_retractions, faithful_counterexample, is_full,
    is_fully_faithful, search_hom_retraction, surjective_utr, Mode,
};
use fincat::coident::{coidentifier, factor_through_coidentifier, Descent};
use fincat::completion::{idempotent_splittings, is_idempotent_complete, split_idempotent, Karoubi};
use fincat::gallery::suite::{g_e_to_one, module_cat, one_e};
use fincat::gallery::{
    bimodule_retraction_search, central_idempotent_nat, cyclic_group, induction_functor, pick_object,
    restriction_functor, separability_idempotent_search, terminal, to_terminal, walking_arrow, walking_idempotent,
    Basis, RingMorphism, RingTable,
};
use fincat::monadics::{comonad_of, em_category, kleisli_category, monad_of, Monad, Monadics};
use fincat::Error;

fn e_raw(ee: &str) -> RawCategory {
    RawCategory {
        objects: vec!["*".into()],
        morphisms: vec![("id".into(), "*".into(), "*".into()), ("e".into(), "*".into(), "*".into())],
        identities: vec![("*".into(), "id".into())],
        composition: vec![
            ["id".into(), "id".into(), "id".into()],
            ["id".into(), "e".into(), "e".into()],
            ["e".into(), "id".into(), "e".into()],
            ["e".into(), "e".into(), ee.into()],
        ],
    }
}

#[test]
fn walking_idempotent_validates() {
    let c = validate_category(&e_raw("e")).expect("valid");
    assert_eq!((c.num_objects(), c.num_morphisms()), (1, 2));
    let mut triples = 0;
    for h in c.morphisms() {
        for g in c.morphisms() {
            for f in c.morphisms() {
                assert_eq!(c.compose(h, c.compose(g, f)), c.compose(c.compose(h, g), f));
                triples += 1;
            }
        }
    }
    assert_eq!(triples, 8);
}

#[test]
fn involution_variant_is_the_group_of_order_two() {
    let c = validate_category(&e_raw("id")).expect("e o e = id satisfies every law");
    let e = c.morphism_named("e").unwrap();
    assert!(c.is_iso(e));
    assert_eq!(c.composition_table().len(), cyclic_group(2).composition_table().len());
}

#[test]
fn opposite_of_e_is_e() {
    let e = walking_idempotent();
    assert_eq!(e.opposite().composition_table(), e.composition_table());
}

#[test]
fn e_to_one_and_back_is_identity() {
    let one = terminal();
    let e = walking_idempotent();
    let g = to_terminal(&e, &one).unwrap();
    let f = pick_object(&one, &e, Obj(0)).unwrap();
    assert_eq!(compose_functors(&g, &f).unwrap(), Functor::identity(&one));
}

#[test]
fn hom_sets_by_name() {
    let e = walking_idempotent();
    let names: Vec<&str> = hom_set(&e, "*", "*").unwrap().into_iter().map(|m| e.name_of(m)).collect();
    assert_eq!(names, ["id", "e"]);
    assert!(hom_set(&walking_arrow(), "1", "0").unwrap().is_empty());
}

#[test]
fn envelope_of_e() {
    let e = walking_idempotent();
    let k = Karoubi::new(&e).unwrap();
    let kc = k.category();
    // brute force: f: (x, a) -> (y, b) belongs when b f a = f
    let idems: Vec<Mor> = e.idempotents(Obj(0)).collect();
    let mut sizes = Vec::new();
    for &a in &idems {
        for &b in &idems {
            sizes.push(e.morphisms().filter(|&f| e.compose3(b, f, a) == f).count());
        }
    }
    assert_eq!(sizes, [2, 1, 1, 1]);
    assert_eq!(sizes.iter().sum::<usize>(), kc.num_morphisms());
    assert_eq!(kc.num_objects(), 2);
    let plain = k.object(Obj(0), e.id(Obj(0))).unwrap();
    assert_eq!(kc.hom(plain, plain).len(), 2);
}

#[test]
fn splitting_in_e_and_its_envelope() {
    let e = walking_idempotent();
    let em = e.morphism_named("e").unwrap();
    assert_eq!(idempotent_splittings(&e).unwrap_err(), em);
    assert!(split_idempotent(&e, em).unwrap().is_none());
    let k = Karoubi::new(&e).unwrap();
    let kc = k.category();
    let plain = k.object(Obj(0), e.id(Obj(0))).unwrap();
    let small = k.object(Obj(0), em).unwrap();
    let endo = k.lift(plain, plain, em).unwrap();
    let s = split_idempotent(kc, endo).unwrap().expect("splits in the envelope");
    assert_eq!(s.object, small);
    assert_eq!((k.underlying(s.p), k.underlying(s.i)), (em, em));
    assert_eq!(idempotent_splittings(kc).unwrap().len(), 3);
    assert!(is_idempotent_complete(kc));
}

#[test]
fn e_to_one_is_full_not_faithful_not_conservative() {
    let g = g_e_to_one();
    let e = g.source();
    assert!(is_full(&g));
    let (a, b) = faithful_counterexample(&g).unwrap();
    assert_eq!((e.name_of(a), e.name_of(b)), ("id", "e"));
    assert_eq!(e.name_of(conservative_counterexample(&g).unwrap()), "e");
    let k = Karoubi::new(e).unwrap();
    assert!(is_fully_faithful(k.iota()));
}

#[test]
fn e_to_one_retractions() {
    let g = g_e_to_one();
    let brute = common::brute_force(&g, Mode::Semisep, u128::MAX, usize::MAX).unwrap();
    let e = g.source().morphism_named("e").unwrap();
    assert_eq!(brute, vec![vec![e]]);
    let found = enumerate_hom_retractions(&g, Mode::Semisep, 10).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].values(), [e]);
    assert!(common::brute_force(&g, Mode::Sep, u128::MAX, usize::MAX).unwrap().is_empty());
    assert!(search_hom_retraction(&g, Mode::Sep).unwrap().is_none());
    assert_eq!(associated_idempotent(&found[0]).unwrap().components(), [e]);
}

#[test]
fn arrow_into_its_envelope_retraction_count() {
    let k = Karoubi::new(&walking_arrow()).unwrap();
    for mode in Mode::ALL {
        let brute = common::brute_force(k.iota(), mode, u128::MAX, usize::MAX).unwrap();
        let found = enumerate_hom_retractions(k.iota(), mode, 1000).unwrap();
        assert_eq!(brute.len(), found.len());
        assert_eq!(brute.len(), 1);
    }
}

#[test]
fn surjectivity_up_to_retracts() {
    let e = walking_idempotent();
    let k = Karoubi::new(&e).unwrap();
    assert_eq!(surjective_utr(k.iota()).unwrap().len(), 2);
    let two = walking_arrow();
    let f = pick_object(&terminal(), &two, Obj(0)).unwrap();
    assert_eq!(surjective_utr(&f).unwrap_err(), Obj(1));
}

#[test]
fn coidentifier_of_e() {
    let g = g_e_to_one();
    let p = search_hom_retraction(&g, Mode::Semisep).unwrap().unwrap();
    let e = associated_idempotent(&p).unwrap();
    let q = coidentifier(&e).unwrap();
    assert_eq!((q.quotient().num_objects(), q.quotient().num_morphisms()), (1, 1));
    let ge = factor_through_coidentifier(&g, &q).unwrap().functor().unwrap();
    assert_eq!(ge, Functor::identity(q.quotient()));
    let id = Functor::identity(g.source());
    assert_eq!(factor_through_coidentifier(&id, &q).unwrap(), Descent::Blocked(Obj(0)));
    let h = q.functor();
    assert!(!is_bireflection(h).unwrap());
    assert!(is_bireflection_utr(h).unwrap());
    assert!(is_coreflection_utr(&g).unwrap());
    assert!(!is_equivalence_utr(&g).unwrap());
}

#[test]
fn envelope_of_the_quotient_has_a_left_adjoint() {
    let g = g_e_to_one();
    let p = search_hom_retraction(&g, Mode::Semisep).unwrap().unwrap();
    let q = coidentifier(&associated_idempotent(&p).unwrap()).unwrap();
    let (kc, _, hk) = fincat::completion::complete(q.functor()).unwrap();
    let a = find_left_adjoint(&hk).unwrap().found().unwrap();
    let image = kc.object_data(a.left().ob(Obj(0)));
    assert_eq!(g.source().name_of(image.idem), "e");
}

#[test]
fn no_adjunction_between_one_and_e() {
    let g = g_e_to_one();
    // a left adjoint needs Hom(F*, *) ≅ Hom(*, G*), sizes 2 and 1
    assert_eq!(g.source().hom(Obj(0), Obj(0)).len(), 2);
    assert!(matches!(find_left_adjoint(&g).unwrap(), AdjointSearch::Missing(_)));
    let f = pick_object(&terminal(), g.source(), Obj(0)).unwrap();
    let e = g.source().morphism_named("e").unwrap();
    let gf = compose_functors(&g, &f).unwrap();
    let fg = compose_functors(&f, &g).unwrap();
    let eta = NatTrans::new(&Functor::identity(f.source()), &gf, vec![Mor(0)]).unwrap();
    let eps = NatTrans::new(&fg, &Functor::identity(g.source()), vec![e]).unwrap();
    assert!(matches!(validate_adjunction(&f, &g, &eta, &eps), Err(Error::TriangleFailure(_))));
}

#[test]
fn split_adjunction_monad_and_comparisons() {
    let a = one_e();
    let t = monad_of(&a).unwrap();
    assert_eq!(t, Monad::identity(a.lower()));
    let data = Monadics::new(&a).unwrap();
    assert_eq!(data.em().category().num_morphisms(), 1);
    assert_eq!(data.comparison().morphism_map(), a.right().morphism_map());
    let l = data.kleisli_comparison();
    assert_eq!(a.upper().object_name(l.ob(Obj(0))), "Y");
    let c = comonad_of(&a).unwrap();
    let d = a.upper();
    let names: Vec<&str> = c.unit().components().iter().map(|&m| d.name_of(m)).collect();
    assert_eq!(names, ["i", "idY"]);
}

#[test]
fn identity_monad_on_e() {
    let e = walking_idempotent();
    let t = Monad::identity(&e);
    let em = em_category(&t).unwrap();
    assert_eq!((em.category().num_objects(), em.category().num_morphisms()), (1, 2));
    assert!(e.is_identity(em.objects()[0].action));
    let kl = kleisli_category(&t).unwrap();
    assert_eq!(kl.category().num_morphisms(), 2);
}

#[test]
fn every_monad_on_two_objects_is_separable() {
    // exhaustive over endofunctors and unit/multiplication families of the two-object suite categories
    let mut b = fincat::Budget::new(10_000_000);
    let mut seen = 0;
    for c in fincat::gallery::suite::categories().into_iter().filter(|c| c.value.num_objects() == 2) {
        let c = c.value;
        let id = Functor::identity(&c);
        for t in fincat::gallery::functors_between(&c, &c, 10_000, &mut b).unwrap() {
            let tt = compose_functors(&t, &t).unwrap();
            for eta in nat_families(&id, &t) {
                for m in nat_families(&tt, &t) {
                    if let Ok(monad) = Monad::new(&t, &m, &eta) {
                        seen += 1;
                        assert!(fincat::monadics::is_separable_monad(&monad).unwrap().is_some());
                        assert!(m.components().iter().all(|&x| c.is_iso(x)));
                    }
                }
            }
        }
    }
    assert_eq!(seen, 25);
}

fn nat_families(f: &Functor, g: &Functor) -> Vec<NatTrans> {
    let c = f.source();
    let d = f.target();
    let domains: Vec<&[Mor]> = c.objects().map(|x| d.hom(f.ob(x), g.ob(x))).collect();
    let mut out = Vec::new();
    if domains.iter().any(|v| v.is_empty()) {
        return out;
    }
    let mut digits = vec![0usize; domains.len()];
    loop {
        let comps = digits.iter().zip(&domains).map(|(&i, v)| v[i]).collect();
        if let Ok(n) = NatTrans::new(f, g, comps) {
            out.push(n);
        }
        let mut k = digits.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < domains[k].len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

#[test]
fn free_module_sizes() {
    let f2 = module_cat(RingTable::f2(), 1);
    // matrices 0x0, 0x1, 1x0, 1x1
    assert_eq!(f2.category().num_objects(), 2);
    assert_eq!(f2.category().num_morphisms(), 1 + 1 + 1 + 2);
    let p = module_cat(RingTable::f2xf2(), 1);
    assert_eq!(p.category().hom(p.object(1), p.object(1)).len(), 4);
    assert_eq!(module_cat(RingTable::f2(), 0).category().num_morphisms(), 1);
}

#[test]
fn central_idempotents_on_f2xf2() {
    let mc = module_cat(RingTable::f2xf2(), 1);
    let r = mc.ring();
    let z = r.element("(1,0)").unwrap();
    let e = central_idempotent_nat(&mc, z).unwrap();
    assert!(!e.is_identity());
    assert!(split_idempotent(mc.category(), e.at(mc.object(1))).unwrap().is_none());
    let zero = central_idempotent_nat(&mc, r.zero).unwrap();
    let s = split_idempotent(mc.category(), zero.at(mc.object(1))).unwrap().unwrap();
    assert_eq!(s.object, mc.object(0));
    assert!(central_idempotent_nat(&mc, r.one).unwrap().is_identity());
}

#[test]
fn diagonal_induction_and_restriction() {
    let f2 = RingTable::f2();
    let p = RingTable::f2xf2();
    let diag = RingMorphism::diagonal(&f2);
    let ind = induction_functor(&diag, 1).unwrap();
    let one = ind.source.morphism(1, 1, &[1]).unwrap();
    assert_eq!(ind.target.matrix(ind.functor.mor(one)), [p.element("(1,1)").unwrap()]);
    let basis = [p.element("(1,0)").unwrap(), p.element("(0,1)").unwrap()];
    let res = restriction_functor(&diag, &basis, 1).unwrap();
    assert_eq!(res.functor.ob(res.source.object(1)), res.target.object(2));
    let proj = RingMorphism::first_projection(&f2, &f2);
    assert!(matches!(Basis::new(&proj, &[f2.one]), Err(Error::NotABasis(_))));
}

#[test]
fn bimodule_retractions_and_separability_idempotents() {
    let f2 = RingTable::f2();
    let p = RingTable::f2xf2();
    let diag = RingMorphism::diagonal(&f2);
    let e = bimodule_retraction_search(&diag).unwrap().retraction.unwrap();
    for r in 0..2 {
        assert_eq!(e[diag.apply(r)], r);
    }
    let basis = [p.element("(1,0)").unwrap(), p.element("(0,1)").unwrap()];
    let idem = separability_idempotent_search(&diag, &basis).unwrap().unwrap();
    // (1,0) ⊗ (1,0) + (0,1) ⊗ (0,1)
    assert_eq!(idem, basis);
    let dual = RingTable::dual_numbers_f2();
    let phi = RingMorphism::from_f2(&dual).unwrap();
    let basis = [dual.one, dual.element("x").unwrap()];
    assert!(separability_idempotent_search(&phi, &basis).unwrap().is_none());
    let id = RingMorphism::identity(&f2);
    assert_eq!(separability_idempotent_search(&id, &[f2.one]).unwrap(), Some(vec![1]));
}
