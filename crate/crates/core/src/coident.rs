//! The coidentifier of an idempotent natural transformation and the canonical
//! factorization of a semiseparable functor through it.

use std::collections::HashMap;
use std::sync::Arc;

use crate::category::{compose_functors, Arrow, Cat, FinCat, Functor, IdempotentNat, Mor, NatTrans, Obj};
use crate::classify::{associated_idempotent, is_fully_faithful, HomRetraction, Mode};
use crate::error::{Error, Result};
use crate::gallery::functors_between;
use crate::limits::Budget;

/// The quotient `C_e` where `f ~ g` iff `e_B f = e_B g`, with its quotient functor.
#[derive(Clone, Debug)]
pub struct Coidentifier {
    idem: IdempotentNat,
    quotient: Cat,
    h: Functor,
    reps: Vec<Mor>,
    witness: HomRetraction,
}

impl Coidentifier {
    pub fn new(e: &IdempotentNat) -> Result<Coidentifier> {
        let c = e.category();
        let mut class_of = vec![Mor(0); c.num_morphisms()];
        let mut reps = Vec::new();
        let mut seen: HashMap<(Obj, Obj, Mor), Mor> = HashMap::new();
        for f in c.morphisms() {
            let key = (c.dom(f), c.cod(f), c.compose(e.at(c.cod(f)), f));
            let class = *seen.entry(key).or_insert_with(|| {
                reps.push(f);
                Mor(reps.len() - 1)
            });
            class_of[f.0] = class;
        }
        let arrows =
            reps.iter().map(|&f| Arrow { name: c.name_of(f).to_string(), dom: c.dom(f), cod: c.cod(f) }).collect();
        let identity = c.objects().map(|x| class_of[c.id(x).0]).collect();
        for (g, f, gf) in c.composition_table() {
            let via_reps = c.compose(reps[class_of[g.0].0], reps[class_of[f.0].0]);
            if class_of[via_reps.0] != class_of[gf.0] {
                return Err(Error::Internal(format!(
                    "composition is not well defined on the classes of {} and {}",
                    c.name_of(g),
                    c.name_of(f)
                )));
            }
        }
        let objects = c.objects().map(|x| c.object_name(x).to_string()).collect();
        let quotient =
            Arc::new(FinCat::build(objects, arrows, identity, |g, f| class_of[c.compose(reps[g.0], reps[f.0]).0])?);
        let h = Functor::new(c, &quotient, c.objects().collect(), class_of)?;
        let witness = HomRetraction::from_fn(&h, |_, y, m| c.compose(e.at(y), reps[m.0]))?;
        witness.validate(Mode::Natfull)?;
        if associated_idempotent(&witness)? != *e {
            return Err(Error::Internal("the quotient functor recovers a different idempotent".into()));
        }
        Ok(Coidentifier { idem: e.clone(), quotient, h, reps, witness })
    }

    pub fn base(&self) -> &Cat {
        self.idem.category()
    }

    pub fn idempotent(&self) -> &IdempotentNat {
        &self.idem
    }

    pub fn quotient(&self) -> &Cat {
        &self.quotient
    }

    /// The quotient functor `H`.
    pub fn functor(&self) -> &Functor {
        &self.h
    }

    /// Least-id representative of a class.
    pub fn representative(&self, class: Mor) -> Mor {
        self.reps[class.0]
    }

    pub fn representatives(&self) -> &[Mor] {
        &self.reps
    }

    /// `P_{A,B}(f̄) = e_B f`, witnessing that `H` is naturally full.
    pub fn witness(&self) -> &HomRetraction {
        &self.witness
    }
}

pub fn coidentifier(e: &IdempotentNat) -> Result<Coidentifier> {
    Coidentifier::new(e)
}

/// Whether `F` descends along `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descent {
    /// The unique `F_e` with `F = F_e H`.
    Through(Functor),
    /// `F e_X` is not an identity at this object.
    Blocked(Obj),
}

impl Descent {
    pub fn functor(self) -> Option<Functor> {
        match self {
            Descent::Through(f) => Some(f),
            Descent::Blocked(_) => None,
        }
    }
}

pub fn factor_through_coidentifier(f: &Functor, q: &Coidentifier) -> Result<Descent> {
    if !crate::category::same_cat(f.source(), q.base()) {
        return Err(Error::BoundaryMismatch("functor does not start at the quotiented category".into()));
    }
    let c = q.base();
    let d = f.target();
    if let Some(x) = c.objects().find(|&x| !d.is_identity(f.mor(q.idem.at(x)))) {
        return Ok(Descent::Blocked(x));
    }
    let fe = Functor::new(q.quotient(), d, f.object_map().to_vec(), q.reps.iter().map(|&r| f.mor(r)).collect())?;
    if compose_functors(&fe, &q.h)? != *f {
        return Err(Error::Internal("F differs from F_e H".into()));
    }
    Ok(Descent::Through(fe))
}

/// `β_e: F_e → F′_e` with the components of `β`.
pub fn factor_nat(beta: &NatTrans, q: &Coidentifier) -> Result<NatTrans> {
    let fe = factor_through_coidentifier(beta.from(), q)?
        .functor()
        .ok_or_else(|| Error::PreconditionFailed("source functor does not descend".into()))?;
    let ge = factor_through_coidentifier(beta.to(), q)?
        .functor()
        .ok_or_else(|| Error::PreconditionFailed("target functor does not descend".into()))?;
    NatTrans::new(&fe, &ge, beta.components().to_vec())
}

#[derive(Clone, Debug)]
pub struct CanonicalFactorization {
    pub coidentifier: Coidentifier,
    /// `F_e`, separable.
    pub descended: Functor,
    /// `P^{F_e}_{HX,HY} = H P^F_{X,Y}`.
    pub witness: HomRetraction,
}

impl CanonicalFactorization {
    pub fn idempotent(&self) -> &IdempotentNat {
        self.coidentifier.idempotent()
    }

    pub fn quotient_functor(&self) -> &Functor {
        self.coidentifier.functor()
    }
}

pub fn canonical_factorization(f: &Functor, p: &HomRetraction) -> Result<CanonicalFactorization> {
    if p.functor() != f {
        return Err(Error::WitnessInvalid("witness belongs to another functor".into()));
    }
    p.validate(Mode::Semisep)?;
    let e = associated_idempotent(p)?;
    let coid = Coidentifier::new(&e)?;
    let fe = factor_through_coidentifier(f, &coid)?
        .functor()
        .ok_or_else(|| Error::Internal("a semiseparable functor fails to descend".into()))?;
    let h = coid.functor().clone();
    let witness = HomRetraction::from_fn(&fe, |x, y, m| h.mor(p.apply(x, y, m)))?;
    witness.validate(Mode::Sep)?;
    Ok(CanonicalFactorization { coidentifier: coid, descended: fe, witness })
}

/// An idempotent `q` of the base with `H q = class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdempotentLift {
    pub class: Mor,
    pub lift: Mor,
}

/// Lifts every idempotent of `C_e` by `q = e_X h`.
pub fn coidentifier_lifts_idempotents(q: &Coidentifier) -> Result<Vec<IdempotentLift>> {
    let c = q.base();
    let ce = q.quotient();
    ce.morphisms()
        .filter(|&m| ce.is_idempotent(m))
        .map(|m| {
            let x = ce.dom(m);
            let lift = c.compose(q.idem.at(x), q.reps[m.0]);
            if !c.is_idempotent(lift) || q.h.mor(lift) != m {
                return Err(Error::Internal(format!("lift of {} is not an idempotent preimage", ce.name_of(m))));
            }
            Ok(IdempotentLift { class: m, lift })
        })
        .collect()
}

/// For `F = S N` with `S` separable and `N` naturally full, the unique fully
/// faithful `N_e` with `N_e H = N` and `S N_e = F_e`.
pub fn descend_naturally_full_factor(
    s: &Functor,
    n: &Functor,
    factorization: &CanonicalFactorization,
    budget: &mut Budget,
) -> Result<Functor> {
    let q = &factorization.coidentifier;
    let ne = factor_through_coidentifier(n, q)?
        .functor()
        .ok_or_else(|| Error::PreconditionFailed("N does not descend along H".into()))?;
    if !is_fully_faithful(&ne) {
        return Err(Error::Internal("N_e is not fully faithful".into()));
    }
    if compose_functors(s, &ne)? != factorization.descended {
        return Err(Error::Internal("S N_e differs from F_e".into()));
    }
    let candidates = functors_between(q.quotient(), n.target(), usize::MAX, budget)?;
    let matching = candidates
        .iter()
        .filter(|m| {
            compose_functors(m, q.functor()).is_ok_and(|mh| mh == *n)
                && compose_functors(s, m).is_ok_and(|sm| sm == factorization.descended)
        })
        .count();
    if matching != 1 {
        return Err(Error::Internal(format!("{matching} functors satisfy the factorization equations")));
    }
    Ok(ne)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{search_hom_retraction, Mode};
    use crate::completion::is_idempotent_complete;
    use crate::gallery::{terminal, to_terminal, walking_arrow, walking_idempotent, walking_split_idempotent};

    #[test]
    fn identity_idempotent_gives_isomorphic_quotient() {
        let e = walking_idempotent();
        let q = Coidentifier::new(&IdempotentNat::identity(&e)).unwrap();
        assert_eq!(**q.quotient(), *e);
        assert!(q.functor().morphism_map().iter().enumerate().all(|(i, m)| m.0 == i));
        let two = walking_arrow();
        let q2 = Coidentifier::new(&IdempotentNat::identity(&two)).unwrap();
        assert_eq!(q2.quotient().num_morphisms(), 3);
    }

    #[test]
    fn e_collapses_to_terminal() {
        let e = walking_idempotent();
        let idem = IdempotentNat::new(&e, vec![Mor(1)]).unwrap();
        let q = Coidentifier::new(&idem).unwrap();
        assert_eq!(q.quotient().num_morphisms(), 1);
        assert_eq!(q.representative(Mor(0)), Mor(0));
        assert_eq!(q.witness().values(), &[Mor(1)]);
        let lifts = coidentifier_lifts_idempotents(&q).unwrap();
        assert_eq!(lifts, vec![IdempotentLift { class: Mor(0), lift: Mor(1) }]);
    }

    #[test]
    fn descent_along_h() {
        let e = walking_idempotent();
        let idem = IdempotentNat::new(&e, vec![Mor(1)]).unwrap();
        let q = Coidentifier::new(&idem).unwrap();
        let he = factor_through_coidentifier(q.functor(), &q).unwrap().functor().unwrap();
        assert_eq!(he, Functor::identity(q.quotient()));
        assert_eq!(factor_through_coidentifier(&Functor::identity(&e), &q).unwrap(), Descent::Blocked(Obj(0)));
        let one = terminal();
        let g = to_terminal(&e, &one).unwrap();
        let ge = factor_through_coidentifier(&g, &q).unwrap().functor().unwrap();
        assert_eq!(ge.morphism_map(), &[Mor(0)]);
    }

    #[test]
    fn canonical_factorization_of_collapse() {
        let e = walking_idempotent();
        let g = to_terminal(&e, &terminal()).unwrap();
        let p = search_hom_retraction(&g, Mode::Semisep).unwrap().unwrap();
        let cf = canonical_factorization(&g, &p).unwrap();
        assert_eq!(cf.idempotent().at(Obj(0)), Mor(1));
        assert_eq!(cf.descended.source().num_morphisms(), 1);
        let beta = NatTrans::identity(&g);
        assert!(factor_nat(&beta, &cf.coidentifier).unwrap().is_identity());
    }

    #[test]
    fn separable_functor_has_trivial_factorization() {
        let k = walking_split_idempotent();
        let id = Functor::identity(&k);
        let p = search_hom_retraction(&id, Mode::Sep).unwrap().unwrap();
        let cf = canonical_factorization(&id, &p).unwrap();
        assert!(cf.idempotent().is_identity());
        assert_eq!(cf.descended.morphism_map(), id.morphism_map());
    }

    #[test]
    fn quotient_of_complete_category_is_complete() {
        let k = walking_split_idempotent();
        let mut b = Budget::default();
        for idem in IdempotentNat::enumerate(&k, &mut b).unwrap() {
            let q = Coidentifier::new(&idem).unwrap();
            assert!(is_idempotent_complete(q.quotient()));
        }
    }

    #[test]
    fn naturally_full_factor_descends() {
        let e = walking_idempotent();
        let g = to_terminal(&e, &terminal()).unwrap();
        let p = search_hom_retraction(&g, Mode::Semisep).unwrap().unwrap();
        let cf = canonical_factorization(&g, &p).unwrap();
        let s = Functor::identity(g.target());
        let ne = descend_naturally_full_factor(&s, &g, &cf, &mut Budget::default()).unwrap();
        assert_eq!(ne, cf.descended);
    }
}
