//! Monads of adjunctions, separable monads, Eilenberg–Moore and Kleisli
//! categories, comparison functors, and the audit of the monadic theorems.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::adjoint::{
    self, counit_section, equivalence_utr, find_left_adjoint, is_bireflection, is_bireflection_utr,
    is_coreflection_utr, is_equivalence, quasi_inverse, trinat_witness, Adjunction, EquivalenceUtr,
};
use crate::category::{
    compose_functors, nat_whisker_left, natural_at, same_cat, Arrow, Cat, FinCat, Functor, Mor, NatTrans, Obj,
};
use crate::classify::{
    is_fully_faithful, is_naturally_full, is_semiseparable, is_separable, is_surjective_utr, search_hom_retraction,
    HomRetraction, Mode,
};
use crate::coident::{
    canonical_factorization, factor_nat, factor_through_coidentifier, CanonicalFactorization, Coidentifier,
};
use crate::completion::{complete, is_idempotent_complete};
use crate::error::{Error, Result};
use crate::limits::{Budget, Limits};
use crate::search;

/// `(T, m: TT → T, η: Id → T)` on one category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monad {
    carrier: Functor,
    mult: NatTrans,
    unit: NatTrans,
}

impl Monad {
    pub fn new(carrier: &Functor, mult: &NatTrans, unit: &NatTrans) -> Result<Monad> {
        let c = carrier.source();
        if !same_cat(c, carrier.target()) {
            return Err(Error::BoundaryMismatch("monad carrier is not an endofunctor".into()));
        }
        let tt = compose_functors(carrier, carrier)?;
        if *mult.from() != tt || mult.to() != carrier {
            return Err(Error::BoundaryMismatch("multiplication is not TT -> T".into()));
        }
        if *unit.from() != Functor::identity(c) || unit.to() != carrier {
            return Err(Error::BoundaryMismatch("unit is not Id -> T".into()));
        }
        for x in c.objects() {
            let tx = carrier.ob(x);
            let m = mult.at(x);
            let name = c.object_name(x);
            if c.compose(m, carrier.mor(m)) != c.compose(m, mult.at(tx)) {
                return Err(Error::MonadLaw(format!("associativity at {name}")));
            }
            if c.compose(m, unit.at(tx)) != c.id(tx) || c.compose(m, carrier.mor(unit.at(x))) != c.id(tx) {
                return Err(Error::MonadLaw(format!("unit law at {name}")));
            }
        }
        Ok(Monad { carrier: carrier.clone(), mult: mult.clone(), unit: unit.clone() })
    }

    pub fn identity(c: &Cat) -> Monad {
        let id = Functor::identity(c);
        let n = NatTrans::identity(&id);
        Monad { carrier: id, mult: n.clone(), unit: n }
    }

    pub fn category(&self) -> &Cat {
        self.carrier.source()
    }

    pub fn carrier(&self) -> &Functor {
        &self.carrier
    }

    pub fn mult(&self) -> &NatTrans {
        &self.mult
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }
}

/// `(GF, GεF, η)`.
pub fn monad_of(a: &Adjunction) -> Result<Monad> {
    let t = a.unit().to().clone();
    let tt = compose_functors(&t, &t)?;
    let comps = a.lower().objects().map(|x| a.right().mor(a.counit().at(a.left().ob(x)))).collect();
    Monad::new(&t, &NatTrans::new(&tt, &t, comps)?, a.unit())
}

/// The comonad `(FG, FηG, ε)`, as a monad on the opposite of the upper category.
pub fn comonad_of(a: &Adjunction) -> Result<Monad> {
    monad_of(&a.opposite())
}

/// `σ: T → TT` with `m σ = Id` and `T m ∘ σ T = σ ∘ m = m T ∘ T σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityWitness(NatTrans);

impl SeparabilityWitness {
    pub fn new(t: &Monad, sigma: NatTrans) -> Result<SeparabilityWitness> {
        let c = t.category();
        let tt = compose_functors(&t.carrier, &t.carrier)?;
        if sigma.from() != &t.carrier || *sigma.to() != tt {
            return Err(Error::BoundaryMismatch("σ is not T -> TT".into()));
        }
        let ok = c.objects().all(|x| {
            c.compose(t.mult.at(x), sigma.at(x)) == c.id(t.carrier.ob(x)) && sigma_squares(t, sigma.components(), x)
        });
        if !ok {
            return Err(Error::WitnessInvalid("separability equations fail".into()));
        }
        Ok(SeparabilityWitness(sigma))
    }

    pub fn sigma(&self) -> &NatTrans {
        &self.0
    }
}

fn sigma_squares(t: &Monad, sigma: &[Mor], x: Obj) -> bool {
    let c = t.category();
    let tr = &t.carrier;
    let m = &t.mult;
    let tx = tr.ob(x);
    let a = c.compose(tr.mor(m.at(x)), sigma[tx.0]);
    let b = c.compose(sigma[x.0], m.at(x));
    let d = c.compose(m.at(tx), tr.mor(sigma[x.0]));
    a == b && b == d
}

pub fn is_separable_monad(t: &Monad) -> Result<Option<SeparabilityWitness>> {
    is_separable_monad_with(t, &mut Budget::from_limits())
}

pub fn is_separable_monad_with(t: &Monad, budget: &mut Budget) -> Result<Option<SeparabilityWitness>> {
    let c = t.category();
    let tr = &t.carrier;
    let tt = compose_functors(tr, tr)?;
    let candidates: Vec<Vec<Mor>> = c
        .objects()
        .map(|x| {
            let tx = tr.ob(x);
            c.hom(tx, tt.ob(x)).iter().copied().filter(|&s| c.compose(t.mult.at(x), s) == c.id(tx)).collect()
        })
        .collect();
    let found = search::first_family(&candidates, budget, |a, i| {
        let x = Obj(i);
        if !natural_at(tr, &tt, a, x) {
            return false;
        }
        c.objects().filter(|&y| y == x || tr.ob(y) == x).all(|y| match (a[y.0], a[tr.ob(y).0]) {
            (Some(_), Some(_)) => {
                let full: Vec<Mor> = a.iter().map(|m| m.unwrap_or(Mor(0))).collect();
                sigma_squares(t, &full, y)
            }
            _ => true,
        })
    })?;
    found.map(|comps| SeparabilityWitness::new(t, NatTrans::new(tr, &tt, comps)?)).transpose()
}

/// Objects and morphisms indexed by their data in a base category.
/// A category, the underlying morphism of each arrow, and the arrow index.
type Assembled = (Cat, Vec<Mor>, HashMap<(Obj, Obj, Mor), Mor>);

struct Assembly {
    names: Vec<String>,
    arrows: Vec<Arrow>,
    underlying: Vec<Mor>,
    index: HashMap<(Obj, Obj, Mor), Mor>,
}

impl Assembly {
    fn new(names: Vec<String>) -> Assembly {
        Assembly { names, arrows: Vec::new(), underlying: Vec::new(), index: HashMap::new() }
    }

    fn push(&mut self, name: String, dom: Obj, cod: Obj, und: Mor) {
        self.index.insert((dom, cod, und), Mor(self.arrows.len()));
        self.arrows.push(Arrow { name, dom, cod });
        self.underlying.push(und);
    }

    fn finish(
        self,
        what: &str,
        identity: impl Fn(Obj) -> Mor,
        compose: impl Fn(Mor, Mor, Obj) -> Mor,
    ) -> Result<Assembled> {
        Limits::current().check_size(what, self.names.len(), self.arrows.len())?;
        let Assembly { names, arrows, underlying, index } = self;
        let n = names.len();
        let lookup = |d: Obj, c: Obj, u: Mor| index.get(&(d, c, u)).copied();
        let identity = (0..n)
            .map(|x| lookup(Obj(x), Obj(x), identity(Obj(x))))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Internal(format!("{what}: identity is missing")))?;
        let mut missing = false;
        let cat = FinCat::build(names, arrows.clone(), identity, |g, f| {
            let (d, c) = (arrows[f.0].dom, arrows[g.0].cod);
            lookup(d, c, compose(underlying[g.0], underlying[f.0], c)).unwrap_or_else(|| {
                missing = true;
                f
            })
        });
        if missing {
            return Err(Error::Internal(format!("{what}: composite leaves the category")));
        }
        Ok((Arc::new(cat?), underlying, index))
    }
}

/// An algebra `(X, μ: TX → X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EmObject {
    pub carrier: Obj,
    pub action: Mor,
}

/// The Eilenberg–Moore category with `V ⊣ U` and counit `β`, `U β_(X,μ) = μ`.
#[derive(Clone, Debug)]
pub struct EmCategory {
    monad: Monad,
    category: Cat,
    objects: Vec<EmObject>,
    underlying: Vec<Mor>,
    index: HashMap<(Obj, Obj, Mor), Mor>,
    objects_index: HashMap<EmObject, Obj>,
    adjunction: Adjunction,
}

impl EmCategory {
    pub fn new(t: &Monad) -> Result<EmCategory> {
        Self::with_budget(t, &mut Budget::from_limits())
    }

    pub fn with_budget(t: &Monad, budget: &mut Budget) -> Result<EmCategory> {
        let c = t.category();
        let tr = &t.carrier;
        let mut objects = Vec::new();
        for x in c.objects() {
            let tx = tr.ob(x);
            for &mu in c.hom(tx, x) {
                budget.tick()?;
                if c.compose(mu, t.unit.at(x)) == c.id(x) && c.compose(mu, t.mult.at(x)) == c.compose(mu, tr.mor(mu)) {
                    objects.push(EmObject { carrier: x, action: mu });
                }
            }
        }
        let objects_index: HashMap<EmObject, Obj> = objects.iter().enumerate().map(|(i, &o)| (o, Obj(i))).collect();
        let name = |o: &EmObject| format!("({},{})", c.object_name(o.carrier), c.name_of(o.action));
        let mut asm = Assembly::new(objects.iter().map(name).collect());
        for (i, a) in objects.iter().enumerate() {
            for (j, b) in objects.iter().enumerate() {
                for &f in c.hom(a.carrier, b.carrier) {
                    budget.tick()?;
                    if c.compose(f, a.action) == c.compose(b.action, tr.mor(f)) {
                        asm.push(format!("{}:{}->{}", c.name_of(f), name(a), name(b)), Obj(i), Obj(j), f);
                    }
                }
            }
        }
        let (category, underlying, index) =
            asm.finish("Eilenberg-Moore category", |x| c.id(objects[x.0].carrier), |g, f, _| c.compose(g, f))?;
        let u = Functor::new(&category, c, objects.iter().map(|o| o.carrier).collect(), underlying.clone())?;
        let free_obj: Vec<Obj> =
            c.objects().map(|x| objects_index[&EmObject { carrier: tr.ob(x), action: t.mult.at(x) }]).collect();
        let free_mor = c.morphisms().map(|f| index[&(free_obj[c.dom(f).0], free_obj[c.cod(f).0], tr.mor(f))]).collect();
        let v = Functor::new(c, &category, free_obj, free_mor)?;
        let unit = NatTrans::new(&Functor::identity(c), &compose_functors(&u, &v)?, t.unit.components().to_vec())?;
        let beta = category
            .objects()
            .map(|y| {
                let o = objects[y.0];
                index[&(v.ob(o.carrier), y, o.action)]
            })
            .collect();
        let beta = NatTrans::new(&compose_functors(&v, &u)?, &Functor::identity(&category), beta)?;
        let adjunction = Adjunction::new(&v, &u, &unit, &beta)?;
        Ok(EmCategory { monad: t.clone(), category, objects, underlying, index, objects_index, adjunction })
    }

    pub fn monad(&self) -> &Monad {
        &self.monad
    }

    pub fn category(&self) -> &Cat {
        &self.category
    }

    pub fn objects(&self) -> &[EmObject] {
        &self.objects
    }

    pub fn object(&self, carrier: Obj, action: Mor) -> Option<Obj> {
        self.objects_index.get(&EmObject { carrier, action }).copied()
    }

    pub fn underlying(&self, m: Mor) -> Mor {
        self.underlying[m.0]
    }

    pub fn lift(&self, src: Obj, tgt: Obj, f: Mor) -> Option<Mor> {
        self.index.get(&(src, tgt, f)).copied()
    }

    /// `U_T`.
    pub fn forgetful(&self) -> &Functor {
        self.adjunction.right()
    }

    /// `V_T`.
    pub fn free(&self) -> &Functor {
        self.adjunction.left()
    }

    /// `V_T ⊣ U_T` with counit `β`.
    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }
}

pub fn em_category(t: &Monad) -> Result<EmCategory> {
    EmCategory::new(t)
}

/// The Kleisli category, its adjunction `V′ ⊣ U′`, and `J` into an Eilenberg–Moore category.
#[derive(Clone, Debug)]
pub struct KleisliCategory {
    category: Cat,
    underlying: Vec<Mor>,
    adjunction: Adjunction,
    comparison: Functor,
}

impl KleisliCategory {
    pub fn new(em: &EmCategory) -> Result<KleisliCategory> {
        let t = &em.monad;
        let c = t.category();
        let tr = &t.carrier;
        let m = &t.mult;
        let mut asm = Assembly::new(c.objects().map(|x| c.object_name(x).to_string()).collect());
        for x in c.objects() {
            for y in c.objects() {
                for &f in c.hom(x, tr.ob(y)) {
                    asm.push(format!("{}:{}~>{}", c.name_of(f), c.object_name(x), c.object_name(y)), x, y, f);
                }
            }
        }
        let (category, underlying, index) =
            asm.finish("Kleisli category", |x| t.unit.at(x), |g, f, z| c.compose3(m.at(z), tr.mor(g), f))?;
        let k = &category;
        let u = Functor::new(
            k,
            c,
            c.objects().map(|x| tr.ob(x)).collect(),
            k.morphisms().map(|f| c.compose(m.at(k.cod(f)), tr.mor(underlying[f.0]))).collect(),
        )?;
        let v = Functor::new(
            c,
            k,
            c.objects().collect(),
            c.morphisms().map(|f| index[&(c.dom(f), c.cod(f), c.compose(t.unit.at(c.cod(f)), f))]).collect(),
        )?;
        let unit = NatTrans::new(&Functor::identity(c), &compose_functors(&u, &v)?, t.unit.components().to_vec())?;
        let counit = k.objects().map(|x| index[&(tr.ob(x), x, c.id(tr.ob(x)))]).collect();
        let counit = NatTrans::new(&compose_functors(&v, &u)?, &Functor::identity(k), counit)?;
        let adjunction = Adjunction::new(&v, &u, &unit, &counit)?;
        let jobj: Vec<Obj> = k
            .objects()
            .map(|x| em.object(tr.ob(x), m.at(x)).ok_or_else(|| Error::Internal("free algebra missing".into())))
            .collect::<Result<_>>()?;
        let jmor = k
            .morphisms()
            .map(|f| {
                em.lift(jobj[k.dom(f).0], jobj[k.cod(f).0], u.mor(f))
                    .ok_or_else(|| Error::Internal("J sends a map outside the algebra maps".into()))
            })
            .collect::<Result<_>>()?;
        let j = Functor::new(k, em.category(), jobj, jmor)?;
        if compose_functors(em.forgetful(), &j)? != u {
            return Err(Error::Internal("U′ differs from U J".into()));
        }
        if compose_functors(&j, &v)? != *em.free() {
            return Err(Error::Internal("J V′ differs from V".into()));
        }
        if !is_fully_faithful(&j) {
            return Err(Error::Internal("J is not fully faithful".into()));
        }
        Ok(KleisliCategory { category, underlying, adjunction, comparison: j })
    }

    pub fn category(&self) -> &Cat {
        &self.category
    }

    /// The morphism `C → TD` behind a Kleisli arrow `C ↛ D`.
    pub fn underlying(&self, m: Mor) -> Mor {
        self.underlying[m.0]
    }

    /// `V′ ⊣ U′`.
    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }

    /// `J_T`.
    pub fn comparison(&self) -> &Functor {
        &self.comparison
    }
}

pub fn kleisli_category(t: &Monad) -> Result<KleisliCategory> {
    KleisliCategory::new(&EmCategory::new(t)?)
}

/// The monad of an adjunction with both of its categories of algebras and
/// the comparison functors `K_{GF}` and `L_{GF}`.
#[derive(Clone, Debug)]
pub struct Monadics {
    adjunction: Adjunction,
    em: EmCategory,
    kleisli: KleisliCategory,
    comparison: Functor,
    kleisli_comparison: Functor,
}

impl Monadics {
    pub fn new(a: &Adjunction) -> Result<Monadics> {
        let t = monad_of(a)?;
        let em = EmCategory::new(&t)?;
        let kleisli = KleisliCategory::new(&em)?;
        let d = a.upper();
        let (g, f, eps) = (a.right(), a.left(), a.counit());
        let kobj: Vec<Obj> = d
            .objects()
            .map(|y| {
                em.object(g.ob(y), g.mor(eps.at(y)))
                    .ok_or_else(|| Error::Internal("(GD, Gε_D) is not an algebra".into()))
            })
            .collect::<Result<_>>()?;
        let kmor = d
            .morphisms()
            .map(|h| {
                em.lift(kobj[d.dom(h).0], kobj[d.cod(h).0], g.mor(h))
                    .ok_or_else(|| Error::Internal("G f is not an algebra map".into()))
            })
            .collect::<Result<_>>()?;
        let k = Functor::new(d, em.category(), kobj, kmor)?;
        if compose_functors(em.forgetful(), &k)? != *g {
            return Err(Error::Internal("U K differs from G".into()));
        }
        if compose_functors(&k, f)? != *em.free() {
            return Err(Error::Internal("K F differs from V".into()));
        }
        let kl = kleisli.category();
        let c = a.lower();
        let l = Functor::new(
            kl,
            d,
            kl.objects().map(|x| f.ob(x)).collect(),
            kl.morphisms().map(|h| d.compose(eps.at(f.ob(kl.cod(h))), f.mor(kleisli.underlying(h)))).collect(),
        )?;
        debug_assert!(same_cat(c, kleisli.adjunction().lower()));
        if compose_functors(&k, &l)? != *kleisli.comparison() {
            return Err(Error::Internal("K L differs from J".into()));
        }
        if !is_fully_faithful(&l) {
            return Err(Error::Internal("L is not fully faithful".into()));
        }
        Ok(Monadics { adjunction: a.clone(), em, kleisli, comparison: k, kleisli_comparison: l })
    }

    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }

    pub fn monad(&self) -> &Monad {
        self.em.monad()
    }

    pub fn em(&self) -> &EmCategory {
        &self.em
    }

    pub fn kleisli(&self) -> &KleisliCategory {
        &self.kleisli
    }

    /// `K_{GF}: D → C_{GF}`.
    pub fn comparison(&self) -> &Functor {
        &self.comparison
    }

    /// `L_{GF}: GF-Free → D`.
    pub fn kleisli_comparison(&self) -> &Functor {
        &self.kleisli_comparison
    }
}

pub fn comparison(a: &Adjunction) -> Result<Functor> {
    Ok(Monadics::new(a)?.comparison)
}

/// `K^{FG}`, as the comparison functor of the opposite adjunction.
pub fn cocomparison(a: &Adjunction) -> Result<Functor> {
    comparison(&a.opposite())
}

pub fn kleisli_comparison(a: &Adjunction) -> Result<Functor> {
    Ok(Monadics::new(a)?.kleisli_comparison)
}

/// `(K_{GF})_e` for a semiseparable right adjoint, with its checks.
#[derive(Clone, Debug)]
pub struct CoidVsEm {
    pub factorization: CanonicalFactorization,
    pub monadics: Monadics,
    pub descended_comparison: Functor,
    pub equivalence_utr: EquivalenceUtr,
    /// Present when the upper category is idempotent complete.
    pub equivalence: Option<bool>,
}

pub fn coid_vs_em(a: &Adjunction, p: &HomRetraction) -> Result<CoidVsEm> {
    if p.functor() != a.right() {
        return Err(Error::WitnessInvalid("witness is not for the right adjoint".into()));
    }
    let factorization = canonical_factorization(a.right(), p)?;
    let monadics = Monadics::new(a)?;
    let ke = factor_through_coidentifier(monadics.comparison(), &factorization.coidentifier)?
        .functor()
        .ok_or_else(|| Error::Internal("K does not descend along H".into()))?;
    if compose_functors(monadics.em().forgetful(), &ke)? != factorization.descended {
        return Err(Error::Internal("U (K)_e differs from G_e".into()));
    }
    let eq = equivalence_utr(&ke)?;
    if !eq.completed || !eq.ff_and_surjective_utr {
        return Err(Error::Internal("(K)_e is not an equivalence up to retracts".into()));
    }
    let equivalence = if is_idempotent_complete(a.upper()) {
        if !is_equivalence(&ke) {
            return Err(Error::Internal("(K)_e is not an equivalence over a complete category".into()));
        }
        Some(true)
    } else {
        None
    };
    Ok(CoidVsEm { factorization, monadics, descended_comparison: ke, equivalence_utr: eq, equivalence })
}

/// The dual statement: run on the opposite adjunction with the witness for `F` read oppositely.
pub fn coid_vs_em_dual(a: &Adjunction, p: &HomRetraction) -> Result<CoidVsEm> {
    if p.functor() != a.left() {
        return Err(Error::WitnessInvalid("witness is not for the left adjoint".into()));
    }
    let op = a.opposite();
    let pop = HomRetraction::from_fn(op.right(), |x, y, h| p.apply(y, x, h))?;
    coid_vs_em(&op, &pop)
}

/// `F_e ⊣ G_e` induced along a coidentifier, with equality certificates.
#[derive(Clone, Debug)]
pub struct Transported {
    pub adjunction: Adjunction,
    pub same_monad: bool,
    pub comparison_square: bool,
}

/// `G = G_e H`, `F_e = H F`, `η_e = η`, `ε_e H = H ε`.
pub fn transported_adjunction(g_e: &Functor, q: &Coidentifier, a: &Adjunction) -> Result<Transported> {
    let h = q.functor();
    if compose_functors(g_e, h).ok().as_ref() != Some(a.right()) {
        return Err(Error::PreconditionFailed("G is not G_e H".into()));
    }
    let f_e = compose_functors(h, a.left())?;
    let ge_fe = compose_functors(g_e, &f_e)?;
    let eta = a.unit().retarget(&Functor::identity(a.lower()), &ge_fe)?;
    let h_eps = nat_whisker_left(h, a.counit())?;
    let eps = factor_nat(&h_eps, q)?.retarget(&compose_functors(&f_e, g_e)?, &Functor::identity(q.quotient()))?;
    let adjunction = Adjunction::new(&f_e, g_e, &eta, &eps)?;
    let same_monad = monad_of(&adjunction)? == monad_of(a)?;
    let original = Monadics::new(a)?;
    let new = Monadics::new(&adjunction)?;
    let comparison_square = compose_functors(new.comparison(), h)? == *original.comparison();
    if !same_monad || !comparison_square {
        return Err(Error::Internal("transported adjunction changes the monad or the comparison".into()));
    }
    Ok(Transported { adjunction, same_monad, comparison_square })
}

/// `F = F_e H`, `G_e = H G`, `η_e H = H η`, `ε_e = ε`.
pub fn transported_adjunction_dual(f_e: &Functor, q: &Coidentifier, a: &Adjunction) -> Result<Transported> {
    let h = q.functor();
    if compose_functors(f_e, h).ok().as_ref() != Some(a.left()) {
        return Err(Error::PreconditionFailed("F is not F_e H".into()));
    }
    let g_e = compose_functors(h, a.right())?;
    let fe_ge = compose_functors(f_e, &g_e)?;
    let eps = a.counit().retarget(&fe_ge, &Functor::identity(a.upper()))?;
    let h_eta = nat_whisker_left(h, a.unit())?;
    let eta = factor_nat(&h_eta, q)?.retarget(&Functor::identity(q.quotient()), &compose_functors(&g_e, f_e)?)?;
    let adjunction = Adjunction::new(f_e, &g_e, &eta, &eps)?;
    let same_monad = comonad_of(&adjunction)? == comonad_of(a)?;
    let new = cocomparison(&adjunction)?;
    let old = cocomparison(a)?;
    let hop = h.opposite_between(old.source(), new.source());
    let comparison_square = compose_functors(&new, &hop)? == old;
    if !same_monad || !comparison_square {
        return Err(Error::Internal("transported adjunction changes the comonad or the cocomparison".into()));
    }
    Ok(Transported { adjunction, same_monad, comparison_square })
}

/// `F′ ⊣ G′` restricted along fully faithful `S`, `T`, with its transfer checks.
#[derive(Clone, Debug)]
pub struct Restricted {
    pub adjunction: Adjunction,
    /// `(property, holds for the original, holds for the restriction)`.
    pub transfer: Vec<(&'static str, bool, bool)>,
}

/// For `F ⊣ G` with `F: L → U`, `T: L′ → L`, `S: U′ → U`, `F′: L′ → U′`, `G′: U′ → L′`,
/// `F T = S F′` and `T G′ = G S`.
pub fn restricted_adjunction(
    a: &Adjunction,
    s: &Functor,
    t: &Functor,
    f2: &Functor,
    g2: &Functor,
) -> Result<Restricted> {
    if !is_fully_faithful(s) || !is_fully_faithful(t) {
        return Err(Error::PreconditionFailed("S and T must be fully faithful".into()));
    }
    if compose_functors(a.left(), t)? != compose_functors(s, f2)? {
        return Err(Error::PreconditionFailed("F T differs from S F′".into()));
    }
    if compose_functors(t, g2)? != compose_functors(a.right(), s)? {
        return Err(Error::PreconditionFailed("T G′ differs from G S".into()));
    }
    let (l2, u2) = (f2.source(), f2.target());
    let (l, u) = (a.lower(), a.upper());
    let preimage = |func: &Functor, x: Obj, y: Obj, m: Mor| -> Result<Mor> {
        func.source()
            .hom(x, y)
            .iter()
            .copied()
            .find(|&k| func.mor(k) == m)
            .ok_or_else(|| Error::Internal("no preimage under a fully faithful functor".into()))
    };
    let eta =
        l2.objects().map(|x| preimage(t, x, g2.ob(f2.ob(x)), a.unit().at(t.ob(x)))).collect::<Result<Vec<_>>>()?;
    let eps =
        u2.objects().map(|y| preimage(s, f2.ob(g2.ob(y)), y, a.counit().at(s.ob(y)))).collect::<Result<Vec<_>>>()?;
    let eta = NatTrans::new(&Functor::identity(l2), &compose_functors(g2, f2)?, eta)?;
    let eps = NatTrans::new(&compose_functors(f2, g2)?, &Functor::identity(u2), eps)?;
    let adjunction = Adjunction::new(f2, g2, &eta, &eps)?;
    for x in l2.objects() {
        for y in u2.objects() {
            for &k in u2.hom(f2.ob(x), y) {
                let transposed = l2.compose(g2.mor(k), eta.at(x));
                let outer = l.compose(a.right().mor(s.mor(k)), a.unit().at(t.ob(x)));
                if t.mor(transposed) != outer {
                    return Err(Error::Internal("hom bijections do not commute with (S, T)".into()));
                }
            }
        }
    }
    let _ = u;
    let mut transfer = Vec::new();
    for (name, func, func2, mode) in [
        ("right adjoint semiseparable", a.right(), g2, Mode::Semisep),
        ("right adjoint separable", a.right(), g2, Mode::Sep),
        ("left adjoint semiseparable", a.left(), f2, Mode::Semisep),
        ("left adjoint separable", a.left(), f2, Mode::Sep),
    ] {
        let before = search_hom_retraction(func, mode)?.is_some();
        let after = search_hom_retraction(func2, mode)?.is_some();
        if before && !after {
            return Err(Error::Internal(format!("{name} does not pass to the restriction")));
        }
        transfer.push((name, before, after));
    }
    Ok(Restricted { adjunction, transfer })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseKind {
    Iff,
    Implies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    BudgetExceeded,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub id: &'static str,
    pub statement: &'static str,
    pub kind: ClauseKind,
    pub lhs: Option<bool>,
    pub rhs: Option<bool>,
    pub status: ClauseStatus,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub lower_objects: usize,
    pub upper_objects: usize,
    pub clauses: Vec<Clause>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.status == ClauseStatus::Pass)
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    /// An error naming the first clause that did not pass.
    pub fn into_result(self) -> Result<TheoremReport> {
        match self.clauses.iter().find(|c| c.status != ClauseStatus::Pass) {
            None => Ok(self),
            Some(c) if c.status == ClauseStatus::BudgetExceeded => {
                Err(Error::BudgetExceeded(format!("clause {}", c.id)))
            }
            Some(c) => Err(Error::Internal(format!("clause {} fails: {}", c.id, c.detail.clone().unwrap_or_default()))),
        }
    }
}

type Cached = OnceLock<std::result::Result<bool, (bool, String)>>;

/// Shared, lazily computed facts about one adjunction.
struct Facts {
    data: Monadics,
    g_semisep: Cached,
    g_sep: Cached,
    monad_sep: OnceLock<std::result::Result<Option<SeparabilityWitness>, (bool, String)>>,
    k_natfull: Cached,
    k_ff: Cached,
    k_coref_utr: Cached,
    k_biref_utr: Cached,
    k_equiv_utr: Cached,
    k_has_left: Cached,
    k_biref: Cached,
    k_equiv: Cached,
}

fn wrap(r: Result<bool>) -> std::result::Result<bool, (bool, String)> {
    r.map_err(|e| (e.is_budget(), e.to_string()))
}

impl Facts {
    fn get(cell: &Cached, f: impl FnOnce() -> Result<bool>) -> std::result::Result<bool, (bool, String)> {
        cell.get_or_init(|| wrap(f())).clone()
    }

    fn g_semisep(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.g_semisep, || is_semiseparable(self.data.adjunction.right()))
    }

    fn g_sep(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.g_sep, || is_separable(self.data.adjunction.right()))
    }

    fn monad_witness(&self) -> std::result::Result<Option<SeparabilityWitness>, (bool, String)> {
        self.monad_sep
            .get_or_init(|| is_separable_monad(self.data.monad()).map_err(|e| (e.is_budget(), e.to_string())))
            .clone()
    }

    fn monad_sep(&self) -> std::result::Result<bool, (bool, String)> {
        self.monad_witness().map(|w| w.is_some())
    }

    fn k_natfull(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_natfull, || is_naturally_full(self.data.comparison()))
    }

    fn k_ff(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_ff, || Ok(is_fully_faithful(self.data.comparison())))
    }

    fn k_coref_utr(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_coref_utr, || is_coreflection_utr(self.data.comparison()))
    }

    fn k_biref_utr(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_biref_utr, || is_bireflection_utr(self.data.comparison()))
    }

    fn k_equiv_utr(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_equiv_utr, || adjoint::is_equivalence_utr(self.data.comparison()))
    }

    fn k_has_left(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_has_left, || Ok(find_left_adjoint(self.data.comparison())?.found().is_some()))
    }

    fn k_biref(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_biref, || is_bireflection(self.data.comparison()))
    }

    fn k_equiv(&self) -> std::result::Result<bool, (bool, String)> {
        Self::get(&self.k_equiv, || Ok(is_equivalence(self.data.comparison())))
    }
}

type Side = std::result::Result<bool, (bool, String)>;

struct Eval {
    lhs: Side,
    rhs: Side,
    witnesses: Vec<String>,
    extra: Option<std::result::Result<(), (bool, String)>>,
}

fn both(a: Side, b: Side) -> Side {
    Ok(a? && b?)
}

struct Spec {
    id: &'static str,
    statement: &'static str,
    kind: ClauseKind,
    eval: fn(&Facts) -> Eval,
}

fn plain(lhs: Side, rhs: Side) -> Eval {
    Eval { lhs, rhs, witnesses: Vec::new(), extra: None }
}

fn sigma_names(f: &Facts) -> Vec<String> {
    match f.monad_witness() {
        Ok(Some(w)) => {
            let c = f.data.monad().category();
            vec![format!(
                "sigma = [{}]",
                w.sigma().components().iter().map(|&m| c.name_of(m)).collect::<Vec<_>>().join(", ")
            )]
        }
        _ => Vec::new(),
    }
}

const SPECS: &[Spec] = &[
    Spec {
        id: "semisep_iff_separable_monad_and_comparison_naturally_full",
        statement: "G semiseparable iff the monad is separable and K is naturally full",
        kind: ClauseKind::Iff,
        eval: |f| Eval { witnesses: sigma_names(f), ..plain(f.g_semisep(), both(f.monad_sep(), f.k_natfull())) },
    },
    Spec {
        id: "separable_iff_separable_monad_and_comparison_fully_faithful",
        statement: "G separable iff the monad is separable and K is fully faithful",
        kind: ClauseKind::Iff,
        eval: |f| plain(f.g_sep(), both(f.monad_sep(), f.k_ff())),
    },
    Spec {
        id: "separable_monad_implies_comparison_coreflection_utr",
        statement: "a separable monad makes K a coreflection up to retracts, with nu = beta",
        kind: ClauseKind::Implies,
        eval: |f| {
            let lhs = f.monad_sep();
            let extra = match lhs {
                Ok(true) => Some(counit_mechanism(&f.data).map_err(|e| (e.is_budget(), e.to_string()))),
                _ => None,
            };
            Eval { lhs, rhs: f.k_coref_utr(), witnesses: Vec::new(), extra }
        },
    },
    Spec {
        id: "semisep_iff_separable_monad_and_comparison_bireflection_utr",
        statement: "G semiseparable iff the monad is separable and K is a bireflection up to retracts",
        kind: ClauseKind::Iff,
        eval: |f| plain(f.g_semisep(), both(f.monad_sep(), f.k_biref_utr())),
    },
    Spec {
        id: "separable_iff_separable_monad_and_comparison_equivalence_utr",
        statement: "G separable iff the monad is separable and K is an equivalence up to retracts",
        kind: ClauseKind::Iff,
        eval: |f| plain(f.g_sep(), both(f.monad_sep(), f.k_equiv_utr())),
    },
    Spec {
        id: "semisep_with_left_adjoint_implies_comparison_bireflection",
        statement: "G semiseparable and K with a left adjoint make K a bireflection",
        kind: ClauseKind::Implies,
        eval: |f| plain(both(f.g_semisep(), f.k_has_left()), f.k_biref()),
    },
    Spec {
        id: "separable_with_left_adjoint_implies_comparison_equivalence",
        statement: "G separable and K with a left adjoint make K an equivalence",
        kind: ClauseKind::Implies,
        eval: |f| plain(both(f.g_sep(), f.k_has_left()), f.k_equiv()),
    },
    Spec {
        id: "complete_semisep_implies_comparison_left_adjoint",
        statement: "over an idempotent complete category, G semiseparable gives K a left adjoint",
        kind: ClauseKind::Implies,
        eval: |f| {
            let complete = is_idempotent_complete(f.data.adjunction.upper());
            plain(f.g_semisep().map(|b| b && complete), f.k_has_left())
        },
    },
    Spec {
        id: "separable_monad_implies_free_comparison_equivalence_utr",
        statement: "a separable monad makes J fully faithful and surjective up to retracts",
        kind: ClauseKind::Implies,
        eval: |f| {
            let j = f.data.kleisli().comparison();
            plain(f.monad_sep(), Ok(is_fully_faithful(j) && is_surjective_utr(j)))
        },
    },
    Spec {
        id: "semisep_implies_descended_comparison_equivalence_utr",
        statement: "G semiseparable gives (K)_e with (K)_e H = K, U (K)_e = G_e, an equivalence up to retracts",
        kind: ClauseKind::Implies,
        eval: |f| {
            let lhs = f.g_semisep();
            let rhs = match lhs {
                Ok(true) => wrap(descended_comparison_holds(&f.data)),
                _ => Ok(false),
            };
            plain(lhs, rhs)
        },
    },
    Spec {
        id: "semisep_implies_kleisli_coidentifier_em_equivalent_after_completion",
        statement: "G semiseparable makes the completions of GF-Free, D_e and C_GF equivalent via H L and K L",
        kind: ClauseKind::Implies,
        eval: |f| {
            let lhs = f.g_semisep();
            let rhs = match lhs {
                Ok(true) => wrap(kleisli_equivalences(&f.data).map(|_| true)),
                _ => Ok(false),
            };
            plain(lhs, rhs)
        },
    },
];

/// The proof mechanism: `η₁` a natural section of `β`, `ε₁ = ε`, `ν₁ = β`.
fn counit_mechanism(data: &Monadics) -> Result<()> {
    let em = data.em().adjunction();
    let eta1 = counit_section(em)?.ok_or_else(|| Error::Internal("β has no natural section".into()))?;
    let k = data.comparison();
    let a = data.adjunction();
    let lambda = compose_functors(a.left(), em.right())?;
    let k_lambda = compose_functors(k, &lambda)?;
    let eta1 = eta1.retarget(&Functor::identity(em.upper()), &k_lambda)?;
    let lambda_k = compose_functors(&lambda, k)?;
    let eps1 = a.counit().retarget(&lambda_k, &Functor::identity(a.upper()))?;
    let beta = em.counit();
    let cgf = em.upper();
    let retracts = cgf.objects().all(|x| cgf.is_identity(cgf.compose(beta.at(x), eta1.at(x))));
    let d = a.upper();
    let square = d.objects().all(|y| beta.at(k.ob(y)) == k.mor(a.counit().at(y)));
    if !retracts || !square {
        return Err(Error::Internal("β does not satisfy the ν equations".into()));
    }
    trinat_witness(&lambda, k, &eta1, &eps1)?.ok_or_else(|| Error::Internal("no ν found".into()))?;
    Ok(())
}

fn descended_comparison_holds(data: &Monadics) -> Result<bool> {
    let p = search_hom_retraction(data.adjunction().right(), Mode::Semisep)?
        .ok_or_else(|| Error::Internal("semiseparable without witness".into()))?;
    coid_vs_em(data.adjunction(), &p)?;
    Ok(true)
}

/// Quasi-inverse equivalences for `(H L)♮` and `(K L)♮ = J♮`.
#[derive(Clone, Debug)]
pub struct KleisliEquivalences {
    pub to_coidentifier: Adjunction,
    pub to_algebras: Adjunction,
}

pub fn kleisli_equivalences(data: &Monadics) -> Result<KleisliEquivalences> {
    let p = search_hom_retraction(data.adjunction().right(), Mode::Semisep)?
        .ok_or_else(|| Error::PreconditionFailed("the right adjoint is not semiseparable".into()))?;
    let factorization = canonical_factorization(data.adjunction().right(), &p)?;
    let hl = compose_functors(factorization.quotient_functor(), data.kleisli_comparison())?;
    let (_, _, hl_k) = complete(&hl)?;
    let (_, _, j_k) = complete(data.kleisli().comparison())?;
    Ok(KleisliEquivalences { to_coidentifier: quasi_inverse(&hl_k)?, to_algebras: quasi_inverse(&j_k)? })
}

/// Runs every clause, concurrently, and reports them in a fixed order.
pub fn audit(a: &Adjunction) -> Result<TheoremReport> {
    audit_with(a, false)
}

pub fn audit_with(a: &Adjunction, timing: bool) -> Result<TheoremReport> {
    let facts = Facts {
        data: Monadics::new(a)?,
        g_semisep: OnceLock::new(),
        g_sep: OnceLock::new(),
        monad_sep: OnceLock::new(),
        k_natfull: OnceLock::new(),
        k_ff: OnceLock::new(),
        k_coref_utr: OnceLock::new(),
        k_biref_utr: OnceLock::new(),
        k_equiv_utr: OnceLock::new(),
        k_has_left: OnceLock::new(),
        k_biref: OnceLock::new(),
        k_equiv: OnceLock::new(),
    };
    let clauses = SPECS
        .par_iter()
        .map(|spec| {
            let start = Instant::now();
            let ev = (spec.eval)(&facts);
            let mut clause = Clause {
                id: spec.id,
                statement: spec.statement,
                kind: spec.kind,
                lhs: ev.lhs.as_ref().ok().copied(),
                rhs: ev.rhs.as_ref().ok().copied(),
                status: ClauseStatus::Pass,
                witnesses: ev.witnesses,
                detail: None,
                elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
            };
            let failure = [&ev.lhs, &ev.rhs].into_iter().find_map(|s| s.as_ref().err().cloned());
            let failure = failure.or_else(|| ev.extra.and_then(|r| r.err()));
            if let Some((budget, msg)) = failure {
                clause.status = if budget { ClauseStatus::BudgetExceeded } else { ClauseStatus::Error };
                clause.detail = Some(msg);
            } else {
                let (l, r) = (clause.lhs.unwrap_or(false), clause.rhs.unwrap_or(false));
                let holds = match spec.kind {
                    ClauseKind::Iff => l == r,
                    ClauseKind::Implies => !l || r,
                };
                if !holds {
                    clause.status = ClauseStatus::Fail;
                    clause.detail = Some(format!("lhs = {l}, rhs = {r}"));
                }
            }
            clause
        })
        .collect();
    Ok(TheoremReport { lower_objects: a.lower().num_objects(), upper_objects: a.upper().num_objects(), clauses })
}

/// The primal clauses run on the opposite adjunction, which states the dual theorems.
pub fn audit_dual(a: &Adjunction) -> Result<TheoremReport> {
    audit(&a.opposite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::Karoubi;
    use crate::gallery::{terminal, to_terminal, walking_idempotent, walking_split_idempotent};

    fn one_e() -> Adjunction {
        let k = walking_split_idempotent();
        find_left_adjoint(&to_terminal(&k, &terminal()).unwrap()).unwrap().found().unwrap()
    }

    #[test]
    fn identity_monad_and_algebras() {
        let e = walking_idempotent();
        let a = Adjunction::identity(&e);
        let t = monad_of(&a).unwrap();
        assert_eq!(t, Monad::identity(&e));
        let em = em_category(&t).unwrap();
        assert_eq!(em.category().num_objects(), 1);
        assert_eq!(em.category().num_morphisms(), 2);
        let w = is_separable_monad(&t).unwrap().unwrap();
        assert!(w.sigma().is_identity());
        let kl = kleisli_category(&t).unwrap();
        assert_eq!(kl.category().num_morphisms(), 2);
        let m = Monadics::new(&a).unwrap();
        assert!(m.comparison().morphism_map().iter().enumerate().all(|(i, f)| f.0 == i));
    }

    #[test]
    fn split_idempotent_over_one() {
        let a = one_e();
        let t = monad_of(&a).unwrap();
        assert_eq!(t.category().num_morphisms(), 1);
        assert!(is_separable_monad(&t).unwrap().is_some());
        let m = Monadics::new(&a).unwrap();
        assert_eq!(m.em().category().num_morphisms(), 1);
        assert_eq!(m.comparison().morphism_map(), a.right().morphism_map());
        assert_eq!(m.kleisli_comparison().ob(Obj(0)), a.left().ob(Obj(0)));
        let co = comonad_of(&a).unwrap();
        assert_eq!(co.category().num_morphisms(), 5);
    }

    #[test]
    fn audit_split_idempotent() {
        let a = one_e();
        let r = audit(&a).unwrap();
        assert!(r.all_pass(), "{r:#?}");
        let c = r.clause("semisep_iff_separable_monad_and_comparison_bireflection_utr").unwrap();
        assert_eq!((c.lhs, c.rhs), (Some(true), Some(true)));
        let c = r.clause("separable_iff_separable_monad_and_comparison_equivalence_utr").unwrap();
        assert_eq!((c.lhs, c.rhs), (Some(false), Some(false)));
        assert!(audit_dual(&a).unwrap().all_pass());
    }

    #[test]
    fn coidentifier_versus_algebras() {
        let a = one_e();
        let p = search_hom_retraction(a.right(), Mode::Semisep).unwrap().unwrap();
        let r = coid_vs_em(&a, &p).unwrap();
        assert_eq!(r.equivalence, Some(true));
        let q = &r.factorization.coidentifier;
        assert_eq!(q.quotient().num_morphisms(), 4);
        let ge = r.factorization.descended.clone();
        let tr = transported_adjunction(&ge, q, &a).unwrap();
        assert!(tr.same_monad && tr.comparison_square);
    }

    #[test]
    fn restriction_along_identities() {
        let a = one_e();
        let s = Functor::identity(a.upper());
        let t = Functor::identity(a.lower());
        let r = restricted_adjunction(&a, &s, &t, a.left(), a.right()).unwrap();
        assert_eq!(r.adjunction, a);
    }

    #[test]
    fn envelope_restriction() {
        let e = walking_idempotent();
        let one = terminal();
        let g = to_terminal(&e, &one).unwrap();
        let ke = Karoubi::new(&e).unwrap();
        let k1 = Karoubi::new(&one).unwrap();
        let gk = crate::completion::complete_functor(&g, &ke, &k1).unwrap();
        let a = find_left_adjoint(&gk).unwrap().found().unwrap();
        let mono = Monadics::new(&a).unwrap();
        assert!(is_separable_monad(mono.monad()).unwrap().is_some());
        assert!(audit(&a).unwrap().all_pass());
    }
}
