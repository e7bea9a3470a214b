//! The Karoubi envelope and what can be transported along it.

use std::collections::HashMap;
use std::sync::Arc;

use crate::adjoint::{self, Adjunction, Semiadjunction};
use crate::category::{compose_functors, same_cat, Arrow, Cat, FinCat, Functor, Mor, NatTrans, Obj};
use crate::error::{Error, Result};
use crate::limits::{Budget, Limits};

/// An object `(X, e)` of the envelope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KaroubiObj {
    pub base: Obj,
    pub idem: Mor,
}

/// `C♮` together with its bookkeeping back to `C`.
#[derive(Clone, Debug)]
pub struct Karoubi {
    base: Cat,
    envelope: Cat,
    objects: Vec<KaroubiObj>,
    underlying: Vec<Mor>,
    index: HashMap<KaroubiObj, Obj>,
    iota: Functor,
}

impl Karoubi {
    pub fn new(c: &Cat) -> Result<Karoubi> {
        Karoubi::with_limits(c, &Limits::current())
    }

    pub fn with_limits(c: &Cat, limits: &Limits) -> Result<Karoubi> {
        let objects: Vec<KaroubiObj> =
            c.objects().flat_map(|x| c.idempotents(x).map(move |e| KaroubiObj { base: x, idem: e })).collect();
        limits.check_size("envelope", objects.len(), 0)?;
        let names: Vec<String> =
            objects.iter().map(|o| format!("({},{})", c.object_name(o.base), c.name_of(o.idem))).collect();
        let mut count = 0usize;
        for s in &objects {
            for t in &objects {
                count += c.hom(s.base, t.base).iter().filter(|&&f| c.compose3(t.idem, f, s.idem) == f).count();
            }
        }
        limits.check_size("envelope", objects.len(), count)?;
        let mut arrows = Vec::with_capacity(count);
        let mut underlying = Vec::with_capacity(count);
        for (si, s) in objects.iter().enumerate() {
            for (ti, t) in objects.iter().enumerate() {
                for &f in c.hom(s.base, t.base) {
                    if c.compose3(t.idem, f, s.idem) == f {
                        arrows.push(Arrow {
                            name: format!("{}:{}->{}", c.name_of(f), names[si], names[ti]),
                            dom: Obj(si),
                            cod: Obj(ti),
                        });
                        underlying.push(f);
                    }
                }
            }
        }
        let index: HashMap<KaroubiObj, Obj> = objects.iter().enumerate().map(|(i, &o)| (o, Obj(i))).collect();
        // hom-sets of the envelope are sorted by underlying morphism, so lookups bisect
        let n = objects.len();
        let mut homs: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for (k, a) in arrows.iter().enumerate() {
            homs[a.dom.0 * n + a.cod.0].push(k);
        }
        let lookup = |s: Obj, t: Obj, f: Mor| -> Mor {
            let hom = &homs[s.0 * n + t.0];
            let k = hom.binary_search_by_key(&f, |&k| underlying[k]).expect("composite stays in the envelope");
            Mor(hom[k])
        };
        let identity: Vec<Mor> = objects.iter().enumerate().map(|(i, o)| lookup(Obj(i), Obj(i), o.idem)).collect();
        let dom_cod: Vec<(Obj, Obj)> = arrows.iter().map(|a| (a.dom, a.cod)).collect();
        let envelope = FinCat::build(names, arrows, identity, |g, f| {
            lookup(dom_cod[f.0].0, dom_cod[g.0].1, c.compose(underlying[g.0], underlying[f.0]))
        })?;
        let envelope = Arc::new(envelope);
        let mut k = Karoubi {
            base: c.clone(),
            envelope: envelope.clone(),
            objects,
            underlying,
            index,
            iota: Functor::identity(c),
        };
        let obj_map: Vec<Obj> = c.objects().map(|x| k.object(x, c.id(x)).expect("identity object")).collect();
        let mor_map = c
            .morphisms()
            .map(|f| k.lift(obj_map[c.dom(f).0], obj_map[c.cod(f).0], f).expect("every morphism lifts"))
            .collect();
        k.iota = Functor::new(c, &envelope, obj_map, mor_map)?;
        if !crate::classify::is_fully_faithful(&k.iota) {
            return Err(Error::Internal("the envelope inclusion is not fully faithful".into()));
        }
        Ok(k)
    }

    pub fn base(&self) -> &Cat {
        &self.base
    }

    pub fn category(&self) -> &Cat {
        &self.envelope
    }

    pub fn objects(&self) -> &[KaroubiObj] {
        &self.objects
    }

    pub fn object_data(&self, x: Obj) -> KaroubiObj {
        self.objects[x.0]
    }

    pub fn object(&self, base: Obj, idem: Mor) -> Option<Obj> {
        self.index.get(&KaroubiObj { base, idem }).copied()
    }

    pub fn underlying(&self, m: Mor) -> Mor {
        self.underlying[m.0]
    }

    /// The envelope morphism `src -> tgt` with underlying `f`, if `f` belongs there.
    pub fn lift(&self, src: Obj, tgt: Obj, f: Mor) -> Option<Mor> {
        let hom = self.envelope.hom(src, tgt);
        hom.binary_search_by_key(&f, |m| self.underlying[m.0]).ok().map(|k| hom[k])
    }

    /// ι_C: X ↦ (X, Id).
    pub fn iota(&self) -> &Functor {
        &self.iota
    }

    /// υ_C: (X, e) ↦ X, f ↦ f. A semifunctor: υ(Id_{(X,e)}) = e.
    pub fn upsilon(&self) -> Functor {
        Functor::semi(
            &self.envelope,
            &self.base,
            self.objects.iter().map(|o| o.base).collect(),
            self.underlying.clone(),
        )
        .expect("upsilon is a semifunctor")
    }

    /// The envelope object that `base` is a retract of through `e`.
    fn at_identity(&self, x: Obj) -> Obj {
        self.object(x, self.base.id(x)).expect("identity object")
    }

    /// The semiadjunctions (υ, ι) with unit η and counit Id, and (ι, υ) with
    /// unit Id and counit ν.
    pub fn semiadjunctions(&self) -> Result<(Semiadjunction, Semiadjunction)> {
        let c = &self.base;
        let k = &self.envelope;
        let up = self.upsilon();
        let iota = &self.iota;
        let iu = compose_functors(iota, &up)?;
        let ui = compose_functors(&up, iota)?;
        let eta_comps = k
            .objects()
            .map(|x| {
                let o = self.object_data(x);
                self.lift(x, self.at_identity(o.base), o.idem).expect("c: (C,c) -> (C,Id)")
            })
            .collect();
        let eta = NatTrans::new(&Functor::identity(k), &iu, eta_comps)?;
        let eps = NatTrans::new(&ui, &Functor::identity(c), c.objects().map(|x| c.id(x)).collect())?;
        let left = Semiadjunction::new(&up, iota, &eta, &eps)?;
        let nu_comps = k
            .objects()
            .map(|x| {
                let o = self.object_data(x);
                self.lift(self.at_identity(o.base), x, o.idem).expect("c: (C,Id) -> (C,c)")
            })
            .collect();
        let nu = NatTrans::new(&iu, &Functor::identity(k), nu_comps)?;
        let unit = NatTrans::new(&Functor::identity(c), &ui, c.objects().map(|x| c.id(x)).collect())?;
        let right = Semiadjunction::new(iota, &up, &unit, &nu)?;
        if crate::category::nat_vertical(&eta, &nu)? != NatTrans::functor_identity(&iu) {
            return Err(Error::Internal("η∘ν differs from ιυ Id".into()));
        }
        if !crate::category::nat_vertical(&nu, &eta)?.is_identity() {
            return Err(Error::Internal("ν∘η differs from Id".into()));
        }
        Ok((left, right))
    }
}

/// Is every idempotent split? Returns one splitting per idempotent, or a non-split one.
pub fn idempotent_splittings(c: &FinCat) -> std::result::Result<Vec<(Mor, Splitting)>, Mor> {
    let mut out = Vec::new();
    for x in c.objects() {
        for q in c.idempotents(x) {
            match split_idempotent(c, q) {
                Ok(Some(s)) => out.push((q, s)),
                _ => return Err(q),
            }
        }
    }
    Ok(out)
}

pub fn is_idempotent_complete(c: &FinCat) -> bool {
    idempotent_splittings(c).is_ok()
}

/// `q = i ∘ p` with `p ∘ i = Id_Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub object: Obj,
    pub p: Mor,
    pub i: Mor,
}

/// The first splitting of `q` in canonical order (object, then p, then i).
pub fn split_idempotent(c: &FinCat, q: Mor) -> Result<Option<Splitting>> {
    if !c.is_idempotent(q) {
        return Err(Error::NotIdempotent(c.name_of(q).to_string()));
    }
    let x = c.dom(q);
    for y in c.objects() {
        for &p in c.hom(x, y) {
            for &i in c.hom(y, x) {
                if c.compose(i, p) == q && c.compose(p, i) == c.id(y) {
                    return Ok(Some(Splitting { object: y, p, i }));
                }
            }
        }
    }
    Ok(None)
}

/// F♮(X, e) = (F X, F e), F♮ f = F f. Always a functor; for a functor F the
/// square ι_D ∘ F = F♮ ∘ ι_C is checked.
pub fn complete_functor(f: &Functor, kc: &Karoubi, kd: &Karoubi) -> Result<Functor> {
    if !same_cat(f.source(), &kc.base) || !same_cat(f.target(), &kd.base) {
        return Err(Error::BoundaryMismatch("envelopes do not match the functor".into()));
    }
    let obj_map: Vec<Obj> =
        kc.objects.iter().map(|o| kd.object(f.ob(o.base), f.mor(o.idem)).expect("F e is idempotent")).collect();
    let k = &kc.envelope;
    let mor_map = k
        .morphisms()
        .map(|m| {
            kd.lift(obj_map[k.dom(m).0], obj_map[k.cod(m).0], f.mor(kc.underlying(m)))
                .expect("F f lies between the images")
        })
        .collect();
    let fk = Functor::new(k, &kd.envelope, obj_map, mor_map)?;
    if f.preserves_identities() {
        let lhs = compose_functors(&kd.iota, f)?;
        let rhs = compose_functors(&fk, &kc.iota)?;
        if lhs != rhs {
            return Err(Error::Internal("ι_D ∘ F differs from F♮ ∘ ι_C".into()));
        }
    }
    Ok(fk)
}

pub fn complete_semifunctor(f: &Functor, kc: &Karoubi, kd: &Karoubi) -> Result<Functor> {
    complete_functor(f, kc, kd)
}

/// α♮_{(X,e)} = α_X ∘ F e, between the completions of the boundary functors.
pub fn complete_nat(alpha: &NatTrans, kc: &Karoubi, kd: &Karoubi) -> Result<NatTrans> {
    let from = complete_functor(alpha.from(), kc, kd)?;
    let to = complete_functor(alpha.to(), kc, kd)?;
    complete_nat_between(alpha, kc, kd, &from, &to)
}

/// As `complete_nat`, with the completed boundary functors supplied.
pub fn complete_nat_between(
    alpha: &NatTrans,
    kc: &Karoubi,
    kd: &Karoubi,
    from: &Functor,
    to: &Functor,
) -> Result<NatTrans> {
    let d = &kd.base;
    let comps = kc
        .envelope
        .objects()
        .map(|x| {
            let o = kc.object_data(x);
            let m = d.compose(alpha.at(o.base), alpha.from().mor(o.idem));
            kd.lift(from.ob(x), to.ob(x), m)
                .ok_or_else(|| Error::NotNatural("component leaves the envelope hom-set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    NatTrans::new(from, to, comps)
}

/// (F♮, G♮, η♮, ε♮).
pub fn complete_adjunction(a: &Adjunction, kc: &Karoubi, kd: &Karoubi) -> Result<Adjunction> {
    let f = complete_functor(a.left(), kc, kd)?;
    let g = complete_functor(a.right(), kd, kc)?;
    let gf = compose_functors(&g, &f)?;
    let fg = compose_functors(&f, &g)?;
    let eta = complete_nat_between(a.unit(), kc, kc, &Functor::identity(&kc.envelope), &gf)?;
    let eps = complete_nat_between(a.counit(), kd, kd, &fg, &Functor::identity(&kd.envelope))?;
    Adjunction::new(&f, &g, &eta, &eps)
}

/// The envelope of the source and target of `f`, and `f♮`.
pub fn complete(f: &Functor) -> Result<(Karoubi, Karoubi, Functor)> {
    let kc = Karoubi::new(f.source())?;
    let kd = if same_cat(f.source(), f.target()) { kc.clone() } else { Karoubi::new(f.target())? };
    let fk = complete_functor(f, &kc, &kd)?;
    Ok((kc, kd, fk))
}

/// Result of restricting a functor between envelopes.
#[derive(Clone, Debug)]
pub struct Restriction {
    /// υ_D ∘ G ∘ ι_C.
    pub semifunctor: Functor,
    /// An isomorphism F♮ ≅ G, first in canonical order.
    pub iso: NatTrans,
    /// Whether a second, different isomorphism exists.
    pub ambiguous: bool,
}

pub fn restrict_semifunctor(g: &Functor, kc: &Karoubi, kd: &Karoubi) -> Result<Restriction> {
    if !same_cat(g.source(), &kc.envelope) || !same_cat(g.target(), &kd.envelope) {
        return Err(Error::BoundaryMismatch("functor is not between the given envelopes".into()));
    }
    let f = compose_functors(&kd.upsilon(), &compose_functors(g, &kc.iota)?)?;
    let fk = complete_functor(&f, kc, kd)?;
    let isos = adjoint::enumerate_isos(&fk, g, 2, &mut Budget::default())?;
    let mut isos = isos.into_iter();
    let iso = isos.next().ok_or_else(|| Error::IsoNotFound("restriction does not complete back".into()))?;
    Ok(Restriction { semifunctor: f, iso, ambiguous: isos.next().is_some() })
}

/// β := υ_D α ι_C for α: F♮ → G♮; checks β♮ = α.
pub fn restrict_nat(alpha: &NatTrans, kc: &Karoubi, kd: &Karoubi) -> Result<NatTrans> {
    let up = kd.upsilon();
    let f = compose_functors(&up, &compose_functors(alpha.from(), &kc.iota)?)?;
    let g = compose_functors(&up, &compose_functors(alpha.to(), &kc.iota)?)?;
    let comps = kc.base.objects().map(|x| kd.underlying(alpha.at(kc.iota.ob(x)))).collect();
    let beta = NatTrans::new(&f, &g, comps)?;
    if !beta.is_seminatural() {
        return Err(Error::Internal("restricted transformation is not seminatural".into()));
    }
    let fk = complete_functor(&f, kc, kd)?;
    let gk = complete_functor(&g, kc, kd)?;
    if fk != *alpha.from() || gk != *alpha.to() {
        return Err(Error::PreconditionFailed("transformation is not between completions".into()));
    }
    let back = complete_nat_between(&beta, kc, kd, &fk, &gk)?;
    if back != *alpha {
        return Err(Error::Internal("β♮ differs from α".into()));
    }
    Ok(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{terminal, to_terminal, walking_arrow, walking_idempotent};

    #[test]
    fn envelope_of_e() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let ke = k.category();
        assert_eq!(ke.num_objects(), 2);
        assert_eq!(ke.num_morphisms(), 5);
        assert_eq!(ke.hom(Obj(0), Obj(0)).len(), 2);
        for (s, t) in [(0, 1), (1, 0), (1, 1)] {
            let hom = ke.hom(Obj(s), Obj(t));
            assert_eq!(hom.len(), 1);
            assert_eq!(k.underlying(hom[0]), Mor(1));
        }
        assert_eq!(k.iota().object_map(), &[Obj(0)]);
        assert!(!is_idempotent_complete(&e));
        assert_eq!(idempotent_splittings(&e).unwrap_err(), Mor(1));
        assert!(is_idempotent_complete(ke));
    }

    #[test]
    fn splitting_in_the_envelope() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let ke = k.category();
        let q = k.lift(Obj(0), Obj(0), Mor(1)).unwrap();
        let s = split_idempotent(ke, q).unwrap().unwrap();
        assert_eq!(s.object, Obj(1));
        assert_eq!(k.underlying(s.p), Mor(1));
        assert_eq!(k.underlying(s.i), Mor(1));
        assert_eq!(split_idempotent(&e, Mor(1)).unwrap(), None);
        assert_eq!(split_idempotent(&e, Mor(0)).unwrap(), Some(Splitting { object: Obj(0), p: Mor(0), i: Mor(0) }));
    }

    #[test]
    fn envelope_of_terminal_and_arrow() {
        assert_eq!(Karoubi::new(&terminal()).unwrap().category().num_objects(), 1);
        let two = walking_arrow();
        let k = Karoubi::new(&two).unwrap();
        let ui = compose_functors(&k.upsilon(), k.iota()).unwrap();
        assert_eq!(ui, Functor::identity(&two));
    }

    #[test]
    fn cap_is_enforced() {
        let e = walking_idempotent();
        let tiny = Limits { max_objects: 1, ..Limits::default() };
        assert!(Karoubi::with_limits(&e, &tiny).unwrap_err().is_budget());
    }

    #[test]
    fn upsilon_on_e() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let up = k.upsilon();
        assert_eq!(up.mor(k.category().id(Obj(1))), Mor(1));
        assert!(!up.preserves_identities());
        let (l, r) = k.semiadjunctions().unwrap();
        assert_eq!(l.left(), &up);
        assert_eq!(r.right(), &up);
    }

    #[test]
    fn semifunctor_completion_breaks_the_square() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let kk = Karoubi::new(k.category()).unwrap();
        let up = k.upsilon();
        let uk = complete_functor(&up, &kk, &k).unwrap();
        let lhs = compose_functors(k.iota(), &up).unwrap();
        let rhs = compose_functors(&uk, kk.iota()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn completing_identity_and_e_to_one() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let idk = complete_functor(&Functor::identity(&e), &k, &k).unwrap();
        assert_eq!(idk, Functor::identity(k.category()));
        let one = terminal();
        let k1 = Karoubi::new(&one).unwrap();
        let g = to_terminal(&e, &one).unwrap();
        let gk = complete_functor(&g, &k, &k1).unwrap();
        assert_eq!(gk.object_map(), &[Obj(0), Obj(0)]);
    }

    #[test]
    fn restriction_round_trip() {
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let id = Functor::identity(k.category());
        let r = restrict_semifunctor(&id, &k, &k).unwrap();
        assert_eq!(r.semifunctor, compose_functors(&k.upsilon(), k.iota()).unwrap());
        assert!(r.iso.is_identity());
        let beta = restrict_nat(&NatTrans::identity(&id), &k, &k).unwrap();
        assert!(beta.is_identity());
    }

    #[test]
    fn restriction_of_a_collapsing_endofunctor() {
        // (ι υ)♮-style: the envelope endofunctor sending everything through (∗, e)
        let e = walking_idempotent();
        let k = Karoubi::new(&e).unwrap();
        let ke = k.category();
        let iu = compose_functors(k.iota(), &k.upsilon()).unwrap();
        let kk = Karoubi::new(ke).unwrap();
        let g = complete_functor(&iu, &kk, &kk).unwrap();
        let rk = restrict_semifunctor(&g, &kk, &kk).unwrap();
        assert!(!rk.semifunctor.preserves_identities());
        assert_eq!(k.underlying(rk.semifunctor.mor(ke.id(Obj(1)))), Mor(1));
    }
}
