//! Adjunctions and semiadjunctions, adjoint search through comma categories,
//! natural isomorphisms, and the (co)reflection hierarchy with its
//! up-to-retracts variants.

use std::sync::Arc;

use serde::Serialize;

use crate::category::{compose_functors, nat_vertical, natural_at, same_cat, Cat, Functor, Mor, NatTrans, Obj};
use crate::classify::{self, is_fully_faithful};
use crate::completion;
use crate::error::{Error, Result};
use crate::limits::Budget;
use crate::search;

/// F ⊣ G with F: C → D, G: D → C, η: Id_C → GF, ε: FG → Id_D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    left: Functor,
    right: Functor,
    unit: NatTrans,
    counit: NatTrans,
}

fn check_shape(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<(Functor, Functor)> {
    if !same_cat(f.source(), g.target()) || !same_cat(f.target(), g.source()) {
        return Err(Error::BoundaryMismatch("functors do not point in opposite directions".into()));
    }
    let gf = compose_functors(g, f)?;
    let fg = compose_functors(f, g)?;
    if *eta.from() != Functor::identity(f.source()) || *eta.to() != gf {
        return Err(Error::BoundaryMismatch("unit is not Id -> GF".into()));
    }
    if *eps.from() != fg || *eps.to() != Functor::identity(f.target()) {
        return Err(Error::BoundaryMismatch("counit is not FG -> Id".into()));
    }
    Ok((gf, fg))
}

impl Adjunction {
    /// Checks both triangle identities componentwise.
    pub fn new(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<Adjunction> {
        check_shape(f, g, eta, eps)?;
        let c = f.source();
        let d = f.target();
        for y in d.objects() {
            let gy = g.ob(y);
            if c.compose(g.mor(eps.at(y)), eta.at(gy)) != c.id(gy) {
                return Err(Error::TriangleFailure(format!("G ε ∘ η G at {}", d.object_name(y))));
            }
        }
        for x in c.objects() {
            let fx = f.ob(x);
            if d.compose(eps.at(fx), f.mor(eta.at(x))) != d.id(fx) {
                return Err(Error::TriangleFailure(format!("ε F ∘ F η at {}", c.object_name(x))));
            }
        }
        Ok(Adjunction { left: f.clone(), right: g.clone(), unit: eta.clone(), counit: eps.clone() })
    }

    pub fn identity(c: &Cat) -> Adjunction {
        let id = Functor::identity(c);
        let unit = NatTrans::identity(&id);
        Adjunction { left: id.clone(), right: id, unit: unit.clone(), counit: unit }
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }

    pub fn counit(&self) -> &NatTrans {
        &self.counit
    }

    /// The category the left adjoint starts from.
    pub fn lower(&self) -> &Cat {
        self.left.source()
    }

    /// The category the right adjoint starts from.
    pub fn upper(&self) -> &Cat {
        self.right.source()
    }

    /// G^op ⊣ F^op with unit ε^op and counit η^op.
    pub fn opposite(&self) -> Adjunction {
        let cop = Arc::new(self.lower().opposite());
        let dop = Arc::new(self.upper().opposite());
        let fop = self.left.opposite_between(&cop, &dop);
        let gop = self.right.opposite_between(&dop, &cop);
        let unit = NatTrans::new(
            &Functor::identity(&dop),
            &compose_functors(&fop, &gop).expect("composable"),
            self.counit.components().to_vec(),
        )
        .expect("dual unit is natural");
        let counit = NatTrans::new(
            &compose_functors(&gop, &fop).expect("composable"),
            &Functor::identity(&cop),
            self.unit.components().to_vec(),
        )
        .expect("dual counit is natural");
        Adjunction::new(&gop, &fop, &unit, &counit).expect("dual of an adjunction")
    }

    /// Same data over table-equal copies of the two categories.
    pub fn rebase(&self, lower: &Cat, upper: &Cat) -> Result<Adjunction> {
        let f = self.left.rebase(lower, upper)?;
        let g = self.right.rebase(upper, lower)?;
        let gf = compose_functors(&g, &f)?;
        let fg = compose_functors(&f, &g)?;
        let eta = NatTrans::new(&Functor::identity(lower), &gf, self.unit.components().to_vec())?;
        let eps = NatTrans::new(&fg, &Functor::identity(upper), self.counit.components().to_vec())?;
        Adjunction::new(&f, &g, &eta, &eps)
    }
}

/// Semifunctors F: C → D, G: D → C with natural η: Id_C → GF, ε: FG → Id_D
/// and G ε ∘ η G = G Id, ε F ∘ F η = F Id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiadjunction {
    left: Functor,
    right: Functor,
    unit: NatTrans,
    counit: NatTrans,
}

impl Semiadjunction {
    pub fn new(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<Semiadjunction> {
        check_shape(f, g, eta, eps)?;
        let c = f.source();
        let d = f.target();
        for y in d.objects() {
            let gy = g.ob(y);
            if c.compose(g.mor(eps.at(y)), eta.at(gy)) != g.mor(d.id(y)) {
                return Err(Error::TriangleFailure(format!("G ε ∘ η G at {}", d.object_name(y))));
            }
        }
        for x in c.objects() {
            let fx = f.ob(x);
            if d.compose(eps.at(fx), f.mor(eta.at(x))) != f.mor(c.id(x)) {
                return Err(Error::TriangleFailure(format!("ε F ∘ F η at {}", c.object_name(x))));
            }
        }
        Ok(Semiadjunction { left: f.clone(), right: g.clone(), unit: eta.clone(), counit: eps.clone() })
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }

    pub fn counit(&self) -> &NatTrans {
        &self.counit
    }

    pub fn from_adjunction(a: &Adjunction) -> Semiadjunction {
        Semiadjunction { left: a.left.clone(), right: a.right.clone(), unit: a.unit.clone(), counit: a.counit.clone() }
    }
}

/// Validates an adjunction from its four pieces.
pub fn validate_adjunction(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<Adjunction> {
    Adjunction::new(f, g, eta, eps)
}

pub fn validate_semiadjunction(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<Semiadjunction> {
    Semiadjunction::new(f, g, eta, eps)
}

/// The unique g: x → y with G g ∘ u = v, if exactly one exists.
fn unique_factor(g: &Functor, x: Obj, y: Obj, u: Mor, v: Mor) -> Option<Mor> {
    let c = g.target();
    let mut found = None;
    for &m in g.source().hom(x, y) {
        if c.compose(g.mor(m), u) == v {
            if found.is_some() {
                return None;
            }
            found = Some(m);
        }
    }
    found
}

/// Is (x, u: c → G x) initial in c ↓ G?
fn is_initial(g: &Functor, x: Obj, u: Mor) -> bool {
    let c = g.target();
    let d = g.source();
    let src = c.dom(u);
    d.objects().all(|y| {
        c.hom(src, g.ob(y)).iter().all(|&v| {
            let count = d.hom(x, y).iter().filter(|&&m| c.compose(g.mor(m), u) == v).count();
            count == 1
        })
    })
}

/// Outcome of an adjoint search: the adjunction, or an object whose comma
/// category has no universal arrow.
#[derive(Clone, Debug)]
pub enum AdjointSearch {
    Found(Box<Adjunction>),
    Missing(Obj),
}

impl AdjointSearch {
    pub fn found(self) -> Option<Adjunction> {
        match self {
            AdjointSearch::Found(a) => Some(*a),
            AdjointSearch::Missing(_) => None,
        }
    }
}

/// Left adjoint of G: D → C via initial objects of every c ↓ G.
pub fn find_left_adjoint(g: &Functor) -> Result<AdjointSearch> {
    let c = g.target();
    let d = g.source();
    let mut obj_map = Vec::with_capacity(c.num_objects());
    let mut eta = Vec::with_capacity(c.num_objects());
    for x in c.objects() {
        let initial =
            d.objects().find_map(|y| c.hom(x, g.ob(y)).iter().find(|&&u| is_initial(g, y, u)).map(|&u| (y, u)));
        match initial {
            Some((y, u)) => {
                obj_map.push(y);
                eta.push(u);
            }
            None => return Ok(AdjointSearch::Missing(x)),
        }
    }
    let mor_map = c
        .morphisms()
        .map(|h| {
            let (x, x2) = (c.dom(h), c.cod(h));
            unique_factor(g, obj_map[x.0], obj_map[x2.0], eta[x.0], c.compose(eta[x2.0], h))
                .ok_or_else(|| Error::Internal("universal arrow without unique factorization".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = Functor::new(c, d, obj_map, mor_map)?;
    let counit = d
        .objects()
        .map(|y| {
            let gy = g.ob(y);
            unique_factor(g, f.ob(gy), y, eta[gy.0], c.id(gy))
                .ok_or_else(|| Error::Internal("counit component is not unique".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = NatTrans::new(&Functor::identity(c), &compose_functors(g, &f)?, eta)?;
    let counit = NatTrans::new(&compose_functors(&f, g)?, &Functor::identity(d), counit)?;
    Ok(AdjointSearch::Found(Box::new(Adjunction::new(&f, g, &unit, &counit)?)))
}

/// Right adjoint of F: C → D, found as a left adjoint of F^op.
pub fn find_right_adjoint(f: &Functor) -> Result<AdjointSearch> {
    let c = f.source();
    let d = f.target();
    let fop = f.opposite();
    match find_left_adjoint(&fop)? {
        AdjointSearch::Missing(y) => Ok(AdjointSearch::Missing(y)),
        AdjointSearch::Found(a) => {
            let l = a.left();
            let g = Functor::new(d, c, l.object_map().to_vec(), l.morphism_map().to_vec())?;
            let unit =
                NatTrans::new(&Functor::identity(c), &compose_functors(&g, f)?, a.counit().components().to_vec())?;
            let counit =
                NatTrans::new(&compose_functors(f, &g)?, &Functor::identity(d), a.unit().components().to_vec())?;
            Ok(AdjointSearch::Found(Box::new(Adjunction::new(f, &g, &unit, &counit)?)))
        }
    }
}

/// Natural isomorphisms F ≅ G in canonical order, up to `limit`.
pub fn enumerate_isos(f: &Functor, g: &Functor, limit: usize, budget: &mut Budget) -> Result<Vec<NatTrans>> {
    if !same_cat(f.source(), g.source()) || !same_cat(f.target(), g.target()) {
        return Err(Error::BoundaryMismatch("isomorphism between non-parallel functors".into()));
    }
    let c = f.source();
    let d = f.target();
    let candidates: Vec<Vec<Mor>> =
        c.objects().map(|x| d.hom(f.ob(x), g.ob(x)).iter().copied().filter(|&m| d.is_iso(m)).collect()).collect();
    let found = search::families(&candidates, limit, budget, |a, i| natural_at(f, g, a, Obj(i)))?;
    found.into_iter().map(|comps| NatTrans::new(f, g, comps)).collect()
}

pub fn iso_of_functors(f: &Functor, g: &Functor) -> Result<Option<NatTrans>> {
    Ok(enumerate_isos(f, g, 1, &mut Budget::default())?.pop())
}

/// For each target object the first (c, φ: F c → d) with φ invertible,
/// or the first object not in the essential image.
pub fn essential_preimages(f: &Functor) -> std::result::Result<Vec<(Obj, Mor)>, Obj> {
    let c = f.source();
    let d = f.target();
    d.objects()
        .map(|y| c.objects().find_map(|x| d.hom(f.ob(x), y).iter().find(|&&m| d.is_iso(m)).map(|&m| (x, m))).ok_or(y))
        .collect()
}

/// Fully faithful and essentially surjective.
pub fn is_equivalence(f: &Functor) -> bool {
    is_fully_faithful(f) && essential_preimages(f).is_ok()
}

/// An adjoint equivalence F ⊣ G with invertible unit and counit.
pub fn quasi_inverse(f: &Functor) -> Result<Adjunction> {
    if !is_fully_faithful(f) {
        return Err(Error::PreconditionFailed("functor is not fully faithful".into()));
    }
    let pre = essential_preimages(f).map_err(|y| {
        Error::PreconditionFailed(format!("{} is not in the essential image", f.target().object_name(y)))
    })?;
    let c = f.source();
    let d = f.target();
    let inv: Vec<Mor> = pre.iter().map(|&(_, m)| d.inverse(m).expect("iso")).collect();
    let lift =
        |x: Obj, y: Obj, h: Mor| -> Mor { *c.hom(x, y).iter().find(|&&m| f.mor(m) == h).expect("fully faithful") };
    let obj_map: Vec<Obj> = pre.iter().map(|&(x, _)| x).collect();
    let mor_map = d
        .morphisms()
        .map(|m| {
            let (s, t) = (d.dom(m), d.cod(m));
            lift(obj_map[s.0], obj_map[t.0], d.compose3(inv[t.0], m, pre[s.0].1))
        })
        .collect();
    let g = Functor::new(d, c, obj_map, mor_map)?;
    let unit = c.objects().map(|x| lift(x, g.ob(f.ob(x)), inv[f.ob(x).0])).collect();
    let unit = NatTrans::new(&Functor::identity(c), &compose_functors(&g, f)?, unit)?;
    let counit = NatTrans::new(&compose_functors(f, &g)?, &Functor::identity(d), pre.iter().map(|p| p.1).collect())?;
    Adjunction::new(f, &g, &unit, &counit)
}

/// G has a fully faithful left adjoint. Also checks that this agrees with the unit being invertible.
pub fn coreflection_data(g: &Functor) -> Result<Option<Adjunction>> {
    let Some(a) = find_left_adjoint(g)?.found() else { return Ok(None) };
    let ff = is_fully_faithful(a.left());
    if ff != a.unit().inverse().is_some() {
        return Err(Error::Internal("left adjoint fully faithful disagrees with unit invertible".into()));
    }
    Ok(ff.then_some(a))
}

/// F has a fully faithful right adjoint; cross-checked against the counit.
pub fn reflection_data(f: &Functor) -> Result<Option<Adjunction>> {
    let Some(a) = find_right_adjoint(f)?.found() else { return Ok(None) };
    let ff = is_fully_faithful(a.right());
    if ff != a.counit().inverse().is_some() {
        return Err(Error::Internal("right adjoint fully faithful disagrees with counit invertible".into()));
    }
    Ok(ff.then_some(a))
}

pub fn is_coreflection(g: &Functor) -> Result<bool> {
    Ok(coreflection_data(g)?.is_some())
}

pub fn is_reflection(f: &Functor) -> Result<bool> {
    Ok(reflection_data(f)?.is_some())
}

/// How the coherence of a bireflection was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoherencePath {
    /// The two adjoints found are equal and coherent as returned.
    Direct,
    /// The right adjunction was transported along an isomorphism onto the left adjoint.
    Transported,
}

#[derive(Clone, Debug)]
pub struct Bireflection {
    /// F ⊣ G.
    pub left: Adjunction,
    /// G ⊣ F, with the same F.
    pub right: Adjunction,
    pub path: CoherencePath,
}

/// G: D → C with F ⊣ G ⊣ F, F fully faithful and η^r ∘ ε^l = Id.
pub fn bireflection_data(g: &Functor) -> Result<Option<Bireflection>> {
    let Some(left) = find_left_adjoint(g)?.found() else { return Ok(None) };
    if !is_fully_faithful(left.left()) {
        return Ok(None);
    }
    let Some(right) = find_right_adjoint(g)?.found() else { return Ok(None) };
    let l = left.left();
    let r = right.right();
    let d = g.source();
    let lg = compose_functors(l, g)?;
    let isos = enumerate_isos(r, l, 4096, &mut Budget::default())?;
    for theta in isos {
        let eta_r = nat_vertical(&theta.at_functor(g)?, right.unit())?;
        let coherent = d.objects().all(|y| d.is_identity(d.compose(eta_r.at(y), left.counit().at(y))));
        if !coherent {
            continue;
        }
        let theta_inv = theta.inverse().expect("iso");
        let eps_r = nat_vertical(right.counit(), &theta_inv.under(g)?)?;
        let transported = Adjunction::new(g, l, &eta_r.retarget(&Functor::identity(d), &lg)?, &eps_r)?;
        let path = if r == l && theta.is_identity() { CoherencePath::Direct } else { CoherencePath::Transported };
        return Ok(Some(Bireflection { left, right: transported, path }));
    }
    Ok(None)
}

pub fn is_bireflection(g: &Functor) -> Result<bool> {
    Ok(bireflection_data(g)?.is_some())
}

/// Completes `f` and applies a plain test to `f♮`.
fn utr<T>(f: &Functor, test: impl FnOnce(&Functor) -> Result<T>) -> Result<T> {
    let (_, _, fk) = completion::complete(f)?;
    test(&fk)
}

pub fn is_coreflection_utr(g: &Functor) -> Result<bool> {
    utr(g, is_coreflection)
}

pub fn is_reflection_utr(f: &Functor) -> Result<bool> {
    utr(f, is_reflection)
}

pub fn is_bireflection_utr(g: &Functor) -> Result<bool> {
    utr(g, is_bireflection)
}

/// Equivalence up to retracts, with the two characterizations computed alongside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceUtr {
    /// F♮ is an equivalence.
    pub completed: bool,
    /// F fully faithful and surjective up to retracts.
    pub ff_and_surjective_utr: bool,
}

pub fn equivalence_utr(f: &Functor) -> Result<EquivalenceUtr> {
    Ok(EquivalenceUtr {
        completed: utr(f, |fk| Ok(is_equivalence(fk)))?,
        ff_and_surjective_utr: is_fully_faithful(f) && classify::is_surjective_utr(f),
    })
}

pub fn is_equivalence_utr(f: &Functor) -> Result<bool> {
    Ok(equivalence_utr(f)?.completed)
}

/// The semiadjunction (F′, G, η, ε) obtained from data with G ε ∘ η G = Id_G,
/// where F′ f = F f ∘ e_X and e = ε F ∘ F η. Returns F′, e and the semiadjunction.
pub fn semiadjunction_from_right_semiadjoint(
    f: &Functor,
    g: &Functor,
    eta: &NatTrans,
    eps: &NatTrans,
) -> Result<(Functor, NatTrans, Semiadjunction)> {
    check_shape(f, g, eta, eps)?;
    let c = f.source();
    let d = f.target();
    for y in d.objects() {
        let gy = g.ob(y);
        if c.compose(g.mor(eps.at(y)), eta.at(gy)) != c.id(gy) {
            return Err(Error::PreconditionFailed(format!("G ε ∘ η G is not the identity at {}", d.object_name(y))));
        }
    }
    let e = nat_vertical(&eps.at_functor(f)?, &eta.under(f)?)?;
    let e = e.retarget(f, f)?;
    let fp = Functor::semi(
        c,
        d,
        f.object_map().to_vec(),
        c.morphisms().map(|m| d.compose(f.mor(m), e.at(c.dom(m)))).collect(),
    )?;
    let eta2 = NatTrans::new(&Functor::identity(c), &compose_functors(g, &fp)?, eta.components().to_vec())?;
    let eps2 = NatTrans::new(&compose_functors(&fp, g)?, &Functor::identity(d), eps.components().to_vec())?;
    let s = Semiadjunction::new(&fp, g, &eta2, &eps2)?;
    for y in d.objects() {
        if d.compose(eps.at(y), e.at(g.ob(y))) != eps.at(y) {
            return Err(Error::Internal("ε ∘ e G differs from ε".into()));
        }
    }
    for x in c.objects() {
        if c.compose(g.mor(e.at(x)), eta.at(x)) != eta.at(x) {
            return Err(Error::Internal("G e ∘ η differs from η".into()));
        }
    }
    Ok((fp, e, s))
}

/// Result of searching ν: GF → Id with η∘ν = GF Id and ν∘η = Id.
#[derive(Clone, Debug)]
pub struct CoreflectionWitness {
    /// A seminatural ν, first in canonical order.
    pub seminatural: Option<NatTrans>,
    /// When no seminatural ν exists: a merely natural one, if any.
    pub natural_only: Option<NatTrans>,
}

pub fn charact_coreflection_utr(s: &Semiadjunction) -> Result<CoreflectionWitness> {
    charact_coreflection_utr_with(s, &mut Budget::default())
}

pub fn charact_coreflection_utr_with(s: &Semiadjunction, budget: &mut Budget) -> Result<CoreflectionWitness> {
    let c = s.left().source();
    let gf = compose_functors(s.right(), s.left())?;
    let id = Functor::identity(c);
    let eta = s.unit();
    let candidates = |seminatural: bool| -> Vec<Vec<Mor>> {
        c.objects()
            .map(|x| {
                let gfid = gf.mor(c.id(x));
                c.hom(gf.ob(x), x)
                    .iter()
                    .copied()
                    .filter(|&nu| {
                        c.compose(nu, eta.at(x)) == c.id(x)
                            && c.compose(eta.at(x), nu) == gfid
                            && (!seminatural || c.compose(nu, gfid) == nu)
                    })
                    .collect()
            })
            .collect()
    };
    let semi = search::first_family(&candidates(true), budget, |a, i| natural_at(&gf, &id, a, Obj(i)))?;
    let seminatural = semi.map(|comps| NatTrans::new(&gf, &id, comps)).transpose()?;
    let natural_only = if seminatural.is_none() {
        search::first_family(&candidates(false), budget, |a, i| natural_at(&gf, &id, a, Obj(i)))?
            .map(|comps| NatTrans::new(&gf, &id, comps))
            .transpose()?
    } else {
        None
    };
    Ok(CoreflectionWitness { seminatural, natural_only })
}

/// ν: GF → Id natural with ν ∘ η = Id and ν G = G ε.
pub fn trinat_witness(f: &Functor, g: &Functor, eta: &NatTrans, eps: &NatTrans) -> Result<Option<NatTrans>> {
    check_shape(f, g, eta, eps)?;
    let c = f.source();
    let d = f.target();
    let gf = compose_functors(g, f)?;
    let id = Functor::identity(c);
    let mut forced: Vec<Option<Mor>> = vec![None; c.num_objects()];
    for y in d.objects() {
        let gy = g.ob(y);
        let v = g.mor(eps.at(y));
        match forced[gy.0] {
            Some(w) if w != v => return Ok(None),
            _ => forced[gy.0] = Some(v),
        }
    }
    let candidates: Vec<Vec<Mor>> = c
        .objects()
        .map(|x| {
            c.hom(gf.ob(x), x)
                .iter()
                .copied()
                .filter(|&nu| c.compose(nu, eta.at(x)) == c.id(x) && forced[x.0].is_none_or(|v| v == nu))
                .collect()
        })
        .collect();
    search::first_family(&candidates, &mut Budget::default(), |a, i| natural_at(&gf, &id, a, Obj(i)))?
        .map(|comps| NatTrans::new(&gf, &id, comps))
        .transpose()
}

/// A natural σ: Id_D → FG with ε ∘ σ = Id.
pub fn counit_section(a: &Adjunction) -> Result<Option<NatTrans>> {
    let d = a.upper();
    let fg = a.counit().from().clone();
    let id = Functor::identity(d);
    let candidates: Vec<Vec<Mor>> = d
        .objects()
        .map(|y| d.hom(y, fg.ob(y)).iter().copied().filter(|&s| d.compose(a.counit().at(y), s) == d.id(y)).collect())
        .collect();
    search::first_family(&candidates, &mut Budget::default(), |s, i| natural_at(&id, &fg, s, Obj(i)))?
        .map(|comps| NatTrans::new(&id, &fg, comps))
        .transpose()
}

/// A natural ρ: GF → Id_C with ρ ∘ η = Id.
pub fn unit_retraction(a: &Adjunction) -> Result<Option<NatTrans>> {
    let c = a.lower();
    let gf = a.unit().to().clone();
    let id = Functor::identity(c);
    let candidates: Vec<Vec<Mor>> = c
        .objects()
        .map(|x| c.hom(gf.ob(x), x).iter().copied().filter(|&r| c.compose(r, a.unit().at(x)) == c.id(x)).collect())
        .collect();
    search::first_family(&candidates, &mut Budget::default(), |s, i| natural_at(&gf, &id, s, Obj(i)))?
        .map(|comps| NatTrans::new(&gf, &id, comps))
        .transpose()
}
