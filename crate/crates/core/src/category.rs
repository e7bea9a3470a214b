//! Finite categories as explicit tables, with functors, semifunctors and
//! (semi)natural transformations between them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub usize);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// Shared handle to an immutable category.
pub type Cat = Arc<FinCat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// Unvalidated tables, referring to objects and morphisms by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<(String, String, String)>,
    pub identities: Vec<(String, String)>,
    pub composition: Vec<[String; 3]>,
}

/// A finite category. Ids follow construction order, which is the canonical order.
#[derive(Clone)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<Mor>,
    homs: Vec<Vec<Mor>>,
    hom_pos: Vec<usize>,
    incoming: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    in_pos: Vec<usize>,
    // comp[g][in_pos[f]] = g o f, for cod f = dom g
    comp: Vec<Vec<Mor>>,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && self.identity == other.identity
            && self.comp == other.comp
    }
}

impl Eq for FinCat {}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCat({} objects, {} morphisms)", self.objects.len(), self.arrows.len())
    }
}

/// Pointer equality first, table equality otherwise.
pub fn same_cat(a: &Cat, b: &Cat) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

struct Skeleton {
    homs: Vec<Vec<Mor>>,
    hom_pos: Vec<usize>,
    incoming: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    in_pos: Vec<usize>,
}

fn skeleton(n: usize, arrows: &[Arrow]) -> Skeleton {
    let mut homs = vec![Vec::new(); n * n];
    let mut hom_pos = vec![0; arrows.len()];
    let mut incoming = vec![Vec::new(); n];
    let mut outgoing = vec![Vec::new(); n];
    let mut in_pos = vec![0; arrows.len()];
    for (i, a) in arrows.iter().enumerate() {
        let h = &mut homs[a.dom.0 * n + a.cod.0];
        hom_pos[i] = h.len();
        h.push(Mor(i));
        in_pos[i] = incoming[a.cod.0].len();
        incoming[a.cod.0].push(Mor(i));
        outgoing[a.dom.0].push(Mor(i));
    }
    Skeleton { homs, hom_pos, incoming, outgoing, in_pos }
}

fn name_index<T: Copy>(names: impl Iterator<Item = String>, wrap: fn(usize) -> T) -> HashMap<String, T> {
    names.enumerate().map(|(i, n)| (n, wrap(i))).collect()
}

impl FinCat {
    /// Builds a category from a composition rule and checks every law.
    pub fn build(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Mor,
    ) -> Result<FinCat> {
        let n = objects.len();
        if identity.len() != n {
            return Err(Error::Internal("identity table has the wrong length".into()));
        }
        for a in &arrows {
            if a.dom.0 >= n || a.cod.0 >= n {
                return Err(Error::Internal(format!("arrow {} is dangling", a.name)));
            }
        }
        let sk = skeleton(n, &arrows);
        let comp = (0..arrows.len())
            .map(|g| sk.incoming[arrows[g].dom.0].iter().map(|&f| compose(Mor(g), f)).collect::<Vec<_>>())
            .collect();
        let cat = FinCat::assemble(objects, arrows, identity, sk, comp);
        let violations = cat.law_violations();
        if violations.is_empty() {
            Ok(cat)
        } else {
            Err(Error::InvalidCategory(violations))
        }
    }

    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<Mor>,
        sk: Skeleton,
        comp: Vec<Vec<Mor>>,
    ) -> FinCat {
        let object_index = name_index(objects.iter().cloned(), Obj);
        let morphism_index = name_index(arrows.iter().map(|a| a.name.clone()), Mor);
        FinCat {
            objects,
            arrows,
            identity,
            homs: sk.homs,
            hom_pos: sk.hom_pos,
            incoming: sk.incoming,
            outgoing: sk.outgoing,
            in_pos: sk.in_pos,
            comp,
            object_index,
            morphism_index,
        }
    }

    /// Unit laws, typing of composites and associativity over all composable triples.
    pub fn law_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, &id) in self.identity.iter().enumerate() {
            let a = &self.arrows[id.0];
            if a.dom.0 != x || a.cod.0 != x {
                out.push(Violation::BadIdentity {
                    object: self.objects[x].clone(),
                    reason: format!("{} is not an endomorphism of it", a.name),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for g in self.morphisms() {
            for &f in &self.incoming[self.dom(g).0] {
                let gf = self.compose(g, f);
                if gf.0 >= self.arrows.len() || self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                    out.push(Violation::MistypedComposite {
                        g: self.name_of(g).into(),
                        f: self.name_of(f).into(),
                        gf: self.arrows.get(gf.0).map_or("?".into(), |a| a.name.clone()),
                    });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in self.morphisms() {
            let left = self.compose(self.id(self.cod(f)), f);
            let right = self.compose(f, self.id(self.dom(f)));
            if left != f {
                out.push(Violation::BadIdentity {
                    object: self.objects[self.cod(f).0].clone(),
                    reason: format!("id o {} = {}", self.name_of(f), self.name_of(left)),
                });
            }
            if right != f {
                out.push(Violation::BadIdentity {
                    object: self.objects[self.dom(f).0].clone(),
                    reason: format!("{} o id = {}", self.name_of(f), self.name_of(right)),
                });
            }
        }
        for f in self.morphisms() {
            for &g in &self.outgoing[self.cod(f).0] {
                let gf = self.compose(g, f);
                for &h in &self.outgoing[self.cod(g).0] {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        out.push(Violation::NonAssociative {
                            h: self.name_of(h).into(),
                            g: self.name_of(g).into(),
                            f: self.name_of(f).into(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl DoubleEndedIterator<Item = Obj> + ExactSizeIterator + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl DoubleEndedIterator<Item = Mor> + ExactSizeIterator + Clone {
        (0..self.arrows.len()).map(Mor)
    }

    pub fn object_name(&self, x: Obj) -> &str {
        &self.objects[x.0]
    }

    pub fn name_of(&self, f: Mor) -> &str {
        &self.arrows[f.0].name
    }

    pub fn object_named(&self, name: &str) -> Option<Obj> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_named(&self, name: &str) -> Option<Mor> {
        self.morphism_index.get(name).copied()
    }

    pub fn arrow(&self, f: Mor) -> &Arrow {
        &self.arrows[f.0]
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.arrows[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.arrows[f.0].cod
    }

    pub fn id(&self, x: Obj) -> Mor {
        self.identity[x.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identity[self.dom(f).0] == f
    }

    /// g o f. Panics when the pair is not composable.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        assert_eq!(self.cod(f), self.dom(g), "{} o {} is not composable", self.name_of(g), self.name_of(f));
        self.comp[g.0][self.in_pos[f.0]]
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        (self.cod(f) == self.dom(g)).then(|| self.comp[g.0][self.in_pos[f.0]])
    }

    /// h o g o f.
    pub fn compose3(&self, h: Mor, g: Mor, f: Mor) -> Mor {
        self.compose(h, self.compose(g, f))
    }

    /// Morphisms X -> Y in id order.
    pub fn hom(&self, x: Obj, y: Obj) -> &[Mor] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    /// Position of f inside its own hom-set.
    pub fn hom_index(&self, f: Mor) -> usize {
        self.hom_pos[f.0]
    }

    /// Morphisms with the given codomain.
    pub fn incoming(&self, x: Obj) -> &[Mor] {
        &self.incoming[x.0]
    }

    /// Morphisms with the given domain.
    pub fn outgoing(&self, x: Obj) -> &[Mor] {
        &self.outgoing[x.0]
    }

    pub fn is_endo(&self, f: Mor) -> bool {
        self.dom(f) == self.cod(f)
    }

    pub fn is_idempotent(&self, f: Mor) -> bool {
        self.is_endo(f) && self.compose(f, f) == f
    }

    pub fn idempotents(&self, x: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.hom(x, x).iter().copied().filter(move |&f| self.compose(f, f) == f)
    }

    /// The least g with g o f = id and f o g = id.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x).iter().copied().find(|&g| self.compose(g, f) == self.id(x) && self.compose(f, g) == self.id(y))
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// The least r with r o f = id.
    pub fn retraction_of(&self, f: Mor) -> Option<Mor> {
        let x = self.dom(f);
        self.hom(self.cod(f), x).iter().copied().find(|&r| self.compose(r, f) == self.id(x))
    }

    /// The least s with f o s = id.
    pub fn section_of(&self, f: Mor) -> Option<Mor> {
        let y = self.cod(f);
        self.hom(y, self.dom(f)).iter().copied().find(|&s| self.compose(f, s) == self.id(y))
    }

    /// Same objects and morphisms with domains and codomains exchanged.
    pub fn opposite(&self) -> FinCat {
        let arrows: Vec<Arrow> =
            self.arrows.iter().map(|a| Arrow { name: a.name.clone(), dom: a.cod, cod: a.dom }).collect();
        let sk = skeleton(self.objects.len(), &arrows);
        let comp = (0..arrows.len())
            .map(|g| sk.incoming[arrows[g].dom.0].iter().map(|&f| self.compose(f, Mor(g))).collect())
            .collect();
        FinCat::assemble(self.objects.clone(), arrows, self.identity.clone(), sk, comp)
    }

    /// Every composable pair as (g, f, g o f), g-major.
    pub fn composition_table(&self) -> Vec<(Mor, Mor, Mor)> {
        let mut out = Vec::new();
        for g in self.morphisms() {
            for &f in &self.incoming[self.dom(g).0] {
                out.push((g, f, self.compose(g, f)));
            }
        }
        out
    }

    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            objects: self.objects.clone(),
            morphisms: self
                .arrows
                .iter()
                .map(|a| (a.name.clone(), self.objects[a.dom.0].clone(), self.objects[a.cod.0].clone()))
                .collect(),
            identities: self
                .objects()
                .map(|x| (self.objects[x.0].clone(), self.name_of(self.id(x)).to_string()))
                .collect(),
            composition: self
                .composition_table()
                .into_iter()
                .map(|(g, f, gf)| {
                    [self.name_of(g).to_string(), self.name_of(f).to_string(), self.name_of(gf).to_string()]
                })
                .collect(),
        }
    }
}

/// Validates raw tables, reporting every violation found.
pub fn validate_category(raw: &RawCategory) -> std::result::Result<FinCat, Vec<Violation>> {
    let mut bad = Vec::new();
    let mut objects: HashMap<&str, Obj> = HashMap::new();
    for (i, name) in raw.objects.iter().enumerate() {
        if objects.insert(name, Obj(i)).is_some() {
            bad.push(Violation::DuplicateName(name.clone()));
        }
    }
    let mut morphisms: HashMap<&str, Mor> = HashMap::new();
    let mut arrows = Vec::with_capacity(raw.morphisms.len());
    for (i, (name, dom, cod)) in raw.morphisms.iter().enumerate() {
        if morphisms.insert(name, Mor(i)).is_some() {
            bad.push(Violation::DuplicateName(name.clone()));
        }
        let d = objects.get(dom.as_str()).copied();
        let c = objects.get(cod.as_str()).copied();
        if d.is_none() {
            bad.push(Violation::DanglingReference(format!("domain {dom} of {name}")));
        }
        if c.is_none() {
            bad.push(Violation::DanglingReference(format!("codomain {cod} of {name}")));
        }
        arrows.push(Arrow { name: name.clone(), dom: d.unwrap_or(Obj(0)), cod: c.unwrap_or(Obj(0)) });
    }
    let n = raw.objects.len();
    let mut identity: Vec<Option<Mor>> = vec![None; n];
    for (obj, mor) in &raw.identities {
        let x = objects.get(obj.as_str()).copied();
        let f = morphisms.get(mor.as_str()).copied();
        match (x, f) {
            (Some(x), Some(f)) => {
                if identity[x.0].is_some() {
                    bad.push(Violation::BadIdentity { object: obj.clone(), reason: "identity given twice".into() });
                } else if arrows[f.0].dom != x || arrows[f.0].cod != x {
                    bad.push(Violation::BadIdentity {
                        object: obj.clone(),
                        reason: format!("{mor} is not an endomorphism of it"),
                    });
                } else {
                    identity[x.0] = Some(f);
                }
            }
            (None, _) => bad.push(Violation::DanglingReference(format!("identity object {obj}"))),
            (_, None) => bad.push(Violation::DanglingReference(format!("identity morphism {mor}"))),
        }
    }
    for (x, id) in identity.iter().enumerate() {
        if id.is_none()
            && !bad.iter().any(|v| matches!(v, Violation::BadIdentity { object, .. } if *object == raw.objects[x]))
        {
            bad.push(Violation::BadIdentity { object: raw.objects[x].clone(), reason: "no identity given".into() });
        }
    }
    let sk = skeleton(n, &arrows);
    let mut comp: Vec<Vec<Option<Mor>>> =
        (0..arrows.len()).map(|g| vec![None; sk.incoming[arrows[g].dom.0].len()]).collect();
    for [g, f, gf] in &raw.composition {
        let (gm, fm, gfm) = (
            morphisms.get(g.as_str()).copied(),
            morphisms.get(f.as_str()).copied(),
            morphisms.get(gf.as_str()).copied(),
        );
        let (Some(gm), Some(fm), Some(gfm)) = (gm, fm, gfm) else {
            for name in [g, f, gf] {
                if !morphisms.contains_key(name.as_str()) {
                    bad.push(Violation::DanglingReference(format!("composite entry {name}")));
                }
            }
            continue;
        };
        if arrows[fm.0].cod != arrows[gm.0].dom {
            bad.push(Violation::NotComposable { g: g.clone(), f: f.clone() });
            continue;
        }
        if arrows[gfm.0].dom != arrows[fm.0].dom || arrows[gfm.0].cod != arrows[gm.0].cod {
            bad.push(Violation::MistypedComposite { g: g.clone(), f: f.clone(), gf: gf.clone() });
            continue;
        }
        let slot = &mut comp[gm.0][sk.in_pos[fm.0]];
        if slot.is_some() {
            bad.push(Violation::DuplicateComposite { g: g.clone(), f: f.clone() });
        } else {
            *slot = Some(gfm);
        }
    }
    for (g, row) in comp.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            if entry.is_none() {
                let f = sk.incoming[arrows[g].dom.0][k];
                bad.push(Violation::MissingComposite { g: arrows[g].name.clone(), f: arrows[f.0].name.clone() });
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }
    let identity: Vec<Mor> = identity.into_iter().map(|m| m.expect("checked above")).collect();
    let comp = comp.into_iter().map(|row| row.into_iter().map(|m| m.expect("checked above")).collect()).collect();
    let cat = FinCat::assemble(raw.objects.clone(), arrows, identity, sk, comp);
    let laws = cat.law_violations();
    if laws.is_empty() {
        Ok(cat)
    } else {
        Err(laws)
    }
}

/// A functor or, when identities are not preserved, a semifunctor.
#[derive(Clone, Debug)]
pub struct Functor {
    source: Cat,
    target: Cat,
    objects: Vec<Obj>,
    morphisms: Vec<Mor>,
}

pub type Semifunctor = Functor;

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for Functor {}

impl Functor {
    /// A functor: typed, preserves composition and identities.
    pub fn new(source: &Cat, target: &Cat, objects: Vec<Obj>, morphisms: Vec<Mor>) -> Result<Functor> {
        let f = Functor::semi(source, target, objects, morphisms)?;
        if let Some(x) = source.objects().find(|&x| f.mor(source.id(x)) != target.id(f.ob(x))) {
            return Err(Error::NotFunctor(format!("identity of {} is not preserved", source.object_name(x))));
        }
        Ok(f)
    }

    /// A semifunctor: typed and preserves composition.
    pub fn semi(source: &Cat, target: &Cat, objects: Vec<Obj>, morphisms: Vec<Mor>) -> Result<Functor> {
        if objects.len() != source.num_objects() || morphisms.len() != source.num_morphisms() {
            return Err(Error::NotFunctor("map sizes do not match the source".into()));
        }
        if objects.iter().any(|x| x.0 >= target.num_objects())
            || morphisms.iter().any(|m| m.0 >= target.num_morphisms())
        {
            return Err(Error::NotFunctor("image outside the target".into()));
        }
        let f = Functor { source: source.clone(), target: target.clone(), objects, morphisms };
        for m in source.morphisms() {
            let fm = f.mor(m);
            if target.dom(fm) != f.ob(source.dom(m)) || target.cod(fm) != f.ob(source.cod(m)) {
                return Err(Error::NotFunctor(format!("{} is sent to a mistyped morphism", source.name_of(m))));
            }
        }
        for (g, h, gh) in source.composition_table() {
            if target.compose(f.mor(g), f.mor(h)) != f.mor(gh) {
                return Err(Error::NotFunctor(format!(
                    "composite {} o {} is not preserved",
                    source.name_of(g),
                    source.name_of(h)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(c: &Cat) -> Functor {
        Functor {
            source: c.clone(),
            target: c.clone(),
            objects: c.objects().collect(),
            morphisms: c.morphisms().collect(),
        }
    }

    pub fn source(&self) -> &Cat {
        &self.source
    }

    pub fn target(&self) -> &Cat {
        &self.target
    }

    pub fn ob(&self, x: Obj) -> Obj {
        self.objects[x.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.morphisms[f.0]
    }

    pub fn object_map(&self) -> &[Obj] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[Mor] {
        &self.morphisms
    }

    pub fn preserves_identities(&self) -> bool {
        self.source.objects().all(|x| self.mor(self.source.id(x)) == self.target.id(self.ob(x)))
    }

    /// `next o self`.
    pub fn then(&self, next: &Functor) -> Result<Functor> {
        compose_functors(next, self)
    }

    /// The same maps read between opposite categories.
    pub fn opposite(&self) -> Functor {
        self.opposite_between(&Arc::new(self.source.opposite()), &Arc::new(self.target.opposite()))
    }

    /// As `opposite`, reusing already built opposite categories.
    pub fn opposite_between(&self, source_op: &Cat, target_op: &Cat) -> Functor {
        Functor {
            source: source_op.clone(),
            target: target_op.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        }
    }

    /// Reinterprets the maps between table-equal copies of the boundary categories.
    pub fn rebase(&self, source: &Cat, target: &Cat) -> Result<Functor> {
        if !same_cat(source, &self.source) || !same_cat(target, &self.target) {
            return Err(Error::BoundaryMismatch("rebase onto different categories".into()));
        }
        Ok(Functor {
            source: source.clone(),
            target: target.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
        })
    }
}

/// `g o f`; composing with a semifunctor gives a semifunctor.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_cat(&f.target, &g.source) {
        return Err(Error::BoundaryMismatch("composing functors with unequal middle categories".into()));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        objects: f.objects.iter().map(|&x| g.ob(x)).collect(),
        morphisms: f.morphisms.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// An object-indexed family of morphisms between two parallel (semi)functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    from: Functor,
    to: Functor,
    components: Vec<Mor>,
}

impl NatTrans {
    /// Checks typing and naturality.
    pub fn new(from: &Functor, to: &Functor, components: Vec<Mor>) -> Result<NatTrans> {
        if !same_cat(&from.source, &to.source) || !same_cat(&from.target, &to.target) {
            return Err(Error::BoundaryMismatch("transformation between non-parallel functors".into()));
        }
        let c = &from.source;
        let d = &from.target;
        if components.len() != c.num_objects() {
            return Err(Error::NotNatural("wrong number of components".into()));
        }
        for x in c.objects() {
            let a = components[x.0];
            if a.0 >= d.num_morphisms() || d.dom(a) != from.ob(x) || d.cod(a) != to.ob(x) {
                return Err(Error::NotNatural(format!("component at {} is mistyped", c.object_name(x))));
            }
        }
        for f in c.morphisms() {
            let (x, y) = (c.dom(f), c.cod(f));
            if d.compose(components[y.0], from.mor(f)) != d.compose(to.mor(f), components[x.0]) {
                return Err(Error::NotNatural(format!("square at {} fails", c.name_of(f))));
            }
        }
        Ok(NatTrans { from: from.clone(), to: to.clone(), components })
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let d = &f.target;
        NatTrans { from: f.clone(), to: f.clone(), components: f.source.objects().map(|x| d.id(f.ob(x))).collect() }
    }

    /// `F Id`: the family F(Id_X), which is the identity exactly when F is a functor.
    pub fn functor_identity(f: &Functor) -> NatTrans {
        NatTrans {
            from: f.clone(),
            to: f.clone(),
            components: f.source.objects().map(|x| f.mor(f.source.id(x))).collect(),
        }
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn at(&self, x: Obj) -> Mor {
        self.components[x.0]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    /// alpha_X o F(Id_X) = alpha_X at every X.
    pub fn is_seminatural(&self) -> bool {
        let c = &self.from.source;
        let d = &self.from.target;
        c.objects().all(|x| d.compose(self.at(x), self.from.mor(c.id(x))) == self.at(x))
    }

    pub fn is_identity(&self) -> bool {
        let d = &self.from.target;
        self.from == self.to && self.from.source.objects().all(|x| d.is_identity(self.at(x)))
    }

    pub fn inverse(&self) -> Option<NatTrans> {
        let d = &self.from.target;
        let comps = self.from.source.objects().map(|x| d.inverse(self.at(x))).collect::<Option<Vec<_>>>()?;
        Some(NatTrans { from: self.to.clone(), to: self.from.clone(), components: comps })
    }

    /// `beta o self`.
    pub fn then(&self, beta: &NatTrans) -> Result<NatTrans> {
        nat_vertical(beta, self)
    }

    /// `self F`: components alpha_{F X}.
    pub fn at_functor(&self, f: &Functor) -> Result<NatTrans> {
        Ok(NatTrans {
            from: compose_functors(&self.from, f)?,
            to: compose_functors(&self.to, f)?,
            components: f.source.objects().map(|x| self.at(f.ob(x))).collect(),
        })
    }

    /// `F self`: components F(alpha_X).
    pub fn under(&self, f: &Functor) -> Result<NatTrans> {
        Ok(NatTrans {
            from: compose_functors(f, &self.from)?,
            to: compose_functors(f, &self.to)?,
            components: self.components.iter().map(|&a| f.mor(a)).collect(),
        })
    }

    pub fn opposite(&self) -> NatTrans {
        let c = Arc::new(self.from.source.opposite());
        let d = Arc::new(self.from.target.opposite());
        self.opposite_between(&c, &d)
    }

    /// The same components read as a transformation `to^op -> from^op`.
    pub fn opposite_between(&self, source_op: &Cat, target_op: &Cat) -> NatTrans {
        NatTrans {
            from: self.to.opposite_between(source_op, target_op),
            to: self.from.opposite_between(source_op, target_op),
            components: self.components.clone(),
        }
    }

    /// Same components between other (table-equal or otherwise) functors, rechecked.
    pub fn retarget(&self, from: &Functor, to: &Functor) -> Result<NatTrans> {
        NatTrans::new(from, to, self.components.clone())
    }
}

/// `beta o alpha`.
pub fn nat_vertical(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    if alpha.to != beta.from {
        return Err(Error::BoundaryMismatch("vertical composite of non-adjacent transformations".into()));
    }
    let d = &alpha.from.target;
    Ok(NatTrans {
        from: alpha.from.clone(),
        to: beta.to.clone(),
        components: alpha.from.source.objects().map(|x| d.compose(beta.at(x), alpha.at(x))).collect(),
    })
}

/// `F alpha`.
pub fn nat_whisker_left(f: &Functor, alpha: &NatTrans) -> Result<NatTrans> {
    alpha.under(f)
}

/// `alpha F`.
pub fn nat_whisker_right(alpha: &NatTrans, f: &Functor) -> Result<NatTrans> {
    alpha.at_functor(f)
}

/// An idempotent natural endotransformation of an identity functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentNat(NatTrans);

impl IdempotentNat {
    pub fn new(c: &Cat, components: Vec<Mor>) -> Result<IdempotentNat> {
        let id = Functor::identity(c);
        let nat = NatTrans::new(&id, &id, components)?;
        if let Some(x) = c.objects().find(|&x| !c.is_idempotent(nat.at(x))) {
            return Err(Error::NotIdempotent(format!("component at {}", c.object_name(x))));
        }
        Ok(IdempotentNat(nat))
    }

    pub fn identity(c: &Cat) -> IdempotentNat {
        IdempotentNat(NatTrans::identity(&Functor::identity(c)))
    }

    pub fn category(&self) -> &Cat {
        self.0.from().source()
    }

    pub fn at(&self, x: Obj) -> Mor {
        self.0.at(x)
    }

    pub fn components(&self) -> &[Mor] {
        self.0.components()
    }

    pub fn nat(&self) -> &NatTrans {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// All idempotent natural endotransformations of Id_C, in canonical order.
    pub fn enumerate(c: &Cat, budget: &mut crate::limits::Budget) -> Result<Vec<IdempotentNat>> {
        let id = Functor::identity(c);
        let candidates: Vec<Vec<Mor>> = c.objects().map(|x| c.idempotents(x).collect()).collect();
        let found = crate::search::families(&candidates, usize::MAX, budget, |a, i| natural_at(&id, &id, a, Obj(i)))?;
        found.into_iter().map(|comps| IdempotentNat::new(c, comps)).collect()
    }
}

/// Morphisms X -> Y of `c`, or an error naming the unknown object.
pub fn hom_set(c: &FinCat, x: &str, y: &str) -> Result<Vec<Mor>> {
    let xo = c.object_named(x).ok_or_else(|| Error::UnknownObject(x.into()))?;
    let yo = c.object_named(y).ok_or_else(|| Error::UnknownObject(y.into()))?;
    Ok(c.hom(xo, yo).to_vec())
}

/// Checks all naturality squares touching `x` whose other end is already assigned.
pub(crate) fn natural_at(from: &Functor, to: &Functor, assign: &[Option<Mor>], x: Obj) -> bool {
    let c = &from.source;
    let d = &from.target;
    let Some(ax) = assign[x.0] else { return true };
    for &f in c.outgoing(x) {
        if let Some(ay) = assign[c.cod(f).0] {
            if d.compose(ay, from.mor(f)) != d.compose(to.mor(f), ax) {
                return false;
            }
        }
    }
    for &f in c.incoming(x) {
        if let Some(aw) = assign[c.dom(f).0] {
            if d.compose(ax, from.mor(f)) != d.compose(to.mor(f), aw) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw_e(ee: &str) -> RawCategory {
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
        let e = validate_category(&raw_e("e")).unwrap();
        assert_eq!(e.num_objects(), 1);
        assert_eq!(e.num_morphisms(), 2);
        assert_eq!(e.hom(Obj(0), Obj(0)), &[Mor(0), Mor(1)]);
        assert!(e.is_idempotent(Mor(1)));
        assert!(!e.is_iso(Mor(1)));
    }

    #[test]
    fn e_squared_identity_is_the_cyclic_group() {
        let z2 = validate_category(&raw_e("id")).unwrap();
        assert_eq!(z2.inverse(Mor(1)), Some(Mor(1)));
    }

    #[test]
    fn all_violations_are_reported() {
        let mut raw = raw_e("e");
        raw.composition.pop();
        raw.identities.clear();
        let errs = validate_category(&raw).unwrap_err();
        assert!(errs.iter().any(|v| matches!(v, Violation::BadIdentity { .. })));
        let mut raw = raw_e("e");
        raw.composition.pop();
        let errs = validate_category(&raw).unwrap_err();
        assert_eq!(errs, vec![Violation::MissingComposite { g: "e".into(), f: "e".into() }]);
        let mut raw = raw_e("e");
        raw.morphisms.push(("k".into(), "*".into(), "nowhere".into()));
        let errs = validate_category(&raw).unwrap_err();
        assert!(matches!(errs[0], Violation::DanglingReference(_)));
    }

    #[test]
    fn non_associative_table_is_caught() {
        // three endomorphisms where a o a = b and b o a = a but a o b = id
        let names = ["id", "a", "b"];
        let table = [[0, 1, 2], [1, 2, 0], [2, 1, 1]];
        let raw = RawCategory {
            objects: vec!["*".into()],
            morphisms: names.iter().map(|n| (n.to_string(), "*".into(), "*".into())).collect(),
            identities: vec![("*".into(), "id".into())],
            composition: (0..3)
                .flat_map(|g| (0..3).map(move |f| [names[g].into(), names[f].into(), names[table[g][f]].into()]))
                .collect(),
        };
        let errs = validate_category(&raw).unwrap_err();
        assert!(errs.iter().any(|v| matches!(v, Violation::NonAssociative { .. })));
    }

    #[test]
    fn opposite_is_an_involution() {
        let e = validate_category(&raw_e("e")).unwrap();
        assert_eq!(e.opposite(), e);
        assert_eq!(e.opposite().opposite(), e);
    }

    #[test]
    fn hom_set_by_name() {
        let e = validate_category(&raw_e("e")).unwrap();
        assert_eq!(hom_set(&e, "*", "*").unwrap(), vec![Mor(0), Mor(1)]);
        assert!(matches!(hom_set(&e, "*", "?"), Err(Error::UnknownObject(_))));
    }

    #[test]
    fn functor_laws_are_checked() {
        let e: Cat = Arc::new(validate_category(&raw_e("e")).unwrap());
        assert!(Functor::new(&e, &e, vec![Obj(0)], vec![Mor(1), Mor(1)]).is_err());
        let semi = Functor::semi(&e, &e, vec![Obj(0)], vec![Mor(1), Mor(1)]).unwrap();
        assert!(!semi.preserves_identities());
        let id = Functor::identity(&e);
        assert_eq!(compose_functors(&id, &semi).unwrap(), semi);
        let unit = NatTrans::identity(&id);
        assert!(unit.is_identity());
        assert_eq!(unit.under(&id).unwrap(), unit);
        let fid = NatTrans::functor_identity(&semi);
        assert_eq!(fid.components(), &[Mor(1)]);
        assert!(NatTrans::new(&id, &id, vec![Mor(1)]).is_ok());
    }
}
