//! The named test corpus: small categories, functors between them, idempotent
//! natural transformations and adjunctions, each addressable by name.

use crate::adjoint::{bireflection_data, find_left_adjoint, find_right_adjoint, Adjunction};
use crate::category::{Cat, Functor, IdempotentNat};
use crate::coident::coidentifier;
use crate::completion::{complete_adjunction, complete_nat, Karoubi};
use crate::error::{Error, Result};
use crate::limits::Budget;

use super::rings::{
    central_idempotent_nat, induction_functor, restriction_functor, ModuleCat, ModuleCatSpec, RingMorphism, RingTable,
};
use super::{
    cyclic_group, discrete, functors_between, monoid_cat, pick_object, poset_cat, product_cat, terminal, to_terminal,
    walking_arrow, walking_idempotent, walking_split_idempotent,
};

pub const MAX_SUITE_OBJECTS: usize = 6;
pub const MAX_SUITE_MORPHISMS: usize = 64;

/// Something with a stable name.
#[derive(Clone, Debug)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

fn named<T>(name: impl Into<String>, value: T) -> Named<T> {
    Named { name: name.into(), value }
}

/// `{1, a, b}` with `xy = x` for `x ≠ 1`: two idempotents that do not commute.
pub fn left_zero_monoid() -> Cat {
    monoid_cat(&["id", "a", "b"], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).expect("left zero monoid")
}

/// `{1, n, 0}` with `n² = 0`.
pub fn nilpotent_monoid() -> Cat {
    monoid_cat(&["id", "n", "0"], &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]).expect("nilpotent monoid")
}

pub fn module_cat(ring: RingTable, max_rank: usize) -> ModuleCat {
    ModuleCat::new(&ModuleCatSpec { ring, max_rank }).expect("small module category")
}

/// The base categories of the corpus, before completion.
pub fn base_categories() -> Vec<Named<Cat>> {
    let one = terminal();
    let e = walking_idempotent();
    let two = walking_arrow();
    vec![
        named("terminal", one.clone()),
        named("walking_idempotent", e.clone()),
        named("walking_arrow", two.clone()),
        named("walking_split_idempotent", walking_split_idempotent()),
        named("cyclic_group_2", cyclic_group(2)),
        named("cyclic_group_3", cyclic_group(3)),
        named("left_zero_monoid", left_zero_monoid()),
        named("nilpotent_monoid", nilpotent_monoid()),
        named("chain_3", poset_cat(&["0", "1", "2"], &[(0, 1), (1, 2)]).expect("chain")),
        named("cospan", poset_cat(&["a", "b", "c"], &[(0, 2), (1, 2)]).expect("cospan")),
        named("discrete_2", discrete(2)),
        named("idempotent_squared", product_cat(&e, &e).expect("product")),
        named("arrow_times_idempotent", product_cat(&two, &e).expect("product")),
        named("free_module_F2_1", module_cat(RingTable::f2(), 1).category().clone()),
        named("free_module_F2_2", module_cat(RingTable::f2(), 2).category().clone()),
        named("free_module_F2xF2_1", module_cat(RingTable::f2xf2(), 1).category().clone()),
        named("free_module_F2[x]/(x^2)_1", module_cat(RingTable::dual_numbers_f2(), 1).category().clone()),
        named("free_module_F4_1", module_cat(RingTable::f4(), 1).category().clone()),
    ]
}

/// Every base category and every envelope within the suite bounds.
pub fn categories() -> Vec<Named<Cat>> {
    let mut out = base_categories();
    let envelopes: Vec<Named<Cat>> = out
        .iter()
        .filter_map(|c| {
            let k = Karoubi::new(&c.value).ok()?;
            Some(named(format!("karoubi({})", c.name), k.category().clone()))
        })
        .collect();
    out.extend(envelopes);
    out.retain(|c| in_bounds(&c.value));
    out
}

pub fn in_bounds(c: &Cat) -> bool {
    c.num_objects() <= MAX_SUITE_OBJECTS && c.num_morphisms() <= MAX_SUITE_MORPHISMS
}

/// `G: E → 𝟙`.
pub fn g_e_to_one() -> Functor {
    to_terminal(&walking_idempotent(), &terminal()).expect("E -> 1")
}

/// `F ⊣ G` with `G` the functor from the split idempotent to `𝟙` and `F` picking `Y`.
pub fn one_e() -> Adjunction {
    let g = to_terminal(&walking_split_idempotent(), &terminal()).expect("functor to 1");
    find_left_adjoint(&g).expect("search").found().expect("left adjoint")
}

/// The central idempotent `(1,0)` on the rank ≤ 1 free modules over `F2 × F2`.
pub fn projection_idempotent() -> Result<IdempotentNat> {
    let mc = module_cat(RingTable::f2xf2(), 1);
    let z = mc.ring().element("(1,0)").expect("element");
    central_idempotent_nat(&mc, z)
}

/// The same idempotent, completed to the envelope where it splits.
pub fn completed_projection_idempotent() -> Result<IdempotentNat> {
    let e = projection_idempotent()?;
    let k = Karoubi::new(e.category())?;
    let done = complete_nat(e.nat(), &k, &k)?;
    IdempotentNat::new(k.category(), done.components().to_vec())
}

/// `L ⊣ H` for the quotient by the completed projection idempotent.
pub fn ring_bireflection() -> Result<Vec<Named<Adjunction>>> {
    let e = completed_projection_idempotent()?;
    let q = coidentifier(&e)?;
    let b = bireflection_data(q.functor())?
        .ok_or_else(|| Error::Internal("quotient of a complete category is not a bireflection".into()))?;
    Ok(vec![named("ring_quotient_left", b.left), named("ring_quotient_right", b.right)])
}

/// Ring maps used by the module examples, each with a left basis of the target.
pub fn ring_triples() -> Vec<Named<(RingMorphism, Vec<usize>)>> {
    let f2xf2 = RingTable::f2xf2();
    let diag = RingMorphism::diagonal(&RingTable::f2());
    let basis = vec![f2xf2.element("(1,0)").expect("e1"), f2xf2.element("(0,1)").expect("e2")];
    let dual = RingTable::dual_numbers_f2();
    let f4 = RingTable::f4();
    vec![
        named("F2->F2", (RingMorphism::identity(&RingTable::f2()), vec![1])),
        named("F2->F2xF2", (diag, basis)),
        named(
            "F2->F2[x]/(x^2)",
            (RingMorphism::from_f2(&dual).expect("char 2"), vec![dual.one, dual.element("x").expect("x")]),
        ),
        named("F2->F4", (RingMorphism::from_f2(&f4).expect("char 2"), vec![f4.one, f4.element("a").expect("a")])),
    ]
}

/// Hand-picked functors plus enumerations between the smallest categories.
pub fn functors() -> Result<Vec<Named<Functor>>> {
    let one = terminal();
    let e = walking_idempotent();
    let two = walking_arrow();
    let split = walking_split_idempotent();
    let mut out = Vec::new();
    for c in base_categories().into_iter().filter(|c| c.value.num_morphisms() <= 8) {
        out.push(named(format!("id({})", c.name), Functor::identity(&c.value)));
        out.push(named(format!("{}->terminal", c.name), to_terminal(&c.value, &one)?));
        for x in c.value.objects() {
            out.push(named(
                format!("terminal->{}:{}", c.name, c.value.object_name(x)),
                pick_object(&one, &c.value, x)?,
            ));
        }
    }
    let mut budget = Budget::new(1_000_000);
    for (a, b) in [("walking_idempotent", &e), ("walking_arrow", &two), ("cyclic_group_2", &cyclic_group(2))] {
        for (c, d) in [("walking_idempotent", &e), ("walking_split_idempotent", &split)] {
            for (i, f) in functors_between(b, d, 64, &mut budget)?.into_iter().enumerate() {
                out.push(named(format!("{a}->{c}#{i}"), f));
            }
        }
    }
    for (i, f) in functors_between(&left_zero_monoid(), &left_zero_monoid(), 64, &mut budget)?.into_iter().enumerate() {
        out.push(named(format!("left_zero_monoid->left_zero_monoid#{i}"), f));
    }
    let ke = Karoubi::new(&e)?;
    out.push(named("iota(walking_idempotent)", ke.iota().clone()));
    let kp = Karoubi::new(&product_cat(&e, &e)?)?;
    out.push(named("iota(idempotent_squared)", kp.iota().clone()));
    for ie in IdempotentNat::enumerate(&product_cat(&e, &e)?, &mut budget)? {
        if !ie.is_identity() {
            let q = coidentifier(&ie)?;
            out.push(named(format!("quotient(idempotent_squared,{})", describe(&ie)), q.functor().clone()));
        }
    }
    let pe = projection_idempotent()?;
    out.push(named("quotient(free_module_F2xF2_1,(1,0))", coidentifier(&pe)?.functor().clone()));
    for t in ring_triples() {
        let (phi, basis) = &t.value;
        out.push(named(format!("induction({},1)", t.name), induction_functor(phi, 1)?.functor));
        out.push(named(format!("restriction({},1)", t.name), restriction_functor(phi, basis, 1)?.functor));
    }
    out.retain(|f| in_bounds(f.value.source()) && in_bounds(f.value.target()));
    Ok(out)
}

fn describe(e: &IdempotentNat) -> String {
    let c = e.category();
    e.components().iter().map(|&m| c.name_of(m)).collect::<Vec<_>>().join(",")
}

/// Every idempotent natural transformation of the identity on each suite category.
pub fn idempotents() -> Result<Vec<Named<IdempotentNat>>> {
    let mut out = Vec::new();
    let mut budget = Budget::new(1_000_000);
    for c in categories() {
        for e in IdempotentNat::enumerate(&c.value, &mut budget)? {
            out.push(named(format!("{}[{}]", c.name, describe(&e)), e));
        }
    }
    Ok(out)
}

/// Identity adjunctions, the split adjunction, adjunctions found by search on
/// suite functors, completions, and the ring quotient bireflection.
pub fn adjunctions() -> Result<Vec<Named<Adjunction>>> {
    let mut out = Vec::new();
    for c in base_categories().into_iter().filter(|c| c.value.num_morphisms() <= 8) {
        out.push(named(format!("identity({})", c.name), Adjunction::identity(&c.value)));
    }
    let a = one_e();
    let k_lower = Karoubi::new(a.lower())?;
    let k_upper = Karoubi::new(a.upper())?;
    out.push(named("one_E", a.clone()));
    out.push(named("completed(one_E)", complete_adjunction(&a, &k_lower, &k_upper)?));
    for f in functors()? {
        if f.value.source().num_morphisms() > 8 || f.value.target().num_morphisms() > 8 {
            continue;
        }
        if let Some(adj) = find_left_adjoint(&f.value)?.found() {
            out.push(named(format!("left_adjoint_of({})", f.name), adj));
        }
        if let Some(adj) = find_right_adjoint(&f.value)?.found() {
            out.push(named(format!("right_adjoint_of({})", f.name), adj));
        }
    }
    out.extend(ring_bireflection()?);
    Ok(out)
}

/// Anything the command line can emit.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum GalleryItem {
    Category(Cat),
    Functor(Functor),
    Idempotent(IdempotentNat),
    Adjunction(Adjunction),
    Ring(RingTable),
}

pub const ITEM_NAMES: &[&str] = &[
    "terminal",
    "walking_idempotent",
    "walking_arrow",
    "walking_split_idempotent",
    "cyclic_group <n>",
    "discrete <n>",
    "left_zero_monoid",
    "nilpotent_monoid",
    "karoubi <category>",
    "ring <F2|F4|F2xF2|F2[x]/(x^2)|Z/n|zero>",
    "free_module <ring> <rank>",
    "central_idempotent <ring> <rank> <element>",
    "induction <triple> <rank>",
    "restriction <triple> <rank>",
    "g_E_to_1",
    "one_E",
    "suite_category <name>",
    "suite_functor <name>",
    "suite_adjunction <name>",
];

fn param<'a>(params: &'a [String], i: usize, what: &str) -> Result<&'a str> {
    params.get(i).map(String::as_str).ok_or_else(|| Error::Parse(format!("missing parameter <{what}>")))
}

fn number(params: &[String], i: usize, what: &str) -> Result<usize> {
    let s = param(params, i, what)?;
    s.parse().map_err(|_| Error::Parse(format!("<{what}> must be a natural number, got {s}")))
}

pub fn ring_named(name: &str) -> Result<RingTable> {
    match name {
        "F2" => Ok(RingTable::f2()),
        "F4" => Ok(RingTable::f4()),
        "F2xF2" => Ok(RingTable::f2xf2()),
        "F2[x]/(x^2)" => Ok(RingTable::dual_numbers_f2()),
        "zero" => Ok(RingTable::zero_ring()),
        other => match other.strip_prefix("Z/") {
            Some(n) => RingTable::integers_mod(n.parse().map_err(|_| Error::Parse(format!("bad modulus {n}")))?),
            None => Err(Error::Parse(format!("unknown ring {other}"))),
        },
    }
}

fn triple(name: &str) -> Result<(RingMorphism, Vec<usize>)> {
    ring_triples()
        .into_iter()
        .find(|t| t.name == name)
        .map(|t| t.value)
        .ok_or_else(|| Error::Parse(format!("unknown ring map {name}")))
}

fn lookup<T: Clone>(items: Vec<Named<T>>, name: &str) -> Result<T> {
    items
        .into_iter()
        .find(|n| n.name == name)
        .map(|n| n.value)
        .ok_or_else(|| Error::Parse(format!("no suite item named {name}")))
}

/// Resolves a gallery name and its parameters.
pub fn item(name: &str, params: &[String]) -> Result<GalleryItem> {
    use GalleryItem as G;
    Ok(match name {
        "terminal" => G::Category(terminal()),
        "walking_idempotent" => G::Category(walking_idempotent()),
        "walking_arrow" => G::Category(walking_arrow()),
        "walking_split_idempotent" => G::Category(walking_split_idempotent()),
        "cyclic_group" => G::Category(cyclic_group(number(params, 0, "n")?.max(1))),
        "discrete" => G::Category(discrete(number(params, 0, "n")?)),
        "left_zero_monoid" => G::Category(left_zero_monoid()),
        "nilpotent_monoid" => G::Category(nilpotent_monoid()),
        "karoubi" => {
            let rest = params.get(1..).unwrap_or(&[]);
            match item(param(params, 0, "category")?, rest)? {
                G::Category(c) => G::Category(Karoubi::new(&c)?.category().clone()),
                _ => return Err(Error::Parse("karoubi needs a category".into())),
            }
        }
        "ring" => G::Ring(ring_named(param(params, 0, "ring")?)?),
        "free_module" => {
            let ring = ring_named(param(params, 0, "ring")?)?;
            G::Category(
                ModuleCat::new(&ModuleCatSpec { ring, max_rank: number(params, 1, "rank")? })?.category().clone(),
            )
        }
        "central_idempotent" => {
            let ring = ring_named(param(params, 0, "ring")?)?;
            let mc = ModuleCat::new(&ModuleCatSpec { ring, max_rank: number(params, 1, "rank")? })?;
            let z = param(params, 2, "element")?;
            let z = mc.ring().element(z).ok_or_else(|| Error::Parse(format!("no element {z}")))?;
            G::Idempotent(central_idempotent_nat(&mc, z)?)
        }
        "induction" => {
            let (phi, _) = triple(param(params, 0, "triple")?)?;
            G::Functor(induction_functor(&phi, number(params, 1, "rank")?)?.functor)
        }
        "restriction" => {
            let (phi, basis) = triple(param(params, 0, "triple")?)?;
            G::Functor(restriction_functor(&phi, &basis, number(params, 1, "rank")?)?.functor)
        }
        "g_E_to_1" => G::Functor(g_e_to_one()),
        "one_E" => G::Adjunction(one_e()),
        "suite_category" => G::Category(lookup(categories(), param(params, 0, "name")?)?),
        "suite_functor" => G::Functor(lookup(functors()?, param(params, 0, "name")?)?),
        "suite_adjunction" => G::Adjunction(lookup(adjunctions()?, param(params, 0, "name")?)?),
        other => return Err(Error::Parse(format!("unknown gallery item {other}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Obj;
    use crate::classify::{is_semiseparable, is_separable};

    #[test]
    fn suite_is_within_bounds() {
        let cats = categories();
        assert!(cats.len() >= 20);
        assert!(cats.iter().all(|c| in_bounds(&c.value)));
        let mut names: Vec<&str> = cats.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cats.len());
    }

    #[test]
    fn one_e_shape() {
        let a = one_e();
        assert_eq!(a.left().ob(Obj(0)), Obj(1));
        assert!(is_semiseparable(a.right()).unwrap());
        assert!(!is_separable(a.right()).unwrap());
        let g = g_e_to_one();
        assert!(is_semiseparable(&g).unwrap() && !is_separable(&g).unwrap());
    }

    #[test]
    fn ring_quotient_is_a_bireflection() {
        let adj = ring_bireflection().unwrap();
        assert_eq!(adj.len(), 2);
        assert!(adj[0].value.right() == adj[1].value.left());
    }

    #[test]
    fn items_resolve() {
        for (name, params) in [
            ("walking_idempotent", vec![]),
            ("cyclic_group", vec!["3".to_string()]),
            ("free_module", vec!["F2".into(), "1".into()]),
            ("central_idempotent", vec!["F2xF2".into(), "1".into(), "(1,0)".into()]),
            ("induction", vec!["F2->F4".into(), "1".into()]),
            ("karoubi", vec!["walking_idempotent".into()]),
            ("one_E", vec![]),
        ] {
            item(name, &params).unwrap();
        }
        assert!(matches!(item("nope", &[]), Err(Error::Parse(_))));
        assert!(matches!(item("cyclic_group", &[]), Err(Error::Parse(_))));
    }
}
