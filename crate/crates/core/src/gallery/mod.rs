//! Deterministic generators for small categories and functors.

pub mod rings;
pub mod suite;

use std::sync::Arc;

use crate::category::{Arrow, Cat, FinCat, Functor, Mor, Obj};
use crate::error::{Error, Result};
use crate::limits::Budget;
use crate::search;

pub use rings::{
    bimodule_retraction_search, central_idempotent_nat, free_module_cat, induction_functor, restriction_functor,
    separability_idempotent_search, Basis, BimoduleSearch, ModuleCat, ModuleCatSpec, ModuleFunctor, RingMorphism,
    RingTable,
};

fn arrow(name: impl Into<String>, dom: usize, cod: usize) -> Arrow {
    Arrow { name: name.into(), dom: Obj(dom), cod: Obj(cod) }
}

/// One object, one morphism.
pub fn terminal() -> Cat {
    monoid_cat(&["id"], &[vec![0]]).expect("terminal category")
}

/// One object with an idempotent `e` besides the identity.
pub fn walking_idempotent() -> Cat {
    monoid_cat(&["id", "e"], &[vec![0, 1], vec![1, 1]]).expect("walking idempotent")
}

/// Objects `0`, `1` and a single arrow `a: 0 -> 1`.
pub fn walking_arrow() -> Cat {
    poset_cat(&["0", "1"], &[(0, 1)]).expect("walking arrow")
}

/// Objects `X`, `Y` with `p: X -> Y`, `i: Y -> X`, `p o i = id_Y` and `e = i o p`.
pub fn walking_split_idempotent() -> Cat {
    let arrows = vec![arrow("idX", 0, 0), arrow("e", 0, 0), arrow("p", 0, 1), arrow("i", 1, 0), arrow("idY", 1, 1)];
    // indices: idX 0, e 1, p 2, i 3, idY 4
    let table = |g: Mor, f: Mor| -> Mor {
        match (g.0, f.0) {
            (0, f) | (4, f) => Mor(f),
            (g, 0) | (g, 4) => Mor(g),
            (1, 1) => Mor(1),
            (2, 1) => Mor(2),
            (1, 3) => Mor(3),
            (2, 3) => Mor(4),
            (3, 2) => Mor(1),
            _ => unreachable!("not composable"),
        }
    };
    Arc::new(
        FinCat::build(vec!["X".into(), "Y".into()], arrows, vec![Mor(0), Mor(4)], table)
            .expect("walking split idempotent"),
    )
}

/// The one-object category of a finite monoid. `table[g][f]` is the product `g f`
/// and element 0 must be the unit.
pub fn monoid_cat(names: &[&str], table: &[Vec<usize>]) -> Result<Cat> {
    let n = names.len();
    if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::Parse("monoid table has the wrong shape".into()));
    }
    let arrows = names.iter().map(|s| arrow(*s, 0, 0)).collect();
    Ok(Arc::new(FinCat::build(vec!["*".into()], arrows, vec![Mor(0)], |g, f| Mor(table[g.0][f.0]))?))
}

/// The cyclic group of order `n` as a one-object category.
pub fn cyclic_group(n: usize) -> Cat {
    let names: Vec<String> = (0..n).map(|k| if k == 0 { "id".into() } else { format!("g{k}") }).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    monoid_cat(&refs, &table).expect("cyclic group")
}

/// The preorder generated by `relation` (reflexive-transitive closure); one arrow
/// `x<=y` per related pair.
pub fn poset_cat(names: &[&str], relation: &[(usize, usize)]) -> Result<Cat> {
    let n = names.len();
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(x, y) in relation {
        if x >= n || y >= n {
            return Err(Error::Parse(format!("relation mentions element {}", x.max(y))));
        }
        leq[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        for y in 0..n {
            if leq[x][y] {
                index[x][y] = arrows.len();
                let name = if x == y { format!("id{}", names[x]) } else { format!("{}<={}", names[x], names[y]) };
                arrows.push(arrow(name, x, y));
            }
        }
    }
    let identity = (0..n).map(|x| Mor(index[x][x])).collect();
    let objects = names.iter().map(|s| s.to_string()).collect();
    let dom_cod: Vec<(usize, usize)> = arrows.iter().map(|a| (a.dom.0, a.cod.0)).collect();
    Ok(Arc::new(FinCat::build(objects, arrows, identity, |g, f| Mor(index[dom_cod[f.0].0][dom_cod[g.0].1]))?))
}

/// Objects `0..n` and identities only.
pub fn discrete(n: usize) -> Cat {
    let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    poset_cat(&refs, &[]).expect("discrete category")
}

/// The product category, objects and morphisms in lexicographic pair order.
pub fn product_cat(c: &Cat, d: &Cat) -> Result<Cat> {
    let (nc, nd) = (c.num_objects(), d.num_objects());
    let md = d.num_morphisms();
    let objects = c
        .objects()
        .flat_map(|x| d.objects().map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", c.object_name(x), d.object_name(y)))
        .collect();
    let arrows = c
        .morphisms()
        .flat_map(|f| d.morphisms().map(move |g| (f, g)))
        .map(|(f, g)| Arrow {
            name: format!("({},{})", c.name_of(f), d.name_of(g)),
            dom: Obj(c.dom(f).0 * nd + d.dom(g).0),
            cod: Obj(c.cod(f).0 * nd + d.cod(g).0),
        })
        .collect();
    let identity = (0..nc * nd).map(|k| Mor(c.id(Obj(k / nd)).0 * md + d.id(Obj(k % nd)).0)).collect();
    Ok(Arc::new(FinCat::build(objects, arrows, identity, |a, b| {
        let f = c.compose(Mor(a.0 / md), Mor(b.0 / md));
        let g = d.compose(Mor(a.0 % md), Mor(b.0 % md));
        Mor(f.0 * md + g.0)
    })?))
}

/// The unique functor into a one-object, one-morphism category.
pub fn to_terminal(c: &Cat, one: &Cat) -> Result<Functor> {
    if one.num_morphisms() != 1 {
        return Err(Error::PreconditionFailed("target is not terminal".into()));
    }
    Functor::new(c, one, vec![Obj(0); c.num_objects()], vec![Mor(0); c.num_morphisms()])
}

/// The functor from the terminal category picking an object.
pub fn pick_object(one: &Cat, c: &Cat, x: Obj) -> Result<Functor> {
    Functor::new(one, c, vec![x], vec![c.id(x)])
}

/// All functors `c -> d` in lexicographic order of their maps, objects first.
pub fn functors_between(c: &Cat, d: &Cat, limit: usize, budget: &mut Budget) -> Result<Vec<Functor>> {
    let mut out = Vec::new();
    let obj_maps = search::families(
        &c.objects().map(|_| d.objects().map(|y| Mor(y.0)).collect()).collect::<Vec<_>>(),
        usize::MAX,
        budget,
        |_, _| true,
    )?;
    for om in obj_maps {
        let om: Vec<Obj> = om.into_iter().map(|m| Obj(m.0)).collect();
        let candidates: Vec<Vec<Mor>> = c
            .morphisms()
            .map(|f| {
                let hom = d.hom(om[c.dom(f).0], om[c.cod(f).0]);
                if c.is_identity(f) {
                    vec![d.id(om[c.dom(f).0])]
                } else {
                    hom.to_vec()
                }
            })
            .collect();
        let maps = search::families(&candidates, limit - out.len(), budget, |a, i| {
            let fi = Mor(i);
            let img = a[i].expect("just assigned");
            // composites whose three entries are now known
            for &g in c.outgoing(c.cod(fi)) {
                if let Some(ig) = a[g.0] {
                    if let Some(igf) = a[c.compose(g, fi).0] {
                        if d.compose(ig, img) != igf {
                            return false;
                        }
                    }
                }
            }
            for &h in c.incoming(c.dom(fi)) {
                if let Some(ih) = a[h.0] {
                    if let Some(ifh) = a[c.compose(fi, h).0] {
                        if d.compose(img, ih) != ifh {
                            return false;
                        }
                    }
                }
            }
            for (g, f) in composites_with_result(c, fi) {
                if let (Some(ig), Some(iff)) = (a[g.0], a[f.0]) {
                    if d.compose(ig, iff) != img {
                        return false;
                    }
                }
            }
            true
        })?;
        for m in maps {
            out.push(Functor::new(c, d, om.clone(), m)?);
        }
        if out.len() >= limit {
            break;
        }
    }
    Ok(out)
}

fn composites_with_result(c: &FinCat, r: Mor) -> impl Iterator<Item = (Mor, Mor)> + '_ {
    let (x, y) = (c.dom(r), c.cod(r));
    c.objects().flat_map(move |m| {
        c.hom(x, m)
            .iter()
            .flat_map(move |&f| c.hom(m, y).iter().filter_map(move |&g| (c.compose(g, f) == r).then_some((g, f))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::compose_functors;

    #[test]
    fn elementary_sizes() {
        assert_eq!(walking_idempotent().num_morphisms(), 2);
        assert_eq!(terminal().num_morphisms(), 1);
        assert_eq!(walking_arrow().num_morphisms(), 3);
        assert_eq!(walking_split_idempotent().num_morphisms(), 5);
        let z2 = cyclic_group(2);
        assert!(z2.morphisms().all(|f| z2.is_iso(f)));
    }

    #[test]
    fn walking_arrow_opposite() {
        let two = walking_arrow();
        let op = two.opposite();
        assert_eq!(op.num_morphisms(), 3);
        assert_eq!(op.hom(Obj(1), Obj(0)).len(), 1);
        assert!(two.hom(Obj(1), Obj(0)).is_empty());
    }

    #[test]
    fn product_with_terminal() {
        let e = walking_idempotent();
        let p = product_cat(&terminal(), &e).unwrap();
        assert_eq!(p.num_objects(), 1);
        assert_eq!(p.num_morphisms(), 2);
        assert!(p.is_idempotent(Mor(1)));
    }

    #[test]
    fn e_to_one_and_back() {
        let e = walking_idempotent();
        let one = terminal();
        let g = to_terminal(&e, &one).unwrap();
        let f = pick_object(&one, &e, Obj(0)).unwrap();
        assert_eq!(compose_functors(&g, &f).unwrap(), Functor::identity(&one));
    }

    #[test]
    fn functor_enumeration() {
        let e = walking_idempotent();
        let mut b = Budget::new(10_000);
        // id -> id, e -> id or e
        assert_eq!(functors_between(&e, &e, 100, &mut b).unwrap().len(), 2);
        let two = walking_arrow();
        // functors 2 -> 2: (0,0), (0,1), (1,1)
        assert_eq!(functors_between(&two, &two, 100, &mut b).unwrap().len(), 3);
        let z2 = cyclic_group(2);
        assert_eq!(functors_between(&z2, &e, 100, &mut b).unwrap().len(), 1);
    }
}
