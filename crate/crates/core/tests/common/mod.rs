//! Shared test helpers: a brute-force hom-retraction oracle and instance generators.
#![allow(dead_code)]

use fincat::category::{Cat, Functor, Mor, Obj};
use fincat::classify::Mode;
use fincat::gallery::functors_between;
use fincat::gallery::suite;
use fincat::limits::Budget;

/// One slot `P_{X,Y}(h)` of a hom retraction, in canonical order.
#[derive(Clone, Copy, Debug)]
pub struct Slot {
    pub x: Obj,
    pub y: Obj,
    pub h: Mor,
}

pub fn slots(f: &Functor) -> Vec<Slot> {
    let c = f.source();
    let d = f.target();
    let mut out = Vec::new();
    for x in c.objects() {
        for y in c.objects() {
            for &h in d.hom(f.ob(x), f.ob(y)) {
                out.push(Slot { x, y, h });
            }
        }
    }
    out
}

/// Number of unconstrained candidate families, saturating.
pub fn raw_candidates(f: &Functor) -> u128 {
    let c = f.source();
    slots(f).iter().fold(1u128, |acc, s| acc.saturating_mul(c.hom(s.x, s.y).len() as u128))
}

fn admissible(f: &Functor, slots: &[Slot], index: &dyn Fn(Obj, Obj, Mor) -> usize, values: &[Mor], mode: Mode) -> bool {
    let c = f.source();
    let d = f.target();
    for (k, s) in slots.iter().enumerate() {
        let v = values[k];
        match mode {
            Mode::Natfull if f.mor(v) != s.h => return false,
            _ => {}
        }
        for &a in c.incoming(s.x) {
            for &b in c.outgoing(s.y) {
                let h2 = d.compose(d.compose(f.mor(b), s.h), f.mor(a));
                let lhs = values[index(c.dom(a), c.cod(b), h2)];
                if lhs != c.compose(c.compose(b, v), a) {
                    return false;
                }
            }
        }
    }
    for m in c.morphisms() {
        let p = values[index(c.dom(m), c.cod(m), f.mor(m))];
        let ok = match mode {
            Mode::Sep => p == m,
            Mode::Semisep => f.mor(p) == f.mor(m),
            Mode::Natfull => true,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Every admissible family in lexicographic order of the value indices, first
/// slot most significant. `None` when the raw count exceeds `cap`.
pub fn brute_force(f: &Functor, mode: Mode, cap: u128, limit: usize) -> Option<Vec<Vec<Mor>>> {
    if raw_candidates(f) > cap {
        return None;
    }
    let c = f.source().clone();
    let d = f.target().clone();
    let slots = slots(f);
    let n = c.num_objects();
    let mut offsets = vec![0; n * n + 1];
    let mut acc = 0;
    for x in c.objects() {
        for y in c.objects() {
            offsets[x.0 * n + y.0] = acc;
            acc += d.hom(f.ob(x), f.ob(y)).len();
        }
    }
    let index = |x: Obj, y: Obj, h: Mor| offsets[x.0 * n + y.0] + d.hom_index(h);
    let domains: Vec<&[Mor]> = slots.iter().map(|s| c.hom(s.x, s.y)).collect();
    let mut out = Vec::new();
    if domains.iter().any(|dm| dm.is_empty()) {
        return Some(out);
    }
    let mut digits = vec![0usize; slots.len()];
    loop {
        let values: Vec<Mor> = digits.iter().zip(&domains).map(|(&i, dm)| dm[i]).collect();
        if admissible(f, &slots, &index, &values, mode) {
            out.push(values);
            if out.len() >= limit {
                return Some(out);
            }
        }
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Some(out);
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

pub fn is_tiny(c: &Cat) -> bool {
    c.num_objects() <= 3 && c.objects().all(|x| c.objects().all(|y| c.hom(x, y).len() <= 3))
}

/// Every functor between tiny suite categories, capped per pair.
pub fn tiny_functors() -> Vec<(String, Functor)> {
    let cats: Vec<_> = suite::categories().into_iter().filter(|c| is_tiny(&c.value)).collect();
    let mut out = Vec::new();
    let mut budget = Budget::new(50_000_000);
    for c in &cats {
        for d in &cats {
            let fs = functors_between(&c.value, &d.value, 64, &mut budget).expect("functor enumeration");
            for (k, f) in fs.into_iter().enumerate() {
                out.push((format!("{}->{}#{k}", c.name, d.name), f));
            }
        }
    }
    out
}

/// Suite functors and tiny functors, the instances for whole-suite properties.
pub fn all_functors() -> Vec<(String, Functor)> {
    let mut out: Vec<(String, Functor)> =
        suite::functors().expect("suite functors").into_iter().map(|n| (n.name, n.value)).collect();
    out.extend(tiny_functors());
    out
}
