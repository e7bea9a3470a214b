//! Faithful, full, semiseparable, separable and naturally full functors, the
//! associated idempotent, and the Maschke-type reflection properties.

use std::time::Instant;

use serde::Serialize;

use crate::category::{Functor, IdempotentNat, Mor, Obj};
use crate::error::{Error, Result};
use crate::limits::Budget;

/// Which equation a hom retraction has to satisfy besides naturality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// F P F = F
    Semisep,
    /// P F = Id
    Sep,
    /// F P = Id
    Natfull,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Semisep, Mode::Sep, Mode::Natfull];
}

/// A family of maps `Hom(FX, FY) -> Hom(X, Y)`, stored flat in canonical order:
/// pairs `(X, Y)` lexicographically, then the target hom-set in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRetraction {
    functor: Functor,
    offsets: Vec<usize>,
    values: Vec<Mor>,
}

fn offsets(f: &Functor) -> Vec<usize> {
    let c = f.source();
    let d = f.target();
    let mut out = Vec::with_capacity(c.num_objects().pow(2) + 1);
    let mut acc = 0;
    for x in c.objects() {
        for y in c.objects() {
            out.push(acc);
            acc += d.hom(f.ob(x), f.ob(y)).len();
        }
    }
    out.push(acc);
    out
}

impl HomRetraction {
    /// Tabulates `p(X, Y, h)` and checks typing (not naturality).
    pub fn from_fn(f: &Functor, mut p: impl FnMut(Obj, Obj, Mor) -> Mor) -> Result<HomRetraction> {
        let c = f.source();
        let d = f.target();
        let mut values = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                for &h in d.hom(f.ob(x), f.ob(y)) {
                    let v = p(x, y, h);
                    if v.0 >= c.num_morphisms() || c.dom(v) != x || c.cod(v) != y {
                        return Err(Error::WitnessInvalid(format!(
                            "value at ({}, {}) is mistyped",
                            c.object_name(x),
                            c.object_name(y)
                        )));
                    }
                    values.push(v);
                }
            }
        }
        Ok(HomRetraction { functor: f.clone(), offsets: offsets(f), values })
    }

    fn from_values(f: &Functor, values: Vec<Mor>) -> HomRetraction {
        HomRetraction { functor: f.clone(), offsets: offsets(f), values }
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    /// P_{X,Y}(h) for h: FX -> FY.
    pub fn apply(&self, x: Obj, y: Obj, h: Mor) -> Mor {
        let n = self.functor.source().num_objects();
        self.values[self.offsets[x.0 * n + y.0] + self.functor.target().hom_index(h)]
    }

    /// All values in canonical variable order.
    pub fn values(&self) -> &[Mor] {
        &self.values
    }

    /// Two-variable naturality: P(Fb o h o Fa) = b o P(h) o a.
    pub fn check_natural(&self) -> Result<()> {
        let f = &self.functor;
        let c = f.source();
        let d = f.target();
        for x in c.objects() {
            for y in c.objects() {
                for &h in d.hom(f.ob(x), f.ob(y)) {
                    let p = self.apply(x, y, h);
                    for &a in c.incoming(x) {
                        for &b in c.outgoing(y) {
                            let h2 = d.compose3(f.mor(b), h, f.mor(a));
                            if self.apply(c.dom(a), c.cod(b), h2) != c.compose3(b, p, a) {
                                return Err(Error::WitnessInvalid(format!(
                                    "naturality fails at h = {}, a = {}, b = {}",
                                    d.name_of(h),
                                    c.name_of(a),
                                    c.name_of(b)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn satisfies(&self, mode: Mode) -> bool {
        let f = &self.functor;
        let c = f.source();
        let d = f.target();
        match mode {
            Mode::Sep => c.morphisms().all(|m| self.apply(c.dom(m), c.cod(m), f.mor(m)) == m),
            Mode::Semisep => c.morphisms().all(|m| f.mor(self.apply(c.dom(m), c.cod(m), f.mor(m))) == f.mor(m)),
            Mode::Natfull => c
                .objects()
                .all(|x| c.objects().all(|y| d.hom(f.ob(x), f.ob(y)).iter().all(|&h| f.mor(self.apply(x, y, h)) == h))),
        }
    }

    pub fn validate(&self, mode: Mode) -> Result<()> {
        self.check_natural()?;
        if self.satisfies(mode) {
            Ok(())
        } else {
            Err(Error::WitnessInvalid(format!("equation for {mode:?} fails")))
        }
    }

    /// P^{GF} := P^F o P^G, for `g` a retraction of G and `self` one of F.
    pub fn then(&self, g: &HomRetraction) -> Result<HomRetraction> {
        let f = &self.functor;
        let gf = crate::category::compose_functors(g.functor(), f)?;
        HomRetraction::from_fn(&gf, |x, y, h| self.apply(x, y, g.apply(f.ob(x), f.ob(y), h)))
    }

    /// The same values read as a retraction of another functor with the same hom-sets.
    pub fn transport(&self, to: &Functor, value: impl FnMut(Obj, Obj, Mor) -> Mor) -> Result<HomRetraction> {
        HomRetraction::from_fn(to, value)
    }
}

/// Search statistics attached to reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Csp<'a> {
    f: &'a Functor,
    n: usize,
    offsets: Vec<usize>,
    var_pair: Vec<(Obj, Obj)>,
    var_h: Vec<Mor>,
    domains: Vec<Vec<Mor>>,
    allowed: Vec<Vec<bool>>,
    values: Vec<Option<Mor>>,
    trail: Vec<usize>,
    queue: Vec<(usize, Mor)>,
}

impl<'a> Csp<'a> {
    fn new(f: &'a Functor, mode: Mode) -> Csp<'a> {
        let c = f.source();
        let d = f.target();
        let offsets = offsets(f);
        let mut var_pair = Vec::new();
        let mut var_h = Vec::new();
        let mut domains = Vec::new();
        let mut allowed = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                let source_hom = c.hom(x, y);
                for &h in d.hom(f.ob(x), f.ob(y)) {
                    let pre: Vec<Mor> = source_hom.iter().copied().filter(|&m| f.mor(m) == h).collect();
                    let dom: Vec<Mor> = match mode {
                        Mode::Natfull => pre,
                        Mode::Semisep if !pre.is_empty() => pre,
                        Mode::Sep if pre.len() == 1 => pre,
                        Mode::Sep if pre.len() > 1 => Vec::new(),
                        _ => source_hom.to_vec(),
                    };
                    let mut ok = vec![false; source_hom.len()];
                    for &m in &dom {
                        ok[c.hom_index(m)] = true;
                    }
                    var_pair.push((x, y));
                    var_h.push(h);
                    domains.push(dom);
                    allowed.push(ok);
                }
            }
        }
        let vars = var_h.len();
        Csp {
            f,
            n: c.num_objects(),
            offsets,
            var_pair,
            var_h,
            domains,
            allowed,
            values: vec![None; vars],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn var(&self, x: Obj, y: Obj, h: Mor) -> usize {
        self.offsets[x.0 * self.n + y.0] + self.f.target().hom_index(h)
    }

    /// Assigns and propagates naturality; false on conflict (assignments stay on the trail).
    fn assign(&mut self, v: usize, val: Mor) -> bool {
        let f = self.f;
        let c = f.source();
        let d = f.target();
        self.queue.clear();
        self.queue.push((v, val));
        while let Some((v, val)) = self.queue.pop() {
            match self.values[v] {
                Some(w) if w == val => continue,
                Some(_) => return false,
                None => {}
            }
            if !self.allowed[v][c.hom_index(val)] {
                return false;
            }
            self.values[v] = Some(val);
            self.trail.push(v);
            let (x, y) = self.var_pair[v];
            let h = self.var_h[v];
            for &a in c.incoming(x) {
                let ha = d.compose(h, f.mor(a));
                let va = c.compose(val, a);
                for &b in c.outgoing(y) {
                    let w = self.var(c.dom(a), c.cod(b), d.compose(f.mor(b), ha));
                    let forced = c.compose(b, va);
                    match self.values[w] {
                        Some(existing) if existing != forced => return false,
                        Some(_) => {}
                        None => self.queue.push((w, forced)),
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("nonempty");
            self.values[v] = None;
        }
    }

    fn solve(&mut self, from: usize, limit: usize, budget: &mut Budget, out: &mut Vec<Vec<Mor>>) -> Result<bool> {
        let Some(v) = (from..self.values.len()).find(|&v| self.values[v].is_none()) else {
            out.push(self.values.iter().map(|m| m.expect("complete")).collect());
            return Ok(out.len() >= limit);
        };
        for k in 0..self.domains[v].len() {
            budget.tick()?;
            let val = self.domains[v][k];
            let mark = self.trail.len();
            let ok = self.assign(v, val);
            if ok && self.solve(v + 1, limit, budget, out)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

/// All hom retractions for `f` satisfying `mode`, up to `limit`, in canonical order.
pub fn enumerate_hom_retractions_with(
    f: &Functor,
    mode: Mode,
    limit: usize,
    budget: &mut Budget,
) -> Result<Vec<HomRetraction>> {
    let mut csp = Csp::new(f, mode);
    let mut raw = Vec::new();
    if limit > 0 {
        csp.solve(0, limit, budget, &mut raw)?;
    }
    let out: Vec<HomRetraction> = raw.into_iter().map(|v| HomRetraction::from_values(f, v)).collect();
    for p in &out {
        p.validate(mode).map_err(|e| Error::Internal(format!("search produced a bad witness: {e}")))?;
    }
    Ok(out)
}

pub fn enumerate_hom_retractions(f: &Functor, mode: Mode, limit: usize) -> Result<Vec<HomRetraction>> {
    enumerate_hom_retractions_with(f, mode, limit, &mut Budget::default())
}

/// The canonical-first hom retraction for `mode`, or `None` after exhaustive search.
pub fn search_hom_retraction_with(f: &Functor, mode: Mode, budget: &mut Budget) -> Result<Option<HomRetraction>> {
    Ok(enumerate_hom_retractions_with(f, mode, 1, budget)?.pop())
}

pub fn search_hom_retraction(f: &Functor, mode: Mode) -> Result<Option<HomRetraction>> {
    search_hom_retraction_with(f, mode, &mut Budget::default())
}

pub fn is_semiseparable(f: &Functor) -> Result<bool> {
    Ok(search_hom_retraction(f, Mode::Semisep)?.is_some())
}

pub fn is_separable(f: &Functor) -> Result<bool> {
    Ok(search_hom_retraction(f, Mode::Sep)?.is_some())
}

pub fn is_naturally_full(f: &Functor) -> Result<bool> {
    Ok(search_hom_retraction(f, Mode::Natfull)?.is_some())
}

/// e_X := P_{X,X}(Id_{FX}); checked idempotent, natural, with Fe = Id_F and
/// Ff = Fg exactly when e o f = e o g.
pub fn associated_idempotent(p: &HomRetraction) -> Result<IdempotentNat> {
    let f = p.functor();
    let c = f.source();
    let d = f.target();
    p.validate(Mode::Semisep)?;
    let comps: Vec<Mor> = c.objects().map(|x| p.apply(x, x, d.id(f.ob(x)))).collect();
    let e = IdempotentNat::new(c, comps).map_err(|err| Error::WitnessInvalid(err.to_string()))?;
    if let Some(x) = c.objects().find(|&x| f.mor(e.at(x)) != d.id(f.ob(x))) {
        return Err(Error::WitnessInvalid(format!("F e is not the identity at {}", c.object_name(x))));
    }
    for x in c.objects() {
        for y in c.objects() {
            let hom = c.hom(x, y);
            for &a in hom {
                for &b in hom {
                    let same_image = f.mor(a) == f.mor(b);
                    let same_class = c.compose(e.at(y), a) == c.compose(e.at(y), b);
                    if same_image != same_class {
                        return Err(Error::WitnessInvalid(format!(
                            "universal property fails on {} and {}",
                            c.name_of(a),
                            c.name_of(b)
                        )));
                    }
                }
            }
        }
    }
    Ok(e)
}

/// A parallel pair identified by F.
pub fn faithful_counterexample(f: &Functor) -> Option<(Mor, Mor)> {
    let c = f.source();
    for x in c.objects() {
        for y in c.objects() {
            let hom = c.hom(x, y);
            for (i, &a) in hom.iter().enumerate() {
                if let Some(&b) = hom[i + 1..].iter().find(|&&b| f.mor(a) == f.mor(b)) {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

/// A morphism FX -> FY outside the image, with its source pair.
pub fn full_counterexample(f: &Functor) -> Option<(Obj, Obj, Mor)> {
    let c = f.source();
    let d = f.target();
    for x in c.objects() {
        for y in c.objects() {
            let image: Vec<Mor> = c.hom(x, y).iter().map(|&m| f.mor(m)).collect();
            if let Some(&h) = d.hom(f.ob(x), f.ob(y)).iter().find(|h| !image.contains(h)) {
                return Some((x, y, h));
            }
        }
    }
    None
}

pub fn is_faithful(f: &Functor) -> bool {
    faithful_counterexample(f).is_none()
}

pub fn is_full(f: &Functor) -> bool {
    full_counterexample(f).is_none()
}

pub fn is_fully_faithful(f: &Functor) -> bool {
    is_faithful(f) && is_full(f)
}

/// A morphism i with F i split mono but i not split mono.
pub fn maschke_counterexample(f: &Functor) -> Option<Mor> {
    let c = f.source();
    let d = f.target();
    c.morphisms().find(|&i| d.retraction_of(f.mor(i)).is_some() && c.retraction_of(i).is_none())
}

/// A morphism p with F p split epi but p not split epi.
pub fn dual_maschke_counterexample(f: &Functor) -> Option<Mor> {
    let c = f.source();
    let d = f.target();
    c.morphisms().find(|&p| d.section_of(f.mor(p)).is_some() && c.section_of(p).is_none())
}

/// A morphism g with F g invertible but g not.
pub fn conservative_counterexample(f: &Functor) -> Option<Mor> {
    let c = f.source();
    let d = f.target();
    c.morphisms().find(|&g| d.is_iso(f.mor(g)) && !c.is_iso(g))
}

pub fn is_maschke(f: &Functor) -> bool {
    maschke_counterexample(f).is_none()
}

pub fn is_dual_maschke(f: &Functor) -> bool {
    dual_maschke_counterexample(f).is_none()
}

pub fn is_conservative(f: &Functor) -> bool {
    conservative_counterexample(f).is_none()
}

/// `D` is a retract of `F source` via `i: D -> F source`, `p: F source -> D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Retract {
    pub source: Obj,
    pub i: Mor,
    pub p: Mor,
}

/// One retract per target object (first in canonical order), or the first
/// target object that is not a retract of any image.
pub fn surjective_utr(f: &Functor) -> std::result::Result<Vec<Retract>, Obj> {
    let c = f.source();
    let d = f.target();
    d.objects()
        .map(|y| {
            c.objects()
                .find_map(|x| {
                    d.hom(y, f.ob(x)).iter().find_map(|&i| {
                        d.hom(f.ob(x), y).iter().find(|&&p| d.compose(p, i) == d.id(y)).map(|&p| Retract {
                            source: x,
                            i,
                            p,
                        })
                    })
                })
                .ok_or(y)
        })
        .collect()
}

pub fn is_surjective_utr(f: &Functor) -> bool {
    surjective_utr(f).is_ok()
}

/// Flags and witnesses for one functor, all names resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub faithful: bool,
    pub full: bool,
    pub fully_faithful: bool,
    pub semiseparable: bool,
    pub separable: bool,
    pub naturally_full: bool,
    pub maschke: bool,
    pub dual_maschke: bool,
    pub conservative: bool,
    pub surjective_utr: bool,
    pub witnesses: ReportWitnesses,
    pub search_stats: SearchStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_faithful: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_full: Option<String>,
    /// Semiseparability witness as rows `[X, Y, h, P(h)]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_retraction: Option<Vec<[String; 4]>>,
    /// Associated idempotent as rows `[X, e_X]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_maschke: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_dual_maschke: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_conservative: Option<String>,
    /// Retract data as rows `[D, C, i, p]`, or the failing object.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retracts: Option<Vec<[String; 4]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_retract: Option<String>,
}

/// Named rows `[X, Y, h, P(h)]` of a hom retraction.
pub fn retraction_rows(p: &HomRetraction) -> Vec<[String; 4]> {
    let f = p.functor();
    let c = f.source();
    let d = f.target();
    let mut rows = Vec::new();
    for x in c.objects() {
        for y in c.objects() {
            for &h in d.hom(f.ob(x), f.ob(y)) {
                rows.push([
                    c.object_name(x).to_string(),
                    c.object_name(y).to_string(),
                    d.name_of(h).to_string(),
                    c.name_of(p.apply(x, y, h)).to_string(),
                ]);
            }
        }
    }
    rows
}

/// Decides every flag of the report. Timing is recorded only when asked for,
/// so that default reports are reproducible byte for byte.
pub fn classify_with(f: &Functor, budget: &mut Budget, timing: bool) -> Result<FunctorReport> {
    let start = Instant::now();
    let c = f.source();
    let d = f.target();
    let before = budget.visited();
    let semisep = search_hom_retraction_with(f, Mode::Semisep, budget)?;
    let sep = search_hom_retraction_with(f, Mode::Sep, budget)?;
    let natfull = search_hom_retraction_with(f, Mode::Natfull, budget)?;
    let mut w = ReportWitnesses {
        not_faithful: faithful_counterexample(f).map(|(a, b)| [c.name_of(a).into(), c.name_of(b).into()]),
        not_full: full_counterexample(f).map(|(_, _, h)| d.name_of(h).into()),
        not_maschke: maschke_counterexample(f).map(|m| c.name_of(m).into()),
        not_dual_maschke: dual_maschke_counterexample(f).map(|m| c.name_of(m).into()),
        not_conservative: conservative_counterexample(f).map(|m| c.name_of(m).into()),
        ..ReportWitnesses::default()
    };
    if let Some(p) = &semisep {
        let e = associated_idempotent(p)?;
        w.hom_retraction = Some(retraction_rows(p));
        w.idempotent =
            Some(c.objects().map(|x| [c.object_name(x).to_string(), c.name_of(e.at(x)).to_string()]).collect());
    }
    let retracts = surjective_utr(f);
    match &retracts {
        Ok(rs) => {
            w.retracts = Some(
                d.objects()
                    .zip(rs)
                    .map(|(y, r)| {
                        [
                            d.object_name(y).to_string(),
                            c.object_name(r.source).to_string(),
                            d.name_of(r.i).to_string(),
                            d.name_of(r.p).to_string(),
                        ]
                    })
                    .collect(),
            )
        }
        Err(y) => w.not_retract = Some(d.object_name(*y).to_string()),
    }
    let faithful = w.not_faithful.is_none();
    let full = w.not_full.is_none();
    Ok(FunctorReport {
        faithful,
        full,
        fully_faithful: faithful && full,
        semiseparable: semisep.is_some(),
        separable: sep.is_some(),
        naturally_full: natfull.is_some(),
        maschke: w.not_maschke.is_none(),
        dual_maschke: w.not_dual_maschke.is_none(),
        conservative: w.not_conservative.is_none(),
        surjective_utr: retracts.is_ok(),
        witnesses: w,
        search_stats: SearchStats { nodes: budget.visited() - before },
        elapsed_ms: timing.then(|| start.elapsed().as_millis()),
    })
}

pub fn classify(f: &Functor) -> Result<FunctorReport> {
    classify_with(f, &mut Budget::default(), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{pick_object, terminal, to_terminal, walking_arrow, walking_idempotent};

    #[test]
    fn identity_is_separable_with_identity_witness() {
        let e = walking_idempotent();
        let id = Functor::identity(&e);
        let p = search_hom_retraction(&id, Mode::Sep).unwrap().unwrap();
        assert_eq!(p.values(), &[Mor(0), Mor(1)]);
        assert!(associated_idempotent(&p).unwrap().is_identity());
    }

    #[test]
    fn e_to_one_is_semiseparable_only() {
        let e = walking_idempotent();
        let g = to_terminal(&e, &terminal()).unwrap();
        let all = enumerate_hom_retractions(&g, Mode::Semisep, 10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].values(), &[Mor(1)]);
        assert!(search_hom_retraction(&g, Mode::Sep).unwrap().is_none());
        assert!(is_naturally_full(&g).unwrap());
        let idem = associated_idempotent(&all[0]).unwrap();
        assert_eq!(idem.at(Obj(0)), Mor(1));
        assert!(is_full(&g) && !is_faithful(&g));
        assert_eq!(conservative_counterexample(&g), Some(Mor(1)));
    }

    #[test]
    fn identity_on_terminal_has_one_retraction() {
        let one = terminal();
        let all = enumerate_hom_retractions(&Functor::identity(&one), Mode::Semisep, 10).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn picking_the_source_of_the_arrow_is_not_surjective_utr() {
        let two = walking_arrow();
        let f = pick_object(&terminal(), &two, Obj(0)).unwrap();
        assert_eq!(surjective_utr(&f), Err(Obj(1)));
        assert!(is_surjective_utr(&Functor::identity(&two)));
    }

    #[test]
    fn report_flags_for_e_to_one() {
        let e = walking_idempotent();
        let g = to_terminal(&e, &terminal()).unwrap();
        let r = classify(&g).unwrap();
        assert!(r.semiseparable && !r.separable && r.naturally_full && r.full && !r.faithful);
        assert!(!r.conservative);
        assert_eq!(r.witnesses.idempotent, Some(vec![["*".to_string(), "e".to_string()]]));
    }
}
