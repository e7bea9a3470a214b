//! Finite unital rings, ring maps, truncated categories of free modules, and
//! the induction and restriction functors between them.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{Arrow, Cat, FinCat, Functor, IdempotentNat, Mor, Obj};
use crate::error::{Error, Result};
use crate::limits::{Budget, Limits};

/// A finite ring given by its addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTable {
    pub name: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl RingTable {
    pub fn from_fn(
        name: &str,
        elements: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
    ) -> Result<RingTable> {
        let n = elements.len();
        let r = RingTable {
            name: name.to_string(),
            add: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
            elements,
            zero,
            one,
        };
        r.validate()?;
        Ok(r)
    }

    /// Checks the ring axioms. The zero ring passes; see [`RingTable::is_zero_ring`].
    pub fn validate(&self) -> Result<()> {
        let n = self.elements.len();
        let shape =
            |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|&v| v < n));
        if n == 0 || !shape(&self.add) || !shape(&self.mul) || self.zero >= n || self.one >= n {
            return Err(Error::InvalidRing(format!("{}: tables have the wrong shape", self.name)));
        }
        let fail = |what: &str| Err(Error::InvalidRing(format!("{}: {what}", self.name)));
        for a in 0..n {
            if self.add(a, self.zero) != a || self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("identity law");
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail("missing additive inverse");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication is not associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c))
                    {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.zero == self.one
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.size()).all(|a| self.mul(a, z) == self.mul(z, a))
    }

    pub fn is_idempotent(&self, z: usize) -> bool {
        self.mul(z, z) == z
    }

    /// The prime field with two elements.
    pub fn f2() -> RingTable {
        RingTable::from_fn("F2", names(&["0", "1"]), |a, b| a ^ b, |a, b| a & b, 0, 1).expect("F2")
    }

    /// The field with four elements `0, 1, a, b` where `a² = b = a + 1`.
    pub fn f4() -> RingTable {
        let mul = |a: usize, b: usize| {
            // polynomials over F2 in bits, reduced modulo x² + x + 1
            let mut p = 0;
            for i in 0..2 {
                if b >> i & 1 == 1 {
                    p ^= a << i;
                }
            }
            if p & 4 != 0 {
                p ^= 0b111;
            }
            p
        };
        RingTable::from_fn("F4", names(&["0", "1", "a", "b"]), |a, b| a ^ b, mul, 0, 1).expect("F4")
    }

    /// `F2 × F2` with elements `(x,y)` at index `2x + y`.
    pub fn f2xf2() -> RingTable {
        RingTable::product(&RingTable::f2(), &RingTable::f2())
    }

    /// `F2[x]/(x²)` with `a + bx` at index `a + 2b`.
    pub fn dual_numbers_f2() -> RingTable {
        let mul = |p: usize, q: usize| {
            let (a, b, c, d) = (p & 1, p >> 1, q & 1, q >> 1);
            (a & c) | (((a & d) ^ (b & c)) << 1)
        };
        RingTable::from_fn("F2[x]/(x^2)", names(&["0", "1", "x", "1+x"]), |a, b| a ^ b, mul, 0, 1)
            .expect("dual numbers")
    }

    pub fn integers_mod(n: usize) -> Result<RingTable> {
        if n == 0 {
            return Err(Error::InvalidRing("modulus 0".into()));
        }
        let elements = (0..n).map(|k| k.to_string()).collect();
        RingTable::from_fn(&format!("Z/{n}"), elements, |a, b| (a + b) % n, |a, b| (a * b) % n, 0, 1 % n)
    }

    pub fn zero_ring() -> RingTable {
        RingTable::from_fn("0", names(&["0"]), |_, _| 0, |_, _| 0, 0, 0).expect("zero ring")
    }

    /// Pairs in lexicographic order.
    pub fn product(r: &RingTable, s: &RingTable) -> RingTable {
        let m = s.size();
        let elements = (0..r.size() * m).map(|k| format!("({},{})", r.elements[k / m], s.elements[k % m])).collect();
        let add = |a: usize, b: usize| r.add(a / m, b / m) * m + s.add(a % m, b % m);
        let mul = |a: usize, b: usize| r.mul(a / m, b / m) * m + s.mul(a % m, b % m);
        RingTable::from_fn(
            &format!("{}x{}", r.name, s.name),
            elements,
            add,
            mul,
            r.zero * m + s.zero,
            r.one * m + s.one,
        )
        .expect("product of rings")
    }
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// A unital ring homomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingMorphism {
    pub source: RingTable,
    pub target: RingTable,
    pub map: Vec<usize>,
}

impl RingMorphism {
    pub fn new(source: &RingTable, target: &RingTable, map: Vec<usize>) -> Result<RingMorphism> {
        let n = source.size();
        if map.len() != n || map.iter().any(|&v| v >= target.size()) {
            return Err(Error::InvalidRing("ring map has the wrong shape".into()));
        }
        if map[source.one] != target.one {
            return Err(Error::InvalidRing("ring map does not preserve 1".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if map[source.add(a, b)] != target.add(map[a], map[b])
                    || map[source.mul(a, b)] != target.mul(map[a], map[b])
                {
                    return Err(Error::InvalidRing("ring map does not preserve the operations".into()));
                }
            }
        }
        Ok(RingMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(r: &RingTable) -> RingMorphism {
        RingMorphism { source: r.clone(), target: r.clone(), map: (0..r.size()).collect() }
    }

    /// `F2 → S` sending 1 to 1, for `S` of characteristic 2.
    pub fn from_f2(target: &RingTable) -> Result<RingMorphism> {
        RingMorphism::new(&RingTable::f2(), target, vec![target.zero, target.one])
    }

    /// `r ↦ (r, r)`.
    pub fn diagonal(r: &RingTable) -> RingMorphism {
        let p = RingTable::product(r, r);
        let m = r.size();
        RingMorphism::new(r, &p, (0..m).map(|a| a * m + a).collect()).expect("diagonal")
    }

    /// `(r, s) ↦ r`.
    pub fn first_projection(r: &RingTable, s: &RingTable) -> RingMorphism {
        let p = RingTable::product(r, s);
        RingMorphism::new(&p, r, (0..p.size()).map(|k| k / s.size()).collect()).expect("projection")
    }

    pub fn to_zero(r: &RingTable) -> RingMorphism {
        RingMorphism::new(r, &RingTable::zero_ring(), vec![0; r.size()]).expect("map to the zero ring")
    }

    pub fn apply(&self, r: usize) -> usize {
        self.map[r]
    }

    /// Whether the image commutes with every element of the target.
    pub fn has_central_image(&self) -> bool {
        self.map.iter().all(|&v| self.target.is_central(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleCatSpec {
    pub ring: RingTable,
    pub max_rank: usize,
}

/// Free left modules `R^0 … R^k`. `Hom(R^m, R^n)` is all `m × n` matrices acting
/// on row vectors, so the matrix of `g ∘ f` is `M_f · M_g`.
#[derive(Clone, Debug)]
pub struct ModuleCat {
    spec: ModuleCatSpec,
    category: Cat,
    matrices: Vec<Vec<usize>>,
    index: HashMap<(usize, usize, Vec<usize>), Mor>,
}

fn matmul(r: &RingTable, a: &[usize], b: &[usize], m: usize, n: usize, p: usize) -> Vec<usize> {
    let mut out = vec![r.zero; m * p];
    for i in 0..m {
        for j in 0..p {
            let mut acc = r.zero;
            for k in 0..n {
                acc = r.add(acc, r.mul(a[i * n + k], b[k * p + j]));
            }
            out[i * p + j] = acc;
        }
    }
    out
}

impl ModuleCat {
    pub fn new(spec: &ModuleCatSpec) -> Result<ModuleCat> {
        let r = &spec.ring;
        let k = spec.max_rank;
        let q = r.size() as u128;
        let total: u128 = (0..=k).flat_map(|m| (0..=k).map(move |n| q.saturating_pow((m * n) as u32))).sum();
        Limits::current().check_size("free module category", k + 1, usize::try_from(total).unwrap_or(usize::MAX))?;
        let mut arrows = Vec::new();
        let mut matrices = Vec::new();
        let mut index = HashMap::new();
        for m in 0..=k {
            for n in 0..=k {
                let len = m * n;
                let mut mat = vec![0usize; len];
                loop {
                    let body = (0..m)
                        .map(|i| (0..n).map(|j| r.elements[mat[i * n + j]].as_str()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join(";");
                    index.insert((m, n, mat.clone()), Mor(arrows.len()));
                    arrows.push(Arrow { name: format!("R^{m}->R^{n}:[{body}]"), dom: Obj(m), cod: Obj(n) });
                    matrices.push(mat.clone());
                    // odometer, last entry fastest
                    let mut pos = len;
                    loop {
                        if pos == 0 {
                            break;
                        }
                        pos -= 1;
                        mat[pos] += 1;
                        if mat[pos] < r.size() {
                            break;
                        }
                        mat[pos] = 0;
                        if pos == 0 {
                            pos = usize::MAX;
                            break;
                        }
                    }
                    if pos == usize::MAX || len == 0 {
                        break;
                    }
                }
            }
        }
        let identity = (0..=k)
            .map(|m| {
                let id: Vec<usize> = (0..m * m).map(|p| if p / m == p % m { r.one } else { r.zero }).collect();
                index[&(m, m, id)]
            })
            .collect();
        let objects = (0..=k).map(|m| format!("R^{m}")).collect();
        let dims: Vec<(usize, usize)> = arrows.iter().map(|a| (a.dom.0, a.cod.0)).collect();
        let category = FinCat::build(objects, arrows, identity, |g, f| {
            let (m, n) = dims[f.0];
            let p = dims[g.0].1;
            index[&(m, p, matmul(r, &matrices[f.0], &matrices[g.0], m, n, p))]
        })?;
        Ok(ModuleCat { spec: spec.clone(), category: Arc::new(category), matrices, index })
    }

    pub fn category(&self) -> &Cat {
        &self.category
    }

    pub fn ring(&self) -> &RingTable {
        &self.spec.ring
    }

    pub fn max_rank(&self) -> usize {
        self.spec.max_rank
    }

    /// Row-major entries of a morphism's matrix.
    pub fn matrix(&self, f: Mor) -> &[usize] {
        &self.matrices[f.0]
    }

    pub fn morphism(&self, m: usize, n: usize, matrix: &[usize]) -> Option<Mor> {
        self.index.get(&(m, n, matrix.to_vec())).copied()
    }

    /// The object `R^n`.
    pub fn object(&self, n: usize) -> Obj {
        Obj(n)
    }

    /// Scalar multiplication by `z` on every object.
    pub fn scalar(&self, n: usize, z: usize) -> Mor {
        let r = self.ring();
        let mat: Vec<usize> = (0..n * n).map(|p| if p / n == p % n { z } else { r.zero }).collect();
        self.index[&(n, n, mat)]
    }
}

pub fn free_module_cat(spec: &ModuleCatSpec) -> Result<ModuleCat> {
    ModuleCat::new(spec)
}

/// `e_M = z·` on every truncated free module, for a central idempotent `z`.
pub fn central_idempotent_nat(mc: &ModuleCat, z: usize) -> Result<IdempotentNat> {
    let r = mc.ring();
    if z >= r.size() || !r.is_central(z) || !r.is_idempotent(z) {
        let name = r.elements.get(z).cloned().unwrap_or_else(|| z.to_string());
        return Err(Error::NotCentralIdempotent(name));
    }
    IdempotentNat::new(mc.category(), (0..=mc.max_rank()).map(|n| mc.scalar(n, z)).collect())
}

/// A functor between two truncated module categories, with both kept.
#[derive(Clone, Debug)]
pub struct ModuleFunctor {
    pub source: ModuleCat,
    pub target: ModuleCat,
    pub functor: Functor,
}

/// `S ⊗_R −` on free modules: `R^n ↦ S^n`, matrices mapped entrywise.
pub fn induction_functor(phi: &RingMorphism, max_rank: usize) -> Result<ModuleFunctor> {
    let source = ModuleCat::new(&ModuleCatSpec { ring: phi.source.clone(), max_rank })?;
    let target = ModuleCat::new(&ModuleCatSpec { ring: phi.target.clone(), max_rank })?;
    let c = source.category();
    let morphisms = c
        .morphisms()
        .map(|f| {
            let (m, n) = (c.dom(f).0, c.cod(f).0);
            let mat: Vec<usize> = source.matrix(f).iter().map(|&a| phi.apply(a)).collect();
            target.morphism(m, n, &mat).expect("entrywise image is a matrix")
        })
        .collect();
    let functor = Functor::new(c, target.category(), c.objects().collect(), morphisms)?;
    Ok(ModuleFunctor { source, target, functor })
}

/// Coordinates of every element of `S` in a left `R`-basis `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub elements: Vec<usize>,
    coords: Vec<Vec<usize>>,
}

impl Basis {
    pub fn new(phi: &RingMorphism, elements: &[usize]) -> Result<Basis> {
        let (r, s) = (&phi.source, &phi.target);
        let k = elements.len();
        if elements.iter().any(|&b| b >= s.size()) {
            return Err(Error::NotABasis("element outside the ring".into()));
        }
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; s.size()];
        let mut tuple = vec![0usize; k];
        loop {
            let value = (0..k).fold(s.zero, |acc, i| s.add(acc, s.mul(phi.apply(tuple[i]), elements[i])));
            if coords[value].is_some() {
                return Err(Error::NotABasis(format!("{} has two coordinate vectors", s.elements[value])));
            }
            coords[value] = Some(tuple.clone());
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < r.size() {
                    break;
                }
                tuple[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if k == 0 || pos == usize::MAX {
                break;
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::NotABasis(format!("{} has no coordinates", s.elements[v]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Basis { elements: elements.to_vec(), coords })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn coordinates(&self, s: usize) -> &[usize] {
        &self.coords[s]
    }
}

/// Restriction of scalars: `S^n ↦ R^{n·k}`, each entry `s` expanding to the
/// `k × k` block whose row `i` holds the coordinates of `b_i s`.
pub fn restriction_functor(phi: &RingMorphism, basis: &[usize], max_rank_s: usize) -> Result<ModuleFunctor> {
    let b = Basis::new(phi, basis)?;
    let k = b.len();
    let s = &phi.target;
    let source = ModuleCat::new(&ModuleCatSpec { ring: s.clone(), max_rank: max_rank_s })?;
    let target = ModuleCat::new(&ModuleCatSpec { ring: phi.source.clone(), max_rank: max_rank_s * k })?;
    let c = source.category();
    let morphisms = c
        .morphisms()
        .map(|f| {
            let (m, n) = (c.dom(f).0, c.cod(f).0);
            let mat = source.matrix(f);
            let (rows, cols) = (m * k, n * k);
            let mut out = vec![phi.source.zero; rows * cols];
            for j in 0..m {
                for j2 in 0..n {
                    for i in 0..k {
                        let co = b.coordinates(s.mul(b.elements[i], mat[j * n + j2]));
                        for l in 0..k {
                            out[(j * k + i) * cols + j2 * k + l] = co[l];
                        }
                    }
                }
            }
            target.morphism(rows, cols, &out).expect("expanded matrix")
        })
        .collect();
    let functor = Functor::new(c, target.category(), c.objects().map(|x| Obj(x.0 * k)).collect(), morphisms)?;
    Ok(ModuleFunctor { source, target, functor })
}

/// Bimodule maps `E: S → R` found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimoduleSearch {
    /// First `E` in canonical order with `E φ = Id`.
    pub retraction: Option<Vec<usize>>,
    /// First `E` with `φ E φ = φ`.
    pub regular: Option<Vec<usize>>,
}

pub fn bimodule_retraction_search(phi: &RingMorphism) -> Result<BimoduleSearch> {
    bimodule_retraction_search_with(phi, &mut Budget::from_limits())
}

pub fn bimodule_retraction_search_with(phi: &RingMorphism, budget: &mut Budget) -> Result<BimoduleSearch> {
    let (r, s) = (&phi.source, &phi.target);
    let n = s.size();
    let mut retraction = None;
    let mut regular = None;
    let mut e = vec![0usize; n];
    loop {
        budget.tick()?;
        let bilinear = (0..n).all(|a| {
            (0..n).all(|b| e[s.add(a, b)] == r.add(e[a], e[b]))
                && (0..r.size()).all(|x| {
                    (0..r.size()).all(|y| e[s.mul(s.mul(phi.apply(x), a), phi.apply(y))] == r.mul(r.mul(x, e[a]), y))
                })
        });
        if bilinear {
            if retraction.is_none() && (0..r.size()).all(|x| e[phi.apply(x)] == x) {
                retraction = Some(e.clone());
            }
            if regular.is_none() && (0..r.size()).all(|x| phi.apply(e[phi.apply(x)]) == phi.apply(x)) {
                regular = Some(e.clone());
            }
        }
        if retraction.is_some() && regular.is_some() {
            break;
        }
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            e[pos] += 1;
            if e[pos] < r.size() {
                break;
            }
            e[pos] = 0;
            if pos == 0 {
                pos = usize::MAX;
                break;
            }
        }
        if pos == usize::MAX {
            break;
        }
    }
    Ok(BimoduleSearch { retraction, regular })
}

/// An element `Σ b_i ⊗ t_i` of `S ⊗_R S`, stored as the tuple `(t_i)`, with
/// `Σ b_i t_i = 1` and `s·τ = τ·s` for every `s`.
pub fn separability_idempotent_search(phi: &RingMorphism, basis: &[usize]) -> Result<Option<Vec<usize>>> {
    separability_idempotent_search_with(phi, basis, &mut Budget::from_limits())
}

pub fn separability_idempotent_search_with(
    phi: &RingMorphism,
    basis: &[usize],
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    if !phi.has_central_image() {
        return Err(Error::PreconditionFailed("the tuple realization needs a central image".into()));
    }
    let b = Basis::new(phi, basis)?;
    let s = &phi.target;
    let k = b.len();
    // lambda[s][i][l]: coefficient of b_l in s b_i
    let lambda: Vec<Vec<Vec<usize>>> =
        (0..s.size()).map(|x| (0..k).map(|i| b.coordinates(s.mul(x, b.elements[i])).to_vec()).collect()).collect();
    let mut t = vec![0usize; k];
    loop {
        budget.tick()?;
        let m = (0..k).fold(s.zero, |acc, i| s.add(acc, s.mul(b.elements[i], t[i])));
        if m == s.one {
            let central = (0..s.size()).all(|x| {
                (0..k).all(|l| {
                    let left = (0..k).fold(s.zero, |acc, i| s.add(acc, s.mul(phi.apply(lambda[x][i][l]), t[i])));
                    left == s.mul(t[l], x)
                })
            });
            if central {
                return Ok(Some(t));
            }
        }
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            t[pos] += 1;
            if t[pos] < s.size() {
                break;
            }
            t[pos] = 0;
            if pos == 0 {
                pos = usize::MAX;
                break;
            }
        }
        if k == 0 || pos == usize::MAX {
            return Ok(None);
        }
    }
}
