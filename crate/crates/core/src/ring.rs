//! Quotient rings `k[x]/I`, ring homomorphisms, linear algebra over quotient
//! rings (syzygies and lifting), and generic degrees of finite extensions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{groebner, ideal_groebner, Gb, ModuleOrder, Vector};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing, Ring};
use crate::scalars::{Field, Scalar};

/// Presented ring `k[x]/I` with its reduced Gröbner basis in the ring order.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ring: Ring,
    pub ideal: Vec<Poly>,
    gb: Gb,
}

pub type QRing = Arc<QuotientRing>;

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb.elems() == other.gb.elems()
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(ring: Ring, ideal: Vec<Poly>) -> QRing {
        let gb = ideal_groebner(&ring.field, ring.nvars(), ring.order, &ideal);
        let ideal = ideal.into_iter().filter(|p| !p.is_zero()).collect();
        Arc::new(QuotientRing { ring, ideal, gb })
    }

    pub fn polynomial(ring: Ring) -> QRing {
        Self::new(ring, Vec::new())
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn gb(&self) -> &Gb {
        &self.gb
    }

    pub fn nf(&self, p: &Poly) -> Poly {
        if self.gb.is_zero() {
            return p.clone();
        }
        self.gb.reduce_poly(p)
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.nf(p).is_zero()
    }

    pub fn equal(&self, a: &Poly, b: &Poly) -> bool {
        self.is_zero(&a.sub(b))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.nf(&a.mul(self.field(), b))
    }

    pub fn format(&self, p: &Poly) -> String {
        self.ring.format(&self.nf(p))
    }

    /// True when `I` is the unit ideal.
    pub fn is_trivial(&self) -> bool {
        self.gb.is_unit()
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        self.ring.var(name)
    }

    fn with_ideal(&self, order: &ModuleOrder, rank: usize, offset: usize, out: &mut Vec<Vector>) {
        let n = self.nvars();
        for i in 0..rank {
            for f in self.gb.polys() {
                let mut cols = vec![Poly::zero(n); order.rank()];
                cols[offset + i] = f;
                out.push(Vector::from_columns(&cols, order));
            }
        }
    }

    /// Gröbner basis of the submodule of `R^rank` generated by `gens`,
    /// term-over-position in the ring order. Its normal form is canonical.
    pub fn module_gb(&self, gens: &[Vec<Poly>], rank: usize) -> Gb {
        let order = ModuleOrder::top(self.order(), rank);
        let mut vs: Vec<Vector> = gens.iter().map(|g| Vector::from_columns(g, &order)).collect();
        self.with_ideal(&order, rank, 0, &mut vs);
        groebner(self.field(), self.nvars(), &order, &vs)
    }

    /// Normal form of a vector modulo a submodule basis from [`Self::module_gb`].
    pub fn module_nf(&self, gb: &Gb, v: &[Poly]) -> Vec<Poly> {
        gb.reduce_columns(v)
    }

    /// Syzygies of the columns `cols` of `R^rank / rels`.
    pub fn kernel(&self, cols: &[Vec<Poly>], rels: &[Vec<Poly>], rank: usize) -> Vec<Vec<Poly>> {
        Lifter::new(self, cols, rels, rank).syzygies(self)
    }
}

/// Expresses vectors as combinations of fixed columns modulo relations and
/// the ring ideal. Positions `0..rank` hold the target, the rest record the
/// combination.
#[derive(Clone, Debug)]
pub struct Lifter {
    gb: Gb,
    rank: usize,
    m: usize,
}

impl Lifter {
    pub fn new(q: &QuotientRing, cols: &[Vec<Poly>], rels: &[Vec<Poly>], rank: usize) -> Self {
        let n = q.nvars();
        let m = cols.len();
        let order = ModuleOrder::split(q.order(), rank + m, rank);
        let mut vs = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            let mut v = c.clone();
            v.resize(rank + m, Poly::zero(n));
            v[rank + j] = Poly::one(n);
            vs.push(Vector::from_columns(&v, &order));
        }
        for r in rels {
            let mut v = r.clone();
            v.resize(rank + m, Poly::zero(n));
            vs.push(Vector::from_columns(&v, &order));
        }
        q.with_ideal(&order, rank, 0, &mut vs);
        let gb = groebner(q.field(), n, &order, &vs);
        Lifter { gb, rank, m }
    }

    /// Coefficients `c` with `v = sum c_j cols_j`, if `v` lies in the span.
    pub fn lift(&self, v: &[Poly]) -> Option<Vec<Poly>> {
        let n = self.gb.nvars;
        let mut full = v.to_vec();
        full.resize(self.rank + self.m, Poly::zero(n));
        let r = self.gb.reduce_columns(&full);
        if r[..self.rank].iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(r[self.rank..].iter().map(|p| p.neg()).collect())
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        let n = self.gb.nvars;
        let mut full = v.to_vec();
        full.resize(self.rank + self.m, Poly::zero(n));
        let r = self.gb.reduce_columns(&full);
        r[..self.rank].iter().all(|p| p.is_zero())
    }

    pub fn syzygies(&self, q: &QuotientRing) -> Vec<Vec<Poly>> {
        let mut out: Vec<Vec<Poly>> = Vec::new();
        for g in self.gb.elems() {
            if g.terms().iter().any(|t| t.pos < self.rank) {
                continue;
            }
            let cols = g.to_columns(self.rank + self.m, self.gb.nvars);
            let s: Vec<Poly> = cols[self.rank..].iter().map(|p| q.nf(p)).collect();
            if s.iter().all(|p| p.is_zero()) || out.contains(&s) {
                continue;
            }
            out.push(s);
        }
        out
    }
}

/// Ring homomorphism `source -> target` given by images of the source
/// variables; only constructed after checking the source relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub source: QRing,
    pub target: QRing,
    pub images: Vec<Poly>,
}

impl RingHom {
    pub fn new(source: QRing, target: QRing, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.nvars() || source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        if images.iter().any(|p| p.nvars() != target.nvars()) {
            return Err(Error::RingMismatch);
        }
        let images: Vec<Poly> = images.iter().map(|p| target.nf(p)).collect();
        let h = RingHom { source, target, images };
        for f in &h.source.ideal {
            if !h.apply(f).is_zero() {
                return Err(Error::NotAHomomorphism(h.source.ring.format(f)));
            }
        }
        Ok(h)
    }

    pub fn identity(q: &QRing) -> Self {
        let n = q.nvars();
        RingHom { source: q.clone(), target: q.clone(), images: (0..n).map(|i| Poly::var(n, i)).collect() }
    }

    /// Image of a source polynomial, reduced in the target.
    pub fn apply(&self, p: &Poly) -> Poly {
        self.target.nf(&p.substitute(self.target.field(), &self.images, self.target.nvars()))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &RingHom) -> Result<RingHom> {
        if *self.target != *then.source {
            return Err(Error::RingMismatch);
        }
        let images = self.images.iter().map(|p| then.apply(p)).collect();
        Ok(RingHom { source: self.source.clone(), target: then.target.clone(), images })
    }

    pub fn same_map(&self, other: &RingHom) -> bool {
        self.images.len() == other.images.len()
            && self.images.iter().zip(&other.images).all(|(a, b)| self.target.equal(a, b))
    }

    /// Checks `self ∘ src_base = tgt_base` for base structure maps `A -> source`
    /// and `A -> target`.
    pub fn check_over_base(&self, src_base: &RingHom, tgt_base: &RingHom) -> Result<()> {
        let comp = src_base.then(self)?;
        for (i, (a, b)) in comp.images.iter().zip(&tgt_base.images).enumerate() {
            if !self.target.equal(a, b) {
                let name = &src_base.source.ring.vars[i];
                return Err(Error::NotOverBase(format!(
                    "{} maps to {} instead of {}",
                    name,
                    self.target.format(a),
                    self.target.format(b)
                )));
            }
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target && self.same_map(&RingHom::identity(&self.source))
    }
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.into();
    }
    (1..).map(|i| format!("{}{}", base, i)).find(|n| ring.var_index(n).is_none()).unwrap()
}

/// Adjoins `s` with `s*f = 1`; returns the new ring and the inclusion.
pub fn localize(q: &QRing, f: &Poly) -> Result<(QRing, RingHom)> {
    if q.is_zero(f) {
        return Err(Error::ZeroDenominator);
    }
    let n = q.nvars();
    let mut vars = q.ring.vars.clone();
    vars.push(fresh_name(&q.ring, "s"));
    let ring = Arc::new(PolyRing::new(q.field().clone(), vars, q.order()));
    let map: Vec<usize> = (0..n).collect();
    let mut ideal: Vec<Poly> = q.ideal.iter().map(|p| p.remap(n + 1, &map)).collect();
    let s = Poly::var(n + 1, n);
    ideal.push(s.mul(q.field(), &f.remap(n + 1, &map)).sub(&Poly::one(n + 1)));
    let target = QuotientRing::new(ring, ideal);
    let images = (0..n).map(|i| Poly::var(n + 1, i)).collect();
    let inc = RingHom::new(q.clone(), target.clone(), images)?;
    Ok((target, inc))
}

/// Variables of a maximal independent set modulo the ideal (largest size,
/// lexicographically first among those).
pub fn independent_set(q: &QuotientRing) -> Vec<usize> {
    let n = q.nvars();
    let gb = if q.order() == MonomialOrder::DegRevLex {
        q.gb().clone()
    } else {
        ideal_groebner(q.field(), n, MonomialOrder::DegRevLex, &q.ideal)
    };
    let leads: Vec<Monomial> = gb.leading_monomials().into_iter().map(|(m, _)| m).collect();
    let mut best: Vec<usize> = Vec::new();
    let mut found = false;
    for size in (0..=n).rev() {
        for_each_subset(n, size, &mut |s: &[usize]| {
            if found {
                return;
            }
            let ok = leads.iter().all(|m| m.support().any(|v| !s.contains(&v)));
            if ok {
                best = s.to_vec();
                found = true;
            }
        });
        if found {
            break;
        }
    }
    best
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Number of monomials in the first `nz` variables not divisible by any of
/// `leads` (restricted to those variables); `None` if infinite.
pub fn count_standard(leads: &[Monomial], nz: usize) -> Option<usize> {
    let leads: Vec<Vec<u32>> = leads.iter().map(|m| m.0[..nz].to_vec()).collect();
    let mut bound = vec![0u32; nz];
    for (v, b) in bound.iter_mut().enumerate() {
        *b = leads
            .iter()
            .filter(|m| m.iter().enumerate().all(|(i, e)| i == v || *e == 0))
            .map(|m| m[v])
            .filter(|&e| e > 0)
            .min()?;
    }
    if leads.iter().any(|m| m.iter().all(|e| *e == 0)) {
        return Some(0);
    }
    let mut count = 0;
    let mut e = vec![0u32; nz];
    loop {
        if !leads.iter().any(|m| m.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == nz {
                return Some(count);
            }
            e[i] += 1;
            if e[i] < bound[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// `B ⊗ A'` presented in one polynomial ring: the variables of `B` followed by
/// those of `A`, with `a_i - h(a_i)` adjoined.
#[derive(Clone, Debug)]
pub struct GraphRing {
    pub nb: usize,
    pub na: usize,
    pub ideal: Vec<Poly>,
}

impl GraphRing {
    pub fn new(h: &RingHom) -> Self {
        let nb = h.target.nvars();
        let na = h.source.nvars();
        let n = nb + na;
        let bmap: Vec<usize> = (0..nb).collect();
        let amap: Vec<usize> = (nb..n).collect();
        let mut ideal: Vec<Poly> = h.target.ideal.iter().map(|p| p.remap(n, &bmap)).collect();
        ideal.extend(h.source.ideal.iter().map(|p| p.remap(n, &amap)));
        for (i, img) in h.images.iter().enumerate() {
            ideal.push(Poly::var(n, nb + i).sub(&img.remap(n, &bmap)));
        }
        GraphRing { nb, na, ideal }
    }

    pub fn nvars(&self) -> usize {
        self.nb + self.na
    }

    pub fn from_b(&self, p: &Poly) -> Poly {
        let map: Vec<usize> = (0..self.nb).collect();
        p.remap(self.nvars(), &map)
    }

    pub fn from_a(&self, p: &Poly) -> Poly {
        let map: Vec<usize> = (self.nb..self.nvars()).collect();
        p.remap(self.nvars(), &map)
    }

    /// Back to `A` for a polynomial free of the `B` variables.
    pub fn to_a(&self, p: &Poly) -> Option<Poly> {
        if (0..self.nb).any(|i| p.uses_var(i)) {
            return None;
        }
        let map: Vec<usize> = (0..self.nb).map(|_| 0).chain(0..self.na).collect();
        Some(p.remap(self.na, &map))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankStrategy {
    /// Specialize the base at random integer points and count fiber lengths.
    Random { seed: u64 },
    /// Exact count over the function field of a transcendence basis.
    Exact,
}

/// `dim_{K(A)} B ⊗_A K(A)` for a finite extension `h: A -> B` of domains.
pub fn generic_rank(h: &RingHom, strategy: RankStrategy) -> Result<usize> {
    match strategy {
        RankStrategy::Exact => exact_rank(h),
        RankStrategy::Random { seed } => random_rank(h, seed),
    }
}

/// Polynomials with the variables permuted so that `first` come first.
fn reorder(ps: &[Poly], n: usize, first: &[usize]) -> Vec<Poly> {
    let mut map = vec![0; n];
    let mut next = 0;
    for &v in first {
        map[v] = next;
        next += 1;
    }
    for (v, slot) in map.iter_mut().enumerate() {
        if !first.contains(&v) {
            *slot = next;
            next += 1;
        }
    }
    ps.iter().map(|p| p.remap(n, &map)).collect()
}

fn generic_length(field: &Field, ideal: &[Poly], n: usize, free: &[usize]) -> Option<usize> {
    let z: Vec<usize> = (0..n).filter(|v| !free.contains(v)).collect();
    let ps = reorder(ideal, n, &z);
    let gb = ideal_groebner(field, n, MonomialOrder::Block(z.len()), &ps);
    let leads: Vec<Monomial> = gb.leading_monomials().into_iter().map(|(m, _)| m).collect();
    // leading terms purely in the free block mean the ideal meets k[free]
    if leads.iter().any(|m| m.0[..z.len()].iter().all(|e| *e == 0)) {
        return Some(0);
    }
    count_standard(&leads, z.len())
}

fn exact_rank(h: &RingHom) -> Result<usize> {
    let t = independent_set(&h.source);
    let g = GraphRing::new(h);
    let field = h.source.field();
    let da = generic_length(field, &h.source.ideal, g.na, &t)
        .ok_or_else(|| Error::RankFailure("base is not finite over its independent set".into()))?;
    let free: Vec<usize> = t.iter().map(|v| g.nb + v).collect();
    let db = generic_length(field, &g.ideal, g.nvars(), &free)
        .ok_or_else(|| Error::NotModuleFinite("generic fiber is infinite".into()))?;
    if da == 0 || db % da != 0 {
        return Err(Error::RankFailure(format!("fiber lengths {} over {}", db, da)));
    }
    Ok(db / da)
}

fn fiber_length(field: &Field, ideal: &[Poly], n: usize, point: &[(usize, Scalar)]) -> Option<usize> {
    let mut gens = ideal.to_vec();
    for (v, c) in point {
        gens.push(Poly::var(n, *v).sub(&Poly::constant(n, c.clone())));
    }
    let gb = ideal_groebner(field, n, MonomialOrder::DegRevLex, &gens);
    let leads: Vec<Monomial> = gb.leading_monomials().into_iter().map(|(m, _)| m).collect();
    count_standard(&leads, n)
}

fn random_rank(h: &RingHom, seed: u64) -> Result<usize> {
    let t = independent_set(&h.source);
    let g = GraphRing::new(h);
    let field = h.source.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results: Vec<usize> = Vec::new();
    let mut infinite = 0;
    for _ in 0..12 {
        if results.len() >= 3 {
            break;
        }
        let vals: Vec<Scalar> = t.iter().map(|_| Scalar::from_int(rng.gen_range(-10_000i64..=10_000))).collect();
        let pa: Vec<(usize, Scalar)> = t.iter().copied().zip(vals.iter().cloned()).collect();
        let pb: Vec<(usize, Scalar)> = t.iter().map(|v| g.nb + v).zip(vals.iter().cloned()).collect();
        let da = match fiber_length(field, &h.source.ideal, g.na, &pa) {
            Some(d) if d > 0 => d,
            _ => continue,
        };
        match fiber_length(field, &g.ideal, g.nvars(), &pb) {
            None => infinite += 1,
            Some(db) if db % da == 0 && db > 0 => results.push(db / da),
            Some(_) => {}
        }
    }
    if results.is_empty() {
        return Err(if infinite > 0 {
            Error::NotModuleFinite("specialized fibers are infinite".into())
        } else {
            Error::DegenerateSpecialization
        });
    }
    let mut votes: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &results {
        *votes.entry(*r).or_default() += 1;
    }
    let best = votes.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).unwrap();
    Ok(*best.0)
}

/// `B` viewed as an `A`-module through an explicit generating set.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub hom: RingHom,
    pub basis: Vec<Poly>,
    graph: GraphRing,
    gb: Gb,
    syz: Vec<Vec<Poly>>,
}

impl Restriction {
    pub fn new(hom: &RingHom, basis: Vec<Poly>) -> Result<Self> {
        let graph = GraphRing::new(hom);
        let n = graph.nvars();
        let m = basis.len();
        let field = hom.source.field();
        let order = ModuleOrder::split(MonomialOrder::Block(graph.nb), 1 + m, 1);
        let mut vs = Vec::new();
        for (k, b) in basis.iter().enumerate() {
            let mut cols = vec![Poly::zero(n); 1 + m];
            cols[0] = graph.from_b(b);
            cols[1 + k] = Poly::one(n).neg();
            vs.push(Vector::from_columns(&cols, &order));
        }
        for f in &graph.ideal {
            let mut cols = vec![Poly::zero(n); 1 + m];
            cols[0] = f.clone();
            vs.push(Vector::from_columns(&cols, &order));
        }
        for k in 0..m {
            for f in &hom.source.ideal {
                let mut cols = vec![Poly::zero(n); 1 + m];
                cols[1 + k] = graph.from_a(f);
                vs.push(Vector::from_columns(&cols, &order));
            }
        }
        let gb = groebner(field, n, &order, &vs);
        let mut syz = Vec::new();
        for g in gb.elems() {
            if g.terms().iter().any(|t| t.pos == 0) {
                continue;
            }
            let cols = g.to_columns(1 + m, n);
            let Some(s) = cols[1..].iter().map(|p| graph.to_a(p)).collect::<Option<Vec<Poly>>>() else {
                continue;
            };
            let s: Vec<Poly> = s.iter().map(|p| hom.source.nf(p)).collect();
            if s.iter().any(|p| !p.is_zero()) && !syz.contains(&s) {
                syz.push(s);
            }
        }
        let r = Restriction { hom: hom.clone(), basis, graph, gb, syz };
        for i in 0..hom.target.nvars() {
            r.coords(&Poly::var(hom.target.nvars(), i))?;
        }
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn base(&self) -> &QRing {
        &self.hom.source
    }

    /// `A`-linear relations among the generators.
    pub fn syzygies(&self) -> &[Vec<Poly>] {
        &self.syz
    }

    /// Coefficients `a` in `A` with `b = sum a_k basis_k`.
    pub fn coords(&self, b: &Poly) -> Result<Vec<Poly>> {
        let n = self.graph.nvars();
        let m = self.basis.len();
        let mut cols = vec![Poly::zero(n); 1 + m];
        cols[0] = self.graph.from_b(b);
        let r = self.gb.reduce_columns(&cols);
        if !r[0].is_zero() {
            return Err(Error::NotModuleFinite(format!(
                "{} is not in the span of the generating set",
                self.hom.target.format(b)
            )));
        }
        r[1..]
            .iter()
            .map(|p| {
                self.graph
                    .to_a(p)
                    .map(|a| self.hom.source.nf(&a))
                    .ok_or_else(|| Error::NotModuleFinite("coordinates do not lie in the base".into()))
            })
            .collect()
    }

    /// Element of `B` with the given coordinates.
    pub fn combine(&self, a: &[Poly]) -> Poly {
        let mut out = self.hom.target.ring.zero();
        for (ak, bk) in a.iter().zip(&self.basis) {
            out = out.add(&self.hom.apply(ak).mul(self.hom.target.field(), bk));
        }
        self.hom.target.nf(&out)
    }

    /// True if the generating set is an `A`-basis.
    pub fn is_free(&self) -> bool {
        self.syz.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use alloc::string::ToString;

    pub(crate) fn qring(field: &Field, vars: &[&str], ideal: &[&str]) -> QRing {
        let ring = Arc::new(PolyRing::new(
            field.clone(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        ));
        let ideal = ideal.iter().map(|s| crate::syntax::parse_poly(&ring, s).unwrap()).collect();
        QuotientRing::new(ring, ideal)
    }

    fn hom(src: &QRing, tgt: &QRing, imgs: &[&str]) -> Result<RingHom> {
        let images = imgs.iter().map(|s| crate::syntax::parse_poly(&tgt.ring, s).unwrap()).collect();
        RingHom::new(src.clone(), tgt.clone(), images)
    }

    fn zeta3() -> Field {
        Field::extension(vec![rat(1), rat(1), rat(1)], "w").unwrap().0
    }

    fn cone_b(k: &Field) -> QRing {
        qring(k, &["x", "y", "u", "v"], &["x^3 - u*v^2", "y^3 - u^2*v", "x^2 - y*v", "y^2 - x*u", "x*y - u*v"])
    }

    #[test]
    fn cone_ideal_normal_forms() {
        let k = zeta3();
        let b = cone_b(&k);
        assert_eq!(b.format(&b.var("x").unwrap().pow(&k, 3)), "u*v^2");
        assert_eq!(b.format(&b.var("x").unwrap().mul(&k, &b.var("y").unwrap())), "u*v");
        assert!(b.is_zero(&Poly::zero(4)));
    }

    #[test]
    fn hom_checks() {
        let q = Field::rationals();
        let a = qring(&q, &["t"], &[]);
        let b = qring(&q, &["y"], &[]);
        let inc = hom(&a, &b, &["y^2"]).unwrap();
        let sigma = hom(&b, &b, &["-y"]).unwrap();
        sigma.check_over_base(&inc, &inc).unwrap();
        let bad = qring(&q, &["y"], &["y^2"]);
        assert!(matches!(hom(&bad, &bad, &["y + 1"]), Err(Error::NotAHomomorphism(_))));
        let k = zeta3();
        let pa = qring(&k, &["u", "v"], &[]);
        let pb = cone_b(&k);
        let inc = hom(&pa, &pb, &["u", "v"]).unwrap();
        let g = hom(&pb, &pb, &["w*x", "(-w - 1)*y", "u", "v"]).unwrap();
        g.check_over_base(&inc, &inc).unwrap();
        let shift = hom(&pb, &pb, &["x", "y", "v", "u"]);
        assert!(
            matches!(shift, Err(Error::NotAHomomorphism(_))) || shift.unwrap().check_over_base(&inc, &inc).is_err()
        );
    }

    #[test]
    fn ranks() {
        let q = Field::rationals();
        let a = qring(&q, &["t"], &[]);
        let b = qring(&q, &["y"], &[]);
        let inc = hom(&a, &b, &["y^2"]).unwrap();
        assert_eq!(generic_rank(&inc, RankStrategy::Exact).unwrap(), 2);
        assert_eq!(generic_rank(&inc, RankStrategy::Random { seed: 0 }).unwrap(), 2);
        assert_eq!(generic_rank(&RingHom::identity(&a), RankStrategy::Exact).unwrap(), 1);
        let k = zeta3();
        let pa = qring(&k, &["u", "v"], &[]);
        let pb = cone_b(&k);
        let inc = hom(&pa, &pb, &["u", "v"]).unwrap();
        assert_eq!(generic_rank(&inc, RankStrategy::Exact).unwrap(), 3);
        assert_eq!(generic_rank(&inc, RankStrategy::Random { seed: 7 }).unwrap(), 3);
        // not module-finite: Q[t] -> Q[t, y]
        let c = qring(&q, &["t", "y"], &[]);
        let inc = hom(&a, &c, &["t"]).unwrap();
        assert!(matches!(generic_rank(&inc, RankStrategy::Exact), Err(Error::NotModuleFinite(_))));
        assert!(matches!(generic_rank(&inc, RankStrategy::Random { seed: 1 }), Err(Error::NotModuleFinite(_))));
    }

    #[test]
    fn localizations() {
        let q = Field::rationals();
        let a = qring(&q, &["t"], &[]);
        let (at, _) = localize(&a, &a.var("t").unwrap()).unwrap();
        assert_eq!(at.ring.vars, vec!["t".to_string(), "s".to_string()]);
        assert_eq!(at.ring.format(&at.ideal[0]), "t*s - 1");
        assert!(matches!(localize(&a, &Poly::zero(1)), Err(Error::ZeroDenominator)));
        let c = qring(&q, &["x", "y"], &["x^2 + y^2 - 1"]);
        let (cy, _) = localize(&c, &c.var("y").unwrap()).unwrap();
        assert_eq!(cy.ideal.len(), 2);
        // localizing at t then at t + 1 has the same degree over Q[t] as at t*(t+1)
        let (a1, i1) = localize(&a, &a.var("t").unwrap()).unwrap();
        let tp1 = a1.var("t").unwrap().add(&Poly::one(2));
        let (_, i2) = localize(&a1, &tp1).unwrap();
        let both = i1.then(&i2).unwrap();
        let prod = a.var("t").unwrap().mul(&q, &a.var("t").unwrap().add(&Poly::one(1)));
        let (_, i3) = localize(&a, &prod).unwrap();
        assert_eq!(generic_rank(&both, RankStrategy::Exact).unwrap(), generic_rank(&i3, RankStrategy::Exact).unwrap());
    }

    #[test]
    fn restriction_of_scalars() {
        let k = zeta3();
        let pa = qring(&k, &["u", "v"], &[]);
        let pb = cone_b(&k);
        let inc = hom(&pa, &pb, &["u", "v"]).unwrap();
        let basis = vec![Poly::one(4), pb.var("x").unwrap(), pb.var("y").unwrap()];
        let r = Restriction::new(&inc, basis).unwrap();
        assert!(r.is_free());
        let x2 = pb.var("x").unwrap().pow(&k, 2);
        let c = r.coords(&x2).unwrap();
        assert_eq!(c.iter().map(|p| pa.format(p)).collect::<Vec<_>>(), vec!["0", "0", "v"]);
        assert!(pb.equal(&r.combine(&c), &x2));
        let bad = Restriction::new(&inc, vec![Poly::one(4), pb.var("x").unwrap()]);
        assert!(matches!(bad, Err(Error::NotModuleFinite(_))));
    }

    #[test]
    fn syzygies_and_lifts() {
        let q = Field::rationals();
        let r = qring(&q, &["x", "y"], &["x*y"]);
        let x = r.var("x").unwrap();
        let ker = r.kernel(&[vec![x.clone()]], &[], 1);
        let printed: Vec<_> = ker.iter().map(|v| r.format(&v[0])).collect();
        assert_eq!(printed, vec!["y"]);
        let l = Lifter::new(&r, &[vec![x.clone()]], &[], 1);
        assert_eq!(r.format(&l.lift(&[x.pow(&q, 3)]).unwrap()[0]), "x^2");
        assert!(l.lift(&[r.var("y").unwrap()]).is_none());
    }
}
