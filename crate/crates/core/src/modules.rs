//! Finitely presented modules over quotient rings: kernels, Hom-modules,
//! duals and biduals, invariants of semilinear group actions, and colon
//! ideals measuring how far a fraction is from the module.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Gb;
use crate::poly::Poly;
use crate::ring::{Lifter, QRing, Restriction, RingHom};
use crate::scalars::Scalar;

/// `R^g / (relations)`; the ideal of `R` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    pub ring: QRing,
    pub labels: Vec<String>,
    pub relations: Vec<Vec<Poly>>,
}

fn zero_vec(n: usize, g: usize) -> Vec<Poly> {
    vec![Poly::zero(n); g]
}

fn unit_vec(n: usize, g: usize, i: usize) -> Vec<Poly> {
    let mut v = zero_vec(n, g);
    v[i] = Poly::one(n);
    v
}

fn default_labels(g: usize) -> Vec<String> {
    (0..g).map(|i| format!("e{}", i + 1)).collect()
}

impl PresentedModule {
    pub fn new(ring: &QRing, labels: Vec<String>, relations: Vec<Vec<Poly>>) -> Self {
        let g = labels.len();
        let mut rels: Vec<Vec<Poly>> = relations
            .into_iter()
            .map(|r| {
                debug_assert_eq!(r.len(), g);
                r.iter().map(|p| ring.nf(p)).collect::<Vec<_>>()
            })
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .collect();
        rels.sort();
        rels.dedup();
        PresentedModule { ring: ring.clone(), labels, relations: rels }
    }

    pub fn with_generators(ring: &QRing, g: usize, relations: Vec<Vec<Poly>>) -> Self {
        Self::new(ring, default_labels(g), relations)
    }

    pub fn free(ring: &QRing, g: usize) -> Self {
        Self::with_generators(ring, g, Vec::new())
    }

    pub fn ngens(&self) -> usize {
        self.labels.len()
    }

    fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn zero_vector(&self) -> Vec<Poly> {
        zero_vec(self.n(), self.ngens())
    }

    pub fn unit(&self, i: usize) -> Vec<Poly> {
        unit_vec(self.n(), self.ngens(), i)
    }

    /// Gröbner basis of the relation submodule; its normal form is canonical.
    pub fn relation_gb(&self) -> Gb {
        self.ring.module_gb(&self.relations, self.ngens())
    }

    pub fn is_zero_element(&self, v: &[Poly]) -> bool {
        self.relation_gb().reduce_columns(v).iter().all(|p| p.is_zero())
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// True when every generator is zero.
    pub fn is_zero(&self) -> bool {
        let gb = self.relation_gb();
        (0..self.ngens()).all(|i| gb.reduce_columns(&self.unit(i)).iter().all(|p| p.is_zero()))
    }

    pub fn format_vector(&self, v: &[Poly]) -> String {
        let mut out = String::new();
        for (p, label) in v.iter().zip(&self.labels) {
            let p = self.ring.nf(p);
            if p.is_zero() {
                continue;
            }
            let s = self.ring.ring.format(&p);
            let compound = self.ring.ring.is_compound(&p);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, String::from(rest)),
                _ => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if body != "1" {
                if compound {
                    out.push('(');
                    out.push_str(&body);
                    out.push(')');
                } else {
                    out.push_str(&body);
                }
                out.push('*');
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn format_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| self.format_vector(r)).collect()
    }

    /// Rank over the fraction field, assuming the ring is a domain.
    pub fn generic_rank(&self) -> usize {
        self.ngens() - matrix_rank(&self.ring, &self.relations)
    }

    pub fn direct_sum(&self, copies: usize) -> PresentedModule {
        let g = self.ngens();
        let n = self.n();
        let mut labels = Vec::new();
        let mut rels = Vec::new();
        for c in 0..copies {
            labels.extend(self.labels.iter().map(|l| format!("{}[{}]", l, c + 1)));
            for r in &self.relations {
                let mut v = zero_vec(n, g * copies);
                v[c * g..(c + 1) * g].clone_from_slice(r);
                rels.push(v);
            }
        }
        PresentedModule::new(&self.ring, labels, rels)
    }
}

/// Drops generators that some relation expresses through the others with a
/// constant coefficient. The surviving generators are a subset of the old.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: PresentedModule,
    pub keep: Vec<usize>,
    steps: Vec<(usize, Vec<Poly>, Scalar)>,
}

impl Pruned {
    /// Coordinates in the pruned module of a vector in the old generators.
    pub fn reduce(&self, v: &[Poly]) -> Vec<Poly> {
        let ring = &self.module.ring;
        let k = ring.field();
        let mut v = v.to_vec();
        for (i, row, c) in &self.steps {
            if v[*i].is_zero() {
                continue;
            }
            let f = v[*i].scale(k, &k.inv(c).unwrap());
            v = v.iter().zip(row).map(|(a, b)| ring.nf(&a.sub(&f.mul(k, b)))).collect();
        }
        self.keep.iter().map(|&i| v[i].clone()).collect()
    }
}

pub fn prune(m: &PresentedModule) -> Pruned {
    let ring = &m.ring;
    let k = ring.field();
    let g = m.ngens();
    let mut rows = m.relations.clone();
    let mut dead = vec![false; g];
    let mut steps = Vec::new();
    loop {
        let mut pivot = None;
        'search: for i in 0..g {
            if dead[i] {
                continue;
            }
            for (r, row) in rows.iter().enumerate() {
                if let Some(c) = row[i].constant_value().filter(|c| !c.is_zero()) {
                    pivot = Some((i, r, c));
                    break 'search;
                }
            }
        }
        let Some((i, r, c)) = pivot else { break };
        let prow = rows.remove(r);
        let inv = k.inv(&c).unwrap();
        for row in rows.iter_mut() {
            if row[i].is_zero() {
                continue;
            }
            let f = row[i].scale(k, &inv);
            *row = row.iter().zip(&prow).map(|(a, b)| ring.nf(&a.sub(&f.mul(k, b)))).collect();
        }
        dead[i] = true;
        steps.push((i, prow, c));
    }
    let keep: Vec<usize> = (0..g).filter(|&i| !dead[i]).collect();
    let rels = rows.iter().map(|r| keep.iter().map(|&i| r[i].clone()).collect()).collect();
    let labels = keep.iter().map(|&i| m.labels[i].clone()).collect();
    Pruned { module: PresentedModule::new(ring, labels, rels), keep, steps }
}

/// Rank of a list of row vectors over the fraction field of a domain,
/// by fraction-free elimination with zero tests modulo the ideal.
pub fn matrix_rank(ring: &QRing, rows: &[Vec<Poly>]) -> usize {
    let k = ring.field();
    let mut rows: Vec<Vec<Poly>> = rows.iter().map(|r| r.iter().map(|p| ring.nf(p)).collect()).collect();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let p = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            let e = rows[i][col].clone();
            if e.is_zero() {
                continue;
            }
            let new: Vec<Poly> =
                (0..ncols).map(|j| ring.nf(&rows[i][j].mul(k, &p).sub(&rows[rank][j].mul(k, &e)))).collect();
            rows[i] = new;
        }
        rank += 1;
    }
    rank
}

/// `R`-linear, or semilinear through `twist`, map between presented modules.
/// Column `j` is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: PresentedModule,
    pub target: PresentedModule,
    pub columns: Vec<Vec<Poly>>,
    pub twist: Option<RingHom>,
}

impl ModuleMap {
    pub fn new(
        source: PresentedModule,
        target: PresentedModule,
        columns: Vec<Vec<Poly>>,
        twist: Option<RingHom>,
    ) -> Result<Self> {
        if source.ring != target.ring || columns.len() != source.ngens() {
            return Err(Error::RingMismatch);
        }
        if let Some(t) = &twist {
            if *t.source != *source.ring || *t.target != *source.ring {
                return Err(Error::RingMismatch);
            }
        }
        let f = ModuleMap { source, target, columns, twist };
        let gb = f.target.relation_gb();
        for r in &f.source.relations {
            let img = f.apply(r);
            if gb.reduce_columns(&img).iter().any(|p| !p.is_zero()) {
                return Err(Error::IllDefinedMap(format!(
                    "relation {} maps to {}",
                    f.source.format_vector(r),
                    f.target.format_vector(&img)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(m: &PresentedModule) -> Self {
        let cols = (0..m.ngens()).map(|i| m.unit(i)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), columns: cols, twist: None }
    }

    /// Image of `sum v_j e_j`.
    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        let ring = &self.target.ring;
        let k = ring.field();
        let mut out = self.target.zero_vector();
        for (vj, col) in v.iter().zip(&self.columns) {
            let c = match &self.twist {
                Some(t) => t.apply(vj),
                None => vj.clone(),
            };
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(col) {
                *o = o.add(&c.mul(k, x));
            }
        }
        out.iter().map(|p| ring.nf(p)).collect()
    }

    /// `other ∘ self`; at most one of the two may be semilinear.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::RingMismatch);
        }
        let twist = match (&self.twist, &other.twist) {
            (Some(_), Some(_)) => return Err(Error::TwistMismatch),
            (Some(t), None) | (None, Some(t)) => Some(t.clone()),
            (None, None) => None,
        };
        let cols = self.columns.iter().map(|c| other.apply(c)).collect();
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), columns: cols, twist })
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.target.relation_gb();
        self.columns.iter().all(|c| gb.reduce_columns(c).iter().all(|p| p.is_zero()))
    }

    /// True iff the map is injective.
    pub fn is_injective(&self) -> Result<bool> {
        let (k, _) = kernel(self)?;
        Ok(k.is_zero())
    }

    /// True iff every target generator is in the image.
    pub fn is_surjective(&self) -> bool {
        self.surjectivity_witness().is_none()
    }

    /// A target generator outside the image, if any.
    pub fn surjectivity_witness(&self) -> Option<usize> {
        let lifter = Lifter::new(&self.target.ring, &self.columns, &self.target.relations, self.target.ngens());
        (0..self.target.ngens()).find(|&i| !lifter.contains(&self.target.unit(i)))
    }
}

/// Kernel of a linear map with its inclusion into the source.
pub fn kernel(f: &ModuleMap) -> Result<(PresentedModule, ModuleMap)> {
    if f.twist.is_some() {
        return Err(Error::TwistMismatch);
    }
    let ring = &f.source.ring;
    let g = f.source.ngens();
    let syz = ring.kernel(&f.columns, &f.target.relations, f.target.ngens());
    let src_gb = f.source.relation_gb();
    let mut gens: Vec<Vec<Poly>> = Vec::new();
    for s in syz {
        let r = src_gb.reduce_columns(&s);
        if r.iter().all(|p| p.is_zero()) || gens.contains(&r) {
            continue;
        }
        gens.push(r);
    }
    let rels = ring.kernel(&gens, &f.source.relations, g);
    let pr = prune(&PresentedModule::with_generators(ring, gens.len(), rels));
    let gens: Vec<Vec<Poly>> = pr.keep.iter().map(|&i| gens[i].clone()).collect();
    let k = PresentedModule::with_generators(ring, gens.len(), pr.module.relations);
    let inc = ModuleMap { source: k.clone(), target: f.source.clone(), columns: gens, twist: None };
    Ok((k, inc))
}

/// `Hom(M, N)`; each generator is a `g_M x g_N` matrix stored row-major
/// (row `j` is the image of the `j`-th generator of `M`).
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: PresentedModule,
    pub maps: Vec<Vec<Poly>>,
    pub source: PresentedModule,
    pub target: PresentedModule,
}

impl HomModule {
    /// The map `M -> N` encoded by a vector of `Hom` coordinates.
    pub fn decode(&self, v: &[Poly]) -> ModuleMap {
        let g = self.source.ngens();
        let h = self.target.ngens();
        let ring = &self.source.ring;
        let k = ring.field();
        let mut cols = vec![zero_vec(ring.nvars(), h); g];
        for (c, phi) in v.iter().zip(&self.maps) {
            for j in 0..g {
                for l in 0..h {
                    cols[j][l] = ring.nf(&cols[j][l].add(&c.mul(k, &phi[j * h + l])));
                }
            }
        }
        ModuleMap { source: self.source.clone(), target: self.target.clone(), columns: cols, twist: None }
    }
}

pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<HomModule> {
    if m.ring != n.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &m.ring;
    let g = m.ngens();
    let h = n.ngens();
    let nv = ring.nvars();
    let src = n.direct_sum(g);
    let tgt = n.direct_sum(m.relations.len());
    // column (j, l): phi = E_{j,l} contributes rho_{i,j} e_l to block i
    let mut cols = Vec::with_capacity(g * h);
    for j in 0..g {
        for l in 0..h {
            let mut c = zero_vec(nv, h * m.relations.len());
            for (i, rho) in m.relations.iter().enumerate() {
                c[i * h + l] = rho[j].clone();
            }
            cols.push(c);
        }
    }
    let f = ModuleMap::new(src, tgt, cols, None)?;
    let (module, inc) = kernel(&f)?;
    Ok(HomModule { module, maps: inc.columns, source: m.clone(), target: n.clone() })
}

/// Dual, bidual, and the natural map `M -> M**`.
#[derive(Clone, Debug)]
pub struct BidualData {
    pub dual: PresentedModule,
    /// Functionals generating the dual, as vectors in `R^g`.
    pub functionals: Vec<Vec<Poly>>,
    pub bidual: PresentedModule,
    /// Bidual generators as vectors in `R^t`, `t` the number of functionals.
    pub evaluations: Vec<Vec<Poly>>,
    pub nat: ModuleMap,
}

impl BidualData {
    /// Bidual coordinates of an element of `R^t` lying in the bidual.
    pub fn lift_evaluation(&self, v: &[Poly]) -> Option<Vec<Poly>> {
        let ring = &self.dual.ring;
        Lifter::new(ring, &self.evaluations, &[], self.functionals.len()).lift(v)
    }

    /// The evaluation vector `(lambda_k(v))_k` of an element of `M`.
    pub fn evaluate(&self, v: &[Poly]) -> Vec<Poly> {
        let ring = &self.dual.ring;
        let k = ring.field();
        self.functionals
            .iter()
            .map(|lam| {
                let mut s = Poly::zero(ring.nvars());
                for (a, b) in lam.iter().zip(v) {
                    s = s.add(&a.mul(k, b));
                }
                ring.nf(&s)
            })
            .collect()
    }
}

/// Submodule of `R^g` given by `{x : sum_j r_j x_j = 0 for every row r}`
/// with generators and a presentation.
fn annihilated(ring: &QRing, g: usize, rows: &[Vec<Poly>]) -> (PresentedModule, Vec<Vec<Poly>>) {
    let nv = ring.nvars();
    let cols: Vec<Vec<Poly>> = (0..g).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let gens: Vec<Vec<Poly>> = if rows.is_empty() {
        (0..g).map(|j| unit_vec(nv, g, j)).collect()
    } else {
        ring.kernel(&cols, &[], rows.len())
    };
    let rels = ring.kernel(&gens, &[], g);
    let pr = prune(&PresentedModule::with_generators(ring, gens.len(), rels));
    let gens: Vec<Vec<Poly>> = pr.keep.iter().map(|&i| gens[i].clone()).collect();
    (PresentedModule::with_generators(ring, gens.len(), pr.module.relations), gens)
}

pub fn bidual_data(m: &PresentedModule) -> Result<BidualData> {
    let ring = &m.ring;
    let g = m.ngens();
    let (dual, functionals) = annihilated(ring, g, &m.relations);
    let t = functionals.len();
    let (bidual, evaluations) = annihilated(ring, t, &dual.relations);
    let lifter = Lifter::new(ring, &evaluations, &[], t);
    let mut cols = Vec::with_capacity(g);
    for j in 0..g {
        let ev: Vec<Poly> = functionals.iter().map(|lam| lam[j].clone()).collect();
        let c = lifter.lift(&ev).ok_or_else(|| Error::CheckFailed("evaluation does not lie in the bidual".into()))?;
        cols.push(c);
    }
    let nat = ModuleMap::new(m.clone(), bidual.clone(), cols, None)?;
    Ok(BidualData { dual, functionals, bidual, evaluations, nat })
}

/// `A`-module of invariant elements together with their images in `M`.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub module: PresentedModule,
    /// Each generator as an element of `M` (vector over `B`).
    pub elements: Vec<Vec<Poly>>,
    /// The restriction of `M` to `A` in which the computation happened.
    pub restricted: PresentedModule,
    /// Generators of the invariant module in restricted coordinates.
    pub coordinates: Vec<Vec<Poly>>,
}

/// `M` as an `A`-module: generator `(i, k)` at index `i * m + k` is
/// `basis_k * e_i`.
pub fn restrict(m: &PresentedModule, res: &Restriction) -> Result<PresentedModule> {
    let a = res.base();
    let na = a.nvars();
    let g = m.ngens();
    let mb = res.len();
    let mut rels = Vec::new();
    for s in res.syzygies() {
        for i in 0..g {
            let mut v = zero_vec(na, g * mb);
            for k in 0..mb {
                v[i * mb + k] = s[k].clone();
            }
            rels.push(v);
        }
    }
    let k = m.ring.field();
    for rho in &m.relations {
        for beta in &res.basis {
            let scaled: Vec<Poly> = rho.iter().map(|p| m.ring.nf(&p.mul(k, beta))).collect();
            rels.push(encode(&scaled, res, g)?);
        }
    }
    let mut labels = Vec::new();
    for l in &m.labels {
        for beta in &res.basis {
            labels.push(format!("({})*{}", m.ring.format(beta), l));
        }
    }
    Ok(PresentedModule::new(a, labels, rels))
}

/// Restricted coordinates of an element of `M`.
pub fn encode(v: &[Poly], res: &Restriction, g: usize) -> Result<Vec<Poly>> {
    let mb = res.len();
    let mut out = Vec::with_capacity(g * mb);
    for p in v {
        out.extend(res.coords(p)?);
    }
    debug_assert_eq!(out.len(), g * mb);
    Ok(out)
}

/// Element of `M` from restricted coordinates.
pub fn decode(a: &[Poly], res: &Restriction, g: usize) -> Vec<Poly> {
    let mb = res.len();
    (0..g).map(|i| res.combine(&a[i * mb..(i + 1) * mb])).collect()
}

/// Invariants of `M` under semilinear maps whose twists fix `A`.
pub fn invariants(m: &PresentedModule, actions: &[ModuleMap], res: &Restriction) -> Result<Invariants> {
    let g = m.ngens();
    let mb = res.len();
    let a = res.base();
    let na = a.nvars();
    for act in actions {
        if act.source != *m || act.target != *m {
            return Err(Error::ActionNotVerified("action is not an endomorphism of the module".into()));
        }
        if let Some(t) = &act.twist {
            t.check_over_base(&res.hom, &res.hom).map_err(|e| Error::ActionNotVerified(format!("{}", e)))?;
        }
    }
    let restricted = restrict(m, res)?;
    let nontrivial: Vec<&ModuleMap> = actions.iter().filter(|f| *f != &ModuleMap::identity(m)).collect();
    let big = restricted.direct_sum(nontrivial.len().max(1));
    let width = g * mb;
    let mut cols = Vec::with_capacity(width);
    for i in 0..g {
        for k in 0..mb {
            let mut col = zero_vec(na, width * nontrivial.len().max(1));
            let mut v = m.zero_vector();
            v[i] = res.basis[k].clone();
            for (s, act) in nontrivial.iter().enumerate() {
                let img = encode(&act.apply(&v), res, g)?;
                for (j, c) in img.into_iter().enumerate() {
                    col[s * width + j] = c;
                }
                let idx = s * width + i * mb + k;
                col[idx] = col[idx].sub(&Poly::one(na));
            }
            cols.push(col);
        }
    }
    let f = ModuleMap::new(restricted.clone(), big, cols, None)?;
    let (module, inc) = kernel(&f)?;
    let elements = inc.columns.iter().map(|c| decode(c, res, g)).collect();
    Ok(Invariants { module, elements, restricted, coordinates: inc.columns })
}

/// Colon ideal `{f : f * v / den lies in the image of R^g}` in `R^g / rels`,
/// with a polynomial representative when the ideal is the unit ideal.
#[derive(Clone, Debug)]
pub struct DenominatorIdeal {
    pub generators: Vec<Poly>,
    pub certificate: Option<Vec<Poly>>,
}

impl DenominatorIdeal {
    pub fn is_unit(&self) -> bool {
        self.certificate.is_some()
    }
}

pub fn denominator_ideal(v: &[Poly], den: &Poly, m: &PresentedModule) -> Result<DenominatorIdeal> {
    let ring = &m.ring;
    if ring.is_zero(den) {
        return Err(Error::ZeroDenominator);
    }
    let g = m.ngens();
    let nv = ring.nvars();
    let k = ring.field();
    let mut rels = m.relations.clone();
    for i in 0..g {
        let mut r = zero_vec(nv, g);
        r[i] = den.clone();
        rels.push(r);
    }
    let syz = ring.kernel(&[v.to_vec()], &rels, g);
    let gb = crate::groebner::ideal_groebner(
        k,
        nv,
        ring.order(),
        &syz.iter().map(|s| s[0].clone()).chain(ring.ideal.iter().cloned()).collect::<Vec<_>>(),
    );
    let generators: Vec<Poly> = gb.polys();
    let certificate = if gb.is_unit() {
        let cols: Vec<Vec<Poly>> = (0..g)
            .map(|i| {
                let mut c = zero_vec(nv, g);
                c[i] = den.clone();
                c
            })
            .collect();
        let w = Lifter::new(ring, &cols, &m.relations, g)
            .lift(v)
            .ok_or_else(|| Error::CheckFailed("unit colon ideal without a lift".into()))?;
        Some(w.iter().map(|p| ring.nf(p)).collect())
    } else {
        None
    };
    Ok(DenominatorIdeal { generators, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, PolyRing};
    use crate::ring::QuotientRing;
    use crate::scalars::Field;
    use alloc::string::ToString;
    use alloc::sync::Arc;

    pub(crate) fn qring(vars: &[&str], ideal: &[&str]) -> QRing {
        let ring = Arc::new(PolyRing::new(
            Field::rationals(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        ));
        let ideal = ideal.iter().map(|s| crate::syntax::parse_poly(&ring, s).unwrap()).collect();
        QuotientRing::new(ring, ideal)
    }

    fn p(r: &QRing, s: &str) -> Poly {
        crate::syntax::parse_poly(&r.ring, s).unwrap()
    }

    #[test]
    fn kernels() {
        let r = qring(&["x"], &[]);
        let free = PresentedModule::free(&r, 1);
        let zero = ModuleMap::new(free.clone(), free.clone(), vec![vec![Poly::zero(1)]], None).unwrap();
        let (k, _) = kernel(&zero).unwrap();
        assert_eq!(k.ngens(), 1);
        assert!(k.is_free());
        let mulx = ModuleMap::new(free.clone(), free.clone(), vec![vec![p(&r, "x")]], None).unwrap();
        assert!(kernel(&mulx).unwrap().0.is_zero());
        let r2 = qring(&["x", "y"], &["x*y"]);
        let f2 = PresentedModule::free(&r2, 1);
        let mulx = ModuleMap::new(f2.clone(), f2.clone(), vec![vec![p(&r2, "x")]], None).unwrap();
        let (_, inc) = kernel(&mulx).unwrap();
        assert_eq!(inc.columns, vec![vec![p(&r2, "y")]]);
    }

    #[test]
    fn ill_defined_map() {
        let r = qring(&["x"], &[]);
        let torsion = PresentedModule::with_generators(&r, 1, vec![vec![p(&r, "x")]]);
        let free = PresentedModule::free(&r, 1);
        let f = ModuleMap::new(torsion, free, vec![vec![Poly::one(1)]], None);
        assert!(matches!(f, Err(Error::IllDefinedMap(_))));
    }

    #[test]
    fn hom_modules() {
        let r = qring(&["x"], &[]);
        let free = PresentedModule::free(&r, 1);
        let h = hom_module(&free, &free).unwrap();
        assert_eq!(h.module.ngens(), 1);
        assert!(h.module.is_free());
        let torsion = PresentedModule::with_generators(&r, 1, vec![vec![p(&r, "x")]]);
        assert!(hom_module(&torsion, &free).unwrap().module.is_zero());
        // the circle: 2x a + 2y b = 0 is solved by (y, -x), a free generator
        let c = qring(&["x", "y"], &["x^2 + y^2 - 1"]);
        let omega =
            PresentedModule::new(&c, vec!["d(x)".into(), "d(y)".into()], vec![vec![p(&c, "2*x"), p(&c, "2*y")]]);
        let h = hom_module(&omega, &PresentedModule::free(&c, 1)).unwrap();
        assert_eq!(h.module.generic_rank(), 1);
        assert!(h.module.is_free());
        assert_eq!(h.module.ngens(), 1);
        let phi = h.decode(&[Poly::one(2)]);
        // the functional sends y dx - x dy to a unit
        let v = vec![p(&c, "y"), p(&c, "-x")];
        let val = &phi.apply(&v)[0];
        assert!(c.nf(val).is_constant() && !val.is_zero());
    }

    #[test]
    fn biduals() {
        let r = qring(&["x"], &[]);
        let free = PresentedModule::free(&r, 2);
        let b = bidual_data(&free).unwrap();
        assert!(b.nat.is_injective().unwrap() && b.nat.is_surjective());
        let torsion = PresentedModule::with_generators(&r, 1, vec![vec![p(&r, "x")]]);
        let b = bidual_data(&torsion).unwrap();
        assert!(b.bidual.is_zero());
        assert!(b.nat.is_zero());
    }

    #[test]
    fn cusp_bidual() {
        // Omega of y^2 = x^3: 3y dx - 2x dy is torsion, so nat has a kernel;
        // the reflexive hull t k[t] dt is reached by the image
        let c = qring(&["x", "y"], &["y^2 - x^3"]);
        let omega =
            PresentedModule::new(&c, vec!["d(x)".into(), "d(y)".into()], vec![vec![p(&c, "-3*x^2"), p(&c, "2*y")]]);
        let b = bidual_data(&omega).unwrap();
        assert_eq!(b.bidual.generic_rank(), 1);
        assert_eq!(omega.generic_rank(), 1);
        assert!(!b.nat.is_injective().unwrap());
        let tors = vec![p(&c, "3*y"), p(&c, "-2*x")];
        assert!(!omega.is_zero_element(&tors));
        assert!(b.bidual.is_zero_element(&b.nat.apply(&tors)));
        assert!(b.nat.is_surjective());
    }

    #[test]
    fn colon_ideals() {
        let r = qring(&["t"], &[]);
        let omega = PresentedModule::new(&r, vec!["d(t)".into()], vec![]);
        let d = denominator_ideal(&[Poly::one(1)], &p(&r, "t"), &omega).unwrap();
        assert!(!d.is_unit());
        assert_eq!(d.generators, vec![p(&r, "t")]);
        let d = denominator_ideal(&[Poly::one(1)], &p(&r, "2"), &omega).unwrap();
        assert!(d.is_unit());
        assert_eq!(d.certificate.unwrap(), vec![p(&r, "1/2")]);
        let d = denominator_ideal(&[p(&r, "t^2")], &p(&r, "t"), &omega).unwrap();
        assert_eq!(d.certificate.unwrap(), vec![p(&r, "t")]);
        assert!(matches!(denominator_ideal(&[Poly::one(1)], &Poly::zero(1), &omega), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn kummer_invariants() {
        let a = qring(&["t"], &[]);
        let b = qring(&["y"], &[]);
        let inc = RingHom::new(a.clone(), b.clone(), vec![p(&b, "y^2")]).unwrap();
        let sigma = RingHom::new(b.clone(), b.clone(), vec![p(&b, "-y")]).unwrap();
        let res = Restriction::new(&inc, vec![Poly::one(1), p(&b, "y")]).unwrap();
        let m = PresentedModule::free(&b, 1);
        let act = ModuleMap::new(m.clone(), m.clone(), vec![vec![Poly::one(1)]], Some(sigma)).unwrap();
        let inv = invariants(&m, &[ModuleMap::identity(&m), act], &res).unwrap();
        assert_eq!(inv.module.ngens(), 1);
        assert!(inv.module.is_free());
        assert_eq!(inv.elements, vec![vec![Poly::one(1)]]);
        let trivial = invariants(&m, &[ModuleMap::identity(&m)], &res).unwrap();
        assert_eq!(trivial.module.ngens(), 2);
    }
}
