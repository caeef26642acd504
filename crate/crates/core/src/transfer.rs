//! Finite correspondences given by witness data and their action on forms.
//!
//! A prime correspondence from `X1` to `X2` is a subvariety `Z` of
//! `X1 x X2`, finite over `X1`, together with a Galois cover `W -> X1` and the
//! list of all `X1`-morphisms `W -> Z`. Forms on `X2` are pulled back to `Z`,
//! then to `W` along every listed morphism, summed and descended to `X1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::descent::{Descender, GaloisCoverDatum};
use crate::error::{Error, Result};
use crate::kaehler::{omega_p, AffineVariety, PForm};
use crate::poly::{MonomialOrder, Poly, PolyRing};
use crate::report::Report;
use crate::ring::{generic_rank, GraphRing, QRing, QuotientRing, RankStrategy, RingHom};

/// Product of affine varieties with its projections. Clashing variable names
/// get primes appended.
pub fn product(factors: &[&QRing]) -> Result<(QRing, Vec<RingHom>)> {
    let n: usize = factors.iter().map(|q| q.nvars()).sum();
    let field = factors.first().ok_or_else(|| Error::InvalidInput("empty product".into()))?.field().clone();
    let mut names: Vec<String> = Vec::new();
    let mut ideal = Vec::new();
    let mut offsets = Vec::new();
    for q in factors {
        if *q.field() != field {
            return Err(Error::RingMismatch);
        }
        offsets.push(names.len());
        let map: Vec<usize> = (names.len()..names.len() + q.nvars()).collect();
        for v in &q.ring.vars {
            let mut name = v.clone();
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        ideal.extend(q.ideal.iter().map(|p| p.remap(n, &map)));
    }
    let ring = Arc::new(PolyRing::new(field, names, MonomialOrder::DegRevLex));
    let prod = QuotientRing::new(ring, ideal);
    let mut projections = Vec::new();
    for (q, off) in factors.iter().zip(offsets) {
        let images = (0..q.nvars()).map(|i| Poly::var(n, off + i)).collect();
        projections.push(RingHom::new((*q).clone(), prod.clone(), images)?);
    }
    Ok((prod, projections))
}

/// `ambient / (ideal)`.
fn subvariety(ambient: &QRing, ideal: &[Poly]) -> QRing {
    let mut gens = ambient.ideal.clone();
    gens.extend(ideal.iter().cloned());
    QuotientRing::new(ambient.ring.clone(), gens)
}

/// Canonical text of an ideal of `ambient`: its reduced Gröbner basis with the
/// ambient relations included.
pub fn ideal_key(ambient: &QRing, ideal: &[Poly]) -> String {
    let q = subvariety(ambient, ideal);
    let gens: Vec<String> = q.gb().polys().iter().map(|p| q.ring.format(p)).collect();
    format!("V({})", gens.join(", "))
}

/// Generators of the kernel of `h`.
pub fn preimage(h: &RingHom) -> Vec<Poly> {
    let g = GraphRing::new(h);
    let a = &h.source;
    let mut names: Vec<String> = h.target.ring.vars.clone();
    names.extend(a.ring.vars.iter().map(|v| format!("{}'", v)));
    let ring = Arc::new(PolyRing::new(a.field().clone(), names, MonomialOrder::Block(g.nb)));
    let q = QuotientRing::new(ring, g.ideal.clone());
    let mut out: Vec<Poly> =
        q.gb().polys().iter().filter_map(|p| g.to_a(p)).map(|p| a.nf(&p)).filter(|p| !p.is_zero()).collect();
    out.dedup();
    out
}

/// One irreducible component with its transfer witness.
#[derive(Clone, Debug)]
pub struct PrimeCorrespondence {
    pub source: AffineVariety,
    pub target: AffineVariety,
    /// Ideal of `Z` in the coordinates of `X1 x X2`.
    pub ideal: Vec<Poly>,
    pub ring: QRing,
    pub to_source: RingHom,
    pub to_target: RingHom,
    pub cover: GaloisCoverDatum,
    pub homs: Vec<RingHom>,
    descender: Descender,
}

impl PrimeCorrespondence {
    /// `homs` lists the images of the coordinates of `X1 x X2` in the cover
    /// for each `X1`-morphism `W -> Z`.
    pub fn new(
        source: &AffineVariety,
        target: &AffineVariety,
        ideal: Vec<Poly>,
        cover: &GaloisCoverDatum,
        homs: &[Vec<Poly>],
    ) -> Result<Self> {
        if !source.flags.smooth {
            return Err(Error::InvalidInput(format!("source {} is not asserted smooth", source.name)));
        }
        if *cover.base.ring != *source.ring {
            return Err(Error::WitnessInvalid("the cover is not over the source".into()));
        }
        let (prod, proj) = product(&[&source.ring, &target.ring])?;
        let ring = subvariety(&prod, &ideal);
        if ring.is_trivial() {
            return Err(Error::InvalidInput("the component is empty".into()));
        }
        let to_source = RingHom::new(source.ring.clone(), ring.clone(), proj[0].images.clone())?;
        let to_target = RingHom::new(target.ring.clone(), ring.clone(), proj[1].images.clone())?;
        let degree = generic_rank(&to_source, RankStrategy::Exact)
            .map_err(|e| Error::RankFailure(format!("component is not finite over the source: {}", e)))?;
        let mut qs: Vec<RingHom> = Vec::new();
        for (i, images) in homs.iter().enumerate() {
            let q = RingHom::new(ring.clone(), cover.b().clone(), images.clone())
                .map_err(|e| Error::WitnessInvalid(format!("morphism {}: {}", i + 1, e)))?;
            if !to_source.then(&q)?.same_map(&cover.inclusion) {
                return Err(Error::WitnessInvalid(format!("morphism {} is not over the source", i + 1)));
            }
            if qs.iter().any(|p| p.same_map(&q)) {
                return Err(Error::WitnessInvalid(format!("morphism {} is listed twice", i + 1)));
            }
            qs.push(q);
        }
        if qs.len() != degree {
            return Err(Error::WitnessInvalid(format!("{} morphisms listed, degree is {}", qs.len(), degree)));
        }
        let descender = Descender::new(cover)?;
        Ok(PrimeCorrespondence {
            source: source.clone(),
            target: target.clone(),
            ideal,
            ring,
            to_source,
            to_target,
            cover: cover.clone(),
            homs: qs,
            descender,
        })
    }

    /// Graph of `f: X1 -> X2`, given by the images of the coordinates of `X2`.
    pub fn graph(source: &AffineVariety, target: &AffineVariety, f: &[Poly]) -> Result<Self> {
        let (prod, proj) = product(&[&source.ring, &target.ring])?;
        let n = prod.nvars();
        let ns = source.ring.nvars();
        let src_map: Vec<usize> = (0..ns).collect();
        let ideal: Vec<Poly> =
            f.iter().enumerate().map(|(j, fj)| proj[1].images[j].sub(&fj.remap(n, &src_map))).collect();
        let cover = crate::catalog::trivial_cover(source);
        let mut images: Vec<Poly> = (0..ns).map(|i| Poly::var(ns, i)).collect();
        images.extend(f.iter().cloned());
        Self::new(source, target, ideal, &cover, &[images])
    }

    pub fn degree(&self) -> usize {
        self.homs.len()
    }

    pub fn key(&self) -> String {
        let (prod, _) = product(&[&self.source.ring, &self.target.ring]).expect("checked at construction");
        ideal_key(&prod, &self.ideal)
    }
}

pub fn transfer_prime(c: &PrimeCorrespondence, w: &PForm) -> Result<PForm> {
    if w.ring != c.target.ring {
        return Err(Error::RingMismatch);
    }
    let on_z = w.pullback(&c.to_target)?;
    let mut sum = PForm::zero(c.cover.b(), w.degree);
    for q in &c.homs {
        sum = sum.add(&on_z.pullback(q)?)?;
    }
    c.descender.descend(&sum)
}

/// `sum n_i [Z_i]` with `n_i >= 1` and pairwise distinct components.
#[derive(Clone, Debug)]
pub struct CycleCorrespondence {
    pub source: AffineVariety,
    pub target: AffineVariety,
    pub terms: Vec<(u64, PrimeCorrespondence)>,
}

impl CycleCorrespondence {
    pub fn new(terms: Vec<(u64, PrimeCorrespondence)>) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::InvalidInput("a cycle needs a component".into()))?;
        let source = first.1.source.clone();
        let target = first.1.target.clone();
        let mut keyed = Vec::new();
        for (n, c) in terms {
            if n == 0 {
                return Err(Error::InvalidInput("multiplicities are at least 1".into()));
            }
            if c.source.ring != source.ring || c.target.ring != target.ring {
                return Err(Error::RingMismatch);
            }
            let k = c.key();
            if keyed.iter().any(|(k2, _): &(String, _)| *k2 == k) {
                return Err(Error::InvalidInput(format!("component {} is listed twice", k)));
            }
            keyed.push((k, (n, c)));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(CycleCorrespondence { source, target, terms: keyed.into_iter().map(|(_, t)| t).collect() })
    }

    pub fn prime(c: PrimeCorrespondence) -> Self {
        CycleCorrespondence { source: c.source.clone(), target: c.target.clone(), terms: alloc::vec![(1, c)] }
    }

    pub fn cycle(&self) -> Result<Cycle> {
        let (prod, _) = product(&[&self.source.ring, &self.target.ring])?;
        Ok(Cycle::new(&prod, self.terms.iter().map(|(n, c)| (*n, c.ideal.clone())).collect()))
    }
}

pub fn transfer_cycle(c: &CycleCorrespondence, w: &PForm) -> Result<PForm> {
    let mut out = PForm::zero(&c.source.ring, w.degree);
    for (n, z) in &c.terms {
        let t = transfer_prime(z, w)?;
        out = out
            .add(&t.scale_poly(&Poly::constant(c.source.ring.nvars(), crate::scalars::Scalar::from_int(*n as i64)))?)?;
    }
    Ok(out)
}

/// Formal sum of subvarieties of `ambient`, merged by canonical ideal.
#[derive(Clone, Debug)]
pub struct Cycle {
    pub ambient: QRing,
    /// Canonical key, multiplicity and ideal, sorted by key.
    pub components: Vec<(String, u64, Vec<Poly>)>,
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.components.len() == other.components.len()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.0 == b.0 && a.1 == b.1)
    }
}

impl Eq for Cycle {}

impl Cycle {
    pub fn new(ambient: &QRing, comps: Vec<(u64, Vec<Poly>)>) -> Self {
        let mut merged: BTreeMap<String, (u64, Vec<Poly>)> = BTreeMap::new();
        for (n, ideal) in comps {
            let k = ideal_key(ambient, &ideal);
            merged.entry(k).and_modify(|e| e.0 += n).or_insert((n, ideal));
        }
        Cycle { ambient: ambient.clone(), components: merged.into_iter().map(|(k, (n, i))| (k, n, i)).collect() }
    }

    /// `n*V(...)` per component.
    pub fn lines(&self) -> Vec<String> {
        self.components.iter().map(|(k, n, _)| format!("{}*{}", n, k)).collect()
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.1).collect()
    }
}

/// Image cycle under the morphism dual to `map: target -> ambient`; each
/// multiplicity is scaled by the degree of the component over its image.
pub fn pushforward(cycle: &Cycle, map: &RingHom) -> Result<Cycle> {
    if *map.target != *cycle.ambient {
        return Err(Error::RingMismatch);
    }
    let tgt = &map.source;
    let mut out = Vec::new();
    for (key, n, ideal) in &cycle.components {
        let zi = subvariety(&cycle.ambient, ideal);
        let h = RingHom::new(tgt.clone(), zi.clone(), map.images.clone())?;
        let image = preimage(&h);
        let yi = subvariety(tgt, &image);
        let h = RingHom::new(yi, zi, map.images.clone())?;
        let d = generic_rank(&h, RankStrategy::Exact)
            .map_err(|e| Error::RankFailure(format!("{} over its image: {}", key, e)))?;
        out.push((n * d as u64, image));
    }
    Ok(Cycle::new(tgt, out))
}

/// Decomposition of `Z x_{X2} Z'` for one pair of components: multiplicities
/// and ideals in the coordinates of `X1 x X2 x X3`.
#[derive(Clone, Debug)]
pub struct FiberPart {
    pub first: usize,
    pub second: usize,
    pub components: Vec<(u64, Vec<Poly>)>,
}

#[derive(Clone, Debug, Default)]
pub struct FiberWitness {
    pub parts: Vec<FiberPart>,
}

/// `z' o z` as a cycle on `X1 x X3`.
pub fn compose_cycles(z: &CycleCorrespondence, z2: &CycleCorrespondence, witness: &FiberWitness) -> Result<Cycle> {
    if z.target.ring != z2.source.ring {
        return Err(Error::RingMismatch);
    }
    let (triple, _) = product(&[&z.source.ring, &z.target.ring, &z2.target.ring])?;
    let n = triple.nvars();
    let n1 = z.source.ring.nvars();
    let n2 = z.target.ring.nvars();
    let (p12_ring, _) = product(&[&z.source.ring, &z.target.ring])?;
    let (p13_ring, _) = product(&[&z.source.ring, &z2.target.ring])?;
    let to12: Vec<usize> = (0..n1 + n2).collect();
    let to23: Vec<usize> = (n1..n).collect();
    let p12 = RingHom::new(p12_ring, triple.clone(), to12.iter().map(|&i| Poly::var(n, i)).collect())?;
    let p13_images: Vec<Poly> = (0..n1).chain(n1 + n2..n).map(|i| Poly::var(n, i)).collect();
    let p13 = RingHom::new(p13_ring, triple.clone(), p13_images)?;
    let mut all = Vec::new();
    for (i, (m1, c1)) in z.terms.iter().enumerate() {
        for (j, (m2, c2)) in z2.terms.iter().enumerate() {
            let part = witness.parts.iter().find(|p| p.first == i && p.second == j).ok_or_else(|| {
                Error::WitnessInvalid(format!("no decomposition for components {} and {}", i + 1, j + 1))
            })?;
            let pulled: Vec<Poly> =
                c1.ideal.iter().map(|f| f.remap(n, &to12)).chain(c2.ideal.iter().map(|f| f.remap(n, &to23))).collect();
            let z_ring = &c1.ring;
            let mut total = 0usize;
            for (k, (mult, ideal)) in part.components.iter().enumerate() {
                if *mult == 0 {
                    return Err(Error::InvalidInput("multiplicities are at least 1".into()));
                }
                let zk = subvariety(&triple, ideal);
                if zk.is_trivial() {
                    return Err(Error::ComponentNotContained(format!("component {} is empty", k + 1)));
                }
                if let Some(f) = pulled.iter().find(|f| !zk.is_zero(f)) {
                    return Err(Error::ComponentNotContained(format!(
                        "component {} does not satisfy {}",
                        k + 1,
                        triple.ring.format(f)
                    )));
                }
                let h = RingHom::new(z_ring.clone(), zk, p12.images.clone())?;
                let d = generic_rank(&h, RankStrategy::Exact)
                    .map_err(|e| Error::RankFailure(format!("fiber component {}: {}", k + 1, e)))?;
                total += *mult as usize * d;
                all.push((m1 * m2 * mult, ideal.clone()));
            }
            let expected = c2.degree();
            if total != expected {
                return Err(Error::WitnessDegreeMismatch(format!(
                    "components {} and {}: sum of multiplicities times degrees is {}, expected {}",
                    i + 1,
                    j + 1,
                    total,
                    expected
                )));
            }
        }
    }
    pushforward(&Cycle::new(&triple, all), &p13)
}

/// Compares `T_z(T_z'(w))` with `T_composite(w)` per sample, after checking
/// that `composite` is the cycle obtained from the witness.
pub fn verify_composition(
    z: &CycleCorrespondence,
    z2: &CycleCorrespondence,
    witness: &FiberWitness,
    composite: &CycleCorrespondence,
    samples: &[PForm],
) -> Report {
    let mut r = Report::new();
    let cycle = match compose_cycles(z, z2, witness) {
        Ok(c) => c,
        Err(e) => {
            r.fail("fiber witness", e);
            return r;
        }
    };
    r.pass("fiber witness", cycle.lines().join(" + "));
    match composite.cycle() {
        Ok(c) if c == cycle => r.pass("composite cycle", ""),
        Ok(c) => r.fail(
            "composite cycle",
            Error::CheckFailed(format!("given {}, computed {}", c.lines().join(" + "), cycle.lines().join(" + "))),
        ),
        Err(e) => r.fail("composite cycle", e),
    }
    for (i, w) in samples.iter().enumerate() {
        let name = format!("sample {}", i + 1);
        let left = transfer_cycle(z2, w).and_then(|v| transfer_cycle(z, &v));
        let right = transfer_cycle(composite, w);
        match (left, right) {
            (Ok(a), Ok(b)) => match same_form(&a, &b) {
                Ok(true) => r.pass(&name, a.format()),
                Ok(false) => r.fail(&name, Error::ValueMismatch(format!("{} vs {}", a.format(), b.format()))),
                Err(e) => r.fail(&name, e),
            },
            (Err(e), _) | (_, Err(e)) => r.fail(&name, e),
        }
    }
    r
}

fn same_form(a: &PForm, b: &PForm) -> Result<bool> {
    omega_p(&a.ring, a.degree as isize, None)?.equal(a, b)
}

/// Checks that `c` and the same component with the witness `alt` (mapping to
/// the original cover by `f`) give the same transfers.
pub fn verify_well_definedness(
    c: &PrimeCorrespondence,
    alt: &GaloisCoverDatum,
    alt_homs: &[Vec<Poly>],
    f: &RingHom,
    samples: &[PForm],
) -> Report {
    let mut r = Report::new();
    let over = f.source == *c.cover.b()
        && f.target == *alt.b()
        && c.cover.inclusion.then(f).is_ok_and(|g| g.same_map(&alt.inclusion));
    r.record("dominating map over base", over, "", || Error::WitnessInvalid("the map is not over the base".into()));
    if !over {
        return r;
    }
    let c2 = match PrimeCorrespondence::new(&c.source, &c.target, c.ideal.clone(), alt, alt_homs) {
        Ok(x) => x,
        Err(e) => {
            r.fail("alternative witness", e);
            return r;
        }
    };
    r.pass("alternative witness", format!("{} morphisms", c2.degree()));
    let mut hit = alloc::vec![false; c2.homs.len()];
    let mut bij = Ok(());
    for (i, q) in c.homs.iter().enumerate() {
        let qf = match q.then(f) {
            Ok(x) => x,
            Err(e) => {
                bij = Err(e);
                break;
            }
        };
        match c2.homs.iter().position(|p| p.same_map(&qf)) {
            Some(j) if !hit[j] => hit[j] = true,
            _ => {
                bij = Err(Error::BijectionFailure(format!("morphism {} composed with the map is not matched", i + 1)));
                break;
            }
        }
    }
    if bij.is_ok() && !hit.iter().all(|&h| h) {
        bij = Err(Error::BijectionFailure("some morphism of the alternative list is not hit".into()));
    }
    match bij {
        Ok(()) => r.pass("composition bijection", ""),
        Err(e) => r.fail("composition bijection", e),
    }
    for (i, w) in samples.iter().enumerate() {
        let name = format!("sample {}", i + 1);
        match (transfer_prime(c, w), transfer_prime(&c2, w)) {
            (Ok(a), Ok(b)) => match same_form(&a, &b) {
                Ok(true) => r.pass(&name, a.format()),
                Ok(false) => r.fail(&name, Error::ValueMismatch(format!("{} vs {}", a.format(), b.format()))),
                Err(e) => r.fail(&name, e),
            },
            (Err(e), _) | (_, Err(e)) => r.fail(&name, e),
        }
    }
    r
}
