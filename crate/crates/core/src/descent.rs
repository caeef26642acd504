//! Galois covers `W -> X` given by witness data, averaging over the group,
//! descent of invariant forms to the base, and the comparison of biduals.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kaehler::{det, omega_p, regularity, subsets, AffineVariety, Frac, OmegaP, PForm, Regularity};
use crate::modules::{bidual_data, encode, invariants, kernel, Invariants, ModuleMap, PresentedModule};
use crate::poly::{MonomialOrder, Poly, PolyRing};
use crate::report::Report;
use crate::ring::{
    generic_rank, independent_set, GraphRing, Lifter, QRing, QuotientRing, RankStrategy, Restriction, RingHom,
};
use crate::scalars::Scalar;

/// `W -> X` with group `G` of automorphisms of `W` over `X` and a generating
/// set of the coordinate ring of `W` as a module over that of `X`.
#[derive(Clone, Debug)]
pub struct GaloisCoverDatum {
    pub base: AffineVariety,
    pub total: AffineVariety,
    pub inclusion: RingHom,
    pub group: Vec<RingHom>,
    pub basis: Vec<Poly>,
}

impl GaloisCoverDatum {
    pub fn new(
        base: AffineVariety,
        total: AffineVariety,
        inclusion: RingHom,
        group: Vec<RingHom>,
        basis: Vec<Poly>,
    ) -> Result<Self> {
        if *inclusion.source != *base.ring || *inclusion.target != *total.ring {
            return Err(Error::RingMismatch);
        }
        if group.iter().any(|g| *g.source != *total.ring || *g.target != *total.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(GaloisCoverDatum { base, total, inclusion, group, basis })
    }

    pub fn a(&self) -> &QRing {
        &self.base.ring
    }

    pub fn b(&self) -> &QRing {
        &self.total.ring
    }

    pub fn restriction(&self) -> Result<Restriction> {
        Restriction::new(&self.inclusion, self.basis.clone())
    }

    /// Index of the inverse of group element `g`.
    pub fn inverse(&self, g: usize) -> Result<usize> {
        let gg = &self.group[g];
        for (i, h) in self.group.iter().enumerate() {
            if gg.then(h)?.is_identity() {
                return Ok(i);
            }
        }
        Err(Error::GroupNotClosed(format!("element {} has no inverse in the list", g + 1)))
    }
}

pub fn verify_cover(d: &GaloisCoverDatum, strategy: RankStrategy) -> Report {
    let mut r = Report::new();
    let b = d.b();
    let mut over = Ok(());
    for g in &d.group {
        if let Err(e) = g.check_over_base(&d.inclusion, &d.inclusion) {
            over = Err(Error::HomNotOverBase(format!("{}", e)));
            break;
        }
    }
    match over {
        Ok(()) => r.pass("automorphisms over base", format!("{} elements", d.group.len())),
        Err(e) => r.fail("automorphisms over base", e),
    }
    let has_id = d.group.iter().any(|g| g.is_identity());
    r.record("identity listed", has_id, "", || Error::GroupNotClosed("identity is missing".into()));
    let mut closed = Ok(());
    'outer: for (i, g) in d.group.iter().enumerate() {
        for (j, h) in d.group.iter().enumerate() {
            let gh = match g.then(h) {
                Ok(x) => x,
                Err(e) => {
                    closed = Err(e);
                    break 'outer;
                }
            };
            if !d.group.iter().any(|k| k.same_map(&gh)) {
                closed =
                    Err(Error::GroupNotClosed(format!("composite of elements {} and {} is not listed", i + 1, j + 1)));
                break 'outer;
            }
        }
    }
    match closed {
        Ok(()) => r.pass("group closed", ""),
        Err(e) => r.fail("group closed", e),
    }
    let distinct = d.group.iter().enumerate().all(|(i, g)| d.group[..i].iter().all(|h| !h.same_map(g)));
    r.record("elements distinct", distinct, "", || Error::GroupNotClosed("an element is listed twice".into()));
    match d.restriction() {
        Ok(res) => {
            r.pass("generating set", format!("{} generators{}", res.len(), if res.is_free() { ", free" } else { "" }))
        }
        Err(e) => r.fail("generating set", e),
    }
    match generic_rank(&d.inclusion, strategy) {
        Ok(n) if n == d.group.len() => r.pass("degree equals group order", format!("{}", n)),
        Ok(n) => r.fail("degree equals group order", Error::RankMismatch { group: d.group.len(), rank: n }),
        Err(e) => r.fail("degree equals group order", e),
    }
    let _ = b;
    r
}

/// `(1/#G) sum_g g^* w`.
pub fn average(w: &PForm, d: &GaloisCoverDatum) -> Result<PForm> {
    let mut s = PForm::zero(&w.ring, w.degree);
    for g in &d.group {
        s = s.add(&w.pullback(g)?)?;
    }
    let n = d.group.len() as i64;
    let k = d.b().field();
    let inv = k.inv(&Scalar::from_int(n))?;
    s.scale(&Frac::poly(Poly::constant(d.b().nvars(), inv)))
}

/// Precomputed data for writing invariant forms on `W` in terms of the
/// differentials of a transcendence basis of `X`.
#[derive(Clone, Debug)]
pub struct Descender {
    datum: GaloisCoverDatum,
    graph: GraphRing,
    ring: QRing,
    /// Base variables forming a transcendence basis.
    t: Vec<usize>,
    /// Graph variables other than the transcendence basis.
    z: Vec<usize>,
    delta: Poly,
    /// `delta dz = e dT`, rows indexed like `z`.
    e: Vec<Vec<Poly>>,
    /// Group elements extended to the graph ring.
    group: Vec<RingHom>,
}

impl Descender {
    pub fn new(d: &GaloisCoverDatum) -> Result<Self> {
        let graph = GraphRing::new(&d.inclusion);
        let nb = graph.nb;
        let n = graph.nvars();
        let b = d.b();
        let a = d.a();
        let mut names = b.ring.vars.clone();
        names.extend(a.ring.vars.iter().map(|v| format!("{}'", v)));
        let pr = Arc::new(PolyRing::new(b.field().clone(), names, MonomialOrder::Block(nb)));
        let ring = QuotientRing::new(pr, graph.ideal.clone());
        let t = independent_set(a);
        let tg: Vec<usize> = t.iter().map(|v| nb + v).collect();
        let z: Vec<usize> = (0..n).filter(|v| !tg.contains(v)).collect();
        let gens = &graph.ideal;
        let jac: Vec<Vec<Poly>> = gens.iter().map(|f| (0..n).map(|i| ring.nf(&f.derivative(i))).collect()).collect();
        let c = z.len();
        let mut best: Option<(u32, Vec<usize>, Poly)> = None;
        let mut rowsets = Vec::new();
        subsets(gens.len(), c, &mut |s| rowsets.push(s.to_vec()));
        for rows in rowsets {
            let m: Vec<Vec<Poly>> = rows.iter().map(|&r| z.iter().map(|&j| jac[r][j].clone()).collect()).collect();
            let dt = ring.nf(&det(&ring, &m));
            if dt.is_zero() {
                continue;
            }
            let deg = dt.total_degree();
            if best.as_ref().is_none_or(|(bd, _, _)| deg < *bd) {
                best = Some((deg, rows, dt));
            }
        }
        let (_, rows, delta) = best.ok_or_else(|| {
            Error::NotDescendable("no invertible Jacobian minor; the extension is not generically étale".into())
        })?;
        let k = b.field();
        let jz: Vec<Vec<Poly>> = rows.iter().map(|&r| z.iter().map(|&j| jac[r][j].clone()).collect()).collect();
        let jt: Vec<Vec<Poly>> = rows.iter().map(|&r| tg.iter().map(|&j| jac[r][j].clone()).collect()).collect();
        // adjugate
        let mut adj = vec![vec![Poly::zero(n); c]; c];
        #[allow(clippy::needless_range_loop)]
        for i in 0..c {
            for j in 0..c {
                let minor: Vec<Vec<Poly>> = (0..c)
                    .filter(|&r| r != j)
                    .map(|r| (0..c).filter(|&col| col != i).map(|col| jz[r][col].clone()).collect())
                    .collect();
                let m = det(&ring, &minor);
                adj[i][j] = if (i + j) % 2 == 0 { m } else { m.neg() };
            }
        }
        let mut e = vec![vec![Poly::zero(n); tg.len()]; c];
        for i in 0..c {
            for l in 0..tg.len() {
                let mut s = Poly::zero(n);
                for j in 0..c {
                    s = s.add(&adj[i][j].mul(k, &jt[j][l]));
                }
                e[i][l] = ring.nf(&s.neg());
            }
        }
        let mut group = Vec::new();
        for g in &d.group {
            let mut images: Vec<Poly> = g.images.iter().map(|p| graph.from_b(p)).collect();
            images.extend((nb..n).map(|i| Poly::var(n, i)));
            group.push(RingHom::new(ring.clone(), ring.clone(), images)?);
        }
        Ok(Descender { datum: d.clone(), graph, ring, t, z, delta, e, group })
    }

    /// Element of the base ring equal to `p` in the graph ring, if any.
    fn to_base(&self, p: &Poly) -> Option<Poly> {
        self.graph.to_a(&self.ring.nf(p)).map(|a| self.datum.a().nf(&a))
    }

    /// The averaged form as a form on `X` with coefficients in `K(X)`.
    pub fn descend_generic(&self, w: &PForm) -> Result<PForm> {
        let d = &self.datum;
        let a = d.a();
        let b = d.b();
        if w.ring != *b {
            return Err(Error::RingMismatch);
        }
        let p = w.degree;
        let avg = average(w, d)?;
        if avg.is_zero() {
            return Ok(PForm::zero(a, p));
        }
        let k = b.field();
        let n = self.graph.nvars();
        let mut bindex = Vec::new();
        subsets(b.nvars(), p, &mut |s| bindex.push(s.to_vec()));
        let (v, den) = avg.clear_denominators(&bindex)?;
        let big_d = self.graph.from_b(&den).mul(k, &self.delta.pow(k, p as u32));
        let big_d = self.ring.nf(&big_d);
        let mut tindex = Vec::new();
        subsets(self.t.len(), p, &mut |s| tindex.push(s.to_vec()));
        let zpos = |bv: usize| self.z.iter().position(|&x| x == bv).unwrap();
        let mut nums = Vec::with_capacity(tindex.len());
        for ti in &tindex {
            let mut s = Poly::zero(n);
            for (vj, j) in v.iter().zip(&bindex) {
                if vj.is_zero() {
                    continue;
                }
                let m: Vec<Vec<Poly>> =
                    j.iter().map(|&bv| ti.iter().map(|&c| self.e[zpos(bv)][c].clone()).collect()).collect();
                let dt = det(&self.ring, &m);
                s = s.add(&self.graph.from_b(vj).mul(k, &dt));
            }
            nums.push(self.ring.nf(&s));
        }
        // multiply through by the conjugates of the denominator
        let mut norm = big_d.clone();
        let mut cof = Poly::one(n);
        for g in &self.group {
            if g.is_identity() {
                continue;
            }
            let gd = g.apply(&big_d);
            norm = self.ring.nf(&norm.mul(k, &gd));
            cof = self.ring.nf(&cof.mul(k, &gd));
        }
        let norm_a = self
            .to_base(&norm)
            .ok_or_else(|| Error::NotDescendable("norm of the denominator is not a base function".into()))?;
        let mut out = PForm::zero(a, p);
        for (num, ti) in nums.iter().zip(&tindex) {
            let full = self.ring.nf(&num.mul(k, &cof));
            if full.is_zero() {
                continue;
            }
            let na = self.to_base(&full).ok_or_else(|| {
                Error::NotDescendable(format!("coefficient {} is not a base function", self.ring.format(&full)))
            })?;
            let idx: Vec<usize> = ti.iter().map(|&c| self.t[c]).collect();
            out = out.add(&PForm::term(a, Frac::new(a, &na, &norm_a)?, &idx))?;
        }
        out.degree = p;
        Ok(out)
    }

    /// Descends `w` to a regular form on `X`.
    pub fn descend(&self, w: &PForm) -> Result<PForm> {
        let g = self.descend_generic(w)?;
        match regularity(&g, &self.datum.base)? {
            Regularity::Regular(f) => Ok(f),
            Regularity::NotRegular(ideal) => {
                let a = self.datum.a();
                let gens: Vec<String> = ideal.iter().map(|p| a.format(p)).collect();
                Err(Error::NotRegular(format!("({})", gens.join(", "))))
            }
        }
    }
}

pub fn descend(w: &PForm, d: &GaloisCoverDatum) -> Result<PForm> {
    Descender::new(d)?.descend(w)
}

/// Matrices of `g^*` on the generators of `Ω^p_W`.
fn action_maps(om: &OmegaP, d: &GaloisCoverDatum) -> Result<Vec<ModuleMap>> {
    let b = d.b();
    let one = Frac::poly(Poly::one(b.nvars()));
    let mut maps = Vec::new();
    for g in &d.group {
        let mut cols = Vec::new();
        for idx in &om.index {
            let img = PForm::term(b, one.clone(), idx).pullback(g)?;
            let (v, _) = om.vector_of(&img)?;
            cols.push(v);
        }
        maps.push(ModuleMap::new(om.module.clone(), om.module.clone(), cols, Some(g.clone()))?);
    }
    Ok(maps)
}

pub fn invariant_forms(d: &GaloisCoverDatum, p: usize, relative: bool) -> Result<Invariants> {
    let om = omega_p(d.b(), p as isize, if relative { Some(&d.inclusion) } else { None })?;
    let maps = action_maps(&om, d)?;
    invariants(&om.module, &maps, &d.restriction()?)
}

/// Semilinear action on the bidual transported from the action on `M`.
fn bidual_action(
    m: &PresentedModule,
    maps: &[ModuleMap],
    d: &GaloisCoverDatum,
    bd: &crate::modules::BidualData,
) -> Result<Vec<ModuleMap>> {
    let ring = &m.ring;
    let k = ring.field();
    let gm = m.ngens();
    let t = bd.functionals.len();
    let dual_lifter = Lifter::new(ring, &bd.functionals, &[], gm);
    // a[g][k] = coordinates of g . Lambda_k in the functionals
    let mut a = Vec::new();
    for (gi, g) in d.group.iter().enumerate() {
        let h = &maps[d.inverse(gi)?];
        let mut cols = Vec::new();
        for lam in &bd.functionals {
            let mut out = vec![Poly::zero(ring.nvars()); gm];
            for (j, o) in out.iter_mut().enumerate() {
                let mut s = Poly::zero(ring.nvars());
                for (col, l) in h.columns[j].iter().zip(lam) {
                    s = s.add(&g.apply(col).mul(k, &g.apply(l)));
                }
                *o = ring.nf(&s);
            }
            let c = dual_lifter
                .lift(&out)
                .ok_or_else(|| Error::ActionNotVerified("transported functional is not in the dual".into()))?;
            cols.push(c);
        }
        a.push(cols);
    }
    let mut out = Vec::new();
    for (gi, g) in d.group.iter().enumerate() {
        let ah = &a[d.inverse(gi)?];
        let mut cols = Vec::new();
        for v in &bd.evaluations {
            let mut ev = vec![Poly::zero(ring.nvars()); t];
            for (l, e) in ev.iter_mut().enumerate() {
                let mut s = Poly::zero(ring.nvars());
                for kk in 0..t {
                    s = s.add(&g.apply(&ah[l][kk]).mul(k, &g.apply(&v[kk])));
                }
                *e = ring.nf(&s);
            }
            let c = bd
                .lift_evaluation(&ev)
                .ok_or_else(|| Error::ActionNotVerified("transported element is not in the bidual".into()))?;
            cols.push(c);
        }
        out.push(ModuleMap::new(bd.bidual.clone(), bd.bidual.clone(), cols, Some(g.clone()))?);
    }
    Ok(out)
}

/// Compares `target` (an invariant module) with the image of `Ω^p_X`, where
/// `to_target` sends a form on `W` to target coordinates over `B`.
fn compare_with_base(
    r: &mut Report,
    d: &GaloisCoverDatum,
    p: usize,
    target: &PresentedModule,
    inv: &Invariants,
    to_target: &dyn Fn(&PForm) -> Result<Vec<Poly>>,
) -> Result<()> {
    let a = d.a();
    let res = d.restriction()?;
    let om_x = omega_p(a, p as isize, None)?;
    let one = Frac::poly(Poly::one(a.nvars()));
    let lifter = Lifter::new(a, &inv.coordinates, &inv.restricted.relations, inv.restricted.ngens());
    let mut cols = Vec::new();
    for idx in &om_x.index {
        let w = PForm::term(a, one.clone(), idx).pullback(&d.inclusion)?;
        let coords = encode(&to_target(&w)?, &res, target.ngens())?;
        match lifter.lift(&coords) {
            Some(c) => cols.push(c),
            None => {
                r.fail(
                    "image is invariant",
                    Error::CheckFailed(format!("pullback of {} is not invariant", om_x.module.labels[cols.len()])),
                );
                return Ok(());
            }
        }
    }
    r.pass("image is invariant", "");
    let f = ModuleMap::new(om_x.module.clone(), inv.module.clone(), cols, None)?;
    let (ker, inc) = kernel(&f)?;
    if ker.is_zero() {
        r.pass("injective", "");
    } else {
        let wit = om_x.module.format_vector(&inc.columns[0]);
        r.fail("injective", Error::CheckFailed(format!("{} maps to zero", wit)));
    }
    match f.surjectivity_witness() {
        None => r.pass("surjective", format!("{} invariant generators", inv.module.ngens())),
        Some(i) => {
            let elem = target.format_vector(&inv.elements[i]);
            r.fail("surjective", Error::CheckFailed(format!("invariant {} is not in the image", elem)));
        }
    }
    Ok(())
}

/// Checks that pullback identifies the bidual of `Ω^p_X` with the invariants
/// of the bidual of `Ω^p_W`.
pub fn bidual_descent_check(d: &GaloisCoverDatum, p: usize) -> Result<Report> {
    let mut r = Report::new();
    let om_x = omega_p(d.a(), p as isize, None)?;
    let bx = bidual_data(&om_x.module)?;
    let iso = bx.nat.is_injective()? && bx.nat.is_surjective();
    r.record("base is reflexive", iso, "", || Error::CheckFailed("Ω^p_X differs from its bidual".into()));
    if !iso {
        return Ok(r);
    }
    let om_w = omega_p(d.b(), p as isize, None)?;
    let maps = action_maps(&om_w, d)?;
    let bw = bidual_data(&om_w.module)?;
    let actions = bidual_action(&om_w.module, &maps, d, &bw)?;
    let inv = invariants(&bw.bidual, &actions, &d.restriction()?)?;
    compare_with_base(&mut r, d, p, &bw.bidual, &inv, &|w| {
        let (v, _) = om_w.vector_of(w)?;
        Ok(bw.nat.apply(&v))
    })?;
    Ok(r)
}

/// The same comparison with `Ω^p_W` itself in place of its bidual.
pub fn naive_descent_check(d: &GaloisCoverDatum, p: usize) -> Result<Report> {
    let mut r = Report::new();
    let om_w = omega_p(d.b(), p as isize, None)?;
    let maps = action_maps(&om_w, d)?;
    let inv = invariants(&om_w.module, &maps, &d.restriction()?)?;
    compare_with_base(&mut r, d, p, &om_w.module, &inv, &|w| Ok(om_w.vector_of(w)?.0))?;
    Ok(r)
}

/// Checks on a cover with a free generating set: the degree, freeness, a
/// relative form that is invariant yet nonzero, and a normal basis element.
pub fn counterexample_suite(d: &GaloisCoverDatum, form: &PForm, primitive: &Poly) -> Result<Report> {
    let mut r = Report::new();
    let a = d.a();
    let b = d.b();
    match generic_rank(&d.inclusion, RankStrategy::Exact) {
        Ok(n) => r.record("generic rank", n == d.group.len(), format!("{}", n), || Error::RankMismatch {
            group: d.group.len(),
            rank: n,
        }),
        Err(e) => r.fail("generic rank", e),
    }
    let res = d.restriction()?;
    let names: Vec<String> = res.basis.iter().map(|p| b.format(p)).collect();
    r.record("free basis", res.is_free(), format!("{{{}}}", names.join(", ")), || {
        Error::CheckFailed("the generating set has relations".into())
    });
    let om = omega_p(b, form.degree as isize, Some(&d.inclusion))?;
    let mut invariant = true;
    for g in &d.group {
        if !om.equal(&form.pullback(g)?, form)? {
            invariant = false;
        }
    }
    let fname: String = form.format().chars().filter(|c| !" *()".contains(*c)).collect();
    r.record(&format!("{} invariant", fname), invariant, if invariant { "yes" } else { "no" }, || {
        Error::CheckFailed("form is not invariant".into())
    });
    let (v, _) = om.vector_of(form)?;
    let zero = om.module.is_zero_element(&v);
    r.record(&format!("{} zero", fname), !zero, if zero { "yes" } else { "no" }, || {
        Error::CheckFailed("form is zero in the relative differentials".into())
    });
    let inv = invariants(&om.module, &action_maps(&om, d)?, &res)?;
    let coords = encode(&v, &res, om.module.ngens())?;
    let lifter = Lifter::new(a, &inv.coordinates, &inv.restricted.relations, inv.restricted.ngens());
    r.record("invariant module contains form", lifter.contains(&coords), "", || {
        Error::CheckFailed("form is not in the computed invariants".into())
    });
    let orbit: Vec<Vec<Poly>> = d.group.iter().map(|g| res.coords(&g.apply(primitive))).collect::<Result<_>>()?;
    let span = Lifter::new(a, &orbit, res.syzygies(), res.len());
    let generates = (0..res.len()).all(|k| {
        let mut e = vec![Poly::zero(a.nvars()); res.len()];
        e[k] = Poly::one(a.nvars());
        span.contains(&e)
    });
    r.record("orbit generates", generates, format!("orbit of {}", b.format(primitive)), || {
        Error::CheckFailed("the orbit does not generate the ring".into())
    });
    Ok(r)
}

/// True iff `w` on `W` is fixed by every group element (equality in `Ω^p_W`).
pub fn is_invariant(w: &PForm, d: &GaloisCoverDatum) -> Result<bool> {
    let om = omega_p(d.b(), w.degree as isize, None)?;
    for g in &d.group {
        if !om.equal(&w.pullback(g)?, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{affine, circle, cone_cover, kummer_cover, trivial_cover};
    use crate::kaehler::parse_form;
    use alloc::string::ToString;

    fn form(q: &QRing, s: &str) -> PForm {
        parse_form(q, s).unwrap()
    }

    #[test]
    fn covers_verify() {
        let d = kummer_cover();
        let r = verify_cover(&d, RankStrategy::Exact);
        assert!(r.passed(), "{:?}", r.lines());
        let r = verify_cover(&cone_cover(), RankStrategy::Random { seed: 0 });
        assert!(r.passed(), "{:?}", r.lines());
        let mut bad = kummer_cover();
        bad.group.truncate(1);
        let r = verify_cover(&bad, RankStrategy::Exact);
        assert_eq!(r.first_error(), Some(&Error::RankMismatch { group: 1, rank: 2 }));
        let mut open = cone_cover();
        open.group.truncate(2);
        assert!(matches!(verify_cover(&open, RankStrategy::Exact).first_error(), Some(Error::GroupNotClosed(_))));
    }

    #[test]
    fn averages() {
        let d = kummer_cover();
        let b = d.b().clone();
        assert!(average(&form(&b, "d(y)"), &d).unwrap().is_zero());
        assert_eq!(average(&form(&b, "y*d(y)"), &d).unwrap(), form(&b, "y*d(y)"));
        let c = cone_cover();
        let w = form(c.b(), "x*d(y)");
        assert_eq!(average(&w, &c).unwrap().format(), w.format());
    }

    #[test]
    fn kummer_descent() {
        let d = kummer_cover();
        let b = d.b().clone();
        let a = d.a().clone();
        let ds = Descender::new(&d).unwrap();
        assert_eq!(ds.descend(&form(&b, "y*d(y)")).unwrap(), form(&a, "1/2*d(t)"));
        assert!(ds.descend(&form(&b, "d(y)")).unwrap().is_zero());
        assert_eq!(ds.descend(&form(&b, "y^3*d(y)")).unwrap().format(), "1/2*t * d(t)");
        assert_eq!(ds.descend(&form(&b, "y^2")).unwrap(), form(&a, "t"));
        assert!(matches!(ds.descend(&form(&b, "1/y*d(y)")), Err(Error::NotRegular(_))));
        // descend undoes pullback
        let w = form(&a, "(t^2 + 3)*d(t)");
        assert_eq!(ds.descend(&w.pullback(&d.inclusion).unwrap()).unwrap(), w);
    }

    #[test]
    fn trivial_descent() {
        let x = affine(&crate::scalars::Field::rationals(), &["x", "y"]);
        let d = trivial_cover(&x);
        let w = form(&x.ring, "x*y*d(x)^d(y) ");
        assert_eq!(descend(&w, &d).unwrap(), w);
        let c = circle();
        let d = trivial_cover(&c);
        let w = form(&c.ring, "x*d(y) - y*d(x)");
        let got = descend(&w, &d).unwrap();
        let om = omega_p(&c.ring, 1, None).unwrap();
        assert!(om.equal(&got, &w).unwrap());
    }

    #[test]
    fn cone_descent() {
        let d = cone_cover();
        let ds = Descender::new(&d).unwrap();
        let a = d.a().clone();
        let b = d.b().clone();
        // x^3 = u v^2
        assert_eq!(ds.descend(&form(&b, "x^2*d(x)")).unwrap(), form(&a, "1/3*v^2*d(u) + 2/3*u*v*d(v)"));
        assert_eq!(ds.descend(&form(&b, "x*d(y)")).unwrap(), form(&a, "2/3*v*d(u) + 1/3*u*d(v)"));
    }

    #[test]
    fn invariant_modules() {
        let d = kummer_cover();
        // relative differentials are k[y]/(y) dy, on which the involution acts by -1
        let inv = invariant_forms(&d, 1, true).unwrap();
        assert!(inv.module.is_zero());
        let inv0 = invariant_forms(&d, 0, false).unwrap();
        assert_eq!(inv0.module.ngens(), 1);
        assert!(inv0.module.is_free());
        let c = cone_cover();
        let inv = invariant_forms(&c, 1, true).unwrap();
        assert!(!inv.module.is_zero());
    }

    #[test]
    fn bidual_checks() {
        for d in [trivial_cover(&affine(&crate::scalars::Field::rationals(), &["t"])), kummer_cover()] {
            let r = bidual_descent_check(&d, 1).unwrap();
            assert!(r.passed(), "{:?}", r.lines());
        }
        let r = naive_descent_check(&kummer_cover(), 1).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
    }

    #[test]
    fn cone_counterexample() {
        let d = cone_cover();
        let w = form(d.b(), "x*d(y)");
        let p = crate::syntax::parse_poly(&d.b().ring, "1 + x + y").unwrap();
        let r = counterexample_suite(&d, &w, &p).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        assert!(r.lines().contains(&"CHECK xdy invariant: PASS yes".to_string()));
    }

    #[test]
    fn cone_biduals() {
        let d = cone_cover();
        let r = bidual_descent_check(&d, 1).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        let r = naive_descent_check(&d, 1).unwrap();
        assert!(!r.passed());
        assert_eq!(
            r.lines().last().unwrap(),
            "CHECK surjective: FAIL check failed: invariant y*d(x) is not in the image"
        );
    }
}
