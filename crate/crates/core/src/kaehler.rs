//! Kähler differentials of affine varieties: presentations of `Ω^p`
//! (absolute or relative to a base), differential forms with fraction
//! coefficients, the de Rham differential, pullbacks, regularity, and the
//! equalizer check for finite étale covers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::modules::{denominator_ideal, encode, kernel, restrict, ModuleMap, PresentedModule};
use crate::poly::{Poly, PolyRing};
use crate::ring::{independent_set, Lifter, QRing, QuotientRing, Restriction, RingHom};
use crate::scalars::Scalar;
use crate::syntax::{parse_expr, Expr};

/// Geometric properties asserted by the user.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub irreducible: bool,
    pub normal: bool,
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineVariety {
    pub name: String,
    pub ring: QRing,
    pub flags: Flags,
}

impl AffineVariety {
    pub fn new(name: &str, ring: QRing, flags: Flags) -> Self {
        AffineVariety { name: name.into(), ring, flags }
    }

    pub fn dimension(&self) -> usize {
        independent_set(&self.ring).len()
    }

    /// Jacobian criterion: the ideal plus the maximal minors of the Jacobian
    /// at the expected codimension is the unit ideal.
    pub fn check_smooth(&self) -> bool {
        let q = &self.ring;
        if q.is_trivial() {
            return true;
        }
        let n = q.nvars();
        let c = n - self.dimension();
        if c == 0 {
            return true;
        }
        let jac: Vec<Vec<Poly>> = q.ideal.iter().map(|f| (0..n).map(|i| q.nf(&f.derivative(i))).collect()).collect();
        let mut gens = q.ideal.clone();
        let mut rows_sel = Vec::new();
        subsets(jac.len(), c, &mut |rows| rows_sel.push(rows.to_vec()));
        let mut cols_sel = Vec::new();
        subsets(n, c, &mut |cols| cols_sel.push(cols.to_vec()));
        for rows in &rows_sel {
            for cols in &cols_sel {
                let m: Vec<Vec<Poly>> =
                    rows.iter().map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect()).collect();
                let d = q.nf(&det(q, &m));
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        crate::groebner::ideal_groebner(q.field(), n, q.order(), &gens).is_unit()
    }
}

pub(crate) fn subsets(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
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

/// Determinant by cofactor expansion, reduced in `q`.
pub fn det(q: &QuotientRing, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let nv = q.nvars();
    if n == 0 {
        return Poly::one(nv);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let k = q.field();
    let mut out = Poly::zero(nv);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = q.nf(&m[0][j].mul(k, &det(q, &minor)));
        out = if j % 2 == 0 { out.add(&t) } else { out.sub(&t) };
    }
    q.nf(&out)
}

/// Element of the total ring of fractions; normalized so that scalar
/// denominators are absorbed and exact quotients become polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Frac {
    pub fn poly(p: Poly) -> Self {
        let n = p.nvars();
        Frac { num: p, den: Poly::one(n) }
    }

    pub fn new(q: &QuotientRing, num: &Poly, den: &Poly) -> Result<Self> {
        let k = q.field();
        let num = q.nf(num);
        let den = q.nf(den);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let nv = q.nvars();
        if num.is_zero() {
            return Ok(Frac::poly(Poly::zero(nv)));
        }
        if let Some(c) = den.constant_value() {
            return Ok(Frac::poly(num.scale(k, &k.inv(&c)?)));
        }
        if let Some(quot) = Lifter::new(q, &[vec![den.clone()]], &[], 1).lift(core::slice::from_ref(&num)) {
            return Ok(Frac::poly(q.nf(&quot[0])));
        }
        let (_, lc) = den.leading_term(q.order()).unwrap();
        let inv = k.inv(lc)?;
        Ok(Frac { num: num.scale(k, &inv), den: den.scale(k, &inv) })
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, q: &QuotientRing, o: &Frac) -> Result<Frac> {
        let k = q.field();
        if self.den == o.den {
            return Frac::new(q, &self.num.add(&o.num), &self.den);
        }
        Frac::new(q, &self.num.mul(k, &o.den).add(&o.num.mul(k, &self.den)), &self.den.mul(k, &o.den))
    }

    pub fn neg(&self) -> Frac {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, q: &QuotientRing, o: &Frac) -> Result<Frac> {
        let k = q.field();
        Frac::new(q, &self.num.mul(k, &o.num), &self.den.mul(k, &o.den))
    }

    pub fn div(&self, q: &QuotientRing, o: &Frac) -> Result<Frac> {
        let k = q.field();
        Frac::new(q, &self.num.mul(k, &o.den), &self.den.mul(k, &o.num))
    }

    pub fn format(&self, ring: &PolyRing) -> String {
        let num = ring.format(&self.num);
        if self.is_poly() {
            return num;
        }
        let den = ring.format(&self.den);
        let wrap = |s: String, compound: bool| if compound { format!("({})", s) } else { s };
        let num = wrap(num, ring.is_compound(&self.num));
        let den_compound = ring.is_compound(&self.den) || den.contains('*');
        format!("{}/{}", num, wrap(den, den_compound))
    }
}

/// Sorts `idx`; `None` on repeated indices, otherwise the sign of the sort.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut neg = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                neg = !neg;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(neg)
}

/// `sum c_I dx_I` with `I` strictly ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PForm {
    pub ring: QRing,
    pub degree: usize,
    terms: BTreeMap<Vec<usize>, Frac>,
}

impl PForm {
    pub fn zero(ring: &QRing, degree: usize) -> Self {
        PForm { ring: ring.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn function(ring: &QRing, f: Frac) -> Self {
        let mut w = Self::zero(ring, 0);
        if !f.is_zero() {
            w.terms.insert(Vec::new(), f);
        }
        w
    }

    pub fn poly_function(ring: &QRing, p: &Poly) -> Self {
        Self::function(ring, Frac::poly(ring.nf(p)))
    }

    pub fn dx(ring: &QRing, i: usize) -> Self {
        let mut w = Self::zero(ring, 1);
        w.terms.insert(vec![i], Frac::poly(Poly::one(ring.nvars())));
        w
    }

    /// Single term `c dx_I`, any index order.
    pub fn term(ring: &QRing, c: Frac, idx: &[usize]) -> Self {
        let mut w = Self::zero(ring, idx.len());
        let mut idx = idx.to_vec();
        if let Some(neg) = sort_sign(&mut idx) {
            if !c.is_zero() {
                w.terms.insert(idx, if neg { c.neg() } else { c });
            }
        }
        w
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Frac)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Option<&Frac> {
        self.terms.get(idx)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(|c| c.is_poly())
    }

    fn check(&self, o: &PForm) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &PForm) -> Result<PForm> {
        self.check(o)?;
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(o.clone());
        }
        if self.degree != o.degree {
            return Err(Error::InvalidInput(format!("adding forms of degrees {} and {}", self.degree, o.degree)));
        }
        let mut out = self.clone();
        for (i, c) in &o.terms {
            let s = match out.terms.get(i) {
                Some(a) => a.add(&self.ring, c)?,
                None => c.clone(),
            };
            if s.is_zero() {
                out.terms.remove(i);
            } else {
                out.terms.insert(i.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> PForm {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, o: &PForm) -> Result<PForm> {
        self.add(&o.neg())
    }

    pub fn scale(&self, f: &Frac) -> Result<PForm> {
        let mut out = PForm::zero(&self.ring, self.degree);
        for (i, c) in &self.terms {
            let p = c.mul(&self.ring, f)?;
            if !p.is_zero() {
                out.terms.insert(i.clone(), p);
            }
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &Poly) -> Result<PForm> {
        self.scale(&Frac::poly(p.clone()))
    }

    pub fn wedge(&self, o: &PForm) -> Result<PForm> {
        self.check(o)?;
        let mut out = PForm::zero(&self.ring, self.degree + o.degree);
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                let mut idx: Vec<usize> = i.iter().chain(j).copied().collect();
                let Some(neg) = sort_sign(&mut idx) else { continue };
                let c = a.mul(&self.ring, b)?;
                let t = PForm::term(&self.ring, if neg { c.neg() } else { c }, &idx);
                out = out.add(&t)?;
            }
        }
        out.degree = self.degree + o.degree;
        Ok(out)
    }

    /// Exterior derivative of a form with polynomial coefficients.
    pub fn d(&self) -> Result<PForm> {
        let q = &self.ring;
        let mut out = PForm::zero(q, self.degree + 1);
        for (i, c) in &self.terms {
            if !c.is_poly() {
                return Err(Error::NonRegularCoefficient(c.format(&q.ring)));
            }
            for j in 0..q.nvars() {
                let dc = c.num.derivative(j);
                if dc.is_zero() {
                    continue;
                }
                let mut idx = vec![j];
                idx.extend(i);
                out = out.add(&PForm::term(q, Frac::poly(q.nf(&dc)), &idx))?;
            }
        }
        out.degree = self.degree + 1;
        Ok(out)
    }

    /// Pullback along `h: B -> C` of a form over `B`.
    pub fn pullback(&self, h: &RingHom) -> Result<PForm> {
        if *h.source != *self.ring {
            return Err(Error::RingMismatch);
        }
        let c = &h.target;
        let dimg: Vec<PForm> = h
            .images
            .iter()
            .map(|img| -> Result<PForm> {
                let mut w = PForm::zero(c, 1);
                for j in 0..c.nvars() {
                    let dj = c.nf(&img.derivative(j));
                    if !dj.is_zero() {
                        w = w.add(&PForm::term(c, Frac::poly(dj), &[j]))?;
                    }
                }
                Ok(w)
            })
            .collect::<Result<_>>()?;
        let mut out = PForm::zero(c, self.degree);
        for (i, f) in &self.terms {
            let num = h.apply(&f.num);
            let den = h.apply(&f.den);
            let mut t = PForm::function(c, Frac::new(c, &num, &den)?);
            for &v in i {
                t = t.wedge(&dimg[v])?;
            }
            out = out.add(&t)?;
        }
        out.degree = self.degree;
        Ok(out)
    }

    /// Common denominator and numerators indexed by `index`.
    pub fn clear_denominators(&self, index: &[Vec<usize>]) -> Result<(Vec<Poly>, Poly)> {
        let q = &self.ring;
        let k = q.field();
        let nv = q.nvars();
        let mut dens: Vec<Poly> = Vec::new();
        for c in self.terms.values() {
            if !c.is_poly() && !dens.contains(&c.den) {
                dens.push(c.den.clone());
            }
        }
        let mut den = Poly::one(nv);
        for d in &dens {
            den = den.mul(k, d);
        }
        let mut v = vec![Poly::zero(nv); index.len()];
        for (i, c) in &self.terms {
            let Some(pos) = index.iter().position(|x| x == i) else {
                return Err(Error::InvalidInput("form uses a differential outside the presentation".into()));
            };
            let mut cofactor = Poly::one(nv);
            for d in &dens {
                if *d != c.den {
                    cofactor = cofactor.mul(k, d);
                }
            }
            let scale = if c.is_poly() { den.clone() } else { cofactor };
            let num = c.num.mul(k, &scale);
            v[pos] = q.nf(&num);
        }
        Ok((v, q.nf(&den)))
    }

    /// Textual form: terms `coeff * d(x)^d(y)` with the coefficient always
    /// present; degree-zero forms print as their coefficient.
    pub fn format(&self) -> String {
        let ring = &self.ring.ring;
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in &self.terms {
            let mut s = c.format(ring);
            let compound = c.is_poly() && ring.is_compound(&c.num);
            let neg = !compound && s.starts_with('-');
            if neg {
                s.remove(0);
            }
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if compound && !i.is_empty() {
                out.push('(');
                out.push_str(&s);
                out.push(')');
            } else {
                out.push_str(&s);
            }
            if !i.is_empty() {
                out.push_str(" * ");
                let ds: Vec<String> = i.iter().map(|&v| format!("d({})", ring.vars[v])).collect();
                out.push_str(&ds.join("^"));
            }
        }
        out
    }
}

/// Evaluates a parsed expression as a form over `q`.
pub fn eval_form(q: &QRing, e: &Expr) -> Result<PForm> {
    let k = q.field();
    let nv = q.nvars();
    Ok(match e {
        Expr::Num(r) => PForm::poly_function(q, &Poly::constant(nv, Scalar::from_rational(r.clone()))),
        Expr::Ident(name) => match q.ring.var_index(name) {
            Some(i) => PForm::poly_function(q, &Poly::var(nv, i)),
            None if !k.is_rationals() && name == k.generator_name() => {
                PForm::poly_function(q, &Poly::constant(nv, k.generator()))
            }
            None => return Err(Error::InvalidInput(format!("unknown variable {}", name))),
        },
        Expr::D(name) => {
            let i = q.ring.var_index(name).ok_or_else(|| Error::InvalidInput(format!("unknown variable {}", name)))?;
            PForm::dx(q, i)
        }
        Expr::Neg(a) => eval_form(q, a)?.neg(),
        Expr::Add(a, b) => eval_form(q, a)?.add(&eval_form(q, b)?)?,
        Expr::Sub(a, b) => eval_form(q, a)?.sub(&eval_form(q, b)?)?,
        Expr::Mul(a, b) | Expr::Wedge(a, b) => eval_form(q, a)?.wedge(&eval_form(q, b)?)?,
        Expr::Div(a, b) => {
            let d = eval_form(q, b)?;
            if d.degree != 0 {
                return Err(Error::InvalidInput("division by a form".into()));
            }
            let f = d.terms.get(&Vec::new()).cloned().ok_or(Error::ZeroDenominator)?;
            let inv = Frac::poly(Poly::one(nv)).div(q, &f)?;
            eval_form(q, a)?.scale(&inv)?
        }
        Expr::Pow(a, n) => {
            let base = eval_form(q, a)?;
            if base.degree != 0 {
                return Err(Error::InvalidInput("power of a form of positive degree".into()));
            }
            let mut out = PForm::poly_function(q, &Poly::one(nv));
            for _ in 0..*n {
                out = out.wedge(&base)?;
            }
            out
        }
    })
}

pub fn parse_form(q: &QRing, s: &str) -> Result<PForm> {
    eval_form(q, &parse_expr(s)?)
}

/// `Ω^p` with generators `dx_I` for `I` among the surviving differentials.
#[derive(Clone, Debug)]
pub struct OmegaP {
    pub module: PresentedModule,
    pub p: usize,
    /// Index sets of the generators, in generator order.
    pub index: Vec<Vec<usize>>,
    /// Variables whose differentials vanish (relative to the base).
    pub killed: Vec<usize>,
}

impl OmegaP {
    pub fn ring(&self) -> &QRing {
        &self.module.ring
    }

    /// Numerator vector and common denominator of a form.
    pub fn vector_of(&self, w: &PForm) -> Result<(Vec<Poly>, Poly)> {
        if w.ring != *self.ring() {
            return Err(Error::RingMismatch);
        }
        if !w.is_zero() && w.degree != self.p {
            return Err(Error::InvalidInput(format!("expected a {}-form", self.p)));
        }
        let mut v = PForm::zero(self.ring(), self.p);
        for (i, c) in w.terms() {
            if i.iter().any(|x| self.killed.contains(x)) {
                continue;
            }
            v = v.add(&PForm::term(self.ring(), c.clone(), i))?;
        }
        v.clear_denominators(&self.index)
    }

    pub fn form_of(&self, v: &[Poly]) -> PForm {
        let q = self.ring();
        let mut w = PForm::zero(q, self.p);
        for (c, i) in v.iter().zip(&self.index) {
            let c = q.nf(c);
            if !c.is_zero() {
                w.terms.insert(i.clone(), Frac::poly(c));
            }
        }
        w
    }

    /// Equality in `Ω^p` of forms with polynomial coefficients, and of
    /// fraction forms after clearing a common denominator.
    pub fn equal(&self, a: &PForm, b: &PForm) -> Result<bool> {
        let (v, _) = self.vector_of(&a.sub(b)?)?;
        Ok(self.module.is_zero_element(&v))
    }

    /// Unique representative: module normal form for regular forms.
    pub fn canonical(&self, w: &PForm) -> Result<PForm> {
        if !w.is_polynomial() {
            return Ok(w.clone());
        }
        let (v, _) = self.vector_of(w)?;
        let r = self.module.relation_gb().reduce_columns(&v);
        Ok(self.form_of(&r))
    }
}

/// Presentation of `Ω^p`; with a base `A -> B`, differentials of the base
/// are killed.
pub fn omega_p(q: &QRing, p: isize, base: Option<&RingHom>) -> Result<OmegaP> {
    if p < 0 {
        return Err(Error::NegativeDegree);
    }
    let p = p as usize;
    let n = q.nvars();
    let nv = n;
    let mut killed = Vec::new();
    let mut extra: Vec<Poly> = Vec::new();
    if let Some(h) = base {
        if *h.target != **q {
            return Err(Error::RingMismatch);
        }
        for img in &h.images {
            let single =
                img.len() == 1 && img.total_degree() == 1 && img.terms().next().is_some_and(|(_, c)| c.is_one());
            match (single, (0..n).find(|&i| img.uses_var(i))) {
                (true, Some(i)) if !killed.contains(&i) => killed.push(i),
                _ => extra.push(img.clone()),
            }
        }
        killed.sort();
    }
    let kept: Vec<usize> = (0..n).filter(|i| !killed.contains(i)).collect();
    let one_rels: Vec<Vec<Poly>> =
        q.ideal.iter().chain(&extra).map(|f| kept.iter().map(|&i| q.nf(&f.derivative(i))).collect()).collect();
    let mut index = Vec::new();
    subsets(kept.len(), p, &mut |s| index.push(s.iter().map(|&j| kept[j]).collect::<Vec<usize>>()));
    let labels: Vec<String> = if p == 0 {
        vec!["1".into()]
    } else {
        index
            .iter()
            .map(|i| i.iter().map(|&v| format!("d({})", q.ring.vars[v])).collect::<Vec<_>>().join("^"))
            .collect()
    };
    let mut rels = Vec::new();
    if p >= 1 {
        let mut lower = Vec::new();
        subsets(kept.len(), p - 1, &mut |s| lower.push(s.iter().map(|&j| kept[j]).collect::<Vec<usize>>()));
        for r in &one_rels {
            for j in &lower {
                let mut row = vec![Poly::zero(nv); index.len()];
                let mut any = false;
                for (a, &i) in r.iter().zip(&kept) {
                    if a.is_zero() {
                        continue;
                    }
                    let mut idx = vec![i];
                    idx.extend(j);
                    let Some(neg) = sort_sign(&mut idx) else { continue };
                    let pos = index.iter().position(|x| *x == idx).unwrap();
                    row[pos] = if neg { row[pos].sub(a) } else { row[pos].add(a) };
                    any = true;
                }
                if any {
                    rels.push(row);
                }
            }
        }
    }
    Ok(OmegaP { module: PresentedModule::new(q, labels, rels), p, index, killed })
}

#[derive(Clone, Debug)]
pub enum Regularity {
    /// The same form with polynomial coefficients.
    Regular(PForm),
    /// Generators of the denominator ideal.
    NotRegular(Vec<Poly>),
}

pub fn regularity(w: &PForm, x: &AffineVariety) -> Result<Regularity> {
    let om = omega_p(&x.ring, w.degree as isize, None)?;
    let (v, den) = om.vector_of(w)?;
    let d = denominator_ideal(&v, &den, &om.module)?;
    Ok(match d.certificate {
        Some(c) => Regularity::Regular(om.canonical(&om.form_of(&c))?),
        None => Regularity::NotRegular(d.generators),
    })
}

/// `B ⊗_A B` with the two coprojections.
pub fn tensor_square(h: &RingHom) -> Result<(QRing, RingHom, RingHom)> {
    let b = &h.target;
    let n = b.nvars();
    let k = b.field();
    let mut vars = b.ring.vars.clone();
    vars.extend(b.ring.vars.iter().map(|v| format!("{}_2", v)));
    let ring = Arc::new(PolyRing::new(k.clone(), vars, b.order()));
    let left: Vec<usize> = (0..n).collect();
    let right: Vec<usize> = (n..2 * n).collect();
    let mut ideal: Vec<Poly> = b.ideal.iter().map(|f| f.remap(2 * n, &left)).collect();
    ideal.extend(b.ideal.iter().map(|f| f.remap(2 * n, &right)));
    for img in &h.images {
        ideal.push(img.remap(2 * n, &left).sub(&img.remap(2 * n, &right)));
    }
    let t = QuotientRing::new(ring, ideal);
    let p1 = RingHom::new(b.clone(), t.clone(), (0..n).map(|i| Poly::var(2 * n, i)).collect())?;
    let p2 = RingHom::new(b.clone(), t.clone(), (0..n).map(|i| Poly::var(2 * n, n + i)).collect())?;
    Ok((t, p1, p2))
}

/// Outcome of the sheaf-condition check for a finite étale cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualizerReport {
    pub injective: bool,
    pub exact: bool,
}

impl EqualizerReport {
    pub fn holds(&self) -> bool {
        self.injective && self.exact
    }
}

/// Checks that `Ω¹(A) -> Ω¹(B) ⇉ Ω¹(B ⊗_A B)` is an equalizer, as modules
/// over `A`, for a finite étale `h: A -> B` generated by `basis`.
pub fn equalizer_check(h: &RingHom, basis: &[Poly]) -> Result<EqualizerReport> {
    let rel = omega_p(&h.target, 1, Some(h))?;
    if !rel.module.is_zero() {
        return Err(Error::NotEtale(format!("relative differentials {}", rel.module.format_relations().join(", "))));
    }
    let a = &h.source;
    let b = &h.target;
    let (t, p1, p2) = tensor_square(h)?;
    let into_t = h.then(&p1)?;
    let res_b = Restriction::new(h, basis.to_vec())?;
    let k = b.field();
    let mut tbasis = Vec::new();
    for x in basis {
        for y in basis {
            tbasis.push(t.nf(&p1.apply(x).mul(k, &p2.apply(y))));
        }
    }
    let res_t = Restriction::new(&into_t, tbasis)?;
    let om_a = omega_p(a, 1, None)?;
    let om_b = omega_p(b, 1, None)?;
    let om_t = omega_p(&t, 1, None)?;
    let mb = restrict(&om_b.module, &res_b)?;
    let mt = restrict(&om_t.module, &res_t)?;
    let gb_ = om_b.module.ngens();
    let gt = om_t.module.ngens();
    // p1* - p2* on restricted generators basis_k * dx_i
    let mut cols = Vec::new();
    for idx in &om_b.index {
        for beta in basis {
            let w = PForm::term(b, Frac::poly(beta.clone()), idx);
            let diff = w.pullback(&p1)?.sub(&w.pullback(&p2)?)?;
            let (v, _) = om_t.vector_of(&diff)?;
            cols.push(encode(&v, &res_t, gt)?);
        }
    }
    let f = ModuleMap::new(mb.clone(), mt, cols, None)?;
    let (_, inc) = kernel(&f)?;
    // Ω¹(A) -> Ω¹(B) restricted to A
    let mut img_cols = Vec::new();
    for idx in &om_a.index {
        let w = PForm::term(a, Frac::poly(Poly::one(a.nvars())), idx).pullback(h)?;
        let (v, _) = om_b.vector_of(&w)?;
        img_cols.push(encode(&v, &res_b, gb_)?);
    }
    let pull = ModuleMap::new(om_a.module.clone(), mb.clone(), img_cols.clone(), None)?;
    let injective = kernel(&pull)?.0.is_zero();
    let lifter = Lifter::new(a, &img_cols, &mb.relations, mb.ngens());
    let exact = inc.columns.iter().all(|c| lifter.contains(c)) && pull.then(&f)?.is_zero();
    Ok(EqualizerReport { injective, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::scalars::{rat, Field};
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

    fn hom(src: &QRing, tgt: &QRing, imgs: &[&str]) -> RingHom {
        let images = imgs.iter().map(|s| crate::syntax::parse_poly(&tgt.ring, s).unwrap()).collect();
        RingHom::new(src.clone(), tgt.clone(), images).unwrap()
    }

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn omega_presentations() {
        let a1 = qring(&q(), &["t"], &[]);
        let om = omega_p(&a1, 1, None).unwrap();
        assert_eq!(om.module.labels, vec!["d(t)".to_string()]);
        assert!(om.module.is_free());
        let c = qring(&q(), &["x", "y"], &["x^2 + y^2 - 1"]);
        let om = omega_p(&c, 1, None).unwrap();
        assert_eq!(om.module.format_relations(), vec!["2*x*d(x) + 2*y*d(y)".to_string()]);
        let a2 = qring(&q(), &["x", "y"], &[]);
        let om2 = omega_p(&a2, 2, None).unwrap();
        assert_eq!(om2.module.labels, vec!["d(x)^d(y)".to_string()]);
        assert!(om2.module.is_free());
        assert!(matches!(omega_p(&a2, -1, None), Err(Error::NegativeDegree)));
        let a3 = qring(&q(), &["x", "y", "z"], &[]);
        assert_eq!(omega_p(&a3, 2, None).unwrap().module.ngens(), 3);
        assert_eq!(omega_p(&a3, 0, None).unwrap().module.ngens(), 1);
    }

    #[test]
    fn relative_omega_of_the_cone() {
        let k = Field::extension(vec![rat(1), rat(1), rat(1)], "w").unwrap().0;
        let a = qring(&k, &["u", "v"], &[]);
        let b =
            qring(&k, &["x", "y", "u", "v"], &["x^3 - u*v^2", "y^3 - u^2*v", "x^2 - y*v", "y^2 - x*u", "x*y - u*v"]);
        let h = hom(&a, &b, &["u", "v"]);
        let om = omega_p(&b, 1, Some(&h)).unwrap();
        assert_eq!(om.module.labels, vec!["d(x)".to_string(), "d(y)".to_string()]);
        // x^2 = y*v and y^2 = x*u in the coefficients
        let mut rels = om.module.format_relations();
        rels.sort();
        assert_eq!(
            rels,
            vec!["-u*d(x) + 2*y*d(y)", "2*x*d(x) - v*d(y)", "3*x*u*d(y)", "3*y*v*d(x)", "y*d(x) + x*d(y)"]
        );
    }

    #[test]
    fn derivative_examples() {
        let a1 = qring(&q(), &["t"], &[]);
        let w = parse_form(&a1, "t^2").unwrap().d().unwrap();
        assert_eq!(w.format(), "2*t * d(t)");
        let a2 = qring(&q(), &["x", "y"], &[]);
        assert_eq!(parse_form(&a2, "x*d(y)").unwrap().d().unwrap().format(), "1 * d(x)^d(y)");
        let s = parse_form(&a2, "y*d(x)").unwrap().d().unwrap().add(&parse_form(&a2, "x*d(y)").unwrap().d().unwrap());
        assert!(s.unwrap().is_zero());
        let frac = parse_form(&a1, "1/t").unwrap();
        assert!(matches!(frac.d(), Err(Error::NonRegularCoefficient(_))));
    }

    #[test]
    fn pullbacks() {
        let b = qring(&q(), &["y"], &[]);
        let a = qring(&q(), &["t"], &[]);
        let sigma = hom(&b, &b, &["-y"]);
        assert_eq!(parse_form(&b, "y*d(y)").unwrap().pullback(&sigma).unwrap().format(), "y * d(y)");
        let inc = hom(&a, &b, &["y^2"]);
        assert_eq!(parse_form(&a, "d(t)").unwrap().pullback(&inc).unwrap().format(), "2*y * d(y)");
        let id = RingHom::identity(&a);
        let w = parse_form(&a, "(t^2 + 1) * d(t)").unwrap();
        assert_eq!(w.pullback(&id).unwrap(), w);
    }

    #[test]
    fn printing_and_parsing() {
        let a2 = qring(&q(), &["x", "y"], &[]);
        assert!(matches!(parse_form(&a2, "d(x) + d(x)^d(y)"), Err(Error::InvalidInput(_))));
        let w = parse_form(&a2, "(x + 1)*d(x) - 3*y*d(y)").unwrap();
        assert_eq!(w.format(), "(x + 1) * d(x) - 3*y * d(y)");
        assert_eq!(parse_form(&a2, &w.format()).unwrap(), w);
        let f = parse_form(&a2, "1/(2*x) * d(y)").unwrap();
        assert_eq!(f.format(), "1/2/x * d(y)");
        assert_eq!(parse_form(&a2, &f.format()).unwrap(), f);
        assert_eq!(parse_form(&a2, "d(x)^d(x)").unwrap().format(), "0");
        assert_eq!(parse_form(&a2, "d(y)^d(x)").unwrap().format(), "-1 * d(x)^d(y)");
    }

    #[test]
    fn regularity_examples() {
        let a1 = qring(&q(), &["t"], &[]);
        let x = AffineVariety::new("A1", a1.clone(), Flags { irreducible: true, normal: true, smooth: true });
        match regularity(&parse_form(&a1, "1/t * d(t)").unwrap(), &x).unwrap() {
            Regularity::NotRegular(g) => assert_eq!(g, vec![Poly::var(1, 0)]),
            other => panic!("{:?}", other),
        }
        match regularity(&parse_form(&a1, "1/2 * d(t)").unwrap(), &x).unwrap() {
            Regularity::Regular(w) => assert_eq!(w.format(), "1/2 * d(t)"),
            other => panic!("{:?}", other),
        }
        let b = qring(&q(), &["y"], &[]);
        let w = AffineVariety::new("W", b.clone(), Flags::default());
        assert!(matches!(regularity(&parse_form(&b, "y*d(y)").unwrap(), &w).unwrap(), Regularity::Regular(_)));
    }

    #[test]
    fn smoothness() {
        let c = qring(&q(), &["x", "y"], &["x^2 + y^2 - 1"]);
        assert!(AffineVariety::new("C", c, Flags::default()).check_smooth());
        let cusp = qring(&q(), &["x", "y"], &["y^2 - x^3"]);
        assert!(!AffineVariety::new("K", cusp, Flags::default()).check_smooth());
        let a2 = qring(&q(), &["x", "y"], &[]);
        assert!(AffineVariety::new("A2", a2, Flags::default()).check_smooth());
    }

    #[test]
    fn equalizers() {
        let a = qring(&q(), &["t", "s"], &["t*s - 1"]);
        let b = qring(&q(), &["y", "r"], &["y*r - 1"]);
        let h = hom(&a, &b, &["y^2", "r^2"]);
        let rep = equalizer_check(&h, &[Poly::one(2), Poly::var(2, 0)]).unwrap();
        assert!(rep.holds(), "{:?}", rep);
        let a0 = qring(&q(), &["t"], &[]);
        let b0 = qring(&q(), &["y"], &[]);
        let h0 = hom(&a0, &b0, &["y^2"]);
        assert!(matches!(equalizer_check(&h0, &[Poly::one(1), Poly::var(1, 0)]), Err(Error::NotEtale(_))));
        let id = RingHom::identity(&a0);
        assert!(equalizer_check(&id, &[Poly::one(1)]).unwrap().holds());
    }
}
