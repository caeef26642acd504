//! Sparse multivariate polynomials over a [`Field`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

/// Global monomial orders. `Block(k)` compares the first `k` variables by
/// degrevlex and breaks ties on the remaining ones by degrevlex; it eliminates
/// the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    Block(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.0.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// Polynomial with a canonical sparse representation: no zero coefficients,
/// monomials kept in a sorted map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    pub fn from_int(nvars: usize, n: i64) -> Self {
        Poly::constant(nvars, Scalar::from_int(n))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, i), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has the wrong number of variables");
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The constant value when the polynomial has degree zero.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), field.mul(c, s))).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Poly {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c.scale(q))))
    }

    pub fn mul_term(&self, field: &Field, m: &Monomial, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.mul(m), field.mul(c, s))).collect() }
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &field.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, field: &Field, mut e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(field, &base);
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, &c.scale(&crate::scalars::rat(e as i64)));
        }
        out
    }

    /// Substitutes `images[i]` (polynomials in `target_nvars` variables) for
    /// variable `i`.
    pub fn substitute(&self, field: &Field, images: &[Poly], target_nvars: usize) -> Poly {
        debug_assert_eq!(images.len(), self.nvars);
        let mut cache: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(target_nvars), p.clone()]).collect();
        let mut out = Poly::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().mul(field, &powers[1]);
                    powers.push(next);
                }
                t = t.mul(field, &powers[e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Re-embeds into a ring with `nvars` variables, sending variable `i` to
    /// `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Evaluates the variables listed in `values` at the given scalars.
    pub fn partial_eval(&self, field: &Field, values: &[(usize, Scalar)]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut m2 = m.clone();
            for (v, s) in values {
                let e = m2.0[*v];
                if e > 0 {
                    coeff = field.mul(&coeff, &field.pow(s, e));
                    m2.0[*v] = 0;
                }
            }
            out.add_term(m2, &coeff);
        }
        out
    }

    /// Divides all coefficients so that the leading coefficient is one.
    pub fn make_monic(&self, field: &Field, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = field.inv(c).expect("nonzero leading coefficient");
                self.scale(field, &inv)
            }
        }
    }
}

/// Polynomial ring descriptor: coefficient field, variable names, order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, vars, order }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        self.var_index(name)
            .map(|i| Poly::var(self.nvars(), i))
            .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown variable {}", name)))
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars())
    }

    /// Terms sorted from largest to smallest in the ring order.
    pub fn sorted_terms<'a>(&self, p: &'a Poly) -> Vec<(&'a Monomial, &'a Scalar)> {
        let mut t: Vec<_> = p.terms().collect();
        t.sort_by(|a, b| self.order.cmp(b.0, a.0));
        t
    }

    pub fn format(&self, p: &Poly) -> String {
        let mut out = String::new();
        self.write_poly(&mut out, p);
        out
    }

    pub fn write_poly(&self, out: &mut String, p: &Poly) {
        if p.is_zero() {
            out.push('0');
            return;
        }
        for (i, (m, c)) in self.sorted_terms(p).into_iter().enumerate() {
            self.write_term(out, m, c, i == 0);
        }
    }

    fn write_term(&self, out: &mut String, m: &Monomial, c: &Scalar, first: bool) {
        let nonzero = c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
        let compound = nonzero > 1;
        let neg = !compound
            && c.coeffs()
                .iter()
                .rev()
                .find(|x| !num_traits::Zero::is_zero(*x))
                .is_some_and(num_traits::Signed::is_negative);
        let abs = if neg { c.neg() } else { c.clone() };
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = self.format_monomial(m);
        if mono.is_empty() {
            if compound {
                out.push('(');
                self.field.write_scalar(out, &abs).unwrap();
                out.push(')');
            } else {
                self.field.write_scalar(out, &abs).unwrap();
            }
            return;
        }
        if !abs.is_one() {
            if compound {
                out.push('(');
                self.field.write_scalar(out, &abs).unwrap();
                out.push(')');
            } else {
                self.field.write_scalar(out, &abs).unwrap();
            }
            out.push('*');
        }
        out.push_str(&mono);
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.vars[i]);
            if e > 1 {
                write!(s, "^{}", e).unwrap();
            }
        }
        s
    }

    /// Whether a formatted polynomial needs parentheses as a factor.
    pub fn is_compound(&self, p: &Poly) -> bool {
        if p.len() > 1 {
            return true;
        }
        match p.terms().next() {
            Some((_, c)) => c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() > 1,
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use alloc::string::ToString;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(Field::rationals(), vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn degrevlex_order() {
        let o = MonomialOrder::DegRevLex;
        // x*z < y^2 in degrevlex with x > y > z
        assert_eq!(o.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&Monomial(vec![1, 0, 0]), &Monomial(vec![0, 1, 0])), Ordering::Greater);
        let b = MonomialOrder::Block(1);
        // any monomial with the first variable beats any without
        assert_eq!(b.cmp(&Monomial(vec![1, 0]), &Monomial(vec![0, 5])), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_printing() {
        let r = ring(&["x", "y"]);
        let k = &r.field;
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).pow(k, 2);
        assert_eq!(r.format(&p), "x^2 + 2*x*y + y^2");
        assert_eq!(r.format(&p.derivative(0)), "2*x + 2*y");
        let q = x.sub(&y.scale_rational(&crate::scalars::ratio(1, 2)));
        assert_eq!(r.format(&q), "x - 1/2*y");
        assert_eq!(r.format(&Poly::from_int(2, -3)), "-3");
        let s = p.substitute(k, &[y.clone(), Poly::from_int(2, 1)], 2);
        assert_eq!(r.format(&s), "y^2 + 2*y + 1");
        assert_eq!(p.partial_eval(k, &[(1, Scalar::from_rational(rat(0)))]), x.pow(k, 2));
    }
}
