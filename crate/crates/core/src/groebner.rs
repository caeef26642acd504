//! Buchberger's algorithm for submodules of free modules `k[x]^r`.
//!
//! Ideals are the rank-one case. Terms are ordered first by a per-position
//! level (higher level is larger), then by the monomial order, then by
//! position (lower index is larger). All positions at one level gives the
//! term-over-position order; distinct levels give position-over-term blocks,
//! which is what kernel and lifting computations use for elimination.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::scalars::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub levels: Vec<u8>,
}

impl ModuleOrder {
    pub fn ideal(mono: MonomialOrder) -> Self {
        ModuleOrder { mono, levels: vec![0] }
    }

    pub fn top(mono: MonomialOrder, rank: usize) -> Self {
        ModuleOrder { mono, levels: vec![0; rank] }
    }

    /// The first `high` positions dominate the remaining ones.
    pub fn split(mono: MonomialOrder, rank: usize, high: usize) -> Self {
        ModuleOrder { mono, levels: (0..rank).map(|i| u8::from(i < high)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.levels.len()
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        self.levels[a.1].cmp(&self.levels[b.1]).then_with(|| self.mono.cmp(a.0, b.0)).then_with(|| b.1.cmp(&a.1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub pos: usize,
    pub coeff: Scalar,
}

/// Element of `k[x]^r`, terms sorted ascending in a fixed [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_columns(cols: &[Poly], order: &ModuleOrder) -> Self {
        let mut terms = Vec::new();
        for (pos, p) in cols.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term { mono: m.clone(), pos, coeff: c.clone() });
            }
        }
        terms.sort_by(|a, b| order.cmp((&a.mono, a.pos), (&b.mono, b.pos)));
        Vector { terms }
    }

    pub fn from_poly(p: &Poly, order: &ModuleOrder) -> Self {
        Self::from_columns(core::slice::from_ref(p), order)
    }

    pub fn to_columns(&self, rank: usize, nvars: usize) -> Vec<Poly> {
        let mut cols = vec![Poly::zero(nvars); rank];
        for t in &self.terms {
            cols[t.pos].add_term(t.mono.clone(), &t.coeff);
        }
        cols
    }

    pub fn to_poly(&self, nvars: usize) -> Poly {
        self.to_columns(1, nvars).pop().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    fn scale(&self, field: &Field, c: &Scalar) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.clone(), pos: t.pos, coeff: field.mul(&t.coeff, c) })
                .collect(),
        }
    }

    fn monic(&self, field: &Field) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => {
                let inv = field.inv(&t.coeff).unwrap();
                self.scale(field, &inv)
            }
            _ => self.clone(),
        }
    }

    /// `self - c * m * g`.
    fn sub_mul(&self, field: &Field, order: &ModuleOrder, c: &Scalar, m: &Monomial, g: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.mul(m), pos: t.pos, coeff: field.mul(&t.coeff, c).neg() })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp((&x.mono, x.pos), (&y.mono, y.pos)) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = x.coeff.add(&y.coeff);
                        if !s.is_zero() {
                            out.push(Term { mono: y.mono, pos: y.pos, coeff: s });
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    /// Highest position level present, used to detect elimination.
    pub fn max_level(&self, order: &ModuleOrder) -> Option<u8> {
        self.terms.iter().map(|t| order.levels[t.pos]).max()
    }

    pub fn positions(&self) -> BTreeSet<usize> {
        self.terms.iter().map(|t| t.pos).collect()
    }
}

/// Reduced Gröbner basis of a submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gb {
    pub field: Field,
    pub nvars: usize,
    pub order: ModuleOrder,
    elems: Vec<Vector>,
}

impl Gb {
    pub fn elems(&self) -> &[Vector] {
        &self.elems
    }

    pub fn rank(&self) -> usize {
        self.order.rank()
    }

    fn find_divisor(basis: &[Vector], t: &Term) -> Option<usize> {
        basis.iter().position(|g| {
            let l = g.lead().unwrap();
            l.pos == t.pos && l.mono.divides(&t.mono)
        })
    }

    fn reduce_with(field: &Field, order: &ModuleOrder, basis: &[Vector], v: &Vector) -> Vector {
        let mut rest = v.clone();
        let mut done: Vec<Term> = Vec::new();
        while let Some(t) = rest.terms.last().cloned() {
            match Self::find_divisor(basis, &t) {
                Some(i) => {
                    let g = &basis[i];
                    let l = g.lead().unwrap();
                    let q = l.mono.quotient_of(&t.mono);
                    let c = field.div(&t.coeff, &l.coeff).unwrap();
                    rest = rest.sub_mul(field, order, &c, &q, g);
                }
                None => {
                    done.push(rest.terms.pop().unwrap());
                }
            }
        }
        done.reverse();
        Vector { terms: done }
    }

    /// Full normal form.
    pub fn reduce(&self, v: &Vector) -> Vector {
        Self::reduce_with(&self.field, &self.order, &self.elems, v)
    }

    pub fn reduce_columns(&self, cols: &[Poly]) -> Vec<Poly> {
        let v = Vector::from_columns(cols, &self.order);
        self.reduce(&v).to_columns(self.rank(), self.nvars)
    }

    pub fn reduce_poly(&self, p: &Poly) -> Poly {
        debug_assert_eq!(self.rank(), 1);
        self.reduce(&Vector::from_poly(p, &self.order)).to_poly(self.nvars)
    }

    pub fn contains_columns(&self, cols: &[Poly]) -> bool {
        self.reduce(&Vector::from_columns(cols, &self.order)).is_zero()
    }

    pub fn contains_poly(&self, p: &Poly) -> bool {
        self.reduce_poly(p).is_zero()
    }

    /// True iff the submodule is everything (for ideals: contains 1).
    pub fn is_unit(&self) -> bool {
        (0..self.rank()).all(|pos| {
            self.elems.iter().any(|g| {
                let l = g.lead().unwrap();
                l.pos == pos && l.mono.is_one()
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<(Monomial, usize)> {
        self.elems.iter().map(|g| (g.lead().unwrap().mono.clone(), g.lead().unwrap().pos)).collect()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.elems.iter().map(|g| g.to_poly(self.nvars)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        self.elems.iter().map(|g| g.to_columns(self.rank(), self.nvars)).collect()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner(field: &Field, nvars: usize, order: &ModuleOrder, gens: &[Vector]) -> Gb {
    let ideal_case = order.rank() == 1;
    let mut basis: Vec<Vector> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: Vector, basis: &mut Vec<Vector>, pairs: &mut Vec<Pair>, pending: &mut BTreeSet<(usize, usize)>| {
        let h = h.monic(field);
        let hl = h.lead().unwrap().clone();
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gl = g.lead().unwrap();
            if gl.pos != hl.pos {
                continue;
            }
            if ideal_case && gl.mono.coprime(&hl.mono) {
                continue;
            }
            pairs.push(Pair { i, j, lcm: gl.mono.lcm(&hl.mono), pos: hl.pos });
            pending.insert((i, j));
        }
        basis.push(h);
    };

    // seed with the generators, reducing each against what is already present
    let mut seeds: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    seeds.sort_by(|a, b| {
        let x = a.lead().unwrap();
        let y = b.lead().unwrap();
        order.cmp((&x.mono, x.pos), (&y.mono, y.pos))
    });
    for s in seeds {
        let r = Gb::reduce_with(field, order, &basis, &s);
        if !r.is_zero() {
            insert(r, &mut basis, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first, ties by indices
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let o = order.cmp((&a.lcm, a.pos), (&b.lcm, b.pos)).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if o == Ordering::Less {
                best = k;
            }
        }
        let p = pairs.swap_remove(best);
        pending.remove(&(p.i, p.j));

        // Buchberger's chain criterion
        let chain = basis.iter().enumerate().any(|(k, g)| {
            if k == p.i || k == p.j {
                return false;
            }
            let gl = g.lead().unwrap();
            gl.pos == p.pos
                && gl.mono.divides(&p.lcm)
                && !pending.contains(&(p.i.min(k), p.i.max(k)))
                && !pending.contains(&(p.j.min(k), p.j.max(k)))
        });
        if chain {
            continue;
        }

        let gi = &basis[p.i];
        let gj = &basis[p.j];
        let li = gi.lead().unwrap();
        let lj = gj.lead().unwrap();
        let mi = li.mono.quotient_of(&p.lcm);
        let mj = lj.mono.quotient_of(&p.lcm);
        let s = Vector::zero().sub_mul(field, order, &Scalar::one().neg(), &mi, gi).sub_mul(
            field,
            order,
            &Scalar::one(),
            &mj,
            gj,
        );
        let r = Gb::reduce_with(field, order, &basis, &s);
        if !r.is_zero() {
            insert(r, &mut basis, &mut pairs, &mut pending);
        }
    }

    // minimize
    let mut keep: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gl = g.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            if k == i {
                return false;
            }
            let hl = h.lead().unwrap();
            hl.pos == gl.pos && hl.mono.divides(&gl.mono) && (hl.mono != gl.mono || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Vector> = keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v.clone()).collect();
        let head = Vector { terms: vec![keep[i].lead().unwrap().clone()] };
        let tail = Vector { terms: keep[i].terms[..keep[i].terms.len() - 1].to_vec() };
        let tail = Gb::reduce_with(field, order, &others, &tail);
        let mut terms = tail.terms;
        terms.extend(head.terms);
        reduced.push(Vector { terms });
    }
    reduced.sort_by(|a, b| {
        let x = a.lead().unwrap();
        let y = b.lead().unwrap();
        order.cmp((&x.mono, x.pos), (&y.mono, y.pos))
    });
    Gb { field: field.clone(), nvars, order: order.clone(), elems: reduced }
}

/// Gröbner basis of an ideal.
pub fn ideal_groebner(field: &Field, nvars: usize, mono: MonomialOrder, gens: &[Poly]) -> Gb {
    let order = ModuleOrder::ideal(mono);
    let vs: Vec<Vector> = gens.iter().map(|p| Vector::from_poly(p, &order)).collect();
    groebner(field, nvars, &order, &vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use crate::scalars::rat;
    use alloc::string::{String, ToString};

    fn fmt_gb(r: &PolyRing, gb: &Gb) -> Vec<String> {
        gb.polys().iter().map(|p| r.format(p)).collect()
    }

    #[test]
    fn principal_ideal() {
        let r = PolyRing::new(Field::rationals(), vec!["x".into(), "y".into()], MonomialOrder::DegRevLex);
        let gb = ideal_groebner(&r.field, 2, r.order, &[Poly::var(2, 0)]);
        assert_eq!(fmt_gb(&r, &gb), vec!["x".to_string()]);
    }

    #[test]
    fn lex_example() {
        // (x^2 - 1, x*y - 1) with lex x > y: by hand, x = y^(-1) = y on y^2 = 1
        let r = PolyRing::new(Field::rationals(), vec!["x".into(), "y".into()], MonomialOrder::Lex);
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let k = &r.field;
        let f = x.pow(k, 2).sub(&Poly::one(2));
        let g = x.mul(k, &y).sub(&Poly::one(2));
        let gb = ideal_groebner(k, 2, MonomialOrder::Lex, &[f, g]);
        let mut got = fmt_gb(&r, &gb);
        got.sort();
        assert_eq!(got, vec!["x - y".to_string(), "y^2 - 1".to_string()]);
    }

    #[test]
    fn module_membership() {
        // submodule of Q[x]^2 generated by (x, 1), (0, x): contains (x^2, 0)
        let k = Field::rationals();
        let o = ModuleOrder::top(MonomialOrder::DegRevLex, 2);
        let x = Poly::var(1, 0);
        let gens = [
            Vector::from_columns(&[x.clone(), Poly::one(1)], &o),
            Vector::from_columns(&[Poly::zero(1), x.clone()], &o),
        ];
        let gb = groebner(&k, 1, &o, &gens);
        assert!(gb.contains_columns(&[x.pow(&k, 2), Poly::zero(1)]));
        assert!(!gb.contains_columns(&[x.clone(), Poly::zero(1)]));
        assert!(!gb.contains_columns(&[Poly::constant(1, Scalar::from_rational(rat(1))), Poly::zero(1)]));
    }
}
