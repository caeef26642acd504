//! Exact coefficient fields: the rationals and simple extensions `Q[w]/(m(w))`.
//!
//! A [`Scalar`] is a bare coefficient vector and carries no field pointer; the
//! additive operations are field independent, while products and inverses go
//! through the owning [`Field`].

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of a field, stored as coefficients of `1, w, w^2, ...` with trailing
/// zeros trimmed. The zero scalar is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Vec<Rational>);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Vec::new())
    }

    pub fn one() -> Self {
        Scalar(vec![Rational::one()])
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_coeffs(vec![q])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Scalar(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// The rational value when the scalar lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Scalar::from_coeffs(out)
    }

    pub fn neg(&self) -> Scalar {
        Scalar(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar(self.0.iter().map(|c| c * q).collect())
    }

    /// Sign of the leading rational coefficient, used when printing.
    pub fn is_negative_rational(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_negative()
    }
}

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    /// Monic minimal polynomial, coefficients low to high. Empty for `Q`.
    minpoly: Vec<Rational>,
    generator: String,
}

/// Coefficient field descriptor. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field(Arc<FieldData>);

/// Outcome of the irreducibility test attached to an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Proved,
    /// No prime certified irreducibility; the user assertion is kept.
    Unverified(String),
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldData { minpoly: Vec::new(), generator: "w".into() }))
    }

    /// Builds `Q[generator]/(minpoly)`. The polynomial is given low to high and
    /// must be monic of degree at least one.
    pub fn extension(minpoly: Vec<Rational>, generator: &str) -> Result<(Self, Irreducibility)> {
        let mut m = minpoly;
        while m.last().is_some_and(|x| x.is_zero()) {
            m.pop();
        }
        if m.len() < 2 {
            return Err(Error::InvalidInput("minimal polynomial must have degree >= 1".into()));
        }
        if !m.last().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        let verdict = check_irreducible(&m)?;
        Ok((Field(Arc::new(FieldData { minpoly: m, generator: generator.into() })), verdict))
    }

    /// Extension degree over `Q`.
    pub fn degree(&self) -> usize {
        if self.0.minpoly.is_empty() {
            1
        } else {
            self.0.minpoly.len() - 1
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.0.minpoly.is_empty()
    }

    pub fn generator_name(&self) -> &str {
        &self.0.generator
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.0.minpoly
    }

    /// The class of the generator `w`.
    pub fn generator(&self) -> Scalar {
        self.reduce(vec![Rational::zero(), Rational::one()])
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Scalar {
        let m = &self.0.minpoly;
        if m.is_empty() {
            // Q: only constants are meaningful here
            c.truncate(1);
            return Scalar::from_coeffs(c);
        }
        let d = m.len() - 1;
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for i in 0..d {
                c[shift + i] -= &top * &m[i];
            }
        }
        Scalar::from_coeffs(c)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        if a.0.len() == 1 && b.0.len() == 1 {
            return Scalar(vec![&a.0[0] * &b.0[0]]);
        }
        if a.0.len() == 1 {
            return b.scale(&a.0[0]);
        }
        if b.0.len() == 1 {
            return a.scale(&b.0[0]);
        }
        let mut out = vec![Rational::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.0.len() == 1 {
            return Ok(Scalar(vec![a.0[0].recip()]));
        }
        // extended Euclid in Q[w]: s*a + t*m = 1
        let m = self.0.minpoly.clone();
        let (g, s) = upoly_ext_gcd(&a.0, &m);
        if g.len() != 1 {
            // only possible when the asserted minimal polynomial is reducible
            return Err(Error::DivisionByZero);
        }
        let ginv = g[0].recip();
        Ok(self.reduce(s.into_iter().map(|c| c * &ginv).collect()))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u32) -> Scalar {
        let mut base = a.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Canonical text form, e.g. `1/2*w + 3`.
    pub fn format(&self, s: &Scalar) -> String {
        let mut out = String::new();
        self.write_scalar(&mut out, s).unwrap();
        out
    }

    pub fn write_scalar<W: Write>(&self, out: &mut W, s: &Scalar) -> fmt::Result {
        if s.is_zero() {
            return out.write_str("0");
        }
        let mut first = true;
        for (i, c) in s.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    out.write_str("-")?;
                }
            } else {
                out.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 {
                write_rational(out, &a)?;
            } else {
                if !a.is_one() {
                    write_rational(out, &a)?;
                    out.write_str("*")?;
                }
                out.write_str(&self.0.generator)?;
                if i > 1 {
                    write!(out, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

pub fn write_rational<W: Write>(out: &mut W, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(out, "{}", q.numer())
    } else {
        write!(out, "{}/{}", q.numer(), q.denom())
    }
}

/// Scalar paired with its field, for the checked arithmetic entry point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    pub field: Field,
    pub value: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: &Field, value: Scalar) -> Self {
        FieldElement { field: field.clone(), value }
    }

    pub fn apply(&self, op: FieldOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            FieldOp::Add => self.value.add(&other.value),
            FieldOp::Sub => self.value.sub(&other.value),
            FieldOp::Mul => f.mul(&self.value, &other.value),
            FieldOp::Div => f.div(&self.value, &other.value)?,
        };
        Ok(FieldElement { field: f.clone(), value })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.field.write_scalar(f, &self.value)
    }
}

// ---------------------------------------------------------------------------
// univariate helpers over Q

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

fn upoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn upoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn upoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Returns `(g, s)` with `s*a = g mod m`, `g = gcd(a, m)`.
fn upoly_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = upoly_divrem(&r0, &r1);
        let s2 = upoly_sub(&s0, &upoly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn upoly_derivative(a: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect();
    trim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// irreducibility

const PRIMES_TO_TRY: usize = 25;

fn check_irreducible(m: &[Rational]) -> Result<Irreducibility> {
    let n = m.len() - 1;
    if n == 1 {
        return Ok(Irreducibility::Proved);
    }
    let (g, _) = upoly_ext_gcd(&upoly_derivative(m), m);
    if g.len() > 1 {
        return Err(Error::ReducibleMinpoly("repeated factor".into()));
    }
    if let Some(root) = rational_root(m) {
        let mut s = String::new();
        write_rational(&mut s, &root).unwrap();
        return Err(Error::ReducibleMinpoly(alloc::format!("rational root {}", s)));
    }
    if n <= 3 {
        return Ok(Irreducibility::Proved);
    }
    // possible degrees of a rational factor, intersected over primes
    let mut possible: Vec<bool> = vec![true; n + 1];
    let mut used = 0;
    let mut p: u64 = 1;
    while used < PRIMES_TO_TRY {
        p = next_prime(p);
        if p > 10_000 {
            break;
        }
        let Some(fp) = reduce_mod_p(m, p) else { continue };
        if fp.len() != n + 1 || !ff_squarefree(&fp, p) {
            continue;
        }
        used += 1;
        let degs = ff_factor_degrees(&fp, p);
        if degs.len() == 1 {
            return Ok(Irreducibility::Proved);
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for (k, ok) in possible.iter_mut().enumerate() {
            *ok &= sums[k];
        }
        if (1..n).all(|k| !possible[k]) {
            return Ok(Irreducibility::Proved);
        }
    }
    Ok(Irreducibility::Unverified(alloc::format!(
        "minimal polynomial factors modulo all {} tested primes; irreducibility taken as asserted",
        used
    )))
}

fn next_prime(p: u64) -> u64 {
    let mut c = p + 1;
    loop {
        if c >= 2 && (2..).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
            return c;
        }
        c += 1;
    }
}

/// Rational root test on the integer-scaled polynomial; candidates limited to
/// divisors that can be enumerated by trial division.
fn rational_root(m: &[Rational]) -> Option<Rational> {
    let mut lcm = BigInt::one();
    for c in m {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = m.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(Rational::zero());
    }
    let a0 = ints[0].abs().to_u64()?;
    let an = ints.last().unwrap().abs().to_u64()?;
    if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
        return None;
    }
    let eval = |x: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc.is_zero()
    };
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let x = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                if eval(&x) {
                    return Some(x);
                }
            }
        }
    }
    None
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn reduce_mod_p(m: &[Rational], p: u64) -> Option<Vec<u64>> {
    let pb = BigInt::from(p);
    let mut out = Vec::with_capacity(m.len());
    for c in m {
        let den = c.denom().mod_floor(&pb);
        if den.is_zero() {
            return None;
        }
        let num = c.numer().mod_floor(&pb).to_u64().unwrap();
        let den = den.to_u64().unwrap();
        out.push(num * ff_inv(den, p) % p);
    }
    ff_trim(&mut out);
    Some(out)
}

fn ff_inv(a: u64, p: u64) -> u64 {
    ff_pow(a, p - 2, p)
}

fn ff_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn ff_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn ff_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ff_trim(&mut r);
    let inv = ff_inv(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        ff_trim(&mut r);
    }
    r
}

fn ff_div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ff_trim(&mut r);
    if r.len() < b.len() {
        return Vec::new();
    }
    let inv = ff_inv(*b.last().unwrap(), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        q[shift] = c;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r.pop();
        ff_trim(&mut r);
    }
    q
}

fn ff_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ff_rem(&out, f, p)
}

fn ff_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ff_trim(&mut x);
    ff_trim(&mut y);
    while !y.is_empty() {
        let r = ff_rem(&x, &y, p);
        x = core::mem::replace(&mut y, r);
    }
    if let Some(&lead) = x.last() {
        let inv = ff_inv(lead, p);
        for c in x.iter_mut() {
            *c = *c * inv % p;
        }
    }
    x
}

fn ff_squarefree(f: &[u64], p: u64) -> bool {
    let df: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect();
    let mut df = df;
    ff_trim(&mut df);
    if df.is_empty() {
        return false;
    }
    ff_gcd(f, &df, p).len() == 1
}

/// Distinct-degree factorization; returns the degree of every irreducible factor.
fn ff_factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let mut degs = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0, 1];
    let mut h = x.clone();
    let mut i = 1;
    while rest.len() > 2 * i {
        // h = x^(p^i) mod rest
        let mut acc = vec![1u64];
        let mut base = ff_rem(&h, &rest, p);
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = ff_mulmod(&acc, &base, &rest, p);
            }
            base = ff_mulmod(&base, &base, &rest, p);
            e >>= 1;
        }
        h = acc;
        let mut hx = h.clone();
        while hx.len() < 2 {
            hx.push(0);
        }
        hx[1] = (hx[1] + p - 1) % p;
        ff_trim(&mut hx);
        let g = ff_gcd(&hx, &rest, p);
        if g.len() > 1 {
            for _ in 0..(g.len() - 1) / i {
                degs.push(i);
            }
            rest = ff_div(&rest, &g, p);
            h = ff_rem(&h, &rest, p);
        }
        i += 1;
    }
    if rest.len() > 1 {
        degs.push(rest.len() - 1);
    }
    degs
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Field::rationals().write_scalar(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta3() -> Field {
        Field::extension(vec![rat(1), rat(1), rat(1)], "w").unwrap().0
    }

    #[test]
    fn rational_sum() {
        let q = Field::rationals();
        let a = FieldElement::new(&q, Scalar::from_rational(ratio(1, 2)));
        let b = FieldElement::new(&q, Scalar::from_rational(ratio(1, 3)));
        let c = a.apply(FieldOp::Add, &b).unwrap();
        assert_eq!(c.value, Scalar::from_rational(ratio(5, 6)));
        assert_eq!(alloc::format!("{}", c), "5/6");
    }

    #[test]
    fn cube_root_of_unity() {
        let k = zeta3();
        let w = k.generator();
        let w2 = k.mul(&w, &w);
        // w^2 = -w - 1
        assert_eq!(w2, Scalar::from_coeffs(vec![rat(-1), rat(-1)]));
        assert_eq!(k.format(&w2), "-w - 1");
        assert!(k.mul(&w, &w2).is_one());
        assert_eq!(k.mul(&k.inv(&w).unwrap(), &w), Scalar::one());
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let q = Field::rationals();
        let a = FieldElement::new(&q, Scalar::one());
        let z = FieldElement::new(&q, Scalar::zero());
        assert_eq!(a.apply(FieldOp::Div, &z), Err(Error::DivisionByZero));
        let b = FieldElement::new(&zeta3(), Scalar::one());
        assert_eq!(a.apply(FieldOp::Add, &b), Err(Error::FieldMismatch));
    }

    #[test]
    fn extension_validation() {
        let (k, v) = Field::extension(vec![rat(-1), rat(1)], "w").unwrap();
        assert_eq!(k.degree(), 1);
        assert_eq!(v, Irreducibility::Proved);
        // w = 1 in this degenerate extension
        assert!(k.generator().is_one());
        assert!(matches!(Field::extension(vec![rat(-1), rat(0), rat(1)], "w"), Err(Error::ReducibleMinpoly(_))));
        assert_eq!(Field::extension(vec![rat(1), rat(2)], "w").unwrap_err(), Error::NotMonic);
        assert_eq!(Field::extension(vec![rat(1), rat(1), rat(1)], "w").unwrap().1, Irreducibility::Proved);
    }

    #[test]
    fn higher_degree_irreducibility() {
        // x^4 + 1 is irreducible over Q but splits into quadratics modulo every prime
        let (_, v) = Field::extension(vec![rat(1), rat(0), rat(0), rat(0), rat(1)], "w").unwrap();
        assert!(matches!(v, Irreducibility::Unverified(_)));
        // Phi_5 is irreducible mod 2
        let (_, v) = Field::extension(vec![rat(1); 5], "w").unwrap();
        assert_eq!(v, Irreducibility::Proved);
        // (x^2+1)(x^2+2) has no rational root; the test cannot prove reducibility
        let r = Field::extension(vec![rat(2), rat(0), rat(3), rat(0), rat(1)], "w").unwrap();
        assert!(matches!(r.1, Irreducibility::Unverified(_)));
    }

    #[test]
    fn ff_degrees() {
        // x^2 + 1 mod 5 = (x-2)(x+2); mod 3 irreducible
        assert_eq!(ff_factor_degrees(&[1, 0, 1], 5), vec![1, 1]);
        assert_eq!(ff_factor_degrees(&[1, 0, 1], 3), vec![2]);
    }
}
