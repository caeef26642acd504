//! Small standard examples: affine spaces, the circle, the Kummer double
//! cover of the line and the degree-3 cover of the plane by the cone over a
//! twisted cubic with its `μ3` action.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::descent::GaloisCoverDatum;
use crate::error::Result;
use crate::kaehler::{AffineVariety, Flags};
use crate::poly::{MonomialOrder, Poly, PolyRing};
use crate::ring::{localize, QRing, QuotientRing, RingHom};
use crate::scalars::Field;
use crate::syntax::parse_poly;

pub const SMOOTH: Flags = Flags { irreducible: true, normal: true, smooth: true };
pub const NORMAL: Flags = Flags { irreducible: true, normal: true, smooth: false };

pub fn qring(field: &Field, vars: &[&str], ideal: &[&str]) -> Result<QRing> {
    let ring =
        Arc::new(PolyRing::new(field.clone(), vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex));
    let ideal = ideal.iter().map(|s| parse_poly(&ring, s)).collect::<Result<Vec<_>>>()?;
    Ok(QuotientRing::new(ring, ideal))
}

pub fn hom(src: &QRing, tgt: &QRing, images: &[&str]) -> Result<RingHom> {
    let images = images.iter().map(|s| parse_poly(&tgt.ring, s)).collect::<Result<Vec<_>>>()?;
    RingHom::new(src.clone(), tgt.clone(), images)
}

pub fn polys(q: &QRing, items: &[&str]) -> Result<Vec<Poly>> {
    items.iter().map(|s| parse_poly(&q.ring, s)).collect()
}

/// `ℚ(w)` with `w^2 + w + 1 = 0`.
pub fn zeta3() -> Field {
    Field::extension(alloc::vec![crate::scalars::rat(1), crate::scalars::rat(1), crate::scalars::rat(1)], "w")
        .expect("irreducible")
        .0
}

pub fn affine(field: &Field, vars: &[&str]) -> AffineVariety {
    AffineVariety::new("affine", qring(field, vars, &[]).expect("no relations"), SMOOTH)
}

pub fn circle() -> AffineVariety {
    AffineVariety::new("circle", qring(&Field::rationals(), &["x", "y"], &["x^2 + y^2 - 1"]).unwrap(), SMOOTH)
}

/// `W = X` with the trivial group.
pub fn trivial_cover(x: &AffineVariety) -> GaloisCoverDatum {
    let id = RingHom::identity(&x.ring);
    let one = Poly::one(x.ring.nvars());
    GaloisCoverDatum::new(x.clone(), x.clone(), id.clone(), alloc::vec![id], alloc::vec![one]).unwrap()
}

/// `ℚ[t] -> ℚ[y]`, `t = y^2`, with `y -> -y`.
pub fn kummer_cover() -> GaloisCoverDatum {
    let k = Field::rationals();
    let a = qring(&k, &["t"], &[]).unwrap();
    let b = qring(&k, &["y"], &[]).unwrap();
    let inc = hom(&a, &b, &["y^2"]).unwrap();
    let group = alloc::vec![RingHom::identity(&b), hom(&b, &b, &["-y"]).unwrap()];
    let basis = polys(&b, &["1", "y"]).unwrap();
    GaloisCoverDatum::new(
        AffineVariety::new("line", a, SMOOTH),
        AffineVariety::new("line", b, SMOOTH),
        inc,
        group,
        basis,
    )
    .unwrap()
}

/// The Kummer cover with `t` and `y` inverted.
pub fn localized_kummer() -> Result<RingHom> {
    let k = Field::rationals();
    let a = qring(&k, &["t"], &[])?;
    let b = qring(&k, &["y"], &[])?;
    let (at, _) = localize(&a, &a.var("t")?)?;
    let (by, _) = localize(&b, &b.var("y")?)?;
    hom(&at, &by, &["y^2", "s^2"])
}

/// `A = K[u, v] -> B = A[x, y]/(x^3 - u v^2, y^3 - u^2 v, x^2 - y v, y^2 - x u, x y - u v)`
/// over `K = ℚ(w)`, with `g(x) = w x`, `g(y) = w^2 y`.
pub fn cone_cover() -> GaloisCoverDatum {
    let k = zeta3();
    let a = qring(&k, &["u", "v"], &[]).unwrap();
    let b = qring(&k, &["x", "y", "u", "v"], &["x^3 - u*v^2", "y^3 - u^2*v", "x^2 - y*v", "y^2 - x*u", "x*y - u*v"])
        .unwrap();
    let inc = hom(&a, &b, &["u", "v"]).unwrap();
    let g = hom(&b, &b, &["w*x", "(-w - 1)*y", "u", "v"]).unwrap();
    let g2 = g.then(&g).unwrap();
    let group = alloc::vec![RingHom::identity(&b), g, g2];
    let basis = polys(&b, &["1", "x", "y"]).unwrap();
    GaloisCoverDatum::new(
        AffineVariety::new("plane", a, SMOOTH),
        AffineVariety::new("cone", b, NORMAL),
        inc,
        group,
        basis,
    )
    .unwrap()
}

/// `Z = V(s - t^2)` from `Spec k[s]` to `Spec k[t]`, witnessed by `W = Z`
/// with `t -> -t`.
pub fn transpose_square() -> crate::transfer::PrimeCorrespondence {
    let k = Field::rationals();
    let (x1, x2) = (affine(&k, &["s"]), affine(&k, &["t"]));
    let zr = qring(&k, &["s", "t"], &["s - t^2"]).unwrap();
    let inc = hom(&x1.ring, &zr, &["s"]).unwrap();
    let group = alloc::vec![RingHom::identity(&zr), hom(&zr, &zr, &["s", "-t"]).unwrap()];
    let cover = GaloisCoverDatum::new(
        x1.clone(),
        AffineVariety::new("Z", zr.clone(), SMOOTH),
        inc,
        group,
        polys(&zr, &["1", "t"]).unwrap(),
    )
    .unwrap();
    let ideal = polys(&zr, &["s - t^2"]).unwrap();
    let homs = alloc::vec![polys(&zr, &["s", "t"]).unwrap(), polys(&zr, &["s", "-t"]).unwrap()];
    crate::transfer::PrimeCorrespondence::new(&x1, &x2, ideal, &cover, &homs).unwrap()
}
