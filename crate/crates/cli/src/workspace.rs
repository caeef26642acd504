//! Workspace files: TOML with `[field]`, `[variety.*]`, `[cover.*]`,
//! `[correspondence.*]`, `[form.*]`, `[fiberwitness.*]` and `[welldef.*]`.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;
use std::sync::Arc;

use kaehler_core::descent::GaloisCoverDatum;
use kaehler_core::kaehler::{parse_form, AffineVariety, Flags, PForm};
use kaehler_core::poly::{MonomialOrder, Poly, PolyRing};
use kaehler_core::ring::{QRing, QuotientRing, RingHom};
use kaehler_core::scalars::{Field, Rational};
use kaehler_core::syntax::parse_poly;
use kaehler_core::transfer::{product, CycleCorrespondence, FiberPart, FiberWitness, PrimeCorrespondence};
use serde::Deserialize;
use toml::Spanned;

type Text = Spanned<String>;
type Images = BTreeMap<String, Text>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileModel {
    field: Option<FieldSection>,
    #[serde(default)]
    variety: BTreeMap<String, VarietySection>,
    #[serde(default)]
    cover: BTreeMap<String, CoverSection>,
    #[serde(default)]
    correspondence: BTreeMap<String, CorrespondenceSection>,
    #[serde(default)]
    form: BTreeMap<String, FormSection>,
    #[serde(default)]
    fiberwitness: BTreeMap<String, FiberSection>,
    #[serde(default)]
    welldef: BTreeMap<String, WelldefSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    minpoly: Option<Text>,
    #[serde(default = "default_generator")]
    generator: String,
}

fn default_generator() -> String {
    "w".into()
}

fn one() -> u64 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VarietySection {
    vars: Vec<String>,
    #[serde(default)]
    relations: Vec<Text>,
    #[serde(default)]
    flags: Vec<String>,
    base: Option<String>,
    inclusion: Option<Images>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverSection {
    base: String,
    total: String,
    inclusion: Option<Images>,
    group: Vec<Images>,
    basis: Vec<Text>,
    form: Option<Text>,
    primitive: Option<Text>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentSection {
    #[serde(default = "one")]
    multiplicity: u64,
    ideal: Option<Vec<Text>>,
    graph: Option<Images>,
    cover: Option<String>,
    homs: Option<Vec<Images>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorrespondenceSection {
    source: String,
    target: String,
    components: Vec<ComponentSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormSection {
    variety: String,
    expr: Text,
    degree: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberComponentSection {
    #[serde(default = "one")]
    multiplicity: u64,
    ideal: Vec<Text>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartSection {
    #[serde(default = "one_index")]
    first: usize,
    #[serde(default = "one_index")]
    second: usize,
    components: Vec<FiberComponentSection>,
}

fn one_index() -> usize {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberSection {
    first: String,
    second: String,
    composite: String,
    parts: Vec<PartSection>,
    #[serde(default)]
    samples: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WelldefSection {
    correspondence: String,
    #[serde(default = "one_index")]
    component: usize,
    cover: String,
    homs: Vec<Images>,
    map: Images,
    #[serde(default)]
    samples: Vec<String>,
}

/// Input problems: malformed files, unknown names, bad expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Either a malformed input or a failed mathematical check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(InputError),
    Math(kaehler_core::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<kaehler_core::Error> for Failure {
    fn from(e: kaehler_core::Error) -> Self {
        if e.is_check_failure() {
            Failure::Math(e)
        } else {
            Failure::Input(InputError(e.to_string()))
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "{}", e),
            Failure::Math(e) => write!(f, "{}", e),
        }
    }
}

pub type Res<T> = Result<T, Failure>;

/// Global options that change how rings are built.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// `QQ` or a minimal polynomial such as `w^2 + w + 1`.
    pub field: Option<String>,
    pub lex: bool,
}

/// Field from a minimal polynomial written in its generator.
pub fn parse_field(text: &str, generator: Option<&str>) -> Result<Field, String> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("qq") || t.eq_ignore_ascii_case("q") {
        return Ok(Field::rationals());
    }
    let gen = match generator {
        Some(g) => g.to_string(),
        None => {
            let names: BTreeSet<String> = t
                .split(|c: char| !c.is_ascii_alphanumeric() && c != '_')
                .filter(|s| s.starts_with(|c: char| c.is_ascii_alphabetic()))
                .map(String::from)
                .collect();
            if names.len() != 1 {
                return Err(format!("cannot tell the generator of `{}`", t));
            }
            names.into_iter().next().unwrap()
        }
    };
    let ring = PolyRing::new(Field::rationals(), vec![gen.clone()], MonomialOrder::DegRevLex);
    let p = parse_poly(&ring, t).map_err(|e| e.to_string())?;
    let deg = p.total_degree() as usize;
    let mut coeffs: Vec<Rational> = vec![Rational::from_integer(0.into()); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[0] as usize] = c.as_rational().ok_or("rational coefficients expected")?;
    }
    Field::extension(coeffs, &gen).map(|(f, _)| f).map_err(|e| e.to_string())
}

pub struct Workspace {
    src: String,
    pub field: Field,
    order: MonomialOrder,
    model: FileModel,
    varieties: BTreeMap<String, AffineVariety>,
}

impl Workspace {
    pub fn parse(src: &str, opts: &Options) -> Result<Self, InputError> {
        let model: FileModel = toml::from_str(src).map_err(|e| InputError(e.to_string().trim_end().to_string()))?;
        let mut seen = BTreeSet::new();
        let names = model
            .variety
            .keys()
            .chain(model.cover.keys())
            .chain(model.correspondence.keys())
            .chain(model.form.keys())
            .chain(model.fiberwitness.keys())
            .chain(model.welldef.keys());
        for n in names {
            if !seen.insert(n.clone()) {
                return Err(InputError(format!("name `{}` is used twice", n)));
            }
        }
        let field = match (&opts.field, &model.field) {
            (Some(f), _) => parse_field(f, None).map_err(|e| InputError(format!("--field: {}", e)))?,
            (None, Some(FieldSection { minpoly: Some(m), generator })) => parse_field(m.get_ref(), Some(generator))
                .map_err(|e| InputError(format!("{}: {}", line_of(src, m.span()), e)))?,
            _ => Field::rationals(),
        };
        let order = if opts.lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let mut ws = Workspace { src: src.to_string(), field, order, model, varieties: BTreeMap::new() };
        let keys: Vec<String> = ws.model.variety.keys().cloned().collect();
        for name in keys {
            let v = ws.build_variety(&name)?;
            ws.varieties.insert(name, v);
        }
        Ok(ws)
    }

    fn at(&self, span: Range<usize>) -> String {
        line_of(&self.src, span)
    }

    fn build_variety(&self, name: &str) -> Result<AffineVariety, InputError> {
        let s = &self.model.variety[name];
        let uniq: BTreeSet<&String> = s.vars.iter().collect();
        if uniq.len() != s.vars.len() {
            return Err(InputError(format!("variety {}: repeated variable", name)));
        }
        if s.vars.iter().any(|v| *v == self.field.generator_name() && !self.field.is_rationals()) {
            return Err(InputError(format!("variety {}: variable clashes with the field generator", name)));
        }
        let ring = Arc::new(PolyRing::new(self.field.clone(), s.vars.clone(), self.order));
        let rels = s.relations.iter().map(|r| self.poly(&ring, r)).collect::<Result<Vec<_>, _>>()?;
        let mut flags = Flags::default();
        for f in &s.flags {
            match f.as_str() {
                "smooth" => flags.smooth = true,
                "normal" => flags.normal = true,
                "irreducible" => flags.irreducible = true,
                other => return Err(InputError(format!("variety {}: unknown flag `{}`", name, other))),
            }
        }
        let v = AffineVariety::new(name, QuotientRing::new(ring, rels), flags);
        if flags.smooth && !v.check_smooth() {
            return Err(InputError(format!("variety {}: declared smooth but the Jacobian criterion fails", name)));
        }
        Ok(v)
    }

    fn poly(&self, ring: &PolyRing, t: &Text) -> Result<Poly, InputError> {
        parse_poly(ring, t.get_ref())
            .map_err(|e| InputError(format!("{}: `{}`: {}", self.at(t.span()), t.get_ref(), e)))
    }

    pub fn variety(&self, name: &str) -> Result<&AffineVariety, InputError> {
        self.varieties.get(name).ok_or_else(|| InputError(format!("unknown variety `{}`", name)))
    }

    /// Map from `src` to `tgt`; unlisted variables go to the variable of the
    /// same name.
    fn images(&self, src: &QRing, tgt: &QRing, given: Option<&Images>, what: &str) -> Res<Vec<Poly>> {
        let empty = Images::new();
        let given = given.unwrap_or(&empty);
        for k in given.keys() {
            if src.ring.var_index(k).is_none() {
                return Err(InputError(format!("{}: `{}` is not a coordinate of the source", what, k)).into());
            }
        }
        src.ring
            .vars
            .iter()
            .map(|v| match given.get(v) {
                Some(t) => Ok(self.poly(&tgt.ring, t)?),
                None => tgt.ring.var(v).map_err(|_| InputError(format!("{}: no image given for `{}`", what, v)).into()),
            })
            .collect()
    }

    fn hom(&self, src: &QRing, tgt: &QRing, given: Option<&Images>, what: &str) -> Res<RingHom> {
        let images = self.images(src, tgt, given, what)?;
        Ok(RingHom::new(src.clone(), tgt.clone(), images)?)
    }

    /// Structure map of `name` over its declared base.
    pub fn base_map(&self, name: &str) -> Res<RingHom> {
        let s = &self.model.variety[name];
        let base = s.base.as_ref().ok_or_else(|| InputError(format!("variety {} has no base", name)))?;
        let b = self.variety(base)?;
        let v = self.variety(name)?;
        self.hom(&b.ring, &v.ring, s.inclusion.as_ref(), &format!("variety {} inclusion", name))
    }

    pub fn cover(&self, name: &str) -> Res<GaloisCoverDatum> {
        let s = self.model.cover.get(name).ok_or_else(|| InputError(format!("unknown cover `{}`", name)))?;
        let base = self.variety(&s.base)?;
        let total = self.variety(&s.total)?;
        let inc = self.hom(&base.ring, &total.ring, s.inclusion.as_ref(), &format!("cover {} inclusion", name))?;
        let group = s
            .group
            .iter()
            .enumerate()
            .map(|(i, g)| self.hom(&total.ring, &total.ring, Some(g), &format!("cover {} element {}", name, i + 1)))
            .collect::<Res<Vec<_>>>()?;
        let basis = s.basis.iter().map(|t| self.poly(&total.ring.ring, t)).collect::<Result<Vec<_>, _>>()?;
        Ok(GaloisCoverDatum::new(base.clone(), total.clone(), inc, group, basis)?)
    }

    /// Names of all sections of one kind.
    pub fn names(&self, kind: &str) -> Vec<String> {
        match kind {
            "cover" => self.model.cover.keys().cloned().collect(),
            "correspondence" => self.model.correspondence.keys().cloned().collect(),
            "fiberwitness" => self.model.fiberwitness.keys().cloned().collect(),
            "welldef" => self.model.welldef.keys().cloned().collect(),
            "form" => self.model.form.keys().cloned().collect(),
            _ => self.model.variety.keys().cloned().collect(),
        }
    }

    /// Test form and primitive element for the counterexample checks.
    pub fn cover_extras(&self, name: &str) -> Res<(PForm, Poly)> {
        let s = &self.model.cover[name];
        let total = self.variety(&s.total)?;
        let form = s.form.as_ref().ok_or_else(|| InputError(format!("cover {} has no `form`", name)))?;
        let w = parse_form(&total.ring, form.get_ref())
            .map_err(|e| InputError(format!("{}: `{}`: {}", self.at(form.span()), form.get_ref(), e)))?;
        let p = s.primitive.as_ref().ok_or_else(|| InputError(format!("cover {} has no `primitive`", name)))?;
        Ok((w, self.poly(&total.ring.ring, p)?))
    }

    pub fn form(&self, name: &str) -> Res<PForm> {
        let s = self.model.form.get(name).ok_or_else(|| InputError(format!("unknown form `{}`", name)))?;
        let v = self.variety(&s.variety)?;
        let w = parse_form(&v.ring, s.expr.get_ref())
            .map_err(|e| InputError(format!("{}: `{}`: {}", self.at(s.expr.span()), s.expr.get_ref(), e)))?;
        if let Some(d) = s.degree {
            if d != w.degree && !w.is_zero() {
                return Err(InputError(format!("form {} has degree {}, declared {}", name, w.degree, d)).into());
            }
            if w.is_zero() {
                return Ok(PForm::zero(&v.ring, d));
            }
        }
        Ok(w)
    }

    fn product_ring(&self, names: &[&str]) -> Res<QRing> {
        let rings: Vec<&QRing> = names.iter().map(|n| self.variety(n).map(|v| &v.ring)).collect::<Result<_, _>>()?;
        Ok(product(&rings)?.0)
    }

    fn prime(
        &self,
        corr: &str,
        source: &AffineVariety,
        target: &AffineVariety,
        c: &ComponentSection,
        idx: usize,
    ) -> Res<PrimeCorrespondence> {
        let what = format!("correspondence {} component {}", corr, idx + 1);
        if let Some(g) = &c.graph {
            if c.ideal.is_some() || c.cover.is_some() || c.homs.is_some() {
                return Err(InputError(format!("{}: `graph` excludes ideal, cover and homs", what)).into());
            }
            let f = self.images(&target.ring, &source.ring, Some(g), &what)?;
            return Ok(PrimeCorrespondence::graph(source, target, &f)?);
        }
        let prod = self.product_ring(&[&source.name, &target.name])?;
        let ideal = c
            .ideal
            .as_ref()
            .ok_or_else(|| InputError(format!("{}: needs `ideal` or `graph`", what)))?
            .iter()
            .map(|t| self.poly(&prod.ring, t))
            .collect::<Result<Vec<_>, _>>()?;
        let cover_name = c.cover.as_ref().ok_or_else(|| InputError(format!("{}: needs `cover`", what)))?;
        let cover = self.cover(cover_name)?;
        let homs = c
            .homs
            .as_ref()
            .ok_or_else(|| InputError(format!("{}: needs `homs`", what)))?
            .iter()
            .map(|h| self.images(&prod, cover.b(), Some(h), &what))
            .collect::<Res<Vec<_>>>()?;
        Ok(PrimeCorrespondence::new(source, target, ideal, &cover, &homs)?)
    }

    pub fn correspondence(&self, name: &str) -> Res<CycleCorrespondence> {
        let s = self
            .model
            .correspondence
            .get(name)
            .ok_or_else(|| InputError(format!("unknown correspondence `{}`", name)))?;
        let source = self.variety(&s.source)?;
        let target = self.variety(&s.target)?;
        let mut terms = Vec::new();
        for (i, c) in s.components.iter().enumerate() {
            terms.push((c.multiplicity, self.prime(name, source, target, c, i)?));
        }
        Ok(CycleCorrespondence::new(terms)?)
    }

    /// The two cycles, the fiber witness, the claimed composite and samples.
    #[allow(clippy::type_complexity)]
    pub fn fiber_witness(
        &self,
        name: &str,
    ) -> Res<(CycleCorrespondence, CycleCorrespondence, FiberWitness, CycleCorrespondence, Vec<PForm>)> {
        let s =
            self.model.fiberwitness.get(name).ok_or_else(|| InputError(format!("unknown fiber witness `{}`", name)))?;
        let z = self.correspondence(&s.first)?;
        let z2 = self.correspondence(&s.second)?;
        let comp = self.correspondence(&s.composite)?;
        let triple = self.product_ring(&[&z.source.name, &z.target.name, &z2.target.name])?;
        // components of a cycle are stored sorted; indices in the file refer to the listed order
        let order1 = self.listed_order(&s.first, &z)?;
        let order2 = self.listed_order(&s.second, &z2)?;
        let mut parts = Vec::new();
        for p in &s.parts {
            let (Some(&first), Some(&second)) =
                (order1.get(p.first.wrapping_sub(1)), order2.get(p.second.wrapping_sub(1)))
            else {
                return Err(InputError(format!("fiber witness {}: component index out of range", name)).into());
            };
            let components = p
                .components
                .iter()
                .map(|c| {
                    Ok((
                        c.multiplicity,
                        c.ideal.iter().map(|t| self.poly(&triple.ring, t)).collect::<Result<Vec<_>, _>>()?,
                    ))
                })
                .collect::<Result<Vec<_>, InputError>>()?;
            parts.push(FiberPart { first, second, components });
        }
        let samples = s.samples.iter().map(|f| self.form(f)).collect::<Res<Vec<_>>>()?;
        Ok((z, z2, FiberWitness { parts }, comp, samples))
    }

    /// Position in the sorted cycle of each component in file order.
    fn listed_order(&self, name: &str, c: &CycleCorrespondence) -> Res<Vec<usize>> {
        let s = &self.model.correspondence[name];
        let source = self.variety(&s.source)?;
        let target = self.variety(&s.target)?;
        let mut out = Vec::new();
        for (i, comp) in s.components.iter().enumerate() {
            let key = self.prime(name, source, target, comp, i)?.key();
            out.push(c.terms.iter().position(|(_, p)| p.key() == key).expect("component present"));
        }
        Ok(out)
    }

    /// Correspondence component, alternative cover, its morphisms, the map
    /// between the covers and samples.
    #[allow(clippy::type_complexity)]
    pub fn welldef(
        &self,
        name: &str,
    ) -> Res<(PrimeCorrespondence, GaloisCoverDatum, Vec<Vec<Poly>>, RingHom, Vec<PForm>)> {
        let s =
            self.model.welldef.get(name).ok_or_else(|| InputError(format!("unknown welldef section `{}`", name)))?;
        let cs = self
            .model
            .correspondence
            .get(&s.correspondence)
            .ok_or_else(|| InputError(format!("unknown correspondence `{}`", s.correspondence)))?;
        let source = self.variety(&cs.source)?;
        let target = self.variety(&cs.target)?;
        let comp = cs
            .components
            .get(s.component.wrapping_sub(1))
            .ok_or_else(|| InputError(format!("welldef {}: component index out of range", name)))?;
        let c = self.prime(&s.correspondence, source, target, comp, s.component - 1)?;
        let alt = self.cover(&s.cover)?;
        let prod = self.product_ring(&[&cs.source, &cs.target])?;
        let what = format!("welldef {}", name);
        let homs = s.homs.iter().map(|h| self.images(&prod, alt.b(), Some(h), &what)).collect::<Res<Vec<_>>>()?;
        let f = self.hom(c.cover.b(), alt.b(), Some(&s.map), &what)?;
        let samples = s.samples.iter().map(|f| self.form(f)).collect::<Res<Vec<_>>>()?;
        Ok((c, alt, homs, f, samples))
    }
}

/// `line L` for a byte span.
fn line_of(src: &str, span: Range<usize>) -> String {
    let line = src[..span.start.min(src.len())].matches('\n').count() + 1;
    format!("line {}", line)
}
