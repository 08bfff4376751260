//! Fox derivatives, the Magnus embedding of free metabelian groups, module
//! computations in `F₂′/F₂″` and the Kishino non-freeness certificate.

use num_rational::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::braidrep::{kishino_alphabet, kishino_relation_2};
use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, Word};
use crate::laurent::{rat, variables, FieldElement, LaurentPoly, NumberFieldElement};
use crate::presentation::GroupPresentation;

/// Product rule used for Fox derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FoxConvention {
    /// `∂(uv) = ∂u + ū·∂v`
    Left,
    /// `∂(uv) = ∂u·v̄ + ∂v`
    Right,
}

/// Image of `w` in the abelianization ring, whose variables are the
/// alphabet labels.
pub fn abelian_image(alphabet: &Alphabet, w: &Word) -> LaurentPoly {
    let vars = variables(&alphabet.labels());
    let mut exps = vec![0; alphabet.len()];
    for &(g, e) in w.syllables() {
        exps[g] += e;
    }
    LaurentPoly::monomial(&vars, exps, rat(1))
}

/// `1 + g + … + g^{e-1}` for `e > 0`, `−(g^{-1} + … + g^{e})` for `e < 0`.
fn geometric(vars: &Arc<[String]>, g: usize, e: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero(vars);
    let (range, sign) = if e > 0 { (0..e, 1) } else { (e..0, -1) };
    for k in range {
        let mut exps = vec![0; vars.len()];
        exps[g] = k;
        out = &out + &LaurentPoly::monomial(vars, exps, rat(sign));
    }
    out
}

/// Fox derivative `∂_g w` in the abelianized group ring.
pub fn fox_derivative_with(alphabet: &Alphabet, w: &Word, g: usize, convention: FoxConvention) -> LaurentPoly {
    let vars = variables(&alphabet.labels());
    let n = alphabet.len();
    let mut out = LaurentPoly::zero(&vars);
    // exponent vector of the prefix (left) or of the suffix (right)
    let mut around = vec![0i64; n];
    let syllables: Vec<(usize, i64)> = match convention {
        FoxConvention::Left => w.syllables().to_vec(),
        FoxConvention::Right => w.syllables().iter().rev().copied().collect(),
    };
    for (h, e) in syllables {
        if h == g {
            out = &out + &geometric(&vars, g, e).shift(&around);
        }
        around[h] += e;
    }
    out
}

/// Left Fox derivative, the convention matching the reference values.
pub fn fox_derivative(alphabet: &Alphabet, w: &Word, g: usize) -> LaurentPoly {
    fox_derivative_with(alphabet, w, g, FoxConvention::Left)
}

/// Checks `w̄ − 1 = Σ_g ∂_g w·(g − 1)`.
pub fn fundamental_identity_holds(alphabet: &Alphabet, w: &Word) -> bool {
    let vars = variables(&alphabet.labels());
    let one = LaurentPoly::one(&vars);
    let lhs = &abelian_image(alphabet, w) - &one;
    let mut rhs = LaurentPoly::zero(&vars);
    for g in 0..alphabet.len() {
        let gm = &abelian_image(alphabet, &Word::generator(g)) - &one;
        rhs = &rhs + &(&fox_derivative(alphabet, w, g) * &gm);
    }
    lhs == rhs
}

/// Element of a free module over a Laurent ring, with named basis symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    vars: Arc<[String]>,
    coeffs: BTreeMap<String, LaurentPoly>,
}

impl ModuleElement {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        ModuleElement { vars: vars.clone(), coeffs: BTreeMap::new() }
    }

    pub fn basis(vars: &Arc<[String]>, symbol: &str) -> Self {
        ModuleElement::zero(vars).with_term(symbol, LaurentPoly::one(vars))
    }

    pub fn with_term(mut self, symbol: &str, coeff: LaurentPoly) -> Self {
        let sum = match self.coeffs.remove(symbol) {
            Some(c) => &c + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.coeffs.insert(symbol.to_string(), sum);
        }
        self
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn coefficient(&self, symbol: &str) -> LaurentPoly {
        self.coeffs.get(symbol).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    pub fn support(&self) -> impl Iterator<Item = &String> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out = out.with_term(k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        self.add(&other.scale(&-&LaurentPoly::one(&self.vars)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> ModuleElement {
        let mut out = ModuleElement::zero(&self.vars);
        for (k, v) in &self.coeffs {
            out = out.with_term(k, v * p);
        }
        out
    }

    pub fn div_exact(&self, p: &LaurentPoly) -> Result<ModuleElement> {
        let mut out = ModuleElement::zero(&self.vars);
        for (k, v) in &self.coeffs {
            out = out.with_term(k, v.div_exact(p)?);
        }
        Ok(out)
    }

    /// The `q` with `self = q·other`, if it exists.
    pub fn quotient_by(&self, other: &ModuleElement) -> Result<LaurentPoly> {
        let Some((key, pivot)) = other.coeffs.iter().next() else {
            return Err(Error::DivisionByZero);
        };
        let q = self.coefficient(key).div_exact(pivot)?;
        if other.scale(&q) == *self {
            Ok(q)
        } else {
            Err(Error::NotDivisible("module elements are not proportional".into()))
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(k, v)| format!("({v})*{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(scale, translation; 0, 1)` with a monomial scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusMatrix {
    pub scale: LaurentPoly,
    pub translation: ModuleElement,
}

impl MagnusMatrix {
    pub fn new(scale: LaurentPoly, translation: ModuleElement) -> Result<Self> {
        if !scale.is_unit() {
            return Err(Error::InvalidParameter(format!("Magnus scale {scale} is not a unit")));
        }
        if scale.vars() != translation.vars() {
            return Err(Error::VariableMismatch("scale and translation rings differ".into()));
        }
        Ok(MagnusMatrix { scale, translation })
    }

    pub fn identity(vars: &Arc<[String]>) -> Self {
        MagnusMatrix { scale: LaurentPoly::one(vars), translation: ModuleElement::zero(vars) }
    }

    /// `(s₁,t₁)(s₂,t₂) = (s₁s₂, t₁ + s₁t₂)`.
    pub fn mul(&self, other: &MagnusMatrix) -> MagnusMatrix {
        MagnusMatrix {
            scale: &self.scale * &other.scale,
            translation: self.translation.add(&other.translation.scale(&self.scale)),
        }
    }

    pub fn inverse(&self) -> MagnusMatrix {
        let s = self.scale.monomial_inverse().expect("scale is a unit");
        MagnusMatrix { translation: self.translation.scale(&-&s), scale: s }
    }

    pub fn pow(&self, e: i64) -> MagnusMatrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = MagnusMatrix::identity(self.scale.vars());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.scale == LaurentPoly::one(self.scale.vars())
    }
}

impl fmt::Display for MagnusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; 0, 1)", self.scale, self.translation)
    }
}

/// Product of the assigned images along `w`.
pub fn magnus_image(w: &Word, assign: &[MagnusMatrix]) -> Result<MagnusMatrix> {
    let first = assign.first().ok_or_else(|| Error::MissingImage("no generators".into()))?;
    let mut acc = MagnusMatrix::identity(first.scale.vars());
    for &(g, e) in w.syllables() {
        let m = assign.get(g).ok_or_else(|| Error::MissingImage(format!("index {g}")))?;
        acc = acc.mul(&m.pow(e));
    }
    Ok(acc)
}

/// The Magnus map of a free group: `g ↦ (g, t_g)` over the ring whose
/// variables are the generator labels.
pub fn free_magnus(alphabet: &Alphabet) -> Vec<MagnusMatrix> {
    let vars = variables(&alphabet.labels());
    (0..alphabet.len())
        .map(|g| {
            let label = alphabet.label(g);
            MagnusMatrix {
                scale: LaurentPoly::var(&vars, label).expect("label is a variable"),
                translation: ModuleElement::basis(&vars, &format!("t_{label}")),
            }
        })
        .collect()
}

/// Writes an element of `F₂′` modulo `F₂″` as `z·q` with `z = [x, y]`,
/// using the module action `z·g = z^g`.
///
/// The Magnus map sends `z^g` to `g⁻¹` times the image of `z`, so the ring
/// involution `g ↦ g⁻¹` converts between the two.
pub fn commutator_module_coefficient(alphabet: &Alphabet, w: &Word) -> Result<LaurentPoly> {
    if alphabet.len() != 2 {
        return Err(Error::InvalidParameter("module coefficients need exactly two generators".into()));
    }
    if (0..2).any(|g| w.exponent_sum(g) != 0) {
        return Err(Error::NotInCommutatorSubgroup);
    }
    let assign = free_magnus(alphabet);
    let z = Word::commutator(&Word::generator(0), &Word::generator(1));
    let tz = magnus_image(&z, &assign)?.translation;
    let tw = magnus_image(w, &assign)?.translation;
    Ok(tw.quotient_by(&tz)?.invert_variables())
}

/// Annihilator `p` of `z = [x, y]` in `G′/G″` for a one-relator group on
/// two generators: the relator equals `z·p` modulo `F₂″`.
pub fn relator_annihilator(p: &GroupPresentation) -> Result<LaurentPoly> {
    let relator = p.relator(0)?;
    commutator_module_coefficient(p.alphabet(), &relator)
}

/// Parameters of `x ↦ x^α y^β [x,y]^γ, y ↦ x^a y^b [x,y]^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EndoParams {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl EndoParams {
    pub const IDENTITY: EndoParams = EndoParams { alpha: 1, beta: 0, gamma: 0, a: 0, b: 1, c: 0 };
    pub const SWAP: EndoParams = EndoParams { alpha: 0, beta: 1, gamma: 0, a: 1, b: 0, c: 0 };

    pub fn determinant(&self) -> i64 {
        self.alpha * self.b - self.beta * self.a
    }

    /// Word images of `x` and `y` over `[x, y]`.
    pub fn images(&self) -> [Word; 2] {
        let (x, y) = (Word::generator(0), Word::generator(1));
        let z = Word::commutator(&x, &y);
        [
            &(&x.pow(self.alpha) * &y.pow(self.beta)) * &z.pow(self.gamma),
            &(&x.pow(self.a) * &y.pow(self.b)) * &z.pow(self.c),
        ]
    }
}

fn xy_vars() -> Arc<[String]> {
    variables(&["x", "y"])
}

fn xy_monomial(ex: i64, ey: i64) -> LaurentPoly {
    LaurentPoly::monomial(&xy_vars(), vec![ex, ey], rat(1))
}

/// `(1 − x^p)(1 − y^q)/((1 − x)(1 − y))`.
fn divided_difference(p: i64, q: i64) -> LaurentPoly {
    let one = LaurentPoly::one(&xy_vars());
    let num = &(&one - &xy_monomial(p, 0)) * &(&one - &xy_monomial(0, q));
    num.divide_one_minus("x").and_then(|t| t.divide_one_minus("y")).expect("(1-x^p)(1-y^q) is divisible by (1-x)(1-y)")
}

/// Closed-form image coefficient of `z = [x, y]` under the endomorphism
/// given by `p`.
pub fn commutator_coefficient(p: &EndoParams) -> LaurentPoly {
    let one = LaurentPoly::one(&xy_vars());
    let c = rat(p.c);
    let gamma = rat(p.gamma);
    let t1 = (&one - &xy_monomial(p.alpha, p.beta)).scale(&c);
    let t2 = (&one - &xy_monomial(p.a, p.b)).scale(&gamma);
    let t3 = &xy_monomial(0, p.beta) * &divided_difference(p.alpha, p.b);
    let t4 = &xy_monomial(0, p.b) * &divided_difference(p.a, p.beta);
    &(&(&t1 - &t2) + &t3) - &t4
}

/// The same coefficient read off the Magnus image of `[φ(x), φ(y)]`.
pub fn commutator_coefficient_via_magnus(p: &EndoParams) -> Result<LaurentPoly> {
    let alphabet = Alphabet::new(&["x", "y"])?;
    let [u, v] = p.images();
    commutator_module_coefficient(&alphabet, &Word::commutator(&u, &v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop42Report {
    pub r: u32,
    pub params: EndoParams,
    /// Augmentation of `2(1 + x^a y^b)·coefficient`.
    pub lhs: BigRational,
    /// Augmentation of `(1 − x^{-r})(y − x^r)`.
    pub rhs: BigRational,
}

impl Prop42Report {
    pub fn contradicts(&self) -> bool {
        self.lhs.numer().magnitude() == &4u32.into() && self.lhs.is_integer() && self.rhs == rat(0)
    }
}

/// Augmentations of both sides of the would-be module isomorphism.
pub fn prop42_check(r: u32, p: &EndoParams) -> Result<Prop42Report> {
    let det = p.determinant();
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(det));
    }
    let one = LaurentPoly::one(&xy_vars());
    let twice = (&one + &xy_monomial(p.a, p.b)).scale(&rat(2));
    let lhs = (&twice * &commutator_coefficient(p)).augment();
    let ri = i64::from(r);
    let g1 = &(&one - &xy_monomial(-ri, 0)) * &(&xy_monomial(0, 1) - &xy_monomial(ri, 0));
    Ok(Prop42Report { r, params: *p, lhs, rhs: g1.augment() })
}

/// `(1 − x^{-r})(y − x^r)`.
pub fn trefoil_g1_annihilator(r: u32) -> LaurentPoly {
    let one = LaurentPoly::one(&xy_vars());
    let ri = i64::from(r);
    &(&one - &xy_monomial(-ri, 0)) * &(&xy_monomial(0, 1) - &xy_monomial(ri, 0))
}

/// `2(1 + y)`.
pub fn trefoil_g2_annihilator() -> LaurentPoly {
    (&LaurentPoly::one(&xy_vars()) + &xy_monomial(0, 1)).scale(&rat(2))
}

/// Module symbols of the Kishino Magnus assignment, in generator order.
pub const KISHINO_SYMBOLS: [&str; 4] = ["gamma", "lambda", "mu", "nu"];

/// `a ↦ (C⁻³, γ), b ↦ (C, λ), c ↦ (C, μ), d ↦ (D, ν)`.
pub fn kishino_assignment() -> Vec<MagnusMatrix> {
    let vars = variables(&["C", "D"]);
    let scales = [
        LaurentPoly::var_pow(&vars, "C", -3),
        LaurentPoly::var(&vars, "C"),
        LaurentPoly::var(&vars, "C"),
        LaurentPoly::var(&vars, "D"),
    ];
    scales
        .into_iter()
        .zip(KISHINO_SYMBOLS)
        .map(|(s, sym)| MagnusMatrix {
            scale: s.expect("C and D are variables"),
            translation: ModuleElement::basis(&vars, sym),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KishinoModuleRelation {
    /// Translation of `φ(lhs) − φ(rhs)` for relation (2).
    pub raw: ModuleElement,
    /// `raw · CD`.
    pub cleared: ModuleElement,
    /// `1 − C + D`.
    pub factor: LaurentPoly,
    /// `cleared / (1 − C + D)`.
    pub residual: ModuleElement,
    pub dc: MagnusMatrix,
    pub bd: MagnusMatrix,
    /// `φ(dc) − φ(bd)` translation as a multiple of the residual.
    pub dc_bd_multiplier: LaurentPoly,
}

impl KishinoModuleRelation {
    /// `(D+1−C)λ + D(C−1−D)μ + (C−1)(1+D−C)ν`.
    pub fn expected_cleared() -> ModuleElement {
        let (one, c, d) = cd_ring();
        ModuleElement::zero(one.vars())
            .with_term("lambda", &(&d + &one) - &c)
            .with_term("mu", &d * &(&(&c - &one) - &d))
            .with_term("nu", &(&c - &one) * &(&(&one + &d) - &c))
    }

    /// `λ − Dμ + (C−1)ν`.
    pub fn expected_residual() -> ModuleElement {
        let (one, c, d) = cd_ring();
        ModuleElement::zero(one.vars()).with_term("lambda", one.clone()).with_term("mu", -&d).with_term("nu", &c - &one)
    }
}

fn cd_ring() -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let vars = variables(&["C", "D"]);
    let c = LaurentPoly::var(&vars, "C").expect("variable");
    let d = LaurentPoly::var(&vars, "D").expect("variable");
    (LaurentPoly::one(&vars), c, d)
}

/// Module relation of `G₃(Ki)` obtained from relation (2).
pub fn kishino_module_relation() -> Result<KishinoModuleRelation> {
    let assign = kishino_assignment();
    let rel = kishino_relation_2();
    let lhs = magnus_image(&rel.lhs, &assign)?;
    let rhs = magnus_image(&rel.rhs, &assign)?;
    if lhs.scale != rhs.scale {
        return Err(Error::Falsified("relation (2) scales differ".into()));
    }
    let raw = lhs.translation.sub(&rhs.translation);
    let (one, c, d) = cd_ring();
    let cleared = raw.scale(&(&c * &d));
    let factor = &(&one - &c) + &d;
    let residual = cleared.div_exact(&factor)?;
    let [_, b, cw, dw] = [Word::generator(0), Word::generator(1), Word::generator(2), Word::generator(3)];
    let dc = magnus_image(&(&dw * &cw), &assign)?;
    let bd = magnus_image(&(&b * &dw), &assign)?;
    if dc.scale != bd.scale {
        return Err(Error::Falsified("dc and bd have different scales".into()));
    }
    let dc_bd_multiplier = dc.translation.sub(&bd.translation).quotient_by(&residual)?;
    Ok(KishinoModuleRelation { raw, cleared, factor, residual, dc, bd, dc_bd_multiplier })
}

/// The alphabet `[a, c, d]` of the one-relator quotient.
pub fn kishino_quotient_alphabet() -> Alphabet {
    Alphabet::new(&["a", "c", "d"]).expect("valid labels")
}

/// `w = c · c^{2d⁻¹} · a · a^d · a⁻¹` over `[a, c, d]`.
pub fn kishino_word() -> Word {
    let (a, c, d) = (Word::generator(0), Word::generator(1), Word::generator(2));
    let parts = [c.clone(), c.pow(2).conjugate(&d.inverse()), a.clone(), a.conjugate(&d), a.inverse()];
    parts.iter().fold(Word::identity(), |acc, p| &acc * p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    NotUnimodular,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotUnimodular => write!(f, "NOT-UNIMODULAR"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FoxDerivatives {
    pub a: String,
    pub c: String,
    pub d: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Evaluation {
    pub polynomial: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvaluationPoint {
    pub a0: String,
    pub c0: String,
    pub d0: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub word: String,
    pub convention: FoxConvention,
    pub fox_derivatives: FoxDerivatives,
    pub cleared_vector: Vec<String>,
    pub minimal_polynomial: String,
    pub point: EvaluationPoint,
    pub evaluations: Vec<Evaluation>,
    /// Every monomial `a₀^i c₀^j d₀^k` with `1 ≤ i, j, k ≤ 3` is nonzero.
    pub nonzero_monomials: bool,
    pub verdict: Verdict,
    pub conclusion: String,
}

/// The point `(a₀, c₀, d₀)` with `c₀` a root of `c³ − c² − c − 1`.
pub fn kishino_point() -> Result<[NumberFieldElement; 3]> {
    let c0 = NumberFieldElement::generator();
    let c2c = c0.times(&c0).plus(&c0);
    let d0 = c2c.inverse()?.negated();
    let a0 = c2c.plus(&NumberFieldElement::one_elem()).inverse()?;
    Ok([a0, c0, d0])
}

/// Shows that `(∂_a w, ∂_c w, ∂_d w)` is not unimodular by exhibiting a
/// common zero with nonzero coordinates.
pub fn unimodularity_certificate() -> Result<Certificate> {
    let alphabet = kishino_quotient_alphabet();
    let w = kishino_word();
    let derivs: Vec<LaurentPoly> = (0..3).map(|g| fox_derivative(&alphabet, &w, g)).collect();
    let cleared: Vec<LaurentPoly> = derivs.iter().map(LaurentPoly::normalize_unit).collect();
    let point = kishino_point()?;
    for (name, v) in ["a0", "c0", "d0"].iter().zip(&point) {
        if v.is_zero_elem() {
            return Err(Error::Falsified(format!("{name} vanishes")));
        }
    }
    let mut nonzero_monomials = true;
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                let m = point[0].powi(i)?.times(&point[1].powi(j)?).times(&point[2].powi(k)?);
                nonzero_monomials &= !m.is_zero_elem();
            }
        }
    }
    let mut evaluations = Vec::new();
    for p in derivs.iter().chain(&cleared) {
        let value = p.evaluate(&point)?;
        if !value.is_zero_elem() {
            return Err(Error::Falsified(format!("{p} evaluates to {value}")));
        }
        evaluations.push(Evaluation { polynomial: p.to_string(), value: value.to_string() });
    }
    if !nonzero_monomials {
        return Err(Error::Falsified("a monomial vanishes at the point".into()));
    }
    Ok(Certificate {
        word: alphabet.format_word(&w),
        convention: FoxConvention::Left,
        fox_derivatives: FoxDerivatives {
            a: derivs[0].to_string(),
            c: derivs[1].to_string(),
            d: derivs[2].to_string(),
        },
        cleared_vector: cleared.iter().map(|p| p.to_string()).collect(),
        minimal_polynomial: "c^3-c^2-c-1".into(),
        point: EvaluationPoint { a0: point[0].to_string(), c0: point[1].to_string(), d0: point[2].to_string() },
        evaluations,
        nonzero_monomials,
        verdict: Verdict::NotUnimodular,
        conclusion: "G3(Kishino) is not free of rank 2".into(),
    })
}

/// Kishino abelianized relations: returns the exponent rows of relations
/// (1)–(3) in `(a, b, c, d)` order.
pub fn kishino_abelian_rows(p: &GroupPresentation) -> Vec<Vec<i64>> {
    p.relators().iter().map(|r| (0..p.generator_count()).map(|g| r.exponent_sum(g)).collect()).collect()
}

/// Checks that a presentation over [`kishino_alphabet`] forces `A = C⁻³` and
/// `B = C` in its abelianization.
pub fn kishino_abelian_relations_hold(p: &GroupPresentation) -> bool {
    p.alphabet() == &kishino_alphabet()
        && p.abelian_relation_holds(&[1, 0, 3, 0])
        && p.abelian_relation_holds(&[0, 1, -1, 0])
}
