//! Multivariate Laurent polynomials with exact rational coefficients, and
//! the cubic number field `Q[c]/(c³ − c² − c − 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact field arithmetic needed for evaluating polynomials.
pub trait FieldElement: Clone + PartialEq + fmt::Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;
    fn is_zero_elem(&self) -> bool;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn powi(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one_elem();
        for _ in 0..n.unsigned_abs() {
            acc = acc.times(&base);
        }
        Ok(acc)
    }
}

impl FieldElement for BigRational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Element of `Z[v₁^{±1}, …, v_k^{±1}] ⊗ Q` over a fixed, ordered variable
/// list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

pub fn variables<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        LaurentPoly::constant(vars, rat(1))
    }

    pub fn constant(vars: &Arc<[String]>, c: BigRational) -> Self {
        LaurentPoly::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Arc<[String]>, exps: Vec<i64>, c: BigRational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// `name^exp`.
    pub fn var_pow(vars: &Arc<[String]>, name: &str, exp: i64) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable `{name}`")))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = exp;
        Ok(LaurentPoly::monomial(vars, exps, rat(1)))
    }

    pub fn var(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        LaurentPoly::var_pow(vars, name, 1)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(|| rat(0))
    }

    fn same_ring(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(format!("[{}] vs [{}]", self.vars.join(", "), other.vars.join(", "))))
        }
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigRational) {
        if Zero::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_ring(other)?;
        let mut out = LaurentPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.vars);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d * c);
        }
        out
    }

    pub fn shift(&self, exps: &[i64]) -> LaurentPoly {
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Single term `c·v^e`, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Is this `±` a monomial, i.e. a unit of the integral Laurent ring?
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(_, c)| c.abs().is_one())
    }

    /// Inverse of a unit monomial.
    pub fn monomial_inverse(&self) -> Result<LaurentPoly> {
        let (e, c) = self.as_monomial().ok_or_else(|| Error::NotDivisible("only monomials are invertible".into()))?;
        Ok(LaurentPoly::monomial(&self.vars, e.iter().map(|x| -x).collect(), c.recip()))
    }

    /// Evaluation at `v = 1` for every variable.
    pub fn augment(&self) -> BigRational {
        self.terms.values().fold(rat(0), |acc, c| acc + c)
    }

    /// The ring involution `v ↦ v⁻¹`.
    pub fn invert_variables(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    pub fn embed(&self, target: &Arc<[String]>) -> Result<LaurentPoly> {
        let mut pos = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            pos.push(target.iter().position(|t| t == v));
        }
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = pos[i]
                    .ok_or_else(|| Error::VariableMismatch(format!("variable `{}` missing in target", self.vars[i])))?;
                ne[j] = x;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Renames variables positionally (same arity).
    pub fn rename(&self, names: &Arc<[String]>) -> LaurentPoly {
        assert_eq!(names.len(), self.vars.len());
        LaurentPoly { vars: names.clone(), terms: self.terms.clone() }
    }

    /// Exact quotient by `1 − v` via telescoping along `v`.
    pub fn divide_one_minus(&self, var: &str) -> Result<LaurentPoly> {
        let k = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable `{var}`")))?;
        // group by the exponent vector with slot k cleared
        let mut classes: BTreeMap<Vec<i64>, BTreeMap<i64, BigRational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let ek = std::mem::replace(&mut rest[k], 0);
            classes.entry(rest).or_default().insert(ek, c.clone());
        }
        let mut out = LaurentPoly::zero(&self.vars);
        for (rest, series) in classes {
            let lo = *series.keys().next().unwrap();
            let hi = *series.keys().next_back().unwrap();
            let mut running = rat(0);
            for j in lo..=hi {
                if let Some(c) = series.get(&j) {
                    running += c;
                }
                if j < hi {
                    let mut e = rest.clone();
                    e[k] = j;
                    out.add_term(e, running.clone());
                }
            }
            if !Zero::is_zero(&running) {
                return Err(Error::NotDivisible(format!("{self} by 1-{var}")));
            }
        }
        Ok(out)
    }

    /// Exact quotient by an arbitrary nonzero divisor, or `NotDivisible`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let (dlead_e, dlead_c) = divisor.terms.iter().next_back().unwrap();
        let dmin = divisor.terms.keys().next().unwrap();
        let pmin = self.terms.keys().next().unwrap();
        // every quotient term is lex-≥ pmin − dmin
        let floor: Vec<i64> = pmin.iter().zip(dmin).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(&self.vars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe: Vec<i64> = re.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            if qe < floor {
                return Err(Error::NotDivisible(format!("{self} by {divisor}")));
            }
            let qc = rc / dlead_c;
            let term = LaurentPoly::monomial(&self.vars, qe.clone(), qc.clone());
            rem = &rem - &(&term * divisor);
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Evaluates at the given point (one value per variable, in order).
    pub fn evaluate<F: FieldElement>(&self, point: &[F]) -> Result<F> {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = F::zero_elem();
        for (e, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    t = t.times(&x.powi(k)?);
                }
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Positive gcd of the numerators divided by the lcm of denominators.
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            rat(0)
        } else {
            BigRational::new(num, den)
        }
    }

    /// Canonical associate: multiplied by the unit `±v^e` that makes every
    /// minimal exponent zero and the first displayed coefficient positive.
    pub fn normalize_unit(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let n = self.vars.len();
        let mins: Vec<i64> = (0..n).map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0)).collect();
        let neg: Vec<i64> = mins.iter().map(|m| -m).collect();
        let shifted = self.shift(&neg);
        let first = shifted.display_order()[0].1.clone();
        if first.is_negative() {
            -&shifted
        } else {
            shifted
        }
    }

    /// Equal up to multiplication by `±` a monomial.
    pub fn is_associate(&self, other: &LaurentPoly) -> bool {
        self.vars == other.vars && self.normalize_unit() == other.normalize_unit()
    }

    fn display_order(&self) -> Vec<(&Vec<i64>, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    /// `content*(primitive)` when the content is not 1, e.g. `2*(1+y)`.
    pub fn factored_display(&self) -> String {
        let c = self.content();
        if self.is_zero() || c.is_one() {
            return self.to_string();
        }
        let prim = self.scale(&c.recip());
        if prim.num_terms() == 1 {
            return self.to_string();
        }
        format!("{c}*({prim})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(j, &k)| if k == 1 { self.vars[j].clone() } else { format!("{}^{}", self.vars[j], k) })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("Laurent polynomials over different rings")
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("Laurent polynomials over different rings")
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("Laurent polynomials over different rings")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

/// `q₀ + q₁c + q₂c²` in `Q[c]/(c³ − c² − c − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberFieldElement {
    coeffs: [BigRational; 3],
}

impl NumberFieldElement {
    /// Coefficients of the minimal polynomial, constant term first.
    pub const MINIMAL_POLYNOMIAL: [i64; 4] = [-1, -1, -1, 1];

    pub fn new(q0: BigRational, q1: BigRational, q2: BigRational) -> Self {
        NumberFieldElement { coeffs: [q0, q1, q2] }
    }

    /// The class of `c`, a root of the minimal polynomial.
    pub fn generator() -> Self {
        NumberFieldElement::new(rat(0), rat(1), rat(0))
    }

    pub fn coefficients(&self) -> &[BigRational; 3] {
        &self.coeffs
    }

    /// Reduces an arbitrary-degree polynomial in `c` using `c³ = c² + c + 1`.
    fn from_poly(mut p: Vec<BigRational>) -> Self {
        while p.len() > 3 {
            let top = p.pop().unwrap();
            let d = p.len(); // top was the coefficient of c^d
            for k in 1..=3 {
                p[d - k] += &top;
            }
        }
        p.resize(3, rat(0));
        NumberFieldElement::new(p[0].clone(), p[1].clone(), p[2].clone())
    }

    pub fn minimal_polynomial_is_irreducible() -> bool {
        // a monic cubic over Q is reducible iff it has a rational root,
        // and rational roots of a monic integer polynomial divide the constant
        let eval = |x: i64| Self::MINIMAL_POLYNOMIAL.iter().rev().fold(0i64, |acc, &a| acc * x + a);
        eval(1) != 0 && eval(-1) != 0
    }
}

impl FieldElement for NumberFieldElement {
    fn zero_elem() -> Self {
        NumberFieldElement::new(rat(0), rat(0), rat(0))
    }
    fn one_elem() -> Self {
        NumberFieldElement::new(rat(1), rat(0), rat(0))
    }
    fn from_rational(q: &BigRational) -> Self {
        NumberFieldElement::new(q.clone(), rat(0), rat(0))
    }
    fn plus(&self, other: &Self) -> Self {
        NumberFieldElement::new(
            &self.coeffs[0] + &other.coeffs[0],
            &self.coeffs[1] + &other.coeffs[1],
            &self.coeffs[2] + &other.coeffs[2],
        )
    }
    fn times(&self, other: &Self) -> Self {
        let mut p = vec![rat(0); 5];
        for i in 0..3 {
            for j in 0..3 {
                p[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        NumberFieldElement::from_poly(p)
    }
    fn negated(&self) -> Self {
        NumberFieldElement::new(-&self.coeffs[0], -&self.coeffs[1], -&self.coeffs[2])
    }
    /// Extended Euclid against the minimal polynomial.
    fn inverse(&self) -> Result<Self> {
        if self.is_zero_elem() {
            return Err(Error::DivisionByZero);
        }
        let m: Vec<BigRational> = Self::MINIMAL_POLYNOMIAL.iter().map(|&a| rat(a)).collect();
        let a = trim(self.coeffs.to_vec());
        // invariant: s_i·a ≡ r_i (mod m)
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (vec![], vec![rat(1)]);
        while !(r1.len() == 1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is r0 of positive degree: cannot happen for an irreducible modulus
                return Err(Error::DivisionByZero);
            }
        }
        let inv_lead = r1[0].recip();
        Ok(NumberFieldElement::from_poly(s1.iter().map(|x| x * &inv_lead).collect()))
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| rat(0));
            let y = b.get(i).cloned().unwrap_or_else(|| rat(0));
            x - y
        })
        .collect();
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let mut q = vec![rat(0); r.len().saturating_sub(b.len()) + 1];
    let lead = b.last().expect("division by the zero polynomial").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = variables(&["c"]);
        let mut p = LaurentPoly::zero(&vars);
        for (i, q) in self.coeffs.iter().enumerate() {
            p = &p + &LaurentPoly::monomial(&vars, vec![i as i64], q.clone());
        }
        write!(f, "{p}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<[String]> {
        variables(&["x", "y"])
    }

    fn x(e: i64) -> LaurentPoly {
        LaurentPoly::var_pow(&xy(), "x", e).unwrap()
    }

    fn y(e: i64) -> LaurentPoly {
        LaurentPoly::var_pow(&xy(), "y", e).unwrap()
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one(&xy())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&(&one() - &x(1)) * &(&one() + &x(1)), &one() - &x(2));
        assert_eq!(&x(1) * &x(-1), one());
        let p = &(&one() - &x(-2)) * &(&y(1) - &x(2));
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.to_string(), "-x^-2*y+1+y-x^2");
    }

    #[test]
    fn variable_mismatch() {
        let other = LaurentPoly::one(&variables(&["a"]));
        assert!(matches!(one().checked_add(&other), Err(Error::VariableMismatch(_))));
        assert!(LaurentPoly::var(&xy(), "z").is_err());
    }

    #[test]
    fn augmentation() {
        assert!(Zero::is_zero(&(&one() - &x(-3)).augment()));
        assert_eq!((&one() + &y(1)).scale(&rat(2)).augment(), rat(4));
        let q = (&one() - &x(3)).divide_one_minus("x").unwrap();
        assert_eq!(q.augment(), rat(3));
    }

    #[test]
    fn divide_one_minus_examples() {
        let q = (&one() - &x(3)).divide_one_minus("x").unwrap();
        assert_eq!(q, &(&one() + &x(1)) + &x(2));
        let q = (&one() - &x(-2)).divide_one_minus("x").unwrap();
        assert_eq!(q, -&(&x(-1) + &x(-2)));
        assert_eq!(&q * &(&one() - &x(1)), &one() - &x(-2));
        assert!(matches!((&one() + &x(1)).divide_one_minus("x"), Err(Error::NotDivisible(_))));
        assert!(LaurentPoly::zero(&xy()).divide_one_minus("x").unwrap().is_zero());
    }

    #[test]
    fn general_division() {
        let d = &(&one() - &x(1)) + &y(1);
        let q = &(&x(-2) * &y(3)) - &x(1);
        let p = &q * &d;
        assert_eq!(p.div_exact(&d).unwrap(), q);
        assert!((&p + &one()).div_exact(&d).is_err());
        assert!(p.div_exact(&LaurentPoly::zero(&xy())).is_err());
    }

    #[test]
    fn normalization_and_display() {
        let p = (&x(-1) + &one()).scale(&rat(-2));
        let n = p.normalize_unit();
        assert_eq!(n.to_string(), "2+2*x");
        assert_eq!(n.factored_display(), "2*(1+x)");
        assert!(!p.is_associate(&(&one() + &x(1))));
        assert!(p.is_associate(&(&one() + &x(1)).scale(&rat(2))));
        assert_eq!(LaurentPoly::zero(&xy()).to_string(), "0");
    }

    #[test]
    fn number_field_reduction() {
        let c = NumberFieldElement::generator();
        let c3 = c.times(&c).times(&c);
        let expected = NumberFieldElement::new(rat(1), rat(1), rat(1));
        assert_eq!(c3, expected);
        assert!(NumberFieldElement::minimal_polynomial_is_irreducible());
    }

    #[test]
    fn number_field_inverse() {
        let c = NumberFieldElement::generator();
        let c2c = c.times(&c).plus(&c);
        let inv = c2c.inverse().unwrap();
        assert_eq!(inv.times(&c2c), NumberFieldElement::one_elem());
        let s = c2c.plus(&NumberFieldElement::one_elem());
        let a0 = s.inverse().unwrap();
        assert_eq!(s.times(&a0), NumberFieldElement::one_elem());
        assert!(NumberFieldElement::zero_elem().inverse().is_err());
        let q = NumberFieldElement::from_rational(&rat(3));
        assert_eq!(q.inverse().unwrap(), NumberFieldElement::from_rational(&BigRational::new(1.into(), 3.into())));
    }
}
