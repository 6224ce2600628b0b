//! Polynomials and rational functions in symbolic parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{cmp_named, Monomial, Param, ParamMonomial};
use super::scalar::{fmt_rational, is_negative, FieldScalar, Scalar};
use super::sparse::SparsePoly;
use crate::error::{Error, Result};

/// Polynomial in parameters with rational coefficients.
pub type ParamPoly = SparsePoly<ParamMonomial, BigRational>;

impl SparsePoly<ParamMonomial, BigRational> {
    pub fn param(p: Param) -> Self {
        Self::term(ParamMonomial::var(p, 1), BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        Self::constant(q)
    }

    /// Parameters occurring in the polynomial.
    pub fn params(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for (m, _) in self.terms() {
            out.extend(m.vars().map(|(p, _)| p));
        }
        out
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms().map(|(m, _)| m.exponent(p)).max().unwrap_or(0)
    }

    /// Coefficients with respect to `p`, indexed by exponent.
    pub fn univariate(&self, p: Param) -> Vec<ParamPoly> {
        let mut out = vec![ParamPoly::zero(); self.degree_in(p) as usize + 1];
        for (m, c) in self.terms() {
            let (e, rest) = m.split_off(p);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Replaces parameters by rationals; unbound parameters stay symbolic.
    pub fn evaluate(&self, bindings: &BTreeMap<Param, BigRational>) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in self.terms() {
            let mut coeff = c.clone();
            let mut rest = ParamMonomial::one();
            for (p, e) in m.vars() {
                match bindings.get(&p) {
                    Some(v) => coeff *= pow_rat(v, e),
                    None => rest = rest.mul(&ParamMonomial::var(p, e)),
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Replaces `p` by a rational function.
    pub fn substitute_param(&self, p: Param, r: &ParamField) -> ParamField {
        if self.degree_in(p) == 0 {
            return ParamField::from_poly(self.clone());
        }
        let coeffs = self.univariate(p);
        let mut acc = ParamField::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * r) + &ParamField::from_poly(c.clone());
        }
        acc
    }

    /// The rational number, if the polynomial is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.constant_term())
    }

    /// Leading term under the name-based graded lexicographic order, which
    /// does not depend on the order in which parameters were interned.
    pub fn named_leading_term(&self) -> Option<(&ParamMonomial, &BigRational)> {
        self.terms()
            .map(|(m, c)| (m.named(), m, c))
            .max_by(|a, b| cmp_named(&a.0, &b.0))
            .map(|(_, m, c)| (m, c))
    }

    /// Terms sorted for printing: descending by name-based grlex.
    pub fn named_terms(&self) -> Vec<(&ParamMonomial, &BigRational)> {
        let mut v: Vec<_> = self.terms().map(|(m, c)| (m.named(), m, c)).collect();
        v.sort_by(|a, b| cmp_named(&b.0, &a.0));
        v.into_iter().map(|(_, m, c)| (m, c)).collect()
    }
}

fn pow_rat(q: &BigRational, e: u16) -> BigRational {
    num_traits::pow(q.clone(), e as usize)
}

fn content_in(p: &ParamPoly, v: Param) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in p.univariate(v) {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() {
            return ParamPoly::one();
        }
    }
    g
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
fn pseudo_rem(a: &ParamPoly, b: &ParamPoly, v: Param) -> ParamPoly {
    let db = b.degree_in(v);
    let bc = b.univariate(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(v);
        if dr < db {
            return r;
        }
        let lr = r.univariate(v).swap_remove(dr as usize);
        let shift = ParamPoly::term(ParamMonomial::var(v, dr - db), BigRational::one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
}

fn single_term_gcd(m: &ParamMonomial, other: &ParamPoly) -> ParamPoly {
    let g = other.monomial_content().gcd(m);
    ParamPoly::term(g, BigRational::one())
}

/// Greatest common divisor, defined up to a rational unit.
///
/// Recursive on the smallest parameter: split off contents, then run a
/// primitive polynomial remainder sequence on the primitive parts.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    if a.len() == 1 {
        return single_term_gcd(a.terms().next().unwrap().0, b);
    }
    if b.len() == 1 {
        return single_term_gcd(b.terms().next().unwrap().0, a);
    }
    if a == b {
        return a.clone();
    }
    let va = a.params();
    let vb = b.params();
    let Some(&v) = va.intersection(&vb).next() else {
        // No shared parameter: any common factor lies in the contents.
        let v = *va.iter().next().unwrap();
        return poly_gcd(&content_in(a, v), b);
    };
    if let Some(&u) = va.symmetric_difference(&vb).next() {
        // A parameter present in only one side cannot occur in the gcd.
        return if va.contains(&u) {
            poly_gcd(&content_in(a, u), b)
        } else {
            poly_gcd(a, &content_in(b, u))
        };
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let mut pa = a.div_exact(&ca).expect("content divides");
    let mut pb = b.div_exact(&cb).expect("content divides");
    let cont = poly_gcd(&ca, &cb);
    if pa.degree_in(v) < pb.degree_in(v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_zero() {
        if pb.degree_in(v) == 0 {
            pa = ParamPoly::one();
            break;
        }
        let r = pseudo_rem(&pa, &pb, v);
        pa = pb;
        pb = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, v);
            r.div_exact(&c).expect("content divides")
        };
    }
    let prim = if pa.degree_in(v) == 0 {
        ParamPoly::one()
    } else {
        let c = content_in(&pa, v);
        pa.div_exact(&c).expect("content divides")
    };
    &cont * &prim
}

/// Element of the fraction field of [`ParamPoly`].
///
/// Kept in lowest terms with the denominator's name-ordered leading
/// coefficient equal to one, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamField {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamField {
    pub fn from_poly(num: ParamPoly) -> Self {
        ParamField {
            num,
            den: ParamPoly::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_poly(ParamPoly::constant(q))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(ParamPoly::param(p))
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(q) = den.as_rational() {
            return Self::from_poly(num.scale(&q.recip()));
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if let Some(q) = den.as_rational() {
            return Self::from_poly(num.scale(&q.recip()));
        }
        let lc = den.named_leading_term().unwrap().1.recip();
        ParamField {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one_poly()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.as_rational()
        } else {
            None
        }
    }

    pub fn params(&self) -> BTreeSet<Param> {
        let mut s = self.num.params();
        s.extend(self.den.params());
        s
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Replaces parameters by rationals. Fails if the denominator vanishes.
    pub fn evaluate(&self, bindings: &BTreeMap<Param, BigRational>) -> Result<Self> {
        let num = self.num.evaluate(bindings);
        let den = self.den.evaluate(bindings);
        if den.is_zero() {
            return Err(Error::VanishingDenominator(self.to_string()));
        }
        Ok(Self::normalize(num, den))
    }

    /// Replaces `p` by a rational function. Fails if the denominator vanishes.
    pub fn substitute_param(&self, p: Param, r: &ParamField) -> Result<Self> {
        let num = self.num.substitute_param(p, r);
        let den = self.den.substitute_param(p, r);
        if den.is_zero() {
            return Err(Error::VanishingDenominator(self.to_string()));
        }
        Ok(&num * &den.inv()?)
    }

    /// True if the value prints as a single product (no top-level `+`/`-` between terms).
    pub(crate) fn is_atomic(&self) -> bool {
        self.num.len() <= 1
    }
}

impl SparsePoly<ParamMonomial, BigRational> {
    fn is_one_poly(&self) -> bool {
        self.len() == 1 && self.constant_term().is_one()
    }
}

impl fmt::Debug for ParamField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn fmt_param_poly(p: &ParamPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.named_terms().into_iter().enumerate() {
        let neg = is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        let mono = fmt_param_monomial(m);
        let body = if m.is_one() {
            fmt_rational(&abs)
        } else if abs.is_one() {
            mono
        } else {
            format!("{}*{}", fmt_rational(&abs), mono)
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn fmt_param_monomial(m: &ParamMonomial) -> String {
    m.named()
        .iter()
        .map(|(n, e)| {
            if *e == 1 {
                n.to_string()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for ParamField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_param_poly(&self.num);
        if self.is_polynomial() {
            return write!(f, "{num}");
        }
        let num = if self.num.len() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den_single_power =
            self.den.len() == 1 && self.den.terms().next().unwrap().0.vars().count() == 1;
        let den = fmt_param_poly(&self.den);
        if den_single_power {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl Zero for ParamField {
    fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamField {
    fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }
}

impl<'a> Add<&'a ParamField> for &'a ParamField {
    type Output = ParamField;
    fn add(self, rhs: &'a ParamField) -> ParamField {
        if self.is_polynomial() && rhs.is_polynomial() {
            return ParamField::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return ParamField::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let l = self.den.div_exact(&g).unwrap();
        let r = rhs.den.div_exact(&g).unwrap();
        ParamField::normalize(&(&self.num * &r) + &(&rhs.num * &l), &self.den * &r)
    }
}

impl<'a> Sub<&'a ParamField> for &'a ParamField {
    type Output = ParamField;
    fn sub(self, rhs: &'a ParamField) -> ParamField {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a ParamField> for &'a ParamField {
    type Output = ParamField;
    fn mul(self, rhs: &'a ParamField) -> ParamField {
        if self.num.is_zero() || rhs.num.is_zero() {
            return ParamField::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return ParamField::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying to keep intermediate sizes down.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        ParamField::normalize(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a ParamField> for &'a ParamField {
    type Output = Result<ParamField>;
    fn div(self, rhs: &'a ParamField) -> Result<ParamField> {
        Ok(self * &rhs.inv()?)
    }
}

impl Neg for ParamField {
    type Output = ParamField;
    fn neg(self) -> ParamField {
        ParamField {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Add for ParamField {
    type Output = ParamField;
    fn add(self, rhs: ParamField) -> ParamField {
        &self + &rhs
    }
}

impl Mul for ParamField {
    type Output = ParamField;
    fn mul(self, rhs: ParamField) -> ParamField {
        &self * &rhs
    }
}

impl FieldScalar for ParamField {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl From<BigRational> for ParamField {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<ParamPoly> for ParamField {
    fn from(p: ParamPoly) -> Self {
        Self::from_poly(p)
    }
}

// Compile-time check that the field qualifies as polynomial coefficients.
#[allow(dead_code)]
fn assert_scalar<T: Scalar>() {}
const _: fn() = assert_scalar::<ParamField>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::scalar::int;

    fn p(name: &str) -> ParamPoly {
        ParamPoly::param(Param::new(name).unwrap())
    }

    #[test]
    fn gcd_of_products() {
        let a = p("a");
        let b = p("b");
        let c = p("c");
        let f = &(&a + &b) * &(&a - &c);
        let g = &(&a + &b) * &(&b + &c);
        let h = poly_gcd(&f, &g);
        assert!(h.div_exact(&(&a + &b)).unwrap().is_constant());
    }

    #[test]
    fn field_cancels_and_normalizes() {
        let a = p("a");
        let b = p("b");
        let x = ParamField::new(&(&a * &a) - &(&b * &b), (&a + &b).scale(&int(2))).unwrap();
        let y = ParamField::new(&a - &b, ParamPoly::constant(int(2))).unwrap();
        assert_eq!(x, y);
        let z = ParamField::new(b.clone(), a.clone()).unwrap();
        let w = ParamField::new(b.scale(&int(-3)), a.scale(&int(-3))).unwrap();
        assert_eq!(z, w);
        assert_eq!(z.to_string(), "b/a");
    }

    #[test]
    fn sums_collapse() {
        let c1 = Param::new("c1").unwrap();
        let c2 = ParamField::param(Param::new("c2").unwrap());
        let q = (&c2 / &ParamField::param(c1)).unwrap();
        let back = &q * &ParamField::param(c1);
        assert_eq!(back, c2);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn vanishing_denominator() {
        let c0 = Param::new("c0").unwrap();
        let km = &p("k") * &p("m");
        let q = ParamField::new(km, ParamPoly::param(c0)).unwrap();
        let mut bind = BTreeMap::new();
        bind.insert(c0, int(0));
        assert!(matches!(
            q.evaluate(&bind),
            Err(Error::VanishingDenominator(_))
        ));
    }
}
