//! Polynomials in `∂` and the formal λ-variables over [`ParamField`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{LamMonomial, LamVar, Monomial, Param, VarId, MAX_LAM};
use super::param::{ParamField, ParamPoly};
use super::sparse::SparsePoly;
use crate::error::{Error, Result};

pub type Poly = SparsePoly<LamMonomial, ParamField>;

impl SparsePoly<LamMonomial, ParamField> {
    pub fn var(v: LamVar) -> Self {
        Self::term(LamMonomial::var(v, 1), ParamField::one())
    }

    pub fn del() -> Self {
        Self::var(LamVar::Del)
    }

    pub fn lam(i: u8) -> Self {
        Self::var(LamVar::Lam(i))
    }

    pub fn param(p: Param) -> Self {
        Self::constant(ParamField::param(p))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(ParamField::from_i64(n))
    }

    pub fn rational(q: BigRational) -> Self {
        Self::constant(ParamField::from_rational(q))
    }

    pub fn from_field(c: ParamField) -> Self {
        Self::constant(c)
    }

    /// The coefficient, if the polynomial has no `∂` or λ dependence.
    pub fn as_field(&self) -> Option<ParamField> {
        self.is_constant().then(|| self.constant_term())
    }

    /// λ-layer variables occurring in the polynomial.
    pub fn lam_vars(&self) -> BTreeSet<LamVar> {
        let mut out = BTreeSet::new();
        for (m, _) in self.terms() {
            out.extend(m.vars().map(|(v, _)| v));
        }
        out
    }

    pub fn params(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for (_, c) in self.terms() {
            out.extend(c.params());
        }
        out
    }

    pub fn contains(&self, v: LamVar) -> bool {
        self.terms().any(|(m, _)| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: LamVar) -> u16 {
        self.terms().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    /// Replaces every occurrence of `v` by `r`.
    pub fn subst(&self, v: LamVar, r: &Poly) -> Poly {
        let mut map = BTreeMap::new();
        map.insert(v, r.clone());
        self.subst_many(&map)
    }

    /// Simultaneous substitution: every variable in `map` is replaced at once,
    /// so replacements never see each other's output.
    pub fn subst_many(&self, map: &BTreeMap<LamVar, Poly>) -> Poly {
        let mut powers: BTreeMap<LamVar, Vec<Poly>> =
            map.keys().map(|v| (*v, vec![Poly::one()])).collect();
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut rest = *m;
            let mut factor = Poly::constant(c.clone());
            for (v, e) in m.vars() {
                let Some(r) = map.get(&v) else { continue };
                rest = rest.with_exponent(v, 0);
                let cache = powers.get_mut(&v).unwrap();
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * r;
                    cache.push(next);
                }
                factor = &factor * &cache[e as usize];
            }
            out += &factor.mul_monomial(&rest, &ParamField::one());
        }
        out
    }

    /// Substitution keyed by a grammar variable. Parameters are rejected; use
    /// [`Poly::evaluate_params`] for those.
    pub fn substitute(&self, v: VarId, r: &Poly) -> Result<Poly> {
        match v.lam_var() {
            Some(lv) => Ok(self.subst(lv, r)),
            None => Err(Error::SubstituteParam(v.name())),
        }
    }

    /// The polynomial multiplying `vⁿ` (plain power, no factorial).
    pub fn coefficient_of(&self, v: LamVar, n: u16) -> Poly {
        Poly::from_terms(
            self.terms()
                .filter(|(m, _)| m.exponent(v) == n)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone())),
        )
    }

    /// Splits into coefficients of the monomials in `vars`; the keys are the
    /// exponent patterns, the values polynomials in the remaining variables.
    pub fn coefficients_in(&self, vars: &[LamVar]) -> BTreeMap<LamMonomial, Poly> {
        let mut out: BTreeMap<LamMonomial, Poly> = BTreeMap::new();
        for (m, c) in self.terms() {
            let mut key = LamMonomial::one();
            let mut rest = *m;
            for v in vars {
                key = key.with_exponent(*v, m.exponent(*v));
                rest = rest.with_exponent(*v, 0);
            }
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Replaces parameters by rationals in every coefficient.
    pub fn evaluate_params(&self, bindings: &BTreeMap<Param, BigRational>) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c.evaluate(bindings)?);
        }
        Ok(out)
    }

    /// Replaces a parameter by a rational function in every coefficient.
    pub fn substitute_param(&self, p: Param, r: &ParamField) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c.substitute_param(p, r)?);
        }
        Ok(out)
    }

    /// Returns the first λ-variable (not `∂`) that occurs in none of `polys`.
    pub fn fresh_lam<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Result<LamVar> {
        let mut used = BTreeSet::new();
        for p in polys {
            used.extend(p.lam_vars());
        }
        (0..MAX_LAM as u8)
            .map(LamVar::Lam)
            .find(|v| !used.contains(v))
            .ok_or(Error::TooManyVariables(MAX_LAM))
    }
}

impl From<ParamField> for Poly {
    fn from(c: ParamField) -> Self {
        Poly::constant(c)
    }
}

impl From<ParamPoly> for Poly {
    fn from(c: ParamPoly) -> Self {
        Poly::constant(ParamField::from_poly(c))
    }
}

fn fmt_lam_monomial(m: &LamMonomial) -> String {
    m.vars()
        .map(|(v, e)| {
            if e == 1 {
                v.name()
            } else {
                format!("{}^{}", v.name(), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Splits a printed coefficient into sign and magnitude so terms can be
/// joined with ` - ` instead of `+ -`.
fn split_sign(c: &ParamField) -> (bool, ParamField) {
    if c.is_atomic() {
        let lead = c.numer().terms().next().map(|(_, q)| q.clone());
        if let Some(q) = lead {
            if q < BigRational::zero() {
                return (true, -c.clone());
            }
        }
    }
    (false, c.clone())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let (neg, abs) = split_sign(c);
            let body = if m.is_one() {
                let s = abs.to_string();
                if i > 0 && !abs.is_atomic() {
                    format!("({s})")
                } else {
                    s
                }
            } else {
                let mono = fmt_lam_monomial(m);
                if abs.is_one() {
                    mono
                } else if abs.is_atomic() {
                    format!("{abs}*{mono}")
                } else {
                    format!("({abs})*{mono}")
                }
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::scalar::int;

    fn d() -> Poly {
        Poly::del()
    }
    fn x() -> Poly {
        Poly::lam(0)
    }
    fn y() -> Poly {
        Poly::lam(1)
    }

    #[test]
    fn expansion() {
        let p = (&d() + &x()) * (&d() + &x().scale(&ParamField::from_i64(2)));
        assert_eq!(p.to_string(), "d^2 + 3*d*x + 2*x^2");
    }

    #[test]
    fn skew_substitution() {
        // ∂ + 2μ with μ → −∂−λ gives −∂−2λ
        let p = &d() + &y().scale(&ParamField::from_i64(2));
        let r = -(&d() + &x());
        let q = p.subst(LamVar::Lam(1), &r);
        assert_eq!(q, -(&d() + &x().scale(&ParamField::from_i64(2))));
    }

    #[test]
    fn simultaneous_substitution_does_not_chain() {
        let p = &d() * &x();
        let mut map = BTreeMap::new();
        map.insert(LamVar::Del, &d() + &x());
        map.insert(LamVar::Lam(0), y());
        assert_eq!(p.subst_many(&map), &(&d() + &x()) * &y());
    }

    #[test]
    fn coefficients() {
        let p = &d() + &x().scale(&ParamField::from_i64(2));
        assert_eq!(p.coefficient_of(LamVar::Lam(0), 1), Poly::int(2));
        assert_eq!(p.coefficient_of(LamVar::Lam(0), 0), d());
        assert!(p.coefficient_of(LamVar::Lam(0), 5).is_zero());
    }

    #[test]
    fn param_substitution_rejected() {
        let a = VarId::from_name("a").unwrap();
        assert!(matches!(
            x().substitute(a, &Poly::zero()),
            Err(Error::SubstituteParam(_))
        ));
    }

    #[test]
    fn evaluate_to_zero() {
        let a = Param::new("a").unwrap();
        let p = (&Poly::param(a) - &Poly::int(2)) * x();
        let mut b = BTreeMap::new();
        b.insert(a, int(2));
        assert!(p.evaluate_params(&b).unwrap().is_zero());
    }
}
