//! Generic sparse multivariate polynomials.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::monomial::Monomial;
use super::scalar::Scalar;

/// A polynomial as a map from monomials to nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality and the zero test is `is_empty`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<M: Monomial, C: Scalar> {
    terms: BTreeMap<M, C>,
}

impl<M: Monomial, C: Scalar> Default for SparsePoly<M, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial, C: Scalar> SparsePoly<M, C> {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(M::one(), c)
    }

    pub fn term(m: M, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (M, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_term(&self) -> C {
        self.terms.get(&M::one()).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff(&self, m: &M) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, C)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&M, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add_term(&mut self, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))))
    }

    pub fn mul_monomial(&self, m: &M, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(n, a)| (n.mul(m), a.mul_ref(c))))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> SparsePoly<M, D> {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Rewrites every monomial, merging terms that collide.
    pub fn map_monomials(&self, mut f: impl FnMut(&M) -> M) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Greatest common divisor of all monomials.
    pub fn monomial_content(&self) -> M {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return M::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    /// Divides every monomial by `m`; `None` if some monomial is not divisible.
    pub fn div_monomial(&self, m: &M) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (n, c) in &self.terms {
            terms.insert(n.div(m)?, c.clone());
        }
        Some(SparsePoly { terms })
    }
}

impl<M: Monomial, C: Scalar + super::scalar::FieldScalar> SparsePoly<M, C> {
    /// Exact division using leading terms; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term()?;
        let dc_inv = dc.try_inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(dm)?;
            let qc = rc.mul_ref(&dc_inv);
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.try_inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }
}

impl<M: Monomial, C: Scalar> fmt::Debug for SparsePoly<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{c:?}*{m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<'a, M: Monomial, C: Scalar> Add<&'a SparsePoly<M, C>> for &'a SparsePoly<M, C> {
    type Output = SparsePoly<M, C>;
    fn add(self, rhs: &'a SparsePoly<M, C>) -> SparsePoly<M, C> {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, M: Monomial, C: Scalar> Sub<&'a SparsePoly<M, C>> for &'a SparsePoly<M, C> {
    type Output = SparsePoly<M, C>;
    fn sub(self, rhs: &'a SparsePoly<M, C>) -> SparsePoly<M, C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, M: Monomial, C: Scalar> Mul<&'a SparsePoly<M, C>> for &'a SparsePoly<M, C> {
    type Output = SparsePoly<M, C>;
    fn mul(self, rhs: &'a SparsePoly<M, C>) -> SparsePoly<M, C> {
        let mut out = SparsePoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c.mul_ref(d));
            }
        }
        out
    }
}

impl<M: Monomial, C: Scalar> Neg for &SparsePoly<M, C> {
    type Output = SparsePoly<M, C>;
    fn neg(self) -> SparsePoly<M, C> {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<M: Monomial, C: Scalar> Neg for SparsePoly<M, C> {
    type Output = SparsePoly<M, C>;
    fn neg(mut self) -> SparsePoly<M, C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<M: Monomial, C: Scalar> $tr<SparsePoly<M, C>> for SparsePoly<M, C> {
            type Output = SparsePoly<M, C>;
            fn $method(self, rhs: SparsePoly<M, C>) -> SparsePoly<M, C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, M: Monomial, C: Scalar> $tr<&'a SparsePoly<M, C>> for SparsePoly<M, C> {
            type Output = SparsePoly<M, C>;
            fn $method(self, rhs: &'a SparsePoly<M, C>) -> SparsePoly<M, C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, M: Monomial, C: Scalar> $tr<SparsePoly<M, C>> for &'a SparsePoly<M, C> {
            type Output = SparsePoly<M, C>;
            fn $method(self, rhs: SparsePoly<M, C>) -> SparsePoly<M, C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<M: Monomial, C: Scalar> AddAssign<&SparsePoly<M, C>> for SparsePoly<M, C> {
    fn add_assign(&mut self, rhs: &SparsePoly<M, C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<M: Monomial, C: Scalar> SubAssign<&SparsePoly<M, C>> for SparsePoly<M, C> {
    fn sub_assign(&mut self, rhs: &SparsePoly<M, C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<M: Monomial, C: Scalar> num_traits::Zero for SparsePoly<M, C> {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<M: Monomial, C: Scalar> num_traits::One for SparsePoly<M, C> {
    fn one() -> Self {
        SparsePoly::one()
    }
}
