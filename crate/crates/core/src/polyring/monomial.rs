//! Monomials and variables.
//!
//! Two monomial shapes are used. Expressions in `∂` and the formal λ-variables
//! have a small, fixed set of variables and use a dense exponent array. Symbolic
//! parameters are open-ended (the solver allocates hundreds of unknowns) and use
//! a sparse sorted list keyed by interned parameter ids.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, LazyLock, RwLock};

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Operations the sparse polynomial core needs from a monomial type.
///
/// `Ord` must be a monomial order (graded lexicographic here); the greatest
/// monomial of a polynomial is its leading monomial.
pub trait Monomial: Clone + Ord + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn one() -> Self;
    fn is_one(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact quotient, `None` if `rhs` does not divide `self`.
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn gcd(&self, rhs: &Self) -> Self;
    fn total_degree(&self) -> u32;
}

/// Number of formal λ-variables a single expression may use.
pub const MAX_LAM: usize = 11;
const SLOTS: usize = MAX_LAM + 1;

/// A variable of the λ-calculus layer: `∂` or one of the formal λ-variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LamVar {
    Del,
    Lam(u8),
}

impl LamVar {
    fn slot(self) -> usize {
        match self {
            LamVar::Del => 0,
            LamVar::Lam(i) => i as usize + 1,
        }
    }

    pub fn name(self) -> String {
        match self {
            LamVar::Del => "d".to_string(),
            LamVar::Lam(0) => "x".to_string(),
            LamVar::Lam(1) => "y".to_string(),
            LamVar::Lam(2) => "z".to_string(),
            LamVar::Lam(3) => "w".to_string(),
            LamVar::Lam(i) => format!("x{i}"),
        }
    }

    /// Parses a reserved name: `d`, `x`, `y`, `z`, `w` or `x<n>`.
    pub fn from_name(name: &str) -> Option<LamVar> {
        match name {
            "d" => Some(LamVar::Del),
            "x" => Some(LamVar::Lam(0)),
            "y" => Some(LamVar::Lam(1)),
            "z" => Some(LamVar::Lam(2)),
            "w" => Some(LamVar::Lam(3)),
            _ => {
                let rest = name.strip_prefix('x')?;
                if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                let i: usize = rest.parse().ok()?;
                (i < MAX_LAM).then_some(LamVar::Lam(i as u8))
            }
        }
    }
}

/// Dense monomial in `∂, λ₀, …, λ₁₀`, ordered graded-lexicographically with
/// `∂ > λ₀ > λ₁ > …`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LamMonomial(pub(crate) [u16; SLOTS]);

impl LamMonomial {
    pub fn var(v: LamVar, exp: u16) -> Self {
        let mut m = Self::default();
        m.0[v.slot()] = exp;
        m
    }

    pub fn exponent(&self, v: LamVar) -> u16 {
        self.0[v.slot()]
    }

    pub fn with_exponent(mut self, v: LamVar, exp: u16) -> Self {
        self.0[v.slot()] = exp;
        self
    }

    /// Variables with a positive exponent, in slot order.
    pub fn vars(&self) -> impl Iterator<Item = (LamVar, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(s, e)| {
                let v = if s == 0 {
                    LamVar::Del
                } else {
                    LamVar::Lam((s - 1) as u8)
                };
                (v, *e)
            })
    }
}

impl Ord for LamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for LamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .vars()
            .map(|(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{e}", v.name())
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Monomial for LamMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(rhs.0.iter()) {
            *a += *b;
        }
        out
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(rhs.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(out)
    }
    fn gcd(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(rhs.0.iter()) {
            *a = (*a).min(*b);
        }
        out
    }
    fn total_degree(&self) -> u32 {
        self.0.iter().map(|e| *e as u32).sum()
    }
}

// ---------------------------------------------------------------------------
// Symbolic parameters

struct Interner {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

static PARAMS: LazyLock<RwLock<Interner>> = LazyLock::new(|| {
    RwLock::new(Interner {
        names: Vec::new(),
        ids: HashMap::new(),
    })
});

/// An interned symbolic parameter such as `a`, `b`, `c0` or a solver unknown.
///
/// Ids are process-local; anything user-visible (printing, canonical units)
/// orders parameters by name instead.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param(u32);

impl Param {
    /// Interns `name` as a parameter. Reserved λ-layer names are rejected.
    pub fn new(name: &str) -> Result<Param> {
        if LamVar::from_name(name).is_some() {
            return Err(Error::VariableKindClash {
                name: name.to_string(),
                existing: if name == "d" {
                    "derivation symbol"
                } else {
                    "lambda variable"
                },
                requested: "parameter",
            });
        }
        if !is_identifier(name) {
            return Err(Error::Invalid(format!(
                "`{name}` is not a valid parameter name"
            )));
        }
        Ok(Self::intern(name))
    }

    pub(crate) fn intern(name: &str) -> Param {
        if let Some(id) = PARAMS.read().unwrap().ids.get(name) {
            return Param(*id);
        }
        let mut w = PARAMS.write().unwrap();
        if let Some(id) = w.ids.get(name) {
            return Param(*id);
        }
        let id = w.names.len() as u32;
        let arc: Arc<str> = Arc::from(name);
        w.names.push(arc.clone());
        w.ids.insert(arc, id);
        Param(id)
    }

    pub fn name(&self) -> Arc<str> {
        PARAMS.read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Sparse monomial in parameters: `(param, exponent)` pairs sorted by param id.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial(pub(crate) SmallVec<[(Param, u16); 4]>);

impl ParamMonomial {
    pub fn var(p: Param, exp: u16) -> Self {
        if exp == 0 {
            return Self::default();
        }
        let mut v = SmallVec::new();
        v.push((p, exp));
        ParamMonomial(v)
    }

    pub fn exponent(&self, p: Param) -> u16 {
        self.0
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Param, u16)> + '_ {
        self.0.iter().copied()
    }

    /// Removes `p` from the monomial, returning its exponent and the rest.
    pub fn split_off(&self, p: Param) -> (u16, ParamMonomial) {
        let mut rest = self.clone();
        let mut exp = 0;
        rest.0.retain(|(q, e)| {
            if *q == p {
                exp = *e;
                false
            } else {
                true
            }
        });
        (exp, rest)
    }

    /// Exponents keyed by parameter name, for name-stable orderings.
    pub(crate) fn named(&self) -> Vec<(Arc<str>, u16)> {
        let mut v: Vec<_> = self.0.iter().map(|(p, e)| (p.name(), *e)).collect();
        v.sort();
        v
    }
}

/// Graded lexicographic comparison on name-sorted exponent lists.
pub(crate) fn cmp_named(a: &[(Arc<str>, u16)], b: &[(Arc<str>, u16)]) -> Ordering {
    let da: u32 = a.iter().map(|(_, e)| *e as u32).sum();
    let db: u32 = b.iter().map(|(_, e)| *e as u32).sum();
    da.cmp(&db).then_with(|| lex_sparse(a, b))
}

fn lex_sparse<K: Ord>(a: &[(K, u16)], b: &[(K, u16)]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.0.cmp(&y.0) {
            // `a` has a positive exponent in an earlier variable
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => match x.1.cmp(&y.1) {
                Ordering::Equal => {}
                o => return o,
            },
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| lex_sparse(&self.0, &other.0))
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .named()
            .into_iter()
            .map(|(n, e)| {
                if e == 1 {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Monomial for ParamMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ParamMonomial(out)
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(p, e) in self.0.iter() {
            if j < rhs.0.len() && rhs.0[j].0 < p {
                return None;
            }
            if j < rhs.0.len() && rhs.0[j].0 == p {
                let f = rhs.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((p, e - f)),
                }
            } else {
                out.push((p, e));
            }
        }
        if j < rhs.0.len() {
            return None;
        }
        Some(ParamMonomial(out))
    }
    fn gcd(&self, rhs: &Self) -> Self {
        let mut out = SmallVec::new();
        let (a, b) = (&self.0, &rhs.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.min(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        ParamMonomial(out)
    }
    fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e as u32).sum()
    }
}

/// A variable of any kind, as named in the expression grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarId {
    Del,
    Lam(u8),
    Param(Param),
}

impl VarId {
    pub fn kind(&self) -> &'static str {
        match self {
            VarId::Del => "derivation symbol",
            VarId::Lam(_) => "lambda variable",
            VarId::Param(_) => "parameter",
        }
    }

    pub fn lam_var(&self) -> Option<LamVar> {
        match *self {
            VarId::Del => Some(LamVar::Del),
            VarId::Lam(i) => Some(LamVar::Lam(i)),
            VarId::Param(_) => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            VarId::Del => LamVar::Del.name(),
            VarId::Lam(i) => LamVar::Lam(*i).name(),
            VarId::Param(p) => p.name().to_string(),
        }
    }

    /// Resolves a name: reserved names are `∂`/λ-variables, anything else a parameter.
    pub fn from_name(name: &str) -> Result<VarId> {
        match LamVar::from_name(name) {
            Some(LamVar::Del) => Ok(VarId::Del),
            Some(LamVar::Lam(i)) => Ok(VarId::Lam(i)),
            None => Param::new(name).map(VarId::Param),
        }
    }
}

impl From<LamVar> for VarId {
    fn from(v: LamVar) -> Self {
        match v {
            LamVar::Del => VarId::Del,
            LamVar::Lam(i) => VarId::Lam(i),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lam_order_is_graded() {
        let d = LamMonomial::var(LamVar::Del, 1);
        let x2 = LamMonomial::var(LamVar::Lam(0), 2);
        let x = LamMonomial::var(LamVar::Lam(0), 1);
        assert!(x2 > d);
        assert!(d > x);
    }

    #[test]
    fn param_monomial_division() {
        let a = Param::intern("mono_a");
        let b = Param::intern("mono_b");
        let ab2 = ParamMonomial::var(a, 1).mul(&ParamMonomial::var(b, 2));
        let b1 = ParamMonomial::var(b, 1);
        assert_eq!(ab2.div(&b1), Some(ParamMonomial::var(a, 1).mul(&b1)));
        assert_eq!(b1.div(&ab2), None);
        assert_eq!(ab2.gcd(&b1), b1);
    }

    #[test]
    fn reserved_names() {
        assert_eq!(LamVar::from_name("x3"), Some(LamVar::Lam(3)));
        assert_eq!(LamVar::from_name("x"), Some(LamVar::Lam(0)));
        assert!(LamVar::from_name("xa").is_none());
        assert!(Param::new("d").is_err());
        assert!(Param::new("y").is_err());
        assert!(Param::new("c0").is_ok());
    }
}
