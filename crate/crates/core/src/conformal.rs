//! Free `ℂ[∂]`-modules, structure tables and sesquilinear products.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::scalar::factorial;
use crate::polyring::{LamVar, Param, ParamField, Poly};

/// The variable a structure table is written in.
pub const TABLE_VAR: LamVar = LamVar::Lam(0);

/// An element of `A[λ, μ, …]`: one polynomial coefficient per generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaElement(pub Vec<Poly>);

impl LambdaElement {
    pub fn zero(rank: usize) -> Self {
        LambdaElement(vec![Poly::zero(); rank])
    }

    /// The `i`-th generator.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = Poly::one();
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    pub fn coords(&self) -> &[Poly] {
        &self.0
    }

    pub fn scale(&self, p: &Poly) -> Self {
        LambdaElement(self.0.iter().map(|c| c * p).collect())
    }

    pub fn map(&self, f: impl FnMut(&Poly) -> Poly) -> Self {
        LambdaElement(self.0.iter().map(f).collect())
    }

    pub fn try_map(&self, f: impl FnMut(&Poly) -> Result<Poly>) -> Result<Self> {
        Ok(LambdaElement(self.0.iter().map(f).collect::<Result<_>>()?))
    }

    pub fn subst(&self, v: LamVar, r: &Poly) -> Self {
        self.map(|p| p.subst(v, r))
    }

    pub fn lam_vars(&self) -> BTreeSet<LamVar> {
        self.0.iter().flat_map(|p| p.lam_vars()).collect()
    }

    pub fn params(&self) -> BTreeSet<Param> {
        self.0.iter().flat_map(|p| p.params()).collect()
    }

    /// Applies `∂` to the element.
    pub fn del(&self) -> Self {
        self.scale(&Poly::del())
    }

    /// Formats with generator names, e.g. `(d + 2*x)*L - M`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> DisplayElement<'a> {
        DisplayElement { e: self, names }
    }
}

pub struct DisplayElement<'a> {
    e: &'a LambdaElement,
    names: &'a [String],
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, name) in self.e.0.iter().zip(self.names) {
            if p.is_zero() {
                continue;
            }
            let (neg, body) = coefficient_term(p, name);
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write!(f, "{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Renders `p*name` as (negated?, text without the leading sign).
fn coefficient_term(p: &Poly, name: &str) -> (bool, String) {
    if p.is_one() {
        return (false, name.to_string());
    }
    if (-p.clone()).is_one() {
        return (true, name.to_string());
    }
    let s = p.to_string();
    if has_top_level_sum(&s) {
        return (false, format!("({s})*{name}"));
    }
    match s.strip_prefix('-') {
        Some(rest) => (true, format!("{rest}*{name}")),
        None => (false, format!("{s}*{name}")),
    }
}

/// Whether a printed expression has a binary `+`/`-` outside parentheses.
pub(crate) fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for (i, c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

impl Add for &LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: &LambdaElement) -> LambdaElement {
        LambdaElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LambdaElement {
    type Output = LambdaElement;
    fn sub(self, rhs: &LambdaElement) -> LambdaElement {
        LambdaElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        LambdaElement(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: LambdaElement) -> LambdaElement {
        &self + &rhs
    }
}

impl Sub for LambdaElement {
    type Output = LambdaElement;
    fn sub(self, rhs: LambdaElement) -> LambdaElement {
        &self - &rhs
    }
}

impl Neg for LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        -&self
    }
}

impl fmt::Debug for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.rank()).map(|i| format!("e{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    None,
    Commutative,
    Skew,
}

impl Symmetry {
    pub fn tag(self) -> &'static str {
        match self {
            Symmetry::None => "none",
            Symmetry::Commutative => "commutative",
            Symmetry::Skew => "skew",
        }
    }
}

/// `−∂−λ`, the argument of the conformal swap.
pub fn swap_target(v: LamVar) -> Poly {
    -(Poly::del() + Poly::var(v))
}

/// A λ-product on generators: `entry(i, j) = eᵢ ∘_λ eⱼ` in the variable
/// [`TABLE_VAR`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTable {
    rank: usize,
    entries: Vec<LambdaElement>,
    symmetry: Symmetry,
}

impl StructureTable {
    pub fn zero(rank: usize) -> Self {
        StructureTable {
            rank,
            entries: vec![LambdaElement::zero(rank); rank * rank],
            symmetry: Symmetry::None,
        }
    }

    /// Builds a table from `rank × rank` entries in row-major order.
    pub fn new(rank: usize, entries: Vec<LambdaElement>) -> Result<Self> {
        if entries.len() != rank * rank {
            return Err(Error::RankMismatch {
                expected: rank * rank,
                found: entries.len(),
            });
        }
        for e in &entries {
            if e.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: e.rank(),
                });
            }
            if let Some(v) = e
                .lam_vars()
                .into_iter()
                .find(|v| *v != LamVar::Del && *v != TABLE_VAR)
            {
                return Err(Error::Invalid(format!(
                    "table entries may only use d and {}, found {}",
                    TABLE_VAR.name(),
                    v.name()
                )));
            }
        }
        Ok(StructureTable {
            rank,
            entries,
            symmetry: Symmetry::None,
        })
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(usize, usize) -> LambdaElement) -> Result<Self> {
        let mut entries = Vec::with_capacity(rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                entries.push(f(i, j));
            }
        }
        Self::new(rank, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &LambdaElement {
        &self.entries[i * self.rank + j]
    }

    /// Replaces one entry. Clears the symmetry tag, which may no longer hold.
    pub fn set_entry(&mut self, i: usize, j: usize, e: LambdaElement) {
        self.entries[i * self.rank + j] = e;
        self.symmetry = Symmetry::None;
    }

    pub fn entries(&self) -> &[LambdaElement] {
        &self.entries
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Attaches a symmetry tag after verifying it on every pair.
    pub fn with_symmetry(mut self, sym: Symmetry, names: &[String], table: &str) -> Result<Self> {
        if let Some((i, j)) = self.symmetry_violation(sym) {
            return Err(Error::SymmetryViolation {
                table: table.to_string(),
                tag: sym.tag(),
                i: names[i].clone(),
                j: names[j].clone(),
            });
        }
        self.symmetry = sym;
        Ok(self)
    }

    /// Sets the tag without checking; callers must know it holds.
    pub(crate) fn tagged(mut self, sym: Symmetry) -> Self {
        debug_assert!(self.symmetry_violation(sym).is_none());
        self.symmetry = sym;
        self
    }

    /// The first pair `(i, j)` violating `sym`, if any.
    pub fn symmetry_violation(&self, sym: Symmetry) -> Option<(usize, usize)> {
        let sign = match sym {
            Symmetry::None => return None,
            Symmetry::Commutative => 1,
            Symmetry::Skew => -1,
        };
        let t = swap_target(TABLE_VAR);
        for i in 0..self.rank {
            for j in i..self.rank {
                let swapped = self.entry(i, j).subst(TABLE_VAR, &t);
                let expect = if sign == 1 { swapped } else { -swapped };
                if &expect != self.entry(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Detects which symmetry holds, preferring `Commutative` for zero tables.
    pub fn detect_symmetry(&self) -> Symmetry {
        if self.symmetry_violation(Symmetry::Commutative).is_none() {
            Symmetry::Commutative
        } else if self.symmetry_violation(Symmetry::Skew).is_none() {
            Symmetry::Skew
        } else {
            Symmetry::None
        }
    }

    pub fn params(&self) -> BTreeSet<Param> {
        self.entries.iter().flat_map(|e| e.params()).collect()
    }

    pub fn try_map(&self, mut f: impl FnMut(&Poly) -> Result<Poly>) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.try_map(&mut f))
            .collect::<Result<Vec<_>>>()?;
        Ok(StructureTable {
            rank: self.rank,
            entries,
            symmetry: Symmetry::None,
        })
    }

    /// `x ∘_v y` for arbitrary elements, extended from the table by
    /// sesquilinearity: `Σ xᵢ(−v) · yⱼ(∂+v) · entry(i, j)(λ → v)`.
    pub fn eval_product(
        &self,
        x: &LambdaElement,
        y: &LambdaElement,
        v: LamVar,
    ) -> Result<LambdaElement> {
        if x.rank() != self.rank || y.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: if x.rank() != self.rank {
                    x.rank()
                } else {
                    y.rank()
                },
            });
        }
        if v == LamVar::Del {
            return Err(Error::Invalid("the product variable cannot be d".into()));
        }
        if x.lam_vars().contains(&v) || y.lam_vars().contains(&v) {
            return Err(Error::VariableCapture(v.name()));
        }
        let minus_v = -Poly::var(v);
        let del_plus_v = Poly::del() + Poly::var(v);
        let xs: Vec<Poly> = x.0.iter().map(|p| p.subst(LamVar::Del, &minus_v)).collect();
        let ys: Vec<Poly> =
            y.0.iter()
                .map(|p| p.subst(LamVar::Del, &del_plus_v))
                .collect();
        let var = Poly::var(v);
        let mut out = LambdaElement::zero(self.rank);
        for (i, xi) in xs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in ys.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entry = self.entry(i, j);
                if entry.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, e) in entry.0.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    let e = if v == TABLE_VAR {
                        e.clone()
                    } else {
                        e.subst(TABLE_VAR, &var)
                    };
                    out.0[k] += &(&coeff * &e);
                }
            }
        }
        Ok(out)
    }

    /// `x ∘_t y` for a polynomial index `t` (for example `λ+μ` or `−∂−λ`):
    /// evaluated at a fresh variable, then substituted after full expansion.
    pub fn product_at(
        &self,
        x: &LambdaElement,
        y: &LambdaElement,
        t: &Poly,
    ) -> Result<LambdaElement> {
        if let Some(v) = single_var(t) {
            if v != LamVar::Del && !x.lam_vars().contains(&v) && !y.lam_vars().contains(&v) {
                return self.eval_product(x, y, v);
            }
        }
        let v = fresh_for(&[x, y], &[t])?;
        Ok(self.eval_product(x, y, v)?.subst(v, t))
    }

    /// `n!` times the coefficient of `λⁿ` in `entry(i, j)`.
    pub fn nth_product(&self, i: usize, j: usize, n: u16) -> LambdaElement {
        let f = Poly::rational(factorial(n as u32));
        self.entry(i, j)
            .map(|p| &p.coefficient_of(TABLE_VAR, n) * &f)
    }

    /// Highest power of `λ` occurring in the table.
    pub fn lam_degree(&self) -> u16 {
        self.entries
            .iter()
            .flat_map(|e| e.0.iter())
            .map(|p| p.degree_in(TABLE_VAR))
            .max()
            .unwrap_or(0)
    }
}

fn single_var(t: &Poly) -> Option<LamVar> {
    if t.len() != 1 {
        return None;
    }
    let (m, c) = t.terms().next()?;
    if !c.is_one() {
        return None;
    }
    let mut vars = m.vars();
    let (v, e) = vars.next()?;
    (e == 1 && vars.next().is_none()).then_some(v)
}

/// A λ-variable occurring in none of the given elements and polynomials.
pub fn fresh_for(elems: &[&LambdaElement], polys: &[&Poly]) -> Result<LamVar> {
    let mut all: Vec<&Poly> = elems.iter().flat_map(|e| e.0.iter()).collect();
    all.extend(polys.iter().copied());
    Poly::fresh_lam(all)
}

/// Coordinatewise substitution `v → target`.
pub fn conjugate(expr: &LambdaElement, v: LamVar, target: &Poly) -> LambdaElement {
    expr.subst(v, target)
}

/// A `ℂ[∂]`-linear map given by its matrix: column `j` is the image of `eⱼ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endomorphism {
    rank: usize,
    /// `m[i][j]`: coefficient of `eᵢ` in the image of `eⱼ`.
    m: Vec<Vec<Poly>>,
}

impl Endomorphism {
    pub fn new(m: Vec<Vec<Poly>>) -> Result<Self> {
        let rank = m.len();
        for row in &m {
            if row.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: row.len(),
                });
            }
            for p in row {
                if p.lam_vars().iter().any(|v| *v != LamVar::Del) {
                    return Err(Error::Invalid(
                        "endomorphism entries may only use d and parameters".into(),
                    ));
                }
            }
        }
        Ok(Endomorphism { rank, m })
    }

    /// Builds from the images of the generators.
    pub fn from_images(images: &[LambdaElement]) -> Result<Self> {
        let rank = images.len();
        let m = (0..rank)
            .map(|i| {
                images
                    .iter()
                    .map(|img| img.0.get(i).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        Self::new(m)
    }

    pub fn identity(rank: usize) -> Self {
        Self::scalar(rank, Poly::one())
    }

    pub fn zero(rank: usize) -> Self {
        Self::scalar(rank, Poly::zero())
    }

    /// `p(∂)` times the identity.
    pub fn scalar(rank: usize, p: Poly) -> Self {
        let m = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| if i == j { p.clone() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        Endomorphism { rank, m }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.m[i][j]
    }

    /// Image of the `j`-th generator.
    pub fn image(&self, j: usize) -> LambdaElement {
        LambdaElement((0..self.rank).map(|i| self.m[i][j].clone()).collect())
    }

    pub fn apply(&self, x: &LambdaElement) -> Result<LambdaElement> {
        if x.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: x.rank(),
            });
        }
        let mut out = LambdaElement::zero(self.rank);
        for (i, row) in self.m.iter().enumerate() {
            for (a, xj) in row.iter().zip(&x.0) {
                if !a.is_zero() && !xj.is_zero() {
                    out.0[i] += &(a * xj);
                }
            }
        }
        Ok(out)
    }
}

/// A symbolic parameter together with its side condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamDecl {
    pub name: String,
    pub nonzero: bool,
}

/// A free `ℂ[∂]`-module with named λ-products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalAlgebra {
    generators: Vec<String>,
    params: Vec<ParamDecl>,
    tables: BTreeMap<String, StructureTable>,
}

impl fmt::Debug for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureTable")
            .field("rank", &self.rank)
            .field("entries", &self.entries)
            .field("symmetry", &self.symmetry)
            .finish()
    }
}

impl ConformalAlgebra {
    pub fn new(generators: Vec<String>) -> Self {
        ConformalAlgebra {
            generators,
            params: Vec::new(),
            tables: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn params(&self) -> &[ParamDecl] {
        &self.params
    }

    /// Declares a parameter, or strengthens an existing declaration.
    pub fn declare_param(&mut self, name: &str, nonzero: bool) -> Result<Param> {
        let p = Param::new(name)?;
        match self.params.iter_mut().find(|d| d.name == name) {
            Some(d) => d.nonzero |= nonzero,
            None => {
                self.params.push(ParamDecl {
                    name: name.to_string(),
                    nonzero,
                });
                self.params.sort_by(|a, b| a.name.cmp(&b.name));
            }
        }
        Ok(p)
    }

    pub fn with_param(mut self, name: &str, nonzero: bool) -> Result<Self> {
        self.declare_param(name, nonzero)?;
        Ok(self)
    }

    /// Drops declarations of parameters that no table mentions.
    pub fn retain_used_params(&mut self) {
        let used: BTreeSet<Param> = self.tables.values().flat_map(|t| t.params()).collect();
        self.params
            .retain(|d| used.contains(&Param::intern(&d.name)));
    }

    pub fn nonzero_params(&self) -> BTreeSet<Param> {
        self.params
            .iter()
            .filter(|d| d.nonzero)
            .map(|d| Param::intern(&d.name))
            .collect()
    }

    pub fn tables(&self) -> &BTreeMap<String, StructureTable> {
        &self.tables
    }

    pub fn table(&self, key: &str) -> Result<&StructureTable> {
        self.tables
            .get(key)
            .ok_or_else(|| Error::MissingTable(key.to_string()))
    }

    pub fn has_table(&self, key: &str) -> bool {
        self.tables.contains_key(key)
    }

    pub fn set_table(&mut self, key: &str, t: StructureTable) -> Result<()> {
        if t.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: t.rank(),
            });
        }
        self.tables.insert(key.to_string(), t);
        Ok(())
    }

    pub fn with_table(mut self, key: &str, t: StructureTable) -> Result<Self> {
        self.set_table(key, t)?;
        Ok(self)
    }

    pub fn remove_table(&mut self, key: &str) -> Option<StructureTable> {
        self.tables.remove(key)
    }

    pub fn basis(&self, i: usize) -> LambdaElement {
        LambdaElement::basis(self.rank(), i)
    }

    /// Checks that every parameter used is declared and that coefficient
    /// denominators only involve parameters declared nonzero.
    pub fn validate(&self) -> Result<()> {
        let declared: BTreeSet<Param> =
            self.params.iter().map(|d| Param::intern(&d.name)).collect();
        let nonzero = self.nonzero_params();
        for (key, t) in &self.tables {
            for e in t.entries() {
                for p in &e.0 {
                    for (_, c) in p.terms() {
                        check_coefficient(c, &declared, &nonzero, key)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// `eᵢ ∘_v eⱼ`-style product of arbitrary elements.
    pub fn eval_product(
        &self,
        op: &str,
        x: &LambdaElement,
        y: &LambdaElement,
        v: LamVar,
    ) -> Result<LambdaElement> {
        self.table(op)?.eval_product(x, y, v)
    }

    pub fn nth_product(&self, op: &str, i: usize, j: usize, n: u16) -> Result<LambdaElement> {
        Ok(self.table(op)?.nth_product(i, j, n))
    }

    /// Residuals `D(eᵢ∘eⱼ) − D(eᵢ)∘eⱼ − eᵢ∘D(eⱼ)` that do not vanish, labelled
    /// by generator pair.
    pub fn is_derivation(
        &self,
        op: &str,
        d: &Endomorphism,
    ) -> Result<Vec<((String, String), LambdaElement)>> {
        let t = self.table(op)?;
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let ei = self.basis(i);
                let ej = self.basis(j);
                let lhs = d.apply(t.entry(i, j))?;
                let r1 = t.eval_product(&d.apply(&ei)?, &ej, TABLE_VAR)?;
                let r2 = t.eval_product(&ei, &d.apply(&ej)?, TABLE_VAR)?;
                let res = &(&lhs - &r1) - &r2;
                if !res.is_zero() {
                    out.push((
                        (self.generators[i].clone(), self.generators[j].clone()),
                        res,
                    ));
                }
            }
        }
        Ok(out)
    }

    /// Replaces parameters by rationals in every table.
    pub fn evaluate_params(&self, bindings: &BTreeMap<Param, crate::Rational>) -> Result<Self> {
        let mut out = self.clone();
        for t in out.tables.values_mut() {
            let sym = t.symmetry;
            *t = t.try_map(|p| p.evaluate_params(bindings))?;
            t.symmetry = sym;
        }
        out.params
            .retain(|d| !bindings.contains_key(&Param::intern(&d.name)));
        Ok(out)
    }
}

fn check_coefficient(
    c: &ParamField,
    declared: &BTreeSet<Param>,
    nonzero: &BTreeSet<Param>,
    key: &str,
) -> Result<()> {
    for p in c.params() {
        if !declared.contains(&p) {
            return Err(Error::UnknownVariable(p.name().to_string()));
        }
    }
    let den = c.denom();
    if den.len() != 1
        || den
            .terms()
            .any(|(m, _)| m.vars().any(|(p, _)| !nonzero.contains(&p)))
    {
        if !c.is_polynomial() {
            return Err(Error::Invalid(format!(
                "coefficient {c} in table `{key}` divides by something not declared nonzero"
            )));
        }
    }
    Ok(())
}

/// Shorthand for an element `Σ coeffs[i]·eᵢ`.
pub fn elem(coeffs: Vec<Poly>) -> LambdaElement {
    LambdaElement(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn vir() -> StructureTable {
        StructureTable::new(1, vec![elem(vec![parse_poly("d + 2*x").unwrap()])]).unwrap()
    }

    #[test]
    fn sesquilinearity_on_generators() {
        let t = vir();
        let l = LambdaElement::basis(1, 0);
        let x = LamVar::Lam(0);
        let left = t.eval_product(&l.del(), &l, x).unwrap();
        assert_eq!(left.0[0], parse_poly("-x*(d + 2*x)").unwrap());
        let right = t.eval_product(&l, &l.del(), x).unwrap();
        assert_eq!(right.0[0], parse_poly("(d + x)*(d + 2*x)").unwrap());
    }

    #[test]
    fn capture_is_rejected() {
        let t = vir();
        let l = LambdaElement::basis(1, 0).scale(&Poly::lam(0));
        assert!(matches!(
            t.eval_product(&l, &l, LamVar::Lam(0)),
            Err(Error::VariableCapture(_))
        ));
    }

    #[test]
    fn skew_symmetry_tag() {
        let names = vec!["L".to_string()];
        assert!(vir()
            .with_symmetry(Symmetry::Skew, &names, "bracket")
            .is_ok());
        assert!(vir()
            .with_symmetry(Symmetry::Commutative, &names, "bracket")
            .is_err());
    }

    #[test]
    fn nth_products() {
        let t = vir();
        assert_eq!(t.nth_product(0, 0, 1).0[0], Poly::int(2));
        assert_eq!(t.nth_product(0, 0, 0).0[0], Poly::del());
        assert!(t.nth_product(0, 0, 3).is_zero());
    }

    #[test]
    fn printing() {
        let names = vec!["L".to_string(), "M".to_string()];
        let e = elem(vec![
            parse_poly("d + 2*x").unwrap(),
            parse_poly("-c").unwrap(),
        ]);
        assert_eq!(e.display(&names).to_string(), "(d + 2*x)*L - c*M");
        let e = elem(vec![Poly::zero(), parse_poly("-1").unwrap()]);
        assert_eq!(e.display(&names).to_string(), "-M");
    }
}
