//! Residual-based law checkers.
//!
//! Every law is checked on all tuples of generators: both sides are expanded
//! with [`StructureTable::product_at`] and their difference must be the zero
//! element identically in the parameters.

use serde::Serialize;

use crate::conformal::{
    swap_target, ConformalAlgebra, Endomorphism, LambdaElement, StructureTable,
};
use crate::error::Result;
use crate::polyring::{LamVar, Poly};

/// One law instance: the law, the generator tuple and its residual.
#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: String,
    pub tuple: Vec<String>,
    pub residual: String,
    pub pass: bool,
    #[serde(skip)]
    pub value: LambdaElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    /// Set when a precondition failed and the laws were not evaluated.
    pub vacuous: bool,
    pub laws: Vec<LawResult>,
}

impl CheckReport {
    pub fn new(suite: &str) -> Self {
        CheckReport {
            suite: suite.to_string(),
            pass: true,
            vacuous: false,
            laws: Vec::new(),
        }
    }

    pub fn vacuous(suite: &str) -> Self {
        CheckReport {
            vacuous: true,
            ..Self::new(suite)
        }
    }

    pub fn push(&mut self, law: &str, tuple: Vec<String>, value: LambdaElement, names: &[String]) {
        let pass = value.is_zero();
        self.pass &= pass;
        self.laws.push(LawResult {
            law: law.to_string(),
            tuple,
            residual: value.display(names).to_string(),
            pass,
            value,
        });
    }

    /// Appends the instances of another report.
    pub fn absorb(&mut self, other: CheckReport) {
        self.pass &= other.pass;
        self.laws.extend(other.laws);
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.laws.iter().filter(|l| !l.pass)
    }

    /// Whether every instance of `law` passed (true if there are none).
    pub fn law_passes(&self, law: &str) -> bool {
        self.laws.iter().filter(|l| l.law == law).all(|l| l.pass)
    }
}

pub(crate) fn lam() -> Poly {
    Poly::lam(0)
}
pub(crate) fn mu() -> Poly {
    Poly::lam(1)
}
pub(crate) fn gamma() -> Poly {
    Poly::lam(2)
}
pub(crate) fn del() -> Poly {
    Poly::del()
}

/// Runs `law` on every `arity`-tuple of generators.
pub(crate) fn run_law(
    report: &mut CheckReport,
    alg: &ConformalAlgebra,
    law: &str,
    arity: usize,
    mut f: impl FnMut(&[LambdaElement]) -> Result<LambdaElement>,
) -> Result<()> {
    let rank = alg.rank();
    let names = alg.generators();
    let mut idx = vec![0usize; arity];
    loop {
        let elems: Vec<LambdaElement> = idx.iter().map(|&i| alg.basis(i)).collect();
        let res = f(&elems)?;
        report.push(
            law,
            idx.iter().map(|&i| names[i].clone()).collect(),
            res,
            names,
        );
        // odometer increment, last position fastest
        let mut k = arity;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < rank {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Product shorthand with a polynomial index.
pub(crate) fn p(
    t: &StructureTable,
    x: &LambdaElement,
    y: &LambdaElement,
    at: &Poly,
) -> Result<LambdaElement> {
    t.product_at(x, y, at)
}

fn two(x: &LambdaElement) -> LambdaElement {
    x.scale(&Poly::int(2))
}

pub fn associativity_residual(
    t: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = p(t, a, &p(t, b, c, &mu())?, &lam())?;
    let rhs = p(t, &p(t, a, b, &lam())?, c, &(lam() + mu()))?;
    Ok(lhs - rhs)
}

pub fn commutativity_residual(
    t: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
) -> Result<LambdaElement> {
    Ok(p(t, a, b, &lam())? - p(t, b, a, &swap_target(LamVar::Lam(0)))?)
}

pub fn skew_residual(
    t: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
) -> Result<LambdaElement> {
    Ok(p(t, a, b, &lam())? + p(t, b, a, &swap_target(LamVar::Lam(0)))?)
}

pub fn jacobi_residual(
    t: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = p(t, a, &p(t, b, c, &mu())?, &lam())?;
    let r1 = p(t, &p(t, a, b, &lam())?, c, &(lam() + mu()))?;
    let r2 = p(t, b, &p(t, a, c, &lam())?, &mu())?;
    Ok(lhs - r1 - r2)
}

/// The law of a product that is one-sided in `op1` and `op2`:
/// `[a_λ(b∘_μ c)] − [a_λ b]∘_{λ+μ} c − b∘_μ[a_λ c]` with `op1 = [·]`, `op2 = ∘`.
fn derivation_like(
    outer: &StructureTable,
    inner: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = p(outer, a, &p(inner, b, c, &mu())?, &lam())?;
    let r1 = p(inner, &p(outer, a, b, &lam())?, c, &(lam() + mu()))?;
    let r2 = p(inner, b, &p(outer, a, c, &lam())?, &mu())?;
    Ok(lhs - r1 - r2)
}

/// `2(a∘_λ[b_μ c]) − [(a∘_λ b)_{λ+μ} c] − [b_μ(a∘_λ c)]`
pub fn transposed_leibniz_residual(
    circ: &StructureTable,
    br: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = two(&p(circ, a, &p(br, b, c, &mu())?, &lam())?);
    let r1 = p(br, &p(circ, a, b, &lam())?, c, &(lam() + mu()))?;
    let r2 = p(br, b, &p(circ, a, c, &lam())?, &mu())?;
    Ok(lhs - r1 - r2)
}

fn tl_alt_residual(
    circ: &StructureTable,
    br: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let ml = mu() - lam();
    let lhs = two(&p(circ, &p(br, a, b, &lam())?, c, &mu())?);
    let r1 = p(br, a, &p(circ, b, c, &ml)?, &lam())?;
    let r2 = p(br, b, &p(circ, a, c, &lam())?, &ml)?;
    Ok(lhs - r1 + r2)
}

fn leibniz_alt_residual(
    circ: &StructureTable,
    br: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let ml = mu() - lam();
    let lhs = p(br, &p(circ, a, b, &lam())?, c, &mu())?;
    let r1 = p(circ, b, &p(br, a, c, &lam())?, &ml)?;
    let r2 = p(circ, a, &p(br, b, c, &ml)?, &lam())?;
    Ok(lhs - r1 - r2)
}

fn left_symmetry_residual(
    s: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lm = lam() + mu();
    let l1 = p(s, &p(s, a, b, &lam())?, c, &lm)?;
    let l2 = p(s, a, &p(s, b, c, &mu())?, &lam())?;
    let r1 = p(s, &p(s, b, a, &mu())?, c, &lm)?;
    let r2 = p(s, b, &p(s, a, c, &lam())?, &mu())?;
    Ok(l1 - l2 - r1 + r2)
}

fn right_commutativity_residual(
    s: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = p(s, &p(s, a, b, &lam())?, c, &(lam() + mu()))?;
    let rhs = p(s, &p(s, a, c, &lam())?, b, &swap_target(LamVar::Lam(1)))?;
    Ok(lhs - rhs)
}

/// `(a∘_λ b)∗_{λ+μ} c − a∘_λ(b∗_μ c)`
fn np_compat_residual(
    circ: &StructureTable,
    star: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lhs = p(star, &p(circ, a, b, &lam())?, c, &(lam() + mu()))?;
    let rhs = p(circ, a, &p(star, b, c, &mu())?, &lam())?;
    Ok(lhs - rhs)
}

/// `(a∗_λ b)∘_{λ+μ} c − a∗_λ(b∘_μ c) − (b∗_μ a)∘_{λ+μ} c + b∗_μ(a∘_λ c)`
fn np_mixed_residual(
    circ: &StructureTable,
    star: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<LambdaElement> {
    let lm = lam() + mu();
    let l1 = p(circ, &p(star, a, b, &lam())?, c, &lm)?;
    let l2 = p(star, a, &p(circ, b, c, &mu())?, &lam())?;
    let r1 = p(circ, &p(star, b, a, &mu())?, c, &lm)?;
    let r2 = p(star, b, &p(circ, a, c, &lam())?, &mu())?;
    Ok(l1 - l2 - r1 + r2)
}

/// Shifted-index identities of an associative product `∘` against a second
/// product `op` (which is `∘` itself for the plain associative case).
fn shifted_residuals(
    circ: &StructureTable,
    op: &StructureTable,
    a: &LambdaElement,
    b: &LambdaElement,
    c: &LambdaElement,
) -> Result<[LambdaElement; 3]> {
    let sl = swap_target(LamVar::Lam(0));
    let sm = swap_target(LamVar::Lam(1));
    // −∂ + μ − λ
    let smix = &(mu() - lam()) - &del();
    let r1 = p(circ, a, &p(op, b, c, &sm)?, &lam())? - p(op, &p(circ, a, b, &lam())?, c, &sm)?;
    let r2 = p(circ, a, &p(op, b, c, &mu())?, &sl)? - p(op, &p(circ, a, b, &sm)?, c, &smix)?;
    let r3 = p(circ, a, &p(op, b, c, &sm)?, &sl)? - p(op, &p(circ, a, b, &smix)?, c, &sm)?;
    Ok([r1, r2, r3])
}

fn run3(
    report: &mut CheckReport,
    alg: &ConformalAlgebra,
    law: &str,
    f: impl Fn(&LambdaElement, &LambdaElement, &LambdaElement) -> Result<LambdaElement>,
) -> Result<()> {
    run_law(report, alg, law, 3, |e| f(&e[0], &e[1], &e[2]))
}

pub fn check_associative(alg: &ConformalAlgebra, op: &str) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("assoc");
    run3(&mut r, alg, "associativity", |a, b, c| {
        associativity_residual(t, a, b, c)
    })?;
    Ok(r)
}

pub fn check_commutative(alg: &ConformalAlgebra, op: &str) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("comm");
    run_law(&mut r, alg, "commutativity", 2, |e| {
        commutativity_residual(t, &e[0], &e[1])
    })?;
    Ok(r)
}

fn sesquilinearity(r: &mut CheckReport, alg: &ConformalAlgebra, t: &StructureTable) -> Result<()> {
    run_law(r, alg, "sesquilinearity", 2, |e| {
        let base = p(t, &e[0], &e[1], &lam())?;
        let left = p(t, &e[0].del(), &e[1], &lam())? + base.scale(&lam());
        let right = p(t, &e[0], &e[1].del(), &lam())? - base.scale(&(del() + lam()));
        Ok(left + right.scale(&mu()))
    })
}

/// Sesquilinearity, skew-symmetry and the Jacobi identity.
pub fn check_lie(alg: &ConformalAlgebra, op: &str) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("lie");
    sesquilinearity(&mut r, alg, t)?;
    run_law(&mut r, alg, "skew-symmetry", 2, |e| {
        skew_residual(t, &e[0], &e[1])
    })?;
    run3(&mut r, alg, "jacobi", |a, b, c| jacobi_residual(t, a, b, c))?;
    Ok(r)
}

/// Skew-symmetry and the Jacobi identity twisted by `alpha`.
pub fn check_hom_lie(
    alg: &ConformalAlgebra,
    op: &str,
    alpha: &Endomorphism,
) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("hom-lie");
    run_law(&mut r, alg, "skew-symmetry", 2, |e| {
        skew_residual(t, &e[0], &e[1])
    })?;
    run3(&mut r, alg, "hom-jacobi", |a, b, c| {
        let lhs = p(t, &alpha.apply(a)?, &p(t, b, c, &mu())?, &lam())?;
        let r1 = p(t, &p(t, a, b, &lam())?, &alpha.apply(c)?, &(lam() + mu()))?;
        let r2 = p(t, &alpha.apply(b)?, &p(t, a, c, &lam())?, &mu())?;
        Ok(lhs - r1 - r2)
    })?;
    Ok(r)
}

pub fn check_left_symmetric(alg: &ConformalAlgebra, op: &str) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("left-symmetric");
    run3(&mut r, alg, "left-symmetry", |a, b, c| {
        left_symmetry_residual(t, a, b, c)
    })?;
    Ok(r)
}

/// Left-symmetry plus right commutativity.
pub fn check_novikov(alg: &ConformalAlgebra, op: &str) -> Result<CheckReport> {
    let t = alg.table(op)?;
    let mut r = CheckReport::new("novikov");
    run3(&mut r, alg, "left-symmetry", |a, b, c| {
        left_symmetry_residual(t, a, b, c)
    })?;
    run3(&mut r, alg, "right-commutativity", |a, b, c| {
        right_commutativity_residual(t, a, b, c)
    })?;
    Ok(r)
}

/// The conformal Leibniz rule in both of its forms.
pub fn check_poisson_leibniz(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let b = alg.table(bracket)?;
    let mut r = CheckReport::new("poisson-leibniz");
    run3(&mut r, alg, "leibniz", |x, y, z| {
        derivation_like(b, c, x, y, z)
    })?;
    run3(&mut r, alg, "leibniz-alt", |x, y, z| {
        leibniz_alt_residual(c, b, x, y, z)
    })?;
    Ok(r)
}

/// The transposed Leibniz rule `2(a∘_λ[b_μ c]) = [(a∘_λ b)_{λ+μ} c] + [b_μ(a∘_λ c)]`.
pub fn check_transposed_leibniz(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let b = alg.table(bracket)?;
    let mut r = CheckReport::new("transposed-leibniz");
    run3(&mut r, alg, "transposed-leibniz", |x, y, z| {
        transposed_leibniz_residual(c, b, x, y, z)
    })?;
    Ok(r)
}

/// The bracket-first form `2([a_λ b]∘_μ c) = [a_λ(b∘_{μ−λ} c)] − [b_{μ−λ}(a∘_λ c)]`.
pub fn check_transposed_leibniz_alt(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let b = alg.table(bracket)?;
    let mut r = CheckReport::new("transposed-leibniz-alt");
    run3(&mut r, alg, "transposed-leibniz-alt", |x, y, z| {
        tl_alt_residual(c, b, x, y, z)
    })?;
    Ok(r)
}

/// Compatibility of a commutative associative `circ` with `star` in a
/// Novikov-Poisson algebra, plus the three shifted-index consequences.
pub fn check_np_conditions(alg: &ConformalAlgebra, circ: &str, star: &str) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let s = alg.table(star)?;
    let mut r = CheckReport::new("np-conditions");
    run3(&mut r, alg, "np-compat", |x, y, z| {
        np_compat_residual(c, s, x, y, z)
    })?;
    run3(&mut r, alg, "np-mixed", |x, y, z| {
        np_mixed_residual(c, s, x, y, z)
    })?;
    shifted_laws(&mut r, alg, c, s, "shifted-np")?;
    Ok(r)
}

/// `a∗_λ(b∘_μ c) = (a∗_λ b)∘_{λ+μ} c + b∘_μ(a∗_λ c)`.
pub fn check_prelie_commutative(
    alg: &ConformalAlgebra,
    circ: &str,
    star: &str,
) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let s = alg.table(star)?;
    let mut r = CheckReport::new("prelie-commutative");
    run3(&mut r, alg, "prelie-commutative", |x, y, z| {
        derivation_like(s, c, x, y, z)
    })?;
    Ok(r)
}

/// The two compatibility conditions shared by pre-Lie Poisson and
/// Novikov-Poisson algebras.
pub fn check_prelie_poisson(alg: &ConformalAlgebra, circ: &str, star: &str) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let s = alg.table(star)?;
    let mut r = CheckReport::new("prelie-poisson");
    run3(&mut r, alg, "np-compat", |x, y, z| {
        np_compat_residual(c, s, x, y, z)
    })?;
    run3(&mut r, alg, "np-mixed", |x, y, z| {
        np_mixed_residual(c, s, x, y, z)
    })?;
    Ok(r)
}

/// The compatibility conditions of a differential Novikov-Poisson algebra.
pub fn check_diff_np(alg: &ConformalAlgebra, circ: &str, star: &str) -> Result<CheckReport> {
    let mut r = check_prelie_poisson(alg, circ, star)?;
    r.suite = "diff-np".into();
    r.absorb(check_prelie_commutative(alg, circ, star)?);
    Ok(r)
}

fn shifted_laws(
    r: &mut CheckReport,
    alg: &ConformalAlgebra,
    c: &StructureTable,
    op: &StructureTable,
    prefix: &str,
) -> Result<()> {
    for k in 0..3 {
        let law = format!("{prefix}-{}", k + 1);
        run3(r, alg, &law, |x, y, z| {
            Ok(shifted_residuals(c, op, x, y, z)?[k].clone())
        })?;
    }
    Ok(())
}

/// Shifted-index forms of associativity, and the swap identity
/// `a∘_λ(b∘_μ c) = b∘_μ(a∘_λ c)` of commutative associative products.
pub fn check_assoc_remarks(alg: &ConformalAlgebra, circ: &str) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let mut r = CheckReport::new("assoc-remarks");
    shifted_laws(&mut r, alg, c, c, "shifted-assoc")?;
    run3(&mut r, alg, "swap-assoc", |a, b, x| {
        Ok(p(c, a, &p(c, b, x, &mu())?, &lam())? - p(c, b, &p(c, a, x, &lam())?, &mu())?)
    })?;
    Ok(r)
}

fn combine(suite: &str, parts: Vec<CheckReport>) -> CheckReport {
    let mut r = CheckReport::new(suite);
    for part in parts {
        r.absorb(part);
    }
    r
}

/// Commutative associative `circ`, Lie `bracket`, transposed Leibniz rule.
pub fn check_tpca(alg: &ConformalAlgebra, circ: &str, bracket: &str) -> Result<CheckReport> {
    Ok(combine(
        "tpca",
        vec![
            check_associative(alg, circ)?,
            check_commutative(alg, circ)?,
            check_lie(alg, bracket)?,
            check_transposed_leibniz(alg, circ, bracket)?,
        ],
    ))
}

/// As [`check_tpca`] without commutativity of `circ`.
pub fn check_nc_tpca(alg: &ConformalAlgebra, circ: &str, bracket: &str) -> Result<CheckReport> {
    Ok(combine(
        "nc-tpca",
        vec![
            check_associative(alg, circ)?,
            check_lie(alg, bracket)?,
            check_transposed_leibniz(alg, circ, bracket)?,
        ],
    ))
}

/// Commutative associative `circ`, Lie `bracket`, Leibniz rule.
pub fn check_pca(alg: &ConformalAlgebra, circ: &str, bracket: &str) -> Result<CheckReport> {
    Ok(combine(
        "pca",
        vec![
            check_associative(alg, circ)?,
            check_commutative(alg, circ)?,
            check_lie(alg, bracket)?,
            check_poisson_leibniz(alg, circ, bracket)?,
        ],
    ))
}

fn comm_assoc(alg: &ConformalAlgebra, circ: &str) -> Result<Vec<CheckReport>> {
    Ok(vec![
        check_associative(alg, circ)?,
        check_commutative(alg, circ)?,
    ])
}

/// Full Novikov-Poisson structure.
pub fn check_np(alg: &ConformalAlgebra, circ: &str, star: &str) -> Result<CheckReport> {
    let mut parts = comm_assoc(alg, circ)?;
    parts.push(check_novikov(alg, star)?);
    parts.push(check_np_conditions(alg, circ, star)?);
    Ok(combine("np", parts))
}

/// Full pre-Lie commutative structure.
pub fn check_prelie_commutative_algebra(
    alg: &ConformalAlgebra,
    circ: &str,
    star: &str,
) -> Result<CheckReport> {
    let mut parts = comm_assoc(alg, circ)?;
    parts.push(check_left_symmetric(alg, star)?);
    parts.push(check_prelie_commutative(alg, circ, star)?);
    Ok(combine("prelie-commutative-algebra", parts))
}

/// Full pre-Lie Poisson structure.
pub fn check_prelie_poisson_algebra(
    alg: &ConformalAlgebra,
    circ: &str,
    star: &str,
) -> Result<CheckReport> {
    let mut parts = comm_assoc(alg, circ)?;
    parts.push(check_left_symmetric(alg, star)?);
    parts.push(check_prelie_poisson(alg, circ, star)?);
    Ok(combine("prelie-poisson-algebra", parts))
}

/// Full differential Novikov-Poisson structure.
pub fn check_diff_np_algebra(
    alg: &ConformalAlgebra,
    circ: &str,
    star: &str,
) -> Result<CheckReport> {
    let mut parts = comm_assoc(alg, circ)?;
    parts.push(check_novikov(alg, star)?);
    parts.push(check_diff_np(alg, circ, star)?);
    Ok(combine("diff-np-algebra", parts))
}
