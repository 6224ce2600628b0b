//! Identities derived from the transposed Leibniz rule, its n-th product
//! form, and the criterion for a structure to be Poisson and transposed
//! Poisson at once.

use serde::Serialize;

use crate::axioms::{
    check_nc_tpca, check_poisson_leibniz, check_tpca, check_transposed_leibniz, del, gamma, lam,
    mu, p, run_law, CheckReport,
};
use crate::conformal::{ConformalAlgebra, LambdaElement, StructureTable};
use crate::error::Result;
use crate::polyring::scalar::{binomial, factorial};
use crate::polyring::{LamVar, Poly};

type E = LambdaElement;

struct Ops<'a> {
    c: &'a StructureTable,
    b: &'a StructureTable,
}

impl Ops<'_> {
    fn circ(&self, x: &E, y: &E, at: &Poly) -> Result<E> {
        p(self.c, x, y, at)
    }
    fn br(&self, x: &E, y: &E, at: &Poly) -> Result<E> {
        p(self.b, x, y, at)
    }
}

fn neg_d() -> Poly {
    -del()
}

/// `x∘_λ[y_μ z] + y∘_μ[z_{−∂−λ} x] + z∘_{−∂−λ−μ}[x_λ y]`
fn cyclic_circ(o: &Ops, e: &[E]) -> Result<E> {
    let (x, y, z) = (&e[0], &e[1], &e[2]);
    let t1 = o.circ(x, &o.br(y, z, &mu())?, &lam())?;
    let t2 = o.circ(y, &o.br(z, x, &(neg_d() - lam()))?, &mu())?;
    let t3 = o.circ(z, &o.br(x, y, &lam())?, &(neg_d() - lam() - mu()))?;
    Ok(t1 + t2 + t3)
}

/// `[x_λ y]∘_μ z + [y_{μ−λ} z]∘_{−∂−λ} x + [z_{−∂−λ} x]∘_{−∂−μ+λ} y`
fn cyclic_bracket_outside(o: &Ops, e: &[E]) -> Result<E> {
    let (x, y, z) = (&e[0], &e[1], &e[2]);
    let t1 = o.circ(&o.br(x, y, &lam())?, z, &mu())?;
    let t2 = o.circ(&o.br(y, z, &(mu() - lam()))?, x, &(neg_d() - lam()))?;
    let t3 = o.circ(
        &o.br(z, x, &(neg_d() - lam()))?,
        y,
        &(neg_d() - mu() + lam()),
    )?;
    Ok(t1 + t2 + t3)
}

/// `[(h∘_λ[x_γ y])_{λ+μ} z] + [(h∘_λ[y_{μ−γ} z])_{−∂−γ} x] + [(h∘_λ[z_{−∂−γ} x])_{−∂−μ+γ} y]`
fn cyclic_h_inner(o: &Ops, e: &[E]) -> Result<E> {
    let (h, x, y, z) = (&e[0], &e[1], &e[2], &e[3]);
    let t1 = o.br(
        &o.circ(h, &o.br(x, y, &gamma())?, &lam())?,
        z,
        &(lam() + mu()),
    )?;
    let t2 = o.br(
        &o.circ(h, &o.br(y, z, &(mu() - gamma()))?, &lam())?,
        x,
        &(neg_d() - gamma()),
    )?;
    let t3 = o.br(
        &o.circ(h, &o.br(z, x, &(neg_d() - gamma()))?, &lam())?,
        y,
        &(neg_d() - mu() + gamma()),
    )?;
    Ok(t1 + t2 + t3)
}

/// `[[x_γ y]_μ(h∘_λ z)] + [[y_{μ−γ} z]_{−∂−λ−γ}(h∘_λ x)] + [[z_{−∂−γ} x]_{−∂−λ−μ+γ}(h∘_λ y)]`
fn cyclic_h_outer(o: &Ops, e: &[E]) -> Result<E> {
    let (h, x, y, z) = (&e[0], &e[1], &e[2], &e[3]);
    let t1 = o.br(&o.br(x, y, &gamma())?, &o.circ(h, z, &lam())?, &mu())?;
    let t2 = o.br(
        &o.br(y, z, &(mu() - gamma()))?,
        &o.circ(h, x, &lam())?,
        &(neg_d() - lam() - gamma()),
    )?;
    let t3 = o.br(
        &o.br(z, x, &(neg_d() - gamma()))?,
        &o.circ(h, y, &lam())?,
        &(neg_d() - lam() - mu() + gamma()),
    )?;
    Ok(t1 + t2 + t3)
}

/// `[h_λ x]∘_{λ+γ}[y_{μ−γ} z] + [h_λ y]∘_{λ+μ−γ}[z_{−∂−γ} x] + [h_λ z]∘_{−∂−μ}[x_γ y]`
fn mixed_h(o: &Ops, e: &[E]) -> Result<E> {
    let (h, x, y, z) = (&e[0], &e[1], &e[2], &e[3]);
    let t1 = o.circ(
        &o.br(h, x, &lam())?,
        &o.br(y, z, &(mu() - gamma()))?,
        &(lam() + gamma()),
    )?;
    let t2 = o.circ(
        &o.br(h, y, &lam())?,
        &o.br(z, x, &(neg_d() - gamma()))?,
        &(lam() + mu() - gamma()),
    )?;
    let t3 = o.circ(
        &o.br(h, z, &lam())?,
        &o.br(x, y, &gamma())?,
        &(neg_d() - mu()),
    )?;
    Ok(t1 + t2 + t3)
}

/// `[(u∘_λ x)_μ(v∘_γ y)] + [(v∘_γ x)_{γ+μ−λ}(u∘_λ y)] − 2(u∘_λ v)∘_{λ+γ}[x_{μ−λ} y]`
fn six_term_1(o: &Ops, e: &[E]) -> Result<E> {
    let (u, v, x, y) = (&e[0], &e[1], &e[2], &e[3]);
    let t1 = o.br(&o.circ(u, x, &lam())?, &o.circ(v, y, &gamma())?, &mu())?;
    let t2 = o.br(
        &o.circ(v, x, &gamma())?,
        &o.circ(u, y, &lam())?,
        &(gamma() + mu() - lam()),
    )?;
    let t3 = o.circ(
        &o.circ(u, v, &lam())?,
        &o.br(x, y, &(mu() - lam()))?,
        &(lam() + gamma()),
    )?;
    Ok(t1 + t2 - t3.scale(&Poly::int(2)))
}

/// `x∘_{μ−λ}[u_λ(v∘_γ y)] + [(v∘_γ x)_{γ+μ−λ} u]∘_{γ+μ} y − (u∘_λ v)∘_{λ+γ}[x_{μ−λ} y]`
fn six_term_2(o: &Ops, e: &[E]) -> Result<E> {
    let (u, v, x, y) = (&e[0], &e[1], &e[2], &e[3]);
    let t1 = o.circ(
        x,
        &o.br(u, &o.circ(v, y, &gamma())?, &lam())?,
        &(mu() - lam()),
    )?;
    let t2 = o.circ(
        &o.br(&o.circ(v, x, &gamma())?, u, &(gamma() + mu() - lam()))?,
        y,
        &(gamma() + mu()),
    )?;
    let t3 = o.circ(
        &o.circ(u, v, &lam())?,
        &o.br(x, y, &(mu() - lam()))?,
        &(lam() + gamma()),
    )?;
    Ok(t1 + t2 - t3)
}

type IdentityFn = fn(&Ops, &[E]) -> Result<E>;

/// Name, arity, residual, and whether the identity needs a commutative `circ`.
const IDENTITIES: [(&str, usize, IdentityFn, bool); 7] = [
    ("cyclic-circ", 3, cyclic_circ, true),
    ("cyclic-bracket-outside", 3, cyclic_bracket_outside, true),
    ("cyclic-h-inner", 4, cyclic_h_inner, false),
    ("cyclic-h-outer", 4, cyclic_h_outer, false),
    ("mixed-h", 4, mixed_h, true),
    ("six-term-1", 4, six_term_1, true),
    ("six-term-2", 4, six_term_2, true),
];

/// Residuals of the derived identities without checking any hypothesis.
/// With `only_noncommutative`, restricts to the identities whose derivation
/// does not use commutativity of `circ`.
pub fn identity_residuals(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
    only_noncommutative: bool,
) -> Result<CheckReport> {
    let o = Ops {
        c: alg.table(circ)?,
        b: alg.table(bracket)?,
    };
    let mut r = CheckReport::new("identities");
    for (name, arity, f, needs_comm) in IDENTITIES {
        if only_noncommutative && needs_comm {
            continue;
        }
        run_law(&mut r, alg, name, arity, |e| f(&o, e))?;
    }
    Ok(r)
}

/// The seven derived identities, evaluated only if the algebra passes the
/// TPCA suite; otherwise the report is vacuous.
pub fn check_theorem_identities(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CheckReport> {
    if !check_tpca(alg, circ, bracket)?.pass {
        return Ok(CheckReport::vacuous("identities"));
    }
    identity_residuals(alg, circ, bracket, false)
}

/// The identities that survive without commutativity, under the
/// noncommutative TPCA precondition.
pub fn check_identities_noncommutative(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CheckReport> {
    if !check_nc_tpca(alg, circ, bracket)?.pass {
        return Ok(CheckReport::vacuous("nc-identities"));
    }
    let mut r = identity_residuals(alg, circ, bracket, true)?;
    r.suite = "nc-identities".into();
    Ok(r)
}

/// `x_(n) y` for λ-free elements: `n!` times the `λⁿ` coefficient.
pub fn nth_of(t: &StructureTable, x: &E, y: &E, n: u16) -> Result<E> {
    let v = LamVar::Lam(0);
    let prod = t.eval_product(x, y, v)?;
    let f = Poly::rational(factorial(n as u32));
    Ok(prod.map(|c| &c.coefficient_of(v, n) * &f))
}

/// `2(a_(n)(b_[m] c)) = Σ_j C(n,j)(a_(j) b)_[n+m−j] c + b_[m](a_(n) c)` for
/// all `n, m ≤ bound`.
pub fn check_nth_transposed_leibniz(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
    bound: u16,
) -> Result<CheckReport> {
    let c = alg.table(circ)?;
    let b = alg.table(bracket)?;
    let mut r = CheckReport::new("nth-transposed-leibniz");
    for n in 0..=bound {
        for m in 0..=bound {
            let law = format!("nth-transposed-leibniz(n={n},m={m})");
            run_law(&mut r, alg, &law, 3, |e| {
                let (x, y, z) = (&e[0], &e[1], &e[2]);
                let lhs = nth_of(c, x, &nth_of(b, y, z, m)?, n)?.scale(&Poly::int(2));
                let mut rhs = nth_of(b, y, &nth_of(c, x, z, n)?, m)?;
                for j in 0..=n {
                    let coef = Poly::rational(binomial(n as u32, j as u32));
                    let inner = nth_of(c, x, y, j)?;
                    rhs = rhs + nth_of(b, &inner, z, n + m - j)?.scale(&coef);
                }
                Ok(lhs - rhs)
            })?;
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityReport {
    /// Both Leibniz rule and transposed Leibniz rule hold.
    pub both_hold: bool,
    /// The three families of mixed triple products vanish.
    pub triple_products_vanish: bool,
    pub agreement: bool,
}

/// Checks that both Leibniz rules hold exactly when
/// `a∘_λ[b_μ c]`, `[b_{μ−λ} a]∘_μ c` and `[(a∘_λ b)_{λ+μ} c]` all vanish.
pub fn check_compatibility_criterion(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
) -> Result<CompatibilityReport> {
    let both_hold = check_poisson_leibniz(alg, circ, bracket)?.pass
        && check_transposed_leibniz(alg, circ, bracket)?.pass;
    let o = Ops {
        c: alg.table(circ)?,
        b: alg.table(bracket)?,
    };
    let mut r = CheckReport::new("triple-products");
    run_law(&mut r, alg, "circ-of-bracket", 3, |e| {
        o.circ(&e[0], &o.br(&e[1], &e[2], &mu())?, &lam())
    })?;
    run_law(&mut r, alg, "bracket-then-circ", 3, |e| {
        o.circ(&o.br(&e[1], &e[0], &(mu() - lam()))?, &e[2], &mu())
    })?;
    run_law(&mut r, alg, "bracket-of-circ", 3, |e| {
        o.br(&o.circ(&e[0], &e[1], &lam())?, &e[2], &(lam() + mu()))
    })?;
    Ok(CompatibilityReport {
        both_hold,
        triple_products_vanish: r.pass,
        agreement: both_hold == r.pass,
    })
}
