//! Algebra-producing constructions: tensor products, direct sums, current
//! algebras, commutators, derivation-twisted products and basis changes.

use num_traits::{One, Zero};

use crate::axioms::check_tpca;
use crate::conformal::{ConformalAlgebra, Endomorphism, LambdaElement, StructureTable, Symmetry};
use crate::error::{Error, Result};
use crate::polyring::{LamVar, ParamField, Poly};

/// A finite-dimensional algebra with a product and a bracket given by
/// structure constants: `eᵢ∘eⱼ = Σₖ product[i][j][k] eₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryAlgebra {
    pub names: Vec<String>,
    pub product: Vec<Vec<Vec<ParamField>>>,
    pub bracket: Vec<Vec<Vec<ParamField>>>,
}

impl OrdinaryAlgebra {
    pub fn zero(names: Vec<String>) -> Self {
        let n = names.len();
        let z = vec![vec![vec![ParamField::zero(); n]; n]; n];
        OrdinaryAlgebra {
            names,
            product: z.clone(),
            bracket: z,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::Invalid(
                "ordinary algebra must have dimension at least 1".into(),
            ));
        }
        for t in [&self.product, &self.bracket] {
            let ok = t.len() == n
                && t.iter()
                    .all(|r| r.len() == n && r.iter().all(|c| c.len() == n));
            if !ok {
                return Err(Error::Invalid(
                    "structure constants do not match the dimension".into(),
                ));
            }
        }
        Ok(())
    }
}

fn table_from_constants(c: &[Vec<Vec<ParamField>>]) -> Result<StructureTable> {
    let n = c.len();
    StructureTable::from_fn(n, |i, j| {
        LambdaElement(
            c[i][j]
                .iter()
                .map(|k| Poly::from_field(k.clone()))
                .collect(),
        )
    })
}

/// The current conformal algebra `ℂ[∂]⊗A` with λ-independent products.
pub fn current(ord: &OrdinaryAlgebra) -> Result<ConformalAlgebra> {
    ord.check_shape()?;
    let mut alg = ConformalAlgebra::new(ord.names.clone());
    let circ = table_from_constants(&ord.product)?;
    let bracket = table_from_constants(&ord.bracket)?;
    for t in [&circ, &bracket] {
        for p in t.params() {
            alg.declare_param(&p.name(), false)?;
        }
    }
    alg.set_table("circ", circ)?;
    alg.set_table("bracket", bracket)?;
    Ok(alg)
}

fn merge_params(out: &mut ConformalAlgebra, a: &ConformalAlgebra) -> Result<()> {
    for d in a.params() {
        out.declare_param(&d.name, d.nonzero)?;
    }
    Ok(())
}

fn require(alg: &ConformalAlgebra, keys: &[&str]) -> Result<()> {
    for k in keys {
        alg.table(k)?;
    }
    Ok(())
}

/// Tensor product over `ℂ[∂]` of two TPCAs. The product is the coordinatewise
/// product of the factors' entries and the bracket is
/// `[a₁ λ b₁]⊗(a₂∘_λ b₂) + (a₁∘_λ b₁)⊗[a₂ λ b₂]`.
pub fn tensor(a1: &ConformalAlgebra, a2: &ConformalAlgebra) -> Result<ConformalAlgebra> {
    require(a1, &["circ", "bracket"])?;
    require(a2, &["circ", "bracket"])?;
    for (i, a) in [a1, a2].into_iter().enumerate() {
        if !check_tpca(a, "circ", "bracket")?.pass {
            return Err(Error::Precondition(format!(
                "tensor factor {} is not a TPCA",
                i + 1
            )));
        }
    }
    tensor_unchecked(a1, a2)
}

/// [`tensor`] without the TPCA precondition.
pub fn tensor_unchecked(a1: &ConformalAlgebra, a2: &ConformalAlgebra) -> Result<ConformalAlgebra> {
    let (r1, r2) = (a1.rank(), a2.rank());
    let names = a1
        .generators()
        .iter()
        .flat_map(|g| a2.generators().iter().map(move |h| format!("{g}_{h}")))
        .collect();
    let mut out = ConformalAlgebra::new(names);
    merge_params(&mut out, a1)?;
    merge_params(&mut out, a2)?;
    let (c1, b1) = (a1.table("circ")?, a1.table("bracket")?);
    let (c2, b2) = (a2.table("circ")?, a2.table("bracket")?);
    let outer = |x: &LambdaElement, y: &LambdaElement| -> LambdaElement {
        let mut v = LambdaElement::zero(r1 * r2);
        for (k1, p) in x.0.iter().enumerate() {
            for (k2, q) in y.0.iter().enumerate() {
                v.0[k1 * r2 + k2] = p * q;
            }
        }
        v
    };
    let split = |i: usize| (i / r2, i % r2);
    let circ = StructureTable::from_fn(r1 * r2, |i, j| {
        let ((i1, i2), (j1, j2)) = (split(i), split(j));
        outer(c1.entry(i1, j1), c2.entry(i2, j2))
    })?;
    let bracket = StructureTable::from_fn(r1 * r2, |i, j| {
        let ((i1, i2), (j1, j2)) = (split(i), split(j));
        outer(b1.entry(i1, j1), c2.entry(i2, j2)) + outer(c1.entry(i1, j1), b2.entry(i2, j2))
    })?;
    let comm = c1.symmetry() == Symmetry::Commutative && c2.symmetry() == Symmetry::Commutative;
    let skew = comm && b1.symmetry() == Symmetry::Skew && b2.symmetry() == Symmetry::Skew;
    out.set_table(
        "circ",
        if comm {
            circ.tagged(Symmetry::Commutative)
        } else {
            circ
        },
    )?;
    out.set_table(
        "bracket",
        if skew {
            bracket.tagged(Symmetry::Skew)
        } else {
            bracket
        },
    )?;
    Ok(out)
}

/// Direct sum with block-diagonal tables. Tables present in only one summand
/// are padded with zero. Clashing generator names get the suffixes `1`, `2`.
pub fn direct_sum(a1: &ConformalAlgebra, a2: &ConformalAlgebra) -> Result<ConformalAlgebra> {
    let clash = a1.generators().iter().any(|g| a2.generators().contains(g));
    let rename = |a: &ConformalAlgebra, s: &str| -> Vec<String> {
        a.generators()
            .iter()
            .map(|g| if clash { format!("{g}{s}") } else { g.clone() })
            .collect()
    };
    let mut names = rename(a1, "1");
    names.extend(rename(a2, "2"));
    let (r1, r2) = (a1.rank(), a2.rank());
    let n = r1 + r2;
    let mut out = ConformalAlgebra::new(names);
    merge_params(&mut out, a1)?;
    merge_params(&mut out, a2)?;
    let keys: std::collections::BTreeSet<&String> =
        a1.tables().keys().chain(a2.tables().keys()).collect();
    let zero1 = StructureTable::zero(r1);
    let zero2 = StructureTable::zero(r2);
    for key in keys {
        let t1 = a1.tables().get(key).unwrap_or(&zero1);
        let t2 = a2.tables().get(key).unwrap_or(&zero2);
        let t = StructureTable::from_fn(n, |i, j| {
            let mut v = LambdaElement::zero(n);
            if i < r1 && j < r1 {
                v.0[..r1].clone_from_slice(&t1.entry(i, j).0);
            } else if i >= r1 && j >= r1 {
                v.0[r1..].clone_from_slice(&t2.entry(i - r1, j - r1).0);
            }
            v
        })?;
        out.set_table(key, t)?;
    }
    Ok(out)
}

/// The bracket `[a λ b] = a∗_λ b − b∗_{−∂−λ} a`.
pub fn commutator(alg: &ConformalAlgebra, star: &str) -> Result<StructureTable> {
    let s = alg.table(star)?;
    let v = LamVar::Lam(0);
    let swap = crate::conformal::swap_target(v);
    let t = StructureTable::from_fn(alg.rank(), |i, j| {
        s.entry(i, j) - &s.entry(j, i).subst(v, &swap)
    })?;
    t.with_symmetry(Symmetry::Skew, alg.generators(), star)
}

/// The product `a∗_λ b = a∘_λ D(b)` for a derivation `D` of `circ`.
pub fn derivation_product(
    alg: &ConformalAlgebra,
    circ: &str,
    d: &Endomorphism,
) -> Result<StructureTable> {
    let bad = alg.is_derivation(circ, d)?;
    if let Some(((g, h), res)) = bad.first() {
        return Err(Error::NotDerivation(format!(
            "residual on ({g}, {h}) is {}",
            res.display(alg.generators())
        )));
    }
    let c = alg.table(circ)?;
    let mut entries = Vec::with_capacity(alg.rank() * alg.rank());
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            entries.push(c.eval_product(&alg.basis(i), &d.image(j), LamVar::Lam(0))?);
        }
    }
    StructureTable::new(alg.rank(), entries)
}

fn require_del_only(h: &LambdaElement) -> Result<()> {
    if h.lam_vars().iter().any(|v| *v != LamVar::Del) {
        return Err(Error::Invalid(
            "h must have coefficients in d and parameters only".into(),
        ));
    }
    Ok(())
}

/// `α_h(x) = (h∘_λ x)|_{λ=0}`.
pub fn alpha_h(alg: &ConformalAlgebra, circ: &str, h: &LambdaElement) -> Result<Endomorphism> {
    require_del_only(h)?;
    let c = alg.table(circ)?;
    let v = LamVar::Lam(0);
    let images = (0..alg.rank())
        .map(|j| Ok(c.eval_product(h, &alg.basis(j), v)?.subst(v, &Poly::zero())))
        .collect::<Result<Vec<_>>>()?;
    Endomorphism::from_images(&images)
}

/// `[x λ y]^h = (h∘_μ[x λ y])|_{μ=0}`.
pub fn h_bracket(
    alg: &ConformalAlgebra,
    circ: &str,
    bracket: &str,
    h: &LambdaElement,
) -> Result<StructureTable> {
    require_del_only(h)?;
    let c = alg.table(circ)?;
    let b = alg.table(bracket)?;
    let m = LamVar::Lam(1);
    let mut entries = Vec::with_capacity(b.entries().len());
    for e in b.entries() {
        entries.push(c.eval_product(h, e, m)?.subst(m, &Poly::zero()));
    }
    StructureTable::new(alg.rank(), entries)
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut out = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let term = &m[0][j] * &det(&minor(m, 0, j));
                if j % 2 == 0 {
                    out += &term;
                } else {
                    out -= &term;
                }
            }
            out
        }
    }
}

fn minor(m: &[Vec<Poly>], r: usize, c: usize) -> Vec<Vec<Poly>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != c)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// A change of `ℂ[∂]`-basis: the new generator `e'ᵢ` is `Σⱼ t[i][j] eⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    t: Vec<Vec<Poly>>,
    inv: Vec<Vec<Poly>>,
}

impl BasisChange {
    pub fn new(t: Vec<Vec<Poly>>) -> Result<Self> {
        let n = t.len();
        // reuse the shape and d-only validation of endomorphisms
        Endomorphism::new(t.clone())?;
        let d = det(&t);
        let unit = match d.as_field() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NotUnimodular(d.to_string())),
        };
        let scale = Poly::from_field(unit.inv()?);
        let inv: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        // adjugate: transpose of the cofactor matrix
                        let c = &det(&minor(&t, j, i)) * &scale;
                        if (i + j) % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    })
                    .collect()
            })
            .collect();
        let bc = BasisChange { t, inv };
        debug_assert!(bc.is_consistent());
        Ok(bc)
    }

    pub fn identity(rank: usize) -> Self {
        let id: Vec<Vec<Poly>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| if i == j { Poly::one() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        BasisChange {
            t: id.clone(),
            inv: id,
        }
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.t
    }

    pub fn inverse(&self) -> BasisChange {
        BasisChange {
            t: self.inv.clone(),
            inv: self.t.clone(),
        }
    }

    /// First `self`, then `next` expressed in the basis produced by `self`.
    pub fn then(&self, next: &BasisChange) -> BasisChange {
        BasisChange {
            t: mat_mul(&next.t, &self.t),
            inv: mat_mul(&self.inv, &next.inv),
        }
    }

    fn is_consistent(&self) -> bool {
        let p = mat_mul(&self.t, &self.inv);
        p.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// The new generator `e'ᵢ` in old coordinates.
    pub fn new_generator(&self, i: usize) -> LambdaElement {
        LambdaElement(self.t[i].clone())
    }

    /// Re-expresses an element given in old coordinates in the new basis.
    pub fn to_new(&self, v: &LambdaElement) -> LambdaElement {
        let n = self.rank();
        LambdaElement(
            (0..n)
                .map(|i| {
                    let mut acc = Poly::zero();
                    for j in 0..n {
                        if !self.inv[j][i].is_zero() && !v.0[j].is_zero() {
                            acc += &(&self.inv[j][i] * &v.0[j]);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Poly::zero();
                    for k in 0..n {
                        acc += &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Rewrites every table in the basis `e'ᵢ = Σⱼ t[i][j] eⱼ`. Generator names
/// are kept.
pub fn change_basis(alg: &ConformalAlgebra, t: &BasisChange) -> Result<ConformalAlgebra> {
    if t.rank() != alg.rank() {
        return Err(Error::RankMismatch {
            expected: alg.rank(),
            found: t.rank(),
        });
    }
    let mut out = alg.clone();
    let n = alg.rank();
    for (key, table) in alg.tables() {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let prod =
                    table.eval_product(&t.new_generator(i), &t.new_generator(j), LamVar::Lam(0))?;
                entries.push(t.to_new(&prod));
            }
        }
        // symmetry is basis independent
        out.set_table(
            key,
            StructureTable::new(n, entries)?.tagged(table.symmetry()),
        )?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_lie, check_tpca};
    use crate::conformal::elem;
    use crate::polyring::parse_poly;

    fn rank1(key: &str, s: &str) -> ConformalAlgebra {
        let t = StructureTable::new(1, vec![elem(vec![parse_poly(s).unwrap()])]).unwrap();
        ConformalAlgebra::new(vec!["L".into()])
            .with_table(key, t)
            .unwrap()
    }

    #[test]
    fn commutator_of_shifted_product_is_virasoro() {
        let a = rank1("star", "d + x");
        let b = commutator(&a, "star").unwrap();
        assert_eq!(b.entry(0, 0).0[0], parse_poly("d + 2*x").unwrap());
    }

    #[test]
    fn derivation_then_commutator() {
        let mut a = rank1("circ", "1");
        let d = Endomorphism::scalar(1, Poly::del());
        let star = derivation_product(&a, "circ", &d).unwrap();
        assert_eq!(star.entry(0, 0).0[0], parse_poly("d + x").unwrap());
        a.set_table("star", star).unwrap();
        let br = commutator(&a, "star").unwrap();
        a.set_table("bracket", br).unwrap();
        assert!(check_tpca(&a, "circ", "bracket").unwrap().pass);
        assert!(derivation_product(&a, "circ", &Endomorphism::identity(1)).is_err());
    }

    #[test]
    fn basis_change_round_trip() {
        let t = BasisChange::new(vec![
            vec![Poly::one(), parse_poly("d^2 - 3").unwrap()],
            vec![Poly::zero(), Poly::int(2)],
        ])
        .unwrap();
        let a = rank1("bracket", "d + 2*x");
        let a = direct_sum(&a, &a).unwrap();
        let b = change_basis(&a, &t).unwrap();
        assert!(check_lie(&b, "bracket").unwrap().pass);
        assert_eq!(change_basis(&b, &t.inverse()).unwrap(), a);
        assert!(BasisChange::new(vec![vec![Poly::del()]]).is_err());
    }
}
