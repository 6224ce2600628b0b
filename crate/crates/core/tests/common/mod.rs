#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tpca::cli::parse_algebra;
use tpca::conformal::{ConformalAlgebra, Endomorphism, LambdaElement, StructureTable};
use tpca::constructions::{commutator, current, derivation_product, OrdinaryAlgebra};
use tpca::polyring::{parse_field, parse_poly, Param, ParamField, ParamScope, Poly};
use tpca::wab::CandidateOctuple;
use tpca::Rational;

pub fn poly(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

pub fn field(s: &str) -> ParamField {
    parse_field(s, &ParamScope::open()).unwrap()
}

pub fn alg(src: &str) -> ConformalAlgebra {
    parse_algebra(src).unwrap()
}

/// Dual numbers `ℂ[t]/(t²)` with the bracket `u(x t' y − ...)` induced by `t d/dt`.
pub fn dual_numbers() -> OrdinaryAlgebra {
    let mut a = OrdinaryAlgebra::zero(vec!["E".into(), "T".into()]);
    let one = ParamField::from_i64(1);
    a.product[0][0][0] = one.clone();
    a.product[0][1][1] = one.clone();
    a.product[1][0][1] = one.clone();
    a.bracket[0][1][1] = field("u");
    a.bracket[1][0][1] = field("-u");
    a
}

/// `ℂ[t]/(t³)` with the bracket `x·D(y) − D(x)·y` for `D = t d/dt`.
pub fn truncated_cubic() -> OrdinaryAlgebra {
    let mut a = OrdinaryAlgebra::zero(vec!["E".into(), "T".into(), "S".into()]);
    let c = ParamField::from_i64;
    a.product[0][0][0] = c(1);
    a.product[0][1][1] = c(1);
    a.product[1][0][1] = c(1);
    a.product[0][2][2] = c(1);
    a.product[2][0][2] = c(1);
    a.product[1][1][2] = c(1);
    a.bracket[0][1][1] = c(1);
    a.bracket[1][0][1] = c(-1);
    a.bracket[0][2][2] = c(2);
    a.bracket[2][0][2] = c(-2);
    a
}

/// Adds `star = circ(a, D b)` and `bracket = commutator(star)`.
pub fn derived(mut a: ConformalAlgebra, d: &Endomorphism) -> ConformalAlgebra {
    a.remove_table("bracket");
    let star = derivation_product(&a, "circ", d).unwrap();
    a.set_table("star", star).unwrap();
    let br = commutator(&a, "star").unwrap();
    a.set_table("bracket", br).unwrap();
    a
}

pub fn vir_derived() -> ConformalAlgebra {
    derived(
        tpca::wab::catalog("vir-c").unwrap(),
        &Endomorphism::scalar(1, Poly::del()),
    )
}

pub fn dual_derived() -> ConformalAlgebra {
    let d = Endomorphism::new(vec![
        vec![Poly::del(), Poly::zero()],
        vec![Poly::zero(), poly("d + 1")],
    ])
    .unwrap();
    derived(current(&dual_numbers()).unwrap(), &d)
}

/// The commutative TPCAs used by the meta-tests, by name.
pub fn commutative_tpcas() -> Vec<(&'static str, ConformalAlgebra)> {
    vec![
        ("vir-c", tpca::wab::catalog("vir-c").unwrap()),
        ("current(dual numbers)", current(&dual_numbers()).unwrap()),
        (
            "current(truncated cubic)",
            current(&truncated_cubic()).unwrap(),
        ),
        ("derived(vir-c, d)", vir_derived()),
        (
            "derived(current(dual numbers), diag(d, d+1))",
            dual_derived(),
        ),
    ]
}

pub fn int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Poly {
    Poly::int(rng.gen_range(lo..=hi))
}

/// A random polynomial in `d`, `x` of total degree `≤ deg`, zero with
/// probability `p_zero`.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: u32, p_zero: f64) -> Poly {
    if rng.gen_bool(p_zero) {
        return Poly::zero();
    }
    let mut p = Poly::zero();
    for i in 0..=deg {
        for j in 0..=(deg - i) {
            if rng.gen_bool(0.4) {
                p = p + int(rng, -3, 3) * Poly::del().pow(i) * Poly::lam(0).pow(j);
            }
        }
    }
    p
}

pub fn random_octuple(rng: &mut ChaCha8Rng, deg: u32) -> CandidateOctuple {
    CandidateOctuple {
        polys: std::array::from_fn(|_| random_poly(rng, deg, 0.5)),
        nonzero: Default::default(),
    }
}

pub fn random_table(rng: &mut ChaCha8Rng, rank: usize, deg: u32) -> StructureTable {
    StructureTable::from_fn(rank, |_, _| {
        LambdaElement((0..rank).map(|_| random_poly(rng, deg, 0.5)).collect())
    })
    .unwrap()
}

/// Replaces every parameter not in `keep` by a random nonzero small rational.
pub fn specialize(a: &ConformalAlgebra, rng: &mut ChaCha8Rng, keep: &[&str]) -> ConformalAlgebra {
    let mut b = BTreeMap::new();
    for d in a
        .params()
        .iter()
        .filter(|d| !keep.contains(&d.name.as_str()))
    {
        let mut n = 0;
        while n == 0 {
            n = rng.gen_range(-4..=4);
        }
        let den = rng.gen_range(1..=3);
        b.insert(
            Param::new(&d.name).unwrap(),
            Rational::new(BigInt::from(n), BigInt::from(den)),
        );
    }
    a.evaluate_params(&b).unwrap()
}

/// `a` with `delta` added to coordinate `k` of entry `(i, j)` of `key`.
pub fn perturb(
    a: &ConformalAlgebra,
    key: &str,
    i: usize,
    j: usize,
    k: usize,
    delta: &Poly,
) -> ConformalAlgebra {
    let mut t = a.table(key).unwrap().clone();
    let mut e = t.entry(i, j).clone();
    e.0[k] = &e.0[k] + delta;
    t.set_entry(i, j, e);
    let mut out = a.clone();
    out.set_table(key, t).unwrap();
    out
}
