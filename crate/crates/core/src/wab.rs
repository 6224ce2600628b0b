//! The Virasoro and `W(a,b)` Lie conformal algebras, the catalog of
//! compatible products on them, and the machinery that derives and solves the
//! defining equations of such products.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::axioms::{
    associativity_residual, check_associative, check_commutative, check_lie, check_nc_tpca,
    check_tpca, transposed_leibniz_residual,
};
use crate::conformal::{elem, ConformalAlgebra, LambdaElement, StructureTable, Symmetry};
use crate::constructions::{change_basis, BasisChange};
use crate::error::{Error, Result};
use crate::identities::check_identities_noncommutative;
use crate::polyring::{
    parse_field, parse_poly, LamVar, Param, ParamField, ParamPoly, ParamScope, Poly,
};
use crate::solver::{ansatz, coefficient_equations, solve, Family, SolveOutcome, SolverOptions};

pub const OCTUPLE_NAMES: [&str; 8] = ["f1", "f2", "g1", "g2", "h1", "h2", "q1", "q2"];

fn poly(s: &str) -> Poly {
    parse_poly(s).expect("built-in expression parses")
}

fn field(s: &str) -> ParamField {
    parse_field(s, &ParamScope::open()).expect("built-in expression parses")
}

/// `[L λ L] = (∂ + 2λ)L`.
pub fn vir_bracket() -> StructureTable {
    StructureTable::new(1, vec![elem(vec![poly("d + 2*x")])])
        .expect("valid table")
        .tagged(Symmetry::Skew)
}

pub fn make_vir() -> ConformalAlgebra {
    ConformalAlgebra::new(vec!["L".into()])
        .with_table("bracket", vir_bracket())
        .expect("valid table")
}

/// The bracket of `W(a,b)` on generators `L, M`:
/// `[L λ L] = (∂+2λ)L`, `[L λ M] = (∂+aλ+b)M`, `[M λ L] = ((a−1)∂+aλ−b)M`.
pub fn wab_bracket(a: &ParamField, b: &ParamField) -> StructureTable {
    let (a, b) = (Poly::from_field(a.clone()), Poly::from_field(b.clone()));
    let (d, x) = (Poly::del(), Poly::lam(0));
    let lm = &(&d + &(&a * &x)) + &b;
    let ml = &(&(&(&a - &Poly::int(1)) * &d) + &(&a * &x)) - &b;
    StructureTable::new(
        2,
        vec![
            elem(vec![poly("d + 2*x"), Poly::zero()]),
            elem(vec![Poly::zero(), lm]),
            elem(vec![Poly::zero(), ml]),
            elem(vec![Poly::zero(), Poly::zero()]),
        ],
    )
    .expect("valid table")
    .tagged(Symmetry::Skew)
}

fn declare_params_of(alg: &mut ConformalAlgebra, fields: &[&ParamField]) -> Result<()> {
    for f in fields {
        for p in f.params() {
            alg.declare_param(&p.name(), false)?;
        }
    }
    Ok(())
}

/// `W(a,b)` with `a`, `b` rational numbers or symbolic expressions.
pub fn make_wab(a: &ParamField, b: &ParamField) -> Result<ConformalAlgebra> {
    let mut alg = ConformalAlgebra::new(vec!["L".into(), "M".into()]);
    declare_params_of(&mut alg, &[a, b])?;
    alg.set_table("bracket", wab_bracket(a, b))?;
    Ok(alg)
}

/// The eight coefficient polynomials of a product on `W(a,b)`:
/// `L∘L = f₁L + f₂M`, `L∘M = g₁L + g₂M`, `M∘L = h₁L + h₂M`, `M∘M = q₁L + q₂M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateOctuple {
    pub polys: [Poly; 8],
    /// Parameters assumed nonzero.
    pub nonzero: BTreeSet<String>,
}

impl CandidateOctuple {
    pub fn zero() -> Self {
        CandidateOctuple {
            polys: Default::default(),
            nonzero: BTreeSet::new(),
        }
    }

    pub fn from_strs(s: [&str; 8]) -> Self {
        CandidateOctuple {
            polys: s.map(poly),
            nonzero: BTreeSet::new(),
        }
    }

    pub fn with_nonzero(mut self, names: &[&str]) -> Self {
        self.nonzero.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn get(&self, name: &str) -> &Poly {
        let i = OCTUPLE_NAMES
            .iter()
            .position(|n| *n == name)
            .expect("octuple name");
        &self.polys[i]
    }

    pub fn to_table(&self) -> Result<StructureTable> {
        for p in &self.polys {
            if p.lam_vars()
                .iter()
                .any(|v| !matches!(v, LamVar::Del | LamVar::Lam(0)))
            {
                return Err(Error::Invalid(
                    "octuple entries may only use d and x".into(),
                ));
            }
        }
        let e = |i: usize| {
            elem(vec![
                self.polys[2 * i].clone(),
                self.polys[2 * i + 1].clone(),
            ])
        };
        StructureTable::new(2, vec![e(0), e(1), e(2), e(3)])
    }

    pub fn from_table(t: &StructureTable) -> Result<Self> {
        if t.rank() != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                found: t.rank(),
            });
        }
        let mut polys: [Poly; 8] = Default::default();
        for (k, e) in t.entries().iter().enumerate() {
            polys[2 * k] = e.0[0].clone();
            polys[2 * k + 1] = e.0[1].clone();
        }
        Ok(CandidateOctuple {
            polys,
            nonzero: BTreeSet::new(),
        })
    }

    /// The algebra with this product on `W(a,b)`.
    pub fn algebra(&self, a: &ParamField, b: &ParamField) -> Result<ConformalAlgebra> {
        let mut alg = make_wab(a, b)?;
        let t = self.to_table()?;
        for p in t.params() {
            alg.declare_param(&p.name(), self.nonzero.contains(&*p.name()))?;
        }
        alg.set_table("circ", t)?;
        Ok(alg)
    }
}

pub const CATALOG_IDS: [&str; 11] = [
    "vir-c", "1", "2.1", "2.2", "2.3", "2.4", "NF1", "NF2", "NF3", "NF4", "NF5",
];

/// A generic polynomial `s(λ)` used where the catalog quantifies over all
/// polynomials in one variable.
pub const GENERIC_S: &str = "s0 + s1*x + s2*x^2 + s3*x^3";

fn octuple_for(id: &str) -> Option<CandidateOctuple> {
    let c = match id {
        "1" => CandidateOctuple::zero(),
        "2.1" | "NF1" => {
            CandidateOctuple::from_strs(["0", GENERIC_S, "0", "0", "0", "0", "0", "0"])
        }
        "2.2" => CandidateOctuple::from_strs(["c1", "c2*x", "0", "c1", "0", "0", "0", "0"])
            .with_nonzero(&["c1"]),
        "2.3" => CandidateOctuple::from_strs(["c1", "c3", "0", "c1", "0", "c1", "0", "0"])
            .with_nonzero(&["c1"]),
        "2.4" => CandidateOctuple::from_strs([
            "m - k*x",
            "k*m/c0*x - k^2/c0*x^2",
            "0",
            "m - k*x",
            "c0",
            "k*x",
            "0",
            "c0",
        ])
        .with_nonzero(&["c0"]),
        "NF2" => CandidateOctuple::from_strs(["c1", "0", "0", "c1", "0", "0", "0", "0"])
            .with_nonzero(&["c1"]),
        "NF3" => CandidateOctuple::from_strs(["c1", "0", "0", "c1", "0", "c1", "0", "0"])
            .with_nonzero(&["c1"]),
        "NF4" => CandidateOctuple::from_strs(["c1", "1", "0", "c1", "0", "c1", "0", "0"])
            .with_nonzero(&["c1"]),
        "NF5" => CandidateOctuple::from_strs(["c", "0", "0", "c", "1", "0", "0", "1"]),
        _ => return None,
    };
    Some(c)
}

/// The product octuple of a rank-2 catalog entry.
pub fn catalog_octuple(id: &str) -> Result<CandidateOctuple> {
    octuple_for(id).ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

/// A catalog entry with symbolic parameters. Rank-2 entries use `W(2,b)`,
/// except `"1"` which is the zero product on `W(a,b)`.
pub fn catalog(id: &str) -> Result<ConformalAlgebra> {
    if id == "vir-c" {
        let t = StructureTable::new(1, vec![elem(vec![poly("c")])])?.tagged(Symmetry::Commutative);
        return make_vir().with_param("c", false)?.with_table("circ", t);
    }
    let oct = catalog_octuple(id)?;
    let (a, b) = if id == "1" {
        (field("a"), field("b"))
    } else {
        (field("2"), field("b"))
    };
    oct.algebra(&a, &b)
}

/// One nonzero coordinate of a law residual on a generator triple.
#[derive(Clone, Debug, Serialize)]
pub struct ResidualEntry {
    /// `law(X,Y,Z).C`, e.g. `assoc(L,M,L).M`.
    pub label: String,
    pub law: String,
    pub triple: [String; 3],
    pub component: String,
    pub residual: String,
    #[serde(skip)]
    pub poly: Poly,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualSystem {
    /// Number of coordinates examined.
    pub checked: usize,
    /// The nonzero ones.
    pub entries: Vec<ResidualEntry>,
}

impl ResidualSystem {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&Poly> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.poly)
    }
}

const GEN: [&str; 2] = ["L", "M"];

pub fn residual_label(law: &str, t: [usize; 3], comp: usize) -> String {
    format!(
        "{law}({},{},{}).{}",
        GEN[t[0]], GEN[t[1]], GEN[t[2]], GEN[comp]
    )
}

/// Associativity and the transposed Leibniz rule for `c` over `W(a,b)`,
/// coordinate by coordinate; empty iff `c` is a compatible structure.
pub fn residual_system(
    c: &CandidateOctuple,
    a: &ParamField,
    b: &ParamField,
) -> Result<ResidualSystem> {
    let circ = c.to_table()?;
    let br = wab_bracket(a, b);
    let basis = |i: usize| LambdaElement::basis(2, i);
    let mut sys = ResidualSystem {
        checked: 0,
        entries: Vec::new(),
    };
    for law in ["assoc", "tl"] {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let (x, y, z) = (basis(i), basis(j), basis(k));
                    let r = if law == "assoc" {
                        associativity_residual(&circ, &x, &y, &z)?
                    } else {
                        transposed_leibniz_residual(&circ, &br, &x, &y, &z)?
                    };
                    for (comp, p) in r.0.into_iter().enumerate() {
                        sys.checked += 1;
                        if p.is_zero() {
                            continue;
                        }
                        sys.entries.push(ResidualEntry {
                            label: residual_label(law, [i, j, k], comp),
                            law: law.to_string(),
                            triple: [GEN[i].into(), GEN[j].into(), GEN[k].into()],
                            component: GEN[comp].into(),
                            residual: p.to_string(),
                            poly: p,
                        });
                    }
                }
            }
        }
    }
    Ok(sys)
}

/// `f(A, B)`: substitutes `∂ → A` and `λ → B` simultaneously.
fn at(f: &Poly, d: &Poly, l: &Poly) -> Poly {
    let mut m = BTreeMap::new();
    m.insert(LamVar::Del, d.clone());
    m.insert(LamVar::Lam(0), l.clone());
    f.subst_many(&m)
}

/// Associativity coordinates in the hand-expanded form
/// `A(∂+λ,μ)B(∂,λ) + C(∂+λ,μ)E(∂,λ) = F(−λ−μ,λ)G(∂,λ+μ) + H(−λ−μ,λ)K(∂,λ+μ)`,
/// listed as `[A, B, C, E, F, G, H, K]`.
const ASSOC_FORMS: [(&str, [&str; 8]); 16] = [
    (
        "assoc(L,L,L).L",
        ["f1", "f1", "f2", "g1", "f1", "f1", "f2", "h1"],
    ),
    (
        "assoc(L,L,L).M",
        ["f1", "f2", "f2", "g2", "f1", "f2", "f2", "h2"],
    ),
    (
        "assoc(L,L,M).L",
        ["g1", "f1", "g2", "g1", "f1", "g1", "f2", "q1"],
    ),
    (
        "assoc(L,L,M).M",
        ["g1", "f2", "g2", "g2", "f1", "g2", "f2", "q2"],
    ),
    (
        "assoc(L,M,L).L",
        ["h1", "f1", "h2", "g1", "g1", "f1", "g2", "h1"],
    ),
    (
        "assoc(L,M,L).M",
        ["h1", "f2", "h2", "g2", "g1", "f2", "g2", "h2"],
    ),
    (
        "assoc(L,M,M).L",
        ["q1", "f1", "q2", "g1", "g1", "g1", "g2", "q1"],
    ),
    (
        "assoc(L,M,M).M",
        ["q1", "f2", "q2", "g2", "g1", "g2", "g2", "q2"],
    ),
    (
        "assoc(M,L,L).L",
        ["f1", "h1", "f2", "q1", "h1", "f1", "h2", "h1"],
    ),
    (
        "assoc(M,L,L).M",
        ["f1", "h2", "f2", "q2", "h1", "f2", "h2", "h2"],
    ),
    (
        "assoc(M,L,M).L",
        ["g1", "h1", "g2", "q1", "h1", "g1", "h2", "q1"],
    ),
    (
        "assoc(M,L,M).M",
        ["g1", "h2", "g2", "q2", "h1", "g2", "h2", "q2"],
    ),
    (
        "assoc(M,M,L).L",
        ["h1", "h1", "h2", "q1", "q1", "f1", "q2", "h1"],
    ),
    (
        "assoc(M,M,L).M",
        ["h1", "h2", "h2", "q2", "q1", "f2", "q2", "h2"],
    ),
    (
        "assoc(M,M,M).L",
        ["q1", "h1", "q2", "q1", "q1", "g1", "q2", "q1"],
    ),
    (
        "assoc(M,M,M).M",
        ["q1", "h2", "q2", "q2", "q1", "g2", "q2", "q2"],
    ),
];

/// Labels with a hand-expanded transcription in [`paper_equation_oracle`].
pub fn oracle_labels() -> Vec<String> {
    let mut v: Vec<String> = ASSOC_FORMS.iter().map(|(l, _)| l.to_string()).collect();
    for x in ["L", "M"] {
        for (yz, comps) in [
            ("L,L", &["L", "M"][..]),
            ("L,M", &["L", "M"]),
            ("M,L", &["L", "M"]),
            ("M,M", &["M"]),
        ] {
            for c in comps {
                v.push(format!("tl({x},{yz}).{c}"));
            }
        }
    }
    v
}

/// Independent hand expansions of the defining equations, written as
/// `LHS − RHS`. `labels = None` selects all of them. Each returned residual
/// must vanish exactly when the engine coordinate with the same label does.
pub fn paper_equation_oracle(
    c: &CandidateOctuple,
    a: &ParamField,
    b: &ParamField,
    labels: Option<&[&str]>,
) -> Result<Vec<(String, Poly)>> {
    let (a, b) = (Poly::from_field(a.clone()), Poly::from_field(b.clone()));
    let (d, l, m) = (Poly::del(), Poly::lam(0), Poly::lam(1));
    let one = Poly::int(1);
    let two = Poly::int(2);
    let lm = &l + &m;
    let neg_lm = -&lm;
    let dl = &d + &l;
    let dm = &d + &m;
    let want = |s: &str| labels.map_or(true, |ls| ls.contains(&s));
    let mut out = Vec::new();

    for (label, n) in ASSOC_FORMS {
        if !want(label) {
            continue;
        }
        let g = |k: usize| c.get(n[k]);
        let lhs = &at(g(0), &dl, &m) * &at(g(1), &d, &l) + &at(g(2), &dl, &m) * &at(g(3), &d, &l);
        let rhs = &at(g(4), &neg_lm, &l) * &at(g(5), &d, &lm)
            + &at(g(6), &neg_lm, &l) * &at(g(7), &d, &lm);
        out.push((label.to_string(), lhs - rhs));
    }

    // shared factors of the bracket
    let a1 = &a - &one;
    let d_2l_2m = &(&d + &(&two * &l)) + &(&two * &m); // ∂+2λ+2μ
    let d_2m = &d + &(&two * &m); // ∂+2μ
    let d_l_2m = &dl + &(&two * &m); // ∂+λ+2μ
    let d_l_am_b = &(&dl + &(&a * &m)) + &b; // ∂+λ+aμ+b
    let d_a_lm_b = &(&d + &(&a * &lm)) + &b; // ∂+a(λ+μ)+b
    let d_am_b = &(&d + &(&a * &m)) + &b; // ∂+aμ+b
    let a1d_a_lm_b = &(&(&a1 * &d) + &(&a * &lm)) - &b; // (a−1)∂+a(λ+μ)−b
    let a1d_am_b = &(&(&a1 * &d) + &(&a * &m)) - &b; // (a−1)∂+aμ−b
    let a1dl_am_b = &(&(&a1 * &dl) + &(&a * &m)) - &b; // (a−1)(∂+λ)+aμ−b

    // first generator L uses (f, g); M uses (h, q)
    for (x, p1, p2, r1, r2) in [("L", "f1", "f2", "g1", "g2"), ("M", "h1", "h2", "q1", "q2")] {
        let (p1, p2, r1, r2) = (c.get(p1), c.get(p2), c.get(r1), c.get(r2));
        let f1 = c.get("f1");
        let h1 = c.get("h1");
        // the coefficient of L in X∘L that feeds the (X,L,M) and (X,M,L) M-rows
        let first = if x == "L" { f1 } else { h1 };
        let eqs: [(String, Poly); 7] = [
            (
                format!("tl({x},L,L).L"),
                &(&two * &d_l_2m) * p1
                    - (&d_2l_2m * &at(p1, &neg_lm, &l) + &d_2m * &at(p1, &dm, &l)),
            ),
            (
                format!("tl({x},L,L).M"),
                &(&two * &d_l_2m) * p2
                    - (&a1d_a_lm_b * &at(p2, &neg_lm, &l) + &d_am_b * &at(p2, &dm, &l)),
            ),
            (
                format!("tl({x},L,M).L"),
                &(&two * &d_l_am_b) * r1 - &d_2m * &at(r1, &dm, &l),
            ),
            (
                format!("tl({x},L,M).M"),
                &(&two * &d_l_am_b) * r2
                    - (&d_a_lm_b * &at(first, &neg_lm, &l) + &d_am_b * &at(r2, &dm, &l)),
            ),
            (
                format!("tl({x},M,L).L"),
                &(&two * &a1dl_am_b) * r1 - &d_2l_2m * &at(r1, &neg_lm, &l),
            ),
            (
                format!("tl({x},M,L).M"),
                &(&two * &a1dl_am_b) * r2
                    - (&a1d_a_lm_b * &at(r2, &neg_lm, &l) + &a1d_am_b * &at(first, &dm, &l)),
            ),
            (
                format!("tl({x},M,M).M"),
                &d_a_lm_b * &at(r1, &neg_lm, &l) + &a1d_am_b * &at(r1, &dm, &l),
            ),
        ];
        for (label, r) in eqs {
            if want(&label) {
                out.push((label, r));
            }
        }
    }
    Ok(out)
}

/// `p(λ)`, `s(λ)`, `l(λ)` with unknown coefficients up to degree `deg`, and `c₀`.
pub struct ReducedUnknowns {
    pub c0: Param,
    pub p: (Vec<Param>, Poly),
    pub s: (Vec<Param>, Poly),
    pub l: (Vec<Param>, Poly),
}

impl ReducedUnknowns {
    pub fn new(deg: u16) -> Self {
        ReducedUnknowns {
            c0: Param::new("c0").expect("valid"),
            p: ansatz("p", deg, false),
            s: ansatz("s", deg, false),
            l: ansatz("l", deg, false),
        }
    }

    pub fn all(&self) -> BTreeSet<Param> {
        let mut u: BTreeSet<Param> = [self.c0].into();
        for v in [&self.p.0, &self.s.0, &self.l.0] {
            u.extend(v.iter().copied());
        }
        u
    }
}

/// The octuple of shape `g₁ = q₁ = 0`, `h₁ = q₂ = c₀`, `f₁ = g₂ = p(λ)`,
/// `f₂ = s(λ)`, `h₂ = l(λ)`.
pub fn shaped_octuple(p: &Poly, s: &Poly, l: &Poly, c0: &Poly) -> CandidateOctuple {
    CandidateOctuple {
        polys: [
            p.clone(),
            s.clone(),
            Poly::zero(),
            p.clone(),
            c0.clone(),
            l.clone(),
            Poly::zero(),
            c0.clone(),
        ],
        nonzero: BTreeSet::new(),
    }
}

/// The six equations left over for shaped octuples, as `LHS − RHS` in λ
/// (`x`) and μ (`y`).
pub fn reduced_equations(p: &Poly, s: &Poly, l: &Poly, c0: &Poly) -> [Poly; 6] {
    let (x, y) = (Poly::lam(0), Poly::lam(1));
    let xy = &x + &y;
    let ev = |f: &Poly, v: &Poly| f.subst(LamVar::Lam(0), v);
    let (lx, ly, lxy) = (ev(l, &x), ev(l, &y), ev(l, &xy));
    let (px, py, pxy) = (ev(p, &x), ev(p, &y), ev(p, &xy));
    let (sx, sy, sxy) = (ev(s, &x), ev(s, &y), ev(s, &xy));
    [
        c0 * &lx + c0 * &ly - c0 * &lxy,
        c0 * &sy + &py * &lx - c0 * &sxy - &lx * &lxy,
        c0 * &lx + c0 * &pxy - c0 * &py,
        &px * &ly + c0 * &sx - &px * &lxy,
        &px * &sy + &py * &sx - &px * &sxy - &sx * &lxy,
        &px * &pxy + c0 * &sx - &px * &py,
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaAReport {
    /// Every nonzero residual of a shaped octuple is ± one of the six reduced
    /// equations, and each of the six occurs.
    pub shape_reduces: bool,
    pub unmatched: Vec<String>,
    pub reduced_hit: [bool; 6],
    /// Numeric `a ≠ 2`: the full solver found only the zero octuple.
    pub nonspecial_zero_only: bool,
    pub nonspecial: SolveOutcome,
    pub pass: bool,
}

/// Checks the shape reduction at `a = 2` (degree `shape_deg`, symbolic `b`)
/// and that `a`, `b` given numerically admit only the zero product up to
/// degree `deg`.
pub fn verify_lemma_a(
    shape_deg: u16,
    a: &ParamField,
    b: &ParamField,
    deg: u16,
    depth: usize,
) -> Result<LemmaAReport> {
    let u = ReducedUnknowns::new(shape_deg);
    let c0 = Poly::param(u.c0);
    let oct = shaped_octuple(&u.p.1, &u.s.1, &u.l.1, &c0);
    let sys = residual_system(&oct, &field("2"), &field("b"))?;
    let reduced = reduced_equations(&u.p.1, &u.s.1, &u.l.1, &c0);
    let mut hit = [false; 6];
    let mut unmatched = Vec::new();
    for e in &sys.entries {
        let k = reduced
            .iter()
            .position(|r| *r == e.poly || *r == -e.poly.clone());
        match k {
            Some(k) => hit[k] = true,
            None => unmatched.push(e.label.clone()),
        }
    }
    let shape_reduces = unmatched.is_empty() && hit.iter().all(|h| *h);
    let nonspecial = solve_full(a, b, deg, depth)?;
    let nonspecial_zero_only = nonspecial.complete
        && nonspecial
            .families
            .iter()
            .all(|f| f.free_params.is_empty() && f.values.values().all(|v| v.is_zero()));
    Ok(LemmaAReport {
        shape_reduces,
        unmatched,
        reduced_hit: hit,
        nonspecial_zero_only,
        pass: shape_reduces && nonspecial_zero_only,
        nonspecial,
    })
}

/// Solves for all eight polynomials (degree `≤ deg` in each of `∂`, λ) over
/// `W(a,b)` with numeric or symbolic `a`, `b`.
pub fn solve_full(a: &ParamField, b: &ParamField, deg: u16, depth: usize) -> Result<SolveOutcome> {
    let mut unknowns = BTreeSet::new();
    let mut polys: [Poly; 8] = Default::default();
    for (k, name) in OCTUPLE_NAMES.iter().enumerate() {
        let (ps, p) = ansatz(name, deg, true);
        unknowns.extend(ps);
        polys[k] = p;
    }
    let oct = CandidateOctuple {
        polys,
        nonzero: BTreeSet::new(),
    };
    let sys = residual_system(&oct, a, b)?;
    let eqs: Vec<ParamPoly> = sys
        .entries
        .iter()
        .flat_map(|e| coefficient_equations(&e.poly))
        .collect();
    Ok(solve(
        eqs,
        &unknowns,
        &BTreeSet::new(),
        &SolverOptions {
            depth,
            priority: vec![],
        },
    ))
}

/// A solved family of the reduced system, with the shape it matches.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedFamily {
    /// `B1` … `B4`, or `unclassified`.
    pub shape: String,
    pub p: String,
    pub s: String,
    pub l: String,
    pub c0: String,
    #[serde(flatten)]
    pub family: Family,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedSolution {
    pub degree: u16,
    pub depth: usize,
    pub families: Vec<ReducedFamily>,
    pub open: Vec<crate::solver::OpenBranch>,
    pub complete: bool,
    /// Every family satisfies the six equations identically.
    pub verified: bool,
}

fn apply_poly(f: &Family, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        out.add_term(*m, f.apply(c));
    }
    out
}

fn classify(f: &Family, u: &ReducedUnknowns, p: &Poly, s: &Poly, l: &Poly) -> String {
    let c0 = f.value(u.c0);
    let x = LamVar::Lam(0);
    let lam_free = |q: &Poly| !q.contains(x);
    let c0_nonzero = f.nonzero.contains(&u.c0);
    if c0_nonzero {
        // l = kλ, p = m − kλ, c₀s = p·l
        let k = l.coefficient_of(x, 1);
        let m = p.coefficient_of(x, 0);
        let l_ok = *l == &k * &Poly::lam(0);
        let p_ok = *p == &m - &(&k * &Poly::lam(0));
        let s_ok = &Poly::from_field(c0) * s == p * l;
        return if l_ok && p_ok && s_ok {
            "B4"
        } else {
            "unclassified"
        }
        .into();
    }
    if !c0.is_zero() || !lam_free(p) {
        return "unclassified".into();
    }
    let p0 = p.constant_term();
    if p.is_zero() && l.is_zero() {
        return "B1".into();
    }
    let p_nonzero = p0.params().iter().all(|v| f.nonzero.contains(v)) && !p0.is_zero();
    if !p_nonzero {
        return "unclassified".into();
    }
    if l.is_zero() && s.degree_in(x) <= 1 && s.constant_term().is_zero() {
        return "B2".into();
    }
    if l == p && lam_free(s) {
        return "B3".into();
    }
    "unclassified".into()
}

/// Solves the six reduced equations with `p`, `s`, `l` of degree `≤ deg`.
/// With `c0_zero`, `c₀ = 0` is imposed before solving.
pub fn solve_reduced(deg: u16, depth: usize, c0_zero: bool) -> Result<ReducedSolution> {
    let u = ReducedUnknowns::new(deg);
    let c0 = if c0_zero {
        Poly::zero()
    } else {
        Poly::param(u.c0)
    };
    let eqs: Vec<ParamPoly> = reduced_equations(&u.p.1, &u.s.1, &u.l.1, &c0)
        .iter()
        .flat_map(coefficient_equations)
        .collect();
    let mut unknowns = u.all();
    if c0_zero {
        unknowns.remove(&u.c0);
    }
    let opts = SolverOptions {
        depth,
        priority: vec![u.c0, u.p.0[0]],
    };
    let out = solve(eqs, &unknowns, &BTreeSet::new(), &opts);
    let mut verified = true;
    let mut families = Vec::new();
    for f in out.families {
        let (p, s, l) = (
            apply_poly(&f, &u.p.1),
            apply_poly(&f, &u.s.1),
            apply_poly(&f, &u.l.1),
        );
        let c0v = apply_poly(&f, &c0);
        verified &= reduced_equations(&p, &s, &l, &c0v)
            .iter()
            .all(|r| r.is_zero());
        let mut f = f;
        if c0_zero {
            f.values.insert(u.c0, ParamField::zero());
        }
        let shape = classify(&f, &u, &p, &s, &l);
        families.push(ReducedFamily {
            shape,
            p: p.to_string(),
            s: s.to_string(),
            l: l.to_string(),
            c0: c0v.to_string(),
            family: f,
        });
    }
    Ok(ReducedSolution {
        degree: deg,
        depth,
        families,
        complete: out.open.is_empty(),
        open: out.open,
        verified,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalFormCheck {
    pub case: String,
    pub target: String,
    /// Tables agree exactly after the basis change.
    pub equal: bool,
    /// The target passes associativity, Lie and transposed Leibniz.
    pub target_passes: bool,
}

fn subst_params(alg: &ConformalAlgebra, subs: &[(&str, &str)]) -> Result<ConformalAlgebra> {
    let mut out = alg.clone();
    for key in alg.tables().keys() {
        let mut t = out.table(key)?.clone();
        for (name, value) in subs {
            let p = Param::new(name)?;
            let v = field(value);
            t = t.try_map(|c| c.substitute_param(p, &v))?;
        }
        out.set_table(key, t)?;
    }
    Ok(out)
}

fn same_tables(x: &ConformalAlgebra, y: &ConformalAlgebra) -> bool {
    ["circ", "bracket"]
        .iter()
        .all(|k| match (x.table(k), y.table(k)) {
            (Ok(a), Ok(b)) => a.entries() == b.entries(),
            _ => false,
        })
}

fn bc(rows: [[&str; 2]; 2]) -> Result<BasisChange> {
    BasisChange::new(
        rows.iter()
            .map(|r| r.iter().map(|s| poly(s)).collect())
            .collect(),
    )
}

/// Applies the basis changes that bring each case to its normal form and
/// compares tables exactly.
pub fn verify_normal_forms() -> Result<Vec<NormalFormCheck>> {
    let mut out = Vec::new();
    let mut push =
        |case: &str, target: &str, got: ConformalAlgebra, want: ConformalAlgebra| -> Result<()> {
            let target_passes = check_nc_tpca(&want, "circ", "bracket")?.pass;
            out.push(NormalFormCheck {
                case: case.into(),
                target: target.into(),
                equal: same_tables(&got, &want),
                target_passes,
            });
            Ok(())
        };

    let c22 = catalog("2.2")?;
    let got = change_basis(&c22, &bc([["1", "-c2/c1*d + b*c2/c1"], ["0", "1"]])?)?;
    push("2.2", "NF2", got, catalog("NF2")?)?;

    let c23 = catalog("2.3")?;
    let got = change_basis(&c23, &bc([["1", "c3/(b*c1)*d - c3/c1"], ["0", "1"]])?)?;
    push("2.3 (b != 0)", "NF3", got, catalog("NF3")?)?;

    let c23b0 = subst_params(&c23, &[("b", "0")])?;
    let got = change_basis(&c23b0, &bc([["1", "0"], ["0", "c3"]])?)?;
    push(
        "2.3 (b = 0, c3 != 0)",
        "NF4",
        got,
        subst_params(&catalog("NF4")?, &[("b", "0")])?,
    )?;

    let got = subst_params(&c23, &[("b", "0"), ("c3", "0")])?;
    push(
        "2.3 (b = 0, c3 = 0)",
        "NF3 (b = 0)",
        got,
        subst_params(&catalog("NF3")?, &[("b", "0")])?,
    )?;

    let c24 = catalog("2.4")?;
    let step1 = change_basis(&c24, &bc([["1", "0"], ["0", "1/c0"]])?)?;
    let got = change_basis(&step1, &bc([["1", "-k*d + k*b"], ["0", "1"]])?)?;
    push(
        "2.4",
        "NF5 (c = m + k*b)",
        got,
        subst_params(&catalog("NF5")?, &[("c", "m + k*b")])?,
    )?;

    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct VirReport {
    pub scalar_product_passes: bool,
    pub degree: u16,
    pub families: Vec<Family>,
    /// Every family has `f` free of `∂` and λ.
    pub only_constants: bool,
    pub complete: bool,
    pub derivative_residual: String,
    pub pass: bool,
}

/// Checks the scalar products on the Virasoro algebra and that the ansatz
/// `f(∂,λ)` of degree `≤ deg` in each variable admits only constants.
pub fn verify_vir_classification(deg: u16, depth: usize) -> Result<VirReport> {
    let vc = catalog("vir-c")?;
    let scalar_product_passes = check_associative(&vc, "circ")?.pass
        && check_commutative(&vc, "circ")?.pass
        && check_lie(&vc, "bracket")?.pass
        && check_tpca(&vc, "circ", "bracket")?.pass;

    let (unknowns, f) = ansatz("f", deg, true);
    let circ = StructureTable::new(1, vec![elem(vec![f.clone()])])?;
    let br = vir_bracket();
    let e = LambdaElement::basis(1, 0);
    let mut eqs = Vec::new();
    for r in [
        associativity_residual(&circ, &e, &e, &e)?,
        transposed_leibniz_residual(&circ, &br, &e, &e, &e)?,
    ] {
        eqs.extend(coefficient_equations(&r.0[0]));
    }
    let unknowns: BTreeSet<Param> = unknowns.into_iter().collect();
    let priority = vec![Param::new("f_00")?];
    let out = solve(
        eqs,
        &unknowns,
        &BTreeSet::new(),
        &SolverOptions { depth, priority },
    );
    let only_constants = out.families.iter().all(|fam| {
        let v = apply_poly(fam, &f);
        v.lam_vars().is_empty()
    });

    let d_alg = make_vir().with_table(
        "circ",
        StructureTable::new(1, vec![elem(vec![Poly::del()])])?,
    )?;
    let r = check_associative(&d_alg, "circ")?;
    let derivative_residual = r
        .failures()
        .next()
        .map(|l| l.residual.clone())
        .unwrap_or_else(|| "0".into());

    let complete = out.open.is_empty();
    Ok(VirReport {
        scalar_product_passes,
        degree: deg,
        only_constants,
        complete,
        pass: scalar_product_passes && only_constants && complete && derivative_residual != "0",
        families: out.families,
        derivative_residual,
    })
}

/// Whether `circ` of a catalog entry is commutative; reported on its own
/// since the classification does not impose it.
pub fn commutativity_predicate(alg: &ConformalAlgebra) -> Result<bool> {
    Ok(check_commutative(alg, "circ")?.pass)
}

/// Runs the identities that do not need commutativity on every normal form.
pub fn normal_form_identities() -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for id in ["NF1", "NF2", "NF3", "NF4", "NF5"] {
        let r = check_identities_noncommutative(&catalog(id)?, "circ", "bracket")?;
        out.push((id.to_string(), r.pass && !r.vacuous));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_are_lie() {
        assert!(check_lie(&make_vir(), "bracket").unwrap().pass);
        let w = make_wab(&field("a"), &field("b")).unwrap();
        assert!(check_lie(&w, "bracket").unwrap().pass);
        let w00 = make_wab(&field("0"), &field("0")).unwrap();
        assert_eq!(w00.table("bracket").unwrap().entry(0, 1).0[1], Poly::del());
    }

    #[test]
    fn catalog_cases_have_empty_systems() {
        for id in ["2.1", "2.2", "2.3", "2.4"] {
            let sys =
                residual_system(&catalog_octuple(id).unwrap(), &field("2"), &field("b")).unwrap();
            assert!(
                sys.is_empty(),
                "{id}: {:?}",
                sys.entries.first().map(|e| &e.label)
            );
            assert_eq!(sys.checked, 32);
        }
        let sys = residual_system(&CandidateOctuple::zero(), &field("a"), &field("b")).unwrap();
        assert!(sys.is_empty());
    }

    #[test]
    fn lambda_in_first_slot() {
        let c = CandidateOctuple::from_strs(["x", "0", "0", "0", "0", "0", "0", "0"]);
        let sys = residual_system(&c, &field("2"), &field("0")).unwrap();
        assert_eq!(sys.get("assoc(L,L,L).L").unwrap(), &poly("-x^2"));
        let o =
            paper_equation_oracle(&c, &field("2"), &field("0"), Some(&["assoc(L,L,L).L"])).unwrap();
        assert_eq!(o[0].1, poly("-x^2"));
    }

    #[test]
    fn oracle_agrees_on_catalog() {
        for id in ["2.2", "2.4"] {
            let c = catalog_octuple(id).unwrap();
            for (label, r) in paper_equation_oracle(&c, &field("2"), &field("b"), None).unwrap() {
                assert!(r.is_zero(), "{id} {label}");
            }
        }
        assert_eq!(oracle_labels().len(), 30);
    }

    #[test]
    fn catalog_ids() {
        for id in CATALOG_IDS {
            let a = catalog(id).unwrap();
            a.validate().unwrap();
        }
        assert!(matches!(catalog("bogus"), Err(Error::UnknownCatalogId(_))));
    }
}
