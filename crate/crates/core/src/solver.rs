//! Case-splitting solver for polynomial systems in scalar unknowns.
//!
//! The moves are deliberately few: linear elimination of an unknown whose
//! coefficient is known to be nonzero, `u = 0` for equations that are a
//! power of one unknown, exhaustive root enumeration for `uᵉ·(αu + β) = 0`,
//! and zero/nonzero splits on an unknown that divides an equation. Only the
//! last kind consumes depth; a branch that runs out of moves or depth is
//! reported as open rather than dropped.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::polyring::param::fmt_param_poly;
use crate::polyring::{Monomial, Param, ParamField, ParamMonomial, ParamPoly};

#[derive(Clone, Debug, Default)]
pub struct SolverOptions {
    /// Maximum number of zero/nonzero splits along one branch.
    pub depth: usize,
    /// Unknowns to split on first, in order, whenever they divide an equation.
    pub priority: Vec<Param>,
}

/// A solution family: every unknown is either bound or free.
#[derive(Clone, Debug, Serialize)]
pub struct Family {
    /// Branch conditions in the order they were introduced.
    pub assumptions: Vec<String>,
    pub bindings: BTreeMap<String, String>,
    pub free_params: Vec<String>,
    #[serde(skip)]
    pub values: BTreeMap<Param, ParamField>,
    #[serde(skip)]
    pub nonzero: BTreeSet<Param>,
}

impl Family {
    /// Value of an unknown: its binding, or itself if free.
    pub fn value(&self, u: Param) -> ParamField {
        self.values
            .get(&u)
            .cloned()
            .unwrap_or_else(|| ParamField::param(u))
    }

    /// Applies the bindings to a rational function.
    pub fn apply(&self, f: &ParamField) -> ParamField {
        let mut out = f.clone();
        for (u, v) in &self.values {
            // bindings are fully reduced, so one pass suffices
            out = out
                .substitute_param(*u, v)
                .expect("binding keeps denominators nonzero");
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OpenBranch {
    pub assumptions: Vec<String>,
    pub equations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveOutcome {
    pub families: Vec<Family>,
    pub open: Vec<OpenBranch>,
    pub complete: bool,
}

#[derive(Clone)]
struct Branch {
    eqs: Vec<ParamPoly>,
    values: BTreeMap<Param, ParamField>,
    nonzero: BTreeSet<Param>,
    assumptions: Vec<String>,
    depth_left: usize,
}

/// Solves `eqs = 0` for `unknowns`. Parameters outside `unknowns` are treated
/// as fixed symbols; those in `nonzero` are assumed nonzero.
pub fn solve(
    eqs: Vec<ParamPoly>,
    unknowns: &BTreeSet<Param>,
    nonzero: &BTreeSet<Param>,
    opts: &SolverOptions,
) -> SolveOutcome {
    let mut out = SolveOutcome {
        families: Vec::new(),
        open: Vec::new(),
        complete: true,
    };
    let start = Branch {
        eqs,
        values: BTreeMap::new(),
        nonzero: nonzero.clone(),
        assumptions: Vec::new(),
        depth_left: opts.depth,
    };
    let mut stack = vec![start];
    while let Some(b) = stack.pop() {
        run_branch(b, unknowns, opts, &mut stack, &mut out);
    }
    out.complete = out.open.is_empty();
    out
}

fn is_nonzero_factor(p: &ParamPoly, nonzero: &BTreeSet<Param>) -> bool {
    p.len() == 1
        && p.terms()
            .all(|(m, _)| m.vars().all(|(v, _)| nonzero.contains(&v)))
}

/// Strips nonzero monomial factors and rational content.
fn simplify(p: &ParamPoly, nonzero: &BTreeSet<Param>) -> ParamPoly {
    let content = p.monomial_content();
    let mut strip = ParamMonomial::one();
    for (v, e) in content.vars() {
        if nonzero.contains(&v) {
            strip = strip.mul(&ParamMonomial::var(v, e));
        }
    }
    let q = p.div_monomial(&strip).expect("content divides");
    match q.named_leading_term() {
        Some((_, c)) => {
            let inv = c.recip();
            q.scale(&inv)
        }
        None => q,
    }
}

fn bind(b: &mut Branch, u: Param, r: ParamField) {
    for eq in b.eqs.iter_mut() {
        if eq.degree_in(u) > 0 {
            *eq = eq.substitute_param(u, &r).numer().clone();
        }
    }
    for v in b.values.values_mut() {
        *v = v.substitute_param(u, &r).expect("nonzero denominators");
    }
    b.values.insert(u, r);
}

fn fmt_field(f: &ParamField) -> String {
    f.to_string()
}

/// A linear occurrence `coef·u + rest` with `coef` known to be nonzero.
fn linear_candidate(
    eq: &ParamPoly,
    unknowns: &BTreeSet<Param>,
    nonzero: &BTreeSet<Param>,
) -> Option<(Param, ParamPoly, ParamPoly, bool)> {
    let mut best: Option<(Param, ParamPoly, ParamPoly, bool)> = None;
    for u in eq.params() {
        if !unknowns.contains(&u) || eq.degree_in(u) != 1 {
            continue;
        }
        let parts = eq.univariate(u);
        let coef = parts[1].clone();
        let rational = coef.is_constant();
        if !rational && !is_nonzero_factor(&coef, nonzero) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bu, _, _, br)) => (rational && !br) || (rational == *br && u.name() < bu.name()),
        };
        if better {
            best = Some((u, coef, parts[0].clone(), rational));
        }
    }
    best
}

fn run_branch(
    mut b: Branch,
    unknowns: &BTreeSet<Param>,
    opts: &SolverOptions,
    stack: &mut Vec<Branch>,
    out: &mut SolveOutcome,
) {
    loop {
        let mut eqs: Vec<ParamPoly> = Vec::new();
        for e in &b.eqs {
            if e.is_zero() {
                continue;
            }
            let s = simplify(e, &b.nonzero);
            if !eqs.contains(&s) {
                eqs.push(s);
            }
        }
        b.eqs = eqs;
        if b.eqs.is_empty() {
            out.families.push(finish(&b, unknowns));
            return;
        }
        if b.eqs.iter().any(|e| e.is_constant()) {
            // inconsistent branch
            return;
        }
        // a power of a single unknown
        if let Some(u) = b.eqs.iter().find_map(|e| {
            let (m, _) = e.terms().next()?;
            let vars: Vec<_> = m.vars().collect();
            (e.len() == 1 && vars.len() == 1 && unknowns.contains(&vars[0].0)).then(|| vars[0].0)
        }) {
            bind(&mut b, u, ParamField::zero());
            continue;
        }
        // linear elimination, preferring rational pivots and short equations
        let mut pick: Option<(usize, Param, ParamPoly, ParamPoly, bool)> = None;
        for (i, e) in b.eqs.iter().enumerate() {
            if let Some((u, coef, rest, rational)) = linear_candidate(e, unknowns, &b.nonzero) {
                let better = match &pick {
                    None => true,
                    Some((j, pu, _, _, pr)) => {
                        let key = (!rational, e.len(), u.name());
                        key < (!*pr, b.eqs[*j].len(), pu.name())
                    }
                };
                if better {
                    pick = Some((i, u, coef, rest, rational));
                }
            }
        }
        if let Some((_, u, coef, rest, _)) = pick {
            let r = ParamField::new(-rest, coef).expect("pivot is nonzero");
            bind(&mut b, u, r);
            continue;
        }
        break;
    }

    // designated splits
    for u in &opts.priority {
        if divides_some(&b, *u) && !b.nonzero.contains(u) {
            split(b, *u, stack, out);
            return;
        }
    }
    // exhaustive root enumeration
    for e in &b.eqs {
        for (u, exp) in e.monomial_content().vars() {
            if !unknowns.contains(&u) || b.nonzero.contains(&u) {
                continue;
            }
            let q = e
                .div_monomial(&ParamMonomial::var(u, exp))
                .expect("content divides");
            if q.degree_in(u) != 1 {
                continue;
            }
            let parts = q.univariate(u);
            if !(parts[1].is_constant() || is_nonzero_factor(&parts[1], &b.nonzero)) {
                continue;
            }
            let root =
                ParamField::new(-parts[0].clone(), parts[1].clone()).expect("pivot is nonzero");
            let mut zero = b.clone();
            zero.assumptions.push(format!("{u} = 0"));
            bind(&mut zero, u, ParamField::zero());
            let mut other = b.clone();
            other
                .assumptions
                .push(format!("{u} = {}", fmt_field(&root)));
            bind(&mut other, u, root);
            stack.push(other);
            stack.push(zero);
            return;
        }
    }
    // generic split on the unknown dividing the most equations
    let mut counts: BTreeMap<String, (usize, Param)> = BTreeMap::new();
    for e in &b.eqs {
        for (u, _) in e.monomial_content().vars() {
            if unknowns.contains(&u) && !b.nonzero.contains(&u) {
                counts.entry(u.name().to_string()).or_insert((0, u)).0 += 1;
            }
        }
    }
    let best = counts
        .values()
        .max_by(|a, c| a.0.cmp(&c.0).then(c.1.name().cmp(&a.1.name())))
        .map(|x| x.1);
    match best {
        Some(u) if b.depth_left > 0 => split(b, u, stack, out),
        _ => out.open.push(OpenBranch {
            assumptions: b.assumptions.clone(),
            equations: b.eqs.iter().map(fmt_param_poly).collect(),
        }),
    }
}

fn divides_some(b: &Branch, u: Param) -> bool {
    b.eqs.iter().any(|e| e.monomial_content().exponent(u) > 0)
}

fn split(b: Branch, u: Param, stack: &mut Vec<Branch>, out: &mut SolveOutcome) {
    if b.depth_left == 0 {
        out.open.push(OpenBranch {
            assumptions: b.assumptions.clone(),
            equations: b.eqs.iter().map(fmt_param_poly).collect(),
        });
        return;
    }
    let mut zero = b.clone();
    zero.depth_left -= 1;
    zero.assumptions.push(format!("{u} = 0"));
    bind(&mut zero, u, ParamField::zero());
    let mut nz = b;
    nz.depth_left -= 1;
    nz.assumptions.push(format!("{u} != 0"));
    nz.nonzero.insert(u);
    // explored in the order zero, nonzero
    stack.push(nz);
    stack.push(zero);
}

fn finish(b: &Branch, unknowns: &BTreeSet<Param>) -> Family {
    let mut bindings = BTreeMap::new();
    for (u, v) in &b.values {
        bindings.insert(u.name().to_string(), fmt_field(v));
    }
    let mut free: Vec<String> = unknowns
        .iter()
        .filter(|u| !b.values.contains_key(u))
        .map(|u| u.name().to_string())
        .collect();
    free.sort();
    Family {
        assumptions: b.assumptions.clone(),
        bindings,
        free_params: free,
        values: b.values.clone(),
        nonzero: b.nonzero.clone(),
    }
}

/// Fresh unknowns `{prefix}{i}`.
pub fn unknowns(prefix: &str, n: usize) -> Vec<Param> {
    (0..n)
        .map(|i| Param::new(&format!("{prefix}{i}")).expect("valid name"))
        .collect()
}

/// Unknowns and the polynomial `Σ uᵢⱼ ∂ⁱ λʲ` with `i, j ≤ deg`.
pub fn ansatz(prefix: &str, deg: u16, with_del: bool) -> (Vec<Param>, crate::Poly) {
    use crate::polyring::{LamMonomial, LamVar};
    let mut ps = Vec::new();
    let mut poly = crate::Poly::zero();
    let dmax = if with_del { deg } else { 0 };
    for i in 0..=dmax {
        for j in 0..=deg {
            let name = if with_del {
                format!("{prefix}_{i}{j}")
            } else {
                format!("{prefix}{j}")
            };
            let u = Param::new(&name).expect("valid name");
            ps.push(u);
            let m = LamMonomial::var(LamVar::Del, i).mul(&LamMonomial::var(LamVar::Lam(0), j));
            poly.add_term(m, ParamField::param(u));
        }
    }
    (ps, poly)
}

/// The scalar equations of a polynomial identity: coefficients of every
/// monomial in `∂` and the λ-variables, reduced to their numerators.
pub fn coefficient_equations(p: &crate::Poly) -> Vec<ParamPoly> {
    p.terms()
        .map(|(_, c)| c.numer().clone())
        .filter(|c| !c.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_field;
    use crate::polyring::ParamScope;

    fn eq(s: &str) -> ParamPoly {
        parse_field(s, &ParamScope::open()).unwrap().numer().clone()
    }

    #[test]
    fn linear_system() {
        let u: BTreeSet<Param> = ["u", "v"].iter().map(|n| Param::new(n).unwrap()).collect();
        let out = solve(
            vec![eq("u + v - 3"), eq("u - v - 1")],
            &u,
            &BTreeSet::new(),
            &SolverOptions::default(),
        );
        assert_eq!(out.families.len(), 1);
        assert_eq!(out.families[0].bindings["u"], "2");
        assert_eq!(out.families[0].bindings["v"], "1");
    }

    #[test]
    fn product_needs_a_split() {
        let u: BTreeSet<Param> = ["u", "v"].iter().map(|n| Param::new(n).unwrap()).collect();
        let sys = vec![eq("u*v")];
        let out = solve(sys.clone(), &u, &BTreeSet::new(), &SolverOptions::default());
        assert!(!out.complete);
        let out = solve(
            sys,
            &u,
            &BTreeSet::new(),
            &SolverOptions {
                depth: 1,
                priority: vec![],
            },
        );
        assert!(out.complete);
        assert_eq!(out.families.len(), 2);
    }

    #[test]
    fn root_enumeration() {
        let u: BTreeSet<Param> = ["u"].iter().map(|n| Param::new(n).unwrap()).collect();
        let out = solve(
            vec![eq("u^2 - 2*u")],
            &u,
            &BTreeSet::new(),
            &SolverOptions::default(),
        );
        let mut vals: Vec<_> = out
            .families
            .iter()
            .map(|f| f.bindings["u"].clone())
            .collect();
        vals.sort();
        assert_eq!(vals, ["0", "2"]);
    }
}
