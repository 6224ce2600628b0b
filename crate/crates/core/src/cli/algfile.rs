//! The line-oriented algebra file format.
//!
//! ```text
//! params:
//!   b
//!   c1 nonzero
//! generators:
//!   L M
//! table bracket skew:
//!   L L = (d + 2*x)*L
//!   L M = (d + 2*x + b)*M
//! table circ:
//!   L L = c1*L
//! ```
//!
//! `#` starts a comment. Missing pairs are zero. A `commutative` or `skew`
//! tag is verified on load.

use std::collections::{BTreeMap, BTreeSet};

use crate::conformal::{ConformalAlgebra, LambdaElement, StructureTable, Symmetry};
use crate::error::{Error, Result};
use crate::polyring::parse::{eval_with, ValueOps};
use crate::polyring::{parse_expr, Expr, LamVar, ParamScope, Poly, VarId};

/// A value while evaluating a right-hand side: either a coefficient or a
/// `ℂ[∂,λ]`-combination of generators.
#[derive(Clone)]
enum Val {
    Scalar(Poly),
    Vector(LambdaElement),
}

struct LinearOps;

impl ValueOps<Val> for LinearOps {
    fn scalar(&self, p: Poly) -> Val {
        Val::Scalar(p)
    }
    fn as_poly<'a>(&self, v: &'a Val) -> Option<&'a Poly> {
        match v {
            Val::Scalar(p) => Some(p),
            Val::Vector(_) => None,
        }
    }
    fn neg(&self, v: Val) -> Val {
        match v {
            Val::Scalar(p) => Val::Scalar(-p),
            Val::Vector(e) => Val::Vector(-e),
        }
    }
    fn add(&self, a: Val, b: Val) -> Result<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(p + q)),
            (Val::Vector(e), Val::Vector(f)) => Ok(Val::Vector(e + f)),
            (Val::Scalar(p), v @ Val::Vector(_)) | (v @ Val::Vector(_), Val::Scalar(p))
                if p.is_zero() =>
            {
                Ok(v)
            }
            _ => Err(Error::Invalid(
                "cannot add a bare coefficient to a generator term".into(),
            )),
        }
    }
    fn mul(&self, a: Val, b: Val) -> Result<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(p * q)),
            (Val::Scalar(p), Val::Vector(e)) | (Val::Vector(e), Val::Scalar(p)) => {
                Ok(Val::Vector(e.scale(&p)))
            }
            (Val::Vector(_), Val::Vector(_)) => Err(Error::Invalid(
                "expression is not linear in the generators".into(),
            )),
        }
    }
}

/// Evaluates `src` to `Σ pᵢ·eᵢ`, with `gens` naming the `eᵢ`.
pub fn parse_linear(src: &str, gens: &[String], scope: &ParamScope) -> Result<LambdaElement> {
    let e = parse_expr(src)?;
    let rank = gens.len();
    let mut leaf = |name: &str, _pos: usize| -> Result<Val> {
        if let Some(i) = gens.iter().position(|g| g == name) {
            return Ok(Val::Vector(LambdaElement::basis(rank, i)));
        }
        Ok(Val::Scalar(match scope.resolve(name)? {
            VarId::Param(p) => Poly::param(p),
            other => Poly::var(other.lam_var().expect("lambda variable")),
        }))
    };
    match eval_with(&e, &mut leaf, &LinearOps)? {
        Val::Vector(v) => Ok(v),
        Val::Scalar(p) if p.is_zero() => Ok(LambdaElement::zero(rank)),
        Val::Scalar(_) => Err(Error::Invalid(format!("`{src}` has no generator"))),
    }
}

fn check_generator_name(name: &str) -> Result<()> {
    let ok = matches!(parse_expr(name), Ok(Expr::Ident(ref s, _)) if s == name)
        && LamVar::from_name(name).is_none();
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "`{name}` cannot be used as a generator name"
        )))
    }
}

enum Section {
    None,
    Params,
    Generators,
    Table(String),
}

fn line_err(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Line { .. } => e,
        e => Error::Line {
            line,
            msg: e.to_string(),
        },
    }
}

fn strip_comment(l: &str) -> &str {
    l.split('#').next().unwrap_or("").trim()
}

/// Splits `G H = rhs` into its three parts.
fn split_entry(l: &str) -> Result<(&str, &str, &str)> {
    let (lhs, rhs) = l
        .split_once('=')
        .ok_or_else(|| Error::Invalid("expected `G H = expression`".into()))?;
    let mut it = lhs.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(g), Some(h), None) => Ok((g, h, rhs.trim())),
        _ => Err(Error::Invalid(
            "expected two generator names before `=`".into(),
        )),
    }
}

/// Parses an algebra file.
pub fn parse_algebra(src: &str) -> Result<ConformalAlgebra> {
    let mut section = Section::None;
    let mut params: Vec<(String, bool, usize)> = Vec::new();
    let mut gens: Vec<String> = Vec::new();
    // table name -> (symmetry, header line, entries (g, h, rhs, line))
    let mut tables: BTreeMap<String, (Symmetry, usize, Vec<(String, String, String, usize)>)> =
        BTreeMap::new();

    for (n, raw) in src.lines().enumerate() {
        let n = n + 1;
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        let err = line_err(n);
        if l == "params:" {
            section = Section::Params;
            continue;
        }
        if l == "generators:" {
            section = Section::Generators;
            continue;
        }
        if let Some(head) = l.strip_prefix("table ") {
            let head = head
                .strip_suffix(':')
                .ok_or_else(|| err(Error::Invalid("table header must end with `:`".into())))?;
            let mut it = head.split_whitespace();
            let name = it
                .next()
                .ok_or_else(|| err(Error::Invalid("table needs a name".into())))?;
            let sym = match it.next() {
                None => Symmetry::None,
                Some("commutative") => Symmetry::Commutative,
                Some("skew") => Symmetry::Skew,
                Some(t) => return Err(err(Error::Invalid(format!("unknown table tag `{t}`")))),
            };
            if it.next().is_some() {
                return Err(err(Error::Invalid(
                    "unexpected text after table tag".into(),
                )));
            }
            if tables
                .insert(name.to_string(), (sym, n, Vec::new()))
                .is_some()
            {
                return Err(err(Error::Invalid(format!("table `{name}` defined twice"))));
            }
            section = Section::Table(name.to_string());
            continue;
        }
        match &section {
            Section::None => return Err(err(Error::Invalid("text outside of any section".into()))),
            Section::Params => {
                let mut it = l.split_whitespace();
                let name = it.next().expect("nonempty line");
                let nonzero = match it.next() {
                    None => false,
                    Some("nonzero") => true,
                    Some(t) => {
                        return Err(err(Error::Invalid(format!("unknown parameter flag `{t}`"))))
                    }
                };
                if it.next().is_some() {
                    return Err(err(Error::Invalid("one parameter per line".into())));
                }
                params.push((name.to_string(), nonzero, n));
            }
            Section::Generators => {
                for g in l.split_whitespace() {
                    check_generator_name(g).map_err(&err)?;
                    if gens.iter().any(|h| h == g) {
                        return Err(err(Error::Invalid(format!("generator `{g}` listed twice"))));
                    }
                    gens.push(g.to_string());
                }
            }
            Section::Table(name) => {
                let (g, h, rhs) = split_entry(l).map_err(&err)?;
                let entries = &mut tables.get_mut(name).expect("current table").2;
                entries.push((g.to_string(), h.to_string(), rhs.to_string(), n));
            }
        }
    }

    if gens.is_empty() {
        return Err(Error::Invalid("no generators declared".into()));
    }
    let mut alg = ConformalAlgebra::new(gens.clone());
    for (name, nonzero, n) in &params {
        if gens.contains(name) {
            return Err(line_err(*n)(Error::Invalid(format!(
                "`{name}` is both a parameter and a generator"
            ))));
        }
        alg.declare_param(name, *nonzero).map_err(line_err(*n))?;
    }
    let scope = ParamScope::declared(params.iter().map(|p| p.0.clone()));
    let idx = |g: &str, n: usize| {
        gens.iter()
            .position(|x| x == g)
            .ok_or_else(|| line_err(n)(Error::Invalid(format!("unknown generator `{g}`"))))
    };
    for (name, (sym, header, entries)) in tables {
        let mut t = StructureTable::zero(gens.len());
        let mut seen = BTreeSet::new();
        for (g, h, rhs, n) in entries {
            let (i, j) = (idx(&g, n)?, idx(&h, n)?);
            if !seen.insert((i, j)) {
                return Err(line_err(n)(Error::Invalid(format!(
                    "pair ({g}, {h}) appears twice"
                ))));
            }
            let v = parse_linear(&rhs, &gens, &scope).map_err(line_err(n))?;
            if v.lam_vars()
                .iter()
                .any(|x| !matches!(x, LamVar::Del | LamVar::Lam(0)))
            {
                return Err(line_err(n)(Error::Invalid(
                    "table entries may only use d and x".into(),
                )));
            }
            t.set_entry(i, j, v);
        }
        let t = t
            .with_symmetry(sym, &gens, &name)
            .map_err(line_err(header))?;
        alg.set_table(&name, t)?;
    }
    alg.validate()?;
    Ok(alg)
}

/// Canonical text of an algebra; `parse_algebra` of it gives the algebra back.
pub fn print_algebra(alg: &ConformalAlgebra) -> String {
    let mut out = String::new();
    if !alg.params().is_empty() {
        out.push_str("params:\n");
        for d in alg.params() {
            out.push_str(&format!(
                "  {}{}\n",
                d.name,
                if d.nonzero { " nonzero" } else { "" }
            ));
        }
    }
    out.push_str("generators:\n");
    out.push_str(&format!("  {}\n", alg.generators().join(" ")));
    let names = alg.generators();
    for (key, t) in alg.tables() {
        match t.symmetry() {
            Symmetry::None => out.push_str(&format!("table {key}:\n")),
            s => out.push_str(&format!("table {key} {}:\n", s.tag())),
        }
        for i in 0..alg.rank() {
            for j in 0..alg.rank() {
                let e = t.entry(i, j);
                if !e.is_zero() {
                    out.push_str(&format!(
                        "  {} {} = {}\n",
                        names[i],
                        names[j],
                        e.display(names)
                    ));
                }
            }
        }
    }
    out
}

/// Parses a file of lines `G = expression`, one per generator, into the rows
/// of a matrix: row `i` holds the coefficients of the line for generator `i`.
pub fn parse_matrix(src: &str, gens: &[String]) -> Result<Vec<Vec<Poly>>> {
    let mut rows: Vec<Option<Vec<Poly>>> = vec![None; gens.len()];
    for (n, raw) in src.lines().enumerate() {
        let n = n + 1;
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        let err = line_err(n);
        let (g, rhs) = l
            .split_once('=')
            .ok_or_else(|| err(Error::Invalid("expected `G = expression`".into())))?;
        let g = g.trim();
        let i = gens
            .iter()
            .position(|x| x == g)
            .ok_or_else(|| err(Error::Invalid(format!("unknown generator `{g}`"))))?;
        if rows[i].is_some() {
            return Err(err(Error::Invalid(format!("generator `{g}` given twice"))));
        }
        let v = parse_linear(rhs.trim(), gens, &ParamScope::open()).map_err(&err)?;
        rows[i] = Some(v.0);
    }
    rows.into_iter()
        .zip(gens)
        .map(|(r, g)| r.ok_or_else(|| Error::Invalid(format!("no line for generator `{g}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const VIR: &str = "\
# Virasoro with a scalar product
params:
  c
generators:
  L
table bracket skew:
  L L = (d + 2*x)*L
table circ commutative:
  L L = c*L
";

    #[test]
    fn round_trip() {
        let a = parse_algebra(VIR).unwrap();
        let printed = print_algebra(&a);
        assert_eq!(parse_algebra(&printed).unwrap(), a);
        assert_eq!(print_algebra(&parse_algebra(&printed).unwrap()), printed);
        assert!(printed.starts_with("params:\n  c\n"));
    }

    #[test]
    fn rejects_bad_input() {
        let bad_tag = VIR.replace("(d + 2*x)*L", "(d + x)*L");
        assert!(matches!(
            parse_algebra(&bad_tag),
            Err(Error::Line { line: 6, .. })
        ));
        let undeclared = VIR.replace("c*L", "k*L");
        assert!(matches!(
            parse_algebra(&undeclared),
            Err(Error::Line { line: 9, .. })
        ));
        let nonlinear = VIR.replace("c*L", "L*L");
        assert!(parse_algebra(&nonlinear).is_err());
        let twice = format!("{VIR}  L L = L\n");
        assert!(parse_algebra(&twice).is_err());
        assert!(parse_algebra("generators:\n  d\n").is_err());
    }

    #[test]
    fn linear_combinations() {
        let gens = vec!["L".to_string(), "M".to_string()];
        let v = parse_linear("L - (c2/c1*d - b*c2/c1)*M", &gens, &ParamScope::open()).unwrap();
        assert_eq!(v.0[0], Poly::int(1));
        let m = parse_matrix("L = L\nM = c3*M\n", &gens).unwrap();
        assert_eq!(m[1][1], crate::polyring::parse_poly("c3").unwrap());
        assert!(parse_matrix("L = L\n", &gens).is_err());
    }
}
