//! Command-line front end. [`run`] returns the process exit code:
//! 0 when everything checked passes, 1 when a check fails, 2 on usage,
//! parse or input errors.

pub mod algfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::axioms::*;
use crate::conformal::{ConformalAlgebra, Endomorphism};
use crate::constructions::{change_basis, commutator, derivation_product, tensor, BasisChange};
use crate::error::{Error, Result};
use crate::identities::{
    check_identities_noncommutative, check_nth_transposed_leibniz, check_theorem_identities,
};
use crate::polyring::{parse_field, ParamField, ParamScope};
use crate::wab;

pub use algfile::{parse_algebra, parse_linear, parse_matrix, print_algebra};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Suite names accepted by `--suites`.
pub const SUITES: [&str; 21] = [
    "assoc",
    "comm",
    "lie",
    "left-symmetric",
    "novikov",
    "leibniz",
    "tl",
    "tl-alt",
    "nth-tl",
    "tpca",
    "nc-tpca",
    "pca",
    "np",
    "prelie-commutative",
    "prelie-poisson",
    "diff-np",
    "assoc-remarks",
    "identities",
    "identities-nc",
    "circ-hom-lie",
    "compat",
];

#[derive(Parser, Debug)]
#[command(
    name = "tpca",
    version,
    about = "Exact checks and constructions for conformal algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    report: Format,
    /// Write the report (or, for constructions, the resulting algebra) here.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run checker suites on an algebra file.
    Check {
        file: PathBuf,
        /// Comma-separated suite names.
        #[arg(long, default_value = "tpca")]
        suites: String,
    },
    /// Built-in catalog of compatible structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Tensor product of two TPCAs.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        /// Suites to run on the result.
        #[arg(long)]
        and_check: Option<String>,
    },
    /// Change of basis; each line `G = ...` gives a new generator in terms of the old ones.
    Transform {
        file: PathBuf,
        matrix: PathBuf,
        #[arg(long)]
        and_check: Option<String>,
    },
    /// Adds `star = circ(a, D b)` and its commutator; each line `G = ...` gives `D(G)`.
    Derive {
        file: PathBuf,
        matrix: PathBuf,
        #[arg(long)]
        and_check: Option<String>,
    },
    /// The W(a,b) classification pipeline.
    Wab {
        #[command(subcommand)]
        action: WabAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List catalog ids.
    List,
    /// Print an entry as an algebra file.
    Show { id: String },
    /// Run the suites appropriate to an entry.
    Check {
        id: String,
        #[arg(long)]
        suites: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
struct WabParams {
    /// `a`, a rational number or expression in parameters.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// `b`, a rational number or expression in parameters.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
}

#[derive(Subcommand, Debug)]
enum WabAction {
    /// Nonzero coordinates of associativity and transposed Leibniz.
    Residuals {
        /// Catalog id (`2.3`, `case-2.3`, `NF4`) or an algebra file with a `circ` table on L, M.
        #[arg(long)]
        candidate: String,
        #[command(flatten)]
        params: WabParams,
    },
    /// Solve for products. Without `--a` the reduced system is solved.
    Solve {
        #[arg(long, default_value_t = 4)]
        degree: u16,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Impose `c0 = 0` before solving the reduced system.
        #[arg(long)]
        c0_zero: bool,
        #[command(flatten)]
        params: WabParams,
    },
    /// Basis changes to the normal forms.
    NormalForms,
    /// Shape reduction at a = 2 and triviality for the given a, b.
    #[command(name = "lemmaA")]
    LemmaA {
        #[arg(long, default_value_t = 2)]
        degree: u16,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[command(flatten)]
        params: WabParams,
    },
}

/// A finished report: its JSON value, text rendering and verdict.
struct Outcome {
    json: Value,
    text: String,
    pass: bool,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ConformalAlgebra> {
    parse_algebra(&read(path)?).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn field(s: &str) -> Result<ParamField> {
    parse_field(s, &ParamScope::open())
}

/// Runs one named suite on `alg`.
pub fn run_suite(alg: &ConformalAlgebra, name: &str) -> Result<CheckReport> {
    let (c, b, s) = ("circ", "bracket", "star");
    match name {
        "assoc" => check_associative(alg, c),
        "comm" => check_commutative(alg, c),
        "lie" => check_lie(alg, b),
        "left-symmetric" => check_left_symmetric(alg, c),
        "novikov" => check_novikov(alg, c),
        "leibniz" => check_poisson_leibniz(alg, c, b),
        "tl" => check_transposed_leibniz(alg, c, b),
        "tl-alt" => check_transposed_leibniz_alt(alg, c, b),
        "nth-tl" => check_nth_transposed_leibniz(alg, c, b, 3),
        "tpca" => check_tpca(alg, c, b),
        "nc-tpca" => check_nc_tpca(alg, c, b),
        "pca" => check_pca(alg, c, b),
        "np" => check_np(alg, c, s),
        "prelie-commutative" => check_prelie_commutative_algebra(alg, c, s),
        "prelie-poisson" => check_prelie_poisson_algebra(alg, c, s),
        "diff-np" => check_diff_np_algebra(alg, c, s),
        "assoc-remarks" => check_assoc_remarks(alg, c),
        "identities" => check_theorem_identities(alg, c, b),
        "identities-nc" => check_identities_noncommutative(alg, c, b),
        "circ-hom-lie" => {
            // α_h for every generator h must be a homomorphism of the bracket
            let mut r = CheckReport::new("circ-hom-lie");
            for i in 0..alg.rank() {
                let alpha = crate::constructions::alpha_h(alg, c, &alg.basis(i))?;
                r.absorb(check_hom_lie(alg, b, &alpha)?);
            }
            Ok(r)
        }
        "compat" => {
            // the criterion is stated for commutative associative ∘ with a Lie bracket
            let mut r = CheckReport::new("compat");
            r.absorb(check_commutative(alg, c)?);
            r.absorb(check_associative(alg, c)?);
            r.absorb(check_lie(alg, b)?);
            let cr = crate::identities::check_compatibility_criterion(alg, c, b)?;
            r.pass &= cr.agreement;
            Ok(r)
        }
        other => Err(Error::Invalid(format!(
            "unknown suite `{other}`; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

fn suite_list(s: &str) -> Result<Vec<String>> {
    let v: Vec<String> = s
        .split(',')
        .map(|x| x.trim().to_string())
        .filter(|x| !x.is_empty())
        .collect();
    if v.is_empty() {
        return Err(Error::Invalid("no suites requested".into()));
    }
    for x in &v {
        if !SUITES.contains(&x.as_str()) {
            return Err(Error::Invalid(format!(
                "unknown suite `{x}`; expected one of {}",
                SUITES.join(", ")
            )));
        }
    }
    Ok(v)
}

fn suites_text(reports: &[CheckReport]) -> String {
    let mut t = String::new();
    for r in reports {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let note = if r.vacuous {
            " (vacuous: precondition does not hold)"
        } else {
            ""
        };
        t.push_str(&format!("{verdict} {}{note}\n", r.suite));
        for l in r.failures() {
            t.push_str(&format!(
                "  {} ({}): {}\n",
                l.law,
                l.tuple.join(", "),
                l.residual
            ));
        }
    }
    t
}

fn run_suites(
    alg: &ConformalAlgebra,
    names: &[String],
    timings: &mut Vec<(String, f64)>,
) -> Result<Vec<CheckReport>> {
    names
        .iter()
        .map(|n| {
            let t = Instant::now();
            let r = run_suite(alg, n);
            timings.push((n.clone(), t.elapsed().as_secs_f64()));
            r
        })
        .collect()
}

fn suites_outcome(
    command: &str,
    inputs: Value,
    reports: Vec<CheckReport>,
    header: String,
) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    Outcome {
        text: format!("{header}{}", suites_text(&reports)),
        json: json!({ "command": command, "inputs": inputs, "suites": reports, "pass": pass }),
        pass,
    }
}

/// Catalog ids also accept `case-` prefixes and lower-case normal forms.
pub fn resolve_catalog_id(s: &str) -> Option<&'static str> {
    let s = s.strip_prefix("case-").unwrap_or(s);
    wab::CATALOG_IDS
        .iter()
        .copied()
        .find(|id| id.eq_ignore_ascii_case(s))
}

fn catalog_by_name(s: &str) -> Result<(&'static str, ConformalAlgebra)> {
    let id = resolve_catalog_id(s).ok_or_else(|| Error::UnknownCatalogId(s.to_string()))?;
    Ok((id, wab::catalog(id)?))
}

/// Suites run by `catalog check` when none are given.
pub fn default_catalog_suites(id: &str) -> &'static str {
    match id {
        "vir-c" => "assoc,comm,lie,tpca,identities",
        _ => "assoc,lie,tl,nc-tpca,identities-nc",
    }
}

fn construction_outcome(
    command: &str,
    inputs: Value,
    alg: &ConformalAlgebra,
    and_check: &Option<String>,
    common: &Common,
    timings: &mut Vec<(String, f64)>,
) -> Result<Outcome> {
    let text_alg = print_algebra(alg);
    let reports = match and_check {
        Some(s) => run_suites(alg, &suite_list(s)?, timings)?,
        None => Vec::new(),
    };
    let pass = reports.iter().all(|r| r.pass);
    let mut json = json!({ "command": command, "inputs": inputs, "suites": reports, "pass": pass });
    let mut text = String::new();
    match &common.output {
        Some(p) => {
            std::fs::write(p, &text_alg)
                .map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
            json["written"] = json!(p.display().to_string());
            text.push_str(&format!("wrote {}\n", p.display()));
        }
        None => {
            json["algebra"] = json!(text_alg);
            text.push_str(&text_alg);
        }
    }
    text.push_str(&suites_text(&reports));
    Ok(Outcome { json, text, pass })
}

fn wab_ab(
    p: &WabParams,
    default_a: &str,
    default_b: &str,
) -> Result<(ParamField, ParamField, Value)> {
    let a = p.a.as_deref().unwrap_or(default_a);
    let b = p.b.as_deref().unwrap_or(default_b);
    Ok((field(a)?, field(b)?, json!({ "a": a, "b": b })))
}

fn run_wab(action: &WabAction) -> Result<Outcome> {
    match action {
        WabAction::Residuals { candidate, params } => {
            let oct = match resolve_catalog_id(candidate) {
                Some("vir-c") => {
                    return Err(Error::Invalid("`vir-c` is not a product on L, M".into()))
                }
                Some(id) => wab::catalog_octuple(id)?,
                None => {
                    let alg = load(Path::new(candidate))?;
                    if alg.generators() != ["L", "M"] {
                        return Err(Error::Invalid("candidate must have generators L M".into()));
                    }
                    wab::CandidateOctuple::from_table(alg.table("circ")?)?
                }
            };
            let default_a = if resolve_catalog_id(candidate) == Some("1") {
                "a"
            } else {
                "2"
            };
            let (a, b, mut inputs) = wab_ab(params, default_a, "b")?;
            inputs["candidate"] = json!(candidate);
            let sys = wab::residual_system(&oct, &a, &b)?;
            let mut text = format!(
                "{} coordinates checked, {} nonzero\n",
                sys.checked,
                sys.entries.len()
            );
            for e in &sys.entries {
                text.push_str(&format!("  {} = {}\n", e.label, e.residual));
            }
            let pass = sys.is_empty();
            Ok(Outcome {
                json: json!({ "command": "wab residuals", "inputs": inputs, "result": sys, "pass": pass }),
                text,
                pass,
            })
        }
        WabAction::Solve {
            degree,
            depth,
            c0_zero,
            params,
        } => {
            if params.a.is_none() {
                if params.b.is_some() {
                    return Err(Error::Invalid("--b needs --a".into()));
                }
                let r = wab::solve_reduced(*degree, *depth, *c0_zero)?;
                let mut text = format!(
                    "reduced system, degree {degree}, depth {depth}: {} families, {} open branches\n",
                    r.families.len(),
                    r.open.len()
                );
                for f in &r.families {
                    text.push_str(&format!(
                        "  {}: p = {}, s = {}, l = {}, c0 = {}  [{}]\n",
                        f.shape,
                        f.p,
                        f.s,
                        f.l,
                        f.c0,
                        f.family.assumptions.join(", ")
                    ));
                }
                open_text(&mut text, &r.open);
                let pass = r.complete && r.verified;
                return Ok(Outcome {
                    json: json!({
                        "command": "wab solve",
                        "inputs": { "degree": degree, "depth": depth, "c0_zero": c0_zero },
                        "result": r,
                        "pass": pass,
                    }),
                    text,
                    pass,
                });
            }
            if *c0_zero {
                return Err(Error::Invalid(
                    "--c0-zero applies to the reduced system only".into(),
                ));
            }
            let (a, b, mut inputs) = wab_ab(params, "2", "b")?;
            inputs["degree"] = json!(degree);
            inputs["depth"] = json!(depth);
            let r = wab::solve_full(&a, &b, *degree, *depth)?;
            let mut text = format!(
                "full system, degree {degree}, depth {depth}: {} families, {} open branches\n",
                r.families.len(),
                r.open.len()
            );
            for f in &r.families {
                let assumed = if f.assumptions.is_empty() {
                    "no assumptions".into()
                } else {
                    f.assumptions.join(", ")
                };
                text.push_str(&format!("  [{assumed}]\n"));
                let nonzero: Vec<_> = f.bindings.iter().filter(|(_, v)| *v != "0").collect();
                if nonzero.is_empty() && f.free_params.is_empty() {
                    text.push_str("    zero product\n");
                }
                for (k, v) in nonzero {
                    text.push_str(&format!("    {k} = {v}\n"));
                }
                if !f.free_params.is_empty() {
                    text.push_str(&format!("    free: {}\n", f.free_params.join(", ")));
                }
            }
            open_text(&mut text, &r.open);
            let pass = r.complete;
            Ok(Outcome {
                json: json!({ "command": "wab solve", "inputs": inputs, "result": r, "pass": pass }),
                text,
                pass,
            })
        }
        WabAction::NormalForms => {
            let r = wab::verify_normal_forms()?;
            let mut text = String::new();
            for c in &r {
                let ok = c.equal && c.target_passes;
                text.push_str(&format!(
                    "{} {} -> {}\n",
                    if ok { "PASS" } else { "FAIL" },
                    c.case,
                    c.target
                ));
            }
            let pass = r.iter().all(|c| c.equal && c.target_passes);
            Ok(Outcome {
                json: json!({ "command": "wab normal-forms", "inputs": {}, "result": r, "pass": pass }),
                text,
                pass,
            })
        }
        WabAction::LemmaA {
            degree,
            depth,
            params,
        } => {
            let (a, b, mut inputs) = wab_ab(params, "3", "1")?;
            inputs["degree"] = json!(degree);
            inputs["depth"] = json!(depth);
            let r = wab::verify_lemma_a(3, &a, &b, *degree, *depth)?;
            let text = format!(
                "{} shape reduction at a = 2\n{} only the zero product at a = {}, b = {}\n",
                if r.shape_reduces { "PASS" } else { "FAIL" },
                if r.nonspecial_zero_only {
                    "PASS"
                } else {
                    "FAIL"
                },
                inputs["a"].as_str().unwrap_or_default(),
                inputs["b"].as_str().unwrap_or_default(),
            );
            let pass = r.pass;
            Ok(Outcome {
                json: json!({ "command": "wab lemmaA", "inputs": inputs, "result": r, "pass": pass }),
                text,
                pass,
            })
        }
    }
}

fn open_text(text: &mut String, open: &[crate::solver::OpenBranch]) {
    for o in open {
        text.push_str(&format!(
            "  open [{}]: {} equations left\n",
            o.assumptions.join(", "),
            o.equations.len()
        ));
    }
}

fn dispatch(cli: &Cli, timings: &mut Vec<(String, f64)>) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.cmd {
        Cmd::Check { file, suites } => {
            let names = suite_list(suites)?;
            let alg = load(file)?;
            let reports = run_suites(&alg, &names, timings)?;
            let inputs = json!({ "file": file.display().to_string(), "suites": names });
            Ok(suites_outcome("check", inputs, reports, String::new()))
        }
        Cmd::Catalog { action } => match action {
            CatalogAction::List => {
                let text = wab::CATALOG_IDS
                    .iter()
                    .map(|id| format!("{id}\n"))
                    .collect();
                Ok(Outcome {
                    json: json!({ "command": "catalog list", "inputs": {}, "result": wab::CATALOG_IDS, "pass": true }),
                    text,
                    pass: true,
                })
            }
            CatalogAction::Show { id } => {
                let (id, alg) = catalog_by_name(id)?;
                let text = print_algebra(&alg);
                Ok(Outcome {
                    json: json!({ "command": "catalog show", "inputs": { "id": id }, "algebra": text, "pass": true }),
                    text,
                    pass: true,
                })
            }
            CatalogAction::Check { id, suites } => {
                let (id, alg) = catalog_by_name(id)?;
                let names = suite_list(suites.as_deref().unwrap_or(default_catalog_suites(id)))?;
                let reports = run_suites(&alg, &names, timings)?;
                let mut header = String::new();
                if id == "2.1" || id == "NF1" {
                    let comm = wab::commutativity_predicate(&alg)?;
                    header = format!(
                        "note: circ is {}commutative for generic s\n",
                        if comm { "" } else { "not " }
                    );
                }
                Ok(suites_outcome(
                    "catalog check",
                    json!({ "id": id, "suites": names }),
                    reports,
                    header,
                ))
            }
        },
        Cmd::Tensor {
            first,
            second,
            and_check,
        } => {
            let out = tensor(&load(first)?, &load(second)?)?;
            let inputs = json!({ "first": first.display().to_string(), "second": second.display().to_string() });
            construction_outcome("tensor", inputs, &out, and_check, common, timings)
        }
        Cmd::Transform {
            file,
            matrix,
            and_check,
        } => {
            let alg = load(file)?;
            let rows = parse_matrix(&read(matrix)?, alg.generators())?;
            let bc = BasisChange::new(rows)?;
            let mut out = change_basis(&alg, &bc)?;
            declare_new_params(&mut out)?;
            let inputs = json!({ "file": file.display().to_string(), "matrix": matrix.display().to_string() });
            construction_outcome("transform", inputs, &out, and_check, common, timings)
        }
        Cmd::Derive {
            file,
            matrix,
            and_check,
        } => {
            let mut alg = load(file)?;
            let rows = parse_matrix(&read(matrix)?, alg.generators())?;
            let images: Vec<_> = rows
                .into_iter()
                .map(crate::conformal::LambdaElement)
                .collect();
            let d = Endomorphism::from_images(&images)?;
            let star = derivation_product(&alg, "circ", &d)?;
            alg.set_table("star", star)?;
            let br = commutator(&alg, "star")?;
            alg.set_table("commutator", br)?;
            declare_new_params(&mut alg)?;
            let inputs = json!({ "file": file.display().to_string(), "matrix": matrix.display().to_string() });
            construction_outcome("derive", inputs, &alg, and_check, common, timings)
        }
        Cmd::Wab { action } => run_wab(action),
    }
}

/// Declares parameters introduced by a matrix file and drops ones that no
/// longer occur.
fn declare_new_params(alg: &mut ConformalAlgebra) -> Result<()> {
    alg.retain_used_params();
    let mut used = std::collections::BTreeSet::new();
    for t in alg.tables().values() {
        used.extend(t.params().into_iter().map(|p| p.name().to_string()));
    }
    for name in used {
        alg.declare_param(&name, false)?;
    }
    alg.validate()
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut timings = Vec::new();
    let started = Instant::now();
    let outcome = match dispatch(&cli, &mut timings) {
        Ok(o) => o,
        Err(e) => {
            if cli.common.report == Format::Json {
                let v = json!({ "command": command_name(&cli.cmd), "error": e.to_string(), "pass": false });
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            }
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let Outcome {
        mut json,
        text,
        pass,
    } = outcome;
    if cli.common.timings {
        let mut t = serde_json::Map::new();
        for (k, v) in timings {
            t.insert(k, json!(v));
        }
        t.insert("total".into(), json!(started.elapsed().as_secs_f64()));
        json["timings"] = Value::Object(t);
    }
    let rendered = match cli.common.report {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json).expect("serializable")
        ),
        Format::Text => {
            let mut s = text;
            if let Some(t) = json.get("timings") {
                s.push_str(&format!("timings: {t}\n"));
            }
            s
        }
    };
    // constructions use -o for the algebra; everything else for the report
    let is_construction = matches!(
        cli.cmd,
        Cmd::Tensor { .. } | Cmd::Transform { .. } | Cmd::Derive { .. }
    );
    let written = match (&cli.common.output, is_construction) {
        (Some(p), false) => std::fs::write(p, rendered.as_bytes()),
        _ => out.write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Check { .. } => "check",
        Cmd::Catalog { action } => match action {
            CatalogAction::List => "catalog list",
            CatalogAction::Show { .. } => "catalog show",
            CatalogAction::Check { .. } => "catalog check",
        },
        Cmd::Tensor { .. } => "tensor",
        Cmd::Transform { .. } => "transform",
        Cmd::Derive { .. } => "derive",
        Cmd::Wab { action } => match action {
            WabAction::Residuals { .. } => "wab residuals",
            WabAction::Solve { .. } => "wab solve",
            WabAction::NormalForms => "wab normal-forms",
            WabAction::LemmaA { .. } => "wab lemmaA",
        },
    }
}
