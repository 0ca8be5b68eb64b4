use std::fmt;
use std::io::Read;

use antipode_core::document::{BackendMode, LoadedSpec, SpecDocument};
use antipode_core::families::{
    fibonacci, group_preset, regular_module, taft_family, uqg_family, uqsl2_family, vecg_family, FamilyInstance,
    Lambda, MValue, RootSystemData, TorusPoint, UqgSpectrum,
};
use antipode_core::grothendieck::verify_fusion;
use antipode_core::modcat::{dimension_identity, verify_module};
use antipode_core::oracle::{
    finite_order_spectrum, radical_report, taft_algebra, taft_idempotents, taft_simples, uqsl2_algebra,
    uqsl2_simples, validate_cartan, SimpleModule, StructureAlgebra,
};
use antipode_core::pivotalization::{char_poly_pivotalized, from_matched_pivotal, PivotalizationData};
use antipode_core::report::Report;
use antipode_core::scalar::literal::{parse_cyc, parse_factored, torus_rank};
use antipode_core::scalar::{CycField, CycNum, FactoredValue, NumericScalar};
use antipode_core::spectrum::{
    char_poly_s2, check_eigenvector, dimension_eigenspace, lambda_limit, lift_to_ratfunc, matched_checks,
    power_of_polynomial, render_polynomial, select_m, select_m_symbolic, symbolic_context, LambdaLimit,
};
use antipode_core::Error;
use num_complex::Complex64;
use serde_json::json;

use crate::output::{render_reports, render_spectrum};
use crate::{
    AlgebraArgs, AlgebraKind, CharpolyArgs, Command, FamilyCommand, Limit, OracleCommand, PivotalizeArgs, RunArgs,
    SpecArgs,
};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
}

impl CliError {
    /// 1 for well-formed data failing a check, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

pub fn dispatch(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Verify(a) => verify(&a),
        Command::SolveM(a) => solve_m(&a),
        Command::Charpoly(a) => {
            let spec = read_spec(&a.spec.spec)?;
            charpoly(&spec, &a).map(Output::ok)
        }
        Command::Pivotalize(a) => pivotalize(&a),
        Command::Family(f) => family(f),
        Command::Oracle(o) => oracle(o),
    }
}

fn read_spec(path: &str) -> CliResult<LoadedSpec> {
    let mut src = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut src).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
    } else {
        src = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    }
    Ok(SpecDocument::from_json(&src)?.load()?)
}

/// Splits `a, b, c` (optionally bracketed) into literals.
fn split_list(src: &str) -> Vec<String> {
    src.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|s| s.trim().trim_matches('"').to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_cyc_list(src: &str, field: &CycField) -> CliResult<Vec<CycNum>> {
    Ok(split_list(src).iter().map(|s| parse_cyc(s, field)).collect::<Result<_, _>>()?)
}

fn parse_m_list(src: &str, field: &CycField) -> CliResult<MValue> {
    let items = split_list(src);
    let rank = items.iter().map(|s| torus_rank(s)).collect::<Result<Vec<_>, _>>()?.into_iter().max().unwrap_or(0);
    if rank == 0 {
        Ok(MValue::Exact(items.iter().map(|s| parse_cyc(s, field)).collect::<Result<_, _>>()?))
    } else {
        Ok(MValue::Symbolic(items.iter().map(|s| parse_factored(s, field, rank)).collect::<Result<_, _>>()?))
    }
}

enum MChoice {
    Exact(Vec<CycNum>),
    Symbolic(Vec<FactoredValue>),
    Numeric(Vec<NumericScalar>),
}

/// The m-vector from `--m`, the input file, or a one-dimensional eigenspace,
/// validated against the eigen-condition.
fn resolve_m(spec: &LoadedSpec, m_override: Option<&str>) -> CliResult<MChoice> {
    let given = match m_override {
        Some(s) => Some(parse_m_list(s, &spec.field)?),
        None => spec.m.clone(),
    };
    match spec.mode {
        BackendMode::Cyclotomic => {
            let (basis, k) = dimension_eigenspace(&spec.fusion, &spec.module, &spec.field)?;
            match given {
                Some(MValue::Exact(m)) => Ok(MChoice::Exact(select_m(&spec.fusion, &spec.module, &basis, Some(m))?)),
                Some(MValue::Symbolic(m)) => {
                    Ok(MChoice::Symbolic(select_m_symbolic(&spec.fusion, &spec.module, k, m)?))
                }
                Some(MValue::Unmatched(r)) => Err(CliError::Input(r)),
                None => Ok(MChoice::Exact(select_m(&spec.fusion, &spec.module, &basis, None)?)),
            }
        }
        BackendMode::Numeric => {
            let f = spec.numeric_fusion();
            let (basis, _) = dimension_eigenspace(&f, &spec.module, &spec.tolerance)?;
            let candidate = match given {
                Some(MValue::Exact(m)) => Some(spec.to_numeric(&m)),
                Some(_) => return Err(CliError::Input("numeric backend needs a constant m-vector".into())),
                None => None,
            };
            Ok(MChoice::Numeric(select_m(&f, &spec.module, &basis, candidate)?))
        }
    }
}

fn charpoly(spec: &LoadedSpec, a: &CharpolyArgs) -> CliResult<String> {
    let (json_out, summary) = (a.spec.json, a.summary);
    let m = resolve_m(spec, a.m.as_deref())?;
    if (a.at.is_some() || a.limit.is_some()) && !matches!(m, MChoice::Symbolic(_)) {
        return Err(CliError::Input("--at and --limit apply to symbolic m-vectors".into()));
    }
    Ok(match m {
        MChoice::Exact(m) => {
            let s = char_poly_s2(&spec.fusion, &spec.module, &m)?;
            render_spectrum("exact", &s, json_out, summary, vec![])
        }
        MChoice::Numeric(m) => {
            let s = char_poly_s2(&spec.numeric_fusion(), &spec.module, &m)?;
            render_spectrum("numeric", &s, json_out, summary, vec![])
        }
        MChoice::Symbolic(m) => {
            let s = char_poly_s2(&spec.fusion, &spec.module, &m)?;
            if let Some(at) = &a.at {
                let point = parse_cyc_list(at, &spec.field)?;
                if point.len() != spec.torus_rank {
                    return Err(CliError::Input(format!(
                        "--at needs {} values, got {}",
                        spec.torus_rank,
                        point.len()
                    )));
                }
                let exact = s.try_map(|v| v.specialize(&point))?;
                render_spectrum("exact", &exact, json_out, summary, vec![])
            } else if let Some(limit) = a.limit {
                let which = match limit {
                    Limit::Zero => LambdaLimit::Zero,
                    Limit::Infinity => LambdaLimit::Infinity,
                };
                let lim = lambda_limit(&s, which)?;
                let extra = match power_of_polynomial(&lim) {
                    Some((p, e)) => vec![("polynomial".to_string(), json!(format!("({})^{e}", render_polynomial(&p))))],
                    None => vec![],
                };
                render_spectrum("exact", &lim, json_out, summary, extra)
            } else {
                render_spectrum("symbolic", &s, json_out, summary, vec![])
            }
        }
    })
}

fn verify(a: &SpecArgs) -> CliResult<Output> {
    let spec = read_spec(&a.spec)?;
    let mut reports = vec![
        verify_fusion(&spec.fusion, spec.fusion.is_semisimple()),
        verify_module(&spec.fusion, &spec.module),
    ];
    let extra = vec![("dimension".to_string(), json!(dimension_identity(&spec.fusion, &spec.module).to_string()))];
    if let Some(m) = &spec.m {
        let mut eigen = Report::new("m-vector");
        let report = match (spec.mode, m) {
            (BackendMode::Cyclotomic, MValue::Exact(m)) => {
                let r = check_eigenvector(&spec.fusion, &spec.module, m);
                eigen.push("eigen-condition", r.is_ok(), r.err().map_or(String::new(), |e| e.to_string()));
                matched_checks(&spec.fusion, &spec.module, m, &spec.field)?
            }
            (BackendMode::Numeric, MValue::Exact(m)) => {
                let (f, m) = (spec.numeric_fusion(), spec.to_numeric(m));
                let r = check_eigenvector(&f, &spec.module, &m);
                eigen.push("eigen-condition", r.is_ok(), r.err().map_or(String::new(), |e| e.to_string()));
                matched_checks(&f, &spec.module, &m, &spec.tolerance)?
            }
            (_, MValue::Symbolic(m)) => {
                let ctx = symbolic_context(m).ok_or_else(|| CliError::Input("empty m-vector".into()))?;
                let lifted = lift_to_ratfunc(&spec.fusion, &ctx)?;
                let m: Vec<_> = m.iter().map(FactoredValue::to_ratfunc).collect();
                let r = check_eigenvector(&lifted, &spec.module, &m);
                eigen.push("eigen-condition", r.is_ok(), r.err().map_or(String::new(), |e| e.to_string()));
                matched_checks(&lifted, &spec.module, &m, &ctx)?
            }
            (_, MValue::Unmatched(r)) => return Err(CliError::Input(r.clone())),
        };
        reports.push(eigen);
        reports.push(report);
    }
    let passed = reports.iter().all(Report::passed);
    Ok(Output { text: render_reports(&reports, extra, a.json), passed })
}

fn solve_m(a: &SpecArgs) -> CliResult<Output> {
    let spec = read_spec(&a.spec)?;
    let (k, basis): (usize, Vec<Vec<String>>) = match spec.mode {
        BackendMode::Cyclotomic => {
            let (b, k) = dimension_eigenspace(&spec.fusion, &spec.module, &spec.field)?;
            (k, b.iter().map(|v| v.iter().map(CycNum::to_literal).collect()).collect())
        }
        BackendMode::Numeric => {
            let (b, k) = dimension_eigenspace(&spec.numeric_fusion(), &spec.module, &spec.tolerance)?;
            (k, b.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect())
        }
    };
    let m: Option<Vec<String>> = match resolve_m(&spec, None) {
        Ok(MChoice::Exact(m)) => Some(m.iter().map(CycNum::to_literal).collect()),
        Ok(MChoice::Numeric(m)) => Some(m.iter().map(|x| x.to_string()).collect()),
        Ok(MChoice::Symbolic(m)) => Some(m.iter().map(|x| x.to_literal()).collect()),
        Err(CliError::Core(Error::AmbiguousM { .. })) => None,
        Err(e) => return Err(e),
    };
    let text = if a.json {
        serde_json::to_string_pretty(&json!({"multiplicity": k, "basis": basis, "m": m})).expect("json") + "\n"
    } else {
        let mut out = format!("multiplicity {k}\n");
        for v in &basis {
            out.push_str(&format!("basis [{}]\n", v.join(", ")));
        }
        match &m {
            Some(m) => out.push_str(&format!("m [{}]\n", m.join(", "))),
            None => out.push_str("m ambiguous: pass an explicit m-vector\n"),
        }
        out
    };
    Ok(Output::ok(text))
}

fn pivotalize(a: &PivotalizeArgs) -> CliResult<Output> {
    let spec = read_spec(&a.spec.spec)?;
    let (json_out, summary) = (a.spec.json, false);
    let exact: PivotalizationData<CycNum> = match &spec.pivotalization {
        Some(p) => p.clone(),
        None => match resolve_m(&spec, a.m.as_deref())? {
            MChoice::Exact(m) => from_matched_pivotal(&spec.fusion, &spec.module, &m, &spec.field)?,
            MChoice::Numeric(m) => {
                let p = from_matched_pivotal(&spec.numeric_fusion(), &spec.module, &m, &spec.tolerance)?;
                let s = char_poly_pivotalized(&p, &spec.module)?;
                return Ok(Output::ok(render_spectrum("signed", &s, json_out, summary, vec![])));
            }
            MChoice::Symbolic(_) => {
                return Err(Error::UnsupportedSymbolic("pivotalization needs real constant dimensions".into()).into())
            }
        },
    };
    let text = match spec.mode {
        BackendMode::Cyclotomic => {
            render_spectrum("signed", &char_poly_pivotalized(&exact, &spec.module)?, json_out, summary, vec![])
        }
        BackendMode::Numeric => {
            let p = PivotalizationData {
                nu: spec.to_numeric(&exact.nu),
                n_plus: exact.n_plus.clone(),
                n_minus: exact.n_minus.clone(),
            };
            render_spectrum("signed", &char_poly_pivotalized(&p, &spec.module)?, json_out, summary, vec![])
        }
    };
    Ok(Output::ok(text))
}

fn emit_or_run(fam: &FamilyInstance, run: &RunArgs) -> CliResult<Output> {
    let doc = SpecDocument::from_family(fam);
    if !run.run {
        return Ok(Output::ok(doc.to_json() + "\n"));
    }
    if let MValue::Unmatched(reason) = &fam.m {
        return Err(CliError::Core(match dimension_eigenspace(&fam.fusion, &fam.module, &fam.field) {
            Err(e) => e,
            Ok(_) => return Err(CliError::Input(reason.clone())),
        }));
    }
    let spec = doc.load()?;
    let args = CharpolyArgs {
        spec: SpecArgs { spec: "-".into(), json: run.json },
        m: None,
        at: None,
        limit: None,
        summary: run.summary,
    };
    charpoly(&spec, &args).map(Output::ok)
}

fn family(cmd: FamilyCommand) -> CliResult<Output> {
    match cmd {
        FamilyCommand::Taft { n, s, run } => emit_or_run(&taft_family(n, s)?, &run),
        FamilyCommand::Uqsl2 { ell, s, lambda, order, run } => {
            let lambda = if lambda == "symbolic" {
                Lambda::Symbolic
            } else {
                let field = CycField::new(order.unwrap_or(ell as u64))?;
                Lambda::Exact(parse_cyc(&lambda, &field)?)
            };
            emit_or_run(&uqsl2_family(ell, s, &lambda)?, &run)
        }
        FamilyCommand::Vecg { group, kappa, subgroup, order, run } => {
            let g = group_preset(&group)?;
            let field = CycField::new(order.unwrap_or(g.exponent() as u64))?;
            let kappa = match kappa {
                Some(k) => parse_cyc_list(&k, &field)?,
                None => vec![antipode_core::scalar::Field::one(&field); g.order()],
            };
            let h = match subgroup {
                Some(h) => split_list(&h)
                    .iter()
                    .map(|name| {
                        g.index_of(name).ok_or_else(|| CliError::Input(format!("unknown element '{name}' of {group}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?,
                None => vec![g.identity],
            };
            emit_or_run(&vecg_family(&g, &kappa, &h)?, &run)
        }
        FamilyCommand::Regular { preset, from, run } => {
            let fam = match (preset.as_deref(), from) {
                (_, Some(path)) => {
                    let spec = read_spec(&path)?;
                    let (module, m) = regular_module(&spec.fusion)?;
                    FamilyInstance {
                        name: format!("regular module of {path}"),
                        field: spec.field.clone(),
                        fusion: spec.fusion,
                        module,
                        m: MValue::Exact(m),
                    }
                }
                (Some("fibonacci") | None, None) => fibonacci()?,
                (Some(other), None) => return Err(CliError::Input(format!("unknown preset '{other}'"))),
            };
            emit_or_run(&fam, &run)
        }
        FamilyCommand::Uqg { root_system, ell, s, lambda, point, order, tolerance, json, summary } => {
            let rs = RootSystemData::parse(&root_system)?;
            let torus = match lambda.as_str() {
                "symbolic" => TorusPoint::Symbolic,
                "numeric" => TorusPoint::Numeric(
                    match point {
                        Some(p) => parse_point(&p)?,
                        None => (0..rs.rank).map(|i| Complex64::new(0.37 + 0.5 * i as f64, 0.21 - 0.3 * i as f64)).collect(),
                    },
                    tolerance,
                ),
                lits => TorusPoint::Exact(parse_cyc_list(lits, &CycField::new(order.unwrap_or(ell as u64))?)?),
            };
            let extra = vec![("root_system".to_string(), json!(rs.label))];
            let text = match uqg_family(&rs, ell, s, &torus)? {
                UqgSpectrum::Symbolic(x) => render_spectrum("symbolic", &x, json, summary, extra),
                UqgSpectrum::Exact(x) => render_spectrum("exact", &x, json, summary, extra),
                UqgSpectrum::Numeric(x) => render_spectrum("numeric", &x, json, summary, extra),
            };
            Ok(Output::ok(text))
        }
    }
}

fn parse_point(src: &str) -> CliResult<Vec<Complex64>> {
    split_list(src)
        .iter()
        .map(|p| {
            let (re, im) = p.split_once(':').unwrap_or((p.as_str(), "0"));
            match (re.trim().parse::<f64>(), im.trim().parse::<f64>()) {
                (Ok(re), Ok(im)) => Ok(Complex64::new(re, im)),
                _ => Err(CliError::Input(format!("torus coordinate '{p}' is not re:im"))),
            }
        })
        .collect()
}

fn build_algebra(a: &AlgebraArgs) -> CliResult<(StructureAlgebra, Vec<SimpleModule>)> {
    Ok(match a.algebra {
        AlgebraKind::Taft => {
            let (alg, _) = taft_algebra(a.n, a.s)?;
            let simples = taft_simples(&alg, a.n, a.s);
            (alg, simples)
        }
        AlgebraKind::Uqsl2 => {
            let alg = uqsl2_algebra(a.n, a.s)?;
            let simples = uqsl2_simples(&alg, a.n, a.s);
            (alg, simples)
        }
    })
}

fn oracle(cmd: OracleCommand) -> CliResult<Output> {
    match cmd {
        OracleCommand::Radical { alg } => {
            let (a, simples) = build_algebra(&alg)?;
            let (rad, mut report) = radical_report(&a, &simples);
            report.extend(a.audit());
            let passed = report.passed();
            let extra = vec![("radical_dimension".to_string(), json!(rad.dim())), ("algebra_dimension".to_string(), json!(a.dim()))];
            Ok(Output { text: render_reports(&[report], extra, alg.json), passed })
        }
        OracleCommand::Cartan { alg, candidate } => {
            let (a, simples) = build_algebra(&alg)?;
            let candidate: Vec<Vec<i64>> = match candidate {
                Some(c) => serde_json::from_str(&c).map_err(|e| CliError::Input(format!("--candidate: {e}")))?,
                None => match alg.algebra {
                    AlgebraKind::Taft => vec![vec![1; alg.n]; alg.n],
                    AlgebraKind::Uqsl2 => uqsl2_family(alg.n, alg.s, &Lambda::Symbolic)?
                        .fusion
                        .cartan
                        .expect("the family carries a Cartan matrix"),
                },
            };
            let idempotents = match alg.algebra {
                AlgebraKind::Taft => Some(taft_idempotents(&a, alg.n, alg.s)),
                AlgebraKind::Uqsl2 => None,
            };
            let report = validate_cartan(&a, &simples, &candidate, idempotents.as_deref())?;
            let passed = report.passed();
            let extra = vec![("candidate".to_string(), json!(candidate))];
            Ok(Output { text: render_reports(&[report], extra, alg.json), passed })
        }
        OracleCommand::S2 { n, s, json } => {
            let (_, antipode) = taft_algebra(n, s)?;
            let spec = finite_order_spectrum(&antipode.mul(&antipode), n as u64)?;
            Ok(Output::ok(render_spectrum("exact", &spec, json, false, vec![])))
        }
    }
}
