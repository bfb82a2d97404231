use std::path::Path;

use algebroid::circle::{
    count_simple_zeros, is_transitive, stabilized_cohomology, CircleAlgebroid, SweepRow,
};
use algebroid::exterior::basis;
use algebroid::format::{
    parse_algebroid, parse_covector, parse_fiber, parse_lie_algebra, parse_representation, sniff,
    AlgebroidSpec, DocumentKind,
};
use algebroid::hopf::{
    addition_coproduct, check_h_structure, exterior_structure_check, hopf_report, primitives,
    HStructure,
};
use algebroid::kunneth::{kunneth_verify, product_with_lie_algebra, tensor_rep, KunnethCheck};
use algebroid::liealg::{
    ce_complex, check_jacobi, check_representation, LieAlgebra, Representation,
};
use algebroid::linalg::complex_cohomology;
use algebroid::symbol::{exactness_check, symbol_complex};
use algebroid::{CohomologyReport, Error};
use serde_json::json;

use crate::output::{read, table, tuple, CliError, Report, EXIT_NOT_STABILIZED, EXIT_VALIDATION};

/// Monomials listed by `hopf` stop at this many generators.
const HOPF_FORMULA_LIMIT: usize = 6;

fn load_algebra(file: &Path) -> Result<LieAlgebra, CliError> {
    let g = parse_lie_algebra(&read(file)?).map_err(|e| CliError::from_library(file, e))?;
    if !check_jacobi(&g) {
        return Err(CliError::from_library(file, Error::JacobiViolated));
    }
    Ok(g)
}

fn load_representation(g: LieAlgebra, rep: Option<&Path>) -> Result<Representation, CliError> {
    let Some(file) = rep else {
        return Ok(Representation::trivial(g, 1));
    };
    let r = parse_representation(&read(file)?)
        .and_then(|data| data.bind(g))
        .map_err(|e| CliError::from_library(file, e))?;
    if !check_representation(&r) {
        return Err(CliError::from_library(file, Error::NotARepresentation));
    }
    Ok(r)
}

fn load_algebroid(file: &Path) -> Result<AlgebroidSpec, CliError> {
    let spec = parse_algebroid(&read(file)?).map_err(|e| CliError::from_library(file, e))?;
    spec.algebroid
        .validate()
        .map_err(|e| CliError::from_library(file, e))?;
    Ok(spec)
}

fn cohomology(r: &Representation) -> Result<CohomologyReport, CliError> {
    ce_complex(r)
        .and_then(|c| complex_cohomology(&c))
        .map_err(|e| CliError::validation(e.to_string()))
}

fn describe(g: &LieAlgebra) -> String {
    match g.name() {
        Some(name) => format!("{name} (dim {})", g.dim()),
        None => format!("dim {}", g.dim()),
    }
}

fn betti_table(report: &CohomologyReport) -> Vec<String> {
    let rows: Vec<Vec<String>> = report
        .betti
        .iter()
        .zip(&report.degrees)
        .enumerate()
        .map(|(p, (b, d))| vec![p.to_string(), d.to_string(), b.to_string()])
        .collect();
    table(&["p", "dim C^p", "b_p"], &rows)
}

pub fn lie_cohomology(file: &Path, rep: Option<&Path>) -> Result<Report, CliError> {
    let g = load_algebra(file)?;
    let r = load_representation(g, rep)?;
    let report = cohomology(&r)?;
    let mut out = Report::new(json!({
        "command": "lie cohomology",
        "algebra": r.algebra().name(),
        "dim": r.algebra().dim(),
        "dim_E": r.dim_e(),
        "degrees": report.degrees,
        "betti": report.betti,
        "euler": report.euler,
    }));
    out.line(format!("algebra: {}", describe(r.algebra())));
    out.line(format!("coefficients: dim {}", r.dim_e()));
    out.lines.extend(betti_table(&report));
    out.line(format!(
        "betti = {}, chi = {}",
        tuple(&report.betti),
        report.euler
    ));
    Ok(out)
}

pub fn lie_euler(file: &Path) -> Result<Report, CliError> {
    let g = load_algebra(file)?;
    let report = cohomology(&Representation::trivial(g.clone(), 1))?;
    let mut out = Report::new(json!({
        "command": "lie euler",
        "algebra": g.name(),
        "dim": g.dim(),
        "betti": report.betti,
        "euler": report.euler,
    }));
    out.line(format!("algebra: {}", describe(&g)));
    out.line(format!("chi = {}", report.euler));
    Ok(out)
}

fn window_range(
    spec: &AlgebroidSpec,
    n_min: Option<usize>,
    n_max: Option<usize>,
) -> Result<(usize, usize), CliError> {
    let fallback = spec.n_range;
    match (
        n_min.or(fallback.map(|r| r.0)),
        n_max.or(fallback.map(|r| r.1)),
    ) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        _ => Err(CliError::usage(
            "window range missing: pass --n-min and --n-max or set N_range",
        )),
    }
}

fn sweep_rows(table_rows: &[SweepRow]) -> Vec<String> {
    let rows: Vec<Vec<String>> = table_rows
        .iter()
        .map(|r| vec![r.n.to_string(), tuple(&r.betti), r.euler.to_string()])
        .collect();
    table(&["N", "betti", "chi"], &rows)
}

/// Stabilized sweep, or the per-window table when Betti numbers keep moving.
enum Sweep {
    Stable(CohomologyReport, Vec<SweepRow>),
    Unstable(Vec<SweepRow>),
}

fn sweep(a: &CircleAlgebroid, lo: usize, hi: usize, file: &Path) -> Result<Sweep, CliError> {
    match stabilized_cohomology(a, lo, hi) {
        Ok(s) => Ok(Sweep::Stable(s.report, s.table)),
        Err(Error::NotStabilized { table }) => Ok(Sweep::Unstable(table)),
        Err(e) => Err(CliError::from_library(file, e)),
    }
}

pub fn circle_sweep(
    file: &Path,
    n_min: Option<usize>,
    n_max: Option<usize>,
) -> Result<Report, CliError> {
    let spec = load_algebroid(file)?;
    let (lo, hi) = window_range(&spec, n_min, n_max)?;
    let a = &spec.algebroid;
    let zeros = match a {
        CircleAlgebroid::Rank1Anchor { p } => count_simple_zeros(p).ok(),
        CircleAlgebroid::Action { .. } => None,
    };
    let transitive = is_transitive(a);
    let result = sweep(a, lo, hi, file)?;
    Ok(sweep_report(a.rank(), transitive, zeros, (lo, hi), result))
}

fn sweep_report(
    rank: usize,
    transitive: bool,
    zeros: Option<usize>,
    (lo, hi): (usize, usize),
    result: Sweep,
) -> Report {
    let (rows, stable) = match &result {
        Sweep::Stable(_, rows) => (rows, true),
        Sweep::Unstable(rows) => (rows, false),
    };
    let mut out = Report::new(json!({
        "command": "circle sweep",
        "rank": rank,
        "transitive": transitive,
        "simple_zeros": zeros,
        "n_min": lo,
        "n_max": hi,
        "table": rows,
        "stabilized": stable,
        "betti": if let Sweep::Stable(r, _) = &result { json!(r.betti) } else { json!(null) },
        "euler": if let Sweep::Stable(r, _) = &result { json!(r.euler) } else { json!(null) },
    }));
    out.line(format!(
        "rank {rank} algebroid on the circle, transitive: {transitive}"
    ));
    if let Some(n) = zeros {
        out.line(format!("anchor zeros: {n}"));
    }
    out.lines.extend(sweep_rows(rows));
    match result {
        Sweep::Stable(r, _) => {
            out.line(format!(
                "betti = {}, chi = {}, stabilized",
                tuple(&r.betti),
                r.euler
            ));
        }
        Sweep::Unstable(_) => {
            out.line("not stabilized over the last 3 windows");
            out.code = EXIT_NOT_STABILIZED;
        }
    }
    out
}

fn kunneth_lines(out: &mut Report, check: &KunnethCheck, euler: [i64; 3]) {
    let rows: Vec<Vec<String>> = check
        .table
        .iter()
        .map(|r| {
            vec![
                r.degree.to_string(),
                r.expected.to_string(),
                r.actual.to_string(),
            ]
        })
        .collect();
    out.lines
        .extend(table(&["p", "convolution", "product"], &rows));
    out.line(format!(
        "kunneth {}, chi = {} x {} = {} {}",
        if check.holds { "holds" } else { "FAILS" },
        euler[0],
        euler[1],
        euler[2],
        if check.euler_multiplicative {
            "(multiplicative)"
        } else {
            "(NOT multiplicative)"
        },
    ));
    if !(check.holds && check.euler_multiplicative) {
        out.code = EXIT_VALIDATION;
    }
}

pub fn kunneth(
    a: &Path,
    b: &Path,
    rep_a: Option<&Path>,
    rep_b: Option<&Path>,
    n_min: Option<usize>,
    n_max: Option<usize>,
) -> Result<Report, CliError> {
    let text_a = read(a)?;
    let text_b = read(b)?;
    let kind_a = sniff(&text_a).map_err(|e| CliError::from_library(a, e))?;
    let kind_b = sniff(&text_b).map_err(|e| CliError::from_library(b, e))?;
    match (kind_a, kind_b) {
        (DocumentKind::LieAlgebra, DocumentKind::LieAlgebra) => {
            let e = load_representation(load_algebra(a)?, rep_a)?;
            let f = load_representation(load_algebra(b)?, rep_b)?;
            let (ra, rb) = (cohomology(&e)?, cohomology(&f)?);
            let product = tensor_rep(&e, &f);
            let rp = cohomology(&product)?;
            let check = kunneth_verify(&rp, &ra, &rb);
            let mut out = Report::new(json!({
                "command": "kunneth",
                "factors": [ra.betti, rb.betti],
                "betti": rp.betti,
                "euler": rp.euler,
                "holds": check.holds,
                "euler_multiplicative": check.euler_multiplicative,
                "table": check.table,
            }));
            out.line(format!(
                "product: {} + {}",
                describe(e.algebra()),
                describe(f.algebra())
            ));
            kunneth_lines(&mut out, &check, [ra.euler, rb.euler, rp.euler]);
            Ok(out)
        }
        (DocumentKind::Algebroid, DocumentKind::LieAlgebra) => {
            if rep_a.is_some() || rep_b.is_some() {
                return Err(CliError::usage("representations apply to algebra x algebra products only"));
            }
            let spec = load_algebroid(a)?;
            let g = load_algebra(b)?;
            let (lo, hi) = window_range(&spec, n_min, n_max)?;
            let base = match sweep(&spec.algebroid, lo, hi, a)? {
                Sweep::Stable(r, _) => r,
                Sweep::Unstable(_) => return Err(CliError { code: EXIT_NOT_STABILIZED, message: format!("{}: not stabilized", a.display()) }),
            };
            let product = product_with_lie_algebra(&spec.algebroid, &g);
            let rp = match sweep(&product, lo, hi, a)? {
                Sweep::Stable(r, _) => r,
                Sweep::Unstable(_) => return Err(CliError { code: EXIT_NOT_STABILIZED, message: "product not stabilized".into() }),
            };
            let rg = cohomology(&Representation::trivial(g.clone(), 1))?;
            let check = kunneth_verify(&rp, &base, &rg);
            let mut out = Report::new(json!({
                "command": "kunneth",
                "factors": [base.betti, rg.betti],
                "betti": rp.betti,
                "euler": rp.euler,
                "holds": check.holds,
                "euler_multiplicative": check.euler_multiplicative,
                "stabilized": true,
                "table": check.table,
            }));
            out.line(format!("product: circle algebroid x {}", describe(&g)));
            kunneth_lines(&mut out, &check, [base.euler, rg.euler, rp.euler]);
            Ok(out)
        }
        _ => Err(CliError::usage(
            "kunneth takes two algebra files, or a circle algebroid file followed by an algebra file",
        )),
    }
}

pub fn hopf(file: &Path) -> Result<Report, CliError> {
    let g = load_algebra(file)?;
    let betti = cohomology(&Representation::trivial(g.clone(), 1))?.betti;
    let generators = exterior_structure_check(&betti);
    let h_ok = check_h_structure(&HStructure::addition(g.clone()));
    let mut out = Report::new(json!(null));
    out.line(format!("algebra: {}", describe(&g)));
    out.line(format!("betti = {}", tuple(&betti)));
    match &generators {
        Some(d) => out.line(format!("exterior on generators of degree {}", tuple(d))),
        None => out.line("not an exterior algebra on odd generators"),
    }
    out.line(format!("addition is an H-structure: {h_ok}"));
    let mut json = json!({
        "command": "hopf",
        "algebra": g.name(),
        "betti": betti,
        "exterior_generators": generators,
        "h_structure": h_ok,
    });
    match addition_coproduct(&g) {
        Ok(c) => {
            let prims: Vec<usize> = primitives(&c).iter().map(Vec::len).collect();
            let report = hopf_report(&c);
            out.line(format!("primitives per degree = {}", tuple(&prims)));
            out.line(format!(
                "counit {}, coassociative {}, multiplicative {}, antipode {}",
                report.counit, report.coassociative, report.multiplicative, report.antipode
            ));
            let mut formulas = Vec::new();
            if g.dim() <= HOPF_FORMULA_LIMIT {
                for r in 1..=g.dim() {
                    for x in basis(g.dim(), r) {
                        formulas.push(c.formula(&x));
                    }
                }
            }
            out.lines.extend(formulas.iter().cloned());
            json["primitives"] = json!(prims);
            json["hopf"] = json!(report);
            json["holds"] = json!(report.holds());
            json["coproduct"] = json!(formulas);
            if !report.holds() {
                out.code = EXIT_VALIDATION;
            }
        }
        Err(Error::NotAbelian) => {
            out.line("algebra is not abelian: addition induces no coproduct");
            json["holds"] = json!(false);
            out.code = EXIT_VALIDATION;
        }
        Err(e) => return Err(CliError::from_library(file, e)),
    }
    out.json = json;
    Ok(out)
}

pub fn symbol(file: &Path, alpha: &str) -> Result<Report, CliError> {
    let f = parse_fiber(&read(file)?).map_err(|e| CliError::from_library(file, e))?;
    let alpha = parse_covector(alpha).map_err(|e| CliError::usage(format!("--alpha: {e}")))?;
    let c = symbol_complex(&f, &alpha).map_err(|e| CliError::validation(e.to_string()))?;
    let ex = exactness_check(&c).map_err(|e| CliError::validation(e.to_string()))?;
    let rows: Vec<Vec<String>> = ex
        .per_degree
        .iter()
        .zip(c.degrees())
        .enumerate()
        .map(|(r, (ok, d))| {
            vec![
                r.to_string(),
                d.to_string(),
                if *ok { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut out = Report::new(json!({
        "command": "symbol",
        "dim_A": f.dim_a,
        "dim_M": f.dim_m,
        "dim_E": f.dim_e,
        "degrees": c.degrees(),
        "per_degree": ex.per_degree,
        "exact": ex.exact,
    }));
    out.line(format!(
        "fiber: A {} -> TM {}, E {}",
        f.dim_a, f.dim_m, f.dim_e
    ));
    out.lines.extend(table(&["r", "dim", "exact"], &rows));
    out.line(if ex.exact {
        "symbol complex is exact"
    } else {
        "symbol complex is not exact"
    });
    Ok(out)
}
