//! The `catalog` subcommand: every built-in example with its expected invariant.

use algebroid::catalog;
use algebroid::circle::{count_simple_zeros, stabilized_cohomology, CircleAlgebroid};
use algebroid::hopf::{addition_coproduct, check_h_structure, verify_hopf, HStructure};
use algebroid::kunneth::{kunneth_verify, product_with_lie_algebra, tensor_rep};
use algebroid::liealg::{lie_cohomology, Representation};
use algebroid::symbol::{exactness_check, symbol_complex};
use algebroid::Rational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::output::{tuple, Report, EXIT_VALIDATION};

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn algebra_checks(out: &mut Vec<Check>) {
    for (name, _) in catalog::ALGEBRAS {
        let g = catalog::algebra(name).expect("listed");
        let expected = i64::from(g.dim() == 0);
        let r = lie_cohomology(&Representation::trivial(g, 1));
        let (ok, detail) = match r {
            Ok(r) => (
                r.euler == expected,
                format!("betti = {}, chi = {}", tuple(&r.betti), r.euler),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(check(format!("lie {name}"), ok, detail));
    }
    for (name, _, _) in catalog::REPRESENTATIONS {
        let r = lie_cohomology(&catalog::representation(name).expect("listed"));
        let (ok, detail) = match r {
            Ok(r) => (
                r.euler == 0,
                format!("betti = {}, chi = {}", tuple(&r.betti), r.euler),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(check(format!("rep {name}"), ok, detail));
    }
}

fn circle_checks(out: &mut Vec<Check>) {
    for (name, _) in catalog::ALGEBROIDS {
        let spec = catalog::algebroid(name).expect("listed");
        let (lo, hi) = spec.n_range.unwrap_or((3, 8));
        let expected = match &spec.algebroid {
            CircleAlgebroid::Rank1Anchor { p } => count_simple_zeros(p).map(|n| -(n as i64)).ok(),
            CircleAlgebroid::Action { .. } => Some(0),
        };
        let (ok, detail) = match stabilized_cohomology(&spec.algebroid, lo, hi) {
            Ok(s) => (
                Some(s.report.euler) == expected,
                format!(
                    "betti = {}, chi = {}, stabilized",
                    tuple(&s.report.betti),
                    s.report.euler
                ),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(check(format!("circle {name}"), ok, detail));
    }
}

fn kunneth_checks(out: &mut Vec<Check>) {
    let trivial = |n: &str| Representation::trivial(catalog::algebra(n).expect("listed"), 1);
    for (a, b) in [("su2", "su2"), ("h3", "aff1")] {
        let (e, f) = (trivial(a), trivial(b));
        let result = (|| {
            let p = lie_cohomology(&tensor_rep(&e, &f))?;
            Ok::<_, algebroid::Error>((
                kunneth_verify(&p, &lie_cohomology(&e)?, &lie_cohomology(&f)?),
                p,
            ))
        })();
        let (ok, detail) = match result {
            Ok((c, p)) => (
                c.holds && c.euler_multiplicative,
                format!("betti = {}", tuple(&p.betti)),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(check(format!("kunneth {a} x {b}"), ok, detail));
    }
    let base = catalog::algebroid("const_1").expect("listed").algebroid;
    let su2 = catalog::algebra("su2").expect("listed");
    let result = (|| {
        let p = stabilized_cohomology(&product_with_lie_algebra(&base, &su2), 1, 6)?.report;
        let a = stabilized_cohomology(&base, 1, 6)?.report;
        let b = lie_cohomology(&Representation::trivial(su2.clone(), 1))?;
        Ok::<_, algebroid::Error>((kunneth_verify(&p, &a, &b), p))
    })();
    let (ok, detail) = match result {
        Ok((c, p)) => (
            c.holds && c.euler_multiplicative && p.betti == [1, 1, 0, 1, 1],
            format!("betti = {}", tuple(&p.betti)),
        ),
        Err(e) => (false, e.to_string()),
    };
    out.push(check("kunneth const_1 x su2", ok, detail));
}

fn hopf_checks(out: &mut Vec<Check>) {
    for n in 1..=4 {
        let g = catalog::algebra(&format!("r{n}")).expect("listed");
        let ok = check_h_structure(&HStructure::addition(g.clone()))
            && addition_coproduct(&g)
                .map(|c| verify_hopf(&c))
                .unwrap_or(false);
        out.push(check(
            format!("hopf r{n}"),
            ok,
            "addition is a Hopf structure",
        ));
    }
    let su2 = catalog::algebra("su2").expect("listed");
    out.push(check(
        "hopf su2",
        !check_h_structure(&HStructure::addition(su2)),
        "addition rejected",
    ));
}

fn symbol_checks(out: &mut Vec<Check>) {
    for (name, _) in catalog::FIBERS {
        let f = catalog::fiber(name).expect("listed");
        let ones = vec![Rational::one(); f.dim_m];
        let zeros = vec![Rational::zero(); f.dim_m];
        let exact = |alpha: &[Rational]| {
            symbol_complex(&f, alpha)
                .and_then(|c| exactness_check(&c))
                .map(|e| e.exact)
        };
        let ok = exact(&ones) == Ok(true) && exact(&zeros) == Ok(false);
        out.push(check(
            format!("symbol {name}"),
            ok,
            "exact at alpha = 1, not at alpha = 0",
        ));
    }
}

pub fn run() -> Report {
    let mut checks = Vec::new();
    algebra_checks(&mut checks);
    circle_checks(&mut checks);
    kunneth_checks(&mut checks);
    hopf_checks(&mut checks);
    symbol_checks(&mut checks);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut report = Report::new(json!({
        "command": "catalog",
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    }));
    for c in &checks {
        report.line(format!(
            "{} {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    report.line(format!("{} passed, {failed} failed", checks.len() - failed));
    if failed > 0 {
        report.code = EXIT_VALIDATION;
    }
    report
}
