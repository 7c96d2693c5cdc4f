//! Subcommands. Each returns its output text and exit code so the binary
//! stays a thin shell.

use chiralmix::catalog::FamilySpec;
use chiralmix::criteria::{
    chirality_lower_bound, criterion_chirality_divisibility, criterion_coprime,
    criterion_facets_cover, criterion_polyhedra, criterion_simple_chirality,
    criterion_simple_rotation_group, Certificate,
};
use chiralmix::mixer::{
    comix, maximal_regular_quotient, minimal_regular_cover, mix, verify_product_formula,
};
use chiralmix::rotation::RotationSystem;
use chiralmix::{Error, Result};

use crate::dsl;
use crate::report::{
    chirality_summary, classify, to_json, CertificateReport, CertifyReport, ChiralityReportOut,
    ClassifyOptions, ComixReport, MixReport, ProductFormulaReport,
};
use crate::reproduce;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NOT_POLYTOPAL: i32 = 4;
pub const EXIT_OTHER: i32 = 5;

pub const BUDGET_ENV: &str = "CHIRALMIX_BUDGET";

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::BudgetExhausted { .. } | Error::Resource(_) | Error::NotFinite => EXIT_BUDGET,
        Error::NotPolytopal(_) => EXIT_NOT_POLYTOPAL,
        Error::Inconsistent(_) => EXIT_FAILED_CHECK,
        _ => EXIT_OTHER,
    }
}

pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

/// Either `catalog:<entry>` or a path to a presentation file.
pub fn load(input: &str, budget: usize) -> Result<RotationSystem> {
    if let Some(spec) = input.strip_prefix("catalog:") {
        let spec: FamilySpec = spec.parse().map_err(|e: Error| Error::Parse {
            line: 1,
            column: 9,
            message: e.to_string(),
        })?;
        return spec.build(budget);
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::Precondition(format!("cannot read {input}: {e}")))?;
    RotationSystem::from_presentation(dsl::parse(&text)?, budget)
}

pub fn cmd_classify(input: &str, budget: usize) -> Result<Output> {
    let r = load(input, budget)?;
    let rep = classify(input, &r, ClassifyOptions::default(), budget)?;
    let code = if rep.status != "finite" {
        EXIT_BUDGET
    } else if rep.polytopal == Some(false) {
        EXIT_NOT_POLYTOPAL
    } else {
        EXIT_OK
    };
    Ok(Output {
        text: to_json(&rep),
        code,
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MixFlags {
    pub faces: bool,
    pub polytopality: bool,
    pub certificates: bool,
}

pub fn cmd_mix(a: &str, b: &str, flags: MixFlags, budget: usize) -> Result<Output> {
    let (r1, r2) = (load(a, budget)?, load(b, budget)?);
    let m = mix(&r1, &r2)?.system;
    let opts = ClassifyOptions {
        faces: flags.faces,
        polytopality: flags.polytopality || flags.faces,
        chirality: true,
    };
    let mut rep = classify(&format!("{a} ⋄ {b}"), &m, opts, budget)?;
    if flags.certificates {
        rep.certificates = certificates(&r1, &r2, budget)?
            .iter()
            .map(CertificateReport::from)
            .collect();
    }
    let pf = verify_product_formula(&r1, &r2, budget);
    let code = match &pf {
        Err(Error::Inconsistent(_)) => EXIT_FAILED_CHECK,
        _ if rep.polytopal == Some(false) => EXIT_NOT_POLYTOPAL,
        _ => EXIT_OK,
    };
    let pf = match pf {
        Ok(p) => Some(p),
        Err(Error::Inconsistent(_)) => None,
        Err(e) => return Err(e),
    };
    let out = MixReport {
        left: a.into(),
        right: b.into(),
        mix: rep,
        comix_order: pf.map(|p| p.comix),
        product_formula: pf.as_ref().map(ProductFormulaReport::from),
    };
    Ok(Output {
        text: to_json(&out),
        code,
    })
}

pub fn cmd_comix(a: &str, b: &str, budget: usize) -> Result<Output> {
    let (r1, r2) = (load(a, budget)?, load(b, budget)?);
    let c = comix(&r1, &r2, budget)?;
    let opts = ClassifyOptions {
        faces: false,
        polytopality: false,
        chirality: true,
    };
    let rep = classify(&format!("{a} □ {b}"), &c, opts, budget)?;
    let code = if rep.status == "finite" {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    Ok(Output {
        text: to_json(&ComixReport {
            left: a.into(),
            right: b.into(),
            comix: rep,
        }),
        code,
    })
}

pub fn cmd_chirality(input: &str, budget: usize) -> Result<Output> {
    let r = load(input, budget)?;
    if !r.is_finite() {
        return Err(Error::BudgetExhausted { budget });
    }
    let out = ChiralityReportOut {
        input: input.into(),
        order: r.order(),
        directly_regular: Some(r.is_directly_regular()?),
        chirality: chirality_summary(&r, budget)?,
        minimal_regular_cover_order: minimal_regular_cover(&r)?.order(),
        maximal_regular_quotient_order: maximal_regular_quotient(&r, budget)?.order(),
    };
    Ok(Output::ok(to_json(&out)))
}

/// Every applicable criterion for the pair, in a fixed order. Criteria
/// whose preconditions fail are left out.
pub fn certificates(
    r1: &RotationSystem,
    r2: &RotationSystem,
    budget: usize,
) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let mut keep = |c: Result<Certificate>| -> Result<()> {
        match c {
            Ok(c) => {
                out.push(c);
                Ok(())
            }
            Err(Error::Precondition(_)) => Ok(()),
            Err(e) => Err(e),
        }
    };
    keep(criterion_coprime(r1, r2))?;
    keep(criterion_facets_cover(r1, r2))?;
    if r1.rank() == 3 {
        keep(criterion_polyhedra(r1, r2))?;
    }
    keep(criterion_chirality_divisibility(r1, r2, budget))?;
    keep(chirality_lower_bound(r1, r2, budget))?;
    for (p, q) in [(r1, r2), (r2, r1)] {
        if !p.is_directly_regular()? {
            keep(criterion_simple_chirality(p, q, budget))?;
            keep(criterion_simple_rotation_group(p, q, budget))?;
        }
    }
    Ok(out)
}

pub fn cmd_certify(a: &str, b: &str, budget: usize) -> Result<Output> {
    let (r1, r2) = (load(a, budget)?, load(b, budget)?);
    if !(r1.is_finite() && r2.is_finite()) {
        return Err(Error::BudgetExhausted { budget });
    }
    let certs = certificates(&r1, &r2, budget)?;
    let out = CertifyReport {
        left: a.into(),
        right: b.into(),
        certificates: certs.iter().map(CertificateReport::from).collect(),
    };
    Ok(Output::ok(to_json(&out)))
}

pub const CATALOG_HELP: &str = "\
toroid44(b,c)        {4,4}_(b,c), order 4(b²+c²)
toroid36(b,c)        {3,6}_(b,c), order 6(b²+bc+c²)
toroid63(b,c)        {6,3}_(b,c), dual of toroid36(b,c)
cubic_toroid(n,s,k)  {4,3^(n-3),4}_(s^k,0^(n-k-1)), k in {1,2,n-1}
universal(p1,...)    universal directly regular polytope of the given type
simplex(n)           the n-simplex
trivial_extension(E) {E,2} for a directly regular catalog entry E
s6_3443              chiral {3,4,4,3} with rotation group S6
m11_11_5             totally chiral map {11,5} with rotation group M11
";

/// Without an entry, list the families; with one, print its presentation.
pub fn cmd_catalog(entry: Option<&str>, budget: usize) -> Result<Output> {
    let Some(entry) = entry else {
        return Ok(Output::ok(CATALOG_HELP.to_string()));
    };
    let entry = entry.strip_prefix("catalog:").unwrap_or(entry);
    let r = load(&format!("catalog:{entry}"), budget)?;
    Ok(Output::ok(dsl::serialize(r.presentation())))
}

pub fn cmd_reproduce(budget: usize) -> Output {
    let rows = reproduce::run(budget);
    let text = reproduce::render(&rows);
    let code = if rows.iter().any(|r| r.status == reproduce::Status::Fail) {
        EXIT_FAILED_CHECK
    } else if rows.iter().any(|r| r.status == reproduce::Status::Budget) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Output { text, code }
}
