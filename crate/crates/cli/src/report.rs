//! Reports, serialized as pretty-printed JSON with fields in declaration
//! order. Field names are the stable interface documented in the README.

use serde::Serialize;
use serde_json::{json, Value};

use chiralmix::criteria::{Certificate, Conclusion};
use chiralmix::mixer::{chirality_group, ChiralityOrder, ProductFormula};
use chiralmix::rotation::{IntersectionMethod, RotationSystem};
use chiralmix::{Error, Result};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ChiralitySummary {
    /// `null` when unknown.
    pub order: Option<u64>,
    pub quotient_order: Option<u64>,
    pub abelian_invariants: Option<Vec<u64>>,
    pub simple: Option<bool>,
    pub totally_chiral: Option<bool>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PremiseReport {
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CertificateReport {
    pub theorem: String,
    pub conclusion: Value,
    pub premises: Vec<PremiseReport>,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport {
            theorem: c.theorem.tag().to_string(),
            conclusion: conclusion_json(&c.conclusion),
            premises: c
                .premises
                .iter()
                .map(|p| PremiseReport {
                    statement: p.statement.clone(),
                    holds: p.holds,
                })
                .collect(),
        }
    }
}

pub fn conclusion_json(c: &Conclusion) -> Value {
    match c {
        Conclusion::Polytopal => json!({ "kind": "Polytopal" }),
        Conclusion::Chiral => json!({ "kind": "Chiral" }),
        Conclusion::ChiralityGroupEquals {
            order,
            abelian_invariants,
            simple,
        } => json!({
            "kind": "ChiralityGroupEquals",
            "order": order,
            "abelian_invariants": abelian_invariants,
            "simple": simple,
        }),
        Conclusion::DividesBound { first, second } => json!({
            "kind": "DividesBound",
            "first": first,
            "second": second,
        }),
        Conclusion::InfiniteChiralityGroup { subjects } => json!({
            "kind": "InfiniteChiralityGroup",
            "subjects": subjects,
        }),
        Conclusion::ChiralWithRegularFacets { subject } => json!({
            "kind": "ChiralWithRegularFacets",
            "subject": subject,
        }),
        Conclusion::Inconclusive => json!({ "kind": "Inconclusive" }),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ClassificationReport {
    pub input: String,
    pub rank: usize,
    /// `"finite"` or `"unknown"`.
    pub status: String,
    pub order: Option<u64>,
    pub schlafli: Option<Vec<u64>>,
    pub polytopal: Option<bool>,
    pub intersection_method: Option<String>,
    pub intersection_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub face_vector: Option<Vec<u64>>,
    pub flags: Option<u64>,
    pub directly_regular: Option<bool>,
    pub chirality: Option<ChiralitySummary>,
    pub certificates: Vec<CertificateReport>,
}

impl ClassificationReport {
    /// Whether the numeric fields agree with each other.
    pub fn consistent(&self) -> bool {
        let flags_ok = match (self.flags, self.order) {
            (Some(f), Some(o)) => f == 2 * o,
            (None, _) => true,
            _ => false,
        };
        let faces_ok = match (&self.face_vector, self.order) {
            (Some(v), Some(o)) => v.iter().all(|&k| k > 0 && o % k == 0),
            _ => true,
        };
        let chirality_ok = match (&self.chirality, self.directly_regular) {
            (Some(c), Some(dr)) => c.order.is_none_or(|x| (x == 1) == dr),
            _ => true,
        };
        flags_ok && faces_ok && chirality_ok
    }
}

pub fn method_name(m: IntersectionMethod) -> &'static str {
    match m {
        IntersectionMethod::Exhaustive => "exhaustive",
        IntersectionMethod::Inductive => "inductive",
    }
}

pub fn chirality_summary(r: &RotationSystem, budget: usize) -> Result<ChiralitySummary> {
    let c = chirality_group(r, budget)?;
    Ok(ChiralitySummary {
        order: match c.order {
            ChiralityOrder::Finite(n) => Some(n),
            _ => None,
        },
        quotient_order: c.quotient_order,
        abelian_invariants: c.abelian_invariants,
        simple: c.simple,
        totally_chiral: c.totally_chiral,
        label: c.label_heuristic,
    })
}

/// Options for [`classify`].
#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub faces: bool,
    pub polytopality: bool,
    pub chirality: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            faces: true,
            polytopality: true,
            chirality: true,
        }
    }
}

/// Classify a rotation system. Systems without a realization get a report
/// with `status = "unknown"` and everything else `null`.
pub fn classify(
    input: &str,
    r: &RotationSystem,
    opts: ClassifyOptions,
    budget: usize,
) -> Result<ClassificationReport> {
    let mut rep = ClassificationReport {
        input: input.to_string(),
        rank: r.rank(),
        status: "unknown".into(),
        order: None,
        schlafli: None,
        polytopal: None,
        intersection_method: None,
        intersection_witness: None,
        face_vector: None,
        flags: None,
        directly_regular: None,
        chirality: None,
        certificates: Vec::new(),
    };
    if !r.is_finite() {
        return Ok(rep);
    }
    rep.status = "finite".into();
    rep.order = r.order();
    rep.schlafli = Some(r.schlafli()?);
    rep.flags = rep.order.map(|o| 2 * o);
    if opts.polytopality || opts.faces {
        let ip = r.check_intersection_property()?;
        rep.polytopal = Some(ip.holds);
        rep.intersection_method = Some(method_name(ip.method).into());
        rep.intersection_witness = ip.witness;
        if ip.holds && opts.faces {
            rep.face_vector = Some(r.face_data(true)?.face_vector);
        }
    }
    rep.directly_regular = Some(r.is_directly_regular()?);
    if opts.chirality {
        rep.chirality = Some(chirality_summary(r, budget)?);
    }
    if !rep.consistent() {
        return Err(Error::Inconsistent(format!(
            "report fields disagree for {input}"
        )));
    }
    Ok(rep)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProductFormulaReport {
    pub mix: u64,
    pub comix: u64,
    pub left: u64,
    pub right: u64,
    pub holds: bool,
}

impl From<&ProductFormula> for ProductFormulaReport {
    fn from(p: &ProductFormula) -> Self {
        ProductFormulaReport {
            mix: p.mix,
            comix: p.comix,
            left: p.left,
            right: p.right,
            holds: p.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MixReport {
    pub left: String,
    pub right: String,
    pub mix: ClassificationReport,
    pub comix_order: Option<u64>,
    pub product_formula: Option<ProductFormulaReport>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ComixReport {
    pub left: String,
    pub right: String,
    pub comix: ClassificationReport,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ChiralityReportOut {
    pub input: String,
    pub order: Option<u64>,
    pub directly_regular: Option<bool>,
    pub chirality: ChiralitySummary,
    pub minimal_regular_cover_order: Option<u64>,
    pub maximal_regular_quotient_order: Option<u64>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CertifyReport {
    pub left: String,
    pub right: String,
    pub certificates: Vec<CertificateReport>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}
