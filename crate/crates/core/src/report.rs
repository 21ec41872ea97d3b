//! Machine-readable reports shared by the CLI and the browser demo.
//!
//! JSON canonical form: struct fields are declared in alphabetical order with
//! lowercase snake_case keys, and every rational serializes as the string
//! `"p/q"` (or `"n"` when integral), so parsing and re-serializing an emitted
//! document is byte-identical.

use serde::{Deserialize, Serialize};

use crate::consterm::{
    closed_x, expand_constant_term, pole_candidates, residue_points, EisDescriptor, Expansion,
    LaurentReport, TermTree, N0,
};
use crate::exponents::{residue_exponent_sets, Provenance, PossibleSet};
use crate::lformal::TauKind;
use crate::normalize::{a_factor, b_factor, gamma_factor};
use crate::rational::RationalVector;
use crate::Result;

fn rationals(values: impl IntoIterator<Item = crate::rational::Rational>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

fn vector_strings(v: &RationalVector) -> Vec<String> {
    rationals(v.entries().iter().copied())
}

/// Pole segment and candidate report for `poles`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolesReport {
    pub b: u32,
    pub candidates: Vec<String>,
    pub residue_points: Vec<String>,
    pub tau_type: String,
    pub x_b: Vec<String>,
}

pub fn poles_report(b: u32, kind: TauKind) -> PolesReport {
    let mut candidates: Vec<_> = pole_candidates(b, kind).into_iter().collect();
    candidates.reverse(); // descending, matching x_b
    PolesReport {
        b,
        candidates: rationals(candidates),
        residue_points: rationals(residue_points(b, kind).iter().map(|p| p.value)),
        tau_type: kind.as_str().to_string(),
        x_b: rationals(closed_x(b, kind)),
    }
}

/// Normalizing factors for `normalizers`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NormalizersReport {
    pub a_b: String,
    pub b: u32,
    pub b_b: String,
    pub gamma_b: Option<String>,
}

pub fn normalizers_report(b: u32) -> NormalizersReport {
    NormalizersReport {
        a_b: a_factor(b).to_string(),
        b,
        b_b: b_factor(b).to_string(),
        gamma_b: gamma_factor(b).ok().map(|g| g.to_string()),
    }
}

/// Report for `gamma`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GammaReport {
    pub b: u32,
    pub gamma_b: String,
}

pub fn gamma_report(b: u32) -> Result<GammaReport> {
    Ok(GammaReport { b, gamma_b: gamma_factor(b)?.to_string() })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DescriptorJson {
    pub a: u32,
    pub b: u32,
    pub data: String,
    pub shift: String,
    pub tau_type: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LeafTermJson {
    pub coeff: String,
    pub det_exponent: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummandJson {
    pub child: TreeJson,
    pub coeff: String,
    pub cusp_slot: String,
    pub det_exponent: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeJson {
    pub base_terms: Option<Vec<LeafTermJson>>,
    pub descriptor: DescriptorJson,
    pub summands: Option<Vec<SummandJson>>,
}

fn tree_json(tree: &TermTree) -> TreeJson {
    let d = &tree.root;
    let descriptor = DescriptorJson {
        a: d.a,
        b: d.b,
        data: d.data.as_str().to_string(),
        shift: d.shift.to_string(),
        tau_type: d.profile.kind.as_str().to_string(),
    };
    match &tree.expansion {
        Expansion::Series => TreeJson { base_terms: None, descriptor, summands: None },
        Expansion::Base(plus, minus) => TreeJson {
            base_terms: Some(
                [plus, minus]
                    .iter()
                    .map(|t| LeafTermJson {
                        coeff: t.coeff.to_string(),
                        det_exponent: t.det_exponent.to_string(),
                    })
                    .collect(),
            ),
            descriptor,
            summands: None,
        },
        Expansion::Split(l, r) => TreeJson {
            base_terms: None,
            descriptor,
            summands: Some(
                [l, r]
                    .iter()
                    .map(|n| SummandJson {
                        child: tree_json(&n.child),
                        coeff: n.coeff.to_string(),
                        cusp_slot: n.cusp_slot.as_str().to_string(),
                        det_exponent: n.det_exponent.to_string(),
                    })
                    .collect(),
            ),
        },
    }
}

/// Report for `constterm`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConstTermReport {
    pub depth: u32,
    pub tree: TreeJson,
}

pub fn constterm_report(a: u32, b: u32, kind: TauKind, depth: u32) -> Result<ConstTermReport> {
    let root = EisDescriptor::original(a, b, kind);
    let tree = expand_constant_term(&root, depth)?;
    Ok(ConstTermReport { depth, tree: tree_json(&tree) })
}

/// Plain-text rendering of the same expansion.
pub fn constterm_text(a: u32, b: u32, kind: TauKind, depth: u32) -> Result<String> {
    let root = EisDescriptor::original(a, b, kind);
    Ok(expand_constant_term(&root, depth)?.render_text())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LaurentJson {
    pub leading_terms: Vec<String>,
    pub n0_one_excluded: bool,
    pub pole_order: String,
}

fn laurent_json(rep: &LaurentReport) -> LaurentJson {
    LaurentJson {
        leading_terms: rep
            .leading_term_sources
            .iter()
            .map(|p| {
                p.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(".")
            })
            .collect(),
        n0_one_excluded: rep.n0_one_excluded,
        pole_order: rep.pole_order.to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExponentJson {
    pub absolute: Vec<String>,
    pub provenance: String,
    pub relative: Vec<String>,
    pub square_integrable: bool,
}

/// Report for `exponents`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExponentsReport {
    pub a: u32,
    pub b: u32,
    pub certain: Vec<ExponentJson>,
    pub i: u32,
    pub laurent: Option<LaurentJson>,
    pub n0: String,
    pub possible: Option<Vec<ExponentJson>>,
    pub possible_determined: bool,
    pub rule: String,
    pub tau_type: String,
}

pub fn exponents_report(a: u32, b: u32, i: u32, kind: TauKind, n0: N0) -> Result<ExponentsReport> {
    let rep = residue_exponent_sets(a, b, i, kind, n0)?;
    let render = |e: &crate::exponents::CuspidalExponent| ExponentJson {
        absolute: vector_strings(&e.absolute(a)),
        provenance: match &e.provenance {
            Provenance::Chi(i) => format!("chi_{i}"),
            Provenance::Shuffle { of, moves, sign_flipped } => format!(
                "shuffle of chi_{of} ({moves} move{}{})",
                if *moves == 1 { "" } else { "s" },
                if *sign_flipped { ", sign flipped" } else { "" }
            ),
        },
        relative: vector_strings(&e.relative),
        square_integrable: crate::exponents::square_integrable(&e.relative),
    };
    let (possible, possible_determined) = match &rep.possible {
        PossibleSet::Listed(v) => (Some(v.iter().map(render).collect()), true),
        PossibleSet::Unknown => (None, false),
    };
    Ok(ExponentsReport {
        a,
        b,
        certain: rep.certain.iter().map(render).collect(),
        i,
        laurent: rep.laurent.as_ref().map(laurent_json),
        n0: rep.n0.to_string(),
        possible,
        possible_determined,
        rule: rep.rule.to_string(),
        tau_type: kind.as_str().to_string(),
    })
}

/// Report for `check-l2`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckL2Report {
    pub prefix_sums: Vec<String>,
    pub square_integrable: bool,
    pub vector: Vec<String>,
}

pub fn check_l2_report(v: &RationalVector) -> CheckL2Report {
    CheckL2Report {
        prefix_sums: rationals(v.prefix_sums()),
        square_integrable: crate::exponents::square_integrable(v),
        vector: vector_strings(v),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckJson {
    pub detail: String,
    pub name: String,
    pub pass: bool,
}

/// Report for `verify`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckJson>,
    pub failed: u32,
    pub passed: u32,
}

pub fn verify_report() -> VerifyReport {
    let checks = crate::verify::run_all();
    let failed = checks.iter().filter(|c| !c.pass).count() as u32;
    let passed = checks.len() as u32 - failed;
    VerifyReport {
        checks: checks
            .into_iter()
            .map(|c| CheckJson { detail: c.detail, name: c.name, pass: c.pass })
            .collect(),
        failed,
        passed,
    }
}

/// Compact JSON encoding of any report.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string(report).expect("reports serialize")
}
