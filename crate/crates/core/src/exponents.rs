//! Cuspidal-exponent vectors of the residues, allowable shuffles, and the
//! Langlands square-integrability criterion.
//!
//! Exponents are stored relative to the rho-vector of the Siegel-side block
//! parabolic (the prefix-sum criterion applies to the relative vectors);
//! [`CuspidalExponent::absolute`] adds the rho-vector back. For type C in
//! block-determinant coordinates the criterion reads: every dot product with
//! `(1,..,1,0,..,0)` is strictly negative.

use std::collections::BTreeSet;

use crate::consterm::{laurent_analysis, residue_points, CuspSlot, LaurentReport, N0};
use crate::lformal::{TauKind, TauProfile};
use crate::rational::{Basis, Rational, RationalVector};
use crate::rootsys::rho_siegel_levi;
use crate::{Error, Result};

/// How an exponent vector was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The defining vector `chi_i^(b)`.
    Chi(u32),
    /// A nontrivial shuffle of `chi_i^(b)` (moves of the designated entry).
    Shuffle { of: u32, moves: u32, sign_flipped: bool },
}

/// A cuspidal exponent in relative (rho-subtracted) coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalExponent {
    pub relative: RationalVector,
    pub b: u32,
    pub provenance: Provenance,
}

impl CuspidalExponent {
    /// The absolute exponent `rho_b^(a) + relative`.
    pub fn absolute(&self, a: u32) -> RationalVector {
        rho_siegel_levi(a, self.b)
            .add(&self.relative)
            .expect("relative exponent has length b")
    }
}

/// The defining exponent vector `chi_i^(b)` (relative part).
///
/// For `i = 0`: `-((2b-1)/2, ..., 1/2)` in the symplectic case,
/// `-(b-1, ..., 0)` in the orthogonal case. For `i > 0` the vector is the
/// descending block of length `i` followed by the descending block of length
/// `b - i`, negated:
/// `-((2i-1)/2, ..., 1/2, (2(b-i)-1)/2, ..., 1/2)` respectively
/// `-(i, ..., 1, b-1-i, ..., 0)`.
pub fn chi_vec(b: u32, i: u32, kind: TauKind) -> Result<CuspidalExponent> {
    if i >= b.div_ceil(2) {
        return Err(Error::IndexOutOfRange { what: "chi index" });
    }
    let bi = b as i64;
    let ii = i as i64;
    // leading block of length i: (2i-1)/2, ..., 1/2 resp. i, ..., 1
    let leading = |len: i64| -> Vec<Rational> {
        (0..len)
            .map(|k| match kind {
                TauKind::Symplectic => Rational::half(2 * (len - k) - 1),
                TauKind::Orthogonal => Rational::from_int(len - k),
            })
            .collect()
    };
    // trailing block of length b-i: (2(b-i)-1)/2, ..., 1/2 resp. b-1-i, ..., 0
    let trailing = |len: i64| -> Vec<Rational> {
        (0..len)
            .map(|k| match kind {
                TauKind::Symplectic => Rational::half(2 * (len - k) - 1),
                TauKind::Orthogonal => Rational::from_int(len - 1 - k),
            })
            .collect()
    };
    // i = 0 degenerates to the single trailing block of length b
    let mut entries = leading(ii);
    entries.extend(trailing(bi - ii));
    let relative = RationalVector::new(entries.into_iter().map(|e| -e).collect(), Basis::F);
    Ok(CuspidalExponent { relative, b, provenance: Provenance::Chi(i) })
}

/// All nontrivial shuffles of `chi`: the designated entry (1-based position)
/// moves rightward through the tail one slot at a time; on reaching the final
/// slot the vector also appears with that entry's sign flipped. The prefix to
/// the left of the designated entry never moves. A designated entry already
/// in the final slot yields the vector itself and its sign-flipped variant.
pub fn allowable_shuffles(
    chi: &CuspidalExponent,
    designated: usize,
) -> Result<Vec<CuspidalExponent>> {
    let n = chi.relative.len();
    if designated == 0 || designated > n {
        return Err(Error::IndexOutOfRange { what: "designated shuffle entry" });
    }
    let p = designated - 1;
    let base = chi.relative.entries().to_vec();
    let arrangement = |q: usize, flip: bool| -> RationalVector {
        let mut v: Vec<Rational> = Vec::with_capacity(n);
        v.extend_from_slice(&base[..p]);
        v.extend_from_slice(&base[p + 1..=q]);
        v.push(if flip { -base[p] } else { base[p] });
        v.extend_from_slice(&base[q + 1..]);
        RationalVector::new(v, Basis::F)
    };
    let of = match chi.provenance {
        Provenance::Chi(i) => i,
        Provenance::Shuffle { of, .. } => of,
    };
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |vec: RationalVector, moves: u32, flipped: bool| {
        if seen.insert(vec.entries().to_vec()) {
            out.push(CuspidalExponent {
                relative: vec,
                b: chi.b,
                provenance: Provenance::Shuffle { of, moves, sign_flipped: flipped },
            });
        }
    };
    if p == n - 1 {
        push(arrangement(p, false), 0, false);
        push(arrangement(p, true), 0, true);
        return Ok(out);
    }
    for q in (p + 1)..n {
        push(arrangement(q, false), (q - p) as u32, false);
    }
    push(arrangement(n - 1, true), (n - 1 - p) as u32, true);
    Ok(out)
}

/// Langlands criterion for type C in these coordinates: square-integrable iff
/// every prefix sum of the relative exponent is strictly negative.
pub fn square_integrable(chi: &RationalVector) -> bool {
    chi.prefix_sums().iter().all(Rational::is_negative)
}

/// The `possible` side of a residue exponent report: either an enumerated
/// set or not determined (interior points beyond the first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PossibleSet {
    Listed(Vec<CuspidalExponent>),
    Unknown,
}

/// Exponent sets of the residue at `s_i^(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentReport {
    pub a: u32,
    pub b: u32,
    pub i: u32,
    pub kind: TauKind,
    pub n0: N0,
    /// Exponents guaranteed to occur.
    pub certain: Vec<CuspidalExponent>,
    /// Exponents that may additionally occur.
    pub possible: PossibleSet,
    /// The rule used to assemble the sets.
    pub rule: &'static str,
    /// The Laurent analysis behind the `i = 1` filter, when one was run.
    pub laurent: Option<LaurentReport>,
}

/// Certain/possible cuspidal exponents of the residue at `s_i^(b)`:
///
/// - `i = 0`: exactly `chi_0^(b)`;
/// - `i = 1`: `chi_1^(b)` and/or its nontrivial shuffles, filtered by which
///   summands can carry the leading Laurent term under the `n_0` hypothesis;
/// - `i >= 2`: at least `chi_i^(b)`, with the possible set left undetermined.
pub fn residue_exponent_sets(
    a: u32,
    b: u32,
    i: u32,
    kind: TauKind,
    n0: N0,
) -> Result<ExponentReport> {
    if !residue_points(b, kind).iter().any(|p| p.index == i) {
        return Err(Error::IndexOutOfRange { what: "residue point index" });
    }
    let chi = chi_vec(b, i, kind)?;
    let mut report = ExponentReport {
        a,
        b,
        i,
        kind,
        n0,
        certain: Vec::new(),
        possible: PossibleSet::Listed(Vec::new()),
        rule: "",
        laurent: None,
    };
    match i {
        0 => {
            report.certain = vec![chi];
            report.rule = "endpoint: single exponent";
        }
        1 => {
            let profile = TauProfile::new(a, kind);
            let laurent = laurent_analysis(a, b, &profile, i, n0)?;
            let leads: BTreeSet<CuspSlot> =
                laurent.leading_term_sources.iter().map(|p| p[0]).collect();
            if leads.contains(&CuspSlot::Left) {
                report.certain = vec![chi.clone()];
            }
            if leads.contains(&CuspSlot::Right) {
                report.possible = PossibleSet::Listed(allowable_shuffles(&chi, 1)?);
            }
            report.rule = "first interior point: chi_1 and shuffles, n0-filtered";
            report.laurent = Some(laurent);
        }
        _ => {
            report.certain = vec![chi];
            report.possible = PossibleSet::Unknown;
            report.rule = "interior point: chi_i certain, further exponents undetermined";
        }
    }
    Ok(report)
}
