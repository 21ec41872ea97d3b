//! The inductive expansion of the principal constant term, residue points,
//! pole-candidate propagation, and the Laurent case analysis at interior
//! residue points.
//!
//! A normalized series of rank `b >= 2` splits into two summands (all other
//! Weyl-chamber terms vanish by cuspidality of the block data, which is why
//! the tree is binary): the first carries the coefficient
//! `{L_S(2s'+1,vee^2)/L_S(2s'+1,wedge^2)}_b`, a determinant exponent
//! `s' + ab - (a+b)/2 + 1` with the cusp factor on the left, and a child
//! series of rank `b-1` at parameter shift `+1/2`; the second carries
//! `{L_S(2s',vee^2)/L_S(2s',wedge^2)}_b`, the mirrored exponent, the cusp
//! factor on the right, and a child at shift `-1/2`. The rank-1 constant
//! term is the two-term base case. Trees track one global parameter `s` plus
//! a per-node half-integer shift.
//!
//! The Laurent analysis combines coefficient orders, recursive child orders
//! at shifted residue points, and an order-of-zero hypothesis `n_0` for
//! lower-rank series evaluated at the origin. Two standing facts are used:
//! residues at valid residue points are nonzero (so `Known` orders are
//! exact), and the two summands carry different leading determinant
//! exponents, so their leading terms never cancel.

use std::collections::BTreeSet;

use crate::lformal::{AffineArg, AnalyticOrder, LExpr, LKind, LTerm, TauKind, TauProfile};
use crate::normalize::{b_factor, first_ratio_coeff, second_ratio_coeff};
use crate::rational::Rational;
use crate::{Error, Result};

/// Which inducing data a node of the expansion carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataTag {
    /// The original Speh datum.
    Original,
    /// The restriction of the datum to the lower-rank group (first summand).
    Pushed,
    /// The image under the normalized rank-lowering operator (second summand).
    Twisted,
}

impl DataTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            DataTag::Original => "original",
            DataTag::Pushed => "pushed",
            DataTag::Twisted => "twisted",
        }
    }
}

/// One Eisenstein series in the expansion: rank data plus the accumulated
/// half-integer shift of its parameter relative to the root variable `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisDescriptor {
    pub a: u32,
    pub b: u32,
    pub profile: TauProfile,
    pub data: DataTag,
    pub shift: Rational,
}

impl EisDescriptor {
    /// The root series for `Delta(tau, b)` on `Sp_{2ab}`.
    pub fn original(a: u32, b: u32, kind: TauKind) -> Self {
        EisDescriptor {
            a,
            b,
            profile: TauProfile::new(a, kind),
            data: DataTag::Original,
            shift: Rational::ZERO,
        }
    }
}

/// Which side of a summand the cusp-form factor sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CuspSlot {
    Left,
    Right,
}

impl CuspSlot {
    pub fn as_str(&self) -> &'static str {
        match self {
            CuspSlot::Left => "left",
            CuspSlot::Right => "right",
        }
    }
}

/// One of the two terms of the rank-1 base case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafTerm {
    pub coeff: LExpr,
    pub det_exponent: AffineArg,
}

/// One summand of the inductive formula at a node of rank `b >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermNode {
    pub coeff: LExpr,
    pub det_exponent: AffineArg,
    pub cusp_slot: CuspSlot,
    pub child: TermTree,
}

/// How far a node has been expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    /// Unexpanded series.
    Series,
    /// Rank-1 constant term: the two base-case terms.
    Base(LeafTerm, LeafTerm),
    /// The two summands of the inductive formula.
    Split(Box<TermNode>, Box<TermNode>),
}

/// A (sub)tree of the constant-term expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermTree {
    pub root: EisDescriptor,
    pub expansion: Expansion,
}

/// Determinant-exponent offset `ab - (a+b)/2 + 1` at rank `b` (also correct
/// for the `b = 1` base case, where it equals `(a+1)/2`).
fn det_offset(a: u32, b: u32) -> Rational {
    let (a, b) = (a as i64, b as i64);
    Rational::from_int(a * b) - Rational::half(a + b) + Rational::ONE
}

fn base_case(desc: EisDescriptor) -> TermTree {
    let delta = desc.shift;
    let off = det_offset(desc.a, 1);
    // L_S(s'+1, tau) L_S(2s'+1, wedge^2), exponent s' + (a+1)/2
    let plus = LeafTerm {
        coeff: b_factor(1).shift(delta),
        det_exponent: AffineArg::in_s(1, delta + off),
    };
    // completed L(s', tau) L(2s', wedge^2), exponent -s' + (a+1)/2
    let mut minus_coeff = LExpr::unit();
    minus_coeff.push(
        LTerm::completed(LKind::Standard, AffineArg::in_s(1, delta)),
        1,
    );
    minus_coeff.push(
        LTerm::completed(LKind::ExtSq, AffineArg::in_s(2, delta + delta)),
        1,
    );
    let minus = LeafTerm {
        coeff: minus_coeff,
        det_exponent: AffineArg::in_s(-1, -delta + off),
    };
    TermTree { root: desc, expansion: Expansion::Base(plus, minus) }
}

fn expand_inner(desc: EisDescriptor, remaining: u32) -> TermTree {
    if desc.b == 1 {
        return base_case(desc);
    }
    if remaining == 0 {
        return TermTree { root: desc, expansion: Expansion::Series };
    }
    let delta = desc.shift;
    let off = det_offset(desc.a, desc.b);
    let half = Rational::half(1);
    let left_child = EisDescriptor {
        b: desc.b - 1,
        data: DataTag::Pushed,
        shift: delta + half,
        ..desc.clone()
    };
    let right_child = EisDescriptor {
        b: desc.b - 1,
        data: DataTag::Twisted,
        shift: delta - half,
        ..desc.clone()
    };
    let left = TermNode {
        coeff: first_ratio_coeff(desc.b).shift(delta),
        det_exponent: AffineArg::in_s(1, delta + off),
        cusp_slot: CuspSlot::Left,
        child: expand_inner(left_child, remaining - 1),
    };
    let right = TermNode {
        coeff: second_ratio_coeff(desc.b).shift(delta),
        det_exponent: AffineArg::in_s(-1, -delta + off),
        cusp_slot: CuspSlot::Right,
        child: expand_inner(right_child, remaining - 1),
    };
    TermTree { root: desc, expansion: Expansion::Split(Box::new(left), Box::new(right)) }
}

/// Expand the constant term of `root` through `depth` rank-lowering steps.
/// Rank-1 children always carry their two base-case terms; `depth = 0`
/// returns the unexpanded root.
pub fn expand_constant_term(root: &EisDescriptor, depth: u32) -> Result<TermTree> {
    if depth > root.b.saturating_sub(1) {
        return Err(Error::DepthExceedsRank { depth, b: root.b });
    }
    if depth == 0 {
        return Ok(TermTree { root: root.clone(), expansion: Expansion::Series });
    }
    Ok(expand_inner(root.clone(), depth))
}

impl TermTree {
    /// Number of base-case terms reachable in the expanded tree.
    pub fn leaf_term_count(&self) -> usize {
        match &self.expansion {
            Expansion::Series => 0,
            Expansion::Base(_, _) => 2,
            Expansion::Split(l, r) => l.child.leaf_term_count() + r.child.leaf_term_count(),
        }
    }

    /// Indented plain-text rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        let d = &self.root;
        out.push_str(&format!(
            "{pad}E*(a={}, b={}, tau={}, data={}, shift={})\n",
            d.a,
            d.b,
            d.profile.kind,
            d.data.as_str(),
            d.shift
        ));
        match &self.expansion {
            Expansion::Series => {}
            Expansion::Base(plus, minus) => {
                out.push_str(&format!(
                    "{pad}  term[+]: coeff = {} ; det_exp = {}\n",
                    plus.coeff, plus.det_exponent
                ));
                out.push_str(&format!(
                    "{pad}  term[-]: coeff = {} ; det_exp = {}\n",
                    minus.coeff, minus.det_exponent
                ));
            }
            Expansion::Split(l, r) => {
                for node in [l, r] {
                    out.push_str(&format!(
                        "{pad}  term[{}]: coeff = {} ; det_exp = {} ; cusp on the {}\n",
                        node.cusp_slot.as_str(),
                        node.coeff,
                        node.det_exponent,
                        node.cusp_slot.as_str()
                    ));
                    node.child.render_into(out, indent + 2);
                }
            }
        }
    }
}

/// A residue point `s_i^(b)` on the positive axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResiduePoint {
    pub b: u32,
    pub index: u32,
    pub value: Rational,
}

/// Raw value `b/2 - i` (symplectic) or `b/2 - i - 1/2` (orthogonal), without
/// the positivity filter.
fn residue_value(b: u32, i: u32, kind: TauKind) -> Rational {
    let base = Rational::half(b as i64) - Rational::from_int(i as i64);
    match kind {
        TauKind::Symplectic => base,
        TauKind::Orthogonal => base - Rational::half(1),
    }
}

/// The residue points `s_i^(b)` for `i = 0..ceil(b/2)-1`, descending, keeping
/// only strictly positive values.
pub fn residue_points(b: u32, kind: TauKind) -> Vec<ResiduePoint> {
    let mut points = Vec::new();
    for i in 0..b.div_ceil(2) {
        let value = residue_value(b, i, kind);
        if value.is_positive() {
            points.push(ResiduePoint { b, index: i, value });
        }
    }
    points
}

/// Verify the shift relations `s_{i-1}^{(b-1)} = s_i^(b) + 1/2` (for `i >= 1`)
/// and `s_i^{(b-1)} = s_i^(b) - 1/2`, on raw values.
pub fn shift_relations_check(b: u32, i: u32, kind: TauKind) -> Result<bool> {
    if b < 2 || i >= b.div_ceil(2) {
        return Err(Error::IndexOutOfRange { what: "shift relation indices" });
    }
    let s = residue_value(b, i, kind);
    let half = Rational::half(1);
    let mut ok = residue_value(b - 1, i, kind) == s - half;
    if i >= 1 {
        ok &= residue_value(b - 1, i - 1, kind) == s + half;
    }
    Ok(ok)
}

/// The closed segment `X_b` containing all possible poles:
/// `{b/2, b/2-1, ..., -b/2}` for symplectic type,
/// `{(b-1)/2, ..., -(b-1)/2}` for orthogonal type. Descending.
pub fn closed_x(b: u32, kind: TauKind) -> Vec<Rational> {
    let top = match kind {
        TauKind::Symplectic => Rational::half(b as i64),
        TauKind::Orthogonal => Rational::half(b as i64 - 1),
    };
    let steps = match kind {
        TauKind::Symplectic => b as i64,
        TauKind::Orthogonal => b as i64 - 1,
    };
    (0..=steps).map(|k| top - Rational::from_int(k)).collect()
}

fn pole_at_one(kind: LKind, tau: TauKind) -> bool {
    match kind {
        LKind::Standard => false,
        LKind::ExtSq => tau == TauKind::Symplectic,
        LKind::SymSq => tau == TauKind::Orthogonal,
        LKind::RankinSelberg => true,
    }
}

/// Points where some factor of a coefficient product can have a pole: the
/// solutions of `slope*p + offset = 1` over pole-carrying factor kinds.
fn coeff_pole_points(e: &LExpr, tau: TauKind) -> BTreeSet<Rational> {
    let mut points = BTreeSet::new();
    for (t, m) in e.terms() {
        if m > 0 && pole_at_one(t.kind, tau) && !t.arg.slope.is_zero() {
            points.insert((Rational::ONE - t.arg.offset) / t.arg.slope);
        }
    }
    points
}

fn candidates_positive(b: u32, kind: TauKind) -> BTreeSet<Rational> {
    let mut pos = BTreeSet::new();
    if b == 1 {
        // base-case coefficients: L_S(s+1)L_S(2s+1,w2) and L(s)L(2s,w2)
        let tree = base_case(EisDescriptor::original(1, 1, kind));
        if let Expansion::Base(plus, minus) = &tree.expansion {
            for coeff in [&plus.coeff, &minus.coeff] {
                pos.extend(coeff_pole_points(coeff, kind));
            }
        }
    } else {
        pos.extend(coeff_pole_points(&first_ratio_coeff(b), kind));
        pos.extend(coeff_pole_points(&second_ratio_coeff(b), kind));
        let half = Rational::half(1);
        for p in pole_candidates(b - 1, kind) {
            pos.insert(p - half);
            pos.insert(p + half);
        }
    }
    pos.retain(|p| p.is_positive());
    pos
}

/// All pole candidates of the rank-`b` normalized series: coefficient poles
/// and half-integer translates of lower-rank candidates, restricted to
/// `Re s > 0` and then closed under `s -> -s`.
pub fn pole_candidates(b: u32, kind: TauKind) -> BTreeSet<Rational> {
    let pos = candidates_positive(b, kind);
    let mut all = pos.clone();
    all.extend(pos.iter().map(|&p| -p));
    all
}

/// Order-of-zero hypothesis for lower-rank series at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N0 {
    Known(u32),
    Unknown,
}

impl std::fmt::Display for N0 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            N0::Known(k) => write!(f, "{k}"),
            N0::Unknown => write!(f, "unknown"),
        }
    }
}

/// Result of the Laurent case analysis at `s_i^(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentReport {
    pub a: u32,
    pub b: u32,
    pub i: u32,
    pub n0: N0,
    /// Laurent order of the full constant term (negative = pole order).
    pub pole_order: AnalyticOrder,
    /// Branch paths (summand choices from the root) that can carry the
    /// leading term.
    pub leading_term_sources: Vec<Vec<CuspSlot>>,
    /// Set when the stated case analysis rules out `n_0 = 1` for this
    /// configuration (an assumable fact, not derived here).
    pub n0_one_excluded: bool,
}

/// Order at the origin of the rank-lowering normalizing factor, as used in
/// the residue case analysis: a simple pole for odd rank >= 3 in the
/// orthogonal case, regular otherwise.
fn stated_normalizer_origin_order(rank: u32, kind: TauKind) -> i64 {
    if kind == TauKind::Orthogonal && rank % 2 == 1 && rank >= 3 {
        -1
    } else {
        0
    }
}

/// Order at the origin of the normalized rank-`rank` series under the `n_0`
/// hypothesis. Rank-1 series evaluated at the origin are regular nonzero.
fn origin_order(rank: u32, kind: TauKind, n0: N0) -> AnalyticOrder {
    if rank == 1 {
        return AnalyticOrder::Known(0);
    }
    let shift = stated_normalizer_origin_order(rank, kind);
    match n0 {
        N0::Known(k) => AnalyticOrder::Known(shift + k as i64),
        N0::Unknown => AnalyticOrder::AtLeast(shift),
    }
}

fn prefixed(side: CuspSlot, child_paths: &[Vec<CuspSlot>]) -> Vec<Vec<CuspSlot>> {
    if child_paths.is_empty() {
        return vec![vec![side]];
    }
    child_paths
        .iter()
        .map(|p| {
            let mut path = Vec::with_capacity(p.len() + 1);
            path.push(side);
            path.extend_from_slice(p);
            path
        })
        .collect()
}

fn combine(
    t1: (AnalyticOrder, Vec<Vec<CuspSlot>>),
    t2: (AnalyticOrder, Vec<Vec<CuspSlot>>),
) -> (AnalyticOrder, Vec<Vec<CuspSlot>>) {
    use AnalyticOrder::*;
    let union = |a: Vec<Vec<CuspSlot>>, b: Vec<Vec<CuspSlot>>| {
        let mut u = a;
        u.extend(b);
        u
    };
    match (t1.0, t2.0) {
        (Known(k1), Known(k2)) => {
            if k1 < k2 {
                (Known(k1), t1.1)
            } else if k2 < k1 {
                (Known(k2), t2.1)
            } else {
                (Known(k1), union(t1.1, t2.1))
            }
        }
        (Known(k1), AtLeast(k2)) => {
            if k2 > k1 {
                (Known(k1), t1.1)
            } else if k2 == k1 {
                (Known(k1), union(t1.1, t2.1))
            } else {
                (AtLeast(k2), union(t1.1, t2.1))
            }
        }
        (AtLeast(k1), Known(k2)) => {
            if k1 > k2 {
                (Known(k2), t2.1)
            } else if k1 == k2 {
                (Known(k2), union(t1.1, t2.1))
            } else {
                (AtLeast(k1), union(t1.1, t2.1))
            }
        }
        (AtLeast(k1), AtLeast(k2)) => (AtLeast(k1.min(k2)), union(t1.1, t2.1)),
        _ => (Unknown, union(t1.1, t2.1)),
    }
}

fn analyze(b: u32, i: u32, profile: &TauProfile, n0: N0) -> (AnalyticOrder, Vec<Vec<CuspSlot>>) {
    let kind = profile.kind;
    let s = residue_value(b, i, kind);
    debug_assert!(s.is_positive());
    if b == 1 {
        // only the symplectic endpoint s = 1/2 exists; the completed
        // second term carries the simple pole of L(2s, wedge^2)
        return (AnalyticOrder::Known(-1), vec![vec![CuspSlot::Right]]);
    }
    let half = Rational::half(1);

    let c1 = first_ratio_coeff(b)
        .order_at(s, profile)
        .expect("coefficients are cusp level");
    let (ch1, src1) = if i == 0 {
        // the child sits to the right of its right-most pole
        (AnalyticOrder::Known(0), Vec::new())
    } else {
        analyze(b - 1, i - 1, profile, n0)
    };
    let term1 = (c1 + ch1, prefixed(CuspSlot::Left, &src1));

    let c2 = second_ratio_coeff(b)
        .order_at(s, profile)
        .expect("coefficients are cusp level");
    let (ch2, src2) = if s == half {
        (origin_order(b - 1, kind, n0), Vec::new())
    } else {
        analyze(b - 1, i, profile, n0)
    };
    let term2 = (c2 + ch2, prefixed(CuspSlot::Right, &src2));

    combine(term1, term2)
}

/// Laurent case analysis of the rank-`b` series at `s_i^(b)` under the order
/// hypothesis `n_0` for origin evaluations of lower-rank series.
pub fn laurent_analysis(
    a: u32,
    b: u32,
    profile: &TauProfile,
    i: u32,
    n0: N0,
) -> Result<LaurentReport> {
    if !residue_points(b, profile.kind).iter().any(|p| p.index == i) {
        return Err(Error::IndexOutOfRange { what: "residue point index" });
    }
    let (pole_order, leading_term_sources) = analyze(b, i, profile, n0);
    Ok(LaurentReport {
        a,
        b,
        i,
        n0,
        pole_order,
        leading_term_sources,
        n0_one_excluded: b == 4 && profile.kind == TauKind::Orthogonal && i == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn values(b: u32, kind: TauKind) -> Vec<Rational> {
        residue_points(b, kind).iter().map(|p| p.value).collect()
    }

    #[test]
    fn residue_point_examples() {
        assert_eq!(values(4, TauKind::Symplectic), vec![q(2, 1), q(1, 1)]);
        assert_eq!(values(4, TauKind::Orthogonal), vec![q(3, 2), q(1, 2)]);
        assert_eq!(values(1, TauKind::Orthogonal), Vec::<Rational>::new());
        assert_eq!(values(1, TauKind::Symplectic), vec![q(1, 2)]);
        assert_eq!(values(3, TauKind::Orthogonal), vec![q(1, 1)]);
    }

    #[test]
    fn shift_relations() {
        assert!(shift_relations_check(4, 1, TauKind::Symplectic).unwrap());
        assert!(shift_relations_check(3, 1, TauKind::Symplectic).unwrap());
        assert!(shift_relations_check(2, 0, TauKind::Orthogonal).unwrap());
        for b in 2..=20u32 {
            for kind in [TauKind::Symplectic, TauKind::Orthogonal] {
                for i in 0..b.div_ceil(2) {
                    assert!(shift_relations_check(b, i, kind).unwrap(), "b={b} i={i}");
                }
            }
        }
        assert!(shift_relations_check(4, 7, TauKind::Symplectic).is_err());
    }

    #[test]
    fn closed_x_examples() {
        assert_eq!(
            closed_x(2, TauKind::Symplectic),
            vec![q(1, 1), q(0, 1), q(-1, 1)]
        );
        assert_eq!(closed_x(2, TauKind::Orthogonal), vec![q(1, 2), q(-1, 2)]);
        assert_eq!(closed_x(1, TauKind::Orthogonal), vec![q(0, 1)]);
    }

    #[test]
    fn pole_candidates_small() {
        let sympl1: Vec<_> = pole_candidates(1, TauKind::Symplectic).into_iter().collect();
        assert_eq!(sympl1, vec![q(-1, 2), q(1, 2)]);
        assert!(pole_candidates(1, TauKind::Orthogonal).is_empty());
        let sympl2: Vec<_> = pole_candidates(2, TauKind::Symplectic).into_iter().collect();
        assert_eq!(sympl2, vec![q(-1, 1), q(1, 1)]);
        let orth2: Vec<_> = pole_candidates(2, TauKind::Orthogonal).into_iter().collect();
        assert_eq!(orth2, vec![q(-1, 2), q(1, 2)]);
    }

    #[test]
    fn pole_candidates_contained_in_x() {
        for kind in [TauKind::Symplectic, TauKind::Orthogonal] {
            for b in 1..=10u32 {
                let x: BTreeSet<_> = closed_x(b, kind).into_iter().collect();
                let cands = pole_candidates(b, kind);
                assert!(cands.is_subset(&x), "b={b} {kind:?}");
                // right endpoint agreement where nonempty
                if let Some(max) = cands.iter().max() {
                    assert_eq!(*max, residue_points(b, kind)[0].value, "b={b} {kind:?}");
                }
                // positive candidates are exactly the residue points
                let pos: BTreeSet<_> =
                    cands.iter().copied().filter(Rational::is_positive).collect();
                let pts: BTreeSet<_> =
                    residue_points(b, kind).iter().map(|p| p.value).collect();
                assert_eq!(pos, pts, "b={b} {kind:?}");
            }
        }
    }

    #[test]
    fn expansion_depth_zero_and_errors() {
        let root = EisDescriptor::original(2, 4, TauKind::Symplectic);
        let t = expand_constant_term(&root, 0).unwrap();
        assert_eq!(t.expansion, Expansion::Series);
        assert!(expand_constant_term(&root, 4).is_err());
    }

    #[test]
    fn expansion_b2_matches_formula() {
        let root = EisDescriptor::original(3, 2, TauKind::Symplectic);
        let t = expand_constant_term(&root, 1).unwrap();
        let Expansion::Split(left, right) = &t.expansion else {
            panic!("expected split");
        };
        assert_eq!(left.coeff.to_string(), "L_S(2s+1, tau, vee2)^+1");
        assert_eq!(right.coeff.to_string(), "L_S(2s, tau, vee2)^+1");
        // det exponents +-s + ab - (a+b)/2 + 1 with a=3, b=2
        let off = q(2 * 3, 1) - q(5, 2) + q(1, 1);
        assert_eq!(left.det_exponent, AffineArg::in_s(1, off));
        assert_eq!(right.det_exponent, AffineArg::in_s(-1, off));
        assert_eq!(left.cusp_slot, CuspSlot::Left);
        assert_eq!(right.cusp_slot, CuspSlot::Right);
        // children are rank-1 base cases with shifts +-1/2
        assert_eq!(left.child.root.b, 1);
        assert_eq!(left.child.root.shift, q(1, 2));
        assert_eq!(left.child.root.data, DataTag::Pushed);
        assert_eq!(right.child.root.shift, q(-1, 2));
        assert_eq!(right.child.root.data, DataTag::Twisted);
        assert!(matches!(left.child.expansion, Expansion::Base(_, _)));
    }

    #[test]
    fn expansion_leaf_count() {
        let root = EisDescriptor::original(2, 4, TauKind::Symplectic);
        let t = expand_constant_term(&root, 3).unwrap();
        assert_eq!(t.leaf_term_count(), 16);
    }

    #[test]
    fn sibling_det_exponents_mirror() {
        // left/right determinant exponents differ exactly by the sign of the
        // s-slope, with equal offsets
        fn walk(tree: &TermTree) {
            if let Expansion::Split(l, r) = &tree.expansion {
                assert_eq!(l.det_exponent.slope, Rational::ONE);
                assert_eq!(r.det_exponent.slope, -Rational::ONE);
                assert_eq!(
                    l.det_exponent.offset - tree.root.shift,
                    r.det_exponent.offset + tree.root.shift
                );
                walk(&l.child);
                walk(&r.child);
            }
        }
        for b in 2..=6u32 {
            let root = EisDescriptor::original(2, b, TauKind::Orthogonal);
            walk(&expand_constant_term(&root, b - 1).unwrap());
        }
    }

    #[test]
    fn base_case_coefficients() {
        let root = EisDescriptor::original(2, 1, TauKind::Symplectic);
        let t = expand_inner(root, 0);
        let Expansion::Base(plus, minus) = &t.expansion else {
            panic!("expected base");
        };
        assert_eq!(
            plus.coeff.to_string(),
            "L_S(2s+1, tau, wedge2)^+1 * L_S(s+1, tau, std)^+1"
        );
        assert_eq!(
            minus.coeff.to_string(),
            "L(2s, tau, wedge2)^+1 * L(s, tau, std)^+1"
        );
        // det exponents +-s + (a+1)/2
        assert_eq!(plus.det_exponent, AffineArg::in_s(1, q(3, 2)));
        assert_eq!(minus.det_exponent, AffineArg::in_s(-1, q(3, 2)));
    }

    #[test]
    fn laurent_b3_symplectic_interior() {
        let profile = TauProfile::new(2, TauKind::Symplectic);
        let rep = laurent_analysis(2, 3, &profile, 1, N0::Unknown).unwrap();
        assert_eq!(rep.pole_order, AnalyticOrder::Known(-1));
        let firsts: BTreeSet<_> =
            rep.leading_term_sources.iter().map(|p| p[0]).collect();
        assert_eq!(
            firsts,
            BTreeSet::from([CuspSlot::Left, CuspSlot::Right]),
            "both terms contribute"
        );
        assert!(!rep.n0_one_excluded);
    }

    #[test]
    fn laurent_b4_orthogonal_interior() {
        let profile = TauProfile::new(3, TauKind::Orthogonal);
        // n0 >= 2: simple pole carried by the first term
        let rep = laurent_analysis(3, 4, &profile, 1, N0::Known(2)).unwrap();
        assert_eq!(rep.pole_order, AnalyticOrder::Known(-1));
        assert!(rep.leading_term_sources.iter().all(|p| p[0] == CuspSlot::Left));
        assert!(rep.n0_one_excluded);
        // n0 = 0: order-2 pole led by the second term
        let rep = laurent_analysis(3, 4, &profile, 1, N0::Known(0)).unwrap();
        assert_eq!(rep.pole_order, AnalyticOrder::Known(-2));
        assert!(rep.leading_term_sources.iter().all(|p| p[0] == CuspSlot::Right));
        // n0 = 1: simple pole carried by both
        let rep = laurent_analysis(3, 4, &profile, 1, N0::Known(1)).unwrap();
        assert_eq!(rep.pole_order, AnalyticOrder::Known(-1));
        let firsts: BTreeSet<_> =
            rep.leading_term_sources.iter().map(|p| p[0]).collect();
        assert_eq!(firsts, BTreeSet::from([CuspSlot::Left, CuspSlot::Right]));
    }

    #[test]
    fn laurent_monotone_in_n0() {
        // increasing n0 never deepens the pole
        let order_rank = |o: AnalyticOrder| match o {
            AnalyticOrder::Known(k) | AnalyticOrder::AtLeast(k) => k,
            AnalyticOrder::Unknown => i64::MIN,
        };
        for kind in [TauKind::Symplectic, TauKind::Orthogonal] {
            let profile = TauProfile::new(2, kind);
            for b in 2..=8u32 {
                for p in residue_points(b, kind) {
                    let mut prev = i64::MIN;
                    for n0 in 0..4u32 {
                        let rep =
                            laurent_analysis(2, b, &profile, p.index, N0::Known(n0)).unwrap();
                        let k = order_rank(rep.pole_order);
                        assert!(k >= prev, "b={b} i={} n0={n0} {kind:?}", p.index);
                        prev = k;
                    }
                }
            }
        }
    }

    #[test]
    fn every_valid_point_reports_a_pole() {
        // under any fixed n0 hypothesis all orders are exact and every
        // residue point carries a genuine pole
        for kind in [TauKind::Symplectic, TauKind::Orthogonal] {
            let profile = TauProfile::new(2, kind);
            for b in 1..=10u32 {
                for p in residue_points(b, kind) {
                    for n0 in 0..4u32 {
                        let rep =
                            laurent_analysis(2, b, &profile, p.index, N0::Known(n0)).unwrap();
                        match rep.pole_order {
                            AnalyticOrder::Known(k) => {
                                assert!(k <= -1, "b={b} i={} n0={n0} {kind:?}", p.index)
                            }
                            other => panic!("inexact order {other:?} under a known n0"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn laurent_rejects_invalid_index() {
        let profile = TauProfile::new(2, TauKind::Orthogonal);
        assert!(laurent_analysis(2, 1, &profile, 0, N0::Unknown).is_err());
        assert!(laurent_analysis(2, 3, &profile, 1, N0::Unknown).is_err());
    }

    #[test]
    fn endpoint_poles_are_simple() {
        for kind in [TauKind::Symplectic, TauKind::Orthogonal] {
            let profile = TauProfile::new(2, kind);
            for b in 1..=8u32 {
                if let Some(p) = residue_points(b, kind).first() {
                    let rep = laurent_analysis(2, b, &profile, p.index, N0::Unknown).unwrap();
                    assert_eq!(rep.pole_order, AnalyticOrder::Known(-1), "b={b} {kind:?}");
                }
            }
        }
    }
}
