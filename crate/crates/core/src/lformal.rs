//! Formal algebra of automorphic L-function symbols.
//!
//! An [`LTerm`] is a single symbol `L(slope*s + offset, object, kind)` where
//! the object is either the cusp form `tau` or a Speh block `Delta_b`, and
//! `kind` is one of the standard, exterior-square, symmetric-square or
//! Rankin-Selberg L-functions. An [`LExpr`] is a signed multiset of such
//! symbols: positive multiplicities form the numerator, negative the
//! denominator. Multiset arithmetic makes cancellation automatic and
//! order-independent.
//!
//! Speh-level symbols expand into cusp-level products ([`expand_speh`]);
//! Rankin-Selberg symbols split into exterior- and symmetric-square factors
//! ([`rs_split`]); and cusp-level expressions admit an exact analytic-order
//! evaluation at rational points ([`LExpr::order_at`]) under the standard
//! facts about poles of these L-functions at argument 1 and nonvanishing of
//! the central value.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;
use crate::{Error, Result};

/// Symplectic/orthogonal dichotomy for the self-dual cusp form `tau`:
/// exactly one of the exterior-square (symplectic) or symmetric-square
/// (orthogonal) L-functions carries the simple pole at argument 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauKind {
    Symplectic,
    Orthogonal,
}

impl TauKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TauKind::Symplectic => "symplectic",
            TauKind::Orthogonal => "orthogonal",
        }
    }
}

impl fmt::Display for TauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The discrete data of the inducing cusp form: its rank `a`, its type, and
/// the standing nonvanishing assumption on the central value `L(1/2, tau)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauProfile {
    pub rank: u32,
    pub kind: TauKind,
    pub central_value_nonzero: bool,
}

impl TauProfile {
    pub fn new(rank: u32, kind: TauKind) -> Self {
        TauProfile { rank, kind, central_value_nonzero: true }
    }
}

/// An affine argument `slope*s + offset` with exact rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineArg {
    pub slope: Rational,
    pub offset: Rational,
}

impl AffineArg {
    pub fn new(slope: Rational, offset: Rational) -> Self {
        AffineArg { slope, offset }
    }

    /// `m*s + c` from integer slope and rational offset.
    pub fn in_s(slope: i64, offset: Rational) -> Self {
        AffineArg { slope: Rational::from_int(slope), offset }
    }

    pub fn constant(c: Rational) -> Self {
        AffineArg { slope: Rational::ZERO, offset: c }
    }

    /// Value at `s = point`.
    pub fn eval(&self, point: Rational) -> Rational {
        self.slope * point + self.offset
    }

    /// Substitute `s -> s + c`.
    pub fn shift(&self, c: Rational) -> Self {
        AffineArg { slope: self.slope, offset: self.offset + self.slope * c }
    }

    /// Difference of two arguments (used for pairings with parameter vectors).
    pub fn sub(&self, other: &AffineArg) -> Self {
        AffineArg { slope: self.slope - other.slope, offset: self.offset - other.offset }
    }

    pub fn plus_const(&self, c: Rational) -> Self {
        AffineArg { slope: self.slope, offset: self.offset + c }
    }
}

impl fmt::Display for AffineArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.offset);
        }
        if self.slope == Rational::ONE {
            write!(f, "s")?;
        } else if self.slope == -Rational::ONE {
            write!(f, "-s")?;
        } else {
            write!(f, "{}s", self.slope)?;
        }
        if self.offset.is_positive() {
            write!(f, "+{}", self.offset)?;
        } else if self.offset.is_negative() {
            write!(f, "{}", self.offset)?;
        }
        Ok(())
    }
}

/// Which L-function the symbol denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LKind {
    /// `L(., tau, wedge^2)`.
    ExtSq,
    /// `L(., tau, vee^2)`.
    SymSq,
    /// `L(., tau)`.
    Standard,
    /// `L(., tau x tau)`.
    RankinSelberg,
}

impl LKind {
    fn as_str(&self) -> &'static str {
        match self {
            LKind::Standard => "std",
            LKind::ExtSq => "wedge2",
            LKind::SymSq => "vee2",
            LKind::RankinSelberg => "rs",
        }
    }
}

/// Whether the symbol sits at cusp level (`tau`) or Speh level (`Delta_b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Cusp,
    Speh(u32),
}

/// A single formal L-symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LTerm {
    pub kind: LKind,
    pub arg: AffineArg,
    pub level: Level,
    /// S-partial (`L_S`) versus completed (`L`). The flag participates in
    /// symbol identity, so partial and completed factors never cancel.
    pub partial: bool,
}

impl LTerm {
    pub fn new(kind: LKind, arg: AffineArg, level: Level, partial: bool) -> Self {
        LTerm { kind, arg, level, partial }
    }

    /// Cusp-level S-partial symbol, the common case in the normalizing
    /// factors.
    pub fn partial(kind: LKind, arg: AffineArg) -> Self {
        LTerm::new(kind, arg, Level::Cusp, true)
    }

    /// Cusp-level completed symbol.
    pub fn completed(kind: LKind, arg: AffineArg) -> Self {
        LTerm::new(kind, arg, Level::Cusp, false)
    }
}

// Canonical factor order: by kind (wedge2, vee2, std, rs), then by slope and
// offset descending so products render in the conventional display order,
// partial before completed.
impl Ord for LTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then(self.level.cmp(&other.level))
            .then(other.arg.slope.cmp(&self.arg.slope))
            .then(other.arg.offset.cmp(&self.arg.offset))
            .then(other.partial.cmp(&self.partial))
    }
}

impl PartialOrd for LTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let object = match self.level {
            Level::Cusp => "tau".to_string(),
            Level::Speh(b) => format!("Delta_{b}"),
        };
        let name = if self.partial { "L_S" } else { "L" };
        write!(f, "{name}({}, {object}, {})", self.arg, self.kind.as_str())
    }
}

/// A signed multiset of L-symbols; the canonical form never stores a zero
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LExpr {
    terms: BTreeMap<LTerm, i64>,
}

impl LExpr {
    /// The empty product.
    pub fn unit() -> Self {
        LExpr::default()
    }

    pub fn term(t: LTerm) -> Self {
        let mut e = LExpr::unit();
        e.push(t, 1);
        e
    }

    pub fn is_unit(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, t: LTerm, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry(t).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LTerm, i64)> {
        self.terms.iter().map(|(t, &m)| (t, m))
    }

    pub fn mul(&self, other: &LExpr) -> LExpr {
        let mut out = self.clone();
        for (t, m) in other.terms() {
            out.push(*t, m);
        }
        out
    }

    /// Multiplicative inverse: negate every multiplicity.
    pub fn inv(&self) -> LExpr {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            out.push(*t, -m);
        }
        out
    }

    pub fn div(&self, other: &LExpr) -> LExpr {
        self.mul(&other.inv())
    }

    /// Substitute `s -> s + c` in every argument.
    pub fn shift(&self, c: Rational) -> LExpr {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            out.push(LTerm { arg: t.arg.shift(c), ..*t }, m);
        }
        out
    }

    /// Positive part (the numerator of the ratio).
    pub fn numerator(&self) -> LExpr {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            if m > 0 {
                out.push(*t, m);
            }
        }
        out
    }

    /// Negative part with multiplicities flipped positive (the denominator).
    pub fn denominator(&self) -> LExpr {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            if m < 0 {
                out.push(*t, -m);
            }
        }
        out
    }

    /// Total number of symbol occurrences, counted with |multiplicity|.
    pub fn factor_count(&self) -> i64 {
        self.terms().map(|(_, m)| m.abs()).sum()
    }

    pub fn all_cusp_level(&self) -> bool {
        self.terms().all(|(t, _)| t.level == Level::Cusp)
    }

    /// Split every Rankin-Selberg symbol into its exterior- and
    /// symmetric-square factors.
    pub fn rs_split_all(&self) -> Result<LExpr> {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            if t.kind == LKind::RankinSelberg {
                for (u, n) in rs_split(t)?.terms() {
                    out.push(*u, n * m);
                }
            } else {
                out.push(*t, m);
            }
        }
        Ok(out)
    }

    /// Expand every Speh-level symbol to cusp level (without RS splitting).
    pub fn expand_speh_all(&self) -> Result<LExpr> {
        let mut out = LExpr::unit();
        for (t, m) in self.terms() {
            match t.level {
                Level::Cusp => out.push(*t, m),
                Level::Speh(_) => {
                    for (u, n) in expand_speh(t)?.terms() {
                        out.push(*u, n * m);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Analytic order of the full expression at `s = point`: the sum of the
    /// per-symbol orders weighted by multiplicity. Any symbol whose order is
    /// not pinned by the fact table makes the result `Unknown`.
    pub fn order_at(&self, point: Rational, profile: &TauProfile) -> Result<AnalyticOrder> {
        if !self.all_cusp_level() {
            return Err(Error::SpehTermPresent);
        }
        let mut total = AnalyticOrder::Known(0);
        for (t, m) in self.terms() {
            let per = term_order_at(t, point, profile);
            total = total + per.scale(m);
        }
        Ok(total)
    }
}

/// Canonicalize an all-cusp-level expression: multiset merging already keeps
/// the form reduced, so this validates the level precondition and returns the
/// expression. Idempotent and independent of construction order.
pub fn cancel(e: &LExpr) -> Result<LExpr> {
    if !e.all_cusp_level() {
        return Err(Error::SpehTermPresent);
    }
    Ok(e.clone())
}

impl fmt::Display for LExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (i, (t, m)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{t}^{m:+}")?;
        }
        Ok(())
    }
}

/// Pole/zero order at a point: `Known(k)` is an exact Laurent order
/// (negative = pole, positive = zero, 0 = regular nonzero), `AtLeast(k)` a
/// lower bound, `Unknown` no information. `Unknown` is absorbing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticOrder {
    Known(i64),
    AtLeast(i64),
    Unknown,
}

impl std::ops::Add for AnalyticOrder {
    type Output = AnalyticOrder;
    fn add(self, other: AnalyticOrder) -> AnalyticOrder {
        use AnalyticOrder::*;
        match (self, other) {
            (Known(a), Known(b)) => Known(a + b),
            (Known(a), AtLeast(b)) | (AtLeast(a), Known(b)) | (AtLeast(a), AtLeast(b)) => {
                AtLeast(a + b)
            }
            _ => Unknown,
        }
    }
}

impl AnalyticOrder {
    fn scale(self, m: i64) -> AnalyticOrder {
        use AnalyticOrder::*;
        match self {
            Known(k) => Known(k * m),
            // a lower bound only survives a positive multiplicity
            AtLeast(k) if m > 0 => AtLeast(k * m),
            AtLeast(_) if m == 0 => Known(0),
            AtLeast(_) => Unknown,
            Unknown if m == 0 => Known(0),
            Unknown => Unknown,
        }
    }
}

impl fmt::Display for AnalyticOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticOrder::Known(k) => write!(f, "{k}"),
            AnalyticOrder::AtLeast(k) => write!(f, ">={k}"),
            AnalyticOrder::Unknown => write!(f, "unknown"),
        }
    }
}

/// Per-symbol fact table. Argument value `x = slope*point + offset`:
///
/// - `x > 1`: regular nonzero for every kind;
/// - `x = 1`: the exterior square has the simple pole exactly for symplectic
///   `tau`, the symmetric square exactly for orthogonal `tau`, their product
///   (Rankin-Selberg, `tau` self-dual) always has a simple pole, and the
///   standard L-function is regular nonzero;
/// - `x = 1/2`, standard kind: regular nonzero under the central-value
///   assumption;
/// - anything else is not covered by a stated fact and maps to `Unknown`.
fn term_order_at(t: &LTerm, point: Rational, profile: &TauProfile) -> AnalyticOrder {
    let x = t.arg.eval(point);
    if x > Rational::ONE {
        return AnalyticOrder::Known(0);
    }
    if x == Rational::ONE {
        return match t.kind {
            LKind::Standard => AnalyticOrder::Known(0),
            LKind::ExtSq => AnalyticOrder::Known(if profile.kind == TauKind::Symplectic {
                -1
            } else {
                0
            }),
            LKind::SymSq => AnalyticOrder::Known(if profile.kind == TauKind::Orthogonal {
                -1
            } else {
                0
            }),
            LKind::RankinSelberg => AnalyticOrder::Known(-1),
        };
    }
    if x == Rational::half(1) && t.kind == LKind::Standard && profile.central_value_nonzero {
        return AnalyticOrder::Known(0);
    }
    AnalyticOrder::Unknown
}

/// `L(arg, tau x tau) = L(arg, tau, wedge^2) * L(arg, tau, vee^2)` for the
/// self-dual cusp form; argument and partial flag are preserved.
pub fn rs_split(t: &LTerm) -> Result<LExpr> {
    if t.kind != LKind::RankinSelberg || t.level != Level::Cusp {
        return Err(Error::UnsupportedExpansion(format!(
            "rs_split expects a cusp-level Rankin-Selberg symbol, got {t}"
        )));
    }
    let mut e = LExpr::unit();
    e.push(LTerm::new(LKind::ExtSq, t.arg, Level::Cusp, t.partial), 1);
    e.push(LTerm::new(LKind::SymSq, t.arg, Level::Cusp, t.partial), 1);
    Ok(e)
}

/// Expand a Speh-level symbol into cusp-level factors.
///
/// With `d_i = (b+1-2i)/2` the block exponents of `Delta_b`:
///
/// - standard: `L(x, Delta_b) = prod_i L(x + d_i, tau)`;
/// - exterior square: `L(x, Delta_b, wedge^2) =
///   prod_i L(x + 2 d_i, tau, wedge^2) *
///   prod_{i<j} L(x + d_i + d_j, tau x tau)`
///   (Rankin-Selberg factors left unsplit; apply [`rs_split`] afterwards).
///
/// Symmetric-square and Rankin-Selberg symbols at Speh level never arise in
/// the formulas this engine manipulates and are rejected.
pub fn expand_speh(t: &LTerm) -> Result<LExpr> {
    let b = match t.level {
        Level::Speh(b) => b as i64,
        Level::Cusp => {
            return Err(Error::UnsupportedExpansion(format!(
                "expand_speh expects a Speh-level symbol, got {t}"
            )))
        }
    };
    let mut e = LExpr::unit();
    match t.kind {
        LKind::Standard => {
            for i in 1..=b {
                let arg = t.arg.plus_const(Rational::half(b + 1 - 2 * i));
                e.push(LTerm::new(LKind::Standard, arg, Level::Cusp, t.partial), 1);
            }
        }
        LKind::ExtSq => {
            for i in 1..=b {
                let arg = t.arg.plus_const(Rational::from_int(b + 1 - 2 * i));
                e.push(LTerm::new(LKind::ExtSq, arg, Level::Cusp, t.partial), 1);
            }
            for i in 1..=b {
                for j in (i + 1)..=b {
                    let arg = t.arg.plus_const(Rational::from_int(b + 1 - i - j));
                    e.push(LTerm::new(LKind::RankinSelberg, arg, Level::Cusp, t.partial), 1);
                }
            }
        }
        LKind::SymSq | LKind::RankinSelberg => {
            return Err(Error::UnsupportedExpansion(format!(
                "no Speh-level expansion for {t}"
            )))
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arg(slope: i64, num: i64, den: i64) -> AffineArg {
        AffineArg::in_s(slope, Rational::new(num, den))
    }

    #[test]
    fn arg_display() {
        assert_eq!(arg(2, 1, 1).to_string(), "2s+1");
        assert_eq!(arg(1, 3, 2).to_string(), "s+3/2");
        assert_eq!(arg(1, 0, 1).to_string(), "s");
        assert_eq!(arg(-1, 1, 2).to_string(), "-s+1/2");
        assert_eq!(arg(0, -1, 2).to_string(), "-1/2");
        assert_eq!(arg(-2, 0, 1).to_string(), "-2s");
    }

    #[test]
    fn arg_shift_canonicalizes() {
        // 2(s+c) and 2s+2c compare equal
        let a = arg(2, 0, 1).shift(Rational::half(1));
        assert_eq!(a, arg(2, 1, 1));
    }

    #[test]
    fn rs_split_examples() {
        let t = LTerm::partial(LKind::RankinSelberg, arg(2, 1, 1));
        let e = rs_split(&t).unwrap();
        let mut want = LExpr::unit();
        want.push(LTerm::partial(LKind::ExtSq, arg(2, 1, 1)), 1);
        want.push(LTerm::partial(LKind::SymSq, arg(2, 1, 1)), 1);
        assert_eq!(e, want);

        let c = LTerm::partial(LKind::RankinSelberg, AffineArg::constant(Rational::ONE));
        let e = rs_split(&c).unwrap();
        assert_eq!(e.factor_count(), 2);

        let bad = LTerm::partial(LKind::Standard, arg(1, 0, 1));
        assert!(rs_split(&bad).is_err());
    }

    #[test]
    fn expand_speh_standard() {
        // L(s, Delta_1) -> L(s, tau)
        let t = LTerm::new(LKind::Standard, arg(1, 0, 1), Level::Speh(1), true);
        assert_eq!(
            expand_speh(&t).unwrap(),
            LExpr::term(LTerm::partial(LKind::Standard, arg(1, 0, 1)))
        );
        // b factors in general
        for b in 1..=8u32 {
            let t = LTerm::new(LKind::Standard, arg(1, 0, 1), Level::Speh(b), true);
            assert_eq!(expand_speh(&t).unwrap().factor_count(), b as i64);
        }
    }

    #[test]
    fn expand_speh_extsq_counts() {
        // b + b(b-1)/2 factors before RS splitting, b + b(b-1) after, the
        // latter made of b(b+1)/2 wedge factors and b(b-1)/2 vee factors
        for b in 1..=8i64 {
            let t = LTerm::new(LKind::ExtSq, arg(2, 0, 1), Level::Speh(b as u32), true);
            let raw = expand_speh(&t).unwrap();
            assert_eq!(raw.factor_count(), b + b * (b - 1) / 2, "b={b}");
            let split = raw.rs_split_all().unwrap();
            assert_eq!(split.factor_count(), b + b * (b - 1), "b={b}");
            let count = |kind: LKind| -> i64 {
                split.terms().filter(|(t, _)| t.kind == kind).map(|(_, m)| m).sum()
            };
            assert_eq!(count(LKind::ExtSq), b * (b + 1) / 2, "b={b}");
            assert_eq!(count(LKind::SymSq), b * (b - 1) / 2, "b={b}");
        }
    }

    #[test]
    fn expand_speh_extsq_b2_example() {
        // L(2s+1, Delta_2, wedge2) -> L(2s+2,w2) L(2s,w2) L(2s+1,w2) L(2s+1,v2)
        let t = LTerm::new(LKind::ExtSq, arg(2, 1, 1), Level::Speh(2), true);
        let e = expand_speh(&t).unwrap().rs_split_all().unwrap();
        let mut want = LExpr::unit();
        want.push(LTerm::partial(LKind::ExtSq, arg(2, 2, 1)), 1);
        want.push(LTerm::partial(LKind::ExtSq, arg(2, 0, 1)), 1);
        want.push(LTerm::partial(LKind::ExtSq, arg(2, 1, 1)), 1);
        want.push(LTerm::partial(LKind::SymSq, arg(2, 1, 1)), 1);
        assert_eq!(e, want);
    }

    #[test]
    fn expand_speh_rejects_symsq() {
        let t = LTerm::new(LKind::SymSq, arg(2, 0, 1), Level::Speh(3), true);
        assert!(expand_speh(&t).is_err());
    }

    #[test]
    fn cancel_examples() {
        // L(s,tau)/L(s,tau) = 1
        let t = LTerm::partial(LKind::Standard, arg(1, 0, 1));
        let e = LExpr::term(t).div(&LExpr::term(t));
        assert!(e.is_unit());
        assert_eq!(cancel(&e).unwrap(), e);
        // partial and completed never cancel
        let u = LTerm::completed(LKind::Standard, arg(1, 0, 1));
        let e = LExpr::term(t).div(&LExpr::term(u));
        assert_eq!(e.factor_count(), 2);
    }

    #[test]
    fn order_at_fact_table() {
        let sympl = TauProfile::new(2, TauKind::Symplectic);
        let orth = TauProfile::new(3, TauKind::Orthogonal);
        let wedge_s = LExpr::term(LTerm::partial(LKind::ExtSq, arg(1, 0, 1)));
        assert_eq!(
            wedge_s.order_at(Rational::ONE, &sympl).unwrap(),
            AnalyticOrder::Known(-1)
        );
        assert_eq!(
            wedge_s.order_at(Rational::ONE, &orth).unwrap(),
            AnalyticOrder::Known(0)
        );
        // exactly one of wedge2/vee2 carries the pole, never both
        for profile in [sympl, orth] {
            let w = term_order_at(
                &LTerm::partial(LKind::ExtSq, arg(1, 0, 1)),
                Rational::ONE,
                &profile,
            );
            let v = term_order_at(
                &LTerm::partial(LKind::SymSq, arg(1, 0, 1)),
                Rational::ONE,
                &profile,
            );
            assert_eq!(w + v, AnalyticOrder::Known(-1));
        }
        // RS product has the simple pole for either type
        let rs = LExpr::term(LTerm::partial(LKind::ExtSq, arg(1, 0, 1)))
            .mul(&LExpr::term(LTerm::partial(LKind::SymSq, arg(1, 0, 1))));
        assert_eq!(rs.order_at(Rational::ONE, &sympl).unwrap(), AnalyticOrder::Known(-1));
        assert_eq!(rs.order_at(Rational::ONE, &orth).unwrap(), AnalyticOrder::Known(-1));
        // central value of the standard L-function
        let std_s = LExpr::term(LTerm::completed(LKind::Standard, arg(1, 0, 1)));
        assert_eq!(
            std_s.order_at(Rational::half(1), &sympl).unwrap(),
            AnalyticOrder::Known(0)
        );
        // below the stated facts: unknown
        assert_eq!(
            wedge_s.order_at(Rational::half(1), &sympl).unwrap(),
            AnalyticOrder::Unknown
        );
        // Speh-level terms must be expanded first
        let speh = LExpr::term(LTerm::new(LKind::Standard, arg(1, 0, 1), Level::Speh(2), true));
        assert_eq!(speh.order_at(Rational::ONE, &sympl), Err(Error::SpehTermPresent));
        // dropping the central-value assumption pushes s = 1/2 to Unknown
        let mut no_central = sympl;
        no_central.central_value_nonzero = false;
        assert_eq!(
            std_s.order_at(Rational::half(1), &no_central).unwrap(),
            AnalyticOrder::Unknown
        );
    }

    #[test]
    fn display_matches_wire_format() {
        let mut e = LExpr::unit();
        e.push(LTerm::partial(LKind::ExtSq, arg(2, 1, 1)), 1);
        e.push(LTerm::partial(LKind::Standard, arg(1, 3, 2)), -1);
        assert_eq!(
            e.to_string(),
            "L_S(2s+1, tau, wedge2)^+1 * L_S(s+3/2, tau, std)^-1"
        );
        assert_eq!(LExpr::unit().to_string(), "1");
    }

    #[test]
    fn value_types_are_thread_safe() {
        // pure value types: usable from any number of threads
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<LTerm>();
        assert_send_sync::<LExpr>();
        assert_send_sync::<TauProfile>();
        assert_send_sync::<AnalyticOrder>();
        assert_send_sync::<crate::rational::RationalVector>();
        assert_send_sync::<crate::consterm::TermTree>();
        assert_send_sync::<crate::exponents::CuspidalExponent>();
    }

    proptest! {
        // shifting composes additively: e(s+c1+c2) reached either way
        #[test]
        fn shift_composes(
            c1 in (-8i64..8, 1i64..4), c2 in (-8i64..8, 1i64..4),
            o in -4i64..4,
        ) {
            let mut e = LExpr::unit();
            e.push(LTerm::partial(LKind::ExtSq, arg(2, o, 1)), 1);
            e.push(LTerm::partial(LKind::Standard, arg(1, o, 2)), -1);
            let (c1, c2) = (Rational::new(c1.0, c1.1), Rational::new(c2.0, c2.1));
            prop_assert_eq!(e.shift(c1).shift(c2), e.shift(c1 + c2));
        }

        // order_at is additive on products when both factors are known
        #[test]
        fn order_additive(
            k1 in 0usize..3, k2 in 0usize..3,
            o1 in 1i64..6, o2 in 1i64..6,
        ) {
            let kinds = [LKind::Standard, LKind::ExtSq, LKind::SymSq];
            let profile = TauProfile::new(2, TauKind::Symplectic);
            let t1 = LExpr::term(LTerm::partial(kinds[k1], arg(1, o1, 1)));
            let t2 = LExpr::term(LTerm::partial(kinds[k2], arg(2, o2, 1)));
            let p = Rational::ZERO;
            let (a, b) = (t1.order_at(p, &profile).unwrap(), t2.order_at(p, &profile).unwrap());
            if let (AnalyticOrder::Known(x), AnalyticOrder::Known(y)) = (a, b) {
                prop_assert_eq!(
                    t1.mul(&t2).order_at(p, &profile).unwrap(),
                    AnalyticOrder::Known(x + y)
                );
            }
        }

        // merging order never changes the canonical multiset
        #[test]
        fn cancel_confluent(perm in proptest::sample::subsequence(vec![0usize,1,2,3,4,5], 6)) {
            let pool = [
                (LTerm::partial(LKind::Standard, arg(1, 1, 1)), 1i64),
                (LTerm::partial(LKind::Standard, arg(1, 1, 1)), -1),
                (LTerm::partial(LKind::ExtSq, arg(2, 1, 1)), 2),
                (LTerm::partial(LKind::ExtSq, arg(2, 1, 1)), -1),
                (LTerm::partial(LKind::SymSq, arg(2, 0, 1)), -3),
                (LTerm::partial(LKind::SymSq, arg(2, 0, 1)), 3),
            ];
            let mut forward = LExpr::unit();
            for &i in &perm { forward.push(pool[i].0, pool[i].1); }
            let mut backward = LExpr::unit();
            for &i in perm.iter().rev() { backward.push(pool[i].0, pool[i].1); }
            prop_assert_eq!(forward, backward);
        }
    }
}
