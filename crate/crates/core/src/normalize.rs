//! Closed-form normalizing factors for the intertwining operators and the
//! two independent brute-force oracles that validate them.
//!
//! The spherical operator acts on normalized spherical sections by the
//! reduced ratio `a_b(s)/b_b(s)`; [`spherical_ratio_oracle`] recomputes that
//! ratio by expanding `L(s,Delta)L(2s,Delta,wedge^2) /
//! L(s+1,Delta)L(2s+1,Delta,wedge^2)` to cusp level and cancelling, while
//! [`a_factor`]/[`b_factor`] hold the closed forms. [`gk_normalizer`] is the
//! Gindikin-Karpelevich product over sign-flipped block roots, validating the
//! rank-one factor [`r_m`].
//!
//! Everything produced here at spherical level is S-partial; the rank-one
//! factors of the ramified-place analysis ([`r_n`], [`r_m`], [`lambda_holo`],
//! [`gk_normalizer`]) are completed symbols.

use crate::lformal::{AffineArg, LExpr, LKind, LTerm, Level};
use crate::rational::Rational;
use crate::rootsys::lambda_vec;
use crate::{Error, Result};

/// The two-armed parity combinator `{even / odd}_b`.
pub fn parity_select<T>(b: u32, even: T, odd: T) -> T {
    if b.is_multiple_of(2) {
        even
    } else {
        odd
    }
}

fn partial(kind: LKind, slope: i64, offset: Rational) -> LTerm {
    LTerm::partial(kind, AffineArg::in_s(slope, offset))
}

fn completed(kind: LKind, slope: i64, offset: Rational) -> LTerm {
    LTerm::completed(kind, AffineArg::in_s(slope, offset))
}

/// Denominator `b_b(s)` of the spherical normalizing ratio (S-partial).
///
/// For `b = 1`: `L(s+1, tau) L(2s+1, wedge^2)`. For `b >= 2` the
/// exterior-square arguments are `2s + b + 2 - 2i` (`i <= ceil(b/2)`), the
/// symmetric-square arguments `2s + 1 + b - 2i` (`i <= floor(b/2)`), and the
/// standard factor is `L(s + (b+1)/2, tau)`. The symmetric-square
/// parametrization is the chart-derived one, valid for both parities; for
/// odd `b` it yields the even offsets `{2s+2, ..., 2s+b-1}`.
pub fn b_factor(b: u32) -> LExpr {
    let bi = b as i64;
    let mut e = LExpr::unit();
    if b == 1 {
        e.push(partial(LKind::Standard, 1, Rational::from_int(1)), 1);
        e.push(partial(LKind::ExtSq, 2, Rational::from_int(1)), 1);
        return e;
    }
    for i in 1..=(bi + 1) / 2 {
        e.push(partial(LKind::ExtSq, 2, Rational::from_int(bi + 2 - 2 * i)), 1);
    }
    for i in 1..=bi / 2 {
        e.push(partial(LKind::SymSq, 2, Rational::from_int(1 + bi - 2 * i)), 1);
    }
    e.push(partial(LKind::Standard, 1, Rational::half(bi + 1)), 1);
    e
}

/// Numerator `a_b(s)` of the spherical normalizing ratio (S-partial).
///
/// For `b = 1`: `L(s, tau) L(2s, wedge^2)`. For `b >= 2` the exterior-square
/// arguments are `2s - b - 1 + 2i`, the symmetric-square arguments
/// `2s - b + 2i`, the standard factor `L(s + (1-b)/2, tau)`.
pub fn a_factor(b: u32) -> LExpr {
    let bi = b as i64;
    let mut e = LExpr::unit();
    if b == 1 {
        e.push(partial(LKind::Standard, 1, Rational::ZERO), 1);
        e.push(partial(LKind::ExtSq, 2, Rational::ZERO), 1);
        return e;
    }
    for i in 1..=(bi + 1) / 2 {
        e.push(partial(LKind::ExtSq, 2, Rational::from_int(-bi - 1 + 2 * i)), 1);
    }
    for i in 1..=bi / 2 {
        e.push(partial(LKind::SymSq, 2, Rational::from_int(-bi + 2 * i)), 1);
    }
    e.push(partial(LKind::Standard, 1, Rational::half(1 - bi)), 1);
    e
}

/// The spherical-place normalizing factor of the rank-lowering operator:
///
/// `gamma_b(s) = L(2s,vee^2) L(2s,wedge^2) L(s+(b-1)/2, tau) /
///  [L(2s+b-1,vee^2) L(2s+b,wedge^2) L(s+(b+1)/2, tau)]`, S-partial.
pub fn gamma_factor(b: u32) -> Result<LExpr> {
    if b < 2 {
        return Err(Error::IndexOutOfRange { what: "gamma_factor requires b >= 2" });
    }
    let bi = b as i64;
    let mut e = LExpr::unit();
    e.push(partial(LKind::SymSq, 2, Rational::ZERO), 1);
    e.push(partial(LKind::ExtSq, 2, Rational::ZERO), 1);
    e.push(partial(LKind::Standard, 1, Rational::half(bi - 1)), 1);
    e.push(partial(LKind::SymSq, 2, Rational::from_int(bi - 1)), -1);
    e.push(partial(LKind::ExtSq, 2, Rational::from_int(bi)), -1);
    e.push(partial(LKind::Standard, 1, Rational::half(bi + 1)), -1);
    Ok(e)
}

/// Chart oracle for `(a_b, b_b)`: expand the Speh-level spherical ratio
/// `L(s,Delta_b) L(2s,Delta_b,wedge^2) / [L(s+1,Delta_b) L(2s+1,Delta_b,wedge^2)]`
/// to cusp level, split the Rankin-Selberg factors, cancel, and return the
/// reduced (numerator, denominator) pair.
///
/// The expansion works directly over the index multisets `{i}` and `{i<j}`,
/// independently of the closed forms above.
pub fn spherical_ratio_oracle(b: u32) -> (LExpr, LExpr) {
    let speh = |kind: LKind, slope: i64, offset: i64| {
        LExpr::term(LTerm::new(
            kind,
            AffineArg::in_s(slope, Rational::from_int(offset)),
            Level::Speh(b),
            true,
        ))
    };
    let num = speh(LKind::Standard, 1, 0).mul(&speh(LKind::ExtSq, 2, 0));
    let den = speh(LKind::Standard, 1, 1).mul(&speh(LKind::ExtSq, 2, 1));
    let ratio = num.div(&den);
    let reduced = ratio
        .expand_speh_all()
        .expect("standard/wedge Speh symbols always expand")
        .rs_split_all()
        .expect("expansion is cusp level");
    (reduced.numerator(), reduced.denominator())
}

/// A permutation of the `b` blocks, stored as 1-based images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPermutation {
    images: Vec<u32>,
}

impl BlockPermutation {
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let b = images.len() as u32;
        let mut seen = vec![false; b as usize];
        for &im in &images {
            if im == 0 || im > b || seen[(im - 1) as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[(im - 1) as usize] = true;
        }
        Ok(BlockPermutation { images })
    }

    pub fn identity(b: u32) -> Self {
        BlockPermutation { images: (1..=b).collect() }
    }

    /// The cycle `(1 b b-1 ... 2)`: block 1 goes to position b, every other
    /// block moves down one.
    pub fn long_cycle(b: u32) -> Self {
        let images = (1..=b).map(|k| if k == 1 { b } else { k - 1 }).collect();
        BlockPermutation { images }
    }

    /// Swap adjacent blocks `i` and `i+1` (1-based).
    pub fn adjacent_transposition(b: u32, i: u32) -> Result<Self> {
        if i == 0 || i >= b {
            return Err(Error::IndexOutOfRange { what: "transposition index" });
        }
        let images = (1..=b)
            .map(|k| {
                if k == i {
                    i + 1
                } else if k == i + 1 {
                    i
                } else {
                    k
                }
            })
            .collect();
        Ok(BlockPermutation { images })
    }

    pub fn b(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of block `k` (1-based).
    pub fn image(&self, k: u32) -> u32 {
        self.images[(k - 1) as usize]
    }

    pub fn inverse(&self) -> BlockPermutation {
        let mut images = vec![0; self.images.len()];
        for (k, &im) in self.images.iter().enumerate() {
            images[(im - 1) as usize] = k as u32 + 1;
        }
        BlockPermutation { images }
    }
}

/// A length-`b` vector of affine arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterVector {
    entries: Vec<AffineArg>,
}

impl ParameterVector {
    pub fn new(entries: Vec<AffineArg>) -> Self {
        ParameterVector { entries }
    }

    /// The embedding parameter
    /// `t_s = (s - (Lambda_b)_1, ..., s - (Lambda_b)_{b-1}, -s - (Lambda_b)_1)`.
    pub fn t_s(b: u32) -> Self {
        let lambda = lambda_vec(b);
        let mut entries: Vec<AffineArg> = (0..(b - 1) as usize)
            .map(|i| AffineArg::in_s(1, -lambda.get(i)))
            .collect();
        entries.push(AffineArg::in_s(-1, -lambda.get(0)));
        ParameterVector { entries }
    }

    /// The constant parameter `Lambda_b`.
    pub fn lambda(b: u32) -> Self {
        let lambda = lambda_vec(b);
        ParameterVector {
            entries: (0..b as usize).map(|i| AffineArg::constant(lambda.get(i))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> AffineArg {
        self.entries[i]
    }
}

/// Positive block roots `f_i - f_j` (1-based, `i < j`) whose sign the inverse
/// of `sigma` reverses. For the long cycle this is exactly
/// `{f_i - f_b : i < b}`.
pub fn sign_flipped_roots(sigma: &BlockPermutation) -> Vec<(u32, u32)> {
    let inv = sigma.inverse();
    let b = sigma.b();
    let mut flipped = Vec::new();
    for i in 1..=b {
        for j in (i + 1)..=b {
            if inv.image(i) > inv.image(j) {
                flipped.push((i, j));
            }
        }
    }
    flipped
}

/// Gindikin-Karpelevich product for the block Weyl element `sigma` at the
/// parameter `t`: over each sign-flipped positive root `alpha = f_i - f_j`,
/// the factor `L(<alpha,t>, tau x tau) / L(<alpha,t> + 1, tau x tau)`
/// (completed symbols; `tau` self-dual).
pub fn gk_normalizer(sigma: &BlockPermutation, t: &ParameterVector) -> LExpr {
    let mut e = LExpr::unit();
    for (i, j) in sign_flipped_roots(sigma) {
        let pairing = t.get((i - 1) as usize).sub(&t.get((j - 1) as usize));
        e.push(LTerm::completed(LKind::RankinSelberg, pairing), 1);
        e.push(
            LTerm::completed(LKind::RankinSelberg, pairing.plus_const(Rational::ONE)),
            -1,
        );
    }
    e
}

/// Normalizing factor of the symplectic rank-one operator:
/// `L(s+(b-1)/2,tau) L(2s+b-1,wedge^2) / [L(s+(b+1)/2,tau) L(2s+b,wedge^2)]`.
pub fn r_n(b: u32) -> Result<LExpr> {
    if b < 2 {
        return Err(Error::IndexOutOfRange { what: "r_n requires b >= 2" });
    }
    let bi = b as i64;
    let mut e = LExpr::unit();
    e.push(completed(LKind::Standard, 1, Rational::half(bi - 1)), 1);
    e.push(completed(LKind::ExtSq, 2, Rational::from_int(bi - 1)), 1);
    e.push(completed(LKind::Standard, 1, Rational::half(bi + 1)), -1);
    e.push(completed(LKind::ExtSq, 2, Rational::from_int(bi)), -1);
    Ok(e)
}

/// Normalizing factor of the general-linear block operator:
/// `prod_{i=1}^{b-1} L(2s+i-1, tau x tau) / L(2s+i, tau x tau)`.
pub fn r_m(b: u32) -> Result<LExpr> {
    if b < 2 {
        return Err(Error::IndexOutOfRange { what: "r_m requires b >= 2" });
    }
    let bi = b as i64;
    let mut e = LExpr::unit();
    for i in 1..=(bi - 1) {
        e.push(completed(LKind::RankinSelberg, 2, Rational::from_int(i - 1)), 1);
        e.push(completed(LKind::RankinSelberg, 2, Rational::from_int(i)), -1);
    }
    Ok(e)
}

/// The pole-carrying product for the composite rank-lowering operator:
/// `L(2s+b-1, wedge^2) * prod_{i=1}^{b-1} L(2s+i-1, tau x tau)`.
///
/// This is the product of the pole-carrying numerator factors of [`r_n`] and
/// [`r_m`]; the entire (pole-free) standard numerator factor of [`r_n`] is
/// omitted.
pub fn lambda_holo(b: u32) -> Result<LExpr> {
    if b < 2 {
        return Err(Error::IndexOutOfRange { what: "lambda_holo requires b >= 2" });
    }
    let bi = b as i64;
    let mut e = LExpr::unit();
    e.push(completed(LKind::ExtSq, 2, Rational::from_int(bi - 1)), 1);
    for i in 1..=(bi - 1) {
        e.push(completed(LKind::RankinSelberg, 2, Rational::from_int(i - 1)), 1);
    }
    Ok(e)
}

/// First-summand coefficient of the inductive constant-term formula:
/// `{L_S(2s+1, vee^2) / L_S(2s+1, wedge^2)}_b`.
pub fn first_ratio_coeff(b: u32) -> LExpr {
    let kind = parity_select(b, LKind::SymSq, LKind::ExtSq);
    LExpr::term(partial(kind, 2, Rational::ONE))
}

/// Second-summand coefficient: `{L_S(2s, vee^2) / L_S(2s, wedge^2)}_b`.
pub fn second_ratio_coeff(b: u32) -> LExpr {
    let kind = parity_select(b, LKind::SymSq, LKind::ExtSq);
    LExpr::term(partial(kind, 2, Rational::ZERO))
}
