//! Root-system constants for `Sp_{2ab}` and `GL_{ab}` relative to the block
//! parabolics: rho-vectors, the residue point `Lambda_b`, simple restricted
//! roots, convergence cones, and a brute-force rho oracle built from explicit
//! restricted-root multiplicities.
//!
//! All block-basis (`f`) coordinates read per-block determinant characters,
//! so a restricted root direction `f_i - f_j` contributes `(1/a)(f_i - f_j)`
//! per ambient root space when summed in these coordinates.

use crate::rational::{Basis, Rational, RationalVector};
use crate::{Error, Result};

/// The ambient group a parabolic sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// `Sp_{2n}`.
    Symplectic(u32),
    /// `GL_n`.
    GeneralLinear(u32),
}

/// A standard block parabolic, described by its ambient group and the Levi
/// block sizes (Siegel-side blocks in the symplectic case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDescriptor {
    pub ambient: Ambient,
    pub block_sizes: Vec<u32>,
}

impl ParabolicDescriptor {
    pub fn new(ambient: Ambient, block_sizes: Vec<u32>) -> Result<Self> {
        let n = match ambient {
            Ambient::Symplectic(n) | Ambient::GeneralLinear(n) => n,
        };
        let total: u32 = block_sizes.iter().sum();
        if total != n {
            return Err(Error::DimensionMismatch { expected: n as usize, found: total as usize });
        }
        Ok(ParabolicDescriptor { ambient, block_sizes })
    }
}

/// The convergence cones the engine can test membership in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    /// Cuspidal-data cone in the symplectic group:
    /// `r_b > (a+1)/2` and `r_i - r_{i+1} > a`.
    CuspidalSymplectic,
    /// Cuspidal-data cone inside the general-linear Levi:
    /// `r_i - r_{i+1} > a`.
    GeneralLinearBlock,
    /// Half-plane for the Siegel-parabolic parameter: `Re s > (ab+1)/2`.
    SiegelDelta,
    /// Minimal-parabolic cone in `GL_{ab}`: `mu_i - mu_{i+1} > 1`.
    MinimalGl,
}

/// Half-sum of positive restricted roots for the Siegel-side block parabolic
/// of `Sp_{2ab}`: `(a(b-1/2)+1/2, a(b-3/2)+1/2, ..., (a+1)/2)`.
pub fn rho_siegel_levi(a: u32, b: u32) -> RationalVector {
    let (a, b) = (a as i64, b as i64);
    let entries = (1..=b)
        .map(|i| Rational::new(a * (2 * b - (2 * i - 1)), 2) + Rational::half(1))
        .collect();
    RationalVector::new(entries, Basis::F)
}

/// Half-sum of positive roots of the equal-block parabolic inside `GL_{ab}`:
/// `(a(b-1)/2, a(b-3)/2, ..., a(1-b)/2)`.
pub fn rho_gl_blocks(a: u32, b: u32) -> RationalVector {
    let (a, b) = (a as i64, b as i64);
    let entries = (1..=b).map(|i| Rational::new(a * (b + 1 - 2 * i), 2)).collect();
    RationalVector::new(entries, Basis::F)
}

/// `rho_0` for the minimal parabolic of `GL_n`: `((n-1)/2, ..., (1-n)/2)`,
/// in absolute (`e`-basis) coordinates.
pub fn rho_minimal_gl(n: u32) -> RationalVector {
    let n = n as i64;
    let entries = (1..=n).map(|i| Rational::half(n + 1 - 2 * i)).collect();
    RationalVector::new(entries, Basis::E)
}

/// The residue point `Lambda_b = ((b-1)/2, (b-3)/2, ..., (1-b)/2)`.
pub fn lambda_vec(b: u32) -> RationalVector {
    let b = b as i64;
    let entries = (1..=b).map(|i| Rational::half(b + 1 - 2 * i)).collect();
    RationalVector::new(entries, Basis::F)
}

/// The half-plane bound `rho_{ab} = (ab+1)/2` for the Siegel parameter.
pub fn siegel_rho(a: u32, b: u32) -> Rational {
    Rational::half((a * b) as i64 + 1)
}

/// Brute-force route to [`rho_siegel_levi`]: enumerate the positive restricted
/// root directions of the block torus in `Sp_{2ab}` with their root-space
/// dimensions and take half the weighted sum.
///
/// Multiplicities are recomputed from the block structure rather than read
/// off any closed form: each `f_i - f_j` and `f_i + f_j` direction carries an
/// `a x a` matrix block (dimension `a^2`), each `2f_i` a symmetric block
/// (dimension `a(a+1)/2`). In determinant coordinates a single ambient root
/// space contributes `1/a` of the direction pattern.
pub fn rho_siegel_levi_from_roots(a: u32, b: u32) -> RationalVector {
    let (ai, bu) = (a as i64, b as usize);
    let inv_a = Rational::new(1, ai);
    let mut sum = vec![Rational::ZERO; bu];
    for i in 0..bu {
        for j in (i + 1)..bu {
            // f_i - f_j and f_i + f_j, multiplicity a^2 each
            let m = Rational::from_int(ai * ai);
            sum[i] = sum[i] + m * inv_a + m * inv_a;
            sum[j] = sum[j] - m * inv_a + m * inv_a;
        }
        // 2 f_i, multiplicity a(a+1)/2
        let m = Rational::new(ai * (ai + 1), 2);
        sum[i] = sum[i] + m * Rational::new(2, ai);
    }
    let entries = sum.into_iter().map(|e| e * Rational::half(1)).collect();
    RationalVector::new(entries, Basis::F)
}

/// Simple restricted roots of the block torus in the given ambient:
/// `{f_1-f_2, ..., f_{b-1}-f_b, 2f_b}` for the symplectic group,
/// `{f_i - f_{i+1}}` for the general-linear Levi.
pub fn simple_restricted_roots(ambient: Ambient, b: u32) -> Vec<RationalVector> {
    let b = b as usize;
    let mut roots = Vec::new();
    for i in 0..b.saturating_sub(1) {
        let mut entries = vec![Rational::ZERO; b];
        entries[i] = Rational::ONE;
        entries[i + 1] = -Rational::ONE;
        roots.push(RationalVector::new(entries, Basis::F));
    }
    if matches!(ambient, Ambient::Symplectic(_)) {
        let mut entries = vec![Rational::ZERO; b];
        entries[b - 1] = Rational::from_int(2);
        roots.push(RationalVector::new(entries, Basis::F));
    }
    roots
}

/// Strict-inequality membership test for the cone `kind` with parameters
/// `(a, b)`. The vector dimension and basis must match the cone (1 for the
/// Siegel half-plane and `b` for block cones in the `f`-basis, `ab` in the
/// `e`-basis for the minimal cone).
pub fn cone_contains(kind: ConeKind, a: u32, b: u32, v: &RationalVector) -> Result<bool> {
    let (ai, bi) = (a as i64, b as i64);
    let (need, basis) = match kind {
        ConeKind::SiegelDelta => (1, Basis::F),
        ConeKind::CuspidalSymplectic | ConeKind::GeneralLinearBlock => (b as usize, Basis::F),
        ConeKind::MinimalGl => ((a * b) as usize, Basis::E),
    };
    if v.basis() != basis {
        return Err(Error::BasisMismatch);
    }
    if v.len() != need {
        return Err(Error::DimensionMismatch { expected: need, found: v.len() });
    }
    let diffs_exceed = |bound: Rational| {
        (0..v.len().saturating_sub(1)).all(|i| v.get(i) - v.get(i + 1) > bound)
    };
    Ok(match kind {
        ConeKind::CuspidalSymplectic => {
            v.get(v.len() - 1) > Rational::half(ai + 1) && diffs_exceed(Rational::from_int(ai))
        }
        ConeKind::GeneralLinearBlock => diffs_exceed(Rational::from_int(ai)),
        ConeKind::SiegelDelta => v.get(0) > Rational::half(ai * bi + 1),
        ConeKind::MinimalGl => diffs_exceed(Rational::ONE),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rho_siegel_levi_examples() {
        assert_eq!(rho_siegel_levi(1, 2), RationalVector::f_from_pairs(&[(2, 1), (1, 1)]));
        assert_eq!(rho_siegel_levi(1, 1), RationalVector::f_from_pairs(&[(1, 1)]));
        // frozen from the root-enumeration oracle
        assert_eq!(
            rho_siegel_levi(2, 3),
            RationalVector::f_from_pairs(&[(11, 2), (7, 2), (3, 2)])
        );
        assert_eq!(rho_siegel_levi(2, 3), rho_siegel_levi_from_roots(2, 3));
    }

    #[test]
    fn rho_gl_blocks_examples() {
        assert_eq!(
            rho_gl_blocks(2, 3),
            RationalVector::f_from_pairs(&[(2, 1), (0, 1), (-2, 1)])
        );
        assert_eq!(rho_gl_blocks(1, 1), RationalVector::f_from_pairs(&[(0, 1)]));
    }

    #[test]
    fn rho_shift_relation_instance() {
        // a = b = 2: (1, -1) + (5/2, 5/2) = (7/2, 3/2)
        let shift = RationalVector::constant(siegel_rho(2, 2), 2, Basis::F);
        let sum = rho_gl_blocks(2, 2).add(&shift).unwrap();
        assert_eq!(sum, RationalVector::f_from_pairs(&[(7, 2), (3, 2)]));
        assert_eq!(sum, rho_siegel_levi(2, 2));
    }

    #[test]
    fn rho_shift_relation() {
        // rho_siegel_levi = rho_gl_blocks + (ab+1)/2 * (1,...,1)
        for a in 1..=20u32 {
            for b in 1..=20u32 {
                let shift = RationalVector::constant(siegel_rho(a, b), b as usize, Basis::F);
                assert_eq!(
                    rho_gl_blocks(a, b).add(&shift).unwrap(),
                    rho_siegel_levi(a, b),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn rho_oracle_agreement_small() {
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                assert_eq!(rho_siegel_levi(a, b), rho_siegel_levi_from_roots(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn rho_minimal_gl_examples() {
        assert_eq!(rho_minimal_gl(1).entries(), &[Rational::ZERO]);
        assert_eq!(
            rho_minimal_gl(2),
            RationalVector::new(vec![Rational::half(1), Rational::half(-1)], Basis::E)
        );
        assert_eq!(
            rho_minimal_gl(4),
            RationalVector::new(
                vec![Rational::half(3), Rational::half(1), Rational::half(-1), Rational::half(-3)],
                Basis::E
            )
        );
    }

    #[test]
    fn lambda_examples_and_antisymmetry() {
        assert_eq!(lambda_vec(3), RationalVector::f_from_pairs(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(lambda_vec(1), RationalVector::f_from_pairs(&[(0, 1)]));
        assert_eq!(lambda_vec(2), RationalVector::f_from_pairs(&[(1, 2), (-1, 2)]));
        for b in 1..=20 {
            let l = lambda_vec(b);
            assert_eq!(l.reversed(), l.neg(), "b={b}");
        }
    }

    #[test]
    fn simple_roots_examples() {
        let sp = simple_restricted_roots(Ambient::Symplectic(2), 2);
        assert_eq!(
            sp,
            vec![
                RationalVector::f_from_pairs(&[(1, 1), (-1, 1)]),
                RationalVector::f_from_pairs(&[(0, 1), (2, 1)]),
            ]
        );
        let gl = simple_restricted_roots(Ambient::GeneralLinear(2), 2);
        assert_eq!(gl, vec![RationalVector::f_from_pairs(&[(1, 1), (-1, 1)])]);
        let single = simple_restricted_roots(Ambient::Symplectic(1), 1);
        assert_eq!(single, vec![RationalVector::f_from_pairs(&[(2, 1)])]);
    }

    #[test]
    fn cone_examples() {
        // boundary excluded: r_2 = 1 is not > (a+1)/2 = 1
        let v = RationalVector::f_from_pairs(&[(3, 1), (1, 1)]);
        assert!(!cone_contains(ConeKind::CuspidalSymplectic, 1, 2, &v).unwrap());
        let v = RationalVector::f_from_pairs(&[(4, 1), (2, 1)]);
        assert!(cone_contains(ConeKind::CuspidalSymplectic, 1, 2, &v).unwrap());
        let s = RationalVector::f_from_pairs(&[(3, 1)]);
        assert!(cone_contains(ConeKind::SiegelDelta, 2, 2, &s).unwrap());
        let wrong = RationalVector::f_from_pairs(&[(3, 1)]);
        assert!(cone_contains(ConeKind::CuspidalSymplectic, 1, 2, &wrong).is_err());
        // minimal cone: e-basis of length ab, differences > 1
        let mu = RationalVector::new(
            vec![Rational::from_int(4), Rational::from_int(2), Rational::ZERO,
                 Rational::from_int(-3)],
            Basis::E,
        );
        assert!(cone_contains(ConeKind::MinimalGl, 2, 2, &mu).unwrap());
        let tight = RationalVector::new(
            vec![Rational::ONE, Rational::ZERO, Rational::from_int(-1),
                 Rational::from_int(-2)],
            Basis::E,
        );
        assert!(!cone_contains(ConeKind::MinimalGl, 2, 2, &tight).unwrap());
        // basis tag is enforced
        let f_tagged = RationalVector::f_from_pairs(&[(4, 1), (2, 1), (0, 1), (-3, 1)]);
        assert_eq!(
            cone_contains(ConeKind::MinimalGl, 2, 2, &f_tagged),
            Err(Error::BasisMismatch)
        );
    }

    #[test]
    fn parabolic_descriptor_checks_block_sum() {
        assert!(ParabolicDescriptor::new(Ambient::GeneralLinear(6), vec![2, 2, 2]).is_ok());
        assert!(ParabolicDescriptor::new(Ambient::Symplectic(6), vec![2, 2, 2]).is_ok());
        assert!(ParabolicDescriptor::new(Ambient::GeneralLinear(6), vec![2, 2]).is_err());
    }

    proptest! {
        // Translating a cone member by a vector with nonnegative entry
        // differences (and nonnegative last entry) stays in the cone.
        #[test]
        fn cuspidal_cone_translation_monotone(
            bumps in proptest::collection::vec(0i64..4, 2..5),
            a in 1u32..4,
        ) {
            let b = bumps.len();
            // build v strictly inside the cone for this a
            let mut entries = Vec::new();
            let mut acc = (a as i64) + 1; // > (a+1)/2
            for _ in 0..b {
                entries.push(Rational::from_int(acc));
                acc += (a as i64) + 1; // difference a+1 > a
            }
            entries.reverse();
            let v = RationalVector::new(entries, Basis::F);
            prop_assert!(cone_contains(ConeKind::CuspidalSymplectic, a, b as u32, &v).unwrap());
            // accumulating nonnegative bumps from the right gives a w with
            // nonnegative differences and nonnegative last entry
            let mut w_entries = Vec::new();
            let mut acc = Rational::ZERO;
            for i in (0..b).rev() {
                acc = acc + Rational::from_int(bumps[i]);
                w_entries.push(acc);
            }
            w_entries.reverse();
            let w = RationalVector::new(w_entries, Basis::F);
            let translated = v.add(&w).unwrap();
            prop_assert!(
                cone_contains(ConeKind::CuspidalSymplectic, a, b as u32, &translated).unwrap()
            );
        }
    }
}
