//! Exact rational scalars and coordinate vectors.
//!
//! Every constant the engine manipulates is a half-integer or a small
//! rational affine expression, so an `i64` numerator/denominator pair with
//! eager reduction is plenty. Vectors carry a basis tag so that block
//! (`f`-basis, length b) and absolute (`e`-basis, length ab) coordinates can
//! never be mixed silently.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::{Error, Result};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A reduced rational number with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    /// Build `num/den`, reduced, with the sign carried by the numerator.
    ///
    /// Panics if `den == 0`; denominators in this engine are always literal
    /// small positive integers.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: (den / g).abs(),
        }
    }

    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    /// `n/2`, the ubiquitous half-integer constructor.
    pub fn half(n: i64) -> Self {
        Rational::new(n, 2)
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn abs(&self) -> Self {
        Rational { num: self.num.abs(), den: self.den }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "division by zero rational");
        Rational::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num: i64 = n.trim().parse().map_err(|_| bad())?;
                let den: i64 = d.trim().parse().map_err(|_| bad())?;
                if den == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(num, den))
            }
            None => {
                let num: i64 = s.parse().map_err(|_| bad())?;
                Ok(Rational::from_int(num))
            }
        }
    }
}

/// Which coordinate system a vector lives in.
///
/// `F` is the block basis (one coordinate per `GL_a` block, dimension b,
/// reading the per-block determinant characters); `E` is the absolute basis
/// (one coordinate per torus entry, dimension ab).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    F,
    E,
}

/// An immutable exact coordinate vector with a basis tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    entries: Vec<Rational>,
    basis: Basis,
}

impl RationalVector {
    pub fn new(entries: Vec<Rational>, basis: Basis) -> Self {
        RationalVector { entries, basis }
    }

    /// A block-basis vector from integer-pair literals `(num, den)`.
    pub fn f_from_pairs(pairs: &[(i64, i64)]) -> Self {
        RationalVector {
            entries: pairs.iter().map(|&(n, d)| Rational::new(n, d)).collect(),
            basis: Basis::F,
        }
    }

    pub fn constant(value: Rational, len: usize, basis: Basis) -> Self {
        RationalVector { entries: vec![value; len], basis }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries[i]
    }

    /// Componentwise sum. Errors on length or basis mismatch.
    pub fn add(&self, other: &RationalVector) -> Result<RationalVector> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(RationalVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
            basis: self.basis,
        })
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector {
            entries: self.entries.iter().map(|&e| -e).collect(),
            basis: self.basis,
        }
    }

    pub fn scale(&self, c: Rational) -> RationalVector {
        RationalVector {
            entries: self.entries.iter().map(|&e| e * c).collect(),
            basis: self.basis,
        }
    }

    pub fn reversed(&self) -> RationalVector {
        let mut entries = self.entries.clone();
        entries.reverse();
        RationalVector { entries, basis: self.basis }
    }

    /// Running sums `(v_1, v_1+v_2, ..., v_1+...+v_n)`, i.e. the dot products
    /// with `(1,...,1,0,...,0)`.
    pub fn prefix_sums(&self) -> Vec<Rational> {
        let mut acc = Rational::ZERO;
        self.entries
            .iter()
            .map(|&e| {
                acc = acc + e;
                acc
            })
            .collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
