//! Exact symbolic bookkeeping for residual-data Siegel Eisenstein series on `Sp_{2ab}`.
//!
//! The engine works with the discrete data of a Speh representation
//! `Delta(tau, b)` on the Levi `GL_{ab}` of the Siegel parabolic and tracks,
//! entirely in exact rational arithmetic and formal L-function symbols:
//!
//! - root-system constants for the block parabolics ([`rootsys`]),
//! - formal products/ratios of automorphic L-functions with affine arguments
//!   in the complex parameter `s` ([`lformal`]),
//! - the normalizing factors of the relevant intertwining operators, together
//!   with two independent brute-force oracles for them ([`normalize`]),
//! - the inductive expansion of the principal constant term, residue points,
//!   pole-candidate segments and the Laurent case analysis ([`consterm`]),
//! - cuspidal-exponent vectors, allowable shuffles and the Langlands
//!   square-integrability test ([`exponents`]).
//!
//! Everything is exact: no floating point appears anywhere. Identities are
//! checked as multiset equalities of L-symbols or equalities of rationals,
//! which makes the verification suite ([`verify`]) fully decidable.
//!
//! ```
//! use eiscalc::consterm::{pole_candidates, residue_points};
//! use eiscalc::lformal::TauKind;
//! use eiscalc::normalize::{a_factor, b_factor, spherical_ratio_oracle};
//!
//! // the chart oracle reproduces the closed-form normalizing factors
//! let (num, den) = spherical_ratio_oracle(4);
//! assert_eq!((num, den), (a_factor(4), b_factor(4)));
//!
//! // poles of the rank-2 symplectic-type series sit at +-1
//! let poles: Vec<String> =
//!     pole_candidates(2, TauKind::Symplectic).iter().map(|p| p.to_string()).collect();
//! assert_eq!(poles, ["-1", "1"]);
//! assert_eq!(residue_points(2, TauKind::Symplectic)[0].value.to_string(), "1");
//! ```

pub mod consterm;
pub mod exponents;
pub mod lformal;
pub mod normalize;
pub mod rational;
pub mod report;
pub mod rootsys;
pub mod verify;

mod error;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
