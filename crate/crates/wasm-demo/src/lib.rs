//! Browser bindings: thin wasm-bindgen wrappers around the engine's JSON
//! reports, consumed by the static page in `www/`.
//!
//! Every function returns a JSON string in the same canonical form as the
//! CLI's `--format json` output; malformed parameters come back as
//! `{"error": "..."}` so the page can render them inline.

use wasm_bindgen::prelude::wasm_bindgen;

use eiscalc::consterm::N0;
use eiscalc::lformal::TauKind;
use eiscalc::report::{exponents_report, normalizers_report, poles_report, to_json};

fn parse_kind(tau_type: &str) -> Result<TauKind, String> {
    match tau_type {
        "symplectic" => Ok(TauKind::Symplectic),
        "orthogonal" => Ok(TauKind::Orthogonal),
        other => Err(format!("unknown tau type `{other}`")),
    }
}

fn parse_n0(n0: &str) -> Result<N0, String> {
    if n0.eq_ignore_ascii_case("unknown") {
        return Ok(N0::Unknown);
    }
    n0.parse::<u32>()
        .map(N0::Known)
        .map_err(|_| format!("n0 must be a nonnegative integer or `unknown`, got `{n0}`"))
}

fn error_json(msg: impl std::fmt::Display) -> String {
    to_json(&serde_error(msg.to_string()))
}

fn serde_error(error: String) -> std::collections::BTreeMap<&'static str, String> {
    std::collections::BTreeMap::from([("error", error)])
}

/// Pole segment X_b, residue points and pole candidates.
#[wasm_bindgen]
pub fn poles_json(b: u32, tau_type: &str) -> String {
    if b == 0 {
        return error_json("b must be at least 1");
    }
    match parse_kind(tau_type) {
        Ok(kind) => to_json(&poles_report(b, kind)),
        Err(e) => error_json(e),
    }
}

/// Closed-form normalizing factors a_b, b_b, gamma_b.
#[wasm_bindgen]
pub fn normalizers_json(b: u32) -> String {
    if b == 0 {
        return error_json("b must be at least 1");
    }
    to_json(&normalizers_report(b))
}

/// Certain/possible cuspidal exponents at s_i^(b) under an n0 hypothesis,
/// with square-integrability verdicts.
#[wasm_bindgen]
pub fn exponents_json(a: u32, b: u32, i: u32, tau_type: &str, n0: &str) -> String {
    if a == 0 || b == 0 {
        return error_json("a and b must be at least 1");
    }
    let kind = match parse_kind(tau_type) {
        Ok(k) => k,
        Err(e) => return error_json(e),
    };
    let n0 = match parse_n0(n0) {
        Ok(n) => n,
        Err(e) => return error_json(e),
    };
    match exponents_report(a, b, i, kind, n0) {
        Ok(rep) => to_json(&rep),
        Err(e) => error_json(e),
    }
}
