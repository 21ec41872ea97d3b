//! Deterministic, self-contained verification suite: every closed form is
//! checked against its independent brute-force oracle and every structural
//! identity is recomputed exactly. The CLI `verify` subcommand and the
//! acceptance test target both run these checks.

use std::collections::BTreeSet;

use crate::consterm::{
    closed_x, laurent_analysis, pole_candidates, residue_points, shift_relations_check, CuspSlot,
    N0,
};
use crate::exponents::{
    allowable_shuffles, chi_vec, residue_exponent_sets, square_integrable, PossibleSet,
};
use crate::lformal::{AnalyticOrder, TauKind, TauProfile};
use crate::normalize::{
    a_factor, b_factor, first_ratio_coeff, gamma_factor, gk_normalizer, r_m, second_ratio_coeff,
    sign_flipped_roots, spherical_ratio_oracle, BlockPermutation, ParameterVector,
};
use crate::rational::{Basis, Rational, RationalVector};
use crate::rootsys::{rho_gl_blocks, rho_siegel_levi, rho_siegel_levi_from_roots, siegel_rho};

/// Outcome of one named check; `detail` carries the first counterexample on
/// failure and a short summary on success.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, failure: Option<String>, ok_detail: String) -> Check {
    match failure {
        Some(detail) => Check { name: name.to_string(), pass: false, detail },
        None => Check { name: name.to_string(), pass: true, detail: ok_detail },
    }
}

const BOTH: [TauKind; 2] = [TauKind::Symplectic, TauKind::Orthogonal];

/// Criterion 1: chart-expansion oracle equals the closed forms (a_b, b_b),
/// reduced, with the b=2 and b=3 denominators frozen byte-for-byte.
pub fn check_normalizer_oracle() -> Check {
    let mut failure = None;
    'outer: for b in 1..=8u32 {
        let (num, den) = spherical_ratio_oracle(b);
        if num != a_factor(b) || den != b_factor(b) {
            failure = Some(format!(
                "b={b}: oracle ({num}) / ({den}) != closed ({}) / ({})",
                a_factor(b),
                b_factor(b)
            ));
            break;
        }
        for (t, _) in num.terms() {
            if den.terms().any(|(u, _)| u == t) {
                failure = Some(format!("b={b}: common factor {t} survived cancellation"));
                break 'outer;
            }
        }
    }
    let frozen = [
        (2u32, "L_S(2s+2, tau, wedge2)^+1 * L_S(2s+1, tau, vee2)^+1 * L_S(s+3/2, tau, std)^+1"),
        (
            3,
            "L_S(2s+3, tau, wedge2)^+1 * L_S(2s+1, tau, wedge2)^+1 * L_S(2s+2, tau, vee2)^+1 * L_S(s+2, tau, std)^+1",
        ),
    ];
    if failure.is_none() {
        for (b, want) in frozen {
            let got = b_factor(b).to_string();
            if got != want {
                failure = Some(format!("b_{b} serialization: got `{got}`, want `{want}`"));
                break;
            }
        }
    }
    check(
        "normalizing-factor oracle equivalence (b=1..8, type-independent products)",
        failure,
        "chart expansion + cancellation equals (a_b, b_b); b_2/b_3 frozen".into(),
    )
}

/// Criterion 2: gamma_b = a_b/b_b * b_{b-1}(s-1/2)/a_{b-1}(s-1/2), b = 2..8.
pub fn check_gamma_consistency() -> Check {
    let mut failure = None;
    for b in 2..=8u32 {
        let shift = Rational::half(-1);
        let rhs = a_factor(b)
            .div(&b_factor(b))
            .mul(&b_factor(b - 1).shift(shift))
            .div(&a_factor(b - 1).shift(shift));
        let lhs = gamma_factor(b).expect("b >= 2");
        if lhs != rhs {
            failure = Some(format!("b={b}: gamma display {lhs} != composed ratio {rhs}"));
            break;
        }
    }
    check(
        "gamma consistency (b=2..8)",
        failure,
        "gamma_b display equals a_b/b_b * b_(b-1)(s-1/2)/a_(b-1)(s-1/2)".into(),
    )
}

/// Criterion 3: both ratio identities reduce to parity-selected single factors.
pub fn check_ratio_identities() -> Check {
    let mut failure = None;
    for b in 2..=8u32 {
        let first = b_factor(b).div(&b_factor(b - 1).shift(Rational::half(1)));
        if first != first_ratio_coeff(b) {
            failure = Some(format!(
                "b={b}: b_b/b_(b-1)(s+1/2) = {first}, want {}",
                first_ratio_coeff(b)
            ));
            break;
        }
        let second = b_factor(b)
            .div(&b_factor(b - 1).shift(Rational::half(-1)))
            .mul(&gamma_factor(b).expect("b >= 2"));
        if second != second_ratio_coeff(b) {
            failure = Some(format!(
                "b={b}: b_b/b_(b-1)(s-1/2) * gamma_b = {second}, want {}",
                second_ratio_coeff(b)
            ));
            break;
        }
    }
    check(
        "ratio identities (b=2..8)",
        failure,
        "both identities reduce to the parity-selected single L-factors".into(),
    )
}

/// Criterion 4: the Gindikin-Karpelevich product over sign-flipped roots
/// equals r_M, and the flipped set for the long cycle is {f_i - f_b}.
pub fn check_gk_oracle() -> Check {
    let mut failure = None;
    for b in 2..=8u32 {
        let sigma = BlockPermutation::long_cycle(b);
        let flipped = sign_flipped_roots(&sigma);
        let want: Vec<_> = (1..b).map(|i| (i, b)).collect();
        if flipped != want {
            failure = Some(format!("b={b}: flipped roots {flipped:?}, want {want:?}"));
            break;
        }
        let gk = gk_normalizer(&sigma, &ParameterVector::t_s(b));
        let rm = r_m(b).expect("b >= 2");
        if gk != rm {
            failure = Some(format!("b={b}: GK product {gk} != r_M {rm}"));
            break;
        }
    }
    check(
        "Gindikin-Karpelevich oracle (b=2..8)",
        failure,
        "sign-flip set is {f_i - f_b}; product equals r_M".into(),
    )
}

/// Criterion 5: pole candidates lie in X_b with matching right endpoint, and
/// the b=2 segments match their displays exactly.
pub fn check_pole_sets() -> Check {
    let mut failure = None;
    'outer: for kind in BOTH {
        for b in 1..=10u32 {
            let x: BTreeSet<Rational> = closed_x(b, kind).into_iter().collect();
            let cands = pole_candidates(b, kind);
            if !cands.is_subset(&x) {
                failure = Some(format!("b={b} {kind}: candidates {cands:?} not within X_b"));
                break 'outer;
            }
            let endpoint = residue_points(b, kind).first().map(|p| p.value);
            if cands.iter().max().copied() != endpoint && endpoint.is_some() {
                failure = Some(format!(
                    "b={b} {kind}: right endpoint {:?} != s_0 {endpoint:?}",
                    cands.iter().max()
                ));
                break 'outer;
            }
        }
    }
    if failure.is_none() {
        let displays = [
            (TauKind::Symplectic, vec!["1", "0", "-1"]),
            (TauKind::Orthogonal, vec!["1/2", "-1/2"]),
        ];
        for (kind, want) in displays {
            let got: Vec<String> = closed_x(2, kind).iter().map(|r| r.to_string()).collect();
            if got != want {
                failure = Some(format!("X_2 {kind}: {got:?}, want {want:?}"));
                break;
            }
        }
    }
    check(
        "pole sets (b=1..10, both types)",
        failure,
        "candidates within X_b, right endpoint = s_0^(b), X_2 displays exact".into(),
    )
}

/// Criterion 6: the five displayed exponent vectors and both shuffle sets.
pub fn check_exponent_displays() -> Check {
    let f = RationalVector::f_from_pairs;
    let cases: [(u32, u32, TauKind, RationalVector); 5] = [
        (2, 0, TauKind::Orthogonal, f(&[(-1, 1), (0, 1)])),
        (2, 0, TauKind::Symplectic, f(&[(-3, 2), (-1, 2)])),
        (4, 1, TauKind::Symplectic, f(&[(-1, 2), (-5, 2), (-3, 2), (-1, 2)])),
        (4, 1, TauKind::Orthogonal, f(&[(-1, 1), (-2, 1), (-1, 1), (0, 1)])),
        (3, 0, TauKind::Orthogonal, f(&[(-2, 1), (-1, 1), (0, 1)])),
    ];
    let mut failure = None;
    for (b, i, kind, want) in cases {
        let got = chi_vec(b, i, kind).expect("valid chi index").relative;
        if got != want {
            failure = Some(format!("chi_{i}^({b}) {kind}: {got} != {want}"));
            break;
        }
    }
    if failure.is_none() {
        let shuffle_sets = [
            (
                3u32,
                TauKind::Symplectic,
                vec![f(&[(-3, 2), (-1, 2), (-1, 2)]), f(&[(-3, 2), (-1, 2), (1, 2)])],
            ),
            (
                4,
                TauKind::Orthogonal,
                vec![
                    f(&[(-2, 1), (-1, 1), (-1, 1), (0, 1)]),
                    f(&[(-2, 1), (-1, 1), (0, 1), (-1, 1)]),
                    f(&[(-2, 1), (-1, 1), (0, 1), (1, 1)]),
                ],
            ),
        ];
        'outer: for (b, kind, want) in shuffle_sets {
            let chi = chi_vec(b, 1, kind).expect("valid chi index");
            let got: Vec<_> = allowable_shuffles(&chi, 1)
                .expect("valid designated entry")
                .into_iter()
                .map(|s| s.relative)
                .collect();
            if got != want {
                failure = Some(format!("shuffles of chi_1^({b}) {kind} differ: {got:?}"));
                break 'outer;
            }
        }
    }
    check(
        "exponent reproduction (displayed vectors and shuffle sets)",
        failure,
        "all five chi displays and both shuffle sets match exactly".into(),
    )
}

/// Criterion 7: square-integrability sweep, a,b <= 10, i in {0,1}, all n_0.
pub fn check_square_integrability() -> Check {
    let mut failure = None;
    'outer: for kind in BOTH {
        for a in 2..=10u32 {
            for b in 2..=10u32 {
                for i in [0u32, 1] {
                    if residue_points(b, kind).iter().all(|p| p.index != i) {
                        continue;
                    }
                    for n0 in [N0::Known(0), N0::Known(1), N0::Known(2), N0::Unknown] {
                        let rep = residue_exponent_sets(a, b, i, kind, n0)
                            .expect("valid residue index");
                        let mut all = rep.certain.clone();
                        if let PossibleSet::Listed(p) = &rep.possible {
                            all.extend(p.clone());
                        }
                        for e in all {
                            if !square_integrable(&e.relative) {
                                failure = Some(format!(
                                    "a={a} b={b} i={i} {kind} n0={n0}: {} fails",
                                    e.relative
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    check(
        "square-integrability (a,b=2..10, i in {0,1}, all n0 hypotheses)",
        failure,
        "every certain/possible exponent has strictly negative prefix sums".into(),
    )
}

/// Criterion 8: the pinned Laurent case analyses.
pub fn check_laurent_cases() -> Check {
    let mut failure = None;
    let orth = TauProfile::new(3, TauKind::Orthogonal);
    let sympl = TauProfile::new(2, TauKind::Symplectic);

    let rep = laurent_analysis(2, 4, &orth, 1, N0::Known(2)).expect("valid index");
    if rep.pole_order != AnalyticOrder::Known(-1)
        || !rep.leading_term_sources.iter().all(|p| p[0] == CuspSlot::Left)
    {
        failure = Some(format!("(b=4, orth, i=1, n0>=2): {rep:?}"));
    }
    if failure.is_none() {
        let rep = laurent_analysis(2, 4, &orth, 1, N0::Known(0)).expect("valid index");
        if rep.pole_order != AnalyticOrder::Known(-2)
            || !rep.leading_term_sources.iter().all(|p| p[0] == CuspSlot::Right)
        {
            failure = Some(format!("(b=4, orth, i=1, n0=0): {rep:?}"));
        }
    }
    if failure.is_none() {
        let rep = laurent_analysis(2, 3, &sympl, 1, N0::Unknown).expect("valid index");
        let firsts: BTreeSet<_> = rep.leading_term_sources.iter().map(|p| p[0]).collect();
        if rep.pole_order != AnalyticOrder::Known(-1)
            || firsts != BTreeSet::from([CuspSlot::Left, CuspSlot::Right])
        {
            failure = Some(format!("(b=3, sympl, i=1): {rep:?}"));
        }
    }
    check(
        "Laurent case analysis (pinned configurations)",
        failure,
        "n0>=2 simple/first-led, n0=0 double/second-led, b=3 simple/both".into(),
    )
}

/// Criterion 9: structural identities. The rho relation (a,b <= 20), the
/// root-enumeration oracle (a,b <= 6), and the shift relations (b <= 20).
pub fn check_structural() -> Check {
    let mut failure = None;
    'rho: for a in 1..=20u32 {
        for b in 1..=20u32 {
            let shift = RationalVector::constant(siegel_rho(a, b), b as usize, Basis::F);
            let sum = rho_gl_blocks(a, b).add(&shift).expect("same shape");
            if sum != rho_siegel_levi(a, b) {
                failure = Some(format!("rho identity fails at a={a} b={b}"));
                break 'rho;
            }
            if a <= 6 && b <= 6 && rho_siegel_levi_from_roots(a, b) != rho_siegel_levi(a, b) {
                failure = Some(format!("rho oracle disagrees at a={a} b={b}"));
                break 'rho;
            }
        }
    }
    if failure.is_none() {
        'shifts: for kind in BOTH {
            for b in 2..=20u32 {
                for i in 0..b.div_ceil(2) {
                    if !shift_relations_check(b, i, kind).expect("valid index") {
                        failure = Some(format!("shift relation fails at b={b} i={i} {kind}"));
                        break 'shifts;
                    }
                }
            }
        }
    }
    check(
        "structural identities (rho relation, rho oracle, shift relations)",
        failure,
        "rho identity a,b<=20; root-enumeration oracle a,b<=6; shifts b<=20".into(),
    )
}

/// Run the full suite in criterion order.
pub fn run_all() -> Vec<Check> {
    vec![
        check_normalizer_oracle(),
        check_gamma_consistency(),
        check_ratio_identities(),
        check_gk_oracle(),
        check_pole_sets(),
        check_exponent_displays(),
        check_square_integrability(),
        check_laurent_cases(),
        check_structural(),
    ]
}
