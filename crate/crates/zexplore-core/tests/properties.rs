//! Cross-route property checks: every quantity that the library computes
//! along two independent routes (closed form vs. finite differences,
//! reflection vs. conjugation, direct products vs. log-space assembly) is
//! compared here at tolerances near machine precision.

use std::collections::HashSet;

use zexplore_core::argtrack::{self, AngleKind};
use zexplore_core::complexfn;
use zexplore_core::counterexample::{self, CounterexampleConfig};
use zexplore_core::identities::{self, EvalStatus};
use zexplore_core::symbols;
use zexplore_core::zeros;
use zexplore_core::{ComplexPoint, ComplexValue, EvalConfig, EvalError};

const PI: f64 = core::f64::consts::PI;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn crel(a: ComplexValue, b: ComplexValue) -> f64 {
    complexfn::modulus(a - b) / complexfn::modulus(b).max(1e-300)
}

// ---------------------------------------------------------------- symmetry

#[test]
fn evaluations_commute_with_conjugation() {
    let c = cfg();
    for &(sg, rh) in &[(0.3, 7.0), (0.85, 23.0), (0.5, 14.0)] {
        let up = ComplexPoint::new(sg, rh);
        let dn = ComplexPoint::new(sg, -rh);
        let z_up = complexfn::zeta(up, &c).unwrap();
        let z_dn = complexfn::zeta(dn, &c).unwrap();
        assert!(crel(z_dn, z_up.conj()) < 1e-13, "zeta at {sg}+-{rh}i");
        let g_up = complexfn::gamma(up).unwrap();
        let g_dn = complexfn::gamma(dn).unwrap();
        assert!(crel(g_dn, g_up.conj()) < 1e-13, "gamma at {sg}+-{rh}i");
        let p_up = complexfn::digamma(up).unwrap();
        let p_dn = complexfn::digamma(dn).unwrap();
        assert!(crel(p_dn, p_up.conj()) < 1e-13, "digamma at {sg}+-{rh}i");
    }
}

#[test]
fn reflected_value_is_conjugate_of_scaled_value() {
    let c = cfg();
    for &(sg, rh) in &[(0.3, 11.0), (0.62, 5.5), (0.9, 33.0)] {
        let s = ComplexPoint::new(sg, rh);
        let b = symbols::build_bundle(s, &c).unwrap();
        let chi = complexfn::chi(s).unwrap();
        let closed = (chi * b.z()).conj();
        assert!(
            crel(b.tz(), closed) < 1e-11,
            "reflection closure at sigma={sg} rho={rh}: {:?} vs {:?}",
            b.tz(),
            closed
        );
    }
}

#[test]
fn gamma_modulus_closed_forms() {
    for &rh in &[7.0, 13.0, 29.0] {
        let on_half = complexfn::gamma(ComplexPoint::new(0.5, rh)).unwrap();
        let m2 = complexfn::modulus(on_half).powi(2);
        assert!(rel(m2, PI / (PI * rh).cosh()) < 1e-12, "half-line modulus at rho={rh}");

        let on_one = complexfn::gamma(ComplexPoint::new(1.0, rh)).unwrap();
        let m2 = complexfn::modulus(on_one).powi(2);
        assert!(rel(m2, PI * rh / (PI * rh).sinh()) < 1e-12, "unit-line modulus at rho={rh}");
    }
}

#[test]
fn magnitude_ratio_is_reciprocal_of_scale_factor_modulus() {
    for &(sg, rh) in &[(0.25, 12.0), (0.4, 6.0), (0.8, 31.0)] {
        let s = ComplexPoint::new(sg, rh);
        let phi = identities::phi_at(sg, rh).unwrap();
        let chi = complexfn::chi(s).unwrap();
        let m2 = complexfn::modulus(chi).powi(2);
        assert!(
            (phi * m2 - 1.0).abs() < 1e-12,
            "phi * |chi|^2 = {} at sigma={sg} rho={rh}",
            phi * m2
        );
    }
}

// ------------------------------------------------------- finite differences

#[test]
fn second_jet_component_matches_finite_difference() {
    let c = cfg();
    let at = |sg: f64| complexfn::zeta(ComplexPoint::new(sg, 9.0), &c).unwrap();
    let jet = complexfn::zeta_jet(ComplexPoint::new(0.4, 9.0), &c).unwrap();
    let h = 1e-4;
    let fd1 = (at(0.4 + h) - at(0.4 - h)) / (2.0 * h);
    assert!(crel(jet.d1, fd1) < 1e-7, "first derivative");
    // The engine's absolute accuracy (~1e-13) is amplified by 1/h^2 in a
    // second difference, so the step balances truncation against that.
    let h = 1e-3;
    let fd2 = (at(0.4 + h) - jet.v * 2.0 + at(0.4 - h)) / (h * h);
    assert!(crel(jet.d2, fd2) < 1e-4, "second derivative");
}

#[test]
fn angle_derivatives_match_tracked_differences() {
    let c = cfg();
    let h = 1e-4;
    let b = symbols::build_bundle(ComplexPoint::new(0.5, 10.0), &c).unwrap();
    let q = identities::cl_blocks(10.0, &b, &c).unwrap();

    let alpha = |r: f64| argtrack::tracked_angle_at(AngleKind::Alpha, 0.5, r, &c).unwrap();
    let fd_alpha = (alpha(10.0 + h) - alpha(10.0 - h)) / (2.0 * h);
    assert!(rel(q.alphap, fd_alpha) < 1e-5, "alpha': {} vs {}", q.alphap, fd_alpha);

    let beta = |r: f64| argtrack::tracked_angle_at(AngleKind::Beta, 0.5, r, &c).unwrap();
    let fd_beta = (beta(10.0 + h) - beta(10.0 - h)) / (2.0 * h);
    assert!(rel(q.betap, fd_beta) < 1e-5, "beta': {} vs {}", q.betap, fd_beta);
}

#[test]
fn scale_factor_derivative_matches_finite_difference() {
    let c = cfg();
    let h = 1e-5;
    let d = complexfn::f_rho_d1(10.0, &c).unwrap();
    let fd = (complexfn::f_rho(10.0 + h, &c).unwrap() - complexfn::f_rho(10.0 - h, &c).unwrap())
        / (2.0 * h);
    assert!(rel(d, fd) < 1e-6, "{d} vs {fd}");
}

#[test]
fn magnitude_ratio_derivative_matches_finite_difference() {
    let h = 1e-5;
    for &(sg, rh) in &[(0.3, 12.0), (0.5, 21.0), (0.7, 45.0)] {
        let closed = identities::phi_sigma_derivative(ComplexPoint::new(sg, rh)).unwrap();
        let fd = (identities::phi_at(sg + h, rh).unwrap()
            - identities::phi_at(sg - h, rh).unwrap())
            / (2.0 * h);
        assert!(
            rel(closed, fd) < 1e-5,
            "d phi/d sigma at sigma={sg} rho={rh}: {closed} vs {fd}"
        );
        assert!(closed < 0.0, "the ratio must fall with sigma at rho={rh}");
    }
}

#[test]
fn weight_jet_matches_finite_difference_in_both_regimes() {
    let cx = CounterexampleConfig::default();
    let h = 1e-5;
    // One point in the direct-product regime, one in the log-assembled
    // regime beyond the switch ordinate.
    for &(sg, rh) in &[(0.6, 12.0), (0.6, 24.0)] {
        let jet = counterexample::weight_jet(ComplexPoint::new(sg, rh), &cx).unwrap();
        let at = |x: f64| counterexample::weight(ComplexPoint::new(x, rh), &cx).unwrap();
        let fd1 = (at(sg + h) - at(sg - h)) / (2.0 * h);
        let fd2 = (at(sg + h) - jet.v * 2.0 + at(sg - h)) / (h * h);
        assert!(crel(jet.d1, fd1) < 1e-6, "weight d1 at rho={rh}");
        assert!(crel(jet.d2, fd2) < 1e-4, "weight d2 at rho={rh}");
    }
}

// ------------------------------------------------------------ symbol layer

#[test]
fn symbol_set_internal_consistency() {
    let c = cfg();
    let s = ComplexPoint::new(0.35, 8.3);
    let sym = symbols::build_symbols(s, &c).unwrap();

    let g = complexfn::gamma(s).unwrap();
    assert!(rel(sym.gamma_abs, complexfn::modulus(g)) < 1e-13, "gamma modulus");
    assert!(crel(ComplexValue::new(sym.gamma_re, sym.gamma_im), g) < 1e-13, "gamma parts");
    assert!(crel(sym.psi, complexfn::digamma(s).unwrap()) < 1e-13, "psi");
    assert!(crel(sym.chi, complexfn::chi(s).unwrap()) < 1e-13, "chi");
    assert!(crel(sym.f_s, complexfn::f_s(s).unwrap()) < 1e-13, "f_s");
    assert!(rel(sym.phi, identities::phi_at(0.35, 8.3).unwrap()) < 1e-13, "phi");
}

#[test]
fn asymmetry_symbol_vanishes_on_critical_line() {
    let c = cfg();
    for &rh in &[6.0, 9.0, 26.0] {
        let sym = symbols::build_symbols(ComplexPoint::new(0.5, rh), &c).unwrap();
        // The symbol is a difference of terms of size ~ e^{pi rho}; on the
        // line it cancels to rounding noise of that scale.
        let scale = (PI * rh).exp();
        assert!(
            sym.p1.abs() <= scale * 1e-13,
            "p1 = {} at rho = {rh} (scale {scale:.3e})",
            sym.p1
        );
    }
}

#[test]
fn scale_factor_on_line_matches_plane_form() {
    let c = cfg();
    for &rh in &[2.0, 9.0, 17.5] {
        let f_line = complexfn::f_rho(rh, &c).unwrap();
        let f_plane = complexfn::f_s(ComplexPoint::new(0.5, rh)).unwrap();
        assert!(
            rel(f_line, 2.0 / f_plane.re) < 1e-12,
            "f({rh}) = {f_line} vs 2/Re f_s = {}",
            2.0 / f_plane.re
        );
    }
}

#[test]
fn scale_factor_modulus_is_one_on_critical_line() {
    // The factors of the scale function reach e^{pi rho/2} and its
    // reciprocal before cancelling, so rounding grows mildly with rho.
    for &rh in &[3.0, 8.3, 41.0] {
        let chi = complexfn::chi(ComplexPoint::new(0.5, rh)).unwrap();
        assert!((complexfn::modulus(chi) - 1.0).abs() < 1e-11, "|chi| at rho={rh}");
    }
}

// ---------------------------------------------------------- perturbation

/// Residual of the first-order component relation at `sigma = 1/2 + eps`,
/// with the trigonometric direction factors pinned on the line.  On the
/// line the relation is exact; off it the residual must vanish linearly
/// in `eps` (first order, not second).
fn perturbation_residual_off_line(eps: f64, rho: f64, real_part: bool, c: &EvalConfig) -> f64 {
    let b = symbols::build_bundle(ComplexPoint::new(0.5 + eps, rho), c).unwrap();
    let src = symbols::build_bundle(ComplexPoint::new(0.5, rho), c).unwrap();
    let f = complexfn::f_rho(rho, c).unwrap();
    let fp = complexfn::f_rho_d1(rho, c).unwrap();
    let az2 = complexfn::modulus(src.z()).powi(2);
    let sin2a = 2.0 * src.zr * src.zi / az2;
    let cos2a = (src.zr * src.zr - src.zi * src.zi) / az2;
    if real_part {
        let sin_sq = (1.0 - cos2a) / 2.0;
        let rhs = fp * b.zi / (2.0 * f)
            + b.zr / f
            + (2.0 * sin_sq * b.z2r - sin2a * b.z2i) * f / 4.0;
        (b.z1r - rhs).abs()
    } else {
        let cos_sq = (1.0 + cos2a) / 2.0;
        let rhs = -fp * b.zr / (2.0 * f)
            + b.zi / f
            + (2.0 * cos_sq * b.z2i - sin2a * b.z2r) * f / 4.0;
        (b.z1i - rhs).abs()
    }
}

#[test]
fn perturbation_identities_exact_on_line_first_order_off_line() {
    let c = cfg();
    for (id, real_part) in [("PERT-R", true), ("PERT-I", false)] {
        let on = identities::evaluate_with_tol(id, ComplexPoint::new(0.5, 10.0), &c, 1e-30)
            .unwrap();
        assert!(
            on.rel_residual < 1e-10,
            "{id} on the line: rel = {}",
            on.rel_residual
        );

        let r1 = perturbation_residual_off_line(1e-3, 10.0, real_part, &c);
        let r2 = perturbation_residual_off_line(2e-3, 10.0, real_part, &c);
        let ratio = r1 / r2;
        assert!(
            (ratio - 0.5).abs() < 0.13,
            "{id} residual halving: r(e)/r(2e) = {ratio}"
        );
    }
}

// -------------------------------------------------------------- arg tracks

#[test]
fn tracked_angle_stays_a_pi_branch_of_the_principal_argument() {
    let c = cfg();
    let samples: Vec<f64> = (0..400).map(|i| 0.001 + 19.999 * (i as f64) / 399.0).collect();
    let trace = argtrack::track(AngleKind::Alpha, 0.4, &samples, &c).unwrap();
    for i in 0..samples.len() {
        let k = trace.k_at(i) as f64;
        let err = (trace.angle_samples[i] - trace.principal_samples[i] - k * PI).abs();
        assert!(err < 1e-8, "branch residual {err} at rho={}", samples[i]);
    }
}

#[test]
fn gamma_argument_track_parallels_continuous_loggamma() {
    let c = cfg();
    let d10 = argtrack::tracked_angle_at(AngleKind::Theta, 0.5, 10.0, &c).unwrap()
        - argtrack::tracked_angle_at(AngleKind::GammaArg, 0.5, 10.0, &c).unwrap();
    let d17 = argtrack::tracked_angle_at(AngleKind::Theta, 0.5, 17.0, &c).unwrap()
        - argtrack::tracked_angle_at(AngleKind::GammaArg, 0.5, 17.0, &c).unwrap();
    assert!((d10 - d17).abs() < 1e-9, "offset drifted: {d10} vs {d17}");
    let turns = d10 / (2.0 * PI);
    assert!((turns - turns.round()).abs() < 1e-9, "offset is not a full turn: {d10}");
}

#[test]
fn winding_count_on_third_line() {
    let c = cfg();
    let s = ComplexPoint::new(1.0 / 3.0, 10.0);
    let sum = argtrack::tracked_angle_at(AngleKind::Alpha, 1.0 / 3.0, 10.0, &c).unwrap()
        + argtrack::tracked_angle_at(AngleKind::AlphaTilde, 1.0 / 3.0, 10.0, &c).unwrap();
    let free = argtrack::alpha_p_closed(s, 0, &c).unwrap();
    assert_eq!(argtrack::winding_k(sum, free).unwrap(), 2);
}

// ------------------------------------------------------------------- zeros

#[test]
fn zero_conditions_discriminate_away_from_zeros() {
    let c = cfg();
    let cond = zeros::zero_conditions_zeta(ComplexPoint::new(0.5, 15.0), &c).unwrap();
    assert!(
        cond.max_equation_residual() > 1e-3,
        "conditions should fail off a zero: {}",
        cond.max_equation_residual()
    );
}

#[test]
fn no_anomalous_component_zeros_below_thirty() {
    let c = cfg();
    let recs = zeros::find_half_zeros(0.5, 30.0, &c).unwrap();
    assert!(recs.len() >= 10, "expected a full census, got {}", recs.len());
    for r in &recs {
        assert!(!r.anomalous, "unexpected anomalous component zero at rho={}", r.rho0);
    }
}

// --------------------------------------------------------------- weighting

#[test]
fn weight_symmetries_in_both_regimes() {
    let cx = CounterexampleConfig::default();
    for &(sg, rh) in &[(0.35, 9.0), (0.7, 27.0)] {
        let (refl, conj) =
            counterexample::weight_symmetry_residuals(ComplexPoint::new(sg, rh), &cx).unwrap();
        assert!(refl < 1e-9, "reflection symmetry at rho={rh}: {refl}");
        assert!(conj < 1e-9, "conjugation symmetry at rho={rh}: {conj}");
    }
}

#[test]
fn weighted_reflection_ratio_residual_small() {
    let c = cfg();
    let cx = CounterexampleConfig::default();
    for &(sg, rh) in &[(0.3, 8.0), (0.7, 3.3)] {
        let r = counterexample::fe_ratio_residual(ComplexPoint::new(sg, rh), &cx, &c).unwrap();
        assert!(r < 1e-8, "ratio residual at sigma={sg} rho={rh}: {r}");
    }
}

#[test]
fn residue_probe_pins_frozen_value() {
    let c = cfg();
    let cx = CounterexampleConfig::default();
    let v = counterexample::residue_probe(&cx, &c, 1e-5).unwrap();
    assert!((v - 1.0000058).abs() < 5e-6, "probe = {v}");
}

// ------------------------------------------------------------ integral form

#[test]
fn interval_representation_closes_on_clean_interval() {
    let c = cfg();
    let r = identities::exp_representation(4.0, 5.0, &c).unwrap();
    assert!(
        rel(r.magnitude_ratio, r.exponential) < 1e-6,
        "ratio {} vs exp {}",
        r.magnitude_ratio,
        r.exponential
    );
}

// ---------------------------------------------------------------- registry

#[test]
fn registry_ids_are_unique_and_resolvable() {
    let mut seen = HashSet::new();
    for info in identities::REGISTRY.iter() {
        assert!(seen.insert(info.id), "duplicate id {}", info.id);
        let found = identities::identity_info(info.id).expect("resolvable");
        assert_eq!(found.id, info.id);
    }
    assert_eq!(seen.len(), 68);
    assert!(identities::identity_info("NO-SUCH-ID").is_none());
}

#[test]
fn unknown_identity_is_a_domain_error() {
    let c = cfg();
    match identities::evaluate("NO-SUCH-ID", ComplexPoint::new(0.4, 9.0), &c) {
        Err(EvalError::Domain(_)) => {}
        other => panic!("expected a domain error, got {other:?}"),
    }
}

#[test]
fn critical_line_identities_record_forced_abscissa() {
    let c = cfg();
    let e = identities::evaluate("ZMAIN", ComplexPoint::new(0.3, 9.0), &c).unwrap();
    assert_eq!(e.sigma, 0.5);
    assert_eq!(e.status, EvalStatus::Passed);
}
