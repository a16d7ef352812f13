//! Rotational profile runs against closed-form values and the RK4 order.

use bicons_engine::rotational::{
    curvatures_at, integrate_profile, order_check, to_csv, verify_rotational, ProfilePoint,
};

#[test]
fn initial_point_has_exact_curvatures() {
    // At (3/5, 0) the curvatures are rational: 4/3, -4/3, H = -2/3, R = 12.
    let k = curvatures_at(&ProfilePoint::new(0.0, 0.6, 0.0)).unwrap();
    assert!((k.lambda1 - 4.0 / 3.0).abs() < 1e-14);
    assert!((k.lambda2 + 4.0 / 3.0).abs() < 1e-14);
    assert!((k.h + 2.0 / 3.0).abs() < 1e-14);
    assert!((k.r - 12.0).abs() < 1e-12);
}

#[test]
fn default_run_satisfies_pointwise_bounds() {
    let run = integrate_profile(ProfilePoint::new(0.0, 0.6, 0.0), 1e-4, 1.0).unwrap();
    let report = verify_rotational(&run, 1e-8).unwrap();
    assert!(report.max_principal_sum <= 1e-8);
    assert!(report.max_scalar_deviation <= 1e-7);
    assert!(report.max_biconservativity <= 1e-8);
    assert!(report.mean_curvature_range > 1e-3);
    assert!(run.exit.is_none());
}

#[test]
fn halving_the_step_gains_fourth_order() {
    let oc = order_check(ProfilePoint::new(0.0, 0.6, 0.0), 1.0, 1e-3, 1e-6).unwrap();
    assert!((12.0..=20.0).contains(&oc.ratio), "ratio {}", oc.ratio);
}

#[test]
fn csv_rows_carry_the_scalar_curvature() {
    let run = integrate_profile(ProfilePoint::new(0.0, 0.6, 0.0), 1e-3, 0.5).unwrap();
    let csv = to_csv(&run).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,h1,dh1,lambda1,lambda2,H,R,residual"));
    let mut rows = 0;
    for line in lines {
        let r: f64 = line.split(',').nth(6).unwrap().parse().unwrap();
        assert!((r - 12.0).abs() <= 1e-6);
        rows += 1;
    }
    assert_eq!(rows, run.points.len());
}
