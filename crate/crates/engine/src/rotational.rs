//! The rotational non-CMC biconservative hypersurface in S⁵ (c = 1).
//!
//! The profile coordinate h₁(s) solves h₁(h₁″ + h₁) = 1 − h₁² − h₁′², and the
//! principal curvatures are
//!
//! ```text
//! λ₁ = (h₁″ + h₁) / √(1 − h₁² − h₁′²),    λ₂ = λ₃ = λ₄ = −√(1 − h₁² − h₁′²) / h₁.
//! ```

use serde::Serialize;
use thiserror::Error;

/// Both the h₁ > 0 and the square-root radicand conditions use this margin
/// for early exit.
pub const DOMAIN_MARGIN: f64 = 1e-8;
/// Largest accepted integration step.
pub const MAX_STEP: f64 = 1e-3;

const C: f64 = 1.0;
const DIM: f64 = 4.0;

#[derive(Debug, Error, PartialEq)]
pub enum RotationalError {
    #[error("point (h1 = {h1}, h1' = {dh1}) is outside the domain: {reason}")]
    Domain {
        h1: f64,
        dh1: f64,
        reason: &'static str,
    },
    #[error("step must be in (0, {MAX_STEP}], got {0}")]
    Step(f64),
    #[error("length must be positive and finite, got {0}")]
    Length(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProfilePoint {
    pub s: f64,
    pub h1: f64,
    pub dh1: f64,
}

impl ProfilePoint {
    pub fn new(s: f64, h1: f64, dh1: f64) -> Self {
        ProfilePoint { s, h1, dh1 }
    }

    /// 1 − h₁² − h₁′².
    pub fn radicand(&self) -> f64 {
        1.0 - self.h1 * self.h1 - self.dh1 * self.dh1
    }

    pub fn validate(&self) -> Result<(), RotationalError> {
        let fail = |reason| {
            Err(RotationalError::Domain {
                h1: self.h1,
                dh1: self.dh1,
                reason,
            })
        };
        if !(self.h1.is_finite() && self.dh1.is_finite()) {
            return fail("non-finite coordinate");
        }
        if self.h1 <= 0.0 {
            return fail("h1 must be positive");
        }
        if self.radicand() <= 0.0 {
            return fail("h1^2 + h1'^2 must be below 1");
        }
        Ok(())
    }

    /// h₁″ from the profile equation.
    pub fn second_derivative(&self) -> f64 {
        self.radicand() / self.h1 - self.h1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvatureSample {
    pub lambda1: f64,
    pub lambda2: f64,
    #[serde(rename = "H")]
    pub h: f64,
    #[serde(rename = "R")]
    pub r: f64,
    /// |λ₁ + 2H|.
    pub biconservativity_residual: f64,
}

/// Principal curvatures, mean curvature and scalar curvature at a profile
/// point, with h₁″ taken from the ODE.
pub fn curvatures_at(p: &ProfilePoint) -> Result<CurvatureSample, RotationalError> {
    p.validate()?;
    let root = p.radicand().sqrt();
    let lambda1 = (p.second_derivative() + p.h1) / root;
    let lambda2 = -root / p.h1;
    let h = (lambda1 + 3.0 * lambda2) / DIM;
    // R = n(n−1)c + 4λ₁² − |A|², using 16H² = 4λ₁² on this branch.
    let r = DIM * (DIM - 1.0) * C + 4.0 * lambda1 * lambda1
        - (lambda1 * lambda1 + 3.0 * lambda2 * lambda2);
    Ok(CurvatureSample {
        lambda1,
        lambda2,
        h,
        r,
        biconservativity_residual: (lambda1 + 2.0 * h).abs(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitReason {
    H1Vanishes,
    RadicandVanishes,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DomainExit {
    /// Arc length of the last accepted point.
    pub s: f64,
    pub reason: ExitReason,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileRun {
    pub step: f64,
    pub points: Vec<ProfilePoint>,
    pub exit: Option<DomainExit>,
}

fn rhs(h: f64, d: f64) -> [f64; 2] {
    [d, (1.0 - h * h - d * d) / h - h]
}

fn exit_reason(h: f64, d: f64) -> Option<ExitReason> {
    if !(h > DOMAIN_MARGIN) {
        Some(ExitReason::H1Vanishes)
    } else if !(1.0 - h * h - d * d > DOMAIN_MARGIN) {
        Some(ExitReason::RadicandVanishes)
    } else {
        None
    }
}

/// Fixed-step RK4 with a compensated state update. Calls `visit` for every
/// accepted point including the initial one.
fn integrate_with(
    p0: ProfilePoint,
    step: f64,
    length: f64,
    mut visit: impl FnMut(ProfilePoint),
) -> Result<Option<DomainExit>, RotationalError> {
    p0.validate()?;
    if !(step > 0.0 && step <= MAX_STEP) {
        return Err(RotationalError::Step(step));
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(RotationalError::Length(length));
    }
    let n = (length / step).round() as u64;
    let mut y = [p0.h1, p0.dh1];
    let mut comp = [0.0f64; 2];
    visit(p0);
    for k in 1..=n {
        let k1 = rhs(y[0], y[1]);
        let k2 = rhs(y[0] + 0.5 * step * k1[0], y[1] + 0.5 * step * k1[1]);
        let k3 = rhs(y[0] + 0.5 * step * k2[0], y[1] + 0.5 * step * k2[1]);
        let k4 = rhs(y[0] + step * k3[0], y[1] + step * k3[1]);
        let mut next = y;
        let mut next_comp = comp;
        for j in 0..2 {
            let inc = step / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            let yy = inc - next_comp[j];
            let t = next[j] + yy;
            next_comp[j] = (t - next[j]) - yy;
            next[j] = t;
        }
        if let Some(reason) = exit_reason(next[0], next[1]) {
            let s = p0.s + (k - 1) as f64 * step;
            return Ok(Some(DomainExit { s, reason }));
        }
        y = next;
        comp = next_comp;
        visit(ProfilePoint::new(p0.s + k as f64 * step, y[0], y[1]));
    }
    Ok(None)
}

/// Integrates the profile ODE from `p0` over `length` in steps of `step`.
/// Leaving the domain is not an error: the run stops and records why.
pub fn integrate_profile(
    p0: ProfilePoint,
    step: f64,
    length: f64,
) -> Result<ProfileRun, RotationalError> {
    let mut points = Vec::with_capacity((length / step).round().min(1e7) as usize + 1);
    let exit = integrate_with(p0, step, length, |p| points.push(p))?;
    Ok(ProfileRun { step, points, exit })
}

/// The last point of a run, without storing the trajectory.
pub fn endpoint(
    p0: ProfilePoint,
    step: f64,
    length: f64,
) -> Result<(ProfilePoint, Option<DomainExit>), RotationalError> {
    let mut last = p0;
    let exit = integrate_with(p0, step, length, |p| last = p)?;
    Ok((last, exit))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RotationalReport {
    pub samples: usize,
    pub tol: f64,
    pub max_principal_sum: f64,
    pub max_scalar_deviation: f64,
    pub max_biconservativity: f64,
    pub mean_curvature_range: f64,
    pub checks: Vec<CheckResult>,
    pub exit: Option<DomainExit>,
    pub passed: bool,
}

/// Checks −λ₁ = λ₂, R = 12 and λ₁ = −2H along the run to within `tol`, and
/// that H varies by more than 10³·tol.
pub fn verify_rotational(run: &ProfileRun, tol: f64) -> Result<RotationalReport, RotationalError> {
    let mut max_sum = 0.0f64;
    let mut max_r = 0.0f64;
    let mut max_bic = 0.0f64;
    let mut h_min = f64::INFINITY;
    let mut h_max = f64::NEG_INFINITY;
    for p in &run.points {
        let k = curvatures_at(p)?;
        max_sum = max_sum.max((k.lambda1 + k.lambda2).abs());
        max_r = max_r.max((k.r - DIM * (DIM - 1.0) * C).abs());
        max_bic = max_bic.max(k.biconservativity_residual);
        h_min = h_min.min(k.h);
        h_max = h_max.max(k.h);
    }
    let range = if run.points.is_empty() {
        0.0
    } else {
        h_max - h_min
    };
    let check = |name, value: f64, bound: f64, below: bool| CheckResult {
        name,
        value,
        bound,
        passed: if below { value <= bound } else { value > bound },
    };
    let checks = vec![
        check("lambda1+lambda2", max_sum, tol, true),
        check("R-12", max_r, tol, true),
        check("lambda1+2H", max_bic, tol, true),
        check("H-range", range, 1e3 * tol, false),
    ];
    let passed = !run.points.is_empty() && checks.iter().all(|c| c.passed);
    Ok(RotationalReport {
        samples: run.points.len(),
        tol,
        max_principal_sum: max_sum,
        max_scalar_deviation: max_r,
        max_biconservativity: max_bic,
        mean_curvature_range: range,
        checks,
        exit: run.exit,
        passed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OrderCheck {
    pub coarse_step: f64,
    pub fine_step: f64,
    pub coarse_error: f64,
    pub fine_error: f64,
    pub ratio: f64,
}

/// Endpoint deviation (max-norm over h₁, h₁′) from a `reference_step` run,
/// for `coarse_step` and half of it.
pub fn order_check(
    p0: ProfilePoint,
    length: f64,
    coarse_step: f64,
    reference_step: f64,
) -> Result<OrderCheck, RotationalError> {
    let (reference, _) = endpoint(p0, reference_step, length)?;
    let deviation = |step: f64| -> Result<f64, RotationalError> {
        let (p, _) = endpoint(p0, step, length)?;
        Ok((p.h1 - reference.h1)
            .abs()
            .max((p.dh1 - reference.dh1).abs()))
    };
    let coarse_error = deviation(coarse_step)?;
    let fine_step = coarse_step / 2.0;
    let fine_error = deviation(fine_step)?;
    Ok(OrderCheck {
        coarse_step,
        fine_step,
        coarse_error,
        fine_error,
        ratio: coarse_error / fine_error,
    })
}

fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV with columns s, h1, dh1, lambda1, lambda2, H, R, residual and 17
/// significant digits per value.
pub fn to_csv(run: &ProfileRun) -> Result<String, RotationalError> {
    let mut out = String::from("s,h1,dh1,lambda1,lambda2,H,R,residual\n");
    for p in &run.points {
        let k = curvatures_at(p)?;
        let row = [
            p.s,
            p.h1,
            p.dh1,
            k.lambda1,
            k.lambda2,
            k.h,
            k.r,
            k.biconservativity_residual,
        ];
        out.push_str(&row.iter().map(|&x| sig17(x)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    Ok(out)
}
