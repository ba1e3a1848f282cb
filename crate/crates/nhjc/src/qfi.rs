//! Quantum Fisher information with respect to a Hamiltonian parameter.
//!
//! For a pure normalized state, `F_Q = 4 (<psi'|psi'> - |<psi'|psi>|^2)`.
//! Around an exceptional point of either model the closed form is
//!
//! ```text
//! F_Q(l) = theta(l_EP - l) / (l_EP^2 - l^2)
//!        + l_EP^2 theta(l - l_EP) / (l^2 (l^2 - l_EP^2)),
//! ```
//!
//! the same expression for every sweep parameter, level and branch.  The
//! numeric route evaluates the gauge-invariant overlap (fidelity) form on the
//! closed-form states; for two-component states the overlap deficit is
//! computed through the Lagrange identity `1 - |<a|b>|^2 = |a x b|^2`, which
//! avoids the catastrophic cancellation of `1 - |overlap|` at small steps.

use serde::{Deserialize, Serialize};

use crate::model::{eigen_closed, LevelIndex, ModelKind, ModelParams, ParamName};
use crate::symmetry::ep_locate;
use crate::{Error, Result};

/// How a QFI value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QfiMethod {
    ClosedForm,
    NearEp,
    NumericOverlap,
}

/// A QFI value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QfiResult {
    pub value: f64,
    pub parameter: ParamName,
    pub lambda: f64,
    pub lambda_ep: f64,
    pub method: QfiMethod,
}

/// Closed-form QFI.  Diverges at `lambda = lambda_ep`.
pub fn qfi_closed(lambda: f64, lambda_ep: f64) -> Result<f64> {
    if lambda.is_nan() || lambda < 0.0 || lambda_ep.is_nan() || lambda_ep <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "qfi_closed requires lambda >= 0 and lambda_ep > 0, got ({lambda}, {lambda_ep})"
        )));
    }
    if lambda == lambda_ep {
        return Err(Error::Divergence(lambda_ep));
    }
    if lambda < lambda_ep {
        Ok(1.0 / (lambda_ep * lambda_ep - lambda * lambda))
    } else {
        Ok(lambda_ep * lambda_ep
            / (lambda * lambda * (lambda * lambda - lambda_ep * lambda_ep)))
    }
}

/// Leading near-EP form `|lambda - lambda_ep|^-1 / (2 lambda_ep)`, valid on
/// both sides.
pub fn qfi_near_ep(lambda: f64, lambda_ep: f64) -> Result<f64> {
    if lambda == lambda_ep {
        return Err(Error::Divergence(lambda_ep));
    }
    Ok(1.0 / ((lambda - lambda_ep).abs() * 2.0 * lambda_ep))
}

fn check_param_kind(p: &ModelParams, name: ParamName) -> Result<()> {
    let ok = matches!(
        (p.kind, name),
        (ModelKind::QubitDecay, ParamName::G | ParamName::Gamma)
            | (
                ModelKind::CouplingDecay,
                ParamName::GammaC | ParamName::Omega | ParamName::Detuning
            )
    );
    if ok {
        Ok(())
    } else {
        Err(Error::ParamKindMismatch {
            param: name,
            kind: p.kind,
        })
    }
}

/// The sweep coordinate the QFI is taken with respect to.  For `omega` the
/// coordinate is the detuning magnitude `|Omega - omega|`, which carries the
/// same derivative since only `Omega - omega` enters the states.
pub fn current_lambda(p: &ModelParams, name: ParamName) -> Result<f64> {
    check_param_kind(p, name)?;
    Ok(match name {
        ParamName::G => p.g,
        ParamName::Gamma => p.gamma,
        ParamName::GammaC => p.gamma_c,
        ParamName::Omega | ParamName::Detuning => (p.omega_q - p.omega).abs(),
    })
}

/// The single exceptional-point value in the sweep coordinate of
/// [`current_lambda`].
pub fn lambda_ep(p: &ModelParams, n: u32, name: ParamName) -> Result<f64> {
    check_param_kind(p, name)?;
    let name = match name {
        ParamName::Omega => ParamName::Detuning,
        other => other,
    };
    let ep = ep_locate(p, n, name)?;
    ep.values
        .first()
        .copied()
        .ok_or_else(|| Error::InvalidParams("no exceptional point for these parameters".into()))
    }

/// Model with the sweep coordinate set to `value`, preserving the sign of the
/// detuning for `omega` sweeps.
fn at_lambda(p: &ModelParams, name: ParamName, value: f64) -> Result<ModelParams> {
    match name {
        ParamName::Omega | ParamName::Detuning => {
            let sign = if p.omega_q - p.omega < 0.0 { -1.0 } else { 1.0 };
            p.with_param(ParamName::Detuning, sign * value)
        }
        _ => p.with_param(name, value),
    }
}

/// `1 - |<psi(a)|psi(b)>|` for the normalized closed-form states of one
/// level, cancellation-free.
fn overlap_deficit(
    p: &ModelParams,
    lvl: LevelIndex,
    name: ParamName,
    la: f64,
    lb: f64,
) -> Result<f64> {
    let sa = eigen_closed(&at_lambda(p, name, la)?, lvl)?;
    let sb = eigen_closed(&at_lambda(p, name, lb)?, lvl)?;
    let scale = (sa.norm * sb.norm).sqrt();
    if scale <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    let cross = (sa.c_up * sb.c_down - sa.c_down * sb.c_up).norm_sqr() / (scale * scale);
    let ov = (sa.c_up.conj() * sb.c_up + sa.c_down.conj() * sb.c_down).norm() / scale;
    Ok(cross / (1.0 + ov))
}

/// Overlap-based numeric QFI on closed-form states.
///
/// Uses `F_Q ~ 8 (1 - |<psi(l)|psi(l + d)>|) / d^2`, Richardson-extrapolated
/// over step sizes `d` and `d/2` to cancel the leading one-sided error, with
/// the step directed away from the exceptional point when it would otherwise
/// cross it.
pub fn qfi_numeric(
    p: &ModelParams,
    lvl: LevelIndex,
    name: ParamName,
    step: Option<f64>,
) -> Result<QfiResult> {
    check_param_kind(p, name)?;
    let lambda = current_lambda(p, name)?;
    let lep = lambda_ep(p, lvl.n.max(1), name)?;
    if lvl.n == 0 {
        // the ground level is parameter-independent
        return Ok(QfiResult {
            value: 0.0,
            parameter: name,
            lambda,
            lambda_ep: lep,
            method: QfiMethod::NumericOverlap,
        });
    }
    let scale = lambda.max(lep);
    let delta = step.unwrap_or(1e-5 * scale);
    if delta < 1e3 * f64::EPSILON * scale {
        return Err(Error::StepTooSmall(delta));
    }
    if (lambda - lep).abs() <= delta {
        return Err(Error::StepCrossesEp {
            step: delta,
            lambda_ep: lep,
        });
    }
    // one-sided step away from the EP when a forward step would cross it
    let signed = if lambda < lep && lambda + delta >= lep {
        -delta
    } else {
        delta
    };
    if lambda + signed < 0.0 {
        return Err(Error::StepCrossesEp {
            step: delta,
            lambda_ep: lep,
        });
    }
    let est = |d: f64| -> Result<f64> {
        Ok(8.0 * overlap_deficit(p, lvl, name, lambda, lambda + d)? / (d * d))
    };
    let f1 = est(signed)?;
    let f2 = est(0.5 * signed)?;
    Ok(QfiResult {
        value: 2.0 * f2 - f1,
        parameter: name,
        lambda,
        lambda_ep: lep,
        method: QfiMethod::NumericOverlap,
    })
}

/// Map QFI points onto the universal scaling curve
/// `(x, y) = (lambda/lambda_EP, (lambda_EP^2 F_Q)^(-1/2))`, which equals
/// `sqrt(1 - x^2)` below the EP and `sqrt(x^2 (x^2 - 1))` above.
pub fn collapse_curve(points: &[QfiResult]) -> Vec<(f64, f64)> {
    points
        .iter()
        .map(|q| {
            (
                q.lambda / q.lambda_ep,
                1.0 / (q.lambda_ep * q.lambda_ep * q.value).sqrt(),
            )
        })
        .collect()
}

/// Least-squares slope of `log F_Q` versus `log |lambda - lambda_EP|` over
/// points with `|lambda - lambda_EP| / lambda_EP` in `[1e-6, 1e-2]`.
pub fn exponent_fit(points: &[(f64, f64)], lambda_ep: f64) -> Result<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(l, f)| {
            let r = (l - lambda_ep).abs() / lambda_ep;
            (1e-6..=1e-2).contains(&r) && *f > 0.0
        })
        .map(|(l, f)| ((l - lambda_ep).abs().ln(), f.ln()))
        .collect();
    if pts.len() < 8 {
        return Err(Error::InsufficientData(format!(
            "exponent fit needs >= 8 points in the near-EP window, got {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum::<f64>();
    let sxy = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>();
    if sxx <= 0.0 {
        return Err(Error::InsufficientData(
            "exponent fit abscissae are degenerate".into(),
        ));
    }
    Ok(sxy / sxx)
}
