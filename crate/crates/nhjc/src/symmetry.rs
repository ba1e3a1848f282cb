//! Exceptional points, phase classification and the symmetry order
//! parameters.
//!
//! The antilinear symmetry operation is `Pi_x K`: conjugate, then swap the
//! two basis states of the excitation sector.  Its expectation has modulus 1
//! exactly in the symmetric phases and drops below 1 in the broken phases,
//! while the parity `P = exp(i pi a'a) sx` is a spectator symmetry that every
//! eigenstate keeps in both phases.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::model::{discriminant, EigenSolution, LevelIndex, ModelKind, ModelParams, ParamName};
use crate::{Error, Result};

/// Closed-form exceptional-point location(s) of one sector.
///
/// One value for `g`, `gamma`, `Gamma`; up to two (`Omega +- 2 sqrt(n) Gamma`)
/// for `omega`, keeping only positive roots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpSet {
    pub parameter: ParamName,
    pub values: Vec<f64>,
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhaseTag {
    Symmetric,
    Broken,
    AtEp,
}

impl std::fmt::Display for PhaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PhaseTag::Symmetric => "symmetric",
            PhaseTag::Broken => "broken",
            PhaseTag::AtEp => "at-ep",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryKind {
    Pt,
    AntiPt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseLabel {
    pub tag: PhaseTag,
    pub symmetry: SymmetryKind,
}

/// Closed-form exceptional-point values of sector `n` with respect to one
/// parameter: `g_EP = gamma/(2 sqrt(n))`, `gamma_EP = 2 sqrt(n) g`,
/// `Gamma_EP = |Omega - omega|/(2 sqrt(n))`, `omega_EP = Omega +- 2 sqrt(n) Gamma`.
pub fn ep_locate(p: &ModelParams, n: u32, parameter: ParamName) -> Result<EpSet> {
    p.validate()?;
    if n == 0 {
        return Err(Error::InvalidLevel("exceptional points require n >= 1".into()));
    }
    let sq = (n as f64).sqrt();
    let values = match (p.kind, parameter) {
        (ModelKind::QubitDecay, ParamName::G) => vec![p.gamma / (2.0 * sq)],
        (ModelKind::QubitDecay, ParamName::Gamma) => vec![2.0 * sq * p.g],
        (ModelKind::CouplingDecay, ParamName::GammaC) => {
            vec![(p.omega_q - p.omega).abs() / (2.0 * sq)]
        }
        (ModelKind::CouplingDecay, ParamName::Omega) => {
            let mut v: Vec<f64> = [
                p.omega_q - 2.0 * sq * p.gamma_c,
                p.omega_q + 2.0 * sq * p.gamma_c,
            ]
            .into_iter()
            .filter(|w| *w > 0.0)
            .collect();
            v.dedup();
            v
        }
        (ModelKind::CouplingDecay, ParamName::Detuning) => vec![2.0 * sq * p.gamma_c],
        (kind, param) => return Err(Error::ParamKindMismatch { param, kind }),
    };
    Ok(EpSet {
        parameter,
        values,
        n,
    })
}

/// Discriminant-scale tolerance used when none is given.
pub fn default_phase_tol(p: &ModelParams, n: u32) -> f64 {
    let nf = n as f64;
    1e-12
        * [
            p.omega_q * p.omega_q,
            nf * p.gamma_c * p.gamma_c,
            nf * p.g * p.g,
            p.gamma * p.gamma,
        ]
        .into_iter()
        .fold(f64::MIN, f64::max)
}

/// Phase of sector `n`.  The PT model is symmetric where the discriminant is
/// positive (real spectrum); the anti-PT model is symmetric where it is
/// negative (complex spectrum with degenerate real parts).
pub fn classify_phase(p: &ModelParams, n: u32, tol: f64) -> Result<PhaseLabel> {
    let symmetry = match p.kind {
        ModelKind::QubitDecay => SymmetryKind::Pt,
        ModelKind::CouplingDecay => SymmetryKind::AntiPt,
        ModelKind::Generic => {
            return Err(Error::InvalidParams(
                "phase classification is defined for the two special models only".into(),
            ))
        }
    };
    let disc = discriminant(p, n)?.re;
    let tag = if disc.abs() <= tol {
        PhaseTag::AtEp
    } else {
        let real_spectrum = disc > 0.0;
        match (symmetry, real_spectrum) {
            (SymmetryKind::Pt, true) | (SymmetryKind::AntiPt, false) => PhaseTag::Symmetric,
            _ => PhaseTag::Broken,
        }
    };
    Ok(PhaseLabel { tag, symmetry })
}

/// Expectation `<psi | Pi_x K psi> = 2 c_up* c_down* / N` of the antilinear
/// symmetry operation on a closed-form eigenstate.
pub fn ptk_expectation(sol: &EigenSolution) -> Result<Complex64> {
    if sol.norm <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok(2.0 * sol.c_up.conj() * sol.c_down.conj() / sol.norm)
}

/// Eigenvalue of the parity `exp(i pi a'a) sx`: `(-1)^(n-1)` for `n >= 1`
/// and `-1` for the ground sector.  Both basis states of a sector share it,
/// so it is independent of branch, phase and all parameters.
pub fn parity_expectation(lvl: LevelIndex) -> i32 {
    if lvl.n == 0 || !(lvl.n - 1).is_multiple_of(2) {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{eigen_closed, Branch};
    use approx::assert_abs_diff_eq;

    #[test]
    fn ep_values_match_closed_forms() {
        let p = ModelParams::qubit_decay(1.0, 0.0, 0.2).unwrap();
        let p = ModelParams { gamma: 0.4, ..p }; // gamma free, g = 0.2
        let ep = ep_locate(&p, 1, ParamName::Gamma).unwrap();
        assert_eq!(ep.values, vec![0.4]);

        let p = ModelParams::coupling_decay(0.1, 1.0, 0.3).unwrap();
        let ep = ep_locate(&p, 1, ParamName::GammaC).unwrap();
        assert_abs_diff_eq!(ep.values[0], 0.45, epsilon = 1e-15);

        let p = ModelParams::coupling_decay(0.5, 1.0, 0.1).unwrap();
        let ep = ep_locate(&p, 4, ParamName::Omega).unwrap();
        assert_eq!(ep.values.len(), 2);
        assert_abs_diff_eq!(ep.values[0], 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(ep.values[1], 1.4, epsilon = 1e-15);
    }

    #[test]
    fn ep_discriminant_vanishes_at_returned_values() {
        let p = ModelParams::qubit_decay(1.0, 0.5, 0.2).unwrap();
        for n in 1..6u32 {
            for param in [ParamName::G, ParamName::Gamma] {
                for v in ep_locate(&p, n, param).unwrap().values {
                    let q = p.with_param(param, v).unwrap();
                    assert_abs_diff_eq!(discriminant(&q, n).unwrap().re, 0.0, epsilon = 1e-13);
                }
            }
        }
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.2).unwrap();
        for n in 1..6u32 {
            for param in [ParamName::GammaC, ParamName::Omega, ParamName::Detuning] {
                for v in ep_locate(&p, n, param).unwrap().values {
                    let q = p.with_param(param, v).unwrap();
                    assert_abs_diff_eq!(discriminant(&q, n).unwrap().re, 0.0, epsilon = 1e-13);
                }
            }
        }
    }

    #[test]
    fn ep_rejects_mismatched_parameter() {
        let p = ModelParams::qubit_decay(1.0, 0.5, 0.2).unwrap();
        assert!(ep_locate(&p, 1, ParamName::GammaC).is_err());
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.2).unwrap();
        assert!(ep_locate(&p, 1, ParamName::G).is_err());
    }

    #[test]
    fn phase_classification() {
        // disc = n g^2 - gamma^2/4 = 0.09 - 0.0625 > 0
        let p = ModelParams::qubit_decay(1.0, 0.5, 0.3).unwrap();
        let l = classify_phase(&p, 1, default_phase_tol(&p, 1)).unwrap();
        assert_eq!(l.tag, PhaseTag::Symmetric);
        assert_eq!(l.symmetry, SymmetryKind::Pt);

        // disc = (0.9)^2/4 - 0.25 < 0 -> complex spectrum -> anti-PT symmetric
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.5).unwrap();
        let l = classify_phase(&p, 1, default_phase_tol(&p, 1)).unwrap();
        assert_eq!(l.tag, PhaseTag::Symmetric);
        assert_eq!(l.symmetry, SymmetryKind::AntiPt);

        let p = ModelParams::qubit_decay(1.0, 0.5, 0.25).unwrap();
        let l = classify_phase(&p, 1, default_phase_tol(&p, 1)).unwrap();
        assert_eq!(l.tag, PhaseTag::AtEp);

        let p = ModelParams::qubit_decay(1.0, 0.8, 0.1).unwrap();
        assert_eq!(classify_phase(&p, 1, 1e-15).unwrap().tag, PhaseTag::Broken);
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.1).unwrap();
        assert_eq!(classify_phase(&p, 1, 1e-15).unwrap().tag, PhaseTag::Broken);

        let p = ModelParams::generic(1.0, 0.1, 1.0, 0.1, 0.1, 0.1).unwrap();
        assert!(classify_phase(&p, 1, 1e-15).is_err());
    }

    #[test]
    fn ptk_modulus_one_in_symmetric_phase() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.3).unwrap();
        for branch in [Branch::Plus, Branch::Minus] {
            let s = eigen_closed(&p, LevelIndex::new(1, branch)).unwrap();
            assert_abs_diff_eq!(ptk_expectation(&s).unwrap().norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn ptk_broken_phase_closed_form() {
        // |<Pi_x K>| = 2 sqrt(n) Gamma / |Omega - omega| in the anti-PT-broken phase.
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.1).unwrap();
        for branch in [Branch::Plus, Branch::Minus] {
            let s = eigen_closed(&p, LevelIndex::new(1, branch)).unwrap();
            let m = ptk_expectation(&s).unwrap().norm();
            assert_abs_diff_eq!(m, 2.0 * 0.1 / 0.9, epsilon = 1e-12);
            assert!(m < 1.0);
        }
    }

    #[test]
    fn ptk_ground_level_is_zero() {
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.1).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(0, Branch::Minus)).unwrap();
        assert_eq!(ptk_expectation(&s).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn parity_alternates_with_n() {
        assert_eq!(parity_expectation(LevelIndex::new(0, Branch::Minus)), -1);
        assert_eq!(parity_expectation(LevelIndex::new(1, Branch::Plus)), 1);
        assert_eq!(parity_expectation(LevelIndex::new(1, Branch::Minus)), 1);
        assert_eq!(parity_expectation(LevelIndex::new(2, Branch::Plus)), -1);
        assert_eq!(parity_expectation(LevelIndex::new(3, Branch::Minus)), 1);
    }
}
