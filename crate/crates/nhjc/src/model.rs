//! Model parameters and the exact eigenproblem of the non-Hermitian
//! Jaynes-Cummings Hamiltonian
//!
//! ```text
//! H = w~ a'a + (W~/2) sx + g~ (s- a' + s+ a),
//! w~ = omega - i kappa,  W~ = Omega - i gamma,  g~ = g - i Gamma,
//! ```
//!
//! where `s+`/`s-` raise and lower the qubit on the `sx` eigenbasis.  The
//! excitation number `a'a + sx/2 + 1/2 = n` is conserved, so each sector
//! `n >= 1` is the two-dimensional block spanned by `|n-1, up>` and
//! `|n, down>` and diagonalizes in closed form; `n = 0` is the single state
//! `|0, down>`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which special case of the generic Hamiltonian is selected.
///
/// `QubitDecay` keeps only the qubit loss `gamma` (with the qubit tuned to
/// resonance, `Omega = omega`); it is PT symmetric.  `CouplingDecay` keeps
/// only the coupling loss `Gamma` (the coupling is purely `i Gamma`); it is
/// anti-PT symmetric within each excitation sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "generic")]
    Generic,
    #[serde(rename = "hgamma")]
    QubitDecay,
    #[serde(rename = "hgammaU")]
    CouplingDecay,
}

/// The six real model parameters plus the model-kind tag.
///
/// Construct through [`ModelParams::generic`], [`ModelParams::qubit_decay`]
/// or [`ModelParams::coupling_decay`] so the kind constraints hold; `validate`
/// re-checks them on entry to every operation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Boson frequency `omega` (> 0).
    pub omega: f64,
    /// Boson dissipation rate `kappa` (>= 0).
    pub kappa: f64,
    /// Qubit energy splitting `Omega`.
    pub omega_q: f64,
    /// Qubit decay rate `gamma` (>= 0).
    pub gamma: f64,
    /// Coupling strength `g` (>= 0).
    pub g: f64,
    /// Coupling decay rate `Gamma` (>= 0).
    pub gamma_c: f64,
    pub kind: ModelKind,
}

impl ModelParams {
    /// Generic model with all three complex parameters.
    pub fn generic(
        omega: f64,
        kappa: f64,
        omega_q: f64,
        gamma: f64,
        g: f64,
        gamma_c: f64,
    ) -> Result<Self> {
        let p = ModelParams {
            omega,
            kappa,
            omega_q,
            gamma,
            g,
            gamma_c,
            kind: ModelKind::Generic,
        };
        p.validate()?;
        Ok(p)
    }

    /// PT-symmetric special case: lossy qubit at resonance (`Omega = omega`),
    /// real coupling `g`, no boson or coupling loss.
    pub fn qubit_decay(omega: f64, gamma: f64, g: f64) -> Result<Self> {
        let p = ModelParams {
            omega,
            kappa: 0.0,
            omega_q: omega,
            gamma,
            g,
            gamma_c: 0.0,
            kind: ModelKind::QubitDecay,
        };
        p.validate()?;
        Ok(p)
    }

    /// Anti-PT-symmetric special case: purely imaginary coupling `i Gamma`,
    /// lossless qubit and boson.
    pub fn coupling_decay(omega: f64, omega_q: f64, gamma_c: f64) -> Result<Self> {
        let p = ModelParams {
            omega,
            kappa: 0.0,
            omega_q,
            gamma: 0.0,
            g: 0.0,
            gamma_c,
            kind: ModelKind::CouplingDecay,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.omega,
            self.kappa,
            self.omega_q,
            self.gamma,
            self.g,
            self.gamma_c,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidParams("non-finite parameter".into()));
        }
        if self.omega <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "omega must be > 0, got {}",
                self.omega
            )));
        }
        for (name, v) in [
            ("kappa", self.kappa),
            ("gamma", self.gamma),
            ("g", self.g),
            ("Gamma", self.gamma_c),
        ] {
            if v < 0.0 {
                return Err(Error::InvalidParams(format!("{name} must be >= 0, got {v}")));
            }
        }
        match self.kind {
            ModelKind::Generic => {}
            ModelKind::QubitDecay => {
                if self.omega_q != self.omega || self.gamma_c != 0.0 || self.kappa != 0.0 {
                    return Err(Error::InvalidParams(
                        "qubit-decay model requires Omega = omega, Gamma = 0, kappa = 0".into(),
                    ));
                }
            }
            ModelKind::CouplingDecay => {
                if self.gamma != 0.0 || self.kappa != 0.0 || self.g != 0.0 {
                    return Err(Error::InvalidParams(
                        "coupling-decay model requires gamma = 0, kappa = 0, g = 0".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Replace the value addressed by `name`, keeping the kind constraints.
    ///
    /// `Detuning` moves `omega` so that `Omega - omega` equals the new value.
    pub fn with_param(&self, name: ParamName, value: f64) -> Result<Self> {
        let mut p = *self;
        match name {
            ParamName::G => p.g = value,
            ParamName::Gamma => p.gamma = value,
            ParamName::GammaC => p.gamma_c = value,
            ParamName::Omega => p.omega = value,
            ParamName::Detuning => p.omega = p.omega_q - value,
        }
        if p.kind == ModelKind::QubitDecay {
            p.omega_q = p.omega;
        }
        p.validate()?;
        Ok(p)
    }
}

/// Sweepable parameter names.  `Detuning` is `Omega - omega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamName {
    #[serde(rename = "g")]
    G,
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "Gamma")]
    GammaC,
    #[serde(rename = "omega")]
    Omega,
    #[serde(rename = "detuning")]
    Detuning,
}

impl std::fmt::Display for ParamName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ParamName::G => "g",
            ParamName::Gamma => "gamma",
            ParamName::GammaC => "Gamma",
            ParamName::Omega => "omega",
            ParamName::Detuning => "detuning",
        })
    }
}

impl std::str::FromStr for ParamName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(ParamName::G),
            "gamma" => Ok(ParamName::Gamma),
            "Gamma" => Ok(ParamName::GammaC),
            "omega" => Ok(ParamName::Omega),
            "detuning" => Ok(ParamName::Detuning),
            _ => Err(Error::InvalidParams(format!("unknown parameter name {s:?}"))),
        }
    }
}

/// Energy-branch label inside one excitation sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            _ => Err(Error::InvalidParams(format!("unknown branch {s:?}"))),
        }
    }
}

/// Addresses one eigenstate: excitation number `n` and branch.
///
/// The branch is ignored for `n = 0`, whose sector is one-dimensional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelIndex {
    pub n: u32,
    pub branch: Branch,
}

impl LevelIndex {
    pub fn new(n: u32, branch: Branch) -> Self {
        LevelIndex { n, branch }
    }
}

/// One closed-form eigenstate of a 2x2 excitation block.
///
/// The state is `(c_up |n-1, up> + c_down |n, down>) / sqrt(norm)` with
/// `norm = |c_up|^2 + |c_down|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSolution {
    pub energy: Complex64,
    pub c_up: Complex64,
    pub c_down: Complex64,
    pub norm: f64,
}

/// Principal complex square root: nonnegative real part, and nonnegative
/// imaginary part when the real part vanishes.  Exactly real inputs map to
/// exactly real or exactly imaginary outputs so that phase-coefficient
/// identities (purely real/imaginary amplitudes in the symmetry-broken
/// phases) hold to the bit.
pub fn sqrt_principal(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            return Complex64::new(z.re.sqrt(), 0.0);
        }
        return Complex64::new(0.0, (-z.re).sqrt());
    }
    let s = z.sqrt();
    if s.re < 0.0 || (s.re == 0.0 && s.im < 0.0) {
        -s
    } else {
        s
    }
}

/// Complexified parameters `(w~, W~, g~)` with the kind constraints applied.
pub fn effective_params(p: &ModelParams) -> Result<(Complex64, Complex64, Complex64)> {
    p.validate()?;
    let omega_t = Complex64::new(p.omega, -p.kappa);
    let (omega_q_t, g_t) = match p.kind {
        ModelKind::Generic => (
            Complex64::new(p.omega_q, -p.gamma),
            Complex64::new(p.g, -p.gamma_c),
        ),
        ModelKind::QubitDecay => (Complex64::new(p.omega, -p.gamma), Complex64::new(p.g, 0.0)),
        // The coupling of the anti-PT model is +i Gamma.
        ModelKind::CouplingDecay => (
            Complex64::new(p.omega_q, 0.0),
            Complex64::new(0.0, p.gamma_c),
        ),
    };
    Ok((omega_t, omega_q_t, g_t))
}

/// Half-sum and half-difference of the block diagonal,
/// `e+ = (n - 1/2) w~` and `e- = (W~ - w~)/2`.
fn block_es(p: &ModelParams, n: u32) -> Result<(Complex64, Complex64, Complex64)> {
    let (omega_t, omega_q_t, g_t) = effective_params(p)?;
    let e_plus = (n as f64 - 0.5) * omega_t;
    let e_minus = 0.5 * (omega_q_t - omega_t);
    Ok((e_plus, e_minus, g_t))
}

/// The 2x2 Hamiltonian of excitation sector `n >= 1` on the ordered basis
/// `(|n-1, up>, |n, down>)`.
pub fn block_hamiltonian(p: &ModelParams, n: u32) -> Result<[[Complex64; 2]; 2]> {
    if n == 0 {
        return Err(Error::InvalidLevel(
            "n = 0 sector is one-dimensional and has no 2x2 block".into(),
        ));
    }
    let (omega_t, omega_q_t, g_t) = effective_params(p)?;
    let nf = n as f64;
    let off = g_t * nf.sqrt();
    Ok([
        [(nf - 1.0) * omega_t + 0.5 * omega_q_t, off],
        [off, nf * omega_t - 0.5 * omega_q_t],
    ])
}

/// Radicand `e-^2 + n g~^2` whose vanishing marks eigenvalue and eigenvector
/// coalescence of sector `n`.  Real for both special models.
pub fn discriminant(p: &ModelParams, n: u32) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidLevel("discriminant requires n >= 1".into()));
    }
    let (_, e_minus, g_t) = block_es(p, n)?;
    Ok(e_minus * e_minus + (n as f64) * g_t * g_t)
}

/// Closed-form eigensolution of one level.
///
/// For `n >= 1` the energy is `e+ + eta sqrt(e-^2 + n g~^2)` with amplitudes
/// `c_up = e- + eta sqrt(...)`, `c_down = g~ sqrt(n)`.  At an exceptional
/// point both branches return the same coalesced solution.  The `n = 0` level
/// is `|0, down>` with energy `-W~/2`.
pub fn eigen_closed(p: &ModelParams, lvl: LevelIndex) -> Result<EigenSolution> {
    if lvl.n == 0 {
        let (_, omega_q_t, _) = effective_params(p)?;
        return Ok(EigenSolution {
            energy: -0.5 * omega_q_t,
            c_up: Complex64::new(0.0, 0.0),
            c_down: Complex64::new(1.0, 0.0),
            norm: 1.0,
        });
    }
    let (e_plus, e_minus, g_t) = block_es(p, lvl.n)?;
    let root = sqrt_principal(e_minus * e_minus + (lvl.n as f64) * g_t * g_t);
    let signed = lvl.branch.sign() * root;
    let c_up = e_minus + signed;
    let c_down = g_t * (lvl.n as f64).sqrt();
    Ok(EigenSolution {
        energy: e_plus + signed,
        c_up,
        c_down,
        norm: c_up.norm_sqr() + c_down.norm_sqr(),
    })
}

/// All levels `n = 0 ..= n_max`, both branches for `n >= 1`, ordered by
/// ascending `n` with the minus branch first.
pub fn spectrum(p: &ModelParams, n_max: u32) -> Result<Vec<(LevelIndex, Complex64)>> {
    let mut out = Vec::with_capacity(2 * n_max as usize + 1);
    let lvl0 = LevelIndex::new(0, Branch::Minus);
    out.push((lvl0, eigen_closed(p, lvl0)?.energy));
    for n in 1..=n_max {
        for branch in [Branch::Minus, Branch::Plus] {
            let lvl = LevelIndex::new(n, branch);
            out.push((lvl, eigen_closed(p, lvl)?.energy));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn effective_params_hermitian_limit() {
        let p = ModelParams::generic(1.0, 0.0, 1.0, 0.0, 0.5, 0.0).unwrap();
        let (w, wq, g) = effective_params(&p).unwrap();
        assert_eq!(w, c(1.0, 0.0));
        assert_eq!(wq, c(1.0, 0.0));
        assert_eq!(g, c(0.5, 0.0));
    }

    #[test]
    fn effective_params_special_models() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.2).unwrap();
        let (w, wq, g) = effective_params(&p).unwrap();
        assert_eq!(w, c(0.1, 0.0));
        assert_eq!(wq, c(0.1, -0.5));
        assert_eq!(g, c(0.2, 0.0));

        let p = ModelParams::coupling_decay(0.1, 1.0, 0.1).unwrap();
        let (w, wq, g) = effective_params(&p).unwrap();
        assert_eq!(w, c(0.1, 0.0));
        assert_eq!(wq, c(1.0, 0.0));
        assert_eq!(g, c(0.0, 0.1));
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(ModelParams::generic(0.0, 0.0, 1.0, 0.0, 0.1, 0.0).is_err());
        assert!(ModelParams::generic(1.0, 0.0, 1.0, -0.1, 0.1, 0.0).is_err());
        let mut p = ModelParams::qubit_decay(1.0, 0.1, 0.1).unwrap();
        p.omega_q = 2.0;
        assert!(p.validate().is_err());
        let mut p = ModelParams::coupling_decay(1.0, 1.0, 0.1).unwrap();
        p.g = 0.3;
        assert!(p.validate().is_err());
    }

    #[test]
    fn block_decoupled_resonant() {
        let p = ModelParams::generic(1.0, 0.0, 1.0, 0.0, 0.0, 0.0).unwrap();
        let h = block_hamiltonian(&p, 1).unwrap();
        assert_eq!(h[0][0], c(0.5, 0.0));
        assert_eq!(h[0][1], c(0.0, 0.0));
        assert_eq!(h[1][0], c(0.0, 0.0));
        assert_eq!(h[1][1], c(0.5, 0.0));
    }

    #[test]
    fn block_trace_identity() {
        let p = ModelParams::generic(0.7, 0.2, 1.3, 0.4, 0.6, 0.3).unwrap();
        for n in 1..6u32 {
            let h = block_hamiltonian(&p, n).unwrap();
            let tr = h[0][0] + h[1][1];
            let (omega_t, _, _) = effective_params(&p).unwrap();
            let expect = (2.0 * n as f64 - 1.0) * omega_t;
            assert_abs_diff_eq!(tr.re, expect.re, epsilon = 1e-14);
            assert_abs_diff_eq!(tr.im, expect.im, epsilon = 1e-14);
        }
    }

    #[test]
    fn block_rejects_n_zero() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.2).unwrap();
        assert!(block_hamiltonian(&p, 0).is_err());
        assert!(discriminant(&p, 0).is_err());
    }

    // 2x2 eigensolve oracle: characteristic-polynomial roots of the block.
    fn block_eigs(h: [[Complex64; 2]; 2]) -> (Complex64, Complex64) {
        let tr = h[0][0] + h[1][1];
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        let root = (0.25 * tr * tr - det).sqrt();
        (0.5 * tr - root, 0.5 * tr + root)
    }

    #[test]
    fn closed_energies_match_block_eigensolve() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.2).unwrap();
        let (a, b) = block_eigs(block_hamiltonian(&p, 1).unwrap());
        let em = eigen_closed(&p, LevelIndex::new(1, Branch::Minus)).unwrap().energy;
        let ep = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap().energy;
        // match by nearest
        let d1 = (a - em).norm() + (b - ep).norm();
        let d2 = (a - ep).norm() + (b - em).norm();
        assert!(d1.min(d2) < 1e-12, "closed-form energies differ from 2x2 eigensolve");
    }

    #[test]
    fn decoupled_limit_state() {
        // g~ = 0, omega = 1, Omega = 2, n = 1, plus branch: E = Omega/2, |0, up>.
        let p = ModelParams::generic(1.0, 0.0, 2.0, 0.0, 0.0, 0.0).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap();
        assert_abs_diff_eq!(s.energy.re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.energy.im, 0.0, epsilon = 1e-14);
        assert_eq!(s.c_down, c(0.0, 0.0));
        assert!(s.c_up.norm() > 0.0);
    }

    #[test]
    fn symmetric_phase_amplitudes() {
        // |c_up|^2 = n g^2 = |c_down|^2, norm = 2 n g^2 in the PT-symmetric phase.
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.3).unwrap();
        for branch in [Branch::Plus, Branch::Minus] {
            let s = eigen_closed(&p, LevelIndex::new(1, branch)).unwrap();
            assert_abs_diff_eq!(s.c_up.norm_sqr(), 0.09, epsilon = 1e-14);
            assert_abs_diff_eq!(s.c_down.norm_sqr(), 0.09, epsilon = 1e-14);
            assert_abs_diff_eq!(s.norm, 0.18, epsilon = 1e-14);
        }
    }

    #[test]
    fn coalesced_solution_at_ep() {
        // Gamma = (Omega - omega)/(2 sqrt(n)) puts sector n at its exceptional point.
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.45).unwrap();
        let sp = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap();
        let sm = eigen_closed(&p, LevelIndex::new(1, Branch::Minus)).unwrap();
        assert_abs_diff_eq!(sp.energy.re, 0.05, epsilon = 1e-12);
        assert_abs_diff_eq!(sp.energy.im, 0.0, epsilon = 1e-12);
        assert_eq!(sp.energy, sm.energy);
        assert_eq!(sp.c_up, sm.c_up);
    }

    #[test]
    fn n_zero_special_level() {
        let p = ModelParams::coupling_decay(0.5, 1.2, 0.3).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(0, Branch::Plus)).unwrap();
        assert_eq!(s.energy, c(-0.6, 0.0));
        assert_eq!(s.c_up, c(0.0, 0.0));
        assert_eq!(s.c_down, c(1.0, 0.0));
        assert_eq!(s.norm, 1.0);
        let sp = spectrum(&p, 0).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].1, c(-0.6, 0.0));
    }

    #[test]
    fn spectrum_ordering_and_reality() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.3).unwrap(); // symmetric phase for all n
        let sp = spectrum(&p, 4).unwrap();
        assert_eq!(sp.len(), 9);
        for (i, (lvl, e)) in sp.iter().enumerate() {
            if i > 0 {
                assert!(lvl.n >= sp[i - 1].0.n);
            }
            // the n = 0 singlet -Omega/2 + i gamma/2 is complex in every phase
            if lvl.n > 0 {
                assert!(e.im.abs() < 1e-14, "PT-symmetric phase spectrum must be real");
            }
        }
        // minus branch precedes plus within each n
        assert_eq!(sp[1].0.branch, Branch::Minus);
        assert_eq!(sp[2].0.branch, Branch::Plus);
    }

    #[test]
    fn coupling_decay_symmetric_phase_re_degenerate() {
        // anti-PT-symmetric phase: Re E equals (n - 1/2) omega on both branches.
        let p = ModelParams::coupling_decay(0.1, 0.3, 0.5).unwrap();
        for n in 1..4u32 {
            for branch in [Branch::Plus, Branch::Minus] {
                let e = eigen_closed(&p, LevelIndex::new(n, branch)).unwrap().energy;
                assert_abs_diff_eq!(e.re, (n as f64 - 0.5) * 0.1, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn discriminant_special_forms() {
        // n g^2 - gamma^2/4 = 0 at g = gamma/(2 sqrt(n))
        let p = ModelParams::qubit_decay(1.0, 0.5, 0.25).unwrap();
        let d = discriminant(&p, 1).unwrap();
        assert_abs_diff_eq!(d.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.im, 0.0, epsilon = 1e-15);
        // (Omega - omega)^2/4 - n Gamma^2 = 0 at Gamma = (Omega - omega)/(2 sqrt(n))
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.45).unwrap();
        let d = discriminant(&p, 1).unwrap();
        assert_abs_diff_eq!(d.re, 0.0, epsilon = 1e-15);
        // Hermitian limit is a sum of squares
        let p = ModelParams::generic(0.7, 0.0, 1.1, 0.0, 0.4, 0.0).unwrap();
        let d = discriminant(&p, 2).unwrap();
        assert_abs_diff_eq!(d.re, 0.25 * 0.4f64.powi(2) + 2.0 * 0.16, epsilon = 1e-14);
        assert!(d.re >= 0.0);
    }

    #[test]
    fn sqrt_principal_branch() {
        let s = sqrt_principal(c(-4.0, 0.0));
        assert_eq!(s, c(0.0, 2.0));
        let s = sqrt_principal(c(-4.0, -0.0));
        assert_eq!(s, c(0.0, 2.0));
        let s = sqrt_principal(c(4.0, 0.0));
        assert_eq!(s, c(2.0, 0.0));
        let s = sqrt_principal(c(0.0, 2.0));
        assert!(s.re > 0.0 && s.im > 0.0);
        let s = sqrt_principal(c(0.0, -2.0));
        assert!(s.re > 0.0 && s.im < 0.0);
    }

    #[test]
    fn with_param_detuning_moves_omega() {
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.2).unwrap();
        let q = p.with_param(ParamName::Detuning, 0.4).unwrap();
        assert_abs_diff_eq!(q.omega_q - q.omega, 0.4, epsilon = 1e-15);
        assert_eq!(q.omega_q, 1.0);
    }
}
