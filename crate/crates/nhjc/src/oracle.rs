//! Independent brute-force verification of the closed forms.
//!
//! The Hamiltonian is assembled as a dense matrix on the truncated product
//! basis `|n> (x) {up, down}` and handed to a general complex eigensolver.
//! Because the excitation number is conserved, the truncation is exact for
//! every sector `n <= n_max`; agreement with the closed-form spectrum is the
//! test, not a convergence statement.

use ndarray::{Array1, Array2, ArrayView1};
use ndarray_linalg::Eig;
use num_complex::Complex64;

use crate::model::{effective_params, eigen_closed, LevelIndex, ModelParams, ParamName};
use crate::qfi::{current_lambda, lambda_ep, QfiMethod, QfiResult};
use crate::{Error, Result};

/// Dense truncated eigenproblem.  Basis index is `2 n + s` with `s = 0` for
/// `up` and `s = 1` for `down` on the `sx` eigenbasis.
#[derive(Debug, Clone)]
pub struct DenseProblem {
    pub n_max: u32,
    pub matrix: Array2<Complex64>,
}

impl DenseProblem {
    pub fn dimension(&self) -> usize {
        2 * (self.n_max as usize + 1)
    }
}

/// Assemble `H = w~ a'a + (W~/2) sx + g~ (s- a' + s+ a)` on the truncated
/// Fock basis.
pub fn build_dense(p: &ModelParams, n_max: u32) -> Result<DenseProblem> {
    if n_max < 1 {
        return Err(Error::InvalidLevel("dense problem requires n_max >= 1".into()));
    }
    let (omega_t, omega_q_t, g_t) = effective_params(p)?;
    let dim = 2 * (n_max as usize + 1);
    let mut h = Array2::<Complex64>::zeros((dim, dim));
    for n in 0..=n_max as usize {
        // diagonal: photon energy and qubit splitting on the sx basis
        h[[2 * n, 2 * n]] = omega_t * n as f64 + 0.5 * omega_q_t;
        h[[2 * n + 1, 2 * n + 1]] = omega_t * n as f64 - 0.5 * omega_q_t;
        // coupling |n-1, up> <-> |n, down> with amplitude g~ sqrt(n)
        if n >= 1 {
            let amp = g_t * (n as f64).sqrt();
            h[[2 * (n - 1), 2 * n + 1]] = amp;
            h[[2 * n + 1, 2 * (n - 1)]] = amp;
        }
    }
    Ok(DenseProblem { n_max, matrix: h })
}

/// Full complex eigendecomposition.  `vectors` holds right eigenvectors as
/// columns, in the order of `values`.
#[derive(Debug, Clone)]
pub struct DenseEigen {
    pub values: Array1<Complex64>,
    pub vectors: Array2<Complex64>,
}

pub fn dense_eigen(problem: &DenseProblem) -> Result<DenseEigen> {
    if problem.dimension() > 4096 {
        return Err(Error::InvalidLevel(format!(
            "dense dimension {} exceeds 4096",
            problem.dimension()
        )));
    }
    let (values, vectors) = problem
        .matrix
        .eig()
        .map_err(|e| Error::Eigensolver(e.to_string()))?;
    Ok(DenseEigen { values, vectors })
}

/// Weight of an eigenvector inside excitation sector `n` (the span of
/// `|n-1, up>` and `|n, down>`), relative to its total weight.
fn block_weight(vec: ArrayView1<Complex64>, n: u32) -> f64 {
    let total: f64 = vec.iter().map(|c| c.norm_sqr()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let idx_up = 2 * (n as usize - 1);
    let idx_down = 2 * n as usize + 1;
    (vec[idx_up].norm_sqr() + vec[idx_down].norm_sqr()) / total
}

/// Column indices of the dense eigenpairs living in sector `n >= 1`.
pub fn sector_columns(eigen: &DenseEigen, n: u32) -> Vec<usize> {
    (0..eigen.values.len())
        .filter(|&j| block_weight(eigen.vectors.column(j), n) > 0.5)
        .collect()
}

/// The in-sector amplitude pair `(c_up, c_down)` of a dense eigenvector.
pub fn sector_amplitudes(vec: ArrayView1<Complex64>, n: u32) -> (Complex64, Complex64) {
    (vec[2 * (n as usize - 1)], vec[2 * n as usize + 1])
}

/// Rotate a vector so its largest-modulus component is real positive.
pub fn phase_fix(vec: &mut [Complex64]) {
    let mut best = 0usize;
    for (i, c) in vec.iter().enumerate() {
        if c.norm_sqr() > vec[best].norm_sqr() {
            best = i;
        }
    }
    let m = vec[best].norm();
    if m > 0.0 {
        let phase = vec[best].conj() / m;
        for c in vec.iter_mut() {
            *c *= phase;
        }
    }
}

/// Dense eigenpair matched to one closed-form level by nearest eigenvalue
/// among the sector's columns.  Errors when the two candidates are equally
/// close (degenerate sector, matching ambiguous).
pub fn match_level(
    eigen: &DenseEigen,
    p: &ModelParams,
    lvl: LevelIndex,
) -> Result<(Complex64, Array1<Complex64>)> {
    if lvl.n == 0 {
        // the 1x1 sector is the column supported on |0, down> alone
        let target = eigen_closed(p, lvl)?.energy;
        let j = (0..eigen.values.len())
            .min_by(|&a, &b| {
                let da = (eigen.values[a] - target).norm();
                let db = (eigen.values[b] - target).norm();
                da.total_cmp(&db)
            })
            .expect("nonempty spectrum");
        return Ok((eigen.values[j], eigen.vectors.column(j).to_owned()));
    }
    let target = eigen_closed(p, lvl)?.energy;
    let cols = sector_columns(eigen, lvl.n);
    if cols.is_empty() {
        return Err(Error::AmbiguousMatch(format!(
            "no dense eigenvector is supported in sector n = {}",
            lvl.n
        )));
    }
    let mut dists: Vec<(f64, usize)> = cols
        .iter()
        .map(|&j| ((eigen.values[j] - target).norm(), j))
        .collect();
    dists.sort_by(|a, b| a.0.total_cmp(&b.0));
    let scale = eigen.values.iter().map(|v| v.norm()).fold(1.0, f64::max);
    if dists.len() > 1 && (dists[1].0 - dists[0].0) < 1e-12 * scale {
        return Err(Error::AmbiguousMatch(format!(
            "sector n = {} eigenvalues are degenerate within 1e-12 (distance gap {:.3e})",
            lvl.n,
            dists[1].0 - dists[0].0
        )));
    }
    let j = dists[0].1;
    Ok((eigen.values[j], eigen.vectors.column(j).to_owned()))
}

/// Overlap-based fidelity susceptibility with states taken from the dense
/// eigensolver instead of the closed form.  Same step policy and Richardson
/// extrapolation as the closed-form numeric QFI, so the two pipelines differ
/// only in where the states come from.
pub fn fidelity_susceptibility(
    p: &ModelParams,
    lvl: LevelIndex,
    name: ParamName,
    delta: Option<f64>,
) -> Result<QfiResult> {
    let lambda = current_lambda(p, name)?;
    let lep = lambda_ep(p, lvl.n.max(1), name)?;
    if lvl.n == 0 {
        return Ok(QfiResult {
            value: 0.0,
            parameter: name,
            lambda,
            lambda_ep: lep,
            method: QfiMethod::NumericOverlap,
        });
    }
    let scale = lambda.max(lep);
    let d = delta.unwrap_or(1e-5 * scale);
    if d < 1e3 * f64::EPSILON * scale {
        return Err(Error::StepTooSmall(d));
    }
    if (lambda - lep).abs() <= d {
        return Err(Error::StepCrossesEp {
            step: d,
            lambda_ep: lep,
        });
    }
    let signed = if lambda < lep && lambda + d >= lep { -d } else { d };

    let amplitudes = |value: f64| -> Result<(Complex64, Complex64)> {
        let q = match name {
            ParamName::Omega | ParamName::Detuning => {
                let sign = if p.omega_q - p.omega < 0.0 { -1.0 } else { 1.0 };
                p.with_param(ParamName::Detuning, sign * value)?
            }
            _ => p.with_param(name, value)?,
        };
        let eig = dense_eigen(&build_dense(&q, lvl.n + 2)?)?;
        let (_, vec) = match_level(&eig, &q, lvl)?;
        let (cu, cd) = sector_amplitudes(vec.view(), lvl.n);
        let norm = (cu.norm_sqr() + cd.norm_sqr()).sqrt();
        if norm <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok((cu / norm, cd / norm))
    };
    let base = amplitudes(lambda)?;
    let est = |step: f64| -> Result<f64> {
        let moved = amplitudes(lambda + step)?;
        let cross = (base.0 * moved.1 - base.1 * moved.0).norm_sqr();
        let ov = (base.0.conj() * moved.0 + base.1.conj() * moved.1).norm();
        Ok(8.0 * (cross / (1.0 + ov)) / (step * step))
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
