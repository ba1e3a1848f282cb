//! Declarative parameter sweeps with deterministic, machine-readable output.
//!
//! A [`SweepSpec`] names a model, one or two swept parameters, a level
//! selection and a set of observables; [`run_sweep`] evaluates every
//! observable at every grid point (in parallel, order-preserving) and
//! [`emit`] serializes the rows as CSV or JSONL with 17-significant-digit
//! numbers, so identical specs produce byte-identical files regardless of
//! the worker count.  Built-in presets encode the standard figure recipes.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::model::{
    eigen_closed, Branch, LevelIndex, ModelKind, ModelParams, ParamName,
};
use crate::qfi::{current_lambda, lambda_ep, qfi_closed, qfi_numeric};
use crate::symmetry::{classify_phase, default_phase_tol, ep_locate, ptk_expectation, PhaseTag};
use crate::texture::{winding, Grid1D, Plane, Snapped};
use crate::{Error, Result};

/// Observables a sweep can evaluate.  QFI observables are taken with respect
/// to the first swept parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Observable {
    #[serde(rename = "ReE")]
    ReE,
    #[serde(rename = "ImE")]
    ImE,
    #[serde(rename = "PTK")]
    Ptk,
    #[serde(rename = "QFI_closed")]
    QfiClosed,
    #[serde(rename = "QFI_numeric")]
    QfiNumeric,
    #[serde(rename = "winding_zx")]
    WindingZx,
    #[serde(rename = "winding_yx")]
    WindingYx,
    #[serde(rename = "winding_zy")]
    WindingZy,
    #[serde(rename = "phase")]
    Phase,
    #[serde(rename = "EP_markers")]
    EpMarkers,
}

impl Observable {
    fn name(&self) -> &'static str {
        match self {
            Observable::ReE => "ReE",
            Observable::ImE => "ImE",
            Observable::Ptk => "PTK",
            Observable::QfiClosed => "QFI_closed",
            Observable::QfiNumeric => "QFI_numeric",
            Observable::WindingZx => "winding_zx",
            Observable::WindingYx => "winding_yx",
            Observable::WindingZy => "winding_zy",
            Observable::Phase => "phase",
            Observable::EpMarkers => "EP_markers",
        }
    }
}

/// One swept parameter with an inclusive linear range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub param: ParamName,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl AxisSpec {
    fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            return self.start;
        }
        self.start + (self.stop - self.start) * i as f64 / (self.count as f64 - 1.0)
    }
}

/// Fixed model parameters of a sweep, mirroring [`ModelParams`] field names.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub omega: f64,
    #[serde(default)]
    pub kappa: f64,
    #[serde(default, rename = "Omega")]
    pub omega_q: f64,
    #[serde(default)]
    pub gamma: f64,
    #[serde(default)]
    pub g: f64,
    #[serde(default, rename = "Gamma")]
    pub gamma_c: f64,
}

impl ModelSpec {
    pub fn params(&self) -> Result<ModelParams> {
        match self.kind {
            ModelKind::Generic => ModelParams::generic(
                self.omega,
                self.kappa,
                self.omega_q,
                self.gamma,
                self.g,
                self.gamma_c,
            ),
            ModelKind::QubitDecay => ModelParams::qubit_decay(self.omega, self.gamma, self.g),
            ModelKind::CouplingDecay => {
                ModelParams::coupling_decay(self.omega, self.omega_q, self.gamma_c)
            }
        }
    }
}

/// A declarative sweep: model, grid, level selection and observables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub model: ModelSpec,
    /// Excitation numbers to evaluate.
    pub levels: Vec<u32>,
    /// Branch labels to evaluate (ignored for `n = 0`).
    pub branches: Vec<Branch>,
    pub observables: Vec<Observable>,
    /// One or two swept parameters; the grid is row-major over (first, second).
    pub axes: Vec<AxisSpec>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(Error::InvalidSpec(format!(
                "need 1 or 2 axes, got {}",
                self.axes.len()
            )));
        }
        for a in &self.axes {
            if a.count < 2 {
                return Err(Error::InvalidSpec("axis count must be >= 2".into()));
            }
            if !a.start.is_finite() || !a.stop.is_finite() {
                return Err(Error::InvalidSpec("axis range must be finite".into()));
            }
        }
        if self.observables.is_empty() {
            return Err(Error::InvalidSpec("observables must be nonempty".into()));
        }
        if self.levels.is_empty() || self.branches.is_empty() {
            return Err(Error::InvalidSpec("levels and branches must be nonempty".into()));
        }
        self.model.params()?;
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: SweepSpec =
            toml::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// The expanded (n, branch) selection; `n = 0` appears once.
    fn level_selection(&self) -> Vec<LevelIndex> {
        let mut out = Vec::new();
        for &n in &self.levels {
            if n == 0 {
                out.push(LevelIndex::new(0, Branch::Minus));
            } else {
                for &b in &self.branches {
                    out.push(LevelIndex::new(n, b));
                }
            }
        }
        out
    }
}

/// One output row: grid point, level, observable, value, phase tag, status.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub swept_1: f64,
    pub swept_2: Option<f64>,
    pub n: Option<u32>,
    pub eta: Option<Branch>,
    pub observable: String,
    pub value_re: f64,
    pub value_im: Option<f64>,
    pub phase: String,
    pub status: String,
}

fn phase_text(p: &ModelParams, n: u32) -> String {
    if p.kind == ModelKind::Generic || n == 0 {
        return String::new();
    }
    match classify_phase(p, n, default_phase_tol(p, n)) {
        Ok(label) => label.tag.to_string(),
        Err(_) => String::new(),
    }
}

fn eval_observable(
    p: &ModelParams,
    lvl: LevelIndex,
    obs: Observable,
    qfi_param: ParamName,
) -> Result<(f64, Option<f64>, String)> {
    match obs {
        Observable::ReE => Ok((eigen_closed(p, lvl)?.energy.re, None, "ok".into())),
        Observable::ImE => Ok((eigen_closed(p, lvl)?.energy.im, None, "ok".into())),
        Observable::Ptk => {
            let v = ptk_expectation(&eigen_closed(p, lvl)?)?;
            Ok((v.re, Some(v.im), "ok".into()))
        }
        Observable::QfiClosed => {
            let lam = current_lambda(p, qfi_param)?;
            let lep = lambda_ep(p, lvl.n.max(1), qfi_param)?;
            Ok((qfi_closed(lam, lep)?, None, "ok".into()))
        }
        Observable::QfiNumeric => {
            let q = qfi_numeric(p, lvl, qfi_param, None)?;
            Ok((q.value, None, "ok".into()))
        }
        Observable::WindingZx | Observable::WindingYx | Observable::WindingZy => {
            let plane = match obs {
                Observable::WindingZx => Plane::Zx,
                Observable::WindingYx => Plane::Yx,
                _ => Plane::Zy,
            };
            let sol = eigen_closed(p, lvl)?;
            let w = winding(&sol, lvl.n, plane, Grid1D::default_for(lvl.n))?;
            let status = match w.snapped {
                Snapped::Half(_) => "ok".to_string(),
                Snapped::Unquantized => "unquantized".to_string(),
            };
            Ok((w.raw, None, status))
        }
        Observable::Phase => {
            let label = classify_phase(p, lvl.n.max(1), default_phase_tol(p, lvl.n.max(1)))?;
            let v = match label.tag {
                PhaseTag::Symmetric => 1.0,
                PhaseTag::Broken => -1.0,
                PhaseTag::AtEp => 0.0,
            };
            Ok((v, None, "ok".into()))
        }
        Observable::EpMarkers => unreachable!("EP markers are emitted separately"),
    }
}

/// Evaluate a sweep on `threads` workers (0 = rayon default).  Rows are
/// ordered lexicographically by (grid index, n, branch, observable); EP
/// marker rows follow, ordered by (second-axis index, n, value).
pub fn run_sweep(spec: &SweepSpec, threads: usize) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidSpec(e.to_string()))?;
    pool.install(|| run_sweep_inner(spec))
}

fn run_sweep_inner(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let base = spec.model.params()?;
    let axis1 = spec.axes[0];
    let axis2 = spec.axes.get(1).copied();
    let levels = spec.level_selection();
    let point_observables: Vec<Observable> = spec
        .observables
        .iter()
        .copied()
        .filter(|o| *o != Observable::EpMarkers)
        .collect();

    let n2 = axis2.map_or(1, |a| a.count);
    let grid: Vec<(usize, usize)> = (0..axis1.count)
        .flat_map(|i| (0..n2).map(move |j| (i, j)))
        .collect();

    let mut rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&(i, j)| {
            let v1 = axis1.value(i);
            let v2 = axis2.map(|a| a.value(j));
            let params = apply_axes(&base, axis1, v1, axis2, v2);
            let mut out = Vec::with_capacity(levels.len() * point_observables.len());
            for lvl in &levels {
                let (phase, eval) = match &params {
                    Ok(p) => (phase_text(p, lvl.n), Ok(p)),
                    Err(e) => (String::new(), Err(e)),
                };
                for obs in &point_observables {
                    let (value_re, value_im, status) = match eval {
                        Ok(p) => match eval_observable(p, *lvl, *obs, axis1.param) {
                            Ok(v) => v,
                            Err(e) => (f64::NAN, None, e.to_string()),
                        },
                        Err(e) => (f64::NAN, None, e.to_string()),
                    };
                    out.push(SweepRow {
                        swept_1: v1,
                        swept_2: v2,
                        n: Some(lvl.n),
                        eta: (lvl.n > 0).then_some(lvl.branch),
                        observable: obs.name().to_string(),
                        value_re,
                        value_im,
                        phase: phase.clone(),
                        status,
                    });
                }
            }
            out
        })
        .flatten_iter()
        .collect();

    if spec.observables.contains(&Observable::EpMarkers) {
        for j in 0..n2 {
            let v2 = axis2.map(|a| a.value(j));
            let params = apply_axes(&base, axis1, axis1.start, axis2, v2);
            for &n in &spec.levels {
                if n == 0 {
                    continue;
                }
                let marker = params
                    .as_ref()
                    .map_err(|e| Error::InvalidSpec(e.to_string()))
                    .and_then(|p| ep_locate(p, n, axis1.param));
                match marker {
                    Ok(ep) => {
                        for v in ep.values {
                            rows.push(SweepRow {
                                swept_1: v,
                                swept_2: v2,
                                n: Some(n),
                                eta: None,
                                observable: "EP_marker".to_string(),
                                value_re: v,
                                value_im: None,
                                phase: String::new(),
                                status: "ok".to_string(),
                            });
                        }
                    }
                    Err(e) => rows.push(SweepRow {
                        swept_1: f64::NAN,
                        swept_2: v2,
                        n: Some(n),
                        eta: None,
                        observable: "EP_marker".to_string(),
                        value_re: f64::NAN,
                        value_im: None,
                        phase: String::new(),
                        status: e.to_string(),
                    }),
                }
            }
        }
    }
    Ok(rows)
}

fn apply_axes(
    base: &ModelParams,
    axis1: AxisSpec,
    v1: f64,
    axis2: Option<AxisSpec>,
    v2: Option<f64>,
) -> Result<ModelParams> {
    let mut p = base.with_param(axis1.param, v1)?;
    if let (Some(a), Some(v)) = (axis2, v2) {
        p = p.with_param(a.param, v)?;
    }
    Ok(p)
}

/// Output format of [`emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            _ => Err(Error::InvalidSpec(format!("unknown format {s:?}"))),
        }
    }
}

/// 17-significant-digit decimal form; round-trips any f64.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub const CSV_HEADER: &str = "swept_1,swept_2,n,eta,observable,value_re,value_im,phase,status";

/// Serialize rows to a writer.  CSV columns are named exactly as the
/// [`SweepRow`] fields, complex values split into `_re`/`_im`.
pub fn emit<W: Write>(rows: &[SweepRow], format: OutputFormat, dest: &mut W) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(dest, "{CSV_HEADER}")?;
            for r in rows {
                writeln!(
                    dest,
                    "{},{},{},{},{},{},{},{},{}",
                    fmt_f64(r.swept_1),
                    r.swept_2.map(fmt_f64).unwrap_or_default(),
                    r.n.map(|n| n.to_string()).unwrap_or_default(),
                    r.eta.map(|b| b.to_string()).unwrap_or_default(),
                    r.observable,
                    fmt_f64(r.value_re),
                    r.value_im.map(fmt_f64).unwrap_or_default(),
                    r.phase,
                    r.status
                )?;
            }
        }
        OutputFormat::Jsonl => {
            for r in rows {
                let line = serde_json::json!({
                    "swept_1": fmt_f64(r.swept_1),
                    "swept_2": r.swept_2.map(fmt_f64),
                    "n": r.n,
                    "eta": r.eta.map(|b| b.to_string()),
                    "observable": r.observable,
                    "value_re": fmt_f64(r.value_re),
                    "value_im": r.value_im.map(fmt_f64),
                    "phase": r.phase,
                    "status": r.status,
                });
                writeln!(dest, "{line}")?;
            }
        }
    }
    Ok(())
}

/// [`emit`] to a file path, surfacing i/o errors with path context.
pub fn emit_to_path(rows: &[SweepRow], format: OutputFormat, path: &Path) -> Result<()> {
    let mut file = std::fs::File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    emit(rows, format, &mut file).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Hgamma coupling scale `g_s = sqrt(omega Omega) / 2` used by the figure
/// presets (with `Omega = 1`).
pub fn coupling_scale(omega: f64, omega_q: f64) -> f64 {
    (omega * omega_q).sqrt() / 2.0
}

fn model_qubit_decay(omega: f64, gamma: f64, g: f64) -> ModelSpec {
    ModelSpec {
        kind: ModelKind::QubitDecay,
        omega,
        kappa: 0.0,
        omega_q: omega,
        gamma,
        g,
        gamma_c: 0.0,
    }
}

fn model_coupling_decay(omega: f64, omega_q: f64, gamma_c: f64) -> ModelSpec {
    ModelSpec {
        kind: ModelKind::CouplingDecay,
        omega,
        kappa: 0.0,
        omega_q,
        gamma: 0.0,
        g: 0.0,
        gamma_c,
    }
}

fn axis(param: ParamName, start: f64, stop: f64, count: usize) -> AxisSpec {
    AxisSpec {
        param,
        start,
        stop,
        count,
    }
}

/// Named figure recipes.  Units: `Omega = 1`; the lossy-qubit model quotes
/// `omega = 0.1` and scales couplings by `g_s = sqrt(omega)/2`.
/// Each preset may expand to several labelled sweeps (one output file each).
pub fn preset(name: &str) -> Result<Vec<(String, SweepSpec)>> {
    let gs = coupling_scale(0.1, 1.0);
    let specs: Vec<(String, SweepSpec)> = match name {
        // Real part of the spectrum versus Gamma at omega = 0.1, n = 1..4.
        "fig1a" => vec![(
            "fig1a".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.0),
                levels: vec![1, 2, 3, 4],
                branches: vec![Branch::Minus, Branch::Plus],
                observables: vec![Observable::ReE, Observable::ImE, Observable::EpMarkers],
                axes: vec![axis(ParamName::GammaC, 0.0, 0.8, 201)],
            },
        )],
        // |<Pi_x K>| over the omega-Gamma plane at n = 1.
        "fig1f" => vec![(
            "fig1f".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.0),
                levels: vec![1],
                branches: vec![Branch::Plus],
                observables: vec![Observable::Ptk, Observable::Phase, Observable::EpMarkers],
                axes: vec![
                    axis(ParamName::GammaC, 0.0, 0.5, 101),
                    axis(ParamName::Omega, 0.02, 2.0, 100),
                ],
            },
        )],
        // QFI versus g at gamma = 0.5 (g in units of g_s on the axis grid).
        "fig2a" => vec![(
            "fig2a".into(),
            SweepSpec {
                model: model_qubit_decay(0.1, 0.5, 0.0),
                levels: vec![1],
                branches: vec![Branch::Minus, Branch::Plus],
                observables: vec![
                    Observable::QfiClosed,
                    Observable::QfiNumeric,
                    Observable::EpMarkers,
                ],
                axes: vec![axis(ParamName::G, 0.0, 2.0 * gs, 201)],
            },
        )],
        // QFI versus detuning at Gamma = 0.1.
        "fig2b" => vec![(
            "fig2b".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.1),
                levels: vec![1],
                branches: vec![Branch::Minus, Branch::Plus],
                observables: vec![
                    Observable::QfiClosed,
                    Observable::QfiNumeric,
                    Observable::EpMarkers,
                ],
                axes: vec![axis(ParamName::Detuning, 0.005, 0.9, 180)],
            },
        )],
        // Inverse-root QFI(gamma) over the gamma-g plane.
        "fig2c" => vec![(
            "fig2c".into(),
            SweepSpec {
                model: model_qubit_decay(0.1, 0.0, 0.0),
                levels: vec![1],
                branches: vec![Branch::Plus],
                observables: vec![Observable::QfiClosed, Observable::EpMarkers],
                axes: vec![
                    axis(ParamName::Gamma, 0.0, 1.0, 101),
                    axis(ParamName::G, 0.005, 0.5, 100),
                ],
            },
        )],
        // Inverse-root QFI(Gamma) over the omega-Gamma plane.
        "fig2d" => vec![(
            "fig2d".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.0),
                levels: vec![1],
                branches: vec![Branch::Plus],
                observables: vec![Observable::QfiClosed, Observable::EpMarkers],
                axes: vec![
                    axis(ParamName::GammaC, 0.0, 0.5, 101),
                    axis(ParamName::Omega, 0.02, 2.0, 100),
                ],
            },
        )],
        // Scaling collapse: one sweep per parameter kind and level.
        "fig2e" => {
            let mut out = Vec::new();
            for n in [1u32, 2, 3] {
                out.push((
                    format!("fig2e_gamma_n{n}"),
                    SweepSpec {
                        model: model_qubit_decay(0.1, 0.0, 0.3),
                        levels: vec![n],
                        branches: vec![Branch::Minus, Branch::Plus],
                        observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                        axes: vec![axis(ParamName::Gamma, 0.01, 1.2, 120)],
                    },
                ));
                out.push((
                    format!("fig2e_g_n{n}"),
                    SweepSpec {
                        model: model_qubit_decay(0.1, 0.5, 0.0),
                        levels: vec![n],
                        branches: vec![Branch::Minus, Branch::Plus],
                        observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                        axes: vec![axis(ParamName::G, 0.005, 0.6, 120)],
                    },
                ));
                out.push((
                    format!("fig2e_Gamma_n{n}"),
                    SweepSpec {
                        model: model_coupling_decay(0.1, 1.0, 0.0),
                        levels: vec![n],
                        branches: vec![Branch::Minus, Branch::Plus],
                        observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                        axes: vec![axis(ParamName::GammaC, 0.005, 0.9, 120)],
                    },
                ));
                out.push((
                    format!("fig2e_detuning_n{n}"),
                    SweepSpec {
                        model: model_coupling_decay(0.1, 1.0, 0.1),
                        levels: vec![n],
                        branches: vec![Branch::Minus, Branch::Plus],
                        observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                        axes: vec![axis(ParamName::Detuning, 0.005, 0.9, 120)],
                    },
                ));
            }
            out
        }
        // Near-EP window for the critical-exponent fit, both sides.
        "fig2f" => vec![
            (
                "fig2f_below".into(),
                SweepSpec {
                    model: model_qubit_decay(0.1, 0.0, 0.3),
                    levels: vec![1],
                    branches: vec![Branch::Minus, Branch::Plus],
                    observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                    axes: vec![axis(ParamName::Gamma, 0.6 * (1.0 - 1e-2), 0.6 * (1.0 - 1e-4), 60)],
                },
            ),
            (
                "fig2f_above".into(),
                SweepSpec {
                    model: model_qubit_decay(0.1, 0.0, 0.3),
                    levels: vec![1],
                    branches: vec![Branch::Minus, Branch::Plus],
                    observables: vec![Observable::QfiClosed, Observable::QfiNumeric],
                    axes: vec![axis(ParamName::Gamma, 0.6 * (1.0 + 1e-4), 0.6 * (1.0 + 1e-2), 60)],
                },
            ),
        ],
        // Winding numbers versus gamma at g = 1.0 g_s.
        "fig3c" => vec![(
            "fig3c".into(),
            SweepSpec {
                model: model_qubit_decay(0.1, 0.0, gs),
                levels: vec![1],
                branches: vec![Branch::Minus, Branch::Plus],
                observables: vec![
                    Observable::WindingZx,
                    Observable::WindingYx,
                    Observable::WindingZy,
                    Observable::Phase,
                    Observable::EpMarkers,
                ],
                axes: vec![axis(ParamName::Gamma, 0.0, 1.0, 101)],
            },
        )],
        // zx winding over the gamma-g plane.
        "fig3d" => vec![(
            "fig3d".into(),
            SweepSpec {
                model: model_qubit_decay(0.1, 0.0, 0.0),
                levels: vec![1],
                branches: vec![Branch::Plus],
                observables: vec![Observable::WindingZx, Observable::Phase, Observable::EpMarkers],
                axes: vec![
                    axis(ParamName::Gamma, 0.0, 1.0, 41),
                    axis(ParamName::G, 0.01, 0.5, 41),
                ],
            },
        )],
        // Winding numbers versus omega at Gamma = 0.2.
        "fig3e" => vec![(
            "fig3e".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.2),
                levels: vec![1],
                branches: vec![Branch::Minus, Branch::Plus],
                observables: vec![
                    Observable::WindingZx,
                    Observable::WindingYx,
                    Observable::WindingZy,
                    Observable::Phase,
                    Observable::EpMarkers,
                ],
                axes: vec![axis(ParamName::Omega, 0.05, 1.95, 96)],
            },
        )],
        // zx winding over the omega-Gamma plane.
        "fig3f" => vec![(
            "fig3f".into(),
            SweepSpec {
                model: model_coupling_decay(0.1, 1.0, 0.0),
                levels: vec![1],
                branches: vec![Branch::Plus],
                observables: vec![Observable::WindingZx, Observable::Phase, Observable::EpMarkers],
                axes: vec![
                    axis(ParamName::GammaC, 0.01, 0.5, 41),
                    axis(ParamName::Omega, 0.05, 1.95, 40),
                ],
            },
        )],
        _ => {
            return Err(Error::InvalidSpec(format!(
                "unknown preset {name:?}; available: fig1a fig1f fig2a fig2b fig2c fig2d fig2e fig2f fig3c fig3d fig3e fig3f"
            )))
        }
    };
    Ok(specs)
}
