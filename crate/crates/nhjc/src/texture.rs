//! Real-space spinor wavefunctions, spin textures and winding numbers.
//!
//! The photon state `|n>` is represented by the harmonic-oscillator
//! eigenfunction `phi_n(x)`, so each eigenstate becomes a two-component
//! spinor on the `sz` basis,
//!
//! ```text
//! psi_pm(x) = [c_up phi_{n-1}(x) +- c_down phi_n(x)] / sqrt(2 N),
//! ```
//!
//! whose local spin expectations trace a planar curve as `x` runs along the
//! line.  The winding number of that curve distinguishes the symmetric and
//! broken phases.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::model::EigenSolution;
use crate::{Error, Result};

/// Hard stability bound for the oscillator recurrence.
pub const MAX_OSCILLATOR_N: u32 = 200;

/// Relative magnitude below which a texture point is excluded from angle
/// accumulation (wavefunction nodes, Gaussian tails).
const NEAR_ZERO_REL: f64 = 1e-9;

/// Uniform symmetric-friendly grid; `count` is odd so `x = 0` is a node.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub count: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, count: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "need x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if count < 3 || count.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "count must be odd and >= 3, got {count}"
            )));
        }
        Ok(Grid1D {
            x_min,
            x_max,
            count,
        })
    }

    /// Default span for sector `n`: covers the oscillator support with
    /// Gaussian tails below 1e-12.
    pub fn default_for(n: u32) -> Self {
        let half = (2.0 * n as f64 + 1.0).sqrt() + 6.0;
        Grid1D {
            x_min: -half,
            x_max: half,
            count: 4097,
        }
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.count as f64 - 1.0)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (0..self.count).map(move |i| self.x_min + h * i as f64)
    }

    /// Same span, grid spacing halved (count stays odd).
    pub fn refined(&self) -> Self {
        Grid1D {
            x_min: self.x_min,
            x_max: self.x_max,
            count: 2 * self.count - 1,
        }
    }
}

/// Normalized harmonic-oscillator eigenfunction `phi_n(x)` via the stable
/// three-term recurrence
/// `phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1}`.
pub fn oscillator_fn(n: u32, x: f64) -> Result<f64> {
    if n > MAX_OSCILLATOR_N {
        return Err(Error::InvalidLevel(format!(
            "oscillator_fn supports n <= {MAX_OSCILLATOR_N}, got {n}"
        )));
    }
    let mut prev = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2f64.sqrt() * x * prev;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The two `sz`-basis spinor components of a level at position `x`.
///
/// `n = 0` is the pure `|0, down>` spinor `(phi_0, -phi_0)/2`.
pub fn spinor_z(sol: &EigenSolution, n: u32, x: f64) -> Result<(Complex64, Complex64)> {
    if sol.norm <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    if n == 0 {
        let a = oscillator_fn(0, x)? / 2f64.sqrt();
        return Ok((Complex64::new(a, 0.0), Complex64::new(-a, 0.0)));
    }
    let scale = 1.0 / (2.0 * sol.norm).sqrt();
    let a = sol.c_up * oscillator_fn(n - 1, x)?;
    let b = sol.c_down * oscillator_fn(n, x)?;
    Ok(((a + b) * scale, (a - b) * scale))
}

/// Local spin expectations and weight at one position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TextureSample {
    pub x: f64,
    pub s_x: f64,
    pub s_y: f64,
    pub s_z: f64,
    /// Local weight `|psi_+|^2 + |psi_-|^2`; the spin vector length equals it
    /// pointwise (spinor purity).
    pub rho: f64,
}

/// Spin texture of a level over a grid.
pub fn texture(sol: &EigenSolution, n: u32, grid: Grid1D) -> Result<Vec<TextureSample>> {
    grid.points()
        .map(|x| {
            let (up, down) = spinor_z(sol, n, x)?;
            let s_z = up.norm_sqr() - down.norm_sqr();
            let s_y = (Complex64::i() * (down.conj() * up - up.conj() * down)).re;
            // sx texture through the rotated components (psi+ +- psi-)/sqrt(2)
            let s_x = 2.0 * (up.conj() * down).re;
            Ok(TextureSample {
                x,
                s_x,
                s_y,
                s_z,
                rho: up.norm_sqr() + down.norm_sqr(),
            })
        })
        .collect()
}

/// Plane of the two spin components whose curve is tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Plane {
    Zx,
    Yx,
    Zy,
}

impl Plane {
    fn components(&self, s: &TextureSample) -> (f64, f64) {
        match self {
            Plane::Zx => (s.s_z, s.s_x),
            Plane::Yx => (s.s_y, s.s_x),
            Plane::Zy => (s.s_z, s.s_y),
        }
    }
}

impl std::fmt::Display for Plane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Plane::Zx => "zx",
            Plane::Yx => "yx",
            Plane::Zy => "zy",
        })
    }
}

impl std::str::FromStr for Plane {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zx" => Ok(Plane::Zx),
            "yx" => Ok(Plane::Yx),
            "zy" => Ok(Plane::Zy),
            _ => Err(Error::InvalidParams(format!("unknown plane {s:?}"))),
        }
    }
}

/// Snapped winding value: a half-integer multiple, or unquantized when the
/// raw value does not settle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Snapped {
    /// `half / 2` turns.
    Half(i32),
    Unquantized,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindingResult {
    pub plane: Plane,
    /// Accumulated angle of the planar spin vector along the line, in turns.
    pub raw: f64,
    pub snapped: Snapped,
}

/// Accumulated planar angle, in turns, over one grid.
///
/// Points whose planar magnitude is below `1e-9` of the maximum are skipped.
/// A step whose direction reverses (negative dot product of consecutive unit
/// vectors) is a passage of the curve through the origin and contributes no
/// rotation.  The endpoint directions are axis-aligned in the limit of a
/// wide grid, so the first and last angles are snapped to the nearest
/// quarter turn; the two corrections cancel identically when the endpoint
/// directions are merely (anti)parallel rather than axis-aligned.
fn winding_raw(samples: &[TextureSample], plane: Plane) -> f64 {
    let mags: Vec<f64> = samples
        .iter()
        .map(|s| {
            let (a, b) = plane.components(s);
            a.hypot(b)
        })
        .collect();
    let max_mag = mags.iter().cloned().fold(0.0, f64::max);
    if max_mag <= 0.0 {
        return 0.0;
    }
    let cutoff = NEAR_ZERO_REL * max_mag;
    let units: Vec<(f64, f64)> = samples
        .iter()
        .zip(&mags)
        .filter(|(_, m)| **m >= cutoff)
        .map(|(s, m)| {
            let (a, b) = plane.components(s);
            (a / m, b / m)
        })
        .collect();
    if units.len() < 2 {
        return 0.0;
    }
    let mut total = 0.0;
    for w in units.windows(2) {
        let (ax, ay) = w[0];
        let (bx, by) = w[1];
        let cross = ax * by - ay * bx;
        let dot = ax * bx + ay * by;
        if dot >= 0.0 {
            total += cross.clamp(-1.0, 1.0).asin();
        }
        // dot < 0: reversal through the origin, no rotation
    }
    let quarter = std::f64::consts::FRAC_PI_2;
    let theta_first = units[0].1.atan2(units[0].0);
    let theta_last = units[units.len() - 1].1.atan2(units[units.len() - 1].0);
    let snap_first = (theta_first / quarter).round() * quarter;
    let snap_last = (theta_last / quarter).round() * quarter;
    total += (theta_first - snap_first) + (snap_last - theta_last);
    total / std::f64::consts::TAU
}

/// Winding number of a level's spin curve in one plane.
///
/// The raw value is taken on the twice-refined grid; if two successive grid
/// refinements move it by more than `1e-3`, or it is not within `1e-3` of a
/// half-integer, the result is marked unquantized.
pub fn winding(sol: &EigenSolution, n: u32, plane: Plane, grid: Grid1D) -> Result<WindingResult> {
    let mut raws = [0.0f64; 3];
    let mut g = grid;
    for raw in raws.iter_mut() {
        *raw = winding_raw(&texture(sol, n, g)?, plane);
        g = g.refined();
    }
    let raw = raws[2];
    let stable = (raws[0] - raws[2]).abs() < 1e-3 && (raws[1] - raws[2]).abs() < 1e-3;
    let half = (2.0 * raw).round();
    let snapped = if stable && (raw - half / 2.0).abs() < 1e-3 {
        Snapped::Half(half as i32)
    } else {
        Snapped::Unquantized
    };
    Ok(WindingResult { plane, raw, snapped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{eigen_closed, Branch, LevelIndex, ModelParams};
    use approx::assert_abs_diff_eq;

    #[test]
    fn oscillator_values_at_origin() {
        assert_abs_diff_eq!(
            oscillator_fn(0, 0.0).unwrap(),
            std::f64::consts::PI.powf(-0.25),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(oscillator_fn(1, 0.0).unwrap(), 0.0, epsilon = 1e-300);
        assert!(oscillator_fn(MAX_OSCILLATOR_N + 1, 0.0).is_err());
    }

    // trapezoid quadrature oracle on [-12, 12]
    fn quad<F: Fn(f64) -> f64>(f: F) -> f64 {
        let m = 4001;
        let h = 24.0 / (m as f64 - 1.0);
        let mut acc = 0.0;
        for i in 0..m {
            let x = -12.0 + h * i as f64;
            let w = if i == 0 || i == m - 1 { 0.5 } else { 1.0 };
            acc += w * f(x);
        }
        acc * h
    }

    #[test]
    fn oscillator_orthonormality_by_quadrature() {
        for m in 0..=10u32 {
            for n in m..=10u32 {
                let ip = quad(|x| oscillator_fn(m, x).unwrap() * oscillator_fn(n, x).unwrap());
                let expect = if m == n { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(ip, expect, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn spinor_normalization_by_quadrature() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.3).unwrap();
        for n in 1..=5u32 {
            let s = eigen_closed(&p, LevelIndex::new(n, Branch::Plus)).unwrap();
            let total = quad(|x| {
                let (up, down) = spinor_z(&s, n, x).unwrap();
                up.norm_sqr() + down.norm_sqr()
            });
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn decoupled_limit_spinor_splits_equally() {
        // g~ -> 0, Omega > omega, plus branch: the state is |n-1, up>, whose
        // sz components are both phi_{n-1}/sqrt(2).
        let p = ModelParams::generic(0.5, 0.0, 1.0, 0.0, 0.0, 0.0).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(2, Branch::Plus)).unwrap();
        for x in [-1.3, 0.2, 0.9] {
            let (up, down) = spinor_z(&s, 2, x).unwrap();
            let expect = oscillator_fn(1, x).unwrap() / 2f64.sqrt();
            assert_abs_diff_eq!((up - down).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(up.re, expect, epsilon = 1e-12);
            assert_abs_diff_eq!(up.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn ground_level_texture_points_down_x() {
        let p = ModelParams::coupling_decay(0.1, 1.0, 0.2).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(0, Branch::Minus)).unwrap();
        for t in texture(&s, 0, Grid1D::default_for(0)).unwrap() {
            assert_abs_diff_eq!(t.s_x, -t.rho, epsilon = 1e-12);
            assert_abs_diff_eq!(t.s_y, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(t.s_z, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pointwise_purity() {
        let p = ModelParams::qubit_decay(0.1, 0.5, 0.3).unwrap();
        for branch in [Branch::Plus, Branch::Minus] {
            let s = eigen_closed(&p, LevelIndex::new(2, branch)).unwrap();
            for t in texture(&s, 2, Grid1D::default_for(2)).unwrap() {
                let len = t.s_x * t.s_x + t.s_y * t.s_y + t.s_z * t.s_z;
                assert_abs_diff_eq!(len, t.rho * t.rho, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn broken_phase_sz_vanishes() {
        let p = ModelParams::qubit_decay(0.1, 0.8, 0.3).unwrap(); // PT-broken
        let s = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap();
        for t in texture(&s, 1, Grid1D::default_for(1)).unwrap() {
            assert_abs_diff_eq!(t.s_z, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn winding_zx_zero_in_broken_phase() {
        let p = ModelParams::qubit_decay(0.1, 0.8, 0.3).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap();
        let w = winding(&s, 1, Plane::Zx, Grid1D::default_for(1)).unwrap();
        assert!(w.raw.abs() < 1e-6, "raw = {}", w.raw);
        assert_eq!(w.snapped, Snapped::Half(0));
    }

    #[test]
    fn winding_zx_unit_in_symmetric_phase() {
        let p = ModelParams::qubit_decay(0.1, 0.2, 0.3).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(1, Branch::Plus)).unwrap();
        let w = winding(&s, 1, Plane::Zx, Grid1D::default_for(1)).unwrap();
        assert_eq!(w.snapped, Snapped::Half(-2), "raw = {}", w.raw);
        // constant deeper in the phase
        let p2 = ModelParams::qubit_decay(0.1, 0.4, 0.3).unwrap();
        let s2 = eigen_closed(&p2, LevelIndex::new(1, Branch::Plus)).unwrap();
        let w2 = winding(&s2, 1, Plane::Zx, Grid1D::default_for(1)).unwrap();
        assert_abs_diff_eq!(w.raw, w2.raw, epsilon = 1e-6);
    }

    #[test]
    fn winding_yx_sign_flips_at_resonance() {
        let above = ModelParams::coupling_decay(0.6, 1.0, 0.1).unwrap(); // Omega > omega
        let below = ModelParams::coupling_decay(1.4, 1.0, 0.1).unwrap(); // Omega < omega
        let sa = eigen_closed(&above, LevelIndex::new(1, Branch::Plus)).unwrap();
        let sb = eigen_closed(&below, LevelIndex::new(1, Branch::Plus)).unwrap();
        let wa = winding(&sa, 1, Plane::Yx, Grid1D::default_for(1)).unwrap();
        let wb = winding(&sb, 1, Plane::Yx, Grid1D::default_for(1)).unwrap();
        // same branch label: opposite signs across resonance
        assert!(wa.raw > 0.4, "raw = {}", wa.raw);
        assert!(wb.raw < -0.4, "raw = {}", wb.raw);
        // the branches swap roles under detuning reversal, so the exact mirror
        // of (detuning, +) is (-detuning, -)
        let sm = eigen_closed(&below, LevelIndex::new(1, Branch::Minus)).unwrap();
        let wm = winding(&sm, 1, Plane::Yx, Grid1D::default_for(1)).unwrap();
        assert_abs_diff_eq!(wa.raw + wm.raw, 0.0, epsilon = 1e-6);
    }

    #[test]
    fn winding_refinement_stable() {
        let p = ModelParams::qubit_decay(0.1, 0.2, 0.3).unwrap();
        let s = eigen_closed(&p, LevelIndex::new(3, Branch::Minus)).unwrap();
        let g = Grid1D::default_for(3);
        let w1 = winding(&s, 3, Plane::Zx, g).unwrap();
        let w2 = winding(&s, 3, Plane::Zx, g.refined()).unwrap();
        assert_abs_diff_eq!(w1.raw, w2.raw, epsilon = 1e-6);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid1D::new(1.0, -1.0, 101).is_err());
        assert!(Grid1D::new(-1.0, 1.0, 100).is_err());
        assert!(Grid1D::new(-1.0, 1.0, 101).is_ok());
    }
}
