//! Command-line front end: single-point queries, figure-recipe sweeps and the
//! self-verification suite.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nhjc::model::{
    eigen_closed, spectrum, Branch, LevelIndex, ModelKind, ModelParams, ParamName,
};
use nhjc::oracle::{build_dense, dense_eigen, match_level};
use nhjc::qfi::{current_lambda, lambda_ep, qfi_closed, qfi_near_ep, qfi_numeric};
use nhjc::sweep::{emit, emit_to_path, preset, run_sweep, OutputFormat, SweepSpec};
use nhjc::symmetry::{classify_phase, default_phase_tol, ep_locate, ptk_expectation};
use nhjc::texture::{texture, winding, Grid1D, Plane, Snapped};
use nhjc::{Error, Result};

#[derive(Parser)]
#[command(name = "nhjc", version, about = "Spectra, exceptional points, quantum Fisher \
information and spin-winding topology of two non-Hermitian Jaynes-Cummings models")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// RNG seed for the randomized checks in `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

/// Model selection and fixed parameters, shared by the single-point commands.
#[derive(Args, Clone)]
struct ModelArgs {
    /// Model kind: hgamma (lossy qubit), hgammaU (lossy coupling), generic.
    #[arg(long, default_value = "hgamma")]
    model: String,

    /// Oscillator frequency omega.
    #[arg(long, default_value_t = 0.1)]
    omega: f64,

    /// Oscillator loss rate kappa (generic model only).
    #[arg(long, default_value_t = 0.0)]
    kappa: f64,

    /// Qubit frequency Omega (ignored by hgamma, which sets Omega = omega).
    #[arg(long = "Omega", default_value_t = 1.0)]
    omega_q: f64,

    /// Qubit loss rate gamma.
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,

    /// Coupling strength g.
    #[arg(long, default_value_t = 0.0)]
    g: f64,

    /// Imaginary coupling strength Gamma.
    #[arg(long = "Gamma", default_value_t = 0.0)]
    gamma_c: f64,
}

impl ModelArgs {
    fn params(&self) -> Result<ModelParams> {
        match self.model.as_str() {
            "hgamma" => ModelParams::qubit_decay(self.omega, self.gamma, self.g),
            "hgammaU" => ModelParams::coupling_decay(self.omega, self.omega_q, self.gamma_c),
            "generic" => ModelParams::generic(
                self.omega,
                self.kappa,
                self.omega_q,
                self.gamma,
                self.g,
                self.gamma_c,
            ),
            other => Err(Error::InvalidParams(format!(
                "unknown model {other:?}; expected hgamma, hgammaU or generic"
            ))),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energies of all levels up to an excitation cutoff.
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        /// Largest excitation number.
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Closed-form exceptional-point locations for one parameter.
    Ep {
        #[command(flatten)]
        model: ModelArgs,
        /// Excitation number.
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        /// Swept parameter: g, gamma, Gamma, omega or detuning.
        #[arg(long)]
        param: String,
    },
    /// Quantum Fisher information at the current parameter point.
    Qfi {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        /// Branch label: + or -.
        #[arg(long, default_value = "+")]
        branch: String,
        /// Estimated parameter: g, gamma, Gamma, omega or detuning.
        #[arg(long)]
        param: String,
        /// Method: closed, near-ep or numeric.
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Real-space spin texture of one eigenstate.
    Texture {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value = "+")]
        branch: String,
        /// Grid point count (odd; default chosen from n).
        #[arg(long)]
        points: Option<usize>,
    },
    /// Spin-winding number of one eigenstate in one plane.
    Winding {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value = "+")]
        branch: String,
        /// Texture plane: zx, yx or zy.
        #[arg(long, default_value = "zx")]
        plane: String,
    },
    /// Run a declarative sweep from a config file or a built-in preset.
    Sweep {
        /// Sweep specification file (key-value with nested sections).
        #[arg(long, conflicts_with = "preset")]
        config: Option<PathBuf>,
        /// Built-in figure recipe (fig1a, fig1f, fig2a-f, fig3c-f).
        #[arg(long)]
        preset: Option<String>,
    },
    /// Check the closed forms against the dense brute-force oracle.
    Verify {
        /// Randomized parameter sets per model kind.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_format(s: &str) -> Result<OutputFormat> {
    s.parse()
}

/// Write simple tabular output as CSV or JSONL to the chosen destination.
fn write_table(
    header: &[&str],
    rows: &[Vec<String>],
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<()> {
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => {
            writeln!(buf, "{}", header.join(",")).expect("vec write");
            for r in rows {
                writeln!(buf, "{}", r.join(",")).expect("vec write");
            }
        }
        OutputFormat::Jsonl => {
            for r in rows {
                let obj: serde_json::Map<String, serde_json::Value> = header
                    .iter()
                    .zip(r)
                    .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
                    .collect();
                writeln!(buf, "{}", serde_json::Value::Object(obj)).expect("vec write");
            }
        }
    }
    match out {
        Some(path) => std::fs::write(path, buf).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            std::io::stdout().write_all(&buf).map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
        }
    }
}

fn phase_column(p: &ModelParams, n: u32) -> String {
    if p.kind == ModelKind::Generic || n == 0 {
        return String::new();
    }
    classify_phase(p, n, default_phase_tol(p, n))
        .map(|l| l.tag.to_string())
        .unwrap_or_default()
}

fn cmd_spectrum(model: &ModelArgs, n_max: u32, format: OutputFormat, out: Option<&Path>) -> Result<()> {
    let p = model.params()?;
    let levels = spectrum(&p, n_max)?;
    let mut rows = Vec::new();
    for (lvl, e) in levels {
        let sol = eigen_closed(&p, lvl)?;
        let ptk = ptk_expectation(&sol)?;
        rows.push(vec![
            lvl.n.to_string(),
            if lvl.n == 0 { String::new() } else { lvl.branch.to_string() },
            fmt(e.re),
            fmt(e.im),
            fmt(ptk.norm()),
            phase_column(&p, lvl.n),
        ]);
    }
    write_table(
        &["n", "eta", "energy_re", "energy_im", "ptk_abs", "phase"],
        &rows,
        format,
        out,
    )
}

fn cmd_ep(model: &ModelArgs, n: u32, param: &str, format: OutputFormat, out: Option<&Path>) -> Result<()> {
    let p = model.params()?;
    let name: ParamName = param.parse()?;
    let ep = ep_locate(&p, n, name)?;
    let rows: Vec<Vec<String>> = ep
        .values
        .iter()
        .map(|&v| vec![name.to_string(), n.to_string(), fmt(v)])
        .collect();
    write_table(&["param", "n", "value"], &rows, format, out)
}

fn cmd_qfi(
    model: &ModelArgs,
    n: u32,
    branch: &str,
    param: &str,
    method: &str,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<()> {
    let p = model.params()?;
    let name: ParamName = param.parse()?;
    let lvl = LevelIndex::new(n, branch.parse()?);
    let lambda = current_lambda(&p, name)?;
    let lep = lambda_ep(&p, n.max(1), name)?;
    let value = match method {
        "closed" => qfi_closed(lambda, lep)?,
        "near-ep" => qfi_near_ep(lambda, lep)?,
        "numeric" => qfi_numeric(&p, lvl, name, None)?.value,
        other => {
            return Err(Error::InvalidSpec(format!(
                "unknown method {other:?}; expected closed, near-ep or numeric"
            )))
        }
    };
    let rows = vec![vec![
        name.to_string(),
        fmt(lambda),
        fmt(lep),
        method.to_string(),
        fmt(value),
    ]];
    write_table(
        &["param", "lambda", "lambda_ep", "method", "value"],
        &rows,
        format,
        out,
    )
}

fn cmd_texture(
    model: &ModelArgs,
    n: u32,
    branch: &str,
    points: Option<usize>,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<()> {
    let p = model.params()?;
    let lvl = LevelIndex::new(n, branch.parse()?);
    let sol = eigen_closed(&p, lvl)?;
    let grid = match points {
        Some(count) => {
            let d = Grid1D::default_for(n);
            Grid1D::new(d.x_min, d.x_max, count)?
        }
        None => Grid1D::default_for(n),
    };
    let samples = texture(&sol, n, grid)?;
    let rows: Vec<Vec<String>> = samples
        .iter()
        .map(|s| vec![fmt(s.x), fmt(s.s_x), fmt(s.s_y), fmt(s.s_z), fmt(s.rho)])
        .collect();
    write_table(&["x", "s_x", "s_y", "s_z", "rho"], &rows, format, out)
}

fn cmd_winding(
    model: &ModelArgs,
    n: u32,
    branch: &str,
    plane: &str,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<()> {
    let p = model.params()?;
    let lvl = LevelIndex::new(n, branch.parse()?);
    let sol = eigen_closed(&p, lvl)?;
    let plane: Plane = plane.parse()?;
    let w = winding(&sol, n, plane, Grid1D::default_for(n))?;
    let (snapped, status) = match w.snapped {
        Snapped::Half(k) => (fmt(k as f64 / 2.0), "ok".to_string()),
        Snapped::Unquantized => (String::new(), "unquantized".to_string()),
    };
    let rows = vec![vec![
        plane.to_string(),
        fmt(w.raw),
        snapped,
        status,
        phase_column(&p, n),
    ]];
    write_table(&["plane", "raw", "snapped", "status", "phase"], &rows, format, out)
}

/// `--out` names the single output file, or a directory when a preset expands
/// to several sweeps (files are named after the sweep labels).
fn cmd_sweep(
    config: Option<&Path>,
    preset_name: Option<&str>,
    format: OutputFormat,
    out: Option<&Path>,
    threads: usize,
) -> Result<()> {
    let jobs: Vec<(String, SweepSpec)> = match (config, preset_name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            vec![("sweep".to_string(), SweepSpec::from_toml(&text)?)]
        }
        (None, Some(name)) => preset(name)?,
        _ => {
            return Err(Error::InvalidSpec(
                "sweep needs exactly one of --config or --preset".into(),
            ))
        }
    };
    let ext = match format {
        OutputFormat::Csv => "csv",
        OutputFormat::Jsonl => "jsonl",
    };
    let multi = jobs.len() > 1;
    for (label, spec) in &jobs {
        let rows = run_sweep(spec, threads)?;
        match out {
            Some(path) if multi => {
                std::fs::create_dir_all(path).map_err(|source| Error::Io {
                    path: path.to_path_buf(),
                    source,
                })?;
                emit_to_path(&rows, format, &path.join(format!("{label}.{ext}")))?;
            }
            Some(path) => emit_to_path(&rows, format, path)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                emit(&rows, format, &mut stdout).map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })?;
            }
        }
    }
    Ok(())
}

fn random_params(rng: &mut ChaCha8Rng, kind: ModelKind) -> Result<ModelParams> {
    let omega = rng.random_range(0.01..2.0);
    match kind {
        ModelKind::QubitDecay => {
            ModelParams::qubit_decay(omega, rng.random_range(0.0..2.0), rng.random_range(0.0..2.0))
        }
        ModelKind::CouplingDecay => ModelParams::coupling_decay(
            omega,
            rng.random_range(0.01..2.0),
            rng.random_range(0.0..2.0),
        ),
        ModelKind::Generic => ModelParams::generic(
            omega,
            rng.random_range(0.0..2.0),
            rng.random_range(0.01..2.0),
            rng.random_range(0.0..2.0),
            rng.random_range(0.0..2.0),
            rng.random_range(0.0..2.0),
        ),
    }
}

/// Randomized closed-form vs dense-oracle agreement, plus eigenvector checks
/// at a few fixed points.  Prints one line per check; fails with a numerical
/// error if any check is out of tolerance.
fn cmd_verify(samples: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let start = Instant::now();

    for kind in [ModelKind::QubitDecay, ModelKind::CouplingDecay, ModelKind::Generic] {
        let mut max_err = 0.0f64;
        for _ in 0..samples {
            let p = random_params(&mut rng, kind)?;
            let n_max = 4;
            let eigen = dense_eigen(&build_dense(&p, n_max + 1)?)?;
            for (lvl, e_closed) in spectrum(&p, n_max)? {
                match match_level(&eigen, &p, lvl) {
                    Ok((e_dense, _)) => max_err = max_err.max((e_dense - e_closed).norm()),
                    // degenerate sectors (at or near an EP) cannot be matched
                    Err(Error::AmbiguousMatch(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        let ok = max_err < 1e-10;
        println!(
            "{} spectrum agreement ({kind:?}, {samples} samples): max |dE| = {max_err:.3e}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures += 1;
        }
    }

    // eigenvector agreement at one representative point per special model
    for (label, p) in [
        ("hgamma", ModelParams::qubit_decay(0.1, 0.4, 0.3)?),
        ("hgammaU", ModelParams::coupling_decay(0.1, 1.0, 0.2)?),
    ] {
        let mut worst = 0.0f64;
        let eigen = dense_eigen(&build_dense(&p, 4)?)?;
        for n in 1..=3u32 {
            for branch in [Branch::Minus, Branch::Plus] {
                let lvl = LevelIndex::new(n, branch);
                let sol = eigen_closed(&p, lvl)?;
                let (_, vec) = match_level(&eigen, &p, lvl)?;
                let up = vec[2 * (n as usize - 1)];
                let down = vec[2 * n as usize + 1];
                let scale = (sol.norm * (up.norm_sqr() + down.norm_sqr())).sqrt();
                let ov = (sol.c_up.conj() * up + sol.c_down.conj() * down).norm() / scale;
                worst = worst.max(1.0 - ov);
            }
        }
        let ok = worst < 1e-8;
        println!(
            "{} eigenvector agreement ({label}): max 1 - |overlap| = {worst:.3e}",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failures += 1;
        }
    }

    println!("verify finished in {:.2} s", start.elapsed().as_secs_f64());
    if failures > 0 {
        Err(Error::Divergence(failures as f64))
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<()> {
    let format = parse_format(&cli.format)?;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Spectrum { model, n_max } => cmd_spectrum(model, *n_max, format, out),
        Command::Ep { model, n, param } => cmd_ep(model, *n, param, format, out),
        Command::Qfi {
            model,
            n,
            branch,
            param,
            method,
        } => cmd_qfi(model, *n, branch, param, method, format, out),
        Command::Texture {
            model,
            n,
            branch,
            points,
        } => cmd_texture(model, *n, branch, *points, format, out),
        Command::Winding {
            model,
            n,
            branch,
            plane,
        } => cmd_winding(model, *n, branch, plane, format, out),
        Command::Sweep { config, preset } => cmd_sweep(
            config.as_deref(),
            preset.as_deref(),
            format,
            out,
            cli.threads,
        ),
        Command::Verify { samples } => cmd_verify(*samples, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
