use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use magnomech_cli::config::{emit_config, parse_config, ConfigError, RunConfig};
use magnomech_cli::csvio;
use magnomech_cli::preset::{preset, PRESET_NAMES};
use magnomech_cli::sweep::{run_sweep, sweep_csv, SweepSpec};
use magnomech_core::params::{compute_detunings, kerr_validity, KERR_RATIO_WEAK};
use magnomech_core::spectra::{
    drift_eigenvalues, find_amplification_bands, sweep_spectrum, GridSpec,
};
use magnomech_core::steady::{residual, solve_steady_state};

/// Probe transmission of a two-cavity magnomechanical circuit with gain.
#[derive(Parser)]
#[command(name = "magnomech", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the steady-state working point(s) from the pump drive
    Steady {
        /// Config file; defaults apply when omitted
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transmission spectrum over the probe grid
    Spectrum {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the gain-cavity rate kappa_2/2pi in MHz (signed)
        #[arg(long)]
        kappa2_over_2pi_mhz: Option<f64>,
        /// Override the grid as start:stop:points (units of omega_b)
        #[arg(long, value_parser = parse_grid)]
        grid: Option<GridSpec>,
        /// Amplification band threshold on |t_p|^2
        #[arg(long, default_value_t = 1.0)]
        threshold: f64,
    },
    /// Group-delay spectrum (same CSV, delay-focused summary)
    Delay {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        kappa2_over_2pi_mhz: Option<f64>,
        #[arg(long, value_parser = parse_grid)]
        grid: Option<GridSpec>,
    },
    /// Sweep one [system] key over several values; emits a summary table
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// [system] key to vary, e.g. J_over_2pi_MHz
        #[arg(long)]
        axis: String,
        /// Comma-separated axis values
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        #[arg(long, default_value_t = 1.0)]
        threshold: f64,
    },
    /// Drift-matrix eigenvalues and stability of the working point
    Eigen {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write eigenvalues as CSV here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named preset and emit its spectrum
    Preset {
        /// Preset name; `list` prints the known names
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        kappa2_over_2pi_mhz: Option<f64>,
        #[arg(long, value_parser = parse_grid)]
        grid: Option<GridSpec>,
        /// Emit the preset's config document instead of running it
        #[arg(long)]
        emit_config: bool,
    },
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, points] = parts.as_slice() else {
        return Err(format!("expected start:stop:points, got `{s}`"));
    };
    Ok(GridSpec {
        start: start
            .parse()
            .map_err(|_| format!("bad grid start `{start}`"))?,
        stop: stop.parse().map_err(|_| format!("bad grid stop `{stop}`"))?,
        points: points
            .parse()
            .map_err(|_| format!("bad grid point count `{points}`"))?,
    })
}

fn load_config(path: Option<&PathBuf>) -> Result<RunConfig> {
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading config {}", p.display()))?;
            Ok(parse_config(&text)?)
        }
    }
}

fn write_out(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, content)
            .with_context(|| format!("writing {}", p.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn warn_kerr(ratio: f64) {
    if ratio >= KERR_RATIO_WEAK {
        eprintln!(
            "warning: Kerr shift is {ratio:.3} of the drive; linearization is unreliable"
        );
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Steady { config, out } => {
            let cfg = load_config(config.as_ref())?;
            let p = cfg.system_params();
            p.validate()?;
            let drive = cfg.drive_config()?;
            let det = compute_detunings(&p, &drive);
            let states = solve_steady_state(&p, &det, &drive)?;
            let residuals: Vec<f64> = states
                .iter()
                .map(|s| residual(&p, &det, &drive, s))
                .collect();
            for s in &states {
                warn_kerr(kerr_validity(p.k_kerr, s.m.norm(), drive.rabi)?);
            }
            eprintln!("{} branch(es), occupations {:?}", states.len(),
                states.iter().map(|s| s.occupation).collect::<Vec<_>>());
            write_out(out.as_ref(), &csvio::steady_csv(&states, &residuals))
        }
        Cmd::Spectrum {
            config,
            out,
            kappa2_over_2pi_mhz,
            grid,
            threshold,
        } => {
            let mut cfg = load_config(config.as_ref())?;
            if let Some(k2) = kappa2_over_2pi_mhz {
                cfg.kappa_2_mhz = k2;
            }
            if let Some(g) = grid {
                cfg.grid = g;
            }
            let wp = cfg.working_point()?;
            warn_kerr(wp.kerr_ratio);
            let table =
                sweep_spectrum(&cfg.grid, &wp.params, &wp.det, wp.g_eff, wp.eps_pr, cfg.mode)?;
            let bands = find_amplification_bands(&table, threshold);
            for b in &bands {
                eprintln!(
                    "band: center {} height {} width {}",
                    b.center, b.height, b.width
                );
            }
            write_out(out.as_ref(), &csvio::spectrum_csv(&table))
        }
        Cmd::Delay {
            config,
            out,
            kappa2_over_2pi_mhz,
            grid,
        } => {
            let mut cfg = load_config(config.as_ref())?;
            if let Some(k2) = kappa2_over_2pi_mhz {
                cfg.kappa_2_mhz = k2;
            }
            if let Some(g) = grid {
                cfg.grid = g;
            }
            let wp = cfg.working_point()?;
            warn_kerr(wp.kerr_ratio);
            let table =
                sweep_spectrum(&cfg.grid, &wp.params, &wp.det, wp.g_eff, wp.eps_pr, cfg.mode)?;
            let mut best: Option<(f64, f64)> = None;
            for row in &table.rows {
                if let Some(tau) = row.tau_g {
                    if best.map(|(t, _)| tau > t).unwrap_or(true) {
                        best = Some((tau, row.delta_over_omega_b));
                    }
                }
            }
            if let Some((tau, at)) = best {
                eprintln!("max tau_g {tau} s at delta/omega_b = {at}");
            }
            write_out(out.as_ref(), &csvio::spectrum_csv(&table))
        }
        Cmd::Sweep {
            config,
            out,
            axis,
            values,
            threshold,
        } => {
            let cfg = load_config(config.as_ref())?;
            let spec = SweepSpec { axis, values };
            let points = run_sweep(&cfg, &spec, threshold)?;
            write_out(out.as_ref(), &sweep_csv(&spec.axis, &points))
        }
        Cmd::Eigen { config, out } => {
            let cfg = load_config(config.as_ref())?;
            let wp = cfg.working_point()?;
            let report = drift_eigenvalues(&wp.params, &wp.det, wp.g_eff);
            for (k, ev) in report.eigenvalues.iter().enumerate() {
                println!("eigenvalue {k}: {} {:+}i rad/s", ev.re, ev.im);
            }
            println!("max_real_part = {} rad/s", report.max_real_part);
            println!("stable = {}", report.stable);
            println!("ep_gap = {} rad/s", report.ep_gap);
            if let Some(p) = out.as_ref() {
                std::fs::write(p, csvio::eigen_csv(&report))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(())
        }
        Cmd::Preset {
            name,
            out,
            kappa2_over_2pi_mhz,
            grid,
            emit_config: emit,
        } => {
            if name == "list" {
                for n in PRESET_NAMES {
                    println!("{n}");
                }
                return Ok(());
            }
            let mut cfg = preset(&name).ok_or_else(|| {
                anyhow!(
                    "unknown preset `{name}`; known presets: {}",
                    PRESET_NAMES.join(", ")
                )
            })?;
            if let Some(k2) = kappa2_over_2pi_mhz {
                cfg.kappa_2_mhz = k2;
            }
            if let Some(g) = grid {
                cfg.grid = g;
            }
            if emit {
                return write_out(out.as_ref(), &emit_config(&cfg));
            }
            let wp = cfg.working_point()?;
            warn_kerr(wp.kerr_ratio);
            let table =
                sweep_spectrum(&cfg.grid, &wp.params, &wp.det, wp.g_eff, wp.eps_pr, cfg.mode)?;
            write_out(out.as_ref(), &csvio::spectrum_csv(&table))
        }
    }
}

/// 0 success, 2 bad configuration or usage, 3 numerical failure, 4 IO.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 4;
    }
    if err.downcast_ref::<ConfigError>().is_some() {
        return 2;
    }
    if let Some(e) = err.downcast_ref::<magnomech_core::Error>() {
        use magnomech_core::Error::*;
        return match e {
            Pole { .. } | NoSteadyState | SingularConfiguration => 3,
            _ => 2,
        };
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
