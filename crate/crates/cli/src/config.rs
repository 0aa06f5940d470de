//! Line-oriented `key = value` run configuration.
//!
//! Four sections: `[system]`, `[drive]`, `[grid]`, `[run]`. Unknown
//! sections, unknown keys, duplicates, and malformed numbers are rejected
//! with the offending line number. Frequencies and rates are given as
//! `omega/2pi` in MHz and converted to angular units exactly once, when
//! the core parameter structs are built.

use std::collections::HashSet;
use std::fmt;

use magnomech_core::params::{
    compute_detunings, kerr_validity, probe_amplitude, rabi_frequency, spin_count,
    Detunings, DriveConfig, SphereGeometry, SystemParams,
};
use magnomech_core::spectra::{GridSpec, ResponseMode};
use magnomech_core::steady::{solve_steady_state, SteadyState};
use magnomech_core::{Complex64, Error};

/// rad/s per (omega/2pi) MHz.
pub const MHZ: f64 = 2.0 * std::f64::consts::PI * 1e6;

/// How the linearized working point is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameterization {
    /// `G` and the shifted magnon detuning are given directly.
    DirectG,
    /// The working point is solved from the pump drive.
    DriveDerived,
}

/// A full run description in input units.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    // [system]
    pub omega_a1_mhz: f64,
    pub omega_a2_mhz: f64,
    pub omega_m_mhz: f64,
    pub omega_b_mhz: f64,
    pub kappa_1_mhz: f64,
    pub kappa_2_mhz: f64,
    pub kappa_m_mhz: f64,
    pub kappa_b_mhz: f64,
    pub j_mhz: f64,
    pub g_1_mhz: f64,
    pub g_2_mhz: f64,
    pub g_eff_mhz: f64,
    pub k_kerr_mhz: f64,
    pub delta_m_tilde_over_omega_b: f64,
    pub sphere_diameter_m: f64,
    pub spin_density_per_m3: f64,
    // [drive]
    pub omega_pu_mhz: f64,
    pub omega_pr_mhz: f64,
    pub power_pr_w: f64,
    pub epsilon_pr_rad_per_s: f64,
    pub b0_t: f64,
    pub omega_rabi_rad_per_s: f64,
    // [grid]
    pub grid: GridSpec,
    // [run]
    pub mode: ResponseMode,
    pub parameterization: Parameterization,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            omega_a1_mhz: 10_000.0,
            omega_a2_mhz: 10_000.0,
            omega_m_mhz: 10_000.0,
            omega_b_mhz: 10.0,
            kappa_1_mhz: 2.0,
            kappa_2_mhz: -1.0,
            kappa_m_mhz: 0.1,
            kappa_b_mhz: 1e-4,
            j_mhz: 0.0,
            g_1_mhz: 1.0,
            g_2_mhz: 0.0,
            g_eff_mhz: 3.5,
            k_kerr_mhz: 0.0,
            delta_m_tilde_over_omega_b: 1.0,
            sphere_diameter_m: 250e-6,
            spin_density_per_m3: 4.22e27,
            omega_pu_mhz: 9_990.0,
            omega_pr_mhz: 10_000.0,
            power_pr_w: 0.0,
            epsilon_pr_rad_per_s: 1.0,
            b0_t: 0.0,
            omega_rabi_rad_per_s: 0.0,
            grid: GridSpec {
                start: 0.5,
                stop: 1.5,
                points: 4001,
            },
            mode: ResponseMode::General,
            parameterization: Parameterization::DirectG,
        }
    }
}

/// Parse failure with the 1-based line it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    System,
    Drive,
    Grid,
    Run,
}

impl Section {
    fn name(self) -> &'static str {
        match self {
            Section::None => "(none)",
            Section::System => "system",
            Section::Drive => "drive",
            Section::Grid => "grid",
            Section::Run => "run",
        }
    }
}

fn err(line: usize, message: String) -> ConfigError {
    ConfigError { line, message }
}

fn parse_f64(line: usize, key: &str, value: &str) -> Result<f64, ConfigError> {
    let v: f64 = value
        .parse()
        .map_err(|_| err(line, format!("invalid number for `{key}`: `{value}`")))?;
    if !v.is_finite() {
        return Err(err(line, format!("`{key}` must be finite, got `{value}`")));
    }
    Ok(v)
}

/// Assign one `[system]` key. Returns false for unknown keys; shared with
/// the sweep axis lookup.
pub fn set_system_key(cfg: &mut RunConfig, key: &str, v: f64) -> bool {
    match key {
        "omega_a1_over_2pi_MHz" => cfg.omega_a1_mhz = v,
        "omega_a2_over_2pi_MHz" => cfg.omega_a2_mhz = v,
        "omega_m_over_2pi_MHz" => cfg.omega_m_mhz = v,
        "omega_b_over_2pi_MHz" => cfg.omega_b_mhz = v,
        "kappa_1_over_2pi_MHz" => cfg.kappa_1_mhz = v,
        "kappa_2_over_2pi_MHz" => cfg.kappa_2_mhz = v,
        "kappa_m_over_2pi_MHz" => cfg.kappa_m_mhz = v,
        "kappa_b_over_2pi_MHz" => cfg.kappa_b_mhz = v,
        "J_over_2pi_MHz" => cfg.j_mhz = v,
        "g_1_over_2pi_MHz" => cfg.g_1_mhz = v,
        "g_2_over_2pi_MHz" => cfg.g_2_mhz = v,
        "G_over_2pi_MHz" => cfg.g_eff_mhz = v,
        "K_over_2pi_MHz" => cfg.k_kerr_mhz = v,
        "delta_m_tilde_over_omega_b" => cfg.delta_m_tilde_over_omega_b = v,
        "sphere_diameter_m" => cfg.sphere_diameter_m = v,
        "spin_density_per_m3" => cfg.spin_density_per_m3 = v,
        _ => return false,
    }
    true
}

fn set_drive_key(cfg: &mut RunConfig, key: &str, v: f64) -> bool {
    match key {
        "omega_pu_over_2pi_MHz" => cfg.omega_pu_mhz = v,
        "omega_pr_over_2pi_MHz" => cfg.omega_pr_mhz = v,
        "power_pr_W" => cfg.power_pr_w = v,
        "epsilon_pr_rad_per_s" => cfg.epsilon_pr_rad_per_s = v,
        "b0_T" => cfg.b0_t = v,
        "omega_rabi_rad_per_s" => cfg.omega_rabi_rad_per_s = v,
        _ => return false,
    }
    true
}

/// Parses a config document, starting from the defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    let mut section = Section::None;
    let mut seen: HashSet<String> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if line.starts_with('[') {
            section = match line {
                "[system]" => Section::System,
                "[drive]" => Section::Drive,
                "[grid]" => Section::Grid,
                "[run]" => Section::Run,
                _ => return Err(err(line_no, format!("unknown section `{line}`"))),
            };
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(err(line_no, format!("expected `key = value`, got `{line}`")));
        };
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() {
            return Err(err(line_no, "empty key".into()));
        }
        if section == Section::None {
            return Err(err(
                line_no,
                format!("key `{key}` appears before any section header"),
            ));
        }
        if !seen.insert(format!("{}.{}", section.name(), key)) {
            return Err(err(
                line_no,
                format!("duplicate key `{key}` in [{}]", section.name()),
            ));
        }

        let known = match section {
            Section::System => set_system_key(&mut cfg, key, parse_f64(line_no, key, value)?),
            Section::Drive => set_drive_key(&mut cfg, key, parse_f64(line_no, key, value)?),
            Section::Grid => match key {
                "start" => {
                    cfg.grid.start = parse_f64(line_no, key, value)?;
                    true
                }
                "stop" => {
                    cfg.grid.stop = parse_f64(line_no, key, value)?;
                    true
                }
                "points" => {
                    cfg.grid.points = value.parse().map_err(|_| {
                        err(line_no, format!("invalid integer for `points`: `{value}`"))
                    })?;
                    true
                }
                _ => false,
            },
            Section::Run => match key {
                "mode" => {
                    cfg.mode = match value {
                        "general" => ResponseMode::General,
                        "resonant" => ResponseMode::Resonant,
                        _ => {
                            return Err(err(
                                line_no,
                                format!("`mode` must be `general` or `resonant`, got `{value}`"),
                            ))
                        }
                    };
                    true
                }
                "parameterization" => {
                    cfg.parameterization = match value {
                        "direct_g" => Parameterization::DirectG,
                        "drive_derived" => Parameterization::DriveDerived,
                        _ => {
                            return Err(err(
                                line_no,
                                format!(
                                    "`parameterization` must be `direct_g` or `drive_derived`, got `{value}`"
                                ),
                            ))
                        }
                    };
                    true
                }
                _ => false,
            },
            Section::None => unreachable!(),
        };
        if !known {
            return Err(err(
                line_no,
                format!("unknown key `{key}` in [{}]", section.name()),
            ));
        }
    }
    Ok(cfg)
}

/// Renders the full configuration; `parse_config` reads it back exactly.
pub fn emit_config(cfg: &RunConfig) -> String {
    let mode = match cfg.mode {
        ResponseMode::General => "general",
        ResponseMode::Resonant => "resonant",
    };
    let parameterization = match cfg.parameterization {
        Parameterization::DirectG => "direct_g",
        Parameterization::DriveDerived => "drive_derived",
    };
    format!(
        "[system]\n\
         omega_a1_over_2pi_MHz = {}\n\
         omega_a2_over_2pi_MHz = {}\n\
         omega_m_over_2pi_MHz = {}\n\
         omega_b_over_2pi_MHz = {}\n\
         kappa_1_over_2pi_MHz = {}\n\
         kappa_2_over_2pi_MHz = {}\n\
         kappa_m_over_2pi_MHz = {}\n\
         kappa_b_over_2pi_MHz = {}\n\
         J_over_2pi_MHz = {}\n\
         g_1_over_2pi_MHz = {}\n\
         g_2_over_2pi_MHz = {}\n\
         G_over_2pi_MHz = {}\n\
         K_over_2pi_MHz = {}\n\
         delta_m_tilde_over_omega_b = {}\n\
         sphere_diameter_m = {}\n\
         spin_density_per_m3 = {}\n\
         \n\
         [drive]\n\
         omega_pu_over_2pi_MHz = {}\n\
         omega_pr_over_2pi_MHz = {}\n\
         power_pr_W = {}\n\
         epsilon_pr_rad_per_s = {}\n\
         b0_T = {}\n\
         omega_rabi_rad_per_s = {}\n\
         \n\
         [grid]\n\
         start = {}\n\
         stop = {}\n\
         points = {}\n\
         \n\
         [run]\n\
         mode = {}\n\
         parameterization = {}\n",
        cfg.omega_a1_mhz,
        cfg.omega_a2_mhz,
        cfg.omega_m_mhz,
        cfg.omega_b_mhz,
        cfg.kappa_1_mhz,
        cfg.kappa_2_mhz,
        cfg.kappa_m_mhz,
        cfg.kappa_b_mhz,
        cfg.j_mhz,
        cfg.g_1_mhz,
        cfg.g_2_mhz,
        cfg.g_eff_mhz,
        cfg.k_kerr_mhz,
        cfg.delta_m_tilde_over_omega_b,
        cfg.sphere_diameter_m,
        cfg.spin_density_per_m3,
        cfg.omega_pu_mhz,
        cfg.omega_pr_mhz,
        cfg.power_pr_w,
        cfg.epsilon_pr_rad_per_s,
        cfg.b0_t,
        cfg.omega_rabi_rad_per_s,
        cfg.grid.start,
        cfg.grid.stop,
        cfg.grid.points,
        mode,
        parameterization,
    )
}

/// Working point handed to the response solvers.
#[derive(Debug, Clone, Copy)]
pub struct WorkingPoint {
    pub params: SystemParams,
    pub det: Detunings,
    pub g_eff: Complex64,
    pub eps_pr: f64,
    /// Present when the point came from a steady-state solve.
    pub steady: Option<SteadyState>,
    /// Kerr shift over drive; 0 when not derivable.
    pub kerr_ratio: f64,
}

impl RunConfig {
    /// Core system parameters in angular units.
    pub fn system_params(&self) -> SystemParams {
        SystemParams {
            omega_a1: self.omega_a1_mhz * MHZ,
            omega_a2: self.omega_a2_mhz * MHZ,
            omega_m: self.omega_m_mhz * MHZ,
            omega_b: self.omega_b_mhz * MHZ,
            kappa_1: self.kappa_1_mhz * MHZ,
            kappa_2: self.kappa_2_mhz * MHZ,
            kappa_m: self.kappa_m_mhz * MHZ,
            kappa_b: self.kappa_b_mhz * MHZ,
            j: self.j_mhz * MHZ,
            g_1: self.g_1_mhz * MHZ,
            g_2: self.g_2_mhz * MHZ,
            k_kerr: self.k_kerr_mhz * MHZ,
        }
    }

    /// Drive tones and amplitudes. Probe power, when positive, overrides
    /// the direct probe amplitude; a positive bias field overrides the
    /// direct Rabi rate.
    pub fn drive_config(&self) -> Result<DriveConfig, Error> {
        let omega_pu = self.omega_pu_mhz * MHZ;
        let omega_pr = self.omega_pr_mhz * MHZ;
        if self.power_pr_w < 0.0 {
            return Err(Error::NegativeDrive("power_pr_W"));
        }
        if self.b0_t < 0.0 {
            return Err(Error::NegativeDrive("b0_T"));
        }
        let eps_pr = if self.power_pr_w > 0.0 {
            probe_amplitude(self.power_pr_w, self.kappa_1_mhz * MHZ, omega_pr)?
        } else {
            if self.epsilon_pr_rad_per_s < 0.0 {
                return Err(Error::NegativeDrive("epsilon_pr_rad_per_s"));
            }
            self.epsilon_pr_rad_per_s
        };
        let rabi = if self.b0_t > 0.0 {
            let count = spin_count(&SphereGeometry {
                diameter: self.sphere_diameter_m,
                spin_density: self.spin_density_per_m3,
            })?;
            rabi_frequency(self.b0_t, count.n_spins)?
        } else {
            if self.omega_rabi_rad_per_s < 0.0 {
                return Err(Error::NegativeDrive("omega_rabi_rad_per_s"));
            }
            self.omega_rabi_rad_per_s
        };
        Ok(DriveConfig {
            omega_pu,
            omega_pr,
            rabi,
            eps_pr,
        })
    }

    /// Resolves the linearized working point.
    ///
    /// `direct_g` takes `G` and the shifted detuning from the config;
    /// `drive_derived` solves the steady state and uses the
    /// lowest-occupation branch.
    pub fn working_point(&self) -> Result<WorkingPoint, Error> {
        let params = self.system_params();
        params.validate()?;
        let drive = self.drive_config()?;
        let mut det = compute_detunings(&params, &drive);
        match self.parameterization {
            Parameterization::DirectG => {
                det.delta_m_eff = self.delta_m_tilde_over_omega_b * params.omega_b;
                Ok(WorkingPoint {
                    params,
                    det,
                    g_eff: Complex64::new(self.g_eff_mhz * MHZ, 0.0),
                    eps_pr: drive.eps_pr,
                    steady: None,
                    kerr_ratio: 0.0,
                })
            }
            Parameterization::DriveDerived => {
                let states = solve_steady_state(&params, &det, &drive)?;
                let s = states[0];
                det.delta_m_eff = s.delta_m_eff;
                let kerr_ratio = kerr_validity(params.k_kerr, s.m.norm(), drive.rabi)?;
                Ok(WorkingPoint {
                    params,
                    det,
                    g_eff: s.g_eff,
                    eps_pr: drive.eps_pr,
                    steady: Some(s),
                    kerr_ratio,
                })
            }
        }
    }
}
