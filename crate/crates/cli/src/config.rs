//! Scenario files: the canonical TOML schema, loading with strict
//! validation, and the vendored built-in scenarios.
//!
//! A scenario has five sections. `[[species]]` rows carry oxidant rate
//! constants and, when the compound is a transmitter species, the four pool
//! kinetics fields (all four or none). `[[blend]]` rows list components by
//! species name with composition weights as published (renormalized on
//! load). `[environment]`, `[geometry]` and `[simulation]` mirror the
//! library parameter types field for field. Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use voclink_core::atmosphere::blend_k_eff;
use voclink_core::data::{builtin_pinus_pinea, builtin_q_ilex};
use voclink_core::environment::StabilityClass;
use voclink_core::receiver::LeafParams;
use voclink_core::species::{OxidationRates, PoolKinetics};
use voclink_core::{Blend64, Environment64, LinkGeometry64, NoiseSource64, VocSpecies64};

use crate::CliError;

/// Directory consulted for bare scenario names passed to `--scenario`.
pub const SCENARIO_DIR_VAR: &str = "VOCLINK_SCENARIO_DIR";

// ---------------------------------------------------------------------------
// File schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub species: Vec<SpeciesEntry>,
    #[serde(default)]
    pub blend: Vec<BlendEntry>,
    pub environment: EnvironmentEntry,
    pub geometry: GeometryEntry,
    pub simulation: SimulationEntry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpeciesEntry {
    pub name: String,
    pub k_oh: f64,
    pub k_no3: f64,
    pub k_o3: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_l: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_g: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlendEntry {
    pub name: String,
    pub q0: f64,
    pub component: Vec<ComponentEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub species: String,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentEntry {
    pub wind_speed: f64,
    pub stability_class: String,
    pub c_oh: f64,
    pub c_o3: f64,
    pub c_no3: f64,
    pub release_height: f64,
    #[serde(default = "zero")]
    pub t_start: f64,
    #[serde(default = "twenty")]
    pub t_end: f64,
    #[serde(default = "one")]
    pub sample_step: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryEntry {
    /// Receiver (x, y, z) in meters, transmitter at the origin.
    pub receiver: [f64; 3],
    #[serde(default)]
    pub noise_source: Vec<NoiseEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseEntry {
    pub x0: f64,
    pub y0: f64,
    pub q_n: f64,
    /// Effective decay rate; derived from `blend` when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_n: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blend: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationEntry {
    /// Blend emitted by the transmitter.
    pub signal_blend: String,
    /// Effective decay rate of the signal in SNR and capacity sweeps;
    /// derived from the signal blend when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signal_k_eff: Option<f64>,
    /// Observation window for the constitutive channel's spectral width.
    #[serde(default = "day")]
    pub plume_window: f64,
    /// Override for the uncertainty-principle spectral width.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_f: Option<f64>,
    // Receiver leaf, defaulting to the reference parameter set.
    #[serde(default = "leaf_a_l")]
    pub a_l: f64,
    #[serde(default = "leaf_g_l")]
    pub g_l: f64,
    #[serde(default = "leaf_v_l")]
    pub v_l: f64,
    #[serde(default = "leaf_k_la")]
    pub k_la: f64,
    #[serde(default = "leaf_p_growth")]
    pub p_growth: f64,
}

fn zero() -> f64 {
    0.0
}
fn one() -> f64 {
    1.0
}
fn twenty() -> f64 {
    20.0
}
fn day() -> f64 {
    86400.0
}
fn leaf_a_l() -> f64 {
    5.0
}
fn leaf_g_l() -> f64 {
    86.4
}
fn leaf_v_l() -> f64 {
    0.002
}
fn leaf_k_la() -> f64 {
    10.0
}
fn leaf_p_growth() -> f64 {
    0.035
}

// ---------------------------------------------------------------------------
// Resolution into library types
// ---------------------------------------------------------------------------

/// A fully validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub species: Vec<VocSpecies64>,
    pub blends: Vec<(String, Blend64)>,
    pub environment: Environment64,
    pub geometry: LinkGeometry64,
    pub signal_blend: String,
    pub signal_k_eff: Option<f64>,
    pub plume_window: f64,
    pub delta_f: Option<f64>,
    pub leaf: LeafParams<f64>,
}

impl Scenario {
    pub fn resolve(file: &ScenarioFile) -> Result<Scenario, CliError> {
        let mut species: Vec<VocSpecies64> = Vec::with_capacity(file.species.len());
        for entry in &file.species {
            if species.iter().any(|s| s.name() == entry.name) {
                return Err(CliError::validation(format!(
                    "duplicate species `{}`",
                    entry.name
                )));
            }
            let oxidation = OxidationRates::new(entry.k_oh, entry.k_no3, entry.k_o3)?;
            let kinetics = match (entry.k_a, entry.k_l, entry.k_g, entry.eta) {
                (Some(k_a), Some(k_l), Some(k_g), Some(eta)) => {
                    Some(PoolKinetics::new(k_a, k_l, k_g, eta)?)
                }
                (None, None, None, None) => None,
                _ => {
                    return Err(CliError::validation(format!(
                        "species `{}`: k_a, k_l, k_g and eta must be given together",
                        entry.name
                    )))
                }
            };
            species.push(VocSpecies64::new(entry.name.clone(), kinetics, oxidation));
        }

        let mut blends: Vec<(String, Blend64)> = Vec::with_capacity(file.blend.len());
        for entry in &file.blend {
            if blends.iter().any(|(n, _)| *n == entry.name) {
                return Err(CliError::validation(format!(
                    "duplicate blend `{}`",
                    entry.name
                )));
            }
            let mut parts = Vec::with_capacity(entry.component.len());
            for c in &entry.component {
                let sp = species
                    .iter()
                    .find(|s| s.name() == c.species)
                    .ok_or_else(|| {
                        CliError::validation(format!(
                            "blend `{}` references unknown species `{}`",
                            entry.name, c.species
                        ))
                    })?;
                parts.push((sp.clone(), c.percent));
            }
            blends.push((entry.name.clone(), Blend64::new(parts, entry.q0)?));
        }

        let env = &file.environment;
        let class: StabilityClass = env.stability_class.parse()?;
        let environment = Environment64::with_window(
            env.wind_speed,
            class,
            env.c_oh,
            env.c_o3,
            env.c_no3,
            env.release_height,
            env.t_start,
            env.t_end,
            env.sample_step,
        )?;

        let mut noise_sources = Vec::with_capacity(file.geometry.noise_source.len());
        for n in &file.geometry.noise_source {
            let mut src = match (n.k_n, &n.blend) {
                (Some(k_n), _) => NoiseSource64::new(n.x0, n.y0, n.q_n, k_n)?,
                (None, Some(blend_name)) => {
                    let blend = blends
                        .iter()
                        .find(|(name, _)| name == blend_name)
                        .map(|(_, b)| b.clone())
                        .ok_or_else(|| {
                            CliError::validation(format!(
                                "noise source references unknown blend `{blend_name}`"
                            ))
                        })?;
                    NoiseSource64::from_blend(n.x0, n.y0, n.q_n, blend, &environment)?
                }
                (None, None) => {
                    return Err(CliError::validation(
                        "noise source needs k_n or a blend to derive it from",
                    ))
                }
            };
            if src.blend.is_none() {
                if let Some(blend_name) = &n.blend {
                    src.blend = blends
                        .iter()
                        .find(|(name, _)| name == blend_name)
                        .map(|(_, b)| b.clone());
                    if src.blend.is_none() {
                        return Err(CliError::validation(format!(
                            "noise source references unknown blend `{blend_name}`"
                        )));
                    }
                }
            }
            noise_sources.push(src);
        }
        let r = file.geometry.receiver;
        let geometry = LinkGeometry64::new((r[0], r[1], r[2]), noise_sources)?;

        let sim = &file.simulation;
        if !blends.iter().any(|(n, _)| *n == sim.signal_blend) {
            return Err(CliError::validation(format!(
                "signal_blend `{}` is not defined",
                sim.signal_blend
            )));
        }
        if let Some(k) = sim.signal_k_eff {
            if !(k >= 0.0) {
                return Err(CliError::validation(format!(
                    "invalid signal_k_eff: must be >= 0, got {k}"
                )));
            }
        }
        if let Some(df) = sim.delta_f {
            if !(df > 0.0) {
                return Err(CliError::validation(format!(
                    "invalid delta_f: must be > 0, got {df}"
                )));
            }
        }
        if !(sim.plume_window > 0.0) {
            return Err(CliError::validation(format!(
                "invalid plume_window: must be > 0, got {}",
                sim.plume_window
            )));
        }
        let leaf = LeafParams::new(sim.a_l, sim.g_l, sim.v_l, sim.k_la, sim.p_growth)?;

        Ok(Scenario {
            species,
            blends,
            environment,
            geometry,
            signal_blend: sim.signal_blend.clone(),
            signal_k_eff: sim.signal_k_eff,
            plume_window: sim.plume_window,
            delta_f: sim.delta_f,
            leaf,
        })
    }

    pub fn from_toml(text: &str) -> Result<Scenario, CliError> {
        let file: ScenarioFile =
            toml::from_str(text).map_err(|e| CliError::validation(format!("parse error: {e}")))?;
        Scenario::resolve(&file)
    }

    /// Loads a scenario from a path, or from `$VOCLINK_SCENARIO_DIR/<name>`
    /// (with or without the `.toml` suffix) when a bare name is given.
    pub fn load(spec: &str) -> Result<Scenario, CliError> {
        let path = resolve_path(spec)
            .ok_or_else(|| CliError::validation(format!("scenario `{spec}` not found")))?;
        let text = std::fs::read_to_string(&path).map_err(|e| {
            CliError::validation(format!("cannot read {}: {e}", path.display()))
        })?;
        Scenario::from_toml(&text)
    }

    pub fn blend(&self, name: &str) -> Option<&Blend64> {
        self.blends.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    pub fn signal(&self) -> &Blend64 {
        self.blend(&self.signal_blend)
            .expect("validated at resolution")
    }

    /// Effective decay rate of the signal for SNR purposes: the configured
    /// override, or the blend-derived rate.
    pub fn signal_rate(&self) -> f64 {
        self.signal_k_eff
            .unwrap_or_else(|| blend_k_eff(self.signal(), &self.environment))
    }

    pub fn species_by_name(&self, name: &str) -> Result<&VocSpecies64, CliError> {
        self.species
            .iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| CliError::validation(format!("unknown species `{name}`")))
    }
}

fn resolve_path(spec: &str) -> Option<PathBuf> {
    let direct = Path::new(spec);
    if direct.exists() {
        return Some(direct.to_path_buf());
    }
    if !spec.contains(std::path::MAIN_SEPARATOR) {
        if let Ok(dir) = std::env::var(SCENARIO_DIR_VAR) {
            for candidate in [
                Path::new(&dir).join(spec),
                Path::new(&dir).join(format!("{spec}.toml")),
            ] {
                if candidate.exists() {
                    return Some(candidate);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Built-in scenarios
// ---------------------------------------------------------------------------

fn species_entry(s: &VocSpecies64) -> SpeciesEntry {
    let ox = s.oxidation();
    let kin = s.kinetics().ok();
    SpeciesEntry {
        name: s.name().to_string(),
        k_oh: ox.k_oh,
        k_no3: ox.k_no3,
        k_o3: ox.k_o3,
        k_a: kin.map(|k| k.k_a),
        k_l: kin.map(|k| k.k_l),
        k_g: kin.map(|k| k.k_g),
        eta: kin.map(|k| k.eta),
    }
}

fn blend_entry(name: &str, blend: &Blend64) -> BlendEntry {
    BlendEntry {
        name: name.to_string(),
        q0: blend.q0(),
        component: blend
            .components()
            .iter()
            .map(|c| ComponentEntry {
                species: c.species.name().to_string(),
                percent: c.weight,
            })
            .collect(),
    }
}

fn reference_environment() -> EnvironmentEntry {
    EnvironmentEntry {
        wind_speed: 7.0,
        stability_class: "D".to_string(),
        c_oh: 2e6,
        c_o3: 7e11,
        c_no3: 1e10,
        release_height: 1.0,
        t_start: 0.0,
        t_end: 20.0,
        sample_step: 0.05,
    }
}

fn reference_simulation(signal_blend: &str) -> SimulationEntry {
    SimulationEntry {
        signal_blend: signal_blend.to_string(),
        signal_k_eff: None,
        plume_window: 86400.0,
        delta_f: None,
        a_l: leaf_a_l(),
        g_l: leaf_g_l(),
        v_l: leaf_v_l(),
        k_la: leaf_k_la(),
        p_growth: leaf_p_growth(),
    }
}

/// Dataset export: one built-in blend with its species, no noise layout.
pub fn builtin_dataset_file(name: &str) -> Result<ScenarioFile, CliError> {
    let (species, blend, blend_name) = match name {
        "q-ilex" => {
            let (s, b) = builtin_q_ilex::<f64>();
            (s, b, "q-ilex")
        }
        "pinus-pinea" => {
            let (s, b) = builtin_pinus_pinea::<f64>();
            (s, b, "pinus-pinea")
        }
        other => {
            return Err(CliError::validation(format!(
                "unknown built-in `{other}`; expected q-ilex, pinus-pinea or reference"
            )))
        }
    };
    Ok(ScenarioFile {
        species: species.iter().map(species_entry).collect(),
        blend: vec![blend_entry(blend_name, &blend)],
        environment: reference_environment(),
        geometry: GeometryEntry {
            receiver: [100.0, 0.0, 1.0],
            noise_source: vec![],
        },
        simulation: reference_simulation(blend_name),
    })
}

/// The full reference scenario: a Q. ilex transmitter 100 m upwind of the
/// receiver with five P. pinea burst emitters as co-channel noise.
///
/// The SNR fixture rates are explicit: the signal is treated as
/// non-degrading (`signal_k_eff = 0`) and each noise source carries
/// `k_n = 0.4` 1/s. Rates derived from the tabulated constants put the
/// blended signal's decay 15x above the noise's, which erases the
/// distance trend the sweep is meant to expose; see the README.
pub fn reference_file() -> ScenarioFile {
    let (q_species, q_blend) = builtin_q_ilex::<f64>();
    let (p_species, p_blend) = builtin_pinus_pinea::<f64>();
    let mut species: Vec<SpeciesEntry> = q_species.iter().map(species_entry).collect();
    for s in &p_species {
        if !species.iter().any(|e| e.name == s.name()) {
            species.push(species_entry(s));
        }
    }
    let noise = [(2.0, 1.0), (2.0, -1.0), (4.0, 2.0), (4.0, -2.0), (6.0, 0.0)]
        .iter()
        .map(|&(x0, y0)| NoiseEntry {
            x0,
            y0,
            q_n: 10000.0,
            k_n: Some(0.4),
            blend: Some("pinus-pinea".to_string()),
        })
        .collect();
    let mut simulation = reference_simulation("q-ilex");
    simulation.signal_k_eff = Some(0.0);
    ScenarioFile {
        species,
        blend: vec![
            blend_entry("q-ilex", &q_blend),
            blend_entry("pinus-pinea", &p_blend),
        ],
        environment: reference_environment(),
        geometry: GeometryEntry {
            receiver: [100.0, 0.0, 1.0],
            noise_source: noise,
        },
        simulation,
    }
}

/// Built-in scenario by name: `q-ilex`, `pinus-pinea` or `reference`.
pub fn builtin_file(name: &str) -> Result<ScenarioFile, CliError> {
    if name == "reference" {
        Ok(reference_file())
    } else {
        builtin_dataset_file(name)
    }
}

pub fn to_toml(file: &ScenarioFile) -> Result<String, CliError> {
    toml::to_string(file).map_err(|e| CliError::validation(format!("serialize error: {e}")))
}
