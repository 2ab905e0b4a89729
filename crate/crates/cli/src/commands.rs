//! CSV-producing command implementations.
//!
//! Every command emits a header row plus newline-terminated data rows;
//! floats are printed in scientific notation with nine significant digits
//! so reruns are byte-identical.

use std::fmt::Write as _;

use voclink_core::atmosphere::{blend_k_eff, k_eff};
use voclink_core::link::{capacity, end_to_end_response};
use voclink_core::noise::{snr_multi, PuffSource};
use voclink_core::plume::PlumeChannelParams;
use voclink_core::puff::PuffChannelParams;
use voclink_core::receiver::uptake_response;
use voclink_core::transmitter::transfer_function;
use voclink_core::{FrequencyGrid64, VocSpecies64};

use crate::config::Scenario;
use crate::sweep::parse_values;
use crate::CliError;

fn sci(v: f64) -> String {
    format!("{v:.8e}")
}

fn push_row(out: &mut String, fields: &[String]) {
    let _ = writeln!(out, "{}", fields.join(","));
}

fn values_or(arg: &Option<String>, default: &str) -> Result<Vec<f64>, CliError> {
    match arg {
        Some(spec) => parse_values(spec),
        None => parse_values(default),
    }
}

fn user_grid(arg: &Option<String>) -> Result<Option<FrequencyGrid64>, CliError> {
    match arg {
        Some(spec) => {
            let values = parse_values(spec)?;
            Ok(Some(FrequencyGrid64::new(values)?))
        }
        None => Ok(None),
    }
}

/// Species named on the command line, or the signal blend's components;
/// `all` selects every species in the scenario.
fn select_species<'a>(
    sc: &'a Scenario,
    arg: &Option<String>,
) -> Result<Vec<&'a VocSpecies64>, CliError> {
    match arg.as_deref() {
        None => sc
            .signal()
            .components()
            .iter()
            .map(|c| sc.species_by_name(c.species.name()))
            .collect(),
        Some("all") => Ok(sc.species.iter().collect()),
        Some(list) => list
            .split(',')
            .map(|name| sc.species_by_name(name.trim()))
            .collect(),
    }
}

fn puff_params(
    sc: &Scenario,
    x: f64,
    u: f64,
    k: f64,
) -> Result<PuffChannelParams<f64>, CliError> {
    let (_, y, z) = sc.geometry.receiver;
    Ok(PuffChannelParams::new(
        sc.signal().q0(),
        x,
        y,
        z,
        sc.environment.release_height,
        u,
        sc.environment.stability_class,
        k,
    )?)
}

pub fn tx_gain(
    sc: &Scenario,
    species: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => FrequencyGrid64::log_spaced(1e-6, 1.0, 121)?,
    };
    let mut out = String::from("f_hz,species,normalized_gain,attenuation_db\n");
    for sp in select_species(sc, species)? {
        let resp = transfer_function(sp, &grid)?;
        let att = resp.attenuation_db();
        for (i, &f) in grid.points().iter().enumerate() {
            push_row(
                &mut out,
                &[
                    sci(f),
                    sp.name().to_string(),
                    sci(resp.normalized_gain()[i]),
                    sci(att[i]),
                ],
            );
        }
    }
    Ok(out)
}

pub fn tx_delay(
    sc: &Scenario,
    species: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => FrequencyGrid64::log_spaced(1e-6, 1.0, 121)?,
    };
    let mut out = String::from("f_hz,species,phase_rad,delay_s\n");
    for sp in select_species(sc, species)? {
        let resp = transfer_function(sp, &grid)?;
        for (i, &f) in grid.points().iter().enumerate() {
            push_row(
                &mut out,
                &[
                    sci(f),
                    sp.name().to_string(),
                    sci(resp.phase()[i]),
                    sci(resp.delay()[i]),
                ],
            );
        }
    }
    Ok(out)
}

pub fn channel_gain(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    species: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    let xs = values_or(x, "100")?;
    let us = match u {
        Some(spec) => parse_values(spec)?,
        None => vec![sc.environment.wind_speed],
    };
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => FrequencyGrid64::log_spaced(1e-4, 1.0, 101)?,
    };
    let selected = select_species(sc, species)?;
    let mut out = String::from("x_m,u_mps,f_hz,species,gain_log10,attenuation_db\n");
    for &x in &xs {
        for &u in &us {
            for sp in &selected {
                let p = puff_params(sc, x, u, k_eff(sp, &sc.environment))?;
                let dc = p.log10_gain(0.0);
                for &f in grid.points() {
                    let g = p.log10_gain(f);
                    push_row(
                        &mut out,
                        &[
                            sci(x),
                            sci(u),
                            sci(f),
                            sp.name().to_string(),
                            sci(g),
                            sci(20.0 * (g - dc)),
                        ],
                    );
                }
            }
        }
    }
    Ok(out)
}

pub fn channel_delay(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    species: &Option<String>,
) -> Result<String, CliError> {
    let xs = values_or(x, "10:10:200")?;
    let us = match u {
        Some(spec) => parse_values(spec)?,
        None => vec![sc.environment.wind_speed],
    };
    let k = match species {
        Some(name) => k_eff(sc.species_by_name(name.trim())?, &sc.environment),
        None => blend_k_eff(sc.signal(), &sc.environment),
    };
    let mut out = String::from("x_m,u_mps,delay_s\n");
    for &x in &xs {
        for &u in &us {
            let p = puff_params(sc, x, u, k)?;
            push_row(&mut out, &[sci(x), sci(u), sci(p.group_delay())]);
        }
    }
    Ok(out)
}

pub fn plume_gain(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    let xs = values_or(x, "100")?;
    let us = match u {
        Some(spec) => parse_values(spec)?,
        None => vec![sc.environment.wind_speed],
    };
    let k = blend_k_eff(sc.signal(), &sc.environment);
    let (_, y, z) = sc.geometry.receiver;

    let make = |x: f64, u: f64| -> Result<PlumeChannelParams<f64>, CliError> {
        let mut p = PlumeChannelParams::new(
            sc.signal().q0(),
            x,
            y,
            z,
            sc.environment.release_height,
            u,
            sc.environment.stability_class,
            k,
            sc.plume_window,
        )?;
        if let Some(df) = sc.delta_f {
            p = p.with_delta_f(df);
        }
        Ok(p)
    };

    // Default grid: zero to five spectral widths in 2% steps.
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => {
            let df = make(xs[0], us[0])?.delta_f();
            FrequencyGrid64::new((0..=50).map(|i| i as f64 * df / 10.0).collect())?
        }
    };

    let mut out = String::from("x_m,u_mps,f_hz,gain,normalized_gain,attenuation_db\n");
    for &x in &xs {
        for &u in &us {
            let resp = make(x, u)?.response(&grid)?;
            let att = resp.attenuation_db();
            for (i, &f) in grid.points().iter().enumerate() {
                push_row(
                    &mut out,
                    &[
                        sci(x),
                        sci(u),
                        sci(f),
                        sci(resp.gain()[i]),
                        sci(resp.normalized_gain()[i]),
                        sci(att[i]),
                    ],
                );
            }
        }
    }
    Ok(out)
}

fn noise_sources(sc: &Scenario) -> Result<Vec<PuffSource<f64>>, CliError> {
    let sources: Vec<PuffSource<f64>> = sc
        .geometry
        .noise_sources
        .iter()
        .map(PuffSource::from)
        .collect();
    if sources.is_empty() {
        return Err(CliError::validation(
            "scenario defines no noise sources; nothing to sweep",
        ));
    }
    Ok(sources)
}

pub fn snr_sweep(sc: &Scenario, x: &Option<String>) -> Result<String, CliError> {
    let xs = values_or(x, "10:10:200")?;
    let signal = PuffSource::at_origin(sc.signal().q0(), sc.signal_rate());
    let noises = noise_sources(sc)?;
    let (_, y, _) = sc.geometry.receiver;
    let mut out = String::from("x_m,n_noise,snr_linear,snr_db\n");
    for &x in &xs {
        for n in 1..=noises.len() {
            let s = snr_multi(&[signal], &noises[..n], &sc.environment, (x, y))?;
            push_row(
                &mut out,
                &[sci(x), n.to_string(), sci(s.linear), sci(s.db)],
            );
        }
    }
    Ok(out)
}

pub fn bandwidth_sweep(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
) -> Result<String, CliError> {
    let xs = values_or(x, "10:10:200")?;
    let us = match u {
        Some(spec) => parse_values(spec)?,
        None => vec![sc.environment.wind_speed],
    };
    let mut out = String::from("x_m,u_mps,bandwidth_hz\n");
    for &x in &xs {
        for &u in &us {
            let p = puff_params(sc, x, u, 0.0)?;
            push_row(&mut out, &[sci(x), sci(u), sci(p.bandwidth_3db())]);
        }
    }
    Ok(out)
}

pub fn capacity_sweep(sc: &Scenario, x: &Option<String>) -> Result<String, CliError> {
    let xs = values_or(x, "10:10:200")?;
    let u = sc.environment.wind_speed;
    let signal = PuffSource::at_origin(sc.signal().q0(), sc.signal_rate());
    let noises = noise_sources(sc)?;
    let (_, y, _) = sc.geometry.receiver;
    let mut out = String::from("x_m,n_noise,bandwidth_hz,snr_linear,capacity_bps\n");
    for &x in &xs {
        let bw = puff_params(sc, x, u, 0.0)?.bandwidth_3db();
        for n in 1..=noises.len() {
            let s = snr_multi(&[signal], &noises[..n], &sc.environment, (x, y))?;
            push_row(
                &mut out,
                &[
                    sci(x),
                    n.to_string(),
                    sci(bw),
                    sci(s.linear),
                    sci(capacity(bw, s.linear)),
                ],
            );
        }
    }
    Ok(out)
}

fn e2e_rows(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    species: &Option<String>,
    f: &Option<String>,
    delay_view: bool,
) -> Result<String, CliError> {
    let xs = values_or(x, "100")?;
    let us = match u {
        Some(spec) => parse_values(spec)?,
        None => vec![sc.environment.wind_speed],
    };
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => FrequencyGrid64::log_spaced_with_zero(1e-6, 1.0, 121)?,
    };
    // Default to the blend's leading component.
    let selected = match species {
        Some(_) => select_species(sc, species)?,
        None => vec![sc.species_by_name(sc.signal().components()[0].species.name())?],
    };
    let rx = uptake_response(&sc.leaf, &grid)?;
    let mut out = String::from(if delay_view {
        "x_m,u_mps,f_hz,species,delay_s\n"
    } else {
        "x_m,u_mps,f_hz,species,normalized_gain,attenuation_db\n"
    });
    for &x in &xs {
        for &u in &us {
            for sp in &selected {
                let tx = transfer_function(sp, &grid)?;
                let ch = puff_params(sc, x, u, k_eff(sp, &sc.environment))?.response(&grid)?;
                let e2e = end_to_end_response(&tx, &ch, &rx)?;
                let att = e2e.attenuation_db();
                for (i, &f) in grid.points().iter().enumerate() {
                    if delay_view {
                        push_row(
                            &mut out,
                            &[
                                sci(x),
                                sci(u),
                                sci(f),
                                sp.name().to_string(),
                                sci(e2e.delay()[i]),
                            ],
                        );
                    } else {
                        push_row(
                            &mut out,
                            &[
                                sci(x),
                                sci(u),
                                sci(f),
                                sp.name().to_string(),
                                sci(e2e.normalized_gain()[i]),
                                sci(att[i]),
                            ],
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn e2e_gain(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    species: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    e2e_rows(sc, x, u, species, f, false)
}

pub fn e2e_delay(
    sc: &Scenario,
    x: &Option<String>,
    u: &Option<String>,
    species: &Option<String>,
    f: &Option<String>,
) -> Result<String, CliError> {
    e2e_rows(sc, x, u, species, f, true)
}

pub fn rx_response(sc: &Scenario, f: &Option<String>) -> Result<String, CliError> {
    let grid = match user_grid(f)? {
        Some(g) => g,
        None => FrequencyGrid64::log_spaced(1e-3, 1e2, 121)?,
    };
    let resp = uptake_response(&sc.leaf, &grid)?;
    let att = resp.attenuation_db();
    let mut out = String::from("f_hz,normalized_gain,attenuation_db,delay_s\n");
    for (i, &f) in grid.points().iter().enumerate() {
        push_row(
            &mut out,
            &[
                sci(f),
                sci(resp.normalized_gain()[i]),
                sci(att[i]),
                sci(resp.delay()[i]),
            ],
        );
    }
    Ok(out)
}
