//! Independent numerical cross-checks used by the test suites.
//!
//! Everything here is deliberately naive (adaptive Simpson, direct O(N^2)
//! DFT, plain central differences) so it shares no code with the closed
//! forms it validates.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Adaptive-Simpson integral of `f` over [a, b] to absolute tolerance `tol`.
///
/// An infinite upper limit is handled by the caller via a cutoff with a tail
/// bound. The first levels subdivide unconditionally so that a sharp pulse
/// deep inside [a, b] cannot slip between the initial sample points. Fails
/// with `NoConvergence` when the subdivision budget runs out.
pub fn quad_integrate<S: Real>(f: &impl Fn(S) -> S, a: S, b: S, tol: S) -> Result<S> {
    const MAX_DEPTH: u32 = 48;
    const FORCED_LEVELS: u32 = 12;
    let mid = (a + b) * S::lit(0.5);
    let (fa, fm, fb) = (f(a), f(mid), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adapt(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, FORCED_LEVELS)
}

fn simpson<S: Real>(a: S, b: S, fa: S, fm: S, fb: S) -> S {
    (b - a) * (fa + S::lit(4.0) * fm + fb) / S::lit(6.0)
}

#[allow(clippy::too_many_arguments)]
fn adapt<S: Real>(
    f: &impl Fn(S) -> S,
    a: S,
    b: S,
    fa: S,
    fm: S,
    fb: S,
    whole: S,
    tol: S,
    depth: u32,
    forced: u32,
) -> Result<S> {
    let half = S::lit(0.5);
    let mid = (a + b) * half;
    let (lm, rm) = ((a + mid) * half, (mid + b) * half);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, mid, fa, flm, fm);
    let right = simpson(mid, b, fm, frm, fb);
    let err = left + right - whole;
    if forced == 0 && err.abs() <= S::lit(15.0) * tol {
        // Richardson extrapolation of the two estimates.
        return Ok(left + right + err / S::lit(15.0));
    }
    if depth == 0 {
        return Err(Error::NoConvergence);
    }
    let half_tol = tol * half;
    let next_forced = forced.saturating_sub(1);
    let l = adapt(f, a, mid, fa, flm, fm, left, half_tol, depth - 1, next_forced)?;
    let r = adapt(f, mid, b, fm, frm, fb, right, half_tol, depth - 1, next_forced)?;
    Ok(l + r)
}

/// Direct DFT magnitudes of a uniformly sampled series.
///
/// Returns the frequency grid k/(N dt) and |X_k| for k = 0..=N/2.
pub fn dft_magnitude<S: Real>(series: &[S], dt: S) -> (Vec<S>, Vec<S>) {
    let n = series.len();
    assert!(n >= 2, "DFT needs at least two samples");
    let nf = S::from_usize(n).unwrap();
    let mut freqs = Vec::with_capacity(n / 2 + 1);
    let mut mags = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let wk = S::TAU() * S::from_usize(k).unwrap() / nf;
        let mut re = S::zero();
        let mut im = S::zero();
        for (j, &x) in series.iter().enumerate() {
            let ang = wk * S::from_usize(j).unwrap();
            re = re + x * ang.cos();
            im = im - x * ang.sin();
        }
        freqs.push(S::from_usize(k).unwrap() / (nf * dt));
        mags.push((re * re + im * im).sqrt());
    }
    (freqs, mags)
}

/// Central finite difference (f(x+h) - f(x-h)) / 2h.
pub fn fd_derivative<S: Real>(f: &impl Fn(S) -> S, x: S, h: S) -> S {
    assert!(h > S::zero(), "step must be positive");
    (f(x + h) - f(x - h)) / (S::lit(2.0) * h)
}

/// Measures the transmitter's steady-state amplitude ratio at `f` by pool
/// ODE integration, without touching the closed-form transfer function.
///
/// Drives the pools with 1 + 0.5 sin(2π f t) and with a bare unit step,
/// both from empty pools. By linearity the difference of the two emission
/// trajectories is the response to the pure sine (including its turn-on
/// transient, which a settling span plus projection over whole periods
/// suppresses). The amplitude is extracted by quadrature projection.
pub fn sinusoid_gain_experiment<S: Real>(
    species: &crate::species::VocSpecies<S>,
    f: S,
) -> Result<S> {
    use crate::transmitter::{simulate_pools, ProductionSignal};

    let kin = species.kinetics()?;
    let (mean, amp) = (S::one(), S::lit(0.5));
    let period = S::one() / f;

    // Integer samples per period so the projection covers whole periods.
    let dt_max = S::lit(0.1) / kin.max_rate();
    let per_period = (period / dt_max).widen().ceil().max(32.0) as usize;
    let dt = period / S::from_usize(per_period).unwrap();

    // Settle long enough for the aqueous-pool mode to die; the lipid-pool
    // mode is far slower but its turn-on amplitude is tiny and the
    // projection suppresses what remains.
    let settle = (S::lit(2.0) * period).max(S::lit(7.0) / kin.k_a);
    let start = (settle / dt).widen().ceil() as usize;
    let projection_periods = 3usize;
    let take = projection_periods * per_period;
    let t_end = dt * S::from_usize(start + take + 1).unwrap();

    let sin_run = simulate_pools(
        species,
        &ProductionSignal::Sinusoid {
            mean,
            amplitude: amp,
            frequency: f,
        },
        (S::zero(), t_end),
        dt,
    )?;
    let step_run = simulate_pools(
        species,
        &ProductionSignal::Step { rate: mean },
        (S::zero(), t_end),
        dt,
    )?;

    let w = S::TAU() * f;
    let mut re = S::zero();
    let mut im = S::zero();
    for i in start..start + take {
        let t = sin_run[i].0.t;
        let e = sin_run[i].1 - step_run[i].1;
        re = re + e * (w * t).cos() * dt;
        im = im + e * (w * t).sin() * dt;
    }
    let duration = dt * S::from_usize(take).unwrap();
    let out_amp = S::lit(2.0) * (re * re + im * im).sqrt() / duration;
    Ok(out_amp / amp)
}
