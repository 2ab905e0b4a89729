//! Classic fixed-step fourth-order Runge-Kutta for the small linear systems
//! in the transmitter and receiver models.

use crate::scalar::Real;

/// One RK4 step of y' = f(t, y).
pub fn rk4_step<S: Real, const N: usize>(
    f: &impl Fn(S, &[S; N]) -> [S; N],
    t: S,
    y: &[S; N],
    dt: S,
) -> [S; N] {
    let half = S::lit(0.5);
    let sixth = S::lit(1.0 / 6.0);
    let two = S::lit(2.0);

    let k1 = f(t, y);
    let k2 = f(t + half * dt, &offset(y, &k1, half * dt));
    let k3 = f(t + half * dt, &offset(y, &k2, half * dt));
    let k4 = f(t + dt, &offset(y, &k3, dt));

    let mut out = [S::zero(); N];
    for i in 0..N {
        out[i] = y[i] + dt * sixth * (k1[i] + two * k2[i] + two * k3[i] + k4[i]);
    }
    out
}

fn offset<S: Real, const N: usize>(y: &[S; N], k: &[S; N], h: S) -> [S; N] {
    let mut out = [S::zero(); N];
    for i in 0..N {
        out[i] = y[i] + h * k[i];
    }
    out
}
