use super::rng::PathRng;

/// Paired increments driving one Taylor step of length `h`.
///
/// `dw = sqrt(h) u1` is the Brownian increment and
/// `dz = (h^{3/2} / 2)(u1 + u2 / sqrt(3))` the integral of the Brownian
/// path over the step, so that `E[dw dz] = h^2/2` and `E[dz^2] = h^3/3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseIncrements {
    pub h: f64,
    pub dw: f64,
    pub dz: f64,
}

impl NoiseIncrements {
    pub fn new(u1: f64, u2: f64, h: f64) -> Self {
        Self {
            h,
            dw: h.sqrt() * u1,
            dz: 0.5 * h.powf(1.5) * (u1 + u2 / 3f64.sqrt()),
        }
    }

    pub fn zero(h: f64) -> Self {
        Self { h, dw: 0.0, dz: 0.0 }
    }

    pub fn draw(rng: &mut PathRng, h: f64) -> Self {
        let u1 = rng.standard_normal();
        let u2 = rng.standard_normal();
        Self::new(u1, u2, h)
    }

    /// Increments over the union of consecutive sub-steps of one Brownian path.
    ///
    /// The integral term picks up `(W(s_j) - W(t_0)) * h_j` for each sub-step
    /// started at `s_j`, which keeps coarse and fine steps on the same path.
    pub fn combine(steps: &[NoiseIncrements]) -> Self {
        let mut h = 0.0;
        let mut w = 0.0;
        let mut z = 0.0;
        for s in steps {
            z += w * s.h + s.dz;
            w += s.dw;
            h += s.h;
        }
        Self { h, dw: w, dz: z }
    }
}
