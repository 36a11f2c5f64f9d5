// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PulseKind {
    Gaussian,
    Sech,
    Constant,
}

/// Complex pulse amplitude `A f((t - center)/width) e^{i phase}`.
///
/// For `Gaussian` the width is the standard deviation sigma, for `Sech` it
/// is the inverse rate. `Constant` ignores center and width.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PulseEnvelope<T: Real> {
    pub kind: PulseKind,
    pub amplitude: T,
    pub center: T,
    pub width: T,
    pub phase: T,
}

impl<T: Real> PulseEnvelope<T> {
    pub fn gaussian(amplitude: T, center: T, sigma: T) -> Result<Self> {
        Self { kind: PulseKind::Gaussian, amplitude, center, width: sigma, phase: T::zero() }
            .validated()
    }

    pub fn sech(amplitude: T, center: T, width: T) -> Result<Self> {
        Self { kind: PulseKind::Sech, amplitude, center, width, phase: T::zero() }.validated()
    }

    pub fn constant(amplitude: T) -> Self {
        Self {
            kind: PulseKind::Constant,
            amplitude,
            center: T::zero(),
            width: T::one(),
            phase: T::zero(),
        }
    }

    pub fn with_phase(mut self, phase: T) -> Self {
        self.phase = phase;
        self
    }

    /// Checks `width > 0` for shaped pulses and finiteness of every field.
    pub fn validated(self) -> Result<Self> {
        let finite = [self.amplitude, self.center, self.width, self.phase].iter().all(|x| x.is_finite());
        if !finite {
            return Err(Error::Domain("pulse parameters must be finite".into()));
        }
        if self.kind != PulseKind::Constant && self.width <= T::zero() {
            return Err(Error::Domain(format!("pulse width must be positive, got {}", self.width)));
        }
        Ok(self)
    }

    /// Real envelope without the phase factor.
    pub fn shape(&self, t: T) -> T {
        match self.kind {
            PulseKind::Constant => self.amplitude,
            PulseKind::Gaussian => {
                let x = (t - self.center) / self.width;
                self.amplitude * (-(x * x) / T::lit(2.0)).exp()
            }
            PulseKind::Sech => {
                let x = ((t - self.center) / self.width).abs();
                // sech(x) = 2 e^{-x} / (1 + e^{-2x}) avoids cosh overflow
                let e = (-x).exp();
                self.amplitude * T::lit(2.0) * e / (T::one() + e * e)
            }
        }
    }

    pub fn eval(&self, t: T) -> Complex<T> {
        Complex::from_polar(self.shape(t), self.phase)
    }

    /// Upper bound on `|eval(t)|`.
    pub fn bound(&self) -> T {
        self.amplitude.abs()
    }
}

/// Evaluates the envelope at `t`, phase included.
pub fn pulse_eval<T: Real>(env: &PulseEnvelope<T>, t: T) -> Complex<T> {
    env.eval(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peaks_and_one_sigma() {
        let g = PulseEnvelope::gaussian(2.0, 1.5, 0.5).unwrap();
        assert_eq!(pulse_eval(&g, 1.5), Complex::new(2.0, 0.0));
        assert!((pulse_eval(&g, 2.0).re / 2.0 - (-0.5f64).exp()).abs() < 1e-15);
        assert!((pulse_eval(&g, 2.0).re / 2.0 - 0.6065).abs() < 1e-4);
        let s = PulseEnvelope::sech(3.0, -1.0, 0.2).unwrap();
        assert_eq!(pulse_eval(&s, -1.0).re, 3.0);
        assert!((s.shape(-0.8) - 3.0 / 1f64.cosh()).abs() < 1e-15);
        assert_eq!(PulseEnvelope::constant(0.7).eval(123.0).re, 0.7);
    }

    #[test]
    fn phase_rotates_amplitude() {
        let s = PulseEnvelope::sech(1.0, 0.0, 1.0).unwrap().with_phase(std::f64::consts::FRAC_PI_2);
        let z = s.eval(0.0);
        assert!(z.re.abs() < 1e-16 && (z.im - 1.0).abs() < 1e-16);
    }

    #[test]
    fn sech_far_tail_is_finite() {
        let s = PulseEnvelope::sech(1.0, 0.0, 1e-3).unwrap();
        assert_eq!(s.shape(10.0), 0.0);
    }

    #[test]
    fn rejects_nonpositive_width() {
        assert!(PulseEnvelope::gaussian(1.0, 0.0, 0.0).is_err());
        assert!(PulseEnvelope::sech(1.0, 0.0, -1.0).is_err());
        assert!(PulseEnvelope::gaussian(1.0, f64::NAN, 1.0).is_err());
    }
}
