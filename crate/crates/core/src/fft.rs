//! Radix-2 FFT used by the fast Hartley path.
//!
//! The kernel sign is a parameter: `Sign::Positive` computes
//! `X[k] = Σ x[n] exp(+2πi nk/N)`, the convention of the unitary DFT in
//! [`crate::transform::dft_apply`] (without the 1/√N factor).

use num_complex::Complex64;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }
}

/// Precomputed twiddles and bit-reversal table for one power-of-two length.
#[derive(Debug, Clone)]
pub struct Radix2 {
    len: usize,
    sign: Sign,
    // twiddles[k] = exp(sign·2πi k/len), k < len/2
    twiddles: Vec<Complex64>,
    bitrev: Vec<usize>,
}

impl Radix2 {
    /// `len` must be a power of two (including 1).
    pub fn new(len: usize, sign: Sign) -> Self {
        assert!(
            len.is_power_of_two(),
            "radix-2 length must be a power of two"
        );
        let s = sign.value();
        let twiddles = (0..len / 2)
            .map(|k| Complex64::from_polar(1.0, s * TAU * k as f64 / len as f64))
            .collect();
        let bits = len.trailing_zeros();
        let bitrev = (0..len)
            .map(|i| {
                if bits == 0 {
                    0
                } else {
                    i.reverse_bits() >> (usize::BITS - bits)
                }
            })
            .collect();
        Self {
            len,
            sign,
            twiddles,
            bitrev,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// In-place iterative decimation-in-time transform.
    pub fn process(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.len);
        let n = self.len;
        for i in 0..n {
            let j = self.bitrev[i];
            if i < j {
                data.swap(i, j);
            }
        }
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for start in (0..n).step_by(2 * half) {
                for k in 0..half {
                    let w = self.twiddles[k * stride];
                    let a = data[start + k];
                    let b = data[start + k + half] * w;
                    data[start + k] = a + b;
                    data[start + k + half] = a - b;
                }
            }
            half *= 2;
        }
    }
}

/// Real-input transform of even power-of-two length via a half-length
/// complex FFT. Returns the full spectrum of length `len`.
#[derive(Debug, Clone)]
pub struct RealFft {
    len: usize,
    half: Radix2,
    // exp(sign·2πi k/len), k <= len/2
    post: Vec<Complex64>,
}

impl RealFft {
    pub fn new(len: usize, sign: Sign) -> Self {
        assert!(
            len >= 2 && len.is_power_of_two(),
            "real FFT length must be a power of two >= 2"
        );
        let s = sign.value();
        let post = (0..=len / 2)
            .map(|k| Complex64::from_polar(1.0, s * TAU * k as f64 / len as f64))
            .collect();
        Self {
            len,
            half: Radix2::new(len / 2, sign),
            post,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn process(&self, input: &[f64]) -> Vec<Complex64> {
        assert_eq!(input.len(), self.len);
        let n = self.len;
        let m = n / 2;
        let mut z: Vec<Complex64> = input
            .chunks_exact(2)
            .map(|p| Complex64::new(p[0], p[1]))
            .collect();
        self.half.process(&mut z);

        // Z[k] = E[k] + i O[k] with E, O the transforms of the even and odd samples.
        let i_inv = Complex64::new(0.0, -0.5);
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for k in 0..=m {
            let zk = z[k % m];
            let zc = z[(m - k % m) % m].conj();
            let even = (zk + zc) * 0.5;
            let odd = (zk - zc) * i_inv;
            out[k] = even + self.post[k] * odd;
        }
        for k in (m + 1)..n {
            out[k] = out[n - k].conj();
        }
        out
    }
}
