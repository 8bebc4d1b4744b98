//! One- and two-dimensional complex FFTs: mixed radix for sizes with small prime factors,
//! Bluestein's chirp transform otherwise.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::Zero;
use rayon::prelude::*;

/// Largest prime handled by a direct butterfly.
const MAX_RADIX: usize = 13;

fn factorize(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for p in [4, 2, 3, 5] {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    let mut p = 7;
    while n > 1 {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 2;
    }
    out
}

#[derive(Clone, Debug)]
enum Algorithm {
    MixedRadix { factors: Vec<usize>, twiddles: Vec<Complex64> },
    Bluestein { chirp: Vec<Complex64>, kernel: Vec<Complex64>, inner: Box<FftPlan> },
}

/// A forward transform `X_k = Σ x_j e^{−2πi jk/n}` of fixed length.
#[derive(Clone, Debug)]
pub struct FftPlan {
    len: usize,
    algorithm: Algorithm,
}

impl FftPlan {
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "FFT length must be positive");
        let factors = factorize(len);
        if factors.iter().all(|&p| p <= MAX_RADIX) {
            let twiddles = (0..len).map(|i| Complex64::from_polar(1.0, -2.0 * PI * i as f64 / len as f64)).collect();
            return FftPlan { len, algorithm: Algorithm::MixedRadix { factors, twiddles } };
        }
        let m = (2 * len - 1).next_power_of_two();
        let two_n = 2 * len as u128;
        // k² mod 2n keeps the chirp phase small for large k.
        let chirp: Vec<Complex64> = (0..len)
            .map(|k| {
                let e = (k as u128 * k as u128 % two_n) as f64;
                Complex64::from_polar(1.0, -PI * e / len as f64)
            })
            .collect();
        let inner = FftPlan::new(m);
        let mut kernel = vec![Complex64::zero(); m];
        kernel[0] = chirp[0].conj();
        for k in 1..len {
            kernel[k] = chirp[k].conj();
            kernel[m - k] = chirp[k].conj();
        }
        inner.process(&mut kernel);
        FftPlan { len, algorithm: Algorithm::Bluestein { chirp, kernel, inner: Box::new(inner) } }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn process(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.len, "buffer length does not match the plan");
        match &self.algorithm {
            Algorithm::MixedRadix { factors, twiddles } => {
                let input = data.to_vec();
                mixed_radix(&input, 1, data, factors, twiddles, self.len);
            }
            Algorithm::Bluestein { chirp, kernel, inner } => {
                let m = kernel.len();
                let mut a = vec![Complex64::zero(); m];
                for k in 0..self.len {
                    a[k] = data[k] * chirp[k];
                }
                inner.process(&mut a);
                for (x, y) in a.iter_mut().zip(kernel) {
                    *x *= y;
                }
                inner.process_inverse_unscaled(&mut a);
                let scale = 1.0 / m as f64;
                for k in 0..self.len {
                    data[k] = a[k] * chirp[k] * scale;
                }
            }
        }
    }

    /// `x_j = Σ X_k e^{2πi jk/n}`, without the `1/n`.
    pub fn process_inverse_unscaled(&self, data: &mut [Complex64]) {
        data.iter_mut().for_each(|v| *v = v.conj());
        self.process(data);
        data.iter_mut().for_each(|v| *v = v.conj());
    }
}

fn mixed_radix(x: &[Complex64], stride: usize, out: &mut [Complex64], factors: &[usize], tw: &[Complex64], n: usize) {
    let len = out.len();
    if len == 1 {
        out[0] = x[0];
        return;
    }
    let p = factors[0];
    let m = len / p;
    for r in 0..p {
        mixed_radix(&x[r * stride..], stride * p, &mut out[r * m..(r + 1) * m], &factors[1..], tw, n);
    }
    let step = n / len;
    let mut tmp = [Complex64::zero(); MAX_RADIX];
    for k in 0..m {
        for r in 0..p {
            tmp[r] = out[r * m + k] * tw[r * k * step];
        }
        for q in 0..p {
            let mut s = tmp[0];
            for r in 1..p {
                s += tmp[r] * tw[(r * q % p) * m * step];
            }
            out[q * m + k] = s;
        }
    }
}

/// In-place 2-D transform of a row-major `rows × cols` array; rows and columns run in parallel.
pub fn fft2(data: &mut [Complex64], rows: usize, cols: usize, inverse: bool) {
    assert_eq!(data.len(), rows * cols);
    let row_plan = FftPlan::new(cols);
    let col_plan = FftPlan::new(rows);
    let run = |plan: &FftPlan, buf: &mut [Complex64]| {
        if inverse {
            plan.process_inverse_unscaled(buf)
        } else {
            plan.process(buf)
        }
    };
    data.par_chunks_mut(cols).for_each(|row| run(&row_plan, row));
    let mut t = transpose(data, rows, cols);
    t.par_chunks_mut(rows).for_each(|col| run(&col_plan, col));
    data.copy_from_slice(&transpose(&t, cols, rows));
}

fn transpose(data: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}
