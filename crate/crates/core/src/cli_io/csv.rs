//! CSV exchange for the hexagonal FFT: samples as `j1,j2,re,im`, spectra as `k1,k2,k3,re,im`.

use num::complex::Complex64;

use super::rule_file::format_decimal;
use crate::error::{Error, Result};
use crate::hexfft::{frequency_labels, HexSampleGrid, HexSpectrum};

pub const SAMPLE_HEADER: &str = "j1,j2,re,im";
pub const SPECTRUM_HEADER: &str = "k1,k2,k3,re,im";

fn rows<'a>(text: &'a str, header: &str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    let header = header.to_string();
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && *l != header)
        .map(|(i, l)| (i, l.split(',').map(str::trim).collect()))
}

fn field<T: std::str::FromStr>(cols: &[&str], i: usize, line: usize) -> Result<T> {
    cols.get(i)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("line {line}: bad or missing field {}", i + 1)))
}

fn width(cols: &[&str], want: usize, line: usize) -> Result<()> {
    if cols.len() != want {
        return Err(Error::Parse(format!("line {line}: expected {want} fields, got {}", cols.len())));
    }
    Ok(())
}

/// Reads `n²` sample rows in any order.
pub fn read_samples(text: &str, n: usize) -> Result<HexSampleGrid> {
    let mut values = vec![None; n * n];
    let mut count = 0;
    for (line, cols) in rows(text, SAMPLE_HEADER) {
        width(&cols, 4, line)?;
        let j: [i64; 2] = [field(&cols, 0, line)?, field(&cols, 1, line)?];
        count += 1;
        if !(0..n as i64).contains(&j[0]) || !(0..n as i64).contains(&j[1]) {
            return Err(Error::IndexOutOfRange { index: j, n: n as u32 });
        }
        let slot = &mut values[j[0] as usize * n + j[1] as usize];
        if slot.is_some() {
            return Err(Error::Parse(format!("line {line}: duplicate index {j:?}")));
        }
        *slot = Some(Complex64::new(field(&cols, 2, line)?, field(&cols, 3, line)?));
    }
    if count != n * n {
        return Err(Error::SampleCountMismatch { expected: n * n, got: count });
    }
    HexSampleGrid::new(n, values.into_iter().map(|v| v.expect("all n² slots filled")).collect())
}

pub fn write_samples(grid: &HexSampleGrid) -> String {
    let mut out = format!("{SAMPLE_HEADER}\n");
    for (i, v) in grid.values.iter().enumerate() {
        out += &format!("{},{},{},{}\n", i / grid.n, i % grid.n, format_decimal(v.re), format_decimal(v.im));
    }
    out
}

/// Reads a spectrum; every frequency of `𝕂_n†` must appear once.
pub fn read_spectrum(text: &str, n: usize) -> Result<HexSpectrum> {
    let labels = frequency_labels(n);
    let mut coeffs = vec![None; n * n];
    let mut count = 0;
    for (line, cols) in rows(text, SPECTRUM_HEADER) {
        width(&cols, 5, line)?;
        let k: [i64; 3] = [field(&cols, 0, line)?, field(&cols, 1, line)?, field(&cols, 2, line)?];
        count += 1;
        let pos = labels
            .iter()
            .position(|l| *l == k)
            .ok_or_else(|| Error::Parse(format!("line {line}: {k:?} is not a frequency for n = {n}")))?;
        if coeffs[pos].is_some() {
            return Err(Error::Parse(format!("line {line}: duplicate frequency {k:?}")));
        }
        coeffs[pos] = Some(Complex64::new(field(&cols, 3, line)?, field(&cols, 4, line)?));
    }
    if count != n * n {
        return Err(Error::SampleCountMismatch { expected: n * n, got: count });
    }
    Ok(HexSpectrum { n, labels, coeffs: coeffs.into_iter().map(|c| c.expect("all n² slots filled")).collect() })
}

pub fn write_spectrum(spec: &HexSpectrum) -> String {
    let mut out = format!("{SPECTRUM_HEADER}\n");
    for (k, c) in spec.labels.iter().zip(&spec.coeffs) {
        out += &format!("{},{},{},{},{}\n", k[0], k[1], k[2], format_decimal(c.re), format_decimal(c.im));
    }
    out
}
