//! Monte Carlo sampling of random 4-cycle matrices.
//!
//! Each matrix is keyed by `(seed, index)`: the generator is ChaCha8 seeded
//! with `seed` and positioned on stream `index`, so a record never depends on
//! how many others were drawn before it or on which thread drew it.

use std::collections::BTreeMap;
use std::io::Write;

use fourcycle::{membership, Complex, CycleMatrix4, RegionStatus, Result, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{fmt_f64, EXIT_OK, EXIT_OUTSIDE};

pub const CSV_HEADER: &str = "seed,index,a1,a2,a3,a4,re,im,status";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRecord {
    pub seed: u64,
    pub index: u64,
    pub alpha: [f64; 4],
    pub eigenvalue: Complex,
    pub status: RegionStatus,
}

/// Self-loop weights i.i.d. uniform on `[0, 1)` for matrix `index`.
pub fn sample_alpha(seed: u64, index: u64) -> [f64; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    std::array::from_fn(|_| rng.random::<f64>())
}

/// The four records (one per eigenvalue) of matrix `index`.
pub fn matrix_records(seed: u64, index: u64, tol: &Tolerance) -> Result<[SampleRecord; 4]> {
    let alpha = sample_alpha(seed, index);
    let spectrum = CycleMatrix4::new(alpha)?.spectrum(tol)?;
    Ok(spectrum.map(|eigenvalue| SampleRecord {
        seed,
        index,
        alpha,
        eigenvalue,
        status: membership(eigenvalue, tol).status,
    }))
}

/// Records for matrices `0..n`, computed in parallel and returned in index order.
pub fn sample_records(n: u64, seed: u64, tol: &Tolerance) -> Result<Vec<SampleRecord>> {
    let per_matrix: Vec<[SampleRecord; 4]> = (0..n)
        .into_par_iter()
        .map(|index| matrix_records(seed, index, tol))
        .collect::<Result<_>>()?;
    Ok(per_matrix.into_iter().flatten().collect())
}

pub fn write_csv(records: &[SampleRecord], out: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.seed,
            r.index,
            fmt_f64(r.alpha[0]),
            fmt_f64(r.alpha[1]),
            fmt_f64(r.alpha[2]),
            fmt_f64(r.alpha[3]),
            fmt_f64(r.eigenvalue.re),
            fmt_f64(r.eigenvalue.im),
            r.status.as_str()
        )?;
    }
    Ok(())
}

/// Verdict counts in a fixed order.
pub fn summarize(records: &[SampleRecord]) -> BTreeMap<&'static str, usize> {
    let mut counts = BTreeMap::new();
    for r in records {
        *counts.entry(r.status.as_str()).or_insert(0) += 1;
    }
    counts
}

/// Exit code of a sampling run: `EXIT_OUTSIDE` if any verdict is Outside.
pub fn exit_code(records: &[SampleRecord]) -> u8 {
    if records.iter().any(|r| r.status.is_outside()) {
        EXIT_OUTSIDE
    } else {
        EXIT_OK
    }
}

pub fn summary_line(n: u64, records: &[SampleRecord]) -> String {
    let parts: Vec<String> = summarize(records)
        .into_iter()
        .map(|(status, count)| format!("{status}={count}"))
        .collect();
    format!("matrices={n} eigenvalues={} {}", records.len(), parts.join(" "))
}
