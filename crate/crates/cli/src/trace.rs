//! Boundary traces as CSV rows `curve,param,re,im,G`.

use std::io::Write;

use fourcycle::region::{g, trace_cl, trace_cr};
use fourcycle::{Complex, Result, Tolerance};

use crate::fmt_f64;

pub const CSV_HEADER: &str = "curve,param,re,im,G";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    Cr,
    Cl,
    Region,
}

/// One sampled boundary point. `param` is `x` on CR, `alpha` on CL and the
/// real coordinate on the REAL endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub curve: &'static str,
    pub param: f64,
    pub lam: Complex,
}

impl TraceRow {
    pub fn g(&self) -> f64 {
        g(self.lam.re, self.lam.im)
    }
}

pub fn cr_rows(n: usize) -> Vec<TraceRow> {
    trace_cr(n)
        .into_iter()
        .map(|lam| TraceRow {
            curve: "CR",
            param: lam.im,
            lam,
        })
        .collect()
}

pub fn cl_rows(n: usize, tol: &Tolerance) -> Result<Vec<TraceRow>> {
    Ok(trace_cl(n, tol)?
        .into_iter()
        .map(|p| TraceRow {
            curve: "CL",
            param: p.alpha,
            lam: p.lam,
        })
        .collect())
}

pub fn real_rows() -> Vec<TraceRow> {
    [-1.0, 1.0]
        .into_iter()
        .map(|r| TraceRow {
            curve: "REAL",
            param: r,
            lam: Complex::new(r, 0.0),
        })
        .collect()
}

/// Rows for `curve`; `Region` concatenates CR, CL and the real endpoints.
pub fn rows(curve: Curve, n: usize, tol: &Tolerance) -> Result<Vec<TraceRow>> {
    Ok(match curve {
        Curve::Cr => cr_rows(n),
        Curve::Cl => cl_rows(n, tol)?,
        Curve::Region => {
            let mut all = cr_rows(n);
            all.extend(cl_rows(n, tol)?);
            all.extend(real_rows());
            all
        }
    })
}

pub fn write_csv(rows: &[TraceRow], out: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.curve,
            fmt_f64(r.param),
            fmt_f64(r.lam.re),
            fmt_f64(r.lam.im),
            fmt_f64(r.g())
        )?;
    }
    Ok(())
}
