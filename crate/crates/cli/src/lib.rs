//! Library side of the `fourcycle` command: record generation, CSV and SVG
//! emission, and the subcommand dispatcher used by the binary.

pub mod app;
pub mod sample;
pub mod svg;
pub mod trace;

use std::fmt;

use fourcycle::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OUTSIDE: u8 = 3;
pub const EXIT_CONSTRUCTION: u8 = 4;
pub const EXIT_IO: u8 = 5;

/// A failure carrying the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(EXIT_USAGE, message)
    }

    pub fn construction(err: Error) -> Self {
        Self::new(EXIT_CONSTRUCTION, err.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        Self::new(EXIT_IO, format!("I/O error: {err}"))
    }
}

/// Seventeen significant digits, enough for an exact `f64` round trip.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
