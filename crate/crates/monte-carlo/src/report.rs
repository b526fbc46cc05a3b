//! CSV, JSON and gnuplot renderings of sweeps and fits.

use crate::{ExponentFit, McError, SampleEstimate};
use std::io::Write;

/// Writes `n,trials,hits,p_hat,lo,hi` with a header row.
pub fn write_csv<W: Write>(rows: &[SampleEstimate], out: W) -> Result<(), McError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Whitespace-separated columns `n p_hat lo hi fitted` for gnuplot, with
/// the fit parameters as comments.
pub fn write_gnuplot<W: Write>(rows: &[SampleEstimate], fit: &ExponentFit, mut out: W) -> Result<(), McError> {
    writeln!(out, "# slope {} stderr {} intercept {}", fit.slope, fit.stderr, fit.intercept)?;
    writeln!(out, "# plot 'file' using 1:2:3:4 with yerrorbars, '' using 1:5 with lines")?;
    writeln!(out, "# n p_hat lo hi fitted")?;
    for r in rows {
        writeln!(out, "{} {:e} {:e} {:e} {:e}", r.n, r.p_hat, r.lo, r.hi, fit.predict(r.n as f64))?;
    }
    Ok(())
}
