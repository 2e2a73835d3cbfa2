//! CSV documents: `#` comment lines, one header row, data rows with nine
//! significant digits.

use std::io::Write;

use crate::error::{Error, Result};
use crate::sweeps::SweepTable;

/// C-style `%.9g`.
pub fn format_g9(v: f64) -> String {
    format_g(v, 9)
}

fn format_g(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes `comments` as `# ` lines followed by a CSV body.
pub fn write_csv<W: Write>(out: W, comments: &[String], columns: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let mut out = out;
    for c in comments {
        writeln!(out, "# {c}").map_err(io_error)?;
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(columns).map_err(csv_error)?;
    for r in rows {
        if r.len() != columns.len() {
            return Err(Error::DimensionMismatch { expected: columns.len(), actual: r.len() });
        }
        w.write_record(r.iter().map(|&v| format_g9(v))).map_err(csv_error)?;
    }
    w.flush().map_err(io_error)?;
    Ok(())
}

pub fn table_to_string(t: &SweepTable) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(&mut buf, &t.provenance, &t.columns, &t.rows)?;
    Ok(String::from_utf8(buf).expect("ASCII output"))
}

fn io_error(e: std::io::Error) -> Error {
    Error::Contract(format!("output error: {e}"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Contract(format!("csv error: {e}"))
}
