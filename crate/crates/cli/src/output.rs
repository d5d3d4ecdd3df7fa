use std::io::{self, Write};

use aristotle_core::TrajectorySample;

/// Shortest decimal that round-trips to the same `f64`, with `-0` printed as `0`.
pub fn fmt_num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

pub fn write_csv<W: Write>(w: &mut W, samples: &[TrajectorySample]) -> io::Result<()> {
    writeln!(w, "t,p,q,H")?;
    for s in samples {
        writeln!(w, "{},{},{},{}", fmt_num(s.t), fmt_num(s.p), fmt_num(s.q), fmt_num(s.h))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(w: &mut W, samples: &[TrajectorySample]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, samples)?;
    writeln!(w)
}
