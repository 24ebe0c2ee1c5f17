//! Textual on-disk memo of a coefficient table: one header line, then one
//! coefficient per line (hexadecimal float, or numerator/denominator in
//! rational mode).

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_rational::BigRational;
use rug::Float;

use mpf_kernel::Nu;

use crate::{ArithmeticMode, CoefficientSeries, Coefficients, Result, SmoothError};

const MEMO_TAG: &str = "mpf-lambda";
const MEMO_VERSION: u32 = 1;

pub fn write_memo(series: &CoefficientSeries, path: &Path) -> Result<()> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    let mode = match series.mode {
        ArithmeticMode::Rational => "rational".to_string(),
        ArithmeticMode::Float(bits) => format!("float:{bits}"),
    };
    writeln!(
        w,
        "{MEMO_TAG} {MEMO_VERSION} nu={} y={} degree={} mode={mode}",
        series.nu, series.y, series.degree
    )?;
    match &series.coeffs {
        Coefficients::Rational(c) => {
            for r in c {
                writeln!(w, "{r}")?;
            }
        }
        Coefficients::Float { values, .. } => {
            for v in values {
                writeln!(w, "{}", v.to_string_radix(16, None))?;
            }
        }
    }
    Ok(())
}

pub fn read_memo(path: &Path) -> Result<CoefficientSeries> {
    let mut lines = BufReader::new(std::fs::File::open(path)?).lines();
    let header = lines
        .next()
        .ok_or_else(|| SmoothError::Memo("empty file".into()))??;
    let mut fields = header.split_whitespace();
    if fields.next() != Some(MEMO_TAG) {
        return Err(SmoothError::Memo("missing memo tag".into()));
    }
    if fields.next() != Some("1") {
        return Err(SmoothError::Memo("unsupported memo version".into()));
    }
    let mut nu = None;
    let mut y = None;
    let mut degree = None;
    let mut mode = None;
    for field in fields {
        let (key, val) = field
            .split_once('=')
            .ok_or_else(|| SmoothError::Memo(format!("bad header field {field}")))?;
        match key {
            "nu" => nu = Some(val.parse::<Nu>().map_err(SmoothError::Memo)?),
            "y" => y = Some(val.parse::<u64>().map_err(|e| SmoothError::Memo(e.to_string()))?),
            "degree" => {
                degree = Some(val.parse::<usize>().map_err(|e| SmoothError::Memo(e.to_string()))?)
            }
            "mode" => {
                mode = Some(if val == "rational" {
                    ArithmeticMode::Rational
                } else if let Some(bits) = val.strip_prefix("float:") {
                    ArithmeticMode::Float(
                        bits.parse::<u32>().map_err(|e| SmoothError::Memo(e.to_string()))?,
                    )
                } else {
                    return Err(SmoothError::Memo(format!("bad mode {val}")));
                })
            }
            other => return Err(SmoothError::Memo(format!("unknown header key {other}"))),
        }
    }
    let (nu, y, degree, mode) = match (nu, y, degree, mode) {
        (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
        _ => return Err(SmoothError::Memo("incomplete header".into())),
    };

    let body: Vec<String> = lines.collect::<std::io::Result<_>>()?;
    if body.len() != degree + 1 {
        return Err(SmoothError::Memo(format!(
            "expected {} coefficients, found {}",
            degree + 1,
            body.len()
        )));
    }
    let coeffs = match mode {
        ArithmeticMode::Rational => {
            let mut c = Vec::with_capacity(body.len());
            for line in &body {
                c.push(
                    line.parse::<BigRational>()
                        .map_err(|e| SmoothError::Memo(format!("bad rational {line}: {e}")))?,
                );
            }
            Coefficients::Rational(c)
        }
        ArithmeticMode::Float(bits) => {
            let mut c = Vec::with_capacity(body.len());
            for line in &body {
                let parsed = Float::parse_radix(line, 16)
                    .map_err(|e| SmoothError::Memo(format!("bad float {line}: {e}")))?;
                c.push(Float::with_val(bits, parsed));
            }
            Coefficients::Float {
                values: c,
                rel_error_bound: f64::NAN, // unknown after a round-trip
            }
        }
    };
    Ok(CoefficientSeries {
        nu,
        y,
        degree,
        mode,
        coeffs,
    })
}
