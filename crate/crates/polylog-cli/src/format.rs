//! Number formatting and complex literal parsing.

use anyhow::{bail, Context, Result};
use num_complex::Complex64;

/// Shortest round-trip scientific notation, always with a fractional part:
/// `84.0` prints as `8.4e1`, zero as `0.0e0`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:e}");
    match s.find('e') {
        Some(pos) if !s[..pos].contains('.') => format!("{}.0{}", &s[..pos], &s[pos..]),
        _ => s,
    }
}

/// `re + im i` or `re - |im| i`.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() && !z.im.is_nan() {
        format!("{} - {}i", fmt_f64(z.re), fmt_f64(-z.im))
    } else {
        format!("{} + {}i", fmt_f64(z.re), fmt_f64(z.im))
    }
}

fn parse_part(text: &str, whole: &str) -> Result<f64> {
    let v = match text {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => text
            .parse::<f64>()
            .with_context(|| format!("cannot parse {whole:?} as a complex number"))?,
    };
    if !v.is_finite() {
        bail!("{whole:?} is not finite");
    }
    Ok(v)
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` (spaces ignored, exponents allowed).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty complex literal");
    }
    let Some(body) = compact.strip_suffix('i') else {
        let re = compact
            .parse::<f64>()
            .with_context(|| format!("cannot parse {text:?} as a complex number"))?;
        if !re.is_finite() {
            bail!("{text:?} is not finite");
        }
        return Ok(Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Ok(Complex64::new(
            parse_part(&body[..i], text)?,
            parse_part(&body[i..], text)?,
        )),
        None => Ok(Complex64::new(0.0, parse_part(body, text)?)),
    }
}

/// A finite decimal field from a CSV record.
pub fn parse_field(text: &str) -> Result<f64> {
    let v = text
        .trim()
        .parse::<f64>()
        .with_context(|| format!("cannot parse {text:?} as a number"))?;
    if !v.is_finite() {
        bail!("{text:?} is not finite");
    }
    Ok(v)
}
