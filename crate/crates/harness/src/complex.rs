use serde::{Deserialize, Serialize};
use supercore::{c64, Complex64};

use crate::error::{HarnessError, Result};

/// Parses `0.2`, `-0.4i`, `i`, `0.1+0.3i`, `1e-3-2e-2i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || HarnessError::Config(format!("cannot parse complex number {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|x| c64(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => Ok(c64(body[..k].parse().map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(c64(0.0, imag(body)?)),
    }
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// A complex value in a config file: a number, `[re, im]`, or a string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
    Text(String),
}

impl ComplexValue {
    pub fn value(&self) -> Result<Complex64> {
        match self {
            ComplexValue::Real(x) => Ok(c64(*x, 0.0)),
            ComplexValue::Pair([a, b]) => Ok(c64(*a, *b)),
            ComplexValue::Text(s) => parse_complex(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_complex("0.2").unwrap(), c64(0.2, 0.0));
        assert_eq!(parse_complex("0.4i").unwrap(), c64(0.0, 0.4));
        assert_eq!(parse_complex("-i").unwrap(), c64(0.0, -1.0));
        assert_eq!(parse_complex("0.1 - 0.3i").unwrap(), c64(0.1, -0.3));
        assert_eq!(parse_complex("1e-3+2e-2i").unwrap(), c64(1e-3, 2e-2));
        assert_eq!(parse_complex("-1e-3i").unwrap(), c64(0.0, -1e-3));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
        for z in [c64(0.2, 0.0), c64(0.0, 0.4), c64(-0.1, 0.25)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
