use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::exactla::Rational;

/// Where the coefficients of `α` come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSource {
    /// Fresh integer coefficients in `[-10, 10]` per cell, from the run seed.
    Random,
    List(Vec<Rational>),
    File(PathBuf),
}

impl fmt::Display for AlphaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaSource::Random => f.write_str("random"),
            AlphaSource::List(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(","))
            }
            AlphaSource::File(p) => write!(f, "@{}", p.display()),
        }
    }
}

impl Serialize for AlphaSource {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let q = match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| format!("bad numerator `{p}`"))?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| format!("bad denominator `{q}`"))?;
            if q.is_zero() {
                return Err("zero denominator".into());
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().map_err(|_| format!("not a rational: `{s}`"))?),
    };
    Ok(q)
}

impl FromStr for AlphaSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            Ok(AlphaSource::Random)
        } else if let Some(path) = s.strip_prefix('@') {
            Ok(AlphaSource::File(PathBuf::from(path)))
        } else {
            s.split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map(AlphaSource::List)
        }
    }
}

/// Reads an `α` file: one `p/q` or integer per line, `#` starts a comment,
/// blank lines are ignored. Errors carry `path:line:col`.
pub fn read_alpha_file(path: &Path) -> Result<Vec<Rational>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;
        let value = parse_rational(trimmed)
            .map_err(|e| format!("{}:{}:{col}: {e}", path.display(), lineno + 1))?;
        out.push(value);
    }
    Ok(out)
}
