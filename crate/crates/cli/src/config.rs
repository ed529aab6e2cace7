//! Run configuration and the small value types parsed from flags.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideChoice {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    /// Hopf algebra, rewriting, Haar state and generator identities.
    Algebra,
    /// Differential calculus, Hodge operators, curvature, scalar Laplacian.
    Geometry,
    /// Laplacian spectra against the closed forms.
    Tables,
    /// Yang-Mills and matter equations.
    YangMills,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Verify(Suite),
    Table,
    YmCheck,
    Haar,
    Conventions,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Verify(_) => "verify",
            Command::Table => "table",
            Command::YmCheck => "ym-check",
            Command::Haar => "haar",
            Command::Conventions => "conventions",
        }
    }
}

/// Closed integer interval, written `a..b` (inclusive) or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRange {
    pub lo: i32,
    pub hi: i32,
}

impl NRange {
    pub fn values(&self) -> Vec<i32> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i32>().map_err(|e| format!("bad integer {t:?} in range: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}; write the smaller end first"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// A sample value of q, kept exact. Decimal input is read as the exact
/// decimal fraction, so `0.999` is `999/1000`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QValue {
    pub value: BigRational,
}

impl QValue {
    pub fn f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

impl FromStr for QValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let value = if let Some((int, frac)) = t.split_once('.') {
            let neg = int.starts_with('-');
            let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("cannot read {t:?} as a number"));
            }
            let num: BigRational = digits.parse().map_err(|e| format!("cannot read {t:?}: {e}"))?;
            let den = BigRational::from_integer(10.into()).pow(frac.len() as i32);
            let v = num / den;
            if neg {
                -v
            } else {
                v
            }
        } else {
            t.parse::<BigRational>().map_err(|e| format!("cannot read {t:?} as a rational: {e}"))?
        };
        if value.is_zero() || value.abs().is_one() {
            return Err(format!("q = {t} is a pole of the q-numbers; choose q outside {{0, 1, -1}}"));
        }
        Ok(QValue { value })
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

pub const DEFAULT_Q: [&str; 4] = ["1/2", "-1/2", "9/10", "999/1000"];

pub fn default_q_values() -> Vec<QValue> {
    DEFAULT_Q.iter().map(|s| s.parse().expect("valid default")).collect()
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub n_range: NRange,
    pub filtration: u32,
    pub buffer: u32,
    pub mode: Mode,
    pub sides: SideChoice,
    pub q_values: Vec<QValue>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            n_range: NRange { lo: -2, hi: 2 },
            filtration: 3,
            buffer: 2,
            mode: Mode::Exact,
            sides: SideChoice::Both,
            q_values: default_q_values(),
            format: Format::Csv,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.mode == Mode::Numeric && self.q_values.is_empty() {
            return Err(CliError::Config("numeric mode needs at least one --q value".into()));
        }
        if self.n_range.lo.unsigned_abs().max(self.n_range.hi.unsigned_abs()) > 64 {
            return Err(CliError::Config(format!("--n {} is out of the supported range |n| <= 64", self.n_range)));
        }
        if let Some(p) = &self.output {
            if p.is_dir() {
                return Err(CliError::Config(format!("--output {} is a directory; give a file path", p.display())));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("-2..2".parse::<NRange>().unwrap(), NRange { lo: -2, hi: 2 });
        assert_eq!("-4..=4".parse::<NRange>().unwrap(), NRange { lo: -4, hi: 4 });
        assert_eq!("3".parse::<NRange>().unwrap(), NRange { lo: 3, hi: 3 });
        assert!("2..-2".parse::<NRange>().is_err());
        assert!("a..b".parse::<NRange>().is_err());
    }

    #[test]
    fn q_values_are_exact() {
        let q: QValue = "0.999".parse().unwrap();
        assert_eq!(q.to_string(), "999/1000");
        let q: QValue = "-.5".parse().unwrap();
        assert_eq!(q.to_string(), "-1/2");
        assert_eq!("9/10".parse::<QValue>().unwrap().to_string(), "9/10");
        assert!("1".parse::<QValue>().is_err());
        assert!("-1.0".parse::<QValue>().is_err());
        assert!("0".parse::<QValue>().is_err());
        assert!("x".parse::<QValue>().is_err());
    }
}
