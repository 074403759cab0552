use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;
use serde_json::Value;

use super::poly::Poly;
use super::ExtractError;

/// `P/Q` with exact rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

#[derive(Deserialize)]
struct FunctionJson {
    num: Vec<Value>,
    #[serde(default)]
    den: Option<Vec<Value>>,
}

impl RationalFunction {
    pub fn new(num: Vec<BigRational>, den: Vec<BigRational>) -> Self {
        RationalFunction {
            num: Poly::new(num),
            den: Poly::new(den),
        }
    }

    pub fn polynomial(num: Vec<BigRational>) -> Self {
        RationalFunction::new(num, vec![BigRational::one()])
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Self {
        let conv = |c: &[i64]| c.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        RationalFunction::new(conv(num), conv(den))
    }

    /// Exact values of the given floats.
    pub fn from_f64(num: &[f64], den: &[f64]) -> Result<Self, ExtractError> {
        let conv = |c: &[f64]| -> Result<Vec<BigRational>, ExtractError> {
            c.iter()
                .map(|&x| {
                    BigRational::from_float(x)
                        .ok_or_else(|| ExtractError::Parse(format!("coefficient {x} is not finite")))
                })
                .collect()
        };
        Ok(RationalFunction::new(conv(num)?, conv(den)?))
    }

    /// Coefficient lists such as `["1", "-0.5", "3/4", "2e-3"]`.
    pub fn from_strs<S: AsRef<str>>(num: &[S], den: &[S]) -> Result<Self, ExtractError> {
        let conv = |c: &[S]| c.iter().map(|s| parse_coefficient(s.as_ref())).collect::<Result<Vec<_>, _>>();
        Ok(RationalFunction::new(conv(num)?, conv(den)?))
    }

    /// `{"num": [c0, c1, ...], "den": [c0, ...]}`; coefficients are JSON
    /// numbers (read exactly as written) or strings; `den` defaults to `[1]`.
    pub fn from_json_str(s: &str) -> Result<Self, ExtractError> {
        let j: FunctionJson = serde_json::from_str(s).map_err(|e| ExtractError::Parse(e.to_string()))?;
        let conv = |vals: &[Value]| -> Result<Vec<BigRational>, ExtractError> {
            vals.iter()
                .map(|v| match v {
                    Value::Number(n) => parse_coefficient(&n.to_string()),
                    Value::String(s) => parse_coefficient(s),
                    other => Err(ExtractError::Parse(format!("coefficient {other} is not a number"))),
                })
                .collect()
        };
        let num = conv(&j.num)?;
        let den = match j.den {
            Some(d) => conv(&d)?,
            None => vec![BigRational::one()],
        };
        Ok(RationalFunction::new(num, den))
    }

    /// `max(deg P, deg Q)`; zero for constants.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// `f((a x + b) / (c x + d))` with both parts homogenized to the degree of `f`.
    pub fn precompose(&self, a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> Self {
        let n = self.degree();
        let top = Poly::new(vec![b.clone(), a.clone()]);
        let bottom = Poly::new(vec![d.clone(), c.clone()]);
        let homogenize = |p: &Poly| {
            p.coeffs().iter().enumerate().fold(Poly::zero(), |acc, (j, cj)| {
                acc.add(&top.pow(j).mul(&bottom.pow(n - j)).scale(cj))
            })
        };
        RationalFunction {
            num: homogenize(&self.num),
            den: homogenize(&self.den),
        }
    }
}

/// Exact value of an integer, `a/b`, or decimal literal with optional exponent.
pub fn parse_coefficient(s: &str) -> Result<BigRational, ExtractError> {
    let bad = || ExtractError::Parse(format!("cannot parse coefficient {s:?}"));
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut v = if scale >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        v = -v;
    }
    Ok(v)
}
