use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::function::RationalFunction;
use super::poly::{horner, roots, square_free_decomposition, Poly};
use super::ExtractError;

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    pub fn real(x: f64) -> Self {
        SpherePoint::Finite(Complex64::new(x, 0.0))
    }

    /// Point `p/q` of the projective line.
    fn from_pair(p: Complex64, q: Complex64) -> Self {
        if q.norm() == 0.0 || (p / q).norm() > 1e300 {
            SpherePoint::Infinity
        } else {
            SpherePoint::Finite(p / q)
        }
    }

    /// Chordal distance, at most 1.
    pub fn chordal(self, other: SpherePoint) -> f64 {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
            (SpherePoint::Finite(a), SpherePoint::Infinity) | (SpherePoint::Infinity, SpherePoint::Finite(a)) => {
                1.0 / (1.0 + a.norm_sqr()).sqrt()
            }
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => {
                (a - b).norm() / ((1.0 + a.norm_sqr()).sqrt() * (1.0 + b.norm_sqr()).sqrt())
            }
        }
    }

    /// Angle `2 atan(x)` in `(-pi, pi]` of a point of the real circle, with
    /// infinity at `pi`. Uses only the real part.
    pub fn angle(self) -> f64 {
        match self {
            SpherePoint::Infinity => PI,
            SpherePoint::Finite(z) => {
                let a = 2.0 * z.re.atan();
                if a <= -PI {
                    PI
                } else {
                    a
                }
            }
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Infinity => f.write_str("inf"),
            SpherePoint::Finite(z) if z.im == 0.0 => write!(f, "{}", z.re),
            SpherePoint::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub point: SpherePoint,
    pub value: SpherePoint,
    /// Multiplicity as a zero of the Wronskian: the local degree minus one.
    pub multiplicity: usize,
    pub is_real: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalData {
    pub degree: usize,
    pub points: Vec<CriticalPoint>,
    /// Simple real critical points, sorted by critical value (infinity last).
    pub real: Vec<usize>,
    /// Nonreal critical points.
    pub complex: Vec<usize>,
    /// Real poles of odd order at least 3. They are not vertices of the
    /// garden; the preimage curves pass straight through them.
    pub degenerate_poles: Vec<usize>,
    /// Smallest chordal distance between two critical values.
    pub min_separation: f64,
}

impl CriticalData {
    pub fn l(&self) -> usize {
        self.real.len() / 2
    }
}

fn non_generic(reason: impl Into<String>, margin: f64) -> ExtractError {
    ExtractError::NonGeneric {
        reason: reason.into(),
        margin,
    }
}

/// Exact checks for degeneracy and multiple critical points, then numerical
/// critical points and values.
pub fn critical_data(f: &RationalFunction, tol: f64) -> Result<CriticalData, ExtractError> {
    let (p, q) = (&f.num, &f.den);
    if q.is_zero() {
        return Err(ExtractError::DegenerateInput("denominator is zero".into()));
    }
    if p.is_zero() {
        return Err(ExtractError::DegenerateInput("function is identically zero".into()));
    }
    if !Poly::gcd(p, q).is_constant() {
        return Err(ExtractError::DegenerateInput("numerator and denominator share a factor".into()));
    }
    let n = f.degree();
    if n == 0 {
        return Err(ExtractError::DegenerateInput("function is constant".into()));
    }

    let w = p.derivative().mul(q).sub(&p.mul(&q.derivative()));
    let at_infinity = 2 * n - 2 - w.degree().expect("nonconstant function has nonzero Wronskian");
    let (deg_p, deg_q) = (p.degree().unwrap_or(0), q.degree().unwrap_or(0));
    let value_at_infinity = if deg_p > deg_q {
        SpherePoint::Infinity
    } else if deg_p < deg_q {
        SpherePoint::real(0.0)
    } else {
        SpherePoint::real((p.lead() / q.lead()).to_f64().unwrap_or(f64::NAN))
    };

    let (pf, qf) = (p.to_f64(), q.to_f64());
    let mut points = Vec::new();
    if at_infinity > 0 {
        points.push(CriticalPoint {
            point: SpherePoint::Infinity,
            value: value_at_infinity,
            multiplicity: at_infinity,
            is_real: true,
        });
    }
    for (mult, factor) in square_free_decomposition(&w) {
        let is_pole = q.divrem(&factor).1.is_zero();
        let zs = roots(&factor.to_f64())
            .ok_or_else(|| ExtractError::TracingFailure("eigenvalue iteration did not converge".into()))?;
        for z in zs {
            let is_real = z.im.abs() <= tol * (1.0 + z.norm());
            let z = if is_real { Complex64::new(z.re, 0.0) } else { z };
            let value = if is_pole && mult > 1 {
                SpherePoint::Infinity
            } else {
                SpherePoint::from_pair(horner(&pf, z).0, horner(&qf, z).0)
            };
            let value = match (is_real, value) {
                (true, SpherePoint::Finite(v)) => SpherePoint::real(v.re),
                _ => value,
            };
            points.push(CriticalPoint {
                point: SpherePoint::Finite(z),
                value,
                multiplicity: mult,
                is_real,
            });
        }
    }

    let mut min_separation = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            min_separation = min_separation.min(points[i].value.chordal(points[j].value));
        }
    }

    let mut real = Vec::new();
    let mut complex = Vec::new();
    let mut degenerate_poles = Vec::new();
    for (i, c) in points.iter().enumerate() {
        if c.multiplicity == 1 {
            if c.is_real {
                real.push(i);
            } else {
                complex.push(i);
            }
        } else if c.is_real && c.multiplicity % 2 == 0 && c.value.is_infinite() {
            degenerate_poles.push(i);
        } else {
            return Err(non_generic(
                format!("critical point of multiplicity {} at {}", c.multiplicity, c.point),
                0.0,
            ));
        }
    }

    if min_separation < tol {
        return Err(non_generic("two critical points share a critical value", min_separation));
    }
    for &i in &complex {
        let z = match points[i].point {
            SpherePoint::Finite(z) => z,
            SpherePoint::Infinity => unreachable!("infinity is real"),
        };
        let paired = complex.iter().any(|&j| match points[j].point {
            SpherePoint::Finite(y) => (y - z.conj()).norm() <= 1e3 * tol * (1.0 + z.norm()),
            SpherePoint::Infinity => false,
        });
        if !paired {
            return Err(ExtractError::TracingFailure(format!(
                "critical point {z} has no conjugate partner"
            )));
        }
    }
    if real.len() % 2 == 1 {
        return Err(ExtractError::TracingFailure(
            "odd number of real critical points; realness tolerance too loose or too tight".into(),
        ));
    }
    real.sort_by(|&a, &b| points[a].value.angle().total_cmp(&points[b].value.angle()));

    Ok(CriticalData {
        degree: n,
        points,
        real,
        complex,
        degenerate_poles,
        min_separation,
    })
}
