//! Exact rational polynomials for the algebraic checks, and floating-point
//! root finding for the numerical ones.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with exact rational coefficients in ascending degree, with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn lead(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        self.0.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|j| self.coeff(j) + o.coeff(j)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|j| self.coeff(j) - o.coeff(j)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, a)| a * BigRational::from_integer(j.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(BigRational::one() / self.lead()))
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = &r[top] / &lead;
            let shift = top - dd;
            for (j, b) in d.0.iter().enumerate() {
                r[shift + j] -= &c * b;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Square-free decomposition `p = c * prod f_i^i` (Yun), as `(i, f_i)` for
/// the nonconstant factors.
pub fn square_free_decomposition(p: &Poly) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = Poly::gcd(p, &dp);
    let mut b = p.divrem(&a0).0;
    let c = dp.divrem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = Poly::gcd(&b, &d);
        if !a.is_constant() {
            out.push((i, a.clone()));
        }
        let nb = b.divrem(&a).0;
        let nc = d.divrem(&a).0;
        d = nc.sub(&nb.derivative());
        b = nb;
        i += 1;
    }
    out
}

/// Number of distinct real roots, by a Sturm sequence.
pub fn real_root_count(p: &Poly) -> usize {
    if p.is_constant() {
        return 0;
    }
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_constant() {
        let r = seq[seq.len() - 2].divrem(&seq[seq.len() - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-BigRational::one()));
    }
    let changes = |signs: Vec<bool>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_plus = seq.iter().map(|q| q.lead().is_positive()).collect();
    let at_minus = seq
        .iter()
        .map(|q| q.lead().is_positive() == (q.degree().unwrap_or(0) % 2 == 0))
        .collect();
    changes(at_minus) - changes(at_plus)
}

pub fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial with ascending `coeffs` and nonzero
/// leading coefficient: companion-matrix eigenvalues polished by Newton
/// steps. The QR iteration occasionally stalls on highly symmetric
/// companion matrices; simultaneous Aberth iteration takes over then.
pub fn roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    companion_roots(coeffs).or_else(|| aberth(coeffs))
}

fn aberth(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len().checked_sub(1)?;
    let lead = coeffs[n];
    let radius = (0..n)
        .map(|i| (coeffs[i] / lead).abs().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut step = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if !w.is_finite() {
                return None;
            }
            z[k] -= w;
            step = step.max(w.norm() / (1.0 + z[k].norm()));
        }
        if step < 1e-15 {
            return Some(z.into_iter().map(|r| polish(coeffs, r)).collect());
        }
    }
    None
}

fn companion_roots(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = coeffs[n];
    if lead == 0.0 || !lead.is_finite() {
        return None;
    }
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -coeffs[i] / lead;
    }
    let schur = Schur::try_new(c, f64::EPSILON, 10_000)?;
    let eig = schur.complex_eigenvalues();
    Some(eig.iter().map(|&z| polish(coeffs, z)).collect())
}

pub fn polish(coeffs: &[f64], mut z: Complex64) -> Complex64 {
    let (mut p, _) = horner(coeffs, z);
    for _ in 0..8 {
        let (_, dp) = horner(coeffs, z);
        if dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        let (np, _) = horner(coeffs, next);
        if !(np.norm() < p.norm()) {
            break;
        }
        z = next;
        p = np;
    }
    z
}
