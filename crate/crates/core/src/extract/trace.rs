//! Continuation of the preimages of the real circle.
//!
//! Values on the real circle are parametrized by the angle `theta`, the value
//! being `tan(theta / 2)` (infinity at `theta = pi`). Preimages of a value are
//! the roots of `cos(theta/2) P - sin(theta/2) Q`. Between consecutive real
//! critical values the roots in the upper half-plane move without colliding,
//! so they are followed sample by sample. At each simple real critical value
//! one upper root is born or dies at the critical point; the other roots pass
//! through unchanged.
//!
//! Roots are computed in the chart `x = a - 1/u` around a rational anchor `a`
//! on the real line far from all real critical points. The chart keeps
//! infinity at a finite, well-conditioned place and moves the single
//! degree-dropping value to `f(a)`, where the escaping root is real.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::critical::{CriticalData, SpherePoint};
use super::function::RationalFunction;
use super::poly::{polish, real_root_count, roots, Poly};
use super::ExtractError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceConfig {
    /// Tolerance for realness and coincidence tests.
    pub tol: f64,
    /// Uniform samples per interval between consecutive real critical values.
    pub samples: usize,
    /// After a tracing failure the sample count is doubled, up to this cap.
    pub max_samples: usize,
    /// Extra samples approaching each end of an interval, halving the
    /// distance each time.
    pub end_refinements: u32,
    /// Maximum depth of local bisection when root matching is ambiguous.
    pub max_bisections: u32,
    /// Cap on root solves for one function.
    pub max_solves: usize,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            tol: 1e-9,
            samples: 512,
            max_samples: 4096,
            end_refinements: 15,
            max_bisections: 30,
            max_solves: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Transverse curve through the upper half-plane between two real
    /// critical points, oriented so that the value increases from `from` to
    /// `to` (indices into the critical points).
    Chord { from: usize, to: usize },
    /// Closed curve in the open upper half-plane.
    Oval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TracedCurve {
    pub kind: CurveKind,
    /// Points in the unit disk model `w = (x - i) / (x + i)` of the upper
    /// half-plane, in the direction of increasing value. Ovals are closed
    /// implicitly.
    pub polyline: Vec<Complex64>,
    /// Number of preimages on the curve for values in each interval between
    /// consecutive real critical values.
    pub counts: Vec<u64>,
    /// Covering multiplicity, filled in by [`weights`](super::weights).
    pub weight: Option<u64>,
}

/// The chart `x = anchor - 1/u` and the two numerator polynomials in `u`.
#[derive(Debug, Clone)]
pub struct Chart {
    pub anchor: BigRational,
    anchor_f: f64,
    pt: Vec<f64>,
    qt: Vec<f64>,
    degree: usize,
}

impl Chart {
    pub fn new(f: &RationalFunction, anchor: BigRational) -> Self {
        let n = f.degree();
        let lin = Poly::new(vec![BigRational::from_integer((-1).into()), anchor.clone()]);
        let u = Poly::new(vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())]);
        let transform = |p: &Poly| -> Vec<f64> {
            let t = p
                .coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (j, c)| acc.add(&lin.pow(j).mul(&u.pow(n - j)).scale(c)));
            let mut v = t.to_f64();
            v.resize(n + 1, 0.0);
            v
        };
        Chart {
            anchor_f: anchor.to_f64().unwrap_or(0.0),
            pt: transform(&f.num),
            qt: transform(&f.den),
            anchor,
            degree: n,
        }
    }

    fn family(&self, theta: f64) -> Vec<f64> {
        let (s, c) = (theta / 2.0).sin_cos();
        self.pt.iter().zip(&self.qt).map(|(p, q)| c * p - s * q).collect()
    }

    pub fn u_of(&self, x: SpherePoint) -> Complex64 {
        match x {
            SpherePoint::Infinity => Complex64::new(0.0, 0.0),
            SpherePoint::Finite(z) => 1.0 / (Complex64::new(self.anchor_f, 0.0) - z),
        }
    }

    pub fn x_of(&self, u: Complex64) -> SpherePoint {
        if u.norm() == 0.0 {
            SpherePoint::Infinity
        } else {
            SpherePoint::Finite(Complex64::new(self.anchor_f, 0.0) - 1.0 / u)
        }
    }

    /// Disk model of the upper half-plane.
    pub fn disk(&self, u: Complex64) -> Complex64 {
        let i = Complex64::i();
        let a = Complex64::new(self.anchor_f, 0.0);
        ((a - i) * u - 1.0) / ((a + i) * u - 1.0)
    }

    /// Finite roots at `theta` and whether the leading coefficient was small.
    fn roots_at(&self, theta: f64) -> Result<(Vec<Complex64>, bool), ExtractError> {
        let c = self.family(theta);
        let norm = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let n = self.degree;
        let fail = || ExtractError::TracingFailure("eigenvalue iteration did not converge".into());
        if c[n].abs() >= 1e-7 * norm {
            return Ok((roots(&c).ok_or_else(fail)?, false));
        }
        // One root is close to the anchor (u near infinity): solve for 1/u.
        let mut rev: Vec<f64> = c.iter().rev().copied().collect();
        while rev.last().is_some_and(|&x| x == 0.0) {
            rev.pop();
        }
        let vs = roots(&rev).ok_or_else(fail)?;
        let us = vs
            .into_iter()
            .filter(|v| v.norm() > 1e-6)
            .map(|v| polish(&c, 1.0 / v))
            .collect();
        Ok((us, true))
    }
}

/// The `k` roots with the largest imaginary parts, when all of them are
/// clearly off the real line; otherwise every root that is, so that the
/// caller sees the count change.
fn upper(roots: &[Complex64], k: usize, tol: f64) -> Vec<Complex64> {
    let off = |z: &Complex64| z.im > tol * 10.0 * (1.0 + z.norm());
    let mut up: Vec<Complex64> = roots.to_vec();
    up.sort_by(|a, b| b.im.total_cmp(&a.im));
    if up.len() >= k && up[..k].iter().all(off) {
        up.truncate(k);
    } else {
        up.retain(off);
    }
    up.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    up
}

/// Exact number of preimages of the value at angle `theta` in the upper
/// half-plane, from a Sturm count of the real ones at a nearby rational
/// point of the same gap.
fn exact_upper_count(f: &RationalFunction, theta: f64) -> usize {
    let (s, c) = (theta / 2.0).sin_cos();
    let exact = |x: f64| BigRational::from_float(x).expect("finite angle");
    let p = f.num.scale(&exact(c)).sub(&f.den.scale(&exact(s)));
    let n = f.degree();
    let at_infinity = n - p.degree().unwrap_or(0);
    let real = real_root_count(&p) + at_infinity;
    n.saturating_sub(real) / 2
}

/// Nearest-neighbour bijection `prev[i] -> next[perm[i]]`, accepted only
/// when every match is closer than half the smallest gap between roots.
fn match_nearest(prev: &[Complex64], next: &[Complex64]) -> Option<Vec<usize>> {
    if prev.len() != next.len() {
        return None;
    }
    let mut radius = f64::INFINITY;
    for (i, a) in prev.iter().enumerate() {
        for b in &prev[i + 1..] {
            radius = radius.min(0.5 * (a - b).norm());
        }
    }
    let mut used = vec![false; next.len()];
    let mut perm = Vec::with_capacity(prev.len());
    for a in prev {
        let (j, d) = next
            .iter()
            .enumerate()
            .map(|(j, b)| (j, (a - b).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if d >= radius || used[j] {
            return None;
        }
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

/// Where an interval between consecutive real critical values ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryKind {
    /// A simple real critical point (index into the critical points).
    Simple(usize),
    /// A real pole of odd order `2h + 1`, `h >= 1`.
    Pole { point: usize, half: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boundary {
    pub theta: f64,
    pub kind: BoundaryKind,
}

type StrandId = (usize, usize);

/// Everything the garden construction needs from the tracing.
#[derive(Debug, Clone)]
pub struct Tracing {
    pub chart: Chart,
    /// Sorted; gap `g` runs from boundary `g` to boundary `g + 1` (cyclically).
    /// Empty when there are no real critical values, in which case there is
    /// a single closed gap.
    pub boundaries: Vec<Boundary>,
    pub curves: Vec<TracedCurve>,
    /// Real preimages in each gap, as angles `2 atan(x)` (infinity at `pi`).
    pub real_preimages: Vec<Vec<f64>>,
}

impl Tracing {
    pub fn gap_count(&self) -> usize {
        self.boundaries.len().max(1)
    }
}

struct Tracer<'a> {
    chart: &'a Chart,
    cfg: &'a TraceConfig,
    solves: usize,
    /// Number of upper roots in the current gap.
    k: usize,
}

impl Tracer<'_> {
    fn upper_at(&mut self, theta: f64) -> Result<Vec<Complex64>, ExtractError> {
        self.solves += 1;
        if self.solves > self.cfg.max_solves {
            return Err(ExtractError::TracingFailure("root solve budget exhausted".into()));
        }
        Ok(upper(&self.chart.roots_at(theta)?.0, self.k, self.cfg.tol))
    }

    fn advance(
        &mut self,
        a: f64,
        b: f64,
        known: Option<Vec<Complex64>>,
        strands: &mut [Vec<Complex64>],
        depth: u32,
    ) -> Result<(), ExtractError> {
        let prev: Vec<Complex64> = strands.iter().map(|s| *s.last().expect("nonempty strand")).collect();
        let next = match known {
            Some(k) => k,
            None => self.upper_at(b)?,
        };
        if let Some(perm) = match_nearest(&prev, &next) {
            for (s, j) in strands.iter_mut().zip(perm) {
                s.push(next[j]);
            }
            return Ok(());
        }
        if depth >= self.cfg.max_bisections {
            return Err(ExtractError::TracingFailure(format!(
                "cannot match {} upper roots to {} between values at angles {a} and {b}",
                prev.len(),
                next.len()
            )));
        }
        let mid = 0.5 * (a + b);
        self.advance(a, mid, None, strands, depth + 1)?;
        self.advance(mid, b, Some(next), strands, depth + 1)
    }

    /// Follows the upper roots across a gap, outward from its middle. Near
    /// the ends the computed critical value may be too inaccurate to
    /// separate a sample from the birth or death of a root, or roots may
    /// cluster at a pole; there the trace stops at the last sample it can
    /// follow reliably.
    fn trace_gap(&mut self, lo: f64, hi: f64, offsets: &[f64]) -> Result<Vec<Vec<Complex64>>, ExtractError> {
        let zone = 1.0 / self.cfg.samples.max(2) as f64;
        let mid = offsets.len() / 2;
        let theta = |s: f64| lo + s * (hi - lo);
        let start = self.upper_at(theta(offsets[mid]))?;
        let mut halves = Vec::with_capacity(2);
        for forward in [true, false] {
            let order: Vec<f64> = if forward {
                offsets[mid..].to_vec()
            } else {
                offsets[..=mid].iter().rev().copied().collect()
            };
            let mut strands: Vec<Vec<Complex64>> = start.iter().map(|&z| vec![z]).collect();
            for w in order.windows(2) {
                let lens: Vec<usize> = strands.iter().map(Vec::len).collect();
                let next = self.upper_at(theta(w[1]))?;
                let ok = if next.len() == strands.len() {
                    self.advance(theta(w[0]), theta(w[1]), Some(next), &mut strands, 0)
                } else {
                    Err(ExtractError::TracingFailure(format!(
                        "upper root count changes from {} to {} inside a gap",
                        strands.len(),
                        next.len()
                    )))
                };
                if let Err(e) = ok {
                    if w[1] < zone || w[1] > 1.0 - zone {
                        for (s, l) in strands.iter_mut().zip(lens) {
                            s.truncate(l);
                        }
                        break;
                    }
                    return Err(e);
                }
            }
            halves.push(strands);
        }
        let backward = halves.pop().expect("two halves");
        let forward = halves.pop().expect("two halves");
        Ok(backward
            .into_iter()
            .zip(forward)
            .map(|(mut b, f)| {
                b.reverse();
                b.extend_from_slice(&f[1..]);
                b
            })
            .collect())
    }

    /// Real preimages at a well-conditioned sample inside the gap.
    fn real_roots(&mut self, lo: f64, hi: f64, upper_count: usize) -> Result<Vec<f64>, ExtractError> {
        for s in [0.5, 0.375, 0.625, 0.25, 0.75, 0.3, 0.7] {
            let (mut rs, small_lead) = self.chart.roots_at(lo + s * (hi - lo))?;
            if small_lead {
                continue;
            }
            if upper(&rs, upper_count, self.cfg.tol).len() != upper_count {
                return Err(ExtractError::TracingFailure("upper root count varies inside a gap".into()));
            }
            let real = self.chart.degree - 2 * upper_count;
            rs.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
            return Ok(rs[..real].iter().map(|&u| self.chart.x_of(u).angle()).collect());
        }
        Err(ExtractError::TracingFailure("no well-conditioned sample in a gap".into()))
    }
}

fn offsets(cfg: &TraceConfig, closed: bool) -> Vec<f64> {
    let n = cfg.samples.max(2) as f64;
    if closed {
        return (0..=cfg.samples).map(|k| k as f64 / n).collect();
    }
    let mut v: Vec<f64> = (1..cfg.samples).map(|k| k as f64 / n).collect();
    for j in 1..=cfg.end_refinements {
        let s = 0.5f64.powi(j as i32) / n;
        v.push(s);
        v.push(1.0 - s);
    }
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Anchor far from every real critical point, as a dyadic rational.
pub(crate) fn choose_anchor(cd: &CriticalData) -> BigRational {
    let mut angles: Vec<f64> = cd
        .real
        .iter()
        .chain(&cd.degenerate_poles)
        .map(|&i| cd.points[i].point.angle())
        .collect();
    angles.sort_by(f64::total_cmp);
    let psi = if angles.is_empty() {
        0.0
    } else {
        let k = angles.len();
        let (mut best, mut best_len) = (0, -1.0);
        for i in 0..k {
            let next = if i + 1 < k { angles[i + 1] } else { angles[0] + 2.0 * PI };
            if next - angles[i] > best_len {
                best_len = next - angles[i];
                best = i;
            }
        }
        // Keep the anchor in the middle half of the widest gap, as close to
        // the origin as that allows.
        let lo = angles[best] + best_len / 4.0;
        let hi = angles[best] + 3.0 * best_len / 4.0;
        let wrap = |a: f64| if a > PI { a - 2.0 * PI } else { a };
        if lo <= 0.0 && hi >= 0.0 || lo <= 2.0 * PI && hi >= 2.0 * PI {
            0.0
        } else {
            let (l, h) = (wrap(lo), wrap(hi));
            if l.abs() < h.abs() {
                l
            } else {
                h
            }
        }
    };
    let x = (psi / 2.0).tan().clamp(-1e6, 1e6);
    BigRational::from_float((x * 1024.0).round() / 1024.0).expect("finite anchor")
}

/// Traces the curves of the preimage of the real circle in the upper
/// half-plane, with preimage counts per gap.
pub fn trace_s(f: &RationalFunction, cd: &CriticalData, cfg: &TraceConfig) -> Result<Tracing, ExtractError> {
    let chart = Chart::new(f, choose_anchor(cd));
    let mut boundaries: Vec<Boundary> = cd
        .real
        .iter()
        .map(|&i| Boundary {
            theta: cd.points[i].value.angle(),
            kind: BoundaryKind::Simple(i),
        })
        .chain(cd.degenerate_poles.iter().map(|&i| Boundary {
            theta: cd.points[i].value.angle(),
            kind: BoundaryKind::Pole {
                point: i,
                half: cd.points[i].multiplicity / 2,
            },
        }))
        .collect();
    boundaries.sort_by(|a, b| a.theta.total_cmp(&b.theta));

    let mut tracer = Tracer {
        chart: &chart,
        cfg,
        solves: 0,
        k: 0,
    };
    let closed = boundaries.is_empty();
    let gaps = boundaries.len().max(1);
    let range = |g: usize| -> (f64, f64) {
        if closed {
            (0.0, 2.0 * PI)
        } else {
            let lo = boundaries[g].theta;
            let hi = if g + 1 < gaps { boundaries[g + 1].theta } else { boundaries[0].theta + 2.0 * PI };
            (lo, hi)
        }
    };
    let offs = offsets(cfg, closed);

    let mut strands: Vec<Vec<Vec<Complex64>>> = Vec::with_capacity(gaps);
    let mut real_preimages = Vec::with_capacity(gaps);
    for g in 0..gaps {
        let (lo, hi) = range(g);
        tracer.k = exact_upper_count(f, 0.5 * (lo + hi));
        let s = tracer.trace_gap(lo, hi, &offs)?;
        real_preimages.push(tracer.real_roots(lo, hi, s.len())?);
        strands.push(s);
    }

    // Link strand ends across each boundary.
    let mut succ: HashMap<StrandId, StrandId> = HashMap::new();
    let mut begins: HashMap<StrandId, usize> = HashMap::new();
    let mut ends: HashMap<StrandId, usize> = HashMap::new();
    for g in 0..gaps {
        let next_gap = (g + 1) % gaps;
        let a: Vec<Complex64> = strands[g].iter().map(|s| *s.last().unwrap()).collect();
        let b: Vec<Complex64> = strands[next_gap].iter().map(|s| s[0]).collect();
        let mut ai: Vec<usize> = (0..a.len()).collect();
        let mut bi: Vec<usize> = (0..b.len()).collect();
        if !closed {
            let boundary = boundaries[next_gap % boundaries.len()];
            let (point, near) = match boundary.kind {
                BoundaryKind::Simple(c) => (c, 1),
                BoundaryKind::Pole { point, half } => (point, half),
            };
            let uc = chart.u_of(cd.points[point].point);
            let by_distance = |zs: &[Complex64]| {
                let mut idx: Vec<usize> = (0..zs.len()).collect();
                idx.sort_by(|&i, &j| (zs[i] - uc).norm().total_cmp(&(zs[j] - uc).norm()));
                idx
            };
            let clear = |zs: &[Complex64], idx: &[usize], k: usize| {
                idx.len() == k || (zs[idx[k - 1]] - uc).norm() < 0.5 * (zs[idx[k]] - uc).norm()
            };
            match boundary.kind {
                BoundaryKind::Simple(c) => {
                    if a.len() == b.len() + 1 {
                        let idx = by_distance(&a);
                        if !clear(&a, &idx, 1) {
                            return Err(ExtractError::TracingFailure("dying root not isolated".into()));
                        }
                        ends.insert((g, idx[0]), c);
                        ai.retain(|&i| i != idx[0]);
                    } else if b.len() == a.len() + 1 {
                        let idx = by_distance(&b);
                        if !clear(&b, &idx, 1) {
                            return Err(ExtractError::TracingFailure("born root not isolated".into()));
                        }
                        begins.insert((next_gap, idx[0]), c);
                        bi.retain(|&i| i != idx[0]);
                    } else {
                        return Err(ExtractError::TracingFailure(format!(
                            "upper root count goes from {} to {} at a simple critical value",
                            a.len(),
                            b.len()
                        )));
                    }
                }
                BoundaryKind::Pole { .. } => {
                    if a.len() != b.len() || a.len() < near {
                        return Err(ExtractError::TracingFailure("upper root count changes at a pole".into()));
                    }
                    let (ia, ib) = (by_distance(&a), by_distance(&b));
                    if !clear(&a, &ia, near) || !clear(&b, &ib, near) {
                        return Err(ExtractError::TracingFailure("roots near a pole not isolated".into()));
                    }
                    // Curves cross the pole straight: the root arriving at angle
                    // phi leaves at angle pi - phi.
                    let arg = |z: Complex64| (z - uc).arg();
                    let mut na: Vec<usize> = ia[..near].to_vec();
                    let mut nb: Vec<usize> = ib[..near].to_vec();
                    na.sort_by(|&i, &j| arg(a[i]).total_cmp(&arg(a[j])));
                    nb.sort_by(|&i, &j| arg(b[j]).total_cmp(&arg(b[i])));
                    for (&i, &j) in na.iter().zip(&nb) {
                        succ.insert((g, i), (next_gap, j));
                    }
                    ai.retain(|i| !na.contains(i));
                    bi.retain(|j| !nb.contains(j));
                }
            }
        }
        let ra: Vec<Complex64> = ai.iter().map(|&i| a[i]).collect();
        let rb: Vec<Complex64> = bi.iter().map(|&j| b[j]).collect();
        let perm = match_nearest(&ra, &rb)
            .ok_or_else(|| ExtractError::TracingFailure("cannot match roots across a critical value".into()))?;
        for (k, j) in perm.into_iter().enumerate() {
            succ.insert((g, ai[k]), (next_gap, bi[j]));
        }
    }

    // Walk the successor links into curves.
    let mut visited: HashMap<StrandId, ()> = HashMap::new();
    let mut curves = Vec::new();
    let disk_point = |c: usize| chart.disk(chart.u_of(cd.points[c].point));
    let mut starts: Vec<(StrandId, Option<usize>)> = begins.iter().map(|(&s, &c)| (s, Some(c))).collect();
    starts.sort();
    for g in 0..gaps {
        for i in 0..strands[g].len() {
            starts.push(((g, i), None));
        }
    }
    for (start, begin) in starts {
        if visited.contains_key(&start) {
            continue;
        }
        let mut counts = vec![0u64; gaps];
        let mut polyline = Vec::new();
        if let Some(c) = begin {
            polyline.push(disk_point(c));
        }
        let mut cur = start;
        let end = loop {
            visited.insert(cur, ());
            counts[cur.0] += 1;
            polyline.extend(strands[cur.0][cur.1].iter().map(|&u| chart.disk(u)));
            if let Some(&c) = ends.get(&cur) {
                break Some(c);
            }
            cur = *succ
                .get(&cur)
                .ok_or_else(|| ExtractError::TracingFailure("curve ends away from a critical point".into()))?;
            if cur == start {
                break None;
            }
            if visited.contains_key(&cur) {
                return Err(ExtractError::TracingFailure("curves merge".into()));
            }
        };
        let kind = match (begin, end) {
            (Some(from), Some(to)) => {
                polyline.push(disk_point(to));
                CurveKind::Chord { from, to }
            }
            (None, None) => CurveKind::Oval,
            _ => return Err(ExtractError::TracingFailure("curve with a single endpoint".into())),
        };
        curves.push(TracedCurve {
            kind,
            polyline,
            counts,
            weight: None,
        });
    }

    Ok(Tracing {
        chart,
        boundaries,
        curves,
        real_preimages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::critical::critical_data;

    fn trace(num: &[i64], den: &[i64]) -> Tracing {
        let f = RationalFunction::from_i64(num, den);
        let cd = critical_data(&f, 1e-9).unwrap();
        trace_s(&f, &cd, &TraceConfig::default()).unwrap()
    }

    #[test]
    fn square_minus_one_has_one_chord() {
        let t = trace(&[-1, 0, 1], &[1]);
        assert_eq!(t.curves.len(), 1);
        assert!(matches!(t.curves[0].kind, CurveKind::Chord { .. }));
        // The chord is the positive imaginary axis: |w| < 1 and Re w = ... on
        // the disk image of iR+, which is the real segment (-1, 1).
        for w in &t.curves[0].polyline {
            assert!(w.im.abs() < 1e-6 && w.re.abs() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn cubic_has_one_oval() {
        let t = trace(&[0, 3, 0, 1], &[1]);
        assert_eq!(t.curves.len(), 1);
        assert_eq!(t.curves[0].kind, CurveKind::Oval);
        assert_eq!(t.curves[0].counts, vec![1]);
    }

    #[test]
    fn identity_has_no_curves() {
        let t = trace(&[0, 1], &[1]);
        assert!(t.curves.is_empty());
        assert_eq!(t.real_preimages, vec![vec![t.real_preimages[0][0]]]);
    }

    #[test]
    fn offsets_are_sorted_and_inside() {
        let o = offsets(&TraceConfig::default(), false);
        assert!(o.windows(2).all(|w| w[0] < w[1]));
        assert!(o[0] > 0.0 && *o.last().unwrap() < 1.0);
    }
}
