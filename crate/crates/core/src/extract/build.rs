use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;

use super::critical::{CriticalData, SpherePoint};
use super::function::RationalFunction;
use super::trace::{CurveKind, Tracing};
use super::ExtractError;
use crate::garden::{faces, ChordDiagram, Direction, Edge, Garden, Weight, WeightedTree};

fn internal(msg: impl Into<String>) -> ExtractError {
    ExtractError::Internal(msg.into())
}

/// Simple real critical points in counterclockwise order along the real
/// circle, starting after infinity: `positions[p]` is an index into the
/// critical points.
fn positions(cd: &CriticalData) -> Vec<usize> {
    let mut p = cd.real.clone();
    p.sort_by(|&a, &b| cd.points[a].point.angle().total_cmp(&cd.points[b].point.angle()));
    p
}

/// Arc containing the real point at angle `psi`. Arc `i` runs from position
/// `i` to `i + 1`; the last arc passes through infinity unless infinity is
/// the last position.
fn arc_of(angles: &[f64], psi: f64) -> usize {
    let k = angles.len();
    if k == 0 {
        return 0;
    }
    (0..k - 1).find(|&i| angles[i] < psi && psi < angles[i + 1]).unwrap_or(k - 1)
}

/// Real preimages per arc and gap.
fn arc_counts(cd: &CriticalData, tr: &Tracing) -> Vec<Vec<u64>> {
    let pos = positions(cd);
    let angles: Vec<f64> = pos.iter().map(|&i| cd.points[i].point.angle()).collect();
    let arcs = pos.len().max(1);
    let mut counts = vec![vec![0u64; tr.gap_count()]; arcs];
    for (g, psis) in tr.real_preimages.iter().enumerate() {
        for &psi in psis {
            counts[arc_of(&angles, psi)][g] += 1;
        }
    }
    counts
}

/// Covering multiplicities: the minimum preimage count over gaps for arcs
/// and chords; ovals must cover every value equally often. Returns the arc
/// weights and fills in the curve weights.
pub fn weights(cd: &CriticalData, tr: &mut Tracing) -> Result<Vec<Weight>, ExtractError> {
    for c in &mut tr.curves {
        let min = c.counts.iter().copied().min().unwrap_or(0);
        if c.kind == CurveKind::Oval && c.counts.iter().any(|&k| k != min) {
            return Err(ExtractError::TracingFailure(format!(
                "oval covers values unevenly: {:?}",
                c.counts
            )));
        }
        c.weight = Some(min);
    }
    Ok(arc_counts(cd, tr)
        .iter()
        .map(|per_gap| per_gap.iter().copied().min().unwrap_or(0))
        .collect())
}

fn exact_real(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite critical point")
}

/// Whether the value increases along arc 0, from the sign of the Wronskian
/// at a rational point inside it.
fn arc_zero_increasing(f: &RationalFunction, cd: &CriticalData, pos: &[usize]) -> Result<bool, ExtractError> {
    let w = f.num.derivative().mul(&f.den).sub(&f.num.mul(&f.den.derivative()));
    let x0 = match cd.points[pos[0]].point {
        SpherePoint::Finite(z) => z.re,
        SpherePoint::Infinity => return Err(internal("infinity is not the first position")),
    };
    let candidates: Vec<BigRational> = match cd.points[pos[1]].point {
        SpherePoint::Finite(z) => [0.5, 1.0 / 3.0, 2.0 / 3.0, 0.2, 0.8]
            .iter()
            .map(|s| exact_real(x0 + s * (z.re - x0)))
            .collect(),
        SpherePoint::Infinity => [1.0, 2.0, 0.5, 3.0, 0.25]
            .iter()
            .map(|d| exact_real(x0 + d * (1.0 + x0.abs())))
            .collect(),
    };
    candidates
        .iter()
        .map(|x| w.sign_at(x))
        .find(|&s| s != 0)
        .map(|s| s > 0)
        .ok_or_else(|| internal("Wronskian vanishes at every probe of arc 0"))
}

fn winding(polygon: &[Complex64], p: Complex64) -> i64 {
    let k = polygon.len();
    let total: f64 = (0..k)
        .map(|i| ((polygon[(i + 1) % k] - p) / (polygon[i] - p)).arg())
        .sum();
    (total / (2.0 * PI)).round() as i64
}

fn circle_arc(from: f64, to: f64) -> Vec<Complex64> {
    let span = (to - from).rem_euclid(2.0 * PI);
    (0..=64).map(|k| Complex64::from_polar(1.0, from + span * k as f64 / 64.0)).collect()
}

/// The garden of `f` from its traced curves. Every count the tracing
/// produced is cross-checked against the combinatorics of the result.
pub fn build_garden(f: &RationalFunction, cd: &CriticalData, tr: &Tracing) -> Result<Garden, ExtractError> {
    let pos = positions(cd);
    let order = pos.len();
    let l = order / 2;
    let mut at_position = vec![usize::MAX; cd.points.len()];
    for (p, &c) in pos.iter().enumerate() {
        at_position[c] = p;
    }
    let mut labels = vec![0; order];
    for (rank, &c) in cd.real.iter().enumerate() {
        labels[at_position[c]] = rank + 1;
    }

    let mut weights_missing = false;
    let mut chords: Vec<([usize; 2], (usize, usize), Weight, usize)> = Vec::new();
    let mut ovals: Vec<usize> = Vec::new();
    for (idx, c) in tr.curves.iter().enumerate() {
        weights_missing |= c.weight.is_none();
        match c.kind {
            CurveKind::Chord { from, to } => {
                let (a, b) = (at_position[from], at_position[to]);
                if a == usize::MAX || b == usize::MAX || a == b {
                    return Err(internal("chord endpoint is not a vertex"));
                }
                chords.push(([a.min(b), a.max(b)], (a, b), c.weight.unwrap_or(0), idx));
            }
            CurveKind::Oval => ovals.push(idx),
        }
    }
    if weights_missing {
        return Err(internal("curve weights have not been computed"));
    }
    if chords.len() != l {
        return Err(internal(format!("{} chords for {} real critical points", chords.len(), order)));
    }
    chords.sort();

    let direction = if l == 0 {
        None
    } else {
        let up = arc_zero_increasing(f, cd, &pos)?;
        let dir = if up { Direction::Forward } else { Direction::Backward };
        for (_, (from, to), _, _) in &chords {
            // A chord directed a -> b follows the counterclockwise arc ending at a.
            if !dir.arc_is_ccw((from + order - 1) % order) {
                return Err(internal(format!("chord {from} -> {to} disagrees with the arc directions")));
            }
        }
        Some(dir)
    };

    let counts = arc_counts(cd, tr);
    let arc_weights: Vec<Weight> = counts.iter().map(|g| g.iter().copied().min().unwrap_or(0)).collect();
    let diagram = ChordDiagram {
        order,
        matching: chords.iter().map(|c| c.0).collect(),
        direction,
        labels,
        arc_weights,
        chord_weights: chords.iter().map(|c| c.2).collect(),
    };
    let face_list = faces(&diagram).map_err(|e| internal(format!("traced diagram is invalid: {e}")))?;

    // Each face boundary covers the real circle exactly t_j times.
    for face in &face_list {
        for g in 0..tr.gap_count() {
            let on_boundary: u64 = face
                .edges
                .iter()
                .map(|e| match *e {
                    Edge::Arc(a) => counts[a][g],
                    Edge::Chord(k) => tr.curves[chords[k].3].counts[g],
                })
                .sum();
            if on_boundary != face.total {
                return Err(internal(format!(
                    "face {} boundary covers a value {on_boundary} times, root weight ≠ t_j = {}",
                    face.id, face.total
                )));
            }
        }
    }

    // Locate each oval: its face, then its parent oval.
    let face_of_oval: Vec<usize> = if l == 0 {
        vec![0; ovals.len()]
    } else {
        let corner = |p: usize| {
            let c = cd.points[pos[p]].point;
            tr.chart.disk(tr.chart.u_of(c)).arg()
        };
        let polygons: Vec<Vec<Complex64>> = face_list
            .iter()
            .map(|face| {
                let k = face.vertices.len();
                let mut poly = Vec::new();
                for i in 0..k {
                    let (v, next) = (face.vertices[i], face.vertices[(i + 1) % k]);
                    match face.edges[i] {
                        Edge::Arc(a) => {
                            let mut pts = circle_arc(corner(a), corner((a + 1) % order));
                            if v != a {
                                pts.reverse();
                            }
                            poly.extend(pts);
                        }
                        Edge::Chord(c) => {
                            let (_, (from, _), _, idx) = chords[c];
                            let mut pts = tr.curves[idx].polyline.clone();
                            if v != from {
                                pts.reverse();
                            }
                            debug_assert!(v != next);
                            poly.extend(pts);
                        }
                    }
                }
                poly
            })
            .collect();
        ovals
            .iter()
            .map(|&o| {
                let p = tr.curves[o].polyline[0];
                let inside: Vec<usize> = (0..polygons.len()).filter(|&f| winding(&polygons[f], p) != 0).collect();
                match inside.as_slice() {
                    [f] => Ok(*f),
                    _ => Err(internal(format!("oval lies in {} faces", inside.len()))),
                }
            })
            .collect::<Result<_, _>>()?
    };

    let contains = |outer: usize, inner: usize| winding(&tr.curves[ovals[outer]].polyline, tr.curves[ovals[inner]].polyline[0]) != 0;
    let depth: Vec<usize> = (0..ovals.len())
        .map(|i| (0..ovals.len()).filter(|&j| j != i && contains(j, i)).count())
        .collect();
    let parent: Vec<Option<usize>> = (0..ovals.len())
        .map(|i| {
            (0..ovals.len())
                .filter(|&j| j != i && contains(j, i))
                .max_by_key(|&j| depth[j])
        })
        .collect();

    let mut trees = Vec::with_capacity(face_list.len());
    for face in &face_list {
        let mut members: Vec<usize> = (0..ovals.len()).filter(|&i| face_of_oval[i] == face.id).collect();
        members.sort_by_key(|&i| (depth[i], i));
        let mut node_of = vec![usize::MAX; ovals.len()];
        let mut spec: Vec<(Option<usize>, Weight)> = vec![(None, face.total)];
        for &i in &members {
            let parent_node = match parent[i] {
                None => 0,
                Some(j) if face_of_oval[j] == face.id && node_of[j] != usize::MAX => node_of[j],
                Some(_) => return Err(internal("oval nested in an oval of another face")),
            };
            node_of[i] = spec.len();
            spec.push((Some(parent_node), tr.curves[ovals[i]].weight.unwrap_or(0)));
        }
        trees.push(WeightedTree::from_parents(&spec));
    }

    let garden = Garden::new(diagram, trees);
    let report = garden.validate();
    if !report.is_ok() {
        return Err(internal(format!("extracted garden is invalid: {report}")));
    }
    let total = garden.total_weight().map_err(|e| internal(e.to_string()))?;
    if total != cd.degree as Weight {
        return Err(internal(format!("total weight {total} differs from degree {}", cd.degree)));
    }
    Ok(garden)
}
