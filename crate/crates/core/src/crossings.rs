//! Topological measurements on embedded paths: crossing signs at shared
//! subwalks, crossing sequences, algebraic intersection numbers, and the
//! combinatorial reference curve used by the sequence engine.
//!
//! Two simple paths in a plane graph can only meet along shared vertices
//! and edges. Each maximal shared subwalk is resolved to a single signed
//! crossing (or to a touch, sign 0) by comparing on which side of the host
//! path the visitor enters and leaves, where sides are read off the
//! clockwise rotation at the subwalk's end vertices.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linkage::{Linkage, Path};
use crate::plane_graph::{DartId, FaceId, Instance, PlaneGraph};
use crate::words::CrossingSequence;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

/// Split the rotation at a vertex of degree `deg` by an outgoing and an
/// incoming position and classify a third position. Positions are doubled
/// so that corners (between neighbors i and i+1) can participate: neighbor
/// i sits at 2i, the corner after it at 2i+1.
///
/// Left means strictly between the outgoing and the incoming position in
/// clockwise order.
pub(crate) fn side_doubled(deg: usize, out: usize, inn: usize, x: usize) -> Side {
    let m = 2 * deg;
    let d_in = (inn + m - out) % m;
    let d_x = (x + m - out) % m;
    debug_assert!(d_x != 0 && d_x != d_in, "query coincides with the splitting darts");
    if d_x < d_in {
        Side::Left
    } else {
        Side::Right
    }
}

/// Maximal common subwalk of an oriented visitor path P and host path Q:
/// the vertices `q[q_start..=q_end]` appear consecutively in both paths
/// (a single shared vertex when `q_start == q_end`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedSubwalk {
    pub q_start: usize,
    pub q_end: usize,
    /// Position in P of `q[q_start]`.
    pub p_at_start: usize,
    /// Position in P of `q[q_end]`.
    pub p_at_end: usize,
}

/// All maximal shared subwalks of `p` with `q`, ordered along `q`.
pub fn shared_subwalks(p: &Path, q: &Path) -> Vec<SharedSubwalk> {
    let mut pos_in_p: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, &v) in p.vertices().iter().enumerate() {
        pos_in_p.insert(v, i);
    }
    let qs = q.vertices();
    let mut out = Vec::new();
    let mut i = 0;
    while i < qs.len() {
        let Some(&pi) = pos_in_p.get(&qs[i]) else {
            i += 1;
            continue;
        };
        let start = i;
        let mut prev_p = pi;
        while i + 1 < qs.len() {
            match pos_in_p.get(&qs[i + 1]) {
                Some(&pn) if pn.abs_diff(prev_p) == 1 => {
                    prev_p = pn;
                    i += 1;
                }
                _ => break,
            }
        }
        out.push(SharedSubwalk {
            q_start: start,
            q_end: i,
            p_at_start: *pos_in_p.get(&qs[start]).unwrap(),
            p_at_end: prev_p,
        });
        i += 1;
    }
    out
}

fn side_of_neighbor(g: &PlaneGraph, v: VertexId, out_nbr: VertexId, in_nbr: VertexId, x: VertexId) -> Side {
    let deg = g.degree(v);
    let out = 2 * g.pos_in_rot(v, out_nbr).unwrap();
    let inn = 2 * g.pos_in_rot(v, in_nbr).unwrap();
    let xp = 2 * g.pos_in_rot(v, x).unwrap();
    side_doubled(deg, out, inn, xp)
}

/// Local crossing sign of visitor `p` over host `q` at one shared subwalk:
/// +1 when p passes from q's left to q's right, -1 for right to left, 0
/// when it touches and returns to the same side.
///
/// The subwalk must be interior to both paths; a shared endpoint is
/// reported as `DegenerateAtTerminal`.
pub fn crossing_sign(g: &PlaneGraph, p: &Path, q: &Path, sw: &SharedSubwalk) -> Result<i8> {
    let qs = q.vertices();
    let ps = p.vertices();
    if sw.q_start == 0 || sw.q_end == qs.len() - 1 {
        let v = if sw.q_start == 0 { qs[0] } else { qs[qs.len() - 1] };
        return Err(Error::DegenerateAtTerminal { v });
    }
    let (p_lo, p_hi) = (sw.p_at_start.min(sw.p_at_end), sw.p_at_start.max(sw.p_at_end));
    if p_lo == 0 || p_hi == ps.len() - 1 {
        let v = if p_lo == 0 { ps[0] } else { ps[ps.len() - 1] };
        return Err(Error::DegenerateAtTerminal { v });
    }

    // P enters the subwalk at its end with the smaller P position.
    let (entry_q, exit_q) = if sw.p_at_start <= sw.p_at_end {
        (sw.q_start, sw.q_end)
    } else {
        (sw.q_end, sw.q_start)
    };
    let entry_v = qs[entry_q];
    let exit_v = qs[exit_q];
    let entry_dart_to = ps[p_lo - 1];
    let exit_dart_to = ps[p_hi + 1];

    let entry_side = side_of_neighbor(g, entry_v, qs[entry_q + 1], qs[entry_q - 1], entry_dart_to);
    let exit_side = side_of_neighbor(g, exit_v, qs[exit_q + 1], qs[exit_q - 1], exit_dart_to);
    Ok(match (entry_side, exit_side) {
        (Side::Left, Side::Right) => 1,
        (Side::Right, Side::Left) => -1,
        _ => 0,
    })
}

/// Crossing sequence of a path family over `q_j`: all nonzero-sign shared
/// subwalks of each family path with `q_j`, ordered along `q_j`, endpoint
/// subwalks of the paired path excluded.
pub fn crossing_sequence(
    g: &PlaneGraph,
    family: &Linkage,
    q_j: &Path,
    j: usize,
) -> Result<CrossingSequence> {
    let k = family.k();
    let q_last = q_j.vertices().len() - 1;
    let mut events: Vec<(usize, usize, i8)> = Vec::new();
    for (idx, p) in family.paths().iter().enumerate() {
        let i = idx + 1;
        for sw in shared_subwalks(p, q_j) {
            if sw.q_start == 0 || sw.q_end == q_last {
                if i == j {
                    // shared terminals of the paired path contribute nothing
                    continue;
                }
                return Err(Error::DegenerateAtTerminal {
                    v: q_j.vertices()[if sw.q_start == 0 { 0 } else { q_last }],
                });
            }
            let sign = crossing_sign(g, p, q_j, &sw)?;
            if sign != 0 {
                events.push((sw.q_start, i, sign));
            }
        }
    }
    events.sort_unstable();
    Ok(CrossingSequence { k, crossings: events.into_iter().map(|(_, i, s)| (i, s)).collect() })
}

/// Algebraic intersection number of two paths sharing no endpoints: the sum
/// of crossing signs over all maximal shared subwalks.
pub fn mu(g: &PlaneGraph, p: &Path, q: &Path) -> Result<i64> {
    let p_ends = [p.first(), p.last()];
    let q_ends = [q.first(), q.last()];
    for v in p_ends {
        if q.contains(v) {
            return Err(Error::SharedEndpoint { v });
        }
    }
    for v in q_ends {
        if p.contains(v) {
            return Err(Error::SharedEndpoint { v });
        }
    }
    let mut total = 0i64;
    for sw in shared_subwalks(p, q) {
        total += crossing_sign(g, p, q, &sw)? as i64;
    }
    Ok(total)
}

/// The common value of mu(P_i, Q_j) over all i != j in a two-face instance
/// (0 when k = 1). Raises `InconsistentMu` if the values disagree, which
/// indicates an embedding or sign bug rather than a property of the input.
pub fn mu_two_face(inst: &Instance, p: &Linkage, q: &Linkage) -> Result<i64> {
    let g = inst.plane()?;
    let k = p.k();
    if k <= 1 {
        return Ok(0);
    }
    let mut common: Option<i64> = None;
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let value = mu(g, &p.paths()[i], &q.paths()[j])?;
            match common {
                None => common = Some(value),
                Some(c) if c != value => {
                    return Err(Error::InconsistentMu { i, j, expected: c, found: value })
                }
                _ => {}
            }
        }
    }
    Ok(common.unwrap())
}

/// Simple curve from the source face to the sink face, realized as a dual
/// path: it crosses edge interiors only, never vertices. Traversing a
/// crossed dart shifts the universal-cover copy index by the stored delta.
#[derive(Debug, Clone)]
pub struct ReferenceCurve {
    /// Faces visited, source face first, sink face last.
    pub faces: Vec<FaceId>,
    /// Crossed darts in curve order; dart i points out of faces[i].
    pub crossed: Vec<DartId>,
    deltas: BTreeMap<DartId, i64>,
}

impl ReferenceCurve {
    /// Copy-index shift when traversing dart `d` (0 for uncrossed edges).
    pub fn delta(&self, d: DartId) -> i64 {
        self.deltas.get(&d).copied().unwrap_or(0)
    }

    pub fn crosses_edge_count(&self) -> usize {
        self.crossed.len()
    }
}

/// Build a reference curve from the source face to the sink face avoiding
/// every edge used by `avoid`. The curve is therefore disjoint from the
/// linkage, so each of its paths has intersection number 0 with the curve.
///
/// Deltas are calibrated so that the traced boundary walk of the source
/// face has total shift +1.
pub fn reference_curve(inst: &Instance, avoid: &Linkage) -> Result<ReferenceCurve> {
    let g = inst.plane()?;
    let (s_face, t_face) = match (inst.s_face, inst.t_face) {
        (Some(a), Some(b)) if a != b => (a, b),
        _ => return Err(Error::InvalidInput("reference curve needs two distinct faces")),
    };
    let mut blocked: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for p in avoid.paths() {
        for w in p.vertices().windows(2) {
            blocked.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }

    // deterministic BFS over faces
    let nf = g.faces().len();
    let mut prev: Vec<Option<(FaceId, DartId)>> = vec![None; nf];
    let mut seen = vec![false; nf];
    let mut queue = VecDeque::new();
    seen[s_face as usize] = true;
    queue.push_back(s_face);
    'bfs: while let Some(f) = queue.pop_front() {
        for &d in &g.face(f as FaceId).darts {
            let (u, v) = (g.tail(d), g.head(d));
            if blocked.contains(&(u.min(v), u.max(v))) {
                continue;
            }
            let f2 = g.face_left_of(g.twin(d));
            if f2 == f || seen[f2 as usize] {
                continue;
            }
            seen[f2 as usize] = true;
            prev[f2 as usize] = Some((f, d));
            if f2 == t_face {
                break 'bfs;
            }
            queue.push_back(f2);
        }
    }
    if !seen[t_face as usize] {
        return Err(Error::NoDualPath);
    }

    let mut faces = vec![t_face];
    let mut crossed_rev = Vec::new();
    let mut cur = t_face;
    while cur != s_face {
        let (pf, d) = prev[cur as usize].unwrap();
        crossed_rev.push(d);
        faces.push(pf);
        cur = pf;
    }
    faces.reverse();
    let crossed: Vec<DartId> = crossed_rev.into_iter().rev().collect();

    // provisional orientation: crossing in the stored dart's direction is +1
    let mut deltas = BTreeMap::new();
    for &d in &crossed {
        deltas.insert(d, 1i64);
        deltas.insert(g.twin(d), -1i64);
    }
    let mut curve = ReferenceCurve { faces, crossed, deltas };

    // calibrate: the traced boundary walk of the source face shifts by +1
    let boundary_shift: i64 = g.face(s_face).darts.iter().map(|&d| curve.delta(d)).sum();
    debug_assert_eq!(boundary_shift.abs(), 1);
    if boundary_shift < 0 {
        for v in curve.deltas.values_mut() {
            *v = -*v;
        }
    }
    Ok(curve)
}

/// Net signed number of curve crossings along a walk: the copy index of the
/// walk's end relative to its start in the universal cover.
pub fn lift_index(g: &PlaneGraph, curve: &ReferenceCurve, walk: &[VertexId]) -> i64 {
    walk.windows(2)
        .map(|w| curve.delta(g.dart(w[0], w[1]).expect("walk follows edges")))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::Path;
    use alloc::vec;

    // Plus-shaped crossing: host path q runs 0-2-1 (west, center, east),
    // visitor p runs 3-2-4 (south, center, north). Rotation at the center
    // lists neighbors clockwise; with rotation [east, south, west, north]
    // the visitor goes from q's left to q's right.
    fn plus_graph(center_rot: Vec<VertexId>) -> PlaneGraph {
        PlaneGraph::new(vec![
            vec![2], // 0 west
            vec![2], // 1 east
            center_rot,
            vec![2], // 3 south
            vec![2], // 4 north
        ])
        .unwrap()
    }

    #[test]
    fn transverse_crossing_signs() {
        let g = plus_graph(vec![1, 3, 0, 4]);
        let q = Path(vec![0, 2, 1]);
        let p = Path(vec![3, 2, 4]);
        let sws = shared_subwalks(&p, &q);
        assert_eq!(sws.len(), 1);
        let s = crossing_sign(&g, &p, &q, &sws[0]).unwrap();
        let s_rev = crossing_sign(&g, &p.reversed(), &q, &sws[0]).unwrap();
        assert_eq!(s.abs(), 1);
        assert_eq!(s_rev, -s, "reversing the visitor flips the sign");
        // reversing the host flips the sign too
        let sws_q = shared_subwalks(&p, &q.reversed());
        let s_qrev = crossing_sign(&g, &p, &q.reversed(), &sws_q[0]).unwrap();
        assert_eq!(s_qrev, -s);
    }

    #[test]
    fn touch_has_sign_zero() {
        // visitor arrives from south and leaves to south-adjacent side:
        // rotation [east, south, north, west] puts south and north on the
        // same side of the host? No: make a degree-5 center with two darts
        // on one side.
        let g = PlaneGraph::new(vec![
            vec![2],          // 0 west
            vec![2],          // 1 east
            vec![1, 3, 4, 0], // 2 center: east, se, sw, west (visitor dips from below)
            vec![2],          // 3 se
            vec![2],          // 4 sw
        ])
        .unwrap();
        let q = Path(vec![0, 2, 1]);
        let p = Path(vec![3, 2, 4]);
        let sws = shared_subwalks(&p, &q);
        assert_eq!(crossing_sign(&g, &p, &q, &sws[0]).unwrap(), 0);
    }

    #[test]
    fn disjoint_paths_have_mu_zero() {
        let g = PlaneGraph::new(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        let p = Path(vec![0, 1]);
        let q = Path(vec![2, 3]);
        assert_eq!(mu(&g, &p, &q).unwrap(), 0);
    }

    #[test]
    fn mu_antisymmetric() {
        let g = plus_graph(vec![1, 3, 0, 4]);
        let q = Path(vec![0, 2, 1]);
        let p = Path(vec![3, 2, 4]);
        assert_eq!(mu(&g, &p, &q).unwrap(), -mu(&g, &q, &p).unwrap());
    }

    #[test]
    fn shared_endpoint_rejected() {
        let g = PlaneGraph::new(vec![vec![1, 2], vec![0], vec![0]]).unwrap();
        let p = Path(vec![1, 0]);
        let q = Path(vec![0, 2]);
        assert!(matches!(mu(&g, &p, &q), Err(Error::SharedEndpoint { .. })));
    }

    #[test]
    fn subwalk_extraction_handles_runs_and_islands() {
        // p: 0-1-2-3-4, q: 5-1-2-6-4-7 shares run [1,2] and island [4]
        let g = PlaneGraph::new(vec![
            vec![1],          // 0
            vec![0, 2, 5],    // 1
            vec![1, 3, 6],    // 2
            vec![2, 4],       // 3
            vec![3, 6, 7],    // 4
            vec![1],          // 5
            vec![2, 4],       // 6
            vec![4],          // 7
        ])
        .unwrap();
        let p = Path(vec![0, 1, 2, 3, 4]);
        let q = Path(vec![5, 1, 2, 6, 4, 7]);
        let sws = shared_subwalks(&p, &q);
        assert_eq!(sws.len(), 2);
        assert_eq!((sws[0].q_start, sws[0].q_end), (1, 2));
        assert_eq!((sws[1].q_start, sws[1].q_end), (4, 4));
        let _ = g;
    }
}
