//! Instance factories: cylinder grids, an interlocked counterexample, and
//! the constraint-logic gadget reductions with configuration simulation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::crossings::mu_two_face;
use crate::error::{Error, Result};
use crate::linkage::{validate_linkage, Linkage, Path};
use crate::plane_graph::{classify_instance, FacesHint, GraphData, Instance, PlaneGraph, TerminalSpec};
use crate::VertexId;

pub mod ncl;
pub use ncl::*;

/// A generated instance bundled with its two linkages and printable
/// vertex names.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub instance: Instance,
    pub p: Linkage,
    pub q: Linkage,
    pub names: Vec<String>,
}

/// Cylindrical grid: `rows` concentric cycles of `cols` vertices joined by
/// radial spokes. The inner face is the source face, the outer face the
/// sink face; terminals sit evenly spaced on the first and last ring, and
/// the two linkages wind the prescribed number of times, so their relative
/// intersection number is `winding_q - winding_p` by construction.
pub fn gen_cylinder(
    rows: usize,
    cols: usize,
    k: usize,
    winding_p: i64,
    winding_q: i64,
) -> Result<GeneratedInstance> {
    let (graph, names) = cylinder_graph(rows, cols)?;
    if cols < 2 * k {
        return Err(Error::TooFewColumns { cols, need: 2 * k });
    }
    let term_cols: Vec<usize> = (0..k).map(|i| i * cols / k).collect();
    let (p, q, pairs) = if rows == 1 {
        // degenerate annulus: both boundary faces share the single ring;
        // sinks sit half a sector past their sources and the only linkage
        // is the arc family
        if winding_p != 0 || winding_q != 0 {
            return Err(Error::TooFewRows { rows, need: 3 });
        }
        let off = cols / (2 * k);
        let arcs = Linkage(
            term_cols
                .iter()
                .map(|&c| Path((0..=off).map(|d| vid(0, (c + d) % cols, cols)).collect()))
                .collect(),
        );
        let pairs = term_cols
            .iter()
            .map(|&c| (vid(0, c, cols), vid(0, (c + off) % cols, cols)))
            .collect();
        (arcs.clone(), arcs, pairs)
    } else {
        let p = spiral_linkage(rows, cols, &term_cols, winding_p)?;
        let q = spiral_linkage(rows, cols, &term_cols, winding_q)?;
        let pairs = term_cols
            .iter()
            .map(|&c| (vid(0, c, cols), vid(rows - 1, c, cols)))
            .collect();
        (p, q, pairs)
    };
    let ring0: Vec<VertexId> = (0..cols).map(|c| vid(0, c, cols)).collect();
    let ring_last: Vec<VertexId> = (0..cols).map(|c| vid(rows - 1, c, cols)).collect();
    let hint = FacesHint { s_face: ring0, t_face: ring_last };
    let instance = classify_instance(
        GraphData::Plane(graph),
        TerminalSpec::Pairs(pairs),
        Some(&hint),
    )?;
    validate_linkage(&instance, &p)?;
    validate_linkage(&instance, &q)?;
    if k >= 2 && rows >= 2 {
        debug_assert_eq!(mu_two_face(&instance, &p, &q).unwrap(), winding_q - winding_p);
    }
    Ok(GeneratedInstance { instance, p, q, names })
}

fn vid(r: usize, c: usize, cols: usize) -> VertexId {
    (r * cols + c) as VertexId
}

/// Plain cylinder graph with its vertex names.
pub fn cylinder_graph(rows: usize, cols: usize) -> Result<(PlaneGraph, Vec<String>)> {
    if rows < 1 {
        return Err(Error::TooFewRows { rows, need: 1 });
    }
    if cols < 3 {
        return Err(Error::TooFewColumns { cols, need: 3 });
    }
    let mut rot = Vec::with_capacity(rows * cols);
    let mut names = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            // outward, ring-next, inward, ring-prev; missing rows dropped
            let mut nbrs = Vec::with_capacity(4);
            if r + 1 < rows {
                nbrs.push(vid(r + 1, c, cols));
            }
            nbrs.push(vid(r, (c + 1) % cols, cols));
            if r > 0 {
                nbrs.push(vid(r - 1, c, cols));
            }
            nbrs.push(vid(r, (c + cols - 1) % cols, cols));
            rot.push(nbrs);
            names.push(format!("r{r}c{c}"));
        }
    }
    Ok((PlaneGraph::new(rot)?, names))
}

/// Parallel spiral linkage: every path descends from ring 0 to the last
/// ring while sweeping `winding` full turns, all paths in lockstep so they
/// stay disjoint.
fn spiral_linkage(rows: usize, cols: usize, term_cols: &[usize], winding: i64) -> Result<Linkage> {
    let k = term_cols.len();
    let min_gap = (0..k)
        .map(|i| (term_cols[(i + 1) % k] + cols - term_cols[i]) % cols)
        .map(|g| if g == 0 { cols } else { g })
        .min()
        .unwrap_or(cols);
    if winding == 0 {
        let paths = term_cols
            .iter()
            .map(|&c| Path((0..rows).map(|r| vid(r, c, cols)).collect()))
            .collect();
        return Ok(Linkage(paths));
    }
    let per_ring = min_gap.saturating_sub(1);
    if per_ring == 0 {
        return Err(Error::TooFewColumns { cols, need: 2 * k });
    }
    let total = winding.unsigned_abs() as usize * cols;
    let travel_rings = total.div_ceil(per_ring);
    let need_rows = travel_rings + 2;
    if rows < need_rows {
        return Err(Error::TooFewRows { rows, need: need_rows });
    }
    let dir: i64 = if winding > 0 { 1 } else { -1 };
    let step_col = |c: usize, by: i64| -> usize {
        ((c as i64 + by).rem_euclid(cols as i64)) as usize
    };
    let mut paths = Vec::with_capacity(k);
    for &c0 in term_cols {
        let mut vs = vec![vid(0, c0, cols)];
        let mut col = c0;
        let mut remaining = total;
        for ring in 1..=travel_rings {
            vs.push(vid(ring, col, cols));
            let d = remaining.min(per_ring);
            for _ in 0..d {
                col = step_col(col, dir);
                vs.push(vid(ring, col, cols));
            }
            remaining -= d;
        }
        debug_assert_eq!(col, c0);
        for ring in travel_rings + 1..rows {
            vs.push(vid(ring, col, cols));
        }
        paths.push(Path(vs));
    }
    Ok(Linkage(paths))
}

/// Cylinder with one spoke layer replaced by a k-vertex bottleneck, so the
/// instance has a terminal separator of exactly size k. When `mismatch` is
/// set, the second linkage crosses the bottleneck one slot rotated, which
/// makes the instance a NO-instance of the separator kind.
pub fn gen_cylinder_bottleneck(cols: usize, k: usize, mismatch: bool) -> Result<GeneratedInstance> {
    let rows = 6usize;
    let attach = 2usize; // bottleneck sits between rings `attach` and `attach+1`
    if cols < 2 * k {
        return Err(Error::TooFewColumns { cols, need: 2 * k });
    }
    let term_cols: Vec<usize> = (0..k).map(|i| i * cols / k).collect();
    let n_grid = rows * cols;
    let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(n_grid + k);
    let mut names = Vec::with_capacity(n_grid + k);
    let bott = |i: usize| (n_grid + i) as VertexId;
    for r in 0..rows {
        for c in 0..cols {
            let mut nbrs = Vec::with_capacity(4);
            let down: Option<VertexId> = if r + 1 < rows {
                if r == attach {
                    term_cols.iter().position(|&tc| tc == c).map(bott)
                } else {
                    Some(vid(r + 1, c, cols))
                }
            } else {
                None
            };
            let up: Option<VertexId> = if r > 0 {
                if r == attach + 1 {
                    term_cols.iter().position(|&tc| tc == c).map(bott)
                } else {
                    Some(vid(r - 1, c, cols))
                }
            } else {
                None
            };
            if let Some(d) = down {
                nbrs.push(d);
            }
            nbrs.push(vid(r, (c + 1) % cols, cols));
            if let Some(u) = up {
                nbrs.push(u);
            }
            nbrs.push(vid(r, (c + cols - 1) % cols, cols));
            rot.push(nbrs);
            names.push(format!("r{r}c{c}"));
        }
    }
    for (i, &c) in term_cols.iter().enumerate() {
        rot.push(vec![vid(attach + 1, c, cols), vid(attach, c, cols)]);
        names.push(format!("u{i}"));
    }
    let graph = PlaneGraph::new(rot)?;

    let pairs: Vec<(VertexId, VertexId)> = term_cols
        .iter()
        .map(|&c| (vid(0, c, cols), vid(rows - 1, c, cols)))
        .collect();

    // straight linkage through the matching bottleneck vertices
    let straight = Linkage(
        term_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut vs: Vec<VertexId> = (0..=attach).map(|r| vid(r, c, cols)).collect();
                vs.push(bott(i));
                vs.extend((attach + 1..rows).map(|r| vid(r, c, cols)));
                Path(vs)
            })
            .collect(),
    );

    let q = if !mismatch {
        // detour variant of the straight linkage: same bottleneck slots,
        // different approach on ring 1
        Linkage(
            term_cols
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    let c2 = (c + 1) % cols;
                    let vs = vec![
                        vid(0, c, cols),
                        vid(1, c, cols),
                        vid(1, c2, cols),
                        vid(2, c2, cols),
                        vid(2, c, cols),
                        bott(i),
                        vid(3, c, cols),
                        vid(4, c, cols),
                        vid(5, c, cols),
                    ];
                    Path(vs)
                })
                .collect(),
        )
    } else {
        // cross the bottleneck one slot rotated, then come back
        Linkage(
            (0..k)
                .map(|i| {
                    let c = term_cols[i];
                    let c_next = term_cols[(i + 1) % k];
                    let mut vs = vec![vid(0, c, cols)];
                    vs.push(vid(1, c, cols));
                    let mut col = c;
                    while col != (c_next + cols - 1) % cols {
                        col = (col + 1) % cols;
                        vs.push(vid(1, col, cols));
                    }
                    vs.push(vid(2, col, cols));
                    vs.push(vid(2, c_next, cols));
                    vs.push(bott((i + 1) % k));
                    vs.push(vid(3, c_next, cols));
                    vs.push(vid(3, (c_next + cols - 1) % cols, cols));
                    let mut col = (c_next + cols - 1) % cols;
                    vs.push(vid(4, col, cols));
                    while col != c {
                        col = (col + cols - 1) % cols;
                        vs.push(vid(4, col, cols));
                    }
                    vs.push(vid(5, c, cols));
                    Path(vs)
                })
                .collect(),
        )
    };

    let ring0: Vec<VertexId> = (0..cols).map(|c| vid(0, c, cols)).collect();
    let ring_last: Vec<VertexId> = (0..cols).map(|c| vid(rows - 1, c, cols)).collect();
    let hint = FacesHint { s_face: ring0, t_face: ring_last };
    let instance = classify_instance(
        GraphData::Plane(graph),
        TerminalSpec::Pairs(pairs),
        Some(&hint),
    )?;
    validate_linkage(&instance, &straight)?;
    validate_linkage(&instance, &q)?;
    Ok(GeneratedInstance { instance, p: straight, q, names })
}

/// Sparse wound cylinder: the plain cylinder minus every middle-ring edge
/// unused by either linkage. Keeps the first and last ring intact (they
/// bound the designated faces) and all spokes (so no size-k terminal
/// separator appears), but prunes the reconfiguration space enough for the
/// exhaustive oracle.
pub fn gen_cylinder_lean(
    rows: usize,
    cols: usize,
    k: usize,
    winding_p: i64,
    winding_q: i64,
) -> Result<GeneratedInstance> {
    let full = gen_cylinder(rows, cols, k, winding_p, winding_q)?;
    let mut used: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for path in full.p.paths().iter().chain(full.q.paths()) {
        for w in path.vertices().windows(2) {
            used.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    let keep_edge = |a: VertexId, b: VertexId| -> bool {
        let (ra, ca) = ((a as usize) / cols, (a as usize) % cols);
        let rb = (b as usize) / cols;
        if ra != rb {
            return true; // spokes stay
        }
        if ra == 0 || ra == rows - 1 {
            return true; // boundary rings stay
        }
        let _ = ca;
        used.contains(&(a.min(b), a.max(b)))
    };
    let mut rot = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = vid(r, c, cols);
            let mut nbrs = Vec::with_capacity(4);
            if r + 1 < rows {
                nbrs.push(vid(r + 1, c, cols));
            }
            let nxt = vid(r, (c + 1) % cols, cols);
            if keep_edge(v, nxt) {
                nbrs.push(nxt);
            }
            if r > 0 {
                nbrs.push(vid(r - 1, c, cols));
            }
            let prv = vid(r, (c + cols - 1) % cols, cols);
            if keep_edge(v, prv) {
                nbrs.push(prv);
            }
            rot.push(nbrs);
        }
    }
    let graph = PlaneGraph::new(rot)?;
    let pairs = full.instance.pairs()?.to_vec();
    let ring0: Vec<VertexId> = (0..cols).map(|c| vid(0, c, cols)).collect();
    let ring_last: Vec<VertexId> = (0..cols).map(|c| vid(rows - 1, c, cols)).collect();
    let hint = FacesHint { s_face: ring0, t_face: ring_last };
    let instance = classify_instance(GraphData::Plane(graph), TerminalSpec::Pairs(pairs), Some(&hint))?;
    validate_linkage(&instance, &full.p)?;
    validate_linkage(&instance, &full.q)?;
    Ok(GeneratedInstance { instance, p: full.p, q: full.q, names: full.names })
}

/// Three-ring ladder with a one-vertex-per-slot bottleneck layer and
/// diagonal alternatives: sources on the inner cycle, a middle layer of k
/// isolated slot vertices, sinks on the outer cycle. Every path picks its
/// own slot or the next one over, so the instance carries a terminal
/// separator of size exactly k; with `mismatch` the second linkage uses
/// rotated slots (a NO-instance that the intersection number alone cannot
/// detect), and `doubled` subdivides the straight spokes into two parallel
/// routes so YES-instances have real moves.
pub fn gen_ladder_bottleneck(k: usize, mismatch: bool, doubled: bool) -> Result<GeneratedInstance> {
    if k < 2 {
        return Err(Error::InvalidInput("ladder needs k >= 2"));
    }
    let kk = k as VertexId;
    // layout: sources, slots, sinks, ring fillers, optional split spokes
    let s = |i: usize| (i % k) as VertexId;
    let u = |i: usize| kk + (i % k) as VertexId;
    let t = |i: usize| 2 * kk + (i % k) as VertexId;
    let fs = |i: usize| 3 * kk + (i % k) as VertexId; // filler after s_i
    let ft = |i: usize| 4 * kk + (i % k) as VertexId; // filler after t_i
    let mut n = 5 * k;
    let mut names: Vec<String> = (0..k)
        .map(|i| format!("s{i}"))
        .chain((0..k).map(|i| format!("u{i}")))
        .chain((0..k).map(|i| format!("t{i}")))
        .chain((0..k).map(|i| format!("xs{i}")))
        .chain((0..k).map(|i| format!("xt{i}")))
        .collect();
    // doubled mode: straight spoke s_i - u_i becomes s_i - a_i - u_i plus
    // s_i - b_i - u_i
    let a = |i: usize| (5 * k + 2 * (i % k)) as VertexId;
    let b = |i: usize| (5 * k + 2 * (i % k) + 1) as VertexId;
    if doubled {
        n += 2 * k;
        for i in 0..k {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
    }
    let mut rot: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for i in 0..k {
        // source ring: down-straight (possibly split), down-diagonal to
        // u_{i+1}, then ring neighbors through the fillers
        if doubled {
            rot[s(i) as usize] = vec![a(i), b(i), u(i + 1), fs(i), fs(i + k - 1)];
            rot[a(i) as usize] = vec![u(i), s(i)];
            rot[b(i) as usize] = vec![u(i), s(i)];
            rot[u(i) as usize] = vec![t(i), b(i), a(i), s(i + k - 1), t(i + k - 1)];
        } else {
            rot[s(i) as usize] = vec![u(i), u(i + 1), fs(i), fs(i + k - 1)];
            rot[u(i) as usize] = vec![t(i), s(i), s(i + k - 1), t(i + k - 1)];
        }
        rot[fs(i) as usize] = vec![s(i + 1), s(i)];
        rot[t(i) as usize] = vec![ft(i), u(i + 1), u(i), ft(i + k - 1)];
        rot[ft(i) as usize] = vec![t(i + 1), t(i)];
    }
    let graph = PlaneGraph::new(rot)?;
    let pairs: Vec<(VertexId, VertexId)> = (0..k).map(|i| (s(i), t(i))).collect();
    let straight = Linkage(
        (0..k)
            .map(|i| {
                if doubled {
                    Path(vec![s(i), a(i), u(i), t(i)])
                } else {
                    Path(vec![s(i), u(i), t(i)])
                }
            })
            .collect(),
    );
    let q = if mismatch {
        Linkage((0..k).map(|i| Path(vec![s(i), u(i + 1), t(i)])).collect())
    } else if doubled {
        Linkage((0..k).map(|i| Path(vec![s(i), b(i), u(i), t(i)])).collect())
    } else {
        straight.clone()
    };
    let mut sources: Vec<VertexId> = (0..k).map(s).collect();
    sources.extend((0..k).map(fs));
    let mut sinks: Vec<VertexId> = (0..k).map(t).collect();
    sinks.extend((0..k).map(ft));
    let hint = FacesHint { s_face: sources, t_face: sinks };
    let instance = classify_instance(GraphData::Plane(graph), TerminalSpec::Pairs(pairs), Some(&hint))?;
    validate_linkage(&instance, &straight)?;
    validate_linkage(&instance, &q)?;
    Ok(GeneratedInstance { instance, p: straight, q, names })
}

/// Two interlocked pairs where every single-path move is blocked although
/// the crossing words are trivial: the curve-level condition holds yet the
/// linkages are not reconfigurable. The blockade comes from touch points
/// (sign 0) between the alternative routes.
pub fn gen_figure1() -> Result<GeneratedInstance> {
    // Pair 1 routes: A = s1-a1-y-a2-t1, B = s1-b1-x-b2-t1.
    // Pair 2 routes: C = s2-c1-x-c2-t2, D = s2-d1-y-d2-t2.
    //   P = (A, C), Q = (B, D).
    // x blocks B against C; y blocks D against A. Rotations make both
    // contacts touches, not crossings.
    let s1 = 0;
    let t1 = 1;
    let s2 = 2;
    let t2 = 3;
    let a1 = 4;
    let y = 5; // on route A, also on route D
    let a2 = 6;
    let b1 = 7;
    let x = 8; // on route B, also on route C
    let b2 = 9;
    let c1 = 10;
    let c2 = 11;
    let d1 = 12;
    let d2 = 13;
    let rot: Vec<Vec<VertexId>> = vec![
        vec![a1, b1],         // s1
        vec![a2, b2],         // t1
        vec![c1, d1],         // s2
        vec![c2, d2],         // t2
        vec![s1, y],          // a1
        vec![a1, d1, d2, a2], // y: A passes a1->a2, D touches from one side
        vec![y, t1],          // a2
        vec![s1, x],          // b1
        vec![b1, b2, c2, c1], // x: B passes b1->b2, C touches from one side
        vec![x, t1],          // b2
        vec![s2, x],          // c1
        vec![x, t2],          // c2
        vec![s2, y],          // d1
        vec![y, t2],          // d2
    ];
    let graph = PlaneGraph::new(rot)?;
    let p = Linkage(vec![Path(vec![s1, a1, y, a2, t1]), Path(vec![s2, c1, x, c2, t2])]);
    let q = Linkage(vec![Path(vec![s1, b1, x, b2, t1]), Path(vec![s2, d1, y, d2, t2])]);
    let names = vec![
        "s1", "t1", "s2", "t2", "a1", "y", "a2", "b1", "x", "b2", "c1", "c2", "d1", "d2",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    let instance = classify_instance(
        GraphData::Plane(graph),
        TerminalSpec::Pairs(vec![(s1, t1), (s2, t2)]),
        None,
    )?;
    validate_linkage(&instance, &p)?;
    validate_linkage(&instance, &q)?;
    Ok(GeneratedInstance { instance, p, q, names })
}

/// All vertices of a linkage.
pub fn linkage_vertices(l: &Linkage) -> BTreeSet<VertexId> {
    l.paths().iter().flat_map(|p| p.vertices().iter().copied()).collect()
}
