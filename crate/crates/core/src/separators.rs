//! Vertex-cut machinery: minimum terminal separators, s-t separators, and
//! inclusionwise-minimal side sets, via unit-capacity max flow on the
//! vertex-split network.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::plane_graph::{GraphData, Instance};
use crate::VertexId;

/// A vertex cut with its source-side certificate: `side` is the set of
/// vertices still reachable from the sources once `cut` is removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    pub cut: Vec<VertexId>,
    pub side: Vec<VertexId>,
}

impl VertexCut {
    pub fn size(&self) -> usize {
        self.cut.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparatorResult {
    Cut(VertexCut),
    /// Every separator has size at least this bound.
    NoneBelow(usize),
}

const BIG: i64 = i64::MAX / 4;

struct FlowNet {
    first: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    cap: Vec<i64>,
}

const NONE: u32 = u32::MAX;

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet { first: vec![NONE; nodes], next: Vec::new(), to: Vec::new(), cap: Vec::new() }
    }

    fn arc(&mut self, from: u32, to: u32, cap: i64) {
        for (f, t, c) in [(from, to, cap), (to, from, 0)] {
            let id = self.to.len() as u32;
            self.to.push(t);
            self.cap.push(c);
            self.next.push(self.first[f as usize]);
            self.first[f as usize] = id;
        }
    }

    /// BFS augmenting paths (unit capacities dominate); stops once flow
    /// exceeds `limit`.
    fn max_flow_capped(&mut self, s: u32, t: u32, limit: i64) -> i64 {
        let mut flow = 0i64;
        let mut prev_arc = vec![NONE; self.first.len()];
        while flow <= limit {
            prev_arc.fill(NONE);
            prev_arc[s as usize] = NONE - 1;
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                let mut a = self.first[v as usize];
                while a != NONE {
                    let to = self.to[a as usize];
                    if self.cap[a as usize] > 0 && prev_arc[to as usize] == NONE {
                        prev_arc[to as usize] = a;
                        if to == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                    a = self.next[a as usize];
                }
            }
            if !reached {
                break;
            }
            let mut bottleneck = BIG;
            let mut v = t;
            while v != s {
                let a = prev_arc[v as usize] as usize;
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = prev_arc[v as usize] as usize;
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.to[a ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    fn residual_reachable(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.first.len()];
        seen[s as usize] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let mut a = self.first[v as usize];
            while a != NONE {
                let to = self.to[a as usize];
                if self.cap[a as usize] > 0 && !seen[to as usize] {
                    seen[to as usize] = true;
                    stack.push(to);
                }
                a = self.next[a as usize];
            }
        }
        seen
    }
}

fn inn(v: VertexId) -> u32 {
    2 * v
}

fn out(v: VertexId) -> u32 {
    2 * v + 1
}

/// Minimum vertex cut between the source set and the sink set, where
/// `protected` vertices (the terminals) may not be cut. Stops early once
/// the cut provably exceeds `limit`; the returned side set is the
/// inclusionwise minimal one containing the sources.
pub fn min_vertex_cut(
    graph: &GraphData,
    sources: &[VertexId],
    sinks: &[VertexId],
    protected: &BTreeSet<VertexId>,
    limit: usize,
) -> SeparatorResult {
    let n = graph.vertex_count();
    let super_s = 2 * n as u32;
    let super_t = super_s + 1;
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n as VertexId {
        let c = if protected.contains(&v) { BIG } else { 1 };
        net.arc(inn(v), out(v), c);
        for &u in graph.neighbors(v) {
            net.arc(out(v), inn(u), BIG);
        }
    }
    for &s in sources {
        net.arc(super_s, inn(s), BIG);
    }
    for &t in sinks {
        net.arc(out(t), super_t, BIG);
    }
    let flow = net.max_flow_capped(super_s, super_t, limit as i64);
    if flow > limit as i64 {
        return SeparatorResult::NoneBelow(limit + 1);
    }
    let reach = net.residual_reachable(super_s);
    let mut cut = Vec::new();
    let mut side = Vec::new();
    for v in 0..n as VertexId {
        let in_r = reach[inn(v) as usize];
        let out_r = reach[out(v) as usize];
        if out_r {
            side.push(v);
        } else if in_r {
            cut.push(v);
        }
    }
    debug_assert_eq!(cut.len() as i64, flow);
    SeparatorResult::Cut(VertexCut { cut, side })
}

/// Terminal separator of size exactly k if one exists (a set avoiding all
/// terminals whose removal separates every source from every sink).
/// `NoneBelow(k+1)` certifies the minimum is larger. A minimum below k is
/// impossible when a linkage exists and is reported as `NoLinkagePossible`.
pub fn min_terminal_separator(inst: &Instance) -> Result<SeparatorResult> {
    let k = inst.k();
    let sources = inst.sources();
    let sinks = inst.sinks();
    let protected = inst.terminal_set();
    match min_vertex_cut(&inst.graph, &sources, &sinks, &protected, k) {
        SeparatorResult::Cut(c) if c.size() < k => {
            Err(Error::NoLinkagePossible { min_cut: c.size(), k })
        }
        r => Ok(r),
    }
}

/// Minimum s-t vertex separator. Adjacent terminals admit no separator at
/// all, which callers treat as the one-face shortcut.
pub fn min_st_separator(
    graph: &GraphData,
    s: VertexId,
    t: VertexId,
    limit: usize,
) -> Result<SeparatorResult> {
    if graph.has_edge(s, t) {
        return Err(Error::AdjacentTerminals);
    }
    let protected: BTreeSet<VertexId> = [s, t].into_iter().collect();
    Ok(min_vertex_cut(graph, &[s], &[t], &protected, limit))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    Source,
    Sink,
}

/// The unique inclusionwise minimal vertex set X with the given endpoint in
/// it whose neighborhood is an s-t separator of size k.
pub fn minimal_side_set(
    graph: &GraphData,
    s: VertexId,
    t: VertexId,
    k: usize,
    side: CutSide,
) -> Result<Vec<VertexId>> {
    let (from, to) = match side {
        CutSide::Source => (s, t),
        CutSide::Sink => (t, s),
    };
    match min_st_separator(graph, from, to, k)? {
        SeparatorResult::Cut(c) if c.size() == k => Ok(c.side),
        SeparatorResult::Cut(c) => Err(Error::CutNotK { expected: k, found: c.size() }),
        SeparatorResult::NoneBelow(_) => Err(Error::CutNotK { expected: k, found: k + 1 }),
    }
}

/// Vertices outside `set` adjacent to it.
pub fn neighborhood(graph: &GraphData, set: &[VertexId]) -> Vec<VertexId> {
    let inside: BTreeSet<VertexId> = set.iter().copied().collect();
    let mut nb = BTreeSet::new();
    for &v in set {
        for &u in graph.neighbors(v) {
            if !inside.contains(&u) {
                nb.insert(u);
            }
        }
    }
    nb.into_iter().collect()
}

/// Does removing `cut` disconnect every vertex of `xs` from every vertex of
/// `ys`? Direct BFS check, used by tests and assertions.
pub fn separates(graph: &GraphData, cut: &[VertexId], xs: &[VertexId], ys: &[VertexId]) -> bool {
    let n = graph.vertex_count();
    let cut_set: BTreeSet<VertexId> = cut.iter().copied().collect();
    if xs.iter().chain(ys).any(|v| cut_set.contains(v)) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    for &x in xs {
        if !seen[x as usize] {
            seen[x as usize] = true;
            stack.push(x);
        }
    }
    while let Some(v) = stack.pop() {
        for &u in graph.neighbors(v) {
            if !cut_set.contains(&u) && !seen[u as usize] {
                seen[u as usize] = true;
                stack.push(u);
            }
        }
    }
    ys.iter().all(|&y| !seen[y as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::AdjGraph;

    fn abstract_graph(n: usize, edges: &[(VertexId, VertexId)]) -> GraphData {
        GraphData::Abstract(AdjGraph::new(n, edges).unwrap())
    }

    #[test]
    fn path_graph_cut_is_middle_vertex() {
        let g = abstract_graph(3, &[(0, 1), (1, 2)]);
        match min_st_separator(&g, 0, 2, 5).unwrap() {
            SeparatorResult::Cut(c) => {
                assert_eq!(c.cut, vec![1]);
                assert!(separates(&g, &c.cut, &[0], &[2]));
            }
            r => panic!("expected a cut, got {r:?}"),
        }
    }

    #[test]
    fn adjacent_terminals_rejected() {
        let g = abstract_graph(2, &[(0, 1)]);
        assert_eq!(min_st_separator(&g, 0, 1, 3).unwrap_err(), Error::AdjacentTerminals);
    }

    #[test]
    fn parallel_paths_match_menger() {
        // 4 internally disjoint s-t paths of length 2
        let mut edges = Vec::new();
        for m in 1..=4 {
            edges.push((0, m));
            edges.push((m, 5));
        }
        let g = abstract_graph(6, &edges);
        match min_st_separator(&g, 0, 5, 3).unwrap() {
            SeparatorResult::NoneBelow(b) => assert_eq!(b, 4),
            r => panic!("expected NoneBelow(4), got {r:?}"),
        }
        match min_st_separator(&g, 0, 5, 4).unwrap() {
            SeparatorResult::Cut(c) => assert_eq!(c.size(), 4),
            r => panic!("expected cut of size 4, got {r:?}"),
        }
    }

    #[test]
    fn minimal_side_set_on_path() {
        let g = abstract_graph(3, &[(0, 1), (1, 2)]);
        let x = minimal_side_set(&g, 0, 2, 1, CutSide::Source).unwrap();
        assert_eq!(x, vec![0]);
        let y = minimal_side_set(&g, 0, 2, 1, CutSide::Sink).unwrap();
        assert_eq!(y, vec![2]);
    }

    #[test]
    fn minimal_side_is_minimal_by_brute_force() {
        // two disjoint s-t routes through a bottleneck pair {2,3}:
        // s=0 -> 1 -> {2,3} -> 4 -> t=5, plus 0-2, 3-5 shortcuts
        let g = abstract_graph(6, &[(0, 1), (1, 2), (1, 3), (0, 2), (2, 4), (3, 4), (4, 5), (3, 5)]);
        let k = match min_st_separator(&g, 0, 5, 10).unwrap() {
            SeparatorResult::Cut(c) => c.size(),
            _ => unreachable!(),
        };
        let x = minimal_side_set(&g, 0, 5, k, CutSide::Source).unwrap();
        let u = neighborhood(&g, &x);
        assert_eq!(u.len(), k);
        assert!(separates(&g, &u, &[0], &[5]));
        // brute force: no proper subset X' with 0 in X' has |N(X')| = k
        let candidates: Vec<VertexId> = (0..6).collect();
        for mask in 0u32..(1 << 6) {
            let subset: Vec<VertexId> = candidates
                .iter()
                .copied()
                .filter(|&v| mask & (1 << v) != 0)
                .collect();
            if !subset.contains(&0) || subset.contains(&5) || subset.len() >= x.len() {
                continue;
            }
            if subset.iter().all(|v| x.contains(v)) && subset.len() < x.len() {
                let nb = neighborhood(&g, &subset);
                if nb.len() == k && separates(&g, &nb, &[0], &[5]) {
                    panic!("found smaller side set {subset:?}");
                }
            }
        }
    }

    #[test]
    fn brute_force_cut_agreement_random_graphs() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let n = rng.gen_range(4..9usize);
            let mut edges = Vec::new();
            for u in 0..n as VertexId {
                for v in (u + 1)..n as VertexId {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = abstract_graph(n, &edges);
            let s = 0;
            let t = (n - 1) as VertexId;
            if g.has_edge(s, t) {
                continue;
            }
            // brute-force minimum s-t separator size
            let mut brute = usize::MAX;
            let others: Vec<VertexId> =
                (0..n as VertexId).filter(|&v| v != s && v != t).collect();
            for mask in 0u32..(1 << others.len()) {
                let cut: Vec<VertexId> = others
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                if cut.len() < brute && separates(&g, &cut, &[s], &[t]) {
                    brute = cut.len();
                }
            }
            let got = match min_st_separator(&g, s, t, n).unwrap() {
                SeparatorResult::Cut(c) => {
                    assert!(separates(&g, &c.cut, &[s], &[t]));
                    c.size()
                }
                SeparatorResult::NoneBelow(b) => {
                    assert!(brute >= b, "flow said >= {b}, brute found {brute}");
                    continue;
                }
            };
            assert_eq!(got, brute);
        }
    }
}
