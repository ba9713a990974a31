//! Ground-truth engine: exhaustive linkage enumeration and breadth-first
//! search over the reconfiguration graph. Desk-scale only; every decision
//! module is tested for agreement against this one.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linkage::{validate_linkage, validate_st_linkage, Linkage, Path, Sequence, StLinkage};
use crate::plane_graph::{GraphData, Instance, TerminalSpec};
use crate::VertexId;

/// Default cap on visited reconfiguration-graph nodes.
pub const DEFAULT_LIMIT: usize = 2_000_000;

/// All simple paths from `from` to `to` avoiding `forbidden`, in
/// deterministic DFS order.
pub fn enumerate_paths(
    graph: &GraphData,
    from: VertexId,
    to: VertexId,
    forbidden: &BTreeSet<VertexId>,
) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = vec![from];
    let mut on_path = BTreeSet::new();
    on_path.insert(from);
    dfs_paths(graph, to, forbidden, &mut stack, &mut on_path, &mut out);
    out
}

fn dfs_paths(
    graph: &GraphData,
    to: VertexId,
    forbidden: &BTreeSet<VertexId>,
    stack: &mut Vec<VertexId>,
    on_path: &mut BTreeSet<VertexId>,
    out: &mut Vec<Path>,
) {
    let cur = *stack.last().unwrap();
    if cur == to {
        out.push(Path(stack.clone()));
        return;
    }
    for &nb in graph.neighbors(cur) {
        if nb != to && forbidden.contains(&nb) {
            continue;
        }
        if on_path.contains(&nb) {
            continue;
        }
        stack.push(nb);
        on_path.insert(nb);
        dfs_paths(graph, to, forbidden, stack, on_path, out);
        stack.pop();
        on_path.remove(&nb);
    }
}

/// Either kind of linkage collection, matching the instance mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkageSet {
    Pairs(Vec<Linkage>),
    St(Vec<StLinkage>),
}

impl LinkageSet {
    pub fn len(&self) -> usize {
        match self {
            LinkageSet::Pairs(v) => v.len(),
            LinkageSet::St(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Enumerate every linkage of the instance (canonicalized), aborting with
/// `TooMany` past the limit.
pub fn enumerate_linkages(inst: &Instance, limit: usize) -> Result<LinkageSet> {
    match &inst.terminals {
        TerminalSpec::Pairs(pairs) => {
            let mut out = Vec::new();
            let mut chosen: Vec<Path> = Vec::new();
            let mut used: BTreeSet<VertexId> = BTreeSet::new();
            enumerate_pairs_rec(&inst.graph, pairs, 0, &mut chosen, &mut used, &mut out, limit)?;
            Ok(LinkageSet::Pairs(out))
        }
        TerminalSpec::St { s, t, k } => {
            let all = enumerate_paths(&inst.graph, *s, *t, &BTreeSet::new());
            let mut out = Vec::new();
            let mut chosen: Vec<Path> = Vec::new();
            enumerate_st_rec(&all, 0, *k, s, t, &mut chosen, &mut out, limit)?;
            Ok(LinkageSet::St(out))
        }
    }
}

fn enumerate_pairs_rec(
    graph: &GraphData,
    pairs: &[(VertexId, VertexId)],
    i: usize,
    chosen: &mut Vec<Path>,
    used: &mut BTreeSet<VertexId>,
    out: &mut Vec<Linkage>,
    limit: usize,
) -> Result<()> {
    if i == pairs.len() {
        if out.len() >= limit {
            return Err(Error::TooMany { limit });
        }
        out.push(Linkage(chosen.clone()));
        return Ok(());
    }
    let (s, t) = pairs[i];
    let mut forbidden = used.clone();
    // later terminals may not be used by this path either
    for &(a, b) in &pairs[i + 1..] {
        forbidden.insert(a);
        forbidden.insert(b);
    }
    for p in enumerate_paths(graph, s, t, &forbidden) {
        for &v in p.vertices() {
            used.insert(v);
        }
        chosen.push(p);
        enumerate_pairs_rec(graph, pairs, i + 1, chosen, used, out, limit)?;
        let p = chosen.pop().unwrap();
        for v in p.vertices() {
            used.remove(v);
        }
    }
    Ok(())
}

fn enumerate_st_rec(
    all: &[Path],
    from: usize,
    remaining: usize,
    s: &VertexId,
    t: &VertexId,
    chosen: &mut Vec<Path>,
    out: &mut Vec<StLinkage>,
    limit: usize,
) -> Result<()> {
    if remaining == 0 {
        if out.len() >= limit {
            return Err(Error::TooMany { limit });
        }
        out.push(StLinkage::new(chosen.clone()));
        return Ok(());
    }
    for idx in from..all.len() {
        let cand = &all[idx];
        let disjoint = chosen.iter().all(|p| {
            p.vertices()
                .iter()
                .all(|v| v == s || v == t || !cand.contains(*v))
        });
        if !disjoint {
            continue;
        }
        chosen.push(cand.clone());
        enumerate_st_rec(all, idx + 1, remaining - 1, s, t, chosen, out, limit)?;
        chosen.pop();
    }
    Ok(())
}

fn pair_neighbors(inst: &Instance, l: &Linkage) -> Vec<Linkage> {
    let pairs = inst.pairs().expect("pairs mode");
    let mut out = Vec::new();
    for i in 0..l.k() {
        let mut used: BTreeSet<VertexId> = BTreeSet::new();
        for (j, p) in l.paths().iter().enumerate() {
            if j != i {
                used.extend(p.vertices().iter().copied());
            }
        }
        let (s, t) = pairs[i];
        for p in enumerate_paths(&inst.graph, s, t, &used) {
            if p != l.paths()[i] {
                out.push(l.with_path(i, p));
            }
        }
    }
    out
}

fn st_neighbors(inst: &Instance, l: &StLinkage) -> Vec<StLinkage> {
    let (s, t) = match inst.terminals {
        TerminalSpec::St { s, t, .. } => (s, t),
        _ => unreachable!(),
    };
    let mut out = Vec::new();
    for old in l.paths() {
        let mut forbidden: BTreeSet<VertexId> = BTreeSet::new();
        for p in l.paths() {
            if p != old {
                forbidden.extend(
                    p.vertices().iter().copied().filter(|&v| v != s && v != t),
                );
            }
        }
        for cand in enumerate_paths(&inst.graph, s, t, &forbidden) {
            if &cand != old && !l.paths().contains(&cand) {
                out.push(l.replace(old, cand));
            }
        }
    }
    out
}

fn validate_inputs(inst: &Instance, a: &LinkageRef, b: &LinkageRef) -> Result<()> {
    match (a, b) {
        (LinkageRef::Pairs(p), LinkageRef::Pairs(q)) => {
            validate_linkage(inst, p)?;
            validate_linkage(inst, q)
        }
        (LinkageRef::St(p), LinkageRef::St(q)) => {
            validate_st_linkage(inst, p)?;
            validate_st_linkage(inst, q)
        }
        _ => Err(Error::InvalidInput("mixed linkage modes")),
    }
}

enum LinkageRef<'a> {
    Pairs(&'a Linkage),
    St(&'a StLinkage),
}

/// BFS reachability in the reconfiguration graph.
pub fn oracle_decide(inst: &Instance, p: &Linkage, q: &Linkage, limit: usize) -> Result<bool> {
    validate_inputs(inst, &LinkageRef::Pairs(p), &LinkageRef::Pairs(q))?;
    Ok(bfs(inst, p.clone(), q, limit, pair_neighbors)?.is_some())
}

pub fn oracle_decide_st(inst: &Instance, p: &StLinkage, q: &StLinkage, limit: usize) -> Result<bool> {
    validate_inputs(inst, &LinkageRef::St(p), &LinkageRef::St(q))?;
    Ok(bfs(inst, p.clone(), q, limit, st_neighbors)?.is_some())
}

/// BFS-shortest reconfiguration sequence, if any.
pub fn oracle_shortest(
    inst: &Instance,
    p: &Linkage,
    q: &Linkage,
    limit: usize,
) -> Result<Option<Sequence>> {
    validate_inputs(inst, &LinkageRef::Pairs(p), &LinkageRef::Pairs(q))?;
    Ok(bfs(inst, p.clone(), q, limit, pair_neighbors)?.map(Sequence::Pairs))
}

pub fn oracle_shortest_st(
    inst: &Instance,
    p: &StLinkage,
    q: &StLinkage,
    limit: usize,
) -> Result<Option<Sequence>> {
    validate_inputs(inst, &LinkageRef::St(p), &LinkageRef::St(q))?;
    Ok(bfs(inst, p.clone(), q, limit, st_neighbors)?.map(Sequence::St))
}

/// Flattened canonical key; cheap to order and hash-free.
trait CanonicalKey {
    fn key(&self) -> Vec<u32>;
}

impl CanonicalKey for Linkage {
    fn key(&self) -> Vec<u32> {
        let mut k = Vec::new();
        for p in self.paths() {
            k.extend_from_slice(p.vertices());
            k.push(u32::MAX);
        }
        k
    }
}

impl CanonicalKey for StLinkage {
    fn key(&self) -> Vec<u32> {
        let mut k = Vec::new();
        for p in self.paths() {
            k.extend_from_slice(p.vertices());
            k.push(u32::MAX);
        }
        k
    }
}

fn bfs<L, F>(inst: &Instance, start: L, goal: &L, limit: usize, neighbors: F) -> Result<Option<Vec<L>>>
where
    L: Clone + Ord + CanonicalKey,
    F: Fn(&Instance, &L) -> Vec<L>,
{
    if &start == goal {
        return Ok(Some(vec![start]));
    }
    let goal_key = goal.key();
    // parent index into `order` for path reconstruction
    let mut seen: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    let mut order: Vec<(L, u32)> = Vec::new();
    let mut queue: VecDeque<u32> = VecDeque::new();
    seen.insert(start.key(), 0);
    order.push((start, 0));
    queue.push_back(0);
    while let Some(cur_idx) = queue.pop_front() {
        let cur = order[cur_idx as usize].0.clone();
        for nb in neighbors(inst, &cur) {
            let key = nb.key();
            if seen.contains_key(&key) {
                continue;
            }
            let idx = order.len() as u32;
            seen.insert(key.clone(), idx);
            order.push((nb, cur_idx));
            if order.len() > limit {
                return Err(Error::TooMany { limit });
            }
            if key == goal_key {
                let mut seq = Vec::new();
                let mut at = idx;
                loop {
                    seq.push(order[at as usize].0.clone());
                    if at == 0 {
                        break;
                    }
                    at = order[at as usize].1;
                }
                seq.reverse();
                return Ok(Some(seq));
            }
            queue.push_back(idx);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cylinder, gen_figure1};
    use crate::linkage::verify_sequence;
    use crate::plane_graph::{classify_instance, PlaneGraph};

    fn four_cycle_instance() -> Instance {
        let g = PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        classify_instance(GraphData::Plane(g), TerminalSpec::Pairs(vec![(0, 2)]), None).unwrap()
    }

    #[test]
    fn four_cycle_has_two_linkages() {
        let inst = four_cycle_instance();
        let ls = enumerate_linkages(&inst, 100).unwrap();
        assert_eq!(ls.len(), 2);
    }

    #[test]
    fn infeasible_instance_enumerates_empty() {
        // path a-b-c with two pairs wanting disjoint routes through b
        let g = PlaneGraph::new(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let inst = classify_instance(
            GraphData::Plane(g),
            TerminalSpec::St { s: 0, t: 2, k: 2 },
            None,
        )
        .unwrap();
        let ls = enumerate_linkages(&inst, 100).unwrap();
        assert!(ls.is_empty());
    }

    #[test]
    fn enumeration_agrees_with_independent_counter() {
        let g = gen_cylinder(2, 4, 2, 0, 0).unwrap();
        let inst = &g.instance;
        let pairs = inst.pairs().unwrap().to_vec();
        let fast = match enumerate_linkages(inst, 1_000_000).unwrap() {
            LinkageSet::Pairs(v) => v,
            _ => unreachable!(),
        };
        // independent count: cartesian product of per-pair path lists,
        // filtered for pairwise disjointness
        let empty = BTreeSet::new();
        let lists: Vec<Vec<Path>> = pairs
            .iter()
            .map(|&(s, t)| {
                enumerate_paths(&inst.graph, s, t, &empty)
                    .into_iter()
                    .filter(|p| {
                        pairs
                            .iter()
                            .flat_map(|&(a, b)| [a, b])
                            .all(|v| v == s || v == t || !p.contains(v))
                    })
                    .collect()
            })
            .collect();
        let mut slow = 0usize;
        for p0 in &lists[0] {
            for p1 in &lists[1] {
                let disjoint = p0.vertices().iter().all(|v| !p1.contains(*v));
                if disjoint {
                    slow += 1;
                }
            }
        }
        assert_eq!(fast.len(), slow);
        assert!(!fast.is_empty());
    }

    #[test]
    fn identical_linkages_reconfigurable() {
        let g = gen_cylinder(2, 4, 2, 0, 0).unwrap();
        assert!(oracle_decide(&g.instance, &g.p, &g.p, 10_000).unwrap());
    }

    #[test]
    fn interlocked_instance_is_frozen() {
        let g = gen_figure1().unwrap();
        assert_ne!(g.p, g.q);
        assert!(!oracle_decide(&g.instance, &g.p, &g.q, 10_000).unwrap());
        // and the whole component of p is just p itself
        assert!(pair_neighbors(&g.instance, &g.p).is_empty());
        assert!(pair_neighbors(&g.instance, &g.q).is_empty());
    }

    #[test]
    fn wound_cylinder_not_reconfigurable() {
        let g = gen_cylinder(6, 4, 2, 0, 1).unwrap();
        assert!(!oracle_decide(&g.instance, &g.p, &g.q, 200_000).unwrap());
    }

    #[test]
    fn shortest_on_adjacent_pair() {
        let inst = four_cycle_instance();
        let ls = match enumerate_linkages(&inst, 10).unwrap() {
            LinkageSet::Pairs(v) => v,
            _ => unreachable!(),
        };
        let seq = oracle_shortest(&inst, &ls[0], &ls[1], 100).unwrap().unwrap();
        assert_eq!(seq.len(), 2);
        verify_sequence(&inst, &seq).unwrap();
        let trivial = oracle_shortest(&inst, &ls[0], &ls[0], 100).unwrap().unwrap();
        assert_eq!(trivial.len(), 1);
    }
}
