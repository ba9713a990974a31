//! Linkages, s-t linkages, adjacency and sequence verification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::plane_graph::{GraphData, Instance, TerminalSpec};
use crate::VertexId;

/// Simple path as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<VertexId>);

impl Path {
    pub fn first(&self) -> VertexId {
        *self.0.first().expect("path is nonempty")
    }

    pub fn last(&self) -> VertexId {
        *self.0.last().expect("path is nonempty")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len_edges(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// Simple path in the graph? Reports the first offending position.
    pub fn check_in(&self, g: &GraphData, index: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::NotAPath { index, at: 0 });
        }
        let mut seen = alloc::collections::BTreeSet::new();
        for (pos, &v) in self.0.iter().enumerate() {
            if v as usize >= g.vertex_count() || !seen.insert(v) {
                return Err(Error::NotAPath { index, at: pos });
            }
            if pos + 1 < self.0.len() && !g.has_edge(v, self.0[pos + 1]) {
                return Err(Error::NotAPath { index, at: pos });
            }
        }
        Ok(())
    }
}

/// Ordered tuple of pairwise vertex-disjoint paths; path `i` joins the
/// `i`-th terminal pair, listed source first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Linkage(pub Vec<Path>);

impl Linkage {
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.0
    }

    pub fn with_path(&self, i: usize, p: Path) -> Linkage {
        let mut l = self.clone();
        l.0[i] = p;
        l
    }
}

/// Set of internally vertex-disjoint s-t paths. Stored sorted so that two
/// equal sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StLinkage {
    paths: Vec<Path>,
}

impl StLinkage {
    pub fn new(mut paths: Vec<Path>) -> StLinkage {
        paths.sort();
        StLinkage { paths }
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn replace(&self, old: &Path, new: Path) -> StLinkage {
        let mut paths: Vec<Path> =
            self.paths.iter().filter(|p| *p != old).cloned().collect();
        paths.push(new);
        StLinkage::new(paths)
    }
}

/// Check disjointness and endpoint conditions of a pairs-mode linkage.
pub fn validate_linkage(inst: &Instance, linkage: &Linkage) -> Result<()> {
    let pairs = inst.pairs()?;
    if linkage.k() != pairs.len() {
        return Err(Error::InvalidInput("linkage size differs from terminal pair count"));
    }
    for (i, path) in linkage.paths().iter().enumerate() {
        path.check_in(&inst.graph, i)?;
        let (s, t) = pairs[i];
        if path.first() != s || path.last() != t {
            return Err(Error::WrongEndpoints { index: i });
        }
    }
    let mut owner: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, path) in linkage.paths().iter().enumerate() {
        for &v in path.vertices() {
            if let Some(&j) = owner.get(&v) {
                return Err(Error::SharedVertex { v, i: j, j: i });
            }
            owner.insert(v, i);
        }
    }
    Ok(())
}

/// Check an s-t linkage: every path joins s to t, interiors pairwise
/// disjoint, paths pairwise distinct.
pub fn validate_st_linkage(inst: &Instance, linkage: &StLinkage) -> Result<()> {
    let (s, t, k) = match inst.terminals {
        TerminalSpec::St { s, t, k } => (s, t, k),
        _ => return Err(Error::InvalidInput("instance is not in s-t mode")),
    };
    if linkage.k() != k {
        return Err(Error::InvalidInput("linkage size differs from k"));
    }
    for (i, path) in linkage.paths().iter().enumerate() {
        path.check_in(&inst.graph, i)?;
        if path.first() != s || path.last() != t {
            return Err(Error::WrongEndpoints { index: i });
        }
    }
    let mut owner: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, path) in linkage.paths().iter().enumerate() {
        for &v in path.vertices() {
            if v == s || v == t {
                continue;
            }
            if let Some(&j) = owner.get(&v) {
                return Err(Error::SharedVertex { v, i: j, j: i });
            }
            owner.insert(v, i);
        }
        if i + 1 < linkage.k() && linkage.paths()[i] == linkage.paths()[i + 1] {
            // sorted storage puts duplicates side by side
            return Err(Error::InvalidInput("s-t linkage contains a repeated path"));
        }
    }
    Ok(())
}

/// Adjacent iff exactly one coordinate differs.
pub fn adjacent(a: &Linkage, b: &Linkage) -> bool {
    a.k() == b.k() && a.paths().iter().zip(b.paths()).filter(|(p, q)| p != q).count() == 1
}

/// s-t adjacency: `b` is `a` with one path swapped for a different one.
pub fn adjacent_st(a: &StLinkage, b: &StLinkage) -> bool {
    if a.k() != b.k() {
        return false;
    }
    let a_only = a.paths().iter().filter(|p| !b.paths().contains(p)).count();
    let b_only = b.paths().iter().filter(|p| !a.paths().contains(p)).count();
    a_only == 1 && b_only == 1
}

/// Sequences in either mode, so verification can be dispatched uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sequence {
    Pairs(Vec<Linkage>),
    St(Vec<StLinkage>),
}

impl Sequence {
    pub fn len(&self) -> usize {
        match self {
            Sequence::Pairs(v) => v.len(),
            Sequence::St(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Universal checker used by all acceptance tests: every element valid,
/// every consecutive pair adjacent.
pub fn verify_sequence(inst: &Instance, seq: &Sequence) -> Result<()> {
    match seq {
        Sequence::Pairs(linkages) => {
            if linkages.is_empty() {
                return Err(Error::InvalidInput("empty sequence"));
            }
            for (i, l) in linkages.iter().enumerate() {
                validate_linkage(inst, l).map_err(|_| Error::InvalidLinkage { index: i })?;
            }
            for i in 0..linkages.len() - 1 {
                if !adjacent(&linkages[i], &linkages[i + 1]) {
                    return Err(Error::NotAdjacent { index: i });
                }
            }
            Ok(())
        }
        Sequence::St(linkages) => {
            if linkages.is_empty() {
                return Err(Error::InvalidInput("empty sequence"));
            }
            for (i, l) in linkages.iter().enumerate() {
                validate_st_linkage(inst, l).map_err(|_| Error::InvalidLinkage { index: i })?;
            }
            for i in 0..linkages.len() - 1 {
                if !adjacent_st(&linkages[i], &linkages[i + 1]) {
                    return Err(Error::NotAdjacent { index: i });
                }
            }
            Ok(())
        }
    }
}
