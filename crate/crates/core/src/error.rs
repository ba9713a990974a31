//! Error type shared by all modules.

use alloc::vec::Vec;
use core::fmt;

use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // embedding construction
    UnknownVertex { v: VertexId },
    AsymmetricRotation { u: VertexId, v: VertexId },
    MultiEdgeOrLoop { v: VertexId, u: VertexId },
    NotPlanarEmbedding { component_of: VertexId, euler: i64 },
    // instances
    TerminalNotInGraph { v: VertexId },
    DuplicateTerminal { v: VertexId },
    InvalidInput(&'static str),
    // linkages
    NotAPath { index: usize, at: usize },
    WrongEndpoints { index: usize },
    SharedVertex { v: VertexId, i: usize, j: usize },
    InvalidLinkage { index: usize },
    NotAdjacent { index: usize },
    // crossings
    DegenerateAtTerminal { v: VertexId },
    SharedEndpoint { v: VertexId },
    InconsistentMu { i: usize, j: usize, expected: i64, found: i64 },
    NoDualPath,
    // separators
    NoLinkagePossible { min_cut: usize, k: usize },
    AdjacentTerminals,
    CutNotK { expected: usize, found: usize },
    // sequence engines
    MuNonzero { mu: i64 },
    NoImprovingStep { separator: Vec<VertexId> },
    // generators
    InvalidNcl(&'static str),
    NotPlanarH,
    TooFewColumns { cols: usize, need: usize },
    TooFewRows { rows: usize, need: usize },
    DegreeTooSmall { v: VertexId, degree: usize, need: usize },
    AdjacentST,
    MalformedLinkage(&'static str),
    // oracle
    TooMany { limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex { v } => write!(f, "rotation references undeclared vertex {v}"),
            Error::AsymmetricRotation { u, v } => {
                write!(f, "rotation of {u} lists {v} but not vice versa")
            }
            Error::MultiEdgeOrLoop { v, u } => {
                write!(f, "loop or repeated neighbor {u} in rotation of {v}")
            }
            Error::NotPlanarEmbedding { component_of, euler } => write!(
                f,
                "rotation system is not a plane embedding (component of {component_of} has Euler characteristic {euler}, expected 2)"
            ),
            Error::TerminalNotInGraph { v } => write!(f, "terminal {v} is not in the graph"),
            Error::DuplicateTerminal { v } => write!(f, "terminal {v} appears more than once"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotAPath { index, at } => {
                write!(f, "entry {index} is not a simple path (position {at})")
            }
            Error::WrongEndpoints { index } => {
                write!(f, "path {index} does not join its terminal pair in order")
            }
            Error::SharedVertex { v, i, j } => {
                write!(f, "paths {i} and {j} share vertex {v}")
            }
            Error::InvalidLinkage { index } => write!(f, "sequence element {index} is not a valid linkage"),
            Error::NotAdjacent { index } => {
                write!(f, "sequence elements {index} and {} are not adjacent", index + 1)
            }
            Error::DegenerateAtTerminal { v } => {
                write!(f, "shared subwalk touches path endpoint {v}")
            }
            Error::SharedEndpoint { v } => write!(f, "paths share endpoint {v}"),
            Error::InconsistentMu { i, j, expected, found } => write!(
                f,
                "intersection number of pair ({i},{j}) is {found}, expected common value {expected}"
            ),
            Error::NoDualPath => write!(f, "no dual path between the designated faces"),
            Error::NoLinkagePossible { min_cut, k } => write!(
                f,
                "terminal cut of size {min_cut} < k = {k}: no linkage can exist"
            ),
            Error::AdjacentTerminals => write!(f, "s and t are adjacent: no s-t separator exists"),
            Error::CutNotK { expected, found } => {
                write!(f, "minimum cut is {found}, expected {expected}")
            }
            Error::MuNonzero { mu } => write!(f, "algebraic intersection number is {mu}, expected 0"),
            Error::NoImprovingStep { separator } => write!(
                f,
                "no improving step exists; diagnostic separator {separator:?}"
            ),
            Error::InvalidNcl(msg) => write!(f, "invalid AND/OR graph: {msg}"),
            Error::NotPlanarH => write!(f, "constraint graph has no plane embedding"),
            Error::TooFewColumns { cols, need } => {
                write!(f, "cylinder needs at least {need} columns, got {cols}")
            }
            Error::TooFewRows { rows, need } => {
                write!(f, "cylinder needs at least {need} rows, got {rows}")
            }
            Error::DegreeTooSmall { v, degree, need } => {
                write!(f, "vertex {v} has degree {degree}, need at least {need}")
            }
            Error::AdjacentST => write!(f, "s and t must not be adjacent"),
            Error::MalformedLinkage(msg) => write!(f, "malformed linkage: {msg}"),
            Error::TooMany { limit } => write!(f, "enumeration exceeded limit of {limit}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
