use serde::Serialize;

use super::graph::{ChainGraph, Edge, EdgeKind};
use super::DoubleChainConfig;
use crate::error::{Error, Result};
use crate::geometry::{Label, PartitionClass, PathPartition};

/// Endpoint slots of a partition, left to right. A singleton fills two
/// consecutive slots.
pub fn slots(p: &PathPartition) -> Vec<Label> {
    let mut out = Vec::with_capacity(2 * p.path_count());
    for path in p.paths() {
        out.push(path[0]);
        out.push(path[path.len() - 1]);
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CompositionStatus {
    Polygonization,
    /// Several disjoint cycles (a repeated edge counts as a 2-cycle).
    MultiCycle(usize),
    Crossing,
    /// A single cycle that uses an edge twice, only possible on two points.
    DuplicatedEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionOutcome {
    pub status: CompositionStatus,
    pub duplicated_edges: usize,
    pub graph: ChainGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    /// Partition of `U`, positions `1..=n`.
    pub upper: PathPartition,
    /// Partition of `L`, positions `1..=m`.
    pub lower: PathPartition,
    /// Number of paths on each side; the cycle has `2k` alternating edges.
    pub k: usize,
}

fn chain_edges(config: &DoubleChainConfig, pu: &PathPartition, pl: &PathPartition) -> Vec<Edge> {
    let n = config.n_upper();
    pu.edges()
        .map(|(a, b)| Edge::new(a, b))
        .chain(pl.edges().map(|(a, b)| Edge::new(a + n, b + n)))
        .collect()
}

fn equal_k(pu: &PathPartition, pl: &PathPartition) -> Result<usize> {
    if pu.path_count() != pl.path_count() {
        return Err(Error::PathCountMismatch {
            upper: pu.path_count(),
            lower: pl.path_count(),
        });
    }
    Ok(pu.path_count())
}

/// Removes the alternating edges of a polygonization.
pub fn decompose_polygonization(g: &ChainGraph) -> Result<Decomposition> {
    g.check_polygonization()?;
    let config = g.config();
    let n = config.n_upper();
    let upper: Vec<_> = g.edges_of_kind(EdgeKind::Upper).map(|e| (e.0, e.1)).collect();
    let lower: Vec<_> = g.edges_of_kind(EdgeKind::Lower).map(|e| (e.0 - n, e.1 - n)).collect();
    let upper = PathPartition::from_valid_edges(n, &upper);
    let lower = PathPartition::from_valid_edges(config.n_lower(), &lower);
    let k = equal_k(&upper, &lower)?;
    debug_assert_eq!(2 * k, g.alternating_count());
    Ok(Decomposition { upper, lower, k })
}

/// Joins the `s`-th endpoint slot of `U` to the `s`-th of `L` for every `s`.
pub fn compose_pair(pu: &PathPartition, pl: &PathPartition) -> Result<CompositionOutcome> {
    equal_k(pu, pl)?;
    let config = DoubleChainConfig::new(pu.n(), pl.n())?;
    let n = config.n_upper();
    let mut edges = chain_edges(&config, pu, pl);
    edges.extend(slots(pu).into_iter().zip(slots(pl)).map(|(u, l)| Edge::new(u, l + n)));
    let graph = ChainGraph::from_edges_unchecked(config, edges);
    let duplicated_edges = graph.duplicated_edges();
    let status = if !graph.is_non_crossing() {
        CompositionStatus::Crossing
    } else {
        match graph.cycle_count().expect("every point has degree two") {
            1 if duplicated_edges > 0 => CompositionStatus::DuplicatedEdge,
            1 => CompositionStatus::Polygonization,
            c => CompositionStatus::MultiCycle(c),
        }
    };
    Ok(CompositionOutcome {
        status,
        duplicated_edges,
        graph,
    })
}

/// For ordered partitions with `k` paths each: joins `U` slot `s + 1` to `L`
/// slot `s` for `s = 1..2k−1`, leaving the first `U` slot and the last `L`
/// slot free.
pub fn build_hamiltonian_path(pu: &PathPartition, pl: &PathPartition) -> Result<ChainGraph> {
    if !pu.is_in(PartitionClass::Ordered) {
        return Err(Error::NotOrdered { chain: "U" });
    }
    if !pl.is_in(PartitionClass::Ordered) {
        return Err(Error::NotOrdered { chain: "L" });
    }
    equal_k(pu, pl)?;
    let config = DoubleChainConfig::new(pu.n(), pl.n())?;
    let n = config.n_upper();
    let (su, sl) = (slots(pu), slots(pl));
    let mut edges = chain_edges(&config, pu, pl);
    edges.extend((0..su.len() - 1).map(|s| Edge::new(su[s + 1], sl[s] + n)));
    let graph = ChainGraph::from_edges_unchecked(config, edges);
    let (a, b) = graph.hamiltonian_path_ends()?;
    debug_assert_eq!((a, b), (su[0], sl[sl.len() - 1] + n));
    Ok(graph)
}

/// Closes a path from [`build_hamiltonian_path`] into a polygonization on
/// `(n + 2, m + 2)` points: one new point at each end of `U` and two new
/// points at the left end of `L`. Old `U` positions shift by one, old `L`
/// positions by two. The cycle runs from the free `U` end to the inner new
/// `L` point, the outer new `L` point, the left new `U` point, the right new
/// `U` point and back to the free `L` end.
pub fn close_to_polygonization(path: &ChainGraph) -> Result<ChainGraph> {
    let config = path.config();
    let (n, m) = (config.n_upper(), config.n_lower());
    let (s, t) = path.hamiltonian_path_ends()?;
    let (e_u, e_l) = match (s <= n, t <= n) {
        (true, false) => (s, t),
        (false, true) => (t, s),
        _ => {
            return Err(Error::NotConstructedPath(
                "free ends must be one point of U and one point of L".into(),
            ))
        }
    };
    let closed = DoubleChainConfig::new(n + 2, m + 2)?;
    let shift = |v: Label| if v <= n { v + 1 } else { v + 4 };
    let (u_left, u_right) = (closed.upper(1), closed.upper(n + 2));
    let (l_outer, l_inner) = (closed.lower(1), closed.lower(2));
    let mut edges: Vec<Edge> = path.edges().iter().map(|e| Edge::new(shift(e.0), shift(e.1))).collect();
    edges.extend([
        Edge::new(shift(e_u), l_inner),
        Edge::new(l_inner, l_outer),
        Edge::new(l_outer, u_left),
        Edge::new(u_left, u_right),
        Edge::new(u_right, shift(e_l)),
    ]);
    let graph = ChainGraph::from_edges_unchecked(closed, edges);
    graph.check_polygonization().map_err(|e| {
        Error::NotConstructedPath(format!("closing does not give a polygonization ({e})"))
    })?;
    Ok(graph)
}
