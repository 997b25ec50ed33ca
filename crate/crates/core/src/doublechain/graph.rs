use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Chain, DoubleChainConfig};
use crate::error::{Error, Result};
use crate::geometry::{interleaved, Label};

/// An undirected edge, stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub Label, pub Label);

impl Edge {
    pub fn new(a: Label, b: Label) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1
    }

    pub fn other(&self, v: Label) -> Label {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Upper,
    Lower,
    Alternating,
}

fn kind_of(config: &DoubleChainConfig, e: Edge) -> (EdgeKind, usize, usize) {
    let (ca, ia) = config.locate_unchecked(e.0);
    let (cb, ib) = config.locate_unchecked(e.1);
    match (ca, cb) {
        (Chain::Upper, Chain::Upper) => (EdgeKind::Upper, ia, ib),
        (Chain::Lower, Chain::Lower) => (EdgeKind::Lower, ia, ib),
        // labels of U precede those of L, so `e.0` is the upper end
        _ => (EdgeKind::Alternating, ia, ib),
    }
}

fn check_edge(config: &DoubleChainConfig, a: Label, b: Label) -> Result<Edge> {
    config.locate(a)?;
    config.locate(b)?;
    if a == b {
        return Err(Error::input("edge", format!("loop at {a}")));
    }
    Ok(Edge::new(a, b))
}

/// Combinatorial crossing test on a double chain. Chords of the same chain
/// cross iff their positions interleave. Two alternating edges `(u_a, l_b)`,
/// `(u_c, l_d)` cross iff `(a − c)(b − d) < 0`. Chords of different chains,
/// and a chord against an alternating edge, never cross: the chord's line
/// separates its chain's remaining points from the other chain. Edges with a
/// common endpoint never cross.
pub fn edges_cross_dc(e1: (Label, Label), e2: (Label, Label), config: &DoubleChainConfig) -> Result<bool> {
    let e1 = check_edge(config, e1.0, e1.1)?;
    let e2 = check_edge(config, e2.0, e2.1)?;
    Ok(cross_unchecked(config, e1, e2))
}

pub(crate) fn cross_unchecked(config: &DoubleChainConfig, e1: Edge, e2: Edge) -> bool {
    if e1.shares_endpoint(&e2) {
        return false;
    }
    let (k1, a, b) = kind_of(config, e1);
    let (k2, c, d) = kind_of(config, e2);
    match (k1, k2) {
        (EdgeKind::Upper, EdgeKind::Upper) | (EdgeKind::Lower, EdgeKind::Lower) => interleaved(a, b, c, d),
        (EdgeKind::Alternating, EdgeKind::Alternating) => {
            (a as i64 - c as i64) * (b as i64 - d as i64) < 0
        }
        _ => false,
    }
}

/// Edges over a double chain. Repeated edges are kept so that degenerate
/// compositions can be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawGraph", try_from = "RawGraph")]
pub struct ChainGraph {
    config: DoubleChainConfig,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n_upper: usize,
    n_lower: usize,
    edges: Vec<(Label, Label)>,
}

impl From<ChainGraph> for RawGraph {
    fn from(g: ChainGraph) -> Self {
        RawGraph {
            n_upper: g.config.n_upper(),
            n_lower: g.config.n_lower(),
            edges: g.edges.iter().map(|e| (e.0, e.1)).collect(),
        }
    }
}

impl TryFrom<RawGraph> for ChainGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        let config = DoubleChainConfig::new(raw.n_upper, raw.n_lower)?;
        ChainGraph::new(config, raw.edges)
    }
}

impl ChainGraph {
    pub fn new(config: DoubleChainConfig, edges: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut list = Vec::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            let e = check_edge(&config, a, b).map_err(|e| match e {
                Error::InvalidInput { message, .. } => Error::input(format!("edges[{i}]"), message),
                other => other,
            })?;
            list.push(e);
        }
        list.sort_unstable();
        Ok(ChainGraph { config, edges: list })
    }

    pub(crate) fn from_edges_unchecked(config: DoubleChainConfig, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        ChainGraph { config, edges }
    }

    pub fn config(&self) -> DoubleChainConfig {
        self.config
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self, e: Edge) -> EdgeKind {
        kind_of(&self.config, e).0
    }

    pub fn edges_of_kind(&self, kind: EdgeKind) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(move |&e| self.kind(e) == kind)
    }

    pub fn alternating_count(&self) -> usize {
        self.edges_of_kind(EdgeKind::Alternating).count()
    }

    pub fn duplicated_edges(&self) -> usize {
        self.edges.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn first_crossing(&self) -> Option<(Edge, Edge)> {
        for (i, &e) in self.edges.iter().enumerate() {
            for &f in &self.edges[i + 1..] {
                if cross_unchecked(&self.config, e, f) {
                    return Some((e, f));
                }
            }
        }
        None
    }

    pub fn is_non_crossing(&self) -> bool {
        self.first_crossing().is_none()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.config.total() + 1];
        for e in &self.edges {
            deg[e.0] += 1;
            deg[e.1] += 1;
        }
        deg
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.config.total() + 1];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.0].push(i);
            adj[e.1].push(i);
        }
        adj
    }

    /// Number of cycles when every vertex has degree two (repeated edges
    /// form 2-cycles).
    pub(crate) fn cycle_count(&self) -> Option<usize> {
        if self.degrees()[1..].iter().any(|&d| d != 2) {
            return None;
        }
        let adj = self.adjacency();
        let mut used = vec![false; self.edges.len()];
        let mut cycles = 0;
        for start in 0..self.edges.len() {
            if used[start] {
                continue;
            }
            cycles += 1;
            used[start] = true;
            let first = self.edges[start].0;
            let mut cur = self.edges[start].1;
            while cur != first {
                let next = adj[cur].iter().copied().find(|&i| !used[i]).expect("degree two");
                used[next] = true;
                cur = self.edges[next].other(cur);
            }
        }
        Some(cycles)
    }

    /// Ok iff the graph is a single simple non-crossing cycle through every
    /// point.
    pub fn check_polygonization(&self) -> Result<()> {
        let total = self.config.total();
        if total < 3 {
            return Err(Error::NotPolygonization(format!("{total} points cannot form a simple polygon")));
        }
        if self.duplicated_edges() > 0 {
            return Err(Error::NotPolygonization("repeated edge".into()));
        }
        match self.cycle_count() {
            None => return Err(Error::NotPolygonization("some point does not have degree 2".into())),
            Some(1) => {}
            Some(c) => return Err(Error::NotPolygonization(format!("{c} disjoint cycles"))),
        }
        if let Some((e, f)) = self.first_crossing() {
            return Err(Error::NotPolygonization(format!(
                "edges {}-{} and {}-{} cross",
                e.0, e.1, f.0, f.1
            )));
        }
        Ok(())
    }

    /// Ends of the graph if it is a single simple non-crossing path through
    /// every point.
    pub fn hamiltonian_path_ends(&self) -> Result<(Label, Label)> {
        let bad = |m: String| Error::NotConstructedPath(m);
        let total = self.config.total();
        if self.edges.len() + 1 != total {
            return Err(bad(format!("{} edges for {total} points", self.edges.len())));
        }
        let deg = self.degrees();
        if let Some(v) = (1..=total).find(|&v| deg[v] == 0 || deg[v] > 2) {
            return Err(bad(format!("point {v} has degree {}", deg[v])));
        }
        let ends: Vec<Label> = (1..=total).filter(|&v| deg[v] == 1).collect();
        let [s, t] = ends[..] else {
            return Err(bad(format!("{} points of degree 1", ends.len())));
        };
        // n − 1 edges, degrees ≤ 2, two ends: connected iff the walk from s
        // reaches every point
        let adj = self.adjacency();
        let (mut prev_edge, mut cur, mut seen) = (usize::MAX, s, 1);
        while let Some(&i) = adj[cur].iter().find(|&&i| i != prev_edge) {
            prev_edge = i;
            cur = self.edges[i].other(cur);
            seen += 1;
        }
        if seen != total {
            return Err(bad("not connected".into()));
        }
        if let Some((e, f)) = self.first_crossing() {
            return Err(bad(format!("edges {}-{} and {}-{} cross", e.0, e.1, f.0, f.1)));
        }
        Ok((s, t))
    }

    /// Cyclic label sequence of a polygonization, starting at 1 and turning
    /// toward the smaller neighbour, so that rotations and reflections agree.
    pub fn cycle_sequence(&self) -> Result<Vec<Label>> {
        self.check_polygonization()?;
        let adj = self.adjacency();
        let nb = |v: Label| -> [Label; 2] { [self.edges[adj[v][0]].other(v), self.edges[adj[v][1]].other(v)] };
        let [x, y] = nb(1);
        let mut seq = vec![1, x.min(y)];
        while seq.len() < self.config.total() {
            let (p, c) = (seq[seq.len() - 2], seq[seq.len() - 1]);
            let [x, y] = nb(c);
            seq.push(if x == p { y } else { x });
        }
        Ok(seq)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| {
            Error::input(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }
}

impl fmt::Display for ChainGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {{", self.config.n_upper(), self.config.n_lower())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, m: usize) -> DoubleChainConfig {
        DoubleChainConfig::new(n, m).unwrap()
    }

    #[test]
    fn crossing_examples() {
        let c = cfg(2, 2);
        // u1 = 1, u2 = 2, l1 = 3, l2 = 4
        assert!(edges_cross_dc((1, 4), (2, 3), &c).unwrap());
        assert!(!edges_cross_dc((1, 3), (2, 4), &c).unwrap());
        assert!(!edges_cross_dc((1, 3), (1, 4), &c).unwrap());
        assert!(!edges_cross_dc((1, 2), (3, 4), &c).unwrap());
        assert!(edges_cross_dc((1, 9), (2, 3), &c).is_err());
        assert!(edges_cross_dc((1, 1), (2, 3), &c).is_err());
        let c = cfg(4, 1);
        assert!(edges_cross_dc((1, 3), (2, 4), &c).unwrap());
        assert!(!edges_cross_dc((1, 3), (2, 5), &c).unwrap());
    }

    #[test]
    fn hull_is_a_polygonization() {
        let g = ChainGraph::new(cfg(2, 2), [(1, 2), (3, 4), (1, 3), (2, 4)]).unwrap();
        g.check_polygonization().unwrap();
        assert_eq!(g.cycle_sequence().unwrap(), vec![1, 2, 4, 3]);
        let bow = ChainGraph::new(cfg(2, 2), [(1, 2), (3, 4), (1, 4), (2, 3)]).unwrap();
        assert!(bow.check_polygonization().is_err());
        let two = ChainGraph::new(cfg(1, 1), [(1, 2), (2, 1)]).unwrap();
        assert_eq!(two.duplicated_edges(), 1);
        assert!(two.check_polygonization().is_err());
    }

    #[test]
    fn path_ends() {
        let g = ChainGraph::new(cfg(2, 2), [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.hamiltonian_path_ends().unwrap(), (1, 4));
        let split = ChainGraph::new(cfg(2, 2), [(1, 2), (3, 4)]).unwrap();
        assert!(split.hamiltonian_path_ends().is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = ChainGraph::new(cfg(2, 2), [(2, 1), (3, 4)]).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"n_upper":2,"n_lower":2,"edges":[[1,2],[3,4]]}"#);
        assert_eq!(ChainGraph::from_json(&s).unwrap(), g);
        assert!(ChainGraph::from_json(r#"{"n_upper":2,"n_lower":2,"edges":[[1,7]]}"#).is_err());
        assert!(ChainGraph::from_json(r#"{"n_upper":0,"n_lower":2,"edges":[]}"#).is_err());
    }
}
