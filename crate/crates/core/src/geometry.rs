//! Points in convex position, non-crossing path partitions on them, and the
//! partition classes used throughout the crate.
//!
//! Points are labeled `1..=n` clockwise. For convex position only the cyclic
//! order matters, so no coordinates are stored: two chords cross exactly when
//! their endpoints interleave.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Label = usize;

/// `n` points in convex position, labeled `1..=n` clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConvexConfig {
    n: usize,
}

impl ConvexConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("n", "a configuration needs at least one point"));
        }
        Ok(ConvexConfig { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> std::ops::RangeInclusive<Label> {
        1..=self.n
    }
}

/// Whether chords `{a, b}` and `{c, d}` of a convex `n`-gon cross.
///
/// Chords sharing an endpoint never cross.
pub fn chords_cross(a: Label, b: Label, c: Label, d: Label, n: usize) -> Result<bool> {
    for (name, x) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if x == 0 || x > n {
            return Err(Error::input(name, format!("label {x} outside 1..={n}")));
        }
    }
    if a == b || c == d {
        return Err(Error::input("chord", "a chord needs two distinct endpoints"));
    }
    if (a.min(b), a.max(b)) == (c.min(d), c.max(d)) {
        return Err(Error::input("chord", "the two chords are the same"));
    }
    Ok(interleaved(a, b, c, d))
}

/// Interleaving test without validation. Shared endpoints give `false`.
#[inline]
pub(crate) fn interleaved(a: Label, b: Label, c: Label, d: Label) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let inside = |x: Label| lo < x && x < hi;
    inside(c) != inside(d)
}

/// Interpretations of the 2-ordered condition.
///
/// A non-singleton path with endpoints `i < j` passes when:
/// * `A`: exactly one other path (singletons included) has both endpoints in
///   `(i, j)`, or `(i, j)` lies strictly inside another path's endpoint interval;
/// * `B`: as `A`, but only non-singleton paths are counted as nested;
/// * `Relaxed`: as `A`, and additionally when `(i, j)` holds no vertex of any
///   other path.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ordered2Variant {
    #[default]
    A,
    B,
    Relaxed,
}

impl Ordered2Variant {
    pub const ALL: [Ordered2Variant; 3] = [Ordered2Variant::A, Ordered2Variant::B, Ordered2Variant::Relaxed];
}

impl fmt::Display for Ordered2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ordered2Variant::A => "A",
            Ordered2Variant::B => "B",
            Ordered2Variant::Relaxed => "relaxed",
        })
    }
}

impl FromStr for Ordered2Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Ordered2Variant::A),
            "b" => Ok(Ordered2Variant::B),
            "relaxed" | "r" => Ok(Ordered2Variant::Relaxed),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartitionClass {
    /// Every non-crossing path partition.
    Ncp,
    /// No singletons.
    Ncpws,
    /// No path endpoint (singletons included) strictly between the endpoints
    /// of another path.
    Ordered,
    Ordered2(Ordered2Variant),
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::Ncp => f.write_str("ncp"),
            PartitionClass::Ncpws => f.write_str("ncpws"),
            PartitionClass::Ordered => f.write_str("ordered"),
            PartitionClass::Ordered2(v) => write!(f, "ordered2-{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexRole {
    Singleton,
    Endpoint,
    Middle,
}

/// A non-crossing path partition of `1..=n` in canonical form.
///
/// Canonical form: each path starts at its smaller endpoint and paths are
/// sorted by their smallest vertex, so derived equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct PathPartition {
    n: usize,
    paths: Vec<Vec<Label>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    paths: Vec<Vec<Label>>,
}

impl TryFrom<RawPartition> for PathPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        PathPartition::new(raw.n, raw.paths)
    }
}

impl PathPartition {
    /// Validates and canonicalizes.
    pub fn new(n: usize, paths: Vec<Vec<Label>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("n", "must be at least 1"));
        }
        let mut seen = vec![false; n + 1];
        for (i, path) in paths.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::input(format!("paths[{i}]"), "empty path"));
            }
            for (j, &v) in path.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::input(
                        format!("paths[{i}][{j}]"),
                        format!("label {v} outside 1..={n}"),
                    ));
                }
                if seen[v] {
                    return Err(Error::input(
                        format!("paths[{i}][{j}]"),
                        format!("label {v} appears more than once"),
                    ));
                }
                seen[v] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::input("paths", format!("label {missing} is not covered")));
        }

        let edges: Vec<(usize, usize, Label, Label)> = paths
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.windows(2).enumerate().map(move |(j, w)| (i, j, w[0], w[1])))
            .collect();
        for (x, &(pi, pj, a, b)) in edges.iter().enumerate() {
            for &(qi, qj, c, d) in &edges[x + 1..] {
                if interleaved(a, b, c, d) {
                    return Err(Error::input(
                        format!("paths[{qi}][{qj}..{}]", qj + 1),
                        format!("edge {c}-{d} crosses edge {a}-{b} of paths[{pi}][{pj}..{}]", pj + 1),
                    ));
                }
            }
        }

        Ok(Self::canonical(n, paths))
    }

    fn canonical(n: usize, mut paths: Vec<Vec<Label>>) -> Self {
        for p in &mut paths {
            if p.first() > p.last() {
                p.reverse();
            }
        }
        paths.sort_by_key(|p| *p.iter().min().expect("non-empty path"));
        PathPartition { n, paths }
    }

    /// Builds from an edge list already known to form non-crossing paths
    /// covering `1..=n`.
    pub(crate) fn from_valid_edges(n: usize, edges: &[(Label, Label)]) -> Self {
        let mut adj = vec![[0usize; 2]; n + 1];
        let mut deg = vec![0usize; n + 1];
        for &(a, b) in edges {
            adj[a][deg[a]] = b;
            deg[a] += 1;
            adj[b][deg[b]] = a;
            deg[b] += 1;
        }
        let mut visited = vec![false; n + 1];
        let mut paths = Vec::new();
        for start in 1..=n {
            if visited[start] || deg[start] == 2 {
                continue;
            }
            let mut path = vec![start];
            visited[start] = true;
            let (mut prev, mut cur) = (0, start);
            loop {
                let next = adj[cur][..deg[cur]].iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) => {
                        path.push(w);
                        visited[w] = true;
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            paths.push(path);
        }
        debug_assert!(visited[1..].iter().all(|&v| v), "edges contain a cycle");
        Self::canonical(n, paths)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn config(&self) -> ConvexConfig {
        ConvexConfig { n: self.n }
    }

    pub fn paths(&self) -> &[Vec<Label>] {
        &self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn singleton_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() == 1).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
    }

    /// `(smaller endpoint, larger endpoint)` of each path, in path order.
    pub fn endpoint_intervals(&self) -> Vec<(Label, Label)> {
        self.paths
            .iter()
            .map(|p| {
                let (a, b) = (p[0], p[p.len() - 1]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn vertex_roles(&self) -> BTreeMap<Label, VertexRole> {
        let mut roles = BTreeMap::new();
        for p in &self.paths {
            if p.len() == 1 {
                roles.insert(p[0], VertexRole::Singleton);
                continue;
            }
            for (k, &v) in p.iter().enumerate() {
                let role = if k == 0 || k + 1 == p.len() {
                    VertexRole::Endpoint
                } else {
                    VertexRole::Middle
                };
                roles.insert(v, role);
            }
        }
        roles
    }

    pub fn role_of(&self, v: Label) -> Option<VertexRole> {
        for p in &self.paths {
            if let Some(k) = p.iter().position(|&x| x == v) {
                return Some(if p.len() == 1 {
                    VertexRole::Singleton
                } else if k == 0 || k + 1 == p.len() {
                    VertexRole::Endpoint
                } else {
                    VertexRole::Middle
                });
            }
        }
        None
    }

    pub fn is_in(&self, class: PartitionClass) -> bool {
        match class {
            PartitionClass::Ncp => true,
            PartitionClass::Ncpws => self.paths.iter().all(|p| p.len() > 1),
            PartitionClass::Ordered => self.is_ordered(),
            PartitionClass::Ordered2(v) => self.is_ordered2(v),
        }
    }

    /// Membership among the base classes NCP, NCPWS and ORDERED. 2-ordered
    /// membership depends on a variant and is queried through [`Self::is_in`].
    pub fn classify(&self) -> BTreeSet<PartitionClass> {
        [PartitionClass::Ncp, PartitionClass::Ncpws, PartitionClass::Ordered]
            .into_iter()
            .filter(|&c| self.is_in(c))
            .collect()
    }

    fn is_ordered(&self) -> bool {
        let iv = self.endpoint_intervals();
        iv.iter().enumerate().all(|(k, &(i, j))| {
            i == j
                || iv
                    .iter()
                    .enumerate()
                    .all(|(l, &(x, y))| l == k || !(i < x && x < j) && !(i < y && y < j))
        })
    }

    fn is_ordered2(&self, variant: Ordered2Variant) -> bool {
        let iv = self.endpoint_intervals();
        let mut owner = vec![0usize; self.n + 1];
        for (k, p) in self.paths.iter().enumerate() {
            for &v in p {
                owner[v] = k;
            }
        }
        iv.iter().enumerate().all(|(k, &(i, j))| {
            if i == j {
                return true;
            }
            let others = || iv.iter().enumerate().filter(move |&(l, _)| l != k);
            let contained = others().any(|(_, &(x, y))| x < i && j < y);
            if contained {
                return true;
            }
            let nested = others()
                .filter(|&(_, &(x, y))| i < x && y < j)
                .filter(|&(_, &(x, y))| variant != Ordered2Variant::B || x != y)
                .count();
            if nested == 1 {
                return true;
            }
            variant == Ordered2Variant::Relaxed && (i + 1..j).all(|v| owner[v] == k)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }

    /// Parses `{"n": .., "paths": [[..], ..]}`; syntax errors report
    /// line/column, invariant violations the offending field.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawPartition = serde_json::from_str(s).map_err(|e| {
            Error::input(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })?;
        PathPartition::try_from(raw)
    }
}

impl fmt::Display for PathPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, p) in self.paths.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (x, v) in p.iter().enumerate() {
                if x > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, paths: &[&[Label]]) -> PathPartition {
        PathPartition::new(n, paths.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(chords_cross(1, 3, 2, 4, 4).unwrap());
        assert!(!chords_cross(1, 2, 3, 4, 4).unwrap());
        assert!(!chords_cross(1, 3, 3, 5, 6).unwrap());
    }

    #[test]
    fn crossing_rejects_bad_labels() {
        assert!(matches!(chords_cross(0, 3, 2, 4, 4), Err(Error::InvalidInput { .. })));
        assert!(matches!(chords_cross(1, 5, 2, 4, 4), Err(Error::InvalidInput { .. })));
        assert!(chords_cross(1, 1, 2, 4, 4).is_err());
        assert!(chords_cross(1, 3, 3, 1, 4).is_err());
    }

    #[test]
    fn classify_examples() {
        let p = part(3, &[&[1, 3], &[2]]);
        assert_eq!(p.classify(), BTreeSet::from([PartitionClass::Ncp]));

        let p = part(2, &[&[1], &[2]]);
        assert_eq!(p.classify(), BTreeSet::from([PartitionClass::Ncp, PartitionClass::Ordered]));

        let p = part(2, &[&[1, 2]]);
        assert_eq!(
            p.classify(),
            BTreeSet::from([PartitionClass::Ncp, PartitionClass::Ncpws, PartitionClass::Ordered])
        );
    }

    #[test]
    fn ordered2_variants_on_small_cases() {
        // one singleton nested inside the only path
        let p = part(3, &[&[1, 3], &[2]]);
        assert!(p.is_in(PartitionClass::Ordered2(Ordered2Variant::A)));
        assert!(!p.is_in(PartitionClass::Ordered2(Ordered2Variant::B)));
        assert!(p.is_in(PartitionClass::Ordered2(Ordered2Variant::Relaxed)));

        // no room inside: only the relaxed reading accepts it
        let p = part(2, &[&[1, 2]]);
        assert!(!p.is_in(PartitionClass::Ordered2(Ordered2Variant::A)));
        assert!(p.is_in(PartitionClass::Ordered2(Ordered2Variant::Relaxed)));

        // nested pair: outer has exactly one inside, inner is contained
        let p = part(4, &[&[1, 4], &[2, 3]]);
        for v in Ordered2Variant::ALL {
            assert!(p.is_in(PartitionClass::Ordered2(v)), "{v}");
        }
    }

    #[test]
    fn roles_examples() {
        let r = part(3, &[&[1, 2, 3]]).vertex_roles();
        assert_eq!(r[&1], VertexRole::Endpoint);
        assert_eq!(r[&2], VertexRole::Middle);
        assert_eq!(r[&3], VertexRole::Endpoint);

        let r = part(1, &[&[1]]).vertex_roles();
        assert_eq!(r[&1], VertexRole::Singleton);

        let r = part(4, &[&[1, 2], &[3], &[4]]).vertex_roles();
        assert_eq!(r[&1], VertexRole::Endpoint);
        assert_eq!(r[&2], VertexRole::Endpoint);
        assert_eq!(r[&3], VertexRole::Singleton);
        assert_eq!(r[&4], VertexRole::Singleton);
    }

    #[test]
    fn canonical_form() {
        let p = part(5, &[&[4, 3], &[5, 1, 2]]);
        assert_eq!(p.paths(), &[vec![2, 1, 5], vec![3, 4]]);
        let q = PathPartition::new(5, p.paths().to_vec()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_invariant_violations() {
        let err = PathPartition::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap_err();
        assert!(matches!(&err, Error::InvalidInput { field, .. } if field == "paths[1][0]"));
        assert!(PathPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(PathPartition::new(3, vec![vec![1, 4], vec![2], vec![3]]).is_err());
        assert!(PathPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
        assert!(PathPartition::new(2, vec![vec![], vec![1, 2]]).is_err());
        assert!(PathPartition::new(0, vec![]).is_err());
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let p = part(4, &[&[1, 2], &[3], &[4]]);
        let s = p.to_json();
        assert_eq!(s, r#"{"n":4,"paths":[[1,2],[3],[4]]}"#);
        assert_eq!(PathPartition::from_json(&s).unwrap(), p);

        let err = PathPartition::from_json("{\"n\": 4,\n \"paths\": [[1,3],[2,4]]}").unwrap_err();
        assert!(err.to_string().contains("crosses"), "{err}");
        let err = PathPartition::from_json("{\"n\": 4,\n \"paths\": [[1,3],").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        // serde path through try_from also validates
        assert!(serde_json::from_str::<PathPartition>(r#"{"n":2,"paths":[[1]]}"#).is_err());
    }
}
