//! Brute-force enumeration of non-crossing path partitions.
//!
//! Chords `(a, b)`, `a < b`, are decided in lexicographic order by depth-first
//! backtracking. An edge is only added if both ends have degree below two, it
//! closes no cycle and it crosses no chosen edge, so every leaf is a valid
//! partition and every partition is reached exactly once.
//!
//! Once all chords starting at `g` are decided, vertex `g` is final. A path
//! is closed as soon as both of its ends are final, either because its last
//! end just became final or because a new edge joined two final ends. Every
//! vertex strictly inside the endpoint interval of a closed path is final
//! too, so the class filters are applied at that moment, which prunes whole
//! subtrees.

use std::collections::BTreeMap;
use std::io::Write;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{interleaved, Label, Ordered2Variant, PartitionClass, PathPartition, VertexRole};
use crate::guard;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub class: PartitionClass,
    pub total: u64,
    /// Number of partitions with `k` paths (singletons included).
    pub by_path_count: BTreeMap<usize, u64>,
    /// Number of partitions by the role of point 1.
    pub by_role_of_1: BTreeMap<VertexRole, u64>,
}

impl EnumerationReport {
    fn new(n: usize, class: PartitionClass) -> Self {
        EnumerationReport {
            n,
            class,
            total: 0,
            by_path_count: BTreeMap::new(),
            by_role_of_1: BTreeMap::new(),
        }
    }
}

fn check_guard(n: usize, class: PartitionClass) -> Result<()> {
    if n == 0 {
        return Err(Error::input("n", "must be at least 1"));
    }
    match class {
        PartitionClass::Ordered2(_) => guard::check("n", n, guard::ORDERED2_MAX_N),
        _ => guard::check("n", n, guard::ENUMERATION_MAX_N),
    }
}

struct Search {
    n: usize,
    class: PartitionClass,
    chords: Vec<(Label, Label)>,
    deg: Vec<u8>,
    /// For a vertex of degree at most one: the other end of its path so far.
    other: Vec<Label>,
    edges: Vec<(Label, Label)>,
}

impl Search {
    fn descend(&mut self, idx: usize, closed_upto: Label, leaf: &mut dyn FnMut(&Search)) {
        let target = match self.chords.get(idx) {
            Some(&(a, _)) => a - 1,
            None => self.n,
        };
        for g in closed_upto + 1..=target {
            if !self.finalize(g) {
                return;
            }
        }
        let closed = closed_upto.max(target);
        let Some(&(a, b)) = self.chords.get(idx) else {
            leaf(self);
            return;
        };

        self.descend(idx + 1, closed, leaf);

        if self.deg[a] < 2
            && self.deg[b] < 2
            && self.other[a] != b
            && !self.edges.iter().any(|&(c, d)| interleaved(a, b, c, d))
        {
            let (oa, ob) = (self.other[a], self.other[b]);
            self.deg[a] += 1;
            self.deg[b] += 1;
            self.other[oa] = ob;
            self.other[ob] = oa;
            self.edges.push((a, b));

            // joining two final ends closes a path
            let (lo, hi) = (oa.min(ob), oa.max(ob));
            if hi > closed || self.closed_path_ok(lo, hi, closed) {
                self.descend(idx + 1, closed, leaf);
            }

            self.edges.pop();
            self.other[oa] = a;
            self.other[ob] = b;
            self.deg[a] -= 1;
            self.deg[b] -= 1;
        }
    }

    /// Vertex `g` just became final. Returns false when no completion of the
    /// current state can belong to the class.
    fn finalize(&self, g: Label) -> bool {
        match self.deg[g] {
            0 => self.class != PartitionClass::Ncpws,
            1 => {
                let start = self.other[g];
                if start > g {
                    return true;
                }
                self.closed_path_ok(start, g, g)
            }
            _ => true,
        }
    }

    /// Path with ends `i < j` just closed while vertices `1..=frontier` are
    /// final.
    fn closed_path_ok(&self, i: Label, j: Label, frontier: Label) -> bool {
        let (mut singles, mut ends) = (0usize, 0usize);
        for v in i + 1..j {
            match self.deg[v] {
                0 => singles += 1,
                1 => ends += 1,
                _ => {}
            }
        }
        let nested = |count_singles: bool| ends / 2 + if count_singles { singles } else { 0 };
        match self.class {
            PartitionClass::Ncp | PartitionClass::Ncpws => true,
            PartitionClass::Ordered => singles + ends == 0,
            PartitionClass::Ordered2(variant) => {
                let now = match variant {
                    Ordered2Variant::A => nested(true) == 1,
                    Ordered2Variant::B => nested(false) == 1,
                    Ordered2Variant::Relaxed => nested(true) == 1 || singles + ends == 0,
                };
                // otherwise an open path starting left of i may still wrap around
                now || (1..i).any(|x| self.deg[x] == 1 && self.other[x] > frontier)
            }
        }
    }

    fn partition(&self) -> PathPartition {
        PathPartition::from_valid_edges(self.n, &self.edges)
    }
}

fn search(n: usize, class: PartitionClass, leaf: &mut dyn FnMut(&Search)) {
    let chords = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut s = Search {
        n,
        class,
        chords,
        deg: vec![0; n + 1],
        other: (0..=n).collect(),
        edges: Vec::with_capacity(n),
    };
    s.descend(0, 0, leaf);
}

/// Streams every partition of the class on `n` convex points to `visit`, in
/// a fixed deterministic order, and returns the summary.
pub fn enumerate_partitions<F>(n: usize, class: PartitionClass, mut visit: F) -> Result<EnumerationReport>
where
    F: FnMut(&PathPartition),
{
    check_guard(n, class)?;
    let mut report = EnumerationReport::new(n, class);
    let needs_check = matches!(class, PartitionClass::Ordered2(_));
    search(n, class, &mut |s: &Search| {
        let p = s.partition();
        if needs_check && !p.is_in(class) {
            return;
        }
        debug_assert!(p.is_in(class));
        tally(&mut report, s);
        visit(&p);
    });
    Ok(report)
}

/// Counts without materializing partitions where the class allows it.
pub fn count_partitions(n: usize, class: PartitionClass) -> Result<EnumerationReport> {
    if matches!(class, PartitionClass::Ordered2(_)) {
        return enumerate_partitions(n, class, |_| {});
    }
    check_guard(n, class)?;
    let mut report = EnumerationReport::new(n, class);
    search(n, class, &mut |s: &Search| tally(&mut report, s));
    Ok(report)
}

fn tally(report: &mut EnumerationReport, s: &Search) {
    report.total += 1;
    *report.by_path_count.entry(s.n - s.edges.len()).or_default() += 1;
    let role = match s.deg[1] {
        0 => VertexRole::Singleton,
        1 => VertexRole::Endpoint,
        _ => VertexRole::Middle,
    };
    *report.by_role_of_1.entry(role).or_default() += 1;
}

pub fn collect_partitions(n: usize, class: PartitionClass) -> Result<Vec<PathPartition>> {
    let mut out = Vec::new();
    enumerate_partitions(n, class, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Writes one canonical partition per line as JSON.
pub fn write_jsonl<W: Write>(n: usize, class: PartitionClass, out: &mut W) -> Result<EnumerationReport> {
    let mut io_error = None;
    let report = enumerate_partitions(n, class, |p| {
        if io_error.is_none() {
            if let Err(e) = writeln!(out, "{}", p.to_json()) {
                io_error = Some(e);
            }
        }
    })?;
    match io_error {
        Some(e) => Err(Error::input("output", e.to_string())),
        None => Ok(report),
    }
}

/// Partitions split by whether point 1 is a singleton, an endpoint or a
/// middle vertex. For NCP these are `g(n-1)`, `f(n)`, `h(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoleCounts {
    pub singleton: u64,
    pub endpoint: u64,
    pub middle: u64,
}

pub fn role_counts(n: usize, class: PartitionClass) -> Result<RoleCounts> {
    let report = count_partitions(n, class)?;
    let get = |r| report.by_role_of_1.get(&r).copied().unwrap_or(0);
    Ok(RoleCounts {
        singleton: get(VertexRole::Singleton),
        endpoint: get(VertexRole::Endpoint),
        middle: get(VertexRole::Middle),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ordered2Growth {
    pub variant: Ordered2Variant,
    /// `(n, count)` for `n = 1..=n_max`.
    pub counts: Vec<(usize, u64)>,
    /// `count(n_max) / count(n_max - 1)`, when both exist and the divisor is
    /// nonzero.
    #[serde(skip)]
    pub last_ratio: Option<Ratio<u64>>,
}

impl Ordered2Growth {
    pub fn ratios(&self) -> Vec<(usize, f64)> {
        self.counts
            .windows(2)
            .filter(|w| w[0].1 > 0)
            .map(|w| (w[1].0, w[1].1 as f64 / w[0].1 as f64))
            .collect()
    }

    pub fn last_ratio_f64(&self) -> Option<f64> {
        self.last_ratio.map(|r| *r.numer() as f64 / *r.denom() as f64)
    }
}

/// Exploratory: 2-ordered counts for `n = 1..=n_max` and the last
/// consecutive ratio. No target value is implied.
pub fn estimate_ordered2_growth(n_max: usize, variant: Ordered2Variant) -> Result<Ordered2Growth> {
    let class = PartitionClass::Ordered2(variant);
    check_guard(n_max, class)?;
    let counts = (1..=n_max)
        .map(|n| count_partitions(n, class).map(|r| (n, r.total)))
        .collect::<Result<Vec<_>>>()?;
    let last_ratio = match counts.as_slice() {
        [.., (_, prev), (_, last)] if *prev > 0 => Some(Ratio::new(*last, *prev)),
        _ => None,
    };
    Ok(Ordered2Growth {
        variant,
        counts,
        last_ratio,
    })
}

/// Parses a 2-ordered variant id; convenience for callers holding strings.
pub fn estimate_ordered2_growth_by_id(n_max: usize, variant: &str) -> Result<Ordered2Growth> {
    estimate_ordered2_growth(n_max, variant.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn totals_from_examples() {
        assert_eq!(count_partitions(3, PartitionClass::Ncp).unwrap().total, 7);
        assert_eq!(count_partitions(6, PartitionClass::Ncpws).unwrap().total, 128);
        assert_eq!(count_partitions(5, PartitionClass::Ordered).unwrap().total, 77);
    }

    #[test]
    fn role_count_examples() {
        let rc = |n| {
            let r = role_counts(n, PartitionClass::Ncp).unwrap();
            (r.singleton, r.endpoint, r.middle)
        };
        assert_eq!(rc(3), (2, 4, 1));
        assert_eq!(rc(2), (1, 1, 0));
        assert_eq!(rc(1), (1, 0, 0));
    }

    #[test]
    fn guard_and_domain() {
        assert!(matches!(
            count_partitions(13, PartitionClass::Ncp),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(count_partitions(0, PartitionClass::Ncp).is_err());
        assert!(estimate_ordered2_growth(15, Ordered2Variant::A).is_err());
        assert!(matches!(
            estimate_ordered2_growth_by_id(4, "Z"),
            Err(Error::UnknownVariant(_))
        ));
    }

    #[test]
    fn stream_matches_report_and_has_no_duplicates() {
        for class in [PartitionClass::Ncp, PartitionClass::Ncpws, PartitionClass::Ordered] {
            for n in 1..=7 {
                let mut seen = HashSet::new();
                let report = enumerate_partitions(n, class, |p| {
                    assert!(p.is_in(class));
                    seen.insert(p.clone());
                })
                .unwrap();
                assert_eq!(seen.len() as u64, report.total, "{class} n={n}");
                assert_eq!(report.by_path_count.values().sum::<u64>(), report.total);
                assert_eq!(report.by_role_of_1.values().sum::<u64>(), report.total);
            }
        }
    }

    #[test]
    fn ordered2_small_counts() {
        // literal reading: only {[1],[2]} at n = 2
        let a = estimate_ordered2_growth(4, Ordered2Variant::A).unwrap();
        assert_eq!(a.counts, vec![(1, 1), (2, 1), (3, 2), (4, 8)]);
        assert_eq!(a.last_ratio, Some(Ratio::new(4, 1)));
        let r = estimate_ordered2_growth(2, Ordered2Variant::Relaxed).unwrap();
        assert_eq!(r.counts, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn jsonl_dump() {
        let mut buf = Vec::new();
        let report = write_jsonl(2, PartitionClass::Ncp, &mut buf).unwrap();
        assert_eq!(report.total, 2);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "{\"n\":2,\"paths\":[[1],[2]]}\n{\"n\":2,\"paths\":[[1,2]]}\n");
    }
}
