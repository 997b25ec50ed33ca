use num_bigint::BigUint;
use rayon::prelude::*;

use super::compose::{compose_pair, CompositionStatus};
use super::graph::{ChainGraph, Edge};
use super::realization::{grid_segments_intersect, realize};
use super::DoubleChainConfig;
use crate::error::Result;
use crate::geometry::{PartitionClass, PathPartition};
use crate::guard;
use crate::oracle::collect_partitions;

fn by_path_count(n: usize) -> Result<Vec<Vec<PathPartition>>> {
    let mut groups = vec![Vec::new(); n + 1];
    for p in collect_partitions(n, PartitionClass::Ncp)? {
        groups[p.path_count()].push(p);
    }
    Ok(groups)
}

/// Counts pairs of partitions (one per chain, equal path counts) whose
/// composition is a polygonization.
pub fn count_polygonizations_exact(config: DoubleChainConfig) -> Result<BigUint> {
    guard::check("n + m", config.total(), guard::PAIR_COUNT_MAX_POINTS)?;
    let upper = by_path_count(config.n_upper())?;
    let lower = by_path_count(config.n_lower())?;
    let pairs: Vec<(&PathPartition, &[PathPartition])> = upper
        .iter()
        .zip(&lower)
        .flat_map(|(us, ls)| us.iter().map(move |u| (u, ls.as_slice())))
        .collect();
    let total: u64 = pairs
        .par_iter()
        .map(|(pu, ls)| {
            ls.iter()
                .filter(|pl| {
                    compose_pair(pu, pl).expect("equal path counts").status == CompositionStatus::Polygonization
                })
                .count() as u64
        })
        .sum();
    Ok(BigUint::from(total))
}

/// Visits every polygonization of the standard realization once, found as
/// a cyclic sequence from point 1 (reflections removed by requiring the
/// second point to be smaller than the last) with exact segment tests.
/// Returns the number visited.
pub fn for_each_polygonization_geometric<F>(config: DoubleChainConfig, mut visit: F) -> Result<u64>
where
    F: FnMut(&ChainGraph),
{
    guard::check("n + m", config.total(), guard::GEOMETRIC_COUNT_MAX_POINTS)?;
    let n = config.total();
    if n < 3 {
        return Ok(0);
    }
    let grid = realize(config).to_grid()?;
    let side = n + 1;
    let mut crosses = vec![false; side.pow(4)];
    let id = |a: usize, b: usize| a * side + b;
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    if a != b && c != d && a != c && a != d && b != c && b != d {
                        crosses[id(a, b) * side * side + id(c, d)] =
                            grid_segments_intersect(grid[a], grid[b], grid[c], grid[d]);
                    }
                }
            }
        }
    }

    struct Dfs<'a, F> {
        n: usize,
        side: usize,
        crosses: &'a [bool],
        seq: Vec<usize>,
        used: Vec<bool>,
        config: DoubleChainConfig,
        visit: &'a mut F,
        count: u64,
    }

    impl<F: FnMut(&ChainGraph)> Dfs<'_, F> {
        fn clashes(&self, a: usize, b: usize, upto: usize) -> bool {
            let e = a * self.side + b;
            self.seq[..upto]
                .windows(2)
                .any(|w| self.crosses[e * self.side * self.side + w[0] * self.side + w[1]])
        }

        fn go(&mut self) {
            let last = *self.seq.last().expect("non-empty");
            if self.seq.len() == self.n {
                if self.seq[1] > last || self.clashes(last, self.seq[0], self.n) {
                    return;
                }
                self.count += 1;
                let edges = (0..self.n)
                    .map(|i| Edge::new(self.seq[i], self.seq[(i + 1) % self.n]))
                    .collect();
                (self.visit)(&ChainGraph::from_edges_unchecked(self.config, edges));
                return;
            }
            for v in 2..=self.n {
                if self.used[v] || self.clashes(last, v, self.seq.len()) {
                    continue;
                }
                self.used[v] = true;
                self.seq.push(v);
                self.go();
                self.seq.pop();
                self.used[v] = false;
            }
        }
    }

    let mut dfs = Dfs {
        n,
        side,
        crosses: &crosses,
        seq: vec![1],
        used: vec![false; n + 1],
        config,
        visit: &mut visit,
        count: 0,
    };
    dfs.used[1] = true;
    dfs.go();
    Ok(dfs.count)
}

pub fn count_polygonizations_geometric(config: DoubleChainConfig) -> Result<BigUint> {
    for_each_polygonization_geometric(config, |_| {}).map(BigUint::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, m: usize) -> DoubleChainConfig {
        DoubleChainConfig::new(n, m).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_polygonizations_geometric(cfg(1, 1)).unwrap(), BigUint::from(0u32));
        assert_eq!(count_polygonizations_geometric(cfg(2, 2)).unwrap(), BigUint::from(1u32));
        assert_eq!(count_polygonizations_exact(cfg(1, 1)).unwrap(), BigUint::from(0u32));
        assert_eq!(count_polygonizations_exact(cfg(2, 2)).unwrap(), BigUint::from(1u32));
        assert_eq!(count_polygonizations_exact(cfg(1, 2)).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn guards() {
        assert!(count_polygonizations_geometric(cfg(6, 5)).is_err());
        assert!(count_polygonizations_exact(cfg(7, 6)).is_err());
    }
}
