use serde::Serialize;

use super::graph::{ChainGraph, Edge};
use super::DoubleChainConfig;
use crate::error::{Error, Result};
use crate::guard;

/// Non-crossing partitions without singletons of `u_1..u_i`, `l_1..l_i`
/// that use alternating edges only and contain `u_i l_i`. In `a` both
/// `u_i` and `l_i` are path ends; in `b` exactly one of them is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbFamily {
    pub i: usize,
    pub a: Vec<ChainGraph>,
    pub b: Vec<ChainGraph>,
}

#[derive(Clone, Copy)]
enum FreeEnd {
    Upper,
    Lower,
}

pub fn ab_family(i: usize, config: DoubleChainConfig) -> Result<AbFamily> {
    if i == 0 {
        return Err(Error::input("i", "must be at least 1"));
    }
    guard::check("i", i, guard::FAMILY_MAX_STEP)?;
    if i > config.n_upper().min(config.n_lower()) {
        return Err(Error::input(
            "i",
            format!(
                "{i} exceeds min(n, m) = {}",
                config.n_upper().min(config.n_lower())
            ),
        ));
    }
    let u = |j| config.upper(j);
    let l = |j| config.lower(j);

    let mut a: Vec<Vec<Edge>> = vec![vec![Edge::new(u(1), l(1))]];
    let mut b: Vec<(Vec<Edge>, FreeEnd)> = Vec::new();
    for step in 2..=i {
        let rung = Edge::new(u(step), l(step));
        let mut next_a = Vec::with_capacity(a.len() + b.len());
        let mut next_b = Vec::with_capacity(2 * a.len() + b.len());
        let extend = |base: &[Edge], extra: &[Edge]| {
            let mut e = base.to_vec();
            e.extend_from_slice(extra);
            e
        };
        for m in &a {
            next_a.push(extend(m, &[rung]));
            // l_{step-1} u_step l_step: l_step stays free
            next_b.push((extend(m, &[Edge::new(l(step - 1), u(step)), rung]), FreeEnd::Lower));
            next_b.push((extend(m, &[Edge::new(u(step - 1), l(step)), rung]), FreeEnd::Upper));
        }
        for (m, free) in &b {
            next_a.push(extend(m, &[rung]));
            let link = match free {
                FreeEnd::Lower => (Edge::new(l(step - 1), u(step)), FreeEnd::Lower),
                FreeEnd::Upper => (Edge::new(u(step - 1), l(step)), FreeEnd::Upper),
            };
            next_b.push((extend(m, &[link.0, rung]), link.1));
        }
        a = next_a;
        b = next_b;
    }
    let graph = |edges: Vec<Edge>| ChainGraph::from_edges_unchecked(config, edges);
    Ok(AbFamily {
        i,
        a: a.into_iter().map(graph).collect(),
        b: b.into_iter().map(|(e, _)| graph(e)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_steps() {
        let cfg = DoubleChainConfig::new(5, 5).unwrap();
        let f = ab_family(1, cfg).unwrap();
        assert_eq!(f.a.len(), 1);
        assert!(f.b.is_empty());
        assert_eq!(f.a[0].edges(), &[Edge(1, 6)]);
        let f = ab_family(2, cfg).unwrap();
        assert_eq!((f.a.len(), f.b.len()), (1, 2));
        let f = ab_family(5, cfg).unwrap();
        assert_eq!((f.a.len(), f.b.len()), (17, 24));
    }

    #[test]
    fn domain() {
        let cfg = DoubleChainConfig::new(3, 4).unwrap();
        assert!(ab_family(0, cfg).is_err());
        assert!(ab_family(4, cfg).is_err());
        let big = DoubleChainConfig::new(20, 20).unwrap();
        assert!(matches!(ab_family(17, big), Err(Error::GuardExceeded { .. })));
    }
}
