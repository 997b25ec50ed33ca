use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::{Chain, DoubleChainConfig};
use crate::error::{Error, Result};
use crate::geometry::Label;

pub type Point = (Ratio<i64>, Ratio<i64>);

/// Exact coordinates for every label of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRealization {
    config: DoubleChainConfig,
    coordinates: BTreeMap<Label, Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainValidation {
    pub valid: bool,
    /// First violated property, in checking order.
    pub violation: Option<String>,
}

impl ChainRealization {
    pub fn new(config: DoubleChainConfig, coordinates: BTreeMap<Label, Point>) -> Self {
        ChainRealization {
            config,
            coordinates,
        }
    }

    /// `U` on the parabola `y = (x − (n+1)/2)² + h`, `L` on
    /// `y = −(x − (m+1)/2)² − h`, both at integer abscissae.
    pub fn with_height(config: DoubleChainConfig, h: Ratio<i64>) -> Self {
        let mut coordinates = BTreeMap::new();
        let (n, m) = (config.n_upper() as i64, config.n_lower() as i64);
        for i in 1..=n {
            let dx = Ratio::new(2 * i - n - 1, 2);
            coordinates.insert(config.upper(i as usize), (Ratio::from(i), dx * dx + h));
        }
        for j in 1..=m {
            let dx = Ratio::new(2 * j - m - 1, 2);
            coordinates.insert(config.lower(j as usize), (Ratio::from(j), -(dx * dx) - h));
        }
        ChainRealization {
            config,
            coordinates,
        }
    }

    pub fn config(&self) -> DoubleChainConfig {
        self.config
    }

    pub fn coordinates(&self) -> &BTreeMap<Label, Point> {
        &self.coordinates
    }

    pub fn point(&self, label: Label) -> Option<&Point> {
        self.coordinates.get(&label)
    }

    fn require_complete(&self) -> Result<()> {
        match self.config.labels().find(|l| !self.coordinates.contains_key(l)) {
            Some(l) => Err(Error::input(format!("coordinates[{l}]"), "missing coordinates")),
            None => Ok(()),
        }
    }

    /// Scales every coordinate by the common denominator, indexed by label
    /// (index 0 unused).
    pub(crate) fn to_grid(&self) -> Result<Vec<(i128, i128)>> {
        self.require_complete()?;
        let scale = self
            .coordinates
            .values()
            .fold(1i64, |acc, (x, y)| acc.lcm(x.denom()).lcm(y.denom())) as i128;
        let mut grid = vec![(0, 0); self.config.total() + 1];
        for l in self.config.labels() {
            let (x, y) = &self.coordinates[&l];
            grid[l] = (
                *x.numer() as i128 * (scale / *x.denom() as i128),
                *y.numer() as i128 * (scale / *y.denom() as i128),
            );
        }
        Ok(grid)
    }
}

/// The standard realization with `H = 2·max(n, m)² + 1`.
pub fn realize(config: DoubleChainConfig) -> ChainRealization {
    let big = config.n_upper().max(config.n_lower()) as i64;
    ChainRealization::with_height(config, Ratio::from(2 * big * big + 1))
}

pub(crate) fn orient(p: (i128, i128), q: (i128, i128), r: (i128, i128)) -> i128 {
    (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
}

fn on_segment(p: (i128, i128), q: (i128, i128), r: (i128, i128)) -> bool {
    r.0 >= p.0.min(q.0) && r.0 <= p.0.max(q.0) && r.1 >= p.1.min(q.1) && r.1 <= p.1.max(q.1)
}

/// Closed segments `pq` and `rs` share at least one point.
pub(crate) fn grid_segments_intersect(p: (i128, i128), q: (i128, i128), r: (i128, i128), s: (i128, i128)) -> bool {
    let d1 = orient(r, s, p).signum();
    let d2 = orient(r, s, q).signum();
    let d3 = orient(p, q, r).signum();
    let d4 = orient(p, q, s).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(r, s, p))
        || (d2 == 0 && on_segment(r, s, q))
        || (d3 == 0 && on_segment(p, q, r))
        || (d4 == 0 && on_segment(p, q, s))
}

/// Exact test whether closed segments `ab` and `cd` share a point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let pts = [a, b, c, d];
    let scale = pts
        .iter()
        .fold(1i64, |acc, (x, y)| acc.lcm(x.denom()).lcm(y.denom())) as i128;
    let g = |p: &Point| {
        (
            *p.0.numer() as i128 * (scale / *p.0.denom() as i128),
            *p.1.numer() as i128 * (scale / *p.1.denom() as i128),
        )
    };
    grid_segments_intersect(g(a), g(b), g(c), g(d))
}

/// Checks, in order: abscissae increase along each chain; each chain is
/// strictly convex and bends toward the other (opposed concavity); every
/// line through two `U` points leaves all of `L` strictly below; every line
/// through two `L` points leaves all of `U` strictly above.
pub fn validate_double_chain(real: &ChainRealization) -> Result<ChainValidation> {
    let grid = real.to_grid()?;
    let config = real.config();
    let upper: Vec<Label> = (1..=config.n_upper()).map(|i| config.upper(i)).collect();
    let lower: Vec<Label> = (1..=config.n_lower()).map(|j| config.lower(j)).collect();
    let fail = |msg: String| {
        Ok(ChainValidation {
            valid: false,
            violation: Some(msg),
        })
    };

    for (chain, labels) in [(Chain::Upper, &upper), (Chain::Lower, &lower)] {
        if let Some(w) = labels.windows(2).find(|w| grid[w[0]].0 >= grid[w[1]].0) {
            return fail(format!(
                "{}: points {} and {} are not strictly left to right",
                chain.name(),
                w[0],
                w[1]
            ));
        }
        // U must turn left (counterclockwise), L right, read left to right
        let wanted = if chain == Chain::Upper { 1 } else { -1 };
        if let Some(w) = labels
            .windows(3)
            .find(|w| orient(grid[w[0]], grid[w[1]], grid[w[2]]).signum() != wanted)
        {
            return fail(format!(
                "{}: points {}, {}, {} break strict convexity with opposed concavity",
                chain.name(),
                w[0],
                w[1],
                w[2]
            ));
        }
    }

    for (chain, own, other, wanted) in [(Chain::Upper, &upper, &lower, -1), (Chain::Lower, &lower, &upper, 1)] {
        for (x, &a) in own.iter().enumerate() {
            for &b in &own[x + 1..] {
                if let Some(&p) = other
                    .iter()
                    .find(|&&p| orient(grid[a], grid[b], grid[p]).signum() != wanted)
                {
                    let side = if wanted < 0 { "below" } else { "above" };
                    return fail(format!(
                        "{}: the line through {a} and {b} does not leave point {p} strictly {side}",
                        chain.name()
                    ));
                }
            }
        }
    }

    Ok(ChainValidation {
        valid: true,
        violation: None,
    })
}
