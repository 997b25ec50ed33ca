//! Double chains: two opposed convex chains `U` (labels `1..=n`, left to
//! right) and `L` (labels `n+1..=n+m`, left to right) where every chord of
//! one chain separates it from the other.

mod compose;
mod count;
mod family;
mod graph;
mod realization;
pub mod svg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Label;

pub use compose::{
    build_hamiltonian_path, close_to_polygonization, compose_pair, decompose_polygonization, slots,
    CompositionOutcome, CompositionStatus, Decomposition,
};
pub use count::{count_polygonizations_exact, count_polygonizations_geometric, for_each_polygonization_geometric};
pub use family::{ab_family, AbFamily};
pub use graph::{edges_cross_dc, ChainGraph, Edge, EdgeKind};
pub use realization::{
    realize, segments_intersect, validate_double_chain, ChainRealization, ChainValidation, Point,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chain {
    Upper,
    Lower,
}

impl Chain {
    pub fn name(self) -> &'static str {
        match self {
            Chain::Upper => "U",
            Chain::Lower => "L",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleChainConfig {
    n_upper: usize,
    n_lower: usize,
}

impl DoubleChainConfig {
    pub fn new(n_upper: usize, n_lower: usize) -> Result<Self> {
        if n_upper == 0 {
            return Err(Error::input("n_upper", "must be at least 1"));
        }
        if n_lower == 0 {
            return Err(Error::input("n_lower", "must be at least 1"));
        }
        Ok(DoubleChainConfig { n_upper, n_lower })
    }

    pub fn n_upper(&self) -> usize {
        self.n_upper
    }

    pub fn n_lower(&self) -> usize {
        self.n_lower
    }

    pub fn total(&self) -> usize {
        self.n_upper + self.n_lower
    }

    pub fn labels(&self) -> std::ops::RangeInclusive<Label> {
        1..=self.total()
    }

    pub fn upper(&self, i: usize) -> Label {
        debug_assert!((1..=self.n_upper).contains(&i));
        i
    }

    pub fn lower(&self, j: usize) -> Label {
        debug_assert!((1..=self.n_lower).contains(&j));
        self.n_upper + j
    }

    /// Chain of a label and its 1-based position along that chain.
    pub fn locate(&self, label: Label) -> Result<(Chain, usize)> {
        if label == 0 || label > self.total() {
            return Err(Error::input(
                "label",
                format!("{label} outside 1..={}", self.total()),
            ));
        }
        Ok(if label <= self.n_upper {
            (Chain::Upper, label)
        } else {
            (Chain::Lower, label - self.n_upper)
        })
    }

    pub(crate) fn locate_unchecked(&self, label: Label) -> (Chain, usize) {
        if label <= self.n_upper {
            (Chain::Upper, label)
        } else {
            (Chain::Lower, label - self.n_upper)
        }
    }
}
