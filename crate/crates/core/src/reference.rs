//! Published values used as golden data.

/// `g(1..=11)`: all non-crossing path partitions of points in convex position.
pub const TABLE_G: [u64; 11] = [1, 2, 7, 29, 126, 564, 2591, 12171, 58237, 282918, 1391820];

/// `gs(1..=11)`: partitions without singletons.
pub const TABLE_GS: [u64; 11] = [0, 1, 3, 10, 35, 128, 483, 1866, 7344, 29342, 118701];

/// `go(1..=11)`: ordered partitions.
pub const TABLE_GO: [u64; 11] = [1, 2, 6, 21, 77, 289, 1107, 4322, 17162, 69137, 281917];

/// Published branch point `(r, s)` and growth `1/r` of a relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPoint {
    pub relation: &'static str,
    pub r: f64,
    pub s: f64,
    pub growth: f64,
}

pub const BRANCH_POINTS: [BranchPoint; 3] = [
    BranchPoint { relation: "eq8", r: 0.178230289, s: 1.593329627, growth: 5.610718614 },
    BranchPoint { relation: "eq15", r: 0.2168859312, s: 1.309350027, growth: 4.610718614 },
    BranchPoint { relation: "eq22", r: 0.2154185247, s: 1.875110104, growth: 4.642126305 },
];

pub const SILVER_RATIO: f64 = 1.0 + std::f64::consts::SQRT_2;

/// Published entropy-optimizer outcome for the parameters `(beta, gamma, c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaOptimum {
    pub beta: f64,
    pub gamma: f64,
    pub c: f64,
    pub alpha: f64,
    pub growth: f64,
}

pub const ALPHA_OPTIMA: [AlphaOptimum; 3] = [
    AlphaOptimum { beta: 4.610718614, gamma: 1.0, c: 0.0, alpha: 0.1782302, growth: 5.610718614 },
    AlphaOptimum { beta: 4.610718614, gamma: SILVER_RATIO, c: 0.5, alpha: 0.25205209, growth: 6.164492582 },
    AlphaOptimum { beta: 5.610718614, gamma: SILVER_RATIO, c: 0.5, alpha: 0.2211799253, growth: 7.164102920 },
];
