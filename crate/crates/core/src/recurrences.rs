//! Exact counting recurrences.
//!
//! Three families are computed jointly with their endpoint (`f`) and middle
//! (`h`) companions, split on the role of point 1:
//!
//! * ncp:     `g(n) = g(n-1) + f(n) + h(n)`
//! * ncpws:   `gs(n) = fs(n) + hs(n)`
//! * ordered: `go(n) = go(n-1) + fo(n) + ho(n)`, with a restricted `fo`
//!
//! plus the Pell-type pair `a_i, b_i` counting alternating-edge families on a
//! double chain. Everything is arbitrary precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G,
    F,
    H,
    Gs,
    Fs,
    Hs,
    Go,
    Fo,
    Ho,
    A,
    B,
}

impl Family {
    /// First index stored in a table of this family.
    pub fn first_index(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::G => "g",
            Family::F => "f",
            Family::H => "h",
            Family::Gs => "gs",
            Family::Fs => "fs",
            Family::Hs => "hs",
            Family::Go => "go",
            Family::Fo => "fo",
            Family::Ho => "ho",
            Family::A => "a",
            Family::B => "b",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "g" => Family::G,
            "f" => Family::F,
            "h" => Family::H,
            "gs" => Family::Gs,
            "fs" => Family::Fs,
            "hs" => Family::Hs,
            "go" => Family::Go,
            "fo" => Family::Fo,
            "ho" => Family::Ho,
            "a" => Family::A,
            "b" => Family::B,
            other => return Err(Error::input("family", format!("unknown family `{other}`"))),
        })
    }
}

/// An exact integer sequence. `values[k]` is the entry at index
/// `family.first_index() + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    family: Family,
    values: Vec<BigUint>,
}

impl CountTable {
    pub fn new(family: Family, values: Vec<BigUint>) -> Self {
        CountTable { family, values }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn first_index(&self) -> usize {
        self.family.first_index()
    }

    /// One past the largest stored index.
    pub fn end_index(&self) -> usize {
        self.first_index() + self.values.len()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn get(&self, index: usize) -> Option<&BigUint> {
        index
            .checked_sub(self.first_index())
            .and_then(|k| self.values.get(k))
    }

    /// `(index, value)` pairs in order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        let first = self.first_index();
        self.values.iter().enumerate().map(move |(k, v)| (first + k, v))
    }

    /// `n,value` header followed by one row per index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (i, v) in self.iter() {
            out.push_str(&format!("{i},{v}\n"));
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.name(),
            "first_index": self.first_index(),
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            values: Vec<String>,
        }
        let raw: Raw = serde_json::from_str(s).map_err(|e| {
            Error::input(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })?;
        let values = raw
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.parse::<BigUint>()
                    .map_err(|_| Error::input(format!("values[{k}]"), format!("`{v}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable::new(raw.family, values))
    }
}

/// Which of the three ncp-style families a [`Triple`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ncp,
    Ncpws,
    Ordered,
}

/// Jointly computed `(g, f, h)`-style tables that can be extended on demand.
#[derive(Debug, Clone)]
pub struct Triple {
    kind: Kind,
    g: Vec<BigUint>,
    f: Vec<BigUint>,
    h: Vec<BigUint>,
}

impl Triple {
    pub fn new(kind: Kind) -> Self {
        Triple {
            kind,
            g: vec![BigUint::one()],
            f: vec![BigUint::zero()],
            h: vec![BigUint::zero()],
        }
    }

    /// Largest index currently computed.
    pub fn computed_to(&self) -> usize {
        self.g.len() - 1
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.g.len() <= n_max {
            self.push_next();
        }
    }

    fn push_next(&mut self) {
        let n = self.g.len();
        let (g, f, h) = (&self.g, &self.f, &self.h);

        let f_n = if n < 2 {
            BigUint::zero()
        } else {
            match self.kind {
                // sum_{i=2}^n g(i-2) g(n-i) + 2 f(i-1) g(n-i)
                Kind::Ncp | Kind::Ncpws => {
                    let mut direct = BigUint::zero();
                    let mut through = BigUint::zero();
                    for i in 2..=n {
                        direct += &g[i - 2] * &g[n - i];
                        through += &f[i - 1] * &g[n - i];
                    }
                    direct + (through << 1u32)
                }
                // go(n-2) + fo(n-1) + sum_{i=2}^n fo(i-1) go(n-i)
                Kind::Ordered => {
                    let mut acc = &g[n - 2] + &f[n - 1];
                    for i in 2..=n {
                        acc += &f[i - 1] * &g[n - i];
                    }
                    acc
                }
            }
        };

        // h(n) reads f only up to index n - 1.
        let h_n = if n < 3 {
            BigUint::zero()
        } else {
            let mut acc = BigUint::zero();
            for i in 2..n {
                let tail_f = &f[n - i + 1];
                acc += &g[i - 2] * tail_f;
                acc += &f[i - 1] * tail_f;
                acc += &g[i - 2] * &h[n - i + 1];
            }
            acc
        };

        let g_n = match self.kind {
            Kind::Ncpws => &f_n + &h_n,
            Kind::Ncp | Kind::Ordered => &g[n - 1] + &f_n + &h_n,
        };
        self.g.push(g_n);
        self.f.push(f_n);
        self.h.push(h_n);
    }

    /// Single-entry query; memoizes the whole prefix.
    pub fn total(&mut self, n: usize) -> &BigUint {
        self.extend_to(n);
        &self.g[n]
    }

    fn families(&self) -> (Family, Family, Family) {
        match self.kind {
            Kind::Ncp => (Family::G, Family::F, Family::H),
            Kind::Ncpws => (Family::Gs, Family::Fs, Family::Hs),
            Kind::Ordered => (Family::Go, Family::Fo, Family::Ho),
        }
    }

    /// Tables truncated to `0..=n_max`.
    pub fn tables(&self, n_max: usize) -> (CountTable, CountTable, CountTable) {
        assert!(n_max <= self.computed_to(), "extend_to({n_max}) first");
        let (fg, ff, fh) = self.families();
        let take = |v: &[BigUint]| v[..=n_max].to_vec();
        (
            CountTable::new(fg, take(&self.g)),
            CountTable::new(ff, take(&self.f)),
            CountTable::new(fh, take(&self.h)),
        )
    }
}

fn tables_for(kind: Kind, n_max: usize) -> (CountTable, CountTable, CountTable) {
    let mut t = Triple::new(kind);
    t.extend_to(n_max);
    t.tables(n_max)
}

/// Non-crossing path partitions on `n` convex points (`g`), with point 1 an
/// endpoint (`f`) or a middle vertex (`h`), for `n = 0..=n_max`.
pub fn gfh_tables(n_max: usize) -> (CountTable, CountTable, CountTable) {
    tables_for(Kind::Ncp, n_max)
}

/// As [`gfh_tables`] without singletons.
pub fn gs_tables(n_max: usize) -> (CountTable, CountTable, CountTable) {
    tables_for(Kind::Ncpws, n_max)
}

/// As [`gfh_tables`] for ordered partitions.
pub fn go_tables(n_max: usize) -> (CountTable, CountTable, CountTable) {
    tables_for(Kind::Ordered, n_max)
}

/// `a_i = a_{i-1} + b_{i-1}`, `b_i = 2 a_{i-1} + b_{i-1}`, `a_1 = 1`, `b_1 = 0`,
/// for `i = 1..=i_max`.
pub fn ab_tables(i_max: usize) -> Result<(CountTable, CountTable)> {
    if i_max < 1 {
        return Err(Error::input("i_max", "must be at least 1"));
    }
    let mut a = vec![BigUint::one()];
    let mut b = vec![BigUint::zero()];
    for k in 1..i_max {
        let next_a = &a[k - 1] + &b[k - 1];
        let next_b = (&a[k - 1] << 1u32) + &b[k - 1];
        a.push(next_a);
        b.push(next_b);
    }
    Ok((CountTable::new(Family::A, a), CountTable::new(Family::B, b)))
}

/// Second-order form `x_i = 2 x_{i-1} + x_{i-2}` seeded from the first two
/// entries of the first-order system.
pub fn pell_second_order(x1: &BigUint, x2: &BigUint, i_max: usize) -> Vec<BigUint> {
    let mut out = vec![x1.clone(), x2.clone()];
    out.truncate(i_max);
    while out.len() < i_max {
        let k = out.len();
        let next = (&out[k - 1] << 1u32) + &out[k - 2];
        out.push(next);
    }
    out
}

/// `g(n) = sum_i C(n, i) gs(n - i)`: an ncp partition is a choice of singletons
/// plus an ncpws partition of the rest.
pub fn g_from_gs(n_max: usize) -> CountTable {
    let (gs, _, _) = gs_tables(n_max);
    let gs = gs.values();
    let mut row = vec![BigUint::one()];
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            let mut next = vec![BigUint::one(); n + 1];
            for k in 1..n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        let value = row
            .iter()
            .enumerate()
            .fold(BigUint::zero(), |acc, (i, c)| acc + c * &gs[n - i]);
        out.push(value);
    }
    CountTable::new(Family::G, out)
}
