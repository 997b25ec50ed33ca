//! Self-check suite: every closed-form count against the brute-force
//! oracles, and every algebraic relation against its count table.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::asymptotics::{series_residual, AlgebraicRelation};
use crate::doublechain::{count_polygonizations_exact, count_polygonizations_geometric, DoubleChainConfig};
use crate::geometry::PartitionClass;
use crate::oracle::{count_partitions, role_counts};
use crate::recurrences::{ab_tables, g_from_gs, gfh_tables, go_tables, gs_tables, pell_second_order, CountTable};
use crate::reference::{TABLE_G, TABLE_GO, TABLE_GS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    /// Oracle enumeration runs for `n = 1..=oracle_max_n`.
    pub oracle_max_n: usize,
    pub series_order: usize,
    /// Polygonization counts are cross-checked for `n + m <= chain_max_points`.
    pub chain_max_points: usize,
}

impl VerifyOptions {
    pub fn quick() -> Self {
        VerifyOptions {
            oracle_max_n: 8,
            series_order: 20,
            chain_max_points: 8,
        }
    }

    pub fn full() -> Self {
        VerifyOptions {
            oracle_max_n: 10,
            series_order: 30,
            chain_max_points: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: impl Into<String>, outcome: Result<String, String>) -> CheckResult {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        name: name.into(),
        passed,
        detail,
    }
}

fn golden(table: &CountTable, expected: &[u64]) -> Result<String, String> {
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = table.get(n).cloned().unwrap_or_default();
        if got != BigUint::from(want) {
            return Err(format!("n={n}: computed {got}, published {want}"));
        }
    }
    Ok(format!("n=1..{} match", expected.len()))
}

fn oracle_vs_table(class: PartitionClass, table: &CountTable, n_max: usize) -> Result<String, String> {
    for n in 1..=n_max {
        let total = count_partitions(n, class).map_err(|e| e.to_string())?.total;
        let want = table.get(n).cloned().unwrap_or_default();
        if BigUint::from(total) != want {
            return Err(format!("n={n}: oracle {total}, table {want}"));
        }
    }
    Ok(format!("n=1..{n_max} match"))
}

pub fn run_verification(opts: VerifyOptions) -> VerifyReport {
    let n_tab = opts.series_order.max(opts.oracle_max_n).max(11);
    let (g, f, h) = gfh_tables(n_tab);
    let (gs, _, _) = gs_tables(n_tab);
    let (go, _, _) = go_tables(n_tab);
    let mut checks = vec![
        check("table g", golden(&g, &TABLE_G)),
        check("table gs", golden(&gs, &TABLE_GS)),
        check("table go", golden(&go, &TABLE_GO)),
    ];

    for (class, table) in [(PartitionClass::Ncp, &g), (PartitionClass::Ncpws, &gs), (PartitionClass::Ordered, &go)] {
        checks.push(check(
            format!("oracle = table ({class})"),
            oracle_vs_table(class, table, opts.oracle_max_n),
        ));
    }

    checks.push(check("role split of point 1 = (g(n-1), f(n), h(n))", {
        (1..=opts.oracle_max_n)
            .try_for_each(|n| {
                let rc = role_counts(n, PartitionClass::Ncp).map_err(|e| e.to_string())?;
                let got = [rc.singleton, rc.endpoint, rc.middle].map(BigUint::from);
                let want = [&g.values()[n - 1], &f.values()[n], &h.values()[n]];
                if got.iter().zip(want).all(|(a, b)| a == b) {
                    Ok(())
                } else {
                    Err(format!("n={n}: oracle {got:?}"))
                }
            })
            .map(|_| format!("n=1..{}", opts.oracle_max_n))
    }));

    checks.push(check("g = sum C(n,i) gs(n-i)", {
        let via = g_from_gs(n_tab);
        if via.values() == g.values() {
            Ok(format!("n=0..{n_tab}"))
        } else {
            Err("binomial identity differs from the g table".into())
        }
    }));

    let order = opts.series_order;
    for (rel, table, label) in [
        (AlgebraicRelation::eq8(), &g, "g"),
        (AlgebraicRelation::eq15(), &gs, "gs"),
        (AlgebraicRelation::eq22(), &go, "go"),
    ] {
        checks.push(check(
            format!("series residual ({}, {label}) = 0", rel.name()),
            match series_residual(&rel, table, order) {
                Ok(r) if r.is_zero() => Ok(format!("order {order}")),
                Ok(r) => Err(format!("residual {r}")),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
    checks.push(check(
        "series residual (eq8, gs) != 0",
        match series_residual(&AlgebraicRelation::eq8(), &gs, order) {
            Ok(r) if !r.is_zero() => Ok(format!("residual {r}")),
            Ok(_) => Err("mismatched pair cancelled".into()),
            Err(e) => Err(e.to_string()),
        },
    ));

    checks.push(check("a, b first-order = second-order", {
        match ab_tables(64) {
            Ok((a, b)) => {
                let (av, bv) = (a.values(), b.values());
                if pell_second_order(&av[0], &av[1], 64) == av && pell_second_order(&bv[0], &bv[1], 64) == bv {
                    Ok("i=1..64".into())
                } else {
                    Err("second-order recurrence disagrees".into())
                }
            }
            Err(e) => Err(e.to_string()),
        }
    }));

    checks.push(check("polygonizations: pairs = geometry", {
        let mut result = Ok(format!("n+m<={}", opts.chain_max_points));
        'outer: for n in 1..opts.chain_max_points {
            for m in 1..=opts.chain_max_points - n {
                let outcome = DoubleChainConfig::new(n, m).and_then(|c| {
                    Ok((count_polygonizations_exact(c)?, count_polygonizations_geometric(c)?))
                });
                match outcome {
                    Ok((a, b)) if a == b => {}
                    Ok((a, b)) => {
                        result = Err(format!("({n},{m}): pairs {a}, geometry {b}"));
                        break 'outer;
                    }
                    Err(e) => {
                        result = Err(e.to_string());
                        break 'outer;
                    }
                }
            }
        }
        result
    }));

    VerifyReport { options: opts, checks }
}
