//! Closed forms checked against brute-force `uB` of the generated graphs.

use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::families::{self, formulas};
use crate::graph::Graph;
use crate::invariants::{average_unbalancedness, distance_unbalancedness, mostar};
use crate::partitions::partitions;

/// One (formula, parameters) comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub formula: &'static str,
    pub params: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "MISMATCH" };
        write!(
            f,
            "{} {}({}) formula={} bruteforce={}",
            status, self.formula, self.params, self.expected, self.actual
        )
    }
}

/// Grid names accepted by [`run_grid`].
pub const GRIDS: [&str; 10] = [
    "multipartite",
    "wheel",
    "path",
    "path_average",
    "sum_abs",
    "tube",
    "merged_star",
    "subdivided_merged_star",
    "kite",
    "tilde",
];

struct Case {
    formula: &'static str,
    params: String,
    expected: String,
    build: Box<dyn Fn() -> Result<String> + Send + Sync>,
}

fn graph_case(
    formula: &'static str,
    params: String,
    expected: u64,
    build: impl Fn() -> Result<Graph> + Send + Sync + 'static,
) -> Case {
    Case {
        formula,
        params,
        expected: expected.to_string(),
        build: Box::new(move || Ok(distance_unbalancedness(&build()?)?.to_string())),
    }
}

fn cases(grid: &str) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    match grid {
        "multipartite" => {
            for total in 2..=10 {
                for parts in partitions(total).filter(|p| p.len() >= 2) {
                    let expected = formulas::multipartite(&parts)?;
                    let label = join(&parts);
                    out.push(graph_case("multipartite", label, expected, move || {
                        families::complete_multipartite(&parts)
                    }));
                }
            }
        }
        "wheel" => {
            for n in 3..=12 {
                out.push(graph_case(
                    "wheel",
                    n.to_string(),
                    formulas::wheel(n)?,
                    move || families::wheel(n),
                ));
            }
        }
        "path" => {
            for n in 1..=40 {
                let (total, _) = formulas::path(n)?;
                out.push(graph_case("path", n.to_string(), total, move || {
                    families::path(n)
                }));
            }
        }
        "path_average" => {
            for n in 2..=40 {
                let (_, avg) = formulas::path(n)?;
                let avg = avg.expect("order at least 2");
                out.push(Case {
                    formula: "path_average",
                    params: n.to_string(),
                    expected: avg.to_string(),
                    build: Box::new(move || {
                        Ok(average_unbalancedness(&families::path(n)?)?.to_string())
                    }),
                });
            }
        }
        "sum_abs" => {
            // the sum is the Mostar index of the path
            for n in 1..=40 {
                out.push(Case {
                    formula: "sum_abs",
                    params: n.to_string(),
                    expected: formulas::sum_abs(n)?.to_string(),
                    build: Box::new(move || Ok(mostar(&families::path(n)?)?.to_string())),
                });
            }
        }
        "tube" | "tube:3" | "tube:4" | "tube:5" => {
            let widths = match grid.strip_prefix("tube:") {
                Some(m) => m.parse().expect("matched above")..=m.parse().expect("matched above"),
                None => 3..=5,
            };
            for m in widths {
                for n in 1..=12 {
                    out.push(graph_case(
                        "tube",
                        format!("{n}x{m}"),
                        formulas::tube(n, m)?,
                        move || families::tube(n, m),
                    ));
                }
            }
        }
        "merged_star" | "subdivided_merged_star" => {
            let subdivided = grid == "subdivided_merged_star";
            let extra = if subdivided { 3 } else { 2 };
            for n in 1..=20 {
                for m in 1..=n {
                    if n + m + extra > 20 {
                        continue;
                    }
                    if subdivided {
                        out.push(graph_case(
                            "subdivided_merged_star",
                            format!("{n},{m}"),
                            formulas::subdivided_merged_star(n, m)?,
                            move || families::subdivided_merged_star(n, m),
                        ));
                    } else {
                        out.push(graph_case(
                            "merged_star",
                            format!("{n},{m}"),
                            formulas::merged_star(n, m)?,
                            move || families::merged_star(n, m),
                        ));
                    }
                }
            }
        }
        "kite" => {
            for n in 2..=8 {
                out.push(graph_case(
                    "kite",
                    n.to_string(),
                    formulas::kite(n)?,
                    move || families::kite(n),
                ));
            }
        }
        "tilde" => {
            for n in 2..=30 {
                out.push(graph_case(
                    "tilde",
                    n.to_string(),
                    formulas::tilde_cycle(n)?,
                    move || families::tilde_cycle(n),
                ));
            }
        }
        other => {
            return Err(crate::error::Error::bad_params(format!(
                "unknown grid {other:?}; valid grids: {}",
                GRIDS.join(", ")
            )))
        }
    }
    Ok(out)
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Runs one named grid; `tube:M` restricts the tube grid to one width. With `inject_fault`, the first formula value is
/// corrupted so that the harness must report a mismatch.
pub fn run_grid(grid: &str, inject_fault: bool) -> Result<Vec<Check>> {
    let cases = cases(grid)?;
    let mut checks = cases
        .into_par_iter()
        .map(|case| {
            Ok(Check {
                formula: case.formula,
                params: case.params,
                expected: case.expected,
                actual: (case.build)()?,
            })
        })
        .collect::<Result<Vec<Check>>>()?;
    if inject_fault {
        if let Some(first) = checks.first_mut() {
            first.expected.push('1');
        }
    }
    Ok(checks)
}

/// Every grid in [`GRIDS`].
pub fn run_all(inject_fault: bool) -> Result<Vec<Check>> {
    let mut all = Vec::new();
    for (i, grid) in GRIDS.iter().enumerate() {
        all.extend(run_grid(grid, inject_fault && i == 0)?);
    }
    Ok(all)
}
