use super::{check_input, SearchOutcome, SearchStatus};
use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexLabeling};
use crate::verify::{Checker, LabelingMode};

/// Largest number of complete assignments the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 10_000_000;

/// Number of injective maps from `p` vertices into the mode's label domain.
pub fn oracle_space(graph: &SignedGraph, mode: LabelingMode) -> u128 {
    let domain = mode.max_label(graph) as u128 + 1;
    let p = graph.p() as u128;
    if p > domain {
        return 0;
    }
    (0..p).map(|i| domain - i).product()
}

/// Enumerates every injective assignment into the label domain, vertex by
/// vertex in id order with ascending labels, and keeps the ones the
/// verifier accepts. No pruning of any kind.
pub fn oracle_solve(graph: &SignedGraph, mode: LabelingMode) -> Result<SearchOutcome> {
    check_input(graph, mode)?;
    let size = oracle_space(graph, mode);
    if size > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            size,
            limit: ORACLE_LIMIT,
        });
    }
    let mut checker = Checker::new(graph, mode)?;
    let domain = mode.max_label(graph) + 1;
    let p = graph.p();
    let mut labels = vec![0u32; p];
    let mut used = vec![false; domain as usize];
    let mut witnesses = Vec::new();
    let mut checked = 0u64;

    fn rec(
        depth: usize,
        labels: &mut Vec<u32>,
        used: &mut Vec<bool>,
        domain: u32,
        checker: &mut Checker,
        checked: &mut u64,
        witnesses: &mut Vec<VertexLabeling>,
    ) {
        if depth == labels.len() {
            *checked += 1;
            if checker.check(labels) {
                witnesses.push(VertexLabeling::new(labels.clone()));
            }
            return;
        }
        for label in 0..domain {
            if used[label as usize] {
                continue;
            }
            used[label as usize] = true;
            labels[depth] = label;
            rec(depth + 1, labels, used, domain, checker, checked, witnesses);
            used[label as usize] = false;
        }
    }

    if p as u128 <= domain as u128 {
        rec(
            0,
            &mut labels,
            &mut used,
            domain,
            &mut checker,
            &mut checked,
            &mut witnesses,
        );
    }
    let count = witnesses.len() as u64;
    Ok(SearchOutcome {
        status: if count > 0 {
            SearchStatus::Found
        } else {
            SearchStatus::ExhaustedNone
        },
        witnesses,
        witness_count: count,
        nodes_explored: checked,
    })
}
