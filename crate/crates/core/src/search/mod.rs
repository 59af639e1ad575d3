//! Labeling search: a pruned backtracking solver, an unpruned brute-force
//! oracle, and the `G(m, n)` survey with its JSON-lines catalog.
//!
//! The solver assigns vertices in descending-degree order (ties by id) and
//! tries labels in ascending order. Parallel runs split the root vertex's
//! label choices into independent branches and merge them in label order,
//! so outcomes and `nodes_explored` do not depend on the worker count.

mod oracle;
mod solver;
mod survey;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexLabeling};
use crate::verify::LabelingMode;

pub use oracle::{oracle_solve, oracle_space, ORACLE_LIMIT};
pub use solver::{search_order, solve};
pub use survey::{survey_gmn, survey_one, Catalog, SurveyRecord, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Goal {
    FindOne,
    EnumerateAll,
    CountOnly,
}

/// Individually switchable pruning rules. Each is admissible: turning one
/// off changes the work done, never the set of witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pruning {
    /// Reject additively graceful searches with `q < 2p - 4` up front.
    pub additive_bound: bool,
    /// Reject more vertices than available labels up front.
    pub pigeonhole: bool,
    /// Check every completed edge for range and duplicates as soon as both
    /// endpoints are labeled. When off, complete assignments are verified.
    pub edge_labels: bool,
    /// A vertex with a sum edge to a still-unlabeled neighbour cannot carry a
    /// label larger than that edge class's maximum.
    pub sum_lookahead: bool,
    /// After each placement, every unplaced neighbour must still have a free
    /// label consistent with its placed neighbours. Needs `edge_labels`.
    pub forward_check: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning {
        additive_bound: true,
        pigeonhole: true,
        edge_labels: true,
        sum_lookahead: true,
        forward_check: true,
    };

    pub const NONE: Pruning = Pruning {
        additive_bound: false,
        pigeonhole: false,
        edge_labels: false,
        sum_lookahead: false,
        forward_check: false,
    };
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: LabelingMode,
    pub goal: Goal,
    /// Maximum number of search nodes (label placements) to explore.
    pub node_budget: Option<u64>,
    /// Wall-clock limit. Unlike the node budget this makes the outcome
    /// timing dependent.
    pub time_budget: Option<Duration>,
    pub workers: usize,
    pub pruning: Pruning,
}

impl SearchConfig {
    pub fn new(mode: LabelingMode, goal: Goal) -> Self {
        SearchConfig {
            mode,
            goal,
            node_budget: None,
            time_budget: None,
            workers: 1,
            pruning: Pruning::ALL,
        }
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.node_budget == Some(0) {
            return Err(Error::InvalidParameter(
                "node budget must be at least 1".into(),
            ));
        }
        if self.time_budget == Some(Duration::ZERO) {
            return Err(Error::InvalidParameter(
                "time budget must be positive".into(),
            ));
        }
        if self.workers == 0 {
            return Err(Error::InvalidParameter(
                "worker count must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    /// The whole space was covered and nothing satisfies the mode.
    ExhaustedNone,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// `FindOne`: the first witness in DFS order. `EnumerateAll`: every
    /// witness in lexicographic order. Empty for `CountOnly` and when the
    /// budget ran out.
    pub witnesses: Vec<VertexLabeling>,
    pub witness_count: u64,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    pub(crate) fn exhausted(nodes_explored: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::ExhaustedNone,
            witnesses: Vec::new(),
            witness_count: 0,
            nodes_explored,
        }
    }

    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

/// Checks the solver's preconditions shared with the oracle.
pub(crate) fn check_input(graph: &SignedGraph, mode: LabelingMode) -> Result<()> {
    mode.check_compatible(graph)
}
