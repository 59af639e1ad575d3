use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::{check_input, Goal, SearchConfig, SearchOutcome, SearchStatus};
use crate::error::Result;
use crate::graph::{SignedGraph, VertexLabeling};
use crate::verify::{additive_bound_holds, Checker, EdgeRule, LabelingMode};

const CLOCK_INTERVAL: u64 = 4096;

/// Vertex assignment order: descending degree, ties by ascending id.
pub fn search_order(graph: &SignedGraph) -> Vec<usize> {
    let degrees = graph.degrees();
    let mut order: Vec<usize> = (0..graph.p()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    order
}

#[derive(Debug, Clone, Copy)]
struct BackEdge {
    other: usize,
    other_depth: usize,
    class: usize,
    rule: EdgeRule,
}

/// Everything the DFS needs, precomputed once per solve.
struct Plan {
    graph: SignedGraph,
    mode: LabelingMode,
    order: Vec<usize>,
    max_label: u32,
    caps: [usize; 2],
    /// Edges from `order[d]` to vertices placed before depth `d`, sorted by
    /// the depth of the other endpoint.
    back: Vec<Vec<BackEdge>>,
    /// Depths of the neighbours of `order[d]` placed after it.
    forward: Vec<Vec<usize>>,
    /// Largest label allowed at depth `d` by sum edges to later vertices.
    sum_ceiling: Vec<u32>,
    edge_pruning: bool,
    forward_check: bool,
}

impl Plan {
    fn new(graph: &SignedGraph, config: &SearchConfig) -> Self {
        let mode = config.mode;
        let order = search_order(graph);
        let mut depth_of = vec![0; graph.p()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let caps = mode.caps(graph);
        let mut back = vec![Vec::new(); graph.p()];
        let mut forward = vec![Vec::new(); graph.p()];
        let mut sum_ceiling = vec![u32::MAX; graph.p()];
        for e in graph.edges() {
            let (first, last) = if depth_of[e.u] < depth_of[e.v] {
                (e.u, e.v)
            } else {
                (e.v, e.u)
            };
            let class = mode.class(e.sign);
            let rule = mode.rule(e.sign);
            back[depth_of[last]].push(BackEdge {
                other: first,
                other_depth: depth_of[first],
                class,
                rule,
            });
            forward[depth_of[first]].push(depth_of[last]);
            if config.pruning.sum_lookahead && rule == EdgeRule::Sum {
                let ceiling = &mut sum_ceiling[depth_of[first]];
                *ceiling = (*ceiling).min(caps[class] as u32);
            }
        }
        for edges in &mut back {
            edges.sort_by_key(|e| e.other_depth);
        }
        for later in &mut forward {
            later.sort_unstable();
        }
        Plan {
            graph: graph.clone(),
            mode,
            max_label: mode.max_label(graph),
            caps,
            order,
            back,
            forward,
            sum_ceiling,
            edge_pruning: config.pruning.edge_labels,
            forward_check: config.pruning.edge_labels && config.pruning.forward_check,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stop {
    Completed,
    FoundFirst,
    NodeLimit,
    Deadline,
    Cancelled,
}

#[derive(Debug)]
struct BranchResult {
    nodes: u64,
    /// Node count at which the first witness was completed.
    first_hit_at: Option<u64>,
    witnesses: Vec<Vec<u32>>,
    count: u64,
    stop: Stop,
}

struct Dfs<'a> {
    plan: &'a Plan,
    goal: Goal,
    limit: u64,
    deadline: Option<Instant>,
    cancelled: &'a dyn Fn() -> bool,
    labels: Vec<u32>,
    label_used: Vec<bool>,
    edge_used: [Vec<bool>; 2],
    checker: Option<Checker>,
    nodes: u64,
    first_hit_at: Option<u64>,
    witnesses: Vec<Vec<u32>>,
    count: u64,
}

impl<'a> Dfs<'a> {
    fn run(
        plan: &'a Plan,
        goal: Goal,
        root_label: u32,
        limit: u64,
        deadline: Option<Instant>,
        cancelled: &'a dyn Fn() -> bool,
    ) -> BranchResult {
        let checker = if plan.edge_pruning {
            None
        } else {
            Some(Checker::new(&plan.graph, plan.mode).expect("mode checked before planning"))
        };
        let mut dfs = Dfs {
            plan,
            goal,
            limit,
            deadline,
            cancelled,
            labels: vec![0; plan.graph.p()],
            label_used: vec![false; plan.max_label as usize + 1],
            edge_used: [vec![false; plan.caps[0] + 1], vec![false; plan.caps[1] + 1]],
            checker,
            nodes: 0,
            first_hit_at: None,
            witnesses: Vec::new(),
            count: 0,
        };
        let stop = match dfs.place(0, root_label..=root_label) {
            ControlFlow::Continue(()) => Stop::Completed,
            ControlFlow::Break(stop) => stop,
        };
        BranchResult {
            nodes: dfs.nodes,
            first_hit_at: dfs.first_hit_at,
            witnesses: dfs.witnesses,
            count: dfs.count,
            stop,
        }
    }

    fn tick(&mut self) -> ControlFlow<Stop> {
        if self.nodes == self.limit {
            return ControlFlow::Break(Stop::NodeLimit);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_INTERVAL) {
            if (self.cancelled)() {
                return ControlFlow::Break(Stop::Cancelled);
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return ControlFlow::Break(Stop::Deadline);
            }
        }
        ControlFlow::Continue(())
    }

    fn place(
        &mut self,
        depth: usize,
        candidates: std::ops::RangeInclusive<u32>,
    ) -> ControlFlow<Stop> {
        let plan = self.plan;
        if depth == plan.order.len() {
            return self.leaf();
        }
        let vertex = plan.order[depth];
        let ceiling = plan.sum_ceiling[depth];
        for label in candidates {
            if self.label_used[label as usize] {
                continue;
            }
            self.tick()?;
            if label > ceiling {
                continue;
            }
            let all = plan.back[depth].len();
            if plan.edge_pruning && !self.mark_back_edges(depth, label, all) {
                continue;
            }
            self.labels[vertex] = label;
            self.label_used[label as usize] = true;
            let flow = if plan.forward_check && !self.neighbours_extendable(depth) {
                ControlFlow::Continue(())
            } else {
                self.place(depth + 1, 0..=plan.max_label)
            };
            self.label_used[label as usize] = false;
            if plan.edge_pruning {
                self.unmark_back_edges(depth, label, all);
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Marks the induced labels of the first `upto` back edges at `depth`
    /// for `label`; on conflict undoes the partial marks and returns false.
    fn mark_back_edges(&mut self, depth: usize, label: u32, upto: usize) -> bool {
        let back = &self.plan.back[depth][..upto];
        for (k, e) in back.iter().enumerate() {
            let induced = e.rule.apply(label, self.labels[e.other]) as usize;
            if induced == 0 || induced > self.plan.caps[e.class] || self.edge_used[e.class][induced]
            {
                self.unmark_back_edges(depth, label, k);
                return false;
            }
            self.edge_used[e.class][induced] = true;
        }
        true
    }

    /// Every later neighbour of the vertex just placed at `depth` must still
    /// have some free label compatible with all of its placed neighbours.
    fn neighbours_extendable(&mut self, depth: usize) -> bool {
        let plan = self.plan;
        for &later in &plan.forward[depth] {
            let placed = plan.back[later].partition_point(|e| e.other_depth <= depth);
            let ceiling = plan.sum_ceiling[later].min(plan.max_label);
            let mut feasible = false;
            for y in 0..=ceiling {
                if self.label_used[y as usize] {
                    continue;
                }
                if self.mark_back_edges(later, y, placed) {
                    self.unmark_back_edges(later, y, placed);
                    feasible = true;
                    break;
                }
            }
            if !feasible {
                return false;
            }
        }
        true
    }

    fn unmark_back_edges(&mut self, depth: usize, label: u32, upto: usize) {
        for e in &self.plan.back[depth][..upto] {
            let induced = e.rule.apply(label, self.labels[e.other]) as usize;
            self.edge_used[e.class][induced] = false;
        }
    }

    fn leaf(&mut self) -> ControlFlow<Stop> {
        if let Some(checker) = self.checker.as_mut() {
            if !checker.check(&self.labels) {
                return ControlFlow::Continue(());
            }
        }
        self.count += 1;
        if self.first_hit_at.is_none() {
            self.first_hit_at = Some(self.nodes);
        }
        match self.goal {
            Goal::FindOne => {
                self.witnesses.push(self.labels.clone());
                ControlFlow::Break(Stop::FoundFirst)
            }
            Goal::EnumerateAll => {
                self.witnesses.push(self.labels.clone());
                ControlFlow::Continue(())
            }
            Goal::CountOnly => ControlFlow::Continue(()),
        }
    }
}

/// Folds branch results in root-label order into the final outcome, exactly
/// as a single sequential DFS with a global node counter would produce it.
struct Merger {
    goal: Goal,
    budget: u64,
    offset: u64,
    witnesses: Vec<Vec<u32>>,
    count: u64,
}

impl Merger {
    fn remaining(&self) -> u64 {
        self.budget - self.offset
    }

    fn exceeded(&self, nodes_explored: u64) -> SearchOutcome {
        SearchOutcome {
            status: SearchStatus::BudgetExceeded,
            witnesses: Vec::new(),
            witness_count: 0,
            nodes_explored,
        }
    }

    fn push(&mut self, branch: BranchResult) -> Option<SearchOutcome> {
        assert_ne!(branch.stop, Stop::Cancelled, "merged a cancelled branch");
        if self.goal == Goal::FindOne {
            if let Some(at) = branch.first_hit_at {
                if at <= self.remaining() {
                    return Some(SearchOutcome {
                        status: SearchStatus::Found,
                        witnesses: branch
                            .witnesses
                            .into_iter()
                            .take(1)
                            .map(VertexLabeling::new)
                            .collect(),
                        witness_count: 1,
                        nodes_explored: self.offset + at,
                    });
                }
            }
        }
        if branch.stop == Stop::Deadline {
            return Some(self.exceeded(self.offset + branch.nodes));
        }
        if branch.stop == Stop::NodeLimit || branch.nodes > self.remaining() {
            return Some(self.exceeded(self.budget));
        }
        self.offset += branch.nodes;
        self.count += branch.count;
        self.witnesses.extend(branch.witnesses);
        None
    }

    fn finish(mut self) -> SearchOutcome {
        if self.count == 0 {
            return SearchOutcome::exhausted(self.offset);
        }
        self.witnesses.sort_unstable();
        SearchOutcome {
            status: SearchStatus::Found,
            witnesses: self
                .witnesses
                .into_iter()
                .map(VertexLabeling::new)
                .collect(),
            witness_count: self.count,
            nodes_explored: self.offset,
        }
    }
}

/// Searches for labelings of `graph` in `config.mode`.
///
/// Deterministic for a fixed input and node budget, independent of
/// `config.workers`.
pub fn solve(graph: &SignedGraph, config: &SearchConfig) -> Result<SearchOutcome> {
    check_input(graph, config.mode)?;
    config.validate()?;
    let mode = config.mode;

    if config.pruning.additive_bound
        && mode == LabelingMode::AdditivelyGraceful
        && !additive_bound_holds(graph)
    {
        return Ok(SearchOutcome::exhausted(0));
    }
    let max_label = mode.max_label(graph);
    if config.pruning.pigeonhole && graph.p() > max_label as usize + 1 {
        return Ok(SearchOutcome::exhausted(0));
    }

    let plan = Plan::new(graph, config);
    let mut merger = Merger {
        goal: config.goal,
        budget: config.node_budget.unwrap_or(u64::MAX),
        offset: 0,
        witnesses: Vec::new(),
        count: 0,
    };
    let deadline = config.time_budget.map(|t| Instant::now() + t);

    if graph.p() == 0 {
        // A single empty assignment, reached without placing anything.
        let empty = BranchResult {
            nodes: 0,
            first_hit_at: Some(0),
            witnesses: if config.goal == Goal::CountOnly {
                vec![]
            } else {
                vec![vec![]]
            },
            count: 1,
            stop: Stop::Completed,
        };
        return Ok(merger.push(empty).unwrap_or_else(|| merger.finish()));
    }

    let never = || false;
    if config.workers <= 1 {
        for root in 0..=max_label {
            let branch = Dfs::run(
                &plan,
                config.goal,
                root,
                merger.remaining(),
                deadline,
                &never,
            );
            if let Some(outcome) = merger.push(branch) {
                return Ok(outcome);
            }
        }
        return Ok(merger.finish());
    }

    let branches = max_label as usize + 1;
    let results: Mutex<Vec<Option<BranchResult>>> =
        Mutex::new((0..branches).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    // Lowest branch index after which no result can matter.
    let horizon = AtomicUsize::new(usize::MAX);
    let budget = merger.budget;
    std::thread::scope(|scope| {
        for _ in 0..config.workers.min(branches) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= branches {
                    break;
                }
                if idx > horizon.load(Ordering::Relaxed) {
                    continue;
                }
                let cancelled = || idx > horizon.load(Ordering::Relaxed);
                let branch = Dfs::run(&plan, config.goal, idx as u32, budget, deadline, &cancelled);
                let terminal = matches!(branch.stop, Stop::NodeLimit | Stop::Deadline)
                    || (config.goal == Goal::FindOne && branch.first_hit_at.is_some());
                if terminal {
                    horizon.fetch_min(idx, Ordering::Relaxed);
                }
                results.lock().unwrap()[idx] = Some(branch);
            });
        }
    });

    for branch in results.into_inner().unwrap() {
        let Some(branch) = branch else {
            unreachable!("branch skipped before the merge finished")
        };
        if let Some(outcome) = merger.push(branch) {
            return Ok(outcome);
        }
    }
    Ok(merger.finish())
}
