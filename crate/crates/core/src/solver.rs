//! Backtracking search for tree-tree bipartitions, and the exhaustive oracles
//! it is checked against.
//!
//! Vertices are assigned one at a time, `S` before `T`, with vertex 0 pinned
//! to `S` since bipartitions are unordered. Each side's components live in a
//! rollback union-find whose set weight is the number of edges from the
//! component to still-unassigned vertices. A branch is cut when a side gains
//! a cycle, or when a side has a component with no unassigned neighbours left
//! while that side still has other components (it can never become a tree).

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use serde::Serialize;
use thiserror::Error;

use crate::duality::{dual_graph, is_cycle_edge_set};
use crate::dsu::RollbackDsu;
use crate::edge_set::EdgeSet;
use crate::map::PlaneMultigraph;
use crate::partition::{
    cross_edges, dual_cycle_to_partition, partition_to_dual_cycle, side_kind, Bipartition,
    ConditionChecker, CycleStep, HamiltonCycleCertificate, Side, SubgraphKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum VertexOrder {
    #[default]
    Input,
    DegreeDescending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Pruning {
    /// Visit every assignment and test trees at the leaves.
    Off,
    CyclesOnly,
    /// Cycle cuts plus the closed-component connectivity cut.
    #[default]
    Full,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub order: VertexOrder,
    /// Maximum number of search nodes (vertex assignments) to expand.
    pub budget: Option<u64>,
    pub enumerate_all: bool,
    pub pruning: Pruning,
    /// Worker threads; above 1 the top of the tree is split into branch
    /// prefixes. The budget is shared by all workers.
    pub workers: usize,
    /// Record every expanded node (only for graphs with at most 64 vertices).
    pub record_trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            order: VertexOrder::Input,
            budget: None,
            enumerate_all: false,
            pruning: Pruning::Full,
            workers: 1,
            record_trace: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(Bipartition),
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned_cycle: u64,
    pub pruned_disconnected: u64,
    pub rejected_leaves: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.pruned_cycle += other.pruned_cycle;
        self.pruned_disconnected += other.pruned_disconnected;
        self.rejected_leaves += other.rejected_leaves;
    }
}

/// A search node: the first `depth` vertices of the search order, assigned
/// as the low bits of `t_bits` (bit `i` set when the `i`-th vertex went to `T`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeKey {
    pub depth: usize,
    pub t_bits: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub stats: SearchStats,
    /// Every solution in search order; filled only with `enumerate_all`.
    pub solutions: Vec<Bipartition>,
    pub trace: Option<Vec<NodeKey>>,
}

const UNASSIGNED: u8 = 2;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

enum Cut {
    Cycle,
    Disconnected,
}

struct Search<'a> {
    order: Vec<usize>,
    adj: &'a [Vec<usize>],
    cfg: &'a SearchConfig,
    // 0 = S, 1 = T
    side: Vec<u8>,
    dsu: RollbackDsu,
    components: [usize; 2],
    cycles: usize,
    t_bits: u64,
    stats: SearchStats,
    solutions: Vec<Bipartition>,
    trace: Vec<NodeKey>,
    shared_nodes: &'a AtomicU64,
    budget_hit: bool,
    // cancellation for parallel runs: stop when an earlier prefix has a result
    cancel_after: Option<(&'a AtomicUsize, usize)>,
}

impl<'a> Search<'a> {
    fn new(
        order: Vec<usize>,
        adj: &'a [Vec<usize>],
        cfg: &'a SearchConfig,
        shared_nodes: &'a AtomicU64,
    ) -> Self {
        let n = adj.len();
        Search {
            order,
            adj,
            cfg,
            side: vec![UNASSIGNED; n],
            dsu: RollbackDsu::new(n),
            components: [0, 0],
            cycles: 0,
            t_bits: 0,
            stats: SearchStats::default(),
            solutions: Vec::new(),
            trace: Vec::new(),
            shared_nodes,
            budget_hit: false,
            cancel_after: None,
        }
    }

    /// Assigns `v` to side `s`, applying every bookkeeping change even when
    /// the result must be cut, so that [`Search::unplace`] is uniform.
    fn place(&mut self, v: usize, s: u8) -> Option<Cut> {
        let open = self.adj[v].iter().filter(|&&u| self.side[u] == UNASSIGNED).count();
        self.side[v] = s;
        self.components[s as usize] += 1;
        self.dsu.add_weight(v, open as i64);
        let mut cycle = false;
        let adj = self.adj;
        for &u in &adj[v] {
            let su = self.side[u];
            if su == UNASSIGNED || u == v {
                continue;
            }
            self.dsu.add_weight(u, -1);
            if su == s {
                if self.dsu.union(u, v) {
                    self.components[s as usize] -= 1;
                } else {
                    cycle = true;
                    self.cycles += 1;
                }
            }
        }
        if cycle && self.cfg.pruning != Pruning::Off {
            return Some(Cut::Cycle);
        }
        if self.cfg.pruning == Pruning::Full {
            let closed_and_split = |w: usize| {
                let sw = self.side[w] as usize;
                self.dsu.weight(w) == 0 && self.components[sw] > 1
            };
            if closed_and_split(v)
                || self.adj[v].iter().any(|&u| self.side[u] != UNASSIGNED && closed_and_split(u))
            {
                return Some(Cut::Disconnected);
            }
        }
        None
    }

    fn unplace(&mut self, v: usize, checkpoint: usize, saved: ([usize; 2], usize)) {
        self.dsu.rollback(checkpoint);
        self.side[v] = UNASSIGNED;
        self.components = saved.0;
        self.cycles = saved.1;
    }

    fn out_of_budget(&mut self) -> bool {
        let total = self.shared_nodes.fetch_add(1, Ordering::Relaxed) + 1;
        matches!(self.cfg.budget, Some(b) if total > b)
    }

    fn cancelled(&self) -> bool {
        matches!(self.cancel_after, Some((flag, mine)) if flag.load(Ordering::Relaxed) < mine)
    }

    fn leaf(&mut self) -> Flow {
        if self.cycles == 0 && self.components == [1, 1] {
            let p = Bipartition::from_mask(self.side.iter().map(|&s| s == 0).collect())
                .expect("both sides nonempty");
            self.solutions.push(p);
            if !self.cfg.enumerate_all {
                return Flow::Stop;
            }
        } else {
            self.stats.rejected_leaves += 1;
        }
        Flow::Continue
    }

    fn expand(&mut self, pos: usize) -> Flow {
        if pos == self.order.len() {
            return self.leaf();
        }
        let v = self.order[pos];
        let choices: &[u8] = if v == 0 { &[0] } else { &[0, 1] };
        for &s in choices {
            if self.cancelled() {
                return Flow::Stop;
            }
            if self.out_of_budget() {
                self.budget_hit = true;
                return Flow::Stop;
            }
            self.stats.nodes += 1;
            let bits = self.t_bits;
            if s == 1 && pos < 64 {
                self.t_bits |= 1 << pos;
            }
            if self.cfg.record_trace {
                self.trace.push(NodeKey { depth: pos + 1, t_bits: self.t_bits });
            }
            let checkpoint = self.dsu.checkpoint();
            let saved = (self.components, self.cycles);
            let flow = match self.place(v, s) {
                Some(Cut::Cycle) => {
                    self.stats.pruned_cycle += 1;
                    Flow::Continue
                }
                Some(Cut::Disconnected) => {
                    self.stats.pruned_disconnected += 1;
                    Flow::Continue
                }
                None => self.expand(pos + 1),
            };
            self.unplace(v, checkpoint, saved);
            self.t_bits = bits;
            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// Places a fixed prefix of the order; false if it is already cut.
    fn place_prefix(&mut self, depth: usize, t_bits: u64) -> bool {
        for pos in 0..depth {
            let s = (t_bits >> pos & 1) as u8;
            self.stats.nodes += 1;
            self.t_bits |= u64::from(s) << pos;
            if self.cfg.record_trace {
                self.trace.push(NodeKey { depth: pos + 1, t_bits: self.t_bits });
            }
            match self.place(self.order[pos], s) {
                Some(Cut::Cycle) => {
                    self.stats.pruned_cycle += 1;
                    return false;
                }
                Some(Cut::Disconnected) => {
                    self.stats.pruned_disconnected += 1;
                    return false;
                }
                None => {}
            }
        }
        true
    }
}

fn search_order(g: &PlaneMultigraph, policy: VertexOrder) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..g.n_vertices()).collect();
    if policy == VertexOrder::DegreeDescending {
        let degree: Vec<usize> = (0..g.n_vertices()).map(|v| g.degree(v)).collect();
        rest.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
    }
    std::iter::once(0).chain(rest).collect()
}

fn neighbour_lists(g: &PlaneMultigraph) -> Vec<Vec<usize>> {
    g.adjacency().into_iter().map(|row| row.into_iter().map(|(u, _)| u).collect()).collect()
}

/// Searches for a bipartition whose sides are both trees.
pub fn find_tree_partition(g: &PlaneMultigraph, cfg: &SearchConfig) -> SearchOutcome {
    let order = search_order(g, cfg.order);
    let adj = neighbour_lists(g);
    let nodes = AtomicU64::new(0);
    let record = cfg.record_trace && g.n_vertices() <= 64;
    let cfg_local;
    let cfg = if record == cfg.record_trace {
        cfg
    } else {
        cfg_local = SearchConfig { record_trace: false, ..cfg.clone() };
        &cfg_local
    };

    if cfg.workers <= 1 || g.n_vertices() < 3 {
        let mut search = Search::new(order, &adj, cfg, &nodes);
        search.expand(0);
        let result = if search.budget_hit {
            SearchResult::BudgetExceeded
        } else {
            match search.solutions.first() {
                Some(p) => SearchResult::Found(p.clone()),
                None => SearchResult::Exhausted,
            }
        };
        return SearchOutcome {
            result,
            stats: search.stats,
            solutions: if cfg.enumerate_all { search.solutions } else { Vec::new() },
            trace: cfg.record_trace.then_some(search.trace),
        };
    }
    parallel_search(order, &adj, cfg, &nodes)
}

struct PrefixRun {
    stats: SearchStats,
    solutions: Vec<Bipartition>,
    trace: Vec<NodeKey>,
    budget_hit: bool,
    skipped: bool,
}

fn parallel_search(
    order: Vec<usize>,
    adj: &[Vec<usize>],
    cfg: &SearchConfig,
    nodes: &AtomicU64,
) -> SearchOutcome {
    // split below the pinned vertex
    let free = order.len() - 1;
    let split = (usize::BITS - (cfg.workers - 1).leading_zeros()).min(free as u32).min(16) as usize;
    let n_prefixes = 1usize << split;
    let depth = split + 1;
    let next = AtomicUsize::new(0);
    let settled = AtomicUsize::new(usize::MAX);
    let mut runs: Vec<Option<PrefixRun>> = (0..n_prefixes).map(|_| None).collect();

    let done: Vec<Vec<(usize, PrefixRun)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.workers.min(n_prefixes))
            .map(|_| {
                let order = order.clone();
                let (next, settled) = (&next, &settled);
                scope.spawn(move || {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= n_prefixes {
                            break;
                        }
                        if settled.load(Ordering::Relaxed) < i {
                            mine.push((i, PrefixRun {
                                stats: SearchStats::default(),
                                solutions: Vec::new(),
                                trace: Vec::new(),
                                budget_hit: false,
                                skipped: true,
                            }));
                            continue;
                        }
                        // prefix index i read most significant first, so that
                        // ascending i is the sequential S-before-T order
                        let t_bits = (0..split).fold(0u64, |acc, k| {
                            acc | (((i >> (split - 1 - k)) & 1) as u64) << (k + 1)
                        });
                        let mut search = Search::new(order.clone(), adj, cfg, nodes);
                        if !cfg.enumerate_all {
                            search.cancel_after = Some((settled, i));
                        }
                        if search.place_prefix(depth, t_bits) {
                            search.t_bits = t_bits;
                            search.expand(depth);
                        }
                        let run = PrefixRun {
                            stats: search.stats,
                            solutions: search.solutions,
                            trace: search.trace,
                            budget_hit: search.budget_hit,
                            skipped: false,
                        };
                        if !cfg.enumerate_all && (run.budget_hit || !run.solutions.is_empty()) {
                            settled.fetch_min(i, Ordering::Relaxed);
                        }
                        mine.push((i, run));
                    }
                    mine
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    for (i, run) in done.into_iter().flatten() {
        runs[i] = Some(run);
    }

    let mut stats = SearchStats::default();
    let mut solutions = Vec::new();
    let mut trace = Vec::new();
    let mut result = None;
    for run in runs.into_iter().map(|r| r.expect("every prefix ran")) {
        stats.absorb(&run.stats);
        trace.extend(run.trace);
        if result.is_some() || run.skipped {
            continue;
        }
        if run.budget_hit {
            result = Some(SearchResult::BudgetExceeded);
        } else if cfg.enumerate_all {
            solutions.extend(run.solutions);
        } else if let Some(p) = run.solutions.into_iter().next() {
            result = Some(SearchResult::Found(p));
        }
    }
    let result = result.unwrap_or_else(|| match solutions.first() {
        Some(p) => SearchResult::Found(p.clone()),
        None => SearchResult::Exhausted,
    });
    trace.sort();
    trace.dedup();
    SearchOutcome {
        result,
        stats,
        solutions,
        trace: cfg.record_trace.then_some(trace),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration stopped after {limit} results")]
    LimitExceeded { limit: usize },
    #[error("{n} vertices is too many for exhaustive enumeration")]
    TooLarge { n: usize },
}

/// Every unordered tree-tree bipartition, by brute force over all `2^(n-1) - 1`
/// bipartitions with vertex 0 in `S`. Results ascend in [`Bipartition`] order.
pub fn enumerate_tree_partitions(
    g: &PlaneMultigraph,
    limit: Option<usize>,
) -> Result<Vec<Bipartition>, OracleError> {
    let n = g.n_vertices();
    if n > 40 {
        return Err(OracleError::TooLarge { n });
    }
    let mut found = Vec::new();
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let p = Bipartition::from_bits(n, rest << 1 | 1).expect("T is nonempty");
        if side_kind(g, &p, Side::S) == SubgraphKind::Tree
            && side_kind(g, &p, Side::T) == SubgraphKind::Tree
        {
            if limit.is_some_and(|l| found.len() >= l) {
                return Err(OracleError::LimitExceeded { limit: limit.unwrap_or(0) });
            }
            found.push(p);
        }
    }
    found.sort();
    Ok(found)
}

/// Every Hamilton cycle of `dual(g)`, undirected and unrooted, by plain
/// backtracking over dual vertices. Sorted and free of duplicates.
pub fn enumerate_dual_hamilton_cycles(g: &PlaneMultigraph) -> Vec<HamiltonCycleCertificate> {
    let d = dual_graph(g);
    let adj = d.adjacency();
    let n = d.n_vertices();
    let mut on_path = vec![false; n];
    let mut path: Vec<CycleStep> = Vec::with_capacity(n);
    let mut found = BTreeSet::new();

    fn walk(
        v: usize,
        adj: &[Vec<(usize, usize)>],
        on_path: &mut [bool],
        path: &mut Vec<CycleStep>,
        found: &mut BTreeSet<HamiltonCycleCertificate>,
    ) {
        let n = adj.len();
        if path.len() + 1 == n {
            for &(u, e) in &adj[v] {
                if u == 0 && path.first().is_none_or(|s| s.edge != e) {
                    let mut steps = path.clone();
                    steps.push(CycleStep { face: v, edge: e });
                    found.insert(HamiltonCycleCertificate::new(steps).expect("distinct faces"));
                }
            }
            return;
        }
        for &(u, e) in &adj[v] {
            if !on_path[u] {
                on_path[u] = true;
                path.push(CycleStep { face: v, edge: e });
                walk(u, adj, on_path, path, found);
                path.pop();
                on_path[u] = false;
            }
        }
    }

    on_path[0] = true;
    walk(0, &adj, &mut on_path, &mut path, &mut found);
    found.into_iter().collect()
}

/// A Hamilton cycle of `h`, found as a tree-tree bipartition of its dual.
pub fn hamilton_via_duality(h: &PlaneMultigraph) -> Option<EdgeSet> {
    let g = dual_graph(h);
    match find_tree_partition(&g, &SearchConfig::default()).result {
        SearchResult::Found(p) => {
            let cycle = cross_edges(&g, &p);
            debug_assert!(is_cycle_edge_set(h, &cycle) && cycle.len() == h.n_vertices());
            Some(cycle)
        }
        _ => None,
    }
}

/// True iff all four conditions hold for `p`, `cert` is exactly the
/// certificate built from `p`, and `cert` converts back to `p`.
pub fn verify_certificate(g: &PlaneMultigraph, p: &Bipartition, cert: &HamiltonCycleCertificate) -> bool {
    let checker = ConditionChecker::new(g);
    if checker.check_all(p) != Ok([true; 4]) {
        return false;
    }
    if partition_to_dual_cycle(g, p).as_ref() != Ok(cert) {
        return false;
    }
    dual_cycle_to_partition(g, cert).is_ok_and(|q| q == *p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn found(outcome: &SearchOutcome) -> Option<&Bipartition> {
        match &outcome.result {
            SearchResult::Found(p) => Some(p),
            _ => None,
        }
    }

    #[test]
    fn k4_first_partition() {
        let g = fixtures::k4();
        let out = find_tree_partition(&g, &SearchConfig::default());
        let p = found(&out).expect("K4 has tree-tree bipartitions");
        assert_eq!(p.vertices(Side::S), vec![0, 1]);
        let all = enumerate_tree_partitions(&g, None).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(p, &all[0]);
    }

    #[test]
    fn doubled_triangle_is_exhausted() {
        let g = fixtures::doubled_triangle();
        for pruning in [Pruning::Off, Pruning::CyclesOnly, Pruning::Full] {
            let cfg = SearchConfig { pruning, ..Default::default() };
            assert_eq!(find_tree_partition(&g, &cfg).result, SearchResult::Exhausted);
        }
        assert!(enumerate_tree_partitions(&g, None).unwrap().is_empty());
        assert!(enumerate_dual_hamilton_cycles(&g).is_empty());
    }

    #[test]
    fn c5_found() {
        let out = find_tree_partition(&fixtures::cycle(5), &SearchConfig::default());
        assert!(found(&out).is_some());
    }

    #[test]
    fn dual_cycle_counts() {
        assert_eq!(enumerate_dual_hamilton_cycles(&fixtures::c4()).len(), 6);
        assert_eq!(enumerate_dual_hamilton_cycles(&fixtures::k4()).len(), 3);
    }

    #[test]
    fn enumeration_limit_is_distinct() {
        let g = fixtures::cycle(5);
        assert_eq!(enumerate_tree_partitions(&g, Some(3)), Err(OracleError::LimitExceeded { limit: 3 }));
        assert_eq!(enumerate_tree_partitions(&g, Some(10)).unwrap().len(), 10);
    }

    #[test]
    fn budget_is_enforced() {
        let g = fixtures::doubled_triangle();
        let cfg = SearchConfig { budget: Some(2), pruning: Pruning::Off, ..Default::default() };
        let out = find_tree_partition(&g, &cfg);
        assert_eq!(out.result, SearchResult::BudgetExceeded);
        assert_eq!(out.stats.nodes, 2);
    }

    #[test]
    fn enumerate_all_matches_oracle() {
        for (name, g) in fixtures::all() {
            let cfg = SearchConfig { enumerate_all: true, ..Default::default() };
            let mut got = find_tree_partition(&g, &cfg).solutions;
            got.sort();
            assert_eq!(got, enumerate_tree_partitions(&g, None).unwrap(), "{name}");
        }
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        for (name, g) in fixtures::all() {
            for order in [VertexOrder::Input, VertexOrder::DegreeDescending] {
                let seq = find_tree_partition(&g, &SearchConfig { order, ..Default::default() });
                for workers in [2, 3, 8] {
                    let par = find_tree_partition(&g, &SearchConfig { order, workers, ..Default::default() });
                    assert_eq!(par.result, seq.result, "{name} workers={workers}");
                    let cfg = SearchConfig { order, workers, enumerate_all: true, ..Default::default() };
                    let all_par = find_tree_partition(&g, &cfg).solutions;
                    let all_seq =
                        find_tree_partition(&g, &SearchConfig { workers: 1, ..cfg.clone() }).solutions;
                    assert_eq!(all_par, all_seq, "{name} workers={workers}");
                }
            }
        }
    }

    #[test]
    fn hamilton_cycle_of_triangle_and_octahedron() {
        let c3 = fixtures::c3();
        assert_eq!(hamilton_via_duality(&c3).unwrap().to_vec(), vec![0, 1, 2]);
        let oct = fixtures::octahedron();
        let cycle = hamilton_via_duality(&oct).unwrap();
        assert_eq!(cycle.len(), 6);
        assert!(is_cycle_edge_set(&oct, &cycle));
    }

    #[test]
    fn k23_has_no_hamilton_cycle() {
        let k23 = dual_graph(&fixtures::doubled_triangle());
        assert_eq!((k23.n_vertices(), k23.n_edges()), (5, 6));
        assert_eq!(hamilton_via_duality(&k23), None);
    }

    #[test]
    fn certificate_verification() {
        let k4 = fixtures::k4();
        let all = enumerate_tree_partitions(&k4, None).unwrap();
        let certs: Vec<_> = all.iter().map(|p| partition_to_dual_cycle(&k4, p).unwrap()).collect();
        assert!(verify_certificate(&k4, &all[0], &certs[0]));
        assert!(!verify_certificate(&k4, &all[0], &certs[1]));
        let c4 = fixtures::c4();
        let p = Bipartition::new(4, [0]).unwrap();
        let cert = partition_to_dual_cycle(&c4, &p).unwrap();
        assert!(verify_certificate(&c4, &p, &cert));
        assert!(!verify_certificate(&c4, &Bipartition::new(4, [0, 2]).unwrap(), &cert));
    }
}
