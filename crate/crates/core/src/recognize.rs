//! Exhaustive table search deciding whether a graph is a monoid digraph, a
//! semigroup digraph or a monoid graph, plus the endomorphism-based check.
//!
//! The table lives on the input's vertex labels. Every cell holds a bitmask
//! domain. Cells `(x, c)` with `c` in the connection set are restricted by the
//! graph, assignments propagate through associativity, and every complete
//! table is verified against the graph before it is reported.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::algebra::{ConnectionSet, MulTable};
use crate::digraph::{
    automorphism_orbits_digraph, automorphism_orbits_simple, canonical_form, enumerate_graphs,
    is_strongly_connected, EnumMode, Enumerated,
};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, SimpleGraph};
use crate::par;
use crate::witness::{CayleyWitness, WitnessMode};

/// Largest order the table search accepts.
pub const SEARCH_CAP: usize = 12;
/// Largest order for endomorphism enumeration.
pub const ENDOMORPHISM_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    /// `1` searches sequentially and deterministically; anything else uses
    /// the current rayon pool.
    pub workers: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Some(Duration::from_secs(600)),
            workers: 1,
        }
    }
}

/// Pruning rules; switching one off must never turn a negative answer into a
/// positive one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prunes {
    /// Narrow domains through associativity (otherwise only detect conflicts).
    pub propagate: bool,
    /// Fail as soon as some arc or edge can no longer be produced.
    pub coverage: bool,
    /// Rows are injective when the digraph is strongly connected.
    pub left_cancel: bool,
    /// Try one candidate per automorphism orbit.
    pub orbits: bool,
}

impl Default for Prunes {
    fn default() -> Self {
        Prunes {
            propagate: true,
            coverage: true,
            left_cancel: true,
            orbits: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    pub budget: Budget,
    pub prunes: Prunes,
    /// Monoid graph mode only: also require `<C> = M`.
    pub generated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Witness(Box<CayleyWitness>),
    ExhaustedNo,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn label(&self) -> &'static str {
        match self {
            SearchStatus::Witness(_) => "witness",
            SearchStatus::ExhaustedNo => "exhausted-no",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub budget: Budget,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&CayleyWitness> {
        match &self.status {
            SearchStatus::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self.status, SearchStatus::Witness(_))
    }

    pub fn is_no(&self) -> bool {
        self.status == SearchStatus::ExhaustedNo
    }
}

struct Ctx {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    stop: AtomicBool,
    over_budget: AtomicBool,
}

impl Ctx {
    fn new(budget: &Budget) -> Self {
        Ctx {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|d| Instant::now() + d),
            stop: AtomicBool::new(false),
            over_budget: AtomicBool::new(false),
        }
    }

    /// Counts a node; false once the search must stop.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let timed_out = k.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() > d);
        if k > self.max_nodes || timed_out {
            self.over_budget.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

enum Cover {
    /// Out-neighbour mask of every vertex.
    Directed(Vec<u32>),
    /// Edges of the underlying graph.
    Undirected(Vec<(usize, usize)>),
}

type Accept<'a> = dyn Fn(MulTable) -> Option<CayleyWitness> + Sync + 'a;

struct Problem<'a> {
    n: usize,
    identity: Option<usize>,
    gens: Vec<usize>,
    init: Vec<u32>,
    gen_cell: Vec<bool>,
    cover: &'a Cover,
    left_cancel: bool,
    prunes: Prunes,
    accept: &'a Accept<'a>,
}

fn single(d: u32) -> Option<usize> {
    d.is_power_of_two().then(|| d.trailing_zeros() as usize)
}

impl Problem<'_> {
    fn equate(&self, dom: &mut [u32], x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        let (dx, dy) = (dom[x], dom[y]);
        if !self.prunes.propagate {
            return !(single(dx).is_some() && single(dy).is_some() && dx != dy);
        }
        let d = dx & dy;
        if d == 0 {
            return false;
        }
        for (cell, old) in [(x, dx), (y, dy)] {
            if d != old {
                dom[cell] = d;
                if d.is_power_of_two() {
                    queue.push(cell);
                }
            }
        }
        true
    }

    fn restrict(&self, dom: &mut [u32], cell: usize, mask: u32, queue: &mut Vec<usize>) -> bool {
        let d = dom[cell] & mask;
        if d == 0 {
            return false;
        }
        if d != dom[cell] {
            dom[cell] = d;
            if d.is_power_of_two() {
                queue.push(cell);
            }
        }
        true
    }

    /// Drains `queue` of newly fixed cells; false on contradiction.
    fn propagate(&self, dom: &mut [u32], queue: &mut Vec<usize>) -> bool {
        let n = self.n;
        while let Some(cell) = queue.pop() {
            let (a, b) = (cell / n, cell % n);
            let Some(u) = single(dom[cell]) else { continue };
            // (ab)c = a(bc) with ab known
            for c in 0..n {
                if let Some(w) = single(dom[b * n + c]) {
                    if !self.equate(dom, u * n + c, a * n + w, queue) {
                        return false;
                    }
                }
            }
            // (za)b = z(ab) with ab known
            for z in 0..n {
                if let Some(v) = single(dom[z * n + a]) {
                    if !self.equate(dom, v * n + b, z * n + u, queue) {
                        return false;
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    // cell as (xy)c with xy = a, c = b
                    if single(dom[x * n + y]) == Some(a) {
                        if let Some(w) = single(dom[y * n + b]) {
                            if !self.equate(dom, x * n + w, cell, queue) {
                                return false;
                            }
                        }
                    }
                    // cell as a(yc) with yc = b, c = x
                    if single(dom[y * n + x]) == Some(b) {
                        if let Some(v) = single(dom[a * n + y]) {
                            if !self.equate(dom, v * n + x, cell, queue) {
                                return false;
                            }
                        }
                    }
                }
            }
            if self.left_cancel {
                for q in (0..n).filter(|&q| q != b) {
                    if !self.restrict(dom, a * n + q, !(1 << u), queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn covered(&self, dom: &[u32]) -> bool {
        if !self.prunes.coverage {
            return true;
        }
        let n = self.n;
        match self.cover {
            Cover::Directed(out) => (0..n).all(|x| {
                let reach = self.gens.iter().fold(0u32, |acc, &c| acc | dom[x * n + c]);
                out[x] & !reach == 0
            }),
            Cover::Undirected(edges) => edges.iter().all(|&(x, y)| {
                self.gens
                    .iter()
                    .any(|&c| dom[x * n + c] >> y & 1 == 1 || dom[y * n + c] >> x & 1 == 1)
            }),
        }
    }

    fn root(&self) -> Option<Vec<u32>> {
        let mut dom = self.init.clone();
        let mut queue: Vec<usize> = (0..dom.len())
            .filter(|&i| single(dom[i]).is_some())
            .collect();
        (self.propagate(&mut dom, &mut queue) && self.covered(&dom)).then_some(dom)
    }

    fn pick(&self, dom: &[u32]) -> Option<usize> {
        let open = |i: &usize| !dom[*i].is_power_of_two();
        let best = |it: &mut dyn Iterator<Item = usize>| it.min_by_key(|&i| dom[i].count_ones());
        best(&mut (0..dom.len()).filter(|i| self.gen_cell[*i]).filter(open))
            .or_else(|| best(&mut (0..dom.len()).filter(open)))
    }

    fn leaf(&self, dom: &[u32]) -> Option<CayleyWitness> {
        let product = dom.iter().map(|&d| d.trailing_zeros() as usize).collect();
        let table = MulTable::new(self.n, product, self.identity).ok()?;
        (self.accept)(table)
    }

    fn branch(&self, dom: &[u32], cell: usize, value: usize) -> Option<Vec<u32>> {
        let mut next = dom.to_vec();
        next[cell] = 1 << value;
        let mut queue = vec![cell];
        (self.propagate(&mut next, &mut queue) && self.covered(&next)).then_some(next)
    }
}

enum Flow {
    Found(CayleyWitness),
    Done,
    Abort,
}

fn search(p: &Problem, dom: Vec<u32>, ctx: &Ctx) -> Flow {
    if !ctx.tick() {
        return Flow::Abort;
    }
    let Some(cell) = p.pick(&dom) else {
        return match p.leaf(&dom) {
            Some(w) => Flow::Found(w),
            None => Flow::Done,
        };
    };
    let mut bits = dom[cell];
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if let Some(next) = p.branch(&dom, cell, v) {
            match search(p, next, ctx) {
                Flow::Done => {}
                other => return other,
            }
        }
    }
    Flow::Done
}

/// Runs every problem; tasks are split by the first branching cell.
fn solve(problems: &[Problem], budget: Budget) -> SearchOutcome {
    let ctx = Ctx::new(&budget);
    let mut tasks: Vec<(usize, Vec<u32>)> = Vec::new();
    for (i, p) in problems.iter().enumerate() {
        let Some(dom) = p.root() else { continue };
        match p.pick(&dom) {
            None => tasks.push((i, dom)),
            Some(cell) => {
                let mut bits = dom[cell];
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if let Some(next) = p.branch(&dom, cell, v) {
                        tasks.push((i, next));
                    }
                }
            }
        }
    }
    let found: Mutex<Option<CayleyWitness>> = Mutex::new(None);
    let run = |(i, dom): &(usize, Vec<u32>)| {
        if ctx.stop.load(Ordering::Relaxed) {
            return;
        }
        if let Flow::Found(w) = search(&problems[*i], dom.clone(), &ctx) {
            let mut slot = found.lock().expect("no panics while holding the lock");
            if slot.is_none() {
                *slot = Some(w);
            }
            ctx.stop.store(true, Ordering::Relaxed);
        }
    };
    if budget.workers == 1 || !par::PARALLEL {
        tasks.iter().for_each(run);
    } else {
        par::map(&tasks, run);
    }
    let nodes_explored = ctx.nodes.load(Ordering::Relaxed);
    let status = match found.into_inner().expect("lock not poisoned") {
        Some(w) => SearchStatus::Witness(Box::new(w)),
        None if ctx.over_budget.load(Ordering::Relaxed) => SearchStatus::BudgetExceeded,
        None => SearchStatus::ExhaustedNo,
    };
    SearchOutcome {
        status,
        nodes_explored,
        budget,
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    if n > SEARCH_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: SEARCH_CAP,
        });
    }
    Ok(())
}

fn out_masks(g: &Digraph) -> Vec<u32> {
    (0..g.order())
        .map(|x| g.out_neighbors(x).iter().fold(0u32, |m, &y| m | 1 << y))
        .collect()
}

fn no_search(budget: Budget) -> SearchOutcome {
    SearchOutcome {
        status: SearchStatus::ExhaustedNo,
        nodes_explored: 0,
        budget,
    }
}

/// Candidates ordered by descending degree, one per orbit when enabled.
fn ordered_candidates(degrees: &[usize], orbits: Option<Vec<usize>>) -> Vec<usize> {
    let mut cand: Vec<usize> = (0..degrees.len())
        .filter(|&v| orbits.as_ref().is_none_or(|o| o[v] == v))
        .collect();
    cand.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    cand
}

fn identity_domains(n: usize, e: Option<usize>) -> Vec<u32> {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut init = vec![full; n * n];
    if let Some(e) = e {
        for x in 0..n {
            init[e * n + x] = 1 << x;
            init[x * n + e] = 1 << x;
        }
    }
    init
}

fn accept_for<'a>(
    mode: WitnessMode,
    graph: &'a Graph,
    gens: &'a [usize],
) -> impl Fn(MulTable) -> Option<CayleyWitness> + Sync + 'a {
    move |table: MulTable| {
        let w = CayleyWitness::identity_labelled(
            mode,
            table,
            ConnectionSet::new(gens.iter().copied()).ok()?,
        );
        w.verify(graph).all_ok().then_some(w)
    }
}

/// Is `g` exactly `Cay(M, C)` on its own labels, for some monoid? The identity
/// `e` runs over the vertices and `C` is forced to be the out-neighbourhood of `e`.
pub fn recognize_monoid_digraph(g: &Digraph, opts: &SearchOptions) -> Result<SearchOutcome> {
    let n = g.order();
    check_order(n)?;
    if (0..n).any(|v| g.outdegree(v) == 0) {
        return Ok(no_search(opts.budget));
    }
    let graph = Graph::Directed(g.clone());
    let cover = Cover::Directed(out_masks(g));
    let left_cancel = opts.prunes.left_cancel && is_strongly_connected(g);
    let degrees: Vec<usize> = (0..n).map(|v| g.outdegree(v)).collect();
    let orbits = opts
        .prunes
        .orbits
        .then(|| automorphism_orbits_digraph(g))
        .flatten();
    let candidates = ordered_candidates(&degrees, orbits);
    let gens: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&e| g.out_neighbors(e).to_vec())
        .collect();
    let accepts: Vec<_> = gens
        .iter()
        .map(|c| accept_for(WitnessMode::MonoidDigraph, &graph, c))
        .collect();
    let problems: Vec<Problem> = candidates
        .iter()
        .zip(&gens)
        .zip(&accepts)
        .map(|((&e, c), accept)| {
            let Cover::Directed(out) = &cover else {
                unreachable!()
            };
            build_problem(
                n,
                Some(e),
                c.clone(),
                |x| out[x],
                &cover,
                left_cancel,
                opts,
                accept,
            )
        })
        .collect();
    Ok(solve(&problems, opts.budget))
}

#[allow(clippy::too_many_arguments)]
fn build_problem<'a>(
    n: usize,
    identity: Option<usize>,
    gens: Vec<usize>,
    gen_mask: impl Fn(usize) -> u32,
    cover: &'a Cover,
    left_cancel: bool,
    opts: &SearchOptions,
    accept: &'a Accept<'a>,
) -> Problem<'a> {
    let mut init = identity_domains(n, identity);
    let mut gen_cell = vec![false; n * n];
    for x in 0..n {
        for &c in &gens {
            init[x * n + c] &= gen_mask(x);
            gen_cell[x * n + c] = true;
        }
    }
    Problem {
        n,
        identity,
        gens,
        init,
        gen_cell,
        cover,
        left_cancel,
        prunes: opts.prunes,
        accept,
    }
}

/// Is `g` exactly `Cay(S, C)` on its own labels, for some semigroup? `C` runs
/// over singletons when `g` is 1-outregular and over all large enough subsets
/// otherwise.
pub fn recognize_semigroup_digraph(g: &Digraph, opts: &SearchOptions) -> Result<SearchOutcome> {
    let n = g.order();
    check_order(n)?;
    if (0..n).any(|v| g.outdegree(v) == 0) {
        return Ok(no_search(opts.budget));
    }
    let graph = Graph::Directed(g.clone());
    let out = out_masks(g);
    let cover = Cover::Directed(out.clone());
    let left_cancel = opts.prunes.left_cancel && is_strongly_connected(g);
    let k = g.max_outdegree();
    let sets: Vec<Vec<usize>> = if g.min_outdegree() == 1 && k == 1 {
        let orbits = opts
            .prunes
            .orbits
            .then(|| automorphism_orbits_digraph(g))
            .flatten();
        (0..n)
            .filter(|&a| orbits.as_ref().is_none_or(|o| o[a] == a))
            .map(|a| vec![a])
            .collect()
    } else {
        let mut sets: Vec<Vec<usize>> = (1u32..(1 << n))
            .filter(|s| s.count_ones() as usize >= k)
            .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
            .collect();
        sets.sort_by_key(|s| s.len());
        sets
    };
    let accepts: Vec<_> = sets
        .iter()
        .map(|c| accept_for(WitnessMode::SemigroupDigraph, &graph, c))
        .collect();
    let problems: Vec<Problem> = sets
        .iter()
        .zip(&accepts)
        .map(|(c, accept)| {
            build_problem(
                n,
                None,
                c.clone(),
                |x| out[x],
                &cover,
                left_cancel,
                opts,
                accept,
            )
        })
        .collect();
    Ok(solve(&problems, opts.budget))
}

/// Is `g` the underlying graph of `Cay(M, C)` on its own labels? The identity
/// `e` runs over the vertices and `C = N(e)`; an isolated `e` uses `C = {e}`.
pub fn recognize_monoid_graph(g: &SimpleGraph, opts: &SearchOptions) -> Result<SearchOutcome> {
    let n = g.order();
    check_order(n)?;
    let mode = if opts.generated {
        WitnessMode::GeneratedMonoidTree
    } else {
        WitnessMode::MonoidGraph
    };
    let graph = Graph::Undirected(g.clone());
    let cover = Cover::Undirected(g.edges().collect());
    let closed: Vec<u32> = (0..n)
        .map(|x| g.neighbors(x).iter().fold(1u32 << x, |m, &y| m | 1 << y))
        .collect();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let orbits = opts
        .prunes
        .orbits
        .then(|| automorphism_orbits_simple(g))
        .flatten();
    let candidates = ordered_candidates(&degrees, orbits);
    let gens: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&e| {
            if g.degree(e) == 0 {
                vec![e]
            } else {
                g.neighbors(e).to_vec()
            }
        })
        .collect();
    let accepts: Vec<_> = gens.iter().map(|c| accept_for(mode, &graph, c)).collect();
    let problems: Vec<Problem> = candidates
        .iter()
        .zip(&gens)
        .zip(&accepts)
        .map(|((&e, c), accept)| {
            build_problem(
                n,
                Some(e),
                c.clone(),
                |x| closed[x],
                &cover,
                false,
                opts,
                accept,
            )
        })
        .collect();
    Ok(solve(&problems, opts.budget))
}

/// All maps sending arcs to arcs.
pub fn endomorphisms(g: &Digraph) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > ENDOMORPHISM_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: ENDOMORPHISM_CAP,
        });
    }
    let mut out = Vec::new();
    let mut phi = vec![0usize; n];
    fn rec(g: &Digraph, v: usize, phi: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = g.order();
        if v == n {
            out.push(phi.clone());
            return;
        }
        for image in 0..n {
            phi[v] = image;
            let ok = (0..=v).all(|u| {
                (!g.has_arc(u, v) || g.has_arc(phi[u], phi[v]))
                    && (!g.has_arc(v, u) || g.has_arc(phi[v], phi[u]))
            });
            if ok {
                rec(g, v + 1, phi, out);
            }
        }
    }
    if n > 0 {
        rec(g, 0, &mut phi, &mut out);
    }
    Ok(out)
}

/// Looks for a vertex `e` and endomorphisms `phi_x` with `phi_x(e) = x`,
/// `phi_e = id`, closed under composition, and `phi_x` mapping the
/// out-neighbours of `e` onto those of `x`. Success yields `x * y = phi_x(y)`.
pub fn sabidussi_check(g: &Digraph, opts: &SearchOptions) -> Result<SearchOutcome> {
    let n = g.order();
    let ends = endomorphisms(g)?;
    let ctx = Ctx::new(&opts.budget);
    let graph = Graph::Directed(g.clone());
    let mut witness = None;
    // connection sets are non-empty, so a sink cannot be the identity
    'candidates: for e in (0..n).filter(|&e| g.outdegree(e) > 0) {
        let target = |x: usize| g.out_neighbors(x).to_vec();
        let choices: Vec<Vec<&Vec<usize>>> = (0..n)
            .map(|x| {
                ends.iter()
                    .filter(|phi| {
                        if x == e {
                            return phi.iter().enumerate().all(|(i, &y)| i == y);
                        }
                        let mut img: Vec<usize> =
                            g.out_neighbors(e).iter().map(|&c| phi[c]).collect();
                        img.sort_unstable();
                        img.dedup();
                        phi[e] == x && img == target(x)
                    })
                    .collect()
            })
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut chosen: Vec<Option<&Vec<usize>>> = vec![None; n];
        chosen[e] = Some(choices[e][0]);
        let order: Vec<usize> = (0..n).filter(|&x| x != e).collect();
        match sabidussi_rec(&order, 0, &choices, &mut chosen, &ctx) {
            Some(true) => {
                let rows: Vec<&Vec<usize>> = chosen.iter().map(|c| c.expect("complete")).collect();
                let table = MulTable::from_fn(n, Some(e), |x, y| rows[x][y])?;
                let w = CayleyWitness::identity_labelled(
                    WitnessMode::MonoidDigraph,
                    table,
                    ConnectionSet::new(g.out_neighbors(e).iter().copied())?,
                );
                if w.verify(&graph).all_ok() {
                    witness = Some(w);
                    break 'candidates;
                }
                return Err(Error::Verification(
                    "endomorphism selection did not reproduce the digraph".into(),
                ));
            }
            Some(false) => {}
            None => break,
        }
    }
    let nodes_explored = ctx.nodes.load(Ordering::Relaxed);
    let status = match witness {
        Some(w) => SearchStatus::Witness(Box::new(w)),
        None if ctx.over_budget.load(Ordering::Relaxed) => SearchStatus::BudgetExceeded,
        None => SearchStatus::ExhaustedNo,
    };
    Ok(SearchOutcome {
        status,
        nodes_explored,
        budget: opts.budget,
    })
}

/// `Some(true)` on success, `Some(false)` when exhausted, `None` on budget.
fn sabidussi_rec<'a>(
    order: &[usize],
    depth: usize,
    choices: &[Vec<&'a Vec<usize>>],
    chosen: &mut Vec<Option<&'a Vec<usize>>>,
    ctx: &Ctx,
) -> Option<bool> {
    if !ctx.tick() {
        return None;
    }
    if depth == order.len() {
        return Some(true);
    }
    let x = order[depth];
    for &phi in &choices[x] {
        chosen[x] = Some(phi);
        if composition_consistent(chosen) {
            match sabidussi_rec(order, depth + 1, choices, chosen, ctx) {
                Some(false) => {}
                other => return other,
            }
        }
    }
    chosen[x] = None;
    Some(false)
}

/// `phi_x ∘ phi_y = phi_{phi_x(y)}` wherever all three are chosen.
fn composition_consistent(chosen: &[Option<&Vec<usize>>]) -> bool {
    chosen.iter().flatten().all(|px| {
        chosen.iter().enumerate().all(|(y, py)| {
            let (Some(py), Some(pz)) = (py, chosen[px[y]]) else {
                return true;
            };
            (0..px.len()).all(|v| px[py[v]] == pz[v])
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusMode {
    MonoidDigraph,
    SemigroupDigraph,
    MonoidGraph,
    Sabidussi,
}

impl CensusMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CensusMode::MonoidDigraph => "monoid-digraph",
            CensusMode::SemigroupDigraph => "semigroup-digraph",
            CensusMode::MonoidGraph => "monoid-graph",
            CensusMode::Sabidussi => "sabidussi",
        }
    }

    /// Outregular digraphs for the directed modes, all simple graphs otherwise.
    pub fn default_domain(self) -> EnumMode {
        match self {
            CensusMode::MonoidGraph => EnumMode::Simple,
            _ => EnumMode::Outregular,
        }
    }
}

impl std::str::FromStr for CensusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "monoid-digraph" => CensusMode::MonoidDigraph,
            "semigroup-digraph" => CensusMode::SemigroupDigraph,
            "monoid-graph" => CensusMode::MonoidGraph,
            "sabidussi" => CensusMode::Sabidussi,
            other => {
                return Err(Error::InvalidParameters(format!(
                    "unknown census mode `{other}`"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub canonical: String,
    pub graph: Graph,
    pub outcome: SearchOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub mode: CensusMode,
    pub domain: EnumMode,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn count(&self, label: &str) -> usize {
        self.rows
            .iter()
            .filter(|r| r.outcome.status.label() == label)
            .count()
    }

    pub fn negatives(&self) -> usize {
        self.count("exhausted-no")
    }

    /// Tab-separated: one line per class, then summary lines.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("canonical_form\tstatus\tnodes\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{}\t{}\t{}\n",
                r.canonical,
                r.outcome.status.label(),
                r.outcome.nodes_explored
            ));
        }
        s.push_str(&format!(
            "# mode\t{}\n# n\t{}\n# classes\t{}\n",
            self.mode.as_str(),
            self.n,
            self.rows.len()
        ));
        for label in ["witness", "exhausted-no", "budget-exceeded"] {
            s.push_str(&format!("# {label}\t{}\n", self.count(label)));
        }
        s
    }
}

/// Runs one decision per graph.
pub fn decide(graph: &Graph, mode: CensusMode, opts: &SearchOptions) -> Result<SearchOutcome> {
    match (mode, graph) {
        (CensusMode::MonoidDigraph, Graph::Directed(g)) => recognize_monoid_digraph(g, opts),
        (CensusMode::SemigroupDigraph, Graph::Directed(g)) => recognize_semigroup_digraph(g, opts),
        (CensusMode::Sabidussi, Graph::Directed(g)) => sabidussi_check(g, opts),
        (CensusMode::MonoidGraph, Graph::Undirected(g)) => recognize_monoid_graph(g, opts),
        _ => Err(Error::InvalidParameters(format!(
            "mode {} does not apply to this kind of graph",
            mode.as_str()
        ))),
    }
}

/// Every isomorphism class of order `n` in `domain`, decided in `mode`.
/// Classes are searched in parallel unless `workers == 1`; each search itself
/// is sequential.
pub fn classify_all(
    n: usize,
    mode: CensusMode,
    domain: EnumMode,
    opts: &SearchOptions,
) -> Result<CensusReport> {
    let graphs: Vec<Graph> = match enumerate_graphs(n, domain)? {
        Enumerated::Simple(gs) => gs.into_iter().map(Graph::Undirected).collect(),
        Enumerated::Directed(gs) => gs.into_iter().map(Graph::Directed).collect(),
    };
    let inner = SearchOptions {
        budget: Budget {
            workers: 1,
            ..opts.budget
        },
        ..*opts
    };
    let run = |g: &Graph| -> Result<CensusRow> {
        let outcome = decide(g, mode, &inner)?;
        let canonical = String::from_utf8(canonical_form(g)?).expect("ascii");
        Ok(CensusRow {
            canonical,
            graph: g.clone(),
            outcome,
        })
    };
    let rows: Vec<Result<CensusRow>> = if opts.budget.workers == 1 {
        graphs.iter().map(run).collect()
    } else {
        par::map(&graphs, run)
    };
    Ok(CensusReport {
        n,
        mode,
        domain,
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::fig2_digraph;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn endomorphism_counts() {
        let lp = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        assert_eq!(endomorphisms(&lp).unwrap().len(), 1);
        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        assert_eq!(endomorphisms(&c3).unwrap().len(), 3);
        // brute force over all 27 maps
        let f = fig2_digraph();
        let brute = (0..27)
            .map(|m| vec![m % 3, m / 3 % 3, m / 9])
            .filter(|phi: &Vec<usize>| f.arcs().all(|(u, v)| f.has_arc(phi[u], phi[v])))
            .count();
        assert_eq!(endomorphisms(&f).unwrap().len(), brute);
    }

    #[test]
    fn sabidussi_examples() {
        let k2 = Digraph::from_arcs(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(sabidussi_check(&k2, &opts()).unwrap().is_witness());
        assert!(sabidussi_check(&fig2_digraph(), &opts()).unwrap().is_no());
        let lp = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        assert!(sabidussi_check(&lp, &opts()).unwrap().is_witness());
    }

    #[test]
    fn monoid_digraph_examples() {
        let loops = Digraph::from_arcs(2, [(0, 0), (1, 1)]).unwrap();
        let out = recognize_monoid_digraph(&loops, &opts()).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.connection.len(), 1);
        assert!(recognize_monoid_digraph(&fig2_digraph(), &opts())
            .unwrap()
            .is_no());
        let sink = Digraph::from_arcs(2, [(0, 1), (1, 1)]).unwrap();
        assert!(recognize_monoid_digraph(&sink, &opts())
            .unwrap()
            .is_witness());
    }

    #[test]
    fn semigroup_digraph_examples() {
        assert!(recognize_semigroup_digraph(&fig2_digraph(), &opts())
            .unwrap()
            .is_no());
        let c3 = Digraph::from_successors(&[1, 2, 0]).unwrap();
        let out = recognize_semigroup_digraph(&c3, &opts()).unwrap();
        assert!(out.is_witness());
    }

    #[test]
    fn monoid_graph_examples() {
        assert!(recognize_monoid_graph(&SimpleGraph::path(2), &opts())
            .unwrap()
            .is_witness());
        assert!(recognize_monoid_graph(&SimpleGraph::new(3), &opts())
            .unwrap()
            .is_witness());
        assert!(recognize_monoid_graph(&SimpleGraph::cycle(5), &opts())
            .unwrap()
            .is_witness());
    }

    #[test]
    fn outregular_three_vertex_census() {
        let r = classify_all(
            3,
            CensusMode::SemigroupDigraph,
            EnumMode::Outregular,
            &opts(),
        )
        .unwrap();
        assert_eq!(r.negatives(), 3);
        for mode in [CensusMode::MonoidDigraph, CensusMode::SemigroupDigraph] {
            let r = classify_all(2, mode, EnumMode::Outregular, &opts()).unwrap();
            assert_eq!(r.negatives(), 0);
        }
    }
}
