//! The forcing decision procedure: does every colouring of a host (proper,
//! multiplicity-bounded, or palette-limited proper) contain a rainbow copy
//! of the pattern? The search assigns colours edge by edge in the fixed
//! canonical order, one representative per colour-permutation class, and
//! prunes on mode violations and on completed rainbow copies.
//!
//! Verdicts are exact: `Forces` means the canonical tree was exhausted,
//! `WitnessFound` carries a revalidated counterexample colouring, and a
//! blown budget is an explicit `Inconclusive`, never silently either.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{canonical_edge_order, is_m_bounded, is_proper, EdgeColouring};
use crate::constructions::{gadget, named_graph, ConstructError};
use crate::copies::enumerate_copies;
use crate::graph::{Graph, GraphError};
use crate::patterns::{Pattern, PatternError};
use crate::rainbow::rainbow_copy_unchecked;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("host has {host} edges, pattern needs {pattern}")]
    PatternLargerThanHost { host: usize, pattern: usize },
    #[error("pattern needs at least one edge")]
    EmptyPattern,
    #[error("palette of {0} colours exceeds the supported 128")]
    PaletteTooWide(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("unknown membership check `{0}`")]
    UnknownMembershipCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Mode {
    Proper,
    MBounded(u32),
    PaletteLimited(u32),
}

impl Mode {
    fn multiplicity(self) -> u32 {
        match self {
            Mode::MBounded(m) => m,
            _ => 1,
        }
    }

    fn palette_cap(self, edge_count: usize) -> u32 {
        match self {
            Mode::PaletteLimited(q) => q,
            _ => edge_count as u32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Forces,
    WitnessFound,
    Inconclusive,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    /// kept out of the JSON so serialized certificates reproduce
    /// byte-identically across runs
    #[serde(skip)]
    pub wall_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ForcesCertificate {
    pub verdict: Verdict,
    /// colours by host edge id; present exactly for `WitnessFound`
    pub witness: Option<Vec<u32>>,
    pub stats: SearchStats,
    pub mode: Mode,
}

impl ForcesCertificate {
    pub fn witness_colouring(&self) -> Option<EdgeColouring> {
        self.witness
            .as_ref()
            .map(|w| EdgeColouring::from_total(w.clone()))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget_nodes: Option<u64>,
    pub budget_time: Option<Duration>,
    pub workers: usize,
    /// drop host edges that lie in no copy of the pattern before searching
    pub restrict_to_copies: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget_nodes: None,
            budget_time: None,
            workers: 1,
            restrict_to_copies: true,
        }
    }
}

pub fn forces(g: &Graph, h: &Pattern, mode: Mode) -> Result<ForcesCertificate, CertifyError> {
    forces_with(g, h, mode, &SearchOptions::default())
}

pub fn forces_with(
    g: &Graph,
    h: &Pattern,
    mode: Mode,
    options: &SearchOptions,
) -> Result<ForcesCertificate, CertifyError> {
    if h.graph().edge_count() == 0 {
        return Err(CertifyError::EmptyPattern);
    }
    if g.edge_count() < h.graph().edge_count() {
        return Err(CertifyError::PatternLargerThanHost {
            host: g.edge_count(),
            pattern: h.graph().edge_count(),
        });
    }
    let start = Instant::now();

    // Restriction pre-pass: edges outside every copy cannot influence the
    // verdict, and a witness extends over them with fresh colours. The
    // pre-pass changes the palette cap, so it is disabled for the
    // palette-limited mode where extension is not free.
    let restrict = options.restrict_to_copies && !matches!(mode, Mode::PaletteLimited(_));
    let (search_graph, edge_back_map): (Graph, Vec<usize>) = if restrict {
        let copies = enumerate_copies(g, h);
        let mut covered = vec![false; g.edge_count()];
        for copy in &copies {
            for &e in &copy.edge_ids {
                covered[e] = true;
            }
        }
        let kept: Vec<usize> = (0..g.edge_count()).filter(|&e| covered[e]).collect();
        let edges: Vec<(usize, usize)> = kept.iter().map(|&e| g.edge(e)).collect();
        (Graph::new(g.vertex_count(), &edges)?, kept)
    } else {
        (g.clone(), (0..g.edge_count()).collect())
    };

    let cap = mode.palette_cap(search_graph.edge_count());
    if cap > 128 {
        return Err(CertifyError::PaletteTooWide(cap));
    }

    let search = SearchContext::new(&search_graph, h, mode, cap);
    let outcome = if options.workers <= 1 {
        let budget = BudgetState::new(options, start);
        let mut state = WorkerState::new(&search, options);
        let out = state.dfs(0, &budget);
        state.flush_node_count();
        out
    } else {
        run_parallel(&search, options, start)
    };

    let (verdict, witness) = match outcome {
        Outcome::Exhausted => (Verdict::Forces, None),
        Outcome::Budget => (Verdict::Inconclusive, None),
        Outcome::Witness(colours_by_pos) => {
            let full = extend_witness(g, &search, &edge_back_map, &colours_by_pos);
            (Verdict::WitnessFound, Some(full))
        }
    };

    if let Some(w) = &witness {
        revalidate_witness(g, h, mode, w);
    }

    Ok(ForcesCertificate {
        verdict,
        witness,
        stats: SearchStats {
            nodes: search.nodes.load(Ordering::Relaxed),
            max_depth: search.max_depth.load(Ordering::Relaxed),
            wall_ms: start.elapsed().as_millis(),
        },
        mode,
    })
}

/// Witness colours found on the restricted graph, mapped back to the full
/// host; uncovered edges get fresh pairwise-distinct colours, which keeps
/// every mode valid and creates no rainbow copy (copies use covered edges
/// only).
fn extend_witness(
    g: &Graph,
    search: &SearchContext,
    edge_back_map: &[usize],
    colours_by_pos: &[u32],
) -> Vec<u32> {
    let mut full = vec![0u32; g.edge_count()];
    let mut max_used = 0;
    for (pos, &col) in colours_by_pos.iter().enumerate() {
        let reduced_edge = search.order[pos];
        full[edge_back_map[reduced_edge]] = col;
        max_used = max_used.max(col);
    }
    let mut fresh = max_used;
    for slot in full.iter_mut() {
        if *slot == 0 {
            fresh += 1;
            *slot = fresh;
        }
    }
    full
}

fn revalidate_witness(g: &Graph, h: &Pattern, mode: Mode, witness: &[u32]) {
    let c = EdgeColouring::from_total(witness.to_vec());
    let mode_ok = match mode {
        Mode::Proper => is_proper(g, &c),
        Mode::MBounded(m) => is_m_bounded(g, &c, m),
        Mode::PaletteLimited(q) => is_proper(g, &c) && c.colour_count() <= q as usize,
    };
    assert!(mode_ok, "witness violates its colouring mode");
    assert!(
        rainbow_copy_unchecked(g, &c, h).is_none(),
        "witness contains a rainbow copy; the search is unsound"
    );
}

enum Outcome {
    Exhausted,
    Witness(Vec<u32>),
    Budget,
}

/// Immutable data shared by every worker.
struct SearchContext {
    edges: Vec<(usize, usize)>, // by position
    order: Vec<usize>,          // position -> edge id in the search graph
    vertex_count: usize,
    cap: u32,
    multiplicity: u32,
    // copies, as position lists, indexed by the position of their last edge
    copies_by_last_pos: Vec<Vec<Vec<u32>>>,
    nodes: AtomicU64,
    max_depth: AtomicUsize,
}

impl SearchContext {
    fn new(g: &Graph, h: &Pattern, mode: Mode, cap: u32) -> SearchContext {
        let order = canonical_edge_order(g);
        let mut pos_of = vec![usize::MAX; g.edge_count()];
        for (pos, &e) in order.iter().enumerate() {
            pos_of[e] = pos;
        }
        let copies = enumerate_copies(g, h);
        let mut copies_by_last_pos: Vec<Vec<Vec<u32>>> = vec![Vec::new(); g.edge_count()];
        for copy in &copies {
            let positions: Vec<u32> = copy.edge_ids.iter().map(|&e| pos_of[e] as u32).collect();
            let last = *positions.iter().max().unwrap() as usize;
            copies_by_last_pos[last].push(positions);
        }
        SearchContext {
            edges: order.iter().map(|&e| g.edge(e)).collect(),
            order,
            vertex_count: g.vertex_count(),
            cap,
            multiplicity: mode.multiplicity(),
            copies_by_last_pos,
            nodes: AtomicU64::new(0),
            max_depth: AtomicUsize::new(0),
        }
    }
}

/// Global budget bookkeeping; node counts live in the shared context so
/// parallel workers drain one budget.
struct BudgetState<'a> {
    options: &'a SearchOptions,
    start: Instant,
}

impl<'a> BudgetState<'a> {
    fn new(options: &'a SearchOptions, start: Instant) -> BudgetState<'a> {
        BudgetState { options, start }
    }

    fn exhausted(&self, ctx: &SearchContext) -> bool {
        if let Some(max) = self.options.budget_nodes {
            if ctx.nodes.load(Ordering::Relaxed) > max {
                return true;
            }
        }
        if let Some(max) = self.options.budget_time {
            if self.start.elapsed() > max {
                return true;
            }
        }
        false
    }
}

struct WorkerState<'a> {
    ctx: &'a SearchContext,
    colours: Vec<u32>,       // by position; 0 = unset
    counts: Vec<u8>,         // vertex * (cap+1) colour multiplicities
    max_stack: Vec<u32>,     // running max colour per depth
    local_nodes: u64,
    flush_interval: u64,
    cancelled: Option<(&'a AtomicUsize, usize)>, // (winner cell, own task index)
}

impl<'a> WorkerState<'a> {
    fn new(ctx: &'a SearchContext, options: &SearchOptions) -> WorkerState<'a> {
        // small node budgets need frequent checks to stop on time
        let flush_interval = options
            .budget_nodes
            .map(|b| (b / 8).clamp(1, 4096))
            .unwrap_or(4096);
        WorkerState {
            ctx,
            colours: vec![0; ctx.order.len()],
            counts: vec![0; ctx.vertex_count * (ctx.cap as usize + 1)],
            max_stack: Vec::with_capacity(ctx.order.len()),
            local_nodes: 0,
            flush_interval,
            cancelled: None,
        }
    }

    #[inline]
    fn count_slot(&self, v: usize, col: u32) -> usize {
        v * (self.ctx.cap as usize + 1) + col as usize
    }

    fn max_used(&self) -> u32 {
        self.max_stack.last().copied().unwrap_or(0)
    }

    fn apply(&mut self, pos: usize, col: u32) {
        let (u, v) = self.ctx.edges[pos];
        let (su, sv) = (self.count_slot(u, col), self.count_slot(v, col));
        self.counts[su] += 1;
        self.counts[sv] += 1;
        self.max_stack.push(self.max_used().max(col));
        self.colours[pos] = col;
    }

    fn undo(&mut self, pos: usize, col: u32) {
        let (u, v) = self.ctx.edges[pos];
        let (su, sv) = (self.count_slot(u, col), self.count_slot(v, col));
        self.counts[su] -= 1;
        self.counts[sv] -= 1;
        self.max_stack.pop();
        self.colours[pos] = 0;
    }

    fn colour_allowed(&self, pos: usize, col: u32) -> bool {
        let (u, v) = self.ctx.edges[pos];
        self.counts[self.count_slot(u, col)] < self.ctx.multiplicity as u8
            && self.counts[self.count_slot(v, col)] < self.ctx.multiplicity as u8
    }

    /// Some copy whose last edge sits at `pos` is fully coloured rainbow.
    fn completes_rainbow(&self, pos: usize) -> bool {
        'copies: for positions in &self.ctx.copies_by_last_pos[pos] {
            let mut seen: u128 = 0;
            for &p in positions {
                let col = self.colours[p as usize];
                let bit = 1u128 << (col & 127);
                if seen & bit != 0 {
                    continue 'copies;
                }
                seen |= bit;
            }
            return true;
        }
        false
    }

    fn dfs(&mut self, pos: usize, budget: &BudgetState) -> Outcome {
        if pos == self.ctx.order.len() {
            return Outcome::Witness(self.colours.clone());
        }
        if let Some((winner, own)) = self.cancelled {
            if winner.load(Ordering::Relaxed) < own {
                // a lower-indexed task already holds the canonical witness
                return Outcome::Exhausted;
            }
        }
        let limit = self.ctx.cap.min(self.max_used() + 1);
        for col in 1..=limit {
            if !self.colour_allowed(pos, col) {
                continue;
            }
            self.local_nodes += 1;
            if self.local_nodes.is_multiple_of(self.flush_interval) {
                self.ctx.nodes.fetch_add(self.flush_interval, Ordering::Relaxed);
                self.ctx.max_depth.fetch_max(pos, Ordering::Relaxed);
                if budget.exhausted(self.ctx) {
                    return Outcome::Budget;
                }
            }
            self.apply(pos, col);
            if !self.completes_rainbow(pos) {
                match self.dfs(pos + 1, budget) {
                    Outcome::Exhausted => {}
                    other => {
                        self.undo(pos, col);
                        return other;
                    }
                }
            }
            self.undo(pos, col);
        }
        Outcome::Exhausted
    }

    /// Push the node counts that have not reached a flush boundary.
    fn flush_node_count(&mut self) {
        self.ctx
            .nodes
            .fetch_add(self.local_nodes % self.flush_interval, Ordering::Relaxed);
    }

    /// Run the prefix, then search below it.
    fn dfs_from_prefix(&mut self, prefix: &[u32], budget: &BudgetState) -> Outcome {
        for (pos, &col) in prefix.iter().enumerate() {
            self.apply(pos, col);
            debug_assert!(!self.completes_rainbow(pos));
        }
        let out = self.dfs(prefix.len(), budget);
        for (pos, &col) in prefix.iter().enumerate().rev() {
            self.undo(pos, col);
        }
        out
    }
}

/// Breadth-first expansion of the canonical tree until at least `want`
/// open prefixes exist (or the tree is shallow enough to finish directly).
fn frontier_prefixes(ctx: &SearchContext, want: usize) -> Vec<Vec<u32>> {
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    let mut state = WorkerState::new(ctx, &SearchOptions::default());
    while frontier.len() < want {
        let depth = frontier[0].len();
        if depth >= ctx.order.len() || depth >= 8 {
            break;
        }
        let mut next = Vec::new();
        for prefix in &frontier {
            for (pos, &col) in prefix.iter().enumerate() {
                state.apply(pos, col);
            }
            let limit = ctx.cap.min(state.max_used() + 1);
            for col in 1..=limit {
                if state.colour_allowed(depth, col) {
                    state.apply(depth, col);
                    if !state.completes_rainbow(depth) {
                        let mut extended = prefix.clone();
                        extended.push(col);
                        next.push(extended);
                    }
                    state.undo(depth, col);
                }
            }
            for (pos, &col) in prefix.iter().enumerate().rev() {
                state.undo(pos, col);
            }
        }
        if next.is_empty() {
            return Vec::new(); // whole tree pruned at this depth
        }
        frontier = next;
    }
    frontier
}

fn run_parallel(ctx: &SearchContext, options: &SearchOptions, start: Instant) -> Outcome {
    let prefixes = frontier_prefixes(ctx, options.workers * 4);
    if prefixes.is_empty() {
        return Outcome::Exhausted;
    }
    let winner = AtomicUsize::new(usize::MAX);
    let next_task = AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<Outcome>>> =
        (0..prefixes.len()).map(|_| std::sync::Mutex::new(None)).collect();

    std::thread::scope(|scope| {
        for _ in 0..options.workers {
            scope.spawn(|| {
                let budget = BudgetState::new(options, start);
                loop {
                    let task = next_task.fetch_add(1, Ordering::Relaxed);
                    if task >= prefixes.len() {
                        break;
                    }
                    if winner.load(Ordering::Relaxed) < task {
                        continue; // canonical witness already found earlier
                    }
                    let mut state = WorkerState::new(ctx, options);
                    state.cancelled = Some((&winner, task));
                    let outcome = state.dfs_from_prefix(&prefixes[task], &budget);
                    state.flush_node_count();
                    if matches!(outcome, Outcome::Witness(_)) {
                        winner.fetch_min(task, Ordering::Relaxed);
                    }
                    *results[task].lock().unwrap() = Some(outcome);
                }
            });
        }
    });

    // merge in task order: the first witness in canonical order wins, but
    // only if everything before it genuinely exhausted
    for cell in &results {
        let outcome = cell.lock().unwrap().take();
        match outcome {
            Some(Outcome::Exhausted) => continue,
            Some(Outcome::Witness(w)) => return Outcome::Witness(w),
            Some(Outcome::Budget) | None => return Outcome::Budget,
        }
    }
    Outcome::Exhausted
}

/// Result of scanning gadget multiplicities for the least forcing one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum MultiplicityScan {
    Found {
        multiplicity: usize,
        certificate: ForcesCertificate,
    },
    NotFoundUpTo(usize),
    Inconclusive {
        multiplicity: usize,
        certificate: ForcesCertificate,
    },
}

/// Least multiplicity d <= d_max for which every proper colouring of the
/// cycle-length-k gadget forces a rainbow k-cycle.
pub fn smallest_forcing_multiplicity(
    k: usize,
    d_max: usize,
    options: &SearchOptions,
) -> Result<MultiplicityScan, CertifyError> {
    let cycle = Pattern::new(named_graph(&format!("c_{k}"))?)?;
    for d in 1..=d_max {
        let host = gadget(k, d)?;
        let cert = forces_with(&host.graph, &cycle, Mode::Proper, options)?;
        match cert.verdict {
            Verdict::Forces => {
                return Ok(MultiplicityScan::Found {
                    multiplicity: d,
                    certificate: cert,
                })
            }
            Verdict::WitnessFound => continue,
            Verdict::Inconclusive => {
                return Ok(MultiplicityScan::Inconclusive {
                    multiplicity: d,
                    certificate: cert,
                })
            }
        }
    }
    Ok(MultiplicityScan::NotFoundUpTo(d_max))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UpperBoundCertificate {
    /// max degree of the host: an upper bound when certified
    pub degree_bound: usize,
    /// edge count of the host: the matching size-version bound
    pub size_bound: usize,
    pub certified: bool,
    pub certificate: ForcesCertificate,
}

/// Package a forcing run as upper-bound evidence: a forcing host of max
/// degree D and E edges certifies degree bound D and size bound E.
pub fn ar_d_upper_certificate(
    h: &Pattern,
    g: &Graph,
    options: &SearchOptions,
) -> Result<UpperBoundCertificate, CertifyError> {
    let certificate = forces_with(g, h, Mode::Proper, options)?;
    Ok(UpperBoundCertificate {
        degree_bound: g.max_degree(),
        size_bound: g.edge_count(),
        certified: certificate.verdict == Verdict::Forces,
        certificate,
    })
}

/// The two catalogued connected-pattern membership checks: hosts whose
/// every proper colouring forces the triangle-with-pendant and the bull.
pub fn fc_membership_check(
    name: &str,
    options: &SearchOptions,
) -> Result<ForcesCertificate, CertifyError> {
    let (host, pattern) = match name {
        "triangle_pendant_via_k4subdiv" => ("k4_subdivided", "triangle_pendant"),
        "bull_via_k5" => ("k5", "bull"),
        other => return Err(CertifyError::UnknownMembershipCheck(other.into())),
    };
    let g = named_graph(host)?;
    let h = Pattern::new(named_graph(pattern)?)?;
    forces_with(&g, &h, Mode::Proper, options)
}
