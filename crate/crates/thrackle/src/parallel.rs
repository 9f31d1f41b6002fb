//! Search driver with wall-clock deadlines, progress reports and optional
//! parallel exploration of independent branches.
//!
//! In parallel mode the search tree is cut at a fixed depth and each branch
//! is explored on the rayon pool. A branch is cancelled once a branch with
//! a lower index has found a witness, so the reported witness is the one of
//! the lowest successful branch whatever the thread count.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thrackle_core::search::{BranchResult, Choice, Decision, SearchOptions, SearchStats, Searcher};
use thrackle_core::Graph;

/// Nodes between two polls of the cancel hook in the core search.
const POLL_NODES: u64 = 1024;

/// Branches per worker aimed for when cutting the tree.
const BRANCHES_PER_JOB: usize = 8;

const MAX_FRONTIER_DEPTH: usize = 8;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub jobs: usize,
    pub deadline: Option<Instant>,
    /// Interval of progress lines on standard error; `None` is silent.
    pub progress: Option<Duration>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: 1,
            deadline: None,
            progress: None,
        }
    }
}

struct Monitor {
    started: Instant,
    polled: AtomicU64,
    last_report: Mutex<Instant>,
    run: RunOptions,
    node_limit: Option<u64>,
    /// Lowest branch index that found a witness.
    best: AtomicUsize,
}

impl Monitor {
    fn new(run: &RunOptions, node_limit: Option<u64>) -> Self {
        let now = Instant::now();
        Monitor {
            started: now,
            polled: AtomicU64::new(0),
            last_report: Mutex::new(now),
            run: run.clone(),
            node_limit,
            best: AtomicUsize::new(usize::MAX),
        }
    }

    /// Called by the search every `POLL_NODES` nodes of branch `branch`;
    /// `s` covers that branch only.
    fn poll(&self, branch: usize, s: &SearchStats) -> bool {
        let nodes = self.polled.fetch_add(POLL_NODES, Ordering::Relaxed) + POLL_NODES;
        if let Some(every) = self.run.progress {
            let mut last = self.last_report.lock().expect("progress lock");
            if last.elapsed() >= every {
                *last = Instant::now();
                eprintln!(
                    "progress {:.0}s nodes {nodes} branch {branch} max-depth {} planarity-prunes {} rotation-prunes {}",
                    self.started.elapsed().as_secs_f64(),
                    s.max_depth,
                    s.planarity_prunes,
                    s.rotation_prunes
                );
            }
        }
        if self.node_limit.is_some_and(|b| nodes > b) {
            return true;
        }
        if self.run.deadline.is_some_and(|d| Instant::now() >= d) {
            return true;
        }
        self.best.load(Ordering::Relaxed) < branch
    }
}

/// Decides thrackleability. Runs in parallel when
/// `opts.parallel_branching` is set and `run.jobs > 1`; the verdict never
/// depends on either.
pub fn decide(g: &Graph, opts: &SearchOptions, run: &RunOptions) -> Decision {
    if !(opts.parallel_branching && run.jobs > 1) {
        let searcher = Searcher::new(g, opts);
        // The core search enforces the node limit exactly here.
        let monitor = Monitor::new(run, None);
        let (res, stats) = searcher.explore(&[], &|s| monitor.poll(0, s));
        return searcher.decision(res, stats);
    }
    // Branches share one node budget, counted at poll granularity.
    let branch_opts = SearchOptions {
        node_limit: None,
        ..*opts
    };
    let searcher = Searcher::new(g, &branch_opts);
    let (branches, mut stats) = cut(&searcher, run.jobs * BRANCHES_PER_JOB);
    let monitor = Monitor::new(run, opts.node_limit);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(run.jobs)
        .build()
        .expect("thread pool");
    let results: Vec<(BranchResult, SearchStats)> = pool.install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                if monitor.best.load(Ordering::Relaxed) < i {
                    return (BranchResult::Cancelled, SearchStats::default());
                }
                let out = searcher.explore(prefix, &|s| monitor.poll(i, s));
                if matches!(out.0, BranchResult::Found(_)) {
                    monitor.best.fetch_min(i, Ordering::Relaxed);
                }
                out
            })
            .collect()
    });
    for (_, s) in &results {
        stats.merge(s);
    }
    let mut verdict = BranchResult::Exhausted;
    for (res, _) in results {
        match res {
            BranchResult::Found(s) => {
                verdict = BranchResult::Found(s);
                break;
            }
            BranchResult::Exhausted => {}
            BranchResult::NodeLimit | BranchResult::Cancelled => {
                if verdict == BranchResult::Exhausted {
                    verdict = BranchResult::Cancelled;
                }
            }
        }
    }
    searcher.decision(verdict, stats)
}

/// Shallowest frontier with at least `want` branches (or the deepest tried).
fn cut(searcher: &Searcher, want: usize) -> (Vec<Vec<Choice>>, SearchStats) {
    let mut best = searcher.frontier(1);
    for depth in 2..=MAX_FRONTIER_DEPTH {
        if best.0.len() >= want {
            break;
        }
        let next = searcher.frontier(depth);
        if next.0.len() <= best.0.len() {
            break;
        }
        best = next;
    }
    best
}
