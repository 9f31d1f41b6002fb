//! One line per acceptance criterion, with the time limits pinned below.
//!
//! The long dumbbell searches of criterion 4 run only with
//! `THRACKLE_NIGHTLY=1` (optionally `THRACKLE_NIGHTLY_BUDGET=<secs>` for
//! DB(6,6,0), default 4 hours). Without it that criterion reports PENDING
//! for the items it did not run and does not fail the suite.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use thrackle::campaign::run_campaign;
use thrackle::parallel::{decide, RunOptions};
use thrackle_core::bounds::{self, case_b_increasing, critical_cycle_fraction, epsilon_plan, sufficient_c, tau, turan_bound, BoundReport};
use thrackle_core::construction::{audit, chessboard, density_trace};
use thrackle_core::cycles::is_bipartite;
use thrackle_core::doubling::conway_double;
use thrackle_core::dumbbell::{make_dumbbell, required_count_closed_form, required_set, DumbbellSpec};
use thrackle_core::planarity::is_planar;
use thrackle_core::schedule::CrossingSchedule;
use thrackle_core::search::{enumerate_witnesses, is_thrackleable, SearchOptions};
use thrackle_core::witness::{validate_witness, ThrackleWitness};
use thrackle_core::Graph;

#[derive(PartialEq)]
enum Status {
    Pass,
    Fail,
    Pending,
}

struct Line {
    id: u32,
    status: Status,
    detail: String,
}

fn emit(l: &Line) {
    let word = match l.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Pending => "PENDING",
    };
    // Written past the test harness capture so the lines always show.
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {} {word}: {}", l.id, l.detail);
}

fn verdict(id: u32, ok: bool, detail: String) -> Line {
    Line {
        id,
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(&pairs).unwrap()
}

fn nightly() -> bool {
    std::env::var("THRACKLE_NIGHTLY").is_ok_and(|v| v == "1")
}

const BOUND_LIMIT: Duration = Duration::from_millis(1);
const BALANCE_LIMIT: Duration = Duration::from_secs(1);
const C4_LIMIT: Duration = Duration::from_millis(100);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(60);
const COUNT_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const DOUBLING_LIMIT: Duration = Duration::from_secs(1);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(30);
const EPSILON_LIMIT: Duration = Duration::from_secs(10);
/// Budget for the DB(6,6,0) run that must not be certified by accident.
const SHORT_BUDGET: Duration = Duration::from_secs(2);

fn criterion_1() -> Line {
    let cli = |l: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_thrackle"))
            .args(["bound", "--c", "6", "--l", l])
            .output()
            .unwrap();
        String::from_utf8(o.stdout).unwrap()
    };
    let a = cli("-1");
    let b = cli("0");
    let (lines, t) = timed(|| {
        (
            BoundReport::tau(6, -1, None).unwrap().to_string(),
            BoundReport::tau(6, 0, None).unwrap().to_string(),
        )
    });
    let ok = a.contains(" = 617/425 ") && b.contains(" = 167/117 ") && lines.0 == a.trim() && lines.1 == b.trim() && t < 2 * BOUND_LIMIT;
    verdict(1, ok, format!("{:?} | {:?}; both computed in {t:?} (limit {:?} each)", a.trim(), b.trim(), BOUND_LIMIT))
}

fn criterion_2() -> Line {
    let (bad, t) = timed(|| {
        let mut bad = Vec::new();
        for c in (6..=20).step_by(2) {
            for l in -1..=10 {
                let f = critical_cycle_fraction(c, l).unwrap();
                if case_b_increasing(c, l, &q(1), &f).unwrap() != tau(c, l).unwrap() {
                    bad.push((c, l));
                }
            }
        }
        bad
    });
    verdict(2, bad.is_empty() && t < BALANCE_LIMIT, format!("96 (c,l) pairs, mismatches {bad:?}, exact, {t:?} (limit {BALANCE_LIMIT:?})"))
}

fn witness_set(g: &Graph, pruning: bool) -> (BTreeSet<Vec<Vec<usize>>>, u64) {
    let opts = SearchOptions {
        planarity_pruning: pruning,
        ..SearchOptions::default()
    };
    let (ws, stats) = enumerate_witnesses(g, &opts, usize::MAX);
    (ws.into_iter().map(|w| w.schedule.into_lists()).collect(), stats.complete_schedules)
}

fn criterion_3() -> Line {
    let (c4, t4) = timed(|| is_thrackleable(&cycle(4), &SearchOptions::default()));
    let mut ok = c4.is_not_thrackleable() && t4 < C4_LIMIT;
    let mut detail = format!("C4 not thrackleable in {t4:?} (limit {C4_LIMIT:?})");
    for n in [5, 6] {
        let d = is_thrackleable(&cycle(n), &SearchOptions::default());
        let valid = d.witness().is_some_and(|w| validate_witness(w).passed());
        ok &= valid;
        detail += &format!("; C{n} witness valid={valid}");
    }
    let ((c5, c6, c6_pruned), t) = timed(|| (witness_set(&cycle(5), false), witness_set(&cycle(6), false), witness_set(&cycle(6), true)));
    ok &= c5.1 == 32 && c6.1 == 46656 && c6.0 == c6_pruned.0 && !c6.0.is_empty() && t < ENUMERATION_LIMIT;
    detail += &format!(
        "; unpruned complete schedules C5 {} C6 {}; C6 planar schedules unpruned {} = pruned {}; {t:?} (limit {ENUMERATION_LIMIT:?})",
        c5.1,
        c6.1,
        c6.0.len(),
        c6_pruned.0.len()
    );
    verdict(3, ok, detail)
}

fn campaign_opts() -> SearchOptions {
    SearchOptions {
        prune_c6_rotation: true,
        ..SearchOptions::default()
    }
}

fn criterion_4() -> Line {
    let opts = campaign_opts();
    let run = RunOptions::default();
    let g = make_dumbbell(DumbbellSpec::new(6, 6, -3).unwrap()).unwrap();
    let (d, t) = timed(|| decide(&g, &opts, &run));
    let mut ok = d.is_not_thrackleable();
    let mut detail = format!("DB(6,6,-3) not thrackleable={} ({} nodes, {t:?})", ok, d.stats.nodes);
    // A budget far too small for DB(6,6,0) must never certify.
    let short = RunOptions {
        deadline: Some(Instant::now() + SHORT_BUDGET),
        ..RunOptions::default()
    };
    let r = run_campaign(6, 0, &opts, &short).unwrap();
    let text = r.to_text();
    let honest = !r.report.certified && text.contains("# not certified") && text.ends_with("certified no tau 167/117\n");
    ok &= honest;
    detail += &format!("; (6,0) campaign under a {SHORT_BUDGET:?} budget reports not certified={honest}");
    if !nightly() {
        detail += "; DB(6,6,-2), DB(6,6,-1) and the DB(6,6,0) certification run only with THRACKLE_NIGHTLY=1";
        return Line {
            id: 4,
            status: if ok { Status::Pending } else { Status::Fail },
            detail,
        };
    }
    let (r, t) = timed(|| run_campaign(6, -1, &opts, &RunOptions::default()).unwrap());
    let certified = r.report.certified && r.to_text().ends_with("certified yes tau 617/425\n");
    ok &= certified;
    detail += &format!("; (6,-1) campaign certified={certified} in {t:?}");
    let secs = std::env::var("THRACKLE_NIGHTLY_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(4 * 3600);
    let budget = RunOptions {
        deadline: Some(Instant::now() + Duration::from_secs(secs)),
        ..RunOptions::default()
    };
    let (r, t) = timed(|| run_campaign(6, 0, &opts, &budget).unwrap());
    let text = r.to_text();
    let consistent = if r.report.certified {
        text.ends_with("certified yes tau 167/117\n")
    } else {
        text.contains("# not certified")
    };
    ok &= consistent;
    detail += &format!(
        "; (6,0) campaign certified={} in {t:?} (budget {secs}s, report consistent={consistent})",
        r.report.certified
    );
    verdict(4, ok, detail)
}

fn criterion_5() -> Line {
    let (bad, t) = timed(|| {
        let mut bad = Vec::new();
        for c in (6..=20).step_by(2) {
            for l in -1..=10 {
                if required_set(c, l).unwrap().len() as i128 != required_count_closed_form(c, l).unwrap() {
                    bad.push((c, l));
                }
            }
        }
        bad
    });
    verdict(5, bad.is_empty() && t < COUNT_LIMIT, format!("96 (c,l) pairs, mismatches {bad:?}, {t:?} (limit {COUNT_LIMIT:?})"))
}

fn criterion_6() -> Line {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/connected_le8.g6");
    let text = std::fs::read_to_string(root).unwrap();
    let (mismatch, t) = timed(|| {
        let mut count = 0;
        let mut mismatch = 0;
        for line in text.lines().filter(|l| !l.starts_with('#')) {
            let (g6, v) = line.split_once(' ').unwrap();
            count += 1;
            if is_planar(&parse_graph6(g6)) != (v == "1") {
                mismatch += 1;
            }
        }
        (count, mismatch)
    });
    let k5: Vec<_> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let k33: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    let fixed = !is_planar(&Graph::from_edges(&k5).unwrap()) && !is_planar(&Graph::from_edges(&k33).unwrap());
    verdict(
        6,
        mismatch.1 == 0 && mismatch.0 == 12113 && fixed && t < ORACLE_LIMIT,
        format!(
            "{} connected graphs on <= 8 vertices, {} disagreements with the stored oracle (the minor-search cross-check is in thrackle-core's planarity_oracle test); K5, K3,3 non-planar={fixed}; {t:?} (limit {ORACLE_LIMIT:?})",
            mismatch.0, mismatch.1
        ),
    )
}

fn parse_graph6(s: &str) -> Graph {
    let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let mut bits = bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |i| (b >> i) & 1 == 1));
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next().unwrap() {
                pairs.push((i, j));
            }
        }
    }
    Graph::with_edges(n, &pairs).unwrap()
}

fn criterion_7() -> Line {
    let triangle = cycle(3);
    let s = CrossingSchedule::empty(3);
    let w = ThrackleWitness::embedded(triangle, s).unwrap().unwrap();
    let (d3, t3) = timed(|| conway_double(&w, &[0, 1, 2]).unwrap());
    let ok3 = d3.graph.edge_count() == 6 && is_bipartite(&d3.graph) && validate_witness(&d3).passed();
    let c5 = is_thrackleable(&cycle(5), &SearchOptions::default());
    let w5 = c5.witness().unwrap();
    let (d5, t5) = timed(|| conway_double(w5, &[0, 1, 2, 3, 4]).unwrap());
    let ok5 = d5.graph.edge_count() == 10 && is_bipartite(&d5.graph) && validate_witness(&d5).passed();
    verdict(
        7,
        ok3 && ok5 && t3 < DOUBLING_LIMIT && t5 < DOUBLING_LIMIT,
        format!("triangle -> bipartite C6 valid={ok3} ({t3:?}); search C5 -> bipartite C10 valid={ok5} ({t5:?}); limit {DOUBLING_LIMIT:?} each"),
    )
}

fn criterion_8() -> Line {
    let (r, t) = timed(|| {
        let mut notes = Vec::new();
        let mut ok = true;
        for l in [5, 4] {
            let g = chessboard(1, l, 200).unwrap();
            let a = audit(&g, 1, l);
            ok &= a.passed() && g.graph.vertex_count() >= 200;
            notes.push(format!("chessboard(1,{l},200) n={} audit={}", g.graph.vertex_count(), a.passed()));
            let base = chessboard(1, l, 60).unwrap();
            let direct = chessboard(2, l, base.graph.vertex_count() + base.graph.edge_count()).unwrap();
            let same = audit(&direct, 2, l) == audit(&base.subdivide(2), 2, l) && audit(&direct, 2, l).passed();
            ok &= same;
            notes.push(format!("chessboard(2,{l}) = subdivided chessboard(1,{l}) under audit: {same}"));
            for m in [1, 2] {
                let bound = turan_bound((m * l) as i64, (m * (l + 1) - 1) as i64, None).unwrap();
                let sizes: Vec<usize> = (0..10).map(|i| 1 + 50 * i).collect();
                let trace = density_trace(m, l, &sizes).unwrap();
                let below = trace.iter().all(|p| p.ratio <= bound);
                let monotone = trace.windows(2).all(|w| w[0].ratio <= w[1].ratio);
                ok &= below && monotone;
                notes.push(format!(
                    "density m={m} l={l} last {} <= {} and nondecreasing: {}",
                    bounds::ratio(&trace.last().unwrap().ratio),
                    bounds::ratio(&bound),
                    below && monotone
                ));
            }
        }
        (ok, notes)
    });
    verdict(8, r.0 && t < CONSTRUCTION_LIMIT, format!("{}; {t:?} (limit {CONSTRUCTION_LIMIT:?})", r.1.join("; ")))
}

fn criterion_9() -> Line {
    let (r, t) = timed(|| {
        let mut notes = Vec::new();
        let mut ok = true;
        for (a, b) in [(1, 2), (1, 4), (1, 10), (1, 25)] {
            let eps = BigRational::new(a.into(), b.into());
            let target = q(1) + &eps;
            let p = epsilon_plan(&eps).unwrap();
            let plan_ok = tau(p.c, p.l).unwrap() <= target && p.tau <= target;
            let mut checked = 0;
            let mut suff_ok = true;
            for r in (0..=200u64).step_by(5) {
                if let Ok(c) = sufficient_c(r, &eps) {
                    let c: i64 = c.try_into().unwrap();
                    let even = c.max(6) + c.max(6) % 2;
                    suff_ok &= tau(even, 2 * r as i64).unwrap() <= target;
                    checked += 1;
                }
            }
            ok &= plan_ok && suff_ok && checked > 0;
            notes.push(format!(
                "eps {a}/{b}: plan (c {}, l {}) tau {} ok={plan_ok}; sufficient_c ok for {checked} r={suff_ok}",
                p.c,
                p.l,
                bounds::ratio(&p.tau)
            ));
        }
        (ok, notes)
    });
    verdict(9, r.0 && t < EPSILON_LIMIT, format!("{}; {t:?} (limit {EPSILON_LIMIT:?})", r.1.join("; ")))
}

#[test]
fn acceptance() {
    let checks: [fn() -> Line; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let _ = writeln!(std::io::stdout().lock());
    let mut failed = Vec::new();
    for c in checks {
        let line = c();
        emit(&line);
        if line.status == Status::Fail {
            failed.push(line.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
