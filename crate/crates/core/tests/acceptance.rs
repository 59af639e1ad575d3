//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p signed-graceful --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use signed_graceful::constructions::{fixture, FamilyKind, FixtureId};
use signed_graceful::ndsg::{build_gmn, is_complement_reducible, is_p4_free, NdsgParams};
use signed_graceful::search::{
    oracle_solve, oracle_space, solve, survey_gmn, Goal, Pruning, SearchConfig, SearchStatus,
    Verdict, ORACLE_LIMIT,
};
use signed_graceful::verify::verify;
use signed_graceful::{Edge, GraphDocument, LabelingMode, Sign, SignedGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exhaustive(mode: LabelingMode, goal: Goal) -> SearchConfig {
    SearchConfig::new(mode, goal)
}

fn construction_soundness() -> Outcome {
    let mut checked = 0;
    for kind in FamilyKind::ALL {
        for m in 1..=200 {
            let built = kind
                .build(m)
                .map_err(|e| format!("{} m={m}: {e}", kind.name()))?;
            let report = verify(&built.graph, &built.labeling, built.expected_mode)
                .map_err(|e| format!("{}: {e}", built.family))?;
            ensure(report.valid, || {
                format!("{} invalid: {:?}", built.family, report.violation)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} labeled constructions verified"))
}

fn figure_fixtures() -> Outcome {
    for id in FixtureId::ALL {
        let built = fixture(id).map_err(|e| format!("{}: {e}", id.name()))?;
        let report = verify(&built.graph, &built.labeling, built.expected_mode)
            .map_err(|e| format!("{}: {e}", id.name()))?;
        ensure(report.valid, || {
            format!(
                "{} invalid in {}: {:?}",
                id.name(),
                built.expected_mode,
                report.violation
            )
        })?;
    }
    Ok(format!("{} fixtures verified", FixtureId::ALL.len()))
}

fn star(leaves: usize, negative: usize) -> SignedGraph {
    let edges = (1..=leaves).map(|i| {
        let sign = if i <= negative {
            Sign::Negative
        } else {
            Sign::Positive
        };
        Edge::new(0, i, sign)
    });
    SignedGraph::new(leaves + 1, edges).expect("star is simple")
}

fn star_necessity() -> Outcome {
    let config = exhaustive(LabelingMode::AdditivelyGracefulSigned, Goal::FindOne);
    let mut cases = 0;
    for p in 3..=8 {
        for n in 2..=p {
            let out = solve(&star(p, n), &config).map_err(|e| e.to_string())?;
            ensure(out.status == SearchStatus::ExhaustedNone, || {
                format!("K(1,{p}) with {n} negative edges: {:?}", out.status)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} stars exhausted with no labeling"))
}

fn connected_graphs(p: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).filter_map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = SignedGraph::unsigned(p, chosen).expect("subset of simple pairs");
        g.is_connected().then_some(g)
    })
}

fn additive_bound_consistency() -> Outcome {
    let pruning = Pruning {
        additive_bound: false,
        ..Pruning::ALL
    };
    let config = exhaustive(LabelingMode::AdditivelyGraceful, Goal::FindOne).with_pruning(pruning);
    let (mut graphs, mut graceful) = (0, 0);
    for p in 2..=5 {
        for g in connected_graphs(p) {
            let out = solve(&g, &config).map_err(|e| e.to_string())?;
            ensure(out.status != SearchStatus::BudgetExceeded, || {
                "unbounded search stopped".into()
            })?;
            let bound = g.q() + 4 >= 2 * g.p();
            if out.is_found() {
                graceful += 1;
                ensure(bound, || {
                    format!("found labeling despite q < 2p-4: {:?}", g.edges())
                })?;
            }
            graphs += 1;
        }
    }
    Ok(format!(
        "{graphs} connected graphs, {graceful} additively graceful, all within the bound"
    ))
}

fn st_remark() -> Outcome {
    let mut failures = Vec::new();
    for m in 1..=4 {
        let st = FamilyKind::St.build(m).map_err(|e| e.to_string())?.graph;
        let plain = st.underlying();
        let run = |g: &SignedGraph, mode| {
            solve(g, &exhaustive(mode, Goal::FindOne))
                .map(|o| o.status)
                .map_err(|e| e.to_string())
        };
        let graceful = run(&plain, LabelingMode::Graceful)?;
        let additive = run(&plain, LabelingMode::AdditivelyGraceful)?;
        let signed = run(&st, LabelingMode::GracefulSigned)?;
        if graceful != SearchStatus::Found {
            failures.push(format!("m={m}: underlying not graceful ({graceful:?})"));
        }
        if additive != SearchStatus::ExhaustedNone {
            failures.push(format!(
                "m={m}: underlying additively graceful ({additive:?})"
            ));
        }
        if signed != SearchStatus::Found {
            failures.push(format!("m={m}: no graceful signed labeling ({signed:?})"));
        }
    }
    if failures.is_empty() {
        Ok("m=1..4 graceful, not additively graceful, graceful signed".into())
    } else {
        Err(failures.join("; "))
    }
}

fn figure_10_survey() -> Outcome {
    let config = exhaustive(LabelingMode::AdditivelyGraceful, Goal::FindOne);
    let records = survey_gmn(&[2, 6], &[3, 4], &config).map_err(|e| e.to_string())?;
    for (m, n) in [(2, 3), (6, 3), (6, 4)] {
        let r = records
            .iter()
            .find(|r| (r.m, r.n) == (m, n))
            .ok_or_else(|| format!("G({m},{n}) missing"))?;
        ensure(r.additively_graceful == Verdict::Yes, || {
            format!("G({m},{n}) is {:?}", r.additively_graceful)
        })?;
        ensure(r.complement_reducible, || {
            format!("G({m},{n}) not complement reducible")
        })?;
        let graph = build_gmn(NdsgParams::new(m, n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let witness = r
            .witness
            .as_ref()
            .ok_or_else(|| format!("G({m},{n}) lacks a witness"))?;
        let report =
            verify(&graph, witness, LabelingMode::AdditivelyGraceful).map_err(|e| e.to_string())?;
        ensure(report.valid, || format!("G({m},{n}) witness invalid"))?;
    }
    Ok("G(2,3), G(6,3), G(6,4) additively graceful and complement reducible".into())
}

fn random_signed_graph(rng: &mut ChaCha8Rng, max_p: usize) -> SignedGraph {
    let p = rng.random_range(1..=max_p);
    let density = rng.random_range(0.2..0.9);
    let negative = rng.random_range(0.0..=1.0);
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if rng.random_bool(density) {
                let sign = if rng.random_bool(negative) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                edges.push(Edge::new(u, v, sign));
            }
        }
    }
    SignedGraph::new(p, edges).expect("random graph is simple")
}

fn compare_with_oracle(g: &SignedGraph, label: &str) -> Result<usize, String> {
    let mut compared = 0;
    for mode in LabelingMode::ALL {
        if !mode.accepts(g) || oracle_space(g, mode) > ORACLE_LIMIT {
            continue;
        }
        let expected = oracle_solve(g, mode).map_err(|e| e.to_string())?;
        let got = solve(g, &exhaustive(mode, Goal::EnumerateAll)).map_err(|e| e.to_string())?;
        ensure(
            got.status == expected.status && got.witnesses == expected.witnesses,
            || {
                format!(
                    "{label} in {mode}: solver {:?}/{} vs oracle {:?}/{}",
                    got.status,
                    got.witnesses.len(),
                    expected.status,
                    expected.witnesses.len()
                )
            },
        )?;
        compared += 1;
    }
    Ok(compared)
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5167_4ace);
    let mut runs = 0;
    for i in 0..600 {
        let g = random_signed_graph(&mut rng, 6);
        runs += compare_with_oracle(&g, &format!("random graph #{i}"))?;
    }
    let mut fixtures = 0;
    for id in FixtureId::ALL {
        let g = fixture(id).map_err(|e| e.to_string())?.graph;
        let n = compare_with_oracle(&g, id.name())?;
        fixtures += usize::from(n > 0);
        runs += n;
    }
    Ok(format!(
        "600 random graphs and {fixtures}/{} fixtures within oracle reach, {runs} mode runs identical",
        FixtureId::ALL.len()
    ))
}

fn cograph_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc06_4a9f);
    let mut cographs = 0;
    for i in 0..1500 {
        let g = random_signed_graph(&mut rng, 9).underlying();
        let reducible = is_complement_reducible(&g).map_err(|e| e.to_string())?;
        let p4_free = is_p4_free(&g).map_err(|e| e.to_string())?;
        ensure(reducible == p4_free, || {
            format!("graph #{i} disagrees: reducible={reducible}, p4_free={p4_free}")
        })?;
        cographs += usize::from(reducible);
    }
    Ok(format!("1500 graphs agree ({cographs} cographs)"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_graceful"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code().is_some(), || {
        "terminated by signal".into()
    })?;
    Ok(out.stdout)
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("st4.json");
    let doc = GraphDocument::from_graph(
        &FamilyKind::St.build(4).map_err(|e| e.to_string())?.graph,
        None,
    );
    std::fs::write(&input, doc.to_json().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let input = input.to_str().ok_or("non-UTF-8 temp path")?;
    let searches: [&[&str]; 3] = [
        &["search", "--mode", "additive-signed", "--input", input],
        &[
            "search",
            "--mode",
            "graceful-signed",
            "--input",
            input,
            "--all",
        ],
        &[
            "search",
            "--mode",
            "graceful-signed",
            "--input",
            input,
            "--count",
            "--workers",
            "3",
        ],
    ];
    for args in searches {
        let first = run_cli(args)?;
        ensure(!first.is_empty(), || format!("no output from {args:?}"))?;
        ensure(first == run_cli(args)?, || {
            format!("output differs for {args:?}")
        })?;
    }
    let catalog = dir.path().join("catalog.jsonl");
    let catalog = catalog.to_str().ok_or("non-UTF-8 temp path")?;
    let survey = ["survey", "--m", "2..6", "--n", "2..6", "--catalog", catalog];
    let first = run_cli(&survey)?;
    std::fs::remove_file(catalog).map_err(|e| e.to_string())?;
    let second = run_cli(&survey)?;
    ensure(!first.is_empty() && first == second, || {
        "survey output differs".into()
    })?;
    Ok("search and survey stdout byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("construction soundness", construction_soundness),
        ("figure fixtures", figure_fixtures),
        ("star necessity", star_necessity),
        ("additive bound consistency", additive_bound_consistency),
        ("ST remark", st_remark),
        ("figure 10 survey", figure_10_survey),
        ("oracle equivalence", oracle_equivalence),
        ("cograph cross-check", cograph_cross_check),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {}. {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
