//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::VecDeque;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use dimsp::engine::{
    run_baseline, BaselineConfig, DimspConfig, DimspRun, EpochRecord, MigrationPolicy, Model, Topology,
};
use dimsp::genome::Individual;
use dimsp::problems::{
    parse_instance_str, serialize_instance, JsspInstance, ProblemKind, ProblemSpec, QmkpInstance, TspInstance,
};
use dimsp::similarity::{build_matrix, similarity, SimilarityMatrix};
use dimsp::spectral::{cluster, normalized_laplacian, symmetric_eigen};
use dimsp::{Direction, Genome, OperatorSet, RngStream, RunTrace};
use dimsp_cli::output::trace_csv;
use dimsp_cli::{cmd_oracle, OracleArgs};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(limit: Duration, start: Instant, outcome: Outcome) -> Outcome {
    let elapsed = start.elapsed();
    let timed = |d: String| format!("{d}; {:.1}s", elapsed.as_secs_f64());
    match outcome {
        Ok(d) if elapsed <= limit => Ok(timed(d)),
        Ok(d) => Err(format!("{} exceeds {}s", timed(d), limit.as_secs())),
        Err(d) => Err(timed(d)),
    }
}

// ---------------------------------------------------------------- oracles

/// Connected components of the graph with an edge wherever `w > 0`, labelled
/// by first appearance.
fn components(w: &SimilarityMatrix) -> Vec<usize> {
    let n = w.order();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        label[start] = next;
        while let Some(i) = queue.pop_front() {
            for (j, l) in label.iter_mut().enumerate() {
                if *l == usize::MAX && w.get(i, j) > 0.0 {
                    *l = next;
                    queue.push_back(j);
                }
            }
        }
        next += 1;
    }
    label
}

fn first_appearance(labels: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(p) => p,
            None => {
                seen.push(*l);
                seen.len() - 1
            }
        })
        .collect()
}

fn individual(genome: Genome) -> Individual {
    Individual { genome, fitness: 0.0, birth_generation: 0 }
}

// ---------------------------------------------------------------- 1

fn clustering_oracle() -> Outcome {
    let mut rng = RngStream::new(0xC1);
    let mut passed = 0;
    let total = 200;
    for case in 0..total {
        let species = 2 + rng.below(4);
        let size = 20 + rng.below(41);
        // every species gets at least two members
        let mut counts = vec![2usize; species];
        for _ in 0..size - 2 * species {
            counts[rng.below(species)] += 1;
        }
        // cyclic shifts of one tour never agree at any position
        let len = 8;
        let mut base: Vec<u32> = (0..len as u32).collect();
        rng.shuffle(&mut base);
        let mut pop = Vec::new();
        for (s, &c) in counts.iter().enumerate() {
            let genes: Vec<u32> = (0..len).map(|i| base[(i + s) % len]).collect();
            pop.extend(std::iter::repeat_n(individual(Genome::Permutation(genes)), c));
        }
        rng.shuffle(&mut pop);
        let w = build_matrix(&pop).map_err(|e| e.to_string())?;
        let expected = components(&w);
        let got = cluster(&w, 10, &mut RngStream::new(case)).map_err(|e| e.to_string())?;
        if first_appearance(&got.labels) == expected {
            passed += 1;
        }
    }
    check(passed == total, format!("{passed}/{total} partitions recovered"))
}

// ---------------------------------------------------------------- 2

fn random_symmetric(n: usize, rng: &mut RngStream) -> Vec<f64> {
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = rng.next_f64() * 2.0 - 1.0;
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    a
}

/// Worst residual and orthogonality defect of a full eigendecomposition.
fn eigen_errors(a: &[f64], n: usize) -> Result<(f64, f64, Vec<f64>), String> {
    let eig = symmetric_eigen(a, n).map_err(|e| e.to_string())?;
    let mut residual: f64 = 0.0;
    for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
        for i in 0..n {
            let lv: f64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
            residual = residual.max((lv - lambda * v[i]).abs());
        }
    }
    let mut ortho: f64 = 0.0;
    for p in 0..n {
        for q in p..n {
            let dot: f64 = eig.vectors[p].iter().zip(&eig.vectors[q]).map(|(x, y)| x * y).sum();
            let target = if p == q { 1.0 } else { 0.0 };
            ortho = ortho.max((dot - target).abs());
        }
    }
    Ok((residual, ortho, eig.values))
}

fn eigensolver() -> Outcome {
    let mut rng = RngStream::new(0xE2);
    let mut failures = Vec::new();
    let mut worst = (0.0f64, 0.0f64);
    for case in 0..100 {
        let n = 1 + rng.below(50);
        let a = random_symmetric(n, &mut rng);
        let (res, ortho, _) = eigen_errors(&a, n)?;
        worst = (worst.0.max(res / n as f64), worst.1.max(ortho));
        if res > 1e-7 * n as f64 || ortho > 1e-7 {
            failures.push(format!("general #{case} n={n} residual {res:e} ortho {ortho:e}"));
        }
    }
    for case in 0..100 {
        // random block structure: positive weights inside blocks, none across
        let n = 2 + rng.below(49);
        let blocks = 1 + rng.below(n.min(6));
        let block: Vec<usize> = (0..n).map(|i| if i < blocks { i } else { rng.below(blocks) }).collect();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                if block[i] == block[j] {
                    let v = if i == j { 1.0 } else { 0.05 + rng.next_f64() };
                    values[i * n + j] = v;
                    values[j * n + i] = v;
                }
            }
        }
        let w = SimilarityMatrix::from_rows(n, values);
        let expected = *components(&w).iter().max().unwrap() + 1;
        let l = normalized_laplacian(&w).map_err(|e| e.to_string())?;
        let (res, ortho, eigenvalues) = eigen_errors(l.values(), n)?;
        let in_range = eigenvalues.iter().all(|&v| (-1e-8..=2.0 + 1e-8).contains(&v));
        let zeros = eigenvalues.iter().filter(|v| v.abs() <= 1e-8).count();
        if res > 1e-7 * n as f64 || ortho > 1e-7 || !in_range || zeros != expected {
            failures
                .push(format!("laplacian #{case} n={n}: zeros {zeros} vs {expected} components, in range {in_range}"));
        }
    }
    check(
        failures.is_empty(),
        format!(
            "200 matrices, worst residual/N {:.1e}, worst orthogonality {:.1e}{}",
            worst.0,
            worst.1,
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- 3

fn random_genomes(rng: &mut RngStream, count: usize) -> Vec<Genome> {
    let len = 1 + rng.below(12);
    let kind = rng.below(3);
    (0..count)
        .map(|_| match kind {
            0 => {
                let mut g: Vec<u32> = (0..len as u32).collect();
                rng.shuffle(&mut g);
                Genome::Permutation(g)
            }
            1 => {
                let mut g: Vec<u32> = (0..len as u32).map(|i| i % 3).collect();
                rng.shuffle(&mut g);
                Genome::Permutation(g)
            }
            // a small label range makes coincidences common
            _ => Genome::Assignment((0..len).map(|_| rng.below(3) as u32).collect()),
        })
        .collect()
}

fn similarity_axioms() -> Outcome {
    let mut rng = RngStream::new(0x53);
    let sim = |a: &Genome, b: &Genome| similarity(a, b).expect("equal lengths");
    let mut violations = 0;
    let cases = 10_000;
    for _ in 0..cases {
        let g = random_genomes(&mut rng, 3);
        let (x, y, z) = (&g[0], &g[1], &g[2]);
        let sxy = sim(x, y);
        let ok = sxy == sim(y, x)
            && sim(x, x) == 1.0
            && (0.0..=1.0).contains(&sxy)
            && (1.0 - sim(x, z)) <= (1.0 - sxy) + (1.0 - sim(y, z)) + 1e-12;
        if !ok {
            violations += 1;
        }
    }
    check(violations == 0, format!("{cases} triples, {violations} violations"))
}

// ---------------------------------------------------------------- 4

fn small_instances(monotone: &mut Vec<String>) -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let problems = [
        ("8-city TSP", ProblemSpec::Tsp(TspInstance::generate(8, 1000, &mut RngStream::new(8)))),
        ("3x3 JSSP", ProblemSpec::Jssp(JsspInstance::generate(3, 3, 20, &mut RngStream::new(3)))),
        (
            "10-object QMKP",
            ProblemSpec::Qmkp(QmkpInstance::generate(10, 0.6, 2, &mut RngStream::new(10)).map_err(|e| e.to_string())?),
        ),
    ];
    let mut details = Vec::new();
    let mut ok = true;
    for (label, problem) in &problems {
        let path = dir.path().join(format!("{}.txt", problem.kind()));
        fs::write(&path, serialize_instance(problem)).map_err(|e| e.to_string())?;
        let (optimum, _) = cmd_oracle(&OracleArgs { kind: problem.kind(), instance: path, knapsacks: 2 })
            .map_err(|e| e.to_string())?;
        let runs: Vec<(bool, bool)> = (0..10u64)
            .into_par_iter()
            .map(|seed| {
                let config = DimspConfig {
                    pool: vec![OperatorSet::default_for(problem.encoding())],
                    island_capacity: 50,
                    k_max: 4,
                    epoch_interval: 50,
                    max_generations: 500,
                    seed,
                };
                let trace = DimspRun::new(problem, config).and_then(|r| r.run()).expect("valid config");
                (trace.last().unwrap().best_score == optimum, trace.best_is_monotone())
            })
            .collect();
        let count = runs.iter().filter(|r| r.0).count();
        ok &= count >= 9;
        details.push(format!("{label} {count}/10 (optimum {optimum})"));
        for (seed, r) in runs.iter().enumerate() {
            if !r.1 {
                monotone.push(format!("{label} seed {seed}"));
            }
        }
    }
    check(ok, details.join(", "))
}

// ---------------------------------------------------------------- 5, 6, 7, 9

struct Experiment {
    traces: Vec<(Model, Vec<RunTrace>)>,
    epochs: Vec<Vec<EpochRecord>>,
    elapsed: Duration,
}

const DESK_SEEDS: u64 = 10;

fn desk_problem() -> ProblemSpec {
    // same instance as data/desk_compare.json
    ProblemSpec::Tsp(TspInstance::generate(50, 1000, &mut RngStream::new(2024)))
}

fn desk_experiment() -> Experiment {
    let start = Instant::now();
    let problem = desk_problem();
    let ops = OperatorSet::default_for(problem.encoding());
    let mut traces = Vec::new();
    let mut epochs = Vec::new();
    for model in Model::ALL {
        let runs: Vec<(RunTrace, Vec<EpochRecord>)> = (0..DESK_SEEDS)
            .into_par_iter()
            .map(|seed| match model.topology() {
                None => {
                    let config = DimspConfig {
                        pool: vec![ops],
                        island_capacity: 50,
                        k_max: 10,
                        epoch_interval: 50,
                        max_generations: 400,
                        seed,
                    };
                    DimspRun::new(&problem, config).and_then(|r| r.run_with_epochs()).expect("valid config")
                }
                Some(kind) => {
                    let config = BaselineConfig {
                        topology: Topology { kind, num_islands: 10 },
                        policy: MigrationPolicy { interval: 50, fraction: 0.05 },
                        ops,
                        island_capacity: 50,
                        max_generations: 400,
                        seed,
                    };
                    (run_baseline(&problem, config).expect("valid config"), Vec::new())
                }
            })
            .collect();
        let (t, e): (Vec<_>, Vec<_>) = runs.into_iter().unzip();
        if model == Model::Dimsp {
            epochs = e;
        }
        traces.push((model, t));
    }
    Experiment { traces, epochs, elapsed: start.elapsed() }
}

fn final_means(traces: &[RunTrace]) -> (f64, f64) {
    let n = traces.len() as f64;
    let avg = traces.iter().map(|t| t.last().unwrap().avg_score).sum::<f64>() / n;
    let div = traces.iter().map(|t| t.last().unwrap().diversity).sum::<f64>() / n;
    (avg, div)
}

fn diversity_ordering(x: &Experiment) -> Outcome {
    let d: Vec<f64> = x.traces.iter().map(|(_, t)| final_means(t).1).collect();
    let (dimsp, ring, star, full) = (d[0], d[1], d[2], d[3]);
    let ordered = dimsp > ring && ring > star && star >= full;
    let margin = dimsp - ring.max(star).max(full);
    let detail = format!(
        "diversity DIM-SP {dimsp:.4}, Ring {ring:.4}, Star-shape {star:.4}, Fully-connected {full:.4}; margin {margin:+.4}; {:.1}s",
        x.elapsed.as_secs_f64()
    );
    check(ordered && margin >= 0.05 && x.elapsed < Duration::from_secs(600), detail)
}

fn score_ordering(x: &Experiment) -> Outcome {
    let a: Vec<f64> = x.traces.iter().map(|(_, t)| final_means(t).0).collect();
    let ok = a[1..].iter().all(|&b| a[0] < b);
    check(
        ok,
        format!(
            "mean final avg_score DIM-SP {:.1}, Ring {:.1}, Star-shape {:.1}, Fully-connected {:.1} (lower is better)",
            a[0], a[1], a[2], a[3]
        ),
    )
}

/// `small` holds the criterion-4 runs whose elite was not monotone.
fn monotone_elite(x: &Experiment, small: &[String]) -> Outcome {
    let mut runs = 30;
    let mut bad = small.to_vec();
    for (model, traces) in &x.traces {
        for t in traces {
            runs += 1;
            if !t.best_is_monotone() || t.direction != Direction::Minimize {
                bad.push(format!("{model} seed {}", t.seed));
            }
        }
    }
    check(
        bad.is_empty(),
        format!("{runs} runs checked{}", if bad.is_empty() { String::new() } else { format!(", violations {bad:?}") }),
    )
}

fn structural_invariants(x: &Experiment) -> Outcome {
    let (k_max, capacity) = (10, 50);
    let dimsp = &x.traces[0].1;
    let mut problems = Vec::new();
    for (trace, epochs) in dimsp.iter().zip(&x.epochs) {
        if trace.records[0].num_islands != 1 {
            problems.push(format!("seed {} starts with {} islands", trace.seed, trace.records[0].num_islands));
        }
        if epochs.len() != 7 {
            problems.push(format!("seed {} has {} epochs", trace.seed, epochs.len()));
        }
        for e in epochs {
            let n = e.island_sizes.len();
            if !(1..=k_max).contains(&n) || e.island_sizes.iter().any(|&s| !(2..=capacity).contains(&s)) {
                problems.push(format!("seed {} generation {}: {:?}", trace.seed, e.generation, e.island_sizes));
            }
            let recorded = trace.records[e.generation as usize].num_islands;
            if recorded != n {
                problems
                    .push(format!("seed {} generation {}: trace says {recorded} islands", trace.seed, e.generation));
            }
        }
    }

    // all-clones scenario: inject identical individuals and force an epoch
    let problem = desk_problem();
    let config = DimspConfig {
        pool: vec![OperatorSet::default_for(problem.encoding())],
        island_capacity: capacity,
        k_max,
        epoch_interval: 50,
        max_generations: 400,
        seed: 1,
    };
    let mut run = DimspRun::new(&problem, config).map_err(|e| e.to_string())?;
    let clone = run.archipelago.islands[0].population.members[0].clone();
    let template = run.archipelago.islands[0].clone();
    run.archipelago.islands = (0..4)
        .map(|_| {
            let mut island = template.clone();
            island.population.members = vec![clone.clone(); 20];
            island
        })
        .collect();
    run.centralize_and_cluster().map_err(|e| e.to_string())?;
    let collapsed = run.archipelago.island_sizes();
    if collapsed != vec![capacity] {
        problems.push(format!("80 clones became islands {collapsed:?}"));
    }
    let epochs: usize = x.epochs.iter().map(Vec::len).sum();
    check(
        problems.is_empty(),
        format!(
            "{} runs, {epochs} epochs checked, clones collapse to {collapsed:?}{}",
            dimsp.len(),
            problems.first().map(|p| format!("; {p}")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- 8

fn determinism(x: &Experiment) -> Outcome {
    let bin = env!("CARGO_BIN_EXE_dimsp");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = data_dir().join("desk_compare.json");
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let out = dir.path().join(format!("jobs{jobs}"));
        let status = Command::new(bin)
            .args(["compare", "--config"])
            .arg(&config)
            .arg("--out")
            .arg(&out)
            .args(["--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())?;
        if !status.status.success() {
            return Err(format!("compare --jobs {jobs} failed: {}", String::from_utf8_lossy(&status.stderr)));
        }
        outputs.push(out);
    }
    let mut files = 0;
    let mut mismatches = Vec::new();
    for (model, traces) in &x.traces {
        for t in traces {
            let name = format!("trace_{}_seed{}.csv", model.key(), t.seed);
            let a = fs::read(outputs[0].join(&name)).map_err(|e| format!("{name}: {e}"))?;
            let b = fs::read(outputs[1].join(&name)).map_err(|e| format!("{name}: {e}"))?;
            files += 1;
            if a != b || a != trace_csv(t).as_bytes() {
                mismatches.push(name);
            }
        }
    }
    let sa = fs::read(outputs[0].join("summary.csv")).map_err(|e| e.to_string())?;
    let sb = fs::read(outputs[1].join("summary.csv")).map_err(|e| e.to_string())?;
    if sa != sb {
        mismatches.push("summary.csv".into());
    }
    check(
        mismatches.is_empty(),
        format!(
            "{files} trace CSVs identical across --jobs 1, --jobs 4 and the in-process run{}",
            if mismatches.is_empty() { String::new() } else { format!("; differing: {mismatches:?}") }
        ),
    )
}

// ---------------------------------------------------------------- 10

fn numeric_tokens(text: &str) -> Vec<f64> {
    text.split_whitespace().filter_map(|t| t.parse::<f64>().ok()).collect()
}

fn parser_fidelity() -> Outcome {
    let dir = data_dir();
    let mut notes = Vec::new();
    let mut ok = true;
    for (file, kind) in
        [("jssp_20x5.txt", ProblemKind::Jssp), ("tiny.tsp", ProblemKind::Tsp), ("hand5.qkp", ProblemKind::Qmkp)]
    {
        let text = fs::read_to_string(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let parsed = parse_instance_str(&text, kind, 3).map_err(|e| format!("{file}: {e}"))?;
        let written = serialize_instance(&parsed);
        let reparsed = parse_instance_str(&written, kind, 3).map_err(|e| format!("{file} reserialized: {e}"))?;
        let same = numeric_tokens(&text) == numeric_tokens(&written) && reparsed == parsed;
        ok &= same;
        notes.push(format!("{file} {}", if same { "round-trips" } else { "DIFFERS" }));
    }
    if let ProblemSpec::Jssp(j) =
        parse_instance_str(&fs::read_to_string(dir.join("jssp_20x5.txt")).unwrap(), ProblemKind::Jssp, 3).unwrap()
    {
        ok &= j.num_jobs() == 20 && j.num_machines() == 5;
    }

    let malformed: [(ProblemKind, &str, usize); 15] = [
        (ProblemKind::Jssp, "", 1),
        (ProblemKind::Jssp, "2 2\n0 3 1 2\n", 3),
        (ProblemKind::Jssp, "2 2\n0 3 1 2\n1 4 x 5\n", 3),
        (ProblemKind::Jssp, "2 2\n0 3 0 2\n1 4 0 5\n", 2),
        (ProblemKind::Jssp, "2 2\n0 3 1 2\n1 4 0 5\n9 9 9 9\n", 4),
        (
            ProblemKind::Tsp,
            "NAME : a\nTYPE : TSP\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 0\n",
            7,
        ),
        (ProblemKind::Tsp, "NAME : a\nDIMENSION : two\n", 2),
        (ProblemKind::Tsp, "NAME : a\nDIMENSION : 1\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 zero\n", 5),
        (ProblemKind::Tsp, "NAME : a\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 0\n3 1 1\n", 6),
        (
            ProblemKind::Tsp,
            "NAME : a\nDIMENSION : 1\nEDGE_WEIGHT_TYPE : EUC_2D\nBOGUS_KEY : 1\nNODE_COORD_SECTION\n1 0 0\n",
            4,
        ),
        (ProblemKind::Qmkp, "q\n", 2),
        (ProblemKind::Qmkp, "q\n2\n1 2 3\n4\n\n0\n5\n1 1\n", 3),
        (ProblemKind::Qmkp, "q\n2\n1 2\n4\nx\n0\n5\n1 1\n", 5),
        (ProblemKind::Qmkp, "q\n2\n1 2\n4\n\n1\n5\n1 1\n", 6),
        (ProblemKind::Qmkp, "q\n2\n1 2\n4\n\n0\n5\n1 0\n", 8),
    ];
    let mut wrong = Vec::new();
    for (i, (kind, text, line)) in malformed.iter().enumerate() {
        match parse_instance_str(text, *kind, 2) {
            Err(e @ dimsp::Error::Parse { .. }) if e.line() == Some(*line) => {}
            other => wrong.push(format!("case {i} ({kind}): expected parse error on line {line}, got {other:?}")),
        }
    }
    ok &= wrong.is_empty();
    check(
        ok,
        format!(
            "{}; {}/15 malformed files rejected at the right line{}",
            notes.join(", "),
            15 - wrong.len(),
            wrong.first().map(|w| format!("; {w}")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- driver

fn main() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let t = Instant::now();
    results.push(("1 clustering oracle equivalence", within(Duration::from_secs(10), t, clustering_oracle())));
    let t = Instant::now();
    results.push(("2 eigensolver correctness", within(Duration::from_secs(30), t, eigensolver())));
    results.push(("3 similarity axioms", similarity_axioms()));
    let mut small = Vec::new();
    let t = Instant::now();
    results.push(("4 small-instance GA optimality", within(Duration::from_secs(120), t, small_instances(&mut small))));
    let experiment = desk_experiment();
    results.push(("5 diversity ordering", diversity_ordering(&experiment)));
    results.push(("6 score ordering", score_ordering(&experiment)));
    results.push(("7 monotone elite", monotone_elite(&experiment, &small)));
    results.push(("8 determinism", determinism(&experiment)));
    results.push(("9 DIM-SP structural invariants", structural_invariants(&experiment)));
    results.push(("10 parser fidelity", parser_fidelity()));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
