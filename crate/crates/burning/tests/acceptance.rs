//! End-to-end acceptance checks. Each test covers one release criterion and
//! prints a single `criterion N (...): PASS` line when it holds; the
//! tolerances and time limits are pinned inline next to the asserts.

use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use burning::distance::{distance_to_set, DistanceError};
use burning::exact::{burning_number_exact, is_feasible, ExactLimits};
use burning::graph::connected_components;
use burning::io::load_graph;
use burning::sequence::{covered_set, simulate_rounds};
use burning::solver::greedy_known_b;
use burning::{apsp, bench, bgp, bgp_plus, generate, simulate, verify};
use burning::{BurningSequence, Dist, Graph, TieBreak};

/// Seeded corpus of 220 random graphs with 1..=12 vertices, cycling edge
/// densities from near-empty to dense so both connected and disconnected
/// graphs appear in force.
fn small_corpus() -> Vec<Graph> {
    let densities = [0.05, 0.12, 0.25, 0.45, 0.75];
    (0..220u64)
        .map(|i| {
            let n = 1 + (i as usize % 12);
            let p = densities[(i as usize / 12) % densities.len()];
            generate::gnp(n, p, 0xACCE_5500 ^ i).expect("corpus generation")
        })
        .collect()
}

fn solve_best(g: &Graph) -> usize {
    let dm = apsp(g);
    let r = bgp_plus(g, &dm, &TieBreak::LowestId).expect("solver");
    assert!(r.valid, "best-of-all-starts run produced an unverified sequence");
    r.sequence.len()
}

const INF: i32 = -1;

/// Fire distance from every vertex to the chosen set after each selection of
/// the worked spider-forest trace (N, K, A, E, I, G, J). Columns follow
/// vertex ids 0..=13, i.e. labels A..N; `INF` marks unreachable.
#[rustfmt::skip]
const TRACE_DISTS: [[i32; 14]; 7] = [
    [INF, INF, INF, INF, INF, INF, INF, INF, INF, INF, INF, INF, INF, 0],
    [INF, INF, INF, INF, INF, INF, INF, INF, INF, INF, 0, 1, 2, 0],
    [0, 1, 2, 3, 4, 3, 4, 3, 4, 4, 0, 1, 2, 0],
    [0, 1, 2, 1, 0, 3, 4, 3, 4, 4, 0, 1, 2, 0],
    [0, 1, 2, 1, 0, 3, 4, 1, 0, 2, 0, 1, 2, 0],
    [0, 1, 2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 0],
    [0, 1, 2, 1, 0, 1, 0, 1, 0, 0, 0, 1, 2, 0],
];

#[test]
fn criterion_1_worked_trace() {
    let t0 = Instant::now();
    let g = generate::tight_example();
    let dm = apsp(&g);
    let start = g.vertex_by_label("N").unwrap();
    let prefer: Vec<usize> = ["K", "A", "E", "I", "G", "J"]
        .iter()
        .map(|l| g.vertex_by_label(l).unwrap())
        .collect();
    let r = bgp(&g, &dm, start, &TieBreak::Preference(prefer)).unwrap();
    assert!(r.valid);
    assert_eq!(r.sequence.display(&g), "N,K,A,E,I,G,J");
    assert_eq!(r.sequence.len(), 7); // = 3b - 2 with b = 3

    // before any selection every vertex sits at infinite distance, which the
    // API reports as an explicit empty-set error rather than a value
    assert_eq!(distance_to_set(&dm, 0, &[]), Err(DistanceError::EmptySet));
    for (t, row) in TRACE_DISTS.iter().enumerate() {
        let prefix = &r.sequence.vertices()[..=t];
        for (v, &want) in row.iter().enumerate() {
            let want = if want < 0 {
                Dist::Unreachable
            } else {
                Dist::Finite(want as u32)
            };
            let got = distance_to_set(&dm, v, prefix).unwrap();
            assert_eq!(
                got,
                want,
                "d({}, first {} selections)",
                g.vertex_name(v),
                t + 1
            );
        }
    }

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "trace took {elapsed:?}");
    println!(
        "criterion 1 (worked trace N,K,A,E,I,G,J reproduced; all {} distance entries match): PASS",
        TRACE_DISTS.len() * 14 + 14
    );
}

#[test]
fn criterion_2_exact_small_fixtures() {
    let limits = ExactLimits::default();
    let fixtures: [(&str, Graph, u32); 2] = [
        ("spider-forest", generate::tight_example(), 3),
        ("path-9", generate::path(9).unwrap(), 3),
    ];
    for (name, g, want) in fixtures {
        let t0 = Instant::now();
        let res = burning_number_exact(&g, &limits).unwrap();
        assert_eq!(res.burning_number, want, "{name}");
        assert_eq!(res.witness.len() as u32, want, "{name} witness length");
        let dm = apsp(&g);
        assert_eq!(verify(&res.witness, &dm), Ok(true), "{name} witness must burn the graph");
        assert!(
            is_feasible(&g, &dm, (want - 1) as usize).is_none(),
            "{name}: some length-{} sequence burns the graph, so {want} is not minimal",
            want - 1
        );
        let elapsed = t0.elapsed();
        assert!(elapsed < Duration::from_secs(10), "{name} took {elapsed:?}");
    }
    println!("criterion 2 (exact burning number 3 on both fixtures, minimality re-checked one below): PASS");
}

#[test]
fn criterion_3_approximation_guarantees() {
    let t0 = Instant::now();
    let graphs = small_corpus();
    assert!(graphs.len() >= 200);
    let limits = ExactLimits::default();
    let (mut connected, mut disconnected) = (0usize, 0usize);
    let mut runs = 0usize;
    for g in &graphs {
        if connected_components(g).count == 1 {
            connected += 1;
        } else {
            disconnected += 1;
        }
        let dm = apsp(g);
        let b = burning_number_exact(g, &limits).unwrap().burning_number;
        let bound = (3 * b - 2) as usize;
        for start in 0..g.n() {
            let r = bgp(g, &dm, start, &TieBreak::LowestId).unwrap();
            assert!(r.valid, "adaptive greedy from {start} unverified (n = {})", g.n());
            assert!(
                r.sequence.len() <= bound,
                "adaptive greedy from {start}: length {} exceeds 3b - 2 = {bound}",
                r.sequence.len()
            );
            let seq = greedy_known_b(&dm, b, start, &TieBreak::LowestId).unwrap();
            assert_eq!(seq.len(), bound, "fixed-length greedy must emit exactly 3b - 2");
            assert_eq!(
                verify(&seq, &dm),
                Ok(true),
                "fixed-length greedy from {start} with k = b = {b} unverified"
            );
            runs += 2;
        }
    }
    assert!(
        connected >= 20 && disconnected >= 20,
        "corpus mix too lopsided: {connected} connected vs {disconnected} disconnected"
    );
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(300), "corpus sweep took {elapsed:?}");
    println!(
        "criterion 3 ({} graphs ({connected} connected, {disconnected} not), {runs} solver runs, zero bound violations): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_4_burning_semantics_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD15A_64EE);
    let pairs = 1000usize;
    for _ in 0..pairs {
        let n = rng.random_range(1..=50);
        let p = rng.random_range(0.02..0.30);
        let g = generate::gnp(n, p, rng.random()).unwrap();
        let dm = apsp(&g);
        let len = rng.random_range(1..=8usize);
        let seq: BurningSequence = (0..len).map(|_| rng.random_range(0..n)).collect();

        let (_, fully) = simulate(&seq, &g).unwrap();
        assert_eq!(
            verify(&seq, &dm).unwrap(),
            fully,
            "ball-union and frontier semantics disagree (n = {n}, seq = {:?})",
            seq.vertices()
        );
        let rounds = simulate_rounds(&seq, &g).unwrap();
        assert_eq!(rounds.len(), seq.len());
        for r in 1..=seq.len() {
            let prefix: BurningSequence = seq.vertices()[..r].iter().copied().collect();
            assert_eq!(
                rounds[r - 1],
                covered_set(&prefix, &dm).unwrap(),
                "round {r} burned set differs from the union of balls (n = {n}, seq = {:?})",
                seq.vertices()
            );
        }
    }
    println!("criterion 4 ({pairs} random (graph, sequence) pairs; both semantics agree on every round): PASS");
}

#[test]
fn criterion_5_benchmark_instances() {
    let t0 = Instant::now();

    let line = generate::path(49).unwrap();
    assert_eq!((line.n(), line.edge_count()), (49, 48), "line49nodes shape");
    let lattice2 = generate::grid2d(33, 33).unwrap();
    assert_eq!((lattice2.n(), lattice2.edge_count()), (1089, 2112), "lattice2D shape");
    let lattice3 = generate::grid3d(10, 10, 10).unwrap();
    assert_eq!((lattice3.n(), lattice3.edge_count()), (1000, 2700), "lattice3D shape");
    let ba = generate::preferential_attachment(1000, 2, 42).unwrap();
    assert_eq!((ba.n(), ba.edge_count()), (1000, 1996), "ba-1k-2k shape");

    let l_line = solve_best(&line);
    assert!(l_line <= 9, "line49nodes: {l_line} > 9");
    let l_2d = solve_best(&lattice2);
    assert!(l_2d <= 16, "lattice2D: {l_2d} > 16");
    let l_3d = solve_best(&lattice3);
    assert!(l_3d <= 11, "lattice3D: {l_3d} > 11");
    // our preferential-attachment graph is a fresh sample of the published
    // model, so hold it to the weakest published figure for that row (9)
    // rather than a sample-specific length
    let l_ba = solve_best(&ba);
    assert!(l_ba <= 9, "ba-1k-2k sample: {l_ba} > 9");

    // file-based rows run only when the (unbundled) datasets are present
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut file_notes = Vec::new();
    for (file, bound) in [
        ("ca-netscience.mtx", 12usize),
        ("web-polblogs.mtx", 12),
        ("socfb-Reed98.mtx", 9),
        ("econ-mahindas.mtx", 9),
    ] {
        let path = data.join(file);
        if !path.exists() {
            file_notes.push(format!("{file} absent (skipped)"));
            continue;
        }
        let parsed = load_graph(&path, None).unwrap();
        let len = solve_best(&parsed.graph);
        assert!(len <= bound, "{file}: {len} exceeds the published baseline {bound}");
        file_notes.push(format!("{file}: {len} <= {bound}"));
    }

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(600), "benchmark sweep took {elapsed:?}");
    println!(
        "criterion 5 (line49nodes {l_line} <= 9, lattice2D {l_2d} <= 16, lattice3D {l_3d} <= 11, ba-1k-2k {l_ba} <= 9; {}): PASS",
        file_notes.join("; ")
    );
}

#[test]
fn criterion_6_metric_sanity_and_witness_radius() {
    let mut graphs = small_corpus();
    graphs.push(generate::tight_example());
    graphs.push(generate::path(49).unwrap());
    graphs.push(generate::grid2d(5, 5).unwrap());
    let limits = ExactLimits::default();
    let mut witnesses = 0usize;
    for g in &graphs {
        let dm = apsp(g);
        let n = g.n();
        for u in 0..n {
            assert_eq!(dm.get(u, u), Dist::Finite(0), "identity at {u}");
            for v in 0..n {
                assert_eq!(dm.get(u, v), dm.get(v, u), "symmetry at ({u}, {v})");
                if u != v {
                    assert_ne!(dm.get(u, v), Dist::Finite(0), "distinct vertices at distance 0");
                }
                for w in 0..n {
                    if let (Dist::Finite(a), Dist::Finite(b)) = (dm.get(u, w), dm.get(w, v)) {
                        match dm.get(u, v) {
                            Dist::Finite(c) => {
                                assert!(c <= a + b, "triangle violated at ({u}, {w}, {v})")
                            }
                            Dist::Unreachable => {
                                panic!("({u}, {v}) reachable through {w} yet marked unreachable")
                            }
                        }
                    }
                }
            }
        }
        // every optimal witness keeps all vertices within radius b - 1 of
        // the chosen set; checked on the exact-solvable part of the corpus
        if n <= 12 {
            let res = burning_number_exact(g, &limits).unwrap();
            let radius = res.burning_number - 1;
            for v in 0..n {
                let d = distance_to_set(&dm, v, res.witness.vertices()).unwrap();
                assert!(
                    d <= Dist::Finite(radius),
                    "witness leaves vertex {v} at {d}, beyond b - 1 = {radius}"
                );
            }
            witnesses += 1;
        }
    }
    println!(
        "criterion 6 (metric axioms on {} graphs; witness radius bound on {witnesses}): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_7_bench_report_determinism() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let manifest = bench::load_manifest(&root.join("bench/table2.manifest")).unwrap();
    let base = root.join("bench");
    let mut first = bench::run_benchmark(&manifest, &base);
    let mut second = bench::run_benchmark(&manifest, &base);
    first.strip_timings();
    second.strip_timings();
    let (a, b) = (first.to_json(), second.to_json());
    assert_eq!(a, b, "same manifest and seed must reproduce the report byte-for-byte");
    println!(
        "criterion 7 (two benchmark runs of the checked-in manifest agree after timing strip; {} instances): PASS",
        first.instances.len()
    );
}
