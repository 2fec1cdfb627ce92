//! Acceptance gate: one test per criterion, each printing a single PASS line
//! (visible with --nocapture) and asserting exact results with no tolerance.

use cyclecover::arith::{rational_string, FieldSpec, Scalar};
use cyclecover::complex::{apply_boundary, boundary_of_simplex, SimplicialComplex};
use cyclecover::decomp::{build_decomposition_tree, validate_tree};
use cyclecover::extremal::{gamma_bruteforce, gamma_partition};
use cyclecover::gen::{
    gen_colex_family, gen_complete_complex, gen_graph_cycle, gen_vector_space_nonzero, generate,
    GenSpec, Generated,
};
use cyclecover::matroid::{CircuitCheck, LinearMatroid};
use cyclecover::verify::{
    analyze_matroid, verify_covmat, verify_erdos_gallai, verify_lnpr, verify_simplicial,
    AnalyzeOptions, BoundId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

fn pass(n: usize, title: &str, detail: &str, elapsed: Duration) {
    println!("acceptance criterion {n} ({title}): PASS - {detail} [{elapsed:.2?}]");
}

/// Random matroid over GF(p) with nonzero (hence loop-free) columns.
fn random_prime_matroid(p: u32, seed: u64, rows: usize, cols: usize) -> LinearMatroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = FieldSpec::prime(p as u64).unwrap();
    let columns: Vec<Vec<Scalar>> = (0..cols)
        .map(|_| loop {
            let col: Vec<Scalar> =
                (0..rows).map(|_| field.integer(rng.gen_range(0..p) as i64)).collect();
            if col.iter().any(|s| !s.is_zero()) {
                break col;
            }
        })
        .collect();
    LinearMatroid::from_columns(field, None, &columns).unwrap()
}

fn graph_matroid(spec_text: &str) -> LinearMatroid {
    let spec = GenSpec::parse(spec_text, FieldSpec::Rational, 0).unwrap();
    match generate(&spec).unwrap() {
        Generated::Complex(k) => LinearMatroid::from_complex(&k, 1, FieldSpec::Rational).unwrap(),
        Generated::Matroid(_) => unreachable!("graph specs generate complexes"),
    }
}

fn linial_meshulam(n: u32, extra: u64, seed: u64) -> SimplicialComplex {
    let base = (n as u64 - 1) * (n as u64 - 2) / 2;
    let spec = GenSpec::parse(
        &format!("linial-meshulam:n={n},d=2,m={},seed={seed}", base + extra),
        f2(),
        0,
    )
    .unwrap();
    match generate(&spec).unwrap() {
        Generated::Complex(k) => k,
        Generated::Matroid(_) => unreachable!(),
    }
}

#[test]
fn criterion_1_fano_benchmark() {
    let start = Instant::now();
    let fano = gen_vector_space_nonzero(2, 3).unwrap();
    let report = analyze_matroid(&fano, &AnalyzeOptions::default()).unwrap();
    assert_eq!(report.c, 4, "maximum circuit of the Fano matroid");
    assert!(report.c_exact);
    assert_eq!(report.gamma, Some(3), "covering number");
    assert_eq!(
        report.density.as_ref().map(rational_string).as_deref(),
        Some("7/3"),
        "exact density alongside its ceiling"
    );
    assert!(
        report.notes.iter().any(|n| n.contains("ceiling") && n.contains("7/3")),
        "ceiling discrepancy flagged: {:?}",
        report.notes
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(1, "fano benchmark", "c=4, gamma=3, density 7/3 flagged", elapsed);
}

#[test]
fn criterion_2_decomposition_tree_suite() {
    let start = Instant::now();
    let mut built = 0;
    let mut seed = 0u64;
    while built < 200 {
        assert!(seed < 3000, "not enough connected instances in the seed stream");
        let rows = 4 + (seed % 3) as usize;
        let cols = 10 + (seed % 9) as usize;
        let m = random_prime_matroid(2, seed, rows, cols);
        seed += 1;
        if m.components().len() != 1 {
            continue;
        }
        let tree = build_decomposition_tree(&m, 10_000_000).unwrap();
        let report = validate_tree(&tree, 10_000_000);
        assert!(report.passed, "seed {}: {:?}", seed - 1, report.checks);
        let total: usize = tree.nodes().iter().map(|(_, n)| n.circuit.len() - 1).sum();
        assert_eq!(total, m.rank(), "rank identity at seed {}", seed - 1);
        built += 1;
    }
    for n in 4..=7 {
        let m = graph_matroid(&format!("complete:n={n}"));
        let tree = build_decomposition_tree(&m, 10_000_000).unwrap();
        let report = validate_tree(&tree, 10_000_000);
        assert!(report.passed, "graphic K_{n}: {:?}", report.checks);
        let total: usize = tree.nodes().iter().map(|(_, node)| node.circuit.len() - 1).sum();
        assert_eq!(total, m.rank(), "rank identity on K_{n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(2, "decomposition trees", "200 random GF(2) + K_4..K_7 all validate", elapsed);
}

#[test]
fn criterion_3_partition_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0;
    for seed in 0..300u64 {
        let m = match seed % 3 {
            0 => random_prime_matroid(2, seed, 4 + (seed % 3) as usize, 8 + (seed % 7) as usize),
            1 => random_prime_matroid(3, seed, 4 + (seed % 2) as usize, 8 + (seed % 6) as usize),
            _ => {
                let nv = 6 + seed % 3;
                let ne = 8 + (seed % 6).min(nv * (nv - 1) / 2 - 8);
                graph_matroid(&format!("random-gnm:n={nv},m={ne},seed={seed}"))
            }
        };
        assert!(m.n_elements() <= 16);
        let cover = gamma_partition(&m).unwrap();
        let brute = gamma_bruteforce(&m, false).unwrap();
        assert_eq!(cover.gamma, brute.gamma, "gamma mismatch at seed {seed}");

        // The partition must be a genuine cover by independent sets.
        let mut seen = vec![false; m.n_elements()];
        for block in &cover.partition {
            assert!(m.is_independent(block).unwrap(), "dependent block at seed {seed}");
            for &e in block {
                assert!(!seen[e], "element {e} covered twice at seed {seed}");
                seen[e] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "cover misses elements at seed {seed}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert_eq!(checked, 300);
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    pass(3, "partition oracle equivalence", "300 instances, partition == brute force", elapsed);
}

#[test]
fn criterion_4_covering_bound_zero_violations() {
    let start = Instant::now();
    let mut instances: Vec<(String, LinearMatroid)> = Vec::new();
    for (q, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        instances.push((
            format!("vector-space q={q} k={k}"),
            gen_vector_space_nonzero(q, k).unwrap(),
        ));
    }
    for n in 4..=7 {
        instances.push((format!("graphic K_{n}"), graph_matroid(&format!("complete:n={n}"))));
    }
    for d in 1..=4u32 {
        let k = gen_complete_complex(d + 2, d as usize).unwrap();
        let m = LinearMatroid::from_complex(&k, d as usize, FieldSpec::Rational).unwrap();
        instances.push((format!("sphere boundary d={d}"), m));
    }
    for seed in 0..30u64 {
        let k = linial_meshulam(5 + (seed % 3) as u32, 1 + seed % 3, seed);
        let m = LinearMatroid::from_complex(&k, 2, f2()).unwrap();
        instances.push((format!("linial-meshulam seed={seed}"), m));
    }
    for seed in 0..60u64 {
        let p = if seed % 2 == 0 { 2 } else { 3 };
        instances.push((
            format!("random GF({p}) seed={seed}"),
            random_prime_matroid(p, 1000 + seed, 4 + (seed % 3) as usize, 9 + (seed % 6) as usize),
        ));
    }
    assert!(instances.len() >= 100, "corpus too small: {}", instances.len());

    let mut checked = 0;
    for (name, m) in &instances {
        let verdict = verify_covmat(m, 50_000_000, false).unwrap();
        assert!(verdict.holds, "covering bound violated on {name}");
        if !verdict.vacuous {
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(checked >= 100, "only {checked} substantive instances");
    pass(
        4,
        "covering bound",
        &format!("{checked} substantive instances, zero violations"),
        elapsed,
    );
}

#[test]
fn criterion_5_square_root_bounds_zero_violations() {
    let start = Instant::now();
    let mut cases: Vec<(String, SimplicialComplex, usize, FieldSpec, u64)> = Vec::new();
    for d in 1..=4usize {
        let k = gen_complete_complex(d as u32 + 2, d).unwrap();
        cases.push((format!("sphere d={d}"), k, d, FieldSpec::Rational, 10_000_000));
    }
    for n in 4..=7u32 {
        let k = gen_complete_complex(n, 2).unwrap();
        // K_7^(2) needs about 13M nodes for the exact maximum.
        cases.push((format!("K_{n}^(2)"), k, 2, f2(), 50_000_000));
    }
    // The random corpus keeps only pure draws: every edge must lie in a
    // sampled triangle, since the bounds assume a pure complex.
    let mut lm = 0;
    let mut seed = 0u64;
    while lm < 100 {
        assert!(seed < 2000, "not enough pure draws in the seed stream");
        let n = 5 + (seed % 3) as u32;
        let k = linial_meshulam(n, 1 + seed % 4, seed);
        seed += 1;
        if !k.is_pure() {
            continue;
        }
        cases.push((format!("LM n={n} seed={}", seed - 1), k, 2, f2(), 50_000_000));
        lm += 1;
    }

    let mut checked = 0;
    for (name, k, d, field, budget) in &cases {
        let verdicts = verify_simplicial(k, *d, *field, *budget, false, 0).unwrap();
        for v in &verdicts {
            if matches!(v.bound_id, BoundId::SimplicialK | BoundId::SimplicialDensity) {
                assert!(v.holds && !v.vacuous, "{:?} violated on {name}", v.bound_id);
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(checked, cases.len() * 2, "both bounds on every case");
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    pass(
        5,
        "square-root bounds",
        &format!("{} complexes x 2 bounds, zero violations", cases.len()),
        elapsed,
    );
}

#[test]
fn criterion_6_colex_rank_bound() {
    let start = Instant::now();
    let mut equalities = 0;
    for (d, x) in [(1usize, 2u64), (1, 3), (2, 3), (2, 4), (3, 4)] {
        let n = x as u32 + 3;
        let verdict = verify_lnpr(n, d, x, f2()).unwrap();
        assert!(verdict.holds, "rank bound failed at d={d}, x={x}");
        assert_eq!(verdict.witness["tight"], true, "equality expected at d={d}, x={x}");
        assert_eq!(verdict.witness["min_vertex_basis"], true);
        equalities += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(
        6,
        "colex rank bound",
        &format!("5 parameter pairs, equality observed in {equalities}/5"),
        elapsed,
    );
}

#[test]
fn criterion_7_edge_count_cycle_bound() {
    let start = Instant::now();
    let mut substantive = 0;
    let mut check = |k: &SimplicialComplex, name: &str| {
        let f0 = k.faces(0).len() as u64;
        let f1 = k.faces(1).len() as u64;
        if f0 < 2 {
            return;
        }
        let k_max = (f1 - 1) / (2 * (f0 - 1));
        for kk in 1..=k_max {
            let v = verify_erdos_gallai(k, kk, f2(), 10_000_000, 0).unwrap();
            assert!(v.holds && !v.vacuous, "violated on {name} at k={kk}");
            substantive += 1;
        }
        // One step past the threshold the hypothesis fails.
        let v = verify_erdos_gallai(k, k_max + 1, f2(), 10_000_000, 0).unwrap();
        assert!(v.vacuous, "{name} at k={} should be vacuous", k_max + 1);
    };
    for n in 3..=9u32 {
        check(&gen_complete_complex(n, 1).unwrap(), &format!("K_{n}"));
    }
    for seed in 0..100u64 {
        let n = 5 + seed % 8;
        let max_edges = n * (n - 1) / 2;
        let m = (8 + (seed * 7) % 33).min(max_edges);
        let spec =
            GenSpec::parse(&format!("random-gnm:n={n},m={m},seed={seed}"), f2(), 0).unwrap();
        let k = match generate(&spec).unwrap() {
            Generated::Complex(k) => k,
            Generated::Matroid(_) => unreachable!(),
        };
        check(&k, &format!("gnm n={n} m={m} seed={seed}"));
    }
    let elapsed = start.elapsed();
    assert!(substantive >= 20, "only {substantive} substantive checks");
    pass(
        7,
        "edge-count cycle bound",
        &format!("K_3..K_9 + 100 random graphs, {substantive} substantive checks"),
        elapsed,
    );
}

#[test]
fn criterion_8_structural_oracles() {
    let start = Instant::now();

    // dd = 0 on every face of every corpus complex, over both fields.
    let mut complexes: Vec<SimplicialComplex> = vec![
        gen_complete_complex(6, 2).unwrap(),
        gen_complete_complex(5, 3).unwrap(),
        gen_complete_complex(6, 4).unwrap(),
        gen_graph_cycle(6).unwrap(),
        gen_colex_family(7, 2, 10).unwrap(),
    ];
    for seed in 0..10 {
        complexes.push(linial_meshulam(6, 2, seed));
    }
    let mut faces_checked = 0;
    for k in &complexes {
        for d in 2..=k.dimension() {
            for s in k.faces(d) {
                for field in [f2(), FieldSpec::Rational] {
                    let dd = apply_boundary(&boundary_of_simplex(s, field), field).unwrap();
                    assert!(dd.is_zero(), "dd != 0 at {s} over {field:?}");
                }
                faces_checked += 1;
            }
        }
    }

    // Circuit certificates are explicit kernel vectors: the signed
    // combination of the circuit's columns vanishes coordinatewise.
    let mut certificates = 0;
    for m in [
        gen_vector_space_nonzero(2, 3).unwrap(),
        graph_matroid("complete:n=5"),
        LinearMatroid::from_complex(
            &gen_complete_complex(4, 2).unwrap(),
            2,
            FieldSpec::Rational,
        )
        .unwrap(),
        random_prime_matroid(3, 77, 4, 10),
    ] {
        let list = m.enumerate_circuits(None, None, false).unwrap();
        for circuit in &list.circuits {
            let cert = match m.is_circuit(circuit).unwrap() {
                CircuitCheck::Circuit { certificate } => certificate,
                other => panic!("{circuit:?} not recognized as circuit: {other:?}"),
            };
            assert_eq!(cert.len(), circuit.len());
            assert!(cert.iter().all(|c| !c.is_zero()), "certificate must use every element");
            let mut sum = vec![m.field().zero(); m.n_rows()];
            for (&e, coeff) in circuit.iter().zip(&cert) {
                for (acc, entry) in sum.iter_mut().zip(m.column(e)) {
                    *acc = acc.add(&entry.mul(coeff).unwrap()).unwrap();
                }
            }
            assert!(sum.iter().all(Scalar::is_zero), "kernel vector fails for {circuit:?}");
            certificates += 1;
        }
    }

    // The union-find component path agrees with the circuit-sharing relation.
    let mut comparisons = 0;
    for seed in 0..40u64 {
        let p = if seed % 2 == 0 { 2 } else { 3 };
        let m = random_prime_matroid(p, 500 + seed, 3 + (seed % 3) as usize, 8 + (seed % 7) as usize);
        assert!(m.n_elements() <= 14);
        assert_eq!(
            m.components(),
            m.components_bruteforce(false).unwrap(),
            "component mismatch at seed {seed}"
        );
        comparisons += 1;
    }
    for n in 4..=6 {
        let m = graph_matroid(&format!("complete:n={n}"));
        assert_eq!(m.components(), m.components_bruteforce(false).unwrap());
        comparisons += 1;
    }

    let elapsed = start.elapsed();
    pass(
        8,
        "structural oracles",
        &format!(
            "dd=0 on {faces_checked} faces, {certificates} kernel certificates, {comparisons} component checks"
        ),
        elapsed,
    );
}

#[test]
fn criterion_9_cli_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_cyclecover");
    let invocations: Vec<Vec<&str>> = vec![
        vec!["analyze", "--gen", "complete-complex:n=5,d=2"],
        vec!["verify", "--gen", "vector-space:q=2,k=3"],
        vec!["decompose", "--gen", "random-gnm:n=8,m=12", "--seed", "3"],
        vec!["generate", "--gen", "linial-meshulam:n=7,d=2,m=15", "--seed", "9"],
        vec!["oracle", "--gen", "vector-space:q=2,k=2", "--op", "circuits"],
        vec!["max-cycle", "--gen", "complete:n=6", "--field", "rational"],
        vec!["gamma", "--gen", "vector-space:q=3,k=2"],
    ];
    for args in &invocations {
        let run = || {
            let out = std::process::Command::new(bin)
                .args(args)
                .output()
                .expect("binary runs");
            (out.status.code(), out.stdout)
        };
        let (code_a, stdout_a) = run();
        let (code_b, stdout_b) = run();
        assert_eq!(code_a, code_b, "exit codes differ for {args:?}");
        assert_eq!(stdout_a, stdout_b, "stdout differs for {args:?}");
        assert!(!stdout_a.is_empty(), "no report for {args:?}");
    }
    let elapsed = start.elapsed();
    pass(
        9,
        "cli determinism",
        &format!("{} invocations byte-identical across reruns", invocations.len()),
        elapsed,
    );
}
