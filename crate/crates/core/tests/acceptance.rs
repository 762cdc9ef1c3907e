//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::num::NonZeroUsize;
use std::time::{Duration, Instant};

use qrsort_core::report::{aggregate, write_raw_csv, AggregateRow};
use qrsort_core::rng::{bounded, bounded_i64, fisher_yates_shuffle, rng_from_seed, ExperimentRng};
use qrsort_core::{
    compute_quotient_keys, compute_remainder_keys, counting_sort_value_slice, merge_sort_slice,
    pass_cost, qr_sort, qr_sort_auto_slice, qr_sort_slice, radix_sort_lsd_slice,
    run_sweep_with_jobs, select_divisor, AlgorithmId, CostLedger, DivisorStrategy, ElementSeq,
    ExperimentConfig, QrKeyMode, Tagged, ValueRange, DEFAULT_BIN_CAP,
};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = fn() -> Outcome;

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Stable comparison-sort oracle: std's merge-based `sort_by_key` is stable.
fn oracle(items: &[Tagged]) -> Vec<Tagged> {
    let mut v = items.to_vec();
    v.sort_by_key(|t| t.value);
    v
}

fn tagged(values: &[i64]) -> Vec<Tagged> {
    values
        .iter()
        .enumerate()
        .map(|(i, &value)| Tagged {
            value,
            tag: i as u32,
        })
        .collect()
}

fn random_values(rng: &mut ExperimentRng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| bounded_i64(rng, lo, hi)).collect()
}

fn oracle_correctness() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(1);
    let mut checked = 0usize;
    for case in 0..1000 {
        let n = bounded(&mut rng, 4096) as usize + 1;
        let a = bounded_i64(&mut rng, -1_000_000, 1_000_000);
        let b = bounded_i64(&mut rng, -1_000_000, 1_000_000);
        let (lo, hi) = (a.min(b), a.max(b));
        let values = random_values(&mut rng, n, lo, hi);
        let m = ValueRange::of(&values).unwrap().unwrap().m();
        let shifted: Vec<i64> = values.iter().map(|v| v + 1_000_000).collect();

        for d in [1, 2, m.isqrt().max(1), m, m + 1] {
            for (mode, input, divisor) in [
                (QrKeyMode::General, &values, d),
                (QrKeyMode::Bitwise, &values, d.next_power_of_two()),
                (QrKeyMode::SubtractionFree, &shifted, d),
            ] {
                let items = tagged(input);
                let got = qr_sort_slice(&items, divisor, mode, &mut CostLedger::new()).unwrap();
                if got != oracle(&items) {
                    return outcome(
                        false,
                        format!("case {case}: n={n} d={divisor} mode={mode} mismatch"),
                    );
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(30),
        format!(
            "{checked} sorts equal the stable oracle in {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn stability() -> Outcome {
    let mut rng = rng_from_seed(2);
    let mut violations = 0usize;
    for _ in 0..200 {
        let n = bounded(&mut rng, 2047) as usize + 2;
        let distinct = (n / 2).max(1) as u64;
        let pool = random_values(&mut rng, distinct as usize, -50_000, 50_000);
        let values: Vec<i64> = (0..n)
            .map(|_| pool[bounded(&mut rng, distinct) as usize])
            .collect();
        let items = tagged(&values);
        let expected = oracle(&items);

        let outputs = [
            qr_sort_auto_slice(&items, DivisorStrategy::SqrtRange, &mut CostLedger::new()).unwrap(),
            merge_sort_slice(&items, &mut CostLedger::new()),
            counting_sort_value_slice(&items, &mut CostLedger::new(), DEFAULT_BIN_CAP).unwrap(),
            radix_sort_lsd_slice(&items, n as u64, &mut CostLedger::new()).unwrap(),
        ];
        violations += outputs.iter().filter(|o| **o != expected).count();
    }
    outcome(
        violations == 0,
        format!("{violations} violations over 200 cases x 4 stable sorts"),
    )
}

fn lemma_property() -> Outcome {
    let mut rng = rng_from_seed(3);
    let (mut applicable, mut violations) = (0u64, 0u64);
    for _ in 0..1_000_000 {
        let si = bounded_i64(&mut rng, -1_000_000_000, 1_000_000_000);
        let sj = si + 1 + bounded(&mut rng, 1_000_000) as i64;
        let min = si - bounded(&mut rng, 1_000_000) as i64;
        let bits = 1 + bounded(&mut rng, 21);
        let d = 1 + bounded(&mut rng, 1 << bits);
        let items = [min, si, sj];
        let range = ValueRange::of(&items).unwrap().unwrap();
        let mut l = CostLedger::new();
        let r = compute_remainder_keys(&items, &range, d, QrKeyMode::General, &mut l).unwrap();
        let q = compute_quotient_keys(&items, &range, d, QrKeyMode::General, &mut l).unwrap();
        if r.keys()[1] >= r.keys()[2] {
            applicable += 1;
            if q.keys()[1] >= q.keys()[2] {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("{violations} violations among {applicable} triples with r_i >= r_j"),
    )
}

fn variant_equivalence() -> Outcome {
    let mut rng = rng_from_seed(4);
    let mut mismatches = 0usize;
    for c in 0..=30u32 {
        let d = 1u64 << c;
        let values = random_values(&mut rng, 100_000, -(1 << 40), 1 << 40);
        let range = ValueRange::of(&values).unwrap().unwrap();
        let mut l = CostLedger::new();
        let keys = |mode| {
            let mut l = CostLedger::new();
            (
                compute_remainder_keys(&values, &range, d, mode, &mut l).unwrap(),
                compute_quotient_keys(&values, &range, d, mode, &mut l).unwrap(),
            )
        };
        let (gr, gq) = keys(QrKeyMode::General);
        let (br, bq) = keys(QrKeyMode::Bitwise);
        mismatches += gr
            .keys()
            .iter()
            .zip(br.keys())
            .filter(|(a, b)| a != b)
            .count();
        mismatches += gq
            .keys()
            .iter()
            .zip(bq.keys())
            .filter(|(a, b)| a != b)
            .count();
        mismatches += usize::from(gq.key_bound() != bq.key_bound());

        let non_negative: Vec<i64> = values.iter().map(|v| v.abs()).collect();
        let seq = ElementSeq::new(non_negative).unwrap();
        let sd = 1 + bounded(&mut rng, 1 << 22);
        let general = qr_sort(&seq, sd, QrKeyMode::General, &mut l).unwrap();
        let free = qr_sort(&seq, sd, QrKeyMode::SubtractionFree, &mut l).unwrap();
        mismatches += general
            .as_slice()
            .iter()
            .zip(free.as_slice())
            .filter(|(a, b)| a != b)
            .count();
    }
    outcome(
        mismatches == 0,
        format!("{mismatches} mismatches over c in 0..=30, 1e5 values each"),
    )
}

fn bypass() -> Outcome {
    let mut rng = rng_from_seed(5);
    for case in 0..100 {
        let n = bounded(&mut rng, 5000) as usize + 2;
        let values = random_values(&mut rng, n, -100_000, 100_000);
        let seq = ElementSeq::new(values).unwrap();
        let mut l = CostLedger::new();
        let out = qr_sort(&seq, seq.m() + 1, QrKeyMode::General, &mut l).unwrap();
        // The only division left is the single max_quot computation.
        let quotient_key_divisions = l.divisions - 1;
        if quotient_key_divisions != 0 || l.counting_passes != 1 || !out.is_sorted() {
            return outcome(false, format!("case {case}: {l:?}"));
        }
    }
    outcome(
        true,
        "100 cases: 0 quotient-key divisions, 1 counting pass, sorted",
    )
}

fn divisor_near_optimality() -> Outcome {
    let mut worst = 0u64;
    for m in 1..=10_000u64 {
        let best = (1..=m + 1).map(|d| pass_cost(m, d)).min().unwrap();
        let chosen = pass_cost(m, select_divisor(m, DivisorStrategy::SqrtRange).unwrap());
        if chosen > best + 1 {
            return outcome(false, format!("m={m}: chosen {chosen}, optimum {best}"));
        }
        worst = worst.max(chosen - best);
    }
    outcome(
        true,
        format!("max excess over brute-force optimum: {worst} bin(s)"),
    )
}

fn means(rows: &[AggregateRow], algorithm: AlgorithmId) -> Vec<(usize, f64)> {
    rows.iter()
        .filter(|r| r.algorithm == algorithm)
        .map(|r| (r.n, r.mean_units))
        .collect()
}

fn desk_ordering() -> Outcome {
    let start = Instant::now();
    let cfg = ExperimentConfig {
        min_length: 100,
        max_length: 10_000,
        length_inc: 100,
        min_value: 0,
        max_value: 500,
        trial_count: 10,
        seed: 2025,
        divisor_strategy: DivisorStrategy::PowerOfTwo,
        record_wall_time: false,
        ..ExperimentConfig::default()
    };
    let out = run_sweep_with_jobs(&cfg, NonZeroUsize::new(4).unwrap()).unwrap();
    let rows = aggregate(&out.records);
    let qr = means(&rows, AlgorithmId::Qr);
    let others = [
        AlgorithmId::Merge,
        AlgorithmId::Quick,
        AlgorithmId::Radix,
        AlgorithmId::Counting,
    ]
    .map(|a| (a, means(&rows, a)));

    let points = qr.len();
    let mut hold = 0usize;
    let mut summary = Vec::new();
    for (alg, series) in &others {
        let ok = qr
            .iter()
            .zip(series)
            .filter(|((n1, q), (n2, o))| {
                assert_eq!(n1, n2);
                if *alg == AlgorithmId::Counting {
                    o < q
                } else {
                    q < o
                }
            })
            .count();
        summary.push(format!("{alg}:{ok}/{points}"));
        hold = if hold == 0 { ok } else { hold.min(ok) };
    }
    let fraction = hold as f64 / points as f64;
    let elapsed = start.elapsed();
    outcome(
        fraction >= 0.95 && elapsed < Duration::from_secs(120),
        format!(
            "orderings hold at {} ({:.0}% min), {:.1}s",
            summary.join(" "),
            100.0 * fraction,
            elapsed.as_secs_f64()
        ),
    )
}

fn crossover() -> Outcome {
    let start = Instant::now();
    let cfg = ExperimentConfig {
        min_length: 1_000,
        max_length: 100_000,
        length_inc: 1_000,
        min_value: 0,
        max_value: 499_999,
        trial_count: 3,
        seed: 2025,
        algorithms: vec![AlgorithmId::Counting, AlgorithmId::Qr],
        divisor_strategy: DivisorStrategy::SqrtRange,
        record_wall_time: false,
        ..ExperimentConfig::default()
    };
    let out = run_sweep_with_jobs(&cfg, NonZeroUsize::new(4).unwrap()).unwrap();
    let rows = aggregate(&out.records);
    let qr = means(&rows, AlgorithmId::Qr);
    let counting = means(&rows, AlgorithmId::Counting);
    let qr_wins: Vec<bool> = qr.iter().zip(&counting).map(|(q, c)| q.1 < c.1).collect();

    // A threshold exists iff the QR-wins flags form a non-empty prefix
    // followed by a non-empty suffix of Counting wins.
    let split = qr_wins.iter().position(|w| !w);
    let exists = matches!(split, Some(k) if k > 0 && qr_wins[k..].iter().all(|w| !w));
    let elapsed = start.elapsed();
    let at = split.map_or("none".to_string(), |k| qr[k].0.to_string());
    outcome(
        exists && elapsed < Duration::from_secs(300),
        format!(
            "m=500000: Counting overtakes QR at n={at}, {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn linear_growth() -> Outcome {
    let mut rng = rng_from_seed(9);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in 1..=10usize {
        let n = k * 10_000;
        let mut values: Vec<i64> = (0..n as i64).collect();
        fisher_yates_shuffle(&mut values, &mut rng);
        let seq = ElementSeq::new(values).unwrap();
        assert_eq!(seq.m(), n as u64);
        let mut l = CostLedger::new();
        qr_sort(&seq, seq.m() + 1, QrKeyMode::General, &mut l).unwrap();
        xs.push((n as f64).ln());
        ys.push((l.total_units() as f64).ln());
    }
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = cov / var;
    outcome(
        (slope - 1.0).abs() <= 0.05,
        format!("log-log slope {slope:.4}"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig {
        min_length: 100,
        max_length: 3_000,
        length_inc: 100,
        min_value: -250,
        max_value: 250,
        trial_count: 4,
        seed: 77,
        record_wall_time: false,
        ..ExperimentConfig::default()
    };
    let mut files = Vec::new();
    for (i, jobs) in [1usize, 1, 4].into_iter().enumerate() {
        let out = run_sweep_with_jobs(&cfg, NonZeroUsize::new(jobs).unwrap()).unwrap();
        let path = dir.path().join(format!("raw{i}.csv"));
        write_raw_csv(&path, &out.records).unwrap();
        files.push(std::fs::read(path).unwrap());
    }
    let same = files.windows(2).all(|w| w[0] == w[1]);
    outcome(
        same,
        format!("3 runs (jobs 1, 1, 4), {} bytes each", files[0].len()),
    )
}

fn metering_audit() -> Outcome {
    // Hand trace in tests/ledger_audit.rs: 90 accesses, 6 comparisons,
    // 5 divisions, 4 modulos.
    let seq = ElementSeq::new(vec![3, 0, 2, 1]).unwrap();
    let mut l = CostLedger::new();
    qr_sort(&seq, 2, QrKeyMode::General, &mut l).unwrap();
    let got = (
        l.array_accesses,
        l.comparisons,
        l.divisions,
        l.modulos,
        l.bitwise_ops,
        l.total_units(),
    );
    outcome(
        got == (90, 6, 5, 4, 0, 231),
        format!("ledger {got:?}, expected (90, 6, 5, 4, 0, 231)"),
    )
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("1 oracle correctness", oracle_correctness),
        ("2 stability", stability),
        ("3 quotient-remainder lemma", lemma_property),
        ("4 key variant equivalence", variant_equivalence),
        ("5 quotient bypass", bypass),
        ("6 divisor near-optimality", divisor_near_optimality),
        ("7 desk-scale ordering (m=501)", desk_ordering),
        ("8 QR/Counting crossover", crossover),
        ("9 linear growth with d=m+1", linear_growth),
        ("10 determinism", determinism),
        ("11 metering audit", metering_audit),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] criterion {name}: {} ({:.2}s)",
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
