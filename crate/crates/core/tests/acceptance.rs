//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

use std::collections::{BTreeMap, BTreeSet};
use std::panic;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::Zero;
use serde_json::Value;

use sepfam::counting::{self, ceil_log2};
use sepfam::matrix::encode;
use sepfam::oracle;
use sepfam::tree::{self, phi_forward, phi_inverse};
use sepfam::{Bipartition, BipartitionTuple, CharMatrix, Counter, FamilyOfBipartitions, LabeledGraph};

const FIXTURES: &str = include_str!("fixtures/oracle_grid.json");

fn bp(n: usize, block: &[usize]) -> Bipartition {
    Bipartition::from_block(n, block.iter().copied()).unwrap()
}

fn p_members() -> Vec<Bipartition> {
    vec![bp(4, &[3, 4]), bp(4, &[2, 4])]
}

fn q_members() -> Vec<Bipartition> {
    vec![bp(4, &[2, 3, 4]), bp(4, &[3, 4]), bp(4, &[4])]
}

fn matrix(rows: &[&str]) -> CharMatrix {
    let k = rows[0].len();
    let rows: Vec<Vec<u8>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect();
    CharMatrix::from_rows(k, &rows).unwrap()
}

fn within(limit: Duration, start: Instant) {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
}

fn criterion_1() {
    let p = FamilyOfBipartitions::new(4, p_members()).unwrap();
    let q = FamilyOfBipartitions::new(4, q_members()).unwrap();
    let pt = BipartitionTuple::new(4, p_members()).unwrap();
    let qt = BipartitionTuple::new(4, q_members()).unwrap();
    let mp_expected = matrix(&["00", "01", "10", "11"]);
    let mq_expected = matrix(&["000", "100", "110", "111"]);

    let start = Instant::now();
    let p_sep = p.is_separating();
    let p_min = p.is_minimal_separating();
    let q_sep = q.is_separating();
    let q_min = q.is_minimal_separating();
    let mp = encode(&pt);
    let mq = encode(&qt);
    within(Duration::from_millis(1), start);

    assert!(p_sep && p_min);
    assert!(q_sep && q_min);
    assert_eq!(q.len(), 3);
    assert_eq!(mp, mp_expected);
    assert_eq!(mq, mq_expected);
}

fn criterion_2() {
    let start = Instant::now();
    for (n, expected) in [(3, 3), (4, 16), (5, 125)] {
        let brute: BTreeSet<_> = oracle::brute_minimal_max_families(n).unwrap().into_iter().collect();
        let via_trees: BTreeSet<_> = tree::enumerate_minimal_max_families(n).unwrap().collect();
        assert_eq!(brute.len(), expected, "n={n}");
        assert_eq!(brute, via_trees, "n={n}");
    }
    let mut trees = 0;
    for t in tree::spanning_trees(6).unwrap() {
        assert_eq!(&phi_forward(&phi_inverse(&t)), t.graph());
        trees += 1;
    }
    assert_eq!(trees, 1296);
    within(Duration::from_secs(10), start);
}

fn criterion_3() {
    let q = FamilyOfBipartitions::new(4, q_members()).unwrap();
    let p = FamilyOfBipartitions::new(4, p_members()).unwrap();
    let path = LabeledGraph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
    let cycle = LabeledGraph::new(4, [(1, 2), (2, 4), (4, 3), (3, 1)]).unwrap();
    assert_eq!(phi_forward(&q), path);
    assert_eq!(phi_forward(&p), cycle);
}

fn fixture_grid(key: &str, n: usize) -> Vec<u64> {
    let v: Value = serde_json::from_str(FIXTURES).unwrap();
    v[key][n.to_string()]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect()
}

fn criterion_4() {
    let start = Instant::now();
    let c = Counter::for_grid(5, 16);
    for n in 2..=5 {
        let top = 1usize << (n - 1);
        let tau_fixture = fixture_grid("tau", n);
        let sigma_fixture = fixture_grid("sigma", n);
        for k in 1..=top {
            let brute = oracle::brute_count_separating(n, k, false).unwrap();
            assert_eq!(brute, tau_fixture[k], "tau brute n={n} k={k}");
            assert_eq!(c.tau_v1(n, k).unwrap().value, brute.value, "tau_v1 n={n} k={k}");
            if k >= 2 {
                assert_eq!(c.tau_v2(n, k).unwrap().value, brute.value, "tau_v2 n={n} k={k}");
            }
            let brute = oracle::brute_count_separating(n, k, true).unwrap();
            assert_eq!(brute, sigma_fixture[k], "sigma brute n={n} k={k}");
            assert_eq!(c.sigma_v1(n, k).unwrap().value, brute.value, "sigma_v1 n={n} k={k}");
            assert_eq!(c.sigma_v2(n, k).unwrap().value, brute.value, "sigma_v2 n={n} k={k}");
        }
    }
    assert_eq!(c.tau_v1(4, 2).unwrap(), 3);
    assert_eq!(c.tau_v1(4, 3).unwrap(), 32);
    assert_eq!(c.sigma_v1(4, 2).unwrap(), 3);
    assert_eq!(c.sigma_v1(4, 3).unwrap(), 29);
    assert_eq!(c.tau_v1(5, 3).unwrap(), 140);
    within(Duration::from_secs(60), start);
}

fn criterion_5() {
    let start = Instant::now();
    let c = Counter::for_grid(30, 30);
    for n in 2..=8 {
        let top = 20.min(1usize << (n - 1));
        for k in 1..=top {
            let check = c.sum_identity(n, k).unwrap();
            assert!(check.holds, "sum n={n} k={k}: {} != {}", check.lhs, check.rhs);
        }
        for k in 2..=top {
            for (name, check) in [("sigma_tau", c.sigma_tau(n, k)), ("transpose", c.transpose_identity(n, k))] {
                let check = check.unwrap();
                assert!(check.holds, "{name} n={n} k={k}: {} != {}", check.lhs, check.rhs);
            }
        }
    }
    for k in 0..=30 {
        for i in 0..=k {
            assert!(c.stirling1_identity(k, i).unwrap().holds, "stirling1 k={k} i={i}");
        }
    }
    within(Duration::from_secs(10), start);
}

fn criterion_6() {
    for n in 2..=5 {
        let m = counting::min_separating_size(n);
        let profile: BTreeMap<usize, u64> = oracle::brute_minimal_size_profile(n).unwrap();
        let formula = counting::count_min_size_families(n).unwrap();
        assert_eq!(formula, profile[&m], "n={n}");
        assert_eq!(formula.value, oracle::brute_count_separating(n, m, false).unwrap().value);
        assert!(profile.keys().all(|&s| s >= ceil_log2(n) && s < n), "n={n}");
    }
    assert_eq!(counting::count_min_size_families(4).unwrap(), 3);
    assert_eq!(counting::count_min_size_families(5).unwrap(), 140);

    for k in 1..=7 {
        let least = |proper: bool| {
            (2..=5)
                .find(|&n| !oracle::brute_count_separating(n, k, proper).unwrap().is_zero())
                .unwrap()
        };
        if k >= 2 {
            let n = counting::min_ground_size_arbitrary(k).unwrap();
            assert_eq!(n, least(false), "arbitrary k={k}");
            let count = oracle::brute_count_separating(n, k, false).unwrap();
            assert_eq!(counting::count_min_ground_arbitrary(k).unwrap().value, count.value);
        }
        let n = counting::min_ground_size_proper(k).unwrap();
        assert_eq!(n, least(true), "proper k={k}");
        let count = oracle::brute_count_separating(n, k, true).unwrap();
        assert_eq!(counting::count_min_ground_proper(k).unwrap().value, count.value);
    }
}

fn criterion_7() {
    let c = Counter::for_grid(8, 20);
    let mut cells = 0;
    for n in 2..=8 {
        for k in 1..=20 {
            for frac in [c.tau_v1_fraction(n, k).unwrap(), c.sigma_v1_fraction(n, k).unwrap()] {
                let Some((num, den)) = frac else { continue };
                let den = num_bigint::BigInt::from(den);
                let (_, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "n={n} k={k}: remainder {rem}");
                cells += 1;
            }
        }
    }
    assert!(cells > 100);
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sepfam")).args(args).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    (out.status.code().unwrap_or(-1), text)
}

fn criterion_8() {
    let (code, out) = run_cli(&["verify", "--n-max", "5", "--k-max", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verify: PASS"), "{out}");
    let (code, out) = run_cli(&["verify", "--n-max", "5", "--k-max", "8", "--perturb-stirling1", "4,2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("FAIL stirling1_identity"), "{out}");
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 8] = [
        ("two-family fixture: separation, minimality, characteristic matrices", criterion_1),
        ("trees and maximum minimal families: Cayley counts, set equality, round trip", criterion_2),
        ("graphs of the two-family fixture: path and 4-cycle", criterion_3),
        ("closed forms agree with brute force for n <= 5", criterion_4),
        ("identities for n <= 8, k <= 20 and first-kind Stirling for k <= 30", criterion_5),
        ("minimum-size and minimum-ground propositions", criterion_6),
        ("exact division by k! in the first forms", criterion_7),
        ("verify exits 0, and 1 under a perturbed Stirling entry", criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(f);
        let elapsed = start.elapsed();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {}: {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
