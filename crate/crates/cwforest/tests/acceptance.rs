//! Acceptance suite. Each test covers one criterion, checks it exactly
//! (no tolerances anywhere), and prints a single PASS/FAIL line.

use std::process::Command;
use std::time::{Duration, Instant};

use cwforest::classical;
use cwforest::forest::{self, ForestConfig};
use cwforest::matrix;
use cwforest::verify;
use cwforest::Rational;

/// Prints "criterion: PASS" on clean completion and "criterion: FAIL"
/// if the test panics before defusing the guard.
struct Criterion {
    name: &'static str,
    started: Instant,
    budget: Option<Duration>,
    done: bool,
}

impl Criterion {
    fn start(name: &'static str, budget: Option<Duration>) -> Criterion {
        Criterion {
            name,
            started: Instant::now(),
            budget,
            done: false,
        }
    }

    fn finish(mut self) {
        let elapsed = self.started.elapsed();
        if let Some(budget) = self.budget {
            assert!(
                elapsed <= budget,
                "{} exceeded its runtime budget: {elapsed:?} > {budget:?}",
                self.name
            );
        }
        self.done = true;
        println!("{}: PASS ({elapsed:?})", self.name);
    }
}

impl Drop for Criterion {
    fn drop(&mut self) {
        if !self.done {
            println!("{}: FAIL", self.name);
        }
    }
}

fn q(text: &str) -> Rational {
    text.parse().unwrap()
}

fn cfg(u: u64, v: u64) -> ForestConfig {
    ForestConfig::new(u, v).unwrap()
}

/// Rows 0-4 as printed in the source listings, one string per row.
const GOLDEN_ROWS: &[(u64, u64, &str, [&str; 5])] = &[
    (2, 2, "1", [
        "1",
        "1/3 3",
        "1/5 7/3 3/7 5",
        "1/7 11/5 7/17 13/3 3/13 17/7 5/11 7",
        "1/9 15/7 11/27 21/5 7/31 41/17 13/29 19/3 3/19 29/13 17/41 31/7 5/21 27/11 7/15 9",
    ]),
    (2, 2, "3/2", [
        "3/2",
        "3/8 7/2",
        "3/14 19/8 7/16 11/2",
        "3/20 31/14 19/46 35/8 7/30 39/16 11/24 15/2",
        "3/26 43/20 31/76 59/14 19/84 111/46 35/78 51/8 7/44 67/30 39/94 71/16 11/46 59/24 15/32 19/2",
    ]),
    (2, 2, "2/3", [
        "2/3",
        "2/7 8/3",
        "2/11 16/7 8/19 14/3",
        "2/15 24/11 16/39 30/7 8/35 46/19 14/31 20/3",
        "2/19 32/15 24/59 46/11 16/71 94/39 30/67 44/7 8/51 78/35 46/111 84/19 14/59 76/31 20/43 26/3",
    ]),
    (5, 4, "3/2", [
        "3/2",
        "3/17 11/2",
        "3/32 71/17 11/57 19/2",
        "3/47 131/32 71/372 139/17 11/112 239/57 19/97 27/2",
        "3/62 191/47 131/687 259/32 71/727 1559/372 139/712 207/17 11/167 459/112 239/1252 467/57 19/192 407/97 27/137 35/2",
    ]),
    (5, 4, "2/3", [
        "2/3",
        "2/13 14/3",
        "2/23 54/13 14/73 26/3",
        "2/33 94/23 54/283 106/13 14/143 306/73 26/133 38/3",
        "2/43 134/33 94/493 186/23 54/553 1186/283 106/543 158/13 14/213 586/143 306/1603 598/73 26/263 558/133 38/193 50/3",
    ]),
    (4, 5, "2/3", [
        "2/3",
        "2/11 17/3",
        "2/19 57/11 17/71 32/3",
        "2/27 97/19 57/239 112/11 17/139 372/71 32/131 47/3",
        "2/35 137/27 97/407 192/19 57/467 1252/239 112/459 167/11 17/207 712/139 372/1559 727/71 32/259 687/131 47/191 62/3",
    ]),
];

#[test]
fn criterion_1_golden_rows_byte_exact() {
    let c = Criterion::start("criterion 1 (golden rows)", Some(Duration::from_secs(1)));
    for &(u, v, root, ref rows) in GOLDEN_ROWS {
        for (n, expected) in rows.iter().enumerate() {
            let out = Command::new(env!("CARGO_BIN_EXE_cwforest"))
                .args([
                    "row",
                    "--u",
                    &u.to_string(),
                    "--v",
                    &v.to_string(),
                    "--root",
                    root,
                    "--n",
                    &n.to_string(),
                ])
                .output()
                .unwrap();
            assert!(out.status.success());
            let printed = String::from_utf8(out.stdout).unwrap();
            assert_eq!(
                printed,
                format!("{expected}\n"),
                "(u,v)=({u},{v}) root {root} row {n}"
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_2_symmetry_theorem() {
    let c = Criterion::start("criterion 2 (symmetry theorem)", Some(Duration::from_secs(60)));
    let roots = ["1", "3/2", "2/3", "5/7", "7/5"];
    for u in 1..=5 {
        for v in 1..=5 {
            for root in roots {
                let report = verify::verify_symmetry(u, v, &q(root), 10).unwrap();
                assert!(
                    report.passed,
                    "symmetry failed for (u,v)=({u},{v}) z={root}: {:?}",
                    report.first_failure
                );
                assert_eq!(report.checked_count, (1 << 11) - 1);
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_3_self_symmetry() {
    let c = Criterion::start("criterion 3 (self-symmetry)", None);
    for u in 1..=5 {
        let report = verify::verify_self_symmetry(u, 12).unwrap();
        assert!(report.passed, "u={u}: {:?}", report.first_failure);
        assert_eq!(report.checked_count, (1 << 13) - 1);
    }
    c.finish();
}

/// Independent count of the reduced positive rationals of height at most
/// `bound`: a plain gcd double loop, equal to `2*sum(phi(k)) - 1`.
fn coprime_pair_count(bound: u64) -> u64 {
    let mut count = 0;
    for a in 1..=bound {
        for b in 1..=bound {
            if num_integer::gcd(a, b) == 1 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn criterion_4_partition_theorem() {
    let c = Criterion::start("criterion 4 (partition theorem)", Some(Duration::from_secs(60)));
    let expected = coprime_pair_count(300);
    for (u, v) in [(1, 1), (2, 2), (5, 4), (4, 5)] {
        let report = verify::verify_partition(u, v, 300).unwrap();
        assert!(report.passed, "(u,v)=({u},{v}): {:?}", report.first_failure);
        assert_eq!(report.checked_count, expected, "(u,v)=({u},{v})");
    }
    c.finish();
}

#[test]
fn criterion_5_classical_properties() {
    let c = Criterion::start("criterion 5 (classical properties)", None);
    let cw = cfg(1, 1);

    // (ii) denominator chain, rows 0-12
    for n in 0..=12 {
        assert!(classical::check_denominator_chain(n).unwrap(), "row {n}");
    }

    // (iii) Newman successor regenerates each row from its first entry
    for n in 0..=12u32 {
        let row = forest::row(cw, &Rational::one(), n).unwrap();
        let mut walked = Vec::with_capacity(row.len());
        let mut current = Rational::from_u64(1, u64::from(n) + 1).unwrap();
        walked.push(current.clone());
        for _ in 1..row.len() {
            current = classical::newman_successor(&current);
            walked.push(current.clone());
        }
        assert_eq!(walked, row, "row {n}");
    }

    // (iv) continued-fraction row formula vs decompose path length
    for a in 1u64..=200 {
        for b in 1u64..=200 {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let r = Rational::from_u64(a, b).unwrap();
            let (_, word, _) = forest::decompose(cw, &r);
            assert_eq!(
                classical::cw_row_of(&r),
                num_bigint::BigUint::from(word.len()),
                "{a}/{b}"
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_6_freeness_certificate() {
    let c = Criterion::start("criterion 6 (freeness certificate)", Some(Duration::from_secs(10)));
    for (u, v) in [(1, 1), (2, 2), (5, 4)] {
        let report = matrix::freeness_probe(u, v, 12).unwrap();
        assert!(report.distinct, "(u,v)=({u},{v}): {:?}", report.collision);
        // 2^13 - 2 non-empty words plus the identity
        assert_eq!(report.word_count, (1 << 13) - 1);
    }
    c.finish();
}

#[test]
fn criterion_7_range_inequalities() {
    let c = Criterion::start("criterion 7 (range inequalities)", None);
    for u in 1..=5 {
        for v in 1..=5 {
            let report = verify::verify_range(u, v, 50).unwrap();
            assert!(report.passed, "(u,v)=({u},{v}): {:?}", report.first_failure);
        }
    }
    c.finish();
}
