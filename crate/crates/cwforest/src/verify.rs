//! Machine verification of the symmetry identity, the partition of the
//! positive rationals into one forest per `(u, v)`, and the range
//! inequalities behind the orphan criterion. All checks are exact; a
//! single failing witness fails the whole report.

use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use crate::forest::{self, ForestConfig, ForestError};
use crate::matrix::{self, FreenessReport, MatrixError};
use crate::rational::Rational;

/// Hard cap on the height bound of the sweep-based checks; the sweep
/// visits every coprime pair up to the bound.
pub const HEIGHT_CAP: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("height bound {0} exceeds the cap {1}")]
    HeightCap(u64, u64),
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Symmetry,
    Partition,
    Freeness,
    Range,
}

/// Outcome of one verification run. Serializes to the flat JSON object
/// `{claim, u, v, root?, bound, passed, checked_count, first_failure?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub u: u64,
    pub v: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    pub bound: u64,
    pub passed: bool,
    pub checked_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl VerificationReport {
    fn pass(claim: Claim, u: u64, v: u64, root: Option<&Rational>, bound: u64, count: u64) -> Self {
        VerificationReport {
            claim,
            u,
            v,
            root: root.map(Rational::to_string),
            bound,
            passed: true,
            checked_count: count,
            first_failure: None,
        }
    }

    fn fail(
        claim: Claim,
        u: u64,
        v: u64,
        root: Option<&Rational>,
        bound: u64,
        count: u64,
        witness: String,
    ) -> Self {
        VerificationReport {
            claim,
            u,
            v,
            root: root.map(Rational::to_string),
            bound,
            passed: false,
            checked_count: count,
            first_failure: Some(witness),
        }
    }
}

/// Checks the symmetry identity row by row: the `i`-th entry of row `n`
/// of the `(u,v)` tree at `z` times the mirrored entry of the `(v,u)`
/// tree at `1/z` equals 1, for all `n <= max_row`.
pub fn verify_symmetry(
    u: u64,
    v: u64,
    z: &Rational,
    max_row: u32,
) -> Result<VerificationReport, VerifyError> {
    verify_symmetry_capped(u, v, z, max_row, forest::DEFAULT_DEPTH_CAP)
}

pub fn verify_symmetry_capped(
    u: u64,
    v: u64,
    z: &Rational,
    max_row: u32,
    depth_cap: u32,
) -> Result<VerificationReport, VerifyError> {
    let cfg = ForestConfig::new(u, v)?;
    let swapped = cfg.swapped();
    let inv = z.reciprocal();
    let mut checked = 0u64;
    for n in 0..=max_row {
        let row = forest::row_capped(cfg, z, n, depth_cap)?;
        let mirror = forest::row_capped(swapped, &inv, n, depth_cap)?;
        for (i, (a, b)) in row.iter().zip(mirror.iter().rev()).enumerate() {
            checked += 1;
            if !a.mul(b).is_one() {
                let witness = format!(
                    "row {n} index {i}: {a} * {b} != 1 (u={u}, v={v}, z={z})",
                    i = i + 1
                );
                return Ok(VerificationReport::fail(
                    Claim::Symmetry,
                    u,
                    v,
                    Some(z),
                    max_row as u64,
                    checked,
                    witness,
                ));
            }
        }
    }
    Ok(VerificationReport::pass(
        Claim::Symmetry,
        u,
        v,
        Some(z),
        max_row as u64,
        checked,
    ))
}

/// Single-tree symmetry for `u = v` at root 1, i.e. `verify_symmetry`
/// with `z = 1` where `1^{-1} = 1` collapses the two trees into one.
pub fn verify_self_symmetry(u: u64, max_row: u32) -> Result<VerificationReport, VerifyError> {
    verify_symmetry(u, u, &Rational::one(), max_row)
}

fn reduced_rationals_up_to(height_bound: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=height_bound).flat_map(move |a| {
        (1..=height_bound)
            .filter(move |b| a.gcd(b) == 1)
            .map(move |b| (a, b))
    })
}

/// Sweeps every reduced rational of height up to `height_bound` and checks
/// that `decompose` reaches an orphan root, that replaying the path from
/// the root reproduces the input, and that no two rationals share the same
/// `(root, word)` pair.
pub fn verify_partition(
    u: u64,
    v: u64,
    height_bound: u64,
) -> Result<VerificationReport, VerifyError> {
    verify_partition_capped(u, v, height_bound, HEIGHT_CAP)
}

pub fn verify_partition_capped(
    u: u64,
    v: u64,
    height_bound: u64,
    height_cap: u64,
) -> Result<VerificationReport, VerifyError> {
    if height_bound > height_cap {
        return Err(VerifyError::HeightCap(height_bound, height_cap));
    }
    let cfg = ForestConfig::new(u, v)?;
    let mut seen = HashSet::new();
    let mut checked = 0u64;
    for (a, b) in reduced_rationals_up_to(height_bound) {
        let q = Rational::from_u64(a, b).unwrap();
        checked += 1;
        let (root, word, addr) = forest::decompose(cfg, &q);
        if !forest::is_orphan(cfg, &root) {
            return Ok(VerificationReport::fail(
                Claim::Partition,
                u,
                v,
                None,
                height_bound,
                checked,
                format!("decompose({q}) root {root} is not an orphan"),
            ));
        }
        if forest::vertex_at(cfg, &root, &addr) != q {
            return Ok(VerificationReport::fail(
                Claim::Partition,
                u,
                v,
                None,
                height_bound,
                checked,
                format!("replay of {q} from root {root} via {word} diverges"),
            ));
        }
        if !seen.insert((root.clone(), word.clone())) {
            return Ok(VerificationReport::fail(
                Claim::Partition,
                u,
                v,
                None,
                height_bound,
                checked,
                format!("{q} shares (root, word) = ({root}, {word}) with an earlier rational"),
            ));
        }
    }
    Ok(VerificationReport::pass(
        Claim::Partition,
        u,
        v,
        None,
        height_bound,
        checked,
    ))
}

/// Checks the range inequalities `0 < L_u(w) < 1/u <= 1` and
/// `1 <= v < R_v(w)` for every reduced `w` of height up to `sample_bound`.
pub fn verify_range(u: u64, v: u64, sample_bound: u64) -> Result<VerificationReport, VerifyError> {
    verify_range_capped(u, v, sample_bound, HEIGHT_CAP)
}

pub fn verify_range_capped(
    u: u64,
    v: u64,
    sample_bound: u64,
    height_cap: u64,
) -> Result<VerificationReport, VerifyError> {
    if sample_bound > height_cap {
        return Err(VerifyError::HeightCap(sample_bound, height_cap));
    }
    let cfg = ForestConfig::new(u, v)?;
    let u_big = num_bigint::BigUint::from(u);
    let v_big = num_bigint::BigUint::from(v);
    let mut checked = 0u64;
    for (a, b) in reduced_rationals_up_to(sample_bound) {
        let w = Rational::from_u64(a, b).unwrap();
        checked += 1;
        let (left, right) = forest::children(cfg, &w);
        let left_ok = left.cmp_inverse_integer(&u_big) == std::cmp::Ordering::Less;
        let right_ok = right.cmp_integer(&v_big) == std::cmp::Ordering::Greater;
        if !left_ok || !right_ok {
            return Ok(VerificationReport::fail(
                Claim::Range,
                u,
                v,
                None,
                sample_bound,
                checked,
                format!("w = {w}: L({w}) = {left}, R({w}) = {right} violate the range bounds"),
            ));
        }
    }
    Ok(VerificationReport::pass(
        Claim::Range,
        u,
        v,
        None,
        sample_bound,
        checked,
    ))
}

/// Runs the bounded freeness certificate and shapes it into the common
/// report schema.
pub fn verify_freeness(u: u64, v: u64, maxlen: usize) -> Result<VerificationReport, VerifyError> {
    verify_freeness_capped(u, v, maxlen, matrix::FREENESS_MAXLEN_CAP)
}

pub fn verify_freeness_capped(
    u: u64,
    v: u64,
    maxlen: usize,
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    let FreenessReport {
        distinct,
        word_count,
        collision,
    } = matrix::freeness_probe_capped(u, v, maxlen, cap)?;
    Ok(if distinct {
        VerificationReport::pass(Claim::Freeness, u, v, None, maxlen as u64, word_count)
    } else {
        let (w1, w2) = collision.unwrap();
        VerificationReport::fail(
            Claim::Freeness,
            u,
            v,
            None,
            maxlen as u64,
            word_count,
            format!("words {w1} and {w2} map to the same matrix"),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Rational {
        Rational::from_u64(n, d).unwrap()
    }

    #[test]
    fn symmetry_examples() {
        let r = verify_symmetry(5, 4, &q(3, 2), 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked_count, 3);
        let r = verify_symmetry(2, 2, &q(3, 2), 1).unwrap();
        assert!(r.passed);
        let r = verify_symmetry(1, 1, &Rational::one(), 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked_count, 1);
    }

    #[test]
    fn symmetry_is_an_involution_in_parameters() {
        for (u, v, z) in [(2, 3, q(5, 7)), (5, 4, q(3, 2)), (1, 4, q(9, 2))] {
            let forward = verify_symmetry(u, v, &z, 6).unwrap();
            let backward = verify_symmetry(v, u, &z.reciprocal(), 6).unwrap();
            assert_eq!(forward.passed, backward.passed);
        }
    }

    #[test]
    fn self_symmetry_examples() {
        assert!(verify_self_symmetry(2, 2).unwrap().passed);
        assert!(verify_self_symmetry(1, 3).unwrap().passed);
        assert!(verify_self_symmetry(5, 4).unwrap().passed);
    }

    #[test]
    fn partition_small_sweep() {
        // independent count: 2 * sum(phi(k), k <= 40) - 1 via a gcd double loop
        let bound = 40u64;
        let mut expected = 0u64;
        for a in 1..=bound {
            for b in 1..=bound {
                if a.gcd(&b) == 1 {
                    expected += 1;
                }
            }
        }
        for (u, v) in [(1, 1), (2, 2), (5, 4)] {
            let r = verify_partition(u, v, bound).unwrap();
            assert!(r.passed, "{:?}", r.first_failure);
            assert_eq!(r.checked_count, expected);
        }
    }

    #[test]
    fn range_small_sweep() {
        for (u, v) in [(1, 1), (2, 2), (5, 4)] {
            let r = verify_range(u, v, 50).unwrap();
            assert!(r.passed, "{:?}", r.first_failure);
        }
    }

    #[test]
    fn height_cap_enforced() {
        assert!(matches!(
            verify_partition(1, 1, HEIGHT_CAP + 1),
            Err(VerifyError::HeightCap(_, _))
        ));
    }

    #[test]
    fn report_json_schema() {
        let r = verify_symmetry(2, 2, &q(3, 2), 1).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["claim"], "symmetry");
        assert_eq!(json["u"], 2);
        assert_eq!(json["root"], "3/2");
        assert_eq!(json["passed"], true);
        assert!(json.get("first_failure").is_none());
    }

    #[test]
    fn freeness_report_shape() {
        let r = verify_freeness(2, 2, 8).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked_count, (1 << 9) - 1);
    }
}
