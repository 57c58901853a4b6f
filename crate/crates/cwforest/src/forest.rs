//! Forward generation and backward decomposition of the forest determined
//! by a parameter pair `(u, v)`.
//!
//! Each positive rational is a vertex in exactly one rooted infinite binary
//! tree; the roots are the orphans, the rationals in the closed interval
//! `[1/u, v]`. Heights strictly increase along edges, so every rational has
//! finitely many ancestors and `decompose` always terminates.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::{Letter, PathWord};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("forest parameters must be positive")]
    ZeroParameter,
    #[error("address index {0} out of range for row {1}")]
    IndexOutOfRange(BigUint, u32),
    #[error("row {0} exceeds the depth cap {1}")]
    DepthCap(u32, u32),
}

/// Default bound on row depth for full-row generation; a row holds `2^n`
/// rationals in memory.
pub const DEFAULT_DEPTH_CAP: u32 = 24;

/// The parameter pair `(u, v)` selecting the generators `L_u` and `R_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestConfig {
    u: u64,
    v: u64,
}

impl ForestConfig {
    pub fn new(u: u64, v: u64) -> Result<ForestConfig, ForestError> {
        if u == 0 || v == 0 {
            return Err(ForestError::ZeroParameter);
        }
        Ok(ForestConfig { u, v })
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    /// The same forest with the roles of the generators swapped.
    pub fn swapped(&self) -> ForestConfig {
        ForestConfig {
            u: self.v,
            v: self.u,
        }
    }
}

/// Addresses the `i`-th vertex of row `n` of one tree, `1 <= i <= 2^n`.
/// Indices are arbitrary precision: decomposition of a rational of height
/// `h` can land on a row of index up to `2^h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAddress {
    pub row: u32,
    pub index: BigUint,
}

impl TreeAddress {
    pub fn new(row: u32, index: BigUint) -> Result<TreeAddress, ForestError> {
        if index < BigUint::one() || index > (BigUint::one() << row) {
            return Err(ForestError::IndexOutOfRange(index, row));
        }
        Ok(TreeAddress { row, index })
    }

    pub fn root() -> TreeAddress {
        TreeAddress {
            row: 0,
            index: BigUint::one(),
        }
    }

    /// The root-to-vertex path: `index - 1` written as exactly `row` bits,
    /// most significant bit first, with 0 = L and 1 = R. This matches the
    /// child numbering `(n+1, 2i-1)` left and `(n+1, 2i)` right.
    pub fn to_word(&self) -> PathWord {
        let offset = &self.index - BigUint::one();
        let mut letters = Vec::with_capacity(self.row as usize);
        for bit_pos in (0..self.row as u64).rev() {
            letters.push(if offset.bit(bit_pos) {
                Letter::R
            } else {
                Letter::L
            });
        }
        PathWord(letters)
    }

    pub fn from_word(word: &PathWord) -> TreeAddress {
        let mut offset = BigUint::zero();
        for letter in word.letters() {
            offset <<= 1;
            if matches!(letter, Letter::R) {
                offset += BigUint::one();
            }
        }
        TreeAddress {
            row: word.len() as u32,
            index: offset + BigUint::one(),
        }
    }
}

/// The two children of `w = a/b`: left `a/(ua+b)` and right `(a+vb)/b`.
/// Both come out already reduced since the generators have determinant 1.
pub fn children(cfg: ForestConfig, w: &Rational) -> (Rational, Rational) {
    let (a, b) = (w.numer(), w.denom());
    let left_d = BigUint::from(cfg.u) * a + b;
    let right_n = a + BigUint::from(cfg.v) * b;
    debug_assert!(a.gcd(&left_d).is_one());
    debug_assert!(right_n.gcd(b).is_one());
    let left = Rational::new(a.clone(), left_d).unwrap();
    let right = Rational::new(right_n, b.clone()).unwrap();
    (left, right)
}

fn step(cfg: ForestConfig, w: &Rational, letter: Letter) -> Rational {
    let (l, r) = children(cfg, w);
    match letter {
        Letter::L => l,
        Letter::R => r,
    }
}

/// Descends from `root` along the path encoded by `addr`. The root need
/// not be an orphan; the symmetry identity pairs trees whose roots are
/// reciprocal, and at most one of the two can be an orphan for its config.
pub fn vertex_at(cfg: ForestConfig, root: &Rational, addr: &TreeAddress) -> Rational {
    let mut w = root.clone();
    for &letter in addr.to_word().letters() {
        w = step(cfg, &w, letter);
    }
    w
}

/// Row `n` of the tree rooted at `root`, left to right, by a single
/// level-order sweep rather than `2^n` independent descents.
pub fn row(cfg: ForestConfig, root: &Rational, n: u32) -> Result<Vec<Rational>, ForestError> {
    row_capped(cfg, root, n, DEFAULT_DEPTH_CAP)
}

pub fn row_capped(
    cfg: ForestConfig,
    root: &Rational,
    n: u32,
    depth_cap: u32,
) -> Result<Vec<Rational>, ForestError> {
    if n > depth_cap {
        return Err(ForestError::DepthCap(n, depth_cap));
    }
    let mut current = vec![root.clone()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(current.len() * 2);
        for w in &current {
            let (l, r) = children(cfg, w);
            next.push(l);
            next.push(r);
        }
        current = next;
    }
    Ok(current)
}

/// True iff `1/u <= q <= v`, endpoints included; exactly the rationals
/// with no parent, i.e. the tree roots.
pub fn is_orphan(cfg: ForestConfig, q: &Rational) -> bool {
    let u = BigUint::from(cfg.u);
    let v = BigUint::from(cfg.v);
    q.cmp_inverse_integer(&u) != std::cmp::Ordering::Less
        && q.cmp_integer(&v) != std::cmp::Ordering::Greater
}

/// The unique parent of `q` and the side `q` hangs on, or `None` for
/// orphans. If `a > vb` then `q = R_v((a-vb)/b)`; if `b > ua` then
/// `q = L_u(a/(b-ua))`. The two cases are disjoint since `1/u <= 1 <= v`.
pub fn parent(cfg: ForestConfig, q: &Rational) -> Option<(Rational, Letter)> {
    let (a, b) = (q.numer(), q.denom());
    let above_v = q.cmp_integer(&BigUint::from(cfg.v)) == std::cmp::Ordering::Greater;
    let below_inv_u = q.cmp_inverse_integer(&BigUint::from(cfg.u)) == std::cmp::Ordering::Less;
    debug_assert!(!(above_v && below_inv_u));
    if above_v {
        let p = Rational::new(a - BigUint::from(cfg.v) * b, b.clone()).unwrap();
        Some((p, Letter::R))
    } else if below_inv_u {
        let p = Rational::new(a.clone(), b - BigUint::from(cfg.u) * a).unwrap();
        Some((p, Letter::L))
    } else {
        None
    }
}

/// Walks `q` up to its orphan root and returns the root, the root-to-`q`
/// path word, and the corresponding address. Total on the positive
/// rationals: the height strictly decreases at every parent step.
pub fn decompose(cfg: ForestConfig, q: &Rational) -> (Rational, PathWord, TreeAddress) {
    let mut current = q.clone();
    let mut reversed = Vec::new();
    while let Some((p, letter)) = parent(cfg, &current) {
        reversed.push(letter);
        current = p;
    }
    reversed.reverse();
    let word = PathWord(reversed);
    let addr = TreeAddress::from_word(&word);
    (current, word, addr)
}
