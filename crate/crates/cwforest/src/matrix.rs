//! 2x2 nonnegative-integer matrices acting as linear fractional
//! transformations, the generator pair `L_u` / `R_v`, the freeness
//! hypotheses, and a brute-force freeness probe.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix parameter must be positive")]
    ZeroParameter,
    #[error("matrix has zero determinant")]
    SingularMatrix,
    #[error("linear fractional transformation has zero denominator")]
    ZeroImageDenominator,
    #[error("word length {0} exceeds the configured limit {1}")]
    WordLengthCap(usize, usize),
    #[error("invalid path word {0:?}")]
    ParseWord(String),
}

/// One generation step: descend to the left or the right child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    L,
    R,
}

/// A root-to-leaf sequence of generation steps. The empty word is the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PathWord(pub Vec<Letter>);

impl PathWord {
    pub fn empty() -> PathWord {
        PathWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        PathWord(letters)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.0 {
            match letter {
                Letter::L => write!(f, "L")?,
                Letter::R => write!(f, "R")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<PathWord, MatrixError> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                _ => Err(MatrixError::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PathWord)
    }
}

/// A 2x2 matrix with nonnegative arbitrary-precision entries and nonzero
/// determinant, identified with the map `w -> (a11 w + a12)/(a21 w + a22)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a11: BigUint,
    pub a12: BigUint,
    pub a21: BigUint,
    pub a22: BigUint,
}

impl Mat2 {
    pub fn new(
        a11: BigUint,
        a12: BigUint,
        a21: BigUint,
        a22: BigUint,
    ) -> Result<Mat2, MatrixError> {
        let m = Mat2 { a11, a12, a21, a22 };
        if &m.a11 * &m.a22 == &m.a12 * &m.a21 {
            return Err(MatrixError::SingularMatrix);
        }
        Ok(m)
    }

    pub fn identity() -> Mat2 {
        Mat2 {
            a11: BigUint::one(),
            a12: BigUint::zero(),
            a21: BigUint::zero(),
            a22: BigUint::one(),
        }
    }

    /// The generator `L_u = [[1,0],[u,1]]`, `u >= 1`.
    pub fn lower(u: u64) -> Result<Mat2, MatrixError> {
        if u == 0 {
            return Err(MatrixError::ZeroParameter);
        }
        Ok(Mat2 {
            a11: BigUint::one(),
            a12: BigUint::zero(),
            a21: BigUint::from(u),
            a22: BigUint::one(),
        })
    }

    /// The generator `R_v = [[1,v],[0,1]]`, `v >= 1`.
    pub fn upper(v: u64) -> Result<Mat2, MatrixError> {
        if v == 0 {
            return Err(MatrixError::ZeroParameter);
        }
        Ok(Mat2 {
            a11: BigUint::one(),
            a12: BigUint::from(v),
            a21: BigUint::zero(),
            a22: BigUint::one(),
        })
    }

    /// Determinant over the integers; entries are nonnegative so the two
    /// products are compared rather than subtracted.
    pub fn det_is_one(&self) -> bool {
        &self.a11 * &self.a22 == &self.a12 * &self.a21 + BigUint::one()
    }

    pub fn matmul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            a12: &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            a21: &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            a22: &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
        }
    }

    /// Applies the linear fractional transformation to a positive rational.
    pub fn apply(&self, w: &Rational) -> Result<Rational, MatrixError> {
        let n = &self.a11 * w.numer() + &self.a12 * w.denom();
        let d = &self.a21 * w.numer() + &self.a22 * w.denom();
        if d.is_zero() {
            return Err(MatrixError::ZeroImageDenominator);
        }
        Rational::new(n, d).map_err(|_| MatrixError::ZeroImageDenominator)
    }

    /// Renders as `[[a11,a12],[a21,a22]]`.
    pub fn render(&self) -> String {
        format!(
            "[[{},{}],[{},{}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

/// The hypotheses of the freeness theorem: `A` is column-dominated from
/// below (`a11 <= a21`, `a12 <= a22`) and `B` from above (`b11 >= b21`,
/// `b12 >= b22`). When both hold, `A` and `B` freely generate their monoid
/// and `0 < A(w) < 1 < B(w)` for every positive rational `w`.
pub fn theorem_hypotheses_hold(a: &Mat2, b: &Mat2) -> bool {
    a.a11 <= a.a21 && a.a12 <= a.a22 && b.a11 >= b.a21 && b.a12 >= b.a22
}

/// Product of generators along a root-to-leaf word, arranged so that
/// applying the result to the root yields the leaf: the first letter of
/// the word acts first, i.e. ends up rightmost in the matrix product.
pub fn word_to_matrix(word: &PathWord, u: u64, v: u64) -> Result<Mat2, MatrixError> {
    let l = Mat2::lower(u)?;
    let r = Mat2::upper(v)?;
    let mut acc = Mat2::identity();
    for letter in word.letters() {
        let step = match letter {
            Letter::L => &l,
            Letter::R => &r,
        };
        acc = step.matmul(&acc);
    }
    Ok(acc)
}

/// Hard cap on `freeness_probe` word length; 2^(n+1) matrices are held in
/// memory at once.
pub const FREENESS_MAXLEN_CAP: usize = 20;

/// Outcome of the bounded freeness certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub distinct: bool,
    /// Number of words tested, empty word included: `2^(maxlen+1) - 1`.
    pub word_count: u64,
    /// A witness pair of distinct words mapping to the same matrix, if any.
    pub collision: Option<(PathWord, PathWord)>,
}

/// Enumerates every word of length at most `maxlen` over `{L_u, R_v}` and
/// checks that their matrices are pairwise distinct. This is a bounded
/// regression certificate, not a proof; freeness itself is a theorem.
pub fn freeness_probe(u: u64, v: u64, maxlen: usize) -> Result<FreenessReport, MatrixError> {
    freeness_probe_capped(u, v, maxlen, FREENESS_MAXLEN_CAP)
}

pub fn freeness_probe_capped(
    u: u64,
    v: u64,
    maxlen: usize,
    cap: usize,
) -> Result<FreenessReport, MatrixError> {
    if maxlen > cap {
        return Err(MatrixError::WordLengthCap(maxlen, cap));
    }
    let l = Mat2::lower(u)?;
    let r = Mat2::upper(v)?;

    let mut seen: HashMap<Mat2, PathWord> = HashMap::new();
    seen.insert(Mat2::identity(), PathWord::empty());
    let mut frontier = vec![(PathWord::empty(), Mat2::identity())];
    let mut word_count: u64 = 1;

    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (word, mat) in &frontier {
            for (letter, gen) in [(Letter::L, &l), (Letter::R, &r)] {
                let mut extended = word.clone();
                extended.push(letter);
                // new letter extends the path at the leaf, so it acts last
                let product = gen.matmul(mat);
                word_count += 1;
                if let Some(prev) = seen.get(&product) {
                    return Ok(FreenessReport {
                        distinct: false,
                        word_count,
                        collision: Some((prev.clone(), extended)),
                    });
                }
                seen.insert(product.clone(), extended.clone());
                next.push((extended, product));
            }
        }
        frontier = next;
    }

    Ok(FreenessReport {
        distinct: true,
        word_count,
        collision: None,
    })
}
