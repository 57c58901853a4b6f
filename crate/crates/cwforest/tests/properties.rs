//! Property tests for the number-theoretic invariants of the forest
//! machinery: the word/matrix homomorphism, determinant preservation,
//! the theorem's range conclusion, parent/child inversion, and the
//! decompose/replay round trip.

use num_bigint::BigUint;
use proptest::prelude::*;

use cwforest::forest::{self, ForestConfig};
use cwforest::matrix::{word_to_matrix, Letter, Mat2, PathWord};
use cwforest::Rational;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::L), Just(Letter::R)]
}

fn word(max_len: usize) -> impl Strategy<Value = PathWord> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(PathWord)
}

fn reduced_rational(height: u64) -> impl Strategy<Value = Rational> {
    (1..=height, 1..=height).prop_map(|(a, b)| {
        let g = num_integer::gcd(a, b);
        Rational::from_u64(a / g, b / g).unwrap()
    })
}

proptest! {
    // Concatenating words multiplies matrices so that the prefix acts
    // first on the root, matching tree descent order.
    #[test]
    fn word_concatenation_is_composition(
        w1 in word(10),
        w2 in word(10),
        q in reduced_rational(100),
        u in 1u64..=5,
        v in 1u64..=5,
    ) {
        let whole = word_to_matrix(&w1.concat(&w2), u, v).unwrap();
        let prefix = word_to_matrix(&w1, u, v).unwrap();
        let suffix = word_to_matrix(&w2, u, v).unwrap();
        let composed = suffix.apply(&prefix.apply(&q).unwrap()).unwrap();
        prop_assert_eq!(whole.apply(&q).unwrap(), composed);
    }

    #[test]
    fn word_products_have_determinant_one(
        w in word(14),
        u in 1u64..=9,
        v in 1u64..=9,
    ) {
        prop_assert!(word_to_matrix(&w, u, v).unwrap().det_is_one());
    }

    // Theorem conclusion: under the hypotheses, every positive rational
    // lands strictly below 1 under L and strictly above 1 under R, and
    // in fact below 1/u and above v.
    #[test]
    fn generators_satisfy_range_bounds(
        w in reduced_rational(1000),
        u in 1u64..=5,
        v in 1u64..=5,
    ) {
        let l = Mat2::lower(u).unwrap();
        let r = Mat2::upper(v).unwrap();
        prop_assert!(cwforest::matrix::theorem_hypotheses_hold(&l, &r));
        let left = l.apply(&w).unwrap();
        let right = r.apply(&w).unwrap();
        prop_assert_eq!(
            left.cmp_inverse_integer(&BigUint::from(u)),
            std::cmp::Ordering::Less
        );
        prop_assert_eq!(
            right.cmp_integer(&BigUint::from(v)),
            std::cmp::Ordering::Greater
        );
        prop_assert!(left < Rational::one());
        prop_assert!(right > Rational::one());
    }

    // The generators have determinant 1, so the image fraction is born
    // reduced; Rational::new must not have had anything to cancel.
    #[test]
    fn generator_images_need_no_reduction(
        w in reduced_rational(500),
        u in 1u64..=7,
        v in 1u64..=7,
    ) {
        let l = Mat2::lower(u).unwrap();
        let raw_n = w.numer().clone();
        let raw_d = &BigUint::from(u) * w.numer() + w.denom();
        let image = l.apply(&w).unwrap();
        prop_assert_eq!(image.numer(), &raw_n);
        prop_assert_eq!(image.denom(), &raw_d);

        let r = Mat2::upper(v).unwrap();
        let raw_n = w.numer() + &BigUint::from(v) * w.denom();
        let image = r.apply(&w).unwrap();
        prop_assert_eq!(image.numer(), &raw_n);
        prop_assert_eq!(image.denom(), w.denom());
    }

    #[test]
    fn parent_inverts_children(
        q in reduced_rational(300),
        u in 1u64..=5,
        v in 1u64..=5,
    ) {
        let cfg = ForestConfig::new(u, v).unwrap();
        if let Some((p, side)) = forest::parent(cfg, &q) {
            let (l, r) = forest::children(cfg, &p);
            let child = match side {
                Letter::L => l,
                Letter::R => r,
            };
            prop_assert_eq!(child, q);
        } else {
            prop_assert!(forest::is_orphan(cfg, &q));
        }
    }

    #[test]
    fn decompose_replays_exactly(
        q in reduced_rational(300),
        u in 1u64..=5,
        v in 1u64..=5,
    ) {
        let cfg = ForestConfig::new(u, v).unwrap();
        let (root, word, addr) = forest::decompose(cfg, &q);
        prop_assert!(forest::is_orphan(cfg, &root));
        prop_assert_eq!(addr.to_word(), word);
        prop_assert_eq!(forest::vertex_at(cfg, &root, &addr), q);
    }

    // Descending the matrix of the decompose word from the root is the
    // same as descending step by step.
    #[test]
    fn decompose_word_matrix_maps_root_to_q(
        q in reduced_rational(200),
        u in 1u64..=4,
        v in 1u64..=4,
    ) {
        let cfg = ForestConfig::new(u, v).unwrap();
        let (root, word, _) = forest::decompose(cfg, &q);
        let m = word_to_matrix(&word, u, v).unwrap();
        prop_assert_eq!(m.apply(&root).unwrap(), q);
    }

    #[test]
    fn rational_parse_display_round_trip(q in reduced_rational(10_000)) {
        let text = q.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), q);
    }
}
