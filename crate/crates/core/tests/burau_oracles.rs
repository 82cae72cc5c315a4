//! Burau matrices and the Vandermonde map against closed forms: unit row
//! sums, `det = (-t)^e`, permutations tracked by hand, and the product
//! formula for the Vandermonde determinant.

use hyperbraid::burau::{
    burau, burau_generator, burau_generator_inverse, determinant, mat_mul, permutation_at_1, specialize,
    vandermonde_matrix, vandermonde_report, BraidWord, Permutation, RationalComplexConfiguration,
};
use hyperbraid::exact::GaussianRational;
use hyperbraid::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec((1..n, prop::bool::ANY), 0..12).prop_map(move |letters| {
            let letters = letters.into_iter().map(|(k, inv)| (k, if inv { -1 } else { 1 })).collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

fn gq(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(BigRational::from_integer(BigInt::from(re)), BigRational::from_integer(BigInt::from(im)))
}

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| {
        GaussianRational::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// The permutation of strand positions, tracked letter by letter.
fn strand_permutation(word: &BraidWord) -> Vec<usize> {
    let n = word.strands();
    let mut images: Vec<usize> = (0..n).collect();
    // Matrices multiply left to right, so the rightmost letter acts first.
    for &(k, _) in word.letters().iter().rev() {
        for x in images.iter_mut() {
            if *x == k - 1 {
                *x = k;
            } else if *x == k {
                *x = k - 1;
            }
        }
    }
    images
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rows_sum_to_one(w in arb_word()) {
        let m = burau(&w);
        for row in m.rows() {
            let s = row.iter().fold(LaurentPoly::zero(), |acc, p| &acc + p);
            prop_assert_eq!(s, LaurentPoly::constant(1));
        }
    }

    #[test]
    fn determinant_is_signed_power(w in arb_word()) {
        prop_assert_eq!(burau(&w).determinant(), LaurentPoly::neg_t_pow(w.exponent_sum()));
    }

    #[test]
    fn t_equals_one_gives_the_strand_permutation(w in arb_word()) {
        let p = permutation_at_1(&w).unwrap();
        let expected = strand_permutation(&w);
        prop_assert_eq!(p.images(), expected.as_slice());
        prop_assert_eq!(specialize(&burau(&w), &GaussianRational::one()).unwrap(), p.matrix());
    }

    #[test]
    fn specialization_is_multiplicative(a in arb_word(), extra in prop::collection::vec((1usize..5, prop::bool::ANY), 0..6), t in arb_gaussian()) {
        prop_assume!(!t.is_zero());
        let n = a.strands();
        let letters = extra.into_iter().filter(|&(k, _)| k < n).map(|(k, inv)| (k, if inv { -1 } else { 1 })).collect();
        let b = BraidWord::new(n, letters).unwrap();
        let whole = specialize(&burau(&a.concat(&b)), &t).unwrap();
        let parts = mat_mul(&specialize(&burau(&a), &t).unwrap(), &specialize(&burau(&b), &t).unwrap());
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn permutation_matrices_compose((p, q) in (1usize..=7).prop_flat_map(|n| (shuffled(n), shuffled(n)))) {
        let p = Permutation::from_images(p).unwrap();
        let q = Permutation::from_images(q).unwrap();
        prop_assert_eq!(p.compose(&q).matrix(), mat_mul(&p.matrix(), &q.matrix()));
        prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(p.len()));
        let cycles = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(p.len(), &cycles).unwrap(), p);
    }

    #[test]
    fn word_text_roundtrip(w in arb_word()) {
        prop_assert_eq!(BraidWord::parse(w.strands(), &w.to_string()).unwrap(), w);
    }

    #[test]
    fn vandermonde_determinant_product_formula(z in prop::collection::vec(arb_gaussian(), 1..=6)) {
        let expected = (0..z.len()).fold(GaussianRational::one(), |acc, j| {
            (0..j).fold(acc, |acc, i| &acc * &(&z[j] - &z[i]))
        });
        prop_assert_eq!(determinant(&vandermonde_matrix(&z)), expected);
    }

    #[test]
    fn vandermonde_is_equivariant(
        (z, x, images) in (1usize..=8).prop_flat_map(|n| (
            prop::collection::btree_set((-9i64..=9, -9i64..=9), n),
            prop::collection::vec(arb_gaussian(), n),
            shuffled(n),
        ))
    ) {
        let z: Vec<GaussianRational> = z.into_iter().map(|(a, b)| gq(a, b)).collect();
        prop_assume!(z.len() == x.len());
        let config = RationalComplexConfiguration::new(z).unwrap();
        let perm = Permutation::from_images(images).unwrap();
        let report = vandermonde_report(&config, &perm, &x).unwrap();
        prop_assert!(report.holds());
        prop_assert_eq!(report.y, report.y_permuted);
    }
}

#[test]
fn braid_relations_by_hand() {
    for n in 3..=5 {
        for k in 1..n - 1 {
            let s = burau_generator(n, k).unwrap();
            let u = burau_generator(n, k + 1).unwrap();
            assert_eq!(s.mul(&u).mul(&s), u.mul(&s).mul(&u));
        }
        for a in 1..n {
            for b in a + 2..n {
                let s = burau_generator(n, a).unwrap();
                let u = burau_generator(n, b).unwrap();
                assert_eq!(s.mul(&u), u.mul(&s));
            }
            let prod = burau_generator(n, a).unwrap().mul(&burau_generator_inverse(n, a).unwrap());
            assert_eq!(prod, hyperbraid::laurent::LaurentMatrix::identity(n));
        }
    }
}
