//! The straightening algorithm against an Orlik-Solomon presentation built
//! from scratch: the degree-t ideal is spanned by boundaries of dependent
//! triples times exterior words, and ranks are taken modulo a large prime.

use hyperbraid::arnold::{
    basis, dim, generator_count, generators, multiply, parse_class, reduce_mod2, straighten, straighten_word,
    ArnoldClass, ExteriorForm, Generator, Ring,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const P: i64 = 1_000_003;

/// Exterior word on generator indices, sorted with sign; `None` on a repeat.
fn normalize(word: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut w = word.to_vec();
    let mut inversions = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] == w[b] {
                return None;
            }
            if w[a] > w[b] {
                inversions += 1;
            }
        }
    }
    w.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, w))
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            go(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Index of the hyperplane `z_a = z_b` with `a > b`, matching `A[a,b]`.
fn hp(a: usize, b: usize) -> usize {
    let (a, b) = if a > b { (a, b) } else { (b, a) };
    (a - 1) * (a - 2) / 2 + (b - 1)
}

struct Presentation {
    words: BTreeMap<Vec<usize>, usize>,
    ideal: Vec<Vec<i64>>,
}

impl Presentation {
    fn new(n: usize, t: usize) -> Self {
        let m = n * (n - 1) / 2;
        let words: BTreeMap<Vec<usize>, usize> =
            k_subsets(m, t).into_iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut ideal = Vec::new();
        if t >= 2 {
            for triple in k_subsets(n, 3) {
                let (a, b, c) = (triple[0] + 1, triple[1] + 1, triple[2] + 1);
                // Boundary of the circuit {ab, ac, bc}.
                let circuit = [hp(a, b), hp(a, c), hp(b, c)];
                for rest in k_subsets(m, t - 2) {
                    let mut v = vec![0i64; words.len()];
                    for drop in 0..3 {
                        let mut w: Vec<usize> =
                            (0..3).filter(|&x| x != drop).map(|x| circuit[x]).collect();
                        w.extend(&rest);
                        if let Some((s, key)) = normalize(&w) {
                            let sign = if drop % 2 == 0 { 1 } else { -1 };
                            let e = &mut v[words[&key]];
                            *e = (*e + sign * s).rem_euclid(P);
                        }
                    }
                    ideal.push(v);
                }
            }
        }
        Self { words, ideal }
    }

    fn vector(&self, terms: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Vec<i64> {
        let mut v = vec![0i64; self.words.len()];
        for (w, c) in terms {
            if let Some((s, key)) = normalize(&w) {
                let e = &mut v[self.words[&key]];
                *e = (*e + s * c).rem_euclid(P);
            }
        }
        v
    }
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][col], P - 2);
        let pivot: Vec<i64> = m[rank].iter().map(|x| x * inv % P).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(P);
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

fn class_terms(c: &ArnoldClass) -> Vec<(Vec<usize>, i64)> {
    c.terms().iter().map(|(m, &k)| (m.factors().iter().map(|g| g.index()).collect(), k)).collect()
}

#[test]
fn admissible_basis_spans_quotient_freely() {
    for n in 2..=5 {
        for t in 0..=3.min(n - 1) {
            let pres = Presentation::new(n, t);
            let ideal_rank = rank_mod_p(&pres.ideal);
            assert_eq!(pres.words.len() - ideal_rank, dim(n, t), "n={n} t={t}");
            // Admissible monomials stay independent modulo the ideal.
            let mut rows = pres.ideal.clone();
            for m in basis(n, t) {
                rows.push(pres.vector([(m.factors().iter().map(|g| g.index()).collect(), 1)]));
            }
            assert_eq!(rank_mod_p(&rows), pres.words.len(), "n={n} t={t}");
        }
    }
}

#[test]
fn straightening_preserves_the_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 3..=5 {
        let m = generator_count(n);
        for t in 2..=3 {
            let pres = Presentation::new(n, t);
            let base = rank_mod_p(&pres.ideal);
            for _ in 0..40 {
                let mut word: Vec<usize> = (0..m).collect();
                word.shuffle(&mut rng);
                word.truncate(t);
                let c = rng.gen_range(-3i64..=3);
                let gens: Vec<Generator> = word.iter().map(|&k| Generator::from_index(k)).collect();
                let normal = straighten_word(n, Ring::Z, c, gens).unwrap();
                for k in normal.terms().values() {
                    assert_ne!(*k, 0);
                }
                let mut diff = vec![(word.clone(), c)];
                diff.extend(class_terms(&normal).into_iter().map(|(w, k)| (w, -k)));
                let mut rows = pres.ideal.clone();
                rows.push(pres.vector(diff));
                assert_eq!(rank_mod_p(&rows), base, "n={n} word={word:?}");
            }
        }
    }
}

#[test]
fn dimensions_follow_the_product_formula() {
    for n in 1..=7 {
        // Coefficients of prod_{k<n} (1 + k t).
        let mut e = vec![1usize];
        for k in 1..n {
            let mut next = vec![0; e.len() + 1];
            for (d, &c) in e.iter().enumerate() {
                next[d] += c;
                next[d + 1] += c * k;
            }
            e = next;
        }
        for t in 0..=6 {
            assert_eq!(dim(n, t), e.get(t).copied().unwrap_or(0), "n={n} t={t}");
        }
    }
}

fn arb_class(n: usize, degree: usize, ring: Ring) -> impl Strategy<Value = ArnoldClass> {
    let b = basis(n, degree);
    prop::collection::vec((0..b.len().max(1), -3i64..=3), 0..4).prop_map(move |picks| {
        let mut c = ArnoldClass::zero(n, ring, degree);
        for (k, coeff) in picks {
            if let Some(m) = b.get(k) {
                c = c.add(&ArnoldClass::from_monomial(n, ring, m.clone(), coeff)).unwrap();
            }
        }
        c
    })
}

fn sign(d: usize) -> i64 {
    if d.is_multiple_of(2) { 1 } else { -1 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(
        (a, b, c) in (4usize..=5).prop_flat_map(|n| (arb_class(n, 1, Ring::Z), arb_class(n, 1, Ring::Z), arb_class(n, 2, Ring::Z)))
    ) {
        let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
        let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_is_graded_commutative(
        (a, b) in (3usize..=5).prop_flat_map(|n| (arb_class(n, 1, Ring::Z), arb_class(n, 2.min(n - 1), Ring::Z)))
    ) {
        let ab = multiply(&a, &b).unwrap();
        let ba = multiply(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.scale(sign(a.degree() * b.degree())));
    }

    #[test]
    fn reordered_words_agree(n in 3usize..=6, seed in any::<u64>(), t in 1usize..=4) {
        let t = t.min(n - 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut all = generators(n);
        all.shuffle(&mut rng);
        let word: Vec<Generator> = all[..t].to_vec();
        let reference = straighten_word(n, Ring::Z, 1, word.clone()).unwrap();
        let mut perm: Vec<usize> = (0..t).collect();
        perm.shuffle(&mut rng);
        let shuffled: Vec<Generator> = perm.iter().map(|&k| word[k]).collect();
        let mut inversions = 0;
        for x in 0..t {
            for y in x + 1..t {
                if perm[x] > perm[y] {
                    inversions += 1;
                }
            }
        }
        let other = straighten_word(n, Ring::Z, sign(inversions), shuffled).unwrap();
        prop_assert_eq!(reference.clone(), other);
        // Straightening one factor at a time gives the same normal form.
        let mut acc = ArnoldClass::one(n, Ring::Z);
        for g in &word {
            acc = multiply(&acc, &hyperbraid::arnold::generator(n, g.i, g.j).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, reference);
    }

    #[test]
    fn mod2_reduction_is_a_ring_map(
        (a, b) in (3usize..=5).prop_flat_map(|n| (arb_class(n, 1, Ring::Z), arb_class(n, 1, Ring::Z)))
    ) {
        let lhs = reduce_mod2(&multiply(&a, &b).unwrap());
        let rhs = multiply(&reduce_mod2(&a), &reduce_mod2(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_roundtrip(c in (2usize..=6).prop_flat_map(|n| (1..n).prop_flat_map(move |d| arb_class(n, d, Ring::Z)))) {
        let back = parse_class(c.n(), Ring::Z, &c.to_string()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn normal_form_is_idempotent(c in (2usize..=6).prop_flat_map(|n| (1..n).prop_flat_map(move |d| arb_class(n, d, Ring::F2)))) {
        let again: ExteriorForm = c.to_exterior();
        prop_assert_eq!(straighten(&again), c);
    }
}
