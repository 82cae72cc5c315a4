//! Homomorphisms from P_n to the generalized Heisenberg group `pi_3`.
//!
//! For each triple `j < t < i` the composite `sigma . Delta . p` sends the
//! abelianization of P_n to Z^6. A homomorphism to Z^6 lifts to the central
//! extension `pi_3` exactly when the pullback of its characteristic class
//! `chi_3` vanishes in H^2(P_n); that pullback is the three-term relator, so
//! the obstruction vanishes. Reducing mod 2 gives maps into Spin(7), whose
//! defining class pulls back to the reduction of `chi_3`.
//!
//! All maps live on abelianizations and are integer matrices: rows index
//! target coordinates, columns source coordinates. For P_n the source
//! coordinates are the generators `A[i,j]` in [`Generator::index`] order.

use serde::{Deserialize, Serialize};

use crate::arnold::{generator_count, straighten, three_term_relator, ExteriorForm, Generator, Ring};
use crate::error::HeisenbergError;
use crate::f2::{rank, F2Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    matrix: Vec<Vec<i64>>,
    source_rank: usize,
}

impl LinearMap {
    pub fn new(matrix: Vec<Vec<i64>>, source_rank: usize) -> Self {
        assert!(matrix.iter().all(|r| r.len() == source_rank));
        Self { matrix, source_rank }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new((0..rank).map(|r| (0..rank).map(|c| (r == c) as i64).collect()).collect(), rank)
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.source_rank);
        self.matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// `self . inner`: apply `inner` first.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(self.source_rank, inner.target_rank());
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                (0..inner.source_rank)
                    .map(|c| row.iter().zip(&inner.matrix).map(|(a, irow)| a * irow[c]).sum())
                    .collect()
            })
            .collect();
        LinearMap { matrix, source_rank: inner.source_rank }
    }

    /// Determinant of a square map (Bareiss elimination).
    pub fn determinant(&self) -> i64 {
        let n = self.target_rank();
        assert_eq!(n, self.source_rank);
        let mut a: Vec<Vec<i128>> =
            self.matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
                }
            }
            prev = a[k][k];
        }
        let det = if n == 0 { 1 } else { a[n - 1][n - 1] };
        (sign * det) as i64
    }
}

fn check_triple(n: usize, i: usize, t: usize, j: usize) -> Result<(), HeisenbergError> {
    if 1 <= j && j < t && t < i && i <= n {
        Ok(())
    } else {
        Err(HeisenbergError::BadTriple { n, i, t, j })
    }
}

/// `p_{I(i,t,j)}`: pulls `iota_1, iota_2, iota_3` back to `A[i,j]`, `A[i,t]`, `A[t,j]`.
pub fn p_map(n: usize, i: usize, t: usize, j: usize) -> Result<LinearMap, HeisenbergError> {
    check_triple(n, i, t, j)?;
    let m = generator_count(n);
    let matrix = [(i, j), (i, t), (t, j)]
        .iter()
        .map(|&(a, b)| {
            let mut row = vec![0; m];
            row[Generator { i: a, j: b }.index()] = 1;
            row
        })
        .collect();
    Ok(LinearMap::new(matrix, m))
}

/// `Delta(n1, n2, n3) = (n1, -n1, n2, n2, n3, n3)`.
pub fn delta_map() -> LinearMap {
    LinearMap::new(
        vec![
            vec![1, 0, 0],
            vec![-1, 0, 0],
            vec![0, 1, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![0, 0, 1],
        ],
        3,
    )
}

/// `sigma(n1, ..., n6) = (n1, n3, n2, n5, n4, n6)`.
pub fn sigma_map() -> LinearMap {
    let order = [0, 2, 1, 4, 3, 5];
    LinearMap::new(order.iter().map(|&s| (0..6).map(|c| (c == s) as i64).collect()).collect(), 6)
}

/// `pi_{I(i,t,j)} = sigma . Delta . p_{I(i,t,j)}`.
pub fn pi_map(n: usize, i: usize, t: usize, j: usize) -> Result<LinearMap, HeisenbergError> {
    Ok(sigma_map().compose(&delta_map()).compose(&p_map(n, i, t, j)?))
}

/// `chi_g = sum_k x_k y_k` on Z^{2g}, with `x_k`, `y_k` the coordinates
/// `2k - 1` and `2k` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeisenbergClass {
    pub genus: usize,
}

impl HeisenbergClass {
    /// 0-based coordinate pairs `(x_k, y_k)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.genus).map(|k| (2 * k, 2 * k + 1)).collect()
    }

    /// `f^*(chi_g)` for a map `f` from the abelianization of P_n, expanded in
    /// the free exterior algebra on the `A[i,j]`.
    pub fn pullback(&self, f: &LinearMap, n: usize) -> ExteriorForm {
        assert_eq!(f.target_rank(), 2 * self.genus);
        assert_eq!(f.source_rank(), generator_count(n));
        let mut form = ExteriorForm::zero(n, Ring::Z);
        for (x, y) in self.pairs() {
            for (a, &ca) in f.matrix[x].iter().enumerate() {
                for (b, &cb) in f.matrix[y].iter().enumerate() {
                    if ca != 0 && cb != 0 {
                        form.add_word(ca * cb, vec![Generator::from_index(a), Generator::from_index(b)])
                            .expect("indices come from the abelianization of P_n");
                    }
                }
            }
        }
        form
    }
}

/// `pi_{I(i,t,j)}^*(chi_3)`, not straightened.
pub fn pullback_chi(n: usize, i: usize, t: usize, j: usize) -> Result<ExteriorForm, HeisenbergError> {
    let pi = pi_map(n, i, t, j)?;
    Ok(HeisenbergClass { genus: 3 }.pullback(&pi, n))
}

/// All triples `(i, t, j)` with `1 <= j < t < i <= n`, ordered by `i`, then `t`, then `j`.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 3..=n {
        for t in 2..i {
            for j in 1..t {
                out.push((i, t, j));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub i: usize,
    pub t: usize,
    pub j: usize,
    /// The pullback in `A[i,j]` syntax, before straightening.
    pub pullback: String,
    pub matches_relator: bool,
    pub vanishes_over_z: bool,
    pub vanishes_over_f2: bool,
    /// Obstruction zero over F2, so the mod-2 map lifts to Spin(7).
    pub spin7_liftable: bool,
}

/// Ranks of the layers of `Gamma^1/Gamma^3 (x) F2` and of their images under
/// the product of the mod-2 Heisenberg maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedInjectivity {
    pub abelian_dim: usize,
    pub abelian_image_rank: usize,
    pub commutator_dim: usize,
    pub commutator_image_rank: usize,
}

impl GradedInjectivity {
    pub fn injective(&self) -> bool {
        self.abelian_dim == self.abelian_image_rank && self.commutator_dim == self.commutator_image_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub n: usize,
    pub triples: Vec<TripleReport>,
    pub all_lift: bool,
    /// Rank over F2 of the degree-one classes `A[i,j], A[i,t], A[t,j]` over all triples.
    pub span_dim: usize,
    pub h1_dim: usize,
    /// Present for `n = 3` only.
    pub monomorphism_n3: Option<GradedInjectivity>,
}

pub fn check_triple_lift(n: usize, i: usize, t: usize, j: usize) -> Result<TripleReport, HeisenbergError> {
    let pullback = pullback_chi(n, i, t, j)?;
    let relator = three_term_relator(n, Ring::Z, i, t, j).expect("triple validated");
    let vanishes_over_z = straighten(&pullback).is_zero();
    let vanishes_over_f2 = straighten(&pullback.reduce_mod2()).is_zero();
    Ok(TripleReport {
        i,
        t,
        j,
        pullback: pullback.to_string(),
        matches_relator: pullback == relator,
        vanishes_over_z,
        vanishes_over_f2,
        spin7_liftable: vanishes_over_f2,
    })
}

/// Mod-2 injectivity of `Gamma^1/Gamma^3 (x) F2 -> Spin(7)^{C(3,3)}` for P_3 by
/// rank counting. The abelian layer has dimension 3 and maps through the
/// stacked `pi` matrices; the commutator layer has dimension 1 and maps to the
/// centre through the pulled-back commutator forms, i.e. the relators.
pub fn graded_injectivity_n3() -> GradedInjectivity {
    let n = 3;
    let m = generator_count(n);
    let mut abelian_rows = Vec::new();
    let mut commutator_rows = Vec::new();
    let pair_index = |a: usize, b: usize| a * m + b;
    for (i, t, j) in triples(n) {
        let pi = pi_map(n, i, t, j).expect("valid triple");
        for row in pi.matrix() {
            let ones: Vec<usize> = (0..m).filter(|&c| row[c].rem_euclid(2) == 1).collect();
            abelian_rows.push(F2Vector::from_support(m, &ones));
        }
        let form = pullback_chi(n, i, t, j).expect("valid triple").reduce_mod2();
        let ones: Vec<usize> = form.terms().keys().map(|w| pair_index(w[0].index(), w[1].index())).collect();
        commutator_rows.push(F2Vector::from_support(m * m, &ones));
    }
    GradedInjectivity {
        abelian_dim: m,
        abelian_image_rank: rank(&abelian_rows),
        commutator_dim: triples(n).len(),
        commutator_image_rank: rank(&commutator_rows),
    }
}

pub fn verify_all_lifts(n: usize) -> Result<LiftReport, HeisenbergError> {
    if n < 3 {
        return Err(HeisenbergError::TooFewStrands(n));
    }
    let m = generator_count(n);
    let mut reports = Vec::new();
    let mut degree_one = Vec::new();
    for (i, t, j) in triples(n) {
        reports.push(check_triple_lift(n, i, t, j)?);
        for (a, b) in [(i, j), (i, t), (t, j)] {
            degree_one.push(F2Vector::from_support(m, &[Generator { i: a, j: b }.index()]));
        }
    }
    let all_lift = reports.iter().all(|r| r.matches_relator && r.vanishes_over_z && r.vanishes_over_f2);
    Ok(LiftReport {
        n,
        triples: reports,
        all_lift,
        span_dim: rank(&degree_one),
        h1_dim: m,
        monomorphism_n3: (n == 3).then(graded_injectivity_n3),
    })
}
