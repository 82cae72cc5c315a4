//! The unreduced Burau representation `B_n -> GL(n, Z[t, 1/t])`, its
//! specializations, and the Vandermonde trivialization of the permutation
//! bundle over the unordered configuration space.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::BurauError;
use crate::exact::GaussianRational;
use crate::laurent::{LaurentMatrix, LaurentPoly};

/// A word in the Artin generators; a letter `(k, -1)` is `s_k^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self, BurauError> {
        if strands < 2 {
            return Err(BurauError::TooFewStrands(strands));
        }
        for &(k, sign) in &letters {
            if k == 0 || k >= strands {
                return Err(BurauError::GeneratorOutOfRange { n: strands, k });
            }
            if sign != 1 && sign != -1 {
                return Err(BurauError::BadLetter(format!("s{k}^{sign}")));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses `s1 s2^-1 s3`; an empty or all-blank string is the identity.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BurauError> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let bad = || BurauError::BadLetter(tok.to_string());
                let body = tok.strip_prefix('s').ok_or_else(bad)?;
                let (index, sign) = match body.split_once('^') {
                    Some((k, "-1")) => (k, -1),
                    Some((k, "1")) => (k, 1),
                    Some(_) => return Err(bad()),
                    None => (body, 1),
                };
                if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let k = index.parse::<usize>().map_err(|_| bad())?;
                Ok((k, sign))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { strands: self.strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(k, s)| if s < 0 { format!("s{k}^-1") } else { format!("s{k}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_generator(n: usize, k: usize) -> Result<(), BurauError> {
    if n < 2 {
        return Err(BurauError::TooFewStrands(n));
    }
    if k == 0 || k >= n {
        return Err(BurauError::GeneratorOutOfRange { n, k });
    }
    Ok(())
}

/// `diag(I_{k-1}, [[1 - t, t], [1, 0]], I_{n-k-1})`.
pub fn burau_generator(n: usize, k: usize) -> Result<LaurentMatrix, BurauError> {
    check_generator(n, k)?;
    let mut m = LaurentMatrix::identity(n);
    let (a, b) = (k - 1, k);
    m.set(a, a, LaurentPoly::from_terms([(0, 1), (1, -1)]));
    m.set(a, b, LaurentPoly::t());
    m.set(b, a, LaurentPoly::constant(1));
    m.set(b, b, LaurentPoly::zero());
    Ok(m)
}

/// Image of `s_k^-1`: the block inverts to `[[0, 1], [1/t, 1 - 1/t]]`.
pub fn burau_generator_inverse(n: usize, k: usize) -> Result<LaurentMatrix, BurauError> {
    check_generator(n, k)?;
    let mut m = LaurentMatrix::identity(n);
    let (a, b) = (k - 1, k);
    m.set(a, a, LaurentPoly::zero());
    m.set(a, b, LaurentPoly::constant(1));
    m.set(b, a, LaurentPoly::monomial(1, -1));
    m.set(b, b, LaurentPoly::from_terms([(0, 1), (-1, -1)]));
    Ok(m)
}

/// Product of generator images in word order.
pub fn burau(word: &BraidWord) -> LaurentMatrix {
    let n = word.strands;
    word.letters.iter().fold(LaurentMatrix::identity(n), |acc, &(k, s)| {
        let g = if s > 0 { burau_generator(n, k) } else { burau_generator_inverse(n, k) };
        acc.mul(&g.expect("letters validated on construction"))
    })
}

/// Exact square matrix over Q(i).
pub type ExactMatrix = Vec<Vec<GaussianRational>>;

pub fn format_exact_matrix(m: &ExactMatrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| format!("[{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Substitutes `t = value`; `value` must be a unit.
pub fn specialize(m: &LaurentMatrix, value: &GaussianRational) -> Result<ExactMatrix, BurauError> {
    if value.is_zero() {
        return Err(BurauError::ZeroSpecialization);
    }
    Ok(m.eval(value).expect("nonzero value"))
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|c| {
                    row.iter().zip(b).fold(GaussianRational::zero(), |acc, (x, brow)| &acc + &(x * &brow[c]))
                })
                .collect()
        })
        .collect()
}

/// Braid and far-commutation relations, checked exactly over Z[t, 1/t].
pub fn check_braid_relations(n: usize) -> Result<bool, BurauError> {
    if n < 2 {
        return Err(BurauError::TooFewStrands(n));
    }
    let gens: Vec<LaurentMatrix> = (1..n).map(|k| burau_generator(n, k)).collect::<Result<_, _>>()?;
    for k in 0..gens.len() {
        if k + 1 < gens.len() {
            let (a, b) = (&gens[k], &gens[k + 1]);
            if a.mul(b).mul(a) != b.mul(a).mul(b) {
                return Ok(false);
            }
        }
        for l in k + 2..gens.len() {
            if gens[k].mul(&gens[l]) != gens[l].mul(&gens[k]) {
                return Ok(false);
            }
        }
    }
    for k in 1..n {
        let id = burau_generator(n, k)?.mul(&burau_generator_inverse(n, k)?);
        if id != LaurentMatrix::identity(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A permutation of `{0, ..., n-1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, BurauError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(BurauError::BadPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Swap of `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Self { images }
    }

    /// Moves entry `k` to position `self(k)`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len());
        let inv = self.inverse();
        (0..v.len()).map(|k| v[inv.apply(k)].clone()).collect()
    }

    /// Permutation matrix with a 1 in row `self(j)` of column `j`.
    pub fn matrix(&self) -> ExactMatrix {
        let n = self.len();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if self.images[c] == r { GaussianRational::one() } else { GaussianRational::zero() })
                    .collect()
            })
            .collect()
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` or an empty
    /// string is the identity. Commas may separate entries.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, BurauError> {
        let bad = |msg: &str| BurauError::BadPermutation(format!("{msg} in {text:?}"));
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(v) if v >= 1 && v <= n => Ok(v - 1),
                    _ => Err(bad(&format!("entry {s:?} outside 1..={n}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (k, &a) in cycle.iter().enumerate() {
                if touched[a] {
                    return Err(bad("cycles must be disjoint"));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self { images })
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycles, each starting at its least element; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut any = false;
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push((k + 1).to_string());
                k = self.images[k];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// The permutation whose matrix is the Burau image at `t = 1`.
pub fn permutation_at_1(word: &BraidWord) -> Result<Permutation, BurauError> {
    let m = specialize(&burau(word), &GaussianRational::one())?;
    let n = word.strands;
    let mut images = Vec::with_capacity(n);
    for c in 0..n {
        let mut hit = None;
        for (r, row) in m.iter().enumerate() {
            let x = &row[c];
            if x.is_one() {
                if hit.replace(r).is_some() {
                    return Err(BurauError::NotPermutation);
                }
            } else if !x.is_zero() {
                return Err(BurauError::NotPermutation);
            }
        }
        images.push(hit.ok_or(BurauError::NotPermutation)?);
    }
    Permutation::from_images(images).map_err(|_| BurauError::NotPermutation)
}

/// `n` pairwise distinct points of C with Gaussian rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalComplexConfiguration {
    points: Vec<GaussianRational>,
}

impl RationalComplexConfiguration {
    pub fn new(points: Vec<GaussianRational>) -> Result<Self, BurauError> {
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if points[a] == points[b] {
                    return Err(BurauError::RepeatedPoint(a + 1, b + 1));
                }
            }
        }
        Ok(Self { points })
    }

    /// Comma-separated Gaussian rationals, e.g. `0, 1, 1/2+i`.
    pub fn parse(text: &str) -> Result<Self, BurauError> {
        Self::new(parse_gaussian_list(text)?)
    }

    pub fn points(&self) -> &[GaussianRational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Comma-separated Gaussian rationals; blank input gives an empty list.
pub fn parse_gaussian_list(text: &str) -> Result<Vec<GaussianRational>, BurauError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| Ok(GaussianRational::from_str(s.trim())?)).collect()
}

/// `V[i][j] = z_j^i` (0-based), the transpose Vandermonde matrix.
pub fn vandermonde_matrix(z: &[GaussianRational]) -> ExactMatrix {
    (0..z.len()).map(|i| z.iter().map(|zj| zj.pow(i as u32)).collect()).collect()
}

/// `y_i = sum_j z_j^(i-1) x_j`, symmetric under permuting `(z, x)` jointly.
pub fn vandermonde_map(z: &[GaussianRational], x: &[GaussianRational]) -> Vec<GaussianRational> {
    let v = vandermonde_matrix(z);
    v.iter()
        .map(|row| row.iter().zip(x).fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b)))
        .collect()
}

/// Determinant by Gaussian elimination over Q(i).
pub fn determinant(m: &ExactMatrix) -> GaussianRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = GaussianRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return GaussianRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let inv = a[col][col].inv().expect("nonzero pivot");
        det = &det * &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot_row = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    det
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VandermondeReport {
    pub y: Vec<GaussianRational>,
    pub y_permuted: Vec<GaussianRational>,
    pub determinant: GaussianRational,
    pub equivariant: bool,
}

impl VandermondeReport {
    /// The map is a fibrewise isomorphism and descends to the quotient.
    pub fn holds(&self) -> bool {
        self.equivariant && !self.determinant.is_zero()
    }
}

pub fn vandermonde_report(
    config: &RationalComplexConfiguration,
    perm: &Permutation,
    x: &[GaussianRational],
) -> Result<VandermondeReport, BurauError> {
    let n = config.len();
    if perm.len() != n || x.len() != n {
        return Err(BurauError::LengthMismatch(format!(
            "{n} points, permutation of {} letters, {} coordinates",
            perm.len(),
            x.len()
        )));
    }
    let determinant = determinant(&vandermonde_matrix(config.points()));
    assert!(!determinant.is_zero(), "Vandermonde matrix of distinct points is invertible");
    let y = vandermonde_map(config.points(), x);
    let y_permuted = vandermonde_map(&perm.act(config.points()), &perm.act(x));
    let equivariant = y == y_permuted;
    Ok(VandermondeReport { y, y_permuted, determinant, equivariant })
}

/// Whether `lambda(z, x) = (z, V(z) x)` is invertible at `z` and satisfies
/// `lambda(perm z, perm x) = lambda(z, x)` in the second coordinate.
pub fn vandermonde_trivialization_check(
    config: &RationalComplexConfiguration,
    perm: &Permutation,
    x: &[GaussianRational],
) -> Result<bool, BurauError> {
    Ok(vandermonde_report(config, perm, x)?.holds())
}
