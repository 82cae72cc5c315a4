//! Hyperplane arrangements over Q, their intersection posets and Betti numbers.
//!
//! A flat is stored through the reduced row echelon form of the augmented
//! system `[normal | offset]` of its defining hyperplanes. For a consistent
//! system that form depends only on the affine subspace, so it doubles as the
//! deduplication key.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::ArrangementError;
use crate::exact::{format_rational, parse_rational};

/// `{ z : normal . z = offset }` in C^l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<BigRational>,
    pub offset: BigRational,
}

impl Hyperplane {
    pub fn new(normal: Vec<BigRational>, offset: BigRational) -> Self {
        Self { normal, offset }
    }

    pub fn from_integers(normal: &[i64], offset: i64) -> Self {
        Self {
            normal: normal.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            offset: BigRational::from_integer(offset.into()),
        }
    }

    fn augmented_row(&self) -> Vec<BigRational> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }

    /// The augmented row scaled so its first nonzero normal entry is 1.
    /// Two hyperplanes coincide iff their normalized rows agree.
    fn normalized_row(&self) -> Vec<BigRational> {
        let row = self.augmented_row();
        match self.normal.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let lead = lead.clone();
                row.into_iter().map(|c| c / &lead).collect()
            }
            None => row,
        }
    }

    fn line(&self) -> String {
        let normal: Vec<String> = self.normal.iter().map(format_rational).collect();
        format!("{} | {}", normal.join(" "), format_rational(&self.offset))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validates dimensions, nonzero normals and distinctness. Error line
    /// numbers refer to 1-based positions in `hyperplanes`.
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrangementError> {
        if ambient_dim == 0 {
            return Err(ArrangementError::ZeroDimension);
        }
        let lines: Vec<usize> = (1..=hyperplanes.len()).collect();
        Self::checked(ambient_dim, hyperplanes, &lines)
    }

    fn checked(
        ambient_dim: usize,
        hyperplanes: Vec<Hyperplane>,
        lines: &[usize],
    ) -> Result<Self, ArrangementError> {
        let mut seen: HashMap<Vec<BigRational>, usize> = HashMap::new();
        for (h, &line) in hyperplanes.iter().zip(lines) {
            if h.normal.len() != ambient_dim {
                return Err(ArrangementError::DimensionMismatch {
                    line,
                    expected: ambient_dim,
                    found: h.normal.len(),
                });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(ArrangementError::ZeroNormal { line });
            }
            if let Some(&first) = seen.get(&h.normalized_row()) {
                return Err(ArrangementError::DuplicateHyperplane { line, first });
            }
            seen.insert(h.normalized_row(), line);
        }
        Ok(Self { ambient_dim, hyperplanes })
    }

    pub fn empty(ambient_dim: usize) -> Result<Self, ArrangementError> {
        Self::new(ambient_dim, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Renders the arrangement in the text file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for h in &self.hyperplanes {
            out.push_str(&h.line());
            out.push('\n');
        }
        out
    }
}

/// Reads the arrangement file format: one hyperplane per line as
/// `c_1 ... c_l | offset`, `#` comments and blank lines ignored.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ArrangementError> {
    let mut hyperplanes = Vec::new();
    let mut lines = Vec::new();
    let mut dim = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (lhs, rhs) = content
            .split_once('|')
            .ok_or(ArrangementError::MissingSeparator { line })?;
        let rational = |tok: &str| {
            parse_rational(tok).map_err(|_| ArrangementError::MalformedRational {
                line,
                token: tok.to_string(),
            })
        };
        let normal = lhs.split_whitespace().map(rational).collect::<Result<Vec<_>, _>>()?;
        let offsets: Vec<&str> = rhs.split_whitespace().collect();
        let [offset] = offsets[..] else {
            return Err(ArrangementError::BadOffset { line });
        };
        let offset = rational(offset)?;
        if normal.is_empty() {
            return Err(ArrangementError::ZeroNormal { line });
        }
        let expected = *dim.get_or_insert(normal.len());
        if normal.len() != expected {
            return Err(ArrangementError::DimensionMismatch { line, expected, found: normal.len() });
        }
        hyperplanes.push(Hyperplane { normal, offset });
        lines.push(line);
    }
    let dim = dim.ok_or(ArrangementError::Empty)?;
    Arrangement::checked(dim, hyperplanes, &lines)
}

/// The hyperplanes `z_i = z_j`, `i < j`, in C^n, in lexicographic order of `(i, j)`.
pub fn braid_arrangement(n: usize) -> Result<Arrangement, ArrangementError> {
    if n < 2 {
        return Err(ArrangementError::TooSmall { name: "braid", n, min: 2 });
    }
    let mut hyperplanes = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut normal = vec![0i64; n];
            normal[i] = 1;
            normal[j] = -1;
            hyperplanes.push(Hyperplane::from_integers(&normal, 0));
        }
    }
    Arrangement::new(n, hyperplanes)
}

/// The coordinate hyperplanes `z_i = 0` in C^n.
pub fn boolean_arrangement(n: usize) -> Result<Arrangement, ArrangementError> {
    if n < 1 {
        return Err(ArrangementError::TooSmall { name: "boolean", n, min: 1 });
    }
    let hyperplanes = (0..n)
        .map(|i| {
            let mut normal = vec![0i64; n];
            normal[i] = 1;
            Hyperplane::from_integers(&normal, 0)
        })
        .collect();
    Arrangement::new(n, hyperplanes)
}

/// Reduced row echelon form of a consistent affine system, rows sorted by pivot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Echelon {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

enum Reduced {
    Zero,
    Inconsistent,
    Pivot(Vec<BigRational>, usize),
}

impl Echelon {
    fn ambient() -> Self {
        Self { rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, row: &[BigRational]) -> Reduced {
        let mut r = row.to_vec();
        for (pr, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        let width = r.len() - 1;
        match r[..width].iter().position(|c| !c.is_zero()) {
            Some(p) => Reduced::Pivot(r, p),
            None if r[width].is_zero() => Reduced::Zero,
            None => Reduced::Inconsistent,
        }
    }

    fn contains_row(&self, row: &[BigRational]) -> bool {
        matches!(self.reduce(row), Reduced::Zero)
    }

    /// Intersection with one more equation; `None` when it is empty.
    fn meet(&self, row: &[BigRational]) -> Option<Self> {
        match self.reduce(row) {
            Reduced::Zero => Some(self.clone()),
            Reduced::Inconsistent => None,
            Reduced::Pivot(mut r, p) => {
                let lead = r[p].clone();
                for x in r.iter_mut() {
                    *x /= &lead;
                }
                let mut rows = self.rows.clone();
                for pr in rows.iter_mut() {
                    if !pr[p].is_zero() {
                        let f = pr[p].clone();
                        for (x, y) in pr.iter_mut().zip(&r) {
                            *x -= &f * y;
                        }
                    }
                }
                let at = self.pivots.partition_point(|&q| q < p);
                rows.insert(at, r);
                let mut pivots = self.pivots.clone();
                pivots.insert(at, p);
                Some(Self { rows, pivots })
            }
        }
    }

    /// Solution with every free variable set to zero.
    fn basepoint(&self, dim: usize) -> Vec<BigRational> {
        let mut point = vec![BigRational::zero(); dim];
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            point[p] = row[dim].clone();
        }
        point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Indices (0-based, ascending) of every hyperplane containing the flat.
    pub defining_set: Vec<usize>,
    /// Codimension.
    pub rank: usize,
    pub basepoint: Vec<BigRational>,
    pub direction_dim: usize,
}

/// Intersection poset ordered by reverse inclusion; flat 0 is the ambient space
/// and ids increase with rank, ties broken lexicographically on defining sets.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    ambient_dim: usize,
    flats: Vec<Flat>,
    masks: Vec<Vec<u64>>,
    mobius: Vec<i64>,
    covers: Vec<(usize, usize)>,
}

fn mask_of(set: &[usize], words: usize) -> Vec<u64> {
    let mut m = vec![0u64; words];
    for &k in set {
        m[k / 64] |= 1 << (k % 64);
    }
    m
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn mobius(&self, id: usize) -> i64 {
        self.mobius[id]
    }

    pub fn mobius_values(&self) -> &[i64] {
        &self.mobius
    }

    /// `x <= y` in the poset, i.e. flat `y` is contained in flat `x`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        is_subset(&self.masks[x], &self.masks[y])
    }

    /// Pairs `(x, y)` with `x < y` and `rank y = rank x + 1`.
    pub fn cover_relations(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn max_rank(&self) -> usize {
        self.flats.iter().map(|f| f.rank).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            flats: self
                .flats
                .iter()
                .enumerate()
                .map(|(id, f)| FlatJson {
                    id,
                    rank: f.rank,
                    defining_set: f.defining_set.clone(),
                    mobius: self.mobius[id],
                })
                .collect(),
            cover_relations: self.covers.clone(),
        }
    }
}

/// Machine-readable poset: flats plus cover relations as id pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub flats: Vec<FlatJson>,
    pub cover_relations: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatJson {
    pub id: usize,
    pub rank: usize,
    pub defining_set: Vec<usize>,
    pub mobius: i64,
}

/// Builds the poset level by level: every flat of rank `r + 1` is the meet of
/// a rank-`r` flat with a single hyperplane, so no subset enumeration is needed.
pub fn intersection_poset(arr: &Arrangement) -> IntersectionPoset {
    let dim = arr.ambient_dim;
    let rows: Vec<Vec<BigRational>> = arr.hyperplanes.iter().map(Hyperplane::augmented_row).collect();
    let defining = |e: &Echelon| -> Vec<usize> {
        (0..rows.len()).filter(|&k| e.contains_row(&rows[k])).collect()
    };

    let mut flats: Vec<(Echelon, Vec<usize>)> = vec![(Echelon::ambient(), Vec::new())];
    let mut level = 0..1;
    while !level.is_empty() {
        let mut next: HashMap<Echelon, Vec<usize>> = HashMap::new();
        for id in level.clone() {
            let (echelon, def) = &flats[id];
            for (k, row) in rows.iter().enumerate() {
                if def.binary_search(&k).is_ok() {
                    continue;
                }
                if let Some(meet) = echelon.meet(row) {
                    if let std::collections::hash_map::Entry::Vacant(slot) = next.entry(meet) {
                        let d = defining(slot.key());
                        slot.insert(d);
                    }
                }
            }
        }
        let mut fresh: Vec<(Echelon, Vec<usize>)> = next.into_iter().collect();
        fresh.sort_by(|a, b| a.1.cmp(&b.1));
        let start = flats.len();
        flats.extend(fresh);
        level = start..flats.len();
    }

    let words = rows.len().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = flats.iter().map(|(_, d)| mask_of(d, words)).collect();
    let flats: Vec<Flat> = flats
        .into_iter()
        .map(|(e, defining_set)| Flat {
            rank: e.rows.len(),
            direction_dim: dim - e.rows.len(),
            basepoint: e.basepoint(dim),
            defining_set,
        })
        .collect();

    let mut mobius = vec![0i64; flats.len()];
    let mut covers = Vec::new();
    for x in 0..flats.len() {
        let mut below = 0i64;
        for y in 0..x {
            if flats[y].rank < flats[x].rank && is_subset(&masks[y], &masks[x]) {
                below += mobius[y];
                if flats[y].rank + 1 == flats[x].rank {
                    covers.push((y, x));
                }
            }
        }
        mobius[x] = if x == 0 { 1 } else { -below };
    }
    covers.sort_unstable();

    IntersectionPoset { ambient_dim: dim, flats, masks, mobius, covers }
}

/// Coefficients `b_0, ..., b_r` where `r` is the top rank of the poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePolynomial {
    pub coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn eval(&self, t: i64) -> i128 {
        self.coefficients.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }
}

/// `pi(t) = sum_X mu(X) (-t)^{rank X}`.
pub fn poincare_polynomial(poset: &IntersectionPoset) -> PoincarePolynomial {
    let mut signed = vec![0i64; poset.max_rank() + 1];
    for (f, &mu) in poset.flats.iter().zip(&poset.mobius) {
        let sign = if f.rank % 2 == 0 { 1 } else { -1 };
        signed[f.rank] += sign * mu;
    }
    let coefficients = signed
        .into_iter()
        .map(|c| u64::try_from(c).expect("Poincare coefficient of an arrangement is nonnegative"))
        .collect();
    PoincarePolynomial { coefficients }
}

pub fn betti_numbers(arr: &Arrangement) -> Vec<u64> {
    poincare_polynomial(&intersection_poset(arr)).coefficients
}

/// `prod_{k=1}^{n-1} (1 + k t)` expanded, the Poincare polynomial of the
/// braid arrangement and of the pure braid group P_n.
pub fn braid_poincare_product(n: usize) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for k in 1..n.max(1) as u64 {
        let mut next = vec![0u64; coeffs.len() + 1];
        for (d, &c) in coeffs.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * k;
        }
        coeffs = next;
    }
    coeffs
}
