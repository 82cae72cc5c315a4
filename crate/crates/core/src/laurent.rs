//! Laurent polynomials in `t` over Z and square matrices of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::GaussianRational;

/// Sparse `exponent -> coefficient` map with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, BigInt::from(c));
        p
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    /// `t^e` with coefficient `(-1)^e`, i.e. `(-t)^e`.
    pub fn neg_t_pow(e: i64) -> Self {
        Self::monomial(if e.rem_euclid(2) == 0 { 1 } else { -1 }, e)
    }

    /// Substitutes `t = value`; `None` when `value = 0` and a negative power occurs.
    pub fn eval(&self, value: &GaussianRational) -> Option<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (&e, c) in &self.terms {
            let c = GaussianRational::real(c.clone().into());
            acc = &acc + &(&c * &value.powi(e)?);
        }
        Some(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `t^-1`, `1 - t + t^2`, `-2*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

/// Square matrix over Z[t, 1/t].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn identity(size: usize) -> Self {
        let entries = (0..size)
            .map(|r| (0..size).map(|c| LaurentPoly::constant((r == c) as i64)).collect())
            .collect();
        Self { size, entries }
    }

    pub fn from_rows(entries: Vec<Vec<LaurentPoly>>) -> Self {
        let size = entries.len();
        assert!(entries.iter().all(|r| r.len() == size), "matrix must be square");
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.entries[r][c] = p;
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = vec![vec![LaurentPoly::zero(); n]; n];
        for (r, row) in self.entries.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (c, b) in rhs.entries[k].iter().enumerate() {
                    if !b.is_zero() {
                        out[r][c] = &out[r][c] + &(a * b);
                    }
                }
            }
        }
        Self { size: n, entries: out }
    }

    /// Laplace expansion along rows, memoized on the set of remaining columns.
    pub fn determinant(&self) -> LaurentPoly {
        assert!(self.size <= 24, "determinant limited to 24x24");
        let mut memo: HashMap<u32, LaurentPoly> = HashMap::new();
        self.minor(((1u64 << self.size) - 1) as u32, &mut memo)
    }

    fn minor(&self, cols: u32, memo: &mut HashMap<u32, LaurentPoly>) -> LaurentPoly {
        if cols == 0 {
            return LaurentPoly::constant(1);
        }
        if let Some(hit) = memo.get(&cols) {
            return hit.clone();
        }
        let row = self.size - cols.count_ones() as usize;
        let mut acc = LaurentPoly::zero();
        let mut position = 0;
        for c in 0..self.size {
            if cols >> c & 1 == 0 {
                continue;
            }
            let a = &self.entries[row][c];
            if !a.is_zero() {
                let term = a * &self.minor(cols & !(1 << c), memo);
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Entrywise substitution `t = value`.
    pub fn eval(&self, value: &GaussianRational) -> Option<Vec<Vec<GaussianRational>>> {
        self.entries.iter().map(|row| row.iter().map(|p| p.eval(value)).collect()).collect()
    }
}

impl fmt::Display for LaurentMatrix {
    /// One bracketed row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.entries.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
