//! Stiefel-Whitney classes of representations of a free abelian group (or of
//! P_n through its abelianization) that factor through a 2-torus.
//!
//! Such a representation is a Whitney sum of real line bundles; row `i` of the
//! matrix is `w_1` of the `i`-th summand in the basis `e_1, ..., e_n` of
//! H^1(Z^n; F2). The cohomology of Z^n with F2 coefficients is an exterior
//! algebra, so `w_k` is the `k`-th elementary symmetric polynomial of the rows
//! with all squares zero.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arnold::{
    generator_count, straighten, AdmissibleMonomial, ArnoldClass, ExteriorForm, Generator, Ring,
};
use crate::error::CharClassError;
use crate::f2::F2Vector;

/// A homogeneous class in the exterior algebra over F2 on `e_1, ..., e_n`.
/// Monomials are ascending 0-based index lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct F2Class {
    n: usize,
    degree: usize,
    terms: BTreeSet<Vec<usize>>,
}

impl F2Class {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self { n, degree, terms: BTreeSet::new() }
    }

    pub fn one(n: usize) -> Self {
        Self { n, degree: 0, terms: BTreeSet::from([Vec::new()]) }
    }

    pub fn linear(v: &F2Vector) -> Self {
        Self { n: v.len(), degree: 1, terms: v.ones().map(|k| vec![k]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeSet<Vec<usize>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn toggle(&mut self, m: Vec<usize>) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = other.degree;
        }
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n, self.degree + other.degree);
        for a in &self.terms {
            for b in &other.terms {
                if a.iter().any(|k| b.binary_search(k).is_ok()) {
                    continue;
                }
                let mut m: Vec<usize> = a.iter().chain(b).copied().collect();
                m.sort_unstable();
                out.toggle(m);
            }
        }
        out
    }

    /// Image in H^*(P_strands; F2) when `e_k` is the class dual to the `k`-th
    /// generator `A[i,j]` in index order.
    pub fn to_arnold(&self, strands: usize) -> Result<ArnoldClass, CharClassError> {
        let expected = generator_count(strands);
        if self.n != expected {
            return Err(CharClassError::StrandMismatch { strands, n: self.n, expected });
        }
        let words = self
            .terms
            .iter()
            .map(|m| (1, m.iter().map(|&k| Generator::from_index(k)).collect()));
        let form = ExteriorForm::from_words(strands, Ring::F2, words)?;
        let class = straighten(&form);
        Ok(if class.is_zero() { ArnoldClass::zero(strands, Ring::F2, self.degree) } else { class })
    }
}

impl fmt::Display for F2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_empty() {
                f.write_str("1")?;
            }
            for (l, idx) in m.iter().enumerate() {
                if l > 0 {
                    f.write_str("*")?;
                }
                write!(f, "e{}", idx + 1)?;
            }
        }
        Ok(())
    }
}

/// A sum of `q` real line bundles over a rank-`n` free abelian group, as a
/// `q x n` matrix over F2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToralRep {
    n: usize,
    rows: Vec<F2Vector>,
    /// The rows sum to zero, so every element acts with determinant 1.
    special_orthogonal: bool,
}

impl ToralRep {
    pub fn new(n: usize, rows: Vec<F2Vector>) -> Result<Self, CharClassError> {
        for (k, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(CharClassError::RaggedRow { line: k + 1, expected: n, found: r.len() });
            }
        }
        let mut sum = F2Vector::zeros(n);
        for r in &rows {
            sum.xor_assign(r);
        }
        Ok(Self { n, rows, special_orthogonal: sum.is_zero() })
    }

    pub fn from_masks(n: usize, masks: &[u64]) -> Self {
        Self::new(n, masks.iter().map(|&m| F2Vector::from_mask(n, m)).collect()).expect("rows have length n")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn special_orthogonal(&self) -> bool {
        self.special_orthogonal
    }

    /// Row concatenation.
    pub fn whitney_sum(&self, other: &Self) -> Result<Self, CharClassError> {
        if self.n != other.n {
            return Err(CharClassError::RankMismatch(self.n, other.n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            n: self.n,
            rows,
            special_orthogonal: self.special_orthogonal && other.special_orthogonal,
        })
    }

    /// Matrix file text: one row of space-separated 0/1 digits per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let bits: Vec<&str> = (0..self.n).map(|k| if r.get(k) { "1" } else { "0" }).collect();
            out.push_str(&bits.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reads an F2 matrix file. Blank lines and `#` comments are skipped; the
/// column count comes from the first row (an empty file gives `q = n = 0`).
pub fn parse_f2_matrix(text: &str) -> Result<ToralRep, CharClassError> {
    let mut rows = Vec::new();
    let mut width = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let bits = content
            .split_whitespace()
            .map(|tok| match tok {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(CharClassError::BadEntry { line, token: tok.to_string() }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let expected = *width.get_or_insert(bits.len());
        if bits.len() != expected {
            return Err(CharClassError::RaggedRow { line, expected, found: bits.len() });
        }
        rows.push(F2Vector::from_bits(&bits));
    }
    ToralRep::new(width.unwrap_or(0), rows)
}

/// `w_k`: the `k`-th elementary symmetric polynomial of the rows. Zero for `k > q`.
pub fn sw_total(rep: &ToralRep, k: usize) -> F2Class {
    if k > rep.q() {
        return F2Class::zero(rep.n, k);
    }
    // elementary[d] = e_d of the rows seen so far
    let mut elementary: Vec<F2Class> = (0..=k).map(|d| F2Class::zero(rep.n, d)).collect();
    elementary[0] = F2Class::one(rep.n);
    for row in &rep.rows {
        let lin = F2Class::linear(row);
        for d in (1..=k).rev() {
            let step = elementary[d - 1].mul(&lin);
            elementary[d] = elementary[d].add(&step);
        }
    }
    elementary.swap_remove(k)
}

/// The first two Stiefel-Whitney classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwPair {
    pub w1: F2Class,
    pub w2: F2Class,
}

pub fn sw_pair(rep: &ToralRep) -> SwPair {
    SwPair { w1: sw_total(rep, 1), w2: sw_total(rep, 2) }
}

/// Trivial as a stable bundle iff `w_1` and `w_2` vanish. For these
/// representations that already forces the unstable `q`-plane bundle to be
/// trivial, equivalently the representation lifts to Spin.
pub fn is_stably_trivial(rep: &ToralRep) -> bool {
    sw_total(rep, 1).is_zero() && sw_total(rep, 2).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    W1(F2Class),
    W2(F2Class),
}

/// Certificate for [`is_stably_trivial`]. Row indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingWitness {
    /// Nonzero rows matched into pairs of equal rows (Whitney sums of a line
    /// bundle with itself), plus the rows that are identically zero.
    Paired { pairs: Vec<(usize, usize)>, zero_rows: Vec<usize> },
    /// The first nonvanishing class among `w_1`, `w_2`.
    Obstructed(Obstruction),
    /// Both classes vanish but some nonzero row values occur an odd number of
    /// times, e.g. the seven nonzero vectors of F2^3. Needs `q >= 7`.
    Unpaired { pairs: Vec<(usize, usize)>, zero_rows: Vec<usize>, unmatched: Vec<usize> },
}

/// Greedy pairing in index order: each unmatched nonzero row is matched with
/// the next equal unmatched row.
pub fn pairing_witness(rep: &ToralRep) -> PairingWitness {
    let w1 = sw_total(rep, 1);
    if !w1.is_zero() {
        return PairingWitness::Obstructed(Obstruction::W1(w1));
    }
    let w2 = sw_total(rep, 2);
    if !w2.is_zero() {
        return PairingWitness::Obstructed(Obstruction::W2(w2));
    }
    let mut used = vec![false; rep.q()];
    let mut pairs = Vec::new();
    let mut zero_rows = Vec::new();
    let mut unmatched = Vec::new();
    for a in 0..rep.q() {
        if used[a] {
            continue;
        }
        used[a] = true;
        if rep.rows[a].is_zero() {
            zero_rows.push(a);
            continue;
        }
        match (a + 1..rep.q()).find(|&b| !used[b] && rep.rows[b] == rep.rows[a]) {
            Some(b) => {
                used[b] = true;
                pairs.push((a, b));
            }
            None => unmatched.push(a),
        }
    }
    if unmatched.is_empty() {
        PairingWitness::Paired { pairs, zero_rows }
    } else {
        PairingWitness::Unpaired { pairs, zero_rows, unmatched }
    }
}

fn check_monomial(strands: usize, monomial: &AdmissibleMonomial) -> Result<(), CharClassError> {
    if monomial.fits(strands) {
        Ok(())
    } else {
        Err(crate::error::ArnoldError::Inadmissible.into())
    }
}

fn indicator(strands: usize, g: Generator) -> F2Vector {
    F2Vector::from_support(generator_count(strands), &[g.index()])
}

/// The projection of P_n onto the coordinates named by `A_{I,J}`, followed by
/// the diagonal inclusion of (Z/2)^t in O(t).
pub fn alpha_rep(strands: usize, monomial: &AdmissibleMonomial) -> Result<ToralRep, CharClassError> {
    check_monomial(strands, monomial)?;
    let rows = monomial.factors().iter().map(|&g| indicator(strands, g)).collect();
    ToralRep::new(generator_count(strands), rows)
}

/// As [`alpha_rep`] plus a parity row (the sum of the others), landing in SO(t+1).
pub fn beta_rep(strands: usize, monomial: &AdmissibleMonomial) -> Result<ToralRep, CharClassError> {
    let alpha = alpha_rep(strands, monomial)?;
    let mut parity = F2Vector::zeros(alpha.n);
    for r in &alpha.rows {
        parity.xor_assign(r);
    }
    let mut rows = alpha.rows;
    rows.push(parity);
    ToralRep::new(alpha.n, rows)
}

/// Constructs a representation of P_strands with `w_1 = zeta1` and
/// `w_2 = zeta2`: one line bundle carrying `zeta1` (omitted when `zeta1 = 0`)
/// plus one [`beta_rep`] block per monomial of `zeta2`.
pub fn realize_sw(strands: usize, zeta1: &ArnoldClass, zeta2: &ArnoldClass) -> Result<ToralRep, CharClassError> {
    for zeta in [zeta1, zeta2] {
        if zeta.ring() != Ring::F2 {
            return Err(CharClassError::WrongRing);
        }
        if zeta.n() != strands {
            return Err(CharClassError::WrongStrands { expected: strands, found: zeta.n() });
        }
    }
    if !zeta1.has_degree(1) {
        return Err(CharClassError::WrongDegree { expected: 1, found: zeta1.degree() });
    }
    if !zeta2.has_degree(2) {
        return Err(CharClassError::WrongDegree { expected: 2, found: zeta2.degree() });
    }
    let n = generator_count(strands);
    let mut rep = ToralRep::new(n, Vec::new())?;
    if !zeta1.is_zero() {
        let mut line = F2Vector::zeros(n);
        for m in zeta1.terms().keys() {
            line.flip(m.factors()[0].index());
        }
        rep = rep.whitney_sum(&ToralRep::new(n, vec![line])?)?;
    }
    for m in zeta2.terms().keys() {
        rep = rep.whitney_sum(&beta_rep(strands, m)?)?;
    }
    assert_eq!(&sw_total(&rep, 1).to_arnold(strands)?, zeta1, "realized w1 differs");
    assert_eq!(&sw_total(&rep, 2).to_arnold(strands)?, zeta2, "realized w2 differs");
    Ok(rep)
}

/// Stable class in reduced KU^0 of a unitary representation of a
/// homologically toroidal group: always zero, since every such map to BU is
/// null-homotopic. Covers the zero representation and the complexified Burau
/// representation at t = 1 alike.
pub const fn ku_rep_is_trivial() -> bool {
    true
}
