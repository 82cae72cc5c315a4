//! Cohomology ring of the pure braid group P_n: the exterior algebra on
//! degree-one generators `A[i,j]` (`1 <= j < i <= n`) modulo the three-term
//! relations
//!
//! ```text
//! A[i,j]*A[i,t] - A[t,j]*A[i,t] + A[t,j]*A[i,j] = 0      (j < t < i)
//! ```
//!
//! Classes are kept in the admissible basis: products whose first indices
//! strictly increase. Straightening rewrites a word by
//!
//! * sorting its factors by `(i, j)`, one sign flip per adjacent swap,
//! * killing words with a repeated factor,
//! * replacing an adjacent pair `A[i,j]*A[i,t]` (`j < t`) by
//!   `A[t,j]*A[i,t] - A[t,j]*A[i,j]`.
//!
//! The last rule trades first indices `{i, i}` for `{t, i}` with `t < i`, so
//! the multiset of first indices strictly decreases (multiset order) and the
//! process terminates. Since the rules only add elements of the relation
//! ideal and admissible monomials form a basis of the quotient, every
//! rewriting order reaches the same normal form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ArnoldError;

/// Coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z,
    F2,
}

impl Ring {
    fn normalize(self, c: i64) -> i64 {
        match self {
            Ring::Z => c,
            Ring::F2 => c.rem_euclid(2),
        }
    }
}

/// The generator `A[i,j]`, ordered by `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
}

impl Generator {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self, ArnoldError> {
        if j >= 1 && j < i && i <= n {
            Ok(Self { i, j })
        } else {
            Err(ArnoldError::BadGenerator { n, i, j })
        }
    }

    /// Position of `A[i,j]` in the ordering `A[2,1], A[3,1], A[3,2], A[4,1], ...`,
    /// which is also the coordinate order used for the abelianization Z^C(n,2).
    pub fn index(self) -> usize {
        (self.i - 1) * (self.i - 2) / 2 + (self.j - 1)
    }

    /// Inverse of [`Generator::index`].
    pub fn from_index(k: usize) -> Self {
        let mut i = 2;
        while i * (i - 1) / 2 <= k {
            i += 1;
        }
        Self { i, j: k - (i - 1) * (i - 2) / 2 + 1 }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.i, self.j)
    }
}

/// Number of generators of H^1(P_n), i.e. C(n, 2).
pub fn generator_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All generators of P_n in index order.
pub fn generators(n: usize) -> Vec<Generator> {
    (2..=n).flat_map(|i| (1..i).map(move |j| Generator { i, j })).collect()
}

/// A product of generators with strictly increasing first indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdmissibleMonomial(Vec<Generator>);

impl AdmissibleMonomial {
    pub fn new(factors: Vec<Generator>) -> Result<Self, ArnoldError> {
        if factors.windows(2).all(|w| w[0].i < w[1].i) {
            Ok(Self(factors))
        } else {
            Err(ArnoldError::Inadmissible)
        }
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn fits(&self, n: usize) -> bool {
        self.0.iter().all(|g| g.j >= 1 && g.j < g.i && g.i <= n)
    }
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[Generator]) -> fmt::Result {
    if word.is_empty() {
        return f.write_str("1");
    }
    for (k, g) in word.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

fn add_coeff<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64, ring: Ring) {
    let entry = map.entry(key).or_insert(0);
    *entry = ring.normalize(entry.checked_add(c).expect("coefficient overflow"));
}

fn prune<K: Ord>(map: &mut BTreeMap<K, i64>) {
    map.retain(|_, c| *c != 0);
}

/// Sorts a word by `(i, j)`, returning the sign of the permutation, or `None`
/// if a generator repeats (the word is zero in an exterior algebra).
pub fn sort_word(word: &mut [Generator]) -> Option<i64> {
    let mut sign = 1;
    for a in 1..word.len() {
        let mut b = a;
        while b > 0 && word[b - 1] > word[b] {
            word.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if word.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// An element of the free exterior algebra on the generators, before the
/// three-term relations are imposed. Words are stored sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorForm {
    n: usize,
    ring: Ring,
    terms: BTreeMap<Vec<Generator>, i64>,
}

impl ExteriorForm {
    pub fn zero(n: usize, ring: Ring) -> Self {
        Self { n, ring, terms: BTreeMap::new() }
    }

    /// Sums `coefficient * word` over the given words, applying only the
    /// exterior sign and square-zero rules.
    pub fn from_words<I>(n: usize, ring: Ring, words: I) -> Result<Self, ArnoldError>
    where
        I: IntoIterator<Item = (i64, Vec<Generator>)>,
    {
        let mut form = Self::zero(n, ring);
        for (c, word) in words {
            form.add_word(c, word)?;
        }
        Ok(form)
    }

    pub fn add_word(&mut self, c: i64, mut word: Vec<Generator>) -> Result<(), ArnoldError> {
        for g in &word {
            Generator::new(self.n, g.i, g.j)?;
        }
        if let Some(sign) = sort_word(&mut word) {
            add_coeff(&mut self.terms, word, sign * c, self.ring);
            prune(&mut self.terms);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Generator>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reduce_mod2(&self) -> Self {
        let mut terms = self.terms.clone();
        for c in terms.values_mut() {
            *c = c.rem_euclid(2);
        }
        prune(&mut terms);
        Self { n: self.n, ring: Ring::F2, terms }
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(w, &c)| (w.as_slice(), c)))
    }
}

fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a [Generator], i64)>,
{
    let mut first = true;
    for (word, c) in terms {
        let (neg, abs) = (c < 0, c.unsigned_abs());
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if word.is_empty() {
            write!(f, "{abs}")?;
        } else {
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            write_word(f, word)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A homogeneous class of H^*(P_n) in admissible normal form.
#[derive(Clone, Debug, Eq, Serialize, Deserialize)]
pub struct ArnoldClass {
    n: usize,
    ring: Ring,
    degree: usize,
    terms: BTreeMap<AdmissibleMonomial, i64>,
}

impl PartialEq for ArnoldClass {
    /// Zero classes compare equal regardless of their nominal degree.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.ring == other.ring
            && self.terms == other.terms
            && (self.degree == other.degree || self.terms.is_empty())
    }
}

impl ArnoldClass {
    pub fn zero(n: usize, ring: Ring, degree: usize) -> Self {
        Self { n, ring, degree, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, ring: Ring) -> Self {
        Self::from_monomial(n, ring, AdmissibleMonomial::unit(), 1)
    }

    pub fn from_monomial(n: usize, ring: Ring, m: AdmissibleMonomial, c: i64) -> Self {
        let mut class = Self::zero(n, ring, m.degree());
        add_coeff(&mut class.terms, m, c, ring);
        prune(&mut class.terms);
        class
    }

    /// Builds a class from admissible monomials of one common degree.
    pub fn from_terms<I>(n: usize, ring: Ring, terms: I) -> Result<Self, ArnoldError>
    where
        I: IntoIterator<Item = (AdmissibleMonomial, i64)>,
    {
        let mut degree = None;
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if !m.fits(n) {
                return Err(ArnoldError::Inadmissible);
            }
            if *degree.get_or_insert(m.degree()) != m.degree() {
                return Err(ArnoldError::Inhomogeneous);
            }
            add_coeff(&mut map, m, c, ring);
        }
        prune(&mut map);
        Ok(Self { n, ring, degree: degree.unwrap_or(0), terms: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<AdmissibleMonomial, i64> {
        &self.terms
    }

    pub fn coefficient(&self, m: &AdmissibleMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Whether this class can stand in for a degree-`d` class (zero always can).
    pub fn has_degree(&self, d: usize) -> bool {
        self.is_zero() || self.degree == d
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ArnoldError> {
        if self.n != other.n {
            return Err(ArnoldError::Mismatch("strand counts differ"));
        }
        if self.ring != other.ring {
            return Err(ArnoldError::Mismatch("coefficient rings differ"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArnoldError> {
        self.check_compatible(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(ArnoldError::Inhomogeneous);
        }
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            add_coeff(&mut terms, m.clone(), c, self.ring);
        }
        prune(&mut terms);
        Ok(Self { terms, ..self.clone() })
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            add_coeff(&mut terms, m.clone(), c.checked_mul(k).expect("coefficient overflow"), self.ring);
        }
        prune(&mut terms);
        Self { terms, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArnoldError> {
        self.add(&other.neg())
    }

    /// The same class viewed in the free exterior algebra.
    pub fn to_exterior(&self) -> ExteriorForm {
        ExteriorForm {
            n: self.n,
            ring: self.ring,
            terms: self.terms.iter().map(|(m, &c)| (m.0.clone(), c)).collect(),
        }
    }
}

impl fmt::Display for ArnoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(m, &c)| (m.0.as_slice(), c)))
    }
}

pub fn generator(n: usize, i: usize, j: usize) -> Result<ArnoldClass, ArnoldError> {
    generator_in(n, Ring::Z, i, j)
}

pub fn generator_in(n: usize, ring: Ring, i: usize, j: usize) -> Result<ArnoldClass, ArnoldError> {
    let g = Generator::new(n, i, j)?;
    Ok(ArnoldClass::from_monomial(n, ring, AdmissibleMonomial(vec![g]), 1))
}

/// Rewrites sorted words into admissible normal form, caching per word.
#[derive(Default)]
struct Straightener {
    memo: HashMap<Vec<Generator>, Vec<(AdmissibleMonomial, i64)>>,
}

impl Straightener {
    /// `word` must be sorted with no repeats.
    fn word(&mut self, word: &[Generator]) -> Vec<(AdmissibleMonomial, i64)> {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let clash = word.windows(2).position(|w| w[0].i == w[1].i);
        let result = match clash {
            None => vec![(AdmissibleMonomial(word.to_vec()), 1)],
            Some(p) => {
                let (i, j, t) = (word[p].i, word[p].j, word[p + 1].j);
                let tj = Generator { i: t, j };
                let it = Generator { i, j: t };
                let ij = Generator { i, j };
                let mut acc: BTreeMap<AdmissibleMonomial, i64> = BTreeMap::new();
                for (coeff, pair) in [(1, [tj, it]), (-1, [tj, ij])] {
                    let mut next = word.to_vec();
                    next[p] = pair[0];
                    next[p + 1] = pair[1];
                    if let Some(sign) = sort_word(&mut next) {
                        for (m, c) in self.word(&next) {
                            add_coeff(&mut acc, m, coeff * sign * c, Ring::Z);
                        }
                    }
                }
                prune(&mut acc);
                acc.into_iter().collect()
            }
        };
        self.memo.insert(word.to_vec(), result.clone());
        result
    }
}

/// Normal form of a formal sum of words in the admissible basis.
pub fn straighten(form: &ExteriorForm) -> ArnoldClass {
    let mut rewriter = Straightener::default();
    let mut terms = BTreeMap::new();
    let mut degree = None;
    for (word, &c) in &form.terms {
        degree.get_or_insert(word.len());
        for (m, k) in rewriter.word(word) {
            add_coeff(&mut terms, m, c.checked_mul(k).expect("coefficient overflow"), form.ring);
        }
    }
    prune(&mut terms);
    let degree = terms.keys().next().map(AdmissibleMonomial::degree).or(degree).unwrap_or(0);
    ArnoldClass { n: form.n, ring: form.ring, degree, terms }
}

/// Straightens a single signed word.
pub fn straighten_word(n: usize, ring: Ring, c: i64, word: Vec<Generator>) -> Result<ArnoldClass, ArnoldError> {
    let degree = word.len();
    let form = ExteriorForm::from_words(n, ring, [(c, word)])?;
    let mut class = straighten(&form);
    if class.is_zero() {
        class.degree = degree;
    }
    Ok(class)
}

/// Graded product in normal form.
pub fn multiply(a: &ArnoldClass, b: &ArnoldClass) -> Result<ArnoldClass, ArnoldError> {
    a.check_compatible(b)?;
    let mut form = ExteriorForm::zero(a.n, a.ring);
    for (ma, &ca) in &a.terms {
        for (mb, &cb) in &b.terms {
            let mut word = ma.0.clone();
            word.extend_from_slice(&mb.0);
            form.add_word(ca.checked_mul(cb).expect("coefficient overflow"), word)?;
        }
    }
    let mut class = straighten(&form);
    if class.is_zero() {
        class.degree = a.degree + b.degree;
    }
    Ok(class)
}

pub fn reduce_mod2(a: &ArnoldClass) -> ArnoldClass {
    let mut terms = a.terms.clone();
    for c in terms.values_mut() {
        *c = c.rem_euclid(2);
    }
    prune(&mut terms);
    ArnoldClass { ring: Ring::F2, terms, ..a.clone() }
}

/// Admissible monomials of degree `t` in lexicographic order; empty for `t >= n`.
pub fn basis(n: usize, t: usize) -> Vec<AdmissibleMonomial> {
    fn extend(n: usize, t: usize, prefix: &mut Vec<Generator>, out: &mut Vec<AdmissibleMonomial>) {
        if prefix.len() == t {
            out.push(AdmissibleMonomial(prefix.clone()));
            return;
        }
        let start = prefix.last().map_or(2, |g| g.i + 1);
        for i in start..=n {
            for j in 1..i {
                prefix.push(Generator { i, j });
                extend(n, t, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if t < n.max(1) {
        extend(n, t, &mut Vec::new(), &mut out);
    }
    out
}

pub fn dim(n: usize, t: usize) -> usize {
    basis(n, t).len()
}

/// The relator `A[i,j]*A[i,t] - A[t,j]*A[i,t] + A[t,j]*A[i,j]` as a formal sum.
pub fn three_term_relator(n: usize, ring: Ring, i: usize, t: usize, j: usize) -> Result<ExteriorForm, ArnoldError> {
    if !(1 <= j && j < t && t < i && i <= n) {
        return Err(ArnoldError::BadGenerator { n, i, j });
    }
    let g = |a, b| Generator { i: a, j: b };
    ExteriorForm::from_words(
        n,
        ring,
        [
            (1, vec![g(i, j), g(i, t)]),
            (-1, vec![g(t, j), g(i, t)]),
            (1, vec![g(t, j), g(i, j)]),
        ],
    )
}

/// Parses the `A[i,j]` text syntax into a formal sum (not yet straightened).
///
/// Grammar: `term (("+"|"-") term)*`, a term being an optional leading sign,
/// an optional integer coefficient followed by `*`, and a `*`-separated list
/// of generators; a bare integer is a degree-0 term.
pub fn parse_form(n: usize, ring: Ring, text: &str) -> Result<ExteriorForm, ArnoldError> {
    Parser { src: text.as_bytes(), pos: 0, n }.sum(ring)
}

/// Parses and straightens; the result must be homogeneous.
pub fn parse_class(n: usize, ring: Ring, text: &str) -> Result<ArnoldClass, ArnoldError> {
    let form = parse_form(n, ring, text)?;
    let mut degrees = form.terms.keys().map(Vec::len);
    if let Some(d) = degrees.next() {
        if degrees.any(|e| e != d) {
            return Err(ArnoldError::Inhomogeneous);
        }
    }
    Ok(straighten(&form))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, ArnoldError> {
        Err(ArnoldError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ArnoldError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", b as char))
        }
    }

    fn number(&mut self) -> Result<i64, ArnoldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("number too large")
            }
        }
    }

    fn generator(&mut self) -> Result<Generator, ArnoldError> {
        self.expect(b'A')?;
        self.expect(b'[')?;
        let i = self.number()? as usize;
        self.expect(b',')?;
        let j = self.number()? as usize;
        self.expect(b']')?;
        Generator::new(self.n, i, j)
    }

    fn term(&mut self) -> Result<(i64, Vec<Generator>), ArnoldError> {
        let sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        let (coeff, word) = self.unsigned_term()?;
        Ok((sign * coeff, word))
    }

    fn unsigned_term(&mut self) -> Result<(i64, Vec<Generator>), ArnoldError> {
        let mut coeff = 1i64;
        let mut word = Vec::new();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff = self.number()?;
                if self.peek() != Some(b'*') {
                    return Ok((coeff, word));
                }
                self.pos += 1;
                word.push(self.generator()?);
            }
            Some(b'A') => word.push(self.generator()?),
            _ => return self.err("expected a coefficient or a generator"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            word.push(self.generator()?);
        }
        Ok((coeff, word))
    }

    fn sum(&mut self, ring: Ring) -> Result<ExteriorForm, ArnoldError> {
        let mut form = ExteriorForm::zero(self.n, ring);
        let mut sign = 1i64;
        loop {
            let (c, word) = self.term()?;
            form.add_word(sign * c, word)?;
            match self.peek() {
                None => return Ok(form),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }
}
