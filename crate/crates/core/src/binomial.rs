//! Exponent vectors, pure-difference binomials `x^u - x^v` and sets of them
//! over a named variable space.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;

/// A named block of variables laid out on a `rows x cols` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableBlock {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    /// Displayed with a single index; only meaningful when `cols == 1`.
    #[serde(default)]
    pub flat: bool,
}

impl VariableBlock {
    pub fn grid(name: &str, rows: usize, cols: usize) -> Self {
        VariableBlock { name: name.to_string(), rows, cols, flat: false }
    }

    /// A block displayed with a single index, `name[i]`.
    pub fn flat(name: &str, len: usize) -> Self {
        VariableBlock { name: name.to_string(), rows: len, cols: 1, flat: true }
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Ordered sequence of variable blocks; variable indices run through the
/// blocks in order and row-major inside each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSpace {
    blocks: Vec<VariableBlock>,
}

impl VariableSpace {
    pub fn new(blocks: Vec<VariableBlock>) -> Self {
        VariableSpace { blocks }
    }

    /// `count` variables displayed as `x[i]`.
    pub fn flat(count: usize) -> Self {
        Self::new(vec![VariableBlock::flat("x", count)])
    }

    pub fn blocks(&self) -> &[VariableBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(VariableBlock::len).sum()
    }

    /// Index range occupied by the named block.
    pub fn block_range(&self, name: &str) -> Option<std::ops::Range<usize>> {
        let mut start = 0;
        for b in &self.blocks {
            if b.name == name {
                return Some(start..start + b.len());
            }
            start += b.len();
        }
        None
    }

    /// Display name such as `x[2,1]` or `y[3]` (1-based indices).
    pub fn var_name(&self, mut idx: usize) -> String {
        for b in &self.blocks {
            if idx < b.len() {
                return if b.flat {
                    format!("{}[{}]", b.name, idx + 1)
                } else {
                    format!("{}[{},{}]", b.name, idx / b.cols + 1, idx % b.cols + 1)
                };
            }
            idx -= b.len();
        }
        panic!("variable index out of range")
    }

    /// Inverse of [`var_name`](Self::var_name).
    pub fn index_of(&self, name: &str) -> Option<usize> {
        let (head, rest) = name.split_once('[')?;
        let inner = rest.strip_suffix(']')?;
        let idx: Vec<usize> = inner.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
        let mut start = 0;
        for b in &self.blocks {
            if b.name == head {
                let local = match (idx.as_slice(), b.cols) {
                    ([i], 1) if b.flat && (1..=b.rows).contains(i) => i - 1,
                    ([i, j], c) if (1..=b.rows).contains(i) && (1..=c).contains(j) => (i - 1) * c + j - 1,
                    _ => return None,
                };
                return Some(start + local);
            }
            start += b.len();
        }
        None
    }

    pub fn without_block(&self, name: &str) -> VariableSpace {
        VariableSpace { blocks: self.blocks.iter().filter(|b| b.name != name).cloned().collect() }
    }
}

/// Nonnegative exponent vector `u` standing for the monomial `x^u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `x^self | x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn disjoint(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// `self - sub + add`, assuming `sub` divides `self`.
    pub fn shift(&self, sub: &ExponentVector, add: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&sub.0)
                .zip(&add.0)
                .map(|((&a, &s), &t)| (a - s).checked_add(t).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }

    /// `self - e_i`, `None` when `x_i` does not divide.
    pub fn minus_unit(&self, i: usize) -> Option<ExponentVector> {
        let mut v = self.0.clone();
        v[i] = v[i].checked_sub(1)?;
        Some(ExponentVector(v))
    }

    pub fn remove_range(&self, range: std::ops::Range<usize>) -> ExponentVector {
        let mut v = self.0.clone();
        v.drain(range);
        ExponentVector(v)
    }

    /// `ω·u` over the rationals.
    pub fn weight(&self, omega: &[BigRational]) -> BigRational {
        omega
            .iter()
            .zip(&self.0)
            .filter(|(_, &e)| e > 0)
            .fold(BigRational::zero(), |acc, (w, &e)| acc + w * BigRational::from_integer(e.into()))
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

/// Splits an integer vector into `(u⁺, u⁻)` with disjoint supports.
pub fn split_pos_neg(u: &[i64]) -> Result<(ExponentVector, ExponentVector)> {
    let conv = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow(format!("exponent {x} does not fit")));
    let mut pos = Vec::with_capacity(u.len());
    let mut neg = Vec::with_capacity(u.len());
    for &x in u {
        pos.push(conv(x.max(0))?);
        neg.push(conv((-x).max(0))?);
    }
    Ok((ExponentVector(pos), ExponentVector(neg)))
}

/// The binomial `x^lhs - x^rhs`; coefficients are implicitly `+1` and `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub lhs: ExponentVector,
    pub rhs: ExponentVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitialForm {
    Lhs,
    Rhs,
    Both,
}

impl Binomial {
    pub fn new(lhs: ExponentVector, rhs: ExponentVector) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        Binomial { lhs, rhs }
    }

    pub fn from_vecs(lhs: Vec<u32>, rhs: Vec<u32>) -> Self {
        Self::new(ExponentVector(lhs), ExponentVector(rhs))
    }

    /// `x^{u⁺} - x^{u⁻}`.
    pub fn from_difference(u: &[i64]) -> Result<Self> {
        let (pos, neg) = split_pos_neg(u)?;
        Ok(Binomial::new(pos, neg))
    }

    pub fn dim(&self) -> usize {
        self.lhs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Coprime sides.
    pub fn is_pure(&self) -> bool {
        self.lhs.disjoint(&self.rhs)
    }

    /// `lhs - rhs` as an integer vector.
    pub fn difference(&self) -> Vec<i64> {
        self.lhs.iter().zip(self.rhs.iter()).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn swapped(&self) -> Binomial {
        Binomial { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    /// Divides out the common factor of both sides.
    pub fn purified(&self) -> Binomial {
        let g = self.lhs.gcd(&self.rhs);
        Binomial { lhs: self.lhs.sub(&g), rhs: self.rhs.sub(&g) }
    }

    /// Orientation with the larger side under `order` on the left.
    pub fn oriented(self, order: &MonomialOrder) -> Binomial {
        if order.compare(&self.lhs, &self.rhs) == Ordering::Less {
            self.swapped()
        } else {
            self
        }
    }

    /// Canonical orientation: larger side under degrevlex first.
    pub fn canonical(self) -> Binomial {
        self.oriented(&MonomialOrder::degrevlex())
    }

    /// Which side carries the initial form with respect to the weight `ω`.
    pub fn initial_form(&self, omega: &[BigRational]) -> InitialForm {
        match self.lhs.weight(omega).cmp(&self.rhs.weight(omega)) {
            Ordering::Greater => InitialForm::Lhs,
            Ordering::Less => InitialForm::Rhs,
            Ordering::Equal => InitialForm::Both,
        }
    }

    /// Deletes the variables in `range` from both sides (substitutes them by 1).
    pub fn substitute_ones(&self, range: std::ops::Range<usize>) -> Binomial {
        Binomial { lhs: self.lhs.remove_range(range.clone()), rhs: self.rhs.remove_range(range) }
    }

    pub fn display<'a>(&'a self, space: &'a VariableSpace) -> BinomialDisplay<'a> {
        BinomialDisplay { b: self, space }
    }
}

pub fn format_monomial(u: &ExponentVector, space: &VariableSpace) -> String {
    let factors: Vec<String> = u
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = space.var_name(i);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub struct BinomialDisplay<'a> {
    b: &'a Binomial,
    space: &'a VariableSpace,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", format_monomial(&self.b.lhs, self.space), format_monomial(&self.b.rhs, self.space))
    }
}

/// Parses `x[1,1]*x[3,1]^2 - 1` style binomials.
pub fn parse_binomial(text: &str, space: &VariableSpace) -> Result<Binomial> {
    let bad = |m: String| Error::Parse { line: 1, column: 1, message: m };
    let (l, r) = text.split_once(" - ").ok_or_else(|| bad(format!("missing ` - ` in `{text}`")))?;
    let mono = |s: &str| -> Result<ExponentVector> {
        let mut v = vec![0u32; space.dim()];
        let s = s.trim();
        if s == "1" {
            return Ok(ExponentVector(v));
        }
        for factor in s.split('*') {
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad(format!("bad exponent in `{factor}`")))?),
                None => (factor, 1),
            };
            let i = space.index_of(name.trim()).ok_or_else(|| bad(format!("unknown variable `{name}`")))?;
            v[i] += e;
        }
        Ok(ExponentVector(v))
    };
    Ok(Binomial::new(mono(l)?, mono(r)?))
}

/// Sort key for canonical line order: degree of the leading side, then the
/// exponent vectors lexicographically.
fn canonical_key(b: &Binomial) -> (u64, &ExponentVector, &ExponentVector) {
    (b.lhs.degree(), &b.lhs, &b.rhs)
}

/// Set of binomials over a shared variable space, one canonical orientation
/// per element, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialSet {
    space: VariableSpace,
    elements: Vec<Binomial>,
}

impl BinomialSet {
    /// Canonicalizes, drops zero binomials and deduplicates.
    pub fn new(space: VariableSpace, elements: impl IntoIterator<Item = Binomial>) -> Self {
        let dim = space.dim();
        let set: BTreeSet<Binomial> = elements
            .into_iter()
            .inspect(|b| assert_eq!(b.dim(), dim, "binomial dimension does not match the variable space"))
            .filter(|b| !b.is_zero())
            .map(Binomial::canonical)
            .collect();
        let mut elements: Vec<Binomial> = set.into_iter().collect();
        elements.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
        BinomialSet { space, elements }
    }

    pub fn space(&self) -> &VariableSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Binomial> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Binomial] {
        &self.elements
    }

    /// Orientation-insensitive membership.
    pub fn contains(&self, b: &Binomial) -> bool {
        let c = b.clone().canonical();
        self.elements.contains(&c)
    }

    pub fn is_subset(&self, other: &BinomialSet) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Substitutes the variables of the named block by 1; binomials that
    /// collapse to zero are dropped.
    pub fn substitute_ones(&self, block: &str) -> Result<BinomialSet> {
        let range = self
            .space
            .block_range(block)
            .ok_or_else(|| Error::InvalidCode(format!("no variable block named `{block}`")))?;
        Ok(BinomialSet::new(
            self.space.without_block(block),
            self.elements.iter().map(|b| b.substitute_ones(range.clone())),
        ))
    }

    pub fn to_lines(&self) -> Vec<String> {
        self.elements.iter().map(|b| b.display(&self.space).to_string()).collect()
    }
}

impl<'a> IntoIterator for &'a BinomialSet {
    type Item = &'a Binomial;
    type IntoIter = std::slice::Iter<'a, Binomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Display for BinomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_pos_neg(&[1, -2, 0]).unwrap(), (ev(&[1, 0, 0]), ev(&[0, 2, 0])));
        assert_eq!(split_pos_neg(&[0, 0]).unwrap(), (ev(&[0, 0]), ev(&[0, 0])));
        assert_eq!(split_pos_neg(&[-3, 4]).unwrap(), (ev(&[0, 4]), ev(&[3, 0])));
    }

    #[test]
    fn initial_forms() {
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>();
        let b = Binomial::from_vecs(vec![1, 0], vec![0, 1]);
        assert_eq!(b.initial_form(&q(&[1, 1])), InitialForm::Both);
        assert_eq!(b.initial_form(&q(&[2, 1])), InitialForm::Lhs);
        assert_eq!(b.initial_form(&q(&[0, 0])), InitialForm::Both);
        assert_eq!(b.initial_form(&q(&[0, 3])), InitialForm::Rhs);
    }

    #[test]
    fn substitution_drops_block_and_zero_binomials() {
        let space = VariableSpace::new(vec![VariableBlock::flat("x", 2), VariableBlock::flat("y", 2)]);
        let set = BinomialSet::new(
            space,
            vec![
                Binomial::from_vecs(vec![2, 0, 1, 0], vec![0, 1, 0, 2]),
                Binomial::from_vecs(vec![1, 0, 1, 0], vec![1, 0, 0, 1]),
            ],
        );
        let sub = set.substitute_ones("y").unwrap();
        assert_eq!(sub.len(), 1);
        assert_eq!(sub.to_lines(), vec!["x[1]^2 - x[2]"]);
        assert!(set.substitute_ones("w").is_err());
    }

    #[test]
    fn names_round_trip() {
        let space = VariableSpace::new(vec![VariableBlock::grid("x", 3, 2), VariableBlock::flat("y", 2)]);
        for i in 0..space.dim() {
            assert_eq!(space.index_of(&space.var_name(i)), Some(i));
        }
        assert_eq!(space.var_name(3), "x[2,2]");
        assert_eq!(space.var_name(7), "y[2]");
        let b = parse_binomial("x[1,1]*x[3,2]^2 - y[1]", &space).unwrap();
        assert_eq!(b.display(&space).to_string(), "x[1,1]*x[3,2]^2 - y[1]");
    }

    #[test]
    fn set_dedups_orientations() {
        let a = Binomial::from_vecs(vec![1, 0], vec![0, 1]);
        let set = BinomialSet::new(VariableSpace::flat(2), vec![a.clone(), a.swapped(), a.clone()]);
        assert_eq!(set.len(), 1);
        assert!(set.contains(&a.swapped()));
    }

    proptest! {
        #[test]
        fn split_reassembles(u in prop::collection::vec(-50i64..50, 0..12)) {
            let (pos, neg) = split_pos_neg(&u).unwrap();
            prop_assert!(pos.disjoint(&neg));
            let back: Vec<i64> = pos.iter().zip(neg.iter()).map(|(&a, &b)| a as i64 - b as i64).collect();
            prop_assert_eq!(back, u);
        }
    }
}
