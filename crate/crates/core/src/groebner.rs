//! Buchberger's algorithm for ideals generated by differences of monomials.
//!
//! Every polynomial handled here has the shape `x^a - x^b`: S-pairs and
//! reduction steps of such binomials are again of that shape (or zero), so the
//! engine never touches coefficients.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use crate::binomial::{Binomial, BinomialSet, ExponentVector, VariableBlock, VariableSpace};
use crate::error::Result;
use crate::order::MonomialOrder;
use crate::toric::positive_grading;

/// A reduced Gröbner basis; each element stores its leading side in `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    space: VariableSpace,
    order: MonomialOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn space(&self) -> &VariableSpace {
        &self.space
    }

    /// Elements with their leading side first, sorted.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether `b` occurs with `b.lhs` as its leading side.
    pub fn contains_oriented(&self, b: &Binomial) -> bool {
        self.elements.iter().any(|e| e == b)
    }

    /// Orientation-insensitive set view.
    pub fn to_set(&self) -> BinomialSet {
        BinomialSet::new(self.space.clone(), self.elements.iter().cloned())
    }

    /// Normal form of `b`; `None` when it reduces to zero.
    pub fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        reduce(b, &self.elements, &self.order)
    }
}

/// Divisibility lookup over a list of leading monomials.
struct Reducer<'a> {
    order: &'a MonomialOrder,
    basis: &'a [Binomial],
    masks: &'a [u64],
}

fn support_mask(u: &[u32]) -> u64 {
    u.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | 1 << (i % 64))
}

impl<'a> Reducer<'a> {
    fn divisor(&self, u: &ExponentVector, skip: Option<usize>) -> Option<&'a Binomial> {
        let mu = support_mask(u);
        self.basis
            .iter()
            .zip(self.masks)
            .enumerate()
            .find(|&(i, (g, &m))| Some(i) != skip && m & !mu == 0 && g.lhs.divides(u))
            .map(|(_, (g, _))| g)
    }

    /// Fully reduces `b`: the leading side first, then the trailing side.
    fn normal_form(&self, b: Binomial, skip: Option<usize>) -> Option<Binomial> {
        let (mut lead, mut trail) = match self.order.compare(&b.lhs, &b.rhs) {
            Ordering::Equal => return None,
            Ordering::Greater => (b.lhs, b.rhs),
            Ordering::Less => (b.rhs, b.lhs),
        };
        while let Some(g) = self.divisor(&lead, skip) {
            lead = lead.shift(&g.lhs, &g.rhs);
            match self.order.compare(&lead, &trail) {
                Ordering::Equal => return None,
                Ordering::Less => std::mem::swap(&mut lead, &mut trail),
                Ordering::Greater => {}
            }
        }
        while let Some(g) = self.divisor(&trail, skip) {
            trail = trail.shift(&g.lhs, &g.rhs);
        }
        debug_assert_eq!(self.order.compare(&lead, &trail), Ordering::Greater);
        Some(Binomial::new(lead, trail))
    }
}

/// Normal form of `b` modulo `basis`, whose elements carry their leading side
/// in `lhs` with respect to `order`.
pub fn reduce(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let masks: Vec<u64> = basis.iter().map(|g| support_mask(&g.lhs)).collect();
    Reducer { order, basis, masks: &masks }.normal_form(b.clone(), None)
}

/// A critical pair, ordered so that the max-heap pops the smallest lcm first
/// (normal strategy), ties going to the earliest pair.
struct Pair<'a> {
    i: usize,
    j: usize,
    lcm: ExponentVector,
    order: &'a MonomialOrder,
}

impl Ord for Pair<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        other.order.compare(&other.lcm, &self.lcm).then_with(|| (other.j, other.i).cmp(&(self.j, self.i)))
    }
}

impl PartialOrd for Pair<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Pair<'_> {
    fn eq(&self, other: &Self) -> bool {
        (self.i, self.j) == (other.i, other.j)
    }
}

impl Eq for Pair<'_> {}

#[derive(Default)]
struct PartialBasis {
    elements: Vec<Binomial>,
    masks: Vec<u64>,
}

impl PartialBasis {
    fn reducer<'a>(&'a self, order: &'a MonomialOrder) -> Reducer<'a> {
        Reducer { order, basis: &self.elements, masks: &self.masks }
    }

    fn insert<'a>(
        &mut self,
        g: Binomial,
        order: &'a MonomialOrder,
        pairs: &mut BinaryHeap<Pair<'a>>,
        pending: &mut HashSet<(usize, usize)>,
    ) {
        let j = self.elements.len();
        for (i, h) in self.elements.iter().enumerate() {
            pairs.push(Pair { i, j, lcm: h.lhs.lcm(&g.lhs), order });
            pending.insert((i, j));
        }
        self.masks.push(support_mask(&g.lhs));
        self.elements.push(g);
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens` with respect to `order`.
pub fn buchberger(gens: &BinomialSet, order: &MonomialOrder) -> GroebnerBasis {
    let mut basis = PartialBasis::default();
    let mut pairs: BinaryHeap<Pair> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    for g in gens {
        if let Some(nf) = basis.reducer(order).normal_form(g.clone(), None) {
            basis.insert(nf, order, &mut pairs, &mut pending);
        }
    }

    while let Some(Pair { i, j, lcm, .. }) = pairs.pop() {
        pending.remove(&(i, j));

        let (gi, gj) = (&basis.elements[i], &basis.elements[j]);
        if gi.lhs.disjoint(&gj.lhs) {
            continue;
        }
        let lcm_mask = support_mask(&lcm);
        let chain = (0..basis.elements.len()).any(|k| {
            k != i
                && k != j
                && basis.masks[k] & !lcm_mask == 0
                && basis.elements[k].lhs.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = Binomial::new(lcm.shift(&gi.lhs, &gi.rhs), lcm.shift(&gj.lhs, &gj.rhs));
        if let Some(nf) = basis.reducer(order).normal_form(s, None) {
            basis.insert(nf, order, &mut pairs, &mut pending);
        }
    }

    GroebnerBasis { space: gens.space().clone(), order: order.clone(), elements: interreduce(basis.elements, order) }
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce(mut basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    // minimal: drop elements whose leading monomial is divisible by another one
    basis.sort_by(|a, b| order.compare(&a.lhs, &b.lhs));
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lhs.divides(&g.lhs)) {
            minimal.push(g);
        }
    }
    let masks: Vec<u64> = minimal.iter().map(|g| support_mask(&g.lhs)).collect();
    let reduced: Vec<Binomial> = (0..minimal.len())
        .map(|i| {
            let r = Reducer { order, basis: &minimal, masks: &masks };
            let nf = r.normal_form(minimal[i].clone(), Some(i)).expect("minimal basis element cannot vanish");
            debug_assert_eq!(nf.lhs, minimal[i].lhs);
            nf
        })
        .collect();
    let mut out = reduced;
    out.sort();
    out
}

/// Generators of `(⟨S⟩ : x_v^∞)`.
pub fn saturate_variable(gens: &BinomialSet, v: usize) -> Result<BinomialSet> {
    let diffs: Vec<Vec<i64>> = gens.iter().map(Binomial::difference).collect();
    match positive_grading(&diffs, gens.space().dim())? {
        Some(w) => Ok(saturate_graded(gens, v, &w)),
        None => Ok(saturate_by_elimination(gens, v)),
    }
}

/// Saturation at the product of all variables, one variable at a time.
pub fn saturate_all(gens: &BinomialSet) -> Result<BinomialSet> {
    let dim = gens.space().dim();
    let diffs: Vec<Vec<i64>> = gens.iter().map(Binomial::difference).collect();
    let grading = positive_grading(&diffs, dim)?;
    let mut cur = gens.clone();
    for v in 0..dim {
        cur = match &grading {
            Some(w) => saturate_graded(&cur, v, w),
            None => saturate_by_elimination(&cur, v),
        };
    }
    Ok(cur)
}

/// For generators homogeneous under the positive grading `w`: a Gröbner basis
/// for the `w`-graded reverse lexicographic order with `x_v` cheapest, each
/// element divided by the largest power of `x_v` dividing it.
fn saturate_graded(gens: &BinomialSet, v: usize, w: &[i64]) -> BinomialSet {
    let dim = gens.space().dim();
    let precedence: Vec<usize> = (0..dim).filter(|&i| i != v).chain(std::iter::once(v)).collect();
    let order = MonomialOrder::graded_revlex(w.to_vec()).expect("grading is positive").with_precedence(precedence);
    let gb = buchberger(gens, &order);
    let divided = gb.elements.into_iter().map(|b| {
        let k = b.lhs[v].min(b.rhs[v]);
        let mut lhs = b.lhs.into_inner();
        let mut rhs = b.rhs.into_inner();
        lhs[v] -= k;
        rhs[v] -= k;
        Binomial::from_vecs(lhs, rhs)
    });
    BinomialSet::new(gens.space().clone(), divided)
}

/// `(J + ⟨t·x_v - 1⟩) ∩ K[x]` through an elimination order for the extra variable `t`.
fn saturate_by_elimination(gens: &BinomialSet, v: usize) -> BinomialSet {
    let dim = gens.space().dim();
    let mut blocks = gens.space().blocks().to_vec();
    blocks.push(VariableBlock::flat("_t", 1));
    let ext_space = VariableSpace::new(blocks);
    let extend = |u: &ExponentVector, t: u32| {
        let mut x = u.to_vec();
        x.push(t);
        ExponentVector::new(x)
    };
    let mut ext: Vec<Binomial> = gens.iter().map(|b| Binomial::new(extend(&b.lhs, 0), extend(&b.rhs, 0))).collect();
    let mut tx = vec![0u32; dim + 1];
    tx[v] = 1;
    tx[dim] = 1;
    ext.push(Binomial::from_vecs(tx, vec![0; dim + 1]));
    let mut weights = vec![0i64; dim + 1];
    weights[dim] = 1;
    let order = MonomialOrder::weighted(weights, MonomialOrder::degrevlex()).expect("nonnegative weights");
    let gb = buchberger(&BinomialSet::new(ext_space, ext), &order);
    BinomialSet::new(
        gens.space().clone(),
        gb.elements.into_iter().filter(|b| b.lhs[dim] == 0 && b.rhs[dim] == 0).map(|b| b.substitute_ones(dim..dim + 1)),
    )
}
