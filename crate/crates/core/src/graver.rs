//! Graver bases of code ideals via p-Lawrence liftings, the toric route to
//! reduced Gröbner bases of code ideals, and an exhaustive oracle.

use crate::binomial::{Binomial, BinomialSet, VariableBlock, VariableSpace};
use crate::error::{Error, Result};
use crate::generators::{block_width, code_space, word_of_binomial, word_of_difference, IdealKind};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::matrices::{build_he, build_hplus_e, extend_with_pi, lawrence_lift, IntMatrix, LinearCode};
use crate::order::MonomialOrder;
use crate::toric::toric_ideal;

/// Largest number of candidate pairs the exhaustive oracle will enumerate.
pub const BRUTEFORCE_LIMIT: u128 = 100_000_000;

/// The set of primitive binomials of a code ideal.
#[derive(Clone, Debug)]
pub struct GraverBasis {
    elements: BinomialSet,
    kind: IdealKind,
    code: LinearCode,
}

impl GraverBasis {
    pub fn elements(&self) -> &BinomialSet {
        &self.elements
    }
    pub fn kind(&self) -> IdealKind {
        self.kind
    }
    pub fn code(&self) -> &LinearCode {
        &self.code
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Checks that every element is pure, encodes a codeword, and that no
    /// element is divided side-by-side by another one.
    pub fn check_invariants(&self) -> Result<()> {
        for b in &self.elements {
            if !b.is_pure() {
                return Err(Error::InvalidCode(format!("{} is not pure", b.display(self.elements.space()))));
            }
            if word_of_binomial(&self.code, b, self.kind)?.is_none() {
                return Err(Error::InvalidCode(format!("{} is not in the ideal", b.display(self.elements.space()))));
            }
        }
        if let Some((a, b)) = non_primitive_pair(self.elements.as_slice()) {
            let s = self.elements.space();
            return Err(Error::InvalidCode(format!("{} divides {}", b.display(s), a.display(s))));
        }
        Ok(())
    }
}

/// `x^{u'} | x^u` and `x^{v'} | x^v` in either orientation of `small`.
pub fn divides_sidewise(small: &Binomial, big: &Binomial) -> bool {
    (small.lhs.divides(&big.lhs) && small.rhs.divides(&big.rhs))
        || (small.rhs.divides(&big.lhs) && small.lhs.divides(&big.rhs))
}

fn non_primitive_pair(elements: &[Binomial]) -> Option<(&Binomial, &Binomial)> {
    elements.iter().enumerate().find_map(|(i, a)| {
        elements.iter().enumerate().find(|&(j, b)| i != j && divides_sidewise(b, a)).map(|(_, b)| (a, b))
    })
}

/// The integer matrix whose kernel mod p encodes the code: `△H_e` or `△H_{+,e}`.
pub fn code_matrix(code: &LinearCode, kind: IdealKind) -> IntMatrix {
    match kind {
        IdealKind::Ordinary => build_he(code),
        IdealKind::Generalized => build_hplus_e(code),
    }
}

/// Variable space `x` (grid), `y` (mirrored grid), `z` (one per matrix row) of the Lawrence lifting.
pub fn lawrence_space(code: &LinearCode, kind: IdealKind) -> VariableSpace {
    let (n, w) = (code.n(), block_width(code.field(), kind));
    let m = code_matrix(code, kind).rows();
    VariableSpace::new(vec![
        VariableBlock::grid("x", n, w),
        VariableBlock::grid("y", n, w),
        VariableBlock::flat("z", m),
    ])
}

/// Degree reverse lexicographic order over the `x, y` space, x-block first.
pub fn default_order() -> MonomialOrder {
    MonomialOrder::degrevlex()
}

/// Reduced Gröbner basis of `I_{Λ(M)}` in the `x, y` variables, i.e. the
/// toric ideal of the p-Lawrence lifting after `z ↦ 1`.
pub fn lawrence_groebner(code: &LinearCode, kind: IdealKind, order: &MonomialOrder) -> Result<GroebnerBasis> {
    let p = code.field().p() as i64;
    let lifted = lawrence_lift(&code_matrix(code, kind), p);
    let toric = toric_ideal(&lifted, &lawrence_space(code, kind))?;
    let gens = toric.substitute_ones("z")?;
    let g = buchberger(&gens, order);
    let half = code.n() * block_width(code.field(), kind);
    for b in g.elements() {
        let (u, v) = (&b.lhs[..half], &b.rhs[..half]);
        if u != &b.rhs[half..] || v != &b.lhs[half..] {
            return Err(Error::InvalidCode(format!(
                "Lawrence basis element {} is not of the form x^u y^v - x^v y^u",
                b.display(g.space())
            )));
        }
    }
    Ok(g)
}

fn graver_via_lawrence(code: &LinearCode, kind: IdealKind, order: &MonomialOrder) -> Result<GraverBasis> {
    let g = lawrence_groebner(code, kind, order)?;
    let elements = g.to_set().substitute_ones("y")?;
    Ok(GraverBasis { elements, kind, code: code.clone() })
}

/// Graver basis of the ordinary code ideal `I(C)`. The result does not depend on `order`.
pub fn graver_ordinary(code: &LinearCode, order: &MonomialOrder) -> Result<GraverBasis> {
    graver_via_lawrence(code, IdealKind::Ordinary, order)
}

/// Graver basis of the generalized code ideal `I_+(C)`. The result does not depend on `order`.
pub fn graver_generalized(code: &LinearCode, order: &MonomialOrder) -> Result<GraverBasis> {
    graver_via_lawrence(code, IdealKind::Generalized, order)
}

pub fn graver(code: &LinearCode, kind: IdealKind, order: &MonomialOrder) -> Result<GraverBasis> {
    graver_via_lawrence(code, kind, order)
}

/// `H(q) = (△H_e | pI)` or `H_+(q) = (△H_{+,e} | pI)`.
pub fn extended_code_matrix(code: &LinearCode, kind: IdealKind) -> IntMatrix {
    extend_with_pi(&code_matrix(code, kind), code.field().p() as i64)
}

/// Variable space `x` (grid) and `y` (one per matrix row) of `H(q)` / `H_+(q)`.
pub fn extended_space(code: &LinearCode, kind: IdealKind) -> VariableSpace {
    let m = code_matrix(code, kind).rows();
    let mut blocks = code_space(code, kind).blocks().to_vec();
    blocks.push(VariableBlock::flat("y", m));
    VariableSpace::new(blocks)
}

/// Generators of the toric ideal of `H(q)` / `H_+(q)` in the `x, y` variables.
pub fn code_toric_ideal(code: &LinearCode, kind: IdealKind) -> Result<BinomialSet> {
    toric_ideal(&extended_code_matrix(code, kind), &extended_space(code, kind))
}

/// Reduced Gröbner basis of the code ideal obtained from the toric ideal of
/// `H(q)` / `H_+(q)` by `y ↦ 1` and re-reduction.
pub fn code_ideal_groebner(code: &LinearCode, kind: IdealKind, order: &MonomialOrder) -> Result<GroebnerBasis> {
    let gens = code_toric_ideal(code, kind)?.substitute_ones("y")?;
    Ok(buchberger(&gens, order))
}

/// Number of pure pairs `(u, v)` with entries in `[0, p]` over `dim` variables.
pub fn bruteforce_search_size(p: u32, dim: usize) -> u128 {
    (2 * p as u128 + 1).checked_pow(dim as u32).unwrap_or(u128::MAX)
}

/// All primitive binomials of the code ideal, found by enumerating every pure
/// pair with exponents at most `p` (larger exponents are never primitive
/// because `x_ij^p - 1` lies in the ideal).
pub fn graver_bruteforce(code: &LinearCode, kind: IdealKind) -> Result<GraverBasis> {
    let ff = code.field();
    let p = ff.p() as i64;
    let dim = code.n() * block_width(ff, kind);
    let size = bruteforce_search_size(ff.p(), dim);
    if size > BRUTEFORCE_LIMIT {
        return Err(Error::SearchSpaceTooLarge(size));
    }

    // every difference d in [-p, p]^dim with a positive leading nonzero entry
    let mut members: Vec<Binomial> = Vec::new();
    let mut d = vec![-p; dim];
    loop {
        if d.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) && code.contains(&word_of_difference(ff, &d, kind)) {
            members.push(Binomial::from_difference(&d)?);
        }
        let Some(pos) = d.iter().rposition(|&x| x < p) else { break };
        d[pos] += 1;
        for x in &mut d[pos + 1..] {
            *x = -p;
        }
    }

    // a non-primitive member is divided by a member of smaller degree, and by
    // descent by a primitive one
    let total = |b: &Binomial| b.lhs.degree() + b.rhs.degree();
    members.sort_by_key(total);
    let mut primitive: Vec<Binomial> = Vec::new();
    for b in members {
        if !primitive.iter().any(|g| divides_sidewise(g, &b)) {
            primitive.push(b);
        }
    }
    Ok(GraverBasis { elements: BinomialSet::new(code_space(code, kind), primitive), kind, code: code.clone() })
}
