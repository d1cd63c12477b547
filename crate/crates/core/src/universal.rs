//! Universal Gröbner bases of code ideals, extracted from the Graver basis by
//! divisibility pruning and an open-cone feasibility test per element.

use num_rational::BigRational;

use crate::binomial::{Binomial, BinomialSet};
use crate::cone::{ConeStatus, ConeSystem};
use crate::error::{Error, Result};
use crate::generators::IdealKind;
use crate::graver::GraverBasis;
use crate::matrices::LinearCode;

/// The union of all reduced Gröbner bases of a code ideal.
#[derive(Clone, Debug)]
pub struct UniversalBasis {
    elements: BinomialSet,
    kind: IdealKind,
    code: LinearCode,
    witnesses: Vec<(Binomial, Vec<BigRational>)>,
}

impl UniversalBasis {
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

    /// For each kept element, oriented with the leading side in `lhs`, a weight
    /// vector `ω` for which it lies in the reduced Gröbner basis of `≻_ω`.
    /// Empty when the basis was obtained without cone computations.
    pub fn witnesses(&self) -> &[(Binomial, Vec<BigRational>)] {
        &self.witnesses
    }
}

/// True when another Graver element has both of its monomials dividing the
/// same side of `g`, which rules `g` out of every reduced Gröbner basis.
pub fn prune_by_divisibility(g: &Binomial, graver: &GraverBasis) -> bool {
    let key = g.clone().canonical();
    graver.elements().iter().any(|h| {
        h.clone().canonical() != key
            && ((h.lhs.divides(&g.lhs) && h.rhs.divides(&g.lhs)) || (h.lhs.divides(&g.rhs) && h.rhs.divides(&g.rhs)))
    })
}

fn row(from: &[u32], to: &[u32]) -> Vec<i64> {
    from.iter().zip(to).map(|(&a, &b)| b as i64 - a as i64).collect()
}

/// Inequalities of the cone of weights `ω` for which `g = x^u - x^{u'}`
/// (leading side `g.lhs`) belongs to the reduced Gröbner basis of `≻_ω`.
///
/// Every element `x^v - x^{v'}` contributes, for each `x^m` among `x^{u-e_ij}`
/// and `x^{u'}` that it meets, the constraint that the dividing side is the
/// smaller one. The element `g` itself yields `ω·u > ω·u'`.
pub fn cone_rows(g: &Binomial, graver: &GraverBasis) -> ConeSystem {
    let mut cone = ConeSystem::new(g.dim());
    let mut targets: Vec<_> = g.lhs.support().filter_map(|i| g.lhs.minus_unit(i)).collect();
    targets.push(g.rhs.clone());
    for h in graver.elements() {
        for m in &targets {
            let (v_div, w_div) = (h.lhs.divides(m), h.rhs.divides(m));
            debug_assert!(!(v_div && w_div), "pruning must run before cone construction");
            if v_div {
                cone.add_row(row(&h.lhs, &h.rhs));
            } else if w_div {
                cone.add_row(row(&h.rhs, &h.lhs));
            }
        }
    }
    cone
}

/// Orientation tried first in the cone test: the side with the smaller
/// support leads, except that `x^c - 1` always leads with `x^c`. Ties are
/// broken by the canonical form, so the result does not depend on how `g`
/// was written.
fn cone_orientation(g: &Binomial) -> Binomial {
    let g = g.clone().canonical();
    if g.lhs.is_one() || (!g.rhs.is_one() && g.rhs.support_size() < g.lhs.support_size()) {
        g.swapped()
    } else {
        g
    }
}

/// Decides membership of one Graver element in the universal Gröbner basis.
/// Returns the oriented element and a weight witness when it is kept.
pub fn universal_decision(g: &Binomial, graver: &GraverBasis) -> Option<(Binomial, Vec<BigRational>)> {
    let g = cone_orientation(g);
    if prune_by_divisibility(&g, graver) {
        return None;
    }
    // a constant side can never lead, so `x^c - 1` has a single candidate orientation
    let candidates = if g.rhs.is_one() { vec![g] } else { vec![g.clone(), g.swapped()] };
    candidates.into_iter().find_map(|g| match cone_rows(&g, graver).solve() {
        ConeStatus::Empty => None,
        ConeStatus::NonEmpty(omega) => Some((g, omega)),
    })
}

/// Universal Gröbner basis of the code ideal whose Graver basis is `graver`.
pub fn universal_basis(graver: &GraverBasis) -> UniversalBasis {
    let witnesses: Vec<_> = graver.elements().iter().filter_map(|g| universal_decision(g, graver)).collect();
    let elements = BinomialSet::new(graver.elements().space().clone(), witnesses.iter().map(|(g, _)| g.clone()));
    UniversalBasis { elements, kind: graver.kind(), code: graver.code().clone(), witnesses }
}

/// In characteristic two the universal Gröbner basis of the generalized code
/// ideal consists of the Graver elements with no constant side, together with
/// the squares `x_ij^2 - 1`. When the code has a word of weight one the
/// binomial `x_ij - 1` is primitive instead of the square, and it lies in
/// every reduced Gröbner basis.
pub fn universal_basis_char2(graver: &GraverBasis) -> Result<UniversalBasis> {
    if graver.kind() != IdealKind::Generalized || graver.code().field().p() != 2 {
        return Err(Error::WrongKindOrCharacteristic);
    }
    let single_power = |u: &crate::binomial::ExponentVector| u.support_size() == 1 && u.degree() <= 2;
    let kept = graver
        .elements()
        .iter()
        .filter(|g| {
            (!g.lhs.is_one() && !g.rhs.is_one())
                || (g.rhs.is_one() && single_power(&g.lhs))
                || (g.lhs.is_one() && single_power(&g.rhs))
        })
        .cloned();
    Ok(UniversalBasis {
        elements: BinomialSet::new(graver.elements().space().clone(), kept),
        kind: graver.kind(),
        code: graver.code().clone(),
        witnesses: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_binomial;
    use crate::field::{FieldElement, FiniteField};
    use crate::graver::{default_order, graver_generalized, graver_ordinary};

    fn f3_graver() -> GraverBasis {
        let ff = FiniteField::new(3, 1, &[0, 1], None).unwrap();
        let h = vec![vec![ff.from_int(1), ff.from_int(2), ff.from_int(1)]];
        graver_ordinary(&LinearCode::from_parity(ff, 3, h).unwrap(), &default_order()).unwrap()
    }

    fn f2_repetition() -> LinearCode {
        let ff = FiniteField::new(2, 1, &[1, 1], None).unwrap();
        let one = ff.one();
        LinearCode::from_generator(ff, 2, vec![vec![one, one]]).unwrap()
    }

    #[test]
    fn divisibility_pruning() {
        let gr = f3_graver();
        let s = gr.elements().space().clone();
        assert!(prune_by_divisibility(&parse_binomial("x[1,1]*x[3,1] - x[2,1]", &s).unwrap(), &gr));
        assert!(!prune_by_divisibility(&parse_binomial("x[1,1] - x[3,1]", &s).unwrap(), &gr));
        let rep = graver_ordinary(&f2_repetition(), &default_order()).unwrap();
        let s = rep.elements().space().clone();
        assert!(prune_by_divisibility(&parse_binomial("x[1,1]*x[2,1] - 1", &s).unwrap(), &rep));
    }

    #[test]
    fn cone_contains_self_row() {
        let gr = f3_graver();
        for g in gr.elements() {
            let g = cone_orientation(g);
            if prune_by_divisibility(&g, &gr) {
                continue;
            }
            let cone = cone_rows(&g, &gr);
            assert!(cone.rows().contains(&row(&g.rhs, &g.lhs)));
        }
    }

    #[test]
    fn singleton_is_kept() {
        let ff = FiniteField::new(3, 1, &[0, 1], None).unwrap();
        let zero = LinearCode::from_parity(ff.clone(), 1, vec![vec![ff.one()]]).unwrap();
        let gr = graver_ordinary(&zero, &default_order()).unwrap();
        assert_eq!(universal_basis(&gr).elements().to_lines(), vec!["x[1,1]^3 - 1"]);
    }

    #[test]
    fn repetition_code_shortcut() {
        let gr = graver_generalized(&f2_repetition(), &default_order()).unwrap();
        let u = universal_basis(&gr);
        let c = universal_basis_char2(&gr).unwrap();
        assert_eq!(c.elements().to_lines(), vec!["x[1,1] - x[2,1]", "x[2,1]^2 - 1", "x[1,1]^2 - 1"]);
        assert_eq!(u.elements(), c.elements());
        assert!(universal_basis_char2(&f3_graver()).is_err());
    }

    #[test]
    fn shortcut_keeps_linear_binomials() {
        let ff = FiniteField::new(2, 1, &[1, 1], None).unwrap();
        let one = ff.one();
        let code = LinearCode::from_generator(ff, 2, vec![vec![one, FieldElement::Zero]]).unwrap();
        let gr = graver_generalized(&code, &default_order()).unwrap();
        let c = universal_basis_char2(&gr).unwrap();
        assert_eq!(c.elements().to_lines(), vec!["x[1,1] - 1", "x[2,1]^2 - 1"]);
        assert_eq!(universal_basis(&gr).elements(), c.elements());
    }

    #[test]
    fn universal_is_subset_of_graver() {
        let gr = f3_graver();
        let u = universal_basis(&gr);
        assert!(u.elements().is_subset(gr.elements()));
        for (g, w) in u.witnesses() {
            assert!(cone_rows(g, &gr).satisfied_by(w));
        }
    }
}
