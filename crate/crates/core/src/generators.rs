//! Direct generating sets of the ordinary code ideal `I(C) = I'(C) + I_p`, the
//! generalized code ideal `I_+(C)` and the field-relation ideal `I_q`, plus
//! the binomial-to-codeword correspondence.

use serde::{Deserialize, Serialize};

use crate::binomial::{Binomial, BinomialSet, ExponentVector, VariableBlock, VariableSpace};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Word};
use crate::matrices::LinearCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealKind {
    /// `I(C)` in `n·r` variables `x[i,j]`, one per basis coordinate.
    Ordinary,
    /// `I_+(C)` in `n·(q-1)` variables `x[i,s]`, one per power `α^s`.
    Generalized,
}

impl IdealKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::Ordinary => "ordinary",
            IdealKind::Generalized => "generalized",
        }
    }
}

/// Number of x-variables per code position.
pub fn block_width(ff: &FiniteField, kind: IdealKind) -> usize {
    match kind {
        IdealKind::Ordinary => ff.r() as usize,
        IdealKind::Generalized => ff.q() as usize - 1,
    }
}

/// The x-variable space of the code ideal.
pub fn code_space(code: &LinearCode, kind: IdealKind) -> VariableSpace {
    VariableSpace::new(vec![VariableBlock::grid("x", code.n(), block_width(code.field(), kind))])
}

/// The word an exponent difference stands for.
pub fn word_of_difference(ff: &FiniteField, d: &[i64], kind: IdealKind) -> Word {
    match kind {
        IdealKind::Ordinary => d.chunks(ff.r() as usize).map(|c| ff.from_coords(c)).collect(),
        IdealKind::Generalized => ff.cross_down(d),
    }
}

/// The codeword corresponding to `x^lhs - x^rhs`, or `None` when
/// `lhs - rhs` does not encode a codeword.
pub fn word_of_binomial(code: &LinearCode, b: &Binomial, kind: IdealKind) -> Result<Option<Word>> {
    let expected = code.n() * block_width(code.field(), kind);
    if b.dim() != expected {
        return Err(Error::DimensionMismatch { expected, got: b.dim() });
    }
    let w = word_of_difference(code.field(), &b.difference(), kind);
    Ok(code.contains(&w).then_some(w))
}

fn monomial_minus_one(u: Vec<u32>) -> Binomial {
    let dim = u.len();
    Binomial::new(ExponentVector::new(u), ExponentVector::zero(dim))
}

/// `{x^{coords(b_s g_i)} - 1} ∪ {x_ij^p - 1}`.
pub fn build_ordinary_generators(code: &LinearCode) -> Result<BinomialSet> {
    let ff = code.field();
    let g = code.generator().ok_or(Error::MissingGenerator)?;
    let mut gens = Vec::new();
    for row in g {
        for &b in ff.basis() {
            let u: Vec<u32> = row.iter().flat_map(|&a| ff.canonical_coords(ff.mul(b, a)).to_vec()).collect();
            gens.push(monomial_minus_one(u));
        }
    }
    let dim = code.n() * ff.r() as usize;
    for v in 0..dim {
        let mut u = vec![0; dim];
        u[v] = ff.p();
        gens.push(monomial_minus_one(u));
    }
    Ok(BinomialSet::new(code_space(code, IdealKind::Ordinary), gens))
}

/// `{x^{▲(α^s g_i)} - 1 : 1 <= s <= q-1} ∪ I_q`.
pub fn build_generalized_generators(code: &LinearCode) -> Result<BinomialSet> {
    let ff = code.field();
    let g = code.generator().ok_or(Error::MissingGenerator)?;
    let mut gens: Vec<Binomial> = field_relations_iq(ff, code.n()).iter().cloned().collect();
    for row in g {
        for s in 1..ff.q() {
            let scaled: Word = row.iter().map(|&a| ff.mul(ff.alpha_pow(s as i64), a)).collect();
            gens.push(monomial_minus_one(ff.cross_up(&scaled).iter().map(|&e| e as u32).collect()));
        }
    }
    Ok(BinomialSet::new(code_space(code, IdealKind::Generalized), gens))
}

/// The additive relations of F_q at each of the `n` positions:
/// `x_iu x_iv - x_iw` when `α^u + α^v = α^w`, `x_iu x_iv - 1` when the sum vanishes.
pub fn field_relations_iq(ff: &FiniteField, n: usize) -> BinomialSet {
    let width = ff.q() as usize - 1;
    let dim = n * width;
    let mut gens = Vec::new();
    for i in 0..n {
        for u in 1..=width {
            for v in u..=width {
                let mut lhs = vec![0u32; dim];
                lhs[i * width + u - 1] += 1;
                lhs[i * width + v - 1] += 1;
                let mut rhs = vec![0u32; dim];
                if let FieldElement::Power(w) = ff.add(ff.alpha_pow(u as i64), ff.alpha_pow(v as i64)) {
                    rhs[i * width + w as usize - 1] = 1;
                }
                gens.push(Binomial::from_vecs(lhs, rhs));
            }
        }
    }
    BinomialSet::new(VariableSpace::new(vec![VariableBlock::grid("x", n, width)]), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_binomial;

    fn f3_code() -> LinearCode {
        let ff = FiniteField::new(3, 1, &[0, 1], None).unwrap();
        let h = vec![vec![ff.from_int(1), ff.from_int(2), ff.from_int(1)]];
        LinearCode::from_parity(ff, 3, h).unwrap()
    }

    fn f4_code() -> LinearCode {
        use FieldElement::Power;
        let ff = FiniteField::new(2, 2, &[1, 1, 1], Some(&[Power(1), Power(3)])).unwrap();
        LinearCode::from_parity(ff, 3, vec![vec![Power(1), Power(3), Power(2)]]).unwrap()
    }

    #[test]
    fn f3_membership() {
        let code = f3_code();
        let space = code_space(&code, IdealKind::Ordinary);
        let b = parse_binomial("x[2,1]*x[3,1] - 1", &space).unwrap();
        let w = word_of_binomial(&code, &b, IdealKind::Ordinary).unwrap().unwrap();
        let ff = code.field();
        assert_eq!(w, vec![FieldElement::Zero, ff.from_int(1), ff.from_int(1)]);
        let cube = parse_binomial("x[1,1]^3 - 1", &space).unwrap();
        assert_eq!(word_of_binomial(&code, &cube, IdealKind::Ordinary).unwrap(), Some(vec![FieldElement::Zero; 3]));
        let not = parse_binomial("x[1,1] - 1", &space).unwrap();
        assert_eq!(word_of_binomial(&code, &not, IdealKind::Ordinary).unwrap(), None);
        let wrong_dim = Binomial::from_vecs(vec![1, 0], vec![0, 1]);
        assert!(word_of_binomial(&code, &wrong_dim, IdealKind::Ordinary).is_err());
    }

    #[test]
    fn f4_generalized_membership() {
        let code = f4_code();
        let space = code_space(&code, IdealKind::Generalized);
        let b = parse_binomial("x[1,1] - x[3,3]", &space).unwrap();
        let w = word_of_binomial(&code, &b, IdealKind::Generalized).unwrap().unwrap();
        let ff = code.field();
        assert_eq!(w, vec![ff.alpha_pow(1), FieldElement::Zero, ff.one()]);
    }

    #[test]
    fn f3_ordinary_generators() {
        let code = f3_code();
        let gens = build_ordinary_generators(&code).unwrap();
        let space = gens.space().clone();
        // the derived generator rows span (1,0,2) and (0,1,1)
        for line in ["x[1,1]^3 - 1", "x[2,1]^3 - 1", "x[3,1]^3 - 1"] {
            assert!(gens.contains(&parse_binomial(line, &space).unwrap()), "{line}");
        }
        for b in &gens {
            assert!(word_of_binomial(&code, b, IdealKind::Ordinary).unwrap().is_some());
        }
    }

    #[test]
    fn repetition_code_generators() {
        let ff = FiniteField::new(2, 1, &[1, 1], None).unwrap();
        let one = ff.one();
        let code = LinearCode::from_generator(ff, 2, vec![vec![one, one]]).unwrap();
        let gens = build_ordinary_generators(&code).unwrap();
        assert_eq!(gens.to_lines(), vec!["x[2,1]^2 - 1", "x[1,1]*x[2,1] - 1", "x[1,1]^2 - 1"]);
    }

    #[test]
    fn zero_code_has_only_field_relations() {
        let ff = FiniteField::new(2, 2, &[1, 1, 1], None).unwrap();
        let one = ff.one();
        let code = LinearCode::from_parity(ff.clone(), 1, vec![vec![one]]).unwrap();
        assert_eq!(code.k(), 0);
        assert_eq!(build_generalized_generators(&code).unwrap(), field_relations_iq(&ff, 1));
        let ord = build_ordinary_generators(&code).unwrap();
        assert_eq!(ord.to_lines(), vec!["x[1,2]^2 - 1", "x[1,1]^2 - 1"]);
    }

    #[test]
    fn field_relations() {
        let gf3 = FiniteField::new(3, 1, &[0, 1], None).unwrap();
        let rel = field_relations_iq(&gf3, 1);
        assert!(rel.contains(&parse_binomial("x[1,1]*x[1,2] - 1", rel.space()).unwrap()));
        let gf2 = FiniteField::new(2, 1, &[1, 1], None).unwrap();
        assert_eq!(field_relations_iq(&gf2, 1).to_lines(), vec!["x[1,1]^2 - 1"]);
        let gf4 = FiniteField::new(2, 2, &[1, 1, 1], None).unwrap();
        let rel = field_relations_iq(&gf4, 1);
        for line in ["x[1,1]*x[1,3] - x[1,2]", "x[1,1]*x[1,2] - x[1,3]", "x[1,2]^2 - 1"] {
            assert!(rel.contains(&parse_binomial(line, rel.space()).unwrap()), "{line}");
        }
    }
}
