//! Monomial orders: lex, degrevlex and weight orders `≻_ω` refined by a tie-break order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::ExponentVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Pure reverse lexicographic comparison. Only a monomial order when used
    /// as the tie-break of a weight order with strictly positive weights.
    RevLex,
    /// Compare by `ω·u`, break ties with `tie`. Weights are stored scaled to integers.
    Weighted {
        weights: Vec<i64>,
        tie: Box<MonomialOrder>,
    },
}

/// A monomial order together with a variable precedence: `precedence[0]` is
/// the most significant variable. `None` means the natural index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, precedence: None }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, precedence: None }
    }

    /// Weight order with nonnegative integer weights.
    pub fn weighted(weights: Vec<i64>, tie: MonomialOrder) -> Result<Self> {
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::InvalidField("weights must be nonnegative".into()));
        }
        if tie.kind == OrderKind::RevLex && weights.contains(&0) {
            return Err(Error::InvalidField("a reverse lexicographic tie-break needs positive weights".into()));
        }
        Ok(MonomialOrder { kind: OrderKind::Weighted { weights, tie: Box::new(tie) }, precedence: None })
    }

    /// Weight order from a nonnegative rational weight vector (scaled by the
    /// common denominator, which leaves the order unchanged).
    pub fn weighted_rational(weights: &[BigRational], tie: MonomialOrder) -> Result<Self> {
        let denom = weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let ints: Vec<BigInt> =
            weights.iter().map(|w| (w * BigRational::from_integer(denom.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, w| acc.gcd(w));
        let ints = ints
            .into_iter()
            .map(|w| {
                let w = if g.is_zero() { w } else { w / &g };
                if w.is_negative() {
                    return Err(Error::InvalidField("weights must be nonnegative".into()));
                }
                w.to_i64().ok_or_else(|| Error::Overflow("weight does not fit in 64 bits".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::weighted(ints, tie)
    }

    /// Graded reverse lexicographic order for the positive grading `weights`.
    pub fn graded_revlex(weights: Vec<i64>) -> Result<Self> {
        Self::weighted(weights, MonomialOrder { kind: OrderKind::RevLex, precedence: None })
    }

    /// Same order with variables compared in the given precedence (most
    /// significant first); `precedence` must be a permutation.
    pub fn with_precedence(mut self, precedence: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = precedence.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        if let OrderKind::Weighted { tie, .. } = &mut self.kind {
            **tie = (**tie).clone().with_precedence(precedence.clone());
        }
        self.precedence = Some(precedence);
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn precedence(&self) -> Option<&[usize]> {
        self.precedence.as_deref()
    }

    /// Compares `x^u` and `x^v`; `Greater` means `x^u ≻ x^v`.
    pub fn compare(&self, u: &[u32], v: &[u32]) -> Ordering {
        debug_assert_eq!(u.len(), v.len());
        match &self.kind {
            OrderKind::Lex => self.lex_cmp(u, v),
            OrderKind::DegRevLex => {
                let du: u64 = u.iter().map(|&e| e as u64).sum();
                let dv: u64 = v.iter().map(|&e| e as u64).sum();
                du.cmp(&dv).then_with(|| self.revlex_cmp(u, v))
            }
            OrderKind::RevLex => self.revlex_cmp(u, v),
            OrderKind::Weighted { weights, tie } => {
                let wu: i128 = weights.iter().zip(u).map(|(&w, &e)| w as i128 * e as i128).sum();
                let wv: i128 = weights.iter().zip(v).map(|(&w, &e)| w as i128 * e as i128).sum();
                wu.cmp(&wv).then_with(|| tie.compare(u, v))
            }
        }
    }

    /// [`compare`](Self::compare) with a dimension check.
    pub fn try_compare(&self, u: &ExponentVector, v: &ExponentVector) -> Result<Ordering> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: u.len(), got: v.len() });
        }
        if let OrderKind::Weighted { weights, .. } = &self.kind {
            if weights.len() != u.len() {
                return Err(Error::DimensionMismatch { expected: weights.len(), got: u.len() });
            }
        }
        Ok(self.compare(u, v))
    }

    fn lex_cmp(&self, u: &[u32], v: &[u32]) -> Ordering {
        match &self.precedence {
            None => u.cmp(v),
            Some(p) => p.iter().map(|&i| u[i].cmp(&v[i])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
        }
    }

    /// The last differing variable decides; a smaller exponent there is larger.
    fn revlex_cmp(&self, u: &[u32], v: &[u32]) -> Ordering {
        let decide = |i: usize| v[i].cmp(&u[i]);
        match &self.precedence {
            None => (0..u.len()).rev().map(decide).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
            Some(p) => p.iter().rev().map(|&i| decide(i)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn spec_examples() {
        assert_eq!(MonomialOrder::lex().compare(&[1, 0], &[0, 5]), Ordering::Greater);
        let w = MonomialOrder::weighted(vec![1, 2], MonomialOrder::lex()).unwrap();
        assert_eq!(w.compare(&[0, 1], &[1, 0]), Ordering::Greater);
        let w = MonomialOrder::weighted(vec![1, 1], MonomialOrder::lex()).unwrap();
        assert_eq!(w.compare(&[1, 0], &[0, 1]), Ordering::Greater);
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex();
        // x1 x3 vs x2^2: same degree, last differing variable is x3, x1x3 has more -> smaller
        assert_eq!(o.compare(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.compare(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn precedence_reverses_lex() {
        let o = MonomialOrder::lex().with_precedence(vec![1, 0]);
        assert_eq!(o.compare(&[1, 0], &[0, 1]), Ordering::Less);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(MonomialOrder::weighted(vec![-1, 2], MonomialOrder::lex()).is_err());
        assert!(MonomialOrder::graded_revlex(vec![0, 1]).is_err());
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let o = MonomialOrder::weighted_rational(&[q(1, 2), q(1, 3)], MonomialOrder::lex()).unwrap();
        assert_eq!(o.kind, OrderKind::Weighted { weights: vec![3, 2], tie: Box::new(MonomialOrder::lex()) });
        let a = ExponentVector::new(vec![1]);
        let b = ExponentVector::new(vec![1, 0]);
        assert!(MonomialOrder::lex().try_compare(&a, &b).is_err());
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex(),
            MonomialOrder::degrevlex(),
            MonomialOrder::lex().with_precedence(vec![2, 0, 3, 1]),
            MonomialOrder::degrevlex().with_precedence(vec![3, 1, 0, 2]),
            MonomialOrder::weighted(vec![0, 3, 1, 2], MonomialOrder::degrevlex()).unwrap(),
            MonomialOrder::weighted(vec![1, 0, 0, 5], MonomialOrder::lex()).unwrap(),
            MonomialOrder::graded_revlex(vec![2, 1, 1, 3]).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn total_order_axioms(
            u in prop::collection::vec(0u32..4, 4),
            v in prop::collection::vec(0u32..4, 4),
            w in prop::collection::vec(0u32..4, 4),
        ) {
            for o in orders() {
                let uv = o.compare(&u, &v);
                prop_assert_eq!(uv, o.compare(&v, &u).reverse());
                prop_assert_eq!(uv == Ordering::Equal, u == v);
                if uv == Ordering::Greater && o.compare(&v, &w) == Ordering::Greater {
                    prop_assert_eq!(o.compare(&u, &w), Ordering::Greater);
                }
                let add = |a: &[u32]| a.iter().zip(&w).map(|(x, y)| x + y).collect::<Vec<_>>();
                prop_assert_eq!(o.compare(&add(&u), &add(&v)), uv);
                prop_assert_ne!(o.compare(&u, &[0; 4]), Ordering::Less);
            }
        }
    }
}
