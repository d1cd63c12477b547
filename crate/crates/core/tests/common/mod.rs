#![allow(dead_code)]

use codeideal::binomial::parse_binomial;
use codeideal::{BinomialSet, FieldElement, FiniteField, LinearCode, VariableSpace, Word};

pub fn gf3() -> FiniteField {
    FiniteField::new(3, 1, &[0, 1], None).unwrap()
}

pub fn gf2() -> FiniteField {
    FiniteField::new(2, 1, &[1, 1], None).unwrap()
}

/// GF(4) with α² + α + 1 = 0 and basis {α, 1}.
pub fn gf4_alpha_one() -> FiniteField {
    use FieldElement::Power;
    FiniteField::new(2, 2, &[1, 1, 1], Some(&[Power(1), Power(3)])).unwrap()
}

/// The [3,2] code over F3 with parity check matrix (1 2 1).
pub fn f3_code() -> LinearCode {
    let ff = gf3();
    let h = vec![vec![ff.from_int(1), ff.from_int(2), ff.from_int(1)]];
    LinearCode::from_parity(ff, 3, h).unwrap()
}

/// The [3,2] code over F4 with parity check matrix (α α³ α²).
pub fn f4_code() -> LinearCode {
    use FieldElement::Power;
    LinearCode::from_parity(gf4_alpha_one(), 3, vec![vec![Power(1), Power(3), Power(2)]]).unwrap()
}

pub fn set(space: &VariableSpace, lines: &[&str]) -> BinomialSet {
    BinomialSet::new(space.clone(), lines.iter().map(|l| parse_binomial(l, space).unwrap()))
}

pub const F3_GRAVER: [&str; 13] = [
    "x[3,1]^3 - 1",
    "x[2,1]^3 - 1",
    "x[2,1]*x[3,1] - 1",
    "x[1,1]^3 - 1",
    "x[1,1]*x[3,1]^2 - 1",
    "x[1,1]^2*x[3,1] - 1",
    "x[1,1]*x[2,1] - 1",
    "x[3,1] - x[2,1]^2",
    "x[3,1]^2 - x[2,1]",
    "x[3,1] - x[1,1]",
    "x[1,1]^2 - x[2,1]",
    "x[1,1] - x[2,1]^2",
    "x[1,1]*x[3,1] - x[2,1]",
];

/// All generator matrices in reduced row echelon form of dimension `k` and length `n`.
pub fn rref_generators(ff: &FiniteField, n: usize, k: usize) -> Vec<Vec<Word>> {
    let elements: Vec<FieldElement> = ff.elements().collect();
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // free positions: entries right of a row's pivot in non-pivot columns
        let free: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (pivots[i] + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c))).collect();
        let total = elements.len().pow(free.len() as u32);
        for mut idx in 0..total {
            let mut g = vec![vec![FieldElement::Zero; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                g[i][p] = ff.one();
            }
            for &(i, c) in &free {
                g[i][c] = elements[idx % elements.len()];
                idx /= elements.len();
            }
            out.push(g);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every code from the oracle sample: F2 with n <= 3 and F3 with n <= 2, all dimensions.
pub fn sample_codes() -> Vec<LinearCode> {
    let mut codes = Vec::new();
    for (ff, max_n) in [(gf2(), 3), (gf3(), 2)] {
        for n in 1..=max_n {
            for k in 0..=n {
                for g in rref_generators(&ff, n, k) {
                    codes.push(LinearCode::from_generator(ff.clone(), n, g).unwrap());
                }
            }
        }
    }
    codes
}
