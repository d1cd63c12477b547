//! Cross-checks the Lawrence-lifting Graver computation against exhaustive
//! search on every binary code of length at most 3.

use codeideal::graver::{default_order, graver_bruteforce, graver_ordinary};
use codeideal::matrices::row_reduce;
use codeideal::{FieldElement, FiniteField, IdealKind, LinearCode};

fn main() -> codeideal::Result<()> {
    let ff = FiniteField::new(2, 1, &[1, 1], None)?;
    let one = ff.one();
    let mut checked = 0;
    for n in 1..=3usize {
        // every subset of nonzero words spans a code; keep each code once
        let words: Vec<Vec<FieldElement>> = (1..1u32 << n)
            .map(|m| (0..n).map(|i| if m >> i & 1 == 1 { one } else { FieldElement::Zero }).collect())
            .collect();
        let mut seen = Vec::new();
        for subset in 0..1u32 << words.len() {
            let rows: Vec<_> = (0..words.len()).filter(|i| subset >> i & 1 == 1).map(|i| words[i].clone()).collect();
            let (echelon, _) = row_reduce(&ff, &rows, n);
            let basis: Vec<_> = echelon.into_iter().filter(|w| w.iter().any(|x| !x.is_zero())).collect();
            if seen.contains(&basis) {
                continue;
            }
            seen.push(basis.clone());
            let code = LinearCode::from_generator(ff.clone(), n, basis)?;
            let fast = graver_ordinary(&code, &default_order())?;
            let oracle = graver_bruteforce(&code, IdealKind::Ordinary)?;
            assert_eq!(fast.elements(), oracle.elements());
            checked += 1;
        }
    }
    println!("{checked} binary codes: Graver bases agree with brute force");
    Ok(())
}
