//! Arithmetic in GF(9) = F_3[α]/(α² + α + 2): powers of α, their coordinates
//! in the basis {1, α}, and the 0/1 crossing encoding of a word.

use codeideal::{FieldElement, FiniteField};

fn main() -> codeideal::Result<()> {
    let ff = FiniteField::new(3, 2, &[2, 1, 1], None)?;
    println!("GF({}) with modulus coefficients {:?}", ff.q(), ff.modulus());

    println!("{:>4} {:>4} {:>4}", "k", "pi1", "pi2");
    for k in 1..ff.q() as i64 {
        let a = ff.alpha_pow(k);
        println!("{k:>4} {:>4} {:>4}", ff.projection(a, 1)?, ff.projection(a, 2)?);
    }

    let a = ff.alpha_pow(3);
    let b = ff.from_int(2);
    println!("α^3 + 2 = {}", ff.format_element(ff.add(a, b)));
    println!("α^3 · 2 = {}", ff.format_element(ff.mul(a, b)));
    println!("1 / α^3 = {}", ff.format_element(ff.inv(a).expect("nonzero")));

    let word = vec![ff.alpha_pow(2), FieldElement::Zero, ff.one()];
    let up = ff.cross_up(&word);
    println!("crossing of {:?}: {up:?}", word.iter().map(|&x| ff.format_element(x)).collect::<Vec<_>>());
    assert_eq!(ff.cross_down(&up), word);
    Ok(())
}
