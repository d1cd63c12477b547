//! The generalized code ideal of a [3,2] code over GF(4): its Graver basis
//! and the universal Gröbner basis obtained from it.

use std::time::Instant;

use codeideal::graver::{default_order, graver_generalized};
use codeideal::universal::{universal_basis, universal_basis_char2};
use codeideal::{FieldElement::Power, FiniteField, LinearCode};

fn main() -> codeideal::Result<()> {
    // GF(4) = F_2[α]/(α² + α + 1) with basis {α, 1}
    let ff = FiniteField::new(2, 2, &[1, 1, 1], Some(&[Power(1), Power(3)]))?;
    let code = LinearCode::from_parity(ff, 3, vec![vec![Power(1), Power(3), Power(2)]])?;

    let start = Instant::now();
    let gr = graver_generalized(&code, &default_order())?;
    println!("Graver basis: {} binomials ({:.2?})", gr.len(), start.elapsed());

    let start = Instant::now();
    let ugb = universal_basis(&gr);
    println!("universal Gröbner basis: {} binomials ({:.2?})", ugb.len(), start.elapsed());

    // characteristic two: no cone computations needed
    let shortcut = universal_basis_char2(&gr)?;
    println!("shortcut agrees: {}", shortcut.elements() == ugb.elements());
    Ok(())
}
