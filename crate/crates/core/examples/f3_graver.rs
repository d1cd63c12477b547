//! Graver basis of the ordinary code ideal of the ternary [3,2] code with
//! parity check matrix (1 2 1).

use codeideal::graver::{default_order, graver_ordinary};
use codeideal::{FiniteField, LinearCode};

fn main() -> codeideal::Result<()> {
    let ff = FiniteField::new(3, 1, &[0, 1], None)?;
    let h = vec![vec![ff.from_int(1), ff.from_int(2), ff.from_int(1)]];
    let code = LinearCode::from_parity(ff, 3, h)?;

    let gr = graver_ordinary(&code, &default_order())?;
    gr.check_invariants()?;
    println!("{} primitive binomials:", gr.len());
    print!("{}", gr.elements());
    Ok(())
}
