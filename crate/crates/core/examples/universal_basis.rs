//! Universal Gröbner basis of the ternary [3,2] code ideal, with the weight
//! vector that certifies each element.

use codeideal::graver::{default_order, graver_ordinary};
use codeideal::universal::universal_basis;
use codeideal::{FiniteField, LinearCode};

fn main() -> codeideal::Result<()> {
    let ff = FiniteField::new(3, 1, &[0, 1], None)?;
    let h = vec![vec![ff.from_int(1), ff.from_int(2), ff.from_int(1)]];
    let code = LinearCode::from_parity(ff, 3, h)?;
    let gr = graver_ordinary(&code, &default_order())?;
    let space = gr.elements().space().clone();

    let u = universal_basis(&gr);
    println!("{} of {} Graver elements are in some reduced Gröbner basis", u.len(), gr.len());
    for (g, omega) in u.witnesses() {
        let w: Vec<String> = omega.iter().map(|x| x.to_string()).collect();
        println!("  {:<24} leading under ω = ({})", g.display(&space).to_string(), w.join(", "));
    }
    for g in gr.elements().iter().filter(|g| !u.elements().contains(g)) {
        println!("  dropped: {}", g.display(&space));
    }
    Ok(())
}
