//! The toric route to a code ideal: the toric ideal of H_+(4) = (H_+e | 2I),
//! its reduced lex basis, and the code ideal obtained by setting y = 1.

use codeideal::graver::code_toric_ideal;
use codeideal::groebner::buchberger;
use codeideal::{FieldElement::Power, FiniteField, IdealKind, LinearCode, MonomialOrder};

fn main() -> codeideal::Result<()> {
    // GF(4) with basis {α, 1}
    let ff = FiniteField::new(2, 2, &[1, 1, 1], Some(&[Power(1), Power(3)]))?;
    let code = LinearCode::from_parity(ff, 3, vec![vec![Power(1), Power(3), Power(2)]])?;

    let lex = MonomialOrder::lex();
    let toric = code_toric_ideal(&code, IdealKind::Generalized)?;
    println!("toric ideal: {} generators", toric.len());

    // elements of a Gröbner basis carry their leading monomial on the left
    let g = buchberger(&toric, &lex);
    println!("reduced lex basis ({}):", g.len());
    for b in g.elements() {
        println!("  {}", b.display(g.space()));
    }

    let code_ideal = buchberger(&g.to_set().substitute_ones("y")?, &lex);
    println!("after y = 1 ({}):", code_ideal.len());
    for b in code_ideal.elements() {
        println!("  {}", b.display(code_ideal.space()));
    }
    Ok(())
}
