//! The integer matrices attached to a code over GF(4): the expanded parity
//! check matrix, its extension by 2·I, and the 2-Lawrence lifting.

use codeideal::graver::extended_code_matrix;
use codeideal::matrices::{build_he, build_hplus_e, lawrence_lift};
use codeideal::{FieldElement::Power, FieldElement::Zero, FiniteField, IdealKind, IntMatrix, LinearCode};

fn show(name: &str, m: &IntMatrix) {
    println!("{name} ({}x{})", m.rows(), m.cols());
    for row in m.to_rows() {
        println!("  {}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
    }
}

fn main() -> codeideal::Result<()> {
    let ff = FiniteField::new(2, 2, &[1, 1, 1], None)?;
    let one = ff.one();
    let code =
        LinearCode::from_parity(ff, 4, vec![vec![Power(1), Zero, one, Zero], vec![Power(2), Power(1), Zero, one]])?;
    println!("[{}, {}] code over GF(4)", code.n(), code.k());

    let he = build_he(&code);
    show("H_e", &he);
    show("H(4)", &extended_code_matrix(&code, IdealKind::Ordinary));
    show("Lawrence(H_e)", &lawrence_lift(&he, 2));
    show("H_+e", &build_hplus_e(&code));
    Ok(())
}
