//! Standard modules, their Gram forms and the irreducible quotients.

use tlzero::linalg::hom_dim;
use tlzero::tl::{gram_matrix, irreducible_dim, StandardModule};

fn main() -> tlzero::Result<()> {
    let n = 6;
    for l in (0..=n).step_by(2) {
        let w = StandardModule::new(n, l)?;
        let irr = if l > 0 { irreducible_dim(n, l)?.to_string() } else { "-".into() };
        println!("W({n},{l}): dim {} irreducible quotient {irr}", w.dim());
    }
    println!("Gram matrix of W(4,2):\n{}", gram_matrix(4, 2)?);

    let w2 = StandardModule::new(n, 2)?;
    let w4 = StandardModule::new(n, 4)?;
    println!("dim hom(W(6,4), W(6,2)) = {}", hom_dim(&w4.rep, &w2.rep)?);
    println!("dim hom(W(6,2), W(6,4)) = {}", hom_dim(&w2.rep, &w4.rep)?);
    Ok(())
}
