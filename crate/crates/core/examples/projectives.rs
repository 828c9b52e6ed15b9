//! Projective covers as induced modules, and their hom tables.

use tlzero::linalg::hom_dim;
use tlzero::tl::checks::TlFamily;

fn main() -> tlzero::Result<()> {
    let n = 6;
    let fam = TlFamily::with_projectives(n)?;
    let ws = fam.weights();
    println!("weights {ws:?}");
    for &l in &ws {
        let row: Vec<usize> = ws.iter().map(|&m| hom_dim(fam.p(l), fam.w(m))).collect::<tlzero::Result<_>>()?;
        println!("dim P({l}) = {:<3} hom(P({l}), W(m)) = {row:?}", fam.p(l).dim());
    }
    for &l in &ws {
        let row: Vec<usize> = ws.iter().map(|&m| hom_dim(fam.p(l), fam.p(m))).collect::<tlzero::Result<_>>()?;
        println!("hom(P({l}), P(m)) = {row:?}");
    }
    Ok(())
}
