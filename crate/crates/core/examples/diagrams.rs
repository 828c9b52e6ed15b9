//! Compose Temperley-Lieb diagrams at loop value zero and print them.

use tlzero::diagram::{catalan, enumerate_monic_basis, PlanarDiagram};
use tlzero::tl::checks::generator_product;

fn main() -> tlzero::Result<()> {
    let (d, loops) = generator_product(5, &[1, 3, 2, 1, 3])?;
    println!("e1 e3 e2 e1 e3 = {d} with {loops} loop(s)");
    println!("{}", d.render_ascii());

    let x: PlanarDiagram = "6:2:[t1-b1,t2-b2,t3-t4,t5-t6]".parse()?;
    for i in 1..6 {
        let c = PlanarDiagram::generator(6, i)?.compose(&x)?;
        let kept = c.loops == 0 && c.diagram.is_monic();
        println!("e{i} x = {}", if kept { c.diagram.to_string() } else { "0".into() });
    }

    for n in 1..=8 {
        let w: Vec<usize> = (n % 2..=n).step_by(2).map(|l| enumerate_monic_basis(n, l).map_or(0, |b| b.len())).collect();
        println!("n={n} catalan={} standard dims {w:?}", catalan(n));
    }
    Ok(())
}
