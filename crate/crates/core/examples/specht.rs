//! Two-row Specht modules over GF(2) and the resolution of crossings.

use tlzero::specht::checks::{tableau_span, verify_specht_exactness};
use tlzero::specht::{g_map, resolve_to_noncrossing, ChordDiagram, TwoRowTableau};

fn main() -> tlzero::Result<()> {
    let t = TwoRowTableau::new(vec![1, 2, 5, 3, 8], vec![4, 6, 7])?;
    println!("F_t = {}", t.polynomial());
    let res = resolve_to_noncrossing(&t)?;
    for step in &res.steps {
        println!("{:?}: {} -> {} + {}", step.kind, step.before, step.after[0], step.after[1]);
    }
    for d in &res.terms {
        println!("  {}  G = {}", ChordDiagram::from_diagram(d), g_map(d)?);
    }

    let n = 6;
    let dims: Vec<usize> = (0..=n / 2).map(|k| tableau_span(n, k).dim()).collect();
    println!("dims along the sequence for n={n}: {dims:?}");
    let ok = verify_specht_exactness(n)?.iter().all(|c| c.pass);
    println!("exact: {ok}");
    Ok(())
}
