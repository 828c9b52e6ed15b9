//! The alternating cup maps between standard modules form an exact sequence.

use tlzero::diagram::PlanarDiagram;
use tlzero::tl::alternating_cup_map;
use tlzero::tl::maps::alternating_cup_terms;

fn main() -> tlzero::Result<()> {
    let x: PlanarDiagram = "10:6:[t1-b1,t2-t3,t4-t5,t6-b2,t7-b3,t8-b4,t9-b5,t10-b6]".parse()?;
    for (sign, d) in alternating_cup_terms(&x)? {
        println!("{:+} {d}", sign);
    }

    let n = 8;
    let mut ranks = Vec::new();
    for l in (0..=n - 2).rev().step_by(2) {
        let m = alternating_cup_map(n, l)?;
        println!("phi {}->{l}: {}x{} rank {}", l + 2, m.rows(), m.cols(), m.rank());
        ranks.push(m.rank());
        if l >= 2 {
            let next = alternating_cup_map(n, l - 2)?;
            assert!(next.mul(&m)?.is_zero());
        }
    }
    for report in [tlzero::campaign::cmd_exact(n, &Default::default())] {
        println!("{} claims, all pass: {}", report.claims.len(), report.all_pass);
    }
    Ok(())
}
