//! Jones polynomials of braid closures from standard-module characters.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlzero::hecke::jones::alternating_sum_at_i;
use tlzero::hecke::{BraidWord, HeckeFamily};

fn main() -> tlzero::Result<()> {
    for (n, w) in [(2, "1"), (2, ""), (2, "1,1"), (2, "1,1,1"), (3, "1,-2,1,-2"), (4, "1,2,3,-1,2")] {
        let v = HeckeFamily::new(n)?.jones(&BraidWord::parse(n, w)?)?;
        println!("[{w}] on {n}: V = {}", v.jones);
    }

    let fam = HeckeFamily::new(6)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let w = BraidWord::random(6, 12, &mut rng)?;
        let chars = fam.characters(&w)?;
        println!("[{w}] alternating sum at s = i: {}", alternating_sum_at_i(&chars));
    }
    Ok(())
}
