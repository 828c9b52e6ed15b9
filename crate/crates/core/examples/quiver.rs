//! The straight-line quiver with relations and its match with the
//! projective modules.

use tlzero::quiver::checks::{verify_phi, verify_psi_iso};
use tlzero::quiver::rep::projective;
use tlzero::quiver::{AdjacentMaps, QuiverAlgebra};

fn main() -> tlzero::Result<()> {
    let alg = QuiverAlgebra::new(3)?;
    let paths: Vec<String> = alg.basis().iter().map(ToString::to_string).collect();
    println!("path basis ({}): {}", alg.dim(), paths.join(" "));

    let p2 = projective(3, 2)?;
    println!("P(2) dims {:?}", p2.dims);
    println!("{}", serde_json::to_string(&p2).expect("serializes"));

    let maps = AdjacentMaps::new(6)?;
    let ratios: Vec<String> = maps.ratios.iter().flatten().map(ToString::to_string).collect();
    println!("composite ratios before rescaling: {ratios:?}");
    let mut claims = verify_psi_iso(&maps)?;
    claims.extend(verify_phi(&maps)?);
    println!("{} claims, {} fail", claims.len(), claims.iter().filter(|c| !c.pass).count());
    Ok(())
}
