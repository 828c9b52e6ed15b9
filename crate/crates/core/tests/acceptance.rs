//! One line per acceptance criterion. Exits nonzero if any criterion fails
//! or runs over its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tlzero::hecke::checks::{identity_campaign, jones_example_claims};
use tlzero::quiver::checks::{quiver_object_claims, verify_hw_axioms_quiver, verify_phi, verify_psi_iso};
use tlzero::quiver::AdjacentMaps;
use tlzero::report::Claim;
use tlzero::specht::checks::{example_claims, g_bijection_claims, verify_commuting_square, verify_specht_exactness};
use tlzero::tl::checks::{
    dimension_claims, gram_claims, hom_table_claims, verify_exact_sequence, verify_hw_axioms_tl, worked_example_claims,
    TlFamily,
};
use tlzero::Result;

fn dims() -> Result<Vec<Claim>> {
    Ok(dimension_claims(12, 10))
}

fn worked_examples() -> Result<Vec<Claim>> {
    let mut c = worked_example_claims()?;
    c.extend(example_claims()?.into_iter().filter(|c| c.claim_id == "specht.example.g12"));
    Ok(c)
}

fn exact_sequence() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for n in (2..=12).step_by(2) {
        c.extend(verify_exact_sequence(n)?);
    }
    Ok(c)
}

fn gram() -> Result<Vec<Claim>> {
    gram_claims(12, 11)
}

fn homs() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for n in [4, 6, 8] {
        c.extend(hom_table_claims(&TlFamily::with_projectives(n)?)?);
    }
    Ok(c)
}

fn quiver() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for n in [4, 6, 8] {
        c.extend(quiver_object_claims(n / 2)?);
        let maps = AdjacentMaps::new(n)?;
        c.extend(verify_psi_iso(&maps)?);
        c.extend(verify_phi(&maps)?);
    }
    Ok(c)
}

fn highest_weight() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for m in 1..=6 {
        c.extend(verify_hw_axioms_quiver(m)?);
    }
    for n in [4, 6, 8] {
        c.extend(verify_hw_axioms_tl(&TlFamily::with_projectives(n)?)?);
    }
    Ok(c)
}

fn specht() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for n in 1..=12 {
        c.extend(g_bijection_claims(n)?);
        if n % 2 == 0 {
            for k in 1..=n / 2 {
                c.push(verify_commuting_square(n, k)?);
            }
            c.extend(verify_specht_exactness(n)?);
        }
    }
    c.extend(example_claims()?);
    Ok(c)
}

fn jones() -> Result<Vec<Claim>> {
    let mut c = Vec::new();
    for n in 2..=6 {
        c.extend(identity_campaign(n, 200, 12, 2024)?);
    }
    c.extend(jones_example_claims()?);
    Ok(c)
}

type Check = fn() -> Result<Vec<Claim>>;

const CRITERIA: [(&str, u64, Check); 9] = [
    ("dimension tables", 10, dims),
    ("worked examples", 1, worked_examples),
    ("exact sequence of standard modules", 120, exact_sequence),
    ("Gram ranks and irreducibles", 60, gram),
    ("hom tables", 300, homs),
    ("quiver equivalence", 300, quiver),
    ("highest-weight axioms", 300, highest_weight),
    ("Specht modules over GF(2)", 120, specht),
    ("Jones identity", 60, jones),
];

fn main() -> ExitCode {
    let mut all_pass = true;
    for (k, (name, budget, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (pass, detail) = match &outcome {
            Ok(claims) => {
                let failed: Vec<&Claim> = claims.iter().filter(|c| !c.pass).collect();
                (failed.is_empty() && !claims.is_empty(), format!("{} claims, {} failed", claims.len(), failed.len()))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let pass = pass && !over;
        all_pass &= pass;
        println!(
            "{} criterion {}: {name} ({detail}, {:.2} s of {budget} s)",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
        if let Ok(claims) = &outcome {
            for c in claims.iter().filter(|c| !c.pass) {
                println!("    {} {} expected {} computed {}", c.claim_id, c.parameters, c.expected, c.computed);
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
