//! Verification campaigns behind the command line: each `cmd_*` builds a
//! [`VerificationReport`] from the checks in the library.

use std::fmt::Write as _;

use serde_json::json;

use crate::diagram::{catalan, enumerate_monic_basis, standard_dim};
use crate::error::Result;
use crate::hecke::checks::{
    character_claims, even_contrast_claim, hecke_relation_claims, identity_campaign, jones_example_claims, markov_claims,
};
use crate::hecke::jones::{alternating_sum_at_i, signed_row_sum};
use crate::hecke::{BraidWord, HeckeFamily, JonesResult};
use crate::quiver::checks::{quiver_object_claims, verify_hw_axioms_quiver, verify_phi, verify_psi_iso};
use crate::quiver::AdjacentMaps;
use crate::report::{timed, Claim, VerificationReport};
use crate::specht::checks::{example_claims, g_bijection_claims, verify_commuting_square, verify_specht_exactness};
use crate::tl::checks::{
    dimension_claims, gram_claims, hom_table_claims, projective_claims, verify_bent_composite, verify_exact_sequence,
    verify_hw_axioms_tl, verify_restriction, worked_example_claims, TlFamily,
};
use crate::tl::gram::irreducible_dim;
use crate::tl::projective::expected_projective_dim;

pub const DEFAULT_SEED: u64 = 2024;
pub const DEFAULT_NMAX: usize = 12;
/// Largest `n` for checks that build projective modules.
pub const PROJECTIVE_NMAX: usize = 8;
/// Random braid words per strand count.
pub const BRAID_WORDS: usize = 200;
pub const BRAID_MAX_LEN: usize = 12;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: DEFAULT_SEED, timings: false }
    }
}

/// Turn an error into a failing claim so a campaign always completes.
fn run(report: &mut VerificationReport, opts: &Options, id: &str, params: serde_json::Value, f: impl FnOnce() -> Result<Vec<Claim>>) {
    let claims = timed(opts.timings, || match f() {
        Ok(c) => c,
        Err(e) => vec![Claim::error(id, "the computation completes", params, "completed", &e)],
    });
    report.extend(claims);
}

fn record_conventions(r: &mut VerificationReport) {
    r.convention("loop_value", "0 for the diagram algebra; s + s^-1 for braid images");
    r.convention("composition", "xy places x on top of y; a closed loop multiplies by the loop value");
    r.convention("hecke_variable", "one variable s with q = t = s^2 and sqrt(t) = s");
    r.convention("braid_generator", "sigma_i acts as s E_i - 1, sigma_i^-1 as s^-2 (s E_i - s^2)");
    r.convention("jones_prefactor", "(-1)^(n-1) s^(e-n+1) with e the exponent sum");
    r.convention("mirror", "the closure of sigma_1^3 is -t^4 + t^3 + t; its mirror -t^-4 + t^-3 + t^-1 comes from sigma_1^-3");
    r.convention("weight_order", "mu precedes lambda in the highest-weight order when mu < lambda numerically");
    r.convention("paths", "printed right to left, e.g. b1a1e1 is a_1 followed by b_1");
    r.convention("specht_resolution", "chord crossings first, then chords over free points; GF(2) multiset");
}

/// Dimension table rows for `n` in `range`, plus the enumeration claims.
pub fn cmd_dims(lo: usize, hi: usize, draw: bool) -> (VerificationReport, String) {
    let mut report = VerificationReport::new(json!({ "command": "dims", "from": lo, "to": hi }));
    record_conventions(&mut report);
    let mut table = String::new();
    for n in lo.max(1)..=hi {
        let ls: Vec<usize> = (n % 2..=n).step_by(2).collect();
        let w: Vec<String> = ls.iter().map(|&l| standard_dim(n, l).to_string()).collect();
        let p: Vec<String> = ls.iter().filter(|&&l| n % 2 == 0 && l >= 2).map(|&l| expected_projective_dim(n, l).to_string()).collect();
        let irr: Vec<String> = ls.iter().filter(|&&l| l >= 1).map(|&l| irreducible_dim(n, l).map_or("?".into(), |d| d.to_string())).collect();
        let _ = writeln!(
            table,
            "n={n:<3} l=({}) W=({}) P=({}) L=({}) catalan={}",
            ls.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            w.join(","),
            p.join(","),
            irr.join(","),
            catalan(n)
        );
        if draw {
            for &l in &ls {
                for d in enumerate_monic_basis(n, l).unwrap_or_default() {
                    let _ = writeln!(table, "{d}\n{}", d.render_ascii());
                }
            }
        }
    }
    report.extend(dimension_claims(hi, hi.min(10)).into_iter().filter(|c| c.parameters["n"].as_u64().is_some_and(|n| n as usize >= lo)));
    report.finish();
    (report, table)
}

pub fn cmd_exact(n: usize, opts: &Options) -> VerificationReport {
    let mut report = VerificationReport::new(json!({ "command": "exact", "n": n }));
    record_conventions(&mut report);
    let p = json!({ "n": n });
    run(&mut report, opts, "exact", p.clone(), || verify_exact_sequence(n));
    if n % 2 == 0 && n >= 2 {
        run(&mut report, opts, "exact.bent_composite", p, || verify_bent_composite(n));
    }
    report.finish();
    report
}

fn quiver_claims(report: &mut VerificationReport, n: usize, opts: &Options) {
    let p = json!({ "n": n });
    run(report, opts, "quiver.objects", p.clone(), || quiver_object_claims(n / 2));
    run(report, opts, "quiver.equivalence", p, || {
        let maps = AdjacentMaps::new(n)?;
        let mut c = verify_psi_iso(&maps)?;
        c.extend(verify_phi(&maps)?);
        Ok(c)
    });
}

pub fn cmd_quiver(n: usize, opts: &Options) -> VerificationReport {
    let mut report = VerificationReport::new(json!({ "command": "quiver", "n": n }));
    record_conventions(&mut report);
    quiver_claims(&mut report, n, opts);
    report.finish();
    report
}

fn specht_claims(report: &mut VerificationReport, n: usize, opts: &Options) {
    let p = json!({ "n": n });
    run(report, opts, "specht.g", p.clone(), || g_bijection_claims(n));
    if n % 2 == 0 {
        run(report, opts, "specht.commuting_square", p.clone(), || (1..=n / 2).map(|k| verify_commuting_square(n, k)).collect());
        run(report, opts, "specht.exact", p, || verify_specht_exactness(n));
    }
}

pub fn cmd_specht(n: usize, opts: &Options) -> VerificationReport {
    let mut report = VerificationReport::new(json!({ "command": "specht", "n": n }));
    record_conventions(&mut report);
    specht_claims(&mut report, n, opts);
    if n == 8 || n == 12 {
        run(&mut report, opts, "specht.example", json!({}), example_claims);
    }
    report.finish();
    report
}

/// The Jones polynomial of one closed braid with its identity check. The
/// polynomial is `None` when the division by `1 + t` fails.
pub fn cmd_jones(braid: &BraidWord) -> Result<(VerificationReport, Option<JonesResult>)> {
    let n = braid.strands();
    let mut report = VerificationReport::new(json!({ "command": "jones", "braid": braid.to_string(), "strands": n }));
    record_conventions(&mut report);
    let fam = HeckeFamily::new(n)?;
    let chars = fam.characters(braid)?;
    let result = fam.jones(braid);
    let params = json!({ "braid": braid.to_string(), "strands": n });
    report.push(Claim::new(
        "jones.divisible",
        "the weighted character sum is divisible by 1 + t",
        params.clone(),
        json!({ "divisible": true }),
        match &result {
            Ok(_) => json!({ "divisible": true }),
            Err(e) => json!({ "divisible": false, "error": e.to_string() }),
        },
    ));
    if n % 2 == 0 {
        report.push(Claim::new(
            "jones.alternating_identity",
            "the alternating sum of characters vanishes at s = i",
            params,
            "0",
            alternating_sum_at_i(&chars).to_string(),
        ));
    } else {
        report.push(Claim::new(
            "jones.odd_termwise",
            "for an odd number of strands every signed row sum vanishes",
            params,
            vec![0i64; n / 2 + 1],
            (0..=n / 2).map(|k| signed_row_sum(n, k)).collect::<Vec<_>>(),
        ));
    }
    report.finish();
    Ok((report, result.ok()))
}

/// Every check, with projective-heavy ones capped at [`PROJECTIVE_NMAX`].
pub fn cmd_all(nmax: usize, opts: &Options) -> VerificationReport {
    let mut report = VerificationReport::new(json!({ "command": "all", "nmax": nmax, "seed": opts.seed }));
    record_conventions(&mut report);
    let pmax = nmax.min(PROJECTIVE_NMAX);
    report.extend(timed(opts.timings, || dimension_claims(nmax, nmax.min(10))));
    run(&mut report, opts, "example", json!({}), || {
        let mut c = worked_example_claims()?;
        c.extend(example_claims()?);
        Ok(c)
    });
    for n in (2..=nmax).step_by(2) {
        let p = json!({ "n": n });
        run(&mut report, opts, "exact", p.clone(), || verify_exact_sequence(n));
        run(&mut report, opts, "exact.bent_composite", p.clone(), || verify_bent_composite(n));
        run(&mut report, opts, "restriction", p, || {
            let mut c = Vec::new();
            for l in (0..=n).step_by(2) {
                c.extend(verify_restriction(n, l)?);
            }
            Ok(c)
        });
    }
    run(&mut report, opts, "gram", json!({ "nmax": nmax }), || gram_claims(nmax, nmax.saturating_sub(1)));
    for n in (4..=pmax).step_by(2) {
        run(&mut report, opts, "tl.projective", json!({ "n": n }), || {
            let fam = TlFamily::with_projectives(n)?;
            let mut c = projective_claims(&fam)?;
            c.extend(hom_table_claims(&fam)?);
            c.extend(verify_hw_axioms_tl(&fam)?);
            Ok(c)
        });
        quiver_claims(&mut report, n, opts);
    }
    for m in 1..=6 {
        run(&mut report, opts, "hw.quiver", json!({ "m": m }), || verify_hw_axioms_quiver(m));
    }
    for n in 1..=nmax {
        specht_claims(&mut report, n, opts);
    }
    run(&mut report, opts, "hecke.relations", json!({ "nmax": pmax }), || hecke_relation_claims(pmax));
    run(&mut report, opts, "hecke.character", json!({}), character_claims);
    run(&mut report, opts, "jones.example", json!({}), jones_example_claims);
    for n in 2..=6 {
        run(&mut report, opts, "jones.campaign", json!({ "n": n }), || identity_campaign(n, BRAID_WORDS, BRAID_MAX_LEN, opts.seed));
        if n % 2 == 0 {
            report.push(even_contrast_claim(n));
        }
    }
    run(&mut report, opts, "jones.markov", json!({}), || markov_claims(5, 20, opts.seed));
    report.finish();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_table() {
        let (r, table) = cmd_dims(4, 6, false);
        assert!(r.all_pass);
        assert!(table.lines().next().unwrap().contains("W=(2,3,1)"));
    }

    #[test]
    fn exact_six() {
        assert!(cmd_exact(6, &Options::default()).all_pass);
    }

    #[test]
    fn jones_trefoil() {
        let (r, v) = cmd_jones(&BraidWord::parse(2, "1,1,1").unwrap()).unwrap();
        assert!(r.all_pass);
        assert_eq!(v.unwrap().jones, "-t^4 + t^3 + t");
    }
}
