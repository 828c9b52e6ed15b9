use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::diagram::standard_dim;
use crate::error::Result;
use crate::linalg::{Laurent, Matrix, Ring};
use crate::report::Claim;

use super::braid::BraidWord;
use super::jones::{alternating_sum_at_i, hecke_parameter, signed_row_sum, HeckeFamily, HeckeRep};

/// Quadratic, braid, commuting and inverse relations of the generator
/// images on `W^n_l`.
pub fn hecke_relations(rep: &HeckeRep) -> Result<serde_json::Value> {
    let id = Matrix::<Laurent>::identity(rep.dim());
    let q = hecke_parameter();
    let g = &rep.g;
    let mut quadratic = true;
    let mut inverse = true;
    let mut braid = true;
    let mut far = true;
    for i in 0..g.len() {
        let lhs = g[i].sub(&id.scale(&q))?.mul(&g[i].add(&id)?)?;
        quadratic &= lhs.is_zero();
        inverse &= g[i].mul(&rep.g_inv[i])? == id && rep.g_inv[i].mul(&g[i])? == id;
        for j in i + 1..g.len() {
            if j == i + 1 {
                braid &= g[i].mul(&g[j])?.mul(&g[i])? == g[j].mul(&g[i])?.mul(&g[j])?;
            } else {
                far &= g[i].mul(&g[j])? == g[j].mul(&g[i])?;
            }
        }
    }
    Ok(json!({ "quadratic": quadratic, "braid": braid, "commuting": far, "inverse": inverse }))
}

pub fn hecke_relation_claims(nmax: usize) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for l in (n % 2..=n).step_by(2) {
            let rep = HeckeRep::new(n, l)?;
            out.push(Claim::new(
                "hecke.relations",
                "s E_i - 1 satisfies the Hecke relations at q = s^2 on the generic standard module",
                json!({ "n": n, "l": l }),
                json!({ "quadratic": true, "braid": true, "commuting": true, "inverse": true }),
                hecke_relations(&rep)?,
            ));
        }
    }
    Ok(out)
}

/// Characters are polynomials in `t = s²` whose exponents lie between
/// minus the number of negative letters and the number of positive ones.
pub fn character_in_range(chi: &Laurent, w: &BraidWord) -> bool {
    let lo = -2 * w.negative_letters() as i32;
    let hi = 2 * w.positive_letters() as i32;
    chi.is_even() && chi.terms().all(|(e, _)| lo <= e && e <= hi)
}

pub fn character_claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        let fam = HeckeFamily::new(n)?;
        let chars: Vec<String> = fam.characters(&BraidWord::identity(n)?)?.iter().map(ToString::to_string).collect();
        let dims: Vec<String> = (0..=n / 2).map(|k| standard_dim(n, n - 2 * k).to_string()).collect();
        out.push(Claim::new(
            "hecke.character.identity",
            "the character of the trivial braid is the dimension",
            json!({ "n": n }),
            dims,
            chars,
        ));
    }
    let fam = HeckeFamily::new(2)?;
    let sigma = BraidWord::parse(2, "1")?;
    out.push(Claim::new(
        "hecke.character.sigma",
        "sigma_1 on two strands acts by -1 and by s^2 on the two standard modules",
        json!({ "n": 2, "braid": "1" }),
        vec!["-1", "1*s^2"],
        fam.characters(&sigma)?.iter().map(ToString::to_string).collect::<Vec<_>>(),
    ));
    Ok(out)
}

/// Fixed values. The closure of `σ_1³` comes out as the right-handed
/// trefoil `−t⁴ + t³ + t`; its mirror has `t ↦ t⁻¹`.
pub const JONES_EXAMPLES: [(&str, usize, &str, &str); 6] = [
    ("unknot", 2, "1", "1"),
    ("unknot", 3, "1,2", "1"),
    ("unlink", 2, "", "-t^(1/2) - t^(-1/2)"),
    ("hopf", 2, "1,1", "-t^(5/2) - t^(1/2)"),
    ("trefoil", 2, "1,1,1", "-t^4 + t^3 + t"),
    ("figure_eight", 3, "1,-2,1,-2", "t^2 - t + 1 - t^-1 + t^-2"),
];

pub fn jones_example_claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for (name, n, w, expected) in JONES_EXAMPLES {
        let word = BraidWord::parse(n, w)?;
        let computed = HeckeFamily::new(n)?.jones(&word)?;
        out.push(Claim::new(
            "jones.example",
            format!("the Jones polynomial of the {name} as a closed braid"),
            json!({ "name": name, "strands": n, "braid": w }),
            expected,
            computed.jones,
        ));
    }
    Ok(out)
}

/// Random words on `n` strands: divisibility by `1 + t` and, for even `n`,
/// vanishing of the alternating character sum at `t = −1`.
pub fn identity_campaign(n: usize, words: usize, max_len: usize, seed: u64) -> Result<Vec<Claim>> {
    let fam = HeckeFamily::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut divisible = 0;
    let mut vanishing = 0;
    let mut in_range = 0;
    let mut bad = Vec::new();
    for _ in 0..words {
        let w = BraidWord::random(n, max_len, &mut rng)?;
        let chars = fam.characters(&w)?;
        in_range += chars.iter().all(|c| character_in_range(c, &w)) as usize;
        let ok_div = super::jones::jones_from_characters(&w, chars.clone()).is_ok();
        divisible += ok_div as usize;
        let ok_alt = n % 2 == 1 || alternating_sum_at_i(&chars).is_zero();
        vanishing += ok_alt as usize;
        if !(ok_div && ok_alt) && bad.len() < 5 {
            bad.push(w.to_string());
        }
    }
    let params = json!({ "n": n, "words": words, "max_len": max_len, "seed": seed });
    let mut out = vec![
        Claim::new(
            "jones.divisible",
            "the weighted character sum is divisible by 1 + t",
            params.clone(),
            json!({ "divisible": words, "failures": Vec::<String>::new() }),
            json!({ "divisible": divisible, "failures": bad.clone() }),
        ),
        Claim::new(
            "hecke.character.degree",
            "characters are polynomials in t with exponents between -#negative and #positive letters",
            params.clone(),
            words,
            in_range,
        ),
    ];
    if n % 2 == 0 {
        out.push(Claim::new(
            "jones.alternating_identity",
            "the alternating sum of characters vanishes at s = i",
            params,
            json!({ "zero": words, "failures": Vec::<String>::new() }),
            json!({ "zero": vanishing, "failures": bad }),
        ));
    } else {
        let sums: Vec<i64> = (0..=n / 2).map(|k| signed_row_sum(n, k)).collect();
        out.push(Claim::new(
            "jones.odd_termwise",
            "for an odd number of strands every signed row sum vanishes",
            json!({ "n": n }),
            vec![0i64; n / 2 + 1],
            sums,
        ));
    }
    Ok(out)
}

/// For even `n` the signed row sums are `(−1)^k`, so no termwise vanishing.
pub fn even_contrast_claim(n: usize) -> Claim {
    let sums: Vec<i64> = (0..=n / 2).map(|k| signed_row_sum(n, k)).collect();
    let expected: Vec<i64> = (0..=n / 2).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
    Claim::new(
        "jones.even_row_sums",
        "for an even number of strands the signed row sums are (-1)^k",
        json!({ "n": n }),
        expected,
        sums,
    )
}

/// Conjugation and stabilization leave the Jones polynomial unchanged.
pub fn markov_claims(nmax: usize, trials: usize, seed: u64) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=nmax {
        let fam = HeckeFamily::new(n)?;
        let up = HeckeFamily::new(n + 1)?;
        let mut conj = 0;
        let mut stab = 0;
        for t in 0..trials {
            let w = BraidWord::random(n, 6, &mut rng)?;
            let u = BraidWord::random(n, 3, &mut rng)?;
            let v = fam.jones(&w)?.value;
            conj += (fam.jones(&w.conjugate(&u)?)?.value == v) as usize;
            stab += (up.jones(&w.stabilize(t % 2 == 0))?.value == v) as usize;
        }
        let params = json!({ "n": n, "trials": trials, "seed": seed });
        out.push(Claim::new(
            "jones.markov.conjugation",
            "conjugating the braid does not change the Jones polynomial",
            params.clone(),
            trials,
            conj,
        ));
        out.push(Claim::new(
            "jones.markov.stabilization",
            "adding a strand with one extra crossing does not change the Jones polynomial",
            params,
            trials,
            stab,
        ));
    }
    Ok(out)
}
