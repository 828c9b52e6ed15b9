//! Verification routines for the standard and projective modules at loop
//! value zero. Each returns a list of [`Claim`]s.

use std::collections::BTreeMap;

use serde_json::json;

use crate::diagram::{catalan, PlanarDiagram, enumerate_monic_basis, enumerate_tl_basis, standard_dim};
use crate::error::{Error, Result};
use crate::hw::{find_epimorphism, hw_axiom_claims};
use crate::linalg::rep::find_invertible;
use crate::linalg::{hom_dim, hom_space, Matrix, MatrixRep, Rational, Ring};
use crate::report::Claim;

use super::gram::irreducible_dim;
use super::maps::{alternating_cup_map, alternating_cup_terms, append_throughline_map, bend_rightmost, bent_quotient_projection};
use super::projective::{expected_projective_dim, ProjectiveModule};
use super::standard::{check_tl_relations, restrict_last, StandardModule};

/// Standard modules (and optionally projectives) for one `n`, built once.
pub struct TlFamily {
    pub n: usize,
    pub standards: BTreeMap<usize, StandardModule>,
    pub projectives: BTreeMap<usize, ProjectiveModule>,
}

impl TlFamily {
    pub fn standards(n: usize) -> Result<Self> {
        let mut standards = BTreeMap::new();
        for l in (n % 2..=n).step_by(2) {
            standards.insert(l, StandardModule::new(n, l)?);
        }
        Ok(TlFamily { n, standards, projectives: BTreeMap::new() })
    }

    pub fn with_projectives(n: usize) -> Result<Self> {
        let mut fam = Self::standards(n)?;
        for l in (2..=n).filter(|l| l % 2 == n % 2) {
            fam.projectives.insert(l, ProjectiveModule::new(n, l)?);
        }
        Ok(fam)
    }

    pub fn w(&self, l: usize) -> &MatrixRep<Rational> {
        &self.standards[&l].rep
    }

    pub fn p(&self, l: usize) -> &MatrixRep<Rational> {
        &self.projectives[&l].rep
    }

    /// Even weights `2, 4, …, n` indexing the projectives.
    pub fn weights(&self) -> Vec<usize> {
        self.projectives.keys().copied().collect()
    }
}

/// Catalan numbers by the convolution recurrence, independent of the
/// closed form.
pub fn catalan_recurrence(n: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for k in 1..=n {
        let v = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
        c.push(v);
    }
    c
}

/// Enumeration counts against the closed forms.
pub fn dimension_claims(nmax_standard: usize, nmax_tl: usize) -> Vec<Claim> {
    let mut out = Vec::new();
    let cat = catalan_recurrence(nmax_tl);
    for n in 1..=nmax_tl {
        out.push(Claim::new(
            "dims.tl_basis",
            "the diagram basis on n strands has Catalan(n) elements",
            json!({ "n": n }),
            cat[n] as u64,
            enumerate_tl_basis(n).len() as u64,
        ));
        debug_assert_eq!(cat[n], catalan(n));
    }
    for n in 1..=nmax_standard {
        for l in (n % 2..=n).step_by(2) {
            let k = (n - l) / 2;
            let below = if k == 0 { 0 } else { crate::diagram::binomial(n, k - 1) };
            let expected = (crate::diagram::binomial(n, k) - below) as u64;
            let computed = enumerate_monic_basis(n, l).map(|b| b.len() as u64).unwrap_or(0);
            out.push(Claim::new(
                "dims.standard",
                "monic diagrams number C(n,(n-l)/2) - C(n,(n-l)/2-1)",
                json!({ "n": n, "l": l }),
                expected,
                computed,
            ));
        }
    }
    out
}

fn commutes(phi: &Matrix<Rational>, src: &MatrixRep<Rational>, dst: &MatrixRep<Rational>) -> Result<bool> {
    src.is_intertwiner(dst, phi)
}

/// Exactness of `0 → W_n → W_{n−2} → … → W_0 → 0` under the alternating
/// cup maps, plus image dimensions and simplicity of the images.
pub fn verify_exact_sequence(n: usize) -> Result<Vec<Claim>> {
    let fam = TlFamily::standards(n)?;
    let mut out = Vec::new();
    let mut phis: BTreeMap<usize, Matrix<Rational>> = BTreeMap::new();
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for l in (0..=n - 2).step_by(2) {
        let phi = alternating_cup_map(n, l)?;
        let p = json!({ "n": n, "l": l });
        out.push(Claim::new(
            "exact.phi_commutes",
            "the alternating cup map commutes with every generator",
            p.clone(),
            true,
            commutes(&phi, fam.w(l + 2), fam.w(l))?,
        ));
        let rank = phi.rank();
        out.push(Claim::new(
            "exact.image_dim",
            "dim im phi_l equals the dimension of the odd standard module W^{n-1}_{l+1}",
            p.clone(),
            standard_dim(n - 1, l + 1) as u64,
            rank as u64,
        ));
        let image = phi.image_basis();
        let stable = fam.w(l).subrep(&image).is_ok();
        out.push(Claim::new(
            "exact.image_stable",
            "im phi_l is a submodule",
            p.clone(),
            true,
            stable,
        ));
        out.push(Claim::new(
            "exact.image_simple",
            "dim im phi_l equals the Gram rank of W_{l+2} (the simple head)",
            p.clone(),
            irreducible_dim(n, l + 2)? as u64,
            rank as u64,
        ));
        ranks.insert(l, rank);
        phis.insert(l, phi);
    }
    for l in (2..=n - 2).step_by(2) {
        let comp = phis[&(l - 2)].mul(&phis[&l])?;
        out.push(Claim::new(
            "exact.square_zero",
            "phi_{l-2} composed with phi_l vanishes",
            json!({ "n": n, "l": l }),
            true,
            comp.is_zero(),
        ));
        // ker phi_{l-2} has dim W_l - rank phi_{l-2}; it contains im phi_l
        out.push(Claim::new(
            "exact.kernel_is_image",
            "dim ker phi_{l-2} equals rank phi_l at W_l",
            json!({ "n": n, "l": l }),
            (standard_dim(n, l) - ranks[&(l - 2)]) as u64,
            ranks[&l] as u64,
        ));
    }
    out.push(Claim::new(
        "exact.injective_top",
        "phi_{n-2} is injective on W_n",
        json!({ "n": n }),
        standard_dim(n, n) as u64,
        ranks[&(n - 2)] as u64,
    ));
    out.push(Claim::new(
        "exact.surjective_bottom",
        "phi_0 is surjective onto W_0",
        json!({ "n": n }),
        standard_dim(n, 0) as u64,
        ranks[&0] as u64,
    ));
    let euler: i64 = (0..=n).step_by(2).map(|l| if (l / 2) % 2 == 0 { 1 } else { -1 } * standard_dim(n, l) as i64).sum();
    out.push(Claim::new(
        "exact.euler_characteristic",
        "alternating sum of dimensions along the sequence",
        json!({ "n": n }),
        0,
        euler,
    ));
    Ok(out)
}

/// The composite `W^{n−1}_{ℓ+1} → W^n_{ℓ+2} → W^n_ℓ → W^n_ℓ / im g` is a
/// bijection given by bending the rightmost throughline, up to the sign
/// `(−1)^{ℓ/2}`.
pub fn verify_bent_composite(n: usize) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for l in (0..=n - 2).step_by(2) {
        let g = append_throughline_map(n, l)?;
        let phi = alternating_cup_map(n, l)?;
        let proj = bent_quotient_projection(n, l)?;
        let comp = proj.mul(&phi)?.mul(&g)?;
        let p = json!({ "n": n, "l": l });
        out.push(Claim::new(
            "exact.bent_composite_bijective",
            "quotient, phi and the throughline embedding compose to a bijection",
            p.clone(),
            json!({ "square": true, "rank": comp.cols() }),
            json!({ "square": comp.is_square(), "rank": comp.rank() }),
        ));
        let src = enumerate_monic_basis(n - 1, l + 1)?;
        let dst = enumerate_monic_basis(n, l)?;
        let kept: Vec<usize> = (0..dst.len()).filter(|&i| dst[i].cups().iter().any(|&(_, j)| j == n)).collect();
        let sign = if (l / 2) % 2 == 0 { Rational::one() } else { Rational::integer(-1) };
        let mut formula = Matrix::zeros(kept.len(), src.len());
        for (c, x) in src.iter().enumerate() {
            let y = bend_rightmost(x)?;
            if let Some(r) = kept.iter().position(|&i| dst[i] == y) {
                formula.set(r, c, sign.clone());
            }
        }
        out.push(Claim::new(
            "exact.bent_composite_formula",
            "the composite is (-1)^{l/2} times bending the rightmost throughline",
            p,
            true,
            formula == comp,
        ));
    }
    Ok(out)
}

/// Gram ranks against the two-step composition series, and full rank for
/// odd strand counts.
pub fn gram_claims(nmax_even: usize, nmax_odd: usize) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for n in (2..=nmax_even).step_by(2) {
        let mut ranks = BTreeMap::new();
        for l in (2..=n).step_by(2) {
            ranks.insert(l, irreducible_dim(n, l)?);
        }
        out.push(Claim::new(
            "gram.top_rank",
            "the Gram matrix of W_n has rank 1",
            json!({ "n": n }),
            1,
            ranks[&n],
        ));
        for l in (2..=n).step_by(2) {
            let next = ranks.get(&(l + 2)).copied().unwrap_or(0);
            out.push(Claim::new(
                "gram.length_two",
                "rank Gram(n,l) + rank Gram(n,l+2) = dim W_l",
                json!({ "n": n, "l": l }),
                standard_dim(n, l),
                ranks[&l] + next,
            ));
        }
    }
    for m in (1..=nmax_odd).step_by(2) {
        for l in (1..=m).step_by(2) {
            out.push(Claim::new(
                "gram.odd_full_rank",
                "every Gram matrix for an odd number of strands is nondegenerate",
                json!({ "n": m, "l": l }),
                standard_dim(m, l),
                irreducible_dim(m, l)?,
            ));
        }
    }
    Ok(out)
}

/// Hom dimensions from projectives to standards and between projectives.
pub fn hom_table_claims(fam: &TlFamily) -> Result<Vec<Claim>> {
    let n = fam.n;
    let mut out = Vec::new();
    for &l in &fam.weights() {
        for &m in &fam.weights() {
            let expected_w = usize::from(l == m || l == m + 2);
            out.push(Claim::new(
                "homs.projective_to_standard",
                "dim hom(P_l, W_m) is 1 iff l is m or m+2",
                json!({ "n": n, "l": l, "m": m }),
                expected_w,
                hom_dim(fam.p(l), fam.w(m))?,
            ));
            let expected_p = match l.abs_diff(m) {
                0 => 2,
                2 => 1,
                _ => 0,
            };
            out.push(Claim::new(
                "homs.projective_to_projective",
                "dim hom(P_l, P_m) is 2, 1, 0 as |l-m| is 0, 2, larger",
                json!({ "n": n, "l": l, "m": m }),
                expected_p,
                hom_dim(fam.p(l), fam.p(m))?,
            ));
        }
    }
    Ok(out)
}

/// The projective family: dimensions, relations and the diagrammatic count.
pub fn projective_claims(fam: &TlFamily) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for (&l, p) in &fam.projectives {
        let params = json!({ "n": fam.n, "l": l });
        out.push(Claim::new(
            "projective.dim",
            "dim P_l = dim W_{l-2} + dim W_l",
            params.clone(),
            expected_projective_dim(fam.n, l),
            p.dim(),
        ));
        out.push(Claim::new(
            "projective.relations",
            "the induced generators satisfy the defining relations at loop value zero",
            params,
            true,
            check_tl_relations(p.rep.generators(), &Rational::zero()).is_ok(),
        ));
    }
    Ok(out)
}

/// Restriction to the smaller algebra splits as a sum of two odd standard
/// modules, witnessed by an invertible intertwiner.
pub fn verify_restriction(n: usize, l: usize) -> Result<Vec<Claim>> {
    if n % 2 == 1 {
        return Err(Error::Parity { n, through: l });
    }
    let w = StandardModule::new(n, l)?;
    let res = restrict_last(&w.rep);
    let gens = res.num_generators();
    let mut sum = MatrixRep::zero(gens);
    for j in [l.wrapping_sub(1), l + 1] {
        if j <= n - 1 {
            sum = sum.direct_sum(&restrict_odd(n - 1, j)?)?;
        }
    }
    let homs = hom_space(&sum, &res)?;
    let witness = find_invertible(&homs);
    let det = witness.as_ref().map(|t| t.determinant()).transpose()?;
    Ok(vec![Claim::new(
        "restriction.splits",
        "W^n_l restricted to the smaller algebra is W^{n-1}_{l-1} + W^{n-1}_{l+1}",
        json!({ "n": n, "l": l }),
        json!({ "dim": sum.dim(), "invertible_intertwiner": true }),
        json!({ "dim": res.dim(), "invertible_intertwiner": det.is_some_and(|d| !d.is_zero()) }),
    )])
}

fn restrict_odd(m: usize, j: usize) -> Result<MatrixRep<Rational>> {
    Ok(StandardModule::new(m, j)?.rep)
}

/// The highest-weight axioms for the standard modules over the weights
/// `{2, …, n}` (larger weights lower), plus the short exact sequence
/// `0 → W_{ℓ−2} → P_ℓ → W_ℓ → 0` including `ℓ = 2`.
pub fn verify_hw_axioms_tl(fam: &TlFamily) -> Result<Vec<Claim>> {
    let n = fam.n;
    let weights = fam.weights();
    let standards: Vec<(usize, &MatrixRep<Rational>)> = weights.iter().map(|&l| (l, fam.w(l))).collect();
    let projectives: Vec<(usize, &MatrixRep<Rational>)> = weights.iter().map(|&l| (l, fam.p(l))).collect();
    let mut out = hw_axiom_claims("hw.tl", &json!({ "n": n }), &standards, &projectives)?;
    for &l in &weights {
        let (p, w, below) = (fam.p(l), fam.w(l), fam.w(l - 2));
        let params = json!({ "n": n, "l": l });
        let computed = match find_epimorphism(p, w)? {
            None => json!({ "surjection": false }),
            Some(pi) => {
                let kernel = p.subrep(&pi.kernel_basis())?;
                let iso = find_invertible(&hom_space(below, &kernel)?).is_some();
                json!({ "surjection": true, "kernel_dim": kernel.dim(), "kernel_is_standard": iso })
            }
        };
        out.push(Claim::new(
            "hw.tl.projective_sequence",
            "0 -> W_{l-2} -> P_l -> W_l -> 0 is exact",
            params,
            json!({ "surjection": true, "kernel_dim": below.dim(), "kernel_is_standard": true }),
            computed,
        ));
    }
    Ok(out)
}

/// Product of generators `e_{i_1} e_{i_2} …` on `n` strands, with the
/// number of loops closed along the way.
pub fn generator_product(n: usize, word: &[usize]) -> Result<(PlanarDiagram, usize)> {
    let mut acc = PlanarDiagram::identity(n);
    let mut loops = 0;
    for &i in word {
        let c = acc.compose(&PlanarDiagram::generator(n, i)?)?;
        loops += c.loops;
        acc = c.diagram;
    }
    Ok((acc, loops))
}

/// The small worked examples: a five-strand product, the action on one
/// six-point monic diagram, and the alternating cup map on a ten-point one.
pub fn worked_example_claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let (prod, loops) = generator_product(5, &[1, 3, 2, 1, 3])?;
    let (target, _) = generator_product(5, &[1, 3])?;
    out.push(Claim::new(
        "example.product",
        "e1 e3 e2 e1 e3 equals e1 e3 with one closed loop",
        json!({ "n": 5, "word": [1, 3, 2, 1, 3] }),
        json!({ "diagram": target.to_string(), "loops": 1 }),
        json!({ "diagram": prod.to_string(), "loops": loops }),
    ));

    let w = StandardModule::new(6, 2)?;
    let x: PlanarDiagram = "6:2:[t1-b1,t2-b2,t3-t4,t5-t6]".parse()?;
    let show = |r: Option<PlanarDiagram>| r.map_or("0".to_string(), |d| d.to_string());
    out.push(Claim::new(
        "example.six_point_action",
        "on the six-point diagram with cups (3,4),(5,6): e4 x is monic with cups (3,6),(4,5), e3 x and e1 x vanish",
        json!({ "x": x.to_string() }),
        json!({ "e1": "0", "e3": "0", "e4": "6:2:[t1-b1,t2-b2,t3-t6,t4-t5]" }),
        json!({ "e1": show(w.act(1, &x)?), "e3": show(w.act(3, &x)?), "e4": show(w.act(4, &x)?) }),
    ));

    let x: PlanarDiagram = "10:6:[t1-b1,t2-t3,t4-t5,t6-b2,t7-b3,t8-b4,t9-b5,t10-b6]".parse()?;
    let terms: Vec<(i64, String)> = alternating_cup_terms(&x)?.into_iter().map(|(s, d)| (s, d.to_string())).collect();
    out.push(Claim::new(
        "example.alternating_cup_ten",
        "the alternating cup map on the ten-point diagram has three terms with signs +, -, +",
        json!({ "x": x.to_string() }),
        vec![
            (1, "10:4:[t1-t6,t2-t3,t4-t5,t7-b1,t8-b2,t9-b3,t10-b4]"),
            (-1, "10:4:[t1-b1,t2-t3,t4-t5,t6-b2,t7-t8,t9-b3,t10-b4]"),
            (1, "10:4:[t1-b1,t2-t3,t4-t5,t6-b2,t7-b3,t8-b4,t9-t10]"),
        ],
        terms,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        for c in worked_example_claims().unwrap() {
            assert!(c.pass, "{} {} {}", c.claim_id, c.expected, c.computed);
        }
    }

    #[test]
    fn catalan_oracle() {
        let c = catalan_recurrence(10);
        assert_eq!(&c[..6], &[1, 1, 2, 5, 14, 42]);
        assert_eq!(c[10], 16796);
    }

    #[test]
    fn exact_n4() {
        let claims = verify_exact_sequence(4).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:#?}");
        let claims = verify_bent_composite(6).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:#?}");
    }

    #[test]
    fn restriction_small() {
        for (n, l) in [(2, 0), (2, 2), (4, 0), (4, 2), (4, 4)] {
            let c = verify_restriction(n, l).unwrap();
            assert!(c[0].pass, "{c:#?}");
        }
    }

    #[test]
    fn hw_n4() {
        let fam = TlFamily::with_projectives(4).unwrap();
        let claims = verify_hw_axioms_tl(&fam).unwrap();
        let failing: Vec<_> = claims.iter().filter(|c| !c.pass).map(|c| (&c.claim_id, &c.parameters)).collect();
        assert_eq!(failing.len(), 1, "{failing:?}");
        assert_eq!(failing[0].0, "hw.tl.kernel_filtration");
        assert_eq!(failing[0].1, &json!({ "n": 4, "weight": 2 }));
    }
}
