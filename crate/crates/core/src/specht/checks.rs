use std::collections::{BTreeSet, HashMap};

use serde_json::json;

use crate::diagram::{enumerate_monic_basis, standard_dim, PlanarDiagram};
use crate::error::{Error, Result};
use crate::linalg::gf2::{rank, Gf2Span};
use crate::linalg::BitVec;
use crate::report::Claim;
use crate::tl::maps::alternating_cup_terms;

use super::poly::MultilinearPoly;
use super::resolve::{g_map, resolve_to_noncrossing, ChordDiagram};
use super::tableau::{column_matchings, TwoRowTableau};

/// `dim S^{(n−k,k)}` by the hook length formula.
pub fn hook_length_dim(n: usize, k: usize) -> u128 {
    let rows = [n - k, k];
    let mut hooks: u128 = 1;
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = rows[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n as u128).product::<u128>() / hooks
}

/// The span of all tableau polynomials of shape `(n−k, k)`.
pub fn tableau_span(n: usize, k: usize) -> Gf2Span {
    let mut span = Gf2Span::new(1 << n);
    for cols in column_matchings(n, k) {
        let p = MultilinearPoly::product_of_pairs(n, &cols).expect("labels are in range");
        span.insert(p.to_bitvec());
    }
    span
}

/// Images of the monic basis of `W^n_{n−2k}` under `G`.
pub fn g_images(n: usize, k: usize) -> Result<Vec<BitVec>> {
    enumerate_monic_basis(n, n - 2 * k)?.iter().map(|x| Ok(g_map(x)?.to_bitvec())).collect()
}

/// `G` is injective on the monic basis of every `W^n_{n−2k}` and its image
/// is the tableau span.
pub fn g_bijection_claims(n: usize) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let params = json!({ "n": n, "k": k });
        let images = g_images(n, k)?;
        let t = tableau_span(n, k);
        let g_span = Gf2Span::from_vectors(1 << n, &images);
        out.push(Claim::new(
            "specht.g_rank",
            "the images of the monic basis under G are independent",
            params.clone(),
            standard_dim(n, n - 2 * k),
            rank(1 << n, &images),
        ));
        out.push(Claim::new(
            "specht.g_onto",
            "G maps onto the span of all tableau polynomials",
            params.clone(),
            true,
            g_span.is_subspace_of(&t) && t.is_subspace_of(&g_span),
        ));
        out.push(Claim::new(
            "specht.dimension",
            "the tableau span has the hook length dimension",
            params,
            hook_length_dim(n, k) as u64,
            t.dim() as u64,
        ));
    }
    Ok(out)
}

/// Expand `Π (z_a + z_b)` in the full polynomial ring over GF(2), as a set
/// of exponent vectors.
fn unreduced_product(n: usize, pairs: &[(usize, usize)]) -> BTreeSet<Vec<u8>> {
    let mut acc: BTreeSet<Vec<u8>> = BTreeSet::from([vec![0u8; n]]);
    for &(a, b) in pairs {
        let mut next = BTreeSet::new();
        for m in &acc {
            for v in [a, b] {
                let mut e = m.clone();
                e[v - 1] += 1;
                if !next.remove(&e) {
                    next.insert(e);
                }
            }
        }
        acc = next;
    }
    acc
}

/// Reducing modulo the squares loses nothing on the tableau polynomials:
/// the span has the same rank before and after.
pub fn verify_squarefree_reduction(n: usize, k: usize) -> Claim {
    let polys: Vec<BTreeSet<Vec<u8>>> = column_matchings(n, k).iter().map(|c| unreduced_product(n, c)).collect();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    for p in &polys {
        for m in p {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let vecs: Vec<BitVec> = polys.iter().map(|p| BitVec::from_indices(index.len(), p.iter().map(|m| index[m]))).collect();
    Claim::new(
        "specht.squarefree_injective",
        "tableau polynomials span the same dimension with and without setting squares to zero",
        json!({ "n": n, "k": k }),
        rank(index.len(), &vecs),
        tableau_span(n, k).dim(),
    )
}

/// `G∘φ = ψ∘G` on the basis of `W^n_{n−2k+2}`, over GF(2).
pub fn verify_commuting_square(n: usize, k: usize) -> Result<Claim> {
    if n % 2 == 1 {
        return Err(Error::Parity { n, through: n.saturating_sub(2 * k) });
    }
    if k == 0 || 2 * k > n {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: n / 2 });
    }
    let l = n - 2 * k;
    let mut witness = None;
    for x in enumerate_monic_basis(n, l + 2)? {
        let mut lhs = MultilinearPoly::zero(n);
        for (_, y) in alternating_cup_terms(&x)? {
            lhs.add_assign(&g_map(&y)?);
        }
        if lhs != g_map(&x)?.psi() {
            witness = Some(x.to_string());
            break;
        }
    }
    Ok(Claim::new(
        "specht.commuting_square",
        "G after the alternating cup map equals multiplication by the variable sum after G",
        json!({ "n": n, "k": k }),
        json!({ "commutes": true }),
        match witness {
            None => json!({ "commutes": true }),
            Some(w) => json!({ "commutes": false, "witness": w }),
        },
    ))
}

/// Exactness of `0 → T^{(n)} → T^{(n−1,1)} → … → T^{(n/2,n/2)} → 0` under
/// multiplication by the variable sum.
pub fn verify_specht_exactness(n: usize) -> Result<Vec<Claim>> {
    if n % 2 == 1 {
        return Err(Error::Parity { n, through: n });
    }
    let mut out = Vec::new();
    let spans: Vec<Gf2Span> = (0..=n / 2).map(|k| tableau_span(n, k)).collect();
    let mut ranks = Vec::new();
    for (k, span) in spans.iter().enumerate() {
        let images: Vec<BitVec> = span.basis().iter().map(|v| MultilinearPoly::from_bitvec(n, v).psi().to_bitvec()).collect();
        if k + 1 < spans.len() {
            let contained = images.iter().all(|v| spans[k + 1].contains(v));
            out.push(Claim::new(
                "specht.psi_lands",
                "multiplication by the variable sum maps T^(n-k,k) into T^(n-k-1,k+1)",
                json!({ "n": n, "k": k }),
                true,
                contained,
            ));
        }
        ranks.push(rank(1 << n, &images));
    }
    for k in 0..spans.len() {
        out.push(verify_squarefree_reduction(n, k));
        let dim = spans[k].dim();
        let incoming = if k == 0 { 0 } else { ranks[k - 1] };
        out.push(Claim::new(
            "specht.exact",
            "kernel equals image at T^(n-k,k)",
            json!({ "n": n, "k": k }),
            json!({ "dim": dim, "kernel": dim - ranks[k] }),
            json!({ "dim": dim, "kernel": incoming }),
        ));
    }
    let euler: i64 = spans.iter().enumerate().map(|(k, s)| if k % 2 == 0 { s.dim() as i64 } else { -(s.dim() as i64) }).sum();
    out.push(Claim::new(
        "specht.euler_characteristic",
        "alternating sum of dimensions along the sequence",
        json!({ "n": n }),
        0,
        euler,
    ));
    Ok(out)
}

fn diagram_from_cups(n: usize, cups: &[(usize, usize)]) -> Result<PlanarDiagram> {
    ChordDiagram::new(n, cups)?.to_diagram()
}

/// Products of binomials from the eight-strand worked example, as listed
/// in the source (two of them still have a point under a chord).
pub const EIGHT_POINT_LISTED: [[(usize, usize); 3]; 8] = [
    [(1, 2), (4, 5), (6, 7)],
    [(1, 2), (4, 7), (5, 6)],
    [(1, 5), (2, 3), (6, 7)],
    [(1, 5), (3, 4), (6, 7)],
    [(1, 4), (2, 3), (5, 6)],
    [(2, 3), (4, 7), (5, 6)],
    [(1, 2), (3, 4), (5, 6)],
    [(2, 7), (3, 4), (5, 6)],
];

/// The worked examples: the tableau polynomial, the twelve-point `G`
/// image, and the eight-point resolution.
pub fn example_claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let t1 = TwoRowTableau::new(vec![1, 3, 2], vec![4])?;
    out.push(Claim::new(
        "specht.example.tableau",
        "the tableau [[1,3,2],[4]] gives z1 + z4",
        json!({ "tableau": t1 }),
        "z1 + z4",
        t1.polynomial().to_string(),
    ));
    let x = diagram_from_cups(12, &[(1, 4), (2, 3), (6, 11), (7, 8), (9, 10)])?;
    let expected = MultilinearPoly::product_of_pairs(12, &[(1, 4), (2, 3), (6, 11), (7, 8), (9, 10)])?;
    let gx = g_map(&x)?;
    out.push(Claim::new(
        "specht.example.g12",
        "G of the twelve-point diagram is (z1+z4)(z2+z3)(z6+z11)(z7+z8)(z9+z10)",
        json!({ "diagram": x.to_string() }),
        json!({ "polynomial": expected.to_string(), "terms": 32 }),
        json!({ "polynomial": gx.to_string(), "terms": gx.len() }),
    ));

    let t = TwoRowTableau::new(vec![1, 2, 5, 3, 8], vec![4, 6, 7])?;
    let res = resolve_to_noncrossing(&t)?;
    let computed: Vec<String> = res.terms.iter().map(|d| ChordDiagram::from_diagram(d).to_string()).collect();
    let mut sum = MultilinearPoly::zero(8);
    for d in &res.terms {
        sum.add_assign(&g_map(d)?);
    }
    let params = json!({ "tableau": t });
    out.push(Claim::new(
        "specht.example.resolution_sum",
        "the planar terms of (z1+z4)(z2+z6)(z5+z7) sum back to it under G",
        params.clone(),
        t.polynomial().to_string(),
        sum.to_string(),
    ));
    let listed: Vec<ChordDiagram> = EIGHT_POINT_LISTED.iter().map(|c| ChordDiagram::new(8, c)).collect::<Result<_>>()?;
    let mut listed_sum = MultilinearPoly::zero(8);
    for c in &listed {
        listed_sum.add_assign(&c.polynomial());
    }
    out.push(Claim::new(
        "specht.example.listed_sum",
        "the eight listed products sum to (z1+z4)(z2+z6)(z5+z7)",
        params.clone(),
        t.polynomial().to_string(),
        listed_sum.to_string(),
    ));
    let listed_planar: Vec<String> = listed.iter().filter(|c| c.crossings() == 0).map(ToString::to_string).collect();
    out.push(Claim::new(
        "specht.example.listed_planar_included",
        "every listed product without crossings is among the computed planar terms",
        params.clone(),
        true,
        listed_planar.iter().all(|c| computed.contains(c)),
    ));
    let mut listed_text: Vec<String> = listed.iter().map(ToString::to_string).collect();
    listed_text.sort();
    out.push(Claim::new(
        "specht.example.resolution_terms",
        "the planar expansion of (z1+z4)(z2+z6)(z5+z7) is the set of eight listed diagrams",
        params,
        json!({ "count": 8, "terms": listed_text }),
        json!({ "count": computed.len(), "terms": computed }),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_lengths() {
        for n in 1..=12 {
            for k in 0..=n / 2 {
                assert_eq!(hook_length_dim(n, k) as usize, standard_dim(n, n - 2 * k));
            }
        }
    }

    #[test]
    fn n4_sequence() {
        let dims: Vec<usize> = (0..=2).map(|k| tableau_span(4, k).dim()).collect();
        assert_eq!(dims, vec![1, 3, 2]);
        assert!(verify_specht_exactness(4).unwrap().iter().all(|c| c.pass));
        for k in 1..=2 {
            assert!(verify_commuting_square(4, k).unwrap().pass);
        }
    }

    #[test]
    fn eight_point_example() {
        let claims = example_claims().unwrap();
        let fails: Vec<&str> = claims.iter().filter(|c| !c.pass).map(|c| c.claim_id.as_str()).collect();
        assert_eq!(fails, vec!["specht.example.resolution_terms"]);
        let terms = &claims.iter().find(|c| c.claim_id == "specht.example.resolution_terms").unwrap().computed;
        assert_eq!(terms["count"], 10);
    }
}
