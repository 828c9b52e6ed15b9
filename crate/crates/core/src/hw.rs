//! Finite checks of the highest-weight axioms for a category given by
//! explicit standard and projective modules.
//!
//! Weights are integers ordered opposite to their numeric order: `μ ≻ λ`
//! exactly when `μ < λ`.

use serde_json::{json, Value};

use crate::error::Result;
use crate::linalg::{hom_dim, hom_space, Field, Matrix, MatrixRep, Rational};
use crate::report::Claim;

/// `μ ≻ λ` in the opposite order.
pub fn succ(mu: usize, lambda: usize) -> bool {
    mu < lambda
}

fn with(base: &Value, extra: Value) -> Value {
    let mut m = base.as_object().cloned().unwrap_or_default();
    if let Value::Object(e) = extra {
        m.extend(e);
    }
    Value::Object(m)
}

/// Candidates drawn from a hom space: each basis vector, then their sum.
fn candidates<F: Field>(basis: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let mut out = basis.to_vec();
    if basis.len() > 1 {
        let mut sum = basis[0].clone();
        for b in &basis[1..] {
            sum = sum.add(b).expect("hom basis shares a shape");
        }
        out.push(sum);
    }
    out
}

/// An epimorphism `x → y`, if one is found among the candidates.
pub fn find_epimorphism<F: Field>(x: &MatrixRep<F>, y: &MatrixRep<F>) -> Result<Option<Matrix<F>>> {
    let homs = hom_space(x, y)?;
    Ok(candidates(&homs).into_iter().find(|t| t.rank() == y.dim()))
}

/// Search for a filtration of `k` whose subquotients are isomorphic to the
/// given standards, peeling off an injective image of one standard at a
/// time. Returns the weights from the bottom layer up.
pub fn standard_filtration(k: &MatrixRep<Rational>, standards: &[(usize, &MatrixRep<Rational>)]) -> Result<Option<Vec<usize>>> {
    if k.dim() == 0 {
        return Ok(Some(Vec::new()));
    }
    for &(mu, d) in standards {
        if d.dim() == 0 || d.dim() > k.dim() {
            continue;
        }
        for f in candidates(&hom_space(d, k)?) {
            if f.rank() != d.dim() {
                continue;
            }
            let quotient = k.quotient(&f.columns())?;
            if let Some(mut rest) = standard_filtration(&quotient.rep, standards)? {
                rest.insert(0, mu);
                return Ok(Some(rest));
            }
        }
    }
    Ok(None)
}

/// The three axioms over the weights present in `standards`, with
/// `projectives` giving the projective cover for each weight.
pub fn hw_axiom_claims(
    prefix: &str,
    base: &Value,
    standards: &[(usize, &MatrixRep<Rational>)],
    projectives: &[(usize, &MatrixRep<Rational>)],
) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    for &(l, dl) in standards {
        for &(m, dm) in standards {
            let d = hom_dim(dl, dm)?;
            if l == m {
                out.push(Claim::new(
                    format!("{prefix}.end_scalar"),
                    "the endomorphisms of a standard object are scalars",
                    with(base, json!({ "weight": l })),
                    1,
                    d,
                ));
            } else {
                out.push(Claim::new(
                    format!("{prefix}.hom_order"),
                    "a nonzero map between standards goes down the weight order",
                    with(base, json!({ "from": l, "to": m })),
                    true,
                    d == 0 || !succ(l, m),
                ));
            }
        }
    }
    for &(l, p) in projectives {
        let Some(&(_, dl)) = standards.iter().find(|(w, _)| *w == l) else { continue };
        let params = with(base, json!({ "weight": l }));
        let Some(pi) = find_epimorphism(p, dl)? else {
            out.push(Claim::new(format!("{prefix}.projective_epi"), "the projective cover maps onto the standard", params, true, false));
            continue;
        };
        out.push(Claim::new(format!("{prefix}.projective_epi"), "the projective cover maps onto the standard", params.clone(), true, true));
        let kernel = p.subrep(&pi.kernel_basis())?;
        let higher: Vec<(usize, &MatrixRep<Rational>)> = standards.iter().copied().filter(|&(mu, _)| succ(mu, l)).collect();
        let filtration = standard_filtration(&kernel, &higher)?;
        out.push(Claim::new(
            format!("{prefix}.kernel_filtration"),
            "the kernel of the projective cover onto the standard is filtered by standards of strictly higher weight",
            params,
            json!({ "filtered": true }),
            match filtration {
                Some(_) => json!({ "filtered": true }),
                None => json!({ "filtered": false, "kernel_dim": kernel.dim() }),
            },
        ));
    }
    Ok(out)
}

/// Determinant of the matrix of `dim hom(P_i, P_j)`.
pub fn cartan_determinant(projectives: &[&MatrixRep<Rational>]) -> Result<Rational> {
    let k = projectives.len();
    let mut c = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            c.set(i, j, Rational::integer(hom_dim(projectives[i], projectives[j])? as i64));
        }
    }
    c.determinant()
}
