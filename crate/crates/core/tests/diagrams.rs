use proptest::prelude::*;

use tlzero::diagram::{enumerate_diagrams, enumerate_monic_basis, enumerate_tl_basis, Endpoint, PlanarDiagram};

/// Catalan numbers from `C_{k+1} = Σ C_i C_{k−i}`.
fn catalan_table(n: usize) -> Vec<usize> {
    let mut c = vec![1usize];
    for k in 0..n {
        c.push((0..=k).map(|i| c[i] * c[k - i]).sum());
    }
    c
}

/// Words over `( ) |` of length `n` that are balanced, never drop below
/// zero, and put bars only at depth zero, with exactly `l` bars.
fn monic_words(n: usize, l: usize) -> usize {
    let mut count = 0;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let (mut depth, mut bars, mut ok) = (0i32, 0, true);
        for _ in 0..n {
            match c % 3 {
                0 => depth += 1,
                1 => depth -= 1,
                _ => {
                    bars += 1;
                    ok &= depth == 0;
                }
            }
            ok &= depth >= 0;
            c /= 3;
        }
        if ok && depth == 0 && bars == l {
            count += 1;
        }
    }
    count
}

#[test]
fn basis_sizes_match_catalan() {
    let cat = catalan_table(10);
    for n in 1..=10 {
        let basis = enumerate_tl_basis(n);
        assert_eq!(basis.len(), cat[n], "n = {n}");
        let mut sorted = basis.clone();
        sorted.sort_by_key(ToString::to_string);
        sorted.dedup();
        assert_eq!(sorted.len(), basis.len());
    }
}

#[test]
fn monic_counts_match_word_filtering() {
    for n in 1..=10 {
        for l in (n % 2..=n).step_by(2) {
            let basis = enumerate_monic_basis(n, l).unwrap();
            assert_eq!(basis.len(), monic_words(n, l), "n = {n}, l = {l}");
            assert!(basis.iter().all(|d| d.is_monic() && d.num_throughlines() == l));
        }
    }
}

#[test]
fn text_roundtrip_and_canonical_order() {
    for (a, b) in [(3, 1), (4, 2), (5, 3), (4, 4), (6, 0)] {
        for d in enumerate_diagrams(a, b) {
            let text = d.to_string();
            assert_eq!(text.parse::<PlanarDiagram>().unwrap(), d);
            let mut pairs = d.pairs();
            pairs.reverse();
            let swapped: Vec<(Endpoint, Endpoint)> = pairs.iter().map(|&(p, q)| (q, p)).collect();
            assert_eq!(PlanarDiagram::from_pairs(a, b, &swapped).unwrap().to_string(), text);
        }
    }
}

fn diagram(n: usize) -> impl Strategy<Value = PlanarDiagram> {
    let basis = enumerate_tl_basis(n);
    (0..basis.len()).prop_map(move |i| basis[i].clone())
}

fn triple() -> impl Strategy<Value = (PlanarDiagram, PlanarDiagram, PlanarDiagram)> {
    (2usize..=6).prop_flat_map(|n| (diagram(n), diagram(n), diagram(n)))
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in triple()) {
        let ab = a.compose(&b).unwrap();
        let left = ab.diagram.compose(&c).unwrap();
        let bc = b.compose(&c).unwrap();
        let right = a.compose(&bc.diagram).unwrap();
        prop_assert_eq!(&left.diagram, &right.diagram);
        prop_assert_eq!(ab.loops + left.loops, bc.loops + right.loops);
    }

    #[test]
    fn reflection_reverses_products((a, b, _c) in triple()) {
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        let ab = a.compose(&b).unwrap();
        let ba = b.reflect().compose(&a.reflect()).unwrap();
        prop_assert_eq!(ab.diagram.reflect(), ba.diagram);
        prop_assert_eq!(ab.loops, ba.loops);
    }

    #[test]
    fn identity_is_neutral((a, _b, _c) in triple()) {
        let id = PlanarDiagram::identity(a.n_top());
        let c = id.compose(&a).unwrap();
        prop_assert_eq!(c.loops, 0);
        prop_assert_eq!(c.diagram, a.clone());
    }
}
