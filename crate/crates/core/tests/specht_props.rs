use proptest::prelude::*;
use proptest::sample::subsequence;

use tlzero::diagram::PlanarDiagram;
use tlzero::specht::{g_map, resolve_to_noncrossing, MultilinearPoly, TwoRowTableau};

/// Value of a polynomial at a 0/1 point given as a bitmask.
fn eval(p: &MultilinearPoly, point: u64) -> bool {
    p.monomials().filter(|&m| m & point == m).count() % 2 == 1
}

/// `Π (z_u + z_v)` evaluated directly, pairs 1-indexed.
fn eval_product(pairs: &[(usize, usize)], point: u64) -> bool {
    pairs.iter().all(|&(u, v)| (point >> (u - 1) & 1) != (point >> (v - 1) & 1))
}

fn tableau() -> impl Strategy<Value = TwoRowTableau> {
    (2usize..=10)
        .prop_flat_map(|n| (Just(n), 1..=n / 2))
        .prop_flat_map(|(n, k)| (Just(k), Just((1..=n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(k, labels)| {
            let (top, bottom) = labels.split_at(labels.len() - k);
            TwoRowTableau::new(top.to_vec(), bottom.to_vec()).unwrap()
        })
}

fn is_noncrossing(x: &PlanarDiagram) -> bool {
    let cups = x.cups();
    let through: Vec<usize> = (1..=x.n_top()).filter(|i| !cups.iter().any(|&(a, b)| a == *i || b == *i)).collect();
    cups.iter().all(|&(a, b)| {
        through.iter().all(|&p| p < a || p > b)
            && cups.iter().all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tableau_polynomial_matches_direct_evaluation(t in tableau()) {
        let p = t.polynomial();
        prop_assert!(p.is_homogeneous(t.k()));
        prop_assert_eq!(p.len(), 1 << t.k());
        for point in 0..1u64 << t.n() {
            prop_assert_eq!(eval(&p, point), eval_product(&t.columns(), point));
        }
    }

    #[test]
    fn resolution_is_planar_and_sums_back(t in tableau()) {
        let r = resolve_to_noncrossing(&t).unwrap();
        let mut sum = MultilinearPoly::zero(t.n());
        for x in &r.terms {
            prop_assert!(x.is_monic());
            prop_assert_eq!(x.num_throughlines(), t.n() - 2 * t.k());
            prop_assert!(is_noncrossing(x), "{} crosses", x);
            sum.add_assign(&g_map(x).unwrap());
        }
        prop_assert_eq!(sum, t.polynomial());
    }

    #[test]
    fn relabelling_commutes_with_the_polynomial(
        t in tableau(),
        seed in subsequence((1..=10).collect::<Vec<usize>>(), 0..=10),
    ) {
        // a permutation of 1..n that moves the chosen labels cyclically
        let n = t.n();
        let moved: Vec<usize> = seed.into_iter().filter(|&i| i <= n).collect();
        let mut perm: Vec<usize> = (1..=n).collect();
        for w in 0..moved.len() {
            perm[moved[w] - 1] = moved[(w + 1) % moved.len()];
        }
        let image = |row: &[usize]| row.iter().map(|&x| perm[x - 1]).collect::<Vec<_>>();
        let moved_t = TwoRowTableau::new(image(t.top()), image(t.bottom())).unwrap();
        prop_assert_eq!(moved_t.polynomial(), t.polynomial().permute(&perm));
    }

    #[test]
    fn psi_raises_degree_by_one(t in tableau()) {
        let p = t.polynomial();
        let q = p.psi();
        prop_assert!(q.is_homogeneous(t.k() + 1));
        let sum = MultilinearPoly::sum_of_vars(t.n());
        prop_assert_eq!(q, p.mul(&sum));
    }
}
