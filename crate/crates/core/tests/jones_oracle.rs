use std::collections::BTreeMap;

use proptest::prelude::*;

use tlzero::hecke::{BraidWord, HeckeFamily};
use tlzero::linalg::{Laurent, Rational, Ring};

type Poly = BTreeMap<i32, i64>;

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, x) in p {
        for (b, y) in q {
            *out.entry(a + b).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// Kauffman bracket of the braid closure as a Laurent polynomial in `A`,
/// normalized so the unknot is 1. Each crossing is smoothed into the
/// identity or the cup-cap, and loops are counted by union-find on a grid.
fn bracket(n: usize, word: &[i32]) -> Poly {
    let c = word.len();
    let loop_value: Poly = [(2, -1), (-2, -1)].into();
    let mut total = Poly::new();
    for state in 0..1u32 << c {
        let node = |level: usize, p: usize| level * n + p;
        let mut parent: Vec<usize> = (0..(c + 1) * n).collect();
        let join = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (x, y) = (find(parent, a), find(parent, b));
            parent[x] = y;
        };
        let mut a_power = 0;
        for (j, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let cupcap = state >> j & 1 == 1;
            // sigma goes to A + A^-1 e, its inverse to A^-1 + A e
            a_power += if cupcap == (g > 0) { -1 } else { 1 };
            for p in 0..n {
                if !cupcap || (p != i && p != i + 1) {
                    join(node(j, p), node(j + 1, p), &mut parent);
                }
            }
            if cupcap {
                join(node(j, i), node(j, i + 1), &mut parent);
                join(node(j + 1, i), node(j + 1, i + 1), &mut parent);
            }
        }
        for p in 0..n {
            join(node(c, p), node(0, p), &mut parent);
        }
        let loops = (0..parent.len()).filter(|&v| find(&mut parent, v) == v).count();
        let mut term: Poly = [(a_power, 1)].into();
        for _ in 1..loops {
            term = mul(&term, &loop_value);
        }
        for (e, x) in term {
            *total.entry(e).or_insert(0) += x;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

/// `(−A³)^{−w} ⟨L⟩` rewritten in `s = √t = A^{−2}`.
fn jones_by_bracket(n: usize, word: &[i32]) -> Laurent {
    let w: i32 = word.iter().map(|g| g.signum()).sum();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut v = Laurent::zero();
    for (e, c) in bracket(n, word) {
        let a = e - 3 * w;
        assert_eq!(a % 2, 0, "odd power of A");
        v = v.add(&Laurent::monomial(Rational::integer(sign * c), -a / 2));
    }
    v
}

fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
    prop::collection::vec(letter, 0..=max_len).prop_map(move |w| BraidWord::new(n, w).unwrap())
}

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| word_on(n, 9))
}

fn braid_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=5).prop_flat_map(|n| (word_on(n, 7), word_on(n, 3)))
}

#[test]
fn bracket_fixes_the_named_links() {
    let hopf = BraidWord::parse(2, "1,1").unwrap();
    assert_eq!(HeckeFamily::new(2).unwrap().jones(&hopf).unwrap().value, jones_by_bracket(2, hopf.letters()));
    let fig8 = BraidWord::parse(3, "1,-2,1,-2").unwrap();
    assert_eq!(HeckeFamily::new(3).unwrap().jones(&fig8).unwrap().value, jones_by_bracket(3, fig8.letters()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hecke_traces_agree_with_state_sum(w in braid()) {
        let fam = HeckeFamily::new(w.strands()).unwrap();
        let ours = fam.jones(&w).unwrap();
        prop_assert_eq!(ours.value, jones_by_bracket(w.strands(), w.letters()), "braid {}", w);
    }

    #[test]
    fn markov_moves_preserve_the_polynomial((w, u) in braid_pair(), positive in any::<bool>()) {
        let n = w.strands();
        let v = HeckeFamily::new(n).unwrap().jones(&w).unwrap().value;
        let conj = HeckeFamily::new(n).unwrap().jones(&w.conjugate(&u).unwrap()).unwrap().value;
        prop_assert_eq!(&conj, &v);
        let stab = HeckeFamily::new(n + 1).unwrap().jones(&w.stabilize(positive)).unwrap().value;
        prop_assert_eq!(stab, v);
    }
}
