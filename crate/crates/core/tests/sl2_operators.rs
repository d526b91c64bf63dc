use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weak_sperner::exactlinalg::{determinant_exact, nonsingular_certificate, Verdict};
use weak_sperner::sl2::{
    build_d, build_u, decompose, raising_power_block, verify_sl2, weight_c, weight_c_lehmer,
    Sl2Triple,
};
use weak_sperner::{build_weak_order, IntMatrix, Permutation};

/// Sum over saturated weak chains from `x` of length `steps` ending at
/// `target`, of the product of the `s_i` labels. Walks permutations
/// directly, without the operator matrices.
fn chain_weight_sum(x: &Permutation, target: &Permutation, steps: usize) -> BigInt {
    if steps == 0 {
        return if x == target { BigInt::from(1) } else { BigInt::zero() };
    }
    x.weak_covers_up()
        .into_iter()
        .map(|(i, v)| BigInt::from(i) * chain_weight_sum(&v, target, steps - 1))
        .sum()
}

fn flip(w: &Permutation) -> Permutation {
    let n = w.n() as u8;
    Permutation::new(&w.word().iter().map(|v| n + 1 - v).collect::<Vec<_>>()).unwrap()
}

#[test]
fn operator_supports_are_the_cover_relations() {
    for n in 1..=6 {
        let order = build_weak_order(n).unwrap();
        let u = build_u(&order);
        let d = build_d(&order);
        let mut weak_edges = 0;
        let mut strong_edges = 0;
        for (col, w) in order.perms().iter().enumerate() {
            let ups: Vec<usize> = w
                .weak_covers_up()
                .iter()
                .map(|(_, v)| order.index_of(v).unwrap())
                .collect();
            let mut support: Vec<usize> = u.column(col).iter().map(|e| e.0).collect();
            let mut expected = ups.clone();
            expected.sort_unstable();
            support.sort_unstable();
            assert_eq!(support, expected);
            weak_edges += ups.len();
            let downs: Vec<usize> = w
                .strong_covers_down()
                .iter()
                .map(|(_, v)| order.index_of(v).unwrap())
                .collect();
            let mut expected: Vec<usize> = downs.clone();
            expected.sort_unstable();
            let dsupport: Vec<usize> = d.column(col).iter().map(|e| e.0).collect();
            assert_eq!(dsupport, expected);
            for (row, v) in d.column(col) {
                assert_eq!(order.perm(*row).length() + 1, w.length());
                assert!(*v > BigInt::zero() && v % 2 == BigInt::from(1));
            }
            strong_edges += downs.len();
        }
        assert_eq!(u.nnz(), weak_edges);
        assert_eq!(d.nnz(), strong_edges);
    }
}

#[test]
fn weight_formulas_agree_through_n7() {
    let mut checked = 0;
    for n in 1..=7 {
        for w in Permutation::all(n).unwrap() {
            for ((i, j), _) in w.strong_covers_down() {
                assert_eq!(weight_c(&w, i, j).unwrap(), weight_c_lehmer(&w, i, j).unwrap());
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn relations_hold_through_n6() {
    for n in 1..=6 {
        let order = build_weak_order(n).unwrap();
        let report = verify_sl2(&Sl2Triple::new(&order)).unwrap();
        assert!(report.holds(), "n = {n}: {report:?}");
    }
}

#[test]
fn h_spectrum_is_symmetric_with_constant_parity() {
    let order = build_weak_order(5).unwrap();
    let t = Sl2Triple::new(&order);
    let diag: Vec<i64> = (0..order.len())
        .map(|x| i64::try_from(&t.h.get(x, x)).unwrap())
        .collect();
    let mut sorted = diag.clone();
    sorted.sort_unstable();
    let mut negated: Vec<i64> = sorted.iter().map(|v| -v).collect();
    negated.reverse();
    assert_eq!(sorted, negated);
    assert!(diag.iter().all(|v| v.rem_euclid(2) == diag[0].rem_euclid(2)));
    assert_eq!(t.h.nnz(), diag.iter().filter(|v| **v != 0).count());
    assert!(diag.contains(&0));
}

#[test]
fn two_steps_of_u_from_the_bottom_of_w3() {
    let order = build_weak_order(3).unwrap();
    let u = build_u(&order);
    let uu = u.multiply(&u).unwrap();
    let ix = |s: &str| order.index_of(&s.parse().unwrap()).unwrap();
    let bottom = ix("123");
    assert_eq!(uu.column(bottom).len(), 2);
    assert_eq!(uu.get(ix("231"), bottom), BigInt::from(2));
    assert_eq!(uu.get(ix("312"), bottom), BigInt::from(2));
}

#[test]
fn raising_blocks_match_chain_enumeration() {
    for n in 2..=5 {
        let order = build_weak_order(n).unwrap();
        let t = Sl2Triple::new(&order);
        let r = order.top_rank();
        for k in 0..r.div_ceil(2) {
            let block = raising_power_block(&t, k).unwrap();
            let source: Vec<usize> = order.poset().rank_range(k).collect();
            assert_eq!((block.rows(), block.cols()), (source.len(), source.len()));
            for (c, &x) in source.iter().enumerate() {
                for (row, &y) in source.iter().enumerate() {
                    let target = flip(order.perm(y));
                    let expected = chain_weight_sum(order.perm(x), &target, r - 2 * k);
                    assert_eq!(block.get(row, c), expected, "n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn pinned_w3_determinants() {
    // Independent values: two maximal chains 1*2*1 + 2*1*2 = 6, and the
    // diagonal block with entries 1 (132 -> 312) and 2 (213 -> 231).
    let bottom: Permutation = "123".parse().unwrap();
    let top: Permutation = "321".parse().unwrap();
    assert_eq!(chain_weight_sum(&bottom, &top, 3), BigInt::from(6));
    let order = build_weak_order(3).unwrap();
    let t = Sl2Triple::new(&order);
    assert_eq!(determinant_exact(&raising_power_block(&t, 0).unwrap()).unwrap(), BigInt::from(6));
    assert_eq!(determinant_exact(&raising_power_block(&t, 1).unwrap()).unwrap(), BigInt::from(2));
}

#[test]
fn raising_blocks_are_invertible() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 2..=5 {
        let order = build_weak_order(n).unwrap();
        let t = Sl2Triple::new(&order);
        for k in 0..order.top_rank().div_ceil(2) {
            let block = raising_power_block(&t, k).unwrap();
            assert!(!determinant_exact(&block).unwrap().is_zero(), "n={n} k={k}");
            let cert = nonsingular_certificate(&block, &mut rng).unwrap();
            assert_eq!(cert.verdict, Verdict::Nonsingular);
        }
    }
}

#[test]
fn decomposition_accounts_for_every_element() {
    for n in 1..=6 {
        let order = build_weak_order(n).unwrap();
        let profile = order.poset().rank_profile();
        let dec = decompose(&profile).unwrap();
        assert_eq!(dec.dimension(), order.len());
        let r = order.top_rank();
        for m in dec.multiplicities.keys() {
            assert_eq!(m % 2, r % 2);
        }
    }
}

#[test]
fn triplet_export_parses_back() {
    let order = build_weak_order(4).unwrap();
    let t = Sl2Triple::new(&order);
    let text = t.d.to_triplet_text(&t.basis_tag());
    assert!(text.starts_with("# 24 24 "));
    assert!(text.lines().next().unwrap().ends_with("basis=weak_order(4) order=lex"));
    let (back, basis) = IntMatrix::from_triplet_text(&text).unwrap();
    assert_eq!(back, t.d);
    assert_eq!(basis, "basis=weak_order(4) order=lex");
}
