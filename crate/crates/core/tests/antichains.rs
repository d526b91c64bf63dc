use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weak_sperner::sperner::{
    certify, max_k_antichain_flow, max_k_antichain_flow_with, max_k_antichain_oracle, ORACLE_CAP,
};
use weak_sperner::{build_weak_order, RankedPoset};

mod common;

#[test]
fn flow_matches_oracle_on_the_corpus() {
    for p in common::fixed_corpus() {
        assert!(p.len() <= ORACLE_CAP, "{}", p.name());
        for k in 1..=p.height() + 1 {
            let flow = max_k_antichain_flow(&p, k).unwrap();
            let (oracle, witness) = max_k_antichain_oracle(&p, k, ORACLE_CAP).unwrap();
            assert_eq!(flow, oracle, "{} k={k}", p.name());
            assert_eq!(witness.len(), oracle);
        }
    }
}

#[test]
fn flow_matches_oracle_on_random_graded_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let p = common::random_graded(&mut rng, 14);
        for k in 1..=p.height() {
            assert_eq!(
                max_k_antichain_flow(&p, k).unwrap(),
                max_k_antichain_oracle(&p, k, ORACLE_CAP).unwrap().0
            );
        }
    }
}

#[test]
fn oracle_witness_has_no_long_chain() {
    let order = build_weak_order(4).unwrap();
    let p = order.poset();
    let c = p.transitive_closure();
    for k in 1..=3 {
        let (_, witness) = max_k_antichain_oracle(p, k, ORACLE_CAP).unwrap();
        // Longest chain inside the witness, by dynamic programming in index order.
        let mut longest = vec![1usize; witness.len()];
        for a in 0..witness.len() {
            for b in 0..a {
                if c.less(witness[b], witness[a]) {
                    longest[a] = longest[a].max(longest[b] + 1);
                }
            }
        }
        assert!(longest.into_iter().max().unwrap() <= k);
    }
}

#[test]
fn w4_oracle_level() {
    let order = build_weak_order(4).unwrap();
    assert_eq!(max_k_antichain_oracle(order.poset(), 1, ORACLE_CAP).unwrap().0, 6);
}

#[test]
fn weak_orders_are_strongly_sperner_through_n6() {
    for n in 1..=6 {
        let order = build_weak_order(n).unwrap();
        let cert = certify(order.poset());
        for rec in &cert.per_k {
            assert_eq!(rec.a_k, Some(rec.rank_sum), "n={n} k={}", rec.k);
            assert!(rec.a_k.unwrap() >= rec.rank_sum);
        }
        assert!(cert.strongly_sperner && cert.peck && cert.concave, "n = {n}");
    }
}

#[test]
fn concavity_on_the_corpus() {
    for p in common::fixed_corpus() {
        let cert = certify(&p);
        assert!(cert.concave, "{}", p.name());
        for rec in &cert.per_k {
            assert!(rec.a_k.unwrap() >= rec.rank_sum, "{}", p.name());
        }
    }
}

#[test]
fn optimum_does_not_depend_on_element_order() {
    let order = build_weak_order(5).unwrap();
    let p = order.poset();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut elements: Vec<(String, usize)> = (0..p.len()).map(|x| (p.label(x).to_string(), p.rank(x))).collect();
    let mut perm: Vec<usize> = (0..p.len()).collect();
    perm.shuffle(&mut rng);
    // perm[new] = old; the constructor re-sorts by rank but keeps the shuffled
    // order inside each rank.
    let shuffled: Vec<(String, usize)> = perm.iter().map(|&old| elements[old].clone()).collect();
    let mut new_of_old = vec![0; p.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_of_old[old] = new;
    }
    let covers: Vec<(usize, usize)> = p.cover_pairs().map(|(x, y)| (new_of_old[x], new_of_old[y])).collect();
    let q = RankedPoset::new("shuffled", shuffled, &covers).unwrap();
    assert_ne!(q.labels(), p.labels());
    elements.clear();
    for k in 1..=p.top_rank() {
        assert_eq!(max_k_antichain_flow(p, k).unwrap(), max_k_antichain_flow(&q, k).unwrap());
    }
}

#[test]
fn dual_chains_certify_the_flow_value() {
    let order = build_weak_order(5).unwrap();
    let p = order.poset();
    let c = p.transitive_closure();
    for k in 1..=p.top_rank() {
        let f = max_k_antichain_flow_with(p, &c, k).unwrap();
        let covered: usize = f.chains.iter().map(Vec::len).sum();
        let bound: usize = f.chains.iter().map(|ch| ch.len().min(k)).sum::<usize>() + p.len() - covered;
        assert_eq!(bound, f.max_k_antichain);
        for ch in &f.chains {
            assert!(ch.windows(2).all(|e| c.less(e[0], e[1])));
        }
    }
}
