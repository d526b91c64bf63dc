use weak_sperner::coxeter::{
    build_weak_order_coxeter, conjecture_check, enumerate_group, match_type_a, reflection_representation,
    CoxeterSpec, GROUP_CAP,
};
use weak_sperner::build_weak_order;

fn spec(s: &str) -> CoxeterSpec {
    s.parse().unwrap()
}

const TYPES: [&str; 12] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4", "I2:7", "I2:10"];

#[test]
fn generators_satisfy_the_coxeter_relations() {
    for t in TYPES.iter().chain(["H4"].iter()) {
        let sp = spec(t);
        let g = reflection_representation(&sp).unwrap();
        for s in 0..g.len() {
            for u in 0..g.len() {
                let m = sp.matrix()[s][u];
                let prod = g[s].mul(&g[u]);
                assert!(prod.pow(m).is_identity(), "{t}: (s{s} s{u})^{m}");
                assert!((1..m).all(|e| !prod.pow(e).is_identity()), "{t}: order of s{s} s{u}");
            }
        }
    }
}

#[test]
fn group_orders_and_longest_lengths() {
    for t in TYPES {
        let sp = spec(t);
        let g = enumerate_group(&sp, GROUP_CAP).unwrap();
        assert_eq!(g.len() as u128, sp.order(), "{t}");
        assert_eq!(g.max_length(), sp.positive_roots(), "{t}");
    }
    assert_eq!(spec("A4").order(), 120);
    assert_eq!(spec("B3").order(), 48);
    assert_eq!(spec("D4").order(), 192);
    assert_eq!(spec("H3").order(), 120);
    assert_eq!(spec("F4").order(), 1152);
    assert_eq!(spec("H4").order(), 14400);
}

#[test]
fn lengths_are_bfs_depths() {
    let g = enumerate_group(&spec("B3"), GROUP_CAP).unwrap();
    for (x, e) in g.elements().iter().enumerate() {
        assert_eq!(e.word.len(), e.length);
        for s in 0..3 {
            let y = g.right_mul(x, s);
            assert_eq!(g.elements()[y].length.abs_diff(e.length), 1);
        }
    }
}

#[test]
fn type_a_matches_permutation_weak_order() {
    for n in 2..=5 {
        let sp = spec(&format!("A{}", n - 1));
        let group = enumerate_group(&sp, GROUP_CAP).unwrap();
        let poset = group.weak_order().unwrap();
        let weak = build_weak_order(n).unwrap();
        let map = match_type_a(&group, &poset, &weak).unwrap();
        assert_eq!(map.len(), weak.len());
        assert_eq!(poset.rank_profile(), weak.poset().rank_profile());
    }
}

#[test]
fn a2_and_i2_3_give_the_same_poset() {
    let a2 = build_weak_order_coxeter(&spec("A2"), GROUP_CAP).unwrap();
    let i3 = build_weak_order_coxeter(&spec("I2:3"), GROUP_CAP).unwrap();
    assert_eq!(a2.labels(), i3.labels());
    assert_eq!(a2.cover_pairs().collect::<Vec<_>>(), i3.cover_pairs().collect::<Vec<_>>());
}

#[test]
fn dihedral_profiles() {
    for m in 2..=12 {
        let p = build_weak_order_coxeter(&spec(&format!("I2:{m}")), GROUP_CAP).unwrap();
        let mut expected = vec![2; m + 1];
        expected[0] = 1;
        expected[m] = 1;
        assert_eq!(p.rank_profile().sizes, expected);
    }
}

#[test]
fn profiles_are_symmetric_and_unimodal() {
    for t in TYPES {
        let p = build_weak_order_coxeter(&spec(t), GROUP_CAP).unwrap();
        let prof = p.rank_profile();
        assert!(prof.symmetric && prof.unimodal, "{t}: {:?}", prof.sizes);
    }
}

#[test]
fn small_types_are_strongly_sperner() {
    for t in ["A3", "B3", "H3", "A4", "D4", "I2:9"] {
        let cert = conjecture_check(&spec(t), GROUP_CAP).unwrap();
        assert!(cert.strongly_sperner && cert.peck, "{t}");
    }
}

#[test]
fn explicit_matrix_input() {
    let b3 = CoxeterSpec::parse_matrix_text("3\n4 2\n3\n").unwrap();
    assert_eq!(b3.label(), "B3");
    let g = enumerate_group(&b3, GROUP_CAP).unwrap();
    assert_eq!(g.len(), 48);
}

#[test]
#[ignore = "H4 has 14400 elements; run with --ignored"]
fn h4_is_strongly_sperner() {
    let cert = conjecture_check(&spec("H4"), GROUP_CAP).unwrap();
    assert_eq!(cert.n_elements, 14400);
    assert!(cert.strongly_sperner && cert.peck);
}
