//! Oracles shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use weak_sperner::coxeter::{build_weak_order_coxeter, GROUP_CAP};
use weak_sperner::sl2::{build_d, build_u};
use weak_sperner::{build_weak_order, Permutation, RankedPoset};

/// Coefficients of `prod_{i=1}^{n-1} (1 + q + ... + q^i)`.
pub fn q_factorial(n: usize) -> Vec<usize> {
    let mut poly = vec![1usize];
    for i in 1..n {
        let mut next = vec![0; poly.len() + i];
        for (d, &c) in poly.iter().enumerate() {
            for e in 0..=i {
                next[d + e] += c;
            }
        }
        poly = next;
    }
    poly
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiamondCase {
    Disjoint,
    BEqualsI,
    BPlusOneEqualsI,
    BEqualsJ,
    BPlusOneEqualsJ,
}

pub fn classify(b: usize, i: usize, j: usize) -> DiamondCase {
    if b == i {
        DiamondCase::BEqualsI
    } else if b + 1 == i {
        DiamondCase::BPlusOneEqualsI
    } else if b == j {
        DiamondCase::BEqualsJ
    } else if b + 1 == j {
        DiamondCase::BPlusOneEqualsJ
    } else {
        DiamondCase::Disjoint
    }
}

/// For every up-then-down path `u -> v = u s_b -> w = v t_ij` with `w != u`,
/// checks there is exactly one down-then-up path `u -> x -> w`, that it uses
/// `s_b` again, and that both paths carry the same weight product. Returns
/// how many paths fell into each case.
pub fn diamond_census(n: usize) -> Result<BTreeMap<DiamondCase, usize>, String> {
    let order = build_weak_order(n).map_err(|e| e.to_string())?;
    let u_op = build_u(&order);
    let d_op = build_d(&order);
    let mut counts: BTreeMap<DiamondCase, usize> = BTreeMap::new();
    for (ui, u) in order.perms().iter().enumerate() {
        for (b, v) in u.weak_covers_up() {
            let vi = order.index_of(&v).unwrap();
            for ((i, j), w) in v.strong_covers_down() {
                if w == *u {
                    continue;
                }
                let wi = order.index_of(&w).unwrap();
                let case = classify(b, i, j);
                *counts.entry(case).or_default() += 1;
                let up_down = u_op.get(vi, ui) * d_op.get(wi, vi);
                if up_down != BigInt::from(b) * d_op.get(wi, vi) {
                    return Err(format!("U weight of {u} -> {v} is not {b}"));
                }
                let others: Vec<(usize, Permutation)> = u
                    .strong_covers_down()
                    .into_iter()
                    .map(|(_, x)| x)
                    .flat_map(|x| {
                        x.weak_covers_up()
                            .into_iter()
                            .filter(|(_, y)| *y == w)
                            .map(move |(c, _)| (c, x))
                    })
                    .collect();
                if others.len() != 1 {
                    return Err(format!("u={u} v={v} w={w} {case:?}: {} partner paths", others.len()));
                }
                let (c, x) = others[0];
                let xi = order.index_of(&x).unwrap();
                let down_up = d_op.get(xi, ui) * u_op.get(wi, xi);
                if c != b || up_down != down_up || d_op.get(wi, vi) != d_op.get(xi, ui) {
                    return Err(format!("u={u} v={v} x={x} w={w} {case:?}: {up_down} vs {down_up}"));
                }
            }
        }
    }
    Ok(counts)
}

/// Boolean lattice of subsets of an `m`-set.
pub fn boolean_lattice(m: usize) -> RankedPoset {
    let elements = (0..1usize << m)
        .map(|s| (format!("{s:0m$b}"), s.count_ones() as usize))
        .collect();
    let mut covers = Vec::new();
    for s in 0..1usize << m {
        for b in 0..m {
            if s & 1 << b == 0 {
                covers.push((s, s | 1 << b));
            }
        }
    }
    RankedPoset::new(format!("B{m}"), elements, &covers).unwrap()
}

/// Random graded poset: elements spread over layers, random covers between
/// consecutive layers.
pub fn random_graded(rng: &mut ChaCha8Rng, max_size: usize) -> RankedPoset {
    let size = rng.gen_range(1..=max_size);
    let layers = rng.gen_range(1..=size.min(6));
    let mut ranks: Vec<usize> = (0..layers).collect();
    ranks.extend((layers..size).map(|_| rng.gen_range(0..layers)));
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut covers = Vec::new();
    for x in 0..size {
        for y in 0..size {
            if ranks[y] == ranks[x] + 1 && rng.gen_bool(density) {
                covers.push((x, y));
            }
        }
    }
    let elements = ranks.iter().enumerate().map(|(i, &r)| (format!("v{i}"), r)).collect();
    RankedPoset::new("random", elements, &covers).unwrap()
}

/// Small posets with known structure, all within reach of the oracle.
pub fn fixed_corpus() -> Vec<RankedPoset> {
    let mut out = vec![
        build_weak_order(3).unwrap().poset().clone(),
        build_weak_order(4).unwrap().poset().clone(),
        RankedPoset::chain(1).unwrap(),
        RankedPoset::chain(5).unwrap(),
        RankedPoset::antichain(6).unwrap(),
        boolean_lattice(2),
        boolean_lattice(4),
        RankedPoset::disjoint_union(&RankedPoset::chain(4).unwrap(), &RankedPoset::antichain(3).unwrap())
            .unwrap(),
        RankedPoset::disjoint_union(build_weak_order(3).unwrap().poset(), &boolean_lattice(3)).unwrap(),
    ];
    for m in 2..=6 {
        let spec = format!("I2:{m}").parse().unwrap();
        out.push(build_weak_order_coxeter(&spec, GROUP_CAP).unwrap());
    }
    out.push(build_weak_order_coxeter(&"B2".parse().unwrap(), GROUP_CAP).unwrap());
    out
}
