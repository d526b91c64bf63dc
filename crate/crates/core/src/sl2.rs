//! The raising operator `U`, lowering operator `D` and weight operator `H`
//! on the free module over `W_n`.
//!
//! `U` sends `w` to the sum of `i * (w s_i)` over ascents `i`. `D` sends `w`
//! to the sum over its strong down-covers `w t_ij` with the odd weight
//! `2 (w_i - w_j - a(w, w t_ij)) - 1`. `H` is diagonal with entry
//! `2 l(w) - n(n-1)/2`. Together they satisfy `[H, U] = 2U`,
//! `[H, D] = -2D` and `[U, D] = H`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::exactlinalg::IntMatrix;
use crate::permutations::Permutation;
use crate::poset::{RankProfile, WeakOrder};

/// `U` on `W_n`: entry `[w s_i, w] = i` for every ascent `i` of `w`.
pub fn build_u(order: &WeakOrder) -> IntMatrix {
    let triplets = order.perms().iter().enumerate().flat_map(|(col, w)| {
        w.weak_covers_up().into_iter().map(move |(i, v)| {
            (order.index_of(&v).unwrap(), col, BigInt::from(i))
        })
    });
    let size = order.len();
    IntMatrix::from_triplets(size, size, triplets).expect("indices come from the same order")
}

/// `D` on `W_n`: entry `[w t_ij, w] = c(w, w t_ij)` for every strong down-cover.
pub fn build_d(order: &WeakOrder) -> IntMatrix {
    let triplets = order.perms().iter().enumerate().flat_map(|(col, w)| {
        w.strong_covers_down().into_iter().map(move |((i, j), v)| {
            let c = weight_c(w, i, j).expect("strong cover");
            (order.index_of(&v).unwrap(), col, BigInt::from(c))
        })
    });
    let size = order.len();
    IntMatrix::from_triplets(size, size, triplets).expect("indices come from the same order")
}

/// `H` on `W_n`: diagonal with `2 l(w) - n(n-1)/2`.
pub fn build_h(order: &WeakOrder) -> IntMatrix {
    let r = order.top_rank() as i64;
    IntMatrix::diagonal(
        order
            .perms()
            .iter()
            .map(|w| BigInt::from(2 * w.length() as i64 - r))
            .collect(),
    )
}

/// Weight of the strong cover `w -> w t_ij`: `2 (w_i - w_j - a) - 1` where
/// `a = #{k < i : w_j < w_k < w_i}`.
pub fn weight_c(w: &Permutation, i: usize, j: usize) -> Result<u64> {
    if !w.is_strong_down_cover(i, j) {
        return input(format!("({i}, {j}) is not a strong down-cover of {w}"));
    }
    let a = w.crossing_count(i, j)?;
    Ok(2 * (w.at(i) - w.at(j) - a) as u64 - 1)
}

/// The same weight computed as the L1 distance between the Lehmer codes of
/// `w` and `w t_ij`, which differ only in positions `i` and `j`.
pub fn weight_c_lehmer(w: &Permutation, i: usize, j: usize) -> Result<u64> {
    if !w.is_strong_down_cover(i, j) {
        return input(format!("({i}, {j}) is not a strong down-cover of {w}"));
    }
    let v = w.apply_transposition(i, j)?;
    let (lw, lv) = (w.lehmer_code(), v.lehmer_code());
    Ok((lw[i - 1].abs_diff(lv[i - 1]) + lv[j - 1].abs_diff(lw[j - 1])) as u64)
}

/// `(U, D, H)` over a fixed weak-order basis.
pub struct Sl2Triple<'a> {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub h: IntMatrix,
    basis: &'a WeakOrder,
}

impl<'a> Sl2Triple<'a> {
    pub fn new(basis: &'a WeakOrder) -> Self {
        Sl2Triple {
            u: build_u(basis),
            d: build_d(basis),
            h: build_h(basis),
            basis,
        }
    }

    pub fn basis(&self) -> &'a WeakOrder {
        self.basis
    }

    pub fn top_rank(&self) -> usize {
        self.basis.top_rank()
    }

    /// Header tag for triplet exports.
    pub fn basis_tag(&self) -> String {
        format!("basis=weak_order({}) order=lex", self.basis.n())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResidual {
    pub relation: &'static str,
    /// Largest absolute entry of the residual matrix, in decimal.
    pub max_abs_residual: String,
    /// First nonzero residual entry as labels `(row, col)`, if any.
    pub first_offending: Option<(String, String)>,
}

impl RelationResidual {
    pub fn holds(&self) -> bool {
        self.first_offending.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Report {
    pub n: usize,
    pub dimension: usize,
    pub relations: Vec<RelationResidual>,
}

impl Sl2Report {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(RelationResidual::holds)
    }
}

/// Computes `[H,U] - 2U`, `[H,D] + 2D` and `[U,D] - H` exactly.
pub fn verify_sl2(t: &Sl2Triple<'_>) -> Result<Sl2Report> {
    let size = t.basis.len();
    for (name, m) in [("U", &t.u), ("D", &t.d), ("H", &t.h)] {
        if m.rows() != size || m.cols() != size {
            return Err(Error::Dimension(format!(
                "{name} is {}x{}, basis has {size} elements",
                m.rows(),
                m.cols()
            )));
        }
    }
    let two = BigInt::from(2);
    let residuals = [
        ("[H,U] = 2U", t.h.commutator(&t.u)?.combine(&t.u, &-&two)?),
        ("[H,D] = -2D", t.h.commutator(&t.d)?.combine(&t.d, &two)?),
        ("[U,D] = H", t.u.commutator(&t.d)?.sub(&t.h)?),
    ];
    let labels = t.basis.poset().labels();
    let relations = residuals
        .into_iter()
        .map(|(relation, m)| RelationResidual {
            relation,
            max_abs_residual: m
                .max_abs_entry()
                .map_or_else(BigInt::zero, |(v, _)| v)
                .to_string(),
            first_offending: m
                .first_nonzero()
                .map(|(r, c)| (labels[r].clone(), labels[c].clone())),
        })
        .collect();
    Ok(Sl2Report {
        n: t.basis.n(),
        dimension: size,
        relations,
    })
}

/// `U^(r-2k)` from rank `k` to rank `r-k` as a square `p_k x p_k` matrix.
///
/// Columns follow the basis order of rank `k`. Row `i` is the element
/// `w0 * x_i`, where `x_i` is the `i`-th basis element of rank `k` and
/// `w0` the longest element; left multiplication by `w0` is the
/// rank-reversing involution pairing rank `k` with rank `r-k`.
pub fn raising_power_block(t: &Sl2Triple<'_>, k: usize) -> Result<IntMatrix> {
    let r = t.top_rank();
    if 2 * k >= r {
        return input(format!("k = {k} needs 2k < r = {r}"));
    }
    let poset = t.basis.poset();
    let source: Vec<usize> = poset.rank_range(k).collect();
    let n = t.basis.n();
    let targets: Vec<usize> = source
        .iter()
        .map(|&x| {
            let w = t.basis.perm(x);
            let flipped: Vec<u8> = w.word().iter().map(|&v| (n + 1) as u8 - v).collect();
            t.basis.index_of(&Permutation::new(&flipped).unwrap()).unwrap()
        })
        .collect();
    let columns = source
        .iter()
        .map(|&x| {
            let mut v = vec![(x, BigInt::from(1))];
            for _ in 0..r - 2 * k {
                v = t.u.apply_sparse(&v);
            }
            v
        })
        .collect::<Vec<_>>();
    let size = poset.len();
    let full = IntMatrix::from_triplets(
        size,
        source.len(),
        columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(row, v)| (row, c, v))),
    )?;
    let all_cols: Vec<usize> = (0..source.len()).collect();
    Ok(full.select(&targets, &all_cols))
}

/// Multiplicities of the irreducible summands by highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepDecomposition {
    pub multiplicities: BTreeMap<usize, usize>,
}

impl IrrepDecomposition {
    /// `sum (m + 1) * mult(m)`.
    pub fn dimension(&self) -> usize {
        self.multiplicities.iter().map(|(m, c)| (m + 1) * c).sum()
    }
}

/// Decomposition forced by the weight spaces: highest weight `r - 2k`
/// occurs `p_k - p_(k-1)` times.
pub fn decompose(profile: &RankProfile) -> Result<IrrepDecomposition> {
    let sizes = &profile.sizes;
    let r = sizes.len() - 1;
    if !profile.symmetric {
        return input("rank sizes are not symmetric; not consistent with an sl2-representation with these weight spaces");
    }
    let mut multiplicities = BTreeMap::new();
    for k in 0..=r / 2 {
        let prev = if k == 0 { 0 } else { sizes[k - 1] };
        if sizes[k] < prev {
            return input(format!(
                "p_{k} = {} < p_{} = {prev}: not consistent with an sl2-representation with these weight spaces",
                sizes[k],
                k - 1
            ));
        }
        if sizes[k] > prev {
            multiplicities.insert(r - 2 * k, sizes[k] - prev);
        }
    }
    let out = IrrepDecomposition { multiplicities };
    debug_assert_eq!(out.dimension(), profile.total());
    if out.dimension() != profile.total() {
        return input("multiplicities do not account for every element");
    }
    Ok(out)
}
