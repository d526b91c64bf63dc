//! Maximum unions of `k` antichains and Sperner certificates.
//!
//! The flow route uses the Greene-Kleitman duality: the largest union of `k`
//! antichains has size `min over chain partitions of sum min(|C|, k)`, which
//! equals `|P|` plus the minimum cost of a flow whose units are vertex-disjoint
//! chains, each costing `k - |C|`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::poset::{Closure, RankProfile, RankedPoset};

/// Default size cap for the brute-force oracle.
pub const ORACLE_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowResult {
    pub max_k_antichain: usize,
    /// Chains carried by the optimal flow, as element indices bottom-up.
    /// Elements outside these chains form singleton chains in the dual partition.
    pub chains: Vec<Vec<usize>>,
}

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    cost: Vec<i64>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    fn arc(&mut self, u: usize, v: usize, cost: i64) {
        // Arc e and its residual twin e ^ 1.
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(1);
        self.cost.push(cost);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
    }
}

/// Size of a largest union of `k` antichains, by min-cost flow.
pub fn max_k_antichain_flow(p: &RankedPoset, k: usize) -> Result<usize> {
    Ok(max_k_antichain_flow_with(p, &p.transitive_closure(), k)?.max_k_antichain)
}

/// Flow computation over a precomputed closure; also returns the dual chains.
pub fn max_k_antichain_flow_with(p: &RankedPoset, closure: &Closure, k: usize) -> Result<FlowResult> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let size = p.len();
    if k >= p.height() {
        return Ok(FlowResult {
            max_k_antichain: size,
            chains: Vec::new(),
        });
    }
    // Node layout: source 0, element x as in = 1 + 2x and out = 2 + 2x, sink last.
    let source = 0;
    let sink = 2 * size + 1;
    let node_in = |x: usize| 1 + 2 * x;
    let node_out = |x: usize| 2 + 2 * x;
    let mut net = Network::new(2 * size + 2);
    for x in 0..size {
        net.arc(source, node_in(x), k as i64);
        net.arc(node_in(x), node_out(x), -1);
        net.arc(node_out(x), sink, 0);
    }
    for (x, y) in closure.pairs() {
        net.arc(node_out(x), node_in(y), 0);
    }

    // The network is a DAG in node-index order once elements are rank-sorted,
    // so exact initial potentials come from one relaxation sweep.
    let nodes = net.head.len();
    let mut potential = vec![i64::MAX; nodes];
    potential[source] = 0;
    for u in 0..nodes {
        if potential[u] == i64::MAX {
            continue;
        }
        for &e in &net.head[u] {
            if net.cap[e] > 0 {
                let v = net.to[e];
                potential[v] = potential[v].min(potential[u] + net.cost[e]);
            }
        }
    }

    let mut total_cost: i64 = 0;
    let mut dist = vec![i64::MAX; nodes];
    let mut parent = vec![usize::MAX; nodes];
    loop {
        dist.fill(i64::MAX);
        parent.fill(usize::MAX);
        dist[source] = 0;
        // Ties on distance go to the lowest node index.
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &e in &net.head[u] {
                if net.cap[e] == 0 {
                    continue;
                }
                let v = net.to[e];
                let reduced = net.cost[e] + potential[u] - potential[v];
                debug_assert!(reduced >= 0, "negative reduced cost");
                let nd = d + reduced;
                if nd < dist[v] {
                    dist[v] = nd;
                    parent[v] = e;
                    heap.push(Reverse((nd, v)));
                }
            }
        }
        if dist[sink] == i64::MAX {
            break;
        }
        let path_cost = dist[sink] + potential[sink] - potential[source];
        if path_cost >= 0 {
            break;
        }
        for v in 0..nodes {
            if dist[v] != i64::MAX {
                potential[v] += dist[v];
            }
        }
        let mut v = sink;
        while v != source {
            let e = parent[v];
            net.cap[e] -= 1;
            net.cap[e ^ 1] += 1;
            v = net.to[e ^ 1];
        }
        total_cost += path_cost;
    }

    let chains = extract_chains(&net, size);
    let max_k_antichain = (size as i64 + total_cost) as usize;
    Ok(FlowResult {
        max_k_antichain,
        chains,
    })
}

fn extract_chains(net: &Network, size: usize) -> Vec<Vec<usize>> {
    let sink = 2 * size + 1;
    // An arc carries flow when its residual twin has capacity.
    let used = |e: usize| e.is_multiple_of(2) && net.cap[e ^ 1] > 0;
    let mut chains = Vec::new();
    for &e in &net.head[0] {
        if !used(e) {
            continue;
        }
        let mut chain = Vec::new();
        let mut node = net.to[e];
        loop {
            let x = (node - 1) / 2;
            chain.push(x);
            let out = 2 + 2 * x;
            let next = net.head[out]
                .iter()
                .copied()
                .find(|&f| used(f))
                .map(|f| net.to[f])
                .expect("flow is conserved");
            if next == sink {
                break;
            }
            node = next;
        }
        chains.push(chain);
    }
    chains
}

/// Maximum union of `k` antichains by exhaustive search; refuses posets
/// larger than `cap` (at most 64).
///
/// Returns the optimum together with a witness subset. A subset is a union of
/// `k` antichains exactly when it contains no chain of `k + 1` elements.
pub fn max_k_antichain_oracle(p: &RankedPoset, k: usize, cap: usize) -> Result<(usize, Vec<usize>)> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let size = p.len();
    if size > cap.min(64) {
        return Err(Error::Budget(format!(
            "oracle refuses {size} elements (cap {})",
            cap.min(64)
        )));
    }
    let closure = p.transitive_closure();
    // below[y]: elements strictly below y. Index order is a linear extension.
    let mut below = vec![0u64; size];
    for (x, y) in closure.pairs() {
        below[y] |= 1 << x;
    }
    let mut search = Search {
        below,
        k,
        chain_end: vec![0; size],
        best: 0,
        best_set: 0,
    };
    search.run(0, 0, 0);
    let witness = (0..size).filter(|&x| search.best_set >> x & 1 == 1).collect();
    Ok((search.best, witness))
}

struct Search {
    below: Vec<u64>,
    k: usize,
    /// Longest chain inside the chosen set ending at each chosen element.
    chain_end: Vec<usize>,
    best: usize,
    best_set: u64,
}

impl Search {
    fn run(&mut self, x: usize, chosen: u64, count: usize) {
        let size = self.below.len();
        if count > self.best {
            self.best = count;
            self.best_set = chosen;
        }
        if x == size || count + (size - x) <= self.best {
            return;
        }
        let mut preds = self.below[x] & chosen;
        let mut longest = 0;
        while preds != 0 {
            let y = preds.trailing_zeros() as usize;
            longest = longest.max(self.chain_end[y]);
            preds &= preds - 1;
        }
        if longest < self.k {
            self.chain_end[x] = longest + 1;
            self.run(x + 1, chosen | 1 << x, count + 1);
        }
        self.run(x + 1, chosen, count);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Flow,
    Oracle,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KRecord {
    pub k: usize,
    pub a_k: Option<usize>,
    pub rank_sum: usize,
    pub equal: Option<bool>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpernerCertificate {
    pub poset: String,
    pub n_elements: usize,
    pub profile: RankProfile,
    pub per_k: Vec<KRecord>,
    pub strongly_sperner: bool,
    pub peck: bool,
    /// `a_1 <= a_2 <= ...` with nonincreasing increments.
    pub concave: bool,
}

impl SpernerCertificate {
    pub fn sperner_k(&self, k: usize) -> Option<bool> {
        self.per_k.iter().find(|r| r.k == k).and_then(|r| r.equal)
    }

    pub fn maxima(&self) -> Vec<Option<usize>> {
        self.per_k.iter().map(|r| r.a_k).collect()
    }
}

/// Certifies `k`-Sperner for every `k = 1..=r` with the flow route.
pub fn certify(p: &RankedPoset) -> SpernerCertificate {
    certify_with(p, Method::Flow)
}

/// Like [`certify`], choosing the route. The oracle leaves every record
/// `Skipped` when the poset exceeds [`ORACLE_CAP`].
pub fn certify_with(p: &RankedPoset, method: Method) -> SpernerCertificate {
    let profile = p.rank_profile();
    let r = p.top_rank();
    let closure = if method == Method::Flow {
        Some(p.transitive_closure())
    } else {
        None
    };
    let per_k: Vec<KRecord> = (1..=r)
        .into_par_iter()
        .map(|k| {
            let rank_sum = profile.top_k_sum(k);
            let value = match (method, &closure) {
                (Method::Flow, Some(c)) => max_k_antichain_flow_with(p, c, k)
                    .ok()
                    .map(|f| f.max_k_antichain),
                (Method::Oracle, _) => max_k_antichain_oracle(p, k, ORACLE_CAP).ok().map(|o| o.0),
                _ => None,
            };
            KRecord {
                k,
                a_k: value,
                rank_sum,
                equal: value.map(|a| a == rank_sum),
                method: if value.is_some() { method } else { Method::Skipped },
            }
        })
        .collect();
    let strongly_sperner = per_k.iter().all(|rec| rec.equal == Some(true));
    let peck = strongly_sperner && profile.symmetric && profile.unimodal;
    let concave = is_concave(&per_k, p.len());
    SpernerCertificate {
        poset: p.name().to_string(),
        n_elements: p.len(),
        profile,
        per_k,
        strongly_sperner,
        peck,
        concave,
    }
}

fn is_concave(per_k: &[KRecord], total: usize) -> bool {
    let Some(values) = per_k.iter().map(|r| r.a_k).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let mut seq = vec![0];
    seq.extend(values);
    if let Some(&last) = seq.last() {
        if last < total {
            // Values continue up to |P| at k = height; include that endpoint.
            seq.push(total);
        }
    }
    let steps: Vec<i64> = seq.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    steps.iter().all(|&s| s >= 0) && steps.windows(2).all(|w| w[0] >= w[1])
}
