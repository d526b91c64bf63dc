//! Ranked posets and the weak order on `S_n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{input, Result};
use crate::permutations::{Permutation, MAX_N};

/// A finite ranked poset given by its up-cover lists.
///
/// Elements are indexed `0..len()`. Indices are grouped by rank, so rank `k`
/// occupies the contiguous range [`RankedPoset::rank_range`]`(k)`; within a
/// rank the order is the one supplied by the builder (lexicographic for the
/// weak order, lex-minimal reduced word for Coxeter groups).
#[derive(Clone, Debug)]
pub struct RankedPoset {
    name: String,
    labels: Vec<String>,
    ranks: Vec<usize>,
    rank_starts: Vec<usize>,
    up: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub sizes: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
}

impl RankProfile {
    pub fn from_sizes(sizes: Vec<usize>) -> Self {
        let r = sizes.len().saturating_sub(1);
        let symmetric = (0..sizes.len()).all(|i| sizes[i] == sizes[r - i]);
        let peak = sizes
            .iter()
            .enumerate()
            .max_by_key(|&(i, s)| (*s, std::cmp::Reverse(i)))
            .map_or(0, |(i, _)| i);
        let unimodal = sizes[..=peak.min(r)].windows(2).all(|w| w[0] <= w[1])
            && sizes[peak.min(r)..].windows(2).all(|w| w[0] >= w[1]);
        RankProfile {
            sizes,
            symmetric,
            unimodal,
        }
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Sum of the `k` largest rank sizes.
    pub fn top_k_sum(&self, k: usize) -> usize {
        let mut sorted = self.sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted.iter().take(k).sum()
    }
}

/// Strict order relation stored as one bit-row per element.
#[derive(Clone, Debug)]
pub struct Closure {
    rows: Vec<FixedBitSet>,
}

impl Closure {
    /// `x < y` in the poset.
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// All `y` with `x < y`, in increasing index order.
    pub fn above(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[x].ones()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows.len()).flat_map(move |x| self.above(x).map(move |y| (x, y)))
    }
}

impl RankedPoset {
    /// Builds a poset from labelled elements with ranks and up-cover pairs
    /// `(lower, upper)` given as indices into `elements`.
    ///
    /// Elements are stably sorted by rank, so the caller's order is kept
    /// within each rank.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<(String, usize)>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        if elements.is_empty() {
            return input("a poset needs at least one element");
        }
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by_key(|&i| elements[i].1);
        let mut new_index = vec![0; elements.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let ranks: Vec<usize> = order.iter().map(|&i| elements[i].1).collect();
        let labels: Vec<String> = order.iter().map(|&i| elements[i].0.clone()).collect();
        let top = *ranks.last().unwrap();
        let mut rank_starts = vec![0; top + 2];
        for k in 0..=top {
            rank_starts[k + 1] = rank_starts[k] + ranks.iter().filter(|&&r| r == k).count();
            if rank_starts[k + 1] == rank_starts[k] {
                return input(format!("rank {k} is empty"));
            }
        }
        let mut up = vec![Vec::new(); labels.len()];
        for &(lo, hi) in covers {
            if lo >= elements.len() || hi >= elements.len() {
                return input(format!("cover ({lo}, {hi}) references a missing element"));
            }
            let (lo, hi) = (new_index[lo], new_index[hi]);
            if ranks[hi] != ranks[lo] + 1 {
                return input(format!(
                    "cover {} -> {} does not raise rank by one",
                    labels[lo], labels[hi]
                ));
            }
            up[lo].push(hi);
        }
        for list in &mut up {
            list.sort_unstable();
            list.dedup();
        }
        Ok(RankedPoset {
            name: name.into(),
            labels,
            ranks,
            rank_starts,
            up,
        })
    }

    /// A chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Result<Self> {
        let elements = (0..len).map(|i| (i.to_string(), i)).collect();
        let covers: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
        Self::new(format!("chain({len})"), elements, &covers)
    }

    /// `size` pairwise incomparable elements.
    pub fn antichain(size: usize) -> Result<Self> {
        let elements = (0..size).map(|i| (i.to_string(), 0)).collect();
        Self::new(format!("antichain({size})"), elements, &[])
    }

    /// Disjoint union; labels of the parts are prefixed with `a:` and `b:`.
    pub fn disjoint_union(a: &RankedPoset, b: &RankedPoset) -> Result<Self> {
        let mut elements: Vec<(String, usize)> = Vec::new();
        let mut covers = Vec::new();
        for (tag, p) in [("a", a), ("b", b)] {
            let offset = elements.len();
            elements.extend((0..p.len()).map(|i| (format!("{tag}:{}", p.labels[i]), p.ranks[i])));
            covers.extend(p.cover_pairs().map(|(x, y)| (x + offset, y + offset)));
        }
        Self::new(format!("{}+{}", a.name, b.name), elements, &covers)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    /// Top rank `r`.
    pub fn top_rank(&self) -> usize {
        self.rank_starts.len() - 2
    }

    pub fn rank_range(&self, k: usize) -> std::ops::Range<usize> {
        self.rank_starts[k]..self.rank_starts[k + 1]
    }

    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn rank_profile(&self) -> RankProfile {
        let sizes = (0..=self.top_rank()).map(|k| self.rank_range(k).len()).collect();
        RankProfile::from_sizes(sizes)
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let mut longest = vec![1usize; self.len()];
        for x in (0..self.len()).rev() {
            for &y in &self.up[x] {
                longest[x] = longest[x].max(longest[y] + 1);
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Strict order generated by the covers, accumulated from the top rank down.
    pub fn transitive_closure(&self) -> Closure {
        let n = self.len();
        let mut rows: Vec<FixedBitSet> = Vec::with_capacity(n);
        rows.resize_with(n, || FixedBitSet::with_capacity(n));
        // Indices are rank-sorted, so every cover target has a larger index.
        for x in (0..n).rev() {
            let mut row = FixedBitSet::with_capacity(n);
            for &y in &self.up[x] {
                row.insert(y);
                row.union_with(&rows[y]);
            }
            rows[x] = row;
        }
        Closure { rows }
    }

    /// DOT rendering of the Hasse diagram, optionally with integer labels on
    /// cover edges `(lower, upper)`.
    pub fn export_dot(&self, edge_labels: Option<&BTreeMap<(usize, usize), i64>>) -> Result<String> {
        if let Some(labels) = edge_labels {
            for &(x, y) in labels.keys() {
                if x >= self.len() || !self.up[x].contains(&y) {
                    return input(format!("edge label on ({x}, {y}), which is not a cover"));
                }
            }
        }
        let edges = self.cover_pairs().map(|(x, y)| {
            let label = edge_labels.and_then(|m| m.get(&(x, y)).copied());
            (x, y, label)
        });
        Ok(self.render_dot(edges))
    }

    /// DOT rendering of an arbitrary labelled edge list over this poset's
    /// elements (used for operators that are not supported on covers).
    pub fn export_dot_edges(&self, edges: &[(usize, usize, i64)]) -> Result<String> {
        if let Some(&(x, y, _)) = edges.iter().find(|e| e.0 >= self.len() || e.1 >= self.len()) {
            return input(format!("edge ({x}, {y}) references a missing element"));
        }
        Ok(self.render_dot(edges.iter().map(|&(x, y, l)| (x, y, Some(l)))))
    }

    fn render_dot(&self, edges: impl Iterator<Item = (usize, usize, Option<i64>)>) -> String {
        let mut out = String::new();
        let graph_name = self.name.replace('"', "'");
        let _ = writeln!(out, "digraph \"{graph_name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=plaintext];");
        for k in 0..=self.top_rank() {
            let names: Vec<String> = self
                .rank_range(k)
                .map(|x| format!("\"{}\"", self.labels[x]))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
        for (x, y, label) in edges {
            let _ = match label {
                Some(l) => writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [label=\"{l}\"];",
                    self.labels[x], self.labels[y]
                ),
                None => writeln!(out, "  \"{}\" -> \"{}\";", self.labels[x], self.labels[y]),
            };
        }
        out.push_str("}\n");
        out
    }
}

/// The weak order `W_n` together with the permutation behind every index.
#[derive(Clone, Debug)]
pub struct WeakOrder {
    n: usize,
    poset: RankedPoset,
    perms: Vec<Permutation>,
    by_lex_rank: Vec<usize>,
}

/// Builds `W_n`: all of `S_n`, ranked by length, lexicographic within ranks.
pub fn build_weak_order(n: usize) -> Result<WeakOrder> {
    if n == 0 || n > MAX_N {
        return input(format!("n = {n} outside 1..={MAX_N}"));
    }
    // `all` is lexicographic, so a stable sort by length gives the pinned order.
    let mut perms = Permutation::all(n)?;
    perms.sort_by_key(Permutation::length);
    let mut by_lex_rank = vec![0; perms.len()];
    for (idx, w) in perms.iter().enumerate() {
        by_lex_rank[w.lex_rank()] = idx;
    }
    let mut covers = Vec::with_capacity(perms.len() * (n - 1) / 2);
    for (idx, w) in perms.iter().enumerate() {
        for (_, v) in w.weak_covers_up() {
            covers.push((idx, by_lex_rank[v.lex_rank()]));
        }
    }
    let elements = perms.iter().map(|w| (w.to_string(), w.length())).collect();
    let poset = RankedPoset::new(format!("W_{n}"), elements, &covers)?;
    Ok(WeakOrder {
        n,
        poset,
        perms,
        by_lex_rank,
    })
}

impl WeakOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn perm(&self, idx: usize) -> &Permutation {
        &self.perms[idx]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        (w.n() == self.n).then(|| self.by_lex_rank[w.lex_rank()])
    }

    /// Number of elements `n!`.
    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// `n(n-1)/2`, the length of the longest element.
    pub fn top_rank(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Strong (Bruhat) order on the same ground set, as a ranked poset.
    pub fn strong_order(&self) -> Result<RankedPoset> {
        let mut covers = Vec::new();
        for (idx, w) in self.perms.iter().enumerate() {
            for (_, v) in w.strong_covers_up() {
                covers.push((idx, self.by_lex_rank[v.lex_rank()]));
            }
        }
        let elements = self.perms.iter().map(|w| (w.to_string(), w.length())).collect();
        RankedPoset::new(format!("Bruhat_{}", self.n), elements, &covers)
    }
}
