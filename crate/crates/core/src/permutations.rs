//! Permutations of `1..=n` in one-line notation.
//!
//! Positions are 1-based in every public method, matching the usual
//! notation `w = w_1 w_2 ... w_n`. Internally the word is stored in a fixed
//! array with position `i` at index `i - 1`; unused slots are zero.
//!
//! Both the simple transposition `s_i` and the transposition `t_ij` act on
//! the right, i.e. on positions: `w * t_ij` swaps the entries in positions
//! `i` and `j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// Largest supported `n`. `9! = 362880` permutations is the memory ceiling.
pub const MAX_N: usize = 9;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    word: [u8; MAX_N],
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn new(word: &[u8]) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > MAX_N {
            return input(format!("permutation size {n} outside 1..={MAX_N}"));
        }
        let mut seen = [false; MAX_N];
        for &v in word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return input(format!("{word:?} is not a permutation of 1..={n}"));
            }
            seen[v as usize - 1] = true;
        }
        let mut out = [0u8; MAX_N];
        out[..n].copy_from_slice(word);
        Ok(Permutation { n: n as u8, word: out })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let word: Vec<u8> = (1..=n as u8).collect();
        Self::new(&word)
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Result<Self> {
        let word: Vec<u8> = (1..=n as u8).rev().collect();
        Self::new(&word)
    }

    /// Inverse of [`Permutation::lehmer_code`].
    pub fn from_lehmer_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        if n == 0 || n > MAX_N {
            return input(format!("code length {n} outside 1..={MAX_N}"));
        }
        let mut remaining: Vec<u8> = (1..=n as u8).collect();
        let mut word = Vec::with_capacity(n);
        for (i, &l) in code.iter().enumerate() {
            if l > n - 1 - i {
                return input(format!("code entry L_{} = {l} exceeds {}", i + 1, n - 1 - i));
            }
            word.push(remaining.remove(l));
        }
        Self::new(&word)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        if n == 0 || n > MAX_N {
            return input(format!("n = {n} outside 1..={MAX_N}"));
        }
        let total: usize = (1..=n).product();
        let mut out = Vec::with_capacity(total);
        let mut cur = Self::identity(n)?;
        out.push(cur);
        while let Some(next) = cur.next_lex() {
            out.push(next);
            cur = next;
        }
        Ok(out)
    }

    fn next_lex(&self) -> Option<Self> {
        let n = self.n();
        let w = &self.word[..n];
        let i = (0..n.saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1])?;
        let j = (i + 1..n).rev().find(|&j| w[j] > w[i])?;
        let mut next = *self;
        next.word.swap(i, j);
        next.word[i + 1..n].reverse();
        Some(next)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// One-line notation.
    pub fn word(&self) -> &[u8] {
        &self.word[..self.n()]
    }

    /// Entry `w_i`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = self.word();
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `L_i = #{j > i : w_j < w_i}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = self.word();
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Position in the lexicographic listing of `S_n` (factorial number system).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let code = self.lehmer_code();
        let mut rank = 0;
        for (i, l) in code.iter().enumerate() {
            rank = rank * (n - i) + l;
        }
        rank
    }

    /// Number of descents `w_i > w_{i+1}`.
    pub fn descents(&self) -> usize {
        self.word().windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// `w * s_i`: swaps the entries at positions `i` and `i + 1`.
    pub fn apply_simple(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n() {
            return input(format!("simple reflection s_{i} outside 1..{}", self.n()));
        }
        Ok(self.swapped(i, i + 1))
    }

    /// `w * t_ij`: swaps the entries at positions `i < j`.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > self.n() {
            return input(format!("transposition ({i} {j}) needs 1 <= i < j <= {}", self.n()));
        }
        Ok(self.swapped(i, j))
    }

    fn swapped(&self, i: usize, j: usize) -> Self {
        let mut out = *self;
        out.word.swap(i - 1, j - 1);
        out
    }

    /// Up-covers in the weak order: one per ascent `i`, paired with `w * s_i`.
    pub fn weak_covers_up(&self) -> Vec<(usize, Permutation)> {
        (1..self.n())
            .filter(|&i| self.at(i) < self.at(i + 1))
            .map(|i| (i, self.swapped(i, i + 1)))
            .collect()
    }

    /// Down-covers in the weak order: one per descent `i`.
    pub fn weak_covers_down(&self) -> Vec<(usize, Permutation)> {
        (1..self.n())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .map(|i| (i, self.swapped(i, i + 1)))
            .collect()
    }

    /// True when `w * t_ij` is covered by `w` in the strong (Bruhat) order:
    /// `w_i > w_j` and no position strictly between carries a value in between.
    pub fn is_strong_down_cover(&self, i: usize, j: usize) -> bool {
        if i == 0 || i >= j || j > self.n() {
            return false;
        }
        let (hi, lo) = (self.at(i), self.at(j));
        hi > lo && (i + 1..j).all(|k| !(lo < self.at(k) && self.at(k) < hi))
    }

    /// Down-covers in the strong order, ordered by `(i, j)`.
    pub fn strong_covers_down(&self) -> Vec<((usize, usize), Permutation)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                if self.is_strong_down_cover(i, j) {
                    out.push(((i, j), self.swapped(i, j)));
                }
            }
        }
        out
    }

    /// Up-covers in the strong order, ordered by `(i, j)`.
    pub fn strong_covers_up(&self) -> Vec<((usize, usize), Permutation)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                let v = self.swapped(i, j);
                if v.is_strong_down_cover(i, j) {
                    out.push(((i, j), v));
                }
            }
        }
        out
    }

    /// `a(w, w t_ij) = #{k < i : w_j < w_k < w_i}` for a pair with `w_i > w_j`.
    pub fn crossing_count(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i >= j || j > self.n() {
            return input(format!("positions ({i}, {j}) need 1 <= i < j <= {}", self.n()));
        }
        let (hi, lo) = (self.at(i), self.at(j));
        if hi <= lo {
            return input(format!("w_{i} = {hi} is not above w_{j} = {lo}"));
        }
        Ok((1..i).filter(|&k| lo < self.at(k) && self.at(k) < hi).count())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // MAX_N = 9 keeps every entry a single digit.
        for v in self.word() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses compact one-line notation such as `"3142"`.
    fn from_str(s: &str) -> Result<Self> {
        let digits: Option<Vec<u8>> = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect();
        match digits {
            Some(d) => Self::new(&d),
            None => input(format!("'{s}' is not one-line notation")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("123").length(), 0);
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("312").length(), 2);
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(p("12345").lehmer_code(), vec![0; 5]);
        assert_eq!(p("4321").lehmer_code(), vec![3, 2, 1, 0]);
        assert_eq!(p("312").lehmer_code(), vec![2, 0, 0]);
    }

    #[test]
    fn right_action_is_on_positions() {
        assert_eq!(p("123").apply_simple(1).unwrap(), p("213"));
        assert_eq!(p("213").apply_simple(2).unwrap(), p("231"));
        assert_eq!(p("231").apply_transposition(1, 3).unwrap(), p("132"));
        assert_eq!(p("312").apply_transposition(1, 3).unwrap(), p("213"));
        let w = p("25314");
        assert_eq!(w.apply_simple(3).unwrap().apply_simple(3).unwrap(), w);
        assert_eq!(
            w.apply_transposition(2, 5).unwrap().apply_transposition(2, 5).unwrap(),
            w
        );
    }

    #[test]
    fn action_rejects_bad_positions() {
        let w = p("123");
        assert!(w.apply_simple(0).is_err());
        assert!(w.apply_simple(3).is_err());
        assert!(w.apply_transposition(2, 2).is_err());
        assert!(w.apply_transposition(3, 1).is_err());
        assert!(w.apply_transposition(1, 4).is_err());
    }

    #[test]
    fn weak_cover_examples() {
        assert_eq!(p("123").weak_covers_up(), vec![(1, p("213")), (2, p("132"))]);
        assert!(p("321").weak_covers_up().is_empty());
        assert_eq!(p("213").weak_covers_up(), vec![(2, p("231"))]);
    }

    #[test]
    fn strong_cover_examples() {
        assert_eq!(
            p("312").strong_covers_down(),
            vec![((1, 2), p("132")), ((1, 3), p("213"))]
        );
        assert!(p("123").strong_covers_down().is_empty());
        assert_eq!(
            p("231").strong_covers_down(),
            vec![((1, 3), p("132")), ((2, 3), p("213"))]
        );
    }

    #[test]
    fn crossing_count_examples() {
        assert_eq!(p("231").crossing_count(2, 3).unwrap(), 1);
        assert_eq!(p("312").crossing_count(1, 2).unwrap(), 0);
        assert_eq!(p("321").crossing_count(2, 3).unwrap(), 0);
        assert!(p("123").crossing_count(1, 2).is_err());
        assert!(p("321").crossing_count(2, 1).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(&[1, 1]).is_err());
        assert!(Permutation::new(&[0, 1]).is_err());
        assert!(Permutation::new(&[]).is_err());
        assert!(Permutation::identity(10).is_err());
        assert!(Permutation::from_lehmer_code(&[0, 2, 0]).is_err());
    }

    #[test]
    fn lex_listing_matches_lex_rank() {
        let all = Permutation::all(5).unwrap();
        assert_eq!(all.len(), 120);
        for (idx, w) in all.iter().enumerate() {
            assert_eq!(w.lex_rank(), idx);
        }
        assert!(all.windows(2).all(|p| p[0].word() < p[1].word()));
    }

    #[test]
    fn strong_cover_criterion_matches_length_drop() {
        for n in 1..=6 {
            for w in Permutation::all(n).unwrap() {
                let l = w.length();
                let mut by_length = Vec::new();
                for i in 1..n {
                    for j in i + 1..=n {
                        let v = w.apply_transposition(i, j).unwrap();
                        if v.length() + 1 == l {
                            by_length.push(((i, j), v));
                        }
                    }
                }
                assert_eq!(w.strong_covers_down(), by_length, "w = {w}");
            }
        }
    }
}
