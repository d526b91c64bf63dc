//! Exact integer linear algebra on sparse matrices.
//!
//! Operators act on column vectors, so entry `[row, col]` is the coefficient
//! of basis element `row` in the image of basis element `col`. Storage is
//! column-major with rows sorted inside each column and no stored zeros.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| BigInt::one()).collect())
    }

    pub fn diagonal(entries: Vec<BigInt>) -> Self {
        let n = entries.len();
        let columns = entries
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
            .collect();
        IntMatrix {
            rows: n,
            cols: n,
            columns,
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Result<Self> {
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            columns[c].push((r, v));
        }
        for col in &mut columns {
            *col = normalize(std::mem::take(col));
        }
        Ok(IntMatrix { rows, cols, columns })
    }

    pub fn from_dense(data: &[Vec<BigInt>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged dense matrix".into()));
        }
        let triplets = data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Self::from_triplets(rows, cols, triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c]
            .binary_search_by_key(&r, |e| e.0)
            .map_or_else(|_| BigInt::zero(), |pos| self.columns[c][pos].1.clone())
    }

    /// Nonzero entries in column-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }

    /// Exact product `self * rhs`, computed column by column.
    pub fn multiply(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = rhs
            .columns
            .par_iter()
            .map(|col| self.apply_sparse(col))
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        })
    }

    /// `self * v` for a sparse column vector.
    pub fn apply_sparse(&self, v: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
        let mut acc: Vec<(usize, BigInt)> = Vec::new();
        for (k, b) in v {
            for (r, a) in &self.columns[*k] {
                acc.push((*r, a * b));
            }
        }
        normalize(acc)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.combine(rhs, &BigInt::one())
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.combine(rhs, &-BigInt::one())
    }

    /// `self + factor * rhs`.
    pub fn combine(&self, rhs: &IntMatrix, factor: &BigInt) -> Result<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut merged = a.clone();
                merged.extend(b.iter().map(|(r, v)| (*r, v * factor)));
                normalize(merged)
            })
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }

    pub fn scale(&self, factor: &BigInt) -> IntMatrix {
        if factor.is_zero() {
            return IntMatrix::zeros(self.rows, self.cols);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * factor)).collect())
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Commutator `[self, rhs] = self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.multiply(rhs)?.sub(&rhs.multiply(self)?)
    }

    /// Sub-matrix on the given rows and columns, in the given orders.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut row_pos = vec![usize::MAX; self.rows];
        for (new, &old) in rows.iter().enumerate() {
            row_pos[old] = new;
        }
        let columns = cols
            .iter()
            .map(|&c| {
                let mut col: Vec<(usize, BigInt)> = self.columns[c]
                    .iter()
                    .filter(|(r, _)| row_pos[*r] != usize::MAX)
                    .map(|(r, v)| (row_pos[*r], v.clone()))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            columns,
        }
    }

    /// Largest absolute entry and the first position (column-major) where it
    /// is attained; `None` for the zero matrix.
    pub fn max_abs_entry(&self) -> Option<(BigInt, (usize, usize))> {
        let mut best: Option<(BigInt, (usize, usize))> = None;
        for (r, c, v) in self.iter() {
            let a = v.abs();
            if best.as_ref().is_none_or(|(b, _)| a > *b) {
                best = Some((a, (r, c)));
            }
        }
        best
    }

    /// First nonzero entry in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.iter().next().map(|(r, c, _)| (r, c))
    }

    /// Plain-text triplet form: a header line
    /// `# rows cols nnz <basis>` then one `row col value` line per nonzero,
    /// column-major.
    pub fn to_triplet_text(&self, basis: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} {} {} {}", self.rows, self.cols, self.nnz(), basis);
        for (r, c, v) in self.iter() {
            let _ = writeln!(out, "{r} {c} {v}");
        }
        out
    }

    /// Parses [`IntMatrix::to_triplet_text`] output. Returns the matrix and
    /// the trailing basis description from the header.
    pub fn from_triplet_text(text: &str) -> Result<(IntMatrix, String)> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let fields: Vec<&str> = header
            .strip_prefix('#')
            .ok_or(Error::Parse {
                line: 1,
                msg: "header must start with '#'".into(),
            })?
            .split_whitespace()
            .collect();
        if fields.len() < 3 {
            return Err(Error::Parse {
                line: 1,
                msg: "header needs rows, cols and nnz".into(),
            });
        }
        let num = |s: &str, line: usize| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("'{s}' is not a nonnegative integer"),
            })
        };
        let (rows, cols, nnz) = (num(fields[0], 1)?, num(fields[1], 1)?, num(fields[2], 1)?);
        let basis = fields[3..].join(" ");
        let mut triplets = Vec::with_capacity(nnz);
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected 'row col value'".into(),
                });
            }
            let value: BigInt = parts[2].parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("'{}' is not an integer", parts[2]),
            })?;
            triplets.push((num(parts[0], i + 1)?, num(parts[1], i + 1)?, value));
        }
        if triplets.len() != nnz {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announces {nnz} entries, found {}", triplets.len()),
            });
        }
        Ok((IntMatrix::from_triplets(rows, cols, triplets)?, basis))
    }
}

fn normalize(mut entries: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant_exact(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            a.rows, a.cols
        )));
    }
    Ok(bareiss(a.to_dense()))
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Nonsingular,
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum NonsingularityWitness {
    /// Full rank modulo `prime`, which proves nonsingularity over the rationals.
    Modular { prime: u64, rank: usize },
    Exact {
        #[serde(serialize_with = "crate::serialize_bigint")]
        determinant: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonsingularCertificate {
    pub verdict: Verdict,
    pub dimension: usize,
    /// Primes tried before the witness was found (all rank-deficient).
    pub rejected_primes: Vec<u64>,
    #[serde(flatten)]
    pub witness: NonsingularityWitness,
}

/// Number of random primes tried before falling back to the exact determinant.
pub const MODULAR_ATTEMPTS: usize = 4;

/// Certifies nonsingularity, modular first: full rank modulo a random 62-bit
/// prime is a proof. After [`MODULAR_ATTEMPTS`] rank-deficient primes the
/// exact determinant decides, and only an exact zero yields `Singular`.
pub fn nonsingular_certificate<R: Rng>(a: &IntMatrix, rng: &mut R) -> Result<NonsingularCertificate> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "nonsingularity of a non-square {}x{} matrix",
            a.rows, a.cols
        )));
    }
    let dim = a.rows;
    let mut rejected = Vec::new();
    for _ in 0..MODULAR_ATTEMPTS {
        let p = random_prime_62(rng);
        let rank = rank_mod_p(a, p);
        if rank == dim {
            return Ok(NonsingularCertificate {
                verdict: Verdict::Nonsingular,
                dimension: dim,
                rejected_primes: rejected,
                witness: NonsingularityWitness::Modular { prime: p, rank },
            });
        }
        rejected.push(p);
    }
    let det = determinant_exact(a)?;
    Ok(NonsingularCertificate {
        verdict: if det.is_zero() {
            Verdict::Singular
        } else {
            Verdict::Nonsingular
        },
        dimension: dim,
        rejected_primes: rejected,
        witness: NonsingularityWitness::Exact { determinant: det },
    })
}

/// Rank of `a` over `GF(p)`.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let modulus = BigInt::from(p);
    let mut m = vec![vec![0u64; a.cols]; a.rows];
    for (r, c, v) in a.iter() {
        let mut x = v % &modulus;
        if x.is_negative() {
            x += &modulus;
        }
        m[r][c] = x.to_u64().expect("residue fits in u64");
    }
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut rank = 0;
    for c in 0..a.cols {
        let Some(piv) = (rank..a.rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in rank + 1..a.rows {
            if m[r][c] == 0 {
                continue;
            }
            let f = mulmod(m[r][c], inv);
            for j in c..a.cols {
                let sub = mulmod(f, m[rank][j]);
                m[r][j] = (m[r][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn prime in `[2^61, 2^62)`.
pub fn random_prime_62<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}
