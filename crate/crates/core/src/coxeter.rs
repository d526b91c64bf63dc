//! Finite Coxeter groups by exact matrix representations, and their weak orders.
//!
//! Generators are realised through a Cartan-type matrix `A` with
//! `A_ss = 2` and `A_st * A_ts = 4 cos^2(pi / m_st)`; the simple reflection
//! `s` sends `alpha_t` to `alpha_t - A_st alpha_s`. For `m_st` in
//! `{2, 3, 4, 6}` the entries can be taken integral and for `m_st = 5` both
//! entries are the golden ratio, so every coefficient lives in `Q(sqrt 5)`.
//! Dihedral groups `I2(m)` with `m > 6` use the permutation action on the
//! vertices of a regular `m`-gon instead.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::permutations::Permutation;
use crate::poset::{RankedPoset, WeakOrder};
use crate::sperner::{certify, SpernerCertificate};

/// Default cap on enumerated group order.
pub const GROUP_CAP: usize = 20_000;

type Q = Ratio<i64>;

/// `a + b sqrt(5)` with rational `a`, `b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt5 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt5 {
    pub fn int(a: i64) -> Self {
        QSqrt5 {
            a: Q::from_integer(a),
            b: Q::zero(),
        }
    }

    /// `(1 + sqrt 5) / 2 = 2 cos(pi/5)`.
    pub fn golden() -> Self {
        QSqrt5 {
            a: Q::new(1, 2),
            b: Q::new(1, 2),
        }
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        Self::int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add for QSqrt5 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QSqrt5 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for QSqrt5 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QSqrt5 {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Neg for QSqrt5 {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt5 { a: -self.a, b: -self.b }
    }
}

impl Mul for QSqrt5 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        QSqrt5 {
            a: self.a * o.a + self.b * o.b * 5,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

/// Square matrix over `Q(sqrt 5)`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldMatrix {
    dim: usize,
    entries: Vec<QSqrt5>,
}

impl FieldMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![QSqrt5::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = QSqrt5::one();
        }
        FieldMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, r: usize, c: usize) -> QSqrt5 {
        self.entries[r * self.dim + c]
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> FieldMatrix {
        let d = self.dim;
        let mut entries = vec![QSqrt5::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.entries[k * d + j];
                    if !b.is_zero() {
                        entries[i * d + j] = entries[i * d + j] + a * b;
                    }
                }
            }
        }
        FieldMatrix { dim: d, entries }
    }

    pub fn pow(&self, e: usize) -> FieldMatrix {
        (0..e).fold(FieldMatrix::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == FieldMatrix::identity(self.dim)
    }
}

/// Type of an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(usize),
    H3,
    H4,
    F4,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2:{m}"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::F4 => write!(f, "F4"),
        }
    }
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
            CoxeterType::H3 => 3,
            CoxeterType::H4 | CoxeterType::F4 => 4,
        }
    }

    /// Known group order.
    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::I2(m) => 2 * m as u128,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14400,
            CoxeterType::F4 => 1152,
        }
    }

    /// Number of positive roots, the length of the longest element.
    pub fn positive_roots(&self) -> usize {
        match *self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::I2(m) => m,
            CoxeterType::H3 => 15,
            CoxeterType::H4 => 60,
            CoxeterType::F4 => 24,
        }
    }

    fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut m = vec![vec![2; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut link = |i: usize, j: usize, v: usize| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match *self {
            CoxeterType::A(n) => (1..n).for_each(|i| link(i - 1, i, 3)),
            CoxeterType::B(n) => {
                link(0, 1, 4);
                (2..n).for_each(|i| link(i - 1, i, 3));
            }
            CoxeterType::D(n) => {
                (1..n - 1).for_each(|i| link(i - 1, i, 3));
                link(n - 3, n - 1, 3);
            }
            CoxeterType::I2(mm) => link(0, 1, mm),
            CoxeterType::H3 => {
                link(0, 1, 5);
                link(1, 2, 3);
            }
            CoxeterType::H4 => {
                link(0, 1, 5);
                link(1, 2, 3);
                link(2, 3, 3);
            }
            CoxeterType::F4 => {
                link(0, 1, 3);
                link(1, 2, 4);
                link(2, 3, 3);
            }
        }
        m
    }
}

/// A Coxeter system: its matrix and the types of its irreducible components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSpec {
    label: String,
    components: Vec<CoxeterType>,
    matrix: Vec<Vec<usize>>,
}

impl CoxeterSpec {
    pub fn irreducible(t: CoxeterType) -> Result<Self> {
        let ok = match t {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::I2(m) => m >= 2,
            _ => true,
        };
        if !ok {
            return input(format!("{t} is not a valid finite type"));
        }
        Ok(CoxeterSpec {
            label: t.to_string(),
            components: vec![t],
            matrix: t.coxeter_matrix(),
        })
    }

    /// Classifies an explicit Coxeter matrix into finite irreducible types.
    pub fn from_matrix(matrix: Vec<Vec<usize>>) -> Result<Self> {
        let r = matrix.len();
        if r == 0 {
            return input("Coxeter matrix of rank 0");
        }
        for i in 0..r {
            if matrix[i].len() != r {
                return input("Coxeter matrix is not square");
            }
            for j in 0..r {
                let v = matrix[i][j];
                if v != matrix[j][i] {
                    return input(format!("m[{i}][{j}] != m[{j}][{i}]"));
                }
                if (i == j) != (v == 1) || v == 0 {
                    return input(format!("m[{i}][{j}] = {v}: need 1 on and >= 2 off the diagonal"));
                }
            }
        }
        let mut seen = vec![false; r];
        let mut components = Vec::new();
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for v in 0..r {
                    if !seen[v] && matrix[u][v] >= 3 {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            components.push(classify(&matrix, &comp)?);
        }
        let label = components
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x");
        Ok(CoxeterSpec {
            label,
            components,
            matrix,
        })
    }

    /// Parses `rank` on the first line, then the upper triangle of `m_st`
    /// row by row (whitespace separated, line breaks free).
    pub fn parse_matrix_text(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));
        let parse = |(line, tok): (usize, &str)| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("'{tok}' is not a positive integer"),
            })
        };
        let rank = parse(tokens.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing rank".into(),
        })?)?;
        let mut matrix = vec![vec![1; rank]; rank];
        for i in 0..rank {
            for j in i + 1..rank {
                let v = parse(tokens.next().ok_or(Error::Parse {
                    line: 0,
                    msg: format!("missing m[{}][{}]", i + 1, j + 1),
                })?)?;
                matrix[i][j] = v;
                matrix[j][i] = v;
            }
        }
        if let Some((line, tok)) = tokens.next() {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected trailing '{tok}'"),
            });
        }
        Self::from_matrix(matrix)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn components(&self) -> &[CoxeterType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    pub fn order(&self) -> u128 {
        self.components.iter().map(CoxeterType::order).product()
    }

    pub fn positive_roots(&self) -> usize {
        self.components.iter().map(CoxeterType::positive_roots).sum()
    }

    /// True if this is type `A_(n-1)`, i.e. the symmetric group `S_n`.
    pub fn symmetric_group_n(&self) -> Option<usize> {
        match self.components.as_slice() {
            [CoxeterType::A(r)] => Some(r + 1),
            _ => None,
        }
    }
}

fn classify(matrix: &[Vec<usize>], comp: &[usize]) -> Result<CoxeterType> {
    let r = comp.len();
    let m = |a: usize, b: usize| matrix[comp[a]][comp[b]];
    let unsupported = || {
        Error::Unsupported(format!(
            "component on generators {:?} is not a supported finite type",
            comp.iter().map(|i| i + 1).collect::<Vec<_>>()
        ))
    };
    if r == 1 {
        return Ok(CoxeterType::A(1));
    }
    if r == 2 {
        return Ok(match m(0, 1) {
            3 => CoxeterType::A(2),
            v => CoxeterType::I2(v),
        });
    }
    let mut degree = vec![0; r];
    let mut edges = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            if m(a, b) >= 3 {
                degree[a] += 1;
                degree[b] += 1;
                edges.push((a, b, m(a, b)));
            }
        }
    }
    if edges.len() != r - 1 {
        return Err(unsupported());
    }
    let branch: Vec<usize> = (0..r).filter(|&a| degree[a] >= 3).collect();
    let labels: Vec<usize> = edges.iter().map(|e| e.2).filter(|&v| v > 3).collect();
    if branch.is_empty() {
        // A path: walk it from an end to read off the edge labels in order.
        let start = (0..r).find(|&a| degree[a] == 1).ok_or_else(unsupported)?;
        let mut path = vec![start];
        let mut seq = Vec::new();
        while path.len() < r {
            let cur = *path.last().unwrap();
            let next = (0..r)
                .find(|&b| !path.contains(&b) && m(cur, b) >= 3)
                .ok_or_else(unsupported)?;
            seq.push(m(cur, next));
            path.push(next);
        }
        if seq.first() > seq.last() {
            seq.reverse();
        }
        return match (r, labels.as_slice(), seq.as_slice()) {
            (_, [], _) => Ok(CoxeterType::A(r)),
            (_, [4], s) if s[s.len() - 1] == 4 => Ok(CoxeterType::B(r)),
            (3, [5], _) => Ok(CoxeterType::H3),
            (4, [5], s) if s[s.len() - 1] == 5 => Ok(CoxeterType::H4),
            (4, [4], s) if s[1] == 4 => Ok(CoxeterType::F4),
            _ => Err(unsupported()),
        };
    }
    if branch.len() == 1 && degree[branch[0]] == 3 && labels.is_empty() {
        let centre = branch[0];
        let arms: Vec<usize> = (0..r)
            .filter(|&a| m(centre, a) >= 3)
            .map(|a| arm_length(&m, r, centre, a))
            .collect();
        let mut arms = arms;
        arms.sort_unstable();
        if arms[0] == 1 && arms[1] == 1 {
            return Ok(CoxeterType::D(r));
        }
    }
    Err(unsupported())
}

fn arm_length(m: &impl Fn(usize, usize) -> usize, r: usize, centre: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, first, 1);
    while let Some(next) = (0..r).find(|&b| b != prev && b != cur && m(cur, b) >= 3) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

impl FromStr for CoxeterSpec {
    type Err = Error;

    /// Type strings: `A4`, `B3`, `D4`, `I2:7`, `H3`, `H4`, `F4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let t = match s {
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "F4" => CoxeterType::F4,
            _ => {
                if let Some(m) = s.strip_prefix("I2:") {
                    CoxeterType::I2(m.parse().map_err(|_| Error::Input(format!("bad I2 parameter in '{s}'")))?)
                } else {
                    let (head, tail) = s.split_at(s.len().min(1));
                    let n: usize = tail
                        .parse()
                        .map_err(|_| Error::Input(format!("unknown Coxeter type '{s}'")))?;
                    match head {
                        "A" => CoxeterType::A(n),
                        "B" => CoxeterType::B(n),
                        "D" => CoxeterType::D(n),
                        _ => return input(format!("unknown Coxeter type '{s}'")),
                    }
                }
            }
        };
        Self::irreducible(t)
    }
}

/// Generator matrices of the chosen faithful representation.
pub fn reflection_representation(spec: &CoxeterSpec) -> Result<Vec<FieldMatrix>> {
    if let [CoxeterType::I2(m)] = spec.components() {
        if *m > 6 {
            return Ok(polygon_reflections(*m));
        }
    }
    let r = spec.rank();
    let mut cartan = vec![vec![QSqrt5::zero(); r]; r];
    for s in 0..r {
        cartan[s][s] = QSqrt5::int(2);
        for t in s + 1..r {
            let (st, ts) = match spec.matrix[s][t] {
                2 => (QSqrt5::int(0), QSqrt5::int(0)),
                3 => (QSqrt5::int(-1), QSqrt5::int(-1)),
                4 => (QSqrt5::int(-2), QSqrt5::int(-1)),
                5 => (-QSqrt5::golden(), -QSqrt5::golden()),
                6 => (QSqrt5::int(-3), QSqrt5::int(-1)),
                m => {
                    return Err(Error::Unsupported(format!(
                        "m = {m} between generators {} and {} needs cos(pi/{m}) outside Q(sqrt 5)",
                        s + 1,
                        t + 1
                    )))
                }
            };
            cartan[s][t] = st;
            cartan[t][s] = ts;
        }
    }
    Ok((0..r)
        .map(|s| {
            // Column t holds the image of alpha_t: alpha_t - A_st alpha_s.
            let mut g = FieldMatrix::identity(r);
            for t in 0..r {
                g.entries[s * r + t] = g.entries[s * r + t] - cartan[s][t];
            }
            g
        })
        .collect())
}

fn polygon_reflections(m: usize) -> Vec<FieldMatrix> {
    let perm_matrix = |f: &dyn Fn(usize) -> usize| {
        let mut g = FieldMatrix {
            dim: m,
            entries: vec![QSqrt5::zero(); m * m],
        };
        for i in 0..m {
            g.entries[f(i) * m + i] = QSqrt5::one();
        }
        g
    };
    vec![
        perm_matrix(&|i| (m - i) % m),
        perm_matrix(&|i| (m + 1 - i) % m),
    ]
}

/// Group element with its lex-minimal reduced word (1-based generators).
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: FieldMatrix,
    pub length: usize,
    pub word: Vec<u8>,
}

impl GroupElement {
    pub fn word_label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|g| g.to_string()).collect()
        }
    }
}

/// A Coxeter group enumerated breadth-first, with right-multiplication table.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    spec: CoxeterSpec,
    generators: Vec<FieldMatrix>,
    elements: Vec<GroupElement>,
    /// `right[x][s]` is the index of `x * s`.
    right: Vec<Vec<usize>>,
    index: HashMap<FieldMatrix, usize>,
}

/// Breadth-first enumeration from the identity under right multiplication.
///
/// Within each length the elements come out in lexicographic order of their
/// lex-minimal reduced words, which is the basis order of the weak order.
pub fn enumerate_group(spec: &CoxeterSpec, cap: usize) -> Result<CoxeterGroup> {
    if spec.order() > cap as u128 {
        return Err(Error::Budget(format!(
            "{} has {} elements, above the cap of {cap}",
            spec.label(),
            spec.order()
        )));
    }
    let generators = reflection_representation(spec)?;
    let dim = generators[0].dim();
    let mut elements = vec![GroupElement {
        matrix: FieldMatrix::identity(dim),
        length: 0,
        word: Vec::new(),
    }];
    let mut index = HashMap::new();
    index.insert(elements[0].matrix.clone(), 0);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut x = 0;
    while x < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for (s, g) in generators.iter().enumerate() {
            let product = elements[x].matrix.mul(g);
            let y = match index.get(&product) {
                Some(&y) => y,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::Budget(format!(
                            "enumeration of {} passed the cap of {cap} elements",
                            spec.label()
                        )));
                    }
                    let mut word = elements[x].word.clone();
                    word.push(s as u8 + 1);
                    index.insert(product.clone(), elements.len());
                    elements.push(GroupElement {
                        matrix: product,
                        length: elements[x].length + 1,
                        word,
                    });
                    elements.len() - 1
                }
            };
            row.push(y);
        }
        right.push(row);
        x += 1;
    }
    Ok(CoxeterGroup {
        spec: spec.clone(),
        generators,
        elements,
        right,
        index,
    })
}

impl CoxeterGroup {
    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[FieldMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.elements.last().map_or(0, |e| e.length)
    }

    /// Index of `x * s` (generator `s` 0-based).
    pub fn right_mul(&self, x: usize, s: usize) -> usize {
        self.right[x][s]
    }

    pub fn index_of(&self, m: &FieldMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Weak order: `x < x s` whenever the length goes up by one. Asserts rank
    /// symmetry through the order-reversing map `x -> w0 x`.
    pub fn weak_order(&self) -> Result<RankedPoset> {
        let mut covers = Vec::new();
        for (x, row) in self.right.iter().enumerate() {
            for &y in row {
                if self.elements[y].length == self.elements[x].length + 1 {
                    covers.push((x, y));
                }
            }
        }
        let labelled = self
            .elements
            .iter()
            .map(|e| (e.word_label(), e.length))
            .collect();
        let poset = RankedPoset::new(format!("weak({})", self.spec.label()), labelled, &covers)?;
        self.check_reversal(&poset)?;
        Ok(poset)
    }

    fn check_reversal(&self, poset: &RankedPoset) -> Result<()> {
        let r = poset.top_rank();
        let top: Vec<usize> = poset.rank_range(r).collect();
        if top.len() != 1 {
            return Err(Error::Input(format!("{} maximal-length elements", top.len())));
        }
        let w0 = &self.elements[top[0]].matrix;
        let flip: Vec<usize> = self
            .elements
            .iter()
            .map(|e| self.index_of(&w0.mul(&e.matrix)).expect("group is closed"))
            .collect();
        for x in 0..poset.len() {
            if poset.rank(flip[x]) != r - poset.rank(x) {
                return Err(Error::Input(format!(
                    "w0 * {} does not have complementary length",
                    poset.label(x)
                )));
            }
            for &y in poset.up_covers(x) {
                if !poset.up_covers(flip[y]).contains(&flip[x]) {
                    return Err(Error::Input("left multiplication by w0 does not reverse covers".into()));
                }
            }
        }
        Ok(())
    }
}

/// Enumerates the group and builds its weak order.
pub fn build_weak_order_coxeter(spec: &CoxeterSpec, cap: usize) -> Result<RankedPoset> {
    enumerate_group(spec, cap)?.weak_order()
}

/// Sperner certificate for the weak order of `spec`.
pub fn conjecture_check(spec: &CoxeterSpec, cap: usize) -> Result<SpernerCertificate> {
    Ok(certify(&build_weak_order_coxeter(spec, cap)?))
}

/// Maps each element of the type-`A_(n-1)` group to the permutation with the
/// same reduced word, checking that this is an isomorphism onto `W_n`.
/// Returns `index in coxeter poset -> index in weak order`.
pub fn match_type_a(group: &CoxeterGroup, poset: &RankedPoset, weak: &WeakOrder) -> Result<Vec<usize>> {
    let n = weak.n();
    if group.spec().symmetric_group_n() != Some(n) || group.len() != weak.len() {
        return input(format!("{} is not the Coxeter group of S_{n}", group.spec().label()));
    }
    let mut map = Vec::with_capacity(group.len());
    for e in group.elements() {
        let mut w = Permutation::identity(n)?;
        for &s in &e.word {
            w = w.apply_simple(s as usize)?;
        }
        if w.length() != e.length {
            return input(format!("word {} is not reduced for S_{n}", e.word_label()));
        }
        map.push(weak.index_of(&w).unwrap());
    }
    let coxeter_index: HashMap<&str, usize> =
        poset.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut poset_map = vec![0; poset.len()];
    for (g, e) in group.elements().iter().enumerate() {
        poset_map[coxeter_index[e.word_label().as_str()]] = map[g];
    }
    let mut hit = vec![false; weak.len()];
    for &y in &poset_map {
        if std::mem::replace(&mut hit[y], true) {
            return input("word map is not injective");
        }
    }
    for x in 0..poset.len() {
        let mut image: Vec<usize> = poset.up_covers(x).iter().map(|&y| poset_map[y]).collect();
        image.sort_unstable();
        if image != weak.poset().up_covers(poset_map[x]) {
            return input(format!("covers of {} do not match", poset.label(x)));
        }
    }
    Ok(poset_map)
}
