//! Root systems of the simple Lie algebras: Cartan matrices, positive roots,
//! supports, the regular subsets `Ψ`, and convex orderings of `Φ₊` coming
//! from a fixed reduced word for the longest Weyl group element.
//!
//! Conventions: `a_ij = 2(α_i, α_j)/(α_i, α_i)`, `d_i = (α_i, α_i)/2`, so that
//! `d_i a_ij` is symmetric. Roots are integer vectors in the simple-root basis
//! and simple-root indices are 1-based.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            other => return Err(Error::UnknownLetter(other)),
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    letter: Letter,
    rank: usize,
}

impl CartanType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank { letter: letter.as_char(), rank });
        }
        Ok(CartanType { letter, rank })
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `dim g` from the classification, independent of any root computation.
    pub fn lie_algebra_dimension(&self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 2),
            Letter::B | Letter::C => n * (2 * n + 1),
            Letter::D => n * (2 * n - 1),
            Letter::E => [78, 133, 248][n - 6],
            Letter::F => 52,
            Letter::G => 14,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

/// A root in the simple-root basis.
pub type Root = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    positive_roots: Vec<Root>,
    index: BTreeMap<Root, usize>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let cartan = cartan_matrix(cartan_type);
        let d = symmetrizer(cartan_type);
        let n = cartan_type.rank;
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        seen.extend(queue.iter().cloned());
        while let Some(beta) = queue.pop() {
            for i in 0..n {
                let r = reflect(&cartan, i, &beta);
                if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().collect();
        positive_roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let index = positive_roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        RootSystem { cartan_type, cartan, d, positive_roots, index }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i ∈ {1, 2, 3}`.
    pub fn d(&self) -> &[i64] {
        &self.d
    }

    /// Positive roots, ordered by height and then reverse-lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        Ok(unit(self.rank(), i - 1))
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// `n + 2|Φ₊|`.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// `(λ, μ) = Σ λ_i d_i a_ij μ_j`.
    pub fn form(&self, lambda: &[i64], mu: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += lambda[i] * self.d[i] * self.cartan[i][j] * mu[j];
            }
        }
        s
    }

    /// Simple reflection `s_i` (1-based) applied to an arbitrary lattice vector.
    pub fn reflect(&self, i: usize, beta: &[i64]) -> Root {
        reflect(&self.cartan, i - 1, beta)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// 1-based indices of the simple roots with nonzero coefficient.
    pub fn support(&self, root: &[i64]) -> Result<BTreeSet<usize>> {
        if self.index_of(root).is_none() {
            return Err(Error::UnknownRoot);
        }
        Ok(root.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1).collect())
    }

    /// `{α ∈ Φ₊ : Supp α ⊆ I}`, in stored order.
    pub fn psi(&self, set: &BTreeSet<usize>) -> Result<Vec<Root>> {
        for &i in set {
            self.check_index(i)?;
        }
        Ok(self
            .positive_roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || set.contains(&(i + 1))))
            .cloned()
            .collect())
    }

    /// `dim l = n + |Ψ₊| + |Ψ₋|`.
    pub fn dim_l(&self, iplus: &BTreeSet<usize>, iminus: &BTreeSet<usize>) -> Result<usize> {
        Ok(self.rank() + self.psi(iplus)?.len() + self.psi(iminus)?.len())
    }

    /// The convex ordering of `Φ₊` from the stored reduced word for `w₀`.
    pub fn convex_order(&self) -> Result<ConvexOrder> {
        let word = reduced_word(self.cartan_type);
        ConvexOrder::from_word(self, word.to_vec())
    }
}

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

fn reflect(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Root {
    let pairing: i64 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
    let mut r = beta.to_vec();
    r[i] -= pairing;
    r
}

fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match t.letter {
        Letter::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Letter::B => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -1, -2);
        }
        Letter::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -2, -1);
        }
        Letter::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        Letter::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        Letter::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        Letter::G => link(1, 2, -3, -1),
    }
    a
}

fn symmetrizer(t: CartanType) -> Vec<i64> {
    let n = t.rank;
    match t.letter {
        Letter::A | Letter::D | Letter::E => vec![1; n],
        Letter::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Letter::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Letter::F => vec![2, 2, 1, 1],
        Letter::G => vec![1, 3],
    }
}

/// `β₁, …, β_N` with `β_k = s_{i₁}⋯s_{i_{k-1}} α_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexOrder {
    reduced_word: Vec<usize>,
    beta: Vec<Root>,
}

impl ConvexOrder {
    /// Builds the root sequence of `word` and checks that it enumerates `Φ₊`
    /// bijectively (equivalently, that `word` is a reduced word for `w₀`) and
    /// convexly.
    pub fn from_word(rs: &RootSystem, word: Vec<usize>) -> Result<Self> {
        let mut beta = Vec::with_capacity(word.len());
        for (k, &i) in word.iter().enumerate() {
            rs.check_index(i)?;
            let mut r = unit(rs.rank(), i - 1);
            for &j in word[..k].iter().rev() {
                r = rs.reflect(j, &r);
            }
            beta.push(r);
        }
        let order = ConvexOrder { reduced_word: word, beta };
        if !order.is_bijective(rs) {
            return Err(Error::Inconsistent(format!(
                "word for {} does not enumerate the positive roots",
                rs.cartan_type()
            )));
        }
        if !order.is_convex(rs) {
            return Err(Error::Inconsistent(format!("order for {} is not convex", rs.cartan_type())));
        }
        Ok(order)
    }

    pub fn reduced_word(&self) -> &[usize] {
        &self.reduced_word
    }

    pub fn beta(&self) -> &[Root] {
        &self.beta
    }

    /// Every positive root appears exactly once.
    pub fn is_bijective(&self, rs: &RootSystem) -> bool {
        let mut hit = vec![false; rs.positive_roots().len()];
        for b in &self.beta {
            match rs.index_of(b) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => return false,
            }
        }
        hit.iter().all(|&h| h)
    }

    /// Whenever `β_j + β_k` is a root `β_m` with `j < k`, we have `j < m < k`.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        let pos: BTreeMap<&Root, usize> = self.beta.iter().enumerate().map(|(i, r)| (r, i)).collect();
        for j in 0..self.beta.len() {
            for k in j + 1..self.beta.len() {
                let sum: Root = self.beta[j].iter().zip(&self.beta[k]).map(|(a, b)| a + b).collect();
                if rs.index_of(&sum).is_some() {
                    match pos.get(&sum) {
                        Some(&m) if j < m && m < k => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}

/// The fixed reduced word for `w₀` of each supported type.
///
/// Each word is the lexicographically first reduced word (greedy on the
/// smallest simple reflection that lengthens the prefix).
pub fn reduced_word(t: CartanType) -> &'static [usize] {
    REDUCED_WORDS.iter().find(|(l, n, _)| *l == t.letter && *n == t.rank).map(|(_, _, w)| *w).unwrap_or(&[])
}

#[rustfmt::skip]
static REDUCED_WORDS: &[(Letter, usize, &[usize])] = &[
    (Letter::A, 1, &[1]),
    (Letter::A, 2, &[1, 2, 1]),
    (Letter::A, 3, &[1, 2, 1, 3, 2, 1]),
    (Letter::A, 4, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1]),
    (Letter::A, 5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1]),
    (Letter::A, 6, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1]),
    (Letter::A, 7, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1]),
    (Letter::A, 8, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1]),
    (Letter::B, 2, &[1, 2, 1, 2]),
    (Letter::B, 3, &[1, 2, 1, 3, 2, 1, 3, 2, 3]),
    (Letter::B, 4, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 4, 3, 4]),
    (Letter::B, 5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 2, 5, 4, 3, 5, 4, 5]),
    (Letter::B, 6, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 6, 5, 4, 3, 6, 5, 4, 6, 5, 6]),
    (Letter::B, 7, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 7, 6, 5, 4, 7, 6, 5, 7, 6, 7]),
    (Letter::B, 8, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 8, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 8, 7, 6, 5, 8, 7, 6, 8, 7, 8]),
    (Letter::C, 2, &[1, 2, 1, 2]),
    (Letter::C, 3, &[1, 2, 1, 3, 2, 1, 3, 2, 3]),
    (Letter::C, 4, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 4, 3, 4]),
    (Letter::C, 5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 2, 5, 4, 3, 5, 4, 5]),
    (Letter::C, 6, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 6, 5, 4, 3, 6, 5, 4, 6, 5, 6]),
    (Letter::C, 7, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 7, 6, 5, 4, 7, 6, 5, 7, 6, 7]),
    (Letter::C, 8, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 8, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 8, 7, 6, 5, 8, 7, 6, 8, 7, 8]),
    (Letter::D, 4, &[1, 2, 1, 3, 2, 1, 4, 2, 1, 3, 2, 4]),
    (Letter::D, 5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 3, 2, 1, 4, 3, 2, 5, 3, 4]),
    (Letter::D, 6, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 4, 3, 2, 1, 5, 4, 3, 2, 6, 4, 3, 5, 4, 6]),
    (Letter::D, 7, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 6]),
    (Letter::D, 8, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2, 8, 6, 5, 4, 3, 7, 6, 5, 4, 8, 6, 5, 7, 6, 8]),
    (Letter::E, 6, &[1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1]),
    (Letter::E, 7, &[1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7]),
    (Letter::E, 8, &[1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8]),
    (Letter::F, 4, &[1, 2, 1, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4]),
    (Letter::G, 2, &[1, 2, 1, 2, 1, 2]),
];
