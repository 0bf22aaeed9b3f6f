//! Finite abelian groups `ℤ/m₁ ⊕ … ⊕ ℤ/m_k` (with `m₁ | m₂ | … | m_k`),
//! their subgroups and homomorphisms, and the pairing on `(ℤ/ℓ)^s`.
//!
//! Subgroups are identified by the Hermite normal form of their preimage
//! lattice in `ℤ^k`. That lattice contains `diag(m)ℤ^k`, so the form is a
//! full-rank upper triangular matrix and two subgroups are equal iff their
//! forms are.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Axis, Error, Result};
use crate::lattice::{hermite, Hermite};

/// Default bound on the size of any enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

/// Coordinates of a group element, `coords[i] ∈ ℤ/m_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pub coords: Vec<u64>,
}

impl Element {
    pub fn new(coords: Vec<u64>) -> Self {
        Element { coords }
    }
}

impl From<Vec<u64>> for Element {
    fn from(coords: Vec<u64>) -> Self {
        Element { coords }
    }
}

impl FinAbGroup {
    /// Group with the given invariant factors; each must be at least 2 and
    /// each must divide the next.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&m) = factors.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidFactors(format!("factor {m} < 2")));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidFactors(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new() }
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        if m == 1 {
            return Ok(Self::trivial());
        }
        Self::new(vec![m])
    }

    /// `(ℤ/ℓ)^s`.
    pub fn elementary(ell: u64, s: usize) -> Self {
        if ell == 1 {
            return Self::trivial();
        }
        FinAbGroup { factors: vec![ell; s] }
    }

    /// Invariant factors of `ℤ/o₁ ⊕ … ⊕ ℤ/o_r` for arbitrary orders `o_i ≥ 1`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidFactors("zero order".into()));
        }
        // prime-power decomposition, then recombine the largest powers first
        let mut by_prime: Vec<(u64, Vec<u64>)> = Vec::new();
        for &o in orders {
            let mut rest = o;
            let mut p = 2;
            while rest > 1 {
                if p * p > rest {
                    p = rest;
                }
                if rest % p == 0 {
                    let mut pk = 1;
                    while rest % p == 0 {
                        rest /= p;
                        pk *= p;
                    }
                    match by_prime.iter_mut().find(|(q, _)| *q == p) {
                        Some((_, v)) => v.push(pk),
                        None => by_prime.push((p, vec![pk])),
                    }
                }
                p += 1;
            }
        }
        let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (_, mut powers) in by_prime {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, pk) in factors.iter_mut().rev().zip(powers) {
                *slot *= pk;
            }
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `|G|`, saturating at `u64::MAX`.
    pub fn order(&self) -> u64 {
        self.factors.iter().fold(1u64, |a, &m| a.saturating_mul(m))
    }

    /// Least common multiple of the element orders (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// The character group; isomorphic to `G` with the same invariant factors.
    pub fn dual(&self) -> FinAbGroup {
        self.clone()
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.coords.len() == self.factors.len() && x.coords.iter().zip(&self.factors).all(|(c, m)| c < m)
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![0; self.factors.len()])
    }

    /// `i`-th standard generator.
    pub fn generator(&self, i: usize) -> Element {
        let mut x = self.zero();
        x.coords[i] = 1;
        x
    }

    /// Reduces arbitrary integers into canonical coordinates.
    pub fn reduce(&self, coords: &[i128]) -> Element {
        Element::new(coords.iter().zip(&self.factors).map(|(&c, &m)| c.rem_euclid(m as i128) as u64).collect())
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element::new(a.coords.iter().zip(&b.coords).zip(&self.factors).map(|((x, y), m)| (x + y) % m).collect())
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element::new(a.coords.iter().zip(&self.factors).map(|(x, m)| (m - x) % m).collect())
    }

    pub fn scale(&self, k: i64, a: &Element) -> Element {
        let v: Vec<i128> = a.coords.iter().map(|&x| k as i128 * x as i128).collect();
        self.reduce(&v)
    }

    pub fn element_order(&self, a: &Element) -> u64 {
        a.coords.iter().zip(&self.factors).map(|(&x, &m)| m / x.gcd(&m)).fold(1, |acc, o| acc.lcm(&o))
    }

    /// All elements in lexicographic order of coordinates.
    pub fn elements(&self, cap: u64) -> Result<Vec<Element>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: cap, requested: order });
        }
        Ok(mixed_radix(&self.factors).map(Element::new).collect())
    }

    /// Elements `x` with `k·x = 0`.
    pub fn torsion(&self, k: u64, cap: u64) -> Result<Vec<Element>> {
        let steps: Vec<u64> = self.factors.iter().map(|&m| m / m.gcd(&k)).collect();
        let radii: Vec<u64> = self.factors.iter().zip(&steps).map(|(m, s)| m / s).collect();
        let count = radii.iter().fold(1u64, |a, &r| a.saturating_mul(r));
        if count > cap {
            return Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: cap, requested: count });
        }
        Ok(mixed_radix(&radii).map(|c| Element::new(c.iter().zip(&steps).map(|(a, s)| a * s).collect())).collect())
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAnElement)
        }
    }

    fn modulus_rows(&self) -> Vec<Vec<i128>> {
        let k = self.factors.len();
        (0..k)
            .map(|j| {
                let mut row = vec![0i128; k];
                row[j] = self.factors[j] as i128;
                row
            })
            .collect()
    }
}

/// Iterates all vectors `v` with `0 <= v[i] < radii[i]`, lexicographically.
fn mixed_radix(radii: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    let empty = radii.contains(&0);
    let mut cur = if empty { None } else { Some(vec![0u64; radii.len()]) };
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = radii.len();
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < radii[i] {
                cur = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    })
}

/// `Σ x_i y_i mod ℓ`, the standard perfect pairing on `(ℤ/ℓ)^s`.
pub fn pairing(ell: u64, x: &Element, y: &Element) -> Result<u64> {
    if x.coords.len() != y.coords.len() {
        return Err(Error::GroupMismatch(format!("pairing ranks {} and {}", x.coords.len(), y.coords.len())));
    }
    Ok(x.coords.iter().zip(&y.coords).fold(0u64, |acc, (a, b)| (acc + (a % ell) * (b % ell)) % ell))
}

/// A subgroup of a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    ambient: FinAbGroup,
    /// Hermite form of the preimage lattice in `ℤ^k` (k×k, upper triangular).
    form: Vec<Vec<i128>>,
    /// Rows of `form` that are nonzero in the group, reduced: the canonical generators.
    gens: Vec<Element>,
    gen_rows: Vec<usize>,
}

impl Subgroup {
    pub fn generated_by(ambient: &FinAbGroup, gens: &[Element]) -> Result<Self> {
        for g in gens {
            ambient.check(g)?;
        }
        let mut rows: Vec<Vec<i128>> = gens.iter().map(|g| g.coords.iter().map(|&c| c as i128).collect()).collect();
        rows.extend(ambient.modulus_rows());
        let h = hermite(&rows, ambient.rank());
        Ok(Self::from_form(ambient.clone(), h.rows))
    }

    fn from_form(ambient: FinAbGroup, form: Vec<Vec<i128>>) -> Self {
        let mut gens = Vec::new();
        let mut gen_rows = Vec::new();
        for (i, row) in form.iter().enumerate() {
            let g = ambient.reduce(row);
            if g.coords.iter().any(|&c| c != 0) {
                gens.push(g);
                gen_rows.push(i);
            }
        }
        Subgroup { ambient, form, gens, gen_rows }
    }

    pub fn trivial(ambient: &FinAbGroup) -> Self {
        Self::generated_by(ambient, &[]).expect("empty generating set")
    }

    pub fn full(ambient: &FinAbGroup) -> Self {
        let gens: Vec<Element> = (0..ambient.rank()).map(|i| ambient.generator(i)).collect();
        Self::generated_by(ambient, &gens).expect("standard generators")
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    /// Canonical generators (nonzero rows of the Hermite form).
    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    /// The canonical form; equality of subgroups is equality of forms.
    pub fn canonical_form(&self) -> &[Vec<i128>] {
        &self.form
    }

    pub fn order(&self) -> u64 {
        self.ambient
            .factors
            .iter()
            .zip(&self.form)
            .enumerate()
            .map(|(j, (&m, row))| m / row[j] as u64)
            .fold(1u64, |a, b| a.saturating_mul(b))
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    fn hermite(&self) -> Hermite {
        // the form is already reduced; wrap it so `solve` can be reused
        Hermite {
            rows: self.form.clone(),
            pivots: (0..self.form.len()).collect(),
            transform: Vec::new(),
            kernel: Vec::new(),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.express(x).is_some()
    }

    /// Coefficients `c` with `Σ c_j · generators()[j] = x`, if `x` is a member.
    pub fn express(&self, x: &Element) -> Option<Vec<i64>> {
        if !self.ambient.contains(x) {
            return None;
        }
        let v: Vec<i128> = x.coords.iter().map(|&c| c as i128).collect();
        let c = self.hermite().solve(&v)?;
        Some(self.gen_rows.iter().map(|&r| c[r] as i64).collect())
    }

    /// Generators of the lattice of integer relations among `generators()`.
    pub fn relations(&self) -> Vec<Vec<i64>> {
        let h = self.hermite();
        let mut out = Vec::new();
        for row in self.ambient.modulus_rows() {
            let c = h.solve(&row).expect("modulus rows lie in the lattice");
            let rel: Vec<i64> = self.gen_rows.iter().map(|&r| c[r] as i64).collect();
            if rel.iter().any(|&x| x != 0) {
                out.push(rel);
            }
        }
        out
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.ambient != other.ambient {
            return Err(Error::GroupMismatch("join over different ambients".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Subgroup::generated_by(&self.ambient, &gens)
    }

    /// Members in lexicographic order.
    pub fn elements(&self, cap: u64) -> Result<Vec<Element>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: cap, requested: order });
        }
        let k = self.ambient.rank();
        let radii: Vec<u64> = (0..k).map(|j| self.ambient.factors[j] / self.form[j][j] as u64).collect();
        let mut out: Vec<Element> = mixed_radix(&radii)
            .map(|c| {
                let mut v = vec![0i128; k];
                for (cj, row) in c.iter().zip(&self.form) {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a += *cj as i128 * b;
                    }
                }
                self.ambient.reduce(&v)
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// `{y : pairing(x, y) = 0 for all x in self}`; the ambient must be `(ℤ/ℓ)^s`.
    pub fn annihilator(&self) -> Result<Subgroup> {
        let ell = self.ambient.exponent();
        if self.ambient.factors.iter().any(|&m| m != ell) {
            return Err(Error::GroupMismatch("annihilator needs an ambient (Z/l)^s".into()));
        }
        let s = self.ambient.rank();
        let r = self.gens.len();
        // kernel of y ↦ (⟨g_j, y⟩)_j : ℤ^s → (ℤ/ℓ)^r
        let mut rows: Vec<Vec<i128>> =
            (0..s).map(|i| self.gens.iter().map(|g| g.coords[i] as i128).collect()).collect();
        rows.extend((0..r).map(|j| {
            let mut row = vec![0i128; r];
            row[j] = ell as i128;
            row
        }));
        let h = hermite(&rows, r);
        let gens: Vec<Element> = h.kernel.iter().map(|k| self.ambient.reduce(&k[..s])).collect();
        Subgroup::generated_by(&self.ambient, &gens)
    }
}

/// Coefficients writing `x` as a combination of arbitrary elements `gens`.
pub fn express_in(ambient: &FinAbGroup, gens: &[Element], x: &Element) -> Result<Option<Vec<i64>>> {
    ambient.check(x)?;
    let h = generator_hermite(ambient, gens)?;
    let v: Vec<i128> = x.coords.iter().map(|&c| c as i128).collect();
    Ok(h.solve_input(&v).map(|c| c[..gens.len()].iter().map(|&a| a as i64).collect()))
}

/// Generators of the relation lattice `{c ∈ ℤ^r : Σ c_j gens[j] = 0}`.
pub fn relations_of(ambient: &FinAbGroup, gens: &[Element]) -> Result<Vec<Vec<i64>>> {
    let h = generator_hermite(ambient, gens)?;
    Ok(h.kernel
        .iter()
        .map(|k| k[..gens.len()].iter().map(|&a| a as i64).collect::<Vec<_>>())
        .filter(|rel| rel.iter().any(|&a| a != 0))
        .collect())
}

fn generator_hermite(ambient: &FinAbGroup, gens: &[Element]) -> Result<Hermite> {
    for g in gens {
        ambient.check(g)?;
    }
    let mut rows: Vec<Vec<i128>> = gens.iter().map(|g| g.coords.iter().map(|&c| c as i128).collect()).collect();
    rows.extend(ambient.modulus_rows());
    Ok(hermite(&rows, ambient.rank()))
}

/// All subgroups of `g`, each exactly once, ordered by order then canonical form.
pub fn subgroups(g: &FinAbGroup, cap: u64) -> Result<Vec<Subgroup>> {
    let elements = g.elements(cap)?;
    let mut cyclic: BTreeSet<Subgroup> = BTreeSet::new();
    for x in &elements {
        cyclic.insert(Subgroup::generated_by(g, core::slice::from_ref(x))?);
    }
    let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier = vec![Subgroup::trivial(g)];
    seen.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = h.join(c)?;
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A homomorphism `source → target`; `matrix[j][i]` is the `j`-th coordinate
/// of the image of the `i`-th standard generator of `source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: Vec<Vec<u64>>,
}

impl Hom {
    pub fn new(source: &FinAbGroup, target: &FinAbGroup, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if matrix.len() != target.rank() || matrix.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::GroupMismatch("hom matrix shape".into()));
        }
        let images: Vec<Element> =
            (0..source.rank()).map(|i| Element::new(matrix.iter().map(|r| r[i]).collect())).collect();
        Self::from_images(source, target, &images)
    }

    /// The hom sending the `i`-th generator of `source` to `images[i]`.
    pub fn from_images(source: &FinAbGroup, target: &FinAbGroup, images: &[Element]) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::GroupMismatch("number of generator images".into()));
        }
        for (img, &m) in images.iter().zip(&source.factors) {
            target.check(img)?;
            if target.scale(m as i64, img) != target.zero() {
                return Err(Error::NotAHom);
            }
        }
        let matrix = (0..target.rank()).map(|j| images.iter().map(|x| x.coords[j]).collect()).collect();
        Ok(Hom { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let images: Vec<Element> = (0..g.rank()).map(|i| g.generator(i)).collect();
        Self::from_images(g, g, &images).expect("identity is a hom")
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> Self {
        let images = vec![target.zero(); source.rank()];
        Self::from_images(source, target, &images).expect("zero is a hom")
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn image_of_generator(&self, i: usize) -> Element {
        Element::new(self.matrix.iter().map(|r| r[i]).collect())
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.check(x)?;
        let v: Vec<i128> =
            self.matrix.iter().map(|r| r.iter().zip(&x.coords).map(|(&a, &b)| a as i128 * b as i128).sum()).collect();
        Ok(self.target.reduce(&v))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if inner.target != self.source {
            return Err(Error::GroupMismatch("composition".into()));
        }
        let images =
            (0..inner.source.rank()).map(|i| self.apply(&inner.image_of_generator(i))).collect::<Result<Vec<_>>>()?;
        Hom::from_images(&inner.source, &self.target, &images)
    }

    pub fn kernel(&self) -> Subgroup {
        let k = self.source.rank();
        let mut rows: Vec<Vec<i128>> =
            (0..k).map(|i| self.image_of_generator(i).coords.iter().map(|&c| c as i128).collect()).collect();
        rows.extend(self.target.modulus_rows());
        let h = hermite(&rows, self.target.rank());
        let gens: Vec<Element> = h.kernel.iter().map(|v| self.source.reduce(&v[..k])).collect();
        Subgroup::generated_by(&self.source, &gens).expect("reduced kernel vectors")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    /// The transpose `ᵗf : target^ → source^`, `χ ↦ χ ∘ f`, with characters
    /// identified with dual coordinates via `χ_y(x) = exp(2πi Σ x_i y_i / m_i)`.
    pub fn transpose(&self) -> Hom {
        let src = &self.source.factors;
        let tgt = &self.target.factors;
        let images: Vec<Element> = (0..tgt.len())
            .map(|j| Element::new((0..src.len()).map(|i| (self.matrix[j][i] * src[i] / tgt[j]) % src[i]).collect()))
            .collect();
        Hom::from_images(&self.target.dual(), &self.source.dual(), &images).expect("transpose of a hom is a hom")
    }
}

/// All homomorphisms `g → h` in lexicographic order of the generator images
/// (first generator most significant), optionally only the injective ones.
pub fn homs(g: &FinAbGroup, h: &FinAbGroup, injective_only: bool, cap: u64) -> Result<Vec<Hom>> {
    let choices: Vec<Vec<Element>> = g.factors.iter().map(|&m| h.torsion(m, cap)).collect::<Result<_>>()?;
    let count = choices.iter().fold(1u64, |a, c| a.saturating_mul(c.len() as u64));
    if count > cap {
        return Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: cap, requested: count });
    }
    let radii: Vec<u64> = choices.iter().map(|c| c.len() as u64).collect();
    let mut out = Vec::new();
    for idx in mixed_radix(&radii) {
        let images: Vec<Element> = idx.iter().zip(&choices).map(|(&i, c)| c[i as usize].clone()).collect();
        let f = Hom::from_images(g, h, &images)?;
        if !injective_only || f.is_injective() {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[u64]) -> Element {
        Element::new(v.to_vec())
    }

    #[test]
    fn factor_validation() {
        assert!(FinAbGroup::new(vec![2, 4]).is_ok());
        assert!(FinAbGroup::new(vec![4, 2]).is_err());
        assert!(FinAbGroup::new(vec![1]).is_err());
        assert_eq!(FinAbGroup::from_cyclic_orders(&[2, 3]).unwrap().factors(), &[6]);
        assert_eq!(FinAbGroup::from_cyclic_orders(&[4, 6]).unwrap().factors(), &[2, 12]);
        assert!(FinAbGroup::from_cyclic_orders(&[1]).unwrap().is_trivial());
    }

    #[test]
    fn element_enumeration() {
        assert_eq!(FinAbGroup::trivial().elements(10).unwrap(), vec![el(&[])]);
        assert_eq!(FinAbGroup::cyclic(3).unwrap().elements(10).unwrap().len(), 3);
        let g = FinAbGroup::elementary(3, 2);
        let all = g.elements(100).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[1], el(&[0, 1]));
        assert!(matches!(g.elements(8), Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: 8, requested: 9 })));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups(&FinAbGroup::cyclic(3).unwrap(), 100).unwrap().len(), 2);
        assert_eq!(subgroups(&FinAbGroup::elementary(3, 2), 100).unwrap().len(), 6);
        assert_eq!(subgroups(&FinAbGroup::elementary(3, 3), 100).unwrap().len(), 28);
        // ℤ/12 has one subgroup per divisor
        assert_eq!(subgroups(&FinAbGroup::cyclic(12).unwrap(), 100).unwrap().len(), 6);
    }

    #[test]
    fn subgroup_membership_and_order() {
        let g = FinAbGroup::new(vec![3, 9]).unwrap();
        let h = Subgroup::generated_by(&g, &[el(&[1, 3])]).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.contains(&el(&[2, 6])));
        assert!(!h.contains(&el(&[0, 3])));
        let c = h.express(&el(&[2, 6])).unwrap();
        let back = c.iter().zip(h.generators()).fold(g.zero(), |acc, (&k, x)| g.add(&acc, &g.scale(k, x)));
        assert_eq!(back, el(&[2, 6]));
        assert_eq!(h.elements(100).unwrap().len(), 3);
        for rel in h.relations() {
            let s = rel.iter().zip(h.generators()).fold(g.zero(), |acc, (&k, x)| g.add(&acc, &g.scale(k, x)));
            assert_eq!(s, g.zero());
        }
    }

    #[test]
    fn equal_subgroups_have_equal_forms() {
        let g = FinAbGroup::elementary(3, 2);
        let a = Subgroup::generated_by(&g, &[el(&[1, 2])]).unwrap();
        let b = Subgroup::generated_by(&g, &[el(&[2, 1]), el(&[0, 0])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hom_examples() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let z3 = FinAbGroup::cyclic(3).unwrap();
        let h = homs(&z2, &z3, false, 100).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0], Hom::zero(&z2, &z3));
        assert_eq!(homs(&z3, &z3, false, 100).unwrap().len(), 3);
        let z3sq = FinAbGroup::elementary(3, 2);
        assert_eq!(homs(&z3, &z3sq, true, 100).unwrap().len(), 8);
        assert!(Hom::new(&z2, &z3, vec![vec![1]]).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(3, &el(&[1, 0]), &el(&[0, 1])).unwrap(), 0);
        assert_eq!(pairing(3, &el(&[1, 2]), &el(&[2, 1])).unwrap(), 1);
        assert!(pairing(3, &el(&[1]), &el(&[2, 1])).is_err());
        let g = FinAbGroup::elementary(3, 2);
        assert_eq!(g.dual(), g);
    }

    #[test]
    fn annihilator_examples() {
        let g = FinAbGroup::elementary(3, 2);
        assert_eq!(Subgroup::trivial(&g).annihilator().unwrap(), Subgroup::full(&g));
        assert_eq!(Subgroup::full(&g).annihilator().unwrap(), Subgroup::trivial(&g));
        let n = Subgroup::generated_by(&g, &[el(&[1, 0])]).unwrap();
        let expected = Subgroup::generated_by(&g, &[el(&[0, 1])]).unwrap();
        assert_eq!(n.annihilator().unwrap(), expected);
        let bad = FinAbGroup::new(vec![3, 9]).unwrap();
        assert!(Subgroup::trivial(&bad).annihilator().is_err());
    }

    #[test]
    fn transpose_pulls_back_characters() {
        // ℤ/2 → ℤ/4, 1 ↦ 2; the generator character of ℤ/4 pulls back to the sign character
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let f = Hom::from_images(&z2, &z4, &[el(&[2])]).unwrap();
        let t = f.transpose();
        assert_eq!(t.apply(&el(&[1])).unwrap(), el(&[1]));
        assert_eq!(t.apply(&el(&[2])).unwrap(), el(&[0]));
    }

    #[test]
    fn kernel_of_hom() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let f = Hom::from_images(&z4, &z2, &[el(&[1])]).unwrap();
        assert_eq!(f.kernel().order(), 2);
        assert!(!f.is_injective());
        assert!(Hom::identity(&z4).is_injective());
        let to_trivial = Hom::zero(&z2, &FinAbGroup::trivial());
        assert_eq!(to_trivial.kernel(), Subgroup::full(&z2));
    }
}
