//! Subgroup data `D = (I₊, I₋, N, Γ, σ, δ)` with finite abelian `Γ` embedded
//! in the maximal torus, their validation, the correspondence between `N` and
//! the subgroup `Σ` of the finite torus, and the dimension formulas.
//!
//! Encodings:
//! * `I₊`, `I₋` are sets of 1-based simple-root indices (`I₋` indexes `-Π`).
//! * `N` is a subgroup of `(ℤ/ℓ)^s`, coordinates indexed by `I^c` in increasing order.
//! * `σ` is `n` characters of `Γ`; `sigma[j][k] ∈ ℤ/e` (`e = exponent(Γ)`) is the
//!   value of the `j`-th torus coordinate on the `k`-th generator of `Γ`, read
//!   as the root of unity `exp(2πi · sigma[j][k] / e)`.
//! * `δ` is given by the images, in the dual of `Γ`, of the canonical
//!   generators of `N`.
//!
//! Dimensions count PBW monomials over all roots supported on `I₊` and `I₋`
//! (the sets `Ψ₊`, `Ψ₋`), not just the simple ones.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;

use crate::abelian::{express_in, relations_of, Element, FinAbGroup, Hom, Subgroup};
use crate::error::{Error, Result};
use crate::rootsys::{Letter, RootSystem};

pub type IndexSet = BTreeSet<usize>;

/// A single failed invariant of a subgroup datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EllNotOddOrTooSmall(u64),
    ThreeDividesEllForG2(u64),
    IndexOutOfRange { set: &'static str, index: usize },
    NAmbient { expected_rank: usize },
    SigmaShape,
    SigmaNotWellDefined { coordinate: usize },
    SigmaNotInjective,
    DeltaShape { expected: usize, found: usize },
    DeltaNotInDual { generator: usize },
    DeltaNotHom,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EllNotOddOrTooSmall(l) => write!(f, "ℓ = {l} must be odd and at least 3"),
            Violation::ThreeDividesEllForG2(l) => write!(f, "3 divides ℓ for G2 (ℓ = {l})"),
            Violation::IndexOutOfRange { set, index } => write!(f, "{set} contains out-of-range index {index}"),
            Violation::NAmbient { expected_rank } => {
                write!(f, "N must be a subgroup of (Z/ℓ)^{expected_rank}")
            }
            Violation::SigmaShape => f.write_str("sigma must have one character per simple root"),
            Violation::SigmaNotWellDefined { coordinate } => {
                write!(f, "sigma coordinate {coordinate} is not a character of Gamma")
            }
            Violation::SigmaNotInjective => f.write_str("sigma not injective"),
            Violation::DeltaShape { expected, found } => {
                write!(f, "delta needs {expected} generator images, found {found}")
            }
            Violation::DeltaNotInDual { generator } => {
                write!(f, "delta image of generator {generator} is not a character of Gamma")
            }
            Violation::DeltaNotHom => f.write_str("delta is not a group homomorphism"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupDatum {
    root_system: Arc<RootSystem>,
    ell: u64,
    iplus: IndexSet,
    iminus: IndexSet,
    n: Subgroup,
    gamma: FinAbGroup,
    sigma: Vec<Vec<u64>>,
    delta: Vec<Element>,
}

impl SubgroupDatum {
    /// Assembles a datum without checking it; see [`SubgroupDatum::validate`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        root_system: Arc<RootSystem>,
        ell: u64,
        iplus: IndexSet,
        iminus: IndexSet,
        n: Subgroup,
        gamma: FinAbGroup,
        sigma: Vec<Vec<u64>>,
        delta: Vec<Element>,
    ) -> Self {
        SubgroupDatum { root_system, ell, iplus, iminus, n, gamma, sigma, delta }
    }

    /// `(Π, -Π, 0, 1, 1, 0)`: the datum of `O_ε(G)` itself.
    pub fn full(root_system: Arc<RootSystem>, ell: u64) -> Self {
        let all: IndexSet = (1..=root_system.rank()).collect();
        let n = Subgroup::trivial(&FinAbGroup::elementary(ell, 0));
        let sigma = vec![Vec::new(); root_system.rank()];
        SubgroupDatum::new(root_system, ell, all.clone(), all, n, FinAbGroup::trivial(), sigma, Vec::new())
    }

    /// `(∅, ∅, (ℤ/ℓ)^n, 1, 1, 0)`: the datum of the counit quotient `ℂ`.
    pub fn counit(root_system: Arc<RootSystem>, ell: u64) -> Self {
        let rank = root_system.rank();
        let n = Subgroup::full(&FinAbGroup::elementary(ell, rank));
        let delta = vec![Element::new(Vec::new()); n.generators().len()];
        let sigma = vec![Vec::new(); rank];
        SubgroupDatum::new(root_system, ell, IndexSet::new(), IndexSet::new(), n, FinAbGroup::trivial(), sigma, delta)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.root_system
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn iplus(&self) -> &IndexSet {
        &self.iplus
    }

    pub fn iminus(&self) -> &IndexSet {
        &self.iminus
    }

    pub fn n(&self) -> &Subgroup {
        &self.n
    }

    pub fn gamma(&self) -> &FinAbGroup {
        &self.gamma
    }

    pub fn sigma(&self) -> &[Vec<u64>] {
        &self.sigma
    }

    pub fn delta(&self) -> &[Element] {
        &self.delta
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// `I = I₊ ∪ I₋` as indices.
    pub fn i_union(&self) -> IndexSet {
        self.iplus.union(&self.iminus).copied().collect()
    }

    /// `I^c` in increasing order; these index the coordinates of `N`.
    pub fn i_complement(&self) -> Vec<usize> {
        complement(self.rank(), &self.i_union())
    }

    /// The finite torus `𝕋 ≅ (ℤ/ℓ)^n`.
    pub fn torus(&self) -> FinAbGroup {
        FinAbGroup::elementary(self.ell, self.rank())
    }

    /// The group `\hat{𝕋_{I^c}} ≅ (ℤ/ℓ)^s` that contains `N`.
    pub fn n_ambient(&self) -> FinAbGroup {
        FinAbGroup::elementary(self.ell, self.i_complement().len())
    }

    /// `δ(x)` for any `x ∈ N`.
    pub fn delta_apply(&self, x: &Element) -> Result<Element> {
        let coeffs = self.n.express(x).ok_or(Error::NotAnElement)?;
        let dual = self.gamma.dual();
        Ok(coeffs.iter().zip(&self.delta).fold(dual.zero(), |acc, (&c, img)| dual.add(&acc, &dual.scale(c, img))))
    }

    /// `σ` as a hom `Γ → (ℤ/e)^n`; `None` when `Γ` is trivial.
    pub fn sigma_hom(&self) -> Result<Option<Hom>> {
        let e = self.gamma.exponent();
        if e == 1 {
            return Ok(None);
        }
        Hom::new(&self.gamma, &FinAbGroup::elementary(e, self.rank()), self.sigma.clone()).map(Some)
    }

    /// Every failed invariant; empty when the datum is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let ell = self.ell;
        if ell < 3 || ell.is_multiple_of(2) {
            out.push(Violation::EllNotOddOrTooSmall(ell));
        }
        if self.root_system.cartan_type().letter() == Letter::G && ell.is_multiple_of(3) {
            out.push(Violation::ThreeDividesEllForG2(ell));
        }
        let rank = self.rank();
        for (name, set) in [("Iplus", &self.iplus), ("Iminus", &self.iminus)] {
            for &i in set {
                if i == 0 || i > rank {
                    out.push(Violation::IndexOutOfRange { set: name, index: i });
                }
            }
        }
        let s = self.i_complement().len();
        if *self.n.ambient() != self.n_ambient() {
            out.push(Violation::NAmbient { expected_rank: s });
        }
        let k = self.gamma.rank();
        if self.sigma.len() != rank || self.sigma.iter().any(|row| row.len() != k) {
            out.push(Violation::SigmaShape);
        } else {
            let e = self.gamma.exponent();
            let mut well_defined = true;
            for (j, row) in self.sigma.iter().enumerate() {
                let ok = row
                    .iter()
                    .zip(self.gamma.factors())
                    .all(|(&v, &m)| v < e && (v as u128 * m as u128).is_multiple_of(e as u128));
                if !ok {
                    well_defined = false;
                    out.push(Violation::SigmaNotWellDefined { coordinate: j + 1 });
                }
            }
            if well_defined {
                match self.sigma_hom() {
                    Ok(Some(h)) if !h.is_injective() => out.push(Violation::SigmaNotInjective),
                    Err(_) => out.push(Violation::SigmaNotInjective),
                    _ => {}
                }
            }
        }
        let gens = self.n.generators().len();
        if self.delta.len() != gens {
            out.push(Violation::DeltaShape { expected: gens, found: self.delta.len() });
        } else {
            let dual = self.gamma.dual();
            let mut in_dual = true;
            for (i, img) in self.delta.iter().enumerate() {
                if !dual.contains(img) {
                    in_dual = false;
                    out.push(Violation::DeltaNotInDual { generator: i + 1 });
                }
            }
            if in_dual && !respects_relations(&dual, &self.delta, &self.n.relations()) {
                out.push(Violation::DeltaNotHom);
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `Ok(self)` if valid, otherwise the violations as an error.
    pub fn validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidDatum(v))
        }
    }

    fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDatum(v))
        }
    }

    /// `Σ = 𝕋_I × Ω ⊆ (ℤ/ℓ)^n` with `Ω` the annihilator of `N`.
    pub fn sigma_group(&self) -> Result<Triple> {
        self.ensure_valid()?;
        let torus = self.torus();
        let mut gens: Vec<Element> = self.i_union().iter().map(|&i| torus.generator(i - 1)).collect();
        let ic = self.i_complement();
        for w in self.n.annihilator()?.generators() {
            let mut x = torus.zero();
            for (c, &i) in w.coords.iter().zip(&ic) {
                x.coords[i - 1] = *c;
            }
            gens.push(x);
        }
        Triple::new(Subgroup::generated_by(&torus, &gens)?, self.iplus.clone(), self.iminus.clone())
    }

    /// `dim H = ℓ^{n + |Ψ₊| + |Ψ₋|} / |N|`.
    pub fn dim_h(&self) -> Result<BigUint> {
        self.ensure_valid()?;
        let full = dim_uel(&self.root_system, self.ell, &self.iplus, &self.iminus)?;
        Ok(full / BigUint::from(self.n.order()))
    }

    /// `dim A_D = |Γ| · dim H`.
    pub fn dim_ad(&self) -> Result<BigUint> {
        Ok(self.dim_h()? * BigUint::from(self.gamma.order()))
    }

    /// Total order on data following the field order of the serialized form:
    /// type, rank, ℓ, I₊, I₋, generators of N, Γ, σ, δ.
    pub fn serial_cmp(&self, other: &Self) -> Ordering {
        self.root_system
            .cartan_type()
            .cmp(&other.root_system.cartan_type())
            .then_with(|| self.ell.cmp(&other.ell))
            .then_with(|| self.iplus.cmp(&other.iplus))
            .then_with(|| self.iminus.cmp(&other.iminus))
            .then_with(|| self.n.generators().cmp(other.n.generators()))
            .then_with(|| self.gamma.cmp(&other.gamma))
            .then_with(|| self.sigma.cmp(&other.sigma))
            .then_with(|| self.delta.cmp(&other.delta))
    }
}

fn complement(rank: usize, set: &IndexSet) -> Vec<usize> {
    (1..=rank).filter(|i| !set.contains(i)).collect()
}

fn respects_relations(target: &FinAbGroup, images: &[Element], relations: &[Vec<i64>]) -> bool {
    relations.iter().all(|rel| {
        let s = rel.iter().zip(images).fold(target.zero(), |acc, (&c, x)| target.add(&acc, &target.scale(c, x)));
        s == target.zero()
    })
}

/// Converts `δ` given on arbitrary generators of `N` into images of the
/// canonical generators, rejecting assignments that are not homomorphisms.
pub fn delta_on_canonical_generators(
    n: &Subgroup,
    generators: &[Element],
    images: &[Element],
    gamma: &FinAbGroup,
) -> Result<Vec<Element>> {
    let dual = gamma.dual();
    if generators.len() != images.len() {
        return Err(Error::InvalidDatum(vec![Violation::DeltaShape {
            expected: generators.len(),
            found: images.len(),
        }]));
    }
    for (i, img) in images.iter().enumerate() {
        if !dual.contains(img) {
            return Err(Error::InvalidDatum(vec![Violation::DeltaNotInDual { generator: i + 1 }]));
        }
    }
    if !respects_relations(&dual, images, &relations_of(n.ambient(), generators)?) {
        return Err(Error::InvalidDatum(vec![Violation::DeltaNotHom]));
    }
    n.generators()
        .iter()
        .map(|g| {
            let c = express_in(n.ambient(), generators, g)?
                .ok_or_else(|| Error::GroupMismatch("generators do not span N".into()))?;
            Ok(c.iter().zip(images).fold(dual.zero(), |acc, (&k, x)| dual.add(&acc, &dual.scale(k, x))))
        })
        .collect()
}

/// The triple `(Σ, I₊, I₋)` of a Hopf subalgebra of `u_ε(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    sigma: Subgroup,
    iplus: IndexSet,
    iminus: IndexSet,
}

impl Triple {
    /// Requires the `i`-th standard generator `K_{α_i}` in `Σ` for all `i ∈ I₊ ∪ I₋`.
    pub fn new(sigma: Subgroup, iplus: IndexSet, iminus: IndexSet) -> Result<Self> {
        let torus = sigma.ambient().clone();
        for &i in iplus.union(&iminus) {
            if i == 0 || i > torus.rank() {
                return Err(Error::IndexOutOfRange { index: i, rank: torus.rank() });
            }
            if !sigma.contains(&torus.generator(i - 1)) {
                return Err(Error::TripleInvariant(i));
            }
        }
        Ok(Triple { sigma, iplus, iminus })
    }

    pub fn sigma(&self) -> &Subgroup {
        &self.sigma
    }

    pub fn iplus(&self) -> &IndexSet {
        &self.iplus
    }

    pub fn iminus(&self) -> &IndexSet {
        &self.iminus
    }
}

/// `dim u_ε(l) = ℓ^{n + |Ψ₊| + |Ψ₋|}`.
pub fn dim_uel(rs: &RootSystem, ell: u64, iplus: &IndexSet, iminus: &IndexSet) -> Result<BigUint> {
    let exp = rs.dim_l(iplus, iminus)?;
    Ok(BigUint::from(ell).pow(exp as u32))
}

/// `dim = ℓ^{|Ψ₊| + |Ψ₋|} · |Σ|` for the Hopf subalgebra with the given triple.
pub fn hopf_subalgebra_dim(t: &Triple, rs: &RootSystem, ell: u64) -> Result<BigUint> {
    let torus = FinAbGroup::elementary(ell, rs.rank());
    if *t.sigma.ambient() != torus {
        return Err(Error::GroupMismatch("Sigma must lie in (Z/l)^n".into()));
    }
    let roots = rs.psi(&t.iplus)?.len() + rs.psi(&t.iminus)?.len();
    Ok(BigUint::from(ell).pow(roots as u32) * BigUint::from(t.sigma.order()))
}

/// The character `D^z = D_{i₁}^{z₁} ⋯ D_{i_s}^{z_s}` of `u_ε(l)`, for `z ∈ (ℤ/ℓ)^s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DCharacter {
    z: Element,
}

impl DCharacter {
    pub fn new(z: Element) -> Self {
        DCharacter { z }
    }

    pub fn z(&self) -> &Element {
        &self.z
    }

    /// `D^z · D^{z'} = D^{z + z'}` (convolution of characters).
    pub fn mul(&self, other: &DCharacter, ell: u64) -> DCharacter {
        let g = FinAbGroup::elementary(ell, self.z.coords.len());
        DCharacter::new(g.add(&self.z, &other.z))
    }

    /// Exponents `y ∈ (ℤ/ℓ)^n` with `D^z(K_{α_1}^{t_1}⋯K_{α_n}^{t_n}) = ε^{Σ y_i t_i}`;
    /// `D_i(K_{α_i}) = ε_i = ε^{d_i}`, and `y` vanishes on the `I`-coordinates.
    pub fn torus_character(&self, rs: &RootSystem, ell: u64, ic: &[usize]) -> Result<Element> {
        if ic.len() != self.z.coords.len() {
            return Err(Error::GroupMismatch("z has the wrong number of coordinates".into()));
        }
        let mut y = vec![0u64; rs.rank()];
        for (&zk, &i) in self.z.coords.iter().zip(ic) {
            if i == 0 || i > rs.rank() {
                return Err(Error::IndexOutOfRange { index: i, rank: rs.rank() });
            }
            y[i - 1] = (zk % ell) * (rs.d()[i - 1] as u64) % ell;
        }
        Ok(Element::new(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rs(l: Letter, n: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::build(CartanType::new(l, n).unwrap()))
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    fn el(v: &[u64]) -> Element {
        Element::new(v.to_vec())
    }

    fn cyclic(m: u64) -> FinAbGroup {
        FinAbGroup::cyclic(m).unwrap()
    }

    fn a1_datum(iplus: &[usize], iminus: &[usize], n_full: bool, gamma: FinAbGroup, sigma: u64) -> SubgroupDatum {
        let r = rs(Letter::A, 1);
        let s = if iplus.is_empty() && iminus.is_empty() { 1 } else { 0 };
        let amb = FinAbGroup::elementary(3, s);
        let n = if n_full { Subgroup::full(&amb) } else { Subgroup::trivial(&amb) };
        let sig = if gamma.is_trivial() { vec![vec![]] } else { vec![vec![sigma]] };
        let delta = vec![gamma.zero(); n.generators().len()];
        SubgroupDatum::new(r, 3, set(iplus), set(iminus), n, gamma, sig, delta)
    }

    #[test]
    fn validate_examples() {
        let full = SubgroupDatum::full(rs(Letter::A, 1), 3);
        assert!(full.validate().is_empty());
        let bad = a1_datum(&[1], &[1], false, cyclic(3), 0);
        assert_eq!(bad.validate(), vec![Violation::SigmaNotInjective]);
        assert_eq!(alloc::format!("{}", Violation::SigmaNotInjective), "sigma not injective");
        let g2 = SubgroupDatum::full(rs(Letter::G, 2), 9);
        assert_eq!(g2.validate(), vec![Violation::ThreeDividesEllForG2(9)]);
        let even = SubgroupDatum::full(rs(Letter::A, 1), 4);
        assert!(even.validate().contains(&Violation::EllNotOddOrTooSmall(4)));
    }

    #[test]
    fn malformed_sigma_and_delta() {
        let mut d = a1_datum(&[], &[], true, cyclic(2), 1);
        assert!(d.is_valid());
        d.sigma = vec![vec![1], vec![1]];
        assert_eq!(d.validate(), vec![Violation::SigmaShape]);
        let mut d = a1_datum(&[], &[], true, cyclic(3), 1);
        // δ(1) = 1 ∈ ℤ/3 is fine; δ on ℤ/3 → \hat{ℤ/2} must be zero
        d.delta = vec![el(&[1])];
        assert!(d.is_valid());
        let mut d2 = a1_datum(&[], &[], true, cyclic(2), 1);
        d2.delta = vec![el(&[1])];
        assert_eq!(d2.validate(), vec![Violation::DeltaNotHom]);
        d2.delta = vec![el(&[5])];
        assert_eq!(d2.validate(), vec![Violation::DeltaNotInDual { generator: 1 }]);
        d2.delta = vec![];
        assert_eq!(d2.validate(), vec![Violation::DeltaShape { expected: 1, found: 0 }]);
        let mut d3 = a1_datum(&[], &[], true, cyclic(4), 2);
        // 2 ∈ ℤ/4 has kernel {0, 2}
        assert_eq!(d3.validate(), vec![Violation::SigmaNotInjective]);
        d3.sigma = vec![vec![7]];
        assert_eq!(d3.validate(), vec![Violation::SigmaNotWellDefined { coordinate: 1 }]);
        let mut d4 = a1_datum(&[2], &[], false, FinAbGroup::trivial(), 0);
        d4.n = Subgroup::trivial(&FinAbGroup::elementary(3, 1));
        assert!(d4.validate().contains(&Violation::IndexOutOfRange { set: "Iplus", index: 2 }));
    }

    #[test]
    fn sigma_group_examples() {
        let d = a1_datum(&[1], &[], false, FinAbGroup::trivial(), 0);
        let t = d.sigma_group().unwrap();
        assert_eq!(t.sigma().order(), 3);
        let d = a1_datum(&[], &[], true, FinAbGroup::trivial(), 0);
        assert_eq!(d.sigma_group().unwrap().sigma().order(), 1);
        // A2, ℓ = 5, I = {1}, N = ⟨1⟩ ⊆ ℤ/5
        let r = rs(Letter::A, 2);
        let amb = FinAbGroup::elementary(5, 1);
        let n = Subgroup::generated_by(&amb, &[el(&[1])]).unwrap();
        let d = SubgroupDatum::new(r, 5, set(&[1]), set(&[]), n, FinAbGroup::trivial(), vec![vec![]; 2], vec![el(&[])]);
        let t = d.sigma_group().unwrap();
        assert_eq!(t.sigma().order(), 5);
        assert_eq!(t.sigma().elements(100).unwrap().len(), 5);
    }

    #[test]
    fn dimension_examples() {
        let a1 = rs(Letter::A, 1);
        let a2 = rs(Letter::A, 2);
        assert_eq!(dim_uel(&a1, 3, &set(&[1]), &set(&[1])).unwrap(), BigUint::from(27u32));
        assert_eq!(dim_uel(&a2, 3, &set(&[]), &set(&[])).unwrap(), BigUint::from(9u32));
        assert_eq!(dim_uel(&a2, 3, &set(&[1, 2]), &set(&[])).unwrap(), BigUint::from(243u32));

        let full = SubgroupDatum::full(a1.clone(), 3);
        assert_eq!(full.dim_h().unwrap(), BigUint::from(27u32));
        assert_eq!(full.dim_ad().unwrap(), BigUint::from(27u32));
        let counit = SubgroupDatum::counit(a1.clone(), 3);
        assert_eq!(counit.dim_h().unwrap(), BigUint::from(1u32));
        let borel = SubgroupDatum::new(
            a1.clone(),
            5,
            set(&[1]),
            set(&[]),
            Subgroup::trivial(&FinAbGroup::elementary(5, 0)),
            FinAbGroup::trivial(),
            vec![vec![]],
            vec![],
        );
        assert_eq!(borel.dim_h().unwrap(), BigUint::from(25u32));

        let z2 = a1_datum(&[1], &[1], false, cyclic(2), 1);
        assert_eq!(z2.dim_ad().unwrap(), BigUint::from(54u32));
        let z4 = a1_datum(&[], &[], true, cyclic(4), 1);
        assert_eq!(z4.dim_ad().unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn hopf_subalgebra_dim_examples() {
        let a1 = rs(Letter::A, 1);
        let a2 = rs(Letter::A, 2);
        let t1 = FinAbGroup::elementary(3, 1);
        let t = Triple::new(Subgroup::full(&t1), set(&[1]), set(&[1])).unwrap();
        assert_eq!(hopf_subalgebra_dim(&t, &a1, 3).unwrap(), BigUint::from(27u32));
        let t2 = FinAbGroup::elementary(3, 2);
        let t = Triple::new(Subgroup::full(&t2), set(&[]), set(&[])).unwrap();
        assert_eq!(hopf_subalgebra_dim(&t, &a2, 3).unwrap(), BigUint::from(9u32));
        let k1 = Subgroup::generated_by(&t2, &[el(&[1, 0])]).unwrap();
        let t = Triple::new(k1.clone(), set(&[1]), set(&[])).unwrap();
        assert_eq!(hopf_subalgebra_dim(&t, &a2, 3).unwrap(), BigUint::from(9u32));
        assert_eq!(Triple::new(k1, set(&[2]), set(&[])).unwrap_err(), Error::TripleInvariant(2));
    }

    #[test]
    fn delta_conversion_to_canonical_generators() {
        let amb = FinAbGroup::elementary(3, 1);
        let n = Subgroup::full(&amb);
        let gamma = cyclic(3);
        // δ(2) = 2 means δ(1) = 1
        let d = delta_on_canonical_generators(&n, &[el(&[2])], &[el(&[2])], &gamma).unwrap();
        assert_eq!(d, vec![el(&[1])]);
        // (1) and (2) both generate; δ(1) = 1, δ(2) = 1 is not additive
        let err = delta_on_canonical_generators(&n, &[el(&[1]), el(&[2])], &[el(&[1]), el(&[1])], &gamma);
        assert_eq!(err.unwrap_err(), Error::InvalidDatum(vec![Violation::DeltaNotHom]));
    }

    #[test]
    fn d_characters() {
        let b2 = rs(Letter::B, 2);
        let z = DCharacter::new(el(&[1, 2]));
        // d = (2, 1) on B2
        assert_eq!(z.torus_character(&b2, 5, &[1, 2]).unwrap(), el(&[2, 2]));
        let w = z.mul(&DCharacter::new(el(&[4, 3])), 5);
        assert_eq!(w.z(), &el(&[0, 0]));
    }
}
