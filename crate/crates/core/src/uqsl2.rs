//! The small quantum group `u_ε(sl₂)` over `ℚ(ε)` as an explicit Hopf algebra.
//!
//! Basis: PBW monomials `F^a K^b E^c`, `0 ≤ a, b, c < ℓ`, with
//!
//! ```text
//! K E = ε² E K,   K F = ε⁻² F K,   E F − F E = (K − K⁻¹) / (ε − ε⁻¹),
//! E^ℓ = F^ℓ = 0,  K^ℓ = 1,
//! Δ(E) = E⊗1 + K⊗E,   Δ(F) = F⊗K⁻¹ + 1⊗F,   Δ(K) = K⊗K,
//! S(E) = −K⁻¹E,       S(F) = −FK,            S(K) = K⁻¹.
//! ```
//!
//! The coproduct is the one for which this antipode satisfies the antipode
//! axiom; [`SmallQuantumSl2::new`] checks that on the generators.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::qarith::{q_number, Cyclotomic, CyclotomicField};

/// `F^f K^k E^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub f: u32,
    pub k: u32,
    pub e: u32,
}

impl Monomial {
    pub const fn new(f: u32, k: u32, e: u32) -> Self {
        Monomial { f, k, e }
    }

    pub const ONE: Monomial = Monomial::new(0, 0, 0);
    pub const E: Monomial = Monomial::new(0, 0, 1);
    pub const F: Monomial = Monomial::new(1, 0, 0);
    pub const K: Monomial = Monomial::new(0, 1, 0);
}

/// Sparse combination of PBW monomials; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwElement {
    ell: u64,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl PbwElement {
    pub fn zero(ell: u64) -> Self {
        PbwElement { ell, terms: BTreeMap::new() }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Cyclotomic> {
        self.terms.get(m)
    }

    /// Adds `c · m`.
    pub fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        accumulate(&mut self.terms, m, c);
    }

    pub fn try_add(&self, other: &PbwElement) -> Result<PbwElement> {
        if self.ell != other.ell {
            return Err(Error::EllMismatch(self.ell, other.ell));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> PbwElement {
        let mut out = PbwElement::zero(self.ell);
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Cyclotomic>, key: K, c: Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Element of `u ⊗ u`, keyed by pairs of monomials.
pub type Tensor = BTreeMap<(Monomial, Monomial), Cyclotomic>;

/// Element of `u ⊗ u ⊗ u`.
pub type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Cyclotomic>;

/// The rank-1 Hopf subalgebras `u_ε(l)` containing the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subalgebra {
    /// `⟨K⟩`
    Torus,
    /// `⟨K, E⟩`
    BorelPlus,
    /// `⟨K, F⟩`
    BorelMinus,
    /// `u_ε(sl₂)`
    Full,
}

impl Subalgebra {
    pub const ALL: [Subalgebra; 4] =
        [Subalgebra::Torus, Subalgebra::BorelPlus, Subalgebra::BorelMinus, Subalgebra::Full];

    /// From `I₊ = {1}` and `I₋ = {1}` flags.
    pub fn from_flags(plus: bool, minus: bool) -> Self {
        match (plus, minus) {
            (false, false) => Subalgebra::Torus,
            (true, false) => Subalgebra::BorelPlus,
            (false, true) => Subalgebra::BorelMinus,
            (true, true) => Subalgebra::Full,
        }
    }

    pub fn flags(self) -> (bool, bool) {
        match self {
            Subalgebra::Torus => (false, false),
            Subalgebra::BorelPlus => (true, false),
            Subalgebra::BorelMinus => (false, true),
            Subalgebra::Full => (true, true),
        }
    }

    pub fn contains(self, m: &Monomial) -> bool {
        let (p, n) = self.flags();
        (p || m.e == 0) && (n || m.f == 0)
    }
}

/// A linear functional on `u_ε(sl₂)`, dense over the PBW basis in the order
/// of [`SmallQuantumSl2::index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualElement {
    ell: u64,
    values: Vec<Cyclotomic>,
}

impl DualElement {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn try_sub(&self, other: &DualElement) -> Result<DualElement> {
        if self.ell != other.ell {
            return Err(Error::EllMismatch(self.ell, other.ell));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(DualElement { ell: self.ell, values })
    }
}

/// Outcome of [`SmallQuantumSl2::quotient_dim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientDim {
    pub dim: usize,
    pub generators_central: bool,
}

/// `u_ε(sl₂)` with precomputed straightening data, coproducts and antipodes.
#[derive(Debug)]
pub struct SmallQuantumSl2 {
    ell: u64,
    field: Arc<CyclotomicField>,
    /// `ε^k` for `0 ≤ k < ℓ`.
    powers: Vec<Cyclotomic>,
    /// `E^c F^a` in normal form, indexed `c·ℓ + a`.
    ef: Vec<PbwElement>,
    delta: Vec<Tensor>,
    antipode: Vec<PbwElement>,
}

impl SmallQuantumSl2 {
    /// Builds the tables and checks the antipode axiom on `E`, `F`, `K`.
    pub fn new(ell: u64) -> Result<Self> {
        let field = CyclotomicField::new(ell)?;
        let powers = (0..ell as i64).map(|k| Cyclotomic::root_power(&field, k)).collect();
        let mut u = SmallQuantumSl2 { ell, field, powers, ef: Vec::new(), delta: Vec::new(), antipode: Vec::new() };
        u.ef = u.build_ef_table()?;
        u.delta = u.build_coproducts();
        u.antipode = u.build_antipodes();
        for g in [Monomial::E, Monomial::F, Monomial::K] {
            if !u.antipode_law(&g) {
                return Err(Error::Inconsistent("coproduct and antipode conventions disagree".into()));
            }
        }
        Ok(u)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        (self.ell * self.ell * self.ell) as usize
    }

    /// Position of `m` in the dense dual representation, `(f·ℓ + k)·ℓ + e`.
    pub fn index(&self, m: &Monomial) -> usize {
        let l = self.ell as usize;
        (m.f as usize * l + m.k as usize) * l + m.e as usize
    }

    pub fn basis(&self) -> impl Iterator<Item = Monomial> + '_ {
        let l = self.ell as u32;
        (0..l).flat_map(move |f| (0..l).flat_map(move |k| (0..l).map(move |e| Monomial::new(f, k, e))))
    }

    pub fn subalgebra_basis(&self, sub: Subalgebra) -> Vec<Monomial> {
        self.basis().filter(|m| sub.contains(m)).collect()
    }

    /// `ε^k` for any integer `k`.
    pub fn eps(&self, k: i64) -> Cyclotomic {
        self.powers[k.rem_euclid(self.ell as i64) as usize].clone()
    }

    pub fn zero(&self) -> PbwElement {
        PbwElement::zero(self.ell)
    }

    pub fn monomial(&self, m: Monomial) -> PbwElement {
        self.term(m, Cyclotomic::one(&self.field))
    }

    pub fn term(&self, m: Monomial, c: Cyclotomic) -> PbwElement {
        let l = self.ell as u32;
        let mut out = self.zero();
        if m.f < l && m.e < l {
            out.add_term(Monomial::new(m.f, m.k % l, m.e), c);
        }
        out
    }

    pub fn one(&self) -> PbwElement {
        self.monomial(Monomial::ONE)
    }

    fn check(&self, x: &PbwElement) -> Result<()> {
        if x.ell != self.ell {
            return Err(Error::EllMismatch(self.ell, x.ell));
        }
        Ok(())
    }

    /// Right multiplication of a normal-form element by `F`, using
    /// `E^z F = F E^z + [z] (ε^{−(z−1)} K − ε^{z−1} K⁻¹) E^{z−1} / (ε − ε⁻¹)`.
    fn times_f(&self, x: &PbwElement) -> Result<PbwElement> {
        let l = self.ell as u32;
        let eps = self.eps(1);
        let denom = (&eps - &self.eps(-1)).inverse()?;
        let mut out = self.zero();
        for (m, c) in &x.terms {
            if m.f + 1 < l {
                // K^y F = ε^{−2y} F K^y
                out.add_term(Monomial::new(m.f + 1, m.k, m.e), c.mul_root_power(-2 * m.k as i64));
            }
            if m.e > 0 {
                let z = m.e as i64;
                let coef = &(c * &q_number(m.e as u64, &eps)?) * &denom;
                out.add_term(Monomial::new(m.f, (m.k + 1) % l, m.e - 1), coef.mul_root_power(1 - z));
                out.add_term(Monomial::new(m.f, (m.k + l - 1) % l, m.e - 1), -coef.mul_root_power(z - 1));
            }
        }
        Ok(out)
    }

    fn build_ef_table(&self) -> Result<Vec<PbwElement>> {
        let l = self.ell as u32;
        let mut table = Vec::with_capacity((l * l) as usize);
        for c in 0..l {
            let mut cur = self.monomial(Monomial::new(0, 0, c));
            for _ in 0..l {
                let next = self.times_f(&cur)?;
                table.push(core::mem::replace(&mut cur, next));
            }
        }
        Ok(table)
    }

    /// Product of two basis monomials in normal form.
    pub fn multiply_monomials(&self, x: &Monomial, y: &Monomial) -> PbwElement {
        let l = self.ell as u32;
        let mut out = self.zero();
        // F^a K^b (E^c F^a') K^b' E^c'
        for (m, coef) in &self.ef[(x.e * l + y.f) as usize].terms {
            let f = x.f + m.f;
            let e = m.e + y.e;
            if f >= l || e >= l {
                continue;
            }
            let twist = -2 * (x.k as i64 * m.f as i64 + m.e as i64 * y.k as i64);
            out.add_term(Monomial::new(f, (x.k + m.k + y.k) % l, e), coef.mul_root_power(twist));
        }
        out
    }

    pub fn multiply(&self, x: &PbwElement, y: &PbwElement) -> Result<PbwElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                let c = cx * cy;
                for (m, p) in &self.multiply_monomials(mx, my).terms {
                    out.add_term(*m, &c * p);
                }
            }
        }
        Ok(out)
    }

    fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for ((a1, a2), ca) in x {
            for ((b1, b2), cb) in y {
                let c = ca * cb;
                let left = self.multiply_monomials(a1, b1);
                let right = self.multiply_monomials(a2, b2);
                for (m1, p1) in &left.terms {
                    let cp = &c * p1;
                    for (m2, p2) in &right.terms {
                        accumulate(&mut out, (*m1, *m2), &cp * p2);
                    }
                }
            }
        }
        out
    }

    fn build_coproducts(&self) -> Vec<Tensor> {
        let l = self.ell as u32;
        let one = Cyclotomic::one(&self.field);
        let single = |a: Monomial, b: Monomial| -> Tensor { [((a, b), one.clone())].into_iter().collect() };
        let kinv = Monomial::new(0, l - 1, 0);
        let mut delta_e = Tensor::new();
        delta_e.insert((Monomial::E, Monomial::ONE), one.clone());
        delta_e.insert((Monomial::K, Monomial::E), one.clone());
        let mut delta_f = Tensor::new();
        delta_f.insert((Monomial::F, kinv), one.clone());
        delta_f.insert((Monomial::ONE, Monomial::F), one.clone());
        let powers = |g: &Tensor| {
            let mut v = vec![single(Monomial::ONE, Monomial::ONE)];
            for i in 1..l as usize {
                let next = self.tensor_mul(&v[i - 1], g);
                v.push(next);
            }
            v
        };
        let fp = powers(&delta_f);
        let ep = powers(&delta_e);
        let mut out = Vec::with_capacity(self.dim());
        for m in self.basis() {
            let k = Monomial::new(0, m.k, 0);
            let fk = self.tensor_mul(&fp[m.f as usize], &single(k, k));
            out.push(self.tensor_mul(&fk, &ep[m.e as usize]));
        }
        out
    }

    fn build_antipodes(&self) -> Vec<PbwElement> {
        let l = self.ell as u32;
        let minus_one = Cyclotomic::from_integer(&self.field, -1);
        let s_e = self.term(Monomial::new(0, l - 1, 1), minus_one.clone());
        let s_f = self.term(Monomial::new(1, 1, 0), minus_one);
        let pow = |x: &PbwElement, n: u32| (0..n).fold(self.one(), |acc, _| self.multiply(&acc, x).expect("same ell"));
        self.basis()
            .map(|m| {
                // S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a
                let k = self.monomial(Monomial::new(0, (l - m.k) % l, 0));
                let left = self.multiply(&pow(&s_e, m.e), &k).expect("same ell");
                self.multiply(&left, &pow(&s_f, m.f)).expect("same ell")
            })
            .collect()
    }

    pub fn comultiply_monomial(&self, m: &Monomial) -> &Tensor {
        &self.delta[self.index(m)]
    }

    pub fn comultiply(&self, x: &PbwElement) -> Result<Tensor> {
        self.check(x)?;
        let mut out = Tensor::new();
        for (m, c) in &x.terms {
            for (k, v) in self.comultiply_monomial(m) {
                accumulate(&mut out, *k, c * v);
            }
        }
        Ok(out)
    }

    pub fn antipode(&self, x: &PbwElement) -> Result<PbwElement> {
        self.check(x)?;
        let mut out = self.zero();
        for (m, c) in &x.terms {
            for (k, v) in &self.antipode[self.index(m)].terms {
                out.add_term(*k, c * v);
            }
        }
        Ok(out)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Cyclotomic {
        if m.f == 0 && m.e == 0 {
            Cyclotomic::one(&self.field)
        } else {
            Cyclotomic::zero(&self.field)
        }
    }

    pub fn counit(&self, x: &PbwElement) -> Result<Cyclotomic> {
        self.check(x)?;
        Ok(x.terms
            .iter()
            .filter(|(m, _)| m.f == 0 && m.e == 0)
            .fold(Cyclotomic::zero(&self.field), |acc, (_, c)| &acc + c))
    }

    /// `x(yz) = (xy)z` on basis monomials.
    pub fn associativity(&self, x: &Monomial, y: &Monomial, z: &Monomial) -> bool {
        let (mx, my, mz) = (self.monomial(*x), self.monomial(*y), self.monomial(*z));
        let lhs = self.multiply(&self.multiply(&mx, &my).expect("same ell"), &mz);
        let rhs = self.multiply(&mx, &self.multiply(&my, &mz).expect("same ell"));
        lhs == rhs
    }

    /// `Δ(xy) = Δ(x)Δ(y)` on basis monomials.
    pub fn multiplicativity(&self, x: &Monomial, y: &Monomial) -> bool {
        let lhs = self.comultiply(&self.multiply_monomials(x, y)).expect("same ell");
        lhs == self.tensor_mul(self.comultiply_monomial(x), self.comultiply_monomial(y))
    }

    /// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on a basis monomial.
    pub fn coassociativity(&self, m: &Monomial) -> bool {
        let mut lhs = Tensor3::new();
        let mut rhs = Tensor3::new();
        for ((a, b), c) in self.comultiply_monomial(m) {
            for ((a1, a2), c1) in self.comultiply_monomial(a) {
                accumulate(&mut lhs, (*a1, *a2, *b), c * c1);
            }
            for ((b1, b2), c2) in self.comultiply_monomial(b) {
                accumulate(&mut rhs, (*a, *b1, *b2), c * c2);
            }
        }
        lhs == rhs
    }

    /// `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ` on a basis monomial.
    pub fn counit_law(&self, m: &Monomial) -> bool {
        let mut left = self.zero();
        let mut right = self.zero();
        for ((a, b), c) in self.comultiply_monomial(m) {
            left.add_term(*b, c * &self.counit_monomial(a));
            right.add_term(*a, c * &self.counit_monomial(b));
        }
        let id = self.monomial(*m);
        left == id && right == id
    }

    /// `m(S ⊗ id)Δ = ε·1 = m(id ⊗ S)Δ` on a basis monomial.
    pub fn antipode_law(&self, m: &Monomial) -> bool {
        let mut left = self.zero();
        let mut right = self.zero();
        for ((a, b), c) in self.comultiply_monomial(m) {
            let sa = &self.antipode[self.index(a)];
            let sb = &self.antipode[self.index(b)];
            let l = self.multiply(sa, &self.monomial(*b)).expect("same ell");
            let r = self.multiply(&self.monomial(*a), sb).expect("same ell");
            for (k, v) in &l.terms {
                left.add_term(*k, c * v);
            }
            for (k, v) in &r.terms {
                right.add_term(*k, c * v);
            }
        }
        let unit = self.one().scale(&self.counit_monomial(m));
        left == unit && right == unit
    }

    pub fn dual_zero(&self) -> DualElement {
        DualElement { ell: self.ell, values: vec![Cyclotomic::zero(&self.field); self.dim()] }
    }

    /// The functional `e_m` dual to a basis monomial.
    pub fn dual_basis(&self, m: &Monomial) -> DualElement {
        let mut d = self.dual_zero();
        d.values[self.index(m)] = Cyclotomic::one(&self.field);
        d
    }

    /// The counit restricted to `sub`.
    pub fn counit_dual(&self, sub: Subalgebra) -> DualElement {
        self.torus_character(sub, 0)
    }

    /// `F^a K^b E^c ↦ δ_{a0} δ_{c0} ε^{jb}`, restricted to `sub`.
    pub fn torus_character(&self, sub: Subalgebra, j: i64) -> DualElement {
        let mut d = self.dual_zero();
        for m in self.subalgebra_basis(sub) {
            if m.f == 0 && m.e == 0 {
                d.values[self.index(&m)] = self.eps(j * m.k as i64);
            }
        }
        d
    }

    pub fn evaluate(&self, f: &DualElement, x: &PbwElement) -> Result<Cyclotomic> {
        self.check(x)?;
        Ok(x.terms.iter().fold(Cyclotomic::zero(&self.field), |acc, (m, c)| &acc + &(c * &f.values[self.index(m)])))
    }

    fn check_support(&self, f: &DualElement, sub: Subalgebra) -> Result<()> {
        if f.ell != self.ell {
            return Err(Error::EllMismatch(self.ell, f.ell));
        }
        for m in self.basis() {
            if !sub.contains(&m) && !f.values[self.index(&m)].is_zero() {
                return Err(Error::SupportMismatch);
            }
        }
        Ok(())
    }

    /// All algebra maps `u_ε(l) → ℚ(ε)`. Any such map kills the nilpotents `E`
    /// and `F` and sends `K` to an `ℓ`-th root of unity `ε^j`; each candidate
    /// is kept iff it is multiplicative on all pairs of basis monomials.
    pub fn characters(&self, sub: Subalgebra) -> Vec<DualElement> {
        let basis = self.subalgebra_basis(sub);
        (0..self.ell as i64)
            .map(|j| self.torus_character(sub, j))
            .filter(|chi| {
                basis.iter().all(|x| {
                    basis.iter().all(|y| {
                        let prod = self.multiply_monomials(x, y);
                        self.evaluate(chi, &prod).expect("same ell")
                            == &chi.values[self.index(x)] * &chi.values[self.index(y)]
                    })
                })
            })
            .collect()
    }

    /// `(f ⋆ g)(x) = Σ f(x₍₁₎) g(x₍₂₎)` on `u_ε(l)`.
    pub fn convolve(&self, f: &DualElement, g: &DualElement, sub: Subalgebra) -> Result<DualElement> {
        self.check_support(f, sub)?;
        self.check_support(g, sub)?;
        Ok(self.convolve_unchecked(f, g, sub))
    }

    fn convolve_unchecked(&self, f: &DualElement, g: &DualElement, sub: Subalgebra) -> DualElement {
        let mut out = self.dual_zero();
        for m in self.subalgebra_basis(sub) {
            let mut acc = Cyclotomic::zero(&self.field);
            for ((a, b), c) in self.comultiply_monomial(&m) {
                let fa = &f.values[self.index(a)];
                let gb = &g.values[self.index(b)];
                if !fa.is_zero() && !gb.is_zero() {
                    acc = &acc + &(&(c * fa) * gb);
                }
            }
            out.values[self.index(&m)] = acc;
        }
        out
    }

    /// Whether `f ⋆ e_m = e_m ⋆ f` for every dual basis element `e_m` of `u_ε(l)*`.
    pub fn is_central_dual(&self, f: &DualElement, sub: Subalgebra) -> Result<bool> {
        self.check_support(f, sub)?;
        Ok(self.subalgebra_basis(sub).iter().all(|m| {
            let e = self.dual_basis(m);
            self.convolve_unchecked(f, &e, sub) == self.convolve_unchecked(&e, f, sub)
        }))
    }

    /// The character `D^z` of `u_ε(l)`: `K ↦ ε^{z}` when `l` is the torus
    /// (`z ∈ ℤ/ℓ`); for the other subalgebras `I^c = ∅` and only `z = ()`
    /// exists, giving the counit.
    pub fn d_character(&self, sub: Subalgebra, z: &[u64]) -> Result<DualElement> {
        match (sub, z) {
            (Subalgebra::Torus, [z1]) => Ok(self.torus_character(sub, *z1 as i64)),
            (Subalgebra::Torus, _) => Err(Error::GroupMismatch("torus needs one coordinate".into())),
            (_, []) => Ok(self.counit_dual(sub)),
            _ => Err(Error::GroupMismatch("no D-coordinates outside the torus".into())),
        }
    }

    /// Dimension of `u_ε(l)* / (g | g ∈ gens)`, the two-sided ideal taken in
    /// the convolution algebra. The span `{a ⋆ g ⋆ b}` over dual basis elements
    /// `a`, `b` is computed even when some generator is not central.
    pub fn quotient_dim(&self, sub: Subalgebra, gens: &[DualElement]) -> Result<QuotientDim> {
        for g in gens {
            self.check_support(g, sub)?;
        }
        let basis = self.subalgebra_basis(sub);
        let mut central = true;
        for g in gens {
            central &= self.is_central_dual(g, sub)?;
        }
        let duals: Vec<DualElement> = basis.iter().map(|m| self.dual_basis(m)).collect();
        let positions: Vec<usize> = basis.iter().map(|m| self.index(m)).collect();
        let mut echelon = Echelon::new(positions.len());
        'outer: for g in gens {
            for a in &duals {
                let ag = self.convolve_unchecked(a, g, sub);
                for b in &duals {
                    if echelon.rank() == positions.len() {
                        break 'outer;
                    }
                    let v = self.convolve_unchecked(&ag, b, sub);
                    echelon.insert(positions.iter().map(|&p| v.values[p].clone()).collect())?;
                }
            }
        }
        Ok(QuotientDim { dim: positions.len() - echelon.rank(), generators_central: central })
    }
}

/// Incremental row echelon form over `ℚ(ε)`.
struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<Cyclotomic>)>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<Cyclotomic>) -> Result<()> {
        debug_assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inverse()?;
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            for (_, row) in self.rows.iter_mut() {
                if !row[p].is_zero() {
                    let c = row[p].clone();
                    for (x, r) in row.iter_mut().zip(&v) {
                        if !r.is_zero() {
                            *x = &*x - &(&c * r);
                        }
                    }
                }
            }
            self.rows.push((p, v));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> SmallQuantumSl2 {
        SmallQuantumSl2::new(3).unwrap()
    }

    #[test]
    fn defining_relations() {
        let u = u3();
        let e = u.monomial(Monomial::E);
        let f = u.monomial(Monomial::F);
        let k = u.monomial(Monomial::K);
        // KE = ε² EK
        let ke = u.multiply(&k, &e).unwrap();
        assert_eq!(ke, u.term(Monomial::new(0, 1, 1), u.eps(0)));
        let ek = u.multiply(&e, &k).unwrap();
        assert_eq!(ek, u.term(Monomial::new(0, 1, 1), u.eps(-2)));
        assert_eq!(ke, ek.scale(&u.eps(2)));
        // EF = FE + (K − K^{ℓ−1}) / (ε − ε⁻¹)
        let ef = u.multiply(&e, &f).unwrap();
        let inv = (&u.eps(1) - &u.eps(-1)).inverse().unwrap();
        let mut want = u.monomial(Monomial::new(1, 0, 1));
        want.add_term(Monomial::K, inv.clone());
        want.add_term(Monomial::new(0, 2, 0), -inv);
        assert_eq!(ef, want);
        // E³ = 0, F³ = 0, K³ = 1
        let cube = |x: &PbwElement| u.multiply(&u.multiply(x, x).unwrap(), x).unwrap();
        assert!(cube(&e).is_zero());
        assert!(cube(&f).is_zero());
        assert_eq!(cube(&k), u.one());
    }

    #[test]
    fn hopf_structure_on_generators() {
        let u = u3();
        let one = Cyclotomic::one(u.field());
        let k = Monomial::K;
        assert_eq!(u.comultiply_monomial(&k), &[((k, k), one.clone())].into_iter().collect::<Tensor>());
        assert_eq!(
            u.comultiply_monomial(&Monomial::ONE),
            &[((Monomial::ONE, Monomial::ONE), one.clone())].into_iter().collect::<Tensor>()
        );
        assert_eq!(u.antipode(&u.monomial(k)).unwrap(), u.monomial(Monomial::new(0, 2, 0)));
        assert_eq!(u.antipode(&u.one()).unwrap(), u.one());
        assert_eq!(u.counit(&u.monomial(k)).unwrap(), one);
        assert!(u.counit(&u.monomial(Monomial::E)).unwrap().is_zero());
        for m in u.basis() {
            assert!(u.antipode_law(&m) && u.counit_law(&m) && u.coassociativity(&m), "{m:?}");
        }
        assert!(u.multiplicativity(&Monomial::E, &Monomial::F));
    }

    #[test]
    fn characters_by_subalgebra() {
        let u = u3();
        assert_eq!(u.characters(Subalgebra::Torus).len(), 3);
        assert_eq!(u.characters(Subalgebra::BorelPlus).len(), 3);
        assert_eq!(u.characters(Subalgebra::BorelMinus).len(), 3);
        // [E, F] ≠ 0 forces χ(K) = χ(K)⁻¹, so only the counit survives
        assert_eq!(u.characters(Subalgebra::Full), vec![u.counit_dual(Subalgebra::Full)]);
        let t = Subalgebra::Torus;
        let prod = u.convolve(&u.torus_character(t, 1), &u.torus_character(t, 2), t).unwrap();
        assert_eq!(prod, u.counit_dual(t));
    }

    #[test]
    fn centrality() {
        let u = u3();
        let t = Subalgebra::Torus;
        assert!(u.is_central_dual(&u.d_character(t, &[1]).unwrap(), t).unwrap());
        let e101 = u.dual_basis(&Monomial::new(1, 0, 1));
        assert!(!u.is_central_dual(&e101, Subalgebra::Full).unwrap());
        let counit = u.counit_dual(Subalgebra::Full);
        assert_eq!(u.convolve(&counit, &e101, Subalgebra::Full).unwrap(), e101);
        assert_eq!(u.is_central_dual(&e101, Subalgebra::Torus).unwrap_err(), Error::SupportMismatch);
    }

    #[test]
    fn quotient_dims() {
        let u = u3();
        let t = Subalgebra::Torus;
        assert_eq!(u.quotient_dim(t, &[]).unwrap().dim, 3);
        let g = u.d_character(t, &[1]).unwrap().try_sub(&u.counit_dual(t)).unwrap();
        assert_eq!(u.quotient_dim(t, &[g]).unwrap(), QuotientDim { dim: 1, generators_central: true });
        assert_eq!(u.quotient_dim(Subalgebra::Full, &[]).unwrap().dim, 27);
    }
}
