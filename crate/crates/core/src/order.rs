//! The partial order `D ≤ D'` on subgroup data, the induced equivalence, and
//! Hasse diagrams of finite families.
//!
//! `D ≤ D'` holds when `I'₊ ⊆ I₊`, `I'₋ ⊆ I₋`, `η(N) ⊆ N'`, and some
//! `τ: Γ' → Γ` satisfies `στ = σ'` and `δ'∘η = ᵗτ∘δ`. Here `η` extends
//! characters of `𝕋_{I^c}` by zero to `𝕋_{I'^c}`. Homs `Γ' → Γ` are scanned in
//! the lexicographic order of [`homs`] and the first one satisfying both
//! conditions is returned.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{homs, FinAbGroup, Hom, DEFAULT_ENUMERATION_CAP};
use crate::datum::{IndexSet, SubgroupDatum};
use crate::error::{Error, Result};

/// Evidence for `D ≤ D'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderWitness {
    pub tau: Hom,
    pub eta_image_ok: bool,
    pub delta_compat_ok: bool,
}

/// Extension by zero `(ℤ/ℓ)^{|I^c|} → (ℤ/ℓ)^{|I'^c|}`, coordinates indexed by
/// the sets in increasing order.
pub fn eta(ic: &IndexSet, ic_prime: &IndexSet, ell: u64) -> Result<Hom> {
    if !ic.is_subset(ic_prime) {
        return Err(Error::NotSubset(format!("{ic:?}"), format!("{ic_prime:?}")));
    }
    let src = FinAbGroup::elementary(ell, ic.len());
    let tgt = FinAbGroup::elementary(ell, ic_prime.len());
    let matrix = ic_prime.iter().map(|j| ic.iter().map(|i| u64::from(i == j)).collect()).collect();
    Hom::new(&src, &tgt, matrix)
}

fn same_ambient(d: &SubgroupDatum, dp: &SubgroupDatum) -> Result<()> {
    if d.root_system().cartan_type() != dp.root_system().cartan_type() || d.ell() != dp.ell() {
        return Err(Error::AmbientMismatch(format!(
            "{} at ell = {} vs {} at ell = {}",
            d.root_system().cartan_type(),
            d.ell(),
            dp.root_system().cartan_type(),
            dp.ell()
        )));
    }
    for x in [d, dp] {
        let v = x.validate();
        if !v.is_empty() {
            return Err(Error::InvalidDatum(v));
        }
    }
    Ok(())
}

/// `στ = σ'`: for every generator `g'` of `Γ'` and every torus coordinate `j`,
/// the phases `σ_j(τ g')` and `σ'_j(g')` agree modulo 1.
fn sigma_matches(d: &SubgroupDatum, dp: &SubgroupDatum, tau: &Hom) -> bool {
    let e = d.gamma().exponent() as u128;
    let ep = dp.gamma().exponent() as u128;
    (0..dp.gamma().rank()).all(|i| {
        let img = tau.image_of_generator(i);
        d.sigma().iter().zip(dp.sigma()).all(|(row, row_p)| {
            let v: u128 = row.iter().zip(&img.coords).map(|(&a, &b)| a as u128 * b as u128).sum::<u128>() % e;
            (v * ep) % (e * ep) == (row_p[i] as u128 * e) % (e * ep)
        })
    })
}

fn delta_matches(d: &SubgroupDatum, dp: &SubgroupDatum, eta_map: &Hom, tau: &Hom) -> Result<bool> {
    let t = tau.transpose();
    for (g, img) in d.n().generators().iter().zip(d.delta()) {
        let lhs = dp.delta_apply(&eta_map.apply(g)?)?;
        if lhs != t.apply(img)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D ≤ D'` with the default hom-enumeration cap.
pub fn leq(d: &SubgroupDatum, dp: &SubgroupDatum) -> Result<Option<OrderWitness>> {
    leq_capped(d, dp, DEFAULT_ENUMERATION_CAP)
}

pub fn leq_capped(d: &SubgroupDatum, dp: &SubgroupDatum, cap: u64) -> Result<Option<OrderWitness>> {
    same_ambient(d, dp)?;
    if !dp.iplus().is_subset(d.iplus()) || !dp.iminus().is_subset(d.iminus()) {
        return Ok(None);
    }
    let ic: IndexSet = d.i_complement().into_iter().collect();
    let icp: IndexSet = dp.i_complement().into_iter().collect();
    let eta_map = eta(&ic, &icp, d.ell())?;
    for g in d.n().generators() {
        if !dp.n().contains(&eta_map.apply(g)?) {
            return Ok(None);
        }
    }
    for tau in homs(dp.gamma(), d.gamma(), false, cap)? {
        if sigma_matches(d, dp, &tau) && delta_matches(d, dp, &eta_map, &tau)? {
            return Ok(Some(OrderWitness { tau, eta_image_ok: true, delta_compat_ok: true }));
        }
    }
    Ok(None)
}

/// `D ≃ D'`: `D ≤ D'` and `D' ≤ D`.
pub fn equiv(d: &SubgroupDatum, dp: &SubgroupDatum) -> Result<bool> {
    Ok(leq(d, dp)?.is_some() && leq(dp, d)?.is_some())
}

/// An equivalence class of a family; `members` index into the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// Hasse diagram of a family modulo equivalence. Classes are sorted by their
/// representatives, each the least member under [`SubgroupDatum::serial_cmp`].
/// An edge `(i, j)` means class `i` is covered by class `j` (`i < j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hasse {
    pub classes: Vec<HasseClass>,
    pub edges: Vec<(usize, usize)>,
    leq: Vec<Vec<bool>>,
}

impl Hasse {
    /// Pairwise `leq` between family members.
    pub fn family_leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// `leq` between classes.
    pub fn class_leq(&self, i: usize, j: usize) -> bool {
        self.leq[self.classes[i].rep][self.classes[j].rep]
    }

    /// Whether class `j` is reachable from class `i` along edges (reflexive).
    pub fn reachable(&self, i: usize, j: usize) -> bool {
        let mut seen = vec![false; self.classes.len()];
        let mut stack = vec![i];
        while let Some(x) = stack.pop() {
            if x == j {
                return true;
            }
            if core::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == x).map(|e| e.1));
        }
        false
    }

    /// Classes with no class strictly above them.
    pub fn maximal_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| !self.edges.iter().any(|e| e.0 == i)).collect()
    }
}

pub fn hasse(family: &[SubgroupDatum]) -> Result<Hasse> {
    let k = family.len();
    if let Some(first) = family.first() {
        for d in &family[1..] {
            same_ambient(first, d)?;
        }
    }
    let mut leq_m = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            leq_m[a][b] = leq(&family[a], &family[b])?.is_some();
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..k {
        match classes.iter_mut().find(|c| leq_m[a][c[0]] && leq_m[c[0]][a]) {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    let mut classes: Vec<HasseClass> = classes
        .into_iter()
        .map(|members| {
            let rep =
                *members.iter().min_by(|&&x, &&y| family[x].serial_cmp(&family[y])).expect("classes are nonempty");
            HasseClass { rep, members }
        })
        .collect();
    classes.sort_by(|x, y| family[x.rep].serial_cmp(&family[y.rep]));

    let c = classes.len();
    let lt = |i: usize, j: usize| i != j && leq_m[classes[i].rep][classes[j].rep];
    let mut edges = Vec::new();
    for i in 0..c {
        for j in 0..c {
            if lt(i, j) && !(0..c).any(|m| m != i && m != j && lt(i, m) && lt(m, j)) {
                edges.push((i, j));
            }
        }
    }
    let h = Hasse { classes, edges, leq: leq_m };
    check_acyclic(&h)?;
    Ok(h)
}

fn check_acyclic(h: &Hasse) -> Result<()> {
    let n = h.classes.len();
    let mut indeg = vec![0usize; n];
    for &(_, j) in &h.edges {
        indeg[j] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut done = BTreeSet::new();
    while let Some(x) = ready.pop() {
        done.insert(x);
        for &(i, j) in &h.edges {
            if i == x {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(j);
                }
            }
        }
    }
    if done.len() == n {
        Ok(())
    } else {
        Err(Error::Inconsistent("leq is not a preorder on this family".into()))
    }
}
