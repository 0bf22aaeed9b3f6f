//! Exhaustive enumeration of finite subgroup data for a fixed root system and
//! `ℓ`, and the census of the result modulo equivalence.
//!
//! Enumeration order, outermost first: `I₊` and `I₋` as bitmasks (bit `i-1`
//! for index `i`), subgroups `N` in the order of [`subgroups`], `Γ` in catalog
//! order, injective `σ` in hom order, `δ` in lexicographic order of the images
//! of the canonical generators of `N`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::abelian::{homs, subgroups, Element, FinAbGroup, Subgroup};
use crate::datum::{IndexSet, SubgroupDatum};
use crate::error::{Axis, Error, Result};
use crate::order::{hasse, Hasse};
use crate::rootsys::{Letter, RootSystem};

/// Bounds on enumeration sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_gamma_order: u64,
    pub max_enumeration: u64,
    pub max_ell: u64,
    pub max_rank: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_gamma_order: 16, max_enumeration: 1_000_000, max_ell: 7, max_rank: 3 }
    }
}

impl Caps {
    fn check(&self, rs: &RootSystem, ell: u64, catalog: &[FinAbGroup]) -> Result<()> {
        if ell < 3 || ell.is_multiple_of(2) || (rs.cartan_type().letter() == Letter::G && ell.is_multiple_of(3)) {
            return Err(Error::InvalidEll(ell));
        }
        if ell > self.max_ell {
            return Err(Error::CapExceeded { axis: Axis::Ell, limit: self.max_ell, requested: ell });
        }
        if rs.rank() > self.max_rank {
            return Err(Error::CapExceeded {
                axis: Axis::Rank,
                limit: self.max_rank as u64,
                requested: rs.rank() as u64,
            });
        }
        for g in catalog {
            if g.order() > self.max_gamma_order {
                return Err(Error::CapExceeded {
                    axis: Axis::GammaOrder,
                    limit: self.max_gamma_order,
                    requested: g.order(),
                });
            }
        }
        Ok(())
    }
}

fn mask_set(mask: u32, rank: usize) -> IndexSet {
    (1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

/// All homs `N → dual`, as images of the canonical generators of `N`.
fn delta_choices(n: &Subgroup, dual: &FinAbGroup, cap: u64) -> Result<Vec<Vec<Element>>> {
    let amb = n.ambient();
    let per_gen: Vec<Vec<Element>> =
        n.generators().iter().map(|g| dual.torsion(amb.element_order(g), cap)).collect::<Result<_>>()?;
    let total = per_gen.iter().fold(1u64, |a, c| a.saturating_mul(c.len() as u64));
    if total > cap {
        return Err(Error::CapExceeded { axis: Axis::GroupOrder, limit: cap, requested: total });
    }
    let relations = n.relations();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_gen.len()];
    loop {
        let images: Vec<Element> = idx.iter().zip(&per_gen).map(|(&i, c)| c[i].clone()).collect();
        let ok = relations.iter().all(|r| {
            let s = r.iter().zip(&images).fold(dual.zero(), |acc, (&c, x)| dual.add(&acc, &dual.scale(c, x)));
            s == dual.zero()
        });
        if ok {
            out.push(images);
        }
        // odometer, last generator fastest
        let mut k = per_gen.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < per_gen[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Every valid finite subgroup datum over the catalog, each exactly once.
pub fn enumerate_data(
    rs: &Arc<RootSystem>,
    ell: u64,
    gamma_catalog: &[FinAbGroup],
    caps: &Caps,
) -> Result<Vec<SubgroupDatum>> {
    caps.check(rs, ell, gamma_catalog)?;
    let cap = caps.max_enumeration;
    let rank = rs.rank();
    let mut out = Vec::new();
    if gamma_catalog.is_empty() {
        return Ok(out);
    }
    let sigmas: Vec<Vec<Vec<Vec<u64>>>> = gamma_catalog
        .iter()
        .map(|g| {
            if g.is_trivial() {
                return Ok(vec![vec![Vec::new(); rank]]);
            }
            let torus = FinAbGroup::elementary(g.exponent(), rank);
            Ok(homs(g, &torus, true, cap)?.into_iter().map(|h| h.matrix().to_vec()).collect())
        })
        .collect::<Result<_>>()?;
    for pm in 0..1u32 << rank {
        for mm in 0..1u32 << rank {
            let iplus = mask_set(pm, rank);
            let iminus = mask_set(mm, rank);
            let s = rank - (pm | mm).count_ones() as usize;
            let amb = FinAbGroup::elementary(ell, s);
            for n in subgroups(&amb, cap)? {
                for (gamma, sigma_list) in gamma_catalog.iter().zip(&sigmas) {
                    let deltas = delta_choices(&n, &gamma.dual(), cap)?;
                    for sigma in sigma_list {
                        for delta in &deltas {
                            if out.len() as u64 >= cap {
                                return Err(Error::CapExceeded {
                                    axis: Axis::GroupOrder,
                                    limit: cap,
                                    requested: cap + 1,
                                });
                            }
                            out.push(SubgroupDatum::new(
                                rs.clone(),
                                ell,
                                iplus.clone(),
                                iminus.clone(),
                                n.clone(),
                                gamma.clone(),
                                sigma.clone(),
                                delta.clone(),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusClass {
    pub rep: SubgroupDatum,
    pub size: usize,
    pub dim_ad: BigUint,
}

/// Census of a family modulo equivalence. `dim_histogram` counts classes by
/// `dim A_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub data: Vec<SubgroupDatum>,
    pub classes: Vec<CensusClass>,
    pub dim_histogram: BTreeMap<BigUint, usize>,
    pub hasse: Hasse,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

pub fn census(rs: &Arc<RootSystem>, ell: u64, gamma_catalog: &[FinAbGroup], caps: &Caps) -> Result<Census> {
    let data = enumerate_data(rs, ell, gamma_catalog, caps)?;
    let hasse = hasse(&data)?;
    let mut classes = Vec::with_capacity(hasse.classes.len());
    let mut dim_histogram = BTreeMap::new();
    for c in &hasse.classes {
        let rep = data[c.rep].clone();
        let dim_ad = rep.dim_ad()?;
        for &m in &c.members {
            if data[m].dim_ad()? != dim_ad {
                return Err(Error::Inconsistent("dim_AD differs within an equivalence class".into()));
            }
        }
        *dim_histogram.entry(dim_ad.clone()).or_insert(0) += 1;
        classes.push(CensusClass { rep, size: c.members.len(), dim_ad });
    }
    Ok(Census { data, classes, dim_histogram, hasse })
}
