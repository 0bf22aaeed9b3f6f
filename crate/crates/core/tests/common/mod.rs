//! Brute-force oracles shared by integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use qsub_core::abelian::{homs, Element, FinAbGroup, Subgroup};
use qsub_core::datum::{IndexSet, SubgroupDatum};
use qsub_core::rootsys::RootSystem;

pub fn tuples(radii: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &r in radii {
        out = out.into_iter().flat_map(|p| (0..r).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Data for `rank`, `ℓ` and the catalog, built by direct nested loops over raw
/// coordinates: subgroups as addition-closed subsets, `σ` as raw phase vectors
/// with injectivity checked element by element, `δ` as raw images checked
/// against every relation among the generators.
pub fn naive_generator(rs: &Arc<RootSystem>, ell: u64, cat: &[FinAbGroup]) -> Vec<SubgroupDatum> {
    let n = rs.rank();
    let mut out = Vec::new();
    let subsets = |m: usize| -> Vec<IndexSet> {
        (0..1u32 << m).map(|b| (1..=m).filter(|i| b >> (i - 1) & 1 == 1).collect()).collect()
    };
    for iplus in subsets(n) {
        for iminus in subsets(n) {
            let s = (1..=n).filter(|i| !iplus.contains(i) && !iminus.contains(i)).count();
            let amb_elems = tuples(&vec![ell; s]);
            let amb = FinAbGroup::elementary(ell, s);
            let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
            for mask in 0..1u64 << amb_elems.len() {
                let subset: Vec<Vec<u64>> =
                    (0..amb_elems.len()).filter(|k| mask >> k & 1 == 1).map(|k| amb_elems[k].clone()).collect();
                let set: BTreeSet<Vec<u64>> = subset.iter().cloned().collect();
                let closed = set.contains(&vec![0; s])
                    && set.iter().all(|a| {
                        set.iter()
                            .all(|b| set.contains(&a.iter().zip(b).map(|(x, y)| (x + y) % ell).collect::<Vec<_>>()))
                    });
                if !closed || !seen.insert(subset.clone()) {
                    continue;
                }
                let nsub =
                    Subgroup::generated_by(&amb, &subset.into_iter().map(Element::new).collect::<Vec<_>>()).unwrap();
                for gamma in cat {
                    let f = gamma.factors();
                    let e = gamma.exponent();
                    let gamma_elems = tuples(f);
                    let sigmas: Vec<Vec<Vec<u64>>> = tuples(&vec![e; n * f.len()])
                        .into_iter()
                        .map(|flat| {
                            flat.chunks(f.len().max(1)).take(n).map(|c| c[..f.len()].to_vec()).collect::<Vec<_>>()
                        })
                        .map(|mut rows: Vec<Vec<u64>>| {
                            rows.resize(n, Vec::new());
                            rows
                        })
                        .filter(|rows| {
                            let well = rows.iter().all(|r| r.iter().zip(f).all(|(&v, &m)| v * m % e == 0));
                            let injective = gamma_elems.iter().filter(|x| x.iter().any(|&c| c != 0)).all(|x| {
                                rows.iter().any(|r| r.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<u64>() % e != 0)
                            });
                            well && injective
                        })
                        .collect();
                    let gens = nsub.generators().to_vec();
                    // coefficient k matters mod ord(g) on N's side and mod e on Γ's side
                    let orders: Vec<u64> = gens.iter().map(|g| amb.element_order(g) * e).collect();
                    let dual_elems = tuples(f);
                    let deltas: Vec<Vec<Element>> = tuples(&vec![dual_elems.len() as u64; gens.len()])
                        .into_iter()
                        .map(|pick| {
                            pick.iter().map(|&i| Element::new(dual_elems[i as usize].clone())).collect::<Vec<_>>()
                        })
                        .filter(|imgs| {
                            tuples(&orders).iter().all(|c| {
                                let x = c
                                    .iter()
                                    .zip(&gens)
                                    .fold(amb.zero(), |acc, (&k, g)| amb.add(&acc, &amb.scale(k as i64, g)));
                                let y = c
                                    .iter()
                                    .zip(imgs)
                                    .fold(gamma.zero(), |acc, (&k, g)| gamma.add(&acc, &gamma.scale(k as i64, g)));
                                x != amb.zero() || y == gamma.zero()
                            })
                        })
                        .collect();
                    for sigma in &sigmas {
                        for delta in &deltas {
                            out.push(SubgroupDatum::new(
                                rs.clone(),
                                ell,
                                iplus.clone(),
                                iminus.clone(),
                                nsub.clone(),
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
    out
}

/// The spelled-out equivalence: equal `I±` and `N`, and an isomorphism
/// `τ: Γ' → Γ` with `στ = σ'` and `δ' = ᵗτ δ`.
pub fn direct_equiv(d: &SubgroupDatum, dp: &SubgroupDatum) -> bool {
    if d.iplus() != dp.iplus() || d.iminus() != dp.iminus() || d.n() != dp.n() {
        return false;
    }
    if d.gamma().order() != dp.gamma().order() {
        return false;
    }
    let (e, ep) = (d.gamma().exponent(), dp.gamma().exponent());
    homs(dp.gamma(), d.gamma(), true, 1 << 20).unwrap().iter().any(|tau| {
        let sigma_ok = (0..dp.gamma().rank()).all(|i| {
            let img = tau.image_of_generator(i);
            (0..d.rank()).all(|j| {
                let v: u64 = d.sigma()[j].iter().zip(&img.coords).map(|(a, b)| a * b).sum::<u64>() % e;
                v * ep % (e * ep) == dp.sigma()[j][i] * e % (e * ep)
            })
        });
        let t = tau.transpose();
        sigma_ok
            && d.n()
                .generators()
                .iter()
                .zip(d.delta())
                .all(|(g, img)| dp.delta_apply(g).unwrap() == t.apply(img).unwrap())
    })
}
