use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use qsub_core::abelian::{subgroups, Element, FinAbGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
use qsub_core::datum::{dim_uel, hopf_subalgebra_dim, IndexSet, SubgroupDatum};
use qsub_core::enumerate::{enumerate_data, Caps};
use qsub_core::rootsys::{CartanType, Letter, RootSystem};

fn rs(l: Letter, n: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(CartanType::new(l, n).unwrap()))
}

#[test]
fn sigma_times_n_is_torus_order() {
    let cat = [FinAbGroup::trivial(), FinAbGroup::cyclic(2).unwrap()];
    for (l, n) in [(Letter::A, 1), (Letter::A, 2), (Letter::B, 2)] {
        let r = rs(l, n);
        for ell in [3u64, 5] {
            for d in enumerate_data(&r, ell, &cat, &Caps::default()).unwrap() {
                let t = d.sigma_group().unwrap();
                assert_eq!(t.sigma().order() * d.n().order(), ell.pow(n as u32));
                // K_i ∈ Σ exactly for i ∈ I, on top of the Ω-part
                let torus = d.torus();
                for i in 1..=n {
                    if d.i_union().contains(&i) {
                        assert!(t.sigma().contains(&torus.generator(i - 1)));
                    }
                }
                // dim H equals the dimension of the Hopf subalgebra of the triple
                assert_eq!(d.dim_h().unwrap(), hopf_subalgebra_dim(&t, &r, ell).unwrap());
            }
        }
    }
}

/// Brute-force `Ω`: elements of `(ℤ/ℓ)^s` pairing trivially with `N`.
fn omega_members(n: &Subgroup, ell: u64) -> BTreeSet<Vec<u64>> {
    let xs = n.elements(DEFAULT_ENUMERATION_CAP).unwrap();
    n.ambient()
        .elements(DEFAULT_ENUMERATION_CAP)
        .unwrap()
        .into_iter()
        .filter(|y| xs.iter().all(|x| x.coords.iter().zip(&y.coords).map(|(a, b)| a * b).sum::<u64>() % ell == 0))
        .map(|e| e.coords)
        .collect()
}

#[test]
fn sigma_is_torus_part_times_annihilator() {
    let r = rs(Letter::A, 3);
    let ell = 3;
    let iplus: IndexSet = [2].into();
    let amb = FinAbGroup::elementary(ell, 2);
    for n in subgroups(&amb, DEFAULT_ENUMERATION_CAP).unwrap() {
        let delta = vec![Element::new(vec![]); n.generators().len()];
        let d = SubgroupDatum::new(
            r.clone(),
            ell,
            iplus.clone(),
            IndexSet::new(),
            n.clone(),
            FinAbGroup::trivial(),
            vec![vec![]; 3],
            delta,
        );
        let sigma = d.sigma_group().unwrap();
        let omega = omega_members(&n, ell);
        let expected: BTreeSet<Vec<u64>> =
            omega.iter().flat_map(|w| (0..ell).map(move |t| vec![w[0], t, w[1]])).collect();
        let got: BTreeSet<Vec<u64>> = sigma.sigma().elements(1000).unwrap().into_iter().map(|e| e.coords).collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn whole_algebra_dimension_law() {
    let types = [
        (Letter::A, 1),
        (Letter::A, 2),
        (Letter::A, 3),
        (Letter::A, 4),
        (Letter::B, 2),
        (Letter::B, 3),
        (Letter::C, 3),
        (Letter::D, 4),
        (Letter::G, 2),
    ];
    for (l, n) in types {
        let r = rs(l, n);
        let all: IndexSet = (1..=n).collect();
        for ell in [3u64, 5, 7] {
            if l == Letter::G && ell % 3 == 0 {
                continue;
            }
            let want = BigUint::from(ell).pow(r.dimension() as u32);
            assert_eq!(dim_uel(&r, ell, &all, &all).unwrap(), want);
            assert_eq!(SubgroupDatum::full(r.clone(), ell).dim_ad().unwrap(), want);
        }
    }
}

#[test]
fn big_dimensions_are_exact() {
    let e8 = rs(Letter::E, 8);
    let all: IndexSet = (1..=8).collect();
    let d = dim_uel(&e8, 7, &all, &all).unwrap();
    assert_eq!(d, BigUint::from(7u32).pow(248));
    assert_eq!(d.to_string().len(), 210);
}
