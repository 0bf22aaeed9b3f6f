use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use qsub_core::rootsys::{reduced_word, CartanType, ConvexOrder, Letter, RootSystem};

fn all_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for l in [Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F, Letter::G] {
            if let Ok(t) = CartanType::new(l, n) {
                out.push(t);
            }
        }
    }
    out
}

fn classical_count(t: CartanType) -> usize {
    let n = t.rank();
    match t.letter() {
        Letter::A => n * (n + 1) / 2,
        Letter::B | Letter::C => n * n,
        Letter::D => n * (n - 1),
        Letter::E => [36, 63, 120][n - 6],
        Letter::F => 24,
        Letter::G => 6,
    }
}

#[test]
fn positive_root_counts() {
    let types = all_types(8);
    assert_eq!(types.len(), 8 + 7 + 7 + 5 + 3 + 1 + 1);
    for t in types {
        let rs = RootSystem::build(t);
        assert_eq!(rs.positive_roots().len(), classical_count(t), "{t}");
        assert_eq!(rs.dimension(), t.lie_algebra_dimension(), "{t}");
        assert_eq!(rs.rank() + 2 * rs.positive_roots().len(), rs.dimension());
        let distinct: HashSet<_> = rs.positive_roots().iter().collect();
        assert_eq!(distinct.len(), rs.positive_roots().len());
        for i in 0..rs.rank() {
            assert_eq!(rs.positive_roots()[i], rs.simple_root(i + 1).unwrap());
        }
    }
}

#[test]
fn symmetrized_cartan_matrices() {
    for t in all_types(8) {
        let rs = RootSystem::build(t);
        let (a, d) = (rs.cartan(), rs.d());
        for i in 0..rs.rank() {
            assert_eq!(a[i][i], 2);
            assert!((1..=3).contains(&d[i]));
            for j in 0..rs.rank() {
                assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{t} ({i},{j})");
                if i != j {
                    assert!(a[i][j] <= 0);
                }
            }
        }
    }
}

#[test]
fn g2_data() {
    let rs = RootSystem::build(CartanType::new(Letter::G, 2).unwrap());
    let highest = rs.positive_roots().last().unwrap().clone();
    assert_eq!(highest, vec![3, 2]);
    assert_eq!(rs.support(&highest).unwrap(), BTreeSet::from([1, 2]));
    assert_eq!(rs.dimension(), 14);
    assert_eq!(reduced_word(rs.cartan_type()).len(), 6);
}

/// `(α, β)` from the symmetrized matrix `d_i a_ij`.
fn form(rs: &RootSystem, x: &[i64], y: &[i64]) -> i64 {
    let (a, d) = (rs.cartan(), rs.d());
    (0..rs.rank()).flat_map(|i| (0..rs.rank()).map(move |j| (i, j))).map(|(i, j)| x[i] * d[i] * a[i][j] * y[j]).sum()
}

fn reflect(rs: &RootSystem, i: usize, x: &[i64]) -> Vec<i64> {
    let alpha = rs.simple_root(i).unwrap();
    let c = 2 * form(rs, x, &alpha) / form(rs, &alpha, &alpha);
    x.iter().zip(&alpha).map(|(a, b)| a - c * b).collect()
}

#[test]
fn stored_words_give_convex_orders() {
    for t in all_types(4) {
        let rs = RootSystem::build(t);
        let word = reduced_word(t);
        assert_eq!(word.len(), rs.positive_roots().len(), "{t}");
        let beta: Vec<Vec<i64>> = (0..word.len())
            .map(|k| {
                let mut r = rs.simple_root(word[k]).unwrap();
                for &i in word[..k].iter().rev() {
                    r = reflect(&rs, i, &r);
                }
                r
            })
            .collect();
        let stored: HashSet<_> = rs.positive_roots().iter().cloned().collect();
        let got: HashSet<_> = beta.iter().cloned().collect();
        assert_eq!(got.len(), beta.len(), "{t}: repeated root");
        assert_eq!(got, stored, "{t}");
        for j in 0..beta.len() {
            for k in j + 1..beta.len() {
                let sum: Vec<i64> = beta[j].iter().zip(&beta[k]).map(|(a, b)| a + b).collect();
                if let Some(m) = beta.iter().position(|b| *b == sum) {
                    assert!(j < m && m < k, "{t}: β{j} + β{k} = β{m}");
                }
            }
        }
        let order = rs.convex_order().unwrap();
        assert_eq!(order.beta(), beta.as_slice());
        assert!(order.is_bijective(&rs) && order.is_convex(&rs));
    }
}

#[test]
fn all_stored_words_validate() {
    for t in all_types(8) {
        let rs = RootSystem::build(t);
        assert!(rs.convex_order().is_ok(), "{t}");
    }
}

#[test]
fn non_reduced_word_rejected() {
    let rs = RootSystem::build(CartanType::new(Letter::A, 2).unwrap());
    assert!(ConvexOrder::from_word(&rs, vec![1, 1, 2]).is_err());
    assert!(ConvexOrder::from_word(&rs, vec![2, 1, 2]).is_ok());
}

fn type_and_sets() -> impl Strategy<Value = (CartanType, BTreeSet<usize>, BTreeSet<usize>)> {
    prop::sample::select(all_types(8)).prop_flat_map(|t| {
        let n = t.rank();
        (Just(t), prop::collection::btree_set(1..=n, 0..=n), prop::collection::btree_set(1..=n, 0..=n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn psi_is_monotone((t, i, extra) in type_and_sets()) {
        let rs = RootSystem::build(t);
        let j: BTreeSet<usize> = i.union(&extra).copied().collect();
        let pi: HashSet<_> = rs.psi(&i).unwrap().into_iter().collect();
        let pj: HashSet<_> = rs.psi(&j).unwrap().into_iter().collect();
        prop_assert!(pi.is_subset(&pj));
        for r in &pi {
            prop_assert!(rs.support(r).unwrap().is_subset(&i));
        }
        prop_assert_eq!(rs.dim_l(&i, &j).unwrap(), rs.rank() + pi.len() + pj.len());
    }
}
