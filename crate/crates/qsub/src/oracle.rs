//! Drives the rank-one oracle: Hopf axioms of `u_ε(sl₂)`, centrality of the
//! `D^z` characters, and quotient dimensions against the datum formula.
//!
//! At `ℓ = 3` the Hopf axioms are checked on every basis tuple; for larger
//! `ℓ` on [`RANDOM_INSTANCES`] seeded random tuples.

use std::sync::Arc;

use qsub_core::abelian::{subgroups, Element, FinAbGroup, Subgroup, DEFAULT_ENUMERATION_CAP};
use qsub_core::datum::{IndexSet, SubgroupDatum};
use qsub_core::rootsys::{CartanType, Letter, RootSystem};
use qsub_core::uqsl2::{Monomial, SmallQuantumSl2, Subalgebra};
use qsub_core::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::doc::{CheckDoc, OracleDoc, VERSION};

pub const RANDOM_INSTANCES: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    All,
    Hopf,
    Central,
    Quotient,
}

struct Tally {
    name: &'static str,
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            self.first_failure.get_or_insert_with(what);
        }
    }

    fn finish(self) -> CheckDoc {
        CheckDoc {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
            passed: self.failures == 0,
            first_failure: self.first_failure,
        }
    }
}

pub fn run(ell: u64, check: Check) -> Result<OracleDoc> {
    let u = SmallQuantumSl2::new(ell)?;
    let mut checks = Vec::new();
    if matches!(check, Check::All | Check::Hopf) {
        checks.extend(hopf(&u));
    }
    if matches!(check, Check::All | Check::Central) {
        checks.push(central(&u)?);
    }
    if matches!(check, Check::All | Check::Quotient) {
        checks.push(quotient(&u)?);
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(OracleDoc { v: VERSION, ell, checks, passed })
}

fn hopf(u: &SmallQuantumSl2) -> Vec<CheckDoc> {
    let basis: Vec<Monomial> = u.basis().collect();
    let mut assoc = Tally::new("associativity");
    let mut mult = Tally::new("multiplicativity");
    let mut coassoc = Tally::new("coassociativity");
    let mut counit = Tally::new("counit");
    let mut antipode = Tally::new("antipode");
    if u.ell() == 3 {
        for x in &basis {
            coassoc.record(u.coassociativity(x), || format!("{x:?}"));
            counit.record(u.counit_law(x), || format!("{x:?}"));
            antipode.record(u.antipode_law(x), || format!("{x:?}"));
            for y in &basis {
                mult.record(u.multiplicativity(x, y), || format!("{x:?} {y:?}"));
                for z in &basis {
                    assoc.record(u.associativity(x, y, z), || format!("{x:?} {y:?} {z:?}"));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(u.ell());
        let mut pick = || basis[rng.gen_range(0..basis.len())];
        for _ in 0..RANDOM_INSTANCES {
            let (x, y, z) = (pick(), pick(), pick());
            assoc.record(u.associativity(&x, &y, &z), || format!("{x:?} {y:?} {z:?}"));
            mult.record(u.multiplicativity(&x, &y), || format!("{x:?} {y:?}"));
            coassoc.record(u.coassociativity(&x), || format!("{x:?}"));
            counit.record(u.counit_law(&x), || format!("{x:?}"));
            antipode.record(u.antipode_law(&x), || format!("{x:?}"));
        }
    }
    [assoc, mult, coassoc, counit, antipode].into_iter().map(Tally::finish).collect()
}

/// Dimension of the torus of `I^c` for a rank-one subalgebra.
fn complement_rank(sub: Subalgebra) -> usize {
    usize::from(sub == Subalgebra::Torus)
}

fn central(u: &SmallQuantumSl2) -> Result<CheckDoc> {
    let mut t = Tally::new("central");
    for sub in Subalgebra::ALL {
        let torus = FinAbGroup::elementary(u.ell(), complement_rank(sub));
        for z in torus.elements(DEFAULT_ENUMERATION_CAP)? {
            let d = u.d_character(sub, &z.coords)?;
            t.record(u.is_central_dual(&d, sub)?, || format!("D^{:?} on {sub:?}", z.coords));
        }
    }
    Ok(t.finish())
}

/// The rank-one datum `(I₊, I₋, N, 1, 1, 0)` matching a subalgebra.
pub fn rank_one_datum(ell: u64, sub: Subalgebra, n: Subgroup) -> SubgroupDatum {
    let a1 = Arc::new(RootSystem::build(CartanType::new(Letter::A, 1).expect("A1")));
    let (plus, minus) = sub.flags();
    let set = |b: bool| if b { IndexSet::from([1]) } else { IndexSet::new() };
    let delta = vec![Element::new(Vec::new()); n.generators().len()];
    SubgroupDatum::new(a1, ell, set(plus), set(minus), n, FinAbGroup::trivial(), vec![Vec::new()], delta)
}

fn quotient(u: &SmallQuantumSl2) -> Result<CheckDoc> {
    let mut t = Tally::new("quotient");
    for sub in Subalgebra::ALL {
        let ambient = FinAbGroup::elementary(u.ell(), complement_rank(sub));
        for n in subgroups(&ambient, DEFAULT_ENUMERATION_CAP)? {
            let counit = u.counit_dual(sub);
            let gens = n
                .generators()
                .iter()
                .map(|z| u.d_character(sub, &z.coords)?.try_sub(&counit))
                .collect::<Result<Vec<_>>>()?;
            let q = u.quotient_dim(sub, &gens)?;
            let datum = rank_one_datum(u.ell(), sub, n.clone()).validated()?;
            let want = u64::try_from(datum.dim_h()?).map_err(|_| Error::Inconsistent("dim_H overflow".into()))?;
            let got = q.dim as u64;
            t.record(q.generators_central && got == want, || {
                format!("{sub:?}, |N| = {}: quotient {got}, dim_H {want}", n.order())
            });
        }
    }
    Ok(t.finish())
}
