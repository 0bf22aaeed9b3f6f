//! JSON documents. Every top-level document carries `"v": 1`.
//!
//! Homomorphisms are written one row per source generator: `matrix[i]` is the
//! image of generator `i`. Arbitrarily large integers (dimensions) are JSON
//! numbers, never strings.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use qsub_core::abelian::{Element, FinAbGroup, Hom, Subgroup};
use qsub_core::datum::{delta_on_canonical_generators, IndexSet, SubgroupDatum, Violation};
use qsub_core::qarith::{Cyclotomic, CyclotomicField};
use qsub_core::rootsys::{CartanType, Letter, RootSystem};
use qsub_core::Error;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const VERSION: u32 = 1;

/// Why a document could not be turned into a value.
#[derive(Debug, thiserror::Error)]
pub enum DocError {
    /// Malformed document: bad JSON, wrong schema version, unknown type letter.
    #[error("{0}")]
    Format(String),
    /// Well-formed document describing an invalid mathematical object.
    #[error(transparent)]
    Domain(#[from] Error),
}

pub(crate) fn check_version(v: u32) -> Result<(), DocError> {
    if v == VERSION {
        Ok(())
    } else {
        Err(DocError::Format(format!("unsupported schema version {v}, expected {VERSION}")))
    }
}

pub fn cartan_type(letter: &str, rank: usize) -> Result<CartanType, DocError> {
    let mut chars = letter.chars();
    let c = match (chars.next(), chars.next()) {
        (Some(c), None) => c,
        _ => return Err(DocError::Format(format!("type must be a single letter, got {letter:?}"))),
    };
    let l = Letter::from_char(c).map_err(|e| DocError::Format(e.to_string()))?;
    CartanType::new(l, rank).map_err(|e| DocError::Format(e.to_string()))
}

/// Shares one root system per Cartan type across a batch of documents.
#[derive(Default)]
pub struct RootSystems(HashMap<CartanType, Arc<RootSystem>>);

impl RootSystems {
    pub fn get(&mut self, t: CartanType) -> Arc<RootSystem> {
        self.0.entry(t).or_insert_with(|| Arc::new(RootSystem::build(t))).clone()
    }
}

/// Serde adapter writing a [`BigUint`] as a bare JSON number.
pub mod big {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let num = serde_json::Number::from_str(&n.to_string()).map_err(serde::ser::Error::custom)?;
        num.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let num = serde_json::Number::deserialize(d)?;
        BigUint::from_str(&num.to_string()).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub factors: Vec<u64>,
}

impl GroupDoc {
    pub fn of(g: &FinAbGroup) -> Self {
        GroupDoc { factors: g.factors().to_vec() }
    }

    /// Accepts any list of cyclic orders and normalizes to invariant factors.
    pub fn to_group(&self) -> Result<FinAbGroup, DocError> {
        Ok(FinAbGroup::from_cyclic_orders(&self.factors)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupDoc {
    pub gens: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub matrix: Vec<Vec<u64>>,
}

impl HomDoc {
    pub fn of(h: &Hom) -> Self {
        HomDoc { matrix: (0..h.source().rank()).map(|i| h.image_of_generator(i).coords).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclotomicDoc {
    pub ell: u64,
    pub coeffs: Vec<String>,
}

impl CyclotomicDoc {
    /// Coefficients in the power basis `1, ε, …, ε^{φ(ℓ)−1}`, as `"p/q"`.
    pub fn of(x: &Cyclotomic) -> Self {
        let coeffs = x.coeffs().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
        CyclotomicDoc { ell: x.ell(), coeffs }
    }

    pub fn to_cyclotomic(&self) -> Result<Cyclotomic, DocError> {
        let field = CyclotomicField::new(self.ell)?;
        if self.coeffs.len() > field.degree() {
            return Err(DocError::Format(format!(
                "{} coefficients given, field degree is {}",
                self.coeffs.len(),
                field.degree()
            )));
        }
        let poly = self
            .coeffs
            .iter()
            .map(|s| BigRational::from_str(s).map_err(|_| DocError::Format(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclotomic::from_polynomial(&field, &poly))
    }
}

/// A subgroup datum `(I₊, I₋, N, Γ, σ, δ)`.
///
/// `N` lives in `(ℤ/ℓ)^s` with coordinates indexed by the complement of
/// `I₊ ∪ I₋` in increasing order. `sigma[j][k]` is the phase (in units of
/// `1/exp Γ`) of the `j`-th torus coordinate on the `k`-th generator of `Γ`.
/// `delta.matrix[i]` is the character of `Γ` assigned to `N.gens[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDoc {
    pub v: u32,
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    pub ell: u64,
    #[serde(rename = "Iplus")]
    pub iplus: Vec<usize>,
    #[serde(rename = "Iminus")]
    pub iminus: Vec<usize>,
    #[serde(rename = "N")]
    pub n: SubgroupDoc,
    #[serde(rename = "Gamma")]
    pub gamma: GroupDoc,
    pub sigma: Vec<Vec<u64>>,
    pub delta: HomDoc,
}

impl DatumDoc {
    /// Canonical form: generators of `N` are its canonical generators.
    pub fn of(d: &SubgroupDatum) -> Self {
        let t = d.root_system().cartan_type();
        DatumDoc {
            v: VERSION,
            letter: t.letter().as_char().to_string(),
            rank: t.rank(),
            ell: d.ell(),
            iplus: d.iplus().iter().copied().collect(),
            iminus: d.iminus().iter().copied().collect(),
            n: SubgroupDoc { gens: d.n().generators().iter().map(|g| g.coords.clone()).collect() },
            gamma: GroupDoc::of(d.gamma()),
            sigma: d.sigma().to_vec(),
            delta: HomDoc { matrix: d.delta().iter().map(|x| x.coords.clone()).collect() },
        }
    }

    /// Builds and validates the datum.
    pub fn to_datum(&self, systems: &mut RootSystems) -> Result<SubgroupDatum, DocError> {
        check_version(self.v)?;
        let rs = systems.get(cartan_type(&self.letter, self.rank)?);
        if self.ell < 3 || self.ell.is_multiple_of(2) {
            return Err(Error::InvalidDatum(vec![Violation::EllNotOddOrTooSmall(self.ell)]).into());
        }
        let iplus: IndexSet = self.iplus.iter().copied().collect();
        let iminus: IndexSet = self.iminus.iter().copied().collect();
        let s = (1..=self.rank).filter(|i| !iplus.contains(i) && !iminus.contains(i)).count();
        let ambient = FinAbGroup::elementary(self.ell, s);
        let gens: Vec<Element> = self.n.gens.iter().cloned().map(Element::new).collect();
        let n = Subgroup::generated_by(&ambient, &gens)
            .map_err(|_| Error::InvalidDatum(vec![Violation::NAmbient { expected_rank: s }]))?;
        let gamma = self.gamma.to_group()?;
        let images: Vec<Element> = self.delta.matrix.iter().cloned().map(Element::new).collect();
        let delta = delta_on_canonical_generators(&n, &gens, &images, &gamma)?;
        let d = SubgroupDatum::new(rs, self.ell, iplus, iminus, n, gamma, self.sigma.clone(), delta);
        Ok(d.validated()?)
    }
}

/// A list of data over one root system, input to `poset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub v: u32,
    pub data: Vec<DatumDoc>,
}

impl FamilyDoc {
    pub fn of(family: &[SubgroupDatum]) -> Self {
        FamilyDoc { v: VERSION, data: family.iter().map(DatumDoc::of).collect() }
    }

    pub fn to_family(&self) -> Result<Vec<SubgroupDatum>, DocError> {
        check_version(self.v)?;
        let mut systems = RootSystems::default();
        self.data.iter().map(|d| d.to_datum(&mut systems)).collect()
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(|e| DocError::Format(format!("invalid JSON: {e}")))
}

/// Compact JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsDims {
    pub rank: usize,
    pub positive_roots: usize,
    pub lie_algebra: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvexOrderDoc {
    pub word: Vec<usize>,
    pub beta: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsDoc {
    pub v: u32,
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub positive_roots: Vec<Vec<i64>>,
    pub dims: RootsDims,
    pub convex_order: ConvexOrderDoc,
}

impl RootsDoc {
    pub fn of(rs: &RootSystem) -> Result<Self, Error> {
        let t = rs.cartan_type();
        let order = rs.convex_order()?;
        Ok(RootsDoc {
            v: VERSION,
            letter: t.letter().as_char().to_string(),
            rank: t.rank(),
            cartan: rs.cartan().to_vec(),
            d: rs.d().to_vec(),
            positive_roots: rs.positive_roots().to_vec(),
            dims: RootsDims { rank: rs.rank(), positive_roots: rs.positive_roots().len(), lie_algebra: rs.dimension() },
            convex_order: ConvexOrderDoc { word: order.reduced_word().to_vec(), beta: order.beta().to_vec() },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimDoc {
    pub v: u32,
    #[serde(with = "big")]
    pub dim_uel: BigUint,
    #[serde(rename = "dim_H", with = "big")]
    pub dim_h: BigUint,
    #[serde(rename = "dim_AD", with = "big")]
    pub dim_ad: BigUint,
    pub sigma_order: u64,
}

impl DimDoc {
    pub fn of(d: &SubgroupDatum) -> Result<Self, Error> {
        let everything: IndexSet = (1..=d.rank()).collect();
        Ok(DimDoc {
            v: VERSION,
            dim_uel: qsub_core::datum::dim_uel(d.root_system(), d.ell(), &everything, &everything)?,
            dim_h: d.dim_h()?,
            dim_ad: d.dim_ad()?,
            sigma_order: d.sigma_group()?.sigma().order(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub tau: HomDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeqDoc {
    pub v: u32,
    pub leq: bool,
    pub geq: bool,
    pub equiv: bool,
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub rep: DatumDoc,
    pub members: Vec<usize>,
}

/// `edges` are covering relations `[i, j]`: class `i` lies below class `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub v: u32,
    pub classes: Vec<ClassDoc>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsDoc {
    pub gamma: u64,
    #[serde(rename = "enum")]
    pub enumeration: u64,
    pub ell: u64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusParams {
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    pub ell: u64,
    pub gammas: Vec<GroupDoc>,
    pub caps: CapsDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusClassDoc {
    pub rep: DatumDoc,
    pub size: usize,
    #[serde(rename = "dim_AD", with = "big")]
    pub dim_ad: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HistogramEntry {
    #[serde(rename = "dim_AD", with = "big")]
    pub dim_ad: BigUint,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HasseDoc {
    pub edges: Vec<[usize; 2]>,
    pub maximal: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusDoc {
    pub v: u32,
    pub params: CensusParams,
    pub data_count: usize,
    pub class_count: usize,
    pub classes: Vec<CensusClassDoc>,
    pub dim_histogram: Vec<HistogramEntry>,
    pub hasse: HasseDoc,
}

pub(crate) fn histogram(h: &BTreeMap<BigUint, usize>) -> Vec<HistogramEntry> {
    h.iter().map(|(d, &c)| HistogramEntry { dim_ad: d.clone(), classes: c }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckDoc {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleDoc {
    pub v: u32,
    pub ell: u64,
    pub checks: Vec<CheckDoc>,
    pub passed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsub_core::abelian::FinAbGroup;

    fn a1() -> Arc<RootSystem> {
        Arc::new(RootSystem::build(CartanType::new(Letter::A, 1).unwrap()))
    }

    #[test]
    fn datum_round_trip() {
        let mut sys = RootSystems::default();
        for d in [SubgroupDatum::full(a1(), 3), SubgroupDatum::counit(a1(), 5)] {
            let doc = DatumDoc::of(&d);
            let back: DatumDoc = parse(&render(&doc)).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_datum(&mut sys).unwrap(), d);
        }
    }

    #[test]
    fn delta_given_on_other_generators() {
        // N = ⟨2⟩ = (ℤ/3), Γ = ℤ/3, δ(2) = 2 means δ(1) = 1 on the canonical generator
        let text = r#"{"v":1,"type":"A","rank":1,"ell":3,"Iplus":[],"Iminus":[],
            "N":{"gens":[[2]]},"Gamma":{"factors":[3]},"sigma":[[1]],"delta":{"matrix":[[2]]}}"#;
        let doc: DatumDoc = parse(text).unwrap();
        let d = doc.to_datum(&mut RootSystems::default()).unwrap();
        assert_eq!(d.n().generators()[0].coords, vec![1]);
        assert_eq!(d.delta()[0].coords, vec![1]);
        assert_eq!(d.gamma(), &FinAbGroup::cyclic(3).unwrap());
    }

    #[test]
    fn schema_errors_are_format_errors() {
        let bad_version = r#"{"v":2,"type":"A","rank":1,"ell":3,"Iplus":[1],"Iminus":[1],
            "N":{"gens":[]},"Gamma":{"factors":[]},"sigma":[[]],"delta":{"matrix":[]}}"#;
        let doc: DatumDoc = parse(bad_version).unwrap();
        assert!(matches!(doc.to_datum(&mut RootSystems::default()), Err(DocError::Format(_))));
        assert!(matches!(parse::<DatumDoc>("{"), Err(DocError::Format(_))));
        assert!(matches!(cartan_type("Q", 2), Err(DocError::Format(_))));
        assert!(matches!(cartan_type("E", 9), Err(DocError::Format(_))));
    }

    #[test]
    fn invalid_datum_is_a_domain_error() {
        // σ not injective: Γ = ℤ/2 sent to the identity
        let text = r#"{"v":1,"type":"A","rank":1,"ell":3,"Iplus":[1],"Iminus":[],
            "N":{"gens":[]},"Gamma":{"factors":[2]},"sigma":[[0]],"delta":{"matrix":[]}}"#;
        let doc: DatumDoc = parse(text).unwrap();
        match doc.to_datum(&mut RootSystems::default()) {
            Err(DocError::Domain(Error::InvalidDatum(v))) => assert!(v.contains(&Violation::SigmaNotInjective)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cyclotomic_round_trip() {
        let f = CyclotomicField::new(5).unwrap();
        let x = (&Cyclotomic::root_power(&f, 1) + &Cyclotomic::from_integer(&f, 1)).inverse().unwrap();
        let doc = CyclotomicDoc::of(&x);
        let back: CyclotomicDoc = parse(&render(&doc)).unwrap();
        assert_eq!(back.to_cyclotomic().unwrap(), x);
        assert!(CyclotomicDoc { ell: 3, coeffs: vec!["1/0".into()] }.to_cyclotomic().is_err());
    }

    #[test]
    fn big_numbers_stay_numbers() {
        let e8 = RootSystem::build(CartanType::new(Letter::E, 8).unwrap());
        let d = SubgroupDatum::full(Arc::new(e8), 7);
        let doc = DimDoc::of(&d).unwrap();
        let text = render(&doc);
        assert!(text.contains(&format!("\"dim_AD\":{}", BigUint::from(7u32).pow(248))));
        assert_eq!(parse::<DimDoc>(&text).unwrap(), doc);
    }
}
