//! JSON encodings of roots, squares, forms, equation sets, vectors and words.

use serde::{Deserialize, Serialize};

use crate::adjoint::{AdjointVector, Elementary, Word};
use crate::equations::{EquationSet, FormCounts, FormKey, FormKind, QuadraticForm, Term};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingSpec};
use crate::root_system::{Root, RootId, RootSystem, SystemId, Weight};
use crate::squares::MaximalSquare;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightJson {
    Root { root: Vec<i32> },
    Zero { zero: usize },
}

impl WeightJson {
    pub fn from_weight(rs: &RootSystem, w: Weight) -> Self {
        match w {
            Weight::Root(r) => WeightJson::Root { root: rs.root(r).coeffs().to_vec() },
            Weight::Zero(s) => WeightJson::Zero { zero: s },
        }
    }

    pub fn to_weight(&self, rs: &RootSystem) -> Result<Weight> {
        match self {
            WeightJson::Root { root } => Ok(Weight::Root(root_id(rs, root)?)),
            WeightJson::Zero { zero } => {
                if *zero == 0 || *zero > rs.rank() {
                    Err(Error::Parse(format!("zero weight index {} out of 1..={}", zero, rs.rank())))
                } else {
                    Ok(Weight::Zero(*zero))
                }
            }
        }
    }
}

pub fn root_id(rs: &RootSystem, coeffs: &[i32]) -> Result<RootId> {
    if coeffs.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: coeffs.len() });
    }
    rs.find(coeffs).ok_or_else(|| Error::InvalidRoot(coeffs.to_vec()))
}

pub fn parse_root(rs: &RootSystem, text: &str) -> Result<RootId> {
    let coeffs: Vec<i32> = serde_json::from_str(text)?;
    root_id(rs, &coeffs)
}

pub fn roots_json(rs: &RootSystem) -> Vec<&Root> {
    rs.roots().iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareJson {
    pub sigma: Vec<i32>,
    pub pairs: Vec<[Vec<i32>; 2]>,
}

impl SquareJson {
    pub fn new(rs: &RootSystem, sq: &MaximalSquare) -> Self {
        SquareJson {
            sigma: sq.sigma().to_vec(),
            pairs: sq
                .pairs()
                .iter()
                .map(|&(a, b)| [rs.root(a).coeffs().to_vec(), rs.root(b).coeffs().to_vec()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KeyJson {
    Sigma { sigma: Vec<i32> },
    Pair { alpha: Vec<i32>, beta: Vec<i32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub a: WeightJson,
    pub b: WeightJson,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub kind: FormKind,
    pub key: KeyJson,
    pub monomials: Vec<MonomialJson>,
}

impl FormJson {
    pub fn new(rs: &RootSystem, f: &QuadraticForm) -> Self {
        let coeffs = |r: RootId| rs.root(r).coeffs().to_vec();
        let key = match f.key() {
            FormKey::Pi2 { sigma } => KeyJson::Sigma { sigma: sigma.clone() },
            FormKey::TwoPi3 { alpha, beta } | FormKey::Pi { alpha, beta } => {
                KeyJson::Pair { alpha: coeffs(*alpha), beta: coeffs(*beta) }
            }
        };
        let w = |p: u32| WeightJson::from_weight(rs, rs.weight_at(p as usize));
        FormJson {
            kind: f.kind(),
            key,
            monomials: f.terms().iter().map(|t| MonomialJson { a: w(t.a), b: w(t.b), c: t.c }).collect(),
        }
    }

    pub fn to_form(&self, rs: &RootSystem) -> Result<QuadraticForm> {
        let key = match (&self.kind, &self.key) {
            (FormKind::Pi2, KeyJson::Sigma { sigma }) => FormKey::Pi2 { sigma: sigma.clone() },
            (FormKind::TwoPi3, KeyJson::Pair { alpha, beta }) => {
                FormKey::TwoPi3 { alpha: root_id(rs, alpha)?, beta: root_id(rs, beta)? }
            }
            (FormKind::Pi, KeyJson::Pair { alpha, beta }) => {
                let (a, b) = (root_id(rs, alpha)?, root_id(rs, beta)?);
                FormKey::Pi { alpha: a.min(b), beta: a.max(b) }
            }
            (kind, _) => return Err(Error::Parse(format!("key does not match form kind {}", kind.label()))),
        };
        let mut terms = Vec::with_capacity(self.monomials.len());
        for m in &self.monomials {
            let a = rs.position(m.a.to_weight(rs)?) as u32;
            let b = rs.position(m.b.to_weight(rs)?) as u32;
            terms.push(Term { a, b, c: m.c });
        }
        Ok(QuadraticForm::from_terms(rs.id(), key, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationMetadata {
    /// `2pi/3` forms are emitted for both orders of each orthogonal pair.
    pub two_pi3_ordered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationFile {
    pub system: SystemId,
    pub counts: FormCounts,
    pub metadata: EquationMetadata,
    pub forms: Vec<FormJson>,
}

impl EquationFile {
    pub fn new(rs: &RootSystem, set: &EquationSet) -> Self {
        EquationFile {
            system: set.system(),
            counts: set.counts(),
            metadata: EquationMetadata { two_pi3_ordered: true },
            forms: set.forms().iter().map(|f| FormJson::new(rs, f)).collect(),
        }
    }

    pub fn to_equation_set(&self, rs: &RootSystem) -> Result<EquationSet> {
        if self.system != rs.id() {
            return Err(Error::SystemMismatch { expected: rs.id().to_string(), got: self.system.to_string() });
        }
        let forms = self.forms.iter().map(|f| f.to_form(rs)).collect::<Result<Vec<_>>>()?;
        let set = EquationSet::from_forms(rs.id(), forms)?;
        if set.counts() != self.counts {
            return Err(Error::Parse("form counts in header do not match the forms".into()));
        }
        Ok(set)
    }
}

pub fn equations_to_string(rs: &RootSystem, set: &EquationSet) -> Result<String> {
    Ok(serde_json::to_string(&EquationFile::new(rs, set))?)
}

pub fn equations_from_str(rs: &RootSystem, text: &str) -> Result<EquationSet> {
    serde_json::from_str::<EquationFile>(text)?.to_equation_set(rs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorFile {
    pub system: SystemId,
    pub ring: String,
    pub coords: Vec<String>,
}

impl VectorFile {
    pub fn new<R: Ring>(ring: &R, v: &AdjointVector<R::Elem>) -> Self {
        VectorFile {
            system: v.system(),
            ring: ring.spec().to_string(),
            coords: v.coords().iter().map(|c| ring.format_elem(c)).collect(),
        }
    }

    pub fn ring_spec(&self) -> Result<RingSpec> {
        self.ring.parse()
    }

    pub fn to_vector<R: Ring>(&self, rs: &RootSystem, ring: &R) -> Result<AdjointVector<R::Elem>> {
        if self.system != rs.id() {
            return Err(Error::SystemMismatch { expected: rs.id().to_string(), got: self.system.to_string() });
        }
        let spec = self.ring_spec()?;
        if spec != ring.spec() {
            return Err(Error::RingMismatch { expected: ring.spec().to_string(), got: spec.to_string() });
        }
        let coords = self.coords.iter().map(|c| ring.parse_elem(c)).collect::<Result<Vec<_>>>()?;
        AdjointVector::new(rs, coords)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryJson {
    pub rho: Vec<i32>,
    pub xi: String,
}

pub fn word_to_json<R: Ring>(rs: &RootSystem, ring: &R, w: &Word<R::Elem>) -> Vec<ElementaryJson> {
    w.factors
        .iter()
        .map(|e| ElementaryJson { rho: rs.root(e.rho).coeffs().to_vec(), xi: ring.format_elem(&e.xi) })
        .collect()
}

pub fn word_from_json<R: Ring>(rs: &RootSystem, ring: &R, factors: &[ElementaryJson]) -> Result<Word<R::Elem>> {
    let factors = factors
        .iter()
        .map(|e| Ok(Elementary::new(root_id(rs, &e.rho)?, ring.parse_elem(&e.xi)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::new(factors))
}
