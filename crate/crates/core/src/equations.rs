//! The three families of quadratic forms vanishing on the highest weight
//! vector orbit: `f^{pi/2}` (one per maximal square), `f^{2pi/3}` (one per
//! ordered orthogonal pair) and `f^{pi}` (one per unordered orthogonal pair).

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adjoint::AdjointVector;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::root_system::{RootId, RootSystem, SystemId};
use crate::signs::SignTable;
use crate::squares::{pair_sets, rooted_square, square_of_pair, MaximalSquare, SquareCatalog};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormKind {
    #[serde(rename = "pi/2")]
    Pi2,
    #[serde(rename = "2pi/3")]
    TwoPi3,
    #[serde(rename = "pi")]
    Pi,
}

impl FormKind {
    pub const ALL: [FormKind; 3] = [FormKind::Pi2, FormKind::TwoPi3, FormKind::Pi];

    pub fn label(self) -> &'static str {
        match self {
            FormKind::Pi2 => "pi/2",
            FormKind::TwoPi3 => "2pi/3",
            FormKind::Pi => "pi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKey {
    Pi2 { sigma: Vec<i32> },
    TwoPi3 { alpha: RootId, beta: RootId },
    /// Unordered; `alpha < beta`.
    Pi { alpha: RootId, beta: RootId },
}

impl FormKey {
    pub fn kind(&self) -> FormKind {
        match self {
            FormKey::Pi2 { .. } => FormKind::Pi2,
            FormKey::TwoPi3 { .. } => FormKind::TwoPi3,
            FormKey::Pi { .. } => FormKind::Pi,
        }
    }
}

/// `c * v_a * v_b` with weight positions `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub a: u32,
    pub b: u32,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    system: SystemId,
    key: FormKey,
    terms: Vec<Term>,
}

#[derive(Default)]
struct Builder {
    acc: BTreeMap<(u32, u32), i64>,
}

impl Builder {
    fn add(&mut self, x: usize, y: usize, c: i64) {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        *self.acc.entry((a as u32, b as u32)).or_insert(0) += c;
    }

    fn finish(self, system: SystemId, key: FormKey) -> QuadraticForm {
        let terms = self
            .acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((a, b), c)| Term { a, b, c })
            .collect();
        QuadraticForm { system, key, terms }
    }
}

impl QuadraticForm {
    /// Assembles a form from raw monomials, merging repeats.
    pub fn from_terms(system: SystemId, key: FormKey, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut b = Builder::default();
        for t in terms {
            b.add(t.a as usize, t.b as usize, t.c);
        }
        b.finish(system, key)
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn kind(&self) -> FormKind {
        self.key.kind()
    }

    pub fn key(&self) -> &FormKey {
        &self.key
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn coefficient(&self, x: usize, y: usize) -> i64 {
        let (a, b) = if x <= y { (x as u32, y as u32) } else { (y as u32, x as u32) };
        self.terms.iter().find(|t| t.a == a && t.b == b).map_or(0, |t| t.c)
    }

    pub fn scaled(&self, k: i64) -> QuadraticForm {
        QuadraticForm {
            system: self.system,
            key: self.key.clone(),
            terms: self.terms.iter().map(|t| Term { c: t.c * k, ..*t }).filter(|t| t.c != 0).collect(),
        }
    }

    /// Same monomials and coefficients, keys ignored.
    pub fn same_polynomial(&self, other: &QuadraticForm) -> bool {
        self.system == other.system && self.terms == other.terms
    }

    /// Number of monomials involving at least one zero-weight coordinate.
    pub fn zero_weight_terms(&self, rs: &RootSystem) -> usize {
        let n = rs.len() as u32;
        self.terms.iter().filter(|t| t.a >= n || t.b >= n).count()
    }
}

fn check_orthogonal(rs: &RootSystem, a: RootId, b: RootId) -> Result<()> {
    if rs.inner(a, b) != 0 {
        Err(Error::InvalidPair(rs.root(a).coeffs().to_vec(), rs.root(b).coeffs().to_vec()))
    } else {
        Ok(())
    }
}

/// `f^{pi/2}_{alpha,beta}`, normalized so that `v_alpha v_beta` has coefficient 1.
pub fn pi2_rooted(rs: &RootSystem, signs: &SignTable, a: RootId, b: RootId) -> Result<QuadraticForm> {
    let sq = square_of_pair(rs, a, b)?;
    let mut f = Builder::default();
    f.add(a.index(), b.index(), 1);
    let ab = if a < b { (a, b) } else { (b, a) };
    for &(g, d) in sq.pairs() {
        let gd = if g < d { (g, d) } else { (d, g) };
        if gd == ab {
            continue;
        }
        let c = signs.n(a, rs.neg(g)) * signs.n(b, rs.neg(d));
        f.add(g.index(), d.index(), -(c as i64));
    }
    Ok(f.finish(rs.id(), FormKey::Pi2 { sigma: sq.sigma().to_vec() }))
}

/// The square's `pi/2` form, rooted at its first canonical pair.
pub fn eq_pi2(rs: &RootSystem, signs: &SignTable, sq: &MaximalSquare) -> QuadraticForm {
    pi2_rooted(rs, signs, sq.member(1), sq.member(-1)).expect("square pairs are orthogonal")
}

fn add_zero_block(rs: &RootSystem, f: &mut Builder, a: RootId, b: RootId) {
    // -(sum_s <a,alpha_s> v^_s)(sum_t <b,alpha_t> v^_t)
    for s in 1..=rs.rank() {
        let ps = rs.pairing(a, s) as i64;
        if ps == 0 {
            continue;
        }
        for t in 1..=rs.rank() {
            let pt = rs.pairing(b, t) as i64;
            if pt != 0 {
                f.add(rs.zero_position(s), rs.zero_position(t), -ps * pt);
            }
        }
    }
}

fn add_root_times_zero(rs: &RootSystem, f: &mut Builder, root: RootId, beta: RootId, sign: i64) {
    for s in 1..=rs.rank() {
        let p = rs.pairing(beta, s) as i64;
        if p != 0 {
            f.add(root.index(), rs.zero_position(s), sign * p);
        }
    }
}

/// `f^{2pi/3}_{alpha,beta}` via the square of `(alpha, beta)`:
/// `sum_{i != +-1} N_{b1,-bi} v_{b1-bi} v_{bi} - v_{b1} sum_s <b-1,alpha_s> v^_s`.
pub fn eq_2pi3(rs: &RootSystem, signs: &SignTable, a: RootId, b: RootId) -> Result<QuadraticForm> {
    check_orthogonal(rs, a, b)?;
    let sq = rooted_square(rs, a, b)?;
    let mut f = Builder::default();
    for i in sq.indices().filter(|&i| i != 1 && i != -1) {
        let bi = sq.member(i);
        let d = rs.diff(a, bi).expect("beta_1 - beta_i is a root");
        f.add(d.index(), bi.index(), signs.n(a, rs.neg(bi)) as i64);
    }
    add_root_times_zero(rs, &mut f, a, b, -1);
    Ok(f.finish(rs.id(), FormKey::TwoPi3 { alpha: a, beta: b }))
}

/// `f^{2pi/3}_{alpha,beta}` straight from its definition through `S_2pi/3`.
pub fn eq_2pi3_raw(rs: &RootSystem, signs: &SignTable, a: RootId, b: RootId) -> Result<QuadraticForm> {
    let sets = pair_sets(rs, a, b)?;
    let mut f = Builder::default();
    for &(x, y) in &sets.two_pi3 {
        let (g, d) = if rs.inner(x, b) == 1 { (x, y) } else { (y, x) };
        f.add(g.index(), d.index(), -(signs.n(g, d) as i64));
    }
    add_root_times_zero(rs, &mut f, a, b, -1);
    Ok(f.finish(rs.id(), FormKey::TwoPi3 { alpha: a, beta: b }))
}

fn pi_key(a: RootId, b: RootId) -> FormKey {
    if a < b {
        FormKey::Pi { alpha: a, beta: b }
    } else {
        FormKey::Pi { alpha: b, beta: a }
    }
}

/// `f^{pi}_{alpha,beta}` via the square:
/// `sum_{i != +-1} (v_{b1-bi} v_{bi-b1} - v_{-bi} v_{bi}) - (zero block)`.
pub fn eq_pi(rs: &RootSystem, signs: &SignTable, a: RootId, b: RootId) -> Result<QuadraticForm> {
    let _ = signs;
    check_orthogonal(rs, a, b)?;
    let sq = rooted_square(rs, a, b)?;
    let mut f = Builder::default();
    for i in sq.indices().filter(|&i| i != 1 && i != -1) {
        let bi = sq.member(i);
        let d = rs.diff(a, bi).expect("beta_1 - beta_i is a root");
        f.add(d.index(), rs.neg(d).index(), 1);
        f.add(rs.neg(bi).index(), bi.index(), -1);
    }
    add_zero_block(rs, &mut f, a, b);
    Ok(f.finish(rs.id(), pi_key(a, b)))
}

/// `f^{pi}_{alpha,beta}` from its definition through `S_pi` and `S'_pi`.
pub fn eq_pi_raw(rs: &RootSystem, a: RootId, b: RootId) -> Result<QuadraticForm> {
    let sets = pair_sets(rs, a, b)?;
    let mut f = Builder::default();
    for &(g, d) in &sets.pi_prime {
        f.add(g.index(), d.index(), 1);
    }
    for &(g, d) in &sets.pi {
        f.add(g.index(), d.index(), -1);
    }
    add_zero_block(rs, &mut f, a, b);
    Ok(f.finish(rs.id(), pi_key(a, b)))
}

/// Evaluates `sum c v_a v_b` in `ring`; integer coefficients go through `Z -> R`.
pub fn evaluate_form<R: Ring>(ring: &R, form: &QuadraticForm, v: &AdjointVector<R::Elem>) -> Result<R::Elem> {
    if v.system() != form.system {
        return Err(Error::SystemMismatch { expected: form.system.to_string(), got: v.system().to_string() });
    }
    if v.len() != form.system.adjoint_dim() {
        return Err(Error::DimensionMismatch { expected: form.system.adjoint_dim(), got: v.len() });
    }
    Ok(eval_terms(ring, &form.terms, v.coords()))
}

fn eval_terms<R: Ring>(ring: &R, terms: &[Term], v: &[R::Elem]) -> R::Elem {
    let mut acc = ring.zero();
    for t in terms {
        let x = &v[t.a as usize];
        let y = &v[t.b as usize];
        if ring.is_zero(x) || ring.is_zero(y) {
            continue;
        }
        let p = ring.mul(x, y);
        acc = match t.c {
            1 => ring.add(&acc, &p),
            -1 => ring.sub(&acc, &p),
            c => ring.add(&acc, &ring.mul(&ring.from_int(c), &p)),
        };
    }
    acc
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormCounts {
    #[serde(rename = "pi/2")]
    pub pi2: usize,
    #[serde(rename = "2pi/3")]
    pub two_pi3: usize,
    #[serde(rename = "pi")]
    pub pi: usize,
}

impl FormCounts {
    pub fn total(&self) -> usize {
        self.pi2 + self.two_pi3 + self.pi
    }
}

#[derive(Clone, Debug)]
pub struct EquationSet {
    system: SystemId,
    forms: Vec<QuadraticForm>,
    index: HashMap<FormKey, usize>,
}

impl EquationSet {
    pub fn from_forms(system: SystemId, forms: Vec<QuadraticForm>) -> Result<Self> {
        let mut index = HashMap::with_capacity(forms.len());
        for (i, f) in forms.iter().enumerate() {
            if f.system != system {
                return Err(Error::SystemMismatch { expected: system.to_string(), got: f.system.to_string() });
            }
            index.insert(f.key.clone(), i);
        }
        Ok(EquationSet { system, forms, index })
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn get(&self, key: &FormKey) -> Option<&QuadraticForm> {
        self.index.get(key).map(|&i| &self.forms[i])
    }

    pub fn counts(&self) -> FormCounts {
        let mut c = FormCounts::default();
        for f in &self.forms {
            match f.kind() {
                FormKind::Pi2 => c.pi2 += 1,
                FormKind::TwoPi3 => c.two_pi3 += 1,
                FormKind::Pi => c.pi += 1,
            }
        }
        c
    }

    pub fn filter(&self, kinds: &[FormKind]) -> EquationSet {
        let forms = self.forms.iter().filter(|f| kinds.contains(&f.kind())).cloned().collect();
        EquationSet::from_forms(self.system, forms).expect("same system")
    }

    /// Indices of the forms that do not vanish on `v`.
    pub fn nonvanishing<R: Ring>(&self, ring: &R, v: &AdjointVector<R::Elem>) -> Result<Vec<usize>> {
        if v.system() != self.system {
            return Err(Error::SystemMismatch { expected: self.system.to_string(), got: v.system().to_string() });
        }
        if v.len() != self.system.adjoint_dim() {
            return Err(Error::DimensionMismatch { expected: self.system.adjoint_dim(), got: v.len() });
        }
        let coords = v.coords();
        Ok(self
            .forms
            .par_iter()
            .enumerate()
            .filter(|(_, f)| !ring.is_zero(&eval_terms(ring, &f.terms, coords)))
            .map(|(i, _)| i)
            .collect())
    }

    pub fn all_vanish<R: Ring>(&self, ring: &R, v: &AdjointVector<R::Elem>) -> Result<bool> {
        if v.system() != self.system {
            return Err(Error::SystemMismatch { expected: self.system.to_string(), got: v.system().to_string() });
        }
        let coords = v.coords();
        Ok(self.forms.par_iter().all(|f| ring.is_zero(&eval_terms(ring, &f.terms, coords))))
    }
}

/// Forms of the requested kinds, in the order: `pi/2` by `sigma`, `2pi/3`
/// by ordered pair, `pi` by unordered pair.
pub fn generate_equations(rs: &RootSystem, signs: &SignTable, kinds: &[FormKind]) -> EquationSet {
    let mut forms = Vec::new();
    if kinds.contains(&FormKind::Pi2) {
        let catalog = SquareCatalog::new(rs);
        forms.extend(catalog.squares().par_iter().map(|sq| eq_pi2(rs, signs, sq)).collect::<Vec<_>>());
    }
    let pairs: Vec<(RootId, RootId)> = rs
        .ids()
        .flat_map(|a| rs.ids().map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && rs.inner(a, b) == 0)
        .collect();
    if kinds.contains(&FormKind::TwoPi3) {
        forms.extend(pairs.par_iter().map(|&(a, b)| eq_2pi3(rs, signs, a, b).unwrap()).collect::<Vec<_>>());
    }
    if kinds.contains(&FormKind::Pi) {
        forms.extend(
            pairs.par_iter().filter(|(a, b)| a < b).map(|&(a, b)| eq_pi(rs, signs, a, b).unwrap()).collect::<Vec<_>>(),
        );
    }
    EquationSet::from_forms(rs.id(), forms).expect("forms built for this system")
}

pub fn generate_all_equations(rs: &RootSystem, signs: &SignTable) -> EquationSet {
    generate_equations(rs, signs, &FormKind::ALL)
}
