//! Simply-laced root systems `D_l` (`l >= 5`) and `E_6`, `E_7`, `E_8`.
//!
//! Roots are integer coefficient vectors in the basis of fundamental roots
//! (Bourbaki numbering). All roots have unit length, so every scalar product
//! is half-integral; we store doubled products, which coincide with the
//! Cartan numbers `<alpha, beta>`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `D_l` rank accepted. Tables are dense in the number of roots.
pub const MAX_D_RANK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemId {
    family: Family,
    rank: usize,
}

impl SystemId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::D => (5..=MAX_D_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(SystemId { family, rank })
        } else {
            Err(Error::UnsupportedSystem(format!("{:?}{}", family, rank)))
        }
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of the adjoint module: `l(2l-1)`, 78, 133, 248.
    pub fn adjoint_dim(&self) -> usize {
        match (self.family, self.rank) {
            (Family::D, l) => l * (2 * l - 1),
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, _) => 248,
        }
    }

    /// The constant `k = l, 4, 5, 7`.
    ///
    /// For `E_l` every maximal square has exactly `k` orthogonal pairs. For
    /// `D_l` the squares come in two sizes (3 and `l - 1` pairs), so use
    /// [`crate::squares::MaximalSquare::pairs_len`] for per-square counts.
    pub fn k(&self) -> usize {
        match (self.family, self.rank) {
            (Family::D, l) => l,
            (Family::E, 6) => 4,
            (Family::E, 7) => 5,
            (Family::E, _) => 7,
        }
    }

    pub fn num_roots(&self) -> usize {
        self.adjoint_dim() - self.rank
    }

    /// The five systems exercised by the test and verification suites.
    pub fn standard() -> Vec<SystemId> {
        vec![
            SystemId { family: Family::D, rank: 5 },
            SystemId { family: Family::D, rank: 6 },
            SystemId { family: Family::E, rank: 6 },
            SystemId { family: Family::E, rank: 7 },
            SystemId { family: Family::E, rank: 8 },
        ]
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for SystemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedSystem(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse::<usize>().map_err(|_| bad())?;
        SystemId::new(family, rank)
    }
}

impl Serialize for SystemId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SystemId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root as its coefficient vector `m_s(alpha)` in the fundamental basis.
///
/// Ordering is lexicographic on the coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The fundamental root `alpha_s`, with `s` 1-based.
    pub fn simple(rank: usize, s: usize) -> Self {
        let mut c = vec![0; rank];
        c[s - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Vec<i32> {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, other: &Root) -> Vec<i32> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

/// Position of a root in the canonical order of its [`RootSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub(crate) u32);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A weight of the adjoint module: a root, or one of the `l` zero weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Root(RootId),
    /// Zero weight `0_s`, 1-based.
    Zero(usize),
}

/// Relative position of two roots, read off from their scalar product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairRelation {
    Equal,
    Opposite,
    Orthogonal,
    SumIsRoot,
    DifferenceIsRoot,
}

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct RootSystem {
    id: SystemId,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, RootId>,
    neg: Vec<RootId>,
    // dense n x n tables
    sum: Vec<u32>,
    inner: Vec<i8>,
    // <alpha, alpha_s>, n x l
    pairing: Vec<i32>,
}

/// Bourbaki Cartan matrix of `D_l` or `E_l`.
pub fn cartan_matrix(id: SystemId) -> Vec<Vec<i32>> {
    let l = id.rank();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match id.family() {
        Family::D => {
            for i in 1..l - 1 {
                edges.push((i, i + 1));
            }
            edges.push((l - 2, l));
        }
        Family::E => {
            edges.extend([(1, 3), (3, 4), (2, 4)]);
            for i in 4..l {
                edges.push((i, i + 1));
            }
        }
    }
    let mut a = vec![vec![0; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

fn bilinear(cartan: &[Vec<i32>], a: &[i32], b: &[i32]) -> i32 {
    let mut acc = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            acc += ai * cartan[i][j] * bj;
        }
    }
    acc
}

/// Closure of `+-alpha_s` under `(alpha, beta) -> alpha + beta` whenever the
/// sum has norm 2. In an ADE root lattice those are exactly the roots.
fn close_under_addition(cartan: &[Vec<i32>]) -> HashSet<Vec<i32>> {
    let l = cartan.len();
    let mut set: HashSet<Vec<i32>> = HashSet::new();
    let mut frontier: Vec<Vec<i32>> = Vec::new();
    for s in 0..l {
        for sign in [1, -1] {
            let mut c = vec![0; l];
            c[s] = sign;
            set.insert(c.clone());
            frontier.push(c);
        }
    }
    while !frontier.is_empty() {
        let current: Vec<Vec<i32>> = set.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                let c: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if c.iter().all(|&x| x == 0) || set.contains(&c) {
                    continue;
                }
                if bilinear(cartan, &c, &c) == 2 {
                    set.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    set
}

fn reflection_closed(cartan: &[Vec<i32>], set: &HashSet<Vec<i32>>) -> bool {
    let l = cartan.len();
    set.iter().all(|r| {
        (0..l).all(|s| {
            let pairing: i32 = (0..l).map(|t| r[t] * cartan[t][s]).sum();
            let mut refl = r.clone();
            refl[s] -= pairing;
            set.contains(&refl)
        })
    })
}

impl RootSystem {
    pub fn new(id: SystemId) -> Result<Self> {
        let cartan = cartan_matrix(id);
        let l = id.rank();
        let set = close_under_addition(&cartan);
        assert!(
            reflection_closed(&cartan, &set),
            "root set of {} not closed under simple reflections",
            id
        );
        assert_eq!(set.len(), id.num_roots(), "root count mismatch for {}", id);

        let mut roots: Vec<Root> = set.into_iter().map(Root).collect();
        roots.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
        let n = roots.len();
        let index: HashMap<Root, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), RootId(i as u32)))
            .collect();
        let neg = roots.iter().map(|r| index[&r.neg()]).collect();
        let mut sum = vec![NONE; n * n];
        let mut inner = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let c = roots[i].add(&roots[j]);
                if let Some(id) = index.get(&Root(c)) {
                    sum[i * n + j] = id.0;
                }
                inner[i * n + j] = bilinear(&cartan, &roots[i].0, &roots[j].0) as i8;
            }
        }
        let mut pairing = vec![0; n * l];
        for (i, r) in roots.iter().enumerate() {
            for s in 0..l {
                pairing[i * l + s] = (0..l).map(|t| r.0[t] * cartan[t][s]).sum();
            }
        }
        Ok(RootSystem { id, cartan, roots, index, neg, sum, inner, pairing })
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank()
    }

    pub fn dim(&self) -> usize {
        self.id.adjoint_dim()
    }

    pub fn k(&self) -> usize {
        self.id.k()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len() as u32).map(RootId)
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.index()]
    }

    pub fn id_of(&self, root: &Root) -> Result<RootId> {
        self.index.get(root).copied().ok_or_else(|| Error::InvalidRoot(root.0.clone()))
    }

    /// Looks up a coefficient vector; `None` if it is not a root.
    pub fn find(&self, coeffs: &[i32]) -> Option<RootId> {
        // avoids allocating when the length is off
        if coeffs.len() != self.rank() {
            return None;
        }
        self.index.get(&Root(coeffs.to_vec())).copied()
    }

    pub fn simple(&self, s: usize) -> RootId {
        self.index[&Root::simple(self.rank(), s)]
    }

    pub fn neg(&self, a: RootId) -> RootId {
        self.neg[a.index()]
    }

    pub fn inner(&self, a: RootId, b: RootId) -> i32 {
        self.inner[a.index() * self.len() + b.index()] as i32
    }

    /// `alpha + beta` if it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        let s = self.sum[a.index() * self.len() + b.index()];
        (s != NONE).then_some(RootId(s))
    }

    /// `alpha - beta` if it is a root.
    pub fn diff(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sum(a, self.neg(b))
    }

    /// `m_s(alpha)`, `s` 1-based.
    pub fn coeff(&self, a: RootId, s: usize) -> i32 {
        self.roots[a.index()].0[s - 1]
    }

    /// Cartan number `<alpha, alpha_s>`, `s` 1-based.
    pub fn pairing(&self, a: RootId, s: usize) -> i32 {
        self.pairing[a.index() * self.rank() + s - 1]
    }

    /// Doubled scalar product of two arbitrary lattice vectors.
    pub fn doubled_inner_coeffs(&self, a: &[i32], b: &[i32]) -> i32 {
        bilinear(&self.cartan, a, b)
    }

    pub fn doubled_inner(&self, a: &Root, b: &Root) -> Result<i32> {
        Ok(self.inner(self.id_of(a)?, self.id_of(b)?))
    }

    pub fn classify_pair(&self, a: &Root, b: &Root) -> Result<PairRelation> {
        Ok(self.relation(self.id_of(a)?, self.id_of(b)?))
    }

    pub fn relation(&self, a: RootId, b: RootId) -> PairRelation {
        match self.inner(a, b) {
            2 => PairRelation::Equal,
            -2 => PairRelation::Opposite,
            0 => PairRelation::Orthogonal,
            1 => PairRelation::DifferenceIsRoot,
            -1 => PairRelation::SumIsRoot,
            x => unreachable!("doubled scalar product {} between roots", x),
        }
    }

    pub fn add_if_root(&self, a: &Root, b: &Root) -> Option<Root> {
        self.find(&a.add(b)).map(|id| self.root(id).clone())
    }

    // ---- weights ----

    /// Position of a weight in the canonical coordinate order: roots first,
    /// then `0_1, ..., 0_l`.
    pub fn position(&self, w: Weight) -> usize {
        match w {
            Weight::Root(r) => r.index(),
            Weight::Zero(s) => self.len() + s - 1,
        }
    }

    pub fn zero_position(&self, s: usize) -> usize {
        self.len() + s - 1
    }

    pub fn weight_at(&self, pos: usize) -> Weight {
        if pos < self.len() {
            Weight::Root(RootId(pos as u32))
        } else {
            Weight::Zero(pos - self.len() + 1)
        }
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        (0..self.dim()).map(|p| self.weight_at(p))
    }
}
