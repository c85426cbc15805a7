//! Maximal squares and the root combinatorics around them.
//!
//! A maximal square is a family of orthogonal root pairs `{beta_i, beta_-i}`
//! sharing one sum `sigma`, any two roots from different pairs at angle
//! `pi/3`. Members are addressed by signed indices `1..=k` and `-k..=-1`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{RootId, RootSystem};
use crate::signs::SignTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSquare {
    sigma: Vec<i32>,
    /// `(beta_i, beta_-i)` for `i = 1..=k`.
    pairs: Vec<(RootId, RootId)>,
}

/// Position of a root relative to a maximal square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AngleClass {
    /// `rho = beta_i` (angle 0).
    InSquare(i32),
    /// `rho = -beta_i` (angle pi).
    OppositeSquare(i32),
    /// angle pi/2
    Perp,
    /// angle pi/3
    Third,
    /// angle 2pi/3
    TwoThirds,
}

impl AngleClass {
    /// Doubled scalar product of `rho` with `sigma` for this class.
    pub fn doubled_sigma_product(self) -> i32 {
        match self {
            AngleClass::InSquare(_) => 2,
            AngleClass::OppositeSquare(_) => -2,
            AngleClass::Perp => 0,
            AngleClass::Third => 1,
            AngleClass::TwoThirds => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AngleClass::InSquare(_) => "0",
            AngleClass::OppositeSquare(_) => "pi",
            AngleClass::Perp => "pi/2",
            AngleClass::Third => "pi/3",
            AngleClass::TwoThirds => "2pi/3",
        }
    }
}

fn lex_less(rs: &RootSystem, a: RootId, b: RootId) -> bool {
    rs.root(a) < rs.root(b)
}

fn normalize_pair(rs: &RootSystem, a: RootId, b: RootId) -> (RootId, RootId) {
    if lex_less(rs, b, a) {
        (b, a)
    } else {
        (a, b)
    }
}

impl MaximalSquare {
    /// Builds a square from pairs in the given order; no validation.
    pub fn from_pairs(rs: &RootSystem, pairs: Vec<(RootId, RootId)>) -> Self {
        let (a, b) = pairs[0];
        MaximalSquare { sigma: rs.root(a).add(rs.root(b)), pairs }
    }

    fn canonical(rs: &RootSystem, sigma: Vec<i32>, pairs: Vec<(RootId, RootId)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().map(|(a, b)| normalize_pair(rs, a, b)).collect();
        pairs.sort_by(|x, y| rs.root(x.0).cmp(rs.root(y.0)));
        pairs.dedup();
        MaximalSquare { sigma, pairs }
    }

    pub fn sigma(&self) -> &[i32] {
        &self.sigma
    }

    pub fn pairs(&self) -> &[(RootId, RootId)] {
        &self.pairs
    }

    /// Number of orthogonal pairs (the square has twice as many members).
    pub fn pairs_len(&self) -> usize {
        self.pairs.len()
    }

    /// Signed indices in the order `1, ..., k, -k, ..., -1`.
    pub fn indices(&self) -> impl Iterator<Item = i32> {
        let k = self.pairs.len() as i32;
        (1..=k).chain((1..=k).rev().map(|i| -i))
    }

    pub fn check_index(&self, i: i32) -> Result<()> {
        if i == 0 || i.unsigned_abs() as usize > self.pairs.len() {
            Err(Error::IndexOutOfRange { index: i, pairs: self.pairs.len() })
        } else {
            Ok(())
        }
    }

    /// `beta_i`. Panics on an out-of-range index.
    pub fn member(&self, i: i32) -> RootId {
        let (a, b) = self.pairs[i.unsigned_abs() as usize - 1];
        if i > 0 {
            a
        } else {
            b
        }
    }

    pub fn members(&self) -> Vec<RootId> {
        self.indices().map(|i| self.member(i)).collect()
    }

    pub fn index_of(&self, r: RootId) -> Option<i32> {
        self.indices().find(|&i| self.member(i) == r)
    }

    /// Slot of index `i` in `1, ..., k, -k, ..., -1` order.
    pub fn slot(&self, i: i32) -> usize {
        let k = self.pairs.len();
        if i > 0 {
            i as usize - 1
        } else {
            2 * k - i.unsigned_abs() as usize
        }
    }

    /// Same square re-indexed so that `beta_1` is the old `beta_i` and
    /// `beta_-1` the old `beta_-i`. The other pairs keep their order.
    pub fn rooted(&self, i: i32) -> Result<MaximalSquare> {
        self.check_index(i)?;
        let p = i.unsigned_abs() as usize - 1;
        let mut pairs = self.pairs.clone();
        let mut first = pairs.remove(p);
        if i < 0 {
            first = (first.1, first.0);
        }
        pairs.insert(0, first);
        Ok(MaximalSquare { sigma: self.sigma.clone(), pairs })
    }

    /// Checks the defining conditions: orthogonal pairs with sum `sigma`,
    /// all cross-pair angles `pi/3`.
    pub fn is_valid(&self, rs: &RootSystem) -> bool {
        if self.pairs.len() < 2 {
            return false;
        }
        for &(a, b) in &self.pairs {
            if rs.inner(a, b) != 0 || rs.root(a).add(rs.root(b)) != self.sigma {
                return false;
            }
        }
        let members = self.members();
        for i in self.indices() {
            for j in self.indices() {
                if i != j && i != -j && rs.inner(self.member(i), self.member(j)) != 1 {
                    return false;
                }
            }
        }
        members.len() == 2 * self.pairs.len()
    }
}

/// The unique maximal square containing the orthogonal pair `{a, b}`, in
/// canonical order.
pub fn square_of_pair(rs: &RootSystem, a: RootId, b: RootId) -> Result<MaximalSquare> {
    if rs.inner(a, b) != 0 {
        return Err(Error::InvalidPair(rs.root(a).coeffs().to_vec(), rs.root(b).coeffs().to_vec()));
    }
    let sigma = rs.root(a).add(rs.root(b));
    let mut pairs = Vec::new();
    for g in rs.ids() {
        let rest: Vec<i32> = sigma.iter().zip(rs.root(g).coeffs()).map(|(s, c)| s - c).collect();
        if let Some(d) = rs.find(&rest) {
            if g < d {
                pairs.push((g, d));
            }
        }
    }
    Ok(MaximalSquare::canonical(rs, sigma, pairs))
}

/// Square of `{a, b}` re-indexed with `beta_1 = a`, `beta_-1 = b`.
pub fn rooted_square(rs: &RootSystem, a: RootId, b: RootId) -> Result<MaximalSquare> {
    let sq = square_of_pair(rs, a, b)?;
    let i = sq.index_of(a).expect("pair lies in its square");
    sq.rooted(i)
}

/// Every maximal square once, sorted by `sigma`.
pub fn enumerate_squares(rs: &RootSystem) -> Vec<MaximalSquare> {
    let mut by_sigma: HashMap<Vec<i32>, Vec<(RootId, RootId)>> = HashMap::new();
    for a in rs.ids() {
        for b in rs.ids() {
            if a < b && rs.inner(a, b) == 0 {
                by_sigma.entry(rs.root(a).add(rs.root(b))).or_default().push((a, b));
            }
        }
    }
    let mut squares: Vec<MaximalSquare> = by_sigma
        .into_iter()
        .map(|(sigma, pairs)| MaximalSquare::canonical(rs, sigma, pairs))
        .collect();
    squares.sort_by(|x, y| x.sigma.cmp(&y.sigma));
    squares
}

/// All squares of a system with lookup by `sigma` and by orthogonal pair.
#[derive(Clone, Debug)]
pub struct SquareCatalog {
    squares: Vec<MaximalSquare>,
    by_sigma: HashMap<Vec<i32>, usize>,
}

impl SquareCatalog {
    pub fn new(rs: &RootSystem) -> Self {
        let squares = enumerate_squares(rs);
        let by_sigma = squares.iter().enumerate().map(|(i, s)| (s.sigma.clone(), i)).collect();
        SquareCatalog { squares, by_sigma }
    }

    pub fn squares(&self) -> &[MaximalSquare] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn by_sigma(&self, sigma: &[i32]) -> Option<&MaximalSquare> {
        self.by_sigma.get(sigma).map(|&i| &self.squares[i])
    }

    pub fn for_pair(&self, rs: &RootSystem, a: RootId, b: RootId) -> Result<&MaximalSquare> {
        if rs.inner(a, b) != 0 {
            return Err(Error::InvalidPair(rs.root(a).coeffs().to_vec(), rs.root(b).coeffs().to_vec()));
        }
        Ok(self.by_sigma(&rs.root(a).add(rs.root(b))).expect("every orthogonal pair has a square"))
    }
}

/// Truth values of the five mutually exclusive cases of the classification,
/// each evaluated literally from the scalar products.
pub fn class_predicates(rs: &RootSystem, rho: RootId, sq: &MaximalSquare) -> [bool; 5] {
    let d = |i: i32| rs.inner(rho, sq.member(i));
    let idx: Vec<i32> = sq.indices().collect();
    let others = |i: i32| idx.iter().copied().filter(move |&j| j != i && j != -i);

    let case1 = idx
        .iter()
        .any(|&i| sq.member(i) == rho && d(-i) == 0 && others(i).all(|j| d(j) == 1));
    let case2 = idx
        .iter()
        .any(|&i| sq.member(i) == rs.neg(rho) && d(-i) == 0 && others(i).all(|j| d(j) == -1));
    let pair_is = |i: i32, x: i32, y: i32| (d(i), d(-i)) == (x, y) || (d(i), d(-i)) == (y, x);
    let positive = 1..=sq.pairs_len() as i32;
    let case3 = positive.clone().any(|i| d(i) == 0 && d(-i) == 0)
        && positive.clone().all(|j| pair_is(j, 0, 0) || pair_is(j, 1, -1));
    let case4 = positive.clone().all(|i| pair_is(i, 0, 1));
    let case5 = positive.clone().all(|i| pair_is(i, 0, -1));
    [case1, case2, case3, case4, case5]
}

pub fn classify_root_vs_square(rs: &RootSystem, rho: RootId, sq: &MaximalSquare) -> AngleClass {
    let p = class_predicates(rs, rho, sq);
    assert_eq!(
        p.iter().filter(|&&x| x).count(),
        1,
        "root {} vs square sigma {:?}: classification not unique {:?}",
        rs.root(rho),
        sq.sigma(),
        p
    );
    if p[0] {
        AngleClass::InSquare(sq.index_of(rho).unwrap())
    } else if p[1] {
        AngleClass::OppositeSquare(sq.index_of(rs.neg(rho)).unwrap())
    } else if p[2] {
        AngleClass::Perp
    } else if p[3] {
        AngleClass::Third
    } else {
        AngleClass::TwoThirds
    }
}

/// `gamma_i = beta_j - beta_i` for `i != +-j`, `gamma_j = beta_j`,
/// `gamma_-j = -beta_-j`; indices are preserved.
pub fn modified_square(rs: &RootSystem, sq: &MaximalSquare, j: i32) -> Result<MaximalSquare> {
    sq.check_index(j)?;
    let bj = sq.member(j);
    let gamma = |i: i32| -> RootId {
        if i == j {
            bj
        } else if i == -j {
            rs.neg(sq.member(-j))
        } else {
            rs.diff(bj, sq.member(i)).expect("beta_j - beta_i is a root inside a square")
        }
    };
    let pairs = (1..=sq.pairs_len() as i32).map(|i| (gamma(i), gamma(-i))).collect();
    Ok(MaximalSquare::from_pairs(rs, pairs))
}

/// Sign column `c(j)`, stored in `1..k, -k..-1` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignColumn {
    pub base: i32,
    pub entries: Vec<i8>,
}

pub fn sign_column(signs: &SignTable, rs: &RootSystem, sq: &MaximalSquare, j: i32) -> Result<SignColumn> {
    sq.check_index(j)?;
    let entries = sq
        .indices()
        .map(|i| {
            if i == j || i == -j {
                1
            } else {
                let a = signs.n(sq.member(j), rs.neg(sq.member(i)));
                let b = signs.n(sq.member(-j), rs.neg(sq.member(-i)));
                (-a * b) as i8
            }
        })
        .collect();
    Ok(SignColumn { base: j, entries })
}

impl SignColumn {
    pub fn at(&self, sq: &MaximalSquare, i: i32) -> i32 {
        self.entries[sq.slot(i)] as i32
    }
}

/// The four pair sets attached to an orthogonal pair `(alpha, beta)`.
///
/// Unordered pairs are stored with the smaller id first; all lists sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PairSets {
    pub pi2: Vec<(RootId, RootId)>,
    pub two_pi3: Vec<(RootId, RootId)>,
    pub pi: Vec<(RootId, RootId)>,
    pub pi_prime: Vec<(RootId, RootId)>,
}

fn unordered(a: RootId, b: RootId) -> (RootId, RootId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PairSets {
    fn sorted(mut self) -> Self {
        self.pi2.sort();
        self.two_pi3.sort();
        self.pi.sort();
        self.pi_prime.sort();
        self
    }
}

fn check_orthogonal(rs: &RootSystem, a: RootId, b: RootId) -> Result<()> {
    if rs.inner(a, b) != 0 {
        Err(Error::InvalidPair(rs.root(a).coeffs().to_vec(), rs.root(b).coeffs().to_vec()))
    } else {
        Ok(())
    }
}

/// Pair sets by scanning all roots against their definitions.
pub fn pair_sets(rs: &RootSystem, a: RootId, b: RootId) -> Result<PairSets> {
    check_orthogonal(rs, a, b)?;
    let ab = unordered(a, b);
    let sigma = rs.root(a).add(rs.root(b));
    let mut out = PairSets::default();
    for g in rs.ids() {
        let rest: Vec<i32> = sigma.iter().zip(rs.root(g).coeffs()).map(|(s, c)| s - c).collect();
        if let Some(d) = rs.find(&rest) {
            if g < d && (g, d) != ab {
                out.pi2.push((g, d));
            }
        }
        if let Some(d) = rs.diff(a, g) {
            if g < d && rs.inner(g, b) != 0 {
                out.two_pi3.push((g, d));
            }
        }
        let ng = rs.neg(g);
        if rs.inner(g, a) == -1 && rs.inner(g, b) == -1 {
            out.pi.push((g, ng));
        }
        if rs.inner(g, a) == -1 && rs.inner(ng, b) == -1 {
            out.pi_prime.push((g, ng));
        }
    }
    Ok(out.sorted())
}

/// Pair sets read off the square of `(alpha, beta)`.
pub fn pair_sets_from_square(rs: &RootSystem, a: RootId, b: RootId) -> Result<PairSets> {
    check_orthogonal(rs, a, b)?;
    let sq = rooted_square(rs, a, b)?;
    let b1 = sq.member(1);
    let mut out = PairSets::default();
    for i in 2..=sq.pairs_len() as i32 {
        out.pi2.push(unordered(sq.member(i), sq.member(-i)));
    }
    for i in sq.indices().filter(|&i| i != 1 && i != -1) {
        let bi = sq.member(i);
        let d = rs.diff(b1, bi).expect("beta_1 - beta_i is a root");
        out.two_pi3.push(unordered(d, bi));
        out.pi.push((rs.neg(bi), bi));
        out.pi_prime.push((rs.neg(d), d));
    }
    Ok(out.sorted())
}

/// The pair conjugate to `{gamma, delta}` in `S_2pi/3(alpha, beta)`:
/// with `(gamma, beta) = 1/2` it is `{delta + beta, gamma - beta}`.
pub fn conjugate_pair(
    rs: &RootSystem,
    a: RootId,
    b: RootId,
    pair: (RootId, RootId),
) -> Result<(RootId, RootId)> {
    check_orthogonal(rs, a, b)?;
    let (mut g, mut d) = pair;
    if rs.sum(g, d) != Some(a) || rs.inner(g, b) == 0 {
        return Err(Error::NotInS2Pi3);
    }
    if rs.inner(g, b) != 1 {
        std::mem::swap(&mut g, &mut d);
    }
    let g2 = rs.sum(d, b).ok_or(Error::NotInS2Pi3)?;
    let d2 = rs.diff(g, b).ok_or(Error::NotInS2Pi3)?;
    Ok(unordered(g2, d2))
}

/// A root `delta` with `delta _|_ alpha`, `delta _|_ gamma` and
/// `angle(delta, beta) = 2pi/3`, for an `A_3` chain `alpha - beta - gamma`.
pub fn extend_a3_to_d4(rs: &RootSystem, a: RootId, b: RootId, c: RootId) -> Result<RootId> {
    if !is_a3_chain(rs, a, b, c) {
        return Err(Error::NotAnA3Triple);
    }
    rs.ids()
        .find(|&d| rs.inner(d, a) == 0 && rs.inner(d, c) == 0 && rs.inner(d, b) == -1)
        .ok_or(Error::NotAnA3Triple)
}

pub fn is_a3_chain(rs: &RootSystem, a: RootId, b: RootId, c: RootId) -> bool {
    rs.inner(a, b) == -1 && rs.inner(b, c) == -1 && rs.inner(a, c) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{Root, SystemId};

    fn system(s: &str) -> (RootSystem, SignTable) {
        let rs = RootSystem::new(s.parse().unwrap()).unwrap();
        let signs = SignTable::new(&rs);
        (rs, signs)
    }

    fn orthogonal_pairs(rs: &RootSystem) -> usize {
        rs.ids().flat_map(|a| rs.ids().map(move |b| (a, b))).filter(|&(a, b)| a < b && rs.inner(a, b) == 0).count()
    }

    #[test]
    fn square_counts() {
        for (s, pairs, squares) in [("E6", 1080, 270), ("E7", 3780, 756), ("E8", 15120, 2160)] {
            let (rs, _) = system(s);
            assert_eq!(orthogonal_pairs(&rs), pairs);
            let all = enumerate_squares(&rs);
            assert_eq!(all.len(), squares);
            assert!(all.iter().all(|sq| sq.pairs_len() == rs.k()));
        }
    }

    #[test]
    fn d_type_squares_have_two_sizes() {
        let (rs, _) = system("D5");
        let all = enumerate_squares(&rs);
        assert_eq!(all.len(), 90);
        assert_eq!(all.iter().filter(|s| s.pairs_len() == 3).count(), 80);
        assert_eq!(all.iter().filter(|s| s.pairs_len() == 4).count(), 10);
        let total: usize = all.iter().map(|s| s.pairs_len()).sum();
        assert_eq!(total, orthogonal_pairs(&rs));
    }

    #[test]
    fn square_of_pair_is_shared() {
        let (rs, _) = system("E8");
        let a = rs.simple(1);
        let b = rs.simple(2);
        let sq = square_of_pair(&rs, a, b).unwrap();
        assert_eq!(sq.pairs_len(), 7);
        assert!(sq.is_valid(&rs));
        for &(g, d) in sq.pairs() {
            assert_eq!(square_of_pair(&rs, g, d).unwrap(), sq);
        }
        assert!(matches!(square_of_pair(&rs, a, rs.simple(3)), Err(Error::InvalidPair(..))));
    }

    #[test]
    fn canonical_order_inside_pairs() {
        let (rs, _) = system("E6");
        for sq in enumerate_squares(&rs) {
            for w in sq.pairs().windows(2) {
                assert!(rs.root(w[0].0) < rs.root(w[1].0));
            }
            for &(a, b) in sq.pairs() {
                assert!(rs.root(a) < rs.root(b));
            }
        }
    }

    #[test]
    fn classify_members() {
        let (rs, _) = system("E6");
        let sq = square_of_pair(&rs, rs.simple(1), rs.simple(2)).unwrap();
        assert_eq!(classify_root_vs_square(&rs, sq.member(1), &sq), AngleClass::InSquare(1));
        assert_eq!(classify_root_vs_square(&rs, rs.neg(sq.member(3)), &sq), AngleClass::OppositeSquare(3));
        assert_eq!(classify_root_vs_square(&rs, rs.neg(sq.member(-2)), &sq), AngleClass::OppositeSquare(-2));
    }

    #[test]
    fn modified_square_shape() {
        let (rs, _) = system("E7");
        let sq = enumerate_squares(&rs).swap_remove(17);
        for j in sq.indices() {
            let m = modified_square(&rs, &sq, j).unwrap();
            assert!(m.is_valid(&rs));
            assert_eq!(m.member(j), sq.member(j));
            assert_eq!(m.member(-j), rs.neg(sq.member(-j)));
            assert_eq!(m.sigma(), rs.root(sq.member(j)).sub(rs.root(sq.member(-j))));
        }
        assert!(matches!(modified_square(&rs, &sq, 6), Err(Error::IndexOutOfRange { .. })));
        assert!(modified_square(&rs, &sq, 0).is_err());
    }

    #[test]
    fn rooting_moves_pair_to_front() {
        let (rs, _) = system("E6");
        let sq = enumerate_squares(&rs).swap_remove(3);
        let r = sq.rooted(-3).unwrap();
        assert_eq!(r.member(1), sq.member(-3));
        assert_eq!(r.member(-1), sq.member(3));
        assert!(r.is_valid(&rs));
        let mut a = r.members();
        let mut b = sq.members();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn sign_column_basics() {
        let (rs, signs) = system("E6");
        let sq = enumerate_squares(&rs).swap_remove(0);
        for j in sq.indices() {
            let c = sign_column(&signs, &rs, &sq, j).unwrap();
            assert_eq!(c.at(&sq, j), 1);
            assert_eq!(c.at(&sq, -j), 1);
            assert!(c.entries.iter().all(|&e| e == 1 || e == -1));
        }
    }

    #[test]
    fn pair_set_sizes() {
        for (s, expect) in [("E6", 6), ("E7", 8), ("E8", 12)] {
            let (rs, _) = system(s);
            let sq = enumerate_squares(&rs).swap_remove(5);
            let (a, b) = sq.pairs()[1];
            let p = pair_sets(&rs, a, b).unwrap();
            assert_eq!(p.two_pi3.len(), expect);
            assert_eq!(p.pi.len(), expect);
            assert_eq!(p.pi_prime.len(), expect);
            assert_eq!(p.pi2.len(), rs.k() - 1);
            assert_eq!(p, pair_sets_from_square(&rs, a, b).unwrap());
        }
        // D6: squares with 3 or 5 pairs
        let (rs, _) = system("D6");
        for sq in enumerate_squares(&rs) {
            let (a, b) = sq.pairs()[0];
            let p = pair_sets(&rs, a, b).unwrap();
            assert_eq!(p.pi2.len(), sq.pairs_len() - 1);
            assert_eq!(p.two_pi3.len(), 2 * sq.pairs_len() - 2);
        }
    }

    #[test]
    fn conjugation_in_e6() {
        let (rs, _) = system("E6");
        let (a, b) = (rs.simple(1), rs.simple(2));
        let p = pair_sets(&rs, a, b).unwrap();
        let mut classes = Vec::new();
        for &pair in &p.two_pi3 {
            let c = conjugate_pair(&rs, a, b, pair).unwrap();
            assert_ne!(c, pair);
            assert!(p.two_pi3.contains(&c));
            assert_eq!(conjugate_pair(&rs, a, b, c).unwrap(), pair);
            let mut cls = [pair, c];
            cls.sort();
            classes.push(cls);
        }
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), rs.k() - 1);
        assert!(conjugate_pair(&rs, a, b, (a, b)).is_err());
    }

    #[test]
    fn d4_witnesses() {
        for s in ["E6", "E7", "E8"] {
            let (rs, _) = system(s);
            let (a, b, c) = (rs.simple(2), rs.simple(4), rs.simple(3));
            let d = rs.simple(5);
            assert!(is_a3_chain(&rs, a, b, c));
            assert_eq!(rs.inner(d, a), 0);
            assert_eq!(rs.inner(d, c), 0);
            assert_eq!(rs.inner(d, b), -1);
            assert!(extend_a3_to_d4(&rs, a, b, c).is_ok());
        }
        for l in [5, 6, 7] {
            let rs = RootSystem::new(SystemId::d(l).unwrap()).unwrap();
            let (a, b, c, d) = (rs.simple(l - 1), rs.simple(l - 2), rs.simple(l), rs.simple(l - 3));
            assert!(is_a3_chain(&rs, a, b, c));
            assert_eq!((rs.inner(d, a), rs.inner(d, c), rs.inner(d, b)), (0, 0, -1));
        }
        let (rs, _) = system("E6");
        let r = |v: Vec<i32>| rs.id_of(&Root::new(v)).unwrap();
        assert!(matches!(
            extend_a3_to_d4(&rs, r(vec![1, 0, 0, 0, 0, 0]), r(vec![0, 1, 0, 0, 0, 0]), r(vec![0, 0, 1, 0, 0, 0])),
            Err(Error::NotAnA3Triple)
        ));
    }
}
