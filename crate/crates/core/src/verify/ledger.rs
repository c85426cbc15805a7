use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{CheckResult, Witness};
use super::rng_for;
use crate::adjoint::{generic_vector, symbolic_action, AdjointVector};
use crate::equations::{eq_2pi3, eq_pi, evaluate_form, pi2_rooted, FormKind, QuadraticForm};
use crate::error::Result;
use crate::poly::{Poly, Var};
use crate::ring::Polynomials;
use crate::root_system::{RootId, RootSystem};
use crate::signs::SignTable;
use crate::squares::{classify_root_vs_square, AngleClass, MaximalSquare, SquareCatalog};

/// Position of `rho` relative to the rooted square `(beta_1, beta_-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RhoClass {
    /// `rho = beta_j`.
    InSquare,
    /// `rho = -beta_j`.
    Opposite,
    /// `(rho, sigma) = -1/2`.
    TwoThirds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubCase {
    Any,
    JOne,
    JMinusOne,
    /// `j != +-1`.
    JOther,
    /// `j != -1`.
    JNotMinusOne,
    /// `(beta_1, rho) = -1/2`.
    InnerMinusOne,
    /// `(beta_1, rho) = 0`.
    InnerZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub name: &'static str,
    pub class: RhoClass,
    pub form: FormKind,
    pub sub: SubCase,
}

const fn entry(name: &'static str, class: RhoClass, form: FormKind, sub: SubCase) -> LedgerEntry {
    LedgerEntry { name, class, form, sub }
}

/// The eighteen identities `f(x_rho(xi) v) - f(v) = target(v)`.
pub fn ledger_entries() -> Vec<LedgerEntry> {
    use FormKind::*;
    use RhoClass::*;
    use SubCase::*;
    vec![
        entry("in_square.pi2", InSquare, Pi2, Any),
        entry("in_square.2pi3.j_other", InSquare, TwoPi3, JOther),
        entry("in_square.2pi3.j_1", InSquare, TwoPi3, JOne),
        entry("in_square.2pi3.j_-1", InSquare, TwoPi3, JMinusOne),
        entry("in_square.pi.j_other", InSquare, Pi, JOther),
        entry("in_square.pi.j_1", InSquare, Pi, JOne),
        entry("in_square.pi.j_-1", InSquare, Pi, JMinusOne),
        entry("opposite.pi2", Opposite, Pi2, Any),
        entry("opposite.2pi3.j_not_-1", Opposite, TwoPi3, JNotMinusOne),
        entry("opposite.2pi3.j_-1", Opposite, TwoPi3, JMinusOne),
        entry("opposite.pi.j_other", Opposite, Pi, JOther),
        entry("opposite.pi.j_1", Opposite, Pi, JOne),
        entry("opposite.pi.j_-1", Opposite, Pi, JMinusOne),
        entry("two_thirds.pi2", TwoThirds, Pi2, Any),
        entry("two_thirds.2pi3.inner_-1", TwoThirds, TwoPi3, InnerMinusOne),
        entry("two_thirds.2pi3.inner_0", TwoThirds, TwoPi3, InnerZero),
        entry("two_thirds.pi.inner_-1", TwoThirds, Pi, InnerMinusOne),
        entry("two_thirds.pi.inner_0", TwoThirds, Pi, InnerZero),
    ]
}

/// `coefficient * xi^power * form`.
struct TargetTerm {
    coefficient: i64,
    power: u32,
    form: QuadraticForm,
}

fn term(coefficient: i64, power: u32, form: QuadraticForm) -> TargetTerm {
    TargetTerm { coefficient, power, form }
}

fn targets(rs: &RootSystem, signs: &SignTable, e: &LedgerEntry, sq: &MaximalSquare, rho: RootId) -> Result<Vec<TargetTerm>> {
    use FormKind::*;
    use RhoClass::*;
    use SubCase::*;
    let b = |i: i32| sq.member(i);
    let neg = |r: RootId| rs.neg(r);
    let f23 = |g: RootId, d: RootId| eq_2pi3(rs, signs, g, d);
    let f2 = |g: RootId, d: RootId| pi2_rooted(rs, signs, g, d);
    let j = match e.class {
        InSquare => sq.index_of(rho).unwrap_or(0),
        Opposite => sq.index_of(neg(rho)).unwrap_or(0),
        TwoThirds => 0,
    };
    let diff = |x: RootId, y: RootId| rs.diff(x, y).expect("difference of square members");
    Ok(match (e.class, e.form, e.sub) {
        (InSquare, Pi2, _) => vec![term(-1, 1, f23(b(-1), neg(b(1)))?), term(-1, 2, f2(b(-1), neg(b(1)))?)],
        (InSquare, TwoPi3, JOther) => {
            let c = signs.n(b(1), neg(b(j))) as i64;
            vec![term(c, 1, f23(diff(b(1), b(j)), diff(b(1), b(-j)))?)]
        }
        (InSquare, TwoPi3, JOne) => vec![term(-1, 1, eq_pi(rs, signs, b(1), b(-1))?), term(1, 2, f23(neg(b(1)), neg(b(-1)))?)],
        (InSquare, TwoPi3, _) => vec![term(-2, 1, f2(b(1), neg(b(-1)))?)],
        (InSquare, Pi, JOther) => vec![term(1, 1, f23(neg(b(j)), b(-j))?)],
        (InSquare, Pi, JOne) => vec![term(-2, 1, f23(neg(b(1)), neg(b(-1)))?)],
        (InSquare, Pi, _) => vec![term(-2, 1, f23(neg(b(-1)), neg(b(1)))?)],
        (Opposite, Pi2, _) | (Opposite, TwoPi3, JNotMinusOne) => vec![],
        (Opposite, TwoPi3, _) => vec![term(2, 1, f2(b(1), b(-1))?)],
        (Opposite, Pi, JOther) => vec![term(1, 1, f23(b(j), neg(b(-j)))?)],
        (Opposite, Pi, JOne) => vec![term(2, 1, f23(b(1), neg(b(-1)))?)],
        (Opposite, Pi, _) => vec![term(-2, 1, f23(b(-1), b(1))?)],
        (TwoThirds, Pi2, _) | (TwoThirds, TwoPi3, InnerMinusOne) => vec![],
        (TwoThirds, TwoPi3, _) => vec![term(1, 1, f2(b(1), neg(rho))?)],
        (TwoThirds, Pi, InnerMinusOne) => vec![term(-1, 1, f23(neg(rho), b(-1))?)],
        (TwoThirds, Pi, _) => vec![term(-1, 1, f23(neg(rho), b(1))?)],
    })
}

fn sub_case_holds(rs: &RootSystem, e: &LedgerEntry, sq: &MaximalSquare, rho: RootId) -> bool {
    let class = classify_root_vs_square(rs, rho, sq);
    let j = match (e.class, class) {
        (RhoClass::InSquare, AngleClass::InSquare(j)) | (RhoClass::Opposite, AngleClass::OppositeSquare(j)) => j,
        (RhoClass::TwoThirds, AngleClass::TwoThirds) => {
            let inner = rs.inner(sq.member(1), rho);
            return match e.sub {
                SubCase::InnerMinusOne => inner == -1,
                SubCase::InnerZero => inner == 0,
                _ => true,
            };
        }
        _ => return false,
    };
    match e.sub {
        SubCase::Any => true,
        SubCase::JOne => j == 1,
        SubCase::JMinusOne => j == -1,
        SubCase::JOther => j != 1 && j != -1,
        SubCase::JNotMinusOne => j != -1,
        SubCase::InnerMinusOne | SubCase::InnerZero => false,
    }
}

fn xi_power(p: u32) -> Poly {
    let xi = Poly::var(Var::xi(1));
    (0..p).fold(Poly::one(), |acc, _| acc.mul(&xi))
}

fn describe(rs: &RootSystem, e: &LedgerEntry, sq: &MaximalSquare, rho: RootId) -> String {
    format!(
        "{} {}: beta_1 = {}, beta_-1 = {}, rho = {}",
        rs.id(),
        e.name,
        rs.root(sq.member(1)),
        rs.root(sq.member(-1)),
        rs.root(rho)
    )
}

/// Checks one ledger identity for the rooted square `sq` (with
/// `alpha = beta_1`, `beta = beta_-1`) and root `rho`, symbolically in `xi`
/// and every coordinate of `v`. `None` means the residual is zero.
pub fn verify_case_identity(
    rs: &RootSystem,
    signs: &SignTable,
    e: &LedgerEntry,
    sq: &MaximalSquare,
    rho: RootId,
) -> Option<Witness> {
    if !sub_case_holds(rs, e, sq, rho) {
        return Some(Witness::new(format!("{}: configuration outside the sub-case", describe(rs, e, sq, rho))));
    }
    let (a, b) = (sq.member(1), sq.member(-1));
    let form = match e.form {
        FormKind::Pi2 => pi2_rooted(rs, signs, a, b),
        FormKind::TwoPi3 => eq_2pi3(rs, signs, a, b),
        FormKind::Pi => eq_pi(rs, signs, a, b),
    }
    .expect("square pair is orthogonal");
    let terms = match targets(rs, signs, e, sq, rho) {
        Ok(t) => t,
        Err(err) => return Some(Witness::new(format!("{}: target not defined: {}", describe(rs, e, sq, rho), err))),
    };
    let p = Polynomials;
    let v: AdjointVector<Poly> = generic_vector(rs);
    let w = symbolic_action(rs, signs, rho);
    let mut residual = evaluate_form(&p, &form, &w).unwrap().sub(&evaluate_form(&p, &form, &v).unwrap());
    for t in &terms {
        let value = evaluate_form(&p, &t.form, &v).unwrap();
        let coeff = xi_power(t.power).scale(&t.coefficient.into());
        residual = residual.sub(&coeff.mul(&value));
    }
    (!residual.is_zero()).then(|| Witness::with_residual(describe(rs, e, sq, rho), residual.to_string()))
}

fn sample_config(
    rs: &RootSystem,
    catalog: &SquareCatalog,
    e: &LedgerEntry,
    rng: &mut impl rand::Rng,
) -> (MaximalSquare, RootId) {
    loop {
        let base = catalog.squares().choose(rng).unwrap();
        let roots: Vec<i32> = base.indices().collect();
        let sq = base.rooted(*roots.choose(rng).unwrap()).unwrap();
        let idx: Vec<i32> = sq.indices().collect();
        let pick = |rng: &mut _, keep: &dyn Fn(i32) -> bool| -> i32 {
            *idx.iter().filter(|&&i| keep(i)).collect::<Vec<_>>().choose(rng).copied().unwrap()
        };
        let j = match e.sub {
            SubCase::Any if e.class == RhoClass::InSquare => 1,
            SubCase::Any => pick(rng, &|_| true),
            SubCase::JOne => 1,
            SubCase::JMinusOne => -1,
            SubCase::JOther => pick(rng, &|i| i != 1 && i != -1),
            SubCase::JNotMinusOne => pick(rng, &|i| i != -1),
            SubCase::InnerMinusOne | SubCase::InnerZero => 0,
        };
        let rho = match e.class {
            RhoClass::InSquare => sq.member(j),
            RhoClass::Opposite => rs.neg(sq.member(j)),
            RhoClass::TwoThirds => {
                let want = if e.sub == SubCase::InnerZero { 0 } else { -1 };
                let cands: Vec<RootId> = rs
                    .ids()
                    .filter(|&r| {
                        classify_root_vs_square(rs, r, &sq) == AngleClass::TwoThirds && rs.inner(sq.member(1), r) == want
                    })
                    .collect();
                match cands.choose(rng) {
                    Some(&r) => r,
                    None => continue,
                }
            }
        };
        return (sq, rho);
    }
}

/// Every ledger identity on `samples` seeded configurations.
pub fn ledger_suite(rs: &RootSystem, signs: &SignTable, seed: u64, samples: usize) -> Vec<CheckResult> {
    let catalog = SquareCatalog::new(rs);
    ledger_entries()
        .iter()
        .map(|e| {
            let name = format!("cases.{}", e.name);
            let mut rng = rng_for(seed, &name);
            let configs: Vec<_> = (0..samples).map(|_| sample_config(rs, &catalog, e, &mut rng)).collect();
            let outcomes: Vec<_> =
                configs.par_iter().map(|(sq, rho)| verify_case_identity(rs, signs, e, sq, *rho)).collect();
            CheckResult::from_outcomes(name, outcomes)
        })
        .collect()
}
