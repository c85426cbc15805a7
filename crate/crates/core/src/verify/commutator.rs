use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::report::{CheckResult, Witness};
use super::rng_for;
use crate::adjoint::{apply_word, generic_vector, symbolic_action, Word};
use crate::equations::{eq_2pi3, eq_pi, evaluate_form, pi2_rooted};
use crate::poly::{Poly, Var};
use crate::ring::Polynomials;
use crate::root_system::{RootId, RootSystem};
use crate::signs::SignTable;
use crate::squares::{classify_root_vs_square, AngleClass, MaximalSquare, SquareCatalog};

/// `x_rho(xi) = [x_a(xi), x_b(epsilon)]` with the classes of `a`, `b`
/// relative to the square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: RootId,
    pub b: RootId,
    pub epsilon: i32,
    pub a_class: AngleClass,
    pub b_class: AngleClass,
}

/// The factor roots `(a, b)` with `a + b = rho`: for class `pi/2`,
/// `a = beta_-j + rho`, `b = -beta_-j` where `(rho, beta_j) = 1/2`; for class
/// `pi/3`, `a = rho - m`, `b = m` where `m` is a member with `(rho, m) = 1/2`.
pub fn commutator_decomposition(rs: &RootSystem, sq: &MaximalSquare, rho: RootId) -> Option<(RootId, RootId)> {
    match classify_root_vs_square(rs, rho, sq) {
        AngleClass::Perp => sq
            .indices()
            .find(|&j| rs.inner(rho, sq.member(j)) == 1 && rs.inner(rho, sq.member(-j)) == -1)
            .map(|j| (rs.sum(sq.member(-j), rho).unwrap(), rs.neg(sq.member(-j)))),
        AngleClass::Third => sq
            .indices()
            .find(|&i| rs.inner(rho, sq.member(i)) == 1)
            .map(|i| (rs.diff(rho, sq.member(i)).unwrap(), sq.member(i))),
        _ => None,
    }
}

fn describe(rs: &RootSystem, sq: &MaximalSquare, rho: RootId) -> String {
    format!("{} sigma = {:?}, rho = {}", rs.id(), sq.sigma(), rs.root(rho))
}

/// Finds `epsilon` in `{1, -1}` with `[x_a(xi), x_b(epsilon)] = x_rho(xi)` on
/// the generic vector, i.e. as operators.
pub fn verify_commutator_reduction(
    rs: &RootSystem,
    signs: &SignTable,
    sq: &MaximalSquare,
    rho: RootId,
) -> std::result::Result<Decomposition, Witness> {
    let class = classify_root_vs_square(rs, rho, sq);
    let (a, b) = commutator_decomposition(rs, sq, rho)
        .ok_or_else(|| Witness::new(format!("{}: no decomposition for class {}", describe(rs, sq, rho), class.name())))?;
    let (a_class, b_class) = (classify_root_vs_square(rs, a, sq), classify_root_vs_square(rs, b, sq));
    let expected = match (class, a_class, b_class) {
        (AngleClass::Perp, AngleClass::InSquare(_), AngleClass::OppositeSquare(_)) => true,
        (AngleClass::Third, AngleClass::TwoThirds, AngleClass::InSquare(_)) => true,
        _ => false,
    };
    if !expected {
        return Err(Witness::new(format!(
            "{}: factor classes {} and {}",
            describe(rs, sq, rho),
            a_class.name(),
            b_class.name()
        )));
    }
    let p = Polynomials;
    let v = generic_vector(rs);
    let target = symbolic_action(rs, signs, rho);
    let xi = Poly::var(Var::xi(1));
    for epsilon in [1, -1] {
        let word = Word::commutator(&p, a, xi.clone(), b, Poly::constant(epsilon.into()));
        if apply_word(rs, signs, &p, &word, &v).unwrap() == target {
            return Ok(Decomposition { a, b, epsilon, a_class, b_class });
        }
    }
    Err(Witness::new(format!("{}: no epsilon in {{1, -1}} works", describe(rs, sq, rho))))
}

/// For `rho` orthogonal to every member of the square, `x_rho(xi)` fixes
/// every form attached to the square's pairs (symbolically).
pub fn orthogonal_fixes_forms(rs: &RootSystem, signs: &SignTable, sq: &MaximalSquare, rho: RootId) -> Option<Witness> {
    let p = Polynomials;
    let v = generic_vector(rs);
    let w = symbolic_action(rs, signs, rho);
    for i in sq.indices() {
        let (a, b) = (sq.member(i), sq.member(-i));
        let forms = [pi2_rooted(rs, signs, a, b), eq_2pi3(rs, signs, a, b), eq_pi(rs, signs, a, b)];
        for f in forms {
            let f = f.expect("square pair is orthogonal");
            let d = evaluate_form(&p, &f, &w).unwrap().sub(&evaluate_form(&p, &f, &v).unwrap());
            if !d.is_zero() {
                return Some(Witness::with_residual(
                    format!("{} pair {}: {} form moves", describe(rs, sq, rho), i, f.kind().label()),
                    d.to_string(),
                ));
            }
        }
    }
    None
}

/// `samples` seeded `(rho, square)` configurations for each of the classes
/// `pi/2` and `pi/3`.
pub fn commutator_suite(rs: &RootSystem, signs: &SignTable, seed: u64, samples: usize) -> Vec<CheckResult> {
    let catalog = SquareCatalog::new(rs);
    let mut checks = Vec::new();
    for (label, class) in [("perp", AngleClass::Perp), ("third", AngleClass::Third)] {
        let mut rng = rng_for(seed, &format!("commutator.{}", label));
        let mut configs = Vec::with_capacity(samples);
        while configs.len() < samples {
            let sq = catalog.squares().choose(&mut rng).unwrap();
            let cands: Vec<RootId> = rs.ids().filter(|&r| classify_root_vs_square(rs, r, sq) == class).collect();
            if let Some(&rho) = cands.choose(&mut rng) {
                configs.push((sq, rho));
            }
        }
        let results: Vec<_> =
            configs.par_iter().map(|&(sq, rho)| verify_commutator_reduction(rs, signs, sq, rho)).collect();
        checks.push(CheckResult::from_outcomes(
            format!("commutator.{}", label),
            results.iter().map(|r| r.as_ref().err().cloned()),
        ));
        if class == AngleClass::Perp {
            let orthogonal: Vec<_> = configs
                .iter()
                .filter(|&&(sq, rho)| sq.members().iter().all(|&m| rs.inner(rho, m) == 0))
                .collect();
            if !orthogonal.is_empty() {
                checks.push(CheckResult::from_outcomes(
                    "commutator.perp.orthogonal_fixes_forms",
                    orthogonal.par_iter().map(|&&(sq, rho)| orthogonal_fixes_forms(rs, signs, sq, rho)).collect::<Vec<_>>(),
                ));
            }
        }
        checks.push(CheckResult::from_outcomes(
            format!("commutator.{}.epsilon_is_structure_constant", label),
            results.iter().zip(&configs).filter_map(|(r, &(sq, rho))| {
                r.as_ref().ok().map(|d| {
                    (d.epsilon != signs.n(d.a, d.b)).then(|| {
                        Witness::new(format!("{}: epsilon {} vs N = {}", describe(rs, sq, rho), d.epsilon, signs.n(d.a, d.b)))
                    })
                })
            }),
        ));
    }
    checks
}
