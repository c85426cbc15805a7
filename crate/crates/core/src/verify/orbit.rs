use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{CheckResult, Witness};
use super::rng_for;
use crate::adjoint::{apply_word, basis_vector, Elementary, Word};
use crate::equations::{generate_all_equations, EquationSet};
use crate::error::{Error, Result};
use crate::json::word_to_json;
use crate::ring::{Integers, IntegersMod, Ring, RingSpec};
use crate::root_system::{RootId, RootSystem, Weight};
use crate::signs::SignTable;

/// Longest random word drawn by the word suite.
pub const MAX_WORD_LEN: usize = 12;

/// Applies `word` to `e^rho` and returns the indices of the forms that do
/// not vanish on the result (empty iff every form vanishes).
pub fn verify_orbit_membership<R: Ring>(
    rs: &RootSystem,
    signs: &SignTable,
    eqs: &EquationSet,
    ring: &R,
    word: &Word<R::Elem>,
    rho: RootId,
) -> Result<Vec<usize>> {
    let v = apply_word(rs, signs, ring, word, &basis_vector(rs, ring, Weight::Root(rho)))?;
    eqs.nonvanishing(ring, &v)
}

/// A form that is nonzero on `e^hat_1`, if any.
pub fn negative_control(rs: &RootSystem, eqs: &EquationSet) -> Option<usize> {
    let v = basis_vector(rs, &Integers, Weight::Zero(1));
    eqs.nonvanishing(&Integers, &v).ok()?.first().copied()
}

fn random_word<R: Ring>(
    rs: &RootSystem,
    rng: &mut ChaCha8Rng,
    xi: &impl Fn(&mut ChaCha8Rng) -> R::Elem,
) -> (RootId, Word<R::Elem>) {
    let ids: Vec<RootId> = rs.ids().collect();
    let rho = *ids.choose(rng).unwrap();
    let len = rng.gen_range(0..=MAX_WORD_LEN);
    let factors = (0..len).map(|_| Elementary::new(*ids.choose(rng).unwrap(), xi(rng))).collect();
    (rho, Word::new(factors))
}

fn words_check<R: Ring>(
    rs: &RootSystem,
    signs: &SignTable,
    eqs: &EquationSet,
    ring: &R,
    name: String,
    rng: &mut ChaCha8Rng,
    samples: usize,
    xi: impl Fn(&mut ChaCha8Rng) -> R::Elem,
) -> CheckResult {
    let words: Vec<_> = (0..samples).map(|_| random_word::<R>(rs, rng, &xi)).collect();
    let outcomes: Vec<_> = words
        .par_iter()
        .map(|(rho, word)| {
            let bad = verify_orbit_membership(rs, signs, eqs, ring, word, *rho).expect("word matches the system");
            (!bad.is_empty()).then(|| {
                let w = serde_json::to_string(&word_to_json(rs, ring, word)).unwrap();
                Witness::new(format!("{} rho = {}, word = {}: {} forms nonzero", rs.id(), rs.root(*rho), w, bad.len()))
            })
        })
        .collect();
    CheckResult::from_outcomes(name, outcomes)
}

/// Basis columns, `samples` random words per ring, and the `e^hat_1`
/// negative control, all against the full equation set.
pub fn words_suite(
    rs: &RootSystem,
    signs: &SignTable,
    seed: u64,
    samples: usize,
    rings: &[RingSpec],
) -> Result<Vec<CheckResult>> {
    let eqs = generate_all_equations(rs, signs);
    let mut checks = vec![CheckResult::from_outcomes(
        "words.basis_columns",
        rs.ids()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&rho| {
                let bad = verify_orbit_membership(rs, signs, &eqs, &Integers, &Word::default(), rho).unwrap();
                (!bad.is_empty()).then(|| Witness::new(format!("e^{}", rs.root(rho))))
            })
            .collect::<Vec<_>>(),
    )];
    for &spec in rings {
        let name = format!("words.{}", spec);
        let mut rng = rng_for(seed, &name);
        checks.push(match spec {
            RingSpec::Integers => words_check(rs, signs, &eqs, &Integers, name, &mut rng, samples, |r| {
                r.gen_range(-2i64..=2).into()
            }),
            RingSpec::IntegersMod(m) => {
                let ring = IntegersMod::new(m)?;
                words_check(rs, signs, &eqs, &ring, name, &mut rng, samples, move |r| r.gen_range(0..m))
            }
            RingSpec::Polynomials => return Err(Error::InvalidConfig("word suite runs over int or zmod:m".into())),
        });
    }
    checks.push(CheckResult::from_outcomes(
        "words.negative_control",
        [negative_control(rs, &eqs).is_none().then(|| Witness::new("every form vanishes on e^hat_1"))],
    ));
    Ok(checks)
}
