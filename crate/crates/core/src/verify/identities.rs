use rand::Rng as _;
use rayon::prelude::*;

use super::report::{CheckResult, Witness};
use super::rng_for;
use crate::root_system::{RootId, RootSystem, Weight};
use crate::signs::{jacobiator, SignTable};
use crate::squares::square_of_pair;

/// Systems at most this large are scanned exhaustively.
pub(crate) const EXHAUSTIVE_ROOTS: usize = 72;

fn pairs(rs: &RootSystem) -> Vec<(RootId, RootId)> {
    rs.ids().flat_map(|a| rs.ids().map(move |b| (a, b))).collect()
}

fn show(rs: &RootSystem, ids: &[RootId]) -> String {
    ids.iter().map(|&r| rs.root(r).to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn weight_name(rs: &RootSystem, p: usize) -> String {
    match rs.weight_at(p) {
        Weight::Root(r) => rs.root(r).to_string(),
        Weight::Zero(s) => format!("h{}", s),
    }
}

/// Antisymmetry, negation rule, triangle and quadruple identities on every
/// pair, plus the Jacobi identity of the bracket (exhaustive for small
/// systems, `samples` random basis triples otherwise).
pub fn jacobi_suite(rs: &RootSystem, signs: &SignTable, seed: u64, samples: usize) -> Vec<CheckResult> {
    let all = pairs(rs);
    let summing: Vec<_> = all.iter().copied().filter(|&(a, b)| rs.sum(a, b).is_some()).collect();

    let antisymmetry = CheckResult::from_outcomes(
        "jacobi.antisymmetry",
        summing.par_iter().map(|&(a, b)| {
            (signs.n(a, b) != -signs.n(b, a)).then(|| Witness::new(show(rs, &[a, b])))
        }).collect::<Vec<_>>(),
    );
    let negation = CheckResult::from_outcomes(
        "jacobi.negation",
        summing.par_iter().map(|&(a, b)| {
            (signs.n(rs.neg(a), rs.neg(b)) != -signs.n(a, b)).then(|| Witness::new(show(rs, &[a, b])))
        }).collect::<Vec<_>>(),
    );
    let triangle = CheckResult::from_outcomes(
        "jacobi.triangle",
        summing.par_iter().map(|&(a, b)| {
            let c = rs.neg(rs.sum(a, b).unwrap());
            let (x, y, z) = (signs.n(a, b), signs.n(b, c), signs.n(c, a));
            (x != y || y != z).then(|| Witness::new(show(rs, &[a, b, c])))
        }).collect::<Vec<_>>(),
    );
    let orthogonal: Vec<_> = all.iter().copied().filter(|&(a, b)| a != b && rs.inner(a, b) == 0).collect();
    let quadruple = CheckResult::from_outcomes(
        "jacobi.quadruple",
        orthogonal
            .par_iter()
            .flat_map_iter(|&(a, b)| {
                let sq = square_of_pair(rs, a, b).expect("orthogonal pair");
                sq.pairs()
                    .iter()
                    .filter(|&&(g, d)| (g, d) != (a, b) && (d, g) != (a, b))
                    .map(|&(g, d)| {
                        let l = signs.n(a, rs.neg(g)) * signs.n(b, rs.neg(d));
                        let r = signs.n(a, rs.neg(d)) * signs.n(b, rs.neg(g));
                        (l != r).then(|| Witness::new(show(rs, &[a, b, g, d])))
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    );

    let dim = rs.dim();
    let triples: Vec<(usize, usize, usize)> = if rs.len() <= EXHAUSTIVE_ROOTS {
        (0..dim).flat_map(|x| (0..dim).flat_map(move |y| (0..dim).map(move |z| (x, y, z)))).collect()
    } else {
        let mut rng = rng_for(seed, "jacobi.bracket");
        (0..samples).map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim))).collect()
    };
    let jacobi = CheckResult::from_outcomes(
        "jacobi.bracket",
        triples
            .par_iter()
            .map(|&(x, y, z)| {
                let j = jacobiator(rs, signs, x, y, z);
                (!j.is_empty()).then(|| {
                    let names: Vec<String> = [x, y, z].iter().map(|&p| weight_name(rs, p)).collect();
                    Witness::with_residual(names.join(" "), format!("{:?}", j))
                })
            })
            .collect::<Vec<_>>(),
    );
    vec![antisymmetry, negation, triangle, quadruple, jacobi]
}
