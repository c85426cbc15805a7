use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::report::{CheckResult, Witness};
use super::rng_for;
use crate::equations::pi2_rooted;
use crate::root_system::{Family, RootId, RootSystem};
use crate::signs::SignTable;
use crate::squares::{
    class_predicates, conjugate_pair, extend_a3_to_d4, is_a3_chain, modified_square, pair_sets, pair_sets_from_square,
    sign_column, square_of_pair, SquareCatalog,
};

/// Systems with at most this many roots are scanned exhaustively.
const EXHAUSTIVE_ROOTS: usize = 240;

fn show(rs: &RootSystem, ids: &[RootId]) -> String {
    ids.iter().map(|&r| rs.root(r).to_string()).collect::<Vec<_>>().join(" ")
}

fn expected_dim(rs: &RootSystem) -> usize {
    let l = rs.rank();
    match (rs.id().family(), l) {
        (Family::D, _) => l * (2 * l - 1),
        (Family::E, 6) => 78,
        (Family::E, 7) => 133,
        (Family::E, _) => 248,
    }
}

fn sample<T: Clone>(items: &[T], exhaustive: bool, n: usize, rng: &mut impl rand::Rng) -> Vec<T> {
    if exhaustive {
        items.to_vec()
    } else {
        (0..n).map(|_| items.choose(rng).unwrap().clone()).collect()
    }
}

fn a3_chains(rs: &RootSystem) -> Vec<(RootId, RootId, RootId)> {
    let mut out = Vec::new();
    for a in rs.ids() {
        for b in rs.ids().filter(|&b| rs.inner(a, b) == -1) {
            for c in rs.ids().filter(|&c| rs.inner(b, c) == -1 && rs.inner(a, c) == 0) {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn random_a3_chain(rs: &RootSystem, rng: &mut impl rand::Rng) -> (RootId, RootId, RootId) {
    let ids: Vec<RootId> = rs.ids().collect();
    loop {
        let a = *ids.choose(rng).unwrap();
        let bs: Vec<_> = rs.ids().filter(|&b| rs.inner(a, b) == -1).collect();
        let b = *bs.choose(rng).unwrap();
        let cs: Vec<_> = rs.ids().filter(|&c| rs.inner(b, c) == -1 && rs.inner(a, c) == 0).collect();
        if let Some(&c) = cs.choose(rng) {
            return (a, b, c);
        }
    }
}

/// Root counts, square census, pair-set cardinalities and constructions,
/// sign columns, the root-versus-square classification and `A_3 -> D_4`.
pub fn combinatorics_suite(rs: &RootSystem, signs: &SignTable, seed: u64, samples: usize) -> Vec<CheckResult> {
    let exhaustive = rs.len() <= EXHAUSTIVE_ROOTS;
    let mut checks = Vec::new();

    let dim = expected_dim(rs);
    checks.push(CheckResult::from_outcomes(
        "combinatorics.dimensions",
        [(rs.dim() != dim || rs.len() != dim - rs.rank())
            .then(|| Witness::new(format!("dim {} roots {}, expected dim {}", rs.dim(), rs.len(), dim)))],
    ));

    let ordered: Vec<(RootId, RootId)> = rs
        .ids()
        .flat_map(|a| rs.ids().map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && rs.inner(a, b) == 0)
        .collect();
    let unordered = ordered.len() / 2;
    let mut rng = rng_for(seed, "combinatorics.pairs");
    let tested = sample(&ordered, exhaustive, samples, &mut rng);
    let k = rs.k();

    let per_pair: Vec<_> = tested
        .par_iter()
        .map(|&(a, b)| {
            let sq = square_of_pair(rs, a, b).expect("orthogonal pair");
            let direct = pair_sets(rs, a, b).expect("orthogonal pair");
            let via_square = pair_sets_from_square(rs, a, b).expect("orthogonal pair");
            (a, b, sq, direct, via_square)
        })
        .collect();

    checks.push(CheckResult::from_outcomes(
        "combinatorics.nominal_k",
        per_pair.iter().map(|(a, b, sq, p, _)| {
            let ok = sq.pairs_len() == k
                && p.two_pi3.len() == 2 * (k - 1)
                && p.pi.len() == 2 * (k - 1)
                && p.pi_prime.len() == 2 * (k - 1);
            (!ok).then(|| {
                Witness::new(format!(
                    "{}: square has {} pairs, |S_2pi/3| = {}, |S_pi| = {}, |S'_pi| = {}; expected k = {}, 2(k-1) = {}",
                    show(rs, &[*a, *b]),
                    sq.pairs_len(),
                    p.two_pi3.len(),
                    p.pi.len(),
                    p.pi_prime.len(),
                    k,
                    2 * (k - 1)
                ))
            })
        }),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.pair_set_sizes",
        per_pair.iter().map(|(a, b, sq, p, _)| {
            let m = sq.pairs_len();
            let ok = p.pi2.len() == m - 1
                && p.two_pi3.len() == 2 * (m - 1)
                && p.pi.len() == 2 * (m - 1)
                && p.pi_prime.len() == 2 * (m - 1);
            (!ok).then(|| Witness::new(show(rs, &[*a, *b])))
        }),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.pair_set_routes",
        per_pair.iter().map(|(a, b, _, d, s)| (d != s).then(|| Witness::new(show(rs, &[*a, *b])))),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.pi_set_square",
        per_pair.iter().map(|(a, b, sq, p, _)| {
            let mut got: Vec<RootId> = p.pi.iter().map(|&(g, _)| rs.neg(g)).chain([*a, *b]).collect();
            let mut want = sq.members();
            got.sort();
            want.sort();
            (got != want).then(|| Witness::new(show(rs, &[*a, *b])))
        }),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.conjugation",
        per_pair.iter().map(|(a, b, sq, p, _)| {
            let mut classes = 0;
            for &pair in &p.two_pi3 {
                let c = match conjugate_pair(rs, *a, *b, pair) {
                    Ok(c) => c,
                    Err(_) => return Some(Witness::new(show(rs, &[*a, *b, pair.0, pair.1]))),
                };
                if !p.two_pi3.contains(&c) || conjugate_pair(rs, *a, *b, c).ok() != Some(pair) || c == pair {
                    return Some(Witness::new(show(rs, &[*a, *b, pair.0, pair.1])));
                }
                if pair < c {
                    classes += 1;
                }
            }
            (classes != sq.pairs_len() - 1).then(|| Witness::new(format!("{}: {} classes", show(rs, &[*a, *b]), classes)))
        }),
    ));

    let catalog = SquareCatalog::new(rs);
    checks.push(CheckResult::from_outcomes(
        "combinatorics.census_nominal_k",
        [(catalog.len() * k != unordered).then(|| {
            Witness::new(format!("{} squares x k = {} != {} orthogonal pairs", catalog.len(), k, unordered))
        })],
    ));
    let covered: usize = catalog.squares().iter().map(|s| s.pairs_len()).sum();
    checks.push(CheckResult::from_outcomes(
        "combinatorics.census",
        [(covered != unordered)
            .then(|| Witness::new(format!("squares cover {} pairs, {} orthogonal pairs", covered, unordered)))],
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.square_validity",
        catalog.squares().par_iter().map(|sq| (!sq.is_valid(rs)).then(|| Witness::new(format!("{:?}", sq.sigma())))).collect::<Vec<_>>(),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.modified_square",
        catalog
            .squares()
            .par_iter()
            .flat_map_iter(|sq| {
                sq.indices().map(move |j| {
                    let m = modified_square(rs, sq, j).expect("valid index");
                    let sigma = rs.root(sq.member(j)).sub(rs.root(sq.member(-j)));
                    let ok = m.is_valid(rs)
                        && m.member(j) == sq.member(j)
                        && m.member(-j) == rs.neg(sq.member(-j))
                        && m.sigma() == sigma.as_slice();
                    (!ok).then(|| Witness::new(format!("{:?} j={}", sq.sigma(), j)))
                })
            })
            .collect::<Vec<_>>(),
    ));

    checks.push(CheckResult::from_outcomes(
        "combinatorics.sign_columns",
        catalog
            .squares()
            .par_iter()
            .flat_map_iter(|sq| {
                let cols: Vec<_> = sq.indices().map(|j| sign_column(signs, rs, sq, j).unwrap()).collect();
                let idx: Vec<i32> = sq.indices().collect();
                let mut out = Vec::new();
                for (hj, ch) in cols.iter().enumerate() {
                    for (jj, cj) in cols.iter().enumerate() {
                        let (h, j) = (idx[hj], idx[jj]);
                        let chj = ch.at(sq, j);
                        let ok = idx.iter().all(|&i| ch.at(sq, i) == chj * cj.at(sq, i));
                        out.push((!ok).then(|| Witness::new(format!("{:?} h={} j={}", sq.sigma(), h, j))));
                    }
                }
                out
            })
            .collect::<Vec<_>>(),
    ));
    checks.push(CheckResult::from_outcomes(
        "combinatorics.pi2_pair_choice",
        catalog
            .squares()
            .par_iter()
            .flat_map_iter(|sq| {
                let m = sq.pairs_len() as i32;
                let forms: Vec<_> =
                    (1..=m).map(|i| pi2_rooted(rs, signs, sq.member(i), sq.member(-i)).unwrap()).collect();
                let mut out = Vec::new();
                for h in 1..=m {
                    let ch = sign_column(signs, rs, sq, h).unwrap();
                    for j in 1..=m {
                        let scaled = forms[j as usize - 1].scaled(ch.at(sq, j) as i64);
                        let ok = forms[h as usize - 1].same_polynomial(&scaled);
                        out.push((!ok).then(|| Witness::new(format!("{:?} h={} j={}", sq.sigma(), h, j))));
                    }
                }
                out
            })
            .collect::<Vec<_>>(),
    ));

    let roots: Vec<RootId> = rs.ids().collect();
    checks.push(CheckResult::from_outcomes(
        "combinatorics.classification",
        catalog
            .squares()
            .par_iter()
            .flat_map_iter(|sq| {
                roots.iter().map(move |&rho| {
                    let p = class_predicates(rs, rho, sq);
                    let doubled = rs.doubled_inner_coeffs(rs.root(rho).coeffs(), sq.sigma());
                    let expect = [2, -2, 0, 1, -1];
                    let hits: Vec<usize> = (0..5).filter(|&c| p[c]).collect();
                    let ok = hits.len() == 1 && expect[hits[0]] == doubled;
                    (!ok).then(|| Witness::new(format!("{} vs {:?}: {:?}", rs.root(rho), sq.sigma(), p)))
                })
            })
            .collect::<Vec<_>>(),
    ));

    let chains = if exhaustive {
        a3_chains(rs)
    } else {
        let mut rng = rng_for(seed, "combinatorics.a3_to_d4");
        (0..samples).map(|_| random_a3_chain(rs, &mut rng)).collect()
    };
    checks.push(CheckResult::from_outcomes(
        "combinatorics.a3_to_d4",
        chains
            .par_iter()
            .map(|&(a, b, c)| match extend_a3_to_d4(rs, a, b, c) {
                Ok(d) if rs.inner(d, a) == 0 && rs.inner(d, c) == 0 && rs.inner(d, b) == -1 => None,
                _ => Some(Witness::new(show(rs, &[a, b, c]))),
            })
            .collect::<Vec<_>>(),
    ));
    let l = rs.rank();
    let (a, b, c, d) = match rs.id().family() {
        Family::E => (rs.simple(2), rs.simple(4), rs.simple(3), rs.simple(5)),
        Family::D => (rs.simple(l - 1), rs.simple(l - 2), rs.simple(l), rs.simple(l - 3)),
    };
    let witness_ok = is_a3_chain(rs, a, b, c) && rs.inner(d, a) == 0 && rs.inner(d, c) == 0 && rs.inner(d, b) == -1;
    checks.push(CheckResult::from_outcomes(
        "combinatorics.a3_named_witness",
        [(!witness_ok).then(|| Witness::new(show(rs, &[a, b, c, d])))],
    ));
    checks
}
