//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Exits nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use adjoint_orbit::equations::{generate_all_equations, pi2_rooted};
use adjoint_orbit::root_system::{Family, RootId, RootSystem, SystemId};
use adjoint_orbit::signs::SignTable;
use adjoint_orbit::squares::{extend_a3_to_d4, pair_sets, sign_column, MaximalSquare, SquareCatalog};
use adjoint_orbit::verify::{commutator_suite, jacobi_suite, ledger_suite, negative_control, words_suite, CheckResult};
use adjoint_orbit::ring::RingSpec;
use common::{adjoint_dim, model, nominal_k, orthogonal_pairs, pair_set_sizes};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240601;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new(), notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, note: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.notes.push(note());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration, what: &str) {
        self.require(elapsed <= limit, || format!("{} took {:.1?}, limit {:.0?}", what, elapsed, limit));
    }
}

fn systems() -> Vec<(SystemId, RootSystem, SignTable)> {
    SystemId::standard()
        .into_iter()
        .map(|id| {
            let rs = RootSystem::new(id).unwrap();
            let signs = SignTable::new(&rs);
            (id, rs, signs)
        })
        .collect()
}

fn exhaustive(id: SystemId) -> bool {
    matches!((id.family(), id.rank()), (Family::D, 5) | (Family::E, 6))
}

fn rng(label: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ label)
}

fn orthogonal_ids(rs: &RootSystem) -> Vec<(RootId, RootId)> {
    rs.ids()
        .flat_map(|a| rs.ids().map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && rs.inner(a, b) == 0)
        .collect()
}

fn check_all(o: &mut Outcome, id: SystemId, checks: &[CheckResult], names: Option<&[&str]>, min_attempts: u64) {
    for c in checks {
        if names.map_or(true, |n| n.contains(&c.name.as_str())) {
            o.require(c.ok() && c.attempted >= min_attempts, || {
                let w = c.failures.first().map(|w| w.detail.clone()).unwrap_or_default();
                format!("{} {}: {}/{} {}", id, c.name, c.passed, c.attempted, w)
            });
        }
    }
}

fn c1_root_counts() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut seen = Vec::new();
    for id in SystemId::standard() {
        let rs = RootSystem::new(id).unwrap();
        let dim = adjoint_dim(id);
        o.require(rs.dim() == dim, || format!("{}: dim {} != {}", id, rs.dim(), dim));
        o.require(rs.len() == dim - id.rank(), || format!("{}: {} roots != {}", id, rs.len(), dim - id.rank()));
        o.require(rs.rank() == id.rank(), || format!("{}: rank {}", id, rs.rank()));
        o.require(model(id).len() == rs.len(), || format!("{}: Euclidean model disagrees", id));
        seen.push(format!("{} {}/{}", id, rs.dim(), rs.len()));
    }
    o.within(start.elapsed(), Duration::from_secs(1), "construction");
    o.detail = seen.join(", ");
    o
}

fn c2_cardinalities(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut parts = Vec::new();
    for (id, rs, _) in all {
        let k = nominal_k(*id);
        let want = 2 * (k - 1);
        let pairs = orthogonal_ids(rs);
        let tested: Vec<_> = if exhaustive(*id) {
            pairs
        } else {
            let mut r = rng(2);
            (0..10_000).map(|_| *pairs.choose(&mut r).unwrap()).collect()
        };
        let mut bad = 0usize;
        let mut observed = HashSet::new();
        for &(a, b) in &tested {
            let sets = pair_sets(rs, a, b).unwrap();
            let size = sets.pi2.len() + 1;
            let obs = (size, sets.two_pi3.len(), sets.pi.len(), sets.pi_prime.len());
            observed.insert(obs);
            if obs != (k, want, want, want) {
                bad += 1;
            }
        }
        // the same counts on the Euclidean model
        let m = model(*id);
        let mpairs = orthogonal_pairs(&m);
        let msample: Vec<_> = if exhaustive(*id) {
            mpairs
        } else {
            let mut r = rng(22);
            (0..10_000).map(|_| *mpairs.choose(&mut r).unwrap()).collect()
        };
        let model_bad = msample
            .iter()
            .filter(|&&(i, j)| pair_set_sizes(&m, &m[i], &m[j]) != (want, want, want))
            .count();
        let mut obs: Vec<_> = observed.into_iter().collect();
        obs.sort();
        o.require(bad == 0 && model_bad == 0, || {
            format!(
                "{}: expected k = {}, |S| = {}; {} of {} pairs differ (model: {}); observed (|square|, |S_2pi/3|, |S_pi|, |S'_pi|) = {:?}",
                id,
                k,
                want,
                bad,
                tested.len(),
                model_bad,
                obs
            )
        });
        parts.push(format!("{} {}", id, if bad == 0 && model_bad == 0 { "ok" } else { "mismatch" }));
    }
    o.within(start.elapsed(), Duration::from_secs(30), "cardinalities");
    o.detail = parts.join(", ");
    o
}

fn c3_identities(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut parts = Vec::new();
    for (id, rs, signs) in all {
        let checks = jacobi_suite(rs, signs, SEED, 100_000);
        check_all(&mut o, *id, &checks, None, 1);
        let bracket = checks.iter().find(|c| c.name == "jacobi.bracket").unwrap();
        let total: u64 = checks.iter().map(|c| c.attempted).sum();
        if exhaustive(*id) {
            let d = rs.dim() as u64;
            o.require(bracket.attempted == d * d * d, || format!("{}: bracket scan not exhaustive", id));
        } else {
            o.require(total >= 100_000, || format!("{}: only {} instances", id, total));
        }
        parts.push(format!("{} {}", id, total));
    }
    o.within(start.elapsed(), Duration::from_secs(60), "identity suite");
    o.detail = format!("instances: {}", parts.join(", "));
    o
}

fn c4_census(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut parts = Vec::new();
    for (id, rs, _) in all {
        let squares = SquareCatalog::new(rs).len();
        let pairs = orthogonal_pairs(&model(*id)).len();
        let k = nominal_k(*id);
        o.require(squares * k == pairs, || format!("{}: {} squares x k = {} = {} != {} pairs", id, squares, k, squares * k, pairs));
        if *id == SystemId::e(8).unwrap() {
            o.require(squares == pairs / 7 && squares == 2160, || format!("E8: {} squares", squares));
        }
        parts.push(format!("{} {}x{}={}", id, squares, k, pairs));
    }
    o.within(start.elapsed(), Duration::from_secs(30), "census");
    o.detail = parts.join(", ");
    o
}

fn sign_lemma_holds(rs: &RootSystem, signs: &SignTable, sq: &MaximalSquare) -> bool {
    let idx: Vec<i32> = sq.indices().collect();
    // c(j)_i straight from the structure constants
    let c = |j: i32, i: i32| -> i32 {
        if i == j || i == -j {
            1
        } else {
            -signs.n(sq.member(j), rs.neg(sq.member(i))) * signs.n(sq.member(-j), rs.neg(sq.member(-i)))
        }
    };
    for &j in &idx {
        let col = sign_column(signs, rs, sq, j).unwrap();
        if idx.iter().any(|&i| col.at(sq, i) != c(j, i)) {
            return false;
        }
        for &h in &idx {
            if idx.iter().any(|&i| c(h, i) != c(h, j) * c(j, i)) {
                return false;
            }
        }
    }
    let m = sq.pairs_len() as i32;
    for h in 1..=m {
        let fh = pi2_rooted(rs, signs, sq.member(h), sq.member(-h)).unwrap();
        for j in 1..=m {
            let fj = pi2_rooted(rs, signs, sq.member(j), sq.member(-j)).unwrap();
            if !fh.same_polynomial(&fj.scaled(c(h, j) as i64)) {
                return false;
            }
        }
    }
    true
}

fn c5_sign_columns(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    for (id, rs, signs) in all {
        let cat = SquareCatalog::new(rs);
        let tested: Vec<&MaximalSquare> = match id.to_string().as_str() {
            "E6" => cat.squares().iter().collect(),
            "E8" => {
                let mut r = rng(5);
                (0..1000).map(|_| cat.squares().choose(&mut r).unwrap()).collect()
            }
            _ => continue,
        };
        let bad = tested.iter().filter(|sq| !sign_lemma_holds(rs, signs, sq)).count();
        o.require(bad == 0, || format!("{}: {} squares violate the sign-column lemma", id, bad));
        o.detail.push_str(&format!("{} {} squares; ", id, tested.len()));
    }
    o
}

/// Which of the five cases hold, decided from scalar products alone.
fn cases(rs: &RootSystem, rho: RootId, sq: &MaximalSquare) -> Vec<usize> {
    let k = sq.pairs_len() as i32;
    let d = |i: i32| rs.inner(rho, sq.member(i));
    let idx: Vec<i32> = sq.indices().collect();
    let mut out = Vec::new();
    for (case, sign) in [(1, 1), (2, -1)] {
        let hit = idx.iter().any(|&i| {
            rs.root(rho).coeffs().iter().zip(rs.root(sq.member(i)).coeffs()).all(|(x, y)| *x == sign * y)
                && d(-i) == 0
                && idx.iter().filter(|&&j| j != i && j != -i).all(|&j| d(j) == sign)
        });
        if hit {
            out.push(case);
        }
    }
    let pair = |i: i32| {
        let (x, y) = (d(i), d(-i));
        (x.min(y), x.max(y))
    };
    if (1..=k).any(|i| pair(i) == (0, 0)) && (1..=k).all(|i| pair(i) == (0, 0) || pair(i) == (-1, 1)) {
        out.push(3);
    }
    if (1..=k).all(|i| pair(i) == (0, 1)) {
        out.push(4);
    }
    if (1..=k).all(|i| pair(i) == (-1, 0)) {
        out.push(5);
    }
    out
}

fn c6_classification(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    let expected = [0, 2, -2, 0, 1, -1];
    for (id, rs, _) in all {
        let cat = SquareCatalog::new(rs);
        let ids: Vec<RootId> = rs.ids().collect();
        let configs: Vec<(RootId, &MaximalSquare)> = match id.to_string().as_str() {
            "E6" => cat.squares().iter().flat_map(|sq| ids.iter().map(move |&r| (r, sq))).collect(),
            "E8" => {
                let mut r = rng(6);
                (0..10_000).map(|_| (*ids.choose(&mut r).unwrap(), cat.squares().choose(&mut r).unwrap())).collect()
            }
            _ => continue,
        };
        let mut bad = 0;
        for &(rho, sq) in &configs {
            let hit = cases(rs, rho, sq);
            let doubled = rs.doubled_inner_coeffs(rs.root(rho).coeffs(), sq.sigma());
            let class = adjoint_orbit::squares::classify_root_vs_square(rs, rho, sq);
            if hit.len() != 1 || expected[hit[0]] != doubled || class.doubled_sigma_product() != doubled {
                bad += 1;
            }
        }
        o.require(bad == 0, || format!("{}: {} of {} configurations misclassified", id, bad, configs.len()));
        o.detail.push_str(&format!("{} {} configurations; ", id, configs.len()));
    }
    o
}

fn c7_a3_d4(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    for (id, rs, _) in all {
        let ids: Vec<RootId> = rs.ids().collect();
        let chains: Vec<(RootId, RootId, RootId)> = if exhaustive(*id) {
            let mut out = Vec::new();
            for &a in &ids {
                for &b in ids.iter().filter(|&&b| rs.inner(a, b) == -1) {
                    for &c in ids.iter().filter(|&&c| rs.inner(b, c) == -1 && rs.inner(a, c) == 0) {
                        out.push((a, b, c));
                    }
                }
            }
            out
        } else {
            let mut r = rng(7);
            let mut out = Vec::new();
            while out.len() < 10_000 {
                let (a, b, c) = (*ids.choose(&mut r).unwrap(), *ids.choose(&mut r).unwrap(), *ids.choose(&mut r).unwrap());
                if rs.inner(a, b) == -1 && rs.inner(b, c) == -1 && rs.inner(a, c) == 0 {
                    out.push((a, b, c));
                }
            }
            out
        };
        let bad = chains
            .iter()
            .filter(|&&(a, b, c)| match extend_a3_to_d4(rs, a, b, c) {
                Ok(d) => !(rs.inner(d, a) == 0 && rs.inner(d, c) == 0 && rs.inner(d, b) == -1),
                Err(_) => true,
            })
            .count();
        o.require(bad == 0, || format!("{}: {} of {} chains without extension", id, bad, chains.len()));
        let l = rs.rank();
        let (a, b, c, d) = match id.family() {
            Family::E => (rs.simple(2), rs.simple(4), rs.simple(3), rs.simple(5)),
            Family::D => (rs.simple(l - 1), rs.simple(l - 2), rs.simple(l), rs.simple(l - 3)),
        };
        let named = rs.inner(a, b) == -1
            && rs.inner(b, c) == -1
            && rs.inner(a, c) == 0
            && rs.inner(d, a) == 0
            && rs.inner(d, c) == 0
            && rs.inner(d, b) == -1;
        o.require(named, || format!("{}: named witness invalid", id));
        o.detail.push_str(&format!("{} {} chains; ", id, chains.len()));
    }
    o
}

fn c8_ledger(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    for (id, rs, signs) in all {
        let start = Instant::now();
        let checks = ledger_suite(rs, signs, SEED, 100);
        check_all(&mut o, *id, &checks, None, 100);
        o.require(checks.len() == 18, || format!("{}: {} entries", id, checks.len()));
        o.within(start.elapsed(), Duration::from_secs(180), &format!("{} ledger", id));
        o.detail.push_str(&format!("{} 18x100; ", id));
    }
    o
}

fn c9_commutators(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    for (id, rs, signs) in all {
        let checks = commutator_suite(rs, signs, SEED, 100);
        check_all(&mut o, *id, &checks, Some(&["commutator.perp", "commutator.third"]), 100);
        let perp = checks.iter().find(|c| c.name == "commutator.perp").unwrap();
        let third = checks.iter().find(|c| c.name == "commutator.third").unwrap();
        o.detail.push_str(&format!("{} pi/2 {}/{}, pi/3 {}/{}; ", id, perp.passed, perp.attempted, third.passed, third.attempted));
        if let Some(c) = checks.iter().find(|c| c.name == "commutator.perp.orthogonal_fixes_forms") {
            o.notes.push(format!(
                "{}: {} pi/2 configurations have rho orthogonal to the whole square; forms fixed in {} of them",
                id, c.attempted, c.passed
            ));
        }
    }
    o
}

fn c10_words(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let rings = [RingSpec::Integers, RingSpec::IntegersMod(4), RingSpec::IntegersMod(7)];
    for (id, rs, signs) in all {
        let checks = words_suite(rs, signs, SEED, 100, &rings).unwrap();
        let names = ["words.int", "words.zmod:4", "words.zmod:7", "words.basis_columns"];
        check_all(&mut o, *id, &checks, Some(&names), 1);
        o.require(checks.iter().filter(|c| c.name.starts_with("words.") && c.attempted == 100).count() == 3, || {
            format!("{}: expected 100 words per ring", id)
        });
        if id.to_string() == "E8" {
            let pairs = orthogonal_pairs(&model(*id)).len();
            let eqs = generate_all_equations(rs, signs);
            let want = pairs / 7 + 2 * pairs + pairs;
            o.require(eqs.len() == want && want == 47520, || format!("E8: {} forms, oracle {}", eqs.len(), want));
            let v = adjoint_orbit::adjoint::basis_vector(rs, &adjoint_orbit::ring::Integers, adjoint_orbit::root_system::Weight::Root(rs.ids().next().unwrap()));
            let t = Instant::now();
            let _ = eqs.nonvanishing(&adjoint_orbit::ring::Integers, &v).unwrap();
            o.within(t.elapsed(), Duration::from_secs(30), "E8 single-vector evaluation");
        }
    }
    o.within(start.elapsed(), Duration::from_secs(600), "word suite");
    o.detail = "100 words x {int, zmod:4, zmod:7} per system".into();
    o
}

fn c11_negative_control(all: &[(SystemId, RootSystem, SignTable)]) -> Outcome {
    let mut o = Outcome::new();
    for (id, rs, signs) in all {
        let eqs = generate_all_equations(rs, signs);
        let hit = negative_control(rs, &eqs);
        o.require(hit.is_some(), || format!("{}: every form vanishes on e^hat_1", id));
        if let Some(i) = hit {
            o.detail.push_str(&format!("{} {} form; ", id, eqs.forms()[i].kind().label()));
        }
    }
    o
}

fn main() -> ExitCode {
    let all = systems();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("root counts and ranks", Box::new(c1_root_counts)),
        ("k and pair-set cardinalities", Box::new(|| c2_cardinalities(&all))),
        ("structure-constant identities", Box::new(|| c3_identities(&all))),
        ("maximal-square census", Box::new(|| c4_census(&all))),
        ("sign-column lemma", Box::new(|| c5_sign_columns(&all))),
        ("root-versus-square classification", Box::new(|| c6_classification(&all))),
        ("A3 to D4 extension", Box::new(|| c7_a3_d4(&all))),
        ("symbolic case-identity ledger", Box::new(|| c8_ledger(&all))),
        ("commutator reduction", Box::new(|| c9_commutators(&all))),
        ("orbit membership of random words", Box::new(|| c10_words(&all))),
        ("negative control", Box::new(|| c11_negative_control(&all))),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} [{:.2?}] {}",
            n + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail.trim_end_matches("; ")
        );
        for note in &o.notes {
            println!("    {}", note);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
