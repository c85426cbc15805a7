//! Independent oracles: the root systems realized as explicit vectors in
//! Euclidean space (coordinates doubled to stay integral), plus brute-force
//! counts computed on those vectors.

#![allow(dead_code)]

use std::collections::HashMap;

use adjoint_orbit::root_system::{Family, RootSystem, SystemId};
use adjoint_orbit::signs::SignTable;

pub type Vector = Vec<i32>;

pub fn setup(name: &str) -> (RootSystem, SignTable) {
    let rs = RootSystem::new(name.parse().unwrap()).unwrap();
    let signs = SignTable::new(&rs);
    (rs, signs)
}

/// Scalar product normalized so that roots have square length 2.
pub fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<i32>() / 4
}

fn d_model(l: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; l];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    out
}

fn e8_model() -> Vec<Vector> {
    let mut out = d_model(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    out
}

/// The roots of `system` as vectors; `E_7` and `E_6` are the roots of `E_8`
/// orthogonal to an `A_1` and an `A_2` respectively.
pub fn model(system: SystemId) -> Vec<Vector> {
    match (system.family(), system.rank()) {
        (Family::D, l) => d_model(l),
        (Family::E, r) => {
            let e8 = e8_model();
            let t1 = vec![2, 2, 0, 0, 0, 0, 0, 0];
            let t2 = vec![0, -2, 2, 0, 0, 0, 0, 0];
            let fixed: Vec<&Vector> = match r {
                8 => vec![],
                7 => vec![&t1],
                _ => vec![&t1, &t2],
            };
            e8.into_iter().filter(|v| fixed.iter().all(|t| dot(v, t) == 0)).collect()
        }
    }
}

fn add(a: &[i32], b: &[i32]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Unordered orthogonal pairs `(i, j)`, `i < j`.
pub fn orthogonal_pairs(roots: &[Vector]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if dot(&roots[i], &roots[j]) == 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Orthogonal pairs grouped by their sum.
pub fn squares_by_sum(roots: &[Vector]) -> HashMap<Vector, usize> {
    let mut out = HashMap::new();
    for (i, j) in orthogonal_pairs(roots) {
        *out.entry(add(&roots[i], &roots[j])).or_insert(0) += 1;
    }
    out
}

/// `(|S_2pi/3|, |S_pi|, |S'_pi|)` for the orthogonal pair `(a, b)`, straight
/// from the definitions.
pub fn pair_set_sizes(roots: &[Vector], a: &[i32], b: &[i32]) -> (usize, usize, usize) {
    let index: HashMap<&Vector, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut two_pi3 = 0;
    let (mut pi, mut pi_prime) = (0, 0);
    for (gi, g) in roots.iter().enumerate() {
        let d: Vector = a.iter().zip(g).map(|(x, y)| x - y).collect();
        if let Some(&di) = index.get(&d) {
            if gi < di && (dot(g, b) != 0 || dot(&d, b) != 0) {
                two_pi3 += 1;
            }
        }
        if dot(g, a) == -1 && dot(g, b) == -1 {
            pi += 1;
        }
        if dot(g, a) == -1 && dot(g, b) == 1 {
            pi_prime += 1;
        }
    }
    (two_pi3, pi, pi_prime)
}

/// Nominal `k` as stated for the four families: `l, 4, 5, 7`.
pub fn nominal_k(system: SystemId) -> usize {
    match (system.family(), system.rank()) {
        (Family::D, l) => l,
        (_, 6) => 4,
        (_, 7) => 5,
        _ => 7,
    }
}

pub fn adjoint_dim(system: SystemId) -> usize {
    match (system.family(), system.rank()) {
        (Family::D, l) => l * (2 * l - 1),
        (_, 6) => 78,
        (_, 7) => 133,
        _ => 248,
    }
}
