//! Structure constants `N_{alpha,beta}` of the Chevalley basis.
//!
//! The table comes from an asymmetry function on the root lattice: with the
//! bilinear form `B(alpha_i, alpha_i) = 1`, `B(alpha_i, alpha_j) = <alpha_i, alpha_j>`
//! for `i < j` and `0` for `i > j`, the sign `eps(alpha, beta) = (-1)^B(alpha, beta)`
//! gives a Lie algebra with `[E_a, E_-a] = -a`. Rescaling the negative root
//! vectors by `-1` turns that into a Chevalley basis with `[e_a, e_-a] = h_a`,
//! which is the normalization the unipotent action assumes.

use std::collections::BTreeMap;
use std::io::Write;

use crate::error::Result;
use crate::root_system::{Root, RootId, RootSystem, SystemId};

#[derive(Clone, Debug)]
pub struct SignTable {
    system: SystemId,
    n: usize,
    table: Vec<i8>,
}

fn asymmetry(rs: &RootSystem, a: &Root, b: &Root) -> i32 {
    let cartan = rs.cartan();
    let (a, b) = (a.coeffs(), b.coeffs());
    let mut acc = 0;
    for i in 0..a.len() {
        acc += a[i] * b[i];
        for j in i + 1..b.len() {
            acc += a[i] * b[j] * cartan[i][j];
        }
    }
    acc
}

fn scale(r: &Root) -> i32 {
    if r.is_positive() {
        1
    } else {
        -1
    }
}

impl SignTable {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.len();
        let mut table = vec![0i8; n * n];
        for a in rs.ids() {
            for b in rs.ids() {
                if let Some(c) = rs.sum(a, b) {
                    let (ra, rb, rc) = (rs.root(a), rs.root(b), rs.root(c));
                    let eps = if asymmetry(rs, ra, rb).rem_euclid(2) == 0 { 1 } else { -1 };
                    table[a.index() * n + b.index()] = (eps * scale(ra) * scale(rb) * scale(rc)) as i8;
                }
            }
        }
        SignTable { system: rs.id(), n, table }
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    /// `N_{alpha,beta}`; zero unless `alpha + beta` is a root.
    #[inline]
    pub fn n(&self, a: RootId, b: RootId) -> i32 {
        self.table[a.index() * self.n + b.index()] as i32
    }

    pub fn structure_constant(&self, rs: &RootSystem, a: &Root, b: &Root) -> Result<i32> {
        Ok(self.n(rs.id_of(a)?, rs.id_of(b)?))
    }

    /// Rows `alpha coeffs..., beta coeffs..., N` for every pair with a root sum.
    pub fn write_csv<W: Write>(&self, rs: &RootSystem, out: W) -> Result<()> {
        let mut out = std::io::BufWriter::new(out);
        let l = rs.rank();
        let header: Vec<String> = (1..=l)
            .map(|s| format!("a{}", s))
            .chain((1..=l).map(|s| format!("b{}", s)))
            .chain(std::iter::once("n".to_string()))
            .collect();
        writeln!(out, "{}", header.join(","))?;
        for a in rs.ids() {
            for b in rs.ids() {
                let n = self.n(a, b);
                if n == 0 {
                    continue;
                }
                let row: Vec<String> = rs
                    .root(a)
                    .coeffs()
                    .iter()
                    .chain(rs.root(b).coeffs())
                    .map(|c| c.to_string())
                    .chain(std::iter::once(n.to_string()))
                    .collect();
                writeln!(out, "{}", row.join(","))?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

/// Sparse element of the Lie algebra, keyed by weight position
/// (root vectors, then `h_1, ..., h_l`).
pub type LieElement = BTreeMap<usize, i64>;

/// `[x, y]` on two basis elements given by weight position.
pub fn bracket_basis(rs: &RootSystem, signs: &SignTable, x: usize, y: usize) -> LieElement {
    let n = rs.len();
    let mut out = LieElement::new();
    match (x < n, y < n) {
        (true, true) => {
            let (a, b) = (RootId(x as u32), RootId(y as u32));
            if rs.neg(a) == b {
                // h_a = sum m_s(a) h_s
                for s in 1..=rs.rank() {
                    let m = rs.coeff(a, s) as i64;
                    if m != 0 {
                        out.insert(rs.zero_position(s), m);
                    }
                }
            } else if let Some(c) = rs.sum(a, b) {
                out.insert(c.index(), signs.n(a, b) as i64);
            }
        }
        (false, true) => {
            // [h_s, e_b] = <b, alpha_s> e_b
            let s = x - n + 1;
            let p = rs.pairing(RootId(y as u32), s) as i64;
            if p != 0 {
                out.insert(y, p);
            }
        }
        (true, false) => {
            let s = y - n + 1;
            let p = rs.pairing(RootId(x as u32), s) as i64;
            if p != 0 {
                out.insert(x, -p);
            }
        }
        (false, false) => {}
    }
    out
}

pub fn bracket(rs: &RootSystem, signs: &SignTable, x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::new();
    for (&p, &cp) in x {
        for (&q, &cq) in y {
            for (r, c) in bracket_basis(rs, signs, p, q) {
                *out.entry(r).or_insert(0) += cp * cq * c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]` for three basis elements.
pub fn jacobiator(rs: &RootSystem, signs: &SignTable, x: usize, y: usize, z: usize) -> LieElement {
    let e = |p: usize| LieElement::from([(p, 1)]);
    let (ex, ey, ez) = (e(x), e(y), e(z));
    let mut out = LieElement::new();
    for (u, v, w) in [(&ex, &ey, &ez), (&ey, &ez, &ex), (&ez, &ex, &ey)] {
        for (p, c) in bracket(rs, signs, &bracket(rs, signs, u, v), w) {
            *out.entry(p).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_and_domain() {
        let rs = RootSystem::new(SystemId::e(8).unwrap()).unwrap();
        let signs = SignTable::new(&rs);
        let (a3, a4) = (rs.simple(3), rs.simple(4));
        assert_eq!(signs.n(a3, a4).abs(), 1);
        assert_eq!(signs.n(a3, rs.neg(a3)), 0);
        for a in rs.ids() {
            for b in rs.ids() {
                let n = signs.n(a, b);
                assert_eq!(n != 0, rs.sum(a, b).is_some());
                if n != 0 {
                    assert_eq!(n * signs.n(b, a), -1);
                    assert_eq!(signs.n(rs.neg(a), rs.neg(b)), -n);
                }
            }
        }
    }

    #[test]
    fn bracket_with_cartan() {
        let rs = RootSystem::new(SystemId::d(5).unwrap()).unwrap();
        let signs = SignTable::new(&rs);
        let a = rs.simple(2);
        let h = bracket_basis(&rs, &signs, a.index(), rs.neg(a).index());
        assert_eq!(h, LieElement::from([(rs.zero_position(2), 1)]));
        let back = bracket_basis(&rs, &signs, rs.zero_position(2), a.index());
        assert_eq!(back, LieElement::from([(a.index(), 2)]));
    }

    #[test]
    fn csv_dump_has_all_nonzero_pairs() {
        let rs = RootSystem::new(SystemId::d(5).unwrap()).unwrap();
        let signs = SignTable::new(&rs);
        let mut buf = Vec::new();
        signs.write_csv(&rs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let rows = text.lines().count() - 1;
        let expected = rs.ids().flat_map(|a| rs.ids().map(move |b| (a, b))).filter(|&(a, b)| rs.sum(a, b).is_some()).count();
        assert_eq!(rows, expected);
        assert!(text.starts_with("a1,a2,a3,a4,a5,b1,"));
    }
}
