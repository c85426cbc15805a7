//! The adjoint module and the action of elementary root unipotents on it.
//!
//! Coordinates are ordered like the weights of the [`RootSystem`]: `v_alpha`
//! for every root, then the zero-weight coordinates `v^_1, ..., v^_l`.
//! `x_rho(xi)` acts by
//!
//! * `w_lambda = v_lambda + N_{rho,lambda-rho} xi v_{lambda-rho}` if `lambda - rho` is a root,
//! * `w^_s = v^_s + m_s(rho) xi v_-rho`,
//! * `w_rho = v_rho - xi sum_s <rho,alpha_s> v^_s - xi^2 v_-rho`,
//!
//! and leaves every other coordinate alone.

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::ring::{Polynomials, Ring};
use crate::root_system::{RootId, RootSystem, SystemId, Weight};
use crate::signs::SignTable;

#[derive(Clone, Debug, PartialEq)]
pub struct AdjointVector<E> {
    system: SystemId,
    coords: Vec<E>,
}

impl<E: Clone> AdjointVector<E> {
    pub fn new(rs: &RootSystem, coords: Vec<E>) -> Result<Self> {
        if coords.len() != rs.dim() {
            return Err(Error::DimensionMismatch { expected: rs.dim(), got: coords.len() });
        }
        Ok(AdjointVector { system: rs.id(), coords })
    }

    pub fn zero<R: Ring<Elem = E>>(rs: &RootSystem, ring: &R) -> Self {
        AdjointVector { system: rs.id(), coords: vec![ring.zero(); rs.dim()] }
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<E> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn at(&self, pos: usize) -> &E {
        &self.coords[pos]
    }

    pub fn root(&self, r: RootId) -> &E {
        &self.coords[r.index()]
    }

    pub fn set(&mut self, pos: usize, value: E) {
        self.coords[pos] = value;
    }

    pub fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if self.system != rs.id() {
            return Err(Error::SystemMismatch { expected: rs.id().to_string(), got: self.system.to_string() });
        }
        if self.coords.len() != rs.dim() {
            return Err(Error::DimensionMismatch { expected: rs.dim(), got: self.coords.len() });
        }
        Ok(())
    }
}

/// `e^lambda`.
pub fn basis_vector<R: Ring>(rs: &RootSystem, ring: &R, w: Weight) -> AdjointVector<R::Elem> {
    let mut v = AdjointVector::zero(rs, ring);
    v.coords[rs.position(w)] = ring.one();
    v
}

/// The vector whose coordinate at position `p` is the variable `v{p}`.
pub fn generic_vector(rs: &RootSystem) -> AdjointVector<Poly> {
    AdjointVector { system: rs.id(), coords: (0..rs.dim()).map(|p| Poly::var(Var::coord(p))).collect() }
}

/// Elementary root unipotent `x_rho(xi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Elementary<E> {
    pub rho: RootId,
    pub xi: E,
}

impl<E> Elementary<E> {
    pub fn new(rho: RootId, xi: E) -> Self {
        Elementary { rho, xi }
    }
}

/// Product `x_1 x_2 ... x_n`; acting on `v`, the last factor is applied first.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Word<E> {
    pub factors: Vec<Elementary<E>>,
}

impl<E: Clone> Word<E> {
    pub fn new(factors: Vec<Elementary<E>>) -> Self {
        Word { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `[x_a(s), x_b(t)] = x_a(s) x_b(t) x_a(-s) x_b(-t)`.
    pub fn commutator<R: Ring<Elem = E>>(ring: &R, a: RootId, s: E, b: RootId, t: E) -> Self {
        let (ns, nt) = (ring.neg(&s), ring.neg(&t));
        Word::new(vec![
            Elementary::new(a, s),
            Elementary::new(b, t),
            Elementary::new(a, ns),
            Elementary::new(b, nt),
        ])
    }

    pub fn inverse<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        Word::new(self.factors.iter().rev().map(|e| Elementary::new(e.rho, ring.neg(&e.xi))).collect())
    }
}

fn check(rs: &RootSystem, signs: &SignTable) -> Result<()> {
    if signs.system() != rs.id() {
        return Err(Error::SystemMismatch { expected: rs.id().to_string(), got: signs.system().to_string() });
    }
    Ok(())
}

/// `x_rho(xi) v`.
pub fn apply_elementary<R: Ring>(
    rs: &RootSystem,
    signs: &SignTable,
    ring: &R,
    e: &Elementary<R::Elem>,
    v: &AdjointVector<R::Elem>,
) -> Result<AdjointVector<R::Elem>> {
    check(rs, signs)?;
    v.check_system(rs)?;
    let rho = e.rho;
    let xi = &e.xi;
    let mut w = v.coords.clone();
    if ring.is_zero(xi) {
        return Ok(AdjointVector { system: v.system, coords: w });
    }
    for mu in rs.ids() {
        let vm = &v.coords[mu.index()];
        if ring.is_zero(vm) {
            continue;
        }
        if let Some(lam) = rs.sum(rho, mu) {
            let t = ring.mul(xi, vm);
            let slot = &mut w[lam.index()];
            *slot = match signs.n(rho, mu) {
                1 => ring.add(slot, &t),
                -1 => ring.sub(slot, &t),
                n => unreachable!("structure constant {}", n),
            };
        }
    }
    let v_neg = &v.coords[rs.neg(rho).index()];
    let combo = zero_weight_combo(rs, ring, rho, v);
    let mut wr = ring.sub(&w[rho.index()], &ring.mul(xi, &combo));
    if !ring.is_zero(v_neg) {
        let xi_v = ring.mul(xi, v_neg);
        wr = ring.sub(&wr, &ring.mul(xi, &xi_v));
        for s in 1..=rs.rank() {
            let m = rs.coeff(rho, s);
            if m != 0 {
                let p = rs.zero_position(s);
                let inc = if m == 1 { xi_v.clone() } else { ring.mul(&ring.from_int(m as i64), &xi_v) };
                w[p] = ring.add(&w[p], &inc);
            }
        }
    }
    w[rho.index()] = wr;
    Ok(AdjointVector { system: v.system, coords: w })
}

/// `g v` for `g = x_1 ... x_n`, i.e. `x_1(x_2(... x_n(v)))`.
pub fn apply_word<R: Ring>(
    rs: &RootSystem,
    signs: &SignTable,
    ring: &R,
    word: &Word<R::Elem>,
    v: &AdjointVector<R::Elem>,
) -> Result<AdjointVector<R::Elem>> {
    let mut cur = v.clone();
    cur.check_system(rs)?;
    for e in word.factors.iter().rev() {
        cur = apply_elementary(rs, signs, ring, e, &cur)?;
    }
    Ok(cur)
}

/// `sum_s <beta, alpha_s> v^_s`.
pub fn zero_weight_combo<R: Ring>(rs: &RootSystem, ring: &R, beta: RootId, v: &AdjointVector<R::Elem>) -> R::Elem {
    let mut acc = ring.zero();
    for s in 1..=rs.rank() {
        let c = rs.pairing(beta, s);
        if c == 0 {
            continue;
        }
        let x = &v.coords[rs.zero_position(s)];
        acc = match c {
            1 => ring.add(&acc, x),
            -1 => ring.sub(&acc, x),
            _ => ring.add(&acc, &ring.mul(&ring.from_int(c as i64), x)),
        };
    }
    acc
}

/// Symbolic `x_rho(xi_1)` applied to the generic vector.
pub fn symbolic_action(rs: &RootSystem, signs: &SignTable, rho: RootId) -> AdjointVector<Poly> {
    let v = generic_vector(rs);
    apply_elementary(rs, signs, &Polynomials, &Elementary::new(rho, Poly::var(Var::xi(1))), &v)
        .expect("generic vector matches its system")
}
