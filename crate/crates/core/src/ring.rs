//! Commutative unital rings used as coefficient rings for the adjoint module.
//!
//! A [`Ring`] value is the ring itself (for example `Z/mZ` carries its
//! modulus); elements are plain values manipulated through it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub trait Ring: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Image of an integer under `Z -> R`, built from `1` by doubling and
    /// adding so that it is valid in every characteristic.
    fn from_int(&self, n: i64) -> Self::Elem {
        let one = self.one();
        let mut acc = self.zero();
        let m = n.unsigned_abs();
        for bit in (0..u64::BITS - m.leading_zeros()).rev() {
            acc = self.add(&acc, &acc);
            if (m >> bit) & 1 == 1 {
                acc = self.add(&acc, &one);
            }
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn spec(&self) -> RingSpec;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
}

/// Names one of the supported rings: `int`, `zmod:m` or `poly`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
    Polynomials,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "int"),
            RingSpec::IntegersMod(m) => write!(f, "zmod:{}", m),
            RingSpec::Polynomials => write!(f, "poly"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "int" | "integers" | "Z" => Ok(RingSpec::Integers),
            "poly" => Ok(RingSpec::Polynomials),
            other => {
                let m = other
                    .strip_prefix("zmod:")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown ring '{}'", other)))?;
                IntegersMod::new(m)?;
                Ok(RingSpec::IntegersMod(m))
            }
        }
    }
}

/// `Z` with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::Parse(format!("bad integer '{}'", s)))
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// `Z/mZ` for any `m >= 2`, composite moduli included.
#[derive(Clone, Copy, Debug)]
pub struct IntegersMod {
    m: u64,
}

impl IntegersMod {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidConfig(format!("modulus must be at least 2, got {}", m)));
        }
        Ok(IntegersMod { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn reduce(&self, n: i128) -> u64 {
        n.rem_euclid(self.m as i128) as u64
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.m as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.m - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn spec(&self) -> RingSpec {
        RingSpec::IntegersMod(self.m)
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let n: BigInt = s.trim().parse().map_err(|_| Error::Parse(format!("bad residue '{}'", s)))?;
        let r = ((n % self.m) + self.m) % self.m;
        Ok(r.to_u64().expect("residue fits in u64"))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// `Z[v0, v1, ..., xi1, xi2, ...]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Polynomials;

impl Ring for Polynomials {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b)
    }
    fn from_int(&self, n: i64) -> Poly {
        Poly::constant(n.into())
    }
    fn spec(&self) -> RingSpec {
        RingSpec::Polynomials
    }
    fn parse_elem(&self, s: &str) -> Result<Poly> {
        s.parse()
    }
    fn format_elem(&self, a: &Poly) -> String {
        a.to_string()
    }
}
