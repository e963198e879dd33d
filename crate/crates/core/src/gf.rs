//! Finite fields `GF(p^a)` for odd primes `p`.
//!
//! An element is stored as an integer in `[0, q)` whose base-`p` digits are
//! the coefficients of its residue polynomial (digit `i` is the coefficient
//! of `x^i`). Fields up to `2^12` elements carry full addition and
//! multiplication tables; larger fields reduce on the fly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field that gets precomputed lookup tables.
pub const TABLE_LIMIT: u32 = 1 << 12;

/// Largest field this crate will construct at all.
pub const FIELD_LIMIT: u64 = 1 << 24;

/// A field element in its integer encoding.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Arithmetic context for `F_q`, `q = p^a`. Immutable once built.
pub struct Field {
    p: u32,
    a: u32,
    q: u32,
    modulus: Vec<u32>,
    order: Vec<Elem>,
    position: Vec<u32>,
    tables: Option<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("a", &self.a)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.a == other.a && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over F_p as little-endian coefficient vectors, used only while
// building a field.
fn fp_trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let den = fp_trim(den.to_vec());
    let mut r = fp_trim(num.to_vec());
    let lead = *den.last().expect("nonzero divisor");
    let lead_inv = fp_pow(lead, p - 2, p);
    while r.len() >= den.len() && !r.is_empty() {
        let shift = r.len() - den.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &d) in den.iter().enumerate() {
            let sub = (factor as u64 * d as u64 % p as u64) as u32;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_pow(b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

/// Finds a monic factor of degree `1..=deg/2` by trial division, if any.
fn find_factor(modulus: &[u32], p: u32) -> Option<Vec<u32>> {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut cand = digits(low, p, d);
            cand.push(1);
            if fp_rem(modulus, &cand, p).is_empty() {
                return Some(cand);
            }
        }
    }
    None
}

impl Field {
    /// Builds `GF(p^a)`. When `modulus` is `None`, the monic irreducible of
    /// degree `a` with the smallest coefficient encoding is chosen.
    pub fn new(p: u32, a: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if a == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let q64 = (p as u64).checked_pow(a).unwrap_or(u64::MAX);
        if q64 > FIELD_LIMIT {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u32> = m.to_vec();
                if m.len() != a as usize + 1 || m[a as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: a, got: m });
                }
                if let Some(factor) = find_factor(&m, p) {
                    return Err(Error::ReducibleModulus { p, factor });
                }
                m
            }
            None => Self::default_modulus(p, a),
        };
        let mut order: Vec<Elem> = (1..q).map(Elem).collect();
        order.push(Elem::ZERO);
        let mut position = vec![0u32; q as usize];
        for (i, e) in order.iter().enumerate() {
            position[e.0 as usize] = i as u32;
        }
        let mut field = Field {
            p,
            a,
            q,
            modulus,
            order,
            position,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1, None)
    }

    /// Field of order `q` (an odd prime power) with the default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, a) = prime_power(q).ok_or(Error::NotOddPrime(q))?;
        Self::new(p, a, None)
    }

    fn default_modulus(p: u32, a: u32) -> Vec<u32> {
        if a == 1 {
            return vec![0, 1];
        }
        let count = (p as u64).pow(a);
        for low in 0..count {
            let mut cand = digits(low, p, a as usize);
            cand.push(1);
            if find_factor(&cand, p).is_none() {
                return cand;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for x in 0..q {
            for y in x..q {
                let s = self.slow_add(x as u32, y as u32) as u16;
                let m = self.slow_mul(x as u32, y as u32) as u16;
                add[x * q + y] = s;
                add[y * q + x] = s;
                mul[x * q + y] = m;
                mul[y * q + x] = m;
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for x in 0..q {
            for y in 0..q {
                if add[x * q + y] == 0 {
                    neg[x] = y as u16;
                }
                if mul[x * q + y] == 1 {
                    inv[x] = y as u16;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }

    fn slow_add(&self, x: u32, y: u32) -> u32 {
        let (mut x, mut y) = (x, y);
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.a {
            out += ((x % self.p + y % self.p) % self.p) * scale;
            x /= self.p;
            y /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        out
    }

    fn slow_neg(&self, x: u32) -> u32 {
        let mut x = x;
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.a {
            out += ((self.p - x % self.p) % self.p) * scale;
            x /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        out
    }

    fn slow_mul(&self, x: u32, y: u32) -> u32 {
        let a = self.a as usize;
        let p = self.p as u64;
        let xd = digits(x as u64, self.p, a);
        let yd = digits(y as u64, self.p, a);
        let mut prod = vec![0u64; 2 * a];
        for i in 0..a {
            for j in 0..a {
                prod[i + j] = (prod[i + j] + xd[i] as u64 * yd[j] as u64) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let r = fp_rem(&prod, &self.modulus, self.p);
        r.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.a
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `α_1, …, α_q` with `α_q = 0`.
    pub fn elements(&self) -> &[Elem] {
        &self.order
    }

    /// Index of `x` in [`Field::elements`].
    #[inline]
    pub fn position(&self, x: Elem) -> usize {
        self.position[x.0 as usize] as usize
    }

    pub fn nonzero(&self) -> &[Elem] {
        &self.order[..self.order.len() - 1]
    }

    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value >= self.q as u64 {
            return Err(Error::ElementOutOfRange { value, q: self.q });
        }
        Ok(Elem(value as u32))
    }

    /// Image of an integer under `Z -> F_p ⊂ F_q`.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.add[(x.0 * self.q + y.0) as usize] as u32),
            None => Elem(self.slow_add(x.0, y.0)),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.neg[x.0 as usize] as u32),
            None => Elem(self.slow_neg(x.0)),
        }
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.mul[(x.0 * self.q + y.0) as usize] as u32),
            None => Elem(self.slow_mul(x.0, y.0)),
        }
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => Elem(t.inv[x.0 as usize] as u32),
            None => self.pow(x, self.q as u64 - 2),
        })
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^i` for `i = 0..len`.
    pub fn powers(&self, x: Elem, len: usize) -> Vec<Elem> {
        let mut out = Vec::with_capacity(len);
        let mut cur = Elem::ONE;
        for _ in 0..len {
            out.push(cur);
            cur = self.mul(cur, x);
        }
        out
    }

    /// Element with residue polynomial `x` (the class of the indeterminate);
    /// for prime fields this is `0`.
    pub fn indeterminate(&self) -> Elem {
        if self.a == 1 {
            Elem::ZERO
        } else {
            Elem(self.p)
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            a: self.a,
            modulus: if self.a == 1 {
                None
            } else {
                Some(self.modulus.clone())
            },
        }
    }
}

/// Splits `q` as `p^a` with `p` an odd prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 3 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    if p == 2 {
        return None;
    }
    let mut rest = q;
    let mut a = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

/// Textual field descriptor `p^a[:c0,c1,…,ca]`; a bare `q` is also accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDescriptor {
    pub p: u32,
    pub a: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.a, self.modulus.as_deref())
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("field descriptor {s:?}: {msg}"),
        };
        let (head, modulus) = match s.trim().split_once(':') {
            Some((h, m)) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| bad("bad modulus digit")))
                    .collect::<Result<Vec<_>>>()?;
                (h.trim(), Some(coeffs))
            }
            None => (s.trim(), None),
        };
        let (p, a) = match head.split_once('^') {
            Some((p, a)) => (
                p.trim().parse::<u32>().map_err(|_| bad("bad characteristic"))?,
                a.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?,
            ),
            None => {
                let q = head.parse::<u32>().map_err(|_| bad("bad field size"))?;
                prime_power(q).ok_or(Error::NotOddPrime(q))?
            }
        };
        Ok(FieldDescriptor { p, a, modulus })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.a)?;
        if let Some(m) = &self.modulus {
            let parts: Vec<String> = m.iter().map(|c| c.to_string()).collect();
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn every_elem(f: &Field) -> impl Iterator<Item = Elem> + '_ {
        f.elements().iter().copied()
    }

    #[test]
    fn prime_field_order_puts_zero_last() {
        let f5 = Field::prime(5).unwrap();
        let vals: Vec<u32> = f5.elements().iter().map(|e| e.value()).collect();
        assert_eq!(vals, vec![1, 2, 3, 4, 0]);
        let f3 = Field::prime(3).unwrap();
        let vals: Vec<u32> = f3.elements().iter().map(|e| e.value()).collect();
        assert_eq!(vals, vec![1, 2, 0]);
    }

    #[test]
    fn f9_default_modulus_is_x2_plus_1() {
        // x^2 + 1 has no root in F_3.
        for r in 0..3u32 {
            assert_ne!((r * r + 1) % 3, 0);
        }
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let x = f9.indeterminate();
        assert_eq!(f9.mul(x, x), Elem(2));
        let order = f9.elements();
        assert_eq!(order.len(), 9);
        assert_eq!(*order.last().unwrap(), Elem::ZERO);
        let mut nz: Vec<u32> = order[..8].iter().map(|e| e.value()).collect();
        nz.dedup();
        assert_eq!(nz, (1..9).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_characteristic_and_moduli() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotOddPrime(4));
        assert_eq!(Field::new(2, 3, None).unwrap_err(), Error::NotOddPrime(2));
        assert!(Field::new(9, 1, None).is_err());
        // x^2 + 2 = (x+1)(x+2) over F_3
        assert!(matches!(
            Field::new(3, 2, Some(&[2, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(
            Field::new(3, 2, Some(&[1, 0, 2])),
            Err(Error::BadModulus { .. })
        ));
        // x^2 + x + 2 is irreducible over F_3
        assert!(Field::new(3, 2, Some(&[2, 1, 1])).is_ok());
    }

    #[test]
    fn inverse_and_zero_division() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(Elem(2)).unwrap(), Elem(3));
        assert_eq!(f5.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f5.pow(Elem(3), 0), Elem::ONE);
        assert_eq!(f5.pow(Elem::ZERO, 0), Elem::ONE);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [3u32, 5, 7, 9, 11, 13] {
            let f = Field::of_order(q).unwrap();
            for x in every_elem(&f) {
                assert_eq!(f.add(x, f.neg(x)), Elem::ZERO);
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
                }
                for y in every_elem(&f) {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in every_elem(&f) {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_and_zero_sum() {
        for q in [3u32, 5, 7, 9, 11, 13, 25, 27, 49, 81] {
            let f = Field::of_order(q).unwrap();
            for &x in f.nonzero() {
                assert_eq!(f.pow(x, q as u64 - 1), Elem::ONE, "q={q} x={x}");
            }
            let sum = every_elem(&f).fold(Elem::ZERO, |acc, x| f.add(acc, x));
            assert_eq!(sum, Elem::ZERO);
        }
    }

    #[test]
    fn table_free_path_matches_tables() {
        let f = Field::new(3, 3, None).unwrap();
        for x in 0..27 {
            for y in 0..27 {
                assert_eq!(f.mul(Elem(x), Elem(y)).0, f.slow_mul(x, y));
                assert_eq!(f.add(Elem(x), Elem(y)).0, f.slow_add(x, y));
            }
        }
        // 3^12 is past the table limit.
        let big = Field::new(3, 12, None).unwrap();
        assert!(big.tables.is_none());
        let x = big.indeterminate();
        let xi = big.inv(x).unwrap();
        assert_eq!(big.mul(x, xi), Elem::ONE);
        assert_eq!(big.pow(x, big.q() as u64 - 1), Elem::ONE);
    }

    #[test]
    fn descriptor_round_trip() {
        let d: FieldDescriptor = "3^2".parse().unwrap();
        assert_eq!(d.build().unwrap().q(), 9);
        let d: FieldDescriptor = "3^2:2,1,1".parse().unwrap();
        assert_eq!(d.to_string(), "3^2:2,1,1");
        let d: FieldDescriptor = "7".parse().unwrap();
        assert_eq!((d.p, d.a), (7, 1));
        assert!("8".parse::<FieldDescriptor>().is_err());
        assert!("3^2:2,0,1".parse::<FieldDescriptor>().unwrap().build().is_err());
    }
}
