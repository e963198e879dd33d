//! Univariate polynomials over `F_q`, evaluation words and interpolation.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Polynomial with coefficients stored constant term first, no trailing
/// zeros. The zero polynomial has no coefficients and degree `None`, which
/// orders below every finite degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c · x^deg`.
    pub fn monomial(c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Terms of degree `< below`.
    pub fn truncate(&self, below: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().take(below).copied().collect())
    }

    /// Terms of degree `>= from`.
    pub fn tail(&self, from: usize) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i >= from { c } else { Elem::ZERO })
                .collect(),
        )
    }

    /// `c · ∏_{s∈roots} (x − s)`.
    pub fn from_roots(f: &Field, roots: &[Elem], c: Elem) -> Result<Poly> {
        if c.is_zero() {
            return Err(Error::Precondition("leading constant must be nonzero".into()));
        }
        let mut seen = HashSet::new();
        let mut acc = Poly::constant(c);
        for &s in roots {
            if !seen.insert(s) {
                return Err(Error::RepeatedRoot(s.value()));
            }
            acc = acc.mul(&Poly::from_coeffs(vec![f.neg(s), Elem::ONE]), f);
        }
        Ok(acc)
    }

    /// Parses the comma-separated coefficient format (constant term first).
    pub fn parse(text: &str, f: &Field) -> Result<Poly> {
        let coeffs = parse_elems(text, f)?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        write_elems(f, &self.coeffs)
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn write_elems(f: &mut fmt::Formatter<'_>, elems: &[Elem]) -> fmt::Result {
    for (i, e) in elems.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

pub fn parse_elems(text: &str, f: &Field) -> Result<Vec<Elem>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let v = t.parse::<u64>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad element {t:?}"),
            })?;
            f.elem(v)
        })
        .collect()
}

/// A vector in `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub struct Word(pub Vec<Elem>);

impl Word {
    pub fn zeros(n: usize) -> Word {
        Word(vec![Elem::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        weight(&self.0)
    }

    pub fn distance(&self, other: &Word) -> usize {
        distance(&self.0, &other.0)
    }

    pub fn parse(text: &str, f: &Field) -> Result<Word> {
        parse_elems(text, f).map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_elems(f, &self.0)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[inline]
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

#[inline]
pub fn distance(a: &[Elem], b: &[Elem]) -> usize {
    assert_eq!(a.len(), b.len(), "words of different length");
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// An ordered evaluation set together with its Lagrange basis, so repeated
/// interpolation over the same points costs `O(n²)`.
#[derive(Clone, Debug)]
pub struct EvalDomain {
    points: Vec<Elem>,
    weights: Vec<Elem>,
    // basis[i] = coefficients of the Lagrange polynomial for point i
    basis: Vec<Vec<Elem>>,
}

impl EvalDomain {
    pub fn new(f: &Field, points: &[Elem]) -> Result<EvalDomain> {
        let mut seen = HashSet::new();
        for &x in points {
            if !seen.insert(x) {
                return Err(Error::DuplicatePoint(x.value()));
            }
        }
        let n = points.len();
        // master = ∏ (x − x_j), degree n
        let mut master = vec![Elem::ONE];
        for &x in points {
            let mut next = vec![Elem::ZERO; master.len() + 1];
            for (i, &c) in master.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.sub(next[i], f.mul(c, x));
            }
            master = next;
        }
        let mut weights = Vec::with_capacity(n);
        let mut basis = Vec::with_capacity(n);
        for &xi in points {
            // master / (x − xi) by synthetic division
            let mut quot = vec![Elem::ZERO; n];
            let mut carry = Elem::ZERO;
            for d in (1..=n).rev() {
                carry = f.add(master[d], f.mul(carry, xi));
                quot[d - 1] = carry;
            }
            let denom = quot
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, xi), c));
            let w = f.inv(denom)?;
            weights.push(w);
            basis.push(quot.into_iter().map(|c| f.mul(c, w)).collect());
        }
        Ok(EvalDomain {
            points: points.to_vec(),
            weights,
            basis,
        })
    }

    /// All of `F_q` in canonical order.
    pub fn full(f: &Field) -> EvalDomain {
        EvalDomain::new(f, f.elements()).expect("field elements are distinct")
    }

    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Barycentric weights `1 / ∏_{j≠i} (x_i − x_j)`.
    pub fn weights(&self) -> &[Elem] {
        &self.weights
    }

    pub fn evaluate(&self, f: &Field, poly: &Poly) -> Word {
        Word(self.points.iter().map(|&x| poly.eval(f, x)).collect())
    }

    /// Unique polynomial of degree `< n` through `(x_i, values_i)`.
    pub fn interpolate(&self, f: &Field, values: &[Elem]) -> Result<Poly> {
        if values.len() != self.points.len() {
            return Err(Error::LengthMismatch {
                expected: self.points.len(),
                got: values.len(),
            });
        }
        let mut out = vec![Elem::ZERO; self.points.len()];
        for (y, row) in values.iter().zip(&self.basis) {
            if y.is_zero() {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*y, b));
            }
        }
        Ok(Poly::from_coeffs(out))
    }
}

/// `(f(x_1), …, f(x_n))`.
pub fn evaluate_word(f: &Field, poly: &Poly, points: &[Elem]) -> Result<Word> {
    let mut seen = HashSet::new();
    for &x in points {
        if !seen.insert(x) {
            return Err(Error::DuplicatePoint(x.value()));
        }
    }
    Ok(Word(points.iter().map(|&x| poly.eval(f, x)).collect()))
}

pub fn interpolate(f: &Field, points: &[Elem], values: &[Elem]) -> Result<Poly> {
    EvalDomain::new(f, points)?.interpolate(f, values)
}
