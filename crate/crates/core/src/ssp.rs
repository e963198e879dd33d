//! `k`-subset sums over the whole field and the nearest-codeword
//! construction for degree-`k` words against `PRS(q+1, k)`.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::combin::Combinations;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::Poly;

/// Find `S ⊆ F_q`, `|S| = k`, with `Σ S = target`.
#[derive(Clone, Debug)]
pub struct SspInstance {
    field: Arc<Field>,
    k: usize,
    target: Elem,
}

impl SspInstance {
    pub fn new(field: Arc<Field>, k: usize, target: Elem) -> Result<SspInstance> {
        let q = field.q() as usize;
        if k == 0 || k > q {
            return Err(Error::InvalidDimension(format!("subset size must satisfy 1 <= k <= q, got k={k}, q={q}")));
        }
        field.elem(target.value() as u64)?;
        Ok(SspInstance { field, k, target })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn target(&self) -> Elem {
        self.target
    }
}

fn sum(f: &Field, set: &[Elem]) -> Elem {
    set.iter().fold(Elem::ZERO, |acc, &s| f.add(acc, s))
}

/// Solves the instance by repairing the sum of the first `k` elements.
///
/// A single swap `s → s + δ` (δ the sum defect) succeeds unless `S + δ = S`,
/// which forces `S` to be a union of cosets of the additive group generated
/// by `δ`; then a double swap is tried, and exhaustive search backs both up.
/// The result is sorted by element encoding.
pub fn ssp_solve(inst: &SspInstance) -> Result<Vec<Elem>> {
    let f = &*inst.field;
    let k = inst.k;
    let g = inst.target;
    let q = f.q() as usize;
    let mut set: Vec<Elem> = f.elements()[..k].to_vec();
    let delta = f.sub(g, sum(f, &set));
    if k == q && !delta.is_zero() {
        return Err(Error::SspUnsolvable(format!(
            "the only {q}-subset of F_{q} sums to 0, not {g}"
        )));
    }
    let solved = delta.is_zero() || single_swap(f, &mut set, delta) || double_swap(f, &mut set, delta);
    if !solved {
        set = exhaustive(f, k, g).ok_or_else(|| {
            Error::SspUnsolvable(format!("no {k}-subset of F_{q} sums to {g}"))
        })?;
    }
    set.sort();
    Ok(set)
}

fn single_swap(f: &Field, set: &mut [Elem], delta: Elem) -> bool {
    let members: HashSet<Elem> = set.iter().copied().collect();
    for i in (0..set.len()).rev() {
        let replacement = f.add(set[i], delta);
        if !members.contains(&replacement) {
            set[i] = replacement;
            return true;
        }
    }
    false
}

fn double_swap(f: &Field, set: &mut [Elem], delta: Elem) -> bool {
    let members: HashSet<Elem> = set.iter().copied().collect();
    let outside: Vec<Elem> = f.elements().iter().copied().filter(|x| !members.contains(x)).collect();
    for i in (0..set.len()).rev() {
        for j in (0..i).rev() {
            let pair = f.add(f.add(set[i], set[j]), delta);
            for &a in &outside {
                let b = f.sub(pair, a);
                if b != a && !members.contains(&b) {
                    set[i] = a;
                    set[j] = b;
                    return true;
                }
            }
        }
    }
    false
}

fn exhaustive(f: &Field, k: usize, g: Elem) -> Option<Vec<Elem>> {
    let elems = f.elements();
    Combinations::new(elems.len(), k)
        .map(|idx| idx.into_iter().map(|i| elems[i]).collect::<Vec<_>>())
        .find(|s| sum(f, s) == g)
}

/// Independent recheck of a certificate: size, distinctness, range and sum.
pub fn validate_certificate(f: &Field, k: usize, target: Elem, set: &[Elem]) -> bool {
    if set.len() != k {
        return false;
    }
    let mut seen = HashSet::new();
    let mut total: u64 = 0;
    let mut acc = Elem::ZERO;
    for &s in set {
        if s.value() >= f.q() || !seen.insert(s) {
            return false;
        }
        total += s.value() as u64;
        acc = f.add(acc, s);
    }
    if f.degree() == 1 {
        return (total % f.p() as u64) as u32 == target.value();
    }
    acc == target
}

/// A codeword `(u_g, v)` of `PRS(q+1, k)` at distance exactly `q − k` from
/// `(u_f, v)`.
#[derive(Clone, Debug, Serialize)]
pub struct DegKNearest {
    /// message polynomial of the codeword, `deg g ≤ k − 1`
    pub g: Poly,
    /// last coordinate `c_{k−1}(g)`, equal to `v`
    pub last: Elem,
    /// the `k` distinct roots of `f − g`
    pub roots: Vec<Elem>,
}

/// With `f = c·x^k + a·x^{k−1} + …`, picks `S` with `Σ S = (v − a)/c` and
/// returns `g = f − c·∏_{s∈S}(x − s)`.
pub fn nearest_codeword_deg_k(field: &Arc<Field>, f: &Poly, v: Elem, k: usize) -> Result<DegKNearest> {
    if f.degree() != Some(k) || k == 0 {
        return Err(Error::Precondition(format!(
            "expected a polynomial of degree {k}, got degree {:?}",
            f.degree()
        )));
    }
    let fl = &**field;
    let c = f.leading();
    let a = f.coeff(k - 1);
    let target = fl.div(fl.sub(v, a), c)?;
    let roots = ssp_solve(&SspInstance::new(field.clone(), k, target)?)?;
    let phi = Poly::from_roots(fl, &roots, c)?;
    let g = f.sub(&phi, fl);
    debug_assert!(g.degree().is_none_or(|d| d < k));
    Ok(DegKNearest {
        last: g.coeff(k - 1),
        g,
        roots,
    })
}
