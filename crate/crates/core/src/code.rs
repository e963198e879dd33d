//! Linear codes: RS, PRS and Glynn constructors, parity checks, minimum
//! distance and MDS tests.

use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::combin::{binomial, pow_u128, Combinations};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;
use crate::poly::{weight, EvalDomain, Word};

/// Default cap on enumerated codewords.
pub const DEFAULT_ENUM_BUDGET: u128 = 100_000_000;

/// How a code was built; the sweep algorithms need the polynomial view.
#[derive(Clone, Debug)]
pub enum Structure {
    /// `RS(D, k)`: evaluations of polynomials of degree `< k` on `D`.
    Rs { domain: Arc<EvalDomain> },
    /// `PRS(q+1, k)`: `RS(F_q, k)` plus the coefficient of `x^{k-1}`.
    Prs { domain: Arc<EvalDomain> },
    Glynn { w: Elem },
    Custom,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub mds: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    k: usize,
    generator: Matrix,
    parity_check: Matrix,
    label: String,
    structure: Structure,
}

pub fn field_name(f: &Field) -> String {
    format!("F_{}", f.q())
}

impl LinearCode {
    fn build(
        field: Arc<Field>,
        generator: Matrix,
        label: String,
        structure: Structure,
    ) -> Result<LinearCode> {
        let k = generator.rows();
        let n = generator.cols();
        if k == 0 || n == 0 {
            return Err(Error::InvalidDimension(format!("[{n},{k}] code")));
        }
        let parity_check = parity_check_of(&field, &generator)?;
        Ok(LinearCode {
            field,
            n,
            k,
            generator,
            parity_check,
            label,
            structure,
        })
    }

    /// Code with the given generator rows.
    pub fn from_matrix(field: Arc<Field>, rows: Vec<Vec<Elem>>, label: Option<String>) -> Result<LinearCode> {
        for row in &rows {
            for &e in row {
                field.elem(e.value() as u64)?;
            }
        }
        let g = Matrix::from_rows(rows)?;
        let label = label.unwrap_or_else(|| format!("C[{},{}]/{}", g.cols(), g.rows(), field_name(&field)));
        LinearCode::build(field, g, label, Structure::Custom)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n − k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn encode(&self, message: &[Elem]) -> Word {
        Word(self.generator.left_mul(&self.field, message))
    }

    pub fn syndrome(&self, word: &[Elem]) -> Vec<Elem> {
        self.parity_check.apply(&self.field, word)
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.n && self.syndrome(word).iter().all(|e| e.is_zero())
    }

    /// Same codeword set (row spaces coincide).
    pub fn same_code(&self, other: &LinearCode) -> bool {
        *self.field == *other.field
            && self.n == other.n
            && self.k == other.k
            && (0..other.k).all(|r| self.contains(other.generator.row(r)))
    }

    /// Parameters with `d` filled in when it can be computed within budget.
    pub fn params(&self, budget: u128) -> CodeParams {
        let d = min_distance(self, budget).ok();
        let mds = match d {
            Some(d) => Some(d == self.n - self.k + 1),
            None if binomial(self.n, self.k) <= budget => Some(is_mds(self)),
            None => None,
        };
        let d = d.or_else(|| (mds == Some(true)).then_some(self.n - self.k + 1));
        CodeParams {
            n: self.n,
            k: self.k,
            d,
            mds,
        }
    }

    /// Appends a zero column to every generator row and adds the row
    /// `(w | tail)`, giving an `[n+1, k+1]` code.
    pub fn extend_code(&self, w: &Word, tail: Elem) -> Result<LinearCode> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: w.len(),
            });
        }
        if self.contains(w.entries()) {
            return Err(Error::WordInCode);
        }
        let mut rows: Vec<Vec<Elem>> = self
            .generator
            .row_vecs()
            .into_iter()
            .map(|mut r| {
                r.push(Elem::ZERO);
                r
            })
            .collect();
        let mut last = w.entries().to_vec();
        last.push(tail);
        rows.push(last);
        let label = format!("{}+ext[{}]", self.label, w);
        LinearCode::build(self.field.clone(), Matrix::from_rows(rows)?, label, Structure::Custom)
    }
}

/// `H` with `G·Hᵀ = 0`, built from the reduced echelon form of `G`.
fn parity_check_of(f: &Field, g: &Matrix) -> Result<Matrix> {
    let k = g.rows();
    let n = g.cols();
    let mut reduced = g.clone();
    let pivots = reduced.rref(f);
    if pivots.len() < k {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            rows: k,
        });
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut h = Matrix::zeros(free.len(), n);
    for (t, &fc) in free.iter().enumerate() {
        h.set(t, fc, Elem::ONE);
        for (i, &pc) in pivots.iter().enumerate() {
            h.set(t, pc, f.neg(reduced.get(i, fc)));
        }
    }
    Ok(h)
}

/// `RS(D, k)`; `points = None` means all of `F_q` in canonical order.
pub fn rs_code(field: Arc<Field>, points: Option<&[Elem]>, k: usize) -> Result<LinearCode> {
    let points = points.unwrap_or(field.elements()).to_vec();
    let domain = Arc::new(EvalDomain::new(&field, &points)?);
    let n = points.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidDimension(format!("RS needs 0 < k < n, got k={k}, n={n}")));
    }
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| points.iter().map(|&x| field.pow(x, i as u64)).collect())
        .collect();
    let label = if n == field.q() as usize {
        format!("RS({},{})/{}", n, k, field_name(&field))
    } else {
        let pts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        format!("RS({},{})/{}@[{}]", n, k, field_name(&field), pts.join(","))
    };
    LinearCode::build(field, Matrix::from_rows(rows)?, label, Structure::Rs { domain })
}

/// `PRS(q+1, k)` with columns `α_1, …, α_q` (zero last) then `(0,…,0,1)ᵀ`.
pub fn prs_code(field: Arc<Field>, k: usize) -> Result<LinearCode> {
    let q = field.q() as usize;
    if k == 0 || k > q {
        return Err(Error::InvalidDimension(format!("PRS needs 1 <= k <= q, got k={k}, q={q}")));
    }
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            let mut row: Vec<Elem> = field
                .elements()
                .iter()
                .map(|&x| field.pow(x, i as u64))
                .collect();
            row.push(if i == k - 1 { Elem::ONE } else { Elem::ZERO });
            row
        })
        .collect();
    let domain = Arc::new(EvalDomain::full(&field));
    let label = format!("PRS({},{})/{}", q + 1, k, field_name(&field));
    LinearCode::build(field, Matrix::from_rows(rows)?, label, Structure::Prs { domain })
}

/// Generator rows `1, α, α² + wα⁶, α³, α⁴` over the canonical order of
/// `F_9`, with last column `(0,0,0,0,1)ᵀ`. No condition on `w` is checked.
pub fn glynn_rows(field: &Field, w: Elem) -> Result<Vec<Vec<Elem>>> {
    if field.q() != 9 {
        return Err(Error::WrongField(format!("Glynn code lives over F_9, got F_{}", field.q())));
    }
    field.elem(w.value() as u64)?;
    let alphas = field.elements();
    let row = |vals: Vec<Elem>, last: Elem| {
        let mut v = vals;
        v.push(last);
        v
    };
    Ok(vec![
        row(alphas.iter().map(|_| Elem::ONE).collect(), Elem::ZERO),
        row(alphas.to_vec(), Elem::ZERO),
        row(
            alphas
                .iter()
                .map(|&a| field.add(field.pow(a, 2), field.mul(w, field.pow(a, 6))))
                .collect(),
            Elem::ZERO,
        ),
        row(alphas.iter().map(|&a| field.pow(a, 3)).collect(), Elem::ZERO),
        row(alphas.iter().map(|&a| field.pow(a, 4)).collect(), Elem::ONE),
    ])
}

/// The `[10, 5]` Glynn MDS code over `F_9`.
///
/// The rows of [`glynn_rows`] give an MDS code exactly when `w⁴ = −1`
/// (`w` of multiplicative order 8); `w = 0` gives `PRS(10, 5)` and the
/// remaining values give codes with `d < 6`.
pub fn glynn_code(field: Arc<Field>, w: Elem) -> Result<LinearCode> {
    let rows = glynn_rows(&field, w)?;
    if !field.add(field.pow(w, 4), Elem::ONE).is_zero() {
        return Err(Error::Precondition(format!(
            "w = {w} has w^4 + 1 != 0; the Glynn matrix is MDS only for w^4 = -1"
        )));
    }
    let label = format!("Glynn(w={w})/F_9");
    LinearCode::build(field, Matrix::from_rows(rows)?, label, Structure::Glynn { w })
}

/// Smallest encoding `w` with `w⁴ = −1` in `F_9`.
pub fn default_glynn_w(field: &Field) -> Elem {
    field
        .nonzero()
        .iter()
        .copied()
        .find(|&w| field.add(field.pow(w, 4), Elem::ONE).is_zero())
        .expect("F_9 has elements of order 8")
}

/// Visits `offset + Σ m_i rows_i` for every `m ∈ F_q^{rows.len()}`, in
/// message order (first digit fastest), updating the codeword in place.
pub(crate) fn walk_codewords<F>(
    field: &Field,
    rows: &[&[Elem]],
    offset: &[Elem],
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[Elem], &[Elem]) -> ControlFlow<()>,
{
    let q = field.q();
    let n = offset.len();
    // step[i][a]: change of the codeword when digit i moves from a to a+1 (mod q)
    let steps: Vec<Vec<Vec<Elem>>> = rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|a| {
                    let delta = field.sub(Elem((a + 1) % q), Elem(a));
                    row.iter().map(|&g| field.mul(delta, g)).collect()
                })
                .collect()
        })
        .collect();
    let mut digits = vec![Elem::ZERO; rows.len()];
    let mut word = offset.to_vec();
    loop {
        visit(&word, &digits)?;
        let mut i = 0;
        loop {
            if i == rows.len() {
                return ControlFlow::Continue(());
            }
            let a = digits[i].value();
            let step = &steps[i][a as usize];
            for c in 0..n {
                word[c] = field.add(word[c], step[c]);
            }
            digits[i] = Elem((a + 1) % q);
            if digits[i].value() != 0 {
                break;
            }
            i += 1;
        }
    }
}

/// Exact minimum distance by enumerating all codewords up to scaling.
pub fn min_distance(code: &LinearCode, budget: u128) -> Result<usize> {
    let q = code.field.q();
    let needed = pow_u128(q, code.k);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget,
            advice: "use is_mds (d = n-k+1 for MDS codes) or raise the budget",
        });
    }
    let f = &*code.field;
    let g = &code.generator;
    // message = (0,…,0,1,a,rest…): leading 1 at position lead, one parallel
    // task per value a of the next digit
    let tasks: Vec<(usize, Option<Elem>)> = (0..code.k)
        .flat_map(|lead| {
            if lead + 1 < code.k {
                (0..q).map(|a| (lead, Some(Elem(a)))).collect::<Vec<_>>()
            } else {
                vec![(lead, None)]
            }
        })
        .collect();
    let best = tasks
        .par_iter()
        .map(|&(lead, next)| {
            let mut offset = g.row(lead).to_vec();
            let mut free_from = lead + 1;
            if let Some(a) = next {
                for (o, &x) in offset.iter_mut().zip(g.row(lead + 1)) {
                    *o = f.add(*o, f.mul(a, x));
                }
                free_from += 1;
            }
            let rows: Vec<&[Elem]> = (free_from..code.k).map(|r| g.row(r)).collect();
            let mut local = usize::MAX;
            let _ = walk_codewords(f, &rows, &offset, |w, _| {
                local = local.min(weight(w));
                ControlFlow::Continue(())
            });
            local
        })
        .min()
        .unwrap_or(usize::MAX);
    Ok(best)
}

/// True iff every `k` columns of `G` are independent.
pub fn is_mds(code: &LinearCode) -> bool {
    let f = &*code.field;
    let g = &code.generator;
    Combinations::new(code.n, code.k)
        .par_bridge()
        .all(|cols| g.select_columns(&cols).rank(f) == code.k)
}
