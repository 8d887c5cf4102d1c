//! Sparse multivariate polynomials with an attached term order, plus the
//! memoized cofactor expansion of generic-matrix minors.

use super::field::{Field, Scalar};
use super::monomial::{Monomial, Var};
use super::order::TermOrder;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial over the attached field: terms kept sorted strictly
/// descending in the attached term order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    order: Arc<TermOrder>,
    field: Field,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(order: Arc<TermOrder>, field: Field) -> Polynomial {
        Polynomial {
            order,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(order: Arc<TermOrder>, field: Field, c: Scalar) -> Polynomial {
        Polynomial::from_terms(order, field, vec![(Monomial::one(), c)])
    }

    pub fn term(order: Arc<TermOrder>, field: Field, m: Monomial, c: Scalar) -> Polynomial {
        Polynomial::from_terms(order, field, vec![(m, c)])
    }

    /// Normalizing constructor: sorts descending, merges equal monomials,
    /// drops zeros.
    pub fn from_terms(
        order: Arc<TermOrder>,
        field: Field,
        mut terms: Vec<(Monomial, Scalar)>,
    ) -> Polynomial {
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            order,
            field,
            terms: merged,
        }
    }

    pub fn order(&self) -> &Arc<TermOrder> {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn lead(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn contains_aux(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.contains_aux())
    }

    fn assert_compatible(&self, other: &Polynomial) {
        debug_assert!(
            *self.order == *other.order && self.field == other.field,
            "polynomial arithmetic across different orders or fields"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.order.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.field.add(ca, cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            order: self.order.clone(),
            field: self.field,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            order: self.order.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiply by the single term `c * m` (preserves sortedness).
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order.clone(), self.field);
        }
        Polynomial {
            order: self.order.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), self.field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = self.field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(old) => *old = self.field.add(old, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_terms(self.order.clone(), self.field, acc.into_iter().collect())
    }

    /// Divide through by the lead coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lead() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.field.inv(lc);
                self.scale(&inv)
            }
        }
    }

    /// Re-attach to a (possibly different) term order, re-sorting terms.
    pub fn with_order(&self, order: Arc<TermOrder>) -> Polynomial {
        Polynomial::from_terms(order, self.field, self.terms.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = self.field.is_negative_display(c);
            let abs = if neg { self.field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Expand the `r x r` minor of the generic `n x m` matrix on rows `rows`
/// and columns `cols` (both strictly increasing, 1-based). Recursive
/// cofactor expansion along the first row, memoized on the remaining
/// column subset.
pub fn minor(
    n: usize,
    m: usize,
    rows: &[u16],
    cols: &[u16],
    order: &Arc<TermOrder>,
    field: Field,
) -> Result<Polynomial> {
    let r = rows.len();
    if r > n {
        return Err(Error::MinorTooLarge { r, n });
    }
    if cols.len() != r {
        return Err(Error::ShapeMismatch(format!(
            "minor needs equally many rows and columns, got {r} rows and {} columns",
            cols.len()
        )));
    }
    let strictly_increasing = |v: &[u16]| v.windows(2).all(|w| w[0] < w[1]);
    if !strictly_increasing(rows)
        || !strictly_increasing(cols)
        || rows.iter().any(|&i| i < 1 || i as usize > n)
        || cols.iter().any(|&j| j < 1 || j as usize > m)
    {
        return Err(Error::InvalidInput(format!(
            "minor index sets must be strictly increasing within 1..={n} and 1..={m}"
        )));
    }

    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    let full_mask: u32 = (1u32 << r) - 1;
    Ok(cofactor(rows, cols, 0, full_mask, order, field, &mut memo))
}

fn cofactor(
    rows: &[u16],
    cols: &[u16],
    row_idx: usize,
    col_mask: u32,
    order: &Arc<TermOrder>,
    field: Field,
    memo: &mut HashMap<u32, Polynomial>,
) -> Polynomial {
    if row_idx == rows.len() {
        return Polynomial::constant(order.clone(), field, field.one());
    }
    if let Some(p) = memo.get(&col_mask) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(order.clone(), field);
    let mut sign = field.one();
    for (k, &col) in cols.iter().enumerate() {
        if col_mask & (1 << k) == 0 {
            continue;
        }
        let sub = cofactor(rows, cols, row_idx + 1, col_mask & !(1 << k), order, field, memo);
        let entry = Monomial::var(Var::x(rows[row_idx], col));
        acc = acc.add(&sub.mul_term(&entry, &sign));
        sign = field.neg(&sign);
    }
    memo.insert(col_mask, acc.clone());
    acc
}
