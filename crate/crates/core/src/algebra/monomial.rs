//! Variables `x_{i,j}` of a generic matrix and sparse monomials over them.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// A polynomial-ring variable: either a matrix entry `x_{row,col}`
/// (1-based indices) or an auxiliary elimination variable such as the `t`
/// used when intersecting ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Var {
    X(u16, u16),
    Aux(u16),
}

impl Var {
    pub fn x(row: u16, col: u16) -> Var {
        debug_assert!(row >= 1 && col >= 1, "matrix variables are 1-based");
        Var::X(row, col)
    }

    pub fn is_aux(&self) -> bool {
        matches!(self, Var::Aux(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(r, c) => write!(f, "x_{{{r},{c}}}"),
            Var::Aux(0) => write!(f, "t"),
            Var::Aux(k) => write!(f, "t_{{{k}}}"),
        }
    }
}

/// Row/column degree profile of a monomial in the `n x m` matrix grading.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl MultiDegree {
    pub fn zero(n: usize, m: usize) -> Self {
        MultiDegree {
            rows: vec![0; n],
            cols: vec![0; m],
        }
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a + b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise difference, or `None` if any coordinate would go
    /// negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(MultiDegree { rows, cols })
    }

    pub fn total(&self) -> u32 {
        self.rows.iter().sum()
    }
}

/// A sparse monomial: sorted `(variable, exponent)` pairs, all exponents
/// positive. The empty list is the monomial `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Build from arbitrary pairs: sorts, merges repeats, drops zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut exps: Vec<(Var, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn contains_aux(&self) -> bool {
        self.exps.iter().any(|&(v, _)| v.is_aux())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a + b)).expect("mul cannot fail")
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        other.merge(self, |o, s| {
            if s >= o {
                Some(s - o)
            } else {
                None
            }
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a.max(b))).expect("lcm cannot fail")
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| Some(a.min(b))).expect("gcd cannot fail")
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    /// Zip the exponent vectors of `self` and `other` (zero-filled) through
    /// `f`; `None` from `f` aborts.
    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> Option<u32>) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len().max(other.exps.len()));
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let (v, a, b) = match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, 0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ea, eb)
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, ea, 0)
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, 0, eb)
                }
                (None, None) => unreachable!(),
            };
            let e = f(a, b)?;
            if e > 0 {
                out.push((v, e));
            }
        }
        Some(Monomial { exps: out })
    }

    /// Degree profile in the `n x m` matrix grading. Panics on auxiliary
    /// variables, which carry no matrix multidegree.
    pub fn multidegree(&self, n: usize, m: usize) -> MultiDegree {
        let mut md = MultiDegree::zero(n, m);
        for &(v, e) in &self.exps {
            match v {
                Var::X(r, c) => {
                    md.rows[r as usize - 1] += e;
                    md.cols[c as usize - 1] += e;
                }
                Var::Aux(_) => panic!("auxiliary variable has no matrix multidegree"),
            }
        }
        md
    }
}

/// Storage order used for deterministic map keys and report listings:
/// by total degree, then entrywise on the sorted exponent vector. This is
/// *not* a term order; those live in [`crate::algebra::TermOrder`].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
