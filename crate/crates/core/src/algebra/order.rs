//! Term orders on monomials: lexicographic, graded reverse lexicographic,
//! weight orders with lexicographic tiebreak, and block (elimination)
//! orders. Includes the exhaustive diagonality test.

use super::monomial::{Monomial, Var};
use super::poly::minor;
use crate::algebra::Field;
use itertools::Itertools;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A priority listing of the variables. Smaller priority key = bigger
/// variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarOrder {
    /// `x_{1,1} > x_{1,2} > ... > x_{1,m} > x_{2,1} > ...`
    RowMajor,
    /// An explicit permutation; earlier entries are bigger. Variables not
    /// listed come after every listed one, in row-major order.
    Explicit(Vec<Var>),
}

impl VarOrder {
    fn key(&self, v: Var) -> (u8, u32, u32) {
        match self {
            VarOrder::RowMajor => match v {
                Var::Aux(k) => (0, k as u32, 0),
                Var::X(r, c) => (1, r as u32, c as u32),
            },
            VarOrder::Explicit(list) => match list.iter().position(|&w| w == v) {
                Some(i) => (0, i as u32, 0),
                None => match v {
                    Var::Aux(k) => (1, k as u32, 0),
                    Var::X(r, c) => (2, r as u32, c as u32),
                },
            },
        }
    }

    /// All variables of both monomials, biggest first.
    fn sorted_union(&self, a: &Monomial, b: &Monomial) -> Vec<Var> {
        let mut vars: Vec<Var> = a.support().chain(b.support()).collect();
        vars.sort_by_key(|&v| self.key(v));
        vars.dedup();
        vars
    }
}

/// A multiplicative total well-order on monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex(VarOrder),
    GrevLex(VarOrder),
    /// Nonnegative weights (missing variables weigh 0) with lexicographic
    /// tiebreak.
    Weight {
        weights: Vec<(Var, u64)>,
        tiebreak: VarOrder,
    },
    /// Compare degree in the block variables first (ties inside the block
    /// broken lexicographically by block position), then the rest with the
    /// inner order. Used to eliminate auxiliary variables.
    Block {
        block: Vec<Var>,
        inner: Box<TermOrder>,
    },
}

impl TermOrder {
    /// The default diagonal order: lexicographic, row-major.
    pub fn default_lex() -> Arc<TermOrder> {
        Arc::new(TermOrder::Lex(VarOrder::RowMajor))
    }

    /// Elimination order putting `block` in front of an existing order.
    pub fn eliminate(block: Vec<Var>, inner: &TermOrder) -> Arc<TermOrder> {
        Arc::new(TermOrder::Block {
            block,
            inner: Box::new(inner.clone()),
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex(vo) => cmp_lex(vo, a, b),
            TermOrder::GrevLex(vo) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| cmp_revlex_tail(vo, a, b)),
            TermOrder::Weight { weights, tiebreak } => {
                let wa = weighted_degree(weights, a);
                let wb = weighted_degree(weights, b);
                wa.cmp(&wb).then_with(|| cmp_lex(tiebreak, a, b))
            }
            TermOrder::Block { block, inner } => {
                let (ab, ar) = split(a, block);
                let (bb, br) = split(b, block);
                let block_order = VarOrder::Explicit(block.clone());
                ab.degree()
                    .cmp(&bb.degree())
                    .then_with(|| cmp_lex(&block_order, &ab, &bb))
                    .then_with(|| inner.cmp(&ar, &br))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex(VarOrder::RowMajor) => write!(f, "lex(row-major)"),
            TermOrder::Lex(VarOrder::Explicit(vs)) => {
                write!(f, "lex({})", vs.iter().map(|v| v.to_string()).join(" > "))
            }
            TermOrder::GrevLex(VarOrder::RowMajor) => write!(f, "grevlex(row-major)"),
            TermOrder::GrevLex(VarOrder::Explicit(vs)) => {
                write!(f, "grevlex({})", vs.iter().map(|v| v.to_string()).join(" > "))
            }
            TermOrder::Weight { .. } => write!(f, "weight+lex"),
            TermOrder::Block { block, inner } => write!(
                f,
                "eliminate({}) then {}",
                block.iter().map(|v| v.to_string()).join(","),
                inner
            ),
        }
    }
}

fn split(m: &Monomial, block: &[Var]) -> (Monomial, Monomial) {
    let inside = Monomial::from_pairs(m.vars().filter(|(v, _)| block.contains(v)));
    let outside = Monomial::from_pairs(m.vars().filter(|(v, _)| !block.contains(v)));
    (inside, outside)
}

fn weighted_degree(weights: &[(Var, u64)], m: &Monomial) -> u64 {
    m.vars()
        .map(|(v, e)| {
            weights
                .iter()
                .find(|&&(w, _)| w == v)
                .map(|&(_, wt)| wt * e as u64)
                .unwrap_or(0)
        })
        .sum()
}

fn cmp_lex(vo: &VarOrder, a: &Monomial, b: &Monomial) -> Ordering {
    for v in vo.sorted_union(a, b) {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Reverse-lexicographic tail comparison (degrees already equal): walking
/// variables from smallest to biggest, the first difference decides, with
/// the *smaller* exponent winning.
fn cmp_revlex_tail(vo: &VarOrder, a: &Monomial, b: &Monomial) -> Ordering {
    for v in vo.sorted_union(a, b).into_iter().rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Decide whether a term order is diagonal for the generic `n x m` matrix:
/// for every `r <= n` and every choice of `r` rows `a` and `r` columns `b`,
/// the lead term of the minor `[a|b]` must be the main-diagonal product
/// `x_{a_1,b_1} * ... * x_{a_r,b_r}`. Decided by exhaustive enumeration.
pub fn is_diagonal(order: &Arc<TermOrder>, n: usize, m: usize) -> bool {
    for r in 1..=n.min(m) {
        for rows in (1..=n as u16).combinations(r) {
            for cols in (1..=m as u16).combinations(r) {
                let p = minor(n, m, &rows, &cols, order, Field::Rationals)
                    .expect("enumerated minors are well-shaped");
                let diag = Monomial::from_pairs(
                    rows.iter().zip(&cols).map(|(&i, &j)| (Var::x(i, j), 1)),
                );
                match p.lead_monomial() {
                    Some(lm) if *lm == diag => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(r: u16, c: u16) -> Monomial {
        Monomial::var(Var::x(r, c))
    }

    #[test]
    fn row_major_lex_basics() {
        let o = TermOrder::default_lex();
        // x11 > x12 > x21
        assert_eq!(o.cmp(&x(1, 1), &x(1, 2)), Ordering::Greater);
        assert_eq!(o.cmp(&x(1, 2), &x(2, 1)), Ordering::Greater);
        // x11*x22 > x12*x21 (the diagonal beats the antidiagonal)
        let d = x(1, 1).mul(&x(2, 2));
        let a = x(1, 2).mul(&x(2, 1));
        assert_eq!(o.cmp(&d, &a), Ordering::Greater);
        // multiplicativity spot check and 1 minimal
        assert_eq!(o.cmp(&d.mul(&x(3, 3)), &a.mul(&x(3, 3))), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::one(), &x(3, 3)), Ordering::Less);
    }

    #[test]
    fn grevlex_prefers_degree_then_revlex() {
        let o = TermOrder::GrevLex(VarOrder::RowMajor);
        assert_eq!(o.cmp(&x(1, 1).mul(&x(1, 2)), &x(1, 1)), Ordering::Greater);
        // same degree: x11*x22 vs x12*x21 -> smallest variable x22 vs x21:
        // x22 is smaller-priority; first difference from the bottom is x22
        // (present in first only) so first has LARGER exp at the smallest
        // var -> first is smaller.
        let d = x(1, 1).mul(&x(2, 2));
        let a = x(1, 2).mul(&x(2, 1));
        assert_eq!(o.cmp(&d, &a), Ordering::Less);
    }

    #[test]
    fn weight_order_with_tiebreak() {
        let o = TermOrder::Weight {
            weights: vec![(Var::x(2, 1), 5)],
            tiebreak: VarOrder::RowMajor,
        };
        assert_eq!(o.cmp(&x(2, 1), &x(1, 1)), Ordering::Greater);
        // zero-weight monomials fall back to lex
        assert_eq!(o.cmp(&x(1, 1), &x(1, 2)), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_aux_first() {
        let t = Var::Aux(0);
        let o = TermOrder::eliminate(vec![t], &TermOrder::Lex(VarOrder::RowMajor));
        // any power of t beats any monomial without t
        let big = x(1, 1).mul(&x(2, 2)).mul(&x(3, 3));
        assert_eq!(o.cmp(&Monomial::var(t), &big), Ordering::Greater);
        // without t, the inner order decides
        assert_eq!(o.cmp(&x(1, 1), &x(1, 2)), Ordering::Greater);
    }

    #[test]
    fn row_major_lex_is_diagonal_3x5() {
        assert!(is_diagonal(&TermOrder::default_lex(), 3, 5));
    }

    #[test]
    fn column_reversed_lex_is_not_diagonal_2x2() {
        // x12 > x11 > x22 > x21 picks the antidiagonal of [1,2|1,2]
        let o = Arc::new(TermOrder::Lex(VarOrder::Explicit(vec![
            Var::x(1, 2),
            Var::x(1, 1),
            Var::x(2, 2),
            Var::x(2, 1),
        ])));
        assert!(!is_diagonal(&o, 2, 2));
    }
}
