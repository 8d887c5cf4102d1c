//! Exact polynomial algebra over the generic matrix ring `k[x_{i,j}]`:
//! coefficient fields, sparse monomials, term orders, polynomials, and
//! minor expansion.

mod field;
mod monomial;
mod order;
mod poly;

pub use field::{Field, Scalar};
pub use monomial::{Monomial, MultiDegree, Var};
pub use order::{is_diagonal, TermOrder, VarOrder};
pub use poly::{minor, Polynomial};

/// Binomial coefficient with u128 intermediates; arguments stay desk-scale.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
