//! Exact coefficient arithmetic: arbitrary-precision rationals or a prime
//! residue field. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a computation, fixed once per run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// Exact rationals (`BigRational`).
    Rationals,
    /// Integers modulo the given prime.
    Prime(u64),
}

/// A field element. `Fp` values do not carry the modulus; all arithmetic
/// goes through a [`Field`] so mixing moduli is impossible by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(v) => *v == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => write!(f, "{v}"),
        }
    }
}

impl Field {
    /// Deterministic primality check by trial division; inputs are small.
    pub fn is_prime(p: u64) -> bool {
        if p < 2 {
            return false;
        }
        if p % 2 == 0 {
            return p == 2;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= p {
            if p % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => panic!("rational scalar used with Fp arithmetic"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.modulus() as u128;
                Scalar::Fp(((*x as u128 + *y as u128) % p) as u64)
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Fp(x) => {
                let p = self.modulus();
                Scalar::Fp(if *x == 0 { 0 } else { p - *x })
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.modulus() as u128;
                Scalar::Fp(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    /// Multiplicative inverse. Panics on zero: division by zero is a
    /// programming error, never a data condition, in this crate.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            Scalar::Fp(x) => {
                assert!(*x != 0, "inverse of zero");
                let p = self.modulus();
                Scalar::Fp(mod_pow(*x, p - 2, p))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Canonical text form of a scalar used as a leading coefficient sign.
    pub fn is_negative_display(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(x) => x.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let third = f.div(&f.one(), &f.from_i64(3));
        let sum = f.add(&f.add(&third, &third), &third);
        assert!(sum.is_one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let s = Scalar::Fp(v);
            assert!(f.mul(&s, &f.inv(&s)).is_one());
        }
    }

    #[test]
    fn primality_trial_division() {
        assert!(Field::is_prime(2));
        assert!(Field::is_prime(32003));
        assert!(!Field::is_prime(1));
        assert!(!Field::is_prime(32001));
    }

    #[test]
    fn negation_wraps_mod_p() {
        let f = Field::Prime(5);
        assert_eq!(f.neg(&Scalar::Fp(2)), Scalar::Fp(3));
        assert_eq!(f.neg(&Scalar::Fp(0)), Scalar::Fp(0));
    }
}
