//! Exact rational arithmetic, integer/rational matrices, lattice normal
//! forms and Bernoulli polynomials.
//!
//! The scalar types are re-exports of the `num` stack: [`Rational`] is an
//! always-reduced big rational with positive denominator, which is exactly
//! the invariant the rest of the crate relies on.

mod bernoulli;
mod lattice;
mod matrix;

pub use bernoulli::{bernoulli_eval, bernoulli_number};
pub use lattice::{
    congruence_kernel, hermite_normal_form, lattice_contains, smith_normal_form,
    SmithDecomposition,
};
pub use matrix::{IntMatrix, RationalMatrix};

use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Reduce into the fundamental domain `[0, 1)`.
pub fn frac_mod_one(x: &Rational) -> Rational {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < Rational::one());
    f
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Render as `p/q` (or plain `p` for integers); the inverse of [`parse_ratio`].
pub fn format_ratio(x: &Rational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Least common multiple of the denominators of a family of rationals.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Int {
    let mut acc = Int::one();
    for x in xs {
        acc = num_integer::lcm(acc, x.denom().clone());
    }
    acc
}
