use crate::exactmath::{Int, Rational};
use num_traits::{One, Zero};
use std::sync::Mutex;
use std::sync::OnceLock;

static NUMBERS: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// The Bernoulli number B_n, with the convention B_1 = -1/2.
///
/// Computed by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0 and cached
/// per index; the degrees needed by the Chern character rows are tiny.
pub fn bernoulli_number(n: usize) -> Rational {
    let cache = NUMBERS.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut cache = cache.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = Rational::zero();
        let mut binom = Int::one(); // C(m+1, j), built incrementally
        for (j, b) in cache.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * b;
            binom = binom * Int::from(m + 1 - j) / Int::from(j + 1);
        }
        let next = -acc / Rational::from_integer(Int::from(m + 1));
        cache.push(next);
    }
    cache[n].clone()
}

/// Exact value of the Bernoulli polynomial B_n(x) = sum C(n,k) B_k x^{n-k}.
pub fn bernoulli_eval(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut binom = Int::one(); // C(n, k)
    let mut power = Rational::one(); // x^{n-k}, filled in backwards below
    // compute powers x^0..x^n once
    let mut powers = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        powers.push(power.clone());
        power *= x;
    }
    for k in 0..=n {
        acc += Rational::from_integer(binom.clone()) * bernoulli_number(k) * &powers[n - k];
        binom = binom * Int::from(n - k) / Int::from(k + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    #[test]
    fn low_degree_values() {
        // B_1(x) = x - 1/2, from the generating-function recurrence
        assert_eq!(bernoulli_eval(1, &rat_int(0)), rat(-1, 2));
        // B_2(x) = x^2 - x + 1/6 evaluated exactly
        assert_eq!(bernoulli_eval(2, &rat(1, 5)), rat(1, 150));
        assert_eq!(bernoulli_eval(2, &rat(3, 5)), rat(-11, 150));
        // B_0 is identically 1
        assert_eq!(bernoulli_eval(0, &rat(17, 3)), rat_int(1));
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat_int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn reflection_symmetry() {
        // B_n(1-x) = (-1)^n B_n(x)
        for n in 0..=12 {
            for x in [rat(0, 1), rat(1, 5), rat(3, 7), rat(-2, 3), rat(9, 4)] {
                let lhs = bernoulli_eval(n, &(rat_int(1) - &x));
                let rhs = if n % 2 == 0 {
                    bernoulli_eval(n, &x)
                } else {
                    -bernoulli_eval(n, &x)
                };
                assert_eq!(lhs, rhs, "n = {n}");
            }
        }
    }
}
