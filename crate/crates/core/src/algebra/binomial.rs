//! Binomial coefficients reduced mod 2.

/// `binom(n, k) mod 2`; zero for negative or out-of-range arguments.
///
/// By Lucas, the coefficient is odd exactly when the binary digits of `k`
/// are a subset of those of `n`.
pub fn binomial_mod2(n: i64, k: i64) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    k & !n == 0
}

/// `binom(a, u) mod 2` for the polynomial binomial `a(a-1)...(a-u+1)/u!`,
/// which stays meaningful for negative `a`. Zero when `u < 0`.
pub fn generalized_binomial_mod2(a: i64, u: i64) -> bool {
    if u < 0 {
        return false;
    }
    if a >= 0 {
        binomial_mod2(a, u)
    } else {
        // binom(-m, u) = (-1)^u binom(m + u - 1, u)
        binomial_mod2(u - a - 1, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_traits::{One, Zero};

    fn exact(n: u64, k: u64) -> BigUint {
        let mut acc = BigUint::one();
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn small_values() {
        assert!(binomial_mod2(3, 1));
        assert!(!binomial_mod2(2, 1));
        assert!(!binomial_mod2(5, 2));
        assert!(!binomial_mod2(-1, 0));
        assert!(!binomial_mod2(2, 3));
    }

    #[test]
    fn matches_exact_oracle() {
        for n in 0..=64u64 {
            for k in 0..=n {
                let odd = !(exact(n, k) % 2u32).is_zero();
                assert_eq!(binomial_mod2(n as i64, k as i64), odd, "({n}, {k})");
            }
        }
    }

    #[test]
    fn generalized_negative_top() {
        assert!(generalized_binomial_mod2(-1, 0));
        // binom(-1, u) = (-1)^u
        assert!(generalized_binomial_mod2(-1, 5));
        // binom(-2, 1) = -2
        assert!(!generalized_binomial_mod2(-2, 1));
        assert!(!generalized_binomial_mod2(4, -1));
    }
}
