//! Integer weights built from binomials and a rational prefactor.
//!
//! Each weight is `numerator / denominator` where the quotient is known to
//! be an integer. The numerator is formed first and the division is checked:
//! a remainder is reported as [`Error::Divisibility`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qfunc::{binomial, generalized_binomial};

/// Exact integer division; fails with [`Error::Divisibility`] on a remainder.
pub fn exact_div(numerator: BigInt, denominator: impl Into<BigInt>, what: &str) -> Result<BigInt> {
    let denominator = denominator.into();
    if denominator.is_zero() {
        return Err(Error::Divisibility {
            what: what.to_string(),
            numerator,
            denominator,
        });
    }
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Divisibility {
            what: what.to_string(),
            numerator,
            denominator,
        });
    }
    Ok(q)
}

/// `(2n+1)/(2k+1) * C(n+k, 2k)`, the weight of `q^(n(n+1)/2)` in the
/// theta-type expansion of `A_k^+`.
pub fn theta_a_weight(n: i64, k: i64) -> Result<BigInt> {
    let num = BigInt::from(2 * n + 1) * binomial(n + k, 2 * k);
    exact_div(
        num,
        2 * k + 1,
        &format!("(2n+1)C(n+k,2k)/(2k+1) at n={n}, k={k}"),
    )
}

/// `2n/(n+k) * C(n+k, 2k)`, the weight of `q^(n^2)` in the expansion of `C_k^+`.
pub fn theta_c_weight(n: i64, k: i64) -> Result<BigInt> {
    let num = BigInt::from(2 * n) * binomial(n + k, 2 * k);
    exact_div(num, n + k, &format!("2nC(n+k,2k)/(n+k) at n={n}, k={k}"))
}

/// `d/k * C(d+k-1, 2k-1)` for any integer `d`, using the generalized
/// binomial so that the weight is even in `d`.
///
/// With `d = j - i` this is the double-sum weight of the truncated
/// expansions; with `d = 2j - a` it is the summand weight of the binomial
/// lemma.
pub fn pair_weight(d: i64, k: i64) -> Result<BigInt> {
    let num = BigInt::from(d) * generalized_binomial(d + k - 1, 2 * k - 1);
    exact_div(num, k, &format!("d*C(d+k-1,2k-1)/k at d={d}, k={k}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        assert_eq!(
            exact_div(BigInt::from(12), 4, "x").unwrap(),
            BigInt::from(3)
        );
        assert!(matches!(
            exact_div(BigInt::from(13), 4, "x"),
            Err(Error::Divisibility { .. })
        ));
        assert!(exact_div(BigInt::from(1), 0, "x").is_err());
    }

    #[test]
    fn small_weights() {
        // (2n+1)/(2k+1) C(n+k,2k): n=k gives 1; k=0 gives 2n+1
        assert_eq!(theta_a_weight(3, 3).unwrap(), BigInt::from(1));
        assert_eq!(theta_a_weight(4, 0).unwrap(), BigInt::from(9));
        // n=2,k=1: 5/3 * C(3,2)=5
        assert_eq!(theta_a_weight(2, 1).unwrap(), BigInt::from(5));
        // n=2,k=1: 4/3 * 3 = 4
        assert_eq!(theta_c_weight(2, 1).unwrap(), BigInt::from(4));
        // d=1,k=1: 1 * C(1,1) = 1; d=3,k=2: 3/2*C(4,3)=6
        assert_eq!(pair_weight(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(pair_weight(3, 2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn pair_weight_is_even_and_vanishes_near_zero() {
        for k in 1..=8i64 {
            for d in -40..=40i64 {
                assert_eq!(pair_weight(d, k).unwrap(), pair_weight(-d, k).unwrap());
                if d.abs() < k {
                    assert!(pair_weight(d, k).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn integrality_on_the_used_grid() {
        for k in 0..=8i64 {
            for n in 0..=60i64 {
                theta_a_weight(n, k).unwrap();
                if n + k > 0 {
                    theta_c_weight(n, k).unwrap();
                }
                if k >= 1 {
                    pair_weight(n, k).unwrap();
                }
            }
        }
    }
}
