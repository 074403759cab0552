use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Exact arbitrary-precision rational.
pub type ExactScalar = BigRational;

pub(crate) fn int(x: u64) -> BigInt {
    BigInt::from(x)
}

pub(crate) fn ratio(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub(crate) fn rpow(base: u64, exp: i64) -> BigRational {
    let p = num_traits::pow(int(base), exp.unsigned_abs() as usize);
    if exp >= 0 {
        ratio(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Number of automorphisms of a multiset: the product of the factorials of
/// the value multiplicities.
pub fn multiset_symmetry(values: &[u64]) -> BigInt {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.chunk_by(|a, b| a == b)
        .map(|run| factorial(run.len() as u64))
        .product()
}

/// The integer value of `x` if it is a positive integer.
pub fn as_positive_integer(x: &BigRational) -> Option<BigInt> {
    (x.is_integer() && x.is_positive()).then(|| x.to_integer())
}

/// Renders an exact value as a decimal string when integral, `a/b` otherwise.
pub fn to_decimal_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_factors() {
        assert_eq!(multiset_symmetry(&[]), int(1));
        assert_eq!(multiset_symmetry(&[3, 1, 3, 3, 1]), int(12));
        assert_eq!(multiset_symmetry(&[1, 2, 3]), int(1));
    }

    #[test]
    fn powers_and_strings() {
        assert_eq!(rpow(3, -2), BigRational::new(int(1), int(9)));
        assert_eq!(rpow(5, 0), ratio(int(1)));
        assert_eq!(to_decimal_string(&BigRational::new(int(6), int(4))), "3/2");
        assert_eq!(to_decimal_string(&ratio(int(120))), "120");
        assert_eq!(as_positive_integer(&ratio(int(0))), None);
    }
}
