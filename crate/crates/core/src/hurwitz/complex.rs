use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use super::exact::{factorial, int, rpow};
use super::HurwitzError;

/// Complex genus-0 simple Hurwitz number `n^(n-3) (2n-2)! / n!`.
pub fn complex_hurwitz_g0(n: u64) -> Result<BigRational, HurwitzError> {
    if n == 0 {
        return Err(HurwitzError::Domain(n));
    }
    Ok(rpow(n, n as i64 - 3) * BigRational::new(factorial(2 * n - 2), factorial(n)))
}

/// Complex genus-1 simple Hurwitz number
/// `(n^n - n^(n-1) - sum_{i=2..n} C(n,i) (i-2)! n^(n-i)) / 24`, as printed;
/// not integral for small `n`.
pub fn complex_hurwitz_g1(n: u64) -> Result<BigRational, HurwitzError> {
    if n < 2 {
        return Err(HurwitzError::Domain(n));
    }
    let pow = |e: u64| num_traits::pow(int(n), e as usize);
    let sum: BigInt = (2..=n)
        .map(|i| binomial(int(n), int(i)) * factorial(i - 2) * pow(n - i))
        .sum();
    Ok(BigRational::new(pow(n) - pow(n - 1) - sum, int(24)))
}
