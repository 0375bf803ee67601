//! Exact rational arithmetic helpers: square detection, squarefree parts,
//! sums of two squares, and the X^(2^n) - a irreducibility criterion over Q.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer square root when `n` is a perfect square.
pub fn perfect_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if it is a square in Q.
pub fn sqrt_rational(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = perfect_sqrt_int(x.numer())?;
    let d = perfect_sqrt_int(x.denom())?;
    Some(BigRational::new(n, d))
}

pub fn is_square_rational(x: &Rational) -> bool {
    sqrt_rational(x).is_some()
}

/// Trial-division factorization of a nonzero integer. Returns prime powers of
/// |n|; the sign is the caller's business.
pub fn factor_int(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_one() || m.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            let mut e = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

/// Signed squarefree integer representing the square class of a nonzero
/// rational: the product of the sign and the primes dividing numerator times
/// denominator to an odd power.
pub fn squarefree_part(x: &Rational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = x.numer() * x.denom();
    let mut out = BigInt::one();
    for (p, e) in factor_int(&n) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    if n.is_negative() {
        out = -out;
    }
    Ok(out)
}

/// Decide whether a nonzero rational is a sum of two rational squares:
/// positive, and every prime congruent to 3 mod 4 divides numerator times
/// denominator to an even power.
pub fn is_sum_of_two_squares(a: &Rational) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    if a.is_negative() {
        return Ok(false);
    }
    let n = a.numer() * a.denom();
    let four = BigInt::from(4);
    let three = BigInt::from(3);
    for (p, e) in factor_int(&n) {
        if e % 2 == 1 && &p % &four == three {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact fourth root in Q, if any.
pub fn fourth_root_rational(x: &Rational) -> Option<Rational> {
    sqrt_rational(&sqrt_rational(x)?)
}

/// Irreducibility of X^(2^n) - a over Q: a is not a square, and for n >= 2,
/// a is not of the form -4 c^4.
pub fn power2_irreducible(a: &Rational, n: u32) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    if n < 1 {
        return Err(Error::pre("exponent must be at least 1"));
    }
    if is_square_rational(a) {
        return Ok(false);
    }
    if n >= 2 {
        let c4 = -a / rat_int(4);
        if fourth_root_rational(&c4).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical text form "p/q" (or "p" for integers).
pub fn rational_text(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn sign_of(x: &Rational) -> Sign {
    x.numer().sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_rational_basic() {
        assert_eq!(sqrt_rational(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_rational(&rat_int(5)), None);
        assert_eq!(sqrt_rational(&rat_int(-4)), None);
        assert!(is_square_rational(&rat_int(4)));
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&rat_int(12)).unwrap(), BigInt::from(3));
        assert_eq!(squarefree_part(&rat(1, 2)).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_part(&rat_int(-9)).unwrap(), BigInt::from(-1));
        assert!(squarefree_part(&rat_int(0)).is_err());
    }

    #[test]
    fn two_squares_examples() {
        assert!(is_sum_of_two_squares(&rat_int(2)).unwrap());
        assert!(!is_sum_of_two_squares(&rat_int(-1)).unwrap());
        assert!(!is_sum_of_two_squares(&rat_int(3)).unwrap());
        assert!(is_sum_of_two_squares(&rat_int(5)).unwrap());
    }

    #[test]
    fn two_squares_matches_bounded_oracle() {
        // oracle: exhaustive x, y = p/q with |p|, |q| <= 50; for integer a it
        // suffices to search integer representations of a * q^2
        let oracle = |a: i64| -> bool {
            if a <= 0 {
                return a == 0;
            }
            for q in 1i64..=50 {
                let target = a * q * q;
                let mut x = 0i64;
                while x * x <= target {
                    let rest = target - x * x;
                    let y = (rest as f64).sqrt() as i64;
                    for yy in y.saturating_sub(1)..=y + 1 {
                        if yy >= 0 && yy * yy == rest {
                            return true;
                        }
                    }
                    x += 1;
                }
            }
            false
        };
        for a in -100i64..=100 {
            if a == 0 {
                continue;
            }
            assert_eq!(
                is_sum_of_two_squares(&rat_int(a)).unwrap(),
                oracle(a),
                "mismatch at a = {a}"
            );
        }
    }

    #[test]
    fn power2_irreducible_examples() {
        assert!(power2_irreducible(&rat_int(2), 4).unwrap());
        assert!(!power2_irreducible(&rat_int(4), 1).unwrap());
        // X^4 + 4 = (X^2 - 2X + 2)(X^2 + 2X + 2)
        assert!(!power2_irreducible(&rat_int(-4), 2).unwrap());
    }
}
