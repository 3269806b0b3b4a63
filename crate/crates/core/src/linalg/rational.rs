use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::LinalgError;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int_to_rat(value: &BigInt) -> Rational {
    Rational::from_integer(value.clone())
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational, LinalgError> {
    let err = || LinalgError::Parse(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| err())?;
    let denom: BigInt = denom.parse().map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// Renders a rational as `"p/q"`, keeping `q = 1` explicit.
pub fn fmt_fraction(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), rat(-4, 1));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_fraction(&rat(3, 2)), "3/2");
        assert_eq!(fmt_fraction(&rat(8, 1)), "8/1");
        assert_eq!(fmt_fraction(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn stored_reduced() {
        let x = rat(-12, -18);
        assert_eq!(x.numer(), &BigInt::from(2));
        assert_eq!(x.denom(), &BigInt::from(3));
        let y = rat(5, -10);
        assert!(y.denom() > &BigInt::zero());
        assert_eq!(y.numer().gcd(y.denom()), BigInt::one());
    }

    // (a/b) op (c/d) against cross-multiplied big integers.
    #[test]
    fn field_ops_match_cross_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let a: i64 = rng.gen_range(-1_000_000..1_000_000);
            let b: i64 = rng.gen_range(1..1_000_000);
            let c: i64 = rng.gen_range(-1_000_000..1_000_000);
            let d: i64 = rng.gen_range(1..1_000_000);
            let (ab, cd) = (rat(a, b), rat(c, d));
            let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));

            let same = |x: &Rational, p: BigInt, q: BigInt| {
                assert_eq!(x.numer() * &q, p * x.denom());
                assert!(x.denom() > &BigInt::zero());
                assert!(x.numer().gcd(x.denom()).is_one());
            };
            same(&(&ab + &cd), &a * &d + &c * &b, &b * &d);
            same(&(&ab - &cd), &a * &d - &c * &b, &b * &d);
            same(&(&ab * &cd), &a * &c, &b * &d);
            if !c.is_zero() {
                same(&(&ab / &cd), &a * &d, &b * &c);
            }
        }
    }
}
