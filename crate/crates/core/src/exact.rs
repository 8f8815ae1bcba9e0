//! Exact integer and rational scalars.
//!
//! `Int` and `Rat` are the unbounded types from `num-bigint` / `num-rational`;
//! a `Rat` is always stored in lowest terms with a positive denominator.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Floor square root by Newton iteration on unbounded integers.
fn isqrt_floor(n: &Int) -> Int {
    if n.is_zero() {
        return Int::zero();
    }
    // Start above the root: 2^(ceil(bits/2)).
    let bits = n.bits();
    let mut x = Int::one() << bits.div_ceil(2) as usize;
    loop {
        let y = (&x + n / &x) >> 1usize;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Exact square root: `Some(r)` with `r*r == n`, `None` if `n` is not a perfect square.
pub fn int_sqrt(n: &Int) -> Result<Option<Int>> {
    if n.is_negative() {
        return Err(Error::NegativeSquareRoot(n.to_string()));
    }
    let r = isqrt_floor(n);
    Ok((&r * &r == *n).then_some(r))
}

/// Nonnegative rational square root, if it exists.
pub fn rat_sqrt(r: &Rat) -> Result<Option<Rat>> {
    if r.is_negative() {
        return Err(Error::NegativeSquareRoot(r.to_string()));
    }
    let (Some(n), Some(d)) = (int_sqrt(r.numer())?, int_sqrt(r.denom())?) else {
        return Ok(None);
    };
    Ok(Some(Rat::new(n, d)))
}

/// Exact `k`-th root of an integer (`k >= 1`). Odd roots of negative integers are allowed.
pub fn int_nth_root(n: &Int, k: u32) -> Option<Int> {
    assert!(k >= 1, "root index must be positive");
    if k == 1 {
        return Some(n.clone());
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return int_nth_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

pub fn rat_nth_root(r: &Rat, k: u32) -> Option<Rat> {
    let n = int_nth_root(r.numer(), k)?;
    let d = int_nth_root(r.denom(), k)?;
    Some(Rat::new(n, d))
}

/// Divides a tuple by the gcd of its entries and makes the first nonzero entry positive.
pub fn primitive(tuple: &[Int]) -> Result<Vec<Int>> {
    let g = tuple.iter().fold(Int::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::AllZeroTuple);
    }
    let first_negative = tuple
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.sign() == Sign::Minus);
    let g = if first_negative { -g } else { g };
    Ok(tuple.iter().map(|x| x / &g).collect())
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values.into_iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn pow(base: &Int, exp: u32) -> Int {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn int_sqrt_examples() {
        assert_eq!(int_sqrt(&int(0)).unwrap(), Some(int(0)));
        assert_eq!(int_sqrt(&int(1336336)).unwrap(), Some(int(1156)));
        assert_eq!(int_sqrt(&int(2)).unwrap(), None);
        assert!(matches!(
            int_sqrt(&int(-4)),
            Err(Error::NegativeSquareRoot(_))
        ));
    }

    #[test]
    fn int_sqrt_large_square() {
        let r: Int = "123456789012345678901234567890123".parse().unwrap();
        let n = &r * &r;
        assert_eq!(int_sqrt(&n).unwrap(), Some(r));
        assert_eq!(int_sqrt(&(n + 1)).unwrap(), None);
    }

    #[test]
    fn rat_sqrt_examples() {
        assert_eq!(
            rat_sqrt(&rat(1336336, 50625)).unwrap(),
            Some(rat(1156, 225))
        );
        assert_eq!(rat_sqrt(&rat(1, 1)).unwrap(), Some(rat(1, 1)));
        assert_eq!(rat_sqrt(&rat(1, 2)).unwrap(), None);
        assert!(rat_sqrt(&rat(-1, 4)).is_err());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(int_nth_root(&int(-27), 3), Some(int(-3)));
        assert_eq!(int_nth_root(&int(-16), 4), None);
        assert_eq!(int_nth_root(&int(4096), 6), Some(int(4)));
        assert_eq!(rat_nth_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(rat_nth_root(&rat(9, 27), 3), None);
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(
            primitive(&ints(&[505, 335, 400, 455])).unwrap(),
            ints(&[101, 67, 80, 91])
        );
        assert_eq!(primitive(&ints(&[-7, 14])).unwrap(), ints(&[1, -2]));
        assert_eq!(
            primitive(&ints(&[17, 16, 46, 8])).unwrap(),
            ints(&[17, 16, 46, 8])
        );
        assert_eq!(primitive(&ints(&[0, 0])), Err(Error::AllZeroTuple));
        assert_eq!(primitive(&ints(&[0, -3, 6])).unwrap(), ints(&[0, 1, -2]));
    }

    proptest! {
        #[test]
        fn int_sqrt_matches_squares(n in 0u64..u64::MAX) {
            let n = Int::from(n);
            match int_sqrt(&n).unwrap() {
                Some(r) => prop_assert_eq!(&r * &r, n),
                None => {
                    let f = isqrt_floor(&n);
                    prop_assert!(&f * &f < n && (&f + 1) * (&f + 1) > n);
                }
            }
        }

        #[test]
        fn int_sqrt_finds_every_square(r in 0u64..u64::MAX) {
            let r = Int::from(r);
            prop_assert_eq!(int_sqrt(&(&r * &r)).unwrap(), Some(r));
        }

        #[test]
        fn primitive_idempotent(v in proptest::collection::vec(-1000i64..1000, 1..7)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let p = primitive(&ints(&v)).unwrap();
            prop_assert_eq!(primitive(&p).unwrap(), p.clone());
            prop_assert!(gcd_all(&p).is_one());
        }

        #[test]
        fn rat_field_laws(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50, f in 1i64..50) {
            let (x, y, z) = (rat(a, b), rat(c, d), rat(e, f));
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
        }
    }
}
