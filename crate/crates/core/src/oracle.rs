//! Brute-force cross-checks over small boxes.
//!
//! Nothing here goes through `Poly`, `Curve` or the generators; searches use
//! machine integers (`i128` for fourth powers) and plain `BigInt` where eighth
//! powers would overflow.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::sectiona::Tuple6;

pub const MAX_QUARTIC_SUM_BOUND: i64 = 2048;
pub const MAX_PRODUCT_BOUND: i64 = 256;
pub const MAX_PRODUCT_LHS_BOUND: i64 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Inclusive bound on the absolute value of every searched entry.
    pub bound: i64,
    /// Multiplier for the product search.
    pub m: Option<BigInt>,
    /// Separate bound for `(a, b)` in the product search; defaults to `bound`.
    pub lhs_bound: Option<i64>,
}

impl SearchConfig {
    pub fn new(bound: i64) -> Self {
        SearchConfig {
            bound,
            m: None,
            lhs_bound: None,
        }
    }

    pub fn with_m(mut self, m: impl Into<BigInt>) -> Self {
        self.m = Some(m.into());
        self
    }

    pub fn with_lhs_bound(mut self, lhs_bound: i64) -> Self {
        self.lhs_bound = Some(lhs_bound);
        self
    }
}

/// `g(a, b) = a^4 + b^4 + ab(a^2 + ab + b^2)`.
pub fn quartic_sum_value(a: i64, b: i64) -> i128 {
    let (a, b) = (a as i128, b as i128);
    a.pow(4) + b.pow(4) + a * b * (a * a + a * b + b * b)
}

/// Representative of `{(a, b), (b, a), (-a, -b), (-b, -a)}`, all of which
/// share the value of `g`.
pub fn canonical_pair(a: i64, b: i64) -> (i64, i64) {
    [(a, b), (b, a), (-a, -b), (-b, -a)]
        .into_iter()
        .max()
        .expect("nonempty")
}

/// `g(left) = g(right)` with `left < right` as canonical pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuarticSumHit {
    pub value: i128,
    pub left: (i64, i64),
    pub right: (i64, i64),
}

impl QuarticSumHit {
    /// Whether `(a, b, c, d)` describes this collision up to the symmetries of `g`.
    pub fn matches(&self, [a, b, c, d]: [i64; 4]) -> bool {
        let (x, y) = (canonical_pair(a, b), canonical_pair(c, d));
        (x, y) == (self.left, self.right) || (y, x) == (self.left, self.right)
    }

    pub fn as_tuple(&self) -> [i64; 4] {
        [self.left.0, self.left.1, self.right.0, self.right.1]
    }
}

/// All primitive collisions `g(a, b) = g(c, d)` with entries in `[-bound, bound]`.
pub fn search_quartic_sum(cfg: &SearchConfig) -> Result<Vec<QuarticSumHit>> {
    let bound = cfg.bound;
    if !(1..=MAX_QUARTIC_SUM_BOUND).contains(&bound) {
        return Err(Error::InvalidArgument(format!(
            "quartic-sum bound must be in 1..={MAX_QUARTIC_SUM_BOUND}"
        )));
    }
    let mut by_value: HashMap<i128, BTreeSet<(i64, i64)>> = HashMap::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let v = quartic_sum_value(a, b);
            if v != 0 {
                by_value.entry(v).or_default().insert(canonical_pair(a, b));
            }
        }
    }
    let mut hits = Vec::new();
    for (value, pairs) in by_value {
        let pairs: Vec<_> = pairs.into_iter().collect();
        for (i, &left) in pairs.iter().enumerate() {
            for &right in &pairs[i + 1..] {
                let g = [left.0, left.1, right.0, right.1]
                    .into_iter()
                    .fold(0i64, |g, x| g.gcd(&x));
                if g == 1 {
                    hits.push(QuarticSumHit { value, left, right });
                }
            }
        }
    }
    hits.sort();
    Ok(hits)
}

fn fourth(x: i64) -> i128 {
    (x as i128).pow(4)
}

/// Representative of a solution under `a <-> b` with `c <-> d` or `e <-> f`,
/// swapping both right-hand pairs, and exchanging `(c, d)` with `(e, f)`:
/// `a > b`, `c > d`, `e > f`, `(c, d) >= (e, f)`.
pub fn canonical_product(t: [i64; 6]) -> [i64; 6] {
    let [mut a, mut b, mut c, mut d, mut e, mut f] = t.map(i64::abs);
    if a < b {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut c, &mut d);
    }
    if c < d {
        std::mem::swap(&mut c, &mut d);
        std::mem::swap(&mut e, &mut f);
    }
    if (c, d) < (e, f) {
        std::mem::swap(&mut c, &mut e);
        std::mem::swap(&mut d, &mut f);
    }
    [a, b, c, d, e, f]
}

/// All primitive, nontrivial solutions of `m(a^4 - b^4) = (c^4 - d^4)(e^4 - f^4)`
/// with `0 <= c, d, e, f <= bound` and `0 <= a, b <= lhs_bound`, in canonical form
/// and sorted.
pub fn search_product_eq(cfg: &SearchConfig) -> Result<Vec<Tuple6>> {
    let m = cfg
        .m
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("product search needs a multiplier m".into()))?;
    let m = m
        .to_i128()
        .ok_or_else(|| Error::InvalidArgument(format!("multiplier {m} is too large")))?;
    if m == 0 {
        return Err(Error::degenerate("m", "multiplier is zero"));
    }
    let bound = cfg.bound;
    let lhs_bound = cfg.lhs_bound.unwrap_or(bound);
    if !(1..=MAX_PRODUCT_BOUND).contains(&bound) || !(1..=MAX_PRODUCT_LHS_BOUND).contains(&lhs_bound) {
        return Err(Error::InvalidArgument(format!(
            "product search bounds must be in 1..={MAX_PRODUCT_BOUND} (right) and 1..={MAX_PRODUCT_LHS_BOUND} (left)"
        )));
    }

    let mut lhs: HashMap<i128, Vec<(i64, i64)>> = HashMap::new();
    for a in 1..=lhs_bound {
        for b in 0..a {
            lhs.entry(fourth(a) - fourth(b)).or_default().push((a, b));
        }
    }
    let mut rhs = Vec::new();
    for c in 1..=bound {
        for d in 0..c {
            rhs.push((fourth(c) - fourth(d), c, d));
        }
    }

    let mut found = BTreeSet::new();
    for (i, &(x, c, d)) in rhs.iter().enumerate() {
        for &(y, e, f) in &rhs[..=i] {
            let product = x * y;
            // Both factors are positive, so the left side needs m > 0 with
            // a > b; for m < 0 use b > a.
            if product % m != 0 {
                continue;
            }
            let target = product / m;
            let flipped = target < 0;
            let Some(pairs) = lhs.get(&target.abs()) else {
                continue;
            };
            for &(a, b) in pairs {
                let (a, b) = if flipped { (b, a) } else { (a, b) };
                let g1 = a.gcd(&b).gcd(&c).gcd(&d);
                let g2 = a.gcd(&b).gcd(&e).gcd(&f);
                if g1 == 1 && g2 == 1 {
                    found.insert(canonical_product([a, b, c, d, e, f]));
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|[a, b, c, d, e, f]| Tuple6 {
            m: BigInt::from(m),
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            e: e.into(),
            f: f.into(),
        })
        .collect())
}

/// `F(x, y, z) = x^8 + y^8 + z^8 - 2((xy)^4 + (yz)^4 + (zx)^4)`, computed
/// directly and as `(x^2 + y^2 + z^2)(x^2 + y^2 - z^2)(x^2 - y^2 + z^2)(x^2 - y^2 - z^2)`.
/// The two must agree.
pub fn cz_factored_check(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<BigInt> {
    let p = |v: &BigInt, k: u32| v.pow(k);
    let direct = p(x, 8) + p(y, 8) + p(z, 8)
        - BigInt::from(2) * (p(&(x * y), 4) + p(&(y * z), 4) + p(&(z * x), 4));
    let (x2, y2, z2) = (x * x, y * y, z * z);
    let factored =
        (&x2 + &y2 + &z2) * (&x2 + &y2 - &z2) * (&x2 - &y2 + &z2) * (&x2 - &y2 - &z2);
    if direct != factored {
        return Err(Error::IdentityFailed(format!(
            "F({x}, {y}, {z}): direct {direct} != factored {factored}"
        )));
    }
    Ok(direct)
}

/// `m(a^4 - b^4) = (c^4 - d^4)(e^4 - f^4)` by plain big-integer evaluation.
pub fn product_eq_holds(m: &BigInt, t: [&BigInt; 6]) -> bool {
    let q = |v: &BigInt| v.pow(4);
    m * (q(t[0]) - q(t[1])) == (q(t[2]) - q(t[3])) * (q(t[4]) - q(t[5]))
}
