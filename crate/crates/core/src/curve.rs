//! General Weierstrass curves `Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6`
//! over the rationals, in affine coordinates.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat_nth_root, rat_sqrt, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    a1: Rat,
    a2: Rat,
    a3: Rat,
    a4: Rat,
    a6: Rat,
    discriminant: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl Point {
    pub fn affine(x: Rat, y: Rat) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rat, &Rat)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Curve {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let discriminant = discriminant(&a1, &a2, &a3, &a4, &a6);
        if discriminant.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(Curve {
            a1,
            a2,
            a3,
            a4,
            a6,
            discriminant,
        })
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(|v| Rat::from_integer(int(v)));
        Curve::new(a1, a2, a3, a4, a6)
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> [&Rat; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn discriminant(&self) -> &Rat {
        &self.discriminant
    }

    pub fn c4(&self) -> Rat {
        let (b2, b4, _, _) = b_invariants(&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        &b2 * &b2 - Rat::from_integer(int(24)) * b4
    }

    pub fn c6(&self) -> Rat {
        let (b2, b4, b6, _) = b_invariants(&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        -(&b2 * &b2 * &b2) + Rat::from_integer(int(36)) * &b2 * b4 - Rat::from_integer(int(216)) * b6
    }

    pub fn j_invariant(&self) -> Rat {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / &self.discriminant
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|a| a.is_integer())
    }

    /// Left side minus right side of the Weierstrass equation at `(x, y)`.
    pub fn residual(&self, x: &Rat, y: &Rat) -> Rat {
        let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
        let rhs = ((x + &self.a2) * x + &self.a4) * x + &self.a6;
        lhs - rhs
    }

    pub fn on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => self.residual(x, y).is_zero(),
        }
    }

    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(x.clone(), -y - &self.a1 * x - &self.a3),
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &Point, q: &Point) -> Point {
        debug_assert!(self.on_curve(p) && self.on_curve(q));
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (slope, intercept) = if x1 != x2 {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / dx)
        } else {
            let denom = Rat::from_integer(int(2)) * y1 + &self.a1 * x1 + &self.a3;
            if y1 != y2 || denom.is_zero() {
                // Vertical chord or tangent: Q = -P.
                return Point::Infinity;
            }
            let three = Rat::from_integer(int(3));
            let two = Rat::from_integer(int(2));
            let slope = (&three * x1 * x1 + &two * &self.a2 * x1 + &self.a4 - &self.a1 * y1) / &denom;
            let intercept =
                (-(x1 * x1 * x1) + &self.a4 * x1 + &two * &self.a6 - &self.a3 * y1) / &denom;
            (slope, intercept)
        };
        let x3 = &slope * &slope + &self.a1 * &slope - &self.a2 - x1 - x2;
        let y3 = -(&slope + &self.a1) * &x3 - intercept - &self.a3;
        Point::affine(x3, y3)
    }

    pub fn double(&self, p: &Point) -> Point {
        self.add(p, p)
    }

    /// `k * P` by double-and-add; negative `k` multiplies `-P`.
    pub fn scalar_mul(&self, k: &Int, p: &Point) -> Point {
        let base = if k.is_negative() { self.neg(p) } else { p.clone() };
        let k = k.abs();
        let mut acc = Point::Infinity;
        for i in (0..k.bits()).rev() {
            acc = self.double(&acc);
            if k.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }

    /// `[P, 2P, ..., count*P]` by repeated addition.
    pub fn multiples(&self, p: &Point, count: usize) -> Vec<Point> {
        let mut out = Vec::with_capacity(count);
        let mut acc = Point::Infinity;
        for _ in 0..count {
            acc = self.add(&acc, p);
            out.push(acc.clone());
        }
        out
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[a1, a2, a3, a4, a6] = [{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

fn b_invariants(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat, a6: &Rat) -> (Rat, Rat, Rat, Rat) {
    let c = |v: i64| Rat::from_integer(int(v));
    let b2 = a1 * a1 + c(4) * a2;
    let b4 = c(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + c(4) * a6;
    let b8 = a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    (b2, b4, b6, b8)
}

fn discriminant(a1: &Rat, a2: &Rat, a3: &Rat, a4: &Rat, a6: &Rat) -> Rat {
    let (b2, b4, b6, b8) = b_invariants(a1, a2, a3, a4, a6);
    let c = |v: i64| Rat::from_integer(int(v));
    -(&b2 * &b2 * &b8) - c(8) * &b4 * &b4 * &b4 - c(27) * &b6 * &b6 + c(9) * &b2 * &b4 * &b6
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionClass {
    /// `d * P = O` for this `d <= 12`.
    FiniteOrder(u32),
    /// No multiple up to 12 vanishes.
    LikelyInfinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionScreen {
    pub class: TorsionClass,
    /// Whether the computed multiples `P, 2P, ..., 12P` are pairwise distinct.
    pub distinct_multiples: bool,
    pub integral_model: bool,
    /// On an integral model, the first `k <= 12` whose multiple `kP` has an
    /// x-coordinate denominator not dividing 12. Torsion points on such a model
    /// never have one, so its presence certifies infinite order.
    pub nagell_lutz_witness: Option<u32>,
}

pub const TORSION_SCREEN_DEPTH: usize = 12;

/// Screens `P` for torsion by computing `kP` for `k = 1..=12`.
pub fn torsion_screen(curve: &Curve, p: &Point) -> Result<TorsionScreen> {
    if !curve.on_curve(p) {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    if p.is_infinity() {
        return Err(Error::InvalidArgument("torsion screen of the identity".into()));
    }
    let multiples = curve.multiples(p, TORSION_SCREEN_DEPTH);
    let class = match multiples.iter().position(Point::is_infinity) {
        Some(i) => TorsionClass::FiniteOrder(i as u32 + 1),
        None => TorsionClass::LikelyInfinite,
    };
    let distinct_multiples = multiples
        .iter()
        .enumerate()
        .all(|(i, a)| multiples[..i].iter().all(|b| b != a));
    let integral_model = curve.is_integral();
    let twelve = int(12);
    let nagell_lutz_witness = if integral_model {
        multiples
            .iter()
            .position(|m| match m {
                Point::Affine { x, .. } => !twelve.is_multiple_of(x.denom()),
                Point::Infinity => false,
            })
            .map(|i| i as u32 + 1)
    } else {
        None
    };
    Ok(TorsionScreen {
        class,
        distinct_multiples,
        integral_model,
        nagell_lutz_witness,
    })
}

/// Admissible change of variables `X = u^2 X' + r`, `Y = u^3 Y' + s u^2 X' + t`
/// taking a curve `E` to an isomorphic model `E'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub u: Rat,
    pub r: Rat,
    pub s: Rat,
    pub t: Rat,
}

impl Isomorphism {
    pub fn identity() -> Self {
        Isomorphism {
            u: Rat::one(),
            r: Rat::zero(),
            s: Rat::zero(),
            t: Rat::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Isomorphism::identity()
    }

    /// Coefficients of `E'`.
    pub fn transform_curve(&self, e: &Curve) -> Result<Curve> {
        let c = |v: i64| Rat::from_integer(int(v));
        let Isomorphism { u, r, s, t } = self;
        let [a1, a2, a3, a4, a6] = e.coefficients();
        let u2 = u * u;
        let u3 = &u2 * u;
        let b1 = (a1 + c(2) * s) / u;
        let b2 = (a2 - s * a1 + c(3) * r - s * s) / &u2;
        let b3 = (a3 + r * a1 + c(2) * t) / &u3;
        let b4 = (a4 - s * a3 + c(2) * r * a2 - (t + r * s) * a1 + c(3) * r * r - c(2) * s * t) / (&u2 * &u2);
        let b6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (&u3 * &u3);
        Curve::new(b1, b2, b3, b4, b6)
    }

    /// Maps a point of `E` to `E'`.
    pub fn map_point(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let u2 = &self.u * &self.u;
                let xr = x - &self.r;
                let y2 = (y - &self.s * &xr - &self.t) / (&u2 * &self.u);
                Point::affine(xr / u2, y2)
            }
        }
    }

    /// Maps a point of `E'` back to `E`.
    pub fn unmap_point(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let u2 = &self.u * &self.u;
                let big_x = &u2 * x + &self.r;
                let big_y = &u2 * &self.u * y + &self.s * &u2 * x + &self.t;
                Point::affine(big_x, big_y)
            }
        }
    }
}

/// Finds a rational isomorphism taking `from` to `to`, if the two models are
/// isomorphic over the rationals.
pub fn find_isomorphism(from: &Curve, to: &Curve) -> Option<Isomorphism> {
    if from.j_invariant() != to.j_invariant() {
        return None;
    }
    let (c4, c6) = (from.c4(), from.c6());
    let (c4p, c6p) = (to.c4(), to.c6());
    // u^4 = c4/c4', u^6 = c6/c6'.
    let u_squared = if c4.is_zero() {
        rat_nth_root(&(&c6 / &c6p), 3)?
    } else if c6.is_zero() {
        rat_sqrt(&(&c4 / &c4p)).ok()??
    } else {
        (&c6 * &c4p) / (&c6p * &c4)
    };
    if !u_squared.is_positive() {
        return None;
    }
    let u = rat_sqrt(&u_squared).ok()??;
    let two = Rat::from_integer(int(2));
    let three = Rat::from_integer(int(3));
    let [a1, a2, a3, _, _] = from.coefficients();
    let [b1, b2, b3, _, _] = to.coefficients();
    for u in [u.clone(), -u] {
        let s = (&u * b1 - a1) / &two;
        let r = (&u * &u * b2 - a2 + &s * a1 + &s * &s) / &three;
        let t = (&u * &u * &u * b3 - a3 - &r * a1) / &two;
        let iso = Isomorphism { u, r, s, t };
        if iso.transform_curve(from).ok().as_ref() == Some(to) {
            return Some(iso);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn curve_121() -> (Curve, Point) {
        let e = Curve::from_ints([-16, -28, 512, -1024, 28672]).unwrap();
        (e, Point::affine(rat(28, 1), rat(-64, 1)))
    }

    #[test]
    fn membership() {
        let (e, p) = curve_121();
        assert!(e.on_curve(&p));
        assert!(e.on_curve(&Point::Infinity));
        assert!(!e.on_curve(&Point::affine(rat(0, 1), rat(0, 1))));
    }

    #[test]
    fn singular_model_rejected() {
        // y^2 = x^3
        assert_eq!(Curve::from_ints([0, 0, 0, 0, 0]), Err(Error::SingularCurve));
    }

    #[test]
    fn identity_and_inverse() {
        let (e, p) = curve_121();
        assert_eq!(e.add(&p, &Point::Infinity), p);
        assert_eq!(e.add(&Point::Infinity, &p), p);
        assert_eq!(e.add(&p, &e.neg(&p)), Point::Infinity);
        assert_eq!(e.neg(&p), Point::affine(rat(28, 1), rat(0, 1)));
    }

    #[test]
    fn doubling_matches_hand_values() {
        let (e, p) = curve_121();
        let two_p = e.add(&p, &p);
        assert_eq!(two_p, Point::affine(rat(737, 16), rat(-4335, 64)));
        assert_eq!(e.scalar_mul(&int(2), &p), two_p);
        assert!(e.on_curve(&two_p));
    }

    #[test]
    fn scalar_mul_small_cases() {
        let (e, p) = curve_121();
        assert_eq!(e.scalar_mul(&int(0), &p), Point::Infinity);
        assert_eq!(e.scalar_mul(&int(1), &p), p);
        assert_eq!(e.scalar_mul(&int(-3), &p), e.neg(&e.scalar_mul(&int(3), &p)));
        let multiples = e.multiples(&p, 7);
        for (k, m) in multiples.iter().enumerate() {
            assert_eq!(&e.scalar_mul(&int(k as i64 + 1), &p), m);
        }
    }

    #[test]
    fn screen_of_displayed_point() {
        let (e, p) = curve_121();
        let s = torsion_screen(&e, &p).unwrap();
        assert_eq!(s.class, TorsionClass::LikelyInfinite);
        assert!(s.distinct_multiples);
        assert!(s.integral_model);
        assert_eq!(s.nagell_lutz_witness, Some(2));
    }

    #[test]
    fn screen_detects_two_torsion() {
        // y^2 = x^3 - x has (0, 0) of order 2.
        let e = Curve::from_ints([0, 0, 0, -1, 0]).unwrap();
        let t = Point::affine(rat(0, 1), rat(0, 1));
        let s = torsion_screen(&e, &t).unwrap();
        assert_eq!(s.class, TorsionClass::FiniteOrder(2));
        assert!(!s.distinct_multiples);
        assert_eq!(s.nagell_lutz_witness, None);
    }

    #[test]
    fn screen_detects_higher_torsion() {
        // y^2 + y = x^3 - x^2 (11a3) has a rational point of order 5 at (0, 0).
        let e = Curve::from_ints([0, -1, 1, 0, 0]).unwrap();
        let s = torsion_screen(&e, &Point::affine(rat(0, 1), rat(0, 1))).unwrap();
        assert_eq!(s.class, TorsionClass::FiniteOrder(5));
    }

    #[test]
    fn screen_rejects_bad_input() {
        let (e, _) = curve_121();
        assert!(torsion_screen(&e, &Point::affine(rat(0, 1), rat(0, 1))).is_err());
        assert!(torsion_screen(&e, &Point::Infinity).is_err());
    }

    #[test]
    fn isomorphism_round_trip() {
        let (e, p) = curve_121();
        let iso = Isomorphism {
            u: rat(2, 3),
            r: rat(5, 1),
            s: rat(-1, 2),
            t: rat(7, 4),
        };
        let e2 = iso.transform_curve(&e).unwrap();
        let p2 = iso.map_point(&p);
        assert!(e2.on_curve(&p2));
        assert_eq!(iso.unmap_point(&p2), p);
        assert_eq!(e.j_invariant(), e2.j_invariant());
        let found = find_isomorphism(&e, &e2).unwrap();
        assert_eq!(found.transform_curve(&e).unwrap(), e2);
        assert_eq!(found.map_point(&e.double(&p)), e2.double(&p2));
        assert!(find_isomorphism(&e, &e).unwrap().is_identity());
    }

    #[test]
    fn quadratic_twist_is_not_rationally_isomorphic() {
        let e = Curve::from_ints([0, 0, 0, -1, 1]).unwrap();
        let twist = Curve::from_ints([0, 0, 0, -4, 8]).unwrap(); // d = 2
        assert_eq!(e.j_invariant(), twist.j_invariant());
        assert!(find_isomorphism(&e, &twist).is_none());
        let other = Curve::from_ints([0, 0, 0, -1, 2]).unwrap();
        assert!(find_isomorphism(&e, &other).is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn group_laws_on_small_multiples(i in -4i64..=4, j in -4i64..=4, k in -4i64..=4) {
            let (e, p) = curve_121();
            let (a, b, c) = (e.scalar_mul(&int(i), &p), e.scalar_mul(&int(j), &p), e.scalar_mul(&int(k), &p));
            let ab = e.add(&a, &b);
            prop_assert!(e.on_curve(&ab));
            prop_assert_eq!(&ab, &e.add(&b, &a));
            prop_assert_eq!(e.add(&ab, &c), e.add(&a, &e.add(&b, &c)));
            prop_assert_eq!(ab, e.scalar_mul(&int(i + j), &p));
        }
    }
}
