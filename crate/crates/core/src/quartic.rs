//! Quartic models `W^2 = c4 U^4 + c3 U^3 + c2 U^2 + c1 U + c0` with a rational
//! point `(0, W0)`, and their birational transfer to a Weierstrass cubic.
//!
//! The transfer uses the classical construction for a quartic with a
//! rational point on `U = 0` (`w0 = W0`, `d = c1`, `c = c2`):
//!
//! ```text
//! a1 = c1/w0, a2 = c2 - c1^2/(4 w0^2), a3 = 2 w0 c3, a4 = -4 w0^2 c4, a6 = a2 a4
//! ```
//!
//! composed with the involution `W -> -W`, so that the basepoint `(0, W0)`
//! lands on the affine point `D = (-a2, a1 a2 - a3)` and `(0, -W0)` lands on
//! the identity.

use std::fmt;

use num_traits::Zero;

use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::exact::{int, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticModel {
    c4: Rat,
    c3: Rat,
    c2: Rat,
    c1: Rat,
    c0: Rat,
    w0: Rat,
}

/// An affine point `(U, W)` on a quartic model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticPoint {
    pub u: Rat,
    pub w: Rat,
}

impl fmt::Display for QuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(U, W) = ({}, {})", self.u, self.w)
    }
}

/// Homogeneous coordinates `U = u / v` in lowest terms with `v > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPair {
    pub u: Int,
    pub v: Int,
}

impl HomPair {
    pub fn from_rat(value: &Rat) -> Self {
        HomPair {
            u: value.numer().clone(),
            v: value.denom().clone(),
        }
    }

    pub fn new(u: Int, v: Int) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::InvalidArgument("homogeneous pair with v = 0".into()));
        }
        Ok(HomPair::from_rat(&Rat::new(u, v)))
    }

    pub fn as_rat(&self) -> Rat {
        Rat::new(self.u.clone(), self.v.clone())
    }
}

impl QuarticModel {
    pub fn new(c4: Rat, c3: Rat, c2: Rat, c1: Rat, c0: Rat, w0: Rat) -> Result<Self> {
        if &w0 * &w0 != c0 {
            return Err(Error::InvalidQuartic(format!(
                "basepoint W0 = {w0} does not satisfy W0^2 = c0 = {c0}"
            )));
        }
        if w0.is_zero() {
            return Err(Error::InvalidQuartic("basepoint W0 must be nonzero".into()));
        }
        let model = QuarticModel {
            c4,
            c3,
            c2,
            c1,
            c0,
            w0,
        };
        if model.discriminant().is_zero() {
            return Err(Error::InvalidQuartic("quartic has a repeated root".into()));
        }
        Ok(model)
    }

    pub fn from_ints(c: [i64; 5], w0: i64) -> Result<Self> {
        let [c4, c3, c2, c1, c0] = c.map(|v| Rat::from_integer(int(v)));
        QuarticModel::new(c4, c3, c2, c1, c0, Rat::from_integer(int(w0)))
    }

    /// `[c4, c3, c2, c1, c0]`.
    pub fn coefficients(&self) -> [&Rat; 5] {
        [&self.c4, &self.c3, &self.c2, &self.c1, &self.c0]
    }

    pub fn basepoint(&self) -> QuarticPoint {
        QuarticPoint {
            u: Rat::zero(),
            w: self.w0.clone(),
        }
    }

    pub fn value(&self, u: &Rat) -> Rat {
        (((&self.c4 * u + &self.c3) * u + &self.c2) * u + &self.c1) * u + &self.c0
    }

    pub fn contains(&self, pt: &QuarticPoint) -> bool {
        &pt.w * &pt.w == self.value(&pt.u)
    }

    /// Discriminant of the binary quartic, via the invariants `I` and `J`.
    pub fn discriminant(&self) -> Rat {
        let c = |v: i64| Rat::from_integer(int(v));
        let (a, b, cc, d, e) = (&self.c4, &self.c3, &self.c2, &self.c1, &self.c0);
        let i = c(12) * a * e - c(3) * b * d + cc * cc;
        let j = c(72) * a * cc * e + c(9) * b * cc * d - c(27) * a * d * d - c(27) * e * b * b - c(2) * cc * cc * cc;
        (c(4) * &i * &i * &i - &j * &j) / c(27)
    }
}

/// A Weierstrass model of a quartic together with the transfer maps.
#[derive(Clone, Debug)]
pub struct Birational {
    model: QuarticModel,
    curve: Curve,
    distinguished: Point,
}

pub fn to_weierstrass(model: &QuarticModel) -> Result<Birational> {
    let c = |v: i64| Rat::from_integer(int(v));
    let q = &model.w0;
    let a1 = &model.c1 / q;
    let a2 = &model.c2 - &model.c1 * &model.c1 / (c(4) * q * q);
    let a3 = c(2) * q * &model.c3;
    let a4 = -(c(4) * q * q * &model.c4);
    let a6 = &a2 * &a4;
    let distinguished = Point::affine(-a2.clone(), &a1 * &a2 - &a3);
    let curve = Curve::new(a1, a2, a3, a4, a6).map_err(|_| {
        Error::InvalidQuartic("transfer produced a singular cubic".into())
    })?;
    Ok(Birational {
        model: model.clone(),
        curve,
        distinguished,
    })
}

impl Birational {
    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn model(&self) -> &QuarticModel {
        &self.model
    }

    /// Image of the basepoint `(0, W0)`.
    pub fn distinguished_point(&self) -> &Point {
        &self.distinguished
    }

    pub fn forward(&self, pt: &QuarticPoint) -> Result<Point> {
        if !self.model.contains(pt) {
            return Err(Error::NotOnQuartic(pt.to_string()));
        }
        let q = &self.model.w0;
        let (u, w) = (&pt.u, &pt.w);
        if u.is_zero() {
            return Ok(if w == q {
                self.distinguished.clone()
            } else {
                Point::Infinity
            });
        }
        let c = |v: i64| Rat::from_integer(int(v));
        let (cc, d) = (&self.model.c2, &self.model.c1);
        let shifted = q - w; // y + q with y = -W
        let u2 = u * u;
        let x = (c(2) * q * &shifted + d * u) / &u2;
        let y = (c(4) * q * q * &shifted + c(2) * q * (d * u + cc * &u2) - d * d * &u2 / (c(2) * q))
            / (&u2 * u);
        Ok(Point::affine(x, y))
    }

    /// Quartic point corresponding to a curve point; `None` for the points at
    /// infinity of the quartic model.
    pub fn backward(&self, p: &Point) -> Result<Option<QuarticPoint>> {
        if !self.curve.on_curve(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let q = &self.model.w0;
        let Some((x, y)) = p.coords() else {
            return Ok(Some(QuarticPoint {
                u: Rat::zero(),
                w: -q.clone(),
            }));
        };
        let c = |v: i64| Rat::from_integer(int(v));
        let [a1, a2, a3, a4, _] = self.curve.coefficients();
        // Two expressions for U agree on the curve because
        // Y (Y + a1 X + a3) = (X + a2)(X^2 + a4).
        let chord = y + a1 * x + a3;
        let den = x * x + a4;
        let u = if !den.is_zero() {
            c(2) * q * &chord / den
        } else if !y.is_zero() && chord.is_zero() {
            c(2) * q * (x + a2) / y
        } else {
            return Ok(None);
        };
        let w = q - &u * (&u * x - &self.model.c1) / (c(2) * q);
        Ok(Some(QuarticPoint { u, w }))
    }

    /// U-coordinate of the quartic point corresponding to `p`.
    pub fn point_to_u(&self, p: &Point) -> Result<Option<Rat>> {
        Ok(self.backward(p)?.map(|pt| pt.u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::find_isomorphism;
    use crate::exact::{rat, rat_sqrt};

    fn model_121() -> QuarticModel {
        QuarticModel::from_ints([16, 64, 36, -64, 16], 4).unwrap()
    }

    #[test]
    fn values() {
        let m = model_121();
        assert_eq!(m.value(&rat(0, 1)), rat(16, 1));
        assert_eq!(m.value(&rat(-32, 15)), rat(1336336, 50625));
        assert_eq!(rat_sqrt(&m.value(&rat(-32, 15))).unwrap(), Some(rat(1156, 225)));
        let neg = QuarticModel::from_ints([-1, 0, 0, 0, 1], 1).unwrap();
        assert_eq!(neg.value(&rat(2, 1)), rat(-15, 1));
    }

    #[test]
    fn invalid_models() {
        assert!(QuarticModel::from_ints([16, 64, 36, -64, 16], 3).is_err());
        // (U^2 - 1)^2 has repeated roots.
        assert!(QuarticModel::from_ints([1, 0, -2, 0, 1], 1).is_err());
    }

    #[test]
    fn transfer_reproduces_displayed_curve() {
        let bir = to_weierstrass(&model_121()).unwrap();
        let displayed = Curve::from_ints([-16, -28, 512, -1024, 28672]).unwrap();
        assert_eq!(bir.curve(), &displayed);
        assert!(find_isomorphism(bir.curve(), &displayed).unwrap().is_identity());
        assert_eq!(bir.distinguished_point(), &Point::affine(rat(28, 1), rat(-64, 1)));
    }

    #[test]
    fn basepoint_round_trip() {
        let bir = to_weierstrass(&model_121()).unwrap();
        let base = bir.model().basepoint();
        let d = bir.forward(&base).unwrap();
        assert_eq!(&d, bir.distinguished_point());
        assert_eq!(bir.backward(&d).unwrap(), Some(base));
        assert_eq!(bir.point_to_u(&d).unwrap(), Some(rat(0, 1)));
    }

    #[test]
    fn multiples_transfer_to_square_values() {
        let bir = to_weierstrass(&model_121()).unwrap();
        let e = bir.curve();
        let p = bir.distinguished_point().clone();
        assert_eq!(bir.point_to_u(&e.double(&p)).unwrap(), Some(rat(-32, 15)));
        for k in -6..=6i64 {
            let kp = e.scalar_mul(&int(k), &p);
            if let Some(pt) = bir.backward(&kp).unwrap() {
                assert!(bir.model().contains(&pt), "k = {k}");
                assert!(rat_sqrt(&bir.model().value(&pt.u)).unwrap().is_some());
                assert_eq!(bir.forward(&pt).unwrap(), kp, "k = {k}");
            }
        }
    }

    #[test]
    fn forward_then_backward() {
        let bir = to_weierstrass(&model_121()).unwrap();
        let u = rat(-32, 15);
        for w in [rat(1156, 225), rat(-1156, 225)] {
            let pt = QuarticPoint { u: u.clone(), w };
            let image = bir.forward(&pt).unwrap();
            assert!(bir.curve().on_curve(&image));
            assert_eq!(bir.backward(&image).unwrap(), Some(pt));
        }
        let off = QuarticPoint { u: rat(1, 1), w: rat(1, 1) };
        assert!(bir.forward(&off).is_err());
    }

    #[test]
    fn points_at_infinity_have_no_u() {
        // W^2 = U^4 + ... with square leading coefficient: X = ±2 w0 sqrt(c4) gives infinity.
        let bir = to_weierstrass(&model_121()).unwrap();
        let e = bir.curve();
        for x in [rat(32, 1), rat(-32, 1)] {
            let [a1, a2, a3, a4, a6] = e.coefficients().map(|c| c.clone());
            // Solve Y^2 + (a1 x + a3) Y - rhs = 0.
            let b = &a1 * &x + &a3;
            let rhs = ((&x + &a2) * &x + &a4) * &x + &a6;
            let disc = &b * &b + rat(4, 1) * &rhs;
            if let Some(s) = rat_sqrt(&disc).unwrap() {
                let y = (-&b + s) / rat(2, 1);
                let p = Point::affine(x.clone(), y);
                assert!(e.on_curve(&p));
                assert_eq!(bir.point_to_u(&p).unwrap(), None);
            }
        }
        assert!(bir.point_to_u(&Point::affine(rat(0, 1), rat(0, 1))).is_err());
    }

    #[test]
    fn identity_maps_to_opposite_basepoint() {
        let bir = to_weierstrass(&model_121()).unwrap();
        let o = bir.backward(&Point::Infinity).unwrap().unwrap();
        assert_eq!(o, QuarticPoint { u: rat(0, 1), w: rat(-4, 1) });
        assert_eq!(bir.forward(&o).unwrap(), Point::Infinity);
    }

    #[test]
    fn hom_pair_normalizes() {
        let h = HomPair::new(int(64), int(-30)).unwrap();
        assert_eq!(h, HomPair { u: int(-32), v: int(15) });
        assert!(HomPair::new(int(1), int(0)).is_err());
    }
}
