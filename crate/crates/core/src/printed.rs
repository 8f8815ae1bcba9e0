//! Transcriptions of the printed formulas under verification, kept verbatim
//! (modulo explicit `*`) so that every check runs against the text as printed.
//! Corrected forms live next to the code that uses them, never here.

/// Quadratic in `(e, f)` obtained from `n(a^2 - b^2) = (c^2 - d^2)(e^2 - f^2)`
/// after `{a, b, c, d} = {fu - ev, eu + fv, pu + qv, qu - pv}`.
pub const QUADRATIC_EF: &str = "(n*v^2 - n*u^2 - p^2*u^2 - 4*p*u*q*v - q^2*v^2 + q^2*u^2 + p^2*v^2)*e^2 \
    - 4*n*f*u*e*v + n*f^2*u^2 - p^2*f^2*v^2 + p^2*f^2*u^2 - n*f^2*v^2 + q^2*f^2*v^2 \
    + 4*p*u*q*v*f^2 - q^2*f^2*u^2";

/// Homogeneous `w^2` quartic in `(u, v)`.
pub const W_SQUARED: &str = "(-2*n*q^2 + 2*n*p^2 - 2*p^2*q^2 + n^2 + q^4 + p^4)*u^4 \
    + (8*n*p*q - 8*p*q^3 + 8*p^3*q)*v*u^3 \
    + (2*n^2 - 2*q^4 - 2*p^4 - 4*n*p^2 + 4*n*q^2 + 20*p^2*q^2)*v^2*u^2 \
    + (-8*p^3*q + 8*p*q^3 - 8*n*p*q)*v^3*u \
    + (-2*n*q^2 + 2*n*p^2 - 2*p^2*q^2 + n^2 + q^4 + p^4)*v^4";

/// Coefficients `[c4, c3, c2, c1, c0]` of the quartic in `U`.
pub const QUARTIC: [&str; 5] = [
    "(p^2 - q^2 + n)^2",
    "8*p*q*n - 8*p*q^3 + 8*p^3*q",
    "2*n^2 + 4*q^2*n + 20*p^2*q^2 - 4*p^2*n - 2*q^4 - 2*p^4",
    "8*p*q^3 - 8*p*q*n - 8*p^3*q",
    "(p^2 - q^2 + n)^2",
];

/// `W` at the rational point `U = 0`.
pub const BASEPOINT_W: &str = "p^2 - q^2 + n";

/// Weierstrass coefficients `[a1, a2, a3, a4, a6]`.
pub const CURVE: [&str; 5] = [
    "-8*p*q",
    "2*n^2 - 4*p^2*n + 4*q^2*n - 2*q^4 - 2*p^4 + 4*p^2*q^2",
    "32*p^3*q*n - 32*p^3*q^3 + 16*p^5*q - 32*q^3*p*n + 16*q^5*p + 16*p*q*n^2",
    "16*p^2*q^6 + 48*p^4*q^2*n - 48*p^2*q^4*n + 48*p^2*q^2*n^2 + 16*q^2*n^3 - 24*q^4*n^2 \
     - 16*p^2*n^3 - 16*p^6*n - 24*p^4*q^4 + 16*q^6*n + 16*p^6*q^2 - 24*p^4*n^2 - 4*p^8 - 4*q^8 - 4*n^4",
    "104*q^8*n^2 - 96*q^6*n^3 - 160*p^6*q^6 - 48*p^2*q^10 + 120*p^4*q^8 - 48*p^10*q^2 \
     - 48*q^10*n + 120*p^8*q^4 + 48*p^10*n + 104*p^8*n^2 + 96*p^6*n^3 + 24*p^4*n^4 \
     - 16*p^2*n^5 + 24*q^4*n^4 + 16*q^2*n^5 + 8*p^12 + 8*q^12 - 8*n^6 \
     - 416*p^2*q^6*n^2 + 240*p^2*q^8*n - 480*p^4*q^6*n - 288*p^4*q^2*n^3 \
     + 624*p^4*q^4*n^2 + 480*p^6*q^4*n - 416*p^6*q^2*n^2 - 240*p^8*q^2*n \
     + 288*p^2*q^4*n^3 - 48*p^2*q^2*n^4",
];

/// Coordinates `[X, Y]` of the rational point on the curve.
pub const POINT: [&str; 2] = [
    "-2*n^2 + 4*p^2*n - 4*q^2*n + 2*q^4 + 2*p^4 - 4*p^2*q^2",
    "-32*p*q*n^2",
];

/// `U` of the doubled point, as `[numerator, denominator]`.
pub const DOUBLED_U: [&str; 2] = [
    "4*q*p*(p^2 - q^2 + n)",
    "(q - p)*(q + p)*(-q^2 + p^2 + 2*n)",
];

/// Degree-eight closed forms `[a, b, c, d, e, f]` in `(n, p, q)`.
pub const CLOSED_FORMS: [&str; 6] = [
    "p^8 + 4*p^7*q + (-4*q^2 + 4*n)*p^6 + (8*n*q - 12*q^3)*p^5 + (6*q^4 + 4*n^2 + 4*n*q^2)*p^4 \
     + (-16*n*q^3 + 12*q^5)*p^3 + (8*q^2*n^2 - 4*q^4*n - 4*q^6)*p^2 + (8*n*q^5 - 4*q^7)*p \
     + (4*n^2*q^4 - 4*n*q^6 + q^8)",
    "p^8 - 4*p^7*q + (-4*q^2 + 4*n)*p^6 + (-8*n*q + 12*q^3)*p^5 + (6*q^4 + 4*n^2 + 4*n*q^2)*p^4 \
     + (16*n*q^3 - 12*q^5)*p^3 + (8*q^2*n^2 - 4*q^4*n - 4*q^6)*p^2 + (-8*n*q^5 + 4*q^7)*p \
     + 4*n^2*q^4 - 4*n*q^6 + q^8",
    "3*p^4*q + (-2*q^3 + 2*n*q)*p^2 + 2*n*q^3 - q^5",
    "p^5 + (2*q^2 + 2*n)*p^3 + (-3*q^4 + 2*n*q^2)*p",
    "p^4 + (-2*q^2 + 2*n)*p^2 - 4*n*p*q - 2*n*q^2 + q^4",
    "p^4 + (-2*q^2 + 2*n)*p^2 + 4*n*p*q - 2*n*q^2 + q^4",
];

/// The `n = q^2` assignment `[a, b, c, d, e, f]` as printed.
pub const SPECIALIZED: [&str; 6] = [
    "(p^4 + 4*p*q^3 - q^4)^2",
    "(p^4 - 4*p*q^3 - q^4)^2",
    "p^5 + 4*p^3*q^2 - p*q^4",
    "3*p^4*q + q^5",
    "p^4 + 2*p^3*q - 2*p^2*q^2 + 2*p*q^3 + q^4",
    "p^4 - 2*p^3*q - 2*p^2*q^2 - 2*p*q^3 + q^4",
];

/// Parametrization `[p, q, r, s]` in `k` of `q^2(p^2 + q^2) = s^2(r^2 + s^2)`.
pub const LINK: [&str; 4] = [
    "2*k^2 + 22*k - 7",
    "8*(k + 1)*(k - 2)",
    "2*(8*k^2 - 2*k + 17)",
    "4*(k^2 - k - 2)",
];

/// Degree-sixteen closed forms, keyed by the printed letter. The first
/// six are built from `(p, q)`, the rest from `(r, s)`.
pub const DEGREE16: [(&str, &str); 12] = [
    ("a", "p^4 + 4*p*q^3 - q^4"),
    ("b", "p^4 - 4*p*q^3 - q^4"),
    ("c", "p^5 + 4*p^3*q^2 - p*q^4"),
    ("d", "3*p^4*q + q^5"),
    ("y", "p^4 + 2*p^3*q - 2*p^2*q^2 + 2*p*q^3 + q^4"),
    ("z", "p^4 - 2*p^3*q - 2*p^2*q^2 - 2*p*q^3 + q^4"),
    ("e", "r^4 + 2*r^3*s - 2*r^2*s^2 + 2*r*s^3 + s^4"),
    ("f", "r^4 - 2*r^3*s - 2*r^2*s^2 - 2*r*s^3 + s^4"),
    ("u", "r^4 + 4*r*s^3 - s^4"),
    ("v", "r^4 - 4*r*s^3 - s^4"),
    ("w", "r^5 + 4*r^3*s^2 - r*s^4"),
    ("x", "3*r^4*s + s^5"),
];

/// The twelve printed values of the degree-sixteen witness at `k = 1`,
/// in the order `a, b, c, d, e, f, u, v, w, x, y, z`.
pub const DEGREE16_WITNESS: [&str; 12] = [
    "296513", "260543", "5336657", "5057584", "5815184", "2606224", "4567568", "4379152",
    "230692576", "107491712", "297569", "295391",
];

/// `[p, q, r, s, t, u]` in `m` for `p^4 - q^4 = m(r^4 - s^4)(t^4 - u^4)`.
pub const OCTIC: [&str; 6] = [
    "2*(50*m^2 - 37*m + 5)",
    "2*(10*m^2 + 13*m - 5)",
    "3*(3*m - 1)",
    "7*m - 1",
    "10*m - 1",
    "10*m - 7",
];

/// The printed `m = 3` instance `(86^4 - 31^4) = 3(6^4 - 5^4)(29^4 - 23^4)`.
pub const OCTIC_INSTANCE: (i64, [i64; 6]) = (3, [86, 31, 6, 5, 29, 23]);

/// The two printed six-tuples for the eighth-power relations.
pub const CZ16_INSTANCES: [[i64; 6]; 2] = [
    [732, 804, 342, 293, 513, 536],
    [63232, 71825, 76032, 104593, 61776, 88400],
];

/// Closed forms `[a, b, c, d]` in `(u, v)` for
/// `a^4 + b^4 + ab(a^2 + ab + b^2) = c^4 + d^4 + cd(c^2 + cd + d^2)`.
pub const QUARTIC_SUM: [&str; 4] = [
    "u^3 - u^2*v + 2*u*v^2 - v^3",
    "v^3 + 2*u^2*v - u*v^2 - u^3",
    "u^3 - 2*u^2*v + 2*u*v^2",
    "2*v*u^2 - 2*u*v^2 + v^3",
];

/// Intermediate ansatz: `(a, b, c, d) = (pt + m, qt + n, pt - m, qt - n)` with
/// `p = u^2`, `q = v^2`, `t = (u + v)/(u - v)` and the `(m, n)` below.
pub const QUARTIC_SUM_ANSATZ_MN: [&str; 2] = ["u^2 - 2*u*v + 2*v^2", "2*u^2 - 2*u*v + v^2"];

/// Printed instance at `(u, v) = (8, 7)`.
pub const QUARTIC_SUM_INSTANCE: ((i64, i64), [i64; 4]) = ((8, 7), [101, 67, 91, 80]);

/// Parametrization `[a, b, c, d]` in `(x, y)` of `a^2 + ab + b^2 = c^2 + cd + d^2`.
pub const RAMANUJAN_CONDITION: [&str; 4] = ["x + y + 1", "x*y - 1", "x*y + y + 1", "x - y"];

/// Printed instance `(x, y) = (3, 2) -> (a, b, c, d) = (6, 5, 9, 1)`.
pub const RAMANUJAN_INSTANCE: ((i64, i64), [i64; 4]) = ((3, 2), [6, 5, 9, 1]);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn every_transcription_parses() {
        let all = [QUADRATIC_EF, W_SQUARED, BASEPOINT_W]
            .into_iter()
            .chain(QUARTIC)
            .chain(CURVE)
            .chain(POINT)
            .chain(DOUBLED_U)
            .chain(CLOSED_FORMS)
            .chain(SPECIALIZED)
            .chain(LINK)
            .chain(DEGREE16.iter().map(|(_, s)| *s))
            .chain(OCTIC)
            .chain(QUARTIC_SUM)
            .chain(QUARTIC_SUM_ANSATZ_MN)
            .chain(RAMANUJAN_CONDITION);
        for src in all {
            Poly::parse(src).unwrap();
        }
    }

    #[test]
    fn long_coefficient_has_all_terms() {
        assert_eq!(Poly::parse(CURVE[4]).unwrap().term_count(), 28);
        assert_eq!(Poly::parse(CURVE[3]).unwrap().term_count(), 15);
    }
}
