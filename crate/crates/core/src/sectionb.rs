//! Degree-sixteen solutions of
//! `(a^4 - b^4)(c^4 - d^4)(e^8 - f^8) = (u^4 - v^4)(w^4 - x^4)(y^8 - z^8)`.
//!
//! Two instances of the `n = q^2` eighth-power family,
//!
//! ```text
//! (a^4 - b^4)(c^4 - d^4) = m1 (y^8 - z^8),   m1 = q^2(p^2 + q^2)
//! (u^4 - v^4)(w^4 - x^4) = m2 (e^8 - f^8),   m2 = s^2(r^2 + s^2)
//! ```
//!
//! are coupled through `m1 = m2`, which is parametrized by a single integer `k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow, Int};
use crate::poly::{bindings, poly, Poly};
use crate::printed;
use crate::report::Report;

/// `(p, q, r, s)` with `q^2(p^2 + q^2) = s^2(r^2 + s^2)`, all nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadLink {
    pub p: Int,
    pub q: Int,
    pub r: Int,
    pub s: Int,
}

impl QuadLink {
    pub fn new(p: Int, q: Int, r: Int, s: Int) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::degenerate("q", "m1 = q^2(p^2 + q^2) is zero"));
        }
        if s.is_zero() {
            return Err(Error::degenerate("s", "m2 = s^2(r^2 + s^2) is zero"));
        }
        let link = QuadLink {
            p: p.abs(),
            q: q.abs(),
            r: r.abs(),
            s: s.abs(),
        };
        let (m1, m2) = link.sides();
        if m1 != m2 {
            return Err(Error::IdentityFailed(format!(
                "q^2(p^2 + q^2) = {m1} but s^2(r^2 + s^2) = {m2}"
            )));
        }
        Ok(link)
    }

    /// `(q^2(p^2 + q^2), s^2(r^2 + s^2))`.
    pub fn sides(&self) -> (Int, Int) {
        let m = |a: &Int, b: &Int| b * b * (a * a + b * b);
        (m(&self.p, &self.q), m(&self.r, &self.s))
    }

    /// The common multiplier `m1 = m2`.
    pub fn multiplier(&self) -> Int {
        self.sides().0
    }
}

impl fmt::Display for QuadLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p, q, r, s) = ({}, {}, {}, {})", self.p, self.q, self.r, self.s)
    }
}

fn link_polys() -> &'static [Poly; 4] {
    static CELL: OnceLock<[Poly; 4]> = OnceLock::new();
    CELL.get_or_init(|| printed::LINK.map(poly))
}

/// `(p, q, r, s)` at `k` before sign normalization.
pub fn link_raw(k: &Int) -> [Int; 4] {
    link_polys().each_ref().map(|f| {
        f.eval_int(&[("k", k)])
            .expect("integer polynomial in k")
    })
}

pub fn link_params(k: &Int) -> Result<QuadLink> {
    let [p, q, r, s] = link_raw(k);
    let degenerate = |name: &str| {
        Error::degenerate(
            format!("{name}(k)"),
            format!("k = {k} is a root of (k + 1)(k - 2)"),
        )
    };
    if q.is_zero() {
        return Err(degenerate("q"));
    }
    if s.is_zero() {
        return Err(degenerate("s"));
    }
    QuadLink::new(p, q, r, s)
}

fn k_bindings() -> BTreeMap<String, Poly> {
    let [p, q, r, s] = link_polys();
    bindings(&[("p", p), ("q", q), ("r", r), ("s", s)])
}

/// `q(k)^2(p(k)^2 + q(k)^2) - s(k)^2(r(k)^2 + s(k)^2)` as a polynomial in `k`.
pub fn link_symbolic_check() -> Report {
    let residual = poly("q^2*(p^2 + q^2) - s^2*(r^2 + s^2)").substitute(&k_bindings());
    Report::symbolic("sectionb-link", &residual)
}

fn degree16_polys() -> &'static BTreeMap<&'static str, Poly> {
    static CELL: OnceLock<BTreeMap<&'static str, Poly>> = OnceLock::new();
    CELL.get_or_init(|| {
        printed::DEGREE16
            .iter()
            .map(|(name, src)| (*name, poly(src)))
            .collect()
    })
}

const LEFT_FACTOR: &str = "(a^4 - b^4)*(c^4 - d^4)";
const EIGHTHS: &str = "y^8 - z^8";

/// Each half against its eighth-power side, symbolically in `(p, q)` and `(r, s)`.
pub fn constituent_check() -> Report {
    let forms = degree16_polys();
    let b = |names: [&str; 6]| {
        let pairs: Vec<(&str, &Poly)> = ["a", "b", "c", "d", "y", "z"]
            .into_iter()
            .zip(names)
            .map(|(slot, name)| (slot, &forms[name]))
            .collect();
        bindings(&pairs)
    };
    let relation = poly(LEFT_FACTOR) - poly("q^2*(p^2 + q^2)") * poly(EIGHTHS);
    let first = relation.substitute(&b(["a", "b", "c", "d", "y", "z"]));
    let relation = poly(LEFT_FACTOR) - poly("s^2*(r^2 + s^2)") * poly(EIGHTHS);
    let second = relation.substitute(&b(["u", "v", "w", "x", "e", "f"]));
    Report::symbolic_all(
        "sectionb-link/halves",
        &[("(p, q) half", &first), ("(r, s) half", &second)],
    )
}

/// The degree-sixteen relation with every entry expressed in `k`.
pub fn degree16_symbolic_check() -> Report {
    let kb = k_bindings();
    let in_k: BTreeMap<String, Poly> = degree16_polys()
        .iter()
        .map(|(name, f)| (name.to_string(), f.substitute(&kb)))
        .collect();
    let g = |n: &str| &in_k[n];
    let d4 = |x: &str, y: &str| g(x).pow(4) - g(y).pow(4);
    let d8 = |x: &str, y: &str| g(x).pow(8) - g(y).pow(8);
    let lhs = d4("a", "b") * d4("c", "d") * d8("e", "f");
    let rhs = d4("u", "v") * d4("w", "x") * d8("y", "z");
    Report::symbolic("sectionb-link/degree16", &(lhs - rhs))
}

/// A solution of the degree-sixteen equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple12 {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
    pub e: Int,
    pub f: Int,
    pub u: Int,
    pub v: Int,
    pub w: Int,
    pub x: Int,
    pub y: Int,
    pub z: Int,
}

pub const TUPLE12_NAMES: [&str; 12] = ["a", "b", "c", "d", "e", "f", "u", "v", "w", "x", "y", "z"];

impl Tuple12 {
    pub fn from_entries(v: [Int; 12]) -> Self {
        let [a, b, c, d, e, f, u, v, w, x, y, z] = v;
        Tuple12 { a, b, c, d, e, f, u, v, w, x, y, z }
    }

    /// Entries in the order `a, b, c, d, e, f, u, v, w, x, y, z`.
    pub fn entries(&self) -> [&Int; 12] {
        [
            &self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.u, &self.v, &self.w, &self.x,
            &self.y, &self.z,
        ]
    }

    pub fn sides(&self) -> (Int, Int) {
        let d = |x: &Int, y: &Int, k: u32| pow(x, k) - pow(y, k);
        (
            d(&self.a, &self.b, 4) * d(&self.c, &self.d, 4) * d(&self.e, &self.f, 8),
            d(&self.u, &self.v, 4) * d(&self.w, &self.x, 4) * d(&self.y, &self.z, 8),
        )
    }

    pub fn holds(&self) -> bool {
        let (l, r) = self.sides();
        l == r
    }
}

impl fmt::Display for Tuple12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = TUPLE12_NAMES
            .iter()
            .zip(self.entries())
            .map(|(n, v)| format!("{n} = {v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree16 {
    pub link: QuadLink,
    pub tuple: Tuple12,
    /// `m1 = m2`.
    pub multiplier: Int,
    /// Common value of both sides.
    pub value: Int,
}

/// Builds and verifies the degree-sixteen tuple for a link.
pub fn degree16_from_link(link: &QuadLink) -> Result<Degree16> {
    let forms = degree16_polys();
    let at = [("p", &link.p), ("q", &link.q), ("r", &link.r), ("s", &link.s)];
    let mut entries = Vec::with_capacity(12);
    for name in TUPLE12_NAMES {
        entries.push(forms[name].eval_int(&at)?.abs());
    }
    let tuple = Tuple12::from_entries(entries.try_into().expect("twelve entries"));
    let m = link.multiplier();

    let d = |x: &Int, y: &Int, k: u32| pow(x, k) - pow(y, k);
    let y8 = d(&tuple.y, &tuple.z, 8);
    let e8 = d(&tuple.e, &tuple.f, 8);
    if y8.is_zero() || e8.is_zero() {
        return Err(Error::degenerate("y^8 - z^8 or e^8 - f^8", format!("{link}")));
    }
    let halves = [
        (
            "(a^4 - b^4)(c^4 - d^4) = m1 (y^8 - z^8)",
            d(&tuple.a, &tuple.b, 4) * d(&tuple.c, &tuple.d, 4),
            &m * &y8,
        ),
        (
            "(u^4 - v^4)(w^4 - x^4) = m2 (e^8 - f^8)",
            d(&tuple.u, &tuple.v, 4) * d(&tuple.w, &tuple.x, 4),
            &m * &e8,
        ),
    ];
    for (what, l, r) in halves {
        if l != r {
            return Err(Error::IdentityFailed(format!("{what} at {link}: {l} != {r}")));
        }
    }
    let (lhs, rhs) = tuple.sides();
    if lhs != rhs {
        return Err(Error::IdentityFailed(format!("degree-sixteen sides differ: {lhs} != {rhs}")));
    }
    let common = &y8 * &e8;
    if &lhs / &common != m || !(&lhs % &common).is_zero() {
        return Err(Error::IdentityFailed("sides are not m (y^8 - z^8)(e^8 - f^8)".into()));
    }
    Ok(Degree16 {
        link: link.clone(),
        tuple,
        multiplier: m,
        value: lhs,
    })
}

pub fn degree16_tuple(k: &Int) -> Result<Degree16> {
    degree16_from_link(&link_params(k)?)
}
