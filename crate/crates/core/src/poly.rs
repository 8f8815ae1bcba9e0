//! Sparse multivariate polynomials over `Rat`.
//!
//! A [`Poly`] carries its own sorted variable list; binary operations align
//! operands by the union of their variable names, so polynomials in `(n, p, q)`
//! and `(u, v)` combine freely. Terms are kept in graded-lexicographic order and
//! zero coefficients are never stored, which makes `is_zero` a structural test.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};

/// Exponent vector, one entry per variable of the owning polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Assignment = BTreeMap<String, Rat>;

/// Builds an assignment from integer values, e.g. `assign(&[("p", 2), ("q", 1)])`.
pub fn assign(values: &[(&str, i64)]) -> Assignment {
    values
        .iter()
        .map(|(name, v)| (name.to_string(), Rat::from_integer(Int::from(*v))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Poly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(c: impl Into<Int>) -> Self {
        Poly::constant(Rat::from_integer(c.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rat::one());
        Poly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Parses expressions such as `3*p^4*q + (-2*q^3 + 2*n*q)*p^2 - q^5`.
    ///
    /// Supports integer literals, identifiers, `+ - * ^`, parentheses and
    /// division by constant subexpressions. Multiplication must be explicit.
    pub fn parse(input: &str) -> Result<Poly> {
        Parser::new(input).parse_all()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.degree() == 0 => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of `var^exp`, as a polynomial in the remaining variables.
    pub fn coefficient(&self, var: &str, exp: u32) -> Poly {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return if exp == 0 { self.clone() } else { Poly::zero() };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[idx] == exp)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[idx] = 0;
                (e, c.clone())
            })
            .collect::<Vec<_>>();
        Poly::from_parts(self.vars.clone(), terms)
    }

    fn from_parts(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let terms: BTreeMap<Monomial, Rat> = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(e), c))
            .collect();
        Poly { vars, terms }.pruned()
    }

    /// Drops variables that no longer occur in any term.
    fn pruned(self) -> Self {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(&used).filter(|(_, &u)| u).map(|(e, _)| *e);
                (Monomial(e.collect()), c)
            })
            .collect();
        Poly { vars, terms }
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let set: BTreeSet<&String> = a.iter().chain(b).collect();
        set.into_iter().cloned().collect()
    }

    /// Re-expresses exponent vectors over a superset of the variables.
    fn exponents_in(&self, target: &[String]) -> Vec<(Vec<u32>, &Rat)> {
        let index: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).expect("target covers vars"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (i, &k) in index.iter().enumerate() {
                    e[k] = m.0[i];
                }
                (e, c)
            })
            .collect()
    }

    fn combine(&self, other: &Poly, negate_other: bool) -> Poly {
        let vars = Self::union_vars(&self.vars, &other.vars);
        let mut acc: HashMap<Vec<u32>, Rat> = HashMap::new();
        for (e, c) in self.exponents_in(&vars) {
            *acc.entry(e).or_insert_with(Rat::zero) += c;
        }
        for (e, c) in other.exponents_in(&vars) {
            let slot = acc.entry(e).or_insert_with(Rat::zero);
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Poly::from_parts(vars, acc)
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let vars = Self::union_vars(&self.vars, &other.vars);
        let lhs = self.exponents_in(&vars);
        let rhs = other.exponents_in(&vars);
        let mut acc: HashMap<Vec<u32>, Rat> = HashMap::with_capacity(lhs.len() * rhs.len() / 2);
        for (ea, ca) in &lhs {
            for (eb, cb) in &rhs {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = *ca * *cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Poly::from_parts(vars, acc)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::from_int(1);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Simultaneous substitution `var -> image`; unbound variables are kept.
    pub fn substitute(&self, bindings: &BTreeMap<String, Poly>) -> Poly {
        let images: Vec<Poly> = self
            .vars
            .iter()
            .map(|v| bindings.get(v).cloned().unwrap_or_else(|| Poly::var(v)))
            .collect();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|img| vec![Poly::from_int(1), img.clone()]).collect();
        let mut result = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &images[i];
                    table.push(next);
                }
                term = &term * &table[e as usize];
            }
            result = &result + &term;
        }
        result
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<Rat> {
        let values: Vec<&Rat> = self
            .vars
            .iter()
            .map(|v| assignment.get(v).ok_or_else(|| Error::MissingVariable(v.clone())))
            .collect::<Result<_>>()?;
        let mut powers: Vec<Vec<Rat>> = values.iter().map(|&x| vec![Rat::one(), x.clone()]).collect();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * values[i];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates at integer values and returns the integer result, failing if it is not integral.
    pub fn eval_int(&self, values: &[(&str, &Int)]) -> Result<Int> {
        let assignment: Assignment = values
            .iter()
            .map(|(k, v)| (k.to_string(), Rat::from_integer((*v).clone())))
            .collect();
        let r = self.eval(&assignment)?;
        if !r.is_integer() {
            return Err(Error::InvalidArgument(format!("non-integral value {r}")));
        }
        Ok(r.to_integer())
    }

    /// One term per line, `coeff*var^e*...`, highest terms first.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| self.format_term(m, c, true))
            .collect()
    }

    fn format_term(&self, m: &Monomial, c: &Rat, explicit_one: bool) -> String {
        let factors: Vec<String> = self
            .vars
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            return c.to_string();
        }
        let mono = factors.join("*");
        if c.is_one() && !explicit_one {
            mono
        } else if (-c).is_one() && !explicit_one {
            format!("-{mono}")
        } else {
            format!("{c}*{mono}")
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                write!(f, "{}", self.format_term(m, c, false))?;
            } else if c.is_negative() {
                write!(f, " - {}", self.format_term(m, &-c, false))?;
            } else {
                write!(f, " + {}", self.format_term(m, c, false))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let f: fn(&Poly, &Poly) -> Poly = $body;
                f(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, false));
forward_binop!(Sub, sub, |a, b| a.combine(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            chars: input.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{} at offset {}", reason.into(), self.pos),
        }
    }

    fn peek(&mut self) -> Option<char> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly> {
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                acc * rhs
            } else {
                let d = rhs
                    .as_constant()
                    .ok_or_else(|| self.error("division by a non-constant"))?;
                if d.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc.scale(&d.recip())
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.peek();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: u32 = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && pred(self.chars[self.pos]) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let v: Int = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(Poly::from_int(v))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                Ok(Poly::var(&name))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a polynomial literal that is known to be well formed.
pub(crate) fn poly(src: &str) -> Poly {
    Poly::parse(src).unwrap_or_else(|e| panic!("{e}"))
}

/// Builds a binding map from `(variable, polynomial source)` pairs.
pub(crate) fn bindings(pairs: &[(&str, &Poly)]) -> BTreeMap<String, Poly> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn binomial_square() {
        let s = (Poly::var("p") + Poly::var("q")).pow(2);
        assert_eq!(s, poly("p^2 + 2*p*q + q^2"));
        assert_eq!(s.term_count(), 3);
    }

    #[test]
    fn self_cancellation() {
        let a = poly("p^4 + 4*p*q^3 - q^4");
        let d = &a - &a;
        assert!(d.is_zero());
        assert!(d.vars().is_empty());
        assert_eq!(d, Poly::zero());
    }

    #[test]
    fn leading_coefficient_expansion() {
        let e = poly("(p^2 - q^2 + n)^2");
        assert_eq!(e.term_count(), 6);
        assert_eq!(e, poly("p^4 + q^4 + n^2 - 2*p^2*q^2 + 2*n*p^2 - 2*n*q^2"));
    }

    #[test]
    fn substitution_gives_norm_products() {
        let target = poly("a^2 + b^2");
        let b = bindings(&[("a", &poly("f*u - e*v")), ("b", &poly("e*u + f*v"))]);
        assert_eq!(target.substitute(&b), poly("(e^2 + f^2)*(u^2 + v^2)"));

        let target = poly("c^2 + d^2");
        let b = bindings(&[("c", &poly("p*u + q*v")), ("d", &poly("q*u - p*v"))]);
        assert_eq!(target.substitute(&b), poly("(p^2 + q^2)*(u^2 + v^2)"));

        let x = Poly::var("x");
        assert_eq!(x.substitute(&bindings(&[("x", &x)])), x);
    }

    #[test]
    fn substitution_is_simultaneous() {
        let b = bindings(&[("x", &poly("y")), ("y", &poly("x"))]);
        assert_eq!(poly("x - 2*y").substitute(&b), poly("y - 2*x"));
    }

    #[test]
    fn eval_examples() {
        let a = poly("p^4 + 4*p*q^3 - q^4");
        assert_eq!(a.eval(&assign(&[("p", 17), ("q", 16)])).unwrap(), rat(296513, 1));
        assert_eq!(a.eval(&assign(&[("p", 2), ("q", 1)])).unwrap(), rat(23, 1));
        let m = poly("q^2*(p^2 + q^2)");
        assert_eq!(m.eval(&assign(&[("p", 17), ("q", 16)])).unwrap(), rat(139520, 1));
        assert_eq!(
            a.eval(&assign(&[("p", 2)])),
            Err(Error::MissingVariable("q".into()))
        );
    }

    #[test]
    fn eval_int_rejects_fractions() {
        let half = poly("p/2");
        assert_eq!(half.eval_int(&[("p", &int(4))]).unwrap(), int(2));
        assert!(half.eval_int(&[("p", &int(3))]).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(Poly::parse("p +").is_err());
        assert!(Poly::parse("p / q").is_err());
        assert!(Poly::parse("(p").is_err());
        assert!(Poly::parse("p q").is_err());
        assert!(Poly::parse("1/0").is_err());
    }

    #[test]
    fn display_and_lines() {
        let p = poly("3*p^2*q - 2*n + 1 - p/2");
        assert_eq!(p.to_string(), "3*p^2*q - 2*n - 1/2*p + 1");
        assert_eq!(p.to_lines(), vec!["3*p^2*q", "-2*n", "-1/2*p", "1"]);
        assert_eq!(Poly::parse(&p.to_string()).unwrap(), p);
        assert_eq!(poly("-p").to_string(), "-p");
    }

    #[test]
    fn coefficient_extraction() {
        let f = poly("(n - p^2)*e^2 - 4*n*e*f + 3*f^2");
        assert_eq!(f.coefficient("e", 2), poly("n - p^2"));
        assert_eq!(f.coefficient("e", 1), poly("-4*n*f"));
        assert_eq!(f.coefficient("e", 0), poly("3*f^2"));
        assert_eq!(f.coefficient("e", 3), Poly::zero());
        assert_eq!(f.coefficient("x", 0), f);
    }

    #[test]
    fn degrees_add_under_multiplication() {
        let f = poly("n*p^3 + q");
        let g = poly("p^2*q^5 - 1");
        assert_eq!((&f * &g).total_degree(), Some(11));
        assert_eq!(Poly::zero().total_degree(), None);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        let term = (-5i64..=5, 0u32..3, 0u32..3, 0u32..2);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            ts.into_iter().fold(Poly::zero(), |acc, (c, a, b, d)| {
                acc + Poly::from_int(c) * Poly::var("x").pow(a) * Poly::var("y").pow(b) * Poly::var("z").pow(d)
            })
        })
    }

    fn point() -> impl Strategy<Value = Assignment> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9, -20i64..20).prop_map(|(a, b, c, d, e)| {
            [("x", rat(a, b)), ("y", rat(c, d)), ("z", rat(e, 1))]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(f in small_poly(), g in small_poly(), at in point()) {
            let (fv, gv) = (f.eval(&at).unwrap(), g.eval(&at).unwrap());
            prop_assert_eq!((&f + &g).eval(&at).unwrap(), &fv + &gv);
            prop_assert_eq!((&f - &g).eval(&at).unwrap(), &fv - &gv);
            prop_assert_eq!((&f * &g).eval(&at).unwrap(), &fv * &gv);
            prop_assert_eq!(f.pow(3).eval(&at).unwrap(), &fv * &fv * &fv);
        }

        #[test]
        fn eval_commutes_with_substitution(f in small_poly(), g in small_poly(), at in point()) {
            let b = bindings(&[("x", &g)]);
            let mut inner = at.clone();
            inner.insert("x".into(), g.eval(&at).unwrap());
            prop_assert_eq!(f.substitute(&b).eval(&at).unwrap(), f.eval(&inner).unwrap());
        }

        #[test]
        fn zero_test_agrees_with_random_evaluation(f in small_poly(), g in small_poly(), pts in proptest::collection::vec(point(), 20)) {
            let d = &(&f * &g) - &(&g * &f);
            prop_assert!(d.is_zero());
            let h = &f - &g;
            let all_zero = pts.iter().all(|p| h.eval(p).unwrap().is_zero());
            prop_assert_eq!(h.is_zero(), all_zero);
        }

        #[test]
        fn degree_of_product(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assert_eq!((&f * &g).total_degree().unwrap(), f.total_degree().unwrap() + g.total_degree().unwrap());
        }
    }
}
