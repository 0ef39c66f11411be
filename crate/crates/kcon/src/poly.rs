//! Multivariate polynomials with exact rational coefficients over the fixed
//! variable set used by the algebra checks.

use crate::bounds::{rat_int, Rational};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NUM_VARS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    Sigma,
    Mu,
    K,
    N,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] =
        [Var::Alpha, Var::Beta, Var::Gamma, Var::Sigma, Var::Mu, Var::K, Var::N];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&v| v == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::Sigma => "sigma",
            Var::Mu => "mu",
            Var::K => "k",
            Var::N => "n",
        }
    }
}

type Exponents = [u8; NUM_VARS];

/// A polynomial in canonical expanded form: a map from exponent vectors to
/// nonzero rational coefficients. Equality is therefore the ring identity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Rational>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("evaluation point does not assign variable {0}")]
    UnassignedVar(&'static str),
    #[error("polynomial has degree {got} in {var}, expected {expected}")]
    WrongDegree { var: &'static str, expected: u8, got: u8 },
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Poly {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert([0; NUM_VARS], c);
        }
        p
    }

    pub fn int(v: i64) -> Poly {
        Poly::constant(rat_int(v))
    }

    pub fn var(v: Var) -> Poly {
        let mut e = [0u8; NUM_VARS];
        e[v.index()] = 1;
        let mut p = Poly::default();
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0; NUM_VARS]) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Variables with a nonzero occurrence.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational, PolyError> {
        let mut assigned: [Option<&Rational>; NUM_VARS] = [None; NUM_VARS];
        for (v, r) in point {
            assigned[v.index()] = Some(r);
        }
        for v in self.vars() {
            if assigned[v.index()].is_none() {
                return Err(PolyError::UnassignedVar(v.name()));
            }
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..NUM_VARS {
                for _ in 0..e[i] {
                    term *= assigned[i].expect("checked above");
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitute `v := sub`, expanding the result.
    pub fn substitute(&self, v: Var, sub: &Poly) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let power = rest[i];
            rest[i] = 0;
            let mut base = Poly { terms: BTreeMap::from([(rest, c.clone())]) };
            if power > 0 {
                base = &base * &sub.pow(power as u32);
            }
            out = &out + &base;
        }
        out
    }

    pub fn partial(&self, v: Var) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[i] -= 1;
            out.add_term(ne, c * rat_int(e[i] as i64));
        }
        out
    }

    /// The polynomial coefficient of `v^power` (in the other variables).
    pub fn coeff_of(&self, v: Var, power: u8) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] == power {
                let mut ne = *e;
                ne[i] = 0;
                out.add_term(ne, c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = [0u8; NUM_VARS];
                for i in 0..NUM_VARS {
                    e[i] = e1[i] + e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&rat_int(-1))
    }
}

macro_rules! owned_ops {
    ($($trait:ident, $fn:ident);*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $fn(self, rhs: Poly) -> Poly {
                $trait::$fn(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $fn(self, rhs: &Poly) -> Poly {
                $trait::$fn(&self, rhs)
            }
        }
    )*};
}
owned_ops!(Add, add; Sub, sub; Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let has_vars = e.iter().any(|&x| x > 0);
            let mut wrote = false;
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (vi, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", Var::ALL[vi].name())?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
