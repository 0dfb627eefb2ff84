//! Polynomials and rational functions in the group parameters.
//!
//! Fixture tables, case predicates and claimed spanning vectors are written
//! as short ASCII expressions such as `-(alpha^2+beta^2)` or
//! `-beta*gamma/(2*beta^2+gamma^2)` and parsed into exponent-vector
//! monomial maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::params::{Param, Params};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Exponents of `(alpha, beta, gamma, delta, eta)`.
pub type Exponents = [u8; 5];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term([0; 5], c);
        p
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn var(param: Param) -> Self {
        let mut e = [0; 5];
        e[param.index()] = 1;
        let mut p = Polynomial::zero();
        p.add_term(e, Rational::one());
        p
    }

    fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Parses an expression whose denominator is a nonzero constant.
    pub fn parse(input: &str) -> Result<Self> {
        let rf = RationalFunction::parse(input)?;
        rf.into_polynomial().ok_or_else(|| Error::Expression {
            input: input.to_string(),
            message: "expected a polynomial (only constant denominators allowed)".into(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; 5]).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    /// Parameters that occur with a nonzero exponent.
    pub fn params(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for e in self.terms.keys() {
            for p in Param::ALL {
                if e[p.index()] > 0 {
                    out.insert(p);
                }
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, params: &Params) -> Result<Rational> {
        let mut total = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for p in Param::ALL {
                let e = exps[p.index()];
                if e == 0 {
                    continue;
                }
                let value = params.get(p).ok_or_else(|| Error::MissingParameter {
                    group: "expression".into(),
                    param: p.name().into(),
                })?;
                term = term * value.pow(u32::from(e));
            }
            total += term;
        }
        Ok(total)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                // Exponents add when monomials multiply.
                #[allow(clippy::suspicious_arithmetic_impl)]
                let e: Exponents = std::array::from_fn(|k| ea[k] + eb[k]);
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            let is_const = exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                factors.push(if mag.denom().to_string() == "1" {
                    mag.to_string()
                } else {
                    format!("({mag})")
                });
            }
            for p in Param::ALL {
                match exps[p.index()] {
                    0 => {}
                    1 => factors.push(p.name().to_string()),
                    e => factors.push(format!("{}^{e}", p.name())),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// A quotient of two polynomials, kept unreduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn parse(input: &str) -> Result<Self> {
        let tokens = tokenize(input)?;
        let mut parser = Parser {
            input,
            tokens,
            pos: 0,
        };
        let rf = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("trailing input"));
        }
        if rf.den.is_zero() {
            return Err(parser.error("identically zero denominator"));
        }
        Ok(rf)
    }

    /// Collapses to a polynomial when the denominator is a nonzero constant.
    pub fn into_polynomial(self) -> Option<Polynomial> {
        let c = self.den.as_constant()?;
        let inv = c.recip()?;
        Some(&self.num * &Polynomial::constant(inv))
    }

    pub fn params(&self) -> BTreeSet<Param> {
        let mut s = self.num.params();
        s.extend(self.den.params());
        s
    }

    pub fn eval(&self, params: &Params) -> Result<Rational> {
        let den = self.den.eval(params)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanished {
                expr: self.to_string(),
                params: params.to_string(),
            });
        }
        Ok(self.num.eval(params)? / den)
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        RationalFunction {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        }
    }

    fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den.as_constant() {
            Some(c) if c.is_one() => write!(f, "{}", self.num),
            _ => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(u64),
    Ident(Param),
    Op(char),
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let err = |message: String| Error::Expression {
        input: input.to_string(),
        message,
    };
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                out.push(Token::Op(c));
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s.parse().map_err(|_| err(format!("number {s} too large")))?;
                out.push(Token::Num(n));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let p = s.parse::<Param>().map_err(|_| err(format!("unknown identifier {s}")))?;
                out.push(Token::Ident(p));
            }
            other => return Err(err(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Expression {
            input: self.input.to_string(),
            message: format!("{message} at token {}", self.pos),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.add(&rhs.neg()) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(Token::Op(op @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc.mul(&rhs);
            } else {
                if rhs.num.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc = acc.div(&rhs);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) if n <= 16 => {
                    self.pos += 1;
                    Ok(base.pow(n as u32))
                }
                _ => Err(self.error("expected a small integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let n = i64::try_from(n).map_err(|_| self.error("number too large"))?;
                Ok(RationalFunction::from_polynomial(Polynomial::constant(
                    Rational::from_integer(n),
                )))
            }
            Some(Token::Ident(p)) => {
                self.pos += 1;
                Ok(RationalFunction::from_polynomial(Polynomial::var(p)))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a number, parameter or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn params(a: i64, b: i64, g: i64, d: i64) -> Params {
        Params::new()
            .with(Param::Alpha, a.into())
            .with(Param::Beta, b.into())
            .with(Param::Gamma, g.into())
            .with(Param::Delta, d.into())
    }

    #[test]
    fn parse_and_eval() {
        let p = Polynomial::parse("-(alpha^2+beta^2)").unwrap();
        assert_eq!(p.eval(&params(1, 2, 0, 0)).unwrap(), q(-5, 1));
        let p = Polynomial::parse("alpha*(2*alpha^2+beta^2)/2").unwrap();
        assert_eq!(p.eval(&params(1, 1, 0, 0)).unwrap(), q(3, 2));
        assert_eq!(p.total_degree(), 3);
    }

    #[test]
    fn precedence() {
        let p = Polynomial::parse("-alpha^2").unwrap();
        assert_eq!(p.eval(&params(3, 0, 0, 0)).unwrap(), q(-9, 1));
        let p = Polynomial::parse("2*beta - 3*alpha*beta/2 + 1").unwrap();
        assert_eq!(p.eval(&params(2, 4, 0, 0)).unwrap(), q(-3, 1));
    }

    #[test]
    fn rational_function() {
        let rf = RationalFunction::parse("-beta*gamma/(2*beta^2+gamma^2)").unwrap();
        assert_eq!(rf.eval(&params(0, 1, 1, 0)).unwrap(), q(-1, 3));
        assert!(matches!(
            rf.eval(&params(0, 0, 0, 0)),
            Err(Error::DenominatorVanished { .. })
        ));
        assert!(Polynomial::parse("1/beta").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["-(alpha^2+beta^2)", "alpha*beta/2", "3*beta^2*delta-2*alpha^3+1", "0", "-eta"] {
            let p = Polynomial::parse(s).unwrap();
            assert_eq!(Polynomial::parse(&p.to_string()).unwrap(), p, "{s} -> {p}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "alpha+", "2alpha", "x", "(alpha", "alpha^beta", "1/0"] {
            assert!(RationalFunction::parse(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn missing_parameter_is_an_error() {
        let p = Polynomial::parse("delta").unwrap();
        assert!(p.eval(&Params::new()).is_err());
    }
}
