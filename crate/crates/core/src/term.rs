//! A tiny expression language for simple hypergeometric terms in one
//! variable `k`, and the canonical `TermSpec` form behind it.
//!
//! A term is a polynomial in `k` times "pure" factors: a geometric part
//! `z^k`, rising factorials `rf(a, k) = a (a+1) ... (a+k-1)`, and integer
//! powers of `fact(k) = k!`.  The grammar (EBNF):
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = unary { ("*" | "/") unary } ;
//! unary    = [ "-" | "+" ] power ;
//! power    = atom [ "^" exponent ] ;
//! exponent = [ "-" ] ( integer | "(" expr ")" ) ;
//! atom     = integer | "k" | "(" expr ")"
//!          | "fact" "(" expr ")"
//!          | "rf" "(" expr "," expr ")"
//!          | "pow" "(" expr "," expr ")" ;
//! integer  = digit { digit } ;
//! ```
//!
//! Every expression must normalize to a single polynomial times pure
//! factors; sums of genuinely different hypergeometric terms are rejected.
//! Exponents must be constant integers, `fact`/`rf`/`pow` take the
//! variable `k` as their last argument, and `rf`/`pow` take constant first
//! arguments.  Errors carry the byte offset where they were detected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{Poly, RationalFunction};
use crate::rational::{is_nonpositive_integer, pow_rat, rat_int, Rat};

// ---------------------------------------------------------------------------
// TermSpec
// ---------------------------------------------------------------------------

/// Canonical form of a simple hypergeometric term
/// `p(k) * z^k * prod_i rf(a_i, k)^{e_i} * fact(k)^e`.
///
/// Invariants: `z != 0`; rising-factor bases are distinct, never `1` (that
/// factor is folded into the factorial exponent), carry nonzero exponents,
/// and a base with a negative exponent is never a nonpositive integer (it
/// would put a zero in a denominator).  The polynomial part may be zero, in
/// which case the term is identically zero.
#[derive(Clone, PartialEq, Eq)]
pub struct TermSpec {
    /// Polynomial factor `p(k)`.
    pub polynomial_part: Poly,
    /// Geometric base `z` of the factor `z^k`.
    pub geometric_base: Rat,
    /// Rising-factorial factors as `(base, exponent)` pairs, sorted by base.
    pub rising_factors: Vec<(Rat, i64)>,
    /// Exponent of `fact(k)`.
    pub factorial_exponent: i64,
}

impl TermSpec {
    /// Build a canonical `TermSpec`, folding and validating the factors.
    ///
    /// # Panics
    ///
    /// Panics when `z = 0` or when a rising factor with negative exponent
    /// has a nonpositive integer base.
    pub fn new(
        polynomial_part: Poly,
        geometric_base: Rat,
        rising_factors: Vec<(Rat, i64)>,
        factorial_exponent: i64,
    ) -> TermSpec {
        assert!(!geometric_base.is_zero(), "geometric base must be nonzero");
        let mut fact_exp = factorial_exponent;
        let mut merged: Vec<(Rat, i64)> = Vec::new();
        for (base, exp) in rising_factors {
            if base.is_one() {
                fact_exp += exp; // rf(1, k) = k!
                continue;
            }
            match merged.iter_mut().find(|(b, _)| *b == base) {
                Some((_, e)) => *e += exp,
                None => merged.push((base, exp)),
            }
        }
        merged.retain(|(_, e)| *e != 0);
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        for (base, exp) in &merged {
            assert!(
                *exp > 0 || !is_nonpositive_integer(base),
                "rising factorial base {base} with negative exponent has a zero factor"
            );
        }
        TermSpec {
            polynomial_part,
            geometric_base,
            rising_factors: merged,
            factorial_exponent: fact_exp,
        }
    }

    /// The constant term `p(k) = c` with no pure factors.
    pub fn constant(c: Rat) -> TermSpec {
        TermSpec::new(Poly::constant(c), Rat::one(), vec![], 0)
    }

    /// True when the polynomial part is zero, i.e. the term is identically 0.
    pub fn is_zero(&self) -> bool {
        self.polynomial_part.is_zero()
    }

    /// Replace the polynomial part, keeping the pure factors.
    pub fn with_polynomial(&self, p: Poly) -> TermSpec {
        TermSpec { polynomial_part: p, ..self.clone() }
    }

    /// Exact value of the term at `k = k0`.
    pub fn eval(&self, k0: u64) -> Rat {
        self.polynomial_part.eval(&rat_int(k0 as i64)) * self.pure_eval(k0)
    }

    /// Value at `k = k0` of the pure factors alone (polynomial part
    /// replaced by 1); never divides by the polynomial shell.
    pub fn pure_eval(&self, k0: u64) -> Rat {
        let mut acc = pow_rat(&self.geometric_base, k0 as i64);
        for (base, exp) in &self.rising_factors {
            let mut rf = Rat::one();
            for i in 0..k0 {
                rf *= base + rat_int(i as i64);
            }
            acc *= pow_rat(&rf, *exp);
        }
        if self.factorial_exponent != 0 {
            acc *= pow_rat(&crate::rational::factorial(k0 as usize), self.factorial_exponent);
        }
        acc
    }

    /// Ratio of consecutive terms `f(k+1)/f(k)` as a reduced rational
    /// function of `k`.
    ///
    /// # Panics
    ///
    /// Panics when the polynomial part is zero (the ratio is undefined).
    pub fn ratio(&self) -> RationalFunction {
        assert!(!self.is_zero(), "term ratio of the zero term");
        let p = &self.polynomial_part;
        let mut num = p.shift(1).scale(&self.geometric_base);
        let mut den = p.clone();
        for (base, exp) in &self.rising_factors {
            // rf(a, k+1)/rf(a, k) = a + k
            let lin = Poly::new(vec![base.clone(), Rat::one()]);
            for _ in 0..exp.unsigned_abs() {
                if *exp > 0 {
                    num = &num * &lin;
                } else {
                    den = &den * &lin;
                }
            }
        }
        // fact(k+1)/fact(k) = k + 1
        let lin = Poly::new(vec![Rat::one(), Rat::one()]);
        for _ in 0..self.factorial_exponent.unsigned_abs() {
            if self.factorial_exponent > 0 {
                num = &num * &lin;
            } else {
                den = &den * &lin;
            }
        }
        RationalFunction::new(num, den)
    }
}

impl fmt::Display for TermSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pretty(self))
    }
}

impl fmt::Debug for TermSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TermSpec({self})")
    }
}

/// Render a term in the input grammar; `parse_term` accepts the output and
/// reproduces the same `TermSpec`.
pub fn pretty(t: &TermSpec) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut numer: Vec<String> = Vec::new();
    let mut denom: Vec<String> = Vec::new();

    let p = &t.polynomial_part;
    if p != &Poly::one() {
        let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let s = p.to_string_with("k");
        numer.push(if terms > 1 { format!("({s})") } else { s });
    }
    if !t.geometric_base.is_one() {
        numer.push(format!("pow({},k)", t.geometric_base));
    }
    let fold = |target: &mut Vec<String>, factor: String, e: u64| {
        target.push(if e == 1 { factor } else { format!("{factor}^{e}") });
    };
    for (base, exp) in &t.rising_factors {
        let factor = format!("rf({base},k)");
        if *exp > 0 {
            fold(&mut numer, factor, *exp as u64);
        } else {
            fold(&mut denom, factor, exp.unsigned_abs());
        }
    }
    if t.factorial_exponent != 0 {
        let factor = "fact(k)".to_string();
        if t.factorial_exponent > 0 {
            fold(&mut numer, factor, t.factorial_exponent as u64);
        } else {
            fold(&mut denom, factor, t.factorial_exponent.unsigned_abs());
        }
    }
    let mut out = if numer.is_empty() { "1".to_string() } else { numer.join("*") };
    for d in denom {
        out.push('/');
        out.push_str(&d);
    }
    out
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Parse or normalization failure, carrying the byte offset in the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, offset: usize) -> ParseError {
        ParseError { message: message.into(), offset }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (byte {})", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var,
    Fact,
    Rf,
    PowFn,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                toks.push((Tok::Int(text.parse().unwrap()), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let tok = match &input[start..i] {
                    "k" => Tok::Var,
                    "fact" => Tok::Fact,
                    "rf" => Tok::Rf,
                    "pow" => Tok::PowFn,
                    other => {
                        return Err(ParseError::new(format!("unknown identifier `{other}`"), start))
                    }
                };
                toks.push((tok, start));
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            b',' => {
                toks.push((Tok::Comma, start));
                i += 1;
            }
            b'+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, start));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, start));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, start));
                i += 1;
            }
            _ => {
                return Err(ParseError::new(
                    format!("unexpected character `{}`", &input[start..start + 1]),
                    start,
                ))
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

/// Partially normalized product collected while parsing: a polynomial
/// fraction times pure factors.  Rising factors remember the offset where
/// they entered the expression so late validation can point at them.
#[derive(Clone, Debug)]
struct Value {
    num: Poly,
    den: Poly,
    z: Rat,
    rising: Vec<(Rat, i64, usize)>,
    fact_exp: i64,
}

impl Value {
    fn from_poly(p: Poly) -> Value {
        Value { num: p, den: Poly::one(), z: Rat::one(), rising: vec![], fact_exp: 0 }
    }

    fn is_poly_fraction(&self) -> bool {
        self.z.is_one() && self.rising.is_empty() && self.fact_exp == 0
    }

    /// The value as a constant rational, when it is one.
    fn as_constant(&self) -> Option<Rat> {
        if !self.is_poly_fraction() {
            return None;
        }
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rat::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0) / self.den.coeff(0)),
            _ => None,
        }
    }

    fn mul(mut self, other: Value) -> Value {
        self.num = &self.num * &other.num;
        self.den = &self.den * &other.den;
        self.z *= other.z;
        self.rising.extend(other.rising);
        self.fact_exp += other.fact_exp;
        self
    }

    fn inv(self, at: usize) -> Result<Value, ParseError> {
        if self.num.is_zero() {
            return Err(ParseError::new("division by zero", at));
        }
        Ok(Value {
            num: self.den,
            den: self.num,
            z: self.z.recip(),
            rising: self.rising.into_iter().map(|(b, e, o)| (b, -e, o)).collect(),
            fact_exp: -self.fact_exp,
        })
    }

    fn pow(self, e: i64, at: usize) -> Result<Value, ParseError> {
        let base = if e < 0 { self.inv(at)? } else { self };
        let e = e.unsigned_abs();
        let mut acc = Value::from_poly(Poly::one());
        for _ in 0..e {
            acc = acc.mul(base.clone());
        }
        Ok(acc)
    }

    fn add(mut self, other: Value, negate: bool, at: usize) -> Result<Value, ParseError> {
        if !self.is_poly_fraction() || !other.is_poly_fraction() {
            return Err(ParseError::new(
                "cannot add or subtract terms carrying factorial, rising-factorial, \
                 or geometric factors",
                at,
            ));
        }
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        self.num = if negate { &lhs - &rhs } else { &lhs + &rhs };
        self.den = &self.den * &other.den;
        Ok(self)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(format!("expected {what}"), self.here()))
        }
    }

    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_product()?;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            let at = self.here();
            self.pos += 1;
            let rhs = self.parse_product()?;
            acc = acc.add(rhs, negate, at)?;
        }
        Ok(acc)
    }

    fn parse_product(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_unary()?;
        loop {
            let divide = match self.peek() {
                Some(Tok::Star) => false,
                Some(Tok::Slash) => true,
                _ => break,
            };
            let at = self.here();
            self.pos += 1;
            let rhs = self.parse_unary()?;
            acc = if divide { acc.mul(rhs.inv(at)?) } else { acc.mul(rhs) };
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let v = self.parse_unary()?;
                Ok(Value::from_poly(Poly::constant(-Rat::one())).mul(v))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.parse_unary()
            }
            _ => self.parse_power(),
        }
    }

    fn parse_power(&mut self) -> Result<Value, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.here();
        self.pos += 1;
        let e = self.parse_exponent()?;
        base.pow(e, at)
    }

    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        let at = self.here();
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let value = match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = self.bump() else { unreachable!() };
                Value::from_poly(Poly::constant(Rat::from_integer(n)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.parse_expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                v
            }
            _ => return Err(ParseError::new("expected an integer exponent", self.here())),
        };
        let c = value
            .as_constant()
            .ok_or_else(|| ParseError::new("exponent must be a constant", at))?;
        if !c.is_integer() {
            return Err(ParseError::new("exponent must be an integer", at));
        }
        let e = c
            .to_integer()
            .to_i64()
            .ok_or_else(|| ParseError::new("exponent too large", at))?;
        Ok(if negate { -e } else { e })
    }

    fn parse_atom(&mut self) -> Result<Value, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Value::from_poly(Poly::constant(Rat::from_integer(n)))),
            Some(Tok::Var) => Ok(Value::from_poly(Poly::var())),
            Some(Tok::LParen) => {
                let v = self.parse_expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(v)
            }
            Some(Tok::Fact) => {
                self.expect(Tok::LParen, "`(` after fact")?;
                let arg_at = self.here();
                let arg = self.parse_expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                if !(arg.is_poly_fraction() && arg.num == Poly::var() && arg.den == Poly::one()) {
                    return Err(ParseError::new("fact expects the variable k", arg_at));
                }
                let mut v = Value::from_poly(Poly::one());
                v.fact_exp = 1;
                Ok(v)
            }
            Some(Tok::Rf) => {
                self.expect(Tok::LParen, "`(` after rf")?;
                let base_at = self.here();
                let base = self.parse_expr()?;
                self.expect(Tok::Comma, "`,` between rf arguments")?;
                self.expect_var_arg("rf")?;
                self.expect(Tok::RParen, "closing `)`")?;
                let c = base
                    .as_constant()
                    .ok_or_else(|| ParseError::new("rf expects a constant base", base_at))?;
                let mut v = Value::from_poly(Poly::one());
                v.rising.push((c, 1, base_at));
                Ok(v)
            }
            Some(Tok::PowFn) => {
                self.expect(Tok::LParen, "`(` after pow")?;
                let base_at = self.here();
                let base = self.parse_expr()?;
                self.expect(Tok::Comma, "`,` between pow arguments")?;
                self.expect_var_arg("pow")?;
                self.expect(Tok::RParen, "closing `)`")?;
                let c = base
                    .as_constant()
                    .ok_or_else(|| ParseError::new("pow expects a constant base", base_at))?;
                if c.is_zero() {
                    return Err(ParseError::new("geometric base must be nonzero", base_at));
                }
                let mut v = Value::from_poly(Poly::one());
                v.z = c;
                Ok(v)
            }
            Some(_) => Err(ParseError::new("unexpected token", at)),
            None => Err(ParseError::new("unexpected end of input", self.end)),
        }
    }

    /// The trailing `k` argument of a builtin.
    fn expect_var_arg(&mut self, builtin: &str) -> Result<(), ParseError> {
        let at = self.here();
        let arg = self.parse_expr()?;
        if arg.is_poly_fraction() && arg.num == Poly::var() && arg.den == Poly::one() {
            Ok(())
        } else {
            Err(ParseError::new(format!("{builtin} expects the variable k here"), at))
        }
    }
}

/// Parse an expression into a canonical `TermSpec`.
pub fn parse_term(input: &str) -> Result<TermSpec, ParseError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ParseError::new("empty input", 0));
    }
    let mut parser = Parser { toks, pos: 0, end: input.len(), input };
    let value = parser.parse_expr()?;
    if parser.pos < parser.toks.len() {
        return Err(ParseError::new("unexpected trailing input", parser.here()));
    }
    let _ = parser.input;

    // The polynomial denominator must divide the numerator exactly: the
    // normalized shape is one polynomial times pure factors.
    let poly = match value.num.exact_div(&value.den) {
        Some(q) => q,
        None => {
            return Err(ParseError::new(
                "term does not reduce to a polynomial times hypergeometric factors",
                0,
            ))
        }
    };

    // Fold duplicate rising bases, then validate denominators before
    // handing off to the panicking constructor.
    let mut merged: Vec<(Rat, i64, usize)> = Vec::new();
    let mut fact_exp = value.fact_exp;
    for (base, exp, off) in value.rising {
        if base.is_one() {
            fact_exp += exp;
            continue;
        }
        match merged.iter_mut().find(|(b, _, _)| *b == base) {
            Some((_, e, _)) => *e += exp,
            None => merged.push((base, exp, off)),
        }
    }
    for (base, exp, off) in &merged {
        if *exp < 0 && is_nonpositive_integer(base) {
            return Err(ParseError::new(
                format!("rising factorial base {base} in a denominator reaches zero"),
                *off,
            ));
        }
    }
    Ok(TermSpec::new(
        poly,
        value.z,
        merged.into_iter().map(|(b, e, _)| (b, e)).collect(),
        fact_exp,
    ))
}
