//! Multivariate polynomials over cyclotomic coefficients, Buchberger's
//! algorithm, normal forms, staircase bases, and Artinian quotients.
//!
//! Variables are listed in ascending significance: the LAST variable in the
//! list is the largest in the monomial order. The default order everywhere
//! is graded reverse lexicographic with h < e_1 < ... < e_d, which keeps the
//! h-power monomials in the staircase.
//!
//! Coefficients are [`CycloNumber`]s; rationals are the order-1 case, so a
//! single code path serves both rational and cyclotomic ideals. Every
//! division is exact.
//!
//! The Gröbner engine is plain Buchberger with the coprime-leading-term and
//! chain criteria; the ideals here have at most five variables and low
//! degree, so simplicity wins. Every computed basis is certified on the
//! spot: all S-polynomials of the output reduce to zero and every input
//! generator reduces to zero.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{CycloNumber, Rational};

#[derive(Debug, Error)]
pub enum GbError {
    #[error("quotient is not Artinian: variable {0} has no pure power among the leading terms")]
    NonArtinian(String),
    #[error("variable sets do not match: {0}")]
    VarMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exponent vector; fixed length = number of variables.
pub type Exponents = Vec<u32>;

/// Admissible graded monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default).
    GrevLex,
    /// Graded lexicographic.
    GrLex,
}

impl MonomialOrder {
    /// Compare two exponent vectors. Greater = later in the order.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        match self {
            // a > b iff the first differing exponent, scanning from the
            // smallest variable, is smaller in a
            MonomialOrder::GrevLex => {
                for k in 0..a.len() {
                    match a[k].cmp(&b[k]) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            // a > b iff the first differing exponent, scanning from the
            // largest variable, is larger in a
            MonomialOrder::GrLex => {
                for k in (0..a.len()).rev() {
                    match a[k].cmp(&b[k]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

fn exp_divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn exp_sub(m: &[u32], d: &[u32]) -> Exponents {
    m.iter().zip(d).map(|(a, b)| a - b).collect()
}

fn exp_add(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// A multivariate polynomial with cyclotomic coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, CycloNumber>,
}

impl Polynomial {
    pub fn zero(vars: &[String]) -> Self {
        Polynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: CycloNumber) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, CycloNumber::one())
    }

    pub fn variable(vars: &[String], index: usize) -> Self {
        let mut e = vec![0u32; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, CycloNumber::one())
    }

    pub fn monomial(vars: &[String], exps: Exponents, c: CycloNumber) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone());
            match entry {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let v = &*o.get() + c;
                    if v.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = v;
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Multiply by the monomial c * x^exps.
    pub fn mul_term(&self, exps: &[u32], c: &CycloNumber) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, v) in &self.terms {
            out.terms.insert(exp_add(e, exps), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = exp_add(e1, e2);
                let c = c1 * c2;
                let cur = out.terms.remove(&e);
                let v = match cur {
                    Some(x) => &x + &c,
                    None => c,
                };
                if v.is_zero() {
                    out.terms.remove(&e);
                } else {
                    out.terms.insert(e, v);
                }
            }
        }
        out
    }

    /// Leading (exponents, coefficient) under the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponents, &CycloNumber)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Render a monomial like `h^2*e1`, or `1` for the empty product.
    pub fn monomial_label(vars: &[String], exps: &[u32]) -> String {
        let factors: Vec<String> = vars
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // display descending in grevlex so leading terms come first
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let label = Self::monomial_label(&self.vars, e);
            let cs = c.to_string();
            if idx > 0 {
                write!(f, " + ")?;
            }
            if label == "1" {
                write!(f, "({cs})")?;
            } else if cs == "1" {
                write!(f, "{label}")?;
            } else {
                write!(f, "({cs})*{label}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

/// Parse a cyclotomic scalar literal: integers, rationals `p/q`, `i`,
/// `sqrt2`, `zeta(N,k)`, combined with `+ - * / ^` and parentheses.
pub fn parse_scalar(input: &str) -> Result<CycloNumber, GbError> {
    let p = parse_polynomial(input, &[])?;
    Ok(p.terms
        .get(&vec![])
        .cloned()
        .unwrap_or_else(CycloNumber::zero))
}

/// Parse a polynomial in the given variables from the text format used by
/// the CLI and presentation files: sums of `coeff*var^k*...` terms with
/// rational or cyclotomic-literal coefficients.
pub fn parse_polynomial(input: &str, vars: &[String]) -> Result<Polynomial, GbError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(GbError::Parse(format!(
            "unexpected trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>, GbError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                out.push(Token::Plus);
                k += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Token::Minus);
                k += 1;
            }
            '*' => {
                out.push(Token::Star);
                k += 1;
            }
            '/' => {
                out.push(Token::Slash);
                k += 1;
            }
            '^' => {
                out.push(Token::Caret);
                k += 1;
            }
            '(' => {
                out.push(Token::LParen);
                k += 1;
            }
            ')' => {
                out.push(Token::RParen);
                k += 1;
            }
            ',' => {
                out.push(Token::Comma);
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let text: String = chars[start..k].iter().collect();
                out.push(Token::Num(text.parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push(Token::Ident(chars[start..k].iter().collect()));
            }
            other => {
                return Err(GbError::Parse(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Token) -> Result<(), GbError> {
        match self.next() {
            Some(ref got) if got == t => Ok(()),
            got => Err(GbError::Parse(format!("expected {t:?}, got {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, GbError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negate = true;
        } else if self.peek() == Some(&Token::Plus) {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, GbError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    let c = f
                        .terms
                        .iter()
                        .find(|(e, _)| e.iter().all(|&x| x == 0))
                        .map(|(_, c)| c.clone());
                    match (f.num_terms(), c) {
                        (1, Some(c)) if !c.is_zero() => {
                            let inv = c.inv().map_err(|e| GbError::Parse(e.to_string()))?;
                            acc = acc.scale(&inv);
                        }
                        _ => {
                            return Err(GbError::Parse(
                                "division is only defined by nonzero constants".into(),
                            ));
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, GbError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Num(n)) => {
                    let exp = u32::try_from(n)
                        .map_err(|_| GbError::Parse("exponent out of range".into()))?;
                    let mut acc = Polynomial::one(&base.vars);
                    for _ in 0..exp {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                got => Err(GbError::Parse(format!("expected exponent, got {got:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, GbError> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Polynomial::constant(
                self.vars,
                CycloNumber::from_rational(Rational::from(n)),
            )),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(&Token::RParen)?;
                Ok(e)
            }
            Some(Token::Minus) => Ok(self.atom()?.neg()),
            Some(Token::Ident(name)) => {
                if let Some(idx) = self.vars.iter().position(|v| *v == name) {
                    return Ok(Polynomial::variable(self.vars, idx));
                }
                match name.as_str() {
                    "i" => Ok(Polynomial::constant(self.vars, CycloNumber::i())),
                    "sqrt2" => Ok(Polynomial::constant(self.vars, CycloNumber::sqrt2())),
                    "zeta" => {
                        self.expect(&Token::LParen)?;
                        let order = match self.next() {
                            Some(Token::Num(n)) => u64::try_from(n)
                                .map_err(|_| GbError::Parse("zeta order out of range".into()))?,
                            got => {
                                return Err(GbError::Parse(format!(
                                    "expected zeta order, got {got:?}"
                                )))
                            }
                        };
                        self.expect(&Token::Comma)?;
                        let mut sign = 1i64;
                        if self.peek() == Some(&Token::Minus) {
                            self.next();
                            sign = -1;
                        }
                        let k = match self.next() {
                            Some(Token::Num(n)) => i64::try_from(n)
                                .map_err(|_| GbError::Parse("zeta power out of range".into()))?,
                            got => {
                                return Err(GbError::Parse(format!(
                                    "expected zeta power, got {got:?}"
                                )))
                            }
                        };
                        self.expect(&Token::RParen)?;
                        if order == 0 {
                            return Err(GbError::Parse("zeta order must be positive".into()));
                        }
                        Ok(Polynomial::constant(
                            self.vars,
                            CycloNumber::root_of_unity(sign * k, order),
                        ))
                    }
                    _ => Err(GbError::Parse(format!("unknown identifier {name:?}"))),
                }
            }
            got => Err(GbError::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

// ---------------------------------------------------------------------------
// division and Buchberger
// ---------------------------------------------------------------------------

/// The unique remainder of `p` on division by `basis`: no remainder monomial
/// is divisible by any leading term. For a Gröbner basis this is the normal
/// form, supported on the staircase.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let mut work = p.clone();
    let mut remainder = Polynomial::zero(p.vars());
    'outer: while !work.is_zero() {
        let (lt_exp, lt_coeff) = {
            let (e, c) = work.leading_term(order).unwrap();
            (e.clone(), c.clone())
        };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (ge, gc) = g.leading_term(order).unwrap();
            if exp_divides(ge, &lt_exp) {
                let factor = &lt_coeff / gc;
                let shift = exp_sub(&lt_exp, ge);
                work = work.sub(&g.mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        // move the leading term to the remainder
        remainder = remainder.add(&Polynomial::monomial(
            p.vars(),
            lt_exp.clone(),
            lt_coeff.clone(),
        ));
        work.terms.remove(&lt_exp);
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fe, fc) = f.leading_term(order).unwrap();
    let (ge, gc) = g.leading_term(order).unwrap();
    let l = exp_lcm(fe, ge);
    let a = f.mul_term(&exp_sub(&l, fe), &fc.inv().expect("nonzero leading coefficient"));
    let b = g.mul_term(&exp_sub(&l, ge), &gc.inv().expect("nonzero leading coefficient"));
    a.sub(&b)
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
///
/// Zero generators are dropped; the zero ideal yields an empty basis. The
/// result is minimal, inter-reduced, monic, and sorted ascending by leading
/// monomial. Before returning, the basis is certified: every S-polynomial
/// of the output and every input generator reduces to zero.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let vars = match gens.first() {
        Some(g) => g.vars().to_vec(),
        None => return Vec::new(),
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        assert_eq!(g.vars(), vars.as_slice(), "generators over different variables");
        if !g.is_zero() {
            let lc = g.leading_term(order).unwrap().1.clone();
            basis.push(g.scale(&lc.inv().unwrap()));
        }
    }
    if basis.is_empty() {
        return Vec::new();
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.insert((i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first
        let &(i, j) = pairs
            .iter()
            .min_by_key(|(i, j)| {
                let li = basis[*i].leading_term(order).unwrap().0;
                let lj = basis[*j].leading_term(order).unwrap().0;
                exp_lcm(li, lj).iter().sum::<u32>()
            })
            .unwrap();
        pairs.remove(&(i, j));
        done.insert((i, j));

        let li = basis[i].leading_term(order).unwrap().0.clone();
        let lj = basis[j].leading_term(order).unwrap().0.clone();
        let l = exp_lcm(&li, &lj);
        // coprime criterion
        if exp_add(&li, &lj) == l {
            continue;
        }
        // chain criterion: some k with LT_k | lcm and both pairs handled
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].leading_term(order).unwrap().0;
            let (a, b) = (k.min(i), k.max(i));
            let (c, d) = (k.min(j), k.max(j));
            exp_divides(lk, &l) && done.contains(&(a, b)) && done.contains(&(c, d))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let lc = r.leading_term(order).unwrap().1.clone();
            let r = r.scale(&lc.inv().unwrap());
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pairs.insert((k, new));
            }
        }
    }

    // minimize: drop elements whose leading term another leading term divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let li = basis[i].leading_term(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = basis[j].leading_term(order).unwrap().0;
            if exp_divides(&li, lj) && (li != *lj || i < j) {
                keep[j] = false;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();
    // inter-reduce tails
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        let lc = r.leading_term(order).unwrap().1.clone();
        reduced.push(r.scale(&lc.inv().unwrap()));
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });

    // certification
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            let s = s_polynomial(&reduced[i], &reduced[j], order);
            assert!(
                normal_form(&s, &reduced, order).is_zero(),
                "Gröbner certification failed: S-polynomial ({i},{j}) does not reduce to zero"
            );
        }
    }
    for g in gens {
        assert!(
            normal_form(g, &reduced, order).is_zero(),
            "Gröbner certification failed: input generator {g} does not reduce to zero"
        );
    }
    reduced
}

// ---------------------------------------------------------------------------
// quotient presentations
// ---------------------------------------------------------------------------

/// A polynomial ideal together with its reduced Gröbner basis and, when the
/// quotient is Artinian, the staircase monomial basis of the quotient.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    vars: Vec<String>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    groebner: Vec<Polynomial>,
    staircase: Option<Vec<Exponents>>,
}

impl QuotientPresentation {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Self {
        assert!(!generators.is_empty(), "empty generator list");
        let vars = generators[0].vars().to_vec();
        let groebner = groebner_basis(&generators, order);
        let staircase = compute_staircase(&vars, &groebner, order);
        QuotientPresentation {
            vars,
            generators,
            order,
            groebner,
            staircase,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn groebner(&self) -> &[Polynomial] {
        &self.groebner
    }

    /// The staircase (monomials not divisible by any leading term), sorted
    /// ascending in the monomial order; an error when infinite.
    pub fn staircase(&self) -> Result<&[Exponents], GbError> {
        match &self.staircase {
            Some(s) => Ok(s),
            None => {
                let missing = self.first_unbounded_var().unwrap_or_default();
                Err(GbError::NonArtinian(missing))
            }
        }
    }

    fn first_unbounded_var(&self) -> Option<String> {
        let lts: Vec<&Exponents> = self
            .groebner
            .iter()
            .map(|g| g.leading_term(self.order).unwrap().0)
            .collect();
        (0..self.vars.len())
            .find(|&v| {
                !lts.iter()
                    .any(|e| e.iter().enumerate().all(|(k, &x)| k == v || x == 0))
            })
            .map(|v| self.vars[v].clone())
    }

    /// Normal form with respect to the stored Gröbner basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.groebner, self.order)
    }

    /// True when `p` lies in the ideal.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

fn compute_staircase(
    vars: &[String],
    groebner: &[Polynomial],
    order: MonomialOrder,
) -> Option<Vec<Exponents>> {
    if groebner.is_empty() {
        return None; // zero ideal: infinite staircase (no variables is excluded upstream)
    }
    let lts: Vec<Exponents> = groebner
        .iter()
        .map(|g| g.leading_term(order).unwrap().0.clone())
        .collect();
    let n = vars.len();
    // Artinian iff every variable has a pure power among the leading terms
    let mut bounds = Vec::with_capacity(n);
    for v in 0..n {
        let bound = lts
            .iter()
            .filter(|e| e.iter().enumerate().all(|(k, &x)| k == v || x == 0))
            .map(|e| e[v])
            .min()?;
        bounds.push(bound);
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    loop {
        if !lts.iter().any(|lt| exp_divides(lt, &current)) {
            out.push(current.clone());
        }
        // odometer over the box prod [0, bounds_v)
        let mut v = 0;
        loop {
            if v == n {
                out.sort_by(|a, b| order.cmp(a, b));
                return Some(out);
            }
            current[v] += 1;
            if current[v] < bounds[v].max(1) {
                break;
            }
            current[v] = 0;
            v += 1;
        }
    }
}

/// Structure constants of an Artinian graded quotient, as a
/// [`GradedAlgebra`](crate::algebra::GradedAlgebra) without a calibrated
/// degree functional.
pub fn structure_constants(
    q: &QuotientPresentation,
) -> Result<crate::algebra::GradedAlgebra, GbError> {
    crate::algebra::GradedAlgebra::from_presentation(q.clone())
}
