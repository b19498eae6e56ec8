use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::field::{Field, PrimeField, Rationals};
use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// The graded polynomial ring `k[x0, ..., x_{num_vars-1}]`, the homogeneous
/// coordinate ring of `P^{num_vars-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<K: Field> {
    field: K,
    num_vars: usize,
}

impl<K: Field> Ring<K> {
    pub fn new(field: K, num_vars: usize) -> Result<Self> {
        if num_vars < 2 {
            return Err(Error::InvalidRing(format!("need at least 2 variables, got {num_vars}")));
        }
        if num_vars > MAX_VARS {
            return Err(Error::InvalidRing(format!("at most {MAX_VARS} variables supported, got {num_vars}")));
        }
        Ok(Ring { field, num_vars })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Dimension `n` of the projective space `P^n` this ring coordinatizes.
    pub fn dim(&self) -> usize {
        self.num_vars - 1
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn var(&self, i: usize) -> Polynomial<K> {
        assert!(i < self.num_vars);
        Polynomial::term(Monomial::var(i), self.field.one())
    }

    pub fn constant(&self, c: i64) -> Polynomial<K> {
        Polynomial::constant(&self.field, self.field.from_i64(c))
    }

    fn check(&self, f: &Polynomial<K>) -> Result<()> {
        if f.terms.iter().any(|(m, _)| m.support_len() > self.num_vars) {
            return Err(Error::RingMismatch(format!(
                "polynomial uses variables outside x0..x{}",
                self.num_vars - 1
            )));
        }
        Ok(())
    }

    /// Checked arithmetic: both operands must live in this ring.
    pub fn poly_arith(&self, op: PolyOp, f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
        self.check(f)?;
        self.check(g)?;
        Ok(match op {
            PolyOp::Add => f.add(g, &self.field),
            PolyOp::Sub => f.sub(g, &self.field),
            PolyOp::Mul => f.mul(g, &self.field),
        })
    }

    /// Parse a polynomial written as e.g. `3*x0^2*x1 - x2^3`.
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial<K>> {
        let terms = parse_terms(text, self.num_vars)?
            .into_iter()
            .map(|(coeff, exps)| (Monomial::from_exponents(&exps), self.field.from_bigint(&coeff)))
            .collect();
        Ok(Polynomial::from_terms(&self.field, terms))
    }

    /// Render with the same grammar [`Ring::parse_poly`] accepts. Coefficients
    /// that are not integers are printed as fractions.
    pub fn render(&self, f: &Polynomial<K>) -> String {
        f.render(&self.field)
    }
}

impl Ring<PrimeField> {
    pub fn prime(p: u64, num_vars: usize) -> Result<Self> {
        Ring::new(PrimeField::new(p)?, num_vars)
    }
}

impl Ring<Rationals> {
    pub fn rationals(num_vars: usize) -> Result<Self> {
        Ring::new(Rationals, num_vars)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial stored as terms sorted by strictly decreasing grevlex monomial.
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<K: Field> {
    terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> Default for Polynomial<K> {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn term(m: Monomial, c: K::Elem) -> Self {
        Polynomial { terms: vec![(m, c)] }
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        if field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial::term(Monomial::one(), c)
        }
    }

    /// Build from arbitrary terms; zero coefficients are dropped and equal monomials merged.
    pub fn from_terms(field: &K, mut terms: Vec<(Monomial, K::Elem)>) -> Self {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| field.is_zero(c)) {
                out.pop();
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<&(Monomial, K::Elem)> {
        self.terms.first()
    }

    /// Degree of a nonzero homogeneous polynomial (degree of the leading term otherwise).
    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// The coefficient of the degree-0 term, if nonzero.
    pub fn constant_coeff(&self) -> Option<&K::Elem> {
        self.terms.last().filter(|(m, _)| m.degree() == 0).map(|(_, c)| c)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&K::Elem> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn add(&self, other: &Self, field: &K) -> Self {
        self.combine(other, field, false)
    }

    pub fn sub(&self, other: &Self, field: &K) -> Self {
        self.combine(other, field, true)
    }

    fn combine(&self, other: &Self, field: &K, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let take_b = |c: &K::Elem| if negate { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &K) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &K::Elem, field: &K) -> Self {
        if field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect() }
    }

    /// Multiply by the term `c * m`. Monomial multiplication preserves the order.
    pub fn mul_term(&self, m: &Monomial, c: &K::Elem, field: &K) -> Self {
        if field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect() }
    }

    pub fn mul(&self, other: &Self, field: &K) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), field.mul(c1, c2)));
            }
        }
        Polynomial::from_terms(field, terms)
    }

    pub fn pow(&self, mut e: u32, field: &K) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(field, field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, field);
            }
        }
        acc
    }

    /// Substitute `x_i -> x_i^q` for every variable.
    pub fn inflate(&self, q: u32) -> Self {
        // inflation is strictly monotone for grevlex, so the term order is kept
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.inflate(q), c.clone())).collect() }
    }

    pub fn eval(&self, point: &[K::Elem], field: &K) -> K::Elem {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = field.mul(&v, &field.pow(x, e as u64));
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Least common multiple of the coefficient denominators (1 over `F_p`).
    pub fn denominator_lcm(&self, field: &K) -> BigInt {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = num_integer::lcm(l, field.denominator(c));
        }
        l
    }

    pub fn render(&self, field: &K) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match field.to_integer(c) {
                Some(i) if i.is_negative() => (true, (-i).to_string()),
                Some(i) => (false, i.to_string()),
                None => {
                    let r = field.render(c);
                    match r.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, r),
                    }
                }
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = m.degree() == 0;
            if is_const {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{mag}*{m}"));
            }
        }
        s
    }
}

/// Wrapper implementing `Display` for a polynomial together with its field.
pub struct DisplayPoly<'a, K: Field>(pub &'a Polynomial<K>, pub &'a K);

impl<K: Field> fmt::Display for DisplayPoly<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

type ParsedTerm = (BigInt, Vec<u32>);

fn parse_terms(text: &str, num_vars: usize) -> Result<Vec<ParsedTerm>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |pos: usize, msg: &str| Error::PolySyntax(format!("{msg} at offset {pos} in `{text}`"));
    if chars.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut pos = 0;
    let mut out = Vec::new();
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    while pos < chars.len() {
        let mut sign = BigInt::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !out.is_empty() {
            return Err(err(pos, "expected `+` or `-`"));
        }
        let mut coeff = sign;
        let mut exps = vec![0u32; num_vars];
        let mut saw_factor = false;
        if let Some(c) = read_int(&mut pos) {
            coeff *= c;
            saw_factor = true;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                if pos >= chars.len() || chars[pos] != 'x' {
                    return Err(err(pos, "expected variable after `*`"));
                }
            } else if pos < chars.len() && chars[pos] == 'x' {
                return Err(err(pos, "expected `*` between factors"));
            }
        }
        while pos < chars.len() && chars[pos] == 'x' {
            pos += 1;
            let idx = read_int(&mut pos).ok_or_else(|| err(pos, "expected variable index"))?;
            let idx: usize = idx.try_into().map_err(|_| err(pos, "variable index too large"))?;
            if idx >= num_vars {
                return Err(err(pos, &format!("variable x{idx} outside x0..x{}", num_vars - 1)));
            }
            let mut e = 1u32;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let v = read_int(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                e = v.try_into().map_err(|_| err(pos, "exponent too large"))?;
            }
            exps[idx] += e;
            saw_factor = true;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                if pos >= chars.len() || chars[pos] != 'x' {
                    return Err(err(pos, "expected variable after `*`"));
                }
            } else if pos < chars.len() && chars[pos] == 'x' {
                return Err(err(pos, "expected `*` between factors"));
            }
        }
        if !saw_factor {
            return Err(err(pos, "expected a term"));
        }
        out.push((coeff, exps));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_identity_char_two() {
        let r = Ring::prime(2, 2).unwrap();
        let f = r.parse_poly("x0 + x1").unwrap();
        let sq = r.poly_arith(PolyOp::Mul, &f, &f).unwrap();
        assert_eq!(sq, r.parse_poly("x0^2 + x1^2").unwrap());
    }

    #[test]
    fn difference_of_squares_over_q() {
        let r = Ring::rationals(2).unwrap();
        let f = r.parse_poly("x0 + x1").unwrap();
        let g = r.parse_poly("x0 - x1").unwrap();
        let prod = r.poly_arith(PolyOp::Mul, &f, &g).unwrap();
        assert_eq!(r.render(&prod), "x0^2 - x1^2");
    }

    #[test]
    fn cancellation_gives_empty_term_map() {
        let r = Ring::rationals(3).unwrap();
        let x0 = r.var(0);
        let s = r.poly_arith(PolyOp::Add, &x0, &x0.neg(r.field())).unwrap();
        assert!(s.is_zero());
        assert!(s.terms().is_empty());
    }

    #[test]
    fn ring_mismatch() {
        let big = Ring::rationals(4).unwrap();
        let small = Ring::rationals(2).unwrap();
        let f = big.var(3);
        assert!(matches!(small.poly_arith(PolyOp::Add, &f, &f), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn parse_and_render_round_trip() {
        let r = Ring::rationals(3).unwrap();
        let f = r.parse_poly(" 3*x0^2*x1 - x2^3 ").unwrap();
        assert_eq!(r.render(&f), "3*x0^2*x1 - x2^3");
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(3));
        let g = r.parse_poly("-2 + x0").unwrap();
        assert!(!g.is_homogeneous());
        assert_eq!(r.render(&g), "x0 - 2");
    }

    #[test]
    fn zero_coefficients_vanish() {
        let r = Ring::prime(7, 2).unwrap();
        assert!(r.parse_poly("0").unwrap().is_zero());
        assert!(r.parse_poly("7*x0").unwrap().is_zero());
        assert!(r.parse_poly("x1 - x1").unwrap().is_zero());
        assert_eq!(r.parse_poly("8*x0 + 0*x1").unwrap(), r.var(0));
    }

    #[test]
    fn parse_errors() {
        let r = Ring::rationals(2).unwrap();
        assert!(r.parse_poly("x2").is_err());
        assert!(r.parse_poly("").is_err());
        assert!(r.parse_poly("x0 x1").is_err());
        assert!(r.parse_poly("3*").is_err());
        assert!(r.parse_poly("x0^").is_err());
    }

    #[test]
    fn inflate_and_eval() {
        let r = Ring::prime(5, 2).unwrap();
        let f = r.parse_poly("x0 + 2*x1").unwrap();
        let g = f.inflate(5);
        assert_eq!(g, f.pow(5, r.field()));
        assert_eq!(f.eval(&[1, 1], r.field()), 3);
    }
}
