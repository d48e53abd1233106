//! Sparse polynomials over a [`Ring`], kept sorted by the ring's term order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Exp, Monomial};
use crate::ring::Ring;

/// Terms are stored in strictly descending monomial order with nonzero
/// coefficients. All arithmetic goes through the owning [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        Self::term(ring.one_monomial(), ring.field().from_i64(c))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(Monomial::var(ring.nvars(), i), 1)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let f = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { terms: out }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn push_trailing(&mut self, ring: &Ring, m: Monomial, c: Coeff) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|(l, _)| ring.cmp(l, &m) == Ordering::Greater));
        if c != 0 {
            self.terms.push((m, c));
        }
    }

    /// `self + a * m * other`, merging two sorted term lists.
    pub fn add_scaled(&self, ring: &Ring, other: &Polynomial, a: Coeff, m: &Monomial) -> Polynomial {
        if a == 0 || other.is_zero() {
            return self.clone();
        }
        let f = ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut rhs = other.terms.iter().map(|(t, c)| (t.mul(m), f.mul(*c, a))).peekable();
        while i < self.terms.len() || rhs.peek().is_some() {
            let ord = match (self.terms.get(i), rhs.peek()) {
                (Some(l), Some(r)) => ring.cmp(&l.0, &r.0),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let (t, c) = rhs.next().unwrap();
                    let s = f.add(self.terms[i].1, c);
                    if s != 0 {
                        out.push((t, s));
                    }
                    i += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.add_scaled(ring, other, 1, &ring.one_monomial())
    }

    pub fn sub(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        self.add_scaled(ring, other, ring.field().neg(1), &ring.one_monomial())
    }

    /// Sum that refuses to mix degrees.
    pub fn add_homogeneous(&self, ring: &Ring, other: &Polynomial) -> Result<Polynomial> {
        if !self.is_homogeneous() || !other.is_homogeneous() {
            return Err(Error::Inhomogeneous("summand is not homogeneous".into()));
        }
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::DegreeMismatch(format!("{a} vs {b}")));
            }
        }
        Ok(self.add(ring, other))
    }

    pub fn neg(&self, ring: &Ring) -> Polynomial {
        let f = ring.field();
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, ring: &Ring, a: Coeff) -> Polynomial {
        self.mul_term(ring, a, &ring.one_monomial())
    }

    /// `a * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, ring: &Ring, a: Coeff, m: &Monomial) -> Polynomial {
        if a == 0 {
            return Polynomial::zero();
        }
        let f = ring.field();
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), f.mul(*c, a))).collect(),
        }
    }

    pub fn mul(&self, ring: &Ring, other: &Polynomial) -> Polynomial {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = acc.add_scaled(ring, big, *c, m);
        }
        acc
    }

    pub fn pow(&self, ring: &Ring, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(ring);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Evaluate at a point given as field elements.
    pub fn evaluate(&self, ring: &Ring, point: &[Coeff]) -> Coeff {
        let f = ring.field();
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (e, x) in m.exponents().iter().zip(point) {
                for _ in 0..*e {
                    v = f.mul(v, *x);
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Substitute polynomials for the variables.
    pub fn substitute(&self, ring: &Ring, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::term(ring.one_monomial(), *c);
            for (e, img) in m.exponents().iter().zip(images) {
                t = t.mul(ring, &img.pow(ring, *e as u32));
            }
            acc = acc.add(ring, &t);
        }
        acc
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        parse_polynomial(ring, text)
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }
}

/// Canonical printing: descending terms, coefficients in the symmetric range
/// `(-p/2, p/2]`, so the output parses back to the same polynomial.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a Ring,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let c = self.ring.field().to_symmetric(*c);
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = c.unsigned_abs();
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let f = ring.field();
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{text}`")));
        }
        let mut coeff = f.from_i64(sign);
        let mut exps = vec![0 as Exp; ring.nvars()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{term}`")));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                let n: u64 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer `{factor}`")))?;
                coeff = f.mul(coeff, (n % f.characteristic() as u64) as Coeff);
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: Exp = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let i = ring
                .var_index(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            exps[i] += e;
        }
        terms.push((Monomial::from_exponents(&exps), coeff));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
