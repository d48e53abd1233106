//! Exponent vectors.

use smallvec::SmallVec;
use std::cmp::Ordering;

pub type Exp = u16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exp; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[Exp]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    #[inline]
    pub fn exponents(&self) -> &[Exp] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// If this is a pure power `x_i^e` with `e > 0`, return `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, Exp)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                // smaller exponent in the last differing variable wins
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// All monomials in `nvars` variables of total degree `deg`, in lexicographic
/// descending order of exponent vectors.
pub fn monomials_of_degree(nvars: usize, deg: i32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if deg < 0 {
        return out;
    }
    let mut cur = vec![0 as Exp; nvars];
    fn rec(i: usize, left: i32, cur: &mut Vec<Exp>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as Exp;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as Exp;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert!(monomials_of_degree(3, -1).is_empty());
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1]);
        let b = Monomial::from_exponents(&[1, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 3]));
        assert!(!a.divides(&b));
        let q = a.quotient_of(&a.lcm(&b)).unwrap();
        assert_eq!(q, Monomial::from_exponents(&[0, 2]));
        assert_eq!(Monomial::from_exponents(&[0, 4]).pure_power(), Some((1, 4)));
        assert_eq!(a.pure_power(), None);
    }
}
