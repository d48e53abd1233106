//! Elements of graded free modules `⊕ R(-d_i)`, stored densely by position.

use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeVector(pub Vec<Polynomial>);

impl FreeVector {
    pub fn zero(n: usize) -> Self {
        FreeVector(vec![Polynomial::zero(); n])
    }

    pub fn unit(ring: &Ring, n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Polynomial::one(ring);
        v
    }

    pub fn from_polys(polys: Vec<Polynomial>) -> Self {
        FreeVector(polys)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> &Polynomial {
        &self.0[i]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Polynomial::is_zero)
    }

    pub fn nterms(&self) -> usize {
        self.0.iter().map(Polynomial::len).sum()
    }

    /// `self + a * m * other`.
    pub fn add_scaled(&self, ring: &Ring, other: &FreeVector, a: Coeff, m: &Monomial) -> FreeVector {
        debug_assert_eq!(self.len(), other.len());
        FreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(p, q)| p.add_scaled(ring, q, a, m))
                .collect(),
        )
    }

    pub fn add(&self, ring: &Ring, other: &FreeVector) -> FreeVector {
        self.add_scaled(ring, other, 1, &ring.one_monomial())
    }

    pub fn sub(&self, ring: &Ring, other: &FreeVector) -> FreeVector {
        self.add_scaled(ring, other, ring.field().neg(1), &ring.one_monomial())
    }

    pub fn neg(&self, ring: &Ring) -> FreeVector {
        FreeVector(self.0.iter().map(|p| p.neg(ring)).collect())
    }

    pub fn mul_term(&self, ring: &Ring, a: Coeff, m: &Monomial) -> FreeVector {
        FreeVector(self.0.iter().map(|p| p.mul_term(ring, a, m)).collect())
    }

    pub fn mul_poly(&self, ring: &Ring, f: &Polynomial) -> FreeVector {
        FreeVector(self.0.iter().map(|p| p.mul(ring, f)).collect())
    }

    /// `self += f * other`
    pub fn add_poly_multiple(&mut self, ring: &Ring, f: &Polynomial, other: &FreeVector) {
        for (m, c) in f.terms() {
            *self = self.add_scaled(ring, other, *c, m);
        }
    }

    /// Weighted degree `deg(mon) + degrees[pos]` of the first term found.
    pub fn degree(&self, degrees: &[i32]) -> Option<i32> {
        self.0
            .iter()
            .zip(degrees)
            .find_map(|(p, d)| p.leading().map(|(m, _)| m.degree() + d))
    }

    pub fn is_homogeneous(&self, degrees: &[i32]) -> bool {
        let Some(d) = self.degree(degrees) else {
            return true;
        };
        self.0
            .iter()
            .zip(degrees)
            .all(|(p, e)| p.terms().iter().all(|(m, _)| m.degree() + e == d))
    }

    /// Concatenate position blocks.
    pub fn concat(parts: &[&FreeVector]) -> FreeVector {
        FreeVector(parts.iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> FreeVector {
        FreeVector(self.0[range].to_vec())
    }

    pub fn extend_zeros(&mut self, n: usize) {
        self.0.resize(n, Polynomial::zero());
    }
}
