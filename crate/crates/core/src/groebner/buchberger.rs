//! Buchberger's algorithm for submodules of free modules.
//!
//! Pairs are processed by the normal strategy (lowest lcm degree first, then
//! by index) and pruned with the chain criterion only. When tracking is on,
//! every basis element carries a cofactor vector expressing it in terms of
//! the inputs, which is what lifting and syzygy computations read off.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::{Ring, RingRef};

use super::order::TermOrder;
use super::vector::FreeVector;

/// Full reduction of `v` against monic `basis`; `on_step(k, c, m)` is told
/// about every subtraction `v -= c·m·basis[k]`.
pub(crate) fn reduce_against(
    ring: &Ring,
    order: &TermOrder,
    basis: &[FreeVector],
    leads: &[(usize, Monomial)],
    skip: Option<usize>,
    v: FreeVector,
    mut on_step: impl FnMut(usize, Coeff, &Monomial),
) -> FreeVector {
    let mut rest = v;
    let mut rem = FreeVector::zero(rest.len());
    loop {
        let Some((pos, mon, c)) = order.leading(ring, &rest).map(|(p, m, c)| (p, m.clone(), c)) else {
            break;
        };
        let divisor = leads
            .iter()
            .enumerate()
            .find(|(k, (p, lm))| Some(*k) != skip && *p == pos && lm.divides(&mon));
        match divisor {
            Some((k, (_, lm))) => {
                let q = lm.quotient_of(&mon).expect("divides");
                rest = rest.add_scaled(ring, &basis[k], ring.field().neg(c), &q);
                on_step(k, c, &q);
            }
            None => {
                let (m, c) = rest.0[pos].pop_leading().expect("leading term");
                rem.0[pos].push_trailing(ring, m, c);
            }
        }
    }
    rem
}

fn cof_add_scaled(ring: &Ring, a: &FreeVector, b: &FreeVector, c: Coeff, m: &Monomial) -> FreeVector {
    let n = a.len().max(b.len());
    let mut a = a.clone();
    a.extend_zeros(n);
    if b.len() == n {
        a.add_scaled(ring, b, c, m)
    } else {
        let mut b = b.clone();
        b.extend_zeros(n);
        a.add_scaled(ring, &b, c, m)
    }
}

/// Incremental Gröbner basis computation. Inputs can be added between
/// partial completions; with homogeneous input, completing to degree `d`
/// makes membership of degree-`d` elements decidable.
pub struct GbBuilder {
    ring: RingRef,
    degrees: Vec<i32>,
    order: TermOrder,
    graded: bool,
    track: bool,
    ninputs: usize,
    basis: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
    cofs: Vec<FreeVector>,
    pairs: BTreeSet<(i32, usize, usize)>,
}

impl GbBuilder {
    pub fn new(ring: RingRef, degrees: Vec<i32>, order: TermOrder, graded: bool, track: bool) -> Self {
        GbBuilder {
            ring,
            degrees,
            order,
            graded,
            track,
            ninputs: 0,
            basis: Vec::new(),
            leads: Vec::new(),
            cofs: Vec::new(),
            pairs: BTreeSet::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    fn pair_degree(&self, i: usize, j: usize) -> i32 {
        let (p, a) = &self.leads[i];
        let (_, b) = &self.leads[j];
        a.lcm(b).degree() + self.degrees[*p]
    }

    /// Adds an input; returns `true` if it was not already in the span
    /// (as far as the basis is complete in its degree).
    pub fn add_input(&mut self, v: FreeVector) -> bool {
        assert_eq!(v.len(), self.rank());
        let idx = self.ninputs;
        self.ninputs += 1;
        if self.graded {
            if let Some(d) = v.degree(&self.degrees) {
                self.complete(Some(d));
            }
        }
        let cof = if self.track {
            FreeVector::unit(&self.ring, idx + 1, idx)
        } else {
            FreeVector::default()
        };
        let (r, cof) = self.reduce_tracked(v, cof);
        if r.is_zero() {
            false
        } else {
            self.insert(r, cof);
            true
        }
    }

    /// Process every pending pair of degree at most `bound` (all if `None`).
    pub fn complete(&mut self, bound: Option<i32>) {
        while let Some(&(d, i, j)) = self.pairs.iter().next() {
            if bound.is_some_and(|b| d > b) {
                break;
            }
            self.pairs.remove(&(d, i, j));
            self.process_pair(i, j);
        }
    }

    fn process_pair(&mut self, i: usize, j: usize) {
        let ring = self.ring.clone();
        let lcm = self.leads[i].1.lcm(&self.leads[j].1);
        let qi = self.leads[i].1.quotient_of(&lcm).expect("lcm");
        let qj = self.leads[j].1.quotient_of(&lcm).expect("lcm");
        let minus_one = ring.field().neg(1);
        let s = self.basis[i]
            .mul_term(&ring, 1, &qi)
            .add_scaled(&ring, &self.basis[j], minus_one, &qj);
        let cof = if self.track {
            cof_add_scaled(&ring, &self.cofs[i].mul_term(&ring, 1, &qi), &self.cofs[j], minus_one, &qj)
        } else {
            FreeVector::default()
        };
        let (r, cof) = self.reduce_tracked(s, cof);
        if !r.is_zero() {
            self.insert(r, cof);
        }
    }

    fn reduce_tracked(&self, v: FreeVector, cof: FreeVector) -> (FreeVector, FreeVector) {
        let ring = &self.ring;
        if !self.track {
            let r = reduce_against(ring, &self.order, &self.basis, &self.leads, None, v, |_, _, _| {});
            return (r, cof);
        }
        let mut cof = cof;
        let cofs = &self.cofs;
        let r = reduce_against(ring, &self.order, &self.basis, &self.leads, None, v, |k, c, m| {
            cof = cof_add_scaled(ring, &cof, &cofs[k], ring.field().neg(c), m);
        });
        (r, cof)
    }

    fn insert(&mut self, v: FreeVector, cof: FreeVector) {
        let ring = self.ring.clone();
        let (pos, mon, lc) = {
            let (p, m, c) = self.order.leading(&ring, &v).expect("nonzero");
            (p, m.clone(), c)
        };
        let inv = ring.field().inv(lc);
        let one = ring.one_monomial();
        let v = v.mul_term(&ring, inv, &one);
        let cof = if self.track { cof.mul_term(&ring, inv, &one) } else { cof };
        let new = self.basis.len();

        // chain criterion on pending pairs
        let leads = &self.leads;
        self.pairs.retain(|&(_, a, b)| {
            let (pa, la) = &leads[a];
            if *pa != pos {
                return true;
            }
            let lab = la.lcm(&leads[b].1);
            let drop = mon.divides(&lab)
                && la.lcm(&mon) != lab
                && leads[b].1.lcm(&mon) != lab;
            !drop
        });

        self.basis.push(v);
        self.leads.push((pos, mon));
        self.cofs.push(cof);
        for i in 0..new {
            if self.leads[i].0 == pos {
                let d = self.pair_degree(i, new);
                self.pairs.insert((d, i, new));
            }
        }
    }

    pub fn reduce(&self, v: FreeVector) -> FreeVector {
        reduce_against(&self.ring, &self.order, &self.basis, &self.leads, None, v, |_, _, _| {})
    }

    /// Completes, then interreduces into a reduced Gröbner basis.
    pub fn finish(mut self) -> GroebnerBasis {
        self.complete(None);
        let ring = self.ring.clone();
        let n = self.basis.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&k| {
                !(0..n).any(|j| {
                    j != k
                        && self.leads[j].0 == self.leads[k].0
                        && self.leads[j].1.divides(&self.leads[k].1)
                        && (self.leads[j].1 != self.leads[k].1 || j < k)
                })
            })
            .collect();
        let mut elements: Vec<FreeVector> = keep.iter().map(|&k| self.basis[k].clone()).collect();
        let leads: Vec<(usize, Monomial)> = keep.iter().map(|&k| self.leads[k].clone()).collect();
        let mut cofs: Vec<FreeVector> = keep.iter().map(|&k| self.cofs[k].clone()).collect();
        for k in 0..elements.len() {
            let (pos, mon) = &leads[k];
            let mut tail = elements[k].clone();
            let head = tail.0[*pos].pop_leading().expect("lead");
            debug_assert_eq!(&head.0, mon);
            let mut cof = cofs[k].clone();
            let others_cofs = &cofs;
            let r = reduce_against(&ring, &self.order, &elements, &leads, Some(k), tail, |j, c, m| {
                if self.track {
                    cof = cof_add_scaled(&ring, &cof, &others_cofs[j], ring.field().neg(c), m);
                }
            });
            let mut e = r;
            let mut p = crate::poly::Polynomial::term(head.0, head.1);
            p = p.add(&ring, &e.0[*pos]);
            e.0[*pos] = p;
            elements[k] = e;
            cofs[k] = cof;
        }
        let ninputs = self.ninputs;
        if self.track {
            for c in cofs.iter_mut() {
                c.extend_zeros(ninputs);
            }
        }
        GroebnerBasis {
            ring,
            degrees: self.degrees,
            order: self.order,
            elements,
            leads,
            cofactors: if self.track { Some(cofs) } else { None },
            ninputs,
        }
    }
}

/// Reduced Gröbner basis of a submodule of `⊕ R(-degrees[i])`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    degrees: Vec<i32>,
    order: TermOrder,
    elements: Vec<FreeVector>,
    leads: Vec<(usize, Monomial)>,
    cofactors: Option<Vec<FreeVector>>,
    ninputs: usize,
}

impl GroebnerBasis {
    /// Gröbner basis of the span of homogeneous `gens` under the ring's
    /// ambient module order, with cofactor tracking.
    pub fn compute(ring: &RingRef, degrees: &[i32], gens: &[FreeVector]) -> Result<Self> {
        Self::compute_with(ring, degrees, TermOrder::ambient(ring), gens, true)
    }

    pub fn compute_with(
        ring: &RingRef,
        degrees: &[i32],
        order: TermOrder,
        gens: &[FreeVector],
        track: bool,
    ) -> Result<Self> {
        for (j, g) in gens.iter().enumerate() {
            if g.len() != degrees.len() {
                return Err(Error::InvalidArgument(format!("generator {j} has wrong rank")));
            }
            if !g.is_homogeneous(degrees) {
                return Err(Error::Inhomogeneous(format!("generator {j}")));
            }
        }
        let mut b = GbBuilder::new(ring.clone(), degrees.to_vec(), order, true, track);
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by_key(|&j| (gens[j].degree(degrees).unwrap_or(i32::MIN), j));
        // inputs are fed in degree order but cofactors must refer to the
        // caller's indices, so track through a permutation
        let mut perm = vec![0; gens.len()];
        for (k, &j) in idx.iter().enumerate() {
            perm[k] = j;
            b.add_input(gens[j].clone());
        }
        let mut gb = b.finish();
        if let Some(cofs) = gb.cofactors.as_mut() {
            for c in cofs.iter_mut() {
                let mut out = FreeVector::zero(gens.len());
                for (k, p) in c.0.iter().enumerate() {
                    out.0[perm[k]] = p.clone();
                }
                *c = out;
            }
        }
        Ok(gb)
    }

    /// Ideal (rank-one) basis without homogeneity requirements.
    pub fn compute_ungraded(ring: &RingRef, gens: &[crate::poly::Polynomial]) -> Self {
        let mut b = GbBuilder::new(ring.clone(), vec![0], TermOrder::ambient(ring), false, true);
        for g in gens {
            b.add_input(FreeVector(vec![g.clone()]));
        }
        b.finish()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeVector] {
        &self.elements
    }

    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn input_count(&self) -> usize {
        self.ninputs
    }

    pub fn cofactors(&self) -> Option<&[FreeVector]> {
        self.cofactors.as_deref()
    }

    pub fn normal_form(&self, v: &FreeVector) -> FreeVector {
        reduce_against(&self.ring, &self.order, &self.elements, &self.leads, None, v.clone(), |_, _, _| {})
    }

    pub fn contains(&self, v: &FreeVector) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Reduction that also reports the quotient of each basis element.
    pub fn reduce_with_quotients(&self, v: &FreeVector) -> (FreeVector, Vec<crate::poly::Polynomial>) {
        let ring = &self.ring;
        let mut q = vec![crate::poly::Polynomial::zero(); self.elements.len()];
        let r = reduce_against(ring, &self.order, &self.elements, &self.leads, None, v.clone(), |k, c, m| {
            q[k] = q[k].add(ring, &crate::poly::Polynomial::term(m.clone(), c));
        });
        (r, q)
    }

    /// Coefficients `x` over the inputs with `Σ x_j input_j = v`, if `v` lies
    /// in the span. Requires tracking.
    pub fn lift(&self, v: &FreeVector) -> Option<FreeVector> {
        let cofs = self.cofactors.as_ref().expect("lift needs a tracked basis");
        let (r, q) = self.reduce_with_quotients(v);
        if !r.is_zero() {
            return None;
        }
        let mut x = FreeVector::zero(self.ninputs);
        for (qk, ck) in q.iter().zip(cofs) {
            if !qk.is_zero() {
                x.add_poly_multiple(&self.ring, qk, ck);
            }
        }
        Some(x)
    }

    /// Buchberger criterion: every S-vector of same-position leads reduces to 0.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ring = &self.ring;
        let minus_one = ring.field().neg(1);
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.leads[i].0 != self.leads[j].0 {
                    continue;
                }
                let lcm = self.leads[i].1.lcm(&self.leads[j].1);
                let qi = self.leads[i].1.quotient_of(&lcm).unwrap();
                let qj = self.leads[j].1.quotient_of(&lcm).unwrap();
                let s = self.elements[i]
                    .mul_term(ring, 1, &qi)
                    .add_scaled(ring, &self.elements[j], minus_one, &qj);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No leading term divides another and tails are fully reduced.
    pub fn is_autoreduced(&self) -> bool {
        for (k, e) in self.elements.iter().enumerate() {
            for (i, p) in e.entries().iter().enumerate() {
                for (t, _) in p.terms() {
                    let hit = self
                        .leads
                        .iter()
                        .enumerate()
                        .any(|(j, (pj, lj))| *pj == i && lj.divides(t) && !(j == k && (i, t) == (self.leads[k].0, &self.leads[k].1)));
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Gröbner basis of the submodule generated by homogeneous `gens`.
pub fn buchberger(ring: &RingRef, degrees: &[i32], gens: &[FreeVector]) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, degrees, gens)
}

/// Reduce `v` to its normal form modulo `gb`.
pub fn normal_form(v: &FreeVector, gb: &GroebnerBasis) -> FreeVector {
    gb.normal_form(v)
}
