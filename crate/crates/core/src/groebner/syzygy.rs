//! Schreyer syzygies, minimal generating sets and lifting through maps.

use std::sync::Arc;

use crate::error::Result;
use crate::poly::Polynomial;
use crate::ring::{ModuleOrder, RingRef};

use super::buchberger::{GbBuilder, GroebnerBasis};
use super::matrix::FreeModuleMap;
use super::order::{SchreyerFrame, TermOrder};
use super::vector::FreeVector;

/// Indices of a minimal generating set of `span(candidates) + span(preload)`
/// modulo `span(preload)`, chosen greedily in (degree, index) order.
/// Zero candidates are never chosen. All vectors must be homogeneous.
pub fn minimal_generators(
    ring: &RingRef,
    degrees: &[i32],
    order: TermOrder,
    candidates: &[FreeVector],
    preload: &[FreeVector],
) -> Vec<usize> {
    let mut b = GbBuilder::new(ring.clone(), degrees.to_vec(), order, true, false);
    let mut pre: Vec<&FreeVector> = preload.iter().filter(|v| !v.is_zero()).collect();
    pre.sort_by_key(|v| v.degree(degrees));
    for v in pre {
        b.add_input(v.clone());
    }
    let mut idx: Vec<usize> = (0..candidates.len())
        .filter(|&j| !candidates[j].is_zero())
        .collect();
    idx.sort_by_key(|&j| (candidates[j].degree(degrees), j));
    let mut kept: Vec<usize> = idx.into_iter().filter(|&j| b.add_input(candidates[j].clone())).collect();
    kept.sort_unstable();
    kept
}

fn syzygy_order(ring: &RingRef, m: &FreeModuleMap) -> TermOrder {
    match ring.module_order() {
        ModuleOrder::SchreyerInduced => {
            let target_order = TermOrder::ambient(ring);
            let leads: Option<Vec<_>> = m
                .columns()
                .iter()
                .map(|c| target_order.leading(ring, c).map(|(p, mon, _)| (p, mon.clone())))
                .collect();
            match leads {
                Some(l) if !l.is_empty() => TermOrder::Schreyer(Arc::new(SchreyerFrame::new(l))),
                _ => target_order,
            }
        }
        _ => TermOrder::ambient(ring),
    }
}

/// All syzygies produced by Schreyer's construction, expressed on the
/// columns of `m` (not minimized).
pub fn schreyer_syzygies(ring: &RingRef, m: &FreeModuleMap) -> Result<Vec<FreeVector>> {
    let gb = GroebnerBasis::compute(ring, m.target_degrees(), m.columns())?;
    let cofs = gb.cofactors().expect("tracked");
    let n = m.ncols();
    let leads = gb.leading_terms();
    let minus_one = ring.field().neg(1);
    let mut out = Vec::new();

    let to_input = |sigma: &[Polynomial]| -> FreeVector {
        let mut v = FreeVector::zero(n);
        for (s, c) in sigma.iter().zip(cofs) {
            if !s.is_zero() {
                v.add_poly_multiple(ring, s, c);
            }
        }
        v
    };

    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            if leads[i].0 != leads[j].0 {
                continue;
            }
            let lcm = leads[i].1.lcm(&leads[j].1);
            let chain = (0..gb.len()).any(|k| {
                k != i
                    && k != j
                    && leads[k].0 == leads[i].0
                    && leads[k].1.divides(&lcm)
                    && leads[i].1.lcm(&leads[k].1) != lcm
                    && leads[j].1.lcm(&leads[k].1) != lcm
            });
            if chain {
                continue;
            }
            let qi = leads[i].1.quotient_of(&lcm).unwrap();
            let qj = leads[j].1.quotient_of(&lcm).unwrap();
            let s = gb.elements()[i]
                .mul_term(ring, 1, &qi)
                .add_scaled(ring, &gb.elements()[j], minus_one, &qj);
            let (r, q) = gb.reduce_with_quotients(&s);
            debug_assert!(r.is_zero());
            let mut sigma: Vec<Polynomial> = q.into_iter().map(|p| p.neg(ring)).collect();
            sigma[i] = sigma[i].add(ring, &Polynomial::term(qi, 1));
            sigma[j] = sigma[j].add(ring, &Polynomial::term(qj, minus_one));
            out.push(to_input(&sigma));
        }
    }
    // columns in terms of the basis: e_j - Σ q_k cof_k
    for j in 0..n {
        let (r, q) = gb.reduce_with_quotients(m.column(j));
        debug_assert!(r.is_zero());
        let mut v = FreeVector::unit(ring, n, j);
        v = v.sub(ring, &to_input(&q));
        out.push(v);
    }
    out.retain(|v| !v.is_zero());
    Ok(out)
}

/// A map `s` with `m ∘ s = 0` whose image is the kernel of `m`, with a
/// minimal set of homogeneous columns.
pub fn syzygy_basis(ring: &RingRef, m: &FreeModuleMap) -> Result<FreeModuleMap> {
    let syz = schreyer_syzygies(ring, m)?;
    let src = m.source_degrees();
    let keep = minimal_generators(ring, src, syzygy_order(ring, m), &syz, &[]);
    let cols: Vec<FreeVector> = keep.into_iter().map(|k| syz[k].clone()).collect();
    FreeModuleMap::from_columns_infer(src.to_vec(), cols)
}

/// Solve `a ∘ x = b`; `None` if some column of `b` is outside the image of `a`.
pub fn lift_solve(ring: &RingRef, a: &FreeModuleMap, b: &FreeModuleMap) -> Result<Option<FreeModuleMap>> {
    let gb = GroebnerBasis::compute(ring, a.target_degrees(), a.columns())?;
    lift_with(&gb, a, b)
}

/// Same as [`lift_solve`] with a precomputed tracked basis of `a`'s columns.
pub fn lift_with(gb: &GroebnerBasis, a: &FreeModuleMap, b: &FreeModuleMap) -> Result<Option<FreeModuleMap>> {
    let mut cols = Vec::with_capacity(b.ncols());
    for c in b.columns() {
        match gb.lift(c) {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(FreeModuleMap::new(
        a.source_degrees().to_vec(),
        b.source_degrees().to_vec(),
        cols,
    )?))
}
