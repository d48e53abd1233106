use std::fmt;

use crate::field::Coeff;
use crate::groebner::FreeVector;
use crate::monomial::{monomials_of_degree, Monomial};

use super::module::FPModule;

/// Vector-space dimension over the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KDim {
    Finite(usize),
    Infinite,
}

impl fmt::Display for KDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KDim::Finite(n) => write!(f, "{n}"),
            KDim::Infinite => f.write_str("infinite"),
        }
    }
}

fn is_standard(m: &FPModule, pos: usize, mon: &Monomial) -> bool {
    !m.relation_basis()
        .leading_terms()
        .iter()
        .any(|(p, l)| *p == pos && l.divides(mon))
}

/// Largest degree of a standard monomial at `pos`, or `None` when infinitely
/// many exist (some variable has no pure power among the leading terms).
fn top_standard_degree(m: &FPModule, pos: usize) -> Option<i32> {
    let r = m.ring().nvars();
    let leads = m.relation_basis().leading_terms();
    if leads.iter().any(|(p, l)| *p == pos && l.is_one()) {
        return Some(-1);
    }
    let mut bound = 0i32;
    for v in 0..r {
        let e = m
            .relation_basis()
            .leading_terms()
            .iter()
            .filter(|(p, _)| *p == pos)
            .filter_map(|(_, l)| l.pure_power().filter(|&(var, _)| var == v).map(|(_, e)| e as i32))
            .min()?;
        bound += e - 1;
    }
    Some(bound)
}

/// Number of standard monomials of the relation basis over all positions.
pub fn k_dimension(m: &FPModule) -> KDim {
    let r = m.ring().nvars();
    let mut total = 0usize;
    for pos in 0..m.ngens() {
        let Some(top) = top_standard_degree(m, pos) else {
            return KDim::Infinite;
        };
        for d in 0..=top {
            total += monomials_of_degree(r, d).iter().filter(|mon| is_standard(m, pos, mon)).count();
        }
    }
    KDim::Finite(total)
}

/// Standard monomials `(position, monomial)` spanning the degree-`d` piece.
pub fn standard_basis(m: &FPModule, d: i32) -> Vec<(usize, Monomial)> {
    let r = m.ring().nvars();
    let mut out = Vec::new();
    for (pos, &g) in m.gen_degrees().iter().enumerate() {
        if d < g {
            continue;
        }
        for mon in monomials_of_degree(r, d - g) {
            if is_standard(m, pos, &mon) {
                out.push((pos, mon));
            }
        }
    }
    out
}

/// `dim_k M_d` for `d = 0..=up_to`.
pub fn hilbert_function(m: &FPModule, up_to: i32) -> Vec<usize> {
    (0..=up_to).map(|d| standard_basis(m, d).len()).collect()
}

/// `dim_k M_d` for `d` in `lo..=hi`.
pub fn hilbert_range(m: &FPModule, lo: i32, hi: i32) -> Vec<usize> {
    (lo..=hi).map(|d| standard_basis(m, d).len()).collect()
}

/// Coefficients of a homogeneous element's normal form on `basis`.
pub fn coordinates(m: &FPModule, basis: &[(usize, Monomial)], v: &FreeVector) -> Vec<Coeff> {
    let nf = m.normal_form(v);
    basis.iter().map(|(pos, mon)| nf.get(*pos).coefficient(mon)).collect()
}

/// Every standard monomial `(position, monomial)`, when there are finitely many.
pub fn all_standard_monomials(m: &FPModule) -> Option<Vec<(usize, Monomial)>> {
    let r = m.ring().nvars();
    let mut out = Vec::new();
    for pos in 0..m.ngens() {
        let top = top_standard_degree(m, pos)?;
        for d in 0..=top {
            out.extend(
                monomials_of_degree(r, d)
                    .into_iter()
                    .filter(|mon| is_standard(m, pos, mon))
                    .map(|mon| (pos, mon)),
            );
        }
    }
    Some(out)
}
