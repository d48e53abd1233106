//! Term orders on free modules.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::{ModuleOrder, Ring};

use super::vector::FreeVector;

/// Leading terms of the images of basis vectors; induces the Schreyer order
/// `m e_i > n e_j` iff `m·lt(i) > n·lt(j)` (term-over-position), ties broken
/// by smaller index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    leads: Vec<(usize, Monomial)>,
}

impl SchreyerFrame {
    pub fn new(leads: Vec<(usize, Monomial)>) -> Self {
        SchreyerFrame { leads }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    TermOverPosition,
    PositionOverTerm,
    Schreyer(Arc<SchreyerFrame>),
}

impl TermOrder {
    /// Order used on ambient (non-syzygy) free modules.
    pub fn ambient(ring: &Ring) -> TermOrder {
        match ring.module_order() {
            ModuleOrder::PositionOverTerm => TermOrder::PositionOverTerm,
            _ => TermOrder::TermOverPosition,
        }
    }

    pub fn cmp(&self, ring: &Ring, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            TermOrder::TermOverPosition => ring.cmp(a.1, b.1).then(b.0.cmp(&a.0)),
            TermOrder::PositionOverTerm => b.0.cmp(&a.0).then_with(|| ring.cmp(a.1, b.1)),
            TermOrder::Schreyer(frame) => {
                let (pa, la) = &frame.leads[a.0];
                let (pb, lb) = &frame.leads[b.0];
                let ma = a.1.mul(la);
                let mb = b.1.mul(lb);
                ring.cmp(&ma, &mb)
                    .then(pb.cmp(pa))
                    .then(b.0.cmp(&a.0))
            }
        }
    }

    /// Leading `(position, monomial, coefficient)` of a vector.
    pub fn leading<'a>(&self, ring: &Ring, v: &'a FreeVector) -> Option<(usize, &'a Monomial, Coeff)> {
        let mut best: Option<(usize, &'a Monomial, Coeff)> = None;
        for (i, p) in v.entries().iter().enumerate() {
            if let Some((m, c)) = p.leading() {
                best = match best {
                    Some(b) if self.cmp(ring, (b.0, b.1), (i, m)) == Ordering::Greater => Some(b),
                    _ => Some((i, m, *c)),
                };
                if matches!(self, TermOrder::PositionOverTerm) {
                    break;
                }
            }
        }
        best
    }
}
