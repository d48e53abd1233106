use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleMap, FreeVector, GroebnerBasis};
use crate::poly::Polynomial;
use crate::ring::RingRef;

use super::morphism::ModuleMorphism;
use super::resolution::{FreeResolution, Minimalization};

pub type ModuleRef = Arc<FPModule>;

/// A graded module `coker(relations: ⊕R(-s_j) → ⊕R(-gens[i]))`.
///
/// The Gröbner basis of the relation columns is computed once at
/// construction; resolutions and minimal presentations are cached lazily.
#[derive(Clone)]
pub struct FPModule {
    ring: RingRef,
    gens: Vec<i32>,
    relations: FreeModuleMap,
    gb: GroebnerBasis,
    minimal: OnceLock<Arc<Minimalization>>,
    resolution: OnceLock<Arc<FreeResolution>>,
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FPModule")
            .field("gens", &self.gens)
            .field("relations", &self.relations.rows_display(&self.ring))
            .finish()
    }
}

impl FPModule {
    /// Validated module from generator degrees and a homogeneous relation matrix.
    pub fn new(ring: &RingRef, gens: Vec<i32>, relations: FreeModuleMap) -> Result<ModuleRef> {
        if relations.target_degrees() != gens.as_slice() {
            return Err(Error::DegreeMismatch(
                "relation matrix target must match generator degrees".into(),
            ));
        }
        let gb = GroebnerBasis::compute(ring, &gens, relations.columns())?;
        Ok(Arc::new(FPModule {
            ring: ring.clone(),
            gens,
            relations,
            gb,
            minimal: OnceLock::new(),
            resolution: OnceLock::new(),
        }))
    }

    /// Module given by rows of relation strings; relation degrees are
    /// inferred per column.
    pub fn from_rows(ring: &RingRef, gens: Vec<i32>, rows: &[Vec<&str>]) -> Result<ModuleRef> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.len() != gens.len() && !(rows.is_empty()) {
            return Err(Error::InvalidArgument(format!(
                "{} relation rows for {} generators",
                rows.len(),
                gens.len()
            )));
        }
        let mut cols = vec![FreeVector::zero(gens.len()); ncols];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::InvalidArgument(format!("relation row {i} has wrong length")));
            }
            for (j, s) in row.iter().enumerate() {
                cols[j].0[i] = Polynomial::parse(ring, s)?;
            }
        }
        let cols: Vec<FreeVector> = cols.into_iter().filter(|c| !c.is_zero()).collect();
        let rel = FreeModuleMap::from_columns_infer(gens.clone(), cols)?;
        Self::new(ring, gens, rel)
    }

    pub fn free(ring: &RingRef, degrees: &[i32]) -> ModuleRef {
        Self::new(ring, degrees.to_vec(), FreeModuleMap::zero(degrees, &[])).expect("free module")
    }

    pub fn zero(ring: &RingRef) -> ModuleRef {
        Self::free(ring, &[])
    }

    /// `k = R/(x_1, ..., x_r)` generated in degree 0.
    pub fn residue_field(ring: &RingRef) -> ModuleRef {
        let cols = (0..ring.nvars())
            .map(|i| FreeVector(vec![Polynomial::var(ring, i)]))
            .collect();
        let rel = FreeModuleMap::new(vec![0], vec![1; ring.nvars()], cols).expect("k");
        Self::new(ring, vec![0], rel).expect("k")
    }

    /// `R/m^n`.
    pub fn power_of_maximal_quotient(ring: &RingRef, n: i32) -> ModuleRef {
        let cols = crate::monomial::monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| FreeVector(vec![Polynomial::term(m, 1)]))
            .collect::<Vec<_>>();
        let rel = FreeModuleMap::new(vec![0], vec![n; cols.len()], cols).expect("R/m^n");
        Self::new(ring, vec![0], rel).expect("R/m^n")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &FreeModuleMap {
        &self.relations
    }

    pub fn relation_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Is `v` (a vector on the generators) zero in the module?
    pub fn is_zero_element(&self, v: &FreeVector) -> bool {
        self.gb.contains(v)
    }

    pub fn normal_form(&self, v: &FreeVector) -> FreeVector {
        self.gb.normal_form(v)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.ngens()).all(|i| self.gb.contains(&FreeVector::unit(&self.ring, self.ngens(), i)))
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_zero()
    }

    /// Same presentation with every twist raised by `shift` (so `M(-shift)`).
    pub fn twist(self: &Arc<Self>, shift: i32) -> ModuleRef {
        if shift == 0 {
            return self.clone();
        }
        let gens: Vec<i32> = self.gens.iter().map(|d| d + shift).collect();
        Self::new(&self.ring, gens, self.relations.shifted(shift, shift)).expect("twist")
    }

    /// Identical generator degrees and relation matrix.
    pub fn same_presentation(&self, other: &FPModule) -> bool {
        self.gens == other.gens && self.relations == other.relations
    }

    pub fn minimalization(self: &Arc<Self>) -> Arc<Minimalization> {
        self.minimal
            .get_or_init(|| Arc::new(Minimalization::compute(self).expect("minimalization")))
            .clone()
    }

    /// The presentation with unit entries pruned and redundant relations
    /// removed.
    pub fn minimal_presentation(self: &Arc<Self>) -> ModuleRef {
        self.minimalization().module.clone()
    }

    /// Full minimal graded free resolution (cached).
    pub fn resolution(self: &Arc<Self>) -> Arc<FreeResolution> {
        self.resolution
            .get_or_init(|| Arc::new(FreeResolution::compute(self).expect("resolution")))
            .clone()
    }

    pub fn identity(self: &Arc<Self>) -> ModuleMorphism {
        ModuleMorphism::identity(self)
    }
}

/// `a ⊕ b ⊕ ...` with its canonical injections and projections.
pub struct DirectSum {
    pub module: ModuleRef,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

pub fn direct_sum(parts: &[ModuleRef]) -> Result<DirectSum> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArgument("empty direct sum".into()));
    };
    let ring = first.ring.clone();
    if parts.iter().any(|p| p.ring != ring) {
        return Err(Error::ContextMismatch);
    }
    let gens: Vec<i32> = parts.iter().flat_map(|p| p.gens.iter().copied()).collect();
    let blocks: Vec<&FreeModuleMap> = parts.iter().map(|p| &p.relations).collect();
    let rel = FreeModuleMap::block_diagonal(&blocks);
    let module = FPModule::new(&ring, gens.clone(), rel)?;
    let n = gens.len();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for p in parts {
        let k = p.ngens();
        let inj_cols: Vec<FreeVector> = (0..k).map(|i| FreeVector::unit(&ring, n, offset + i)).collect();
        let inj = FreeModuleMap::new(gens.clone(), p.gens.clone(), inj_cols)?;
        injections.push(ModuleMorphism::new(p, &module, inj, 0)?);
        let proj_cols: Vec<FreeVector> = (0..n)
            .map(|j| {
                if (offset..offset + k).contains(&j) {
                    FreeVector::unit(&ring, k, j - offset)
                } else {
                    FreeVector::zero(k)
                }
            })
            .collect();
        let proj = FreeModuleMap::new(p.gens.clone(), gens.clone(), proj_cols)?;
        projections.push(ModuleMorphism::new(&module, p, proj, 0)?);
        offset += k;
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}
