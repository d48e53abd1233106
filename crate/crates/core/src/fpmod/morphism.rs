use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, syzygy_basis, FreeModuleMap, FreeVector, TermOrder};
use crate::poly::Polynomial;

use super::module::{FPModule, ModuleRef};

/// A graded homomorphism of presented modules, given by its matrix on
/// generators. A morphism of degree `δ` sends generator `e_j` (degree `s_j`)
/// to an element of degree `s_j + δ`.
#[derive(Clone, Debug)]
pub struct ModuleMorphism {
    source: ModuleRef,
    target: ModuleRef,
    matrix: FreeModuleMap,
    degree: i32,
}

impl ModuleMorphism {
    /// Checks shapes, homogeneity, and that relations of the source map into
    /// the relations of the target.
    pub fn new(source: &ModuleRef, target: &ModuleRef, matrix: FreeModuleMap, degree: i32) -> Result<Self> {
        let f = Self::new_unverified(source, target, matrix, degree)?;
        if !f.is_well_defined() {
            return Err(Error::NotWellDefined);
        }
        Ok(f)
    }

    /// Shape checks only; for matrices that are well defined by construction.
    pub(crate) fn new_unverified(
        source: &ModuleRef,
        target: &ModuleRef,
        matrix: FreeModuleMap,
        degree: i32,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::ContextMismatch);
        }
        if matrix.target_degrees() != target.gen_degrees() {
            return Err(Error::DegreeMismatch("morphism matrix rows vs target generators".into()));
        }
        let want: Vec<i32> = source.gen_degrees().iter().map(|d| d + degree).collect();
        if matrix.source_degrees() != want.as_slice() {
            return Err(Error::DegreeMismatch("morphism matrix columns vs source generators".into()));
        }
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
            degree,
        })
    }

    /// Builds from column vectors (images of the source generators).
    pub fn from_columns(source: &ModuleRef, target: &ModuleRef, cols: Vec<FreeVector>, degree: i32) -> Result<Self> {
        let src: Vec<i32> = source.gen_degrees().iter().map(|d| d + degree).collect();
        let m = FreeModuleMap::new(target.gen_degrees().to_vec(), src, cols)?;
        Self::new(source, target, m, degree)
    }

    pub fn identity(m: &ModuleRef) -> Self {
        ModuleMorphism {
            source: m.clone(),
            target: m.clone(),
            matrix: FreeModuleMap::identity(m.ring(), m.gen_degrees()),
            degree: 0,
        }
    }

    pub fn zero(source: &ModuleRef, target: &ModuleRef, degree: i32) -> Self {
        let src: Vec<i32> = source.gen_degrees().iter().map(|d| d + degree).collect();
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: FreeModuleMap::zero(target.gen_degrees(), &src),
            degree,
        }
    }

    pub fn source(&self) -> &ModuleRef {
        &self.source
    }

    pub fn target(&self) -> &ModuleRef {
        &self.target
    }

    pub fn matrix(&self) -> &FreeModuleMap {
        &self.matrix
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_well_defined(&self) -> bool {
        let ring = self.source.ring();
        self.source
            .relations()
            .columns()
            .iter()
            .all(|r| self.target.is_zero_element(&self.matrix.apply(ring, r)))
    }

    /// Image of an element given on the source generators.
    pub fn apply(&self, v: &FreeVector) -> FreeVector {
        self.matrix.apply(self.source.ring(), v)
    }

    /// Zero as a map of modules (every generator lands in the relations).
    pub fn is_zero(&self) -> bool {
        self.matrix.columns().iter().all(|c| self.target.is_zero_element(c))
    }

    pub fn equals(&self, other: &ModuleMorphism) -> bool {
        self.degree == other.degree
            && self.matrix.ncols() == other.matrix.ncols()
            && self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        if !other.target.same_presentation(&self.source) {
            return Err(Error::DegreeMismatch("composition of non-composable morphisms".into()));
        }
        let ring = self.source.ring();
        let degree = self.degree + other.degree;
        let src: Vec<i32> = other.source.gen_degrees().iter().map(|d| d + degree).collect();
        let matrix = self.matrix.compose_shifted(ring, &other.matrix, src);
        Ok(ModuleMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix,
            degree,
        })
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        if self.degree != other.degree || !self.source.same_presentation(&other.source) || !self.target.same_presentation(&other.target) {
            return Err(Error::DegreeMismatch("sum of morphisms with different shapes".into()));
        }
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(self.source.ring(), &other.matrix)?,
            degree: self.degree,
        })
    }

    pub fn neg(&self) -> ModuleMorphism {
        ModuleMorphism {
            matrix: self.matrix.neg(self.source.ring()),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.add(&other.neg())
    }

    /// Multiply by a homogeneous ring element.
    pub fn scale(&self, f: &Polynomial) -> ModuleMorphism {
        let ring = self.source.ring();
        let d = f.degree().unwrap_or(0);
        let degree = self.degree + d;
        let src: Vec<i32> = self.source.gen_degrees().iter().map(|s| s + degree).collect();
        let cols = self.matrix.columns().iter().map(|c| c.mul_poly(ring, f)).collect();
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: FreeModuleMap::new(self.target.gen_degrees().to_vec(), src, cols).expect("scaled"),
            degree,
        }
    }

    /// Same matrix, reinterpreted between modules with identical presentations.
    pub fn reinterpret(&self, source: &ModuleRef, target: &ModuleRef) -> Result<ModuleMorphism> {
        if !source.same_presentation(&self.source) || !target.same_presentation(&self.target) {
            return Err(Error::DegreeMismatch("presentations differ".into()));
        }
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: self.matrix.clone(),
            degree: self.degree,
        })
    }

    pub fn kernel(&self) -> Result<Submodule> {
        kernel(self)
    }

    pub fn image(&self) -> Result<Submodule> {
        image(self)
    }

    pub fn cokernel(&self) -> Result<ModuleRef> {
        cokernel(self)
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.module.is_zero())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.is_zero())
    }
}

/// A subquotient presented on chosen generators, with the vectors (in the
/// ambient generator coordinates) those generators stand for.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: ModuleRef,
    /// Ambient coordinates of each generator of `module`.
    pub generators: Vec<FreeVector>,
}

impl Submodule {
    /// The inclusion into the ambient module, when the subquotient is a
    /// genuine submodule.
    pub fn inclusion(&self, ambient: &ModuleRef) -> Result<ModuleMorphism> {
        ModuleMorphism::from_columns(&self.module, ambient, self.generators.clone(), 0)
    }
}

/// `(span(gens) + span(extra) + rel) / (span(extra) + rel)` inside the
/// generators of `ambient`, presented minimally on a subset of `gens`.
pub fn subquotient(ambient: &ModuleRef, gens: &[FreeVector], extra: &[FreeVector]) -> Result<Submodule> {
    let ring = ambient.ring();
    let degs = ambient.gen_degrees();
    for v in gens.iter().chain(extra) {
        if !v.is_homogeneous(degs) {
            return Err(Error::Inhomogeneous("subquotient generator".into()));
        }
    }
    let extra: Vec<FreeVector> = extra.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut preload = extra.clone();
    preload.extend(ambient.relations().columns().iter().cloned());
    let keep = minimal_generators(ring, degs, TermOrder::ambient(ring), gens, &preload);
    let chosen: Vec<FreeVector> = keep.iter().map(|&k| gens[k].clone()).collect();
    let chosen_deg: Vec<i32> = chosen.iter().map(|v| v.degree(degs).expect("nonzero")).collect();
    if chosen.is_empty() {
        return Ok(Submodule {
            module: FPModule::zero(ring),
            generators: Vec::new(),
        });
    }

    let mut cols = chosen.clone();
    cols.extend(preload.iter().cloned());
    let big = FreeModuleMap::from_columns_infer(degs.to_vec(), cols)?;
    let syz = syzygy_basis(ring, &big)?;
    let k = chosen.len();
    let projected: Vec<FreeVector> = syz.columns().iter().map(|c| c.slice(0..k)).collect();
    let keep_rel = minimal_generators(ring, &chosen_deg, TermOrder::ambient(ring), &projected, &[]);
    let rel_cols: Vec<FreeVector> = keep_rel.into_iter().map(|j| projected[j].clone()).collect();
    let rel = FreeModuleMap::from_columns_infer(chosen_deg.clone(), rel_cols)?;
    Ok(Submodule {
        module: FPModule::new(ring, chosen_deg, rel)?,
        generators: chosen,
    })
}

/// Vectors in the source generator space whose images vanish in the target.
fn kernel_vectors(f: &ModuleMorphism) -> Result<Vec<FreeVector>> {
    let ring = f.source.ring();
    let n = f.source.ngens();
    if n == 0 {
        return Ok(Vec::new());
    }
    if f.target.ngens() == 0 {
        return Ok((0..n).map(|k| FreeVector::unit(ring, n, k)).collect());
    }
    let mut cols: Vec<FreeVector> = f.matrix.columns().to_vec();
    let mut src: Vec<i32> = f.matrix.source_degrees().to_vec();
    cols.extend(f.target.relations().columns().iter().cloned());
    src.extend_from_slice(f.target.relations().source_degrees());
    let big = FreeModuleMap::new(f.target.gen_degrees().to_vec(), src, cols)?;
    let syz = syzygy_basis(ring, &big)?;
    Ok(syz
        .columns()
        .iter()
        .map(|c| c.slice(0..n))
        .filter(|v| !v.is_zero())
        .collect())
}

pub fn kernel(f: &ModuleMorphism) -> Result<Submodule> {
    let k = kernel_vectors(f)?;
    subquotient(&f.source, &k, &[])
}

pub fn image(f: &ModuleMorphism) -> Result<Submodule> {
    subquotient(&f.target, f.matrix.columns(), &[])
}

pub fn cokernel(f: &ModuleMorphism) -> Result<ModuleRef> {
    let t = &f.target;
    let rel = FreeModuleMap::hcat(&[t.relations(), &f.matrix])?;
    let nz: Vec<usize> = (0..rel.ncols()).filter(|&j| !rel.column(j).is_zero()).collect();
    FPModule::new(t.ring(), t.gen_degrees().to_vec(), rel.select_columns(&nz))
}

/// `ker f / im g` for `P --g--> Q --f--> S` with `f ∘ g = 0`.
pub fn homology(f: &ModuleMorphism, g: &ModuleMorphism) -> Result<Submodule> {
    if !g.target.same_presentation(&f.source) {
        return Err(Error::DegreeMismatch("homology of non-composable maps".into()));
    }
    if !f.compose(g)?.is_zero() {
        return Err(Error::InvalidArgument("homology needs f ∘ g = 0".into()));
    }
    let k = kernel_vectors(f)?;
    subquotient(&f.source, &k, g.matrix.columns())
}
