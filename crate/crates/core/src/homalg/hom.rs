use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fpmod::{homology, kernel, FPModule, ModuleMorphism, ModuleRef};
use crate::groebner::{FreeModuleMap, FreeVector, GroebnerBasis};
use crate::poly::Polynomial;

/// `Hom(⊕R(-s_j), n) = ⊕_j n(s_j)`. Generator `(j, i)` (sending `e_j` to the
/// `i`-th generator of `n`) sits at position `j * n.ngens() + i` with degree
/// `t_i - s_j`.
pub fn hom_free(free: &[i32], n: &ModuleRef) -> Result<ModuleRef> {
    let ring = n.ring();
    let n0 = n.ngens();
    let total = free.len() * n0;
    let gens: Vec<i32> = free
        .iter()
        .flat_map(|s| n.gen_degrees().iter().map(move |t| t - s))
        .collect();
    let mut cols = Vec::new();
    let mut src = Vec::new();
    for (j, s) in free.iter().enumerate() {
        for (b, u) in n.relations().columns().iter().zip(n.relations().source_degrees()) {
            let mut v = FreeVector::zero(total);
            for i in 0..n0 {
                v.0[j * n0 + i] = b.get(i).clone();
            }
            cols.push(v);
            src.push(u - s);
        }
    }
    FPModule::new(ring, gens.clone(), FreeModuleMap::new(gens, src, cols)?)
}

/// `Hom(a, n): Hom(F_0, n) → Hom(F_1, n)` for `a: F_1 → F_0`, as a map
/// between the modules built by [`hom_free`].
pub fn hom_free_map(a: &FreeModuleMap, from: &ModuleRef, to: &ModuleRef, n: &ModuleRef) -> Result<ModuleMorphism> {
    let n0 = n.ngens();
    let cols: Vec<FreeVector> = (0..from.ngens())
        .map(|pos| {
            let (j, i) = (pos / n0, pos % n0);
            let mut v = FreeVector::zero(to.ngens());
            for l in 0..a.ncols() {
                v.0[l * n0 + i] = a.entry(j, l).clone();
            }
            v
        })
        .collect();
    let m = FreeModuleMap::new(to.gen_degrees().to_vec(), from.gen_degrees().to_vec(), cols)?;
    ModuleMorphism::new_unverified(from, to, m, 0)
}

/// A presentation of `Hom_R(source, target)` with its generators realized
/// as morphisms.
#[derive(Debug)]
pub struct HomModule {
    pub source: ModuleRef,
    pub target: ModuleRef,
    /// Presentation of the Hom module.
    pub module: ModuleRef,
    /// `Hom(F_0, target)` for the generator cover of `source`.
    pub ambient: ModuleRef,
    /// Ambient coordinates of each generator of `module`.
    pub vectors: Vec<FreeVector>,
    pub generators: Vec<ModuleMorphism>,
    lift: OnceLock<GroebnerBasis>,
}

impl HomModule {
    fn morphism_from_ambient(&self, w: &FreeVector, degree: i32) -> Result<ModuleMorphism> {
        let n0 = self.target.ngens();
        let cols: Vec<FreeVector> = (0..self.source.ngens())
            .map(|j| FreeVector(w.0[j * n0..(j + 1) * n0].to_vec()))
            .collect();
        ModuleMorphism::from_columns(&self.source, &self.target, cols, degree)
    }

    fn ambient_of(&self, f: &ModuleMorphism) -> Result<FreeVector> {
        if !f.source().same_presentation(&self.source) || !f.target().same_presentation(&self.target) {
            return Err(Error::DegreeMismatch("morphism does not belong to this Hom module".into()));
        }
        let parts: Vec<&FreeVector> = f.matrix().columns().iter().collect();
        Ok(FreeVector::concat(&parts))
    }

    /// The morphism represented by `v` (coordinates on the Hom generators),
    /// which must be homogeneous of the given degree.
    pub fn to_morphism(&self, v: &FreeVector, degree: i32) -> Result<ModuleMorphism> {
        let ring = self.source.ring();
        let mut w = FreeVector::zero(self.ambient.ngens());
        for (c, g) in v.entries().iter().zip(&self.vectors) {
            if !c.is_zero() {
                w.add_poly_multiple(ring, c, g);
            }
        }
        self.morphism_from_ambient(&w, degree)
    }

    /// Coordinates of `f` on the Hom generators.
    pub fn from_morphism(&self, f: &ModuleMorphism) -> Result<FreeVector> {
        let w = self.ambient_of(f)?;
        let gb = self.lift.get_or_init(|| {
            let mut inputs = self.vectors.clone();
            inputs.extend(self.ambient.relations().columns().iter().cloned());
            GroebnerBasis::compute(self.source.ring(), self.ambient.gen_degrees(), &inputs).expect("hom lift basis")
        });
        let x = gb
            .lift(&w)
            .ok_or_else(|| Error::Internal("well-defined morphism outside Hom presentation".into()))?;
        Ok(x.slice(0..self.vectors.len()))
    }

    pub fn ngens(&self) -> usize {
        self.vectors.len()
    }
}

/// `Hom_R(m, n)` as the kernel of `Hom(F_0, n) → Hom(F_1, n)`.
pub fn hom_module(m: &ModuleRef, n: &ModuleRef) -> Result<HomModule> {
    if m.ring() != n.ring() {
        return Err(Error::ContextMismatch);
    }
    let ambient = hom_free(m.gen_degrees(), n)?;
    let next = hom_free(m.relations().source_degrees(), n)?;
    let d = hom_free_map(m.relations(), &ambient, &next, n)?;
    let ker = kernel(&d)?;
    let mut h = HomModule {
        source: m.clone(),
        target: n.clone(),
        module: ker.module.clone(),
        ambient,
        vectors: ker.generators,
        generators: Vec::new(),
        lift: OnceLock::new(),
    };
    h.generators = h
        .vectors
        .iter()
        .zip(h.module.gen_degrees())
        .map(|(v, &d)| h.morphism_from_ambient(v, d))
        .collect::<Result<_>>()?;
    Ok(h)
}

/// `h ∘ -: Hom(w, y) → Hom(w, z)` for `h: y → z`.
pub fn post_compose(h: &ModuleMorphism, from: &HomModule, to: &HomModule) -> Result<ModuleMorphism> {
    let cols = from
        .generators
        .iter()
        .map(|g| to.from_morphism(&h.compose(g)?))
        .collect::<Result<Vec<_>>>()?;
    ModuleMorphism::from_columns(&from.module, &to.module, cols, h.degree())
}

/// `- ∘ h: Hom(y, n) → Hom(x, n)` for `h: x → y`.
pub fn pre_compose(h: &ModuleMorphism, from: &HomModule, to: &HomModule) -> Result<ModuleMorphism> {
    let cols = from
        .generators
        .iter()
        .map(|g| to.from_morphism(&g.compose(h)?))
        .collect::<Result<Vec<_>>>()?;
    ModuleMorphism::from_columns(&from.module, &to.module, cols, h.degree())
}

/// `Ext^i_R(m, n)` from the minimal resolution of `m`.
pub fn ext(i: i32, m: &ModuleRef, n: &ModuleRef) -> Result<ModuleRef> {
    if i < 0 {
        return Err(Error::InvalidArgument(format!("negative Ext index {i}")));
    }
    if m.ring() != n.ring() {
        return Err(Error::ContextMismatch);
    }
    let i = i as usize;
    let res = m.resolution();
    let ring = m.ring();
    if res.free(i).is_empty() {
        return Ok(FPModule::zero(ring));
    }
    let here = hom_free(res.free(i), n)?;
    let after = hom_free(res.free(i + 1), n)?;
    let out = hom_free_map(&res.differential(i + 1), &here, &after, n)?;
    let into = if i == 0 {
        ModuleMorphism::zero(&FPModule::zero(ring), &here, 0)
    } else {
        let before = hom_free(res.free(i - 1), n)?;
        hom_free_map(&res.differential(i), &before, &here, n)?
    };
    Ok(homology(&out, &into)?.module)
}

/// The ring as a module generated in degree 0.
pub fn ring_module(m: &FPModule) -> ModuleRef {
    FPModule::free(m.ring(), &[0])
}

/// Evaluates each generator of `h` at `e_j`; used for trace ideals.
pub(crate) fn evaluations(h: &HomModule, j: usize) -> Vec<Polynomial> {
    h.generators.iter().map(|g| g.matrix().entry(0, j).clone()).collect()
}
