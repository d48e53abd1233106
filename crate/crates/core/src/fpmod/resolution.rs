use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, syzygy_basis, FreeModuleMap, FreeVector, GroebnerBasis, TermOrder};
use crate::poly::Polynomial;

use super::module::{FPModule, ModuleRef};
use super::morphism::ModuleMorphism;

/// A minimal presentation of a module together with mutually inverse
/// isomorphisms to the original presentation.
#[derive(Debug)]
pub struct Minimalization {
    pub module: ModuleRef,
    /// original → minimal
    pub to_min: ModuleMorphism,
    /// minimal → original
    pub from_min: ModuleMorphism,
}

impl Minimalization {
    pub fn compute(m: &ModuleRef) -> Result<Self> {
        let ring = m.ring();
        let f = ring.field();
        let n = m.ngens();
        let mut degs: Vec<i32> = m.gen_degrees().to_vec();
        let mut cols: Vec<FreeVector> = m.relations().columns().to_vec();
        // proj[k]: original generator k in current coordinates
        let mut proj: Vec<FreeVector> = (0..n).map(|k| FreeVector::unit(ring, n, k)).collect();
        // incl[k]: current generator k in original coordinates
        let mut incl: Vec<FreeVector> = proj.clone();

        loop {
            let unit = cols.iter().enumerate().find_map(|(j, c)| {
                c.entries()
                    .iter()
                    .position(|p| !p.is_zero() && p.is_constant())
                    .map(|i| (i, j))
            });
            let Some((i, j)) = unit else { break };
            let c = cols[j].get(i).constant_term();
            let scale = f.neg(f.inv(c));
            // e_i = -(1/c) Σ_{k≠i} A[k][j] e_k
            let sub: Vec<Polynomial> = (0..degs.len())
                .filter(|&k| k != i)
                .map(|k| cols[j].get(k).scale(ring, scale))
                .collect();
            let pi = |v: &FreeVector| -> FreeVector {
                let mut out: Vec<Polynomial> = (0..v.len()).filter(|&k| k != i).map(|k| v.get(k).clone()).collect();
                let vi = v.get(i);
                if !vi.is_zero() {
                    for (o, s) in out.iter_mut().zip(&sub) {
                        *o = o.add(ring, &vi.mul(ring, s));
                    }
                }
                FreeVector(out)
            };
            cols = cols.iter().map(&pi).filter(|v| !v.is_zero()).collect();
            proj = proj.iter().map(&pi).collect();
            incl.remove(i);
            degs.remove(i);
        }

        let keep = minimal_generators(ring, &degs, TermOrder::ambient(ring), &cols, &[]);
        let rel_cols: Vec<FreeVector> = keep.into_iter().map(|k| cols[k].clone()).collect();
        let rel = FreeModuleMap::from_columns_infer(degs.clone(), rel_cols)?;
        let module = if m.gen_degrees() == degs.as_slice() && rel == *m.relations() {
            m.clone()
        } else {
            FPModule::new(ring, degs, rel)?
        };
        let to_min = ModuleMorphism::from_columns(m, &module, proj, 0)?;
        let from_min = ModuleMorphism::from_columns(&module, m, incl, 0)?;
        Ok(Minimalization { module, to_min, from_min })
    }
}

/// A minimal graded free resolution `... → F_2 → F_1 → F_0 → M → 0` of the
/// minimal presentation of `M`. `maps[c]` is `d_{c+1}: F_{c+1} → F_c`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub module: ModuleRef,
    pub frees: Vec<Vec<i32>>,
    pub maps: Vec<FreeModuleMap>,
}

impl FreeResolution {
    /// Full resolution; its length never exceeds the number of variables.
    pub fn compute(m: &ModuleRef) -> Result<Self> {
        let module = m.minimalization().module.clone();
        let ring = module.ring().clone();
        let r = ring.nvars();
        let mut frees = Vec::new();
        let mut maps = Vec::new();
        if module.ngens() == 0 {
            return Ok(FreeResolution { module, frees, maps });
        }
        frees.push(module.gen_degrees().to_vec());
        let mut d = module.relations().clone();
        while d.ncols() > 0 {
            if frees.len() > r {
                return Err(Error::Internal(format!(
                    "resolution longer than {r} over a polynomial ring in {r} variables"
                )));
            }
            frees.push(d.source_degrees().to_vec());
            let next = syzygy_basis(&ring, &d)?;
            maps.push(d);
            d = next;
        }
        Ok(FreeResolution { module, frees, maps })
    }

    /// The first `max_len` maps of the full resolution.
    pub fn truncated(&self, max_len: usize) -> FreeResolution {
        let k = max_len.min(self.maps.len());
        FreeResolution {
            module: self.module.clone(),
            frees: self.frees.iter().take(k + 1).cloned().collect(),
            maps: self.maps[..k].to_vec(),
        }
    }

    /// Index of the last nonzero free module; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        self.frees.len().checked_sub(1)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.frees.iter().map(|f| f.len()).collect()
    }

    /// Graded Betti numbers keyed by (homological index, internal degree).
    pub fn betti_table(&self) -> BTreeMap<(usize, i32), usize> {
        let mut t = BTreeMap::new();
        for (i, f) in self.frees.iter().enumerate() {
            for &d in f {
                *t.entry((i, d)).or_insert(0) += 1;
            }
        }
        t
    }

    /// The free module `F_c` (empty beyond the length).
    pub fn free(&self, c: usize) -> &[i32] {
        self.frees.get(c).map_or(&[], |v| v.as_slice())
    }

    /// `d_c: F_c → F_{c-1}` for `c ≥ 1`, zero map beyond the computed range.
    pub fn differential(&self, c: usize) -> FreeModuleMap {
        assert!(c >= 1);
        self.maps
            .get(c - 1)
            .cloned()
            .unwrap_or_else(|| FreeModuleMap::zero(self.free(c - 1), self.free(c)))
    }

    /// Composites vanish, kernels equal images, and no entry is a unit.
    pub fn verify(&self) -> Result<()> {
        let ring = self.module.ring();
        for w in self.maps.windows(2) {
            if !w[0].compose(ring, &w[1])?.is_zero() {
                return Err(Error::NotExact("consecutive differentials do not compose to zero".into()));
            }
        }
        for (c, d) in self.maps.iter().enumerate() {
            if d.has_unit_entry() {
                return Err(Error::NotExact(format!("d_{} has a unit entry", c + 1)));
            }
            let ker = syzygy_basis(ring, d)?;
            let next = self.differential(c + 2);
            let gb = GroebnerBasis::compute(ring, d.source_degrees(), next.columns())?;
            if !ker.columns().iter().all(|v| gb.contains(v)) {
                return Err(Error::NotExact(format!("kernel of d_{} exceeds image of d_{}", c + 1, c + 2)));
            }
            let kgb = GroebnerBasis::compute(ring, d.source_degrees(), ker.columns())?;
            if !next.columns().iter().all(|v| kgb.contains(v)) {
                return Err(Error::NotExact(format!("image of d_{} exceeds kernel of d_{}", c + 2, c + 1)));
            }
        }
        Ok(())
    }
}

/// The minimal resolution of `m`, truncated to `max_len` maps.
pub fn minimal_resolution(m: &ModuleRef, max_len: usize) -> FreeResolution {
    m.resolution().truncated(max_len)
}

/// `Ω^c m`: generated by the basis of `F_c` with relations `d_{c+1}`.
/// `Ω^0 m` is the minimal presentation of `m`.
pub fn syzygy(m: &ModuleRef, c: i32) -> Result<ModuleRef> {
    if c < 0 {
        return Err(Error::InvalidArgument(format!("negative syzygy index {c}")));
    }
    if c == 0 {
        return Ok(m.minimal_presentation());
    }
    let res = m.resolution();
    let c = c as usize;
    let gens = res.free(c).to_vec();
    if gens.is_empty() {
        return Ok(FPModule::zero(m.ring()));
    }
    FPModule::new(m.ring(), gens, res.differential(c + 1))
}

/// The sequence `0 → Ω^{c+1} m → F_c → Ω^c m → 0`, returned as
/// (inclusion, projection).
pub fn syzygy_sequence(m: &ModuleRef, c: i32) -> Result<(ModuleMorphism, ModuleMorphism)> {
    let omega = syzygy(m, c)?;
    let next = syzygy(m, c + 1)?;
    let res = m.resolution();
    let ring = m.ring();
    let free = FPModule::free(ring, omega.gen_degrees());
    let proj = ModuleMorphism::from_columns(
        &free,
        &omega,
        (0..free.ngens()).map(|k| FreeVector::unit(ring, free.ngens(), k)).collect(),
        0,
    )?;
    let incl = if next.ngens() == 0 {
        ModuleMorphism::zero(&next, &free, 0)
    } else {
        ModuleMorphism::new(&next, &free, res.differential(c as usize + 1), 0)?
    };
    Ok((incl, proj))
}
