//! Graded maps between free modules.

use crate::error::{Error, Result};
use crate::groebner::vector::FreeVector;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A map `⊕ R(-source[j]) → ⊕ R(-target[i])`, stored by columns.
///
/// Entry `(i, j)` is zero or homogeneous of degree `source[j] - target[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModuleMap {
    target: Vec<i32>,
    source: Vec<i32>,
    cols: Vec<FreeVector>,
}

impl FreeModuleMap {
    /// Validates shapes and homogeneity of every entry.
    pub fn new(target: Vec<i32>, source: Vec<i32>, cols: Vec<FreeVector>) -> Result<Self> {
        if cols.len() != source.len() {
            return Err(Error::InvalidArgument(format!(
                "{} columns for {} source degrees",
                cols.len(),
                source.len()
            )));
        }
        for (j, col) in cols.iter().enumerate() {
            if col.len() != target.len() {
                return Err(Error::InvalidArgument(format!(
                    "column {j} has {} entries, expected {}",
                    col.len(),
                    target.len()
                )));
            }
            for (i, p) in col.entries().iter().enumerate() {
                let want = source[j] - target[i];
                if !p.is_homogeneous() || p.degree().is_some_and(|d| d != want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i}, {j}) should be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(FreeModuleMap { target, source, cols })
    }

    /// Builds from a row-major table of polynomials; source degrees are
    /// inferred from the column entries (each column must have one nonzero
    /// entry unless `source` is given).
    pub fn from_rows(target: Vec<i32>, source: Vec<i32>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        if rows.len() != target.len() {
            return Err(Error::InvalidArgument("row count does not match target".into()));
        }
        let n = source.len();
        let mut cols = vec![FreeVector::zero(target.len()); n];
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!("row {i} has wrong length")));
            }
            for (j, p) in row.into_iter().enumerate() {
                cols[j].0[i] = p;
            }
        }
        Self::new(target, source, cols)
    }

    /// Infers source degrees from entries; zero columns are rejected.
    pub fn from_columns_infer(target: Vec<i32>, cols: Vec<FreeVector>) -> Result<Self> {
        let mut source = Vec::with_capacity(cols.len());
        for (j, c) in cols.iter().enumerate() {
            match c.degree(&target) {
                Some(d) => source.push(d),
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "cannot infer degree of zero column {j}"
                    )))
                }
            }
        }
        Self::new(target, source, cols)
    }

    pub fn identity(ring: &Ring, degrees: &[i32]) -> Self {
        let n = degrees.len();
        FreeModuleMap {
            target: degrees.to_vec(),
            source: degrees.to_vec(),
            cols: (0..n).map(|i| FreeVector::unit(ring, n, i)).collect(),
        }
    }

    pub fn zero(target: &[i32], source: &[i32]) -> Self {
        FreeModuleMap {
            target: target.to_vec(),
            source: source.to_vec(),
            cols: vec![FreeVector::zero(target.len()); source.len()],
        }
    }

    pub fn target_degrees(&self) -> &[i32] {
        &self.target
    }

    pub fn source_degrees(&self) -> &[i32] {
        &self.source
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &FreeVector {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(FreeVector::is_zero)
    }

    /// `Σ v_j · column_j`.
    pub fn apply(&self, ring: &Ring, v: &FreeVector) -> FreeVector {
        debug_assert_eq!(v.len(), self.ncols());
        let mut acc = FreeVector::zero(self.nrows());
        for (f, col) in v.entries().iter().zip(&self.cols) {
            if !f.is_zero() {
                acc.add_poly_multiple(ring, f, col);
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &Ring, other: &FreeModuleMap) -> Result<FreeModuleMap> {
        if self.source != other.target {
            return Err(Error::DegreeMismatch(
                "inner degree lists of a composition differ".into(),
            ));
        }
        Ok(FreeModuleMap {
            target: self.target.clone(),
            source: other.source.clone(),
            cols: other.cols.iter().map(|c| self.apply(ring, c)).collect(),
        })
    }

    /// Composition that ignores the twist bookkeeping of the inner modules,
    /// only requiring matching ranks; used for maps of nonzero degree.
    pub fn compose_shifted(&self, ring: &Ring, other: &FreeModuleMap, source: Vec<i32>) -> FreeModuleMap {
        assert_eq!(self.ncols(), other.nrows());
        FreeModuleMap {
            target: self.target.clone(),
            source,
            cols: other.cols.iter().map(|c| self.apply(ring, c)).collect(),
        }
    }

    pub fn add(&self, ring: &Ring, other: &FreeModuleMap) -> Result<FreeModuleMap> {
        if self.target != other.target || self.source != other.source {
            return Err(Error::DegreeMismatch("sum of maps with different degrees".into()));
        }
        Ok(FreeModuleMap {
            target: self.target.clone(),
            source: self.source.clone(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(ring, b)).collect(),
        })
    }

    pub fn neg(&self, ring: &Ring) -> FreeModuleMap {
        FreeModuleMap {
            target: self.target.clone(),
            source: self.source.clone(),
            cols: self.cols.iter().map(|c| c.neg(ring)).collect(),
        }
    }

    /// Side-by-side concatenation of maps with a common target.
    pub fn hcat(blocks: &[&FreeModuleMap]) -> Result<FreeModuleMap> {
        let Some(first) = blocks.first() else {
            return Err(Error::InvalidArgument("empty concatenation".into()));
        };
        let mut source = Vec::new();
        let mut cols = Vec::new();
        for b in blocks {
            if b.target != first.target {
                return Err(Error::DegreeMismatch("hcat of maps with different targets".into()));
            }
            source.extend_from_slice(&b.source);
            cols.extend(b.cols.iter().cloned());
        }
        Ok(FreeModuleMap {
            target: first.target.clone(),
            source,
            cols,
        })
    }

    pub fn block_diagonal(blocks: &[&FreeModuleMap]) -> FreeModuleMap {
        let target: Vec<i32> = blocks.iter().flat_map(|b| b.target.iter().copied()).collect();
        let source: Vec<i32> = blocks.iter().flat_map(|b| b.source.iter().copied()).collect();
        let mut cols = Vec::with_capacity(source.len());
        let mut offset = 0;
        for b in blocks {
            for c in &b.cols {
                let mut v = FreeVector::zero(target.len());
                for (i, p) in c.entries().iter().enumerate() {
                    v.0[offset + i] = p.clone();
                }
                cols.push(v);
            }
            offset += b.nrows();
        }
        FreeModuleMap { target, source, cols }
    }

    /// The dual map `Hom(target, R) → Hom(source, R)`, i.e. the transposed
    /// matrix with negated twists.
    pub fn dual(&self) -> FreeModuleMap {
        let target: Vec<i32> = self.source.iter().map(|d| -d).collect();
        let source: Vec<i32> = self.target.iter().map(|d| -d).collect();
        let cols = (0..self.nrows())
            .map(|i| FreeVector((0..self.ncols()).map(|j| self.entry(i, j).clone()).collect()))
            .collect();
        FreeModuleMap { target, source, cols }
    }

    pub fn select_columns(&self, idx: &[usize]) -> FreeModuleMap {
        FreeModuleMap {
            target: self.target.clone(),
            source: idx.iter().map(|&j| self.source[j]).collect(),
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> FreeModuleMap {
        FreeModuleMap {
            target: idx.iter().map(|&i| self.target[i]).collect(),
            source: self.source.clone(),
            cols: self
                .cols
                .iter()
                .map(|c| FreeVector(idx.iter().map(|&i| c.get(i).clone()).collect()))
                .collect(),
        }
    }

    /// Same matrix with every twist of the source raised by `shift`
    /// and every twist of the target raised by `target_shift`.
    pub fn shifted(&self, target_shift: i32, shift: i32) -> FreeModuleMap {
        FreeModuleMap {
            target: self.target.iter().map(|d| d + target_shift).collect(),
            source: self.source.iter().map(|d| d + shift).collect(),
            cols: self.cols.clone(),
        }
    }

    /// True if some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.cols
            .iter()
            .any(|c| c.entries().iter().any(|p| !p.is_zero() && p.is_constant()))
    }

    pub fn into_columns(self) -> Vec<FreeVector> {
        self.cols
    }

    pub fn rows_display(&self, ring: &Ring) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| self.entry(i, j).display(ring).to_string())
                    .collect()
            })
            .collect()
    }
}
