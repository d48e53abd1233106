//! Dense, degree-by-degree linear algebra used as an independent oracle.
//! Nothing here calls the Gröbner engine: graded pieces are spanned by
//! monomial multiples and compared by Gaussian elimination.
#![allow(dead_code)]

use std::collections::HashMap;

pub mod family;
pub mod jobs;

use syzygy_ncr::fpmod::{FPModule, FreeResolution};
use syzygy_ncr::groebner::FreeVector;
use syzygy_ncr::{Polynomial, RingRef};

pub type Exps = Vec<u16>;

/// Exponent vectors of total degree `deg` in `n` variables.
pub fn monomials(n: usize, deg: i32) -> Vec<Exps> {
    if deg < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials(n - 1, deg - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// Rank over `F_p` by row reduction.
pub fn rank(p: u32, rows: &[Vec<u32>]) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x as u64 % p).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let inv = |a: u64| -> u64 {
        let (mut b, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let s = inv(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = *x * s % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The degree-`t` piece of the free module with generator degrees `degs`.
pub struct Piece {
    pub keys: Vec<(usize, Exps)>,
    index: HashMap<(usize, Exps), usize>,
}

impl Piece {
    pub fn new(nvars: usize, degs: &[i32], t: i32) -> Piece {
        let keys: Vec<(usize, Exps)> = degs
            .iter()
            .enumerate()
            .flat_map(|(j, &e)| monomials(nvars, t - e).into_iter().map(move |m| (j, m)))
            .collect();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Piece { keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    /// Coordinates of `shift · v` (a monomial multiple).
    pub fn coords(&self, p: u32, v: &FreeVector, shift: &[u16]) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        for (j, f) in v.entries().iter().enumerate() {
            self.add_poly(p, &mut out, j, f, shift, 1);
        }
        out
    }

    /// Adds `c · f · x^shift · e_j` into `out`.
    pub fn add_poly(&self, p: u32, out: &mut [u32], j: usize, f: &Polynomial, shift: &[u16], c: u32) {
        for (m, a) in f.terms() {
            let e: Exps = m.exponents().iter().zip(shift).map(|(x, y)| x + y).collect();
            let i = *self.index.get(&(j, e)).expect("inhomogeneous input to the dense oracle");
            out[i] = ((out[i] as u64 + *a as u64 * c as u64) % p as u64) as u32;
        }
    }
}

/// Rows spanning the degree-`t` part of the submodule generated by `gens`.
pub fn span(p: u32, nvars: usize, ambient: &[i32], gens: &[FreeVector], t: i32) -> Vec<Vec<u32>> {
    let piece = Piece::new(nvars, ambient, t);
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = degree_of(g, ambient) else { continue };
        for m in monomials(nvars, t - e) {
            rows.push(piece.coords(p, g, &m));
        }
    }
    rows
}

fn degree_of(v: &FreeVector, ambient: &[i32]) -> Option<i32> {
    v.entries()
        .iter()
        .enumerate()
        .find_map(|(j, f)| f.terms().first().map(|(m, _)| m.degree() + ambient[j]))
}

/// Is `v` (homogeneous) in the submodule generated by `gens`?
pub fn in_submodule(ring: &RingRef, ambient: &[i32], gens: &[FreeVector], v: &FreeVector) -> bool {
    let p = ring.field().characteristic();
    let Some(t) = degree_of(v, ambient) else { return true };
    let mut rows = span(p, ring.nvars(), ambient, gens, t);
    let before = rank(p, &rows);
    rows.push(Piece::new(ring.nvars(), ambient, t).coords(p, v, &vec![0; ring.nvars()]));
    rank(p, &rows) == before
}

/// Presentation data read off a module: generator degrees and relation columns.
pub struct Pres {
    pub gens: Vec<i32>,
    pub rels: Vec<FreeVector>,
}

impl Pres {
    pub fn of(m: &FPModule) -> Pres {
        Pres {
            gens: m.gen_degrees().to_vec(),
            rels: m.relations().columns().to_vec(),
        }
    }

    pub fn free(degs: &[i32]) -> Pres {
        Pres { gens: degs.to_vec(), rels: Vec::new() }
    }
}

/// `dim_k N_t`.
pub fn piece_dim(ring: &RingRef, n: &Pres, t: i32) -> usize {
    let p = ring.field().characteristic();
    Piece::new(ring.nvars(), &n.gens, t).dim() - rank(p, &span(p, ring.nvars(), &n.gens, &n.rels, t))
}

/// `Hom(F, N)_d → Hom(G, N)_d` induced by `cols: G → F` (columns on `F`'s
/// generators `f_degs`), as rows on the free cover of the target. Returns the
/// rank of the induced map on the quotients and `dim` of the source quotient.
struct Pullback {
    source_free: usize,
    source_rel: usize,
    rank_mod: usize,
}

fn pullback(ring: &RingRef, f_degs: &[i32], cols: &[FreeVector], n: &Pres, d: i32) -> Pullback {
    let p = ring.field().characteristic();
    let r = ring.nvars();
    let cols: Vec<&FreeVector> = cols.iter().filter(|c| !c.is_zero()).collect();
    let col_degs: Vec<i32> = cols.iter().map(|c| degree_of(c, f_degs).unwrap()).collect();
    let blocks: Vec<Piece> = col_degs.iter().map(|&e| Piece::new(r, &n.gens, e + d)).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.dim();
            Some(o)
        })
        .collect();
    let width: usize = blocks.iter().map(Piece::dim).sum();

    let mut rows = Vec::new();
    let mut source_free = 0;
    let mut source_rel = 0;
    for (j, &s) in f_degs.iter().enumerate() {
        let src = Piece::new(r, &n.gens, s + d);
        source_free += src.dim();
        source_rel += rank(p, &span(p, r, &n.gens, &n.rels, s + d));
        for (comp, mon) in &src.keys {
            let mut row = vec![0u32; width];
            for (b, col) in cols.iter().enumerate() {
                let mut block = vec![0u32; blocks[b].dim()];
                blocks[b].add_poly(p, &mut block, *comp, col.get(j), mon, 1);
                row[offsets[b]..offsets[b] + block.len()].copy_from_slice(&block);
            }
            rows.push(row);
        }
    }
    let mut rel_rank = 0;
    for (b, &e) in col_degs.iter().enumerate() {
        let u = span(p, r, &n.gens, &n.rels, e + d);
        rel_rank += rank(p, &u);
        for urow in u {
            let mut row = vec![0u32; width];
            row[offsets[b]..offsets[b] + urow.len()].copy_from_slice(&urow);
            rows.push(row);
        }
    }
    Pullback {
        source_free,
        source_rel,
        rank_mod: rank(p, &rows) - rel_rank,
    }
}

/// `dim_k Hom(M, N)_d` from the presentation of `M`.
pub fn hom_dim(ring: &RingRef, m: &Pres, n: &Pres, d: i32) -> usize {
    let pb = pullback(ring, &m.gens, &m.rels, n, d);
    pb.source_free - pb.rank_mod - pb.source_rel
}

/// `dim_k Ext^i(M, N)_d` as cohomology of `Hom(F_•, N)_d` for a free
/// resolution given by its modules and differentials `maps[c]: F_{c+1} → F_c`.
pub fn ext_dim(ring: &RingRef, frees: &[Vec<i32>], maps: &[Vec<FreeVector>], n: &Pres, i: usize, d: i32) -> usize {
    let empty: Vec<i32> = Vec::new();
    let f = |c: usize| frees.get(c).unwrap_or(&empty);
    let next = maps.get(i).cloned().unwrap_or_default();
    let out = pullback(ring, f(i), &next, n, d);
    let ker = out.source_free - out.rank_mod - out.source_rel;
    let im = if i == 0 {
        0
    } else {
        pullback(ring, f(i - 1), maps.get(i - 1).map_or(&[][..], |v| v), n, d).rank_mod
    };
    ker - im
}

pub fn resolution_data(res: &FreeResolution) -> (Vec<Vec<i32>>, Vec<Vec<FreeVector>>) {
    (res.frees.clone(), res.maps.iter().map(|m| m.columns().to_vec()).collect())
}

/// Dense check that `F_•` is a resolution of `m` in degrees `lo..=hi`:
/// `d ∘ d = 0`, exact in positive homological degree, cokernel of `d_1`
/// has the dimensions of `m`.
pub fn check_resolution(ring: &RingRef, m: &FPModule, res: &FreeResolution, lo: i32, hi: i32) -> bool {
    let (frees, maps) = resolution_data(res);
    let pm = Pres::of(m);
    (lo..=hi).all(|t| {
        let mut ok = chain_homology(ring, &frees, &maps, 0, t) == piece_dim(ring, &pm, t);
        for i in 1..=frees.len() {
            ok &= chain_homology(ring, &frees, &maps, i, t) == 0;
        }
        ok
    })
}

/// `dim H_i(F_•)_t` for a complex of free modules (`maps[c]: F_{c+1} → F_c`).
pub fn chain_homology(ring: &RingRef, frees: &[Vec<i32>], maps: &[Vec<FreeVector>], i: usize, t: i32) -> usize {
    let p = ring.field().characteristic();
    let r = ring.nvars();
    let empty: Vec<i32> = Vec::new();
    let f = |c: usize| frees.get(c).unwrap_or(&empty);
    let image_rank = |c: usize| -> usize {
        // rank of d_{c+1}: F_{c+1} → F_c in degree t
        match maps.get(c) {
            None => 0,
            Some(cols) => {
                let tgt = Piece::new(r, f(c), t);
                let mut rows = Vec::new();
                for (j, col) in cols.iter().enumerate() {
                    for m in monomials(r, t - f(c + 1)[j]) {
                        rows.push(tgt.coords(p, col, &m));
                    }
                }
                rank(p, &rows)
            }
        }
    };
    let dim = Piece::new(r, f(i), t).dim();
    let out = if i == 0 { 0 } else { image_rank(i - 1) };
    dim - out - image_rank(i)
}

/// Koszul complex on homogeneous `fs`: `K_i` has basis the `i`-subsets.
pub fn koszul(ring: &RingRef, fs: &[Polynomial]) -> (Vec<Vec<i32>>, Vec<Vec<FreeVector>>) {
    let n = fs.len();
    let deg = |s: &[usize]| s.iter().map(|&k| fs[k].degree().unwrap()).sum::<i32>();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|i| {
            (0u32..1 << n)
                .filter(|b| b.count_ones() as usize == i)
                .map(|b| (0..n).filter(|k| b >> k & 1 == 1).collect())
                .collect()
        })
        .collect();
    let frees = subsets.iter().map(|ss| ss.iter().map(|s| deg(s)).collect()).collect();
    let p = ring.field();
    let maps = (1..=n)
        .map(|i| {
            subsets[i]
                .iter()
                .map(|s| {
                    let mut col = vec![Polynomial::zero(); subsets[i - 1].len()];
                    for (pos, &k) in s.iter().enumerate() {
                        let rest: Vec<usize> = s.iter().copied().filter(|&x| x != k).collect();
                        let row = subsets[i - 1].iter().position(|t| *t == rest).unwrap();
                        col[row] = if pos % 2 == 0 { fs[k].clone() } else { fs[k].scale(ring, p.from_i64(-1)) };
                    }
                    FreeVector::from_polys(col)
                })
                .collect()
        })
        .collect();
    (frees, maps)
}

/// `grade` of a module with annihilator generated by `ann`, as
/// `n - max{i : H_i(K(ann; R)) ≠ 0}`, homology probed in degrees `0..=top`.
pub fn koszul_grade(ring: &RingRef, ann: &[Polynomial], top: i32) -> usize {
    let (frees, maps) = koszul(ring, ann);
    let n = ann.len();
    let last = (0..=n)
        .rev()
        .find(|&i| (0..=top).any(|t| chain_homology(ring, &frees, &maps, i, t) > 0))
        .expect("H_0 is nonzero for a proper ideal");
    n - last
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
