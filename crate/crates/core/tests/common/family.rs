//! The test family and the engine-versus-oracle checks run on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzygy_ncr::fpmod::{hilbert_range, syzygy, FPModule, ModuleRef};
use syzygy_ncr::groebner::FreeVector;
use syzygy_ncr::homalg::{ext, hom_module};
use syzygy_ncr::{Monomial, Polynomial, Ring, RingRef};

use super::*;

fn ring(n: usize) -> RingRef {
    Ring::standard_in(n)
}

fn rows(r: &RingRef, gens: Vec<i32>, rows: &[&[&str]]) -> ModuleRef {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    FPModule::from_rows(r, gens, &rows).unwrap()
}

/// Modules over at most three variables used for cross-validation.
pub fn modules() -> Vec<(String, ModuleRef)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let r = ring(n);
        let k = FPModule::residue_field(&r);
        out.push((format!("k/{n}"), k.clone()));
        out.push((format!("R/m^2/{n}"), FPModule::power_of_maximal_quotient(&r, 2)));
        out.push((format!("m/{n}"), syzygy(&k, 1).unwrap()));
        if n >= 2 {
            out.push((format!("Ω^2 k/{n}"), syzygy(&k, 2).unwrap()));
        }
    }
    let r2 = ring(2);
    out.push(("R/(x^2,y^3)".into(), rows(&r2, vec![0], &[&["x^2", "y^3"]])));
    let r3 = ring(3);
    out.push(("R/(xy,yz,xz)".into(), rows(&r3, vec![0], &[&["x*y", "y*z", "x*z"]])));
    out.push((
        "two-generator".into(),
        rows(&r3, vec![0, 1], &[&["x^2", "0", "y^3"], &["y", "z^2", "x^2"]]),
    ));
    out
}

fn vector_from_coords(ring: &RingRef, piece: &Piece, coords: &[u32], ncomp: usize) -> FreeVector {
    let mut terms: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); ncomp];
    for (i, &c) in coords.iter().enumerate() {
        if c != 0 {
            let (j, e) = &piece.keys[i];
            terms[*j].push((Monomial::from_exponents(e), c));
        }
    }
    FreeVector::from_polys(terms.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// Gröbner membership and graded dimensions against dense spans, in all
/// degrees up to 6; returns the number of comparisons.
pub fn check_membership(seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    for (name, m) in modules() {
        let r = m.ring().clone();
        let p = r.field().characteristic();
        let gb = m.relation_basis();
        let rels = m.relations().columns().to_vec();
        let lo = m.gen_degrees().iter().copied().min().unwrap_or(0);
        for t in lo..=6 {
            let piece = Piece::new(r.nvars(), m.gen_degrees(), t);
            let span_rows = span(p, r.nvars(), m.gen_degrees(), &rels, t);
            if piece.dim() - rank(p, &span_rows) != hilbert_range(&m, t, t)[0] {
                return Err(format!("{name}: dimension in degree {t}"));
            }
            checks += 1;
            if piece.dim() == 0 {
                continue;
            }
            for trial in 0..12 {
                let coords: Vec<u32> = if trial % 2 == 0 || span_rows.is_empty() {
                    (0..piece.dim()).map(|_| rng.gen_range(0..p)).collect()
                } else {
                    let mut acc = vec![0u64; piece.dim()];
                    for row in &span_rows {
                        let a = rng.gen_range(0..p) as u64;
                        for (x, y) in acc.iter_mut().zip(row) {
                            *x = (*x + a * *y as u64) % p as u64;
                        }
                    }
                    acc.into_iter().map(|x| x as u32).collect()
                };
                let v = vector_from_coords(&r, &piece, &coords, m.ngens());
                if gb.contains(&v) != in_submodule(&r, m.gen_degrees(), &rels, &v) {
                    return Err(format!("{name}: membership in degree {t}"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

pub fn hom_ext_instances() -> Vec<(String, ModuleRef, ModuleRef)> {
    let r2 = ring(2);
    let r3 = ring(3);
    let k2 = FPModule::residue_field(&r2);
    let k3 = FPModule::residue_field(&r3);
    let m2 = syzygy(&k2, 1).unwrap();
    let q2 = FPModule::power_of_maximal_quotient(&r2, 2);
    let ci = rows(&r2, vec![0], &[&["x^2", "y^3"]]);
    vec![
        ("(m, m)".into(), m2.clone(), m2.clone()),
        ("(k, R/m^2)".into(), k2.clone(), q2.clone()),
        ("(R/m^2, R/m^2)".into(), q2.clone(), q2),
        ("(R/(x^2,y^3), k)".into(), ci.clone(), k2.clone()),
        ("(k, R) over 2".into(), k2.clone(), FPModule::free(&r2, &[0])),
        ("(m, R)".into(), m2, FPModule::free(&r2, &[0])),
        ("(Ω^2 k, m) over 3".into(), syzygy(&k3, 2).unwrap(), syzygy(&k3, 1).unwrap()),
        ("(k, R) over 3".into(), k3.clone(), FPModule::free(&r3, &[0])),
    ]
}

/// Graded pieces of `Hom(M, N)` in degrees `-3..=4`.
pub fn check_hom() -> Result<usize, String> {
    let mut checks = 0;
    for (name, m, n) in hom_ext_instances() {
        let r = m.ring().clone();
        let h = hom_module(&m, &n).unwrap();
        for d in -3..=4 {
            if hilbert_range(&h.module, d, d)[0] != hom_dim(&r, &Pres::of(&m), &Pres::of(&n), d) {
                return Err(format!("Hom{name} in degree {d}"));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// Graded pieces of `Ext^i(M, N)` in degrees `-4..=3`, against the
/// cohomology of `Hom(F, N)` for a resolution checked exact by dense ranks.
pub fn check_ext() -> Result<usize, String> {
    let mut checks = 0;
    for (name, m, n) in hom_ext_instances() {
        let r = m.ring().clone();
        let res = m.resolution();
        if !check_resolution(&r, &m, &res, -1, 6) {
            return Err(format!("{name}: resolution is not exact"));
        }
        let (frees, maps) = resolution_data(&res);
        for i in 0..=r.nvars() {
            let e = ext(i as i32, &m, &n).unwrap();
            for d in -4..=3 {
                if hilbert_range(&e, d, d)[0] != ext_dim(&r, &frees, &maps, &Pres::of(&n), i, d) {
                    return Err(format!("Ext^{i}{name} in degree {d}"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

/// `Ext^i(k, R/m²)` through the Koszul complex instead of the engine's resolution.
pub fn check_ext_koszul() -> Result<usize, String> {
    let mut checks = 0;
    for n in 1..=3 {
        let r = ring(n);
        let k = FPModule::residue_field(&r);
        let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&r, i)).collect();
        let (frees, maps) = koszul(&r, &vars);
        let target = FPModule::power_of_maximal_quotient(&r, 2);
        for i in 0..=n {
            let e = ext(i as i32, &k, &target).unwrap();
            for d in -4..=2 {
                if hilbert_range(&e, d, d)[0] != ext_dim(&r, &frees, &maps, &Pres::of(&target), i, d) {
                    return Err(format!("Ext^{i}(k, R/m^2) over {n} variables, degree {d}"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

pub fn random_poly(r: &RingRef, rng: &mut ChaCha8Rng, degrees: std::ops::RangeInclusive<i32>, homogeneous: Option<i32>) -> Polynomial {
    let mut terms = Vec::new();
    let p = r.field().characteristic();
    for d in degrees {
        if homogeneous.is_some_and(|h| h != d) {
            continue;
        }
        for e in monomials(r.nvars(), d) {
            if rng.gen_bool(0.4) {
                terms.push((Monomial::from_exponents(&e), rng.gen_range(1..p)));
            }
        }
    }
    Polynomial::from_terms(r, terms)
}

