//! Even nilpotent elements of gl(m|n) given by Jordan types, their
//! sl₂-triples, Dynkin gradings, centralizers, the symplectic superspace
//! `V = [f, g]`, the odd Lagrangian and the torus weights that enter the
//! character formulas.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::levi::LeviDatum;
use crate::linalg::{kernel, rank, span_basis, Mat};
use crate::scalar::{int, Scalar};
use crate::superalgebra::{bracket, chi, Algebra, Family, SuperMatrix, TorusWeight};

/// Jordan types of the gl_m and gl_n components of an even nilpotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPair {
    pub part_m: Vec<usize>,
    pub part_n: Vec<usize>,
}

impl PartitionPair {
    pub fn new(part_m: Vec<usize>, part_n: Vec<usize>) -> Self {
        PartitionPair { part_m, part_n }
    }

    /// Parses `"p1,p2,...|q1,q2,..."`.
    pub fn parse(s: &str) -> Result<PartitionPair> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::ParseError(format!("partition pair {s:?} must contain '|'")))?;
        let part = |p: &str| -> Result<Vec<usize>> {
            let p = p.trim();
            if p.is_empty() {
                return Ok(Vec::new());
            }
            p.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::ParseError(format!("bad part {x:?} in {s:?}")))
                })
                .collect()
        };
        Ok(PartitionPair { part_m: part(l)?, part_n: part(r)? })
    }

    pub fn validate(&self, m: usize, n: usize) -> Result<()> {
        for (p, total, side) in [(&self.part_m, m, "m"), (&self.part_n, n, "n")] {
            if p.contains(&0) {
                return Err(Error::InvalidPartition(format!("zero part in {self}")));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!("parts of {self} must weakly decrease")));
            }
            if p.iter().sum::<usize>() != total {
                return Err(Error::InvalidPartition(format!("{self}: parts must sum to {side} = {total}")));
            }
        }
        Ok(())
    }

    /// Jordan blocks as index intervals of the natural representation.
    pub fn blocks(&self, m: usize) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut s = 0;
        for &p in &self.part_m {
            out.push(s..s + p);
            s += p;
        }
        s = m;
        for &p in &self.part_n {
            out.push(s..s + p);
            s += p;
        }
        out
    }

    /// All partition pairs of (m|n).
    pub fn all(m: usize, n: usize) -> Vec<PartitionPair> {
        let pm = partitions(m);
        let pn = partitions(n);
        pm.iter()
            .flat_map(|a| pn.iter().map(move |b| PartitionPair::new(a.clone(), b.clone())))
            .collect()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", j(&self.part_m), j(&self.part_n))
    }
}

/// Partitions of `k` in weakly decreasing order, lexicographically
/// decreasing.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: SuperMatrix,
    pub h: SuperMatrix,
    pub f: SuperMatrix,
}

impl Sl2Triple {
    pub fn relations_hold(&self) -> bool {
        let ok = |a: Result<SuperMatrix>, b: SuperMatrix| a.map(|x| x == b).unwrap_or(false);
        ok(bracket(&self.h, &self.e), self.e.scale(&int(2)))
            && ok(bracket(&self.h, &self.f), self.f.scale(&int(-2)))
            && ok(bracket(&self.e, &self.f), self.h.clone())
    }
}

/// Jordan-form sl₂-triple: on a block of size d, `e` is the upper shift,
/// `h = diag(d-1, d-3, ..., 1-d)` and `f` the matching lower shift.
pub fn build_sl2(alg: &Algebra, p: &PartitionPair) -> Result<Sl2Triple> {
    if alg.datum.family == Family::Osp {
        return Err(Error::UnsupportedFamily(
            "nilpotents are parametrized by partition pairs for gl(m|n) and sl(m|n) only".into(),
        ));
    }
    p.validate(alg.datum.m, alg.datum.n)?;
    let mut e = alg.zero();
    let mut f = alg.zero();
    let mut hdiag = vec![Scalar::zero(); alg.size()];
    for block in p.blocks(alg.datum.m) {
        let d = block.len() as i64;
        let s = block.start;
        for k in 0..block.len() {
            hdiag[s + k] = int(d - 1 - 2 * k as i64);
            if k + 1 < block.len() {
                e.set(s + k, s + k + 1, int(1));
                let c = (k as i64 + 1) * (d - 1 - k as i64);
                f.set(s + k + 1, s + k, int(c));
            }
        }
    }
    let t = Sl2Triple { e, h: alg.diagonal(&hdiag), f };
    debug_assert!(t.relations_hold());
    Ok(t)
}

/// ad(h)-eigenspace decomposition of the algebra: basis indices keyed by
/// (degree, odd).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingTable {
    pub pieces: BTreeMap<(i64, bool), Vec<usize>>,
}

impl GradingTable {
    /// A table with the given dimensions and placeholder indices; used to
    /// drive the dimension checks directly.
    pub fn from_dims(dims: &[((i64, bool), usize)]) -> Self {
        let mut next = 0;
        let mut pieces = BTreeMap::new();
        for &(k, d) in dims {
            pieces.insert(k, (next..next + d).collect());
            next += d;
        }
        GradingTable { pieces }
    }

    pub fn dim(&self, degree: i64, odd: bool) -> usize {
        self.pieces.get(&(degree, odd)).map_or(0, Vec::len)
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.pieces.keys().map(|k| k.0).collect();
        d.dedup();
        d
    }

    /// The adjusted symplectic space needed when dim g(-1)_odd is odd is
    /// not implemented; this check rejects such gradings.
    pub fn check_odd_part_even(&self) -> Result<()> {
        let d = self.dim(-1, true);
        if d % 2 == 1 {
            return Err(Error::OddDimensionalOddPart(d));
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.pieces.keys().all(|&(i, p)| self.dim(i, p) == self.dim(-i, p))
    }
}

/// A graded piece of a subspace, given by a basis of matrices.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    pub degree: i64,
    pub odd: bool,
    pub basis: Vec<SuperMatrix>,
}

#[derive(Debug, Clone)]
pub struct SymplecticSpace {
    pub basis: Vec<(SuperMatrix, i64, bool)>,
    /// ω(x, y) = χ([x, y]) on `basis`.
    pub gram: Mat,
}

impl SymplecticSpace {
    pub fn dim(&self, odd: bool) -> usize {
        self.basis.iter().filter(|b| b.2 == odd).count()
    }
}

#[derive(Debug, Clone)]
pub struct Lagrangian {
    pub u: Vec<SuperMatrix>,
    pub u_dual: Vec<SuperMatrix>,
}

/// An even nilpotent with its sl₂-triple and all derived graded data.
#[derive(Debug, Clone)]
pub struct NilpotentDatum {
    pub algebra: Algebra,
    pub partitions: PartitionPair,
    pub triple: Sl2Triple,
    pub grading: GradingTable,
    /// Degree of each basis element.
    pub degrees: Vec<i64>,
    ad_e: Mat,
    ad_f: Mat,
}

impl NilpotentDatum {
    pub fn build(alg: &Algebra, p: &PartitionPair) -> Result<NilpotentDatum> {
        let triple = build_sl2(alg, p)?;
        let (grading, degrees) = dynkin_grading(alg, &triple)?;
        let ad_e = alg.ad(&triple.e)?;
        let ad_f = alg.ad(&triple.f)?;
        Ok(NilpotentDatum {
            algebra: alg.clone(),
            partitions: p.clone(),
            triple,
            grading,
            degrees,
            ad_e,
            ad_f,
        })
    }

    pub fn e(&self) -> &SuperMatrix {
        &self.triple.e
    }

    pub fn f(&self) -> &SuperMatrix {
        &self.triple.f
    }

    pub fn h(&self) -> &SuperMatrix {
        &self.triple.h
    }

    fn indices(&self, odd: Option<bool>, degree: Option<i64>) -> Vec<usize> {
        self.grading
            .pieces
            .iter()
            .filter(|((d, p), _)| odd.is_none_or(|o| o == *p) && degree.is_none_or(|x| x == *d))
            .flat_map(|(_, v)| v.iter().copied())
            .collect()
    }

    /// Kernel of `ad e` on the span of the given basis indices, as
    /// coordinate vectors. The indices must span an ad(e)-graded piece.
    fn ad_e_kernel_on(&self, cols: &[usize]) -> Vec<Vec<Scalar>> {
        let sub: Mat = self.ad_e.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        kernel(&sub, cols.len())
            .into_iter()
            .map(|v| {
                let mut full = vec![Scalar::zero(); self.algebra.dim()];
                for (x, &c) in v.into_iter().zip(cols) {
                    full[c] = x;
                }
                full
            })
            .collect()
    }

    /// Image of `ad f` on the span of the given basis indices, as
    /// coordinate vectors.
    fn ad_f_image_on(&self, cols: &[usize]) -> Vec<Vec<Scalar>> {
        let images: Vec<Vec<Scalar>> =
            cols.iter().map(|&c| self.ad_f.iter().map(|row| row[c].clone()).collect()).collect();
        span_basis(&images)
    }

    /// Basis of `ker(ad e)` in the requested parity and degree (either may
    /// be left open), one piece per (degree, parity).
    pub fn centralizer(&self, odd: Option<bool>, degree: Option<i64>) -> Vec<GradedPiece> {
        self.grading
            .pieces
            .keys()
            .filter(|(d, p)| odd.is_none_or(|o| o == *p) && degree.is_none_or(|x| x == *d))
            .map(|&(d, p)| {
                let cols = &self.grading.pieces[&(d, p)];
                GradedPiece {
                    degree: d,
                    odd: p,
                    basis: self.ad_e_kernel_on(cols).iter().map(|v| self.algebra.combine(v)).collect(),
                }
            })
            .filter(|piece| !piece.basis.is_empty())
            .collect()
    }

    pub fn centralizer_dim(&self, odd: Option<bool>) -> usize {
        self.centralizer(odd, None).iter().map(|p| p.basis.len()).sum()
    }

    /// Degree multiset of g^e of the given parity.
    pub fn centralizer_degrees(&self, odd: bool) -> Vec<i64> {
        self.centralizer(Some(odd), None)
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.degree, p.basis.len()))
            .collect()
    }

    /// `[f, g]` split by degree and parity.
    pub fn image_of_f(&self) -> Vec<GradedPiece> {
        let mut out = Vec::new();
        for &(d, p) in self.grading.pieces.keys() {
            let cols = self.indices(Some(p), Some(d + 2));
            let img = self.ad_f_image_on(&cols);
            if !img.is_empty() {
                out.push(GradedPiece {
                    degree: d,
                    odd: p,
                    basis: img.iter().map(|v| self.algebra.combine(v)).collect(),
                });
            }
        }
        out
    }

    /// Degree multiset of `[f, g]` of the given parity.
    pub fn image_degrees(&self, odd: bool) -> Vec<i64> {
        self.image_of_f()
            .iter()
            .filter(|p| p.odd == odd)
            .flat_map(|p| std::iter::repeat_n(p.degree, p.basis.len()))
            .collect()
    }

    /// Degree multiset of all of g of the given parity.
    pub fn algebra_degrees(&self, odd: bool) -> Vec<i64> {
        self.grading
            .pieces
            .iter()
            .filter(|((_, p), _)| *p == odd)
            .flat_map(|((d, _), v)| std::iter::repeat_n(*d, v.len()))
            .collect()
    }

    /// Whether g^e sits in non-negative degrees.
    pub fn grading_is_good(&self) -> bool {
        self.centralizer(None, None).iter().all(|p| p.degree >= 0)
    }

    /// Whether `g = g^e ⊕ [f, g]` (dimension count plus independence).
    pub fn centralizer_complement_is_direct(&self) -> bool {
        let mut vecs: Vec<Vec<Scalar>> = Vec::new();
        for p in self.centralizer(None, None).iter().chain(self.image_of_f().iter()) {
            vecs.extend(p.basis.iter().map(|x| self.algebra.coords(x)));
        }
        vecs.len() == self.algebra.dim() && rank(&vecs) == self.algebra.dim()
    }

    /// `V = [f, g]` with the form ω(x, y) = χ([x, y]).
    pub fn symplectic_space(&self) -> Result<SymplecticSpace> {
        self.grading.check_odd_part_even()?;
        let basis: Vec<(SuperMatrix, i64, bool)> = self
            .image_of_f()
            .into_iter()
            .flat_map(|p| p.basis.into_iter().map(move |b| (b, p.degree, p.odd)))
            .collect();
        let gram = self.omega_gram(
            &basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>(),
            &basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>(),
        )?;
        Ok(SymplecticSpace { basis, gram })
    }

    pub fn omega(&self, x: &SuperMatrix, y: &SuperMatrix) -> Result<Scalar> {
        chi(&bracket(x, y)?, self.e())
    }

    pub fn omega_gram(&self, xs: &[SuperMatrix], ys: &[SuperMatrix]) -> Result<Mat> {
        xs.iter()
            .map(|x| ys.iter().map(|y| self.omega(x, y)).collect::<Result<Vec<_>>>())
            .collect()
    }

    fn z_degree_indices(&self, z: i32) -> Vec<usize> {
        let d = &self.algebra.datum;
        (0..self.algebra.dim())
            .filter(|&i| {
                let b = &self.algebra.basis()[i];
                b.odd && d.super_z_degree(&b.weight) == z
            })
            .collect()
    }

    /// `u = V_odd ∩ g_{+1} = [f, g_{+1}]` and its ω-dual
    /// `V_odd ∩ g_{-1} = [f, g_{-1}]`. Both halves are isotropic because
    /// `[g_{±1}, g_{±1}] = 0`; the pairing between them is checked to be
    /// nondegenerate.
    pub fn lagrangian_odd(&self) -> Result<Lagrangian> {
        self.grading.check_odd_part_even()?;
        let d = &self.algebra.datum;
        if d.odd_positive_roots.iter().any(|r| d.super_z_degree(r) != 1) {
            return Err(Error::NotTypeI(d.name()));
        }
        let to_mats = |v: Vec<Vec<Scalar>>| -> Vec<SuperMatrix> {
            v.iter().map(|c| self.algebra.combine(c)).collect()
        };
        let u = to_mats(self.ad_f_image_on(&self.z_degree_indices(1)));
        let u_dual = to_mats(self.ad_f_image_on(&self.z_degree_indices(-1)));
        if u.len() != u_dual.len() {
            return Err(Error::NotTypeI(format!(
                "halves of V_odd have dimensions {} and {}",
                u.len(),
                u_dual.len()
            )));
        }
        let pairing = self.omega_gram(&u, &u_dual)?;
        if rank(&pairing) != u.len() {
            return Err(Error::NotTypeI("ω does not pair the odd halves nondegenerately".into()));
        }
        Ok(Lagrangian { u, u_dual })
    }

    pub fn u1_dim(&self) -> Result<usize> {
        Ok(self.lagrangian_odd()?.u.len())
    }

    fn check_in_levi(&self, ld: &LeviDatum) -> Result<()> {
        let intervals = ld.levi.intervals();
        for jb in self.partitions.blocks(self.algebra.datum.m) {
            if !intervals.iter().any(|r| r.start <= jb.start && jb.end <= r.end) {
                return Err(Error::NilpotentNotInLevi(format!(
                    "Jordan block {}..{} of {} crosses the Levi {}",
                    jb.start + 1,
                    jb.end,
                    self.partitions,
                    ld.levi
                )));
            }
        }
        Ok(())
    }

    /// Basis indices with the given parity (and optional super ℤ-degree),
    /// grouped by their t-weight.
    fn torus_groups(&self, ld: &LeviDatum, odd: bool, z: Option<i32>) -> BTreeMap<TorusWeight, Vec<usize>> {
        let d = &self.algebra.datum;
        let mut out: BTreeMap<TorusWeight, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.algebra.basis().iter().enumerate() {
            if b.odd != odd || z.is_some_and(|z| d.super_z_degree(&b.weight) != z) {
                continue;
            }
            out.entry(ld.levi.restrict(&b.weight)).or_default().push(i);
        }
        out
    }

    /// t-weights (with multiplicity) of `(g_0)_{<0} ∩ z_{g_0}(e)`, where
    /// `(g_0)_{<0}` is the sum of negative ad(θ)-eigenspaces of the even
    /// part. Sorted.
    pub fn denominator_weights(&self, ld: &LeviDatum) -> Result<Vec<TorusWeight>> {
        self.check_in_levi(ld)?;
        let mut out = Vec::new();
        for (nu, cols) in self.torus_groups(ld, false, None) {
            if ld.pair(&nu) >= Scalar::zero() {
                continue;
            }
            let mult = self.ad_e_kernel_on(&cols).len();
            out.extend(std::iter::repeat_n(nu, mult));
        }
        Ok(out)
    }

    /// t-weights (with multiplicity) of the Lagrangian dual `[f, g_{-1}]`,
    /// or of `[f, g_{+1}]` when `swap` is set. Sorted.
    pub fn clifford_weights(&self, ld: &LeviDatum, swap: bool) -> Result<Vec<TorusWeight>> {
        self.check_in_levi(ld)?;
        self.lagrangian_odd()?;
        let z = if swap { 1 } else { -1 };
        let mut out = Vec::new();
        for (nu, cols) in self.torus_groups(ld, true, Some(z)) {
            let mult = self.ad_f_image_on(&cols).len();
            out.extend(std::iter::repeat_n(nu, mult));
        }
        Ok(out)
    }

    /// Dimension factor `2^{dim u}` relating W-tilde-modules and W-modules.
    pub fn module_dimension_factor(&self) -> Result<u64> {
        Ok(1u64 << self.u1_dim()?)
    }
}

/// Grades the weight basis by ad(h); the basis consists of ad(h)
/// eigenvectors because h is diagonal.
pub fn dynkin_grading(alg: &Algebra, t: &Sl2Triple) -> Result<(GradingTable, Vec<i64>)> {
    let mut pieces: BTreeMap<(i64, bool), Vec<usize>> = BTreeMap::new();
    let mut degrees = Vec::with_capacity(alg.dim());
    for (i, b) in alg.basis().iter().enumerate() {
        let ev = alg.pair_diagonal(&b.weight, &t.h)?;
        if !ev.is_integer() {
            return Err(Error::NonIntegralGrading(format!("eigenvalue {ev} on {}", b.label)));
        }
        let d: i64 = ev.to_integer().try_into().expect("small degree");
        debug_assert_eq!(bracket(&t.h, &b.matrix)?, b.matrix.scale(&ev));
        degrees.push(d);
        pieces.entry((d, b.odd)).or_default().push(i);
    }
    Ok((GradingTable { pieces }, degrees))
}

/// Sorted copy, for multiset comparisons.
pub fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::Levi;
    use crate::scalar::rat;

    fn datum(alg: &str, p: &str) -> NilpotentDatum {
        let a = Algebra::parse(alg).unwrap();
        NilpotentDatum::build(&a, &PartitionPair::parse(p).unwrap()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(0), vec![Vec::<usize>::new()]);
        assert_eq!(PartitionPair::all(2, 1).len(), 2);
    }

    #[test]
    fn sl2_examples() {
        let a = Algebra::parse("gl(2|1)").unwrap();
        let t = build_sl2(&a, &PartitionPair::parse("2|1").unwrap()).unwrap();
        assert_eq!(t.e, a.unit(0, 1));
        assert_eq!(t.f, a.unit(1, 0));
        assert_eq!(t.h, a.diagonal(&[int(1), int(-1), int(0)]));
        let z = build_sl2(&a, &PartitionPair::parse("1,1|1").unwrap()).unwrap();
        assert!(z.e.is_zero() && z.h.is_zero() && z.f.is_zero());
        let b = Algebra::parse("gl(3|1)").unwrap();
        let t = build_sl2(&b, &PartitionPair::parse("2,1|1").unwrap()).unwrap();
        assert_eq!(t.e, b.unit(0, 1));
        assert_eq!(t.h, b.diagonal(&[int(1), int(-1), int(0), int(0)]));
        assert!(t.relations_hold());
        // a 4-block and a 3-block
        let c = Algebra::parse("gl(4|3)").unwrap();
        assert!(build_sl2(&c, &PartitionPair::parse("4|3").unwrap()).unwrap().relations_hold());
    }

    #[test]
    fn invalid_partitions() {
        let a = Algebra::parse("gl(3|1)").unwrap();
        for p in ["1,2|1", "2|1", "3,0|1", "3|2"] {
            assert!(matches!(
                build_sl2(&a, &PartitionPair::parse(p).unwrap()),
                Err(Error::InvalidPartition(_))
            ));
        }
        let osp = Algebra::parse("osp(2|2)").unwrap();
        assert!(matches!(
            build_sl2(&osp, &PartitionPair::parse("1,1|2").unwrap()),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn grading_gl21() {
        let nd = datum("gl(2|1)", "2|1");
        let g = &nd.grading;
        assert_eq!(g.dim(2, false), 1);
        assert_eq!(g.dim(0, false), 3);
        assert_eq!(g.dim(-2, false), 1);
        assert_eq!(g.dim(1, true), 2);
        assert_eq!(g.dim(-1, true), 2);
        assert!(g.is_symmetric());
    }

    #[test]
    fn grading_zero_orbit() {
        let nd = datum("gl(2|2)", "1,1|1,1");
        assert_eq!(nd.grading.degrees(), vec![0]);
        assert_eq!(nd.centralizer_dim(None), 16);
        assert!(nd.symplectic_space().unwrap().basis.is_empty());
        let l = nd.lagrangian_odd().unwrap();
        assert!(l.u.is_empty() && l.u_dual.is_empty());
        assert_eq!(nd.module_dimension_factor().unwrap(), 1);
    }

    #[test]
    fn gl31_odd_minus_one_piece_is_even_dimensional() {
        // E24 and E41 both have ad(h)-eigenvalue -1.
        let nd = datum("gl(3|1)", "2,1|1");
        assert_eq!(nd.grading.dim(-1, true), 2);
        assert!(nd.symplectic_space().is_ok());
    }

    #[test]
    fn odd_dimensional_guard() {
        let t = GradingTable::from_dims(&[((-1, true), 1), ((1, true), 1), ((0, false), 2)]);
        assert_eq!(t.check_odd_part_even(), Err(Error::OddDimensionalOddPart(1)));
        let t = GradingTable::from_dims(&[((-1, true), 2), ((1, true), 2)]);
        assert!(t.check_odd_part_even().is_ok());
    }

    #[test]
    fn centralizer_gl21() {
        let nd = datum("gl(2|1)", "2|1");
        assert_eq!(nd.centralizer_dim(Some(false)), 3);
        assert_eq!(nd.centralizer_dim(Some(true)), 2);
        let a = &nd.algebra;
        let odd: Vec<SuperMatrix> = nd.centralizer(Some(true), None).into_iter().flat_map(|p| p.basis).collect();
        let span = |x: &SuperMatrix| {
            let mut v: Vec<Vec<Scalar>> = odd.iter().map(|y| a.coords(y)).collect();
            v.push(a.coords(x));
            rank(&v) == odd.len()
        };
        assert!(span(&a.unit(0, 2)) && span(&a.unit(2, 1)));
        assert!(nd.grading_is_good());
        assert!(nd.centralizer_complement_is_direct());
    }

    #[test]
    fn symplectic_gl21() {
        let nd = datum("gl(2|1)", "2|1");
        let v = nd.symplectic_space().unwrap();
        assert_eq!(v.dim(false), 2);
        assert_eq!(v.dim(true), 2);
        assert_eq!(rank(&v.gram), 4);
    }

    #[test]
    fn lagrangian_gl21() {
        let nd = datum("gl(2|1)", "2|1");
        let l = nd.lagrangian_odd().unwrap();
        assert_eq!(l.u.len(), 1);
        let a = &nd.algebra;
        // [f, E13] = E23
        assert_eq!(bracket(nd.f(), &a.unit(0, 2)).unwrap(), a.unit(1, 2));
        assert_eq!(rank(&vec![a.coords(&l.u[0]), a.coords(&a.unit(1, 2))]), 1);
        assert_eq!(nd.module_dimension_factor().unwrap(), 2);
    }

    #[test]
    fn lagrangian_gl22_half_dimension() {
        let nd = datum("gl(2|2)", "2|1,1");
        let v = nd.symplectic_space().unwrap();
        assert_eq!(nd.u1_dim().unwrap() * 2, v.dim(true));
        let nd = datum("gl(2|2)", "2|2");
        let v = nd.symplectic_space().unwrap();
        assert_eq!(nd.u1_dim().unwrap() * 2, v.dim(true));
    }

    #[test]
    fn clifford_weight_gl21() {
        let nd = datum("gl(2|1)", "2|1");
        let ld = LeviDatum::full(2, 1);
        assert_eq!(nd.clifford_weights(&ld, false).unwrap(), vec![TorusWeight::from_ints(&[-1, 1])]);
        assert_eq!(nd.clifford_weights(&ld, true).unwrap(), vec![TorusWeight::from_ints(&[1, -1])]);
        assert!(nd.denominator_weights(&ld).unwrap().is_empty());
        let z = datum("gl(2|1)", "1,1|1");
        assert!(z.clifford_weights(&ld, false).unwrap().is_empty());
    }

    #[test]
    fn denominators_gl22_torus_levi() {
        // e = 0, Levi = torus, θ regular dominant: μ_i are the negative even
        // roots restricted to t (t = full diagonal torus, so restriction is
        // the identity).
        let nd = datum("gl(2|2)", "1,1|1,1");
        let a = &nd.algebra;
        let ld = LeviDatum::new(a, Levi::torus(2, 2), vec![int(1), int(0), int(1), int(0)]).unwrap();
        let mus = nd.denominator_weights(&ld).unwrap();
        let expect = sorted(&[TorusWeight::from_ints(&[-1, 1, 0, 0]), TorusWeight::from_ints(&[0, 0, -1, 1])]);
        assert_eq!(mus, expect);
    }

    #[test]
    fn denominators_gl31_proper_levi() {
        let nd = datum("gl(3|1)", "2,1|1");
        let a = &nd.algebra;
        let ld = LeviDatum::new(a, Levi::parse("2+1|1", 3, 1).unwrap(), vec![rat(1, 3), rat(-2, 3), int(0)]).unwrap();
        let mus = nd.denominator_weights(&ld).unwrap();
        // (g_0)_{<0} = span{E31, E32} and [E12, E31] = -E32, [E12, E32] = 0.
        let brute = {
            let cand = [a.unit(2, 0), a.unit(2, 1)];
            let rows: Vec<Vec<Scalar>> = (0..a.dim())
                .map(|r| cand.iter().map(|c| a.coords(&bracket(nd.e(), c).unwrap())[r].clone()).collect())
                .collect();
            kernel(&rows, 2).len()
        };
        assert_eq!(mus.len(), brute);
        for mu in &mus {
            assert!(ld.pair(mu) < Scalar::zero());
            assert_eq!(mu, &TorusWeight::from_ints(&[-1, 1, 0]));
        }
    }

    #[test]
    fn nilpotent_must_lie_in_levi() {
        let nd = datum("gl(3|1)", "2,1|1");
        let a = &nd.algebra;
        let ld = LeviDatum::new(a, Levi::parse("1+2|1", 3, 1).unwrap(), vec![int(1), int(0), int(0)]).unwrap();
        assert!(matches!(nd.denominator_weights(&ld), Err(Error::NilpotentNotInLevi(_))));
    }
}
