//! Graded-dimension shadows of the structure theorems: Hilbert series of
//! the PBW generator sets of W̃, W, W₀, Λ(V₁̄) and the triangular factors,
//! together with the factorization checks run over a battery of orbits.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::linalg::rank;
use crate::nilpotent::{sorted, NilpotentDatum, PartitionPair};
use crate::superalgebra::Algebra;

/// Kazhdan degree of an ad(h)-eigenvector of degree `i`.
pub fn kazhdan(i: i64) -> i64 {
    i + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Polynomial,
    TruncatedSeries,
}

/// A generating function in one variable `t`, exact in every degree
/// `<= truncation` (all degrees when `truncation` is `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    pub coefficients: BTreeMap<i64, u128>,
    pub truncation: Option<i64>,
}

impl GradedSeries {
    pub fn one() -> Self {
        GradedSeries { coefficients: BTreeMap::from([(0, 1)]), truncation: None }
    }

    pub fn kind(&self) -> SeriesKind {
        match self.truncation {
            None => SeriesKind::Polynomial,
            Some(_) => SeriesKind::TruncatedSeries,
        }
    }

    pub fn coeff(&self, d: i64) -> u128 {
        self.coefficients.get(&d).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coefficients.keys().next().copied()
    }

    /// `1 + t^d`.
    pub fn exterior(d: i64) -> Self {
        let mut c = BTreeMap::new();
        *c.entry(0).or_insert(0) += 1;
        *c.entry(d).or_insert(0) += 1;
        GradedSeries { coefficients: c, truncation: None }
    }

    /// `(1 - t^d)^{-1}` for `d > 0`, exact through degree `upto`.
    pub fn symmetric(d: i64, upto: i64) -> Self {
        assert!(d > 0, "polynomial generators need positive degree");
        let c = (0..).map(|k| k * d).take_while(|&x| x <= upto).map(|x| (x, 1)).collect();
        GradedSeries { coefficients: c, truncation: Some(upto) }
    }

    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        // A coefficient of degree d needs self up to d - min(other) and
        // other up to d - min(self).
        let valid = |t: Option<i64>, other_min: Option<i64>| t.map(|t| t + other_min.unwrap_or(0));
        let truncation = match (valid(self.truncation, other.min_degree()), valid(other.truncation, self.min_degree())) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut c: BTreeMap<i64, u128> = BTreeMap::new();
        for (&i, &a) in &self.coefficients {
            for (&j, &b) in &other.coefficients {
                if truncation.is_some_and(|t| i + j > t) {
                    continue;
                }
                *c.entry(i + j).or_insert(0) += a * b;
            }
        }
        GradedSeries { coefficients: c, truncation }
    }

    pub fn truncate(&self, t: i64) -> GradedSeries {
        assert!(self.truncation.is_none_or(|x| x >= t), "series not known through degree {t}");
        GradedSeries {
            coefficients: self.coefficients.range(..=t).map(|(&k, &v)| (k, v)).collect(),
            truncation: Some(t),
        }
    }

    /// Value at t = 1 (polynomials only).
    pub fn total(&self) -> Option<u128> {
        self.truncation.is_none().then(|| self.coefficients.values().sum())
    }

    /// Coefficients as a dense list starting at `from`, through `to`.
    pub fn dense(&self, from: i64, to: i64) -> Vec<u128> {
        (from..=to).map(|d| self.coeff(d)).collect()
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(d, c)| format!("{c}t^{d}"))
            .collect();
        write!(f, "{}", if terms.is_empty() { "0".to_string() } else { terms.join(" + ") })?;
        if let Some(t) = self.truncation {
            write!(f, " + O(t^{})", t + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    WTilde,
    W,
    W0,
    LambdaV1,
    WTildePlus,
    WTildeMinus,
}

/// Kazhdan degrees of polynomial and exterior PBW generators.
pub fn generators(nd: &NilpotentDatum, kind: AlgebraKind) -> (Vec<i64>, Vec<i64>) {
    let k = |v: Vec<i64>| v.into_iter().map(kazhdan).collect::<Vec<_>>();
    match kind {
        AlgebraKind::WTilde => (k(nd.centralizer_degrees(false)), k(nd.algebra_degrees(true))),
        AlgebraKind::W => (k(nd.centralizer_degrees(false)), k(nd.centralizer_degrees(true))),
        AlgebraKind::W0 => (k(nd.centralizer_degrees(false)), vec![]),
        AlgebraKind::LambdaV1 => (vec![], k(nd.image_degrees(true))),
        AlgebraKind::WTildePlus => (vec![], k(z_part_degrees(nd, 1))),
        AlgebraKind::WTildeMinus => (vec![], k(z_part_degrees(nd, -1))),
    }
}

/// ad(h)-degrees of the basis of g_{±1}.
pub fn z_part_degrees(nd: &NilpotentDatum, z: i32) -> Vec<i64> {
    let d = &nd.algebra.datum;
    nd.algebra
        .basis()
        .iter()
        .zip(&nd.degrees)
        .filter(|(b, _)| b.odd && d.super_z_degree(&b.weight) == z)
        .map(|(_, &deg)| deg)
        .collect()
}

/// ∏(1 - t^a)^{-1} · ∏(1 + t^b), exact through `truncation`.
pub fn series_from_generators(poly: &[i64], ext: &[i64], truncation: u32) -> GradedSeries {
    let mut e = GradedSeries::one();
    for &b in ext {
        e = e.mul(&GradedSeries::exterior(b));
    }
    if poly.is_empty() {
        return e;
    }
    let t = truncation as i64;
    let headroom = -e.min_degree().unwrap_or(0).min(0);
    let mut s = e;
    for &a in poly {
        s = s.mul(&GradedSeries::symmetric(a, t + headroom));
    }
    s.truncate(t)
}

pub fn hilbert_series(nd: &NilpotentDatum, kind: AlgebraKind, truncation: u32) -> GradedSeries {
    let (p, e) = generators(nd, kind);
    series_from_generators(&p, &e, truncation)
}

/// Outcome of one identity, with both sides as dense coefficient lists.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub pass: bool,
    pub from_degree: i64,
    pub to_degree: i64,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
}

impl CheckReport {
    fn compare(identity: &str, expected: &GradedSeries, actual: &GradedSeries, truncation: u32) -> Self {
        let to = truncation as i64;
        let lo = |s: &GradedSeries| s.min_degree().unwrap_or(0);
        let from = lo(expected).min(lo(actual)).min(0);
        let ex = expected.dense(from, to);
        let ac = actual.dense(from, to);
        CheckReport {
            identity: identity.to_string(),
            pass: ex == ac,
            from_degree: from,
            to_degree: to,
            expected: ex.iter().map(u128::to_string).collect(),
            actual: ac.iter().map(u128::to_string).collect(),
        }
    }

    fn boolean(identity: &str, pass: bool) -> Self {
        CheckReport {
            identity: identity.to_string(),
            pass,
            from_degree: 0,
            to_degree: 0,
            expected: vec![],
            actual: vec![],
        }
    }
}

/// Product of Hilbert series of several kinds, exact through
/// `truncation`. Each factor is expanded far enough to absorb the
/// negative-degree exterior generators of the others.
pub fn product_series(nd: &NilpotentDatum, kinds: &[AlgebraKind], truncation: u32) -> GradedSeries {
    let headroom: i64 = kinds
        .iter()
        .flat_map(|&k| generators(nd, k).1)
        .map(|d| -d.min(0))
        .sum();
    let wide = truncation + headroom as u32;
    let mut s = GradedSeries::one();
    for &k in kinds {
        s = s.mul(&hilbert_series(nd, k, wide));
    }
    s.truncate(truncation as i64)
}

/// H(W̃) = H(Λ(V₁̄)) · H(W).
pub fn check_clifford_factorization(nd: &NilpotentDatum, truncation: u32) -> CheckReport {
    let lhs = hilbert_series(nd, AlgebraKind::WTilde, truncation);
    let rhs = product_series(nd, &[AlgebraKind::LambdaV1, AlgebraKind::W], truncation);
    CheckReport::compare("H(W~) = H(Lambda(V_1)) * H(W)", &lhs, &rhs, truncation)
}

/// H(W̃) = H(W̃₊^#) · H(W₀) · H(W̃₋^#).
pub fn check_triangular_factorization(nd: &NilpotentDatum, truncation: u32) -> CheckReport {
    let lhs = hilbert_series(nd, AlgebraKind::WTilde, truncation);
    let rhs = product_series(
        nd,
        &[AlgebraKind::WTildePlus, AlgebraKind::W0, AlgebraKind::WTildeMinus],
        truncation,
    );
    CheckReport::compare("H(W~) = H(W~+#) * H(W0) * H(W~-#)", &lhs, &rhs, truncation)
}

/// Dimension factor 2^{dim u₁̄} between W̃- and W-modules.
pub fn module_dimension_factor(nd: &NilpotentDatum) -> Result<u64> {
    nd.module_dimension_factor()
}

/// Every structural check for one orbit.
#[derive(Debug, Clone, Serialize)]
pub struct DatumReport {
    pub algebra: String,
    pub nilpotent: String,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

pub fn verify_datum(nd: &NilpotentDatum, truncation: u32) -> Result<DatumReport> {
    let mut checks = vec![
        CheckReport::boolean("sl2 relations", nd.triple.relations_hold()),
        CheckReport::boolean("grading symmetric", nd.grading.is_symmetric()),
        CheckReport::boolean("grading good", nd.grading_is_good()),
        CheckReport::boolean("g = g^e + [f,g]", nd.centralizer_complement_is_direct()),
    ];
    for (odd, name) in [(true, "odd"), (false, "even")] {
        let mut parts = nd.centralizer_degrees(odd);
        parts.extend(nd.image_degrees(odd));
        checks.push(CheckReport::boolean(
            &format!("{name} degree multiset = g^e + [f,g]"),
            sorted(&nd.algebra_degrees(odd)) == sorted(&parts),
        ));
    }
    let v = nd.symplectic_space()?;
    checks.push(CheckReport::boolean("omega nondegenerate on V", rank(&v.gram) == v.basis.len()));
    let lag = nd.lagrangian_odd()?;
    let iso = |xs: &[_]| nd.omega_gram(xs, xs).map(|g| rank(&g) == 0);
    checks.push(CheckReport::boolean(
        "u and u* isotropic of half dimension",
        iso(&lag.u)? && iso(&lag.u_dual)? && 2 * lag.u.len() == v.dim(true),
    ));
    let ext_total = |k| hilbert_series(nd, k, 0).total();
    let bookkeeping = {
        let g1 = 1u128 << nd.algebra_degrees(true).len();
        let g1e = 1u128 << nd.centralizer_degrees(true).len();
        let f = nd.module_dimension_factor()? as u128;
        ext_total(AlgebraKind::LambdaV1).map(|x| x * g1e) == Some(g1) && g1 == f * f * g1e
    };
    checks.push(CheckReport::boolean("2^dim g_1 = factor^2 * 2^dim g_1^e", bookkeeping));
    checks.push(check_clifford_factorization(nd, truncation));
    checks.push(check_triangular_factorization(nd, truncation));
    for k in [AlgebraKind::W, AlgebraKind::W0] {
        checks.push(CheckReport::boolean(
            &format!("H({k:?}) has constant term 1"),
            hilbert_series(nd, k, truncation).coeff(0) == 1,
        ));
    }
    Ok(DatumReport {
        algebra: nd.algebra.datum.name(),
        nilpotent: nd.partitions.to_string(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// All (gl(m|n), partition pair) with 1 <= m + n <= `max_size`.
pub fn battery(max_size: usize) -> Vec<(String, PartitionPair)> {
    let mut out = Vec::new();
    for total in 1..=max_size {
        for m in (0..=total).rev() {
            let n = total - m;
            for p in PartitionPair::all(m, n) {
                out.push((format!("gl({m}|{n})"), p));
            }
        }
    }
    out
}

pub fn build_battery_datum(alg: &str, p: &PartitionPair) -> Result<NilpotentDatum> {
    NilpotentDatum::build(&Algebra::parse(alg)?, p)
}
