use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{kernel, Coordinatizer, Mat};
use crate::scalar::{int, Scalar};

use super::matrix::{bracket, invariant_form, Parity, SuperMatrix};
use super::roots::{Family, RootDatum, TorusWeight, Weight};

/// A basis vector of the matrix realization: parity-homogeneous and a
/// weight vector for the diagonal Cartan subalgebra.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub matrix: SuperMatrix,
    pub weight: Weight,
    pub odd: bool,
    pub label: String,
}

/// The matrix realization of a supported superalgebra together with a
/// weight-vector basis and exact coordinates relative to it.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub datum: RootDatum,
    odd_index: Vec<bool>,
    basis: Vec<BasisElement>,
    coords: Coordinatizer,
}

impl Algebra {
    pub fn new(datum: RootDatum) -> Algebra {
        let odd_index = natural_parities(&datum);
        let basis = match datum.family {
            Family::Gl => gl_basis(&datum, &odd_index, false),
            Family::Sl => gl_basis(&datum, &odd_index, true),
            Family::Osp => osp_basis(&datum, &odd_index),
        };
        let ambient = odd_index.len() * odd_index.len();
        let vecs: Vec<Vec<Scalar>> = basis.iter().map(|b| b.matrix.to_vec()).collect();
        let coords = Coordinatizer::new(&vecs, ambient);
        Algebra { datum, odd_index, basis, coords }
    }

    pub fn parse(s: &str) -> Result<Algebra> {
        Ok(Algebra::new(s.parse()?))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the natural representation.
    pub fn size(&self) -> usize {
        self.odd_index.len()
    }

    pub fn odd_index(&self) -> &[bool] {
        &self.odd_index
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn unit(&self, i: usize, j: usize) -> SuperMatrix {
        SuperMatrix::unit(&self.odd_index, i, j)
    }

    pub fn zero(&self) -> SuperMatrix {
        SuperMatrix::zero(&self.odd_index)
    }

    pub fn diagonal(&self, diag: &[Scalar]) -> SuperMatrix {
        SuperMatrix::diagonal(&self.odd_index, diag)
    }

    /// Coordinates of an element of the algebra in the weight basis.
    pub fn coords(&self, x: &SuperMatrix) -> Vec<Scalar> {
        self.coords.coords(&x.to_vec())
    }

    /// Whether `x` lies in the algebra (as opposed to the ambient gl).
    pub fn contains(&self, x: &SuperMatrix) -> bool {
        if x.odd_index() != self.odd_index.as_slice() {
            return false;
        }
        let c = self.coords(x);
        self.combine(&c) == *x
    }

    pub fn combine(&self, c: &[Scalar]) -> SuperMatrix {
        let mut out = self.zero();
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                out = out.add(&b.matrix.scale(ci)).expect("same superspace");
            }
        }
        out
    }

    /// Matrix of `ad x` in the weight basis (column j = coordinates of
    /// `[x, b_j]`).
    pub fn ad(&self, x: &SuperMatrix) -> Result<Mat> {
        let cols: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| Ok(self.coords(&bracket(x, &b.matrix)?)))
            .collect::<Result<_>>()?;
        let d = self.dim();
        Ok((0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect())
    }

    /// Weight of the standard basis vector `v_i` of the natural
    /// representation under the diagonal Cartan subalgebra.
    pub fn index_weight(&self, i: usize) -> Weight {
        index_weight(&self.datum, i)
    }

    /// Evaluates a weight on a diagonal element of the Cartan subalgebra.
    pub fn pair_diagonal(&self, w: &Weight, h: &SuperMatrix) -> Result<Scalar> {
        if !h.is_diagonal() {
            return Err(Error::NotCentral(format!("{h} is not diagonal")));
        }
        let (m, n) = (self.datum.m, self.datum.n);
        // the Cartan of all realizations has basis dual to the ε/δ coordinates
        let cartan_value = |c: usize| -> usize {
            match self.datum.family {
                Family::Gl | Family::Sl => c,
                Family::Osp => {
                    if c == 0 {
                        0
                    } else {
                        2 + (c - 1)
                    }
                }
            }
        };
        if self.datum.family == Family::Osp {
            let ok = h.get(1, 1) == &-h.get(0, 0).clone()
                && (0..n).all(|k| h.get(2 + n + k, 2 + n + k) == &-h.get(2 + k, 2 + k).clone());
            if !ok {
                return Err(Error::NotCentral(format!("{h} is not in the Cartan subalgebra")));
            }
        }
        Ok((0..m + n).fold(Scalar::zero(), |acc, c| {
            let idx = cartan_value(c);
            acc + &w.coords[c] * h.get(idx, idx)
        }))
    }

    /// Restriction of a weight to the span of `torus_basis`: the vector of
    /// pairings against the given basis elements.
    pub fn restrict_to_torus(&self, w: &Weight, torus_basis: &[SuperMatrix]) -> Result<TorusWeight> {
        torus_basis
            .iter()
            .map(|h| self.pair_diagonal(w, h))
            .collect::<Result<Vec<_>>>()
            .map(TorusWeight)
    }

    /// Gram matrix of the supertrace form on the weight basis.
    pub fn gram(&self) -> Mat {
        self.basis
            .iter()
            .map(|a| {
                self.basis
                    .iter()
                    .map(|b| invariant_form(&a.matrix, &b.matrix).expect("same superspace"))
                    .collect()
            })
            .collect()
    }

    /// Basis indices grouped by (parity, weight).
    pub fn weight_spaces(&self) -> BTreeMap<(bool, Weight), Vec<usize>> {
        let mut out: BTreeMap<(bool, Weight), Vec<usize>> = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            out.entry((b.odd, b.weight.clone())).or_default().push(i);
        }
        out
    }
}

fn natural_parities(d: &RootDatum) -> Vec<bool> {
    match d.family {
        Family::Gl | Family::Sl => (0..d.m + d.n).map(|i| i >= d.m).collect(),
        Family::Osp => (0..2 + 2 * d.n).map(|i| i >= 2).collect(),
    }
}

fn index_weight(d: &RootDatum, i: usize) -> Weight {
    let (m, n) = (d.m, d.n);
    match d.family {
        Family::Gl | Family::Sl => Weight::unit(m, n, i),
        Family::Osp => match i {
            0 => Weight::unit(m, n, 0),
            1 => Weight::unit(m, n, 0).neg(),
            _ if i < 2 + n => Weight::unit(m, n, 1 + (i - 2)),
            _ => Weight::unit(m, n, 1 + (i - 2 - n)).neg(),
        },
    }
}

fn gl_basis(d: &RootDatum, odd_index: &[bool], traceless: bool) -> Vec<BasisElement> {
    let size = odd_index.len();
    let mut out = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i == j && traceless {
                continue;
            }
            out.push(BasisElement {
                matrix: SuperMatrix::unit(odd_index, i, j),
                weight: index_weight(d, i).sub(&index_weight(d, j)),
                odd: odd_index[i] != odd_index[j],
                label: format!("E{}_{}", i + 1, j + 1),
            });
        }
    }
    if traceless {
        let sgn = |i: usize| if odd_index[i] { -1 } else { 1 };
        for i in 0..size - 1 {
            let mut h = SuperMatrix::unit(odd_index, i, i);
            h.set(i + 1, i + 1, int(-sgn(i) * sgn(i + 1)));
            out.push(BasisElement {
                matrix: h,
                weight: Weight::zero(d.m, d.n),
                odd: false,
                label: format!("H{}", i + 1),
            });
        }
    }
    out
}

/// Gram matrix of the even supersymmetric form preserved by osp(2|2n):
/// hyperbolic on the even plane, standard symplectic on the odd part.
pub fn osp_form(n: usize) -> Mat {
    let size = 2 + 2 * n;
    let mut g = vec![vec![Scalar::zero(); size]; size];
    g[0][1] = int(1);
    g[1][0] = int(1);
    for k in 0..n {
        g[2 + k][2 + n + k] = int(1);
        g[2 + n + k][2 + k] = int(-1);
    }
    g
}

/// Linear conditions for a homogeneous `X` of parity `p` to preserve the
/// form: `(X^T G)_{ab} + (-1)^{p|a|} (G X)_{ab} = 0`.
#[allow(clippy::needless_range_loop)]
pub fn osp_violation(x: &SuperMatrix, g: &Mat) -> Vec<Scalar> {
    let size = x.size();
    let parts = {
        let (e, o) = x.split();
        [(e, 0u8), (o, 1u8)]
    };
    let mut out = vec![Scalar::zero(); size * size];
    for (part, p) in &parts {
        for a in 0..size {
            for b in 0..size {
                let mut xtg = Scalar::zero();
                let mut gx = Scalar::zero();
                for c in 0..size {
                    xtg += part.get(c, a) * &g[c][b];
                    gx += &g[a][c] * part.get(c, b);
                }
                let odd_a = x.odd_index()[a];
                if *p == 1 && odd_a {
                    out[a * size + b] += xtg - gx;
                } else {
                    out[a * size + b] += xtg + gx;
                }
            }
        }
    }
    out
}

fn osp_basis(d: &RootDatum, odd_index: &[bool]) -> Vec<BasisElement> {
    let size = odd_index.len();
    let g = osp_form(d.n);
    let mut groups: BTreeMap<(bool, Weight), Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..size {
        for j in 0..size {
            let w = index_weight(d, i).sub(&index_weight(d, j));
            groups.entry((odd_index[i] != odd_index[j], w)).or_default().push((i, j));
        }
    }
    let mut out = Vec::new();
    for ((odd, w), units) in groups {
        // constraint matrix: rows = violated coordinates, cols = units
        let cols: Vec<Vec<Scalar>> = units
            .iter()
            .map(|&(i, j)| osp_violation(&SuperMatrix::unit(odd_index, i, j), &g))
            .collect();
        let rows: Mat = (0..size * size)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        for (k, v) in kernel(&rows, units.len()).into_iter().enumerate() {
            let mut mtx = SuperMatrix::zero(odd_index);
            for (c, &(i, j)) in v.iter().zip(&units) {
                mtx.set(i, j, c.clone());
            }
            out.push(BasisElement {
                matrix: mtx,
                weight: w.clone(),
                odd,
                label: format!("X[{w}]#{k}"),
            });
        }
    }
    out
}

impl BasisElement {
    pub fn parity(&self) -> Parity {
        if self.odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}
