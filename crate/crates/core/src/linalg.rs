//! Exact linear algebra over the rationals: row reduction, rank, kernels,
//! images and coordinates relative to a fixed basis.

use num_traits::Zero;

use crate::scalar::Scalar;

/// Dense row-major matrix.
pub type Mat = Vec<Vec<Scalar>>;

/// Reduced row echelon form. Returns the reduced matrix and its pivot
/// columns.
pub fn rref(mut m: Mat) -> (Mat, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(prow.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(m: &Mat) -> usize {
    rref(m.clone()).1.len()
}

/// Basis of `{x : m x = 0}` where `m` has `cols` columns.
pub fn kernel(m: &Mat, cols: usize) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return (0..cols)
            .map(|j| {
                let mut v = vec![Scalar::zero(); cols];
                v[j] = Scalar::from_integer(1.into());
                v
            })
            .collect();
    }
    let (r, pivots) = rref(m.clone());
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::from_integer(1.into());
            for (row, &p) in r.iter().zip(pivots.iter()) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A basis for the span of `vectors` (rows of the echelon form).
pub fn span_basis(vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    rref(vectors.to_vec()).0
}

/// Expresses vectors in a fixed linearly independent family.
///
/// The family is stored together with a set of pivot coordinates on which
/// it restricts to an invertible square matrix, so coordinates of a vector
/// in the span are read off by one matrix-vector product.
#[derive(Debug, Clone)]
pub struct Coordinatizer {
    pivots: Vec<usize>,
    // inverse of the family restricted to the pivot coordinates, dim x dim
    inverse: Mat,
    ambient: usize,
}

impl Coordinatizer {
    /// Panics if the family is linearly dependent.
    pub fn new(family: &[Vec<Scalar>], ambient: usize) -> Self {
        let dim = family.len();
        let (_, pivots) = rref(family.to_vec());
        assert_eq!(pivots.len(), dim, "family must be linearly independent");
        // square matrix S[i][k] = family[k][pivots[i]]; coordinates c solve S c = x_P
        let mut aug: Mat = (0..dim)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..dim).map(|k| family[k][pivots[i]].clone()).collect();
                row.extend((0..dim).map(|j| {
                    if i == j {
                        Scalar::from_integer(1.into())
                    } else {
                        Scalar::zero()
                    }
                }));
                row
            })
            .collect();
        if dim > 0 {
            aug = rref(aug).0;
        }
        let inverse = aug.into_iter().map(|row| row[dim..].to_vec()).collect();
        Coordinatizer { pivots, inverse, ambient }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `x`, assumed to lie in the span.
    pub fn coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(self.pivots.iter())
                    .filter(|(a, &p)| !a.is_zero() && !x[p].is_zero())
                    .fold(Scalar::zero(), |acc, (a, &p)| acc + a * &x[p])
            })
            .collect()
    }
}

pub fn mat_vec(m: &Mat, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
