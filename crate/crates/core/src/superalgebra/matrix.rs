use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// 0 for even, 1 for odd.
    pub fn bit(self) -> Option<u8> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
        }
    }
}

/// A square matrix acting on a superspace whose basis vectors carry a
/// fixed parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    odd_index: Vec<bool>,
    entries: Mat,
}

impl SuperMatrix {
    pub fn zero(odd_index: &[bool]) -> Self {
        let n = odd_index.len();
        SuperMatrix {
            odd_index: odd_index.to_vec(),
            entries: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn from_entries(odd_index: &[bool], entries: Mat) -> Result<Self> {
        let n = odd_index.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!("expected a {n}x{n} matrix")));
        }
        Ok(SuperMatrix { odd_index: odd_index.to_vec(), entries })
    }

    /// Matrix unit `E_{ij}` (0-based).
    pub fn unit(odd_index: &[bool], i: usize, j: usize) -> Self {
        let mut m = Self::zero(odd_index);
        m.entries[i][j] = int(1);
        m
    }

    pub fn diagonal(odd_index: &[bool], diag: &[Scalar]) -> Self {
        let mut m = Self::zero(odd_index);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i][i] = d.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.odd_index.len()
    }

    pub fn odd_index(&self) -> &[bool] {
        &self.odd_index
    }

    pub fn entries(&self) -> &Mat {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i][j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    fn entry_parity(&self, i: usize, j: usize) -> bool {
        self.odd_index[i] != self.odd_index[j]
    }

    pub fn parity(&self) -> Parity {
        let n = self.size();
        let (mut even, mut odd) = (false, false);
        for i in 0..n {
            for j in 0..n {
                if !self.entries[i][j].is_zero() {
                    if self.entry_parity(i, j) {
                        odd = true;
                    } else {
                        even = true;
                    }
                }
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Even and odd components.
    pub fn split(&self) -> (SuperMatrix, SuperMatrix) {
        let mut even = Self::zero(&self.odd_index);
        let mut odd = Self::zero(&self.odd_index);
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                let target = if self.entry_parity(i, j) { &mut odd } else { &mut even };
                target.entries[i][j] = self.entries[i][j].clone();
            }
        }
        (even, odd)
    }

    fn check_compatible(&self, other: &SuperMatrix) -> Result<()> {
        if self.odd_index != other.odd_index {
            return Err(Error::SizeMismatch(format!(
                "superspaces of dimension {} and {} differ",
                self.size(),
                other.size()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.check_compatible(other)?;
        let n = self.size();
        let mut out = Self::zero(&self.odd_index);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (r, s) in out.entries.iter_mut().zip(other.entries.iter()) {
            for (a, b) in r.iter_mut().zip(s) {
                *a += b;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut().flatten() {
            *a *= c;
        }
        out
    }

    /// Supertrace: even diagonal entries minus odd diagonal entries.
    pub fn supertrace(&self) -> Scalar {
        (0..self.size()).fold(Scalar::zero(), |acc, i| {
            if self.odd_index[i] {
                acc - &self.entries[i][i]
            } else {
                acc + &self.entries[i][i]
            }
        })
    }

    /// Entries flattened row by row.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.entries.iter().flatten().cloned().collect()
    }

    pub fn from_vec(odd_index: &[bool], v: &[Scalar]) -> SuperMatrix {
        let n = odd_index.len();
        assert_eq!(v.len(), n * n);
        SuperMatrix {
            odd_index: odd_index.to_vec(),
            entries: v.chunks(n).map(<[Scalar]>::to_vec).collect(),
        }
    }
}

/// Super commutator `xy - (-1)^{|x||y|} yx`, extended bilinearly over the
/// parity components.
pub fn bracket(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    x.check_compatible(y)?;
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    let mut out = xy.sub(&yx)?;
    // odd-odd components anticommute: add back 2 * y1 x1
    let (_, x1) = x.split();
    let (_, y1) = y.split();
    if !x1.is_zero() && !y1.is_zero() {
        out = out.add(&y1.mul(&x1)?.scale(&int(2)))?;
    }
    Ok(out)
}

/// Supertrace form `str(xy)`.
pub fn invariant_form(x: &SuperMatrix, y: &SuperMatrix) -> Result<Scalar> {
    Ok(x.mul(y)?.supertrace())
}

/// `chi(x) = (e, x)`.
pub fn chi(x: &SuperMatrix, e: &SuperMatrix) -> Result<Scalar> {
    invariant_form(e, x)
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({a})E{}_{}", i + 1, j + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(m: usize, n: usize) -> Vec<bool> {
        (0..m + n).map(|i| i >= m).collect()
    }

    #[test]
    fn sl2_relation() {
        let p = gl(2, 0);
        let e12 = SuperMatrix::unit(&p, 0, 1);
        let e21 = SuperMatrix::unit(&p, 1, 0);
        let h = SuperMatrix::diagonal(&p, &[int(1), int(-1)]);
        assert_eq!(bracket(&e12, &e21).unwrap(), h);
    }

    #[test]
    fn even_odd_bracket_is_commutator() {
        let p = gl(2, 1);
        let e12 = SuperMatrix::unit(&p, 0, 1);
        let e31 = SuperMatrix::unit(&p, 2, 0);
        let e32 = SuperMatrix::unit(&p, 2, 1);
        assert_eq!(bracket(&e12, &e31).unwrap(), e32.scale(&int(-1)));
    }

    #[test]
    fn odd_square_vanishes_for_root_vector() {
        let p = gl(2, 1);
        let e13 = SuperMatrix::unit(&p, 0, 2);
        assert!(bracket(&e13, &e13).unwrap().is_zero());
        // an odd element with nonzero square: [x, x] = 2 x^2
        let x = e13.add(&SuperMatrix::unit(&p, 2, 0)).unwrap();
        let b = bracket(&x, &x).unwrap();
        assert_eq!(b, x.mul(&x).unwrap().scale(&int(2)));
        assert!(!b.is_zero());
    }

    #[test]
    fn supertrace_form_values() {
        let p = gl(2, 1);
        let u = |i, j| SuperMatrix::unit(&p, i, j);
        assert_eq!(invariant_form(&u(0, 1), &u(1, 0)).unwrap(), int(1));
        assert_eq!(invariant_form(&u(0, 2), &u(2, 0)).unwrap(), int(1));
        assert_eq!(invariant_form(&u(2, 2), &u(2, 2)).unwrap(), int(-1));
    }

    #[test]
    fn chi_values() {
        let p = gl(2, 1);
        let u = |i, j| SuperMatrix::unit(&p, i, j);
        let e = u(0, 1);
        assert_eq!(chi(&u(1, 0), &e).unwrap(), int(1));
        assert_eq!(chi(&u(0, 1), &e).unwrap(), int(0));
        assert_eq!(chi(&u(2, 1), &e).unwrap(), int(0));
    }

    #[test]
    fn parity_classification() {
        let p = gl(1, 1);
        assert_eq!(SuperMatrix::unit(&p, 0, 0).parity(), Parity::Even);
        assert_eq!(SuperMatrix::unit(&p, 0, 1).parity(), Parity::Odd);
        let mixed = SuperMatrix::unit(&p, 0, 0).add(&SuperMatrix::unit(&p, 1, 0)).unwrap();
        assert_eq!(mixed.parity(), Parity::Mixed);
        assert_eq!(SuperMatrix::zero(&p).parity(), Parity::Even);
    }

    #[test]
    fn size_mismatch() {
        let a = SuperMatrix::unit(&gl(1, 1), 0, 0);
        let b = SuperMatrix::unit(&gl(2, 1), 0, 0);
        assert!(matches!(bracket(&a, &b), Err(Error::SizeMismatch(_))));
    }
}
