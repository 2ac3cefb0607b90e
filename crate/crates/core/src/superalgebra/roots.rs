use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{fmt_scalar, int, parse_scalar, rat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// gl(m|n)
    Gl,
    /// sl(m|n), m != n
    Sl,
    /// osp(2|2n); stored with m = 1
    Osp,
}

/// A weight in the ε/δ coordinates of h*: `m` ε-coordinates followed by
/// `n` δ-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Scalar>,
    pub m: usize,
}

impl Weight {
    pub fn zero(m: usize, n: usize) -> Self {
        Weight { coords: vec![Scalar::zero(); m + n], m }
    }

    pub fn from_ints(m: usize, eps: &[i64], delta: &[i64]) -> Self {
        assert_eq!(eps.len(), m);
        Weight {
            coords: eps.iter().chain(delta).map(|&x| int(x)).collect(),
            m,
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len() - self.m
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Unit vector on coordinate `i`.
    pub fn unit(m: usize, n: usize, i: usize) -> Self {
        let mut w = Self::zero(m, n);
        w.coords[i] = int(1);
        w
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            m: self.m,
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
            m: self.m,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect(), m: self.m }
    }

    pub fn neg(&self) -> Weight {
        self.scale(&int(-1))
    }

    /// The supersymmetric form on h*: (ε_i, ε_j) = δ_ij, (δ_k, δ_l) = -δ_kl.
    pub fn form(&self, other: &Weight) -> Scalar {
        self.coords
            .iter()
            .zip(&other.coords)
            .enumerate()
            .fold(Scalar::zero(), |acc, (i, (a, b))| {
                if i < self.m {
                    acc + a * b
                } else {
                    acc - a * b
                }
            })
    }

    /// Parses `"a1,...,am|b1,...,bn"`.
    pub fn parse(s: &str, m: usize, n: usize) -> Result<Weight> {
        let (left, right) = s.split_once('|').unwrap_or((s, ""));
        let part = |p: &str| -> Result<Vec<Scalar>> {
            let p = p.trim();
            if p.is_empty() {
                return Ok(Vec::new());
            }
            p.split(',').map(parse_scalar).collect()
        };
        let eps = part(left)?;
        let delta = part(right)?;
        if eps.len() != m || delta.len() != n {
            return Err(Error::ParseError(format!(
                "weight {s:?} must have {m} entries before '|' and {n} after"
            )));
        }
        Ok(Weight { coords: eps.into_iter().chain(delta).collect(), m })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Scalar]| xs.iter().map(fmt_scalar).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.coords[..self.m]), join(&self.coords[self.m..]))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A weight of a torus `t`, in coordinates given by pairing against a
/// documented basis of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusWeight(pub Vec<Scalar>);

impl TorusWeight {
    pub fn zero(dim: usize) -> Self {
        TorusWeight(vec![Scalar::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        TorusWeight(v.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &TorusWeight) -> TorusWeight {
        TorusWeight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &TorusWeight) -> TorusWeight {
        TorusWeight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> TorusWeight {
        TorusWeight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> TorusWeight {
        self.scale(&int(-1))
    }

    /// Pairing with a dual vector (for example θ in the same basis).
    pub fn pair(&self, dual: &[Scalar]) -> Scalar {
        self.0.iter().zip(dual).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_scalar).collect()
    }
}

impl fmt::Display for TorusWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.strings().join(","))
    }
}

impl Serialize for TorusWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings().serialize(s)
    }
}

/// Root data of gl(m|n), sl(m|n) or osp(2|2n) with the distinguished
/// positive system of the standard matrix realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub even_positive_roots: Vec<Weight>,
    pub odd_positive_roots: Vec<Weight>,
    pub rho0: Weight,
    pub rho1: Weight,
    pub rho: Weight,
}

impl RootDatum {
    /// Weight-space rank, i.e. the number of ε/δ coordinates.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// Degree in the type I ℤ-grading: +1 on g_1, -1 on g_{-1}, 0 on g_0.
    /// Equals the sum of the ε-coordinates of the root.
    pub fn super_z_degree(&self, root: &Weight) -> i32 {
        let s = root.coords[..self.m].iter().fold(Scalar::zero(), |a, b| a + b);
        s.to_integer().try_into().expect("root degree fits in i32")
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Gl => format!("gl({}|{})", self.m, self.n),
            Family::Sl => format!("sl({}|{})", self.m, self.n),
            Family::Osp => format!("osp(2|{})", 2 * self.n),
        }
    }

    /// Whether the even part is a product of general linear algebras
    /// (gl_m x gl_n), the setting of the Weyl group and KL machinery.
    pub fn is_type_a(&self) -> bool {
        matches!(self.family, Family::Gl | Family::Sl)
    }
}

pub fn build_root_datum(family: Family, m: usize, n: usize) -> Result<RootDatum> {
    let (even, odd) = match family {
        Family::Gl | Family::Sl => {
            if m + n == 0 {
                return Err(Error::UnsupportedFamily("gl(0|0) is empty".into()));
            }
            if family == Family::Sl && m == n {
                return Err(Error::UnsupportedFamily(format!(
                    "sl({m}|{m}): the supertrace form degenerates"
                )));
            }
            let e = |i| Weight::unit(m, n, i);
            let mut even = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    even.push(e(i).sub(&e(j)));
                }
            }
            for k in 0..n {
                for l in k + 1..n {
                    even.push(e(m + k).sub(&e(m + l)));
                }
            }
            let mut odd = Vec::new();
            for i in 0..m {
                for k in 0..n {
                    odd.push(e(i).sub(&e(m + k)));
                }
            }
            (even, odd)
        }
        Family::Osp => {
            if m != 1 || n == 0 {
                return Err(Error::UnsupportedFamily(format!(
                    "osp is supported as osp(2|2n) with n >= 1 (got m={m}, n={n})"
                )));
            }
            let e = |i| Weight::unit(1, n, i);
            let eps = e(0);
            let d = |k: usize| e(1 + k);
            let mut even = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    even.push(d(i).sub(&d(j)));
                    even.push(d(i).add(&d(j)));
                }
                even.push(d(i).scale(&int(2)));
            }
            let mut odd = Vec::new();
            for k in 0..n {
                odd.push(eps.sub(&d(k)));
                odd.push(eps.add(&d(k)));
            }
            (even, odd)
        }
    };
    let half_sum = |roots: &[Weight]| {
        roots
            .iter()
            .fold(Weight::zero(m, n), |acc, r| acc.add(r))
            .scale(&rat(1, 2))
    };
    let rho0 = half_sum(&even);
    let rho1 = half_sum(&odd);
    let rho = rho0.sub(&rho1);
    Ok(RootDatum {
        family,
        m,
        n,
        even_positive_roots: even,
        odd_positive_roots: odd,
        rho0,
        rho1,
        rho,
    })
}

/// Parses `"gl(m|n)"`, `"sl(m|n)"` or `"osp(2|2n)"`.
impl FromStr for RootDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(' ', "");
        let bad = || Error::ParseError(format!("unrecognized algebra {s:?}"));
        let open = t.find('(').ok_or_else(bad)?;
        if !t.ends_with(')') {
            return Err(bad());
        }
        let head = &t[..open];
        let (a, b) = t[open + 1..t.len() - 1].split_once('|').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        match head {
            "gl" => build_root_datum(Family::Gl, a, b),
            "sl" => build_root_datum(Family::Sl, a, b),
            "osp" => {
                if a != 2 || !b.is_multiple_of(2) {
                    return Err(Error::UnsupportedFamily(format!(
                        "only osp(2|2n) is of type I; got {s:?}"
                    )));
                }
                build_root_datum(Family::Osp, 1, b / 2)
            }
            _ => Err(Error::UnsupportedFamily(format!("unknown family in {s:?}"))),
        }
    }
}
