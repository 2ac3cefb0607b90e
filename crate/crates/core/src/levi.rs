//! Standard Levi subalgebras of gl_m + gl_n given by block compositions,
//! their centers, and the grading element θ.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{fmt_scalar, int, parse_scalar, Scalar};
use crate::superalgebra::{Algebra, Family, SuperMatrix, TorusWeight, Weight};

/// A block composition refining (m|n). Blocks are consecutive index
/// intervals of the natural representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levi {
    pub blocks_m: Vec<usize>,
    pub blocks_n: Vec<usize>,
}

impl Levi {
    /// The whole even part gl_m + gl_n.
    pub fn full(m: usize, n: usize) -> Levi {
        Levi {
            blocks_m: if m > 0 { vec![m] } else { vec![] },
            blocks_n: if n > 0 { vec![n] } else { vec![] },
        }
    }

    /// The diagonal torus.
    pub fn torus(m: usize, n: usize) -> Levi {
        Levi { blocks_m: vec![1; m], blocks_n: vec![1; n] }
    }

    /// Parses `"a1+a2|b1+b2"`.
    pub fn parse(s: &str, m: usize, n: usize) -> Result<Levi> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::ParseError(format!("Levi {s:?} must contain '|'")))?;
        let part = |p: &str| -> Result<Vec<usize>> {
            let p = p.trim();
            if p.is_empty() {
                return Ok(Vec::new());
            }
            p.split('+')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::ParseError(format!("bad Levi block {x:?} in {s:?}")))
                })
                .collect()
        };
        let levi = Levi { blocks_m: part(l)?, blocks_n: part(r)? };
        if levi.blocks_m.iter().sum::<usize>() != m || levi.blocks_n.iter().sum::<usize>() != n {
            return Err(Error::InvalidLevi(format!("{s:?} does not refine ({m}|{n})")));
        }
        Ok(levi)
    }

    pub fn m(&self) -> usize {
        self.blocks_m.iter().sum()
    }

    pub fn n(&self) -> usize {
        self.blocks_n.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks_m.len() + self.blocks_n.len()
    }

    /// Index intervals of all blocks, ε-blocks first.
    pub fn intervals(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for &b in self.blocks_m.iter().chain(&self.blocks_n) {
            out.push(start..start + b);
            start += b;
        }
        out
    }

    /// Block containing coordinate `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.intervals().iter().position(|r| r.contains(&i)).expect("index in range")
    }

    /// Whether the block belongs to the gl_m factor.
    pub fn block_is_even_factor(&self, b: usize) -> bool {
        b < self.blocks_m.len()
    }

    /// Documented basis of the center t: block identity matrices, in
    /// block order.
    pub fn torus_basis(&self, alg: &Algebra) -> Vec<SuperMatrix> {
        self.intervals()
            .into_iter()
            .map(|r| {
                let diag: Vec<Scalar> =
                    (0..alg.size()).map(|i| int(if r.contains(&i) { 1 } else { 0 })).collect();
                alg.diagonal(&diag)
            })
            .collect()
    }

    /// Restriction of a weight to t: sum of coordinates over each block.
    pub fn restrict(&self, w: &Weight) -> TorusWeight {
        TorusWeight(
            self.intervals()
                .into_iter()
                .map(|r| r.fold(Scalar::zero(), |acc, i| acc + &w.coords[i]))
                .collect(),
        )
    }

    pub fn is_full(&self) -> bool {
        self.blocks_m.len() <= 1 && self.blocks_n.len() <= 1
    }

    /// Order of the Levi Weyl group, a product of symmetric groups.
    pub fn weyl_order(&self) -> usize {
        self.blocks_m
            .iter()
            .chain(&self.blocks_n)
            .map(|&b| (1..=b).product::<usize>())
            .product()
    }
}

impl fmt::Display for Levi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join("+");
        write!(f, "{}|{}", j(&self.blocks_m), j(&self.blocks_n))
    }
}

/// A Levi subalgebra together with the central grading element θ,
/// given as coefficients on the block identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDatum {
    pub levi: Levi,
    pub theta: Vec<Scalar>,
}

impl LeviDatum {
    /// Levi = even part, θ = 0.
    pub fn full(m: usize, n: usize) -> LeviDatum {
        let levi = Levi::full(m, n);
        let theta = vec![Scalar::zero(); levi.num_blocks()];
        LeviDatum { levi, theta }
    }

    /// Checks that θ has integral ad-eigenvalues on the even part and that
    /// its centralizer is exactly the Levi with the standard Borel in
    /// `(g_0)_{>=0}`: θ strictly decreasing across consecutive blocks of
    /// each factor, with integral differences.
    pub fn new(alg: &Algebra, levi: Levi, theta: Vec<Scalar>) -> Result<LeviDatum> {
        if alg.datum.family != Family::Gl {
            return Err(Error::UnsupportedFamily(format!(
                "Levi data are implemented for gl(m|n) only, not {}",
                alg.datum.name()
            )));
        }
        if levi.m() != alg.datum.m || levi.n() != alg.datum.n {
            return Err(Error::InvalidLevi(format!("{levi} does not refine the algebra")));
        }
        if theta.len() != levi.num_blocks() {
            return Err(Error::InvalidLevi(format!(
                "θ has {} entries but the Levi {levi} has {} blocks",
                theta.len(),
                levi.num_blocks()
            )));
        }
        let factors = [0..levi.blocks_m.len(), levi.blocks_m.len()..levi.num_blocks()];
        for f in factors {
            for b in f.clone().skip(1) {
                let d = &theta[b - 1] - &theta[b];
                if !d.is_integer() {
                    return Err(Error::InvalidLevi(format!(
                        "θ eigenvalue {d} on the even part is not an integer"
                    )));
                }
                if d <= Scalar::zero() {
                    return Err(Error::InvalidLevi(format!(
                        "θ must strictly decrease across the blocks of each factor (blocks {} and {})",
                        b - 1,
                        b
                    )));
                }
            }
        }
        Ok(LeviDatum { levi, theta })
    }

    pub fn parse(alg: &Algebra, levi: Option<&str>, theta: Option<&str>) -> Result<LeviDatum> {
        let (m, n) = (alg.datum.m, alg.datum.n);
        let levi = match levi {
            Some(s) => Levi::parse(s, m, n)?,
            None => Levi::full(m, n),
        };
        let theta = match theta {
            Some(s) => s.split(',').map(parse_scalar).collect::<Result<Vec<_>>>()?,
            None => vec![Scalar::zero(); levi.num_blocks()],
        };
        LeviDatum::new(alg, levi, theta)
    }

    /// ⟨ν, θ⟩ for a t-weight ν in the block basis.
    pub fn pair(&self, nu: &TorusWeight) -> Scalar {
        nu.pair(&self.theta)
    }

    pub fn theta_is_zero(&self) -> bool {
        self.theta.iter().all(Zero::is_zero)
    }

    pub fn theta_strings(&self) -> Vec<String> {
        self.theta.iter().map(fmt_scalar).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn parse_and_restrict() {
        let l = Levi::parse("2+1|1", 3, 1).unwrap();
        assert_eq!(l.intervals(), vec![0..2, 2..3, 3..4]);
        let w = Weight::from_ints(3, &[1, 2, 3], &[4]);
        assert_eq!(l.restrict(&w), TorusWeight::from_ints(&[3, 3, 4]));
        assert_eq!(l.weyl_order(), 2);
        assert!(Levi::parse("2+2|1", 3, 1).is_err());
        assert!(Levi::parse("3", 3, 1).is_err());
    }

    #[test]
    fn restriction_agrees_with_torus_pairing() {
        let alg = Algebra::parse("gl(3|2)").unwrap();
        let l = Levi::parse("1+2|2", 3, 2).unwrap();
        let w = Weight::parse("1/2,3,-2|5,7", 3, 2).unwrap();
        assert_eq!(alg.restrict_to_torus(&w, &l.torus_basis(&alg)).unwrap(), l.restrict(&w));
    }

    #[test]
    fn theta_checks() {
        let alg = Algebra::parse("gl(3|1)").unwrap();
        let l = Levi::parse("2+1|1", 3, 1).unwrap();
        assert!(LeviDatum::new(&alg, l.clone(), vec![rat(1, 3), rat(-2, 3), int(0)]).is_ok());
        // not decreasing
        assert!(LeviDatum::new(&alg, l.clone(), vec![int(0), int(1), int(0)]).is_err());
        // θ = 0 on a proper Levi: centralizer is too big
        assert!(LeviDatum::new(&alg, l.clone(), vec![int(0); 3]).is_err());
        // non-integral eigenvalue
        assert!(LeviDatum::new(&alg, l, vec![rat(1, 2), int(0), int(0)]).is_err());
        assert!(LeviDatum::parse(&alg, None, None).unwrap().theta_is_zero());
    }
}
