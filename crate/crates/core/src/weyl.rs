//! Weyl groups of gl_m + gl_n and its standard Levis as block-preserving
//! permutations, the ρ₀-shifted action, Levi-dominant representatives and
//! the Weyl dimension formula.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::levi::Levi;
use crate::scalar::{int, Scalar};
use crate::superalgebra::Weight;

pub const DEFAULT_GROUP_BOUND: usize = 5040;

/// A permutation of `0..N` in one-line notation: `self.0[i] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Parses one-line notation with 1-based entries, e.g. `"2143"` or
    /// `"2,1,4,3"`.
    pub fn parse(s: &str) -> Result<Perm> {
        let s = s.trim();
        let digits: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParseError(format!("bad permutation {s:?}")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::ParseError(format!("bad permutation {s:?}")))?
        };
        let n = digits.len();
        let mut seen = vec![false; n];
        for &d in &digits {
            if d == 0 || d > n || seen[d - 1] {
                return Err(Error::ParseError(format!("{s:?} is not a permutation of 1..{n}")));
            }
            seen[d - 1] = true;
        }
        Ok(Perm(digits.into_iter().map(|d| d - 1).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `s_i ∘ self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        )
    }

    /// `self ∘ s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Perm(w)
    }

    /// ℓ(s_i w) < ℓ(w).
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] > inv.0[i + 1]
    }

    /// ℓ(w s_i) < ℓ(w).
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// Bruhat order by the tableau criterion.
    pub fn bruhat_le(&self, w: &Perm) -> bool {
        let n = self.len();
        assert_eq!(n, w.len());
        for i in 0..n {
            for j in 0..n {
                let cx = self.0[..=i].iter().filter(|&&v| v >= j).count();
                let cw = w.0[..=i].iter().filter(|&&v| v >= j).count();
                if cx > cw {
                    return false;
                }
            }
        }
        true
    }

    /// `(wλ)_i = λ_{w^{-1}(i)}`.
    pub fn act(&self, w: &Weight) -> Weight {
        let mut coords = vec![Scalar::zero(); w.len()];
        for (i, &t) in self.0.iter().enumerate() {
            coords[t] = w.coords[i].clone();
        }
        Weight { coords, m: w.m }
    }

    /// `w·λ = w(λ + ρ₀) − ρ₀`.
    pub fn dot(&self, lambda: &Weight, rho0: &Weight) -> Weight {
        self.act(&lambda.add(rho0)).sub(rho0)
    }

    pub fn one_line(&self) -> String {
        self.0.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line())
    }
}

/// Product of symmetric groups on consecutive index blocks, realized
/// inside S_N.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub blocks: Vec<std::ops::Range<usize>>,
    pub elements: Vec<Perm>,
    pub lengths: Vec<usize>,
    index: HashMap<Perm, usize>,
    /// Simple reflections s_i: swaps of i, i+1 inside one block.
    pub simple: Vec<usize>,
}

impl WeylGroup {
    pub fn of_levi(levi: &Levi) -> Result<WeylGroup> {
        Self::of_blocks(levi.intervals(), DEFAULT_GROUP_BOUND)
    }

    pub fn of_blocks(blocks: Vec<std::ops::Range<usize>>, bound: usize) -> Result<WeylGroup> {
        let order: usize = blocks.iter().map(|r| (1..=r.len()).product::<usize>()).product();
        if order > bound {
            return Err(Error::GroupTooLarge { order, bound });
        }
        let n = blocks.last().map_or(0, |r| r.end);
        let mut elements = vec![Perm::identity(n)];
        for r in &blocks {
            let mut next = Vec::with_capacity(elements.len() * (1..=r.len()).product::<usize>());
            for p in permutations(r.len()) {
                for e in &elements {
                    let mut w = e.0.clone();
                    for (k, &pk) in p.iter().enumerate() {
                        w[r.start + k] = r.start + pk;
                    }
                    next.push(Perm(w));
                }
            }
            elements = next;
        }
        elements.sort_by_key(|w| (w.length(), w.clone()));
        let lengths = elements.iter().map(Perm::length).collect();
        let index = elements.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let simple = blocks.iter().flat_map(|r| r.start..r.end.saturating_sub(1)).collect();
        Ok(WeylGroup { blocks, elements, lengths, index, simple })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, w: &Perm) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn longest(&self) -> &Perm {
        self.elements.last().expect("nonempty group")
    }

    /// Elements covered by `w` in Bruhat order: `w ∘ t` for transpositions
    /// `t` inside a block that lower the length by exactly one.
    pub fn covers(&self, w: &Perm) -> Vec<Perm> {
        let l = w.length();
        let mut out = Vec::new();
        for r in &self.blocks {
            for i in r.clone() {
                for j in i + 1..r.end {
                    let mut x = w.0.clone();
                    x.swap(i, j);
                    let x = Perm(x);
                    if x.length() + 1 == l {
                        out.push(x);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominant {
    Regular { u: Perm, mu: Weight },
    Singular,
}

/// The unique `u` in the Levi Weyl group with `u·ν` Levi-dominant, or
/// `Singular` when ν + ρ₀ has a repeated coordinate inside a block.
pub fn to_levi_dominant(levi: &Levi, nu: &Weight, rho0: &Weight) -> Result<Dominant> {
    let shifted = nu.add(rho0);
    let mut u = vec![0; nu.len()];
    for r in levi.intervals() {
        for i in r.clone() {
            if !(&shifted.coords[i] - &shifted.coords[r.start]).is_integer() {
                return Err(Error::NonIntegral(format!("{nu} is not integral for the Levi {levi}")));
            }
        }
        let mut order: Vec<usize> = r.clone().collect();
        order.sort_by(|&a, &b| shifted.coords[b].cmp(&shifted.coords[a]));
        if order.windows(2).any(|p| shifted.coords[p[0]] == shifted.coords[p[1]]) {
            return Ok(Dominant::Singular);
        }
        for (k, &i) in order.iter().enumerate() {
            u[i] = r.start + k;
        }
    }
    let u = Perm(u);
    let mu = u.dot(nu, rho0);
    Ok(Dominant::Regular { u, mu })
}

/// Integral and weakly decreasing within each Levi block.
pub fn is_levi_dominant(levi: &Levi, mu: &Weight) -> bool {
    levi.intervals().into_iter().all(|r| {
        r.clone().skip(1).all(|j| {
            let d = &mu.coords[j - 1] - &mu.coords[j];
            d.is_integer() && d >= Scalar::zero()
        })
    })
}

/// dim L₀₀(μ) = ∏ over blocks, i < j of (μ_i − μ_j + j − i)/(j − i).
pub fn weyl_dimension(levi: &Levi, mu: &Weight) -> Result<Scalar> {
    if !is_levi_dominant(levi, mu) {
        return Err(Error::NotDominant(format!("{mu} is not dominant integral for the Levi {levi}")));
    }
    let mut d = Scalar::one();
    for r in levi.intervals() {
        for i in r.clone() {
            for j in i + 1..r.end {
                let gap = int((j - i) as i64);
                d *= (&mu.coords[i] - &mu.coords[j] + &gap) / gap;
            }
        }
    }
    debug_assert!(d.is_integer());
    Ok(d)
}

/// An antidominant λ⁰ and the longest `w` with `w·λ⁰ = λ`, inside the
/// Weyl group of the blocks.
pub fn antidominant_pair(group: &WeylGroup, lambda: &Weight, rho0: &Weight) -> Result<(Weight, Perm)> {
    let shifted = lambda.add(rho0);
    let mut sorted = shifted.clone();
    for r in &group.blocks {
        for i in r.clone() {
            if !(&shifted.coords[i] - &shifted.coords[r.start]).is_integer() {
                return Err(Error::NonIntegral(format!("{lambda} is not integral")));
            }
        }
        let mut vals: Vec<Scalar> = shifted.coords[r.clone()].to_vec();
        vals.sort();
        sorted.coords[r.clone()].clone_from_slice(&vals);
    }
    let lambda0 = sorted.sub(rho0);
    let w = group
        .elements
        .iter()
        .rev()
        .find(|w| w.dot(&lambda0, rho0) == *lambda)
        .expect("some element reaches λ from its antidominant representative")
        .clone();
    Ok((lambda0, w))
}
