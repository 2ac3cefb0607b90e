//! Kazhdan–Lusztig polynomials of products of symmetric groups by the
//! standard memoized recursion.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::weyl::{Perm, WeylGroup};

/// Coefficients in increasing degree; the zero polynomial is empty.
pub type Poly = Vec<i64>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn poly_add_shifted(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

pub fn eval_at_one(p: &[i64]) -> i64 {
    p.iter().sum()
}

pub fn fmt_poly(p: &[i64]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (i, 1) => format!("q^{i}"),
            (i, c) => format!("{c}q^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Which side the recursion peels a simple reflection off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Descent {
    Left,
    Right,
}

/// Memo of P_{x,w} over one Weyl group. Not shared between threads.
pub struct KlTable<'a> {
    group: &'a WeylGroup,
    descent: Descent,
    cache: HashMap<(usize, usize), Poly>,
    bruhat: HashMap<(usize, usize), bool>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl<'a> KlTable<'a> {
    pub fn new(group: &'a WeylGroup, descent: Descent) -> Self {
        let table = |f: fn(&Perm, usize) -> Perm| -> Vec<Vec<usize>> {
            group
                .simple
                .iter()
                .map(|&i| group.elements.iter().map(|w| group.index_of(&f(w, i)).expect("closed")).collect())
                .collect()
        };
        KlTable {
            group,
            descent,
            cache: HashMap::new(),
            bruhat: HashMap::new(),
            left: table(Perm::left_mul_simple),
            right: table(Perm::right_mul_simple),
        }
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    fn len(&self, x: usize) -> usize {
        self.group.lengths[x]
    }

    pub fn le(&mut self, x: usize, w: usize) -> bool {
        if x == w {
            return true;
        }
        if self.len(x) >= self.len(w) {
            return false;
        }
        let g = self.group;
        *self.bruhat.entry((x, w)).or_insert_with(|| g.elements[x].bruhat_le(&g.elements[w]))
    }

    fn mul(&self, k: usize, x: usize) -> usize {
        match self.descent {
            Descent::Left => self.left[k][x],
            Descent::Right => self.right[k][x],
        }
    }

    /// P_{x,w} by element; errors unless x ≤ w.
    pub fn polynomial(&mut self, x: &Perm, w: &Perm) -> Result<Poly> {
        let idx = |p: &Perm| {
            self.group
                .index_of(p)
                .ok_or_else(|| Error::ParseError(format!("{p} is not in the Weyl group")))
        };
        let (xi, wi) = (idx(x)?, idx(w)?);
        if !self.le(xi, wi) {
            return Err(Error::NotComparable(format!("{} is not below {} in Bruhat order", x.one_line(), w.one_line())));
        }
        Ok(self.p(xi, wi))
    }

    /// P_{x,w}, zero when x ≰ w.
    pub fn p(&mut self, x: usize, w: usize) -> Poly {
        if x == w {
            return vec![1];
        }
        if !self.le(x, w) {
            return vec![];
        }
        if let Some(p) = self.cache.get(&(x, w)) {
            return p.clone();
        }
        let k = (0..self.group.simple.len())
            .find(|&k| self.len(self.mul(k, w)) < self.len(w))
            .expect("w is not the identity");
        let v = self.mul(k, w);
        let sx = self.mul(k, x);
        let c = usize::from(self.len(sx) < self.len(x));
        let mut out = Poly::new();
        let a = self.p(sx, v);
        poly_add_shifted(&mut out, &a, 1 - c, 1);
        let b = self.p(x, v);
        poly_add_shifted(&mut out, &b, c, 1);
        let lv = self.len(v);
        let lw = self.len(w);
        for z in 0..self.group.order() {
            let lz = self.len(z);
            if lz >= lv || (lv - lz).is_multiple_of(2) || self.len(self.mul(k, z)) > lz {
                continue;
            }
            if !self.le(x, z) || !self.le(z, v) {
                continue;
            }
            let m = self.mu(z, v);
            if m != 0 {
                let pxz = self.p(x, z);
                poly_add_shifted(&mut out, &pxz, (lw - lz) / 2, -m);
            }
        }
        let out = trim(out);
        debug_assert!(out.iter().all(|&c| c >= 0), "negative KL coefficient");
        self.cache.insert((x, w), out.clone());
        out
    }

    /// Coefficient of q^{(ℓ(w)−ℓ(z)−1)/2} in P_{z,w}.
    pub fn mu(&mut self, z: usize, w: usize) -> i64 {
        let (lz, lw) = (self.len(z), self.len(w));
        if lz >= lw || (lw - lz) % 2 == 0 {
            return 0;
        }
        self.p(z, w).get((lw - lz - 1) / 2).copied().unwrap_or(0)
    }
}

/// Nonnegativity and the degree bound deg P_{x,w} ≤ (ℓ(w) − ℓ(x) − 1)/2.
pub fn satisfies_kl_bounds(p: &[i64], lx: usize, lw: usize) -> bool {
    if p.iter().any(|&c| c < 0) {
        return false;
    }
    if lx == lw {
        return p == [1];
    }
    p.first() == Some(&1) && p.len() <= (lw - lx - 1) / 2 + 1
}
