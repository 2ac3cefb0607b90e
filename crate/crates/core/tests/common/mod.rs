#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use wsc_core::weyl::Perm;

/// Kazhdan–Lusztig polynomials from R-polynomials: for each w, solve
/// q^d P(1/q) − P(q) = Σ_{x<y≤w} R_{x,y} P_{y,w} by taking the part of
/// degree ≤ (d−1)/2.
pub struct ROracle {
    r: HashMap<(Perm, Perm), Vec<i64>>,
}

fn add(a: &mut Vec<i64>, b: &[i64], shift: usize, scale: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += scale * c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

impl ROracle {
    pub fn new() -> Self {
        ROracle { r: HashMap::new() }
    }

    /// R_{x,w}; for s with ws < w: R_{xs,ws} if xs < x, else
    /// (q−1) R_{x,ws} + q R_{xs,ws}.
    pub fn r(&mut self, x: &Perm, w: &Perm) -> Vec<i64> {
        if x == w {
            return vec![1];
        }
        if !x.bruhat_le(w) {
            return vec![];
        }
        if let Some(v) = self.r.get(&(x.clone(), w.clone())) {
            return v.clone();
        }
        let i = (0..w.len() - 1).find(|&i| w.0[i] > w.0[i + 1]).expect("w is not the identity");
        let ws = w.right_mul_simple(i);
        let xs = x.right_mul_simple(i);
        let out = if xs.length() < x.length() {
            self.r(&xs, &ws)
        } else {
            let mut o = Vec::new();
            let a = self.r(x, &ws);
            add(&mut o, &a, 1, 1);
            add(&mut o, &a, 0, -1);
            let b = self.r(&xs, &ws);
            add(&mut o, &b, 1, 1);
            trim(o)
        };
        self.r.insert((x.clone(), w.clone()), out.clone());
        out
    }

    /// P_{x,w} for every x in `elements` (P = 0 off the Bruhat interval).
    pub fn column(&mut self, elements: &[Perm], w: &Perm) -> BTreeMap<Perm, Vec<i64>> {
        let mut below: Vec<&Perm> = elements.iter().filter(|x| x.bruhat_le(w)).collect();
        below.sort_by_key(|x| std::cmp::Reverse(x.length()));
        let mut p: BTreeMap<Perm, Vec<i64>> = BTreeMap::new();
        for x in below {
            if x == w {
                p.insert(x.clone(), vec![1]);
                continue;
            }
            let d = w.length() - x.length();
            let mut rhs = Vec::new();
            for (y, py) in &p {
                if y != x && x.bruhat_le(y) {
                    let r = self.r(x, y);
                    let prod = mul(&r, py);
                    add(&mut rhs, &prod, 0, 1);
                }
            }
            let keep = (d - 1) / 2;
            let px: Vec<i64> = rhs.iter().take(keep + 1).map(|c| -c).collect();
            p.insert(x.clone(), trim(px));
        }
        p
    }
}

/// All permutations of 0..n.
pub fn symmetric_group(n: usize) -> Vec<Perm> {
    wsc_core::weyl::permutations(n).into_iter().map(Perm).collect()
}

/// Laurent polynomials in integer exponent vectors.
pub type Poly = BTreeMap<Vec<i64>, i128>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, &c) in a {
        for (y, &d) in b {
            let k: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(k).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
