//! Formal characters on the torus t: finitely many monomials e^ν with
//! integer coefficients, exact in every θ-pairing at or above a floor.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};
use crate::superalgebra::TorusWeight;

pub const DEFAULT_DEPTH: u32 = 20;

/// Where a truncated character is cut: terms with ⟨ν, direction⟩ below
/// `⟨reference, direction⟩ − depth` are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationSpec {
    pub direction: Vec<Scalar>,
    pub depth: u32,
    pub reference: TorusWeight,
}

impl TruncationSpec {
    pub fn floor(&self) -> Scalar {
        self.reference.pair(&self.direction) - int(self.depth as i64)
    }

    /// Depth from `WSC_DEPTH` when set and valid, else the default.
    pub fn depth_from_env() -> u32 {
        std::env::var("WSC_DEPTH").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DEPTH)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    pub terms: BTreeMap<TorusWeight, i128>,
    /// Pairing direction (θ).
    pub direction: Vec<Scalar>,
    /// Coefficients are exact for pairings ≥ this; `None` for an exact
    /// Laurent polynomial.
    pub valid_from: Option<Scalar>,
}

fn max_floor(a: &Option<Scalar>, b: &Option<Scalar>) -> Option<Scalar> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y).clone()),
        (x, y) => x.clone().or_else(|| y.clone()),
    }
}

fn add_coeff(terms: &mut BTreeMap<TorusWeight, i128>, w: TorusWeight, c: i128) {
    if c == 0 {
        return;
    }
    match terms.entry(w) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl FormalCharacter {
    pub fn zero(direction: Vec<Scalar>) -> Self {
        FormalCharacter { terms: BTreeMap::new(), direction, valid_from: None }
    }

    pub fn monomial(w: TorusWeight, c: i128, direction: Vec<Scalar>) -> Self {
        let mut f = FormalCharacter::zero(direction);
        add_coeff(&mut f.terms, w, c);
        f
    }

    pub fn one(dim: usize, direction: Vec<Scalar>) -> Self {
        Self::monomial(TorusWeight::zero(dim), 1, direction)
    }

    pub fn pair(&self, w: &TorusWeight) -> Scalar {
        w.pair(&self.direction)
    }

    pub fn is_polynomial(&self) -> bool {
        self.valid_from.is_none()
    }

    pub fn coeff(&self, w: &TorusWeight) -> i128 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Largest pairing of a term.
    pub fn top(&self) -> Option<Scalar> {
        self.terms.keys().map(|w| self.pair(w)).max()
    }

    pub fn add(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            add_coeff(&mut out.terms, w.clone(), c);
        }
        out.valid_from = max_floor(&self.valid_from, &other.valid_from);
        out.drop_invalid();
        out
    }

    pub fn scale(&self, c: i128) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.direction.clone());
        for (w, &x) in &self.terms {
            add_coeff(&mut out.terms, w.clone(), x * c);
        }
        out.valid_from = self.valid_from.clone();
        out
    }

    /// Multiplication by e^λ.
    pub fn shift(&self, lambda: &TorusWeight) -> FormalCharacter {
        FormalCharacter {
            terms: self.terms.iter().map(|(w, &c)| (w.add(lambda), c)).collect(),
            direction: self.direction.clone(),
            valid_from: self.valid_from.as_ref().map(|f| f + self.pair(lambda)),
        }
    }

    pub fn mul(&self, other: &FormalCharacter) -> FormalCharacter {
        // Missing terms of one factor only affect pairings below its floor
        // plus the top of the other factor.
        let bound = |f: &Option<Scalar>, top: Option<Scalar>| f.as_ref().map(|f| f + top.unwrap_or_else(Scalar::zero));
        let valid_from = max_floor(&bound(&self.valid_from, other.top()), &bound(&other.valid_from, self.top()));
        let mut out = FormalCharacter::zero(self.direction.clone());
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let w = a.add(b);
                if valid_from.as_ref().is_some_and(|f| &self.pair(&w) < f) {
                    continue;
                }
                add_coeff(&mut out.terms, w, x * y);
            }
        }
        out.valid_from = valid_from;
        out
    }

    fn drop_invalid(&mut self) {
        if let Some(f) = self.valid_from.clone() {
            let dir = self.direction.clone();
            self.terms.retain(|w, _| w.pair(&dir) >= f);
        }
    }

    /// Keeps the terms with pairing ≥ `floor`.
    pub fn truncate(&self, floor: &Scalar) -> FormalCharacter {
        let mut out = self.clone();
        out.valid_from = max_floor(&self.valid_from, &Some(floor.clone()));
        out.drop_invalid();
        out
    }

    /// The series (1 − e^μ)⁻¹ (`sign = −1`) or (1 + e^μ)⁻¹ (`sign = +1`),
    /// expanded as Σ (∓1)^k e^{kμ} far enough that a product with a
    /// character of top pairing `top` is exact down to `floor`.
    pub fn geom_inverse(mu: &TorusWeight, sign: i32, direction: &[Scalar], top: &Scalar, floor: &Scalar) -> Result<FormalCharacter> {
        let p = mu.pair(direction);
        if !p.is_negative() {
            return Err(Error::DivergentDirection(format!(
                "⟨{mu}, θ⟩ = {p} is not negative, so the expansion of 1{}e^{mu} does not converge",
                if sign < 0 { "−" } else { "+" }
            )));
        }
        let mut out = FormalCharacter::zero(direction.to_vec());
        let mut k: i64 = 0;
        let mut w = TorusWeight::zero(mu.dim());
        let lowest = floor - top;
        while int(k) * &p >= lowest {
            let c = if sign > 0 && k % 2 == 1 { -1 } else { 1 };
            add_coeff(&mut out.terms, w.clone(), c);
            w = w.add(mu);
            k += 1;
        }
        out.valid_from = Some(lowest);
        Ok(out)
    }

    /// self · (1 − e^μ)⁻¹ (`sign = −1`) or self · (1 + e^μ)⁻¹
    /// (`sign = +1`), exact down to `floor`.
    pub fn mul_geom_inverse(&self, mu: &TorusWeight, sign: i32, floor: &Scalar) -> Result<FormalCharacter> {
        let Some(top) = self.top() else {
            let mut z = self.clone();
            z.valid_from = max_floor(&z.valid_from, &Some(floor.clone()));
            return Ok(z);
        };
        let g = FormalCharacter::geom_inverse(mu, sign, &self.direction, &top, floor)?;
        Ok(self.mul(&g).truncate(floor))
    }

    /// Exact quotient by (1 + e^μ) along each coset of ℤμ.
    pub fn exact_divide_one_plus(&self, mu: &TorusWeight) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero(self.direction.clone());
        out.valid_from = self.valid_from.clone();
        if mu.is_zero() {
            for (w, &c) in &self.terms {
                if c % 2 != 0 {
                    return Err(Error::InexactDivision(format!("coefficient {c} at {w} is odd; cannot divide by 2")));
                }
                add_coeff(&mut out.terms, w.clone(), c / 2);
            }
            return Ok(out);
        }
        let j = mu.0.iter().position(|x| !x.is_zero()).expect("nonzero");
        // line base point and position t along μ, grouped by t mod 1
        let mut cosets: BTreeMap<(TorusWeight, Scalar), BTreeMap<i64, i128>> = BTreeMap::new();
        for (w, &c) in &self.terms {
            let t = &w.0[j] / &mu.0[j];
            let base = w.sub(&mu.scale(&t));
            let frac = &t - t.floor();
            let k: i64 = t.floor().to_integer().try_into().expect("small exponent");
            cosets.entry((base.add(&mu.scale(&frac)), frac)).or_default().insert(k, c);
        }
        for ((start, _), poly) in cosets {
            let lo = *poly.keys().next().expect("nonempty");
            let hi = *poly.keys().next_back().expect("nonempty");
            let mut prev: i128 = 0;
            for k in lo..=hi {
                let a = poly.get(&k).copied().unwrap_or(0);
                let q = a - prev;
                if k == hi {
                    if q != 0 {
                        return Err(Error::InexactDivision(format!(
                            "not divisible by 1 + e^{mu}: remainder {q} along the coset through {start}"
                        )));
                    }
                } else {
                    let lo_k = int(k);
                    add_coeff(&mut out.terms, start.add(&mu.scale(&lo_k)), q);
                }
                prev = q;
            }
        }
        Ok(out)
    }

    /// self · (1 + e^μ)⁻¹: exact division for polynomials or when μ is
    /// orthogonal to the direction, otherwise the series that converges
    /// along the direction.
    pub fn divide_one_plus(&self, mu: &TorusWeight, floor: Option<&Scalar>) -> Result<FormalCharacter> {
        let p = self.pair(mu);
        match (self.is_polynomial() || p.is_zero(), floor) {
            (true, _) | (false, None) => {
                let q = self.exact_divide_one_plus(mu)?;
                if self.is_polynomial() {
                    if let Some((w, c)) = q.terms.iter().find(|(_, &c)| c < 0) {
                        return Err(Error::InexactDivision(format!("negative quotient coefficient {c} at {w}")));
                    }
                }
                Ok(q)
            }
            (false, Some(f)) if p.is_negative() => self.mul_geom_inverse(mu, 1, f),
            (false, Some(f)) => {
                // (1 + e^μ)⁻¹ = e^{−μ} (1 + e^{−μ})⁻¹
                let neg = mu.neg();
                self.shift(&neg).mul_geom_inverse(&neg, 1, f)
            }
        }
    }

    /// Value at e^ν = 1 (polynomials only).
    pub fn eval_at_one(&self) -> Option<i128> {
        self.is_polynomial().then(|| self.terms.values().sum())
    }

    /// Terms sorted by decreasing pairing, then by weight.
    pub fn sorted_terms(&self) -> Vec<(&TorusWeight, i128)> {
        let mut v: Vec<(Scalar, &TorusWeight, i128)> =
            self.terms.iter().map(|(w, &c)| (self.pair(w), w, c)).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// Agreement on every pairing ≥ `floor`.
    pub fn agrees_above(&self, other: &FormalCharacter, floor: &Scalar) -> bool {
        self.truncate(floor).terms == other.truncate(floor).terms
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (w, c)) in terms.iter().enumerate() {
            let sep = if i == 0 { "" } else if *c < 0 { " - " } else { " + " };
            let c = if i == 0 { *c } else { c.abs() };
            let mono = format!("e^({})", w.strings().join(","));
            match c {
                1 => write!(f, "{sep}{mono}")?,
                -1 => write!(f, "{sep}-{mono}")?,
                _ => write!(f, "{sep}{c}{mono}")?,
            }
        }
        if let Some(v) = &self.valid_from {
            write!(f, " + (terms with pairing < {v})")?;
        }
        Ok(())
    }
}
