//! Grothendieck-group coefficients of simple modules of typical highest
//! weight in terms of parabolic Verma modules, through Kac-module
//! characters and Kazhdan–Lusztig multiplicities of the even part.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kl::{eval_at_one, Descent, KlTable};
use crate::levi::Levi;
use crate::superalgebra::{Family, RootDatum, Weight};
use crate::weyl::{antidominant_pair, is_levi_dominant, to_levi_dominant, Dominant, WeylGroup};

/// ⟨λ + ρ, β⟩ ≠ 0 for every odd positive root β.
pub fn typicality(datum: &RootDatum, lambda: &Weight) -> bool {
    let shifted = lambda.add(&datum.rho);
    datum.odd_positive_roots.iter().all(|b| !shifted.form(b).is_zero())
}

/// Odd positive roots β with ⟨λ + ρ, β⟩ = 0.
pub fn atypical_roots(datum: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let shifted = lambda.add(&datum.rho);
    datum.odd_positive_roots.iter().filter(|b| shifted.form(b).is_zero()).cloned().collect()
}

/// Σ c_ν ch M(ν), zero coefficients removed.
pub type VermaCombination = BTreeMap<Weight, i64>;

pub fn add_term(vc: &mut VermaCombination, nu: Weight, c: i64) {
    if c == 0 {
        return;
    }
    match vc.entry(nu) {
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

fn check_gl(datum: &RootDatum) -> Result<()> {
    if datum.family != Family::Gl {
        return Err(Error::UnsupportedFamily(format!("{} (the character route is implemented for gl(m|n))", datum.name())));
    }
    Ok(())
}

fn even_group(datum: &RootDatum) -> Result<WeylGroup> {
    WeylGroup::of_levi(&Levi::full(datum.m, datum.n))
}

/// ch L₀(λ) for the even part as Σ_x (−1)^{ℓ(w)−ℓ(x)} P_{x,w}(1) ch M(x·λ⁰)
/// with λ⁰ antidominant and w longest with w·λ⁰ = λ.
pub fn even_simple_character(datum: &RootDatum, lambda: &Weight) -> Result<VermaCombination> {
    check_gl(datum)?;
    let group = even_group(datum)?;
    let (l0, w) = antidominant_pair(&group, lambda, &datum.rho0)?;
    let wi = group.index_of(&w).expect("w in group");
    let mut kl = KlTable::new(&group, Descent::Left);
    let mut out = VermaCombination::new();
    for (xi, x) in group.elements.iter().enumerate() {
        let p = kl.p(xi, wi);
        if p.is_empty() {
            continue;
        }
        let sign = if (group.lengths[wi] - group.lengths[xi]) % 2 == 0 { 1 } else { -1 };
        add_term(&mut out, x.dot(&l0, &datum.rho0), sign * eval_at_one(&p));
    }
    Ok(out)
}

/// All sums Σ_{β∈S} β over subsets S of the odd positive roots, with
/// repetition.
pub fn odd_subset_sums(datum: &RootDatum) -> Vec<Weight> {
    let mut sums = vec![Weight::zero(datum.m, datum.n)];
    for b in &datum.odd_positive_roots {
        let more: Vec<Weight> = sums.iter().map(|s| s.add(b)).collect();
        sums.extend(more);
    }
    sums
}

/// Unmerged Verma terms of ch L̂(λ) = ∏(1 + e^{−β}) · ch L₀(λ).
pub fn kac_verma_terms(datum: &RootDatum, lambda: &Weight) -> Result<Vec<(Weight, i64)>> {
    check_gl(datum)?;
    if !typicality(datum, lambda) {
        return Err(Error::AtypicalWeight(format!(
            "{lambda} is atypical for {} (⟨λ+ρ, β⟩ = 0 for β = {})",
            datum.name(),
            atypical_roots(datum, lambda).iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
        )));
    }
    let even = even_simple_character(datum, lambda)?;
    let shifts = odd_subset_sums(datum);
    let mut out = Vec::with_capacity(even.len() * shifts.len());
    for s in &shifts {
        for (nu, &c) in &even {
            out.push((nu.sub(s), c));
        }
    }
    Ok(out)
}

pub fn kac_character_verma_expansion(datum: &RootDatum, lambda: &Weight) -> Result<VermaCombination> {
    let mut vc = VermaCombination::new();
    for (nu, c) in kac_verma_terms(datum, lambda)? {
        add_term(&mut vc, nu, c);
    }
    Ok(vc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableSource {
    ComputedTypical,
    UserSupplied,
}

/// Coefficients c_i of Σ c_i ch Δ_P(λ_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub lambda: Option<Weight>,
    pub entries: Vec<(Weight, i64)>,
    pub source: TableSource,
}

impl MultiplicityTable {
    pub fn total_coefficient_dimension(&self, levi: &Levi) -> Result<num_rational::BigRational> {
        let mut s = num_rational::BigRational::zero();
        for (mu, c) in &self.entries {
            s += crate::weyl::weyl_dimension(levi, mu)? * crate::scalar::int(*c);
        }
        Ok(s)
    }
}

/// Regroups Verma terms into parabolic Vermas: every ν = u·μ with μ
/// Levi-dominant contributes (−1)^{ℓ(u)} c_ν to μ, Levi-singular ν are
/// dropped, and the orbit sums are divided by |W_L|.
pub fn to_parabolic_verma_basis(vc: &VermaCombination, levi: &Levi, rho0: &Weight) -> Result<Vec<(Weight, i64)>> {
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, &c) in vc {
        if let Dominant::Regular { u, mu } = to_levi_dominant(levi, nu, rho0)? {
            let sign = if u.length() % 2 == 0 { 1 } else { -1 };
            *acc.entry(mu).or_insert(0) += sign * c;
        }
    }
    let order = levi.weyl_order() as i64;
    let mut out = Vec::new();
    for (mu, c) in acc {
        if c % order != 0 {
            return Err(Error::NotParabolic(format!(
                "orbit sum {c} at {mu} is not a multiple of |W_L| = {order}"
            )));
        }
        if c != 0 {
            out.push((mu, c / order));
        }
    }
    Ok(out)
}

/// ch Δ_P(μ) = Σ_{u∈W_L} (−1)^{ℓ(u)} ch M(u·μ), summed over a table.
pub fn re_expand(entries: &[(Weight, i64)], levi: &Levi, rho0: &Weight) -> Result<VermaCombination> {
    let group = WeylGroup::of_levi(levi)?;
    let mut vc = VermaCombination::new();
    for (mu, c) in entries {
        for (u, &l) in group.elements.iter().zip(&group.lengths) {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            add_term(&mut vc, u.dot(mu, rho0), sign * c);
        }
    }
    Ok(vc)
}

/// The computed table for a typical Levi-dominant λ.
pub fn kac_multiplicity_table(datum: &RootDatum, lambda: &Weight, levi: &Levi) -> Result<MultiplicityTable> {
    if !is_levi_dominant(levi, lambda) {
        return Err(Error::NotDominant(format!("{lambda} is not dominant integral for the Levi {levi}")));
    }
    let vc = kac_character_verma_expansion(datum, lambda)?;
    let entries = to_parabolic_verma_basis(&vc, levi, &datum.rho0)?;
    Ok(MultiplicityTable { lambda: Some(lambda.clone()), entries, source: TableSource::ComputedTypical })
}

#[derive(Debug, Serialize, Deserialize)]
struct TableEntryJson {
    weight: String,
    coeff: i64,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<u32>,
    #[serde(default)]
    lambda: Option<String>,
    entries: Vec<TableEntryJson>,
    #[serde(default)]
    source: Option<String>,
}

pub fn parse_multiplicity_table(text: &str, m: usize, n: usize, levi: &Levi) -> Result<MultiplicityTable> {
    let raw: TableJson = serde_json::from_str(text).map_err(|e| Error::ParseError(format!("multiplicity table: {e}")))?;
    if raw.entries.is_empty() {
        return Err(Error::ParseError("multiplicity table has no entries".into()));
    }
    let lambda = raw.lambda.as_deref().map(|s| Weight::parse(s, m, n)).transpose()?;
    let mut entries = Vec::with_capacity(raw.entries.len());
    for e in raw.entries {
        let w = Weight::parse(&e.weight, m, n)?;
        if !is_levi_dominant(levi, &w) {
            return Err(Error::NotDominant(format!("table weight {w} is not dominant integral for the Levi {levi}")));
        }
        entries.push((w, e.coeff));
    }
    Ok(MultiplicityTable { lambda, entries, source: TableSource::UserSupplied })
}

pub fn load_multiplicity_table(path: &Path, m: usize, n: usize, levi: &Levi) -> Result<MultiplicityTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_multiplicity_table(&text, m, n, levi)
}

pub fn table_to_json(t: &MultiplicityTable) -> serde_json::Value {
    serde_json::json!({
        "schema": 1,
        "lambda": t.lambda.as_ref().map(ToString::to_string),
        "entries": t.entries.iter().map(|(w, c)| serde_json::json!({"weight": w.to_string(), "coeff": c})).collect::<Vec<_>>(),
        "source": t.source,
    })
}
