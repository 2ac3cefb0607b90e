//! The character algorithm: parabolic Verma characters after the Soergel
//! functor, their sum over a multiplicity table, division by the orbit
//! size, and the Clifford division producing the W-module character.

use serde::Serialize;

use crate::category_o::{
    even_simple_character, kac_multiplicity_table, to_parabolic_verma_basis, MultiplicityTable, TableSource,
};
use crate::character::{FormalCharacter, TruncationSpec};
use crate::error::{Error, Result};
use crate::levi::LeviDatum;
use crate::nilpotent::{NilpotentDatum, PartitionPair};
use crate::scalar::Scalar;
use crate::superalgebra::{Algebra, Family, TorusWeight, Weight};
use crate::weyl::weyl_dimension;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    WTilde,
    #[default]
    W,
    /// The even-part W₀ character of the same λ, for comparison.
    W0Reference,
}

impl std::str::FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wtilde" => Ok(ModuleKind::WTilde),
            "w" => Ok(ModuleKind::W),
            "w0-reference" => Ok(ModuleKind::W0Reference),
            _ => Err(Error::ParseError(format!("unknown module kind {s:?} (wtilde, w, w0-reference)"))),
        }
    }
}

/// Everything the pipeline needs for one λ.
pub struct Context<'a> {
    pub nd: &'a NilpotentDatum,
    pub levi: &'a LeviDatum,
    pub denominators: Vec<TorusWeight>,
    /// Lowest exact pairing; `None` when θ = 0 and everything is finite.
    pub floor: Option<Scalar>,
}

impl<'a> Context<'a> {
    pub fn new(nd: &'a NilpotentDatum, levi: &'a LeviDatum, floor: Option<Scalar>) -> Result<Self> {
        let denominators = nd.denominator_weights(levi)?;
        if floor.is_none() && !denominators.is_empty() {
            return Err(Error::DivergentDirection("denominators present but no truncation floor".into()));
        }
        Ok(Context { nd, levi, denominators, floor })
    }

    fn rho0(&self) -> &Weight {
        &self.nd.algebra.datum.rho0
    }

    /// (μ − ρ₀)|_t.
    pub fn top_weight(&self, mu: &Weight) -> TorusWeight {
        self.levi.levi.restrict(&mu.sub(self.rho0()))
    }

    /// dim L₀₀(μ) · e^{(μ−ρ₀)|_t} · ∏ (1 − e^{μ_i})⁻¹.
    pub fn parabolic_verma(&self, mu: &Weight) -> Result<FormalCharacter> {
        let dim = weyl_dimension(&self.levi.levi, mu)?;
        let dim: i128 = dim.to_integer().try_into().expect("dimension fits");
        let mut ch = FormalCharacter::monomial(self.top_weight(mu), dim, self.levi.theta.clone());
        if let Some(f) = &self.floor {
            ch = ch.truncate(f);
            for m in &self.denominators {
                ch = ch.mul_geom_inverse(m, -1, f)?;
            }
        }
        Ok(ch)
    }

    /// Σ c_i · parabolic_verma(λ_i).
    pub fn simple(&self, table: &MultiplicityTable) -> Result<FormalCharacter> {
        let mut ch = FormalCharacter::zero(self.levi.theta.clone());
        if let Some(f) = &self.floor {
            ch = ch.truncate(f);
        }
        for (mu, c) in &table.entries {
            ch = ch.add(&self.parabolic_verma(mu)?.scale(*c as i128));
        }
        Ok(ch)
    }
}

/// Coefficientwise division by |I_λ|.
pub fn divide_by_orbit(ch: &FormalCharacter, orbit_size: u64) -> Result<FormalCharacter> {
    let k = orbit_size as i128;
    if k == 0 {
        return Err(Error::NonIntegralDivision("orbit size must be positive".into()));
    }
    if let Some((w, c)) = ch.terms.iter().find(|(_, &c)| c % k != 0) {
        return Err(Error::NonIntegralDivision(format!("coefficient {c} at e^{w} is not divisible by |I_λ| = {k}")));
    }
    let mut out = ch.clone();
    for c in out.terms.values_mut() {
        *c /= k;
    }
    Ok(out)
}

/// Ch · ∏ (1 + e^{μ′_i})⁻¹.
pub fn clifford_divide(ch: &FormalCharacter, weights: &[TorusWeight], floor: Option<&Scalar>) -> Result<FormalCharacter> {
    let mut out = ch.clone();
    for w in weights {
        out = out.divide_one_plus(w, floor)?;
    }
    Ok(out)
}

/// |I_λ| is 1 for every nilpotent of gl(m|n).
pub fn default_orbit_size(alg: &Algebra) -> Option<u64> {
    (alg.datum.family == Family::Gl).then_some(1)
}

/// One character job.
#[derive(Debug, Clone)]
pub struct Job {
    pub algebra: String,
    pub nilpotent: String,
    pub levi: Option<String>,
    pub theta: Option<String>,
    pub lambda: Option<String>,
    pub table: Option<MultiplicityTable>,
    pub depth: u32,
    pub kind: ModuleKind,
    pub orbit_size: Option<u64>,
    pub swap_lagrangian: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Term {
    pub weight: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterOut {
    pub label: String,
    pub polynomial: bool,
    pub exact_from_pairing: Option<String>,
    pub terms: Vec<Term>,
    pub value_at_one: Option<String>,
}

impl CharacterOut {
    pub fn new(label: &str, ch: &FormalCharacter) -> Self {
        CharacterOut {
            label: label.into(),
            polynomial: ch.is_polynomial(),
            exact_from_pairing: ch.valid_from.as_ref().map(ToString::to_string),
            terms: ch
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| Term { weight: w.strings(), coeff: c.to_string() })
                .collect(),
            value_at_one: ch.eval_at_one().map(|v| v.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableOut {
    pub source: TableSource,
    pub entries: Vec<(String, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterReport {
    pub algebra: String,
    pub nilpotent: String,
    pub levi: String,
    pub theta: Vec<String>,
    pub torus_basis: Vec<String>,
    pub lambda: Option<String>,
    pub kind: ModuleKind,
    pub rho_convention: String,
    pub table: TableOut,
    pub denominator_weights: Vec<Vec<String>>,
    pub clifford_weights: Vec<Vec<String>>,
    pub lagrangian: String,
    pub orbit_size: u64,
    pub depth: Option<u32>,
    pub truncation_reference: Option<Vec<String>>,
    pub truncation_floor: Option<String>,
    pub dimension_factor: u64,
    pub characters: Vec<CharacterOut>,
    pub caveats: Vec<String>,
    #[serde(skip)]
    pub raw: Vec<FormalCharacter>,
}

fn torus_basis_labels(ld: &LeviDatum) -> Vec<String> {
    let m = ld.levi.m();
    ld.levi
        .intervals()
        .into_iter()
        .map(|r| {
            let name = |i: usize| if i < m { format!("e{}", i + 1) } else { format!("d{}", i - m + 1) };
            if r.len() == 1 {
                format!("E({})", name(r.start))
            } else {
                format!("E({}..{})", name(r.start), name(r.end - 1))
            }
        })
        .collect()
}

/// Table of the even simple L₀(λ) in parabolic Vermas.
pub fn even_multiplicity_table(alg: &Algebra, lambda: &Weight, ld: &LeviDatum) -> Result<MultiplicityTable> {
    let vc = even_simple_character(&alg.datum, lambda)?;
    let entries = to_parabolic_verma_basis(&vc, &ld.levi, &alg.datum.rho0)?;
    Ok(MultiplicityTable { lambda: Some(lambda.clone()), entries, source: TableSource::ComputedTypical })
}

pub fn run(job: &Job) -> Result<CharacterReport> {
    let alg = Algebra::parse(&job.algebra)?;
    let (m, n) = (alg.datum.m, alg.datum.n);
    let p = PartitionPair::parse(&job.nilpotent)?;
    let nd = NilpotentDatum::build(&alg, &p)?;
    let ld = LeviDatum::parse(&alg, job.levi.as_deref(), job.theta.as_deref())?;
    let lambda = job.lambda.as_deref().map(|s| Weight::parse(s, m, n)).transpose()?;
    let table = match (&job.table, &lambda, job.kind) {
        (_, Some(l), ModuleKind::W0Reference) => even_multiplicity_table(&alg, l, &ld)?,
        (Some(t), _, _) => t.clone(),
        (None, Some(l), _) => kac_multiplicity_table(&alg.datum, l, &ld.levi)?,
        (None, None, _) => return Err(Error::ParseError("either --lambda or --table is required".into())),
    };
    if table.entries.is_empty() {
        return Err(Error::ParseError("multiplicity table has no entries".into()));
    }
    let orbit_size = match job.orbit_size.or_else(|| default_orbit_size(&alg)) {
        Some(k) => k,
        None => return Err(Error::UnsupportedFamily(format!("|I_λ| must be supplied for {}", alg.datum.name()))),
    };

    let (floor, reference) = if ld.theta_is_zero() {
        (None, None)
    } else {
        let probe = Context { nd: &nd, levi: &ld, denominators: vec![], floor: None };
        let reference = table
            .entries
            .iter()
            .map(|(mu, _)| probe.top_weight(mu))
            .max_by(|a, b| ld.pair(a).cmp(&ld.pair(b)).then_with(|| b.cmp(a)))
            .expect("nonempty table");
        let spec = TruncationSpec { direction: ld.theta.clone(), depth: job.depth, reference: reference.clone() };
        (Some(spec.floor()), Some(reference))
    };
    let ctx = Context::new(&nd, &ld, floor.clone())?;
    let soergel = ctx.simple(&table)?;
    let wtilde = divide_by_orbit(&soergel, orbit_size)?;
    let mut characters = vec![CharacterOut::new("soergel-simple", &soergel), CharacterOut::new("wtilde", &wtilde)];
    let mut raw = vec![soergel, wtilde.clone()];
    let clifford = if job.kind == ModuleKind::W0Reference { vec![] } else { nd.clifford_weights(&ld, job.swap_lagrangian)? };
    if job.kind == ModuleKind::W {
        let w = clifford_divide(&wtilde, &clifford, floor.as_ref())?;
        characters.push(CharacterOut::new("w", &w));
        raw.push(w);
    }
    if job.kind == ModuleKind::W0Reference {
        characters.truncate(1);
        characters[0].label = "w0".into();
        raw.truncate(1);
    }
    let mut caveats = vec![
        "Levi/theta admissibility is checked only locally: e in the Levi, theta central with integral, strictly decreasing block differences".to_string(),
    ];
    if table.source == TableSource::UserSupplied {
        caveats.push("multiplicities taken from a user-supplied table".into());
    }
    Ok(CharacterReport {
        algebra: alg.datum.name(),
        nilpotent: p.to_string(),
        levi: ld.levi.to_string(),
        theta: ld.theta_strings(),
        torus_basis: torus_basis_labels(&ld),
        lambda: lambda.as_ref().map(ToString::to_string),
        kind: job.kind,
        rho_convention: "rho = rho0 - rho1 over the standard positive system; Verma tops use rho0".into(),
        table: TableOut { source: table.source, entries: table.entries.iter().map(|(w, c)| (w.to_string(), *c)).collect() },
        denominator_weights: ctx.denominators.iter().map(TorusWeight::strings).collect(),
        clifford_weights: clifford.iter().map(TorusWeight::strings).collect(),
        lagrangian: if job.swap_lagrangian { "[f, g_+1]" } else { "[f, g_-1]" }.into(),
        orbit_size,
        depth: floor.as_ref().map(|_| job.depth),
        truncation_reference: reference.map(|r| r.strings()),
        truncation_floor: floor.map(|f| f.to_string()),
        dimension_factor: nd.module_dimension_factor()?,
        characters,
        caveats,
        raw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn job(alg: &str, nil: &str, lambda: &str) -> Job {
        Job {
            algebra: alg.into(),
            nilpotent: nil.into(),
            levi: None,
            theta: None,
            lambda: Some(lambda.into()),
            table: None,
            depth: 20,
            kind: ModuleKind::W,
            orbit_size: None,
            swap_lagrangian: false,
        }
    }

    #[test]
    fn gl21_distinguished() {
        // λ = (5,1|-3): D = 5, t-weight of the top (6, -3)
        let r = run(&job("gl(2|1)", "2|1", "5,1|-3")).unwrap();
        let (soergel, wtilde, w) = (&r.raw[0], &r.raw[1], &r.raw[2]);
        assert!(soergel.is_polynomial() && w.is_polynomial());
        let x = |a: i64, b: i64| TorusWeight::from_ints(&[a, b]);
        assert_eq!(soergel.terms.len(), 3);
        assert_eq!(soergel.coeff(&x(6, -3)), 5);
        assert_eq!(soergel.coeff(&x(5, -2)), 10);
        assert_eq!(soergel.coeff(&x(4, -1)), 5);
        assert_eq!(soergel.eval_at_one(), Some(4 * 5));
        assert_eq!(wtilde, soergel);
        assert_eq!(w.terms.len(), 2);
        assert_eq!(w.coeff(&x(6, -3)), 5);
        assert_eq!(w.coeff(&x(5, -2)), 5);
        assert_eq!(wtilde.eval_at_one().unwrap(), 2 * w.eval_at_one().unwrap());
        assert_eq!(r.dimension_factor, 2);
        assert_eq!(r.table.entries.len(), 4);
    }

    #[test]
    fn single_entry_table_is_parabolic_verma() {
        let alg = Algebra::parse("gl(2|1)").unwrap();
        let nd = NilpotentDatum::build(&alg, &PartitionPair::parse("2|1").unwrap()).unwrap();
        let ld = LeviDatum::full(2, 1);
        let ctx = Context::new(&nd, &ld, None).unwrap();
        let mu = Weight::from_ints(2, &[3, 1], &[0]);
        let t = MultiplicityTable { lambda: None, entries: vec![(mu.clone(), 1)], source: TableSource::UserSupplied };
        assert_eq!(ctx.simple(&t).unwrap(), ctx.parabolic_verma(&mu).unwrap());
        assert_eq!(
            ctx.parabolic_verma(&mu).unwrap(),
            FormalCharacter::monomial(TorusWeight::from_ints(&[4, 0]), 3, vec![int(0), int(0)])
        );
    }

    #[test]
    fn orbit_size_checks() {
        let mut j = job("gl(2|1)", "2|1", "5,1|-3");
        j.orbit_size = Some(5);
        assert!(run(&j).is_ok());
        j.orbit_size = Some(2);
        assert!(matches!(run(&j), Err(Error::NonIntegralDivision(_))));
    }

    #[test]
    fn swap_flag() {
        let mut j = job("gl(2|1)", "2|1", "5,1|-3");
        j.swap_lagrangian = true;
        let r = run(&j).unwrap();
        assert_eq!(r.clifford_weights, vec![vec!["1".to_string(), "-1".to_string()]]);
        assert_eq!(r.raw[2].eval_at_one(), Some(10));
    }

    #[test]
    fn atypical_without_table() {
        assert!(matches!(run(&job("gl(2|1)", "2|1", "1,0|-2")), Err(Error::AtypicalWeight(_))));
    }

    #[test]
    fn proper_levi_truncation_stable() {
        let mut j = job("gl(3|1)", "2,1|1", "2,1,0|5");
        j.levi = Some("2+1|1".into());
        j.theta = Some("1/3,-2/3,0".into());
        let a = run(&j).unwrap();
        j.depth = 30;
        let b = run(&j).unwrap();
        let floor = a.raw[0].valid_from.clone().unwrap();
        assert_eq!(floor, a.raw[0].top().unwrap() - int(20));
        for (x, y) in a.raw.iter().zip(&b.raw) {
            assert!(!x.is_polynomial());
            assert!(x.agrees_above(y, &floor));
        }
        let _ = rat(1, 3);
    }

    #[test]
    fn w0_reference() {
        let mut j = job("gl(2|1)", "2|1", "5,1|-3");
        j.kind = ModuleKind::W0Reference;
        let r = run(&j).unwrap();
        assert_eq!(r.characters.len(), 1);
        assert_eq!(r.raw[0].eval_at_one(), Some(5));
    }
}
