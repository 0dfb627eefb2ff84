//! Case predicates and seeded sampling of admissible parameters.
//!
//! Equalities such as `alpha*gamma + beta*delta = 0` have measure zero, so a
//! [`Recipe`] satisfies them by construction: each parameter is either drawn
//! (`any`, `nz`, `pm1`) or computed from parameters drawn before it. The
//! sampler then rejects draws that violate the group constraints, the case
//! predicate, or any excluded predicate.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{Group, GroupSpec};
use super::params::{Param, Params};
use super::poly::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Maximum number of draws before a region is declared infeasible.
pub const MAX_DRAWS: usize = 1000;

/// A conjunction of polynomial equalities and inequations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CasePredicate {
    pub equalities: Vec<Polynomial>,
    pub inequations: Vec<Polynomial>,
}

impl CasePredicate {
    pub fn always() -> Self {
        CasePredicate::default()
    }

    /// Parses `;`-separated items of the form `lhs = rhs` or `lhs != rhs`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut out = CasePredicate::default();
        for item in input.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (lhs, rhs, negated) = if let Some((l, r)) = item.split_once("!=") {
                (l, r, true)
            } else if let Some((l, r)) = item.split_once('=') {
                (l, r, false)
            } else {
                return Err(Error::Expression {
                    input: item.to_string(),
                    message: "expected `=` or `!=`".into(),
                });
            };
            let poly = &Polynomial::parse(lhs)? - &Polynomial::parse(rhs)?;
            if negated {
                out.inequations.push(poly);
            } else {
                out.equalities.push(poly);
            }
        }
        Ok(out)
    }

    pub fn params(&self) -> std::collections::BTreeSet<Param> {
        self.equalities
            .iter()
            .chain(&self.inequations)
            .flat_map(Polynomial::params)
            .collect()
    }

    /// Rejects predicates mentioning parameters the group does not have.
    pub fn validate_for(&self, group: Group) -> Result<()> {
        match self.params().into_iter().find(|p| !group.params().contains(p)) {
            Some(p) => Err(Error::UnexpectedParameter {
                group: group.name().into(),
                param: p.name().into(),
            }),
            None => Ok(()),
        }
    }

    pub fn holds(&self, params: &Params) -> Result<bool> {
        for e in &self.equalities {
            if !e.eval(params)?.is_zero() {
                return Ok(false);
            }
        }
        for n in &self.inequations {
            if n.eval(params)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CasePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .equalities
            .iter()
            .map(|p| format!("{p} = 0"))
            .chain(self.inequations.iter().map(|p| format!("{p} != 0")))
            .collect();
        if items.is_empty() {
            f.write_str("true")
        } else {
            f.write_str(&items.join("; "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Step {
    Any,
    NonZero,
    PlusMinusOne,
    Expr(RationalFunction),
}

/// Alternatives separated by `|`, each a `;`-separated list of
/// `param=any|nz|pm1|<expression>` assignments. Expressions may refer only
/// to parameters assigned earlier in the same alternative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    source: String,
    alternatives: Vec<Vec<(Param, Step)>>,
}

impl Recipe {
    pub fn parse(input: &str) -> Result<Self> {
        let err = |message: String| Error::Recipe {
            input: input.to_string(),
            message,
        };
        let mut alternatives = Vec::new();
        for alt in input.split('|') {
            let mut steps: Vec<(Param, Step)> = Vec::new();
            for item in alt.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let (name, rhs) = item
                    .split_once('=')
                    .ok_or_else(|| err(format!("expected param=value, got {item:?}")))?;
                let p: Param = name.trim().parse()?;
                if steps.iter().any(|(q, _)| *q == p) {
                    return Err(err(format!("{p} assigned twice")));
                }
                let step = match rhs.trim() {
                    "any" => Step::Any,
                    "nz" => Step::NonZero,
                    "pm1" => Step::PlusMinusOne,
                    expr => {
                        let rf = RationalFunction::parse(expr)?;
                        if let Some(q) = rf.params().into_iter().find(|q| !steps.iter().any(|(s, _)| s == q)) {
                            return Err(err(format!("{p} refers to {q} before it is assigned")));
                        }
                        Step::Expr(rf)
                    }
                };
                steps.push((p, step));
            }
            if steps.is_empty() {
                return Err(err("empty alternative".into()));
            }
            alternatives.push(steps);
        }
        Ok(Recipe {
            source: input.to_string(),
            alternatives,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Every alternative must assign exactly the group's parameters.
    pub fn validate_for(&self, group: Group) -> Result<()> {
        for alt in &self.alternatives {
            for &need in group.params() {
                if !alt.iter().any(|(p, _)| *p == need) {
                    return Err(Error::Recipe {
                        input: self.source.clone(),
                        message: format!("{group} needs {need}"),
                    });
                }
            }
            if let Some((p, _)) = alt.iter().find(|(p, _)| !group.params().contains(p)) {
                return Err(Error::Recipe {
                    input: self.source.clone(),
                    message: format!("{group} does not take {p}"),
                });
            }
        }
        Ok(())
    }

    /// One attempt; `None` when a step cannot be satisfied on this draw.
    fn attempt(&self, rng: &mut ChaCha8Rng) -> Option<Params> {
        let alt = self.alternatives.choose(rng)?;
        let mut params = Params::new();
        for (p, step) in alt {
            let value = match step {
                Step::Any => draw(rng),
                Step::NonZero => Some(draw(rng)).filter(|v| !v.is_zero())?,
                Step::PlusMinusOne => Rational::from_integer(if rng.gen_bool(0.5) { 1 } else { -1 }),
                Step::Expr(rf) => rf.eval(&params).ok()?,
            };
            params.set(*p, value);
        }
        Some(params)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// Numerator uniform in `[-9, 9]`, denominator uniform in `{1, ..., 5}`.
fn draw(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// 64-bit FNV-1a, used to derive per-case seeds.
pub fn fnv1a(text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// A samplable parameter region.
#[derive(Clone, Debug)]
pub struct Region {
    pub name: String,
    pub group: Group,
    pub predicate: CasePredicate,
    pub recipe: Recipe,
    /// Samples satisfying any of these are rejected.
    pub exclude: Vec<CasePredicate>,
}

impl Region {
    pub fn new(name: impl Into<String>, group: Group, predicate: CasePredicate, recipe: Recipe) -> Result<Self> {
        predicate.validate_for(group)?;
        recipe.validate_for(group)?;
        Ok(Region {
            name: name.into(),
            group,
            predicate,
            recipe,
            exclude: Vec::new(),
        })
    }

    pub fn excluding(mut self, exclude: Vec<CasePredicate>) -> Self {
        self.exclude = exclude;
        self
    }

    fn admits(&self, params: &Params) -> bool {
        self.group.check(params).is_ok()
            && self.predicate.holds(params).unwrap_or(false)
            && !self.exclude.iter().any(|e| e.holds(params).unwrap_or(false))
    }
}

/// A deterministic stream of admissible specs for one region.
pub struct Sampler<'a> {
    region: &'a Region,
    rng: ChaCha8Rng,
    draws: usize,
}

impl<'a> Sampler<'a> {
    /// Seeds the generator with `seed` mixed with the region name.
    pub fn new(region: &'a Region, seed: u64) -> Self {
        Sampler {
            region,
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(&region.name)),
            draws: 0,
        }
    }

    /// Total draws so far, including rejected ones.
    pub fn draws(&self) -> usize {
        self.draws
    }

    /// Next admissible spec. The draw budget is [`MAX_DRAWS`] per call.
    pub fn next_spec(&mut self) -> Result<GroupSpec> {
        for _ in 0..MAX_DRAWS {
            self.draws += 1;
            if let Some(params) = self.region.recipe.attempt(&mut self.rng) {
                if self.region.admits(&params) {
                    return Ok(GroupSpec::new(self.region.group, params));
                }
            }
        }
        Err(Error::ExhaustedSampling {
            region: self.region.name.clone(),
            draws: MAX_DRAWS,
        })
    }
}

/// `count` admissible specs for the region, reproducible for a fixed seed.
pub fn sample_params(region: &Region, seed: u64, count: usize) -> Result<Vec<GroupSpec>> {
    let mut sampler = Sampler::new(region, seed);
    (0..count).map(|_| sampler.next_spec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(group: Group, pred: &str, recipe: &str) -> Region {
        Region::new("test", group, CasePredicate::parse(pred).unwrap(), Recipe::parse(recipe).unwrap()).unwrap()
    }

    #[test]
    fn predicate_parse_and_eval() {
        let p = CasePredicate::parse("alpha = 4*beta; beta != 0").unwrap();
        assert_eq!(p.equalities.len(), 1);
        assert_eq!(p.inequations.len(), 1);
        let yes = Params::parse_assignments("alpha=4,beta=1").unwrap();
        let no = Params::parse_assignments("alpha=4,beta=0").unwrap();
        assert!(p.holds(&yes).unwrap());
        assert!(!p.holds(&no).unwrap());
        assert!(CasePredicate::parse("").unwrap().holds(&no).unwrap());
        assert!(CasePredicate::parse("alpha").is_err());
    }

    #[test]
    fn predicate_params_checked_against_group() {
        let p = CasePredicate::parse("delta = 0").unwrap();
        assert!(p.validate_for(Group::G2).is_err());
        assert!(p.validate_for(Group::G5).is_ok());
    }

    #[test]
    fn recipe_rejects_forward_references() {
        assert!(Recipe::parse("alpha=beta; beta=any").is_err());
        assert!(Recipe::parse("alpha=any; alpha=nz").is_err());
        assert!(Recipe::parse("alpha=any;;").is_ok());
        let r = Recipe::parse("alpha=any").unwrap();
        assert!(r.validate_for(Group::G1).is_err());
    }

    #[test]
    fn g5_samples_satisfy_constraints() {
        let r = region(
            Group::G5,
            "",
            "alpha=nz; beta=any; delta=any; gamma=-beta*delta/alpha | alpha=0; beta=0; gamma=any; delta=nz",
        );
        for spec in sample_params(&r, 7, 40).unwrap() {
            assert!(build_ok(&spec), "{}", spec.params);
        }
    }

    fn build_ok(spec: &GroupSpec) -> bool {
        crate::liealg::build_group(spec).is_ok()
    }

    #[test]
    fn fixed_values_are_honoured() {
        let r = region(Group::G2, "alpha = 0; beta = 0; gamma != 0", "alpha=0; beta=0; gamma=nz");
        for spec in sample_params(&r, 1, 10).unwrap() {
            assert!(spec.params.alpha.as_ref().unwrap().is_zero());
            assert!(spec.params.beta.as_ref().unwrap().is_zero());
            assert!(!spec.params.gamma.as_ref().unwrap().is_zero());
        }
    }

    #[test]
    fn derived_parameters() {
        let r = region(Group::G4, "alpha = 4*beta; beta != 0", "eta=pm1; beta=nz; alpha=4*beta");
        for spec in sample_params(&r, 3, 10).unwrap() {
            let a = spec.params.alpha.clone().unwrap();
            let b = spec.params.beta.clone().unwrap();
            assert_eq!(a, &b * &Rational::from_integer(4));
        }
    }

    #[test]
    fn same_seed_same_samples() {
        let r = region(Group::G3, "", "alpha=any; beta=any; gamma=any");
        assert_eq!(sample_params(&r, 42, 20).unwrap(), sample_params(&r, 42, 20).unwrap());
        assert_ne!(sample_params(&r, 42, 20).unwrap(), sample_params(&r, 43, 20).unwrap());
    }

    #[test]
    fn infeasible_region_exhausts() {
        let r = region(Group::G1, "beta = 1", "alpha=nz; beta=0");
        assert!(matches!(
            sample_params(&r, 0, 1),
            Err(Error::ExhaustedSampling { draws: MAX_DRAWS, .. })
        ));
    }

    #[test]
    fn exclusion_is_applied() {
        let r = region(Group::G1, "", "alpha=nz; beta=any").excluding(vec![CasePredicate::parse("beta = 0").unwrap()]);
        for spec in sample_params(&r, 5, 50).unwrap() {
            assert!(!spec.params.beta.unwrap().is_zero());
        }
    }
}
