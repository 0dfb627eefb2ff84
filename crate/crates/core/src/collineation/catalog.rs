//! The embedded fixture catalog: printed Ricci and Lie-derivative tables for
//! each (group, distribution) pair, and the classification cases.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use super::discrepancy::{discrepancy_log, CaseCorrection, DiscrepancyLog};
use crate::connection::Distribution;
use crate::error::{Error, Result};
use crate::exact::{Rational, Vector3};
use crate::liealg::{CasePredicate, Group, Params, Polynomial, RationalFunction, Recipe, Region};

const CATALOG_TOML: &str = include_str!("../../data/catalog.toml");

/// A form `c1·λ1 + c2·λ2 + c3·λ3` with polynomial coefficients, written with
/// `l1, l2, l3` for the `λ`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: [Polynomial; 3],
    source: String,
}

impl LinearForm {
    /// The form is linear without constant term, so the coefficient of `λk`
    /// is the expression with `λk = 1` and the other two set to 0.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |message: &str| Error::Expression {
            input: input.to_string(),
            message: message.into(),
        };
        let substitute = |k: usize| -> Result<Polynomial> {
            let mut text = input.to_string();
            for m in 0..3 {
                let value = if m == k { "(1)" } else { "(0)" };
                text = text.replace(&format!("l{}", m + 1), value);
            }
            Polynomial::parse(&text).map_err(|_| err("not a polynomial in the parameters and l1, l2, l3"))
        };
        let constant = substitute(3)?;
        if !constant.is_zero() {
            return Err(err("constant term without l1, l2 or l3"));
        }
        let coeffs = [substitute(0)?, substitute(1)?, substitute(2)?];
        // Degree-one homogeneity rejects forms such as `l1*l2` or `l1^2`.
        let sum = coeffs.iter().fold(Polynomial::zero(), |acc, c| &acc + c);
        let mut doubled = input.to_string();
        for m in 1..=3 {
            doubled = doubled.replace(&format!("l{m}"), "(2)");
        }
        if Polynomial::parse(&doubled)? != &Polynomial::constant(Rational::from_integer(2)) * &sum {
            return Err(err("not linear in l1, l2, l3"));
        }
        Ok(LinearForm {
            coeffs,
            source: input.to_string(),
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// Printed tables for one (group, distribution) pair, in [`super::ROW_INDEX`]
/// order.
#[derive(Clone, Debug)]
pub struct PairFixture {
    pub group: Group,
    pub dist: Distribution,
    pub ricci: [Polynomial; 6],
    pub lie: [LinearForm; 6],
    pub ricci_source: [String; 6],
    /// Recipe for generic samples of the group.
    pub recipe: Recipe,
}

impl PairFixture {
    pub fn id(&self) -> String {
        pair_id(self.group, self.dist)
    }

    /// The region sampled for fixture comparison.
    pub fn region(&self) -> Region {
        Region::new(
            format!("{}.fixture", self.id()),
            self.group,
            CasePredicate::always(),
            self.recipe.clone(),
        )
        .expect("default recipes are validated at load")
    }
}

pub fn pair_id(group: Group, dist: Distribution) -> String {
    format!("{group}.{dist}")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// A case as printed.
    Printed,
    /// A replacement for a printed case listed in the discrepancy log.
    Corrected,
    /// Parameters outside every case; the claim there is dimension 0.
    Complement,
}

/// A classification claim: on the predicate region, the collineation space
/// has dimension `claimed_dim` and is spanned by `claimed_basis`.
#[derive(Clone, Debug)]
pub struct TheoremCase {
    pub id: String,
    pub group: Group,
    pub dist: Distribution,
    pub kind: CaseKind,
    pub predicate: CasePredicate,
    pub recipe: Recipe,
    pub claimed_dim: usize,
    pub claimed_basis: Vec<[RationalFunction; 3]>,
    /// Samples satisfying any of these are rejected.
    pub exclude: Vec<CasePredicate>,
    /// Whether the discrepancy log expects this claim to fail.
    pub logged: bool,
}

impl TheoremCase {
    /// A printed case with no exclusions, checked for consistency.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        id: impl Into<String>,
        group: Group,
        dist: Distribution,
        predicate: CasePredicate,
        recipe: Recipe,
        claimed_dim: usize,
        claimed_basis: Vec<[RationalFunction; 3]>,
    ) -> Result<Self> {
        let case = TheoremCase {
            id: id.into(),
            group,
            dist,
            kind: CaseKind::Printed,
            predicate,
            recipe,
            claimed_dim,
            claimed_basis,
            exclude: Vec::new(),
            logged: false,
        };
        case.validate()?;
        Ok(case)
    }

    fn validate(&self) -> Result<()> {
        if self.claimed_basis.len() != self.claimed_dim || self.claimed_dim > 3 {
            return Err(Error::Invalid(format!(
                "case {}: claimed dimension {} with {} basis vectors",
                self.id,
                self.claimed_dim,
                self.claimed_basis.len()
            )));
        }
        self.region().map(|_| ())
    }

    pub fn region(&self) -> Result<Region> {
        Ok(Region::new(self.id.clone(), self.group, self.predicate.clone(), self.recipe.clone())?
            .excluding(self.exclude.clone()))
    }
}

#[derive(Debug)]
pub struct Catalog {
    pub pairs: Vec<PairFixture>,
    /// Sorted by id.
    pub cases: Vec<TheoremCase>,
}

impl Catalog {
    pub fn pair(&self, group: Group, dist: Distribution) -> &PairFixture {
        self.pairs
            .iter()
            .find(|p| p.group == group && p.dist == dist)
            .expect("catalog covers every pair")
    }

    pub fn case(&self, id: &str) -> Option<&TheoremCase> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// Cases whose id equals a filter entry or extends it by `.`, so that
    /// `G2.B1` selects the whole pair and `G2.B1.case3` also selects its
    /// correction.
    pub fn select(&self, filter: &[String]) -> Result<Vec<TheoremCase>> {
        let mut out = Vec::new();
        for f in filter {
            let prefix = format!("{f}.");
            let hits: Vec<_> = self
                .cases
                .iter()
                .filter(|c| c.id == *f || c.id.starts_with(&prefix))
                .collect();
            if hits.is_empty() {
                return Err(Error::UnknownCase(f.clone()));
            }
            out.extend(hits.into_iter().cloned());
        }
        out.sort_by(|a, b| a.id.cmp(&b.id));
        out.dedup_by(|a, b| a.id == b.id);
        Ok(out)
    }
}

/// The catalog with corrections from the discrepancy log merged in.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| load(CATALOG_TOML, discrepancy_log()).expect("embedded catalog is well formed"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    recipes: BTreeMap<String, String>,
    pair: Vec<PairFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    id: String,
    ricci: Vec<String>,
    lie: Vec<String>,
    #[serde(default)]
    complements: Vec<String>,
    #[serde(default)]
    case: Vec<CaseFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseFile {
    name: String,
    #[serde(default)]
    predicate: String,
    recipe: Option<String>,
    dim: usize,
    #[serde(default)]
    basis: Vec<[String; 3]>,
}

pub(crate) fn parse_pair_id(id: &str) -> Result<(Group, Distribution)> {
    let (g, d) = id
        .split_once('.')
        .ok_or_else(|| Error::Invalid(format!("pair id {id:?} is not of the form G1.B1")))?;
    Ok((g.parse()?, d.parse()?))
}

pub(crate) fn parse_basis(rows: &[[String; 3]]) -> Result<Vec<[RationalFunction; 3]>> {
    rows.iter()
        .map(|row| {
            Ok([
                RationalFunction::parse(&row[0])?,
                RationalFunction::parse(&row[1])?,
                RationalFunction::parse(&row[2])?,
            ])
        })
        .collect()
}

fn six<T>(items: Vec<T>, what: &str, id: &str) -> Result<[T; 6]> {
    items
        .try_into()
        .map_err(|v: Vec<T>| Error::Invalid(format!("{id}: {what} has {} entries, expected 6", v.len())))
}

fn load(text: &str, log: &DiscrepancyLog) -> Result<Catalog> {
    let file: CatalogFile = toml::from_str(text).map_err(|e| Error::Invalid(format!("catalog: {e}")))?;
    let mut pairs = Vec::new();
    let mut cases = Vec::new();
    for p in file.pair {
        let (group, dist) = parse_pair_id(&p.id)?;
        let default_recipe = file
            .recipes
            .get(group.name())
            .ok_or_else(|| Error::Invalid(format!("catalog: no recipe for {group}")))?;
        let default_recipe = Recipe::parse(default_recipe)?;
        default_recipe.validate_for(group)?;
        let ricci_polys = p
            .ricci
            .iter()
            .map(|s| Polynomial::parse(s))
            .collect::<Result<Vec<_>>>()?;
        let lie = p.lie.iter().map(|s| LinearForm::parse(s)).collect::<Result<Vec<_>>>()?;
        pairs.push(PairFixture {
            group,
            dist,
            ricci: six(ricci_polys, "ricci", &p.id)?,
            lie: six(lie, "lie", &p.id)?,
            ricci_source: six(p.ricci, "ricci", &p.id)?,
            recipe: default_recipe.clone(),
        });

        let mut pair_cases = Vec::new();
        for c in &p.case {
            let id = format!("{}.{}", p.id, c.name);
            let recipe = match &c.recipe {
                Some(r) => Recipe::parse(r)?,
                None => default_recipe.clone(),
            };
            let mut case = TheoremCase::new(
                id.clone(),
                group,
                dist,
                CasePredicate::parse(&c.predicate)?,
                recipe,
                c.dim,
                parse_basis(&c.basis)?,
            )?;
            if let Some(correction) = log.case(&id) {
                case.logged = true;
                pair_cases.push(corrected(&case, correction)?);
            }
            pair_cases.push(case);
        }

        // Complements exclude the effective predicates: the correction where
        // one is logged, the printed predicate otherwise.
        let effective: Vec<CasePredicate> = pair_cases
            .iter()
            .filter(|c| c.kind == CaseKind::Corrected || !c.logged)
            .map(|c| c.predicate.clone())
            .collect();
        for (n, r) in p.complements.iter().enumerate() {
            let name = if p.complements.len() == 1 {
                "complement".to_string()
            } else {
                format!("complement{}", n + 1)
            };
            let mut case = TheoremCase::new(
                format!("{}.{name}", p.id),
                group,
                dist,
                CasePredicate::always(),
                Recipe::parse(r)?,
                0,
                Vec::new(),
            )?;
            case.kind = CaseKind::Complement;
            case.exclude = effective.clone();
            pair_cases.push(case);
        }
        cases.extend(pair_cases);
    }
    for c in &log.cases {
        if !cases.iter().any(|k| k.id == c.id) {
            return Err(Error::Invalid(format!("discrepancy log names unknown case {}", c.id)));
        }
    }
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Catalog { pairs, cases })
}

fn corrected(case: &TheoremCase, correction: &CaseCorrection) -> Result<TheoremCase> {
    let predicate = match &correction.predicate {
        Some(p) => CasePredicate::parse(p)?,
        None => case.predicate.clone(),
    };
    let recipe = match &correction.recipe {
        Some(r) => Recipe::parse(r)?,
        None => case.recipe.clone(),
    };
    let basis = parse_basis(&correction.basis)?;
    let mut out = TheoremCase::new(
        format!("{}.corrected", case.id),
        case.group,
        case.dist,
        predicate,
        recipe,
        basis.len(),
        basis,
    )?;
    out.kind = CaseKind::Corrected;
    Ok(out)
}

/// Evaluates a claimed basis at a sample.
pub fn eval_basis(basis: &[[RationalFunction; 3]], params: &Params) -> Result<Vec<Vector3>> {
    basis
        .iter()
        .map(|row| Ok([row[0].eval(params)?, row[1].eval(params)?, row[2].eval(params)?]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::liealg::Param;

    #[test]
    fn linear_form_coefficients() {
        let f = LinearForm::parse("-alpha^3*l1 + beta^3*l2").unwrap();
        let p = Params::parse_assignments("alpha=2,beta=3").unwrap();
        assert_eq!(f.coeffs[0].eval(&p).unwrap(), q(-8, 1));
        assert_eq!(f.coeffs[1].eval(&p).unwrap(), q(27, 1));
        assert!(f.coeffs[2].is_zero());
        assert!(LinearForm::parse("0").unwrap().coeffs.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn linear_form_rejections() {
        assert!(LinearForm::parse("alpha + l1").is_err());
        assert!(LinearForm::parse("l1*l2").is_err());
        assert!(LinearForm::parse("alpha*l4").is_err());
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.pairs.len(), 21);
        let printed = cat.cases.iter().filter(|c| c.kind != CaseKind::Corrected).count();
        assert!(printed >= 60, "{printed}");
        for c in &cat.cases {
            assert_eq!(c.claimed_basis.len(), c.claimed_dim);
        }
        let c = cat.case("G2.B2.case3").unwrap();
        assert_eq!(c.claimed_dim, 1);
        assert!(c.predicate.params().contains(&Param::Alpha));
    }

    #[test]
    fn select_by_prefix() {
        let cat = catalog();
        let one = cat.select(&["G3.B1.case2".into()]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].id, "G3.B1.case2");
        let pair = cat.select(&["G5.B2".into()]).unwrap();
        assert_eq!(pair.len(), 4);
        assert!(cat.select(&[]).unwrap().is_empty());
        assert!(matches!(cat.select(&["G9.B1".into()]), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn basis_length_is_checked() {
        let r = TheoremCase::new(
            "x",
            Group::G3,
            Distribution::B1,
            CasePredicate::always(),
            Recipe::parse("alpha=any; beta=any; gamma=any").unwrap(),
            2,
            Vec::new(),
        );
        assert!(r.is_err());
    }
}
