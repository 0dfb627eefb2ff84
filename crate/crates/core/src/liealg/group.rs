//! The seven Lorentzian Lie groups `G1..G7` and their bracket tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::params::{Param, Params};
use super::poly::Polynomial;
use super::structure::{check_jacobi, StructureConstants};
use crate::error::{Error, Result};
use crate::exact::{Rational, Vector3};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Group {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
}

impl Group {
    pub const ALL: [Group; 7] = [
        Group::G1,
        Group::G2,
        Group::G3,
        Group::G4,
        Group::G5,
        Group::G6,
        Group::G7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::G1 => "G1",
            Group::G2 => "G2",
            Group::G3 => "G3",
            Group::G4 => "G4",
            Group::G5 => "G5",
            Group::G6 => "G6",
            Group::G7 => "G7",
        }
    }

    pub fn params(self) -> &'static [Param] {
        use Param::*;
        match self {
            Group::G1 => &[Alpha, Beta],
            Group::G2 | Group::G3 => &[Alpha, Beta, Gamma],
            Group::G4 => &[Alpha, Beta, Eta],
            Group::G5 | Group::G6 | Group::G7 => &[Alpha, Beta, Gamma, Delta],
        }
    }

    /// Whether every bracket coefficient is linear in the parameters, so that
    /// scaling all parameters scales the whole table. `G4` has constant terms.
    pub fn is_homogeneous(self) -> bool {
        self != Group::G4
    }

    /// Standing constraints on the parameters.
    pub fn constraints(self) -> Vec<Constraint> {
        let specs: &[(&str, Relation)] = match self {
            Group::G1 => &[("alpha", Relation::NonZero)],
            Group::G2 => &[("gamma", Relation::NonZero)],
            Group::G3 => &[],
            Group::G4 => &[("eta^2 - 1", Relation::Zero)],
            Group::G5 => &[
                ("alpha + delta", Relation::NonZero),
                ("alpha*gamma + beta*delta", Relation::Zero),
            ],
            Group::G6 => &[
                ("alpha + delta", Relation::NonZero),
                ("alpha*gamma - beta*delta", Relation::Zero),
            ],
            Group::G7 => &[
                ("alpha + delta", Relation::NonZero),
                ("alpha*gamma", Relation::Zero),
            ],
        };
        specs
            .iter()
            .map(|&(expr, relation)| Constraint {
                expr,
                poly: Polynomial::parse(expr).expect("constraint expressions are well formed"),
                relation,
            })
            .collect()
    }

    /// `[e1,e2]`, `[e1,e3]`, `[e2,e3]` with no constraint checking.
    pub fn brackets(self, params: &Params) -> Result<[Vector3; 3]> {
        let need = |p: Param| -> Result<Rational> {
            params.get(p).cloned().ok_or_else(|| Error::MissingParameter {
                group: self.name().into(),
                param: p.name().into(),
            })
        };
        let z = Rational::zero;
        let one = Rational::one;
        let table = match self {
            Group::G1 => {
                let (a, b) = (need(Param::Alpha)?, need(Param::Beta)?);
                [
                    [a.clone(), z(), -&b],
                    [-&a, -&b, z()],
                    [b, a.clone(), a],
                ]
            }
            Group::G2 => {
                let (a, b, g) = (need(Param::Alpha)?, need(Param::Beta)?, need(Param::Gamma)?);
                [[z(), g.clone(), -&b], [z(), -&b, -&g], [a, z(), z()]]
            }
            Group::G3 => {
                let (a, b, g) = (need(Param::Alpha)?, need(Param::Beta)?, need(Param::Gamma)?);
                [[z(), z(), -g], [z(), -b, z()], [a, z(), z()]]
            }
            Group::G4 => {
                let (a, b, eta) = (need(Param::Alpha)?, need(Param::Beta)?, need(Param::Eta)?);
                let two = Rational::from_integer(2);
                [
                    [z(), -one(), &two * &eta - &b],
                    [z(), -b, one()],
                    [a, z(), z()],
                ]
            }
            Group::G5 => {
                let (a, b, g, d) = four(&need)?;
                [[z(), z(), z()], [a, b, z()], [g, d, z()]]
            }
            Group::G6 => {
                let (a, b, g, d) = four(&need)?;
                [[z(), a, b], [z(), g, d], [z(), z(), z()]]
            }
            Group::G7 => {
                let (a, b, g, d) = four(&need)?;
                [
                    [-&a, -&b, -&b],
                    [a, b.clone(), b],
                    [g, d.clone(), d],
                ]
            }
        };
        Ok(table)
    }

    /// Structure constants with no constraint or Jacobi checking.
    pub fn structure_constants_unchecked(self, params: &Params) -> Result<StructureConstants> {
        let [e12, e13, e23] = self.brackets(params)?;
        Ok(StructureConstants::from_brackets(e12, e13, e23))
    }

    /// Evaluates the standing constraints, returning the first violation.
    pub fn check(self, params: &Params) -> Result<()> {
        for p in Param::ALL {
            let expected = self.params().contains(&p);
            match (expected, params.get(p).is_some()) {
                (true, false) => {
                    return Err(Error::MissingParameter {
                        group: self.name().into(),
                        param: p.name().into(),
                    })
                }
                (false, true) => {
                    return Err(Error::UnexpectedParameter {
                        group: self.name().into(),
                        param: p.name().into(),
                    })
                }
                _ => {}
            }
        }
        for c in self.constraints() {
            let value = c.poly.eval(params)?;
            if !c.relation.holds(&value) {
                let involved: Vec<String> = c
                    .poly
                    .params()
                    .into_iter()
                    .map(|p| format!("{p}={}", params.get(p).expect("checked above")))
                    .collect();
                return Err(Error::ConstraintViolation {
                    group: self.name().into(),
                    constraint: c.to_string(),
                    values: format!("{} gives {} = {value}", involved.join(", "), c.expr),
                });
            }
        }
        Ok(())
    }
}

fn four(need: &dyn Fn(Param) -> Result<Rational>) -> Result<(Rational, Rational, Rational, Rational)> {
    Ok((
        need(Param::Alpha)?,
        need(Param::Beta)?,
        need(Param::Gamma)?,
        need(Param::Delta)?,
    ))
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownGroup(s.to_string()))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Zero,
    NonZero,
}

impl Relation {
    pub fn holds(self, value: &Rational) -> bool {
        match self {
            Relation::Zero => value.is_zero(),
            Relation::NonZero => !value.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub expr: &'static str,
    pub poly: Polynomial,
    pub relation: Relation,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Zero => "=",
            Relation::NonZero => "!=",
        };
        write!(f, "{} {op} 0", self.expr)
    }
}

/// A group together with a full parameter assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub group: Group,
    pub params: Params,
}

impl GroupSpec {
    pub fn new(group: Group, params: Params) -> Self {
        GroupSpec { group, params }
    }

    pub fn build(&self) -> Result<StructureConstants> {
        build_group(self)
    }
}

/// Validates the spec and returns its structure constants.
pub fn build_group(spec: &GroupSpec) -> Result<StructureConstants> {
    spec.group.check(&spec.params)?;
    let sc = spec.group.structure_constants_unchecked(&spec.params)?;
    let verdict = check_jacobi(&sc);
    if !verdict.valid() {
        return Err(Error::JacobiFailure {
            triples: verdict.violations.iter().map(|v| v.triple).collect(),
        });
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::exact::vector::from_ints;

    fn spec(group: Group, assignments: &str) -> GroupSpec {
        GroupSpec::new(group, Params::parse_assignments(assignments).unwrap())
    }

    #[test]
    fn g1_table() {
        let sc = build_group(&spec(Group::G1, "alpha=1,beta=0")).unwrap();
        assert_eq!(sc.frame_bracket(0, 1), &from_ints([1, 0, 0]));
        assert_eq!(sc.frame_bracket(0, 2), &from_ints([-1, 0, 0]));
        assert_eq!(sc.frame_bracket(1, 2), &from_ints([0, 1, 1]));
    }

    #[test]
    fn g3_zero_is_abelian() {
        let sc = build_group(&spec(Group::G3, "alpha=0,beta=0,gamma=0")).unwrap();
        assert!(sc.is_abelian());
    }

    #[test]
    fn g4_uses_eta() {
        let sc = build_group(&spec(Group::G4, "alpha=1,beta=2,eta=-1")).unwrap();
        assert_eq!(sc.frame_bracket(0, 1), &[q(0, 1), q(-1, 1), q(-4, 1)]);
        let err = build_group(&spec(Group::G4, "alpha=1,beta=2,eta=2")).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation { .. }));
    }

    #[test]
    fn constraint_messages_name_values() {
        let err = build_group(&spec(Group::G5, "alpha=1,beta=0,gamma=0,delta=-1")).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("alpha + delta != 0"), "{text}");
        assert!(text.contains("alpha=1, delta=-1"), "{text}");
    }

    #[test]
    fn parameter_presence() {
        assert!(matches!(
            build_group(&spec(Group::G1, "alpha=1")),
            Err(Error::MissingParameter { .. })
        ));
        assert!(matches!(
            build_group(&spec(Group::G1, "alpha=1,beta=1,gamma=1")),
            Err(Error::UnexpectedParameter { .. })
        ));
    }

    #[test]
    fn group_names() {
        assert_eq!("g4".parse::<Group>().unwrap(), Group::G4);
        assert!("G8".parse::<Group>().is_err());
        let json = serde_json::to_string(&spec(Group::G4, "alpha=1,beta=2,eta=1")).unwrap();
        assert_eq!(json, r#"{"group":"G4","params":{"alpha":"1","beta":"2","eta":"1"}}"#);
    }
}
