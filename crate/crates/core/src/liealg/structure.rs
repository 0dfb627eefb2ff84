//! Structure constants of a three-dimensional Lie algebra on the frame
//! `e1, e2, e3`, with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::vector::{self, Vector3};
use crate::exact::Rational;

pub type Tensor3 = [[[Rational; 3]; 3]; 3];

pub(crate) fn zero_tensor3() -> Tensor3 {
    std::array::from_fn(|_| std::array::from_fn(|_| vector::zero()))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "AlgebraJson", into = "AlgebraJson")]
pub struct StructureConstants {
    c: Tensor3,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    c: Tensor3,
}

impl From<StructureConstants> for AlgebraJson {
    fn from(sc: StructureConstants) -> Self {
        AlgebraJson { c: sc.c }
    }
}

impl TryFrom<AlgebraJson> for StructureConstants {
    type Error = Error;
    fn try_from(j: AlgebraJson) -> Result<Self> {
        StructureConstants::validated(j.c)
    }
}

impl StructureConstants {
    /// Checks antisymmetry only; see [`StructureConstants::validated`].
    pub fn new(c: Tensor3) -> Result<Self> {
        for i in 0..3 {
            for j in i..3 {
                for k in 0..3 {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(Error::Antisymmetry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    /// Checks antisymmetry and the Jacobi identity.
    pub fn validated(c: Tensor3) -> Result<Self> {
        let sc = StructureConstants::new(c)?;
        let verdict = check_jacobi(&sc);
        if verdict.valid() {
            Ok(sc)
        } else {
            Err(Error::JacobiFailure {
                triples: verdict.violations.iter().map(|v| v.triple).collect(),
            })
        }
    }

    /// Fills in the antisymmetric table from `[e1,e2]`, `[e1,e3]`, `[e2,e3]`.
    pub fn from_brackets(e12: Vector3, e13: Vector3, e23: Vector3) -> Self {
        let mut c = zero_tensor3();
        for (i, j, v) in [(0, 1, e12), (0, 2, e13), (1, 2, e23)] {
            c[j][i] = std::array::from_fn(|k| -&v[k]);
            c[i][j] = v;
        }
        StructureConstants { c }
    }

    pub fn abelian() -> Self {
        StructureConstants { c: zero_tensor3() }
    }

    /// JSON of the form `{"c": [[[..]]]}`; antisymmetry and Jacobi enforced.
    pub fn from_json(input: &str) -> Result<Self> {
        serde_json::from_str(input).map_err(|e| Error::Invalid(format!("custom algebra: {e}")))
    }

    pub fn c(&self) -> &Tensor3 {
        &self.c
    }

    /// `[e_i, e_j]`, 0-based.
    pub fn frame_bracket(&self, i: usize, j: usize) -> &Vector3 {
        &self.c[i][j]
    }

    pub fn bracket(&self, u: &Vector3, v: &Vector3) -> Vector3 {
        bracket(self, u, v)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(vector::is_zero)
    }
}

/// `Σ_{i,j} c[i][j][k] u_i v_j`.
pub fn bracket(sc: &StructureConstants, u: &Vector3, v: &Vector3) -> Vector3 {
    let mut out = vector::zero();
    for i in 0..3 {
        if u[i].is_zero() {
            continue;
        }
        for j in 0..3 {
            if v[j].is_zero() {
                continue;
            }
            let w = &u[i] * &v[j];
            for k in 0..3 {
                out[k] += &w * &sc.c[i][j][k];
            }
        }
    }
    out
}

/// A triple whose cyclic Jacobi sum is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JacobiViolation {
    /// 1-based frame indices.
    pub triple: (usize, usize, usize),
    pub residual: Vector3,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JacobiVerdict {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiVerdict {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` for every
/// `i < j < k`. Triples with a repeated index vanish by antisymmetry.
pub fn check_jacobi(sc: &StructureConstants) -> JacobiVerdict {
    let mut violations = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            for k in j + 1..3 {
                let e = vector::basis;
                let t1 = bracket(sc, &sc.c[i][j], &e(k));
                let t2 = bracket(sc, &sc.c[j][k], &e(i));
                let t3 = bracket(sc, &sc.c[k][i], &e(j));
                let residual = vector::add(&vector::add(&t1, &t2), &t3);
                if !vector::is_zero(&residual) {
                    violations.push(JacobiViolation {
                        triple: (i + 1, j + 1, k + 1),
                        residual,
                    });
                }
            }
        }
    }
    JacobiVerdict { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vector::{basis, from_ints};

    #[test]
    fn from_brackets_is_antisymmetric() {
        let sc = StructureConstants::from_brackets(from_ints([1, 0, 0]), from_ints([0, 2, 0]), from_ints([0, 0, 3]));
        assert_eq!(sc.frame_bracket(1, 0), &from_ints([-1, 0, 0]));
        assert!(StructureConstants::new(sc.c().clone()).is_ok());
        assert!(vector::is_zero(sc.frame_bracket(2, 2)));
    }

    #[test]
    fn new_rejects_asymmetric_table() {
        let mut c = zero_tensor3();
        c[0][1][2] = Rational::one();
        assert_eq!(
            StructureConstants::new(c),
            Err(Error::Antisymmetry { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn bracket_of_frame_vectors() {
        let sc = StructureConstants::from_brackets(from_ints([0, 0, 1]), from_ints([0, -1, 0]), from_ints([1, 0, 0]));
        assert_eq!(bracket(&sc, &basis(1), &basis(2)), from_ints([1, 0, 0]));
        assert_eq!(bracket(&sc, &basis(2), &basis(0)), from_ints([0, 1, 0]));
    }

    #[test]
    fn jacobi_failure_names_the_triple() {
        let sc = StructureConstants::from_brackets(from_ints([1, 0, 0]), from_ints([1, 0, 0]), from_ints([0, 1, 0]));
        let verdict = check_jacobi(&sc);
        assert_eq!(verdict.violations.len(), 1);
        assert_eq!(verdict.violations[0].triple, (1, 2, 3));
        assert_eq!(verdict.violations[0].residual, from_ints([-1, 0, 0]));
        assert!(StructureConstants::validated(sc.c().clone()).is_err());
    }

    #[test]
    fn abelian_passes() {
        assert!(check_jacobi(&StructureConstants::abelian()).valid());
    }

    #[test]
    fn json_loader() {
        let text = r#"{"c": [[["0","0","0"],["0","0","1"],["0","-1","0"]],
                              [["0","0","-1"],["0","0","0"],["1","0","0"]],
                              [["0","1","0"],["-1","0","0"],["0","0","0"]]]}"#;
        let sc = StructureConstants::from_json(text).unwrap();
        assert_eq!(sc.frame_bracket(0, 1), &from_ints([0, 0, 1]));
        let bad = text.replacen("[\"0\",\"0\",\"1\"]", "[\"0\",\"0\",\"2\"]", 1);
        let err = StructureConstants::from_json(&bad).unwrap_err();
        assert!(err.to_string().contains("antisymmetric"), "{err}");
    }
}
