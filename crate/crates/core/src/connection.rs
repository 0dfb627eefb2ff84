//! The Lorentzian metric, the distributions `B1, B2, B3`, and the
//! Levi-Civita and Bott connections in the left-invariant frame.
//!
//! Every connection here is left-invariant, so it is fixed by the constants
//! `∇_{e_i} e_j = Σ_k gamma[i][j][k] e_k` and no derivative terms appear.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::vector::{self, Vector3};
use crate::exact::Rational;
use crate::liealg::{StructureConstants, Tensor3};

/// The metric `diag(+1, +1, -1)` on `e1, e2, e3`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    /// `g(e_i, e_i)` as a sign, 0-based.
    pub fn sign(self, i: usize) -> i64 {
        if i == 2 {
            -1
        } else {
            1
        }
    }

    pub fn diag(self, i: usize) -> Rational {
        Rational::from_integer(self.sign(i))
    }

    pub fn inner(self, u: &Vector3, v: &Vector3) -> Rational {
        (0..3).map(|k| &u[k] * &v[k] * self.diag(k)).sum()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    B1,
    B2,
    B3,
}

impl Distribution {
    pub const ALL: [Distribution; 3] = [Distribution::B1, Distribution::B2, Distribution::B3];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::B1 => "B1",
            Distribution::B2 => "B2",
            Distribution::B3 => "B3",
        }
    }

    /// Frame indices (0-based) spanning `F`.
    pub fn f(self) -> [usize; 2] {
        match self {
            Distribution::B1 => [0, 1],
            Distribution::B2 => [0, 2],
            Distribution::B3 => [1, 2],
        }
    }

    /// The frame index (0-based) spanning `F^⊥`.
    pub fn f_perp(self) -> usize {
        match self {
            Distribution::B1 => 2,
            Distribution::B2 => 1,
            Distribution::B3 => 0,
        }
    }

    pub fn in_f(self, i: usize) -> bool {
        i != self.f_perp()
    }

    pub fn project_f(self, v: &Vector3) -> Vector3 {
        let mut out = v.clone();
        out[self.f_perp()] = Rational::zero();
        out
    }

    pub fn project_f_perp(self, v: &Vector3) -> Vector3 {
        let mut out = vector::zero();
        out[self.f_perp()] = v[self.f_perp()].clone();
        out
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Distribution::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownDistribution(s.to_string()))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Connection {
    pub gamma: Tensor3,
}

impl Connection {
    pub fn zero() -> Self {
        Connection {
            gamma: std::array::from_fn(|_| std::array::from_fn(|_| vector::zero())),
        }
    }

    /// `∇_{e_i} e_j`, 0-based.
    pub fn frame(&self, i: usize, j: usize) -> &Vector3 {
        &self.gamma[i][j]
    }

    /// `∇_u v` for constant-coefficient `u` and `v`.
    pub fn nabla(&self, u: &Vector3, v: &Vector3) -> Vector3 {
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
                    out[k] += &w * &self.gamma[i][j][k];
                }
            }
        }
        out
    }

    /// `∇_u v − ∇_v u − [u, v]` on frame vectors, 0-based.
    pub fn torsion(&self, sc: &StructureConstants, i: usize, j: usize) -> Vector3 {
        let t = vector::sub(&self.gamma[i][j], &self.gamma[j][i]);
        vector::sub(&t, sc.frame_bracket(i, j))
    }

    pub fn is_torsion_free(&self, sc: &StructureConstants) -> bool {
        (0..3).all(|i| (0..3).all(|j| vector::is_zero(&self.torsion(sc, i, j))))
    }

    /// `g(∇_{e_i} e_j, e_k) + g(e_j, ∇_{e_i} e_k) = 0` for all frame indices.
    pub fn is_metric_compatible(&self) -> bool {
        let g = Metric;
        (0..3).all(|i| {
            (0..3).all(|j| {
                (0..3).all(|k| {
                    let lhs = &self.gamma[i][j][k] * &g.diag(k) + &self.gamma[i][k][j] * &g.diag(j);
                    lhs.is_zero()
                })
            })
        })
    }

    /// `∇_X Y` stays in `F` for `Y ∈ F` and in `F^⊥` for `Y ∈ F^⊥`.
    pub fn respects(&self, dist: Distribution) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let v = &self.gamma[i][j];
                if dist.in_f(j) {
                    v[dist.f_perp()].is_zero()
                } else {
                    dist.f().iter().all(|&k| v[k].is_zero())
                }
            })
        })
    }
}

/// Levi-Civita connection from the frame Koszul formula
/// `2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j],e_k) − g([e_j,e_k],e_i) + g([e_k,e_i],e_j)`.
pub fn levi_civita(sc: &StructureConstants) -> Connection {
    let g = Metric;
    let c = sc.c();
    let half = Rational::new(1, 2);
    let gamma = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let lowered =
                    &c[i][j][k] * &g.diag(k) - &c[j][k][i] * &g.diag(i) + &c[k][i][j] * &g.diag(j);
                lowered * &half * g.diag(k)
            })
        })
    });
    Connection { gamma }
}

/// Bott connection of the distribution, from its four-case definition.
pub fn bott(sc: &StructureConstants, dist: Distribution) -> Connection {
    let lc = levi_civita(sc);
    let gamma = std::array::from_fn(|i| {
        std::array::from_fn(|j| match (dist.in_f(i), dist.in_f(j)) {
            (true, true) => dist.project_f(lc.frame(i, j)),
            (false, true) => dist.project_f(sc.frame_bracket(i, j)),
            (true, false) => dist.project_f_perp(sc.frame_bracket(i, j)),
            (false, false) => dist.project_f_perp(lc.frame(i, j)),
        })
    });
    Connection { gamma }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vector::{basis, from_ints};
    use crate::liealg::{build_group, Group, GroupSpec, Params};

    fn sc(group: Group, assignments: &str) -> StructureConstants {
        build_group(&GroupSpec::new(group, Params::parse_assignments(assignments).unwrap())).unwrap()
    }

    #[test]
    fn abelian_is_flat() {
        let sc = StructureConstants::abelian();
        assert_eq!(levi_civita(&sc), Connection::zero());
        for d in Distribution::ALL {
            assert_eq!(bott(&sc, d), Connection::zero());
        }
    }

    #[test]
    fn g5_levi_civita_entry() {
        let lc = levi_civita(&sc(Group::G5, "alpha=1,beta=0,gamma=0,delta=1"));
        assert_eq!(lc.frame(0, 2), &from_ints([1, 0, 0]));
        assert!(lc.is_torsion_free(&sc(Group::G5, "alpha=1,beta=0,gamma=0,delta=1")));
        assert!(lc.is_metric_compatible());
    }

    #[test]
    fn g3_bott_entry() {
        let b = bott(&sc(Group::G3, "alpha=1,beta=1,gamma=1"), Distribution::B1);
        assert_eq!(b.frame(2, 0), &basis(1));
        assert!(b.respects(Distribution::B1));
    }

    #[test]
    fn projectors_are_complementary() {
        let v = from_ints([3, -4, 5]);
        for d in Distribution::ALL {
            assert_eq!(vector::add(&d.project_f(&v), &d.project_f_perp(&v)), v);
            assert!(vector::is_zero(&d.project_f(&d.project_f_perp(&v))));
        }
    }

    #[test]
    fn metric_signature() {
        let g = Metric;
        assert_eq!(g.inner(&basis(2), &basis(2)), Rational::from_integer(-1));
        assert_eq!(g.inner(&basis(0), &basis(0)), Rational::one());
        assert!(g.inner(&basis(0), &basis(1)).is_zero());
    }

    #[test]
    fn distribution_names() {
        assert_eq!("b2".parse::<Distribution>().unwrap(), Distribution::B2);
        assert!("b4".parse::<Distribution>().is_err());
        assert_eq!(serde_json::to_string(&Distribution::B3).unwrap(), "\"b3\"");
    }
}
