//! Curvature of a left-invariant connection, the Ricci form `ρ` and its
//! symmetrization `Ric`.

use serde::{Deserialize, Serialize};

use crate::connection::{bott, Connection, Distribution, Metric};
use crate::exact::vector::{self, basis};
use crate::exact::Rational;
use crate::liealg::StructureConstants;

pub type Matrix3 = [[Rational; 3]; 3];

/// `R(e_i, e_j) e_k = Σ_l r[i][j][k][l] e_l`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CurvatureTensor {
    pub r: [[[[Rational; 3]; 3]; 3]; 3],
}

impl CurvatureTensor {
    pub fn is_zero(&self) -> bool {
        self.r.iter().flatten().flatten().flatten().all(Rational::is_zero)
    }

    /// `r[i][j][k][l] = −r[j][i][k][l]` for all indices.
    pub fn is_antisymmetric(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| (0..3).all(|k| (0..3).all(|l| self.r[i][j][k][l] == -&self.r[j][i][k][l])))
        })
    }
}

/// `R(X,Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z` on the frame.
pub fn curvature(conn: &Connection, sc: &StructureConstants) -> CurvatureTensor {
    let r = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let ek = basis(k);
                let a = conn.nabla(&basis(i), conn.frame(j, k));
                let b = conn.nabla(&basis(j), conn.frame(i, k));
                let c = conn.nabla(sc.frame_bracket(i, j), &ek);
                vector::sub(&vector::sub(&a, &b), &c)
            })
        })
    });
    CurvatureTensor { r }
}

/// A bilinear form on the frame. `symmetric` marks `Ric` as opposed to `ρ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RicciJson")]
pub struct RicciForm {
    pub symmetric: bool,
    pub m: Matrix3,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RicciJson {
    symmetric: bool,
    m: Matrix3,
}

impl TryFrom<RicciJson> for RicciForm {
    type Error = String;
    fn try_from(j: RicciJson) -> Result<Self, String> {
        let form = RicciForm {
            symmetric: j.symmetric,
            m: j.m,
        };
        if form.symmetric && !form.is_symmetric_matrix() {
            return Err("form flagged symmetric but matrix is not".into());
        }
        Ok(form)
    }
}

impl RicciForm {
    pub fn zero_symmetric() -> Self {
        RicciForm {
            symmetric: true,
            m: std::array::from_fn(|_| vector::zero()),
        }
    }

    /// `form(e_i, e_j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.m[i][j]
    }

    /// `form(u, v) = Σ u_i v_j m[i][j]`.
    pub fn eval(&self, u: &vector::Vector3, v: &vector::Vector3) -> Rational {
        let mut out = Rational::zero();
        for i in 0..3 {
            for j in 0..3 {
                out += &u[i] * &v[j] * &self.m[i][j];
            }
        }
        out
    }

    pub fn is_symmetric_matrix(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.m[i][j] == self.m[j][i]))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Rational::is_zero)
    }

    /// Entries `(1,1), (1,2), (1,3), (2,2), (2,3), (3,3)`.
    pub fn upper_triangle(&self) -> [Rational; 6] {
        UPPER.map(|(i, j)| self.m[i][j].clone())
    }
}

/// 0-based index pairs of the upper triangle, in row order.
pub const UPPER: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// `ρ(X,Y) = −g(R(X,e1)Y,e1) − g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3)`.
pub fn ricci_rho(r: &CurvatureTensor) -> RicciForm {
    let g = Metric;
    let m = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3)
                .map(|m| {
                    let value = g.inner(&r.r[i][m][j], &basis(m));
                    if m == 2 {
                        value
                    } else {
                        -value
                    }
                })
                .sum()
        })
    });
    RicciForm { symmetric: false, m }
}

/// `Ric(X,Y) = (ρ(X,Y) + ρ(Y,X)) / 2`. Symmetric input is a fixed point.
pub fn symmetrize(rho: &RicciForm) -> RicciForm {
    let half = Rational::new(1, 2);
    let m = std::array::from_fn(|i| std::array::from_fn(|j| (&rho.m[i][j] + &rho.m[j][i]) * &half));
    RicciForm { symmetric: true, m }
}

/// Every intermediate of the Ricci computation for one distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciPipeline {
    pub connection: Connection,
    pub curvature: CurvatureTensor,
    pub rho: RicciForm,
    pub ric: RicciForm,
}

pub fn ricci_pipeline(sc: &StructureConstants, dist: Distribution) -> RicciPipeline {
    let connection = bott(sc, dist);
    let curvature = curvature(&connection, sc);
    let rho = ricci_rho(&curvature);
    let ric = symmetrize(&rho);
    RicciPipeline {
        connection,
        curvature,
        rho,
        ric,
    }
}

/// Symmetrized Ricci tensor of the Bott connection.
pub fn bott_ricci(sc: &StructureConstants, dist: Distribution) -> RicciForm {
    ricci_pipeline(sc, dist).ric
}
