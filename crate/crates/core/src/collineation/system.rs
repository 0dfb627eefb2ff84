//! The Lie derivative of `Ric` along left-invariant fields and the linear
//! system whose nullspace is the space of Ricci collineations.

use crate::connection::Distribution;
use crate::curvature::{bott_ricci, RicciForm, UPPER};
use crate::error::Result;
use crate::exact::vector::{basis, Vector3};
use crate::exact::{nullspace, Matrix, Rational, SubspaceBasis};
use crate::liealg::{bracket, build_group, GroupSpec, StructureConstants};

/// `(L_V Ric)(e_i, e_j) = −Ric([V,e_i], e_j) − Ric(e_i, [V,e_j])`.
///
/// The term `V[Ric(e_i,e_j)]` vanishes because `Ric` is constant on the
/// left-invariant frame.
pub fn lie_derivative_ric(ric: &RicciForm, sc: &StructureConstants, v: &Vector3) -> RicciForm {
    let brackets: [Vector3; 3] = std::array::from_fn(|i| bracket(sc, v, &basis(i)));
    let m = std::array::from_fn(|i| {
        std::array::from_fn(|j| -(ric.eval(&brackets[i], &basis(j))) - ric.eval(&basis(i), &brackets[j]))
    });
    RicciForm { symmetric: true, m }
}

/// Row labels of the system, 1-based: `(1,1), (1,2), (1,3), (2,2), (2,3), (3,3)`.
pub const ROW_INDEX: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

/// The `6×3` matrix `a` with `a·λ` equal to the upper triangle of
/// `L_V Ric` for `V = λ1 e1 + λ2 e2 + λ3 e3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollineationSystem {
    pub a: Matrix,
}

impl CollineationSystem {
    pub fn row_index(&self) -> [(usize, usize); 6] {
        ROW_INDEX
    }

    /// `a·v` as six entries.
    pub fn apply(&self, v: &Vector3) -> Vec<Rational> {
        self.a.mul_vec(v)
    }

    pub fn nullspace(&self) -> SubspaceBasis {
        nullspace(&self.a)
    }
}

/// Column `k` is the upper triangle of `L_{e_k} Ric`.
pub fn build_system(ric: &RicciForm, sc: &StructureConstants) -> CollineationSystem {
    let columns: [[Rational; 6]; 3] =
        std::array::from_fn(|k| lie_derivative_ric(ric, sc, &basis(k)).upper_triangle());
    let rows: Vec<Vec<Rational>> = (0..UPPER.len())
        .map(|r| (0..3).map(|k| columns[k][r].clone()).collect())
        .collect();
    CollineationSystem {
        a: Matrix::from_rows(&rows),
    }
}

/// Left-invariant Ricci collineations of the Bott connection.
pub fn collineation_space_of(sc: &StructureConstants, dist: Distribution) -> SubspaceBasis {
    build_system(&bott_ricci(sc, dist), sc).nullspace()
}

/// Validates the spec, then computes [`collineation_space_of`].
pub fn collineation_space(spec: &GroupSpec, dist: Distribution) -> Result<SubspaceBasis> {
    Ok(collineation_space_of(&build_group(spec)?, dist))
}
