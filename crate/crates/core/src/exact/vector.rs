//! Three-component rational vectors in the frame `e1, e2, e3`.

use super::Rational;

pub type Vector3 = [Rational; 3];

pub fn zero() -> Vector3 {
    std::array::from_fn(|_| Rational::zero())
}

/// Frame vector `e_{i+1}` (0-based index).
pub fn basis(i: usize) -> Vector3 {
    std::array::from_fn(|k| if k == i { Rational::one() } else { Rational::zero() })
}

pub fn from_ints(v: [i64; 3]) -> Vector3 {
    v.map(Rational::from_integer)
}

pub fn add(u: &Vector3, v: &Vector3) -> Vector3 {
    std::array::from_fn(|k| &u[k] + &v[k])
}

pub fn sub(u: &Vector3, v: &Vector3) -> Vector3 {
    std::array::from_fn(|k| &u[k] - &v[k])
}

pub fn scale(a: &Rational, v: &Vector3) -> Vector3 {
    std::array::from_fn(|k| a * &v[k])
}

pub fn is_zero(v: &Vector3) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn to_strings(v: &Vector3) -> [String; 3] {
    std::array::from_fn(|k| v[k].to_string())
}
