//! Subspaces of `T^d` stored by canonical (echelon) bases.

use num_traits::Zero;

use super::gaussian::GaussianScalar;
use super::matrix::{echelon_basis, Matrix};
use super::scalar::{ExactScalar, Field};

/// A subspace of `T^ambient`, with its basis in reduced echelon form so that equal
/// subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
}

impl<T: Field> Subspace<T> {
    pub fn span(ambient: usize, vectors: &[Vec<T>]) -> Self {
        Self {
            ambient,
            basis: echelon_basis(ambient, vectors),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::<T>::identity(ambient).to_rows(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn contains(&self, v: &[T]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).expect("equal lengths").rank() == self.dim()
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        self.sum(other).dim() == self.dim()
    }

    /// Equality by mutual containment, decided with rank computations.
    pub fn same_span(&self, other: &Self) -> bool {
        let s = self.sum(other).dim();
        s == self.dim() && s == other.dim()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &v)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.ambient);
        }
        // a·U = b·V  <=>  [Uᵀ | -Vᵀ] (a, b) = 0
        let k = self.dim();
        let cols: Vec<Vec<T>> = self
            .basis
            .iter()
            .cloned()
            .chain(
                other
                    .basis
                    .iter()
                    .map(|v| v.iter().map(|x| -x.clone()).collect()),
            )
            .collect();
        let m = Matrix::from_columns(self.ambient, &cols).expect("equal lengths");
        let vecs: Vec<Vec<T>> = m
            .nullspace()
            .into_iter()
            .map(|coef| combine(self.ambient, &self.basis, &coef[..k]))
            .collect();
        Self::span(self.ambient, &vecs)
    }

    /// Linear equations cutting out the subspace, for repeated membership tests.
    pub fn membership(&self) -> Membership<T> {
        let equations = if self.dim() == 0 {
            Matrix::<T>::identity(self.ambient).to_rows()
        } else {
            Matrix::from_rows(self.basis.clone())
                .expect("equal lengths")
                .nullspace()
        };
        Membership { equations }
    }

    pub fn conj(&self) -> Self {
        let v: Vec<Vec<T>> = self
            .basis
            .iter()
            .map(|b| b.iter().map(Field::conjugate).collect())
            .collect();
        Self::span(self.ambient, &v)
    }
}

impl Subspace<ExactScalar> {
    pub fn complexify(&self) -> Subspace<GaussianScalar> {
        let v: Vec<Vec<GaussianScalar>> = self
            .basis
            .iter()
            .map(|b| b.iter().map(|x| GaussianScalar::real(x.clone())).collect())
            .collect();
        Subspace::span(self.ambient, &v)
    }
}

impl Subspace<GaussianScalar> {
    /// Real dimension of the real points `V ∩ ℝ^d`.
    ///
    /// With `V = span_ℂ(v_1..v_k)`, a real point is `Σ c_j v_j` with vanishing imaginary
    /// part; solving for `(Re c, Im c)` gives a real linear system whose kernel has the
    /// same dimension as the set of real points.
    pub fn real_points(&self) -> Subspace<ExactScalar> {
        let k = self.dim();
        if k == 0 {
            return Subspace::zero(self.ambient);
        }
        // Σ (x_j + i y_j)(a_j + i b_j) has imaginary part Σ x_j b_j + y_j a_j.
        let m = Matrix::from_fn(self.ambient, 2 * k, |row, col| {
            let v = &self.basis[col % k][row];
            if col < k {
                v.im.clone()
            } else {
                v.re.clone()
            }
        });
        let reals: Vec<Vec<ExactScalar>> = m
            .nullspace()
            .into_iter()
            .map(|c| {
                (0..self.ambient)
                    .map(|row| {
                        (0..k).fold(ExactScalar::zero(), |acc, j| {
                            let v = &self.basis[j][row];
                            acc + &(&c[j] * &v.re - &c[k + j] * &v.im)
                        })
                    })
                    .collect()
            })
            .collect();
        Subspace::span(self.ambient, &reals)
    }
}

/// The annihilator of a subspace: `v` is a member iff every equation vanishes on it.
#[derive(Debug, Clone)]
pub struct Membership<T> {
    equations: Vec<Vec<T>>,
}

impl<T: Field> Membership<T> {
    pub fn contains(&self, v: &[T]) -> bool {
        self.equations.iter().all(|e| {
            e.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(T::zero(), |acc, (a, b)| acc + &(a.clone() * b))
                .is_zero()
        })
    }
}

/// Coefficients `c` with `Σ c_j basis_j = v`, for linearly independent `basis`;
/// `None` when `v` is outside the span.
pub fn express_in_basis<T: Field>(basis: &[Vec<T>], v: &[T]) -> Option<Vec<T>> {
    let m = basis.len();
    let mut cols = basis.to_vec();
    cols.push(v.to_vec());
    let (r, pivots) = Matrix::from_columns(v.len(), &cols).ok()?.rref();
    if pivots.contains(&m) || pivots.len() != m {
        return None;
    }
    Some((0..m).map(|i| r[(i, m)].clone()).collect())
}

/// `Σ coef_j · basis_j`.
pub fn combine<T: Field>(len: usize, basis: &[Vec<T>], coef: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (b, c) in basis.iter().zip(coef) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                let cur = std::mem::replace(o, T::zero());
                *o = cur + &(c.clone() * x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::scalar::q;

    fn v(x: &[i64]) -> Vec<ExactScalar> {
        x.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert!(a.same_span(&b));
    }

    #[test]
    fn express_in_independent_basis() {
        let b = [v(&[1, 1, 0]), v(&[0, 1, 1])];
        assert_eq!(express_in_basis(&b, &v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(express_in_basis(&b, &v(&[1, 0, 0])), None);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.basis(), &[v(&[0, 1, 0])]);
    }

    #[test]
    fn membership_agrees_with_rank() {
        let a = Subspace::span(4, &[v(&[1, 2, 0, -1]), v(&[0, 1, 1, 3])]);
        let m = a.membership();
        for w in [
            v(&[1, 3, 1, 2]),
            v(&[1, 0, 0, 0]),
            v(&[0, 0, 0, 0]),
            v(&[2, 5, 1, 1]),
        ] {
            assert_eq!(m.contains(&w), a.contains(&w));
        }
        assert!(!Subspace::<ExactScalar>::zero(2)
            .membership()
            .contains(&v(&[0, 1])));
    }

    #[test]
    fn real_points_of_conjugate_pair() {
        let i = GaussianScalar::i();
        let one = GaussianScalar::real(q(1));
        let z = GaussianScalar::real(q(0));
        let w = Subspace::span(2, &[vec![one.clone(), i.clone()]]);
        assert_eq!(w.real_points().dim(), 0);
        let both = w.sum(&w.conj());
        assert_eq!(both.real_points().dim(), 2);
        let line = Subspace::span(2, &[vec![i, z]]);
        assert_eq!(line.real_points().dim(), 1);
    }
}
