use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{ExactScalar, Field, GaussianScalar, Matrix, MatrixQ, MatrixQi};

/// The block-diagonal form `J_n = diag(J_1, …, J_1)` with `J_1 = [[0, -1], [1, 0]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    pub n: usize,
    pub j: MatrixQ,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        let j = MatrixQ::from_fn(2 * n, 2 * n, |a, b| {
            if a / 2 != b / 2 {
                ExactScalar::zero()
            } else if a % 2 == 0 && b == a + 1 {
                -ExactScalar::one()
            } else if a % 2 == 1 && b + 1 == a {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            }
        });
        Self { n, j }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `XᵀJ + JX = 0`.
    pub fn preserves<T: Field>(&self, x: &Matrix<T>) -> bool {
        if x.rows() != self.dim() || x.cols() != self.dim() {
            return false;
        }
        let j = self.j.map(|v| T::from_rational(v.clone()));
        (&(&x.transpose() * &j) + &(&j * x)).is_zero()
    }

    /// `gJgᵀ = J`.
    pub fn is_symplectic(&self, g: &MatrixQ) -> bool {
        g.rows() == self.dim()
            && g.cols() == self.dim()
            && &(g * &self.j) * &g.transpose() == self.j
    }
}

/// `J·X` for the block-diagonal `J`, computed by row moves.
pub(crate) fn apply_j<T: Field>(x: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(x.rows(), x.cols(), |a, b| {
        if a % 2 == 0 {
            -x[(a + 1, b)].clone()
        } else {
            x[(a - 1, b)].clone()
        }
    })
}

/// `X·J`, using `XJ = -(J Xᵀ)ᵀ`.
pub(crate) fn mul_j_right<T: Field>(x: &Matrix<T>) -> Matrix<T> {
    -&apply_j(&x.transpose()).transpose()
}

/// `sp(2n, ℝ)` realized as `{X : XᵀJ + JX = 0}`, with a fixed basis and its structure constants.
///
/// Elements are `X = J·S` with `S` symmetric, so the coordinates of `X` are the upper-triangular
/// entries of `S = -J·X`. Basis order: for each 2×2 slot the three generators with both indices
/// in that slot, then for each slot pair `i < j` the four cross generators in lexicographic order.
#[derive(Debug, Clone)]
pub struct SpAlgebra {
    pub n: usize,
    pub form: SymplecticForm,
    pub basis: Vec<MatrixQ>,
    /// `[basis_a, basis_b] = Σ_k structure_constants[a][b][k] · basis_k`.
    pub structure_constants: Vec<Vec<Vec<ExactScalar>>>,
    entries: Vec<(usize, usize)>,
}

impl SpAlgebra {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn matrix_size(&self) -> usize {
        2 * self.n
    }

    /// Position `(a, b)`, `a <= b`, of the symmetric entry carried by each basis element.
    pub fn symmetric_entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn contains<T: Field>(&self, x: &Matrix<T>) -> bool {
        self.form.preserves(x)
    }

    /// Coordinates of an algebra element in the basis; `None` if `x` is not in the algebra.
    pub fn try_coords<T: Field>(&self, x: &Matrix<T>) -> Option<Vec<T>> {
        let m = self.matrix_size();
        if x.rows() != m || x.cols() != m {
            return None;
        }
        let s = -&apply_j(x);
        for a in 0..m {
            for b in a + 1..m {
                if s[(a, b)] != s[(b, a)] {
                    return None;
                }
            }
        }
        Some(
            self.entries
                .iter()
                .map(|&(a, b)| s[(a, b)].clone())
                .collect(),
        )
    }

    pub fn coords<T: Field>(&self, x: &Matrix<T>) -> Result<Vec<T>> {
        self.try_coords(x).ok_or_else(|| {
            Error::NotInAlgebra(format!(
                "{}x{} matrix with XᵀJ + JX ≠ 0",
                x.rows(),
                x.cols()
            ))
        })
    }

    /// `Σ c_k basis_k` over any field containing ℚ.
    pub fn element<T: Field>(&self, coords: &[T]) -> Matrix<T> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        let m = self.matrix_size();
        let mut s = Matrix::<T>::zeros(m, m);
        for (&(a, b), c) in self.entries.iter().zip(coords) {
            s[(a, b)] = c.clone();
            s[(b, a)] = c.clone();
        }
        apply_j(&s)
    }

    pub fn bracket_coords(&self, u: &[ExactScalar], v: &[ExactScalar]) -> Vec<ExactScalar> {
        let d = self.dim();
        let mut out = vec![ExactScalar::zero(); d];
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let w = ua * vb;
                for (k, c) in self.structure_constants[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// Bracket of complexified elements in coordinates, through the matrix realization.
    pub fn bracket_coords_c(
        &self,
        u: &[GaussianScalar],
        v: &[GaussianScalar],
    ) -> Vec<GaussianScalar> {
        let x = self.element(u);
        let y = self.element(v);
        self.coords(&x.commutator(&y))
            .expect("sp(2n) is closed under brackets")
    }

    /// Matrix of `ad(X)` in the basis: column `b` holds the coordinates of `[X, basis_b]`.
    pub fn ad_matrix(&self, x: &MatrixQ) -> Result<MatrixQ> {
        let cols: Vec<Vec<ExactScalar>> = self
            .basis
            .iter()
            .map(|b| self.coords(&x.commutator(b)))
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn complex_basis(&self) -> Vec<MatrixQi> {
        self.basis.iter().map(MatrixQ::complexify).collect()
    }

    /// Jacobi identity `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` on every basis triple,
    /// evaluated with the stored structure constants.
    pub fn jacobi_holds(&self) -> bool {
        let d = self.dim();
        let unit = |i: usize| -> Vec<ExactScalar> {
            let mut v = vec![ExactScalar::zero(); d];
            v[i] = ExactScalar::one();
            v
        };
        let brackets = &self.structure_constants;
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let t1 = self.bracket_coords(&brackets[a][b], &unit(c));
                    let t2 = self.bracket_coords(&brackets[b][c], &unit(a));
                    let t3 = self.bracket_coords(&brackets[c][a], &unit(b));
                    if t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .any(|((x, y), z)| !(x + y + z).is_zero())
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds `sp(2n, ℝ)` with its basis and exact structure constants.
pub fn build_sp_algebra(n: usize) -> SpAlgebra {
    assert!(n >= 1, "sp(2n) needs n >= 1");
    let form = SymplecticForm::new(n);
    let mut entries = Vec::with_capacity(n * (2 * n + 1));
    for k in 0..n {
        let (a, b) = (2 * k, 2 * k + 1);
        entries.extend([(a, a), (a, b), (b, b)]);
    }
    for i in 0..n {
        for j in i + 1..n {
            for a in [2 * i, 2 * i + 1] {
                for b in [2 * j, 2 * j + 1] {
                    entries.push((a, b));
                }
            }
        }
    }
    let mut alg = SpAlgebra {
        n,
        form,
        basis: Vec::new(),
        structure_constants: Vec::new(),
        entries,
    };
    let d = alg.entries.len();
    alg.basis = (0..d)
        .map(|k| {
            let mut c = vec![ExactScalar::zero(); d];
            c[k] = ExactScalar::one();
            alg.element(&c)
        })
        .collect();
    alg.structure_constants = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    alg.coords(&alg.basis[a].commutator(&alg.basis[b]))
                        .expect("closed under brackets")
                })
                .collect()
        })
        .collect();
    alg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::q;

    /// Independent count: dimension of `{X : XᵀJ + JX = 0}` as the nullspace of the
    /// linear map on all `(2n)²` matrix entries.
    fn nullspace_dimension_oracle(n: usize) -> usize {
        let form = SymplecticForm::new(n);
        let m = 2 * n;
        let cols: Vec<Vec<ExactScalar>> = (0..m * m)
            .map(|e| {
                let x = MatrixQ::from_fn(m, m, |i, j| if i * m + j == e { q(1) } else { q(0) });
                (&(&x.transpose() * &form.j) + &(&form.j * &x)).into_data()
            })
            .collect();
        Matrix::from_columns(m * m, &cols)
            .unwrap()
            .nullspace()
            .len()
    }

    #[test]
    fn form_properties() {
        for n in 1..=3 {
            let f = SymplecticForm::new(n);
            assert_eq!(&f.j * &f.j, -&MatrixQ::identity(2 * n));
            assert_eq!(f.j.transpose(), -&f.j);
        }
        let j1 = SymplecticForm::new(1).j;
        assert_eq!(
            j1,
            Matrix::from_rows(vec![vec![q(0), q(-1)], vec![q(1), q(0)]]).unwrap()
        );
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(build_sp_algebra(1).dim(), 3);
        assert_eq!(build_sp_algebra(2).dim(), nullspace_dimension_oracle(2));
        assert_eq!(build_sp_algebra(2).dim(), 10);
        assert_eq!(build_sp_algebra(3).dim(), nullspace_dimension_oracle(3));
        assert_eq!(build_sp_algebra(3).dim(), 21);
        assert_eq!(build_sp_algebra(4).dim(), 36);
    }

    #[test]
    fn basis_in_algebra_and_independent() {
        let alg = build_sp_algebra(2);
        for b in &alg.basis {
            assert!(alg.contains(b));
        }
        let rows: Vec<Vec<ExactScalar>> = alg.basis.iter().map(|b| b.data().to_vec()).collect();
        assert_eq!(Matrix::from_rows(rows).unwrap().rank(), alg.dim());
    }

    #[test]
    fn coords_round_trip_and_reject() {
        let alg = build_sp_algebra(2);
        let c: Vec<ExactScalar> = (0..10).map(|k| q(k as i64 - 4)).collect();
        assert_eq!(alg.coords(&alg.element(&c)).unwrap(), c);
        assert!(alg.coords(&MatrixQ::identity(4)).is_err());
    }

    #[test]
    fn structure_constants_reproduce_brackets() {
        let alg = build_sp_algebra(2);
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let expanded = alg.element(&alg.structure_constants[a][b]);
                assert_eq!(expanded, alg.basis[a].commutator(&alg.basis[b]));
            }
        }
    }

    #[test]
    fn jacobi_small_ranks() {
        assert!(build_sp_algebra(1).jacobi_holds());
        assert!(build_sp_algebra(2).jacobi_holds());
    }

    #[test]
    fn first_slot_contains_j1() {
        // J_1 = J·I, so it is the sum of the two diagonal generators of slot 0.
        let alg = build_sp_algebra(1);
        let j = alg.form.j.clone();
        assert_eq!(alg.coords(&j).unwrap(), vec![q(1), q(0), q(1)]);
    }
}
