use num_traits::Zero;

use super::gaussian::GaussianScalar;
use super::matrix::{echelon_basis, MatrixQi};
use super::scalar::q;
use super::subspace::combine;
use crate::error::{Error, Result};

/// A joint eigenspace: `ops[k] v = weight[k] v` for every basis vector `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenspace {
    pub weight: Vec<GaussianScalar>,
    pub basis: Vec<Vec<GaussianScalar>>,
}

impl Eigenspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero_weight(&self) -> bool {
        self.weight.iter().all(Zero::is_zero)
    }
}

/// Candidate eigenvalues `i·c` for integer `c` in `-bound..=bound`, in increasing order of `c`.
pub fn imaginary_integer_candidates(bound: i64) -> Vec<GaussianScalar> {
    (-bound..=bound)
        .map(|c| GaussianScalar::imag(q(c)))
        .collect()
}

/// Joint eigenspace decomposition of commuting operators on `ℚ(i)^ambient`.
///
/// Each operator's spectrum must lie in its candidate list; an operator whose candidate
/// eigenspaces do not fill the current subspace yields [`Error::NonSplit`]. Spaces are
/// returned in the lexicographic order of the candidate lists, each with an echelon basis.
pub fn simultaneous_eigenspaces(
    ambient: usize,
    ops: &[MatrixQi],
    candidates: &[Vec<GaussianScalar>],
) -> Result<Vec<Eigenspace>> {
    if ops.len() != candidates.len() {
        return Err(Error::ShapeMismatch(
            "one candidate list per operator".into(),
        ));
    }
    for op in ops {
        if op.rows() != ambient || op.cols() != ambient {
            return Err(Error::ShapeMismatch(format!(
                "operator is {}x{}, ambient {ambient}",
                op.rows(),
                op.cols()
            )));
        }
    }
    for a in 0..ops.len() {
        for b in a + 1..ops.len() {
            if !ops[a].commutator(&ops[b]).is_zero() {
                return Err(Error::NonCommuting(a, b));
            }
        }
    }

    let whole = MatrixQi::identity(ambient).to_rows();
    let mut spaces = vec![Eigenspace {
        weight: Vec::new(),
        basis: whole,
    }];
    for (k, (op, cands)) in ops.iter().zip(candidates).enumerate() {
        let mut refined = Vec::new();
        for space in &spaces {
            let image: Vec<Vec<GaussianScalar>> = space
                .basis
                .iter()
                .map(|v| op.mul_vec(v))
                .collect::<Result<_>>()?;
            let mut found = 0;
            for mu in cands {
                // (A - mu) restricted to the space, as an ambient x dim matrix.
                let cols: Vec<Vec<GaussianScalar>> = image
                    .iter()
                    .zip(&space.basis)
                    .map(|(av, v)| {
                        av.iter()
                            .zip(v)
                            .map(|(a, x)| a.clone() - &(mu.clone() * x))
                            .collect()
                    })
                    .collect();
                let restricted = MatrixQi::from_columns(ambient, &cols)?;
                let coefs = restricted.nullspace();
                if coefs.is_empty() {
                    continue;
                }
                let vecs: Vec<Vec<GaussianScalar>> = coefs
                    .iter()
                    .map(|c| combine(ambient, &space.basis, c))
                    .collect();
                found += vecs.len();
                let mut weight = space.weight.clone();
                weight.push(mu.clone());
                refined.push(Eigenspace {
                    weight,
                    basis: echelon_basis(ambient, &vecs),
                });
            }
            if found != space.basis.len() {
                return Err(Error::NonSplit(k));
            }
        }
        spaces = refined;
    }
    Ok(spaces)
}

/// Checks `A v = μ v` exactly.
pub fn is_eigenvector(op: &MatrixQi, v: &[GaussianScalar], mu: &GaussianScalar) -> bool {
    match op.mul_vec(v) {
        Ok(av) => av.iter().zip(v).all(|(a, x)| *a == mu.clone() * x),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::matrix::Matrix;

    fn gi(re: i64, im: i64) -> GaussianScalar {
        GaussianScalar::new(q(re), q(im))
    }

    #[test]
    fn diagonal_operator() {
        let op =
            Matrix::from_rows(vec![vec![gi(0, 1), gi(0, 0)], vec![gi(0, 0), gi(0, -1)]]).unwrap();
        let spaces =
            simultaneous_eigenspaces(2, &[op], &[imaginary_integer_candidates(2)]).unwrap();
        assert_eq!(spaces.len(), 2);
        assert_eq!(spaces[0].weight, vec![gi(0, -1)]);
        assert_eq!(spaces[0].basis, vec![vec![gi(0, 0), gi(1, 0)]]);
        assert_eq!(spaces[1].weight, vec![gi(0, 1)]);
    }

    #[test]
    fn zero_operator_gives_whole_space() {
        let spaces = simultaneous_eigenspaces(
            3,
            &[MatrixQi::zeros(3, 3)],
            &[imaginary_integer_candidates(2)],
        )
        .unwrap();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].weight, vec![GaussianScalar::zero()]);
        assert_eq!(spaces[0].dim(), 3);
    }

    #[test]
    fn real_rotation_splits_over_gaussian_rationals() {
        let j =
            Matrix::from_rows(vec![vec![gi(0, 0), gi(-1, 0)], vec![gi(1, 0), gi(0, 0)]]).unwrap();
        let spaces = simultaneous_eigenspaces(
            2,
            std::slice::from_ref(&j),
            &[imaginary_integer_candidates(2)],
        )
        .unwrap();
        assert_eq!(spaces.len(), 2);
        for s in &spaces {
            assert!(is_eigenvector(&j, &s.basis[0], &s.weight[0]));
        }
    }

    #[test]
    fn errors() {
        let a =
            Matrix::from_rows(vec![vec![gi(0, 0), gi(1, 0)], vec![gi(0, 0), gi(0, 0)]]).unwrap();
        let b = a.transpose();
        let c = imaginary_integer_candidates(2);
        assert_eq!(
            simultaneous_eigenspaces(2, &[a.clone(), b], &[c.clone(), c.clone()]),
            Err(Error::NonCommuting(0, 1))
        );
        // Eigenvalue 3 is not a candidate.
        let three = MatrixQi::identity(2).scale(&gi(3, 0));
        assert_eq!(
            simultaneous_eigenspaces(2, &[three], std::slice::from_ref(&c)),
            Err(Error::NonSplit(0))
        );
        // Nilpotent: not diagonalizable.
        assert_eq!(
            simultaneous_eigenspaces(2, &[a], &[c]),
            Err(Error::NonSplit(0))
        );
    }
}
