use num_traits::Zero;

use crate::error::Result;
use crate::exact_linalg::{ExactScalar, Matrix, MatrixQ, Subspace};
use crate::orbits::stabilizer_algebra;
use crate::roots_weyl::TorusData;
use crate::symplectic_lie::{trace_pairing, Functional, SpAlgebra};

/// The radical of `𝔤_F` and the restriction of `F` to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalRestriction {
    pub stabilizer_dim: usize,
    /// Dimension of the center of `𝔤_F`, which is its radical when `𝔤_F` is reductive.
    pub radical_dim: usize,
    pub derived_dim: usize,
    pub radical_is_torus: bool,
    /// `𝔤_F = 𝔷 ⊕ [𝔤_F, 𝔤_F]` with nondegenerate trace form on the derived algebra.
    pub reductive: bool,
    /// `(⟨F, H_j⟩)_j`.
    pub restriction: Vec<ExactScalar>,
    pub unipotent_radical_dim: usize,
}

fn gram(ms: &[MatrixQ]) -> MatrixQ {
    MatrixQ::from_fn(ms.len(), ms.len(), |a, b| {
        ms[a].trace_product(&ms[b]).expect("square")
    })
}

fn negative_definite(k: &MatrixQ) -> bool {
    (1..=k.rows()).all(|m| {
        let d = MatrixQ::from_fn(m, m, |i, j| k[(i, j)].clone()).determinant();
        if m % 2 == 1 {
            d < ExactScalar::zero()
        } else {
            d > ExactScalar::zero()
        }
    })
}

/// Center, derived algebra and the pairing of `F` with the torus generators.
///
/// The unipotent radical is certified zero by negative definiteness of `tr(Z²)` on the center:
/// a nilpotent `Z` would have `tr(Z²) = 0`.
pub fn restriction_to_radical(alg: &SpAlgebra, f: &Functional) -> Result<RadicalRestriction> {
    let torus = TorusData::for_functional(f)?;
    let stab = stabilizer_algebra(alg, f);
    let d = alg.dim();

    let mut rows = Vec::new();
    for b in &stab.basis {
        rows.extend(alg.ad_matrix(b)?.to_rows());
    }
    let centralizer = Subspace::span(d, &Matrix::from_rows(rows)?.nullspace());
    let center = centralizer.intersection(&stab.coords);

    let derived_vecs: Vec<Vec<ExactScalar>> = stab
        .coords
        .basis()
        .iter()
        .enumerate()
        .flat_map(|(a, x)| stab.coords.basis()[a + 1..].iter().map(move |y| (x, y)))
        .map(|(x, y)| alg.bracket_coords(x, y))
        .collect();
    let derived = Subspace::span(d, &derived_vecs);

    let torus_coords = torus
        .generators
        .iter()
        .map(|h| alg.coords(h))
        .collect::<Result<Vec<_>>>()?;
    let radical_is_torus = center.same_span(&Subspace::span(d, &torus_coords));

    let derived_mats: Vec<MatrixQ> = derived.basis().iter().map(|c| alg.element(c)).collect();
    let reductive = center.intersection(&derived).dim() == 0
        && center.dim() + derived.dim() == stab.dim()
        && gram(&derived_mats).rank() == derived.dim();

    let center_mats: Vec<MatrixQ> = center.basis().iter().map(|c| alg.element(c)).collect();
    let unipotent_radical_dim = if negative_definite(&gram(&center_mats)) {
        0
    } else {
        center.dim()
    };

    let restriction = torus
        .generators
        .iter()
        .map(|h| trace_pairing(f, h))
        .collect::<Result<_>>()?;
    Ok(RadicalRestriction {
        stabilizer_dim: stab.dim(),
        radical_dim: center.dim(),
        derived_dim: derived.dim(),
        radical_is_torus,
        reductive,
        restriction,
        unipotent_radical_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::q;
    use crate::symplectic_lie::{build_sp_algebra, build_special_f};

    #[test]
    fn partial_torus() {
        let alg = build_sp_algebra(2);
        let f = build_special_f(2, &[q(1)]).unwrap();
        let r = restriction_to_radical(&alg, &f).unwrap();
        assert_eq!((r.radical_dim, r.derived_dim), (1, 3));
        assert_eq!(r.restriction, vec![q(-2)]);
        assert!(r.radical_is_torus && r.reductive);
        assert_eq!(r.unipotent_radical_dim, 0);
    }

    #[test]
    fn full_torus() {
        let alg = build_sp_algebra(3);
        let f = build_special_f(3, &[q(1), q(2), q(5)]).unwrap();
        let r = restriction_to_radical(&alg, &f).unwrap();
        assert_eq!(r.radical_dim, r.stabilizer_dim);
        assert_eq!(r.restriction, vec![q(-2), q(-4), q(-10)]);
        assert_eq!(r.unipotent_radical_dim, 0);
    }
}
