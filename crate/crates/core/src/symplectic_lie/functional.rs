use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::SymplecticForm;
use crate::error::{Error, Result};
use crate::exact_linalg::{frac, render_rational, ExactScalar, MatrixQ};

/// A point `F ∈ 𝔤*`, identified with a matrix of the algebra through `⟨F, X⟩ = tr(F·X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    pub n: usize,
    pub matrix: MatrixQ,
    /// `λ_1..λ_r` when `matrix` has the special block form.
    pub lambdas: Option<Vec<ExactScalar>>,
}

impl Functional {
    /// Wraps an arbitrary algebra element; no special parameters are attached.
    pub fn new(n: usize, matrix: MatrixQ) -> Result<Self> {
        if !SymplecticForm::new(n).preserves(&matrix) {
            return Err(Error::NotInAlgebra("functional matrix".into()));
        }
        Ok(Self {
            n,
            matrix,
            lambdas: None,
        })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            matrix: MatrixQ::zeros(2 * n, 2 * n),
            lambdas: Some(Vec::new()),
        }
    }

    /// Number of nonzero rotation blocks `r`, when the special form is known.
    pub fn r(&self) -> Option<usize> {
        self.lambdas.as_ref().map(Vec::len)
    }

    pub fn special_lambdas(&self) -> Result<&[ExactScalar]> {
        self.lambdas.as_deref().ok_or(Error::NotSpecial)
    }
}

/// `⟨F, X⟩ = tr(F·X)`.
pub fn trace_pairing(f: &Functional, x: &MatrixQ) -> Result<ExactScalar> {
    f.matrix.trace_product(x)
}

/// The special functional: `r` blocks `[[0, -λ_i], [λ_i, 0]]` followed by a zero block of size `2(n - r)`.
///
/// All `λ_i` must be positive and pairwise distinct.
pub fn build_special_f(n: usize, lambdas: &[ExactScalar]) -> Result<Functional> {
    if lambdas.len() > n {
        return Err(Error::DegenerateParameters(format!(
            "{} lambdas for n = {n}",
            lambdas.len()
        )));
    }
    for (i, l) in lambdas.iter().enumerate() {
        if *l <= ExactScalar::zero() {
            return Err(Error::DegenerateParameters(format!(
                "lambda_{} = {} is not positive",
                i + 1,
                render_rational(l)
            )));
        }
        if let Some(j) = lambdas[..i].iter().position(|m| m == l) {
            return Err(Error::DegenerateParameters(format!(
                "lambda_{} = lambda_{} = {}",
                j + 1,
                i + 1,
                render_rational(l)
            )));
        }
    }
    let mut m = MatrixQ::zeros(2 * n, 2 * n);
    for (k, l) in lambdas.iter().enumerate() {
        m[(2 * k, 2 * k + 1)] = -l.clone();
        m[(2 * k + 1, 2 * k)] = l.clone();
    }
    Ok(Functional {
        n,
        matrix: m,
        lambdas: Some(lambdas.to_vec()),
    })
}

/// `r` pairwise distinct positive rationals `p/q` with `1 ≤ p ≤ 12`, `1 ≤ q ≤ 5`.
pub fn random_lambdas(r: usize, seed: u64) -> Vec<ExactScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<ExactScalar> = Vec::with_capacity(r);
    while out.len() < r {
        let l = frac(rng.gen_range(1..=12), rng.gen_range(1..=5));
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{q, Matrix};

    #[test]
    fn special_f_rank_one() {
        let f = build_special_f(1, &[q(1)]).unwrap();
        assert_eq!(
            f.matrix,
            Matrix::from_rows(vec![vec![q(0), q(-1)], vec![q(1), q(0)]]).unwrap()
        );
    }

    #[test]
    fn special_f_without_blocks_is_zero() {
        let f = build_special_f(2, &[]).unwrap();
        assert!(f.matrix.is_zero());
        assert_eq!(f.r(), Some(0));
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            build_special_f(2, &[q(1), q(1)]),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            build_special_f(2, &[q(0)]),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            build_special_f(2, &[q(-3)]),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(
            build_special_f(1, &[q(1), q(2)]),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn special_f_lies_in_algebra() {
        let f = build_special_f(3, &[q(2), q(5)]).unwrap();
        assert!(SymplecticForm::new(3).preserves(&f.matrix));
    }

    #[test]
    fn pairing_hand_values() {
        let l = q(7);
        let f = build_special_f(1, std::slice::from_ref(&l)).unwrap();
        let x = SymplecticForm::new(1).j;
        // [[0,-l],[l,0]]·[[0,-1],[1,0]] = [[-l,0],[0,-l]]
        assert_eq!(trace_pairing(&f, &x).unwrap(), -q(2) * l);
        assert_eq!(trace_pairing(&Functional::zero(1), &x).unwrap(), q(0));
    }

    #[test]
    fn random_lambdas_are_admissible() {
        for seed in 0..20 {
            let l = random_lambdas(4, seed);
            assert!(build_special_f(4, &l).is_ok());
            assert_eq!(l, random_lambdas(4, seed));
        }
    }
}
