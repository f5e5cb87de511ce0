//! Maximal parabolic elements `R(θ) · L(h) · N(x, y, z)`.
//!
//! The two-factor form is naturally written in coordinates `(u, a_1, …, a_{n−1}, b_1, …, b_{n−1}, w)`:
//! the rotation acts on the `(u, w)` plane, `h ∈ Sp(2(n − 1))` on the middle, and `N` has top row
//! `(1, x, y, z)` and last column `(z, −y, x, 1)`. Those coordinates map to the block-diagonal
//! convention by `u ↦ 1`, `w ↦ 0`, `a_k ↦ 2k`, `b_k ↦ 2k + 1`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_linalg::{frac, render_rational, ExactScalar, Matrix, MatrixQ};
use crate::symplectic_lie::{pythagorean_point, random_symplectic, GroupElement, SymplecticForm};

/// `perm[p]` is the block-convention index of (u, a, b, w) coordinate `p`.
pub fn uabw_to_block(n: usize) -> Vec<usize> {
    let m = n - 1;
    let mut perm = vec![0; 2 * n];
    perm[0] = 1;
    perm[2 * n - 1] = 0;
    for k in 0..m {
        perm[1 + k] = 2 * (k + 1);
        perm[1 + m + k] = 2 * (k + 1) + 1;
    }
    perm
}

fn to_block(n: usize, a: &MatrixQ) -> MatrixQ {
    let perm = uabw_to_block(n);
    let mut out = MatrixQ::zeros(2 * n, 2 * n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            out[(perm[i], perm[j])] = a[(i, j)].clone();
        }
    }
    out
}

fn to_uabw(n: usize, a: &MatrixQ) -> MatrixQ {
    let perm = uabw_to_block(n);
    MatrixQ::from_fn(2 * n, 2 * n, |i, j| a[(perm[i], perm[j])].clone())
}

/// Parameters of one maximal parabolic element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalParabolicForm {
    pub n: usize,
    pub rotation: (ExactScalar, ExactScalar),
    pub levi: GroupElement,
    pub x: Vec<ExactScalar>,
    pub y: Vec<ExactScalar>,
    pub z: ExactScalar,
}

impl MaximalParabolicForm {
    /// The rotation factor in (u, a, b, w) coordinates.
    pub fn rotation_factor(&self) -> MatrixQ {
        let n = self.n;
        let (c, s) = &self.rotation;
        let mut m = MatrixQ::identity(2 * n);
        m[(0, 0)] = c.clone();
        m[(0, 2 * n - 1)] = -s;
        m[(2 * n - 1, 0)] = s.clone();
        m[(2 * n - 1, 2 * n - 1)] = c.clone();
        m
    }

    /// `N(x, y, z)` in (u, a, b, w) coordinates.
    pub fn heisenberg_factor(&self) -> MatrixQ {
        let n = self.n;
        let m = n - 1;
        let mut h = MatrixQ::identity(2 * n);
        for k in 0..m {
            h[(0, 1 + k)] = self.x[k].clone();
            h[(0, 1 + m + k)] = self.y[k].clone();
            h[(1 + k, 2 * n - 1)] = -&self.y[k];
            h[(1 + m + k, 2 * n - 1)] = self.x[k].clone();
        }
        h[(0, 2 * n - 1)] = self.z.clone();
        h
    }

    /// `diag(1, h, 1)` in (u, a, b, w) coordinates.
    pub fn levi_factor(&self) -> MatrixQ {
        to_uabw(
            self.n,
            &Matrix::block_diag(&[MatrixQ::identity(2), self.levi.matrix.clone()]),
        )
    }

    /// `R · (L · N)` in (u, a, b, w) coordinates.
    pub fn uabw_matrix(&self) -> MatrixQ {
        &self.rotation_factor() * &(&self.levi_factor() * &self.heisenberg_factor())
    }

    pub fn block_matrix(&self) -> MatrixQ {
        to_block(self.n, &self.uabw_matrix())
    }

    /// The second factor's top row is `(1, x, y, z)` and `L⁻¹` applied to its last column gives
    /// `(z, −y, x, 1)`.
    pub fn second_factor_pattern_holds(&self) -> bool {
        let n = self.n;
        let second = &self.levi_factor() * &self.heisenberg_factor();
        let mut top = vec![ExactScalar::one()];
        top.extend(self.x.iter().cloned());
        top.extend(self.y.iter().cloned());
        top.push(self.z.clone());
        let levi_inv = to_uabw(
            n,
            &Matrix::block_diag(&[MatrixQ::identity(2), self.levi.inverse().matrix]),
        );
        let last = levi_inv.mul_vec(&second.column(2 * n - 1)).expect("square");
        let mut expected = vec![self.z.clone()];
        expected.extend(self.y.iter().map(|v| -v));
        expected.extend(self.x.iter().cloned());
        expected.push(ExactScalar::one());
        second.row(0) == top.as_slice() && last == expected
    }
}

pub fn maximal_parabolic_element(
    n: usize,
    rotation: (ExactScalar, ExactScalar),
    levi: &GroupElement,
    x: &[ExactScalar],
    y: &[ExactScalar],
    z: ExactScalar,
) -> Result<GroupElement> {
    Ok(GroupElement {
        n,
        matrix: maximal_parabolic_form(n, rotation, levi, x, y, z)?.block_matrix(),
    })
}

pub fn maximal_parabolic_form(
    n: usize,
    rotation: (ExactScalar, ExactScalar),
    levi: &GroupElement,
    x: &[ExactScalar],
    y: &[ExactScalar],
    z: ExactScalar,
) -> Result<MaximalParabolicForm> {
    let (c, s) = &rotation;
    if c * c + s * s != ExactScalar::one() {
        return Err(Error::NotOnCircle(render_rational(c), render_rational(s)));
    }
    if n == 0 || levi.n != n - 1 || x.len() != n - 1 || y.len() != n - 1 {
        return Err(Error::ShapeMismatch(format!(
            "n = {n}, levi rank {}, |x| = {}, |y| = {}",
            levi.n,
            x.len(),
            y.len()
        )));
    }
    if levi.n > 0 && !SymplecticForm::new(levi.n).is_symplectic(&levi.matrix) {
        return Err(Error::NotSymplectic);
    }
    Ok(MaximalParabolicForm {
        n,
        rotation,
        levi: levi.clone(),
        x: x.to_vec(),
        y: y.to_vec(),
        z,
    })
}

/// In (u, a, b, w) coordinates the parabolic fixes the line through `e_u` and the hyperplane `w = 0`:
/// the first column is a multiple of `e_u` and the last row a multiple of `e_w`.
pub fn in_parabolic_block_pattern(n: usize, g: &MatrixQ) -> bool {
    let p = to_uabw(n, g);
    let d = 2 * n;
    (1..d).all(|i| p[(i, 0)].is_zero()) && (0..d - 1).all(|j| p[(d - 1, j)].is_zero())
}

/// Random parameters with small rational entries. `sign_rotation` restricts the rotation to `±1`.
pub fn random_maximal_parabolic(n: usize, seed: u64, sign_rotation: bool) -> MaximalParabolicForm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = |rng: &mut ChaCha8Rng| frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    let rotation = if sign_rotation {
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        (frac(c, 1), ExactScalar::zero())
    } else {
        let (c, s) = pythagorean_point(rng.gen_range(1..=6), rng.gen_range(-6..=6));
        if rng.gen_bool(0.5) {
            (-c, s)
        } else {
            (c, s)
        }
    };
    let x: Vec<_> = (0..n - 1).map(|_| small(&mut rng)).collect();
    let y: Vec<_> = (0..n - 1).map(|_| small(&mut rng)).collect();
    let z = small(&mut rng);
    let levi = random_symplectic(n - 1, rng.gen(), rng.gen_range(0..=4));
    maximal_parabolic_form(n, rotation, &levi, &x, &y, z).expect("valid random parameters")
}
