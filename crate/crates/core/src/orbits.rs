//! Coadjoint orbits: stabilizers, the Kirillov form, tangent spaces and the flat-action identity.

use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{express_in_basis, q, ExactScalar, Matrix, MatrixQ, Subspace};
use crate::symplectic_lie::{coadjoint, random_symplectic, Functional, GroupElement, SpAlgebra};

/// `𝔤_F = {X ∈ sp(2n) : [X, F] = 0}` with an echelon-normalized basis.
#[derive(Debug, Clone)]
pub struct StabilizerAlgebra {
    pub functional: Functional,
    /// Coordinates of the basis in the algebra basis.
    pub coords: Subspace<ExactScalar>,
    pub basis: Vec<MatrixQ>,
}

impl StabilizerAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `r + (n − r)(2(n − r) + 1)`: the dimension of `ℝ^r ⊕ sp(2(n − r))`.
pub fn expected_stabilizer_dim(n: usize, r: usize) -> usize {
    let m = n - r;
    r + m * (2 * m + 1)
}

/// Nullspace of `X ↦ XF − FX` written in the algebra basis.
pub fn stabilizer_algebra(alg: &SpAlgebra, f: &Functional) -> StabilizerAlgebra {
    let m = alg.matrix_size();
    let cols: Vec<Vec<ExactScalar>> = alg
        .basis
        .iter()
        .map(|b| b.commutator(&f.matrix).into_data())
        .collect();
    let map = Matrix::from_columns(m * m, &cols).expect("square matrices");
    let coords = Subspace::span(alg.dim(), &map.nullspace());
    let basis = coords.basis().iter().map(|c| alg.element(c)).collect();
    StabilizerAlgebra {
        functional: f.clone(),
        coords,
        basis,
    }
}

/// `B_F(X, Y) = ⟨F, [X, Y]⟩ = tr(F·(XY − YX))`.
pub fn kirillov_form(f_at: &MatrixQ, x: &MatrixQ, y: &MatrixQ) -> Result<ExactScalar> {
    f_at.trace_product(&x.try_commutator(y)?)
}

/// Gram matrix `B_F(basis_a, basis_b)` over the whole algebra basis, from the structure constants.
pub fn kirillov_gram(alg: &SpAlgebra, f_at: &MatrixQ) -> Result<MatrixQ> {
    let pairing: Vec<ExactScalar> = alg
        .basis
        .iter()
        .map(|b| f_at.trace_product(b))
        .collect::<Result<_>>()?;
    let d = alg.dim();
    Ok(MatrixQ::from_fn(d, d, |a, b| {
        alg.structure_constants[a][b]
            .iter()
            .zip(&pairing)
            .filter(|(c, p)| !c.is_zero() && !p.is_zero())
            .fold(ExactScalar::zero(), |acc, (c, p)| acc + &(c * p))
    }))
}

/// `{X : B_F(X, Y) = 0 ∀Y}` in algebra coordinates.
pub fn kernel_of_kirillov_coords(alg: &SpAlgebra, f: &Functional) -> Result<Subspace<ExactScalar>> {
    let gram = kirillov_gram(alg, &f.matrix)?;
    Ok(Subspace::span(alg.dim(), &gram.nullspace()))
}

/// Echelon-normalized basis of the kernel of the Kirillov form at `F`.
pub fn kernel_of_kirillov(alg: &SpAlgebra, f: &Functional) -> Result<Vec<MatrixQ>> {
    let k = kernel_of_kirillov_coords(alg, f)?;
    Ok(k.basis().iter().map(|c| alg.element(c)).collect())
}

/// `dim 𝔤 − dim 𝔤_F`.
pub fn orbit_dimension(alg: &SpAlgebra, f: &Functional) -> usize {
    alg.dim() - stabilizer_algebra(alg, f).dim()
}

/// A point `g F g⁻¹` of the orbit through `base`, with the witness `g`.
#[derive(Debug, Clone)]
pub struct OrbitPoint {
    pub base: Functional,
    pub point: MatrixQ,
    pub witness: GroupElement,
}

impl OrbitPoint {
    pub fn as_functional(&self) -> Functional {
        Functional {
            n: self.base.n,
            matrix: self.point.clone(),
            lambdas: None,
        }
    }

    /// `point = witness · base · witness⁻¹`.
    pub fn is_consistent(&self) -> bool {
        coadjoint(&self.witness, &self.base).matrix == self.point
    }
}

pub fn sample_orbit_point(f: &Functional, seed: u64, word_length: usize) -> OrbitPoint {
    let g = random_symplectic(f.n, seed, word_length);
    OrbitPoint {
        base: f.clone(),
        point: coadjoint(&g, f).matrix,
        witness: g,
    }
}

/// The Kirillov form restricted to the orbit tangent space at a point `P`.
///
/// Tangent vectors are `[X, P]`; `generators` is a set of basis elements `X_a` whose tangent
/// vectors form a basis, and `gram[a][b] = ⟨P, [X_a, X_b]⟩`.
#[derive(Debug, Clone)]
pub struct KirillovFormAtPoint {
    pub point: MatrixQ,
    pub generators: Vec<MatrixQ>,
    pub tangent_basis: Vec<MatrixQ>,
    pub gram: MatrixQ,
}

impl KirillovFormAtPoint {
    pub fn dim(&self) -> usize {
        self.tangent_basis.len()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.gram.transpose() == -&self.gram
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Coordinates of a tangent vector in `tangent_basis`.
    pub fn tangent_coords(&self, v: &MatrixQ) -> Option<Vec<ExactScalar>> {
        let basis: Vec<Vec<ExactScalar>> = self
            .tangent_basis
            .iter()
            .map(|t| t.data().to_vec())
            .collect();
        express_in_basis(&basis, v.data())
    }

    /// `ω_P(u, v)` for tangent vectors given as matrices.
    pub fn evaluate(&self, u: &MatrixQ, v: &MatrixQ) -> Option<ExactScalar> {
        let a = self.tangent_coords(u)?;
        let b = self.tangent_coords(v)?;
        let gb = self.gram.mul_vec(&b).ok()?;
        Some(
            a.iter()
                .zip(&gb)
                .fold(ExactScalar::zero(), |acc, (x, y)| acc + &(x * y)),
        )
    }
}

pub fn kirillov_form_at(alg: &SpAlgebra, point: &MatrixQ) -> Result<KirillovFormAtPoint> {
    let m = alg.matrix_size();
    let tangents: Vec<MatrixQ> = alg
        .basis
        .iter()
        .map(|x| x.try_commutator(point))
        .collect::<Result<_>>()?;
    let cols: Vec<Vec<ExactScalar>> = tangents.iter().map(|t| t.data().to_vec()).collect();
    let (_, pivots) = Matrix::from_columns(m * m, &cols)?.rref();
    let generators: Vec<MatrixQ> = pivots.iter().map(|&k| alg.basis[k].clone()).collect();
    let tangent_basis: Vec<MatrixQ> = pivots.iter().map(|&k| tangents[k].clone()).collect();
    let k = generators.len();
    let mut gram = MatrixQ::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            gram[(a, b)] = kirillov_form(point, &generators[a], &generators[b])?;
        }
    }
    Ok(KirillovFormAtPoint {
        point: point.clone(),
        generators,
        tangent_basis,
        gram,
    })
}

/// Outcome of [`check_flatness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatnessVerdict {
    pub triples: usize,
    pub kernel_checks: usize,
}

/// Integer coordinates in `[-2, 2]`.
pub fn random_algebra_element(alg: &SpAlgebra, rng: &mut impl Rng) -> MatrixQ {
    let c: Vec<ExactScalar> = (0..alg.dim()).map(|_| q(rng.gen_range(-2..=2))).collect();
    alg.element(&c)
}

/// Checks `{f_X, f_Y}(P) = f_{[X,Y]}(P)` on sampled orbit points.
///
/// The left side is evaluated through the Kirillov form on the tangent space: `v_X = [X, P]`
/// and `v_Y = [Y, P]` are expanded in the tangent basis and paired with the Gram matrix, so the
/// check depends on the form being well defined on tangent vectors. The right side is
/// `tr(P·[X, Y])`. For every `Z` in the stabilizer of `P`, `⟨P, [Z, Y]⟩ = 0` is also checked.
pub fn check_flatness(
    alg: &SpAlgebra,
    f: &Functional,
    samples: usize,
    seed: u64,
) -> Result<FlatnessVerdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kernel_checks = 0;
    for s in 0..samples {
        let word = rng.gen_range(0..=3);
        let p = sample_orbit_point(f, rng.next_u64(), word);
        let form = kirillov_form_at(alg, &p.point)?;
        let x = random_algebra_element(alg, &mut rng);
        let y = if s % 10 == 0 {
            x.clone()
        } else {
            random_algebra_element(alg, &mut rng)
        };
        let vx = x.try_commutator(&p.point)?;
        let vy = y.try_commutator(&p.point)?;
        let lhs = form.evaluate(&vx, &vy).ok_or_else(|| {
            Error::FlatnessViolation(format!("sample {s}: [X, P] outside the tangent basis"))
        })?;
        let rhs = p.point.trace_product(&x.try_commutator(&y)?)?;
        if lhs != rhs {
            return Err(Error::FlatnessViolation(format!(
                "sample {s}: ω_P(v_X, v_Y) = {lhs} but f_[X,Y](P) = {rhs}"
            )));
        }

        let stab = stabilizer_algebra(alg, &p.as_functional());
        for z in &stab.basis {
            let y = random_algebra_element(alg, &mut rng);
            let value = kirillov_form(&p.point, z, &y)?;
            if !value.is_zero() {
                return Err(Error::FlatnessViolation(format!(
                    "sample {s}: [Z, P] = 0 but ⟨P, [Z, Y]⟩ = {value}"
                )));
            }
            kernel_checks += 1;
        }
    }
    Ok(FlatnessVerdict {
        triples: samples,
        kernel_checks,
    })
}
