use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{apply_j, mul_j_right, SymplecticForm};
use super::functional::Functional;
use crate::error::{Error, Result};
use crate::exact_linalg::{frac, q, render_rational, ExactScalar, Matrix, MatrixQ};

/// An element of `Sp(2n, ℝ)` with rational entries: `gJgᵀ = J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub n: usize,
    pub matrix: MatrixQ,
}

impl GroupElement {
    pub fn new(n: usize, matrix: MatrixQ) -> Result<Self> {
        if !SymplecticForm::new(n).is_symplectic(&matrix) {
            return Err(Error::NotSymplectic);
        }
        Ok(Self { n, matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            matrix: MatrixQ::identity(2 * n),
        }
    }

    /// `g⁻¹ = J⁻¹ gᵀ J = -J gᵀ J`.
    pub fn inverse(&self) -> Self {
        let jgt = apply_j(&self.matrix.transpose());
        Self {
            n: self.n,
            matrix: -&mul_j_right(&jgt),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ranks differ");
        Self {
            n: self.n,
            matrix: &self.matrix * &other.matrix,
        }
    }
}

/// `Ad(g)X = g X g⁻¹`.
pub fn adjoint(g: &GroupElement, x: &MatrixQ) -> MatrixQ {
    &(&g.matrix * x) * &g.inverse().matrix
}

/// `K(g)F = g F g⁻¹`; the special-form parameters are not carried over.
pub fn coadjoint(g: &GroupElement, f: &Functional) -> Functional {
    Functional {
        n: f.n,
        matrix: adjoint(g, &f.matrix),
        lambdas: None,
    }
}

/// The rational point `((m² − k²)/(m² + k²), 2mk/(m² + k²))` on the unit circle.
pub fn pythagorean_point(m: i64, k: i64) -> (ExactScalar, ExactScalar) {
    assert!(m != 0 || k != 0, "degenerate Pythagorean parameters");
    let h = m * m + k * k;
    (frac(m * m - k * k, h), frac(2 * m * k, h))
}

/// `[[c, -s], [s, c]]`, checking `c² + s² = 1`.
pub fn rotation_block(c: &ExactScalar, s: &ExactScalar) -> Result<MatrixQ> {
    if c * c + s * s != ExactScalar::one() {
        return Err(Error::NotOnCircle(render_rational(c), render_rational(s)));
    }
    Matrix::from_rows(vec![
        vec![c.clone(), -s.clone()],
        vec![s.clone(), c.clone()],
    ])
}

fn random_circle_point(rng: &mut impl Rng) -> (ExactScalar, ExactScalar) {
    let m: i64 = rng.gen_range(0..=4);
    let k: i64 = if m == 0 {
        rng.gen_range(1..=4)
    } else {
        rng.gen_range(0..=4)
    };
    let (c, s) = pythagorean_point(m, k);
    let c = if rng.gen_bool(0.5) { -c } else { c };
    let s = if rng.gen_bool(0.5) { -s } else { s };
    (c, s)
}

fn embed_slot(n: usize, slot: usize, block: &MatrixQ) -> MatrixQ {
    let mut g = MatrixQ::identity(2 * n);
    for i in 0..2 {
        for j in 0..2 {
            g[(2 * slot + i, 2 * slot + j)] = block[(i, j)].clone();
        }
    }
    g
}

fn random_generator(n: usize, rng: &mut impl Rng) -> MatrixQ {
    let params = [q(1), q(-1), q(2), q(-2), frac(1, 2), frac(-1, 2)];
    match rng.gen_range(0..4) {
        0 => {
            // Transvection I + t v vᵀ J.
            let m = 2 * n;
            let mut v: Vec<ExactScalar> = (0..m).map(|_| q(rng.gen_range(-1..=1))).collect();
            if v.iter().all(Zero::is_zero) {
                let i = rng.gen_range(0..m);
                v[i] = q(1);
            }
            let t = params.choose(rng).expect("nonempty").clone();
            let col = Matrix::new(m, 1, v.clone()).expect("column");
            let row = Matrix::new(1, m, v).expect("row");
            let vvt = &col * &row;
            &MatrixQ::identity(m) + &mul_j_right(&vvt).scale(&t)
        }
        1 => {
            let a = params.choose(rng).expect("nonempty").clone();
            let block =
                Matrix::from_rows(vec![vec![a.clone(), q(0)], vec![q(0), a.recip()]]).expect("2x2");
            embed_slot(n, rng.gen_range(0..n), &block)
        }
        2 => {
            let (c, s) = random_circle_point(rng);
            embed_slot(
                n,
                rng.gen_range(0..n),
                &rotation_block(&c, &s).expect("on circle"),
            )
        }
        _ => {
            let t = params.choose(rng).expect("nonempty").clone();
            let block = if rng.gen_bool(0.5) {
                Matrix::from_rows(vec![vec![q(1), t], vec![q(0), q(1)]])
            } else {
                Matrix::from_rows(vec![vec![q(1), q(0)], vec![t, q(1)]])
            }
            .expect("2x2");
            embed_slot(n, rng.gen_range(0..n), &block)
        }
    }
}

pub(crate) fn random_symplectic_with(
    n: usize,
    word_length: usize,
    rng: &mut impl Rng,
) -> GroupElement {
    let mut g = MatrixQ::identity(2 * n);
    if n == 0 {
        return GroupElement { n, matrix: g };
    }
    for _ in 0..word_length {
        g = &g * &random_generator(n, rng);
    }
    GroupElement { n, matrix: g }
}

/// Product of `word_length` random generators (transvections, slot scalings, rational
/// rotations, slot shears) with small rational parameters. Deterministic in `seed`.
pub fn random_symplectic(n: usize, seed: u64, word_length: usize) -> GroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(n, word_length, &mut rng)
}

/// `diag(R(c_1, s_1), …, R(c_r, s_r), h)` for a special functional with `r` blocks and
/// `h ∈ Sp(2(n − r))`.
pub fn stabilizer_element(
    f: &Functional,
    rotations: &[(ExactScalar, ExactScalar)],
    h: &GroupElement,
) -> Result<GroupElement> {
    let r = f.special_lambdas()?.len();
    if rotations.len() != r || h.n != f.n - r {
        return Err(Error::ShapeMismatch(format!(
            "{} rotations and rank-{} block for n = {}, r = {r}",
            rotations.len(),
            h.n,
            f.n
        )));
    }
    let mut blocks = rotations
        .iter()
        .map(|(c, s)| rotation_block(c, s))
        .collect::<Result<Vec<_>>>()?;
    if h.n > 0 {
        blocks.push(h.matrix.clone());
    }
    Ok(GroupElement {
        n: f.n,
        matrix: Matrix::block_diag(&blocks),
    })
}

/// Random element of the stabilizer of a special functional: rational rotations on the
/// `λ`-blocks and a random symplectic matrix on the trailing zero block.
pub fn random_stabilizer_element(f: &Functional, seed: u64) -> Result<GroupElement> {
    let r = f.special_lambdas()?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rotations: Vec<_> = (0..r).map(|_| random_circle_point(&mut rng)).collect();
    let len = rng.gen_range(0..=4);
    let h = random_symplectic_with(f.n - r, len, &mut rng);
    stabilizer_element(f, &rotations, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic_lie::functional::build_special_f;

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(random_symplectic(3, 11, 0), GroupElement::identity(3));
    }

    #[test]
    fn random_words_are_symplectic_and_seeded() {
        for n in 1..=3 {
            let form = SymplecticForm::new(n);
            for seed in 0..20 {
                let g = random_symplectic(n, seed, 6);
                assert!(form.is_symplectic(&g.matrix), "n={n} seed={seed}");
                assert_eq!(g, random_symplectic(n, seed, 6));
            }
        }
    }

    #[test]
    fn inverse_formula_matches_gauss_jordan() {
        let g = random_symplectic(2, 5, 5);
        assert_eq!(g.inverse().matrix, g.matrix.inverse().unwrap());
    }

    #[test]
    fn transvection_is_symplectic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let form = SymplecticForm::new(3);
        for _ in 0..30 {
            assert!(form.is_symplectic(&random_generator(3, &mut rng)));
        }
    }

    #[test]
    fn pythagorean_3_4_5() {
        let (c, s) = pythagorean_point(2, 1);
        assert_eq!((c.clone(), s.clone()), (frac(3, 5), frac(4, 5)));
        assert_eq!(&c * &c + &s * &s, q(1));
        assert!(matches!(
            rotation_block(&q(1), &q(1)),
            Err(Error::NotOnCircle(_, _))
        ));
    }

    #[test]
    fn adjoint_hand_value() {
        let g = GroupElement::new(
            1,
            Matrix::from_rows(vec![vec![q(2), q(0)], vec![q(0), frac(1, 2)]]).unwrap(),
        )
        .unwrap();
        let x = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        let expected = Matrix::from_rows(vec![vec![q(0), q(4)], vec![q(0), q(0)]]).unwrap();
        assert_eq!(adjoint(&g, &x), expected);
    }

    #[test]
    fn trivial_stabilizer_element_is_identity() {
        let f = build_special_f(3, &[q(1), q(2)]).unwrap();
        let one = (q(1), q(0));
        let g = stabilizer_element(&f, &[one.clone(), one], &GroupElement::identity(1)).unwrap();
        assert_eq!(g, GroupElement::identity(3));
    }

    #[test]
    fn stabilizer_element_commutes_with_f() {
        let f = build_special_f(2, &[q(3)]).unwrap();
        for seed in 0..25 {
            let g = random_stabilizer_element(&f, seed).unwrap();
            assert_eq!(&g.matrix * &f.matrix, &f.matrix * &g.matrix);
            assert!(SymplecticForm::new(2).is_symplectic(&g.matrix));
        }
    }

    #[test]
    fn non_symplectic_rejected() {
        assert_eq!(
            GroupElement::new(1, MatrixQ::identity(2).scale(&q(2))),
            Err(Error::NotSymplectic)
        );
    }
}
