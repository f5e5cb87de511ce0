use serde::Serialize;

use crate::error::Result;
use crate::exact_linalg::{ExactScalar, GaussianScalar, Matrix, MatrixQ, MatrixQi, Subspace};
use crate::orbits::stabilizer_algebra;
use crate::roots_weyl::RootSystemReport;
use crate::symplectic_lie::{build_sp_algebra, Functional, SpAlgebra};

/// `P = MAN` at the Lie algebra level: the torus `𝔞`, the `sp(2(n − r))` block `𝔪` and the
/// nilradical `𝔫` spanned by the positive weight spaces.
#[derive(Debug, Clone)]
pub struct LanglandsPieces {
    pub n: usize,
    pub r: usize,
    pub a_generators: Vec<MatrixQ>,
    pub m_basis: Vec<MatrixQ>,
    /// `𝔫` in algebra coordinates.
    pub n_space: Subspace<GaussianScalar>,
    pub n_basis: Vec<MatrixQi>,
    /// `𝔪 ⊕ 𝔞 ⊕ 𝔫` in complex algebra coordinates.
    pub p_space: Subspace<GaussianScalar>,
    pub p_basis: Vec<MatrixQi>,
    pub verdicts: LanglandsVerdicts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LanglandsVerdicts {
    pub dims: [usize; 3],
    pub direct_sum: bool,
    pub centralizer_is_stabilizer: bool,
    pub levi_is_centralizer: bool,
    pub normalizes_nilradical: bool,
    pub nilradical_closed: bool,
    /// Dimensions of `𝔫 ⊇ [𝔫, 𝔫] ⊇ [𝔫, [𝔫, 𝔫]] ⊇ …` down to the first zero.
    pub lower_central_series: Vec<usize>,
}

impl LanglandsVerdicts {
    pub fn nilpotent(&self) -> bool {
        self.lower_central_series.last() == Some(&0)
    }

    pub fn all_pass(&self) -> bool {
        self.direct_sum
            && self.centralizer_is_stabilizer
            && self.levi_is_centralizer
            && self.normalizes_nilradical
            && self.nilradical_closed
            && self.nilpotent()
    }
}

/// `sp(2k)` placed in the trailing `2k × 2k` block of `sp(2n)`.
pub fn embed_trailing_block(n: usize, k: usize) -> Vec<MatrixQ> {
    if k == 0 {
        return Vec::new();
    }
    let off = 2 * (n - k);
    build_sp_algebra(k)
        .basis
        .iter()
        .map(|b| {
            Matrix::from_fn(2 * n, 2 * n, |i, j| {
                if i >= off && j >= off {
                    b[(i - off, j - off)].clone()
                } else {
                    ExactScalar::default()
                }
            })
        })
        .collect()
}

/// `𝒵(𝔞) = {X : [X, H_j] = 0 for all j}` in algebra coordinates.
pub fn torus_centralizer(alg: &SpAlgebra, torus: &[MatrixQ]) -> Result<Subspace<ExactScalar>> {
    let mut rows = Vec::new();
    for h in torus {
        rows.extend(alg.ad_matrix(h)?.to_rows());
    }
    if rows.is_empty() {
        return Ok(Subspace::whole(alg.dim()));
    }
    Ok(Subspace::span(
        alg.dim(),
        &Matrix::from_rows(rows)?.nullspace(),
    ))
}

fn bracket_space(
    alg: &SpAlgebra,
    a: &Subspace<GaussianScalar>,
    b: &Subspace<GaussianScalar>,
) -> Subspace<GaussianScalar> {
    let v: Vec<Vec<GaussianScalar>> = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| (x, y)))
        .map(|(x, y)| alg.bracket_coords_c(x, y))
        .collect();
    Subspace::span(alg.dim(), &v)
}

pub fn langlands_pieces(
    alg: &SpAlgebra,
    f: &Functional,
    report: &RootSystemReport,
) -> Result<LanglandsPieces> {
    let (n, r) = (report.n, report.torus.r);
    let a_generators = report.torus.generators.clone();
    let m_basis = embed_trailing_block(n, n - r);
    let coords = |ms: &[MatrixQ]| ms.iter().map(|m| alg.coords(m)).collect::<Result<Vec<_>>>();
    let a_space = Subspace::span(alg.dim(), &coords(&a_generators)?);
    let m_space = Subspace::span(alg.dim(), &coords(&m_basis)?);

    let mut n_space = Subspace::zero(alg.dim());
    for root in report.positive_roots()? {
        n_space = n_space.sum(&root.space);
    }
    let levi_c = a_space.sum(&m_space).complexify();
    let p_space = levi_c.sum(&n_space);
    let dims = [m_space.dim(), a_space.dim(), n_space.dim()];
    let direct_sum = dims.iter().sum::<usize>() == p_space.dim();

    let centralizer = torus_centralizer(alg, &a_generators)?;
    let centralizer_is_stabilizer = centralizer.same_span(&stabilizer_algebra(alg, f).coords);
    let levi_is_centralizer = centralizer.same_span(&a_space.sum(&m_space));

    let normalizes_nilradical = n_space.contains_space(&bracket_space(alg, &levi_c, &n_space));
    let derived = bracket_space(alg, &n_space, &n_space);
    let nilradical_closed = n_space.contains_space(&derived);

    let mut lower_central_series = vec![n_space.dim()];
    let mut term = n_space.clone();
    while term.dim() > 0 {
        let next = bracket_space(alg, &n_space, &term);
        if next.dim() == term.dim() {
            lower_central_series.push(next.dim());
            break;
        }
        lower_central_series.push(next.dim());
        term = next;
    }

    let n_basis = n_space.basis().iter().map(|c| alg.element(c)).collect();
    let p_basis = p_space.basis().iter().map(|c| alg.element(c)).collect();
    Ok(LanglandsPieces {
        n,
        r,
        a_generators,
        m_basis,
        n_space,
        n_basis,
        p_space,
        p_basis,
        verdicts: LanglandsVerdicts {
            dims,
            direct_sum,
            centralizer_is_stabilizer,
            levi_is_centralizer,
            normalizes_nilradical,
            nilradical_closed,
            lower_central_series,
        },
    })
}
