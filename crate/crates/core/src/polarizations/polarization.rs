use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{ExactScalar, GaussianScalar, MatrixQi, Subspace};
use crate::orbits::stabilizer_algebra;
use crate::roots_weyl::{Compactness, RootSystemReport};
use crate::symplectic_lie::{random_stabilizer_element, Functional, SpAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum PolarizationMode {
    /// Every positive root must be classified.
    #[default]
    Strict,
    /// Positive weight spaces of multiplicity above one go into `𝔭` whole.
    Wholesale,
}

/// `𝔭 = (𝔤_F)_ℂ ⊕ Σ_{α ∈ Δ⁺_n} 𝔤^α ⊕ Σ_{α ∈ Δ⁺_c} 𝔤^{−α}`, plus whole positive weight spaces
/// of higher multiplicity in wholesale mode.
#[derive(Debug, Clone)]
pub struct PolarizationSubalgebra {
    pub functional: Functional,
    pub mode: PolarizationMode,
    /// `𝔭` in algebra coordinates.
    pub space: Subspace<GaussianScalar>,
    pub basis: Vec<MatrixQi>,
    /// `(𝔤_F)_ℂ` in algebra coordinates.
    pub stabilizer: Subspace<GaussianScalar>,
    pub source: RootSystemReport,
}

impl PolarizationSubalgebra {
    pub fn complex_dim(&self) -> usize {
        self.space.dim()
    }

    pub fn plus_conjugate(&self) -> Subspace<GaussianScalar> {
        self.space.sum(&self.space.conj())
    }

    pub fn meet_conjugate(&self) -> Subspace<GaussianScalar> {
        self.space.intersection(&self.space.conj())
    }
}

pub fn build_polarization(
    alg: &SpAlgebra,
    f: &Functional,
    report: &RootSystemReport,
    mode: PolarizationMode,
) -> Result<PolarizationSubalgebra> {
    let stabilizer = stabilizer_algebra(alg, f).coords.complexify();
    let mut space = stabilizer.clone();
    let mut unclassified = 0;
    for root in report.positive_roots()? {
        match root.compactness {
            Compactness::Noncompact => space = space.sum(&root.space),
            Compactness::Compact => {
                let neg: Vec<ExactScalar> = root.coordinates().iter().map(|c| -c).collect();
                let opposite = report
                    .find(&neg)
                    .ok_or_else(|| Error::ShapeMismatch("root system is not symmetric".into()))?;
                space = space.sum(&opposite.space);
            }
            Compactness::Unclassified
                if mode == PolarizationMode::Wholesale && root.multiplicity() > 1 =>
            {
                space = space.sum(&root.space)
            }
            Compactness::Unclassified => unclassified += 1,
        }
    }
    if unclassified > 0 {
        return Err(Error::UnclassifiedRoots(unclassified));
    }
    let basis = space.basis().iter().map(|c| alg.element(c)).collect();
    Ok(PolarizationSubalgebra {
        functional: f.clone(),
        mode,
        space,
        basis,
        stabilizer,
        source: report.clone(),
    })
}

/// Outcomes of the algebraic polarization conditions for a candidate `𝔭`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolarizationVerdicts {
    pub subalgebra: bool,
    pub contains_stabilizer: bool,
    pub ad_invariant_infinitesimal: bool,
    pub ad_invariant_group: bool,
    pub group_samples: usize,
    pub conjugation_stable: bool,
    /// `dim_ℝ (𝔭 + 𝔭̄) ∩ 𝔤`, equal to `dim_ℂ (𝔭 + 𝔭̄)` when the sum is a complexification.
    pub real_form_dim: usize,
    pub isotropic: bool,
    pub closedness: &'static str,
}

impl PolarizationVerdicts {
    pub fn all_pass(&self) -> bool {
        self.subalgebra
            && self.contains_stabilizer
            && self.ad_invariant_infinitesimal
            && self.ad_invariant_group
            && self.conjugation_stable
            && self.isotropic
    }
}

pub const CLOSEDNESS_NOTE: &str =
    "not machine-checked: the subgroups involved are algebraic, hence closed";

/// Checks `[𝔭, 𝔭] ⊆ 𝔭`, `(𝔤_F)_ℂ ⊆ 𝔭`, invariance under `ad(𝔤_F)` and under `Ad` of `samples`
/// random stabilizer elements, conjugation stability of `𝔭 + 𝔭̄`, and `⟨F, [𝔭, 𝔭]⟩ = 0`.
pub fn verify_polarization(
    alg: &SpAlgebra,
    f: &Functional,
    p: &PolarizationSubalgebra,
    samples: usize,
    seed: u64,
) -> Result<PolarizationVerdicts> {
    let member = p.space.membership();
    let coords = p.space.basis();
    let k = coords.len();

    let brackets: Vec<(usize, usize, Vec<GaussianScalar>)> = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, alg.bracket_coords_c(&coords[a], &coords[b])))
        .collect();
    let subalgebra = brackets.iter().all(|(_, _, c)| member.contains(c));

    let contains_stabilizer = p.space.contains_space(&p.stabilizer);

    let ad_invariant_infinitesimal = p.stabilizer.basis().iter().all(|s| {
        coords
            .iter()
            .all(|c| member.contains(&alg.bracket_coords_c(s, c)))
    });

    let mut ad_invariant_group = true;
    for i in 0..samples {
        let g = random_stabilizer_element(f, seed.wrapping_add(i as u64))?;
        let gc = g.matrix.complexify();
        let gi = g.inverse().matrix.complexify();
        for x in &p.basis {
            let img = &(&gc * x) * &gi;
            if !member.contains(&alg.coords(&img)?) {
                ad_invariant_group = false;
            }
        }
    }

    let sum = p.plus_conjugate();
    let real_form_dim = sum.real_points().dim();
    let conjugation_stable = sum.conj() == sum && real_form_dim == sum.dim();

    let fc = f.matrix.complexify();
    let mut isotropic = true;
    for (a, b, _) in &brackets {
        let c = p.basis[*a].commutator(&p.basis[*b]);
        if !fc.trace_product(&c)?.is_zero() {
            isotropic = false;
        }
    }

    Ok(PolarizationVerdicts {
        subalgebra,
        contains_stabilizer,
        ad_invariant_infinitesimal,
        ad_invariant_group,
        group_samples: samples,
        conjugation_stable,
        real_form_dim,
        isotropic,
        closedness: CLOSEDNESS_NOTE,
    })
}
