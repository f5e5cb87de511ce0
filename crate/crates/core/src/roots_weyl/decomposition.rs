use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{
    express_in_basis, imaginary_integer_candidates, q, simultaneous_eigenspaces, ExactScalar,
    Field, GaussianScalar, MatrixQ, MatrixQi, Subspace,
};
use crate::symplectic_lie::{Functional, SpAlgebra, SymplecticForm};

/// The compact torus `A = S¹ × ⋯ × S¹` inside the stabilizer: `H_j = J_1` in slot `j`, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusData {
    pub n: usize,
    pub r: usize,
    pub generators: Vec<MatrixQ>,
}

impl TorusData {
    pub fn new(n: usize, r: usize) -> Self {
        assert!(r <= n, "torus rank exceeds n");
        let generators = (0..r)
            .map(|j| {
                let mut h = MatrixQ::zeros(2 * n, 2 * n);
                h[(2 * j, 2 * j + 1)] = -ExactScalar::one();
                h[(2 * j + 1, 2 * j)] = ExactScalar::one();
                h
            })
            .collect();
        Self { n, r, generators }
    }

    pub fn for_functional(f: &Functional) -> Result<Self> {
        Ok(Self::new(f.n, f.special_lambdas()?.len()))
    }

    pub fn is_valid(&self) -> bool {
        let form = SymplecticForm::new(self.n);
        self.generators.iter().all(|h| form.preserves(h))
            && self.generators.iter().enumerate().all(|(a, h)| {
                self.generators[a + 1..]
                    .iter()
                    .all(|k| h.commutator(k).is_zero())
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Compactness {
    Compact,
    Noncompact,
    Unclassified,
}

/// `(H_α, X_α, X_{−α})` with `α(H_α) = 2`, `[X_α, X_{−α}] = H_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlTriple {
    pub h: MatrixQi,
    pub x_pos: MatrixQi,
    pub x_neg: MatrixQi,
}

impl SlTriple {
    pub fn relations_hold(&self) -> bool {
        let two = GaussianScalar::real(q(2));
        self.h.commutator(&self.x_pos) == self.x_pos.scale(&two)
            && self.h.commutator(&self.x_neg) == self.x_neg.scale(&-two)
            && self.x_pos.commutator(&self.x_neg) == self.h
    }
}

/// A root `α` with its root space `𝔤^α ⊂ 𝔤_ℂ`.
#[derive(Debug, Clone)]
pub struct RootDatum {
    /// `α(H_j)` for each torus generator.
    pub weight: Vec<GaussianScalar>,
    /// Root space in algebra coordinates.
    pub space: Subspace<GaussianScalar>,
    pub space_basis: Vec<MatrixQi>,
    pub compactness: Compactness,
    pub triple: Option<SlTriple>,
}

impl RootDatum {
    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }

    /// The weight divided by `i`: weights are purely imaginary on the compact torus.
    pub fn coordinates(&self) -> Vec<ExactScalar> {
        self.weight.iter().map(|w| w.im.clone()).collect()
    }
}

/// Half-sums of positive compact and noncompact roots, in `i`-stripped coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSums {
    pub rho_c: Vec<ExactScalar>,
    pub rho_n: Vec<ExactScalar>,
    /// `ρ_n − ρ_c`.
    pub d_delta_f: Vec<ExactScalar>,
}

#[derive(Debug, Clone)]
pub struct RootSystemReport {
    pub n: usize,
    pub torus: TorusData,
    /// `𝔤⁰`, the joint kernel of the torus action, in algebra coordinates.
    pub zero_space: Subspace<GaussianScalar>,
    pub roots: Vec<RootDatum>,
    /// `positive[k]` tells whether `roots[k]` is in the chosen positive system.
    pub positive: Option<Vec<bool>>,
    pub half_sums: Option<HalfSums>,
}

impl RootSystemReport {
    pub fn zero_space_dim(&self) -> usize {
        self.zero_space.dim()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(RootDatum::multiplicity).sum()
    }

    pub fn find(&self, coords: &[ExactScalar]) -> Option<&RootDatum> {
        self.roots.iter().find(|r| r.coordinates() == coords)
    }

    pub fn positive_roots(&self) -> Result<Vec<&RootDatum>> {
        let pos = self.positive.as_ref().ok_or(Error::PositiveSystemUnset)?;
        Ok(self
            .roots
            .iter()
            .zip(pos)
            .filter(|(_, p)| **p)
            .map(|(r, _)| r)
            .collect())
    }

    pub fn count_positive(&self, c: Compactness) -> Result<usize> {
        Ok(self
            .positive_roots()?
            .iter()
            .filter(|r| r.compactness == c)
            .count())
    }
}

fn lex_cmp(a: &[ExactScalar], b: &[ExactScalar]) -> Ordering {
    a.iter().cmp(b.iter())
}

/// Joint eigenspaces of `ad(H_j)` on `𝔤_ℂ`. Roots are listed in decreasing lexicographic order
/// of their coordinates; nothing is classified and no positive system is chosen.
pub fn weight_decomposition(alg: &SpAlgebra, torus: &TorusData) -> Result<RootSystemReport> {
    if !torus.is_valid() || torus.n != alg.n {
        return Err(Error::NonCommuting(0, 0));
    }
    let ops: Vec<MatrixQi> = torus
        .generators
        .iter()
        .map(|h| alg.ad_matrix(h).map(|m| m.complexify()))
        .collect::<Result<_>>()?;
    let candidates = vec![imaginary_integer_candidates(2); ops.len()];
    let spaces = simultaneous_eigenspaces(alg.dim(), &ops, &candidates)?;
    let mut zero_space = Subspace::zero(alg.dim());
    let mut roots = Vec::new();
    for s in spaces {
        let space = Subspace::span(alg.dim(), &s.basis);
        if s.is_zero_weight() {
            zero_space = space;
            continue;
        }
        let space_basis = space.basis().iter().map(|c| alg.element(c)).collect();
        roots.push(RootDatum {
            weight: s.weight,
            space,
            space_basis,
            compactness: Compactness::Unclassified,
            triple: None,
        });
    }
    roots.sort_by(|a, b| lex_cmp(&b.coordinates(), &a.coordinates()));
    Ok(RootSystemReport {
        n: alg.n,
        torus: torus.clone(),
        zero_space,
        roots,
        positive: None,
        half_sums: None,
    })
}

fn sylvester_negative_definite(k: &MatrixQ) -> bool {
    (1..=k.rows()).all(|m| {
        let minor = MatrixQ::from_fn(m, m, |i, j| k[(i, j)].clone());
        let d = minor.determinant();
        if m % 2 == 1 {
            d < ExactScalar::zero()
        } else {
            d > ExactScalar::zero()
        }
    })
}

/// Builds the normalized triple for a multiplicity-one root and classifies it by the sign of the
/// trace form `tr(XY)` on the real form `(ℂH_α ⊕ ℂX_α ⊕ ℂX_{−α}) ∩ 𝔤`: negative definite means
/// compact (`su(2)`), otherwise noncompact (`sl(2, ℝ)`).
///
/// `X_{−α}` is taken proportional to the conjugate of `X_α`, which lies in `𝔤^{−α}` because the
/// torus is real and its weights are imaginary.
pub fn classify_root(alg: &SpAlgebra, torus: &TorusData, root: &RootDatum) -> Result<RootDatum> {
    if root.multiplicity() != 1 {
        return Err(Error::MultiplicityTooHigh(root.multiplicity()));
    }
    let x = root.space_basis[0].clone();
    let x_bar = x.conj();
    let h = x.commutator(&x_bar);
    let h_coords = alg.coords(&h)?;
    let torus_coords: Vec<Vec<GaussianScalar>> = torus
        .generators
        .iter()
        .map(|g| alg.coords(&g.complexify()))
        .collect::<Result<_>>()?;
    let t = express_in_basis(&torus_coords, &h_coords)
        .ok_or_else(|| Error::BadTriple("[X_α, X̄_α] is not in the torus".into()))?;
    let alpha_h = root
        .weight
        .iter()
        .zip(&t)
        .fold(GaussianScalar::zero(), |acc, (w, c)| acc + &(w.clone() * c));
    let scale = Field::inverse(&alpha_h)
        .map(|inv| GaussianScalar::real(q(2)) * inv)
        .ok_or_else(|| Error::BadTriple("α([X_α, X̄_α]) = 0".into()))?;
    let triple = SlTriple {
        h: h.scale(&scale),
        x_pos: x,
        x_neg: x_bar.scale(&scale),
    };
    if !triple.relations_hold() {
        return Err(Error::BadTriple("triple relations fail".into()));
    }

    let span = Subspace::span(
        alg.dim(),
        &[
            alg.coords(&triple.h)?,
            alg.coords(&triple.x_pos)?,
            alg.coords(&triple.x_neg)?,
        ],
    );
    let real = span.real_points();
    if real.dim() != 3 {
        return Err(Error::BadTriple(format!(
            "real form has dimension {}",
            real.dim()
        )));
    }
    let mats: Vec<MatrixQ> = real.basis().iter().map(|c| alg.element(c)).collect();
    let k = MatrixQ::from_fn(3, 3, |a, b| {
        mats[a].trace_product(&mats[b]).expect("square")
    });
    let compactness = if sylvester_negative_definite(&k) {
        Compactness::Compact
    } else {
        Compactness::Noncompact
    };
    Ok(RootDatum {
        compactness,
        triple: Some(triple),
        ..root.clone()
    })
}

/// Classifies every multiplicity-one root; higher multiplicities stay `Unclassified`.
pub fn classify_all(alg: &SpAlgebra, report: &RootSystemReport) -> Result<RootSystemReport> {
    let roots = report
        .roots
        .iter()
        .map(|r| match classify_root(alg, &report.torus, r) {
            Ok(c) => Ok(c),
            Err(Error::MultiplicityTooHigh(_)) => Ok(r.clone()),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    Ok(RootSystemReport {
        roots,
        ..report.clone()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PositiveRule {
    /// `α > 0` iff the first nonzero coordinate of `α/i` is positive.
    #[default]
    Lexicographic,
}

pub fn choose_positive_system(report: &RootSystemReport, rule: PositiveRule) -> RootSystemReport {
    let positive = match rule {
        PositiveRule::Lexicographic => report
            .roots
            .iter()
            .map(|r| {
                r.coordinates()
                    .iter()
                    .find(|c| !c.is_zero())
                    .is_some_and(|c| *c > ExactScalar::zero())
            })
            .collect(),
    };
    RootSystemReport {
        positive: Some(positive),
        ..report.clone()
    }
}

pub fn half_sums(report: &RootSystemReport) -> Result<HalfSums> {
    let positive = report.positive_roots()?;
    let unclassified = positive
        .iter()
        .filter(|r| r.compactness == Compactness::Unclassified)
        .count();
    if unclassified > 0 {
        return Err(Error::UnclassifiedRoots(unclassified));
    }
    let r = report.torus.r;
    let half = |c: Compactness| -> Vec<ExactScalar> {
        let mut sum = vec![ExactScalar::zero(); r];
        for root in positive.iter().filter(|x| x.compactness == c) {
            for (s, v) in sum.iter_mut().zip(root.coordinates()) {
                *s = &*s + &v;
            }
        }
        sum.into_iter().map(|x| x / q(2)).collect()
    };
    let rho_c = half(Compactness::Compact);
    let rho_n = half(Compactness::Noncompact);
    let d_delta_f = rho_n.iter().zip(&rho_c).map(|(a, b)| a - b).collect();
    Ok(HalfSums {
        rho_c,
        rho_n,
        d_delta_f,
    })
}

/// Decomposition, classification, lexicographic positive system and (when every positive root
/// is classified) the half-sums for a special functional.
pub fn analyze(alg: &SpAlgebra, f: &Functional) -> Result<RootSystemReport> {
    let torus = TorusData::for_functional(f)?;
    let report = weight_decomposition(alg, &torus)?;
    let report = classify_all(alg, &report)?;
    let mut report = choose_positive_system(&report, PositiveRule::Lexicographic);
    report.half_sums = half_sums(&report).ok();
    Ok(report)
}
