use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{q, ExactScalar, MatrixQ};

use super::decomposition::RootSystemReport;

fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter()
        .zip(b)
        .fold(ExactScalar::zero(), |acc, (x, y)| acc + x * y)
}

/// `s_α(β) = β − 2(β,α)/(α,α) · α` for the standard inner product.
pub fn weyl_reflection(alpha: &[ExactScalar], beta: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    if alpha.len() != beta.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            alpha.len(),
            beta.len()
        )));
    }
    let aa = dot(alpha, alpha);
    if aa.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let c = q(2) * dot(beta, alpha) / aa;
    Ok(beta.iter().zip(alpha).map(|(b, a)| b - &(&c * a)).collect())
}

pub fn reflection_matrix(alpha: &[ExactScalar]) -> Result<MatrixQ> {
    let r = alpha.len();
    let cols: Vec<Vec<ExactScalar>> = (0..r)
        .map(|j| {
            let e: Vec<ExactScalar> = (0..r)
                .map(|i| {
                    if i == j {
                        ExactScalar::one()
                    } else {
                        ExactScalar::zero()
                    }
                })
                .collect();
            weyl_reflection(alpha, &e)
        })
        .collect::<Result<_>>()?;
    MatrixQ::from_columns(r, &cols)
}

/// A finite reflection group given by its elements as `r × r` rational matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<MatrixQ>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Every element is a signed permutation matrix.
    pub fn is_signed_permutation(&self) -> bool {
        self.elements.iter().all(|m| {
            (0..self.rank).all(|i| {
                let nz: Vec<&ExactScalar> = m.row(i).iter().filter(|x| !x.is_zero()).collect();
                nz.len() == 1 && (nz[0].is_one() || (-nz[0]).is_one())
            })
        })
    }

    pub fn permutes(&self, roots: &[Vec<ExactScalar>]) -> bool {
        let set: BTreeSet<&Vec<ExactScalar>> = roots.iter().collect();
        self.elements.iter().all(|w| {
            roots
                .iter()
                .all(|r| w.mul_vec(r).map(|img| set.contains(&img)).unwrap_or(false))
        })
    }

    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&[ExactScalar]> = self.elements.iter().map(MatrixQ::data).collect();
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| set.contains((a * b).data())))
    }
}

/// Closes the reflections in all roots under multiplication. Needs a full-rank torus.
pub fn generate_weyl_group(report: &RootSystemReport) -> Result<WeylGroup> {
    let (n, r) = (report.n, report.torus.r);
    if r != n {
        return Err(Error::NotFullRank { n, r });
    }
    let gens: Vec<MatrixQ> = report
        .roots
        .iter()
        .map(|root| reflection_matrix(&root.coordinates()))
        .collect::<Result<_>>()?;
    let mut seen: BTreeSet<Vec<ExactScalar>> = BTreeSet::new();
    let id = MatrixQ::identity(r);
    seen.insert(id.data().to_vec());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let p = g * w;
                if seen.insert(p.data().to_vec()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    let elements = seen
        .into_iter()
        .map(|d| MatrixQ::new(r, r, d).expect("square data"))
        .collect();
    Ok(WeylGroup { rank: r, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots_weyl::{weight_decomposition, TorusData};
    use crate::symplectic_lie::build_sp_algebra;

    fn v(x: &[i64]) -> Vec<ExactScalar> {
        x.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn reflection_example() {
        assert_eq!(
            weyl_reflection(&v(&[1, -1]), &v(&[1, 0])).unwrap(),
            v(&[0, 1])
        );
        assert_eq!(
            weyl_reflection(&v(&[0, 0]), &v(&[1, 0])),
            Err(Error::ZeroRoot)
        );
    }

    #[test]
    fn reflection_is_involution() {
        let a = v(&[2, 0, 0]);
        let b = v(&[1, -3, 5]);
        let once = weyl_reflection(&a, &b).unwrap();
        assert_eq!(weyl_reflection(&a, &once).unwrap(), b);
        assert_eq!(weyl_reflection(&a, &a).unwrap(), v(&[-2, 0, 0]));
    }

    #[test]
    fn weyl_orders() {
        for (n, order) in [(1, 2), (2, 8), (3, 48)] {
            let alg = build_sp_algebra(n);
            let rep = weight_decomposition(&alg, &TorusData::new(n, n)).unwrap();
            let w = generate_weyl_group(&rep).unwrap();
            assert_eq!(w.order(), order);
            assert!(w.is_signed_permutation());
            assert!(w.is_closed());
            let roots: Vec<_> = rep.roots.iter().map(|r| r.coordinates()).collect();
            assert!(w.permutes(&roots));
        }
    }

    #[test]
    fn partial_torus_rejected() {
        let alg = build_sp_algebra(2);
        let rep = weight_decomposition(&alg, &TorusData::new(2, 1)).unwrap();
        assert_eq!(
            generate_weyl_group(&rep),
            Err(Error::NotFullRank { n: 2, r: 1 })
        );
    }
}
