use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exact_linalg::{Matrix, MatrixQ};
use crate::orbits::{
    check_flatness, expected_stabilizer_dim, kernel_of_kirillov_coords, kirillov_form_at,
    orbit_dimension, random_algebra_element, stabilizer_algebra,
};
use crate::polarizations::{
    build_polarization, in_parabolic_block_pattern, langlands_pieces, random_maximal_parabolic,
    restriction_to_radical, verify_polarization, PolarizationMode,
};
use crate::roots_weyl::{
    choose_positive_system, classify_all, generate_weyl_group, half_sums, weight_decomposition,
    Compactness, RootSystemReport, TorusData,
};
use crate::symplectic_lie::{
    adjoint, build_sp_algebra, coadjoint, random_stabilizer_element, random_symplectic,
    trace_pairing, Functional, SymplecticForm,
};

use super::config::{ValidConfig, WEYL_BOUND};
use super::document::{complex_matrix_json, matrix_json, q_json, vec_json, Verdict};

pub type Section = (Value, Vec<Verdict>);

fn err_verdict(name: &str, e: impl std::fmt::Display) -> Verdict {
    Verdict::new(name, false, e.to_string())
}

/// Dimension of `{X : XᵀJ + JX = 0}` by a nullspace over all `2n × 2n` matrices.
pub fn algebra_dimension_oracle(n: usize) -> usize {
    let m = 2 * n;
    let form = SymplecticForm::new(n);
    let cols: Vec<Vec<_>> = (0..m * m)
        .map(|k| {
            let mut e = MatrixQ::zeros(m, m);
            e[(k / m, k % m)] = num_traits::One::one();
            (&(&e.transpose() * &form.j) + &(&form.j * &e)).into_data()
        })
        .collect();
    Matrix::from_columns(m * m, &cols)
        .expect("square")
        .nullspace()
        .len()
}

pub fn algebra_section(cfg: &ValidConfig) -> Section {
    let n = cfg.raw.n;
    let alg = build_sp_algebra(n);
    let oracle = algebra_dimension_oracle(n);
    let results = json!({
        "dim": alg.dim(),
        "matrix_size": alg.matrix_size(),
        "j": matrix_json(&alg.form.j),
        "basis": alg.basis.iter().map(matrix_json).collect::<Vec<_>>(),
    });
    let verdicts = vec![
        Verdict::new(
            "dimension",
            alg.dim() == oracle && oracle == n * (2 * n + 1),
            format!("{} (nullspace {oracle})", alg.dim()),
        ),
        Verdict::new(
            "basis_in_algebra",
            alg.basis.iter().all(|b| alg.form.preserves(b)),
            "",
        ),
        Verdict::new("jacobi", alg.jacobi_holds(), ""),
    ];
    (results, verdicts)
}

/// `⟨K(g)F, X⟩ = ⟨F, Ad(g⁻¹)X⟩` on random triples; returns the number of failures.
pub fn coadjoint_duality_failures(n: usize, samples: usize, seed: u64) -> Result<usize> {
    let alg = build_sp_algebra(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for k in 0..samples {
        let g = random_symplectic(n, seed.wrapping_add(k as u64), 1 + k % 4);
        let f = Functional::new(n, random_algebra_element(&alg, &mut rng))?;
        let x = random_algebra_element(&alg, &mut rng);
        let lhs = trace_pairing(&coadjoint(&g, &f), &x)?;
        let rhs = trace_pairing(&f, &adjoint(&g.inverse(), &x))?;
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(failures)
}

/// Number of random stabilizer elements `g` with `gFg⁻¹ ≠ F`.
pub fn stabilizer_failures(f: &Functional, samples: usize, seed: u64) -> Result<usize> {
    let mut failures = 0;
    for k in 0..samples {
        let g = random_stabilizer_element(f, seed.wrapping_add(k as u64))?;
        if coadjoint(&g, f).matrix != f.matrix {
            failures += 1;
        }
    }
    Ok(failures)
}

pub fn orbit_section(cfg: &ValidConfig) -> Section {
    let n = cfg.raw.n;
    let (seed, samples) = (cfg.raw.seed, cfg.raw.samples);
    let f = cfg.functional.as_ref().expect("validated functional");
    let alg = build_sp_algebra(n);
    let stab = stabilizer_algebra(&alg, f);
    let expected = expected_stabilizer_dim(n, cfg.r());
    let orbit_dim = orbit_dimension(&alg, f);
    let mut verdicts = vec![Verdict::new(
        "dimension_law",
        stab.dim() == expected,
        format!("dim g_F = {}, expected {expected}", stab.dim()),
    )];
    let mut results = json!({
        "stabilizer": {
            "dim": stab.dim(),
            "expected": expected,
            "basis": stab.basis.iter().map(matrix_json).collect::<Vec<_>>(),
        },
        "orbit_dim": orbit_dim,
    });

    match kernel_of_kirillov_coords(&alg, f) {
        Ok(ker) => {
            results["kernel_dim"] = json!(ker.dim());
            verdicts.push(Verdict::new(
                "kernel_equals_stabilizer",
                ker.same_span(&stab.coords),
                "",
            ));
        }
        Err(e) => verdicts.push(err_verdict("kernel_equals_stabilizer", e)),
    }
    verdicts.push(Verdict::new(
        "orbit_dim_even",
        orbit_dim.is_multiple_of(2),
        orbit_dim.to_string(),
    ));
    match kirillov_form_at(&alg, &f.matrix) {
        Ok(form) => verdicts.push(Verdict::new(
            "kirillov_form_symplectic",
            form.is_antisymmetric() && form.is_nondegenerate() && form.dim() == orbit_dim,
            format!("rank {}", form.gram.rank()),
        )),
        Err(e) => verdicts.push(err_verdict("kirillov_form_symplectic", e)),
    }
    match stabilizer_failures(f, samples, seed) {
        Ok(k) => verdicts.push(Verdict::new(
            "group_stabilizer",
            k == 0,
            format!("{k}/{samples} samples move F"),
        )),
        Err(e) => verdicts.push(err_verdict("group_stabilizer", e)),
    }
    match coadjoint_duality_failures(n, samples, seed) {
        Ok(k) => verdicts.push(Verdict::new(
            "coadjoint_duality",
            k == 0,
            format!("{k}/{samples} failures"),
        )),
        Err(e) => verdicts.push(err_verdict("coadjoint_duality", e)),
    }
    match check_flatness(&alg, f, samples, seed) {
        Ok(v) => {
            results["flatness"] = json!({ "triples": v.triples, "kernel_checks": v.kernel_checks });
            verdicts.push(Verdict::new(
                "flatness",
                true,
                format!("{} triples", v.triples),
            ));
        }
        Err(e) => verdicts.push(err_verdict("flatness", e)),
    }
    (results, verdicts)
}

pub fn compactness_name(c: Compactness) -> &'static str {
    match c {
        Compactness::Compact => "compact",
        Compactness::Noncompact => "noncompact",
        Compactness::Unclassified => "unclassified",
    }
}

/// `2ⁿ · n!`.
pub fn hyperoctahedral_order(n: usize) -> usize {
    (1..=n).product::<usize>() << n
}

pub fn classified_report(cfg: &ValidConfig) -> Result<RootSystemReport> {
    let alg = build_sp_algebra(cfg.raw.n);
    let torus = TorusData::new(cfg.raw.n, cfg.r());
    let report = classify_all(&alg, &weight_decomposition(&alg, &torus)?)?;
    let mut report = choose_positive_system(&report, cfg.raw.positive);
    report.half_sums = half_sums(&report).ok();
    Ok(report)
}

pub fn roots_section(cfg: &ValidConfig) -> Section {
    let n = cfg.raw.n;
    let r = cfg.r();
    let report = match classified_report(cfg) {
        Ok(rep) => rep,
        Err(e) => return (Value::Null, vec![err_verdict("root_decomposition", e)]),
    };
    let positive = report.positive.clone().unwrap_or_default();
    let table: Vec<Value> = report
        .roots
        .iter()
        .zip(&positive)
        .map(|(root, p)| {
            json!({
                "weight": vec_json(&root.coordinates()),
                "multiplicity": root.multiplicity(),
                "compactness": compactness_name(root.compactness),
                "positive": p,
            })
        })
        .collect();
    let count = |c| report.count_positive(c).unwrap_or(0);
    let mut results = json!({
        "weights_are": "alpha(H_j)/i for H_j = J_1 in slot j",
        "zero_space_dim": report.zero_space_dim(),
        "roots": table,
        "positive_compact": count(Compactness::Compact),
        "positive_noncompact": count(Compactness::Noncompact),
        "half_sums": report.half_sums.as_ref().map(|h| json!({
            "rho_c": vec_json(&h.rho_c),
            "rho_n": vec_json(&h.rho_n),
            "d_delta_f": vec_json(&h.d_delta_f),
        })),
    });

    let total = report.zero_space_dim() + report.total_multiplicity();
    let mut verdicts = vec![Verdict::new(
        "root_bookkeeping",
        total == n * (2 * n + 1),
        format!("{total} = {}", n * (2 * n + 1)),
    )];
    let mult_one: Vec<_> = report
        .roots
        .iter()
        .filter(|x| x.multiplicity() == 1)
        .collect();
    let triples_ok = mult_one
        .iter()
        .all(|x| x.triple.as_ref().is_some_and(|t| t.relations_hold()));
    verdicts.push(Verdict::new(
        "triple_relations",
        triples_ok,
        format!("{} roots of multiplicity 1", mult_one.len()),
    ));
    if r == n {
        let (c, nc) = (count(Compactness::Compact), count(Compactness::Noncompact));
        verdicts.push(Verdict::new(
            "compact_counts",
            c == n * (n - 1) / 2 && nc == n * (n + 1) / 2,
            format!("|positive compact| = {c}, |positive noncompact| = {nc}"),
        ));
        if n <= WEYL_BOUND || cfg.raw.allow_large {
            match generate_weyl_group(&report) {
                Ok(w) => {
                    let roots: Vec<_> = report.roots.iter().map(|x| x.coordinates()).collect();
                    results["weyl_group"] = json!({ "order": w.order() });
                    verdicts.push(Verdict::new(
                        "weyl_order",
                        w.order() == hyperoctahedral_order(n),
                        format!("{} = {}", w.order(), hyperoctahedral_order(n)),
                    ));
                    verdicts.push(Verdict::new("weyl_permutes_roots", w.permutes(&roots), ""));
                }
                Err(e) => verdicts.push(err_verdict("weyl_order", e)),
            }
        } else {
            results["weyl_group"] =
                json!({ "skipped": format!("n > {WEYL_BOUND}; pass --allow-large") });
        }
    }
    (results, verdicts)
}

pub fn polarize_section(cfg: &ValidConfig) -> Section {
    let n = cfg.raw.n;
    let (seed, samples) = (cfg.raw.seed, cfg.raw.samples);
    let f = cfg.functional.as_ref().expect("validated functional");
    let alg = build_sp_algebra(n);
    let report = match classified_report(cfg) {
        Ok(rep) => rep,
        Err(e) => return (Value::Null, vec![err_verdict("root_decomposition", e)]),
    };
    let mode = if cfg.r() == n {
        PolarizationMode::Strict
    } else {
        PolarizationMode::Wholesale
    };
    let mut results = json!({});
    let mut verdicts = Vec::new();

    match build_polarization(&alg, f, &report, mode)
        .and_then(|p| verify_polarization(&alg, f, &p, samples, seed).map(|v| (p, v)))
    {
        Ok((p, v)) => {
            results["polarization"] = json!({
                "mode": format!("{mode:?}").to_lowercase(),
                "complex_dim": p.complex_dim(),
                "stabilizer_dim": p.stabilizer.dim(),
                "p_cap_pbar_dim": p.meet_conjugate().dim(),
                "p_plus_pbar_dim": p.plus_conjugate().dim(),
                "real_form_dim": v.real_form_dim,
                "closedness": v.closedness,
                "basis": p.basis.iter().map(complex_matrix_json).collect::<Vec<_>>(),
            });
            verdicts.extend([
                Verdict::new("p_subalgebra", v.subalgebra, ""),
                Verdict::new("p_contains_stabilizer", v.contains_stabilizer, ""),
                Verdict::new(
                    "p_ad_invariant_infinitesimal",
                    v.ad_invariant_infinitesimal,
                    "",
                ),
                Verdict::new(
                    "p_ad_invariant_group",
                    v.ad_invariant_group,
                    format!("{} samples", v.group_samples),
                ),
                Verdict::new(
                    "p_plus_pbar_complexification",
                    v.conjugation_stable,
                    format!(
                        "dim_R = {}, dim_C = {}",
                        v.real_form_dim,
                        p.plus_conjugate().dim()
                    ),
                ),
                Verdict::new("p_isotropic", v.isotropic, ""),
            ]);
            if mode == PolarizationMode::Strict {
                verdicts.push(Verdict::new(
                    "p_cap_pbar_is_stabilizer",
                    p.meet_conjugate().same_span(&p.stabilizer),
                    "",
                ));
            }
        }
        Err(e) => verdicts.push(err_verdict("polarization", e)),
    }

    match langlands_pieces(&alg, f, &report) {
        Ok(l) => {
            let v = &l.verdicts;
            results["langlands"] = json!({
                "dim_m": v.dims[0],
                "dim_a": v.dims[1],
                "dim_n": v.dims[2],
                "lower_central_series": v.lower_central_series,
            });
            verdicts.extend([
                Verdict::new("langlands_direct_sum", v.direct_sum, ""),
                Verdict::new("centralizer_is_stabilizer", v.centralizer_is_stabilizer, ""),
                Verdict::new("centralizer_is_a_plus_m", v.levi_is_centralizer, ""),
                Verdict::new("levi_normalizes_nilradical", v.normalizes_nilradical, ""),
                Verdict::new(
                    "nilradical_nilpotent",
                    v.nilradical_closed && v.nilpotent(),
                    "",
                ),
            ]);
        }
        Err(e) => verdicts.push(err_verdict("langlands", e)),
    }

    match restriction_to_radical(&alg, f) {
        Ok(rad) => {
            let expected: Vec<_> = cfg
                .lambdas
                .iter()
                .map(|l| -(l * crate::exact_linalg::q(2)))
                .collect();
            results["radical"] = json!({
                "dim": rad.radical_dim,
                "restriction": vec_json(&rad.restriction),
                "unipotent_radical_dim": rad.unipotent_radical_dim,
            });
            verdicts.push(Verdict::new(
                "radical_restriction",
                rad.radical_is_torus
                    && rad.reductive
                    && rad.unipotent_radical_dim == 0
                    && rad.restriction == expected,
                "",
            ));
        }
        Err(e) => verdicts.push(err_verdict("radical_restriction", e)),
    }

    let (sym, pattern) = maximal_parabolic_counts(n, samples, seed);
    let sample = random_maximal_parabolic(n, seed, false);
    results["maximal_parabolic"] = json!({
        "rotation": [q_json(&sample.rotation.0), q_json(&sample.rotation.1)],
        "uabw_coordinates": matrix_json(&sample.uabw_matrix()),
    });
    verdicts.push(Verdict::new(
        "maximal_parabolic_symplectic",
        sym == samples,
        format!("{sym}/{samples}"),
    ));
    verdicts.push(Verdict::new(
        "maximal_parabolic_products",
        pattern == samples,
        format!("{pattern}/{samples}"),
    ));
    (results, verdicts)
}

/// `(symplectic, closed)`: how many random elements are symplectic with the displayed two-factor
/// shape, and how many products of pairs with `±1` rotation stay in the block pattern.
pub fn maximal_parabolic_counts(n: usize, samples: usize, seed: u64) -> (usize, usize) {
    let form = SymplecticForm::new(n);
    let mut sym = 0;
    let mut pattern = 0;
    for k in 0..samples as u64 {
        let s = seed.wrapping_mul(1_000_003).wrapping_add(3 * k);
        let f = random_maximal_parabolic(n, s, false);
        if form.is_symplectic(&f.block_matrix()) && f.second_factor_pattern_holds() {
            sym += 1;
        }
        let a = random_maximal_parabolic(n, s + 1, true).block_matrix();
        let b = random_maximal_parabolic(n, s + 2, true).block_matrix();
        let ab = &a * &b;
        if form.is_symplectic(&ab) && in_parabolic_block_pattern(n, &ab) {
            pattern += 1;
        }
    }
    (sym, pattern)
}
