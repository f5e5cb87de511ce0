//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then asserts.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spcoad::exact_linalg::{frac, q, ExactScalar, GaussianScalar, Matrix, MatrixQ, Subspace};
use spcoad::orbits::{
    check_flatness, kernel_of_kirillov_coords, orbit_dimension, random_algebra_element,
    stabilizer_algebra,
};
use spcoad::polarizations::{
    build_polarization, in_parabolic_block_pattern, langlands_pieces, random_maximal_parabolic,
    verify_polarization, PolarizationMode,
};
use spcoad::report::{render, run, Command, OutputFormat, RunConfig};
use spcoad::roots_weyl::{
    analyze, generate_weyl_group, weight_decomposition, Compactness, TorusData,
};
use spcoad::symplectic_lie::{
    build_sp_algebra, build_special_f, random_lambdas, random_stabilizer_element,
    random_symplectic, SymplecticForm,
};

fn report(id: u32, name: &str, pass: bool, detail: impl AsRef<str>) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {tag} {name}: {}", detail.as_ref());
    assert!(pass, "criterion {id} ({name}) failed: {}", detail.as_ref());
}

fn seed_for(n: usize, r: usize, t: u64) -> u64 {
    1000 * n as u64 + 100 * r as u64 + t
}

/// `dim {X ∈ gl(2n) : XᵀJ + JX = 0, XF = FX}`, straight from the defining equations.
fn stabilizer_dim_oracle(f: &MatrixQ) -> usize {
    let m = f.rows();
    let j = SymplecticForm::new(m / 2).j;
    let cols: Vec<Vec<ExactScalar>> = (0..m * m)
        .map(|k| {
            let mut e = MatrixQ::zeros(m, m);
            e[(k / m, k % m)] = ExactScalar::one();
            let mut col = (&(&e.transpose() * &j) + &(&j * &e)).into_data();
            col.extend((&(&e * f) - &(f * &e)).into_data());
            col
        })
        .collect();
    Matrix::from_columns(2 * m * m, &cols)
        .unwrap()
        .nullspace()
        .len()
}

#[test]
fn criterion_01_dimension_law() {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=4 {
        let alg = build_sp_algebra(n);
        for r in 0..=n {
            for t in 0..5 {
                let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, t))).unwrap();
                let got = stabilizer_algebra(&alg, &f).dim();
                let oracle = stabilizer_dim_oracle(&f.matrix);
                let formula = r + (n - r) * (2 * (n - r) + 1);
                cases += 1;
                if got != oracle || got != formula {
                    bad.push(format!(
                        "(n, r) = ({n}, {r}): {got} vs oracle {oracle}, formula {formula}"
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        1,
        "dimension law",
        bad.is_empty() && elapsed < Duration::from_secs(30),
        format!(
            "{cases} cases, {} mismatches, {elapsed:.2?} {}",
            bad.len(),
            bad.join("; ")
        ),
    );
}

#[test]
fn criterion_02_kernel_identity() {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=4 {
        let alg = build_sp_algebra(n);
        for r in 0..=n {
            for t in 0..5 {
                let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, t))).unwrap();
                let ker = kernel_of_kirillov_coords(&alg, &f).unwrap();
                let stab = stabilizer_algebra(&alg, &f);
                let dim = orbit_dimension(&alg, &f);
                cases += 1;
                if !ker.same_span(&stab.coords) || !dim.is_multiple_of(2) {
                    bad.push(format!("(n, r) = ({n}, {r}) orbit dim {dim}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        2,
        "kernel identity",
        bad.is_empty() && elapsed < Duration::from_secs(30),
        format!(
            "{cases} cases, {} mismatches, {elapsed:.2?} {}",
            bad.len(),
            bad.join("; ")
        ),
    );
}

#[test]
fn criterion_03_coadjoint_duality() {
    let mut failures = 0;
    let mut cases = 0;
    for n in [2, 3] {
        let alg = build_sp_algebra(n);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for k in 0..100u64 {
            let g = random_symplectic(n, 31 * k + n as u64, 1 + (k as usize % 5)).matrix;
            let g_inv = g.inverse().unwrap();
            let f = random_algebra_element(&alg, &mut rng);
            let x = random_algebra_element(&alg, &mut rng);
            let lhs = (&(&g * &f) * &g_inv).trace_product(&x).unwrap();
            let rhs = f.trace_product(&(&(&g_inv * &x) * &g)).unwrap();
            cases += 1;
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    report(
        3,
        "coadjoint duality",
        failures == 0,
        format!("{cases} triples, {failures} failures"),
    );
}

#[test]
fn criterion_04_group_stabilizer() {
    let mut failures = 0;
    let mut cases = 0;
    for (n, r) in [(2, 1), (3, 1), (3, 2), (3, 3)] {
        let form = SymplecticForm::new(n);
        let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, 9))).unwrap();
        for k in 0..200 {
            let g = random_stabilizer_element(&f, 7919 * k + seed_for(n, r, 0))
                .unwrap()
                .matrix;
            let moved = &(&g * &f.matrix) * &g.inverse().unwrap();
            cases += 1;
            if moved != f.matrix || !form.is_symplectic(&g) {
                failures += 1;
            }
        }
    }
    report(
        4,
        "group stabilizer",
        failures == 0,
        format!("{cases} samples, {failures} failures"),
    );
}

#[test]
fn criterion_05_flatness() {
    let mut details = Vec::new();
    let mut pass = true;
    for lambdas in [vec![q(1), q(2)], vec![q(1), q(2), q(3)]] {
        let n = lambdas.len();
        let alg = build_sp_algebra(n);
        let f = build_special_f(n, &lambdas).unwrap();
        match check_flatness(&alg, &f, 100, 5) {
            Ok(v) => details.push(format!(
                "n = {n}: {} triples, {} kernel checks, 0 violations",
                v.triples, v.kernel_checks
            )),
            Err(e) => {
                pass = false;
                details.push(format!("n = {n}: {e}"));
            }
        }
    }
    report(5, "flatness", pass, details.join("; "));
}

#[test]
fn criterion_06_root_bookkeeping() {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 1..=4 {
        let alg = build_sp_algebra(n);
        for r in 0..=n {
            let torus = TorusData::new(n, r);
            let rep = weight_decomposition(&alg, &torus).unwrap();
            cases += 1;
            let total = rep.zero_space_dim() + rep.total_multiplicity();
            if total != n * (2 * n + 1) {
                bad.push(format!("(n, r) = ({n}, {r}): total {total}"));
            }
            if r == n
                && (rep.roots.len() != 2 * n * n || rep.roots.iter().any(|x| x.multiplicity() != 1))
            {
                bad.push(format!("n = {n}: {} roots", rep.roots.len()));
            }
            // Oracle for g⁰: the real centralizer of the torus, complexified.
            let mut rows = Vec::new();
            for h in &torus.generators {
                rows.extend(alg.ad_matrix(h).unwrap().to_rows());
            }
            let zero = if rows.is_empty() {
                Subspace::whole(alg.dim())
            } else {
                Subspace::span(alg.dim(), &Matrix::from_rows(rows).unwrap().nullspace())
            };
            if !zero.complexify().same_span(&rep.zero_space) {
                bad.push(format!("(n, r) = ({n}, {r}): zero space"));
            }
            for root in &rep.roots {
                for x in &root.space_basis {
                    for (h, w) in torus.generators.iter().zip(&root.weight) {
                        if h.complexify().commutator(x) != x.scale(w) {
                            bad.push(format!("(n, r) = ({n}, {r}): eigenvector"));
                        }
                    }
                }
            }
        }
    }
    let alg = build_sp_algebra(2);
    let rep = weight_decomposition(&alg, &TorusData::new(2, 1)).unwrap();
    let mut table: Vec<(String, usize)> = rep
        .roots
        .iter()
        .map(|x| (format!("{}i", x.coordinates()[0]), x.multiplicity()))
        .collect();
    table.sort();
    let expected: Vec<(String, usize)> = [("-1i", 2), ("-2i", 1), ("1i", 2), ("2i", 1)]
        .iter()
        .map(|(a, b)| (a.to_string(), *b))
        .collect();
    if table != expected {
        bad.push(format!("(2, 1) table {table:?}"));
    }
    report(
        6,
        "root bookkeeping",
        bad.is_empty(),
        format!("{cases} tori, (2,1) table {table:?} {}", bad.join("; ")),
    );
}

#[test]
fn criterion_07_compact_counts() {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let alg = build_sp_algebra(n);
        let lambdas: Vec<_> = (1..=n as i64).map(q).collect();
        let rep = analyze(&alg, &build_special_f(n, &lambdas).unwrap()).unwrap();
        let c = rep.count_positive(Compactness::Compact).unwrap();
        let nc = rep.count_positive(Compactness::Noncompact).unwrap();
        if c != n * (n - 1) / 2 || nc != n * (n + 1) / 2 {
            bad.push(format!("n = {n}: {c} compact, {nc} noncompact"));
        }
        // Oracle: the compact roots are exactly ±(e_i − e_j), the roots of u(n).
        for root in &rep.roots {
            let w = root.coordinates();
            let nonzero: Vec<_> = w.iter().filter(|x| !x.is_zero()).collect();
            let compact = nonzero.len() == 2 && (nonzero[0] + nonzero[1]).is_zero();
            let expected = if compact {
                Compactness::Compact
            } else {
                Compactness::Noncompact
            };
            if root.compactness != expected {
                bad.push(format!("n = {n}: root {w:?} is {:?}", root.compactness));
            }
        }
    }
    let alg = build_sp_algebra(2);
    let d = analyze(&alg, &build_special_f(2, &[q(1), q(2)]).unwrap())
        .unwrap()
        .half_sums
        .unwrap()
        .d_delta_f;
    if d != vec![q(1), q(2)] {
        bad.push(format!("D delta^F = {d:?}"));
    }
    report(
        7,
        "compact/noncompact counts",
        bad.is_empty(),
        format!("n = 1..4, D delta^F(2,2) = (1, 2) {}", bad.join("; ")),
    );
}

#[test]
fn criterion_08_triple_relations() {
    let mut cases = 0;
    let mut bad = Vec::new();
    let two = GaussianScalar::real(q(2));
    for n in 1..=3 {
        let alg = build_sp_algebra(n);
        for r in 1..=n {
            let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, 3))).unwrap();
            let rep = analyze(&alg, &f).unwrap();
            for root in rep.roots.iter().filter(|x| x.multiplicity() == 1) {
                cases += 1;
                let Some(t) = &root.triple else {
                    bad.push(format!("(n, r) = ({n}, {r}): no triple"));
                    continue;
                };
                let ok = t.h.commutator(&t.x_pos) == t.x_pos.scale(&two)
                    && t.h.commutator(&t.x_neg) == t.x_neg.scale(&-two.clone())
                    && t.x_pos.commutator(&t.x_neg) == t.h;
                if !ok {
                    bad.push(format!("(n, r) = ({n}, {r}): {:?}", root.coordinates()));
                }
            }
        }
    }
    report(
        8,
        "sl2-triple relations",
        bad.is_empty(),
        format!("{cases} roots {}", bad.join("; ")),
    );
}

#[test]
fn criterion_09_weyl_order() {
    let mut orders = Vec::new();
    let mut pass = true;
    let mut n3 = Duration::ZERO;
    for (n, expected) in [(1, 2), (2, 8), (3, 48)] {
        let alg = build_sp_algebra(n);
        let rep = weight_decomposition(&alg, &TorusData::new(n, n)).unwrap();
        let start = Instant::now();
        let w = generate_weyl_group(&rep).unwrap();
        if n == 3 {
            n3 = start.elapsed();
        }
        orders.push(w.order());
        pass &= w.order() == expected && w.is_closed() && w.is_signed_permutation();
    }
    pass &= n3 < Duration::from_secs(10);
    report(
        9,
        "Weyl group order",
        pass,
        format!("orders {orders:?}, closure at n = 3 in {n3:.2?}"),
    );
}

#[test]
fn criterion_10_polarization_verdicts() {
    let mut bad = Vec::new();
    let cases = [(1, 1), (2, 2), (3, 3), (2, 1), (3, 1), (3, 2)];
    for (n, r) in cases {
        let alg = build_sp_algebra(n);
        let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, 4))).unwrap();
        let rep = analyze(&alg, &f).unwrap();
        let mode = if r == n {
            PolarizationMode::Strict
        } else {
            PolarizationMode::Wholesale
        };
        let p = build_polarization(&alg, &f, &rep, mode).unwrap();
        let v = verify_polarization(&alg, &f, &p, 50, seed_for(n, r, 5)).unwrap();
        if !v.all_pass() || v.group_samples != 50 {
            bad.push(format!("(n, r) = ({n}, {r}): {v:?}"));
        }
        if r == n && !p.meet_conjugate().same_span(&p.stabilizer) {
            bad.push(format!(
                "n = {n}: p meet conj(p) differs from the stabilizer"
            ));
        }
    }
    report(
        10,
        "polarization verdicts",
        bad.is_empty(),
        format!("{:?} {}", cases, bad.join("; ")),
    );
}

#[test]
fn criterion_11_langlands_centralizer() {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 1..=3 {
        let alg = build_sp_algebra(n);
        for r in 1..=n {
            let f = build_special_f(n, &random_lambdas(r, seed_for(n, r, 6))).unwrap();
            let rep = analyze(&alg, &f).unwrap();
            let l = langlands_pieces(&alg, &f, &rep).unwrap();
            cases += 1;
            let v = &l.verdicts;
            if !(v.centralizer_is_stabilizer
                && v.normalizes_nilradical
                && v.nilpotent()
                && v.all_pass())
            {
                bad.push(format!("(n, r) = ({n}, {r}): {v:?}"));
            }
        }
    }
    report(
        11,
        "Langlands pieces and centralizer",
        bad.is_empty(),
        format!("{cases} cases {}", bad.join("; ")),
    );
}

#[test]
fn criterion_12_maximal_parabolic() {
    let mut sym = 0;
    let mut closed = 0;
    for k in 0..100u64 {
        let n = 1 + (k as usize % 4);
        let form = SymplecticForm::new(n);
        let f = random_maximal_parabolic(n, 3 * k, false);
        if form.is_symplectic(&f.block_matrix()) && f.second_factor_pattern_holds() {
            sym += 1;
        }
        let a = random_maximal_parabolic(n, 3 * k + 1, true).block_matrix();
        let b = random_maximal_parabolic(n, 3 * k + 2, true).block_matrix();
        let ab = &a * &b;
        if form.is_symplectic(&ab) && in_parabolic_block_pattern(n, &ab) {
            closed += 1;
        }
    }
    let rot = random_maximal_parabolic(2, 0, false).rotation;
    let on_circle = &rot.0 * &rot.0 + &rot.1 * &rot.1 == ExactScalar::one();
    report(
        12,
        "maximal parabolic form",
        sym == 100 && closed == 100 && on_circle,
        format!("{sym}/100 symplectic, {closed}/100 products in block pattern"),
    );
}

#[test]
fn criterion_13_determinism() {
    let mut config = RunConfig::new(Command::Verify, 3);
    config.seed = 7;
    config.samples = 10;
    config.format = OutputFormat::Json;
    let a = render(&run(&config).unwrap());
    let b = render(&run(&config).unwrap());
    let doc = run(&config).unwrap();
    report(
        13,
        "determinism",
        a == b && doc.all_pass(),
        format!(
            "{} bytes, identical = {}, all suites pass = {}",
            a.len(),
            a == b,
            doc.all_pass()
        ),
    );
}

#[test]
fn oracle_self_check() {
    // The stabilizer oracle reproduces dim sp(2n) at F = 0 and the rank-one value.
    assert_eq!(stabilizer_dim_oracle(&MatrixQ::zeros(4, 4)), 10);
    let f = build_special_f(1, &[frac(3, 2)]).unwrap();
    assert_eq!(stabilizer_dim_oracle(&f.matrix), 1);
}
