use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::exact_linalg::q;
use crate::orbits::{
    check_flatness, expected_stabilizer_dim, kernel_of_kirillov_coords, orbit_dimension,
    stabilizer_algebra,
};
use crate::polarizations::{
    build_polarization, langlands_pieces, restriction_to_radical, verify_polarization,
    PolarizationMode,
};
use crate::roots_weyl::{
    analyze, generate_weyl_group, weight_decomposition, Compactness, TorusData,
};
use crate::symplectic_lie::{build_sp_algebra, build_special_f, random_lambdas, SpAlgebra};

use super::commands::{
    algebra_dimension_oracle, coadjoint_duality_failures, hyperoctahedral_order,
    maximal_parabolic_counts, stabilizer_failures,
};
use super::config::ValidConfig;
use super::document::Verdict;

/// Outcome of one suite: how many cases ran and a description of the first failure.
struct Suite {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn absorb<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{what}: {e}"));
                None
            }
        }
    }
}

/// Number of random `λ` tuples per `(n, r)` in the dimension sweeps.
const TUPLES: u64 = 5;

fn lambda_seed(seed: u64, n: usize, r: usize, t: u64) -> u64 {
    seed.wrapping_mul(7919)
        .wrapping_add((n as u64) << 32 | (r as u64) << 16 | t)
}

fn sweep(max_n: usize, seed: u64, suites: &mut [Suite; 4], algebras: &[SpAlgebra]) {
    let [algebra, dims, kernel, roots] = suites;
    for n in 1..=max_n {
        let alg = &algebras[n - 1];
        algebra.check(
            alg.dim() == algebra_dimension_oracle(n) && alg.dim() == n * (2 * n + 1),
            || format!("n = {n}: dim {}", alg.dim()),
        );
        algebra.check(alg.jacobi_holds(), || format!("n = {n}: Jacobi fails"));
        for r in 0..=n {
            for t in 0..TUPLES {
                let lambdas = random_lambdas(r, lambda_seed(seed, n, r, t));
                let Some(f) = dims.absorb(build_special_f(n, &lambdas), "build_special_f") else {
                    continue;
                };
                let stab = stabilizer_algebra(alg, &f);
                let expected = expected_stabilizer_dim(n, r);
                dims.check(stab.dim() == expected, || {
                    format!("(n, r) = ({n}, {r}): {} ≠ {expected}", stab.dim())
                });
                if let Some(ker) = kernel.absorb(kernel_of_kirillov_coords(alg, &f), "kernel") {
                    let even = orbit_dimension(alg, &f).is_multiple_of(2);
                    kernel.check(ker.same_span(&stab.coords) && even, || {
                        format!("(n, r) = ({n}, {r})")
                    });
                }
            }
            if let Some(rep) = roots.absorb(
                weight_decomposition(alg, &TorusData::new(n, r)),
                "weight_decomposition",
            ) {
                let total = rep.zero_space_dim() + rep.total_multiplicity();
                let mut ok = total == n * (2 * n + 1);
                if r == n {
                    ok &= rep.roots.len() == 2 * n * n
                        && rep.roots.iter().all(|x| x.multiplicity() == 1);
                }
                roots.check(ok, || format!("(n, r) = ({n}, {r}): total {total}"));
            }
        }
    }
}

pub fn verify_section(cfg: &ValidConfig) -> (Value, Vec<Verdict>) {
    let max_n = cfg.raw.n;
    let (seed, samples) = (cfg.raw.seed, cfg.raw.samples);
    let algebras: Vec<SpAlgebra> = (1..=max_n).map(build_sp_algebra).collect();

    let mut first = [
        Suite::new("algebra"),
        Suite::new("dimension_law"),
        Suite::new("kernel_identity"),
        Suite::new("root_bookkeeping"),
    ];
    sweep(max_n, seed, &mut first, &algebras);

    let mut duality = Suite::new("coadjoint_duality");
    let mut stabilizer = Suite::new("group_stabilizer");
    let mut flatness = Suite::new("flatness");
    let mut counts = Suite::new("compact_counts");
    let mut triples = Suite::new("triple_relations");
    let mut weyl = Suite::new("weyl_order");
    let mut polar = Suite::new("polarization");
    let mut langlands = Suite::new("langlands");
    let mut radical = Suite::new("radical_restriction");
    let mut parabolic = Suite::new("maximal_parabolic");

    for n in 1..=max_n {
        let alg = &algebras[n - 1];
        if let Some(k) = duality.absorb(coadjoint_duality_failures(n, samples, seed), "duality") {
            duality.check(k == 0, || format!("n = {n}: {k} failures"));
        }
        let full: Vec<_> = (1..=n as i64).map(q).collect();
        let f_full = build_special_f(n, &full).expect("distinct");
        if let Some(v) = flatness.absorb(check_flatness(alg, &f_full, samples, seed), "flatness") {
            flatness.check(v.triples == samples, || format!("n = {n}"));
        }
        for r in 1..=n {
            let lambdas = random_lambdas(r, lambda_seed(seed, n, r, TUPLES + 1));
            let f = build_special_f(n, &lambdas).expect("admissible");
            if let Some(k) = stabilizer.absorb(stabilizer_failures(&f, samples, seed), "stabilizer")
            {
                stabilizer.check(k == 0, || format!("(n, r) = ({n}, {r}): {k} failures"));
            }
            let Some(rep) = triples.absorb(analyze(alg, &f), "analyze") else {
                continue;
            };
            for root in rep.roots.iter().filter(|x| x.multiplicity() == 1) {
                triples.check(
                    root.triple.as_ref().is_some_and(|t| t.relations_hold()),
                    || format!("(n, r) = ({n}, {r}): root {:?}", root.coordinates()),
                );
            }
            if r == n {
                let c = rep
                    .count_positive(Compactness::Compact)
                    .unwrap_or(usize::MAX);
                let nc = rep
                    .count_positive(Compactness::Noncompact)
                    .unwrap_or(usize::MAX);
                counts.check(c == n * (n - 1) / 2 && nc == n * (n + 1) / 2, || {
                    format!("n = {n}: {c}, {nc}")
                });
                if let Some(w) = weyl.absorb(generate_weyl_group(&rep), "weyl") {
                    weyl.check(
                        w.order() == hyperoctahedral_order(n) && w.is_closed(),
                        || format!("n = {n}: order {}", w.order()),
                    );
                }
            }
            let mode = if r == n {
                PolarizationMode::Strict
            } else {
                PolarizationMode::Wholesale
            };
            let verdicts = build_polarization(alg, &f, &rep, mode)
                .and_then(|p| verify_polarization(alg, &f, &p, samples, seed).map(|v| (p, v)));
            if let Some((p, v)) = polar.absorb(verdicts, "polarization") {
                let meet_ok = r < n || p.meet_conjugate().same_span(&p.stabilizer);
                polar.check(v.all_pass() && meet_ok, || {
                    format!("(n, r) = ({n}, {r}): {v:?}")
                });
            }
            if let Some(l) = langlands.absorb(langlands_pieces(alg, &f, &rep), "langlands") {
                langlands.check(l.verdicts.all_pass(), || {
                    format!("(n, r) = ({n}, {r}): {:?}", l.verdicts)
                });
            }
            if let Some(rad) = radical.absorb(restriction_to_radical(alg, &f), "radical") {
                let expected: Vec<_> = lambdas.iter().map(|l| -(l * q(2))).collect();
                radical.check(
                    rad.radical_is_torus
                        && rad.reductive
                        && rad.unipotent_radical_dim == 0
                        && rad.restriction == expected,
                    || format!("(n, r) = ({n}, {r}): {rad:?}"),
                );
            }
        }
        let (sym, pattern) = maximal_parabolic_counts(n, samples, seed);
        parabolic.check(sym == samples && pattern == samples, || {
            format!("n = {n}: {sym}, {pattern} of {samples}")
        });
    }

    let all: Vec<Suite> = first
        .into_iter()
        .chain([
            duality, stabilizer, flatness, counts, triples, weyl, polar, langlands, radical,
            parabolic,
        ])
        .collect();
    let mut cases = Map::new();
    for s in &all {
        cases.insert(s.name.to_string(), json!(s.cases));
    }
    let verdicts = all
        .iter()
        .map(|s| {
            Verdict::new(
                s.name,
                s.failure.is_none() && s.cases > 0,
                s.failure.clone().unwrap_or_default(),
            )
        })
        .collect();
    (
        json!({ "max_n": max_n, "cases": Value::Object(cases) }),
        verdicts,
    )
}
