//! Acceptance gate: one test per criterion, each printing a PASS line with
//! the numbers it checked. Run with `--nocapture` to see the lines on
//! success.

mod common;

use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use vdfi_core::bounds::BoundError;
use vdfi_core::degfn::{sum_lodeg_threshold, DEFAULT_TOLERANCE};
use vdfi_core::indices::{gamma_f, h_f, ti_pair};
use vdfi_core::verify::{gamma_separation, verify_bound_with, VERIFY_TOLERANCE};
use vdfi_core::{
    closed_form_bound, construct_extremal, hf_bound, CaseVerdict, ChemGraph, DegreeFunction,
    DegreeVector, Direction, Enumerator, FunctionFamily, InfeasibilityReason,
};

use common::{rel_close, SplitMix64};

/// Enumeration is memoized per order, so every criterion shares one
/// enumerator and the n = 8 levels are built once.
fn shared() -> &'static Mutex<Enumerator> {
    static ENUM: OnceLock<Mutex<Enumerator>> = OnceLock::new();
    ENUM.get_or_init(|| Mutex::new(Enumerator::with_workers(4)))
}

fn grid_functions() -> Vec<DegreeFunction> {
    vec![
        DegreeFunction::Power { alpha: 2.0 },
        DegreeFunction::Power { alpha: 3.0 },
        DegreeFunction::Power { alpha: 0.5 },
        DegreeFunction::SumExdeg { a: 2.0 },
        DegreeFunction::SumLodeg { a: 1.0 },
        DegreeFunction::LnMultZagreb1 { a: -1.0 },
        DegreeFunction::LnMultZagreb2 { a: 1.0 },
    ]
}

fn size_cap(n: usize) -> usize {
    (2 * n).min(n * (n - 1) / 2)
}

fn size_range(n: usize) -> core::ops::RangeInclusive<usize> {
    (n - 1)..=size_cap(n)
}

#[test]
fn criterion1_exhaustive_soundness() {
    let functions = grid_functions();
    let mut source = shared().lock().unwrap();
    let started = Instant::now();
    let mut reports = 0usize;
    let mut graphs = 0usize;
    for n in 5..=8 {
        for m in size_range(n) {
            for f in &functions {
                let verdict = f.classify(DEFAULT_TOLERANCE).unwrap().verdict;
                let report = verify_bound_with(&mut *source, n, m, f, VERIFY_TOLERANCE).unwrap();
                assert!(
                    report.violations.is_empty(),
                    "violations at n={n} m={m} f={}",
                    f.describe()
                );
                let expected = match verdict {
                    CaseVerdict::CaseI => Direction::UpperBound,
                    CaseVerdict::CaseII => Direction::LowerBound,
                    other => panic!("grid function classified {other}"),
                };
                assert_eq!(report.bound.direction, expected);
                if matches!(f, DegreeFunction::Power { alpha } if alpha.fract() == 0.0) {
                    assert!(report.bound.exact.is_some(), "integer family lost exactness");
                }
                reports += 1;
                graphs = graphs.max(report.graph_count);
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "exhaustive sweep took {elapsed:?}"
    );
    println!(
        "criterion 1 (exhaustive soundness): PASS: {reports} (n,m,f) reports, \
         zero violations, largest class count {graphs}, {elapsed:?}"
    );
}

#[test]
fn criterion2_point_values() {
    let f = DegreeFunction::Power { alpha: 2.0 };
    let mut source = shared().lock().unwrap();

    let star = ChemGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let star_code = star.canonical_code().unwrap();
    let r54 = verify_bound_with(&mut *source, 5, 4, &f, VERIFY_TOLERANCE).unwrap();
    assert_eq!(r54.bound.total, 20.0);
    assert!(r54.attaining.contains(&star_code));

    let r65 = verify_bound_with(&mut *source, 6, 5, &f, VERIFY_TOLERANCE).unwrap();
    assert_eq!(r65.bound.total, 24.0);
    assert!(!r65.attaining.is_empty());
    for code in &r65.attaining {
        let g = ChemGraph::parse_graph6(code.as_str()).unwrap();
        let c = g.degree_vector();
        assert_eq!((c.n2, c.n3), (1, 0));
        assert!(c.n1 > 0 && c.n4 > 0);
    }

    let r76 = verify_bound_with(&mut *source, 7, 6, &f, VERIFY_TOLERANCE).unwrap();
    assert_eq!(r76.bound.total, 30.0);
    assert!(!r76.attaining.is_empty());
    for code in &r76.attaining {
        let g = ChemGraph::parse_graph6(code.as_str()).unwrap();
        let c = g.degree_vector();
        assert_eq!((c.n2, c.n3), (0, 1));
        assert!(c.n1 > 0 && c.n4 > 0);
    }

    let r55 = verify_bound_with(&mut *source, 5, 5, &f, VERIFY_TOLERANCE).unwrap();
    assert_eq!(r55.bound.total, 28.0);
    assert_eq!(r55.extremum, 26.0);
    assert!(r55.attaining.is_empty());
    assert!(r55.violations.is_empty());

    println!(
        "criterion 2 (point values): PASS: 20/24/30 attained as predicted, \
         (5,5) bound 28 vs maximum 26 not attained"
    );
}

#[test]
fn criterion3_closed_form_equivalence() {
    let alphas = [-2.0, -1.0, 0.5, 2.0, 3.0];
    let a_values = [0.25, 0.75, 2.0];
    let both: Vec<f64> = alphas.iter().chain(a_values.iter()).copied().collect();
    let mut checked = 0usize;
    let mut refused = 0usize;

    let mut check = |family: FunctionFamily, param: f64, n: usize| {
        for m in size_range(n) {
            match family.covered_range(param) {
                None => {
                    assert!(matches!(
                        closed_form_bound(family, param, n, m),
                        Err(BoundError::UnaddressedRange { .. })
                    ));
                    refused += 1;
                }
                Some(_) => {
                    let published = closed_form_bound(family, param, n, m).unwrap();
                    let generic = hf_bound(n, m, &family.instantiate(param, n)).unwrap().total;
                    assert!(
                        rel_close(published, generic, 1e-12),
                        "{family:?} param={param} n={n} m={m}: {published} vs {generic}"
                    );
                    checked += 1;
                }
            }
        }
    };

    for n in 5..=30 {
        for &p in &alphas {
            check(FunctionFamily::Power, p, n);
        }
        for &p in &a_values {
            check(FunctionFamily::SumExdeg, p, n);
            check(FunctionFamily::SumLodeg, p, n);
        }
        for &p in &both {
            check(FunctionFamily::LnMultZagreb1, p, n);
            check(FunctionFamily::LnMultZagreb2, p, n);
        }
    }
    for n in 11..=30 {
        check(FunctionFamily::ForgottenCoindex, n as f64, n);
    }

    let fbar = closed_form_bound(FunctionFamily::ForgottenCoindex, 11.0, 11, 10).unwrap();
    assert_eq!(fbar, 360.0);
    assert_eq!(vdfi_core::residue(11, 10), 0);

    println!(
        "criterion 3 (closed forms): PASS: {checked} agreements at 1e-12, \
         {refused} uncovered parameters refused, Fbar(11,10) = 360"
    );
}

#[test]
fn criterion4_classification_conformance() {
    let mut rng = SplitMix64(0x9e3779b97f4a7c15);
    let mut sampled = 0usize;
    let mut sample_range = |family: FunctionFamily, lo: f64, hi: f64, expect: CaseVerdict| {
        for _ in 0..1000 {
            let param = rng.range(lo, hi);
            let verdict = family
                .instantiate(param, 12)
                .classify(DEFAULT_TOLERANCE)
                .unwrap()
                .verdict;
            assert_eq!(verdict, expect, "{family:?} at {param}");
            assert_eq!(family.covered_range(param), Some(expect));
            sampled += 1;
        }
    };

    sample_range(FunctionFamily::Power, 1.001, 8.0, CaseVerdict::CaseI);
    sample_range(FunctionFamily::Power, -8.0, -0.001, CaseVerdict::CaseI);
    sample_range(FunctionFamily::Power, 0.001, 0.999, CaseVerdict::CaseII);

    sample_range(FunctionFamily::SumExdeg, 1.001, 4.0, CaseVerdict::CaseI);
    sample_range(
        FunctionFamily::SumExdeg,
        0.01,
        1.0 / 3.0 - 0.001,
        CaseVerdict::CaseI,
    );
    sample_range(FunctionFamily::SumExdeg, 0.501, 0.999, CaseVerdict::CaseII);

    let threshold = sum_lodeg_threshold();
    sample_range(
        FunctionFamily::SumLodeg,
        threshold + 0.001,
        4.0,
        CaseVerdict::CaseI,
    );
    let above = DegreeFunction::SumLodeg {
        a: threshold + 0.01,
    };
    let below = DegreeFunction::SumLodeg {
        a: threshold - 0.01,
    };
    assert_eq!(
        above.classify(DEFAULT_TOLERANCE).unwrap().verdict,
        CaseVerdict::CaseI
    );
    assert_ne!(
        below.classify(DEFAULT_TOLERANCE).unwrap().verdict,
        CaseVerdict::CaseI
    );

    sample_range(FunctionFamily::LnMultZagreb1, -4.0, -0.001, CaseVerdict::CaseI);
    sample_range(FunctionFamily::LnMultZagreb1, 0.001, 4.0, CaseVerdict::CaseII);
    sample_range(FunctionFamily::LnMultZagreb2, 0.001, 4.0, CaseVerdict::CaseI);
    sample_range(FunctionFamily::LnMultZagreb2, -4.0, -0.001, CaseVerdict::CaseII);

    for n in 11..=40 {
        let verdict = DegreeFunction::ForgottenCoindex { n }
            .classify(DEFAULT_TOLERANCE)
            .unwrap()
            .verdict;
        assert_eq!(verdict, CaseVerdict::CaseI, "Fbar order {n}");
    }
    let at_ten = DegreeFunction::ForgottenCoindex { n: 10 }
        .classify(DEFAULT_TOLERANCE)
        .unwrap()
        .verdict;
    assert_ne!(at_ten, CaseVerdict::CaseI);

    println!(
        "criterion 4 (classification conformance): PASS: {sampled} sampled \
         parameters, sum-lodeg flip at threshold ± 0.01, Fbar 11..=40 CaseI and not at 10"
    );
}

#[test]
fn criterion5_separation_brute_force() {
    let mut verified = 0usize;
    for f in grid_functions() {
        let class = f.classify(DEFAULT_TOLERANCE).unwrap();
        let sep = gamma_separation(class.xi1, class.xi2, 100).unwrap();
        assert!(sep.verified, "{} failed separation", f.describe());
        assert_eq!(sep.case, class.verdict);
        verified += sep.checked_pairs;
    }
    println!(
        "criterion 5 (separation brute force): PASS: 7 functions, \
         {verified} (n2,n3) pairs cleared up to total 100"
    );
}

#[test]
fn criterion6_identity_suite() {
    let functions = grid_functions();
    let mut source = shared().lock().unwrap();
    let mut graphs = 0usize;
    let mut exact_checks = 0usize;
    for n in 2..=8 {
        for m in 0..=size_cap(n) {
            for g in source.connected(n, m).unwrap() {
                graphs += 1;
                let counts = g.degree_vector();
                for f in &functions {
                    let h = h_f(&g, f).unwrap();
                    let (ti, tibar) = ti_pair(&g, f).unwrap();
                    let scaled = (n as f64 - 1.0) * h.value;
                    assert!(
                        rel_close(ti.value + tibar.value, scaled, 1e-12),
                        "TI identity at n={n} m={m} f={}",
                        f.describe()
                    );

                    let [f1, _, _, f4] = f.values().unwrap();
                    let base =
                        ((4.0 * f1 - f4) * n as f64 + 2.0 * (f4 - f1) * m as f64) / 3.0;
                    let gamma = gamma_f(&g, f).unwrap();
                    assert!(
                        rel_close(h.value, base + gamma, 1e-12),
                        "decomposition at n={n} m={m} f={}",
                        f.describe()
                    );

                    if let (Some(h_exact), Some(values), Some((xi1_3, xi2_3))) =
                        (h.exact, f.exact_values(), f.xi_thirds())
                    {
                        let base_thirds = (4 * values[0] - values[3]) * n as i64
                            + 2 * (values[3] - values[0]) * m as i64;
                        let gamma_thirds =
                            counts.n2 as i64 * xi1_3 + counts.n3 as i64 * xi2_3;
                        assert_eq!(3 * h_exact, base_thirds + gamma_thirds);
                        let (ti_e, tibar_e) = (ti.exact.unwrap(), tibar.exact.unwrap());
                        assert_eq!(ti_e + tibar_e, (n as i64 - 1) * h_exact);
                        exact_checks += 1;
                    }
                }
            }
        }
    }
    println!(
        "criterion 6 (identity suite): PASS: {graphs} graphs x 7 functions, \
         {exact_checks} of them re-proved in exact integers"
    );
}

#[test]
fn criterion7_extremal_construction() {
    let functions = grid_functions();
    let zagreb = DegreeFunction::Power { alpha: 2.0 };
    let mut source = shared().lock().unwrap();
    let mut feasible = 0usize;
    let mut infeasible = 0usize;
    for n in 5..=8 {
        for m in size_range(n) {
            let solution = construct_extremal(n, m).unwrap();
            let Some(witness) = &solution.witness else {
                infeasible += 1;
                continue;
            };
            feasible += 1;
            for f in &functions {
                let bound = hf_bound(n, m, f).unwrap();
                let h = h_f(witness, f).unwrap();
                let attained = match h.exact {
                    Some(exact) => bound.attained_by_exact(exact) == Some(true),
                    None => bound.attained_by(h.value, VERIFY_TOLERANCE),
                };
                assert!(attained, "witness misses bound at n={n} m={m} f={}", f.describe());
            }
            let code = witness.canonical_code().unwrap();
            let report = verify_bound_with(&mut *source, n, m, &zagreb, VERIFY_TOLERANCE).unwrap();
            assert!(report.attaining.contains(&code));
        }
    }

    for (n, m) in [(6, 6), (5, 9)] {
        let solution = construct_extremal(n, m).unwrap();
        assert!(!solution.feasible());
        assert_eq!(solution.reason, Some(InfeasibilityReason::ErdosGallai));
    }

    println!(
        "criterion 7 (extremal construction): PASS: {feasible} witnesses attain \
         all 7 bounds and match enumerated codes, {infeasible} infeasible sizes, \
         (6,6) and (5,9) refused by Erdos-Gallai"
    );
}

#[test]
fn criterion8_infrastructure() {
    let mut source = shared().lock().unwrap();
    let mut round_trips = 0usize;
    for n in 2..=8 {
        for m in 0..=size_cap(n) {
            for g in source.connected(n, m).unwrap() {
                let code = g.to_graph6();
                let back = ChemGraph::parse_graph6(&code).unwrap();
                assert_eq!(back, g);
                assert_eq!(back.canonical_code().unwrap().as_str(), code.as_str());
                round_trips += 1;
            }
        }
    }

    let order5: usize = (4..=size_cap(5))
        .map(|m| source.connected(5, m).unwrap().len())
        .sum();
    assert_eq!(order5, 21);

    let mut serial = Enumerator::with_workers(1);
    for n in 5..=8 {
        for m in size_range(n) {
            let a: Vec<String> = serial
                .connected(n, m)
                .unwrap()
                .iter()
                .map(|g| g.to_graph6())
                .collect();
            let b: Vec<String> = source
                .connected(n, m)
                .unwrap()
                .iter()
                .map(|g| g.to_graph6())
                .collect();
            assert_eq!(a, b, "worker-count mismatch at n={n} m={m}");
        }
    }

    println!(
        "criterion 8 (infrastructure): PASS: {round_trips} graph6 round trips, \
         21 classes at order 5, worker counts 1 and 4 agree through order 8"
    );
}

#[test]
fn witnessed_solutions_match_forced_counts() {
    // Supporting check behind criteria 2 and 7: whenever a witness exists
    // its degree vector is exactly the residue-forced one.
    for n in 5..=8 {
        for m in size_range(n) {
            let solution = construct_extremal(n, m).unwrap();
            if let Some(w) = &solution.witness {
                assert_eq!(Some(w.degree_vector()), solution.counts);
                assert_eq!(
                    solution.counts,
                    Some(forced(n, m)),
                    "counts drifted at n={n} m={m}"
                );
            }
        }
    }
}

fn forced(n: usize, m: usize) -> DegreeVector {
    vdfi_core::solve_counts(n, m).unwrap()
}
