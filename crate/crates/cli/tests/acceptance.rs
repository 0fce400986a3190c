//! Acceptance gate: twelve end-to-end criteria over the bundled fixtures.
//! Each test prints exactly one pass/fail line.

use gvcalc::analytics::pairing;
use gvcalc::calc::{linear_independence, SampleConfig, Session};
use gvcalc::pres::{g_vector_of_module, homotopy_hom_dim, minimal_presentation, tau, GVector};
use gvcalc::quiver::AlgebraSpec;
use gvcalc::rep::{hom_dim, Representation};
use gvcalc::test_fixtures::{a1_spec, a2_spec, a3_rel_spec, a3_spec, kronecker_spec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

fn verdict(n: usize, label: &str, ok: bool) {
    println!("criterion {n:02} ({label}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n:02} ({label}) failed");
}

fn fixtures() -> Vec<(&'static str, AlgebraSpec)> {
    vec![
        ("a2", a2_spec()),
        ("a3", a3_spec()),
        ("a3-rel", a3_rel_spec()),
        ("k2", kronecker_spec(2)),
        ("k3", kronecker_spec(3)),
    ]
}

fn session_with(spec: AlgebraSpec, seed: u64, samples: usize) -> Session {
    Session::new(
        spec,
        SampleConfig {
            seed,
            samples,
            ..SampleConfig::default()
        },
    )
    .unwrap()
}

fn session(spec: AlgebraSpec, seed: u64) -> Session {
    session_with(spec, seed, 7)
}

fn random_module(s: &Session, rng: &mut ChaCha8Rng) -> Representation {
    loop {
        let g: GVector = s.random_g(2, rng);
        if g.iter().all(|&x| x == 0) {
            continue;
        }
        let samples = s.sample_general(&g);
        let m = samples[rng.gen_range(0..samples.len())].cokernel_module();
        if m.total_dim() > 0 {
            return m;
        }
    }
}

fn dot(g: &GVector, dims: &[usize]) -> i64 {
    g.iter().zip(dims).map(|(&a, &b)| a * b as i64).sum()
}

fn pairing_of(s: &Session, g: &GVector) -> i64 {
    pairing(g, &s.d_of_g(g).0)
}

#[test]
fn criterion_01_kronecker_pairing() {
    let mut ok = true;
    for m in [3usize, 4, 5] {
        let s = session(kronecker_spec(m), 1);
        let g = vec![1i64, -1];
        ok &= pairing_of(&s, &g) == 2 - m as i64;
        ok &= !s.is_tame(&g);
    }
    verdict(1, "kronecker pairing 2-m, wild", ok);
}

#[test]
fn criterion_02_ar_formula() {
    let mut ok = true;
    let mut pairs = 0;
    for (_, spec) in fixtures() {
        let s = session(spec, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1002);
        for _ in 0..12 {
            let m = random_module(&s, &mut rng);
            let n = random_module(&s, &mut rng);
            let g = g_vector_of_module(&m);
            ok &= dot(&g, n.dims())
                == hom_dim(&m, &n) as i64 - hom_dim(&n, &tau(&m)) as i64;
            pairs += 1;
        }
    }
    verdict(2, "AR formula on ≥50 pairs", ok && pairs >= 50);
}

#[test]
fn criterion_03_dual_path_e_invariant() {
    let mut ok = true;
    for (_, spec) in fixtures() {
        let s = session(spec, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1003);
        for _ in 0..50 {
            let m = random_module(&s, &mut rng);
            let n = random_module(&s, &mut rng);
            let a = minimal_presentation(&m);
            let b = minimal_presentation(&n);
            ok &= homotopy_hom_dim(&a, &b) == hom_dim(&n, &tau(&m));
        }
    }
    verdict(3, "homotopy hom equals tau-hom, 50 pairs per fixture", ok);
}

fn summand_set(s: &Session, g: &GVector) -> (Vec<(GVector, usize)>, f64) {
    let rep = s.generic_decomposition(g);
    let mut v: Vec<(GVector, usize)> = rep
        .summands
        .iter()
        .map(|e| (e.g.clone(), e.multiplicity))
        .collect();
    v.sort();
    (v, rep.agreement_ratio)
}

#[test]
fn criterion_04_generic_decompositions() {
    let mut ok = true;
    let a2 = session(a2_spec(), 4);
    let (v, r) = summand_set(&a2, &vec![2, -1]);
    ok &= v == vec![(vec![1, -1], 1), (vec![1, 0], 1)] && r >= 0.8;
    let k2 = session(kronecker_spec(2), 4);
    let (v, r) = summand_set(&k2, &vec![2, -2]);
    ok &= v == vec![(vec![1, -1], 2)] && r >= 0.8;
    let k3 = session(kronecker_spec(3), 4);
    let rep = k3.generic_decomposition(&vec![1, -1]);
    ok &= rep.summands.len() == 1
        && rep.summands[0].multiplicity == 1
        && rep.summands[0].indecomposable
        && rep.agreement_ratio >= 0.8;
    verdict(4, "known generic decompositions, agreement ≥ 0.8", ok);
}

#[test]
fn criterion_05_rigid_sign_vectors() {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for (_, spec) in fixtures() {
        let s = session(spec, 5);
        let n = s.algebra().vertex_count();
        for _ in 0..20 {
            let mut g: GVector = (0..n).map(|_| rng.gen_range(0i64..=4)).collect();
            if g.iter().all(|&x| x == 0) {
                g[0] = 1;
            }
            let neg: GVector = g.iter().map(|&x| -x).collect();
            ok &= s.is_tame(&g) && s.e_invariant(&g, &g) == 0;
            ok &= s.is_tame(&neg) && s.e_invariant(&neg, &neg) == 0;
        }
    }
    verdict(5, "positive and negative g are tame and rigid", ok);
}

#[test]
fn criterion_06_dim_z_arrow_formula() {
    let mut ok = true;
    let cases: Vec<(AlgebraSpec, GVector)> = vec![
        (kronecker_spec(2), vec![1, -1]),
        (kronecker_spec(3), vec![1, -1]),
        (a2_spec(), vec![1, -1]),
        (a2_spec(), vec![2, -1]),
    ];
    for (spec, g) in cases {
        let s = session(spec.clone(), 6);
        let (d, _) = s.d_of_g(&g);
        let expect: i64 = spec
            .quiver
            .arrows
            .iter()
            .map(|a| (d[a.source] * d[a.target]) as i64)
            .sum();
        ok &= s.dim_z(&g).0 == expect;
    }
    verdict(6, "dim Z matches arrow sum formula", ok);
}

#[test]
fn criterion_07_pairwise_e_matrix() {
    let cases: Vec<(AlgebraSpec, GVector)> = vec![
        (a2_spec(), vec![2, -1]),
        (kronecker_spec(2), vec![2, -2]),
        (kronecker_spec(3), vec![1, -1]),
    ];
    let mut ok = true;
    for (spec, g) in cases {
        let mut pass = false;
        for samples in [7usize, 15] {
            let s = session_with(spec.clone(), 7, samples);
            let gs: Vec<GVector> = s
                .generic_decomposition(&g)
                .summands
                .iter()
                .map(|e| e.g.clone())
                .collect();
            pass = (0..gs.len()).all(|i| {
                (0..gs.len()).all(|j| i == j || s.e_invariant(&gs[i], &gs[j]) == 0)
            });
            if pass {
                break;
            }
        }
        ok &= pass;
    }
    verdict(7, "summand e-matrix zero off-diagonal", ok);
}

#[test]
fn criterion_08_summand_independence() {
    let mut ok = true;
    let fx = vec![a1_spec(), a2_spec(), a3_rel_spec(), kronecker_spec(2)];
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    for spec in fx {
        let s = session(spec, 8);
        let n = s.algebra().vertex_count();
        for _ in 0..25 {
            let g = s.random_g(5, &mut rng);
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            let (inds, _) = s.ind_summands(&g);
            ok &= linear_independence(&inds) && inds.len() <= n;
        }
    }
    verdict(8, "indecomposable summands linearly independent, ≤ n", ok);
}

#[test]
fn criterion_09_closed_form_pairing() {
    let mut ok = true;
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    for (_, spec) in fixtures() {
        let s = session(spec, 9);
        for _ in 0..20 {
            let g = s.random_g(3, &mut rng);
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            if let Ok(cf) = s.closed_form_pairing(&g) {
                ok &= cf == pairing_of(&s, &g);
                checked += 1;
            }
        }
    }
    verdict(9, "closed-form pairing agrees where applicable", ok && checked > 0);
}

#[test]
fn criterion_10_e_via_min_hom() {
    let mut agree7 = 0usize;
    let mut total = 0usize;
    let mut all15 = true;
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut cases: Vec<(AlgebraSpec, GVector, GVector)> = Vec::new();
    for (_, spec) in fixtures() {
        let probe = session(spec.clone(), 10);
        let n = probe.algebra().vertex_count();
        while cases.iter().filter(|(sp, _, _)| *sp == spec).count() < 6 {
            let g: GVector = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
            let h: GVector = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
            if g.iter().all(|&x| x == 0) || h.iter().all(|&x| x == 0) {
                continue;
            }
            if probe.min_hom(&g, &h).is_err() {
                continue;
            }
            cases.push((spec.clone(), g, h));
        }
    }
    for (spec, g, h) in &cases {
        let s7 = session(spec.clone(), 10);
        let rhs = |s: &Session| {
            s.min_hom(g, h).map(|mh| mh as i64 - pairing(g, &s.d_of_g(h).0))
        };
        total += 1;
        if rhs(&s7) == Ok(s7.e_invariant(g, h) as i64) {
            agree7 += 1;
        } else {
            let s15 = session_with(spec.clone(), 10, 15);
            all15 &= rhs(&s15) == Ok(s15.e_invariant(g, h) as i64);
        }
    }
    let ok = agree7 * 10 >= total * 9 && all15;
    verdict(10, "e = minHom - pairing (≥90% at s=7, all at s=15)", ok);
}

#[test]
fn criterion_11_tame_nonnegative_pairing() {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    for (_, spec) in fixtures() {
        let s = session(spec, 11);
        for _ in 0..20 {
            let g = s.random_g(3, &mut rng);
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            if s.is_tame(&g) {
                ok &= pairing_of(&s, &g) >= 0;
            }
        }
    }
    verdict(11, "no tame g with negative pairing", ok);
}

#[test]
fn criterion_12_machine_determinism() {
    let bin = env!("CARGO_BIN_EXE_gvcalc");
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/k3.json");
    let mut outputs = Vec::new();
    for _ in 0..3 {
        let out = Command::new(bin)
            .args([
                "component",
                fixture,
                "1,-1",
                "--machine",
                "--seed",
                "42",
                "--allow-low-confidence",
            ])
            .output()
            .expect("failed to run gvcalc");
        assert!(out.status.success(), "gvcalc exited nonzero");
        outputs.push(out.stdout);
    }
    let ok = outputs[0] == outputs[1] && outputs[1] == outputs[2] && !outputs[0].is_empty();
    verdict(12, "machine mode byte-identical across runs", ok);
}
