use qudit_magic_core::engine::{depolarizing_noise, qutrit_noise, GeneralMap, NoiseVector};
use qudit_magic_core::field::GFVector;
use qudit_magic_core::gate::canonical_gate;
use qudit_magic_core::qrm::{build_qrm, QrmCode};
use qudit_magic_core::sim::*;
use qudit_magic_core::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_state(d: u32, n: usize, rng: &mut ChaCha8Rng) -> StateVector {
    let dim = (d as usize).pow(n as u32);
    let amps = (0..dim)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector::from_amplitudes(d, n, amps)
        .unwrap()
        .normalized()
}

fn random_vector(d: u32, n: usize, rng: &mut ChaCha8Rng) -> GFVector {
    GFVector::new(d, (0..n).map(|_| rng.gen_range(0..d))).unwrap()
}

fn full_projector(code: &QrmCode, s: &StateVector) -> ProjectionOutcome {
    let d = code.d();
    let z = project_stabilizer_fast(s, PauliKind::Z, code, &GFVector::zeros(d, code.lz().dim()))
        .unwrap();
    project_stabilizer(
        &z.post_state,
        PauliKind::X,
        code,
        &GFVector::zeros(d, code.lx().dim()),
    )
    .unwrap()
}

fn vector_of(d: u32, n: usize, mut idx: usize) -> GFVector {
    let mut e = vec![0u32; n];
    for slot in e.iter_mut().rev() {
        *slot = (idx % d as usize) as u32;
        idx /= d as usize;
    }
    GFVector::new(d, e).unwrap()
}

fn trichotomy(d: u32, m: u32) {
    let code = build_qrm(d, m).unwrap();
    let n = code.n();
    let c = code_constant(&code);
    let dual = code.lx_dual();
    let plus: Vec<StateVector> = (0..d)
        .map(|j| logical_plus_state(&code, j).unwrap())
        .collect();
    let (mut detected, mut clean, mut undetected) = (0usize, 0usize, 0usize);
    for idx in 0..(d as usize).pow(n as u32) {
        let v = vector_of(d, n, idx);
        let out = full_projector(&code, &plus_basis_state(d, n, &v).unwrap());
        if !dual.contains(&v) {
            assert!(out.squared_norm < 1e-12);
            detected += 1;
            continue;
        }
        assert!((out.squared_norm - c).abs() < 1e-12);
        let j = (0..d)
            .find(|&j| code.lz().contains(&v.add(&GFVector::constant(d, n, d - j))))
            .expect("v − j·1 lies in L_Z");
        // Σ_i x_i ≡ −t on |t_L⟩, so the label flips sign.
        let overlap = plus[((d - j) % d) as usize]
            .inner(&out.post_state)
            .norm_sqr();
        assert!((overlap - c).abs() < 1e-12);
        if j == 0 {
            clean += 1;
        } else {
            undetected += 1;
        }
    }
    let lz = (d as usize).pow(code.lz().dim() as u32);
    assert_eq!(clean, lz);
    assert_eq!(undetected, (d as usize - 1) * lz);
    assert_eq!(detected + clean + undetected, (d as usize).pow(n as u32));
}

#[test]
fn projection_trichotomy_ququint() {
    trichotomy(5, 1);
}

#[test]
fn projection_trichotomy_qutrit() {
    trichotomy(3, 2);
}

#[test]
fn plus_state_projection_constant() {
    for (d, m) in [(5, 1), (3, 2)] {
        let code = build_qrm(d, m).unwrap();
        let s = plus_basis_state(d, code.n(), &GFVector::zeros(d, code.n())).unwrap();
        let p = full_projector(&code, &s);
        assert!((p.squared_norm - code_constant(&code)).abs() < 1e-12);
    }
}

#[test]
fn transversal_gate_acts_logically() {
    for (d, m) in [(5, 1), (3, 2)] {
        let code = build_qrm(d, m).unwrap();
        let gate = canonical_gate(d, m).unwrap();
        let ones = GFVector::constant(d, code.n(), 1);
        for j in 0..d {
            let s = logical_basis_state(&code, j).unwrap();
            let out = apply_transversal_diagonal(&s, &gate, &ones).unwrap();
            let a =
                -2.0 * std::f64::consts::PI * gate.lambda_at(j) as f64 / gate.denominator() as f64;
            let expected = s.scale(Complex::new(a.cos(), a.sin()));
            assert!(out.distance(&expected) < 1e-10);
            let amps = logical_amplitudes(&out, &code).unwrap();
            for (t, z) in amps.iter().enumerate() {
                if t as u32 != j {
                    assert!(z.norm() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn logical_operators() {
    let code = build_qrm(5, 1).unwrap();
    let zero = logical_basis_state(&code, 0).unwrap();
    let amps = logical_amplitudes(&zero, &code).unwrap();
    assert!((amps[0] - Complex::new(1.0, 0.0)).norm() < 1e-12);
    assert!(amps[1..].iter().all(|z| z.norm() < 1e-12));
    for j in 0..5 {
        let s = logical_basis_state(&code, j).unwrap();
        let out = apply_pauli(&s, PauliKind::Z, &code.z_logical()).unwrap();
        // Σ_i x_i ≡ −j on |j_L⟩, so Z[(d−1)·1] gives ω^j.
        let phase = s.inner(&out);
        let a = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
        assert!((phase - Complex::new(a.cos(), a.sin())).norm() < 1e-12);
    }
}

#[test]
fn projectors_idempotent_and_hermitian() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let code = build_qrm(5, 1).unwrap();
    for half in [PauliKind::X, PauliKind::Z] {
        let r = match half {
            PauliKind::X => code.lx().dim(),
            PauliKind::Z => code.lz().dim(),
        };
        for _ in 0..3 {
            let k = random_vector(5, r, &mut rng);
            let a = random_state(5, 4, &mut rng);
            let b = random_state(5, 4, &mut rng);
            let pa = project_stabilizer(&a, half, &code, &k).unwrap().post_state;
            let ppa = project_stabilizer(&pa, half, &code, &k).unwrap().post_state;
            assert!(pa.distance(&ppa) < 1e-12);
            let pb = project_stabilizer(&b, half, &code, &k).unwrap().post_state;
            assert!((b.inner(&pa) - pb.inner(&a)).norm() < 1e-12);
        }
    }
}

#[test]
fn fast_projection_matches_group_average() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (d, m) in [(5, 1), (3, 2)] {
        let code = build_qrm(d, m).unwrap();
        let n = code.n();
        for _ in 0..3 {
            let s = random_state(d, n, &mut rng);
            let k = random_vector(d, code.lz().dim(), &mut rng);
            let slow = project_stabilizer(&s, PauliKind::Z, &code, &k).unwrap();
            let fast = project_stabilizer_fast(&s, PauliKind::Z, &code, &k).unwrap();
            assert!(slow.post_state.distance(&fast.post_state) < 1e-12);
            assert!((slow.squared_norm - fast.squared_norm).abs() < 1e-12);
        }
    }
}

#[test]
fn correction_restores_trivial_syndrome() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let code = build_qrm(3, 2).unwrap();
    let gate = canonical_gate(3, 2).unwrap();
    let n = code.n();
    let r = code.lz().dim();
    for _ in 0..4 {
        let k = random_vector(3, r, &mut rng);
        let w = clifford_correction_vector(&code, &k).unwrap();
        for (g, &ki) in code.lz().generators().iter().zip(k.entries()) {
            assert_eq!(w.dot(g), ki);
        }
        let s = random_state(3, n, &mut rng);
        let projected = project_stabilizer_fast(&s, PauliKind::Z, &code, &k)
            .unwrap()
            .post_state;
        let corrected = apply_cm(&projected, &gate, &w).unwrap();
        let again =
            project_stabilizer_fast(&corrected, PauliKind::Z, &code, &GFVector::zeros(3, r))
                .unwrap();
        assert!(again.post_state.distance(&corrected) < 1e-12);
        for g in code.lz().generators() {
            let lhs = apply_cm(&apply_pauli(&s, PauliKind::Z, &g).unwrap(), &gate, &w).unwrap();
            let rhs = apply_pauli(&apply_cm(&s, &gate, &w).unwrap(), PauliKind::Z, &g).unwrap();
            let e = (3 - w.dot(&g)) % 3;
            let a = 2.0 * std::f64::consts::PI * e as f64 / 3.0;
            assert!(lhs.distance(&rhs.scale(Complex::new(a.cos(), a.sin()))) < 1e-12);
        }
    }
}

fn random_simplex(d: usize, rng: &mut ChaCha8Rng) -> NoiseVector {
    let raw: Vec<f64> = (0..d).map(|_| -rng.gen_range(1e-9f64..1.0).ln()).collect();
    NoiseVector::normalized(raw, Default::default()).unwrap()
}

#[test]
fn round_matches_analytic_map_ququint() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let code = build_qrm(5, 1).unwrap();
    let gate = canonical_gate(5, 1).unwrap();
    let map = GeneralMap::new(&code).unwrap();
    let resp = ProtocolResponse::compute(&code, &gate, true).unwrap();
    let resp_dag = ProtocolResponse::compute(&code, &gate.dagger(), true).unwrap();
    for _ in 0..20 {
        let noise = random_simplex(5, &mut rng);
        let sim = resp.evaluate(&noise).unwrap();
        let ana = map.iterate(&noise).unwrap();
        assert!((sim.success_probability - ana.success_probability).abs() < 1e-9);
        for (a, b) in sim.output.f().iter().zip(ana.output.f()) {
            assert!((a - b).abs() < 1e-9);
        }
        assert_eq!(sim.output.basis(), ana.output.basis());
        // Second round starts from the M†-diagonal state.
        let second = resp_dag.evaluate(&sim.output).unwrap();
        let second_ana = map.iterate(&ana.output).unwrap();
        for (a, b) in second.output.f().iter().zip(second_ana.output.f()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
    assert!(resp.max_off_diagonal() < 1e-12);
    assert!(resp.max_branch_spread() < 1e-12);
}

#[test]
fn round_matches_analytic_map_qutrit() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let code = build_qrm(3, 2).unwrap();
    let gate = canonical_gate(3, 2).unwrap();
    let map = GeneralMap::new(&code).unwrap();
    let resp = ProtocolResponse::compute(&code, &gate, true).unwrap();
    for _ in 0..5 {
        let noise = random_simplex(3, &mut rng);
        let sim = resp.evaluate(&noise).unwrap();
        let ana = map.iterate(&noise).unwrap();
        assert!((sim.success_probability - ana.success_probability).abs() < 1e-9);
        for (a, b) in sim.output.f().iter().zip(ana.output.f()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
    assert!(resp.max_branch_spread() < 1e-12);
    assert!(resp.max_off_diagonal() < 1e-12);
    let round = simulate_round(&code, &gate, &depolarizing_noise(3, 0.1).unwrap(), true).unwrap();
    assert!((round.result.output.f().iter().sum::<f64>() - 1.0).abs() < 1e-12);
}

#[test]
fn qutrit_success_probability_expansion() {
    let code = build_qrm(3, 2).unwrap();
    let gate = canonical_gate(3, 2).unwrap();
    let resp = ProtocolResponse::compute(&code, &gate, true).unwrap();
    let h = 1e-3;
    for theta in [0.0, std::f64::consts::FRAC_PI_4, 0.3] {
        let dir = [theta.cos().powi(2), theta.sin().powi(2)];
        let p = |e: f64| {
            resp.evaluate(&NoiseVector::along(e, &dir))
                .unwrap()
                .success_probability
        };
        let c1 = (p(h) - p(-h)) / (2.0 * h);
        let c2 = (p(h) + p(-h) - 2.0) / (2.0 * h * h);
        assert!((c1 + 8.0).abs() < 1e-4, "c1={c1}");
        assert!((c2 - 31.0 - (4.0 * theta).cos()).abs() < 1e-2, "c2={c2}");
    }
    let p = resp
        .evaluate(&qutrit_noise(0.1, std::f64::consts::FRAC_PI_4).unwrap())
        .unwrap();
    assert!(p.success_probability < 1.0 - 8.0 * 0.1 + 30.0 * 0.01 + 0.05);
}

#[test]
fn postselection_without_correction() {
    let code = build_qrm(5, 1).unwrap();
    let gate = canonical_gate(5, 1).unwrap();
    let on = ProtocolResponse::compute(&code, &gate, true).unwrap();
    let off = ProtocolResponse::compute(&code, &gate, false).unwrap();
    assert_eq!(off.branches(), 1);
    for eps in [0.0, 0.05, 0.2] {
        let noise = depolarizing_noise(5, eps).unwrap();
        let a = on.evaluate(&noise).unwrap();
        let b = off.evaluate(&noise).unwrap();
        assert!(b.success_probability < a.success_probability);
        assert!(
            (b.success_probability - a.success_probability * code_constant(&code)).abs() < 1e-12
        );
    }
}

#[test]
fn plus_states_are_shift_eigenstates() {
    let v = GFVector::new(5, [1, 2, 3, 4]).unwrap();
    let s = plus_basis_state(5, 4, &v).unwrap();
    assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    for idx in 0..625 {
        let u = vector_of(5, 4, idx);
        let e = v.dot(&u);
        let a = 2.0 * std::f64::consts::PI * e as f64 / 5.0;
        let shifted = apply_pauli(&s, PauliKind::X, &u).unwrap();
        assert!(shifted.distance(&s.scale(Complex::new(a.cos(), a.sin()))) < 1e-12);
        // Z[u] moves the label to v − u.
        let moved = apply_pauli(&s, PauliKind::Z, &u).unwrap();
        let target = plus_basis_state(5, 4, &v.add(&u.neg())).unwrap();
        assert!(moved.distance(&target) < 1e-12);
    }
}
