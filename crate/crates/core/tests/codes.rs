use qudit_magic_core::code::coset_min_weight;
use qudit_magic_core::enumerator::{macwilliams_transform, weight_enumerator_bruteforce};
use qudit_magic_core::field::GFVector;
use qudit_magic_core::gate::{
    canonical_gate, exhaustive_members, lambda_eval, lemma_check, verify_membership, MagicGate,
};
use qudit_magic_core::qrm::{
    build_qrm, code_distance, reference_generators, validate_css, verify_transversality_classical,
    QrmCode, DEFAULT_DISTANCE_CAP,
};
use qudit_magic_core::reed_muller::{rm_code, rm_codeword};
use qudit_magic_core::LinearCode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn v(d: u32, e: &[u32]) -> GFVector {
    GFVector::new(d, e.iter().copied()).unwrap()
}

fn all_vectors(d: u32, n: usize) -> Vec<GFVector> {
    (0..(d as usize).pow(n as u32))
        .map(|mut i| {
            let mut e = vec![0u32; n];
            for s in e.iter_mut().rev() {
                *s = (i % d as usize) as u32;
                i /= d as usize;
            }
            GFVector::new(d, e).unwrap()
        })
        .collect()
}

fn random_code(d: u32, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let gens: Vec<GFVector> = (0..k)
            .map(|_| GFVector::new(d, (0..n).map(|_| rng.gen_range(0..d))).unwrap())
            .collect();
        let c = LinearCode::from_generators(d, n, &gens).unwrap();
        if c.dim() == k {
            return c;
        }
    }
}

#[test]
fn span_sizes() {
    assert_eq!(
        LinearCode::zero(5, 4).unwrap().span().unwrap(),
        vec![GFVector::zeros(5, 4)]
    );
    let q5 = build_qrm(5, 1).unwrap();
    let lz =
        LinearCode::from_generators(5, 4, &[v(5, &[1, 2, 3, 4]), v(5, &[1, 4, 4, 1])]).unwrap();
    assert_eq!(lz.span().unwrap().len(), 25);
    assert_eq!(q5.lz(), &lz);
    assert_eq!(build_qrm(3, 2).unwrap().lz().span().unwrap().len(), 243);
}

#[test]
fn duals() {
    let ones = LinearCode::from_generators(5, 4, &[GFVector::constant(5, 4, 1)]).unwrap();
    let dual = ones.dual();
    assert_eq!(dual.dim(), 3);
    for w in dual.span().unwrap() {
        assert_eq!(w.entries().iter().sum::<u32>() % 5, 0);
    }
    let q5 = build_qrm(5, 1).unwrap();
    assert_eq!(&q5.lx_extended().dual(), q5.lz());

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let c = random_code(3, 5, 2, &mut rng);
    let dual = c.dual();
    let words = c.span().unwrap();
    let expected: Vec<GFVector> = all_vectors(3, 5)
        .into_iter()
        .filter(|x| words.iter().all(|w| w.dot(x) == 0))
        .collect();
    assert_eq!(expected.len(), 27);
    for x in &expected {
        assert!(dual.contains(x));
    }
    assert_eq!(dual.span().unwrap().len(), expected.len());
}

#[test]
fn shortening() {
    let full = rm_code(3, 2, false).unwrap();
    let short = full.shorten().unwrap();
    assert_eq!(short, rm_code(3, 2, true).unwrap());
    assert_eq!(short.dim() + 1, full.dim());

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let c = random_code(5, 4, 2, &mut rng);
    let expected: Vec<GFVector> = c
        .span()
        .unwrap()
        .into_iter()
        .filter(|w| w.entries()[0] == 0)
        .map(|w| GFVector::new(5, w.entries()[1..].iter().copied()).unwrap())
        .collect();
    let s = c.shorten().unwrap();
    assert_eq!(s.span().unwrap().len(), expected.len());
    for w in &expected {
        assert!(s.contains(w));
    }
}

#[test]
fn reed_muller_codewords() {
    assert_eq!(
        rm_codeword(3, 2, &[0, 1], 0, true).unwrap(),
        v(3, &[1, 2, 0, 1, 2, 0, 1, 2])
    );
    assert_eq!(
        rm_codeword(3, 2, &[0, 1], 0, false).unwrap(),
        v(3, &[0, 1, 2, 0, 1, 2, 0, 1, 2])
    );
    let c = rm_code(5, 1, true).unwrap();
    assert_eq!(
        c,
        LinearCode::from_generators(5, 4, &[v(5, &[1, 2, 3, 4])]).unwrap()
    );
}

#[test]
fn macwilliams_against_bruteforce() {
    let rm = rm_code(5, 1, true).unwrap();
    let w = weight_enumerator_bruteforce(&rm).unwrap();
    assert_eq!(
        macwilliams_transform(&w, 1).unwrap(),
        weight_enumerator_bruteforce(&rm.dual()).unwrap()
    );
    let q3 = build_qrm(3, 2).unwrap();
    let wx = weight_enumerator_bruteforce(&q3.lx_extended()).unwrap();
    assert_eq!(
        macwilliams_transform(&wx, 3).unwrap(),
        weight_enumerator_bruteforce(q3.lz()).unwrap()
    );
}

#[test]
fn canonical_form_of_qutrit_stabilizer() {
    let lz = build_qrm(3, 2).unwrap().lz().clone();
    let (g, perm) = lz.canonical_generator_form();
    assert_eq!(g.len(), 5);
    for (i, row) in g.iter().enumerate() {
        for j in 0..5 {
            assert_eq!(row.entries()[j], (i == j) as u32);
        }
    }
    let back: Vec<GFVector> = g
        .iter()
        .map(|row| {
            let mut e = vec![0u32; 8];
            for (i, &p) in perm.iter().enumerate() {
                e[p] = row.entries()[i];
            }
            GFVector::new(3, e).unwrap()
        })
        .collect();
    assert_eq!(LinearCode::from_generators(3, 8, &back).unwrap(), lz);
}

#[test]
fn coset_weights() {
    let full = LinearCode::full(3, 4).unwrap();
    assert_eq!(
        coset_min_weight(&full, &LinearCode::zero(3, 4).unwrap(), 4),
        Some(1)
    );
    for (d, m) in [(5, 1), (3, 2)] {
        let q = build_qrm(d, m).unwrap();
        assert_eq!(coset_min_weight(&q.lx_dual(), q.lz(), 3), Some(2));
    }
}

#[test]
fn canonical_gate_values() {
    assert_eq!(canonical_gate(3, 2).unwrap().lambda(), &[1, 0, -1]);
    assert_eq!(canonical_gate(5, 1).unwrap().lambda(), &[3, 1, -1, -2, -1]);
    let g7 = canonical_gate(7, 1).unwrap();
    assert_eq!(g7.lambda().iter().sum::<i64>(), 0);
    assert!(verify_membership(&g7).is_member);
}

#[test]
fn membership_reports() {
    let r = verify_membership(&canonical_gate(5, 1).unwrap());
    assert!(r.is_member);
    assert_eq!(r.recurrence_constant, Some(-2));
    let (_, c, l0) = qudit_magic_core::gate::canonical_gate_recurrence_form(5, 1).unwrap();
    assert_eq!((c, l0), (-2, 3));

    let id = verify_membership(&MagicGate::new(5, 1, vec![0; 5]).unwrap());
    assert!(id.integral && id.determinant_one && id.is_second_level);
    assert!(id.is_clifford && !id.is_member);

    assert!(exhaustive_members(3, 1).unwrap().is_empty());
    assert!(!exhaustive_members(5, 1).unwrap().is_empty());
}

#[test]
fn lambda_values() {
    let g3 = canonical_gate(3, 2).unwrap();
    let g5 = canonical_gate(5, 1).unwrap();
    for len in [0, 3, 7] {
        let z = GFVector::zeros(5, len);
        assert_eq!(
            lambda_eval(&g5, &z).unwrap(),
            (len as i64 * 3).rem_euclid(5)
        );
    }
    // The shifted check at c = 0 gives −λ_0.
    assert_eq!(
        lambda_eval(&g3, &v(3, &[1, 2, 0, 1, 2, 0, 1, 2])).unwrap(),
        8
    );
    assert_eq!(lambda_eval(&g5, &v(5, &[1, 2, 3, 4])).unwrap(), 2);
}

#[test]
fn daggers() {
    assert_eq!(
        canonical_gate(5, 1).unwrap().dagger().lambda(),
        &[-3, -1, 1, 2, 1]
    );
    assert_eq!(canonical_gate(3, 2).unwrap().dagger().lambda(), &[-1, 0, 1]);
    assert!(verify_membership(&canonical_gate(7, 1).unwrap().dagger()).is_member);
}

#[test]
fn lemma_checks() {
    assert_eq!(
        lemma_check(&canonical_gate(3, 2).unwrap(), true).unwrap(),
        None
    );
    assert_eq!(
        lemma_check(&canonical_gate(5, 1).unwrap(), false).unwrap(),
        None
    );
    // On RM*_5(1,1) every nonzero codeword hits each nonzero symbol once, so
    // any exponent vector with zero sum passes.
    let balanced = MagicGate::new(5, 1, vec![1, 0, 0, 0, -1]).unwrap();
    assert_eq!(lemma_check(&balanced, true).unwrap(), None);
    let unbalanced = MagicGate::new(5, 1, vec![1, 0, 0, 0, 0]).unwrap();
    assert!(lemma_check(&unbalanced, true).unwrap().is_some());
}

fn reference_code(d: u32, m: u32) -> QrmCode {
    let (x, z) = reference_generators(d, m).unwrap();
    let n = x[0].len();
    QrmCode::from_parts(
        d,
        m,
        LinearCode::from_generators(d, n, &x).unwrap(),
        LinearCode::from_generators(d, n, &z).unwrap(),
    )
}

#[test]
fn qrm_constructions() {
    for (d, m) in [(3, 2), (5, 1)] {
        let built = build_qrm(d, m).unwrap();
        let reference = reference_code(d, m);
        assert_eq!(built.lx(), reference.lx());
        assert_eq!(built.lz(), reference.lz());
        assert!(validate_css(&built).all_pass());
        assert!(validate_css(&reference).all_pass());
    }
    let q2 = build_qrm(2, 4).unwrap();
    assert_eq!((q2.n(), q2.lx().dim(), q2.lz().dim()), (15, 4, 10));
    assert_eq!(
        build_qrm(3, 2).unwrap().lx_dual().dim() - build_qrm(3, 2).unwrap().lz().dim(),
        1
    );

    let (x, mut z) = reference_generators(3, 2).unwrap();
    let mut e = z[2].entries().to_vec();
    e[0] = (e[0] + 1) % 3;
    z[2] = GFVector::new(3, e).unwrap();
    let mutated = QrmCode::from_parts(
        3,
        2,
        LinearCode::from_generators(3, 8, &x).unwrap(),
        LinearCode::from_generators(3, 8, &z).unwrap(),
    );
    assert!(!validate_css(&mutated).stabilizers_commute);
}

#[test]
fn classical_transversality() {
    for (d, m) in [(3, 2), (5, 1)] {
        let code = build_qrm(d, m).unwrap();
        assert_eq!(
            verify_transversality_classical(&code, &canonical_gate(d, m).unwrap()).unwrap(),
            None
        );
    }
    let code = build_qrm(5, 1).unwrap();
    let bad = MagicGate::new(5, 1, vec![1, 0, 0, 0, 0]).unwrap();
    let violation = verify_transversality_classical(&code, &bad)
        .unwrap()
        .unwrap();
    assert_ne!(violation.value, violation.expected);
}

#[test]
fn distances() {
    assert_eq!(
        code_distance(&build_qrm(5, 1).unwrap(), DEFAULT_DISTANCE_CAP).d,
        Some(2)
    );
    assert_eq!(
        code_distance(&build_qrm(3, 2).unwrap(), DEFAULT_DISTANCE_CAP).d,
        Some(2)
    );
    assert_eq!(
        code_distance(&build_qrm(2, 4).unwrap(), DEFAULT_DISTANCE_CAP).d,
        Some(3)
    );
}
