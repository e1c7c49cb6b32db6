//! One function per subcommand, each producing an [`Artifact`].

use std::f64::consts::PI;

use nalgebra::DVector;
use qudit_magic_core::engine::{
    closed_form_valid, depolarizing_noise, distillable_region_qutrit_with, gamma_star,
    iterate_depolarizing, threshold_depolarizing, threshold_worst_case_with, GeneralMap,
    DEFAULT_TOLERANCE, WORST_CASE_GRID,
};
use qudit_magic_core::field::is_prime;
use qudit_magic_core::gate::{canonical_gate, gate_exists, verify_membership};
use qudit_magic_core::injection::{
    inject, injection_deviation, measurement_unbiasedness_check, phase_state_of, DensityMatrix,
};
use qudit_magic_core::qrm::{
    build_qrm, code_distance, design_distance, validate_css, verify_transversality_classical,
    DEFAULT_DISTANCE_CAP,
};
use qudit_magic_core::sim::{
    apply_transversal_diagonal, logical_amplitudes, logical_basis_state, magic_state,
    simulate_round, MAX_AMPLITUDES,
};
use qudit_magic_core::{Complex, GFVector, QrmCode};

use crate::cli::{Cli, Command};
use crate::format::{write_gate, write_qrm};
use crate::manifest::RunManifest;
use crate::output::{format_float, Artifact, Cell};
use crate::CliError;

/// Primes covered by `tables`.
pub const TABLE_PRIMES: [u32; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
/// Largest `m` covered by `tables`.
pub const TABLE_MAX_M: u32 = 4;

/// Bisection tolerance for `tables`, fine enough for thresholds near 1e-5.
pub const TABLE_TOLERANCE: f64 = 1e-13;

const DISTANCE_MAX_N: usize = 256;
const REGION_ROUNDS: usize = 60;
const YIELD_ROUNDS: usize = 100;
const ORACLE_TOL: f64 = 1e-9;

pub fn run(cli: &Cli) -> Result<Artifact, CliError> {
    match cli.command {
        Command::Tables => tables(cli.tol.unwrap_or(TABLE_TOLERANCE)),
        Command::Verify => verify(need(cli.d, "--d")?, need(cli.m, "--m")?),
        Command::Iterate => iterate(
            need(cli.d, "--d")?,
            need(cli.m, "--m")?,
            &eps_points(cli, &[0.1]),
        ),
        Command::Threshold => threshold(
            need(cli.d, "--d")?,
            need(cli.m, "--m")?,
            cli.tol.unwrap_or(DEFAULT_TOLERANCE),
        ),
        Command::WorstCase => worst_case(
            need(cli.d, "--d")?,
            need(cli.m, "--m")?,
            cli.grid.unwrap_or(WORST_CASE_GRID),
            cli.tol.unwrap_or(1e-6),
        ),
        Command::Yield => yields(
            need(cli.d, "--d")?,
            need(cli.m, "--m")?,
            &or_default(&cli.eps, &[0.1]),
            &or_default(&cli.eps_target, &[1e-10]),
        ),
        Command::Region => region(cli.grid.unwrap_or(40)),
        Command::Inject => injection(need(cli.d, "--d")?, &or_default(&cli.eps, &[0.05])),
        Command::Gate => gate(need(cli.d, "--d")?, need(cli.m, "--m")?),
        Command::Code => code(need(cli.d, "--d")?, need(cli.m, "--m")?),
    }
}

fn need(x: Option<u32>, flag: &str) -> Result<u32, CliError> {
    x.ok_or_else(|| CliError::Usage(format!("missing {flag}")))
}

fn or_default(xs: &[f64], default: &[f64]) -> Vec<f64> {
    if xs.is_empty() {
        default.to_vec()
    } else {
        xs.to_vec()
    }
}

/// `--grid N` gives `N + 1` points on `[0, (d−1)/d]`; otherwise `--eps`.
fn eps_points(cli: &Cli, default: &[f64]) -> Vec<f64> {
    match (cli.grid, cli.d) {
        (Some(n), Some(d)) if n > 0 => {
            let top = (d as f64 - 1.0) / d as f64;
            (0..=n).map(|i| top * i as f64 / n as f64).collect()
        }
        _ => or_default(&cli.eps, default),
    }
}

/// Whether a `(d, m)` cell of the tables carries values. Besides the
/// qudit cases this admits the 15-qubit code with its T gate.
pub fn table_cell(d: u32, m: u32) -> bool {
    gate_exists(d, m) || (d, m) == (2, 4)
}

pub fn tables(tol: f64) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("tables")
        .param("primes", TABLE_PRIMES.to_vec())
        .param("max_m", TABLE_MAX_M)
        .tolerance("threshold", tol);
    let cells: Vec<(u32, u32)> = TABLE_PRIMES
        .iter()
        .flat_map(|&d| (1..=TABLE_MAX_M).map(move |m| (d, m)))
        .collect();
    use rayon::prelude::*;
    let rows: Vec<Result<Vec<Cell>, CliError>> = cells
        .par_iter()
        .map(|&(d, m)| {
            if !table_cell(d, m) {
                return Ok(vec![d.into(), m.into(), Cell::Missing, Cell::Missing]);
            }
            let g = gamma_star(d, m)?;
            let t = threshold_depolarizing(d, m, tol)?;
            Ok(vec![d.into(), m.into(), g.into(), t.epsilon_star.into()])
        })
        .collect();
    let mut a = Artifact::new(manifest, &["d", "m", "gamma_star", "eps_star_dep"]);
    for r in rows {
        a.push(r?);
    }
    Ok(a)
}

/// Deviation of `M^{⊗n}` from the logical `M†` on the logical basis.
fn quantum_transversality(code: &QrmCode) -> Result<f64, CliError> {
    let gate = canonical_gate(code.d(), code.m())?;
    let ones = GFVector::constant(code.d(), code.n(), 1);
    let mut worst = 0.0f64;
    for j in 0..code.d() {
        let s = logical_basis_state(code, j)?;
        let out = apply_transversal_diagonal(&s, &gate, &ones)?;
        let a = -2.0 * PI * gate.lambda_at(j) as f64 / gate.denominator() as f64;
        worst = worst.max(out.distance(&s.scale(Complex::new(a.cos(), a.sin()))));
        let amps = logical_amplitudes(&out, code)?;
        for (t, z) in amps.iter().enumerate() {
            if t as u32 != j {
                worst = worst.max(z.norm());
            }
        }
    }
    Ok(worst)
}

/// Largest gap between the simulator and the analytic map over a fixed set
/// of noise vectors, with the largest off-diagonal and branch spread.
fn oracle_agreement(code: &QrmCode) -> Result<(f64, f64, f64), CliError> {
    let gate = canonical_gate(code.d(), code.m())?;
    let map = GeneralMap::new(code)?;
    let d = code.d() as usize;
    let mut noises = vec![
        depolarizing_noise(code.d(), 0.1)?,
        depolarizing_noise(code.d(), 0.3)?,
    ];
    let skew: Vec<f64> = (0..d)
        .map(|k| if k == 0 { 0.8 } else { 0.2 * k as f64 })
        .collect();
    let total: f64 = skew.iter().sum();
    noises.push(qudit_magic_core::engine::NoiseVector::normalized(
        skew.iter().map(|x| x / total).collect(),
        qudit_magic_core::engine::Basis::M,
    )?);
    let (mut gap, mut off, mut spread) = (0.0f64, 0.0f64, 0.0f64);
    for noise in &noises {
        let sim = simulate_round(code, &gate, noise, true)?;
        let ana = map.iterate(noise)?;
        gap = gap
            .max((sim.result.success_probability - ana.success_probability).abs())
            .max((sim.result.epsilon_out - ana.epsilon_out).abs());
        for (a, b) in sim.result.output.f().iter().zip(ana.output.f()) {
            gap = gap.max((a - b).abs());
        }
        off = off.max(sim.max_off_diagonal);
        spread = spread.max(sim.max_branch_spread);
    }
    Ok((gap, off, spread))
}

pub fn verify(d: u32, m: u32) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("verify")
        .param("d", d)
        .param("m", m)
        .tolerance("oracle", ORACLE_TOL)
        .param("distance_cap", DEFAULT_DISTANCE_CAP);
    let mut entries: Vec<(&str, Cell)> = vec![("d", d.into()), ("m", m.into())];
    let mut passed = true;
    if !is_prime(d as u64) || m == 0 {
        entries.push(("valid_parameters", false.into()));
        let mut a = Artifact::report(manifest, entries);
        a.passed = false;
        return Ok(a);
    }
    let code = build_qrm(d, m)?;
    let css = validate_css(&code);
    entries.push(("n", code.n().into()));
    entries.push(("dim_lx", code.lx().dim().into()));
    entries.push(("dim_lz", code.lz().dim().into()));
    entries.push(("css", css.all_pass().into()));
    passed &= css.all_pass();

    let exists = gate_exists(d, m);
    entries.push(("gate_exists", exists.into()));
    passed &= exists;
    if exists {
        let gate = canonical_gate(d, m)?;
        let member = verify_membership(&gate).is_member;
        entries.push(("gate_member", member.into()));
        passed &= member;
        let classical = verify_transversality_classical(&code, &gate)?.is_none();
        entries.push(("transversal_classical", classical.into()));
        passed &= classical;
    }

    let amplitudes = (d as u128).checked_pow(code.n() as u32);
    let small = amplitudes.is_some_and(|s| s <= MAX_AMPLITUDES);
    if exists && small {
        let q = quantum_transversality(&code)?;
        entries.push(("transversal_quantum_deviation", q.into()));
        passed &= q < ORACLE_TOL;
        let (gap, off, spread) = oracle_agreement(&code)?;
        entries.push(("oracle_max_gap", gap.into()));
        entries.push(("oracle_max_off_diagonal", off.into()));
        entries.push(("oracle_max_branch_spread", spread.into()));
        passed &= gap < ORACLE_TOL && off < ORACLE_TOL && spread < ORACLE_TOL;
    } else {
        entries.push(("transversal_quantum_deviation", Cell::Missing));
        entries.push(("oracle_max_gap", Cell::Missing));
    }

    if code.n() <= DISTANCE_MAX_N {
        let dist = code_distance(&code, DEFAULT_DISTANCE_CAP);
        entries.push(("distance", dist.d.into()));
        let ok = dist.d == Some(design_distance(d) as usize);
        entries.push(("distance_matches_design", ok.into()));
        passed &= ok;
    } else {
        entries.push(("distance", Cell::Missing));
    }
    entries.push(("passed", passed.into()));
    let mut a = Artifact::report(manifest, entries);
    a.passed = passed;
    Ok(a)
}

pub fn iterate(d: u32, m: u32, eps: &[f64]) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("iterate")
        .param("d", d)
        .param("m", m)
        .param("eps", eps.to_vec());
    let general = build_qrm(d, m).ok().and_then(|c| GeneralMap::new(&c).ok());
    if general.is_none() && !closed_form_valid(d, m) {
        return Err(CliError::Usage(format!(
            "no iteration map available for d = {d}, m = {m}"
        )));
    }
    let mut a = Artifact::new(manifest, &["eps", "eps_out", "probability", "method"]);
    for &e in eps {
        let (r, method) = match &general {
            Some(map) => (map.iterate(&depolarizing_noise(d, e)?)?, "general"),
            None => (iterate_depolarizing(d, m, e)?, "closed_form"),
        };
        a.push(vec![
            e.into(),
            r.epsilon_out.into(),
            r.success_probability.into(),
            method.into(),
        ]);
    }
    Ok(a)
}

pub fn threshold(d: u32, m: u32, tol: f64) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("threshold")
        .param("d", d)
        .param("m", m)
        .tolerance("bisection", tol);
    let t = threshold_depolarizing(d, m, tol)?;
    let mut a = Artifact::new(
        manifest,
        &["d", "m", "eps_star", "bracket_lo", "bracket_hi"],
    );
    let (lo, hi) = t.certificate.bracket;
    a.push(vec![
        d.into(),
        m.into(),
        t.epsilon_star.into(),
        lo.into(),
        hi.into(),
    ]);
    Ok(a)
}

pub fn worst_case(d: u32, m: u32, grid: usize, tol: f64) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("worst-case")
        .param("d", d)
        .param("m", m)
        .grid("directions", grid)
        .tolerance("bisection", tol);
    let code = build_qrm(d, m)?;
    let map = GeneralMap::new(&code)?;
    let t = threshold_worst_case_with(&map, grid, tol)?;
    let dir: Vec<String> = t
        .certificate
        .direction
        .iter()
        .map(|&x| format_float(x))
        .collect();
    let (lo, hi) = t.certificate.bracket;
    let mut a = Artifact::new(
        manifest,
        &[
            "d",
            "m",
            "eps_star",
            "bracket_lo",
            "bracket_hi",
            "direction",
        ],
    );
    a.push(vec![
        d.into(),
        m.into(),
        t.epsilon_star.into(),
        lo.into(),
        hi.into(),
        dir.join(";").into(),
    ]);
    Ok(a)
}

pub fn yields(d: u32, m: u32, eps: &[f64], targets: &[f64]) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("yield")
        .param("d", d)
        .param("m", m)
        .param("eps", eps.to_vec())
        .param("eps_target", targets.to_vec())
        .param("max_rounds", YIELD_ROUNDS);
    let code = build_qrm(d, m)?;
    let map = GeneralMap::new(&code)?;
    let mut a = Artifact::new(
        manifest,
        &[
            "eps_in",
            "eps_target",
            "rounds",
            "yield",
            "final_eps",
            "gamma_star",
        ],
    );
    let g = gamma_star(d, m)?;
    for &e in eps {
        let noise = depolarizing_noise(d, e)?;
        for &t in targets {
            match map.distillation_yield(&code, &noise, t, YIELD_ROUNDS) {
                Ok(y) => a.push(vec![
                    e.into(),
                    t.into(),
                    y.rounds.into(),
                    y.yield_value.into(),
                    y.final_epsilon.into(),
                    g.into(),
                ]),
                Err(qudit_magic_core::Error::NotConverged { epsilon, .. }) => a.push(vec![
                    e.into(),
                    t.into(),
                    Cell::Missing,
                    0.0.into(),
                    epsilon.into(),
                    g.into(),
                ]),
                Err(err) => return Err(err.into()),
            }
        }
    }
    Ok(a)
}

pub fn region(grid: usize) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("region")
        .param("d", 3)
        .param("m", 2)
        .grid("simplex", grid)
        .param("max_rounds", REGION_ROUNDS);
    let code = build_qrm(3, 2)?;
    let pts = distillable_region_qutrit_with(&code, grid, REGION_ROUNDS, 0)?;
    let mut a = Artifact::new(manifest, &["f1", "f2", "distillable"]);
    for p in pts {
        a.push(vec![p.f1.into(), p.f2.into(), p.distillable.into()]);
    }
    Ok(a)
}

/// Smallest `m` for which a magic gate exists in dimension `d`.
fn injection_level(d: u32) -> Result<u32, CliError> {
    (1..=4)
        .find(|&m| gate_exists(d, m))
        .ok_or_else(|| CliError::Usage(format!("no magic gate for d = {d}")))
}

/// Fixed target states: `|0⟩`, the uniform superposition and a state with
/// unequal moduli and phases.
fn injection_targets(d: usize) -> Vec<DVector<Complex>> {
    let uniform = DVector::from_element(d, Complex::new(1.0 / (d as f64).sqrt(), 0.0));
    let mut skew = DVector::from_fn(d, |j, _| {
        Complex::from_polar(j as f64 + 1.0, 0.7 * j as f64)
    });
    skew /= Complex::new(skew.norm(), 0.0);
    let mut zero = DVector::zeros(d);
    zero[0] = Complex::new(1.0, 0.0);
    vec![zero, uniform, skew]
}

pub fn injection(d: u32, eps: &[f64]) -> Result<Artifact, CliError> {
    let m = injection_level(d)?;
    let manifest = RunManifest::new("inject")
        .param("d", d)
        .param("m", m)
        .param("eps", eps.to_vec());
    let gate = canonical_gate(d, m)?;
    let dim = d as usize;
    let ideal = DensityMatrix::pure(&magic_state(&gate, 0))?;
    let unbiased =
        measurement_unbiasedness_check(&phase_state_of(&gate).state(), &injection_targets(dim)[2])?;
    let mut a = Artifact::new(
        manifest,
        &[
            "eps",
            "resource_error",
            "max_deviation",
            "bound",
            "within_bound",
            "branch_probabilities",
            "unbiased",
        ],
    );
    for &e in eps {
        let p = e * d as f64 / (d as f64 - 1.0);
        let sigma = ideal.mix(&DensityMatrix::maximally_mixed(dim), p)?;
        let mut worst = 0.0f64;
        let mut resource = 0.0;
        let mut branches = Vec::new();
        for (i, psi) in injection_targets(dim).iter().enumerate() {
            let rho = DensityMatrix::pure(psi)?;
            let (dev, r) = injection_deviation(&gate, &sigma, &rho)?;
            worst = worst.max(dev);
            resource = r;
            if i == 2 {
                branches = inject(&gate, &sigma, &rho)?.branch_probabilities;
            }
        }
        let bound = 2.0 * resource;
        let within = worst <= bound + 1e-12;
        a.passed &= within && unbiased.unbiased;
        let bp: Vec<String> = branches.iter().map(|&x| format_float(x)).collect();
        a.push(vec![
            e.into(),
            resource.into(),
            worst.into(),
            bound.into(),
            within.into(),
            bp.join(";").into(),
            unbiased.unbiased.into(),
        ]);
    }
    Ok(a)
}

pub fn gate(d: u32, m: u32) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("gate").param("d", d).param("m", m);
    let g = canonical_gate(d, m)?;
    let r = verify_membership(&g);
    let lambda: Vec<String> = g.lambda().iter().map(i64::to_string).collect();
    let form = r.quadratic_form.map(|(x, y)| format!("{x};{y}"));
    let mut a = Artifact::report(
        manifest,
        vec![
            ("d", d.into()),
            ("m", m.into()),
            ("denominator", g.denominator().into()),
            ("lambda", lambda.join(";").into()),
            ("determinant_one", r.determinant_one.into()),
            ("sum_exactly_zero", r.sum_exactly_zero.into()),
            ("recurrence_constant", r.recurrence_constant.into()),
            ("quadratic_form", form.into()),
            ("second_level", r.is_second_level.into()),
            ("clifford", r.is_clifford.into()),
            ("member", r.is_member.into()),
            ("text", write_gate(&g).trim_end().into()),
        ],
    );
    a.passed = r.is_member;
    Ok(a)
}

pub fn code(d: u32, m: u32) -> Result<Artifact, CliError> {
    let manifest = RunManifest::new("code").param("d", d).param("m", m);
    let c = build_qrm(d, m)?;
    Ok(Artifact::report(
        manifest,
        vec![
            ("d", d.into()),
            ("m", m.into()),
            ("n", c.n().into()),
            ("dim_lx", c.lx().dim().into()),
            ("dim_lz", c.lz().dim().into()),
            ("text", write_qrm(&c).into()),
        ],
    ))
}
