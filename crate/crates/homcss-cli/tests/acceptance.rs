//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them all).
//!
//! Run: cargo test -p homcss-cli --test acceptance -- --nocapture

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use homcss::arith::{self, samples, QuadraticForm, ZSqrt2Matrix};
use homcss::bounds;
use homcss::builders;
use homcss::complex::ChainComplex;
use homcss::corpus;
use homcss::css::{self, CssCode, Distance};
use homcss::f2linalg::{self, F2Vector};
use num_bigint::BigUint;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{criterion} failed: {detail}");
}

/// C1: 200 random complexes (facet closures, products, covers) all
/// validate and satisfy the Euler–Poincaré identity exactly, in < 30 s.
#[test]
fn c1_chain_complex_suite() {
    let start = Instant::now();
    let corpus = corpus::random_complexes(2024, 200);
    assert_eq!(corpus.len(), 200);
    for entry in &corpus {
        assert!(
            entry.complex.validate().is_valid(),
            "invalid complex: {}",
            entry.description
        );
        let profile = entry.complex.homology().unwrap();
        let alternating: i64 = profile
            .betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(
            alternating,
            entry.complex.euler_characteristic(),
            "Euler–Poincaré failed on {}",
            entry.description
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "C1",
        elapsed < 30.0,
        &format!("200 complexes validated, Euler–Poincaré exact, {elapsed:.2}s"),
    );
}

/// C2: on the same corpus, rank ∂_{i+1} + dim Ker δ_i = n_i and every
/// boundary generator is orthogonal to every cocycle basis vector, in all
/// degrees, exactly.
#[test]
fn c2_boundary_cocycle_duality_suite() {
    let corpus = corpus::random_complexes(2024, 200);
    let mut checks = 0usize;
    for entry in &corpus {
        let x = &entry.complex;
        for i in 0..=x.dim() {
            let up = x.boundary_or_zero(i + 1);
            let delta = x.coboundary(i);
            let rank = f2linalg::rank(&up);
            let cocycles = f2linalg::kernel_basis(&delta);
            assert_eq!(
                rank + cocycles.len(),
                x.cells(i),
                "rank identity failed: {} degree {i}",
                entry.description
            );
            for b in up.columns() {
                for z in &cocycles {
                    assert!(
                        !b.dot(z),
                        "orthogonality failed: {} degree {i}",
                        entry.description
                    );
                }
            }
            checks += 1;
        }
    }
    report(
        "C2",
        true,
        &format!("rank + kernel identity and orthogonality exact in {checks} degree checks"),
    );
}

/// C3: toric degree-1 parameters [[2L², 2, L]]: exact enumeration for
/// L = 2, 3 and certified-exact bounded search for L = 4, 5, each < 60 s.
#[test]
fn c3_toric_code_family() {
    let mut details = Vec::new();
    for l in 2usize..=5 {
        let start = Instant::now();
        let x = builders::toric_grid(l).unwrap().complex;
        let code = CssCode::build(&x, 1).unwrap();
        let params = if l <= 3 {
            code.distance_exact(css::DEFAULT_EXACT_BUDGET).unwrap()
        } else {
            code.distance_bounded(l).unwrap()
        };
        let elapsed = start.elapsed().as_secs_f64();
        assert_eq!(params.n, 2 * l * l, "n at L={l}");
        assert_eq!(params.k, 2, "k at L={l}");
        assert_eq!(params.d, Distance::Exact(l), "d at L={l}");
        assert!(elapsed < 60.0, "L={l} took {elapsed:.2}s");
        details.push(format!("L={l}: [[{}, 2, {l}]] in {elapsed:.2}s", params.n));
    }
    report("C3", true, &details.join("; "));
}

/// C4: the degree-2 code of toric(2)⊗toric(2) has k = 6 exactly and the
/// w_max = 4 bounded search returns an exact distance, in < 10 min. The
/// search result is cross-checked against a naive unpruned scan of all
/// supports of weight ≤ 4 on both sides.
#[test]
fn c4_four_torus_product_code() {
    let start = Instant::now();
    let t = builders::toric_grid(2).unwrap().complex;
    let four = t.tensor_product(&t).unwrap();
    let code = CssCode::build(&four, 2).unwrap();
    assert_eq!(code.n(), 96);
    assert_eq!(code.code_dimension(), 6);

    let params = code.distance_bounded(4).unwrap();
    let d = match params.d {
        Distance::Exact(d) => d,
        other => panic!("bounded search did not certify exactness: {other:?}"),
    };

    // independent oracle: exhaustive weight ≤ 4 scan with no pruning
    let naive = naive_bounded_distance(&four, 2, 4).expect("oracle must find a witness");
    assert_eq!(d, naive, "pruned search disagrees with naive scan");

    let zemor = css::zemor_report(std::slice::from_ref(&params), 0.05);
    let ratio = match zemor[0].ratio {
        css::Bracket::Exact(r) => r,
        _ => panic!("exact distance must give exact ratio"),
    };
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "C4",
        elapsed < 600.0,
        &format!("[[96, 6, {d}]], kd²/n = {ratio}, naive oracle agrees, {elapsed:.2}s"),
    );
}

/// Advances `support` to the next w-subset of {0..n-1} in lexicographic
/// order; false when exhausted.
fn next_combination(support: &mut [usize], n: usize) -> bool {
    let w = support.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if support[i] != i + n - w {
            support[i] += 1;
            for j in i + 1..w {
                support[j] = support[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Unpruned reference search: minimum weight ≤ w_max vector in
/// ker(check) ∖ span(gens), both sides, enumerated support by support.
fn naive_bounded_distance(x: &ChainComplex, degree: usize, w_max: usize) -> Option<usize> {
    let sides = [
        (
            x.boundary_or_zero(degree),
            x.boundary_or_zero(degree + 1).columns(),
        ),
        (
            x.coboundary(degree),
            x.boundary_or_zero(degree).transpose().columns(),
        ),
    ];
    let n = x.cells(degree);
    for w in 1..=w_max {
        for (check, gens) in &sides {
            let span = f2linalg::RowSpace::from_rows(gens.iter());
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                let v = F2Vector::from_toggles(n, &support).unwrap();
                if check.mul_vec(&v).unwrap().is_zero() && !span.contains(&v) {
                    return Some(w);
                }
                if !next_combination(&mut support, n) {
                    break;
                }
            }
        }
    }
    None
}

/// C5: dualize(toric L) yields a valid complex whose degree-1 code has the
/// same (n, k, exact d) as the original for L = 2, 3, and the duality
/// identity P(δ_i α) = ∂'_{D−i}(P α) holds on full bases.
#[test]
fn c5_poincare_duality() {
    let mut details = Vec::new();
    for l in [2usize, 3] {
        let x = builders::toric_grid(l).unwrap().complex;
        let dual = builders::dualize(&x).unwrap().complex;
        assert!(dual.validate().is_valid());

        let original = CssCode::build(&x, 1)
            .unwrap()
            .distance_exact(css::DEFAULT_EXACT_BUDGET)
            .unwrap();
        let dualized = CssCode::build(&dual, 1)
            .unwrap()
            .distance_exact(css::DEFAULT_EXACT_BUDGET)
            .unwrap();
        assert_eq!(original.n, dualized.n, "n at L={l}");
        assert_eq!(original.k, dualized.k, "k at L={l}");
        assert_eq!(original.d, dualized.d, "d at L={l}");

        // the duality identity, checked on every basis vector α = e_j:
        // P is the index identity, so δ_i e_j must equal ∂'_{D−i} e_j
        let d_dim = x.dim();
        for i in 0..=d_dim {
            let delta_i = x.coboundary(i);
            let dual_boundary = dual.boundary_or_zero(d_dim - i);
            for j in 0..x.cells(i) {
                let alpha = F2Vector::unit(x.cells(i), j);
                let lhs = delta_i.mul_vec(&alpha).unwrap();
                let rhs = dual_boundary.mul_vec(&alpha).unwrap();
                assert_eq!(lhs, rhs, "duality identity failed at L={l}, i={i}, cell {j}");
            }
        }
        details.push(format!(
            "L={l}: [[{}, {}, {:?}]] both ways, identity exact",
            original.n, original.k, original.d
        ));
    }
    report("C5", true, &details.join("; "));
}

/// C6: for 20 random valid voltage assignments (m ≤ 4) over small bases,
/// χ(cover) = m·χ(base) exactly and the cover code has the same maximum
/// generator weight as the base code.
#[test]
fn c6_cover_suite() {
    let covers = corpus::random_covers(77, 20, 4);
    assert_eq!(covers.len(), 20);
    for entry in &covers {
        assert!(
            entry.cover.validate().is_valid(),
            "invalid cover: {}",
            entry.description
        );
        assert_eq!(
            entry.cover.euler_characteristic(),
            entry.sheets as i64 * entry.base.euler_characteristic(),
            "χ multiplication failed: {}",
            entry.description
        );
        for degree in 0..=entry.base.dim() {
            let base_code = CssCode::build(&entry.base, degree).unwrap();
            let cover_code = CssCode::build(&entry.cover, degree).unwrap();
            assert_eq!(
                base_code.ldpc_weight(),
                cover_code.ldpc_weight(),
                "generator weight changed: {} degree {degree}",
                entry.description
            );
        }
    }
    report(
        "C6",
        true,
        "20 covers: χ multiplied and generator weights preserved exactly",
    );
}

fn sqrt2_generators() -> Vec<ZSqrt2Matrix> {
    vec![samples::sqrt2_boost_3(), samples::rotation_12()]
}

fn lorentz_generators() -> Vec<ZSqrt2Matrix> {
    vec![samples::lorentz_boost_3(), samples::rotation_12()]
}

/// Deterministic word stream over a generator set.
struct Words {
    state: u64,
}

impl Words {
    fn new(seed: u64) -> Self {
        Words {
            state: seed ^ 0x9e3779b97f4a7c15,
        }
    }

    fn next(&mut self, bound: usize) -> usize {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        (self.state % bound as u64) as usize
    }

    fn word(&mut self, gens: &[ZSqrt2Matrix], max_len: usize) -> ZSqrt2Matrix {
        let len = 1 + self.next(max_len);
        let mut m = gens[self.next(gens.len())].clone();
        for _ in 1..len {
            m = m.mul(&gens[self.next(gens.len())]).unwrap();
        }
        m
    }
}

/// C7: the arithmetic suite, in < 5 min:
///   - reduce_mod is a homomorphism on 10³ random word pairs (exact);
///   - entry growth |M₁M₂| ≤ 3(D+1)|M₁||M₂| on 10³ pairs (exact);
///   - every non-identity Γ_N element found by quotient search for
///     N ∈ {3, 5, 7} on the integral D=2 example has an entry ≥ N−1;
///   - quotient closure order stays under N^{2(D+1)²} and equals the
///     independent brute-force ambient-intersection count for N = 2, 3.
#[test]
fn c7_arithmetic_suite() {
    let start = Instant::now();
    let gens = sqrt2_generators();
    let q = QuadraticForm::sqrt2_hyperbolic(2);
    for g in &gens {
        assert!(arith::preserves_form(g, &q).unwrap());
    }

    let mut words = Words::new(41);
    let c = BigUint::from(3u32 * 3);
    for step in 0..1000u32 {
        let a = words.word(&gens, 5);
        let b = words.word(&gens, 5);
        let ab = a.mul(&b).unwrap();
        let modulus = [2u64, 3, 5, 7][(step % 4) as usize];
        let lhs = arith::reduce_mod(&ab, modulus).unwrap();
        let rhs = arith::reduce_mod(&a, modulus)
            .unwrap()
            .mul(&arith::reduce_mod(&b, modulus).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "homomorphism failed at pair {step}");
        assert!(
            ab.entry_norm() <= &c * a.entry_norm() * b.entry_norm(),
            "entry growth failed at pair {step}"
        );
    }

    // congruence elements on the integral-form D=2 example
    let lorentz = lorentz_generators();
    let ql = QuadraticForm::lorentz(2);
    for g in &lorentz {
        assert!(arith::preserves_form(g, &ql).unwrap());
    }
    let mut gamma_counts = Vec::new();
    for n in [3u64, 5, 7] {
        let found = arith::find_gamma_elements(&lorentz, n, 1_000_000).unwrap();
        assert!(!found.is_empty(), "no Γ_{n} element found");
        for e in &found {
            assert!(!e.matrix.is_identity());
            let witness = arith::entry_bound_check(&e.matrix, n).unwrap();
            assert!(
                witness.satisfied,
                "entry bound failed for {} mod {n}",
                e.word
            );
        }
        gamma_counts.push(format!("N={n}: {}", found.len()));
    }

    // closure order vs the ambient brute force for N = 2, 3
    let mut closure_counts = Vec::new();
    for n in [2u64, 3] {
        let closure = arith::quotient_closure(&lorentz, n, 1_000_000, true).unwrap();
        assert!(closure.complete);
        assert!(closure.within_bound, "closure exceeds N^(2(D+1)^2)");
        let ambient = arith::ambient_so_elements(&ql, n, true).unwrap();
        assert_eq!(
            ambient.len() % closure.order,
            0,
            "closure order does not divide the ambient group order at N={n}"
        );
        let keys: HashSet<String> = closure.transversal.clone().unwrap().into_iter().collect();
        let intersection = ambient.iter().filter(|e| keys.contains(&e.key_hex())).count();
        assert_eq!(
            intersection, closure.order,
            "ambient ∩ closure mismatch at N={n}"
        );
        // independent traversal: reversed generator order reaches the
        // same set
        let reversed: Vec<ZSqrt2Matrix> = lorentz.iter().rev().cloned().collect();
        let again = arith::quotient_closure(&reversed, n, 1_000_000, false).unwrap();
        assert_eq!(again.order, closure.order);
        closure_counts.push(format!("N={n}: order {} | ambient {}", closure.order, ambient.len()));
    }

    let elapsed = start.elapsed().as_secs_f64();
    report(
        "C7",
        elapsed < 300.0,
        &format!(
            "10³ pairs exact; Γ elements [{}]; closures [{}]; {elapsed:.2}s",
            gamma_counts.join(", "),
            closure_counts.join(", ")
        ),
    );
}

/// C8: every sampled form-preserving matrix twists into the definite form
/// with zero failures.
#[test]
fn c8_galois_twist_suite() {
    let gens = sqrt2_generators();
    let q = QuadraticForm::sqrt2_hyperbolic(2);
    let definite = QuadraticForm::sqrt2_definite(2);
    let mut words = Words::new(97);
    for _ in 0..500 {
        let m = words.word(&gens, 6);
        assert!(arith::preserves_form(&m, &q).unwrap());
        let (twisted, twisted_form) = arith::galois_twist(&m, &q).unwrap();
        assert_eq!(twisted_form, definite);
        assert!(arith::preserves_form(&twisted, &definite).unwrap());
    }
    report("C8", true, "500 sampled words twist exactly into the definite group");
}

/// C9: the bounds suite at its stated tolerances.
#[test]
fn c9_bounds_suite() {
    use std::f64::consts::PI;
    // sphere_volume(4) = 8π²/3 within 1e−12 relative
    let s4 = bounds::sphere_volume(4);
    let expected = 8.0 * PI * PI / 3.0;
    assert!(((s4 - expected) / expected).abs() < 1e-12);

    // VHB₂ quadrature vs closed form 2π(cosh r − 1) within 1e−9 on [0.01, 10]
    let mut r = 0.01;
    while r <= 10.0 {
        let quad = bounds::hyperbolic_ball_volume(2, r).unwrap();
        let exact = 2.0 * PI * (r.cosh() - 1.0);
        assert!(
            (quad - exact).abs() < 1e-9,
            "VHB₂ at r={r}: {quad} vs {exact}"
        );
        r += 0.13;
    }

    // d/dr VHB_k = VHS_{k−1} within 1e−6 relative for k ∈ {2,3,4}
    let grid: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
    for k in [2usize, 3, 4] {
        let audit = bounds::monotonicity_audit(k, &grid, None).unwrap();
        assert!(
            audit.derivative_identity_max_rel_error < 1e-6,
            "k={k}: {}",
            audit.derivative_identity_max_rel_error
        );
    }

    // VHB₂(R)/e^R within 1% of π at R = 12
    let anderson = bounds::anderson_bound(2, 12.0).unwrap();
    assert!((anderson.exp_ratio - PI).abs() / PI < 0.01);

    // Euclidean cone calibration (r/k)·VS_{k−1}(r) = VB_k(r) within 1e−12
    for k in [1usize, 2, 3, 4, 5] {
        for r in [0.25, 1.0, 3.0] {
            let cone =
                bounds::cone_volume_euclidean(k, r, bounds::euclidean_sphere_volume(k - 1, r))
                    .unwrap();
            let ball = bounds::euclidean_ball_volume(k, r);
            assert!(
                ((cone - ball) / ball).abs() < 1e-12,
                "cone calibration k={k} r={r}"
            );
        }
    }
    report("C9", true, "all five numeric identities hold at stated tolerances");
}

/// C10: identical config and seed produce byte-identical JSON across runs,
/// for a sample of commands spanning every subsystem.
#[test]
fn c10_determinism() {
    let bin = env!("CARGO_BIN_EXE_homcss");
    let dir = std::env::temp_dir().join("homcss-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let gens = dir.join("gens.json");
    std::fs::write(
        &gens,
        r#"[{"A": [[3,2,0],[4,3,0],[0,0,1]], "B": [[2,2,0],[2,2,0],[0,0,0]]},
           {"A": [[1,0,0],[0,0,-1],[0,1,0]], "B": [[0,0,0],[0,0,0],[0,0,0]]}]"#,
    )
    .unwrap();
    let gens = gens.to_str().unwrap();

    let commands: Vec<Vec<&str>> = vec![
        vec!["code", "distance", "--complex", "toric:3", "--degree", "1"],
        vec!["code", "zemor", "--family", "toric", "--l", "2..4"],
        vec!["complex", "suite", "--count", "40", "--seed", "5"],
        vec!["complex", "homology", "--complex", "product(toric:2,circle:3)"],
        vec![
            "arith", "sample", "--generators", gens, "--form", "sqrt2:2", "--seed", "9",
            "--count", "50",
        ],
        vec!["arith", "closure", "--generators", gens, "--modulus", "3", "--transversal"],
        vec!["bounds", "monotonicity", "--k", "3", "--grid", "0.5:3.0:0.25"],
    ];
    for args in &commands {
        let run = || {
            let out = Command::new(bin).args(args).output().expect("spawn homcss");
            assert!(
                out.status.success(),
                "command {args:?} failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            out.stdout
        };
        let first = run();
        let second = run();
        assert_eq!(
            first, second,
            "non-deterministic output for {args:?}"
        );
    }
    report(
        "C10",
        true,
        &format!("{} commands byte-identical across two runs", commands.len()),
    );
}
