//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Runs without the libtest harness so the lines show
//! up in plain `cargo test` output.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fourcycle::identities::{identity_suite, BivarPoly, IdentityStatus};
use fourcycle::region::{g, left_boundary_point};
use fourcycle::{
    membership, realize, realize_via_criterion, Complex, CriterionContext, CycleMatrix4, Method,
    Regime, RegionStatus, Tolerance,
};
use fourcycle_cli::sample::sample_records;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    match limit {
        Some(limit) => {
            out.pass &= took < limit;
            out.detail = format!("{}; {:.3} s (limit {} s)", out.detail, took.as_secs_f64(), limit.as_secs());
        }
        None => out.detail = format!("{}; {:.3} s", out.detail, took.as_secs_f64()),
    }
    out
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Strictly admissible: a > 0, b > 0, a + b < 1, G > 0.
fn random_admissible(rng: &mut ChaCha8Rng) -> Complex {
    loop {
        let (a, b): (f64, f64) = (rng.random(), rng.random());
        if a > 0.0 && b > 0.0 && a + b < 1.0 - 1e-6 && g(a, b) > 1e-6 {
            return Complex::new(a, b);
        }
    }
}

fn random_tight_admissible(rng: &mut ChaCha8Rng) -> Complex {
    loop {
        let lam = random_admissible(rng);
        if CriterionContext::new(lam).unwrap().regime() == Regime::Tight {
            return lam;
        }
    }
}

/// Uniform point of the simplex `{u in [m, inf)^4 : sum u = 2π}`, rejected
/// until every coordinate is below `M`.
fn random_feasible(ctx: &CriterionContext, rng: &mut ChaCha8Rng) -> [f64; 4] {
    let span = TAU - 4.0 * ctx.m();
    loop {
        let mut cuts: [f64; 3] = std::array::from_fn(|_| rng.random::<f64>());
        cuts.sort_by(f64::total_cmp);
        let w = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]];
        let mut u = w.map(|wk| ctx.m() + span * wk);
        // close the hyperplane exactly on the largest coordinate
        let k = (0..4).max_by(|&i, &j| u[i].total_cmp(&u[j])).unwrap();
        u[k] = TAU - (0..4).filter(|&i| i != k).map(|i| u[i]).sum::<f64>();
        if u.iter().all(|&v| v >= ctx.m() && v < ctx.big_m()) {
            return u;
        }
    }
}

fn identities() -> Outcome {
    let suite = identity_suite();
    let zero = suite
        .iter()
        .filter(|id| id.verify().status == IdentityStatus::ZeroPolynomial)
        .count();
    let deltas = [
        BivarPoly::one(),
        BivarPoly::a(),
        BivarPoly::b().pow(2),
        BivarPoly::monomial(-3, 2, 1),
    ];
    let mut mutations = 0;
    let mut caught = 0;
    for id in &suite {
        for k in 0..id.sides.len() {
            for delta in &deltas {
                mutations += 1;
                if matches!(id.perturbed(k, delta).verify().status, IdentityStatus::Failed(_)) {
                    caught += 1;
                }
            }
        }
    }
    outcome(
        zero == suite.len() && caught == mutations,
        format!("{zero}/{} vanish, {caught}/{mutations} mutations caught", suite.len()),
    )
}

fn necessity() -> Outcome {
    let tol = Tolerance::default().with_boundary_band(1e-7).unwrap();
    match sample_records(100_000, 42, &tol) {
        Ok(records) => {
            let outside = records.iter().filter(|r| r.status.is_outside()).count();
            outcome(
                outside == 0 && records.len() == 400_000,
                format!("{} eigenvalues, {outside} Outside at band 1e-7", records.len()),
            )
        }
        Err(e) => outcome(false, format!("sampling failed: {e}")),
    }
}

fn nearest(spectrum: &[Complex; 4], lam: Complex) -> f64 {
    spectrum.iter().map(|z| (z - lam).norm()).fold(f64::INFINITY, f64::min)
}

fn converse_grid() -> Outcome {
    let tol = Tolerance::default();
    let mut interior = 0;
    let mut failures = Vec::new();
    let mut worst = 0.0_f64;
    for i in 0..60 {
        for j in 1..=60 {
            let lam = Complex::new(i as f64 / 60.0, j as f64 / 60.0);
            if membership(lam, &tol).status != RegionStatus::InsideNonreal {
                continue;
            }
            interior += 1;
            for built in [realize(lam, &tol), realize_via_criterion(lam, &tol)] {
                let ok = built.ok().and_then(|r| {
                    let residual = r.matrix.eigen_residual(lam);
                    let dist = nearest(&r.matrix.spectrum(&tol).ok()?, lam);
                    worst = worst.max(residual);
                    (residual < 1e-8 && dist < 1e-6).then_some(())
                });
                if ok.is_none() {
                    failures.push(lam);
                }
            }
        }
    }
    outcome(
        failures.is_empty() && interior > 0,
        format!(
            "{interior} interior grid points x 2 constructions, {} failures, max residual {worst:.2e}",
            failures.len()
        ),
    )
}

/// Smallest max-distance over all pairings of two 4-point sets.
fn set_distance(a: &[Complex; 4], b: &[Complex; 4]) -> f64 {
    let mut best = f64::INFINITY;
    let mut perm = [0, 1, 2, 3];
    permute(&mut perm, 0, &mut |p| {
        let d = (0..4).map(|k| (a[k] - b[p[k]]).norm()).fold(0.0, f64::max);
        best = best.min(d);
    });
    best
}

fn permute(p: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
    if k == 4 {
        f(p);
        return;
    }
    for i in k..4 {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn boundary_exactness() -> Outcome {
    let tol = Tolerance::default();
    let mut notes = Vec::new();
    let mut pass = true;

    // right segment, x = 0.1..1 (x = 0 would need alpha = 1)
    let mut cr_worst = 0.0_f64;
    for step in 1..=10 {
        let x = step as f64 / 10.0;
        let spectrum = CycleMatrix4::uniform(1.0 - x).unwrap().spectrum(&tol).unwrap();
        let expected = [
            Complex::new(1.0, 0.0),
            Complex::new(1.0 - 2.0 * x, 0.0),
            Complex::new(1.0 - x, x),
            Complex::new(1.0 - x, -x),
        ];
        cr_worst = cr_worst.max(set_distance(&spectrum, &expected));
    }
    pass &= cr_worst < 1e-10;
    // x = 0 is the point 1, realized by every member
    let one = realize(Complex::new(1.0, 0.0), &tol);
    let one_ok = matches!(&one, Ok(r) if r.method == Method::RealInterval && r.residual < 1e-12);
    pass &= one_ok;
    notes.push(format!("CR max deviation {cr_worst:.1e}, lambda = 1 realized: {one_ok}"));

    let mut cl_worst = 0.0_f64;
    let mut cl_ok = true;
    for j in 0..100 {
        let alpha = 0.99 * j as f64 / 99.0;
        match left_boundary_point(alpha, &tol) {
            Ok(lam) => cl_worst = cl_worst.max(g(lam.re, lam.im).abs()),
            Err(_) => cl_ok = false,
        }
    }
    pass &= cl_ok && cl_worst < 1e-9;
    let start = left_boundary_point(0.0, &tol).unwrap();
    let r99 = left_boundary_point(0.99, &tol).unwrap().norm();
    let r9999 = left_boundary_point(0.9999, &tol).unwrap().norm();
    let ends = (start - Complex::new(0.0, 1.0)).norm() < 1e-12
        && (r99 - 0.221_878_151_154_663).abs() < 1e-9
        && r9999 < 0.05;
    pass &= ends;
    notes.push(format!(
        "CL max |G| {cl_worst:.1e} over 100 alphas, |lam(0.99)| = {r99:.6}, |lam(0.9999)| = {r9999:.6}"
    ));
    outcome(pass, notes.join("; "))
}

fn criterion_bounds() -> Outcome {
    let mut r = rng(5);
    let mut jensen_worst = f64::NEG_INFINITY;
    for _ in 0..20 {
        let ctx = CriterionContext::new(random_admissible(&mut r)).unwrap();
        let floor = 4.0 * ctx.f(FRAC_PI_2).unwrap();
        for _ in 0..1000 {
            let u = random_feasible(&ctx, &mut r);
            jensen_worst = jensen_worst.max(floor - ctx.psi(u).unwrap());
        }
    }
    let mut karamata_worst = f64::NEG_INFINITY;
    for _ in 0..20 {
        let ctx = CriterionContext::new(random_tight_admissible(&mut r)).unwrap();
        let top = ctx.max_psi();
        for _ in 0..1000 {
            let u = random_feasible(&ctx, &mut r);
            karamata_worst = karamata_worst.max(ctx.psi(u).unwrap() - top);
        }
    }
    let mut closed_worst = 0.0_f64;
    let mut tight = 0;
    while tight < 1000 {
        let lam = Complex::new(r.random::<f64>(), r.random::<f64>());
        let Ok(ctx) = CriterionContext::new(lam) else { continue };
        if ctx.regime() != Regime::Tight {
            continue;
        }
        tight += 1;
        let closed = ctx.max_psi_closed_form().unwrap();
        closed_worst = closed_worst.max((closed - ctx.max_psi()).abs());
    }
    outcome(
        jensen_worst <= 1e-9 && karamata_worst <= 1e-9 && closed_worst < 1e-9,
        format!(
            "Jensen worst violation {jensen_worst:.1e}, tight maximum worst violation {karamata_worst:.1e}, closed form max gap {closed_worst:.1e}"
        ),
    )
}

fn convexity() -> Outcome {
    let mut r = rng(6);
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let ctx = CriterionContext::new(random_admissible(&mut r)).unwrap();
        let (m, big_m) = (ctx.m(), ctx.big_m());
        for j in 0..100 {
            let u = m + (big_m - m) * (j as f64 + 0.5) / 100.0;
            let h = (1e-3 * (u - m).min(big_m - u)).min(1e-4);
            let f = |v: f64| ctx.f(v).unwrap();
            let fd = (f(u + h) - 2.0 * f(u) + f(u - h)) / (h * h);
            let exact = ctx.f_second_derivative(u).unwrap();
            worst = worst.max((fd - exact).abs() / exact.abs());
        }
    }
    outcome(worst < 1e-4, format!("2000 points, max relative error {worst:.1e}"))
}

fn regime_dichotomy() -> Outcome {
    let mut r = rng(7);
    let mut seen = 0;
    let mut exceptions = 0;
    while seen < 10_000 {
        let a = r.random_range(0.0..=1.0);
        let b = r.random_range(0.0..1.2);
        if b == 0.0 || a >= 1.0 || g(a, b) > 0.0 {
            continue;
        }
        seen += 1;
        match CriterionContext::new(Complex::new(a, b)) {
            Ok(ctx) if ctx.regime() == Regime::Tight => {}
            _ => exceptions += 1,
        }
    }
    outcome(exceptions == 0, format!("{seen} points with G <= 0, {exceptions} not tight"))
}

fn run_hashed(bin: &str, args: &[&str], dir: &Path, files: &[&str]) -> Result<(String, i32), String> {
    for f in files {
        let _ = std::fs::remove_file(dir.join(f));
    }
    let out = Command::new(bin)
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    let mut hasher = Sha256::new();
    hasher.update(&out.stdout);
    hasher.update([0u8]);
    hasher.update(&out.stderr);
    for f in files {
        let bytes = std::fs::read(dir.join(f)).map_err(|e| format!("{f}: {e}"))?;
        hasher.update([0u8]);
        hasher.update(&bytes);
    }
    let digest: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Ok((digest, out.status.code().unwrap_or(-1)))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_fourcycle");
    let dir = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return outcome(false, format!("tempdir: {e}")),
    };
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["check", "0.2", "0.3"], vec![]),
        (vec!["check", "0", "0.05", "--csv"], vec![]),
        (vec!["realize", "0.2", "0.3"], vec![]),
        (vec!["realize", "0.2", "-0.3", "--method", "criterion"], vec![]),
        (vec!["spectrum", "0.1", "0.2", "0.3", "0.4"], vec![]),
        (vec!["sample", "2000", "42", "s.csv"], vec!["s.csv"]),
        (vec!["sample", "500", "--seed", "9"], vec![]),
        (vec!["trace", "CL", "100", "cl.csv"], vec!["cl.csv"]),
        (vec!["trace", "region", "400", "fig.csv", "--svg", "fig.svg"], vec!["fig.csv", "fig.svg"]),
        (vec!["psi", "0.05", "0.1"], vec![]),
        (vec!["verify"], vec![]),
    ];
    let mut mismatched = Vec::new();
    for (args, files) in &cases {
        let first = run_hashed(bin, args, dir.path(), files);
        let second = run_hashed(bin, args, dir.path(), files);
        match (first, second) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => mismatched.push(args.join(" ")),
        }
    }
    outcome(
        mismatched.is_empty(),
        format!("{} commands run twice, mismatches: {:?}", cases.len(), mismatched),
    )
}

fn main() -> ExitCode {
    type Check = (&'static str, Option<u64>, fn() -> Outcome);
    let checks: [Check; 8] = [
        ("exact identity suite", Some(1), identities),
        ("necessity on 1e5 random matrices", Some(30), necessity),
        ("converse on the 60x60 grid", Some(10), converse_grid),
        ("boundary exactness", None, boundary_exactness),
        ("criterion bounds", None, criterion_bounds),
        ("convexity of F", None, convexity),
        ("regime dichotomy", None, regime_dichotomy),
        ("CLI determinism", None, determinism),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in checks.iter().enumerate() {
        let out = timed(limit.map(Duration::from_secs), *check);
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("{tag} {}. {name}: {}", k + 1, out.detail);
        failed += usize::from(!out.pass);
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
