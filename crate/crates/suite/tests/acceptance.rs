//! Acceptance suite: one pass/fail line per criterion, with diagnostics
//! for failures. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use oklr_core::bases::{check_bases, compute_bases, LMatrix, WeightBases};
use oklr_core::characters::{check_table, simple_chars, PeelMethod};
use oklr_core::comb::WordComb;
use oklr_core::exactq::LaurentPoly;
use oklr_core::identities::verify_ek;
use oklr_core::oklrsym::params::univariate;
use oklr_core::oklrsym::rep::{plain_weights, self_dual_weights as vertex_weights};
use oklr_core::oklrsym::{
    all_pass, faithfulness_proxy, regular_module_check, verify_grading, verify_pbw_independence, verify_relations,
    verify_symmetry_maps, Mode, OklrError, ParamMatrices, Rep, ReportEntry, Status, VertexWeight,
};
use oklr_core::rootdata::{cartan, roots_a_in, self_dual_weights, tkpf, DimVector, Letter};
use oklr_core::shuffle::{lyndon_bracket, shuffle_words, xi_eval, BracketConvention};
use oklr_core::thetamod::{star_words, theta_good_bruteforce, theta_kappa};
use oklr_core::words::{
    all_words, good_lyndon_words, is_good_lyndon, is_lyndon, is_symmetric_word, is_theta_lyndon, lyndon_factorize,
    theta_good_words, Order, Word,
};

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    /// Records a sub-check; failing ones are listed under the criterion.
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, t: Duration, limit: Duration) {
        self.check(t < limit, format!("runtime {:.1}s exceeds {}s", t.as_secs_f64(), limit.as_secs()));
    }
}

fn w(ks: &[i32]) -> Word {
    Word::from_ks(ks)
}

fn dv(s: &str) -> DimVector {
    s.parse().unwrap()
}

fn vw(s: &str) -> VertexWeight {
    s.parse().unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn failures(entries: &[ReportEntry]) -> Vec<String> {
    entries
        .iter()
        .filter(|e| e.status == Status::Fail)
        .take(3)
        .map(|e| format!("{} {} {}: {}", e.family, e.case, e.weight_word, e.witness.clone().unwrap_or_default()))
        .collect()
}

/// Self-dual weights with |beta|_theta <= 3 over the letters |k| <= 3.
fn small_weights() -> Vec<DimVector> {
    self_dual_weights(3, 3)
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let window = Letter::window(5);
    for root in roots_a_in(&window) {
        let mut desc: Vec<i32> = (root.lo.k()..=root.hi.k()).step_by(2).collect();
        desc.reverse();
        let got = good_lyndon_words(&root.weight());
        o.check(got == vec![w(&desc)], format!("good Lyndon words of {}: {got:?}", root.weight()));
        let mut letters: Vec<i32> = desc.clone();
        letters.sort();
        let good: Vec<Word> = permutations(&letters)
            .into_iter()
            .map(|p| w(&p))
            .filter(|x| is_lyndon(x) && is_good_lyndon(x))
            .collect();
        o.check(good == vec![w(&desc)], format!("good Lyndon permutations of {}: {good:?}", root.weight()));
    }

    let mut necklaces = 0;
    for n in 1..=6 {
        for word in all_words(&window, n) {
            let ks: Vec<i32> = word.letters().iter().map(|l| l.k()).collect();
            let rots: Vec<Vec<i32>> = (0..n).map(|r| [&ks[r..], &ks[..r]].concat()).collect();
            if rots.iter().min() != Some(&ks) {
                continue;
            }
            necklaces += 1;
            let aperiodic = rots.iter().collect::<BTreeSet<_>>().len() == n;
            let lyndon = rots.iter().filter(|r| is_lyndon(&w(r))).count();
            o.check(lyndon == usize::from(aperiodic), format!("necklace {ks:?} has {lyndon} Lyndon rotations"));
        }
    }
    o.note(format!("{necklaces} necklaces up to length 6 over 6 letters"));

    let mut opposite = 0;
    for root in roots_a_in(&window).into_iter().filter(|r| r.len() <= 5) {
        let nu = good_lyndon_words(&root.weight()).remove(0);
        let image = xi_eval(&lyndon_bracket(&nu, BracketConvention::Plus));
        o.check(image.min_word() == Some(&nu), format!("min of the support of [{nu}] is {:?}", image.min_word()));
        let image = xi_eval(&lyndon_bracket(&nu, BracketConvention::Minus));
        opposite += usize::from(image.min_word() != Some(&nu));
    }
    o.note(format!("with the opposite bracket sign the minimum moves on {opposite} roots"));
    o
}

fn permutations(xs: &[i32]) -> BTreeSet<Vec<i32>> {
    if xs.len() <= 1 {
        return BTreeSet::from([xs.to_vec()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.insert(p);
        }
    }
    out
}

/// Multisets of distinct symmetrized A-root weights summing to beta.
fn tkpf_oracle(beta: &DimVector) -> u64 {
    let letters: Vec<Letter> = beta.support();
    let roots: BTreeSet<DimVector> = roots_a_in(&letters)
        .into_iter()
        .map(|r| r.weight().symmetrize())
        .filter(|s| beta.contains(s))
        .collect();
    let roots: Vec<DimVector> = roots.into_iter().collect();
    fn count(rest: &DimVector, roots: &[DimVector], from: usize) -> u64 {
        if rest.is_zero() {
            return 1;
        }
        (from..roots.len())
            .filter_map(|i| rest.checked_sub(&roots[i]).map(|r| count(&r, roots, i)))
            .sum()
    }
    count(beta, &roots, 0)
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let weights = self_dual_weights(7, 4);
    for beta in &weights {
        let want = tkpf_oracle(beta);
        o.check(tkpf(beta) == want, format!("tkpf({beta}) = {}, oracle {want}", tkpf(beta)));
        let explicit = theta_good_words(beta);
        o.check(explicit.len() as u64 == want, format!("explicit theta-good count of {beta}: {}", explicit.len()));
        let brute = theta_good_bruteforce(beta, &DimVector::zero());
        o.check(brute.len() as u64 == want, format!("rank theta-good count of {beta}: {}", brute.len()));
        o.check(brute == explicit, format!("the two theta-good lists of {beta} differ"));
    }
    o.note(format!("{} self-dual weights", weights.len()));
    o
}

/// Right-letter recursion for the quantum shuffle product.
fn shuffle_rec(x: &Word, y: &Word) -> WordComb {
    if x.is_empty() || y.is_empty() {
        return WordComb::word(x.concat(y));
    }
    let (xs, i) = (x.prefix(x.len() - 1), x.last().unwrap());
    let (ys, j) = (y.prefix(y.len() - 1), y.last().unwrap());
    let mut out = shuffle_rec(x, &ys).map_words(|v| v.push(j));
    let e = -y.weight().dot_letter(i);
    out.add_scaled(&shuffle_rec(&xs, y).map_words(|v| v.push(i)), &LaurentPoly::q_pow(e));
    out
}

/// Letter-by-letter recursion for the module action v * z.
fn star_rec(v: &Word, z: &Word, lam: &DimVector) -> WordComb {
    if z.is_empty() {
        return WordComb::word(v.clone());
    }
    let n = z.len();
    let l = z.letters()[n - 1];
    let k = z.letters()[0];
    let rest = z.suffix_from(1);
    let mut out = star_rec(v, &z.prefix(n - 1), lam).map_words(|x| x.push(l));
    if let Some(j) = v.last() {
        let nu = v.prefix(v.len() - 1);
        let e = -z.weight().dot_letter(j);
        out.add_scaled(&star_rec(&nu, z, lam).map_words(|x| x.push(j)), &LaurentPoly::q_pow(e));
    }
    let mu = lam.symmetrize().dot_letter(k.theta()) - v.theta_weight().dot_letter(k.theta());
    let e = -rest.weight().dot_letter(k.theta()) + mu;
    out.add_scaled(&star_rec(v, &rest, lam).map_words(|x| x.push(k.theta())), &LaurentPoly::q_pow(e));
    out
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let a1 = w(&[1]);
    let sq = shuffle_words(&a1, &a1);
    o.check(sq == WordComb::term(w(&[1, 1]), lp("1+q^-2")), format!("a1 o a1 = {sq}"));
    let mut want = WordComb::word(w(&[1]));
    want.add_term(w(&[-1]), LaurentPoly::one());
    let got = star_words(&Word::empty(), &a1, &DimVector::zero());
    o.check(got == want, format!("vacuum * a1 at zero framing = {got}"));
    let mut want = WordComb::word(w(&[1]));
    want.add_term(w(&[-1]), LaurentPoly::q());
    let got = star_words(&Word::empty(), &a1, &dv("1:1"));
    o.check(got == want, format!("vacuum * a1 at framing a1 = {got}"));

    let alpha = Letter::window(3);
    let ws: Vec<Word> = (0..=3).flat_map(|n| all_words(&alpha, n)).collect();
    let mut products = 0;
    for x in &ws {
        for y in ws.iter().filter(|y| x.len() + y.len() <= 4) {
            products += 1;
            o.check(shuffle_words(x, y) == shuffle_rec(x, y), format!("shuffle {x} o {y}"));
            for lam in ["0", "1:1", "3:1,-1:2"] {
                let lam = dv(lam);
                o.check(star_words(x, y, &lam) == star_rec(x, y, &lam), format!("{x} * {y} at {lam}"));
            }
        }
    }
    o.note(format!("{products} word pairs, each at three framings"));
    o
}

/// Product over Lyndon factors of (-1)^(len-1) q^(-N) with
/// N = (|f| . |f| - 2 ht |f|) / 2.
fn lyndon_diag_oracle(nu: &Word) -> LaurentPoly {
    lyndon_factorize(nu).factors.iter().fold(LaurentPoly::one(), |acc, f| {
        let ls = f.letters();
        let dot: i64 = ls.iter().flat_map(|&i| ls.iter().map(move |&j| cartan(i, j))).sum();
        let n = (dot - 2 * ls.len() as i64) / 2;
        let sign = if ls.len() % 2 == 1 { 1 } else { -1 };
        &acc * &LaurentPoly::monomial(sign, -n)
    })
}

/// Unit diagonal and zero entries below it (column < row).
fn unitriangular(m: &LMatrix) -> bool {
    m.iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { j > i || c.is_zero() })
    })
}

fn basis_checks(b: &WeightBases, o: &mut Outcome, tag: &str) -> (usize, bool) {
    let words = b.words();
    let beta = &b.space.weight;
    let mut diag_bad = 0;
    for (i, nu) in words.iter().enumerate() {
        if b.lyndon_diag[i] != lyndon_diag_oracle(nu) {
            diag_bad += 1;
            if diag_bad == 1 {
                o.note(format!(
                    "{tag}{beta}: Lyndon diagonal at {nu} is {}, expected {}",
                    b.lyndon_diag[i],
                    lyndon_diag_oracle(nu)
                ));
            }
        }
    }
    o.check(unitriangular(&b.bar_pbw), format!("{tag}bar(PBW) of {beta} is not unitriangular"));
    let can_ok = unitriangular(&b.can_to_pbw.iter().map(|r| r.to_vec()).collect::<Vec<_>>()) && {
        b.can_to_pbw
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, c)| i == j || c.in_qzq()))
    };
    o.check(can_ok, format!("{tag}canonical-to-PBW matrix of {beta} is not unitriangular in qZ[q]"));
    for (i, x) in b.canonical.iter().enumerate() {
        let fixed = b.space.bar_lower(x).map(|y| y == *x).unwrap_or(false);
        o.check(fixed, format!("{tag}canonical element {} of {beta} is not bar-invariant", words[i]));
    }
    let rep = check_bases(b);
    (diag_bad, rep.q0_orthonormal)
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let weights = small_weights();
    let (mut diag_weights, mut q0_bad) = (0, 0);
    for beta in &weights {
        let b = match compute_bases(beta, BracketConvention::Plus) {
            Ok(b) => b,
            Err(e) => {
                o.check(false, format!("bases of {beta}: {e}"));
                continue;
            }
        };
        let (bad, q0) = basis_checks(&b, &mut o, "");
        if bad > 0 {
            diag_weights += 1;
        }
        if !q0 {
            q0_bad += 1;
        }
    }
    o.check(diag_weights == 0, format!("Lyndon diagonal differs from the expected sign and power on {diag_weights} of {} weights", weights.len()));
    o.check(q0_bad == 0, format!("canonical basis not orthonormal at q = 0 on {q0_bad} weights"));

    let (mut minus_diag, mut minus_q0) = (0, 0);
    let mut scratch = Outcome::new();
    for beta in &weights {
        if let Ok(b) = compute_bases(beta, BracketConvention::Minus) {
            let (bad, q0) = basis_checks(&b, &mut scratch, "minus bracket, ");
            minus_diag += usize::from(bad > 0);
            minus_q0 += usize::from(!q0);
        }
    }
    o.note(format!(
        "with the opposite bracket sign: diagonal mismatches on {minus_diag} weights, q = 0 orthonormality fails on {minus_q0} weights"
    ));
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let mut equal_cases = 0;
    for beta in self_dual_weights(3, 4) {
        let b = match compute_bases(&beta, BracketConvention::Plus) {
            Ok(b) => b,
            Err(e) => {
                o.check(false, format!("bases of {beta}: {e}"));
                continue;
            }
        };
        for (i, nu) in b.words().iter().enumerate() {
            let y = &b.dual_canonical[i];
            o.check(y.max_word() == Some(nu), format!("max word of dual canonical {nu} is {:?}", y.max_word()));
            o.check(y.coeff(nu) == theta_kappa(nu), format!("leading coefficient of dual canonical {nu}"));
            if is_theta_lyndon(nu) || is_symmetric_word(nu) {
                equal_cases += 1;
                o.check(*y == b.dual_pbw[i], format!("dual canonical and dual PBW differ at {nu}"));
            }
        }
        o.check(check_bases(&b).dual_canonical_ok, format!("dual canonical basis of {beta} is not dual"));
    }
    o.note(format!("{equal_cases} theta-Lyndon or symmetric words"));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let (mut lexprime_bad, mut antilex_bad) = (Vec::new(), 0);
    for beta in small_weights() {
        let t = match simple_chars(&beta, PeelMethod::BarInvariant) {
            Ok(t) => t,
            Err(e) => {
                o.check(false, format!("characters of {beta}: {e}"));
                continue;
            }
        };
        let n = t.words.len();
        o.check(n as u64 == tkpf_oracle(&beta), format!("{n} simples for {beta}"));
        for i in 0..n {
            for j in 0..n {
                let d = &t.decomp[i][j];
                let ok = if i == j {
                    d.is_one()
                } else if j > i {
                    d.is_zero()
                } else {
                    d.is_nonnegative()
                };
                o.check(ok, format!("decomposition entry ({}, {}) of {beta} is {d}", t.words[i], t.words[j]));
            }
        }
        let b = compute_bases(&beta, BracketConvention::Plus).ok();
        for (i, nu) in t.words.iter().enumerate() {
            let l = &t.simples[i];
            o.check(l.bar_coeffs() == *l, format!("simple {nu} is not bar-symmetric"));
            o.check(l.max_word() == Some(nu), format!("simple {nu} has max word {:?}", l.max_word()));
            o.check(l.coeff(nu) == theta_kappa(nu), format!("simple {nu} has leading coefficient {}", l.coeff(nu)));
            if is_symmetric_word(nu) {
                let same = b.as_ref().is_some_and(|b| b.dual_canonical[i] == *l);
                o.check(same, format!("simple {nu} differs from the dual canonical element"));
            }
        }
        if !check_table(&t, Order::LexPrime).costandard_same_simples {
            lexprime_bad.push(beta.to_string());
        }
        if !check_table(&t, Order::AntiLex).costandard_same_simples {
            antilex_bad += 1;
        }
    }
    o.check(
        lexprime_bad.is_empty(),
        format!("costandard peeling under the primed lex order misses on {} weights: {}", lexprime_bad.len(), lexprime_bad.join("; ")),
    );
    o.note(format!("costandard peeling under anti-lex reproduces the simples except on {antilex_bad} weights"));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let window: Vec<i32> = (-3..=3).collect();
    let mut entries = 0;
    for lam in ["0", "1:1", "1:1,3:2"] {
        let lam = vw(lam);
        for n in 1..=3 {
            for beta in vertex_weights(&window, n) {
                let rep = Rep::orientifold(&beta, &lam).unwrap();
                let rel = verify_relations(&rep, 6);
                let grading = verify_grading(&rep, 6).entries;
                entries += rel.len() + grading.len();
                o.check(all_pass(&rel), format!("relations at {beta}, {lam}: {:?}", failures(&rel)));
                o.check(all_pass(&grading), format!("grading at {beta}, {lam}: {:?}", failures(&grading)));
                if n <= 2 {
                    let maps = verify_symmetry_maps(Mode::Orientifold, &beta, &lam, 4).unwrap();
                    o.check(all_pass(&maps), format!("symmetry maps at {beta}, {lam}: {:?}", failures(&maps)));
                }
            }
        }
    }
    for n in 1..=3 {
        for beta in plain_weights(&window, n) {
            let rep = Rep::klr(&beta).unwrap();
            let rel = verify_relations(&rep, 6);
            entries += rel.len();
            o.check(all_pass(&rel), format!("plain relations at {beta}: {:?}", failures(&rel)));
        }
    }
    o.note(format!("{entries} report lines"));
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let window: Vec<i32> = (-3..=3).collect();
    for lam in ["0", "1:1", "1:1,3:2"] {
        let lam = vw(lam);
        for n in 1..=2 {
            for beta in vertex_weights(&window, n) {
                let rep = Rep::orientifold(&beta, &lam).unwrap();
                let pbw = verify_pbw_independence(&rep, 4, 2).unwrap();
                o.check(all_pass(&pbw), format!("PBW rank at {beta}, {lam}: {:?}", failures(&pbw)));
                let faith = faithfulness_proxy(&rep, 30, 6, 3, 17).unwrap();
                o.check(all_pass(&faith), format!("normal forms at {beta}, {lam}: {:?}", failures(&faith)));
                if n == 1 {
                    let reg = regular_module_check(rep.params(), &beta, 4).unwrap();
                    o.check(all_pass(&reg), format!("left-regular check at {beta}, {lam}: {:?}", failures(&reg)));
                }
            }
        }
    }
    let beta = vw("1:1,-1:1");
    let bad = ParamMatrices::quiver(&vw("0")).unwrap().with_q_vec(1, univariate(&[0, 1])).with_q_vec(-1, univariate(&[1]));
    o.check(!bad.perfection(&[-1, 1]).vector_perfect(), "engineered Q' passes the perfection checks");
    let rep = Rep::new(Mode::Orientifold, &beta, bad.clone()).unwrap();
    o.check(
        matches!(verify_pbw_independence(&rep, 4, 2), Err(OklrError::NoPolynomialRep)),
        "engineered Q' still has a polynomial representation",
    );
    let reg = regular_module_check(&bad, &beta, 4).unwrap();
    let fails: Vec<&ReportEntry> = reg.iter().filter(|e| e.status == Status::Fail).collect();
    o.check(!fails.is_empty(), "engineered Q' is not detected");
    o.check(fails.iter().all(|e| e.case == "t0^2"), "engineered Q' fails outside the t0^2 relation");
    if let Some(e) = fails.first() {
        o.note(format!("engineered Q' witness: {}", e.witness.clone().unwrap_or_default()));
    }
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let mut checks = 0;
    for lam in ["0", "1:1", "3:1,-1:2"] {
        let rep = verify_ek(&dv(lam), 3, 4);
        checks += rep.len();
        o.check(all_pass(&rep), format!("framing {lam}: {:?}", failures(&rep)));
        let cases: BTreeSet<&str> = rep.iter().map(|e| e.case.as_str()).collect();
        o.check(cases.len() == 9, format!("only {} identity kinds exercised", cases.len()));
    }
    o.note(format!("{checks} report lines over words of length <= 4"));
    o
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["oklr"];
    argv.extend_from_slice(args);
    let code = oklr_cli::run(argv, &mut out, &mut err);
    (code, out)
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let mut runs = 0;
    let mut commands: Vec<Vec<String>> = Vec::new();
    for beta in small_weights().iter().filter(|b| !b.is_zero()).map(|b| b.to_string()) {
        for kind in ["monomial", "lyndon", "pbw", "canonical", "dual-canonical"] {
            commands.push(["basis", "--weight", &beta, "--kind", kind].map(String::from).to_vec());
        }
        for what in ["standard", "simple", "decomp", "dims"] {
            commands.push(["char", what, "--weight", &beta].map(String::from).to_vec());
        }
        for kind in ["good", "theta-good", "theta-lyndon"] {
            commands.push(["words", "enum", "--weight", &beta, "--kind", kind].map(String::from).to_vec());
        }
    }
    commands.push(["shuffle", "mul", "1,3", "-1,1"].map(String::from).to_vec());
    commands.push(["shuffle", "star", "1", "3,1", "--lambda", "1:1"].map(String::from).to_vec());
    commands.push(["verify", "klr"].map(String::from).to_vec());
    commands.push(["verify", "pbw", "--seed", "5"].map(String::from).to_vec());
    for cmd in &commands {
        for format in ["json", "table", "csv"] {
            let mut base = vec!["--format", format];
            base.extend(cmd.iter().map(String::as_str));
            let (c1, fresh) = cli(&base);
            let (c2, again) = cli(&base);
            o.check(c1 == 0 && c2 == 0, format!("{base:?} exited with {c1}"));
            o.check(fresh == again, format!("{base:?} is not byte-identical across runs"));
            let mut cached = vec!["--cache-dir", cache];
            cached.extend_from_slice(&base);
            let (_, stored) = cli(&cached);
            let (_, reloaded) = cli(&cached);
            o.check(stored == fresh, format!("{base:?} differs when writing the cache"));
            o.check(reloaded == fresh, format!("{base:?} differs when reloading the cache"));
            runs += 4;
        }
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    o.note(format!("{runs} invocations, {files} cache files"));
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 10] = [
        ("order and Lyndon oracles", criterion_1, Some(10)),
        ("theta-good count equals tkpf", criterion_2, Some(120)),
        ("exact small products", criterion_3, None),
        ("basis triangularity", criterion_4, Some(300)),
        ("dual bases", criterion_5, None),
        ("character suite", criterion_6, Some(300)),
        ("KLR relation suite", criterion_7, Some(600)),
        ("PBW surrogate", criterion_8, Some(120)),
        ("EK operator identities", criterion_9, None),
        ("determinism and cache", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = run();
        let t = start.elapsed();
        if let Some(l) = limit {
            o.within(t, Duration::from_secs(*l));
        }
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status}  {name} ({:.1}s)", i + 1, t.as_secs_f64());
        for n in o.notes.iter().take(12) {
            println!("    {n}");
        }
        if o.notes.len() > 12 {
            println!("    ... {} more", o.notes.len() - 12);
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
