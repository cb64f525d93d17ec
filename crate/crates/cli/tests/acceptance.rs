//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tokensym::baselines::{
    jaccard_tokens, monge_elkan_hybrid, soft_tfidf, taglink, tfidf_cosine, CorpusStats,
    DEFAULT_SOFT_TFIDF_THETA,
};
use tokensym::eval::{avg_precision, load_pairs, rank_metrics, ScoredRanking};
use tokensym::hybrid::{enumerate_combinations, HybridConfig};
use tokensym::metric::standard_suite;
use tokensym::seqmetrics::{
    jaro_winkler, levenshtein_distance, BaseMetric, Element, ElementSequence,
};
use tokensym::symbolizer::{symbolize_pair, tokenize, SymbolSequence};

const EXAMPLE_1: (&str, &str) = (
    "centre de formation professionnelle des adultes",
    "centre de formation des adultes",
);
const EXAMPLE_2: (&str, &str) = ("bureau de poste", "poste de radio");
const PISTE: (&str, &str) = ("piste de ski", "ski de piste");

fn golden_path() -> &'static Path {
    Path::new(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/golden.tsv"
    ))
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn close(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        self.check(
            (got - want).abs() <= tol,
            format!("{what}: got {got:.4}, want {want} ± {tol}"),
        );
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn liuppa(i: u32, j: u32, (s1, s2): (&str, &str)) -> f64 {
    HybridConfig::from_codes(i, j)
        .unwrap()
        .score(s1, s2)
        .unwrap()
}

fn symbols(code: u32, epsilon: f64, (s1, s2): (&str, &str)) -> (SymbolSequence, SymbolSequence) {
    let metric = BaseMetric::ALL[code as usize - 1];
    symbolize_pair(&tokenize(s1), &tokenize(s2), &metric, epsilon).unwrap()
}

/// Jaro as found in older Java toolkits: window `min/2 + 1`, exclusive
/// upper bound, zero when the two common-character lists differ in length.
fn legacy_jaro(a: &[Element], b: &[Element]) -> f64 {
    let half = a.len().min(b.len()) / 2 + 1;
    let common = |s: &[Element], t: &[Element]| -> Vec<Element> {
        let mut taken = vec![false; t.len()];
        let mut out = Vec::new();
        for (i, &c) in s.iter().enumerate() {
            let lo = i.saturating_sub(half);
            let hi = (i + half).min(t.len());
            if let Some(j) = (lo..hi).find(|&j| !taken[j] && t[j] == c) {
                taken[j] = true;
                out.push(c);
            }
        }
        out
    };
    let (ca, cb) = (common(a, b), common(b, a));
    if ca.is_empty() || ca.len() != cb.len() {
        return 0.0;
    }
    let m = ca.len() as f64;
    let t = ca.iter().zip(&cb).filter(|(x, y)| x != y).count() as f64 / 2.0;
    (m / a.len() as f64 + m / b.len() as f64 + (m - t) / m) / 3.0
}

/// Affine-gap local alignment (match 5, mismatch -3, gap 5 + 1 per extra
/// element) divided by five times the shorter length.
fn affine_monge_elkan(a: &[Element], b: &[Element]) -> f64 {
    let (open, extend) = (5.0, 1.0);
    let (n, m) = (a.len(), b.len());
    let neg = f64::NEG_INFINITY;
    let mut h = vec![vec![0.0f64; m + 1]; n + 1];
    let mut e = vec![vec![neg; m + 1]; n + 1];
    let mut f = vec![vec![neg; m + 1]; n + 1];
    let mut best = 0.0f64;
    for i in 1..=n {
        for j in 1..=m {
            e[i][j] = (h[i][j - 1] - open).max(e[i][j - 1] - extend);
            f[i][j] = (h[i - 1][j] - open).max(f[i - 1][j] - extend);
            let s = if a[i - 1] == b[j - 1] { 5.0 } else { -3.0 };
            h[i][j] = 0.0f64.max(h[i - 1][j - 1] + s).max(e[i][j]).max(f[i][j]);
            best = best.max(h[i][j]);
        }
    }
    best / (5.0 * n.min(m) as f64)
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::default();
    for (j, name, want) in [
        (2, "Levenshtein", 0.83),
        (3, "NeedlemanWunsch", 0.83),
        (4, "SmithWaterman", 0.90),
        (7, "Jaro", 0.94),
        (1, "JaroWinkler", 0.96),
        (5, "Qgram", 0.67),
    ] {
        o.close(
            &format!("liuppa:1,{j} {name}"),
            liuppa(1, j, EXAMPLE_1),
            want,
            0.005,
        );
    }
    o.close(
        "liuppa:1,6 MongeElkan",
        liuppa(1, 6, EXAMPLE_1),
        0.833,
        0.0005,
    );
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::default();
    for (j, name, want) in [
        (2, "Levenshtein", 0.33),
        (3, "NeedlemanWunsch", 0.67),
        (4, "SmithWaterman", 0.33),
        (7, "Jaro", 0.0),
        (1, "JaroWinkler", 0.0),
        (5, "Qgram", 0.0),
        (6, "MongeElkan", 0.33),
    ] {
        o.close(
            &format!("liuppa:1,{j} {name}"),
            liuppa(1, j, EXAMPLE_2),
            want,
            0.005,
        );
    }
    if !o.failures.is_empty() {
        let (a, b) = symbols(1, 0.84, EXAMPLE_2);
        let (c, d) = symbols(1, 0.84, EXAMPLE_1);
        o.note(format!(
            "legacy-window Jaro gives {:.4} here but {:.4} on piste de ski (criterion 6 needs <= 0.6)",
            legacy_jaro(&a, &b),
            {
                let (p, q) = symbols(1, 0.84, PISTE);
                legacy_jaro(&p, &q)
            }
        ));
        o.note(format!(
            "affine-gap Monge-Elkan gives {:.4} here and {:.4} on example 1, where 0.833 is required",
            affine_monge_elkan(&a, &b),
            affine_monge_elkan(&c, &d)
        ));
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::default();
    for (pair, want1, want2) in [
        (EXAMPLE_1, vec![0, 1, 2, 3, 1, 4], vec![0, 1, 2, 1, 4]),
        (EXAMPLE_2, vec![0, 1, 2], vec![2, 1, 3]),
    ] {
        let (x, y) = symbols(1, 0.84, pair);
        o.check(
            x.as_slice() == want1 && y.as_slice() == want2,
            format!("{pair:?}: got {x}/{y}"),
        );
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::default();
    let jw = jaro_winkler(&ElementSequence::from("de"), &ElementSequence::from("des"));
    o.close("JW(de, des)", jw, 0.91, 0.005);
    o.check(jw >= 0.84, format!("JW(de, des) = {jw} below 0.84"));
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::default();
    for (labels, want) in [
        ([true, false, false, true], 0.75),
        ([true, true, false, false], 1.0),
    ] {
        let got = avg_precision(&ScoredRanking::from_ranked_labels(&labels), 2).unwrap();
        o.close(&format!("{labels:?}"), got, want, 1e-12);
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::default();
    let (s1, s2) = PISTE;
    let stats = CorpusStats::from_documents([s1, s2]);
    o.close("jaccard_tokens", jaccard_tokens(s1, s2), 1.0, 1e-12);
    o.close("tfidf_cosine", tfidf_cosine(&stats, s1, s2), 1.0, 1e-12);
    o.close(
        "monge_elkan_hybrid",
        monge_elkan_hybrid(s1, s2).unwrap(),
        1.0,
        1e-12,
    );
    o.close("taglink", taglink(s1, s2), 1.0, 1e-12);
    let hybrid = liuppa(1, 1, PISTE);
    o.check(hybrid <= 0.6, format!("liuppa:1,1 = {hybrid:.4} above 0.6"));
    o
}

fn seq() -> impl Strategy<Value = Vec<Element>> {
    prop::collection::vec(0u32..5, 0..=8)
}

fn phrase() -> impl Strategy<Value = String> {
    prop::collection::vec("[abcde]{1,5}", 1..=5).prop_map(|w| w.join(" "))
}

fn unit(x: f64) -> bool {
    (0.0..=1.0).contains(&x)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

fn property<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        rng_seed: RngSeed::Fixed(20_240_601),
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

type Scorer<'a> = dyn Fn(&str, &str) -> f64 + 'a;

fn criterion_7() -> Outcome {
    let mut o = Outcome::default();
    let mut suite = |name: &str, result: Result<(), String>| {
        o.check(
            result.is_ok(),
            format!("{name}: {}", result.err().unwrap_or_default()),
        );
    };
    suite(
        "base metrics: range, reflexivity, symmetry",
        property((seq(), seq()), |(a, b)| {
            for metric in BaseMetric::ALL {
                if metric == BaseMetric::MongeElkan && a.is_empty() {
                    continue;
                }
                let s = metric.score(&a, &b).unwrap();
                ensure(unit(s), || format!("{metric} out of range: {s}"))?;
                let r = metric.score(&a, &a).unwrap();
                ensure((r - 1.0).abs() < 1e-9, || {
                    format!("{metric} not reflexive: {r}")
                })?;
                if metric.is_symmetric() {
                    let t = metric.score(&b, &a).unwrap();
                    ensure((s - t).abs() < 1e-9, || {
                        format!("{metric} asymmetric: {s} vs {t}")
                    })?;
                }
            }
            Ok(())
        }),
    );

    let perm_seq = (
        seq(),
        seq(),
        Just((0u32..5).collect::<Vec<_>>()).prop_shuffle(),
    );
    suite(
        "base metrics: alphabet renaming",
        property(perm_seq, |(a, b, perm)| {
            let rename = |s: &[Element]| {
                s.iter()
                    .map(|&e| 100 + 3 * perm[e as usize])
                    .collect::<Vec<_>>()
            };
            for metric in BaseMetric::ALL {
                if metric == BaseMetric::MongeElkan && a.is_empty() {
                    continue;
                }
                let x = metric.score(&a, &b).unwrap();
                let y = metric.score(&rename(&a), &rename(&b)).unwrap();
                ensure((x - y).abs() < 1e-9, || format!("{metric}: {x} vs {y}"))?;
            }
            Ok(())
        }),
    );

    suite(
        "liuppa: range and reflexivity over 81 configurations",
        property((phrase(), phrase()), |(s1, s2)| {
            for config in enumerate_combinations() {
                let s = config.score(&s1, &s2).unwrap();
                ensure(unit(s), || format!("{config} out of range: {s}"))?;
                let r = config.score(&s1, &s1).unwrap();
                ensure((r - 1.0).abs() < 1e-9, || {
                    format!("{config} not reflexive: {r}")
                })?;
            }
            Ok(())
        }),
    );

    suite(
        "baselines: range, reflexivity, symmetry",
        property((phrase(), phrase()), |(s1, s2)| {
            let st = CorpusStats::from_documents([s1.as_str(), s2.as_str()]);
            let soft = |x: &str, y: &str| soft_tfidf(&st, x, y, DEFAULT_SOFT_TFIDF_THETA);
            let me = |x: &str, y: &str| monge_elkan_hybrid(x, y).unwrap();
            let tfidf = |x: &str, y: &str| tfidf_cosine(&st, x, y);
            let all: [(&str, &Scorer, bool); 5] = [
                ("jaccard", &jaccard_tokens, true),
                ("tfidf", &tfidf, true),
                ("softtfidf", &soft, false),
                ("mongeelkan_hybrid", &me, false),
                ("taglink", &taglink, true),
            ];
            for (name, f, symmetric) in all {
                let s = f(&s1, &s2);
                ensure(unit(s), || format!("{name} out of range: {s}"))?;
                let r = f(&s1, &s1);
                ensure((r - 1.0).abs() < 1e-9, || {
                    format!("{name} not reflexive: {r}")
                })?;
                if symmetric {
                    let t = f(&s2, &s1);
                    ensure((s - t).abs() < 1e-9, || {
                        format!("{name} asymmetric: {s} vs {t}")
                    })?;
                }
            }
            Ok(())
        }),
    );

    suite(
        "symbolization: refinement as epsilon grows",
        property(
            (phrase(), phrase(), 1u32..=9, 0.01f64..=1.0, 0.01f64..=1.0),
            |(s1, s2, code, e1, e2)| {
                let (lo, hi) = (e1.min(e2), e1.max(e2));
                let flat = |(x, y): (SymbolSequence, SymbolSequence)| {
                    [x.as_slice(), y.as_slice()].concat()
                };
                let coarse = flat(symbols(code, lo, (&s1, &s2)));
                let fine = flat(symbols(code, hi, (&s1, &s2)));
                for p in 0..fine.len() {
                    for q in p + 1..fine.len() {
                        ensure(fine[p] != fine[q] || coarse[p] == coarse[q], || {
                            format!("tokens {p},{q} merged at {hi} but split at {lo}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
    );

    let labels = prop::collection::vec(any::<bool>(), 2..20);
    suite(
        "avg_precision: adjacent swaps",
        property(
            (labels.clone(), any::<prop::sample::Index>()),
            |(labels, at)| {
                let m = labels.iter().filter(|&&c| c).count();
                if m == 0 {
                    return Ok(());
                }
                let k = at.index(labels.len() - 1);
                let ap =
                    |l: &[bool]| avg_precision(&ScoredRanking::from_ranked_labels(l), m).unwrap();
                let mut swapped = labels.clone();
                swapped.swap(k, k + 1);
                let (before, after) = (ap(&labels), ap(&swapped));
                let ok = match (labels[k], labels[k + 1]) {
                    (false, true) => after > before,
                    (true, false) => after < before,
                    _ => after == before,
                };
                ensure(ok, || {
                    format!("{labels:?} swap at {k}: {before} -> {after}")
                })
            },
        ),
    );

    let scored = prop::collection::vec((0u8..6, any::<bool>()), 1..20);
    suite(
        "avg_precision: monotone score transforms",
        property(
            (scored, 0.1f64..10.0, -5.0f64..5.0),
            |(scored, scale, shift)| {
                let m = scored.iter().filter(|x| x.1).count();
                if m == 0 {
                    return Ok(());
                }
                let ap = |f: &dyn Fn(f64) -> f64| {
                    let ranking =
                        ScoredRanking::new(scored.iter().map(|&(s, c)| (f(f64::from(s)), c)));
                    avg_precision(&ranking, m).unwrap()
                };
                let base = ap(&|s| s);
                let affine = ap(&|s| s * scale + shift);
                let cubic = ap(&|s| (s - 2.5).powi(3));
                ensure(base == affine && base == cubic, || {
                    format!("{base} {affine} {cubic}")
                })
            },
        ),
    );
    o
}

fn naive_levenshtein(a: &[Element], b: &[Element]) -> usize {
    match (a.split_first(), b.split_first()) {
        (None, _) => b.len(),
        (_, None) => a.len(),
        (Some((x, ra)), Some((y, rb))) if x == y => naive_levenshtein(ra, rb),
        (Some((_, ra)), Some((_, rb))) => {
            1 + naive_levenshtein(ra, b)
                .min(naive_levenshtein(a, rb))
                .min(naive_levenshtein(ra, rb))
        }
    }
}

fn all_sequences(max_len: usize, alphabet: u32) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s: &Vec<Element>| {
                (0..alphabet).map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::default();
    let sequences = all_sequences(6, 3);
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = sequences.len().div_ceil(threads);
    let mismatches: Vec<String> = std::thread::scope(|scope| {
        let handles: Vec<_> = sequences
            .chunks(chunk)
            .map(|part| {
                let all = &sequences;
                scope.spawn(move || {
                    let mut bad = Vec::new();
                    for a in part {
                        for b in all {
                            if levenshtein_distance(a, b) != naive_levenshtein(a, b) {
                                bad.push(format!("{a:?} vs {b:?}"));
                            }
                        }
                    }
                    bad
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    let pairs = sequences.len() * sequences.len();
    o.check(
        sequences.len() == 1093,
        format!("enumerated {} sequences", sequences.len()),
    );
    o.check(
        mismatches.is_empty(),
        format!(
            "{} of {pairs} pairs differ, e.g. {:?}",
            mismatches.len(),
            mismatches.first()
        ),
    );
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::default();
    let data = load_pairs(golden_path()).unwrap();
    let reports = rank_metrics(&standard_suite(CorpusStats::from_dataset(&data)), &data).unwrap();
    let find = |name: &str| reports.iter().position(|r| r.metric == name).unwrap();
    let (hybrid, plain) = (find("liuppa:1,1"), find("jarowinkler"));
    let (ap_h, ap_p) = (reports[hybrid].avg_precision, reports[plain].avg_precision);
    o.check(
        ap_h == 1.0,
        format!("liuppa:1,1 average precision {ap_h:.4}"),
    );
    o.check(
        hybrid < plain && ap_h > ap_p,
        format!(
            "liuppa:1,1 at row {} ({ap_h:.4}), jarowinkler at row {} ({ap_p:.4})",
            hybrid + 1,
            plain + 1
        ),
    );
    if ap_p == 1.0 {
        let jw = |a: &str, b: &str| {
            jaro_winkler(
                &ElementSequence::from_text(a),
                &ElementSequence::from_text(b),
            )
        };
        o.note(format!(
            "plain JaroWinkler also separates the golden pairs: weakest correct pair {:.4} > strongest incorrect pair {:.4}",
            jw("chemin de fer touristique", "voie ferrée touristique"),
            jw("nation", "haras national")
        ));
    }
    o
}

fn random_dataset(path: &Path) {
    let words = [
        "voie",
        "ferrée",
        "chemin",
        "fer",
        "gare",
        "poste",
        "radio",
        "bureau",
        "centre",
        "de",
        "formation",
        "des",
        "adultes",
        "piste",
        "ski",
        "haras",
        "national",
        "nation",
        "parc",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let phrase = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=5);
        (0..n)
            .map(|_| *words.choose(rng).unwrap())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut file = std::fs::File::create(path).unwrap();
    for i in 0..300 {
        let (a, b) = (phrase(&mut rng), phrase(&mut rng));
        writeln!(file, "{a}\t{b}\t{}", u8::from(i % 3 == 0)).unwrap();
    }
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::default();
    let dir = tempfile::tempdir().unwrap();
    let random = dir.path().join("random.tsv");
    random_dataset(&random);
    for path in [golden_path(), random.as_path()] {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_tokensym"))
                .args(["eval", "--dataset"])
                .arg(path)
                .arg("--all")
                .output()
                .unwrap()
        };
        let (first, second) = (run(), run());
        o.check(
            first.status.success(),
            format!("{}: exit {}", path.display(), first.status),
        );
        o.check(
            first.stdout == second.stdout,
            format!("{}: outputs differ", path.display()),
        );
        let rows = first.stdout.iter().filter(|&&c| c == b'\n').count();
        o.check(
            rows == 95,
            format!("{}: {rows} lines, want header + 94", path.display()),
        );
    }
    o
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "golden example 1 table row",
            criterion_1,
            Some(Duration::from_secs(1)),
        ),
        (
            "golden example 2 table row",
            criterion_2,
            Some(Duration::from_secs(1)),
        ),
        ("symbolization golden sequences", criterion_3, None),
        ("token threshold JW(de, des)", criterion_4, None),
        ("average precision worked examples", criterion_5, None),
        ("order sensitivity on piste de ski", criterion_6, None),
        ("property suites, 1000 cases each", criterion_7, None),
        (
            "Levenshtein DP vs naive recursion",
            criterion_8,
            Some(Duration::from_secs(30)),
        ),
        ("golden leaderboard sanity", criterion_9, None),
        ("eval --all determinism", criterion_10, None),
    ];
    let mut failed = 0;
    let mut stdout = std::io::stdout().lock();
    for (index, (title, criterion, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = criterion();
        let elapsed = start.elapsed();
        if let Some(budget) = budget {
            outcome.check(
                elapsed < budget,
                format!("took {elapsed:.2?}, budget {budget:?}"),
            );
        }
        let status = if outcome.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        writeln!(
            stdout,
            "{status} criterion {}: {title} ({elapsed:.2?})",
            index + 1
        )
        .unwrap();
        for failure in &outcome.failures {
            writeln!(stdout, "     - {failure}").unwrap();
        }
        for note in &outcome.notes {
            writeln!(stdout, "     note: {note}").unwrap();
        }
        failed += usize::from(!outcome.failures.is_empty());
    }
    writeln!(stdout, "{} of 10 criteria passed", 10 - failed).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
