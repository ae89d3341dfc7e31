//! Acceptance suite: one line per criterion, PASS or FAIL with details.
//!
//! A criterion that cannot be met as stated is listed in `KNOWN_FAILURES`
//! together with the exact mismatch it produces; the test fails if any other
//! criterion fails or if a known failure changes.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use ctgf::cyclotomic::totient;
use ctgf::quasipoly::is_integral;
use ctgf::*;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::result::Result;

const COINS: [u64; 4] = [1, 5, 10, 25];

/// The printed 31st term of psi_7 drops a digit of 155646, and its printed
/// leading coefficient 841/829440 disagrees with its own factored form
/// 29^2/(2^12 3^4 5^2) = 841/8294400.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (5, "psi7 term 30: printed 15564, computed 155646"),
    (
        6,
        "psi7: printed 841/829440 n^6, qp_leading 841/8294400 n^6, leading_via_limit 841/8294400 n^6",
    ),
];

fn term_text(t: &ctgf::Result<AsymptoticTerm>) -> String {
    match t {
        Ok(t) => format!("{} n^{}", t.coefficient, t.degree),
        Err(e) => e.name().to_string(),
    }
}

const COIN_P: [i64; 55] = [
    1, 1, 3, 4, 9, 15, 25, 37, 54, 76, 101, 128, 158, 190, 226, 256, 290, 318, 353, 372, 394, 405,
    425, 431, 439, 438, 448, 448, 448, 438, 439, 431, 425, 405, 394, 372, 353, 318, 290, 256, 226,
    190, 158, 128, 101, 76, 54, 37, 25, 15, 9, 4, 3, 1, 1,
];

const COIN_TERMS: [i64; 31] = [
    1, 0, 4, 2, 12, 12, 34, 40, 85, 108, 190, 250, 394, 516, 762, 984, 1385, 1764, 2396, 2998,
    3966, 4886, 6316, 7684, 9739, 11706, 14594, 17358, 21320, 25134, 30470,
];

const HUGE_VALUE: &str = "18695938834827723716612605501494390383279272168161057049945938834827723716612605501494390383279272213031310253532475754697976920199142421364643586865809088031310253532475754697976920199142421364643643642879753990865101976213087324198435309546420657531768642879753990865101976213087324198435309546463639241417019194796972574750352528130305908083685861463639241417019194796972574750352528130305908101754413282191059968837746615524393302171079948857726635504413282191059968837746615524393302171079952477530699752921975144197366419588641810864033086255308477530699752921975144197366419588641810864035";

const PSI_TERMS: [(u32, [i64; 31]); 6] = [
    (
        2,
        [
            1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13,
            14, 14, 15, 15, 16,
        ],
    ),
    (
        3,
        [
            1, 1, 2, 3, 5, 6, 8, 10, 13, 15, 18, 21, 25, 28, 32, 36, 41, 45, 50, 55, 61, 66, 72,
            78, 85, 91, 98, 105, 113, 120, 128,
        ],
    ),
    (
        4,
        [
            1, 1, 3, 5, 8, 12, 18, 24, 33, 43, 55, 69, 86, 104, 126, 150, 177, 207, 241, 277, 318,
            362, 410, 462, 519, 579, 645, 715, 790, 870, 956,
        ],
    ),
    (
        5,
        [
            1, 1, 3, 6, 12, 20, 32, 49, 73, 102, 141, 190, 252, 325, 414, 521, 649, 795, 967, 1165,
            1394, 1651, 1944, 2275, 2649, 3061, 3523, 4035, 4604, 5225, 5910,
        ],
    ),
    (
        6,
        [
            1, 1, 4, 8, 18, 32, 58, 94, 151, 227, 338, 480, 676, 920, 1242, 1636, 2137, 2739, 3486,
            4370, 5444, 6698, 8196, 9926, 11963, 14293, 17002, 20076, 23612, 27594, 32134,
        ],
    ),
    (
        7,
        [
            1, 1, 4, 10, 24, 49, 94, 169, 289, 468, 734, 1117, 1656, 2385, 3370, 4672, 6375, 8550,
            11322, 14800, 19138, 24460, 30982, 38882, 48417, 59779, 73316, 89291, 108108, 130053,
            15564,
        ],
    ),
];

// printed factors, ascending coefficients
const ONE_MINUS_T: &[i64] = &[1, -1];
const ONE_PLUS_T: &[i64] = &[1, 1];
const T2_PLUS_1: &[i64] = &[1, 0, 1];
const T2_T_1: &[i64] = &[1, 1, 1];
const T2_MT_1: &[i64] = &[1, -1, 1];
const T4_PLUS_1: &[i64] = &[1, 0, 0, 0, 1];
const T4_SUM: &[i64] = &[1, 1, 1, 1, 1];
const T4_ALT: &[i64] = &[1, -1, 1, -1, 1];
const T4_MT2_1: &[i64] = &[1, 0, -1, 0, 1];
const T6_SUM: &[i64] = &[1; 7];
const T10_SUM: &[i64] = &[1; 11];
const T12_SUM: &[i64] = &[1; 13];
const T12_ALT: &[i64] = &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1];

fn expand(factors: &[(&[i64], u32)]) -> Poly {
    factors.iter().fold(Poly::one(), |acc, (c, e)| {
        &acc * &Poly::from_ints(c.iter().copied()).pow(*e)
    })
}

fn coin_q() -> Poly {
    expand(&[
        (ONE_MINUS_T, 7),
        (ONE_PLUS_T, 5),
        (T2_T_1, 3),
        (T2_MT_1, 2),
        (T12_SUM, 1),
        (T12_ALT, 1),
        (T10_SUM, 1),
        (T6_SUM, 1),
    ])
}

fn printed_psi(n: u32) -> (Poly, Poly) {
    match n {
        2 => (Poly::one(), expand(&[(ONE_MINUS_T, 2), (ONE_PLUS_T, 1)])),
        3 => (
            Poly::from_ints(T2_MT_1.iter().copied()),
            expand(&[(ONE_MINUS_T, 3), (ONE_PLUS_T, 1), (T2_PLUS_1, 1)]),
        ),
        5 => (
            Poly::from_ints([1, -1, 2, 1, 2, 3, 1, 5, 1, 3, 2, 1, 2, -1, 1]),
            expand(&[
                (ONE_MINUS_T, 5),
                (ONE_PLUS_T, 3),
                (T2_PLUS_1, 2),
                (T2_T_1, 1),
                (T2_MT_1, 1),
                (T4_PLUS_1, 1),
            ]),
        ),
        6 => (
            Poly::from_ints([1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1]),
            expand(&[
                (ONE_MINUS_T, 6),
                (T2_PLUS_1, 1),
                (T4_SUM, 1),
                (ONE_PLUS_T, 3),
                (T2_T_1, 1),
            ]),
        ),
        7 => (
            Poly::from_ints([
                1, -1, 3, 3, 7, 12, 16, 28, 33, 46, 56, 73, 83, 90, 106, 109, 121, 110, 121, 109,
                106, 90, 83, 73, 56, 46, 33, 28, 16, 12, 7, 3, 3, -1, 1,
            ]),
            expand(&[
                (ONE_MINUS_T, 7),
                (ONE_PLUS_T, 5),
                (T2_PLUS_1, 3),
                (T2_T_1, 2),
                (T2_MT_1, 2),
                (T4_PLUS_1, 1),
                (T4_SUM, 1),
                (T4_ALT, 1),
                (T4_MT2_1, 1),
            ]),
        ),
        _ => unreachable!(),
    }
}

fn coin_gf() -> RatFunc {
    coeff_z(&pockets_spec(&COINS, &COINS), 0).unwrap()
}

fn psi(n: u32) -> RatFunc {
    coeff_z(&almkvist_spec(n).unwrap(), 0).unwrap()
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn same_fraction(gf: &RatFunc, num: &Poly, den: &Poly) -> bool {
    (gf.num() * den) == (gf.den() * num)
}

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn criterion_1() -> Check {
    let gf = coin_gf();
    let p = Poly::from_ints(COIN_P);
    let q = coin_q();
    if p.degree() != Some(54) || q.degree() != Some(62) {
        return Err("printed P or Q has the wrong degree".into());
    }
    if same_fraction(&gf, &p, &q) {
        Ok("num·Q = den·P with deg P = 54, deg Q = 62".to_string())
    } else {
        Err(format!("cross-multiplication differs; got {gf}"))
    }
}

fn criterion_2() -> Check {
    let got = taylor(&coin_gf(), 30).map_err(|e| e.to_string())?;
    let want: Vec<Rational> = COIN_TERMS.iter().map(|&c| rat(c)).collect();
    if got == want {
        Ok("31 coefficients match".into())
    } else {
        Err(format!(
            "got {:?}",
            got.iter().map(|c| c.to_string()).collect::<Vec<_>>()
        ))
    }
}

fn criterion_3() -> Check {
    let qp = to_quasipoly(&coin_gf()).map_err(|e| e.to_string())?;
    let n = BigUint::from(10u32).pow(100);
    let start = Instant::now();
    let v = qp_eval(&qp, &n);
    let elapsed = start.elapsed();
    let s = v.to_string();
    if s != HUGE_VALUE {
        return Err(format!("value differs ({} digits)", s.len()));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("value matches but took {elapsed:?}"));
    }
    Ok(format!("{} digits match in {elapsed:?}", s.len()))
}

fn criterion_4() -> Check {
    let gf = coin_gf();
    let qp = to_quasipoly(&gf).map_err(|e| e.to_string())?;
    let want = AsymptoticTerm {
        degree: 6,
        coefficient: Rational::new(5821.into(), 311351040.into()),
    };
    let a = qp_leading(&qp).map_err(|e| e.to_string())?;
    let b = leading_via_limit(&gf).map_err(|e| e.to_string())?;
    if a == want && b == want {
        Ok("both give 5821/311351040·n^6".into())
    } else {
        Err(format!("qp_leading {a:?}, leading_via_limit {b:?}"))
    }
}

fn criterion_5() -> Check {
    let mut problems = Vec::new();
    for n in [2, 3, 5, 6, 7] {
        let (num, den) = printed_psi(n);
        if !same_fraction(&psi(n), &num, &den) {
            problems.push(format!("psi{n} closed form differs"));
        }
    }
    for (n, terms) in PSI_TERMS {
        let got = taylor(&psi(n), 30).map_err(|e| e.to_string())?;
        for (k, (g, &w)) in got.iter().zip(terms.iter()).enumerate() {
            if *g != rat(w) {
                problems.push(format!("psi{n} term {k}: printed {w}, computed {g}"));
            }
        }
    }
    if problems.is_empty() {
        Ok("closed forms for n = 2,3,5,6,7 and 31 terms for n = 2..7 match".into())
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_6() -> Check {
    let table = [
        (2, 1, (1, 2)),
        (3, 2, (1, 8)),
        (4, 3, (1, 36)),
        (5, 4, (23, 4608)),
        (6, 5, (11, 14400)),
        (7, 6, (841, 829440)),
    ];
    let mut problems = Vec::new();
    for (n, degree, (p, q)) in table {
        let want = AsymptoticTerm {
            degree,
            coefficient: Rational::new(p.into(), q.into()),
        };
        let gf = psi(n);
        let qp = to_quasipoly(&gf).map_err(|e| e.to_string())?;
        let a = qp_leading(&qp);
        let b = leading_via_limit(&gf);
        if a.as_ref() != Ok(&want) || b.as_ref() != Ok(&want) {
            problems.push(format!(
                "psi{n}: printed {p}/{q} n^{degree}, qp_leading {}, leading_via_limit {}",
                term_text(&a),
                term_text(&b)
            ));
        }
    }
    if problems.is_empty() {
        Ok("six leading terms match".into())
    } else {
        Err(problems.join("; "))
    }
}

/// Taylor series of the extracted GF, [z^m] of the truncated expansion, and
/// (when given) a direct count, all for n ≤ `n_max`.
fn oracle_agreement(
    spec: &ProductSpec,
    ms: &[i64],
    n_max: usize,
    count: Option<&dyn Fn(usize, i64) -> Rational>,
) -> Result<(), String> {
    let pf = partial_fractions_z(spec).map_err(|e| e.to_string())?;
    let rows = bivariate_truncate(spec, n_max);
    for &m in ms {
        let series = taylor(&coeff_z_from(spec, &pf, m), n_max).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            let row = rows[n].coeff(m);
            if series[n] != row {
                return Err(format!(
                    "m = {m}, n = {n}: series {} vs expansion {row}",
                    series[n]
                ));
            }
            if let Some(f) = count {
                let c = f(n, m);
                if c != row {
                    return Err(format!("m = {m}, n = {n}: expansion {row} vs count {c}"));
                }
            }
        }
    }
    Ok(())
}

fn pair_count(left: &'static [u64], right: &'static [u64]) -> impl Fn(usize, i64) -> Rational {
    move |n, m| rat(enumerate_pairs(left, right, n, m).unwrap() as i64)
}

fn criterion_7() -> Check {
    let count = pair_count(&COINS, &COINS);
    oracle_agreement(
        &pockets_spec(&COINS, &COINS),
        &[0, 1, -1, 5, -5],
        12,
        Some(&count),
    )?;
    Ok("three routes agree for n ≤ 12, m ∈ {0,±1,±5}".into())
}

fn random_cyclotomic_fractions(count: usize, seed: u64) -> Vec<RatFunc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut den = Poly::one();
        let mut deg = 0;
        let target = rng.gen_range(1..=40);
        while deg < target {
            let d = rng.gen_range(1..=30u64);
            let phi = totient(d) as usize;
            if deg + phi > 40 {
                if deg > 0 {
                    break;
                }
                continue;
            }
            den = &den * &cyclotomic(d);
            deg += phi;
        }
        let num = Poly::from_ints((0..rng.gen_range(1..=deg)).map(|_| rng.gen_range(-5..=5)));
        if !num.is_zero() {
            out.push(RatFunc::new(num, den).unwrap());
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        acc * rat((n - i) as i64) / rat((i + 1) as i64)
    })
}

fn criterion_8() -> Check {
    let counting: Vec<(String, RatFunc)> = std::iter::once(("coins".to_string(), coin_gf()))
        .chain((2..=7).map(|n| (format!("psi{n}"), psi(n))))
        .collect();
    let mut corpus = counting.clone();
    corpus.extend(
        random_cyclotomic_fractions(30, 97)
            .into_iter()
            .enumerate()
            .map(|(i, rf)| (format!("random{i}"), rf)),
    );

    for (name, rf) in &corpus {
        let qp = to_quasipoly(rf).map_err(|e| format!("{name}: {e}"))?;
        let n_max = 2 * rf.den().degree().unwrap() + 10;
        let series = taylor(rf, n_max).map_err(|e| e.to_string())?;
        for (n, c) in series.iter().enumerate() {
            if qp_eval(&qp, &BigUint::from(n)) != *c {
                return Err(format!("round trip {name}: n = {n}"));
            }
        }
        let f = cyclo_factor(rf.den()).map_err(|e| format!("{name}: {e}"))?;
        if f.expand() != *rf.den() {
            return Err(format!("reconstruction {name}"));
        }
    }

    let symmetric: Vec<ProductSpec> = std::iter::once(pockets_spec(&COINS, &COINS))
        .chain((2..=7).map(|n| almkvist_spec(n).unwrap()))
        .collect();
    for spec in &symmetric {
        let pf = partial_fractions_z(spec).map_err(|e| e.to_string())?;
        for m in 1..=8 {
            if coeff_z_from(spec, &pf, m) != coeff_z_from(spec, &pf, -m) {
                return Err(format!("mirror symmetry at m = {m} for {spec:?}"));
            }
        }
    }

    for (n, row) in bivariate_truncate(&pockets_spec(&COINS, &COINS), 30)
        .iter()
        .enumerate()
    {
        if row.eval_at_one() != binomial(n as u64 + 7, 7) {
            return Err(format!("z = 1 specialization at n = {n}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1980);
    let bound = BigUint::from(10u32).pow(30);
    for (name, rf) in &counting {
        let qp = to_quasipoly(rf).map_err(|e| e.to_string())?;
        for _ in 0..200 {
            let limbs: Vec<u32> = (0..4).map(|_| rng.gen()).collect();
            let n = BigUint::from_slice(&limbs) % &bound;
            if !is_integral(&qp_eval(&qp, &n)) {
                return Err(format!("integrality {name} at n = {n}"));
            }
        }
    }
    Ok(format!(
        "round trip and reconstruction on {} fractions; symmetry, C(n+7,7), 1400 huge integer values",
        corpus.len()
    ))
}

fn cli_json(args: &[&str]) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ctgf"))
        .args(args)
        .args(["--format", "json", "--terms", "11"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{:?} exited with {}: {}",
            args,
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn json_terms(v: &serde_json::Value) -> Vec<Rational> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().parse().unwrap())
        .collect()
}

fn criterion_9() -> Check {
    const HALF: [u64; 5] = [1, 5, 10, 25, 50];
    let ms = [0, 1, -1, 5, -5];

    let pockets = cli_json(&[
        "pockets",
        "--left",
        "1,5,10,25,50",
        "--right",
        "1,5,10,25,50",
    ])?;
    let spec = pockets_spec(&HALF, &HALF);
    let rows = bivariate_truncate(&spec, 10);
    let cli = json_terms(&pockets);
    if (0..=10).any(|n| cli[n] != rows[n].coeff(0)) {
        return Err("pockets CLI terms disagree with the expansion".into());
    }
    let count = pair_count(&HALF, &HALF);
    oracle_agreement(&spec, &ms, 10, Some(&count)).map_err(|e| format!("half dollar: {e}"))?;

    let psi9 = cli_json(&["psi", "--n", "9"])?;
    let spec = almkvist_spec(9).unwrap();
    let rows = bivariate_truncate(&spec, 10);
    let cli = json_terms(&psi9);
    if (0..=10).any(|n| cli[n] != rows[n].coeff(0)) {
        return Err("psi CLI terms disagree with the expansion".into());
    }
    // numerator (z^{-1} + 2 + z)/2 over exponents ±1, ±3, ..., ±9
    const ODD: [u64; 5] = [1, 3, 5, 7, 9];
    let psi_count = |n: usize, m: i64| {
        let pairs = |mm: i64| rat(enumerate_pairs(&ODD, &ODD, n, mm).unwrap() as i64);
        (pairs(m + 1) + pairs(m) * rat(2) + pairs(m - 1)) / rat(2)
    };
    oracle_agreement(&spec, &ms, 10, Some(&psi_count)).map_err(|e| format!("psi9: {e}"))?;
    Ok("both variants run; series = expansion = enumeration for n ≤ 10".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "coin-pocket generating function equals P/Q", criterion_1),
        (2, "coin-pocket series, first 31 terms", criterion_2),
        (3, "a(10^100) digit string and runtime", criterion_3),
        (4, "coin-pocket leading asymptotics", criterion_4),
        (5, "psi_n closed forms and sequences", criterion_5),
        (6, "psi_n leading asymptotics", criterion_6),
        (7, "oracle triple agreement", criterion_7),
        (8, "property suite", criterion_8),
        (9, "half-dollar and psi_9 variants", criterion_9),
    ];
    let mut failures: BTreeMap<u32, String> = BTreeMap::new();
    for (id, label, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {id} PASS  {label}: {detail} [{took:.2?}]"),
            Err(detail) => {
                let known = KNOWN_FAILURES.iter().any(|&(k, d)| k == id && d == detail);
                let tag = if known { " (known)" } else { "" };
                println!("criterion {id} FAIL{tag}  {label}: {detail} [{took:.2?}]");
                failures.insert(id, detail);
            }
        }
    }
    let expected: BTreeMap<u32, String> = KNOWN_FAILURES
        .iter()
        .map(|&(k, d)| (k, d.to_string()))
        .collect();
    if failures != expected {
        eprintln!("unexpected acceptance outcome: got {failures:?}, expected {expected:?}");
        std::process::exit(1);
    }
    println!(
        "acceptance outcome matches: {} pass, {} known failures",
        9 - expected.len(),
        expected.len()
    );
}
