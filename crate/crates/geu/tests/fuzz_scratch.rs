//! Scratch fuzz: extended biconditional corpus. Not part of the suite.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geu::algebra::{ExpectationDomain, TableSpec};
use geu::decision::DecisionProblem;
use geu::measures::{PlausibilityMeasure, ProbabilityWeights};
use geu::pref::PreferenceRelation;
use geu::savage::{pi_membership, verify_representation, CheckIndex};
use geu::situation::{DecisionSituation, Subset};
use geu::synthesis;
use geu::value::{ConsId, Value};
use geu::Budgets;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn situation(ns: usize, nc: usize, n_acts: usize, rng: &mut ChaCha8Rng) -> DecisionSituation {
    let seed = DecisionSituation::new(
        (0..ns).map(|i| format!("s{i}")).collect(),
        (0..nc).map(|i| format!("c{i}")).collect(),
        vec![("x".into(), vec![ConsId(0); ns])],
    )
    .unwrap();
    let mut maps = seed.enumerate_simple_acts(4096).unwrap();
    maps.shuffle(rng);
    maps.truncate(n_acts);
    DecisionSituation::new(
        (0..ns).map(|i| format!("s{i}")).collect(),
        (0..nc).map(|i| format!("c{i}")).collect(),
        maps.into_iter().enumerate().map(|(i, m)| (format!("a{i}"), m)).collect(),
    )
    .unwrap()
}

fn grid_weight(rng: &mut ChaCha8Rng, n: usize) -> ProbabilityWeights {
    let den = rng.gen_range(2..=6u64);
    let mut cuts: Vec<u64> = (0..n - 1).map(|_| rng.gen_range(0..=den)).collect();
    cuts.push(0);
    cuts.push(den);
    cuts.sort_unstable();
    ProbabilityWeights::new(
        cuts.windows(2).map(|w| ratio((w[1] - w[0]) as i64, den as i64)).collect(),
    )
    .unwrap()
}

fn bool_table() -> TableSpec {
    let syms = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut oplus = std::collections::BTreeMap::new();
    let mut otimes = std::collections::BTreeMap::new();
    for x in ["0", "1"] {
        for y in ["0", "1"] {
            let or = if x == "1" || y == "1" { "1" } else { "0" };
            let and = if x == "1" && y == "1" { "1" } else { "0" };
            oplus.insert((x.to_string(), y.to_string()), or.to_string());
            otimes.insert((x.to_string(), y.to_string()), and.to_string());
        }
    }
    TableSpec {
        utility_carrier: syms(&["0", "1"]),
        plaus_carrier: syms(&["0", "1"]),
        valuation_carrier: syms(&["0", "1"]),
        bottom: "0".into(),
        top: "1".into(),
        oplus,
        otimes,
        utility_order: vec![("0".into(), "1".into())],
        plaus_order: vec![("0".into(), "1".into())],
        valuation_order: vec![("0".into(), "1".into())],
    }
}

#[test]
#[ignore]
fn extended_biconditional_fuzz() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFA22);
    let mut verified = 0u64;
    let mut whole_partial = 0u64;

    // 1. EU problems with PARTIAL act sets, kept only when whole: the
    // bracketed guards genuinely bite here.
    let mut tried = 0;
    while whole_partial < 60 && tried < 4000 {
        tried += 1;
        let ns = rng.gen_range(2..=3);
        let nc = 2;
        let max_acts = (nc as u64).pow(ns as u32) as usize;
        let n_acts = rng.gen_range(1..max_acts);
        let sit = situation(ns, nc, n_acts, &mut rng);
        let utility: Vec<Value> = (0..nc)
            .map(|_| Value::Rational(ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2))))
            .collect();
        let problem = DecisionProblem::new(
            sit,
            ExpectationDomain::standard(),
            utility,
            PlausibilityMeasure::probability(grid_weight(&mut rng, ns)),
        )
        .unwrap();
        let pi = pi_membership(&problem, Budgets::default()).unwrap();
        if !pi.zero || problem.situation().has_all_simple_acts() {
            continue;
        }
        whole_partial += 1;
        let report =
            verify_representation(&problem, &CheckIndex::ALL, Budgets::default()).unwrap();
        assert!(report.all_agree(), "partial-whole EU discrepancy: {report:#?}");
        verified += 7;
    }
    println!("partial-but-whole EU problems verified: {whole_partial}");

    // 2. pair-min problems with full act sets.
    for _ in 0..40 {
        let ns = rng.gen_range(2..=3);
        let sit = situation(ns, 2, (2u64.pow(ns as u32)) as usize, &mut rng);
        let utility: Vec<Value> = (0..2)
            .map(|_| Value::Rational(ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2))))
            .collect();
        let problem = DecisionProblem::new(
            sit,
            ExpectationDomain::pair_min(),
            utility,
            PlausibilityMeasure::pair(grid_weight(&mut rng, ns), grid_weight(&mut rng, ns))
                .unwrap(),
        )
        .unwrap();
        let report =
            verify_representation(&problem, &CheckIndex::ALL, Budgets::default()).unwrap();
        assert!(report.all_agree(), "pair-min discrepancy: {report:#?}");
        verified += 7;
    }

    // 3. Boolean-table (possibilistic) problems: random monotone boolean
    // measures with full act sets.
    let spec = bool_table();
    for _ in 0..40 {
        let ns = rng.gen_range(2..=3);
        let sit = situation(ns, 2, (2u64.pow(ns as u32)) as usize, &mut rng);
        // Random monotone boolean measure: choose a nonempty upward-closed
        // family of "possible" events containing S and excluding ∅.
        let n_subsets = 1usize << ns;
        let mut possible = vec![false; n_subsets];
        possible[n_subsets - 1] = true;
        for mask in 1..n_subsets - 1 {
            possible[mask] = rng.gen_bool(0.4);
        }
        // Upward closure.
        for mask in 1..n_subsets {
            for sup in mask..n_subsets {
                if sup & mask == mask && possible[mask] {
                    possible[sup] = true;
                }
            }
        }
        let entries: Vec<(Subset, Value)> = (0..n_subsets)
            .map(|mask| {
                let sym = if mask > 0 && possible[mask] { "1" } else { "0" };
                (Subset(mask as u64), Value::TableElem(sym.into()))
            })
            .collect();
        let measure = PlausibilityMeasure::table(ns, entries).unwrap();
        let problem = DecisionProblem::new(
            sit,
            ExpectationDomain::table(&spec).unwrap(),
            vec![Value::TableElem("1".into()), Value::TableElem("0".into())],
            measure,
        )
        .unwrap();
        let pi = pi_membership(&problem, Budgets::default()).unwrap();
        let indices: Vec<CheckIndex> =
            CheckIndex::ALL.into_iter().filter(|i| pi.contains(*i)).collect();
        let report = verify_representation(&problem, &indices, Budgets::default()).unwrap();
        assert!(report.all_agree(), "boolean-table discrepancy: {report:#?}");
        verified += indices.len() as u64;
    }

    // 4. Monotonic act-valued representations with partial act sets.
    for _ in 0..60 {
        let ns = rng.gen_range(1..=3);
        let nc = rng.gen_range(1..=2);
        let max_acts = (nc as u64).pow(ns as u32) as usize;
        let n_acts = rng.gen_range(1..=max_acts);
        let sit = situation(ns, nc, n_acts, &mut rng);
        let pref = PreferenceRelation::random(&sit, &mut rng);
        let rep = synthesis::monotonic_representation(&sit, &pref).unwrap();
        let report =
            verify_representation(&rep.problem, &CheckIndex::ALL, Budgets::default()).unwrap();
        assert!(report.all_agree(), "monotonic-rep discrepancy: {report:#?}");
        verified += 7;
    }

    println!("total biconditionals verified: {verified}");
}
