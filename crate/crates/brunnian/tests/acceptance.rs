//! Acceptance suite: exhaustive and seeded verification of the crate's
//! headline guarantees, one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`). All equalities are exact —
//! rational arithmetic end to end, zero tolerance.

use std::time::Instant;

use brunnian::{
    family_contests, realize, sample_distinct, verify_roundtrip, verify_structures,
    ConnectivityStructure, Dissociation, GroundSet, Lcg64, ProbabilitySpace, RandomFamily,
    RandomVariable, Rational, StructureCatalog, Subset,
};

fn ground(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

fn all_dissociations(g: GroundSet) -> Vec<Dissociation> {
    g.subsets().flat_map(Dissociation::enumerate).collect()
}

/// Independent closure validator: literal enumeration of every subset of
/// {A ⊆ I : |A| ≥ 2}, counting those that validate as closed families.
fn brute_force_structure_count(n: usize) -> usize {
    let g = ground(n);
    let candidates: Vec<Subset> = g
        .subsets()
        .filter(|s| s.cardinality() >= 2)
        .collect();
    assert!(candidates.len() <= 11, "brute force is for n ≤ 4");
    let mut count = 0;
    for pick in 0u32..(1 << candidates.len()) {
        let sets: Vec<Subset> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| pick >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        if ConnectivityStructure::validate(g, &sets).is_ok() {
            count += 1;
        }
    }
    count
}

/// The 100 seeded structure pairs shared by criteria 3 and 4.
fn seeded_pairs() -> Vec<(ConnectivityStructure, ConnectivityStructure)> {
    let catalogs: Vec<StructureCatalog> = (1..=4)
        .map(|n| StructureCatalog::enumerate(ground(n)).unwrap())
        .collect();
    let mut rng = Lcg64::new(3);
    (0..100)
        .map(|_| {
            let cat = &catalogs[rng.next_below(4)];
            let k1 = cat.get(rng.next_below(cat.len())).clone();
            let k2 = cat.get(rng.next_below(cat.len())).clone();
            (k1, k2)
        })
        .collect()
}

/// The 100 seeded random families shared by criterion 5: n ≤ 4, m ≤ 6,
/// dyadic probabilities with denominator 64.
fn seeded_families() -> Vec<RandomFamily> {
    let mut rng = Lcg64::new(5);
    (0..100)
        .map(|_| {
            let n = 1 + rng.next_below(4);
            let m = 1 + rng.next_below(6);
            let mut cuts = vec![0usize, 64];
            for _ in 1..m {
                cuts.push(rng.next_below(65));
            }
            cuts.sort_unstable();
            let probs: Vec<Rational> = cuts
                .windows(2)
                .map(|w| Rational::new(((w[1] - w[0]) as u64).into(), 64u64.into()))
                .collect();
            let space = ProbabilitySpace::new(probs).unwrap();
            let alphabet = 1 + rng.next_below(3) as u64;
            let variables: Vec<RandomVariable> = (0..n)
                .map(|_| {
                    RandomVariable::from_raw(
                        (0..m).map(|_| rng.next_below(alphabet as usize) as u64).collect(),
                    )
                })
                .collect();
            RandomFamily::new(ground(n), space, variables).unwrap()
        })
        .collect()
}

fn report(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_1_brunnian_round_trip_exhaustive_to_n4() {
    let start = Instant::now();
    let expected_counts = [(1usize, 1usize), (2, 2), (3, 12), (4, 420)];
    let mut failures: Vec<String> = Vec::new();
    let mut total = 0;
    for (n, expected) in expected_counts {
        let cat = StructureCatalog::enumerate(ground(n)).unwrap();
        if cat.len() != expected {
            failures.push(format!("catalog count n={n}: {} != {expected}", cat.len()));
        }
        let brute = brute_force_structure_count(n);
        if brute != expected {
            failures.push(format!("closure-validator count n={n}: {brute} != {expected}"));
        }
        let report = verify_roundtrip(&cat);
        total += report.entries().len();
        if !report.all_pass() {
            failures.push(format!(
                "round trip n={n}: {}/{} passed",
                report.pass_count(),
                report.entries().len()
            ));
        }
    }
    let ok = failures.is_empty();
    report(
        1,
        ok,
        &format!(
            "connectivity_structure(realize(k)) = k by both κ paths on all {total} structures, \
             counts cross-checked (1, 2, 12, 420), {:.1?}",
            start.elapsed()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_2_gamma_theorems() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    for n in 1..=4 {
        let cat = StructureCatalog::enumerate(ground(n)).unwrap();
        for k in cat.structures() {
            if &ConnectivityStructure::gamma(k.ground(), k.members()).unwrap() != k {
                failures.push(format!("gamma not fixed on n={n}: {k:?}"));
            }
        }
    }
    let mut rng = Lcg64::new(2);
    for i in 0..200 {
        let n = 1 + rng.next_below(5);
        let g = ground(n);
        let count = rng.next_below(4);
        let family: Vec<Subset> = (0..count)
            .map(|_| Subset::from_bits(rng.next_below(1 << n) as u32))
            .collect();
        let via_gamma = ConnectivityStructure::gamma(g, &family).unwrap();
        let via_closure = ConnectivityStructure::generate(g, &family).unwrap();
        if via_gamma != via_closure {
            failures.push(format!("gamma != generate on seeded family #{i}: {family:?}"));
        }
    }
    let ok = failures.is_empty();
    report(
        2,
        ok,
        &format!(
            "gamma fixes all 435 catalog structures (n ≤ 4) and matches generate on \
             200 seeded generator families (n ≤ 5), {:.1?}",
            start.elapsed()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_3_tensor_theorem() {
    let start = Instant::now();
    let mut sum_failures: Vec<String> = Vec::new();
    let mut irr_failures: Vec<String> = Vec::new();
    for (i, (k1, k2)) in seeded_pairs().iter().enumerate() {
        let (phi, psi) = (realize(k1), realize(k2));
        let t = phi.tensor(&psi).unwrap();
        let ka = phi.connectivity_structure();
        let kb = psi.connectivity_structure();
        let kt = t.connectivity_structure();
        if kt != ka.sum(&kb).unwrap() {
            sum_failures.push(format!("pair #{i}: κ(φ⊗ψ) != κ(φ)⊕κ(ψ) for {k1:?}, {k2:?}"));
        }
        let mut union_irr = ka.irreducibles();
        union_irr.extend(kb.irreducibles());
        union_irr.sort();
        union_irr.dedup();
        if kt.irreducibles() != union_irr {
            irr_failures.push(format!(
                "pair #{i}: irreducibles(κ(φ⊗ψ)) = {:?} but factor union = {union_irr:?} \
                 (κ(φ) = {ka:?}, κ(ψ) = {kb:?})",
                kt.irreducibles()
            ));
        }
    }
    let ok = sum_failures.is_empty() && irr_failures.is_empty();
    report(
        3,
        ok,
        &format!(
            "κ(φ⊗ψ) = κ(φ)⊕κ(ψ) on {}/100 seeded pairs; irreducibles-union equality on \
             {}/100 pairs, {:.1?}",
            100 - sum_failures.len(),
            100 - irr_failures.len(),
            start.elapsed()
        ),
    );
    assert!(
        ok,
        "sum failures: {sum_failures:#?}\nirreducible-union failures (first 3): {:#?}",
        &irr_failures[..irr_failures.len().min(3)]
    );
}

#[test]
fn criterion_4_component_independence() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        let cat = StructureCatalog::enumerate(ground(n)).unwrap();
        for k in cat.structures() {
            if !realize(k).check_component_independence() {
                failures.push(format!("realized family of {k:?}"));
            }
            checked += 1;
        }
    }
    for (i, (k1, k2)) in seeded_pairs().iter().enumerate() {
        let t = realize(k1).tensor(&realize(k2)).unwrap();
        if !t.check_component_independence() {
            failures.push(format!("tensor pair #{i}: {k1:?} ⊗ {k2:?}"));
        }
        checked += 1;
    }
    let ok = failures.is_empty();
    report(
        4,
        ok,
        &format!(
            "component block variables mutually independent on all {checked} families \
             from criteria 1 and 3, {:.1?}",
            start.elapsed()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_5_localization_and_structure_validation() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    for (i, phi) in seeded_families().iter().enumerate() {
        let k = phi.connectivity_structure();
        for sigma in all_dissociations(phi.ground()) {
            let respected = phi.respects(&sigma);
            // φ and κ(φ) validate exactly the same dissociations.
            if respected != !family_contests(k.members().iter(), &sigma) {
                failures.push(format!("family #{i}: validation equivalence fails at {sigma}"));
            }
            // A respected dissociation is respected on every contesting trace.
            if respected {
                for a in sigma.domain().subsets() {
                    if brunnian::contests(a, &sigma)
                        && !phi.respects(&sigma.restrict_to(a).unwrap())
                    {
                        failures.push(format!(
                            "family #{i}: localization fails at {sigma} restricted to {a}"
                        ));
                    }
                }
            }
        }
    }
    let ok = failures.is_empty();
    report(
        5,
        ok,
        &format!(
            "localization implication and validation equivalence hold for all dissociations \
             of 100 seeded dyadic families (n ≤ 4, m ≤ 6), {:.1?}",
            start.elapsed()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_6_universe_sizes() {
    let start = Instant::now();
    let gross = ConnectivityStructure::gross(ground(3));
    let canonical = realize(&gross);
    let canonical_ok = canonical.universe_size() == 8; // 2^(n(n-1)/2)

    let budget = brunnian::SearchBudget::new(4, 3, 1_000_000, brunnian::ProbabilityModel::UniformAnyM)
        .unwrap();
    let minimized = brunnian::minimize_family(&gross, &budget);
    let minimized_ok =
        minimized.universe_size() == 2 && minimized.connectivity_structure() == gross;

    let ok = canonical_ok && minimized_ok;
    report(
        6,
        ok,
        &format!(
            "realize(gross, n=3) has |Ω| = {} (expected 8); minimize_family finds |Ω| = {} \
             (expected 2), {:.1?}",
            canonical.universe_size(),
            minimized.universe_size(),
            start.elapsed()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_sum_algebra_exhaustive_n3() {
    let start = Instant::now();
    let cat = StructureCatalog::enumerate(ground(3)).unwrap();
    let all = cat.structures();
    let discrete = ConnectivityStructure::discrete(ground(3));
    let gross = ConnectivityStructure::gross(ground(3));
    let mut failures: Vec<String> = Vec::new();
    for a in all {
        if &a.sum(a).unwrap() != a {
            failures.push(format!("idempotence fails for {a:?}"));
        }
        if &a.sum(&discrete).unwrap() != a {
            failures.push(format!("discrete is not neutral for {a:?}"));
        }
        if a.sum(&gross).unwrap() != gross {
            failures.push(format!("gross is not absorbing for {a:?}"));
        }
        for b in all {
            if a.sum(b).unwrap() != b.sum(a).unwrap() {
                failures.push(format!("commutativity fails for {a:?}, {b:?}"));
            }
            for c in all {
                if a.sum(b).unwrap().sum(c).unwrap() != a.sum(&b.sum(c).unwrap()).unwrap() {
                    failures.push(format!("associativity fails for {a:?}, {b:?}, {c:?}"));
                }
            }
        }
    }
    let ok = failures.is_empty();
    report(
        7,
        ok,
        &format!(
            "⊕ associative over all 1728 triples, commutative, idempotent, with discrete \
             neutral and gross absorbing on n = 3, {:.1?}",
            start.elapsed()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_8_sampled_n5_round_trip() {
    let start = Instant::now();
    let cat = StructureCatalog::enumerate(ground(5)).unwrap();
    let indices = sample_distinct(cat.len(), 50, 1);
    let rep = verify_structures(indices.iter().map(|&i| cat.get(i)));
    let max_universe = rep.entries().iter().map(|e| e.universe_size).max().unwrap();
    let ok = rep.all_pass() && rep.entries().len() == 50;
    report(
        8,
        ok,
        &format!(
            "{}/50 seed-1 sampled n=5 structures round trip by both κ paths \
             (catalog size {}, max |Ω| {}), {:.1?}",
            rep.pass_count(),
            cat.len(),
            max_universe,
            start.elapsed()
        ),
    );
    assert!(ok, "{rep}");
}
