//! The individual verification operations.

use std::collections::{BTreeSet, HashSet};

use crate::construction::{generator_parities, Instance};
use crate::engine::{
    alternating_certificate, double_coset_closure, schreier_sims, AltStatus, GeneratedGroup,
};
use crate::explorer::{
    automorphism_action_sample, bfs_ball, coset_consistency_check, girth_report, GirthReport,
};
use crate::halg::HElement;
use crate::lemmas::{arrows, Check, CheckResult};
use crate::perm::{Parity, Permutation};
use crate::{Error, Result};

fn xyz_group(inst: &Instance) -> GeneratedGroup {
    GeneratedGroup::new(
        inst.degree(),
        inst.connection()
            .gens()
            .iter()
            .map(|(name, p)| (name.to_string(), (*p).clone()))
            .collect(),
    )
    .expect("connection set has uniform degree")
}

/// `5 * 2^(m-3)`, the predicted number of fixed points of `(xyz)^8`.
fn predicted_fixed_count(m: u32) -> usize {
    5 * (1usize << (m - 3))
}

/// Lemma 2.1: `x`, `y` and `z` are nontrivial involutions.
pub fn verify_involutions(inst: &Instance) -> CheckResult {
    let mut check = Check::new("lemma-2.1", "Lemma 2.1", inst.params().m());
    for (name, g) in inst.connection().gens() {
        check.require(&format!("{name}_nontrivial"), !g.is_identity());
        check.require(
            &format!("{name}_involution"),
            g.compose(g).map(|p| p.is_identity()).unwrap_or(false),
        );
    }
    check.finish()
}

/// Lemma 2.3: `x`, `y`, `z` and every regular generator are even, so
/// `<x, y, R(H)> <= Alt(H)`.
pub fn verify_alt_containment(inst: &Instance) -> CheckResult {
    let labeled = generator_parities(inst);
    verify_alt_containment_parities(inst.params().m(), &labeled)
}

/// Same check over an explicit generator list; used by falsification
/// controls that inject odd permutations.
pub fn verify_alt_containment_gens(m: u32, gens: &[(String, Permutation)]) -> CheckResult {
    let labeled: Vec<(String, Parity)> = gens
        .iter()
        .map(|(name, p)| (name.clone(), p.parity()))
        .collect();
    verify_alt_containment_parities(m, &labeled)
}

fn verify_alt_containment_parities(m: u32, labeled: &[(String, Parity)]) -> CheckResult {
    let mut check = Check::new("lemma-2.3", "Lemma 2.3", m);
    let mut odd = Vec::new();
    for (name, parity) in labeled {
        if *parity != Parity::Even {
            odd.push(name.clone());
        }
    }
    check.note("generators_checked", labeled.len());
    if !odd.is_empty() {
        check.note("odd_generators", &odd);
    }
    check.require("all_generators_even", odd.is_empty());
    check.finish()
}

/// Lemma 2.2 at m <= 5: brute-force enumeration of `Aut(H)` by generator
/// images; every automorphism must be an even permutation, and `x` must be
/// among them.
pub fn verify_aut_h_alternating(inst: &Instance) -> Result<CheckResult> {
    let params = *inst.params();
    let m = params.m();
    if m > 5 {
        return Err(Error::OutOfScope(
            "lemma-2.2",
            format!("brute-force Aut(H) enumeration is limited to m <= 5, got m={m}"),
        ));
    }
    let mut check = Check::new("lemma-2.2", "Lemma 2.2", m);

    let elements: Vec<HElement> = params.enumerate().collect();
    let order4: Vec<HElement> = elements.iter().copied().filter(|g| g.order() == 4).collect();
    // Automorphisms preserve order and the center, so b's image is a
    // non-central involution and each c_i's image a central one.
    let noncentral_involutions: Vec<HElement> = elements
        .iter()
        .copied()
        .filter(|g| g.order() == 2 && !g.is_central())
        .collect();
    let central_involutions: Vec<HElement> = elements
        .iter()
        .copied()
        .filter(|g| g.order() == 2 && g.is_central())
        .collect();

    let c_rank = params.c_rank() as usize;
    let mut c_choice = vec![0usize; c_rank];
    let mut automorphisms: Vec<Permutation> = Vec::new();
    for &a_img in &order4 {
        for &b_img in &noncentral_involutions {
            // Enumerate all assignments of central involutions to the c_i.
            loop {
                let c_imgs: Vec<HElement> =
                    c_choice.iter().map(|&k| central_involutions[k]).collect();
                if let Ok(table) = crate::construction::extend_automorphism(
                    &params, a_img, b_img, &c_imgs,
                ) {
                    automorphisms.push(table);
                }
                // Odometer increment over the c-choices.
                let mut pos = 0;
                loop {
                    if pos == c_rank {
                        break;
                    }
                    c_choice[pos] += 1;
                    if c_choice[pos] < central_involutions.len() {
                        break;
                    }
                    c_choice[pos] = 0;
                    pos += 1;
                }
                if pos == c_rank {
                    break;
                }
            }
        }
    }

    let odd_count = automorphisms
        .iter()
        .filter(|p| p.parity() == Parity::Odd)
        .count();
    let contains_x = automorphisms.iter().any(|p| p == inst.x());
    let contains_identity = automorphisms.iter().any(|p| p.is_identity());
    check.note("aut_group_order", automorphisms.len());
    check.note("odd_automorphisms", odd_count);
    check.require("all_automorphisms_even", odd_count == 0);
    check.require("x_is_an_automorphism", contains_x);
    check.require("identity_found", contains_identity);
    Ok(check.finish())
}

/// The arrow-chain displays: (1)-(6) for odd m over `U`, (7)-(10) for even m
/// over `U ∩ H_1`.
///
/// At m = 4 the cosets `U c_{m-4} c_{m-3}` of displays (8)-(10) collapse onto
/// the points of display (7) because `c_{m-4} = c_0 = 1`, so those displays
/// cannot be asserted there; display (7) is asserted and the computed truth
/// of (8)-(10) is recorded. A clean sweep still reports `pass`.
pub fn verify_arrow_chains(inst: &Instance) -> CheckResult {
    let params = *inst.params();
    let m = params.m();
    let anchor = if m % 2 == 1 {
        "§3.2 displays (1)-(6)"
    } else {
        "§3.3 displays (7)-(10)"
    };
    let mut check = Check::new("displays", anchor, m);

    let mut arrows_checked = 0usize;
    let mut failures: Vec<arrows::ArrowFailure> = Vec::new();
    let mut degenerate_failures: Vec<arrows::ArrowFailure> = Vec::new();

    if m % 2 == 1 {
        for u in params.enumerate().filter(HElement::in_u) {
            let chains = arrows::odd_chains(inst, &u);
            arrows_checked += chains.iter().map(|c| c.words.len()).sum::<usize>();
            failures.extend(arrows::check_chains(inst, &chains, &u));
        }
    } else {
        for u in params.enumerate().filter(|g| g.in_u() && g.in_h1()) {
            let d7 = arrows::even_chains_display7(inst, &u);
            arrows_checked += d7.iter().map(|c| c.words.len()).sum::<usize>();
            failures.extend(arrows::check_chains(inst, &d7, &u));

            let rest = arrows::even_chains_displays_8_to_10(inst, &u);
            arrows_checked += rest.iter().map(|c| c.words.len()).sum::<usize>();
            if m == 4 {
                degenerate_failures.extend(arrows::check_chains(inst, &rest, &u));
            } else {
                failures.extend(arrows::check_chains(inst, &rest, &u));
            }
        }
    }

    check.note("arrows_checked", arrows_checked);
    if !failures.is_empty() {
        let sample: Vec<String> = failures
            .iter()
            .take(5)
            .map(|f| {
                format!(
                    "display {} (u={}): step {}: {} expected {}, got {}",
                    f.display, f.u, f.step, f.from, f.expected, f.actual
                )
            })
            .collect();
        check.note("failure_count", failures.len());
        check.note("failures_sample", &sample);
    }
    check.require("asserted_arrows_hold", failures.is_empty());

    if m == 4 {
        check.note("degenerate_parameter", true);
        check.note(
            "displays_8_to_10_hold",
            degenerate_failures.is_empty(),
        );
        if !degenerate_failures.is_empty() {
            let sample: Vec<String> = degenerate_failures
                .iter()
                .take(3)
                .map(|f| {
                    format!(
                        "display {} (u={}): {} maps to {}, display predicts {}",
                        f.display, f.u, f.from, f.actual, f.expected
                    )
                })
                .collect();
            check.note("displays_8_to_10_counterexamples", &sample);
            check.mark_report();
        }
    }
    check.finish()
}

/// Cycle structure of `(xyz)^8`: the exact 3-cycle product over `U` for odd
/// m, and for even m the block decomposition on `H_1 c_{m-3}`, the
/// restriction identity on `H_1`, plus the fixed-point count `5 * 2^(m-3)`
/// in both cases. At m = 4 everything is computed and reported, not
/// asserted.
pub fn verify_xyz8_cycles(inst: &Instance) -> CheckResult {
    let params = *inst.params();
    let m = params.m();
    let degree = inst.degree();
    let anchor = if m % 2 == 1 {
        "Lemma 3.3; fixed count 5*2^(m-3)"
    } else {
        "Lemma 3.7; fixed count 5*2^(m-3)"
    };
    let mut check = Check::new("xyz8-cycles", anchor, m);

    let xyz = inst.word_permutation("xyz");
    let p8 = xyz.power(8);
    let decomposition = p8.cycle_decomposition();
    let fixed = decomposition.fixed().len();
    let three_cycles = decomposition
        .cycle_lengths()
        .iter()
        .filter(|&&l| l == 3)
        .count();
    check.note("fixed_points", fixed);
    check.note("three_cycles", three_cycles);
    check.note("predicted_fixed_points", predicted_fixed_count(m));

    let a = params.gen_a();
    let a2 = a.mul(&a).expect("same m");
    let a3 = a.inv();
    let b = params.gen_b();
    let prod = |parts: &[HElement]| params.product(parts).expect("same m");

    if m % 2 == 1 {
        // Predicted table: (a^2 u, a^{-1} u, a^2 b u)(b u, a b u, a^{-1} b u)
        // over u in U.
        let mut cycles = Vec::new();
        for u in params.enumerate().filter(HElement::in_u) {
            cycles.push(vec![
                prod(&[a2, u]).index(),
                prod(&[a3, u]).index(),
                prod(&[a2, b, u]).index(),
            ]);
            cycles.push(vec![
                prod(&[b, u]).index(),
                prod(&[a, b, u]).index(),
                prod(&[a3, b, u]).index(),
            ]);
        }
        let predicted = Permutation::from_disjoint_cycles(degree, &cycles)
            .expect("predicted cycles are disjoint");
        check.require("exact_cycle_decomposition", p8 == predicted);
        check.require("fixed_count_matches", fixed == predicted_fixed_count(m));
    } else {
        let half = degree / 2;
        let c3 = params.gen_c(params.c_rank()).expect("in range");
        let c4 = params.c_or_identity(i64::from(m) - 4).expect("in range");

        // Block decomposition on H_1 c_{m-3} (indices half..degree).
        let mut predicted_block: Vec<usize> = (0..degree).collect();
        let mut disjoint = true;
        for u in params.enumerate().filter(|g| g.in_u() && g.in_h1()) {
            for cyc in [
                [
                    prod(&[a2, u, c4, c3]),
                    prod(&[a3, u, c4, c3]),
                    prod(&[a2, b, u, c4, c3]),
                ],
                [
                    prod(&[b, u, c4, c3]),
                    prod(&[a, b, u, c4, c3]),
                    prod(&[a3, b, u, c4, c3]),
                ],
            ] {
                for k in 0..3 {
                    let from = cyc[k].index();
                    let to = cyc[(k + 1) % 3].index();
                    if predicted_block[from] != from {
                        disjoint = false;
                    }
                    predicted_block[from] = to;
                }
            }
        }
        let block_matches = disjoint
            && (half..degree).all(|p| p8.image_of(p) == predicted_block[p]);
        // Restriction identity: H_1 is invariant under xyz and
        // (xyz)^8 restricted to H_1 equals the 8th power of the restriction.
        let restriction_ok = match (xyz.restrict_prefix(half), p8.restrict_prefix(half)) {
            (Ok(xyz1), Ok(p8_h1)) => xyz1.power(8) == p8_h1,
            _ => false,
        };
        let fixed_matches = fixed == predicted_fixed_count(m);

        if m == 4 {
            // Degenerate parameter: the block bookkeeping collapses; record
            // the truth without asserting it.
            check.note("block_decomposition_holds", block_matches);
            check.note("restriction_identity_holds", restriction_ok);
            check.note("fixed_count_equals_formula", fixed_matches);
            check.mark_report();
        } else {
            check.require("block_decomposition", block_matches);
            check.require("restriction_identity", restriction_ok);
            check.require("fixed_count_matches", fixed_matches);
        }
    }
    check.finish()
}

/// Lemma 3.5 / Lemma 3.9: `<x, y, z>` is transitive on the nonidentity
/// points.
pub fn verify_transitive_hstar(inst: &Instance) -> CheckResult {
    let mut check = Check::new("transitive-hstar", "Lemma 3.5 / Lemma 3.9", inst.params().m());
    let group = xyz_group(inst);
    let degree = inst.degree();
    for (name, g) in inst.connection().gens() {
        check.require(&format!("{name}_fixes_identity_point"), g.image_of(0) == 0);
    }
    let orbit = group.orbit(1, false);
    check.note("orbit_size", orbit.len());
    check.require("orbit_is_all_nonidentity_points", orbit.len() == degree - 1);
    check.require("identity_point_not_in_orbit", !orbit.contains(0));
    check.finish()
}

/// Lemma 3.4 / Lemma 3.8: every `g ∉ U` reaches the target (`c_{m-3}` for
/// odd m, `h` for even m) under a word in `x, y, z`; words are found by BFS
/// and re-verified.
pub fn verify_word_witnesses(inst: &Instance) -> Result<CheckResult> {
    let params = *inst.params();
    let m = params.m();
    let (anchor, target) = if m % 2 == 1 {
        ("Lemma 3.4", params.gen_c(params.c_rank())?)
    } else {
        ("Lemma 3.8", params.h_element())
    };
    let mut check = Check::new("word-witnesses", anchor, m);
    check.note("target", target.to_string());

    let group = xyz_group(inst);
    let mut found = 0usize;
    let mut missing = Vec::new();
    let mut longest = 0usize;
    for g in params.enumerate().filter(|g| !g.in_u()) {
        match group.find_word(g.index(), target.index()) {
            Ok(word) => {
                // Re-verify by replaying the word on the point.
                if group.apply_word(&word, g.index()) == target.index() {
                    found += 1;
                    longest = longest.max(word.len());
                } else {
                    missing.push(g.to_string());
                }
            }
            Err(_) => missing.push(g.to_string()),
        }
    }
    let expected = params.group_order() - params.group_order() / 16;
    check.note("witnesses_found", found);
    check.note("witnesses_expected", expected);
    check.note("longest_word", longest);
    if !missing.is_empty() {
        check.note("missing", &missing[..missing.len().min(5)]);
    }
    check.require("all_witnesses_found", missing.is_empty() && found == expected);
    Ok(check.finish())
}

/// Strategy for certifying `<x, y, R(H)> = Alt(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltStrategy {
    /// Exact order via a stabilizer chain; degrees up to the cap.
    Chain,
    /// 2-transitivity, parity and a prime-cycle witness.
    Jordan,
}

/// Lemma 3.6 / Lemma 3.10: `<x, y, R(H)> = Alt(H)`, by exact order or by
/// the alternating-group certificate.
pub fn verify_full_alternating(
    inst: &Instance,
    strategy: AltStrategy,
    degree_cap: usize,
    seed: u64,
    budget: usize,
) -> Result<CheckResult> {
    let m = inst.params().m();
    let degree = inst.degree();
    let mut check = Check::new("full-alternating", "Lemma 3.6 / Lemma 3.10", m);
    match strategy {
        AltStrategy::Chain => {
            check.note("strategy", "chain");
            let group = GeneratedGroup::new(degree, inst.full_generating_set())?;
            let chain = schreier_sims(&group, degree_cap)?;
            let expected = crate::engine::factorial(degree) / 2u32;
            check.note("order", chain.order().to_string());
            check.note("expected_order", expected.to_string());
            check.note("base_length", chain.base().len());
            check.note("strong_generators", chain.strong_generators().len());
            check.require("order_equals_half_factorial", chain.order() == &expected);
        }
        AltStrategy::Jordan => {
            check.note("strategy", "jordan");
            let mut gens = vec![
                ("x".to_string(), inst.x().clone()),
                ("y".to_string(), inst.y().clone()),
                ("z".to_string(), inst.z().clone()),
            ];
            gens.extend(inst.r_gens().iter().cloned());
            // The stabilizer generators must fix point 0; under corruption
            // this can fail, which is a check failure rather than an error.
            if let Some(moved) = [inst.x(), inst.y(), inst.z()]
                .iter()
                .position(|g| g.image_of(0) != 0)
            {
                check.note("stabilizer_generator_moving_point", ["x", "y", "z"][moved]);
                check.require("stabilizer_generators_fix_point", false);
                return Ok(check.finish());
            }
            let group = GeneratedGroup::new(degree, gens)?;
            let cert = alternating_certificate(&group, &[0, 1, 2], 0, seed, budget)?;
            check.note("transitive", cert.transitive);
            check.note("stabilizer_transitive", cert.stabilizer_transitive);
            check.note("all_generators_even", cert.all_generators_even);
            check.note("seed", cert.seed);
            check.note("budget", cert.budget);
            check.note("words_tried", cert.words_tried);
            if let Some(word) = &cert.witness_word {
                check.note("witness_word", group.word_string(word));
                check.note("witness_prime", cert.witness_prime);
            }
            check.require("certificate_proven", cert.status == AltStatus::Proven);
        }
    }
    Ok(check.finish())
}

/// Lemma 4.1: the double coset `R(H){x,y}R(H)` has exactly `3 * 2^m`
/// elements, `x` normalizes `R(H)`, the `y`-conjugation intersection equals
/// `R(K)`, the two double cosets are disjoint, and the closure is exactly
/// `R(H)x ∪ R(H)y ∪ R(H)z`.
pub fn verify_cubic(inst: &Instance, closure_cap: usize) -> Result<CheckResult> {
    let params = *inst.params();
    let m = params.m();
    let degree = inst.degree();
    let mut check = Check::new("cubic-double-coset", "Lemma 4.1", m);

    let r_perms: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
    let closure = double_coset_closure(&r_perms, &[inst.x().clone(), inst.y().clone()], closure_cap)?;
    check.note("closure_size", closure.len());
    check.note("expected_size", 3 * degree);
    check.require("closure_size_is_three_cosets", closure.len() == 3 * degree);

    // x normalizes R(H): x^{-1} R(g) x = R(g^x) on the group generators.
    let mut named_gens = vec![params.gen_a(), params.gen_b()];
    for i in 1..=params.c_rank() {
        named_gens.push(params.gen_c(i)?);
    }
    let x_normalizes = named_gens.iter().all(|g| {
        let conj = inst
            .x()
            .inverse()
            .compose(&inst.r_of(g))
            .and_then(|p| p.compose(inst.x()));
        conj.map(|p| p == inst.r_of(&inst.x_img(g))).unwrap_or(false)
    });
    check.require("x_normalizes_regular_rep", x_normalizes);

    // { g : y R(g) y ∈ R(H) } must be exactly K.
    let mut conj_set = BTreeSet::new();
    let mut k_set = BTreeSet::new();
    for g in params.enumerate() {
        if g.in_k() {
            k_set.insert(g.index());
        }
        let w = inst
            .y()
            .compose(&inst.r_of(&g))?
            .compose(inst.y())?;
        if crate::explorer::is_right_translation(&w, inst).is_some() {
            conj_set.insert(g.index());
        }
    }
    check.note("y_conjugation_intersection_size", conj_set.len());
    check.require("y_conjugation_intersection_is_k", conj_set == k_set);

    // Disjointness: x is not in the closure of {y} alone.
    let y_closure = double_coset_closure(&r_perms, &[inst.y().clone()], closure_cap)?;
    let x_closure = double_coset_closure(&r_perms, &[inst.x().clone()], closure_cap)?;
    check.note("x_double_coset_size", x_closure.len());
    check.note("y_double_coset_size", y_closure.len());
    check.require("x_coset_is_single", x_closure.len() == degree);
    check.require("y_coset_is_double", y_closure.len() == 2 * degree);
    check.require("double_cosets_disjoint", !y_closure.contains(inst.x()));

    // The closure equals R(H)x ∪ R(H)y ∪ R(H)z as a set.
    let mut union: HashSet<Permutation> = HashSet::new();
    for g in params.enumerate() {
        let r = inst.r_of(&g);
        for s in [inst.x(), inst.y(), inst.z()] {
            union.insert(r.compose(s)?);
        }
    }
    let closure_set: HashSet<Permutation> = closure.iter().cloned().collect();
    check.require("closure_is_union_of_three_right_cosets", union == closure_set);

    Ok(check.finish())
}

/// Lemma 4.3 fixed-point case analysis per `m mod 4`: the closed-form fixed
/// set (where one is stated), the empty intersection, the explicit witness
/// in the nonempty intersection, the resulting cardinality mismatch, and
/// the coset fact `y R(a) z^{-1} ∈ R(H)`.
pub fn verify_fix_patterns(inst: &Instance) -> CheckResult {
    let params = *inst.params();
    let m = params.m();
    let mut check = Check::new("fix-patterns", "Lemma 4.3", m);

    // Fixed points on nonidentity points only.
    let fix = |p: &Permutation| -> BTreeSet<usize> {
        p.fixed_points().into_iter().filter(|&q| q != 0).collect()
    };
    let word = |w: &str| inst.word_permutation(w);
    let prod = |parts: &[HElement]| params.product(parts).expect("same m");
    let set_of = |elements: &[HElement]| -> BTreeSet<usize> {
        elements
            .iter()
            .filter(|e| !e.is_identity())
            .map(|e| e.index())
            .collect()
    };

    let a = params.gen_a();
    let b = params.gen_b();
    let a2 = a.mul(&a).expect("same m");

    struct CaseData {
        empty_inter: BTreeSet<usize>,
        witness_inter: BTreeSet<usize>,
        witness: HElement,
        /// `(label, actual fixed set, predicted set)` where a closed form is
        /// stated for this residue class.
        closed_form: Option<(&'static str, BTreeSet<usize>, BTreeSet<usize>)>,
    }

    let case = match m % 4 {
        1 => {
            let subgroup = params.subgroup_m().expect("m = 1 mod 4");
            let h = params.h_element();
            let mut coset_union: Vec<HElement> = subgroup.clone();
            coset_union.extend(subgroup.iter().map(|e| h.mul(e).expect("same m")));
            let mut w = b;
            for i in 1..=params.c_rank() {
                w = w.mul(&params.gen_c(i).expect("in range")).expect("same m");
            }
            CaseData {
                empty_inter: fix(inst.y()).intersection(&fix(&word("xyx"))).copied().collect(),
                witness_inter: fix(inst.z()).intersection(&fix(&word("xzx"))).copied().collect(),
                witness: w,
                closed_form: Some(("fix_y_equals_hM_union", fix(inst.y()), set_of(&coset_union))),
            }
        }
        3 => {
            let subgroup = params.subgroup_m().expect("m = 3 mod 4");
            let a2h = params.a2h_element();
            let mut coset_union: Vec<HElement> = subgroup.clone();
            coset_union.extend(subgroup.iter().map(|e| a2h.mul(e).expect("same m")));
            let mut w = a2.mul(&b).expect("same m");
            for i in 1..=params.c_rank() {
                w = w.mul(&params.gen_c(i).expect("in range")).expect("same m");
            }
            CaseData {
                empty_inter: fix(inst.z()).intersection(&fix(&word("xzx"))).copied().collect(),
                witness_inter: fix(inst.y()).intersection(&fix(&word("xyx"))).copied().collect(),
                witness: w,
                closed_form: Some(("fix_z_equals_a2hM_union", fix(inst.z()), set_of(&coset_union))),
            }
        }
        2 => {
            let subgroup = params.subgroup_m().expect("m = 2 mod 4");
            let mut parts = vec![a2, b];
            for i in 1..=i64::from(m - 4) / 2 {
                parts.push(params.c_or_identity(2 * i).expect("in range"));
            }
            for i in 0..=(i64::from(m) - 6) / 4 {
                parts.push(params.c_or_identity(4 * i - 1).expect("in range"));
            }
            CaseData {
                empty_inter: fix(&word("yxy")).intersection(&fix(&word("xyxyx"))).copied().collect(),
                witness_inter: fix(&word("zxz")).intersection(&fix(&word("xzxzx"))).copied().collect(),
                witness: prod(&parts),
                closed_form: Some(("fix_x_equals_M", fix(inst.x()), set_of(&subgroup))),
            }
        }
        _ => {
            // m = 0 mod 4: no closed-form M; conjugated fixed sets only.
            // Witness: b * (prod of even c_{2i}) * (prod of c_{4i+1} up to
            // m-7). The variant with c_{4i-1} up to (m-4)/4 that the case is
            // sometimes quoted with is not fixed by yxy for m >= 8; the two
            // forms agree at m = 4, where both collapse to b.
            let mut parts = vec![b];
            for i in 0..=i64::from(m - 4) / 2 {
                parts.push(params.c_or_identity(2 * i).expect("in range"));
            }
            for i in 0..=(i64::from(m) - 8) / 4 {
                parts.push(params.c_or_identity(4 * i + 1).expect("in range"));
            }
            CaseData {
                empty_inter: fix(&word("zxz")).intersection(&fix(&word("xzxzx"))).copied().collect(),
                witness_inter: fix(&word("yxy")).intersection(&fix(&word("xyxyx"))).copied().collect(),
                witness: prod(&parts),
                closed_form: None,
            }
        }
    };

    if let Some((label, actual, expected)) = case.closed_form {
        check.note("closed_form_size", expected.len());
        check.require(label, actual == expected);
    }
    check.note("witness", case.witness.to_string());
    check.note("empty_intersection_size", case.empty_inter.len());
    check.note("witness_intersection_size", case.witness_inter.len());
    check.require("stated_intersection_empty", case.empty_inter.is_empty());
    check.require(
        "witness_in_other_intersection",
        case.witness_inter.contains(&case.witness.index()),
    );
    check.require(
        "intersection_cardinalities_differ",
        case.empty_inter.len() != case.witness_inter.len(),
    );

    // R(a) interchanges the vertices R(H)y and R(H)z: y R(a) z^{-1} ∈ R(H).
    let swap = inst
        .y()
        .compose(&inst.r_of(&a))
        .and_then(|p| p.compose(&inst.z().inverse()));
    let swap_ok = swap
        .map(|p| crate::explorer::is_right_translation(&p, inst).is_some())
        .unwrap_or(false);
    check.require("r_a_swaps_y_and_z_cosets", swap_ok);

    check.finish()
}

/// The auxiliary transitivity statement on `V = Z2^ell`: the group generated
/// by the two automorphisms `chi`, `psi` and the translation by
/// `e_{ell-1} e_ell` is transitive.
pub fn verify_lemma_3_1(ell: u64) -> Result<CheckResult> {
    if ell < 2 || !ell.is_multiple_of(2) {
        return Err(Error::InvalidEll(ell));
    }
    if ell > 26 {
        return Err(Error::InvalidConfig(format!(
            "ell = {ell} exceeds the supported range"
        )));
    }
    let ell = ell as u32;
    let n = 1usize << ell;
    // Basis masks, with e_0 = e_{-1} = the zero vector.
    let mask = |i: i64| -> usize {
        if i >= 1 {
            1usize << (i - 1)
        } else {
            0
        }
    };
    let mut chi_mask = vec![0usize; ell as usize + 1];
    let mut psi_mask = vec![0usize; ell as usize + 1];
    for i in 0..=(i64::from(ell) - 2) / 2 {
        let odd = 2 * i + 1;
        let even = 2 * i + 2;
        chi_mask[odd as usize] = mask(odd);
        chi_mask[even as usize] = mask(odd) ^ mask(even);
        psi_mask[odd as usize] = mask(2 * i - 1) ^ mask(2 * i) ^ mask(even);
        psi_mask[even as usize] = mask(2 * i - 1) ^ mask(2 * i) ^ mask(odd);
    }
    let linear_table = |masks: &[usize]| -> Result<Permutation> {
        let mut images = Vec::with_capacity(n);
        for v in 0..n {
            let mut img = 0usize;
            for bit in 0..ell as usize {
                if v >> bit & 1 == 1 {
                    img ^= masks[bit + 1];
                }
            }
            images.push(img as u32);
        }
        Permutation::new(images)
    };
    let chi = linear_table(&chi_mask)?;
    let psi = linear_table(&psi_mask)?;
    let omega_mask = mask(i64::from(ell) - 1) | mask(i64::from(ell));
    let omega = Permutation::new((0..n).map(|v| (v ^ omega_mask) as u32).collect())?;

    let group = GeneratedGroup::new(
        n,
        vec![
            ("chi".to_string(), chi),
            ("psi".to_string(), psi),
            ("omega".to_string(), omega),
        ],
    )?;
    let orbit = group.orbit(0, false);

    let mut check = Check::new("lemma-3.1", "Lemma 3.1", ell);
    check.note("ell", ell);
    check.note("orbit_size", orbit.len());
    check.require("transitive_on_v", orbit.len() == n);
    Ok(check.finish())
}

/// Lemma 4.2 sampled on a BFS ball: structural invariants, the double-coset
/// adjacency test on every edge (and its failure on sampled non-edges), and
/// adjacency preservation under right multiplication by sampled `R(g)`.
pub fn verify_ball(
    inst: &Instance,
    radius: u32,
    max_vertices: usize,
    closure_cap: usize,
) -> Result<CheckResult> {
    let params = *inst.params();
    let m = params.m();
    let mut check = Check::new("coset-ball", "Lemma 4.2", m);

    let ball = bfs_ball(inst, radius, max_vertices)?;
    check.note("radius", radius);
    check.note("vertices", ball.vertex_count());
    check.note("edges", ball.edges.len());
    check.note("frontier_sizes", &ball.frontier_sizes);
    check.note("truncated", ball.truncated);
    if ball.truncated {
        check.mark_report();
    }

    let violations = ball.structural_violations(inst);
    if !violations.is_empty() {
        check.note("structural_violations", &violations[..violations.len().min(5)]);
    }
    check.require("ball_structure_ok", violations.is_empty());

    // Every edge difference lies in the double coset; sampled non-adjacent
    // pairs (between fully-expanded vertices) do not.
    let r_perms: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
    let dc = double_coset_closure(&r_perms, &[inst.x().clone(), inst.y().clone()], closure_cap)?;
    let consistency = coset_consistency_check(&ball, &dc, 200)?;
    check.note("edges_checked", consistency.edges_checked);
    check.note("non_edges_sampled", consistency.non_edges_checked);
    if let Some(bad) = consistency.first_bad_edge {
        check.note("first_bad_edge", format!("{bad:?}"));
    }
    check.require("edges_lie_in_double_coset", consistency.edges_ok);
    check.require("non_edges_excluded_from_double_coset", consistency.non_edges_ok);

    // Right multiplication by R(g) acts as an automorphism on the explored
    // part.
    for g in [params.gen_a(), params.h_element()] {
        let sample = automorphism_action_sample(inst, &ball, &g)?;
        let gname = g.to_string().replace(' ', "_");
        check.note(&format!("right_mult_{gname}_testable_edges"), sample.testable_edges);
        check.require(&format!("right_mult_{gname}_preserves_adjacency"), sample.preserved);
    }

    match girth_report(&ball) {
        GirthReport::CycleFound { length, walk } => {
            check.note("girth_within_ball", length);
            check.require(
                "girth_walk_revalidates",
                crate::explorer::walk_is_closed_through_root(&ball, &walk),
            );
        }
        GirthReport::TreeToRadius { lower_bound } => {
            check.note("girth_lower_bound", lower_bound);
        }
    }

    Ok(check.finish())
}
