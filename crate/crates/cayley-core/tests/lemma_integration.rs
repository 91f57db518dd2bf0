//! End-to-end behavior of the lemma suite and certificates: named example
//! values, per-case fixed-point data, determinism of the canonical JSON
//! form, and refusal paths.

use cayley_core::certificate::{LemmaFilter, RunConfig};
use cayley_core::construction::Instance;
use cayley_core::lemmas::{self, run_all, Status};

#[test]
fn fixed_point_data_at_m5() {
    // m = 5 is the 1 mod 4 case: |Fix(y)| = 7 on nonidentity points,
    // Fix(y) ∩ Fix(xyx) = ∅, and b c1 c2 lies in Fix(z) ∩ Fix(xzx).
    let inst = Instance::new(5).unwrap();
    let params = *inst.params();
    let nonidentity_fixed = |p: &cayley_core::perm::Permutation| {
        p.fixed_points().into_iter().filter(|&q| q != 0).count()
    };
    assert_eq!(nonidentity_fixed(inst.y()), 7);

    let result = lemmas::verify_fix_patterns(&inst);
    assert_eq!(result.status, Status::Pass);
    assert_eq!(result.details["empty_intersection_size"], serde_json::json!(0));
    let witness = params
        .product(&[
            params.gen_b(),
            params.gen_c(1).unwrap(),
            params.gen_c(2).unwrap(),
        ])
        .unwrap();
    assert_eq!(result.details["witness"], serde_json::json!(witness.to_string()));
    let zxz_fixed = inst.word_permutation("xzx");
    assert_eq!(inst.z().image_of(witness.index()), witness.index());
    assert_eq!(zxz_fixed.image_of(witness.index()), witness.index());
}

#[test]
fn fixed_point_witness_at_m7() {
    // 3 mod 4: Fix(z) ∩ Fix(xzx) = ∅ and a^2 b c1 c2 c3 c4 is fixed by both
    // y and xyx.
    let inst = Instance::new(7).unwrap();
    let params = *inst.params();
    let result = lemmas::verify_fix_patterns(&inst);
    assert_eq!(result.status, Status::Pass);
    let mut parts = vec![params.gen_a(), params.gen_a(), params.gen_b()];
    for i in 1..=4 {
        parts.push(params.gen_c(i).unwrap());
    }
    let witness = params.product(&parts).unwrap();
    assert_eq!(result.details["witness"], serde_json::json!(witness.to_string()));
    assert_eq!(inst.y().image_of(witness.index()), witness.index());
    assert_eq!(
        inst.word_permutation("xyx").image_of(witness.index()),
        witness.index()
    );
}

#[test]
fn display_one_walks_c1_to_c2_and_back_at_m5() {
    let inst = Instance::new(5).unwrap();
    let params = *inst.params();
    let c1 = params.gen_c(1).unwrap();
    let c2 = params.gen_c(2).unwrap();
    // u = c1 ∈ U: u --y--> c2 --z--> c1 is the tail of display (1).
    assert_eq!(inst.y_img(&c1), c2);
    assert_eq!(inst.z_img(&c2), c1);
    assert_eq!(lemmas::verify_arrow_chains(&inst).status, Status::Pass);
}

#[test]
fn word_witness_empty_for_the_target_itself() {
    // The target c_{m-3} lies outside U for odd m, so its own witness is the
    // empty word; the check counts it like any other.
    let inst = Instance::new(5).unwrap();
    let params = *inst.params();
    let target = params.gen_c(2).unwrap();
    assert!(!target.in_u());
    let result = lemmas::verify_word_witnesses(&inst).unwrap();
    assert_eq!(result.status, Status::Pass);
    assert_eq!(result.details["witnesses_found"], serde_json::json!(30));
}

#[test]
fn aut_h_is_refused_above_m5() {
    let inst = Instance::new(6).unwrap();
    assert!(lemmas::verify_aut_h_alternating(&inst).is_err());
}

#[test]
fn chain_strategy_is_refused_above_the_cap() {
    let inst = Instance::new(9).unwrap();
    let result =
        lemmas::verify_full_alternating(&inst, lemmas::AltStrategy::Chain, 256, 1, 10);
    assert!(result.is_err(), "degree 512 must refuse the chain strategy");
}

#[test]
fn lemma_3_1_rejects_odd_ell() {
    assert!(lemmas::verify_lemma_3_1(3).is_err());
    assert!(lemmas::verify_lemma_3_1(0).is_err());
    let r = lemmas::verify_lemma_3_1(2).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.details["orbit_size"], serde_json::json!(4));
}

#[test]
fn certificates_are_canonical_and_deterministic() {
    let config = RunConfig {
        m_values: vec![5, 4], // out of order on purpose; aggregation sorts
        lemmas: LemmaFilter::Ids(vec![
            "lemma-2.1".to_string(),
            "transitive-hstar".to_string(),
            "full-alternating".to_string(),
        ]),
        ..RunConfig::default()
    };
    let a = run_all(&config).unwrap();
    let b = run_all(&config).unwrap();
    assert!(a.passed());
    assert_eq!(a.canonical_json(), b.canonical_json());
    assert_eq!(a.results[0].m, 4);
    assert_eq!(a.results[1].m, 5);
    // The canonical form drops the nondeterministic meta block but keeps
    // config and results.
    let value: serde_json::Value = serde_json::from_str(&a.canonical_json()).unwrap();
    assert!(value.get("meta").is_none());
    assert!(value.get("config").is_some());
    // The full form carries per-check wall-clock timings.
    assert!(a.meta.timings_ms.contains_key("m4/lemma-2.1"));

    let text = a.to_text();
    assert!(text.contains("Lemma 2.1"));
    assert!(text.contains("overall: pass"));
}

#[test]
fn empty_range_gives_an_empty_passing_certificate() {
    let certificate = run_all(&RunConfig::default()).unwrap();
    assert!(certificate.passed());
    assert!(certificate.results.is_empty());
    let config = RunConfig { m_values: vec![3], ..RunConfig::default() };
    assert!(run_all(&config).is_err());
}

#[test]
fn ball_check_reports_when_truncated() {
    let inst = Instance::new(4).unwrap();
    let result = lemmas::verify_ball(&inst, 6, 10, 1 << 20).unwrap();
    assert_eq!(result.status, Status::Report);
    assert_eq!(result.details["truncated"], serde_json::json!(true));
}

#[test]
fn u_and_h1_census_feeding_the_even_displays() {
    // |U ∩ H_1| = 2^(m-5) for even m >= 6, but collapses to 1 at m = 4,
    // which is exactly why the m = 4 display bookkeeping degenerates.
    for m in [6u32, 8, 10] {
        let params = cayley_core::halg::HParams::new(m).unwrap();
        let count = params.enumerate().filter(|g| g.in_u() && g.in_h1()).count();
        assert_eq!(count, 1 << (m - 5));
    }
    let params4 = cayley_core::halg::HParams::new(4).unwrap();
    assert_eq!(params4.enumerate().filter(|g| g.in_u() && g.in_h1()).count(), 1);
}
