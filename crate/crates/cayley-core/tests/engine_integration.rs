//! Cross-validation of the group engine on the main family: stabilizer
//! chains against the alternating-group certificate, membership sifting,
//! and double-coset structure.

use cayley_core::construction::Instance;
use cayley_core::engine::{
    alternating_certificate, double_coset_closure, factorial, schreier_sims, AltStatus,
    GeneratedGroup,
};
use cayley_core::perm::Permutation;

fn full_group_with_z(inst: &Instance) -> GeneratedGroup {
    let mut gens = vec![
        ("x".to_string(), inst.x().clone()),
        ("y".to_string(), inst.y().clone()),
        ("z".to_string(), inst.z().clone()),
    ];
    gens.extend(inst.r_gens().iter().cloned());
    GeneratedGroup::new(inst.degree(), gens).unwrap()
}

#[test]
fn chain_and_certificate_agree_at_m4_to_m6() {
    for m in 4..=6u32 {
        let inst = Instance::new(m).unwrap();
        let group = full_group_with_z(&inst);
        let chain = schreier_sims(&group, 256).unwrap();
        assert_eq!(chain.order(), &(factorial(inst.degree()) / 2u32));
        chain.validate().unwrap();

        let cert = alternating_certificate(&group, &[0, 1, 2], 0, 1, 100_000).unwrap();
        assert_eq!(cert.status, AltStatus::Proven, "certificate at m={m}");
    }
}

#[test]
fn z_is_a_member_of_the_chain_at_m4() {
    let inst = Instance::new(4).unwrap();
    // z = R(h) y R(h^{-1} c_{m-3}) lies in <y, R(H)>, so the chain of
    // <x, y, R-gens> (without z) must contain it.
    let group = GeneratedGroup::new(inst.degree(), inst.full_generating_set()).unwrap();
    let chain = schreier_sims(&group, 256).unwrap();
    assert!(chain.membership(inst.z()).unwrap());
    let transposition = Permutation::transposition(inst.degree(), 0, 1).unwrap();
    assert!(!chain.membership(&transposition).unwrap());
}

#[test]
fn certificate_is_deterministic_given_seed() {
    let inst = Instance::new(6).unwrap();
    let group = full_group_with_z(&inst);
    let a = alternating_certificate(&group, &[0, 1, 2], 0, 42, 100_000).unwrap();
    let b = alternating_certificate(&group, &[0, 1, 2], 0, 42, 100_000).unwrap();
    assert_eq!(a.witness_word, b.witness_word);
    assert_eq!(a.witness_prime, b.witness_prime);
    assert_eq!(a.words_tried, b.words_tried);
    // A different seed may find a different witness, but must still prove.
    let c = alternating_certificate(&group, &[0, 1, 2], 0, 43, 100_000).unwrap();
    assert_eq!(c.status, AltStatus::Proven);
}

#[test]
fn double_coset_closure_is_the_union_of_three_right_cosets() {
    for m in 4..=6u32 {
        let inst = Instance::new(m).unwrap();
        let r_perms: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
        let closure = double_coset_closure(
            &r_perms,
            &[inst.x().clone(), inst.y().clone()],
            1 << 20,
        )
        .unwrap();
        assert_eq!(closure.len(), 3 << m);

        let mut union = std::collections::HashSet::new();
        for g in inst.params().enumerate() {
            let r = inst.r_of(&g);
            for s in [inst.x(), inst.y(), inst.z()] {
                union.insert(r.compose(s).unwrap());
            }
        }
        assert_eq!(union.len(), 3 << m);
        assert!(closure.iter().all(|w| union.contains(w)));
    }
}

#[test]
fn closure_iteration_order_is_deterministic() {
    let inst = Instance::new(5).unwrap();
    let r_perms: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
    let seeds = [inst.x().clone(), inst.y().clone()];
    let a = double_coset_closure(&r_perms, &seeds, 1 << 20).unwrap();
    let b = double_coset_closure(&r_perms, &seeds, 1 << 20).unwrap();
    assert_eq!(a, b);
    assert_eq!(&a[0], inst.x());
    assert_eq!(&a[1], inst.y());
}

#[test]
fn orbits_partition_the_domain() {
    // Repeated orbit calls over distinct representatives partition all points.
    let r = Permutation::from_disjoint_cycles(9, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
    let group = GeneratedGroup::new(9, vec![("r".into(), r)]).unwrap();
    let mut seen = [false; 9];
    let mut total = 0;
    for p in 0..9 {
        if seen[p] {
            continue;
        }
        let orbit = group.orbit(p, false);
        for &q in orbit.points() {
            assert!(!seen[q], "orbits must be disjoint");
            seen[q] = true;
        }
        total += orbit.len();
    }
    assert_eq!(total, 9);
}
