//! Exhaustive and randomized whole-domain checks of the construction that
//! are too heavy for unit tests: homomorphism properties over all pairs, the
//! normalization identities, and coset behavior at every m up to 8 (sampled
//! above).

use cayley_core::construction::Instance;
use cayley_core::engine::SplitMix64;
use cayley_core::halg::HElement;

fn is_homomorphism_on(inst: &Instance, pairs: impl Iterator<Item = (HElement, HElement)>) -> bool {
    for (g1, g2) in pairs {
        let lhs = inst.x_img(&g1.mul(&g2).unwrap());
        let rhs = inst.x_img(&g1).mul(&inst.x_img(&g2)).unwrap();
        if lhs != rhs {
            return false;
        }
        // tau on K x K, via y's restriction.
        if g1.in_k() && g2.in_k() {
            let lhs = inst.y_img(&g1.mul(&g2).unwrap());
            let rhs = inst.y_img(&g1).mul(&inst.y_img(&g2)).unwrap();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[test]
fn x_and_tau_are_homomorphisms_exhaustively_up_to_m8() {
    for m in 4..=8 {
        let inst = Instance::new(m).unwrap();
        let params = *inst.params();
        let pairs = params
            .enumerate()
            .flat_map(move |g1| params.enumerate().map(move |g2| (g1, g2)));
        assert!(is_homomorphism_on(&inst, pairs), "failed at m={m}");
    }
}

#[test]
fn x_and_tau_are_homomorphisms_sampled_above_m8() {
    for m in [9u32, 10] {
        let inst = Instance::new(m).unwrap();
        let params = *inst.params();
        let n = params.group_order();
        let mut rng = SplitMix64::new(7 + u64::from(m));
        let pairs = (0..20_000).map(move |_| {
            (
                params.decode(rng.pick(n)).unwrap(),
                params.decode(rng.pick(n)).unwrap(),
            )
        });
        assert!(is_homomorphism_on(&inst, pairs), "failed at m={m}");
    }
}

#[test]
fn involutions_and_identity_fixing_up_to_m12() {
    for m in 4..=12 {
        let inst = Instance::new(m).unwrap();
        for (name, g) in inst.connection().gens() {
            assert!(g.compose(g).unwrap().is_identity(), "{name}^2 != 1 at m={m}");
            assert!(!g.is_identity());
            assert_eq!(g.image_of(0), 0);
        }
    }
}

#[test]
fn normalization_identities_at_m9_and_m10() {
    for m in [9u32, 10] {
        let inst = Instance::new(m).unwrap();
        let params = *inst.params();
        let mut gens = vec![params.gen_a(), params.gen_b()];
        for i in 1..=params.c_rank() {
            gens.push(params.gen_c(i).unwrap());
        }
        for g in &gens {
            let conj = inst
                .x()
                .inverse()
                .compose(&inst.r_of(g))
                .unwrap()
                .compose(inst.x())
                .unwrap();
            assert_eq!(conj, inst.r_of(&inst.x_img(g)), "x normalization at m={m}");
        }
        let a2 = params.gen_a().mul(&params.gen_a()).unwrap();
        let mut k_gens = vec![a2, params.gen_b()];
        for i in 1..=params.c_rank() {
            k_gens.push(params.gen_c(i).unwrap());
        }
        for k in &k_gens {
            let conj = inst
                .y()
                .inverse()
                .compose(&inst.r_of(k))
                .unwrap()
                .compose(inst.y())
                .unwrap();
            assert_eq!(
                conj,
                inst.r_of(&inst.tau().apply(k).unwrap()),
                "y conjugation at m={m}"
            );
        }
    }
}

#[test]
fn y_preserves_the_k_coset_split_up_to_m10() {
    for m in 4..=10 {
        let inst = Instance::new(m).unwrap();
        for g in inst.params().enumerate() {
            let image = inst.y_img(&g);
            assert_eq!(g.in_k(), image.in_k(), "y must preserve {{K, hK}} at m={m}");
            if g.in_k() {
                assert_eq!(image, inst.tau().apply(&g).unwrap());
            }
        }
    }
}
