//! Closure of a seed set under left- and right-multiplication, used to
//! enumerate double cosets like `R(H){x,y}R(H)` explicitly.

use indexmap::IndexSet;

use crate::perm::Permutation;
use crate::{Error, Result};

/// Closes `seeds` under `w -> g*w` and `w -> w*g` for every `g` in `mult_gens`
/// (left-to-right products). With `mult_gens` generating a subgroup `A`, the
/// result is exactly the double coset union `A * seeds * A`, in deterministic
/// BFS order. Exceeding `cap` elements is an error.
pub fn double_coset_closure(
    mult_gens: &[Permutation],
    seeds: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let mut set: IndexSet<Permutation> = IndexSet::new();
    for s in seeds {
        if let Some(first) = set.first() {
            if first.degree() != s.degree() {
                return Err(Error::DegreeMismatch(first.degree(), s.degree()));
            }
        }
        set.insert(s.clone());
    }
    let mut head = 0;
    while head < set.len() {
        let w = set[head].clone();
        head += 1;
        for g in mult_gens {
            for product in [g.compose(&w)?, w.compose(g)?] {
                if !set.contains(&product) {
                    if set.len() >= cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    set.insert(product);
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::Instance;
    use std::collections::HashSet;

    #[test]
    fn double_coset_of_x_y_has_size_three_times_group_order() {
        let inst = Instance::new(4).unwrap();
        let r_gens: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
        let closure = double_coset_closure(
            &r_gens,
            &[inst.x().clone(), inst.y().clone()],
            1 << 20,
        )
        .unwrap();
        assert_eq!(closure.len(), 48);
        assert!(closure.contains(inst.x()));
        assert!(closure.contains(inst.y()));

        let as_set: HashSet<&Permutation> = closure.iter().collect();
        // Inverse-closed.
        for w in &closure {
            assert!(as_set.contains(&w.inverse()));
        }
        // Stable under one more round of multiplication.
        for w in &closure {
            for g in &r_gens {
                assert!(as_set.contains(&g.compose(w).unwrap()));
                assert!(as_set.contains(&w.compose(g).unwrap()));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let inst = Instance::new(4).unwrap();
        let r_gens: Vec<Permutation> = inst.r_gens().iter().map(|(_, p)| p.clone()).collect();
        let result = double_coset_closure(&r_gens, &[inst.x().clone(), inst.y().clone()], 10);
        assert!(matches!(result, Err(Error::ClosureCapExceeded(10))));
    }
}
