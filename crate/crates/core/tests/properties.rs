use std::sync::Arc;

use leibniz_core::cohomology::{decode, encode, hl_table, verify_square_zero};
use leibniz_core::theorems::{random_algebra, random_bimodule, AlgebraClass, RandomAlgebraSpec};
use leibniz_core::{Bimodule, Gf3, LeibnizAlgebra, Scalar, Subspace};
use proptest::prelude::*;

fn algebra(dim: usize, seed: u64) -> Option<Arc<LeibnizAlgebra<Gf3>>> {
    random_algebra::<Gf3>(RandomAlgebraSpec { dim, class: AlgebraClass::Any, seed }).ok().map(Arc::new)
}

fn pair(dim: usize, dm: usize, seed: u64) -> Option<Bimodule<Gf3>> {
    random_bimodule(algebra(dim, seed)?, dm, seed).ok()
}

fn products_vanish(a: &LeibnizAlgebra<Gf3>, u: &Subspace<Gf3>, v: &Subspace<Gf3>) -> bool {
    u.basis().iter().all(|x| v.basis().iter().all(|y| a.mul(x, y).iter().all(|c| *c == Gf3::from_i64(0))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn encode_inverts_decode(d in 1usize..5, n in 0usize..5, raw in any::<usize>()) {
        let idx = raw % d.pow(n as u32);
        let t = decode(idx, d, n);
        prop_assert_eq!(t.len(), n);
        prop_assert_eq!(encode(&t, d), idx);
    }

    #[test]
    fn leibniz_kernel_is_an_abelian_ideal_in_the_left_center(dim in 1usize..5, seed in any::<u64>()) {
        let Some(a) = algebra(dim, seed) else { return Ok(()) };
        let leib = a.leibniz_kernel();
        prop_assert!(a.is_ideal(&leib));
        prop_assert!(leib.is_subspace_of(&a.left_center()));
        prop_assert!(products_vanish(&a, &leib, &leib));
    }

    #[test]
    fn quotient_by_the_leibniz_kernel_is_lie(dim in 1usize..5, seed in any::<u64>()) {
        let Some(a) = algebra(dim, seed) else { return Ok(()) };
        let q = a.quotient(&a.leibniz_kernel()).unwrap();
        prop_assert!(q.algebra.leibniz_kernel().is_zero());
    }

    #[test]
    fn generated_pairs_satisfy_the_identities(dim in 1usize..4, dm in 1usize..4, seed in any::<u64>()) {
        let Some(m) = pair(dim, dm, seed) else { return Ok(()) };
        prop_assert!(m.algebra().violations().is_empty());
        prop_assert!(m.violations().is_empty());
    }

    #[test]
    fn generators_are_deterministic(dim in 1usize..4, dm in 1usize..4, seed in any::<u64>()) {
        let a = pair(dim, dm, seed);
        let b = pair(dim, dm, seed);
        prop_assert_eq!(a.is_some(), b.is_some());
        if let (Some(a), Some(b)) = (a, b) {
            prop_assert_eq!(a.lambda(), b.lambda());
            prop_assert_eq!(a.rho(), b.rho());
            prop_assert_eq!(a.algebra(), b.algebra());
        }
    }

    #[test]
    fn differential_squares_to_zero(dim in 1usize..4, dm in 1usize..3, seed in any::<u64>()) {
        let Some(m) = pair(dim, dm, seed) else { return Ok(()) };
        prop_assert!(verify_square_zero(&m, 3).is_ok());
    }

    #[test]
    fn cohomology_dims_balance(dim in 1usize..4, dm in 1usize..3, seed in any::<u64>()) {
        let Some(m) = pair(dim, dm, seed) else { return Ok(()) };
        let table = hl_table(&m, 3).unwrap();
        for (n, row) in table.iter().enumerate() {
            prop_assert_eq!(row.dim_h + row.dim_b, row.dim_z);
            prop_assert!(row.dim_z <= dm * dim.pow(n as u32));
        }
        prop_assert_eq!(table[0].dim_h, m.invariants().dim());
    }

    #[test]
    fn invariant_and_image_subspaces_are_sub_bimodules(dim in 1usize..4, dm in 1usize..4, seed in any::<u64>()) {
        let Some(m) = pair(dim, dm, seed) else { return Ok(()) };
        let a = m.algebra();
        for ideal in [a.leibniz_kernel(), a.derived_subalgebra(), a.whole()] {
            prop_assert!(m.is_sub_bimodule(&m.right_invariants(&ideal)));
        }
        prop_assert!(m.is_sub_bimodule(&m.antisymmetric_kernel()));
        prop_assert!(m.is_sub_bimodule(&m.right_action_image()));
        prop_assert!(m.is_sub_bimodule(&m.trivial_part()));
        prop_assert!(m.antisymmetric_kernel().is_subspace_of(&m.invariants()));
    }
}
