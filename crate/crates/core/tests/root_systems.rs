mod common;

use adjoint_orbit::root_system::{Root, RootSystem, SystemId, Weight};
use common::{adjoint_dim, model};
use proptest::prelude::*;

#[test]
fn counts_match_euclidean_models() {
    for id in SystemId::standard() {
        let rs = RootSystem::new(id).unwrap();
        assert_eq!(rs.len(), model(id).len(), "{}", id);
        assert_eq!(rs.dim(), adjoint_dim(id), "{}", id);
        assert_eq!(rs.dim(), rs.len() + rs.rank());
    }
    for l in [7, 8, 12] {
        let rs = RootSystem::new(SystemId::d(l).unwrap()).unwrap();
        assert_eq!(rs.len(), 2 * l * (l - 1));
    }
}

#[test]
fn inner_product_spectrum_matches_models() {
    // number of roots at each scalar product with a fixed root
    for id in SystemId::standard() {
        let rs = RootSystem::new(id).unwrap();
        let m = model(id);
        let mut ours = [0usize; 5];
        let top = rs.ids().last().unwrap();
        for r in rs.ids() {
            ours[(rs.inner(top, r) + 2) as usize] += 1;
        }
        let mut theirs = [0usize; 5];
        for v in &m {
            theirs[(common::dot(&m[0], v) + 2) as usize] += 1;
        }
        assert_eq!(ours, theirs, "{}", id);
    }
}

#[test]
fn positions_cover_the_module() {
    let rs = RootSystem::new(SystemId::e(7).unwrap()).unwrap();
    let weights: Vec<Weight> = rs.weights().collect();
    assert_eq!(weights.len(), 133);
    for (p, w) in weights.iter().enumerate() {
        assert_eq!(rs.position(*w), p);
        assert_eq!(rs.weight_at(p), *w);
    }
}

#[test]
fn out_of_scope_systems_are_rejected() {
    assert!(SystemId::d(4).is_err());
    assert!(SystemId::e(9).is_err());
    assert!("A5".parse::<SystemId>().is_err());
    assert_eq!("E_8".parse::<SystemId>().unwrap().to_string(), "E8");
}

proptest! {
    #[test]
    fn sums_of_roots_are_roots_iff_inner_is_minus_one(i in 0usize..240, j in 0usize..240) {
        let rs = RootSystem::new(SystemId::e(8).unwrap()).unwrap();
        let ids: Vec<_> = rs.ids().collect();
        let (a, b) = (ids[i], ids[j]);
        let sum = Root::new(rs.root(a).add(rs.root(b)));
        prop_assert_eq!(rs.sum(a, b).is_some(), rs.inner(a, b) == -1);
        prop_assert_eq!(rs.find(sum.coeffs()).is_some(), rs.inner(a, b) == -1);
        prop_assert_eq!(rs.inner(a, b), rs.inner(b, a));
        prop_assert_eq!(rs.inner(rs.neg(a), b), -rs.inner(a, b));
    }
}
