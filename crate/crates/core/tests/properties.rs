//! Property tests over randomized orders, elements and labels. Exhaustive
//! sweeps live in the unit tests and the acceptance suite; these check the
//! same invariants at arbitrary points of the parameter space.

use proptest::prelude::*;

use dihedral_kinematics::coherent::{
    coherent_state, overlap, overlap_formula, position_probability, vacuum, weyl_operator,
    WeylLabel,
};
use dihedral_kinematics::dihedral::{ConfigPoint, DihedralElement};
use dihedral_kinematics::kinematics::{
    momentum_exponential, momentum_operator, rep_closed_form, RepLabel,
};
use dihedral_kinematics::linalg::{
    adjoint, dft_eigenvector, inner, is_unitary, max_norm_diff,
};

fn element(n: usize, mirror: bool, index: usize) -> DihedralElement {
    if mirror {
        DihedralElement::mirror(n, index % n).unwrap()
    } else {
        DihedralElement::rotation(n, index % n).unwrap()
    }
}

fn rep(second: bool) -> RepLabel {
    if second {
        RepLabel::V2
    } else {
        RepLabel::V1
    }
}

proptest! {
    #[test]
    fn group_law_is_associative_with_inverses(
        n in 2usize..=16,
        kinds in any::<[bool; 3]>(),
        indices in any::<[usize; 3]>(),
    ) {
        let a = element(n, kinds[0], indices[0]);
        let b = element(n, kinds[1], indices[1]);
        let c = element(n, kinds[2], indices[2]);
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);

        let e = DihedralElement::identity(n).unwrap();
        prop_assert_eq!(a.multiply(&a.inverse()).unwrap(), e);
        prop_assert_eq!(a.inverse().multiply(&a).unwrap(), e);
    }

    #[test]
    fn action_composes(
        n in 2usize..=16,
        kinds in any::<[bool; 2]>(),
        indices in any::<[usize; 2]>(),
        site in any::<usize>(),
    ) {
        let g = element(n, kinds[0], indices[0]);
        let h = element(n, kinds[1], indices[1]);
        let p = ConfigPoint::new(n, site % n).unwrap();
        let gh = g.multiply(&h).unwrap();
        prop_assert_eq!(gh.act(p).unwrap(), g.act(h.act(p).unwrap()).unwrap());
        prop_assert_eq!(g.act(g.inverse().act(p).unwrap()).unwrap(), p);
    }

    #[test]
    fn dft_vectors_are_orthonormal(n in 2usize..=24, k in any::<usize>(), l in any::<usize>()) {
        let (k, l) = (k % n, l % n);
        let vk = dft_eigenvector(n, k).unwrap();
        let vl = dft_eigenvector(n, l).unwrap();
        let overlap = inner(&vk, &vl).unwrap();
        let expected = if k == l { 1.0 } else { 0.0 };
        prop_assert!((overlap.re - expected).abs() < 1e-12);
        prop_assert!(overlap.im.abs() < 1e-12);
    }

    #[test]
    fn representations_are_unitary_homomorphisms(
        n in 2usize..=12,
        kinds in any::<[bool; 2]>(),
        indices in any::<[usize; 2]>(),
        second in any::<bool>(),
    ) {
        let g = element(n, kinds[0], indices[0]);
        let h = element(n, kinds[1], indices[1]);
        let label = rep(second);
        let vg = rep_closed_form(label, &g);
        let vh = rep_closed_form(label, &h);
        let vgh = rep_closed_form(label, &g.multiply(&h).unwrap());
        prop_assert!(max_norm_diff(&vg.dot(&vh), &vgh) <= 1e-12);
        prop_assert!(is_unitary(&vg, 1e-12));
    }

    #[test]
    fn momentum_is_selfadjoint_and_generates_rotations(n in 2usize..=12, k in any::<usize>()) {
        let k = k % n;
        let p = momentum_operator(n).unwrap();
        prop_assert!(max_norm_diff(&p, &adjoint(&p)) <= 1e-12);
        let exp_p = momentum_exponential(n, k as i64).unwrap();
        let v = rep_closed_form(RepLabel::V1, &DihedralElement::rotation(n, k).unwrap());
        prop_assert!(max_norm_diff(&exp_p, &v) <= 1e-10);
    }

    #[test]
    fn weyl_operators_preserve_norms(
        n in 2usize..=10,
        a in any::<usize>(),
        mirror in any::<bool>(),
        index in any::<usize>(),
        k in any::<usize>(),
        second in any::<bool>(),
    ) {
        let label = WeylLabel::new(a % n, element(n, mirror, index), rep(second)).unwrap();
        let w = weyl_operator(&label).unwrap();
        prop_assert!(is_unitary(&w, 1e-12));
        let state = coherent_state(&label, k % n).unwrap();
        let norm_sqr: f64 = state.components().iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm_sqr - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn overlaps_are_hermitian_and_match_the_closed_sums(
        n in 2usize..=8,
        parts in any::<[usize; 4]>(),
        mirrors in any::<[bool; 2]>(),
        k in any::<usize>(),
        second in any::<bool>(),
    ) {
        let k = k % n;
        let l1 = WeylLabel::new(parts[0] % n, element(n, mirrors[0], parts[1]), rep(second)).unwrap();
        let l2 = WeylLabel::new(parts[2] % n, element(n, mirrors[1], parts[3]), rep(second)).unwrap();
        let s1 = coherent_state(&l1, k).unwrap();
        let s2 = coherent_state(&l2, k).unwrap();
        let forward = overlap(&s1, &s2).unwrap();
        let backward = overlap(&s2, &s1).unwrap();
        prop_assert!((forward - backward.conj()).norm() <= 1e-12);
        let closed = overlap_formula(&l1, &l2, k).unwrap();
        prop_assert!((forward - closed).norm() <= 1e-12);
    }

    #[test]
    fn probability_profile_ignores_phase_family_and_rep(
        n in 2usize..=10,
        mirror in any::<bool>(),
        index in any::<usize>(),
        phases in any::<[usize; 2]>(),
        families in any::<[usize; 2]>(),
        seconds in any::<[bool; 2]>(),
    ) {
        let g = element(n, mirror, index);
        let s1 = coherent_state(
            &WeylLabel::new(phases[0] % n, g, rep(seconds[0])).unwrap(),
            families[0] % n,
        )
        .unwrap();
        let s2 = coherent_state(
            &WeylLabel::new(phases[1] % n, g, rep(seconds[1])).unwrap(),
            families[1] % n,
        )
        .unwrap();
        for j in 0..n {
            let p1 = position_probability(j, &s1).unwrap();
            let p2 = position_probability(j, &s2).unwrap();
            prop_assert!((p1 - p2).abs() <= 1e-12);
        }
    }

    #[test]
    fn vacua_are_normalized(n in 2usize..=16, k in any::<usize>()) {
        let vac = vacuum(n, k % n).unwrap();
        let norm_sqr: f64 = vac.components().iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm_sqr - 1.0).abs() <= 1e-12);
    }
}
