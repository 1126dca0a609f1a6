mod common;

use codegree_core::structure::{is_cyclic, is_quaternion8};
use codegree_core::{Group, GroupError, Permutation};
use common::*;

#[test]
fn build_errors() {
    let a = perm(3, &[&[0, 1]]);
    let b = perm(4, &[&[0, 1]]);
    assert_eq!(Group::new(vec![a, b], None).unwrap_err(), GroupError::DegreeMismatch(3, 4));
    assert_eq!(Group::new(vec![], None).unwrap_err(), GroupError::NoGenerators);
    let err = Group::with_bound(symmetric(7).generators().to_vec(), None, 1000).unwrap_err();
    assert_eq!(err, GroupError::OrderBoundExceeded(1000));
    let id = Group::new(vec![Permutation::identity(3)], None).unwrap();
    assert_eq!((id.order(), id.classes().len()), (1, 1));
}

#[test]
fn centralizers_match_brute_force() {
    for g in [symmetric(4), quaternion(3), alternating(5)] {
        for x in 0..g.order() {
            let c = g.centralizer(x).unwrap();
            let brute: Vec<usize> = (0..g.order()).filter(|&y| g.commute(x, y)).collect();
            assert_eq!(c.members(), brute.as_slice());
        }
    }
    let s4 = symmetric(4);
    let x = s4.index_of(&perm(4, &[&[0, 1], &[2, 3]])).unwrap();
    assert_eq!(s4.centralizer(x).unwrap().order(), 8);
    assert_eq!(s4.centralizer(0).unwrap().order(), 24);
    let q8 = quaternion(3);
    let x = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
    let c = q8.centralizer(x).unwrap();
    assert_eq!(c.order(), 4);
    assert!(is_cyclic(&q8, &c));
    assert!(is_quaternion8(&q8, &q8.whole()));
    assert_eq!(q8.centralizer(99), Err(GroupError::IndexOutOfRange(99)));
}

#[test]
fn derived_and_normal_subgroups() {
    let s4 = symmetric(4);
    assert_eq!(s4.derived_subgroup().order(), 12);
    let q8 = quaternion(3);
    let d = q8.derived_subgroup();
    assert_eq!(d.order(), 2);
    assert!(d.members().iter().all(|&z| (0..8).all(|y| q8.commute(z, y))));
    let orders: Vec<usize> = s4.normal_subgroups().iter().map(|n| n.order()).collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
    let minimal = s4.minimal_normal_subgroups();
    assert_eq!(minimal.len(), 1);
    assert_eq!(minimal[0].order(), 4);
    let a5 = alternating(5);
    assert_eq!(a5.normal_subgroups().len(), 2);
}

#[test]
fn quotients() {
    let s4 = symmetric(4);
    let v4 = s4.minimal_normal_subgroups().remove(0);
    let q = s4.quotient(&v4).unwrap();
    assert_eq!(q.group.order(), 6);
    assert!(!q.group.is_abelian());
    let same = s4.quotient(&s4.trivial()).unwrap();
    let sizes = |g: &Group| {
        let mut v: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
        v.sort();
        v
    };
    assert_eq!(sizes(&same.group), sizes(&s4));
    assert_eq!(s4.quotient(&s4.derived_subgroup()).unwrap().group.order(), 2);
    let not_normal = s4.generate(&[s4.index_of(&perm(4, &[&[0, 1]])).unwrap()]);
    assert_eq!(s4.quotient(&not_normal).unwrap_err(), GroupError::NotNormal);
}

#[test]
fn sylow_subgroups() {
    let s4 = symmetric(4);
    assert_eq!(s4.sylow_subgroup(2).unwrap().order(), 8);
    assert_eq!(s4.sylow_subgroup(3).unwrap().order(), 3);
    assert!(cyclic(6).sylow_subgroup(5).unwrap().is_trivial());
    assert_eq!(s4.sylow_subgroup(4), Err(GroupError::NotPrime(4)));
    assert_eq!(s4.count_sylow(3).unwrap(), 4);
    assert_eq!(s4.count_sylow(2).unwrap(), 3);
    assert_eq!(cyclic(12).count_sylow(2).unwrap(), 1);
    assert_eq!(s4.count_sylow(5).unwrap(), 1);
    assert_eq!(s4.count_sylow(6), Err(GroupError::NotPrime(6)));
}
