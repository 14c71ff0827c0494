//! The three bound quiver algebras used throughout the examples and tests.

use std::sync::Arc;

use crate::linalg::Field;
use crate::quiver::{build_algebra, Algebra, MonomialRelationSet, Quiver};

/// `3 -beta-> 2 -alpha-> 1` with `alpha*beta = 0`, vertices renumbered 0, 1, 2.
pub fn ex310_algebra() -> Arc<Algebra> {
    let q = Quiver::from_triples(3, &[("alpha", 1, 0), ("beta", 2, 1)]).expect("valid quiver");
    let rels = MonomialRelationSet::parse(&q, &[vec!["alpha".into(), "beta".into()]]).expect("valid relation");
    build_algebra(q, rels, Field::default(), 16).expect("admissible")
}

/// `k[x]/(x^2)`: one vertex, one loop, `x*x = 0`.
pub fn dual_numbers_algebra() -> Arc<Algebra> {
    let q = Quiver::from_triples(1, &[("x", 0, 0)]).expect("valid quiver");
    let rels = MonomialRelationSet::parse(&q, &[vec!["x".into(), "x".into()]]).expect("valid relation");
    build_algebra(q, rels, Field::default(), 16).expect("admissible")
}

/// Path algebra of `2 -alpha-> 1`, vertices renumbered 0, 1.
pub fn a2_algebra() -> Arc<Algebra> {
    let q = Quiver::from_triples(2, &[("alpha", 1, 0)]).expect("valid quiver");
    build_algebra(q, MonomialRelationSet::empty(), Field::default(), 16).expect("admissible")
}
