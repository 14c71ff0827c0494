//! Quivers with monomial relations and the path basis of `A = kQ/I`.
//!
//! Paths are stored in traversal order: `arrows[0]` is applied first.
//! Relations are written in composition order (`["alpha", "beta"]` is
//! `alpha * beta`, i.e. first `beta`, then `alpha`) and reversed on input.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::linalg::Field;

pub const DEFAULT_PATH_LENGTH_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::EmptyQuiver);
        }
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            if !seen.insert(a.id.as_str()) {
                return Err(AlgebraError::DuplicateArrow(a.id.clone()));
            }
            for v in [a.source, a.target] {
                if v >= vertex_count {
                    return Err(AlgebraError::ArrowOutOfRange { id: a.id.clone(), vertex: v, vertex_count });
                }
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Convenience constructor from `(id, source, target)` triples.
    pub fn from_triples(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, AlgebraError> {
        Self::new(
            vertex_count,
            arrows.iter().map(|&(id, source, target)| Arrow { id: id.to_string(), source, target }).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }
}

/// A path in traversal order starting at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Human-readable name in composition order, e.g. `alpha*beta` or `e2`.
    pub fn name(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.source);
        }
        self.arrows.iter().rev().map(|&a| quiver.arrows[a].id.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// Monomial relations, each stored in traversal order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialRelationSet {
    relations: Vec<Vec<usize>>,
}

impl MonomialRelationSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses relations given as arrow ids in composition order.
    pub fn parse(quiver: &Quiver, relations: &[Vec<String>]) -> Result<Self, AlgebraError> {
        let mut out = Vec::new();
        for rel in relations {
            if rel.len() < 2 {
                return Err(AlgebraError::MalformedRelation {
                    relation: rel.clone(),
                    reason: "relations must have length at least 2".into(),
                });
            }
            let mut path = Vec::with_capacity(rel.len());
            for id in rel.iter().rev() {
                path.push(quiver.arrow_index(id).ok_or_else(|| AlgebraError::UnknownArrow(id.clone()))?);
            }
            for w in path.windows(2) {
                let (first, then) = (&quiver.arrows[w[0]], &quiver.arrows[w[1]]);
                if first.target != then.source {
                    return Err(AlgebraError::MalformedRelation {
                        relation: rel.clone(),
                        reason: format!(
                            "`{}` ends at {} but `{}` starts at {}",
                            first.id, first.target, then.id, then.source
                        ),
                    });
                }
            }
            out.push(path);
        }
        Ok(MonomialRelationSet { relations: out })
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    /// Whether the traversal-order arrow sequence contains a relation as a
    /// consecutive subpath.
    pub fn reduces(&self, arrows: &[usize]) -> bool {
        self.relations.iter().any(|r| r.len() <= arrows.len() && arrows.windows(r.len()).any(|w| w == r.as_slice()))
    }

    fn has_relation_suffix(&self, arrows: &[usize]) -> bool {
        self.relations.iter().any(|r| arrows.ends_with(r))
    }
}

/// The finite basis of irreducible paths.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `by_pair[source][target]`: basis indices of paths from `source` to `target`.
    by_pair: Vec<Vec<Vec<usize>>>,
}

impl PathBasis {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn between(&self, source: usize, target: usize) -> &[usize] {
        &self.by_pair[source][target]
    }

    pub fn starting_at(&self, source: usize) -> impl Iterator<Item = usize> + '_ {
        self.by_pair[source].iter().flatten().copied()
    }

    pub fn ending_at(&self, target: usize) -> impl Iterator<Item = usize> + '_ {
        self.by_pair.iter().flat_map(move |row| row[target].iter().copied())
    }
}

/// A finite-dimensional monomial algebra `kQ/I` with its path basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    quiver: Quiver,
    relations: MonomialRelationSet,
    basis: PathBasis,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for Algebra {}

/// Builds `kQ/I`, enumerating irreducible paths up to `path_length_bound`.
pub fn build_algebra(
    quiver: Quiver,
    relations: MonomialRelationSet,
    field: Field,
    path_length_bound: usize,
) -> Result<Arc<Algebra>, AlgebraError> {
    if path_length_bound == 0 {
        return Err(AlgebraError::ZeroBound);
    }
    let n = quiver.vertex_count();
    let mut paths: Vec<Path> = (0..n).map(Path::trivial).collect();
    let mut frontier: Vec<Path> = paths.clone();
    let mut length = 0;
    while !frontier.is_empty() {
        if length == path_length_bound {
            return Err(AlgebraError::NotAdmissible { bound: path_length_bound });
        }
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                if relations.has_relation_suffix(&arrows) {
                    continue;
                }
                next.push(Path { source: p.source, target: a.target, arrows });
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
        length += 1;
    }
    let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut by_pair = vec![vec![Vec::new(); n]; n];
    for (i, p) in paths.iter().enumerate() {
        by_pair[p.source][p.target].push(i);
    }
    Ok(Arc::new(Algebra { field, quiver, relations, basis: PathBasis { paths, index, by_pair } }))
}

impl Algebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &MonomialRelationSet {
        &self.relations
    }

    pub fn basis(&self) -> &PathBasis {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Product `q * p` of basis paths (first `p`, then `q`), or `None` when it
    /// is zero in the algebra.
    pub fn multiply(&self, q: usize, p: usize) -> Option<usize> {
        let (pq, pp) = (&self.basis.paths[q], &self.basis.paths[p]);
        if pp.target != pq.source {
            return None;
        }
        let mut arrows = pp.arrows.clone();
        arrows.extend_from_slice(&pq.arrows);
        if self.relations.reduces(&arrows) {
            return None;
        }
        let path = Path { source: pp.source, target: pq.target, arrows };
        self.basis.index_of(&path)
    }

    /// Extends a basis path by one arrow, or `None` if the result is zero.
    pub fn extend(&self, p: usize, arrow: usize) -> Option<usize> {
        let path = &self.basis.paths[p];
        let a = &self.quiver.arrows[arrow];
        if a.source != path.target {
            return None;
        }
        let mut arrows = path.arrows.clone();
        arrows.push(arrow);
        if self.relations.reduces(&arrows) {
            return None;
        }
        self.basis.index_of(&Path { source: path.source, target: a.target, arrows })
    }

    pub fn relation_names(&self) -> Vec<String> {
        self.relations
            .relations()
            .iter()
            .map(|r| r.iter().rev().map(|&a| self.quiver.arrows[a].id.as_str()).collect::<Vec<_>>().join("*"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rels(q: &Quiver, r: &[&[&str]]) -> MonomialRelationSet {
        let owned: Vec<Vec<String>> = r.iter().map(|x| x.iter().map(|s| s.to_string()).collect()).collect();
        MonomialRelationSet::parse(q, &owned).unwrap()
    }

    /// 3 -> 2 -> 1 (0-based: 2 -> 1 -> 0) with alpha*beta = 0.
    pub(crate) fn ex310() -> Arc<Algebra> {
        let q = Quiver::from_triples(3, &[("alpha", 1, 0), ("beta", 2, 1)]).unwrap();
        let r = rels(&q, &[&["alpha", "beta"]]);
        build_algebra(q, r, Field::default(), 4).unwrap()
    }

    #[test]
    fn ex310_has_dimension_five() {
        let a = ex310();
        assert_eq!(a.dimension(), 5);
        let names: Vec<String> = a.basis().paths().iter().map(|p| p.name(a.quiver())).collect();
        assert_eq!(names, ["e0", "e1", "e2", "alpha", "beta"]);
    }

    #[test]
    fn dual_numbers_have_dimension_two() {
        let q = Quiver::from_triples(1, &[("x", 0, 0)]).unwrap();
        let r = rels(&q, &[&["x", "x"]]);
        assert_eq!(build_algebra(q, r, Field::default(), 4).unwrap().dimension(), 2);
    }

    #[test]
    fn a2_has_dimension_three() {
        let q = Quiver::from_triples(2, &[("alpha", 1, 0)]).unwrap();
        let a = build_algebra(q, MonomialRelationSet::empty(), Field::default(), 4).unwrap();
        assert_eq!(a.dimension(), 3);
    }

    #[test]
    fn loop_without_relation_is_rejected() {
        let q = Quiver::from_triples(1, &[("x", 0, 0)]).unwrap();
        let err = build_algebra(q, MonomialRelationSet::empty(), Field::default(), 5).unwrap_err();
        assert_eq!(err, AlgebraError::NotAdmissible { bound: 5 });
    }

    #[test]
    fn non_composable_relation_is_rejected() {
        let q = Quiver::from_triples(3, &[("alpha", 1, 0), ("beta", 2, 1)]).unwrap();
        let bad = vec![vec!["beta".to_string(), "alpha".to_string()]];
        assert!(matches!(MonomialRelationSet::parse(&q, &bad), Err(AlgebraError::MalformedRelation { .. })));
        let short = vec![vec!["beta".to_string()]];
        assert!(MonomialRelationSet::parse(&q, &short).is_err());
        let unknown = vec![vec!["gamma".to_string(), "beta".to_string()]];
        assert_eq!(MonomialRelationSet::parse(&q, &unknown), Err(AlgebraError::UnknownArrow("gamma".into())));
    }

    #[test]
    fn quiver_validation() {
        assert_eq!(Quiver::new(0, vec![]), Err(AlgebraError::EmptyQuiver));
        assert!(matches!(Quiver::from_triples(2, &[("a", 0, 2)]), Err(AlgebraError::ArrowOutOfRange { .. })));
        assert!(matches!(Quiver::from_triples(2, &[("a", 0, 1), ("a", 1, 0)]), Err(AlgebraError::DuplicateArrow(_))));
    }

    #[test]
    fn multiplication_kills_relations() {
        let a = ex310();
        let alpha = a.basis().paths().iter().position(|p| p.name(a.quiver()) == "alpha").unwrap();
        let beta = a.basis().paths().iter().position(|p| p.name(a.quiver()) == "beta").unwrap();
        assert_eq!(a.multiply(alpha, beta), None);
        assert_eq!(a.multiply(beta, alpha), None);
        // e1 * alpha ... alpha ends at vertex 0
        assert_eq!(a.multiply(0, alpha), Some(alpha));
        assert_eq!(a.multiply(alpha, 1), Some(alpha));
    }

    #[test]
    fn multiplication_is_associative() {
        let q = Quiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2), ("c", 2, 0)]).unwrap();
        let r = rels(&q, &[&["a", "c", "b"]]);
        let alg = build_algebra(q, r, Field::default(), 16).unwrap();
        let n = alg.dimension();
        let mul = |x: Option<usize>, y: Option<usize>| match (x, y) {
            (Some(x), Some(y)) => alg.multiply(x, y),
            _ => None,
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(mul(mul(Some(x), Some(y)), Some(z)), mul(Some(x), mul(Some(y), Some(z))));
                }
            }
        }
    }
}
