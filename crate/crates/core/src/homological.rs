//! Projective covers, minimal projective resolutions, Ext groups and lifts
//! in commutative squares.

use crate::error::LiftError;
use crate::linalg::{Field, Matrix};
use crate::module::{hom_basis, kernel, projective_map, submodule, ModMorphism, Module};

/// The radical `rad M`, spanned at each vertex by the images of the
/// incoming arrows.
pub fn radical(m: &Module) -> (Module, ModMorphism) {
    let field = m.field();
    let arrows = m.algebra().quiver().arrows();
    let bases = (0..m.dims().len())
        .map(|v| {
            let parts: Vec<Matrix> =
                arrows.iter().enumerate().filter(|(_, a)| a.target == v).map(|(ai, _)| m.maps()[ai].clone()).collect();
            Matrix::hconcat(field, m.dims()[v], &parts).image_basis()
        })
        .collect();
    submodule(m, bases)
}

/// A projective cover `⊕ P(vertices[k]) -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub map: ModMorphism,
    pub vertices: Vec<usize>,
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let field = m.field();
    let (_, rad) = radical(m);
    let mut parts = Vec::new();
    let mut vertices = Vec::new();
    for (v, r) in rad.maps().iter().enumerate() {
        let d = m.dims()[v];
        let joined = r.hstack(&Matrix::identity(field, d));
        for c in joined.independent_columns().into_iter().filter(|&c| c >= r.cols()) {
            parts.push(projective_map(m, v, &joined.column(c)));
            vertices.push(v);
        }
    }
    let map =
        if parts.is_empty() { ModMorphism::zero(&Module::zero(m.algebra()), m) } else { ModMorphism::row(m, &parts) };
    ProjectiveCover { map, vertices }
}

/// `... -> P_2 -d_2-> P_1 -d_1-> P_0 -ε-> M -> 0`.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    pub module: Module,
    pub terms: Vec<Module>,
    pub vertices: Vec<Vec<usize>>,
    pub augmentation: ModMorphism,
    /// `differentials[k]` is `d_{k+1}: P_{k+1} -> P_k`.
    pub differentials: Vec<ModMorphism>,
    /// `syzygies[k]` is `Ω^{k+1} M = ker(P_k -> ...)`.
    pub syzygies: Vec<Module>,
    /// True when a syzygy vanished, so the resolution is finite and complete.
    pub complete: bool,
}

impl ProjResolution {
    /// Index of the last computed term.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, k: usize) -> Option<&Module> {
        self.terms.get(k)
    }

    /// `d_k: P_k -> P_{k-1}` for `k >= 1`.
    pub fn differential(&self, k: usize) -> Option<&ModMorphism> {
        self.differentials.get(k.checked_sub(1)?)
    }
}

/// Minimal projective resolution computed up to `P_length`.
pub fn resolve(m: &Module, length: usize) -> ProjResolution {
    let cover = projective_cover(m);
    let mut terms = vec![cover.map.source().clone()];
    let mut vertices = vec![cover.vertices];
    let augmentation = cover.map.clone();
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut current = cover.map;
    let mut complete = false;
    for _ in 0..=length {
        let (k, inc) = kernel(&current);
        let zero = k.is_zero();
        syzygies.push(k.clone());
        if zero {
            complete = true;
            break;
        }
        if terms.len() > length {
            break;
        }
        let c = projective_cover(&k);
        differentials.push(inc.compose(&c.map));
        terms.push(c.map.source().clone());
        vertices.push(c.vertices);
        current = c.map;
    }
    ProjResolution { module: m.clone(), terms, vertices, augmentation, differentials, syzygies, complete }
}

/// `Ext^degree(M, N)` with a basis of cocycles `P_degree -> N` representing
/// the classes.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Vec<ModMorphism>,
}

fn coordinate_matrix(field: Field, basis: &[ModMorphism], len: usize) -> Matrix {
    Matrix::from_columns(field, len, &basis.iter().map(ModMorphism::flatten).collect::<Vec<_>>())
}

/// Matrix of `φ ↦ φ ∘ d` from `Hom(P_k, N)` to `Hom(P_{k+1}, N)` in the given bases.
fn pullback_matrix(field: Field, from: &[ModMorphism], to: &[ModMorphism], d: Option<&ModMorphism>) -> Matrix {
    let (Some(d), false) = (d, to.is_empty()) else {
        return Matrix::zeros(field, to.len(), from.len());
    };
    let len = ModMorphism::flat_len(d.source(), to[0].target());
    let basis = coordinate_matrix(field, to, len);
    let images: Vec<Vec<u32>> = from.iter().map(|phi| phi.compose(d).flatten()).collect();
    let rhs = Matrix::from_columns(field, len, &images);
    basis.solve(&rhs).expect("composite lies in the Hom space")
}

pub fn ext_from_resolution(res: &ProjResolution, n: &Module, degree: usize) -> ExtGroup {
    assert!(degree >= 1, "Ext degree must be positive");
    let field = n.field();
    let hom = |k: usize| res.term(k).map(|p| hom_basis(p, n)).unwrap_or_default();
    let (h_prev, h_cur, h_next) = (hom(degree - 1), hom(degree), hom(degree + 1));
    let delta_prev = pullback_matrix(field, &h_prev, &h_cur, res.differential(degree));
    let delta_cur = pullback_matrix(field, &h_cur, &h_next, res.differential(degree + 1));
    let cocycles = delta_cur.kernel_basis();
    let boundaries = delta_prev.image_basis();
    let joined = boundaries.hstack(&cocycles);
    let reps: Vec<ModMorphism> = joined
        .independent_columns()
        .into_iter()
        .filter(|&c| c >= boundaries.cols())
        .map(|c| {
            let coeffs = joined.column(c);
            h_cur
                .iter()
                .zip(&coeffs)
                .filter(|(_, &x)| x != 0)
                .fold(ModMorphism::zero(res.term(degree).expect("nonzero Hom"), n), |acc, (b, &x)| acc.add(&b.scale(x)))
        })
        .collect();
    ExtGroup { degree, dim: reps.len(), cocycles: reps }
}

pub fn ext(m: &Module, n: &Module, degree: usize) -> ExtGroup {
    ext_from_resolution(&resolve(m, degree + 1), n, degree)
}

pub fn ext_dim(m: &Module, n: &Module, degree: usize) -> usize {
    ext(m, n, degree).dim
}

/// An affine space `particular + span(directions)` of morphisms.
#[derive(Clone, Debug)]
pub struct AffineHoms {
    pub particular: ModMorphism,
    pub directions: Vec<ModMorphism>,
}

/// Solves `constraint(λ) = rhs` for `λ ∈ Hom(source, target)` where
/// `constraint` is linear and returns flat coordinates.
pub fn solve_hom<F>(source: &Module, target: &Module, constraint: F, rhs: &[u32]) -> Option<AffineHoms>
where
    F: Fn(&ModMorphism) -> Vec<u32>,
{
    let field = source.field();
    let basis = hom_basis(source, target);
    let zero = ModMorphism::zero(source, target);
    if basis.is_empty() {
        return rhs.iter().all(|&x| x == 0).then(|| AffineHoms { particular: zero, directions: Vec::new() });
    }
    let cols: Vec<Vec<u32>> = basis.iter().map(&constraint).collect();
    let sys = Matrix::from_columns(field, rhs.len(), &cols);
    let b = Matrix::from_vec(field, rhs.len(), 1, rhs.to_vec());
    let sol = sys.solve(&b).ok()?;
    let combine = |coeffs: &[u32]| {
        basis.iter().zip(coeffs).filter(|(_, &c)| c != 0).fold(zero.clone(), |acc, (h, &c)| acc.add(&h.scale(c)))
    };
    let particular = combine(&sol.column(0));
    let directions = sys.kernel_basis().columns().iter().map(|c| combine(c)).collect();
    Some(AffineHoms { particular, directions })
}

/// A diagonal `λ: B -> C` in the square `p ∘ α = β ∘ i`, with `λ ∘ i = α`
/// and `p ∘ λ = β`, or `None` when no such morphism exists.
pub fn find_lift(
    i: &ModMorphism,
    p: &ModMorphism,
    alpha: &ModMorphism,
    beta: &ModMorphism,
) -> Result<Option<ModMorphism>, LiftError> {
    if alpha.source() != i.source()
        || alpha.target() != p.source()
        || beta.source() != i.target()
        || beta.target() != p.target()
    {
        return Err(LiftError::IncompatibleSquare("edges do not form a square".into()));
    }
    if p.compose(alpha) != beta.compose(i) {
        return Err(LiftError::IncompatibleSquare("p ∘ α ≠ β ∘ i".into()));
    }
    let rhs: Vec<u32> = alpha.flatten().into_iter().chain(beta.flatten()).collect();
    let sol = solve_hom(
        i.target(),
        p.source(),
        |l| l.compose(i).flatten().into_iter().chain(p.compose(l).flatten()).collect(),
        &rhs,
    );
    Ok(sol.map(|s| s.particular))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::module::{direct_sum, is_isomorphic, projective_module};
    use crate::Budget;

    fn ex310_modules() -> Vec<Module> {
        let a = catalog::ex310_algebra();
        vec![
            Module::simple(&a, 0),
            projective_module(&a, 1),
            Module::simple(&a, 1),
            projective_module(&a, 2),
            Module::simple(&a, 2),
        ]
    }

    #[test]
    fn radicals() {
        let a = catalog::ex310_algebra();
        let b = Budget::default();
        let (r, inc) = radical(&projective_module(&a, 1));
        assert!(is_isomorphic(&r, &Module::simple(&a, 0), &b).unwrap());
        assert!(inc.is_injective());
        assert!(radical(&Module::simple(&a, 2)).0.is_zero());
        let d = catalog::dual_numbers_algebra();
        let (r, _) = radical(&projective_module(&d, 0));
        assert_eq!(r.dims(), [1]);
    }

    #[test]
    fn covers() {
        let a = catalog::ex310_algebra();
        let b = Budget::default();
        let c = projective_cover(&Module::simple(&a, 2));
        assert_eq!(c.vertices, vec![2]);
        assert!(c.map.is_surjective());
        assert!(is_isomorphic(c.map.source(), &projective_module(&a, 2), &b).unwrap());
        let (k, _) = kernel(&c.map);
        assert!(is_isomorphic(&k, &Module::simple(&a, 1), &b).unwrap());

        let p = projective_module(&a, 1);
        let c = projective_cover(&p);
        assert!(c.map.is_isomorphism());

        let d = catalog::dual_numbers_algebra();
        let c = projective_cover(&Module::simple(&d, 0));
        assert_eq!(c.map.source().dims(), [2]);
        assert_eq!(kernel(&c.map).0.dims(), [1]);

        let z = Module::zero(&a);
        assert!(projective_cover(&z).map.source().is_zero());
    }

    #[test]
    fn resolutions() {
        let a = catalog::ex310_algebra();
        let r = resolve(&Module::simple(&a, 2), 3);
        let dims: Vec<Vec<usize>> = r.terms.iter().map(|t| t.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 0, 0]]);
        assert!(r.complete);
        assert_eq!(r.length(), 2);
        for k in 1..r.differentials.len() {
            assert!(r.differentials[k - 1].compose(&r.differentials[k]).is_zero());
        }
        assert!(r.augmentation.compose(&r.differentials[0]).is_zero());

        let p = resolve(&projective_module(&a, 2), 3);
        assert_eq!(p.length(), 0);
        assert!(p.complete);

        let d = catalog::dual_numbers_algebra();
        let k = resolve(&Module::simple(&d, 0), 3);
        assert!(!k.complete);
        assert_eq!(k.length(), 3);
        assert!(k.terms.iter().all(|t| t.dims() == [2]));
        assert!(k.syzygies.iter().all(|s| s.dims() == [1]));
    }

    #[test]
    fn ext_examples() {
        let a = catalog::ex310_algebra();
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        let s3 = Module::simple(&a, 2);
        assert_eq!(ext_dim(&s3, &s1, 2), 1);
        assert_eq!(ext_dim(&s2, &s1, 1), 1);
        assert_eq!(ext_dim(&s3, &s2, 1), 1);
        assert_eq!(ext_dim(&s3, &s1, 1), 0);
        for n in ex310_modules() {
            for v in 0..3 {
                assert_eq!(ext_dim(&projective_module(&a, v), &n, 1), 0);
            }
        }
        let d = catalog::dual_numbers_algebra();
        let k = Module::simple(&d, 0);
        for i in 1..4 {
            assert_eq!(ext_dim(&k, &k, i), 1);
        }
        let e = ext(&s2, &s1, 1);
        assert_eq!(e.cocycles.len(), 1);
        assert!(!e.cocycles[0].is_zero());
    }

    #[test]
    fn ext_is_additive() {
        let a = catalog::ex310_algebra();
        let ms = ex310_modules();
        let sum = direct_sum(&a, &[ms[2].clone(), ms[4].clone()]).module;
        for n in &ms {
            for deg in 1..3 {
                assert_eq!(ext_dim(&sum, n, deg), ext_dim(&ms[2], n, deg) + ext_dim(&ms[4], n, deg));
            }
        }
    }

    #[test]
    fn lifts() {
        let a = catalog::ex310_algebra();
        let s1 = Module::simple(&a, 0);
        let p2 = projective_module(&a, 1);
        let zero = Module::zero(&a);
        let i = kernel(&projective_cover(&Module::simple(&a, 1)).map).1;
        assert_eq!(i.source(), &s1);
        assert_eq!(i.target(), &p2);
        let p = ModMorphism::zero(&s1, &zero);
        let alpha = ModMorphism::identity(&s1);
        let beta = ModMorphism::zero(&p2, &zero);
        assert_eq!(find_lift(&i, &p, &alpha, &beta).unwrap(), None);

        // identity left edge: the top map is a lift
        let f = ModMorphism::identity(&p2);
        let g = projective_cover(&Module::simple(&a, 1)).map;
        let top = g.clone();
        let bottom = ModMorphism::identity(g.target()).compose(&g);
        let l = find_lift(&f, &ModMorphism::identity(g.target()), &top, &bottom).unwrap().unwrap();
        assert_eq!(l, top);

        let bad = find_lift(&i, &ModMorphism::identity(&s1), &alpha, &ModMorphism::zero(&p2, &s1));
        assert!(matches!(bad, Err(LiftError::IncompatibleSquare(_))));
    }

    #[test]
    fn affine_solutions() {
        let a = catalog::ex310_algebra();
        let p2 = projective_module(&a, 1);
        let sol = solve_hom(&p2, &p2, |h| h.flatten(), &ModMorphism::identity(&p2).flatten()).unwrap();
        assert_eq!(sol.particular, ModMorphism::identity(&p2));
        assert!(sol.directions.is_empty());
    }
}
