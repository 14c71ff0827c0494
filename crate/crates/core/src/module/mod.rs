//! Finite-dimensional representations of a bound quiver and their morphisms.
//!
//! The exact structure is the one of all short exact sequences: inflations
//! are the injective morphisms, deflations the surjective ones.

mod decompose;
mod enumerate;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::ModuleError;
use crate::linalg::{Field, Matrix};
use crate::quiver::Algebra;

pub use decompose::{
    decompose, find_isomorphism, in_add, is_indecomposable, is_isomorphic, Decomposer, Decomposition, Summand,
};
pub use enumerate::enumerate_indecomposables;

/// A representation: a vector space per vertex and a matrix per arrow
/// (rows = dimension at the target, cols = dimension at the source).
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Module {}

impl Hash for Module {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dims.hash(state);
        self.maps.hash(state);
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims)?;
        let q = self.algebra.quiver();
        let mut m = f.debug_map();
        for (a, mat) in q.arrows().iter().zip(&self.maps) {
            m.entry(&a.id, &mat.to_rows());
        }
        m.finish()
    }
}

impl Module {
    /// Validates shapes and relations.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, ModuleError> {
        let m = Module { algebra, dims, maps };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let m = Module { algebra, dims, maps };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let field = algebra.field();
        let dims = vec![0; algebra.vertex_count()];
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    /// The simple module at `vertex`.
    pub fn simple(algebra: &Arc<Algebra>, vertex: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[vertex] = 1;
        let field = algebra.field();
        let maps =
            algebra.quiver().arrows().iter().map(|a| Matrix::zeros(field, dims[a.target], dims[a.source])).collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let q = self.algebra.quiver();
        if self.dims.len() != q.vertex_count() {
            return Err(ModuleError::WrongVertexCount { expected: q.vertex_count(), found: self.dims.len() });
        }
        if self.maps.len() != q.arrows().len() {
            return Err(ModuleError::WrongVertexCount { expected: q.arrows().len(), found: self.maps.len() });
        }
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            let (rows, cols) = (self.dims[a.target], self.dims[a.source]);
            if m.rows() != rows || m.cols() != cols {
                return Err(ModuleError::ArrowShape {
                    arrow: a.id.clone(),
                    rows,
                    cols,
                    found_rows: m.rows(),
                    found_cols: m.cols(),
                });
            }
        }
        for (rel, name) in self.algebra.relations().relations().iter().zip(self.algebra.relation_names()) {
            if !self.arrow_product(rel).is_zero() {
                return Err(ModuleError::RelationViolated { relation: name });
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Action of a traversal-order arrow sequence.
    pub fn arrow_product(&self, arrows: &[usize]) -> Matrix {
        let Some(&first) = arrows.first() else {
            panic!("arrow_product of empty sequence");
        };
        let mut acc = self.maps[first].clone();
        for &a in &arrows[1..] {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Action of a basis path of the algebra.
    pub fn path_action(&self, path: usize) -> Matrix {
        let p = &self.algebra.basis().paths()[path];
        if p.arrows.is_empty() {
            Matrix::identity(self.field(), self.dims[p.source])
        } else {
            self.arrow_product(&p.arrows)
        }
    }

    /// Stable 64-bit hash of the representation data.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }

    /// Isomorphism invariant: dimension vector plus the ranks of every
    /// nonzero basis path action.
    pub fn invariant_key(&self) -> Vec<usize> {
        let mut key = self.dims.clone();
        for (i, p) in self.algebra.basis().paths().iter().enumerate() {
            if !p.arrows.is_empty() {
                key.push(self.path_action(i).rank());
            }
        }
        key
    }
}

struct ArrowMaps<'a>(&'a Module);

impl Serialize for ArrowMaps<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let arrows = self.0.algebra.quiver().arrows();
        let mut map = s.serialize_map(Some(arrows.len()))?;
        for (a, m) in arrows.iter().zip(&self.0.maps) {
            map.serialize_entry(&a.id, &m.to_rows())?;
        }
        map.end()
    }
}

impl Serialize for Module {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Module", 2)?;
        st.serialize_field("dims", &self.dims)?;
        st.serialize_field("maps", &ArrowMaps(self))?;
        st.end()
    }
}

impl Serialize for ModMorphism {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Vec<u32>>> = self.maps.iter().map(Matrix::to_rows).collect();
        let mut st = s.serialize_struct("ModMorphism", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("maps", &rows)?;
        st.end()
    }
}

/// The indecomposable projective `P(vertex) = A e_vertex`, with the basis at
/// each vertex `v` given by the irreducible paths from `vertex` to `v`.
pub fn projective_module(algebra: &Arc<Algebra>, vertex: usize) -> Module {
    let basis = algebra.basis();
    let n = algebra.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| basis.between(vertex, v).len()).collect();
    let field = algebra.field();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (col, &p) in basis.between(vertex, a.source).iter().enumerate() {
                if let Some(q) = algebra.extend(p, ai) {
                    let row = basis
                        .between(vertex, a.target)
                        .iter()
                        .position(|&x| x == q)
                        .expect("extended path lies in the basis");
                    m.set(row, col, 1);
                }
            }
            m
        })
        .collect();
    Module::new_unchecked(algebra.clone(), dims, maps)
}

/// The morphism `P(vertex) -> m` sending `e_vertex` to `element` (a vector of
/// `m` at `vertex`).
pub fn projective_map(m: &Module, vertex: usize, element: &[u32]) -> ModMorphism {
    let algebra = m.algebra();
    let p = projective_module(algebra, vertex);
    let field = m.field();
    let basis = algebra.basis();
    let maps = (0..algebra.vertex_count())
        .map(|v| {
            let cols: Vec<Vec<u32>> =
                basis.between(vertex, v).iter().map(|&path| m.path_action(path).mul_vec(element)).collect();
            Matrix::from_columns(field, m.dims[v], &cols)
        })
        .collect();
    ModMorphism::new_unchecked(p, m.clone(), maps)
}

/// A morphism of representations: one matrix per vertex commuting with
/// every arrow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModMorphism {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

impl fmt::Debug for ModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModMorphism")
            .field("source", &self.source.dims)
            .field("target", &self.target.dims)
            .field("maps", &self.maps.iter().map(Matrix::to_rows).collect::<Vec<_>>())
            .finish()
    }
}

impl ModMorphism {
    pub fn new(source: Module, target: Module, maps: Vec<Matrix>) -> Result<Self, ModuleError> {
        if !Arc::ptr_eq(&source.algebra, &target.algebra) && *source.algebra != *target.algebra {
            return Err(ModuleError::AlgebraMismatch);
        }
        let f = ModMorphism { source, target, maps };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, maps: Vec<Matrix>) -> Self {
        let f = ModMorphism { source, target, maps };
        debug_assert!(f.validate().is_ok(), "{:?}", f.validate());
        f
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let n = self.source.dims.len();
        if self.maps.len() != n {
            return Err(ModuleError::MorphismShape { vertex: self.maps.len().min(n) });
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.rows() != self.target.dims[v] || m.cols() != self.source.dims[v] {
                return Err(ModuleError::MorphismShape { vertex: v });
            }
        }
        for (ai, a) in self.source.algebra.quiver().arrows().iter().enumerate() {
            let lhs = self.target.maps[ai].mul(&self.maps[a.source]);
            let rhs = self.maps[a.target].mul(&self.source.maps[ai]);
            if lhs != rhs {
                return Err(ModuleError::NotCommuting { arrow: a.id.clone() });
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> Self {
        let maps = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModMorphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let maps = source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(source.field(), t, s)).collect();
        ModMorphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModMorphism) -> ModMorphism {
        debug_assert_eq!(first.target, self.source, "composition of non-composable morphisms");
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect();
        ModMorphism { source: first.source.clone(), target: self.target.clone(), maps }
    }

    pub fn add(&self, other: &ModMorphism) -> ModMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        self.with_maps(maps)
    }

    pub fn sub(&self, other: &ModMorphism) -> ModMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect();
        self.with_maps(maps)
    }

    pub fn scale(&self, s: u32) -> ModMorphism {
        self.with_maps(self.maps.iter().map(|m| m.scale(s)).collect())
    }

    fn with_maps(&self, maps: Vec<Matrix>) -> ModMorphism {
        ModMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(Matrix::is_injective)
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(Matrix::is_surjective)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.is_injective())
    }

    pub fn is_nilpotent(&self) -> bool {
        let n = self.source.total_dim().max(1) as u32;
        self.maps.iter().all(|m| m.pow(n).is_zero())
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn inverse(&self) -> Option<ModMorphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModMorphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// Coordinates of all vertex matrices concatenated row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    pub fn flat_len(source: &Module, target: &Module) -> usize {
        source.dims.iter().zip(&target.dims).map(|(s, t)| s * t).sum()
    }

    pub fn from_flat(source: &Module, target: &Module, flat: &[u32]) -> ModMorphism {
        let field = source.field();
        let mut offset = 0;
        let maps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| {
                let m = Matrix::from_vec(field, t, s, flat[offset..offset + s * t].to_vec());
                offset += s * t;
                m
            })
            .collect();
        ModMorphism { source: source.clone(), target: target.clone(), maps }
    }

    /// `(parts[0], parts[1], ...) : ⊕ sources -> target`.
    pub fn row(target: &Module, parts: &[ModMorphism]) -> ModMorphism {
        let sum = direct_sum(target.algebra(), &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let field = target.field();
        let maps = (0..target.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::hconcat(field, target.dims[v], &blocks)
            })
            .collect();
        ModMorphism::new_unchecked(sum.module, target.clone(), maps)
    }

    /// `(parts[0]; parts[1]; ...) : source -> ⊕ targets`.
    pub fn column(source: &Module, parts: &[ModMorphism]) -> ModMorphism {
        let sum = direct_sum(source.algebra(), &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let field = source.field();
        let maps = (0..source.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::vconcat(field, source.dims[v], &blocks)
            })
            .collect();
        ModMorphism::new_unchecked(source.clone(), sum.module, maps)
    }

    /// `parts[0] ⊕ parts[1] ⊕ ...`.
    pub fn diagonal(algebra: &Arc<Algebra>, parts: &[ModMorphism]) -> ModMorphism {
        let src = direct_sum(algebra, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let tgt = direct_sum(algebra, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let field = algebra.field();
        let maps = (0..algebra.vertex_count())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::block_diag(field, &blocks)
            })
            .collect();
        ModMorphism::new_unchecked(src.module, tgt.module, maps)
    }
}

/// A biproduct with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModMorphism>,
    pub projections: Vec<ModMorphism>,
}

pub fn direct_sum(algebra: &Arc<Algebra>, ms: &[Module]) -> DirectSum {
    let field = algebra.field();
    let n = algebra.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| ms.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|a| {
            let blocks: Vec<Matrix> = ms.iter().map(|m| m.maps[a].clone()).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    let module = Module { algebra: algebra.clone(), dims, maps };
    let mut offsets = vec![0usize; n];
    let mut injections = Vec::with_capacity(ms.len());
    let mut projections = Vec::with_capacity(ms.len());
    for m in ms {
        let mut inj = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for (v, off) in offsets.iter_mut().enumerate() {
            let mut i = Matrix::zeros(field, module.dims[v], m.dims[v]);
            let mut p = Matrix::zeros(field, m.dims[v], module.dims[v]);
            for k in 0..m.dims[v] {
                i.set(*off + k, k, 1);
                p.set(k, *off + k, 1);
            }
            *off += m.dims[v];
            inj.push(i);
            proj.push(p);
        }
        injections.push(ModMorphism { source: m.clone(), target: module.clone(), maps: inj });
        projections.push(ModMorphism { source: module.clone(), target: m.clone(), maps: proj });
    }
    DirectSum { module, injections, projections }
}

/// Basis of `Hom_A(m, n)`: the null space of the commutation constraints.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<ModMorphism> {
    let field = m.field();
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv);
    let mut nvars = 0;
    for v in 0..nv {
        offsets.push(nvars);
        nvars += m.dims[v] * n.dims[v];
    }
    if nvars == 0 {
        return Vec::new();
    }
    let arrows = m.algebra.quiver().arrows();
    let neqs: usize = arrows.iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut sys = Matrix::zeros(field, neqs, nvars);
    let mut row = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let (na, ma) = (&n.maps[ai], &m.maps[ai]);
        // (N_a φ_u - φ_v M_a)[r, c] = 0
        for r in 0..n.dims[v] {
            for c in 0..m.dims[u] {
                for k in 0..n.dims[u] {
                    let coef = na.get(r, k);
                    if coef != 0 {
                        let var = offsets[u] + k * m.dims[u] + c;
                        sys.set(row, var, field.add(sys.get(row, var), coef));
                    }
                }
                for k in 0..m.dims[v] {
                    let coef = ma.get(k, c);
                    if coef != 0 {
                        let var = offsets[v] + r * m.dims[v] + k;
                        sys.set(row, var, field.sub(sys.get(row, var), coef));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = sys.kernel_basis();
    (0..kernel.cols()).map(|j| ModMorphism::from_flat(m, n, &kernel.column(j))).collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Kernel object and its inclusion into the source.
pub fn kernel(f: &ModMorphism) -> (Module, ModMorphism) {
    let m = &f.source;
    let ks: Vec<Matrix> = f.maps.iter().map(Matrix::kernel_basis).collect();
    let dims: Vec<usize> = ks.iter().map(Matrix::cols).collect();
    let maps = m
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let rhs = m.maps[ai].mul(&ks[a.source]);
            ks[a.target].solve(&rhs).expect("kernel is a submodule")
        })
        .collect();
    let k = Module::new_unchecked(m.algebra.clone(), dims, maps);
    let inc = ModMorphism::new_unchecked(k.clone(), m.clone(), ks);
    (k, inc)
}

/// Image object, its inclusion into the target and the corestriction of `f`.
pub fn image(f: &ModMorphism) -> (Module, ModMorphism, ModMorphism) {
    let n = &f.target;
    let is: Vec<Matrix> = f.maps.iter().map(Matrix::image_basis).collect();
    let dims: Vec<usize> = is.iter().map(Matrix::cols).collect();
    let maps = n
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let rhs = n.maps[ai].mul(&is[a.source]);
            is[a.target].solve(&rhs).expect("image is a submodule")
        })
        .collect();
    let im = Module::new_unchecked(n.algebra.clone(), dims, maps);
    let corestriction = f.maps.iter().zip(&is).map(|(fv, iv)| iv.solve(fv).expect("map lands in its image")).collect();
    let coreg = ModMorphism::new_unchecked(f.source.clone(), im.clone(), corestriction);
    let inc = ModMorphism::new_unchecked(im.clone(), n.clone(), is);
    (im, inc, coreg)
}

/// Cokernel object and the projection from the target.
pub fn cokernel(f: &ModMorphism) -> (Module, ModMorphism) {
    let n = &f.target;
    let qs: Vec<Matrix> = f.maps.iter().map(Matrix::cokernel_projection).collect();
    let dims: Vec<usize> = qs.iter().map(Matrix::rows).collect();
    let maps = n
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // C_a Q_u = Q_v N_a
            let rhs = qs[a.target].mul(&n.maps[ai]).transpose();
            qs[a.source].transpose().solve(&rhs).expect("cokernel map is induced").transpose()
        })
        .collect();
    let c = Module::new_unchecked(n.algebra.clone(), dims, maps);
    let proj = ModMorphism::new_unchecked(n.clone(), c.clone(), qs);
    (c, proj)
}

/// Given a surjection `epi: E -> C` and `q: E -> B` vanishing on `ker epi`,
/// the unique `p: C -> B` with `p ∘ epi = q`.
pub fn factor_through_epi(epi: &ModMorphism, q: &ModMorphism) -> Option<ModMorphism> {
    let maps = epi
        .maps
        .iter()
        .zip(&q.maps)
        .map(|(e, qv)| e.transpose().solve(&qv.transpose()).ok().map(|m| m.transpose()))
        .collect::<Option<Vec<_>>>()?;
    let p = ModMorphism { source: epi.target.clone(), target: q.target.clone(), maps };
    (p.compose(epi) == *q).then_some(p)
}

/// Given an injection `mono: S -> N` and `g: M -> N` landing in its image,
/// the unique `h: M -> S` with `mono ∘ h = g`.
pub fn factor_through_mono(mono: &ModMorphism, g: &ModMorphism) -> Option<ModMorphism> {
    let maps = mono.maps.iter().zip(&g.maps).map(|(i, gv)| i.solve(gv).ok()).collect::<Option<Vec<_>>>()?;
    Some(ModMorphism::new_unchecked(g.source.clone(), mono.source.clone(), maps))
}

/// Submodule of `m` whose basis at vertex `v` is the columns of `bases[v]`.
/// The columns must be independent and the span stable under every arrow.
pub fn submodule(m: &Module, bases: Vec<Matrix>) -> (Module, ModMorphism) {
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = m
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let rhs = m.maps[ai].mul(&bases[a.source]);
            bases[a.target].solve(&rhs).expect("span is arrow-stable")
        })
        .collect();
    let s = Module::new_unchecked(m.algebra.clone(), dims, maps);
    let inc = ModMorphism::new_unchecked(s.clone(), m.clone(), bases);
    (s, inc)
}

/// A short exact sequence `0 -> A -i-> B -d-> C -> 0`.
#[derive(Clone, Debug, Serialize)]
pub struct Conflation {
    pub inflation: ModMorphism,
    pub deflation: ModMorphism,
}

impl Conflation {
    pub fn new(inflation: ModMorphism, deflation: ModMorphism) -> Result<Self, String> {
        let c = Conflation { inflation, deflation };
        c.check()?;
        Ok(c)
    }

    pub fn check(&self) -> Result<(), String> {
        let (i, d) = (&self.inflation, &self.deflation);
        if i.target != d.source {
            return Err("inflation target differs from deflation source".into());
        }
        if !i.is_injective() {
            return Err("inflation is not injective".into());
        }
        if !d.is_surjective() {
            return Err("deflation is not surjective".into());
        }
        if !d.compose(i).is_zero() {
            return Err("composite is nonzero".into());
        }
        for v in 0..i.maps.len() {
            if i.source.dims[v] + d.target.dims[v] != i.target.dims[v] {
                return Err(format!("not exact in the middle at vertex {v}"));
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &Module {
        self.inflation.source()
    }

    pub fn middle(&self) -> &Module {
        self.inflation.target()
    }

    pub fn right(&self) -> &Module {
        self.deflation.target()
    }
}

/// A full additive subcategory given by indecomposable generators; membership
/// means every indecomposable summand is isomorphic to a generator.
#[derive(Clone, Debug)]
pub struct SubcatSpec {
    pub label: String,
    pub generators: Vec<Module>,
}

impl SubcatSpec {
    pub fn new(label: impl Into<String>, generators: Vec<Module>) -> Self {
        SubcatSpec { label: label.into(), generators }
    }
}
