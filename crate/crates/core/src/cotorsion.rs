//! Cotorsion pairs inside a finite universe of indecomposables:
//! orthogonality, completeness, heredity and the core `ω = X ∩ Y`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::combinations::{combine, for_each_combination, random_coefficients};
use crate::decision::Decision;
use crate::error::{ModelError, ModuleError, Undecided};
use crate::homological::{ext_from_resolution, resolve, solve_hom};
use crate::module::{
    cokernel, direct_sum, enumerate_indecomposables, find_isomorphism, hom_basis, is_indecomposable, kernel,
    projective_module, Conflation, Decomposer, ModMorphism, Module, SubcatSpec,
};
use crate::quiver::Algebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Provenance {
    /// Every indecomposable with dimension vector below `dim_cap`.
    Enumerate { dim_cap: Vec<usize> },
    /// Supplied by the user; may miss indecomposables.
    Explicit,
}

/// A summand of a decomposed module, matched against the universe.
#[derive(Clone, Debug)]
pub struct LocatedSummand {
    pub index: Option<usize>,
    pub module: Module,
    pub inclusion: ModMorphism,
    pub projection: ModMorphism,
    /// Isomorphism from the summand onto universe member `index`.
    pub to_member: Option<ModMorphism>,
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct Located {
    pub summands: Vec<LocatedSummand>,
    pub exact: bool,
}

impl Located {
    /// Universe indices of the summands, if all of them were matched.
    pub fn indices(&self) -> Option<Vec<usize>> {
        self.summands.iter().map(|s| s.index).collect()
    }
}

/// Finite list of pairwise non-isomorphic indecomposables standing in for
/// the whole module category.
pub struct Universe {
    algebra: Arc<Algebra>,
    members: Vec<Module>,
    labels: Vec<String>,
    provenance: Provenance,
    budget: Budget,
    ext1: Vec<Vec<usize>>,
    ext2: Vec<Vec<usize>>,
    cache: Mutex<HashMap<Module, Arc<Located>>>,
}

fn standard_label(m: &Module, index: usize) -> String {
    let alg = m.algebra();
    let unit = m.total_dim() == 1;
    for v in 0..alg.vertex_count() {
        if unit && m.dims()[v] == 1 {
            return format!("S{}", v + 1);
        }
    }
    for v in 0..alg.vertex_count() {
        if let Ok(Some(_)) = find_isomorphism(m, &projective_module(alg, v), &Budget::default()) {
            return format!("P{}", v + 1);
        }
    }
    format!("M{index}")
}

impl Universe {
    /// All indecomposables with dimension vector at most `dim_cap`.
    pub fn enumerate(algebra: &Arc<Algebra>, dim_cap: &[usize], budget: &Budget) -> Result<Self, ModuleError> {
        let members = enumerate_indecomposables(algebra, dim_cap, budget)?;
        let labels = members.iter().enumerate().map(|(i, m)| standard_label(m, i)).collect();
        Ok(Self::build(
            algebra.clone(),
            members,
            labels,
            Provenance::Enumerate { dim_cap: dim_cap.to_vec() },
            budget.clone(),
        ))
    }

    /// A user-supplied universe; members must be indecomposable and
    /// pairwise non-isomorphic.
    pub fn explicit(
        algebra: &Arc<Algebra>,
        members: Vec<(String, Module)>,
        budget: &Budget,
    ) -> Result<Self, ModelError> {
        if members.is_empty() {
            return Err(ModelError::InvalidUniverse("universe is empty".into()));
        }
        for (name, m) in &members {
            if !is_indecomposable(m, budget)? {
                return Err(ModelError::InvalidUniverse(format!("`{name}` is not indecomposable")));
            }
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if find_isomorphism(&members[i].1, &members[j].1, budget)?.is_some() {
                    return Err(ModelError::InvalidUniverse(format!(
                        "`{}` and `{}` are isomorphic",
                        members[i].0, members[j].0
                    )));
                }
            }
        }
        let (labels, members) = members.into_iter().unzip();
        Ok(Self::build(algebra.clone(), members, labels, Provenance::Explicit, budget.clone()))
    }

    fn build(
        algebra: Arc<Algebra>,
        members: Vec<Module>,
        labels: Vec<String>,
        provenance: Provenance,
        budget: Budget,
    ) -> Self {
        let resolutions: Vec<_> = members.iter().map(|m| resolve(m, 3)).collect();
        let table = |deg: usize| -> Vec<Vec<usize>> {
            resolutions.iter().map(|r| members.iter().map(|n| ext_from_resolution(r, n, deg).dim).collect()).collect()
        };
        let (ext1, ext2) = (table(1), table(2));
        Universe { algebra, members, labels, provenance, budget, ext1, ext2, cache: Mutex::new(HashMap::new()) }
    }

    /// A copy sharing no cached decompositions with `self`.
    pub fn fresh(&self) -> Universe {
        Universe {
            algebra: self.algebra.clone(),
            members: self.members.clone(),
            labels: self.labels.clone(),
            provenance: self.provenance.clone(),
            budget: self.budget.clone(),
            ext1: self.ext1.clone(),
            ext2: self.ext2.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// Whether the universe is known to contain every indecomposable.
    pub fn is_exhaustive(&self) -> bool {
        matches!(self.provenance, Provenance::Enumerate { .. })
    }

    pub fn ext1(&self, i: usize, j: usize) -> usize {
        self.ext1[i][j]
    }

    pub fn ext2(&self, i: usize, j: usize) -> usize {
        self.ext2[i][j]
    }

    /// Index of the member isomorphic to the indecomposable `m`, with the
    /// isomorphism.
    pub fn identify(&self, m: &Module) -> Result<Option<(usize, ModMorphism)>, Undecided> {
        let key = m.invariant_key();
        for (i, u) in self.members.iter().enumerate() {
            if u.dims() == m.dims() && u.invariant_key() == key {
                if let Some(iso) = find_isomorphism(m, u, &self.budget)? {
                    return Ok(Some((i, iso)));
                }
            }
        }
        Ok(None)
    }

    /// Decomposes `m` and matches every summand against the members.
    pub fn locate(&self, m: &Module) -> Result<Arc<Located>, Undecided> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(m) {
            return Ok(hit.clone());
        }
        let d = Decomposer::with_known(&self.budget, &self.members).split(m);
        let projections = d.projections(m);
        let mut summands = Vec::with_capacity(d.summands.len());
        for (s, proj) in d.summands.iter().zip(projections) {
            let found = self.identify(&s.module)?;
            summands.push(LocatedSummand {
                index: found.as_ref().map(|f| f.0),
                module: s.module.clone(),
                inclusion: s.inclusion.clone(),
                projection: proj,
                to_member: found.map(|f| f.1),
                certified: s.certified,
            });
        }
        let located = Arc::new(Located { summands, exact: d.exact });
        self.cache.lock().expect("cache lock").insert(m.clone(), located.clone());
        Ok(located)
    }

    /// Human-readable decomposition such as `P2⊕S1`, or `0`.
    pub fn describe(&self, m: &Module) -> String {
        if m.is_zero() {
            return "0".into();
        }
        match self.locate(m) {
            Ok(l) => l
                .summands
                .iter()
                .map(|s| match s.index {
                    Some(i) => self.labels[i].clone(),
                    None => format!("?{:?}", s.module.dims()),
                })
                .collect::<Vec<_>>()
                .join("⊕"),
            Err(_) => format!("?{:?}", m.dims()),
        }
    }

    /// Whether `m` lies in the additive closure of the members `indices`.
    pub fn in_add(&self, m: &Module, indices: &[usize]) -> Result<bool, Undecided> {
        if m.is_zero() {
            return Ok(true);
        }
        let l = self.locate(m)?;
        let mut unsure = false;
        for s in &l.summands {
            match s.index {
                Some(i) if indices.contains(&i) => {}
                Some(_) => return Ok(false),
                None if s.certified => return Ok(false),
                None => unsure = true,
            }
        }
        if unsure {
            Err(Undecided::new("summand outside the universe is not certified indecomposable"))
        } else {
            Ok(true)
        }
    }

    /// Universe indices of the indecomposables in `add(spec)`.
    pub fn resolve_subcat(&self, spec: &SubcatSpec) -> Result<Vec<usize>, ModelError> {
        let mut out = Vec::new();
        for (gi, g) in spec.generators.iter().enumerate() {
            let outside = || ModelError::GeneratorOutsideUniverse { label: spec.label.clone(), index: gi };
            if g.is_zero() {
                continue;
            }
            let l = self.locate(g)?;
            let idx = l.indices().filter(|_| l.exact).ok_or_else(outside)?;
            for i in idx {
                if !out.contains(&i) {
                    out.push(i);
                }
            }
        }
        Ok(out)
    }

    /// The subcategory generated by the members `indices`, in that order.
    pub fn subcat(&self, label: &str, indices: &[usize]) -> SubcatSpec {
        SubcatSpec::new(label, indices.iter().map(|&i| self.members[i].clone()).collect())
    }
}

/// A morphism from (or to) a sum of generator copies built from Hom bases.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModMorphism,
    /// Generator index of every summand of the source (or target).
    pub components: Vec<usize>,
}

/// `⊕_i W_i^{dim Hom(W_i, M)} -> M` whose components run over Hom bases.
/// Every morphism from a sum of generators to `m` factors through it.
pub fn right_approximation(m: &Module, generators: &[Module]) -> Approximation {
    let mut parts = Vec::new();
    let mut components = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        for h in hom_basis(g, m) {
            parts.push(h);
            components.push(gi);
        }
    }
    let map =
        if parts.is_empty() { ModMorphism::zero(&Module::zero(m.algebra()), m) } else { ModMorphism::row(m, &parts) };
    Approximation { map, components }
}

/// `M -> ⊕_i W_i^{dim Hom(M, W_i)}`, the dual construction.
pub fn left_approximation(m: &Module, generators: &[Module]) -> Approximation {
    let mut parts = Vec::new();
    let mut components = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        for h in hom_basis(m, g) {
            parts.push(h);
            components.push(gi);
        }
    }
    let map = if parts.is_empty() {
        ModMorphism::zero(m, &Module::zero(m.algebra()))
    } else {
        ModMorphism::column(m, &parts)
    };
    Approximation { map, components }
}

pub fn right_core_approximation(m: &Module, core: &SubcatSpec) -> Approximation {
    right_approximation(m, &core.generators)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityCounterexample {
    pub side: Side,
    pub module: String,
    /// Generator with nonvanishing Ext, or `None` when the module is
    /// orthogonal to every generator but missing from the subcategory.
    pub partner: Option<String>,
    pub ext_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    /// `X = ⊥Y` over the universe.
    pub left: bool,
    /// `Y = X⊥` over the universe.
    pub right: bool,
    pub counterexamples: Vec<OrthogonalityCounterexample>,
}

fn orthogonality(u: &Universe, xi: &[usize], yi: &[usize]) -> OrthogonalityReport {
    let mut counterexamples = Vec::new();
    for m in 0..u.len() {
        let bad = yi.iter().find(|&&y| u.ext1(m, y) != 0);
        let inside = xi.contains(&m);
        match (inside, bad) {
            (true, Some(&y)) => counterexamples.push(OrthogonalityCounterexample {
                side: Side::Left,
                module: u.label(m).into(),
                partner: Some(u.label(y).into()),
                ext_dim: u.ext1(m, y),
            }),
            (false, None) => counterexamples.push(OrthogonalityCounterexample {
                side: Side::Left,
                module: u.label(m).into(),
                partner: None,
                ext_dim: 0,
            }),
            _ => {}
        }
    }
    let left = counterexamples.is_empty();
    let left_count = counterexamples.len();
    for n in 0..u.len() {
        let bad = xi.iter().find(|&&x| u.ext1(x, n) != 0);
        let inside = yi.contains(&n);
        match (inside, bad) {
            (true, Some(&x)) => counterexamples.push(OrthogonalityCounterexample {
                side: Side::Right,
                module: u.label(n).into(),
                partner: Some(u.label(x).into()),
                ext_dim: u.ext1(x, n),
            }),
            (false, None) => counterexamples.push(OrthogonalityCounterexample {
                side: Side::Right,
                module: u.label(n).into(),
                partner: None,
                ext_dim: 0,
            }),
            _ => {}
        }
    }
    let right = counterexamples.len() == left_count;
    OrthogonalityReport { left, right, counterexamples }
}

pub fn check_orthogonality(x: &SubcatSpec, y: &SubcatSpec, u: &Universe) -> Result<OrthogonalityReport, ModelError> {
    let (xi, yi) = (u.resolve_subcat(x)?, u.resolve_subcat(y)?);
    Ok(orthogonality(u, &xi, &yi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// The module already lies in the relevant subcategory.
    Trivial,
    /// Canonical approximation by Hom bases.
    Approximation,
    /// Bounded search over generator multiplicities.
    Search,
}

/// An approximation sequence together with a readable summary.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub summary: String,
    pub route: Route,
    pub sequence: Conflation,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObjectWitnesses {
    pub module: String,
    /// `0 -> Y -> X -> M -> 0`.
    pub right: Option<Witness>,
    /// `0 -> M -> Y' -> X' -> 0`.
    pub left: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessReport {
    pub verdict: Decision,
    pub objects: Vec<ObjectWitnesses>,
}

fn summary(u: &Universe, c: &Conflation) -> String {
    format!("0 -> {} -> {} -> {} -> 0", u.describe(c.left()), u.describe(c.middle()), u.describe(c.right()))
}

/// Multiplicity vectors over `k` generators with entries at most `m_max`,
/// smallest total dimension first.
pub(crate) fn multiplicity_vectors(weights: &[usize], m_max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in weights {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=m_max).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&c| c > 0));
    let weight = |v: &Vec<usize>| v.iter().zip(weights).map(|(c, w)| c * w).sum::<usize>();
    out.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)));
    out
}

/// Visits elements of `Hom(source, target)`: every element when the space is
/// small enough, otherwise the basis followed by seeded random samples.
/// Returns false when the visit was cut short by the callback and true when
/// it ran to completion; `exhaustive` reports whether every element was seen.
pub(crate) fn visit_homs<F>(source: &Module, target: &Module, budget: &Budget, salt: u64, mut visit: F) -> (bool, bool)
where
    F: FnMut(ModMorphism) -> bool,
{
    let basis = hom_basis(source, target);
    let field = source.field();
    let flat: Vec<Vec<u32>> = basis.iter().map(ModMorphism::flatten).collect();
    let len = ModMorphism::flat_len(source, target);
    if budget.enumerable(field.characteristic(), basis.len()).is_some() {
        let done = for_each_combination(field, &flat, len, |_, v| visit(ModMorphism::from_flat(source, target, v)));
        return (done, true);
    }
    for b in &basis {
        if !visit(b.clone()) {
            return (false, false);
        }
    }
    let mut rng =
        ChaCha8Rng::seed_from_u64(budget.seed ^ salt ^ source.fingerprint() ^ target.fingerprint().rotate_left(7));
    for _ in 0..budget.samples {
        let c = random_coefficients(field, basis.len(), &mut rng);
        if !visit(ModMorphism::from_flat(source, target, &combine(field, &flat, &c, len))) {
            return (false, false);
        }
    }
    (true, false)
}

fn search_right(u: &Universe, m: &Module, xi: &[usize], yi: &[usize]) -> Result<Witness, String> {
    let alg = u.algebra();
    let budget = u.budget();
    let undecided = |e: Undecided| e.reason;
    if u.in_add(m, xi).map_err(undecided)? {
        let id = ModMorphism::identity(m);
        let zero = Module::zero(alg);
        let seq = Conflation::new(ModMorphism::zero(&zero, m), id).expect("trivial sequence");
        return Ok(Witness { summary: summary(u, &seq), route: Route::Trivial, sequence: seq });
    }
    let gens: Vec<Module> = xi.iter().map(|&i| u.members()[i].clone()).collect();
    let approx = right_approximation(m, &gens);
    if approx.map.is_surjective() {
        let (k, inc) = kernel(&approx.map);
        if u.in_add(&k, yi).map_err(undecided)? {
            let seq = Conflation::new(inc, approx.map).expect("kernel sequence");
            return Ok(Witness { summary: summary(u, &seq), route: Route::Approximation, sequence: seq });
        }
    }
    let weights: Vec<usize> = gens.iter().map(Module::total_dim).collect();
    let mut exhaustive = true;
    for mult in multiplicity_vectors(&weights, budget.m_max) {
        let parts: Vec<Module> = mult.iter().zip(&gens).flat_map(|(&c, g)| std::iter::repeat_n(g.clone(), c)).collect();
        let w = direct_sum(alg, &parts).module;
        let mut found = None;
        let mut failure = None;
        let (_, all) = visit_homs(&w, m, budget, 0x5eed, |t| {
            if !t.is_surjective() {
                return true;
            }
            let (k, inc) = kernel(&t);
            match u.in_add(&k, yi) {
                Ok(true) => {
                    found = Some(Conflation::new(inc, t).expect("kernel sequence"));
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(seq) = found {
            return Ok(Witness { summary: summary(u, &seq), route: Route::Search, sequence: seq });
        }
        exhaustive &= all && failure.is_none();
    }
    Err(if exhaustive {
        format!("no approximation with multiplicities up to {}", budget.m_max)
    } else {
        "approximation search exhausted its budget".into()
    })
}

fn search_left(u: &Universe, m: &Module, xi: &[usize], yi: &[usize]) -> Result<Witness, String> {
    let alg = u.algebra();
    let budget = u.budget();
    let undecided = |e: Undecided| e.reason;
    if u.in_add(m, yi).map_err(undecided)? {
        let zero = Module::zero(alg);
        let seq = Conflation::new(ModMorphism::identity(m), ModMorphism::zero(m, &zero)).expect("trivial sequence");
        return Ok(Witness { summary: summary(u, &seq), route: Route::Trivial, sequence: seq });
    }
    let gens: Vec<Module> = yi.iter().map(|&i| u.members()[i].clone()).collect();
    let approx = left_approximation(m, &gens);
    if approx.map.is_injective() {
        let (c, proj) = cokernel(&approx.map);
        if u.in_add(&c, xi).map_err(undecided)? {
            let seq = Conflation::new(approx.map, proj).expect("cokernel sequence");
            return Ok(Witness { summary: summary(u, &seq), route: Route::Approximation, sequence: seq });
        }
    }
    let weights: Vec<usize> = gens.iter().map(Module::total_dim).collect();
    let mut exhaustive = true;
    for mult in multiplicity_vectors(&weights, budget.m_max) {
        let parts: Vec<Module> = mult.iter().zip(&gens).flat_map(|(&c, g)| std::iter::repeat_n(g.clone(), c)).collect();
        let w = direct_sum(alg, &parts).module;
        let mut found = None;
        let mut failure = None;
        let (_, all) = visit_homs(m, &w, budget, 0x1eaf, |s| {
            if !s.is_injective() {
                return true;
            }
            let (c, proj) = cokernel(&s);
            match u.in_add(&c, xi) {
                Ok(true) => {
                    found = Some(Conflation::new(s, proj).expect("cokernel sequence"));
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(seq) = found {
            return Ok(Witness { summary: summary(u, &seq), route: Route::Search, sequence: seq });
        }
        exhaustive &= all && failure.is_none();
    }
    Err(if exhaustive {
        format!("no co-approximation with multiplicities up to {}", budget.m_max)
    } else {
        "co-approximation search exhausted its budget".into()
    })
}

fn completeness(u: &Universe, xi: &[usize], yi: &[usize]) -> CompletenessReport {
    let mut verdict = Decision::Yes;
    let objects = u
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let r = search_right(u, m, xi, yi);
            let l = search_left(u, m, xi, yi);
            let mut notes = Vec::new();
            if let Err(e) = &r {
                notes.push(e.clone());
            }
            if let Err(e) = &l {
                notes.push(e.clone());
            }
            if !notes.is_empty() {
                verdict = Decision::Undecided;
            }
            ObjectWitnesses {
                module: u.label(i).into(),
                right: r.ok(),
                left: l.ok(),
                note: (!notes.is_empty()).then(|| notes.join("; ")),
            }
        })
        .collect();
    CompletenessReport { verdict, objects }
}

pub fn check_completeness(x: &SubcatSpec, y: &SubcatSpec, u: &Universe) -> Result<CompletenessReport, ModelError> {
    let (xi, yi) = (u.resolve_subcat(x)?, u.resolve_subcat(y)?);
    Ok(completeness(u, &xi, &yi))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtCounterexample {
    pub x: String,
    pub y: String,
    pub degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HereditaryReport {
    pub holds: bool,
    pub counterexample: Option<ExtCounterexample>,
    /// Whether the pair was certified complete before the check ran.
    pub precondition_verified: bool,
}

fn hereditary(u: &Universe, xi: &[usize], yi: &[usize], precondition_verified: bool) -> HereditaryReport {
    let counterexample = xi.iter().find_map(|&x| {
        yi.iter().find(|&&y| u.ext2(x, y) != 0).map(|&y| ExtCounterexample {
            x: u.label(x).into(),
            y: u.label(y).into(),
            degree: 2,
            dim: u.ext2(x, y),
        })
    });
    HereditaryReport { holds: counterexample.is_none(), counterexample, precondition_verified }
}

pub fn check_hereditary(x: &SubcatSpec, y: &SubcatSpec, u: &Universe) -> Result<HereditaryReport, ModelError> {
    let (xi, yi) = (u.resolve_subcat(x)?, u.resolve_subcat(y)?);
    Ok(hereditary(u, &xi, &yi, false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureKind {
    /// A deflation between objects of `X` whose kernel leaves `X`.
    KernelLeavesX,
    /// An inflation between objects of `Y` whose cokernel leaves `Y`.
    CokernelLeavesY,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureViolation {
    pub kind: ClosureKind,
    pub summary: String,
    pub sequence: Conflation,
}

/// Corroborating closure tests over morphisms between universe members.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub x_closed_under_kernels: bool,
    pub y_closed_under_cokernels: bool,
    pub checked: usize,
    pub violations: Vec<ClosureViolation>,
}

fn closure(u: &Universe, xi: &[usize], yi: &[usize]) -> ClosureReport {
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut seen = std::collections::HashSet::new();
    for &a in xi {
        for &b in xi {
            let (m, n) = (&u.members()[a], &u.members()[b]);
            visit_homs(m, n, u.budget(), 0xc105, |f| {
                if f.is_surjective() {
                    checked += 1;
                    let (k, inc) = kernel(&f);
                    if u.in_add(&k, xi) == Ok(false) && seen.insert((ClosureKind::KernelLeavesX, u.describe(&k), a, b))
                    {
                        let seq = Conflation::new(inc, f).expect("kernel sequence");
                        violations.push(ClosureViolation {
                            kind: ClosureKind::KernelLeavesX,
                            summary: summary(u, &seq),
                            sequence: seq,
                        });
                    }
                }
                true
            });
        }
    }
    for &a in yi {
        for &b in yi {
            let (m, n) = (&u.members()[a], &u.members()[b]);
            visit_homs(m, n, u.budget(), 0xc106, |f| {
                if f.is_injective() {
                    checked += 1;
                    let (c, proj) = cokernel(&f);
                    if u.in_add(&c, yi) == Ok(false)
                        && seen.insert((ClosureKind::CokernelLeavesY, u.describe(&c), a, b))
                    {
                        let seq = Conflation::new(f, proj).expect("cokernel sequence");
                        violations.push(ClosureViolation {
                            kind: ClosureKind::CokernelLeavesY,
                            summary: summary(u, &seq),
                            sequence: seq,
                        });
                    }
                }
                true
            });
        }
    }
    ClosureReport {
        x_closed_under_kernels: !violations.iter().any(|v| v.kind == ClosureKind::KernelLeavesX),
        y_closed_under_cokernels: !violations.iter().any(|v| v.kind == ClosureKind::CokernelLeavesY),
        checked,
        violations,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FinitenessReport {
    pub holds: bool,
    /// Number of basis morphisms `W -> M` shown to factor.
    pub checked: usize,
    pub failures: Vec<String>,
}

fn contravariant_finiteness(u: &Universe, core: &SubcatSpec) -> FinitenessReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, m) in u.members().iter().enumerate() {
        let tau = right_core_approximation(m, core).map;
        for (gi, w) in core.generators.iter().enumerate() {
            for g in hom_basis(w, m) {
                checked += 1;
                let factors = solve_hom(w, tau.source(), |h| tau.compose(h).flatten(), &g.flatten()).is_some();
                if !factors {
                    failures.push(format!("morphism from core generator {gi} to {} does not factor", u.label(i)));
                }
            }
        }
    }
    FinitenessReport { holds: failures.is_empty(), checked, failures }
}

#[derive(Clone, Debug, Serialize)]
pub struct UniverseSummary {
    pub provenance: Provenance,
    pub members: Vec<String>,
    pub dims: Vec<Vec<usize>>,
    /// When false, every verdict below is conditional on the supplied list.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CotorsionReport {
    pub universe: UniverseSummary,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub orthogonality: OrthogonalityReport,
    pub completeness: CompletenessReport,
    pub hereditary: HereditaryReport,
    pub closure: ClosureReport,
    pub core: Vec<String>,
    pub core_contravariantly_finite: FinitenessReport,
    /// `Ext^1(X_g, Y_g) = 0` on all generator pairs.
    pub ext1_vanishes_on_generators: bool,
    #[serde(skip)]
    pub x_indices: Vec<usize>,
    #[serde(skip)]
    pub y_indices: Vec<usize>,
    #[serde(skip)]
    pub core_indices: Vec<usize>,
}

impl CotorsionReport {
    pub fn is_cotorsion_pair(&self) -> bool {
        self.orthogonality.left && self.orthogonality.right
    }

    pub fn is_complete(&self) -> bool {
        self.is_cotorsion_pair() && self.completeness.verdict.is_yes()
    }

    /// Hereditary, complete and with a contravariantly finite core: the
    /// hypotheses under which the model structure exists.
    pub fn certifies_model_structure(&self) -> bool {
        self.is_complete() && self.hereditary.holds && self.core_contravariantly_finite.holds
    }

    pub fn core_spec(&self, u: &Universe) -> SubcatSpec {
        u.subcat("core", &self.core_indices)
    }

    pub fn right_witness(&self, i: usize) -> Option<&Conflation> {
        self.completeness.objects[i].right.as_ref().map(|w| &w.sequence)
    }

    pub fn left_witness(&self, i: usize) -> Option<&Conflation> {
        self.completeness.objects[i].left.as_ref().map(|w| &w.sequence)
    }
}

pub fn analyze(x: &SubcatSpec, y: &SubcatSpec, u: &Universe) -> Result<CotorsionReport, ModelError> {
    let (xi, yi) = (u.resolve_subcat(x)?, u.resolve_subcat(y)?);
    let orthogonality = orthogonality(u, &xi, &yi);
    let completeness = completeness(u, &xi, &yi);
    let complete = orthogonality.left && orthogonality.right && completeness.verdict.is_yes();
    let hereditary = hereditary(u, &xi, &yi, complete);
    let closure = closure(u, &xi, &yi);
    let core_indices: Vec<usize> = (0..u.len()).filter(|i| xi.contains(i) && yi.contains(i)).collect();
    let core = u.subcat("core", &core_indices);
    let finiteness = contravariant_finiteness(u, &core);
    let ext1_vanishes = xi.iter().all(|&a| yi.iter().all(|&b| u.ext1(a, b) == 0));
    let labels = |idx: &[usize]| idx.iter().map(|&i| u.label(i).to_string()).collect::<Vec<_>>();
    Ok(CotorsionReport {
        universe: UniverseSummary {
            provenance: u.provenance().clone(),
            members: u.labels().to_vec(),
            dims: u.members().iter().map(|m| m.dims().to_vec()).collect(),
            exhaustive: u.is_exhaustive(),
        },
        x: labels(&xi),
        y: labels(&yi),
        orthogonality,
        completeness,
        hereditary,
        closure,
        core: labels(&core_indices),
        core_contravariantly_finite: finiteness,
        ext1_vanishes_on_generators: ext1_vanishes,
        x_indices: xi,
        y_indices: yi,
        core_indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ex310() -> (Universe, SubcatSpec) {
        let a = catalog::ex310_algebra();
        let u = Universe::enumerate(&a, &[1, 1, 1], &Budget::default()).unwrap();
        let c = SubcatSpec::new(
            "C",
            vec![projective_module(&a, 0), projective_module(&a, 1), projective_module(&a, 2), Module::simple(&a, 2)],
        );
        (u, c)
    }

    #[test]
    fn universe_labels() {
        let (u, _) = ex310();
        assert_eq!(u.labels(), ["S1", "S2", "S3", "P2", "P3"]);
        let a = u.algebra().clone();
        let m = direct_sum(&a, &[projective_module(&a, 1), Module::simple(&a, 0)]).module;
        let d = u.describe(&m);
        assert!(d == "P2⊕S1" || d == "S1⊕P2", "{d}");
    }

    #[test]
    fn explicit_universe_rejects_duplicates() {
        let a = catalog::a2_algebra();
        let s = Module::simple(&a, 0);
        let p = projective_module(&a, 0);
        let err = Universe::explicit(&a, vec![("a".into(), s), ("b".into(), p)], &Budget::default());
        assert!(matches!(err, Err(ModelError::InvalidUniverse(_))));
        let sum = direct_sum(&a, &[Module::simple(&a, 0), Module::simple(&a, 1)]).module;
        assert!(Universe::explicit(&a, vec![("s".into(), sum)], &Budget::default()).is_err());
        assert!(Universe::explicit(&a, vec![], &Budget::default()).is_err());
    }

    #[test]
    fn ex310_report() {
        let (u, c) = ex310();
        let r = analyze(&c, &c, &u).unwrap();
        assert!(r.orthogonality.left && r.orthogonality.right);
        assert_eq!(r.completeness.verdict, Decision::Yes);
        assert!(!r.hereditary.holds);
        let ce = r.hereditary.counterexample.as_ref().unwrap();
        assert_eq!((ce.x.as_str(), ce.y.as_str(), ce.dim), ("S3", "S1", 1));
        assert!(r.hereditary.precondition_verified);
        assert!(r.core_contravariantly_finite.holds);
        assert_eq!(r.core, ["S1", "S3", "P2", "P3"]);
        let summaries: Vec<String> = r
            .completeness
            .objects
            .iter()
            .flat_map(|o| [o.right.as_ref(), o.left.as_ref()])
            .flatten()
            .map(|w| w.summary.clone())
            .collect();
        assert!(summaries.contains(&"0 -> S1 -> P2 -> S2 -> 0".to_string()), "{summaries:?}");
        assert!(summaries.contains(&"0 -> S2 -> P3 -> S3 -> 0".to_string()), "{summaries:?}");
        assert!(r
            .closure
            .violations
            .iter()
            .any(|v| v.kind == ClosureKind::KernelLeavesX && v.summary == "0 -> S2 -> P3 -> S3 -> 0"));
        assert!(!r.closure.x_closed_under_kernels);
    }

    #[test]
    fn projective_pair_is_hereditary() {
        let (u, _) = ex310();
        let a = u.algebra().clone();
        let p = SubcatSpec::new("P", (0..3).map(|v| projective_module(&a, v)).collect());
        let all = u.subcat("ALL", &(0..u.len()).collect::<Vec<_>>());
        let r = analyze(&p, &all, &u).unwrap();
        assert!(r.certifies_model_structure());
        assert_eq!(r.core, ["S1", "P2", "P3"]);
    }

    #[test]
    fn tilting_pair_on_a2() {
        let a = catalog::a2_algebra();
        let u = Universe::enumerate(&a, &[1, 1], &Budget::default()).unwrap();
        assert_eq!(u.labels(), ["S1", "S2", "P2"]);
        let all = u.subcat("ALL", &[0, 1, 2]);
        let t = SubcatSpec::new("T", vec![projective_module(&a, 1), Module::simple(&a, 1)]);
        let r = analyze(&all, &t, &u).unwrap();
        assert!(r.certifies_model_structure());
        assert_eq!(r.core, ["S2", "P2"]);
        assert!(!check_orthogonality(&t, &t, &u).unwrap().left);
    }

    #[test]
    fn dual_numbers_pair() {
        let a = catalog::dual_numbers_algebra();
        let u = Universe::enumerate(&a, &[2], &Budget::default()).unwrap();
        assert_eq!(u.labels(), ["S1", "P1"]);
        let all = u.subcat("ALL", &[0, 1]);
        let proj = u.subcat("P", &[1]);
        let r = analyze(&all, &proj, &u).unwrap();
        assert!(r.certifies_model_structure());
        assert_eq!(r.completeness.objects[0].left.as_ref().unwrap().summary, "0 -> S1 -> P1 -> S1 -> 0");
    }

    #[test]
    fn core_approximation() {
        let (u, c) = ex310();
        let a = u.algebra().clone();
        let s2 = Module::simple(&a, 1);
        let t = right_core_approximation(&s2, &c);
        assert!(t.map.is_surjective());
        assert_eq!(t.components, vec![1]);
        let z = right_core_approximation(&Module::zero(&a), &c);
        assert!(z.map.source().is_zero());
        let p3 = projective_module(&a, 2);
        let t = right_core_approximation(&p3, &c);
        assert!(t.components.contains(&2));
        assert!(t.map.is_surjective());
    }
}
