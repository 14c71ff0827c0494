//! Krull-Schmidt decomposition via Fitting splittings of endomorphisms, and
//! isomorphism testing by searching Hom spaces for invertible elements.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{direct_sum, hom_basis, image, kernel, ModMorphism, Module, SubcatSpec};
use crate::budget::Budget;
use crate::combinations::{combine, for_each_combination, random_coefficients};
use crate::error::Undecided;

/// An indecomposable summand together with its inclusion into the
/// decomposed module. `certified` is false when indecomposability rests on
/// random sampling alone.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModMorphism,
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// True when every summand is certified indecomposable.
    pub exact: bool,
}

impl Decomposition {
    /// The isomorphism `⊕ summands -> M` assembled from the inclusions.
    pub fn assembly(&self, m: &Module) -> ModMorphism {
        if self.summands.is_empty() {
            return ModMorphism::zero(&direct_sum(m.algebra(), &[]).module, m);
        }
        let parts: Vec<ModMorphism> = self.summands.iter().map(|s| s.inclusion.clone()).collect();
        ModMorphism::row(m, &parts)
    }

    /// Projections `M -> summand_k` inverse to the inclusions.
    pub fn projections(&self, m: &Module) -> Vec<ModMorphism> {
        let iso = self.assembly(m);
        let inv = iso.inverse().expect("summand inclusions assemble to an isomorphism");
        let ds = direct_sum(m.algebra(), &self.summands.iter().map(|s| s.module.clone()).collect::<Vec<_>>());
        ds.projections.iter().map(|p| p.compose(&inv)).collect()
    }
}

enum SplitOutcome {
    Split(Box<[(Module, ModMorphism); 2]>),
    Indecomposable { certified: bool },
}

/// Decomposition engine. `known` lists modules already certified
/// indecomposable; a module isomorphic to one of them is accepted without
/// searching its endomorphism ring.
pub struct Decomposer<'a> {
    budget: &'a Budget,
    known: &'a [Module],
}

impl<'a> Decomposer<'a> {
    pub fn new(budget: &'a Budget) -> Self {
        Decomposer { budget, known: &[] }
    }

    pub fn with_known(budget: &'a Budget, known: &'a [Module]) -> Self {
        Decomposer { budget, known }
    }

    fn rng_for(&self, m: &Module) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.budget.seed ^ m.fingerprint())
    }

    pub fn split(&self, m: &Module) -> Decomposition {
        let mut summands = Vec::new();
        let mut stack = vec![ModMorphism::identity(m)];
        while let Some(inc) = stack.pop() {
            let part = inc.source().clone();
            if part.is_zero() {
                continue;
            }
            match self.try_split(&part) {
                SplitOutcome::Split(pieces) => {
                    let [(k, k_inc), (i, i_inc)] = *pieces;
                    // Push in reverse so the kernel side is processed first.
                    stack.push(inc.compose(&i_inc));
                    stack.push(inc.compose(&k_inc));
                    let _ = (k, i);
                }
                SplitOutcome::Indecomposable { certified } => {
                    summands.push(Summand { module: part, inclusion: inc, certified })
                }
            }
        }
        let exact = summands.iter().all(|s| s.certified);
        Decomposition { summands, exact }
    }

    fn try_split(&self, m: &Module) -> SplitOutcome {
        let key = m.invariant_key();
        for k in self.known {
            if k.dims() == m.dims() && k.invariant_key() == key {
                if let Ok(Some(_)) = find_isomorphism(m, k, self.budget) {
                    return SplitOutcome::Indecomposable { certified: true };
                }
            }
        }
        let end = hom_basis(m, m);
        if end.len() <= 1 {
            return SplitOutcome::Indecomposable { certified: true };
        }
        for phi in &end {
            if let Some(s) = fitting_split(phi) {
                return SplitOutcome::Split(s);
            }
        }
        let field = m.field();
        let flat: Vec<Vec<u32>> = end.iter().map(ModMorphism::flatten).collect();
        let len = ModMorphism::flat_len(m, m);
        if end.len() <= 12 {
            for i in 0..end.len() {
                for j in i + 1..end.len() {
                    if let Some(s) = fitting_split(&end[i].add(&end[j])) {
                        return SplitOutcome::Split(s);
                    }
                }
            }
        }
        let mut rng = self.rng_for(m);
        for _ in 0..self.budget.samples {
            let c = random_coefficients(field, end.len(), &mut rng);
            let phi = ModMorphism::from_flat(m, m, &combine(field, &flat, &c, len));
            if let Some(s) = fitting_split(&phi) {
                return SplitOutcome::Split(s);
            }
        }
        if self.budget.enumerable(field.characteristic(), end.len()).is_some() {
            let mut found = None;
            for_each_combination(field, &flat, len, |_, v| {
                let phi = ModMorphism::from_flat(m, m, v);
                if let Some(s) = fitting_split(&phi) {
                    found = Some(s);
                    return false;
                }
                true
            });
            return match found {
                Some(s) => SplitOutcome::Split(s),
                None => SplitOutcome::Indecomposable { certified: true },
            };
        }
        SplitOutcome::Indecomposable { certified: false }
    }
}

/// Fitting decomposition `M = ker φ^N ⊕ im φ^N`; `None` when φ is nilpotent
/// or invertible.
fn fitting_split(phi: &ModMorphism) -> Option<Box<[(Module, ModMorphism); 2]>> {
    let n = phi.source().total_dim() as u32;
    let maps: Vec<_> = phi.maps().iter().map(|m| m.pow(n)).collect();
    let total: usize = phi.source().total_dim();
    let rank: usize = maps.iter().map(|m| m.rank()).sum();
    if rank == 0 || rank == total {
        return None;
    }
    let power = ModMorphism::new_unchecked(phi.source().clone(), phi.target().clone(), maps);
    let (k, k_inc) = kernel(&power);
    let (i, i_inc, _) = image(&power);
    Some(Box::new([(k, k_inc), (i, i_inc)]))
}

/// Groups the summands of `m` into isomorphism classes with multiplicities.
/// Errors when indecomposability or isomorphism could not be settled.
pub fn decompose(m: &Module, budget: &Budget) -> Result<Vec<(Module, usize)>, Undecided> {
    let d = Decomposer::new(budget).split(m);
    if !d.exact && budget.samples == 0 {
        return Err(Undecided::new("endomorphism ring too large to enumerate and sampling disabled"));
    }
    let mut classes: Vec<(Module, usize)> = Vec::new();
    'outer: for s in d.summands {
        for (rep, mult) in classes.iter_mut() {
            if is_isomorphic(rep, &s.module, budget)? {
                *mult += 1;
                continue 'outer;
            }
        }
        classes.push((s.module, 1));
    }
    Ok(classes)
}

pub fn is_indecomposable(m: &Module, budget: &Budget) -> Result<bool, Undecided> {
    if m.is_zero() {
        return Ok(false);
    }
    let d = Decomposer::new(budget).split(m);
    match d.summands.len() {
        1 if d.exact => Ok(true),
        1 => Err(Undecided::new("no splitting found but endomorphism ring not exhausted")),
        _ => Ok(false),
    }
}

/// Searches `Hom(m, n)` for a morphism invertible at every vertex.
pub fn find_isomorphism(m: &Module, n: &Module, budget: &Budget) -> Result<Option<ModMorphism>, Undecided> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModMorphism::zero(m, n)));
    }
    if m.invariant_key() != n.invariant_key() {
        return Ok(None);
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return Ok(None);
    }
    for f in &basis {
        if f.is_isomorphism() {
            return Ok(Some(f.clone()));
        }
    }
    let field = m.field();
    let flat: Vec<Vec<u32>> = basis.iter().map(ModMorphism::flatten).collect();
    let len = ModMorphism::flat_len(m, n);
    if budget.enumerable(field.characteristic(), basis.len()).is_some() {
        let mut found = None;
        for_each_combination(field, &flat, len, |_, v| {
            let f = ModMorphism::from_flat(m, n, v);
            if f.is_isomorphism() {
                found = Some(f);
                return false;
            }
            true
        });
        return Ok(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ m.fingerprint() ^ n.fingerprint().rotate_left(17));
    for _ in 0..budget.samples {
        let c = random_coefficients(field, basis.len(), &mut rng);
        let f = ModMorphism::from_flat(m, n, &combine(field, &flat, &c, len));
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Err(Undecided::new(format!(
        "Hom space of dimension {} too large to enumerate; no isomorphism sampled",
        basis.len()
    )))
}

pub fn is_isomorphic(m: &Module, n: &Module, budget: &Budget) -> Result<bool, Undecided> {
    find_isomorphism(m, n, budget).map(|f| f.is_some())
}

/// Whether every indecomposable summand of `m` is isomorphic to a generator.
pub fn in_add(m: &Module, s: &SubcatSpec, budget: &Budget) -> Result<bool, Undecided> {
    let d = Decomposer::new(budget).split(m);
    for summand in &d.summands {
        let mut matched = false;
        let mut undecided = None;
        for g in &s.generators {
            match is_isomorphic(&summand.module, g, budget) {
                Ok(true) => {
                    matched = true;
                    break;
                }
                Ok(false) => {}
                Err(u) => undecided = Some(u),
            }
        }
        if matched {
            continue;
        }
        if let Some(u) = undecided {
            return Err(u);
        }
        if !summand.certified {
            return Err(Undecided::new("summand matches no generator and is not certified indecomposable"));
        }
        return Ok(false);
    }
    Ok(true)
}
