//! The homotopy category as the additive quotient `X/ω`.

use serde::Serialize;

use crate::linalg::{in_column_span, Matrix};
use crate::model::ModelContext;
use crate::module::{direct_sum, hom_basis, ModMorphism, Module, SubcatSpec};

#[derive(Clone, Debug, Serialize)]
pub struct StableHom {
    pub source: Module,
    pub target: Module,
    pub total_dim: usize,
    pub factoring_dim: usize,
    pub quotient_dim: usize,
    /// Coset representatives for `Hom(M, N)` modulo maps through `ω`.
    pub quotient_basis: Vec<ModMorphism>,
}

/// Flattened composites `g ∘ h` over Hom bases through each of `objects`.
fn factoring_span(m: &Module, n: &Module, objects: &[Module]) -> Matrix {
    let len = ModMorphism::flat_len(m, n);
    let mut cols = Vec::new();
    for w in objects {
        let into = hom_basis(m, w);
        if into.is_empty() {
            continue;
        }
        for g in hom_basis(w, n) {
            for h in &into {
                cols.push(g.compose(h).flatten());
            }
        }
    }
    Matrix::from_columns(m.field(), len, &cols).image_basis()
}

fn stable_hom_through(m: &Module, n: &Module, objects: &[Module]) -> StableHom {
    let span = factoring_span(m, n, objects);
    let factoring_dim = span.cols();
    let mut current = span;
    let mut quotient_basis = Vec::new();
    let basis = hom_basis(m, n);
    for f in &basis {
        let v = f.flatten();
        if !in_column_span(&current, &v) {
            current = current.hstack(&Matrix::from_columns(m.field(), v.len(), &[v]));
            quotient_basis.push(f.clone());
        }
    }
    StableHom {
        source: m.clone(),
        target: n.clone(),
        total_dim: basis.len(),
        factoring_dim,
        quotient_dim: quotient_basis.len(),
        quotient_basis,
    }
}

/// `Hom(M, N)` modulo the maps factoring through `add(core)`.
pub fn stable_hom(m: &Module, n: &Module, core: &SubcatSpec) -> StableHom {
    stable_hom_through(m, n, &core.generators)
}

/// As [`stable_hom`], but factoring through `W^copies` for each generator.
pub fn stable_hom_with_copies(m: &Module, n: &Module, core: &SubcatSpec, copies: usize) -> StableHom {
    let alg = m.algebra();
    let sums: Vec<Module> = core.generators.iter().map(|w| direct_sum(alg, &vec![w.clone(); copies]).module).collect();
    stable_hom_through(m, n, &sums)
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyTable {
    pub objects: Vec<String>,
    pub total_dims: Vec<Vec<usize>>,
    pub quotient_dims: Vec<Vec<usize>>,
    /// Generators isomorphic to 0 in the quotient (stable End vanishes).
    pub zero_objects: Vec<bool>,
    pub nonzero_count: usize,
}

/// Stable Hom dimensions between all generators of `X`.
pub fn homotopy_table(ctx: &ModelContext) -> HomotopyTable {
    let gens = &ctx.x().generators;
    let mut total_dims = Vec::new();
    let mut quotient_dims = Vec::new();
    for m in gens {
        let row: Vec<StableHom> = gens.iter().map(|n| stable_hom(m, n, ctx.core())).collect();
        total_dims.push(row.iter().map(|s| s.total_dim).collect::<Vec<_>>());
        quotient_dims.push(row.iter().map(|s| s.quotient_dim).collect::<Vec<_>>());
    }
    let zero_objects: Vec<bool> = (0..gens.len()).map(|i| quotient_dims[i][i] == 0).collect();
    HomotopyTable {
        objects: gens.iter().map(|m| ctx.describe(m)).collect(),
        total_dims,
        quotient_dims,
        nonzero_count: zero_objects.iter().filter(|z| !**z).count(),
        zero_objects,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum HomotopyWitness {
    /// `f - g = v ∘ u` with `u: M -> T`, `v: T -> N`, `T ∈ add(core)`.
    Homotopic {
        through: Module,
        u: ModMorphism,
        v: ModMorphism,
    },
    Distinct,
}

/// Decides `f ∼ g`, i.e. whether `f - g` factors through `add(core)`.
pub fn homotopy_witness(f: &ModMorphism, g: &ModMorphism, core: &SubcatSpec) -> HomotopyWitness {
    let (m, n) = (f.source(), f.target());
    let d = f.sub(g);
    // Unknowns: one coefficient per (generator, h, g) triple.
    let mut triples = Vec::new();
    let mut cols = Vec::new();
    for (i, w) in core.generators.iter().enumerate() {
        let into = hom_basis(m, w);
        let out = hom_basis(w, n);
        for (b, gb) in out.iter().enumerate() {
            for (a, h) in into.iter().enumerate() {
                triples.push((i, a, b));
                cols.push(gb.compose(h).flatten());
            }
        }
    }
    let len = ModMorphism::flat_len(m, n);
    let field = m.field();
    let system = Matrix::from_columns(field, len, &cols);
    let rhs = Matrix::from_columns(field, len, &[d.flatten()]);
    let Ok(sol) = system.solve(&rhs) else {
        return HomotopyWitness::Distinct;
    };
    let coeffs = sol.column(0);
    let mut us = Vec::new();
    let mut vs = Vec::new();
    for (i, w) in core.generators.iter().enumerate() {
        let into = hom_basis(m, w);
        for (b, gb) in hom_basis(w, n).iter().enumerate() {
            let mut u = ModMorphism::zero(m, w);
            for (t, &(ti, a, tb)) in triples.iter().enumerate() {
                if ti == i && tb == b && coeffs[t] != 0 {
                    u = u.add(&into[a].scale(coeffs[t]));
                }
            }
            if !u.is_zero() {
                us.push(u);
                vs.push(gb.clone());
            }
        }
    }
    let u = ModMorphism::column(m, &us);
    HomotopyWitness::Homotopic { through: u.target().clone(), u, v: ModMorphism::row(n, &vs) }
}
