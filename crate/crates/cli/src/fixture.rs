//! Fixture files: schema, loading and validation.

use std::collections::BTreeMap;
use std::sync::Arc;

use omega_core::cotorsion::Universe;
use omega_core::module::projective_module;
use omega_core::{
    build_algebra, Algebra, Budget, Field, Matrix, ModMorphism, Module, MonomialRelationSet, Quiver, SubcatSpec,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub subcats: BTreeMap<String, SubcatFile>,
    pub universe: UniverseSpec,
    #[serde(default)]
    pub budgets: Option<Value>,
    #[serde(default)]
    pub pair: Option<PairSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub characteristic: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubcatFile {
    pub generators: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum UniverseSpec {
    Enumerate { dim_cap: Vec<usize> },
    Explicit { members: Vec<String> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub x: String,
    pub y: String,
}

/// A morphism between named modules (`"0"` is the zero module), one
/// row-major matrix per vertex.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub maps: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// Dotted location inside the fixture, e.g. `modules.S1.maps.alpha`.
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    pub message: String,
}

impl Diagnostic {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic { path: path.into(), line: None, column: None, message: message.into() }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "{}:{}: {}", l, c, self.message),
            _ if self.path.is_empty() => write!(f, "{}", self.message),
            _ => write!(f, "{}: {}", self.path, self.message),
        }
    }
}

pub struct Loaded {
    pub algebra: Arc<Algebra>,
    pub modules: BTreeMap<String, Module>,
    pub morphisms: BTreeMap<String, ModMorphism>,
    pub subcats: BTreeMap<String, Vec<String>>,
    pub universe: Universe,
    pub dim_cap: Option<Vec<usize>>,
    pub budget: Budget,
    pub pair: Option<PairSpec>,
    pub sha256: String,
}

/// Names resolved to subcategories when the fixture does not define them.
pub const BUILTIN_SUBCATS: [&str; 2] = ["P", "ALL"];

impl Loaded {
    /// A fixture subcategory, or one of the built-ins: `P` (indecomposable
    /// projectives) and `ALL` (every universe member).
    pub fn subcat(&self, name: &str) -> Option<SubcatSpec> {
        if let Some(gens) = self.subcats.get(name) {
            return Some(SubcatSpec::new(name, gens.iter().map(|g| self.modules[g].clone()).collect()));
        }
        match name {
            "P" => Some(SubcatSpec::new(
                "P",
                (0..self.algebra.vertex_count()).map(|v| projective_module(&self.algebra, v)).collect(),
            )),
            "ALL" => Some(SubcatSpec::new("ALL", self.universe.members().to_vec())),
            _ => None,
        }
    }

    pub fn module(&self, name: &str) -> Option<Module> {
        if name == "0" {
            return Some(Module::zero(&self.algebra));
        }
        self.modules.get(name).cloned()
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Applies `KEY=VAL` overrides on top of a budget.
pub fn apply_overrides(base: &Budget, overrides: &[(String, u64)]) -> Result<Budget, String> {
    let mut v = serde_json::to_value(base).expect("budget serializes");
    let obj = v.as_object_mut().expect("budget is an object");
    for (k, val) in overrides {
        if !obj.contains_key(k) {
            return Err(format!("unknown budget key `{k}`"));
        }
        obj.insert(k.clone(), Value::from(*val));
    }
    serde_json::from_value(v).map_err(|e| e.to_string())
}

fn matrix(field: Field, rows: usize, cols: usize, data: &[Vec<i64>], path: &str) -> Result<Matrix, Diagnostic> {
    if rows * cols == 0 && data.iter().all(|r| r.is_empty()) && (data.is_empty() || data.len() == rows) {
        return Ok(Matrix::zeros(field, rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        let found_cols = data.first().map_or(0, Vec::len);
        return Err(Diagnostic::at(path, format!("matrix is {}x{found_cols}, expected {rows}x{cols}", data.len())));
    }
    Ok(Matrix::from_rows(field, data))
}

fn parse(bytes: &[u8]) -> Result<FixtureFile, Diagnostic> {
    serde_json::from_slice(bytes).map_err(|e| Diagnostic {
        path: String::new(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })
}

/// Loads and validates a fixture, collecting every diagnostic it can.
pub fn load(bytes: &[u8], overrides: &[(String, u64)]) -> Result<Loaded, Vec<Diagnostic>> {
    let file = parse(bytes).map_err(|d| vec![d])?;
    let mut diags = Vec::new();

    let base: Budget = match &file.budgets {
        Some(v) => serde_json::from_value(v.clone()).map_err(|e| vec![Diagnostic::at("budgets", e.to_string())])?,
        None => Budget::default(),
    };
    let budget = apply_overrides(&base, overrides).map_err(|e| vec![Diagnostic::at("--budget", e)])?;

    let field = Field::new(file.field.characteristic)
        .map_err(|e| vec![Diagnostic::at("field.characteristic", e.to_string())])?;
    let triples: Vec<(&str, usize, usize)> =
        file.quiver.arrows.iter().map(|a| (a.id.as_str(), a.source, a.target)).collect();
    let quiver = Quiver::from_triples(file.quiver.vertices, &triples)
        .map_err(|e| vec![Diagnostic::at("quiver", e.to_string())])?;
    let rels = MonomialRelationSet::parse(&quiver, &file.relations)
        .map_err(|e| vec![Diagnostic::at("relations", e.to_string())])?;
    let algebra = build_algebra(quiver, rels, field, budget.path_length_bound)
        .map_err(|e| vec![Diagnostic::at("relations", e.to_string())])?;
    let q = algebra.quiver();

    let mut modules = BTreeMap::new();
    for (name, spec) in &file.modules {
        let path = format!("modules.{name}");
        if name == "0" {
            diags.push(Diagnostic::at(&path, "the name `0` is reserved for the zero module"));
            continue;
        }
        if spec.dims.len() != q.vertex_count() {
            diags.push(Diagnostic::at(
                format!("{path}.dims"),
                format!("{} entries, quiver has {} vertices", spec.dims.len(), q.vertex_count()),
            ));
            continue;
        }
        for id in spec.maps.keys() {
            if q.arrow_index(id).is_none() {
                diags.push(Diagnostic::at(format!("{path}.maps.{id}"), format!("unknown arrow `{id}`")));
            }
        }
        let mut maps = Vec::new();
        let mut ok = true;
        for a in q.arrows() {
            let (rows, cols) = (spec.dims[a.target], spec.dims[a.source]);
            let data = spec.maps.get(&a.id).map(Vec::as_slice).unwrap_or(&[]);
            match matrix(field, rows, cols, data, &format!("{path}.maps.{}", a.id)) {
                Ok(m) => maps.push(m),
                Err(d) => {
                    diags.push(d);
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut violated = false;
        for (rel, rel_name) in algebra.relations().relations().iter().zip(algebra.relation_names()) {
            let mut acc = maps[rel[0]].clone();
            for &a in &rel[1..] {
                acc = maps[a].mul(&acc);
            }
            if !acc.is_zero() {
                violated = true;
                diags.push(Diagnostic::at(
                    &path,
                    format!("relation {rel_name} is violated: product is {:?}", acc.to_rows()),
                ));
            }
        }
        if violated {
            continue;
        }
        match Module::new(algebra.clone(), spec.dims.clone(), maps) {
            Ok(m) => {
                modules.insert(name.clone(), m);
            }
            Err(e) => diags.push(Diagnostic::at(&path, e.to_string())),
        }
    }

    let resolve = |name: &str| -> Option<Module> {
        if name == "0" {
            Some(Module::zero(&algebra))
        } else {
            modules.get(name).cloned()
        }
    };

    let mut morphisms = BTreeMap::new();
    for (name, spec) in &file.morphisms {
        let path = format!("morphisms.{name}");
        let (s, t) = (resolve(&spec.source), resolve(&spec.target));
        for (end, m) in [(&spec.source, &s), (&spec.target, &t)] {
            if m.is_none() {
                diags.push(Diagnostic::at(&path, format!("unknown or invalid module `{end}`")));
            }
        }
        let (Some(s), Some(t)) = (s, t) else {
            continue;
        };
        if spec.maps.len() != q.vertex_count() {
            diags.push(Diagnostic::at(
                format!("{path}.maps"),
                format!("{} vertex components, quiver has {} vertices", spec.maps.len(), q.vertex_count()),
            ));
            continue;
        }
        let comps: Result<Vec<Matrix>, Diagnostic> = (0..q.vertex_count())
            .map(|v| matrix(field, t.dims()[v], s.dims()[v], &spec.maps[v], &format!("{path}.maps[{v}]")))
            .collect();
        match comps {
            Ok(comps) => match ModMorphism::new(s, t, comps) {
                Ok(f) => {
                    morphisms.insert(name.clone(), f);
                }
                Err(e) => diags.push(Diagnostic::at(&path, e.to_string())),
            },
            Err(d) => diags.push(d),
        }
    }

    let mut subcats = BTreeMap::new();
    for (name, spec) in &file.subcats {
        let mut ok = true;
        for g in &spec.generators {
            if !file.modules.contains_key(g) {
                diags.push(Diagnostic::at(format!("subcats.{name}.generators"), format!("unknown module `{g}`")));
                ok = false;
            }
        }
        if ok {
            subcats.insert(name.clone(), spec.generators.clone());
        }
    }

    if !diags.is_empty() {
        return Err(diags);
    }

    let (universe, dim_cap) = match &file.universe {
        UniverseSpec::Enumerate { dim_cap } => match Universe::enumerate(&algebra, dim_cap, &budget) {
            Ok(u) => (u, Some(dim_cap.clone())),
            Err(e) => return Err(vec![Diagnostic::at("universe.dim_cap", e.to_string())]),
        },
        UniverseSpec::Explicit { members } => {
            let mut named = Vec::new();
            for m in members {
                match modules.get(m) {
                    Some(module) => named.push((m.clone(), module.clone())),
                    None => diags.push(Diagnostic::at("universe.members", format!("unknown module `{m}`"))),
                }
            }
            if !diags.is_empty() {
                return Err(diags);
            }
            match Universe::explicit(&algebra, named, &budget) {
                Ok(u) => (u, None),
                Err(e) => return Err(vec![Diagnostic::at("universe", e.to_string())]),
            }
        }
    };

    let loaded = Loaded {
        algebra,
        modules,
        morphisms,
        subcats,
        universe,
        dim_cap,
        budget,
        pair: file.pair.clone(),
        sha256: sha256_hex(bytes),
    };
    if let Some(p) = &file.pair {
        for (side, name) in [("x", &p.x), ("y", &p.y)] {
            if loaded.subcat(name).is_none() {
                diags.push(Diagnostic::at(format!("pair.{side}"), format!("unknown subcategory `{name}`")));
            }
        }
    }
    for (name, gens) in &loaded.subcats {
        for g in gens {
            if let Err(e) = loaded.universe.locate(&loaded.modules[g]) {
                diags.push(Diagnostic::at(format!("subcats.{name}"), format!("`{g}`: {e}")));
            }
        }
    }
    if diags.is_empty() {
        Ok(loaded)
    } else {
        Err(diags)
    }
}

/// Every diagnostic for the fixture at `bytes`; empty when it is well formed.
pub fn validate_fixture(bytes: &[u8]) -> Vec<Diagnostic> {
    match load(bytes, &[]) {
        Ok(_) => Vec::new(),
        Err(d) => d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = r#"{
        "field": {"characteristic": 2},
        "quiver": {"vertices": 2, "arrows": [{"id": "a", "source": 1, "target": 0}]},
        "modules": {"P2": {"dims": [1, 1], "maps": {"a": [[1]]}}, "S1": {"dims": [1, 0]}},
        "subcats": {"T": {"generators": ["P2"]}},
        "universe": {"mode": "enumerate", "dim_cap": [1, 1]},
        "morphisms": {"inc": {"source": "S1", "target": "P2", "maps": [[[1]], []]}}
    }"#;

    #[test]
    fn loads_tiny_fixture() {
        let l = load(TINY.as_bytes(), &[]).unwrap();
        assert_eq!(l.universe.len(), 3);
        assert!(l.morphisms["inc"].is_injective());
        assert_eq!(l.subcat("P").unwrap().generators.len(), 2);
        assert_eq!(l.subcat("ALL").unwrap().generators.len(), 3);
        assert!(l.subcat("nope").is_none());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let d = validate_fixture(b"{\n  \"field\": {\"characteristic\": 2},\n  \"quiver\": 3\n}");
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].line, Some(3));
    }

    #[test]
    fn budget_overrides() {
        let b = apply_overrides(&Budget::default(), &[("m_max".into(), 5)]).unwrap();
        assert_eq!(b.m_max, 5);
        assert!(apply_overrides(&Budget::default(), &[("bogus".into(), 1)]).is_err());
    }

    #[test]
    fn hash_is_hex_sha256() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
