//! Model contexts for the fixture algebras, built without touching disk.

use omega_core::catalog;
use omega_core::cotorsion::Universe;
use omega_core::model::ModelContext;
use omega_core::{Budget, SubcatSpec};

fn pick(u: &Universe, label: &str, names: &[&str]) -> SubcatSpec {
    let gens = names
        .iter()
        .map(|n| {
            let i = u.labels().iter().position(|l| l == n).unwrap_or_else(|| panic!("no {n} in universe"));
            u.members()[i].clone()
        })
        .collect();
    SubcatSpec::new(label, gens)
}

fn context(u: Universe, x: (&str, &[&str]), y: (&str, &[&str])) -> ModelContext {
    let (x, y) = (pick(&u, x.0, x.1), pick(&u, y.0, y.1));
    ModelContext::new(u, x, y).expect("valid pair")
}

/// The three-vertex example with `C = add(S1, P2, P3, S3)` on both sides.
pub fn ex310() -> ModelContext {
    let u = Universe::enumerate(&catalog::ex310_algebra(), &[1, 1, 1], &Budget::default()).unwrap();
    let c: &[&str] = &["S1", "P2", "P3", "S3"];
    context(u, ("C", c), ("C", c))
}

/// Dual numbers with the projective cotorsion pair `(all, add A)`.
pub fn kxx2() -> ModelContext {
    let u = Universe::enumerate(&catalog::dual_numbers_algebra(), &[2], &Budget::default()).unwrap();
    context(u, ("X", &["S1", "P1"]), ("omega", &["P1"]))
}

/// Path algebra of `1 -> 2` with the tilting pair `(all, add(P2, S2))`.
pub fn ka2_tilt() -> ModelContext {
    let u = Universe::enumerate(&catalog::a2_algebra(), &[1, 1], &Budget::default()).unwrap();
    context(u, ("ALL", &["S1", "S2", "P2"]), ("T", &["P2", "S2"]))
}
