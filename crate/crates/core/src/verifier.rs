//! Axiom checks over a finite morphism pool, with re-checkable
//! counterexamples.

use std::collections::HashSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinations::{combine, random_coefficients};
use crate::decision::Decision;
use crate::homological::solve_hom;
use crate::model::{
    factorize_cofib_trivfib, factorize_trivcofib_fib, lift, Classification, FactorizationKind, LiftOutcome,
    ModelContext, MorphismClass,
};
use crate::module::{direct_sum, hom_basis, ModMorphism, Module};

/// Caps on the number of configurations each check visits.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyCaps {
    pub composable_pairs: usize,
    pub retract_pairs: usize,
    pub squares: usize,
    /// Extra `β` choices per `(i, p, α)` beyond a particular solution.
    pub beta_directions: usize,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps { composable_pairs: 1_000_000, retract_pairs: 20_000, squares: 1_000_000, beta_directions: 2 }
    }
}

pub struct MorphismPool {
    pub objects: Vec<Module>,
    pub labels: Vec<String>,
    /// `homs[s][t]`: pool morphisms from `objects[s]` to `objects[t]`.
    pub homs: Vec<Vec<Vec<ModMorphism>>>,
    pub seed: u64,
}

impl MorphismPool {
    /// Zero, universe members, and direct sums of up to `sum_cap` members;
    /// per Hom space the basis, pairwise basis sums, zero, identity and
    /// `n_random` seeded combinations.
    pub fn build(ctx: &ModelContext) -> Self {
        let u = ctx.universe();
        let budget = ctx.budget();
        let alg = u.algebra();
        let mut objects = vec![Module::zero(alg)];
        let mut labels = vec!["0".to_string()];
        for (i, m) in u.members().iter().enumerate() {
            objects.push(m.clone());
            labels.push(u.label(i).to_string());
        }
        if budget.sum_cap >= 2 {
            for i in 0..u.len() {
                for j in i..u.len() {
                    objects.push(direct_sum(alg, &[u.members()[i].clone(), u.members()[j].clone()]).module);
                    labels.push(format!("{}⊕{}", u.label(i), u.label(j)));
                }
            }
        }
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in 0..n {
                homs[s][t] =
                    pool_homs(&objects[s], &objects[t], s == t, budget.n_random, budget.seed ^ ((s * n + t) as u64));
            }
        }
        MorphismPool { objects, labels, homs, seed: budget.seed }
    }

    /// A pool holding only the identity of each object.
    pub fn identities(objects: Vec<Module>, labels: Vec<String>) -> Self {
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (s, m) in objects.iter().enumerate() {
            homs[s][s].push(ModMorphism::identity(m));
        }
        MorphismPool { objects, labels, homs, seed: 0 }
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &ModMorphism> {
        self.homs.iter().flatten().flatten()
    }

    pub fn len(&self) -> usize {
        self.morphisms().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn index_of(&self, m: &Module) -> Option<usize> {
        self.objects.iter().position(|o| o == m)
    }
}

fn pool_homs(s: &Module, t: &Module, same: bool, n_random: usize, seed: u64) -> Vec<ModMorphism> {
    let basis = hom_basis(s, t);
    let mut out = vec![ModMorphism::zero(s, t)];
    if same {
        out.push(ModMorphism::identity(s));
    }
    out.extend(basis.iter().cloned());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(basis[i].add(&basis[j]));
        }
    }
    if !basis.is_empty() {
        let field = s.field();
        let flat: Vec<Vec<u32>> = basis.iter().map(ModMorphism::flatten).collect();
        let len = ModMorphism::flat_len(s, t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n_random {
            let c = random_coefficients(field, basis.len(), &mut rng);
            out.push(ModMorphism::from_flat(s, t, &combine(field, &flat, &c, len)));
        }
    }
    let mut seen = HashSet::new();
    out.retain(|f| seen.insert(f.clone()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub summary: String,
    pub morphisms: Vec<(String, ModMorphism)>,
    pub classifications: Vec<(String, Classification)>,
    /// The failure reproduces in a context with every cache emptied.
    pub reverified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomStatus {
    pub verdict: Verdict,
    pub checked: usize,
    pub undecided: usize,
    pub skipped: usize,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub undecided_examples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const MAX_EXAMPLES: usize = 8;

#[derive(Default)]
struct Tally {
    checked: usize,
    undecided: usize,
    skipped: usize,
    truncated: bool,
    examples: Vec<String>,
    failures: usize,
    certificate: Option<Certificate>,
}

impl Tally {
    fn undecided(&mut self, what: impl FnOnce() -> String) {
        self.undecided += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what());
        }
    }

    fn finish(self, note: Option<String>) -> AxiomStatus {
        let verdict = if self.failures > 0 {
            Verdict::Fail
        } else if self.undecided > 0 {
            Verdict::Undecided
        } else {
            Verdict::Pass
        };
        AxiomStatus {
            verdict,
            checked: self.checked,
            undecided: self.undecided,
            skipped: self.skipped,
            truncated: self.truncated,
            undecided_examples: self.examples,
            certificate: self.certificate,
            note,
        }
    }
}

fn skipped(note: &str) -> AxiomStatus {
    AxiomStatus {
        verdict: Verdict::Skipped,
        checked: 0,
        undecided: 0,
        skipped: 0,
        truncated: false,
        undecided_examples: Vec::new(),
        certificate: None,
        note: Some(note.into()),
    }
}

fn arrow(ctx: &ModelContext, f: &ModMorphism) -> String {
    format!("{} -> {}", ctx.describe(f.source()), ctx.describe(f.target()))
}

fn weq(ctx: &ModelContext, f: &ModMorphism) -> Decision {
    ctx.classify(f).weq
}

/// If two of `f`, `g`, `g∘f` are weak equivalences, so is the third.
pub fn verify_two_out_of_three(pool: &MorphismPool, ctx: &ModelContext, caps: &VerifyCaps) -> AxiomStatus {
    let mut t = Tally::default();
    let n = pool.objects.len();
    let mut best: Option<(bool, [ModMorphism; 3])> = None;
    'outer: for b in 0..n {
        for a in 0..n {
            for f in &pool.homs[a][b] {
                let wf = weq(ctx, f);
                for c in 0..n {
                    for g in &pool.homs[b][c] {
                        if t.checked + t.undecided >= caps.composable_pairs {
                            t.truncated = true;
                            break 'outer;
                        }
                        let gf = g.compose(f);
                        let flags = [wf, weq(ctx, g), weq(ctx, &gf)];
                        let yes = flags.iter().filter(|d| d.is_yes()).count();
                        let no = flags.iter().filter(|d| **d == Decision::No).count();
                        if yes == 2 && no == 1 {
                            t.failures += 1;
                            let prefer = g.target().is_zero();
                            if best.as_ref().is_none_or(|(p, _)| prefer && !p) {
                                best = Some((prefer, [f.clone(), g.clone(), gf]));
                            }
                            t.checked += 1;
                        } else if yes >= 2 || no >= 2 || (yes == 1 && no == 1) {
                            // decided: at most one weak equivalence is
                            // present or all three are
                            t.checked += 1;
                        } else if yes == 3 {
                            t.checked += 1;
                        } else {
                            t.undecided(|| format!("{} then {}", arrow(ctx, f), arrow(ctx, g)));
                        }
                    }
                }
            }
        }
    }
    if let Some((_, [f, g, gf])) = best {
        let fresh = ctx.fresh();
        let c: Vec<Arc<Classification>> = [&f, &g, &gf].iter().map(|m| fresh.classify(m)).collect();
        let flags = [c[0].weq, c[1].weq, c[2].weq];
        let reverified = flags.iter().filter(|d| d.is_yes()).count() == 2 && flags.contains(&Decision::No);
        let bad = ["f", "g", "gf"][flags.iter().position(|d| *d == Decision::No).unwrap_or(0)];
        t.certificate = Some(Certificate {
            summary: format!(
                "f: {}, g: {}; two of f, g, gf are weak equivalences but {bad} is not (middle object {})",
                arrow(ctx, &f),
                arrow(ctx, &g),
                ctx.describe(f.target())
            ),
            classifications: vec![
                ("f".into(), (*c[0]).clone()),
                ("g".into(), (*c[1]).clone()),
                ("gf".into(), (*c[2]).clone()),
            ],
            morphisms: vec![("f".into(), f), ("g".into(), g), ("gf".into(), gf)],
            reverified,
        });
    }
    t.finish(None)
}

const RETRACT_CLASSES: [MorphismClass; 3] = [MorphismClass::CoFib, MorphismClass::Fib, MorphismClass::Weq];

/// Each class is closed under retracts; diagrams are `f₁` as a summand of
/// `f₁ ⊕ f₂` via the canonical injections and projections.
pub fn verify_retract(pool: &MorphismPool, ctx: &ModelContext, caps: &VerifyCaps) -> AxiomStatus {
    let mut t = Tally::default();
    let alg = ctx.universe().algebra();
    let small: Vec<&ModMorphism> = pool
        .homs
        .iter()
        .take(ctx.universe().len() + 1)
        .flat_map(|row| row.iter().take(ctx.universe().len() + 1).flatten())
        .collect();
    let mut found: Option<(MorphismClass, ModMorphism, ModMorphism)> = None;
    'outer: for f1 in pool.morphisms() {
        for f2 in &small {
            if t.checked + t.undecided >= caps.retract_pairs {
                t.truncated = true;
                break 'outer;
            }
            let sum = ModMorphism::diagonal(alg, &[f1.clone(), (*f2).clone()]);
            let (c1, cs) = (ctx.classify(f1), ctx.classify(&sum));
            let mut undecided = false;
            for class in RETRACT_CLASSES {
                match (cs.flag(class), c1.flag(class)) {
                    (Decision::Yes, Decision::No) => {
                        t.failures += 1;
                        if found.is_none() {
                            found = Some((class, f1.clone(), sum.clone()));
                        }
                    }
                    (Decision::Yes, Decision::Undecided) | (Decision::Undecided, _) => undecided = true,
                    _ => {}
                }
            }
            if undecided {
                t.undecided(|| format!("{} as a summand of {}", arrow(ctx, f1), arrow(ctx, &sum)));
            } else {
                t.checked += 1;
            }
        }
    }
    if let Some((class, g, f)) = found {
        let fresh = ctx.fresh();
        let (cg, cf) = (fresh.classify(&g), fresh.classify(&f));
        t.certificate = Some(Certificate {
            summary: format!("{class:?}: {} is a retract of {} but not in the class", arrow(ctx, &g), arrow(ctx, &f)),
            reverified: cf.flag(class).is_yes() && cg.flag(class) == Decision::No,
            classifications: vec![("g".into(), (*cg).clone()), ("f".into(), (*cf).clone())],
            morphisms: vec![("g".into(), g), ("f".into(), f)],
        });
    }
    t.finish(Some("retracts of the form f -> f ⊕ g -> f with g between zero and single universe members".into()))
}

/// Every commuting square with a (trivial) cofibration on the left and a
/// trivial fibration (fibration) on the right has a diagonal.
pub fn verify_lifting(pool: &MorphismPool, ctx: &ModelContext, caps: &VerifyCaps) -> AxiomStatus {
    let mut t = Tally::default();
    let (mut lefts, mut rights) = (Vec::new(), Vec::new());
    for f in pool.morphisms() {
        let c = ctx.classify(f);
        if c.cofib.is_yes() || c.tcofib.is_yes() {
            lefts.push((f, c.clone()));
        } else if !c.cofib.is_decided() || !c.tcofib.is_decided() {
            t.undecided(|| format!("left edge {}", arrow(ctx, f)));
        }
        if c.fib.is_yes() || c.tfib.is_yes() {
            rights.push((f, c));
        } else if !c.fib.is_decided() || !c.tfib.is_decided() {
            t.undecided(|| format!("right edge {}", arrow(ctx, f)));
        }
    }
    let mut found = None;
    'outer: for (i, ci) in &lefts {
        for (p, cp) in &rights {
            let promised = (ci.cofib.is_yes() && cp.tfib.is_yes()) || (ci.tcofib.is_yes() && cp.fib.is_yes());
            if !promised {
                continue;
            }
            let (Some(a), Some(x)) = (pool.index_of(i.source()), pool.index_of(p.source())) else {
                continue;
            };
            for alpha in &pool.homs[a][x] {
                let pa = p.compose(alpha);
                let Some(betas) = solve_hom(i.target(), p.target(), |b| b.compose(i).flatten(), &pa.flatten()) else {
                    t.skipped += 1;
                    continue;
                };
                let mut choices = vec![betas.particular.clone()];
                choices.extend(betas.directions.iter().take(caps.beta_directions).map(|d| betas.particular.add(d)));
                for beta in choices {
                    if t.checked >= caps.squares {
                        t.truncated = true;
                        break 'outer;
                    }
                    t.checked += 1;
                    match lift(i, p, alpha, &beta, ctx) {
                        Ok(LiftOutcome::Lifted(_)) => {}
                        Ok(LiftOutcome::NoLift { violation: true }) => {
                            t.failures += 1;
                            if found.is_none() {
                                found = Some([(*i).clone(), (*p).clone(), alpha.clone(), beta]);
                            }
                        }
                        Ok(LiftOutcome::NoLift { violation: false }) | Err(_) => t.skipped += 1,
                    }
                }
            }
        }
    }
    if let Some([i, p, alpha, beta]) = found {
        let fresh = ctx.fresh();
        let reverified = matches!(lift(&i, &p, &alpha, &beta, &fresh), Ok(LiftOutcome::NoLift { violation: true }));
        t.certificate = Some(Certificate {
            summary: format!(
                "no diagonal for the square with left edge {} and right edge {}",
                arrow(ctx, &i),
                arrow(ctx, &p)
            ),
            classifications: vec![
                ("i".into(), (*fresh.classify(&i)).clone()),
                ("p".into(), (*fresh.classify(&p)).clone()),
            ],
            morphisms: vec![("i".into(), i), ("p".into(), p), ("alpha".into(), alpha), ("beta".into(), beta)],
            reverified,
        });
    }
    let note = (!ctx.report().ext1_vanishes_on_generators)
        .then(|| "Ext^1(X, Y) does not vanish on generators; missing lifts are not violations".to_string());
    t.finish(note)
}

/// Both factorizations exist for every pool morphism and their factors
/// classify as promised.
pub fn verify_factorization(pool: &MorphismPool, ctx: &ModelContext) -> AxiomStatus {
    let mut t = Tally::default();
    let mut found = None;
    for f in pool.morphisms() {
        let first = factorize_trivcofib_fib(f, ctx);
        let mut verdicts = vec![(first.kind, first.check(f, ctx).verdict(), Some(first))];
        match factorize_cofib_trivfib(f, ctx) {
            Ok(second) => verdicts.push((second.kind, second.check(f, ctx).verdict(), Some(second))),
            Err(_) => verdicts.push((FactorizationKind::CofibThenTrivfib, Decision::Undecided, None)),
        }
        let mut undecided = false;
        for (kind, v, fac) in verdicts {
            match v {
                Decision::Yes => {}
                Decision::No => {
                    t.failures += 1;
                    if found.is_none() {
                        found = fac.map(|fac| (f.clone(), fac));
                    }
                }
                Decision::Undecided => {
                    undecided = true;
                    let _ = kind;
                }
            }
        }
        if undecided {
            t.undecided(|| arrow(ctx, f));
        } else {
            t.checked += 1;
        }
    }
    if let Some((f, fac)) = found {
        let fresh = ctx.fresh();
        let check = fac.check(&f, &fresh);
        t.certificate = Some(Certificate {
            summary: format!(
                "{:?} factorization of {} through {} fails: {check:?}",
                fac.kind,
                arrow(ctx, &f),
                fac.middle
            ),
            classifications: vec![
                ("left".into(), (*fresh.classify(&fac.left)).clone()),
                ("right".into(), (*fresh.classify(&fac.right)).clone()),
            ],
            reverified: check.verdict() == Decision::No,
            morphisms: vec![("f".into(), f), ("left".into(), fac.left), ("right".into(), fac.right)],
        });
    }
    t.finish(None)
}

/// `TCoFib = CoFib ∩ Weq` and `TFib = Fib ∩ Weq` on decided morphisms.
pub fn verify_class_identities(pool: &MorphismPool, ctx: &ModelContext) -> AxiomStatus {
    if !ctx.report().ext1_vanishes_on_generators {
        return skipped("Ext^1(X, Y) does not vanish on generators");
    }
    let mut t = Tally::default();
    let mut found = None;
    for f in pool.morphisms() {
        let c = ctx.classify(f);
        let lhs = [c.tcofib, c.tfib];
        let rhs = [c.cofib.and(c.weq), c.fib.and(c.weq)];
        if lhs.iter().chain(&rhs).any(|d| !d.is_decided()) {
            t.undecided(|| arrow(ctx, f));
            continue;
        }
        t.checked += 1;
        if lhs != rhs {
            t.failures += 1;
            if found.is_none() {
                found = Some(f.clone());
            }
        }
    }
    if let Some(f) = found {
        let c = ctx.fresh().classify(&f);
        t.certificate = Some(Certificate {
            summary: format!("class flags of {} violate TCoFib = CoFib ∩ Weq or TFib = Fib ∩ Weq", arrow(ctx, &f)),
            reverified: c.tcofib != c.cofib.and(c.weq) || c.tfib != c.fib.and(c.weq),
            classifications: vec![("f".into(), (*c).clone())],
            morphisms: vec![("f".into(), f)],
        });
    }
    t.finish(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub pool_objects: usize,
    pub pool_morphisms: usize,
    pub seed: u64,
    pub two_out_of_three: AxiomStatus,
    pub retract: AxiomStatus,
    pub lifting: AxiomStatus,
    pub factorization: AxiomStatus,
    pub class_identities: AxiomStatus,
}

impl AxiomReport {
    pub fn statuses(&self) -> [(&'static str, &AxiomStatus); 5] {
        [
            ("two_out_of_three", &self.two_out_of_three),
            ("retract", &self.retract),
            ("lifting", &self.lifting),
            ("factorization", &self.factorization),
            ("class_identities", &self.class_identities),
        ]
    }

    pub fn has_fail(&self) -> bool {
        self.statuses().iter().any(|(_, s)| s.verdict == Verdict::Fail)
    }

    pub fn has_undecided(&self) -> bool {
        self.statuses().iter().any(|(_, s)| s.verdict == Verdict::Undecided)
    }
}

pub fn verify_axioms(pool: &MorphismPool, ctx: &ModelContext, caps: &VerifyCaps) -> AxiomReport {
    AxiomReport {
        pool_objects: pool.objects.len(),
        pool_morphisms: pool.len(),
        seed: pool.seed,
        two_out_of_three: verify_two_out_of_three(pool, ctx, caps),
        retract: verify_retract(pool, ctx, caps),
        lifting: verify_lifting(pool, ctx, caps),
        factorization: verify_factorization(pool, ctx),
        class_identities: verify_class_identities(pool, ctx),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTrip {
    pub verdict: Verdict,
    /// Universe members `M` with `0 -> M` a cofibration.
    pub cofibrant: Vec<String>,
    /// Universe members `M` with `M -> 0` a trivial fibration.
    pub trivially_fibrant: Vec<String>,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

/// Recovers `(X, Y)` from the classes as the cofibrant and trivially
/// fibrant objects.
pub fn roundtrip_correspondence(ctx: &ModelContext) -> RoundTrip {
    let u = ctx.universe();
    let zero = Module::zero(u.algebra());
    let (mut cofibrant, mut trivially_fibrant) = (Vec::new(), Vec::new());
    let mut undecided = false;
    for (i, m) in u.members().iter().enumerate() {
        let c = ctx.classify(&ModMorphism::zero(&zero, m));
        let t = ctx.classify(&ModMorphism::zero(m, &zero));
        undecided |= !c.cofib.is_decided() || !t.tfib.is_decided();
        if c.cofib.is_yes() {
            cofibrant.push(i);
        }
        if t.tfib.is_yes() {
            trivially_fibrant.push(i);
        }
    }
    let report = ctx.report();
    let sorted = |ix: &[usize]| {
        let mut v = ix.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let verdict = if cofibrant == sorted(&report.x_indices) && trivially_fibrant == sorted(&report.y_indices) {
        Verdict::Pass
    } else if undecided {
        Verdict::Undecided
    } else {
        Verdict::Fail
    };
    let labels = |ix: &[usize]| ix.iter().map(|&i| u.label(i).to_string()).collect::<Vec<_>>();
    RoundTrip {
        verdict,
        cofibrant: labels(&cofibrant),
        trivially_fibrant: labels(&trivially_fibrant),
        x: labels(&sorted(&report.x_indices)),
        y: labels(&sorted(&report.y_indices)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::catalog;
    use crate::cotorsion::Universe;
    use crate::module::{projective_module, SubcatSpec};

    fn kxx2() -> ModelContext {
        let a = catalog::dual_numbers_algebra();
        let u = Universe::enumerate(&a, &[2], &Budget::default()).unwrap();
        let all = u.subcat("ALL", &[0, 1]);
        let proj = u.subcat("P", &[1]);
        ModelContext::new(u, all, proj).unwrap()
    }

    fn ka2() -> ModelContext {
        let a = catalog::a2_algebra();
        let u = Universe::enumerate(&a, &[1, 1], &Budget::default()).unwrap();
        let all = u.subcat("ALL", &[0, 1, 2]);
        let t = SubcatSpec::new("T", vec![projective_module(&a, 1), Module::simple(&a, 1)]);
        ModelContext::new(u, all, t).unwrap()
    }

    fn ex310() -> ModelContext {
        let a = catalog::ex310_algebra();
        let u = Universe::enumerate(&a, &[1, 1, 1], &Budget::default()).unwrap();
        let c = u.subcat("C", &[0, 2, 3, 4]);
        ModelContext::new(u, c.clone(), c).unwrap()
    }

    #[test]
    fn pool_is_deterministic_and_valid() {
        let ctx = kxx2();
        let (p, q) = (MorphismPool::build(&ctx), MorphismPool::build(&ctx));
        assert_eq!(p.len(), q.len());
        assert!(p.morphisms().zip(q.morphisms()).all(|(a, b)| a == b));
        assert!(p.morphisms().all(|f| f.validate().is_ok()));
        assert!(p.len() >= 200, "{}", p.len());
    }

    #[test]
    fn hereditary_fixtures_pass() {
        for ctx in [kxx2(), ka2()] {
            let pool = MorphismPool::build(&ctx);
            let r = verify_axioms(&pool, &ctx, &VerifyCaps::default());
            for (name, s) in r.statuses() {
                assert_eq!(
                    s.verdict,
                    Verdict::Pass,
                    "{name}: {}",
                    serde_json::to_string(&s.certificate.as_ref().map(|c| &c.summary)).unwrap()
                );
            }
            assert_eq!(roundtrip_correspondence(&ctx).verdict, Verdict::Pass);
        }
    }

    #[test]
    fn identities_pass_vacuously() {
        let ctx = ex310();
        let pool = MorphismPool::identities(ctx.universe().members().to_vec(), ctx.universe().labels().to_vec());
        assert_eq!(verify_two_out_of_three(&pool, &ctx, &VerifyCaps::default()).verdict, Verdict::Pass);
    }

    #[test]
    fn two_out_of_three_fails_without_heredity() {
        let ctx = ex310();
        let pool = MorphismPool::build(&ctx);
        let s = verify_two_out_of_three(&pool, &ctx, &VerifyCaps::default());
        assert_eq!(s.verdict, Verdict::Fail);
        let cert = s.certificate.unwrap();
        assert!(cert.reverified);
        let g = &cert.morphisms[1].1;
        assert!(g.target().is_zero());
        assert_eq!(ctx.describe(g.source()), "S2");
        assert_eq!(cert.classifications[1].1.weq, Decision::No);
        assert!(!ctx.in_x(g.source()).unwrap());
    }

    #[test]
    fn retract_and_factorization_hold_without_heredity() {
        let ctx = ex310();
        let pool = MorphismPool::build(&ctx);
        let caps = VerifyCaps { retract_pairs: 2_000, ..VerifyCaps::default() };
        assert_eq!(verify_retract(&pool, &ctx, &caps).verdict, Verdict::Pass);
        assert_eq!(verify_factorization(&pool, &ctx).verdict, Verdict::Pass);
    }

    #[test]
    fn projective_pair_round_trip() {
        let a = catalog::ex310_algebra();
        let u = Universe::enumerate(&a, &[1, 1, 1], &Budget::default()).unwrap();
        let p = u.subcat("P", &[0, 3, 4]);
        let all = u.subcat("ALL", &(0..5).collect::<Vec<_>>());
        let ctx = ModelContext::new(u, p, all).unwrap();
        let r = roundtrip_correspondence(&ctx);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.cofibrant, ["S1", "P2", "P3"]);
        assert_eq!(r.trivially_fibrant.len(), 5);
    }
}
