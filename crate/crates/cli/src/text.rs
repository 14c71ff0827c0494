//! Plain-text renderings of command outcomes.

use std::fmt::Write;

use omega_core::cotorsion::CotorsionReport;
use omega_core::decision::Decision;
use omega_core::homotopy::HomotopyTable;
use omega_core::model::{
    Classification, ExactnessReport, ExactnessWitness, Factorization, FactorizationCheck, ModelContext,
};
use omega_core::verifier::{AxiomReport, RoundTrip, Verdict};
use omega_core::{ModMorphism, Module};

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn dec(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Undecided => "undecided",
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Undecided => "UNDECIDED",
        Verdict::Skipped => "SKIPPED",
    }
}

pub fn cotorsion(r: &CotorsionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "universe: {} ({} members)", r.universe.members.join(", "), r.universe.members.len());
    let _ = writeln!(s, "X = add({})  Y = add({})", r.x.join(", "), r.y.join(", "));
    let _ = writeln!(
        s,
        "orthogonal {}  (X = ⊥Y {}, Y = X⊥ {})",
        mark(r.orthogonality.left && r.orthogonality.right),
        mark(r.orthogonality.left),
        mark(r.orthogonality.right)
    );
    for c in &r.orthogonality.counterexamples {
        let _ = writeln!(s, "  {:?} side: {} (partner {:?}, ext dim {})", c.side, c.module, c.partner, c.ext_dim);
    }
    let _ = writeln!(s, "complete: {}", dec(r.completeness.verdict));
    for o in &r.completeness.objects {
        for w in [&o.right, &o.left].into_iter().flatten() {
            let _ = writeln!(s, "  {}: {}", o.module, w.summary);
        }
        if let Some(n) = &o.note {
            let _ = writeln!(s, "  {}: {n}", o.module);
        }
    }
    let _ = writeln!(s, "hereditary {}", mark(r.hereditary.holds));
    if let Some(c) = &r.hereditary.counterexample {
        let _ = writeln!(s, "  Ext^{}({}, {}) has dimension {}", c.degree, c.x, c.y, c.dim);
    }
    for v in &r.closure.violations {
        let _ = writeln!(s, "  {:?}: {}", v.kind, v.summary);
    }
    let _ = writeln!(s, "core: add({})", r.core.join(", "));
    let _ = writeln!(s, "core contravariantly finite {}", mark(r.core_contravariantly_finite.holds));
    let _ = writeln!(s, "Ext^1(X, Y) = 0 on generators {}", mark(r.ext1_vanishes_on_generators));
    s
}

pub fn classification(name: &str, f: &ModMorphism, c: &Classification, ctx: &ModelContext) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{name}: {} -> {}", ctx.describe(f.source()), ctx.describe(f.target()));
    for (label, d) in [
        ("inflation", c.inflation),
        ("deflation", c.deflation),
        ("CoFib", c.cofib),
        ("Fib", c.fib),
        ("Weq", c.weq),
        ("TCoFib", c.tcofib),
        ("TFib", c.tfib),
    ] {
        let _ = writeln!(s, "  {label:<10} {}", dec(d));
    }
    if let Some(k) = &c.kernel {
        let _ = writeln!(s, "  kernel     {k}");
    }
    if let Some(k) = &c.cokernel {
        let _ = writeln!(s, "  cokernel   {k}");
    }
    if let Some(w) = &c.weq_witness {
        let _ = writeln!(s, "  Weq witness: W = {}, kernel of (f, t) = {}", w.w, w.kernel);
    }
    if let Some(cert) = &c.weq_certificate {
        let _ = writeln!(s, "  Weq: {cert}");
    }
    s
}

pub fn factorization(fac: &Factorization, check: &FactorizationCheck, ctx: &ModelContext) -> String {
    format!(
        "{:?}: {} -> {} -> {}  composite {}  left {}  right {}  verdict {}",
        fac.kind,
        ctx.describe(fac.left.source()),
        fac.middle,
        ctx.describe(fac.right.target()),
        mark(check.composite_ok),
        dec(check.left),
        dec(check.right),
        dec(check.verdict())
    )
}

pub fn axioms(r: &AxiomReport, round: &RoundTrip) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pool: {} objects, {} morphisms, seed {}", r.pool_objects, r.pool_morphisms, r.seed);
    for (name, st) in r.statuses() {
        let _ = writeln!(
            s,
            "{name:<18} {:<9} checked {} undecided {} skipped {}{}",
            verdict(st.verdict),
            st.checked,
            st.undecided,
            st.skipped,
            if st.truncated { " (truncated)" } else { "" }
        );
        if let Some(c) = &st.certificate {
            let _ = writeln!(s, "  counterexample: {}", c.summary);
            let _ = writeln!(s, "  re-verified from scratch: {}", mark(c.reverified));
        }
        if let Some(n) = &st.note {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    let _ = writeln!(
        s,
        "{:<18} {:<9} cofibrant {{{}}} trivially fibrant {{{}}}",
        "roundtrip",
        verdict(round.verdict),
        round.cofibrant.join(", "),
        round.trivially_fibrant.join(", ")
    );
    s
}

pub fn homotopy(t: &HomotopyTable) -> String {
    let mut s = String::new();
    let width = t.objects.iter().map(|o| o.chars().count()).max().unwrap_or(1).max(4);
    let _ = write!(s, "{:width$}", "");
    for o in &t.objects {
        let _ = write!(s, " {o:>width$}");
    }
    s.push('\n');
    for (i, o) in t.objects.iter().enumerate() {
        let _ = write!(s, "{o:width$}");
        for d in &t.quotient_dims[i] {
            let _ = write!(s, " {d:>width$}");
        }
        let _ = writeln!(s, "{}", if t.zero_objects[i] { "  (zero)" } else { "" });
    }
    let _ = writeln!(s, "nonzero objects: {}", t.nonzero_count);
    s
}

pub fn ext_table(labels: &[String], ext1: &[Vec<usize>], ext2: &[Vec<usize>]) -> String {
    let mut s = String::new();
    for (deg, table) in [(1, ext1), (2, ext2)] {
        let _ = writeln!(s, "Ext^{deg}(row, column)");
        let _ = write!(s, "{:6}", "");
        for l in labels {
            let _ = write!(s, " {l:>5}");
        }
        s.push('\n');
        for (l, row) in labels.iter().zip(table) {
            let _ = write!(s, "{l:6}");
            for d in row {
                let _ = write!(s, " {d:>5}");
            }
            s.push('\n');
        }
    }
    s
}

pub fn indecomposables(labels: &[String], mods: &[Module]) -> String {
    let mut s = format!("{} indecomposables\n", mods.len());
    for (l, m) in labels.iter().zip(mods) {
        let _ = writeln!(s, "  {l}: dims {:?}", m.dims());
    }
    s
}

pub fn exactness(r: &ExactnessReport, ctx: &ModelContext) -> String {
    let mut s = format!(
        "exact {}  (core projective {}, core covers {})\n",
        mark(r.exact),
        mark(r.core_projective),
        mark(r.core_covers)
    );
    match &r.witness {
        Some(ExactnessWitness::FibNotDeflation { module, morphism, fib, deflation }) => {
            let _ = writeln!(
                s,
                "  witness: core approximation {} -> {module} is Fib {} but deflation {}",
                ctx.describe(morphism.source()),
                dec(*fib),
                dec(*deflation)
            );
        }
        Some(ExactnessWitness::NonProjectiveCore { generator, partner, ext_dim }) => {
            let _ = writeln!(s, "  witness: Ext^1({generator}, {partner}) has dimension {ext_dim}");
        }
        None => {}
    }
    s
}
