use super::recognize::{
    km_regularity_le2, recognize_bipartite_level, recognize_bipartite_pg, recognize_gij, recognize_hi, RegBound,
};
use super::{classify_decomposable, classify_with, ClassificationRecord, ClassifyOptions};
use crate::error::Result;
use crate::graphs::{decompose, Graph, VertexSet};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum CheckStatus {
    Ok,
    Violation(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Theorems whose hypotheses the graph meets, with the outcome of comparing
/// the engine verdict against the combinatorial one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub record: ClassificationRecord,
    pub checks: Vec<Check>,
}

impl ConsistencyReport {
    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status != CheckStatus::Ok)
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.status {
                CheckStatus::Ok => writeln!(f, "{}: ok", c.name)?,
                CheckStatus::Violation(d) => writeln!(f, "{}: VIOLATION ({d})", c.name)?,
            }
        }
        Ok(())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let status = if ok { CheckStatus::Ok } else { CheckStatus::Violation(detail()) };
        self.0.push(Check { name, status });
    }
}

/// Runs the classification and every applicable characterization against it.
/// Incomplete records (engine timeout) only get the purely combinatorial checks.
pub fn consistency_check(g: &Graph, p: u32) -> Result<ConsistencyReport> {
    let opts = ClassifyOptions { field_char: p, product_rule: false, ..ClassifyOptions::default() };
    let rec = classify_with(g, &opts)?;
    let mut out = Checks(Vec::new());

    if let Ok(cds) = g.min_connected_dominating_sets() {
        let cuts = g.cut_vertices();
        out.push("cut-vertices-in-cds", cds.iter().all(|s| cuts.is_subset(*s)), || {
            format!("cut vertices {:?} not in every minimum connected dominating set", cuts.to_vec())
        });
    }

    if !rec.complete {
        return Ok(ConsistencyReport { record: rec, checks: out.0 });
    }
    let cm = rec.is_cm();
    let reg = rec.reg.unwrap_or(0);
    let level = rec.is_level();
    let pg = rec.is_pseudo_gorenstein();

    out.push("gorenstein", rec.gorenstein == (level && pg), || {
        format!("path = {}, level = {level}, pG = {pg}", rec.gorenstein)
    });

    let km = km_regularity_le2(g);
    out.push(
        "km-regularity",
        match km {
            RegBound::Exactly(r) => r == reg,
            RegBound::AboveTwo => reg > 2,
        },
        || format!("combinatorial {km}, computed {reg}"),
    );

    let hi = recognize_hi(g);
    if hi.is_some() || (cm && reg == 2) {
        out.push("cm-reg2", hi.is_some() == (cm && reg == 2), || format!("H_i match {hi:?}, CM {cm}, reg {reg}"));
    }
    if cm && reg == 2 {
        out.push("level-reg2", level, || "CM of regularity 2 but not level".into());
    }

    // P_4 is pseudo-Gorenstein of regularity 3 without being some G_i^j.
    let gij = recognize_gij(g);
    if gij.is_some() || (cm && reg == 3) {
        out.push("pg-reg3", (gij.is_some() || g.is_path()) == (cm && reg == 3 && pg), || {
            format!("G_i^j match {gij:?}, CM {cm}, reg {reg}, pG {pg}")
        });
    }

    if g.is_pk_free(5) {
        out.push("p5free-cm-accessible", cm == rec.accessible, || format!("CM {cm}, accessible {}", rec.accessible));
    }

    if g.is_bipartite() {
        let bl = recognize_bipartite_level(g);
        out.push("bipartite-level", bl == level, || format!("recognizer {bl}, engine {level}"));
        let bp = recognize_bipartite_pg(g);
        out.push("bipartite-pg", bp == pg, || format!("recognizer {bp}, engine {pg}"));
    }

    cone_checks(g, p, &rec, &mut out)?;

    if !decompose(g).is_indecomposable() {
        let prod = classify_decomposable(g, p)?;
        if prod.complete {
            let same = (prod.cm, prod.pd, prod.reg, prod.extremal_betti, prod.level, prod.pseudo_gorenstein)
                == (rec.cm, rec.pd, rec.reg, rec.extremal_betti, rec.level, rec.pseudo_gorenstein);
            out.push("product-rule", same, || {
                format!(
                    "pieces give CM {:?} pd {:?} reg {:?} corner {:?}, direct CM {:?} pd {:?} reg {:?} corner {:?}",
                    prod.cm, prod.pd, prod.reg, prod.extremal_betti, rec.cm, rec.pd, rec.reg, rec.extremal_betti
                )
            });
        }
    }

    Ok(ConsistencyReport { record: rec, checks: out.0 })
}

/// `G = cone(v, H_1 ⊔ H_2)` with both `H_i` CM: `G` is CM, level exactly
/// when `reg = 2`, and for `reg > 2` pseudo-Gorenstein exactly when both
/// `H_i` are.
fn cone_checks(g: &Graph, p: u32, rec: &ClassificationRecord, out: &mut Checks) -> Result<()> {
    let opts = ClassifyOptions { field_char: p, ..ClassifyOptions::default() };
    for v in g.universal_vertices().iter() {
        let comps = g.components(VertexSet::singleton(v));
        if comps.len() != 2 {
            continue;
        }
        let mut pieces = Vec::new();
        for c in &comps {
            pieces.push(classify_with(&g.induced(*c).0, &opts)?);
        }
        if !pieces.iter().all(|r| r.complete && r.is_cm()) {
            continue;
        }
        let reg = rec.reg.unwrap_or(0);
        out.push("cone-cm", rec.is_cm(), || "cone over two CM graphs is not CM".into());
        out.push("cone-level", rec.is_level() == (reg == 2), || format!("level {}, reg {reg}", rec.is_level()));
        if reg > 2 {
            let both = pieces.iter().all(ClassificationRecord::is_pseudo_gorenstein);
            out.push("cone-pg", rec.is_pseudo_gorenstein() == both, || {
                format!("pG {}, pieces pG {both}", rec.is_pseudo_gorenstein())
            });
        }
        break;
    }
    Ok(())
}
