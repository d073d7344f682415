//! Per-graph classification and the combinatorial recognizers it is
//! cross-checked against.

mod consistency;
mod recognize;

pub use consistency::{consistency_check, Check, CheckStatus, ConsistencyReport};
pub use recognize::{
    is_accessible, km_regularity_le2, recognize_bipartite_level, recognize_bipartite_pg, recognize_gij, recognize_hi,
    RegBound,
};

use crate::betti::{
    derived_invariants, hochster_fine, table_is_level, table_is_pseudo_gorenstein, BettiTable, KoszulEngine,
};
use crate::error::{Error, Result};
use crate::graphs::{canonical_word, decompose, Graph};
use crate::ideal::stanley_reisner_complex;
use crate::linalg::DEFAULT_PRIME;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Invariants of `S/in(J_G)`, which share pd, reg and extremal Betti
    /// numbers with `S/J_G`; the last column is computed exactly only when
    /// levelness is not already forced.
    #[default]
    Monomial,
    /// The full exact table of `S/J_G`.
    Exact,
    /// Combined from the pieces of a decomposition.
    Product,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub engine: Engine,
    pub field_char: u32,
    /// Use the decomposition product rule for decomposable graphs (ignored
    /// by the exact engine).
    pub product_rule: bool,
    pub time_limit: Option<Duration>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { engine: Engine::Monomial, field_char: DEFAULT_PRIME, product_rule: true, time_limit: None }
    }
}

/// Verdicts for one graph. Algebraic fields are `None` when the computation
/// ran out of time, in which case `complete` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub canonical_word: String,
    pub n: usize,
    pub indecomposable: bool,
    pub unmixed: bool,
    pub accessible: bool,
    #[serde(rename = "CM")]
    pub cm: Option<bool>,
    pub dim: usize,
    pub pd: Option<usize>,
    pub reg: Option<usize>,
    /// `β_{pd, pd + reg}`; the unique extremal Betti number when CM.
    pub extremal_betti: Option<u64>,
    pub level: Option<bool>,
    pub pseudo_gorenstein: Option<bool>,
    pub gorenstein: bool,
    pub is_cone: bool,
    pub engine: Engine,
    pub field_char: u32,
    pub complete: bool,
}

impl ClassificationRecord {
    pub fn is_cm(&self) -> bool {
        self.cm == Some(true)
    }

    pub fn is_level(&self) -> bool {
        self.level == Some(true)
    }

    pub fn is_pseudo_gorenstein(&self) -> bool {
        self.pseudo_gorenstein == Some(true)
    }

    /// Header of [`ClassificationRecord::csv_row`].
    pub const CSV_HEADER: &'static str =
        "canonical_word,n,indecomposable,unmixed,accessible,CM,dim,pd,reg,extremal_betti,level,pseudo_gorenstein,gorenstein,is_cone,engine,field_char,complete";

    pub fn csv_row(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or(String::new(), |x| x.to_string())
        }
        let engine =
            serde_json::to_value(self.engine).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        [
            self.canonical_word.clone(),
            self.n.to_string(),
            self.indecomposable.to_string(),
            self.unmixed.to_string(),
            self.accessible.to_string(),
            opt(&self.cm),
            self.dim.to_string(),
            opt(&self.pd),
            opt(&self.reg),
            opt(&self.extremal_betti),
            opt(&self.level),
            opt(&self.pseudo_gorenstein),
            self.gorenstein.to_string(),
            self.is_cone.to_string(),
            engine,
            self.field_char.to_string(),
            self.complete.to_string(),
        ]
        .join(",")
    }
}

struct Algebraic {
    cm: bool,
    pd: usize,
    reg: usize,
    corner: u64,
    level: bool,
    pg: bool,
}

fn structural(g: &Graph, opts: &ClassifyOptions) -> ClassificationRecord {
    let delta = stanley_reisner_complex(g);
    ClassificationRecord {
        canonical_word: canonical_word(g),
        n: g.n(),
        indecomposable: decompose(g).is_indecomposable(),
        unmixed: delta.is_pure(),
        accessible: is_accessible(g),
        cm: None,
        dim: delta.max_facet_size(),
        pd: None,
        reg: None,
        extremal_betti: None,
        level: None,
        pseudo_gorenstein: None,
        gorenstein: g.is_path(),
        is_cone: g.is_cone(),
        engine: opts.engine,
        field_char: opts.field_char,
        complete: false,
    }
}

fn fill(rec: &mut ClassificationRecord, a: Algebraic) {
    rec.cm = Some(a.cm);
    rec.pd = Some(a.pd);
    rec.reg = Some(a.reg);
    rec.extremal_betti = Some(a.corner);
    rec.level = Some(a.cm && a.level);
    rec.pseudo_gorenstein = Some(a.cm && a.pg);
    rec.complete = true;
}

/// Classifies a connected graph. A timeout yields a record with
/// `complete == false` rather than an error.
pub fn classify(g: &Graph, p: u32) -> Result<ClassificationRecord> {
    classify_with(g, &ClassifyOptions { field_char: p, ..ClassifyOptions::default() })
}

pub fn classify_with(g: &Graph, opts: &ClassifyOptions) -> Result<ClassificationRecord> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let deadline = opts.time_limit.map(|d| Instant::now() + d);
    let mut rec = structural(g, opts);
    let result = if opts.engine != Engine::Exact && opts.product_rule && !rec.indecomposable {
        rec.engine = Engine::Product;
        product_algebraic(g, opts)
    } else if opts.engine == Engine::Exact {
        rec.engine = Engine::Exact;
        exact_algebraic(g, opts, deadline)
    } else {
        rec.engine = Engine::Monomial;
        monomial_algebraic(g, opts, deadline)
    };
    match result {
        Ok(a) => fill(&mut rec, a),
        Err(Error::Timeout) => {}
        Err(e) => return Err(e),
    }
    Ok(rec)
}

fn monomial_algebraic(g: &Graph, opts: &ClassifyOptions, deadline: Option<Instant>) -> Result<Algebraic> {
    let delta = stanley_reisner_complex(g);
    let fine = hochster_fine(&delta, opts.field_char)?;
    let mono = fine.coarse();
    let inv = derived_invariants(&mono, &delta);
    let corner = mono.corner();
    let mut level = false;
    if inv.is_cm {
        level = table_is_level(&mono);
        if !level {
            // The exact last column can only lose entries below the corner.
            let pd = inv.pd;
            let window: Vec<(usize, usize)> = mono.column(pd).iter().map(|&(j, _)| (pd, j)).collect();
            let mut engine = KoszulEngine::new(g, opts.field_char)?.with_deadline(deadline);
            let exact = crate::betti::koszul_with(&mut engine, &fine, &window)?;
            level = table_is_level(&exact);
        }
    }
    Ok(Algebraic { cm: inv.is_cm, pd: inv.pd, reg: inv.reg, corner, level, pg: corner == 1 })
}

fn exact_algebraic(g: &Graph, opts: &ClassifyOptions, deadline: Option<Instant>) -> Result<Algebraic> {
    let table = exact_table(g, opts.field_char, deadline)?;
    let delta = stanley_reisner_complex(g);
    let inv = derived_invariants(&table, &delta);
    Ok(Algebraic {
        cm: inv.is_cm,
        pd: inv.pd,
        reg: inv.reg,
        corner: table.corner(),
        level: table_is_level(&table),
        pg: table_is_pseudo_gorenstein(&table),
    })
}

/// Full exact table with an optional deadline.
pub fn exact_table(g: &Graph, p: u32, deadline: Option<Instant>) -> Result<BettiTable> {
    let delta = stanley_reisner_complex(g);
    let fine = hochster_fine(&delta, p)?;
    let window: Vec<(usize, usize)> = fine.coarse().entries().map(|(i, j, _)| (i, j)).collect();
    let mut engine = KoszulEngine::new(g, p)?.with_deadline(deadline);
    crate::betti::koszul_with(&mut engine, &fine, &window)
}

fn product_algebraic(g: &Graph, opts: &ClassifyOptions) -> Result<Algebraic> {
    let rec = classify_decomposable(g, opts.field_char)?;
    if !rec.complete {
        return Err(Error::Timeout);
    }
    Ok(Algebraic {
        cm: rec.is_cm(),
        pd: rec.pd.unwrap_or(0),
        reg: rec.reg.unwrap_or(0),
        corner: rec.extremal_betti.unwrap_or(0),
        level: rec.is_level(),
        pg: rec.is_pseudo_gorenstein(),
    })
}

/// Combines the records of the indecomposable pieces: the Betti polynomial
/// of a decomposable graph is the product of those of its pieces, so pd and
/// reg add, corners multiply, and CM / level / pseudo-Gorenstein hold
/// exactly when they hold for every piece.
pub fn classify_decomposable(g: &Graph, p: u32) -> Result<ClassificationRecord> {
    let d = decompose(g);
    if d.is_indecomposable() {
        return Err(Error::InvalidParameter("graph is indecomposable".into()));
    }
    let opts = ClassifyOptions { field_char: p, ..ClassifyOptions::default() };
    let mut rec = structural(g, &opts);
    rec.engine = Engine::Product;
    let mut a = Algebraic { cm: true, pd: 0, reg: 0, corner: 1, level: true, pg: true };
    for piece in &d.pieces {
        let r = classify_with(&piece.graph, &opts)?;
        if !r.complete {
            return Ok(rec);
        }
        a.cm &= r.is_cm();
        a.pd += r.pd.unwrap_or(0);
        a.reg += r.reg.unwrap_or(0);
        a.corner *= r.extremal_betti.unwrap_or(0);
        a.level &= r.is_level();
        a.pg &= r.is_pseudo_gorenstein();
    }
    fill(&mut rec, a);
    Ok(rec)
}
