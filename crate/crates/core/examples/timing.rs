//! Times Betti table computation over all connected graphs on `n` vertices.
//!
//! `cargo run --release -p binedge --example timing -- 7 [exact]`

use binedge::betti::{hochster_fine, koszul_betti_fine};
use binedge::enumerate::enumerate_connected;
use binedge::graphs::emit_graph6;
use binedge::ideal::stanley_reisner_complex;
use std::time::{Duration, Instant};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let exact = args.next().is_some_and(|a| a == "exact");

    let t = Instant::now();
    let gs = enumerate_connected(n).expect("n within range");
    println!("enumerate {n}: {} graphs in {:?}", gs.len(), t.elapsed());

    let t = Instant::now();
    let mut worst = (Duration::ZERO, String::new());
    let mut unmixed = 0;
    for g in &gs {
        let s = Instant::now();
        let delta = stanley_reisner_complex(g);
        if delta.is_pure() {
            unmixed += 1;
        }
        let fine = hochster_fine(&delta, 32003).unwrap();
        if exact {
            let wanted: Vec<(usize, usize)> = fine.coarse().entries().map(|(i, j, _)| (i, j)).collect();
            koszul_betti_fine(g, 32003, &fine, &wanted).unwrap();
        }
        let e = s.elapsed();
        if e > worst.0 {
            worst = (e, emit_graph6(g));
        }
    }
    println!("tables: {:?} total, worst {:?} {}, unmixed {unmixed}", t.elapsed(), worst.0, worst.1);
}
