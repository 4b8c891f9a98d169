//! Re-runs the search for cyclic 12-vertex 4-dimensional candidates under
//! two filter sets.
//!
//! cargo run --release --example census

use std::time::Instant;

use s2s2::bundled;
use s2s2::enumerate::{enumerate, Filter, SearchConfig};

fn label(cycles: &[s2s2::DifferenceCycle]) -> String {
    (1..=6)
        .find(|&i| bundled::cycles(&format!("m{i}")).as_deref() == Some(cycles))
        .map_or("new".to_string(), |i| format!("({i})"))
}

fn main() -> s2s2::Result<()> {
    let runs = [
        ("ridge + edge links", vec![Filter::RidgeDegree2, Filter::EdgeLinkEuler]),
        ("ridge + Dehn-Sommerville", vec![Filter::RidgeDegree2, Filter::DehnSommerville]),
        ("ridge only", vec![Filter::RidgeDegree2]),
    ];
    for (name, filters) in runs {
        let cfg = SearchConfig::new(12, 4, 6).with_diagonal(0, 6).with_filters(filters).with_parallelism(4);
        let t = Instant::now();
        let found = enumerate(&cfg)?;
        let labels: Vec<String> = found.iter().map(|c| label(&c.cycles)).collect();
        println!("{name}: {} candidates {} in {:?}", found.len(), labels.join(" "), t.elapsed());
    }
    Ok(())
}
