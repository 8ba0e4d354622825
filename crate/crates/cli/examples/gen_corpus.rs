//! Regenerates `data/connected_le8.g6`: every connected graph of order
//! 1 to 8, one per line, in canonical graph6 form.
//!
//! `cargo run --release -p compfactor --example gen_corpus [MAX_ORDER] [OUT]`

use std::io::Write;

use compfactor::corpus::{connected_graphs, CONNECTED_COUNTS};
use compfactor::write_graph6;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_order: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);
    let path = args
        .next()
        .unwrap_or_else(|| "crates/cli/data/connected_le8.g6".into());
    let levels = connected_graphs(max_order);
    let mut out = std::io::BufWriter::new(std::fs::File::create(&path)?);
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        if let Some(&want) = CONNECTED_COUNTS.get(n) {
            anyhow::ensure!(
                level.len() == want,
                "order {n}: generated {} graphs, expected {want}",
                level.len()
            );
        }
        eprintln!("order {n}: {} graphs", level.len());
        for g in level {
            writeln!(out, "{}", write_graph6(g)?)?;
        }
    }
    Ok(())
}
