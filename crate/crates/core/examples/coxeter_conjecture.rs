//! Weak orders of other finite Coxeter groups: enumerate each group exactly,
//! build its weak order and certify it.
//!
//! ```bash
//! cargo run --release --example coxeter_conjecture            # default list
//! cargo run --release --example coxeter_conjecture -- F4 H4   # chosen types
//! ```

use std::time::Instant;

use weak_sperner::coxeter::{enumerate_group, CoxeterSpec};
use weak_sperner::sperner::certify;

fn main() -> weak_sperner::Result<()> {
    let mut types: Vec<String> = std::env::args().skip(1).collect();
    if types.is_empty() {
        types = (2..=12).map(|m| format!("I2:{m}")).collect();
        types.extend(["A3", "B3", "H3", "A4", "B4", "D4", "F4"].map(String::from));
    }
    for t in types {
        let spec: CoxeterSpec = t.parse()?;
        let start = Instant::now();
        let group = enumerate_group(&spec, 20_000)?;
        let poset = group.weak_order()?;
        let cert = certify(&poset);
        println!(
            "{:<6} |W| = {:>5} (expected {:>5})  top rank {:>2}  strongly Sperner: {:<5}  Peck: {:<5}  {:.2?}",
            spec.label(),
            group.len(),
            spec.order(),
            poset.top_rank(),
            cert.strongly_sperner,
            cert.peck,
            start.elapsed()
        );
    }
    Ok(())
}
