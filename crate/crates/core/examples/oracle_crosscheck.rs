//! Compare the flow computation of the largest union of `k` antichains with
//! exhaustive search on small posets.
//!
//! ```bash
//! cargo run --release --example oracle_crosscheck
//! ```

use weak_sperner::coxeter::{build_weak_order_coxeter, GROUP_CAP};
use weak_sperner::sperner::{max_k_antichain_flow, max_k_antichain_oracle, ORACLE_CAP};
use weak_sperner::{build_weak_order, RankedPoset};

fn main() -> weak_sperner::Result<()> {
    let mut posets: Vec<RankedPoset> = vec![
        build_weak_order(3)?.poset().clone(),
        build_weak_order(4)?.poset().clone(),
        RankedPoset::chain(6)?,
        RankedPoset::antichain(5)?,
    ];
    for m in [4, 5, 6] {
        posets.push(build_weak_order_coxeter(&format!("I2:{m}").parse()?, GROUP_CAP)?);
    }
    for p in &posets {
        let mut row = Vec::new();
        for k in 1..=p.height() {
            let flow = max_k_antichain_flow(p, k)?;
            let (oracle, _) = max_k_antichain_oracle(p, k, ORACLE_CAP)?;
            row.push(if flow == oracle { format!("{flow}") } else { format!("{flow}!={oracle}") });
        }
        println!("{:<10} {:>3} elements  a_k: {}", p.name(), p.len(), row.join(" "));
    }
    Ok(())
}
