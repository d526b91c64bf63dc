//! Check `[H,U] = 2U`, `[H,D] = -2D` and `[U,D] = H` exactly on `W_n`.
//!
//! ```bash
//! cargo run --release --example sl2_relations -- 6
//! ```

use std::time::Instant;

use weak_sperner::build_weak_order;
use weak_sperner::sl2::{verify_sl2, Sl2Triple};

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let start = Instant::now();
    let order = build_weak_order(n)?;
    let triple = Sl2Triple::new(&order);
    println!(
        "W_{n}: dimension {}, nnz U = {}, nnz D = {}",
        order.len(),
        triple.u.nnz(),
        triple.d.nnz()
    );
    let report = verify_sl2(&triple)?;
    for rel in &report.relations {
        match &rel.first_offending {
            None => println!("{:<12} holds (max residual {})", rel.relation, rel.max_abs_residual),
            Some((r, c)) => println!(
                "{:<12} FAILS (max residual {}, first at row {r}, column {c})",
                rel.relation, rel.max_abs_residual
            ),
        }
    }
    println!("{:.2?}", start.elapsed());
    Ok(())
}
