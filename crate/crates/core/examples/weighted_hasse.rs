//! The raising and lowering operators on `W_3`, as weighted Hasse diagrams.
//!
//! ```bash
//! cargo run --example weighted_hasse
//! cargo run --example weighted_hasse -- 4 > w4.dot
//! ```

use std::collections::BTreeMap;

use weak_sperner::build_weak_order;
use weak_sperner::sl2::{build_d, build_u};

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let order = build_weak_order(n)?;
    let u = build_u(&order);
    let d = build_d(&order);

    let mut labels = BTreeMap::new();
    for (row, col, v) in u.iter() {
        labels.insert((col, row), i64::try_from(v).unwrap());
    }
    println!("// U: w -> w s_i carries weight i");
    print!("{}", order.poset().export_dot(Some(&labels))?);

    let edges: Vec<(usize, usize, i64)> =
        d.iter().map(|(row, col, v)| (col, row, i64::try_from(v).unwrap())).collect();
    println!("// D: w -> w t_ij carries weight 2(w_i - w_j - a) - 1");
    print!("{}", order.poset().export_dot_edges(&edges)?);
    Ok(())
}
