//! Certify the strong Sperner and Peck properties of `W_n` by min-cost flow.
//!
//! ```bash
//! cargo run --release --example sperner_certificate -- 5
//! ```

use std::time::Instant;

use weak_sperner::build_weak_order;
use weak_sperner::sperner::certify;

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let order = build_weak_order(n)?;
    let start = Instant::now();
    let cert = certify(order.poset());
    println!("W_{n}: {} elements, rank sizes {:?}", cert.n_elements, cert.profile.sizes);
    println!("{:>3} {:>8} {:>10}  k-Sperner", "k", "a_k", "rank sum");
    for rec in &cert.per_k {
        println!(
            "{:>3} {:>8} {:>10}  {}",
            rec.k,
            rec.a_k.map_or("-".into(), |a| a.to_string()),
            rec.rank_sum,
            rec.equal.unwrap_or(false)
        );
    }
    println!(
        "strongly Sperner: {}, Peck: {} ({:.2?})",
        cert.strongly_sperner,
        cert.peck,
        start.elapsed()
    );
    Ok(())
}
