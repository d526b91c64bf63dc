//! `U^(r-2k)` maps rank `k` bijectively onto rank `r-k`: exact determinants
//! for small `n`, modular certificates beyond.
//!
//! ```bash
//! cargo run --release --example raising_invertibility -- 6
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weak_sperner::build_weak_order;
use weak_sperner::exactlinalg::{determinant_exact, nonsingular_certificate, NonsingularityWitness};
use weak_sperner::sl2::{raising_power_block, Sl2Triple};

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let order = build_weak_order(n)?;
    let t = Sl2Triple::new(&order);
    let r = order.top_rank();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for k in 0..r.div_ceil(2) {
        let block = raising_power_block(&t, k)?;
        let dim = block.rows();
        if n <= 5 {
            let det = determinant_exact(&block)?;
            println!("k={k:<2} U^{:<2} {dim:>4} x {dim:<4} det = {det}", r - 2 * k);
        } else {
            let cert = nonsingular_certificate(&block, &mut rng)?;
            let how = match cert.witness {
                NonsingularityWitness::Modular { prime, rank } => format!("rank {rank} mod {prime}"),
                NonsingularityWitness::Exact { determinant } => format!("det = {determinant}"),
            };
            println!("k={k:<2} U^{:<2} {dim:>4} x {dim:<4} {:?} ({how})", r - 2 * k, cert.verdict);
        }
    }
    Ok(())
}
