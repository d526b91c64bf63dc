//! Split the free vector space on `W_n` into irreducible sl2 summands using
//! only the rank sizes.
//!
//! ```bash
//! cargo run --example weight_space_decomposition -- 5
//! ```

use weak_sperner::build_weak_order;
use weak_sperner::sl2::decompose;

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let order = build_weak_order(n)?;
    let profile = order.poset().rank_profile();
    println!("rank sizes {:?}", profile.sizes);
    let dec = decompose(&profile)?;
    for (weight, mult) in dec.multiplicities.iter().rev() {
        println!("V({weight:>2}) x {mult:>4}   dimension {}", weight + 1);
    }
    println!("total dimension {} = {}!", dec.dimension(), n);
    Ok(())
}
