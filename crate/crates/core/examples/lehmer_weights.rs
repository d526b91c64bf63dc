//! The lowering weight `c` read two ways: from the window of values between
//! `w_j` and `w_i`, and as a Manhattan distance between Lehmer codes.
//!
//! ```bash
//! cargo run --example lehmer_weights -- 4
//! ```

use weak_sperner::sl2::{weight_c, weight_c_lehmer};
use weak_sperner::Permutation;

fn main() -> weak_sperner::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    println!("{:<10} {:<8} {:<10} {:<12} {:>3} {:>3}", "w", "t_ij", "w t_ij", "Lehmer(w)", "c", "L1");
    for w in Permutation::all(n)? {
        for ((i, j), v) in w.strong_covers_down() {
            println!(
                "{:<10} {:<8} {:<10} {:<12} {:>3} {:>3}",
                w.to_string(),
                format!("({i},{j})"),
                v.to_string(),
                format!("{:?}", w.lehmer_code()),
                weight_c(&w, i, j)?,
                weight_c_lehmer(&w, i, j)?
            );
        }
    }
    Ok(())
}
