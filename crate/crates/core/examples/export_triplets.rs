//! Write `U`, `D` and `H` for `W_n` as sparse triplet files and read them
//! back.
//!
//! ```bash
//! cargo run --example export_triplets -- 4 /tmp/w4
//! ```

use std::path::PathBuf;

use weak_sperner::build_weak_order;
use weak_sperner::sl2::Sl2Triple;
use weak_sperner::IntMatrix;

fn main() -> weak_sperner::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "triplets".into()));
    std::fs::create_dir_all(&dir)?;
    let order = build_weak_order(n)?;
    let t = Sl2Triple::new(&order);
    for (name, m) in [("U", &t.u), ("D", &t.d), ("H", &t.h)] {
        let path = dir.join(format!("{name}_{n}.txt"));
        std::fs::write(&path, m.to_triplet_text(&t.basis_tag()))?;
        let (back, basis) = IntMatrix::from_triplet_text(&std::fs::read_to_string(&path)?)?;
        assert_eq!(&back, m);
        println!("{} ({} nonzeros, {basis})", path.display(), m.nnz());
    }
    Ok(())
}
