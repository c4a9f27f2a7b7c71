//! The cubic large sieve ratio over a small (M, N) grid.

use zomega::largesieve::run_cell;

fn main() -> zomega::Result<()> {
    println!("{:>5} {:>5} {:>10} {:>12}", "M", "N", "max ratio", "C-S excess");
    for m in [8.0, 32.0, 128.0] {
        for n in [8.0, 32.0, 128.0] {
            let cell = run_cell(m, n, 0..10)?;
            let r = cell.max_ratio.map(|r| format!("{:.4}", r)).unwrap_or_else(|| "-".into());
            println!("{:>5} {:>5} {:>10} {:>12.2e}", m, n, r, cell.cauchy_schwarz_excess);
        }
    }
    Ok(())
}
