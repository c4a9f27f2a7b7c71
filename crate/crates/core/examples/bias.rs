//! Average of normalised Gauss sums over primary primes.

use zomega::expsums::bias::bias_rows;

fn main() -> zomega::Result<()> {
    for row in bias_rows(&[100.0, 1000.0, 10_000.0])? {
        println!("X = {:>6}: {:>5} primes  Σ g̃ = {:.4}  ratio {:.4}", row.x, row.count, row.sum, row.ratio);
    }
    Ok(())
}
