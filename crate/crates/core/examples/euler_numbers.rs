//! Euler (up/down) numbers from the boustrophedon triangle, cross-checked
//! against the number of alternating permutations.
//!
//! ```sh
//! cargo run --example euler_numbers
//! ```

use peakmatch::formulas::{euler_number, euler_numbers_with, Limits};
use peakmatch::oracle::gen_alternating;

fn main() -> peakmatch::Result<()> {
    for (n, e) in euler_numbers_with(12, Limits::default())?
        .into_iter()
        .enumerate()
    {
        let counted = if n <= 10 {
            gen_alternating(n).count().to_string()
        } else {
            "-".into()
        };
        println!("E_{n:<2} = {e:>8}   alternating permutations counted: {counted}");
    }
    println!("E_30 = {}", euler_number(30)?);
    Ok(())
}
