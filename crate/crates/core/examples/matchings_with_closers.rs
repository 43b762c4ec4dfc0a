//! Perfect matchings of `[2k]` with a prescribed closer set: the product
//! formula, the enumeration, and one picture per matching.
//!
//! ```sh
//! cargo run --example matchings_with_closers
//! ```

use peakmatch::matchings::{count_matchings_with_closers, enumerate_matchings_with_closers};
use peakmatch::render::ascii_matching;
use peakmatch::{Label, PeakSet};

fn main() -> peakmatch::Result<()> {
    let closers: PeakSet = "3,5,6".parse()?;
    let k = closers.len();
    let labels: Vec<Label> = (1..=2 * k as Label).collect();

    let formula = count_matchings_with_closers(&closers, k)?;
    let matchings: Vec<_> = enumerate_matchings_with_closers(&closers, &labels)?.collect();
    println!(
        "closers {closers}: formula {formula}, enumerated {}\n",
        matchings.len()
    );
    for m in &matchings {
        println!("{m}\n{}", ascii_matching(m));
    }

    let infeasible: PeakSet = "2,3,6".parse()?;
    println!(
        "closers {infeasible}: formula {}",
        count_matchings_with_closers(&infeasible, k)?
    );
    Ok(())
}
