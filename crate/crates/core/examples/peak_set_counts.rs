//! Closed-form counts for every feasible peak set of `[n]`, next to a
//! brute-force census.
//!
//! ```sh
//! cargo run --example peak_set_counts -- 9
//! ```

use peakmatch::formulas::{candidate_peak_sets, peak_set_count};
use peakmatch::oracle::peak_set_census;

fn main() -> peakmatch::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(Ok(8), |a| a.parse())
        .map_err(|e| peakmatch::Error::Parse(format!("n: {e}")))?;
    let census = peak_set_census(n);
    let mut total = 0;
    for peaks in candidate_peak_sets(n) {
        let report = peak_set_count(&peaks, n)?;
        if report.formula_count == 0 {
            continue;
        }
        total += report.formula_count;
        println!(
            "{:<20} formula {:>8}   census {:>8}",
            peaks.to_string(),
            report.formula_count,
            census.get(&peaks)
        );
    }
    println!("total {total} (census {})", census.total());
    Ok(())
}
