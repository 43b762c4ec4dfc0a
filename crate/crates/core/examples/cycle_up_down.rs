//! Cycle up-down permutations with all cycles even are counted by the Euler
//! numbers, and `tau` maps up-down words onto them.
//!
//! ```sh
//! cargo run --example cycle_up_down
//! ```

use peakmatch::bijections::tau_inverse;
use peakmatch::formulas::euler_number;
use peakmatch::oracle::{gen_cycle_updown_even, verify_cycle_updown};

fn main() -> peakmatch::Result<()> {
    for cp in gen_cycle_updown_even(2) {
        println!("{cp:<12} <- {}", tau_inverse(&cp)?);
    }
    println!();
    for k in 1..=5 {
        let report = verify_cycle_updown(k)?;
        println!(
            "k={k}: {} generated, E_{} = {}, tau bijective: {}",
            report.generated,
            2 * k,
            euler_number(2 * k)?,
            report.passed()
        );
    }
    Ok(())
}
