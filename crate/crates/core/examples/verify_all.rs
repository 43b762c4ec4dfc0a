//! Runs every self-check on small sizes and prints one line per check.
//!
//! ```sh
//! cargo run --release --example verify_all
//! ```

use peakmatch::oracle::{
    verify_bijections, verify_cycle_updown, verify_lemma, verify_odd_factorization, verify_theorem,
};
use std::process::ExitCode;

fn main() -> peakmatch::Result<ExitCode> {
    let mut ok = true;
    let mut show = |name: String, passed: bool| {
        println!("{name:<18} {}", if passed { "ok" } else { "FAILED" });
        ok &= passed;
    };
    for n in 1..=10 {
        show(format!("peak sets n={n}"), verify_theorem(n)?.passed());
    }
    for k in 1..=5 {
        show(format!("closers k={k}"), verify_lemma(k)?.passed());
        show(format!("cycles k={k}"), verify_cycle_updown(k)?.passed());
    }
    for n in 1..=9 {
        show(format!("bijections n={n}"), verify_bijections(n)?.passed());
    }
    for n in (1..=9).step_by(2) {
        show(
            format!("odd pairs n={n}"),
            verify_odd_factorization(n)?.passed(),
        );
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
