//! Odd length: append 0, and the pair of matchings on `0..=n` closes into a
//! single circle. Pairs with more than one circle are rejected on decode.
//!
//! ```sh
//! cargo run --example odd_bijection
//! ```

use peakmatch::bijections::{append_zero, odd_decode, odd_encode, tau};
use peakmatch::matchings::{count_odd_above, count_odd_below, enumerate_single_cycle_pairs};
use peakmatch::{Label, Matching, MatchingPair, Permutation};

fn main() -> peakmatch::Result<()> {
    let sigma: Permutation = "8 6 7 3 4 1 9 2 5".parse()?;
    let extended = append_zero(&sigma);
    println!("sigma      {sigma}");
    println!("extended   {extended}");
    println!("tau        {}", tau(&extended.reverse())?);

    let pair = odd_encode(&sigma)?;
    println!("above      {}", pair.above());
    println!("below      {}", pair.below());
    println!("circles    {}", pair.union_cycle_count());
    assert_eq!(odd_decode(&pair)?, sigma);

    let closers = pair.closer_set();
    let labels: Vec<Label> = (0..=sigma.len() as Label).collect();
    let pairs = enumerate_single_cycle_pairs(&closers, &labels)?.count();
    println!(
        "single-circle pairs with closers {closers}: {pairs} = {} above x {} below",
        count_odd_above(&closers)?,
        count_odd_below(&closers)?
    );

    let two_circles = Matching::from_arcs(vec![(0, 1), (2, 3)])?;
    let bad = MatchingPair::new(two_circles.clone(), two_circles)?;
    println!(
        "decode of a two-circle pair: {}",
        odd_decode(&bad).unwrap_err()
    );
    Ok(())
}
