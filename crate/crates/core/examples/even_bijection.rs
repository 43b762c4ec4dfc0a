//! Even length: an alternating permutation becomes a pair of matchings whose
//! closer set is its peak set, and back.
//!
//! ```sh
//! cargo run --example even_bijection -- 5 3 8 1 4 2 7 6
//! ```

use peakmatch::bijections::{even_decode, even_encode, tau};
use peakmatch::Permutation;

fn main() -> peakmatch::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let sigma: Permutation = if args.is_empty() {
        "5 3 8 1 4 2 7 6".parse()?
    } else {
        args.join(" ").parse()?
    };

    let up_down = sigma.reverse();
    println!("sigma      {sigma}");
    println!("peaks      {}", sigma.peak_values()?);
    println!("reversed   {up_down}");
    println!("tau        {}", tau(&up_down)?);

    let pair = even_encode(&sigma)?;
    println!("above      {}", pair.above());
    println!("below      {}", pair.below());
    println!("closers    {}", pair.closer_set());

    let back = even_decode(&pair)?;
    assert_eq!(back, sigma);
    println!("decoded    {back}");
    Ok(())
}
