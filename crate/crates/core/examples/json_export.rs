//! Every public data type serializes to plain JSON and reads back unchanged.
//!
//! ```sh
//! cargo run --example json_export
//! ```

use peakmatch::bijections::even_encode;
use peakmatch::formulas::peak_set_count;
use peakmatch::oracle::peak_set_census;
use peakmatch::render::trace;
use peakmatch::{Census, MatchingPair, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sigma: Permutation = "5 3 8 1 4 2 7 6".parse()?;
    let pair = even_encode(&sigma)?;

    let text = serde_json::to_string(&sigma)?;
    println!("permutation  {text}");
    assert_eq!(serde_json::from_str::<Permutation>(&text)?, sigma);

    let text = serde_json::to_string(&pair)?;
    println!("pair         {text}");
    assert_eq!(serde_json::from_str::<MatchingPair>(&text)?, pair);

    let report = peak_set_count(&sigma.peak_values()?, sigma.len())?;
    println!("count        {}", serde_json::to_string(&report)?);

    let census = peak_set_census(6);
    let text = serde_json::to_string(&census)?;
    println!("census       {text}");
    assert_eq!(serde_json::from_str::<Census>(&text)?, census);

    println!("trace        {}", serde_json::to_string(&trace(&sigma)?)?);
    Ok(())
}
