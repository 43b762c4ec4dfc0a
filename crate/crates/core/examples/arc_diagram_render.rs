//! ASCII and Graphviz renderings of an arc diagram.
//!
//! ```sh
//! cargo run --example arc_diagram_render
//! cargo run --example arc_diagram_render -- --dot | dot -Tsvg > arcs.svg
//! ```

use peakmatch::render::{ascii_arc_diagram, dot_arc_diagram, trace};
use peakmatch::Permutation;

fn main() -> peakmatch::Result<()> {
    let dot = std::env::args().any(|a| a == "--dot");
    let sigma: Permutation = "5 3 8 1 4 2 7 6".parse()?;
    let t = trace(&sigma)?;
    if dot {
        print!("{}", dot_arc_diagram(&t.pair));
    } else {
        print!("{}\n{}", t.to_text(), ascii_arc_diagram(&t.pair));
    }
    Ok(())
}
