//! Render the 2-dimensional rail embedding as a deterministic SVG scatter
//! plot; running this twice produces byte-identical output.

use cmdscale::io::parse_matrix_csv;
use cmdscale::pipeline;
use cmdscale::svg;

fn main() {
    let csv = include_str!("../fixtures/rail_yorkshire.csv");
    let (d, labels) = parse_matrix_csv(csv).unwrap();
    let labels = labels.unwrap();
    let embedding = pipeline::embed(&d, 2).unwrap();

    let path = std::env::temp_dir().join("rail_stations.svg");
    svg::emit_svg(&embedding, &labels, &path).unwrap();
    println!("wrote {}", path.display());

    let markup = std::fs::read_to_string(&path).unwrap();
    println!("{} bytes, {} labeled markers", markup.len(), labels.len());
}
