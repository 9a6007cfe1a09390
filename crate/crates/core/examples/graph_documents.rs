//! JSON graph documents and the command layer, driven in-process.
//!
//! cargo run --example graph_documents

use labelled_space::cli::{parse_input, run, GraphDocument};
use labelled_space::graph::fixtures::g2;

fn main() {
    let doc = GraphDocument::from_graph(&g2());
    let text = serde_json::to_string_pretty(&doc).expect("serialisable");
    println!("{text}");
    let (g, family) = parse_input(&text).expect("round trip");
    println!("parsed {} vertices, declared family: {}", g.vertex_count(), family.is_some());

    let path = std::env::temp_dir().join("lspace-example-g2.json");
    std::fs::write(&path, &text).expect("temp file");
    let p = path.to_str().expect("utf-8 path");
    for args in [vec!["lspace", "tight", p], vec!["lspace", "family", p], vec!["lspace", "algebra-check", p]] {
        let out = run(args.iter().copied());
        println!("$ {} (exit {})\n{}", args[1..].join(" "), out.code, out.stdout);
    }
    let broken = run(["lspace", "tight", "/nonexistent.json"]);
    println!("missing file: exit {} {}", broken.code, broken.stderr.trim());
}
