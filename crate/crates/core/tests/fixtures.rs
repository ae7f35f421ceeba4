use std::fs;
use std::path::Path;

use listcolor::dimacs::{parse_dimacs, render_dimacs};
use listcolor::elc::find_clique;
use listcolor::generate::gen_lists;
use listcolor::instance::{attach_lists, parse_instance, parse_list_file, serialize_instance};
use listcolor::{Graph, Instance};

fn load(name: &str) -> Graph {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/dimacs")
        .join(name);
    parse_dimacs(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn queen8_8_shape() {
    let g = load("queen8_8.col");
    assert_eq!((g.n(), g.m()), (64, 728));
    assert!((g.mean_degree() - 22.75).abs() < 1e-9);
    // every row of the board is a clique
    for r in 0..8 {
        for a in 0..8 {
            for b in a + 1..8 {
                assert!(g.is_edge(r * 8 + a, r * 8 + b));
            }
        }
    }
    // the greedy clique need not reach a full row; it only has to be a clique
    let k = find_clique(&g);
    assert!(k.len() >= 2);
    eprintln!("greedy clique on queen8_8 has {} vertices: {k:?}", k.len());
    for (i, &u) in k.iter().enumerate() {
        for &v in &k[i + 1..] {
            assert!(g.is_edge(u, v));
        }
    }
}

#[test]
fn fixtures_survive_render_round_trip() {
    for name in [
        "triangle.col",
        "queen8_8.col",
        "queen9_9.col",
        "queen8_12.col",
    ] {
        let g = load(name);
        assert_eq!(parse_dimacs(&render_dimacs(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn queen_lists_round_trip_keeps_palette() {
    let g = load("queen8_8.col");
    let inst = Instance::new(g.clone(), gen_lists(64, 0.3, 4, 17).unwrap()).unwrap();

    let separate = serialize_instance(&inst, false);
    let back = attach_lists(g, parse_list_file(&separate).unwrap()).unwrap();
    assert_eq!(back.palette(), inst.palette());
    assert_eq!(back, inst);

    let inline = parse_instance(&serialize_instance(&inst, true)).unwrap();
    assert_eq!(inline.palette(), inst.palette());
    assert_eq!(inline, inst);
}

#[test]
fn crlf_fixture_text_parses_identically() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/dimacs/queen9_9.col");
    let text = fs::read_to_string(path).unwrap();
    let crlf = text.replace('\n', "\r\n") + "\r\n\r\n";
    assert_eq!(parse_dimacs(&crlf).unwrap(), parse_dimacs(&text).unwrap());
}
