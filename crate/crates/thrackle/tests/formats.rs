use thrackle::format::*;
use thrackle_core::construction::{audit, chessboard};
use thrackle_core::dumbbell::{make_dumbbell, DumbbellSpec};
use thrackle_core::planarity::embed;
use thrackle_core::search::{enumerate_witnesses, SearchOptions};
use thrackle_core::witness::validate_witness;
use thrackle_core::Graph;

fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(&pairs).unwrap()
}

#[test]
fn witnesses_round_trip_bit_exactly() {
    for n in [3, 5, 6] {
        let (ws, _) = enumerate_witnesses(&cycle(n), &SearchOptions::default(), 5);
        for w in ws {
            let text = write_witness(&w);
            let back = parse_witness(&text).unwrap();
            assert_eq!(back, w);
            assert_eq!(write_witness(&back), text);
            assert!(validate_witness(&back).passed());
        }
    }
}

#[test]
fn witness_without_embedding() {
    let (mut ws, _) = enumerate_witnesses(&cycle(5), &SearchOptions::default(), 1);
    let mut w = ws.remove(0);
    w.embedding = None;
    let text = write_witness(&w);
    assert!(!text.contains("rot "));
    assert_eq!(parse_witness(&text).unwrap(), w);
}

#[test]
fn witness_errors_name_the_line() {
    let (ws, _) = enumerate_witnesses(&cycle(5), &SearchOptions::default(), 1);
    let text = write_witness(&ws[0]);
    let broken = text.replacen("pi 1:", "pi 7:", 1);
    let line = text.lines().position(|l| l.starts_with("pi 1:")).unwrap() + 1;
    assert!(matches!(parse_witness(&broken), Err(FormatError::Line { line: l, .. }) if l == line));
    assert!(parse_witness("thrackle-witness v2\n").is_err());
    // A face line that disagrees with the rotation system is rejected.
    let face = text.lines().position(|l| l.starts_with("face ")).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.swap(face, face + 1);
    let swapped = lines.join("\n") + "\n";
    if swapped != text {
        assert!(parse_witness(&swapped).is_err());
    }
}

#[test]
fn embedding_dump_round_trip() {
    let g = make_dumbbell(DumbbellSpec::new(4, 5, -1).unwrap()).unwrap();
    let emb = embed(&g).embedding.unwrap();
    let text = write_embedding(&emb);
    assert!(text.starts_with("rot 0:"));
    let back = parse_embedding(&text, &g).unwrap();
    assert_eq!(back, emb);
    assert_eq!(write_embedding(&back), text);
}

#[test]
fn embedded_graph_round_trip_keeps_the_audit() {
    for (m, l) in [(1, 4), (2, 5)] {
        let g = chessboard(m, l, 40).unwrap();
        let text = write_embedded_graph(&g);
        let back = parse_embedded_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_embedded_graph(&back), text);
        assert!(audit(&back, m, l).passed());
    }
}

#[test]
fn campaign_report_parses() {
    let text = "db 6 6 -3 not-thrackleable 1200 15\ndb 6 6 -2 inconclusive 99 7\n# not certified: 1 of 2 items not excluded\ncertified no tau 617/425\n";
    let r = parse_campaign(text).unwrap();
    assert_eq!(r.lines.len(), 2);
    assert_eq!(r.lines[0].spec, DumbbellSpec::new(6, 6, -3).unwrap());
    assert_eq!(r.lines[1].verdict, "inconclusive");
    assert!(!r.certified);
    assert_eq!(r.tau, parse_ratio("617/425").unwrap());
    assert!(parse_campaign("db 6 6 -3 maybe 1 1\ncertified no tau 1/1\n").is_err());
    assert!(parse_campaign("db 6 6 -3 inconclusive 1 1\n").is_err());
}
