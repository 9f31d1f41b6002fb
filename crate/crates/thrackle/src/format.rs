//! Line-based text formats: graphs, embedding dumps, witnesses, embedded
//! graphs and campaign reports. Every writer is the exact inverse of its
//! parser on the writer's own output.

use std::fmt::Write as _;

use thrackle_core::bounds::ratio;
use thrackle_core::construction::EmbeddedGraph;
use thrackle_core::dumbbell::{CampaignReport, DumbbellSpec};
use thrackle_core::embedding::PlanarEmbedding;
use thrackle_core::gadget::build_gadget_graph;
use thrackle_core::schedule::CrossingSchedule;
use thrackle_core::search::Outcome;
use thrackle_core::witness::ThrackleWitness;
use thrackle_core::{EdgeId, Graph, VertexId};

use num_bigint::BigInt;
use num_rational::BigRational;

pub const WITNESS_HEADER: &str = "thrackle-witness v1";

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Content(String),
}

fn at(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

type Lines<'a> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>;

fn line_iter(text: &str) -> Lines<'_> {
    let b: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(lines(text));
    b.peekable()
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| at(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| at(line, format!("bad {what} '{tok}'")))
}

fn no_more(line: usize, mut toks: std::str::SplitWhitespace<'_>) -> Result<(), FormatError> {
    match toks.next() {
        Some(t) => Err(at(line, format!("unexpected token '{t}'"))),
        None => Ok(()),
    }
}

/// `<tag> <id>: <ids>`; returns `(id, ids)`.
fn parse_list(line: usize, text: &str, tag: &str) -> Result<(usize, Vec<usize>), FormatError> {
    let rest = text
        .strip_prefix(tag)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| at(line, format!("expected '{tag} <id>: ...'")))?;
    let (head, tail) = rest.split_once(':').ok_or_else(|| at(line, "missing ':'"))?;
    let id = parse_num(line, Some(head.trim()), "id")?;
    let ids = tail
        .split_whitespace()
        .map(|t| parse_num(line, Some(t), "id"))
        .collect::<Result<_, _>>()?;
    Ok((id, ids))
}

fn join(ids: &[usize]) -> String {
    let mut s = String::new();
    for id in ids {
        let _ = write!(s, " {id}");
    }
    s
}

fn read_graph(it: &mut Lines<'_>) -> Result<Graph, FormatError> {
    let (line, head) = it.next().ok_or_else(|| FormatError::Content("missing 'graph <n> <m>' line".into()))?;
    let mut toks = head.split_whitespace();
    if toks.next() != Some("graph") {
        return Err(at(line, "expected 'graph <n> <m>'"));
    }
    let n: usize = parse_num(line, toks.next(), "vertex count")?;
    let m: usize = parse_num(line, toks.next(), "edge count")?;
    no_more(line, toks)?;
    let mut g = Graph::new(n);
    for i in 0..m {
        let (line, text) = it
            .next()
            .ok_or_else(|| FormatError::Content(format!("expected {m} edge lines, found {i}")))?;
        let mut toks = text.split_whitespace();
        if toks.next() != Some("e") {
            return Err(at(line, "expected 'e <u> <v>'"));
        }
        let u: VertexId = parse_num(line, toks.next(), "vertex")?;
        let v: VertexId = parse_num(line, toks.next(), "vertex")?;
        no_more(line, toks)?;
        if u >= n || v >= n {
            return Err(at(line, format!("vertex out of range 0..{n}")));
        }
        g.add_edge(u, v).map_err(|e| at(line, e.to_string()))?;
    }
    Ok(g)
}

/// Parses the `graph <n> <m>` / `e <u> <v>` format.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut it = line_iter(text);
    let g = read_graph(&mut it)?;
    if let Some((line, _)) = it.next() {
        return Err(at(line, "trailing content after the edge list"));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {}", e.tail, e.head);
    }
    s
}

/// `rot <v>: ...` per vertex, then `face <len>: ...` per face.
pub fn write_embedding(emb: &PlanarEmbedding) -> String {
    let mut s = String::new();
    for (v, rot) in emb.rotations().iter().enumerate() {
        let _ = writeln!(s, "rot {v}:{}", join(rot));
    }
    for f in 0..emb.face_count() {
        let es = emb.face_edges(f);
        let _ = writeln!(s, "face {}:{}", es.len(), join(&es));
    }
    s
}

/// Reads the rotation and face lines for a graph with the given edge ends.
/// Face lines must agree with the faces traced from the rotation.
fn read_embedding(it: &mut Lines<'_>, ends: Vec<(VertexId, VertexId)>, n: usize) -> Result<Option<PlanarEmbedding>, FormatError> {
    let mut rotation = Vec::new();
    let mut first = None;
    while let Some(&(line, text)) = it.peek() {
        if !text.starts_with("rot ") {
            break;
        }
        it.next();
        first.get_or_insert(line);
        let (v, ids) = parse_list(line, text, "rot")?;
        if v != rotation.len() {
            return Err(at(line, format!("expected rotation of vertex {}", rotation.len())));
        }
        rotation.push(ids);
    }
    let Some(first) = first else { return Ok(None) };
    if rotation.len() != n {
        return Err(at(first, format!("expected {n} rotation lines, found {}", rotation.len())));
    }
    let emb = PlanarEmbedding::from_rotation(ends, rotation).map_err(|e| at(first, format!("invalid rotation: {e:?}")))?;
    let mut f = 0;
    while let Some(&(line, text)) = it.peek() {
        if !text.starts_with("face ") {
            break;
        }
        it.next();
        let (len, ids) = parse_list(line, text, "face")?;
        if f >= emb.face_count() || len != ids.len() || ids != emb.face_edges(f) {
            return Err(at(line, "face does not match the rotation system"));
        }
        f += 1;
    }
    if f != emb.face_count() {
        return Err(FormatError::Content(format!(
            "expected {} face lines, found {f}",
            emb.face_count()
        )));
    }
    Ok(Some(emb))
}

/// Embedding dump for a given graph.
pub fn parse_embedding(text: &str, g: &Graph) -> Result<PlanarEmbedding, FormatError> {
    let mut it = line_iter(text);
    let ends = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    let emb = read_embedding(&mut it, ends, g.vertex_count())?.ok_or_else(|| FormatError::Content("no rotation lines".into()))?;
    if let Some((line, _)) = it.next() {
        return Err(at(line, "trailing content after the embedding"));
    }
    Ok(emb)
}

/// Header, graph, one `pi` line per edge, then the gadget graph's
/// embedding dump when present.
pub fn write_witness(w: &ThrackleWitness) -> String {
    let mut s = format!("{WITNESS_HEADER}\n");
    s.push_str(&write_graph(&w.graph));
    for (e, pi) in w.schedule.lists().iter().enumerate() {
        let _ = writeln!(s, "pi {e}:{}", join(pi));
    }
    if let Some(emb) = &w.embedding {
        s.push_str(&write_embedding(emb));
    }
    s
}

pub fn parse_witness(text: &str) -> Result<ThrackleWitness, FormatError> {
    let mut it = line_iter(text);
    match it.next() {
        Some((_, h)) if h == WITNESS_HEADER => {}
        Some((line, _)) => return Err(at(line, format!("expected '{WITNESS_HEADER}'"))),
        None => return Err(FormatError::Content("empty witness file".into())),
    }
    let g = read_graph(&mut it)?;
    let mut lists: Vec<Vec<EdgeId>> = Vec::with_capacity(g.edge_count());
    for i in 0..g.edge_count() {
        let (line, text) = it
            .next()
            .ok_or_else(|| FormatError::Content(format!("expected {} pi lines, found {i}", g.edge_count())))?;
        let (e, ids) = parse_list(line, text, "pi")?;
        if e != i {
            return Err(at(line, format!("expected pi line for edge {i}")));
        }
        if let Some(&bad) = ids.iter().find(|&&x| x >= g.edge_count()) {
            return Err(at(line, format!("unknown edge id {bad}")));
        }
        lists.push(ids);
    }
    let schedule = CrossingSchedule::from_lists(lists);
    let embedding = match it.peek() {
        None => None,
        Some(&(line, _)) => {
            let gadget = build_gadget_graph(&g, &schedule).map_err(|e| at(line, format!("schedule: {e}")))?;
            let ends = gadget.graph.edges().iter().map(|e| (e.tail, e.head)).collect();
            read_embedding(&mut it, ends, gadget.graph.vertex_count())?
        }
    };
    if let Some((line, _)) = it.next() {
        return Err(at(line, "unexpected content"));
    }
    Ok(ThrackleWitness::new(g, schedule, embedding))
}

/// Graph, embedding dump and an `outer <face index>` line.
pub fn write_embedded_graph(g: &EmbeddedGraph) -> String {
    let mut s = write_graph(&g.graph);
    s.push_str(&write_embedding(&g.embedding));
    let _ = writeln!(s, "outer {}", g.outer_face);
    s
}

pub fn parse_embedded_graph(text: &str) -> Result<EmbeddedGraph, FormatError> {
    let mut it = line_iter(text);
    let g = read_graph(&mut it)?;
    let ends = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    let emb = read_embedding(&mut it, ends, g.vertex_count())?.ok_or_else(|| FormatError::Content("missing rotation lines".into()))?;
    let (line, text) = it.next().ok_or_else(|| FormatError::Content("missing 'outer <face>' line".into()))?;
    let mut toks = text.split_whitespace();
    if toks.next() != Some("outer") {
        return Err(at(line, "expected 'outer <face>'"));
    }
    let outer: usize = parse_num(line, toks.next(), "face index")?;
    no_more(line, toks)?;
    if outer >= emb.face_count() {
        return Err(at(line, format!("face index out of range 0..{}", emb.face_count())));
    }
    if let Some((line, _)) = it.next() {
        return Err(at(line, "unexpected content"));
    }
    let mut eg = EmbeddedGraph::new(g, emb).map_err(|e| FormatError::Content(e.to_string()))?;
    eg.outer_face = outer;
    Ok(eg)
}

/// Verdict word used in campaign reports.
pub fn verdict_word(o: &Outcome) -> &'static str {
    match o {
        Outcome::Thrackleable(_) => "thrackleable",
        Outcome::NotThrackleable { .. } => "not-thrackleable",
        Outcome::Inconclusive { .. } => "inconclusive",
    }
}

/// One parsed report line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub spec: DumbbellSpec,
    pub verdict: String,
    pub nodes: u64,
    pub millis: u128,
}

/// Parsed campaign report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportSummary {
    pub lines: Vec<ReportLine>,
    pub certified: bool,
    pub tau: BigRational,
}

/// `db <c1> <c2> <l> <verdict> <nodes> <millis>` per item and the trailer
/// `certified <yes|no> tau <p>/<q>`. An uncertified report also carries a
/// `# not certified` comment naming the undecided items.
pub fn write_campaign(report: &CampaignReport, millis: &[u128], tau: &BigRational) -> String {
    let mut s = String::new();
    for (it, ms) in report.items.iter().zip(millis) {
        let nodes = it.decision.stats.nodes;
        let _ = writeln!(
            s,
            "db {} {} {} {} {nodes} {ms}",
            it.spec.c1,
            it.spec.c2,
            it.spec.l,
            verdict_word(&it.decision.outcome)
        );
    }
    if !report.certified {
        let open = report.items.iter().filter(|it| !it.decision.is_not_thrackleable()).count();
        let _ = writeln!(s, "# not certified: {open} of {} items not excluded", report.items.len());
    }
    let yes = if report.certified { "yes" } else { "no" };
    let _ = writeln!(s, "certified {yes} tau {}", ratio(tau));
    s
}

pub fn parse_campaign(text: &str) -> Result<ReportSummary, FormatError> {
    let mut out = Vec::new();
    for (line, text) in lines(text) {
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("db") => {
                let c1 = parse_num(line, toks.next(), "c1")?;
                let c2 = parse_num(line, toks.next(), "c2")?;
                let l = parse_num(line, toks.next(), "l")?;
                let spec = DumbbellSpec::new(c1, c2, l).map_err(|e| at(line, e.to_string()))?;
                let verdict = toks.next().ok_or_else(|| at(line, "missing verdict"))?;
                if !matches!(verdict, "thrackleable" | "not-thrackleable" | "inconclusive") {
                    return Err(at(line, format!("bad verdict '{verdict}'")));
                }
                let nodes = parse_num(line, toks.next(), "node count")?;
                let millis = parse_num(line, toks.next(), "milliseconds")?;
                no_more(line, toks)?;
                out.push(ReportLine {
                    spec,
                    verdict: verdict.to_string(),
                    nodes,
                    millis,
                });
            }
            Some("certified") => {
                let certified = match toks.next() {
                    Some("yes") => true,
                    Some("no") => false,
                    _ => return Err(at(line, "expected 'certified <yes|no>'")),
                };
                if toks.next() != Some("tau") {
                    return Err(at(line, "expected 'tau <p>/<q>'"));
                }
                let tau = parse_ratio(toks.next().unwrap_or("")).ok_or_else(|| at(line, "bad rational"))?;
                no_more(line, toks)?;
                return Ok(ReportSummary {
                    lines: out,
                    certified,
                    tau,
                });
            }
            _ => return Err(at(line, "expected a 'db' or 'certified' line")),
        }
    }
    Err(FormatError::Content("missing 'certified' trailer".into()))
}

/// `p/q` or an integer.
pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().ok()?;
    let q: BigInt = q.trim().parse().ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(p, q))
}
