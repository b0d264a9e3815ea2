//! Typed objects, the graph of named bijections between them, and routing.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bij;
use crate::error::{AtlasError, Result};
use crate::paths::{self, DyckPath, TwoMotzkinPath};
use crate::perm::Permutation;
use crate::polyomino::{self, ParallelogramPolyomino, SkewDiagram, StaircaseDiagram, StepPolyomino};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Perm,
    Step,
    Parallelogram,
    Skew,
    Staircase,
    Dyck,
    Motzkin2,
}

impl Kind {
    pub const ALL: [Kind; 7] =
        [Kind::Perm, Kind::Step, Kind::Parallelogram, Kind::Skew, Kind::Staircase, Kind::Dyck, Kind::Motzkin2];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Perm => "perm",
            Kind::Step => "step",
            Kind::Parallelogram => "parallelogram",
            Kind::Skew => "skew",
            Kind::Staircase => "staircase",
            Kind::Dyck => "dyck",
            Kind::Motzkin2 => "motzkin2",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| AtlasError::Unknown { what: "object kind", name: s.into() })
    }
}

/// A parsed object of any kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Perm(Permutation),
    Step(StepPolyomino),
    Parallelogram(ParallelogramPolyomino),
    Skew(SkewDiagram),
    Staircase(StaircaseDiagram),
    Dyck(DyckPath),
    Motzkin2(TwoMotzkinPath),
}

impl Object {
    pub fn parse(kind: Kind, payload: &str) -> Result<Object> {
        Ok(match kind {
            Kind::Perm => Object::Perm(payload.parse()?),
            Kind::Step => Object::Step(payload.parse()?),
            Kind::Parallelogram => Object::Parallelogram(payload.parse()?),
            Kind::Skew => Object::Skew(payload.parse()?),
            Kind::Staircase => Object::Staircase(payload.parse()?),
            Kind::Dyck => Object::Dyck(payload.parse()?),
            Kind::Motzkin2 => Object::Motzkin2(payload.parse()?),
        })
    }

    pub fn kind(&self) -> Kind {
        match self {
            Object::Perm(_) => Kind::Perm,
            Object::Step(_) => Kind::Step,
            Object::Parallelogram(_) => Kind::Parallelogram,
            Object::Skew(_) => Kind::Skew,
            Object::Staircase(_) => Kind::Staircase,
            Object::Dyck(_) => Kind::Dyck,
            Object::Motzkin2(_) => Kind::Motzkin2,
        }
    }
}

/// The payload in the kind's text format.
impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Perm(x) => x.fmt(f),
            Object::Step(x) => x.fmt(f),
            Object::Parallelogram(x) => x.fmt(f),
            Object::Skew(x) => x.fmt(f),
            Object::Staircase(x) => x.fmt(f),
            Object::Dyck(x) => x.fmt(f),
            Object::Motzkin2(x) => x.fmt(f),
        }
    }
}

/// A named edge. `hat` and `psi` are traversed forwards only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub name: &'static str,
    pub from: Kind,
    pub to: Kind,
    pub invertible: bool,
}

pub const EDGES: [Edge; 14] = [
    Edge { name: "bjs", from: Kind::Perm, to: Kind::Dyck, invertible: true },
    Edge { name: "dv", from: Kind::Parallelogram, to: Kind::Dyck, invertible: true },
    Edge { name: "fv", from: Kind::Perm, to: Kind::Motzkin2, invertible: true },
    Edge { name: "fvx", from: Kind::Perm, to: Kind::Motzkin2, invertible: true },
    Edge { name: "fz", from: Kind::Perm, to: Kind::Motzkin2, invertible: true },
    Edge { name: "abc", from: Kind::Parallelogram, to: Kind::Motzkin2, invertible: true },
    Edge { name: "ds", from: Kind::Parallelogram, to: Kind::Motzkin2, invertible: true },
    Edge { name: "step", from: Kind::Perm, to: Kind::Step, invertible: true },
    Edge { name: "para", from: Kind::Step, to: Kind::Parallelogram, invertible: true },
    Edge { name: "staircase", from: Kind::Step, to: Kind::Staircase, invertible: true },
    Edge { name: "skew", from: Kind::Parallelogram, to: Kind::Skew, invertible: true },
    Edge { name: "psi", from: Kind::Perm, to: Kind::Perm, invertible: false },
    Edge { name: "hat", from: Kind::Perm, to: Kind::Perm, invertible: false },
    Edge { name: "foata", from: Kind::Perm, to: Kind::Perm, invertible: true },
];

/// One traversal of an edge, forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hop {
    pub edge: Edge,
    pub reverse: bool,
}

impl Hop {
    pub fn source(&self) -> Kind {
        if self.reverse { self.edge.to } else { self.edge.from }
    }

    pub fn target(&self) -> Kind {
        if self.reverse { self.edge.from } else { self.edge.to }
    }

    pub fn label(&self) -> String {
        if self.reverse { format!("{}-inv", self.edge.name) } else { self.edge.name.to_string() }
    }
}

fn edge(name: &str) -> Result<Edge> {
    EDGES
        .iter()
        .copied()
        .find(|e| e.name == name)
        .ok_or_else(|| AtlasError::Unknown { what: "bijection", name: name.into() })
}

fn bad_route(message: String) -> AtlasError {
    AtlasError::invalid("route", message)
}

/// Resolves an explicit comma-separated route starting at `from`.
///
/// A bare edge name runs forwards when its source matches the current kind
/// and backwards when only its target does; `name-inv` forces backwards.
pub fn parse_route(route: &str, from: Kind) -> Result<Vec<Hop>> {
    let mut current = from;
    let mut hops = Vec::new();
    for token in route.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (name, forced) = match token.strip_suffix("-inv") {
            Some(base) => (base, true),
            None => (token, false),
        };
        let e = edge(name)?;
        let reverse = if forced {
            true
        } else if e.from == current {
            false
        } else {
            e.to == current
        };
        let hop = Hop { edge: e, reverse };
        if hop.source() != current {
            return Err(bad_route(format!("edge `{token}` does not start at kind {current}")));
        }
        if reverse && !e.invertible {
            return Err(bad_route(format!("edge `{name}` has no inverse")));
        }
        current = hop.target();
        hops.push(hop);
    }
    if hops.is_empty() {
        return Err(bad_route("empty route".into()));
    }
    Ok(hops)
}

/// The unique shortest route between two distinct kinds.
pub fn default_route(from: Kind, to: Kind) -> Result<Vec<Hop>> {
    if from == to {
        return Err(bad_route(format!("source and target are both {from}; name the bijection with --route")));
    }
    let hops: Vec<Hop> = EDGES
        .iter()
        .filter(|e| e.from != e.to)
        .flat_map(|&e| {
            let fwd = Hop { edge: e, reverse: false };
            let back = e.invertible.then_some(Hop { edge: e, reverse: true });
            std::iter::once(fwd).chain(back)
        })
        .collect();
    // breadth-first search counting shortest paths per kind
    let mut dist: BTreeMap<Kind, usize> = BTreeMap::from([(from, 0)]);
    let mut ways: BTreeMap<Kind, usize> = BTreeMap::from([(from, 1)]);
    let mut pred: BTreeMap<Kind, Hop> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(k) = queue.pop_front() {
        for h in hops.iter().filter(|h| h.source() == k) {
            let t = h.target();
            match dist.get(&t) {
                None => {
                    dist.insert(t, dist[&k] + 1);
                    ways.insert(t, ways[&k]);
                    pred.insert(t, *h);
                    queue.push_back(t);
                }
                Some(&d) if d == dist[&k] + 1 => *ways.get_mut(&t).unwrap() += ways[&k],
                _ => {}
            }
        }
    }
    match ways.get(&to) {
        None => Err(bad_route(format!("no route from {from} to {to}"))),
        Some(&w) if w > 1 => Err(bad_route(format!(
            "{w} shortest routes from {from} to {to}; choose one with --route"
        ))),
        Some(_) => {
            let mut route = Vec::new();
            let mut k = to;
            while k != from {
                let h = pred[&k];
                route.push(h);
                k = h.source();
            }
            route.reverse();
            Ok(route)
        }
    }
}

fn mismatch(hop: &Hop, obj: &Object) -> AtlasError {
    bad_route(format!("edge `{}` expects {}, got {}", hop.label(), hop.source(), obj.kind()))
}

/// Applies one hop.
pub fn apply(hop: &Hop, obj: &Object) -> Result<Object> {
    use Object as O;
    let name = hop.edge.name;
    Ok(match (name, hop.reverse, obj) {
        ("bjs", false, O::Perm(p)) => O::Dyck(paths::bjs(p)?),
        ("bjs", true, O::Dyck(d)) => O::Perm(paths::bjs_inverse(d)?),
        ("dv", false, O::Parallelogram(q)) => O::Dyck(paths::delest_viennot(q)),
        ("dv", true, O::Dyck(d)) => O::Parallelogram(paths::delest_viennot_inverse(d)?),
        ("fv", false, O::Perm(p)) => O::Motzkin2(paths::francon_viennot_restricted(p)?),
        ("fv", true, O::Motzkin2(c)) => O::Perm(paths::francon_viennot_inverse(c)?),
        ("fvx", false, O::Perm(p)) => O::Motzkin2(paths::fv_extended(p)?),
        ("fvx", true, O::Motzkin2(c)) => O::Perm(paths::fv_extended_inverse(c)?),
        ("fz", false, O::Perm(p)) => {
            p.require_bi_increasing()?;
            O::Motzkin2(paths::foata_zeilberger(p))
        }
        ("fz", true, O::Motzkin2(c)) => O::Perm(paths::fz_inverse_bi(c)?),
        ("abc", false, O::Parallelogram(q)) => O::Motzkin2(paths::polyomino_to_2motzkin(q)),
        ("abc", true, O::Motzkin2(c)) => O::Parallelogram(paths::two_motzkin_to_polyomino(c)?),
        ("ds", false, O::Parallelogram(q)) => O::Motzkin2(paths::deutsch_shapiro(q).trimmed),
        ("ds", true, O::Motzkin2(c)) => O::Parallelogram(paths::deutsch_shapiro_inverse(c)?),
        ("step", false, O::Perm(p)) => O::Step(polyomino::perm_to_step(p)?),
        ("step", true, O::Step(s)) => O::Perm(polyomino::step_to_perm(s)?),
        ("para", false, O::Step(s)) => O::Parallelogram(polyomino::step_to_parallelogram(s)),
        ("para", true, O::Parallelogram(q)) => O::Step(polyomino::parallelogram_to_step(q)),
        ("staircase", false, O::Step(s)) => O::Staircase(polyomino::step_to_staircase(s)),
        ("staircase", true, O::Staircase(d)) => O::Step(polyomino::staircase_to_step(d)),
        ("skew", false, O::Parallelogram(q)) => O::Skew(polyomino::polyomino_to_skew(q)),
        ("skew", true, O::Skew(d)) => O::Parallelogram(polyomino::skew_to_polyomino(d)?),
        ("psi", false, O::Perm(p)) => O::Perm(bij::psi(p)?),
        ("hat", false, O::Perm(p)) => O::Perm(bij::hat(p)),
        ("foata", false, O::Perm(p)) => O::Perm(bij::foata_phi(p)),
        ("foata", true, O::Perm(p)) => O::Perm(bij::foata_phi_inverse(p)),
        _ => return Err(mismatch(hop, obj)),
    })
}

/// Result of a conversion together with the hops actually taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conversion {
    pub output: Object,
    pub route: Vec<Hop>,
}

/// Converts `input` to `target`, along `route` when given, else along the
/// unique shortest route.
pub fn convert(input: &Object, target: Kind, route: Option<&str>) -> Result<Conversion> {
    let hops = match route {
        Some(r) => parse_route(r, input.kind())?,
        None => default_route(input.kind(), target)?,
    };
    let end = hops.last().map(Hop::target).unwrap_or(input.kind());
    if end != target {
        return Err(bad_route(format!("route ends at {end}, not {target}")));
    }
    let mut obj = input.clone();
    for h in &hops {
        obj = apply(h, &obj)?;
    }
    Ok(Conversion { output: obj, route: hops })
}

/// Statistics of any object as a JSON record, tagged with its kind and payload.
pub fn describe(obj: &Object) -> Result<Value> {
    let mut body = match obj {
        Object::Perm(p) => {
            let mut v = serde_json::to_value(p.stats()).expect("serializable");
            v["n"] = json!(p.len());
            v["gexc"] = json!(p.greatest_excedance());
            v["bi_increasing"] = json!(p.is_bi_increasing());
            v["restriction_words"] = serde_json::to_value(p.restriction_words()).expect("serializable");
            v
        }
        Object::Step(s) => json!({
            "n": s.n(),
            "width": s.width(),
            "height": s.height(),
            "area": s.area(),
            "column_heights": s.column_heights(),
            "row_overlaps": s.row_overlaps(),
        }),
        Object::Parallelogram(q) => {
            let mut v = serde_json::to_value(q.metrics()).expect("serializable");
            v["is_partition"] = json!(q.is_partition());
            v
        }
        Object::Skew(d) => {
            let mut v = json!({ "cells": d.cells().len(), "connected": d.is_connected() });
            if d.is_connected() {
                v["rank"] = json!(polyomino::rank(d)?);
                v["reduced_code"] = json!(polyomino::reduced_code(d)?.to_string());
            }
            v
        }
        Object::Staircase(d) => json!({ "n": d.n(), "size": d.size(), "corners": d.corners() }),
        Object::Dyck(d) => json!({
            "semilength": d.len() / 2,
            "peaks": d.peaks(),
            "valleys": d.valleys(),
        }),
        Object::Motzkin2(c) => {
            let mut v = serde_json::to_value(paths::path_stats(c)).expect("serializable");
            v["heights"] = json!(c.heights());
            v["star"] = json!(c.is_star());
            v["plain"] = json!(c.is_plain());
            v["partition_form"] = json!(paths::is_partition_path(c));
            v
        }
    };
    body["schema"] = json!(crate::SCHEMA);
    body["kind"] = json!(obj.kind().name());
    body["payload"] = json!(obj.to_string());
    Ok(body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate::bi_increasing;

    const EX: &str = "2 6 1 3 7 4 5 8 10 9";

    fn perm(s: &str) -> Object {
        Object::parse(Kind::Perm, s).unwrap()
    }

    fn run(input: &Object, target: Kind, route: Option<&str>) -> Result<String> {
        convert(input, target, route).map(|c| c.output.to_string())
    }

    #[test]
    fn descriptions() {
        let v = describe(&perm(EX)).unwrap();
        assert_eq!((v["inv"].clone(), v["dexc"].clone(), v["des"].clone(), v["ddes"].clone()), (json!(8), json!(8), json!(3), json!(9)));
        let q = Object::parse(Kind::Parallelogram, "gamma=1,3,0,2,0 delta=0,0,2,3,1").unwrap();
        let v = describe(&q).unwrap();
        assert_eq!((v["width"].clone(), v["height"].clone(), v["area"].clone()), (json!(5), json!(6), json!(14)));
        let s = Object::parse(Kind::Skew, "outer=5,4,4,4,3,3 inner=3,3,1,1,1").unwrap();
        assert_eq!(describe(&s).unwrap()["rank"], json!(2));
        let c = Object::parse(Kind::Motzkin2, "ubssuddsud").unwrap();
        assert_eq!(describe(&c).unwrap()["rank_from_path"], json!(2));
    }

    #[test]
    fn named_routes() {
        assert_eq!(run(&perm(EX), Kind::Dyck, Some("bjs")).unwrap(), "UDUUUUDUDDDUUUDDDDUD");
        assert_eq!(run(&perm("1 2 3 4"), Kind::Motzkin2, Some("fvx")).unwrap(), "ssss");
        assert_eq!(run(&perm(EX), Kind::Perm, Some("psi")).unwrap(), "2 6 1 7 3 4 5 8 10 9");
        assert_eq!(
            run(&perm(EX), Kind::Parallelogram, Some("step,para")).unwrap(),
            "gamma=1,3,0,2,0 delta=0,0,2,3,1"
        );
        let dyck = Object::parse(Kind::Dyck, "UDUUUUDUDDDUUUDDDDUD").unwrap();
        assert_eq!(run(&dyck, Kind::Perm, Some("bjs")).unwrap(), EX);
        assert_eq!(run(&dyck, Kind::Perm, Some("bjs-inv")).unwrap(), EX);
    }

    #[test]
    fn default_routes() {
        assert_eq!(run(&perm(EX), Kind::Dyck, None).unwrap(), "UDUUUUDUDDDUUUDDDDUD");
        assert_eq!(run(&perm(EX), Kind::Step, None).unwrap(), "alpha=1,4,1,3,1 beta=1,1,3,4,1");
        let labels: Vec<String> =
            default_route(Kind::Perm, Kind::Staircase).unwrap().iter().map(Hop::label).collect();
        assert_eq!(labels, ["step", "staircase"]);
        for (a, b) in [(Kind::Perm, Kind::Motzkin2), (Kind::Perm, Kind::Parallelogram), (Kind::Perm, Kind::Perm)] {
            assert!(matches!(default_route(a, b), Err(AtlasError::Invalid { .. })), "{a} -> {b}");
        }
    }

    #[test]
    fn route_errors() {
        assert!(matches!(run(&perm("3 2 1"), Kind::Motzkin2, Some("fv")), Err(AtlasError::NotBiIncreasing(_))));
        assert!(matches!(run(&perm("2 3 1"), Kind::Motzkin2, Some("fv")), Err(AtlasError::Domain(_))));
        assert!(matches!(run(&perm(EX), Kind::Dyck, Some("nope")), Err(AtlasError::Unknown { .. })));
        assert!(run(&perm(EX), Kind::Dyck, Some("dv")).is_err());
        assert!(run(&perm(EX), Kind::Perm, Some("hat-inv")).is_err());
        assert!(run(&perm(EX), Kind::Step, Some("bjs")).is_err());
        assert!("blob".parse::<Kind>().is_err());
    }

    #[test]
    fn every_invertible_edge_round_trips_on_b7() {
        let routes: [(&str, Kind); 9] = [
            ("bjs", Kind::Dyck),
            ("fvx", Kind::Motzkin2),
            ("fz", Kind::Motzkin2),
            ("step", Kind::Step),
            ("step,para", Kind::Parallelogram),
            ("step,staircase", Kind::Staircase),
            ("step,para,skew", Kind::Skew),
            ("step,para,abc", Kind::Motzkin2),
            ("step,para,ds", Kind::Motzkin2),
        ];
        for n in 1..=7 {
            for q in bi_increasing(n) {
                let start = Object::Perm(q.clone());
                for (route, target) in routes {
                    let there = convert(&start, target, Some(route)).unwrap().output;
                    let payload = there.to_string();
                    let reparsed = Object::parse(target, &payload).unwrap();
                    let back_route: Vec<String> = route.split(',').rev().map(|e| format!("{e}-inv")).collect();
                    let back = convert(&reparsed, Kind::Perm, Some(&back_route.join(","))).unwrap();
                    assert_eq!(back.output.to_string(), q.to_string(), "{route} on {q}");
                }
                let d = convert(&start, Kind::Dyck, Some("step,para,dv")).unwrap().output;
                assert_eq!(d, convert(&start, Kind::Dyck, Some("bjs")).unwrap().output);
                let f = convert(&start, Kind::Perm, Some("foata,foata-inv")).unwrap().output;
                assert_eq!(f, start);
                if q.exc_equals_des() {
                    let c = convert(&start, Kind::Motzkin2, Some("fv")).unwrap().output;
                    assert_eq!(convert(&c, Kind::Perm, Some("fv")).unwrap().output, start);
                }
            }
        }
    }
}
