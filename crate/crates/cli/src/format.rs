//! Instance files: JSON with 1-based vertex indices and `"p/q"` coordinates.

use obstacle_core::arrangement::Arrangement;
use obstacle_core::geometry::{Point, Polygon};
use obstacle_core::graph::Graph;
use obstacle_core::representation::{Embedding, Obstacle};
use obstacle_core::scalar::{format_rational, parse_rational};
use obstacle_core::Rational;
use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub points: Option<Embedding<Rational>>,
    pub obstacles: Vec<Obstacle<Rational>>,
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| schema(format!("{ctx}: missing \"{key}\"")))
}

fn index(v: &Value, n: usize, ctx: &str) -> Result<usize, CliError> {
    match v.as_u64() {
        Some(i) if i >= 1 && (i as usize) <= n => Ok(i as usize - 1),
        _ => Err(schema(format!("{ctx}: vertex {v} is not in 1..={n}"))),
    }
}

pub fn parse_coord(v: &Value, ctx: &str) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| schema(format!("{ctx}: \"{s}\" is not a rational")))
        }
        Value::Number(x) if x.is_i64() => Ok(Rational::from_integer(x.as_i64().unwrap_or(0).into())),
        _ => Err(schema(format!(
            "{ctx}: coordinates are \"p/q\" strings or integers, got {v}"
        ))),
    }
}

pub fn parse_point(v: &Value, ctx: &str) -> Result<Point<Rational>, CliError> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Point::new(parse_coord(x, ctx)?, parse_coord(y, ctx)?)),
        _ => Err(schema(format!("{ctx}: a point is a pair [x, y], got {v}"))),
    }
}

fn parse_obstacle(v: &Value, i: usize) -> Result<Obstacle<Rational>, CliError> {
    let ctx = format!("obstacle {}", i + 1);
    let obj = v
        .as_object()
        .ok_or_else(|| schema(format!("{ctx}: expected an object")))?;
    let kind = field(obj, "type", &ctx)?.as_str().unwrap_or_default();
    let face_id = |v: &Value| {
        v.as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| schema(format!("{ctx}: face ids are non-negative integers")))
    };
    match kind {
        "point" => Ok(Obstacle::Point(parse_point(field(obj, "at", &ctx)?, &ctx)?)),
        "polygon" => {
            let verts = field(obj, "vertices", &ctx)?
                .as_array()
                .ok_or_else(|| schema(format!("{ctx}: \"vertices\" must be a list")))?
                .iter()
                .map(|p| parse_point(p, &ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let poly = Polygon::new(verts).map_err(|e| schema(format!("{ctx}: {e}")))?;
            Ok(Obstacle::Polygon(poly))
        }
        "face" => Ok(Obstacle::Face(face_id(field(obj, "id", &ctx)?)?)),
        "face_cluster" => {
            let ids = field(obj, "ids", &ctx)?
                .as_array()
                .ok_or_else(|| schema(format!("{ctx}: \"ids\" must be a list")))?
                .iter()
                .map(face_id)
                .collect::<Result<Vec<_>, _>>()?;
            if ids.is_empty() {
                return Err(schema(format!("{ctx}: empty face cluster")));
            }
            Ok(Obstacle::FaceCluster(ids))
        }
        other => Err(schema(format!("{ctx}: unknown obstacle type \"{other}\""))),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| schema("instance must be a JSON object"))?;
    for key in obj.keys() {
        if !["n", "edges", "points", "obstacles"].contains(&key.as_str()) {
            return Err(schema(format!("unknown field \"{key}\"")));
        }
    }
    let n = field(obj, "n", "instance")?
        .as_u64()
        .ok_or_else(|| schema("\"n\" must be a non-negative integer"))? as usize;
    let mut edges = Vec::new();
    for (k, e) in field(obj, "edges", "instance")?
        .as_array()
        .ok_or_else(|| schema("\"edges\" must be a list"))?
        .iter()
        .enumerate()
    {
        let ctx = format!("edge {}", k + 1);
        match e.as_array().map(Vec::as_slice) {
            Some([a, b]) => {
                let (u, w) = (index(a, n, &ctx)?, index(b, n, &ctx)?);
                if u == w {
                    return Err(schema(format!("{ctx}: self-loop at vertex {}", u + 1)));
                }
                edges.push((u, w));
            }
            _ => return Err(schema(format!("{ctx}: an edge is a pair [i, j]"))),
        }
    }
    let graph = Graph::new(n, edges).map_err(|e| schema(e.to_string()))?;
    let points = match obj.get("points") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let list = v.as_array().ok_or_else(|| schema("\"points\" must be a list"))?;
            if list.len() != n {
                return Err(schema(format!("{} points for {n} vertices", list.len())));
            }
            let pts = list
                .iter()
                .enumerate()
                .map(|(i, p)| parse_point(p, &format!("point {}", i + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Embedding::new(pts).map_err(|e| schema(e.to_string()))?)
        }
    };
    let obstacles = match obj.get("obstacles") {
        None | Some(Value::Null) => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| schema("\"obstacles\" must be a list"))?
            .iter()
            .enumerate()
            .map(|(i, o)| parse_obstacle(o, i))
            .collect::<Result<Vec<_>, _>>()?,
    };
    Ok(Instance {
        graph,
        points,
        obstacles,
    })
}

pub fn coord_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn point_json(p: &Point<Rational>) -> Value {
    json!([coord_json(&p.x), coord_json(&p.y)])
}

pub fn points_json(points: &[Point<Rational>]) -> Value {
    Value::Array(points.iter().map(point_json).collect())
}

pub fn obstacle_json(ob: &Obstacle<Rational>) -> Value {
    match ob {
        Obstacle::Point(p) => json!({"type": "point", "at": point_json(p)}),
        Obstacle::Polygon(poly) => json!({"type": "polygon", "vertices": points_json(poly.vertices())}),
        Obstacle::Face(id) => json!({"type": "face", "id": id}),
        Obstacle::FaceCluster(ids) => json!({"type": "face_cluster", "ids": ids}),
    }
}

pub fn edges_json(g: &Graph) -> Value {
    Value::Array(g.edges().map(|(u, w)| json!([u + 1, w + 1])).collect())
}

pub fn instance_json(
    g: &Graph,
    points: Option<&Embedding<Rational>>,
    obstacles: &[Obstacle<Rational>],
) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(g.n()));
    obj.insert("edges".into(), edges_json(g));
    if let Some(p) = points {
        obj.insert("points".into(), points_json(p.points()));
    }
    if !obstacles.is_empty() {
        obj.insert(
            "obstacles".into(),
            Value::Array(obstacles.iter().map(obstacle_json).collect()),
        );
    }
    Value::Object(obj)
}

/// Boundary walks of a face as point lists; the outer face has no outer walk.
pub fn face_json(arr: &Arrangement<Rational>, id: usize) -> Value {
    let face = arr.face(id);
    let walks: Vec<Value> = face
        .boundary
        .iter()
        .map(|w| points_json(&arr.walk_points(w)))
        .collect();
    json!({
        "id": id,
        "bounded": face.bounded,
        "boundary": walks,
        "witness": point_json(&face.witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"n": 3, "edges": [[1, 2], [2, 3]], "points": [["0/1", "0"], [4, "1/2"], ["6/4", "-3"]],
            "obstacles": [{"type": "point", "at": ["1", "1"]}, {"type": "face", "id": 0}]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.graph.edge_count(), 2);
        let v = instance_json(&inst.graph, inst.points.as_ref(), &inst.obstacles);
        assert_eq!(v["points"][2], json!(["3/2", "-3/1"]));
        let again = parse_instance(&v.to_string()).unwrap();
        assert_eq!(again.points, inst.points);
        assert_eq!(again.obstacles, inst.obstacles);
    }

    #[test]
    fn schema_errors() {
        for bad in [
            "[]",
            r#"{"edges": []}"#,
            r#"{"n": 2, "edges": [[1, 3]]}"#,
            r#"{"n": 2, "edges": [[1, 1]]}"#,
            r#"{"n": 2, "edges": [], "points": [["0", "0"]]}"#,
            r#"{"n": 2, "edges": [], "points": [["0", "0"], ["1/0", "0"]]}"#,
            r#"{"n": 2, "edges": [], "points": [["0", "0"], [0.5, "0"]]}"#,
            r#"{"n": 2, "edges": [], "obstacles": [{"type": "blob"}]}"#,
            r#"{"n": 2, "edges": [], "extra": 1}"#,
        ] {
            assert!(matches!(parse_instance(bad), Err(CliError::Schema(_))), "{bad}");
        }
    }
}
