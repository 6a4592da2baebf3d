//! Synthetic graph generators for test and benchmark instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("{0} must be at least 1")]
    ZeroDimension(&'static str),
    #[error("attachment count m = {m} must satisfy 1 <= m < n = {n}")]
    BadAttachment { m: usize, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("generator spec {spec:?}: {msg}")]
    BadSpec { spec: String, msg: String },
}

/// Path graph `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::ZeroDimension("n"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))))
}

/// `w x h` grid with 4-neighbor adjacency; vertex `(x, y)` has id `y*w + x`.
pub fn grid2d(w: usize, h: usize) -> Result<Graph, GenError> {
    if w == 0 || h == 0 {
        return Err(GenError::ZeroDimension("grid side"));
    }
    let mut edges = Vec::with_capacity(2 * w * h);
    for y in 0..h {
        for x in 0..w {
            let id = y * w + x;
            if x + 1 < w {
                edges.push((id, id + 1));
            }
            if y + 1 < h {
                edges.push((id, id + w));
            }
        }
    }
    Ok(Graph::from_edges(w * h, edges))
}

/// `x x y x z` grid with 6-neighbor adjacency; `(a, b, c)` has id
/// `(c*y + b)*x + a`.
pub fn grid3d(x: usize, y: usize, z: usize) -> Result<Graph, GenError> {
    if x == 0 || y == 0 || z == 0 {
        return Err(GenError::ZeroDimension("grid side"));
    }
    let mut edges = Vec::with_capacity(3 * x * y * z);
    for c in 0..z {
        for b in 0..y {
            for a in 0..x {
                let id = (c * y + b) * x + a;
                if a + 1 < x {
                    edges.push((id, id + 1));
                }
                if b + 1 < y {
                    edges.push((id, id + x));
                }
                if c + 1 < z {
                    edges.push((id, id + x * y));
                }
            }
        }
    }
    Ok(Graph::from_edges(x * y * z, edges))
}

/// Preferential-attachment graph: `m` isolated seed vertices, then each new
/// vertex attaches to `m` distinct existing vertices sampled with probability
/// proportional to `degree + 1`.
///
/// The `+1` smoothing lets the degree-0 seeds be drawn. The result has
/// exactly `(n - m) * m` edges and is connected.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::ZeroDimension("n"));
    }
    if m == 0 || m >= n {
        return Err(GenError::BadAttachment { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weight: Vec<u64> = vec![1; n]; // degree + 1
    let mut taken = vec![false; n]; // scratch: targets already chosen this round
    let mut edges = Vec::with_capacity((n - m) * m);
    for v in m..n {
        let mut total: u64 = weight[..v].iter().sum();
        let mut chosen = Vec::with_capacity(m);
        for _ in 0..m {
            let mut t = rng.random_range(0..total);
            let mut pick = usize::MAX;
            for u in 0..v {
                if taken[u] {
                    continue;
                }
                if t < weight[u] {
                    pick = u;
                    break;
                }
                t -= weight[u];
            }
            debug_assert!(pick != usize::MAX);
            taken[pick] = true;
            total -= weight[pick];
            chosen.push(pick);
        }
        for &u in &chosen {
            taken[u] = false;
            weight[u] += 1;
            edges.push((u, v));
        }
        weight[v] += m as u64;
    }
    Ok(Graph::from_edges(n, edges))
}

/// Erdos-Renyi `G(n, p)`: each pair is an edge independently with
/// probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::ZeroDimension("n"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// The 14-vertex worked example: a labeled forest with three components.
///
/// Component one is a spider on `A..J` centered at `C` (legs `C-B-A`,
/// `C-D-E`, `C-F-G`, `C-H` with `H-I` and `H-J`), component two the path
/// `K-L-M`, and `N` is isolated.
pub fn tight_example() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (2, 5),
        (5, 6),
        (2, 7),
        (7, 8),
        (7, 9),
        (10, 11),
        (11, 12),
    ];
    let labels = (0..14)
        .map(|i| char::from(b'A' + i as u8).to_string())
        .collect();
    Graph::from_edges(14, edges).with_labels(labels)
}

fn spec_err(spec: &str, msg: impl Into<String>) -> GenError {
    GenError::BadSpec {
        spec: spec.to_string(),
        msg: msg.into(),
    }
}

fn parse_dims<const K: usize>(spec: &str, body: &str, sep: char) -> Result<[usize; K], GenError> {
    let parts: Vec<&str> = body.split(sep).collect();
    if parts.len() != K {
        return Err(spec_err(
            spec,
            format!("expected {K} `{sep}`-separated values"),
        ));
    }
    let mut out = [0usize; K];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| spec_err(spec, format!("bad number {part:?}")))?;
    }
    Ok(out)
}

/// Builds a graph from a compact spec string.
///
/// Forms: `path:49`, `grid2:33x33`, `grid3:10x10x10`, `ba:1000,2` or
/// `ba:1000,2,7` (trailing seed optional), `gnp:50,0.1` likewise, and
/// `tight-example`. Generators without an explicit seed use `default_seed`.
pub fn from_spec(spec: &str, default_seed: u64) -> Result<Graph, GenError> {
    if spec == "tight-example" {
        return Ok(tight_example());
    }
    let (kind, body) = spec
        .split_once(':')
        .ok_or_else(|| spec_err(spec, "expected `kind:args`"))?;
    match kind {
        "path" => {
            let [n] = parse_dims(spec, body, ',')?;
            path(n)
        }
        "grid2" => {
            let [w, h] = parse_dims(spec, body, 'x')?;
            grid2d(w, h)
        }
        "grid3" => {
            let [x, y, z] = parse_dims(spec, body, 'x')?;
            grid3d(x, y, z)
        }
        "ba" => {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 2 && parts.len() != 3 {
                return Err(spec_err(spec, "expected `n,m` or `n,m,seed`"));
            }
            let n = parts[0]
                .trim()
                .parse()
                .map_err(|_| spec_err(spec, format!("bad number {:?}", parts[0])))?;
            let m = parts[1]
                .trim()
                .parse()
                .map_err(|_| spec_err(spec, format!("bad number {:?}", parts[1])))?;
            let seed = match parts.get(2) {
                Some(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| spec_err(spec, format!("bad seed {s:?}")))?,
                None => default_seed,
            };
            preferential_attachment(n, m, seed)
        }
        "gnp" => {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 2 && parts.len() != 3 {
                return Err(spec_err(spec, "expected `n,p` or `n,p,seed`"));
            }
            let n = parts[0]
                .trim()
                .parse()
                .map_err(|_| spec_err(spec, format!("bad number {:?}", parts[0])))?;
            let p = parts[1]
                .trim()
                .parse()
                .map_err(|_| spec_err(spec, format!("bad number {:?}", parts[1])))?;
            let seed = match parts.get(2) {
                Some(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| spec_err(spec, format!("bad seed {s:?}")))?,
                None => default_seed,
            };
            gnp(n, p, seed)
        }
        other => Err(spec_err(spec, format!("unknown generator {other:?}"))),
    }
}
