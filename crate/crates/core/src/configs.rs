//! Reference configurations and exact file I/O.
//!
//! The cluster generators realize Sierksma's construction: a rational
//! simplex with barycenter at the origin, a tight cluster of points at
//! each vertex, and (for the Tverberg flavor) one extra point near the
//! center.  Offsets are deterministic rationals on a moment curve, so
//! the same parameters always produce the same configuration, and every
//! generator validates general position before returning.
//!
//! Files carry exact coordinates — integers, fractions `a/b`, or finite
//! decimals — because the parity and counting statements this library
//! checks are meaningless under rounding.

use crate::kernel::{self, Configuration, KernelError, Point, Rational};
use num::{BigInt, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("gave up after {attempts} sampling attempts; raise coord_bound")]
    ExhaustedRetries { attempts: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    SierksmaBirch,
    SierksmaTverberg,
    LineBalanced,
    Random,
}

/// Parameters for [`generate`].  `k_or_q` is the block count for the
/// cluster generators, the positive-side count for `LineBalanced`, and
/// the total point count for `Random`.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub d: usize,
    pub k_or_q: usize,
    pub epsilon: Rational,
    pub seed: u64,
    pub coord_bound: i64,
    /// Random generator only: also require general position with
    /// respect to the origin.
    pub wrt_origin: bool,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Configuration, ConfigError> {
    match spec.kind {
        GeneratorKind::SierksmaBirch => {
            gen_sierksma_birch(spec.d, spec.k_or_q, spec.epsilon.clone())
        }
        GeneratorKind::SierksmaTverberg => {
            gen_sierksma_tverberg(spec.d, spec.k_or_q, spec.epsilon.clone())
        }
        GeneratorKind::LineBalanced => gen_line_balanced(spec.k_or_q),
        GeneratorKind::Random => gen_random(
            spec.d,
            spec.k_or_q,
            spec.seed,
            spec.coord_bound,
            spec.wrt_origin,
        ),
    }
}

/// Vertices of a rational `d`-simplex with barycenter at the origin:
/// `-1` in every coordinate, and `(d+1)·e_j - 1` for each axis `j`.
fn simplex_vertices(d: usize) -> Vec<Point> {
    let mut vertices = vec![Point::new(vec![kernel::rat(-1); d])];
    for j in 0..d {
        let mut coords = vec![kernel::rat(-1); d];
        coords[j] += kernel::rat(d as i64 + 1);
        vertices.push(Point::new(coords));
    }
    vertices
}

/// Offset number `idx` out of `total` for a given retry round: a point
/// on the moment curve `(t, t², …)` scaled to magnitude below
/// `epsilon`.  Distinct `idx` give distinct directions, and bumping
/// `attempt` reshuffles all of them.
fn moment_offset(d: usize, idx: usize, total: usize, attempt: usize, epsilon: &Rational) -> Point {
    let t = Rational::new(
        BigInt::from(idx as u64 + 1),
        BigInt::from((total + 1 + attempt) as u64),
    );
    let mut coords = Vec::with_capacity(d);
    let mut power = t.clone();
    for _ in 0..d {
        coords.push(epsilon * &power);
        power *= &t;
    }
    Point::new(coords)
}

fn check_epsilon(epsilon: &Rational) -> Result<(), ConfigError> {
    if !epsilon.is_positive() || *epsilon >= kernel::ratio(1, 10) {
        return Err(ConfigError::InvalidSpec(format!(
            "epsilon must lie in (0, 1/10), got {}",
            epsilon
        )));
    }
    Ok(())
}

const CLUSTER_ATTEMPTS: usize = 64;

/// Shared cluster builder: `cluster` points near each simplex vertex,
/// plus a near-origin point when `center` is set.  Halves epsilon and
/// re-derives all offsets until the validator accepts the result.
fn gen_clusters(
    d: usize,
    cluster: usize,
    center: bool,
    mut epsilon: Rational,
    label: String,
    origin_gp: bool,
) -> Result<Configuration, ConfigError> {
    let vertices = simplex_vertices(d);
    let total = (d + 1) * cluster + usize::from(center);
    for attempt in 0..CLUSTER_ATTEMPTS {
        let mut points = Vec::with_capacity(total);
        for (j, v) in vertices.iter().enumerate() {
            for i in 0..cluster {
                let delta = moment_offset(d, j * cluster + i, total, attempt, &epsilon);
                points.push(v.add(&delta));
            }
        }
        if center {
            // Perturbed off the exact barycenter: the barycenter itself
            // tends to be collinear with opposite cluster pairs.
            let tiny = &epsilon / kernel::rat(16);
            points.push(moment_offset(d, total - 1, total, attempt, &tiny));
        }
        if let Ok(cfg) = Configuration::new(d, points, label.clone()) {
            let anchor = origin_gp.then(|| Point::origin(d));
            if kernel::is_general_position(&cfg, anchor.as_ref())? {
                return Ok(cfg);
            }
        }
        epsilon /= kernel::rat(2);
    }
    // Each round shrinks the clusters and moves every offset direction;
    // a degenerate subset surviving all rounds would have to be
    // degenerate in the limit configuration, which is a simplex.
    unreachable!("cluster construction stayed degenerate for {CLUSTER_ATTEMPTS} rounds");
}

/// `k` points clustered at each vertex of a `d`-simplex centered at the
/// origin: `k(d+1)` points in general position with respect to the
/// origin, with `(k!)^d` Birch partitions.
pub fn gen_sierksma_birch(d: usize, k: usize, epsilon: Rational) -> Result<Configuration, ConfigError> {
    if d < 1 || k < 1 {
        return Err(ConfigError::InvalidSpec(format!(
            "need d >= 1 and k >= 1, got d={}, k={}",
            d, k
        )));
    }
    check_epsilon(&epsilon)?;
    gen_clusters(
        d,
        k,
        false,
        epsilon,
        format!("sierksma birch d={} k={}", d, k),
        true,
    )
}

/// Clusters of `q-1` points at each simplex vertex plus one point near
/// the center: `(d+1)(q-1)+1` points in general position.
pub fn gen_sierksma_tverberg(
    d: usize,
    q: usize,
    epsilon: Rational,
) -> Result<Configuration, ConfigError> {
    if d < 1 || q < 2 {
        return Err(ConfigError::InvalidSpec(format!(
            "need d >= 1 and q >= 2, got d={}, q={}",
            d, q
        )));
    }
    check_epsilon(&epsilon)?;
    gen_clusters(
        d,
        q - 1,
        true,
        epsilon,
        format!("sierksma tverberg d={} q={}", d, q),
        false,
    )
}

/// The line configuration `{-k, …, -1, 1, …, k}`.
pub fn gen_line_balanced(k: usize) -> Result<Configuration, ConfigError> {
    if k < 1 {
        return Err(ConfigError::InvalidSpec("need k >= 1".into()));
    }
    let mut points = Vec::with_capacity(2 * k);
    for v in -(k as i64)..=k as i64 {
        if v != 0 {
            points.push(Point::from_ints(&[v]));
        }
    }
    Ok(Configuration::new(1, points, format!("line balanced k={}", k))?)
}

const RANDOM_ATTEMPTS: usize = 10_000;

/// `n` integer points drawn uniformly from `[-coord_bound, coord_bound]^d`,
/// resampled wholesale until the set is in general position (with
/// respect to the origin when `wrt_origin`).  Deterministic in
/// `(seed, parameters)`.
pub fn gen_random(
    d: usize,
    n: usize,
    seed: u64,
    coord_bound: i64,
    wrt_origin: bool,
) -> Result<Configuration, ConfigError> {
    if d < 1 || n < d + 1 {
        return Err(ConfigError::InvalidSpec(format!(
            "need d >= 1 and n >= d+1, got d={}, n={}",
            d, n
        )));
    }
    if coord_bound < n as i64 {
        return Err(ConfigError::InvalidSpec(format!(
            "coord_bound {} leaves too little lattice room for {} points",
            coord_bound, n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let label = format!("random d={} n={} seed={}", d, n, seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let points: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    (0..d)
                        .map(|_| kernel::rat(rng.gen_range(-coord_bound..=coord_bound)))
                        .collect(),
                )
            })
            .collect();
        let Ok(cfg) = Configuration::new(d, points, label.clone()) else {
            continue;
        };
        let anchor = wrt_origin.then(|| Point::origin(d));
        if kernel::is_general_position(&cfg, anchor.as_ref())? {
            return Ok(cfg);
        }
    }
    Err(ConfigError::ExhaustedRetries {
        attempts: RANDOM_ATTEMPTS,
    })
}

fn render_coordinate(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse one exact rational token: an integer, a fraction `a/b`, or a
/// finite decimal.
pub fn parse_rational(token: &str) -> Option<Rational> {
    parse_coordinate(token)
}

fn parse_coordinate(token: &str) -> Option<Rational> {
    if let Some((num, den)) = token.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let (negative, digits) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        // "0.25" and ".25" both mean 25/100.
        let int_part: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().ok()?
        };
        let frac_part: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mut value = Rational::new(int_part * &scale + frac_part, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    token.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Render a configuration in the plain-text format: a `dim=` header, a
/// `label=` line when the label is nonempty, then one point per line.
pub fn write_configuration(x: &Configuration) -> String {
    let mut out = format!("dim={}\n", x.dim());
    if !x.label().is_empty() {
        out.push_str(&format!("label={}\n", x.label()));
    }
    for p in x.points() {
        let row: Vec<String> = p.coords().iter().map(render_coordinate).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the plain-text format.  Coordinates may be integers, fractions
/// `a/b`, or finite decimals; all are read exactly.
pub fn read_configuration(text: &str) -> Result<Configuration, ConfigError> {
    let err = |line: usize, msg: String| ConfigError::ParseError { line, msg };
    let mut dim: Option<usize> = None;
    let mut label = String::new();
    let mut points: Vec<Point> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if dim.is_none() {
            let Some(value) = line.strip_prefix("dim=") else {
                return Err(err(line_no, format!("expected `dim=<d>` header, got {:?}", line)));
            };
            let d: usize = value
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("bad dimension {:?}", value)))?;
            if d == 0 {
                return Err(err(line_no, "dimension must be at least 1".into()));
            }
            dim = Some(d);
            continue;
        }
        if points.is_empty() && label.is_empty() {
            if let Some(value) = line.strip_prefix("label=") {
                label = value.trim().to_string();
                continue;
            }
        }
        let d = dim.unwrap();
        let mut coords = Vec::with_capacity(d);
        for (field, token) in line.split_whitespace().enumerate() {
            let value = parse_coordinate(token).ok_or_else(|| {
                err(
                    line_no,
                    format!("field {}: {:?} is not an exact coordinate", field + 1, token),
                )
            })?;
            coords.push(value);
        }
        if coords.len() != d {
            return Err(err(
                line_no,
                format!("expected {} coordinates, got {}", d, coords.len()),
            ));
        }
        points.push(Point::new(coords));
    }
    let Some(d) = dim else {
        return Err(err(1, "missing `dim=<d>` header".into()));
    };
    Ok(Configuration::new(d, points, label)?)
}

#[derive(Serialize, Deserialize)]
struct ConfigFile {
    #[serde(default = "schema_version")]
    format: u32,
    dim: usize,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    label: String,
    points: Vec<Vec<CoordRepr>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoordRepr {
    Int(i64),
    Text(String),
}

fn schema_version() -> u32 {
    1
}

/// The structured (JSON) variant of the same schema.  Coordinates are
/// emitted as exact strings; integer literals are accepted on input.
pub fn write_configuration_json(x: &Configuration) -> String {
    let file = ConfigFile {
        format: schema_version(),
        dim: x.dim(),
        label: x.label().to_string(),
        points: x
            .points()
            .iter()
            .map(|p| p.coords().iter().map(|c| CoordRepr::Text(render_coordinate(c))).collect())
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

pub fn read_configuration_json(text: &str) -> Result<Configuration, ConfigError> {
    let file: ConfigFile = serde_json::from_str(text).map_err(|e| ConfigError::ParseError {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if file.format != schema_version() {
        return Err(ConfigError::ParseError {
            line: 1,
            msg: format!("unsupported format version {}", file.format),
        });
    }
    let mut points = Vec::with_capacity(file.points.len());
    for (i, row) in file.points.iter().enumerate() {
        let mut coords = Vec::with_capacity(row.len());
        for (j, c) in row.iter().enumerate() {
            let value = match c {
                CoordRepr::Int(v) => Some(kernel::rat(*v)),
                CoordRepr::Text(s) => parse_coordinate(s),
            };
            let value = value.ok_or_else(|| ConfigError::ParseError {
                line: 1,
                msg: format!("point {}, coordinate {}: not an exact coordinate", i + 1, j + 1),
            })?;
            coords.push(value);
        }
        if coords.len() != file.dim {
            return Err(ConfigError::ParseError {
                line: 1,
                msg: format!(
                    "point {}: expected {} coordinates, got {}",
                    i + 1,
                    file.dim,
                    coords.len()
                ),
            });
        }
        points.push(Point::new(coords));
    }
    Ok(Configuration::new(file.dim, points, file.label)?)
}
