//! The geometric core: rectangles, stab lines, validation, exactification
//! for k <= 3, stab-line extraction for equal-height rectangles,
//! pathwidth/coloring extraction, and SVG export.
//!
//! All rectangles are closed; touching at a corner or edge counts as
//! intersection. Coordinates are exact rationals.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::interval::IntervalCollection;
use crate::rat::{
    format_rational, min_positive_gap, parse_rational, rint, to_f64, Rational,
};

/// Closed axis-parallel rectangle; degenerate (zero width/height) permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub x_lo: Rational,
    pub x_hi: Rational,
    pub y_lo: Rational,
    pub y_hi: Rational,
}

impl Rect {
    pub fn new(x_lo: Rational, x_hi: Rational, y_lo: Rational, y_hi: Rational) -> Self {
        assert!(x_lo <= x_hi && y_lo <= y_hi, "rectangle endpoints out of order");
        Rect { x_lo, x_hi, y_lo, y_hi }
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        (&self.x_lo).max(&other.x_lo) <= (&self.x_hi).min(&other.x_hi)
            && (&self.y_lo).max(&other.y_lo) <= (&self.y_hi).min(&other.y_hi)
    }

    /// Does the horizontal line `y = a` meet this rectangle?
    pub fn stabbed_by(&self, a: &Rational) -> bool {
        &self.y_lo <= a && a <= &self.y_hi
    }

    pub fn span(&self) -> (Rational, Rational) {
        (self.x_lo.clone(), self.x_hi.clone())
    }
}

/// Validation mode: every rectangle on at least one stab line, or exactly
/// one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabMode {
    Srig,
    Esrig,
}

impl std::fmt::Display for StabMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StabMode::Srig => write!(f, "SRIG"),
            StabMode::Esrig => write!(f, "ESRIG"),
        }
    }
}

/// Axis-parallel rectangles keyed by vertex label plus a strictly increasing
/// list of horizontal stab lines.
#[derive(Debug, Clone)]
pub struct StabbedRepresentation {
    pub stabs: Vec<Rational>,
    pub rects: BTreeMap<String, Rect>,
}

impl StabbedRepresentation {
    pub fn new(stabs: Vec<Rational>, rects: BTreeMap<String, Rect>) -> Self {
        assert!(!stabs.is_empty(), "at least one stab line is required");
        for w in stabs.windows(2) {
            assert!(w[0] < w[1], "stab lines must be strictly increasing");
        }
        StabbedRepresentation { stabs, rects }
    }

    pub fn k(&self) -> usize {
        self.stabs.len()
    }

    /// Stab lines meeting the rectangle of `label`.
    pub fn stabs_of(&self, rect: &Rect) -> Vec<usize> {
        self.stabs
            .iter()
            .enumerate()
            .filter(|(_, a)| rect.stabbed_by(a))
            .map(|(i, _)| i)
            .collect()
    }

    /// Shift every y-coordinate and stab line by `dy`.
    pub fn shift_y(&self, dy: &Rational) -> StabbedRepresentation {
        StabbedRepresentation {
            stabs: self.stabs.iter().map(|s| s + dy).collect(),
            rects: self
                .rects
                .iter()
                .map(|(l, r)| {
                    (
                        l.clone(),
                        Rect {
                            x_lo: r.x_lo.clone(),
                            x_hi: r.x_hi.clone(),
                            y_lo: &r.y_lo + dy,
                            y_hi: &r.y_hi + dy,
                        },
                    )
                })
                .collect(),
        }
    }

    /// Reflect vertically about the horizontal line `y = axis`.
    pub fn mirror_y(&self, axis: &Rational) -> StabbedRepresentation {
        let two = rint(2);
        let mut stabs: Vec<Rational> = self.stabs.iter().map(|s| &two * axis - s).collect();
        stabs.reverse();
        StabbedRepresentation {
            stabs,
            rects: self
                .rects
                .iter()
                .map(|(l, r)| {
                    (
                        l.clone(),
                        Rect {
                            x_lo: r.x_lo.clone(),
                            x_hi: r.x_hi.clone(),
                            y_lo: &two * axis - &r.y_hi,
                            y_hi: &two * axis - &r.y_lo,
                        },
                    )
                })
                .collect(),
        }
    }

    /// Affinely remap all x-coordinates from their bounding range into the
    /// open window `(lo, hi)`.
    pub fn squeeze_x_into(&self, lo: &Rational, hi: &Rational) -> StabbedRepresentation {
        if self.rects.is_empty() {
            return self.clone();
        }
        let min = self.rects.values().map(|r| &r.x_lo).min().unwrap().clone();
        let max = self.rects.values().map(|r| &r.x_hi).max().unwrap().clone();
        let span = if min == max { rint(1) } else { &max - &min };
        let pad = (hi - lo) / rint(100);
        let tlo = lo + &pad;
        let scale = (hi - &pad - &tlo) / span;
        StabbedRepresentation {
            stabs: self.stabs.clone(),
            rects: self
                .rects
                .iter()
                .map(|(l, r)| {
                    (
                        l.clone(),
                        Rect {
                            x_lo: &tlo + (&r.x_lo - &min) * &scale,
                            x_hi: &tlo + (&r.x_hi - &min) * &scale,
                            y_lo: r.y_lo.clone(),
                            y_hi: r.y_hi.clone(),
                        },
                    )
                })
                .collect(),
        }
    }

    /// Renames every vertex through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> StabbedRepresentation {
        StabbedRepresentation {
            stabs: self.stabs.clone(),
            rects: self.rects.iter().map(|(l, r)| (f(l), r.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RepresentationJson::from(self)).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<StabbedRepresentation> {
        let raw: RepresentationJson = serde_json::from_str(s)
            .map_err(|e| Error::Parse { line: 0, msg: format!("bad representation JSON: {e}") })?;
        raw.try_into()
    }
}

/// Serialization shape: `{"stabs":[...],"rects":{"v":[xlo,xhi,ylo,yhi]}}`
/// with rationals as `"p/q"` strings in lowest terms.
#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    stabs: Vec<String>,
    rects: BTreeMap<String, [String; 4]>,
}

impl From<&StabbedRepresentation> for RepresentationJson {
    fn from(r: &StabbedRepresentation) -> Self {
        RepresentationJson {
            stabs: r.stabs.iter().map(format_rational).collect(),
            rects: r
                .rects
                .iter()
                .map(|(l, rect)| {
                    (
                        l.clone(),
                        [
                            format_rational(&rect.x_lo),
                            format_rational(&rect.x_hi),
                            format_rational(&rect.y_lo),
                            format_rational(&rect.y_hi),
                        ],
                    )
                })
                .collect(),
        }
    }
}

impl TryFrom<RepresentationJson> for StabbedRepresentation {
    type Error = Error;
    fn try_from(raw: RepresentationJson) -> Result<StabbedRepresentation> {
        let parse = |s: &str| {
            parse_rational(s).map_err(|msg| Error::Parse { line: 0, msg })
        };
        let stabs = raw.stabs.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        if stabs.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no stab lines".into() });
        }
        for w in stabs.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Parse { line: 0, msg: "stab lines not increasing".into() });
            }
        }
        let mut rects = BTreeMap::new();
        for (l, [a, b, c, d]) in raw.rects {
            let (x_lo, x_hi, y_lo, y_hi) = (parse(&a)?, parse(&b)?, parse(&c)?, parse(&d)?);
            if x_lo > x_hi || y_lo > y_hi {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("rectangle '{l}' endpoints out of order"),
                });
            }
            rects.insert(l, Rect { x_lo, x_hi, y_lo, y_hi });
        }
        Ok(StabbedRepresentation { stabs, rects })
    }
}

/// Plain rectangle map without stab lines: the input format of the split
/// graph construction. JSON shape `{"rects":{...}}`.
#[derive(Debug, Clone)]
pub struct BoxRepresentation {
    pub rects: BTreeMap<String, Rect>,
}

impl BoxRepresentation {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct J<'a> {
            rects: BTreeMap<&'a String, [String; 4]>,
        }
        let j = J {
            rects: self
                .rects
                .iter()
                .map(|(l, r)| {
                    (
                        l,
                        [
                            format_rational(&r.x_lo),
                            format_rational(&r.x_hi),
                            format_rational(&r.y_lo),
                            format_rational(&r.y_hi),
                        ],
                    )
                })
                .collect(),
        };
        serde_json::to_string(&j).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<BoxRepresentation> {
        #[derive(Deserialize)]
        struct J {
            rects: BTreeMap<String, [String; 4]>,
        }
        let raw: J = serde_json::from_str(s)
            .map_err(|e| Error::Parse { line: 0, msg: format!("bad rects JSON: {e}") })?;
        let mut rects = BTreeMap::new();
        for (l, [a, b, c, d]) in raw.rects {
            let parse = |s: &str| parse_rational(s).map_err(|msg| Error::Parse { line: 0, msg });
            rects.insert(l, Rect::new(parse(&a)?, parse(&b)?, parse(&c)?, parse(&d)?));
        }
        Ok(BoxRepresentation { rects })
    }
}

/// Intersection graph of labeled rectangles (closed intersection; corner and
/// edge touches count).
pub fn intersection_graph(rects: &BTreeMap<String, Rect>) -> Graph {
    let labels: Vec<String> = rects.keys().cloned().collect();
    let rlist: Vec<&Rect> = rects.values().collect();
    let mut g = Graph::new(labels);
    for i in 0..rlist.len() {
        for j in i + 1..rlist.len() {
            if rlist[i].intersects(rlist[j]) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Machine-readable validation report. Empty vectors mean the
/// representation is valid in the requested mode.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub mode: String,
    pub valid: bool,
    /// Edges of the graph with non-intersecting rectangles.
    pub missing_edges: Vec<(String, String)>,
    /// Intersecting rectangle pairs that are not edges.
    pub extra_edges: Vec<(String, String)>,
    /// Rectangles meeting no stab line.
    pub unstabbed: Vec<String>,
    /// In ESRIG mode, rectangles meeting two or more stab lines.
    pub multi_stabbed: Vec<(String, Vec<String>)>,
}

impl Report {
    fn summary(&self) -> String {
        format!(
            "{} missing edge(s), {} extra edge(s), {} unstabbed, {} multi-stabbed",
            self.missing_edges.len(),
            self.extra_edges.len(),
            self.unstabbed.len(),
            self.multi_stabbed.len()
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn into_error(self) -> Error {
        Error::InvalidRepresentation { mode: self.mode.clone(), summary: self.summary() }
    }
}

/// Validation engine choice. `Auto` uses the pairwise engine up to 5000
/// rectangles and the sweep engine beyond.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Auto,
    Pairwise,
    Sweep,
}

/// Validates a representation against a graph in the given mode.
pub fn validate(r: &StabbedRepresentation, g: &Graph, mode: StabMode) -> Result<Report> {
    validate_with_engine(r, g, mode, Engine::Auto)
}

pub fn validate_with_engine(
    r: &StabbedRepresentation,
    g: &Graph,
    mode: StabMode,
    engine: Engine,
) -> Result<Report> {
    let n = g.n();
    if r.rects.len() != n {
        return Err(Error::VertexSetMismatch(format!(
            "{} rectangles vs {} vertices",
            r.rects.len(),
            n
        )));
    }
    // map rect labels to graph ids
    let index = g.label_index();
    let mut rect_of: Vec<Option<&Rect>> = vec![None; n];
    for (label, rect) in &r.rects {
        match index.get(label.as_str()) {
            Some(&v) => rect_of[v] = Some(rect),
            None => {
                return Err(Error::VertexSetMismatch(format!(
                    "rectangle '{label}' has no matching vertex"
                )))
            }
        }
    }
    let rects: Vec<&Rect> = rect_of.into_iter().map(|r| r.unwrap()).collect();

    let use_sweep = match engine {
        Engine::Pairwise => false,
        Engine::Sweep => true,
        Engine::Auto => n > 5000,
    };
    let found_pairs: BTreeSet<(usize, usize)> = if use_sweep {
        sweep_intersections(&rects)
    } else {
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if rects[i].intersects(rects[j]) {
                    out.insert((i, j));
                }
            }
        }
        out
    };

    let graph_edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    let missing_edges: Vec<(String, String)> = graph_edges
        .difference(&found_pairs)
        .map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
        .collect();
    let extra_edges: Vec<(String, String)> = found_pairs
        .difference(&graph_edges)
        .map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
        .collect();

    let mut unstabbed = Vec::new();
    let mut multi_stabbed = Vec::new();
    for v in 0..n {
        let hits = r.stabs_of(rects[v]);
        if hits.is_empty() {
            unstabbed.push(g.label(v).to_string());
        } else if hits.len() >= 2 && mode == StabMode::Esrig {
            multi_stabbed.push((
                g.label(v).to_string(),
                hits.iter().map(|&i| format_rational(&r.stabs[i])).collect(),
            ));
        }
    }

    let valid =
        missing_edges.is_empty() && extra_edges.is_empty() && unstabbed.is_empty() && multi_stabbed.is_empty();
    Ok(Report {
        mode: mode.to_string(),
        valid,
        missing_edges,
        extra_edges,
        unstabbed,
        multi_stabbed,
    })
}

/// Validate and turn an invalid report into an error.
pub fn validate_ok(r: &StabbedRepresentation, g: &Graph, mode: StabMode) -> Result<()> {
    let report = validate(r, g, mode)?;
    if report.valid {
        Ok(())
    } else {
        Err(report.into_error())
    }
}

/// All intersecting pairs by a left-to-right sweep with integer-compressed
/// y-coordinates; intended for large sparse instances where the active set
/// stays small.
fn sweep_intersections(rects: &[&Rect]) -> BTreeSet<(usize, usize)> {
    let n = rects.len();
    // compress y values
    let mut ys: Vec<&Rational> = Vec::with_capacity(2 * n);
    for r in rects {
        ys.push(&r.y_lo);
        ys.push(&r.y_hi);
    }
    ys.sort();
    ys.dedup();
    let yid = |y: &Rational| ys.binary_search(&y).unwrap();
    let yint: Vec<(usize, usize)> = rects.iter().map(|r| (yid(&r.y_lo), yid(&r.y_hi))).collect();

    // events: (x, kind, rect); inserts before removals at equal x so closed
    // touches are reported
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Kind {
        Insert,
        Remove,
    }
    let mut events: Vec<(&Rational, Kind, usize)> = Vec::with_capacity(2 * n);
    for (i, r) in rects.iter().enumerate() {
        events.push((&r.x_lo, Kind::Insert, i));
        events.push((&r.x_hi, Kind::Remove, i));
    }
    events.sort_by(|a, b| a.0.cmp(b.0).then_with(|| a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut active: Vec<usize> = Vec::new();
    let mut pos_in_active = vec![usize::MAX; n];
    let mut out = BTreeSet::new();
    for (_, kind, i) in events {
        match kind {
            Kind::Insert => {
                let (lo, hi) = yint[i];
                for &j in &active {
                    let (jlo, jhi) = yint[j];
                    if lo.max(jlo) <= hi.min(jhi) {
                        out.insert((i.min(j), i.max(j)));
                    }
                }
                pos_in_active[i] = active.len();
                active.push(i);
            }
            Kind::Remove => {
                let p = pos_in_active[i];
                let last = *active.last().unwrap();
                active.swap_remove(p);
                if p < active.len() {
                    pos_in_active[last] = p;
                }
                pos_in_active[i] = usize::MAX;
            }
        }
    }
    out
}

/// Converts a k-stabbed representation with k <= 3 into an exactly stabbed
/// one over the same stab lines, preserving the intersection graph and
/// x-extents. Rectangles crossing the middle region are vertically trimmed;
/// coincident y-endpoints are first separated by a graph-preserving
/// perturbation (tops nudge up, bottoms nudge down).
pub fn exactify(r: &StabbedRepresentation) -> Result<StabbedRepresentation> {
    let k = r.k();
    if k > 3 {
        return Err(Error::TooManyStabLines(k));
    }
    if k == 1 {
        return Ok(r.clone());
    }
    let mut rects: Vec<(String, Rect)> =
        r.rects.iter().map(|(l, rect)| (l.clone(), rect.clone())).collect();

    // 1. perturb coincident y-endpoints (and endpoints sitting exactly on a
    //    stab value): tops move up, bottoms move down, by distinct tiny
    //    amounts, preserving closed contacts and stab sets
    let mut values: Vec<Rational> = r.stabs.clone();
    for (_, rect) in &rects {
        values.push(rect.y_lo.clone());
        values.push(rect.y_hi.clone());
    }
    let gap = min_positive_gap(&values).unwrap_or_else(|| rint(1));
    let slots = 2 * rects.len() + 2;
    // total displacement stays below gap/4 on each side so moved values can
    // never collide with each other or cross a stab line
    let delta = &gap / rint(4 * slots as i64);
    let stab_set: BTreeSet<&Rational> = r.stabs.iter().collect();
    {
        use std::collections::HashMap;
        let mut occurrences: HashMap<String, usize> = HashMap::new();
        for (_, rect) in &rects {
            *occurrences.entry(format_rational(&rect.y_lo)).or_insert(0) += 1;
            *occurrences.entry(format_rational(&rect.y_hi)).or_insert(0) += 1;
        }
        let mut counter: i64 = 0;
        for (_, rect) in rects.iter_mut() {
            let needs = |v: &Rational| {
                occurrences[&format_rational(v)] > 1 || stab_set.contains(v)
            };
            if needs(&rect.y_hi) {
                counter += 1;
                rect.y_hi = &rect.y_hi + &delta * rint(counter);
            }
            if needs(&rect.y_lo) {
                counter += 1;
                rect.y_lo = &rect.y_lo - &delta * rint(counter);
            }
        }
    }

    // 2. trim: every rectangle crossing the second stab line is clamped away
    //    from the lines just below/above it
    let mut values: Vec<Rational> = r.stabs.clone();
    for (_, rect) in &rects {
        values.push(rect.y_lo.clone());
        values.push(rect.y_hi.clone());
    }
    let eps = min_positive_gap(&values).expect("k >= 2 gives at least two values") / rint(2);
    let middle = &r.stabs[1];
    let floor = &r.stabs[0] + &eps;
    let ceil = if k == 3 { Some(&r.stabs[2] - &eps) } else { None };
    for (_, rect) in rects.iter_mut() {
        if rect.stabbed_by(middle) {
            if rect.y_lo < floor {
                rect.y_lo = floor.clone();
            }
            if let Some(c) = &ceil {
                if &rect.y_hi > c {
                    rect.y_hi = c.clone();
                }
            }
        }
    }
    Ok(StabbedRepresentation {
        stabs: r.stabs.clone(),
        rects: rects.into_iter().collect(),
    })
}

/// Greedy bottom-up stab line extraction for equal-height rectangles:
/// repeatedly take the lowest remaining top edge, drop everything it stabs,
/// and recurse. Every rectangle meets exactly one returned line.
pub fn unit_height_stab_lines(rects: &BTreeMap<String, Rect>) -> Result<Vec<Rational>> {
    if rects.is_empty() {
        return Ok(vec![]);
    }
    let mut heights: Vec<Rational> = rects.values().map(|r| &r.y_hi - &r.y_lo).collect();
    heights.sort();
    heights.dedup();
    if heights.len() > 1 {
        return Err(Error::HeightsDiffer);
    }
    let mut remaining: Vec<&Rect> = rects.values().collect();
    let mut lines = Vec::new();
    while !remaining.is_empty() {
        let a = remaining.iter().map(|r| &r.y_hi).min().unwrap().clone();
        remaining.retain(|r| !r.stabbed_by(&a));
        lines.push(a);
    }
    Ok(lines)
}

/// Ordered bags of vertex labels; the width is `max |X_i| - 1`.
#[derive(Debug, Clone)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<String>>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks the three axioms against `g`: all vertices and edges covered,
    /// and each vertex's bags consecutive.
    pub fn check(&self, g: &Graph) -> bool {
        let index = g.label_index();
        let mut first = vec![usize::MAX; g.n()];
        let mut last = vec![0usize; g.n()];
        let mut count = vec![0usize; g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for label in bag {
                let Some(&v) = index.get(label.as_str()) else { return false };
                if first[v] == usize::MAX {
                    first[v] = i;
                }
                last[v] = i;
                count[v] += 1;
            }
        }
        for v in 0..g.n() {
            if first[v] == usize::MAX {
                return false;
            }
            // consecutive: appearing in last-first+1 bags exactly
            if count[v] != last[v] - first[v] + 1 {
                return false;
            }
        }
        g.edges()
            .iter()
            .all(|&(u, v)| first[u].max(first[v]) <= last[u].min(last[v]))
    }
}

/// Path decomposition read off a valid SRIG representation: sort vertices by
/// right span edge; bag `X_i` holds every vertex whose span contains the
/// i-th right edge. Width is at most `k * omega(G) - 1`.
pub fn path_decomposition_from_rep(
    r: &StabbedRepresentation,
    g: &Graph,
) -> Result<PathDecomposition> {
    validate_ok(r, g, StabMode::Srig)?;
    let rects: Vec<(&String, &Rect)> = r.rects.iter().collect();
    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by(|&i, &j| rects[i].1.x_hi.cmp(&rects[j].1.x_hi));
    // sweep: events over left/right endpoints; active set = spans containing
    // the query point
    let mut events: Vec<(&Rational, bool, usize)> = Vec::new();
    for (i, (_, rect)) in rects.iter().enumerate() {
        events.push((&rect.x_lo, true, i));
        events.push((&rect.x_hi, false, i));
    }
    // at equal coordinate: inserts first, then queries, then removals, so a
    // query point on a span boundary still sees that span as active
    events.sort_by(|a, b| a.0.cmp(b.0).then((!a.1).cmp(&!b.1)));
    let mut active: BTreeSet<usize> = BTreeSet::new();
    let mut bags: Vec<Vec<String>> = Vec::with_capacity(order.len());
    let mut qi = 0usize;
    let mut ei = 0usize;
    while qi < order.len() {
        let q = &rects[order[qi]].1.x_hi;
        // apply all inserts with x_lo <= q
        while ei < events.len() && (events[ei].0 < q || (events[ei].0 == q && events[ei].1)) {
            let (_, is_insert, i) = events[ei];
            if is_insert {
                active.insert(i);
            } else {
                active.remove(&i);
            }
            ei += 1;
        }
        // removals with x_hi < q already applied; actives now contain q
        bags.push(active.iter().map(|&i| rects[i].0.clone()).collect());
        qi += 1;
    }
    let pd = PathDecomposition { bags };
    debug_assert!(pd.check(g));
    Ok(pd)
}

/// Proper coloring using at most `k * omega(G)` colors: each vertex is
/// charged to the lowest stab line meeting it; per line the induced graph is
/// an interval graph of the spans, colored greedily with its own palette.
pub fn coloring_from_rep(r: &StabbedRepresentation, g: &Graph) -> Result<BTreeMap<String, usize>> {
    validate_ok(r, g, StabMode::Srig)?;
    let omega = graph::clique_number(g)?;
    let mut per_line: Vec<Vec<(&String, &Rect)>> = vec![Vec::new(); r.k()];
    for (label, rect) in &r.rects {
        let line = *r.stabs_of(rect).first().expect("validated: every rect stabbed");
        per_line[line].push((label, rect));
    }
    let mut colors: BTreeMap<String, usize> = BTreeMap::new();
    for (line, members) in per_line.into_iter().enumerate() {
        let base = line * omega;
        // greedy interval coloring along sorted left edges
        let mut sorted = members;
        sorted.sort_by(|a, b| a.1.x_lo.cmp(&b.1.x_lo).then(a.0.cmp(b.0)));
        let mut right_of_color: Vec<Option<Rational>> = Vec::new();
        for (label, rect) in sorted {
            let mut chosen = None;
            for (c, occupied) in right_of_color.iter().enumerate() {
                if occupied.as_ref().map_or(true, |rr| rr < &rect.x_lo) {
                    chosen = Some(c);
                    break;
                }
            }
            let c = chosen.unwrap_or_else(|| {
                right_of_color.push(None);
                right_of_color.len() - 1
            });
            right_of_color[c] = Some(rect.x_hi.clone());
            colors.insert(label.clone(), base + c);
        }
    }
    // palette bound
    for (_, &c) in &colors {
        debug_assert!(c < r.k() * omega.max(1));
    }
    Ok(colors)
}

/// Interval collection of the vertical extents (used by the oracle side).
pub fn y_projection(r: &StabbedRepresentation) -> IntervalCollection {
    IntervalCollection::new(
        r.rects.values().map(|rect| (rect.y_lo.clone(), rect.y_hi.clone())).collect(),
    )
}

/// SVG export: one rect element per vertex (degenerate rects drawn as lines
/// or dots), one dashed line per stab, labels included. The y-axis is
/// flipped for screen coordinates. `comment` is embedded verbatim.
pub fn to_svg(r: &StabbedRepresentation, comment: &str) -> String {
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for rect in r.rects.values() {
        min_x = min_x.min(to_f64(&rect.x_lo));
        max_x = max_x.max(to_f64(&rect.x_hi));
        min_y = min_y.min(to_f64(&rect.y_lo));
        max_y = max_y.max(to_f64(&rect.y_hi));
    }
    for s in &r.stabs {
        min_y = min_y.min(to_f64(s));
        max_y = max_y.max(to_f64(s));
    }
    if !min_x.is_finite() {
        min_x = 0.0;
        max_x = 1.0;
    }
    if !min_y.is_finite() {
        min_y = 0.0;
        max_y = 1.0;
    }
    let w = (max_x - min_x).max(1e-9);
    let h = (max_y - min_y).max(1e-9);
    let scale = 720.0 / w.max(h);
    let pad = 40.0;
    let width = w * scale + 2.0 * pad;
    let height = h * scale + 2.0 * pad;
    let fx = |x: f64| (x - min_x) * scale + pad;
    let fy = |y: f64| height - ((y - min_y) * scale + pad);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">\n"
    ));
    out.push_str(&format!("<!-- {} -->\n", comment.replace("--", "- -")));
    for s in &r.stabs {
        let y = fy(to_f64(s));
        out.push_str(&format!(
            "<line x1=\"0\" y1=\"{y:.2}\" x2=\"{width:.1}\" y2=\"{y:.2}\" stroke=\"#888\" stroke-dasharray=\"8 6\" stroke-width=\"1\"/>\n"
        ));
    }
    let palette = ["#2a6fb0", "#b04a2a", "#3d8d47", "#8d3d86", "#b08b2a", "#2ab0a4"];
    for (i, (label, rect)) in r.rects.iter().enumerate() {
        let color = palette[i % palette.len()];
        let x0 = fx(to_f64(&rect.x_lo));
        let x1 = fx(to_f64(&rect.x_hi));
        let y0 = fy(to_f64(&rect.y_hi));
        let y1 = fy(to_f64(&rect.y_lo));
        let rw = x1 - x0;
        let rh = y1 - y0;
        if rw < 0.5 && rh < 0.5 {
            out.push_str(&format!(
                "<circle cx=\"{x0:.2}\" cy=\"{y0:.2}\" r=\"2.5\" fill=\"{color}\"/>\n"
            ));
        } else if rw < 0.5 || rh < 0.5 {
            out.push_str(&format!(
                "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y1:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n"
            ));
        } else {
            out.push_str(&format!(
                "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{rw:.2}\" height=\"{rh:.2}\" fill=\"{color}\" fill-opacity=\"0.25\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
            ));
        }
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#222\">{}</text>\n",
            x0 + 2.0,
            y0 + 12.0,
            xml_escape(label)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
